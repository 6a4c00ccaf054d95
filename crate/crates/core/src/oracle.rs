//! Brute-force shelling counters. These are the ground truth that every
//! formula in the crate is checked against.
//!
//! A shelling is an ordering of the edges in which every prefix spans a
//! connected subgraph. [`SubsetTable`] counts them with a dynamic program over
//! edge subsets: the number of valid orderings of a subset `S` is the sum, over
//! edges `e` whose removal leaves `S` connected, of the count for `S \ {e}`.

use num_traits::{One, Zero};

use crate::bigmath::Nat;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_DP_EDGES: usize = 20;
/// Table cells are `u128`; 30! still fits and 2^30 cells is already far past
/// desk-scale memory.
pub const HARD_MAX_DP_EDGES: usize = 30;
pub const MAX_ENUMERATION_EDGES: usize = 8;

/// Shelling counts for every edge subset of a graph.
///
/// `count(S)` is the number of orderings of the edges in `S` whose prefixes
/// are all connected (zero when `S` is disconnected). For a rooted table the
/// first edge must also touch the root.
#[derive(Clone, Debug)]
pub struct SubsetTable {
    edge_count: usize,
    counts: Vec<u128>,
    connected: Vec<u64>,
}

impl SubsetTable {
    pub fn build(g: &Graph, root: Option<usize>, max_edges: usize) -> Result<SubsetTable> {
        let m = g.edge_count();
        let limit = max_edges.min(HARD_MAX_DP_EDGES);
        if m > limit {
            return Err(Error::GuardExceeded {
                what: "edge count for the subset DP",
                limit: limit as u64,
                actual: m as u64,
            });
        }
        if let Some(v) = root {
            g.check_vertex(v)?;
        }
        if g.n() > 64 {
            // A connected graph with at most 30 edges has at most 31 vertices.
            return Err(Error::GuardExceeded {
                what: "vertex count for the subset DP",
                limit: 64,
                actual: g.n() as u64,
            });
        }
        let ends: Vec<u64> = g
            .edges()
            .iter()
            .map(|&(u, v)| (1u64 << u) | (1u64 << v))
            .collect();
        let root_bit = root.map(|v| 1u64 << v);

        let size = 1usize << m;
        let mut counts = vec![0u128; size];
        let mut verts = vec![0u64; size];
        let mut connected = vec![0u64; size.div_ceil(64)];
        counts[0] = 1;
        set_bit(&mut connected, 0);

        // Numeric order visits every proper subset of S before S.
        for s in 1..size {
            let low = s & s.wrapping_neg();
            let low_edge = low.trailing_zeros() as usize;
            verts[s] = verts[s ^ low] | ends[low_edge];
            if s == low {
                set_bit(&mut connected, s);
                counts[s] = match root_bit {
                    Some(r) if ends[low_edge] & r == 0 => 0,
                    _ => 1,
                };
                continue;
            }
            let mut total = 0u128;
            let mut conn = false;
            let mut rest = s;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let e = bit.trailing_zeros() as usize;
                let prev = s ^ bit;
                if get_bit(&connected, prev) && verts[prev] & ends[e] != 0 {
                    conn = true;
                    total += counts[prev];
                }
            }
            if conn {
                set_bit(&mut connected, s);
            }
            counts[s] = total;
        }
        Ok(SubsetTable {
            edge_count: m,
            counts,
            connected,
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn count(&self, subset: usize) -> Nat {
        Nat::from(self.counts[subset])
    }

    pub fn is_connected(&self, subset: usize) -> bool {
        get_bit(&self.connected, subset)
    }

    pub fn full_set(&self) -> usize {
        (1usize << self.edge_count) - 1
    }

    pub fn full_count(&self) -> Nat {
        self.count(self.full_set())
    }
}

fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn get_bit(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

/// Number of shellings of `g`; 0 when disconnected, 1 for a single vertex.
pub fn count_shellings_dp(g: &Graph) -> Result<Nat> {
    count_shellings_dp_with(g, DEFAULT_MAX_DP_EDGES)
}

pub fn count_shellings_dp_with(g: &Graph, max_edges: usize) -> Result<Nat> {
    if !g.is_connected() {
        return Ok(Nat::zero());
    }
    if g.edge_count() == 0 {
        return Ok(Nat::one());
    }
    Ok(SubsetTable::build(g, None, max_edges)?.full_count())
}

/// Number of shellings whose first edge is incident to `v`.
pub fn count_rooted_shellings_dp(g: &Graph, v: usize) -> Result<Nat> {
    count_rooted_shellings_dp_with(g, v, DEFAULT_MAX_DP_EDGES)
}

pub fn count_rooted_shellings_dp_with(g: &Graph, v: usize, max_edges: usize) -> Result<Nat> {
    g.check_vertex(v)?;
    if !g.is_connected() {
        return Ok(Nat::zero());
    }
    if g.edge_count() == 0 {
        return Ok(Nat::one());
    }
    Ok(SubsetTable::build(g, Some(v), max_edges)?.full_count())
}

/// Explicit shellings as permutations of canonical edge indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// At most `limit` shellings, in lexicographic order.
    pub shellings: Vec<Vec<usize>>,
    /// Number of shellings before truncation.
    pub total: u64,
}

/// Lists every shelling of `g` by backtracking (at most 8 edges).
pub fn enumerate_shellings(g: &Graph, limit: usize) -> Result<Enumeration> {
    let m = g.edge_count();
    if m > MAX_ENUMERATION_EDGES {
        return Err(Error::GuardExceeded {
            what: "edge count for explicit enumeration",
            limit: MAX_ENUMERATION_EDGES as u64,
            actual: m as u64,
        });
    }
    let mut out = Enumeration {
        shellings: Vec::new(),
        total: 0,
    };
    if !g.is_connected() {
        return Ok(out);
    }
    let mut order = Vec::with_capacity(m);
    let mut used = vec![false; m];
    let mut touched = vec![0usize; g.n()];
    extend(g, limit, &mut order, &mut used, &mut touched, &mut out);
    Ok(out)
}

fn extend(
    g: &Graph,
    limit: usize,
    order: &mut Vec<usize>,
    used: &mut [bool],
    touched: &mut [usize],
    out: &mut Enumeration,
) {
    if order.len() == g.edge_count() {
        out.total += 1;
        if out.shellings.len() < limit {
            out.shellings.push(order.clone());
        }
        return;
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if used[e] || (!order.is_empty() && touched[u] == 0 && touched[v] == 0) {
            continue;
        }
        used[e] = true;
        touched[u] += 1;
        touched[v] += 1;
        order.push(e);
        extend(g, limit, order, used, touched, out);
        order.pop();
        touched[u] -= 1;
        touched[v] -= 1;
        used[e] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigmath::factorial;
    use crate::graph::*;
    use proptest::prelude::*;

    fn theta() -> Graph {
        // K4 minus the edge (2, 3).
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn dp_examples() {
        assert_eq!(count_shellings_dp(&complete_graph(3)).unwrap(), Nat::from(6u32));
        assert_eq!(count_shellings_dp(&path_graph(4)).unwrap(), Nat::from(4u32));
        assert_eq!(count_shellings_dp(&cycle_graph(4)).unwrap(), Nat::from(16u32));
    }

    #[test]
    fn dp_conventions() {
        assert_eq!(count_shellings_dp(&path_graph(1)).unwrap(), Nat::one());
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(count_shellings_dp(&two).unwrap(), Nat::zero());
        let isolated = parse_edge_list("n 3\n0 1\n").unwrap();
        assert_eq!(count_shellings_dp(&isolated).unwrap(), Nat::zero());
    }

    #[test]
    fn dp_guard() {
        let big = complete_graph(7); // 21 edges
        assert!(matches!(
            count_shellings_dp(&big).unwrap_err(),
            Error::GuardExceeded { .. }
        ));
        assert!(count_shellings_dp_with(&complete_graph(5), 9).is_err());
        assert!(count_shellings_dp_with(&complete_graph(5), 10).is_ok());
    }

    #[test]
    fn rooted_examples() {
        let p4 = path_graph(4);
        assert_eq!(count_rooted_shellings_dp(&p4, 0).unwrap(), Nat::one());
        assert_eq!(count_rooted_shellings_dp(&p4, 1).unwrap(), Nat::from(3u32));
        for n in 2..8 {
            assert_eq!(
                count_rooted_shellings_dp(&star_graph(n), 0).unwrap(),
                factorial(n as u64 - 1)
            );
        }
        assert!(matches!(
            count_rooted_shellings_dp(&p4, 4).unwrap_err(),
            Error::BadVertex { .. }
        ));
    }

    #[test]
    fn table_connectivity_bits() {
        let g = path_graph(4); // edges (0,1) (1,2) (2,3)
        let t = SubsetTable::build(&g, None, 20).unwrap();
        assert!(t.is_connected(0b011));
        assert!(!t.is_connected(0b101));
        assert_eq!(t.count(0b101), Nat::zero());
        assert_eq!(t.count(0b001), Nat::one());
        assert_eq!(t.count(0), Nat::one());
    }

    #[test]
    fn enumeration_examples() {
        let e = enumerate_shellings(&path_graph(2), usize::MAX).unwrap();
        assert_eq!(e.shellings, vec![vec![0]]);
        let e = enumerate_shellings(&path_graph(3), usize::MAX).unwrap();
        assert_eq!(e.shellings, vec![vec![0, 1], vec![1, 0]]);
        let e = enumerate_shellings(&complete_graph(3), 4).unwrap();
        assert_eq!(e.total, 6);
        assert_eq!(e.shellings.len(), 4);
        assert!(enumerate_shellings(&complete_graph(5), 1).is_err());
    }

    #[test]
    fn enumeration_yields_valid_shellings() {
        let g = theta();
        let e = enumerate_shellings(&g, usize::MAX).unwrap();
        for order in &e.shellings {
            let mut seen = vec![false; g.n()];
            for (k, &idx) in order.iter().enumerate() {
                let (u, v) = g.edges()[idx];
                assert!(k == 0 || seen[u] || seen[v]);
                seen[u] = true;
                seen[v] = true;
            }
        }
    }

    #[test]
    fn enumeration_agrees_with_dp_on_corpus() {
        let mut corpus = vec![theta(), complete_graph(4), complete_bipartite_graph(2, 3)];
        for n in 1..=9 {
            corpus.push(path_graph(n));
            corpus.push(star_graph(n));
        }
        for n in 3..=8 {
            corpus.push(cycle_graph(n));
        }
        for g in corpus {
            let e = enumerate_shellings(&g, 0).unwrap();
            assert_eq!(Nat::from(e.total), count_shellings_dp(&g).unwrap(), "{g}");
        }
    }

    #[test]
    fn rooted_counts_sum_to_twice_total_on_trees() {
        for n in 2..=6 {
            for g in all_labeled_trees(n).unwrap() {
                let sum: Nat = (0..n)
                    .map(|v| count_rooted_shellings_dp(&g, v).unwrap())
                    .sum();
                assert_eq!(sum, count_shellings_dp(&g).unwrap() * 2u32);
            }
        }
    }

    fn permutation(n: usize, seed: u64) -> Vec<usize> {
        let mut rng = SplitMix64::new(seed);
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.below(i as u64 + 1) as usize;
            p.swap(i, j);
        }
        p
    }

    proptest! {
        #[test]
        fn dp_is_invariant_under_relabeling(which in 0usize..5, seed in any::<u64>()) {
            let g = match which {
                0 => theta(),
                1 => complete_graph(4),
                2 => cycle_graph(6),
                3 => random_tree(9, seed ^ 0xABCD),
                _ => complete_bipartite_graph(2, 4),
            };
            let h = g.relabel(&permutation(g.n(), seed));
            prop_assert_eq!(count_shellings_dp(&g).unwrap(), count_shellings_dp(&h).unwrap());
        }
    }
}
