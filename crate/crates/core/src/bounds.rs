//! Bounds on tree shelling counts and the tree transforms that drive them
//! toward their extremal shapes.

use num_traits::{One, Zero};

use crate::bigmath::{binomial, factorial, nat_to_rat, rat_to_nat, Nat, Rat};
use crate::error::{Error, Result};
use crate::graph::{classify, tree_diameter, GraphKind, Graph};
use crate::tree::{all_root_counts, root_tree, tree_count, weights};

/// `prod_v d(v)!`, and whether the tree is a path or a star (the shapes where
/// the bound is attained).
pub fn degree_lower_bound(g: &Graph) -> Result<(Nat, bool)> {
    g.require_tree()?;
    if g.n() < 2 {
        return Err(Error::Range("degree bound needs n >= 2".into()));
    }
    let bound = (0..g.n()).fold(Nat::one(), |acc, v| acc * factorial(g.degree(v) as u64));
    let c = classify(g);
    Ok((bound, c.has(&GraphKind::Path) || c.has(&GraphKind::Star)))
}

/// The upper bound on `F(T)` for a tree with `n` vertices and diameter `l`,
/// evaluated exactly as stated for each parity of `l`.
pub fn diameter_upper_bound_printed(n: u64, l: u64) -> Result<Rat> {
    if l < 1 || l + 1 > n {
        return Err(Error::Range(format!(
            "diameter bound needs 1 <= l <= n - 1, got n = {n}, l = {l}"
        )));
    }
    let h = l / 2;
    let value = if l.is_multiple_of(2) {
        let tail: Nat = (0..h).map(|i| binomial(n - 1, i)).sum();
        let bracket = binomial(n - 2, h) + tail;
        nat_to_rat(&(factorial(n - 1 - h) * 2u32 * bracket)) / nat_to_rat(&factorial(h))
    } else {
        let tail: Nat = (0..=h).map(|i| binomial(n - 1, i)).sum();
        let bracket = binomial(n - 2, h) * (n - 1 - l) + tail * n;
        nat_to_rat(&(factorial(n - h - 2) * bracket)) / nat_to_rat(&factorial(h + 1))
    };
    Ok(value)
}

/// Path `0 - 1 - ... - l` with the remaining `n - 1 - l` vertices attached as
/// leaves to vertex `floor(l / 2)`. `l = 1` is accepted only for `n = 2`.
pub fn mid_spider(n: usize, l: usize) -> Result<Graph> {
    let ok = (2 <= l && l < n) || (n == 2 && l == 1);
    if !ok {
        return Err(Error::Range(format!(
            "mid-spider needs 2 <= l <= n - 1, got n = {n}, l = {l}"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (1..=l).map(|i| (i - 1, i)).collect();
    edges.extend((l + 1..n).map(|u| (l / 2, u)));
    Graph::from_edges(n, edges)
}

/// True when the tree has a longest path `v_0 ... v_l` such that every other
/// edge touches `v_{floor(l/2)}`.
pub fn is_mid_spider_shape(g: &Graph) -> Result<bool> {
    g.require_tree()?;
    let branching: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    match branching.as_slice() {
        [] => Ok(true),
        [x] => {
            let mut lens = Vec::new();
            for &w in g.neighbors(*x) {
                let (mut prev, mut cur, mut len) = (*x, w, 1);
                while g.degree(cur) == 2 {
                    let next = g.neighbors(cur).iter().copied().find(|&y| y != prev).unwrap();
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                lens.push(len);
            }
            lens.sort_unstable_by(|a, b| b.cmp(a));
            Ok(lens[0] - lens[1] <= 1 && lens[2..].iter().all(|&k| k == 1))
        }
        _ => Ok(false),
    }
}

/// `sum_{k=0}^{l-1} C(n-2, k)` where `l` is the eccentricity of `v`.
pub fn weight_bound_coefficient(g: &Graph, v: usize) -> Result<Nat> {
    let rt = root_tree(g, v)?;
    let n = g.n() as u64;
    if n < 2 {
        return Ok(Nat::one());
    }
    let l = rt.height()[v] as u64;
    Ok((0..l).map(|k| binomial(n - 2, k)).sum())
}

/// Longest descending path from `v`, taking the smallest child at each step.
pub fn longest_descending_path(g: &Graph, v: usize) -> Result<Vec<usize>> {
    let rt = root_tree(g, v)?;
    let height = rt.height();
    let mut path = vec![v];
    let mut cur = v;
    while height[cur] > 0 {
        cur = rt
            .children(cur)
            .filter(|&c| height[c] + 1 == height[cur])
            .min()
            .unwrap();
        path.push(cur);
    }
    Ok(path)
}

fn rebuild(g: &Graph, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Graph {
    let norm = |(a, b): (usize, usize)| (a.min(b), a.max(b));
    let removed: Vec<_> = remove.iter().copied().map(norm).collect();
    let edges = g
        .edges()
        .iter()
        .copied()
        .filter(|e| !removed.contains(e))
        .chain(add.iter().copied());
    Graph::from_edges(g.n(), edges).expect("transform keeps the graph simple")
}

/// One step of moving a branch away from the root `v`: with `L = v_0 ... v_l`
/// the longest descending path, take the first `i <= l - 2` where `v_i` has a
/// child `v'` off `L` (smallest such child), hang `v'` and its children on
/// `v_{i+1}`. `None` when no such `i` exists.
pub fn push_branch_from_root(g: &Graph, v: usize) -> Result<Option<Graph>> {
    let path = longest_descending_path(g, v)?;
    let rt = root_tree(g, v)?;
    let l = path.len() - 1;
    for i in 0..l.saturating_sub(1) {
        let off = rt.children(path[i]).filter(|&c| c != path[i + 1]).min();
        if let Some(vp) = off {
            let target = path[i + 1];
            let kids: Vec<usize> = rt.children(vp).collect();
            let mut remove = vec![(vp, path[i])];
            let mut add = vec![(vp, target)];
            for c in kids {
                remove.push((c, vp));
                add.push((c, target));
            }
            return Ok(Some(rebuild(g, &remove, &add)));
        }
    }
    Ok(None)
}

/// Hangs every vertex off the longest path `tree_diameter` picks as a leaf on
/// the path vertex it is attached through.
pub fn normalize_caterpillar(g: &Graph) -> Result<Graph> {
    let (_, path) = tree_diameter(g)?;
    let mut anchor = vec![usize::MAX; g.n()];
    let mut stack = Vec::new();
    for &p in &path {
        anchor[p] = p;
        stack.push(p);
    }
    let mut edges: Vec<(usize, usize)> = path.windows(2).map(|w| (w[0], w[1])).collect();
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if anchor[w] == usize::MAX {
                anchor[w] = anchor[u];
                edges.push((anchor[w], w));
                stack.push(w);
            }
        }
    }
    Graph::from_edges(g.n(), edges)
}

/// Spine of a caterpillar (its non-leaf vertices in path order, starting at
/// the end with the smaller id), or `None` if the tree is not a caterpillar.
fn caterpillar_spine(g: &Graph) -> Option<Vec<usize>> {
    let inner: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 2).collect();
    let inner_deg = |v: usize| g.neighbors(v).iter().filter(|&&w| g.degree(w) >= 2).count();
    if inner.iter().any(|&v| inner_deg(v) > 2) {
        return None;
    }
    let start = inner.iter().copied().filter(|&v| inner_deg(v) <= 1).min()?;
    let mut spine = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g
        .neighbors(cur)
        .iter()
        .find(|&&w| w != prev && g.degree(w) >= 2)
    {
        spine.push(next);
        prev = cur;
        cur = next;
    }
    Some(spine)
}

/// One step of pulling pendant edges toward the middle of the longest path.
///
/// A tree that is not a caterpillar is first normalized with
/// [`normalize_caterpillar`], which counts as the step. On a caterpillar with
/// longest path `v_0 ... v_l` the outermost branching vertex below
/// `c = floor(l/2)` hands its pendant leaves to its neighbor toward `c`;
/// failing that, the outermost one above `c` does. `None` at the fixpoint,
/// which has the shape of [`mid_spider`].
pub fn pull_branch_toward_middle(g: &Graph) -> Result<Option<Graph>> {
    g.require_tree()?;
    let Some(spine) = caterpillar_spine(g) else {
        return normalize_caterpillar(g).map(Some);
    };
    if spine.len() < 2 {
        return Ok(None);
    }
    // v_k = spine[k - 1] for 1 <= k <= l - 1.
    let l = spine.len() + 1;
    let c = l / 2;
    let pendants = |k: usize| -> Vec<usize> {
        let mut leaves: Vec<usize> = g
            .neighbors(spine[k - 1])
            .iter()
            .copied()
            .filter(|&w| g.degree(w) == 1)
            .collect();
        // The smallest leaf at an end of the spine stays as the path end.
        if k == 1 || k == l - 1 {
            leaves.remove(0);
        }
        leaves
    };
    let branching: Vec<usize> = (1..l).filter(|&k| !pendants(k).is_empty()).collect();
    let (Some(&i), Some(&j)) = (branching.first(), branching.last()) else {
        return Ok(None);
    };
    let (from, to) = if i < c {
        (i, i + 1)
    } else if j > c {
        (j, j - 1)
    } else {
        return Ok(None);
    };
    let moved = pendants(from);
    let remove: Vec<_> = moved.iter().map(|&u| (spine[from - 1], u)).collect();
    let add: Vec<_> = moved.iter().map(|&u| (spine[to - 1], u)).collect();
    Ok(Some(rebuild(g, &remove, &add)))
}

/// Applies `step` until it reports a fixpoint; returns the fixpoint and the
/// number of steps taken.
pub fn iterate_to_fixpoint(
    g: &Graph,
    mut step: impl FnMut(&Graph) -> Result<Option<Graph>>,
) -> Result<(Graph, usize)> {
    let mut cur = g.clone();
    let mut steps = 0;
    while let Some(next) = step(&cur)? {
        cur = next;
        steps += 1;
        assert!(steps <= cur.n() * cur.n() + 1, "transform did not terminate");
    }
    Ok((cur, steps))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub exact: Nat,
    pub degree_lower: Nat,
    pub degree_equality_predicted: bool,
    pub diameter: usize,
    pub diameter_upper_printed: Rat,
    pub mid_spider_exact: Nat,
    pub mid_spider_shape: bool,
    /// `diameter_upper_printed - mid_spider_exact`.
    pub printed_vs_extremal_gap: Rat,
    pub per_root_counts: Vec<Nat>,
    pub per_root_weight_bounds: Vec<Nat>,
}

impl BoundReport {
    pub fn degree_bound_holds(&self) -> bool {
        self.degree_lower <= self.exact
            && (self.degree_lower == self.exact) == self.degree_equality_predicted
    }

    pub fn weight_bounds_hold(&self) -> bool {
        self.per_root_counts
            .iter()
            .zip(&self.per_root_weight_bounds)
            .all(|(f, k)| self.exact <= f * k)
    }

    pub fn diameter_bound_holds(&self) -> bool {
        nat_to_rat(&self.exact) <= self.diameter_upper_printed
            && self.exact <= self.mid_spider_exact
    }
}

pub fn bound_report(g: &Graph) -> Result<BoundReport> {
    let (degree_lower, degree_equality_predicted) = degree_lower_bound(g)?;
    let exact = tree_count(g)?;
    let (diameter, _) = tree_diameter(g)?;
    let n = g.n();
    let printed = diameter_upper_bound_printed(n as u64, diameter as u64)?;
    let mid_spider_exact = tree_count(&mid_spider(n, diameter)?)?;
    let per_root_counts = all_root_counts(g)?;
    let per_root_weight_bounds = (0..n)
        .map(|v| weight_bound_coefficient(g, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundReport {
        exact,
        degree_lower,
        degree_equality_predicted,
        diameter,
        printed_vs_extremal_gap: &printed - nat_to_rat(&mid_spider_exact),
        diameter_upper_printed: printed,
        mid_spider_exact,
        mid_spider_shape: is_mid_spider_shape(g)?,
        per_root_counts,
        per_root_weight_bounds,
    })
}

/// `sum_u W(u)` for the root `v`.
pub fn weight_sum(g: &Graph, v: usize) -> Result<Rat> {
    Ok(weights(g, v)?.total())
}

/// Path `0 - ... - m` with `d1 - 1` extra leaves on vertex 0 and `d2 - 1` on
/// vertex `m`, so the two ends have degrees `d1` and `d2`.
pub fn double_broom(m: usize, d1: usize, d2: usize) -> Result<Graph> {
    if m < 1 || d1 < 1 || d2 < 1 {
        return Err(Error::Range(format!(
            "double broom needs m, d1, d2 >= 1, got ({m}, {d1}, {d2})"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (1..=m).map(|i| (i - 1, i)).collect();
    let mut next = m + 1;
    for (at, k) in [(0, d1 - 1), (m, d2 - 1)] {
        for _ in 0..k {
            edges.push((at, next));
            next += 1;
        }
    }
    Graph::from_edges(next, edges)
}

/// Two adjacent centers of degrees `d1` and `d2`:
/// `(d1^2 + d2^2 + d1 d2 - d1 - d2) / (d1 d2) * (d1 + d2 - 2)!`.
pub fn double_star_count(d1: u64, d2: u64) -> Result<Nat> {
    if d1 < 1 || d2 < 1 {
        return Err(Error::Range(format!(
            "double star needs degrees >= 1, got ({d1}, {d2})"
        )));
    }
    let num = d1 * d1 + d2 * d2 + d1 * d2 - d1 - d2;
    let total = nat_to_rat(&(factorial(d1 + d2 - 2) * num)) / nat_to_rat(&Nat::from(d1 * d2));
    Ok(rat_to_nat(&total).expect("double star count is integral"))
}

/// `2^(n-1) - 2` for the double broom with end degrees 2 and 3 on `n >= 5`
/// vertices.
pub fn broom_2_3_count(n: u64) -> Result<Nat> {
    if n < 5 {
        return Err(Error::Range(format!("(2,3) broom needs n >= 5, got {n}")));
    }
    Ok((Nat::one() << (n - 1)) - 2u32)
}

/// `6 (2^(n-2) - n + 1)` for the double broom with end degrees 2 and 4 on
/// `n >= 6` vertices.
pub fn broom_2_4_count(n: u64) -> Result<Nat> {
    if n < 6 {
        return Err(Error::Range(format!("(2,4) broom needs n >= 6, got {n}")));
    }
    Ok(((Nat::one() << (n - 2)) + 1u32 - n) * 6u32)
}

/// Desk check on `(n, l)`: the printed diameter bound next to the exact
/// mid-spider count, with their ratio.
pub fn printed_vs_mid_spider(n: usize, l: usize) -> Result<(Rat, Nat, Rat)> {
    let printed = diameter_upper_bound_printed(n as u64, l as u64)?;
    let exact = tree_count(&mid_spider(n, l)?)?;
    if exact.is_zero() {
        return Err(Error::Domain("mid-spider count is zero".into()));
    }
    let ratio = &printed / nat_to_rat(&exact);
    Ok((printed, exact, ratio))
}

/// True when `g` has the shape the lower-bound proof reduces to: a path whose
/// two ends carry pendant leaves and nothing else.
pub fn is_double_broom(g: &Graph) -> bool {
    let Some(spine) = caterpillar_spine(g) else {
        return false;
    };
    spine.len() >= 2
        && spine[1..spine.len() - 1]
            .iter()
            .all(|&v| g.degree(v) == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigmath::rat;
    use crate::graph::{all_labeled_trees, caterpillar, path_graph, star_graph};
    use crate::oracle::count_shellings_dp;
    use crate::tree::hook_count;

    fn nat(x: u64) -> Nat {
        Nat::from(x)
    }

    #[test]
    fn degree_bound_examples() {
        for n in 2..10 {
            let (b, eq) = degree_lower_bound(&path_graph(n)).unwrap();
            assert_eq!(b, Nat::one() << (n - 2));
            assert!(eq);
            let (b, eq) = degree_lower_bound(&star_graph(n)).unwrap();
            assert_eq!(b, factorial(n as u64 - 1));
            assert!(eq);
        }
        let broom = double_broom(2, 2, 3).unwrap();
        assert_eq!(broom.n(), 6);
        let (b, eq) = degree_lower_bound(&broom).unwrap();
        assert_eq!(b, nat(24));
        assert!(!eq);
        assert_eq!(tree_count(&broom).unwrap(), nat(30));
        assert!(degree_lower_bound(&Graph::from_edges(1, []).unwrap()).is_err());
    }

    #[test]
    fn printed_diameter_examples() {
        assert_eq!(diameter_upper_bound_printed(3, 2).unwrap(), rat(4, 1));
        assert_eq!(diameter_upper_bound_printed(5, 4).unwrap(), rat(16, 1));
        assert_eq!(diameter_upper_bound_printed(4, 3).unwrap(), rat(8, 1));
        assert!(diameter_upper_bound_printed(4, 4).is_err());
        assert!(diameter_upper_bound_printed(4, 0).is_err());
    }

    #[test]
    fn printed_vs_exact_gap() {
        let (p, e, r) = printed_vs_mid_spider(3, 2).unwrap();
        assert_eq!((p, e, r), (rat(4, 1), nat(2), rat(2, 1)));
        let (p, e, _) = printed_vs_mid_spider(5, 4).unwrap();
        assert_eq!((p, e), (rat(16, 1), nat(8)));
        let (p, e, _) = printed_vs_mid_spider(4, 3).unwrap();
        assert_eq!((p, e), (rat(8, 1), nat(4)));
    }

    #[test]
    fn mid_spider_shapes() {
        assert_eq!(mid_spider(6, 2).unwrap(), star_graph(6).relabel(&[1, 0, 2, 3, 4, 5]));
        assert_eq!(mid_spider(6, 5).unwrap(), path_graph(6));
        let g = mid_spider(5, 3).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (1, 4), (2, 3)]);
        let g = mid_spider(7, 4).unwrap();
        assert_eq!(g.degree(2), 4);
        assert!(mid_spider(5, 1).is_err());
        assert!(mid_spider(5, 5).is_err());
        assert_eq!(mid_spider(2, 1).unwrap(), path_graph(2));
        for n in 3..9 {
            for l in 2..n {
                assert!(is_mid_spider_shape(&mid_spider(n, l).unwrap()).unwrap());
            }
        }
        // Leaves one step off the middle.
        assert!(!is_mid_spider_shape(&caterpillar(4, &[0, 1])).unwrap());
        assert!(!is_mid_spider_shape(&caterpillar(4, &[0, 1, 0, 1])).unwrap());
    }

    #[test]
    fn weight_coefficient_examples() {
        for n in 3..9 {
            let star = star_graph(n);
            assert_eq!(weight_bound_coefficient(&star, 0).unwrap(), nat(1));
            assert_eq!(
                tree_count(&star).unwrap(),
                hook_count(&root_tree(&star, 0).unwrap())
            );
            let path = path_graph(n);
            let k = weight_bound_coefficient(&path, 0).unwrap();
            assert_eq!(k, Nat::one() << (n - 2));
            assert_eq!(tree_count(&path).unwrap(), k * hook_count(&root_tree(&path, 0).unwrap()));
        }
    }

    #[test]
    fn push_examples() {
        assert_eq!(push_branch_from_root(&star_graph(5), 0).unwrap(), None);
        assert_eq!(push_branch_from_root(&path_graph(5), 0).unwrap(), None);
        // Path 0-1-2-3-4 with leaf 5 on 0: it moves to 1, then 2, then 3.
        let g = caterpillar(4, &[1]);
        let g1 = push_branch_from_root(&g, 0).unwrap().unwrap();
        assert!(g1.edges().contains(&(1, 5)));
        let (fix, steps) = iterate_to_fixpoint(&g, |h| push_branch_from_root(h, 0)).unwrap();
        assert_eq!(steps, 3);
        assert!(fix.edges().contains(&(3, 5)));
        // A branch with children moves as a unit: 6 hangs on 5 hangs on 0.
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let g1 = push_branch_from_root(&g, 0).unwrap().unwrap();
        assert!(g1.edges().contains(&(1, 5)) && g1.edges().contains(&(1, 6)));
        assert_eq!(g1.degree(5), 1);
    }

    #[test]
    fn push_fixpoint_shape() {
        for g in all_labeled_trees(7).unwrap().step_by(13) {
            for v in 0..7 {
                let path = longest_descending_path(&g, v).unwrap();
                let (fix, _) = iterate_to_fixpoint(&g, |h| push_branch_from_root(h, v)).unwrap();
                let l = path.len() - 1;
                let fix_path = longest_descending_path(&fix, v).unwrap();
                assert_eq!(fix_path.len() - 1, l);
                if l >= 1 {
                    let anchor = fix_path[l - 1];
                    for u in (0..7).filter(|u| !fix_path.contains(u)) {
                        assert_eq!(fix.neighbors(u), &[anchor], "{g:?} root {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn pull_examples() {
        assert_eq!(pull_branch_toward_middle(&path_graph(6)).unwrap(), None);
        for (n, l) in [(6, 2), (7, 3), (8, 4), (9, 5)] {
            assert_eq!(pull_branch_toward_middle(&mid_spider(n, l).unwrap()).unwrap(), None);
        }
        // Spider with two leaves at v_1 on a path of length 4.
        let g = caterpillar(4, &[0, 2]);
        let g1 = pull_branch_toward_middle(&g).unwrap().unwrap();
        assert!(g1.edges().contains(&(2, 5)) && g1.edges().contains(&(2, 6)));
        assert!(is_mid_spider_shape(&g1).unwrap());
        assert_eq!(pull_branch_toward_middle(&g1).unwrap(), None);
    }

    #[test]
    fn pull_normalizes_first() {
        // 5 hangs on 2 and 6 hangs on 5: 6 is moved onto 2.
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]).unwrap();
        let g1 = pull_branch_toward_middle(&g).unwrap().unwrap();
        assert!(g1.edges().contains(&(2, 6)));
        assert!(tree_count(&g1).unwrap() >= tree_count(&g).unwrap());
    }

    #[test]
    fn transforms_monotone_n7() {
        for g in all_labeled_trees(7).unwrap() {
            let f = tree_count(&g).unwrap();
            let (l, _) = tree_diameter(&g).unwrap();
            if let Some(h) = pull_branch_toward_middle(&g).unwrap() {
                assert!(tree_count(&h).unwrap() >= f, "{g:?} -> {h:?}");
                assert_eq!(tree_diameter(&h).unwrap().0, l);
            }
            let (fix, _) = iterate_to_fixpoint(&g, pull_branch_toward_middle).unwrap();
            assert!(is_mid_spider_shape(&fix).unwrap());
            assert_eq!(tree_count(&fix).unwrap(), tree_count(&mid_spider(7, l).unwrap()).unwrap());
            for v in 0..7 {
                if let Some(h) = push_branch_from_root(&g, v).unwrap() {
                    assert!(weight_sum(&h, v).unwrap() >= weight_sum(&g, v).unwrap());
                }
            }
        }
    }

    #[test]
    fn bound_report_on_small_trees() {
        for n in 2..=7 {
            for g in all_labeled_trees(n).unwrap() {
                let r = bound_report(&g).unwrap();
                assert!(r.degree_bound_holds(), "{g:?}");
                assert!(r.weight_bounds_hold(), "{g:?}");
                assert!(r.diameter_bound_holds(), "{g:?}");
                assert_eq!(r.mid_spider_shape, r.exact == r.mid_spider_exact, "{g:?}");
            }
        }
    }

    #[test]
    fn double_star_formula() {
        for d1 in 1..6 {
            for d2 in 1..6 {
                let g = double_broom(1, d1, d2).unwrap();
                assert_eq!(
                    double_star_count(d1 as u64, d2 as u64).unwrap(),
                    tree_count(&g).unwrap(),
                    "({d1}, {d2})"
                );
            }
        }
        assert_eq!(double_star_count(2, 3).unwrap(), nat(14));
    }

    #[test]
    fn broom_families() {
        for n in 5..=10 {
            let g = double_broom(n - 4, 2, 3).unwrap();
            assert_eq!(g.n(), n);
            assert_eq!(tree_count(&g).unwrap(), broom_2_3_count(n as u64).unwrap());
            assert_eq!(count_shellings_dp(&g).unwrap(), broom_2_3_count(n as u64).unwrap());
        }
        for n in 6..=10 {
            let g = double_broom(n - 5, 2, 4).unwrap();
            assert_eq!(tree_count(&g).unwrap(), broom_2_4_count(n as u64).unwrap());
            assert_eq!(count_shellings_dp(&g).unwrap(), broom_2_4_count(n as u64).unwrap());
        }
        assert!(is_double_broom(&double_broom(3, 2, 4).unwrap()));
        assert!(!is_double_broom(&star_graph(5)));
    }
}
