//! Shelling counts for trees.
//!
//! A shelling of a tree rooted at `v` starts at `v`; the number of them is
//! `n! / prod |T_v(u)|` where `T_v(u)` is the subtree hanging below `u`.
//! Moving the root across an edge changes the count by the ratio of the two
//! sides of that edge, so one hook product seeds the counts at every root.

use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::VecDeque;

use crate::bigmath::{factorial, Nat, Rat};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    pub root: usize,
    /// `parent[root] == root`.
    pub parent: Vec<usize>,
    pub subtree_size: Vec<usize>,
    /// BFS order from the root over ascending neighbor lists.
    pub order: Vec<usize>,
}

impl RootedTree {
    pub fn n(&self) -> usize {
        self.parent.len()
    }

    /// Children of `u`, ascending.
    pub fn children(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.order
            .iter()
            .copied()
            .filter(move |&w| w != self.root && self.parent[w] == u)
    }

    pub fn depth(&self) -> Vec<usize> {
        let mut depth = vec![0; self.n()];
        for &u in &self.order[1..] {
            depth[u] = depth[self.parent[u]] + 1;
        }
        depth
    }

    /// Length of the longest descending path below each vertex.
    pub fn height(&self) -> Vec<usize> {
        let mut height = vec![0; self.n()];
        for &u in self.order.iter().rev() {
            if u != self.root {
                let p = self.parent[u];
                height[p] = height[p].max(height[u] + 1);
            }
        }
        height
    }
}

pub fn root_tree(g: &Graph, v: usize) -> Result<RootedTree> {
    g.require_tree()?;
    g.check_vertex(v)?;
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([v]);
    parent[v] = v;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut subtree_size = vec![1; n];
    for &u in order.iter().rev() {
        if u != v {
            subtree_size[parent[u]] += subtree_size[u];
        }
    }
    Ok(RootedTree {
        root: v,
        parent,
        subtree_size,
        order,
    })
}

/// `n! / prod_u |T_v(u)|`.
pub fn hook_count(rt: &RootedTree) -> Nat {
    let denom = rt
        .subtree_size
        .iter()
        .fold(Nat::one(), |acc, &s| acc * Nat::from(s));
    let (q, r) = factorial(rt.n() as u64).div_rem(&denom);
    assert!(r.is_zero(), "hook product does not divide n!");
    q
}

/// Rooted counts at every vertex, seeded by one hook product at vertex 0.
pub fn all_root_counts(g: &Graph) -> Result<Vec<Nat>> {
    all_root_counts_from(g, 0)
}

/// Same as [`all_root_counts`], seeding the propagation at `seed`. The result
/// does not depend on the seed.
pub fn all_root_counts_from(g: &Graph, seed: usize) -> Result<Vec<Nat>> {
    let rt = root_tree(g, seed)?;
    let n = rt.n();
    let mut counts = vec![Nat::zero(); n];
    counts[seed] = hook_count(&rt);
    for &c in &rt.order[1..] {
        let s = rt.subtree_size[c];
        let (q, r) = (&counts[rt.parent[c]] * Nat::from(s)).div_rem(&Nat::from(n - s));
        assert!(r.is_zero(), "root count ratio is not integral at vertex {c}");
        counts[c] = q;
    }
    Ok(counts)
}

/// `F(T) = (1/2) * sum_v F(T_v)`; a single vertex counts once.
pub fn tree_count(g: &Graph) -> Result<Nat> {
    let counts = all_root_counts(g)?;
    if g.n() == 1 {
        return Ok(Nat::one());
    }
    let sum: Nat = counts.iter().sum();
    let (q, r) = sum.div_rem(&Nat::from(2u32));
    assert!(r.is_zero(), "sum of rooted counts is odd");
    Ok(q)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub root: usize,
    /// `weights[u] = F(T_u) / F(T_root)`.
    pub weights: Vec<Rat>,
}

impl WeightVector {
    pub fn total(&self) -> Rat {
        self.weights.iter().sum()
    }
}

pub fn weights(g: &Graph, v: usize) -> Result<WeightVector> {
    let rt = root_tree(g, v)?;
    let n = rt.n() as i64;
    let mut w = vec![Rat::zero(); rt.n()];
    w[v] = Rat::one();
    for &c in &rt.order[1..] {
        let s = rt.subtree_size[c] as i64;
        w[c] = &w[rt.parent[c]] * Rat::new(s.into(), (n - s).into());
    }
    Ok(WeightVector {
        root: v,
        weights: w,
    })
}
