//! Sweep suites: every exact cross-check between independent methods, run over
//! fixed parameter ranges and exhaustive tree enumerations.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bigmath::{nat_to_rat, Nat};
use crate::bounds::{
    broom_2_3_count, broom_2_4_count, degree_lower_bound, diameter_upper_bound_printed,
    double_broom, is_mid_spider_shape, longest_descending_path, mid_spider,
    printed_vs_mid_spider, pull_branch_toward_middle, push_branch_from_root,
    weight_bound_coefficient, weight_sum,
};
use crate::closed_forms::{
    complete_bipartite_count, complete_graph_count, path_count, rooted_path_count,
    stanley_sum_count,
};
use crate::error::{Error, Result};
use crate::graph::{
    all_labeled_trees, complete_bipartite_graph, complete_graph, cycle_graph, path_graph,
    star_graph, tree_diameter, Graph, MAX_ENUMERATION_N,
};
use crate::identities::all_identity_checks;
use crate::oracle::{count_rooted_shellings_dp, count_shellings_dp, enumerate_shellings};
use crate::tree::{all_root_counts, all_root_counts_from, hook_count, root_tree, tree_count};

/// Failure messages kept per check; the failure count is always exact.
const MAX_STORED_FAILURES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Tally for one named cross-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: u64,
    pub failed: u64,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            cases: 0,
            failed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn pass(&mut self) {
        self.cases += 1;
    }

    pub fn fail(&mut self, msg: String) {
        self.cases += 1;
        self.failed += 1;
        if self.failures.len() < MAX_STORED_FAILURES {
            self.failures.push(msg);
        }
    }

    pub fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if ok {
            self.pass()
        } else {
            self.fail(msg())
        }
    }

    pub fn note(&mut self, msg: String) {
        self.notes.push(msg);
    }

    pub fn merge(&mut self, other: Check) {
        self.cases += other.cases;
        self.failed += other.failed;
        let room = MAX_STORED_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn status(&self) -> Status {
        if self.failed > 0 {
            Status::Fail
        } else if self.cases == 0 {
            Status::Skipped
        } else {
            Status::Pass
        }
    }

    pub fn detail(&self) -> String {
        let mut parts = vec![format!("{} cases, {} failed", self.cases, self.failed)];
        parts.extend(self.failures.iter().cloned());
        parts.extend(self.notes.iter().cloned());
        parts.join("; ")
    }
}

/// A fixed set of named checks filled in by one sweep.
#[derive(Clone, Debug)]
pub struct Checks(Vec<Check>);

impl Checks {
    pub fn new(names: &[&str]) -> Self {
        Checks(names.iter().map(|&n| Check::new(n)).collect())
    }

    pub fn get(&mut self, i: usize) -> &mut Check {
        &mut self.0[i]
    }

    fn merge(mut self, other: Checks) -> Checks {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            a.merge(b);
        }
        self
    }

    pub fn into_vec(self) -> Vec<Check> {
        self.0
    }
}

/// Runs `f` on every item in parallel and merges the tallies.
fn par_sweep<T: Sync>(names: &[&str], items: &[T], f: impl Fn(&T, &mut Checks) + Sync) -> Vec<Check> {
    items
        .par_iter()
        .fold(
            || Checks::new(names),
            |mut acc, item| {
                f(item, &mut acc);
                acc
            },
        )
        .reduce(|| Checks::new(names), Checks::merge)
        .into_vec()
}

fn labeled_trees(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(all_labeled_trees(n)?);
    }
    Ok(out)
}

fn check_max_n(max_n: usize) -> Result<()> {
    if max_n > MAX_ENUMERATION_N {
        return Err(Error::GuardExceeded {
            what: "tree size for exhaustive sweeps",
            limit: MAX_ENUMERATION_N as u64,
            actual: max_n as u64,
        });
    }
    Ok(())
}

pub const DEFAULT_TREES_MAX_N: usize = 7;
pub const DEFAULT_BOUNDS_MAX_N: usize = 8;
pub const PATH_ANCHOR_MAX_N: u64 = 20;

/// Hook products, root-count propagation and totals against the subset DP on
/// every labeled tree with `n <= max_n`, plus path anchors up to 20 vertices.
pub fn tree_checks(max_n: usize) -> Result<Vec<Check>> {
    check_max_n(max_n)?;
    let trees = labeled_trees(1, max_n)?;
    let mut checks = par_sweep(
        &["hook_vs_dp", "root_counts_vs_hook", "tree_count_vs_dp", "root_seed_independent", "edge_ratio"],
        &trees,
        |g, c| {
            let n = g.n();
            let counts = all_root_counts(g).unwrap();
            for v in 0..n {
                let hook = hook_count(&root_tree(g, v).unwrap());
                let dp = count_rooted_shellings_dp(g, v).unwrap();
                c.get(0).expect(hook == dp, || format!("{g:?} root {v}: hook {hook}, dp {dp}"));
                c.get(1).expect(counts[v] == hook, || format!("{g:?} root {v}"));
            }
            let total = tree_count(g).unwrap();
            let dp = count_shellings_dp(g).unwrap();
            c.get(2).expect(total == dp, || format!("{g:?}: tree {total}, dp {dp}"));
            for seed in [n / 2, n - 1] {
                c.get(3).expect(all_root_counts_from(g, seed).unwrap() == counts, || {
                    format!("{g:?} seed {seed}")
                });
            }
            let rt = root_tree(g, 0).unwrap();
            for &u in &rt.order[1..] {
                let s = rt.subtree_size[u];
                let p = rt.parent[u];
                c.get(4).expect(&counts[u] * Nat::from(n - s) == &counts[p] * Nat::from(s), || {
                    format!("{g:?} edge ({p}, {u})")
                });
            }
        },
    );

    let mut anchors = Check::new("path_anchors");
    for n in 2..=PATH_ANCHOR_MAX_N {
        let g = path_graph(n as usize);
        let total = tree_count(&g)?;
        anchors.expect(total == path_count(n)?, || format!("path {n}: {total}"));
        let counts = all_root_counts(&g)?;
        for i in 1..=n {
            let expected = rooted_path_count(n, i)?;
            anchors.expect(counts[(i - 1) as usize] == expected, || format!("path {n} root {i}"));
        }
    }
    checks.push(anchors);
    Ok(checks)
}

pub const BIPARTITE_DP_MAX_EDGES: usize = 16;
pub const STANLEY_MAX: u64 = 5;
pub const COMPLETE_DP_MAX_N: u64 = 5;

/// Closed forms for `K_{m,n}` and `K_n` against the DP and the 0/1-sequence sum.
pub fn bipartite_checks() -> Result<Vec<Check>> {
    let pairs: Vec<(u64, u64)> = (1..=BIPARTITE_DP_MAX_EDGES as u64)
        .flat_map(|m| (m..=BIPARTITE_DP_MAX_EDGES as u64).map(move |n| (m, n)))
        .filter(|&(m, n)| m * n <= BIPARTITE_DP_MAX_EDGES as u64)
        .collect();
    let mut checks = par_sweep(&["kmn_vs_dp"], &pairs, |&(m, n), c| {
        let formula = complete_bipartite_count(m, n).unwrap();
        let dp = count_shellings_dp(&complete_bipartite_graph(m as usize, n as usize)).unwrap();
        c.get(0).expect(formula == dp, || format!("K({m},{n}): formula {formula}, dp {dp}"));
    });

    let mut stanley = Check::new("kmn_vs_stanley");
    for m in 1..=STANLEY_MAX {
        for n in m..=STANLEY_MAX {
            let s = stanley_sum_count(m, n)?.count;
            let f = complete_bipartite_count(m, n)?;
            stanley.expect(s == f, || format!("K({m},{n}): sum {s}, formula {f}"));
        }
    }
    checks.push(stanley);

    let mut kn = Check::new("kn_vs_dp");
    for n in 2..=COMPLETE_DP_MAX_N {
        let f = complete_graph_count(n)?;
        let dp = count_shellings_dp(&complete_graph(n as usize))?;
        kn.expect(f == dp, || format!("K{n}: formula {f}, dp {dp}"));
    }
    checks.push(kn);
    Ok(checks)
}

/// Desk pins for the printed diameter bound against the exact mid-spider
/// count: `(n, l, printed, exact)`.
pub const PRINTED_BOUND_PINS: [(usize, usize, u64, u64); 3] = [(3, 2, 4, 2), (5, 4, 16, 8), (4, 3, 8, 4)];

pub const BROOM_MAX_N: u64 = 10;

/// Degree, weight and diameter bounds and transform monotonicity on every
/// labeled tree with `2 <= n <= max_n`.
pub fn bound_checks(max_n: usize) -> Result<Vec<Check>> {
    check_max_n(max_n)?;
    let trees = labeled_trees(2, max_n)?;
    // tree_count(mid_spider(n, l)) indexed by [n][l].
    let spider: Vec<Vec<Option<Nat>>> = (0..=max_n)
        .map(|n| {
            (0..n.max(1))
                .map(|l| mid_spider(n, l).ok().map(|g| tree_count(&g).unwrap()))
                .collect()
        })
        .collect();

    let mut checks = par_sweep(
        &[
            "degree_lower_bound",
            "degree_equality_iff_path_or_star",
            "weight_bound",
            "push_preserves_shape",
            "push_weight_monotone",
            "pull_count_monotone",
            "mid_spider_bound",
            "mid_spider_equality_iff_shape",
            "printed_diameter_bound",
        ],
        &trees,
        |g, c| {
            let n = g.n();
            let exact = tree_count(g).unwrap();
            let (lower, predicted) = degree_lower_bound(g).unwrap();
            c.get(0).expect(lower <= exact, || format!("{g:?}: {lower} > {exact}"));
            c.get(1).expect((lower == exact) == predicted, || format!("{g:?}"));

            let counts = all_root_counts(g).unwrap();
            for v in 0..n {
                let k = weight_bound_coefficient(g, v).unwrap();
                c.get(2).expect(exact <= &k * &counts[v], || format!("{g:?} root {v}"));

                if let Some(h) = push_branch_from_root(g, v).unwrap() {
                    let l0 = longest_descending_path(g, v).unwrap().len();
                    let l1 = longest_descending_path(&h, v).unwrap().len();
                    c.get(3).expect(h.n() == n && h.is_tree() && l0 == l1, || {
                        format!("{g:?} root {v} -> {h:?}")
                    });
                    let (w0, w1) = (weight_sum(g, v).unwrap(), weight_sum(&h, v).unwrap());
                    c.get(4).expect(w1 >= w0, || format!("{g:?} root {v}: {w0} -> {w1}"));
                }
            }

            if let Some(h) = pull_branch_toward_middle(g).unwrap() {
                let after = tree_count(&h).unwrap();
                c.get(5).expect(after >= exact, || format!("{g:?} -> {h:?}: {exact} -> {after}"));
            }

            let (l, _) = tree_diameter(g).unwrap();
            let best = spider[n][l].as_ref().unwrap();
            c.get(6).expect(exact <= *best, || format!("{g:?}: {exact} > {best}"));
            let shape = is_mid_spider_shape(g).unwrap();
            c.get(7).expect(shape == (exact == *best), || format!("{g:?}: shape {shape}"));
            let printed = diameter_upper_bound_printed(n as u64, l as u64).unwrap();
            c.get(8).expect(nat_to_rat(&exact) <= printed, || format!("{g:?}: {exact} > {printed}"));
        },
    );

    let mut pins = Check::new("printed_vs_mid_spider_pins");
    for &(n, l, printed, exact) in &PRINTED_BOUND_PINS {
        let (p, e, r) = printed_vs_mid_spider(n, l)?;
        pins.expect(p == nat_to_rat(&Nat::from(printed)) && e == Nat::from(exact), || {
            format!("(n={n}, l={l}): printed {p}, mid-spider {e}")
        });
        pins.note(format!("(n={n}, l={l}) printed {p} vs mid-spider {e}, ratio {r}"));
    }
    for n in 3..=max_n {
        for l in 2..n {
            let (p, e, r) = printed_vs_mid_spider(n, l)?;
            pins.note(format!("(n={n}, l={l}) printed {p} vs mid-spider {e}, ratio {r}"));
        }
    }
    checks.push(pins);

    let mut brooms = Check::new("double_broom_families");
    for n in 5..=BROOM_MAX_N {
        let g = double_broom(n as usize - 4, 2, 3)?;
        let (f, formula) = (tree_count(&g)?, broom_2_3_count(n)?);
        brooms.expect(f == formula, || format!("(2,3) n={n}: {f} vs {formula}"));
        if n >= 6 {
            let g = double_broom(n as usize - 5, 2, 4)?;
            let (f, formula) = (tree_count(&g)?, broom_2_4_count(n)?);
            brooms.expect(f == formula, || format!("(2,4) n={n}: {f} vs {formula}"));
        }
    }
    checks.push(brooms);
    Ok(checks)
}

/// Small graphs with at most 8 edges, including non-trees that are neither
/// complete nor complete bipartite.
pub fn oracle_corpus() -> Vec<(&'static str, Graph)> {
    let g = |n, e: &[(usize, usize)]| Graph::from_edges(n, e.iter().copied()).unwrap();
    vec![
        ("single_edge", path_graph(2)),
        ("path5", path_graph(5)),
        ("star6", star_graph(6)),
        ("triangle", complete_graph(3)),
        ("cycle5", cycle_graph(5)),
        ("cycle8", cycle_graph(8)),
        ("k4", complete_graph(4)),
        ("k4_minus_edge", g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])),
        ("theta_222", g(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])),
        ("k23", complete_bipartite_graph(2, 3)),
        ("bowtie", g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])),
        ("house", g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)])),
        ("wheel5", g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)])),
        ("triangle_tail", g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])),
    ]
}

/// Explicit enumeration against the subset DP on [`oracle_corpus`].
pub fn oracle_checks() -> Result<Vec<Check>> {
    let mut check = Check::new("enumeration_vs_dp");
    for (name, g) in oracle_corpus() {
        let listed = enumerate_shellings(&g, 0)?.total;
        let dp = count_shellings_dp(&g)?;
        check.expect(dp == Nat::from(listed), || format!("{name}: enumerated {listed}, dp {dp}"));
    }
    Ok(vec![check])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Trees,
    Bipartite,
    Bounds,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "identities" => Ok(Suite::Identities),
            "trees" => Ok(Suite::Trees),
            "bipartite" => Ok(Suite::Bipartite),
            "bounds" => Ok(Suite::Bounds),
            "all" => Ok(Suite::All),
            _ => Err(Error::Range(format!("unknown suite {s:?}"))),
        }
    }
}

/// Runs a suite. `max_n` overrides the exhaustive tree size (7 for trees, 8
/// for bounds by default).
pub fn run_suite(suite: Suite, max_n: Option<usize>) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Identities | Suite::All) {
        out.extend(all_identity_checks());
    }
    if matches!(suite, Suite::Trees | Suite::All) {
        out.extend(tree_checks(max_n.unwrap_or(DEFAULT_TREES_MAX_N))?);
    }
    if matches!(suite, Suite::Bipartite | Suite::All) {
        out.extend(bipartite_checks()?);
    }
    if matches!(suite, Suite::Bounds | Suite::All) {
        out.extend(bound_checks(max_n.unwrap_or(DEFAULT_BOUNDS_MAX_N))?);
    }
    if suite == Suite::All {
        out.extend(oracle_checks()?);
    }
    Ok(out)
}

/// Number of labeled trees on at most `max_n` vertices.
pub fn labeled_tree_total(max_n: usize) -> Nat {
    (1..=max_n as u64)
        .map(|n| if n <= 2 { Nat::from(1u32) } else { Nat::from(n).pow(n as u32 - 2) })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_tally() {
        let mut a = Check::new("a");
        assert_eq!(a.status(), Status::Skipped);
        a.pass();
        assert_eq!(a.status(), Status::Pass);
        let mut b = Check::new("a");
        for i in 0..15 {
            b.fail(format!("f{i}"));
        }
        a.merge(b);
        assert_eq!((a.cases, a.failed, a.failures.len()), (16, 15, MAX_STORED_FAILURES));
        assert_eq!(a.status(), Status::Fail);
        assert!(a.detail().starts_with("16 cases, 15 failed"));
    }

    #[test]
    fn suite_names() {
        assert_eq!("bounds".parse::<Suite>().unwrap(), Suite::Bounds);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn tree_total() {
        assert_eq!(labeled_tree_total(7), Nat::from(1u32 + 1 + 3 + 16 + 125 + 1296 + 16807));
    }

    #[test]
    fn small_suites_pass() {
        for c in tree_checks(5).unwrap() {
            assert!(c.passed(), "{c:?}");
        }
        for c in bound_checks(6).unwrap() {
            assert!(c.passed(), "{c:?}");
        }
        for c in oracle_checks().unwrap() {
            assert!(c.passed(), "{c:?}");
        }
        assert!(tree_checks(10).is_err());
    }

    #[test]
    fn corpus_within_enumeration_limit() {
        for (name, g) in oracle_corpus() {
            assert!(g.edge_count() <= 8, "{name}");
            assert!(g.is_connected(), "{name}");
        }
    }
}
