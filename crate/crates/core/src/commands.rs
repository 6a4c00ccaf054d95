//! One function per CLI subcommand. Each returns a [`Report`] (or, for `gen`,
//! edge-list text) so the binary only parses flags and prints.

use std::time::Instant;

use crate::bigmath::{nat_to_rat, Nat};
use crate::bounds::bound_report;
use crate::closed_forms::{
    complete_bipartite_count, complete_graph_count, path_count, rooted_path_count,
    stanley_sum_count_with, DEFAULT_MAX_STANLEY_TERMS,
};
use crate::error::{Error, Result};
use crate::graph::{
    all_labeled_trees, classify, complete_bipartite_graph, complete_graph, path_graph,
    random_tree, Graph, GraphKind,
};
use crate::oracle::{
    count_shellings_dp_with, enumerate_shellings, DEFAULT_MAX_DP_EDGES, HARD_MAX_DP_EDGES,
    MAX_ENUMERATION_EDGES,
};
use crate::report::Report;
use crate::tree::{all_root_counts, tree_count};
use crate::verify::{run_suite, Status, Suite};

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountOptions {
    /// Use the subset DP (and explicit enumeration when small) as the primary
    /// method.
    pub brute: bool,
    pub crosscheck: bool,
    pub max_dp_edges: usize,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            brute: false,
            crosscheck: true,
            max_dp_edges: DEFAULT_MAX_DP_EDGES,
        }
    }
}

/// Counts shellings with the best exact method for the graph's class and
/// cross-checks against the subset DP when it is within the edge guard.
pub fn cmd_count(g: &Graph, opts: CountOptions) -> Result<Report> {
    if opts.max_dp_edges > HARD_MAX_DP_EDGES {
        return Err(Error::GuardExceeded {
            what: "--max-dp-edges",
            limit: HARD_MAX_DP_EDGES as u64,
            actual: opts.max_dp_edges as u64,
        });
    }
    let mut report = Report::new("count", Some(g));
    let class = classify(g);
    if class.kind == GraphKind::Disconnected {
        report.result("count", 0);
        report.result("method", "disconnected");
        return Ok(report);
    }

    // (method, value) in priority order.
    let mut values: Vec<(&str, Nat)> = Vec::new();
    if !opts.brute {
        if let Some(n) = class.complete().filter(|&n| n >= 2) {
            let (v, ms) = timed(|| complete_graph_count(n as u64));
            values.push(("complete", v?));
            report.time("complete", ms);
        }
        if let Some((m, n)) = class.complete_bipartite() {
            let (v, ms) = timed(|| complete_bipartite_count(m as u64, n as u64));
            values.push(("complete_bipartite", v?));
            report.time("complete_bipartite", ms);
        }
        if class.is_tree() {
            let (v, ms) = timed(|| tree_count(g));
            values.push(("tree", v?));
            report.time("tree", ms);
        }
    }

    let within_guard = g.edge_count() <= opts.max_dp_edges;
    let want_dp = values.is_empty() || opts.brute || opts.crosscheck;
    if want_dp && within_guard {
        let (v, ms) = timed(|| count_shellings_dp_with(g, opts.max_dp_edges));
        values.push(("dp", v?));
        report.time("dp", ms);
    } else if values.is_empty() {
        return Err(Error::GuardExceeded {
            what: "edge count for the subset DP (no closed form applies)",
            limit: opts.max_dp_edges as u64,
            actual: g.edge_count() as u64,
        });
    }
    if opts.brute && g.edge_count() <= MAX_ENUMERATION_EDGES {
        let (v, ms) = timed(|| enumerate_shellings(g, 0));
        values.push(("enumeration", Nat::from(v?.total)));
        report.time("enumeration", ms);
    }

    let (primary, count) = values[0].clone();
    report.result("count", &count);
    report.result("method", primary);
    for (method, v) in &values {
        report.result(method, v);
    }
    for (method, v) in &values[1..] {
        report.compare(
            &format!("{primary}_vs_{method}"),
            *v == count,
            format!("{count} vs {v}"),
        );
    }
    if values.len() == 1 {
        let why = if !opts.crosscheck {
            "suppressed by --no-crosscheck"
        } else {
            "edge count exceeds --max-dp-edges"
        };
        report.check("dp_crosscheck", Status::Skipped, why);
    }
    Ok(report)
}

/// Rooted counts at every vertex of a tree and the total.
pub fn cmd_tree_roots(g: &Graph) -> Result<Report> {
    let mut report = Report::new("tree-roots", Some(g));
    let (counts, ms) = timed(|| all_root_counts(g));
    let counts = counts?;
    report.time("root_counts", ms);
    let total = tree_count(g)?;
    let sum: Nat = counts.iter().sum();
    report.result("total", &total);
    report.result("sumRootCounts", &sum);
    report.per_vertex("rootCounts", &counts);
    report.compare(
        "half_sum",
        g.n() == 1 || &total * 2u32 == sum,
        format!("2 * {total} vs {sum}"),
    );
    if g.edge_count() <= DEFAULT_MAX_DP_EDGES {
        let (dp, ms) = timed(|| count_shellings_dp_with(g, DEFAULT_MAX_DP_EDGES));
        let dp = dp?;
        report.time("dp", ms);
        report.result("dp", &dp);
        report.compare("tree_vs_dp", dp == total, format!("{total} vs {dp}"));
    } else {
        report.check("tree_vs_dp", Status::Skipped, "edge count exceeds the DP guard");
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Kn,
    Kmn,
    Stanley,
    Path,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "kn" => Ok(Family::Kn),
            "kmn" => Ok(Family::Kmn),
            "stanley" => Ok(Family::Stanley),
            "path" => Ok(Family::Path),
            _ => Err(Error::Range(format!("unknown family {s:?}"))),
        }
    }
}

fn arity(family: &str, params: &[u64], allowed: &[usize]) -> Result<()> {
    if allowed.contains(&params.len()) {
        Ok(())
    } else {
        Err(Error::Range(format!(
            "{family} takes {allowed:?} parameters, got {}",
            params.len()
        )))
    }
}

/// Closed-form count for a named family. `path n i` gives the count rooted at
/// the `i`-th vertex.
pub fn cmd_formula(family: Family, params: &[u64], max_stanley_terms: Option<u64>) -> Result<Report> {
    let mut report = Report::new("formula", None);
    let start = Instant::now();
    match family {
        Family::Kn => {
            arity("kn", params, &[1])?;
            report.result("family", "kn");
            report.result("count", complete_graph_count(params[0])?);
        }
        Family::Kmn => {
            arity("kmn", params, &[2])?;
            report.result("family", "kmn");
            report.result("count", complete_bipartite_count(params[0], params[1])?);
        }
        Family::Stanley => {
            arity("stanley", params, &[2])?;
            let limit = max_stanley_terms.unwrap_or(DEFAULT_MAX_STANLEY_TERMS);
            let s = stanley_sum_count_with(params[0], params[1], limit)?;
            report.result("family", "stanley");
            report.result("count", &s.count);
            report.result("innerSum", &s.inner_sum);
            report.result("terms", s.terms);
        }
        Family::Path => {
            arity("path", params, &[1, 2])?;
            report.result("family", "path");
            report.result("count", path_count(params[0])?);
            if let Some(&i) = params.get(1) {
                report.result("rootedCount", rooted_path_count(params[0], i)?);
            }
        }
    }
    report.time("formula", start.elapsed().as_secs_f64() * 1e3);
    Ok(report)
}

/// All tree bounds side by side with the exact count.
pub fn cmd_bounds(g: &Graph) -> Result<Report> {
    let mut report = Report::new("bounds", Some(g));
    let (b, ms) = timed(|| bound_report(g));
    let b = b?;
    report.time("bounds", ms);
    let exact = nat_to_rat(&b.exact);
    report.result("exact", &b.exact);
    report.result("degreeLower", &b.degree_lower);
    report.result("degreeEqualityPredicted", b.degree_equality_predicted);
    report.result("diameter", b.diameter);
    report.result("diameterUpperPrinted", &b.diameter_upper_printed);
    report.result("midSpiderExact", &b.mid_spider_exact);
    report.result("midSpiderShape", b.mid_spider_shape);
    report.result("printedVsExtremalGap", &b.printed_vs_extremal_gap);
    report.result(
        "printedVsExtremalRatio",
        &b.diameter_upper_printed / nat_to_rat(&b.mid_spider_exact),
    );
    report.per_vertex("rootCounts", &b.per_root_counts);
    report.per_vertex("weightBoundCoefficients", &b.per_root_weight_bounds);

    report.compare(
        "degree_lower_bound",
        b.degree_lower <= b.exact,
        format!("{} <= {}", b.degree_lower, b.exact),
    );
    report.compare(
        "degree_equality",
        (b.degree_lower == b.exact) == b.degree_equality_predicted,
        format!(
            "equal: {}, predicted: {}",
            b.degree_lower == b.exact,
            b.degree_equality_predicted
        ),
    );
    report.compare(
        "weight_bound",
        b.weight_bounds_hold(),
        "F(T) <= coefficient(v) * F(T_v) at every root",
    );
    report.compare(
        "mid_spider_bound",
        b.exact <= b.mid_spider_exact,
        format!("{} <= {}", b.exact, b.mid_spider_exact),
    );
    report.compare(
        "printed_diameter_bound",
        exact <= b.diameter_upper_printed,
        format!("{} <= {}", b.exact, b.diameter_upper_printed),
    );
    Ok(report)
}

/// Runs a verification suite; the report fails if any check fails.
pub fn cmd_verify(suite: Suite, max_n: Option<usize>) -> Result<Report> {
    let mut report = Report::new("verify", None);
    let (checks, ms) = timed(|| run_suite(suite, max_n));
    let checks = checks?;
    report.time("verify", ms);
    report.result("suite", format!("{suite:?}").to_lowercase());
    report.result("checks", checks.len());
    report.result("failed", checks.iter().filter(|c| !c.passed()).count());
    report.result("cases", checks.iter().map(|c| c.cases).sum::<u64>());
    report.cross_checks = checks.iter().map(Into::into).collect();
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Tree,
    AllTrees,
    Kmn,
    Kn,
    Path,
    MidSpider,
}

impl std::str::FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<GenKind> {
        match s {
            "tree" => Ok(GenKind::Tree),
            "all-trees" => Ok(GenKind::AllTrees),
            "kmn" => Ok(GenKind::Kmn),
            "kn" => Ok(GenKind::Kn),
            "path" => Ok(GenKind::Path),
            "mid-spider" => Ok(GenKind::MidSpider),
            _ => Err(Error::Range(format!("unknown generator {s:?}"))),
        }
    }
}

/// Edge-list text for a generated graph. `all-trees` emits every labeled tree
/// on `n` vertices, each preceded by a `# tree i` comment and separated by a
/// blank line.
pub fn cmd_gen(kind: GenKind, params: &[u64], seed: u64) -> Result<String> {
    let size = |x: u64| x as usize;
    let g = match kind {
        GenKind::Tree => {
            arity("tree", params, &[1])?;
            random_tree(size(params[0]), seed)
        }
        GenKind::AllTrees => {
            arity("all-trees", params, &[1])?;
            let mut out = String::new();
            for (i, g) in all_labeled_trees(size(params[0]))?.enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&format!("# tree {i}\n"));
                out.push_str(&g.to_edge_list());
            }
            return Ok(out);
        }
        GenKind::Kmn => {
            arity("kmn", params, &[2])?;
            if params[0] == 0 || params[1] == 0 {
                return Err(Error::Range("kmn needs both parts nonempty".into()));
            }
            complete_bipartite_graph(size(params[0]), size(params[1]))
        }
        GenKind::Kn => {
            arity("kn", params, &[1])?;
            complete_graph(size(params[0]))
        }
        GenKind::Path => {
            arity("path", params, &[1])?;
            path_graph(size(params[0]))
        }
        GenKind::MidSpider => {
            arity("mid-spider", params, &[2])?;
            crate::bounds::mid_spider(size(params[0]), size(params[1]))?
        }
    };
    Ok(g.to_edge_list())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, parse_edge_list, star_graph};

    fn results(r: &Report, keys: &[(&str, &str)]) {
        for (k, v) in keys {
            assert_eq!(r.results.get(*k).map(String::as_str), Some(*v), "{k} in {:?}", r.results);
        }
    }

    #[test]
    fn count_cycle4() {
        let r = cmd_count(&cycle_graph(4), CountOptions::default()).unwrap();
        results(&r, &[("complete_bipartite", "16"), ("dp", "16"), ("count", "16")]);
        assert!(r.passed());
        assert_eq!(r.cross_checks[0].name, "complete_bipartite_vs_dp");
    }

    #[test]
    fn count_path4() {
        let r = cmd_count(&path_graph(4), CountOptions::default()).unwrap();
        results(&r, &[("tree", "4"), ("dp", "4"), ("count", "4")]);
    }

    #[test]
    fn count_disconnected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let r = cmd_count(&g, CountOptions::default()).unwrap();
        results(&r, &[("count", "0")]);
        assert_eq!(r.input.unwrap().class, "disconnected");
    }

    #[test]
    fn count_brute_agrees() {
        for g in [cycle_graph(5), star_graph(5), complete_graph(4), path_graph(6)] {
            let a = cmd_count(&g, CountOptions::default()).unwrap();
            let b = cmd_count(&g, CountOptions { brute: true, ..Default::default() }).unwrap();
            assert_eq!(a.results["count"], b.results["count"]);
            assert_eq!(b.results["method"], "dp");
            assert!(b.passed());
        }
    }

    #[test]
    fn count_guards() {
        let no_cc = CountOptions { crosscheck: false, ..Default::default() };
        let r = cmd_count(&path_graph(30), no_cc).unwrap();
        assert_eq!(r.cross_checks[0].status, Status::Skipped);
        assert!(!r.results.contains_key("dp"));
        // A 30-cycle has no closed form and too many edges for the DP.
        assert!(cmd_count(&cycle_graph(30), CountOptions::default()).is_err());
        let big = CountOptions { max_dp_edges: 31, ..Default::default() };
        assert!(cmd_count(&cycle_graph(4), big).is_err());
    }

    #[test]
    fn tree_roots_examples() {
        let r = cmd_tree_roots(&path_graph(5)).unwrap();
        assert_eq!(r.per_vertex["rootCounts"], vec!["1", "4", "6", "4", "1"]);
        results(&r, &[("total", "8")]);
        let r = cmd_tree_roots(&star_graph(4)).unwrap();
        assert_eq!(r.per_vertex["rootCounts"], vec!["6", "2", "2", "2"]);
        results(&r, &[("total", "6")]);
        let ds = Graph::from_edges(5, [(0, 1), (0, 2), (1, 3), (1, 4)]).unwrap();
        let r = cmd_tree_roots(&ds).unwrap();
        assert_eq!(r.per_vertex["rootCounts"], vec!["8", "12", "2", "3", "3"]);
        results(&r, &[("total", "14")]);
        assert!(r.passed());
        assert!(cmd_tree_roots(&cycle_graph(4)).is_err());
    }

    #[test]
    fn formula_examples() {
        results(&cmd_formula(Family::Kmn, &[2, 3], None).unwrap(), &[("count", "360")]);
        results(&cmd_formula(Family::Kn, &[4], None).unwrap(), &[("count", "576")]);
        results(
            &cmd_formula(Family::Stanley, &[2, 2], None).unwrap(),
            &[("count", "16"), ("innerSum", "2/3")],
        );
        results(
            &cmd_formula(Family::Path, &[5, 2], None).unwrap(),
            &[("count", "8"), ("rootedCount", "4")],
        );
        assert!(cmd_formula(Family::Kn, &[1], None).is_err());
        assert!(cmd_formula(Family::Kmn, &[2], None).is_err());
        assert!(cmd_formula(Family::Stanley, &[6, 6], Some(10)).is_err());
    }

    #[test]
    fn bounds_examples() {
        let r = cmd_bounds(&star_graph(4)).unwrap();
        results(&r, &[("degreeLower", "6"), ("exact", "6"), ("degreeEqualityPredicted", "true")]);
        let r = cmd_bounds(&path_graph(5)).unwrap();
        results(
            &r,
            &[
                ("exact", "8"),
                ("diameterUpperPrinted", "16"),
                ("midSpiderExact", "8"),
                ("printedVsExtremalGap", "8"),
                ("printedVsExtremalRatio", "2"),
            ],
        );
        let r = cmd_bounds(&random_tree(8, 7)).unwrap();
        assert!(r.passed(), "{:?}", r.cross_checks);
    }

    #[test]
    fn verify_small() {
        let r = cmd_verify(Suite::Trees, Some(5)).unwrap();
        assert!(r.passed());
        assert!(r.cross_checks.iter().all(|c| c.cases > 0));
        assert!(cmd_verify(Suite::Bounds, Some(12)).is_err());
    }

    #[test]
    fn gen_examples() {
        let text = cmd_gen(GenKind::Kmn, &[2, 2], 0).unwrap();
        assert_eq!(text.lines().count(), 5);
        assert_eq!(parse_edge_list(&text).unwrap(), cycle_graph(4).relabel(&[0, 2, 1, 3]));
        let g = parse_edge_list(&cmd_gen(GenKind::MidSpider, &[7, 4], 0).unwrap()).unwrap();
        assert_eq!(g.degree(2), 4);
        assert_eq!(
            cmd_gen(GenKind::Tree, &[10], 42).unwrap(),
            cmd_gen(GenKind::Tree, &[10], 42).unwrap()
        );
        let all = cmd_gen(GenKind::AllTrees, &[4], 0).unwrap();
        assert_eq!(all.matches("# tree").count(), 16);
        assert!(cmd_gen(GenKind::MidSpider, &[4, 4], 0).is_err());
        assert!(cmd_gen(GenKind::Kn, &[], 0).is_err());
    }
}
