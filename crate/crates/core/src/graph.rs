//! Undirected simple graphs in canonical form, the edge-list file format,
//! classification into the families that have shelling formulas, and labeled
//! tree generation through Prüfer sequences.
//!
//! Edge-list format, one item per line (LF or CRLF):
//!
//! ```text
//! # comment
//! n 5        optional header: number of vertices
//! 0 1        an edge between vertices 0 and 1
//! ```
//!
//! Blank lines are ignored. The vertex count is the larger of the header value
//! and one plus the largest id seen, so isolated vertices can only be declared
//! through the header.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted and duplicate-free, so two
/// graphs on the same labels are equal iff their edge lists are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, normalizing edge orientation and order. Rejects
    /// self-loops, duplicates and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut list: Vec<(usize, usize)> = Vec::new();
        let mut seen = HashSet::new();
        for (i, (a, b)) in edges.into_iter().enumerate() {
            if a == b {
                return Err(Error::SelfLoop {
                    line: i + 1,
                    vertex: a,
                });
            }
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange {
                        line: i + 1,
                        vertex: x,
                        n,
                    });
                }
            }
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge {
                    line: i + 1,
                    u: key.0,
                    v: key.1,
                });
            }
            list.push(key);
        }
        list.sort_unstable();
        Ok(Self::from_canonical(n, list))
    }

    fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::BadVertex { vertex: v, n: self.n })
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        bfs(self, 0).dist.iter().all(|&d| d != UNREACHED)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    pub fn require_tree(&self) -> Result<()> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(Error::NotATree)
        }
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabeling by a permutation keeps the graph simple")
    }

    /// Canonical edge-list text: an `n` header followed by one edge per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges)
    }
}

/// Parses the edge-list format described in the module docs.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut max_id: Option<usize> = None;

    for (idx, raw) in text.split('\n').enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw).trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let malformed = |message: &str| Error::Parse {
            line: line_no,
            message: format!("{message}: {line:?}"),
        };
        if tokens[0] == "n" {
            if tokens.len() != 2 {
                return Err(malformed("header must be `n <count>`"));
            }
            if declared.is_some() {
                return Err(malformed("repeated header"));
            }
            let k = tokens[1]
                .parse::<usize>()
                .map_err(|_| malformed("invalid vertex count"))?;
            declared = Some(k);
            continue;
        }
        if tokens.len() != 2 {
            return Err(malformed("expected two vertex ids"));
        }
        let u = tokens[0]
            .parse::<usize>()
            .map_err(|_| malformed("invalid vertex id"))?;
        let v = tokens[1]
            .parse::<usize>()
            .map_err(|_| malformed("invalid vertex id"))?;
        if u == v {
            return Err(Error::SelfLoop {
                line: line_no,
                vertex: u,
            });
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(Error::DuplicateEdge {
                line: line_no,
                u: key.0,
                v: key.1,
            });
        }
        max_id = Some(max_id.map_or(key.1, |m: usize| m.max(key.1)));
        edges.push((key.0, key.1, line_no));
    }

    if let Some(k) = declared {
        if let Some(&(_, v, line)) = edges.iter().find(|e| e.1 >= k) {
            return Err(Error::VertexOutOfRange { line, vertex: v, n: k });
        }
    }
    let n = declared.unwrap_or(0).max(max_id.map_or(0, |m| m + 1));
    let mut list: Vec<(usize, usize)> = edges.into_iter().map(|(u, v, _)| (u, v)).collect();
    list.sort_unstable();
    Ok(Graph::from_canonical(n, list))
}

pub(crate) const UNREACHED: usize = usize::MAX;

pub(crate) struct Bfs {
    pub dist: Vec<usize>,
    pub parent: Vec<usize>,
}

/// BFS over ascending neighbor lists; `parent[src] == src`.
pub(crate) fn bfs(g: &Graph, src: usize) -> Bfs {
    let mut dist = vec![UNREACHED; g.n()];
    let mut parent = vec![UNREACHED; g.n()];
    let mut queue = VecDeque::new();
    dist[src] = 0;
    parent[src] = src;
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHED {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    Bfs { dist, parent }
}

/// Farthest reachable vertex from `src`, smallest id among ties.
fn farthest(b: &Bfs) -> usize {
    let mut best = 0;
    for (v, &d) in b.dist.iter().enumerate() {
        if d != UNREACHED && (b.dist[best] == UNREACHED || d > b.dist[best]) {
            best = v;
        }
    }
    best
}

/// Diameter of a tree and one longest path realizing it, found by double
/// BFS starting at vertex 0 with ties broken toward the smallest id.
pub fn tree_diameter(g: &Graph) -> Result<(usize, Vec<usize>)> {
    g.require_tree()?;
    let a = farthest(&bfs(g, 0));
    let from_a = bfs(g, a);
    let b = farthest(&from_a);
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = from_a.parent[cur];
        path.push(cur);
    }
    path.reverse();
    Ok((from_a.dist[b], path))
}

/// Shape tags reported by [`classify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphKind {
    Complete { n: usize },
    Path,
    Star,
    CompleteBipartite { m: usize, n: usize },
    Tree,
    GeneralConnected,
    Disconnected,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Complete { n } => write!(f, "complete({n})"),
            GraphKind::Path => write!(f, "path"),
            GraphKind::Star => write!(f, "star"),
            GraphKind::CompleteBipartite { m, n } => write!(f, "complete_bipartite({m},{n})"),
            GraphKind::Tree => write!(f, "tree"),
            GraphKind::GeneralConnected => write!(f, "general_connected"),
            GraphKind::Disconnected => write!(f, "disconnected"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    /// Most specific applicable tag; equals `tags[0]`.
    pub kind: GraphKind,
    /// Every applicable tag, most specific first.
    pub tags: Vec<GraphKind>,
    /// The two parts (smaller first) when the graph is complete bipartite.
    pub parts: Option<(Vec<usize>, Vec<usize>)>,
    /// Endpoints when the graph is a path on at least two vertices.
    pub path_ends: Option<(usize, usize)>,
}

impl Classification {
    pub fn has(&self, kind: &GraphKind) -> bool {
        self.tags.contains(kind)
    }

    pub fn is_tree(&self) -> bool {
        self.has(&GraphKind::Tree)
    }

    pub fn complete_bipartite(&self) -> Option<(usize, usize)> {
        self.tags.iter().find_map(|t| match t {
            GraphKind::CompleteBipartite { m, n } => Some((*m, *n)),
            _ => None,
        })
    }

    pub fn complete(&self) -> Option<usize> {
        self.tags.iter().find_map(|t| match t {
            GraphKind::Complete { n } => Some(*n),
            _ => None,
        })
    }
}

fn two_coloring(g: &Graph) -> Option<Vec<u8>> {
    let mut color = vec![u8::MAX; g.n()];
    for s in 0..g.n() {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    stack.push(w);
                } else if color[w] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

pub fn classify(g: &Graph) -> Classification {
    let n = g.n();
    let m = g.edge_count();
    if !g.is_connected() {
        return Classification {
            kind: GraphKind::Disconnected,
            tags: vec![GraphKind::Disconnected],
            parts: None,
            path_ends: None,
        };
    }
    let mut tags = Vec::new();
    let mut parts = None;
    let mut path_ends = None;

    if n >= 1 && m == n * (n - 1) / 2 {
        tags.push(GraphKind::Complete { n });
    }
    let tree = n >= 1 && m == n - 1;
    if tree {
        let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
        if max_deg <= 2 {
            tags.push(GraphKind::Path);
            if n >= 2 {
                let ends: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
                path_ends = Some((ends[0], ends[1]));
            }
        }
        if n >= 2 && max_deg == n - 1 {
            tags.push(GraphKind::Star);
        }
    }
    if n >= 2 {
        if let Some(color) = two_coloring(g) {
            let a: Vec<usize> = (0..n).filter(|&v| color[v] == 0).collect();
            let b: Vec<usize> = (0..n).filter(|&v| color[v] == 1).collect();
            if a.len() * b.len() == m {
                let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
                tags.push(GraphKind::CompleteBipartite {
                    m: small.len(),
                    n: large.len(),
                });
                parts = Some((small, large));
            }
        }
    }
    if tree {
        tags.push(GraphKind::Tree);
    }
    tags.push(GraphKind::GeneralConnected);
    Classification {
        kind: tags[0].clone(),
        tags,
        parts,
        path_ends,
    }
}

/// Decodes a Prüfer sequence into the labeled tree on `n >= 2` vertices by
/// repeatedly joining the smallest leaf not in the remaining sequence.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Range(format!("Prüfer decoding needs n >= 2, got {n}")));
    }
    if seq.len() != n - 2 {
        return Err(Error::Range(format!(
            "Prüfer sequence for n = {n} must have length {}, got {}",
            n - 2,
            seq.len()
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::Range(format!("Prüfer entry {bad} is not in 0..{n}")));
    }
    let mut remaining = vec![0usize; n];
    for &x in seq {
        remaining[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| remaining[v] == 0).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, x));
        remaining[x] -= 1;
        if remaining[x] == 0 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    Graph::from_edges(n, edges)
}

/// Prüfer sequence of a labeled tree on at least two vertices.
pub fn prufer_encode(g: &Graph) -> Result<Vec<usize>> {
    g.require_tree()?;
    let n = g.n();
    if n < 2 {
        return Err(Error::Range("Prüfer encoding needs n >= 2".into()));
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut seq = Vec::with_capacity(n - 2);
    while seq.len() < n - 2 {
        let Reverse(leaf) = leaves.pop().expect("tree has a leaf");
        removed[leaf] = true;
        let nb = *g
            .neighbors(leaf)
            .iter()
            .find(|&&w| !removed[w])
            .expect("leaf has a live neighbor");
        seq.push(nb);
        degree[nb] -= 1;
        if degree[nb] == 1 {
            leaves.push(Reverse(nb));
        }
    }
    Ok(seq)
}

pub const MAX_ENUMERATION_N: usize = 9;

/// Every labeled tree on `n` vertices, in lexicographic order of Prüfer
/// sequence. `n` must be in `1..=9`.
pub fn all_labeled_trees(n: usize) -> Result<LabeledTrees> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::Range(format!(
            "labeled tree enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}"
        )));
    }
    Ok(LabeledTrees {
        n,
        seq: vec![0; n.saturating_sub(2)],
        done: false,
    })
}

pub struct LabeledTrees {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

impl LabeledTrees {
    /// `n^(n-2)`, with one tree for `n = 1`.
    pub fn total(&self) -> u64 {
        if self.n <= 2 {
            1
        } else {
            (self.n as u64).pow(self.n as u32 - 2)
        }
    }
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        let g = if self.n == 1 {
            Graph::from_canonical(1, Vec::new())
        } else {
            prufer_decode(&self.seq, self.n).expect("sequence is in range")
        };
        // Advance like an odometer; the last position moves fastest.
        let mut i = self.seq.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.seq[i] += 1;
            if self.seq[i] < self.n {
                break;
            }
            self.seq[i] = 0;
        }
        Some(g)
    }
}

/// SplitMix64: `state += 0x9E3779B97F4A7C15`, then the output is `state`
/// mixed by two xor-shift-multiply rounds (`>>30, *0xBF58476D1CE4E5B9`,
/// `>>27, *0x94D049BB133111EB`) and a final `^ >>31`.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `0..bound` by rejection of the top partial block.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let limit = u64::MAX - (u64::MAX % bound);
        loop {
            let x = self.next_u64();
            if x < limit {
                return x % bound;
            }
        }
    }
}

/// Uniform random labeled tree: a uniform Prüfer sequence drawn from
/// [`SplitMix64`] seeded with `seed`, entries drawn in order. `n = 0` gives the
/// empty graph.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    match n {
        0 => Graph::from_canonical(0, Vec::new()),
        1 => Graph::from_canonical(1, Vec::new()),
        _ => {
            let mut rng = SplitMix64::new(seed);
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
            prufer_decode(&seq, n).expect("entries are in range")
        }
    }
}

pub fn path_graph(n: usize) -> Graph {
    Graph::from_canonical(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// Star with center 0 and `n - 1` leaves.
pub fn star_graph(n: usize) -> Graph {
    Graph::from_canonical(n, (1..n).map(|i| (0, i)).collect())
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    edges.sort_unstable();
    Graph::from_canonical(n, edges)
}

pub fn complete_graph(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_canonical(n, edges)
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn complete_bipartite_graph(m: usize, n: usize) -> Graph {
    let edges = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))).collect();
    Graph::from_canonical(m + n, edges)
}

/// Path `0 - 1 - ... - (len)` with a chain of pendant leaves: `extra[i]` leaves
/// attached to path vertex `i`. Leaves get ids after the path.
pub fn caterpillar(path_len: usize, extra: &[usize]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..=path_len).map(|i| (i - 1, i)).collect();
    let mut next = path_len + 1;
    for (i, &k) in extra.iter().enumerate() {
        for _ in 0..k {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::from_edges(next, edges).expect("caterpillar is simple")
}
