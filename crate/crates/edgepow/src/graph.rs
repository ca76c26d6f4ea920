//! Finite simple graphs on labeled vertices, with the independence-structure
//! operations the classification criteria need: maximal independent sets,
//! localizations at edges and vertices, unmixedness, bipartite structure, and
//! exhaustive enumeration of small labeled graphs.
//!
//! Vertices are positive integer labels. Top-level graphs live on `1..=n`;
//! localizations are induced subgraphs that keep their original labels, so a
//! graph may live on any finite label set.

use itertools::Either;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// Default upper bound on `n` for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("{0} {1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("enumeration over {n} vertices exceeds the cap {cap}")]
    EnumerationCap { n: usize, cap: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Simple undirected graph on an explicit set of labeled vertices.
///
/// Edges are stored normalized (`u < v`) with set semantics; adjacency lists
/// are precomputed and sorted so every traversal is deterministic.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Graph {
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adj: BTreeMap<usize, Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}
impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vertices.hash(state);
        self.edges.hash(state);
    }
}

impl Graph {
    /// Graph on vertices `1..=n` with the given edges.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let vertices: BTreeSet<usize> = (1..=n).collect();
        Graph::on_vertices(vertices, edges)
    }

    /// Graph on an arbitrary label set. Edge endpoints must be vertices.
    pub fn on_vertices(
        vertices: BTreeSet<usize>,
        edges: &[(usize, usize)],
    ) -> Result<Graph, GraphError> {
        let mut norm = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            for w in [u, v] {
                if !vertices.contains(&w) {
                    return Err(GraphError::UnknownVertex(w));
                }
            }
            norm.insert((u.min(v), u.max(v)));
        }
        let mut adj: BTreeMap<usize, Vec<usize>> =
            vertices.iter().map(|&v| (v, Vec::new())).collect();
        for &(u, v) in &norm {
            adj.get_mut(&u).unwrap().push(v);
            adj.get_mut(&v).unwrap().push(u);
        }
        // BTreeSet iteration already yields sorted neighbor lists.
        Ok(Graph {
            vertices: vertices.into_iter().collect(),
            edges: norm.into_iter().collect(),
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Open neighborhood `N(u)`, sorted. Panics if `u` is not a vertex.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        self.adj
            .get(&u)
            .unwrap_or_else(|| panic!("vertex {u} is not in the graph"))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors(u).len()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.values().any(|ns| ns.is_empty())
    }

    /// Induced subgraph on `keep`, labels preserved.
    pub fn induced(&self, keep: &BTreeSet<usize>) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|(u, v)| keep.contains(u) && keep.contains(v))
            .copied()
            .collect();
        let verts: BTreeSet<usize> = self
            .vertices
            .iter()
            .filter(|v| keep.contains(v))
            .copied()
            .collect();
        Graph::on_vertices(verts, &edges).expect("induced subgraph is always valid")
    }

    /// `G_pq`: induced subgraph on `V(G) \ (N(p) ∪ N(q))`.
    ///
    /// Panics unless `pq` is an edge. Note `p ∈ N(q)` and `q ∈ N(p)`, so both
    /// endpoints are removed as well.
    pub fn localize_edge(&self, p: usize, q: usize) -> Graph {
        assert!(
            self.has_edge(p, q),
            "localize_edge requires an edge, got {p} {q}"
        );
        let mut drop: BTreeSet<usize> = self.neighbors(p).iter().copied().collect();
        drop.extend(self.neighbors(q).iter().copied());
        let keep: BTreeSet<usize> = self
            .vertices
            .iter()
            .filter(|v| !drop.contains(v))
            .copied()
            .collect();
        self.induced(&keep)
    }

    /// `G_i`: induced subgraph on `V(G) \ ({i} ∪ N(i))`.
    pub fn localize_vertex(&self, i: usize) -> Graph {
        assert!(self.has_vertex(i), "vertex {i} is not in the graph");
        let mut drop: BTreeSet<usize> = self.neighbors(i).iter().copied().collect();
        drop.insert(i);
        let keep: BTreeSet<usize> = self
            .vertices
            .iter()
            .filter(|v| !drop.contains(v))
            .copied()
            .collect();
        self.induced(&keep)
    }

    /// All inclusion-maximal independent sets, in lexicographic order.
    ///
    /// For the empty graph this is `[[]]`: the empty set is the unique
    /// maximal independent set. Uses Bron-Kerbosch with pivoting on the
    /// complement graph (maximal independent sets of `G` are maximal cliques
    /// of the complement). Supports up to 64 vertices.
    pub fn maximal_independent_sets(&self) -> Vec<Vec<usize>> {
        let k = self.vertices.len();
        assert!(k <= 64, "maximal_independent_sets supports at most 64 vertices");
        // Complement adjacency over index space 0..k.
        let mut non_adj = vec![0u64; k];
        for (i, &u) in self.vertices.iter().enumerate() {
            for (j, &v) in self.vertices.iter().enumerate() {
                if i != j && !self.has_edge(u, v) {
                    non_adj[i] |= 1 << j;
                }
            }
        }
        let mut out = Vec::new();
        let mut r = Vec::new();
        let p: u64 = if k == 64 { !0 } else { (1u64 << k) - 1 };
        bron_kerbosch(&mut r, p, 0, &non_adj, &mut out);
        let mut sets: Vec<Vec<usize>> = out
            .into_iter()
            .map(|idxs| {
                let mut s: Vec<usize> = idxs.iter().map(|&i| self.vertices[i]).collect();
                s.sort_unstable();
                s
            })
            .collect();
        sets.sort();
        sets
    }

    /// Independence number `α(G)`; zero exactly when the graph has no vertices.
    pub fn alpha(&self) -> usize {
        self.maximal_independent_sets()
            .iter()
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    /// True iff all maximal independent sets have cardinality `α(G)`.
    pub fn is_unmixed(&self) -> bool {
        let sets = self.maximal_independent_sets();
        let mut lens = sets.iter().map(|s| s.len());
        match lens.next() {
            None => true,
            Some(first) => lens.all(|l| l == first),
        }
    }

    pub fn has_triangle(&self) -> bool {
        self.find_triangle().is_some()
    }

    /// First triangle in edge order, as a sorted vertex triple.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for &(u, v) in &self.edges {
            if let Some(w) = sorted_first_common(self.neighbors(u), self.neighbors(v)) {
                let mut t = [u, v, w];
                t.sort_unstable();
                return Some(t);
            }
        }
        None
    }

    /// Two-coloring `(X, Y)` if the graph is bipartite, else `None`.
    ///
    /// Deterministic: components are explored from their lowest vertex, which
    /// is placed in `X`. Both sides come back sorted.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let coloring = self.two_color()?;
        let mut x = Vec::new();
        let mut y = Vec::new();
        for &v in &self.vertices {
            if coloring[&v] == 0 {
                x.push(v);
            } else {
                y.push(v);
            }
        }
        Some((x, y))
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_color().is_some()
    }

    /// BFS 2-coloring; color 0 goes to the lowest vertex of each component.
    fn two_color(&self) -> Option<BTreeMap<usize, u8>> {
        let mut color: BTreeMap<usize, u8> = BTreeMap::new();
        for &start in &self.vertices {
            if color.contains_key(&start) {
                continue;
            }
            color.insert(start, 0);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[&u];
                for &w in self.neighbors(u) {
                    match color.get(&w) {
                        None => {
                            color.insert(w, 1 - cu);
                            queue.push_back(w);
                        }
                        Some(&cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color)
    }

    /// Connected components, each reported with its own 2-coloring when
    /// bipartite (used to enumerate all bipartitions).
    fn components_with_coloring(&self) -> Option<Vec<(Vec<usize>, Vec<usize>)>> {
        let coloring = self.two_color()?;
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut comps = Vec::new();
        for &start in &self.vertices {
            if seen.contains(&start) {
                continue;
            }
            let mut stack = vec![start];
            let mut side0 = Vec::new();
            let mut side1 = Vec::new();
            seen.insert(start);
            while let Some(u) = stack.pop() {
                if coloring[&u] == coloring[&start] {
                    side0.push(u);
                } else {
                    side1.push(u);
                }
                for &w in self.neighbors(u) {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            side0.sort_unstable();
            side1.sort_unstable();
            comps.push((side0, side1));
        }
        Some(comps)
    }

    /// Decides the Herzog-Hibi ladder condition for bipartite graphs: is
    /// there a bipartition `(V1, V2)` with `|V1| = |V2| = m` and orderings
    /// `x_1..x_m` of `V1`, `y_1..y_m` of `V2` such that
    ///
    /// 1. `x_i y_i` is an edge for all `i`,
    /// 2. `x_i y_j` an edge implies `i <= j`,
    /// 3. `x_i y_j` and `x_j y_k` edges with `i < j < k` imply `x_i y_k` is
    ///    an edge.
    ///
    /// The search tries every per-component side assignment and every pair of
    /// orderings; factorial in `m`, intended for desk-scale graphs.
    pub fn is_herzog_hibi(&self) -> Result<bool, GraphError> {
        use itertools::Itertools;
        let comps = self
            .components_with_coloring()
            .ok_or(GraphError::NotBipartite)?;
        let c = comps.len();
        for mask in 0u64..(1 << c) {
            let mut v1 = Vec::new();
            let mut v2 = Vec::new();
            for (i, (a, b)) in comps.iter().enumerate() {
                if mask >> i & 1 == 0 {
                    v1.extend_from_slice(a);
                    v2.extend_from_slice(b);
                } else {
                    v1.extend_from_slice(b);
                    v2.extend_from_slice(a);
                }
            }
            if v1.len() != v2.len() {
                continue;
            }
            let m = v1.len();
            if m == 0 {
                return Ok(true);
            }
            for xs in v1.iter().copied().permutations(m) {
                // Condition 1 forces y_i adjacent to x_i; prune orderings of
                // V2 whose i-th entry is not a neighbor of x_i.
                for ys in v2.iter().copied().permutations(m) {
                    if self.herzog_hibi_conditions(&xs, &ys) {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    }

    #[allow(clippy::needless_range_loop)] // paired indexing into xs and ys
    fn herzog_hibi_conditions(&self, xs: &[usize], ys: &[usize]) -> bool {
        let m = xs.len();
        for i in 0..m {
            if !self.has_edge(xs[i], ys[i]) {
                return false;
            }
        }
        for i in 0..m {
            for j in 0..i {
                // An edge x_i y_j with j < i violates condition 2.
                if self.has_edge(xs[i], ys[j]) {
                    return false;
                }
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                if !self.has_edge(xs[i], ys[j]) {
                    continue;
                }
                for k in j + 1..m {
                    if self.has_edge(xs[j], ys[k]) && !self.has_edge(xs[i], ys[k]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Parses the graph text format: a header line `n <count>`, then one edge
    /// `u v` per line. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut toks = line.split_whitespace();
            if n.is_none() {
                if toks.next() != Some("n") {
                    return Err(GraphError::Parse {
                        line: idx + 1,
                        msg: "expected header line `n <count>`".into(),
                    });
                }
                let count = toks
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| GraphError::Parse {
                        line: idx + 1,
                        msg: "expected vertex count after `n`".into(),
                    })?;
                if toks.next().is_some() {
                    return Err(GraphError::Parse {
                        line: idx + 1,
                        msg: "trailing tokens after header".into(),
                    });
                }
                n = Some(count);
                continue;
            }
            let parse_vertex = |t: Option<&str>| -> Result<usize, GraphError> {
                t.and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| GraphError::Parse {
                        line: idx + 1,
                        msg: "expected edge line `u v`".into(),
                    })
            };
            let u = parse_vertex(toks.next())?;
            let v = parse_vertex(toks.next())?;
            if toks.next().is_some() {
                return Err(GraphError::Parse {
                    line: idx + 1,
                    msg: "trailing tokens after edge".into(),
                });
            }
            edges.push((u, v));
        }
        let n = n.ok_or(GraphError::Parse {
            line: 0,
            msg: "missing header line `n <count>`".into(),
        })?;
        for &(u, v) in &edges {
            if u == 0 || u > n || v == 0 || v > n {
                Err(GraphError::Parse {
                    line: 0,
                    msg: format!("edge {u} {v} out of range 1..={n}"),
                })?;
            }
        }
        Graph::new(n, &edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Display only round-trips graphs on 1..=n, which is what the text
        // format describes.
        let n = self.vertices.last().copied().unwrap_or(0);
        writeln!(f, "n {n}")?;
        for &(u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

fn sorted_first_common(a: &[usize], b: &[usize]) -> Option<usize> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return Some(a[i]),
        }
    }
    None
}

fn bron_kerbosch(r: &mut Vec<usize>, p: u64, x: u64, adj: &[u64], out: &mut Vec<Vec<usize>>) {
    if p == 0 && x == 0 {
        out.push(r.clone());
        return;
    }
    // Pivot on the candidate dominating the most of P.
    let mut pivot = usize::MAX;
    let mut best = -1i64;
    let mut scan = p | x;
    while scan != 0 {
        let u = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let score = (p & adj[u]).count_ones() as i64;
        if score > best {
            best = score;
            pivot = u;
        }
    }
    let mut cand = p & !adj[pivot];
    let mut p = p;
    let mut x = x;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let bit = 1u64 << v;
        r.push(v);
        bron_kerbosch(r, p & adj[v], x & adj[v], adj, out);
        r.pop();
        p &= !bit;
        x |= bit;
    }
}

/// Lexicographic list of vertex pairs `(1,2), (1,3), ..., (n-1,n)`.
pub fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for u in 1..=n {
        for v in u + 1..=n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Graph on `1..=n` whose edge set is selected by `mask` over [`edge_pairs`].
pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
    let pairs = edge_pairs(n);
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::new(n, &edges).expect("mask edges are always valid")
}

/// Streams every labeled simple graph on exactly `n` vertices, in edge-mask
/// order, optionally restricted to bipartite graphs.
pub fn enumerate_graphs(
    n: usize,
    bipartite_only: bool,
) -> Result<impl Iterator<Item = Graph>, GraphError> {
    enumerate_graphs_capped(n, bipartite_only, DEFAULT_ENUMERATION_CAP)
}

/// [`enumerate_graphs`] with an explicit cap on `n`.
pub fn enumerate_graphs_capped(
    n: usize,
    bipartite_only: bool,
    cap: usize,
) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if n > cap {
        return Err(GraphError::EnumerationCap { n, cap });
    }
    let bits = n * (n.saturating_sub(1)) / 2;
    let iter = if bipartite_only {
        Either::Left(bipartite_edge_masks(n).into_iter())
    } else {
        Either::Right(0..1u64 << bits)
    };
    Ok(iter.map(move |mask| from_edge_mask(n, mask)))
}

/// Sorted edge masks of every labeled bipartite graph on exactly `n` vertices.
///
/// Runs over all vertex splits with vertex 1 on the left and all edge subsets
/// of the cross pairs; a bitset over the full mask space removes graphs that
/// admit several two-colorings. Much faster than filtering all `2^(n choose 2)`
/// masks once `n` reaches 7 or 8.
pub fn bipartite_edge_masks(n: usize) -> Vec<u64> {
    if n == 0 {
        return vec![0];
    }
    let pairs = edge_pairs(n);
    let mut pair_index = vec![[0usize; 9]; 9];
    for (k, &(u, v)) in pairs.iter().enumerate() {
        pair_index[u][v] = k;
    }
    assert!(pairs.len() <= 28, "mask space too large for n = {n}");
    let mut seen = vec![0u64; (1usize << pairs.len()).div_ceil(64)];
    let mut out = Vec::new();
    for split in 0..1u32 << (n - 1) {
        // Left side: vertex 1 plus the vertices selected by `split`.
        let left: Vec<usize> = std::iter::once(1)
            .chain((2..=n).filter(|v| split >> (v - 2) & 1 == 1))
            .collect();
        let mut cross: Vec<u64> = Vec::new();
        for v in 1..=n {
            if left.contains(&v) {
                continue;
            }
            for &u in &left {
                cross.push(1u64 << pair_index[u.min(v)][u.max(v)]);
            }
        }
        for m in 0..1u64 << cross.len() {
            let mut mask = 0u64;
            for (i, bit) in cross.iter().enumerate() {
                if m >> i & 1 == 1 {
                    mask |= bit;
                }
            }
            let (word, bit) = (mask as usize / 64, mask % 64);
            if seen[word] >> bit & 1 == 0 {
                seen[word] |= 1 << bit;
                out.push(mask);
            }
        }
    }
    out.sort_unstable();
    out
}
