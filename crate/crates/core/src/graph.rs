//! Bitset-backed simple undirected graphs on up to 62 vertices, the
//! contraction and gluing operations the invariants are built on, and
//! exhaustive/seeded graph generation for test corpora.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Hard cap imposed by the 64-bit adjacency rows and the graph6 short form.
pub const MAX_VERTICES: usize = 62;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterator over the set bits of a vertex mask, lowest vertex first.
#[derive(Debug, Clone, Copy)]
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Iterates the vertices in `bits`, in increasing order.
pub fn bits_iter(bits: u64) -> BitIter {
    BitIter(bits)
}

/// Undirected edge, always stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeRef {
    pub u: usize,
    pub v: usize,
}

impl EdgeRef {
    /// Normalizes endpoint order. Panics on a loop, which simple graphs
    /// cannot contain, so hitting one is a caller bug.
    pub fn new(u: usize, v: usize) -> EdgeRef {
        assert_ne!(u, v, "loop edge ({u}, {u})");
        if u < v {
            EdgeRef { u, v }
        } else {
            EdgeRef { u: v, v: u }
        }
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Records where each vertex of an operation's input went.
///
/// `apply(v)` is the image of input vertex `v`, or `None` when the
/// operation dropped it (only induced subgraphs drop vertices; the
/// contraction maps are total).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    map: Vec<Option<usize>>,
    target_n: usize,
}

impl VertexMap {
    pub fn identity(n: usize) -> VertexMap {
        VertexMap {
            map: (0..n).map(Some).collect(),
            target_n: n,
        }
    }

    pub(crate) fn new(map: Vec<Option<usize>>, target_n: usize) -> VertexMap {
        debug_assert!(map.iter().flatten().all(|&w| w < target_n));
        VertexMap { map, target_n }
    }

    pub fn apply(&self, v: usize) -> Option<usize> {
        self.map.get(v).copied().flatten()
    }

    pub fn source_len(&self) -> usize {
        self.map.len()
    }

    pub fn target_len(&self) -> usize {
        self.target_n
    }

    /// Image of a source vertex set given as a bitmask.
    pub fn image_bits(&self, bits: u64) -> u64 {
        let mut out = 0;
        for v in bits_iter(bits) {
            if let Some(w) = self.apply(v) {
                out |= bit(w);
            }
        }
        out
    }

    /// `self` followed by `then`.
    pub fn compose(&self, then: &VertexMap) -> VertexMap {
        let map = self
            .map
            .iter()
            .map(|&m| m.and_then(|w| then.apply(w)))
            .collect();
        VertexMap {
            map,
            target_n: then.target_n,
        }
    }
}

/// Simple undirected graph with one adjacency bitmask per vertex.
///
/// Equality and hashing look at the vertex count and adjacency only;
/// labels are carried for traceability but never affect identity.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edge_pairs())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices. Panics above [`MAX_VERTICES`];
    /// data-driven construction should go through [`Graph::from_edges`].
    pub fn empty(n: usize) -> Graph {
        assert!(
            n <= MAX_VERTICES,
            "at most {MAX_VERTICES} vertices supported, got {n}"
        );
        Graph {
            n,
            adj: vec![0; n],
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertex count",
                value: n,
                max: MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.adj[u] = g.full_bits() & !bit(u);
        }
        g
    }

    /// Cycle graph; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for v in 0..n {
            let w = (v + 1) % n;
            g.adj[v] |= bit(w);
            g.adj[w] |= bit(v);
        }
        g
    }

    /// Path graph on `n` vertices (so `n - 1` edges).
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.adj[v - 1] |= bit(v);
            g.adj[v] |= bit(v - 1);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.adj[u] |= bit(v);
                g.adj[v] |= bit(u);
            }
        }
        g
    }

    /// The octahedron K2,2,2: six vertices, the antipodal pairs
    /// (0,3), (1,4), (2,5) are the only non-edges.
    pub fn octahedron() -> Graph {
        let mut g = Graph::complete(6);
        for v in 0..3 {
            g.adj[v] &= !bit(v + 3);
            g.adj[v + 3] &= !bit(v);
        }
        g
    }

    /// The Petersen graph: outer 5-cycle 0..=4, inner pentagram 5..=9,
    /// spokes i to i+5.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Graph::from_edges(10, &edges).expect("static edge list is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Mask with one bit per vertex.
    pub fn full_bits(&self) -> u64 {
        if self.n == 0 {
            0
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && self.adj[u] & bit(v) != 0
    }

    /// Panics when `v` is out of range.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Panics when `v` is out of range.
    pub fn neighbors_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> BitIter {
        BitIter(self.adj[v])
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex { v });
        }
        Ok(())
    }

    /// Adds an edge; already-present edges are fine.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    /// Removes an existing edge; absent edges are an error.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        if self.adj[u] & bit(v) == 0 {
            return Err(Error::NotAnEdge { u, v });
        }
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        Ok(())
    }

    fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits_iter(self.adj[u] & !(bit(u) | (bit(u) - 1))) {
                out.push((u, v));
            }
        }
        out
    }

    /// All edges with `u < v`, ascending.
    pub fn edges(&self) -> Vec<EdgeRef> {
        self.edge_pairs()
            .into_iter()
            .map(|(u, v)| EdgeRef { u, v })
            .collect()
    }

    /// All non-adjacent pairs with `u < v`, ascending.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] & bit(v) == 0 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().and_then(|l| l.get(v)).map(|s| s.as_str())
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.n {
            return Err(Error::BadLabels {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(())
    }

    /// True when every pair inside `bits` is adjacent.
    pub fn is_clique(&self, bits: u64) -> bool {
        bits_iter(bits).all(|v| self.adj[v] & bits == bits & !bit(v))
    }

    /// Vertices reachable from `start`.
    pub fn component_bits(&self, start: usize) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits_iter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    /// True when the induced subgraph on `bits` is connected. The empty
    /// set counts as connected.
    pub fn connected_within(&self, bits: u64) -> bool {
        if bits == 0 {
            return true;
        }
        let start = bits.trailing_zeros() as usize;
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits_iter(frontier) {
                next |= self.adj[v] & bits;
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen == bits
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_bits(0) == self.full_bits()
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut left = self.full_bits();
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let comp = self.component_bits(start);
            out.push(bits_iter(comp).collect());
            left &= !comp;
        }
        out
    }

    /// True when removing `e` disconnects its endpoints.
    pub fn is_cut_edge(&self, e: EdgeRef) -> Result<bool> {
        self.check_pair(e.u, e.v)?;
        if self.adj[e.u] & bit(e.v) == 0 {
            return Err(Error::NotAnEdge { u: e.u, v: e.v });
        }
        let mut g = self.clone();
        g.adj[e.u] &= !bit(e.v);
        g.adj[e.v] &= !bit(e.u);
        Ok(g.component_bits(e.u) & bit(e.v) == 0)
    }

    pub fn cut_edges(&self) -> Vec<EdgeRef> {
        self.edges()
            .into_iter()
            .filter(|&e| self.is_cut_edge(e).expect("edge exists"))
            .collect()
    }

    /// Induced subgraph on a vertex bitmask; kept vertices are renumbered
    /// in increasing order.
    pub fn induced_bits(&self, bits: u64) -> (Graph, VertexMap) {
        debug_assert_eq!(bits & !self.full_bits(), 0);
        let kept: Vec<usize> = bits_iter(bits).collect();
        let mut rank = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            rank[v] = i;
        }
        let mut adj = vec![0u64; kept.len()];
        for (i, &v) in kept.iter().enumerate() {
            for w in bits_iter(self.adj[v] & bits) {
                adj[i] |= bit(rank[w]);
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| kept.iter().map(|&v| l[v].clone()).collect());
        let map = (0..self.n)
            .map(|v| if rank[v] == usize::MAX { None } else { Some(rank[v]) })
            .collect();
        (
            Graph {
                n: kept.len(),
                adj,
                labels,
            },
            VertexMap::new(map, kept.len()),
        )
    }

    /// Induced subgraph on a list of distinct vertices.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<(Graph, VertexMap)> {
        let mut bits = 0u64;
        for &v in vs {
            self.check_vertex(v)?;
            if bits & bit(v) != 0 {
                return Err(Error::DuplicateVertex { v });
            }
            bits |= bit(v);
        }
        Ok(self.induced_bits(bits))
    }

    /// Merges `gone` into `keep` (`keep < gone`), dropping any loop and
    /// compacting vertex ids above `gone` down by one.
    fn merge_vertices(&self, keep: usize, gone: usize) -> (Graph, VertexMap) {
        debug_assert!(keep < gone && gone < self.n);
        let merged_row = (self.adj[keep] | self.adj[gone]) & !(bit(keep) | bit(gone));
        let compact = |row: u64| (row & (bit(gone) - 1)) | ((row >> (gone + 1)) << gone);
        let mut adj = Vec::with_capacity(self.n - 1);
        for w in 0..self.n {
            if w == gone {
                continue;
            }
            let row = if w == keep {
                merged_row
            } else if self.adj[w] & bit(gone) != 0 {
                (self.adj[w] & !bit(gone)) | bit(keep)
            } else {
                self.adj[w]
            };
            adj.push(compact(row));
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = Vec::with_capacity(self.n - 1);
            for (w, lab) in l.iter().enumerate() {
                if w == gone {
                    continue;
                }
                if w == keep {
                    out.push(format!("{}+{}", lab, l[gone]));
                } else {
                    out.push(lab.clone());
                }
            }
            out
        });
        let map = (0..self.n)
            .map(|v| {
                let img = if v == gone {
                    keep
                } else if v > gone {
                    v - 1
                } else {
                    v
                };
                Some(img)
            })
            .collect();
        (
            Graph {
                n: self.n - 1,
                adj,
                labels,
            },
            VertexMap::new(map, self.n - 1),
        )
    }

    /// Contracts an existing edge. The merged vertex takes the smaller id;
    /// ids above the larger endpoint shift down by one.
    pub fn contract_edge(&self, e: EdgeRef) -> Result<(Graph, VertexMap)> {
        self.check_pair(e.u, e.v)?;
        if self.adj[e.u] & bit(e.v) == 0 {
            return Err(Error::NotAnEdge { u: e.u, v: e.v });
        }
        let (u, v) = if e.u < e.v { (e.u, e.v) } else { (e.v, e.u) };
        Ok(self.merge_vertices(u, v))
    }

    /// Identifies two non-adjacent vertices, the contraction of the
    /// missing edge after adding it.
    pub fn contract_nonedge(&self, u: usize, v: usize) -> Result<(Graph, VertexMap)> {
        self.check_pair(u, v)?;
        if self.adj[u] & bit(v) != 0 {
            return Err(Error::NotANonedge { u, v });
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        Ok(self.merge_vertices(a, b))
    }

    /// Adds an apex adjacent to every vertex; returns the apex id `n`.
    pub fn cone(&self) -> Result<(Graph, usize)> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertex count",
                value: self.n + 1,
                max: MAX_VERTICES,
            });
        }
        let apex = self.n;
        let mut adj = self.adj.clone();
        for row in adj.iter_mut() {
            *row |= bit(apex);
        }
        adj.push(self.full_bits());
        let labels = self.labels.as_ref().map(|l| {
            let mut out = l.clone();
            out.push("apex".to_string());
            out
        });
        Ok((
            Graph {
                n: self.n + 1,
                adj,
                labels,
            },
            apex,
        ))
    }

    /// Replaces edge `e` by a path of length `k >= 2`; the `k - 1` new
    /// interior vertices get the ids `n, n+1, ..`, existing ids are kept.
    pub fn subdivide_edge(&self, e: EdgeRef, k: usize) -> Result<Graph> {
        self.check_pair(e.u, e.v)?;
        if self.adj[e.u] & bit(e.v) == 0 {
            return Err(Error::NotAnEdge { u: e.u, v: e.v });
        }
        if k < 2 {
            return Err(Error::BadSubdivision { k });
        }
        let n2 = self.n + k - 1;
        if n2 > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertex count",
                value: n2,
                max: MAX_VERTICES,
            });
        }
        let mut g = Graph {
            n: n2,
            adj: {
                let mut adj = self.adj.clone();
                adj.resize(n2, 0);
                adj
            },
            labels: self.labels.as_ref().map(|l| {
                let mut out = l.clone();
                out.extend((0..k - 1).map(|i| format!("s{i}")));
                out
            }),
        };
        g.adj[e.u] &= !bit(e.v);
        g.adj[e.v] &= !bit(e.u);
        let chain: Vec<usize> = std::iter::once(e.u)
            .chain(self.n..n2)
            .chain(std::iter::once(e.v))
            .collect();
        for pair in chain.windows(2) {
            g.adj[pair[0]] |= bit(pair[1]);
            g.adj[pair[1]] |= bit(pair[0]);
        }
        Ok(g)
    }
}

/// Glues `g2` onto `g1` by identifying the clique `pairs[i].1` of `g2`
/// with the clique `pairs[i].0` of `g1`. Vertices of `g1` keep their ids;
/// unglued vertices of `g2` follow in increasing order.
pub fn clique_sum(g1: &Graph, g2: &Graph, pairs: &[(usize, usize)]) -> Result<Graph> {
    if pairs.is_empty() {
        return Err(Error::BadClique {
            reason: "at least one glued pair is required".to_string(),
        });
    }
    let mut bits1 = 0u64;
    let mut bits2 = 0u64;
    for &(a, b) in pairs {
        if a >= g1.vertex_count() {
            return Err(Error::VertexOutOfRange {
                v: a,
                n: g1.vertex_count(),
            });
        }
        if b >= g2.vertex_count() {
            return Err(Error::VertexOutOfRange {
                v: b,
                n: g2.vertex_count(),
            });
        }
        if bits1 & bit(a) != 0 {
            return Err(Error::DuplicateVertex { v: a });
        }
        if bits2 & bit(b) != 0 {
            return Err(Error::DuplicateVertex { v: b });
        }
        bits1 |= bit(a);
        bits2 |= bit(b);
    }
    if !g1.is_clique(bits1) || !g2.is_clique(bits2) {
        return Err(Error::BadClique {
            reason: format!("pairs {pairs:?} do not induce cliques on both sides"),
        });
    }
    let r = pairs.len();
    let n = g1.vertex_count() + g2.vertex_count() - r;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            value: n,
            max: MAX_VERTICES,
        });
    }
    // Map g2 ids into the sum.
    let mut map2 = vec![usize::MAX; g2.vertex_count()];
    for &(a, b) in pairs {
        map2[b] = a;
    }
    let mut next = g1.vertex_count();
    for v in 0..g2.vertex_count() {
        if map2[v] == usize::MAX {
            map2[v] = next;
            next += 1;
        }
    }
    let mut g = Graph::empty(n);
    for e in g1.edges() {
        g.add_edge(e.u, e.v)?;
    }
    for e in g2.edges() {
        g.add_edge(map2[e.u], map2[e.v])?;
    }
    if let (Some(l1), Some(l2)) = (g1.labels(), g2.labels()) {
        let mut labels = vec![String::new(); n];
        labels[..l1.len()].clone_from_slice(l1);
        for (v, lab) in l2.iter().enumerate() {
            if map2[v] >= g1.vertex_count() {
                labels[map2[v]] = lab.clone();
            }
        }
        g.set_labels(labels)?;
    }
    Ok(g)
}

/// Merge along edges: identifies `x1` with `x2`, removes the edges
/// `x1 y1` and `x2 y2`, and adds the bridge `y1 y2`. Vertices of `g1`
/// keep their ids; vertices of `g2` other than `x2` follow in increasing
/// order.
pub fn hajos_merge(
    g1: &Graph,
    g2: &Graph,
    x1: usize,
    y1: usize,
    x2: usize,
    y2: usize,
) -> Result<Graph> {
    if !g1.has_edge(x1, y1) {
        return Err(Error::NotAnEdge { u: x1, v: y1 });
    }
    if !g2.has_edge(x2, y2) {
        return Err(Error::NotAnEdge { u: x2, v: y2 });
    }
    let n = g1.vertex_count() + g2.vertex_count() - 1;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            value: n,
            max: MAX_VERTICES,
        });
    }
    let mut map2 = vec![usize::MAX; g2.vertex_count()];
    map2[x2] = x1;
    let mut next = g1.vertex_count();
    for v in 0..g2.vertex_count() {
        if v != x2 {
            map2[v] = next;
            next += 1;
        }
    }
    let mut g = Graph::empty(n);
    for e in g1.edges() {
        g.add_edge(e.u, e.v)?;
    }
    for e in g2.edges() {
        g.add_edge(map2[e.u], map2[e.v])?;
    }
    g.remove_edge(x1, y1)?;
    g.remove_edge(x1, map2[y2])?;
    g.add_edge(y1, map2[y2])?;
    if let (Some(l1), Some(l2)) = (g1.labels(), g2.labels()) {
        let mut labels = vec![String::new(); n];
        labels[..l1.len()].clone_from_slice(l1);
        for (v, lab) in l2.iter().enumerate() {
            if v != x2 {
                labels[map2[v]] = lab.clone();
            }
        }
        g.set_labels(labels)?;
    }
    Ok(g)
}

/// Samples G(n, p) until connected, at most 10000 attempts, deterministic
/// in `seed`.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            value: n,
            max: MAX_VERTICES,
        });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadProbability { p });
    }
    const ATTEMPTS: u32 = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    g.adj[u] |= bit(v);
                    g.adj[v] |= bit(u);
                }
            }
        }
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed { attempts: ATTEMPTS })
}

/// Upper-triangle adjacency key of the graph read in the given vertex
/// order, pair (i, j) with i < j at bit position j(j-1)/2 + i.
fn order_key(g: &Graph, order: &[usize]) -> u64 {
    let mut key = 0u64;
    let mut idx = 0;
    for j in 1..order.len() {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                key |= 1u64 << idx;
            }
            idx += 1;
        }
    }
    key
}

/// Iterated degree refinement; returns canonical color ids per vertex.
fn wl_colors(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    let mut color = vec![0u32; n];
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<u32> = g.neighbors(v).map(|w| color[w]).collect();
            nb.sort_unstable();
            sigs.push((color[v], nb));
        }
        let mut uniq: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        uniq.sort();
        uniq.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| uniq.binary_search(&s).expect("own signature") as u32)
            .collect();
        if next == color {
            return color;
        }
        color = next;
    }
}

fn canonical_search(
    g: &Graph,
    classes: &mut [Vec<usize>],
    ci: usize,
    order: &mut Vec<usize>,
    best: &mut (u64, Vec<usize>),
) {
    if ci == classes.len() {
        let key = order_key(g, order);
        if key < best.0 {
            *best = (key, order.clone());
        }
        return;
    }
    class_perms(g, classes, ci, 0, order, best);
}

fn class_perms(
    g: &Graph,
    classes: &mut [Vec<usize>],
    ci: usize,
    pos: usize,
    order: &mut Vec<usize>,
    best: &mut (u64, Vec<usize>),
) {
    let len = classes[ci].len();
    if pos == len {
        canonical_search(g, classes, ci + 1, order, best);
        return;
    }
    for i in pos..len {
        classes[ci].swap(pos, i);
        order.push(classes[ci][pos]);
        class_perms(g, classes, ci, pos + 1, order, best);
        order.pop();
        classes[ci].swap(pos, i);
    }
}

impl Graph {
    /// Canonical isomorphism key; equal keys mean isomorphic graphs.
    /// Supported to 10 vertices (the key takes one bit per vertex pair,
    /// and the refinement-guided search stays cheap at this size).
    pub fn canonical_key(&self) -> u64 {
        assert!(self.n <= 10, "canonical_key supports at most 10 vertices");
        if self.n < 2 {
            return 0;
        }
        let color = wl_colors(self);
        let max_color = color.iter().copied().max().unwrap_or(0) as usize;
        let mut classes: Vec<Vec<usize>> = vec![Vec::new(); max_color + 1];
        for v in 0..self.n {
            classes[color[v] as usize].push(v);
        }
        classes.retain(|c| !c.is_empty());
        let mut best = (u64::MAX, Vec::new());
        let mut order = Vec::with_capacity(self.n);
        canonical_search(self, &mut classes, 0, &mut order, &mut best);
        best.0
    }

    fn from_pair_key(n: usize, key: u64) -> Graph {
        let mut g = Graph::empty(n);
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if key & (1u64 << idx) != 0 {
                    g.adj[i] |= bit(j);
                    g.adj[j] |= bit(i);
                }
                idx += 1;
            }
        }
        g
    }
}

/// Every connected graph on 1..=`max_n` vertices, one canonical
/// representative per isomorphism class, in a deterministic order.
/// Counts per order: 1, 1, 2, 6, 21, 112, 853 for n = 1..=7.
pub fn all_connected_graphs(max_n: usize) -> Result<Vec<Graph>> {
    if max_n == 0 {
        return Err(Error::EmptyGraph);
    }
    if max_n > 8 {
        return Err(Error::TooLarge {
            what: "vertex count",
            value: max_n,
            max: 8,
        });
    }
    let mut out = vec![Graph::empty(1)];
    let mut level = vec![Graph::empty(1)];
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut keyed: Vec<(u64, Graph)> = Vec::new();
        for parent in &level {
            // A new last vertex attached to any nonempty neighborhood
            // subset keeps the graph connected, and every connected graph
            // on n vertices arises this way from some connected parent
            // (remove any non-cut vertex).
            for mask in 1u64..(1u64 << (n - 1)) {
                let mut adj: Vec<u64> = parent.adj.clone();
                for w in bits_iter(mask) {
                    adj[w] |= bit(n - 1);
                }
                adj.push(mask);
                let g = Graph {
                    n,
                    adj,
                    labels: None,
                };
                let key = g.canonical_key();
                if seen.insert(key) {
                    keyed.push((key, Graph::from_pair_key(n, key)));
                }
            }
        }
        keyed.sort_by_key(|(key, _)| *key);
        level = keyed.into_iter().map(|(_, g)| g).collect();
        out.extend(level.iter().cloned());
    }
    Ok(out)
}
