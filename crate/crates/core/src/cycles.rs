//! Enumeration of induced (chordless) cycles and the bookkeeping for how
//! they respond to contracting one edge.
//!
//! A cycle is induced when its vertex set carries no chord, equivalently
//! when the induced subgraph on that set is exactly the cycle graph. A
//! vertex set therefore induces at most one such cycle, which lets sets
//! stand in for cycles everywhere deduplication is needed.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::graph::{bit, bits_iter, EdgeRef, Graph};
use crate::{Error, Result};

/// Default ceiling on enumerated cycles; graphs under ~15 vertices stay
/// far below it, dense 20+ vertex graphs can explode combinatorially.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// An induced cycle, stored in traversal order with a canonical start:
/// `vertices[0]` is the least vertex and `vertices[1]` the smaller of its
/// two cycle neighbors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct InducedCycle {
    vertices: Vec<usize>,
    bits: u64,
}

impl InducedCycle {
    /// Accepts any rotation/direction of an induced cycle of `g`,
    /// canonicalizes it, and verifies it really is one.
    pub fn new(g: &Graph, vertices: &[usize]) -> Result<InducedCycle> {
        if vertices.len() < 3 {
            return Err(Error::NotACycle {
                reason: format!("{} vertices is too short", vertices.len()),
            });
        }
        let mut bits = 0u64;
        for &v in vertices {
            if v >= g.vertex_count() {
                return Err(Error::VertexOutOfRange {
                    v,
                    n: g.vertex_count(),
                });
            }
            if bits & bit(v) != 0 {
                return Err(Error::NotACycle {
                    reason: format!("vertex {v} repeats"),
                });
            }
            bits |= bit(v);
        }
        let k = vertices.len();
        for i in 0..k {
            let (u, v) = (vertices[i], vertices[(i + 1) % k]);
            if !g.has_edge(u, v) {
                return Err(Error::NotACycle {
                    reason: format!("missing edge ({u}, {v})"),
                });
            }
        }
        for &v in vertices {
            if (g.neighbors_bits(v) & bits).count_ones() != 2 {
                return Err(Error::NotACycle {
                    reason: format!("chord at vertex {v}"),
                });
            }
        }
        Ok(InducedCycle::canonicalize(vertices, bits))
    }

    /// Rotates so the least vertex leads, directed toward its smaller
    /// neighbor. Caller guarantees the walk is a chordless cycle.
    fn canonicalize(walk: &[usize], bits: u64) -> InducedCycle {
        let k = walk.len();
        let start = (0..k).min_by_key(|&i| walk[i]).expect("nonempty");
        let fwd = walk[(start + 1) % k];
        let bwd = walk[(start + k - 1) % k];
        let mut vertices = Vec::with_capacity(k);
        if fwd < bwd {
            vertices.extend((0..k).map(|i| walk[(start + i) % k]));
        } else {
            vertices.extend((0..k).map(|i| walk[(start + k - i) % k]));
        }
        InducedCycle { vertices, bits }
    }

    /// Vertices in canonical traversal order.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vertex set as a bitmask.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits & bit(v) != 0
    }

    /// The cycle's edges, normalized.
    pub fn edges(&self) -> Vec<EdgeRef> {
        let k = self.vertices.len();
        (0..k)
            .map(|i| EdgeRef::new(self.vertices[i], self.vertices[(i + 1) % k]))
            .collect()
    }

    pub fn has_edge(&self, e: EdgeRef) -> bool {
        let k = self.vertices.len();
        (0..k).any(|i| EdgeRef::new(self.vertices[i], self.vertices[(i + 1) % k]) == e)
    }
}

/// Enumerates every induced cycle with the default cap.
pub fn enumerate_induced_cycles(g: &Graph) -> Result<Vec<InducedCycle>> {
    enumerate_induced_cycles_capped(g, DEFAULT_CYCLE_CAP)
}

/// Enumerates every induced cycle of `g`, sorted by canonical vertex
/// sequence, erroring once more than `cap` cycles appear.
///
/// Each cycle is found exactly once from its least vertex `x` and the
/// ordered pair `u < y` of `x`'s neighbors on it: a depth-first search
/// grows the arc from `y` away from `x` through vertices larger than `x`
/// that see no interior vertex of the partial arc, and closes on a
/// common neighbor of the arc's end and `u`.
pub fn enumerate_induced_cycles_capped(g: &Graph, cap: usize) -> Result<Vec<InducedCycle>> {
    let mut out = Vec::new();
    let above = |x: usize| !((bit(x) << 1).wrapping_sub(1));
    for x in g.vertices() {
        let nx: Vec<usize> = bits_iter(g.neighbors_bits(x) & above(x)).collect();
        for (i, &u) in nx.iter().enumerate() {
            for &y in &nx[i + 1..] {
                if g.has_edge(u, y) {
                    push_capped(&mut out, InducedCycle::canonicalize(&[x, u, y], bit(x) | bit(u) | bit(y)), cap)?;
                    continue;
                }
                // Arc x-u fixed; grow x-y-... and close back to u. Arc
                // vertices may touch neither x nor u nor any earlier arc
                // vertex; the closing vertex must touch u but nothing
                // else already seen. N(u) therefore stays out of the
                // blocked mask and is excluded separately when extending.
                let mut path = vec![u, x, y];
                let mut blocked = vec![g.neighbors_bits(x) | bit(x) | bit(u)];
                extend_arc(g, x, u, &mut path, &mut blocked, &mut out, cap)?;
            }
        }
    }
    out.sort();
    Ok(out)
}

fn push_capped(out: &mut Vec<InducedCycle>, c: InducedCycle, cap: usize) -> Result<()> {
    if out.len() >= cap {
        return Err(Error::CycleCapExceeded { cap });
    }
    out.push(c);
    Ok(())
}

fn extend_arc(
    g: &Graph,
    x: usize,
    u: usize,
    path: &mut Vec<usize>,
    blocked: &mut Vec<u64>,
    out: &mut Vec<InducedCycle>,
    cap: usize,
) -> Result<()> {
    let end = *path.last().expect("path starts at length 3");
    let above_x = !((bit(x) << 1).wrapping_sub(1));
    // Close: a neighbor of both the arc end and u, unseen and unblocked,
    // completes x-u-z-(reversed interior)-y-x as a chordless cycle.
    let closers = g.neighbors_bits(end) & g.neighbors_bits(u) & above_x & !blocked.last().unwrap();
    for z in bits_iter(closers) {
        let mut walk = Vec::with_capacity(path.len() + 1);
        walk.push(x);
        walk.push(u);
        walk.push(z);
        walk.extend(path[2..].iter().rev());
        let bits = walk.iter().fold(0u64, |b, &v| b | bit(v));
        push_capped(out, InducedCycle::canonicalize(&walk, bits), cap)?;
    }
    // Extend: the next arc vertex must avoid u (handled by closing), x,
    // and everything adjacent to interior vertices.
    let nexts = g.neighbors_bits(end) & above_x & !blocked.last().unwrap() & !g.neighbors_bits(u);
    for w in bits_iter(nexts) {
        path.push(w);
        blocked.push(blocked.last().unwrap() | g.neighbors_bits(end) | bit(end));
        extend_arc(g, x, u, path, blocked, out, cap)?;
        blocked.pop();
        path.pop();
    }
    Ok(())
}

/// Number of induced cycles of odd length.
pub fn count_induced_odd_cycles(g: &Graph) -> Result<usize> {
    Ok(enumerate_induced_cycles(g)?
        .iter()
        .filter(|c| c.len() % 2 == 1)
        .count())
}

/// Length of a longest (not necessarily induced) cycle, 0 when acyclic.
/// Exhaustive search, intended for small graphs.
pub fn longest_cycle_length(g: &Graph) -> usize {
    let mut best = 0;
    for start in g.vertices() {
        let mut path = vec![start];
        longest_from(g, start, &mut path, bit(start), &mut best);
    }
    best
}

fn longest_from(g: &Graph, start: usize, path: &mut Vec<usize>, used: u64, best: &mut usize) {
    let end = *path.last().unwrap();
    if path.len() >= 3 && g.has_edge(end, start) && path.len() > *best {
        *best = path.len();
    }
    // Only paths whose least vertex is the start need exploring.
    let lows = (bit(start) << 1).wrapping_sub(1);
    for w in bits_iter(g.neighbors_bits(end) & !used & !lows) {
        path.push(w);
        longest_from(g, start, path, used | bit(w), best);
        path.pop();
    }
}

/// Triangles containing the edge `e`: common neighbors of its endpoints.
pub fn count_triangles_through(g: &Graph, e: EdgeRef) -> Result<usize> {
    if !g.has_edge(e.u, e.v) {
        return Err(Error::NotAnEdge { u: e.u, v: e.v });
    }
    Ok((g.neighbors_bits(e.u) & g.neighbors_bits(e.v)).count_ones() as usize)
}

/// Paths of length two between `u` and `v`: their common neighbors.
pub fn count_length2_paths(g: &Graph, u: usize, v: usize) -> Result<usize> {
    if u >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            v: u,
            n: g.vertex_count(),
        });
    }
    if v >= g.vertex_count() {
        return Err(Error::VertexOutOfRange { v, n: g.vertex_count() });
    }
    if u == v {
        return Err(Error::SameVertex { v });
    }
    Ok((g.neighbors_bits(u) & g.neighbors_bits(v)).count_ones() as usize)
}

/// How the induced cycles of `g` relate to those of `g` with edge `e`
/// contracted.
///
/// Every induced cycle of `g` falls into exactly one class:
///
/// * disjoint from the contraction in the sense that its image vertex
///   set still induces a cycle afterward; grouping those by image set
///   partitions them into image classes, some hit twice (`merged_pairs`)
///   and the rest once,
/// * a triangle through `e` (`triangles_through_edge`), which collapses
///   to a single edge,
/// * everything else (`spoiled`), whose image set gains a chord or loses
///   cycle shape.
///
/// The count of induced cycles then drops by exactly
/// `triangles_through_edge + spoiled + merged_pairs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionCensus {
    pub edge: EdgeRef,
    pub cycles_before: usize,
    pub cycles_after: usize,
    pub triangles_through_edge: usize,
    pub spoiled: usize,
    pub merged_pairs: usize,
    pub surviving_images: usize,
}

impl ContractionCensus {
    /// The counting identity the census is built to witness.
    pub fn identity_holds(&self) -> bool {
        self.cycles_before
            == self.cycles_after + self.triangles_through_edge + self.spoiled + self.merged_pairs
            && self.surviving_images
                == self.cycles_before - self.triangles_through_edge - self.spoiled - self.merged_pairs
    }
}

/// Classifies every induced cycle of `g` against contraction of `e`.
pub fn contraction_cycle_census(g: &Graph, e: EdgeRef) -> Result<ContractionCensus> {
    let cycles = enumerate_induced_cycles(g)?;
    let (h, vm) = g.contract_edge(e)?;
    let after = enumerate_induced_cycles(&h)?;
    let mut triangles = 0usize;
    let mut spoiled = 0usize;
    let mut image_groups: HashMap<u64, usize> = HashMap::new();
    for c in &cycles {
        if c.len() == 3 && c.contains(e.u) && c.contains(e.v) {
            triangles += 1;
            continue;
        }
        let image = vm.image_bits(c.bits());
        if induces_cycle(&h, image) {
            *image_groups.entry(image).or_insert(0) += 1;
        } else {
            spoiled += 1;
        }
    }
    let merged_pairs = image_groups.values().filter(|&&k| k == 2).count();
    debug_assert!(image_groups.values().all(|&k| k <= 2));
    Ok(ContractionCensus {
        edge: e,
        cycles_before: cycles.len(),
        cycles_after: after.len(),
        triangles_through_edge: triangles,
        spoiled,
        merged_pairs,
        surviving_images: image_groups.len(),
    })
}

/// True when `bits` induces a cycle graph in `g`: connected, at least 3
/// vertices, every vertex seeing exactly 2 others of the set.
pub(crate) fn induces_cycle(g: &Graph, bits: u64) -> bool {
    bits.count_ones() >= 3
        && bits_iter(bits).all(|v| (g.neighbors_bits(v) & bits).count_ones() == 2)
        && g.connected_within(bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_sets(g: &Graph) -> Vec<u64> {
        enumerate_induced_cycles(g).unwrap().iter().map(|c| c.bits()).collect()
    }

    #[test]
    fn plain_cycles_have_one_induced_cycle() {
        for n in 3..=9 {
            let cs = enumerate_induced_cycles(&Graph::cycle(n)).unwrap();
            assert_eq!(cs.len(), 1);
            assert_eq!(cs[0].len(), n);
            assert_eq!(cs[0].vertices()[0], 0);
            assert_eq!(cs[0].vertices()[1], 1);
        }
        assert!(enumerate_induced_cycles(&Graph::path(6)).unwrap().is_empty());
        assert!(enumerate_induced_cycles(&Graph::empty(0)).unwrap().is_empty());
    }

    #[test]
    fn complete_graphs_have_binomial_triangles() {
        for n in 3..=8usize {
            let cs = enumerate_induced_cycles(&Graph::complete(n)).unwrap();
            assert_eq!(cs.len(), n * (n - 1) * (n - 2) / 6);
            assert!(cs.iter().all(|c| c.len() == 3));
        }
    }

    #[test]
    fn octahedron_has_eleven() {
        let cs = enumerate_induced_cycles(&Graph::octahedron()).unwrap();
        assert_eq!(cs.len(), 11);
        assert_eq!(cs.iter().filter(|c| c.len() == 3).count(), 8);
        assert_eq!(cs.iter().filter(|c| c.len() == 4).count(), 3);
    }

    #[test]
    fn petersen_has_twenty_two() {
        let cs = enumerate_induced_cycles(&Graph::petersen()).unwrap();
        assert_eq!(cs.len(), 22);
        assert_eq!(cs.iter().filter(|c| c.len() == 5).count(), 12);
        assert_eq!(cs.iter().filter(|c| c.len() == 6).count(), 10);
    }

    #[test]
    fn complete_bipartite_has_quadrilaterals() {
        // K3,3: one 4-cycle per pair of vertices on each side.
        let cs = enumerate_induced_cycles(&Graph::complete_bipartite(3, 3)).unwrap();
        assert_eq!(cs.len(), 9);
        assert!(cs.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn enumerated_cycles_are_chordless_and_distinct() {
        let g = crate::graph::random_connected_graph(9, 0.45, 11).unwrap();
        let cs = enumerate_induced_cycles(&g).unwrap();
        let mut sets: Vec<u64> = cs.iter().map(|c| c.bits()).collect();
        sets.sort();
        sets.dedup();
        assert_eq!(sets.len(), cs.len(), "vertex sets repeat");
        for c in &cs {
            InducedCycle::new(&g, c.vertices()).expect("cycle validates");
            assert!(induces_cycle(&g, c.bits()));
        }
    }

    #[test]
    fn subset_scan_agrees_on_small_graphs() {
        // Independent oracle: a set induces at most one chordless cycle.
        for seed in 0..40 {
            let g = crate::graph::random_connected_graph(7, 0.5, seed).unwrap();
            let mut by_scan = Vec::new();
            for bits in 1u64..(1 << 7) {
                if induces_cycle(&g, bits) {
                    by_scan.push(bits);
                }
            }
            by_scan.sort();
            let mut by_enum = cycle_sets(&g);
            by_enum.sort();
            assert_eq!(by_scan, by_enum, "seed {seed}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::complete(8);
        assert!(matches!(
            enumerate_induced_cycles_capped(&g, 10),
            Err(Error::CycleCapExceeded { cap: 10 })
        ));
        assert_eq!(enumerate_induced_cycles_capped(&g, 56).unwrap().len(), 56);
    }

    #[test]
    fn cycle_validation_rejects_bad_walks() {
        let g = Graph::cycle(5);
        assert!(matches!(
            InducedCycle::new(&g, &[0, 1, 2]),
            Err(Error::NotACycle { .. })
        ));
        let k4 = Graph::complete(4);
        // 4-walk in K4 carries chords.
        assert!(matches!(
            InducedCycle::new(&k4, &[0, 1, 2, 3]),
            Err(Error::NotACycle { .. })
        ));
        assert!(matches!(
            InducedCycle::new(&g, &[0, 1, 2, 3, 0]),
            Err(Error::NotACycle { .. })
        ));
    }

    #[test]
    fn canonical_form_is_rotation_invariant() {
        let g = Graph::cycle(5);
        let a = InducedCycle::new(&g, &[2, 3, 4, 0, 1]).unwrap();
        let b = InducedCycle::new(&g, &[3, 2, 1, 0, 4]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.vertices(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn odd_cycle_counts() {
        assert_eq!(count_induced_odd_cycles(&Graph::petersen()).unwrap(), 12);
        assert_eq!(count_induced_odd_cycles(&Graph::cycle(6)).unwrap(), 0);
        assert_eq!(count_induced_odd_cycles(&Graph::complete(5)).unwrap(), 10);
        assert_eq!(count_induced_odd_cycles(&Graph::octahedron()).unwrap(), 8);
    }

    #[test]
    fn longest_cycle_values() {
        assert_eq!(longest_cycle_length(&Graph::path(5)), 0);
        assert_eq!(longest_cycle_length(&Graph::cycle(6)), 6);
        assert_eq!(longest_cycle_length(&Graph::complete(6)), 6);
        assert_eq!(longest_cycle_length(&Graph::petersen()), 9);
        assert_eq!(longest_cycle_length(&Graph::octahedron()), 6);
        assert_eq!(longest_cycle_length(&Graph::complete_bipartite(2, 3)), 4);
    }

    #[test]
    fn triangle_and_path_counts() {
        let g = Graph::complete(5);
        assert_eq!(count_triangles_through(&g, EdgeRef::new(0, 1)).unwrap(), 3);
        assert_eq!(count_length2_paths(&Graph::cycle(4), 0, 2).unwrap(), 2);
        assert!(count_triangles_through(&Graph::cycle(4), EdgeRef::new(0, 2)).is_err());
    }

    #[test]
    fn census_on_k4_edge() {
        // K4 has 4 triangles; contracting an edge kills the 2 through it
        // and merges the surviving pair into one image triangle.
        let census = contraction_cycle_census(&Graph::complete(4), EdgeRef::new(0, 1)).unwrap();
        assert_eq!(census.cycles_before, 4);
        assert_eq!(census.cycles_after, 1);
        assert_eq!(census.triangles_through_edge, 2);
        assert_eq!(census.spoiled, 0);
        assert_eq!(census.merged_pairs, 1);
        assert!(census.identity_holds());
    }

    #[test]
    fn census_on_c4_edge() {
        // C4 contracts to a triangle: nothing is lost.
        let census = contraction_cycle_census(&Graph::cycle(4), EdgeRef::new(0, 1)).unwrap();
        assert_eq!(census.cycles_before, 1);
        assert_eq!(census.cycles_after, 1);
        assert_eq!(census.triangles_through_edge, 0);
        assert_eq!(census.spoiled, 0);
        assert_eq!(census.merged_pairs, 0);
        assert!(census.identity_holds());
    }

    #[test]
    fn census_identity_on_random_graphs() {
        for seed in 0..25 {
            let g = crate::graph::random_connected_graph(8, 0.45, 100 + seed).unwrap();
            for e in g.edges() {
                let census = contraction_cycle_census(&g, e).unwrap();
                assert!(census.identity_holds(), "seed {seed} edge {e}");
            }
        }
    }
}
