//! Solid subgraphs and closed cycle sets.
//!
//! A set of induced cycles is *closed* when every edge lying on any of
//! them lies on exactly two. A vertex set is a *closed surface* when some
//! closed set of cycles spans exactly it, and a *solid* when it is an
//! inclusion-minimal closed surface. Minimal closed surfaces fall into
//! four shapes, each recognized directly:
//!
//! * **pyramid**: an induced cycle plus one vertex with at least three
//!   edges into it,
//! * **trihedron**: three internally disjoint paths, each of length at
//!   least two, between a common non-adjacent vertex pair,
//! * **stamp**: a triangle and three internally disjoint paths of length
//!   at least two from its corners to one common vertex,
//! * **prism**: two disjoint triangles joined corner-to-corner by three
//!   internally disjoint paths.
//!
//! Two independent routes to the same answer are provided: shape
//! recognition over unions of cycle pairs ([`enumerate_solids`], with an
//! exhaustive subset variant), and a direct search for minimal closed
//! surfaces that never mentions the shapes
//! ([`enumerate_minimal_closed_surfaces`]).

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::cycles::{enumerate_induced_cycles, induces_cycle, InducedCycle};
use crate::graph::{bit, bits_iter, EdgeRef, Graph};
use crate::{Budget, Error, Meter, Result};

/// The four shapes a solid can take. A set can match several shapes at
/// once (a complete graph on four vertices is both a pyramid and a
/// degenerate stamp); classification reports the first match in the
/// order pyramid, trihedron, stamp, prism, and everything downstream
/// identifies solids by vertex set, not by shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SolidKind {
    Pyramid,
    Trihedron,
    Stamp,
    Prism,
}

impl std::fmt::Display for SolidKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            SolidKind::Pyramid => "pyramid",
            SolidKind::Trihedron => "trihedron",
            SolidKind::Stamp => "stamp",
            SolidKind::Prism => "prism",
        };
        f.write_str(name)
    }
}

/// A solid subgraph, identified by its vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Solid {
    kind: SolidKind,
    vertices: Vec<usize>,
    #[serde(skip)]
    bits: u64,
}

impl Solid {
    pub fn kind(&self) -> SolidKind {
        self.kind
    }

    /// Vertices in increasing order.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Follows the path leaving `start` through `first` across degree-2
/// vertices until a branch vertex (or `start` itself) stops it. Returns
/// the stopping vertex and the interior vertices passed.
fn walk_chain(h: &Graph, start: usize, first: usize) -> (usize, u64) {
    let mut prev = start;
    let mut cur = first;
    let mut interior = 0u64;
    while cur != start && h.degree(cur) == 2 {
        interior |= bit(cur);
        let next = (h.neighbors_bits(cur) & !bit(prev))
            .trailing_zeros() as usize;
        prev = cur;
        cur = next;
    }
    (cur, interior)
}

/// The degree-3 vertices, provided there are exactly `count` of them and
/// every other vertex has degree 2.
fn branch_vertices(h: &Graph, count: usize) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    for v in h.vertices() {
        match h.degree(v) {
            2 => {}
            3 => out.push(v),
            _ => return None,
        }
    }
    (out.len() == count).then_some(out)
}

fn as_pyramid(h: &Graph) -> bool {
    let full = h.full_bits();
    h.vertices()
        .any(|w| h.degree(w) >= 3 && induces_cycle(h, full & !bit(w)))
}

fn as_trihedron(h: &Graph) -> bool {
    let Some(branch) = branch_vertices(h, 2) else {
        return false;
    };
    let (x, y) = (branch[0], branch[1]);
    // An adjacent pair would make one of the three paths a bare edge;
    // such a shape never spans a closed set (the edge would lie on two
    // cycles but each longer path's edges on only one) and is excluded.
    if h.has_edge(x, y) {
        return false;
    }
    let mut covered = bit(x) | bit(y);
    let mut total = 2usize;
    for first in h.neighbors(x) {
        let (term, interior) = walk_chain(h, x, first);
        if term != y {
            return false;
        }
        covered |= interior;
        total += interior.count_ones() as usize;
    }
    covered == h.full_bits() && total == h.vertex_count()
}

fn as_stamp(h: &Graph) -> bool {
    let Some(branch) = branch_vertices(h, 4) else {
        return false;
    };
    'centers: for (i, &x) in branch.iter().enumerate() {
        let corners: Vec<usize> = branch
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &t)| t)
            .collect();
        let triangle = h.has_edge(corners[0], corners[1])
            && h.has_edge(corners[0], corners[2])
            && h.has_edge(corners[1], corners[2]);
        // A corner wired straight to the center collapses the shape into
        // a pyramid over the cycle through the other two paths, so the
        // pyramid recognizer owns that case.
        if !triangle || corners.iter().any(|&t| h.has_edge(x, t)) {
            continue;
        }
        let corner_bits = corners.iter().fold(0u64, |b, &t| b | bit(t));
        let mut terms = 0u64;
        let mut covered = bit(x) | corner_bits;
        let mut total = 4usize;
        for first in h.neighbors(x) {
            let (term, interior) = walk_chain(h, x, first);
            if corner_bits & bit(term) == 0 || terms & bit(term) != 0 {
                continue 'centers;
            }
            terms |= bit(term);
            covered |= interior;
            total += interior.count_ones() as usize;
        }
        if terms == corner_bits && covered == h.full_bits() && total == h.vertex_count() {
            return true;
        }
    }
    false
}

fn as_prism(h: &Graph) -> bool {
    let Some(branch) = branch_vertices(h, 6) else {
        return false;
    };
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                let (a, b, c) = (branch[i], branch[j], branch[k]);
                if h.has_edge(a, b) && h.has_edge(a, c) && h.has_edge(b, c) {
                    triangles.push([a, b, c]);
                }
            }
        }
    }
    if triangles.len() != 2 {
        return false;
    }
    let bits1 = triangles[0].iter().fold(0u64, |b, &v| b | bit(v));
    let bits2 = triangles[1].iter().fold(0u64, |b, &v| b | bit(v));
    if bits1 & bits2 != 0 {
        return false;
    }
    let mut terms = 0u64;
    let mut covered = bits1 | bits2;
    let mut total = 6usize;
    for &a in &triangles[0] {
        // Third edge: the one not staying inside a's own triangle.
        let outward = h.neighbors_bits(a) & !bits1;
        if outward.count_ones() != 1 {
            return false;
        }
        let (term, interior) = walk_chain(h, a, outward.trailing_zeros() as usize);
        if bits2 & bit(term) == 0 || terms & bit(term) != 0 {
            return false;
        }
        terms |= bit(term);
        covered |= interior;
        total += interior.count_ones() as usize;
    }
    terms == bits2 && covered == h.full_bits() && total == h.vertex_count()
}

/// Classifies the subgraph induced on `bits`, returning its shape when
/// it is a solid and `None` otherwise.
pub fn classify_solid(g: &Graph, bits: u64) -> Option<SolidKind> {
    debug_assert_eq!(bits & !g.full_bits(), 0, "bits outside the graph");
    if bits.count_ones() < 4 {
        return None;
    }
    let (h, _) = g.induced_bits(bits);
    if !h.is_connected() {
        return None;
    }
    if as_pyramid(&h) {
        Some(SolidKind::Pyramid)
    } else if as_trihedron(&h) {
        Some(SolidKind::Trihedron)
    } else if as_stamp(&h) {
        Some(SolidKind::Stamp)
    } else if as_prism(&h) {
        Some(SolidKind::Prism)
    } else {
        None
    }
}

/// Enumerates the solids of `g` given its induced cycles, sorted by
/// vertex list.
///
/// Every solid is the union of two of its cycles sharing at least two
/// vertices (trihedron: two of the three path pairs; stamp and prism:
/// two of the side cycles; pyramid: base plus one apex sector), or an
/// induced cycle plus an apex seeing three of its vertices. Both unions
/// are generated, deduplicated, and classified.
pub fn enumerate_solids_from_cycles(g: &Graph, cycles: &[InducedCycle]) -> Vec<Solid> {
    let mut candidates: HashSet<u64> = HashSet::new();
    for (i, c1) in cycles.iter().enumerate() {
        for c2 in &cycles[i + 1..] {
            if (c1.bits() & c2.bits()).count_ones() >= 2 {
                candidates.insert(c1.bits() | c2.bits());
            }
        }
        for w in g.vertices() {
            if c1.bits() & bit(w) == 0 && (g.neighbors_bits(w) & c1.bits()).count_ones() >= 3 {
                candidates.insert(c1.bits() | bit(w));
            }
        }
    }
    let mut solids: Vec<Solid> = candidates
        .into_iter()
        .filter_map(|bits| {
            classify_solid(g, bits).map(|kind| Solid {
                kind,
                vertices: bits_iter(bits).collect(),
                bits,
            })
        })
        .collect();
    solids.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    solids
}

/// Enumerates the solids of `g`, sorted by vertex list.
pub fn enumerate_solids(g: &Graph) -> Result<Vec<Solid>> {
    Ok(enumerate_solids_from_cycles(g, &enumerate_induced_cycles(g)?))
}

/// Classifies every vertex subset outright; exhaustive cross-check for
/// [`enumerate_solids`], usable to 12 vertices.
pub fn enumerate_solids_bruteforce(g: &Graph) -> Result<Vec<Solid>> {
    let n = g.vertex_count();
    if n > 12 {
        return Err(Error::TooLarge {
            what: "vertex count",
            value: n,
            max: 12,
        });
    }
    let mut solids = Vec::new();
    for bits in 0..(1u64 << n) {
        if bits.count_ones() < 4 {
            continue;
        }
        if let Some(kind) = classify_solid(g, bits) {
            solids.push(Solid {
                kind,
                vertices: bits_iter(bits).collect(),
                bits,
            });
        }
    }
    solids.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    Ok(solids)
}

/// A validated closed set: distinct induced cycles of one graph, each
/// edge of their union lying on exactly two of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedSet {
    cycles: Vec<InducedCycle>,
    span: u64,
}

impl ClosedSet {
    /// Validates and canonicalizes (sorts) the cycle list.
    pub fn new(g: &Graph, cycles: Vec<InducedCycle>) -> Result<ClosedSet> {
        if cycles.is_empty() {
            return Err(Error::NotClosed {
                reason: "the empty cycle set is not closed".to_string(),
            });
        }
        let mut seen = HashSet::new();
        for (index, c) in cycles.iter().enumerate() {
            let valid = InducedCycle::new(g, c.vertices())
                .map(|cc| cc == *c)
                .unwrap_or(false);
            if !valid {
                return Err(Error::NotInducedCycle { index });
            }
            if !seen.insert(c.bits()) {
                return Err(Error::DuplicateCycle { index });
            }
        }
        let mut usage: HashMap<EdgeRef, u8> = HashMap::new();
        for c in &cycles {
            for e in c.edges() {
                *usage.entry(e).or_insert(0) += 1;
            }
        }
        let mut offenders: Vec<(EdgeRef, u8)> = usage
            .into_iter()
            .filter(|&(_, k)| k != 2)
            .collect();
        if !offenders.is_empty() {
            offenders.sort();
            let (e, k) = offenders[0];
            return Err(Error::NotClosed {
                reason: format!("edge {e} lies on {k} cycles, need exactly 2"),
            });
        }
        Ok(ClosedSet::from_validated(cycles))
    }

    fn from_validated(mut cycles: Vec<InducedCycle>) -> ClosedSet {
        cycles.sort();
        let span = cycles.iter().fold(0u64, |b, c| b | c.bits());
        ClosedSet { cycles, span }
    }

    pub fn cycles(&self) -> &[InducedCycle] {
        &self.cycles
    }

    /// Union of the cycles' vertex sets, as a bitmask.
    pub fn span_bits(&self) -> u64 {
        self.span
    }

    /// Union of the cycles' vertex sets, in increasing order.
    pub fn vertices(&self) -> Vec<usize> {
        bits_iter(self.span).collect()
    }

    /// Union of the cycles' edges, each once, sorted.
    pub fn edge_set(&self) -> Vec<EdgeRef> {
        let mut edges: Vec<EdgeRef> = self.cycles.iter().flat_map(|c| c.edges()).collect();
        edges.sort();
        edges.dedup();
        edges
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// True when the cycles form a closed set over `g`.
pub fn is_closed_set(g: &Graph, cycles: &[InducedCycle]) -> bool {
    ClosedSet::new(g, cycles.to_vec()).is_ok()
}

/// Splits a closed set into its indecomposable parts: the components of
/// the relation "shares an edge". Each part is itself closed, since all
/// uses of any edge stay within one part.
pub fn decompose_closed_set(cs: &ClosedSet) -> Vec<ClosedSet> {
    let k = cs.cycles.len();
    let edge_sets: Vec<HashSet<EdgeRef>> = cs
        .cycles
        .iter()
        .map(|c| c.edges().into_iter().collect())
        .collect();
    let mut comp = vec![usize::MAX; k];
    let mut parts = 0usize;
    for i in 0..k {
        if comp[i] != usize::MAX {
            continue;
        }
        comp[i] = parts;
        let mut stack = vec![i];
        while let Some(a) = stack.pop() {
            for b in 0..k {
                if comp[b] == usize::MAX && edge_sets[a].iter().any(|e| edge_sets[b].contains(e)) {
                    comp[b] = parts;
                    stack.push(b);
                }
            }
        }
        parts += 1;
    }
    (0..parts)
        .map(|p| {
            ClosedSet::from_validated(
                cs.cycles
                    .iter()
                    .zip(&comp)
                    .filter(|&(_, &c)| c == p)
                    .map(|(cyc, _)| cyc.clone())
                    .collect(),
            )
        })
        .collect()
}

/// Splits a simple (possibly chorded) cycle into induced cycles.
///
/// Repeatedly takes the chord whose shorter arc is shortest (ties to the
/// smallest position pair); the shorter arc closed by that chord is
/// chordless, the longer arc recurses. The result provably uses every
/// walk edge once and every cut chord twice, and that is re-verified
/// before returning.
pub fn refine_cycle(g: &Graph, walk: &[usize]) -> Result<Vec<InducedCycle>> {
    let k = walk.len();
    if k < 3 {
        return Err(Error::NotACycle {
            reason: format!("{k} vertices is too short"),
        });
    }
    let mut seen = 0u64;
    for &v in walk {
        if v >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                v,
                n: g.vertex_count(),
            });
        }
        if seen & bit(v) != 0 {
            return Err(Error::NotACycle {
                reason: format!("vertex {v} repeats"),
            });
        }
        seen |= bit(v);
    }
    for i in 0..k {
        let (u, v) = (walk[i], walk[(i + 1) % k]);
        if !g.has_edge(u, v) {
            return Err(Error::NotACycle {
                reason: format!("missing edge ({u}, {v})"),
            });
        }
    }
    let mut out = Vec::new();
    refine_into(g, walk.to_vec(), &mut out)?;
    // Postcondition: walk edges once each, chords twice, nothing else.
    let walk_edges: HashSet<EdgeRef> = (0..k)
        .map(|i| EdgeRef::new(walk[i], walk[(i + 1) % k]))
        .collect();
    let mut usage: HashMap<EdgeRef, usize> = HashMap::new();
    for c in &out {
        for e in c.edges() {
            *usage.entry(e).or_insert(0) += 1;
        }
    }
    for e in &walk_edges {
        if usage.get(e).copied().unwrap_or(0) != 1 {
            return Err(Error::Refinement {
                reason: format!("cycle edge {e} not covered exactly once"),
            });
        }
    }
    for (e, &count) in &usage {
        if !walk_edges.contains(e) && count != 2 {
            return Err(Error::Refinement {
                reason: format!("chord {e} used {count} times, expected 2"),
            });
        }
    }
    Ok(out)
}

fn refine_into(g: &Graph, walk: Vec<usize>, out: &mut Vec<InducedCycle>) -> Result<()> {
    let k = walk.len();
    let mut best: Option<(usize, usize, usize)> = None;
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if consecutive || !g.has_edge(walk[i], walk[j]) {
                continue;
            }
            let arc = (j - i).min(k - (j - i));
            if best.map(|(a, _, _)| arc < a).unwrap_or(true) {
                best = Some((arc, i, j));
            }
        }
    }
    let Some((_, i, j)) = best else {
        out.push(InducedCycle::new(g, &walk)?);
        return Ok(());
    };
    let forward = j - i;
    let (short, long): (Vec<usize>, Vec<usize>) = if forward <= k - forward {
        (
            walk[i..=j].to_vec(),
            walk[j..].iter().chain(&walk[..=i]).copied().collect(),
        )
    } else {
        (
            walk[j..].iter().chain(&walk[..=i]).copied().collect(),
            walk[i..=j].to_vec(),
        )
    };
    out.push(InducedCycle::new(g, &short)?);
    refine_into(g, long, out)
}

const SURFACE_MAX_VERTICES: usize = 10;
const SURFACE_MAX_CYCLES: usize = 64;

/// Shared machinery for the closed-surface searches: all induced cycles
/// of the graph with their edge sets as bitmasks over the edge list.
struct SurfaceContext<'g> {
    g: &'g Graph,
    cycles: Vec<InducedCycle>,
    edge_masks: Vec<u64>,
}

/// One subset's backtracking state: the candidate cycles (ids into the
/// context) that fit inside the subset, ordered shortest first.
struct SubsetSearch {
    ids: Vec<usize>,
    masks: Vec<u64>,
    vbits: Vec<u64>,
    /// Per edge index, the last candidate position using it.
    max_user: Vec<usize>,
    target: u64,
}

impl<'g> SurfaceContext<'g> {
    fn new(g: &'g Graph) -> Result<SurfaceContext<'g>> {
        let n = g.vertex_count();
        if n > SURFACE_MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertex count",
                value: n,
                max: SURFACE_MAX_VERTICES,
            });
        }
        let cycles = enumerate_induced_cycles(g)?;
        if cycles.len() > SURFACE_MAX_CYCLES {
            return Err(Error::TooManyCycles {
                count: cycles.len(),
                max: SURFACE_MAX_CYCLES,
            });
        }
        let edge_index: HashMap<EdgeRef, usize> = g
            .edges()
            .into_iter()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let edge_masks = cycles
            .iter()
            .map(|c| {
                c.edges()
                    .iter()
                    .fold(0u64, |m, e| m | 1u64 << edge_index[e])
            })
            .collect();
        Ok(SurfaceContext {
            g,
            cycles,
            edge_masks,
        })
    }

    fn subset_search(&self, target: u64) -> SubsetSearch {
        let mut ids: Vec<usize> = (0..self.cycles.len())
            .filter(|&i| self.cycles[i].bits() & !target == 0)
            .collect();
        ids.sort_by_key(|&i| (self.cycles[i].len(), i));
        let masks: Vec<u64> = ids.iter().map(|&i| self.edge_masks[i]).collect();
        let vbits: Vec<u64> = ids.iter().map(|&i| self.cycles[i].bits()).collect();
        let mut max_user = vec![0usize; self.g.edge_count()];
        for (pos, mask) in masks.iter().enumerate() {
            for e in bits_iter(*mask) {
                max_user[e] = pos;
            }
        }
        SubsetSearch {
            ids,
            masks,
            vbits,
            max_user,
            target,
        }
    }

    /// Spans of the minimal closed surfaces with one witness cycle set
    /// each, in increasing popcount and numeric order.
    fn minimal_spans(&self, meter: &mut Meter) -> Result<Vec<(u64, Vec<usize>)>> {
        let n = self.g.vertex_count();
        let mut by_pop: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
        for u in 0..(1u64 << n) {
            by_pop[u.count_ones() as usize].push(u);
        }
        let mut found: Vec<(u64, Vec<usize>)> = Vec::new();
        for pop in 3..=n {
            for &u in &by_pop[pop] {
                meter.spend(1)?;
                // Supersets of a known surface cannot be minimal, and
                // any vertex with fewer than two in-set neighbors cannot
                // lie on an in-set cycle. Disconnected sets split into
                // closed parts, so they are never minimal either.
                if found.iter().any(|&(span, _)| span & !u == 0) {
                    continue;
                }
                if bits_iter(u).any(|v| (self.g.neighbors_bits(v) & u).count_ones() < 2) {
                    continue;
                }
                if !self.g.connected_within(u) {
                    continue;
                }
                let search = self.subset_search(u);
                if search.ids.is_empty() {
                    continue;
                }
                let mut chosen = Vec::new();
                if search.first(0, 0, 0, 0, &mut chosen, meter)? {
                    let ids = chosen.iter().map(|&pos| search.ids[pos]).collect();
                    found.push((u, ids));
                }
            }
        }
        Ok(found)
    }
}

impl SubsetSearch {
    fn pending_unfillable(&self, k: usize, used_once: u64) -> bool {
        bits_iter(used_once).any(|e| self.max_user[e] < k)
    }

    /// Finds one spanning closed set, leaving it in `chosen` (positions
    /// into the candidate list).
    fn first(
        &self,
        k: usize,
        used_once: u64,
        used_twice: u64,
        covered: u64,
        chosen: &mut Vec<usize>,
        meter: &mut Meter,
    ) -> Result<bool> {
        meter.spend(1)?;
        if used_once == 0 && covered == self.target && !chosen.is_empty() {
            return Ok(true);
        }
        if k == self.masks.len() || self.pending_unfillable(k, used_once) {
            return Ok(false);
        }
        if self.masks[k] & used_twice == 0 {
            chosen.push(k);
            let took = self.first(
                k + 1,
                used_once ^ self.masks[k],
                used_twice | (used_once & self.masks[k]),
                covered | self.vbits[k],
                chosen,
                meter,
            )?;
            if took {
                return Ok(true);
            }
            chosen.pop();
        }
        self.first(k + 1, used_once, used_twice, covered, chosen, meter)
    }

    /// Collects the edge sets (bitmasks over the graph's edge list) of
    /// every spanning closed set.
    fn all_edge_sets(
        &self,
        k: usize,
        used_once: u64,
        used_twice: u64,
        covered: u64,
        any: bool,
        acc: &mut HashSet<u64>,
        meter: &mut Meter,
    ) -> Result<()> {
        meter.spend(1)?;
        if used_once == 0 && covered == self.target && any {
            acc.insert(used_twice);
        }
        if k == self.masks.len() || self.pending_unfillable(k, used_once) {
            return Ok(());
        }
        if self.masks[k] & used_twice == 0 {
            self.all_edge_sets(
                k + 1,
                used_once ^ self.masks[k],
                used_twice | (used_once & self.masks[k]),
                covered | self.vbits[k],
                true,
                acc,
                meter,
            )?;
        }
        self.all_edge_sets(k + 1, used_once, used_twice, covered, any, acc, meter)
    }
}

/// Finds every minimal closed surface of `g` by direct search over
/// vertex subsets, one witness closed set per surface, ordered by
/// subset size then numeric vertex mask. Independent of the shape
/// recognizers; supported to 10 vertices and 64 induced cycles.
pub fn enumerate_minimal_closed_surfaces(g: &Graph, budget: Budget) -> Result<Vec<ClosedSet>> {
    let ctx = SurfaceContext::new(g)?;
    let mut meter = Meter::new(budget);
    ctx.minimal_spans(&mut meter)?
        .into_iter()
        .map(|(_, ids)| {
            ClosedSet::new(g, ids.iter().map(|&i| ctx.cycles[i].clone()).collect())
        })
        .collect()
}

/// Probes whether any minimal closed surface is spanned by closed sets
/// with *different* edge unions. Returns the offending vertex sets with
/// their count of distinct edge unions; empty means every minimal
/// surface pins down its edges uniquely.
pub fn strong_minimality_violations(
    g: &Graph,
    budget: Budget,
) -> Result<Vec<(Vec<usize>, usize)>> {
    let ctx = SurfaceContext::new(g)?;
    let mut meter = Meter::new(budget);
    let spans = ctx.minimal_spans(&mut meter)?;
    let mut violations = Vec::new();
    for (u, _) in spans {
        let search = ctx.subset_search(u);
        let mut edge_sets = HashSet::new();
        search.all_edge_sets(0, 0, 0, 0, false, &mut edge_sets, &mut meter)?;
        if edge_sets.len() > 1 {
            violations.push((bits_iter(u).collect(), edge_sets.len()));
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits_of(vs: &[usize]) -> u64 {
        vs.iter().fold(0u64, |b, &v| b | bit(v))
    }

    fn solid_sets(solids: &[Solid]) -> HashSet<u64> {
        solids.iter().map(|s| s.bits()).collect()
    }

    fn surface_sets(surfaces: &[ClosedSet]) -> HashSet<u64> {
        surfaces.iter().map(|s| s.span_bits()).collect()
    }

    fn three_way(g: &Graph) -> Vec<Solid> {
        let solids = enumerate_solids(g).unwrap();
        let brute = enumerate_solids_bruteforce(g).unwrap();
        assert_eq!(solids, brute, "pair generation vs subset scan");
        let surfaces = enumerate_minimal_closed_surfaces(g, Budget::default()).unwrap();
        assert_eq!(
            solid_sets(&solids),
            surface_sets(&surfaces),
            "solids vs minimal closed surfaces"
        );
        solids
    }

    /// Three internally disjoint paths between 0 and 1 with the given
    /// interior sizes.
    fn theta(interiors: [usize; 3]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 2;
        for &len in &interiors {
            if len == 0 {
                edges.push((0, 1));
                continue;
            }
            let chain: Vec<usize> = (next..next + len).collect();
            next += len;
            edges.push((0, chain[0]));
            for w in chain.windows(2) {
                edges.push((w[0], w[1]));
            }
            edges.push((*chain.last().unwrap(), 1));
        }
        Graph::from_edges(next, &edges).unwrap()
    }

    fn prism() -> Graph {
        Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap()
    }

    /// Triangle 0,1,2 with paths through 4, 5, 6 meeting at 3.
    fn stamp() -> Graph {
        Graph::from_edges(
            7,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (0, 4),
                (4, 3),
                (1, 5),
                (5, 3),
                (2, 6),
                (6, 3),
            ],
        )
        .unwrap()
    }

    #[test]
    fn octahedron_solids_are_six_pyramids() {
        let g = Graph::octahedron();
        let solids = three_way(&g);
        assert_eq!(solids.len(), 6);
        assert!(solids.iter().all(|s| s.kind() == SolidKind::Pyramid));
        let expected: HashSet<u64> = (0..6).map(|v| g.full_bits() & !bit(v)).collect();
        assert_eq!(solid_sets(&solids), expected);
        assert_eq!(classify_solid(&g, g.full_bits()), None);
        assert_eq!(classify_solid(&g, bits_of(&[0, 1, 2, 4])), None);
    }

    #[test]
    fn complete_graph_solids_are_four_subsets() {
        assert_eq!(classify_solid(&Graph::complete(4), 0b1111), Some(SolidKind::Pyramid));
        let solids = three_way(&Graph::complete(5));
        assert_eq!(solids.len(), 5);
        assert!(solids.iter().all(|s| s.len() == 4));
        let k6 = three_way(&Graph::complete(6));
        assert_eq!(k6.len(), 15);
    }

    #[test]
    fn theta_shapes() {
        assert_eq!(
            classify_solid(&Graph::complete_bipartite(2, 3), 0b11111),
            Some(SolidKind::Trihedron)
        );
        let t = theta([1, 1, 2]);
        let solids = three_way(&t);
        assert_eq!(solids.len(), 1);
        assert_eq!(solids[0].kind(), SolidKind::Trihedron);
        assert_eq!(solids[0].bits(), t.full_bits());
        // A bare edge as one of the paths never spans a closed set.
        assert!(three_way(&theta([0, 1, 1])).is_empty());
        assert!(three_way(&theta([0, 1, 2])).is_empty());
        assert!(three_way(&Graph::cycle(6)).is_empty());
        assert!(three_way(&Graph::path(5)).is_empty());
    }

    #[test]
    fn stamp_and_prism_shapes() {
        let s = stamp();
        let solids = three_way(&s);
        assert_eq!(solids.len(), 1);
        assert_eq!(solids[0].kind(), SolidKind::Stamp);
        assert_eq!(solids[0].bits(), s.full_bits());

        let p = prism();
        let solids = three_way(&p);
        assert_eq!(solids.len(), 1);
        assert_eq!(solids[0].kind(), SolidKind::Prism);

        let stretched = p.subdivide_edge(EdgeRef::new(0, 3), 2).unwrap();
        let solids = three_way(&stretched);
        assert_eq!(solids.len(), 1);
        assert_eq!(solids[0].kind(), SolidKind::Prism);
        assert_eq!(solids[0].len(), 7);
    }

    #[test]
    fn petersen_three_way_agreement() {
        let g = Graph::petersen();
        let solids = three_way(&g);
        assert!(!solids.is_empty());
        let known = bits_of(&[0, 1, 2, 4, 5, 7, 9]);
        assert_eq!(classify_solid(&g, known), Some(SolidKind::Trihedron));
        assert!(solid_sets(&solids).contains(&known));
    }

    #[test]
    fn random_graphs_three_way_agreement() {
        for seed in 0..12 {
            let g = crate::graph::random_connected_graph(7, 0.45, 500 + seed).unwrap();
            three_way(&g);
        }
    }

    #[test]
    fn closed_set_validation() {
        let g = Graph::octahedron();
        let cycles = enumerate_induced_cycles(&g).unwrap();
        let faces: Vec<InducedCycle> = cycles.iter().filter(|c| c.len() == 3).cloned().collect();
        assert_eq!(faces.len(), 8);
        let cs = ClosedSet::new(&g, faces.clone()).unwrap();
        assert_eq!(cs.span_bits(), g.full_bits());
        assert_eq!(cs.edge_set().len(), 12);
        assert_eq!(decompose_closed_set(&cs).len(), 1);

        assert!(matches!(
            ClosedSet::new(&g, faces[..7].to_vec()),
            Err(Error::NotClosed { .. })
        ));
        assert!(matches!(
            ClosedSet::new(&g, Vec::new()),
            Err(Error::NotClosed { .. })
        ));
        let mut dup = faces.clone();
        dup.push(faces[0].clone());
        assert!(matches!(
            ClosedSet::new(&g, dup),
            Err(Error::DuplicateCycle { .. })
        ));
        // Cycles from a different graph are rejected.
        let foreign = enumerate_induced_cycles(&Graph::cycle(5)).unwrap();
        assert!(matches!(
            ClosedSet::new(&Graph::path(5), foreign),
            Err(Error::NotInducedCycle { index: 0 })
        ));
        assert!(is_closed_set(&g, &faces));
        assert!(!is_closed_set(&g, &faces[..4]));
    }

    #[test]
    fn decompose_splits_disjoint_tetrahedra() {
        let mut edges = Vec::new();
        for part in 0..2 {
            let base = part * 4;
            for i in 0..4 {
                for j in i + 1..4 {
                    edges.push((base + i, base + j));
                }
            }
        }
        let g = Graph::from_edges(8, &edges).unwrap();
        let cycles = enumerate_induced_cycles(&g).unwrap();
        assert_eq!(cycles.len(), 8);
        let cs = ClosedSet::new(&g, cycles).unwrap();
        let parts = decompose_closed_set(&cs);
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.len() == 4));
        assert_eq!(
            parts[0].span_bits() | parts[1].span_bits(),
            g.full_bits()
        );
    }

    #[test]
    fn refine_cycle_splits_along_chords() {
        // Square plus one diagonal: the 4-walk splits into 2 triangles.
        let mut g = Graph::cycle(4);
        g.add_edge(0, 2).unwrap();
        let parts = refine_cycle(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|c| c.len() == 3));

        // Chordless input comes back unchanged.
        let c5 = Graph::cycle(5);
        let parts = refine_cycle(&c5, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].len(), 5);

        // A 5-walk in K5 refines into triangles.
        let parts = refine_cycle(&Graph::complete(5), &[0, 1, 2, 3, 4]).unwrap();
        assert!(parts.iter().all(|c| c.len() == 3));
        assert_eq!(parts.len(), 3);

        assert!(matches!(
            refine_cycle(&c5, &[0, 1, 3]),
            Err(Error::NotACycle { .. })
        ));
        assert!(matches!(
            refine_cycle(&c5, &[0, 1]),
            Err(Error::NotACycle { .. })
        ));
    }

    #[test]
    fn refinement_usage_property() {
        // Complete graphs: the all-vertex walk is maximally chorded and
        // must come back as n - 2 triangles (the postcondition inside
        // refine_cycle asserts the edge-usage bookkeeping).
        for n in 4..=8 {
            let walk: Vec<usize> = (0..n).collect();
            let parts = refine_cycle(&Graph::complete(n), &walk).unwrap();
            assert_eq!(parts.len(), n - 2);
            assert!(parts.iter().all(|c| c.len() == 3));
        }
        // Wheel: a walk detouring through the hub splits into triangles.
        let (w4, apex) = Graph::cycle(4).cone().unwrap();
        let parts = refine_cycle(&w4, &[0, 1, apex, 2, 3]).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|c| c.len() == 3));
        // Induced inputs come back as themselves.
        for seed in 0..10 {
            let g = crate::graph::random_connected_graph(8, 0.5, 900 + seed).unwrap();
            for c in enumerate_induced_cycles(&g).unwrap() {
                let parts = refine_cycle(&g, c.vertices()).unwrap();
                assert_eq!(parts, vec![c]);
            }
        }
    }

    #[test]
    fn surfaces_respect_limits() {
        assert!(matches!(
            enumerate_minimal_closed_surfaces(&Graph::complete(9), Budget::default()),
            Err(Error::TooManyCycles { count: 84, max: 64 })
        ));
        assert!(matches!(
            enumerate_minimal_closed_surfaces(&Graph::path(11), Budget::default()),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            enumerate_minimal_closed_surfaces(&Graph::octahedron(), Budget::new(10)),
            Err(Error::BudgetExhausted { cap: 10 })
        ));
        assert!(matches!(
            enumerate_solids_bruteforce(&Graph::empty(13)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn strong_minimality_holds_on_small_corpus() {
        for g in [
            Graph::octahedron(),
            Graph::petersen(),
            Graph::complete(6),
            prism(),
            stamp(),
            theta([1, 2, 2]),
        ] {
            let v = strong_minimality_violations(&g, Budget::default()).unwrap();
            assert!(v.is_empty(), "unexpected violation: {v:?}");
        }
        for seed in 0..10 {
            let g = crate::graph::random_connected_graph(7, 0.5, 321 + seed).unwrap();
            assert!(strong_minimality_violations(&g, Budget::default())
                .unwrap()
                .is_empty());
        }
    }
}
