//! Exact desk-scale oracles: chromatic number, minor containment, the
//! largest complete minor, neighborhood compression, and planarity via
//! forbidden minors. All searches are deterministic, carry explicit size
//! caps, and spend from a node budget so a too-hard instance fails with
//! a distinct error instead of hanging.

use std::cmp::Reverse;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{bit, bits_iter, EdgeRef, Graph, VertexMap};
use crate::{Budget, Error, Meter, Result};

const CHROMATIC_MAX_VERTICES: usize = 16;
const MINOR_MAX_VERTICES: usize = 12;

/// A proper coloring, colors `0..count` indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    colors: Vec<usize>,
    count: usize,
}

impl Coloring {
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Panics when `v` is out of range.
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Color classes by color id, members ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.count];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.vertex_count()
            && self.colors.iter().all(|&c| c < self.count)
            && g.edges()
                .iter()
                .all(|e| self.colors[e.u] != self.colors[e.v])
    }
}

/// Exact chromatic number with a witness coloring.
///
/// Iterative deepening over the color count; for each count, a
/// backtracking search in descending-degree vertex order (ties to the
/// smaller id) with forward checking on per-vertex domain masks,
/// ascending value order, and the first-use symmetry break (a vertex may
/// open at most one new color). Deterministic; supported to 16 vertices.
pub fn chromatic_number(g: &Graph, budget: Budget) -> Result<(usize, Coloring)> {
    let n = g.vertex_count();
    if n > CHROMATIC_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            value: n,
            max: CHROMATIC_MAX_VERTICES,
        });
    }
    if n == 0 {
        return Ok((
            0,
            Coloring {
                colors: Vec::new(),
                count: 0,
            },
        ));
    }
    let mut meter = Meter::new(budget);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    for k in 1..=n {
        let mut colors = vec![usize::MAX; n];
        let mut domains = vec![(1u32 << k) - 1; n];
        if color_from(g, &order, 0, k, 0, &mut colors, &mut domains, &mut meter)? {
            // Success at the first feasible k means the coloring uses
            // exactly k colors: fewer would have succeeded earlier.
            return Ok((k, Coloring { colors, count: k }));
        }
    }
    unreachable!("every graph is colorable with one color per vertex")
}

#[allow(clippy::too_many_arguments)]
fn color_from(
    g: &Graph,
    order: &[usize],
    i: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
    domains: &mut [u32],
    meter: &mut Meter,
) -> Result<bool> {
    if i == order.len() {
        return Ok(true);
    }
    let v = order[i];
    let mut allowed = domains[v] & ((1u32 << (used + 1).min(k)) - 1);
    while allowed != 0 {
        let c = allowed.trailing_zeros() as usize;
        allowed &= allowed - 1;
        meter.spend(1)?;
        colors[v] = c;
        let mut touched: Vec<usize> = Vec::new();
        let mut dead = false;
        for w in bits_iter(g.neighbors_bits(v)) {
            if colors[w] == usize::MAX && domains[w] & (1 << c) != 0 {
                domains[w] &= !(1 << c);
                touched.push(w);
                if domains[w] == 0 {
                    dead = true;
                    break;
                }
            }
        }
        if !dead
            && color_from(g, order, i + 1, k, used.max(c + 1), colors, domains, meter)?
        {
            return Ok(true);
        }
        for &w in &touched {
            domains[w] |= 1 << c;
        }
        colors[v] = usize::MAX;
    }
    Ok(false)
}

/// Branch sets witnessing a minor: `branch_sets[p]` hosts pattern vertex
/// `p`; the sets are disjoint, each connected, and some edge joins the
/// sets of every adjacent pattern pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinorWitness {
    pub branch_sets: Vec<Vec<usize>>,
}

/// Searches for `pattern` as a minor of `g`, returning branch sets when
/// found. Deterministic; `g` supported to 12 vertices.
///
/// Branch sets are drawn from the precomputed connected vertex subsets
/// in increasing size; pattern vertices are placed in descending-degree
/// order. Interchangeable pattern vertices (equal neighborhoods, open or
/// closed) are ordered by their smallest host vertex, and a partial
/// placement is abandoned when a set's outside neighbors cannot supply
/// one fresh contact vertex per unplaced pattern neighbor.
pub fn has_minor(g: &Graph, pattern: &Graph, budget: Budget) -> Result<Option<MinorWitness>> {
    let n = g.vertex_count();
    if n > MINOR_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            value: n,
            max: MINOR_MAX_VERTICES,
        });
    }
    let k = pattern.vertex_count();
    if k == 0 {
        return Ok(Some(MinorWitness {
            branch_sets: Vec::new(),
        }));
    }
    if k > n || pattern.edge_count() > g.edge_count() {
        return Ok(None);
    }
    let mut candidates: Vec<(u64, u64)> = Vec::new();
    for s in 1u64..(1u64 << n) {
        if g.connected_within(s) {
            let nb = bits_iter(s).fold(0u64, |m, v| m | g.neighbors_bits(v)) & !s;
            candidates.push((s, nb));
        }
    }
    candidates.sort_by_key(|&(s, _)| (s.count_ones(), s));
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&p| (Reverse(pattern.degree(p)), p));
    let search = MinorSearch {
        g,
        pattern,
        order,
        twin_prev: twin_chains(pattern),
        candidates,
    };
    let mut assigned = vec![0u64; k];
    let mut assigned_nbrs = vec![0u64; k];
    let mut meter = Meter::new(budget);
    if search.place(0, 0, &mut assigned, &mut assigned_nbrs, &mut meter)? {
        Ok(Some(MinorWitness {
            branch_sets: assigned
                .iter()
                .map(|&s| bits_iter(s).collect())
                .collect(),
        }))
    } else {
        Ok(None)
    }
}

/// For each pattern vertex, the nearest earlier vertex it is
/// interchangeable with: same open neighborhood, or (for vertices
/// without such a partner) same closed neighborhood. Each relation is an
/// equivalence, and the two kinds of chain are kept disjoint, so forcing
/// host minima to increase along a chain loses no placements.
fn twin_chains(p: &Graph) -> Vec<Option<usize>> {
    let k = p.vertex_count();
    let mut prev = vec![None; k];
    let mut in_open = vec![false; k];
    for v in 0..k {
        for u in (0..v).rev() {
            if p.neighbors_bits(u) == p.neighbors_bits(v) {
                prev[v] = Some(u);
                in_open[u] = true;
                in_open[v] = true;
                break;
            }
        }
    }
    for v in 0..k {
        if in_open[v] {
            continue;
        }
        for u in (0..v).rev() {
            if in_open[u] {
                continue;
            }
            if p.neighbors_bits(u) | bit(u) == p.neighbors_bits(v) | bit(v) {
                prev[v] = Some(u);
                break;
            }
        }
    }
    prev
}

struct MinorSearch<'a> {
    g: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    twin_prev: Vec<Option<usize>>,
    candidates: Vec<(u64, u64)>,
}

impl MinorSearch<'_> {
    fn place(
        &self,
        i: usize,
        used: u64,
        assigned: &mut [u64],
        assigned_nbrs: &mut [u64],
        meter: &mut Meter,
    ) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        let p = self.order[i];
        let pn = self.pattern.neighbors_bits(p);
        let need_later = bits_iter(pn).filter(|&q| assigned[q] == 0).count();
        let remaining_positions = self.order.len() - i - 1;
        let n = self.g.vertex_count();
        for &(s, snb) in &self.candidates {
            meter.spend(1)?;
            if s & used != 0 {
                continue;
            }
            if let Some(q) = self.twin_prev[p] {
                if assigned[q] != 0 && s.trailing_zeros() <= assigned[q].trailing_zeros() {
                    continue;
                }
            }
            if bits_iter(pn).any(|q| assigned[q] != 0 && assigned_nbrs[q] & s == 0) {
                continue;
            }
            let free = !(used | s);
            if ((snb & free).count_ones() as usize) < need_later {
                continue;
            }
            if n - ((used | s).count_ones() as usize) < remaining_positions {
                continue;
            }
            assigned[p] = s;
            assigned_nbrs[p] = snb;
            if self.place(i + 1, used | s, assigned, assigned_nbrs, meter)? {
                return Ok(true);
            }
            assigned[p] = 0;
            assigned_nbrs[p] = 0;
        }
        Ok(false)
    }
}

/// True when the complete graph on `t` vertices is a minor of `g`.
pub fn has_complete_minor(g: &Graph, t: usize, budget: Budget) -> Result<bool> {
    Ok(has_minor(g, &Graph::complete(t), budget)?.is_some())
}

/// The largest complete minor, with a replayable witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HadwigerWitness {
    pub order: usize,
    /// Covering extension of the branch sets: every vertex belongs to
    /// exactly one set.
    pub branch_sets: Vec<Vec<usize>>,
    /// Edge contractions, each in the coordinates current at its turn;
    /// replaying them on the original graph ends at the complete graph
    /// on `order` vertices.
    pub contractions: Vec<EdgeRef>,
}

impl HadwigerWitness {
    pub fn replay(&self, g: &Graph) -> Result<Graph> {
        let mut cur = g.clone();
        for &e in &self.contractions {
            cur = cur.contract_edge(e)?.0;
        }
        Ok(cur)
    }
}

/// Largest `t` such that the complete graph on `t` vertices is a minor
/// of `g`; requires a connected, nonempty graph of at most 12 vertices.
///
/// The witness branch sets are grown to cover every vertex (smallest
/// unclaimed vertex joins its lowest-numbered adjacent set) and the
/// contraction script takes the lexicographically least in-set edge at
/// every step, so reruns are byte-identical.
pub fn hadwiger_number(g: &Graph, budget: Budget) -> Result<(usize, HadwigerWitness)> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MINOR_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            value: n,
            max: MINOR_MAX_VERTICES,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut order = 1;
    let mut sets: Vec<u64> = vec![bit(0)];
    for t in 2..=n {
        match has_minor(g, &Graph::complete(t), budget)? {
            Some(w) => {
                order = t;
                sets = w
                    .branch_sets
                    .iter()
                    .map(|s| s.iter().fold(0u64, |b, &v| b | bit(v)))
                    .collect();
            }
            None => break,
        }
    }
    // Cover the leftover vertices.
    let mut covered = sets.iter().fold(0u64, |b, &s| b | s);
    while covered != g.full_bits() {
        let mut attached = false;
        'scan: for v in bits_iter(g.full_bits() & !covered) {
            for s in sets.iter_mut() {
                if g.neighbors_bits(v) & *s != 0 {
                    *s |= bit(v);
                    covered |= bit(v);
                    attached = true;
                    break 'scan;
                }
            }
        }
        assert!(attached, "a connected graph always offers an attachment");
    }
    // Contract each set to a point, least internal edge first.
    let mut contractions = Vec::new();
    let mut cur = g.clone();
    let mut acc = VertexMap::identity(n);
    loop {
        let mut pick: Option<EdgeRef> = None;
        for &s in &sets {
            let img = acc.image_bits(s);
            if img.count_ones() < 2 {
                continue;
            }
            for u in bits_iter(img) {
                let above = img & cur.neighbors_bits(u) & !((bit(u) << 1) - 1);
                if above != 0 {
                    let e = EdgeRef::new(u, above.trailing_zeros() as usize);
                    if pick.map_or(true, |p| e < p) {
                        pick = Some(e);
                    }
                    break;
                }
            }
        }
        let Some(e) = pick else { break };
        let (next, m) = cur.contract_edge(e)?;
        cur = next;
        acc = acc.compose(&m);
        contractions.push(e);
    }
    debug_assert_eq!(cur, Graph::complete(order));
    Ok((
        order,
        HadwigerWitness {
            order,
            branch_sets: sets.iter().map(|&s| bits_iter(s).collect()).collect(),
            contractions,
        },
    ))
}

/// Planarity for graphs of at most 12 vertices, by the absence of the
/// two forbidden minors (complete on 5, complete bipartite 3 + 3).
pub fn is_planar_small(g: &Graph, budget: Budget) -> Result<bool> {
    Ok(has_minor(g, &Graph::complete(5), budget)?.is_none()
        && has_minor(g, &Graph::complete_bipartite(3, 3), budget)?.is_none())
}

/// Contracts the classes of one partition of `w`'s closed neighborhood,
/// smallest class member first, composing the maps.
fn merge_classes(g: &Graph, classes: &[Vec<usize>]) -> Result<(Graph, VertexMap)> {
    let mut cur = g.clone();
    let mut acc = VertexMap::identity(g.vertex_count());
    for class in classes {
        for &v in &class[1..] {
            let a = acc.apply(class[0]).expect("contractions keep all vertices");
            let b = acc.apply(v).expect("contractions keep all vertices");
            let (next, m) = cur.contract_nonedge(a.min(b), a.max(b))?;
            cur = next;
            acc = acc.compose(&m);
        }
    }
    Ok((cur, acc))
}

/// Compresses the closed neighborhood of `w`: the induced subgraph on
/// `w` and its neighbors is optimally colored, and each color class is
/// contracted to one vertex, turning that subgraph into a complete graph
/// on its chromatic number of vertices. `w` always sits in a singleton
/// class. Already-complete neighborhoods come back unchanged.
///
/// The resulting graph does not depend on the order classes are merged
/// in: classes are disjoint, so contractions inside one never create an
/// edge inside another.
pub fn vertex_compress(g: &Graph, w: usize, budget: Budget) -> Result<(Graph, VertexMap)> {
    let n = g.vertex_count();
    if w >= n {
        return Err(Error::VertexOutOfRange { v: w, n });
    }
    let closed = g.neighbors_bits(w) | bit(w);
    let (gw, _) = g.induced_bits(closed);
    let (_, coloring) = chromatic_number(&gw, budget)?;
    let local: Vec<usize> = bits_iter(closed).collect();
    let mut classes: Vec<Vec<usize>> = coloring
        .classes()
        .into_iter()
        .map(|cls| cls.into_iter().map(|i| local[i]).collect())
        .collect();
    classes.sort_by_key(|c| c[0]);
    merge_classes(g, &classes)
}

/// [`vertex_compress`] with a caller-supplied partition: the classes
/// must cover `w`'s closed neighborhood exactly, be pairwise disjoint
/// and internally edge-free, and number exactly the chromatic number of
/// the neighborhood subgraph.
pub fn vertex_compress_with(
    g: &Graph,
    w: usize,
    classes: &[Vec<usize>],
    budget: Budget,
) -> Result<(Graph, VertexMap)> {
    let n = g.vertex_count();
    if w >= n {
        return Err(Error::VertexOutOfRange { v: w, n });
    }
    let closed = g.neighbors_bits(w) | bit(w);
    let mut seen = 0u64;
    for class in classes {
        if class.is_empty() {
            return Err(Error::BadColoring {
                reason: "empty class".to_string(),
            });
        }
        for &v in class {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if seen & bit(v) != 0 {
                return Err(Error::BadColoring {
                    reason: format!("vertex {v} appears in two classes"),
                });
            }
            if closed & bit(v) == 0 {
                return Err(Error::BadColoring {
                    reason: format!("vertex {v} is outside the closed neighborhood of {w}"),
                });
            }
            seen |= bit(v);
        }
        for (i, &u) in class.iter().enumerate() {
            for &v in &class[i + 1..] {
                if g.has_edge(u, v) {
                    return Err(Error::BadColoring {
                        reason: format!("class is not independent: {u} and {v} are adjacent"),
                    });
                }
            }
        }
    }
    if seen != closed {
        return Err(Error::BadColoring {
            reason: "classes do not cover the closed neighborhood".to_string(),
        });
    }
    let (gw, _) = g.induced_bits(closed);
    let (chi, _) = chromatic_number(&gw, budget)?;
    if classes.len() != chi {
        return Err(Error::BadColoring {
            reason: format!(
                "{} classes given, an optimal coloring of the neighborhood has {chi}",
                classes.len()
            ),
        });
    }
    let mut sorted: Vec<Vec<usize>> = classes.to_vec();
    for c in &mut sorted {
        c.sort_unstable();
    }
    sorted.sort();
    merge_classes(g, &sorted)
}

/// All partitions of the vertices into exactly chromatic-number many
/// independent classes, at most `cap` of them, in the canonical
/// first-use enumeration order. Classes are sorted and keyed by their
/// smallest member; each partition appears exactly once.
pub fn optimal_partitions(
    g: &Graph,
    cap: usize,
    budget: Budget,
) -> Result<Vec<Vec<Vec<usize>>>> {
    let n = g.vertex_count();
    let (chi, _) = chromatic_number(g, budget)?;
    if n == 0 {
        return Ok(if cap == 0 { Vec::new() } else { vec![Vec::new()] });
    }
    let mut meter = Meter::new(budget);
    let mut colors = vec![usize::MAX; n];
    let mut out = Vec::new();
    enumerate_colorings(g, 0, chi, 0, &mut colors, cap, &mut out, &mut meter)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_colorings(
    g: &Graph,
    v: usize,
    k: usize,
    used: usize,
    colors: &mut Vec<usize>,
    cap: usize,
    out: &mut Vec<Vec<Vec<usize>>>,
    meter: &mut Meter,
) -> Result<()> {
    if out.len() >= cap {
        return Ok(());
    }
    if v == g.vertex_count() {
        let mut classes = vec![Vec::new(); k];
        for (u, &c) in colors.iter().enumerate() {
            classes[c].push(u);
        }
        out.push(classes);
        return Ok(());
    }
    for c in 0..(used + 1).min(k) {
        meter.spend(1)?;
        let conflict = bits_iter(g.neighbors_bits(v) & (bit(v) - 1)).any(|w| colors[w] == c);
        if conflict {
            continue;
        }
        colors[v] = c;
        enumerate_colorings(g, v + 1, k, used.max(c + 1), colors, cap, out, meter)?;
        colors[v] = usize::MAX;
    }
    Ok(())
}

/// Repeatedly compresses a randomly chosen vertex whose closed
/// neighborhood is not yet complete, until the whole graph is complete.
/// Returns the full trajectory, input first. Deterministic in `seed`.
pub fn compress_to_complete(g: &Graph, seed: u64, budget: Budget) -> Result<Vec<Graph>> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut steps = vec![g.clone()];
    loop {
        let cur = steps.last().expect("trajectory starts nonempty");
        let cands: Vec<usize> = cur
            .vertices()
            .filter(|&w| !cur.is_clique(cur.neighbors_bits(w) | bit(w)))
            .collect();
        if cands.is_empty() {
            return Ok(steps);
        }
        let w = cands[rng.random_range(0..cands.len())];
        let (next, _) = vertex_compress(cur, w, budget)?;
        steps.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(g: &Graph) -> usize {
        let (k, coloring) = chromatic_number(g, Budget::default()).unwrap();
        assert!(coloring.is_proper(g));
        assert_eq!(coloring.count(), k);
        let distinct: std::collections::HashSet<usize> =
            coloring.colors().iter().copied().collect();
        assert_eq!(distinct.len(), k, "witness must use every color");
        k
    }

    fn hadwiger(g: &Graph) -> usize {
        let (h, w) = hadwiger_number(g, Budget::default()).unwrap();
        assert_eq!(w.order, h);
        // Branch sets partition the vertices.
        let mut seen = 0u64;
        for s in &w.branch_sets {
            for &v in s {
                assert_eq!(seen & bit(v), 0, "branch sets overlap");
                seen |= bit(v);
            }
        }
        assert_eq!(seen, g.full_bits(), "branch sets must cover");
        assert_eq!(w.replay(g).unwrap(), Graph::complete(h), "replay");
        h
    }

    fn verify_minor(g: &Graph, pattern: &Graph, w: &MinorWitness) {
        assert_eq!(w.branch_sets.len(), pattern.vertex_count());
        let bits: Vec<u64> = w
            .branch_sets
            .iter()
            .map(|s| s.iter().fold(0u64, |b, &v| b | bit(v)))
            .collect();
        let mut seen = 0u64;
        for &s in &bits {
            assert!(s != 0 && seen & s == 0, "sets must be nonempty and disjoint");
            assert!(g.connected_within(s), "sets must be connected");
            seen |= s;
        }
        for e in pattern.edges() {
            let linked = bits_iter(bits[e.u])
                .any(|v| g.neighbors_bits(v) & bits[e.v] != 0);
            assert!(linked, "pattern edge {e} has no host edge");
        }
    }

    #[test]
    fn chromatic_known_values() {
        for n in 1..=8 {
            assert_eq!(chi(&Graph::complete(n)), n);
        }
        for n in 3..=9 {
            assert_eq!(chi(&Graph::cycle(n)), if n % 2 == 0 { 2 } else { 3 });
        }
        assert_eq!(chi(&Graph::empty(5)), 1);
        assert_eq!(chi(&Graph::path(6)), 2);
        assert_eq!(chi(&Graph::complete_bipartite(3, 3)), 2);
        assert_eq!(chi(&Graph::petersen()), 3);
        assert_eq!(chi(&Graph::octahedron()), 3);
        let (w5, _) = Graph::cycle(5).cone().unwrap();
        assert_eq!(chi(&w5), 4);
        assert_eq!(
            chromatic_number(&Graph::empty(0), Budget::default()).unwrap().0,
            0
        );
    }

    #[test]
    fn chromatic_guards() {
        assert!(matches!(
            chromatic_number(&Graph::empty(17), Budget::default()),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            chromatic_number(&Graph::petersen(), Budget::new(3)),
            Err(Error::BudgetExhausted { cap: 3 })
        ));
        let a = chromatic_number(&Graph::petersen(), Budget::default()).unwrap();
        let b = chromatic_number(&Graph::petersen(), Budget::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn contracting_a_nonedge_moves_chi_by_at_most_one() {
        let mut graphs = vec![
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::complete_bipartite(3, 3),
            Graph::octahedron(),
            Graph::path(6),
        ];
        for seed in 0..5 {
            graphs.push(crate::graph::random_connected_graph(7, 0.5, 40 + seed).unwrap());
        }
        for g in &graphs {
            let base = chi(g);
            let mut any_equal = false;
            for (u, v) in g.non_edges() {
                let (h, _) = g.contract_nonedge(u, v).unwrap();
                let after = chi(&h);
                assert!(
                    after == base || after == base + 1,
                    "chi jumped from {base} to {after}"
                );
                any_equal |= after == base;
            }
            if !g.is_clique(g.full_bits()) {
                assert!(any_equal, "some identification must preserve chi");
            }
        }
    }

    #[test]
    fn minor_search_known_cases() {
        let petersen = Graph::petersen();
        let w = has_minor(&petersen, &Graph::complete(5), Budget::default())
            .unwrap()
            .expect("five spokes contract to the complete graph");
        verify_minor(&petersen, &Graph::complete(5), &w);
        assert!(has_minor(&petersen, &Graph::complete(6), Budget::default())
            .unwrap()
            .is_none());
        let k33 = Graph::complete_bipartite(3, 3);
        let w = has_minor(&petersen, &k33, Budget::default()).unwrap().unwrap();
        verify_minor(&petersen, &k33, &w);

        assert!(has_minor(&Graph::cycle(5), &Graph::complete(4), Budget::default())
            .unwrap()
            .is_none());
        let c5 = Graph::cycle(5);
        let w = has_minor(&c5, &Graph::complete(3), Budget::default())
            .unwrap()
            .unwrap();
        verify_minor(&c5, &Graph::complete(3), &w);

        // A graph is always its own minor.
        for g in [Graph::octahedron(), Graph::petersen(), Graph::cycle(4)] {
            let w = has_minor(&g, &g, Budget::default()).unwrap().unwrap();
            verify_minor(&g, &g, &w);
        }
        // Pattern larger than the host fails immediately.
        assert!(has_minor(&c5, &Graph::complete(6), Budget::default())
            .unwrap()
            .is_none());
        assert!(matches!(
            has_minor(&Graph::empty(13), &Graph::complete(2), Budget::default()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn hadwiger_known_values() {
        for n in 1..=7 {
            assert_eq!(hadwiger(&Graph::complete(n)), n);
        }
        assert_eq!(hadwiger(&Graph::path(6)), 2);
        assert_eq!(hadwiger(&Graph::complete_bipartite(1, 5)), 2);
        for n in 3..=8 {
            assert_eq!(hadwiger(&Graph::cycle(n)), 3);
        }
        assert_eq!(hadwiger(&Graph::octahedron()), 4);
        assert_eq!(hadwiger(&Graph::complete_bipartite(3, 3)), 4);
        assert_eq!(hadwiger(&Graph::petersen()), 5);
        let prism = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(hadwiger(&prism), 4);
    }

    #[test]
    fn hadwiger_guards_and_determinism() {
        assert!(matches!(
            hadwiger_number(&Graph::empty(0), Budget::default()),
            Err(Error::EmptyGraph)
        ));
        assert!(matches!(
            hadwiger_number(&Graph::empty(3), Budget::default()),
            Err(Error::Disconnected)
        ));
        assert!(matches!(
            hadwiger_number(&Graph::petersen(), Budget::new(5)),
            Err(Error::BudgetExhausted { .. })
        ));
        let a = hadwiger_number(&Graph::petersen(), Budget::default()).unwrap();
        let b = hadwiger_number(&Graph::petersen(), Budget::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn planarity_by_forbidden_minors() {
        for g in [
            Graph::complete(4),
            Graph::octahedron(),
            Graph::cycle(7),
            Graph::path(9),
            Graph::complete_bipartite(2, 5),
        ] {
            assert!(is_planar_small(&g, Budget::default()).unwrap());
        }
        for g in [
            Graph::complete(5),
            Graph::complete(6),
            Graph::complete_bipartite(3, 3),
            Graph::petersen(),
        ] {
            assert!(!is_planar_small(&g, Budget::default()).unwrap());
        }
    }

    #[test]
    fn compress_c5_neighborhood() {
        let g = Graph::cycle(5);
        let (h, vm) = vertex_compress(&g, 0, Budget::default()).unwrap();
        assert_eq!(
            h,
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (1, 3)]).unwrap()
        );
        assert_eq!(vm.apply(4), Some(1));
        assert_eq!(vm.apply(1), Some(1));
        assert_eq!(chi(&h), 3);
    }

    #[test]
    fn compress_octahedron_neighborhood() {
        let g = Graph::octahedron();
        let (h, _) = vertex_compress(&g, 0, Budget::default()).unwrap();
        assert_eq!(
            h,
            Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
        );
        assert_eq!(chi(&h), 3);
    }

    #[test]
    fn compress_complete_neighborhood_is_identity() {
        let g = Graph::complete(5);
        for w in 0..5 {
            let (h, vm) = vertex_compress(&g, w, Budget::default()).unwrap();
            assert_eq!(h, g);
            assert!((0..5).all(|v| vm.apply(v) == Some(v)));
        }
        // A leaf's closed neighborhood is a single edge, also complete.
        let star = Graph::complete_bipartite(1, 3);
        let (h, _) = vertex_compress(&star, 1, Budget::default()).unwrap();
        assert_eq!(h, star);
        // The hub's neighborhood collapses the leaves to one vertex.
        let (h, _) = vertex_compress(&star, 0, Budget::default()).unwrap();
        assert_eq!(h, Graph::complete(2));
    }

    #[test]
    fn compress_with_validates_partitions() {
        let g = Graph::cycle(5);
        let ok = vertex_compress_with(&g, 0, &[vec![0], vec![1, 4]], Budget::default()).unwrap();
        assert_eq!(ok.0, vertex_compress(&g, 0, Budget::default()).unwrap().0);
        // Same classes, different order: same result.
        let swapped =
            vertex_compress_with(&g, 0, &[vec![4, 1], vec![0]], Budget::default()).unwrap();
        assert_eq!(swapped.0, ok.0);

        let err = vertex_compress_with(&g, 0, &[vec![0], vec![1], vec![4]], Budget::default());
        assert!(matches!(err, Err(Error::BadColoring { .. })), "wrong count");
        let err = vertex_compress_with(&g, 0, &[vec![0, 1], vec![4]], Budget::default());
        assert!(matches!(err, Err(Error::BadColoring { .. })), "not independent");
        let err = vertex_compress_with(&g, 0, &[vec![0], vec![1]], Budget::default());
        assert!(matches!(err, Err(Error::BadColoring { .. })), "missing cover");
        let err = vertex_compress_with(&g, 0, &[vec![0], vec![1, 4], vec![2]], Budget::default());
        assert!(matches!(err, Err(Error::BadColoring { .. })), "outside neighborhood");
    }

    #[test]
    fn optimal_partition_counts() {
        let parts = optimal_partitions(&Graph::cycle(5), 100, Budget::default()).unwrap();
        assert_eq!(parts.len(), 5);
        for p in &parts {
            assert_eq!(p.len(), 3);
            let total: usize = p.iter().map(|c| c.len()).sum();
            assert_eq!(total, 5);
        }
        assert_eq!(
            optimal_partitions(&Graph::cycle(5), 2, Budget::default())
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            optimal_partitions(&Graph::complete(4), 100, Budget::default())
                .unwrap()
                .len(),
            1
        );
        // Connected bipartite graphs have a unique bipartition.
        for g in [Graph::cycle(6), Graph::path(5), Graph::complete_bipartite(3, 3)] {
            assert_eq!(optimal_partitions(&g, 100, Budget::default()).unwrap().len(), 1);
        }
        // Diamond: the only independent pair is the missing edge.
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let parts = optimal_partitions(&diamond, 100, Budget::default()).unwrap();
        assert_eq!(parts, vec![vec![vec![0, 3], vec![1], vec![2]]]);
    }

    #[test]
    fn compression_trajectories_end_complete() {
        for (g, seed) in [
            (Graph::cycle(5), 0u64),
            (Graph::petersen(), 1),
            (Graph::octahedron(), 2),
            (crate::graph::random_connected_graph(8, 0.4, 9).unwrap(), 3),
        ] {
            let steps = compress_to_complete(&g, seed, Budget::default()).unwrap();
            assert_eq!(steps[0], g);
            let last = steps.last().unwrap();
            assert!(last.is_clique(last.full_bits()));
            for w in steps.windows(2) {
                assert!(w[1].vertex_count() < w[0].vertex_count());
                assert!(w[1].is_connected());
            }
            let again = compress_to_complete(&g, seed, Budget::default()).unwrap();
            assert_eq!(steps, again);
        }
        assert!(matches!(
            compress_to_complete(&Graph::empty(2), 0, Budget::default()),
            Err(Error::Disconnected)
        ));
    }
}
