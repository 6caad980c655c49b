//! Exact engine for three alternating graph invariants and the bounds
//! they put on the chromatic and Hadwiger numbers of a connected graph.
//!
//! The invariants count nested families of subgraphs: vertices and edges,
//! then chordless (induced) cycles, then "solid" subgraphs, which are the
//! four sphere-like shapes (pyramid, trihedron, stamp, prism) that arise
//! as minimal closed surfaces of cycles. Stacking the counts with
//! alternating signs gives
//!
//! ```text
//! beth1 = |E| - |V|
//! beth2 = |C| - |E| + |V|
//! beth3 = |S| - |C| + |E| - |V|
//! ```
//!
//! Each is monotone under edge contraction, and `beth2`/`beth3` are also
//! monotone under vertex compression, so the value on a complete graph
//! reached by contracting gives simultaneous upper bounds on both the
//! chromatic number and the largest complete-minor order. Everything here
//! is exact and deterministic; brute-force oracles (chromatic number,
//! minor search, minimal-surface enumeration) make every inequality
//! checkable on small graphs.
//!
//! Entry points:
//! - [`Graph`]: bitset adjacency, at most 62 vertices, graph6 codec in
//!   [`codec`].
//! - [`cycles`]: chordless cycle enumeration and contraction censuses.
//! - [`solids`]: solid classification, closed cycle sets, and the
//!   independent minimal-surface search.
//! - [`characteristics`]: the three invariants, bound inversion, and
//!   [`characteristics::report`].
//! - [`oracles`]: exact chromatic number, minor containment, Hadwiger
//!   number with a replayable contraction witness, vertex compression,
//!   and small-graph planarity.

pub mod characteristics;
pub mod codec;
pub mod cycles;
pub mod graph;
pub mod oracles;
pub mod solids;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use characteristics::{
    beth1, beth2, beth3, beth_complete, first_upper_bound, max_complete_order_within, report,
    CharacteristicReport, CheckOutcome, CheckStatus, ReportOptions,
};
pub use codec::{parse_edge_list, parse_graph6, to_graph6};
pub use cycles::{
    contraction_cycle_census, count_induced_odd_cycles, count_length2_paths,
    count_triangles_through, enumerate_induced_cycles, enumerate_induced_cycles_capped,
    longest_cycle_length, ContractionCensus, InducedCycle, DEFAULT_CYCLE_CAP,
};
pub use graph::{
    all_connected_graphs, bits_iter, clique_sum, hajos_merge, random_connected_graph, EdgeRef,
    Graph, VertexMap, MAX_VERTICES,
};
pub use oracles::{
    chromatic_number, compress_to_complete, has_complete_minor, has_minor, hadwiger_number,
    is_planar_small, optimal_partitions, vertex_compress, vertex_compress_with, Coloring,
    HadwigerWitness, MinorWitness,
};
pub use solids::{
    classify_solid, decompose_closed_set, enumerate_minimal_closed_surfaces, enumerate_solids,
    enumerate_solids_bruteforce, enumerate_solids_from_cycles, is_closed_set, refine_cycle,
    strong_minimality_violations, ClosedSet, Solid, SolidKind,
};

/// Node-count cap for the backtracking oracles. Each oracle call owns a
/// fresh allowance of `node_cap` search nodes; exhausting it yields
/// [`Error::BudgetExhausted`] so "unknown" never masquerades as "false".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub node_cap: u64,
}

impl Budget {
    pub fn new(node_cap: u64) -> Budget {
        Budget { node_cap }
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            node_cap: 50_000_000,
        }
    }
}

/// Internal decrementing meter for one oracle invocation.
#[derive(Debug)]
pub(crate) struct Meter {
    cap: u64,
    left: u64,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Meter {
        Meter {
            cap: budget.node_cap,
            left: budget.node_cap,
        }
    }

    #[inline]
    pub(crate) fn spend(&mut self, nodes: u64) -> Result<()> {
        if self.left < nodes {
            self.left = 0;
            return Err(Error::BudgetExhausted { cap: self.cap });
        }
        self.left -= nodes;
        Ok(())
    }
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("vertices {u} and {v} are not adjacent")]
    NotAnEdge { u: usize, v: usize },
    #[error("vertices {u} and {v} are adjacent")]
    NotANonedge { u: usize, v: usize },
    #[error("need two distinct vertices, got {v} twice")]
    SameVertex { v: usize },
    #[error("duplicate vertex {v}")]
    DuplicateVertex { v: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("{what} = {value} exceeds the supported maximum {max}")]
    TooLarge {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error("induced cycle cap {cap} exceeded")]
    CycleCapExceeded { cap: usize },
    #[error("search budget of {cap} nodes exhausted")]
    BudgetExhausted { cap: u64 },
    #[error("no connected sample found in {attempts} attempts")]
    GenerationFailed { attempts: u32 },
    #[error("edge probability {p} is not in [0, 1]")]
    BadProbability { p: f64 },
    #[error("subdivision length {k} is below 2")]
    BadSubdivision { k: usize },
    #[error("vertex sequence is not a cycle: {reason}")]
    NotACycle { reason: String },
    #[error("cycle at index {index} is not an induced cycle of the host graph")]
    NotInducedCycle { index: usize },
    #[error("duplicate cycle at index {index}")]
    DuplicateCycle { index: usize },
    #[error("cycle id {id} out of range for a host list of length {len}")]
    CycleIdOutOfRange { id: usize, len: usize },
    #[error("cycle set is not closed: {reason}")]
    NotClosed { reason: String },
    #[error("cycle refinement postcondition failed: {reason}")]
    Refinement { reason: String },
    #[error("glued vertex sets must induce equal-size cliques: {reason}")]
    BadClique { reason: String },
    #[error("characteristic index {i} is not 1, 2, or 3")]
    BadIndex { i: u8 },
    #[error("complete graph order {r} is not in 1..=62")]
    BadOrder { r: u64 },
    #[error("invalid coloring: {reason}")]
    BadColoring { reason: String },
    #[error("too many induced cycles for the surface search: {count} > {max}")]
    TooManyCycles { count: usize, max: usize },
    #[error("labels length {got} does not match vertex count {expected}")]
    BadLabels { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
