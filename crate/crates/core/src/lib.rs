//! Exact counts of connected graphlets on three to five nodes, plus two
//! six-node graphlets, from adjacency-matrix walk statistics.
//!
//! Non-induced counts come from closed-form sums over walks and node
//! neighbourhoods ([`count_small`], [`count_five`]); induced counts follow by
//! inverting the graphlet inclusion matrix ([`induced_from_noninduced`]).
//! [`oracle`] holds brute-force counters used as ground truth.

pub mod analytic;
pub mod five;
pub mod generators;
pub mod graph;
pub mod graphlet;
pub mod induced;
pub mod math;
pub mod oracle;
mod par;
pub mod report;
pub mod small;
pub mod walks;

pub use five::{count_five, count_five_with_small, FiveCounts};
pub use graph::{parse_edge_list, Graph, GraphError, Ingested};
pub use graphlet::{canonical_id, FiveGraphlet, GraphletId, SixGraphlet, SmallGraphlet};
pub use induced::{induced_explicit, induced_from_noninduced, InducedFiveCounts};
pub use report::{run_count, run_null_compare, CountReport, Format};
pub use small::{count_small, SmallCounts};
pub use walks::{walk_table, WalkTable};
