//! Exact computation of the complementary second Zagreb index, extremal
//! search over connected graphs, the join-family argmax table, bound
//! checkers, and an integer-sequence lookup client.
//!
//! The index of a graph is the sum over its edges of the absolute
//! difference of squared endpoint degrees. Connected maximizers are
//! conjectured to be joins of a clique with an independent set; this crate
//! verifies that exhaustively at small orders, reproduces the table of
//! optimal clique sizes, and machine-checks the known bounds and
//! closed-form edge-move deltas.

pub mod bounds;
pub mod csz;
pub mod graph;
pub mod graph6;
pub mod join;
pub mod oeis;
pub mod search;

pub use csz::{csz, csz_via_partition, CszValue};
pub use graph::{make_join, recognize_join, DegreePartition, Graph, GraphError, JoinSpec};
pub use graph6::{from_graph6, to_graph6};
pub use join::{csz_join, k_table, optimal_k, KTableRow};
pub use search::{
    enumerate_extremal, local_search, random_connected, verify_conjecture, ExtremalReport,
    SearchConfig, SearchMode,
};
