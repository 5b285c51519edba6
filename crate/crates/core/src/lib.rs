//! Minimum-size k-connected locally nonforesty graphs.
//!
//! A graph is locally nonforesty when the subgraph induced by every vertex
//! neighborhood contains a cycle. This crate provides the closed-form minimum
//! sizes for `k = 1, 2, 4` (and the degree bound for `k >= 5`), explicit
//! graphs attaining them, and an isomorph-free exhaustive search that
//! certifies the lower bounds at small orders.
//!
//! ```
//! use nonforesty::{build_extremal, f, is_k_connected, is_locally_nonforesty};
//!
//! let g = build_extremal(2, 12).unwrap();
//! assert_eq!(g.size(), f(2, 12).unwrap().value);
//! assert!(is_k_connected(&g, 2) && is_locally_nonforesty(&g));
//! ```

pub mod canon;
pub mod cli;
pub mod connectivity;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod properties;

pub use connectivity::{block_decomposition, is_k_connected, vertex_connectivity, BlockDecomposition};
pub use constructions::{build_extremal, harary, search_gadget, Context, Gadget, GadgetCatalog, GadgetName};
pub use error::{Error, Result};
pub use formulas::{conjecture1_bound, conjecture1_satisfied, f, g, h, p, Regime, SizeFormulaResult};
pub use graph::{Graph, SmallGraph};
pub use graph6::{parse_graph6, serialize_graph6};
pub use oracle::{
    enumerate_graphs, lemma1_scan, verify_minimality, EnumerationSpec, LocalPredicate, MinimalityReport, VerifyOptions,
};
pub use properties::{is_forest, is_locally_foresty, is_locally_nonforesty, local_subgraph, wheel_hubs};
