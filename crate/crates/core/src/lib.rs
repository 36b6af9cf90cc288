//! Rooted spanning forest construction under a step-synchronous data-parallel
//! execution model.
//!
//! Three strategies are provided behind [`algo::RstAlgorithm`] and looked up by
//! name in an [`algo::Registry`]:
//!
//! * `bfs`: level-synchronous breadth-first search;
//! * `cc-euler`: hooking + pointer-jumping connectivity, then Euler-tour rooting;
//! * `pr-rst`: path-reversal RST, which grafts trees and re-orients paths as
//!   components merge.
//!
//! Every strategy runs on an [`engine::Engine`] that counts global barriers
//! (steps) and element updates (work).

pub mod algo;
pub mod bench;
pub mod engine;
pub mod error;
pub mod forest;
pub mod graph;
pub mod source;
pub mod validate;

pub use algo::{AlgoConfig, Registry, RstAlgorithm};
pub use engine::{Engine, StepReport};
pub use error::{Error, Result};
pub use forest::{forest_depth, RootedForest};
pub use graph::{build_csr, generate, load_edge_list, EdgeList, Graph, GraphKind};
pub use validate::{validate_rooted_forest, ValidationReport};
