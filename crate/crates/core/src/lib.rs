//! Total domination, k-γ_t vertex-criticality, and exhaustive search for critical graphs
//! of order Δ+k.

pub mod criticality;
pub mod domination;
pub mod edge_list;
mod error;
pub mod existence;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod search;

pub use criticality::{is_k_gamma_t_critical, CriticalityReport};
pub use domination::{gamma, gamma_t, DominationResult};
pub use error::{Error, Result};
pub use existence::{existence, ExistenceVerdict, Provenance};
pub use families::{Family, FamilyParams, LabeledGraph, WitnessTable};
pub use graph::{Count, Graph, VertexSet, MAX_ORDER};
pub use search::{SearchFrame, SearchMode, SearchOptions, SearchOutcome};
