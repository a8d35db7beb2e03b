//! Exact distance-based indices on small connected graphs, with a focus on
//! the revised edge Szeged index of unicyclic graphs.

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod identities;
pub mod index;
pub mod q4;
pub mod transform;

pub use canon::{canonical_code, CanonicalCode};
pub use error::{Error, Result};
pub use families::{FamilyParams, G3Variant, G4Params, RootedTree, UnicyclicSpec};
pub use graph::{CycleInfo, DistanceMatrix, Edge, Graph, Vertex};
pub use graph6::{from_edge_list, from_graph6, to_edge_list, to_graph6};
pub use identities::{verify_identities, IdentityReport, Suite, SuiteRow};
pub use index::{decompose_graph, decompose_unicyclic, index_suite, sz_e_star_closed_form, DecompositionReport, EdgePartition, IndexKind, IndexSuite, VertexPartition};
pub use q4::Q4;
pub use transform::{apply, check, Applied, PairCheck, Prediction, Rewrite, SignClaim, TransformReport};
