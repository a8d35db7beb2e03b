//! Exhaustive generation of rooted trees and unicyclic graphs, and searches
//! over them.

pub mod checkpoint;
pub mod search;
pub mod trees;
pub mod unicyclic;

pub use search::{
    compare_with_extremal, minimize_index, minimize_index_with, minimize_many, verify_theorem1, BipartiteCheck,
    Minimizer, SearchOptions, SearchReport, VerificationReport, VerificationRow,
};
pub use trees::{free_trees, rooted_trees, TreeCatalog};
pub use unicyclic::{count_unicyclic, unicyclic_graphs, GenerationTask};
