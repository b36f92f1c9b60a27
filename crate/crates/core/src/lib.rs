//! Symmetry handling for maximum-weight stable set problems.
//!
//! Permutation groups and stabilizer chains, graph automorphisms,
//! Schreier-Sims tables with their leader-follower cuts, symmetry-based
//! presolving, trivially perfect graph structure with total-unimodularity
//! checks, and an exact stable set solver.
//!
//! Points and nodes are 0-based throughout the API; text and JSON formats
//! are 1-based.

pub mod autom;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod instances;
pub mod perm;
pub mod presolve;
pub mod solver;
pub mod sst;
pub mod tp;

pub use autom::{automorphism_generators, automorphism_generators_with, is_automorphism, AutomOptions};
pub use error::{Error, Result};
pub use graph::{CliqueMatrix, Graph, NodeMap};
pub use perm::{GeneratorSet, Orbit, Permutation};
pub use presolve::{sst_presolve, PresolveOptions, PresolveResult, PresolveStats};
pub use solver::{branch_and_bound_max_stable, brute_force_max_stable, StableSetSolution};
pub use sst::{
    build_sst_table, build_stringent_sst_table, is_stringent, repair_solution, satisfies_cuts, sst_clique_cuts, OrbitRule,
    SstCliqueCut, SstTable,
};
pub use tp::{ExtendedMatrix, ForestRep, TuConfig, TuReport};
