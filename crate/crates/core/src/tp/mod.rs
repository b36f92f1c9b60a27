//! Trivially perfect graphs and total unimodularity of their extended
//! clique matrices.

mod auxiliary;
mod equicolor;
mod forest;
mod matrix;
mod recursion;
mod tu;

pub use auxiliary::{auxiliary_graph, AuxiliaryGraph};
pub use equicolor::{equicolor_recursive, equicolor_tree_paths, Equicoloring};
pub use forest::{chain_decomposition, forest_representation, is_trivially_perfect, ForestRep};
pub use matrix::{extended_clique_matrix, ordering_matrix, ExtendedMatrix, RowTag};
pub use recursion::{
    check_laminar_recursion_property, check_recursion_property, recursion_witnesses, reduced_components,
};
pub use tu::{
    determinant, is_tu_determinant, is_tu_ghouila_houri, Axis, TuConfig, TuReport, TuWitness, DEFAULT_DET_CAP,
    DEFAULT_GH_CAP,
};
