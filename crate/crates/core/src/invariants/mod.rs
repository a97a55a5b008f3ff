//! Exact α, ω, ν and χ, plus explicit colorings.

mod clique;
mod coloring;
mod matching;

pub(crate) use clique::max_clique_bounded;
pub use clique::{
    clique_number, has_independent_set, independence_number, maximal_independent_sets, maximum_clique,
    maximum_independent_set,
};
pub use coloring::{
    chromatic_number, chromatic_number_search, coloring_with_min_class_size, is_k_colorable, optimal_coloring, Coloring,
};
pub use matching::{matching_number, maximum_matching};

/// ν(G), named after the usual symbol.
pub fn max_matching(g: &crate::Graph) -> usize {
    matching_number(g)
}
