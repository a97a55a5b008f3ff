//! Isomorph-free generation and the critical-graph censuses built on it.

mod augment;
mod census;
mod verify;

pub use augment::{children, extend_layer, generate, generate_layers, generate_triangle_free, GraphClass};
pub use census::{
    census_copaw_critical, census_general, copaw_critical_levels, Census, CensusError, CensusRow, SearchSpace,
    MAX_ALL_GRAPHS_ORDER, MAX_ALPHA2_ORDER,
};
pub use verify::{verify_list, ListFailure, ListReport};
