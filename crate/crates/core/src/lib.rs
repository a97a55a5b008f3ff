//! Vertex-critical graphs for small forbidden induced subgraphs.
//!
//! Graphs have at most 31 vertices and are stored as bitmask adjacency
//! rows. On top of that sit exact invariants (α, ω, ν, χ), induced-pattern
//! detection, criticality tests, an isomorph-free generator with censuses
//! of critical graphs, and a certifying colorer for (P₃+P₁)-free inputs.
//!
//! ```
//! use vcrit::{co_odd_cycle, is_vertex_critical, is_free, PatternName};
//!
//! let g = co_odd_cycle(5).unwrap();
//! assert!(is_vertex_critical(&g, 5).is_critical);
//! assert!(is_free(&g, PatternName::P3PlusP1));
//! ```

pub mod canon;
pub mod certify;
pub mod critical;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod hfree;
pub mod invariants;
pub mod io;

/// Graph lists shipped with the crate.
pub mod data {
    /// The eleven 4-vertex-critical graphs G1..G11, one edge line each,
    /// preceded by a `# Gi` comment.
    pub const FIGURE1_EDGES: &str = include_str!("../data/fig1.edges");
    /// All 178 5-vertex-critical (P₃+P₁)-free graphs, two-digit pair form.
    pub const APPENDIX5_EDGES: &str = include_str!("../data/appendix5.edges");
}

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalCode, Labeling};
pub use certify::{
    build_database, certify_color, verify_certificate, CertifiedAnswer, Certifier, CertifyError, CriticalDatabase,
};
pub use critical::{
    check_stehlik, find_critical_subgraph, is_critical, is_vertex_critical, is_vertex_critical_par,
    verify_join_criticality, CriticalError, CriticalityReport, JoinCriticality,
};
pub use enumerate::{
    census_copaw_critical, census_general, generate_triangle_free, verify_list, Census, CensusError, CensusRow,
    ListFailure, ListReport, SearchSpace,
};
pub use families::{clique_substituted_odd_cycle, co_odd_cycle, odd_cycle, substitute_clique, FamilyError};
pub use graph::{Graph, GraphError, VertexSet, MAX_ORDER};
pub use hfree::{
    contains_induced, copaw_decompose, is_free, named_graph, nonneighbor_profile, JoinDecomposition, JoinFactor,
    PatternError, PatternName,
};
pub use invariants::{
    chromatic_number, clique_number, independence_number, is_k_colorable, matching_number, max_matching,
    optimal_coloring, Coloring,
};
pub use io::{from_graph6, parse_graphs, to_edge_line, to_graph6, FormatError};
