//! Explicit graph families: odd cycles, their complements, and odd cycles
//! with cliques substituted for alternate vertices.
//!
//! Builders check only their parameter ranges; properties of the results
//! are established in tests.

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parameter out of range: {0}")]
pub struct FamilyError(pub String);

fn cycle(len: usize) -> Graph {
    let e: Vec<_> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    Graph::from_edge_list(len, &e).expect("cycle within order cap")
}

/// C₂ₘ₊₁.
pub fn odd_cycle(m: usize) -> Result<Graph, FamilyError> {
    if m < 1 || 2 * m + 1 > MAX_ORDER {
        return Err(FamilyError(format!("odd_cycle needs 1 <= m <= 15, got {m}")));
    }
    Ok(cycle(2 * m + 1))
}

/// The complement of C₂ₖ₋₁.
pub fn co_odd_cycle(k: usize) -> Result<Graph, FamilyError> {
    if !(3..=16).contains(&k) {
        return Err(FamilyError(format!("co_odd_cycle needs 3 <= k <= 16, got {k}")));
    }
    Ok(cycle(2 * k - 1).complement())
}

/// Replaces `v` by a clique of order `q`. Vertex `v` keeps its index and the
/// `q - 1` new clique vertices are appended; each clique vertex is adjacent
/// to `N(v)` and to the rest of the clique.
pub fn substitute_clique(g: &Graph, v: usize, q: usize) -> Result<Graph, FamilyError> {
    let n = g.order();
    if v >= n || q < 1 || n - 1 + q > MAX_ORDER {
        return Err(FamilyError(format!("substitute_clique(v={v}, q={q}) on order {n}")));
    }
    let mut out = *g;
    // N(v) plus the clique built so far.
    let mut nbrs = g.neighbors(v).union(crate::graph::VertexSet::singleton(v));
    for _ in 1..q {
        let w = out.order();
        out = out.with_vertex(nbrs).map_err(|e| FamilyError(e.to_string()))?;
        nbrs.insert(w);
    }
    Ok(out)
}

/// Odd cycle on `2t + 1` vertices labeled `1..=2t+1` with every even label
/// replaced by a clique of order `k - 2`.
pub fn clique_substituted_odd_cycle(t: usize, k: usize) -> Result<Graph, FamilyError> {
    if t < 2 || k < 3 || (t + 1) + t * (k - 2) > MAX_ORDER {
        return Err(FamilyError(format!("clique_substituted_odd_cycle(t={t}, k={k})")));
    }
    let mut g = cycle(2 * t + 1);
    // Label i sits at index i - 1, so even labels are odd indices.
    for idx in (1..2 * t + 1).step_by(2) {
        g = substitute_clique(&g, idx, k - 2)?;
    }
    Ok(g)
}
