//! Vertex-criticality: testing, extracting critical induced subgraphs, and
//! instance checks of the structural facts about critical graphs.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::invariants::{chromatic_number, coloring_with_min_class_size, is_k_colorable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriticalError {
    #[error("chromatic number {chi} is below {k}")]
    ChromaticTooSmall { chi: usize, k: usize },
    #[error("graph is not {0}-vertex-critical")]
    NotCritical(usize),
    #[error("complement is not connected")]
    ComplementDisconnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriticalityReport {
    pub k: usize,
    pub chromatic_number: usize,
    pub is_critical: bool,
    /// A vertex whose deletion keeps χ, when χ(G) = k but G is not critical.
    pub witness: Option<usize>,
}

/// Whether `g` is `k`-vertex-critical: χ(G) = k and χ(G − v) < k for all v.
pub fn is_vertex_critical(g: &Graph, k: usize) -> CriticalityReport {
    let chi = chromatic_number(g);
    if chi != k {
        return CriticalityReport { k, chromatic_number: chi, is_critical: false, witness: None };
    }
    let witness = (0..g.order()).find(|&v| chromatic_number(&g.delete_vertex(v)) >= k);
    CriticalityReport { k, chromatic_number: chi, is_critical: witness.is_none(), witness }
}

/// Same answer as [`is_vertex_critical`], with the vertex scans spread over
/// worker threads.
pub fn is_vertex_critical_par(g: &Graph, k: usize) -> CriticalityReport {
    let chi = chromatic_number(g);
    if chi != k {
        return CriticalityReport { k, chromatic_number: chi, is_critical: false, witness: None };
    }
    let witness = (0..g.order()).into_par_iter().filter(|&v| chromatic_number(&g.delete_vertex(v)) >= k).min();
    CriticalityReport { k, chromatic_number: chi, is_critical: witness.is_none(), witness }
}

/// Whether `g` is vertex-critical at its own chromatic number.
pub fn is_critical(g: &Graph) -> bool {
    let chi = chromatic_number(g);
    is_vertex_critical(g, chi).is_critical
}

/// A vertex set inducing a `k`-vertex-critical subgraph of `g`.
///
/// Greedy peel: scan vertices in ascending order and delete the first one
/// whose removal keeps χ ≥ k, restarting after each deletion.
pub fn find_critical_subgraph(g: &Graph, k: usize) -> Result<VertexSet, CriticalError> {
    let not_colorable = |s: VertexSet| k > 0 && is_k_colorable(&g.induced_subgraph(s), k - 1).is_none();
    let mut s = g.vertices();
    if !not_colorable(s) {
        return Err(CriticalError::ChromaticTooSmall { chi: chromatic_number(g), k });
    }
    'peel: loop {
        for v in s.iter() {
            let t = s.difference(VertexSet::singleton(v));
            if not_colorable(t) {
                s = t;
                continue 'peel;
            }
        }
        return Ok(s);
    }
}

/// For a `k`-critical `g` with connected complement, checks that every
/// `G − v` has a (k−1)-coloring with all classes of size at least two.
pub fn check_stehlik(g: &Graph, k: usize) -> Result<bool, CriticalError> {
    if !is_vertex_critical(g, k).is_critical {
        return Err(CriticalError::NotCritical(k));
    }
    if !g.complement().is_connected() {
        return Err(CriticalError::ComplementDisconnected);
    }
    Ok((0..g.order()).all(|v| coloring_with_min_class_size(&g.delete_vertex(v), k - 1, 2).is_some()))
}

/// Both sides of the join criticality equivalence on one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JoinCriticality {
    /// G ∨ H is (k₁+k₂)-vertex-critical.
    pub join_critical: bool,
    /// G is k₁-critical and H is k₂-critical.
    pub split_critical: bool,
    /// Some split k₁' + k₂' = k₁ + k₂ makes both factors critical.
    pub some_split_critical: bool,
}

impl JoinCriticality {
    /// The equivalence: the join is critical exactly when some split of
    /// k₁+k₂ makes both factors critical.
    pub fn holds(&self) -> bool {
        self.join_critical == self.some_split_critical
    }
}

/// Computes both sides of the join criticality equivalence for `g ∨ h` at
/// level `k1 + k2`.
pub fn verify_join_criticality(g: &Graph, h: &Graph, k1: usize, k2: usize) -> Result<JoinCriticality, CriticalError> {
    let join = g.join(h)?;
    let k = k1 + k2;
    let join_critical = is_vertex_critical(&join, k).is_critical;
    let split_critical = is_vertex_critical(g, k1).is_critical && is_vertex_critical(h, k2).is_critical;
    let (cg, ch) = (chromatic_number(g), chromatic_number(h));
    let some_split_critical = cg + ch == k && is_critical(g) && is_critical(h);
    Ok(JoinCriticality { join_critical, split_critical, some_split_critical })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &e).unwrap()
    }

    #[test]
    fn basic_criticality() {
        assert!(is_vertex_critical(&Graph::complete(5).unwrap(), 5).is_critical);
        assert!(is_vertex_critical(&cycle(7), 3).is_critical);
        let r = is_vertex_critical(&cycle(6), 3);
        assert!(!r.is_critical);
        assert_eq!(r.chromatic_number, 2);
        let g = cycle(5).with_vertex(VertexSet::singleton(0)).unwrap();
        let r = is_vertex_critical(&g, 3);
        assert_eq!(r.witness, Some(5));
        assert_eq!(is_vertex_critical_par(&g, 3), r);
    }

    #[test]
    fn peel_pendant_c5() {
        let g = cycle(5).with_vertex(VertexSet::singleton(2)).unwrap();
        let s = find_critical_subgraph(&g, 3).unwrap();
        assert_eq!(s, VertexSet(0b11111));
        assert!(matches!(find_critical_subgraph(&cycle(6), 3), Err(CriticalError::ChromaticTooSmall { .. })));
    }

    #[test]
    fn peel_dominated_duplicate() {
        let c9bar = cycle(9).complement();
        // Non-adjacent twin of vertex 0.
        let g = c9bar.with_vertex(c9bar.neighbors(0)).unwrap();
        let s = find_critical_subgraph(&g, 5).unwrap();
        assert_eq!(s.len(), 9);
        assert!(is_isomorphic(&g.induced_subgraph(s), &c9bar));
    }

    #[test]
    fn stehlik_instances() {
        assert_eq!(check_stehlik(&cycle(9).complement(), 5), Ok(true));
        assert_eq!(check_stehlik(&cycle(5), 3), Ok(true));
        assert_eq!(check_stehlik(&cycle(6), 3), Err(CriticalError::NotCritical(3)));
        assert_eq!(check_stehlik(&Graph::complete(3).unwrap(), 3), Err(CriticalError::ComplementDisconnected));
    }

    #[test]
    fn join_instances() {
        let k1 = Graph::complete(1).unwrap();
        let k2 = Graph::complete(2).unwrap();
        let r = verify_join_criticality(&cycle(5), &k2, 3, 2).unwrap();
        assert!(r.holds() && r.join_critical && r.split_critical);
        let r = verify_join_criticality(&cycle(5), &cycle(5), 3, 3).unwrap();
        assert!(r.holds() && r.join_critical);
        let r = verify_join_criticality(&cycle(6), &k1, 3, 1).unwrap();
        assert!(r.holds() && !r.join_critical && !r.split_critical);
        // Wrong split of the right total: the join is still critical.
        let r = verify_join_criticality(&k1, &k2, 2, 1).unwrap();
        assert!(r.holds() && r.join_critical && !r.split_critical);
    }
}
