//! Isomorph-free generation by canonical augmentation.
//!
//! A child is a parent plus one new vertex. The child is kept only if the
//! new vertex lies in the automorphism orbit of the child's canonical
//! deletion vertex: among the vertices minimizing (degree, sum of neighbor
//! degrees), the one with the largest canonical label. Deleting that vertex
//! determines a unique parent class, so each class is produced from exactly
//! one parent; isomorphic siblings from that parent are merged by canonical
//! form. The target class must be closed under vertex deletion, which holds
//! for every filter used here (triangle-free, H-free, α ≤ 2).

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::canonical_labeling;
use crate::graph::{Bits, Graph};

/// Base class the generator walks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphClass {
    All,
    TriangleFree,
}

#[inline]
fn deletion_key(g: &Graph, v: usize) -> u32 {
    let d = g.degree(v) as u32;
    let s: u32 = Bits(g.row(v)).map(|w| g.degree(w) as u32).sum();
    d << 16 | s
}

fn independent_sets(p: &Graph, out: &mut Vec<u32>) {
    fn rec(p: &Graph, start: usize, cur: u32, out: &mut Vec<u32>) {
        for v in start..p.order() {
            if p.row(v) & cur == 0 {
                let next = cur | 1 << v;
                out.push(next);
                rec(p, v + 1, next, out);
            }
        }
    }
    out.push(0);
    rec(p, 0, 0, out);
}

/// Canonical children of `parent` in `class` that satisfy `keep`, each
/// returned in canonical labeling.
pub fn children<K>(parent: &Graph, class: GraphClass, keep: &K) -> Vec<Graph>
where
    K: Fn(&Graph) -> bool,
{
    let m = parent.order();
    let mut masks = Vec::new();
    match class {
        GraphClass::All => masks.extend(0..(1u32 << m)),
        GraphClass::TriangleFree => independent_sets(parent, &mut masks),
    }
    let mut seen: HashSet<Graph> = HashSet::new();
    let mut out = Vec::new();
    for mask in masks {
        let child = parent.push_vertex_unchecked(mask);
        let new = m;
        let keys: Vec<u32> = (0..=m).map(|v| deletion_key(&child, v)).collect();
        let min = *keys.iter().min().expect("child is nonempty");
        if keys[new] != min {
            continue;
        }
        if !keep(&child) {
            continue;
        }
        let lab = canonical_labeling(&child);
        let star = (0..=m).filter(|&v| keys[v] == min).max_by_key(|&v| lab.perm[v]).expect("min key attained");
        if star != new && !lab.same_orbit(star, new) {
            continue;
        }
        if seen.insert(lab.canonical) {
            out.push(lab.canonical);
        }
    }
    out
}

/// All canonical children of a layer, processed in parallel. Output order
/// follows parent order, so it is deterministic.
pub fn extend_layer<K>(parents: &[Graph], class: GraphClass, keep: &K) -> Vec<Graph>
where
    K: Fn(&Graph) -> bool + Sync,
{
    parents.par_iter().flat_map_iter(|p| children(p, class, keep)).collect()
}

/// Like [`extend_layer`] but maps each child through `f` without keeping
/// the children themselves.
pub fn extend_layer_map<K, F, T>(parents: &[Graph], class: GraphClass, keep: &K, f: &F) -> Vec<T>
where
    K: Fn(&Graph) -> bool + Sync,
    F: Fn(&Graph) -> Option<T> + Sync,
    T: Send,
{
    parents.par_iter().flat_map_iter(|p| children(p, class, keep).into_iter().filter_map(|c| f(&c))).collect()
}

/// Layers `0..=n_max` of the class restricted by the hereditary filter
/// `keep`. Layer `i` holds one canonical graph per isomorphism class of
/// order `i`.
pub fn generate_layers<K>(n_max: usize, class: GraphClass, keep: &K) -> Vec<Vec<Graph>>
where
    K: Fn(&Graph) -> bool + Sync,
{
    let root = Graph::empty(0).expect("order 0");
    let mut layers = vec![if keep(&root) { vec![root] } else { vec![] }];
    for _ in 1..=n_max {
        let next = extend_layer(layers.last().expect("nonempty"), class, keep);
        layers.push(next);
    }
    layers
}

/// One representative per isomorphism class of graphs of order `n` in
/// `class`.
pub fn generate(n: usize, class: GraphClass) -> Vec<Graph> {
    generate_layers(n, class, &|_: &Graph| true).pop().expect("layer n exists")
}

/// One representative per isomorphism class of triangle-free graphs of
/// order `n`.
pub fn generate_triangle_free(n: usize) -> Vec<Graph> {
    generate(n, GraphClass::TriangleFree)
}
