use crate::graph::{Graph, VertexSet};

struct MaxClique<'a> {
    g: &'a Graph,
    best: u32,
    best_len: u32,
    stop_at: u32,
}

impl MaxClique<'_> {
    fn expand(&mut self, cur: u32, cand: u32) {
        if cand == 0 {
            let len = cur.count_ones();
            if len > self.best_len {
                self.best_len = len;
                self.best = cur;
            }
            return;
        }
        if cur.count_ones() + cand.count_ones() <= self.best_len || self.best_len >= self.stop_at {
            return;
        }
        // Branch on the candidate with most candidate neighbors.
        let v = crate::graph::Bits(cand)
            .max_by_key(|&v| ((self.g.row(v) & cand).count_ones(), std::cmp::Reverse(v)))
            .expect("cand nonempty");
        self.expand(cur | 1 << v, cand & self.g.row(v));
        self.expand(cur, cand & !(1 << v));
    }
}

/// A maximum clique inside `within`, searching no further once `stop_at`
/// vertices are found.
pub(crate) fn max_clique_bounded(g: &Graph, within: VertexSet, stop_at: usize) -> VertexSet {
    let mut s = MaxClique { g, best: 0, best_len: 0, stop_at: stop_at as u32 };
    s.expand(0, within.mask());
    VertexSet(s.best)
}

/// A maximum clique of `g`.
pub fn maximum_clique(g: &Graph) -> VertexSet {
    max_clique_bounded(g, g.vertices(), usize::MAX)
}

/// A maximum independent set of `g`.
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    maximum_clique(&g.complement())
}

/// ω(G).
pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

/// α(G).
pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// Whether `g[within]` has an independent set of size `size`.
pub fn has_independent_set(g: &Graph, within: VertexSet, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if within.len() < size {
        return false;
    }
    let co = g.complement();
    max_clique_bounded(&co, within, size).len() >= size
}

/// Every maximal independent set of `g` (Bron–Kerbosch with pivoting on
/// the complement).
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    fn bk(co: &Graph, r: u32, mut p: u32, mut x: u32, out: &mut Vec<VertexSet>) {
        if p == 0 && x == 0 {
            out.push(VertexSet(r));
            return;
        }
        let pivot = crate::graph::Bits(p | x).max_by_key(|&u| (co.row(u) & p).count_ones()).expect("p or x nonempty");
        for v in crate::graph::Bits(p & !co.row(pivot)) {
            bk(co, r | 1 << v, p & co.row(v), x & co.row(v), out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let co = g.complement();
    let mut out = Vec::new();
    if g.order() == 0 {
        out.push(VertexSet::EMPTY);
        return out;
    }
    bk(&co, 0, g.vertices().mask(), 0, &mut out);
    out
}
