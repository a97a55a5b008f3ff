use crate::graph::{Bits, Graph, VertexSet};

use super::clique::{clique_number, independence_number};
use super::matching::maximum_matching;

/// A proper vertex coloring. Colors are `0..k` and every color is used.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Renumbers colors by first appearance so that exactly `0..k` occur.
    pub fn from_colors(raw: &[usize]) -> Coloring {
        let mut map: Vec<(usize, usize)> = Vec::new();
        let mut colors = Vec::with_capacity(raw.len());
        for &c in raw {
            let idx = match map.iter().find(|(old, _)| *old == c) {
                Some(&(_, new)) => new,
                None => {
                    map.push((c, map.len()));
                    map.len() - 1
                }
            };
            colors.push(idx);
        }
        Coloring { colors, k: map.len() }
    }

    /// One color class per set, in the order given.
    pub fn from_classes(n: usize, classes: &[VertexSet]) -> Coloring {
        let mut raw = vec![usize::MAX; n];
        for (c, s) in classes.iter().enumerate() {
            for v in s.iter() {
                raw[v] = c;
            }
        }
        Coloring::from_colors(&raw)
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// Number of classes.
    pub fn num_colors(&self) -> usize {
        self.k
    }

    pub fn classes(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].insert(v);
        }
        out
    }

    /// Checks properness against `g` from scratch.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.order() && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Coloring with one class per matched complement edge plus singletons.
/// Proper for any graph; optimal when α(G) ≤ 2.
fn coloring_from_complement_matching(g: &Graph) -> Coloring {
    let mate = maximum_matching(&g.complement());
    let mut raw = vec![usize::MAX; g.order()];
    let mut next = 0;
    for v in 0..g.order() {
        if raw[v] != usize::MAX {
            continue;
        }
        raw[v] = next;
        if let Some(w) = mate[v] {
            raw[w] = next;
        }
        next += 1;
    }
    Coloring::from_colors(&raw)
}

const UNCOLORED: u8 = u8::MAX;

/// DSATUR branch and bound. Looks for a coloring with fewer than `bound`
/// colors; `first_only` stops at the first one found.
struct Dsatur<'a> {
    g: &'a Graph,
    n: usize,
    colors: [u8; 32],
    bound: usize,
    lower: usize,
    best: Option<Vec<usize>>,
    first_only: bool,
}

impl Dsatur<'_> {
    fn done(&self) -> bool {
        self.best.is_some() && (self.first_only || self.bound <= self.lower)
    }

    fn pick(&self, sat: &[u32; 32], uncolored: u32) -> usize {
        let mut best = usize::MAX;
        let mut key = (0u32, 0u32);
        for v in Bits(uncolored) {
            let k = (sat[v].count_ones(), self.g.row(v).count_ones());
            if best == usize::MAX || k > key {
                best = v;
                key = k;
            }
        }
        best
    }

    fn search(&mut self, sat: &[u32; 32], uncolored: u32, used: usize) {
        if uncolored == 0 {
            self.bound = used;
            self.best = Some(self.colors[..self.n].iter().map(|&c| c as usize).collect());
            return;
        }
        let v = self.pick(sat, uncolored);
        for c in 0..=used {
            if used.max(c + 1) >= self.bound {
                break;
            }
            if sat[v] >> c & 1 == 1 {
                continue;
            }
            let mut next = *sat;
            for w in Bits(self.g.row(v) & uncolored) {
                next[w] |= 1 << c;
            }
            self.colors[v] = c as u8;
            self.search(&next, uncolored & !(1 << v), used.max(c + 1));
            self.colors[v] = UNCOLORED;
            if self.done() || used >= self.bound {
                return;
            }
        }
    }
}

fn dsatur(g: &Graph, bound: usize, lower: usize, first_only: bool) -> Option<Coloring> {
    let n = g.order();
    if n == 0 {
        return (bound > 0).then(|| Coloring::from_colors(&[]));
    }
    if bound <= 1 {
        return None;
    }
    let mut s = Dsatur { g, n, colors: [UNCOLORED; 32], bound, lower, best: None, first_only };
    s.search(&[0; 32], g.vertices().mask(), 0);
    s.best.map(|c| Coloring::from_colors(&c))
}

/// An optimal coloring.
pub fn optimal_coloring(g: &Graph) -> Coloring {
    if g.order() == 0 {
        return Coloring::from_colors(&[]);
    }
    if independence_number(g) <= 2 {
        return coloring_from_complement_matching(g);
    }
    let lower = clique_number(g);
    dsatur(g, g.order() + 1, lower, false).expect("n colors always suffice")
}

/// χ(G). When α(G) ≤ 2 every color class is a vertex or a complement edge,
/// so χ(G) = n − ν(complement(G)); otherwise DSATUR branch and bound with
/// the clique number as lower bound.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    if independence_number(g) <= 2 {
        return g.order() - super::matching_number(&g.complement());
    }
    chromatic_number_search(g)
}

/// χ(G) by branch and bound only, never taking the matching shortcut.
pub fn chromatic_number_search(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    let lower = clique_number(g);
    dsatur(g, g.order() + 1, lower, false).expect("n colors always suffice").num_colors()
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.order();
    if n == 0 {
        return Some(Coloring::from_colors(&[]));
    }
    if k == 0 {
        return None;
    }
    if k >= n {
        return Some(Coloring::from_colors(&(0..n).collect::<Vec<_>>()));
    }
    if independence_number(g) <= 2 {
        let c = coloring_from_complement_matching(g);
        return (c.num_colors() <= k).then_some(c);
    }
    dsatur(g, k + 1, 0, true)
}

/// A proper coloring with exactly `k` classes, each of size at least `m`,
/// found by exhaustive search.
pub fn coloring_with_min_class_size(g: &Graph, k: usize, m: usize) -> Option<Coloring> {
    let n = g.order();
    if k == 0 {
        return (n == 0).then(|| Coloring::from_colors(&[]));
    }
    if n < k * m.max(1) {
        return None;
    }
    struct St<'a> {
        g: &'a Graph,
        k: usize,
        m: usize,
        class: Vec<u32>,
        colors: Vec<usize>,
    }
    fn rec(s: &mut St<'_>, v: usize) -> bool {
        let n = s.g.order();
        let used = s.class.iter().filter(|c| **c != 0).count();
        let deficit: usize = s.class.iter().map(|c| s.m.saturating_sub(c.count_ones() as usize)).sum::<usize>();
        if deficit > n - v {
            return false;
        }
        if v == n {
            return used == s.k;
        }
        for c in 0..(used + 1).min(s.k) {
            if s.class[c] & s.g.row(v) != 0 {
                continue;
            }
            s.class[c] |= 1 << v;
            s.colors[v] = c;
            if rec(s, v + 1) {
                return true;
            }
            s.class[c] &= !(1 << v);
        }
        false
    }
    let mut s = St { g, k, m, class: vec![0; k], colors: vec![0; n] };
    rec(&mut s, 0).then(|| Coloring::from_colors(&s.colors))
}
