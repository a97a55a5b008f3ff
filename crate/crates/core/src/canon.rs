//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, pick the first non-singleton cell, and branch on
//! individualizing each of its vertices. Leaves are discrete partitions and
//! the canonical leaf is the one whose relabeled adjacency rows are
//! lexicographically largest. Every leaf is compared against the first leaf
//! and the current best; equal certificates yield automorphisms, which prune
//! sibling branches lying in the same orbit of the pointwise stabilizer of the
//! current path. Because every explored leaf is compared with the first one,
//! the automorphisms found generate the full automorphism group, so the
//! reported orbits are exact.

use std::fmt;

use crate::graph::{Bits, Graph, MAX_ORDER};
use crate::io::{from_graph6, to_graph6};

/// graph6 text of the canonically relabeled graph. Equal codes mean
/// isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Decodes the canonical representative.
    pub fn graph(&self) -> Graph {
        from_graph6(&self.0).expect("canonical codes are valid graph6")
    }

    /// Order of the encoded graph.
    pub fn order(&self) -> usize {
        (self.0.as_bytes()[0] - 63) as usize
    }

    /// Wraps a graph6 string after re-canonicalizing it.
    pub fn from_graph6(text: &str) -> Result<CanonicalCode, crate::io::FormatError> {
        Ok(canonical_form(&from_graph6(text)?))
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Result of canonically labeling a graph.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `perm[v]` is the canonical label of vertex `v`.
    pub perm: Vec<usize>,
    /// The canonically relabeled graph.
    pub canonical: Graph,
    /// Generators of the automorphism group found during the search.
    pub generators: Vec<Vec<usize>>,
    /// `orbits[v]` is the smallest vertex in the automorphism orbit of `v`.
    pub orbits: Vec<usize>,
}

impl Labeling {
    /// Vertex carrying canonical label `label`.
    pub fn vertex_with_label(&self, label: usize) -> usize {
        self.perm.iter().position(|&p| p == label).expect("label in range")
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbits[u] == self.orbits[v]
    }
}

type Cells = Vec<u32>;

/// Refines an ordered partition until it is equitable. Cells are split by
/// neighbor counts into the splitter, smaller counts first, in place.
fn refine(g: &Graph, cells: &mut Cells) {
    let mut counts = [0u8; MAX_ORDER];
    'restart: loop {
        for s in 0..cells.len() {
            let w = cells[s];
            let mut i = 0;
            let mut split_any = false;
            while i < cells.len() {
                let x = cells[i];
                if x & (x - 1) == 0 {
                    i += 1;
                    continue;
                }
                let mut lo = u8::MAX;
                let mut hi = 0u8;
                for v in Bits(x) {
                    let c = (g.row(v) & w).count_ones() as u8;
                    counts[v] = c;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    i += 1;
                    continue;
                }
                let mut parts: Vec<u32> = Vec::new();
                let mut present = 0u64;
                for v in Bits(x) {
                    present |= 1 << counts[v];
                }
                for c in Bits64(present) {
                    let mut m = 0u32;
                    for v in Bits(x) {
                        if counts[v] as usize == c {
                            m |= 1 << v;
                        }
                    }
                    parts.push(m);
                }
                let added = parts.len();
                cells.splice(i..i + 1, parts);
                i += added;
                split_any = true;
            }
            if split_any {
                continue 'restart;
            }
        }
        break;
    }
}

struct Bits64(u64);

impl Iterator for Bits64 {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

struct Leaf {
    cert: Vec<u32>,
    /// canonical position -> vertex
    lab: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
}

impl Search<'_> {
    fn leaf(&mut self, cells: &Cells) {
        let n = self.g.order();
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut perm = [0usize; MAX_ORDER];
        for (i, &v) in lab.iter().enumerate() {
            perm[v] = i;
        }
        let mut cert = vec![0u32; n];
        for (i, &v) in lab.iter().enumerate() {
            let mut row = 0u32;
            for w in Bits(self.g.row(v)) {
                row |= 1 << perm[w];
            }
            cert[i] = row;
        }
        let Some(first) = &self.first else {
            self.first = Some(Leaf { cert: cert.clone(), lab: lab.clone() });
            self.best = Some(Leaf { cert, lab });
            return;
        };
        let auto_to = |target: &Leaf| -> Vec<usize> { (0..n).map(|v| target.lab[perm[v]]).collect() };
        if cert == first.cert {
            let a = auto_to(first);
            self.autos.push(a);
            return;
        }
        let best = self.best.as_ref().expect("best set with first");
        match cert.cmp(&best.cert) {
            std::cmp::Ordering::Equal => {
                let a = auto_to(best);
                self.autos.push(a);
            }
            std::cmp::Ordering::Greater => self.best = Some(Leaf { cert, lab }),
            std::cmp::Ordering::Less => {}
        }
    }

    fn visit(&mut self, mut cells: Cells, path: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(t) = cells.iter().position(|c| c & (c - 1) != 0) else {
            self.leaf(&cells);
            return;
        };
        let target = cells[t];
        let n = self.g.order();
        let mut explored: Vec<usize> = Vec::new();
        for v in Bits(target) {
            if !explored.is_empty() && !self.autos.is_empty() {
                let mut parent: Vec<usize> = (0..n).collect();
                for a in &self.autos {
                    if path.iter().all(|&p| a[p] == p) {
                        for (x, &y) in a.iter().enumerate() {
                            union(&mut parent, x, y);
                        }
                    }
                }
                let rv = find(&mut parent, v);
                if explored.iter().any(|&u| find(&mut parent, u) == rv) {
                    continue;
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[t + 1..]);
            path.push(v);
            self.visit(child, path);
            path.pop();
            explored.push(v);
        }
    }
}

/// Canonically labels `g` and reports its automorphism orbits.
pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    if n == 0 {
        return Labeling { perm: vec![], canonical: *g, generators: vec![], orbits: vec![] };
    }
    let mut search = Search { g, first: None, best: None, autos: Vec::new() };
    search.visit(vec![g.vertices().mask()], &mut Vec::new());
    let best = search.best.expect("search reaches a leaf");
    let mut perm = vec![0; n];
    for (i, &v) in best.lab.iter().enumerate() {
        perm[v] = i;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for a in &search.autos {
        for (x, &y) in a.iter().enumerate() {
            union(&mut parent, x, y);
        }
    }
    let orbits = (0..n).map(|v| find(&mut parent, v)).collect();
    let canonical = Graph::from_adjacency(&best.cert).expect("relabeling preserves validity");
    Labeling { perm, canonical, generators: search.autos, orbits }
}

/// Canonical code of `g`; equal exactly for isomorphic graphs.
pub fn canonical_form(g: &Graph) -> CanonicalCode {
    CanonicalCode(to_graph6(&canonical_labeling(g).canonical))
}

/// Whether `g` and `h` are isomorphic.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_labeling(g).canonical == canonical_labeling(h).canonical
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &e).unwrap()
    }

    /// Tries all bijections.
    fn brute_iso(g: &Graph, h: &Graph) -> bool {
        fn rec(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: u32) -> bool {
            let i = map.len();
            if i == g.order() {
                return true;
            }
            for j in 0..h.order() {
                if used >> j & 1 == 1 {
                    continue;
                }
                if (0..i).all(|k| g.has_edge(i, k) == h.has_edge(j, map[k])) {
                    map.push(j);
                    if rec(g, h, map, used | 1 << j) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        g.order() == h.order() && rec(g, h, &mut Vec::new(), 0)
    }

    #[test]
    fn c5_self_complementary() {
        let c5 = cycle(5);
        assert!(brute_iso(&c5, &c5.complement()));
        assert!(is_isomorphic(&c5, &c5.complement()));
        assert_eq!(canonical_form(&c5), canonical_form(&c5.complement()));
    }

    #[test]
    fn orbits_of_symmetric_graphs() {
        let e = Graph::empty(9).unwrap();
        let l = canonical_labeling(&e);
        assert!(l.orbits.iter().all(|&o| o == 0));
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let l = canonical_labeling(&star);
        assert_eq!(l.orbits, vec![0, 1, 1, 1]);
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(canonical_labeling(&p4).orbits, vec![0, 1, 1, 0]);
    }

    #[test]
    fn canonical_graph_is_relabeling() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (0, 5)]).unwrap();
        let l = canonical_labeling(&g);
        assert_eq!(g.permute(&l.perm), l.canonical);
        for a in &l.generators {
            assert_eq!(g.permute(a), g);
        }
    }

    #[test]
    fn counts_unlabeled_graphs_small_orders() {
        // Distinct codes over all labeled graphs versus a pairwise brute-force
        // isomorphism classification.
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            let mut codes = std::collections::HashSet::new();
            let mut reps: Vec<Graph> = Vec::new();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> =
                    pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
                let g = Graph::from_edge_list(n, &edges).unwrap();
                codes.insert(canonical_form(&g));
                if !reps.iter().any(|r| brute_iso(r, &g)) {
                    reps.push(g);
                }
            }
            assert_eq!(codes.len(), reps.len(), "order {n}");
        }
    }
}
