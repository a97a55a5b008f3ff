//! Brute-force oracles and random instance builders shared by the test
//! targets. Nothing here calls the library's invariant or canonical-form
//! code, so agreement with it is an independent check.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use vcrit::{parse_graphs, Graph, VertexSet};

/// The 4-critical graphs G1..G11; index 0 is G1.
pub fn figure1() -> Vec<Graph> {
    parse_graphs(vcrit::data::FIGURE1_EDGES).unwrap().into_iter().map(|(_, g)| g).collect()
}

pub fn appendix() -> Vec<Graph> {
    parse_graphs(vcrit::data::APPENDIX5_EDGES).unwrap().into_iter().map(|(_, g)| g).collect()
}

pub fn cycle(n: usize) -> Graph {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &e).unwrap()
}

fn subsets(n: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << n)
}

fn independent(g: &Graph, s: u32) -> bool {
    (0..g.order()).all(|v| s >> v & 1 == 0 || g.row(v) & s == 0)
}

fn clique(g: &Graph, s: u32) -> bool {
    (0..g.order()).all(|v| s >> v & 1 == 0 || (s & !(1 << v)) & !g.row(v) == 0)
}

pub fn brute_alpha(g: &Graph) -> usize {
    subsets(g.order()).filter(|&s| independent(g, s)).map(|s| s.count_ones() as usize).max().unwrap_or(0)
}

pub fn brute_omega(g: &Graph) -> usize {
    subsets(g.order()).filter(|&s| clique(g, s)).map(|s| s.count_ones() as usize).max().unwrap_or(0)
}

/// χ by dynamic programming over vertex subsets: χ(S) is the least number
/// of independent sets covering S.
pub fn brute_chi(g: &Graph) -> usize {
    let n = g.order();
    let full = (1u32 << n) - 1;
    let mut best = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        // Independent sets containing the lowest vertex of s.
        let rest = s & !low;
        let mut t = rest;
        loop {
            let i = t | low;
            if independent(g, i) && best[(s & !i) as usize] != usize::MAX {
                best[s as usize] = best[s as usize].min(best[(s & !i) as usize] + 1);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & rest;
        }
    }
    best[full as usize]
}

/// ν by recursion on the lowest vertex: unmatched, or matched to a
/// neighbor.
pub fn brute_nu(g: &Graph) -> usize {
    fn rec(g: &Graph, s: u32, memo: &mut Vec<Option<usize>>) -> usize {
        if s == 0 {
            return 0;
        }
        if let Some(v) = memo[s as usize] {
            return v;
        }
        let v = s.trailing_zeros() as usize;
        let without = s & !(1 << v);
        let mut best = rec(g, without, memo);
        let mut nb = g.row(v) & without;
        while nb != 0 {
            let u = nb.trailing_zeros();
            nb &= nb - 1;
            best = best.max(1 + rec(g, without & !(1 << u), memo));
        }
        memo[s as usize] = Some(best);
        best
    }
    rec(g, (1u32 << g.order()) - 1, &mut vec![None; 1 << g.order()])
}

/// Induced copy of `h` in `g` by trying every injective map.
pub fn brute_contains(g: &Graph, h: &Graph) -> bool {
    fn rec(g: &Graph, h: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == h.order() {
            return true;
        }
        for v in 0..g.order() {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| h.has_edge(i, j) == g.has_edge(v, map[j])) {
                map.push(v);
                if rec(g, h, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    rec(g, h, &mut Vec::new())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn edge_bits(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.order();
    let mut bits = 0u64;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(perm[i], perm[j]) {
                bits |= 1 << idx;
            }
            idx += 1;
        }
    }
    bits
}

/// Smallest upper-triangle bit string over all relabelings.
pub fn brute_canon_with(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| edge_bits(g, p)).min().unwrap_or(0)
}

/// Number of isomorphism classes among all labeled graphs of order `n`
/// that satisfy `keep`.
pub fn brute_class_count(n: usize, keep: impl Fn(&Graph) -> bool) -> usize {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, e)| *e).collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if keep(&g) {
            seen.insert(brute_canon_with(&g, &perms));
        }
    }
    seen.len()
}

pub fn brute_triangle_free(g: &Graph) -> bool {
    brute_omega(g) <= 2
}

/// Random triangle-free graph: edges offered in random order, kept when
/// they close no triangle.
pub fn random_triangle_free<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    pairs.shuffle(rng);
    let mut rows = vec![0u32; n];
    for (i, j) in pairs {
        if rng.gen_bool(density) && rows[i] & rows[j] == 0 {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
    }
    Graph::from_adjacency(&rows).unwrap()
}

/// Disjoint union of cliques with the given sizes.
pub fn clique_union(sizes: &[usize]) -> Graph {
    let mut g = Graph::empty(0).unwrap();
    for &s in sizes {
        g = g.disjoint_union(&Graph::complete(s).unwrap()).unwrap();
    }
    g
}

/// Random (P₃+P₁)-free graph: a join of one to three factors, each either
/// the complement of a random triangle-free graph (α ≤ 2) or a union of
/// cliques. Vertices are shuffled at the end.
pub fn random_copaw_free<R: Rng>(rng: &mut R, max_order: usize) -> Graph {
    let mut g = Graph::empty(0).unwrap();
    let factors = rng.gen_range(1..=3);
    for _ in 0..factors {
        let room = max_order - g.order();
        if room == 0 {
            break;
        }
        let n = rng.gen_range(1..=room.min(8));
        let f = if rng.gen_bool(0.6) {
            let density = rng.gen_range(0.2..0.9);
            random_triangle_free(rng, n, density).complement()
        } else {
            let mut sizes = Vec::new();
            let mut left = n;
            while left > 0 {
                let s = rng.gen_range(1..=left.min(4));
                sizes.push(s);
                left -= s;
            }
            clique_union(&sizes)
        };
        g = g.join(&f).unwrap();
    }
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.permute(&perm)
}

/// Every vertex set of `g` as a `VertexSet`, for small `g`.
pub fn all_subsets(g: &Graph) -> impl Iterator<Item = VertexSet> {
    subsets(g.order()).map(VertexSet)
}
