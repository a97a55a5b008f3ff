//! Named small graphs, induced-subgraph detection, and the join structure of
//! (P₃+P₁)-free graphs.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Bits, Graph, GraphError, VertexSet};
use crate::invariants::has_independent_set;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("invalid parameter for {0}")]
    InvalidParameter(&'static str),
    #[error("unknown pattern name {0:?}")]
    Unknown(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The small graphs this crate knows by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternName {
    /// Kₜ
    Complete(usize),
    /// K̄ₜ, the edgeless graph.
    CoComplete(usize),
    /// Pₜ, the path on t vertices.
    Path(usize),
    /// Cₜ
    Cycle(usize),
    Diamond,
    Paw,
    Claw,
    /// P₂+ℓP₁: one edge plus ℓ isolated vertices.
    P2PlusP1s(usize),
    /// P₃+P₁ (co-paw).
    P3PlusP1,
    K3PlusP1,
    TwoK2,
}

impl PatternName {
    /// The eleven graphs on four vertices; columns of complementary pairs
    /// then the self-complementary P₄.
    pub const ORDER_FOUR: [PatternName; 11] = [
        PatternName::Complete(4),
        PatternName::CoComplete(4),
        PatternName::Diamond,
        PatternName::P2PlusP1s(2),
        PatternName::Paw,
        PatternName::P3PlusP1,
        PatternName::TwoK2,
        PatternName::Cycle(4),
        PatternName::Claw,
        PatternName::K3PlusP1,
        PatternName::Path(4),
    ];

    pub fn graph(self) -> Result<Graph, PatternError> {
        named_graph(self)
    }
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternName::Complete(t) => write!(f, "K{t}"),
            PatternName::CoComplete(t) => write!(f, "co-K{t}"),
            PatternName::Path(t) => write!(f, "P{t}"),
            PatternName::Cycle(t) => write!(f, "C{t}"),
            PatternName::Diamond => write!(f, "diamond"),
            PatternName::Paw => write!(f, "paw"),
            PatternName::Claw => write!(f, "claw"),
            PatternName::P2PlusP1s(1) => write!(f, "P2+P1"),
            PatternName::P2PlusP1s(l) => write!(f, "P2+{l}P1"),
            PatternName::P3PlusP1 => write!(f, "P3+P1"),
            PatternName::K3PlusP1 => write!(f, "K3+P1"),
            PatternName::TwoK2 => write!(f, "2K2"),
        }
    }
}

impl FromStr for PatternName {
    type Err = PatternError;

    /// Case-insensitive; accepts forms like `paw`, `claw`, `P3+P1`,
    /// `co-paw`, `P2+2P1`, `2K2`, `K4`, `co-K4`, `C5`, `P4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace() && *c != '_').collect::<String>().to_lowercase();
        let num = |rest: &str| rest.parse::<usize>().ok();
        let named = match t.as_str() {
            "diamond" => Some(PatternName::Diamond),
            "paw" => Some(PatternName::Paw),
            "claw" | "k13" | "k1,3" => Some(PatternName::Claw),
            "p3+p1" | "p1+p3" | "co-paw" | "copaw" => Some(PatternName::P3PlusP1),
            "k3+p1" | "k3+k1" | "p1+k3" => Some(PatternName::K3PlusP1),
            "2k2" | "2p2" => Some(PatternName::TwoK2),
            "p2+p1" => Some(PatternName::P2PlusP1s(1)),
            _ => None,
        };
        if let Some(p) = named {
            return Ok(p);
        }
        let parsed = if let Some(rest) = t.strip_prefix("p2+").and_then(|r| r.strip_suffix("p1")) {
            num(rest).map(PatternName::P2PlusP1s)
        } else if let Some(rest) = t.strip_prefix("co-k").or_else(|| t.strip_prefix("cok")) {
            num(rest).map(PatternName::CoComplete)
        } else if let Some(rest) = t.strip_prefix('k') {
            num(rest).map(PatternName::Complete)
        } else if let Some(rest) = t.strip_prefix('p') {
            num(rest).map(PatternName::Path)
        } else if let Some(rest) = t.strip_prefix('c') {
            num(rest).map(PatternName::Cycle)
        } else {
            None
        };
        let p = parsed.ok_or_else(|| PatternError::Unknown(s.to_string()))?;
        named_graph(p)?;
        Ok(p)
    }
}

fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, PatternError> {
    Ok(Graph::from_edge_list(n, edges)?)
}

/// The labeled representative of a named graph.
pub fn named_graph(name: PatternName) -> Result<Graph, PatternError> {
    match name {
        PatternName::Complete(t) if t >= 1 => Ok(Graph::complete(t)?),
        PatternName::CoComplete(t) if t >= 1 => Ok(Graph::empty(t)?),
        PatternName::Path(t) if t >= 1 => {
            let e: Vec<_> = (1..t).map(|i| (i - 1, i)).collect();
            build(t, &e)
        }
        PatternName::Cycle(t) if t >= 3 => {
            let e: Vec<_> = (0..t).map(|i| (i, (i + 1) % t)).collect();
            build(t, &e)
        }
        PatternName::Diamond => build(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        PatternName::Paw => build(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]),
        PatternName::Claw => build(4, &[(0, 1), (0, 2), (0, 3)]),
        PatternName::P2PlusP1s(l) => build(l + 2, &[(0, 1)]),
        PatternName::P3PlusP1 => build(4, &[(0, 1), (1, 2)]),
        PatternName::K3PlusP1 => build(4, &[(0, 1), (0, 2), (1, 2)]),
        PatternName::TwoK2 => build(4, &[(0, 1), (2, 3)]),
        PatternName::Complete(_) => Err(PatternError::InvalidParameter("K_t needs t >= 1")),
        PatternName::CoComplete(_) => Err(PatternError::InvalidParameter("co-K_t needs t >= 1")),
        PatternName::Path(_) => Err(PatternError::InvalidParameter("P_t needs t >= 1")),
        PatternName::Cycle(_) => Err(PatternError::InvalidParameter("C_t needs t >= 3")),
    }
}

/// An injective map `φ` from `V(h)` into `V(g)` with `uv ∈ E(h)` exactly
/// when `φ(u)φ(v) ∈ E(g)`, or `None`.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let (n, p) = (g.order(), h.order());
    if p > n {
        return None;
    }
    // Map pattern vertices highest degree first, preferring ones adjacent
    // to what is already placed.
    let mut order: Vec<usize> = Vec::with_capacity(p);
    let mut placed = 0u32;
    while order.len() < p {
        let next = (0..p)
            .filter(|&u| placed >> u & 1 == 0)
            .max_by_key(|&u| ((h.row(u) & placed).count_ones(), h.degree(u), std::cmp::Reverse(u)))
            .expect("unplaced vertex exists");
        order.push(next);
        placed |= 1 << next;
    }
    fn rec(g: &Graph, h: &Graph, order: &[usize], i: usize, map: &mut [usize], used: u32) -> bool {
        if i == order.len() {
            return true;
        }
        let u = order[i];
        let du = h.degree(u);
        // Required neighbors and non-neighbors among already-mapped images.
        let mut must = g.vertices().mask() & !used;
        for &w in &order[..i] {
            let img = map[w];
            if h.has_edge(u, w) {
                must &= g.row(img);
            } else {
                must &= !g.row(img);
            }
        }
        for v in Bits(must) {
            if g.degree(v) < du {
                continue;
            }
            map[u] = v;
            if rec(g, h, order, i + 1, map, used | 1 << v) {
                return true;
            }
        }
        false
    }
    let mut map = vec![usize::MAX; p];
    rec(g, h, &order, 0, &mut map, 0).then_some(map)
}

/// Whether `g[within]` is a disjoint union of cliques (P₃-free).
pub fn is_cluster_within(g: &Graph, within: VertexSet) -> bool {
    let m = within.mask();
    Bits(m).all(|x| {
        let nx = g.row(x) & m;
        Bits(nx).all(|y| (g.row(y) & m) | 1 << y == nx | 1 << x)
    })
}

/// Finds an induced P₃+P₁ as `[path end, path middle, path end, isolated]`.
pub fn find_copaw(g: &Graph) -> Option<Vec<usize>> {
    let all = g.vertices().mask();
    for v in 0..g.order() {
        let m = all & !g.row(v) & !(1 << v);
        for y in Bits(m) {
            let ny = g.row(y) & m;
            for x in Bits(ny) {
                let far = ny & !g.row(x) & !(1 << x);
                if far != 0 {
                    let z = far.trailing_zeros() as usize;
                    return Some(vec![x, y, z, v]);
                }
            }
        }
    }
    None
}

/// (P₃+P₁)-free test: every non-neighborhood must induce a union of cliques.
pub fn is_copaw_free(g: &Graph) -> bool {
    let all = g.vertices().mask();
    (0..g.order()).all(|v| is_cluster_within(g, VertexSet(all & !g.row(v) & !(1 << v))))
}

/// (P₂+ℓP₁)-free test: for each edge, the vertices adjacent to neither end
/// must not contain ℓ pairwise non-adjacent vertices.
pub fn is_p2_lp1_free(g: &Graph, l: usize) -> bool {
    let all = g.vertices().mask();
    for (u, v) in g.edges() {
        let rest = all & !(g.row(u) | g.row(v) | 1 << u | 1 << v);
        if has_independent_set(g, VertexSet(rest), l) {
            return false;
        }
    }
    true
}

/// H-free test for a named pattern, using the specialized routines where
/// they exist.
pub fn is_free(g: &Graph, name: PatternName) -> bool {
    match name {
        PatternName::P3PlusP1 => is_copaw_free(g),
        PatternName::P2PlusP1s(l) => is_p2_lp1_free(g, l),
        PatternName::Complete(t) => crate::invariants::max_clique_bounded(g, g.vertices(), t).len() < t,
        PatternName::CoComplete(t) => !has_independent_set(g, g.vertices(), t),
        _ => match named_graph(name) {
            Ok(h) => contains_induced(g, &h).is_none(),
            Err(_) => true,
        },
    }
}

/// Generic H-free test by backtracking, never specialized.
pub fn is_free_generic(g: &Graph, name: PatternName) -> bool {
    match named_graph(name) {
        Ok(h) => contains_induced(g, &h).is_none(),
        Err(_) => true,
    }
}

/// One join factor of a (P₃+P₁)-free graph, with every kind that holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JoinFactor {
    pub vertices: VertexSet,
    pub alpha_le_2: bool,
    pub union_of_cliques: bool,
}

/// `G = H₁ ∨ H₂ ∨ ⋯ ∨ Hₙ`, factors being the vertex sets of the components
/// of the complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinDecomposition {
    pub factors: Vec<JoinFactor>,
}

impl JoinDecomposition {
    /// Rebuilds the join of the factor subgraphs, factors in order.
    pub fn reassemble(&self, g: &Graph) -> Result<Graph, GraphError> {
        let mut acc = Graph::empty(0)?;
        for f in &self.factors {
            acc = acc.join(&g.induced_subgraph(f.vertices))?;
        }
        Ok(acc)
    }
}

/// Splits a (P₃+P₁)-free graph into join factors; `None` if `g` contains
/// P₃+P₁.
pub fn copaw_decompose(g: &Graph) -> Option<JoinDecomposition> {
    if !is_copaw_free(g) {
        return None;
    }
    let factors = g
        .complement()
        .components()
        .into_iter()
        .map(|s| JoinFactor {
            vertices: s,
            alpha_le_2: !has_independent_set(g, s, 3),
            union_of_cliques: is_cluster_within(g, s),
        })
        .collect();
    Some(JoinDecomposition { factors })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProfileError {
    #[error("set {0} is not independent")]
    NotIndependent(VertexSet),
    #[error("set {set} is not maximal: vertex {vertex} can be added")]
    NotMaximal { set: VertexSet, vertex: usize },
}

/// For every vertex outside the maximal independent set `s`, the number of
/// its non-neighbors in `s`, as `(vertex, count)` pairs.
pub fn nonneighbor_profile(g: &Graph, s: VertexSet) -> Result<Vec<(usize, usize)>, ProfileError> {
    if !s.is_subset(g.vertices()) || !g.is_independent(s) {
        return Err(ProfileError::NotIndependent(s));
    }
    let outside = g.vertices().difference(s);
    if let Some(v) = outside.iter().find(|&v| g.row(v) & s.mask() == 0) {
        return Err(ProfileError::NotMaximal { set: s, vertex: v });
    }
    Ok(outside.iter().map(|v| (v, (s.mask() & !g.row(v)).count_ones() as usize)).collect())
}
