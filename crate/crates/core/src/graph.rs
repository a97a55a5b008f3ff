//! Dense simple graphs on at most [`MAX_ORDER`] vertices.
//!
//! Every vertex keeps its neighborhood as a `u32` bit mask, so vertex sets,
//! neighborhoods and most set algebra are single machine-word operations.

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("order {0} exceeds the maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("adjacency is not symmetric at {0} {1}")]
    Asymmetric(usize, usize),
}

/// A set of vertex indices below [`MAX_ORDER`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> VertexSet {
        VertexSet(low_mask(n))
    }

    #[inline]
    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    #[inline]
    pub fn mask(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 32 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest vertex in the set.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u32);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Simple undirected graph with vertices `0..n`.
///
/// Invariants: adjacency is symmetric, loop-free, and no bit at or above `n`
/// is set. Rows at or above `n` are zero, so derived equality compares graphs
/// vertex-for-vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_ORDER],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        Ok(Graph { n: n as u8, adj: [0; MAX_ORDER] })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        let full = low_mask(n);
        for v in 0..n {
            g.adj[v] = full & !(1 << v);
        }
        Ok(g)
    }

    /// Builds a graph from index pairs. Rejects out-of-range indices,
    /// self-loops and repeated pairs (in either orientation).
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor masks, validating every invariant.
    pub fn from_adjacency(rows: &[u32]) -> Result<Graph, GraphError> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let full = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let w = (row & !full).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            g.adj[v] = row;
        }
        for u in 0..n {
            for w in Bits(rows[u]) {
                if rows[w] >> u & 1 == 0 {
                    return Err(GraphError::Asymmetric(u, w));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Raw neighbor mask of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> u32 {
        self.adj[v]
    }

    /// Neighbor masks of all `n` vertices.
    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.order()]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            for v in Bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    #[inline]
    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// Appends a vertex adjacent to exactly `nbrs`. Used by generators.
    #[inline]
    pub(crate) fn push_vertex_unchecked(&self, nbrs: u32) -> Graph {
        let mut g = *self;
        let v = self.order();
        g.n += 1;
        g.adj[v] = nbrs;
        for u in Bits(nbrs) {
            g.adj[u] |= 1 << v;
        }
        g
    }

    /// Same graph with the vertex `v` appended, adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<Graph, GraphError> {
        let n = self.order();
        if n + 1 > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n + 1));
        }
        if !nbrs.is_subset(self.vertices()) {
            let w = nbrs.difference(self.vertices()).first().unwrap_or(n);
            return Err(GraphError::VertexOutOfRange { vertex: w, n });
        }
        Ok(self.push_vertex_unchecked(nbrs.0))
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let full = low_mask(n);
        let mut g = *self;
        for v in 0..n {
            g.adj[v] = !self.adj[v] & full & !(1 << v);
        }
        g
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in increasing index order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        let s = s.intersection(self.vertices());
        let mut g = Graph { n: s.len() as u8, adj: [0; MAX_ORDER] };
        for (i, v) in s.iter().enumerate() {
            g.adj[i] = compress(self.adj[v], s.0);
        }
        g
    }

    /// `G - v`, relabeling the vertices above `v` down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced_subgraph(self.vertices().difference(VertexSet::singleton(v)))
    }

    /// `G - S`.
    pub fn delete_vertices(&self, s: VertexSet) -> Graph {
        self.induced_subgraph(self.vertices().difference(s))
    }

    /// Disjoint union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let (a, b) = (self.order(), other.order());
        if a + b > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(a + b));
        }
        let mut g = *self;
        g.n = (a + b) as u8;
        for v in 0..b {
            g.adj[a + v] = other.adj[v] << a;
        }
        Ok(g)
    }

    /// Join: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let (a, b) = (self.order(), other.order());
        let mut g = self.disjoint_union(other)?;
        let left = low_mask(a);
        let right = low_mask(a + b) & !left;
        for v in 0..a {
            g.adj[v] |= right;
        }
        for v in a..a + b {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        assert_eq!(perm.len(), n, "permutation length must equal order");
        let mut seen = 0u32;
        for &p in perm {
            assert!(p < n && seen >> p & 1 == 0, "not a permutation");
            seen |= 1 << p;
        }
        let mut g = Graph { n: self.n, adj: [0; MAX_ORDER] };
        for v in 0..n {
            let mut row = 0u32;
            for w in Bits(self.adj[v]) {
                row |= 1 << perm[w];
            }
            g.adj[perm[v]] = row;
        }
        g
    }

    /// Whether `s` is an independent set.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    /// Whether `s` is a clique.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.0 & !self.adj[v] & !(1 << v) == 0)
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices().0;
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            out.push(VertexSet(comp));
            left &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_triangle_free(&self) -> bool {
        (0..self.order()).all(|u| Bits(self.adj[u]).all(|v| self.adj[u] & self.adj[v] == 0))
    }
}

/// Packs the bits of `x` selected by `sel` into the low bits.
#[inline]
pub(crate) fn compress(x: u32, sel: u32) -> u32 {
    let mut out = 0u32;
    for (bit, v) in Bits(sel).enumerate() {
        out |= (x >> v & 1) << bit;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}: ", self.order())?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u} {v}")?;
        }
        write!(f, ")")
    }
}
