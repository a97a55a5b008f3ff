use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use super::augment::{extend_layer, extend_layer_map, GraphClass};
use crate::canon::{canonical_form, CanonicalCode};
use crate::critical::is_vertex_critical;
use crate::graph::Graph;
use crate::hfree::{is_copaw_free, is_free, PatternName};
use crate::invariants::matching_number;

/// Largest order the triangle-free (α ≤ 2) pipelines will generate.
pub const MAX_ALPHA2_ORDER: usize = 11;
/// Largest order the all-graphs pipeline will generate.
pub const MAX_ALL_GRAPHS_ORDER: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("k = {0} is outside the supported range")]
    UnsupportedK(usize),
    #[error("maximum order {n_max} exceeds the limit {limit} for this mode")]
    OrderTooLarge { n_max: usize, limit: usize },
    #[error("join {0} of smaller critical graphs is missing from the census")]
    JoinCrossCheck(CanonicalCode),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub count: usize,
    pub graphs: Option<Vec<CanonicalCode>>,
}

/// Per-order counts of k-vertex-critical graphs in a class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub k: usize,
    pub pattern: Option<PatternName>,
    pub rows: Vec<CensusRow>,
}

impl Census {
    pub fn total(&self) -> usize {
        self.rows.iter().map(|r| r.count).sum()
    }

    /// `(n, count)` pairs.
    pub fn counts(&self) -> Vec<(usize, usize)> {
        self.rows.iter().map(|r| (r.n, r.count)).collect()
    }

    /// Every code across all rows.
    pub fn codes(&self) -> BTreeSet<CanonicalCode> {
        self.rows.iter().flat_map(|r| r.graphs.iter().flatten().cloned()).collect()
    }

    pub fn row(&self, n: usize) -> Option<&CensusRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    /// `k,n,count` lines.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("k,n,count\n");
        for r in &self.rows {
            s.push_str(&format!("{},{},{}\n", self.k, r.n, r.count));
        }
        s
    }

    /// Aligned text table with a total line.
    pub fn to_table(&self) -> String {
        let mut s = format!("{:>5}  {:>8}\n", "n", "count");
        for r in &self.rows {
            s.push_str(&format!("{:>5}  {:>8}\n", r.n, r.count));
        }
        s.push_str(&format!("{:>5}  {:>8}\n", "total", self.total()));
        s
    }
}

fn rows_from(k: usize, n_max: usize, codes: &BTreeSet<CanonicalCode>) -> Vec<CensusRow> {
    (k.min(n_max + 1)..=n_max)
        .map(|n| {
            let graphs: Vec<CanonicalCode> = codes.iter().filter(|c| c.order() == n).cloned().collect();
            CensusRow { n, count: graphs.len(), graphs: Some(graphs) }
        })
        .collect()
}

/// All (P₃+P₁)-free vertex-critical graphs of order at most `n_max`, grouped
/// by chromatic number: entry `j` holds the `j`-critical ones. Complements
/// of triangle-free graphs are exactly the graphs with α ≤ 2, which contain
/// every such critical graph.
pub fn copaw_critical_levels(k_max: usize, n_max: usize) -> Result<Vec<BTreeSet<CanonicalCode>>, CensusError> {
    if n_max > MAX_ALPHA2_ORDER {
        return Err(CensusError::OrderTooLarge { n_max, limit: MAX_ALPHA2_ORDER });
    }
    let classify = |t: &Graph| -> Option<(usize, CanonicalCode)> {
        let g = t.complement();
        if !is_copaw_free(&g) {
            return None;
        }
        let chi = g.order() - matching_number(t);
        if chi > k_max || !is_vertex_critical(&g, chi).is_critical {
            return None;
        }
        Some((chi, canonical_form(&g)))
    };
    let mut levels = vec![BTreeSet::new(); k_max + 1];
    let all = |_: &Graph| true;
    let mut layer = vec![Graph::empty(0).expect("order 0")];
    for n in 1..=n_max {
        let found: Vec<(usize, CanonicalCode)> = if n < n_max {
            layer = extend_layer(&layer, GraphClass::TriangleFree, &all);
            layer.par_iter().filter_map(classify).collect()
        } else {
            extend_layer_map(&layer, GraphClass::TriangleFree, &all, &classify)
        };
        for (chi, code) in found {
            levels[chi].insert(code);
        }
    }
    Ok(levels)
}

/// Census of k-vertex-critical (P₃+P₁)-free graphs by order, `k..=n_max`.
///
/// Also rebuilds every join of lower-level critical graphs whose levels sum
/// to `k` and fails if any is missing from the census.
pub fn census_copaw_critical(k: usize, n_max: usize) -> Result<Census, CensusError> {
    if !(3..=7).contains(&k) {
        return Err(CensusError::UnsupportedK(k));
    }
    let limit = (2 * k - 1).min(MAX_ALPHA2_ORDER);
    if n_max > limit {
        return Err(CensusError::OrderTooLarge { n_max, limit });
    }
    let levels = copaw_critical_levels(k, n_max)?;
    let target = &levels[k];
    for k1 in 1..k {
        let k2 = k - k1;
        if k1 > k2 {
            break;
        }
        for a in &levels[k1] {
            for b in &levels[k2] {
                if a.order() + b.order() > n_max {
                    continue;
                }
                let join = a.graph().join(&b.graph()).expect("orders within cap");
                let code = canonical_form(&join);
                if !target.contains(&code) {
                    return Err(CensusError::JoinCrossCheck(code));
                }
            }
        }
    }
    Ok(Census { k, pattern: Some(PatternName::P3PlusP1), rows: rows_from(k, n_max, target) })
}

/// Search space for [`census_general`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchSpace {
    /// Every graph, up to order 9.
    AllGraphs,
    /// Only graphs with α ≤ 2, up to order 11.
    AlphaAtMostTwo,
}

/// Census of k-vertex-critical H-free graphs (or all graphs when `pattern`
/// is `None`) of order at most `n_max`, by exhaustive isomorph-free
/// generation of the H-free graphs in the search space.
pub fn census_general(
    k: usize,
    pattern: Option<PatternName>,
    n_max: usize,
    space: SearchSpace,
) -> Result<Census, CensusError> {
    if k == 0 {
        return Err(CensusError::UnsupportedK(k));
    }
    let limit = match space {
        SearchSpace::AllGraphs => MAX_ALL_GRAPHS_ORDER,
        SearchSpace::AlphaAtMostTwo => MAX_ALPHA2_ORDER,
    };
    if n_max > limit {
        return Err(CensusError::OrderTooLarge { n_max, limit });
    }
    let free = move |g: &Graph| pattern.is_none_or(|p| is_free(g, p));
    let (class, host): (GraphClass, fn(&Graph) -> Graph) = match space {
        SearchSpace::AllGraphs => (GraphClass::All, |g| *g),
        SearchSpace::AlphaAtMostTwo => (GraphClass::TriangleFree, |t| t.complement()),
    };
    let keep = |g: &Graph| free(&host(g));
    let critical = |g: &Graph| {
        let h = host(g);
        is_vertex_critical(&h, k).is_critical.then(|| canonical_form(&h))
    };
    let mut codes = BTreeSet::new();
    let mut layer = vec![Graph::empty(0).expect("order 0")];
    for n in 1..=n_max {
        let found: Vec<CanonicalCode> = if n < n_max {
            layer = extend_layer(&layer, class, &keep);
            layer.par_iter().filter_map(critical).collect()
        } else {
            extend_layer_map(&layer, class, &keep, &critical)
        };
        codes.extend(found);
    }
    Ok(Census { k, pattern, rows: rows_from(k, n_max, &codes) })
}
