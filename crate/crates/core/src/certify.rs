//! Certifying k-coloring for (P₃+P₁)-free graphs.
//!
//! Every answer carries a witness that [`verify_certificate`] can check
//! from scratch: a coloring, an induced (k+1)-vertex-critical subgraph, or
//! an induced P₃+P₁.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use thiserror::Error;

use crate::canon::{canonical_form, is_isomorphic, CanonicalCode};
use crate::critical::{find_critical_subgraph, is_vertex_critical};
use crate::data;
use crate::enumerate::{census_copaw_critical, CensusError};
use crate::graph::{Graph, VertexSet};
use crate::hfree::{contains_induced, copaw_decompose, find_copaw, is_copaw_free, PatternName};
use crate::invariants::{optimal_coloring, Coloring};
use crate::io::{from_graph6, parse_graphs, to_graph6, FormatError, LineError};

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("colorer supports k in 3..=5, got {0}")]
    UnsupportedK(usize),
    #[error("database level {found} does not match the required level {expected}")]
    LevelMismatch { expected: usize, found: usize },
    #[error("no database for level {0}: no data file given and census disabled")]
    MissingData(usize),
    #[error("database member fails its checks: {0}")]
    BadMember(CanonicalCode),
    #[error("critical subgraph {0} is missing from the database")]
    NotInDatabase(CanonicalCode),
    #[error("bad database header {0:?}")]
    BadHeader(String),
    #[error("database declares {declared} graphs but holds {found}")]
    CountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Line(#[from] LineError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Outcome of [`certify_color`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifiedAnswer {
    /// A proper coloring with at most k colors.
    Yes(Coloring),
    /// A vertex set inducing a (k+1)-vertex-critical subgraph.
    No(VertexSet),
    /// An induced P₃+P₁, as `[path end, path middle, path end, isolated]`.
    NotInClass(Vec<usize>),
}

impl CertifiedAnswer {
    pub fn verdict(&self) -> &'static str {
        match self {
            CertifiedAnswer::Yes(_) => "YES",
            CertifiedAnswer::No(_) => "NO",
            CertifiedAnswer::NotInClass(_) => "NOT-IN-CLASS",
        }
    }

    /// The witness vertex set for `No` and `NotInClass`.
    pub fn witness(&self) -> Option<VertexSet> {
        match self {
            CertifiedAnswer::Yes(_) => None,
            CertifiedAnswer::No(s) => Some(*s),
            CertifiedAnswer::NotInClass(e) => Some(e.iter().copied().collect()),
        }
    }
}

/// All k-vertex-critical (P₃+P₁)-free graphs for one level k, sorted by
/// order then code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalDatabase {
    k: usize,
    codes: BTreeSet<CanonicalCode>,
    graphs: Vec<Graph>,
}

impl CriticalDatabase {
    /// Builds from codes after re-checking every member.
    pub fn from_codes(k: usize, codes: BTreeSet<CanonicalCode>) -> Result<CriticalDatabase, CertifyError> {
        for c in &codes {
            let g = c.graph();
            if !is_copaw_free(&g) || !is_vertex_critical(&g, k).is_critical {
                return Err(CertifyError::BadMember(c.clone()));
            }
        }
        Ok(Self::from_trusted(k, codes))
    }

    fn from_trusted(k: usize, codes: BTreeSet<CanonicalCode>) -> CriticalDatabase {
        let mut sorted: Vec<&CanonicalCode> = codes.iter().collect();
        sorted.sort_by_key(|c| (c.order(), (*c).clone()));
        let graphs = sorted.into_iter().map(CanonicalCode::graph).collect();
        CriticalDatabase { k, codes, graphs }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn codes(&self) -> &BTreeSet<CanonicalCode> {
        &self.codes
    }

    /// Members as canonical graphs, ascending by order.
    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.codes.contains(&canonical_form(g))
    }

    /// Header `k=<level> count=<n>` then one graph6 line per member.
    pub fn to_text(&self) -> String {
        let mut s = format!("k={} count={}\n", self.k, self.len());
        for g in &self.graphs {
            s.push_str(&to_graph6(g));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<CriticalDatabase, CertifyError> {
        let mut lines = text.lines();
        let header = lines.next().unwrap_or("").trim();
        let bad = || CertifyError::BadHeader(header.to_string());
        let mut k = None;
        let mut count = None;
        for field in header.split_whitespace() {
            match field.split_once('=') {
                Some(("k", v)) => k = Some(v.parse::<usize>().map_err(|_| bad())?),
                Some(("count", v)) => count = Some(v.parse::<usize>().map_err(|_| bad())?),
                _ => return Err(bad()),
            }
        }
        let (k, declared) = k.zip(count).ok_or_else(bad)?;
        let mut codes = BTreeSet::new();
        for line in lines.map(str::trim).filter(|l| !l.is_empty()) {
            codes.insert(canonical_form(&from_graph6(line)?));
        }
        if codes.len() != declared {
            return Err(CertifyError::CountMismatch { declared, found: codes.len() });
        }
        CriticalDatabase::from_codes(k, codes)
    }

    pub fn load(path: &Path) -> Result<CriticalDatabase, CertifyError> {
        Self::from_text(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<(), CertifyError> {
        Ok(std::fs::write(path, self.to_text())?)
    }
}

/// The level-`k` database, `4 <= k <= 6`. Level 4 comes from a census,
/// level 5 from the shipped 178-graph list, level 6 from a census when
/// `allow_census` is set.
pub fn build_database(k: usize, allow_census: bool) -> Result<CriticalDatabase, CertifyError> {
    match k {
        4 => {
            let c = census_copaw_critical(4, 7)?;
            Ok(CriticalDatabase::from_trusted(4, c.codes()))
        }
        5 => {
            let codes = parse_graphs(data::APPENDIX5_EDGES)?.iter().map(|(_, g)| canonical_form(g)).collect();
            CriticalDatabase::from_codes(5, codes)
        }
        6 if allow_census => {
            let c = census_copaw_critical(6, 11)?;
            Ok(CriticalDatabase::from_trusted(6, c.codes()))
        }
        6 => Err(CertifyError::MissingData(6)),
        _ => Err(CertifyError::MissingData(k)),
    }
}

/// Optimal coloring assembled from the join factors: each factor colored on
/// its own (complement matching when α ≤ 2, one color per clique position
/// for a union of cliques), palettes kept disjoint across factors.
fn structural_coloring(g: &Graph) -> Option<Coloring> {
    let dec = copaw_decompose(g)?;
    let mut raw = vec![0usize; g.order()];
    let mut offset = 0;
    for f in &dec.factors {
        let verts = f.vertices.to_vec();
        let used = if f.union_of_cliques {
            let mut width = 0;
            for comp in g.induced_subgraph(f.vertices).components() {
                for (i, local) in comp.iter().enumerate() {
                    raw[verts[local]] = offset + i;
                }
                width = width.max(comp.len());
            }
            width
        } else {
            // α ≤ 2, where the matching-based coloring is optimal.
            let c = optimal_coloring(&g.induced_subgraph(f.vertices));
            for (local, &v) in verts.iter().enumerate() {
                raw[v] = offset + c.color(local);
            }
            c.num_colors()
        };
        offset += used;
    }
    Some(Coloring::from_colors(&raw))
}

/// Decides k-colorability of `g` with a checkable certificate. `db` must
/// hold the (k+1)-critical graphs.
pub fn certify_color(g: &Graph, k: usize, db: &CriticalDatabase) -> Result<CertifiedAnswer, CertifyError> {
    if !(3..=5).contains(&k) {
        return Err(CertifyError::UnsupportedK(k));
    }
    if db.k() != k + 1 {
        return Err(CertifyError::LevelMismatch { expected: k + 1, found: db.k() });
    }
    if let Some(emb) = find_copaw(g) {
        return Ok(CertifiedAnswer::NotInClass(emb));
    }
    let coloring = structural_coloring(g).expect("input is (P3+P1)-free");
    if coloring.num_colors() <= k {
        return Ok(CertifiedAnswer::Yes(coloring));
    }
    let m = g.edge_count();
    for h in db.graphs() {
        if h.order() > g.order() {
            break;
        }
        if h.edge_count() > m {
            continue;
        }
        if let Some(map) = contains_induced(g, h) {
            return Ok(CertifiedAnswer::No(map.into_iter().collect()));
        }
    }
    let s = find_critical_subgraph(g, k + 1).expect("chromatic number exceeds k");
    let code = canonical_form(&g.induced_subgraph(s));
    if !db.codes().contains(&code) {
        return Err(CertifyError::NotInDatabase(code));
    }
    Ok(CertifiedAnswer::No(s))
}

/// Checks a certificate using only graph operations and exact invariants.
pub fn verify_certificate(g: &Graph, k: usize, answer: &CertifiedAnswer) -> bool {
    match answer {
        CertifiedAnswer::Yes(c) => c.is_proper(g) && c.num_colors() <= k,
        CertifiedAnswer::No(s) => {
            s.is_subset(g.vertices()) && is_vertex_critical(&g.induced_subgraph(*s), k + 1).is_critical
        }
        CertifiedAnswer::NotInClass(emb) => {
            let s: VertexSet = emb.iter().copied().collect();
            let p = PatternName::P3PlusP1.graph().expect("fixed pattern");
            emb.len() == 4 && s.len() == 4 && s.is_subset(g.vertices()) && is_isomorphic(&g.induced_subgraph(s), &p)
        }
    }
}

/// Builds each database on first use. The level-6 database comes from
/// `db6_path` when given, else from a census run.
#[derive(Debug, Default)]
pub struct Certifier {
    db6_path: Option<PathBuf>,
    dbs: [OnceLock<CriticalDatabase>; 3],
}

impl Certifier {
    pub fn new(db6_path: Option<PathBuf>) -> Certifier {
        Certifier { db6_path, dbs: Default::default() }
    }

    /// The level-`level` database, building it if needed.
    pub fn database(&self, level: usize) -> Result<&CriticalDatabase, CertifyError> {
        if !(4..=6).contains(&level) {
            return Err(CertifyError::MissingData(level));
        }
        let cell = &self.dbs[level - 4];
        if let Some(db) = cell.get() {
            return Ok(db);
        }
        let db = match (&self.db6_path, level) {
            (Some(p), 6) => {
                let db = CriticalDatabase::load(p)?;
                if db.k() != 6 {
                    return Err(CertifyError::LevelMismatch { expected: 6, found: db.k() });
                }
                db
            }
            _ => build_database(level, true)?,
        };
        Ok(cell.get_or_init(|| db))
    }

    /// Like [`certify_color`], but builds the database only when a
    /// no-certificate is actually needed.
    pub fn certify(&self, g: &Graph, k: usize) -> Result<CertifiedAnswer, CertifyError> {
        if !(3..=5).contains(&k) {
            return Err(CertifyError::UnsupportedK(k));
        }
        if let Some(emb) = find_copaw(g) {
            return Ok(CertifiedAnswer::NotInClass(emb));
        }
        if let Some(c) = structural_coloring(g).filter(|c| c.num_colors() <= k) {
            return Ok(CertifiedAnswer::Yes(c));
        }
        certify_color(g, k, self.database(k + 1)?)
    }
}
