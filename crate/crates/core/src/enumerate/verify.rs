use std::collections::{BTreeSet, HashMap};

use crate::canon::{canonical_form, CanonicalCode};
use crate::critical::is_vertex_critical;
use crate::hfree::{is_free, PatternName};
use crate::io::{parse_graphs, LineError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ListFailure {
    NotFree {
        line: usize,
        pattern: PatternName,
    },
    NotCritical {
        line: usize,
        chromatic_number: usize,
    },
    Duplicate {
        line: usize,
        first_line: usize,
    },
    /// Listed but absent from the reference set.
    Unexpected {
        line: usize,
        code: CanonicalCode,
    },
}

impl std::fmt::Display for ListFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ListFailure::NotFree { line, pattern } => write!(f, "line {line}: contains {pattern}"),
            ListFailure::NotCritical { line, chromatic_number } => {
                write!(f, "line {line}: not critical (chromatic number {chromatic_number})")
            }
            ListFailure::Duplicate { line, first_line } => {
                write!(f, "line {line}: isomorphic to line {first_line}")
            }
            ListFailure::Unexpected { line, code } => write!(f, "line {line}: {code} not in reference set"),
        }
    }
}

/// Outcome of checking a graph list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ListReport {
    pub entries: usize,
    /// Entries with no per-graph failure.
    pub passed: usize,
    pub failures: Vec<ListFailure>,
    /// Reference members not found in the list.
    pub missing: Vec<CanonicalCode>,
}

impl ListReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty() && self.missing.is_empty()
    }
}

/// Checks every listed graph for H-freeness and k-vertex-criticality, that
/// no two are isomorphic, and, given a reference set, that the list equals
/// it up to isomorphism.
pub fn verify_list(
    text: &str,
    k: usize,
    pattern: Option<PatternName>,
    reference: Option<&BTreeSet<CanonicalCode>>,
) -> Result<ListReport, LineError> {
    let graphs = parse_graphs(text)?;
    let mut report = ListReport { entries: graphs.len(), ..Default::default() };
    let mut first_seen: HashMap<CanonicalCode, usize> = HashMap::new();
    for (line, g) in &graphs {
        let before = report.failures.len();
        if let Some(p) = pattern {
            if !is_free(g, p) {
                report.failures.push(ListFailure::NotFree { line: *line, pattern: p });
            }
        }
        let r = is_vertex_critical(g, k);
        if !r.is_critical {
            report.failures.push(ListFailure::NotCritical { line: *line, chromatic_number: r.chromatic_number });
        }
        let code = canonical_form(g);
        if let Some(&first_line) = first_seen.get(&code) {
            report.failures.push(ListFailure::Duplicate { line: *line, first_line });
        } else {
            first_seen.insert(code.clone(), *line);
        }
        if let Some(set) = reference {
            if !set.contains(&code) {
                report.failures.push(ListFailure::Unexpected { line: *line, code });
            }
        }
        if report.failures.len() == before {
            report.passed += 1;
        }
    }
    if let Some(set) = reference {
        report.missing = set.iter().filter(|c| !first_seen.contains_key(c)).cloned().collect();
    }
    Ok(report)
}
