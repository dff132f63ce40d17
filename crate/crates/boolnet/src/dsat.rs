//! Polynomial-time satisfiability of normal forms: complementary-pair
//! detection in a clause via a bounded two-list merge scan, clause-by-clause
//! DNF solving, and CNF solving through conversion to DNF, all with
//! comparison accounting.

use thiserror::Error;

use crate::expr::TruthAssignment;
use crate::nf::{embed_cnf, to_dnf, CnfExpr, ConjClause, DnfExpr, NfConfig, NfError};

/// Operation counters for the merge-scan bound and solver cost accounting.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ComparisonStats {
    /// Literal-index comparisons spent in merge scans.
    pub comparisons: u64,
    /// Comparisons spent sorting during normalization.
    pub sort_ops: u64,
    pub clauses_checked: u64,
    /// Set when a satisfiable clause ended the scan before the last clause.
    pub aborted_early: bool,
}

impl ComparisonStats {
    pub fn absorb(&mut self, other: &ComparisonStats) {
        self.comparisons += other.comparisons;
        self.sort_ops += other.sort_ops;
        self.clauses_checked += other.clauses_checked;
        self.aborted_early |= other.aborted_early;
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DsatError {
    #[error("input list is not strictly increasing at position {pos}")]
    UnsortedInput { pos: usize },
    #[error("clause violates the normalized ordering discipline")]
    UnnormalizedClause,
    #[error(transparent)]
    Conversion(#[from] NfError),
}

fn check_strictly_increasing(list: &[u32]) -> Result<(), DsatError> {
    for (i, w) in list.windows(2).enumerate() {
        if w[0] >= w[1] {
            return Err(DsatError::UnsortedInput { pos: i + 1 });
        }
    }
    Ok(())
}

/// Find a common element of two duplicate-free sorted lists, counting
/// comparisons. A single scan step compares the two heads once and
/// advances past the smaller; the count never exceeds 2(d(L)+d(M)).
pub fn find_equal(l: &[u32], m: &[u32]) -> Result<(Option<u32>, ComparisonStats), DsatError> {
    check_strictly_increasing(l)?;
    check_strictly_increasing(m)?;
    let mut stats = ComparisonStats::default();
    let (mut i, mut j) = (0usize, 0usize);
    while i < l.len() && j < m.len() {
        stats.comparisons += 1;
        match l[i].cmp(&m[j]) {
            std::cmp::Ordering::Equal => return Ok((Some(l[i]), stats)),
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
        }
    }
    Ok((None, stats))
}

/// Outcome of a satisfiability check with its cost accounting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatOutcome {
    pub satisfiable: bool,
    pub witness: Option<TruthAssignment>,
    pub stats: ComparisonStats,
}

/// A conjunctive clause is satisfiable iff it holds no variable together
/// with its negation. On success the witness assigns 1 to every plain
/// variable and 0 to every negated one.
pub fn clause_satisfiable(c: &ConjClause) -> Result<SatOutcome, DsatError> {
    if !ConjClause::is_normalized(c.literals()) {
        return Err(DsatError::UnnormalizedClause);
    }
    // Linear separation into the two index lists; normalization already
    // placed positives first, each block sorted.
    let positives: Vec<u32> = c
        .literals()
        .iter()
        .filter(|l| !l.negated)
        .map(|l| l.var)
        .collect();
    let negatives: Vec<u32> = c
        .literals()
        .iter()
        .filter(|l| l.negated)
        .map(|l| l.var)
        .collect();
    let (matched, mut stats) = find_equal(&positives, &negatives)?;
    stats.clauses_checked = 1;
    if matched.is_some() {
        return Ok(SatOutcome {
            satisfiable: false,
            witness: None,
            stats,
        });
    }
    let witness = positives
        .iter()
        .map(|v| (*v, true))
        .chain(negatives.iter().map(|v| (*v, false)))
        .collect();
    Ok(SatOutcome {
        satisfiable: true,
        witness: Some(witness),
        stats,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScanMode {
    /// Stop at the first satisfiable clause.
    #[default]
    EarlyExit,
    /// Check every clause; used for stable cost measurements.
    FullScan,
}

/// A DNF is satisfiable iff one of its conjunctive clauses is. The witness
/// comes from the first satisfiable clause, extended with 0 for the DNF's
/// remaining variables.
pub fn dnf_satisfiable(d: &DnfExpr, mode: ScanMode) -> Result<SatOutcome, DsatError> {
    let mut stats = ComparisonStats::default();
    let mut hit: Option<TruthAssignment> = None;
    for (idx, clause) in d.clauses().iter().enumerate() {
        let outcome = clause_satisfiable(clause)?;
        stats.absorb(&outcome.stats);
        if outcome.satisfiable && hit.is_none() {
            hit = outcome.witness;
            if mode == ScanMode::EarlyExit {
                stats.aborted_early = idx + 1 < d.clauses().len();
                break;
            }
        }
    }
    match hit {
        Some(mut witness) => {
            for clause in d.clauses() {
                for lit in clause.literals() {
                    if witness.get(lit.var).is_none() {
                        witness.set(lit.var, false);
                    }
                }
            }
            Ok(SatOutcome {
                satisfiable: true,
                witness: Some(witness),
                stats,
            })
        }
        None => Ok(SatOutcome {
            satisfiable: false,
            witness: None,
            stats,
        }),
    }
}

/// Result of the CNF route, with the measured clause-count blowup of the
/// CNF→DNF conversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfOutcome {
    pub satisfiable: bool,
    pub witness: Option<TruthAssignment>,
    /// (DNF clause count, CNF clause count).
    pub blowup: (u64, u64),
    pub stats: ComparisonStats,
}

/// Solve CNF satisfiability by converting to DNF and scanning clauses.
/// The conversion is plain distribution and may exceed the clause cap;
/// that abort is reported as an error carrying the attempted size.
pub fn cnf_satisfiable_via_dnf(
    c: &CnfExpr,
    cfg: &NfConfig,
    mode: ScanMode,
) -> Result<CnfOutcome, DsatError> {
    let dnf = to_dnf(&embed_cnf(c), cfg)?;
    let outcome = dnf_satisfiable(&dnf, mode)?;
    Ok(CnfOutcome {
        satisfiable: outcome.satisfiable,
        witness: outcome.witness,
        blowup: (dnf.clauses().len() as u64, c.clauses().len() as u64),
        stats: outcome.stats,
    })
}
