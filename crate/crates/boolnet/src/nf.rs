//! Literals, clauses, and semantics-preserving conversion to disjunctive
//! and conjunctive normal form by negation push-down and distribution.

use std::fmt;

use thiserror::Error;

use crate::expr::Expr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: u32,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: u32) -> Literal {
        Literal { var, negated: false }
    }

    pub fn neg(var: u32) -> Literal {
        Literal { var, negated: true }
    }

    pub fn complement(self) -> Literal {
        Literal {
            var: self.var,
            negated: !self.negated,
        }
    }

    fn to_expr(self) -> Expr {
        if self.negated {
            Expr::not(Expr::var(self.var))
        } else {
            Expr::var(self.var)
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "¬")?;
        }
        write!(f, "x{}", "1".repeat(self.var as usize))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NfError {
    #[error("a clause must contain at least one literal")]
    EmptyClause,
    #[error("clause cap of {cap} exceeded: distribution would produce {attempted} clauses")]
    ClauseCapExceeded { cap: u64, attempted: u64 },
}

/// Canonical clause ordering: positive literals first, then negated ones,
/// each block by ascending index, exact duplicates removed.
/// Returns the ordered literals and the number of comparisons spent sorting.
fn normalize_literals(mut lits: Vec<Literal>) -> Result<(Vec<Literal>, u64), NfError> {
    if lits.is_empty() {
        return Err(NfError::EmptyClause);
    }
    let mut comparisons = 0u64;
    lits.sort_by(|a, b| {
        comparisons += 1;
        (a.negated, a.var).cmp(&(b.negated, b.var))
    });
    lits.dedup();
    Ok((lits, comparisons))
}

/// Conjunction of literals: one DNF term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConjClause {
    literals: Vec<Literal>,
}

/// Disjunction of literals: one CNF clause.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DisjClause {
    literals: Vec<Literal>,
}

macro_rules! clause_impl {
    ($name:ident) => {
        impl $name {
            pub fn new(literals: Vec<Literal>) -> Result<Self, NfError> {
                Ok(Self {
                    literals: normalize_literals(literals)?.0,
                })
            }

            /// Like `new`, also reporting the comparison count of the sort.
            pub fn new_counted(literals: Vec<Literal>) -> Result<(Self, u64), NfError> {
                let (literals, comparisons) = normalize_literals(literals)?;
                Ok((Self { literals }, comparisons))
            }

            pub fn literals(&self) -> &[Literal] {
                &self.literals
            }

            pub fn width(&self) -> usize {
                self.literals.len()
            }

            /// True when some variable occurs both plain and negated.
            pub fn has_complementary_pair(&self) -> bool {
                self.literals
                    .iter()
                    .any(|l| l.negated && self.literals.contains(&l.complement()))
            }

            pub fn is_normalized(literals: &[Literal]) -> bool {
                literals
                    .windows(2)
                    .all(|w| (w[0].negated, w[0].var) < (w[1].negated, w[1].var))
                    && !literals.is_empty()
            }
        }
    };
}

clause_impl!(ConjClause);
clause_impl!(DisjClause);

/// Normalize a conjunction of literals (spec ordering discipline).
pub fn normalize_clause(literals: Vec<Literal>) -> Result<ConjClause, NfError> {
    ConjClause::new(literals)
}

/// Disjunction of conjunctive clauses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DnfExpr {
    clauses: Vec<ConjClause>,
}

/// Conjunction of disjunctive clauses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfExpr {
    clauses: Vec<DisjClause>,
}

impl DnfExpr {
    pub fn new(clauses: Vec<ConjClause>) -> Result<Self, NfError> {
        if clauses.is_empty() {
            return Err(NfError::EmptyClause);
        }
        Ok(DnfExpr { clauses })
    }

    pub fn clauses(&self) -> &[ConjClause] {
        &self.clauses
    }

    pub fn total_literals(&self) -> u64 {
        self.clauses.iter().map(|c| c.width() as u64).sum()
    }
}

impl CnfExpr {
    pub fn new(clauses: Vec<DisjClause>) -> Result<Self, NfError> {
        if clauses.is_empty() {
            return Err(NfError::EmptyClause);
        }
        Ok(CnfExpr { clauses })
    }

    pub fn clauses(&self) -> &[DisjClause] {
        &self.clauses
    }
}

#[derive(Debug, Clone)]
pub struct NfConfig {
    /// Abort distribution past this many clauses.
    pub clause_cap: u64,
    /// Drop clauses carrying a complementary pair. Off by default so the
    /// downstream detector sees them.
    pub drop_contradictions: bool,
}

impl Default for NfConfig {
    fn default() -> Self {
        NfConfig {
            clause_cap: 1_000_000,
            drop_contradictions: false,
        }
    }
}

/// Negation normal form: literals at the leaves, ∨/∧ above.
enum Nnf {
    Lit(Literal),
    Or(Box<Nnf>, Box<Nnf>),
    And(Box<Nnf>, Box<Nnf>),
}

fn to_nnf(e: &Expr, negate: bool) -> Nnf {
    match e {
        Expr::Var(i) => Nnf::Lit(Literal {
            var: *i,
            negated: negate,
        }),
        Expr::Not(c) => to_nnf(c, !negate),
        Expr::Or(l, r) => {
            let (l, r) = (Box::new(to_nnf(l, negate)), Box::new(to_nnf(r, negate)));
            // De Morgan: ¬(A∨B) = ¬A∧¬B
            if negate {
                Nnf::And(l, r)
            } else {
                Nnf::Or(l, r)
            }
        }
        Expr::And(l, r) => {
            let (l, r) = (Box::new(to_nnf(l, negate)), Box::new(to_nnf(r, negate)));
            if negate {
                Nnf::Or(l, r)
            } else {
                Nnf::And(l, r)
            }
        }
    }
}

/// Distribute toward DNF term lists. `dual` swaps the roles of ∨ and ∧,
/// which yields CNF clause lists instead.
fn distribute(n: &Nnf, dual: bool, cap: u64) -> Result<Vec<Vec<Literal>>, NfError> {
    match n {
        Nnf::Lit(l) => Ok(vec![vec![*l]]),
        Nnf::Or(a, b) if !dual => concat(n_pair(a, b, dual, cap)?),
        Nnf::And(a, b) if dual => concat(n_pair(a, b, dual, cap)?),
        Nnf::Or(a, b) | Nnf::And(a, b) => {
            let (xs, ys) = n_pair(a, b, dual, cap)?;
            let attempted = xs.len() as u64 * ys.len() as u64;
            if attempted > cap {
                return Err(NfError::ClauseCapExceeded { cap, attempted });
            }
            let mut out = Vec::with_capacity(attempted as usize);
            for x in &xs {
                for y in &ys {
                    let mut c = x.clone();
                    c.extend_from_slice(y);
                    out.push(c);
                }
            }
            Ok(out)
        }
    }
}

fn n_pair(
    a: &Nnf,
    b: &Nnf,
    dual: bool,
    cap: u64,
) -> Result<(Vec<Vec<Literal>>, Vec<Vec<Literal>>), NfError> {
    Ok((distribute(a, dual, cap)?, distribute(b, dual, cap)?))
}

fn concat(
    (mut xs, ys): (Vec<Vec<Literal>>, Vec<Vec<Literal>>),
) -> Result<Vec<Vec<Literal>>, NfError> {
    xs.extend(ys);
    Ok(xs)
}

fn finish_clauses<C, F>(
    raw: Vec<Vec<Literal>>,
    cfg: &NfConfig,
    make: F,
) -> Result<Vec<C>, NfError>
where
    F: Fn(Vec<Literal>) -> Result<C, NfError>,
    C: CompCheck,
{
    let mut clauses: Vec<C> = raw.into_iter().map(make).collect::<Result<_, _>>()?;
    if cfg.drop_contradictions {
        let kept: Vec<C> = clauses
            .iter()
            .filter(|c| !c.complementary())
            .cloned()
            .collect();
        // Keep one contradictory clause rather than an empty form.
        if !kept.is_empty() {
            clauses = kept;
        } else {
            clauses.truncate(1);
        }
    }
    Ok(clauses)
}

trait CompCheck: Clone {
    fn complementary(&self) -> bool;
}

impl CompCheck for ConjClause {
    fn complementary(&self) -> bool {
        self.has_complementary_pair()
    }
}

impl CompCheck for DisjClause {
    fn complementary(&self) -> bool {
        self.has_complementary_pair()
    }
}

/// Equivalent disjunctive normal form of an arbitrary expression.
pub fn to_dnf(e: &Expr, cfg: &NfConfig) -> Result<DnfExpr, NfError> {
    let nnf = to_nnf(e, false);
    let raw = distribute(&nnf, false, cfg.clause_cap)?;
    DnfExpr::new(finish_clauses(raw, cfg, ConjClause::new)?)
}

/// Equivalent conjunctive normal form of an arbitrary expression.
pub fn to_cnf(e: &Expr, cfg: &NfConfig) -> Result<CnfExpr, NfError> {
    let nnf = to_nnf(e, false);
    let raw = distribute(&nnf, true, cfg.clause_cap)?;
    CnfExpr::new(finish_clauses(raw, cfg, DisjClause::new)?)
}

fn fold_lits(lits: &[Literal], join: fn(Expr, Expr) -> Expr) -> Expr {
    let mut it = lits.iter();
    let first = it.next().expect("clauses are nonempty").to_expr();
    it.fold(first, |acc, l| join(acc, l.to_expr()))
}

/// AST whose evaluation agrees with the DNF's semantics.
pub fn embed_dnf(d: &DnfExpr) -> Expr {
    let mut it = d.clauses.iter();
    let first = fold_lits(it.next().expect("nonempty").literals(), Expr::and);
    it.fold(first, |acc, c| {
        Expr::or(acc, fold_lits(c.literals(), Expr::and))
    })
}

/// AST whose evaluation agrees with the CNF's semantics.
pub fn embed_cnf(c: &CnfExpr) -> Expr {
    let mut it = c.clauses.iter();
    let first = fold_lits(it.next().expect("nonempty").literals(), Expr::or);
    it.fold(first, |acc, cl| {
        Expr::and(acc, fold_lits(cl.literals(), Expr::or))
    })
}
