//! Brute-force truth-table oracle. Deliberately naive: every answer comes
//! from exhaustive enumeration of assignments, so the rest of the crate
//! can be checked against it.

use thiserror::Error;

use crate::expr::{evaluate, variables, EvalError, Expr, TruthAssignment};

/// Three-valued classification matching the cell symbols 0, 1 and t.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Unsat,
    SatStrict,
    Taut,
}

impl Status {
    pub fn symbol(self) -> char {
        match self {
            Status::Unsat => '0',
            Status::SatStrict => '1',
            Status::Taut => 't',
        }
    }

    pub fn from_symbol(c: char) -> Option<Status> {
        match c {
            '0' => Some(Status::Unsat),
            '1' => Some(Status::SatStrict),
            't' => Some(Status::Taut),
            _ => None,
        }
    }

    pub fn satisfiable(self) -> bool {
        self != Status::Unsat
    }

    pub fn tautology(self) -> bool {
        self == Status::Taut
    }
}

#[derive(Debug, Clone)]
pub struct OracleConfig {
    /// Refuse expressions with more distinct variables than this.
    pub var_cap: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { var_cap: 20 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("expression has {vars} distinct variables, over the oracle cap of {cap}")]
    VarCapExceeded { vars: u32, cap: u32 },
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Assignment number `index` over `vars`, counting lexicographically from
/// all-zeros with the first (smallest) variable as the most significant bit.
fn assignment(vars: &[u32], index: u64) -> TruthAssignment {
    let v = vars.len();
    vars.iter()
        .enumerate()
        .map(|(j, var)| (*var, index >> (v - 1 - j) & 1 == 1))
        .collect()
}

fn sweep(
    e: &Expr,
    cfg: &OracleConfig,
    mut visit: impl FnMut(&TruthAssignment, bool) -> bool,
) -> Result<(), OracleError> {
    let vars = variables(e);
    if vars.len() as u32 > cfg.var_cap {
        return Err(OracleError::VarCapExceeded {
            vars: vars.len() as u32,
            cap: cfg.var_cap,
        });
    }
    let total: u64 = 1 << vars.len();
    for i in 0..total {
        let t = assignment(&vars, i);
        let value = evaluate(e, &t)?;
        if !visit(&t, value) {
            break;
        }
    }
    Ok(())
}

/// Classify by exhausting all 2^v assignments.
pub fn classify(e: &Expr, cfg: &OracleConfig) -> Result<Status, OracleError> {
    let mut any_true = false;
    let mut any_false = false;
    sweep(e, cfg, |_, value| {
        if value {
            any_true = true;
        } else {
            any_false = true;
        }
        // Stop once both outcomes have been seen.
        !(any_true && any_false)
    })?;
    Ok(match (any_true, any_false) {
        (false, _) => Status::Unsat,
        (true, false) => Status::Taut,
        (true, true) => Status::SatStrict,
    })
}

pub fn classify_default(e: &Expr) -> Result<Status, OracleError> {
    classify(e, &OracleConfig::default())
}

/// Number of satisfying assignments.
pub fn count_satisfying(e: &Expr, cfg: &OracleConfig) -> Result<u64, OracleError> {
    let mut count = 0u64;
    sweep(e, cfg, |_, value| {
        if value {
            count += 1;
        }
        true
    })?;
    Ok(count)
}

/// Lexicographically first satisfying assignment, if any.
pub fn find_witness(e: &Expr, cfg: &OracleConfig) -> Result<Option<TruthAssignment>, OracleError> {
    let mut witness = None;
    sweep(e, cfg, |t, value| {
        if value {
            witness = Some(t.clone());
            return false;
        }
        true
    })?;
    Ok(witness)
}
