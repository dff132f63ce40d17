//! DIMACS-style text import/export for CNF, plus the analogous `p dnf`
//! variant for DNF. Clause lines are signed integer literals terminated
//! by 0; `c` lines are comments.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::nf::{CnfExpr, ConjClause, DisjClause, DnfExpr, Literal, NfError};

#[derive(Debug, Error)]
pub enum DimacsError {
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error(transparent)]
    Clause(#[from] NfError),
}

fn max_var(clauses: impl Iterator<Item = u32>) -> u32 {
    clauses.max().unwrap_or(0)
}

fn write_clause_line(w: &mut (impl Write + ?Sized), lits: &[Literal]) -> io::Result<()> {
    for l in lits {
        if l.negated {
            write!(w, "-{} ", l.var)?;
        } else {
            write!(w, "{} ", l.var)?;
        }
    }
    writeln!(w, "0")
}

pub fn write_cnf(c: &CnfExpr, w: &mut (impl Write + ?Sized)) -> io::Result<()> {
    let vars = max_var(c.clauses().iter().flat_map(|cl| cl.literals().iter().map(|l| l.var)));
    writeln!(w, "p cnf {} {}", vars, c.clauses().len())?;
    for cl in c.clauses() {
        write_clause_line(w, cl.literals())?;
    }
    Ok(())
}

pub fn write_dnf(d: &DnfExpr, w: &mut (impl Write + ?Sized)) -> io::Result<()> {
    let vars = max_var(d.clauses().iter().flat_map(|cl| cl.literals().iter().map(|l| l.var)));
    writeln!(w, "p dnf {} {}", vars, d.clauses().len())?;
    for cl in d.clauses() {
        write_clause_line(w, cl.literals())?;
    }
    Ok(())
}

fn parse_body(
    r: &mut impl BufRead,
    kind: &str,
) -> Result<Vec<Vec<Literal>>, DimacsError> {
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut declared: Option<usize> = None;
    for (idx, line) in r.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('p') {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 3 || parts[0] != kind {
                return Err(DimacsError::Format {
                    line: lineno,
                    msg: format!("expected header 'p {kind} <vars> <clauses>'"),
                });
            }
            declared = Some(parts[2].parse().map_err(|_| DimacsError::Format {
                line: lineno,
                msg: "clause count is not a number".into(),
            })?);
            continue;
        }
        if declared.is_none() {
            return Err(DimacsError::Format {
                line: lineno,
                msg: "clause data before the problem header".into(),
            });
        }
        for tok in trimmed.split_whitespace() {
            let n: i64 = tok.parse().map_err(|_| DimacsError::Format {
                line: lineno,
                msg: format!("bad literal '{tok}'"),
            })?;
            if n == 0 {
                if current.is_empty() {
                    return Err(DimacsError::Format {
                        line: lineno,
                        msg: "empty clause".into(),
                    });
                }
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(Literal {
                    var: n.unsigned_abs() as u32,
                    negated: n < 0,
                });
            }
        }
    }
    if !current.is_empty() {
        return Err(DimacsError::Format {
            line: 0,
            msg: "last clause is missing its 0 terminator".into(),
        });
    }
    if let Some(d) = declared {
        if d != clauses.len() {
            return Err(DimacsError::Format {
                line: 0,
                msg: format!("header declared {d} clauses, found {}", clauses.len()),
            });
        }
    }
    Ok(clauses)
}

pub fn read_cnf(r: &mut impl BufRead) -> Result<CnfExpr, DimacsError> {
    let clauses = parse_body(r, "cnf")?
        .into_iter()
        .map(DisjClause::new)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CnfExpr::new(clauses)?)
}

pub fn read_dnf(r: &mut impl BufRead) -> Result<DnfExpr, DimacsError> {
    let clauses = parse_body(r, "dnf")?
        .into_iter()
        .map(ConjClause::new)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DnfExpr::new(clauses)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::BufReader;

    fn cnf_sample() -> CnfExpr {
        CnfExpr::new(vec![
            DisjClause::new(vec![Literal::pos(1), Literal::neg(2)]).unwrap(),
            DisjClause::new(vec![Literal::pos(3)]).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn cnf_round_trip() {
        let c = cnf_sample();
        let mut buf = Vec::new();
        write_cnf(&c, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("p cnf 3 2\n"));
        let back = read_cnf(&mut BufReader::new(&buf[..])).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn dnf_round_trip_with_comments() {
        let d = DnfExpr::new(vec![
            ConjClause::new(vec![Literal::pos(1), Literal::neg(1)]).unwrap(),
            ConjClause::new(vec![Literal::pos(2)]).unwrap(),
        ])
        .unwrap();
        let mut buf = Vec::new();
        write_dnf(&d, &mut buf).unwrap();
        let mut text = String::from_utf8(buf).unwrap();
        text.insert_str(0, "c a comment line\n");
        let back = read_dnf(&mut BufReader::new(text.as_bytes())).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn rejects_malformed_input() {
        let no_term = "p cnf 1 1\n1 -1\n";
        assert!(read_cnf(&mut BufReader::new(no_term.as_bytes())).is_err());
        let wrong_kind = "p dnf 1 1\n1 0\n";
        assert!(read_cnf(&mut BufReader::new(wrong_kind.as_bytes())).is_err());
        let bad_count = "p cnf 1 2\n1 0\n";
        assert!(read_cnf(&mut BufReader::new(bad_count.as_bytes())).is_err());
    }
}
