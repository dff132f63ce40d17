//! Decide DNF satisfiability with the sorted-clause scanner and inspect the
//! comparison counts; then push a CNF through the measured CNF-to-DNF route.
//!
//! ```bash
//! cargo run --example solve_dnf
//! ```

use boolnet::bench::blowup_family;
use boolnet::{
    cnf_satisfiable_via_dnf, dnf_satisfiable, normalize_clause, parse, to_dnf, DnfExpr, Literal,
    NfConfig, ScanMode,
};

fn main() {
    // Build a DNF by hand: (x1 ∧ ¬x2) ∨ (x2 ∧ ¬x2) ∨ x3.
    let dnf = DnfExpr::new(vec![
        normalize_clause(vec![Literal::pos(1), Literal::neg(2)]).unwrap(),
        normalize_clause(vec![Literal::pos(2), Literal::neg(2)]).unwrap(),
        normalize_clause(vec![Literal::pos(3)]).unwrap(),
    ])
    .unwrap();

    let out = dnf_satisfiable(&dnf, ScanMode::EarlyExit).unwrap();
    println!("satisfiable: {}", out.satisfiable);
    if let Some(w) = &out.witness {
        let bits: Vec<String> = w.iter().map(|(v, b)| format!("x{v}={}", b as u8)).collect();
        println!("witness: {}", bits.join(" "));
    }
    println!(
        "comparisons {}, sort ops {}, clauses checked {}, stopped early {}",
        out.stats.comparisons, out.stats.sort_ops, out.stats.clauses_checked, out.stats.aborted_early
    );

    // A parsed expression works too; convert first.
    let e = parse("x1∧¬x1∨x11∧x111").unwrap();
    let parsed_dnf = to_dnf(&e, &NfConfig::default()).unwrap();
    let out = dnf_satisfiable(&parsed_dnf, ScanMode::FullScan).unwrap();
    println!("\nx1∧¬x1∨x11∧x111 satisfiable: {}", out.satisfiable);

    // CNF route: the conversion can blow up exponentially, so the clause
    // count is reported alongside the answer.
    let cnf = blowup_family(8);
    let out = cnf_satisfiable_via_dnf(&cnf, &NfConfig::default(), ScanMode::EarlyExit).unwrap();
    println!(
        "\n8-clause blowup family: satisfiable {}, DNF clauses {}, CNF clauses {}",
        out.satisfiable, out.blowup.0, out.blowup.1
    );
}
