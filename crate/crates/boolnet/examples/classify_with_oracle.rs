//! Classify expressions with the brute-force truth-table oracle: unsatisfiable,
//! strictly satisfiable, or tautological.
//!
//! ```bash
//! cargo run --example classify_with_oracle
//! ```

use boolnet::{classify, count_satisfying, find_witness, parse, OracleConfig};

fn main() {
    let cfg = OracleConfig::default();
    for text in ["x1∧¬x1", "x1∨¬x1", "x1∧x11", "¬(x1∨x11)∨x1∨x11"] {
        let e = parse(text).expect("well-formed input");
        let status = classify(&e, &cfg).unwrap();
        let count = count_satisfying(&e, &cfg).unwrap();
        print!("{text}: status {} ({count} satisfying rows)", status.symbol());
        match find_witness(&e, &cfg).unwrap() {
            Some(w) => {
                let bits: Vec<String> =
                    w.iter().map(|(v, b)| format!("x{v}={}", b as u8)).collect();
                println!(", witness {}", bits.join(" "));
            }
            None => println!(),
        }
    }
}
