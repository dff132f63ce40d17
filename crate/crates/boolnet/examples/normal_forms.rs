//! Convert an expression to DNF and CNF and export both in DIMACS-style
//! text.
//!
//! ```bash
//! cargo run --example normal_forms
//! ```

use std::io::stdout;

use boolnet::dimacs::{write_cnf, write_dnf};
use boolnet::{parse, render, to_cnf, to_dnf, NfConfig};

fn main() {
    let text = "¬(x1∧x11)∨x111";
    let e = parse(text).expect("well-formed input");
    let cfg = NfConfig::default();

    let dnf = to_dnf(&e, &cfg).unwrap();
    let cnf = to_cnf(&e, &cfg).unwrap();
    println!("input: {text}");
    println!("dnf:   {}", render(&boolnet::embed_dnf(&dnf)));
    println!("cnf:   {}", render(&boolnet::embed_cnf(&cnf)));

    println!("\nDIMACS-style DNF:");
    write_dnf(&dnf, &mut stdout()).unwrap();
    println!("\nDIMACS CNF:");
    write_cnf(&cnf, &mut stdout()).unwrap();
}
