//! Parse a coded expression, evaluate it under an assignment, and show the
//! different length measures.
//!
//! ```bash
//! cargo run --example parse_and_eval
//! ```

use boolnet::{evaluate, length, parse, render, variables, LengthMeasure, TruthAssignment};

fn main() {
    let text = "x1∧(x11∨¬x111)";
    let e = parse(text).expect("well-formed input");
    println!("input:     {text}");
    println!("rendered:  {}", render(&e));
    println!("variables: {:?}", variables(&e));

    let mut t = TruthAssignment::new();
    t.set(1, true);
    t.set(2, false);
    t.set(3, false);
    println!("value under x1=1 x2=0 x3=0: {}", evaluate(&e, &t).unwrap());

    for m in [
        LengthMeasure::SymbolCount,
        LengthMeasure::VariableOccurrences,
        LengthMeasure::DistinctVariables,
        LengthMeasure::CodedSymbolCount,
    ] {
        println!("{m:?} = {}", length(&e, m));
    }
}
