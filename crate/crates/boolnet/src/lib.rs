//! Boolean expression toolkit built around two ways of deciding
//! satisfiability: a clause-scanning solver for normal forms with a proved
//! comparison bound, and a precomputed trie-structured network that answers
//! status queries in one step per input symbol. A brute-force truth-table
//! oracle backs every other component for differential checking.
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod bench;
pub mod cli;
pub mod dimacs;
pub mod dsat;
pub mod expr;
pub mod net;
pub mod nf;
pub mod oracle;

pub use dsat::{
    clause_satisfiable, cnf_satisfiable_via_dnf, dnf_satisfiable, find_equal, ComparisonStats,
    SatOutcome, ScanMode,
};
pub use expr::{
    decompose, enumerate_by_length, enumerate_expressions, evaluate, length, parse, render,
    variables, Alphabet, Decomposition, EnumConfig, Expr, LengthMeasure, TruthAssignment,
};
pub use net::{
    build, compose_status, load, save, BuildConfig, Cell, Composition, CostModel, FallbackPolicy,
    Network, NetworkMetrics, ResolvedBy,
};
pub use nf::{
    embed_cnf, embed_dnf, normalize_clause, to_cnf, to_dnf, CnfExpr, ConjClause, DisjClause,
    DnfExpr, Literal, NfConfig,
};
pub use oracle::{classify, count_satisfying, find_witness, OracleConfig, Status};
