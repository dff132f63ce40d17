//! Benchmark scenarios for the time-space trade-off, emitting one CSV row
//! per measurement. All scenarios are deterministic under a seed; wall
//! times are zero unless timing is requested so that identical invocations
//! produce byte-identical output.

use std::collections::HashSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dsat::{cnf_satisfiable_via_dnf, dnf_satisfiable, ScanMode};
use crate::expr::coded_len;
use crate::net::{build, BuildConfig, NetError};
use crate::nf::{CnfExpr, ConjClause, DisjClause, DnfExpr, Literal, NfConfig};

pub const CSV_HEADER: &str = "scenario,k,n_or_l,cells,trie_nodes,build_ops,fast_path_fraction,query_steps_mean,comparisons,sort_ops,dnf_clauses,mismatches,aborted,wall_time_ms,peak_cell_count";

/// One measurement row. Fields that do not apply to a scenario stay zero.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct BenchRecord {
    pub scenario: &'static str,
    pub k: u32,
    pub n_or_l: u64,
    pub cells: u64,
    pub trie_nodes: u64,
    pub build_ops: u64,
    pub fast_path_fraction: f64,
    pub query_steps_mean: f64,
    pub comparisons: u64,
    pub sort_ops: u64,
    pub dnf_clauses: u64,
    pub mismatches: u64,
    pub aborted: bool,
    pub wall_time_ms: u64,
    pub peak_cell_count: u64,
}

impl BenchRecord {
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.6},{:.6},{},{},{},{},{},{},{}",
            self.scenario,
            self.k,
            self.n_or_l,
            self.cells,
            self.trie_nodes,
            self.build_ops,
            self.fast_path_fraction,
            self.query_steps_mean,
            self.comparisons,
            self.sort_ops,
            self.dnf_clauses,
            self.mismatches,
            self.aborted as u8,
            self.wall_time_ms,
            self.peak_cell_count
        )
    }
}

fn elapsed_ms(start: Instant, timing: bool) -> u64 {
    if timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    }
}

/// Sweep the frontier length and record cell/space growth.
pub fn net_growth(
    k: u32,
    n_range: impl Iterator<Item = usize>,
    cfg: &BuildConfig,
    timing: bool,
) -> Result<Vec<BenchRecord>, NetError> {
    let mut rows = Vec::new();
    for n in n_range {
        let start = Instant::now();
        let net = build(k, n, cfg)?;
        let m = net.metrics();
        let mut steps_total = 0u64;
        let mut queries = 0u64;
        if !net.aborted() {
            for (text, _) in net.hosted() {
                steps_total += net.query(text)?.1;
                queries += 1;
            }
        }
        rows.push(BenchRecord {
            scenario: "net-growth",
            k,
            n_or_l: n as u64,
            cells: m.cells,
            trie_nodes: m.trie_nodes,
            build_ops: m.build_ops,
            fast_path_fraction: m.fast_path_fraction(),
            query_steps_mean: if queries > 0 {
                steps_total as f64 / queries as f64
            } else {
                0.0
            },
            aborted: net.aborted(),
            wall_time_ms: elapsed_ms(start, timing),
            peak_cell_count: m.cells,
            ..BenchRecord::default()
        });
    }
    Ok(rows)
}

/// Random normalized DNF with exactly `total_literals` literals spread over
/// clauses of width at most `max_width`. Returns the DNF and the comparison
/// count spent sorting during normalization.
pub fn random_dnf(
    rng: &mut impl Rng,
    num_vars: u32,
    total_literals: u64,
    max_width: usize,
) -> (DnfExpr, u64) {
    let max_width = max_width.min(2 * num_vars as usize).max(1);
    let mut clauses = Vec::new();
    let mut sort_ops = 0u64;
    let mut remaining = total_literals.max(1);
    while remaining > 0 {
        let width = rng.gen_range(1..=max_width.min(remaining as usize));
        let mut picked: HashSet<Literal> = HashSet::new();
        while picked.len() < width {
            picked.insert(Literal {
                var: rng.gen_range(1..=num_vars),
                negated: rng.gen_bool(0.5),
            });
        }
        let mut lits: Vec<Literal> = picked.into_iter().collect();
        // HashSet order is not deterministic across runs; fix it before
        // the counted sort sees the data.
        lits.sort_unstable();
        let (clause, ops) = ConjClause::new_counted(lits).expect("nonempty");
        sort_ops += ops;
        remaining -= clause.width() as u64;
        clauses.push(clause);
    }
    (DnfExpr::new(clauses).expect("nonempty"), sort_ops)
}

/// Sweep total literal count and record merge-scan and sorting costs.
pub fn dsat_scaling(
    ls: &[u64],
    num_vars: u32,
    seed: u64,
    timing: bool,
) -> Vec<BenchRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    for &l in ls {
        let (dnf, sort_ops) = random_dnf(&mut rng, num_vars, l, 8);
        let start = Instant::now();
        let outcome = dnf_satisfiable(&dnf, ScanMode::FullScan).expect("normalized input");
        rows.push(BenchRecord {
            scenario: "dsat-scaling",
            k: num_vars,
            n_or_l: l,
            comparisons: outcome.stats.comparisons,
            sort_ops,
            dnf_clauses: dnf.clauses().len() as u64,
            wall_time_ms: elapsed_ms(start, timing),
            ..BenchRecord::default()
        });
    }
    rows
}

/// The ⋀_{i=1..k}(x_{2i-1} ∨ x_{2i}) family used to measure CNF→DNF blowup.
pub fn blowup_family(k: u32) -> CnfExpr {
    let clauses: Vec<DisjClause> = (0..k)
        .map(|i| {
            DisjClause::new(vec![Literal::pos(2 * i + 1), Literal::pos(2 * i + 2)])
                .expect("nonempty")
        })
        .collect();
    CnfExpr::new(clauses).expect("nonempty")
}

/// Run the exponential family through the CNF→DNF route.
pub fn cnf_blowup(k_max: u32, cap: u64, timing: bool) -> Vec<BenchRecord> {
    let cfg = NfConfig {
        clause_cap: cap,
        ..NfConfig::default()
    };
    let mut rows = Vec::new();
    for k in 1..=k_max {
        let cnf = blowup_family(k);
        let start = Instant::now();
        match cnf_satisfiable_via_dnf(&cnf, &cfg, ScanMode::FullScan) {
            Ok(out) => rows.push(BenchRecord {
                scenario: "cnf-blowup",
                k,
                n_or_l: k as u64,
                comparisons: out.stats.comparisons,
                dnf_clauses: out.blowup.0,
                wall_time_ms: elapsed_ms(start, timing),
                ..BenchRecord::default()
            }),
            Err(_) => rows.push(BenchRecord {
                scenario: "cnf-blowup",
                k,
                n_or_l: k as u64,
                aborted: true,
                wall_time_ms: elapsed_ms(start, timing),
                ..BenchRecord::default()
            }),
        }
    }
    rows
}

/// Verify that query path length equals the symbol count over every hosted
/// expression; mismatches are counted, not panicked on.
pub fn query_path(
    k: u32,
    n: usize,
    cfg: &BuildConfig,
    timing: bool,
) -> Result<Vec<BenchRecord>, NetError> {
    let start = Instant::now();
    let net = build(k, n, cfg)?;
    let mut steps_total = 0u64;
    let mut queries = 0u64;
    let mut mismatches = 0u64;
    for (text, _) in net.hosted() {
        let (_, steps) = net.query(text)?;
        let expected = coded_len(text) as u64;
        if steps != expected {
            mismatches += 1;
        }
        steps_total += steps;
        queries += 1;
    }
    Ok(vec![BenchRecord {
        scenario: "query-path",
        k,
        n_or_l: n as u64,
        cells: net.metrics().cells,
        query_steps_mean: if queries > 0 {
            steps_total as f64 / queries as f64
        } else {
            0.0
        },
        mismatches,
        aborted: net.aborted(),
        wall_time_ms: elapsed_ms(start, timing),
        peak_cell_count: net.metrics().cells,
        ..BenchRecord::default()
    }])
}
