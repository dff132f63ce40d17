//! Emit the deterministic benchmark CSV for network growth and solver
//! scaling. Timing columns stay zero unless timing is requested, so the
//! output is byte-identical across runs.
//!
//! ```bash
//! cargo run --release --example growth_bench
//! ```

use boolnet::bench::{self, CSV_HEADER};
use boolnet::BuildConfig;

fn main() {
    println!("{CSV_HEADER}");
    let cfg = BuildConfig::default();
    for row in bench::net_growth(2, 2..=9, &cfg, false).unwrap() {
        println!("{}", row.to_csv_row());
    }
    for row in bench::dsat_scaling(&[100, 1_000, 10_000], 16, 42, false) {
        println!("{}", row.to_csv_row());
    }
    for row in bench::cnf_blowup(10, 1_000_000, false) {
        println!("{}", row.to_csv_row());
    }
}
