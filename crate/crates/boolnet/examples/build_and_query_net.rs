//! Build the trie-structured status network for all expressions up to a
//! frontier length, answer queries against it, and round trip it through
//! the persistence format.
//!
//! ```bash
//! cargo run --example build_and_query_net
//! ```

use boolnet::{build, load, save, BuildConfig, FallbackPolicy};

fn main() {
    let cfg = BuildConfig::default();
    let net = build(2, 7, &cfg).unwrap();
    let m = net.metrics();
    println!(
        "built k=2 n=7 network: {} cells, {} trie nodes, {} build ops, fast path {:.1}%",
        m.cells,
        m.trie_nodes,
        m.build_ops,
        100.0 * m.fast_path_fraction()
    );

    for query in ["x1∧¬x1", "x1∨¬x1", "x1∧x11"] {
        let (status, steps) = net.query(query).unwrap();
        println!("{query}: status {} in {steps} steps", status.symbol());
    }

    let mut bytes = Vec::new();
    save(&net, &mut bytes).unwrap();
    let restored = load(&mut bytes.as_slice()).unwrap();
    println!(
        "round trip through {} bytes, metrics preserved: {}",
        bytes.len(),
        restored.metrics() == net.metrics()
    );

    // Audit policy applies only the four composition rules and leaves the
    // rest unresolved instead of consulting the oracle.
    let audit = build(2, 7, &BuildConfig {
        policy: FallbackPolicy::Audit,
        ..BuildConfig::default()
    })
    .unwrap();
    for (len, frac) in audit.unresolved_fraction_by_length() {
        println!("audit unresolved at length {len}: {:.1}%", 100.0 * frac);
    }
}
