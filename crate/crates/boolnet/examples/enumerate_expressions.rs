//! List every well-formed expression over k variables up to a coded length,
//! grouped by length.
//!
//! ```bash
//! cargo run --example enumerate_expressions
//! ```

use boolnet::{enumerate_by_length, EnumConfig};

fn main() {
    let buckets = enumerate_by_length(1, 8, &EnumConfig::default()).unwrap();
    for (len, bucket) in buckets.iter().enumerate() {
        if bucket.is_empty() {
            continue;
        }
        println!("length {len}: {} expressions", bucket.len());
        for s in bucket {
            println!("  {s}");
        }
    }
}
