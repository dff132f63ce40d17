use std::io::{stdout, BufWriter, Write};

fn main() {
    let mut out = BufWriter::new(stdout());
    let code = boolnet::cli::run(std::env::args(), &mut out);
    out.flush().expect("flush stdout");
    std::process::exit(code);
}
