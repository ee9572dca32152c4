//! Runs the full verification harness and prints the report.
//!
//! cargo run --release --example verify_harness -- 8 4

use avoiders::enumeration::{verify_all, VerifyOptions};

fn main() -> avoiders::Result<()> {
    let mut args = std::env::args().skip(1);
    let max_n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(6);
    let workers: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let options = VerifyOptions { workers, ..VerifyOptions::default() };
    let report = verify_all(max_n, &options)?;
    print!("{}", report.to_text());
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
