//! Maps an avoider to its indecomposable set partition, printing every
//! intermediate stage.
//!
//! cargo run --example forward_map -- 4 3 1 2 7 6 5 8 10 9

use avoiders::bijection::ForwardTrace;
use avoiders::Permutation;

fn main() -> avoiders::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let text = if args.is_empty() {
        "2 9 5 1 4 10 12 7 8 3 6 15 17 13 14 16 11".to_string()
    } else {
        args.join(" ")
    };
    let p: Permutation = text.parse()?;
    let trace = ForwardTrace::new(&p)?;
    println!("input:  {}", trace.input);
    if let Some(steps) = &trace.five_step {
        for (label, line) in steps.step_lines() {
            println!("{label}:  {line}");
        }
    }
    if let Some(t) = &trace.tweaked {
        println!("tweak:  {t}");
    }
    println!("output: {}", trace.output);
    Ok(())
}
