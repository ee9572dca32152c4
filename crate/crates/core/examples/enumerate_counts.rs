//! Prints the counting sequences side by side.
//!
//! cargo run --release --example enumerate_counts -- 9

use avoiders::enumeration::{bell_number, count_avoiders, count_avoiders_ending_in_one, count_indecomposable};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    println!("{:>3} {:>10} {:>14} {:>10} {:>8}", "n", "avoiders", "indecomp(n+1)", "end in 1", "Bell(n-1)");
    for n in 1..=max {
        println!(
            "{:>3} {:>10} {:>14} {:>10} {:>8}",
            n,
            count_avoiders(n),
            count_indecomposable(n + 1),
            count_avoiders_ending_in_one(n),
            bell_number(n - 1)
        );
    }
}
