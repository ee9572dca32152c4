//! Avoiders ending in 1 versus all set partitions of [n-1].
//!
//! cargo run --example bell_bijection -- 5

use avoiders::bell::{avoider_to_partition, partition_to_avoider};
use avoiders::enumeration::{bell_number, generate_permutations};

fn main() -> avoiders::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let mut count = 0;
    for p in generate_permutations(n).filter(|p| p.is_avoider() && p.at(n) == 1) {
        let x = avoider_to_partition(&p)?;
        assert_eq!(partition_to_avoider(&x)?, p);
        println!("{p:<20} -> {x}");
        count += 1;
    }
    println!("{count} avoiders of length {n} end in 1; Bell({}) = {}", n - 1, bell_number(n - 1));
    Ok(())
}
