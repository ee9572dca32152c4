//! Recovers the avoider from an indecomposable partition, showing the
//! reconstruction lists used to reorder the blocks.
//!
//! cargo run --example inverse_map -- "5/7 8/1 4 9/3 6 12/13 14 16/2 10 15 17/11 18"

use avoiders::bijection::{inverse, recover_step4_order, untweak, ReconstructionLists};
use avoiders::SetPartition;

fn main() -> avoiders::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "3/4/6/5 7/1 2 8 10/9 11".to_string());
    let x: SetPartition = text.parse()?;
    println!("input:     {x}");
    if x.num_blocks() > 1 {
        let raw = untweak(&x)?;
        println!("untweaked: {raw}");
        let lists = ReconstructionLists::new(&raw)?;
        println!("A (block maxima):  {:?}", lists.last_entries);
        println!("B (first entries): {:?}", lists.first_entries);
        println!("f:                 {:?}", lists.successor);
        println!("cycles:            {:?}", lists.cycles);
        println!("C:                 {:?}", lists.order);
        println!("segments:  {}", recover_step4_order(&raw)?);
    }
    println!("avoider:   {}", inverse(&x)?);
    Ok(())
}
