//! Joint distribution of (increasing runs, blocks of the image) over avoiders.
//!
//! cargo run --example statistics -- 6

use avoiders::enumeration::joint_statistic_table;

fn main() -> avoiders::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let table = joint_statistic_table(n)?;
    print!("runs\\blocks");
    for b in 1..=n {
        print!("{b:>7}");
    }
    println!();
    for r in 1..=n {
        print!("{r:>11}");
        for b in 1..=n {
            print!("{:>7}", table.get(r, b));
        }
        println!();
    }
    println!("off-diagonal mass: {}", table.off_diagonal_mass());
    Ok(())
}
