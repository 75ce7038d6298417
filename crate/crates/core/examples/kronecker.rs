//! Kronecker coefficients three ways, and the two-row closed form.
//!
//!     cargo run --release --example kronecker

use symcomb::kronecker::{kron_char, kron_first_row, kron_schur_oracle, kron_table, kron_tworow, KronTriple};
use symcomb::Partition;

fn main() -> symcomb::Result<()> {
    let p = |s: &str| s.parse::<Partition>();

    let t = KronTriple::new(p("2,1")?, p("2,1")?, p("2,1")?)?;
    println!(
        "g((2,1),(2,1),(2,1)) = {} (characters), {} (Schur–Weyl), {} (first row)",
        kron_char(&t)?,
        kron_schur_oracle(&t, 2, 2)?,
        kron_first_row(&t)?
    );

    // Tensor square of the staircase (3,2,1).
    let stair = Partition::staircase(3);
    for rec in kron_table(6)?.iter().filter(|r| r.lambda == stair && r.mu == stair) {
        println!("  g({}, {}, {}) = {}", rec.lambda, rec.mu, rec.nu, rec.g);
    }

    // g((nd-k,k), n^d, n^d) counts partitions of k in a d × n box, minus
    // those of k-1.
    let (n, d) = (3, 4);
    let rect = Partition::rectangle(n, d);
    for k in 0..=n * d / 2 {
        let two = Partition::two_row(n * d, k)?;
        let g = kron_char(&KronTriple::new(two.clone(), rect.clone(), rect.clone())?)?;
        println!("  k={k:>2}: g({two}, {rect}, {rect}) = {g} = {}", kron_tworow(n, d, k)?);
    }
    Ok(())
}
