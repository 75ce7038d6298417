//! Partition basics: parsing, conjugates, dominance, hook lengths.
//!
//!     cargo run --example partitions

use symcomb::partitions::{dimension_hlf, enumerate_partitions, Partition};

fn main() -> symcomb::Result<()> {
    let lam: Partition = "4,2^2,1".parse()?;
    println!("λ = {lam}, |λ| = {}, ℓ(λ) = {}", lam.size(), lam.len());
    println!("λ' = {}", lam.conjugate());
    println!("hook lengths: {:?}", lam.hook_lengths().collect::<Vec<_>>());
    println!("f^λ = {}", dimension_hlf(&lam));

    let sc: Partition = "4,3,2,1".parse()?;
    println!("principal hooks of {sc}: {}", sc.principal_hooks()?);

    let parts = enumerate_partitions(6, None, None);
    println!("p(6) = {}", parts.len());
    for mu in &parts {
        let above: Vec<String> = parts
            .iter()
            .filter(|nu| *nu != mu && mu.dominance_leq(nu).unwrap_or(false))
            .map(|nu| nu.to_string())
            .collect();
        println!("  {mu:<12} dominated by {}", above.join(" "));
    }

    // Malformed input is an error, never a panic.
    for bad in ["3,4", "2,0", "x"] {
        if let Err(e) = bad.parse::<Partition>() {
            println!("{bad:?}: {e}");
        }
    }
    Ok(())
}
