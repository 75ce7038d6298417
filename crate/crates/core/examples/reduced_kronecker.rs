//! Reduced Kronecker coefficients and the failure of saturation.
//!
//!     cargo run --release --example reduced_kronecker

use symcomb::kronecker::{padded_kron, reduced_kron, Method, ReducedTriple};
use symcomb::Partition;

fn main() -> symcomb::Result<()> {
    let p = |s: &str| s.parse::<Partition>();

    // Padding with a long first row: g(α[n], β[n], γ[n]) stabilizes.
    let t = ReducedTriple::new(p("2,1")?, p("2,1")?, p("2,1")?);
    for n in 6..=12 {
        println!("g at n={n:>2}: {}", padded_kron(&t, n, Method::FirstRow)?);
    }
    println!("ḡ((2,1),(2,1),(2,1)) = {}", reduced_kron(&t)?);

    // When sizes add up the reduced coefficient is a Littlewood–Richardson one.
    let lr = ReducedTriple::new(p("3,2,1")?, p("2,1")?, p("2,1")?);
    println!("ḡ((3,2,1),(2,1),(2,1)) = {}", reduced_kron(&lr)?);

    // ḡ(1^8, 1^8, (3,3)) vanishes but its double does not.
    let base = ReducedTriple::new(p("1^8")?, p("1^8")?, p("3,3")?);
    let doubled = ReducedTriple::new(p("2^8")?, p("2^8")?, p("6,6")?);
    println!("ḡ(1^8, 1^8, 3^2) = {}", reduced_kron(&base)?);
    println!("ḡ(2^8, 2^8, 6^2) = {}", reduced_kron(&doubled)?);
    Ok(())
}
