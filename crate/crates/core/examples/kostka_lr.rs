//! Kostka numbers, Littlewood–Richardson coefficients and a check of the
//! latter against an explicit product of Schur polynomials.
//!
//!     cargo run --release --example kostka_lr

use symcomb::partitions::enumerate_partitions;
use symcomb::symfunc::{schur_in_monomials, to_schur_basis};
use symcomb::tableaux::{enumerate_skew_ssyt, is_ballot, kostka, lr_coefficient, lr_skew_expansion};
use symcomb::Partition;

fn main() -> symcomb::Result<()> {
    let lam: Partition = "4,2,1".parse()?;
    println!("Kostka row K_{{{lam},μ}}:");
    for mu in enumerate_partitions(lam.size(), None, None) {
        println!("  μ = {mu:<14} {}", kostka(&lam, mu.parts())?);
    }

    let (outer, a, b): (Partition, Partition, Partition) =
        ("6,4,3".parse()?, "3,1".parse()?, "4,3,2".parse()?);
    println!("c^{outer}_{{{a},{b}}} = {}", lr_coefficient(&outer, &a, &b)?);
    for t in enumerate_skew_ssyt(&outer, &a, b.parts()) {
        let w = t.reading_word();
        if is_ballot(&w) {
            let word: String = w.0.iter().map(|d| d.to_string()).collect();
            println!("  LR tableau with reading word {word}");
        }
    }

    println!("s_{outer}/{a} in the Schur basis:");
    for (nu, c) in lr_skew_expansion(&outer, &a).iter().rev() {
        println!("  {c} s_{nu}");
    }

    // s_(2,1) · s_(2) expanded from monomials.
    let (mu, nu): (Partition, Partition) = ("2,1".parse()?, "2".parse()?);
    let product = schur_in_monomials(&mu, 5).multiply(&schur_in_monomials(&nu, 5))?;
    print!("s_{mu} · s_{nu} =");
    for (lam, c) in to_schur_basis(&product)?.iter() {
        print!(" + {c} s_{lam}");
        assert_eq!(*c, lr_coefficient(lam, &mu, &nu)?);
    }
    println!();
    Ok(())
}
