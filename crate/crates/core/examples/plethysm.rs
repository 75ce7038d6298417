//! Plethysm coefficients and the Foulkes inequality.
//!
//!     cargo run --release --example plethysm

use symcomb::plethysm::{pleth_expansion, pleth_hn_expansion, DEFAULT_DEGREE_CAP};
use symcomb::Partition;

fn main() -> symcomb::Result<()> {
    let (inner, outer): (Partition, Partition) = ("1,1".parse()?, "2".parse()?);
    print!("s_{outer}[s_{inner}] =");
    for (lam, c) in pleth_expansion(&inner, &outer, DEFAULT_DEGREE_CAP)?.iter() {
        print!(" + {c} s_{lam}");
    }
    println!();

    // a_λ(4[3]) against a_λ(3[4]).
    let big = pleth_hn_expansion(4, 3, DEFAULT_DEGREE_CAP)?;
    let small = pleth_hn_expansion(3, 4, DEFAULT_DEGREE_CAP)?;
    println!("{:<16} {:>6} {:>6}", "λ", "4[3]", "3[4]");
    for (lam, a) in big.iter() {
        let b = small.get(lam);
        assert!(*a >= b);
        println!("{:<16} {a:>6} {b:>6}", lam.to_string());
    }
    Ok(())
}
