//! Runs a few harness properties and prints their reports.
//!
//!     cargo run --release --example verify

use symcomb::verify::{run_property, search_saturation_counterexample, Caps, Params};

fn main() -> symcomb::Result<()> {
    let runs: [(&str, &[(&str, i64)]); 5] = [
        ("orthogonality", &[("n", 8)]),
        ("saxl", &[("k", 4)]),
        ("tensor-square", &[("n_min", 9), ("n", 11)]),
        ("foulkes", &[("d", 4), ("n", 2)]),
        ("ip23", &[("n", 3)]),
    ];
    for (name, params) in runs {
        let params: Params = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        let report = run_property(name, &params)?;
        println!("{}", report.to_json());
    }

    let caps = Caps { saturation_pad: 120, ..Caps::default() };
    println!("{}", search_saturation_counterexample(3, 3, &caps)?.to_json());
    Ok(())
}
