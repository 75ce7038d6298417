//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//! The saturation search (criterion 12) is long-running in general and is
//! skipped unless `--include-ignored`/`--ignored` is passed or
//! `SYMCOMB_EXTENDED=1` is set.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use symcomb::characters::MnTableau;
use symcomb::kronecker::{kron, ReducedTriple};
use symcomb::plethysm::{pleth_coefficient, PlethQuery, DEFAULT_DEGREE_CAP};
use symcomb::tableaux::{is_ballot, lr_coefficient, ReadingWord};
use symcomb::verify::{run_property, saturation_check, Caps, Params, Report, Status};
use symcomb::Partition;

type Outcome = Result<String, String>;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn params(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Runs properties and requires every one to pass; returns a summary.
fn properties(runs: &[(&str, &[(&str, i64)])]) -> Outcome {
    let mut summary = Vec::new();
    for (name, ps) in runs {
        let r: Report = run_property(name, &params(ps)).map_err(|e| format!("{name}: {e}"))?;
        if r.status != Status::Pass {
            return Err(format!("{name}: {}", r.to_json()));
        }
        summary.push(format!("{name} {}", r.checked_count));
    }
    Ok(summary.join(", "))
}

fn worked_examples() -> Outcome {
    let g = kron(&p("2,1"), &p("2,1"), &p("2,1")).map_err(|e| e.to_string())?;
    let c = lr_coefficient(&p("6,4,3"), &p("3,1"), &p("4,3,2")).map_err(|e| e.to_string())?;
    let a = |t: &str| {
        let q = PlethQuery::new(p("1,1"), p("2"), Some(p(t))).unwrap();
        pleth_coefficient(&q, DEFAULT_DEGREE_CAP).unwrap()
    };
    let mn = MnTableau::new(vec![vec![1, 1, 2, 3, 3, 3], vec![1, 2, 2, 3, 4], vec![2, 2, 3, 3, 4]], &[3, 5, 6, 2])
        .map_err(|e| e.to_string())?;
    let checks = [
        ("g((2,1),(2,1),(2,1)) = 1", g == BigInt::from(1)),
        ("c = 2", c == BigInt::from(2)),
        ("a^(2,2) = 1", a("2,2") == BigInt::from(1)),
        ("a^(3,1) = 0", a("3,1") == BigInt::from(0)),
        ("a^(1,1,1,1) = 1", a("1,1,1,1") == BigInt::from(1)),
        ("MN height 6", mn.height() == 6),
        ("111221332 ballot", is_ballot(&ReadingWord::from("111221332"))),
    ];
    match checks.iter().find(|(_, ok)| !ok) {
        Some((what, _)) => Err(format!("{what} does not hold")),
        None => Ok(format!("{} checks", checks.len())),
    }
}

fn saxl() -> Outcome {
    let mut out = Vec::new();
    for (k, targets) in [(3, 11), (4, 42), (5, 176)] {
        let r = run_property("saxl", &params(&[("k", k)])).map_err(|e| e.to_string())?;
        if r.status != Status::Pass || r.checked_count != targets {
            return Err(r.to_json());
        }
        out.push(format!("k={k}: {targets} targets"));
    }
    Ok(out.join(", "))
}

fn foulkes() -> Outcome {
    let mut out = Vec::new();
    for (d, n) in [(3, 2), (4, 2), (5, 2), (4, 3)] {
        let r = run_property("foulkes", &params(&[("d", d), ("n", n)])).map_err(|e| e.to_string())?;
        if r.status != Status::Pass {
            return Err(r.to_json());
        }
        out.push(format!("({d},{n})"));
    }
    Ok(out.join(" "))
}

fn saturation() -> Outcome {
    let caps = Caps { saturation_pad: 120, ..Caps::default() };
    let t = ReducedTriple::new(p("1^8"), p("1^8"), p("3,3"));
    let r = saturation_check(&t, 4, &caps).map_err(|e| e.to_string())?;
    match r.status {
        Status::CounterexampleConfirmed => Ok(r.note),
        Status::Inconclusive => Ok(format!("inconclusive within caps: {}", r.note)),
        _ => Err(r.to_json()),
    }
}

fn bin(args: &[&str]) -> Result<(Vec<u8>, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_symcomb")).args(args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr).trim()));
    }
    Ok((out.stdout, start.elapsed()))
}

fn performance() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let (k1, k8, ch) = (path("kron1.jsonl"), path("kron8.jsonl"), path("char15.jsonl"));

    let (_, t1) = bin(&["table", "kron", "--n", "8", "--out", &k1, "--jobs", "1"])?;
    let (_, t8) = bin(&["table", "kron", "--n", "8", "--out", &k8, "--jobs", "8"])?;
    let (a, b) = (std::fs::read(&k1).unwrap(), std::fs::read(&k8).unwrap());
    if a != b {
        return Err("Kronecker table differs between --jobs 1 and --jobs 8".into());
    }
    let rows = a.iter().filter(|&&c| c == b'\n').count();
    if rows != 2024 {
        return Err(format!("expected 2024 unordered triples, got {rows}"));
    }
    let (_, tc) = bin(&["table", "char", "--n", "15", "--out", &ch])?;
    let (r1, _) = bin(&["verify", "pp20-bound", "--n", "6", "--json", "--jobs", "1"])?;
    let (r8, _) = bin(&["verify", "pp20-bound", "--n", "6", "--json", "--jobs", "8"])?;
    if r1 != r8 {
        return Err("verify report differs between --jobs 1 and --jobs 8".into());
    }
    let limit = |t: Duration, s: u64| t < Duration::from_secs(s);
    if !(limit(t1, 60) && limit(t8, 60) && limit(tc, 10)) {
        return Err(format!("too slow: kron n=8 {t1:.2?} / {t8:.2?}, char n=15 {tc:.2?}"));
    }
    Ok(format!("kron table n=8 {rows} rows in {t1:.2?} (1 job) / {t8:.2?} (8 jobs), char table n=15 in {tc:.2?}"))
}

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
    extended: bool,
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let extended = args.iter().any(|a| a == "--ignored" || a == "--include-ignored")
        || std::env::var("SYMCOMB_EXTENDED").is_ok_and(|v| v == "1");
    // `cargo test -- --list` and filters are not meaningful here.
    if args.iter().any(|a| a == "--list") {
        return;
    }

    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, title: "worked examples", budget: secs(1), run: worked_examples, extended: false },
        Criterion {
            id: 2,
            title: "character table integrity, n <= 12",
            budget: secs(30),
            run: || properties(&[("orthogonality", &[("n", 12)])]),
            extended: false,
        },
        Criterion {
            id: 3,
            title: "oracle equivalence",
            budget: secs(120),
            run: || properties(&[("kron-oracle", &[("n", 5)]), ("lr-oracle", &[("n", 7)])]),
            extended: false,
        },
        Criterion {
            id: 4,
            title: "two-row identity, nd <= 12",
            budget: secs(120),
            run: || properties(&[("tworow", &[("n", 12)])]),
            extended: false,
        },
        Criterion {
            id: 5,
            title: "Murnaghan stability, |λ| <= 5",
            budget: secs(120),
            run: || properties(&[("murnaghan", &[("n", 5)])]),
            extended: false,
        },
        Criterion {
            id: 6,
            title: "symmetries and dimension sum",
            budget: secs(180),
            run: || {
                properties(&[
                    ("kron-symmetry", &[("n", 7)]),
                    ("transpose", &[("n", 7)]),
                    ("dimension-sum", &[("n", 8)]),
                    ("semigroup", &[("n", 5)]),
                ])
            },
            extended: false,
        },
        Criterion { id: 7, title: "Saxl instances k = 3, 4, 5", budget: secs(120), run: saxl, extended: false },
        Criterion {
            id: 8,
            title: "character lower bound, n <= 12",
            budget: secs(120),
            run: || properties(&[("char-bound", &[("n", 12)])]),
            extended: false,
        },
        Criterion {
            id: 9,
            title: "upper bound on g, n <= 8",
            budget: secs(120),
            run: || properties(&[("pp20-bound", &[("n", 8)])]),
            extended: false,
        },
        Criterion { id: 10, title: "Foulkes instances", budget: secs(300), run: foulkes, extended: false },
        Criterion {
            id: 11,
            title: "reduced Kronecker: LR specialization and IP23 identity",
            budget: secs(300),
            run: || properties(&[("reduced-lr", &[("n", 4)]), ("ip23", &[("n", 5)])]),
            extended: false,
        },
        Criterion { id: 12, title: "saturation counterexample, k = 3", budget: secs(1800), run: saturation, extended: true },
        Criterion { id: 13, title: "performance and determinism", budget: secs(180), run: performance, extended: false },
    ];

    let mut failed = 0;
    for c in &criteria {
        if c.extended && !extended {
            println!("criterion {:>2} SKIP  {} (extended; pass --include-ignored to run)", c.id, c.title);
            continue;
        }
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if elapsed <= c.budget => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("{detail}; over budget")),
            Err(e) => ("FAIL", e),
        };
        if verdict.0 == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}  {} [{:.2?} of {:?}] {}",
            c.id, verdict.0, c.title, elapsed, c.budget, verdict.1
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
