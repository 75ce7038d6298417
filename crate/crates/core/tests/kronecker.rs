use num_bigint::BigInt;
use num_traits::Zero;
use symcomb::kronecker::{
    kron, kron_char, kron_first_row, kron_schur_oracle, kron_schur_oracle_capped, kron_table, padded_kron,
    records_to_jsonl, reduced_kron, KronTriple, Method, ReducedTriple,
};
use symcomb::partitions::{enumerate_partitions, Partition};
use symcomb::Error;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn table_export_is_independent_of_pool_size() {
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| records_to_jsonl(&kron_table(6).unwrap()))
    };
    let one = run(1);
    assert_eq!(one, run(4));
    // 11 partitions of 6: C(13, 3) unordered triples
    assert_eq!(one.lines().count(), 286);
    assert!(one.starts_with(r#"{"lambda":[6],"mu":[6],"nu":[6],"g":"1"}"#));
}

#[test]
fn first_row_route_matches_characters_on_stretched_triples() {
    let t = ReducedTriple::new(p("2^8"), p("2^8"), p("6,6"));
    for n in 18..=21 {
        assert_eq!(padded_kron(&t, n, Method::FirstRow).unwrap(), padded_kron(&t, n, Method::Character).unwrap(), "n={n}");
    }
    let t = ReducedTriple::new(p("1^8"), p("1^8"), p("3,3"));
    for n in 9..=20 {
        assert_eq!(padded_kron(&t, n, Method::FirstRow).unwrap(), BigInt::zero());
    }
}

#[test]
fn first_row_route_on_all_triples_of_eight() {
    let parts = enumerate_partitions(8, None, None);
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i..] {
            for c in [p("8"), p("5,3"), p("4,2,1,1"), p("2,2,2,2"), p("1^8")] {
                let t = KronTriple::new(a.clone(), b.clone(), c).unwrap();
                assert_eq!(kron_first_row(&t).unwrap(), kron_char(&t).unwrap(), "{t:?}");
            }
        }
    }
}

#[test]
fn schur_oracle_guards() {
    let t = KronTriple::new(p("2,1"), p("2,1"), p("2,1")).unwrap();
    assert!(matches!(kron_schur_oracle(&t, 1, 2), Err(Error::OutOfRange(_))));
    let big = KronTriple::new(p("4,3"), p("4,3"), p("4,3")).unwrap();
    assert!(matches!(kron_schur_oracle_capped(&big, 2, 2, 6), Err(Error::CapExceeded(_))));
    assert_eq!(kron_schur_oracle_capped(&big, 2, 2, 7).unwrap(), kron_char(&big).unwrap());
}

#[test]
fn input_validation() {
    assert!(matches!(kron(&p("2,1"), &p("2,1"), &p("4")), Err(Error::SizeMismatch(_))));
    assert!(matches!(KronTriple::new(p("2"), p("1,1"), p("3")), Err(Error::SizeMismatch(_))));
    let empty = Partition::empty();
    assert_eq!(kron(&empty, &empty, &empty).unwrap(), BigInt::from(1));
    assert_eq!(reduced_kron(&ReducedTriple::new(empty.clone(), empty.clone(), empty)).unwrap(), BigInt::from(1));
}

#[test]
fn small_reduced_values() {
    // ḡ(1,1,1) = 1, ḡ((1),(1),(2)) = 1, ḡ((1),(1),(1,1)) = 1, ḡ((2,1),(2,1),(2,1)) = 9
    let cases = [
        ("1", "1", "1", 1),
        ("1", "1", "2", 1),
        ("1", "1", "1,1", 1),
        ("2,1", "2,1", "2,1", 9),
        ("2,1", "1", "1,1", 1),
        ("4,3", "4,3", "2,2,2,2,2,1", 1),
    ];
    for (a, b, c, g) in cases {
        assert_eq!(reduced_kron(&ReducedTriple::new(p(a), p(b), p(c))).unwrap(), BigInt::from(g), "{a} {b} {c}");
    }
}
