use num_bigint::BigInt;
use num_traits::Zero;
use symcomb::partitions::{binomial, enumerate_partitions, Partition};
use symcomb::plethysm::{pleth_coefficient, pleth_hn_expansion, PlethQuery, DEFAULT_DEGREE_CAP};
use symcomb::symfunc::{from_schur_basis, plethysm_compose};

#[test]
fn hn_expansion_is_nonnegative_and_has_at_most_d_rows() {
    for d in 1..=12u32 {
        for n in 1..=12 / d {
            let v = pleth_hn_expansion(d, n, DEFAULT_DEGREE_CAP).unwrap();
            for (lam, a) in v.iter() {
                assert!(*a > BigInt::zero());
                assert!(lam.len() <= d as usize);
                assert_eq!(lam.size(), n * d);
            }
            // Sym^d(Sym^n C^d) has dimension C(C(n+d-1, n) + d - 1, d).
            let inner = binomial((n + d - 1) as u64, n as u64);
            let inner: u64 = inner.try_into().unwrap();
            let dim = binomial(inner + d as u64 - 1, d as u64);
            let poly = from_schur_basis(&v, d as usize).unwrap();
            assert_eq!(poly.evaluate_at_ones(), dim, "d={d} n={n}");
            // and it is the same polynomial as the direct composition
            assert_eq!(poly, plethysm_compose(&Partition::row(d), &Partition::row(n), d as usize).unwrap());
        }
    }
}

#[test]
fn single_coefficients_match_hn_expansion() {
    for d in 1..=10u32 {
        for n in 1..=10 / d {
            let v = pleth_hn_expansion(d, n, DEFAULT_DEGREE_CAP).unwrap();
            for lam in enumerate_partitions(n * d, None, None) {
                let q = PlethQuery::new(Partition::row(n), Partition::row(d), Some(lam.clone())).unwrap();
                assert_eq!(pleth_coefficient(&q, DEFAULT_DEGREE_CAP).unwrap(), v.get(&lam), "d={d} n={n} {lam}");
            }
        }
    }
}

#[test]
fn foulkes_inequality_instances() {
    for (d, n) in [(3, 2), (4, 2), (5, 2), (4, 3)] {
        let big = pleth_hn_expansion(d, n, DEFAULT_DEGREE_CAP).unwrap();
        let small = pleth_hn_expansion(n, d, DEFAULT_DEGREE_CAP).unwrap();
        for lam in enumerate_partitions(n * d, None, None) {
            assert!(big.get(&lam) >= small.get(&lam), "{lam} for d={d} n={n}");
        }
    }
}

#[test]
fn caps_are_enforced() {
    assert!(pleth_hn_expansion(6, 3, DEFAULT_DEGREE_CAP).is_err());
    assert!(pleth_hn_expansion(6, 3, 18).is_ok());
}
