use num_bigint::BigInt;
use num_traits::Zero;
use symcomb::partitions::{dimension_hlf, enumerate_partitions, Partition};
use symcomb::symfunc::{schur_in_monomials, to_schur_basis};
use symcomb::tableaux::{enumerate_skew_ssyt, kostka, lr_coefficient, lr_skew_expansion};

fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut items = v.to_vec();
    items.sort();
    let mut out = vec![items.clone()];
    // next_permutation until exhausted
    loop {
        let n = items.len();
        if n < 2 {
            break;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| items[i] < items[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| items[j] > items[i]).unwrap();
        items.swap(i, j);
        items[i + 1..].reverse();
        out.push(items.clone());
    }
    out
}

#[test]
fn kostka_positive_exactly_on_dominance() {
    for n in 0..=8 {
        let parts = enumerate_partitions(n, None, None);
        for lam in &parts {
            for mu in &parts {
                let k = kostka(lam, mu.parts()).unwrap();
                assert_eq!(k > BigInt::zero(), mu.dominance_leq(lam).unwrap(), "{lam} {mu}");
            }
        }
    }
}

#[test]
fn kostka_is_invariant_under_permuting_the_weight() {
    for n in 1..=8 {
        let parts = enumerate_partitions(n, None, None);
        for mu in &parts {
            // pad with a zero so compositions with gaps are covered too
            let mut weight = mu.parts().to_vec();
            if n <= 6 {
                weight.push(0);
            }
            let perms = distinct_permutations(&weight);
            for lam in &parts {
                let base = kostka(lam, mu.parts()).unwrap();
                for w in &perms {
                    assert_eq!(kostka(lam, w).unwrap(), base, "{lam} {w:?}");
                }
            }
        }
    }
}

#[test]
fn lr_agrees_with_schur_products() {
    for total in 0..=8u32 {
        for k in 0..=total {
            for mu in enumerate_partitions(k, None, None) {
                for nu in enumerate_partitions(total - k, None, None) {
                    if mu < nu {
                        continue; // c^λ_{μν} = c^λ_{νμ}, checked below
                    }
                    let nvars = (total as usize).max(1);
                    let prod = schur_in_monomials(&mu, nvars).multiply(&schur_in_monomials(&nu, nvars)).unwrap();
                    let expansion = to_schur_basis(&prod).unwrap();
                    for lam in enumerate_partitions(total, None, None) {
                        let c = lr_coefficient(&lam, &mu, &nu).unwrap();
                        assert_eq!(c, expansion.get(&lam), "{lam} {mu} {nu}");
                        assert_eq!(c, lr_coefficient(&lam, &nu, &mu).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn skew_standard_tableaux_counts() {
    for n in 1..=8u32 {
        for lam in enumerate_partitions(n, None, None) {
            for k in 0..=n {
                for mu in enumerate_partitions(n - k, None, None) {
                    if !lam.contains(&mu) {
                        continue;
                    }
                    let ones = vec![1u32; k as usize];
                    let syt = enumerate_skew_ssyt(&lam, &mu, &ones).len();
                    let via_lr: BigInt = lr_skew_expansion(&lam, &mu).iter().map(|(nu, c)| c * dimension_hlf(nu)).sum();
                    assert_eq!(via_lr, BigInt::from(syt), "{lam}/{mu}");
                }
            }
        }
    }
}

#[test]
fn lr_size_and_containment_conventions() {
    let p = |s: &str| s.parse::<Partition>().unwrap();
    assert!(lr_coefficient(&p("3,1"), &p("2"), &p("1")).is_err());
    assert_eq!(lr_coefficient(&p("2,2"), &p("3"), &p("1")).unwrap(), BigInt::zero());
    assert_eq!(lr_coefficient(&p("-"), &p("-"), &p("-")).unwrap(), BigInt::from(1));
}
