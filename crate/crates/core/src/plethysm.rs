//! Plethysm coefficients `a^λ_{μ,ν} = ⟨s_λ, s_ν[s_μ]⟩` and the family
//! `a_λ(d[n]) = ⟨s_λ, h_d[h_n]⟩`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symfunc::{plethysm_compose, to_schur_basis, SchurVector};

/// Default largest degree `|inner|·|outer|` accepted.
pub const DEFAULT_DEGREE_CAP: u32 = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlethQuery {
    pub inner: Partition,
    pub outer: Partition,
    pub target: Option<Partition>,
}

impl PlethQuery {
    pub fn new(inner: Partition, outer: Partition, target: Option<Partition>) -> Result<Self> {
        if let Some(t) = &target {
            if t.size() != inner.size() * outer.size() {
                return Err(Error::SizeMismatch(format!(
                    "|{t}| = {} but |inner|·|outer| = {}",
                    t.size(),
                    inner.size() * outer.size()
                )));
            }
        }
        Ok(PlethQuery { inner, outer, target })
    }

    pub fn degree(&self) -> u32 {
        self.inner.size() * self.outer.size()
    }
}

fn check_cap(degree: u32, cap: u32) -> Result<()> {
    if degree > cap {
        return Err(Error::CapExceeded(format!("plethysm degree {degree} exceeds cap {cap}")));
    }
    Ok(())
}

/// Coefficient of `s_target` in `s_outer[s_inner]`.
///
/// Computed in `ℓ(target)` variables: restricting to fewer variables only
/// drops Schur functions with more rows than that.
pub fn pleth_coefficient(q: &PlethQuery, cap: u32) -> Result<BigInt> {
    let target = q.target.as_ref().ok_or_else(|| Error::OutOfRange("plethysm coefficient needs a target".into()))?;
    check_cap(q.degree(), cap)?;
    let nvars = target.len().max(1);
    let poly = plethysm_compose(&q.outer, &q.inner, nvars)?;
    Ok(to_schur_basis(&poly)?.get(target))
}

/// Full Schur expansion of `s_outer[s_inner]`, in
/// `min(|outer|·ℓ(inner), degree)` variables.
pub fn pleth_expansion(inner: &Partition, outer: &Partition, cap: u32) -> Result<SchurVector> {
    let degree = inner.size() * outer.size();
    check_cap(degree, cap)?;
    let nvars = (outer.size() as usize * inner.len()).min(degree as usize).max(1);
    to_schur_basis(&plethysm_compose(outer, inner, nvars)?)
}

/// `h_d[h_n] = Σ a_λ(d[n]) s_λ`, computed in exactly `d` variables (every
/// constituent has at most `d` rows).
pub fn pleth_hn_expansion(d: u32, n: u32, cap: u32) -> Result<SchurVector> {
    if d == 0 || n == 0 {
        return Err(Error::OutOfRange(format!("h_d[h_n] needs d, n ≥ 1, got d={d}, n={n}")));
    }
    check_cap(d * n, cap)?;
    let poly = plethysm_compose(&Partition::row(d), &Partition::row(n), d as usize)?;
    to_schur_basis(&poly)
}

#[derive(Serialize)]
struct CoeffEntry<'a> {
    lambda: &'a Partition,
    a: String,
}

#[derive(Serialize)]
struct HnExport<'a> {
    d: u32,
    n: u32,
    coeffs: Vec<CoeffEntry<'a>>,
}

/// `{"d":…,"n":…,"coeffs":[{"lambda":[…],"a":"…"},…]}`, keys in reverse
/// lexicographic order.
pub fn hn_expansion_json(d: u32, n: u32, v: &SchurVector) -> String {
    let coeffs = v.iter().map(|(lambda, a)| CoeffEntry { lambda, a: a.to_string() }).collect();
    serde_json::to_string(&HnExport { d, n, coeffs }).expect("expansion serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kronecker::kron_tworow;
    use crate::partitions::enumerate_partitions;
    use num_traits::{One, Zero};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn coeff(target: &str, inner: &str, outer: &str) -> BigInt {
        let q = PlethQuery::new(p(inner), p(outer), Some(p(target))).unwrap();
        pleth_coefficient(&q, DEFAULT_DEGREE_CAP).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(coeff("2,2", "1,1", "2"), BigInt::one());
        assert_eq!(coeff("3,1", "1,1", "2"), BigInt::zero());
        assert_eq!(coeff("1,1,1,1", "1,1", "2"), BigInt::one());
        for n in 1..=6 {
            for mu in enumerate_partitions(n, None, None) {
                let q = PlethQuery::new(mu.clone(), p("1"), Some(mu.clone())).unwrap();
                assert_eq!(pleth_coefficient(&q, DEFAULT_DEGREE_CAP).unwrap(), BigInt::one());
            }
        }
    }

    #[test]
    fn query_validation() {
        assert!(matches!(PlethQuery::new(p("2"), p("2"), Some(p("3"))), Err(Error::SizeMismatch(_))));
        let q = PlethQuery::new(p("3,2"), p("4"), Some(p("20"))).unwrap();
        assert!(matches!(pleth_coefficient(&q, DEFAULT_DEGREE_CAP), Err(Error::CapExceeded(_))));
        let untargeted = PlethQuery::new(p("2"), p("2"), None).unwrap();
        assert!(pleth_coefficient(&untargeted, DEFAULT_DEGREE_CAP).is_err());
    }

    #[test]
    fn hn_small_cases() {
        for n in 1..=5 {
            let v = pleth_hn_expansion(1, n, DEFAULT_DEGREE_CAP).unwrap();
            assert_eq!(v.len(), 1);
            assert_eq!(v.get(&Partition::row(n)), BigInt::one());
        }
        let v = pleth_hn_expansion(2, 2, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v.get(&p("4")), BigInt::one());
        assert_eq!(v.get(&p("2,2")), BigInt::one());
        assert!(pleth_hn_expansion(0, 3, DEFAULT_DEGREE_CAP).is_err());
        assert!(matches!(pleth_hn_expansion(5, 4, DEFAULT_DEGREE_CAP), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn hn_two_row_coefficients() {
        for d in 1..=5u32 {
            for n in 1..=(10 / d) {
                let v = pleth_hn_expansion(d, n, DEFAULT_DEGREE_CAP).unwrap();
                for k in 0..=(n * d / 2) {
                    let lam = Partition::two_row(n * d, k).unwrap();
                    assert_eq!(v.get(&lam), kron_tworow(n, d, k).unwrap(), "d={d} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn json_export() {
        let v = pleth_hn_expansion(2, 2, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(
            hn_expansion_json(2, 2, &v),
            r#"{"d":2,"n":2,"coeffs":[{"lambda":[4],"a":"1"},{"lambda":[2,2],"a":"1"}]}"#
        );
    }
}
