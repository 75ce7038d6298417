//! Kronecker coefficients `g(λ,μ,ν)` and reduced Kronecker coefficients.
//!
//! Three routes are available:
//!
//! - [`kron_char`]: the class sum `(1/n!) Σ_α |C_α| χ^λ(α) χ^μ(α) χ^ν(α)`;
//! - [`kron_schur_oracle`]: coefficient extraction from `s_λ[xy]`,
//!   independent of characters and only usable at small sizes;
//! - [`kron_first_row`]: expands the partition with the longest first row
//!   by Jacobi–Trudi along that row and restricts to `S_{n-r} × S_r`, so
//!   only characters of size `r ≤ n - ν_1` are needed. This is what keeps
//!   padded triples (reduced coefficients) cheap.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{character_row, classes};
use crate::error::{Error, Result};
use crate::partitions::{count_bounded, enumerate_partitions, subpartitions_of_size, Partition};
use crate::tableaux::{kostka, kostka_cached, lr_skew_expansion};

/// Largest `|λ|` the Schur–Weyl oracle accepts by default.
pub const SCHUR_ORACLE_MAX: u32 = 6;

/// Three partitions of a common size.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KronTriple {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

impl KronTriple {
    pub fn new(lambda: Partition, mu: Partition, nu: Partition) -> Result<Self> {
        if lambda.size() != mu.size() || mu.size() != nu.size() {
            return Err(Error::SizeMismatch(format!(
                "Kronecker triple needs equal sizes, got {}, {}, {}",
                lambda.size(),
                mu.size(),
                nu.size()
            )));
        }
        Ok(KronTriple { lambda, mu, nu })
    }

    pub fn n(&self) -> u32 {
        self.lambda.size()
    }
}

/// Three partitions of arbitrary sizes, to be padded with a long first row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ReducedTriple {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
}

impl ReducedTriple {
    pub fn new(alpha: Partition, beta: Partition, gamma: Partition) -> Self {
        ReducedTriple { alpha, beta, gamma }
    }

    /// `|α|+|β|+|γ| + α_1+β_1+γ_1 + 1`, the padding size used by
    /// [`reduced_kron`].
    pub fn stable_size(&self) -> u32 {
        [&self.alpha, &self.beta, &self.gamma].iter().map(|p| p.size() + p.first()).sum::<u32>() + 1
    }

    /// `(α[n], β[n], γ[n])`, or `None` if `n` is too small to pad.
    pub fn padded(&self, n: u32) -> Option<KronTriple> {
        Some(KronTriple { lambda: self.alpha.pad(n)?, mu: self.beta.pad(n)?, nu: self.gamma.pad(n)? })
    }
}

/// Sum `Σ_α |C_α| a_α b_α c_α`; `parallel` splits the classes over the
/// rayon pool.
fn class_sum(sizes: &[BigInt], a: &[BigInt], b: &[BigInt], c: &[BigInt], parallel: bool) -> BigInt {
    let term = |i: usize| -> BigInt {
        if a[i].is_zero() || b[i].is_zero() || c[i].is_zero() {
            return BigInt::zero();
        }
        &sizes[i] * &a[i] * &b[i] * &c[i]
    };
    if parallel {
        (0..sizes.len()).into_par_iter().map(term).reduce(BigInt::zero, |x, y| x + y)
    } else {
        (0..sizes.len()).map(term).sum()
    }
}

/// `g(λ,μ,ν)` by the character class sum, with one exact division by `n!`.
pub fn kron_char(t: &KronTriple) -> Result<BigInt> {
    let cls = classes(t.n());
    let (a, b, c) = (character_row(&t.lambda), character_row(&t.mu), character_row(&t.nu));
    let total = class_sum(&cls.sizes, &a, &b, &c, cls.sizes.len() > 512);
    exact_multiplicity(total, &cls.order, t)
}

fn exact_multiplicity(total: BigInt, order: &BigInt, t: &KronTriple) -> Result<BigInt> {
    let (g, rem) = total.div_rem(order);
    if !rem.is_zero() {
        return Err(Error::Internal(format!("class sum for {t:?} is not divisible by {order}")));
    }
    if g.is_negative() {
        return Err(Error::Internal(format!("negative Kronecker coefficient {g} for {t:?}")));
    }
    Ok(g)
}

/// Convenience wrapper over [`kron_char`].
pub fn kron(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    kron_char(&KronTriple::new(lambda.clone(), mu.clone(), nu.clone())?)
}

/// `g(λ,μ,ν)` from `s_λ[xy] = Σ g(λ,μ,ν) s_μ(x) s_ν(y)` in `rows_mu`
/// x-variables and `rows_nu` y-variables.
///
/// The coefficient of `x^μ' y^ν'` in `s_λ[xy]` counts SSYT of shape `λ`
/// over the pair alphabet `(i,j)`, grouped by the matrix of pair counts;
/// the Kostka matrices in both alphabets are then peeled off by
/// subtraction from the dominance-top down.
pub fn kron_schur_oracle(t: &KronTriple, rows_mu: usize, rows_nu: usize) -> Result<BigInt> {
    kron_schur_oracle_capped(t, rows_mu, rows_nu, SCHUR_ORACLE_MAX)
}

pub fn kron_schur_oracle_capped(t: &KronTriple, rows_mu: usize, rows_nu: usize, cap: u32) -> Result<BigInt> {
    if rows_mu < t.mu.len() || rows_nu < t.nu.len() {
        return Err(Error::OutOfRange(format!(
            "insufficient rows: need {}×{}, got {rows_mu}×{rows_nu}",
            t.mu.len(),
            t.nu.len()
        )));
    }
    if t.n() > cap {
        return Err(Error::CapExceeded(format!("Schur–Weyl oracle limited to size {cap}, got {}", t.n())));
    }
    if t.n() == 0 {
        return Ok(BigInt::one());
    }
    let mut oracle = SchurWeyl { lambda: &t.lambda, rows_mu, rows_nu, memo: HashMap::new() };
    oracle.g(&t.mu, &t.nu)
}

struct SchurWeyl<'a> {
    lambda: &'a Partition,
    rows_mu: usize,
    rows_nu: usize,
    memo: HashMap<(Partition, Partition), BigInt>,
}

impl SchurWeyl<'_> {
    fn g(&mut self, mu: &Partition, nu: &Partition) -> Result<BigInt> {
        let key = (mu.clone(), nu.clone());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let n = mu.size();
        let mut value = self.monomial_coeff(mu, nu)?;
        let above_mu: Vec<Partition> =
            enumerate_partitions(n, None, None).into_iter().filter(|m| mu.dominated_by_unchecked(m)).collect();
        let above_nu: Vec<Partition> =
            enumerate_partitions(n, None, None).into_iter().filter(|m| nu.dominated_by_unchecked(m)).collect();
        for m in &above_mu {
            let km = kostka_cached(m, mu);
            for v in &above_nu {
                if m == mu && v == nu {
                    continue;
                }
                let kv = kostka_cached(v, nu);
                if km.is_zero() || kv.is_zero() {
                    continue;
                }
                value -= self.g(m, v)? * &km * kv;
            }
        }
        self.memo.insert(key, value.clone());
        Ok(value)
    }

    /// `[x^μ y^ν] s_λ[xy]`: sum over nonnegative `rows_mu × rows_nu`
    /// matrices with margins `μ`, `ν` of the Kostka number of `λ` with the
    /// matrix entries (read row by row) as weight.
    fn monomial_coeff(&self, mu: &Partition, nu: &Partition) -> Result<BigInt> {
        let row_sums: Vec<u32> = (0..self.rows_mu).map(|i| mu.part(i)).collect();
        let col_sums: Vec<u32> = (0..self.rows_nu).map(|j| nu.part(j)).collect();
        let mut total = BigInt::zero();
        let mut matrix = vec![0u32; self.rows_mu * self.rows_nu];
        let mut cols_left = col_sums.clone();
        let mut err = None;
        fill_matrix(&row_sums, &mut cols_left, self.rows_nu, 0, 0, row_sums.first().copied().unwrap_or(0), &mut matrix, &mut |m| {
            match kostka(self.lambda, m) {
                Ok(k) => total += k,
                Err(e) => err = Some(e),
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(total),
        }
    }
}

/// Enumerates nonnegative integer matrices (row-major) with given row sums
/// and column sums.
#[allow(clippy::too_many_arguments)]
fn fill_matrix(
    row_sums: &[u32],
    cols_left: &mut [u32],
    ncols: usize,
    row: usize,
    col: usize,
    row_left: u32,
    matrix: &mut [u32],
    emit: &mut dyn FnMut(&[u32]),
) {
    if row == row_sums.len() {
        if cols_left.iter().all(|&c| c == 0) {
            emit(matrix);
        }
        return;
    }
    if col + 1 == ncols {
        // last column takes what is left of the row
        if row_left > cols_left[col] {
            return;
        }
        matrix[row * ncols + col] = row_left;
        cols_left[col] -= row_left;
        let next_left = row_sums.get(row + 1).copied().unwrap_or(0);
        fill_matrix(row_sums, cols_left, ncols, row + 1, 0, next_left, matrix, emit);
        cols_left[col] += row_left;
        return;
    }
    for v in 0..=row_left.min(cols_left[col]) {
        matrix[row * ncols + col] = v;
        cols_left[col] -= v;
        fill_matrix(row_sums, cols_left, ncols, row, col + 1, row_left - v, matrix, emit);
        cols_left[col] += v;
    }
}

/// `g((nd-k,k), (n^d), (n^d)) = p_k(n,d) - p_{k-1}(n,d)`.
pub fn kron_tworow(n: u32, d: u32, k: u32) -> Result<BigInt> {
    if 2 * k > n * d {
        return Err(Error::OutOfRange(format!("k = {k} exceeds nd/2 = {}", n * d / 2)));
    }
    Ok(count_bounded(k as i64, n, d) - count_bounded(k as i64 - 1, n, d))
}

/// Skew character `χ^{outer/inner}` on the classes of `S_r`,
/// `r = |outer| - |inner|`, as `Σ_τ c^{outer}_{inner,τ} χ^τ`.
fn skew_character_row(outer: &Partition, inner: &Partition) -> Vec<BigInt> {
    let r = outer.size() - inner.size();
    let mut row = vec![BigInt::zero(); classes(r).types.len()];
    for (tau, c) in lr_skew_expansion(outer, inner) {
        for (slot, chi) in row.iter_mut().zip(character_row(&tau).iter()) {
            *slot += &c * chi;
        }
    }
    row
}

/// `g(λ,μ,ν)` by first-row expansion of one argument.
///
/// Writing the argument with the smallest `n - ν_1` as `(m, γ)`,
/// `s_{(m,γ)} = Σ_j (-1)^j h_{m+j} s_{γ/1^j}`, and pairing with
/// `χ^λ χ^μ` restricted to `S_{m+j} × S_{|γ|-j}` gives
///
/// `g = Σ_j (-1)^j Σ_{σ ⊢ m+j} ⟨χ^{λ/σ} χ^{μ/σ}, χ^{γ/1^j}⟩`.
pub fn kron_first_row(t: &KronTriple) -> Result<BigInt> {
    let mut parts = [&t.lambda, &t.mu, &t.nu];
    parts.sort_by_key(|p| p.size() - p.first());
    let [c, a, b] = parts;
    let gamma = c.tail();
    let both = Partition::from_sorted((0..a.len().min(b.len())).map(|i| a.part(i).min(b.part(i))).collect());
    let mut total = BigInt::zero();
    for j in 0..=gamma.len() as u32 {
        let r = gamma.size() - j;
        let cls = classes(r);
        let gamma_row = skew_character_row(&gamma, &Partition::column(j));
        if gamma_row.iter().all(Zero::is_zero) {
            continue;
        }
        let mut sum = BigInt::zero();
        for sigma in subpartitions_of_size(&both, t.n() - r) {
            let ra = skew_character_row(a, &sigma);
            let rb = skew_character_row(b, &sigma);
            sum += class_sum(&cls.sizes, &gamma_row, &ra, &rb, false);
        }
        let (q, rem) = sum.div_rem(&cls.order);
        if !rem.is_zero() {
            return Err(Error::Internal(format!("first-row term j={j} for {t:?} is not integral")));
        }
        if j % 2 == 0 {
            total += q;
        } else {
            total -= q;
        }
    }
    if total.is_negative() {
        return Err(Error::Internal(format!("negative Kronecker coefficient {total} for {t:?}")));
    }
    Ok(total)
}

/// Method used to evaluate a padded triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Character,
    FirstRow,
}

/// `g(α[n], β[n], γ[n])`.
pub fn padded_kron(t: &ReducedTriple, n: u32, method: Method) -> Result<BigInt> {
    let triple = t
        .padded(n)
        .ok_or_else(|| Error::OutOfRange(format!("cannot pad {t:?} to size {n}")))?;
    match method {
        Method::Character => kron_char(&triple),
        Method::FirstRow => kron_first_row(&triple),
    }
}

/// Reduced Kronecker coefficient `ḡ(α,β,γ)`: the value at the padding size
/// [`ReducedTriple::stable_size`], confirmed equal at the next size.
pub fn reduced_kron(t: &ReducedTriple) -> Result<BigInt> {
    let n0 = t.stable_size();
    let here = padded_kron(t, n0, Method::FirstRow)?;
    let next = padded_kron(t, n0 + 1, Method::FirstRow)?;
    if here != next {
        return Err(Error::Internal(format!("{t:?} not stable: {here} at n={n0}, {next} at n={}", n0 + 1)));
    }
    Ok(here)
}

/// One line of a Kronecker table export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KronRecord {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub g: String,
}

/// All `g(λ,μ,ν)` with `λ ⊢ n` listed once per unordered triple
/// (`λ`, `μ`, `ν` at non-decreasing positions in enumeration order).
/// The output order is independent of the rayon pool size.
pub fn kron_table(n: u32) -> Result<Vec<KronRecord>> {
    let parts = enumerate_partitions(n, None, None);
    let mut index = Vec::new();
    for i in 0..parts.len() {
        for j in i..parts.len() {
            for k in j..parts.len() {
                index.push((i, j, k));
            }
        }
    }
    index
        .par_iter()
        .map(|&(i, j, k)| {
            let t = KronTriple { lambda: parts[i].clone(), mu: parts[j].clone(), nu: parts[k].clone() };
            let g = kron_char(&t)?;
            Ok(KronRecord { lambda: t.lambda, mu: t.mu, nu: t.nu, g: g.to_string() })
        })
        .collect()
}

pub fn records_to_jsonl(records: &[KronRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("record serializes"));
        out.push('\n');
    }
    out
}

/// `f^λ f^μ = Σ_ν g(λ,μ,ν) f^ν`, used by the harness.
pub fn dimension_defect(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    use crate::partitions::dimension_hlf;
    let mut acc = dimension_hlf(lambda) * dimension_hlf(mu);
    for nu in enumerate_partitions(lambda.size(), None, None) {
        acc -= kron(lambda, mu, &nu)? * dimension_hlf(&nu);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn one() -> BigInt {
        BigInt::one()
    }

    fn triple(a: &str, b: &str, c: &str) -> KronTriple {
        KronTriple::new(p(a), p(b), p(c)).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(kron_char(&triple("2,1", "2,1", "2,1")).unwrap(), one());
        assert_eq!(kron_char(&triple("2,2", "2,2", "2,2")).unwrap(), one());
        assert_eq!(kron_schur_oracle(&triple("2,1", "2,1", "2,1"), 2, 2).unwrap(), one());
        assert!(KronTriple::new(p("2,1"), p("2,1"), p("4")).is_err());
    }

    #[test]
    fn trivial_and_sign_rows() {
        for n in 1..=9 {
            let ps = enumerate_partitions(n, None, None);
            for l in &ps {
                for m in &ps {
                    let g = kron(l, m, &Partition::row(n)).unwrap();
                    assert_eq!(g, BigInt::from((l == m) as u8));
                }
            }
        }
        for n in 1..=6 {
            let ps = enumerate_partitions(n, None, None);
            for l in &ps {
                for m in &ps {
                    let t = KronTriple::new(l.clone(), m.clone(), Partition::column(n)).unwrap();
                    let g = kron_schur_oracle(&t, m.len(), n as usize).unwrap();
                    assert_eq!(g, BigInt::from((*l == m.conjugate()) as u8));
                }
            }
        }
    }

    #[test]
    fn oracle_agrees_on_size_four() {
        let ps = enumerate_partitions(4, None, None);
        for l in &ps {
            for m in &ps {
                for v in &ps {
                    let t = KronTriple::new(l.clone(), m.clone(), v.clone()).unwrap();
                    assert_eq!(kron_char(&t).unwrap(), kron_schur_oracle(&t, m.len(), v.len()).unwrap(), "{t:?}");
                }
            }
        }
    }

    #[test]
    fn oracle_row_guards() {
        let t = triple("2,1", "1,1,1", "2,1");
        assert!(matches!(kron_schur_oracle(&t, 2, 2), Err(Error::OutOfRange(_))));
        // extra rows change nothing
        assert_eq!(kron_schur_oracle(&t, 4, 3).unwrap(), kron_schur_oracle(&t, 3, 2).unwrap());
        let big = triple("7", "7", "7");
        assert!(matches!(kron_schur_oracle(&big, 1, 1), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn two_row_closed_form() {
        assert_eq!(kron_tworow(2, 2, 2).unwrap(), one());
        assert_eq!(kron_tworow(2, 2, 1).unwrap(), BigInt::zero());
        for n in 1..=4 {
            for d in 1..=4 {
                assert_eq!(kron_tworow(n, d, 0).unwrap(), one());
            }
        }
        assert!(kron_tworow(2, 2, 3).is_err());
    }

    #[test]
    fn first_row_matches_character_sum() {
        for n in 0..=7 {
            let ps = enumerate_partitions(n, None, None);
            for (i, l) in ps.iter().enumerate() {
                for (j, m) in ps.iter().enumerate().skip(i) {
                    for v in ps.iter().skip(j) {
                        let t = KronTriple::new(l.clone(), m.clone(), v.clone()).unwrap();
                        assert_eq!(kron_first_row(&t).unwrap(), kron_char(&t).unwrap(), "{t:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn first_row_matches_on_padded_triples() {
        let t = ReducedTriple::new(p("2,1"), p("1"), p("1,1"));
        for n in 6..=12 {
            assert_eq!(padded_kron(&t, n, Method::FirstRow).unwrap(), padded_kron(&t, n, Method::Character).unwrap());
        }
    }

    #[test]
    fn reduced_examples() {
        assert_eq!(reduced_kron(&ReducedTriple::new(p("2,1"), p("1"), p("1,1"))).unwrap(), one());
        let empty = Partition::empty();
        assert_eq!(reduced_kron(&ReducedTriple::new(empty.clone(), empty.clone(), empty)).unwrap(), one());
        let ip = ReducedTriple::new(p("4,3"), p("4,3"), p("2,2,2,2,2,1"));
        assert_eq!(reduced_kron(&ip).unwrap(), one());
        assert_eq!(ip.stable_size(), 7 + 7 + 11 + 4 + 4 + 2 + 1);
    }

    #[test]
    fn parallel_and_sequential_class_sums_agree() {
        let cls = classes(12);
        let a = character_row(&p("5,4,3"));
        let b = character_row(&p("4,4,2,2"));
        let c = character_row(&p("6,3,2,1"));
        assert_eq!(class_sum(&cls.sizes, &a, &b, &c, true), class_sum(&cls.sizes, &a, &b, &c, false));
    }

    #[test]
    fn table_is_deduplicated() {
        let t = kron_table(3).unwrap();
        // 3 shapes → C(3+2, 3) = 10 unordered triples
        assert_eq!(t.len(), 10);
        assert_eq!(t[0], KronRecord { lambda: p("3"), mu: p("3"), nu: p("3"), g: "1".into() });
        let jsonl = records_to_jsonl(&t[..1]);
        assert_eq!(jsonl, "{\"lambda\":[3],\"mu\":[3],\"nu\":[3],\"g\":\"1\"}\n");
    }
}
