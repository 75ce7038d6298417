//! Symmetric polynomials in a fixed number of variables.
//!
//! A [`SymPoly`] stores one coefficient per monomial orbit: the key `μ`
//! (a partition with at most `nvars` parts) stands for the monomial
//! symmetric polynomial `m_μ`. Products are computed coefficientwise on
//! orbit representatives, so nothing ever materializes the full monomial
//! list.

use std::collections::{BTreeMap, HashMap};
use std::sync::LazyLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, factorial, Partition};
use crate::tableaux::kostka_cached;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    nvars: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(&Partition::empty(), nvars)
    }

    /// `m_μ`, or zero when `μ` has more than `nvars` parts.
    pub fn monomial(mu: &Partition, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        if mu.len() <= nvars {
            p.terms.insert(mu.clone(), BigInt::one());
        }
        p
    }

    /// Complete homogeneous `h_k`: every orbit of degree `k` once.
    pub fn complete(k: u32, nvars: usize) -> Self {
        let terms = enumerate_partitions(k, None, Some(nvars)).into_iter().map(|m| (m, BigInt::one())).collect();
        SymPoly { nvars, terms }
    }

    /// Elementary `e_k`.
    pub fn elementary(k: u32, nvars: usize) -> Self {
        Self::monomial(&Partition::column(k), nvars)
    }

    /// Builds from a full monomial map (exponent vectors of length `nvars`),
    /// rejecting input that is not symmetric.
    pub fn from_monomials(nvars: usize, monomials: &BTreeMap<Vec<u32>, BigInt>) -> Result<Self> {
        let mut terms: BTreeMap<Partition, BigInt> = BTreeMap::new();
        let mut seen: BTreeMap<Partition, usize> = BTreeMap::new();
        for (exp, c) in monomials {
            if exp.len() != nvars {
                return Err(Error::NvarsMismatch(exp.len(), nvars));
            }
            if c.is_zero() {
                continue;
            }
            let key = Partition::from_unsorted(exp.clone());
            match terms.get(&key) {
                Some(existing) if existing != c => return Err(Error::Asymmetric),
                Some(_) => {}
                None => {
                    terms.insert(key.clone(), c.clone());
                }
            }
            *seen.entry(key).or_insert(0) += 1;
        }
        for (key, count) in &seen {
            if orbit_size(key, nvars) != BigInt::from(*count) {
                return Err(Error::Asymmetric);
            }
        }
        Ok(SymPoly { nvars, terms })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    /// Coefficient of the orbit `m_μ` (equivalently of `x^μ`).
    pub fn coeff(&self, mu: &Partition) -> BigInt {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree shared by all terms; `None` for the zero polynomial.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut degs = self.terms.keys().map(|k| k.size());
        let Some(d) = degs.next() else {
            return Ok(None);
        };
        if degs.any(|e| e != d) {
            return Err(Error::NonHomogeneous);
        }
        Ok(Some(d))
    }

    fn add_term(&mut self, key: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SymPoly) -> Result<SymPoly> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymPoly) -> Result<SymPoly> {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, factor: &BigInt) -> SymPoly {
        if factor.is_zero() {
            return Self::zero(self.nvars);
        }
        SymPoly { nvars: self.nvars, terms: self.terms.iter().map(|(k, c)| (k.clone(), c * factor)).collect() }
    }

    fn check_nvars(&self, other: &SymPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    /// Exact product.
    pub fn multiply(&self, other: &SymPoly) -> Result<SymPoly> {
        self.check_nvars(other)?;
        let by_degree = |p: &SymPoly| {
            let mut g: BTreeMap<u32, HashMap<Vec<u32>, BigInt>> = BTreeMap::new();
            for (k, c) in &p.terms {
                g.entry(k.size()).or_default().insert(k.parts().to_vec(), c.clone());
            }
            g
        };
        let left = by_degree(self);
        let right = by_degree(other);
        let mut out = SymPoly::zero(self.nvars);
        for (&dl, lterms) in &left {
            for (&dr, rterms) in &right {
                for kappa in enumerate_partitions(dl + dr, None, Some(self.nvars)) {
                    let c = orbit_product_coeff(kappa.parts(), dl, lterms, rterms);
                    out.add_term(kappa, c);
                }
            }
        }
        Ok(out)
    }

    /// Substitutes `x_i -> x_i^k` (the power-sum plethysm `p_k[f]`).
    pub fn power_map(&self, k: u32) -> SymPoly {
        SymPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.scale(k), c.clone())).collect() }
    }

    /// Divides every coefficient exactly; a remainder is an internal error.
    fn div_exact(&self, d: &BigInt) -> Result<SymPoly> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::Internal(format!("coefficient {c} of m_{k:?} not divisible by {d}")));
            }
            terms.insert(k.clone(), q);
        }
        Ok(SymPoly { nvars: self.nvars, terms })
    }

    /// Value at `x_1 = ... = x_nvars = 1`.
    pub fn evaluate_at_ones(&self) -> BigInt {
        self.terms.iter().map(|(m, c)| c * orbit_size(m, self.nvars)).sum()
    }

    /// Value at an integer point of length `nvars`.
    pub fn evaluate(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.nvars {
            return Err(Error::NvarsMismatch(point.len(), self.nvars));
        }
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut exps = m.parts().to_vec();
            exps.resize(self.nvars, 0);
            let mut orbit_sum = BigInt::zero();
            for_each_distinct_permutation(&mut exps, &mut |e| {
                orbit_sum += e.iter().zip(point).map(|(&k, x)| x.pow(k)).product::<BigInt>();
            });
            total += c * orbit_sum;
        }
        Ok(total)
    }

    /// Expands into full monomials (exponent vectors of length `nvars`).
    pub fn to_monomials(&self) -> BTreeMap<Vec<u32>, BigInt> {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = m.parts().to_vec();
            exps.resize(self.nvars, 0);
            for_each_distinct_permutation(&mut exps, &mut |e| {
                out.insert(e.to_vec(), c.clone());
            });
        }
        out
    }
}

/// `[x^κ] (f·g)` with `f` homogeneous of degree `dl`: sum over all
/// exponent vectors `a ≤ κ` with `|a| = dl` of `f[sort a]·g[sort(κ-a)]`.
fn orbit_product_coeff(
    kappa: &[u32],
    dl: u32,
    lterms: &HashMap<Vec<u32>, BigInt>,
    rterms: &HashMap<Vec<u32>, BigInt>,
) -> BigInt {
    fn rec(
        kappa: &[u32],
        suffix_cap: &[u32],
        i: usize,
        rest: u32,
        a: &mut Vec<u32>,
        lterms: &HashMap<Vec<u32>, BigInt>,
        rterms: &HashMap<Vec<u32>, BigInt>,
        acc: &mut BigInt,
    ) {
        if i == kappa.len() {
            if rest != 0 {
                return;
            }
            let mut left: Vec<u32> = a.iter().copied().filter(|&x| x > 0).collect();
            left.sort_unstable_by(|x, y| y.cmp(x));
            let Some(lc) = lterms.get(&left) else { return };
            let mut right: Vec<u32> = kappa.iter().zip(a.iter()).map(|(k, x)| k - x).filter(|&x| x > 0).collect();
            right.sort_unstable_by(|x, y| y.cmp(x));
            if let Some(rc) = rterms.get(&right) {
                *acc += lc * rc;
            }
            return;
        }
        if suffix_cap[i] < rest {
            return;
        }
        for take in 0..=kappa[i].min(rest) {
            a.push(take);
            rec(kappa, suffix_cap, i + 1, rest - take, a, lterms, rterms, acc);
            a.pop();
        }
    }
    let mut suffix_cap = vec![0u32; kappa.len() + 1];
    for i in (0..kappa.len()).rev() {
        suffix_cap[i] = suffix_cap[i + 1] + kappa[i];
    }
    let mut acc = BigInt::zero();
    rec(kappa, &suffix_cap, 0, dl, &mut Vec::with_capacity(kappa.len()), lterms, rterms, &mut acc);
    acc
}

/// Number of distinct rearrangements of `μ` padded with zeros to `nvars`.
pub fn orbit_size(mu: &Partition, nvars: usize) -> BigInt {
    if mu.len() > nvars {
        return BigInt::zero();
    }
    let mut denom = factorial((nvars - mu.len()) as u32);
    for &c in mu.multiplicities().values() {
        denom *= factorial(c);
    }
    factorial(nvars as u32) / denom
}

fn for_each_distinct_permutation(items: &mut [u32], f: &mut dyn FnMut(&[u32])) {
    items.sort_unstable();
    loop {
        f(items);
        // next lexicographic permutation
        let Some(i) = (0..items.len().saturating_sub(1)).rev().find(|&i| items[i] < items[i + 1]) else {
            return;
        };
        let j = (i + 1..items.len()).rev().find(|&j| items[j] > items[i]).unwrap();
        items.swap(i, j);
        items[i + 1..].reverse();
    }
}

/// Basis tag for a [`SchurVector`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Schur,
    Monomial,
    Homogeneous,
}

/// Sparse linear combination of basis elements indexed by partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurVector {
    pub basis: Basis,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SchurVector {
    pub fn new(basis: Basis) -> Self {
        SchurVector { basis, coeffs: BTreeMap::new() }
    }

    pub fn from_pairs(basis: Basis, pairs: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut v = Self::new(basis);
        for (k, c) in pairs {
            v.add(k, c);
        }
        v
    }

    pub fn add(&mut self, key: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(key.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn get(&self, key: &Partition) -> BigInt {
        self.coeffs.get(key).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero entries in reverse lexicographic order of the keys.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter().rev()
    }
}

static SCHUR_CACHE: LazyLock<DashMap<(Partition, usize), SymPoly>> = LazyLock::new(DashMap::new);

/// `s_λ(x_1..x_nvars) = Σ_μ K_{λμ} m_μ`.
pub fn schur_in_monomials(lambda: &Partition, nvars: usize) -> SymPoly {
    let key = (lambda.clone(), nvars);
    if let Some(p) = SCHUR_CACHE.get(&key) {
        return p.clone();
    }
    let mut poly = SymPoly::zero(nvars);
    if lambda.len() <= nvars {
        for mu in enumerate_partitions(lambda.size(), Some(lambda.first()), Some(nvars)) {
            let k = kostka_cached(lambda, &mu);
            poly.add_term(mu, k);
        }
    }
    SCHUR_CACHE.insert(key, poly.clone());
    poly
}

/// Schur expansion of a homogeneous symmetric polynomial by repeated
/// subtraction of the leading Schur polynomial.
///
/// The lexicographically largest surviving key is always dominance-maximal,
/// and its coefficient is the Schur coefficient because `K_{μμ} = 1`.
pub fn to_schur_basis(f: &SymPoly) -> Result<SchurVector> {
    f.homogeneous_degree()?;
    let mut rest = f.clone();
    let mut out = SchurVector::new(Basis::Schur);
    while let Some((mu, c)) = rest.terms.last_key_value() {
        let (mu, c) = (mu.clone(), c.clone());
        let s = schur_in_monomials(&mu, f.nvars);
        if s.coeff(&mu) != BigInt::one() {
            return Err(Error::Asymmetric);
        }
        rest = rest.sub(&s.scale(&c))?;
        out.add(mu, c);
    }
    Ok(out)
}

/// `Σ c_λ s_λ` as a polynomial in `nvars` variables.
pub fn from_schur_basis(v: &SchurVector, nvars: usize) -> Result<SymPoly> {
    let mut out = SymPoly::zero(nvars);
    for (lam, c) in v.iter() {
        out = out.add(&schur_in_monomials(lam, nvars).scale(c))?;
    }
    Ok(out)
}

pub fn multiply(f: &SymPoly, g: &SymPoly) -> Result<SymPoly> {
    f.multiply(g)
}

/// `h_0[g], ..., h_k[g]` (or the elementary analogues) by Newton's identity
/// `k·h_k = Σ_{i=1..k} p_i·h_{k-i}` with `p_i[g] = g(x^i)`.
fn newton_sequence(g: &SymPoly, k: u32, elementary: bool) -> Result<Vec<SymPoly>> {
    let nvars = g.nvars;
    let powers: Vec<SymPoly> = (0..=k).map(|i| g.power_map(i)).collect();
    let mut seq = vec![SymPoly::one(nvars)];
    for m in 1..=k {
        let mut acc = SymPoly::zero(nvars);
        for i in 1..=m {
            let term = powers[i as usize].multiply(&seq[(m - i) as usize])?;
            acc = if elementary && i % 2 == 0 { acc.sub(&term)? } else { acc.add(&term)? };
        }
        seq.push(acc.div_exact(&BigInt::from(m))?);
    }
    Ok(seq)
}

/// Determinant of a matrix of symmetric polynomials by first-row Laplace
/// expansion, memoized on the set of columns still available.
fn poly_determinant(matrix: &[Vec<SymPoly>], nvars: usize) -> Result<SymPoly> {
    fn rec(
        matrix: &[Vec<SymPoly>],
        row: usize,
        used: u64,
        nvars: usize,
        memo: &mut HashMap<u64, SymPoly>,
    ) -> Result<SymPoly> {
        if row == matrix.len() {
            return Ok(SymPoly::one(nvars));
        }
        if let Some(p) = memo.get(&used) {
            return Ok(p.clone());
        }
        let mut acc = SymPoly::zero(nvars);
        let mut sign_positive = true;
        for col in 0..matrix.len() {
            if used & (1 << col) != 0 {
                continue;
            }
            let entry = &matrix[row][col];
            if !entry.is_zero() {
                let minor = rec(matrix, row + 1, used | (1 << col), nvars, memo)?;
                let term = entry.multiply(&minor)?;
                acc = if sign_positive { acc.add(&term)? } else { acc.sub(&term)? };
            }
            sign_positive = !sign_positive;
        }
        memo.insert(used, acc.clone());
        Ok(acc)
    }
    if matrix.len() > 63 {
        return Err(Error::CapExceeded("determinant larger than 63×63".into()));
    }
    rec(matrix, 0, 0, nvars, &mut HashMap::new())
}

/// Jacobi–Trudi: `s_λ[g] = det(h_{λ_i - i + j}[g])`, using the dual form
/// `det(e_{λ'_i - i + j}[g])` when `λ` has more rows than columns.
fn schur_of(lambda: &Partition, g: &SymPoly) -> Result<SymPoly> {
    let nvars = g.nvars;
    if lambda.is_empty() {
        return Ok(SymPoly::one(nvars));
    }
    let conj = lambda.conjugate();
    let (shape, elementary) = if lambda.len() <= conj.len() { (lambda.clone(), false) } else { (conj, true) };
    let seq = newton_sequence(g, shape.first() + shape.len() as u32, elementary)?;
    let l = shape.len();
    let matrix: Vec<Vec<SymPoly>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = shape.part(i) as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        SymPoly::zero(nvars)
                    } else {
                        seq[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    poly_determinant(&matrix, nvars)
}

/// `s_outer[s_inner]` in `nvars` variables: `s_outer` evaluated at the
/// monomials of `s_inner`, each repeated by its coefficient.
///
/// The result is the full plethysm restricted to `nvars` variables; it is
/// the complete answer once `nvars ≥ |outer|·ℓ(inner)`.
pub fn plethysm_compose(outer: &Partition, inner: &Partition, nvars: usize) -> Result<SymPoly> {
    let g = schur_in_monomials(inner, nvars);
    plethysm_with(outer, &g)
}

/// `s_outer[g]` for a polynomial `g` with nonnegative coefficients.
pub fn plethysm_with(outer: &Partition, g: &SymPoly) -> Result<SymPoly> {
    if g.terms.values().any(|c| c.is_negative()) {
        return Err(Error::NegativeInner);
    }
    schur_of(outer, g)
}
