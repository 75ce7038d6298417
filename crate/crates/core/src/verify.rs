//! Exhaustive property and conjecture checks over small ranges.
//!
//! Each property sweeps a deterministic list of cases, fanned out over the
//! rayon pool and reassembled in order, so a [`Report`] does not depend on
//! the number of workers. A failing case is reported with every partition
//! and value involved.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{character, character_row, classes, DEFAULT_TABLE_LIMIT};
use crate::error::{Error, Result};
use crate::kronecker::{
    kron, kron_char, kron_schur_oracle_capped, kron_tworow, padded_kron, reduced_kron, KronTriple, Method,
    ReducedTriple, SCHUR_ORACLE_MAX,
};
use crate::partitions::{dimension_hlf, enumerate_partitions, Partition};
use crate::plethysm::{pleth_hn_expansion, DEFAULT_DEGREE_CAP};
use crate::symfunc::{schur_in_monomials, to_schur_basis};
use crate::tableaux::lr_coefficient;

pub type Params = BTreeMap<String, i64>;

/// Registered property names.
pub const PROPERTIES: &[&str] = &[
    "orthogonality",
    "kron-symmetry",
    "transpose",
    "dimension-sum",
    "semigroup",
    "murnaghan",
    "tworow",
    "saxl",
    "tensor-square",
    "char-bound",
    "pp20-bound",
    "foulkes",
    "ip23",
    "cauchy",
    "reduced-lr",
    "kron-oracle",
    "lr-oracle",
];

/// Resource caps. The defaults keep every registered property at desk scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` for character tables and Kronecker sweeps.
    pub table: u32,
    /// Largest padded size in the saturation search.
    pub saturation_pad: u32,
    /// Largest plethysm degree.
    pub pleth_degree: u32,
    /// Largest size for the Schur–Weyl oracle.
    pub schur_oracle: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            table: DEFAULT_TABLE_LIMIT,
            saturation_pad: 35,
            pleth_degree: DEFAULT_DEGREE_CAP,
            schur_oracle: SCHUR_ORACLE_MAX,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    CounterexampleConfirmed,
    /// A search ran out of its range or caps without deciding.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub property: String,
    pub params: Params,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub checked_count: u64,
    pub note: String,
    /// Extra per-property output, e.g. the shapes that work for each size.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass | Status::CounterexampleConfirmed)
    }

    /// JSON without timing, so output is byte-stable across runs.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// JSON with an added `elapsed_ms` field.
    pub fn to_json_timed(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["elapsed_ms"] = json!(self.elapsed.as_millis() as u64);
        v.to_string()
    }
}

fn pj(p: &Partition) -> Value {
    json!(p.parts())
}

fn bj(v: &BigInt) -> Value {
    json!(v.to_string())
}

/// Outcome of one sweep: number of cases and the first failure in order.
struct Sweep {
    checked: u64,
    witness: Option<Value>,
    details: Option<Value>,
}

fn sweep<T: Sync>(items: &[T], check: impl Fn(&T) -> Result<Option<Value>> + Sync + Send) -> Result<Sweep> {
    let results: Vec<Result<Option<Value>>> = items.par_iter().map(check).collect();
    let mut witness = None;
    for r in results {
        if let Some(w) = r? {
            witness.get_or_insert(w);
        }
    }
    Ok(Sweep { checked: items.len() as u64, witness, details: None })
}

fn param(params: &Params, name: &str, default: i64, lo: i64, hi: i64) -> Result<u32> {
    let v = params.get(name).copied().unwrap_or(default);
    if v < lo {
        return Err(Error::OutOfRange(format!("{name} = {v} is below {lo}")));
    }
    if v > hi {
        return Err(Error::CapExceeded(format!("{name} = {v} exceeds cap {hi}")));
    }
    Ok(v as u32)
}

fn triples(n: u32) -> Vec<KronTriple> {
    let ps = enumerate_partitions(n, None, None);
    let mut out = Vec::new();
    for l in &ps {
        for m in &ps {
            for v in &ps {
                out.push(KronTriple { lambda: l.clone(), mu: m.clone(), nu: v.clone() });
            }
        }
    }
    out
}

fn unordered_triples(n: u32) -> Vec<KronTriple> {
    let ps = enumerate_partitions(n, None, None);
    let mut out = Vec::new();
    for i in 0..ps.len() {
        for j in i..ps.len() {
            for k in j..ps.len() {
                out.push(KronTriple { lambda: ps[i].clone(), mu: ps[j].clone(), nu: ps[k].clone() });
            }
        }
    }
    out
}

fn tj(t: &KronTriple) -> Value {
    json!({"lambda": pj(&t.lambda), "mu": pj(&t.mu), "nu": pj(&t.nu)})
}

pub fn run_property(name: &str, params: &Params) -> Result<Report> {
    run_property_with(name, params, &Caps::default())
}

pub fn run_property_with(name: &str, params: &Params, caps: &Caps) -> Result<Report> {
    let start = Instant::now();
    let table = caps.table as i64;
    let (sweep, note) = match name {
        "orthogonality" => (orthogonality(param(params, "n", 12, 1, table)?)?, String::new()),
        "kron-symmetry" => (kron_symmetry(param(params, "n", 7, 1, table)?)?, String::new()),
        "transpose" => (transpose(param(params, "n", 7, 1, table)?)?, String::new()),
        "dimension-sum" => (dimension_sum(param(params, "n", 8, 1, table)?)?, String::new()),
        "semigroup" => (semigroup(param(params, "n", 5, 1, table / 2)?)?, String::new()),
        "murnaghan" => (murnaghan(param(params, "n", 5, 0, (table - 1) / 2)?)?, String::new()),
        "tworow" => (tworow(param(params, "n", 12, 1, table.min(caps.pleth_degree as i64))?, caps)?, String::new()),
        "saxl" => {
            let k = param(params, "k", 3, 1, 64)?;
            (saxl(k, caps)?, conjecture_note())
        }
        "tensor-square" => {
            let hi = param(params, "n", 12, 1, table)?;
            let lo = param(params, "n_min", 9, 1, hi as i64)?;
            (tensor_square(lo, hi)?, conjecture_note())
        }
        "char-bound" => (char_bound(param(params, "n", 12, 1, table)?)?, String::new()),
        "pp20-bound" => (pp20(param(params, "n", 8, 1, table)?)?, String::new()),
        "foulkes" => {
            let d = param(params, "d", 3, 2, caps.pleth_degree as i64)?;
            let n = param(params, "n", 2, 1, caps.pleth_degree as i64)?;
            (foulkes(d, n, caps)?, conjecture_note())
        }
        "ip23" => (ip23(param(params, "n", 5, 1, table)?)?, String::new()),
        "cauchy" => (cauchy(param(params, "k", 5, 0, 12)?)?, String::new()),
        "reduced-lr" => (reduced_lr(param(params, "n", 4, 0, table)?)?, String::new()),
        "kron-oracle" => (kron_oracle(param(params, "n", 5, 1, caps.schur_oracle as i64)?, caps)?, String::new()),
        "lr-oracle" => (lr_oracle(param(params, "n", 7, 0, caps.pleth_degree as i64)?)?, String::new()),
        _ => return Err(Error::UnknownProperty(name.to_string())),
    };
    let status = if sweep.witness.is_some() { Status::Fail } else { Status::Pass };
    let note = match (status, note.is_empty()) {
        (Status::Fail, false) => "counterexample to a conjecture found; witness is a research output".to_string(),
        _ => note,
    };
    Ok(Report {
        property: name.to_string(),
        params: params.clone(),
        status,
        witness: sweep.witness,
        checked_count: sweep.checked,
        note,
        details: sweep.details,
        elapsed: start.elapsed(),
    })
}

fn conjecture_note() -> String {
    "conjecture verified in this range only; not a proof".to_string()
}

/// Column orthogonality, row orthogonality as `g(λ,μ,(n)) = δ_{λμ}`, and
/// `χ^λ(1^n) = f^λ`, for every size up to `max_n`.
fn orthogonality(max_n: u32) -> Result<Sweep> {
    let mut total = Sweep { checked: 0, witness: None, details: None };
    for n in 1..=max_n {
        let cls = classes(n);
        let shapes = cls.types.clone();
        let rows: Vec<_> = shapes.par_iter().map(character_row).collect();
        let cols: Vec<usize> = (0..shapes.len()).collect();
        let pairs: Vec<(usize, usize)> = cols.iter().flat_map(|&a| cols.iter().map(move |&b| (a, b))).collect();
        let column = sweep(&pairs, |&(a, b)| {
            let s: BigInt = rows.iter().map(|r| &r[a] * &r[b]).sum();
            let expected = if a == b { cls.centralizers[a].clone() } else { BigInt::zero() };
            Ok((s != expected).then(|| {
                json!({"check": "column", "alpha": pj(&cls.types[a]), "beta": pj(&cls.types[b]), "sum": bj(&s), "expected": bj(&expected)})
            }))
        })?;
        let row = sweep(&pairs, |&(a, b)| {
            let g = kron(&shapes[a], &shapes[b], &Partition::row(n))?;
            let expected = BigInt::from((a == b) as u8);
            Ok((g != expected).then(|| json!({"check": "row", "lambda": pj(&shapes[a]), "mu": pj(&shapes[b]), "g": bj(&g)})))
        })?;
        let identity = cls.types.len() - 1;
        let dims = sweep(&cols, |&a| {
            let f = dimension_hlf(&shapes[a]);
            let chi = &rows[a][identity];
            Ok((*chi != f).then(|| json!({"check": "identity", "lambda": pj(&shapes[a]), "chi": bj(chi), "hlf": bj(&f)})))
        })?;
        for s in [column, row, dims] {
            total.checked += s.checked;
            if total.witness.is_none() {
                total.witness = s.witness;
            }
        }
    }
    Ok(total)
}

fn merge(sweeps: impl IntoIterator<Item = Result<Sweep>>) -> Result<Sweep> {
    let mut total = Sweep { checked: 0, witness: None, details: None };
    for s in sweeps {
        let s = s?;
        total.checked += s.checked;
        if total.witness.is_none() {
            total.witness = s.witness;
        }
    }
    Ok(total)
}

fn kron_symmetry(max_n: u32) -> Result<Sweep> {
    merge((1..=max_n).map(|n| {
        sweep(&triples(n), |t| {
            let g = kron_char(t)?;
            let (l, m, v) = (&t.lambda, &t.mu, &t.nu);
            for (a, b, c) in [(l, v, m), (m, l, v), (m, v, l), (v, l, m), (v, m, l)] {
                let h = kron(a, b, c)?;
                if h != g {
                    return Ok(Some(json!({"triple": tj(t), "g": bj(&g), "permuted": [pj(a), pj(b), pj(c)], "value": bj(&h)})));
                }
            }
            Ok(None)
        })
    }))
}

fn transpose(max_n: u32) -> Result<Sweep> {
    merge((1..=max_n).map(|n| {
        sweep(&triples(n), |t| {
            let g = kron_char(t)?;
            let h = kron(&t.lambda.conjugate(), &t.mu.conjugate(), &t.nu)?;
            Ok((g != h).then(|| json!({"triple": tj(t), "g": bj(&g), "transposed": bj(&h)})))
        })
    }))
}

fn dimension_sum(max_n: u32) -> Result<Sweep> {
    merge((1..=max_n).map(|n| {
        let ps = enumerate_partitions(n, None, None);
        let pairs: Vec<(Partition, Partition)> =
            ps.iter().flat_map(|l| ps.iter().map(move |m| (l.clone(), m.clone()))).collect();
        sweep(&pairs, |(l, m)| {
            let mut sum = BigInt::zero();
            for v in &ps {
                sum += kron(l, m, v)? * dimension_hlf(v);
            }
            let expected = dimension_hlf(l) * dimension_hlf(m);
            Ok((sum != expected).then(|| json!({"lambda": pj(l), "mu": pj(m), "sum": bj(&sum), "expected": bj(&expected)})))
        })
    }))
}

/// Every pair of positive triples with sizes `≤ max_n`, added
/// componentwise.
fn semigroup(max_n: u32) -> Result<Sweep> {
    let mut positive: Vec<(KronTriple, BigInt)> = Vec::new();
    for n in 1..=max_n {
        for t in triples(n) {
            let g = kron_char(&t)?;
            if !g.is_zero() {
                positive.push((t, g));
            }
        }
    }
    let pairs: Vec<(usize, usize)> =
        (0..positive.len()).flat_map(|i| (i..positive.len()).map(move |j| (i, j))).collect();
    sweep(&pairs, |&(i, j)| {
        let (t1, g1) = &positive[i];
        let (t2, g2) = &positive[j];
        let sum = kron(&t1.lambda.add(&t2.lambda), &t1.mu.add(&t2.mu), &t1.nu.add(&t2.nu))?;
        let floor = g1.max(g2);
        Ok((sum < *floor).then(|| json!({"first": tj(t1), "g1": bj(g1), "second": tj(t2), "g2": bj(g2), "sum_value": bj(&sum)})))
    })
}

/// `g(λ[n], μ[n], ν[n]) = c^λ_{μν}` at `n = 2|λ| + 1`.
fn murnaghan(max_size: u32) -> Result<Sweep> {
    let mut cases = Vec::new();
    for size in 0..=max_size {
        for lam in enumerate_partitions(size, None, None) {
            for k in 0..=size {
                for mu in enumerate_partitions(k, None, None) {
                    for nu in enumerate_partitions(size - k, None, None) {
                        cases.push((lam.clone(), mu.clone(), nu));
                    }
                }
            }
        }
    }
    sweep(&cases, |(lam, mu, nu)| {
        let n = 2 * lam.size() + 1;
        let t = ReducedTriple::new(lam.clone(), mu.clone(), nu.clone());
        let g = padded_kron(&t, n, Method::Character)?;
        let c = lr_coefficient(lam, mu, nu)?;
        Ok((g != c).then(|| json!({"lambda": pj(lam), "mu": pj(mu), "nu": pj(nu), "n": n, "g": bj(&g), "lr": bj(&c)})))
    })
}

/// `g((nd-k,k), n^d, n^d) = p_k(n,d) - p_{k-1}(n,d) = a_{(nd-k,k)}(d[n])`.
fn tworow(max_nd: u32, caps: &Caps) -> Result<Sweep> {
    let mut pairs = Vec::new();
    for d in 1..=max_nd {
        for n in 1..=max_nd / d {
            pairs.push((n, d));
        }
    }
    merge(pairs.into_iter().map(|(n, d)| {
        let pleth = pleth_hn_expansion(d, n, caps.pleth_degree)?;
        let rect = Partition::rectangle(n, d);
        let ks: Vec<u32> = (0..=n * d / 2).collect();
        sweep(&ks, |&k| {
            let lam = Partition::two_row(n * d, k)?;
            let g = kron(&lam, &rect, &rect)?;
            let closed = kron_tworow(n, d, k)?;
            let a = pleth.get(&lam);
            Ok((g != closed || a != closed).then(|| {
                json!({"n": n, "d": d, "k": k, "kron": bj(&g), "closed_form": bj(&closed), "plethysm": bj(&a)})
            }))
        })
    }))
}

fn saxl(k: u32, caps: &Caps) -> Result<Sweep> {
    let n = k * (k + 1) / 2;
    if n > caps.table {
        return Err(Error::CapExceeded(format!("staircase of size {n} exceeds table cap {}", caps.table)));
    }
    let stair = Partition::staircase(k);
    let targets = enumerate_partitions(n, None, None);
    sweep(&targets, |mu| {
        let g = kron(&stair, &stair, mu)?;
        Ok(g.is_zero().then(|| json!({"k": k, "mu": pj(mu), "g": "0"})))
    })
}

/// For each size, some self-conjugate `λ` whose tensor square contains
/// every irreducible. `details` lists the working shapes per size; a
/// failing size is witnessed by a missing `μ` for every candidate.
fn tensor_square(lo: u32, hi: u32) -> Result<Sweep> {
    let sizes: Vec<u32> = (lo..=hi).collect();
    // (size, each candidate with its first missing μ, cases checked)
    type Verdicts = (u32, Vec<(Partition, Option<Partition>)>, u64);
    let found: Vec<Result<Verdicts>> = sizes
        .par_iter()
        .map(|&n| {
            let all = enumerate_partitions(n, None, None);
            let mut verdicts = Vec::new();
            let mut checked = 0;
            for lam in all.iter().filter(|l| l.is_self_conjugate()) {
                let mut missing = None;
                for mu in &all {
                    checked += 1;
                    if kron(lam, lam, mu)?.is_zero() {
                        missing = Some(mu.clone());
                        break;
                    }
                }
                verdicts.push((lam.clone(), missing));
            }
            Ok((n, verdicts, checked))
        })
        .collect();
    let mut checked = 0;
    let mut witness = None;
    let mut details = Vec::new();
    for r in found {
        let (n, verdicts, c) = r?;
        checked += c;
        let good: Vec<Value> = verdicts.iter().filter(|(_, m)| m.is_none()).map(|(l, _)| pj(l)).collect();
        if good.is_empty() && witness.is_none() {
            let missing: Vec<Value> = verdicts
                .iter()
                .map(|(l, m)| json!({"lambda": pj(l), "missing_mu": m.as_ref().map(pj)}))
                .collect();
            witness = Some(json!({"n": n, "candidates": missing}));
        }
        details.push(json!({"n": n, "shapes": good}));
    }
    Ok(Sweep { checked, witness, details: Some(Value::Array(details)) })
}

/// Self-conjugate `λ ⊢ n` with `g(λ,λ,μ) > 0` for every `μ ⊢ n`.
pub fn tensor_square_shapes(n: u32) -> Result<Vec<Partition>> {
    let all = enumerate_partitions(n, None, None);
    let mut good = Vec::new();
    for lam in all.iter().filter(|l| l.is_self_conjugate()) {
        let mut ok = true;
        for mu in &all {
            if kron(lam, lam, mu)?.is_zero() {
                ok = false;
                break;
            }
        }
        if ok {
            good.push(lam.clone());
        }
    }
    Ok(good)
}

/// `g(λ,λ,μ) ≥ |χ^μ(λ̂)|` for self-conjugate `λ`.
fn char_bound(max_n: u32) -> Result<Sweep> {
    let mut cases = Vec::new();
    for n in 1..=max_n {
        let all = enumerate_partitions(n, None, None);
        for lam in all.iter().filter(|l| l.is_self_conjugate()) {
            for mu in &all {
                cases.push((lam.clone(), mu.clone()));
            }
        }
    }
    sweep(&cases, |(lam, mu)| {
        let hooks = lam.principal_hooks()?;
        let chi = character(mu, &hooks)?;
        let g = kron(lam, lam, mu)?;
        Ok((g < chi.abs()).then(|| json!({"lambda": pj(lam), "mu": pj(mu), "hooks": pj(&hooks), "g": bj(&g), "chi": bj(&chi)})))
    })
}

/// `g ≤ (1 + L/n)^n (1 + n/L)^L` with `L = ℓ(λ)ℓ(μ)ℓ(ν)`, checked as
/// `g · n^n · L^L ≤ (n + L)^(n + L)`.
pub fn pp20_bound_holds(g: &BigInt, n: u32, l: u32) -> bool {
    let n_big = BigInt::from(n);
    let l_big = BigInt::from(l);
    let lhs = g * n_big.pow(n) * l_big.pow(l);
    let rhs = (n_big + &l_big).pow(n + l);
    lhs <= rhs
}

fn pp20(max_n: u32) -> Result<Sweep> {
    merge((1..=max_n).map(|n| {
        sweep(&unordered_triples(n), |t| {
            let g = kron_char(t)?;
            let l = (t.lambda.len() * t.mu.len() * t.nu.len()) as u32;
            Ok((!pp20_bound_holds(&g, n, l)).then(|| json!({"triple": tj(t), "g": bj(&g), "lmr": l})))
        })
    }))
}

/// `a_λ(d[n]) ≥ a_λ(n[d])` for every `λ ⊢ nd`.
fn foulkes(d: u32, n: u32, caps: &Caps) -> Result<Sweep> {
    if d <= n {
        return Err(Error::OutOfRange(format!("Foulkes inequality needs d > n, got d={d}, n={n}")));
    }
    let big = pleth_hn_expansion(d, n, caps.pleth_degree)?;
    let small = pleth_hn_expansion(n, d, caps.pleth_degree)?;
    let all = enumerate_partitions(n * d, None, None);
    sweep(&all, |lam| {
        let (a, b) = (big.get(lam), small.get(lam));
        Ok((a < b).then(|| json!({"lambda": pj(lam), "d": d, "n": n, "a_d_n": bj(&a), "a_n_d": bj(&b)})))
    })
}

/// The reduced triple `(ν_1^{ℓ(λ)} + λ, ν_1^{ℓ(μ)} + μ, (ν_1^{ℓ(λ)+ℓ(μ)}, ν))`
/// whose reduced coefficient equals `g(λ,μ,ν)`.
pub fn ip23_triple(t: &KronTriple) -> ReducedTriple {
    let w = t.nu.first();
    let (ll, lm) = (t.lambda.len() as u32, t.mu.len() as u32);
    ReducedTriple::new(
        t.lambda.add(&Partition::rectangle(w, ll)),
        t.mu.add(&Partition::rectangle(w, lm)),
        t.nu.union(&Partition::rectangle(w, ll + lm)),
    )
}

fn ip23(max_n: u32) -> Result<Sweep> {
    merge((1..=max_n).map(|n| {
        sweep(&triples(n), |t| {
            let g = kron_char(t)?;
            let r = ip23_triple(t);
            let gr = reduced_kron(&r)?;
            Ok((g != gr).then(|| {
                json!({"triple": tj(t), "g": bj(&g), "reduced": {"alpha": pj(&r.alpha), "beta": pj(&r.beta), "gamma": pj(&r.gamma)}, "reduced_value": bj(&gr)})
            }))
        })
    }))
}

/// `ḡ(α,β,γ) = c^α_{βγ}` whenever `|α| = |β| + |γ|`.
fn reduced_lr(max_n: u32) -> Result<Sweep> {
    let mut cases = Vec::new();
    for size in 0..=max_n {
        for a in enumerate_partitions(size, None, None) {
            for k in 0..=size {
                for b in enumerate_partitions(k, None, None) {
                    for c in enumerate_partitions(size - k, None, None) {
                        cases.push(ReducedTriple::new(a.clone(), b.clone(), c));
                    }
                }
            }
        }
    }
    sweep(&cases, |t| {
        let g = reduced_kron(t)?;
        let c = lr_coefficient(&t.alpha, &t.beta, &t.gamma)?;
        Ok((g != c).then(|| json!({"alpha": pj(&t.alpha), "beta": pj(&t.beta), "gamma": pj(&t.gamma), "reduced": bj(&g), "lr": bj(&c)})))
    })
}

fn kron_oracle(max_n: u32, caps: &Caps) -> Result<Sweep> {
    merge((1..=max_n).map(|n| {
        sweep(&triples(n), |t| {
            let g = kron_char(t)?;
            let h = kron_schur_oracle_capped(t, t.mu.len(), t.nu.len(), caps.schur_oracle)?;
            Ok((g != h).then(|| json!({"triple": tj(t), "character": bj(&g), "schur_weyl": bj(&h)})))
        })
    }))
}

/// `c^λ_{μν}` against the Schur expansion of `s_μ s_ν` for
/// `|μ| + |ν| ≤ max_n`.
fn lr_oracle(max_n: u32) -> Result<Sweep> {
    let mut pairs = Vec::new();
    for total in 0..=max_n {
        for k in 0..=total {
            for mu in enumerate_partitions(k, None, None) {
                for nu in enumerate_partitions(total - k, None, None) {
                    pairs.push((mu.clone(), nu));
                }
            }
        }
    }
    sweep(&pairs, |(mu, nu)| {
        let nvars = (mu.size() + nu.size()).max(1) as usize;
        let product = schur_in_monomials(mu, nvars).multiply(&schur_in_monomials(nu, nvars))?;
        let expansion = to_schur_basis(&product)?;
        for lam in enumerate_partitions(mu.size() + nu.size(), None, None) {
            let c = lr_coefficient(&lam, mu, nu)?;
            let e = expansion.get(&lam);
            if c != e {
                return Ok(Some(json!({"lambda": pj(&lam), "mu": pj(mu), "nu": pj(nu), "lr": bj(&c), "product": bj(&e)})));
            }
        }
        Ok(None)
    })
}

/// `Σ_{λ⊢k} s_λ(x) s_λ(y)` against the bidegree-`(k,k)` part of
/// `∏_{i,j ≤ 2} 1/(1 - x_i y_j)`, as polynomials in `x_1,x_2,y_1,y_2`.
fn cauchy(max_k: u32) -> Result<Sweep> {
    let ks: Vec<u32> = (0..=max_k).collect();
    sweep(&ks, |&k| {
        let mut lhs: BTreeMap<[u32; 4], BigInt> = BTreeMap::new();
        for lam in enumerate_partitions(k, None, Some(2)) {
            let s = schur_in_monomials(&lam, 2).to_monomials();
            for (a, ca) in &s {
                for (b, cb) in &s {
                    *lhs.entry([a[0], a[1], b[0], b[1]]).or_default() += ca * cb;
                }
            }
        }
        let rhs = cauchy_kernel(k);
        lhs.retain(|_, c| !c.is_zero());
        Ok((lhs != rhs).then(|| json!({"k": k, "sum_of_products_terms": lhs.len(), "kernel_terms": rhs.len()})))
    })
}

/// Bidegree-`(k,k)` part of `∏_{i,j} Σ_m (x_i y_j)^m`, expanded factor by
/// factor with terms above degree `k` in `x` discarded.
fn cauchy_kernel(k: u32) -> BTreeMap<[u32; 4], BigInt> {
    let mut poly: BTreeMap<[u32; 4], BigInt> = BTreeMap::from([([0; 4], BigInt::one())]);
    for i in 0..2 {
        for j in 0..2 {
            let mut next: BTreeMap<[u32; 4], BigInt> = BTreeMap::new();
            for (e, c) in &poly {
                let deg = e[0] + e[1];
                for m in 0..=(k - deg) {
                    let mut f = *e;
                    f[i] += m;
                    f[2 + j] += m;
                    *next.entry(f).or_default() += c;
                }
            }
            poly = next;
        }
    }
    poly.retain(|e, _| e[0] + e[1] == k);
    poly
}

/// Saturation search for `ḡ`: confirms `ḡ(α,β,γ) = 0` and looks for a
/// stretch factor `N ≤ n_max` with `ḡ(Nα,Nβ,Nγ) > 0`, where `Nα` scales
/// every part.
pub fn saturation_check(t: &ReducedTriple, n_max: u32, caps: &Caps) -> Result<Report> {
    let start = Instant::now();
    let mut params = Params::new();
    params.insert("n_max".into(), n_max as i64);
    let triple_json = |t: &ReducedTriple| json!({"alpha": pj(&t.alpha), "beta": pj(&t.beta), "gamma": pj(&t.gamma)});
    let mut report = Report {
        property: "saturation-cex".into(),
        params,
        status: Status::Inconclusive,
        witness: None,
        checked_count: 0,
        note: String::new(),
        details: None,
        elapsed: Duration::ZERO,
    };
    if t.stable_size() > caps.saturation_pad {
        report.note = format!("padded size {} exceeds cap {}", t.stable_size(), caps.saturation_pad);
        report.elapsed = start.elapsed();
        return Ok(report);
    }
    let base = reduced_kron(t)?;
    report.checked_count = 1;
    if !base.is_zero() {
        report.status = Status::Fail;
        report.witness = Some(json!({"triple": triple_json(t), "reduced": bj(&base)}));
        report.note = "reduced coefficient is positive; not a saturation counterexample candidate".into();
        report.elapsed = start.elapsed();
        return Ok(report);
    }
    let mut values = vec![json!({"N": 1, "reduced": "0"})];
    for n in 2..=n_max {
        let stretched = ReducedTriple::new(t.alpha.scale(n), t.beta.scale(n), t.gamma.scale(n));
        if stretched.stable_size() > caps.saturation_pad {
            report.note = format!(
                "no positive stretch up to N={}; N={n} needs padded size {} > cap {}",
                n - 1,
                stretched.stable_size(),
                caps.saturation_pad
            );
            report.witness = Some(json!({"triple": triple_json(t), "values": values}));
            report.elapsed = start.elapsed();
            return Ok(report);
        }
        let g = reduced_kron(&stretched)?;
        report.checked_count += 1;
        values.push(json!({"N": n, "reduced": bj(&g)}));
        if !g.is_zero() {
            report.status = Status::CounterexampleConfirmed;
            report.note = format!("saturation fails: ḡ = 0 but ḡ at N={n} is {g}");
            report.witness = Some(json!({"triple": triple_json(t), "values": values}));
            report.elapsed = start.elapsed();
            return Ok(report);
        }
    }
    report.note = format!("no positive stretch up to N={n_max}");
    report.witness = Some(json!({"triple": triple_json(t), "values": values}));
    report.elapsed = start.elapsed();
    Ok(report)
}

/// The family `(1^{k²-1}, 1^{k²-1}, k^{k-1})`, `k ≥ 3`.
pub fn search_saturation_counterexample(k: u32, n_max: u32, caps: &Caps) -> Result<Report> {
    if k < 3 {
        return Err(Error::OutOfRange(format!("saturation family needs k ≥ 3, got {k}")));
    }
    if n_max < 2 {
        return Err(Error::OutOfRange(format!("n_max must be at least 2, got {n_max}")));
    }
    let column = Partition::column(k * k - 1);
    let t = ReducedTriple::new(column.clone(), column, Partition::rectangle(k, k - 1));
    let mut report = saturation_check(&t, n_max, caps)?;
    report.params.insert("k".into(), k as i64);
    Ok(report)
}
