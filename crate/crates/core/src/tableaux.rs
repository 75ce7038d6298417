//! Semistandard tableaux: Kostka numbers and Littlewood–Richardson
//! coefficients.

use std::collections::{BTreeMap, HashMap};
use std::sync::LazyLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A filling of the skew diagram `outer / inner`.
///
/// `rows[i]` holds the entries of row `i` for columns `inner_i .. outer_i`,
/// left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTableau {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    /// Validates shape and the semistandard conditions (rows weakly
    /// increasing, columns strictly increasing).
    pub fn new(outer: Partition, inner: Partition, rows: Vec<Vec<u32>>) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::OutOfRange(format!("{inner} is not contained in {outer}")));
        }
        if rows.len() != outer.len() {
            return Err(Error::SizeMismatch(format!("{} rows for shape with {}", rows.len(), outer.len())));
        }
        for (i, row) in rows.iter().enumerate() {
            let width = (outer.part(i) - inner.part(i)) as usize;
            if row.len() != width {
                return Err(Error::SizeMismatch(format!("row {i} has {} entries, expected {width}", row.len())));
            }
            if row.contains(&0) {
                return Err(Error::NonPositivePart);
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::OutOfRange(format!("row {i} decreases")));
            }
        }
        let t = SkewTableau { outer, inner, rows };
        for i in 1..t.rows.len() {
            for col in t.inner.part(i)..t.outer.part(i) {
                if let Some(above) = t.entry(i - 1, col) {
                    if above >= t.entry(i, col).unwrap() {
                        return Err(Error::OutOfRange(format!("column {col} not strict at row {i}")));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at `(row, col)` if that cell belongs to the skew shape.
    pub fn entry(&self, row: usize, col: u32) -> Option<u32> {
        let lo = self.inner.part(row);
        if row >= self.rows.len() || col < lo || col >= self.outer.part(row) {
            return None;
        }
        Some(self.rows[row][(col - lo) as usize])
    }

    /// Letter counts; index 0 counts the letter 1.
    pub fn weight(&self) -> Vec<u32> {
        let mut w = Vec::new();
        for &v in self.rows.iter().flatten() {
            let v = v as usize;
            if w.len() < v {
                w.resize(v, 0);
            }
            w[v - 1] += 1;
        }
        w
    }

    /// Rows read right to left, top to bottom.
    pub fn reading_word(&self) -> ReadingWord {
        ReadingWord(self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ReadingWord(pub Vec<u32>);

impl From<&str> for ReadingWord {
    /// Digits only, one letter per character; anything else is skipped.
    fn from(s: &str) -> Self {
        ReadingWord(s.chars().filter_map(|c| c.to_digit(10)).collect())
    }
}

/// Every prefix contains at least as many `i`s as `(i+1)`s.
pub fn is_ballot(word: &ReadingWord) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for &v in &word.0 {
        if v == 0 {
            return false;
        }
        let v = v as usize;
        if counts.len() < v {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
        if v > 1 && counts[v - 1] > counts[v - 2] {
            return false;
        }
    }
    true
}

/// Lists every SSYT of shape `outer / inner` and weight `weight`, filling
/// row by row with column lower bounds and a running weight budget.
pub fn enumerate_skew_ssyt(outer: &Partition, inner: &Partition, weight: &[u32]) -> Vec<SkewTableau> {
    let cells: u32 = outer.size().saturating_sub(inner.size());
    if !outer.contains(inner) || weight.iter().sum::<u32>() != cells {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = (0..outer.len())
        .map(|i| Vec::with_capacity((outer.part(i) - inner.part(i)) as usize))
        .collect();
    let mut budget = weight.to_vec();
    fill_rows(outer, inner, 0, &mut rows, &mut budget, &mut out);
    out
}

fn fill_rows(
    outer: &Partition,
    inner: &Partition,
    row: usize,
    rows: &mut Vec<Vec<u32>>,
    budget: &mut Vec<u32>,
    out: &mut Vec<SkewTableau>,
) {
    if row == outer.len() {
        out.push(SkewTableau { outer: outer.clone(), inner: inner.clone(), rows: rows.clone() });
        return;
    }
    fill_cell(outer, inner, row, inner.part(row), rows, budget, out);
}

fn fill_cell(
    outer: &Partition,
    inner: &Partition,
    row: usize,
    col: u32,
    rows: &mut Vec<Vec<u32>>,
    budget: &mut Vec<u32>,
    out: &mut Vec<SkewTableau>,
) {
    if col == outer.part(row) {
        fill_rows(outer, inner, row + 1, rows, budget, out);
        return;
    }
    let left = rows[row].last().copied().unwrap_or(1);
    let above = if row > 0 && col >= inner.part(row - 1) {
        rows[row - 1][(col - inner.part(row - 1)) as usize] + 1
    } else {
        1
    };
    let lo = left.max(above);
    for v in lo..=budget.len() as u32 {
        let slot = (v - 1) as usize;
        if budget[slot] == 0 {
            continue;
        }
        budget[slot] -= 1;
        rows[row].push(v);
        fill_cell(outer, inner, row, col + 1, rows, budget, out);
        rows[row].pop();
        budget[slot] += 1;
    }
}

/// Number of SSYT of shape `lambda` and weight `alpha` (a composition of
/// `|lambda|`, zeros allowed).
///
/// Counted by peeling one horizontal strip per letter, memoized on the
/// intermediate shape.
pub fn kostka(lambda: &Partition, alpha: &[u32]) -> Result<BigInt> {
    let total: u32 = alpha.iter().sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| = {} but weight sums to {total}", lambda.size())));
    }
    let weight: Vec<u32> = alpha.to_vec();
    let mut memo = HashMap::new();
    Ok(strip_count(lambda.parts(), &weight, &mut memo))
}

static KOSTKA_CACHE: LazyLock<DashMap<(Partition, Partition), BigInt>> = LazyLock::new(DashMap::new);

/// `K_{λμ}` for a partition weight, cached process-wide.
pub fn kostka_cached(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.size() != mu.size() || !mu.dominated_by_unchecked(lambda) {
        return BigInt::zero();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = KOSTKA_CACHE.get(&key) {
        return v.clone();
    }
    let mut memo = HashMap::new();
    let v = strip_count(lambda.parts(), mu.parts(), &mut memo);
    KOSTKA_CACHE.insert(key, v.clone());
    v
}

/// Counts ways to remove horizontal strips of sizes `weight[last]`, ...,
/// `weight[0]` from `shape`, ending at the empty shape.
fn strip_count(shape: &[u32], weight: &[u32], memo: &mut HashMap<(Vec<u32>, usize), BigInt>) -> BigInt {
    let Some((&last, rest)) = weight.split_last() else {
        return if shape.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    // The first k letters fill at most k rows.
    if shape.len() > weight.len() {
        return BigInt::zero();
    }
    let key = (shape.to_vec(), weight.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    let mut smaller = shape.to_vec();
    remove_strip(shape, 0, last, &mut smaller, &mut |s| {
        let trimmed: Vec<u32> = s.iter().copied().take_while(|&p| p > 0).collect();
        total += strip_count(&trimmed, rest, memo);
    });
    memo.insert(key, total.clone());
    total
}

/// Enumerates shapes `smaller` with `shape / smaller` a horizontal strip of
/// `size` cells: `shape_{i+1} ≤ smaller_i ≤ shape_i`.
fn remove_strip(shape: &[u32], row: usize, size: u32, smaller: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    if row == shape.len() {
        if size == 0 {
            emit(smaller);
        }
        return;
    }
    let floor = shape.get(row + 1).copied().unwrap_or(0);
    let max_take = (shape[row] - floor).min(size);
    // remaining rows can absorb at most this many cells
    let capacity: u32 = (row + 1..shape.len())
        .map(|j| shape[j] - shape.get(j + 1).copied().unwrap_or(0))
        .sum();
    for take in 0..=max_take {
        if size - take > capacity {
            continue;
        }
        smaller[row] = shape[row] - take;
        remove_strip(shape, row + 1, size - take, smaller, emit);
    }
    smaller[row] = shape[row];
}

/// `c^λ_{μν}`: skew SSYT of shape `λ/μ` and weight `ν` whose reading word
/// is a ballot sequence. Zero when `μ ⊄ λ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    if lambda.size() != mu.size() + nu.size() {
        return Err(Error::SizeMismatch(format!(
            "|λ| = {} but |μ| + |ν| = {}",
            lambda.size(),
            mu.size() + nu.size()
        )));
    }
    if !lambda.contains(mu) || !lambda.contains(nu) {
        return Ok(BigInt::zero());
    }
    let mut search = LrSearch::new(lambda, mu, Some(nu.parts()));
    search.run();
    Ok(search.counts.remove(nu).map(BigInt::from).unwrap_or_default())
}

/// Skew Schur expansion `s_{λ/μ} = Σ_ν c^λ_{μν} s_ν`.
pub fn lr_skew_expansion(outer: &Partition, inner: &Partition) -> BTreeMap<Partition, BigInt> {
    if !outer.contains(inner) {
        return BTreeMap::new();
    }
    let mut search = LrSearch::new(outer, inner, None);
    search.run();
    search.counts.into_iter().map(|(k, v)| (k, BigInt::from(v))).collect()
}

/// Depth-first fill of the skew cells in reading order (rows top to bottom,
/// each row right to left), pruning on ballot and semistandard conditions.
struct LrSearch<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    target: Option<&'a [u32]>,
    rows: Vec<Vec<u32>>,
    letter_counts: Vec<u32>,
    counts: BTreeMap<Partition, u64>,
}

impl<'a> LrSearch<'a> {
    fn new(outer: &'a Partition, inner: &'a Partition, target: Option<&'a [u32]>) -> Self {
        let rows = (0..outer.len()).map(|i| vec![0; (outer.part(i) - inner.part(i)) as usize]).collect();
        LrSearch { outer, inner, target, rows, letter_counts: Vec::new(), counts: BTreeMap::new() }
    }

    fn run(&mut self) {
        self.visit(0, self.outer.part(0));
    }

    fn visit(&mut self, row: usize, col: u32) {
        if row == self.outer.len() {
            let weight = Partition::from_sorted(self.letter_counts.clone());
            *self.counts.entry(weight).or_insert(0) += 1;
            return;
        }
        if col == self.inner.part(row) {
            let next = row + 1;
            self.visit(next, self.outer.part(next));
            return;
        }
        let c = col - 1;
        let offset = self.inner.part(row);
        let width = self.outer.part(row);
        // right neighbour, already placed
        let hi_row = if c + 1 < width { self.rows[row][(c + 1 - offset) as usize] } else { u32::MAX };
        let lo = if row > 0 && c >= self.inner.part(row - 1) {
            self.rows[row - 1][(c - self.inner.part(row - 1)) as usize] + 1
        } else {
            1
        };
        let hi = hi_row.min(self.letter_counts.len() as u32 + 1);
        for v in lo..=hi {
            let idx = (v - 1) as usize;
            let have = self.letter_counts.get(idx).copied().unwrap_or(0);
            if v > 1 && have + 1 > self.letter_counts[idx - 1] {
                continue;
            }
            if let Some(t) = self.target {
                if have + 1 > t.get(idx).copied().unwrap_or(0) {
                    continue;
                }
            }
            if idx == self.letter_counts.len() {
                self.letter_counts.push(0);
            }
            self.letter_counts[idx] += 1;
            self.rows[row][(c - offset) as usize] = v;
            self.visit(row, c);
            self.letter_counts[idx] -= 1;
            if self.letter_counts[idx] == 0 && idx + 1 == self.letter_counts.len() {
                self.letter_counts.pop();
            }
        }
    }
}
