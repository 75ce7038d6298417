//! Integer partitions, cycle types and the closed-form counts built on them.
//!
//! Enumeration order everywhere in this crate is reverse lexicographic:
//! `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
///
/// The empty partition is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
    size: u32,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NonPositivePart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds from parts already known to be weakly decreasing; trailing
    /// zeros are dropped.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    /// Sorts arbitrary non-negative integers into a partition, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: u32) -> Self {
        Self::from_sorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Self::from_sorted(vec![1; n as usize])
    }

    /// `(width^height)`: `height` rows of length `width`.
    pub fn rectangle(width: u32, height: u32) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Self::from_sorted(vec![width; height as usize])
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: u32) -> Self {
        Self::from_sorted((1..=k).rev().collect())
    }

    /// The hook `(k, 1^(n-k))`.
    pub fn hook(n: u32, k: u32) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::OutOfRange(format!("hook arm {k} for n={n}")));
        }
        let mut parts = vec![k];
        parts.extend(std::iter::repeat_n(1, (n - k) as usize));
        Ok(Self::from_sorted(parts))
    }

    /// The two-row partition `(n-k, k)`.
    pub fn two_row(n: u32, k: u32) -> Result<Self> {
        if 2 * k > n {
            return Err(Error::OutOfRange(format!("(n-k,k) with n={n}, k={k}")));
        }
        Ok(Self::from_sorted(vec![n - k, k]))
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// Number of nonzero parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first() as usize;
        let mut out = vec![0u32; width];
        for &p in &self.parts {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: out, size: self.size }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Dominance order: every prefix sum of `self` is at most the
    /// corresponding prefix sum of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size != other.size {
            return Err(Error::SizeMismatch(format!(
                "dominance needs equal sizes, got {} and {}",
                self.size, other.size
            )));
        }
        Ok(self.dominated_by_unchecked(other))
    }

    pub(crate) fn dominated_by_unchecked(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Side length of the Durfee square, `max { i : λ_i ≥ i }`.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count()
    }

    /// Diagonal hook lengths `2λ_i - (2i - 1)` of a self-conjugate partition.
    pub fn principal_hooks(&self) -> Result<Partition> {
        if !self.is_self_conjugate() {
            return Err(Error::NotSelfConjugate(self.to_string()));
        }
        let hooks = (0..self.durfee())
            .map(|i| 2 * self.parts[i] - (2 * i as u32 + 1))
            .collect();
        Ok(Partition::from_sorted(hooks))
    }

    /// Cellwise containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Componentwise sum `λ + μ`.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition::from_sorted((0..n).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Scales every part by `factor`.
    pub fn scale(&self, factor: u32) -> Partition {
        Partition::from_sorted(self.parts.iter().map(|p| p * factor).collect())
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// `λ[n] = (n - |λ|, λ)`, or `None` when `n - |λ| < λ_1`.
    pub fn pad(&self, n: u32) -> Option<Partition> {
        let first = n.checked_sub(self.size)?;
        if first < self.first() {
            return None;
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(first);
        parts.extend_from_slice(&self.parts);
        Some(Partition::from_sorted(parts))
    }

    /// Drops the first row.
    pub fn tail(&self) -> Partition {
        Partition::from_sorted(self.parts.iter().skip(1).copied().collect())
    }

    /// Hook length of cell `(row, col)`, both 0-based; the cell must lie in
    /// the diagram.
    pub fn hook_length(&self, row: usize, col: usize) -> u32 {
        let arm = self.parts[row] as usize - col - 1;
        let leg = self.parts[row + 1..].iter().take_while(|&&p| p as usize > col).count();
        (arm + leg + 1) as u32
    }

    pub fn hook_lengths(&self) -> impl Iterator<Item = u32> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(move |(r, &p)| (0..p as usize).map(move |c| self.hook_length(r, c)))
    }

    /// Multiplicity map `i -> c_i`.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Grammar: `part ("," part)*` with `part = INT | INT "^" INT`; `-` or the
/// empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "-" {
            return Ok(Partition::empty());
        }
        let syntax = |reason: &str| Error::Syntax { text: text.to_string(), reason: reason.to_string() };
        let parse_int = |s: &str| -> Result<i64> {
            s.trim().parse::<i64>().map_err(|_| syntax(&format!("expected an integer, found {:?}", s.trim())))
        };
        let mut parts = Vec::new();
        for term in trimmed.split(',') {
            let (value, count) = match term.split_once('^') {
                Some((v, e)) => (parse_int(v)?, parse_int(e)?),
                None => (parse_int(term)?, 1),
            };
            if value <= 0 {
                return Err(Error::NonPositivePart);
            }
            if count < 0 {
                return Err(syntax("negative exponent"));
            }
            let value = u32::try_from(value).map_err(|_| syntax("part too large"))?;
            parts.extend(std::iter::repeat_n(value, count as usize));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Cycle type of a permutation: a partition together with its part
/// multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType {
    partition: Partition,
    cycle_counts: BTreeMap<u32, u32>,
}

impl CycleType {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn cycle_counts(&self) -> &BTreeMap<u32, u32> {
        &self.cycle_counts
    }

    /// `z_α = ∏ i^{c_i} c_i!`, the order of the centralizer.
    pub fn centralizer_order(&self) -> BigInt {
        self.cycle_counts.iter().fold(BigInt::one(), |acc, (&i, &c)| {
            acc * BigInt::from(i).pow(c) * factorial(c)
        })
    }

    /// `n! / z_α`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.partition.size()) / self.centralizer_order()
    }
}

impl From<Partition> for CycleType {
    fn from(partition: Partition) -> Self {
        let cycle_counts = partition.multiplicities();
        CycleType { partition, cycle_counts }
    }
}

impl From<&Partition> for CycleType {
    fn from(partition: &Partition) -> Self {
        CycleType::from(partition.clone())
    }
}

pub fn centralizer_order(alpha: &CycleType) -> BigInt {
    alpha.centralizer_order()
}

/// All partitions of `n` with optional bounds on the largest part and the
/// number of parts, in reverse lexicographic order.
pub fn enumerate_partitions(n: u32, max_part: Option<u32>, max_len: Option<usize>) -> Vec<Partition> {
    fn rec(rest: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        // Largest part first gives reverse lexicographic order.
        let hi = rest.min(max_part);
        for p in (1..=hi).rev() {
            // The remaining slots must be able to absorb what is left.
            if (p as u64) * (slots as u64) < rest as u64 {
                break;
            }
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let max_part = max_part.unwrap_or(n);
    let slots = max_len.unwrap_or(n as usize);
    rec(n, max_part, slots, &mut Vec::new(), &mut out);
    out
}

/// Partitions `σ ⊆ bound` with `|σ| = size`, in reverse lexicographic order.
pub fn subpartitions_of_size(bound: &Partition, size: u32) -> Vec<Partition> {
    fn rec(bound: &[u32], cap: &[u32], row: usize, rest: u32, prev: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        if row == bound.len() || cap[row] < rest {
            return;
        }
        let hi = bound[row].min(prev).min(rest);
        for p in (1..=hi).rev() {
            cur.push(p);
            rec(bound, cap, row + 1, rest - p, p, cur, out);
            cur.pop();
        }
    }
    // cap[i] = most cells rows i.. can still hold
    let parts = bound.parts();
    let mut cap = vec![0u32; parts.len() + 1];
    for i in (0..parts.len()).rev() {
        cap[i] = cap[i + 1] + parts[i];
    }
    let mut out = Vec::new();
    rec(parts, &cap, 0, size, u32::MAX, &mut Vec::new(), &mut out);
    out
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Number of standard Young tableaux, `n! / ∏ hooks`.
pub fn dimension_hlf(p: &Partition) -> BigInt {
    let hooks = p.hook_lengths().fold(BigInt::one(), |acc, h| acc * h);
    factorial(p.size()) / hooks
}

/// `p_r(a, b)`: partitions of `r` fitting inside an `a × b` box (largest part
/// at most `a`, at most `b` parts). Zero for `r < 0` or `r > ab`.
pub fn count_bounded(r: i64, a: u32, b: u32) -> BigInt {
    if r < 0 || r > a as i64 * b as i64 {
        return BigInt::zero();
    }
    let r = r as usize;
    let b = b as usize;
    // table[len][total]: partitions of `total` into exactly `len` parts, each
    // part at most the current part size.
    let mut table = vec![vec![BigInt::zero(); r + 1]; b + 1];
    table[0][0] = BigInt::one();
    for part in 1..=a as usize {
        for len in 1..=b {
            for total in part..=r {
                let add = table[len - 1][total - part].clone();
                if !add.is_zero() {
                    table[len][total] += add;
                }
            }
        }
    }
    (0..=b).map(|len| &table[len][r]).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("5,4,2").parts(), &[5, 4, 2]);
        assert_eq!(p("2^3,1").parts(), &[2, 2, 2, 1]);
        assert!(matches!("1,2".parse::<Partition>(), Err(Error::NotDecreasing(_))));
        assert_eq!(p("-"), Partition::empty());
        assert_eq!(p(""), Partition::empty());
        assert_eq!("0".parse::<Partition>(), Err(Error::NonPositivePart));
        assert_eq!("-3".parse::<Partition>(), Err(Error::NonPositivePart));
        assert!(matches!("a,b".parse::<Partition>(), Err(Error::Syntax { .. })));
        assert!(matches!("3,,1".parse::<Partition>(), Err(Error::Syntax { .. })));
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_partitions(5, None, None).len(), 7);
        assert_eq!(enumerate_partitions(0, None, None), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4, Some(2), Some(2)), vec![p("2,2")]);
        let four: Vec<String> = enumerate_partitions(4, None, None).iter().map(|x| x.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert!(enumerate_partitions(5, Some(1), Some(4)).is_empty());
    }

    #[test]
    fn conjugate_and_dominance() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(Partition::row(6).conjugate(), Partition::column(6));
        assert!(p("3,3").dominance_leq(&p("4,2")).unwrap());
        assert!(!p("2,2,2").dominance_leq(&p("3,1,1,1")).unwrap());
        assert!(!p("3,1,1,1").dominance_leq(&p("2,2,2")).unwrap());
        assert!(p("2,2").dominance_leq(&p("2,2")).unwrap());
        assert!(p("2,2").dominance_leq(&p("3")).is_err());
    }

    #[test]
    fn durfee_and_hooks() {
        assert_eq!(p("5,4,2").durfee(), 2);
        assert_eq!(Partition::column(7).durfee(), 1);
        assert_eq!(p("3,2,1").durfee(), 2);
        assert_eq!(Partition::empty().durfee(), 0);
        assert_eq!(p("2,1").principal_hooks().unwrap(), p("3"));
        assert_eq!(p("3,2,1").principal_hooks().unwrap(), p("5,1"));
        assert_eq!(p("1").principal_hooks().unwrap(), p("1"));
        assert!(matches!(p("3,1").principal_hooks(), Err(Error::NotSelfConjugate(_))));
    }

    #[test]
    fn centralizers() {
        assert_eq!(CycleType::from(Partition::column(6)).centralizer_order(), factorial(6));
        assert_eq!(CycleType::from(Partition::row(6)).centralizer_order(), BigInt::from(6));
        assert_eq!(CycleType::from(p("2,1")).centralizer_order(), BigInt::from(2));
        assert_eq!(CycleType::from(p("2,2,1")).cycle_counts().get(&2), Some(&2));
    }

    #[test]
    fn hook_length_dimensions() {
        assert_eq!(dimension_hlf(&Partition::row(9)), BigInt::one());
        assert_eq!(dimension_hlf(&p("2,2")), BigInt::from(2));
        assert_eq!(dimension_hlf(&p("2,1")), BigInt::from(2));
        assert_eq!(dimension_hlf(&Partition::empty()), BigInt::one());
    }

    #[test]
    fn bounded_counts() {
        assert_eq!(count_bounded(2, 2, 2), BigInt::from(2));
        assert_eq!(count_bounded(0, 3, 0), BigInt::one());
        assert_eq!(count_bounded(-1, 3, 3), BigInt::zero());
        assert_eq!(count_bounded(10, 3, 3), BigInt::zero());
        for a in 0..=5u32 {
            for b in 0..=5u32 {
                let ab = (a * b) as i64;
                for r in 0..=ab {
                    assert_eq!(count_bounded(r, a, b), count_bounded(ab - r, a, b));
                }
            }
        }
    }

    #[test]
    fn padding_and_shapes() {
        assert_eq!(p("2,1").pad(7), Some(p("4,2,1")));
        assert_eq!(p("2,1").pad(4), None);
        assert_eq!(Partition::empty().pad(3), Some(Partition::row(3)));
        assert_eq!(p("2,1").add(&p("1,1,1")), p("3,2,1"));
        assert_eq!(Partition::rectangle(3, 2), p("3,3"));
        assert_eq!(Partition::staircase(3), p("3,2,1"));
        assert_eq!(p("3,3").scale(2), p("6,6"));
        assert_eq!(p("2,2").union(&p("3,1")), p("3,2,2,1"));
    }

    #[test]
    fn subpartitions() {
        let subs = subpartitions_of_size(&p("3,2"), 3);
        assert_eq!(subs, vec![p("3"), p("2,1")]);
        assert_eq!(subpartitions_of_size(&p("3,2"), 0), vec![Partition::empty()]);
        assert!(subpartitions_of_size(&p("3,2"), 6).is_empty());
    }
}
