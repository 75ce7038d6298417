//! Symmetric-group characters by the Murnaghan–Nakayama rule.
//!
//! Rim hooks are removed on the beta-set (abacus) of the shape: a hook of
//! length `r` is a bead moved from position `b` to the empty position
//! `b - r`, and its height is the number of beads jumped over.

use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, LazyLock};

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, factorial, CycleType, Partition};

/// Default largest `n` accepted by [`character_table`].
pub const DEFAULT_TABLE_LIMIT: u32 = 22;

/// Memo key: a shape and the cycle type still to be consumed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharKey {
    pub shape: Partition,
    pub class_type: Partition,
}

static MEMO: LazyLock<DashMap<CharKey, BigInt>> = LazyLock::new(DashMap::new);
static MEMO_LIMIT: AtomicUsize = AtomicUsize::new(usize::MAX);

/// Stops inserting into the shared memo once it holds `entries` values.
/// Lookups keep working; `None` removes the limit.
pub fn set_memo_limit(entries: Option<usize>) {
    MEMO_LIMIT.store(entries.unwrap_or(usize::MAX), Ordering::Relaxed);
}

pub fn memo_len() -> usize {
    MEMO.len()
}

fn beta_set(shape: &[u32]) -> Vec<u32> {
    let l = shape.len() as u32;
    shape.iter().enumerate().map(|(i, &p)| p + l - 1 - i as u32).collect()
}

fn from_beta(mut beta: Vec<u32>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len() as u32;
    Partition::from_sorted(beta.iter().enumerate().map(|(i, &b)| b - (l - 1 - i as u32)).collect())
}

/// All ways to strip a rim hook of length `len` from `shape`, as
/// `(remaining shape, height)`.
pub fn rim_hook_removals(shape: &Partition, len: u32) -> Vec<(Partition, u32)> {
    let beta = beta_set(shape.parts());
    let occupied: HashSet<u32> = beta.iter().copied().collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < len || occupied.contains(&(b - len)) {
            continue;
        }
        let target = b - len;
        let height = beta.iter().filter(|&&x| x > target && x < b).count() as u32;
        let mut next = beta.clone();
        next[i] = target;
        out.push((from_beta(next), height));
    }
    out
}

fn sign(height: u32) -> i32 {
    if height % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `χ^λ(α)`, consuming cycle lengths largest first with the shared memo.
pub fn character(lambda: &Partition, alpha: &Partition) -> Result<BigInt> {
    if lambda.size() != alpha.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| = {} but |{alpha}| = {}", lambda.size(), alpha.size())));
    }
    Ok(memo_character(lambda, alpha))
}

fn memo_character(shape: &Partition, class_type: &Partition) -> BigInt {
    if class_type.is_empty() {
        return BigInt::one();
    }
    // One-row and one-column shapes are the trivial and sign characters.
    if shape.len() == 1 {
        return BigInt::one();
    }
    if shape.first() == 1 {
        let odd = (class_type.size() as usize - class_type.len()) % 2;
        return if odd == 0 { BigInt::one() } else { -BigInt::one() };
    }
    let key = CharKey { shape: shape.clone(), class_type: class_type.clone() };
    if let Some(v) = MEMO.get(&key) {
        return v.clone();
    }
    let len = class_type.first();
    let rest = class_type.tail();
    let mut value = BigInt::zero();
    for (smaller, height) in rim_hook_removals(shape, len) {
        let sub = memo_character(&smaller, &rest);
        if sign(height) > 0 {
            value += sub;
        } else {
            value -= sub;
        }
    }
    if MEMO.len() < MEMO_LIMIT.load(Ordering::Relaxed) {
        MEMO.insert(key, value.clone());
    }
    value
}

/// Order in which cycle lengths are stripped off.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartOrder {
    LargestFirst,
    SmallestFirst,
}

/// `χ^λ(α)` without the memo, stripping cycle lengths in the given order.
pub fn character_with_order(lambda: &Partition, alpha: &Partition, order: PartOrder) -> Result<BigInt> {
    if lambda.size() != alpha.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| != |{alpha}|")));
    }
    let mut lengths = alpha.parts().to_vec();
    if order == PartOrder::SmallestFirst {
        lengths.reverse();
    }
    fn rec(shape: &Partition, lengths: &[u32]) -> BigInt {
        let Some((&len, rest)) = lengths.split_first() else {
            return BigInt::one();
        };
        rim_hook_removals(shape, len)
            .into_iter()
            .map(|(s, h)| rec(&s, rest) * sign(h))
            .sum()
    }
    Ok(rec(lambda, &lengths))
}

/// Conjugacy classes of `S_n` in enumeration order, with class sizes.
#[derive(Debug)]
pub struct Classes {
    pub n: u32,
    pub types: Vec<Partition>,
    /// `n! / z_α`
    pub sizes: Vec<BigInt>,
    pub centralizers: Vec<BigInt>,
    pub order: BigInt,
}

static CLASSES: LazyLock<DashMap<u32, Arc<Classes>>> = LazyLock::new(DashMap::new);
static ROWS: LazyLock<DashMap<Partition, Arc<Vec<BigInt>>>> = LazyLock::new(DashMap::new);

pub fn classes(n: u32) -> Arc<Classes> {
    if let Some(c) = CLASSES.get(&n) {
        return c.clone();
    }
    let types = enumerate_partitions(n, None, None);
    let order = factorial(n);
    let centralizers: Vec<BigInt> = types.iter().map(|t| CycleType::from(t).centralizer_order()).collect();
    let sizes = centralizers.iter().map(|z| &order / z).collect();
    let c = Arc::new(Classes { n, types, sizes, centralizers, order });
    CLASSES.insert(n, c.clone());
    c
}

/// `χ^λ` on every class of `S_{|λ|}`, in enumeration order. Cached.
pub fn character_row(lambda: &Partition) -> Arc<Vec<BigInt>> {
    if let Some(r) = ROWS.get(lambda) {
        return r.clone();
    }
    let cls = classes(lambda.size());
    let row: Vec<BigInt> = cls.types.iter().map(|a| memo_character(lambda, a)).collect();
    let row = Arc::new(row);
    ROWS.insert(lambda.clone(), row.clone());
    row
}

/// Full character table of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    pub n: u32,
    /// Row labels, enumeration order.
    pub shapes: Vec<Partition>,
    /// Column labels, enumeration order.
    pub classes: Vec<Partition>,
    pub values: Vec<Vec<BigInt>>,
}

#[derive(Serialize)]
struct TableRow<'a> {
    partition: &'a Partition,
    values: Vec<String>,
}

impl CharTable {
    pub fn get(&self, lambda: &Partition, alpha: &Partition) -> Option<&BigInt> {
        let r = self.shapes.iter().position(|s| s == lambda)?;
        let c = self.classes.iter().position(|s| s == alpha)?;
        Some(&self.values[r][c])
    }

    /// One JSON object per row: `{"partition":[..],"values":["..",..]}`.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for (shape, row) in self.shapes.iter().zip(&self.values) {
            let rec = TableRow { partition: shape, values: row.iter().map(|v| v.to_string()).collect() };
            out.push_str(&serde_json::to_string(&rec).expect("table row serializes"));
            out.push('\n');
        }
        out
    }
}

/// Character table of `S_n` for `1 ≤ n ≤ limit`.
pub fn character_table(n: u32, limit: u32) -> Result<CharTable> {
    if n == 0 {
        return Err(Error::OutOfRange("character table needs n ≥ 1".into()));
    }
    if n > limit {
        return Err(Error::CapExceeded(format!("character table n = {n} exceeds limit {limit}")));
    }
    let shapes = enumerate_partitions(n, None, None);
    let values: Vec<Vec<BigInt>> = shapes.par_iter().map(|s| character_row(s).as_ref().clone()).collect();
    Ok(CharTable { n, classes: shapes.clone(), shapes, values })
}

/// A rim-hook (Murnaghan–Nakayama) tableau: letter `i` occupies a rim hook
/// of length `type[i-1]`, and the cells holding letters `≤ i` form a
/// Young diagram for every `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MnTableau {
    rows: Vec<Vec<u32>>,
    hook_heights: Vec<u32>,
}

impl MnTableau {
    pub fn new(rows: Vec<Vec<u32>>, hook_type: &[u32]) -> Result<Self> {
        let shape: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        Partition::new(shape.clone())?;
        let k = hook_type.len() as u32;
        let mut hook_heights = Vec::with_capacity(hook_type.len());
        for letter in 1..=k {
            let cells: Vec<(usize, usize)> = rows
                .iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().filter(move |(_, &v)| v == letter).map(move |(c, _)| (r, c)))
                .collect();
            if cells.len() as u32 != hook_type[letter as usize - 1] {
                return Err(Error::OutOfRange(format!("letter {letter} fills {} cells", cells.len())));
            }
            // letters ≤ i must form a Young diagram
            let sub: Vec<u32> = rows.iter().map(|r| r.iter().take_while(|&&v| v <= letter).count() as u32).collect();
            let filled: usize = rows.iter().flatten().filter(|&&v| v <= letter).count();
            if sub.windows(2).any(|w| w[0] < w[1]) || sub.iter().sum::<u32>() as usize != filled {
                return Err(Error::OutOfRange(format!("letters ≤ {letter} do not form a diagram")));
            }
            let set: HashSet<(usize, usize)> = cells.iter().copied().collect();
            if cells.iter().any(|&(r, c)| set.contains(&(r + 1, c)) && set.contains(&(r, c + 1)) && set.contains(&(r + 1, c + 1))) {
                return Err(Error::OutOfRange(format!("letter {letter} contains a 2×2 block")));
            }
            if !connected(&cells, &set) {
                return Err(Error::OutOfRange(format!("letter {letter} is not connected")));
            }
            let top = cells.iter().map(|c| c.0).min().unwrap_or(0);
            let bottom = cells.iter().map(|c| c.0).max().unwrap_or(0);
            hook_heights.push((bottom - top) as u32);
        }
        if rows.iter().flatten().any(|&v| v == 0 || v > k) {
            return Err(Error::OutOfRange("entry outside 1..=k".into()));
        }
        Ok(MnTableau { rows, hook_heights })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn hook_heights(&self) -> &[u32] {
        &self.hook_heights
    }

    /// Sum of the hook heights.
    pub fn height(&self) -> u32 {
        self.hook_heights.iter().sum()
    }

    pub fn sign(&self) -> i32 {
        sign(self.height())
    }
}

fn connected(cells: &[(usize, usize)], set: &HashSet<(usize, usize)>) -> bool {
    let Some(&start) = cells.first() else {
        return true;
    };
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some((r, c)) = stack.pop() {
        let mut nbrs = vec![(r + 1, c), (r, c + 1)];
        if r > 0 {
            nbrs.push((r - 1, c));
        }
        if c > 0 {
            nbrs.push((r, c - 1));
        }
        for nb in nbrs {
            if set.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    seen.len() == cells.len()
}
