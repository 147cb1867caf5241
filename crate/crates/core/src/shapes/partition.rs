use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A cell `(i, j)`: `i` is the row (vertical axis, growing upward), `j` the column.
pub type Cell = (usize, usize);

/// Integer partition with strictly positive, weakly decreasing parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped; anything else that is not weakly decreasing is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Input(format!("{parts:?} is not a partition")));
        }
        Ok(Self { parts })
    }

    /// Sort and drop zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `(k)`, a single row.
    pub fn row(k: usize) -> Self {
        Self::from_unsorted(vec![k])
    }

    /// `(1^k)`, a single column.
    pub fn column(k: usize) -> Self {
        Self { parts: vec![1; k] }
    }

    /// `m * delta_n = (m(n-1), m(n-2), ..., m, 0)`.
    pub fn staircase(n: usize, m: usize) -> Self {
        Self::from_unsorted((1..n).rev().map(|k| m * k).collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `lambda_{i+1}` in 0-based row index; 0 past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n` (or longer if needed).
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }

    pub fn conjugate(&self) -> Self {
        let w = self.part(0);
        Self {
            parts: (0..w).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect(),
        }
    }

    /// `n(mu) = sum (i-1) mu_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, (i, j): Cell) -> bool {
        j < self.part(i)
    }

    /// Cells in row-major order (`i` then `j`).
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
            .collect()
    }

    /// `(arm, leg)` of a cell: `a = lambda_{i+1} - j - 1`, `l = lambda'_{j+1} - i - 1`.
    pub fn arm_leg(&self, x: Cell) -> Result<(usize, usize)> {
        if !self.contains_cell(x) {
            return Err(Error::Input(format!("cell {x:?} not in {self}")));
        }
        let (i, j) = x;
        let leg = self.parts.iter().filter(|&&p| p > j).count() - i - 1;
        Ok((self.part(i) - j - 1, leg))
    }

    /// Multiplicities `alpha_k` = number of parts equal to `k`, for `k = 0..=max`
    /// after padding to `n` parts.
    pub fn multiplicities(&self, n: usize) -> Vec<usize> {
        let pad = self.padded(n);
        let max = pad.iter().copied().max().unwrap_or(0);
        let mut a = vec![0; max + 1];
        for p in pad {
            a[p] += 1;
        }
        a
    }

    /// Dominance: `self >= other` iff partial sums of `self` dominate.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// Every partition contained in `self`, including `∅` and `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(outer: &[usize], i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() || max == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
                return;
            }
            for p in 0..=outer[i].min(max) {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        rec(&self.parts, 0, usize::MAX, &mut cur, &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// By size, then lexicographically on parts, so `(1,1) < (2)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `3,1`, `(3,1)`, `3 1` or the empty forms `()` / `0`.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            parts.push(
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {tok:?} in {s:?}")))?,
            );
        }
        Partition::new(parts)
    }
}

/// Compositions of `n` with positive parts, in lexicographic order.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Partitions `λ` with `λ_i ≤ m(n-i)` for `i = 1..n`, that is `λ ⊆ mδ_n`.
///
/// Order: lexicographic on the padded part vector `(λ_1, …, λ_n)`, so `∅` comes first
/// and `mδ_n` last.
pub fn sub_staircase_iter(n: usize, m: usize) -> impl Iterator<Item = Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, m: usize, i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == n {
            out.push(Partition::from_unsorted(cur.clone()));
            return;
        }
        let bound = (m * (n - 1 - i)).min(max);
        for p in 0..=bound {
            cur.push(p);
            rec(n, m, i + 1, p, cur, out);
            cur.pop();
        }
    }
    if n >= 1 {
        rec(n, m, 0, usize::MAX, &mut cur, &mut out);
    }
    out.into_iter()
}
