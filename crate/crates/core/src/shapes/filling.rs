use std::fmt;
use std::str::FromStr;

use super::partition::{Cell, Partition};
use super::skew::SkewShape;
use crate::{Error, Result};

/// A letter of the signed alphabet `1 < 1̄ < 2 < 2̄ < …`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    /// Positive letter `a ≥ 1`.
    pub fn pos(a: usize) -> Self {
        assert!(a >= 1, "letters start at 1");
        Letter(2 * (a as u32 - 1))
    }

    /// Negative letter `ā`, `a ≥ 1`.
    pub fn neg(a: usize) -> Self {
        assert!(a >= 1, "letters start at 1");
        Letter(2 * (a as u32 - 1) + 1)
    }

    pub fn value(self) -> usize {
        (self.0 / 2) as usize + 1
    }

    pub fn is_negative(self) -> bool {
        self.0 & 1 == 1
    }

    /// Position in the total order, starting at 0 for the letter 1.
    pub fn key(self) -> u32 {
        self.0
    }

    pub fn from_key(k: u32) -> Self {
        Letter(k)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative() {
            write!(f, "~{}", self.value())
        } else {
            write!(f, "{}", self.value())
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Letter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (neg, body) = match s.strip_prefix('~') {
            Some(b) => (true, b),
            None => (false, s),
        };
        let a: usize = body.parse().map_err(|_| Error::Parse(format!("bad letter {s:?}")))?;
        if a == 0 {
            return Err(Error::Parse("letters start at 1".into()));
        }
        Ok(if neg { Letter::neg(a) } else { Letter::pos(a) })
    }
}

/// A filling of a skew shape by signed letters. Entries are stored in the
/// row-major cell order of the shape; for a flag strip the index is the row.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Filling {
    shape: SkewShape,
    entries: Vec<Letter>,
}

impl Filling {
    /// Wrap entries given in row-major cell order. Only the length is checked;
    /// use [`Filling::is_super_tableau`] for the tableau conditions.
    pub fn new(shape: SkewShape, entries: Vec<Letter>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::Input(format!(
                "{} entries for a shape with {} cells",
                entries.len(),
                shape.size()
            )));
        }
        Ok(Self { shape, entries })
    }

    /// Build from a cell → letter function.
    pub fn from_fn(shape: SkewShape, f: impl Fn(Cell) -> Letter) -> Self {
        let entries = shape.cells().into_iter().map(f).collect();
        Self { shape, entries }
    }

    /// A standard filling from positive integers in row-major cell order.
    pub fn standard(shape: SkewShape, labels: &[usize]) -> Result<Self> {
        Self::new(shape, labels.iter().map(|&a| Letter::pos(a)).collect())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[Letter] {
        &self.entries
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.shape.cells()
    }

    /// `(cell, letter)` pairs in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, Letter)> + '_ {
        self.shape.cells().into_iter().zip(self.entries.iter().copied())
    }

    fn index_of(&self, (i, j): Cell) -> Option<usize> {
        if !self.shape.contains((i, j)) {
            return None;
        }
        let before: usize = (0..i).map(|r| self.shape.row_range(r).len()).sum();
        Some(before + j - self.shape.inner().part(i))
    }

    pub fn get(&self, x: Cell) -> Option<Letter> {
        self.index_of(x).map(|k| self.entries[k])
    }

    /// Multiplicities of positive letters `1, 2, …` (trailing zeros trimmed).
    pub fn mu(&self) -> Vec<usize> {
        self.content(false)
    }

    /// Multiplicities of negative letters `1̄, 2̄, …` (trailing zeros trimmed).
    pub fn eta(&self) -> Vec<usize> {
        self.content(true)
    }

    fn content(&self, neg: bool) -> Vec<usize> {
        let mut v = Vec::new();
        for l in &self.entries {
            if l.is_negative() == neg {
                let a = l.value();
                if v.len() < a {
                    v.resize(a, 0);
                }
                v[a - 1] += 1;
            }
        }
        v
    }

    /// Weakly increasing on rows and columns, positive letters in horizontal
    /// strips, negative letters in vertical strips.
    pub fn is_super_tableau(&self) -> bool {
        for (x, a) in self.iter() {
            let (i, j) = x;
            if let Some(b) = self.get((i, j + 1)) {
                if b < a || (b == a && a.is_negative()) {
                    return false;
                }
            }
            if let Some(b) = self.get((i + 1, j)) {
                if b < a || (b == a && !a.is_negative()) {
                    return false;
                }
            }
        }
        true
    }

    /// Positive entries only, and a super tableau.
    pub fn is_semistandard(&self) -> bool {
        self.entries.iter().all(|l| !l.is_negative()) && self.is_super_tableau()
    }

    /// A bijection onto `{1, …, n}` that is a tableau.
    pub fn is_standard(&self) -> bool {
        let n = self.entries.len();
        let mut seen = vec![false; n];
        for l in &self.entries {
            if l.is_negative() || l.value() > n || seen[l.value() - 1] {
                return false;
            }
            seen[l.value() - 1] = true;
        }
        self.is_super_tableau()
    }

    /// For standard fillings: `cell_of[a-1]` is the cell holding `a`.
    pub fn positions(&self) -> Vec<Cell> {
        let mut pos = vec![(0, 0); self.entries.len()];
        for (x, l) in self.iter() {
            pos[l.value() - 1] = x;
        }
        pos
    }
}

/// Rows from the top (largest `i`) down; `.` marks cells of the inner shape.
impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.shape.rows();
        for i in (0..rows).rev() {
            let mut toks: Vec<String> = (0..self.shape.inner().part(i)).map(|_| ".".to_string()).collect();
            for j in self.shape.row_range(i) {
                toks.push(self.get((i, j)).unwrap().to_string());
            }
            write!(f, "{}", toks.join(" "))?;
            if i > 0 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Filling {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().collect();
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows: Vec<Vec<Letter>> = Vec::new();
        for line in lines.iter().rev() {
            let toks: Vec<&str> = line.split_whitespace().collect();
            let dots = toks.iter().take_while(|t| **t == ".").count();
            let letters = toks[dots..]
                .iter()
                .map(|t| t.parse::<Letter>())
                .collect::<Result<Vec<_>>>()?;
            outer.push(toks.len());
            inner.push(dots);
            rows.push(letters);
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        Filling::new(shape, rows.into_iter().flatten().collect())
    }
}

/// Ordered letter classes `1, 1̄, 2, 2̄, …` with their multiplicities.
fn letter_classes(mu: &[usize], eta: &[usize]) -> Vec<(Letter, usize)> {
    let k = mu.len().max(eta.len());
    let mut v = Vec::new();
    for a in 1..=k {
        let m = mu.get(a - 1).copied().unwrap_or(0);
        let e = eta.get(a - 1).copied().unwrap_or(0);
        if m > 0 {
            v.push((Letter::pos(a), m));
        }
        if e > 0 {
            v.push((Letter::neg(a), e));
        }
    }
    v
}

/// All ways to extend `rho` by a horizontal (`neg = false`) or vertical strip of
/// `k` cells inside `outer`. Ordered lexicographically by the increments,
/// bottom row first.
fn strips(rho: &[usize], outer: &[usize], k: usize, neg: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = rho.to_vec();
    fn rec(
        i: usize,
        left: usize,
        rho: &[usize],
        outer: &[usize],
        neg: bool,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if i == rho.len() {
            return;
        }
        let hi = if neg {
            let cap = if i == 0 { usize::MAX } else { cur[i - 1] };
            (rho[i] + 1).min(outer[i]).min(cap)
        } else {
            let cap = if i == 0 { usize::MAX } else { rho[i - 1] };
            outer[i].min(cap)
        };
        let hi = hi.max(rho[i]);
        for v in rho[i]..=hi {
            let add = v - rho[i];
            if add > left {
                break;
            }
            cur[i] = v;
            rec(i + 1, left - add, rho, outer, neg, cur, out);
        }
        cur[i] = rho[i];
    }
    rec(0, k, rho, outer, neg, &mut cur, &mut out);
    out
}

/// Lazy enumeration of `SSYT_±(shape, μ, η)`.
///
/// Letters are placed class by class in the order `1, 1̄, 2, 2̄, …`; each class
/// is a strip added to the region filled so far, and strips are tried in
/// lexicographic order of their row increments, bottom row first.
pub struct FillingIter {
    shape: SkewShape,
    outer: Vec<usize>,
    classes: Vec<(Letter, usize)>,
    row_offset: Vec<usize>,
    inner: Vec<usize>,
    entries: Vec<Letter>,
    stack: Vec<(Vec<Vec<usize>>, usize)>,
    rho: Vec<Vec<usize>>,
    done: bool,
}

impl FillingIter {
    fn place(&mut self, from: &[usize], to: &[usize], l: Letter) {
        for i in 0..to.len() {
            for j in from[i]..to[i] {
                self.entries[self.row_offset[i] + j - self.inner[i]] = l;
            }
        }
    }
}

impl Iterator for FillingIter {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        if self.done {
            return None;
        }
        if self.classes.is_empty() {
            self.done = true;
            return Some(Filling { shape: self.shape.clone(), entries: vec![] });
        }
        loop {
            let depth = self.stack.len();
            let Some((cands, idx)) = self.stack.last_mut() else {
                self.done = true;
                return None;
            };
            if *idx >= cands.len() {
                self.stack.pop();
                self.rho.pop();
                continue;
            }
            let next = cands[*idx].clone();
            *idx += 1;
            let level = depth - 1;
            let from = self.rho[level].clone();
            let letter = self.classes[level].0;
            self.place(&from, &next, letter);
            if depth == self.classes.len() {
                return Some(Filling { shape: self.shape.clone(), entries: self.entries.clone() });
            }
            let (l, k) = self.classes[depth];
            let cands = strips(&next, &self.outer, k, l.is_negative());
            self.rho.push(next);
            self.stack.push((cands, 0));
        }
    }
}

/// Enumerate `SSYT_±(shape, μ, η)`. `μ`, `η` are compositions (zero parts allowed).
pub fn enumerate_fillings(shape: &SkewShape, mu: &[usize], eta: &[usize]) -> Result<FillingIter> {
    let total: usize = mu.iter().sum::<usize>() + eta.iter().sum::<usize>();
    if total != shape.size() {
        return Err(Error::Input(format!(
            "content of size {total} for a shape with {} cells",
            shape.size()
        )));
    }
    let rows = shape.rows();
    let outer = shape.outer().padded(rows);
    let inner = shape.inner().padded(rows);
    let mut row_offset = vec![0; rows];
    for i in 1..rows {
        row_offset[i] = row_offset[i - 1] + outer[i - 1] - inner[i - 1];
    }
    let classes = letter_classes(mu, eta);
    let mut it = FillingIter {
        shape: shape.clone(),
        outer: outer.clone(),
        classes,
        row_offset,
        inner: inner.clone(),
        entries: vec![Letter::pos(1); shape.size()],
        stack: Vec::new(),
        rho: Vec::new(),
        done: false,
    };
    if let Some(&(l, k)) = it.classes.first() {
        let cands = strips(&inner, &outer, k, l.is_negative());
        it.rho.push(inner);
        it.stack.push((cands, 0));
    }
    Ok(it)
}

/// Standard tableaux of a skew shape.
pub fn standard_tableaux(shape: &SkewShape) -> Vec<Filling> {
    let n = shape.size();
    enumerate_fillings(shape, &vec![1; n], &[]).expect("sizes agree").collect()
}
