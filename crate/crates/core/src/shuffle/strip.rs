use std::collections::HashMap;

use crate::shapes::{d_less, diag, Cell, Filling, Letter, Partition, SkewShape};
use crate::{Error, Result};

/// A flag strip `(λ + (1^n))/λ` with `λ ⊆ mδ_n`, together with the pair
/// tables that drive every d-inversion count.
///
/// Rows are indexed `0..n`; row `i` holds the single cell `(i, λ_{i+1})`.
#[derive(Clone, Debug)]
pub struct FlagStrip {
    n: usize,
    m: usize,
    lambda: Partition,
    cells: Vec<Cell>,
    // pair[r * n + i] for r < i, indexed by PairKind
    pair: Vec<[u16; 4]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PairKind {
    Less = 0,
    Greater = 1,
    EqualPos = 2,
    EqualNeg = 3,
}

/// d-inversions contributed when the smaller letter sits at `x`.
pub(crate) fn contribution(x: Cell, y: Cell, m: usize) -> u16 {
    let delta = diag(y, m) as i64 - diag(x, m) as i64;
    let m = m as i64;
    let v = if x.1 > y.1 {
        m - delta.abs()
    } else if x.1 < y.1 {
        m - (delta - 1).abs()
    } else {
        0
    };
    v.max(0) as u16
}

/// Whether the smaller letter at `x` and the larger at `y` form a reduced d-inversion.
pub(crate) fn reduced_contribution(x: Cell, y: Cell, m: usize) -> bool {
    let delta = diag(y, m) as i64 - diag(x, m) as i64;
    let m = m as i64;
    if x.1 > y.1 {
        (0..m).contains(&delta)
    } else if x.1 < y.1 {
        (1..=m).contains(&delta)
    } else {
        false
    }
}

fn kind(a: Letter, b: Letter) -> PairKind {
    match a.cmp(&b) {
        std::cmp::Ordering::Less => PairKind::Less,
        std::cmp::Ordering::Greater => PairKind::Greater,
        std::cmp::Ordering::Equal if a.is_negative() => PairKind::EqualNeg,
        std::cmp::Ordering::Equal => PairKind::EqualPos,
    }
}

/// Check `λ ⊆ mδ_n`.
pub fn check_sub_staircase(lambda: &Partition, n: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::Input("n and m must be positive".into()));
    }
    if lambda.len() > n || (0..lambda.len()).any(|i| lambda.part(i) > m * (n - 1 - i)) {
        return Err(Error::Input(format!("{lambda} is not contained in {m}δ_{n}")));
    }
    Ok(())
}

impl FlagStrip {
    pub fn new(lambda: &Partition, n: usize, m: usize) -> Result<Self> {
        check_sub_staircase(lambda, n, m)?;
        let cells: Vec<Cell> = (0..n).map(|i| (i, lambda.part(i))).collect();
        let mut pair = vec![[0u16; 4]; n * n];
        for r in 0..n {
            for i in r + 1..n {
                let (x, y) = (cells[r], cells[i]);
                let lt = contribution(x, y, m);
                let gt = contribution(y, x, m);
                let eq_pos = if d_less(x, y, m) { lt } else { gt };
                let eq_neg = if d_less(y, x, m) { lt } else { gt };
                pair[r * n + i] = [lt, gt, eq_pos, eq_neg];
            }
        }
        Ok(FlagStrip { n, m, lambda: lambda.clone(), cells, pair })
    }

    /// Recover the strip from a filling of a flag strip.
    pub fn of_filling(t: &Filling, m: usize) -> Result<Self> {
        let shape = t.shape();
        let lambda = shape.inner().clone();
        let n = shape.rows();
        if n == 0 || SkewShape::flag_strip(&lambda, n)? != *shape {
            return Err(Error::Input(format!("{shape:?} is not a flag strip")));
        }
        Self::new(&lambda, n, m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::flag_strip(&self.lambda, self.n).expect("validated")
    }

    /// `|mδ_n| - |λ|`.
    pub fn area(&self) -> usize {
        self.m * self.n * (self.n - 1) / 2 - self.lambda.size()
    }

    /// Largest possible dinv on this strip.
    pub fn max_dinv(&self) -> usize {
        self.m * self.n * (self.n - 1) / 2
    }

    fn pair_value(&self, r: usize, i: usize, a: Letter, b: Letter) -> u16 {
        self.pair[r * self.n + i][kind(a, b) as usize]
    }

    /// dinv of a letter sequence indexed by row.
    pub fn dinv_of(&self, letters: &[Letter]) -> usize {
        let mut s = 0usize;
        for r in 0..self.n {
            for i in r + 1..self.n {
                s += self.pair_value(r, i, letters[r], letters[i]) as usize;
            }
        }
        s
    }

    /// The same count, with equal letters scored by the minimum (positive)
    /// or maximum (negative) of the two unequal alternatives.
    pub fn dinv_min_max(&self, letters: &[Letter]) -> usize {
        let mut s = 0usize;
        for r in 0..self.n {
            for i in r + 1..self.n {
                let (x, y) = (self.cells[r], self.cells[i]);
                let (a, b) = (letters[r], letters[i]);
                let v = if a < b {
                    contribution(x, y, self.m)
                } else if a > b {
                    contribution(y, x, self.m)
                } else {
                    let (u, w) = (contribution(x, y, self.m), contribution(y, x, self.m));
                    if a.is_negative() {
                        u.max(w)
                    } else {
                        u.min(w)
                    }
                };
                s += v as usize;
            }
        }
        s
    }

    /// Reduced d-inversions; equal letters are oriented as in `dinv_of`.
    pub fn reduced_dinv_of(&self, letters: &[Letter]) -> usize {
        let mut s = 0usize;
        for r in 0..self.n {
            for i in r + 1..self.n {
                let (x, y) = (self.cells[r], self.cells[i]);
                let (a, b) = (letters[r], letters[i]);
                let small_at_x = match a.cmp(&b) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal if a.is_negative() => d_less(y, x, self.m),
                    std::cmp::Ordering::Equal => d_less(x, y, self.m),
                };
                let hit = if small_at_x {
                    reduced_contribution(x, y, self.m)
                } else {
                    reduced_contribution(y, x, self.m)
                };
                s += hit as usize;
            }
        }
        s
    }

    /// `e(ν)`: dinv of the all-1 pseudo-filling.
    pub fn e_const(&self) -> usize {
        self.dinv_of(&vec![Letter::pos(1); self.n])
    }

    /// Count super tableaux on the strip by dinv. `classes` lists each letter
    /// with its multiplicity; their total must be `n`.
    pub fn tally(&self, classes: &[(Letter, usize)]) -> Vec<u64> {
        let mut classes: Vec<(Letter, usize)> = classes.iter().copied().filter(|c| c.1 > 0).collect();
        classes.sort();
        let mut out = vec![0u64; self.max_dinv() + 1];
        if classes.iter().map(|c| c.1).sum::<usize>() != self.n {
            return out;
        }
        let mut left: Vec<usize> = classes.iter().map(|c| c.1).collect();
        let mut cur: Vec<Letter> = Vec::with_capacity(self.n);
        self.tally_rec(&classes, &mut left, &mut cur, 0, &mut out);
        out
    }

    fn tally_rec(
        &self,
        classes: &[(Letter, usize)],
        left: &mut [usize],
        cur: &mut Vec<Letter>,
        acc: usize,
        out: &mut [u64],
    ) {
        let i = cur.len();
        if i == self.n {
            out[acc] += 1;
            return;
        }
        let below = if i > 0 && self.cells[i - 1].1 == self.cells[i].1 { Some(cur[i - 1]) } else { None };
        for c in 0..classes.len() {
            if left[c] == 0 {
                continue;
            }
            let l = classes[c].0;
            if let Some(b) = below {
                if l < b || (l == b && !l.is_negative()) {
                    continue;
                }
            }
            let mut add = 0usize;
            for (r, &a) in cur.iter().enumerate() {
                add += self.pair_value(r, i, a, l) as usize;
            }
            left[c] -= 1;
            cur.push(l);
            self.tally_rec(classes, left, cur, acc + add, out);
            cur.pop();
            left[c] += 1;
        }
    }

    /// Standard fillings tallied by `(dinv, d-descent set as a bit mask)`;
    /// bit `a` is set when `a` is a d-descent.
    pub fn tally_standard(&self) -> HashMap<(usize, u64), u64> {
        let mut out = HashMap::new();
        let mut used = vec![false; self.n];
        let mut cur: Vec<usize> = Vec::with_capacity(self.n);
        self.standard_rec(&mut used, &mut cur, 0, &mut out);
        out
    }

    fn standard_rec(&self, used: &mut [bool], cur: &mut Vec<usize>, acc: usize, out: &mut HashMap<(usize, u64), u64>) {
        let i = cur.len();
        if i == self.n {
            let mut row_of = vec![0usize; self.n];
            for (r, &a) in cur.iter().enumerate() {
                row_of[a] = r;
            }
            let mut mask = 0u64;
            for a in 1..self.n {
                // labels are 0-based here; label a-1 is the letter a
                if d_less(self.cells[row_of[a]], self.cells[row_of[a - 1]], self.m) {
                    mask |= 1 << a;
                }
            }
            *out.entry((acc, mask)).or_insert(0) += 1;
            return;
        }
        let floor = if i > 0 && self.cells[i - 1].1 == self.cells[i].1 { cur[i - 1] + 1 } else { 0 };
        for a in floor..self.n {
            if used[a] {
                continue;
            }
            let mut add = 0usize;
            for (r, &b) in cur.iter().enumerate() {
                let k = if b < a { PairKind::Less } else { PairKind::Greater };
                add += self.pair[r * self.n + i][k as usize] as usize;
            }
            used[a] = true;
            cur.push(a);
            self.standard_rec(used, cur, acc + add, out);
            cur.pop();
            used[a] = false;
        }
    }
}

/// Letter classes for content `(μ, η)`: `μ_i` copies of `i` and `η_i` of `ī`.
pub fn content_classes(mu: &[usize], eta: &[usize]) -> Vec<(Letter, usize)> {
    let mut out = Vec::new();
    for (i, &k) in mu.iter().enumerate() {
        out.push((Letter::pos(i + 1), k));
    }
    for (i, &k) in eta.iter().enumerate() {
        out.push((Letter::neg(i + 1), k));
    }
    out
}
