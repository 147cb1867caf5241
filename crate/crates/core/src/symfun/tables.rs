//! Transition matrices from each classical basis to the monomial basis.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Basis;
use crate::shapes::{enumerate_fillings, Partition, SkewShape};

/// Per-degree tables. `to_m[b][i][j]` is the coefficient of `m_{parts[j]}` in
/// `b_{parts[i]}`; `from_m[b]` is its inverse.
pub struct Tables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    pub to_m: [Vec<Vec<BigRational>>; 5],
    pub from_m: [Vec<Vec<BigRational>>; 5],
}

static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Tables>>>> = OnceLock::new();

/// Shared, lazily built tables for degree `n`.
pub fn tables(n: usize) -> Arc<Tables> {
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().unwrap().get(&n) {
        return t.clone();
    }
    let built = Arc::new(build(n));
    let mut w = cache.write().unwrap();
    w.entry(n).or_insert(built).clone()
}

fn build(n: usize) -> Tables {
    let parts = Partition::all(n);
    let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mk = |f: &dyn Fn(&Partition, &Partition) -> BigInt| -> Vec<Vec<BigRational>> {
        parts
            .iter()
            .map(|l| parts.iter().map(|m| BigRational::from_integer(f(l, m))).collect())
            .collect()
    };
    let m = mk(&|l, mu| BigInt::from((l == mu) as u8));
    let e = mk(&|l, mu| BigInt::from(count_matrices(l.parts(), mu.parts(), Some(1))));
    let h = mk(&|l, mu| BigInt::from(count_matrices(l.parts(), mu.parts(), None)));
    let p = mk(&|l, mu| BigInt::from(count_part_assignments(l.parts(), mu.parts())));
    let s = mk(&|l, mu| {
        let shape = SkewShape::straight(l.clone());
        BigInt::from(enumerate_fillings(&shape, mu.parts(), &[]).unwrap().count())
    });
    let to_m = [m, e, h, p, s];
    let from_m = [
        invert(&to_m[0]),
        invert(&to_m[1]),
        invert(&to_m[2]),
        invert(&to_m[3]),
        invert(&to_m[4]),
    ];
    Tables { parts, index, to_m, from_m }
}

impl Tables {
    pub fn to_m(&self, b: Basis) -> &Vec<Vec<BigRational>> {
        &self.to_m[b as usize]
    }

    pub fn from_m(&self, b: Basis) -> &Vec<Vec<BigRational>> {
        &self.from_m[b as usize]
    }
}

/// Number of matrices with nonnegative entries (bounded by `cap` when given),
/// row sums `rows` and column sums `cols`.
fn count_matrices(rows: &[usize], cols: &[usize], cap: Option<usize>) -> u128 {
    fn rec(rows: &[usize], cols: &mut Vec<usize>, cap: Option<usize>, memo: &mut HashMap<(usize, Vec<usize>), u128>) -> u128 {
        if rows.is_empty() {
            return cols.iter().all(|&c| c == 0) as u128;
        }
        let key = (rows.len(), cols.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        distribute(rows[0], 0, cols, cap, &mut |cols| {
            total += rec(&rows[1..], cols, cap, memo);
        });
        memo.insert(key, total);
        total
    }
    fn distribute(left: usize, j: usize, cols: &mut Vec<usize>, cap: Option<usize>, k: &mut dyn FnMut(&mut Vec<usize>)) {
        if left == 0 {
            k(cols);
            return;
        }
        if j == cols.len() {
            return;
        }
        let hi = cols[j].min(left).min(cap.unwrap_or(usize::MAX));
        for x in 0..=hi {
            cols[j] -= x;
            distribute(left - x, j + 1, cols, cap, k);
            cols[j] += x;
        }
    }
    let mut cols = cols.to_vec();
    rec(rows, &mut cols, cap, &mut HashMap::new())
}

/// Number of maps from the parts of `lam` to the parts of `mu` whose fibres sum
/// to each `mu_j`: the coefficient of `m_mu` in `p_lam`.
fn count_part_assignments(lam: &[usize], mu: &[usize]) -> u128 {
    fn rec(lam: &[usize], cols: &mut Vec<usize>) -> u128 {
        let Some((&x, rest)) = lam.split_first() else {
            return cols.iter().all(|&c| c == 0) as u128;
        };
        let mut total = 0;
        for j in 0..cols.len() {
            if cols[j] >= x {
                cols[j] -= x;
                total += rec(rest, cols);
                cols[j] += x;
            }
        }
        total
    }
    let mut cols = mu.to_vec();
    rec(lam, &mut cols)
}

/// Gauss-Jordan inverse over the rationals.
pub fn invert(a: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("transition matrix is invertible");
        m.swap(col, piv);
        let inv = BigRational::one() / m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[col].clone();
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}
