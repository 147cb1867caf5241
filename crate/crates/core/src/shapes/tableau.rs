use std::collections::BTreeSet;

use super::filling::{Filling, Letter};
use super::partition::Cell;
use super::skew::diag;
use crate::{Error, Result};

/// Which order standardization and descents refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StdMode {
    /// Ordinary descents: `a` is a descent if `a+1` sits weakly left of `a`.
    Ordinary,
    /// d-descents for the diagonal `d_m`: `a` is a descent if the cell of `a`
    /// is `>_d` the cell of `a+1`.
    DOrder(usize),
}

/// `x <_d y` iff `d_m(x) > d_m(y)`, or the diagonals agree and `j < j'`.
pub fn d_less(x: Cell, y: Cell, m: usize) -> bool {
    let (dx, dy) = (diag(x, m), diag(y, m));
    dx > dy || (dx == dy && x.1 < y.1)
}

/// Sort key realizing `<_d` as ascending order.
pub fn d_key(x: Cell, m: usize) -> (std::cmp::Reverse<usize>, usize) {
    (std::cmp::Reverse(diag(x, m)), x.1)
}

/// Descent set of a standard filling in the given mode.
pub fn descent_set(s: &Filling, mode: StdMode) -> BTreeSet<usize> {
    let pos = s.positions();
    (1..pos.len())
        .filter(|&a| {
            let (x, y) = (pos[a - 1], pos[a]);
            match mode {
                StdMode::Ordinary => x.1 >= y.1,
                StdMode::DOrder(m) => d_less(y, x, m),
            }
        })
        .collect()
}

/// The unique standard filling `S` with `T ∘ S⁻¹` weakly increasing whose
/// equal-letter runs avoid the descent set (positive letters) or lie inside it
/// (negative letters).
pub fn standardize(t: &Filling, mode: StdMode) -> Result<Filling> {
    if !t.is_super_tableau() {
        return Err(Error::Input("standardize needs a super tableau".into()));
    }
    let cells = t.cells();
    let mut order: Vec<usize> = (0..cells.len()).collect();
    order.sort_by(|&a, &b| {
        let (la, lb) = (t.entries()[a], t.entries()[b]);
        la.cmp(&lb).then_with(|| {
            let (x, y) = (cells[a], cells[b]);
            let asc = match mode {
                // columns left to right; within a column bottom to top
                StdMode::Ordinary => (x.1, x.0).cmp(&(y.1, y.0)),
                StdMode::DOrder(m) => d_key(x, m).cmp(&d_key(y, m)),
            };
            if la.is_negative() {
                match mode {
                    StdMode::Ordinary => (y.1, x.0).cmp(&(x.1, y.0)),
                    StdMode::DOrder(_) => asc.reverse(),
                }
            } else {
                asc
            }
        })
    });
    let mut labels = vec![Letter::pos(1); cells.len()];
    for (k, &idx) in order.iter().enumerate() {
        labels[idx] = Letter::pos(k + 1);
    }
    let s = Filling::new(t.shape().clone(), labels)?;
    if !s.is_standard() {
        return Err(Error::Input("no standardization in this order for this shape".into()));
    }
    Ok(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MajFlavor {
    Maj,
    Comaj,
}

/// Major index of a word (sum of descent positions) or `Σ (n - r_i)`.
pub fn maj_word(w: &[usize], flavor: MajFlavor) -> usize {
    let n = w.len();
    (1..n)
        .filter(|&r| w[r - 1] > w[r])
        .map(|r| match flavor {
            MajFlavor::Maj => r,
            MajFlavor::Comaj => n - r,
        })
        .sum()
}

/// Major index of a standard tableau through its ordinary descent set.
pub fn maj_tableau(s: &Filling, flavor: MajFlavor) -> usize {
    let n = s.entries().len();
    descent_set(s, StdMode::Ordinary)
        .into_iter()
        .map(|r| match flavor {
            MajFlavor::Maj => r,
            MajFlavor::Comaj => n - r,
        })
        .sum()
}
