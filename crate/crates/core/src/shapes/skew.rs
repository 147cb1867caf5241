use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::{Cell, Partition};
use crate::{Error, Result};

/// `outer / inner`, drawn in French convention.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// `c(x) = j - i`.
pub fn content((i, j): Cell) -> i64 {
    j as i64 - i as i64
}

/// `d_m(x) = m i + j`.
pub fn diag((i, j): Cell, m: usize) -> usize {
    m * i + j
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Input(format!("{inner} is not contained in {outer}")));
        }
        Ok(Self { outer, inner })
    }

    pub fn straight(p: Partition) -> Self {
        Self { outer: p, inner: Partition::empty() }
    }

    /// The flag strip `(λ + (1^n)) / λ`: one cell `(i, λ_{i+1})` in each row `i < n`.
    pub fn flag_strip(lambda: &Partition, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("n must be positive".into()));
        }
        if lambda.len() > n {
            return Err(Error::Input(format!("{lambda} has more than {n} parts")));
        }
        let outer = Partition::new(lambda.padded(n).iter().map(|p| p + 1).collect())?;
        Ok(Self { outer, inner: lambda.clone() })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Column range `[inner_i, outer_i)` of row `i`.
    pub fn row_range(&self, i: usize) -> std::ops::Range<usize> {
        self.inner.part(i)..self.outer.part(i)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (0..self.rows()).flat_map(|i| self.row_range(i).map(move |j| (i, j))).collect()
    }

    pub fn contains(&self, x: Cell) -> bool {
        self.outer.contains_cell(x) && !self.inner.contains_cell(x)
    }

    pub fn is_horizontal_strip(&self) -> bool {
        let cells = self.cells();
        let mut cols: Vec<usize> = cells.iter().map(|c| c.1).collect();
        cols.sort_unstable();
        cols.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_vertical_strip(&self) -> bool {
        (0..self.rows()).all(|i| self.row_range(i).len() <= 1)
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}
