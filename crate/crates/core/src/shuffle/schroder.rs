use std::fmt;

use super::strip::FlagStrip;
use crate::shapes::{Filling, Letter, Partition};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    South,
    East,
    Diagonal,
}

/// A lattice path from `(n,0)` to `(0,n)` by south, east and diagonal steps
/// staying weakly below `i + j = n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchroderPath {
    n: usize,
    steps: Vec<Step>,
}

impl SchroderPath {
    pub fn new(n: usize, steps: Vec<Step>) -> Result<Self> {
        let (mut i, mut j) = (n as i64, 0i64);
        for s in &steps {
            match s {
                Step::South => i -= 1,
                Step::East => j += 1,
                Step::Diagonal => {
                    i -= 1;
                    j += 1
                }
            }
            if i < 0 || i + j > n as i64 {
                return Err(Error::Input("path leaves the region below i + j = n".into()));
            }
        }
        if (i, j) != (0, n as i64) {
            return Err(Error::Input(format!("path ends at ({i},{j}), not (0,{n})")));
        }
        Ok(SchroderPath { n, steps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn diagonals(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::Diagonal).count()
    }

    /// Row `i` (from the bottom) and whether it came from a diagonal step.
    fn rows(&self) -> Vec<(usize, bool)> {
        let mut rows = vec![(0, false); self.n];
        let (mut i, mut j) = (self.n, 0);
        for s in &self.steps {
            match s {
                Step::South => {
                    i -= 1;
                    rows[i] = (j, false);
                }
                Step::East => j += 1,
                Step::Diagonal => {
                    i -= 1;
                    rows[i] = (j, true);
                    j += 1;
                }
            }
        }
        rows
    }

    /// `λ(Π)`: each diagonal step replaced by a south step then an east step.
    pub fn lambda(&self) -> Partition {
        Partition::from_unsorted(self.rows().into_iter().map(|r| r.0).collect())
    }

    /// `T(Π)`: 1 in the cells of the replaced diagonals, 1̄ elsewhere.
    pub fn filling(&self) -> Filling {
        let lambda = self.lambda();
        let strip = FlagStrip::new(&lambda, self.n, 1).expect("Schröder paths stay in δ_n");
        let letters = self.rows().into_iter().map(|(_, d)| if d { Letter::pos(1) } else { Letter::neg(1) }).collect();
        Filling::new(strip.shape(), letters).expect("n cells")
    }

    pub fn area(&self) -> usize {
        self.n * (self.n - 1) / 2 - self.lambda().size()
    }

    pub fn dinv(&self) -> usize {
        let t = self.filling();
        FlagStrip::new(&self.lambda(), self.n, 1).expect("inside δ_n").dinv_of(t.entries())
    }
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            let c = match s {
                Step::South => 'S',
                Step::East => 'E',
                Step::Diagonal => 'D',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// All Schröder paths of size `n` with exactly `d` diagonal steps.
pub fn schroder_enum(n: usize, d: usize) -> Result<impl Iterator<Item = SchroderPath>> {
    if d > n {
        return Err(Error::Input(format!("{d} diagonal steps exceed n = {n}")));
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, i: usize, j: usize, d: usize, cur: &mut Vec<Step>, out: &mut Vec<SchroderPath>) {
        if i == 0 && j == n {
            if d == 0 {
                out.push(SchroderPath { n, steps: cur.clone() });
            }
            return;
        }
        if i > 0 {
            cur.push(Step::South);
            rec(n, i - 1, j, d, cur, out);
            cur.pop();
        }
        if i + j < n {
            cur.push(Step::East);
            rec(n, i, j + 1, d, cur, out);
            cur.pop();
        }
        if d > 0 && i > 0 {
            cur.push(Step::Diagonal);
            rec(n, i - 1, j + 1, d - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, n, 0, d, &mut cur, &mut out);
    Ok(out.into_iter())
}
