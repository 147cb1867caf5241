use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::strip::FlagStrip;
use crate::shapes::{d_key, Filling, Letter, Partition, SkewShape};
use crate::{Error, Result};

/// A parking function `f : {1..n} → {1..n}` with `|f⁻¹({1..k})| ≥ k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParkingFunction {
    f: Vec<usize>,
}

impl ParkingFunction {
    /// `values[a-1] = f(a)`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::Input("empty parking function".into()));
        }
        if values.iter().any(|&v| v == 0 || v > n) {
            return Err(Error::Input(format!("values must lie in 1..={n}")));
        }
        let mut counts = vec![0usize; n + 1];
        for &v in &values {
            counts[v] += 1;
        }
        let mut acc = 0;
        for k in 1..=n {
            acc += counts[k];
            if acc < k {
                return Err(Error::Input(format!("only {acc} cars prefer a spot at most {k}")));
            }
        }
        Ok(ParkingFunction { f: values })
    }

    pub fn n(&self) -> usize {
        self.f.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.f
    }

    /// `f(a)` for `1 ≤ a ≤ n`.
    pub fn value(&self, a: usize) -> usize {
        self.f[a - 1]
    }

    /// The pair `(λ, T)`: the parts of `λ` are the values `f(a) - 1`, and car
    /// `a` sits in column `f(a) - 1`, cars increasing up each column.
    pub fn encode(&self) -> (Partition, Filling) {
        let n = self.n();
        let lambda = Partition::from_unsorted(self.f.iter().map(|v| v - 1).collect());
        let mut cars: Vec<usize> = (1..=n).collect();
        // rows run bottom to top with columns weakly decreasing
        cars.sort_by_key(|&a| (std::cmp::Reverse(self.f[a - 1]), a));
        let shape = SkewShape::flag_strip(&lambda, n).expect("at most n parts");
        let t = Filling::standard(shape, &cars).expect("n cells");
        (lambda, t)
    }

    /// Inverse of [`encode`](Self::encode).
    pub fn decode(t: &Filling) -> Result<Self> {
        let strip = FlagStrip::of_filling(t, 1)?;
        if !t.is_standard() {
            return Err(Error::Input("a parking function needs a standard filling".into()));
        }
        let n = strip.n();
        let mut f = vec![0; n];
        for (i, l) in t.entries().iter().enumerate() {
            f[l.value() - 1] = strip.cells()[i].1 + 1;
        }
        Self::new(f)
    }

    /// `a(f) = |δ_n/λ|`.
    pub fn area(&self) -> usize {
        let n = self.n();
        n * (n + 1) / 2 - self.f.iter().sum::<usize>()
    }

    pub fn dinv(&self) -> usize {
        let (lambda, t) = self.encode();
        FlagStrip::new(&lambda, self.n(), 1).expect("parking").dinv_of(t.entries())
    }

    /// All parking functions on `n` cars, in lexicographic order of values.
    pub fn all(n: usize) -> Vec<ParkingFunction> {
        let mut out = Vec::new();
        let mut cur = vec![1; n];
        fn rec(i: usize, cur: &mut Vec<usize>, out: &mut Vec<ParkingFunction>) {
            let n = cur.len();
            if i == n {
                if let Ok(p) = ParkingFunction::new(cur.clone()) {
                    out.push(p);
                }
                return;
            }
            for v in 1..=n {
                cur[i] = v;
                rec(i + 1, cur, out);
            }
        }
        if n > 0 {
            rec(0, &mut cur, &mut out);
        }
        out
    }
}

/// One-line word `f(1)…f(n)`; values above 9 are separated by spaces.
impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f.iter().all(|&v| v < 10) {
            for v in &self.f {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.f.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", s.join(" "))
        }
    }
}

impl FromStr for ParkingFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let vals: Result<Vec<usize>> = if s.contains(char::is_whitespace) || s.contains(',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad value {t:?}"))))
                .collect()
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))
                })
                .collect()
        };
        Self::new(vals?)
    }
}

/// `w(f)`: the entries of the encoding tableau read in `<_d`-increasing order.
pub fn parking_word(p: &ParkingFunction) -> Vec<usize> {
    let (_, t) = p.encode();
    reading_word(&t, 1)
}

/// Entries of a standard flag-strip filling in `<_d`-increasing order of cells.
pub fn reading_word(t: &Filling, m: usize) -> Vec<usize> {
    let mut cells: Vec<_> = t.iter().collect();
    cells.sort_by_key(|&(x, _)| d_key(x, m));
    cells.into_iter().map(|(_, l)| l.value()).collect()
}

/// Inverse of a permutation of `1..=n` in one-line notation.
pub fn inverse(w: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; w.len()];
    for (i, &a) in w.iter().enumerate() {
        inv[a - 1] = i + 1;
    }
    inv
}

/// `D(w) = {i : w_i > w_{i+1}}`.
pub fn descents(w: &[usize]) -> BTreeSet<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

pub fn is_permutation(w: &[usize]) -> bool {
    let mut seen = vec![false; w.len()];
    for &a in w {
        if a == 0 || a > w.len() || seen[a - 1] {
            return false;
        }
        seen[a - 1] = true;
    }
    true
}

/// The block structure of a μ,η-shuffle. Blocks are taken in the order
/// `μ_1, η_1, μ_2, η_2, …`; `μ` blocks increase and `η` blocks decrease.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleSpec {
    pub mu: Vec<usize>,
    pub eta: Vec<usize>,
}

impl ShuffleSpec {
    pub fn new(mu: Vec<usize>, eta: Vec<usize>) -> Self {
        ShuffleSpec { mu, eta }
    }

    pub fn size(&self) -> usize {
        self.mu.iter().sum::<usize>() + self.eta.iter().sum::<usize>()
    }

    /// `(length, increasing)` in interleaved order, zero lengths dropped.
    pub fn blocks(&self) -> Vec<(usize, bool)> {
        let k = self.mu.len().max(self.eta.len());
        let mut out = Vec::new();
        for i in 0..k {
            if let Some(&a) = self.mu.get(i) {
                if a > 0 {
                    out.push((a, true));
                }
            }
            if let Some(&b) = self.eta.get(i) {
                if b > 0 {
                    out.push((b, false));
                }
            }
        }
        out
    }
}

/// Whether `w⁻¹` splits into the alternating runs prescribed by `spec`.
pub fn is_shuffle(w: &[usize], spec: &ShuffleSpec) -> bool {
    if w.len() != spec.size() || !is_permutation(w) {
        return false;
    }
    let inv = inverse(w);
    let mut start = 0;
    for (len, up) in spec.blocks() {
        let block = &inv[start..start + len];
        let ok = block.windows(2).all(|p| if up { p[0] < p[1] } else { p[0] > p[1] });
        if !ok {
            return false;
        }
        start += len;
    }
    true
}

/// Standard fillings of the strip of `λ`, as row-indexed label vectors.
pub(crate) fn standard_labelings(strip: &FlagStrip) -> Vec<Vec<usize>> {
    let n = strip.n();
    let cols: Vec<usize> = strip.cells().iter().map(|c| c.1).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(cols: &[usize], cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = cols.len();
        let i = cur.len();
        if i == n {
            out.push(cur.clone());
            return;
        }
        let floor = if i > 0 && cols[i] == cols[i - 1] { cur[i - 1] + 1 } else { 1 };
        for a in floor..=n {
            if !used[a] {
                used[a] = true;
                cur.push(a);
                rec(cols, cur, used, out);
                cur.pop();
                used[a] = false;
            }
        }
    }
    rec(&cols, &mut cur, &mut used, &mut out);
    out
}

/// Parking functions of `n` cars with their encodings, streamed per `λ ⊆ δ_n`.
pub fn parking_functions_with_strip(n: usize) -> impl Iterator<Item = (FlagStrip, Filling)> {
    crate::shapes::sub_staircase_iter(n, 1).flat_map(move |lambda| {
        let strip = FlagStrip::new(&lambda, n, 1).expect("inside δ_n");
        let shape = strip.shape();
        standard_labelings(&strip).into_iter().map(move |labels| {
            let t = Filling::new(shape.clone(), labels.iter().map(|&a| Letter::pos(a)).collect()).expect("n cells");
            (strip.clone(), t)
        })
    })
}
