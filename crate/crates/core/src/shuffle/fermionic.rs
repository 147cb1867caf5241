use std::ops::Range;

use super::parking::{is_permutation, is_shuffle, ShuffleSpec};
use super::strip::FlagStrip;
use crate::ring::{binom2, q_binomial, QtPoly};
use crate::shapes::{diag, Filling};
use crate::{Error, Result};

/// Every symbol of the fermionic formula for one permutation `σ` and
/// content `(μ, η)`. Positions are 1-based as in one-line notation;
/// run and block indices are 0-based.
#[derive(Clone, Debug)]
pub struct FermionicData {
    pub sigma: Vec<usize>,
    /// Maximal increasing runs `A_j`, as value lists in σ order.
    pub runs: Vec<Vec<usize>>,
    /// Descent positions `r_1 < … < r_{k-1}`.
    pub descents: Vec<usize>,
    /// Value ranges `B_j` and `C_j`.
    pub b_blocks: Vec<Range<usize>>,
    pub c_blocks: Vec<Range<usize>>,
    /// `b[i][j] = |A_i ∩ B_j|`, `c[i][j] = |A_i ∩ C_j|`.
    pub b: Vec<Vec<usize>>,
    pub c: Vec<Vec<usize>>,
    /// `V_{i,j}` and `W_{i,j}`; `None` when the intersection is empty.
    pub v_bound: Vec<Vec<Option<usize>>>,
    pub w_bound: Vec<Vec<Option<usize>>>,
    /// `v(σ, k)` for positions `k = 1..n` (index `k-1`; `v(σ,1) = 0`).
    pub v: Vec<usize>,
    pub comaj: usize,
    /// `σ̃`: σ with every block `A_i ∩ C_j` reversed.
    pub sigma_tilde: Vec<usize>,
}

/// `v(σ, k)`: the largest `p < k` with `σ_{k-p}, …, σ_k` a rotation of an
/// increasing sequence; 0 for `k = 1`.
pub fn v_stat(sigma: &[usize], k: usize) -> usize {
    let n = sigma.len() as i64;
    let s = sigma[k - 1] as i64;
    let key = |pos: usize| (sigma[pos - 1] as i64 - s).rem_euclid(n);
    let mut p = 0;
    while p + 1 < k {
        let next = k - p - 1;
        if p > 0 && key(next) >= key(next + 1) {
            break;
        }
        p += 1;
    }
    p
}

impl FermionicData {
    pub fn new(sigma: &[usize], mu: &[usize], eta: &[usize]) -> Result<Self> {
        let n = sigma.len();
        if !is_permutation(sigma) {
            return Err(Error::Input(format!("{sigma:?} is not a permutation")));
        }
        let total: usize = mu.iter().sum::<usize>() + eta.iter().sum::<usize>();
        if total != n {
            return Err(Error::Input(format!("|μ|+|η| = {total} but σ has length {n}")));
        }
        let descents: Vec<usize> = (1..n).filter(|&i| sigma[i - 1] > sigma[i]).collect();
        let mut runs = Vec::new();
        let mut start = 0;
        for &r in descents.iter().chain(std::iter::once(&n)) {
            runs.push(sigma[start..r].to_vec());
            start = r;
        }
        let r1 = descents.first().copied().unwrap_or(n);
        let comaj = descents.iter().map(|r| n - r).sum();
        let v: Vec<usize> = (1..=n).map(|k| v_stat(sigma, k)).collect();
        let len = mu.len().max(eta.len());
        let (mut b_blocks, mut c_blocks) = (Vec::new(), Vec::new());
        let mut at = 1;
        for j in 0..len {
            let a = mu.get(j).copied().unwrap_or(0);
            b_blocks.push(at..at + a);
            at += a;
            let e = eta.get(j).copied().unwrap_or(0);
            c_blocks.push(at..at + e);
            at += e;
        }
        let mut pos = vec![0; n + 1];
        for (k, &a) in sigma.iter().enumerate() {
            pos[a] = k + 1;
        }
        let bound = |run: &[usize], block: &Range<usize>| -> (usize, Option<usize>) {
            let inside: Vec<usize> = run.iter().copied().filter(|a| block.contains(a)).collect();
            let top = inside.iter().max().map(|&a| {
                let k = pos[a];
                v[k - 1] + usize::from(k <= r1)
            });
            (inside.len(), top)
        };
        let mut b = vec![vec![0; len]; runs.len()];
        let mut c = vec![vec![0; len]; runs.len()];
        let mut v_bound = vec![vec![None; len]; runs.len()];
        let mut w_bound = vec![vec![None; len]; runs.len()];
        for (i, run) in runs.iter().enumerate() {
            for j in 0..len {
                (b[i][j], v_bound[i][j]) = bound(run, &b_blocks[j]);
                (c[i][j], w_bound[i][j]) = bound(run, &c_blocks[j]);
            }
        }
        // reversing A_i ∩ C_j: within a run these values occupy adjacent positions
        let mut sigma_tilde = sigma.to_vec();
        let mut k = 0;
        while k < n {
            let blk = c_blocks.iter().position(|r| r.contains(&sigma[k]));
            let mut e = k + 1;
            if let Some(bi) = blk {
                while e < n && sigma[e] > sigma[e - 1] && c_blocks[bi].contains(&sigma[e]) {
                    e += 1;
                }
                sigma_tilde[k..e].reverse();
            }
            k = e;
        }
        Ok(FermionicData {
            sigma: sigma.to_vec(),
            runs,
            descents,
            b_blocks,
            c_blocks,
            b,
            c,
            v_bound,
            w_bound,
            v,
            comaj,
            sigma_tilde,
        })
    }

    /// Whether `σ̃` is a μ,η-shuffle, i.e. σ contributes at all.
    pub fn contributes(&self, mu: &[usize], eta: &[usize]) -> bool {
        is_shuffle(&self.sigma_tilde, &ShuffleSpec::new(mu.to_vec(), eta.to_vec()))
    }

    /// `t^{comaj σ} ∏ [V_{i,j} choose b_{i,j}]_q ∏ q^{C(c_{i,j},2)} [W_{i,j} choose c_{i,j}]_q`.
    pub fn summand(&self) -> QtPoly {
        let mut acc = QtPoly::qtu(0, self.comaj as i32, 0);
        for i in 0..self.runs.len() {
            for j in 0..self.b_blocks.len() {
                if let Some(vb) = self.v_bound[i][j] {
                    acc = &acc * &q_binomial(vb, self.b[i][j]);
                }
                if let Some(wb) = self.w_bound[i][j] {
                    let c = self.c[i][j];
                    acc = &acc * &q_binomial(wb, c).shift([binom2(c) as i32, 0, 0]);
                }
            }
        }
        acc
    }
}

/// The fermionic summand of `σ` for content `(μ, η)`; zero unless `σ̃` is a
/// μ,η-shuffle. With `μ = (1^n)`, `η = ∅` this is `H(σ; q, t)`.
pub fn fermionic_h(sigma: &[usize], mu: &[usize], eta: &[usize]) -> Result<QtPoly> {
    let data = FermionicData::new(sigma, mu, eta)?;
    if !data.contributes(mu, eta) {
        return Ok(QtPoly::zero());
    }
    Ok(data.summand())
}

/// `H(σ; q, t) = t^{comaj σ} ∏_{i≥2} [v(σ,i) + χ(i ≤ r_1)]_q`.
pub fn hilbert_summand(sigma: &[usize]) -> Result<QtPoly> {
    let n = sigma.len();
    fermionic_h(sigma, &vec![1; n], &[])
}

/// The permutation `σ` with `f ∈ F(σ)` for the parking function encoded by a
/// standard filling `t`: the entries of each diagonal, from the top diagonal
/// `n-1` down, sorted increasingly. `None` if these blocks are not exactly
/// the runs of the result.
pub fn parking_sigma(t: &Filling) -> Result<Option<Vec<usize>>> {
    let strip = FlagStrip::of_filling(t, 1)?;
    let n = strip.n();
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, l) in t.entries().iter().enumerate() {
        let d = diag(strip.cells()[i], 1);
        blocks[n - 1 - d].push(l.value());
    }
    let mut sigma = Vec::with_capacity(n);
    let mut prev_last: Option<usize> = None;
    for mut b in blocks.into_iter().filter(|b| !b.is_empty()) {
        b.sort_unstable();
        if let Some(p) = prev_last {
            if p < b[0] {
                return Ok(None);
            }
        }
        prev_last = b.last().copied();
        sigma.extend(b);
    }
    Ok(Some(sigma))
}
