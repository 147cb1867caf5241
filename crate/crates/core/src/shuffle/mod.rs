//! The combinatorial side: d-inversions on flag strips, `D_n^{(m)}`, parking
//! functions and shuffles, q,t-Catalan statistics, fermionic products and
//! Schröder paths.

mod fermionic;
mod parking;
mod schroder;
mod strip;

use std::collections::BTreeMap;

use rayon::prelude::*;

pub use fermionic::{fermionic_h, hilbert_summand, parking_sigma, v_stat, FermionicData};
pub use parking::{
    descents, inverse, is_permutation, is_shuffle, parking_functions_with_strip, parking_word,
    reading_word, ParkingFunction, ShuffleSpec,
};
pub use schroder::{schroder_enum, SchroderPath, Step};
pub use strip::{check_sub_staircase, content_classes, FlagStrip};

use crate::ring::{QtPoly, QtRat};
use crate::shapes::{sub_staircase_iter, Filling, Letter, Partition};
use crate::symfun::{Basis, QsymCoeffs, SymFunc};
use crate::{Error, Result};

/// `dinv_m(T)` for a filling of a flag strip.
pub fn dinv(t: &Filling, m: usize) -> Result<usize> {
    Ok(FlagStrip::of_filling(t, m)?.dinv_of(t.entries()))
}

/// `dinv_m(T)` with equal letters scored by the min (positive) or max (negative)
/// of the two unequal alternatives.
pub fn dinv_min_max(t: &Filling, m: usize) -> Result<usize> {
    Ok(FlagStrip::of_filling(t, m)?.dinv_min_max(t.entries()))
}

/// `(e(ν), dinv'_m(T))`.
pub fn reduced_dinv(t: &Filling, m: usize) -> Result<(usize, usize)> {
    let strip = FlagStrip::of_filling(t, m)?;
    let e = strip.e_const();
    let r = strip.reduced_dinv_of(t.entries());
    let full = strip.dinv_of(t.entries());
    if e + r != full {
        return Err(Error::Internal(format!("e(ν) + dinv' = {e} + {r} but dinv = {full}")));
    }
    Ok((e, r))
}

/// `|mδ_n| - |λ|`.
pub fn area(lambda: &Partition, n: usize, m: usize) -> Result<usize> {
    check_sub_staircase(lambda, n, m)?;
    Ok(m * n * (n - 1) / 2 - lambda.size())
}

fn poly_from_counts(counts: &[u64], area: usize) -> QtPoly {
    QtPoly::from_terms(
        counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(d, &c)| ([d as i32, area as i32, 0], c)),
    )
}

/// `Σ_T q^{dinv_m T}` over super tableaux of the strip of `λ` with content `(μ, η)`.
pub fn d_component_coeff(lambda: &Partition, n: usize, m: usize, mu: &[usize], eta: &[usize]) -> Result<QtPoly> {
    let strip = FlagStrip::new(lambda, n, m)?;
    check_content(n, mu, eta)?;
    Ok(poly_from_counts(&strip.tally(&content_classes(mu, eta)), 0))
}

fn check_content(n: usize, mu: &[usize], eta: &[usize]) -> Result<()> {
    let s: usize = mu.iter().sum::<usize>() + eta.iter().sum::<usize>();
    if s != n {
        return Err(Error::Input(format!("content has size {s}, expected {n}")));
    }
    Ok(())
}

fn reversed_composition(mu: &Partition) -> Option<Vec<usize>> {
    let mut r: Vec<usize> = mu.parts().to_vec();
    r.reverse();
    (r != mu.parts()).then_some(r)
}

/// Build a monomial-basis function from per-partition coefficients and check
/// that reversing each content composition leaves its coefficient unchanged.
fn symmetric_from(
    n: usize,
    coeffs: Vec<(Partition, QtPoly)>,
    rearranged: impl Fn(&[usize]) -> QtPoly,
) -> Result<SymFunc> {
    for (mu, c) in &coeffs {
        if let Some(r) = reversed_composition(mu) {
            let other = rearranged(&r);
            if other != *c {
                return Err(Error::NotSymmetric {
                    left: mu.parts().to_vec(),
                    right: r,
                    left_coeff: c.to_string(),
                    right_coeff: other.to_string(),
                });
            }
        }
    }
    SymFunc::from_terms(n, Basis::M, coeffs.into_iter().map(|(l, c)| (l, QtRat::from_poly(c))))
}

/// `D_n^{(m),λ}(z; q)` in the monomial basis.
pub fn d_component(lambda: &Partition, n: usize, m: usize) -> Result<SymFunc> {
    let strip = FlagStrip::new(lambda, n, m)?;
    let coeffs: Vec<(Partition, QtPoly)> = Partition::all(n)
        .into_par_iter()
        .map(|mu| {
            let p = poly_from_counts(&strip.tally(&content_classes(mu.parts(), &[])), 0);
            (mu, p)
        })
        .collect();
    symmetric_from(n, coeffs, |c| poly_from_counts(&strip.tally(&content_classes(c, &[])), 0))
}

/// All `λ ⊆ mδ_n` with their strips.
fn strips(n: usize, m: usize) -> Vec<FlagStrip> {
    sub_staircase_iter(n, m).map(|l| FlagStrip::new(&l, n, m).expect("inside mδ_n")).collect()
}

/// `Σ_λ t^{area} Σ_T q^{dinv}` over a selection of strips, for content `(μ, η)`.
fn weighted_sum(strips: &[FlagStrip], mu: &[usize], eta: &[usize]) -> QtPoly {
    let classes = content_classes(mu, eta);
    let (max_a, max_d) = match strips.first() {
        Some(s) => (s.max_dinv(), s.max_dinv()),
        None => return QtPoly::zero(),
    };
    let grid = strips
        .par_iter()
        .fold(
            || vec![0u64; (max_a + 1) * (max_d + 1)],
            |mut acc, s| {
                let a = s.area();
                for (d, c) in s.tally(&classes).into_iter().enumerate() {
                    acc[a * (max_d + 1) + d] += c;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; (max_a + 1) * (max_d + 1)],
            |mut x, y| {
                for (a, b) in x.iter_mut().zip(y) {
                    *a += b;
                }
                x
            },
        );
    QtPoly::from_terms(
        grid.into_iter()
            .enumerate()
            .filter(|(_, c)| *c > 0)
            .map(|(k, c)| ([(k % (max_d + 1)) as i32, (k / (max_d + 1)) as i32, 0], c)),
    )
}

/// `D_n^{(m)}(z; q, t)` in the monomial basis.
pub fn compute_d(n: usize, m: usize) -> Result<SymFunc> {
    if n == 0 || m == 0 {
        return Err(Error::Input("n and m must be positive".into()));
    }
    let strips = strips(n, m);
    let coeffs: Vec<(Partition, QtPoly)> =
        Partition::all(n).into_iter().map(|mu| (mu.clone(), weighted_sum(&strips, mu.parts(), &[]))).collect();
    symmetric_from(n, coeffs, |c| weighted_sum(&strips, c, &[]))
}

/// `⟨D_n^{(m)}, e_η h_μ⟩` by direct enumeration of super tableaux.
pub fn super_d_coeff(n: usize, m: usize, mu: &[usize], eta: &[usize]) -> Result<QtPoly> {
    if n == 0 || m == 0 {
        return Err(Error::Input("n and m must be positive".into()));
    }
    check_content(n, mu, eta)?;
    Ok(weighted_sum(&strips(n, m), mu, eta))
}

/// `D_n^{(m)}` assembled from standard fillings as `Σ t^{area} q^{dinv} Q_{n,dd(S)}`.
pub fn compute_d_quasisymmetric(n: usize, m: usize) -> Result<SymFunc> {
    if n == 0 || m == 0 {
        return Err(Error::Input("n and m must be positive".into()));
    }
    let strips = strips(n, m);
    let tallies: Vec<(usize, std::collections::HashMap<(usize, u64), u64>)> =
        strips.par_iter().map(|s| (s.area(), s.tally_standard())).collect();
    let mut by_set: BTreeMap<u64, BTreeMap<(usize, usize), u64>> = BTreeMap::new();
    for (a, t) in tallies {
        for ((d, mask), c) in t {
            *by_set.entry(mask).or_default().entry((a, d)).or_insert(0) += c;
        }
    }
    let mut q = QsymCoeffs::new(n);
    for (mask, terms) in by_set {
        let set = (1..n).filter(|&a| mask >> a & 1 == 1).collect();
        let p = QtPoly::from_terms(terms.into_iter().map(|((a, d), c)| ([d as i32, a as i32, 0], c)));
        q.add(set, &QtRat::from_poly(p))?;
    }
    crate::symfun::qsym_to_sym(&q)
}

/// `(b_m(λ), dinv_m of the all-1̄ filling)`.
pub fn catalan_stats(lambda: &Partition, n: usize, m: usize) -> Result<(usize, usize)> {
    let strip = FlagStrip::new(lambda, n, m)?;
    let b = lambda
        .cells()
        .into_iter()
        .filter(|&x| {
            let (a, l) = lambda.arm_leg(x).expect("cell of λ");
            m * l <= a && a <= m * l + m
        })
        .count();
    Ok((b, strip.dinv_of(&vec![Letter::neg(1); n])))
}

/// `C_n^{(m)}(q,t) = Σ_λ t^{area} q^{b_m(λ)}`.
pub fn qt_catalan(n: usize, m: usize) -> Result<QtPoly> {
    if n == 0 || m == 0 {
        return Err(Error::Input("n and m must be positive".into()));
    }
    let lambdas: Vec<Partition> = sub_staircase_iter(n, m).collect();
    let terms: Result<Vec<(usize, usize)>> = lambdas
        .par_iter()
        .map(|l| Ok((catalan_stats(l, n, m)?.0, area(l, n, m)?)))
        .collect();
    Ok(QtPoly::from_terms(terms?.into_iter().map(|(b, a)| ([b as i32, a as i32, 0], 1))))
}

/// `|{i : λ_i = m(n-i)}|` over `i = 1..n`, zero parts included.
pub fn diagonal_touches(lambda: &Partition, n: usize, m: usize) -> usize {
    lambda.padded(n).iter().enumerate().filter(|(i, &p)| p == m * (n - 1 - i)).count()
}

/// `Σ t^{area} D_n^{(m),λ}` over `λ ⊆ mδ_n` touching the diagonal `k` times.
pub fn nabla_enk_rhs(n: usize, k: usize, m: usize) -> Result<SymFunc> {
    if k == 0 || k > n || m == 0 {
        return Err(Error::Input(format!("need 1 <= k <= n and m >= 1, got n={n} k={k} m={m}")));
    }
    let lambdas: Vec<Partition> = sub_staircase_iter(n, m).filter(|l| diagonal_touches(l, n, m) == k).collect();
    let parts: Result<Vec<SymFunc>> = lambdas
        .par_iter()
        .map(|l| {
            let a = area(l, n, m)?;
            Ok(d_component(l, n, m)?.scale(&QtRat::from_poly(QtPoly::qtu(0, a as i32, 0))))
        })
        .collect();
    Ok(parts?.iter().fold(SymFunc::zero(n, Basis::M), |acc, f| &acc + f))
}

/// One row of a q,t-polynomial table.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct PolyRow {
    pub n: usize,
    pub m: usize,
    pub name: String,
    pub polynomial: String,
}

impl PolyRow {
    pub fn new(n: usize, m: usize, name: impl Into<String>, p: &QtPoly) -> Self {
        PolyRow { n, m, name: name.into(), polynomial: p.to_string() }
    }
}

/// CSV with header `n,m,name,polynomial`.
pub fn rows_to_csv(rows: &[PolyRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::Internal(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

/// Parse what [`rows_to_csv`] writes.
pub fn rows_from_csv(s: &str) -> Result<Vec<PolyRow>> {
    let mut r = csv::Reader::from_reader(s.as_bytes());
    r.deserialize().map(|row| row.map_err(|e| Error::Parse(e.to_string()))).collect()
}
