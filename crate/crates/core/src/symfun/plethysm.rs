use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::{Basis, SymFunc};
use crate::ring::QtRat;
use crate::shapes::Partition;

/// A plethystic argument `P(q,t,u) + R(q,t,u)·Z`, with `Z = z_1 + z_2 + ⋯`.
#[derive(Clone, Debug, PartialEq)]
pub struct Alphabet {
    pub finite: QtRat,
    pub z_mult: QtRat,
}

impl Alphabet {
    pub fn new(finite: QtRat, z_mult: QtRat) -> Self {
        Alphabet { finite, z_mult }
    }

    /// The finite alphabet read off the monomials of `P`.
    pub fn finite(p: QtRat) -> Self {
        Alphabet { finite: p, z_mult: QtRat::zero() }
    }

    /// `R·Z`.
    pub fn z_times(r: QtRat) -> Self {
        Alphabet { finite: QtRat::zero(), z_mult: r }
    }

    /// `p_k[A] = P(q^k,t^k,u^k) + R(q^k,t^k,u^k) p_k(z)`, as the pair of parts.
    pub fn p_k(&self, k: usize) -> (QtRat, QtRat) {
        (self.finite.frobenius(k as i32), self.z_mult.frobenius(k as i32))
    }
}

/// Outcome of a plethystic evaluation.
#[derive(Clone, Debug, PartialEq)]
pub enum PlethysmResult {
    /// The alphabet had no `Z` part.
    Scalar(QtRat),
    /// The alphabet had no finite part; the result is homogeneous in `z`.
    Symmetric(SymFunc),
    /// Both parts present: the homogeneous components in degrees `0..=n`.
    Mixed(Vec<SymFunc>),
}

impl PlethysmResult {
    pub fn as_scalar(&self) -> Option<&QtRat> {
        match self {
            PlethysmResult::Scalar(c) => Some(c),
            _ => None,
        }
    }

    pub fn as_symmetric(&self) -> Option<&SymFunc> {
        match self {
            PlethysmResult::Symmetric(f) => Some(f),
            _ => None,
        }
    }

    pub fn into_symmetric(self) -> Option<SymFunc> {
        match self {
            PlethysmResult::Symmetric(f) => Some(f),
            _ => None,
        }
    }

    /// The homogeneous component of degree `d` (in `p` basis when symmetric).
    pub fn component(&self, d: usize) -> SymFunc {
        match self {
            PlethysmResult::Scalar(c) if d == 0 => SymFunc::scalar(c.clone()),
            PlethysmResult::Scalar(_) => SymFunc::zero(d, Basis::P),
            PlethysmResult::Symmetric(f) if f.degree() == d => f.clone(),
            PlethysmResult::Symmetric(_) => SymFunc::zero(d, Basis::P),
            PlethysmResult::Mixed(v) => v.get(d).cloned().unwrap_or_else(|| SymFunc::zero(d, Basis::P)),
        }
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// `f[A]`: expand `f` in power sums and substitute `p_k ↦ p_k[A]`.
///
/// Symmetric results are returned in the `p` basis.
pub fn plethysm_eval(f: &SymFunc, a: &Alphabet) -> PlethysmResult {
    let n = f.degree();
    let fp = f.convert(Basis::P);
    let pk: Vec<(QtRat, QtRat)> = (0..=n).map(|k| if k == 0 { (QtRat::zero(), QtRat::zero()) } else { a.p_k(k) }).collect();
    let mut out: Vec<BTreeMap<Partition, QtRat>> = vec![BTreeMap::new(); n + 1];
    for (lambda, c) in fp.terms() {
        // group equal parts: (part, multiplicity)
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &x in lambda.parts() {
            match groups.last_mut() {
                Some((y, r)) if *y == x => *r += 1,
                _ => groups.push((x, 1)),
            }
        }
        // choose how many copies of each part go to the Z side
        let mut stack: Vec<(usize, QtRat, Vec<usize>)> = vec![(0, c.clone(), Vec::new())];
        while let Some((g, coeff, z_parts)) = stack.pop() {
            if g == groups.len() {
                let mu = Partition::from_unsorted(z_parts);
                let slot = out[mu.size()].entry(mu).or_insert_with(QtRat::zero);
                *slot += &coeff;
                continue;
            }
            let (k, r) = groups[g];
            let (fin, zm) = &pk[k];
            for j in 0..=r {
                if (j < r && fin.is_zero()) || (j > 0 && zm.is_zero()) {
                    continue;
                }
                let w = &(&fin.pow((r - j) as i32) * &zm.pow(j as i32)) * &coeff;
                let w = w.scale_int(&binomial(r, j));
                if w.is_zero() {
                    continue;
                }
                let mut zp = z_parts.clone();
                zp.extend(std::iter::repeat(k).take(j));
                stack.push((g + 1, w, zp));
            }
        }
    }
    let mut comps: Vec<SymFunc> = out
        .into_iter()
        .enumerate()
        .map(|(d, terms)| SymFunc::from_terms(d, Basis::P, terms).expect("sizes agree"))
        .collect();
    if a.z_mult.is_zero() {
        return PlethysmResult::Scalar(comps[0].coeff(&Partition::empty()));
    }
    if a.finite.is_zero() {
        return PlethysmResult::Symmetric(comps.pop().expect("degree n component"));
    }
    PlethysmResult::Mixed(comps)
}
