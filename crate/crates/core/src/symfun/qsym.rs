use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{Basis, SymFunc};
use crate::ring::QtRat;
use crate::shapes::{compositions, Partition};
use crate::{Error, Result};

/// `f = Σ_D c_D Q_{n,D}` with `D ⊆ {1, …, n-1}`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct QsymCoeffs {
    pub degree: usize,
    pub coeffs: BTreeMap<BTreeSet<usize>, QtRat>,
}

impl QsymCoeffs {
    pub fn new(degree: usize) -> Self {
        QsymCoeffs { degree, coeffs: BTreeMap::new() }
    }

    /// Add `c` to the coefficient of `Q_{n,D}`.
    pub fn add(&mut self, d: BTreeSet<usize>, c: &QtRat) -> Result<()> {
        if let Some(&bad) = d.iter().find(|&&i| i == 0 || i >= self.degree) {
            return Err(Error::Input(format!("{bad} is not in 1..{}", self.degree)));
        }
        let slot = self.coeffs.entry(d.clone()).or_insert_with(QtRat::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&d);
        }
        Ok(())
    }

    /// Coefficient of the monomial `z^α` for a composition `α`: the sum of
    /// `c_D` over `D ⊆ S(α)`.
    pub fn monomial_coeff(&self, alpha: &[usize]) -> QtRat {
        let s = partial_sums(alpha);
        self.coeffs
            .iter()
            .filter(|(d, _)| d.is_subset(&s))
            .map(|(_, c)| c.clone())
            .sum()
    }
}

/// `S(α) = {α_1, α_1+α_2, …}` without the final total.
fn partial_sums(alpha: &[usize]) -> BTreeSet<usize> {
    let mut acc = 0;
    let mut s = BTreeSet::new();
    for &a in &alpha[..alpha.len().saturating_sub(1)] {
        acc += a;
        s.insert(acc);
    }
    s
}

/// The symmetric function `Σ c_D Q_{n,D}` in the monomial basis, or a
/// `NotSymmetric` witness pair of compositions with different coefficients.
pub fn qsym_to_sym(c: &QsymCoeffs) -> Result<SymFunc> {
    let n = c.degree;
    let mut seen: HashMap<Partition, (Vec<usize>, QtRat)> = HashMap::new();
    for alpha in compositions(n) {
        let v = c.monomial_coeff(&alpha);
        let lambda = Partition::from_unsorted(alpha.clone());
        match seen.get(&lambda) {
            None => {
                seen.insert(lambda, (alpha, v));
            }
            Some((first, w)) => {
                if *w != v {
                    return Err(Error::NotSymmetric {
                        left: first.clone(),
                        right: alpha,
                        left_coeff: w.to_string(),
                        right_coeff: v.to_string(),
                    });
                }
            }
        }
    }
    SymFunc::from_terms(n, Basis::M, seen.into_iter().map(|(l, (_, v))| (l, v)))
}

/// `⟨f, e_η h_μ⟩`, the coefficient of `z^μ w^η` in the superization of `f`.
/// Compositions are accepted; only their multisets of parts matter.
pub fn superize_coeff(f: &SymFunc, mu: &[usize], eta: &[usize]) -> Result<QtRat> {
    let k: usize = mu.iter().sum::<usize>() + eta.iter().sum::<usize>();
    if k != f.degree() {
        return Err(Error::Input(format!("content of size {k} against degree {}", f.degree())));
    }
    let fm = f.convert(Basis::M);
    Ok(pairing_table(&fm, &Partition::from_unsorted(mu.to_vec()), &Partition::from_unsorted(eta.to_vec())))
}

fn pairing_table(fm: &SymFunc, mu: &Partition, eta: &Partition) -> QtRat {
    let eh = SymFunc::basis_elem(Basis::E, eta.clone()).convert(Basis::H);
    eh.terms()
        .map(|(l, c)| {
            let mut parts = l.parts().to_vec();
            parts.extend_from_slice(mu.parts());
            c * &fm.coeff(&Partition::from_unsorted(parts))
        })
        .sum()
}

/// `⟨f, e_η h_μ⟩` for every pair of partitions with `|μ| + |η| = deg f`.
pub fn superize_coeffs(f: &SymFunc) -> BTreeMap<(Partition, Partition), QtRat> {
    let n = f.degree();
    let fm = f.convert(Basis::M);
    let mut out = BTreeMap::new();
    for k in 0..=n {
        for mu in Partition::all(k) {
            for eta in Partition::all(n - k) {
                let v = pairing_table(&fm, &mu, &eta);
                out.insert((mu.clone(), eta), v);
            }
        }
    }
    out
}
