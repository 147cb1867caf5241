//! Symmetric functions over `ℚ(q,t,u)` in the classical bases.

mod plethysm;
mod qsym;
mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::ring::{QtPoly, QtRat};
use crate::shapes::{enumerate_fillings, Partition, SkewShape};
use crate::{Error, Result};

pub use plethysm::{plethysm_eval, Alphabet, PlethysmResult};
pub use qsym::{qsym_to_sym, superize_coeff, superize_coeffs, QsymCoeffs};
pub use tables::invert;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    M = 0,
    E = 1,
    H = 2,
    P = 3,
    S = 4,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::S => 's',
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

/// A homogeneous symmetric function `Σ c_λ b_λ` with `|λ| = degree`.
#[derive(Clone)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, QtRat>,
}

fn scale_rat(x: &QtRat, r: &BigRational) -> QtRat {
    if r.is_one() {
        return x.clone();
    }
    if r.denom().is_one() {
        return x.scale_int(r.numer());
    }
    x * &QtRat::from_bigrational(r)
}

impl SymFunc {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFunc { degree, basis, coeffs: BTreeMap::new() }
    }

    /// The constant `c` in degree 0.
    pub fn scalar(c: QtRat) -> Self {
        let mut f = Self::zero(0, Basis::S);
        f.add_term(Partition::empty(), c);
        f
    }

    /// A single basis element `b_λ`.
    pub fn basis_elem(basis: Basis, lambda: Partition) -> Self {
        let mut f = Self::zero(lambda.size(), basis);
        f.coeffs.insert(lambda, QtRat::one());
        f
    }

    fn elem(basis: Basis, parts: &[usize]) -> Self {
        Self::basis_elem(basis, Partition::from_unsorted(parts.to_vec()))
    }

    pub fn s(parts: &[usize]) -> Self {
        Self::elem(Basis::S, parts)
    }

    pub fn e(parts: &[usize]) -> Self {
        Self::elem(Basis::E, parts)
    }

    pub fn h(parts: &[usize]) -> Self {
        Self::elem(Basis::H, parts)
    }

    pub fn m(parts: &[usize]) -> Self {
        Self::elem(Basis::M, parts)
    }

    pub fn p(parts: &[usize]) -> Self {
        Self::elem(Basis::P, parts)
    }

    pub fn from_terms<I>(degree: usize, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, QtRat)>,
    {
        let mut f = Self::zero(degree, basis);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::Input(format!("{lambda} is not a partition of {degree}")));
            }
            f.add_term(lambda, c);
        }
        Ok(f)
    }

    fn add_term(&mut self, lambda: Partition, c: QtRat) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, lambda: &Partition) -> QtRat {
        self.coeffs.get(lambda).cloned().unwrap_or_else(QtRat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QtRat)> {
        self.coeffs.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Partition, QtRat)> {
        self.coeffs.into_iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients in the monomial basis, indexed like `Partition::all(degree)`.
    fn m_vector(&self) -> Vec<QtRat> {
        let tab = tables::tables(self.degree);
        let mut out = vec![QtRat::zero(); tab.parts.len()];
        if self.basis == Basis::M {
            for (l, c) in &self.coeffs {
                out[tab.index[l]] = c.clone();
            }
            return out;
        }
        let mat = tab.to_m(self.basis);
        for (l, c) in &self.coeffs {
            for (j, r) in mat[tab.index[l]].iter().enumerate() {
                if !r.is_zero() {
                    out[j] += &scale_rat(c, r);
                }
            }
        }
        out
    }

    fn from_m_vector(degree: usize, v: &[QtRat], target: Basis) -> Self {
        let tab = tables::tables(degree);
        let mut f = Self::zero(degree, target);
        if target == Basis::M {
            for (i, c) in v.iter().enumerate() {
                f.add_term(tab.parts[i].clone(), c.clone());
            }
            return f;
        }
        let inv = tab.from_m(target);
        let mut out = vec![QtRat::zero(); tab.parts.len()];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, r) in inv[i].iter().enumerate() {
                if !r.is_zero() {
                    out[j] += &scale_rat(c, r);
                }
            }
        }
        for (j, c) in out.into_iter().enumerate() {
            f.add_term(tab.parts[j].clone(), c);
        }
        f
    }

    /// The same function expressed in `target`.
    pub fn convert(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        Self::from_m_vector(self.degree, &self.m_vector(), target)
    }

    pub fn scale(&self, c: &QtRat) -> Self {
        let mut f = Self::zero(self.degree, self.basis);
        if c.is_zero() {
            return f;
        }
        for (l, x) in &self.coeffs {
            f.add_term(l.clone(), x * c);
        }
        f
    }

    /// Apply `g` to every coefficient.
    pub fn map_coeffs(&self, g: impl Fn(&QtRat) -> QtRat) -> Self {
        let mut f = Self::zero(self.degree, self.basis);
        for (l, x) in &self.coeffs {
            f.add_term(l.clone(), g(x));
        }
        f
    }

    /// Fallible coefficient map, e.g. a specialization `t = 0`.
    pub fn try_map_coeffs(&self, g: impl Fn(&QtRat) -> Result<QtRat>) -> Result<Self> {
        let mut f = Self::zero(self.degree, self.basis);
        for (l, x) in &self.coeffs {
            f.add_term(l.clone(), g(x)?);
        }
        Ok(f)
    }

    /// Degree-checked sum. The result uses the basis of `self`.
    pub fn checked_add(&self, other: &SymFunc) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::Input(format!(
                "adding degree {} to degree {}",
                self.degree, other.degree
            )));
        }
        let mut f = self.clone();
        for (l, c) in other.convert(self.basis).coeffs {
            f.add_term(l, c);
        }
        Ok(f)
    }

    /// Product, computed multiplicatively in the `h` basis and returned in the
    /// basis of `self`.
    pub fn product(&self, other: &SymFunc) -> Self {
        let (a, b) = (self.convert(Basis::H), other.convert(Basis::H));
        let mut f = Self::zero(self.degree + other.degree, Basis::H);
        for (la, ca) in &a.coeffs {
            for (lb, cb) in &b.coeffs {
                let mut parts = la.parts().to_vec();
                parts.extend_from_slice(lb.parts());
                f.add_term(Partition::from_unsorted(parts), ca * cb);
            }
        }
        f.convert(self.basis)
    }

    /// Exact equality as symmetric functions, regardless of basis.
    pub fn same_as(&self, other: &SymFunc) -> bool {
        if self.degree != other.degree {
            return self.is_zero() && other.is_zero();
        }
        let b = other.convert(self.basis);
        self.coeffs.len() == b.coeffs.len()
            && self.coeffs.iter().zip(&b.coeffs).all(|((l1, c1), (l2, c2))| l1 == l2 && c1 == c2)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("symmetric functions serialize")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let tab = tables::tables(self.degree);
        let mut terms: Vec<_> = self.coeffs.iter().collect();
        terms.sort_by_key(|(l, _)| tab.index[*l]);
        for (k, (l, c)) in terms.into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let parts: Vec<String> = l.parts().iter().map(|x| x.to_string()).collect();
            let elem = format!("{}[{}]", self.basis.letter(), parts.join(","));
            if c.is_one() {
                write!(f, "{elem}")?;
            } else {
                write!(f, "({c})*{elem}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    degree: usize,
    basis: Basis,
    terms: Vec<TermJson>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson {
            degree: self.degree,
            basis: self.basis,
            terms: self
                .coeffs
                .iter()
                .map(|(l, c)| TermJson { partition: l.clone(), coeff: c.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SymFuncJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            let c: QtRat = t.coeff.parse().map_err(serde::de::Error::custom)?;
            terms.push((t.partition, c));
        }
        SymFunc::from_terms(j.degree, j.basis, terms).map_err(serde::de::Error::custom)
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    /// Panics on a degree mismatch; see [`SymFunc::checked_add`].
    fn add(self, rhs: &SymFunc) -> SymFunc {
        self.checked_add(rhs).expect("degree mismatch in symmetric function sum")
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.map_coeffs(|c| -c)
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        self.product(rhs)
    }
}

/// The elementary symmetric function `e_n`.
pub fn e_n(n: usize) -> SymFunc {
    SymFunc::basis_elem(Basis::E, Partition::row(n))
}

/// The complete homogeneous symmetric function `h_n`.
pub fn h_n(n: usize) -> SymFunc {
    SymFunc::basis_elem(Basis::H, Partition::row(n))
}

/// `convert_basis` as a free function.
pub fn convert_basis(f: &SymFunc, target: Basis) -> SymFunc {
    f.convert(target)
}

fn check_degrees(f: &SymFunc, g: &SymFunc) -> Result<()> {
    if f.degree != g.degree {
        return Err(Error::Input(format!(
            "inner product of degrees {} and {}",
            f.degree, g.degree
        )));
    }
    Ok(())
}

/// Hall inner product through the dual pair `⟨h_λ, m_μ⟩ = δ_{λμ}`.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> Result<QtRat> {
    check_degrees(f, g)?;
    let fh = f.convert(Basis::H);
    let gm = g.convert(Basis::M);
    Ok(fh.coeffs.iter().map(|(l, c)| c * &gm.coeff(l)).sum())
}

/// Hall inner product through orthonormality of Schur functions.
pub fn hall_inner_schur(f: &SymFunc, g: &SymFunc) -> Result<QtRat> {
    check_degrees(f, g)?;
    let fs = f.convert(Basis::S);
    let gs = g.convert(Basis::S);
    Ok(fs.coeffs.iter().map(|(l, c)| c * &gs.coeff(l)).sum())
}

/// `ω`, exchanging `e_λ` and `h_λ`.
pub fn omega(f: &SymFunc) -> SymFunc {
    let relabel = |src: &SymFunc, b: Basis| SymFunc {
        degree: src.degree,
        basis: b,
        coeffs: src.coeffs.clone(),
    };
    match f.basis {
        Basis::E => relabel(f, Basis::H),
        Basis::H => relabel(f, Basis::E),
        Basis::S => SymFunc {
            degree: f.degree,
            basis: Basis::S,
            coeffs: f.coeffs.iter().map(|(l, c)| (l.conjugate(), c.clone())).collect(),
        },
        Basis::P => SymFunc {
            degree: f.degree,
            basis: Basis::P,
            coeffs: f
                .coeffs
                .iter()
                .map(|(l, c)| {
                    let c = if (l.size() - l.len()) % 2 == 1 { -c } else { c.clone() };
                    (l.clone(), c)
                })
                .collect(),
        },
        Basis::M => relabel(&f.convert(Basis::H), Basis::E).convert(Basis::M),
    }
}

/// `omega` under the name used for the operation.
pub fn omega_involution(f: &SymFunc) -> SymFunc {
    omega(f)
}

/// Tableau generating function of a skew shape, in the monomial basis.
pub fn skew_schur(shape: &SkewShape) -> SymFunc {
    let n = shape.size();
    let mut f = SymFunc::zero(n, Basis::M);
    for mu in Partition::all(n) {
        let k = enumerate_fillings(shape, mu.parts(), &[]).expect("sizes agree").count();
        f.add_term(mu, QtRat::from_int(k));
    }
    f
}

/// `s_λ[1/(1-t)] = t^{n(λ)} / Π_x (1 - t^{h(x)})` by the hook-content formula.
pub fn principal_specialization(lambda: &Partition) -> QtRat {
    let mut den = QtPoly::one();
    for x in lambda.cells() {
        let (a, l) = lambda.arm_leg(x).expect("cell of the shape");
        den = &den * &(&QtPoly::one() - &QtPoly::qtu(0, (a + l + 1) as i32, 0));
    }
    let num = QtPoly::qtu(0, lambda.n_stat() as i32, 0);
    QtRat::new(num, den).expect("nonzero hook product")
}
