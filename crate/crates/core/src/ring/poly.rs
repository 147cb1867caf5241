use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent vector `(e_q, e_t, e_u)`. Ordered lexicographically.
pub type Mono = [i32; 3];

pub const Q: usize = 0;
pub const T: usize = 1;
pub const U: usize = 2;

const VAR_NAMES: [&str; 3] = ["q", "t", "u"];

/// Laurent polynomial in `q, t, u` with arbitrary-precision integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QtPoly {
    terms: BTreeMap<Mono, BigInt>,
}

impl QtPoly {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn monomial(c: impl Into<BigInt>, e: Mono) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::monomial(1, [1, 0, 0])
    }

    pub fn t() -> Self {
        Self::monomial(1, [0, 1, 0])
    }

    pub fn u() -> Self {
        Self::monomial(1, [0, 0, 1])
    }

    /// `q^a t^b u^c`
    pub fn qtu(a: i32, b: i32, c: i32) -> Self {
        Self::monomial(1, [a, b, c])
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I, C>(it: I) -> Self
    where
        I: IntoIterator<Item = (Mono, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c.into());
        }
        p
    }

    /// Univariate polynomial in `q` from a coefficient list, constant term first.
    pub fn from_q_coeffs<C: Into<BigInt> + Clone>(cs: &[C]) -> Self {
        Self::from_terms(
            cs.iter()
                .enumerate()
                .map(|(k, c)| ([k as i32, 0, 0], c.clone().into())),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0, 0, 0]).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == [0, 0, 0])
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Mono, BigInt)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, e: Mono) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Constant term (coefficient of `q^0 t^0 u^0`).
    pub fn constant_term(&self) -> BigInt {
        self.coeff([0, 0, 0])
    }

    pub fn add_term(&mut self, e: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_term_ref(&mut self, e: Mono, c: &BigInt) {
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Lex-largest term.
    pub fn leading(&self) -> Option<(&Mono, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn max_degree(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn min_degree(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[var]).min()
    }

    /// Componentwise minimum exponent (the largest monomial dividing every term).
    pub fn min_exponents(&self) -> Mono {
        let mut m = [i32::MAX; 3];
        for e in self.terms.keys() {
            for v in 0..3 {
                m[v] = m[v].min(e[v]);
            }
        }
        if self.is_zero() {
            [0, 0, 0]
        } else {
            m
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Multiply by `c * x^e`.
    pub fn mul_monomial(&self, c: &BigInt, e: Mono) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| ([k[0] + e[0], k[1] + e[1], k[2] + e[2]], v * c))
                .collect(),
        }
    }

    /// Multiply by `x^e`.
    pub fn shift(&self, e: Mono) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| ([k[0] + e[0], k[1] + e[1], k[2] + e[2]], v.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Divide every coefficient by `c`; `None` unless all divide exactly.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            let (d, r) = v.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            terms.insert(*k, d);
        }
        Some(Self { terms })
    }

    /// Gcd of the integer coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for v in self.terms.values() {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Apply an exponent map termwise. Colliding images are summed.
    pub fn map_exponents(&self, f: impl Fn(Mono) -> Mono) -> Self {
        let mut p = Self::zero();
        for (e, c) in &self.terms {
            p.add_term_ref(f(*e), c);
        }
        p
    }

    /// `p(q^k, t^k, u^k)`: the power-sum substitution used by plethysm.
    pub fn frobenius(&self, k: i32) -> Self {
        self.map_exponents(|e| [e[0] * k, e[1] * k, e[2] * k])
    }

    /// Exchange the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        self.map_exponents(|e| [e[1], e[0], e[2]])
    }

    /// Substitute `var := 0`. Fails on a negative power of `var`.
    pub fn subs_zero(&self, var: usize) -> crate::Result<Self> {
        let mut p = Self::zero();
        for (e, c) in &self.terms {
            if e[var] < 0 {
                return Err(crate::Error::Arithmetic(format!(
                    "{} = 0 in a Laurent term with negative exponent",
                    VAR_NAMES[var]
                )));
            }
            if e[var] == 0 {
                p.add_term_ref(*e, c);
            }
        }
        Ok(p)
    }

    /// Substitute `var := x^img` for a Laurent monomial `x^img` (coefficient 1).
    /// Covers `q = 1`, `t = q^-1`, `q = t` and similar.
    pub fn subs_monomial(&self, var: usize, img: Mono) -> Self {
        self.map_exponents(|e| {
            let k = e[var];
            let mut out = e;
            out[var] = 0;
            for v in 0..3 {
                out[v] += k * img[v];
            }
            out
        })
    }

    /// Substitute `var := p` for an arbitrary polynomial `p`. Negative powers of
    /// `var` require `p` to be a monomial with unit coefficient.
    pub fn subs_poly(&self, var: usize, img: &QtPoly) -> crate::Result<Self> {
        if img.is_monomial() {
            let (e, c) = img.leading().unwrap();
            if c.is_one() {
                return Ok(self.subs_monomial(var, *e));
            }
        }
        let mut by_power: BTreeMap<i32, QtPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[var] = 0;
            by_power.entry(e[var]).or_default().add_term_ref(rest, c);
        }
        let mut out = Self::zero();
        for (k, coeff) in by_power {
            if k < 0 {
                if img.is_monomial() {
                    let (e, c) = img.leading().unwrap();
                    if c.abs().is_one() {
                        let sign = if c.is_negative() && k % 2 != 0 { -1 } else { 1 };
                        let shifted = coeff
                            .shift([e[0] * k, e[1] * k, e[2] * k])
                            .scale(&BigInt::from(sign));
                        out += &shifted;
                        continue;
                    }
                }
                return Err(crate::Error::Arithmetic(format!(
                    "negative power of {} under a non-invertible substitution",
                    VAR_NAMES[var]
                )));
            }
            out += &(&coeff * &img.pow(k as u32));
        }
        Ok(out)
    }

    /// Integer value at `q = t = u = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact rational value at integer points. Negative exponents are allowed
    /// provided the corresponding point is nonzero.
    pub fn eval(&self, pt: [&BigInt; 3]) -> num_rational::BigRational {
        use num_rational::BigRational;
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for v in 0..3 {
                if e[v] != 0 {
                    let b = BigRational::from_integer(pt[v].clone());
                    term *= num_traits::pow::Pow::pow(&b, e[v]);
                }
            }
            acc += term;
        }
        acc
    }

    /// Exact division. `None` when `d` does not divide `self` in the Laurent ring.
    pub fn div_exact(&self, d: &QtPoly) -> Option<QtPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            let (e, c) = d.leading().unwrap();
            return self
                .div_scalar_exact(c)
                .map(|p| p.shift([-e[0], -e[1], -e[2]]));
        }
        // Normalise both to genuine polynomials with no monomial factor, then run
        // lex division; monomials are units so they are reattached at the end.
        let ma = self.min_exponents();
        let md = d.min_exponents();
        let a = self.shift([-ma[0], -ma[1], -ma[2]]);
        let dd = d.shift([-md[0], -md[1], -md[2]]);
        let q = div_exact_poly(&a, &dd)?;
        Some(q.shift([ma[0] - md[0], ma[1] - md[1], ma[2] - md[2]]))
    }
}

/// Lex-order exact division of polynomials with nonnegative exponents.
fn div_exact_poly(a: &QtPoly, d: &QtPoly) -> Option<QtPoly> {
    let (ld, lc) = d.leading().map(|(e, c)| (*e, c.clone()))?;
    let mut r = a.clone();
    let mut q = QtPoly::zero();
    let rest: Vec<(Mono, BigInt)> = d
        .terms
        .iter()
        .filter(|(e, _)| **e != ld)
        .map(|(e, c)| (*e, c.clone()))
        .collect();
    while let Some((lr, cr)) = r.leading().map(|(e, c)| (*e, c.clone())) {
        let e = [lr[0] - ld[0], lr[1] - ld[1], lr[2] - ld[2]];
        if e.iter().any(|&x| x < 0) {
            return None;
        }
        let (c, rem) = cr.div_rem(&lc);
        if !rem.is_zero() {
            return None;
        }
        r.terms.remove(&lr);
        for (de, dc) in &rest {
            let k = [de[0] + e[0], de[1] + e[1], de[2] + e[2]];
            r.add_term(k, -(dc * &c));
        }
        q.terms.insert(e, c);
    }
    Some(q)
}

impl From<i64> for QtPoly {
    fn from(c: i64) -> Self {
        QtPoly::constant(c)
    }
}

impl From<BigInt> for QtPoly {
    fn from(c: BigInt) -> Self {
        QtPoly::constant(c)
    }
}

impl Neg for &QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        QtPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl Neg for QtPoly {
    type Output = QtPoly;
    fn neg(mut self) -> QtPoly {
        for v in self.terms.values_mut() {
            *v = -std::mem::take(v);
        }
        self
    }
}

impl AddAssign<&QtPoly> for QtPoly {
    fn add_assign(&mut self, rhs: &QtPoly) {
        for (e, c) in &rhs.terms {
            self.add_term_ref(*e, c);
        }
    }
}

impl SubAssign<&QtPoly> for QtPoly {
    fn sub_assign(&mut self, rhs: &QtPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl MulAssign<&QtPoly> for QtPoly {
    fn mul_assign(&mut self, rhs: &QtPoly) {
        *self = &*self * rhs;
    }
}

impl Add for &QtPoly {
    type Output = QtPoly;
    fn add(self, rhs: &QtPoly) -> QtPoly {
        if self.terms.len() >= rhs.terms.len() {
            let mut out = self.clone();
            out += rhs;
            out
        } else {
            let mut out = rhs.clone();
            out += self;
            out
        }
    }
}

impl Sub for &QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: &QtPoly) -> QtPoly {
        if self.is_zero() || rhs.is_zero() {
            return QtPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = rhs.leading().unwrap();
            return self.mul_monomial(c, *e);
        }
        if self.terms.len() == 1 {
            let (e, c) = self.leading().unwrap();
            return rhs.mul_monomial(c, *e);
        }
        let mut acc: std::collections::HashMap<Mono, BigInt> =
            std::collections::HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                *acc.entry(e).or_default() += ca * cb;
            }
        }
        QtPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QtPoly> for QtPoly {
            type Output = QtPoly;
            fn $m(self, rhs: QtPoly) -> QtPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QtPoly> for QtPoly {
            type Output = QtPoly;
            fn $m(self, rhs: &QtPoly) -> QtPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<QtPoly> for &QtPoly {
            type Output = QtPoly;
            fn $m(self, rhs: QtPoly) -> QtPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for QtPoly {
    fn sum<I: Iterator<Item = QtPoly>>(iter: I) -> Self {
        let mut acc = QtPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for QtPoly {
    fn product<I: Iterator<Item = QtPoly>>(iter: I) -> Self {
        let mut acc = QtPoly::one();
        for p in iter {
            acc = &acc * &p;
        }
        acc
    }
}

fn write_monomial(f: &mut String, e: &Mono) -> bool {
    let mut wrote = false;
    for v in 0..3 {
        if e[v] == 0 {
            continue;
        }
        if wrote {
            f.push('*');
        }
        f.push_str(VAR_NAMES[v]);
        if e[v] != 1 {
            f.push('^');
            f.push_str(&e[v].to_string());
        }
        wrote = true;
    }
    wrote
}

/// Canonical rendering `c*q^a*t^b*u^c + ...`, terms in decreasing lex order.
impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if *e == [0, 0, 0] {
                s.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    s.push_str(&a.to_string());
                    s.push('*');
                }
                write_monomial(&mut s, e);
            }
        }
        f.write_str(&s)
    }
}

impl fmt::Debug for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
