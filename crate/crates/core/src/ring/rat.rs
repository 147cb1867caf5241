use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::poly::{Mono, QtPoly};
use crate::{Error, Result};

/// Rational function `num / den` over the integers in `q, t, u`, kept in
/// canonical form: the denominator has no monomial factor, a positive
/// lex-leading coefficient, and no common factor with the numerator.
#[derive(Clone, Hash, Eq)]
pub struct QtRat {
    num: QtPoly,
    den: QtPoly,
}

impl QtRat {
    pub fn zero() -> Self {
        Self { num: QtPoly::zero(), den: QtPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: QtPoly::one(), den: QtPoly::one() }
    }

    pub fn from_poly(p: QtPoly) -> Self {
        Self { num: p, den: QtPoly::one() }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(QtPoly::constant(c))
    }

    pub fn from_ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Self::new(QtPoly::constant(n), QtPoly::constant(d)).expect("nonzero denominator")
    }

    pub fn from_bigrational(r: &num_rational::BigRational) -> Self {
        Self::new(QtPoly::constant(r.numer().clone()), QtPoly::constant(r.denom().clone()))
            .expect("nonzero denominator")
    }

    /// Build and normalise. Errors on a zero denominator.
    pub fn new(num: QtPoly, den: QtPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Arithmetic("zero denominator".into()));
        }
        Ok(Self::normalized(num, den))
    }

    pub fn num(&self) -> &QtPoly {
        &self.num
    }

    pub fn den(&self) -> &QtPoly {
        &self.den
    }

    pub fn into_parts(self) -> (QtPoly, QtPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&QtPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// Re-canonicalise. Idempotent.
    pub fn normalize(&self) -> Self {
        Self::normalized(self.num.clone(), self.den.clone())
    }

    fn normalized(num: QtPoly, den: QtPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let md = den.min_exponents();
        let (mut num, mut den) = if md == [0, 0, 0] {
            (num, den)
        } else {
            let inv: Mono = [-md[0], -md[1], -md[2]];
            (num.shift(inv), den.shift(inv))
        };
        if den.is_constant() {
            let d = den.constant_term();
            let g = num.content().gcd(&d);
            let mut d = &d / &g;
            if !g.is_one() {
                num = num.div_scalar_exact(&g).unwrap();
            }
            if d.is_negative() {
                num = -num;
                d = -d;
            }
            return Self { num, den: QtPoly::constant(d) };
        }
        if let Some(qt) = num.div_exact(&den) {
            return Self { num: qt, den: QtPoly::one() };
        }
        let g = gcd(&num, &den);
        if !g.is_one() {
            num = num.div_exact(&g).expect("gcd divides numerator");
            den = den.div_exact(&g).expect("gcd divides denominator");
        }
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar_exact(&c).unwrap();
            den = den.div_scalar_exact(&c).unwrap();
        }
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Arithmetic("division by zero".into()));
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &QtRat) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.recip().expect("nonzero base") } else { self.clone() };
        let k = k.unsigned_abs();
        Self { num: base.num.pow(k), den: base.den.pow(k) }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.scale(c));
        }
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn mul_poly(&self, p: &QtPoly) -> Self {
        if self.den.is_one() {
            return Self::from_poly(&self.num * p);
        }
        Self::normalized(&self.num * p, self.den.clone())
    }

    pub fn frobenius(&self, k: i32) -> Self {
        Self::normalized(self.num.frobenius(k), self.den.frobenius(k))
    }

    pub fn swap_qt(&self) -> Self {
        Self::normalized(self.num.swap_qt(), self.den.swap_qt())
    }

    /// Substitute `var := x^img`, a unit Laurent monomial.
    pub fn subs_monomial(&self, var: usize, img: Mono) -> Result<Self> {
        Self::new(self.num.subs_monomial(var, img), self.den.subs_monomial(var, img))
    }

    /// Substitute `var := 0`.
    pub fn subs_zero(&self, var: usize) -> Result<Self> {
        Self::new(self.num.subs_zero(var)?, self.den.subs_zero(var)?)
    }

    /// Substitute `var := img` for an arbitrary rational function `img`.
    pub fn subs(&self, var: usize, img: &QtRat) -> Result<Self> {
        if img.is_zero() {
            return self.subs_zero(var);
        }
        if img.den.is_one() && img.num.is_monomial() {
            let (e, c) = img.num.leading().unwrap();
            if c.is_one() {
                return self.subs_monomial(var, *e);
            }
        }
        Ok(subs_poly_rat(&self.num, var, img)?.checked_div(&subs_poly_rat(&self.den, var, img)?)?)
    }

    /// Exact value at integer points.
    pub fn eval(&self, pt: [&BigInt; 3]) -> Result<num_rational::BigRational> {
        let d = self.den.eval(pt);
        if d.is_zero() {
            return Err(Error::Arithmetic("denominator vanishes at evaluation point".into()));
        }
        Ok(self.num.eval(pt) / d)
    }
}

fn subs_poly_rat(p: &QtPoly, var: usize, img: &QtRat) -> Result<QtRat> {
    let mut acc = QtRat::zero();
    let mut by_power: std::collections::BTreeMap<i32, QtPoly> = Default::default();
    for (e, c) in p.terms() {
        let mut rest = *e;
        rest[var] = 0;
        by_power.entry(e[var]).or_default().add_term(rest, c.clone());
    }
    for (k, coeff) in by_power {
        if k < 0 && img.is_zero() {
            return Err(Error::Arithmetic("negative power of a variable set to zero".into()));
        }
        acc += &img.pow(k).mul_poly(&coeff);
    }
    Ok(acc)
}

impl PartialEq for QtRat {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Default for QtRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<QtPoly> for QtRat {
    fn from(p: QtPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for QtRat {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Neg for &QtRat {
    type Output = QtRat;
    fn neg(self) -> QtRat {
        QtRat { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QtRat {
    type Output = QtRat;
    fn neg(self) -> QtRat {
        QtRat { num: -self.num, den: self.den }
    }
}

impl Add for &QtRat {
    type Output = QtRat;
    fn add(self, rhs: &QtRat) -> QtRat {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return QtRat { num, den: QtPoly::one() };
            }
            return QtRat::normalized(num, self.den.clone());
        }
        if rhs.den.is_one() {
            return QtRat::normalized(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        if self.den.is_one() {
            return QtRat::normalized(&rhs.num + &(&self.num * &rhs.den), rhs.den.clone());
        }
        if self.den.is_constant() && rhs.den.is_constant() {
            let a = self.den.constant_term();
            let b = rhs.den.constant_term();
            let l = a.lcm(&b);
            let num = &self.num.scale(&(&l / &a)) + &rhs.num.scale(&(&l / &b));
            return QtRat::normalized(num, QtPoly::constant(l));
        }
        let g = gcd(&self.den, &rhs.den);
        let da = self.den.div_exact(&g).unwrap();
        let db = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &db) + &(&rhs.num * &da);
        QtRat::normalized(num, &da * &rhs.den)
    }
}

impl Sub for &QtRat {
    type Output = QtRat;
    fn sub(self, rhs: &QtRat) -> QtRat {
        self + &(-rhs)
    }
}

impl Mul for &QtRat {
    type Output = QtRat;
    fn mul(self, rhs: &QtRat) -> QtRat {
        if self.is_zero() || rhs.is_zero() {
            return QtRat::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QtRat::from_poly(&self.num * &rhs.num);
        }
        if rhs.is_polynomial() {
            return self.mul_poly(&rhs.num);
        }
        if self.is_polynomial() {
            return rhs.mul_poly(&self.num);
        }
        QtRat::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &QtRat {
    type Output = QtRat;
    fn div(self, rhs: &QtRat) -> QtRat {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QtRat> for QtRat {
            type Output = QtRat;
            fn $m(self, rhs: QtRat) -> QtRat {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QtRat> for QtRat {
            type Output = QtRat;
            fn $m(self, rhs: &QtRat) -> QtRat {
                (&self).$m(rhs)
            }
        }
        impl $tr<QtRat> for &QtRat {
            type Output = QtRat;
            fn $m(self, rhs: QtRat) -> QtRat {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&QtRat> for QtRat {
    fn add_assign(&mut self, rhs: &QtRat) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num += &rhs.num;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&QtRat> for QtRat {
    fn sub_assign(&mut self, rhs: &QtRat) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num -= &rhs.num;
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&QtRat> for QtRat {
    fn mul_assign(&mut self, rhs: &QtRat) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for QtRat {
    fn sum<I: Iterator<Item = QtRat>>(iter: I) -> Self {
        let mut acc = QtRat::zero();
        for r in iter {
            acc += &r;
        }
        acc
    }
}

/// Renders `num` when the denominator is 1, otherwise `(num)/(den)`.
impl fmt::Display for QtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Zero for QtRat {
    fn zero() -> Self {
        QtRat::zero()
    }
    fn is_zero(&self) -> bool {
        QtRat::is_zero(self)
    }
}

impl One for QtRat {
    fn one() -> Self {
        QtRat::one()
    }
}
