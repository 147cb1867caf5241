//! Sums of fractions whose denominators are products of binomials `q^a - t^b`.
//!
//! Keeping the denominator factored turns common denominators into multiset
//! maxima and most cancellations into exact divisions, so no bivariate gcd is
//! needed until the very end.

use std::collections::BTreeMap;

use crate::ring::{QtPoly, QtRat};

pub(crate) type Atoms = BTreeMap<(i32, i32), u32>;

/// `q^a - t^b`.
pub(crate) fn atom_poly((a, b): (i32, i32)) -> QtPoly {
    &QtPoly::qtu(a, 0, 0) - &QtPoly::qtu(0, b, 0)
}

#[derive(Clone, Debug)]
pub(crate) struct AtomRat {
    num: QtRat,
    den: Atoms,
}

impl AtomRat {
    pub fn zero() -> Self {
        AtomRat { num: QtRat::zero(), den: Atoms::new() }
    }

    pub fn new(num: QtRat, den: Atoms) -> Self {
        AtomRat { num, den }
    }

    pub fn mul_poly(&self, p: &QtPoly) -> Self {
        AtomRat { num: self.num.mul_poly(p), den: self.den.clone() }
    }

    pub fn mul_rat(&self, r: &QtRat) -> Self {
        AtomRat { num: &self.num * r, den: self.den.clone() }
    }

    fn lift(&self, target: &Atoms) -> QtRat {
        let mut extra = QtPoly::one();
        for (atom, &k) in target {
            let have = self.den.get(atom).copied().unwrap_or(0);
            for _ in have..k {
                extra = &extra * &atom_poly(*atom);
            }
        }
        if extra.is_one() {
            self.num.clone()
        } else {
            self.num.mul_poly(&extra)
        }
    }

    pub fn add_assign(&mut self, other: &AtomRat) {
        if other.num.is_zero() {
            return;
        }
        if self.num.is_zero() {
            *self = other.clone();
            return;
        }
        let mut lcm = self.den.clone();
        for (atom, &k) in &other.den {
            let e = lcm.entry(*atom).or_insert(0);
            *e = (*e).max(k);
        }
        let num = &self.lift(&lcm) + &other.lift(&lcm);
        self.num = num;
        self.den = lcm;
    }

    /// Cancel atoms that divide the numerator, then hand the rest to `QtRat`.
    pub fn into_qtrat(self) -> QtRat {
        if self.num.is_zero() {
            return QtRat::zero();
        }
        let (mut top, bottom) = self.num.into_parts();
        let mut rest = QtPoly::one();
        for (atom, k) in self.den {
            let p = atom_poly(atom);
            for _ in 0..k {
                match top.div_exact(&p) {
                    Some(x) => top = x,
                    None => rest = &rest * &p,
                }
            }
        }
        QtRat::new(top, &bottom * &rest).expect("atoms are nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    /// Multiply out a sign and atoms, for tests and diagnostics.
    fn atoms_value(sign: &BigInt, den: &Atoms) -> QtPoly {
        let mut p = QtPoly::constant(sign.clone());
        for (atom, &k) in den {
            for _ in 0..k {
                p = &p * &atom_poly(*atom);
            }
        }
        p
    }

    #[test]
    fn sums_cancel_back_to_polynomials() {
        // 1/(q - 1) - 1/(q - 1) + (q^2 - 1)/(q - 1) = q + 1
        let a = |n: QtPoly, atoms: &[((i32, i32), u32)]| {
            AtomRat::new(QtRat::from_poly(n), atoms.iter().copied().collect())
        };
        let mut s = a(QtPoly::one(), &[((1, 0), 1)]);
        s.add_assign(&a(-QtPoly::one(), &[((1, 0), 1)]));
        s.add_assign(&a(&QtPoly::qtu(2, 0, 0) - &QtPoly::one(), &[((1, 0), 1)]));
        assert_eq!(s.into_qtrat(), QtRat::from_poly(&QtPoly::q() + &QtPoly::one()));

        let mut s = a(QtPoly::one(), &[((1, 1), 1)]);
        s.add_assign(&a(QtPoly::one(), &[((2, 2), 1)]));
        // 1/(q-t) + 1/(q^2-t^2) = (q + t + 1)/(q^2 - t^2)
        let want = QtRat::new(
            &(&QtPoly::q() + &QtPoly::t()) + &QtPoly::one(),
            atoms_value(&BigInt::one(), &[((2, 2), 1)].into_iter().collect()),
        )
        .unwrap();
        assert_eq!(s.into_qtrat(), want);
    }
}
