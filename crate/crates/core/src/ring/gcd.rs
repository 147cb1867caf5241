//! Multivariate gcd over the integers by recursive primitive remainder sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::poly::{Mono, QtPoly};

/// Gcd in the Laurent ring `Z[q^±, t^±, u^±]`, normalised to carry no monomial
/// factor and a positive lex-leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &QtPoly, b: &QtPoly) -> QtPoly {
    if a.is_zero() && b.is_zero() {
        return QtPoly::zero();
    }
    let a = strip_monomial(a);
    let b = strip_monomial(b);
    if !a.is_zero() && !b.is_zero() {
        if let Some(_) = a.div_exact(&b) {
            return normalize_sign(strip_monomial(&b));
        }
        if let Some(_) = b.div_exact(&a) {
            return normalize_sign(strip_monomial(&a));
        }
    }
    normalize_sign(strip_monomial(&gcd_rec(&a, &b)))
}

fn strip_monomial(p: &QtPoly) -> QtPoly {
    let m = p.min_exponents();
    if m == [0, 0, 0] {
        p.clone()
    } else {
        p.shift([-m[0], -m[1], -m[2]])
    }
}

fn normalize_sign(p: QtPoly) -> QtPoly {
    match p.leading() {
        Some((_, c)) if c.is_negative() => -p,
        _ => p,
    }
}

fn first_var(a: &QtPoly, b: &QtPoly) -> Option<usize> {
    (0..3).find(|&v| a.max_degree(v).unwrap_or(0) > 0 || b.max_degree(v).unwrap_or(0) > 0)
}

fn to_uni(p: &QtPoly, v: usize) -> Vec<QtPoly> {
    let deg = p.max_degree(v).unwrap_or(0).max(0) as usize;
    let mut cs = vec![QtPoly::zero(); deg + 1];
    for (e, c) in p.terms() {
        let mut rest: Mono = *e;
        rest[v] = 0;
        cs[e[v] as usize].add_term(rest, c.clone());
    }
    cs
}

fn from_uni(cs: &[QtPoly], v: usize) -> QtPoly {
    let mut out = QtPoly::zero();
    for (k, c) in cs.iter().enumerate() {
        let mut e = [0; 3];
        e[v] = k as i32;
        out += &c.shift(e);
    }
    out
}

fn trim(cs: &mut Vec<QtPoly>) {
    while cs.len() > 1 && cs.last().is_some_and(|c| c.is_zero()) {
        cs.pop();
    }
}

fn uni_content(cs: &[QtPoly]) -> QtPoly {
    let mut g = QtPoly::zero();
    for c in cs {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { normalize_sign(c.clone()) } else { gcd_rec(&g, c) };
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive(cs: &[QtPoly]) -> Vec<QtPoly> {
    let g = uni_content(cs);
    if g.is_zero() || g.is_one() {
        return cs.to_vec();
    }
    cs.iter()
        .map(|c| c.div_exact(&g).expect("content divides every coefficient"))
        .collect()
}

fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// Gcd of genuine polynomials (nonnegative exponents); sign not normalised.
fn gcd_rec(a: &QtPoly, b: &QtPoly) -> QtPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() && b.is_constant() {
        return QtPoly::constant(int_gcd(&a.constant_term(), &b.constant_term()));
    }
    if a.is_constant() {
        return QtPoly::constant(int_gcd(&a.constant_term(), &b.content()));
    }
    if b.is_constant() {
        return QtPoly::constant(int_gcd(&b.constant_term(), &a.content()));
    }
    let v = first_var(a, b).expect("non-constant input has a variable");
    let ua = to_uni(a, v);
    let ub = to_uni(b, v);
    if ua.len() == 1 {
        return gcd_rec(a, &uni_content(&ub));
    }
    if ub.len() == 1 {
        return gcd_rec(b, &uni_content(&ua));
    }
    let ca = uni_content(&ua);
    let cb = uni_content(&ub);
    let c = gcd_rec(&ca, &cb);
    let mut pa = primitive(&ua);
    let mut pb = primitive(&ub);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    let g = loop {
        let r = prem(&pa, &pb);
        if r.iter().all(|x| x.is_zero()) {
            break pb;
        }
        if r.len() == 1 {
            break vec![QtPoly::one()];
        }
        pa = pb;
        pb = primitive(&r);
    };
    let g = primitive(&g);
    &c * &from_uni(&g, v)
}

/// Pseudo-remainder of `a` by `b` as polynomials in one variable.
fn prem(a: &[QtPoly], b: &[QtPoly]) -> Vec<QtPoly> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x = &*x * lb;
        }
        for (k, bc) in b.iter().enumerate() {
            let idx = dr - db + k;
            r[idx] = &r[idx] - &(&lr * bc);
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        trim(&mut r);
        if r.is_empty() {
            r.push(QtPoly::zero());
        }
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
    }
    r
}
