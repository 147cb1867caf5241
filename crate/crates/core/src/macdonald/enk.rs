use num_bigint::BigInt;

use crate::ring::{binom2, q_pochhammer, qq_pochhammer, QtPoly, QtRat, U};
use crate::shapes::Partition;
use crate::symfun::{plethysm_eval, Alphabet, Basis, SymFunc};
use crate::{Error, Result};

/// Split a rational function whose denominator is free of `u` by powers of `u`.
fn u_coefficients(r: &QtRat) -> Result<Vec<QtRat>> {
    if r.den().max_degree(U).unwrap_or(0) != 0 || r.den().min_degree(U).unwrap_or(0) != 0 {
        return Err(Error::Internal(format!("u in the denominator of {r}")));
    }
    let mut parts: Vec<QtPoly> = Vec::new();
    for (e, c) in r.num().terms() {
        if e[U] < 0 {
            return Err(Error::Internal(format!("negative power of u in {r}")));
        }
        let d = e[U] as usize;
        if parts.len() <= d {
            parts.resize(d + 1, QtPoly::zero());
        }
        parts[d].add_term([e[0], e[1], 0], c.clone());
    }
    parts
        .into_iter()
        .map(|p| QtRat::new(p, r.den().clone()))
        .collect()
}

/// `E_{n,1}, …, E_{n,n}`, in the Schur basis.
///
/// The left side `e_n[Z(1-u)/(1-q)]` is expanded as a polynomial in `u` and
/// written in the basis `(u;q)_k` by back-substitution from the top degree;
/// the leading coefficient of `(u;q)_k` is `(-1)^k q^{C(k,2)}`.
pub fn e_nk_all(n: usize) -> Result<Vec<SymFunc>> {
    if n == 0 {
        return Err(Error::Input("E_{n,k} needs n >= 1".into()));
    }
    let z = QtRat::new(&QtPoly::one() - &QtPoly::u(), &QtPoly::one() - &QtPoly::q())?;
    let lhs = plethysm_eval(&SymFunc::basis_elem(Basis::E, Partition::row(n)), &Alphabet::z_times(z))
        .into_symmetric()
        .expect("Z-only alphabet")
        .convert(Basis::S);
    let bases: Vec<QtPoly> = (0..=n).map(q_pochhammer).collect();
    let mut g: Vec<Vec<(Partition, QtRat)>> = vec![Vec::new(); n + 1];
    for (lambda, c) in lhs.terms() {
        let mut rem = u_coefficients(c)?;
        if rem.len() > n + 1 {
            return Err(Error::Internal(format!("u-degree above {n}")));
        }
        rem.resize(n + 1, QtRat::zero());
        for k in (0..=n).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let sign = if k % 2 == 1 { -1 } else { 1 };
            let lead = QtRat::from_poly(QtPoly::monomial(BigInt::from(sign), [binom2(k) as i32, 0, 0]));
            let gk = rem[k].checked_div(&lead)?;
            for (d, part) in u_coefficients(&QtRat::from_poly(bases[k].clone()))?.iter().enumerate() {
                rem[d] -= &(&gk * part);
            }
            g[k].push((lambda.clone(), gk));
        }
    }
    if !g[0].is_empty() {
        return Err(Error::Internal("nonzero (u;q)_0 component".into()));
    }
    (1..=n)
        .map(|k| {
            let f = SymFunc::from_terms(n, Basis::S, std::mem::take(&mut g[k]))?;
            Ok(f.scale(&QtRat::from_poly(qq_pochhammer(k))))
        })
        .collect()
}

/// `E_{n,k}` for `1 ≤ k ≤ n`.
pub fn e_nk(n: usize, k: usize) -> Result<SymFunc> {
    if k == 0 || k > n {
        return Err(Error::Input(format!("E_{{n,k}} needs 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(e_nk_all(n)?.swap_remove(k - 1))
}
