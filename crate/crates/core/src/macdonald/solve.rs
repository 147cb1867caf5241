//! Modified Macdonald polynomials from their triangularity axioms.
//!
//! The axioms are linear in the Schur coefficients of `H̃_μ`. They are solved at
//! integer points `(q, t)`, the polynomial coefficients are recovered by
//! interpolation within the degree bounds `deg_q ≤ n(μ')`, `deg_t ≤ n(μ)`, and the
//! result is then checked against the axioms symbolically.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ring::{QtPoly, QtRat};
use crate::shapes::Partition;
use crate::symfun::{plethysm_eval, Alphabet, Basis, SymFunc};
use crate::{Error, Result};

/// `mq[λ][ν]`: coefficient of `s_ν` in `s_λ[X(1-q)]`, indexed by `Partition::all(n)`.
pub(crate) fn plethysm_matrix(n: usize) -> Vec<Vec<QtPoly>> {
    let parts = Partition::all(n);
    let alpha = Alphabet::z_times(QtRat::from_poly(&QtPoly::one() - &QtPoly::q()));
    parts
        .iter()
        .map(|l| {
            let img = plethysm_eval(&SymFunc::basis_elem(Basis::S, l.clone()), &alpha)
                .into_symmetric()
                .expect("Z-only alphabet")
                .convert(Basis::S);
            parts
                .iter()
                .map(|nu| img.coeff(nu).as_poly().cloned().expect("polynomial plethysm"))
                .collect()
        })
        .collect()
}

fn eval_q(p: &QtPoly, x: &BigInt) -> BigInt {
    p.terms().map(|(e, c)| c * x.pow(e[0] as u32)).sum()
}

fn primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut k = 2u64;
    while out.len() < count {
        if (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0) {
            out.push(k);
        }
        k += 1;
    }
    out
}

/// Unique solution of `a x = b`, or `None` when the system is singular or
/// inconsistent.
fn solve_unique(mut rows: Vec<Vec<BigRational>>, cols: usize) -> Option<Vec<BigRational>> {
    let mut r = 0;
    let mut pivots = Vec::with_capacity(cols);
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            return None;
        };
        rows.swap(r, p);
        let inv = BigRational::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let piv = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&piv) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(r);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|c| rows[pivots[c]][cols].clone()).collect())
}

/// Coefficients (low degree first) of the polynomial through the points.
fn interpolate(xs: &[BigInt], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let xr: Vec<BigRational> = xs.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            c[i] = (&c[i] - &c[i - 1]) / (&xr[i] - &xr[i - j]);
        }
    }
    let mut poly = vec![c[n - 1].clone()];
    for k in (0..n - 1).rev() {
        // poly * (x - x_k) + c_k
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (d, a) in poly.iter().enumerate() {
            next[d + 1] += a;
            next[d] -= a * &xr[k];
        }
        next[0] += &c[k];
        poly = next;
    }
    poly
}

fn to_integer(x: &BigRational) -> Result<BigInt> {
    if x.denom().is_one() {
        Ok(x.numer().clone())
    } else {
        Err(Error::Internal(format!("non-integral interpolated coefficient {x}")))
    }
}

/// Schur coefficients of `H̃_μ`, indexed by `Partition::all(n)`.
pub(crate) fn solve_macdonald(mu: &Partition, mq: &[Vec<QtPoly>]) -> Result<Vec<QtPoly>> {
    let n = mu.size();
    let parts = Partition::all(n);
    let k = parts.len();
    let mu_c = mu.conjugate();
    let dq = mu_c.n_stat();
    let dt = mu.n_stat();
    let q_rows: Vec<usize> = (0..k).filter(|&v| !parts[v].dominates(mu)).collect();
    let t_rows: Vec<usize> = (0..k).filter(|&v| !parts[v].dominates(&mu_c)).collect();

    let pool = primes(2 * (dq.max(dt) + 24));
    let q_pts: Vec<BigInt> = pool.iter().step_by(2).map(|&p| BigInt::from(p)).collect();
    let t_pts: Vec<BigInt> = pool.iter().skip(1).step_by(2).map(|&p| BigInt::from(p)).collect();

    let system = |q: &BigInt, t: &BigInt| -> Option<Vec<BigRational>> {
        let mut rows = Vec::with_capacity(q_rows.len() + t_rows.len() + 1);
        for (&nu, x) in q_rows.iter().map(|v| (v, q)).chain(t_rows.iter().map(|v| (v, t))) {
            let mut row: Vec<BigRational> =
                (0..k).map(|l| BigRational::from_integer(eval_q(&mq[l][nu], x))).collect();
            row.push(BigRational::zero());
            rows.push(row);
        }
        let mut a3 = vec![BigRational::zero(); k + 1];
        a3[0] = BigRational::one();
        a3[k] = BigRational::one();
        rows.push(a3);
        solve_unique(rows, k)
    };

    // one row of q-interpolants per t value
    let mut t_used = Vec::new();
    let mut per_t: Vec<Vec<Vec<BigRational>>> = Vec::new();
    for t in &t_pts {
        if t_used.len() == dt + 1 {
            break;
        }
        let mut qs = Vec::new();
        let mut sols = Vec::new();
        for q in &q_pts {
            if qs.len() == dq + 1 {
                break;
            }
            if let Some(s) = system(q, t) {
                qs.push(q.clone());
                sols.push(s);
            }
        }
        if qs.len() < dq + 1 {
            continue;
        }
        // interpolate in q for every Schur coefficient; keep coefficient vectors
        let coeffs: Vec<Vec<BigRational>> = (0..k)
            .map(|l| {
                let ys: Vec<BigRational> = sols.iter().map(|s| s[l].clone()).collect();
                interpolate(&qs, &ys)
            })
            .collect();
        t_used.push(t.clone());
        per_t.push(coeffs);
    }
    if t_used.len() < dt + 1 {
        return Err(Error::Internal(format!("no regular interpolation grid for {mu}")));
    }
    let mut out = Vec::with_capacity(k);
    for l in 0..k {
        let mut p = QtPoly::zero();
        for a in 0..=dq {
            let ys: Vec<BigRational> = per_t.iter().map(|c| c[l][a].clone()).collect();
            for (b, c) in interpolate(&t_used, &ys).iter().enumerate() {
                let c = to_integer(c)?;
                if !c.is_zero() {
                    p.add_term([a as i32, b as i32, 0], c);
                }
            }
        }
        out.push(p);
    }
    verify_axioms(mu, &out, mq)?;
    Ok(out)
}

/// Exact check of the three defining axioms for Schur coefficients `h` of a
/// candidate `H̃_μ`.
pub(crate) fn verify_axioms(mu: &Partition, h: &[QtPoly], mq: &[Vec<QtPoly>]) -> Result<()> {
    let n = mu.size();
    let parts = Partition::all(n);
    let mu_c = mu.conjugate();
    if h.len() != parts.len() {
        return Err(Error::Internal(format!("wrong number of coefficients for {mu}")));
    }
    if !h[0].is_one() {
        return Err(Error::Internal(format!("<H̃_{mu}, s_({n})> = {} is not 1", h[0])));
    }
    for (v, nu) in parts.iter().enumerate() {
        let check_q = !nu.dominates(mu);
        let check_t = !nu.dominates(&mu_c);
        if check_q {
            let s: QtPoly = (0..h.len()).map(|l| &h[l] * &mq[l][v]).sum();
            if !s.is_zero() {
                return Err(Error::Internal(format!("H̃_{mu}[X(1-q)] has s_{nu} coefficient {s}")));
            }
        }
        if check_t {
            let s: QtPoly = (0..h.len()).map(|l| &h[l] * &mq[l][v].swap_qt()).sum();
            if !s.is_zero() {
                return Err(Error::Internal(format!("H̃_{mu}[X(1-t)] has s_{nu} coefficient {s}")));
            }
        }
    }
    Ok(())
}
