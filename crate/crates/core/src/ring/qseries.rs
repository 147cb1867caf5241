use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::QtPoly;
use crate::{Error, Result};

/// `(u;q)_k = (1-u)(1-uq)...(1-uq^{k-1})`.
pub fn q_pochhammer(k: usize) -> QtPoly {
    pochhammer(&QtPoly::u(), &QtPoly::q(), k)
}

/// `(a;b)_k = (1-a)(1-ab)...(1-ab^{k-1})` for polynomial `a`, `b`.
pub fn pochhammer(a: &QtPoly, b: &QtPoly, k: usize) -> QtPoly {
    let one = QtPoly::one();
    let mut acc = QtPoly::one();
    let mut x = a.clone();
    for _ in 0..k {
        acc = &acc * &(&one - &x);
        x = &x * b;
    }
    acc
}

/// `(q;q)_k`.
pub fn qq_pochhammer(k: usize) -> QtPoly {
    pochhammer(&QtPoly::q(), &QtPoly::q(), k)
}

/// `(t;t)_k`.
pub fn tt_pochhammer(k: usize) -> QtPoly {
    pochhammer(&QtPoly::t(), &QtPoly::t(), k)
}

/// `[k]_q = 1 + q + ... + q^{k-1}`.
pub fn q_int(k: usize) -> QtPoly {
    QtPoly::from_terms((0..k).map(|i| ([i as i32, 0, 0], 1)))
}

/// `[k]_q!`.
pub fn q_factorial(k: usize) -> QtPoly {
    (1..=k).map(q_int).product()
}

/// Gaussian binomial `[n choose k]_q`; zero when `k > n`.
pub fn q_binomial(n: usize, k: usize) -> QtPoly {
    if k > n {
        return QtPoly::zero();
    }
    // Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k], on coefficient vectors.
    let k = k.min(n - k);
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]; k + 1];
    for j in 1..=k {
        rows[j] = vec![BigInt::zero()];
    }
    for m in 1..=n {
        for j in (1..=k.min(m)).rev() {
            let mut next = vec![BigInt::zero(); j * (m - j) + 1];
            for (d, c) in rows[j - 1].iter().enumerate() {
                next[d] += c;
            }
            if j < m {
                for (d, c) in rows[j].iter().enumerate() {
                    next[d + j] += c;
                }
            }
            rows[j] = next;
        }
    }
    QtPoly::from_q_coeffs(&rows[k])
}

/// `[n choose k_1, ..., k_r]_q`. Requires `sum(ks) = n`.
pub fn q_multinomial(n: usize, ks: &[usize]) -> Result<QtPoly> {
    let s: usize = ks.iter().sum();
    if s != n {
        return Err(Error::Input(format!("parts {ks:?} sum to {s}, expected {n}")));
    }
    let mut rem = n;
    let mut acc = QtPoly::one();
    for &k in ks {
        acc = &acc * &q_binomial(rem, k);
        rem -= k;
    }
    Ok(acc)
}

/// `C(n, 2)`.
pub fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
