use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::llt::{d_to_llt_filling, llt_poly, llt_poly_by_ribbons, n_core, ribbon_tableaux, spin, tuple_inv};
use crate::macdonald::{e_nk_all, nabla_power};
use crate::ring::{binom2, q_binomial, q_int, q_pochhammer, qq_pochhammer, tt_pochhammer, QtPoly, QtRat, Q, T};
use crate::shapes::{compositions, enumerate_fillings, sub_staircase_iter, Partition, SkewShape};
use crate::shuffle::{
    area, catalan_stats, compute_d, compute_d_quasisymmetric, d_component, d_component_coeff, fermionic_h,
    hilbert_summand, nabla_enk_rhs, reduced_dinv, schroder_enum, super_d_coeff, FlagStrip,
};
use crate::symfun::{hall_inner, plethysm_eval, superize_coeff, Alphabet, Basis, SymFunc};
use crate::{Error, Result};

use super::{poly_witness, symfunc_witness, CheckResult, Params};

fn rat(num: QtPoly, den: QtPoly) -> Result<QtRat> {
    QtRat::new(num, den)
}

fn poly_of(c: &QtRat) -> Result<&QtPoly> {
    c.as_poly().ok_or_else(|| Error::Internal(format!("{c} is not a polynomial")))
}

fn mono(q: i64, t: i64) -> QtRat {
    QtRat::from_poly(QtPoly::qtu(q as i32, t as i32, 0))
}

fn plethysm(f: &SymFunc, a: &Alphabet) -> Result<SymFunc> {
    plethysm_eval(f, a)
        .into_symmetric()
        .ok_or_else(|| Error::Internal("plethysm did not stay homogeneous".into()))
}

/// First witness among several labelled comparisons.
fn first_failure(parts: Vec<(String, Option<String>)>) -> Option<String> {
    parts.into_iter().find_map(|(label, w)| w.map(|w| format!("{label}\n{w}")))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("a larger entry exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Pairs of compositions `(μ, η)` with `|μ| + |η| = n`.
fn content_pairs(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    (0..=n)
        .flat_map(|k| {
            compositions(k)
                .into_iter()
                .flat_map(move |mu| compositions(n - k).into_iter().map(move |eta| (mu.clone(), eta)))
        })
        .collect()
}

/// Signed contents on `1, …, ℓ` where letter `i` is positive or negative, with zero parts elsewhere.
fn packed_contents(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for alpha in compositions(n) {
        for signs in 0..1u32 << alpha.len() {
            let (mut mu, mut eta) = (vec![0; alpha.len()], vec![0; alpha.len()]);
            for (k, &a) in alpha.iter().enumerate() {
                if signs >> k & 1 == 1 {
                    eta[k] = a;
                } else {
                    mu[k] = a;
                }
            }
            out.push((mu, eta));
        }
    }
    out
}

fn sorted_desc(v: &[usize]) -> Vec<usize> {
    let mut s: Vec<usize> = v.iter().copied().filter(|&x| x > 0).collect();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

fn check_nm(n: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::Input("n and m must be positive".into()));
    }
    Ok(())
}

pub fn check_main_conjecture(n: usize, m: usize) -> CheckResult {
    CheckResult::timed("main", Params::new(n, m), || {
        check_nm(n, m)?;
        let lhs = nabla_power(&SymFunc::e(&[n]), m as i32)?;
        let rhs = compute_d(n, m)?;
        Ok(symfunc_witness(&lhs, &rhs))
    })
}

/// The four specializations `q = 1`, `t = 0`, `q = 0` and `t = q⁻¹`.
pub fn check_specializations(n: usize, m: usize) -> Vec<CheckResult> {
    vec![check_q_one(n, m), check_t_zero(n, m), check_q_zero(n, m), check_t_inv_q(n, m)]
}

/// `D(z;1,t) = Σ_λ t^{|mδ_n/λ|} e_α`.
pub fn check_q_one(n: usize, m: usize) -> CheckResult {
    CheckResult::timed("spec_q1", Params::new(n, m), || {
        check_nm(n, m)?;
        let lhs = compute_d(n, m)?.try_map_coeffs(|c| c.subs_monomial(Q, [0, 0, 0]))?;
        let mut acc: BTreeMap<Partition, QtPoly> = BTreeMap::new();
        for lambda in sub_staircase_iter(n, m) {
            let alpha = Partition::from_unsorted(lambda.multiplicities(n));
            let a = area(&lambda, n, m)?;
            *acc.entry(alpha).or_insert_with(QtPoly::zero) += &QtPoly::qtu(0, a as i32, 0);
        }
        let rhs = SymFunc::from_terms(n, Basis::E, acc.into_iter().map(|(l, p)| (l, QtRat::from_poly(p))))?;
        Ok(symfunc_witness(&lhs, &rhs))
    })
}

/// `(q;q)_n h_n[Z/(1-q)]`.
fn t_zero_closed_form(n: usize) -> Result<SymFunc> {
    let h = plethysm(&SymFunc::h(&[n]), &Alphabet::z_times(rat(QtPoly::one(), &QtPoly::one() - &QtPoly::q())?))?;
    Ok(h.scale(&QtRat::from_poly(qq_pochhammer(n))))
}

/// `D(z;q,0) = q^{(m-1)C(n,2)} (q;q)_n h_n[Z/(1-q)]`.
pub fn check_t_zero(n: usize, m: usize) -> CheckResult {
    CheckResult::timed("spec_t0", Params::new(n, m), || {
        check_nm(n, m)?;
        let lhs = compute_d(n, m)?.try_map_coeffs(|c| c.subs_zero(T))?;
        let rhs = t_zero_closed_form(n)?.scale(&mono(((m - 1) * binom2(n)) as i64, 0));
        Ok(symfunc_witness(&lhs, &rhs))
    })
}

/// `D(z;0,t) = ∇^m e_n|_{q=0} = t^{(m-1)C(n,2)} (t;t)_n h_n[Z/(1-t)]`.
pub fn check_q_zero(n: usize, m: usize) -> CheckResult {
    CheckResult::timed("spec_q0", Params::new(n, m), || {
        check_nm(n, m)?;
        let lhs = compute_d(n, m)?.try_map_coeffs(|c| c.subs_zero(Q))?;
        let nabla = nabla_power(&SymFunc::e(&[n]), m as i32)?.try_map_coeffs(|c| c.subs_zero(Q))?;
        let h = plethysm(&SymFunc::h(&[n]), &Alphabet::z_times(rat(QtPoly::one(), &QtPoly::one() - &QtPoly::t())?))?;
        let closed = h
            .scale(&QtRat::from_poly(tt_pochhammer(n)))
            .scale(&mono(0, ((m - 1) * binom2(n)) as i64));
        Ok(first_failure(vec![
            ("against ∇^m e_n at q=0".into(), symfunc_witness(&lhs, &nabla)),
            ("against the closed form".into(), symfunc_witness(&lhs, &closed)),
        ]))
    })
}

/// Weakly decreasing `(λ_1, …, λ_n)` with `λ_1 ≤ max`.
fn bounded_partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 0..=max {
            cur.push(p);
            rec(left - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max, &mut Vec::new(), &mut out);
    out
}

/// The four expressions of the `e_n[Z[mn+1]_q]` monomial identity for one `μ`.
fn expand_e_sides(n: usize, m: usize, e_plethysm: &SymFunc, mu: &Partition) -> Result<[QtPoly; 4]> {
    let k = m * n + 1;
    let by_cauchy = poly_of(&hall_inner(e_plethysm, &SymFunc::h(mu.parts()))?)?.clone();
    let mut product = QtPoly::qtu(mu.conjugate().n_stat() as i32, 0, 0);
    for &p in mu.parts() {
        product = &product * &q_binomial(k, p);
    }
    let mut by_tableaux = QtPoly::zero();
    for lambda in bounded_partitions(n, m * n) {
        let outer = Partition::from_unsorted(lambda.iter().map(|x| x + 1).collect());
        let shape = SkewShape::new(outer, Partition::from_unsorted(lambda.clone()))?;
        let count = enumerate_fillings(&shape, mu.parts(), &[])?.count();
        if count > 0 {
            let size: usize = lambda.iter().sum();
            by_tableaux += &QtPoly::monomial(count as u64, [size as i32, 0, 0]);
        }
    }
    let mut by_dinv = QtPoly::zero();
    for lambda in sub_staircase_iter(n, m) {
        let c = d_component_coeff(&lambda, n, m, mu.parts(), &[])?;
        by_dinv += &c.shift([lambda.size() as i32, 0, 0]);
    }
    Ok([by_cauchy, product, by_tableaux, &q_int(k) * &by_dinv])
}

/// `D(z;q,q⁻¹) = q^{-mC(n,2)} e_n[Z[mn+1]_q]/[mn+1]_q`, and the monomial
/// expansion of `e_n[Z[mn+1]_q]` for every `μ ⊢ n`.
pub fn check_t_inv_q(n: usize, m: usize) -> CheckResult {
    CheckResult::timed("spec_t_inv_q", Params::new(n, m), || {
        check_nm(n, m)?;
        let lhs = compute_d(n, m)?.try_map_coeffs(|c| c.subs_monomial(T, [-1, 0, 0]))?;
        let k = m * n + 1;
        let e = plethysm(&SymFunc::e(&[n]), &Alphabet::z_times(QtRat::from_poly(q_int(k))))?;
        let scale = rat(QtPoly::qtu(-((m * binom2(n)) as i32), 0, 0), q_int(k))?;
        let rhs = e.scale(&scale);
        if let Some(w) = symfunc_witness(&lhs, &rhs) {
            return Ok(Some(w));
        }
        for mu in Partition::all(n) {
            let [a, b, c, d] = expand_e_sides(n, m, &e, &mu)?;
            let found = first_failure(vec![
                (format!("μ={mu}: Cauchy against product"), poly_witness(&a, &b)),
                (format!("μ={mu}: product against tableau sum"), poly_witness(&b, &c)),
                (format!("μ={mu}: tableau sum against [mn+1]_q · dinv sum"), poly_witness(&c, &d)),
            ]);
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    })
}

fn enk_identities(n: usize, all: &[SymFunc]) -> Result<Option<String>> {
    let total = all.iter().fold(SymFunc::zero(n, Basis::S), |a, b| &a + b);
    if let Some(w) = symfunc_witness(&total, &SymFunc::e(&[n])) {
        return Ok(Some(format!("Σ_k E_(n,k) against e_n\n{w}")));
    }
    let alphabet = Alphabet::z_times(rat(&QtPoly::one() - &QtPoly::u(), &QtPoly::one() - &QtPoly::q())?);
    let lhs = plethysm(&SymFunc::e(&[n]), &alphabet)?;
    let mut rhs = SymFunc::zero(n, Basis::S);
    for (k, e) in all.iter().enumerate() {
        rhs = &rhs + &e.scale(&rat(q_pochhammer(k + 1), qq_pochhammer(k + 1))?);
    }
    Ok(symfunc_witness(&rhs, &lhs).map(|w| format!("Σ_k (u;q)_k/(q;q)_k E_(n,k) against e_n[Z(1-u)/(1-q)]\n{w}")))
}

/// `Σ_k E_{n,k} = e_n` and `Σ_k (u;q)_k/(q;q)_k E_{n,k} = e_n[Z(1-u)/(1-q)]`.
pub fn check_enk_identities(n: usize) -> CheckResult {
    CheckResult::timed("enk_identities", Params::new(n, 1), || {
        check_nm(n, 1)?;
        enk_identities(n, &e_nk_all(n)?)
    })
}

/// `∇^m E_{n,k} = Σ_λ t^{|mδ_n/λ|} D^λ` over `λ` touching the diagonal `k` times, for every `k`.
pub fn check_enk(n: usize, m: usize) -> CheckResult {
    CheckResult::timed("enk", Params::new(n, m), || {
        check_nm(n, m)?;
        let all = e_nk_all(n)?;
        if let Some(w) = enk_identities(n, &all)? {
            return Ok(Some(w));
        }
        for (i, e) in all.iter().enumerate() {
            let k = i + 1;
            let lhs = nabla_power(e, m as i32)?;
            let rhs = nabla_enk_rhs(n, k, m)?;
            if let Some(w) = symfunc_witness(&lhs, &rhs) {
                return Ok(Some(format!("k={k}\n{w}")));
            }
        }
        Ok(None)
    })
}

fn at_one(c: &QtRat) -> Result<BigInt> {
    let one = BigInt::one();
    let v = c.eval([&one, &one, &one])?;
    if !v.is_integer() {
        return Err(Error::Internal(format!("{c} is not integral at q=t=1")));
    }
    Ok(v.to_integer())
}

/// `⟨D_n, e_1^n⟩ = (n+1)^{n-1}` at `q = t = 1`.
pub fn check_hilbert_dimension(n: usize) -> CheckResult {
    CheckResult::timed("hilbert_dimension", Params::new(n, 1), || {
        check_nm(n, 1)?;
        let d = compute_d(n, 1)?;
        let got = at_one(&hall_inner(&d, &SymFunc::e(&vec![1; n]))?)?;
        let want = BigInt::from(n + 1).pow(n as u32 - 1);
        Ok((got != want).then(|| format!("⟨D_n, e_1^n⟩(1,1) = {got}, expected {want}")))
    })
}

/// `⟨D_n, e_n⟩ = C_n` at `q = t = 1`.
pub fn check_catalan_dimension(n: usize) -> CheckResult {
    CheckResult::timed("catalan_dimension", Params::new(n, 1), || {
        check_nm(n, 1)?;
        let d = compute_d(n, 1)?;
        let got = at_one(&hall_inner(&d, &SymFunc::e(&[n]))?)?;
        let mut binom = BigInt::one();
        for i in 0..n {
            binom = binom * (2 * n - i) / (i + 1);
        }
        let want = binom / (n + 1);
        Ok((got != want).then(|| format!("⟨D_n, e_n⟩(1,1) = {got}, expected {want}")))
    })
}

/// Every `D^λ` has the same coefficient on `m_α` for every rearrangement `α`.
pub fn check_component_symmetry(n: usize, m: usize) -> CheckResult {
    CheckResult::timed("component_symmetry", Params::new(n, m), || {
        check_nm(n, m)?;
        let comps = compositions(n);
        let lambdas: Vec<Partition> = sub_staircase_iter(n, m).collect();
        let found: Result<Vec<Option<String>>> = lambdas
            .par_iter()
            .map(|lambda| {
                let c = d_component(lambda, n, m)?;
                for alpha in &comps {
                    let sorted = Partition::from_unsorted(alpha.clone());
                    let direct = QtRat::from_poly(d_component_coeff(lambda, n, m, alpha, &[])?);
                    let want = c.coeff(&sorted);
                    if direct != want {
                        return Ok(Some(format!("λ={lambda}: m_{alpha:?} has {direct}, m_{sorted} has {want}")));
                    }
                }
                Ok(None)
            })
            .collect();
        Ok(found?.into_iter().flatten().next())
    })
}

fn non_positive_term(f: &SymFunc) -> Result<Option<String>> {
    for (lambda, c) in f.convert(Basis::S).terms() {
        let p = poly_of(c)?;
        if p.terms().any(|(e, c)| e.iter().any(|&x| x < 0) || *c <= BigInt::from(0)) {
            return Ok(Some(format!("coefficient of s{lambda} is {p}")));
        }
    }
    Ok(None)
}

/// Schur coefficients of `D_n^{(m)}` lie in `ℕ[q,t]`.
pub fn check_schur_positivity(n: usize, m: usize) -> CheckResult {
    CheckResult::timed("schur_positivity", Params::new(n, m), || {
        check_nm(n, m)?;
        non_positive_term(&compute_d(n, m)?)
    })
}

/// `b_m(λ)` equals the dinv of the all-`1̄` filling for every `λ ⊆ mδ_n`.
pub fn check_catalan_hook(n: usize, m: usize) -> CheckResult {
    CheckResult::timed("catalan_hook", Params::new(n, m), || {
        check_nm(n, m)?;
        let lambdas: Vec<Partition> = sub_staircase_iter(n, m).collect();
        let found: Result<Vec<Option<String>>> = lambdas
            .par_iter()
            .map(|l| {
                let (b, d) = catalan_stats(l, n, m)?;
                Ok((b != d).then(|| format!("λ={l}: b_m = {b}, dinv = {d}")))
            })
            .collect();
        Ok(found?.into_iter().flatten().next())
    })
}

/// `Σ_σ H(σ; μ, η) = ⟨D_n, e_η h_μ⟩` for every pair of compositions, with the
/// Hilbert series case, and invariance of the sum under reordering parts.
pub fn check_fermionic(n: usize) -> CheckResult {
    CheckResult::timed("fermionic", Params::new(n, 1), || {
        check_nm(n, 1)?;
        let perms = permutations(n);
        let hilbert: QtPoly = perms.iter().map(|s| hilbert_summand(s)).sum::<Result<QtPoly>>()?;
        if let Some(w) = poly_witness(&hilbert, &super_d_coeff(n, 1, &vec![1; n], &[])?) {
            return Ok(Some(format!("Hilbert series\n{w}")));
        }
        let pairs = content_pairs(n);
        let sums: Result<Vec<QtPoly>> = pairs
            .par_iter()
            .map(|(mu, eta)| perms.iter().map(|s| fermionic_h(s, mu, eta)).sum())
            .collect();
        let sums = sums?;
        let by_key: HashMap<(Vec<usize>, Vec<usize>), &QtPoly> =
            pairs.iter().cloned().zip(sums.iter()).collect();
        for ((mu, eta), sum) in pairs.iter().zip(&sums) {
            let direct = super_d_coeff(n, 1, mu, eta)?;
            if let Some(w) = poly_witness(sum, &direct) {
                return Ok(Some(format!("μ={mu:?} η={eta:?}\n{w}")));
            }
            let sorted = by_key[&(sorted_desc(mu), sorted_desc(eta))];
            if let Some(w) = poly_witness(sum, sorted) {
                return Ok(Some(format!("μ={mu:?} η={eta:?} against sorted parts\n{w}")));
            }
        }
        Ok(None)
    })
}

/// `Σ t^{area} q^{dinv}` over Schröder paths with `d` diagonal steps equals `⟨D_n, e_{n-d} h_d⟩`.
pub fn check_schroder(n: usize) -> CheckResult {
    CheckResult::timed("schroder", Params::new(n, 1), || {
        check_nm(n, 1)?;
        for d in 0..=n {
            let sum = QtPoly::from_terms(
                schroder_enum(n, d)?.map(|p| ([p.dinv() as i32, p.area() as i32, 0], 1)),
            );
            if let Some(w) = poly_witness(&sum, &super_d_coeff(n, 1, &[d], &[n - d])?) {
                return Ok(Some(format!("d={d}\n{w}")));
            }
        }
        Ok(None)
    })
}

fn spin_inv_for(mu: &Partition, n: usize) -> Result<Option<String>> {
    let core_mu = n_core(mu, n)?;
    for nu in mu.subpartitions() {
        let shape = SkewShape::new(mu.clone(), nu.clone())?;
        if shape.size() % n != 0 || n_core(&nu, n)? != core_mu {
            continue;
        }
        let k = shape.size() / n;
        let mut es = BTreeSet::new();
        for content in compositions(k) {
            for t in ribbon_tableaux(&shape, n, &content)? {
                let (tuple, s) = t.quotient()?;
                es.insert(spin(&t)? + tuple_inv(&tuple, &s)?);
            }
        }
        if es.len() > 1 {
            return Ok(Some(format!("{shape}: spin + inv takes the values {es:?}")));
        }
    }
    Ok(None)
}

/// `spin(T) + inv(quot T)` is constant over the semistandard n-ribbon tableaux
/// of each skew shape `μ/ν` with `|μ| ≤ size`.
pub fn check_spin_inv(n: usize, size: usize) -> CheckResult {
    CheckResult::timed("spin_inv", Params::new(n, 1).with("max_size", size), || {
        if n < 2 {
            return Err(Error::Input("ribbons need n ≥ 2".into()));
        }
        let mus: Vec<Partition> = (0..=size).flat_map(Partition::all).collect();
        let found: Result<Vec<Option<String>>> = mus.par_iter().map(|mu| spin_inv_for(mu, n)).collect();
        Ok(found?.into_iter().flatten().next())
    })
}

/// `inv` of the LLT image equals the reduced `dinv′_m` for every super filling of every strip.
pub fn check_dinv_transport(n: usize, m: usize) -> CheckResult {
    CheckResult::timed("dinv_transport", Params::new(n, m), || {
        check_nm(n, m)?;
        let contents = packed_contents(n);
        let lambdas: Vec<Partition> = sub_staircase_iter(n, m).collect();
        let found: Result<Vec<Option<String>>> = lambdas
            .par_iter()
            .map(|lambda| {
                let strip = FlagStrip::new(lambda, n, m)?;
                let shape = strip.shape();
                for (mu, eta) in &contents {
                    for t in enumerate_fillings(&shape, mu, eta)? {
                        let (tuple, fills) = d_to_llt_filling(&t, m)?;
                        let (_, r) = reduced_dinv(&t, m)?;
                        let inv = tuple_inv(&tuple, &fills)?;
                        if inv != r {
                            return Ok(Some(format!("filling {t}: inv {inv}, reduced dinv {r}")));
                        }
                    }
                }
                Ok(None)
            })
            .collect();
        Ok(found?.into_iter().flatten().next())
    })
}

/// `G_{μ/core(μ)}` is symmetric with Schur coefficients in `ℕ[q]`; up to size 8
/// the ribbon enumeration is compared as well.
pub fn check_llt_positivity(n: usize, size: usize) -> CheckResult {
    CheckResult::timed("llt_positivity", Params::new(n, 1).with("max_size", size), || {
        if n < 2 {
            return Err(Error::Input("ribbons need n ≥ 2".into()));
        }
        let mus: Vec<Partition> = (0..=size).flat_map(Partition::all).collect();
        let found: Result<Vec<Option<String>>> = mus
            .par_iter()
            .map(|mu| {
                let core = n_core(mu, n)?.core;
                let shape = SkewShape::new(mu.clone(), core)?;
                let g = llt_poly(&shape, n)?;
                if mu.size() <= 8 {
                    if let Some(w) = symfunc_witness(&g, &llt_poly_by_ribbons(&shape, n)?) {
                        return Ok(Some(format!("{shape}: quotient and ribbon routes differ\n{w}")));
                    }
                }
                Ok(non_positive_term(&g)?.map(|w| format!("{shape}: {w}")))
            })
            .collect();
        Ok(found?.into_iter().flatten().next())
    })
}

/// Direct enumeration, quasisymmetric assembly and superization agree.
pub fn check_coherence(n: usize, m: usize) -> CheckResult {
    CheckResult::timed("coherence", Params::new(n, m), || {
        check_nm(n, m)?;
        let direct = compute_d(n, m)?;
        let qsym = compute_d_quasisymmetric(n, m)?;
        if let Some(w) = symfunc_witness(&direct, &qsym) {
            return Ok(Some(format!("direct against quasisymmetric\n{w}")));
        }
        for (mu, eta) in content_pairs(n) {
            let sup = QtRat::from_poly(super_d_coeff(n, m, &mu, &eta)?);
            let from_d = superize_coeff(&direct, &mu, &eta)?;
            if sup != from_d {
                return Ok(Some(format!(
                    "μ={mu:?} η={eta:?}: super enumeration {sup}, superization {from_d}"
                )));
            }
        }
        Ok(None)
    })
}
