use std::collections::BTreeSet;

use proptest::prelude::*;
use qtshuffle_core::ring::{qq_pochhammer, tt_pochhammer, QtPoly, QtRat};
use qtshuffle_core::shapes::*;
use qtshuffle_core::symfun::*;
use qtshuffle_core::Error;

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn r(s: &str) -> QtRat {
    s.parse().unwrap()
}

fn int(c: i64) -> QtRat {
    QtRat::from_int(c)
}

#[test]
fn conversion_examples() {
    assert_eq!(SymFunc::e(&[2]).convert(Basis::M), SymFunc::m(&[1, 1]));
    let h2 = SymFunc::h(&[2]).convert(Basis::M);
    assert_eq!(h2.coeff(&part(&[2])), int(1));
    assert_eq!(h2.coeff(&part(&[1, 1])), int(1));
    assert_eq!(h2.len(), 2);
    let s21 = SymFunc::s(&[2, 1]).convert(Basis::M);
    assert_eq!(s21.coeff(&part(&[2, 1])), int(1));
    assert_eq!(s21.coeff(&part(&[1, 1, 1])), int(2));
    assert_eq!(s21.coeff(&part(&[3])), int(0));
}

#[test]
fn round_trips_through_every_basis() {
    for n in 0..=8 {
        for lambda in Partition::all(n) {
            for b in Basis::ALL {
                let f = SymFunc::basis_elem(b, lambda.clone());
                for c in Basis::ALL {
                    let back = f.convert(c).convert(b);
                    assert_eq!(back.len(), 1, "{b}{lambda} via {c}");
                    assert_eq!(back.coeff(&lambda), int(1));
                }
            }
        }
    }
}

#[test]
fn power_sum_to_monomial_small_cases() {
    // p_1^2 = m_2 + 2 m_11, p_2 = m_2
    let p11 = SymFunc::p(&[1, 1]).convert(Basis::M);
    assert_eq!(p11.coeff(&part(&[2])), int(1));
    assert_eq!(p11.coeff(&part(&[1, 1])), int(2));
    assert_eq!(SymFunc::p(&[2]).convert(Basis::M), SymFunc::m(&[2]));
}

#[test]
fn hall_inner_examples() {
    assert_eq!(hall_inner(&SymFunc::h(&[2, 1]), &SymFunc::m(&[2, 1])).unwrap(), int(1));
    assert_eq!(hall_inner(&SymFunc::s(&[2, 1]), &SymFunc::s(&[2, 1])).unwrap(), int(1));
    assert_eq!(hall_inner(&SymFunc::e(&[2]), &SymFunc::h(&[1, 1])).unwrap(), int(1));
    assert!(matches!(
        hall_inner(&SymFunc::e(&[2]), &SymFunc::h(&[1])),
        Err(Error::Input(_))
    ));
    // <p_λ, p_λ> = z_λ; z_(2,1,1) = 2 * 1 * 2!
    assert_eq!(hall_inner(&SymFunc::p(&[2, 1, 1]), &SymFunc::p(&[2, 1, 1])).unwrap(), int(4));
}

#[test]
fn omega_examples() {
    for n in 1..=5 {
        assert_eq!(omega(&SymFunc::e(&[n])), SymFunc::h(&[n]));
        assert_eq!(omega(&e_n(n)).convert(Basis::S), SymFunc::s(&[n]));
    }
    assert_eq!(omega(&SymFunc::s(&[2, 1])), SymFunc::s(&[2, 1]));
    // ω p_k = (-1)^{k-1} p_k, checked through the monomial basis
    let w = omega(&SymFunc::p(&[2]).convert(Basis::M));
    assert_eq!(w, SymFunc::p(&[2]).scale(&int(-1)));
    assert_eq!(omega(&SymFunc::m(&[2, 1])).convert(Basis::M), omega(&SymFunc::m(&[2, 1])));
}

#[test]
fn plethysm_examples() {
    let zq = Alphabet::z_times(r("1/(-q + 1)"));
    let out = plethysm_eval(&SymFunc::p(&[2]), &zq).into_symmetric().unwrap();
    assert_eq!(out, SymFunc::p(&[2]).scale(&r("1/(-q^2 + 1)")));

    let h2 = plethysm_eval(&SymFunc::h(&[2]), &zq).into_symmetric().unwrap();
    let h2 = h2.scale(&QtRat::from_poly(qq_pochhammer(2))).convert(Basis::M);
    assert_eq!(h2.coeff(&part(&[2])), int(1));
    assert_eq!(h2.coeff(&part(&[1, 1])), r("q + 1"));

    let b2 = Alphabet::finite(r("q + 1"));
    assert_eq!(plethysm_eval(&SymFunc::e(&[2]), &b2), PlethysmResult::Scalar(r("q")));
    assert_eq!(plethysm_eval(&SymFunc::h(&[2]), &b2).as_scalar().unwrap(), &r("q^2 + q + 1"));
}

#[test]
fn plethysm_of_sum_alphabet() {
    // e_n[A + B] = Σ e_k[A] e_{n-k}[B] with A = 1 + q finite and B = t Z
    let a = Alphabet::new(r("q + 1"), r("t"));
    for n in 1..=4 {
        let lhs = plethysm_eval(&e_n(n), &a);
        let PlethysmResult::Mixed(comps) = lhs else { panic!("mixed expected") };
        for k in 0..=n {
            let ek = plethysm_eval(&e_n(k), &Alphabet::finite(r("q + 1")));
            let ek = ek.as_scalar().unwrap().clone();
            let rest = plethysm_eval(&e_n(n - k), &Alphabet::z_times(r("t")));
            let rest = rest.into_symmetric().unwrap();
            assert_eq!(comps[n - k], rest.scale(&ek), "n={n} k={k}");
        }
        // tZ on a degree-n function multiplies it by t^n
        assert_eq!(
            plethysm_eval(&e_n(n), &Alphabet::z_times(r("t"))).into_symmetric().unwrap(),
            e_n(n).scale(&QtRat::from_poly(QtPoly::qtu(0, n as i32, 0)))
        );
    }
}

#[test]
fn skew_schur_examples() {
    assert_eq!(skew_schur(&SkewShape::straight(part(&[2]))), SymFunc::h(&[2]));
    assert_eq!(skew_schur(&SkewShape::straight(part(&[1, 1]))), SymFunc::e(&[2]));
    for n in 1..=5 {
        for lambda in sub_staircase_iter(n, 1) {
            let shape = flag_strip(&lambda, n, 1).unwrap();
            let padded = lambda.padded(n);
            let mut alpha = vec![0usize; n];
            for &x in &padded {
                alpha[x] += 1;
            }
            let alpha: Vec<usize> = alpha.into_iter().filter(|&a| a > 0).collect();
            assert_eq!(skew_schur(&shape), SymFunc::e(&alpha), "{lambda}");
        }
    }
    // skew shape with a two-cell column and a lone cell: e_2 h_1
    let sk = SkewShape::new(part(&[2, 1, 1]), part(&[1])).unwrap();
    assert_eq!(skew_schur(&sk), &SymFunc::e(&[2]) * &SymFunc::h(&[1]));
}

fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

#[test]
fn qsym_examples() {
    let mut c = QsymCoeffs::new(2);
    c.add(set(&[]), &int(1)).unwrap();
    assert_eq!(qsym_to_sym(&c).unwrap(), SymFunc::h(&[2]));

    let mut c = QsymCoeffs::new(3);
    for t in standard_tableaux(&SkewShape::straight(part(&[2, 1]))) {
        c.add(descent_set(&t, StdMode::Ordinary), &int(1)).unwrap();
    }
    assert_eq!(qsym_to_sym(&c).unwrap(), SymFunc::s(&[2, 1]));

    let mut c = QsymCoeffs::new(3);
    c.add(set(&[1]), &int(1)).unwrap();
    match qsym_to_sym(&c) {
        Err(Error::NotSymmetric { left, right, .. }) => {
            assert_eq!(Partition::from_unsorted(left.clone()), Partition::from_unsorted(right.clone()));
            assert_ne!(left, right);
        }
        other => panic!("expected NotSymmetric, got {other:?}"),
    }
    assert!(c.add(set(&[3]), &int(1)).is_err());
}

#[test]
fn schur_functions_from_descent_data() {
    for n in 1..=6 {
        for lambda in Partition::all(n) {
            let mut c = QsymCoeffs::new(n);
            for t in standard_tableaux(&SkewShape::straight(lambda.clone())) {
                c.add(descent_set(&t, StdMode::Ordinary), &int(1)).unwrap();
            }
            assert_eq!(qsym_to_sym(&c).unwrap(), SymFunc::basis_elem(Basis::S, lambda));
        }
    }
}

#[test]
fn superize_examples() {
    let s11 = SymFunc::s(&[1, 1]);
    let s2 = SymFunc::s(&[2]);
    let e = Partition::empty();
    assert_eq!(superize_coeffs(&s11)[&(e.clone(), part(&[2]))], int(1));
    assert_eq!(superize_coeffs(&s2)[&(e.clone(), part(&[2]))], int(0));
    assert_eq!(superize_coeff(&s2, &[1], &[1]).unwrap(), int(1));
    // η = ∅ recovers monomial coefficients
    let f = SymFunc::s(&[2, 1]);
    let fm = f.convert(Basis::M);
    for mu in Partition::all(3) {
        assert_eq!(superize_coeffs(&f)[&(mu.clone(), e.clone())], fm.coeff(&mu));
    }
    assert!(superize_coeff(&s2, &[1], &[]).is_err());
}

/// Content pairs with positive parts, plus a variant placing every positive
/// letter before every negative one.
fn content_pairs(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for k in 0..=n {
        for mu in compositions(k) {
            for eta in compositions(n - k) {
                out.push((mu.clone(), eta.clone()));
                let mut mu2 = mu.clone();
                mu2.extend(std::iter::repeat(0).take(eta.len()));
                let mut eta2 = vec![0; mu.len()];
                eta2.extend(eta.iter().copied());
                out.push((mu2, eta2));
            }
        }
    }
    out
}

#[test]
fn super_schur_by_enumeration() {
    for n in 1..=5 {
        for lambda in Partition::all(n) {
            let shape = SkewShape::straight(lambda.clone());
            let s = SymFunc::basis_elem(Basis::S, lambda.clone());
            for (mu, eta) in content_pairs(n) {
                let count = enumerate_fillings(&shape, &mu, &eta).unwrap().count();
                assert_eq!(
                    superize_coeff(&s, &mu, &eta).unwrap(),
                    QtRat::from_int(count),
                    "{lambda} {mu:?} {eta:?}"
                );
            }
        }
    }
}

/// Coefficient of `z^μ w^η` in `Q̃_{n,D}`: the forced weakly increasing word
/// must avoid `D` inside positive runs and hit `D` inside negative runs.
fn super_q_coeff(d: &BTreeSet<usize>, mu: &[usize], eta: &[usize]) -> bool {
    let mut word: Vec<Letter> = Vec::new();
    for k in 0..mu.len().max(eta.len()) {
        word.extend(std::iter::repeat(Letter::pos(k + 1)).take(*mu.get(k).unwrap_or(&0)));
        word.extend(std::iter::repeat(Letter::neg(k + 1)).take(*eta.get(k).unwrap_or(&0)));
    }
    (1..word.len()).all(|i| {
        let (a, b) = (word[i - 1], word[i]);
        a != b || (a.is_negative() == d.contains(&i))
    })
}

#[test]
fn quasisymmetric_superization() {
    let weights = [r("q"), r("t + 1"), r("-2")];
    for n in 1..=5 {
        let shapes = Partition::all(n);
        let mut c = QsymCoeffs::new(n);
        for (k, lambda) in shapes.iter().enumerate().take(3) {
            for t in standard_tableaux(&SkewShape::straight(lambda.clone())) {
                c.add(descent_set(&t, StdMode::Ordinary), &weights[k]).unwrap();
            }
        }
        let f = qsym_to_sym(&c).unwrap();
        for (mu, eta) in content_pairs(n) {
            let direct: QtRat = c
                .coeffs
                .iter()
                .filter(|(d, _)| super_q_coeff(d, &mu, &eta))
                .map(|(_, x)| x.clone())
                .sum();
            assert_eq!(superize_coeff(&f, &mu, &eta).unwrap(), direct, "n={n} {mu:?} {eta:?}");
        }
    }
}

#[test]
fn principal_specialization_matches_maj() {
    let alphabet = Alphabet::finite(r("1/(-t + 1)"));
    for n in 1..=6 {
        let poch = QtRat::from_poly(tt_pochhammer(n));
        for lambda in Partition::all(n) {
            let mut maj = QtPoly::zero();
            for t in standard_tableaux(&SkewShape::straight(lambda.clone())) {
                maj += &QtPoly::qtu(0, maj_tableau(&t, MajFlavor::Maj) as i32, 0);
            }
            let s = SymFunc::basis_elem(Basis::S, lambda.clone());
            let via_plethysm = plethysm_eval(&s, &alphabet).as_scalar().unwrap().clone();
            assert_eq!(&via_plethysm * &poch, QtRat::from_poly(maj.clone()), "{lambda}");
            assert_eq!(principal_specialization(&lambda), via_plethysm);
        }
    }
}

#[test]
fn json_round_trip() {
    let f = SymFunc::s(&[2, 1]).scale(&r("q + t")).checked_add(&SymFunc::s(&[3])).unwrap();
    let j = f.to_json();
    assert_eq!(j["degree"], 3);
    assert_eq!(j["basis"], "s");
    let coeffs: Vec<&str> = j["terms"].as_array().unwrap().iter().map(|t| t["coeff"].as_str().unwrap()).collect();
    assert!(coeffs.contains(&"q + t"));
    assert_eq!(SymFunc::from_json(&j).unwrap(), f);
    assert_eq!(f.to_string(), "s[3] + (q + t)*s[2,1]");
}

fn arb_symfunc(n: usize) -> impl Strategy<Value = SymFunc> {
    let k = Partition::all(n).len();
    (prop::collection::vec(-3i64..4, k), 0usize..5).prop_map(move |(cs, b)| {
        let terms = Partition::all(n).into_iter().zip(cs).map(|(l, c)| (l, QtRat::from_int(c)));
        SymFunc::from_terms(n, Basis::ALL[b], terms).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn conversion_round_trip(f in (1usize..7).prop_flat_map(arb_symfunc), b in 0usize..5) {
        let back = f.convert(Basis::ALL[b]).convert(f.basis());
        prop_assert_eq!(back.len(), f.len());
        for (l, c) in f.terms() {
            prop_assert_eq!(&back.coeff(l), c);
        }
    }

    #[test]
    fn inner_product_routes_agree((f, g) in (1usize..7).prop_flat_map(|n| (arb_symfunc(n), arb_symfunc(n)))) {
        let a = hall_inner(&f, &g).unwrap();
        prop_assert_eq!(&a, &hall_inner_schur(&f, &g).unwrap());
        prop_assert_eq!(&a, &hall_inner(&g, &f).unwrap());
    }

    #[test]
    fn omega_is_an_isometric_involution((f, g) in (1usize..7).prop_flat_map(|n| (arb_symfunc(n), arb_symfunc(n)))) {
        prop_assert_eq!(omega(&omega(&f)), f.clone());
        prop_assert_eq!(hall_inner(&omega(&f), &omega(&g)).unwrap(), hall_inner(&f, &g).unwrap());
    }
}
