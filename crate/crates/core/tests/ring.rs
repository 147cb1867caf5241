use num_bigint::BigInt;
use proptest::prelude::*;
use qtshuffle_core::ring::*;

fn p(s: &str) -> QtPoly {
    s.parse().unwrap()
}

/// `[n choose k]_q` as the generating function of k-subsets of {1..n} by
/// `sum(S) - k(k+1)/2`.
fn subset_oracle(n: usize, k: usize) -> QtPoly {
    let mut acc = QtPoly::zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let s: usize = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).sum();
        acc += &QtPoly::qtu((s - k * (k + 1) / 2) as i32, 0, 0);
    }
    acc
}

#[test]
fn pochhammer_examples() {
    assert_eq!(q_pochhammer(0), QtPoly::one());
    assert_eq!(q_pochhammer(1), p("1 - u"));
    assert_eq!(q_pochhammer(2), p("1 - u - u*q + u^2*q"));
}

#[test]
fn q_binomial_examples() {
    assert_eq!(q_binomial(2, 1), p("1 + q"));
    assert_eq!(q_binomial(4, 2), p("1 + q + 2*q^2 + q^3 + q^4"));
    assert_eq!(q_binomial(7, 0), QtPoly::one());
    assert_eq!(q_binomial(3, 5), QtPoly::zero());
}

#[test]
fn q_binomial_matches_subset_oracle() {
    for n in 0..=9 {
        for k in 0..=n {
            assert_eq!(q_binomial(n, k), subset_oracle(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn q_binomial_is_pochhammer_quotient() {
    for n in 0..=7usize {
        for k in 0..=n {
            let top = pochhammer(&QtPoly::qtu((n - k + 1) as i32, 0, 0), &QtPoly::q(), k);
            let r = QtRat::new(top, qq_pochhammer(k)).unwrap();
            assert_eq!(r.as_poly(), Some(&q_binomial(n, k)));
        }
    }
}

#[test]
fn q_multinomial_examples() {
    assert_eq!(q_multinomial(2, &[1, 1]).unwrap(), p("1 + q"));
    assert_eq!(q_multinomial(3, &[1, 1, 1]).unwrap(), &p("1 + q") * &p("1 + q + q^2"));
    assert_eq!(q_multinomial(5, &[5]).unwrap(), QtPoly::one());
    assert!(q_multinomial(4, &[1, 2]).is_err());
}

#[test]
fn normalize_examples() {
    let r = QtRat::new(p("q^2 - 1"), p("q - 1")).unwrap();
    assert_eq!(r.as_poly(), Some(&p("q + 1")));
    let z = QtRat::new(QtPoly::zero(), p("1 - t")).unwrap();
    assert!(z.is_zero());
    assert!(z.den().is_one());
    let r = QtRat::new(&p("1 - q^3") * &p("1 - t"), &p("1 - q") * &p("1 - t")).unwrap();
    assert_eq!(r.as_poly(), Some(&p("1 + q + q^2")));
    assert!(QtRat::new(QtPoly::one(), QtPoly::zero()).is_err());
}

#[test]
fn normalize_canonical_denominator() {
    let r = QtRat::new(p("2"), p("2 - 2*q")).unwrap();
    assert_eq!(r.num(), &p("-1"));
    assert_eq!(r.den(), &p("q - 1"));
    // monomial factors move to the numerator
    let r = QtRat::new(p("1"), p("q^2 - q^3")).unwrap();
    assert_eq!(r.den(), &p("q - 1"));
    assert_eq!(r.num(), &p("-q^-2"));
    // partial cancellation in two variables
    let r = QtRat::new(&p("q - t") * &p("1 + q"), &p("q - t") * &p("1 - q*t")).unwrap();
    assert_eq!(r.num(), &p("-1 - q"));
    assert_eq!(r.den(), &p("q*t - 1"));
}

#[test]
fn canonical_rendering_round_trips() {
    let x = p("3*q^2*t - q*u^-1 + 7 - t^4");
    assert_eq!(x.to_string(), "3*q^2*t - q*u^-1 - t^4 + 7");
    assert_eq!(x.to_string().parse::<QtPoly>().unwrap(), x);
    let r = QtRat::new(p("1"), p("1 - q")).unwrap();
    assert_eq!(r.to_string(), "(-1)/(q - 1)");
    assert_eq!(r.to_string().parse::<QtRat>().unwrap(), r);
    assert_eq!("1/q".parse::<QtRat>().unwrap(), QtRat::from_poly(p("q^-1")));
}

#[test]
fn substitutions() {
    let x = p("q^2*t + q*t^3 - 5");
    assert_eq!(x.subs_monomial(T, [-1, 0, 0]), p("q + q^-2 - 5"));
    assert_eq!(x.subs_monomial(Q, [0, 0, 0]), p("t + t^3 - 5"));
    assert_eq!(x.subs_zero(T).unwrap(), p("-5"));
    assert_eq!(x.swap_qt(), p("t^2*q + t*q^3 - 5"));
    assert_eq!(x.frobenius(2), p("q^4*t^2 + q^2*t^6 - 5"));
    assert!(p("t^-1").subs_zero(T).is_err());
}

fn arb_poly() -> impl Strategy<Value = QtPoly> {
    prop::collection::vec(((-2i32..4, 0i32..3, 0i32..2), -5i64..6), 0..6).prop_map(|v| {
        QtPoly::from_terms(v.into_iter().map(|((a, b, c), k)| ([a, b, c], k)))
    })
}

fn arb_nonneg_poly() -> impl Strategy<Value = QtPoly> {
    prop::collection::vec(((0i32..3, 0i32..3), -3i64..4), 1..4).prop_map(|v| {
        QtPoly::from_terms(v.into_iter().map(|((a, b), k)| ([a, b, 0], k)))
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!(!(&a - &a).terms().any(|(_, c)| c == &BigInt::from(0)));
        prop_assert_eq!((&a * &b).eval_one(), a.eval_one() * b.eval_one());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn q_binomial_symmetry_and_pascal(n in 1usize..12, k in 0usize..12) {
        prop_assume!(k <= n);
        prop_assert_eq!(q_binomial(n, k), q_binomial(n, n - k));
        if k >= 1 {
            let rhs = &q_binomial(n - 1, k - 1) + &(&QtPoly::qtu(k as i32, 0, 0) * &q_binomial(n - 1, k));
            prop_assert_eq!(q_binomial(n, k), rhs);
        }
    }

    #[test]
    fn q_multinomial_permutation_invariant(mut ks in prop::collection::vec(0usize..4, 1..5), seed in any::<u64>()) {
        let n: usize = ks.iter().sum();
        let before = q_multinomial(n, &ks).unwrap();
        let len = ks.len();
        ks.rotate_left((seed as usize) % len);
        if len > 1 { ks.swap(0, (seed as usize / 7) % len); }
        prop_assert_eq!(q_multinomial(n, &ks).unwrap(), before);
    }

    #[test]
    fn normalize_is_idempotent_congruence(a in arb_nonneg_poly(), b in arb_nonneg_poly(), g in arb_nonneg_poly(), c in arb_nonneg_poly()) {
        prop_assume!(!b.is_zero() && !g.is_zero());
        let x = QtRat::new(a.clone(), b.clone()).unwrap();
        let y = QtRat::new(&a * &g, &b * &g).unwrap();
        let xn = x.normalize();
        prop_assert_eq!(xn.num(), x.num());
        prop_assert_eq!(xn.den(), x.den());
        prop_assert_eq!(x.num(), y.num());
        prop_assert_eq!(x.den(), y.den());
        let cc = QtRat::from_poly(c);
        let lhs = &x * &cc;
        let rhs = &y * &cc;
        prop_assert_eq!(lhs.num(), rhs.num());
        prop_assert_eq!(lhs.den(), rhs.den());
    }

    #[test]
    fn field_operations_consistent(a in arb_nonneg_poly(), b in arb_nonneg_poly(), c in arb_nonneg_poly(), d in arb_nonneg_poly()) {
        prop_assume!(!b.is_zero() && !d.is_zero());
        let x = QtRat::new(a, b).unwrap();
        let y = QtRat::new(c, d).unwrap();
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&(&x * &y) / &y, x.clone());
        }
    }
}
