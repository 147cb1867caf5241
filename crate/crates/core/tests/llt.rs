use std::collections::{BTreeMap, BTreeSet, HashSet};

use proptest::prelude::*;
use qtshuffle_core::llt::*;
use qtshuffle_core::ring::{QtPoly, QtRat};
use qtshuffle_core::shapes::*;
use qtshuffle_core::shuffle::{d_component, reduced_dinv, FlagStrip, ParkingFunction};
use qtshuffle_core::symfun::{Basis, SymFunc};

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn straight(v: &[usize]) -> SkewShape {
    SkewShape::straight(part(v))
}

fn skew(o: &[usize], i: &[usize]) -> SkewShape {
    SkewShape::new(part(o), part(i)).unwrap()
}

fn column_fill(entries: &[usize]) -> Filling {
    Filling::standard(straight(&vec![1; entries.len()]), entries).unwrap()
}

/// Core by removing ribbons geometrically until none is left.
fn core_by_removal(mu: &Partition, n: usize) -> Partition {
    let mut cur = mu.clone();
    while let Some((_, rest)) = removable_ribbons(&cur, &Partition::empty(), n).into_iter().next() {
        cur = rest;
    }
    cur
}

fn q(k: i32) -> QtRat {
    QtRat::from_poly(QtPoly::qtu(k, 0, 0))
}

#[test]
fn core_examples() {
    assert_eq!(n_core(&part(&[3, 1]), 2).unwrap().core, Partition::empty());
    assert_eq!(n_core(&part(&[2, 1]), 2).unwrap().core, part(&[2, 1]));
    assert_eq!(n_core(&part(&[2]), 3).unwrap().core, part(&[2]));
    assert_eq!(n_core(&Partition::empty(), 3).unwrap().contents, vec![0, 1, 2]);
    assert!(n_core(&part(&[2]), 1).is_err());
}

#[test]
fn core_agrees_with_ribbon_removal() {
    for n in 2..=4 {
        for size in 0..=12 {
            for mu in Partition::all(size) {
                let c = n_core(&mu, n).unwrap();
                assert_eq!(c.core, core_by_removal(&mu, n), "{mu} n={n}");
                assert!(removable_ribbons(&c.core, &Partition::empty(), n).is_empty());
                assert!(is_core_contents(&c.contents));
            }
        }
    }
}

#[test]
fn core_contents_are_addable_heads() {
    for n in 2..=4 {
        for size in 0..=10 {
            for mu in Partition::all(size) {
                let c = n_core(&mu, n).unwrap();
                // every n-ribbon addable to the core: partitions ρ ⊇ core with ρ/core a ribbon
                let mut heads = BTreeSet::new();
                for rho in Partition::all(c.core.size() + n) {
                    if !rho.contains(&c.core) {
                        continue;
                    }
                    for (r, rest) in removable_ribbons(&rho, &c.core, n) {
                        if rest == c.core {
                            heads.insert(r.content());
                        }
                    }
                }
                assert_eq!(heads, c.contents.iter().copied().collect::<BTreeSet<_>>(), "{mu} n={n}");
            }
        }
    }
}

#[test]
fn quotient_examples() {
    let t = n_quotient(&straight(&[3, 1]), 2).unwrap();
    assert_eq!(t.shapes(), &[straight(&[2]), straight(&[])]);
    assert_eq!(t.offsets(), &[0, 1]);
    let t = n_quotient(&straight(&[2, 2]), 2).unwrap();
    assert_eq!(t.shapes(), &[straight(&[1]), straight(&[1])]);
    let t = n_quotient(&skew(&[3, 1], &[3, 1]), 2).unwrap();
    assert!(t.is_empty());
    assert!(n_quotient(&skew(&[2, 1], &[1]), 2).is_err());
}

#[test]
fn quot_inverse_examples() {
    let t = ShapeTuple::straight(vec![part(&[2]), Partition::empty()], vec![0, 1]).unwrap();
    assert_eq!(quot_inverse(&t, 2).unwrap(), straight(&[3, 1]));
    let core = part(&[2, 1]);
    let c = n_core(&core, 2).unwrap();
    let empty = ShapeTuple::straight(vec![Partition::empty(); 2], c.contents).unwrap();
    assert_eq!(quot_inverse(&empty, 2).unwrap(), SkewShape::new(core.clone(), core).unwrap());
    let bad = ShapeTuple::straight(vec![Partition::empty(); 2], vec![2, 1]).unwrap();
    assert!(quot_inverse(&bad, 2).is_err());
}

#[test]
fn ribbon_contents_match_adjusted_contents() {
    for n in 2..=3 {
        for size in 0..=10 {
            for mu in Partition::all(size) {
                let core = n_core(&mu, n).unwrap().core;
                let shape = SkewShape::new(mu.clone(), core).unwrap();
                let t = n_quotient(&shape, n).unwrap();
                let mut adjusted: Vec<i64> = t.cells().into_iter().map(|(r, x)| t.adjusted_content(r, x)).collect();
                adjusted.sort_unstable();
                assert_eq!(shape.size(), n * t.size());
                for tiling in tilings(&shape, n).unwrap() {
                    let mut c: Vec<i64> = tiling.iter().map(Ribbon::content).collect();
                    c.sort_unstable();
                    assert_eq!(c, adjusted, "{mu} n={n}");
                }
            }
        }
    }
}

#[test]
fn quotient_is_a_weight_preserving_bijection() {
    fn tuples(n: usize, w: usize) -> u64 {
        // number of n-tuples of partitions of total size w
        let p: Vec<u64> = (0..=w).map(|k| Partition::all(k).len() as u64).collect();
        let mut acc = vec![0u64; w + 1];
        acc[0] = 1;
        for _ in 0..n {
            let mut next = vec![0u64; w + 1];
            for a in 0..=w {
                for b in 0..=w - a {
                    next[a + b] += acc[a] * p[b];
                }
            }
            acc = next;
        }
        acc[w]
    }
    for n in 2..=3 {
        let mut by_core: BTreeMap<(Partition, usize), BTreeSet<Vec<Partition>>> = BTreeMap::new();
        for size in 0..=16 {
            for mu in Partition::all(size) {
                let c = n_core(&mu, n).unwrap();
                let t = quotient_of(&mu, n).unwrap();
                let outers: Vec<Partition> = t.shapes().iter().map(|s| s.outer().clone()).collect();
                assert_eq!(quot_inverse(&t, n).unwrap(), SkewShape::new(mu.clone(), c.core.clone()).unwrap());
                let w = t.size();
                assert!(by_core.entry((c.core, w)).or_default().insert(outers));
            }
        }
        for ((core, w), seen) in by_core {
            if core.size() + n * w <= 16 {
                assert_eq!(seen.len() as u64, tuples(n, w), "core {core} weight {w}");
            }
        }
    }
}

#[test]
fn quotient_preserves_containment_both_ways() {
    for n in 2..=3 {
        let all: Vec<Partition> = (0..=10).flat_map(Partition::all).collect();
        let data: Vec<(Partition, Vec<Partition>)> = all
            .iter()
            .map(|mu| {
                let c = n_core(mu, n).unwrap().core;
                let t = quotient_of(mu, n).unwrap();
                (c, t.shapes().iter().map(|s| s.outer().clone()).collect())
            })
            .collect();
        for (a, mu) in all.iter().enumerate() {
            for (b, nu) in all.iter().enumerate() {
                if data[a].0 != data[b].0 {
                    continue;
                }
                let comp = data[a].1.iter().zip(&data[b].1).all(|(x, y)| x.contains(y));
                let tileable = mu.contains(nu)
                    && !tilings(&SkewShape::new(mu.clone(), nu.clone()).unwrap(), n).unwrap().is_empty();
                assert_eq!(tileable, comp, "{mu} ⊇ {nu}, n={n}");
                if comp {
                    assert!(mu.contains(nu));
                }
            }
        }
    }
}

/// Containment alone does not give containment of quotients: `(2) ⊆ (3,1)`
/// share the empty 2-core, yet `(3,1)/(2)` has no domino tiling.
#[test]
fn containment_needs_a_tiling() {
    let a = quotient_of(&part(&[3, 1]), 2).unwrap();
    let b = quotient_of(&part(&[2]), 2).unwrap();
    assert_eq!(a.shapes(), &[straight(&[2]), straight(&[])]);
    assert_eq!(b.shapes(), &[straight(&[]), straight(&[1])]);
    let shape = skew(&[3, 1], &[2]);
    assert!(tilings(&shape, 2).unwrap().is_empty());
    assert!(n_quotient(&shape, 2).is_err());
}

#[test]
fn ribbon_tableaux_examples() {
    let s = straight(&[2, 2]);
    let ts = ribbon_tableaux(&s, 2, &[1, 1]).unwrap();
    assert_eq!(ts.len(), 2);
    let spins: BTreeSet<usize> = ts.iter().map(|t| spin(t).unwrap()).collect();
    assert_eq!(spins, BTreeSet::from([0, 1]));
    let ts = ribbon_tableaux(&s, 2, &[2]).unwrap();
    assert_eq!(ts.len(), 1);
    assert!(ts[0].ribbons().iter().all(|r| r.rows() == 2));
    assert_eq!(spin(&ts[0]).unwrap(), 1);
    // a single ribbon
    for shape in [straight(&[3]), straight(&[1, 1, 1]), straight(&[2, 1]), skew(&[2, 2], &[1])] {
        assert_eq!(ribbon_tableaux(&shape, 3, &[1]).unwrap().len(), 1, "{shape}");
    }
    assert!(ribbon_tableaux(&straight(&[2, 1]), 2, &[1]).is_err());
}

#[test]
fn spin_examples() {
    for n in 2..=4 {
        let col = straight(&vec![1; n]);
        assert_eq!(tilings(&col, n).unwrap().len(), 1);
        let t = &standard_ribbon_tableaux(&col, n).unwrap()[0];
        assert_eq!(spin(t).unwrap(), 0);
    }
    let s = straight(&[2, 2]);
    for t in standard_ribbon_tableaux(&s, 2).unwrap() {
        let horizontal = t.ribbons().iter().all(|r| r.rows() == 1);
        assert_eq!(spin(&t).unwrap(), if horizontal { 0 } else { 1 });
    }
}

/// Shapes of size 2n with exactly two tilings: the horizontal official
/// tiling has one more row per ribbon, so spin one more.
#[test]
fn two_ribbon_shapes() {
    for n in 2..=4 {
        for size in 0..=2 * n + 6 {
            for mu in Partition::all(size) {
                for nu in mu.subpartitions() {
                    if mu.size() != nu.size() + 2 * n {
                        continue;
                    }
                    let shape = SkewShape::new(mu.clone(), nu.clone()).unwrap();
                    let Ok(all) = tilings(&shape, n) else { continue };
                    if all.len() != 2 {
                        continue;
                    }
                    let hor = official_tiling(&shape, n).unwrap();
                    let other: Vec<Ribbon> = all.into_iter().find(|t| {
                        let mut h = hor.clone();
                        h.sort();
                        *t != h
                    }).unwrap();
                    let mut by_content: BTreeMap<i64, usize> = other.iter().map(|r| (r.content(), r.rows())).collect();
                    for r in &hor {
                        assert_eq!(by_content.remove(&r.content()), Some(r.rows() - 1), "{shape}");
                    }
                    let s_h: usize = hor.iter().map(Ribbon::spin).sum();
                    let s_v: usize = other.iter().map(Ribbon::spin).sum();
                    assert_eq!(s_h, s_v + 2);
                }
            }
        }
    }
}

#[test]
fn official_tiling_matches_quotient_strip_test() {
    for n in 2..=3 {
        for size in 0..=9 {
            for mu in Partition::all(size) {
                for nu in mu.subpartitions() {
                    let shape = SkewShape::new(mu.clone(), nu.clone()).unwrap();
                    if shape.size() % n != 0 || n_core(&mu, n).unwrap() != n_core(&nu, n).unwrap() {
                        continue;
                    }
                    let Ok(t) = n_quotient(&shape, n) else {
                        assert!(official_tiling(&shape, n).is_err());
                        continue;
                    };
                    let strip = t.shapes().iter().all(SkewShape::is_horizontal_strip);
                    let official = official_tiling(&shape, n);
                    assert_eq!(official.is_ok(), strip, "{shape} n={n}");
                    if let Ok(o) = official {
                        let c: Vec<i64> = o.iter().map(Ribbon::content).collect();
                        assert!(c.windows(2).all(|w| w[0] < w[1]));
                    }
                }
            }
        }
    }
}

#[test]
fn ribbon_tableaux_validate_and_standardize() {
    let shape = skew(&[4, 3, 3], &[1]);
    for content in [vec![1, 1, 1], vec![2, 1], vec![1, 2], vec![3]] {
        for t in ribbon_tableaux(&shape, 3, &content).unwrap() {
            let again = RibbonTableau::new(shape.clone(), 3, t.ribbons().to_vec(), t.labels().to_vec()).unwrap();
            assert_eq!(again, t);
            let s = t.standardize();
            assert_eq!(s.tiling(), t.tiling());
            assert_eq!(spin(&s).unwrap(), spin(&t).unwrap());
            assert!(s.is_standard());
        }
    }
}

#[test]
fn ribbon_tableaux_biject_with_quotient_tableaux() {
    for n in 2..=3 {
        for (o, i) in [(vec![4, 4], vec![]), (vec![3, 3, 2, 1, 1], vec![1, 1]), (vec![5, 3, 1], vec![2])] {
            let shape = skew(&o, &i);
            if shape.size() % n != 0 || n_core(shape.outer(), n).unwrap() != n_core(shape.inner(), n).unwrap() {
                continue;
            }
            let k = shape.size() / n;
            for content in compositions(k) {
                let ts = ribbon_tableaux(&shape, n, &content).unwrap();
                let tuple = n_quotient(&shape, n).unwrap();
                let ss = tuple_ssyt(&tuple, &content).unwrap();
                assert_eq!(ts.len(), ss.len(), "{shape} n={n} {content:?}");
                let images: HashSet<Vec<Filling>> = ts.iter().map(|t| t.quotient().unwrap().1).collect();
                assert_eq!(images, ss.into_iter().collect::<HashSet<_>>());
            }
        }
    }
}

#[test]
fn tuple_inv_examples() {
    let t = ShapeTuple::straight(vec![part(&[1]), part(&[1])], vec![0, 1]).unwrap();
    assert_eq!(tuple_inv(&t, &[column_fill(&[2]), column_fill(&[1])]).unwrap(), 1);
    assert_eq!(tuple_inv(&t, &[column_fill(&[1]), column_fill(&[2])]).unwrap(), 0);
    let one = ShapeTuple::straight(vec![part(&[1])], vec![0]).unwrap();
    assert_eq!(tuple_inv(&one, &[column_fill(&[1])]).unwrap(), 0);
}

fn fig2() -> Filling {
    let (_, t) = "46772121".parse::<ParkingFunction>().unwrap().encode();
    t
}

#[test]
fn figure_two_tuple() {
    let t = fig2();
    let (tuple, fills) = d_to_llt_filling(&t, 1).unwrap();
    assert_eq!(tuple.offsets(), &[-48, -39, -46, -45, -52, -51, -42, -49]);
    let expect: Vec<Vec<usize>> = vec![vec![6, 8], vec![5, 7], vec![], vec![1], vec![], vec![2], vec![3, 4], vec![]];
    for (f, e) in fills.iter().zip(&expect) {
        assert_eq!(f.entries().iter().map(|l| l.value()).collect::<Vec<_>>(), *e);
    }
    assert_eq!(tuple_inv(&tuple, &fills).unwrap(), 8);
    assert_eq!(reduced_dinv(&t, 1).unwrap(), (0, 8));
}

#[test]
fn d_to_llt_examples() {
    let (t, e) = d_to_llt(&part(&[1]), 2, 1).unwrap();
    assert_eq!(t.shapes(), &[straight(&[1]), straight(&[1])]);
    assert_eq!(t.offsets(), &[-2, -1]);
    assert_eq!(e, 0);
    assert!(d_to_llt(&part(&[2]), 2, 1).is_err());
    // m = 2: 2n + 1 components, adjusted contents -(2n+1) i - n j
    let lambda = part(&[3, 1]);
    let (t, _) = d_to_llt(&lambda, 3, 2).unwrap();
    assert_eq!(t.len(), 7);
    let strip = FlagStrip::new(&lambda, 3, 2).unwrap();
    let f = Filling::standard(strip.shape(), &[1, 2, 3]).unwrap();
    let (_, fills) = d_to_llt_filling(&f, 2).unwrap();
    for (i, &(r, j)) in strip.cells().iter().enumerate() {
        let k = fills.iter().position(|g| g.entries().contains(&Letter::pos(i + 1))).unwrap();
        let x = fills[k].iter().find(|(_, l)| *l == Letter::pos(i + 1)).unwrap().0;
        assert_eq!(t.adjusted_content(k, x), -7 * r as i64 - 3 * j as i64);
    }
}

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

#[test]
fn dinv_transports_to_tuple_inversions() {
    for (n_max, m) in [(4, 1), (4, 2), (3, 3)] {
        for n in 1..=n_max {
            let contents = packed_contents(n);
            for lambda in sub_staircase_iter(n, m) {
                let strip = FlagStrip::new(&lambda, n, m).unwrap();
                for (mu, eta) in &contents {
                    for t in enumerate_fillings(&strip.shape(), mu, eta).unwrap() {
                        let (tuple, fills) = d_to_llt_filling(&t, m).unwrap();
                        let (_, r) = reduced_dinv(&t, m).unwrap();
                        assert_eq!(tuple_inv(&tuple, &fills).unwrap(), r, "{t} m={m}");
                    }
                }
            }
        }
    }
}

#[test]
fn d_components_are_inversion_series() {
    for (n, m) in [(3, 1), (4, 1), (3, 2)] {
        for lambda in sub_staircase_iter(n, m) {
            let (tuple, e) = d_to_llt(&lambda, n, m).unwrap();
            let g = inv_generating_function(&tuple).unwrap();
            let lifted = g.scale(&QtRat::from_poly(QtPoly::qtu(e as i32, 0, 0)));
            assert_eq!(lifted, d_component(&lambda, n, m).unwrap(), "{lambda}");
        }
    }
}

#[test]
fn llt_examples() {
    let g = llt_poly(&straight(&[2, 2]), 2).unwrap().convert(Basis::S);
    let expect = SymFunc::from_terms(2, Basis::S, [(part(&[1, 1]), q(0)), (part(&[2]), q(1))]).unwrap();
    assert_eq!(g, expect);
    assert_eq!(llt_poly_by_ribbons(&straight(&[2, 2]), 2).unwrap(), expect);
    for n in 2..=4 {
        for shape in [straight(&[n]), straight(&vec![1; n])] {
            assert_eq!(llt_poly(&shape, n).unwrap(), SymFunc::s(&[1]));
            assert_eq!(llt_poly_by_ribbons(&shape, n).unwrap(), SymFunc::s(&[1]));
        }
    }
}

#[test]
fn spin_is_shape_constant_minus_inversions() {
    for n in 2..=3 {
        for size in 0..=9 {
            for mu in Partition::all(size) {
                for nu in mu.subpartitions() {
                    let shape = SkewShape::new(mu.clone(), nu.clone()).unwrap();
                    if shape.size() % n != 0 || n_core(&mu, n).unwrap() != n_core(&nu, n).unwrap() {
                        continue;
                    }
                    let k = shape.size() / n;
                    let mut es = BTreeSet::new();
                    for content in compositions(k) {
                        for t in ribbon_tableaux(&shape, n, &content).unwrap() {
                            let (tuple, s) = t.quotient().unwrap();
                            es.insert(spin(&t).unwrap() + tuple_inv(&tuple, &s).unwrap());
                        }
                    }
                    assert!(es.len() <= 1, "{shape} n={n}: {es:?}");
                }
            }
        }
    }
}

#[test]
fn llt_routes_agree_and_are_schur_positive() {
    for n in 2..=3 {
        for size in 0..=8 {
            for mu in Partition::all(size) {
                let core = n_core(&mu, n).unwrap().core;
                let shape = SkewShape::new(mu.clone(), core).unwrap();
                let g = llt_poly(&shape, n).unwrap();
                assert_eq!(g, llt_poly_by_ribbons(&shape, n).unwrap(), "{mu}");
                for (_, c) in g.convert(Basis::S).terms() {
                    let p = c.as_poly().unwrap();
                    assert!(p.terms().all(|(e, c)| e[0] >= 0 && *c > 0.into()), "{mu}: {g}");
                }
            }
        }
    }
}

#[test]
fn normalization_keeps_inversions() {
    let (tuple, fills) = d_to_llt_filling(&fig2(), 1).unwrap();
    let (norm, shift) = tuple.normalized();
    assert!(is_core_contents(norm.offsets()));
    let moved: Vec<Filling> = (0..8).map(|r| fills[(r as i64 - shift).rem_euclid(8) as usize].clone()).collect();
    assert_eq!(tuple_inv(&norm, &moved).unwrap(), 8);
    let shape = tuple.realize().unwrap();
    assert_eq!(shape.size(), 64);
    assert_eq!(n_quotient(&shape, 8).unwrap(), norm);
}

#[test]
fn rendering() {
    let t = n_quotient(&straight(&[3, 1]), 2).unwrap();
    assert_eq!(t.to_string(), "0: (2) @ 0\n1: ∅ @ 1");
    let r = &ribbon_tableaux(&straight(&[2, 2]), 2, &[2]).unwrap()[0];
    assert_eq!(r.to_string(), "(2,2) n=2\n1: (1,0) (0,0) spin 1\n1: (1,1) (0,1) spin 1");
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..7, 0..7).prop_map(Partition::from_unsorted)
}

proptest! {
    #[test]
    fn quotient_round_trip(mu in partition_strategy(), n in 2usize..5) {
        let t = quotient_of(&mu, n).unwrap();
        let core = n_core(&mu, n).unwrap().core;
        prop_assert_eq!(quot_inverse(&t, n).unwrap().outer().clone(), mu.clone());
        prop_assert_eq!(mu.size(), core.size() + n * t.size());
    }

    #[test]
    fn adjusted_content_recovers_component(mu in partition_strategy(), n in 2usize..5) {
        let t = quotient_of(&mu, n).unwrap();
        for (r, x) in t.cells() {
            prop_assert_eq!(t.adjusted_content(r, x).rem_euclid(n as i64), r as i64);
        }
    }
}
