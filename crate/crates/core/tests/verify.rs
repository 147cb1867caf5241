use qtshuffle_core::ring::{QtPoly, QtRat};
use qtshuffle_core::shuffle::compute_d;
use qtshuffle_core::symfun::{Basis, SymFunc};
use qtshuffle_core::verify::*;

#[test]
fn main_conjecture_small() {
    for (n, m) in [(1, 1), (2, 1), (3, 1), (4, 1), (2, 2)] {
        let r = check_main_conjecture(n, m);
        assert_eq!(r.status, Status::Pass, "{r}");
        assert!(r.witness.is_none());
        assert_eq!(r.name, "main");
        assert_eq!(r.params, Params::new(n, m));
    }
}

#[test]
fn specializations_are_four_named_checks() {
    let rs = check_specializations(3, 2);
    let names: Vec<&str> = rs.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names, ["spec_q1", "spec_t0", "spec_q0", "spec_t_inv_q"]);
    assert!(rs.iter().all(|r| r.status == Status::Pass), "{rs:?}");
}

#[test]
fn enk_and_combinatorial_checks() {
    for r in [
        check_enk(2, 1),
        check_enk(3, 2),
        check_enk_identities(4),
        check_hilbert_dimension(5),
        check_catalan_dimension(6),
        check_component_symmetry(4, 2),
        check_schur_positivity(4, 2),
        check_catalan_hook(6, 3),
        check_fermionic(4),
        check_schroder(4),
        check_spin_inv(2, 8),
        check_dinv_transport(3, 2),
        check_llt_positivity(3, 9),
        check_coherence(4, 1),
    ] {
        assert_eq!(r.status, Status::Pass, "{r}");
    }
}

#[test]
fn bad_parameters_fail_with_a_witness() {
    let r = check_main_conjecture(0, 1);
    assert_eq!(r.status, Status::Fail);
    assert!(r.witness.unwrap().starts_with("error:"));
    let r = check_spin_inv(1, 4);
    assert_eq!(r.status, Status::Fail);
}

#[test]
fn checks_without_m_are_skipped_for_other_m() {
    let r = Job::new(Check::Fermionic, 3, 2).run();
    assert_eq!(r.status, Status::Skipped);
    assert!(r.passed());
    assert!(Check::Main.takes_m());
}

#[test]
fn perturbation_is_caught_with_a_witness() {
    let lhs = compute_d(3, 1).unwrap();
    let bump = SymFunc::from_terms(3, Basis::S, [(qtshuffle_core::shapes::Partition::row(3), QtRat::from_poly(QtPoly::t()))])
        .unwrap();
    let perturbed = &lhs + &bump;
    let good = compare("main", Params::new(3, 1), &lhs, &lhs);
    let bad = compare("main", Params::new(3, 1), &lhs, &perturbed);
    assert_eq!(good.status, Status::Pass);
    assert_eq!(bad.status, Status::Fail);
    let w = bad.witness.unwrap();
    assert!(w.starts_with("difference: s(3): -t"), "{w}");

    let mut results = run_jobs(&[Job::new(Check::Main, 2, 1), Job::new(Check::Coherence, 3, 1)]);
    results.push(compare("main", Params::new(3, 1), &lhs, &perturbed));
    let failing: Vec<&CheckResult> = results.iter().filter(|r| !r.passed()).collect();
    assert_eq!(failing.len(), 1);
    assert!(!all_passed(&results));
}

#[test]
fn witnesses_list_the_smallest_partition_first() {
    let a = SymFunc::s(&[2, 1]);
    let b = SymFunc::s(&[1, 1, 1]);
    let w = symfunc_witness(&a, &b).unwrap();
    assert!(w.starts_with("difference: s(1,1,1): -1; s(2,1): 1"), "{w}");
    assert!(symfunc_witness(&a, &a.convert(Basis::M)).is_none());
    assert_eq!(poly_witness(&QtPoly::q(), &QtPoly::q()), None);
}

#[test]
fn quick_suite_passes_in_job_order_and_is_reproducible() {
    let js = jobs(Profile::Quick);
    let first = run_jobs(&js);
    assert!(all_passed(&first), "{:?}", first.iter().filter(|r| !r.passed()).collect::<Vec<_>>());
    for (j, r) in js.iter().zip(&first) {
        assert_eq!(j.check.name(), r.name);
        assert_eq!(j.n, r.params.n);
    }
    let again = run_jobs(&js[..20]);
    for (a, b) in first.iter().zip(&again) {
        assert_eq!((a.status, &a.witness), (b.status, &b.witness));
    }
    let json = report_json(&first);
    let entry = &json[0];
    assert_eq!(entry["name"], "main");
    assert_eq!(entry["status"], "pass");
    assert_eq!(entry["params"]["n"], 1);
    assert!(entry.get("witness").is_none());
    assert!(entry["elapsed"].is_f64());
}

#[test]
fn names_parse_back() {
    for c in Check::ALL {
        assert_eq!(c.name().parse::<Check>().unwrap(), c);
    }
    assert!("nope".parse::<Check>().is_err());
    assert_eq!("full".parse::<Profile>().unwrap(), Profile::Full);
    let full = jobs(Profile::Full);
    assert!(full.contains(&Job::new(Check::Main, 6, 1)));
    assert!(full.contains(&Job::ribbon(Check::SpinInv, 3, 12)));
    assert!(!full.contains(&Job::new(Check::Main, 7, 1)));
}
