//! Named, parameterized identity checks with exact comparisons.

mod checks;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::ring::QtPoly;
use crate::symfun::{Basis, SymFunc};
use crate::{Error, Result};

pub use checks::{
    check_catalan_dimension, check_catalan_hook, check_coherence, check_component_symmetry, check_dinv_transport,
    check_enk, check_enk_identities, check_fermionic, check_hilbert_dimension, check_llt_positivity,
    check_main_conjecture, check_q_one, check_q_zero, check_schroder, check_schur_positivity, check_specializations,
    check_spin_inv, check_t_inv_q, check_t_zero,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub extra: BTreeMap<String, String>,
}

impl Params {
    pub fn new(n: usize, m: usize) -> Self {
        Params { n, m, extra: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.extra.insert(key.to_string(), value.to_string());
        self
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} m={}", self.n, self.m)?;
        for (k, v) in &self.extra {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

/// Outcome of one check. A failing result always carries a witness.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub params: Params,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Seconds.
    pub elapsed: f64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub(crate) fn skipped(name: &str, params: Params, why: &str) -> Self {
        CheckResult {
            name: name.into(),
            params,
            status: Status::Skipped,
            witness: Some(why.into()),
            elapsed: 0.0,
        }
    }

    /// Run `body`: `Ok(None)` passes, `Ok(Some(w))` fails with witness `w`,
    /// and an error fails with the error as witness.
    pub(crate) fn timed(name: &str, params: Params, body: impl FnOnce() -> Result<Option<String>>) -> Self {
        let start = Instant::now();
        let out = body();
        let elapsed = start.elapsed().as_secs_f64();
        let (status, witness) = match out {
            Ok(None) => (Status::Pass, None),
            Ok(Some(w)) => (Status::Fail, Some(w)),
            Err(e) => (Status::Fail, Some(format!("error: {e}"))),
        };
        CheckResult { name: name.into(), params, status, witness, elapsed }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} [{}] {:.3}s", self.status, self.name, self.params, self.elapsed)?;
        if let Some(w) = &self.witness {
            for line in w.lines() {
                write!(f, "\n    {line}")?;
            }
        }
        Ok(())
    }
}

/// `None` when equal; otherwise both sides and their Schur-basis difference,
/// smallest partition first.
pub fn symfunc_witness(lhs: &SymFunc, rhs: &SymFunc) -> Option<String> {
    if lhs == rhs {
        return None;
    }
    let l = lhs.convert(Basis::S);
    let r = rhs.convert(Basis::S);
    let diff = if l.degree() == r.degree() {
        let d = &l - &r;
        d.terms().map(|(p, c)| format!("s{p}: {c}")).collect::<Vec<_>>().join("; ")
    } else {
        format!("degrees {} and {}", l.degree(), r.degree())
    };
    Some(format!("difference: {diff}\nlhs: {l}\nrhs: {r}"))
}

pub fn poly_witness(lhs: &QtPoly, rhs: &QtPoly) -> Option<String> {
    if lhs == rhs {
        return None;
    }
    Some(format!("difference: {}\nlhs: {lhs}\nrhs: {rhs}", lhs - rhs))
}

/// Compare two symmetric functions as a named check.
pub fn compare(name: &str, params: Params, lhs: &SymFunc, rhs: &SymFunc) -> CheckResult {
    CheckResult::timed(name, params, || Ok(symfunc_witness(lhs, rhs)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Main,
    SpecQOne,
    SpecTZero,
    SpecQZero,
    SpecTInvQ,
    Enk,
    EnkIdentities,
    HilbertDimension,
    CatalanDimension,
    ComponentSymmetry,
    SchurPositivity,
    CatalanHook,
    Fermionic,
    Schroder,
    SpinInv,
    DinvTransport,
    LltPositivity,
    Coherence,
}

impl Check {
    pub const ALL: [Check; 18] = [
        Check::Main,
        Check::SpecQOne,
        Check::SpecTZero,
        Check::SpecQZero,
        Check::SpecTInvQ,
        Check::Enk,
        Check::EnkIdentities,
        Check::HilbertDimension,
        Check::CatalanDimension,
        Check::ComponentSymmetry,
        Check::SchurPositivity,
        Check::CatalanHook,
        Check::Fermionic,
        Check::Schroder,
        Check::SpinInv,
        Check::DinvTransport,
        Check::LltPositivity,
        Check::Coherence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Main => "main",
            Check::SpecQOne => "spec_q1",
            Check::SpecTZero => "spec_t0",
            Check::SpecQZero => "spec_q0",
            Check::SpecTInvQ => "spec_t_inv_q",
            Check::Enk => "enk",
            Check::EnkIdentities => "enk_identities",
            Check::HilbertDimension => "hilbert_dimension",
            Check::CatalanDimension => "catalan_dimension",
            Check::ComponentSymmetry => "component_symmetry",
            Check::SchurPositivity => "schur_positivity",
            Check::CatalanHook => "catalan_hook",
            Check::Fermionic => "fermionic",
            Check::Schroder => "schroder",
            Check::SpinInv => "spin_inv",
            Check::DinvTransport => "dinv_transport",
            Check::LltPositivity => "llt_positivity",
            Check::Coherence => "coherence",
        }
    }

    pub fn takes_m(self) -> bool {
        !matches!(
            self,
            Check::EnkIdentities
                | Check::HilbertDimension
                | Check::CatalanDimension
                | Check::Fermionic
                | Check::Schroder
                | Check::SpinInv
                | Check::LltPositivity
        )
    }

    /// Checks whose `n` is a ribbon length and whose size bound is a separate parameter.
    pub fn is_ribbon_check(self) -> bool {
        matches!(self, Check::SpinInv | Check::LltPositivity)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

impl FromStr for Profile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            other => Err(Error::Parse(format!("unknown profile {other:?}"))),
        }
    }
}

impl Profile {
    /// Size bound `|μ|` for the ribbon checks.
    pub fn ribbon_size(self, check: Check) -> usize {
        match (self, check) {
            (Profile::Quick, _) => 8,
            (Profile::Full, Check::LltPositivity) => 10,
            (Profile::Full, _) => 12,
        }
    }
}

/// One scheduled check. For ribbon checks `n` is the ribbon length and
/// `size` bounds `|μ|`; otherwise `size` is unused.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Job {
    pub check: Check,
    pub n: usize,
    pub m: usize,
    pub size: usize,
}

impl Job {
    pub fn new(check: Check, n: usize, m: usize) -> Self {
        Job { check, n, m, size: 0 }
    }

    pub fn ribbon(check: Check, n: usize, size: usize) -> Self {
        Job { check, n, m: 1, size }
    }

    pub fn run(&self) -> CheckResult {
        let (n, m) = (self.n, self.m);
        if m != 1 && !self.check.takes_m() {
            return CheckResult::skipped(self.check.name(), Params::new(n, m), "defined for m = 1 only");
        }
        match self.check {
            Check::Main => check_main_conjecture(n, m),
            Check::SpecQOne => check_q_one(n, m),
            Check::SpecTZero => check_t_zero(n, m),
            Check::SpecQZero => check_q_zero(n, m),
            Check::SpecTInvQ => check_t_inv_q(n, m),
            Check::Enk => check_enk(n, m),
            Check::EnkIdentities => check_enk_identities(n),
            Check::HilbertDimension => check_hilbert_dimension(n),
            Check::CatalanDimension => check_catalan_dimension(n),
            Check::ComponentSymmetry => check_component_symmetry(n, m),
            Check::SchurPositivity => check_schur_positivity(n, m),
            Check::CatalanHook => check_catalan_hook(n, m),
            Check::Fermionic => check_fermionic(n),
            Check::Schroder => check_schroder(n),
            Check::SpinInv => check_spin_inv(n, self.size),
            Check::DinvTransport => check_dinv_transport(n, m),
            Check::LltPositivity => check_llt_positivity(n, self.size),
            Check::Coherence => check_coherence(n, m),
        }
    }
}

fn grid(check: Check, ns: std::ops::RangeInclusive<usize>, ms: std::ops::RangeInclusive<usize>) -> Vec<Job> {
    ms.flat_map(|m| ns.clone().map(move |n| Job::new(check, n, m))).collect()
}

/// The jobs of a profile, in report order.
pub fn jobs(profile: Profile) -> Vec<Job> {
    use Check::*;
    let mut out = Vec::new();
    match profile {
        Profile::Quick => {
            for c in Check::ALL {
                match c {
                    EnkIdentities | HilbertDimension | CatalanDimension | Fermionic | Schroder => {
                        out.extend(grid(c, 1..=4, 1..=1))
                    }
                    SpinInv | LltPositivity => {
                        out.extend((2..=3).map(|n| Job::ribbon(c, n, profile.ribbon_size(c))))
                    }
                    _ => out.extend(grid(c, 1..=4, 1..=2)),
                }
            }
        }
        Profile::Full => {
            out.extend(grid(Main, 1..=6, 1..=1));
            out.extend([(2, 2), (3, 2), (4, 2), (2, 3)].map(|(n, m)| Job::new(Main, n, m)));
            out.extend(grid(SpecQOne, 1..=7, 1..=2));
            out.extend(grid(SpecTZero, 1..=6, 1..=3));
            out.extend(grid(SpecQZero, 1..=6, 1..=2));
            out.extend(grid(SpecTInvQ, 1..=5, 1..=2));
            out.extend(grid(Enk, 1..=4, 1..=2));
            out.extend(grid(EnkIdentities, 1..=5, 1..=1));
            out.extend(grid(HilbertDimension, 1..=7, 1..=1));
            out.extend(grid(CatalanDimension, 1..=8, 1..=1));
            out.extend(grid(ComponentSymmetry, 1..=6, 1..=1));
            out.extend(grid(ComponentSymmetry, 1..=4, 2..=3));
            out.extend(grid(SchurPositivity, 1..=6, 1..=2));
            out.extend(grid(CatalanHook, 1..=8, 1..=3));
            out.extend(grid(Fermionic, 1..=6, 1..=1));
            out.extend(grid(Schroder, 1..=6, 1..=1));
            out.extend((2..=3).map(|n| Job::ribbon(SpinInv, n, profile.ribbon_size(SpinInv))));
            out.extend(grid(DinvTransport, 1..=5, 1..=2));
            out.extend((2..=3).map(|n| Job::ribbon(LltPositivity, n, profile.ribbon_size(LltPositivity))));
            out.extend(grid(Coherence, 1..=5, 1..=1));
            out.extend(grid(Coherence, 1..=4, 2..=2));
        }
    }
    out
}

/// Run jobs on the rayon pool; results come back in job order.
pub fn run_jobs(jobs: &[Job]) -> Vec<CheckResult> {
    jobs.par_iter().map(Job::run).collect()
}

pub fn run_suite(profile: Profile) -> Vec<CheckResult> {
    run_jobs(&jobs(profile))
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(CheckResult::passed)
}

/// `[{name, params, status, elapsed, witness?}]`.
pub fn report_json(results: &[CheckResult]) -> serde_json::Value {
    serde_json::to_value(results).expect("results serialize")
}
