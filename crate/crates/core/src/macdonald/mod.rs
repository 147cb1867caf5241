//! Modified Macdonald polynomials `H̃_μ` and the operators diagonal in them.

mod atom;
mod enk;
mod solve;

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ring::{QtPoly, QtRat};
use crate::shapes::Partition;
use crate::symfun::{plethysm_eval, Alphabet, Basis, SymFunc};
use crate::{Error, Result};

use atom::{AtomRat, Atoms};
pub use enk::{e_nk, e_nk_all};

/// Version tag of the on-disk table format.
pub const TABLE_VERSION: u32 = 1;

/// Every `H̃_μ` for `μ ⊢ n`, with Schur coefficients.
#[derive(Clone, Debug)]
pub struct MacdonaldTable {
    degree: usize,
    parts: Vec<Partition>,
    /// `schur[μ][λ] = K̃_{λμ}(q,t)`, both indexed by `Partition::all(n)`.
    schur: Vec<Vec<QtPoly>>,
    power: Vec<SymFunc>,
}

impl MacdonaldTable {
    /// Solve the axioms for every `μ ⊢ n` and verify the solutions.
    pub fn build(n: usize) -> Result<Self> {
        let parts = Partition::all(n);
        let mq = solve::plethysm_matrix(n);
        let schur: Vec<Vec<QtPoly>> = parts
            .par_iter()
            .map(|mu| solve::solve_macdonald(mu, &mq))
            .collect::<Result<_>>()?;
        Ok(Self::from_schur(n, parts, schur))
    }

    fn from_schur(degree: usize, parts: Vec<Partition>, schur: Vec<Vec<QtPoly>>) -> Self {
        let power = schur
            .par_iter()
            .map(|row| schur_row_to_symfunc(degree, &parts, row).convert(Basis::P))
            .collect();
        MacdonaldTable { degree, parts, schur, power }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    fn index(&self, mu: &Partition) -> Option<usize> {
        self.parts.iter().position(|p| p == mu)
    }

    /// `H̃_μ` in the Schur basis.
    pub fn get(&self, mu: &Partition) -> Option<SymFunc> {
        self.index(mu).map(|i| schur_row_to_symfunc(self.degree, &self.parts, &self.schur[i]))
    }

    /// `K̃_{λμ}(q,t) = ⟨H̃_μ, s_λ⟩`.
    pub fn kostka(&self, lambda: &Partition, mu: &Partition) -> Option<&QtPoly> {
        Some(&self.schur[self.index(mu)?][self.index(lambda)?])
    }

    /// Full check: all three axioms for every entry.
    pub fn validate(&self) -> Result<()> {
        let mq = solve::plethysm_matrix(self.degree);
        for (mu, row) in self.parts.iter().zip(&self.schur) {
            solve::verify_axioms(mu, row, &mq)?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let file = TableFile {
            version: TABLE_VERSION,
            degree: self.degree,
            entries: self
                .parts
                .iter()
                .zip(&self.schur)
                .map(|(mu, row)| TableEntry {
                    mu: mu.clone(),
                    h: schur_row_to_symfunc(self.degree, &self.parts, row),
                })
                .collect(),
        };
        serde_json::to_value(file).expect("tables serialize")
    }

    /// Parse a stored table. Checks the version, the degree, that every
    /// `μ ⊢ n` appears once, and the normalization `⟨H̃_μ, s_(n)⟩ = 1`.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let file: TableFile =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if file.version != TABLE_VERSION {
            return Err(Error::Parse(format!("table version {} is not {TABLE_VERSION}", file.version)));
        }
        let n = file.degree;
        let parts = Partition::all(n);
        let mut rows: Vec<Option<Vec<QtPoly>>> = vec![None; parts.len()];
        for entry in file.entries {
            let i = parts
                .iter()
                .position(|p| *p == entry.mu)
                .ok_or_else(|| Error::Parse(format!("{} is not a partition of {n}", entry.mu)))?;
            if rows[i].is_some() {
                return Err(Error::Parse(format!("duplicate entry for {}", entry.mu)));
            }
            if entry.h.degree() != n {
                return Err(Error::Parse(format!("entry for {} has the wrong degree", entry.mu)));
            }
            let h = entry.h.convert(Basis::S);
            let mut row = Vec::with_capacity(parts.len());
            for lambda in &parts {
                let c = h.coeff(lambda);
                let p = c
                    .as_poly()
                    .cloned()
                    .ok_or_else(|| Error::Parse(format!("non-polynomial coefficient in {}", entry.mu)))?;
                row.push(p);
            }
            if !row[0].is_one() {
                return Err(Error::Parse(format!(
                    "normalization fails for {}: <H, s_({n})> = {}",
                    entry.mu, row[0]
                )));
            }
            rows[i] = Some(row);
        }
        let schur = rows
            .into_iter()
            .zip(&parts)
            .map(|(r, mu)| r.ok_or_else(|| Error::Parse(format!("missing entry for {mu}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_schur(n, parts, schur))
    }

    /// Write atomically: a temporary file in the same directory, then rename.
    pub fn write_file(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(&self.to_json()).expect("tables serialize");
        let dir = path.parent().unwrap_or(Path::new("."));
        std::fs::create_dir_all(dir).map_err(|e| Error::Input(format!("{}: {e}", dir.display())))?;
        let tmp = dir.join(format!(
            ".{}.{}.tmp",
            path.file_name().and_then(|s| s.to_str()).unwrap_or("table"),
            std::process::id()
        ));
        std::fs::write(&tmp, text).map_err(|e| Error::Input(format!("{}: {e}", tmp.display())))?;
        std::fs::rename(&tmp, path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
    }

    pub fn read_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        let v: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&v).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }
}

impl PartialEq for MacdonaldTable {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.schur == other.schur
    }
}

#[derive(Serialize, Deserialize)]
struct TableEntry {
    mu: Partition,
    h: SymFunc,
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    version: u32,
    degree: usize,
    entries: Vec<TableEntry>,
}

fn schur_row_to_symfunc(n: usize, parts: &[Partition], row: &[QtPoly]) -> SymFunc {
    SymFunc::from_terms(
        n,
        Basis::S,
        parts.iter().cloned().zip(row.iter().map(|p| QtRat::from_poly(p.clone()))),
    )
    .expect("partitions of n")
}

static TABLES: OnceLock<RwLock<HashMap<usize, Arc<MacdonaldTable>>>> = OnceLock::new();
static BUILD_LOCK: Mutex<()> = Mutex::new(());

fn registry() -> &'static RwLock<HashMap<usize, Arc<MacdonaldTable>>> {
    TABLES.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The shared table for degree `n`, built on first use.
pub fn table(n: usize) -> Result<Arc<MacdonaldTable>> {
    if let Some(t) = registry().read().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let _guard = BUILD_LOCK.lock().unwrap();
    if let Some(t) = registry().read().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let t = Arc::new(MacdonaldTable::build(n)?);
    registry().write().unwrap().insert(n, t.clone());
    Ok(t)
}

/// Make a previously built or loaded table the shared one for its degree.
pub fn install_table(t: MacdonaldTable) -> Arc<MacdonaldTable> {
    let t = Arc::new(t);
    registry().write().unwrap().insert(t.degree, t.clone());
    t
}

/// Whether a table for degree `n` is already available without solving.
pub fn is_table_loaded(n: usize) -> bool {
    registry().read().unwrap().contains_key(&n)
}

/// `H̃_μ(z; q, t)` in the Schur basis.
pub fn modified_macdonald(mu: &Partition) -> Result<SymFunc> {
    table(mu.size())?
        .get(mu)
        .ok_or_else(|| Error::Internal(format!("no entry for {mu}")))
}

/// `B_μ = Σ_{(i,j) ∈ μ} t^i q^j`.
pub fn b_mu(mu: &Partition) -> QtPoly {
    mu.cells().into_iter().map(|(i, j)| QtPoly::qtu(j as i32, i as i32, 0)).sum()
}

/// `∇` eigenvalue exponents `(n(μ'), n(μ))` for `q` and `t`.
fn nabla_exponents(mu: &Partition) -> (i32, i32) {
    (mu.conjugate().n_stat() as i32, mu.n_stat() as i32)
}

/// `z_λ = Π_i i^{m_i} m_i!`.
fn z_lambda(lambda: &Partition) -> BigInt {
    let mut z = BigInt::from(1);
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in lambda.parts() {
        *counts.entry(p).or_default() += 1;
    }
    for (i, m) in counts {
        for k in 1..=m {
            z *= BigInt::from(i) * BigInt::from(k);
        }
    }
    z
}

/// `⟨p_λ, p_λ⟩_* = (-1)^{|λ|-ℓ(λ)} z_λ Π_i (1-q^{λ_i})(1-t^{λ_i})`.
fn star_weight(lambda: &Partition) -> QtPoly {
    let sign = if (lambda.size() - lambda.len()) % 2 == 1 { -1 } else { 1 };
    let mut w = QtPoly::constant(z_lambda(lambda) * sign);
    for &k in lambda.parts() {
        let k = k as i32;
        w = &w * &(&QtPoly::one() - &QtPoly::qtu(k, 0, 0));
        w = &w * &(&QtPoly::one() - &QtPoly::qtu(0, k, 0));
    }
    w
}

/// `w_μ = Π_c (q^a - t^{l+1})(t^l - q^{a+1})` as a sign and atoms.
fn w_mu(mu: &Partition) -> (i64, Atoms) {
    let mut atoms = Atoms::new();
    for x in mu.cells() {
        let (a, l) = mu.arm_leg(x).expect("cell of the shape");
        let (a, l) = (a as i32, l as i32);
        *atoms.entry((a, l + 1)).or_default() += 1;
        *atoms.entry((a + 1, l)).or_default() += 1;
    }
    let sign = if mu.size() % 2 == 1 { -1 } else { 1 };
    (sign, atoms)
}

/// `w_μ` multiplied out.
pub fn w_mu_poly(mu: &Partition) -> QtPoly {
    let (sign, atoms) = w_mu(mu);
    let mut p = QtPoly::constant(sign);
    for (atom, k) in atoms {
        for _ in 0..k {
            p = &p * &atom::atom_poly(atom);
        }
    }
    p
}

/// The `*`-pairing `⟨f, H̃_μ⟩_*` for every `μ`, in table order.
fn star_pairings(f: &SymFunc, table: &MacdonaldTable) -> Vec<QtRat> {
    let fp = f.convert(Basis::P);
    let weights: Vec<(Partition, QtRat, QtPoly)> = fp
        .terms()
        .map(|(l, c)| (l.clone(), c.clone(), star_weight(l)))
        .collect();
    table
        .power
        .par_iter()
        .map(|h| {
            weights
                .iter()
                .map(|(l, c, w)| {
                    let hc = h.coeff(l);
                    if hc.is_zero() {
                        QtRat::zero()
                    } else {
                        (c * &hc).mul_poly(w)
                    }
                })
                .sum()
        })
        .collect()
}

/// Expansion coefficients as unreduced fractions over `w_μ`.
fn expansion(f: &SymFunc) -> Result<(Arc<MacdonaldTable>, Vec<AtomRat>)> {
    let table = table(f.degree())?;
    let pairs = star_pairings(f, &table);
    let coeffs = table
        .parts
        .iter()
        .zip(pairs)
        .map(|(mu, p)| {
            let (sign, atoms) = w_mu(mu);
            AtomRat::new(p.scale_int(&BigInt::from(sign)), atoms)
        })
        .collect();
    Ok((table, coeffs))
}

/// `Σ_μ c_μ H̃_μ` in the Schur basis.
fn reassemble(table: &MacdonaldTable, coeffs: &[AtomRat]) -> SymFunc {
    let n = table.degree;
    let k = table.parts.len();
    let terms: Vec<(Partition, QtRat)> = (0..k)
        .into_par_iter()
        .map(|lam| {
            let mut acc = AtomRat::zero();
            for (mu, c) in coeffs.iter().enumerate() {
                let kt = &table.schur[mu][lam];
                if !kt.is_zero() {
                    acc.add_assign(&c.mul_poly(kt));
                }
            }
            (table.parts[lam].clone(), acc.into_qtrat())
        })
        .collect();
    SymFunc::from_terms(n, Basis::S, terms).expect("partitions of n")
}

/// Coefficients `c_μ` with `f = Σ_μ c_μ H̃_μ`.
pub fn expand_in_macdonald(f: &SymFunc) -> Result<BTreeMap<Partition, QtRat>> {
    let (table, coeffs) = expansion(f)?;
    Ok(table
        .parts
        .iter()
        .cloned()
        .zip(coeffs.into_iter().map(AtomRat::into_qtrat))
        .filter(|(_, c)| !c.is_zero())
        .collect())
}

/// `Σ_μ c_μ H̃_μ` for explicit coefficients, in the Schur basis.
pub fn assemble_from_macdonald(n: usize, coeffs: &BTreeMap<Partition, QtRat>) -> Result<SymFunc> {
    let table = table(n)?;
    let v: Vec<AtomRat> = table
        .parts
        .iter()
        .map(|mu| {
            AtomRat::new(coeffs.get(mu).cloned().unwrap_or_else(QtRat::zero), Atoms::new())
        })
        .collect();
    if let Some(bad) = coeffs.keys().find(|mu| mu.size() != n) {
        return Err(Error::Input(format!("{bad} is not a partition of {n}")));
    }
    Ok(reassemble(&table, &v))
}

/// Apply the diagonal operator with eigenvalue `ev(μ)` on `H̃_μ`.
fn diagonal(f: &SymFunc, ev: impl Fn(&Partition) -> QtRat) -> Result<SymFunc> {
    if f.degree() == 0 {
        return Ok(f.scale(&ev(&Partition::empty())).convert(Basis::S));
    }
    let (table, mut coeffs) = expansion(f)?;
    for (c, mu) in coeffs.iter_mut().zip(&table.parts) {
        *c = c.mul_rat(&ev(mu));
    }
    Ok(reassemble(&table, &coeffs))
}

/// `∇^m f`, for any integer `m`.
pub fn nabla_power(f: &SymFunc, m: i32) -> Result<SymFunc> {
    diagonal(f, |mu| {
        let (a, b) = nabla_exponents(mu);
        QtRat::from_poly(QtPoly::qtu(a * m, b * m, 0))
    })
}

/// `Δ_g f`: scales `H̃_μ` by `g[B_μ]`.
pub fn delta_op(g: &SymFunc, f: &SymFunc) -> Result<SymFunc> {
    diagonal(f, |mu| {
        let alpha = Alphabet::finite(QtRat::from_poly(b_mu(mu)));
        plethysm_eval(g, &alpha).as_scalar().cloned().expect("finite alphabet")
    })
}

/// `c_μ = M B_μ Π_μ / w_μ`, the classical coefficients of `e_n` in the
/// `H̃` basis, with `M = (1-q)(1-t)` and `Π_μ = Π_{(i,j) ≠ (0,0)} (1 - q^j t^i)`.
pub fn e_n_macdonald_coeffs(n: usize) -> BTreeMap<Partition, QtRat> {
    let one = QtPoly::one();
    let m = &(&one - &QtPoly::q()) * &(&one - &QtPoly::t());
    Partition::all(n)
        .into_iter()
        .map(|mu| {
            let mut num = &m * &b_mu(&mu);
            for (i, j) in mu.cells() {
                if (i, j) != (0, 0) {
                    num = &num * &(&one - &QtPoly::qtu(j as i32, i as i32, 0));
                }
            }
            let c = QtRat::new(num, w_mu_poly(&mu)).expect("w_mu is nonzero");
            (mu, c)
        })
        .collect()
}
