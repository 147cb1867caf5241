use qtshuffle_core::llt::{llt_poly, n_core};
use qtshuffle_core::macdonald::{e_nk_all, modified_macdonald, nabla_power};
use qtshuffle_core::ring::{QtRat, Q, T, U};
use qtshuffle_core::shapes::{Partition, SkewShape};
use qtshuffle_core::shuffle::{compute_d, qt_catalan, super_d_coeff};
use qtshuffle_core::symfun::{hall_inner, Basis, SymFunc};

use crate::config::Config;
use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Object {
    #[value(name = "nabla_en")]
    NablaEn,
    #[value(name = "D")]
    D,
    #[value(name = "qt_catalan")]
    QtCatalan,
    Hilbert,
    Llt,
    Macdonald,
    Enk,
}

impl Object {
    pub fn name(self) -> &'static str {
        match self {
            Object::NablaEn => "nabla_en",
            Object::D => "D",
            Object::QtCatalan => "qt_catalan",
            Object::Hilbert => "hilbert",
            Object::Llt => "llt",
            Object::Macdonald => "macdonald",
            Object::Enk => "enk",
        }
    }
}

pub enum Value {
    Sym(SymFunc),
    Scalar(QtRat),
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Sym(s) => s.fmt(f),
            Value::Scalar(c) => c.fmt(f),
        }
    }
}

pub struct Row {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub extra: String,
    pub value: Value,
}

pub struct Request {
    pub object: Object,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub mu: Option<Partition>,
    pub eta: Option<Partition>,
    pub eval: Vec<(usize, QtRat)>,
}

/// `q=1,t=q^-1` into substitutions applied left to right.
pub fn parse_eval(s: &str) -> Result<Vec<(usize, QtRat)>, Failure> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let (var, expr) =
            item.split_once('=').ok_or_else(|| Failure::Usage(format!("expected var=value, got {item:?}")))?;
        let v = match var.trim() {
            "q" => Q,
            "t" => T,
            "u" => U,
            other => return Err(Failure::Usage(format!("unknown variable {other:?}"))),
        };
        let img: QtRat = expr.parse().map_err(|e| Failure::Usage(format!("{expr:?}: {e}")))?;
        out.push((v, img));
    }
    Ok(out)
}

pub fn parse_partition(s: &str) -> Result<Partition, Failure> {
    s.parse().map_err(|e| Failure::Usage(format!("{e}")))
}

fn need(x: Option<usize>, flag: &str, obj: Object) -> Result<usize, Failure> {
    match x {
        Some(v) if v > 0 => Ok(v),
        Some(_) => Err(Failure::Usage(format!("{flag} must be positive for {}", obj.name()))),
        None => Err(Failure::Usage(format!("{} needs {flag}", obj.name()))),
    }
}

fn core_err(e: qtshuffle_core::Error) -> Failure {
    match e {
        qtshuffle_core::Error::Input(_) | qtshuffle_core::Error::Parse(_) => Failure::Usage(e.to_string()),
        other => Failure::Check(other.to_string()),
    }
}

fn schur(f: SymFunc) -> Value {
    Value::Sym(f.convert(Basis::S))
}

/// Degrees whose Macdonald tables the request needs.
pub fn degrees(req: &Request) -> Vec<usize> {
    match req.object {
        Object::NablaEn | Object::Hilbert | Object::Enk => req.n.into_iter().collect(),
        Object::Macdonald => req.mu.iter().map(Partition::size).collect(),
        _ => Vec::new(),
    }
}

pub fn run(req: &Request, cfg: &Config) -> Result<Vec<Row>, Failure> {
    let obj = req.object;
    let b = &cfg.bounds;
    let mut rows = Vec::new();
    let row = |n: usize, m: usize, extra: String, value: Value| Row { name: obj.name().into(), n, m, extra, value };
    match obj {
        Object::NablaEn | Object::Hilbert => {
            let n = need(req.n, "--n", obj)?;
            let m = need(Some(req.m.unwrap_or(1)), "--m", obj)?;
            cfg.guard(obj.name(), n, b.nabla_limit(m))?;
            let f = nabla_power(&SymFunc::e(&[n]), m as i32).map_err(core_err)?;
            if obj == Object::NablaEn {
                rows.push(row(n, m, String::new(), schur(f)));
            } else {
                let h = hall_inner(&f, &SymFunc::e(&vec![1; n])).map_err(core_err)?;
                rows.push(row(n, m, String::new(), Value::Scalar(h)));
            }
        }
        Object::D => {
            let n = need(req.n, "--n", obj)?;
            let m = need(Some(req.m.unwrap_or(1)), "--m", obj)?;
            cfg.guard(obj.name(), n, b.enumeration)?;
            if req.mu.is_some() || req.eta.is_some() {
                let mu = req.mu.clone().unwrap_or_else(Partition::empty);
                let eta = req.eta.clone().unwrap_or_else(Partition::empty);
                let c = super_d_coeff(n, m, mu.parts(), eta.parts()).map_err(core_err)?;
                rows.push(row(n, m, format!("mu={mu} eta={eta}"), Value::Scalar(QtRat::from_poly(c))));
            } else {
                rows.push(row(n, m, String::new(), schur(compute_d(n, m).map_err(core_err)?)));
            }
        }
        Object::QtCatalan => {
            let n = need(req.n, "--n", obj)?;
            let m = need(Some(req.m.unwrap_or(1)), "--m", obj)?;
            cfg.guard(obj.name(), n, b.enumeration)?;
            let c = qt_catalan(n, m).map_err(core_err)?;
            rows.push(row(n, m, String::new(), Value::Scalar(QtRat::from_poly(c))));
        }
        Object::Llt => {
            let n = need(req.n, "--n", obj)?;
            let mu = req.mu.clone().ok_or_else(|| Failure::Usage("llt needs --mu".into()))?;
            cfg.guard("llt with |μ|", mu.size(), b.llt_size)?;
            let core = n_core(&mu, n).map_err(core_err)?.core;
            let shape = SkewShape::new(mu.clone(), core).map_err(core_err)?;
            let g = llt_poly(&shape, n).map_err(core_err)?;
            rows.push(row(n, 1, format!("shape={shape}"), schur(g)));
        }
        Object::Macdonald => {
            let mu = req.mu.clone().ok_or_else(|| Failure::Usage("macdonald needs --mu".into()))?;
            cfg.guard("macdonald with |μ|", mu.size(), b.nabla)?;
            let h = modified_macdonald(&mu).map_err(core_err)?;
            rows.push(row(mu.size(), 1, format!("mu={mu}"), schur(h)));
        }
        Object::Enk => {
            let n = need(req.n, "--n", obj)?;
            let m = req.m.unwrap_or(1);
            cfg.guard(obj.name(), n, b.nabla_limit(m))?;
            for (i, e) in e_nk_all(n).map_err(core_err)?.into_iter().enumerate() {
                let f = nabla_power(&e, m as i32).map_err(core_err)?;
                rows.push(row(n, m, format!("k={}", i + 1), schur(f)));
            }
        }
    }
    for r in &mut rows {
        for (var, img) in &req.eval {
            r.value = match &r.value {
                Value::Sym(f) => Value::Sym(f.try_map_coeffs(|c| c.subs(*var, img)).map_err(core_err)?),
                Value::Scalar(c) => Value::Scalar(c.subs(*var, img).map_err(core_err)?),
            };
        }
    }
    Ok(rows)
}
