//! n-cores and n-quotients, ribbon tableaux and spin, the inversion statistic
//! on tuples of shapes, LLT polynomials and the passage from flag-strip
//! fillings to tuples of columns.

mod abacus;
mod ribbon;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;

pub use abacus::{is_core_contents, n_core, n_quotient, quot_inverse, quotient_of, CoreData};
pub use ribbon::{
    llt_poly_by_ribbons, official_tiling, removable_ribbons, ribbon_tableaux, spin, spin_range,
    standard_ribbon_tableaux, tilings, Ribbon, RibbonTableau,
};

use crate::ring::{QtPoly, QtRat};
use crate::shapes::{content, enumerate_fillings, Cell, Filling, Letter, Partition, SkewShape};
use crate::shuffle::{check_sub_staircase, FlagStrip};
use crate::symfun::{Basis, QsymCoeffs, SymFunc};
use crate::{Error, Result};

/// A tuple of skew shapes with content offsets. A cell `x` of component `r`
/// has adjusted content `c̃(x) = N c(x) + s_r`, `N` the number of components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShapeTuple {
    shapes: Vec<SkewShape>,
    offsets: Vec<i64>,
}

impl ShapeTuple {
    pub fn new(shapes: Vec<SkewShape>, offsets: Vec<i64>) -> Result<Self> {
        let n = shapes.len() as i64;
        if n == 0 || offsets.len() != shapes.len() {
            return Err(Error::Input(format!(
                "{} shapes with {} offsets",
                shapes.len(),
                offsets.len()
            )));
        }
        if let Some((r, s)) = offsets.iter().enumerate().find(|(r, s)| s.rem_euclid(n) != *r as i64) {
            return Err(Error::Input(format!("offset s_{r} = {s} is not ≡ {r} mod {n}")));
        }
        Ok(ShapeTuple { shapes, offsets })
    }

    /// Straight shapes with the given offsets.
    pub fn straight(parts: Vec<Partition>, offsets: Vec<i64>) -> Result<Self> {
        Self::new(parts.into_iter().map(SkewShape::straight).collect(), offsets)
    }

    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn shapes(&self) -> &[SkewShape] {
        &self.shapes
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    pub fn size(&self) -> usize {
        self.shapes.iter().map(|s| s.size()).sum()
    }

    pub fn adjusted_content(&self, r: usize, x: Cell) -> i64 {
        self.len() as i64 * content(x) + self.offsets[r]
    }

    /// `(component, cell)` in component order, each in row-major order.
    pub fn cells(&self) -> Vec<(usize, Cell)> {
        self.shapes.iter().enumerate().flat_map(|(r, s)| s.cells().into_iter().map(move |x| (r, x))).collect()
    }

    /// Shift every adjusted content by `D = -Σ k_r` (where `s_r = r + N k_r`),
    /// relabelling components so residues still match. The result has the
    /// content vector of an N-core; inversions are unchanged.
    pub fn normalized(&self) -> (ShapeTuple, i64) {
        let n = self.len() as i64;
        let shift: i64 = -self.offsets.iter().enumerate().map(|(r, s)| (s - r as i64) / n).sum::<i64>();
        let mut shapes = vec![SkewShape::straight(Partition::empty()); self.len()];
        let mut offsets = vec![0; self.len()];
        for (r, s) in self.offsets.iter().enumerate() {
            let to = (r as i64 + shift).rem_euclid(n) as usize;
            shapes[to] = self.shapes[r].clone();
            offsets[to] = s + shift;
        }
        (ShapeTuple { shapes, offsets }, shift)
    }

    /// The skew shape with this quotient, after normalizing the offsets.
    pub fn realize(&self) -> Result<SkewShape> {
        let n = self.len();
        if n < 2 {
            return Err(Error::Input("ribbons need at least two components".into()));
        }
        quot_inverse(&self.normalized().0, n)
    }

    /// One skew shape holding every component, no two sharing a row or a
    /// column, with the map from its row-major cells back to `(component, cell)`.
    pub fn combined(&self) -> (SkewShape, Vec<(usize, Cell)>) {
        let k = self.len();
        let width: Vec<usize> = self.shapes.iter().map(|s| s.outer().part(0)).collect();
        let height: Vec<usize> = self.shapes.iter().map(|s| s.outer().len()).collect();
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut origin = vec![(0, 0); k];
        for r in (0..k).rev() {
            let col: usize = width[..r].iter().sum();
            origin[r] = (outer.len(), col);
            for i in 0..height[r] {
                outer.push(col + self.shapes[r].outer().part(i));
                inner.push(col + self.shapes[r].inner().part(i));
            }
        }
        let shape = SkewShape::new(
            Partition::new(outer).expect("blocks descend"),
            Partition::new(inner).expect("blocks descend"),
        )
        .expect("inner inside outer");
        let back = shape
            .cells()
            .into_iter()
            .map(|(i, j)| {
                let r = (0..k)
                    .find(|&r| height[r] > 0 && i >= origin[r].0 && i < origin[r].0 + height[r])
                    .expect("row belongs to a block");
                (r, (i - origin[r].0, j - origin[r].1))
            })
            .collect();
        (shape, back)
    }

    /// Split a filling of [`ShapeTuple::combined`] into component fillings.
    pub fn split(&self, back: &[(usize, Cell)], f: &Filling) -> Vec<Filling> {
        let mut at: Vec<HashMap<Cell, Letter>> = vec![HashMap::new(); self.len()];
        for (k, l) in f.entries().iter().enumerate() {
            let (r, x) = back[k];
            at[r].insert(x, *l);
        }
        self.shapes
            .iter()
            .zip(at)
            .map(|(s, m)| Filling::from_fn(s.clone(), |x| m[&x]))
            .collect()
    }
}

impl fmt::Display for ShapeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, (s, o)) in self.shapes.iter().zip(&self.offsets).enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let shown = if s.is_empty() && s.inner().is_empty() { "∅".to_string() } else { s.to_string() };
            write!(f, "{r}: {shown} @ {o}")?;
        }
        Ok(())
    }
}

fn check_filling(t: &ShapeTuple, s: &[Filling]) -> Result<()> {
    if s.len() != t.len() || s.iter().zip(t.shapes()).any(|(f, sh)| f.shape() != sh) {
        return Err(Error::Input("fillings do not match the tuple's shapes".into()));
    }
    Ok(())
}

/// Pairs `S(x) = a < b = S(y)` with `0 < c̃(x) - c̃(y) < N`. Equal negative
/// letters count once when `0 < |c̃(x) - c̃(y)| < N`; equal positive letters
/// never count.
pub fn tuple_inv(t: &ShapeTuple, s: &[Filling]) -> Result<usize> {
    check_filling(t, s)?;
    let n = t.len() as i64;
    let cells: Vec<(i64, Letter)> = s
        .iter()
        .enumerate()
        .flat_map(|(r, f)| f.iter().map(move |(x, l)| (t.adjusted_content(r, x), l)))
        .collect();
    let mut inv = 0;
    for (a, &(cx, lx)) in cells.iter().enumerate() {
        for &(cy, ly) in &cells[a + 1..] {
            let hit = if lx == ly {
                lx.is_negative() && cx != cy && (cx - cy).abs() < n
            } else {
                let d = if lx < ly { cx - cy } else { cy - cx };
                0 < d && d < n
            };
            inv += usize::from(hit);
        }
    }
    Ok(inv)
}

/// Descent set of a standard filling of a tuple: `a` with `c̃(a) > c̃(a+1)`.
pub fn tuple_descents(t: &ShapeTuple, s: &[Filling]) -> Result<BTreeSet<usize>> {
    check_filling(t, s)?;
    let size = t.size();
    let mut at = vec![0i64; size];
    for (r, f) in s.iter().enumerate() {
        for (x, l) in f.iter() {
            if l.is_negative() || l.value() == 0 || l.value() > size {
                return Err(Error::Input("not a standard filling".into()));
            }
            at[l.value() - 1] = t.adjusted_content(r, x);
        }
    }
    Ok((1..size).filter(|&a| at[a - 1] > at[a]).collect())
}

/// Standard fillings of a tuple, component by component.
pub fn tuple_standard_fillings(t: &ShapeTuple) -> Vec<Vec<Filling>> {
    let (shape, back) = t.combined();
    let n = shape.size();
    enumerate_fillings(&shape, &vec![1; n], &[])
        .expect("sizes agree")
        .map(|f| t.split(&back, &f))
        .collect()
}

/// Semistandard fillings of a tuple with positive content `mu`.
pub fn tuple_ssyt(t: &ShapeTuple, mu: &[usize]) -> Result<Vec<Vec<Filling>>> {
    let (shape, back) = t.combined();
    Ok(enumerate_fillings(&shape, mu, &[])?.map(|f| t.split(&back, &f)).collect())
}

fn q_poly(counts: &HashMap<usize, u64>, flip: Option<usize>) -> QtPoly {
    QtPoly::from_terms(counts.iter().map(|(&k, &c)| {
        let e = flip.map_or(k, |top| top - k);
        ([e as i32, 0, 0], c)
    }))
}

/// `Σ_S q^{inv S} z^S` over semistandard fillings, read off coefficient by
/// coefficient in the monomial basis.
pub fn inv_gf_monomial(t: &ShapeTuple) -> Result<SymFunc> {
    let n = t.size();
    let (shape, back) = t.combined();
    let terms: Vec<(Partition, QtRat)> = Partition::all(n)
        .into_par_iter()
        .map(|lam| {
            let mut counts: HashMap<usize, u64> = HashMap::new();
            for f in enumerate_fillings(&shape, lam.parts(), &[])? {
                *counts.entry(tuple_inv(t, &t.split(&back, &f))?).or_default() += 1;
            }
            Ok((lam, QtRat::from_poly(q_poly(&counts, None))))
        })
        .collect::<Result<_>>()?;
    SymFunc::from_terms(n, Basis::M, terms)
}

/// The same series assembled from standard fillings and their descent sets.
pub fn inv_gf_qsym(t: &ShapeTuple) -> Result<SymFunc> {
    let n = t.size();
    let mut by_set: HashMap<BTreeSet<usize>, HashMap<usize, u64>> = HashMap::new();
    for s in tuple_standard_fillings(t) {
        let d = tuple_descents(t, &s)?;
        *by_set.entry(d).or_default().entry(tuple_inv(t, &s)?).or_default() += 1;
    }
    let mut q = QsymCoeffs::new(n);
    for (d, counts) in by_set {
        q.add(d, &QtRat::from_poly(q_poly(&counts, None)))?;
    }
    crate::symfun::qsym_to_sym(&q)
}

/// `Σ_S q^{inv S} z^S`, computed both ways; a disagreement is an error.
pub fn inv_generating_function(t: &ShapeTuple) -> Result<SymFunc> {
    let a = inv_gf_qsym(t)?;
    let b = inv_gf_monomial(t)?;
    if a != b {
        return Err(Error::Internal(format!("inversion series disagree: {a} vs {b}")));
    }
    Ok(a)
}

/// The largest inversion count over standard fillings; `spin = e - inv`
/// with this `e`.
pub fn max_inv(t: &ShapeTuple) -> Result<usize> {
    tuple_standard_fillings(t).iter().map(|s| tuple_inv(t, s)).try_fold(0, |a, b| Ok(a.max(b?)))
}

/// `G(z; q) = Σ q^{e - inv S} z^S` for a tuple.
pub fn llt_poly_tuple(t: &ShapeTuple) -> Result<SymFunc> {
    let e = max_inv(t)? as i32;
    let g = inv_generating_function(t)?;
    g.try_map_coeffs(|c| {
        let p = c.as_poly().ok_or_else(|| Error::Internal("non-polynomial coefficient".into()))?;
        Ok(QtRat::from_poly(p.map_exponents(|[a, b, c]| [e - a, b, c])))
    })
}

/// `G_μ(z; q) = Σ_T q^{spin T} z^T`, computed on the n-quotient.
pub fn llt_poly(shape: &SkewShape, n: usize) -> Result<SymFunc> {
    if shape.size() % n != 0 {
        return Err(Error::Input(format!("|{shape}| = {} is not divisible by {n}", shape.size())));
    }
    llt_poly_tuple(&n_quotient(shape, n)?)
}

/// `α_j`: rows of the flag strip whose cell lies in column `j`.
fn column_heights(lambda: &Partition, n: usize, cols: usize) -> Vec<usize> {
    let mut a = vec![0; cols];
    for i in 0..n {
        a[lambda.part(i)] += 1;
    }
    a
}

/// The tuple of columns carrying the flag strip of `λ` and the constant
/// `e(ν)`, with `t^{area} q^{e} Σ_S q^{inv S} z^S` the matching component of D.
/// For `m = 1` the tuple has `n` components, otherwise `mn + 1`.
pub fn d_to_llt(lambda: &Partition, n: usize, m: usize) -> Result<(ShapeTuple, usize)> {
    check_sub_staircase(lambda, n, m)?;
    let e = FlagStrip::new(lambda, n, m)?.e_const();
    let conj = lambda.conjugate();
    let nn = n as i64;
    let (size, cols) = if m == 1 { (n, n) } else { (m * n + 1, m * n + 1) };
    let alpha = column_heights(lambda, n, cols);
    let mut shapes = vec![SkewShape::straight(Partition::empty()); size];
    let mut offsets = vec![0i64; size];
    for j in 0..cols {
        let lp = conj.part(j) as i64;
        let (slot, s) = if m == 1 {
            (j, j as i64 - nn * (j as i64 + lp))
        } else {
            let big = size as i64;
            ((-nn * j as i64).rem_euclid(big) as usize, -nn * j as i64 - big * lp)
        };
        shapes[slot] = SkewShape::straight(Partition::column(alpha[j]));
        offsets[slot] = s;
    }
    Ok((ShapeTuple::new(shapes, offsets)?, e))
}

/// The image `T'` of a filling of the flag strip under [`d_to_llt`].
pub fn d_to_llt_filling(t: &Filling, m: usize) -> Result<(ShapeTuple, Vec<Filling>)> {
    let strip = FlagStrip::of_filling(t, m)?;
    let (n, lambda) = (strip.n(), strip.lambda().clone());
    let (tuple, _) = d_to_llt(&lambda, n, m)?;
    let conj = lambda.conjugate();
    let size = tuple.len() as i64;
    let mut cols: Vec<Vec<Letter>> = vec![Vec::new(); tuple.len()];
    for (i, l) in t.entries().iter().enumerate() {
        let j = lambda.part(i);
        let slot = if m == 1 { j } else { (-(n as i64) * j as i64).rem_euclid(size) as usize };
        debug_assert_eq!(cols[slot].len() + conj.part(j), i);
        cols[slot].push(*l);
    }
    let fills = tuple
        .shapes()
        .iter()
        .zip(cols)
        .map(|(s, c)| Filling::new(s.clone(), c))
        .collect::<Result<Vec<_>>>()?;
    Ok((tuple, fills))
}
