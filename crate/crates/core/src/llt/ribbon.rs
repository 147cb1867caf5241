use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::ring::{QtPoly, QtRat};
use crate::shapes::{content, Cell, Filling, Letter, Partition, SkewShape};
use crate::symfun::{Basis, SymFunc};
use crate::{Error, Result};

use super::{n_quotient, ShapeTuple};

/// A connected border strip, cells sorted by increasing content.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ribbon {
    cells: Vec<Cell>,
}

impl Ribbon {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Content of the head, the cell of largest content.
    pub fn content(&self) -> i64 {
        content(*self.cells.last().expect("ribbons are nonempty"))
    }

    pub fn rows(&self) -> usize {
        self.cells.iter().map(|c| c.0).collect::<BTreeSet<_>>().len()
    }

    /// `s(θ)`: one less than the number of rows.
    pub fn spin(&self) -> usize {
        self.rows() - 1
    }
}

impl fmt::Display for Ribbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.cells.iter().map(|(i, j)| format!("({i},{j})")).collect();
        write!(f, "{}", cells.join(" "))
    }
}

/// Every n-ribbon removable from `outer` leaving a partition that still
/// contains `inner`, with that partition.
pub fn removable_ribbons(outer: &Partition, inner: &Partition, n: usize) -> Vec<(Ribbon, Partition)> {
    let rows = outer.parts();
    let has = |(a, b): Cell| a < rows.len() && b < rows[a];
    let mut out = Vec::new();
    'rows: for (i, &len) in rows.iter().enumerate() {
        let mut cur = (i, len - 1);
        let mut cells = vec![cur];
        while cells.len() < n {
            cur = if has((cur.0 + 1, cur.1)) {
                (cur.0 + 1, cur.1)
            } else if cur.1 > 0 {
                (cur.0, cur.1 - 1)
            } else {
                continue 'rows;
            };
            cells.push(cur);
        }
        let tail = cur;
        if has((tail.0 + 1, tail.1)) || cells.iter().any(|&x| inner.contains_cell(x)) {
            continue;
        }
        let mut left = rows.to_vec();
        for &(a, _) in &cells {
            left[a] -= 1;
        }
        let Ok(rest) = Partition::new(left) else { continue };
        cells.reverse();
        out.push((Ribbon { cells }, rest));
    }
    out
}

fn check_size(shape: &SkewShape, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Input(format!("n = {n}: ribbons need n ≥ 2")));
    }
    if shape.size() % n != 0 {
        return Err(Error::Input(format!("|{shape}| = {} is not divisible by {n}", shape.size())));
    }
    Ok(())
}

/// All tilings of a skew shape by n-ribbons, each as a sorted ribbon list.
pub fn tilings(shape: &SkewShape, n: usize) -> Result<Vec<Vec<Ribbon>>> {
    check_size(shape, n)?;
    fn rec(
        mu: &Partition,
        inner: &Partition,
        n: usize,
        memo: &mut HashMap<Partition, BTreeSet<Vec<Ribbon>>>,
    ) -> BTreeSet<Vec<Ribbon>> {
        if mu == inner {
            return BTreeSet::from([Vec::new()]);
        }
        if let Some(v) = memo.get(mu) {
            return v.clone();
        }
        let mut all = BTreeSet::new();
        for (r, rest) in removable_ribbons(mu, inner, n) {
            for mut t in rec(&rest, inner, n, memo) {
                t.push(r.clone());
                t.sort();
                all.insert(t);
            }
        }
        memo.insert(mu.clone(), all.clone());
        all
    }
    Ok(rec(shape.outer(), shape.inner(), n, &mut HashMap::new()).into_iter().collect())
}

/// `(smin, smax)` over all tilings.
pub fn spin_range(shape: &SkewShape, n: usize) -> Result<(usize, usize)> {
    let s: Vec<usize> = tilings(shape, n)?.iter().map(|t| t.iter().map(Ribbon::spin).sum()).collect();
    match (s.iter().min(), s.iter().max()) {
        (Some(&lo), Some(&hi)) => Ok((lo, hi)),
        _ => Err(Error::Input(format!("{shape} has no tiling by {n}-ribbons"))),
    }
}

/// A semistandard n-ribbon tableau. Ribbons are kept in standardization
/// order: by label, then by increasing content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonTableau {
    shape: SkewShape,
    n: usize,
    ribbons: Vec<Ribbon>,
    labels: Vec<usize>,
}

impl RibbonTableau {
    /// Validate: the ribbons added in label order build the shape, and each
    /// label class is a horizontal ribbon strip carrying its official tiling.
    pub fn new(shape: SkewShape, n: usize, ribbons: Vec<Ribbon>, labels: Vec<usize>) -> Result<Self> {
        check_size(&shape, n)?;
        if ribbons.len() != labels.len() || ribbons.len() * n != shape.size() || labels.contains(&0) {
            return Err(Error::Input("ribbons and labels do not fit the shape".into()));
        }
        let mut order: Vec<usize> = (0..ribbons.len()).collect();
        order.sort_by_key(|&k| (labels[k], ribbons[k].content()));
        let ribbons: Vec<Ribbon> = order.iter().map(|&k| ribbons[k].clone()).collect();
        let labels: Vec<usize> = order.iter().map(|&k| labels[k]).collect();
        let mut rows = shape.inner().padded(shape.rows());
        let mut k = 0;
        while k < ribbons.len() {
            let before = Partition::new(rows.clone())?;
            let mut end = k;
            while end < ribbons.len() && labels[end] == labels[k] {
                for &(a, b) in ribbons[end].cells() {
                    if a >= rows.len() || rows[a] != b {
                        return Err(Error::Input(format!("ribbon {} does not extend row {a}", ribbons[end])));
                    }
                    rows[a] += 1;
                }
                end += 1;
            }
            let after = Partition::new(rows.clone())
                .map_err(|_| Error::Input(format!("label {} does not leave a partition", labels[k])))?;
            let official = official_tiling(&SkewShape::new(after, before)?, n)?;
            if official != ribbons[k..end] {
                return Err(Error::Input(format!("label {} does not carry the official tiling", labels[k])));
            }
            k = end;
        }
        if rows != shape.outer().padded(shape.rows()) {
            return Err(Error::Input("ribbons do not cover the shape".into()));
        }
        Ok(RibbonTableau { shape, n, ribbons, labels })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ribbons(&self) -> &[Ribbon] {
        &self.ribbons
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// The tiling as a sorted ribbon list.
    pub fn tiling(&self) -> Vec<Ribbon> {
        let mut t = self.ribbons.clone();
        t.sort();
        t
    }

    /// Label multiplicities.
    pub fn content(&self) -> Vec<usize> {
        let top = self.labels.iter().copied().max().unwrap_or(0);
        let mut c = vec![0; top];
        for &a in &self.labels {
            c[a - 1] += 1;
        }
        c
    }

    /// `s(T)`, the sum of ribbon spins.
    pub fn s_value(&self) -> usize {
        self.ribbons.iter().map(Ribbon::spin).sum()
    }

    pub fn is_standard(&self) -> bool {
        self.labels.iter().enumerate().all(|(k, &a)| a == k + 1)
    }

    /// Relabel `1, …, N` in standardization order; the tiling is unchanged.
    pub fn standardize(&self) -> RibbonTableau {
        RibbonTableau {
            shape: self.shape.clone(),
            n: self.n,
            ribbons: self.ribbons.clone(),
            labels: (1..=self.ribbons.len()).collect(),
        }
    }

    /// `quot_n(T)`: the ribbon of head content `c̃` becomes a cell of adjusted
    /// content `c̃` in the n-quotient, carrying the same label.
    pub fn quotient(&self) -> Result<(ShapeTuple, Vec<Filling>)> {
        let inner = self.shape.inner().clone();
        let mut rows = inner.padded(self.shape.rows());
        let mut prev = n_quotient(&SkewShape::new(inner.clone(), inner.clone())?, self.n)?
            .shapes()
            .iter()
            .map(|s| s.outer().clone())
            .collect::<Vec<_>>();
        let mut at: Vec<HashMap<Cell, Letter>> = vec![HashMap::new(); self.n];
        for (ribbon, &label) in self.ribbons.iter().zip(&self.labels) {
            for &(a, _) in ribbon.cells() {
                rows[a] += 1;
            }
            let mu = Partition::new(rows.clone())?;
            let tuple = n_quotient(&SkewShape::new(mu, inner.clone())?, self.n)?;
            let r = ribbon.content().rem_euclid(self.n as i64) as usize;
            let now = tuple.shapes()[r].outer().clone();
            let added: Vec<Cell> = now.cells().into_iter().filter(|&x| !prev[r].contains_cell(x)).collect();
            if added.len() != 1 || tuple.adjusted_content(r, added[0]) != ribbon.content() {
                return Err(Error::Internal(format!("ribbon {ribbon} does not map to one quotient cell")));
            }
            at[r].insert(added[0], Letter::pos(label));
            prev[r] = now;
        }
        let tuple = n_quotient(&self.shape, self.n)?;
        let fills = tuple
            .shapes()
            .iter()
            .zip(at)
            .map(|(s, m)| Filling::from_fn(s.clone(), |x| m[&x]))
            .collect();
        Ok((tuple, fills))
    }
}

/// One line per ribbon: label, cells, spin.
impl fmt::Display for RibbonTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.shape, self.n)?;
        for (r, a) in self.ribbons.iter().zip(&self.labels) {
            write!(f, "\n{a}: {r} spin {}", r.spin())?;
        }
        Ok(())
    }
}

/// `spin(T) = (s(T) - smin) / 2`.
pub fn spin(t: &RibbonTableau) -> Result<usize> {
    let (lo, _) = spin_range(&t.shape, t.n)?;
    let s = t.s_value();
    if s < lo || (s - lo) % 2 != 0 {
        return Err(Error::Internal(format!("s(T) = {s} against smin = {lo}")));
    }
    Ok((s - lo) / 2)
}

/// The official tiling of a horizontal n-ribbon strip: ribbons removed by
/// decreasing content, each the removable ribbon of largest content. Fails
/// exactly when the shape is not a horizontal ribbon strip.
pub fn official_tiling(shape: &SkewShape, n: usize) -> Result<Vec<Ribbon>> {
    check_size(shape, n)?;
    let mut mu = shape.outer().clone();
    let mut out: Vec<Ribbon> = Vec::new();
    while &mu != shape.inner() {
        let best = removable_ribbons(&mu, shape.inner(), n).into_iter().max_by_key(|(r, _)| r.content());
        let Some((r, rest)) = best else {
            return Err(Error::Input(format!("{shape} has no tiling by {n}-ribbons")));
        };
        if out.last().is_some_and(|p| p.content() <= r.content()) {
            return Err(Error::Input(format!("{shape} is not a horizontal {n}-ribbon strip")));
        }
        out.push(r);
        mu = rest;
    }
    out.reverse();
    // the head of each ribbon is the lowest cell of its column in the strip
    for r in &out {
        let (i, j) = *r.cells().last().expect("nonempty");
        if (0..i).any(|a| shape.contains((a, j))) {
            return Err(Error::Internal(format!("head of {r} is not lowest in column {j}")));
        }
    }
    Ok(out)
}

/// Standard n-ribbon tableaux, found by removing ribbons from the outside.
pub fn standard_ribbon_tableaux(shape: &SkewShape, n: usize) -> Result<Vec<RibbonTableau>> {
    let k = shape.size() / n;
    ribbon_tableaux(shape, n, &vec![1; k])
}

/// Semistandard n-ribbon tableaux with the given label content.
pub fn ribbon_tableaux(shape: &SkewShape, n: usize, content: &[usize]) -> Result<Vec<RibbonTableau>> {
    check_size(shape, n)?;
    if content.iter().sum::<usize>() * n != shape.size() {
        return Err(Error::Input(format!("content {content:?} does not fill {shape} with {n}-ribbons")));
    }
    struct Ctx<'a> {
        inner: &'a Partition,
        n: usize,
        content: &'a [usize],
        stack: Vec<(Ribbon, usize)>,
        out: Vec<Vec<(Ribbon, usize)>>,
    }
    // label `a` (1-based) still needs `left` ribbons, each of content below `bound`
    fn rec(cx: &mut Ctx, mu: &Partition, a: usize, left: usize, bound: Option<i64>) {
        if a == 0 {
            if mu == cx.inner {
                cx.out.push(cx.stack.clone());
            }
            return;
        }
        if left == 0 {
            let next = a - 1;
            let need = if next == 0 { 0 } else { cx.content[next - 1] };
            rec(cx, mu, next, need, None);
            return;
        }
        for (r, rest) in removable_ribbons(mu, cx.inner, cx.n) {
            if bound.is_some_and(|b| r.content() >= b) {
                continue;
            }
            let c = r.content();
            cx.stack.push((r, a));
            rec(cx, &rest, a, left - 1, Some(c));
            cx.stack.pop();
        }
    }
    let mut cx = Ctx { inner: shape.inner(), n, content, stack: Vec::new(), out: Vec::new() };
    let top = content.len();
    let need = if top == 0 { 0 } else { content[top - 1] };
    rec(&mut cx, shape.outer(), top, need, None);
    Ok(cx
        .out
        .into_iter()
        .map(|mut v| {
            v.sort_by_key(|(r, a)| (*a, r.content()));
            let (ribbons, labels) = v.into_iter().unzip();
            RibbonTableau { shape: shape.clone(), n, ribbons, labels }
        })
        .collect())
}

/// `G_μ(z; q) = Σ_T q^{spin T} z^T` by direct enumeration of ribbon tableaux.
pub fn llt_poly_by_ribbons(shape: &SkewShape, n: usize) -> Result<SymFunc> {
    check_size(shape, n)?;
    let k = shape.size() / n;
    let (lo, _) = spin_range(shape, n)?;
    let mut terms = Vec::new();
    for lam in Partition::all(k) {
        let mut p = QtPoly::zero();
        for t in ribbon_tableaux(shape, n, lam.parts())? {
            p += &QtPoly::qtu(((t.s_value() - lo) / 2) as i32, 0, 0);
        }
        terms.push((lam, QtRat::from_poly(p)));
    }
    SymFunc::from_terms(k, Basis::M, terms)
}
