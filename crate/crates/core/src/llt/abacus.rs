use crate::shapes::{Partition, SkewShape};
use crate::{Error, Result};

use super::ShapeTuple;

/// The n-core of a partition with the contents `s_0, …, s_{n-1}` of its
/// addable n-ribbons, `s_i ≡ i (mod n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreData {
    pub core: Partition,
    pub contents: Vec<i64>,
}

/// Bead positions `μ_i - i` for `i = 1..len`; every position below `-len` is
/// implicitly occupied.
fn beads(p: &Partition, len: usize) -> Vec<i64> {
    (1..=len).map(|i| p.part(i - 1) as i64 - i as i64).collect()
}

fn window(p: &Partition, n: usize) -> usize {
    (p.len() / n + 1) * n
}

fn partition_of(mut b: Vec<i64>) -> Partition {
    b.sort_unstable_by(|x, y| y.cmp(x));
    Partition::from_unsorted(b.iter().enumerate().map(|(i, &x)| (x + i as i64 + 1) as usize).collect())
}

/// Runner view of a partition over a window of `len` beads: for each
/// residue, the descending list of levels `k` with `r + n k` occupied.
fn runners(p: &Partition, n: usize, len: usize) -> Vec<Vec<i64>> {
    let nn = n as i64;
    let mut out = vec![Vec::new(); n];
    for x in beads(p, len) {
        out[x.rem_euclid(nn) as usize].push(x.div_euclid(nn));
    }
    for r in &mut out {
        r.sort_unstable_by(|x, y| y.cmp(x));
    }
    out
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Input(format!("n = {n}: ribbons need n ≥ 2")));
    }
    Ok(())
}

/// Core and top level `K_r` of every runner, over a window of `len` beads.
fn core_levels(p: &Partition, n: usize, len: usize) -> (Partition, Vec<i64>) {
    let nn = n as i64;
    let base = -(len as i64) / nn;
    let run = runners(p, n, len);
    let mut core_beads = Vec::with_capacity(len);
    let mut top = Vec::with_capacity(n);
    for (r, levels) in run.iter().enumerate() {
        let c = levels.len() as i64;
        for k in base..base + c {
            core_beads.push(r as i64 + nn * k);
        }
        top.push(base + c - 1);
    }
    (partition_of(core_beads), top)
}

pub fn n_core(mu: &Partition, n: usize) -> Result<CoreData> {
    check_n(n)?;
    let len = window(mu, n);
    let (core, top) = core_levels(mu, n, len);
    let nn = n as i64;
    let contents = top.iter().enumerate().map(|(r, k)| r as i64 + nn * (k + 1)).collect();
    Ok(CoreData { core, contents })
}

fn quotient_parts(p: &Partition, n: usize, len: usize) -> Vec<Partition> {
    let (_, top) = core_levels(p, n, len);
    runners(p, n, len)
        .into_iter()
        .zip(top)
        .map(|(levels, k)| {
            Partition::from_unsorted(
                levels.iter().enumerate().map(|(i, &l)| (l - k + i as i64) as usize).collect(),
            )
        })
        .collect()
}

/// `quot_n(μ/ν)`, with the offsets of the common core. Defined when `μ/ν`
/// can be tiled by n-ribbons.
pub fn n_quotient(shape: &SkewShape, n: usize) -> Result<ShapeTuple> {
    check_n(n)?;
    let (mu, nu) = (shape.outer(), shape.inner());
    let outer_core = n_core(mu, n)?;
    let inner_core = n_core(nu, n)?;
    if outer_core != inner_core {
        return Err(Error::Input(format!(
            "{mu} and {nu} have different {n}-cores {} and {}",
            outer_core.core, inner_core.core
        )));
    }
    let len = window(mu, n).max(window(nu, n));
    let outs = quotient_parts(mu, n, len);
    let ins = quotient_parts(nu, n, len);
    let shapes = outs
        .into_iter()
        .zip(ins)
        .map(|(o, i)| SkewShape::new(o, i))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::Input(format!("{shape} cannot be tiled by {n}-ribbons")))?;
    ShapeTuple::new(shapes, outer_core.contents)
}

/// Whether `s` is the content vector of some n-core.
pub fn is_core_contents(s: &[i64]) -> bool {
    let n = s.len() as i64;
    n >= 2
        && s.iter().enumerate().all(|(r, &x)| x.rem_euclid(n) == r as i64)
        && s.iter().sum::<i64>() == n * (n - 1) / 2
}

fn rebuild(parts: &[Partition], s: &[i64]) -> Partition {
    let n = s.len() as i64;
    let tops: Vec<i64> = s.iter().enumerate().map(|(r, &x)| (x - r as i64) / n - 1).collect();
    let longest = parts.iter().map(|p| p.len()).max().unwrap_or(0) as i64;
    let floor = (tops.iter().min().copied().unwrap_or(0) - longest - 1) * n;
    let mut b = Vec::new();
    for (r, p) in parts.iter().enumerate() {
        let mut i = 0usize;
        loop {
            let pos = r as i64 + n * (tops[r] - i as i64 + p.part(i) as i64);
            if pos < floor {
                break;
            }
            b.push(pos);
            i += 1;
        }
    }
    debug_assert_eq!(b.len() as i64, -floor);
    partition_of(b)
}

/// The skew shape whose n-quotient is `t`.
pub fn quot_inverse(t: &ShapeTuple, n: usize) -> Result<SkewShape> {
    check_n(n)?;
    if t.len() != n {
        return Err(Error::Input(format!("a {n}-quotient needs {n} components, got {}", t.len())));
    }
    if !is_core_contents(t.offsets()) {
        return Err(Error::Input(format!("{:?} is not the content vector of an {n}-core", t.offsets())));
    }
    let outs: Vec<Partition> = t.shapes().iter().map(|s| s.outer().clone()).collect();
    let ins: Vec<Partition> = t.shapes().iter().map(|s| s.inner().clone()).collect();
    SkewShape::new(rebuild(&outs, t.offsets()), rebuild(&ins, t.offsets()))
}

/// `quot_n(μ / core_n(μ))`.
pub fn quotient_of(mu: &Partition, n: usize) -> Result<ShapeTuple> {
    let core = n_core(mu, n)?.core;
    n_quotient(&SkewShape::new(mu.clone(), core)?, n)
}
