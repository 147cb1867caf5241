use std::str::FromStr;

use num_bigint::BigInt;

use super::poly::{Mono, QtPoly};
use super::rat::QtRat;
use crate::Error;

fn var_index(c: char) -> Option<usize> {
    match c {
        'q' => Some(0),
        't' => Some(1),
        'u' => Some(2),
        _ => None,
    }
}

fn parse_term(s: &str) -> Result<(Mono, BigInt), Error> {
    let mut coeff = BigInt::from(1);
    let mut e: Mono = [0; 3];
    for factor in s.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in term {s:?}")));
        }
        let first = factor.chars().next().unwrap();
        if let Some(v) = var_index(first) {
            let rest = factor[1..].trim();
            let k: i32 = if rest.is_empty() {
                1
            } else {
                let r = rest
                    .strip_prefix('^')
                    .ok_or_else(|| Error::Parse(format!("bad factor {factor:?}")))?;
                r.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?
            };
            e[v] += k;
        } else {
            let c: BigInt = factor
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {factor:?}")))?;
            coeff *= c;
        }
    }
    Ok((e, coeff))
}

impl FromStr for QtPoly {
    type Err = Error;

    /// Accepts the canonical rendering and minor variations of it: any term
    /// order, optional whitespace, explicit `1*` coefficients.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = QtPoly::zero();
        let mut sign = 1;
        let mut cur = String::new();
        let mut prev: Option<char> = None;
        let flush = |cur: &mut String, sign: i32, p: &mut QtPoly| -> Result<(), Error> {
            let body = cur.trim();
            if body.is_empty() {
                return Err(Error::Parse("dangling sign".into()));
            }
            let (e, c) = parse_term(body)?;
            p.add_term(e, if sign < 0 { -c } else { c });
            cur.clear();
            Ok(())
        };
        for ch in s.chars() {
            let is_sign = ch == '+' || ch == '-';
            // a '-' directly after '^' belongs to an exponent
            if is_sign && prev.map(|c| c != '^').unwrap_or(true) {
                if !cur.trim().is_empty() {
                    flush(&mut cur, sign, &mut p)?;
                    sign = 1;
                }
                if ch == '-' {
                    sign = -sign;
                }
            } else {
                cur.push(ch);
            }
            if !ch.is_whitespace() {
                prev = Some(ch);
            }
        }
        flush(&mut cur, sign, &mut p)?;
        Ok(p)
    }
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    if s.starts_with('(') && s.ends_with(')') {
        &s[1..s.len() - 1]
    } else {
        s
    }
}

impl FromStr for QtRat {
    type Err = Error;

    /// `poly`, `(poly)/(poly)` or `poly/poly` for monomial-free simple cases
    /// such as `1/q`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let mut depth = 0i32;
        let mut split = None;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 => {
                    if split.is_some() {
                        return Err(Error::Parse(format!("multiple '/' in {s:?}")));
                    }
                    split = Some(i);
                }
                _ => {}
            }
        }
        match split {
            None => Ok(QtRat::from_poly(strip_parens(s).parse()?)),
            Some(i) => {
                let num: QtPoly = strip_parens(&s[..i]).parse()?;
                let den: QtPoly = strip_parens(&s[i + 1..]).parse()?;
                QtRat::new(num, den)
            }
        }
    }
}
