//! Text syntax: `Z` / `GF(p)[x]` for rings, `-42` for integers and
//! `x^3+2*x+1` for polynomials.

use num_bigint::BigInt;

use super::{FpPoly, Ring, RingElement};
use crate::error::{Error, Result};

pub(super) fn parse_ring(s: &str) -> Result<Ring> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t == "Z" {
        return Ok(Ring::Integers);
    }
    let inner = t
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(")[x]"))
        .ok_or_else(|| Error::Parse(format!("unknown ring `{s}`; expected `Z` or `GF(p)[x]`")))?;
    let p: u32 = inner
        .parse()
        .map_err(|_| Error::Parse(format!("bad field size in `{s}`")))?;
    Ring::gf_poly(p)
}

pub(super) fn parse_element(ring: Ring, s: &str) -> Result<RingElement> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Parse("empty element".into()));
    }
    match ring {
        Ring::Integers => t
            .parse::<BigInt>()
            .map(RingElement::Int)
            .map_err(|_| Error::Parse(format!("`{s}` is not an integer"))),
        Ring::Poly(p) => parse_poly(p, &t).map(RingElement::Poly),
    }
}

fn parse_poly(p: u32, t: &str) -> Result<FpPoly> {
    let bad = || Error::Parse(format!("`{t}` is not a polynomial over GF({p})"));
    let m = p as i64;
    let mut coeffs: Vec<i64> = Vec::new();
    let bytes = t.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1i64;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if i > 0 {
            return Err(bad());
        }
        let start = i;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            i += 1;
        }
        let term = &t[start..i];
        if term.is_empty() {
            return Err(bad());
        }
        let (coef_text, power) = match term.find('x') {
            None => (term, 0usize),
            Some(pos) => {
                let coef_text = term[..pos].trim_end_matches('*');
                let rest = &term[pos + 1..];
                let power = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(bad)?
                };
                (coef_text, power)
            }
        };
        let coef = if coef_text.is_empty() {
            if power == 0 {
                return Err(bad());
            }
            1
        } else {
            // reduce big literals digit by digit
            coef_text.chars().try_fold(0i64, |acc, c| {
                c.to_digit(10)
                    .map(|d| (acc * 10 + d as i64) % m)
                    .ok_or_else(bad)
            })?
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] = (coeffs[power] + sign * coef).rem_euclid(m);
    }
    Ok(FpPoly::from_coeffs(p, &coeffs))
}
