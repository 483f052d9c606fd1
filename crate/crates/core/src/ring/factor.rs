use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{FpPoly, RingElement};
use crate::error::{Error, Result};

/// `unit * prod(prime^exponent)`, primes canonical and in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFactorization {
    pub unit: RingElement,
    pub factors: Vec<(RingElement, u32)>,
}

impl PrimeFactorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> RingElement {
        self.factors
            .iter()
            .fold(self.unit.clone(), |acc, (p, e)| &acc * &p.pow(*e))
    }

    /// All canonical divisors, in canonical order.
    pub fn divisors(&self) -> Vec<RingElement> {
        let one = self.unit.ring().one();
        let mut out = vec![one];
        for (p, e) in &self.factors {
            let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
            for d in &out {
                let mut acc = d.clone();
                next.push(acc.clone());
                for _ in 0..*e {
                    acc = &acc * p;
                    next.push(acc.clone());
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    pub fn exponent_of(&self, prime: &RingElement) -> u32 {
        self.factors
            .iter()
            .find(|(p, _)| p == prime)
            .map_or(0, |(_, e)| *e)
    }
}

/// The canonical divisors of a non-zero element.
pub fn divisors(a: &RingElement) -> Result<Vec<RingElement>> {
    Ok(factorize(a)?.divisors())
}

/// Trial-division factorization.
///
/// Integers are divided by every candidate up to the square root. Monic
/// polynomials over GF(p) are divided by every monic polynomial of degree
/// `d = 1, 2, ...` in canonical order while `2d` does not exceed the degree of
/// what is left; a candidate can only divide once all of its own factors are
/// gone, so every divisor found this way is irreducible.
pub fn factorize(a: &RingElement) -> Result<PrimeFactorization> {
    if a.is_zero() {
        return Err(Error::Precondition("cannot factor zero".into()));
    }
    let norm = a.normalize();
    let unit = norm.unit.unit_inverse()?;
    let factors = match &norm.canonical {
        RingElement::Int(n) => factor_int(n)
            .into_iter()
            .map(|(p, e)| (RingElement::Int(p), e))
            .collect(),
        RingElement::Poly(f) => factor_poly(f)
            .into_iter()
            .map(|(p, e)| (RingElement::Poly(p), e))
            .collect(),
    };
    Ok(PrimeFactorization { unit, factors })
}

fn factor_int(n: &BigInt) -> Vec<(BigInt, u32)> {
    if let Some(small) = n.to_u64() {
        return factor_u64(small)
            .into_iter()
            .map(|(p, e)| (BigInt::from(p), e))
            .collect();
    }
    let mut out = Vec::new();
    let mut rest = n.clone();
    let mut d = BigInt::from(2);
    while &d * &d <= rest {
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += 1;
    }
    if !rest.is_one() {
        out.push((rest, 1));
    }
    out
}

fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn factor_poly(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.modulus();
    let mut found: BTreeMap<Vec<u32>, (FpPoly, u32)> = BTreeMap::new();
    let mut rest = f.clone();
    let mut record = |g: &FpPoly, e: u32| {
        found
            .entry(g.coeffs().to_vec())
            .or_insert_with(|| (g.clone(), 0))
            .1 += e;
    };
    let divide_out = |rest: &mut FpPoly, g: &FpPoly| -> u32 {
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(g);
            if !r.is_zero() {
                return e;
            }
            *rest = q;
            e += 1;
        }
    };

    let mut d = 1usize;
    while rest.degree().is_some_and(|deg| deg >= 2 * d) {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            // lower coefficients as base-p digits, x^(d-1) most significant
            let mut coeffs = vec![0u32; d + 1];
            coeffs[d] = 1;
            let mut k = idx;
            for c in coeffs.iter_mut().take(d) {
                *c = (k % p as u64) as u32;
                k /= p as u64;
            }
            let g = FpPoly::from_reduced(p, coeffs);
            if d == 1 && rest.eval((p - g.coeffs()[0]) % p) != 0 {
                continue;
            }
            let e = divide_out(&mut rest, &g);
            if e > 0 {
                record(&g, e);
            }
            if rest.degree().is_some_and(|deg| deg < 2 * d) {
                break;
            }
        }
        d += 1;
    }
    if rest.degree().is_some_and(|deg| deg >= 1) {
        record(&rest, 1);
    }
    let mut out: Vec<(FpPoly, u32)> = found.into_values().collect();
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> RingElement {
        RingElement::from(n)
    }

    fn gf(p: u32, c: &[i64]) -> RingElement {
        RingElement::Poly(FpPoly::from_coeffs(p, c))
    }

    #[test]
    fn integers() {
        let f = factorize(&z(360)).unwrap();
        assert_eq!(f.unit, z(1));
        assert_eq!(f.factors, vec![(z(2), 3), (z(3), 2), (z(5), 1)]);
        let f = factorize(&z(-7)).unwrap();
        assert_eq!(f.unit, z(-1));
        assert_eq!(f.factors, vec![(z(7), 1)]);
        let f = factorize(&z(-1)).unwrap();
        assert_eq!(f.unit, z(-1));
        assert!(f.factors.is_empty());
        assert!(factorize(&z(0)).is_err());
    }

    #[test]
    fn large_integer_uses_bigint_path() {
        let n = RingElement::Int(BigInt::from(u64::MAX) * 9);
        let f = factorize(&n).unwrap();
        assert_eq!(f.expand(), n);
    }

    #[test]
    fn polynomials() {
        // x^2 + x over GF(2)
        let f = factorize(&gf(2, &[0, 1, 1])).unwrap();
        assert_eq!(f.unit, gf(2, &[1]));
        assert_eq!(f.factors, vec![(gf(2, &[0, 1]), 1), (gf(2, &[1, 1]), 1)]);

        // 2 x^4 (x+1)^2 over GF(3)
        let a = gf(3, &[0, 0, 0, 0, 2]) * gf(3, &[1, 1]).pow(2);
        let f = factorize(&a).unwrap();
        assert_eq!(f.unit, gf(3, &[2]));
        assert_eq!(f.factors, vec![(gf(3, &[0, 1]), 4), (gf(3, &[1, 1]), 2)]);
        assert_eq!(f.expand(), a);
    }

    #[test]
    fn irreducible_quadratics() {
        // (x^2+1)^2 (x^2+x+2) over GF(3), both factors irreducible
        let a = gf(3, &[1, 0, 1]).pow(2) * gf(3, &[2, 1, 1]);
        let f = factorize(&a).unwrap();
        assert_eq!(
            f.factors,
            vec![(gf(3, &[1, 0, 1]), 2), (gf(3, &[2, 1, 1]), 1)]
        );
    }

    #[test]
    fn divisor_lists() {
        let ds = divisors(&z(12)).unwrap();
        assert_eq!(ds, [1, 2, 3, 4, 6, 12].map(z).to_vec());
        assert_eq!(divisors(&z(-1)).unwrap(), vec![z(1)]);
        assert_eq!(divisors(&z(360)).unwrap().len(), 24);
        let ds = divisors(&gf(2, &[0, 1, 1])).unwrap();
        assert_eq!(ds.len(), 4);
    }
}
