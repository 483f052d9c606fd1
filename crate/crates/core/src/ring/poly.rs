use std::cmp::Ordering;
use std::fmt;

/// Dense univariate polynomial over GF(p), coefficients in ascending degree.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial
/// is the empty vector and `degree` is well defined for every non-zero value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u32,
    coeffs: Vec<u32>,
}

pub(crate) fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut b = base % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        exp >>= 1;
    }
    acc
}

pub(crate) fn mod_inv(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    mod_pow(a as u64, p as u64 - 2, p as u64) as u32
}

impl FpPoly {
    /// Builds a polynomial from signed coefficients, reducing them mod `p`.
    pub fn from_coeffs(p: u32, coeffs: &[i64]) -> Self {
        let m = p as i64;
        let coeffs = coeffs.iter().map(|c| c.rem_euclid(m) as u32).collect();
        Self::from_reduced(p, coeffs)
    }

    pub(crate) fn from_reduced(p: u32, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn zero(p: u32) -> Self {
        FpPoly {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(p: u32, c: i64) -> Self {
        Self::from_coeffs(p, &[c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(p: u32, c: i64, k: usize) -> Self {
        let mut coeffs = vec![0i64; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(p, &coeffs)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                ((a as u64 + b as u64) % p as u64) as u32
            })
            .collect();
        Self::from_reduced(p, out)
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        let out = self
            .coeffs
            .iter()
            .map(|&c| if c == 0 { 0 } else { p - c })
            .collect();
        Self::from_reduced(p, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u64;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        Self::from_reduced(self.p, out.into_iter().map(|c| c as u32).collect())
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.p as u64;
        let out = self
            .coeffs
            .iter()
            .map(|&a| (a as u64 * c as u64 % p) as u32)
            .collect();
        Self::from_reduced(self.p, out)
    }

    /// Polynomial long division. Panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let p = self.p as u64;
        let inv_lead = mod_inv(divisor.leading(), self.p) as u64;
        let mut rem: Vec<u64> = self.coeffs.iter().map(|&c| c as u64).collect();
        if rem.len() <= dd {
            return (Self::zero(self.p), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd] * inv_lead % p;
            if c == 0 {
                continue;
            }
            quot[k] = c as u32;
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                let t = c * b as u64 % p;
                rem[k + i] = (rem[k + i] + p - t) % p;
            }
        }
        rem.truncate(dd);
        (
            Self::from_reduced(self.p, quot),
            Self::from_reduced(self.p, rem.into_iter().map(|c| c as u32).collect()),
        )
    }

    /// Returns `(monic, unit)` with `monic = unit * self`; the zero
    /// polynomial maps to `(0, 1)`.
    pub fn monic(&self) -> (Self, u32) {
        if self.is_zero() {
            return (self.clone(), 1);
        }
        let unit = mod_inv(self.leading(), self.p);
        (self.scale(unit), unit)
    }

    pub fn eval(&self, x: u32) -> u32 {
        let p = self.p as u64;
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p) as u32
    }

    /// Degree first, then coefficients compared from the leading term down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}*x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, c) => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_reconstructs() {
        // (x^2 - 1) / (x + 1) over GF(3)
        let a = FpPoly::from_coeffs(3, &[-1, 0, 1]);
        let b = FpPoly::from_coeffs(3, &[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, FpPoly::from_coeffs(3, &[-1, 1]));
        assert_eq!(q.mul(&b), a);
    }

    #[test]
    fn display_is_descending() {
        let a = FpPoly::from_coeffs(5, &[1, 2, 0, 1]);
        assert_eq!(a.to_string(), "x^3+2*x+1");
        assert_eq!(FpPoly::zero(5).to_string(), "0");
        assert_eq!(FpPoly::from_coeffs(5, &[0, 3]).to_string(), "3*x");
    }

    #[test]
    fn monic_normalization() {
        let a = FpPoly::from_coeffs(3, &[2, 2]);
        let (m, unit) = a.monic();
        assert_eq!(m, FpPoly::from_coeffs(3, &[1, 1]));
        assert_eq!(unit, 2);
    }
}
