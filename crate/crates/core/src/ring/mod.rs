//! Effective elementary divisor domains.
//!
//! Two instances are supported: the integers and univariate polynomials over
//! a prime field GF(p). Both are Euclidean, so gcds come with Bézout
//! certificates and every element factors into primes.
//!
//! Arithmetic operators on [`RingElement`] panic when the operands come from
//! different instances; the named operations (`gcd_bezout`, `exact_div`, ...)
//! report the mismatch as [`Error::MixedRings`] instead. Matrix and
//! factorization constructors check instances up front, so library code never
//! mixes them.

mod factor;
mod poly;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use factor::{divisors, factorize, PrimeFactorization};
pub use poly::FpPoly;

use crate::error::{Error, Result};

/// A ring instance tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integers,
    /// GF(p)[x] for a prime `p`.
    Poly(u32),
}

impl Ring {
    /// GF(p)[x]; `p` must be a prime below 2^31.
    pub fn gf_poly(p: u32) -> Result<Ring> {
        if !(2..1 << 31).contains(&p)
            || !(2..)
                .take_while(|d: &u32| d * d <= p)
                .all(|d| !p.is_multiple_of(d))
        {
            return Err(Error::NotPrime(p.to_string()));
        }
        Ok(Ring::Poly(p))
    }

    pub fn zero(self) -> RingElement {
        match self {
            Ring::Integers => RingElement::Int(BigInt::zero()),
            Ring::Poly(p) => RingElement::Poly(FpPoly::zero(p)),
        }
    }

    pub fn one(self) -> RingElement {
        self.from_i64(1)
    }

    /// The image of an integer; for polynomial rings this is a constant mod p.
    pub fn from_i64(self, n: i64) -> RingElement {
        match self {
            Ring::Integers => RingElement::Int(BigInt::from(n)),
            Ring::Poly(p) => RingElement::Poly(FpPoly::constant(p, n)),
        }
    }

    /// The variable `x` of a polynomial ring.
    pub fn x(self) -> Option<RingElement> {
        match self {
            Ring::Integers => None,
            Ring::Poly(p) => Some(RingElement::Poly(FpPoly::monomial(p, 1, 1))),
        }
    }

    /// Parses an element in this ring's text syntax.
    pub fn parse(self, s: &str) -> Result<RingElement> {
        text::parse_element(self, s)
    }

    /// Deterministic enumeration of ring elements: `0, 1, -1, 2, -2, ...` for
    /// the integers, base-p digit vectors for polynomials.
    pub fn element_at(self, index: u64) -> RingElement {
        match self {
            Ring::Integers => {
                let k = index.div_ceil(2);
                let v = if index % 2 == 1 {
                    k as i64
                } else {
                    -(k as i64)
                };
                self.from_i64(v)
            }
            Ring::Poly(p) => {
                let mut digits = Vec::new();
                let mut i = index;
                while i > 0 {
                    digits.push((i % p as u64) as u32);
                    i /= p as u64;
                }
                RingElement::Poly(FpPoly::from_reduced(p, digits))
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("Z"),
            Ring::Poly(p) => write!(f, "GF({p})[x]"),
        }
    }
}

impl std::str::FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ring> {
        text::parse_ring(s)
    }
}

impl Serialize for Ring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ring {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Ring, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An exact element of one of the supported rings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingElement {
    Int(BigInt),
    Poly(FpPoly),
}

/// `canonical = unit * input`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalAssociate {
    pub canonical: RingElement,
    pub unit: RingElement,
}

/// A gcd `g` of `a` and `b` together with `x * a + y * b = g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub g: RingElement,
    pub x: RingElement,
    pub y: RingElement,
}

impl RingElement {
    pub fn ring(&self) -> Ring {
        match self {
            RingElement::Int(_) => Ring::Integers,
            RingElement::Poly(f) => Ring::Poly(f.modulus()),
        }
    }

    pub fn same_ring(&self, other: &RingElement) -> Result<Ring> {
        let (a, b) = (self.ring(), other.ring());
        if a == b {
            Ok(a)
        } else {
            Err(Error::MixedRings(a, b))
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Int(n) => n.is_zero(),
            RingElement::Poly(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingElement::Int(n) => n.is_one(),
            RingElement::Poly(f) => f.coeffs() == [1],
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            RingElement::Int(n) => n.magnitude().is_one(),
            RingElement::Poly(f) => f.degree() == Some(0),
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            RingElement::Int(n) => Some(n),
            RingElement::Poly(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&FpPoly> {
        match self {
            RingElement::Poly(f) => Some(f),
            RingElement::Int(_) => None,
        }
    }

    /// Compares Euclidean sizes: absolute value for integers, degree for
    /// polynomials. Zero is the smallest element.
    pub fn size_cmp(&self, other: &RingElement) -> Ordering {
        match (self, other) {
            (RingElement::Int(a), RingElement::Int(b)) => a.magnitude().cmp(b.magnitude()),
            (RingElement::Poly(a), RingElement::Poly(b)) => a.coeffs().len().cmp(&b.coeffs().len()),
            _ => panic!("{}", Error::MixedRings(self.ring(), other.ring())),
        }
    }

    pub fn pow(&self, exp: u32) -> RingElement {
        let mut acc = self.ring().one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division with `|r| < |divisor|` (integers, floored) or
    /// `deg r < deg divisor` (polynomials).
    pub fn div_rem(&self, divisor: &RingElement) -> Result<(RingElement, RingElement)> {
        self.same_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, divisor) {
            (RingElement::Int(a), RingElement::Int(b)) => {
                let (q, r) = a.div_mod_floor(b);
                (RingElement::Int(q), RingElement::Int(r))
            }
            (RingElement::Poly(a), RingElement::Poly(b)) => {
                let (q, r) = a.div_rem(b);
                (RingElement::Poly(q), RingElement::Poly(r))
            }
            _ => unreachable!(),
        })
    }

    /// `self | other`. Zero divides only zero.
    pub fn divides(&self, other: &RingElement) -> Result<bool> {
        self.same_ring(other)?;
        if self.is_zero() {
            return Ok(other.is_zero());
        }
        Ok(other.div_rem(self)?.1.is_zero())
    }

    /// The unique `q` with `q * divisor = self`.
    pub fn exact_div(&self, divisor: &RingElement) -> Result<RingElement> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::not_divisible(self, divisor))
        }
    }

    pub fn normalize(&self) -> CanonicalAssociate {
        match self {
            RingElement::Int(n) => {
                let unit = if n.sign() == Sign::Minus { -1 } else { 1 };
                CanonicalAssociate {
                    canonical: RingElement::Int(n.abs()),
                    unit: RingElement::Int(BigInt::from(unit)),
                }
            }
            RingElement::Poly(f) => {
                let (m, unit) = f.monic();
                CanonicalAssociate {
                    canonical: RingElement::Poly(m),
                    unit: RingElement::Poly(FpPoly::constant(f.modulus(), unit as i64)),
                }
            }
        }
    }

    pub fn canonical(&self) -> RingElement {
        self.normalize().canonical
    }

    pub fn is_canonical(&self) -> bool {
        match self {
            RingElement::Int(n) => n.sign() != Sign::Minus,
            RingElement::Poly(f) => f.is_zero() || f.leading() == 1,
        }
    }

    /// Multiplicative inverse of a unit.
    pub fn unit_inverse(&self) -> Result<RingElement> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        Ok(match self {
            RingElement::Int(_) => self.clone(),
            RingElement::Poly(f) => {
                let inv = poly::mod_inv(f.leading(), f.modulus());
                RingElement::Poly(FpPoly::constant(f.modulus(), inv as i64))
            }
        })
    }

    /// Small integers as `i64`, for diagnostics and tests.
    pub fn to_i64(&self) -> Option<i64> {
        self.as_int().and_then(|n| n.to_i64())
    }
}

/// Canonical total order: integers by magnitude (positive before negative),
/// polynomials by degree then coefficients from the leading term down.
impl Ord for RingElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (RingElement::Int(a), RingElement::Int(b)) => a
                .magnitude()
                .cmp(b.magnitude())
                .then_with(|| (a.sign() == Sign::Minus).cmp(&(b.sign() == Sign::Minus))),
            (RingElement::Poly(a), RingElement::Poly(b)) => a
                .modulus()
                .cmp(&b.modulus())
                .then_with(|| a.canonical_cmp(b)),
            (RingElement::Int(_), RingElement::Poly(_)) => Ordering::Less,
            (RingElement::Poly(_), RingElement::Int(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for RingElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Int(n) => write!(f, "{n}"),
            RingElement::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl From<i64> for RingElement {
    fn from(n: i64) -> Self {
        RingElement::Int(BigInt::from(n))
    }
}

impl From<BigInt> for RingElement {
    fn from(n: BigInt) -> Self {
        RingElement::Int(n)
    }
}

impl From<FpPoly> for RingElement {
    fn from(f: FpPoly) -> Self {
        RingElement::Poly(f)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $int:expr, $poly:expr) => {
        impl<'a> $trait<&'a RingElement> for &'a RingElement {
            type Output = RingElement;

            fn $method(self, rhs: &'a RingElement) -> RingElement {
                match (self, rhs) {
                    (RingElement::Int(a), RingElement::Int(b)) => RingElement::Int($int(a, b)),
                    (RingElement::Poly(a), RingElement::Poly(b)) if a.modulus() == b.modulus() => {
                        RingElement::Poly($poly(a, b))
                    }
                    _ => panic!("{}", Error::MixedRings(self.ring(), rhs.ring())),
                }
            }
        }

        impl $trait<RingElement> for RingElement {
            type Output = RingElement;

            fn $method(self, rhs: RingElement) -> RingElement {
                $trait::$method(&self, &rhs)
            }
        }

        impl<'a> $trait<&'a RingElement> for RingElement {
            type Output = RingElement;

            fn $method(self, rhs: &'a RingElement) -> RingElement {
                $trait::$method(&self, rhs)
            }
        }
    };
}

binop!(
    Add,
    add,
    |a: &BigInt, b: &BigInt| a + b,
    |a: &FpPoly, b: &FpPoly| a.add(b)
);
binop!(
    Sub,
    sub,
    |a: &BigInt, b: &BigInt| a - b,
    |a: &FpPoly, b: &FpPoly| a.sub(b)
);
binop!(
    Mul,
    mul,
    |a: &BigInt, b: &BigInt| a * b,
    |a: &FpPoly, b: &FpPoly| a.mul(b)
);

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        match self {
            RingElement::Int(a) => RingElement::Int(-a),
            RingElement::Poly(f) => RingElement::Poly(f.neg()),
        }
    }
}

impl Neg for RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        -&self
    }
}

/// Extended Euclid. The returned gcd is canonical; `gcd(0, 0) = 0`.
pub fn gcd_bezout(a: &RingElement, b: &RingElement) -> Result<BezoutCertificate> {
    let ring = a.same_ring(b)?;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut x0, mut x1) = (ring.one(), ring.zero());
    let (mut y0, mut y1) = (ring.zero(), ring.one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1)?;
        let x2 = &x0 - &(&q * &x1);
        let y2 = &y0 - &(&q * &y1);
        r0 = std::mem::replace(&mut r1, r);
        x0 = std::mem::replace(&mut x1, x2);
        y0 = std::mem::replace(&mut y1, y2);
    }
    let CanonicalAssociate { canonical, unit } = r0.normalize();
    Ok(BezoutCertificate {
        g: canonical,
        x: &x0 * &unit,
        y: &y0 * &unit,
    })
}

/// Canonical gcd.
pub fn gcd(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    a.same_ring(b)?;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    while !r1.is_zero() {
        let r = r0.div_rem(&r1)?.1;
        r0 = std::mem::replace(&mut r1, r);
    }
    Ok(r0.canonical())
}

/// Canonical gcd of a list; the gcd of the empty list is 0.
pub fn gcd_all<'a>(
    ring: Ring,
    items: impl IntoIterator<Item = &'a RingElement>,
) -> Result<RingElement> {
    items
        .into_iter()
        .try_fold(ring.zero(), |acc, x| gcd(&acc, x))
}

/// Canonical lcm; `lcm(a, 0) = 0`.
pub fn lcm(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    if a.is_zero() || b.is_zero() {
        a.same_ring(b)?;
        return Ok(a.ring().zero());
    }
    let g = gcd(a, b)?;
    Ok((a * &b.exact_div(&g)?).canonical())
}

/// Finds `(p, q)` with `gcd(p*a, p*b + q*c)` a unit, given that
/// `gcd(a, b, c)` is a unit.
///
/// Tries `q = 0` first, then searches growing boxes of the ring's element
/// enumeration. Existence is guaranteed in an elementary divisor domain; the
/// search gives up after `4096` enumeration steps per coordinate.
pub fn kaplansky_solve(
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
) -> Result<(RingElement, RingElement)> {
    const BOX_LIMIT: u64 = 4096;
    let ring = a.same_ring(b)?;
    c.same_ring(a)?;
    if !gcd_all(ring, [a, b, c])?.is_unit() {
        return Err(Error::Precondition(format!(
            "gcd({a}, {b}, {c}) is not a unit"
        )));
    }
    let works = |p: &RingElement, q: &RingElement| -> Result<bool> {
        Ok(gcd(&(p * a), &(&(p * b) + &(q * c)))?.is_unit())
    };
    let one = ring.one();
    let zero = ring.zero();
    if works(&one, &zero)? {
        return Ok((one, zero));
    }
    for size in 1..BOX_LIMIT {
        // new cells of the `(size + 1) x (size + 1)` box
        for i in 0..=size {
            let cells = if i == size {
                (0..=size).collect::<Vec<_>>()
            } else {
                vec![size]
            };
            for j in cells {
                let (p, q) = (ring.element_at(i), ring.element_at(j));
                if works(&p, &q)? {
                    return Ok((p, q));
                }
            }
        }
    }
    Err(Error::Precondition(format!(
        "no Kaplansky pair found for ({a}, {b}, {c}) within the search box"
    )))
}
