//! Matrix factorizations of a potential `W` and the even morphisms between
//! them.
//!
//! The underlying graded module is always `R^(rho|rho)` with odd operator
//! `D = [[0, v], [u, 0]]`, so an object is just the pair `(u, v)`.

mod cone;
mod hom;

pub use cone::{cone, cone_triangle, Triangle};
pub use hom::{hom_complex, is_null_homotopic, CohomologyPresentation, HomComplex, OddWitness};

use crate::error::{Error, Result};
use crate::matrix::RingMatrix;
use crate::ring::{gcd, Ring, RingElement};
use crate::smith::inverse;

/// A validated pair `(u, v)` with `u v = v u = W I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixFactorization {
    w: RingElement,
    u: RingMatrix,
    v: RingMatrix,
}

impl MatrixFactorization {
    pub fn new(u: RingMatrix, v: RingMatrix, w: RingElement) -> Result<Self> {
        if w.is_zero() {
            return Err(Error::ZeroPotential);
        }
        let ring = w.ring();
        for m in [&u, &v] {
            if m.ring() != ring {
                return Err(Error::MixedRings(ring, m.ring()));
            }
        }
        if !u.is_square() || !v.is_square() || u.rows() != v.rows() {
            return Err(Error::Shape(format!(
                "u is {}x{} and v is {}x{}; both must be square of one size",
                u.rows(),
                u.cols(),
                v.rows(),
                v.cols()
            )));
        }
        let target = RingMatrix::scalar(ring, u.rows(), &w);
        if u.try_mul(&v)? != target {
            return Err(Error::NotAFactorization(format!("u*v != {w}*I")));
        }
        if v.try_mul(&u)? != target {
            return Err(Error::NotAFactorization(format!("v*u != {w}*I")));
        }
        Ok(MatrixFactorization { w, u, v })
    }

    /// The zero object with `rho = 0`.
    pub fn empty(w: RingElement) -> Result<Self> {
        let ring = w.ring();
        Self::new(
            RingMatrix::zeros(ring, 0, 0),
            RingMatrix::zeros(ring, 0, 0),
            w,
        )
    }

    /// `e_v`: the rank one factorization `([W/v], [v])`.
    pub fn elementary(v: &RingElement, w: &RingElement) -> Result<Self> {
        if w.is_zero() {
            return Err(Error::ZeroPotential);
        }
        let u = w.exact_div(v)?;
        let ring = w.ring();
        Self::new(
            RingMatrix::scalar(ring, 1, &u),
            RingMatrix::scalar(ring, 1, v),
            w.clone(),
        )
    }

    /// `e_(d_1) + ... + e_(d_k)`.
    pub fn elementary_sum(vs: &[RingElement], w: &RingElement) -> Result<Self> {
        let mut acc = Self::empty(w.clone())?;
        for v in vs {
            acc = acc.direct_sum(&Self::elementary(v, w)?)?;
        }
        Ok(acc)
    }

    pub fn w(&self) -> &RingElement {
        &self.w
    }

    pub fn u(&self) -> &RingMatrix {
        &self.u
    }

    pub fn v(&self) -> &RingMatrix {
        &self.v
    }

    pub fn rho(&self) -> usize {
        self.u.rows()
    }

    pub fn ring(&self) -> Ring {
        self.w.ring()
    }

    /// For `rho = 1`, the entry of `v`.
    pub fn as_elementary(&self) -> Option<&RingElement> {
        (self.rho() == 1).then(|| self.v.get(0, 0))
    }

    /// `(u, v) -> (-v, -u)`.
    pub fn suspension(&self) -> Self {
        MatrixFactorization {
            w: self.w.clone(),
            u: self.v.neg(),
            v: self.u.neg(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.same_potential(other)?;
        Ok(MatrixFactorization {
            w: self.w.clone(),
            u: RingMatrix::block_diag(&self.u, &other.u)?,
            v: RingMatrix::block_diag(&self.v, &other.v)?,
        })
    }

    /// The factorization `(u, s v)` of `s W` for a unit `s`.
    pub fn scale_potential(&self, s: &RingElement) -> Result<Self> {
        if s.ring() != self.ring() {
            return Err(Error::MixedRings(self.ring(), s.ring()));
        }
        if !s.is_unit() {
            return Err(Error::NotAUnit(s.to_string()));
        }
        Self::new(self.u.clone(), self.v.scale(s), &self.w * s)
    }

    /// Transport along the strong isomorphism `(p, q)`: the result has
    /// `v' = p v q^-1` and `u' = q u p^-1`. Returns the new object and the
    /// isomorphism from `self` to it.
    pub fn conjugate(&self, p: &RingMatrix, q: &RingMatrix) -> Result<(Self, MfMorphism)> {
        let p_inv = inverse(p)?;
        let q_inv = inverse(q)?;
        let v = p.try_mul(&self.v)?.try_mul(&q_inv)?;
        let u = q.try_mul(&self.u)?.try_mul(&p_inv)?;
        let target = Self::new(u, v, self.w.clone())?;
        let iso = MfMorphism::new(self.clone(), target.clone(), p.clone(), q.clone())?;
        Ok((target, iso))
    }

    pub(crate) fn same_potential(&self, other: &Self) -> Result<()> {
        if self.ring() != other.ring() {
            return Err(Error::MixedRings(self.ring(), other.ring()));
        }
        if self.w != other.w {
            return Err(Error::Precondition(format!(
                "potentials differ: {} vs {}",
                self.w, other.w
            )));
        }
        Ok(())
    }
}

/// An even cocycle `f = diag(f00, f11)` between two factorizations of the
/// same potential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MfMorphism {
    source: MatrixFactorization,
    target: MatrixFactorization,
    f00: RingMatrix,
    f11: RingMatrix,
}

/// The cocycle equations `v2 f11 = f00 v1` and `u2 f00 = f11 u1`.
pub fn is_cocycle(
    source: &MatrixFactorization,
    target: &MatrixFactorization,
    f00: &RingMatrix,
    f11: &RingMatrix,
) -> Result<bool> {
    check_component_shapes(source, target, f00, f11)?;
    Ok(target.v.try_mul(f11)? == f00.try_mul(&source.v)?
        && target.u.try_mul(f00)? == f11.try_mul(&source.u)?)
}

fn check_component_shapes(
    source: &MatrixFactorization,
    target: &MatrixFactorization,
    f00: &RingMatrix,
    f11: &RingMatrix,
) -> Result<()> {
    source.same_potential(target)?;
    let want = (target.rho(), source.rho());
    for (name, m) in [("f00", f00), ("f11", f11)] {
        if m.ring() != source.ring() {
            return Err(Error::MixedRings(source.ring(), m.ring()));
        }
        if (m.rows(), m.cols()) != want {
            return Err(Error::Shape(format!(
                "{name} is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                want.0,
                want.1
            )));
        }
    }
    Ok(())
}

impl MfMorphism {
    pub fn new(
        source: MatrixFactorization,
        target: MatrixFactorization,
        f00: RingMatrix,
        f11: RingMatrix,
    ) -> Result<Self> {
        if !is_cocycle(&source, &target, &f00, &f11)? {
            return Err(Error::NotACocycle(
                "expected v2*f11 = f00*v1 and u2*f00 = f11*u1".into(),
            ));
        }
        Ok(MfMorphism {
            source,
            target,
            f00,
            f11,
        })
    }

    pub fn identity(a: &MatrixFactorization) -> Self {
        let id = RingMatrix::identity(a.ring(), a.rho());
        MfMorphism {
            source: a.clone(),
            target: a.clone(),
            f00: id.clone(),
            f11: id,
        }
    }

    pub fn zero(source: &MatrixFactorization, target: &MatrixFactorization) -> Result<Self> {
        let z = RingMatrix::zeros(source.ring(), target.rho(), source.rho());
        Self::new(source.clone(), target.clone(), z.clone(), z)
    }

    pub fn source(&self) -> &MatrixFactorization {
        &self.source
    }

    pub fn target(&self) -> &MatrixFactorization {
        &self.target
    }

    pub fn f00(&self) -> &RingMatrix {
        &self.f00
    }

    pub fn f11(&self) -> &RingMatrix {
        &self.f11
    }

    /// Always true for a constructed value; re-checks the equations.
    pub fn is_cocycle(&self) -> bool {
        is_cocycle(&self.source, &self.target, &self.f00, &self.f11).unwrap_or(false)
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &MfMorphism) -> Result<Self> {
        if g.target != self.source {
            return Err(Error::Precondition(
                "composition needs g.target == f.source".into(),
            ));
        }
        Ok(MfMorphism {
            source: g.source.clone(),
            target: self.target.clone(),
            f00: self.f00.try_mul(&g.f00)?,
            f11: self.f11.try_mul(&g.f11)?,
        })
    }

    pub fn try_add(&self, other: &MfMorphism) -> Result<Self> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Precondition(
                "morphisms have different endpoints".into(),
            ));
        }
        Ok(MfMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            f00: self.f00.try_add(&other.f00)?,
            f11: self.f11.try_add(&other.f11)?,
        })
    }

    pub fn scale(&self, c: &RingElement) -> Self {
        MfMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            f00: self.f00.scale(c),
            f11: self.f11.scale(c),
        }
    }

    /// `Σf`: the same maps with the grading swapped.
    pub fn suspension(&self) -> Self {
        MfMorphism {
            source: self.source.suspension(),
            target: self.target.suspension(),
            f00: self.f11.clone(),
            f11: self.f00.clone(),
        }
    }

    /// Transport to the potential `s W`; components are unchanged.
    pub fn scale_potential(&self, s: &RingElement) -> Result<Self> {
        Ok(MfMorphism {
            source: self.source.scale_potential(s)?,
            target: self.target.scale_potential(s)?,
            f00: self.f00.clone(),
            f11: self.f11.clone(),
        })
    }

    /// For a morphism between elementary factorizations built by
    /// [`elementary_morphism`], the scalar `r`.
    pub fn elementary_scalar(&self) -> Option<RingElement> {
        let v1 = self.source.as_elementary()?;
        let v2 = self.target.as_elementary()?;
        let d = gcd(v1, v2).ok()?;
        let r = self.f00.get(0, 0).exact_div(&v2.exact_div(&d).ok()?).ok()?;
        (self.f11.get(0, 0) == &(&r * &v1.exact_div(&d).ok()?)).then_some(r)
    }
}

/// The morphism `e_v1 -> e_v2` given by `r * diag(v2/d, v1/d)` with
/// `d = gcd(v1, v2)`.
pub fn elementary_morphism(
    source: &MatrixFactorization,
    target: &MatrixFactorization,
    r: &RingElement,
) -> Result<MfMorphism> {
    let (Some(v1), Some(v2)) = (source.as_elementary(), target.as_elementary()) else {
        return Err(Error::Precondition(
            "elementary morphisms need rank one endpoints".into(),
        ));
    };
    source.same_potential(target)?;
    let d = gcd(v1, v2)?;
    let ring = source.ring();
    let f00 = RingMatrix::scalar(ring, 1, &(r * &v2.exact_div(&d)?));
    let f11 = RingMatrix::scalar(ring, 1, &(r * &v1.exact_div(&d)?));
    MfMorphism::new(source.clone(), target.clone(), f00, f11)
}
