//! Classification of matrix factorizations: strong isomorphism via Smith
//! forms, hmf classes as multisets of primary labels, cone splitting and
//! hom modules.

mod primary;

pub use primary::{
    critical_decompose, critical_ideal_generator, hmf_iso, localize_class, primary_decompose,
    realize_class, suspend_class, valuation, CriticalData, MfClass,
};

use crate::error::{Error, Result};
use crate::matrix::RingMatrix;
use crate::mf::{
    cone, hom_complex, CohomologyPresentation, HomComplex, MatrixFactorization, MfMorphism,
};
use crate::module::ModuleInvariants;
use crate::ring::{gcd, gcd_all, lcm, RingElement};
use crate::smith::{cokernel_invariants, smith};

/// `a ≅ e_(d_1) + ... + e_(d_rho)` in zmf, with the certificate
/// `A v = v0 B`, `B u = u0 A` where `v0 = diag(d)` and `u0 = diag(W/d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongDecomposition {
    pub factors: Vec<RingElement>,
    pub a_v: RingMatrix,
    pub b_v: RingMatrix,
    pub normal_form: MatrixFactorization,
}

impl StrongDecomposition {
    /// Re-checks the block transform `diag(A, B)` against `a`.
    pub fn verify(&self, a: &MatrixFactorization) -> Result<bool> {
        let v0 = self.normal_form.v();
        let u0 = self.normal_form.u();
        Ok(self.a_v.try_mul(a.v())? == v0.try_mul(&self.b_v)?
            && self.b_v.try_mul(a.u())? == u0.try_mul(&self.a_v)?
            && self.a_v.det()?.is_unit()
            && self.b_v.det()?.is_unit())
    }

    /// The witness as the strong isomorphism `a -> normal_form`.
    pub fn isomorphism(&self, a: &MatrixFactorization) -> Result<MfMorphism> {
        MfMorphism::new(
            a.clone(),
            self.normal_form.clone(),
            self.a_v.clone(),
            self.b_v.clone(),
        )
    }
}

pub fn strong_decompose(a: &MatrixFactorization) -> Result<StrongDecomposition> {
    let s = smith(a.v());
    // v has full rank because u v = W I with W != 0
    let normal_form = MatrixFactorization::elementary_sum(&s.invariant_factors, a.w())?;
    Ok(StrongDecomposition {
        factors: s.invariant_factors,
        a_v: s.u,
        b_v: s.v,
        normal_form,
    })
}

/// Isomorphism in zmf: equal rank and equal invariant factors of `v`.
pub fn strong_iso(a: &MatrixFactorization, b: &MatrixFactorization) -> Result<bool> {
    a.same_potential(b)?;
    Ok(a.rho() == b.rho() && smith(a.v()).invariant_factors == smith(b.v()).invariant_factors)
}

/// `e_v1 + e_v2 ≅ e_gcd + e_lcm`.
pub fn merge_pair(
    v1: &RingElement,
    v2: &RingElement,
    w: &RingElement,
) -> Result<(RingElement, RingElement)> {
    for v in [v1, v2] {
        if !v.divides(w)? {
            return Err(Error::not_divisible(w, v));
        }
    }
    Ok((gcd(v1, v2)?, lcm(v1, v2)?))
}

/// `e_d` is a zero object of hmf iff `gcd(d, W/d)` is a unit.
pub fn elementary_is_zero(d: &RingElement, w: &RingElement) -> Result<bool> {
    Ok(gcd(d, &w.exact_div(d)?)?.is_unit())
}

pub fn is_zero_object(a: &MatrixFactorization) -> Result<bool> {
    for d in strong_decompose(a)?.factors {
        if !elementary_is_zero(&d, a.w())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The pair `(xi, zeta)` attached to an elementary morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSplit {
    pub xi: RingElement,
    pub zeta: RingElement,
}

impl ConeSplit {
    /// Sorted so that the first divides the second when they form a chain.
    pub fn sorted(&self) -> [RingElement; 2] {
        let mut pair = [self.xi.clone(), self.zeta.clone()];
        if !pair[0].divides(&pair[1]).unwrap_or(false) {
            pair.swap(0, 1);
        }
        pair
    }
}

fn elementary_data(f: &MfMorphism) -> Result<(RingElement, RingElement, RingElement)> {
    let (Some(v1), Some(v2)) = (f.source().as_elementary(), f.target().as_elementary()) else {
        return Err(Error::Precondition(
            "expected a morphism between elementary factorizations".into(),
        ));
    };
    let r = f.elementary_scalar().ok_or_else(|| {
        Error::Precondition("morphism is not of the form r*diag(v2/d, v1/d)".into())
    })?;
    Ok((v1.clone(), v2.clone(), r))
}

/// `xi = gcd(v1, v2, u1, u2, r) * v1 / gcd(v1, v2)` and `zeta = v1 u2 / xi`,
/// both canonical. They are the invariant factors of the cone's `u` block;
/// the `v` block has factors `W/xi`, `W/zeta`.
pub fn cone_split(f: &MfMorphism) -> Result<ConeSplit> {
    let (v1, v2, r) = elementary_data(f)?;
    let w = f.source().w();
    let u1 = w.exact_div(&v1)?;
    let u2 = w.exact_div(&v2)?;
    let s = gcd_all(w.ring(), [&v1, &v2, &u1, &u2, &r])?;
    let xi = (&s * &v1.exact_div(&gcd(&v1, &v2)?)?).canonical();
    let zeta = (&v1 * &u2).exact_div(&xi)?.canonical();
    Ok(ConeSplit { xi, zeta })
}

/// Isomorphism in hmf for an elementary morphism.
pub fn is_iso(f: &MfMorphism) -> Result<bool> {
    let split = cone_split(f)?;
    let w = f.source().w();
    Ok(elementary_is_zero(&split.xi, w)? && elementary_is_zero(&split.zeta, w)?)
}

/// `(Hom_hmf(a, b), Hom_hmf(a, Σb))` as cyclic decompositions.
pub fn hmf_hom(
    a: &MatrixFactorization,
    b: &MatrixFactorization,
) -> Result<(ModuleInvariants, ModuleInvariants)> {
    let hc = hom_complex(a, b)?;
    Ok((hc.even_cohomology(), hc.odd_cohomology()))
}

/// `Hom_hmf(t, a)` presented on cycles, reusable across many morphisms
/// out of `a` or into `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomOutOf {
    complex: HomComplex,
    presentation: CohomologyPresentation,
    order: Option<RingElement>,
}

impl HomOutOf {
    pub fn new(t: &MatrixFactorization, a: &MatrixFactorization) -> Result<Self> {
        let complex = hom_complex(t, a)?;
        let presentation = complex.even_presentation();
        let order = presentation.invariants().order();
        Ok(HomOutOf {
            complex,
            presentation,
            order,
        })
    }

    pub fn invariants(&self) -> ModuleInvariants {
        self.presentation.invariants()
    }
}

/// Whether `g -> f∘g` is bijective on `Hom_hmf(t, source) -> Hom_hmf(t, target)`.
///
/// The hom modules are torsion, so the map is an isomorphism iff it is onto
/// and both modules have the same order ideal.
pub fn induced_map_is_iso(f: &MfMorphism, t: &MatrixFactorization) -> Result<bool> {
    induced_map_is_iso_with(
        f,
        &HomOutOf::new(t, f.source())?,
        &HomOutOf::new(t, f.target())?,
    )
}

/// As [`induced_map_is_iso`] with precomputed hom presentations
/// `Hom(t, f.source())` and `Hom(t, f.target())`.
pub fn induced_map_is_iso_with(f: &MfMorphism, from: &HomOutOf, to: &HomOutOf) -> Result<bool> {
    if from.order.is_none() || from.order != to.order {
        return Ok(false);
    }
    let (h1, p1) = (&from.complex, &from.presentation);
    let (h2, p2) = (&to.complex, &to.presentation);
    let mut m = RingMatrix::zeros(f.source().ring(), p2.to_coords.rows(), 0);
    for j in 0..p1.cycles.cols() {
        let (g00, g11) = h1.unflatten(&p1.cycles.col_range(j, j + 1))?;
        let fg00 = f.f00().try_mul(&g00)?;
        let fg11 = f.f11().try_mul(&g11)?;
        m = hstack(&m, &p2.to_coords.try_mul(&h2.flatten(&fg00, &fg11)?)?)?;
    }
    Ok(cokernel_invariants(&hstack(&m, &p2.relations)?).is_zero())
}

fn hstack(a: &RingMatrix, b: &RingMatrix) -> Result<RingMatrix> {
    let ring = a.ring();
    RingMatrix::from_blocks(
        a,
        b,
        &RingMatrix::zeros(ring, 0, a.cols()),
        &RingMatrix::zeros(ring, 0, b.cols()),
    )
}

/// The cone of `f` as a sum of elementary factorizations, read off its
/// Smith form.
pub fn cone_factors(f: &MfMorphism) -> Result<Vec<RingElement>> {
    Ok(strong_decompose(&cone(f)?)?.factors)
}
