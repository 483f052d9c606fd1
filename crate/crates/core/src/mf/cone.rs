use super::{is_null_homotopic, MatrixFactorization, MfMorphism};
use crate::error::Result;
use crate::matrix::RingMatrix;

/// `a1 -f-> a2 -phi-> C(f) -psi-> Σa1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub a1: MatrixFactorization,
    pub a2: MatrixFactorization,
    pub cone: MatrixFactorization,
    pub f: MfMorphism,
    pub phi: MfMorphism,
    pub psi: MfMorphism,
}

/// The mapping cone with `u = [[-v1, 0], [f11, u2]]` and
/// `v = [[-u1, 0], [f00, v2]]`.
pub fn cone(f: &MfMorphism) -> Result<MatrixFactorization> {
    let (a1, a2) = (f.source(), f.target());
    let ring = a1.ring();
    let zero = RingMatrix::zeros(ring, a1.rho(), a2.rho());
    let u = RingMatrix::from_blocks(&a1.v().neg(), &zero, f.f11(), a2.u())?;
    let v = RingMatrix::from_blocks(&a1.u().neg(), &zero, f.f00(), a2.v())?;
    MatrixFactorization::new(u, v, a1.w().clone())
}

pub fn cone_triangle(f: &MfMorphism) -> Result<Triangle> {
    let (a1, a2) = (f.source(), f.target());
    let c = cone(f)?;
    let ring = a1.ring();
    let (r1, r2) = (a1.rho(), a2.rho());
    let inclusion = RingMatrix::from_blocks(
        &RingMatrix::zeros(ring, r1, 0),
        &RingMatrix::zeros(ring, r1, r2),
        &RingMatrix::zeros(ring, r2, 0),
        &RingMatrix::identity(ring, r2),
    )?;
    let projection = RingMatrix::from_blocks(
        &RingMatrix::identity(ring, r1),
        &RingMatrix::zeros(ring, r1, r2),
        &RingMatrix::zeros(ring, 0, r1),
        &RingMatrix::zeros(ring, 0, r2),
    )?;
    let phi = MfMorphism::new(a2.clone(), c.clone(), inclusion.clone(), inclusion)?;
    let psi = MfMorphism::new(c.clone(), a1.suspension(), projection.clone(), projection)?;
    Ok(Triangle {
        a1: a1.clone(),
        a2: a2.clone(),
        cone: c,
        f: f.clone(),
        phi,
        psi,
    })
}

impl Triangle {
    /// `phi`, `psi` are cocycles and `phi∘f`, `psi∘phi` are null-homotopic.
    pub fn verify(&self) -> Result<bool> {
        if !self.phi.is_cocycle() || !self.psi.is_cocycle() {
            return Ok(false);
        }
        let pf = self.phi.compose(&self.f)?;
        let pp = self.psi.compose(&self.phi)?;
        Ok(is_null_homotopic(&pf)?.is_some() && is_null_homotopic(&pp)?.is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mf::elementary_morphism;
    use crate::ring::{Ring, RingElement};
    use crate::smith::smith;

    fn z(n: i64) -> RingElement {
        RingElement::from(n)
    }

    #[test]
    fn cone_of_elementary_morphism() {
        let w = z(12);
        let e2 = MatrixFactorization::elementary(&z(2), &w).unwrap();
        let e6 = MatrixFactorization::elementary(&z(6), &w).unwrap();
        let f = elementary_morphism(&e2, &e6, &z(1)).unwrap();
        let c = cone(&f).unwrap();
        let zm = |r: &[&[i64]]| RingMatrix::from_i64(Ring::Integers, r).unwrap();
        assert_eq!(c.u(), &zm(&[&[-2, 0], &[1, 2]]));
        assert_eq!(c.v(), &zm(&[&[-6, 0], &[3, 6]]));
        assert_eq!(smith(c.u()).invariant_factors, vec![z(1), z(4)]);
        assert!(cone_triangle(&f).unwrap().verify().unwrap());
    }

    #[test]
    fn cone_of_zero_splits() {
        let w = z(9);
        let e3 = MatrixFactorization::elementary(&z(3), &w).unwrap();
        let f = MfMorphism::zero(&e3, &e3).unwrap();
        let c = cone(&f).unwrap();
        let expected = e3.suspension().direct_sum(&e3).unwrap();
        assert_eq!(c, expected);
        assert!(cone_triangle(&f).unwrap().verify().unwrap());
    }
}
