//! The hom complex `Hom(a1, a2)` with differential `d(f) = D2 f - (-1)^|f| f D1`,
//! flattened into matrices over the base ring.
//!
//! A `rho2 x rho1` block is flattened row-major. Even vectors are
//! `vec(f00) ++ vec(f11)`, odd vectors are `vec(s01) ++ vec(s10)`.

use super::{MatrixFactorization, MfMorphism};
use crate::error::{Error, Result};
use crate::matrix::RingMatrix;
use crate::module::ModuleInvariants;
use crate::smith::{cokernel_invariants, smith, solve};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomComplex {
    source_rho: usize,
    target_rho: usize,
    /// even -> odd
    pub d_even: RingMatrix,
    /// odd -> even
    pub d_odd: RingMatrix,
}

/// A cohomology module `ker d_out / im d_in` presented on a free basis of
/// cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyPresentation {
    /// Columns form a basis of the cycles.
    pub cycles: RingMatrix,
    /// Maps a cycle to its coordinates in `cycles`.
    pub to_coords: RingMatrix,
    /// Boundaries in cycle coordinates; the module is their cokernel.
    pub relations: RingMatrix,
}

impl CohomologyPresentation {
    pub fn invariants(&self) -> ModuleInvariants {
        cokernel_invariants(&self.relations)
    }
}

/// An odd element `s` with `d(s) = f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddWitness {
    pub s01: RingMatrix,
    pub s10: RingMatrix,
}

/// `X -> A X` on `rows x cols` blocks.
fn left_op(a: &RingMatrix, cols: usize) -> RingMatrix {
    let rows = a.rows();
    let mut out = RingMatrix::zeros(a.ring(), rows * cols, a.cols() * cols);
    for i in 0..rows {
        for k in 0..a.cols() {
            let e = a.get(i, k);
            if e.is_zero() {
                continue;
            }
            for j in 0..cols {
                out.set(i * cols + j, k * cols + j, e.clone());
            }
        }
    }
    out
}

/// `X -> X B` on `rows x cols` blocks.
fn right_op(b: &RingMatrix, rows: usize) -> RingMatrix {
    let (inner, cols) = (b.rows(), b.cols());
    let mut out = RingMatrix::zeros(b.ring(), rows * cols, rows * inner);
    for i in 0..rows {
        for k in 0..inner {
            for j in 0..cols {
                let e = b.get(k, j);
                if !e.is_zero() {
                    out.set(i * cols + j, i * inner + k, e.clone());
                }
            }
        }
    }
    out
}

pub fn hom_complex(a1: &MatrixFactorization, a2: &MatrixFactorization) -> Result<HomComplex> {
    a1.same_potential(a2)?;
    let (r1, r2) = (a1.rho(), a2.rho());
    let l = |m: &RingMatrix| left_op(m, r1);
    let r = |m: &RingMatrix| right_op(m, r2);
    // d(s) = (v2 s10 + s01 u1, u2 s01 + s10 v1)
    let d_odd = RingMatrix::from_blocks(&r(a1.u()), &l(a2.v()), &l(a2.u()), &r(a1.v()))?;
    // d(f) = (v2 f11 - f00 v1, u2 f00 - f11 u1)
    let d_even =
        RingMatrix::from_blocks(&r(a1.v()).neg(), &l(a2.v()), &l(a2.u()), &r(a1.u()).neg())?;
    Ok(HomComplex {
        source_rho: r1,
        target_rho: r2,
        d_even,
        d_odd,
    })
}

fn presentation(d_out: &RingMatrix, d_in: &RingMatrix) -> Result<CohomologyPresentation> {
    let n = d_out.cols();
    let s = smith(d_out);
    let cycles = s.v_inv.col_range(s.rank, n);
    let to_coords = s.v.row_range(s.rank, n);
    let relations = to_coords.try_mul(d_in)?;
    Ok(CohomologyPresentation {
        cycles,
        to_coords,
        relations,
    })
}

impl HomComplex {
    pub fn block_len(&self) -> usize {
        self.source_rho * self.target_rho
    }

    pub fn even_presentation(&self) -> CohomologyPresentation {
        presentation(&self.d_even, &self.d_odd).expect("hom complex shapes agree")
    }

    pub fn odd_presentation(&self) -> CohomologyPresentation {
        presentation(&self.d_odd, &self.d_even).expect("hom complex shapes agree")
    }

    /// `Hom_hmf(a1, a2)`.
    pub fn even_cohomology(&self) -> ModuleInvariants {
        self.even_presentation().invariants()
    }

    /// `Hom_hmf(a1, Σ a2)` up to isomorphism.
    pub fn odd_cohomology(&self) -> ModuleInvariants {
        self.odd_presentation().invariants()
    }

    /// Flattens a pair of `rho2 x rho1` blocks into a column vector.
    pub fn flatten(&self, first: &RingMatrix, second: &RingMatrix) -> Result<RingMatrix> {
        let want = (self.target_rho, self.source_rho);
        for m in [first, second] {
            if (m.rows(), m.cols()) != want {
                return Err(Error::Shape(format!(
                    "component is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    want.0,
                    want.1
                )));
            }
        }
        let entries: Vec<_> = first
            .entries()
            .iter()
            .chain(second.entries())
            .cloned()
            .map(|e| vec![e])
            .collect();
        RingMatrix::from_rows(first.ring(), 1, entries)
    }

    /// Inverse of [`flatten`](Self::flatten) for a single column.
    pub fn unflatten(&self, column: &RingMatrix) -> Result<(RingMatrix, RingMatrix)> {
        let k = self.block_len();
        if column.cols() != 1 || column.rows() != 2 * k {
            return Err(Error::Shape(
                "expected a column of length 2*rho1*rho2".into(),
            ));
        }
        let block = |start: usize| {
            let rows = (0..self.target_rho)
                .map(|i| {
                    (0..self.source_rho)
                        .map(|j| column.get(start + i * self.source_rho + j, 0).clone())
                        .collect()
                })
                .collect();
            RingMatrix::from_rows(column.ring(), self.source_rho, rows)
        };
        Ok((block(0)?, block(k)?))
    }
}

/// Solves `d(s) = f` for an odd `s`; `Some(witness)` iff `f` is
/// null-homotopic.
pub fn is_null_homotopic(f: &MfMorphism) -> Result<Option<OddWitness>> {
    let hc = hom_complex(f.source(), f.target())?;
    let rhs = hc.flatten(f.f00(), f.f11())?;
    let Some(x) = solve(&hc.d_odd, &rhs)? else {
        return Ok(None);
    };
    let (s01, s10) = hc.unflatten(&x)?;
    Ok(Some(OddWitness { s01, s10 }))
}

impl OddWitness {
    /// Recomputes `d(s)` and compares it with `f`.
    pub fn certifies(&self, f: &MfMorphism) -> Result<bool> {
        let (a1, a2) = (f.source(), f.target());
        let f00 = a2
            .v()
            .try_mul(&self.s10)?
            .try_add(&self.s01.try_mul(a1.u())?)?;
        let f11 = a2
            .u()
            .try_mul(&self.s01)?
            .try_add(&self.s10.try_mul(a1.v())?)?;
        Ok(&f00 == f.f00() && &f11 == f.f11())
    }
}
