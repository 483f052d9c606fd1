//! Smith normal form with transformation certificates, determinantal
//! invariants, and the linear algebra built on top of them.

use crate::error::{Error, Result};
use crate::matrix::RingMatrix;
use crate::module::ModuleInvariants;
use crate::ring::{gcd, gcd_bezout, RingElement};

/// `U * A = D * V` with `U`, `V` invertible and `D` diagonal in Smith form.
///
/// `v_inv` is `V^-1`, kept alongside `V` so that kernels and solutions can
/// be read off without inverting anything.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: RingMatrix,
    pub v: RingMatrix,
    pub v_inv: RingMatrix,
    pub d: RingMatrix,
    pub rank: usize,
    pub invariant_factors: Vec<RingElement>,
}

impl SmithDecomposition {
    /// Checks every certificate property against the input matrix and returns
    /// the first violation.
    pub fn verify(&self, a: &RingMatrix) -> std::result::Result<(), String> {
        let ua = self.u.try_mul(a).map_err(|e| e.to_string())?;
        let dv = self.d.try_mul(&self.v).map_err(|e| e.to_string())?;
        if ua != dv {
            return Err("U*A != D*V".into());
        }
        let n = self.v.rows();
        if self.v.try_mul(&self.v_inv).map_err(|e| e.to_string())?
            != RingMatrix::identity(a.ring(), n)
        {
            return Err("V*V^-1 != I".into());
        }
        for (name, m) in [("U", &self.u), ("V", &self.v)] {
            if !m.det().map_err(|e| e.to_string())?.is_unit() {
                return Err(format!("det({name}) is not a unit"));
            }
        }
        if !self.d.is_diagonal() {
            return Err("D is not diagonal".into());
        }
        for i in 0..self.d.rows().min(self.d.cols()) {
            let e = self.d.get(i, i);
            if i < self.rank {
                if e.is_zero() || !e.is_canonical() || *e != self.invariant_factors[i] {
                    return Err(format!("bad diagonal entry {e} at {i}"));
                }
            } else if !e.is_zero() {
                return Err(format!("non-zero entry {e} beyond rank"));
            }
        }
        for w in self.invariant_factors.windows(2) {
            if !w[0].divides(&w[1]).map_err(|e| e.to_string())? {
                return Err(format!("{} does not divide {}", w[0], w[1]));
            }
        }
        Ok(())
    }
}

struct Reducer {
    d: RingMatrix,
    u: RingMatrix,
    v: RingMatrix,
    v_inv: RingMatrix,
}

impl Reducer {
    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v_inv.swap_cols(a, b);
        self.v.swap_rows(a, b);
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    /// Zeroes `d[i][t]` against the pivot `d[t][t]`.
    fn clear_below(&mut self, t: usize, i: usize) -> Result<()> {
        let a = self.d.get(t, t).clone();
        let b = self.d.get(i, t).clone();
        if a.divides(&b)? {
            let q = -b.exact_div(&a)?;
            self.d.add_row_multiple(i, t, &q);
            self.u.add_row_multiple(i, t, &q);
        } else {
            let cert = gcd_bezout(&a, &b)?;
            let alpha = a.exact_div(&cert.g)?;
            let beta = b.exact_div(&cert.g)?;
            let block = [&cert.x, &cert.y, &-&beta, &alpha];
            self.d.mix_rows(t, i, block);
            self.u.mix_rows(t, i, block);
        }
        Ok(())
    }

    /// Zeroes `d[t][j]` against the pivot `d[t][t]`.
    fn clear_right(&mut self, t: usize, j: usize) -> Result<()> {
        let a = self.d.get(t, t).clone();
        let b = self.d.get(t, j).clone();
        if a.divides(&b)? {
            let q = b.exact_div(&a)?;
            let neg_q = -&q;
            self.d.add_col_multiple(j, t, &neg_q);
            self.v_inv.add_col_multiple(j, t, &neg_q);
            self.v.add_row_multiple(t, j, &q);
        } else {
            let cert = gcd_bezout(&a, &b)?;
            let alpha = a.exact_div(&cert.g)?;
            let beta = b.exact_div(&cert.g)?;
            let block = [&cert.x, &cert.y, &-&beta, &alpha];
            self.d.mix_cols(t, j, block);
            self.v_inv.mix_cols(t, j, block);
            self.v.mix_rows(t, j, [&alpha, &beta, &-&cert.y, &cert.x]);
        }
        Ok(())
    }

    fn normalize_entry(&mut self, i: usize) {
        let norm = self.d.get(i, i).normalize();
        if !norm.unit.is_one() {
            self.d.scale_row(i, &norm.unit);
            self.u.scale_row(i, &norm.unit);
        }
    }

    /// `(d_i, d_j) -> (gcd, lcm)` on the diagonal.
    fn gcd_lcm(&mut self, i: usize, j: usize) -> Result<()> {
        let one = self.d.ring().one();
        self.d.add_col_multiple(i, j, &one);
        self.v_inv.add_col_multiple(i, j, &one);
        self.v.add_row_multiple(j, i, &-&one);
        self.clear_below(i, j)?;
        self.clear_right(i, j)?;
        self.normalize_entry(i);
        self.normalize_entry(j);
        Ok(())
    }
}

/// Smith normal form by gcd-driven row and column reduction.
///
/// Each step moves the smallest non-zero entry of the remaining block to the
/// pivot, clears its row and column with Bézout 2x2 blocks (or plain
/// subtraction when the pivot already divides), and repeats until the cross
/// is clear. The divisibility chain is repaired afterwards with the
/// `(d_i, d_j) -> (gcd, lcm)` move.
pub fn smith(a: &RingMatrix) -> SmithDecomposition {
    smith_checked(a).expect("ring operations inside one instance cannot fail")
}

fn smith_checked(a: &RingMatrix) -> Result<SmithDecomposition> {
    let ring = a.ring();
    let (m, n) = (a.rows(), a.cols());
    let mut r = Reducer {
        d: a.clone(),
        u: RingMatrix::identity(ring, m),
        v: RingMatrix::identity(ring, n),
        v_inv: RingMatrix::identity(ring, n),
    };
    let mut t = 0;
    while t < m.min(n) {
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let e = r.d.get(i, j);
                if e.is_zero() {
                    continue;
                }
                if pivot.is_none_or(|(pi, pj)| e.size_cmp(r.d.get(pi, pj)).is_lt()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        r.swap_rows(t, pi);
        r.swap_cols(t, pj);
        loop {
            for i in t + 1..m {
                if !r.d.get(i, t).is_zero() {
                    r.clear_below(t, i)?;
                }
            }
            for j in t + 1..n {
                if !r.d.get(t, j).is_zero() {
                    r.clear_right(t, j)?;
                }
            }
            if (t + 1..m).all(|i| r.d.get(i, t).is_zero()) {
                break;
            }
        }
        r.normalize_entry(t);
        t += 1;
    }
    let rank = t;
    for i in 0..rank {
        for j in i + 1..rank {
            if !r.d.get(i, i).divides(r.d.get(j, j))? {
                r.gcd_lcm(i, j)?;
            }
        }
    }
    let invariant_factors = (0..rank).map(|i| r.d.get(i, i).clone()).collect();
    Ok(SmithDecomposition {
        u: r.u,
        v: r.v,
        v_inv: r.v_inv,
        d: r.d,
        rank,
        invariant_factors,
    })
}

/// Where a [`DeterminantalInvariants`] value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaSource {
    /// Explicit enumeration of all minors.
    Minors,
    /// Products of Smith invariant factors (inputs larger than 5x5).
    Smith,
}

/// `delta[k]` is the canonical gcd of all `k x k` minors; `delta[0] = 1` and
/// the list stops at the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminantalInvariants {
    pub delta: Vec<RingElement>,
    pub source: DeltaSource,
}

impl DeterminantalInvariants {
    pub fn rank(&self) -> usize {
        self.delta.len() - 1
    }
}

const MINOR_ENUMERATION_CAP: usize = 5;

pub fn determinantal_invariants(a: &RingMatrix) -> DeterminantalInvariants {
    let ring = a.ring();
    if a.rows() > MINOR_ENUMERATION_CAP || a.cols() > MINOR_ENUMERATION_CAP {
        let s = smith(a);
        let mut delta = vec![ring.one()];
        for d in &s.invariant_factors {
            let next = delta.last().unwrap() * d;
            delta.push(next);
        }
        return DeterminantalInvariants {
            delta,
            source: DeltaSource::Smith,
        };
    }
    let mut delta = vec![ring.one()];
    for k in 1..=a.rows().min(a.cols()) {
        let mut g = ring.zero();
        for rows in subsets(a.rows(), k) {
            for cols in subsets(a.cols(), k) {
                let minor = a.select(&rows, &cols).det().expect("square minor");
                g = gcd(&g, &minor).expect("single ring");
            }
        }
        if g.is_zero() {
            break;
        }
        delta.push(g);
    }
    DeterminantalInvariants {
        delta,
        source: DeltaSource::Minors,
    }
}

/// `d_k = delta_k / delta_(k-1)`.
pub fn invariant_factors_via_delta(a: &RingMatrix) -> Vec<RingElement> {
    let inv = determinantal_invariants(a);
    inv.delta
        .windows(2)
        .map(|w| {
            w[1].exact_div(&w[0])
                .expect("delta chain divides")
                .canonical()
        })
        .collect()
}

/// All `k`-element subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(pos) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[pos] += 1;
        for i in pos + 1..k {
            cur[i] = cur[i - 1] + 1;
        }
    }
}

/// Matrix equivalence: same shape and the same invariant factors.
pub fn equivalent(a: &RingMatrix, b: &RingMatrix) -> Result<bool> {
    if a.ring() != b.ring() {
        return Err(Error::MixedRings(a.ring(), b.ring()));
    }
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(Error::Shape(format!(
            "{}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(smith(a).invariant_factors == smith(b).invariant_factors)
}

/// Columns freely generating `ker A`, taken from the Smith column transform.
pub fn kernel_basis(a: &RingMatrix) -> RingMatrix {
    let s = smith(a);
    s.v_inv.col_range(s.rank, a.cols())
}

/// Cyclic decomposition of `coker A = R^m / A R^n`.
pub fn cokernel_invariants(a: &RingMatrix) -> ModuleInvariants {
    let s = smith(a);
    ModuleInvariants::from_smith_diagonal(a.ring(), &s.invariant_factors, a.rows() - s.rank)
}

/// Solves `A X = B` over the ring (not its fraction field); `None` when no
/// solution exists.
pub fn solve(a: &RingMatrix, b: &RingMatrix) -> Result<Option<RingMatrix>> {
    if a.rows() != b.rows() {
        return Err(Error::Shape(format!(
            "system has {} equations but right-hand side has {} rows",
            a.rows(),
            b.rows()
        )));
    }
    let s = smith(a);
    solve_with(&s, b)
}

/// As [`solve`], reusing a decomposition of `A`.
pub fn solve_with(s: &SmithDecomposition, b: &RingMatrix) -> Result<Option<RingMatrix>> {
    let c = s.u.try_mul(b)?;
    let ring = b.ring();
    let n = s.v.rows();
    let mut y = RingMatrix::zeros(ring, n, b.cols());
    for i in 0..c.rows() {
        for j in 0..b.cols() {
            let e = c.get(i, j);
            if i < s.rank {
                let d = &s.invariant_factors[i];
                if !d.divides(e)? {
                    return Ok(None);
                }
                y.set(i, j, e.exact_div(d)?);
            } else if !e.is_zero() {
                return Ok(None);
            }
        }
    }
    Ok(Some(s.v_inv.try_mul(&y)?))
}

/// The inverse of a square matrix with unit determinant.
pub fn inverse(a: &RingMatrix) -> Result<RingMatrix> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "inverse of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let s = smith(a);
    if s.rank < a.rows() || s.invariant_factors.iter().any(|d| !d.is_one()) {
        return Err(Error::NotAUnit(format!("det = {}", a.det()?)));
    }
    // U A = V, so A^-1 = V^-1 U
    s.v_inv.try_mul(&s.u)
}
