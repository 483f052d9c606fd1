use std::fmt;
use std::ops::{Index, Mul};

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};

/// A dense row-major matrix over one ring instance. Zero-sized dimensions
/// are allowed and keep their ring tag.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<RingElement>,
}

impl RingMatrix {
    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        RingMatrix {
            ring,
            rows,
            cols,
            data: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        Self::scalar(ring, n, &ring.one())
    }

    pub fn scalar(ring: Ring, n: usize, c: &RingElement) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn diagonal(ring: Ring, diag: &[RingElement]) -> Result<Self> {
        let mut m = Self::zeros(ring, diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            check_ring(ring, d)?;
            m.set(i, i, d.clone());
        }
        Ok(m)
    }

    /// Builds a matrix from rows; every row must have `cols` entries from `ring`.
    pub fn from_rows(ring: Ring, cols: usize, rows: Vec<Vec<RingElement>>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for e in row {
                check_ring(ring, &e)?;
                data.push(e);
            }
        }
        Ok(RingMatrix {
            ring,
            rows: nrows,
            cols,
            data,
        })
    }

    /// Convenience constructor from small integers (mapped into `ring`).
    pub fn from_i64(ring: Ring, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&n| ring.from_i64(n)).collect())
            .collect();
        Self::from_rows(ring, cols, rows)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.data[i * self.cols + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, e: RingElement) {
        debug_assert_eq!(e.ring(), self.ring);
        self.data[i * self.cols + j] = e;
    }

    pub fn row(&self, i: usize) -> &[RingElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<RingElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RingElement::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn try_mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.ring != other.ring {
            return Err(Error::MixedRings(self.ring, other.ring));
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RingMatrix::zeros(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(
        &self,
        other: &RingMatrix,
        f: impl Fn(&RingElement, &RingElement) -> RingElement,
    ) -> Result<RingMatrix> {
        if self.ring != other.ring {
            return Err(Error::MixedRings(self.ring, other.ring));
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(RingMatrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn try_add(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> RingMatrix {
        self.map(|e| -e)
    }

    pub fn scale(&self, c: &RingElement) -> RingMatrix {
        self.map(|e| e * c)
    }

    pub fn map(&self, f: impl Fn(&RingElement) -> RingElement) -> RingMatrix {
        RingMatrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut out = RingMatrix::zeros(self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// `[[tl, tr], [bl, br]]`; block shapes must line up.
    pub fn from_blocks(
        tl: &RingMatrix,
        tr: &RingMatrix,
        bl: &RingMatrix,
        br: &RingMatrix,
    ) -> Result<RingMatrix> {
        let ring = tl.ring;
        for m in [tr, bl, br] {
            if m.ring != ring {
                return Err(Error::MixedRings(ring, m.ring));
            }
        }
        if tl.rows != tr.rows || bl.rows != br.rows || tl.cols != bl.cols || tr.cols != br.cols {
            return Err(Error::Shape("block shapes do not line up".into()));
        }
        let (r0, c0) = (tl.rows, tl.cols);
        let mut out = RingMatrix::zeros(ring, tl.rows + bl.rows, tl.cols + tr.cols);
        for (block, di, dj) in [(tl, 0, 0), (tr, 0, c0), (bl, r0, 0), (br, r0, c0)] {
            for i in 0..block.rows {
                for j in 0..block.cols {
                    out.set(i + di, j + dj, block.get(i, j).clone());
                }
            }
        }
        Ok(out)
    }

    pub fn block_diag(a: &RingMatrix, b: &RingMatrix) -> Result<RingMatrix> {
        let ring = a.ring;
        RingMatrix::from_blocks(
            a,
            &RingMatrix::zeros(ring, a.rows, b.cols),
            &RingMatrix::zeros(ring, b.rows, a.cols),
            b,
        )
    }

    /// The submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> RingMatrix {
        let mut out = RingMatrix::zeros(self.ring, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn row_range(&self, start: usize, end: usize) -> RingMatrix {
        self.select(
            &(start..end).collect::<Vec<_>>(),
            &(0..self.cols).collect::<Vec<_>>(),
        )
    }

    pub fn col_range(&self, start: usize, end: usize) -> RingMatrix {
        self.select(
            &(0..self.rows).collect::<Vec<_>>(),
            &(start..end).collect::<Vec<_>>(),
        )
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<RingElement> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = self.ring.one();
        for k in 0..n {
            if m.get(k, k).is_zero() {
                let Some(i) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return Ok(self.ring.zero());
                };
                m.swap_rows(k, i);
                negate = !negate;
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(m.get(i, j) * &pivot) - &(m.get(i, k) * m.get(k, j));
                    m.set(i, j, num.exact_div(&prev)?);
                }
            }
            prev = pivot;
        }
        let d = if n == 0 {
            self.ring.one()
        } else {
            m.get(n - 1, n - 1).clone()
        };
        Ok(if negate { -d } else { d })
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Rows `(a, b) <- (x*a + y*b, z*a + w*b)`.
    pub(crate) fn mix_rows(&mut self, a: usize, b: usize, [x, y, z, w]: [&RingElement; 4]) {
        for j in 0..self.cols {
            let (ra, rb) = (self.get(a, j).clone(), self.get(b, j).clone());
            if ra.is_zero() && rb.is_zero() {
                continue;
            }
            self.set(a, j, &(x * &ra) + &(y * &rb));
            self.set(b, j, &(z * &ra) + &(w * &rb));
        }
    }

    /// Columns `(a, b) <- (x*a + y*b, z*a + w*b)`.
    pub(crate) fn mix_cols(&mut self, a: usize, b: usize, [x, y, z, w]: [&RingElement; 4]) {
        for i in 0..self.rows {
            let (ca, cb) = (self.get(i, a).clone(), self.get(i, b).clone());
            if ca.is_zero() && cb.is_zero() {
                continue;
            }
            self.set(i, a, &(x * &ca) + &(y * &cb));
            self.set(i, b, &(z * &ca) + &(w * &cb));
        }
    }

    /// Row `target += c * row source`.
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, c: &RingElement) {
        for j in 0..self.cols {
            let s = self.get(source, j);
            if !s.is_zero() {
                let v = self.get(target, j) + &(c * s);
                self.set(target, j, v);
            }
        }
    }

    /// Column `target += c * column source`.
    pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, c: &RingElement) {
        for i in 0..self.rows {
            let s = self.get(i, source);
            if !s.is_zero() {
                let v = self.get(i, target) + &(c * s);
                self.set(i, target, v);
            }
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: &RingElement) {
        for j in 0..self.cols {
            let v = self.get(i, j) * c;
            self.set(i, j, v);
        }
    }

    pub(crate) fn scale_col(&mut self, j: usize, c: &RingElement) {
        for i in 0..self.rows {
            let v = self.get(i, j) * c;
            self.set(i, j, v);
        }
    }
}

fn check_ring(ring: Ring, e: &RingElement) -> Result<()> {
    if e.ring() == ring {
        Ok(())
    } else {
        Err(Error::MixedRings(ring, e.ring()))
    }
}

impl Index<(usize, usize)> for RingMatrix {
    type Output = RingElement;

    fn index(&self, (i, j): (usize, usize)) -> &RingElement {
        self.get(i, j)
    }
}

/// Panics on shape or ring mismatch; use [`RingMatrix::try_mul`] otherwise.
impl Mul for &RingMatrix {
    type Output = RingMatrix;

    fn mul(self, rhs: &RingMatrix) -> RingMatrix {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("\n")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}
