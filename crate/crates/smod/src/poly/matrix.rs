//! Dense polynomial matrices and free-module vectors.
//!
//! A `VecPoly` is an element of a free module R^s, a `PolyMatrix` a map
//! between free modules, stored row-major. Columns are the convention for
//! generators and relations throughout: a presentation matrix has one
//! column per relation, and `mul_vec` treats vectors as columns.
//!
//! Both types carry their ring so that rank-zero shapes (R^0, empty
//! matrices) stay well defined; those shapes come up constantly as
//! degenerate presentations and complex endpoints.

use std::fmt;

use super::coeff::Coefficient;
use super::monomial::Monomial;
use super::poly::Poly;
use super::ring::{same_ring, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VecPoly<C: Coefficient> {
    ring: Ring,
    entries: Vec<Poly<C>>,
}

impl<C: Coefficient> VecPoly<C> {
    pub fn zero(ring: &Ring, len: usize) -> Self {
        VecPoly {
            ring: ring.clone(),
            entries: vec![Poly::zero(ring); len],
        }
    }

    /// Standard basis vector e_j.
    pub fn unit(ring: &Ring, len: usize, j: usize) -> Self {
        assert!(j < len, "unit vector index out of range");
        let mut v = Self::zero(ring, len);
        v.entries[j] = Poly::one(ring);
        v
    }

    pub fn from_entries(ring: &Ring, entries: Vec<Poly<C>>) -> Self {
        for e in &entries {
            assert!(same_ring(e.ring(), ring), "vector entry in foreign ring");
        }
        VecPoly {
            ring: ring.clone(),
            entries,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: usize) -> &Poly<C> {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[Poly<C>] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Poly<C>> {
        self.entries
    }

    pub fn set(&mut self, i: usize, p: Poly<C>) {
        assert!(same_ring(p.ring(), &self.ring), "entry in foreign ring");
        self.entries[i] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        VecPoly {
            ring: self.ring.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        VecPoly {
            ring: self.ring.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        VecPoly {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|p| p.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        VecPoly {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Poly<C>) -> Self {
        VecPoly {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|p| p.mul(f)).collect(),
        }
    }

    /// Entrywise multiplication by the term c * x^m.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        VecPoly {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|p| p.mul_term(m, c)).collect(),
        }
    }

    pub fn map_entries(&self, mut f: impl FnMut(&Poly<C>) -> Poly<C>) -> Self {
        let entries: Vec<Poly<C>> = self.entries.iter().map(|p| f(p)).collect();
        let ring = entries
            .first()
            .map(|p| p.ring().clone())
            .unwrap_or_else(|| self.ring.clone());
        Self::from_entries(&ring, entries)
    }

    /// Concatenate two vectors (used to augment module elements).
    pub fn concat(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        VecPoly {
            ring: self.ring.clone(),
            entries,
        }
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Self {
        VecPoly {
            ring: self.ring.clone(),
            entries: self.entries[range].to_vec(),
        }
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|p| p.render()).collect();
        parts.join(", ")
    }
}

impl<C: Coefficient> fmt::Display for VecPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix<C: Coefficient> {
    ring: Ring,
    rows: usize,
    cols: usize,
    /// Row-major, length rows * cols.
    entries: Vec<Poly<C>>,
}

impl<C: Coefficient> PolyMatrix<C> {
    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Poly::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, Poly::one(ring));
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Poly<C>>>) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows.len() * ncols);
        for row in &rows {
            assert_eq!(row.len(), ncols, "ragged matrix rows");
            for p in row {
                assert!(same_ring(p.ring(), ring), "matrix entry in foreign ring");
            }
            entries.extend(row.iter().cloned());
        }
        PolyMatrix {
            ring: ring.clone(),
            rows: rows.len(),
            cols: ncols,
            entries,
        }
    }

    /// Build from column vectors; `nrows` disambiguates the empty case.
    pub fn from_cols(ring: &Ring, nrows: usize, cols: &[VecPoly<C>]) -> Self {
        let mut m = Self::zero(ring, nrows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), nrows, "column length mismatch");
            for i in 0..nrows {
                m.set(i, j, col.entry(i).clone());
            }
        }
        m
    }

    pub fn from_fn(
        ring: &Ring,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Poly<C>,
    ) -> Self {
        let mut m = Self::zero(ring, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly<C> {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly<C>) {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        assert!(same_ring(p.ring(), &self.ring), "entry in foreign ring");
        self.entries[i * self.cols + j] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn col(&self, j: usize) -> VecPoly<C> {
        VecPoly::from_entries(
            &self.ring,
            (0..self.rows).map(|i| self.entry(i, j).clone()).collect(),
        )
    }

    pub fn row(&self, i: usize) -> VecPoly<C> {
        VecPoly::from_entries(
            &self.ring,
            (0..self.cols).map(|j| self.entry(i, j).clone()).collect(),
        )
    }

    pub fn cols_as_vecs(&self) -> Vec<VecPoly<C>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|p| p.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(&self.ring);
                for k in 0..self.cols {
                    let a = self.entry(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(other.entry(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &VecPoly<C>) -> VecPoly<C> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = VecPoly::zero(&self.ring, self.rows);
        for i in 0..self.rows {
            let mut acc = Poly::zero(&self.ring);
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() || v.entry(k).is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(v.entry(k)));
            }
            out.set(i, acc);
        }
        out
    }

    pub fn scale_poly(&self, f: &Poly<C>) -> Self {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|p| p.mul(f)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ring, self.cols, self.rows, |i, j| {
            self.entry(j, i).clone()
        })
    }

    /// [self | other], matching row counts.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(&self.ring, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.entry(i, j).clone()
            } else {
                other.entry(i, j - self.cols).clone()
            }
        })
    }

    /// [self; other], matching column counts.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        Self::from_fn(&self.ring, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.entry(i, j).clone()
            } else {
                other.entry(i - self.rows, j).clone()
            }
        })
    }

    pub fn block_diag(&self, other: &Self) -> Self {
        Self::from_fn(
            &self.ring,
            self.rows + other.rows,
            self.cols + other.cols,
            |i, j| {
                if i < self.rows && j < self.cols {
                    self.entry(i, j).clone()
                } else if i >= self.rows && j >= self.cols {
                    other.entry(i - self.rows, j - self.cols).clone()
                } else {
                    Poly::zero(&self.ring)
                }
            },
        )
    }

    /// Kronecker product: block (i1, j1) is self[i1, j1] * other.
    pub fn tensor(&self, other: &Self) -> Self {
        Self::from_fn(
            &self.ring,
            self.rows * other.rows,
            self.cols * other.cols,
            |i, j| {
                let (i1, i2) = (i / other.rows, i % other.rows);
                let (j1, j2) = (j / other.cols, j % other.cols);
                self.entry(i1, j1).mul(other.entry(i2, j2))
            },
        )
    }

    pub fn submatrix(&self, row_sel: &[usize], col_sel: &[usize]) -> Self {
        Self::from_fn(&self.ring, row_sel.len(), col_sel.len(), |i, j| {
            self.entry(row_sel[i], col_sel[j]).clone()
        })
    }

    /// Determinant by cofactor expansion along the first row. Exact, and
    /// meant for the small square matrices minors produce; the empty
    /// matrix has determinant one.
    pub fn det(&self) -> Poly<C> {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        match self.rows {
            0 => Poly::one(&self.ring),
            1 => self.entry(0, 0).clone(),
            n => {
                let mut acc = Poly::zero(&self.ring);
                let rest: Vec<usize> = (1..n).collect();
                for j in 0..n {
                    let a = self.entry(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                    let cof = self.submatrix(&rest, &cols).det();
                    let signed = if j % 2 == 0 { a.mul(&cof) } else { a.mul(&cof).neg() };
                    acc = acc.add(&signed);
                }
                acc
            }
        }
    }

    /// All t-by-t minor determinants, row/column index sets in
    /// lexicographic order. minors(0) is the single empty determinant 1;
    /// an oversized t yields no minors.
    pub fn minors(&self, t: usize) -> Vec<Poly<C>> {
        if t == 0 {
            return vec![Poly::one(&self.ring)];
        }
        if t > self.rows || t > self.cols {
            return Vec::new();
        }
        let mut out = Vec::new();
        for rsel in combinations(self.rows, t) {
            for csel in combinations(self.cols, t) {
                out.push(self.submatrix(&rsel, &csel).det());
            }
        }
        out
    }

    pub fn map_entries(
        &self,
        ring: &Ring,
        mut f: impl FnMut(&Poly<C>) -> Poly<C>,
    ) -> Self {
        let mut out = Self::zero(ring, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, f(self.entry(i, j)));
            }
        }
        out
    }

    pub fn try_map_entries<D: Coefficient, E>(
        &self,
        ring: &Ring,
        mut f: impl FnMut(&Poly<C>) -> std::result::Result<Poly<D>, E>,
    ) -> std::result::Result<PolyMatrix<D>, E> {
        let mut out = PolyMatrix::zero(ring, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, f(self.entry(i, j))?);
            }
        }
        Ok(out)
    }

    /// Rows as comma-separated polynomial lists, one per line.
    pub fn render_rows(&self) -> Vec<String> {
        (0..self.rows).map(|i| self.row(i).render()).collect()
    }
}

/// All k-element subsets of 0..n, each ascending, in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // rightmost position that can still advance
        let mut i = k;
        while i > 0 && cur[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

impl<C: Coefficient> fmt::Display for PolyMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{} x {}]", self.rows, self.cols)?;
        for line in self.render_rows() {
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}
