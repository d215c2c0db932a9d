//! Dense exact linear algebra: Gauss-Jordan reduction, kernels, linear
//! solving, and the `Subspace` type (a reduced row-echelon basis) that the
//! Hopf-algebra analyses are built on.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Dense matrix over one exact field, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = m.field.one();
        }
        m
    }

    /// Build from explicit rows; every entry must belong to `field`.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::dimension(format!(
                    "row {i} has length {}, expected {cols}",
                    row.len()
                )));
            }
            for (j, entry) in row.into_iter().enumerate() {
                if entry.field() != field {
                    return Err(Error::FieldMismatch {
                        expected: field.to_string(),
                        found: format!("{} at ({i},{j})", entry.field()),
                    });
                }
                data.push(entry);
            }
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field.clone(), self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).clone();
                    out.set(i, j, &cur + &(a * b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix * vector shape mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] = &out[i] + &(a * &v[j]);
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for i in 0..self.rows * self.cols {
            out.data[i] = &self.data[i] - &rhs.data[i];
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn vstack(&self, below: &Matrix) -> Matrix {
        assert_eq!(self.cols, below.cols);
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Matrix {
            field: self.field.clone(),
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        }
    }

    /// Exact Gauss-Jordan: returns (RREF, pivot columns). The row space is
    /// preserved and the rank equals the pivot count.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            // find pivot in this column at or below `row`
            let mut pivot_row = None;
            for r in row..m.rows {
                if !m.at(r, col).is_zero() {
                    pivot_row = Some(r);
                    break;
                }
            }
            let Some(pr) = pivot_row else { continue };
            if pr != row {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, row * m.cols + j);
                }
            }
            let inv = m.at(row, col).inv().expect("pivot is nonzero");
            for j in col..m.cols {
                let v = m.at(row, j).clone();
                m.set(row, j, &v * &inv);
            }
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for j in col..m.cols {
                    let v = &m.at(r, j).clone() - &(&factor * m.at(row, j));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {v : Mv = 0} as a canonical subspace.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<usize> = pivots.clone();
        let mut rows = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (i, &p) in pivot_set.iter().enumerate() {
                v[p] = -r.at(i, free);
            }
            rows.push(v);
        }
        let m = Matrix::from_rows(self.field.clone(), rows, self.cols)
            .expect("kernel rows are well-formed");
        Subspace::from_spanning_matrix(&m)
    }

    /// Solve Mx = b. `Ok(None)` means the system is inconsistent (a result,
    /// not a fault); the particular solution sets all free variables to zero.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<LinearSolution>> {
        if b.len() != self.rows {
            return Err(Error::dimension(format!(
                "rhs length {} does not match {} rows",
                b.len(),
                self.rows
            )));
        }
        for (i, entry) in b.iter().enumerate() {
            if entry.field() != self.field {
                return Err(Error::FieldMismatch {
                    expected: self.field.to_string(),
                    found: format!("{} at rhs[{i}]", entry.field()),
                });
            }
        }
        // Reduce the augmented matrix [M | b].
        let mut aug = Matrix::zeros(self.field.clone(), self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.at(i, self.cols).clone();
        }
        Ok(Some(LinearSolution {
            particular: x,
            kernel: self.kernel(),
        }))
    }
}

/// Particular solution plus the homogeneous solution space.
#[derive(Clone, Debug)]
pub struct LinearSolution {
    pub particular: Vec<Scalar>,
    pub kernel: Subspace,
}

/// A linear subspace of k^n held as a reduced row-echelon basis.
///
/// Invariants: basis rows nonzero, pivot columns strictly increasing, pivot
/// entries 1 with zeros above and below. Two subspaces are equal iff their
/// canonical bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(field.clone(), 0, ambient),
            field,
            ambient,
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::identity(field.clone(), ambient),
            field,
            ambient,
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonical subspace spanned by the rows of `m`.
    pub fn from_spanning_matrix(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let rank = pivots.len();
        let mut rows = Vec::with_capacity(rank);
        for i in 0..rank {
            rows.push(r.row_vec(i));
        }
        let basis = Matrix::from_rows(m.field().clone(), rows, m.cols())
            .expect("rref rows are well-formed");
        Subspace {
            field: m.field().clone(),
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn from_spanning_rows(
        field: FieldSpec,
        rows: Vec<Vec<Scalar>>,
        ambient: usize,
    ) -> Result<Self> {
        let m = Matrix::from_rows(field, rows, ambient)?;
        Ok(Self::from_spanning_matrix(&m))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    /// Subtract the projection onto this subspace along the pivot
    /// coordinates; the result has zeros in all pivot positions and is the
    /// zero vector iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector/ambient mismatch");
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for j in 0..self.ambient {
                let b = self.basis.at(i, j);
                if b.is_zero() {
                    continue;
                }
                out[j] = &out[j] - &(&c * b);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    /// Smallest subspace containing both summands.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_spanning_matrix(&self.basis.vstack(&other.basis))
    }

    /// Exact intersection: kernel combinations of the stacked column bases.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.field.clone(), self.ambient);
        }
        // Columns: basis vectors of self, then of other. A kernel vector
        // (a, b) gives sum(a_i u_i) = -sum(b_j v_j), an intersection element.
        let stacked = self.basis.vstack(&other.basis).transpose();
        let ker = stacked.kernel();
        let mut rows = Vec::new();
        for kv in ker.basis_rows() {
            let mut w = vec![self.field.zero(); self.ambient];
            for (i, c) in kv.iter().take(self.dim()).enumerate() {
                if c.is_zero() {
                    continue;
                }
                for j in 0..self.ambient {
                    let b = self.basis.at(i, j);
                    if !b.is_zero() {
                        w[j] = &w[j] + &(c * b);
                    }
                }
            }
            rows.push(w);
        }
        Subspace::from_spanning_rows(self.field.clone(), rows, self.ambient)
            .expect("intersection rows well-formed")
    }

    /// Coordinates of the quotient space k^n / W: the non-pivot positions,
    /// in increasing order. Deterministic by the RREF pivot structure.
    pub fn complement_coords(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Matrix of the projection k^n -> k^(n - dim W) realized as "reduce by
    /// the basis, then read off the non-pivot coordinates".
    pub fn quotient_map(&self) -> Matrix {
        let comp = self.complement_coords();
        let mut out = Matrix::zeros(self.field.clone(), comp.len(), self.ambient);
        for j in 0..self.ambient {
            let mut e = vec![self.field.zero(); self.ambient];
            e[j] = self.field.one();
            let red = self.reduce(&e);
            for (r, &c) in comp.iter().enumerate() {
                out.set(r, j, red[c].clone());
            }
        }
        out
    }
}

/// Tensor-product subspace span{u_i (x) v_j} inside k^(nm), with the
/// (j,k) -> j*m + k index convention.
pub fn tensor_product_subspace(u: &Subspace, v: &Subspace) -> Subspace {
    let field = u.field().clone();
    let ambient = u.ambient() * v.ambient();
    let mut rows = Vec::with_capacity(u.dim() * v.dim());
    for a in u.basis_rows() {
        for b in v.basis_rows() {
            let mut w = vec![field.zero(); ambient];
            for (i, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.iter().enumerate() {
                    if y.is_zero() {
                        continue;
                    }
                    w[i * v.ambient() + j] = x * y;
                }
            }
            rows.push(w);
        }
    }
    Subspace::from_spanning_rows(field, rows, ambient).expect("tensor rows well-formed")
}
