//! Dense vectors and matrices over a [`Field`], plus exact Gaussian elimination.

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(field: Field, dim: usize) -> Self {
        Vector {
            field,
            coords: vec![field.zero(); dim],
        }
    }

    /// The basis vector `e_{i+1}` (zero-based index `i`).
    pub fn basis(field: Field, dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, dim);
        v.coords[i] = field.one();
        v
    }

    pub fn from_coords(field: Field, coords: Vec<Scalar>) -> Result<Self> {
        if let Some(bad) = coords.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Vector { field, coords })
    }

    pub(crate) fn from_coords_unchecked(field: Field, coords: Vec<Scalar>) -> Self {
        Vector { field, coords }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub(crate) fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn field(&self) -> Field {
        self.field
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

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-self.field.one())
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
            ..*self
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
            ..*self
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.cols != other.rows {
            return Err(Error::dim(self.cols, other.rows));
        }
        Ok(Matrix::from_fn(
            self.field,
            self.rows,
            other.cols,
            |i, j| {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc += a * other.get(k, j);
                    }
                }
                acc
            },
        ))
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        if self.field != v.field() {
            return Err(Error::FieldMismatch(self.field, v.field()));
        }
        if self.cols != v.dim() {
            return Err(Error::dim(self.cols, v.dim()));
        }
        Ok(Vector::from_coords_unchecked(
            self.field,
            self.mul_slice(v.coords()),
        ))
    }

    pub(crate) fn mul_slice(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (k, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc += self.get(i, k) * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.entries.swap(p * self.cols + j, row * self.cols + j);
                }
            }
            let inv = self.get(row, col).inv().expect("pivot is nonzero");
            for j in 0..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let v = self.get(r, j) - &(&factor * self.get(row, j));
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::shape("determinant of a non-square matrix"));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != col {
                for j in 0..n {
                    m.entries.swap(p * n + j, col * n + j);
                }
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            let inv = pivot.inv()?;
            for r in col + 1..n {
                let factor = m.get(r, col) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = m.get(r, j) - &(&factor * m.get(col, j));
                    m.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::shape("inverse of a non-square matrix"));
        }
        let n = self.rows;
        let mut aug = Matrix::from_fn(self.field, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Precondition("matrix is singular".into()));
        }
        Ok(Matrix::from_fn(self.field, n, n, |i, j| {
            aug.get(i, n + j).clone()
        }))
    }

    /// Solves `self * x = rhs`. Returns `None` when inconsistent; otherwise
    /// the solution with every free variable set to zero.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if rhs.len() != self.rows {
            return Err(Error::dim(self.rows, rhs.len()));
        }
        let c = self.cols;
        let mut aug = Matrix::from_fn(self.field, self.rows, c + 1, |i, j| {
            if j < c {
                self.get(i, j).clone()
            } else {
                rhs[i].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.last() == Some(&c) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); c];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug.get(row, c).clone();
        }
        Ok(Some(x))
    }
}

// Operator forms panic on shape or field mismatch, like the checked methods
// would error; internal formulas only combine operators of one algebra.
impl std::ops::Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        Matrix::add(self, rhs).expect("matrix shapes agree")
    }
}

impl std::ops::Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        Matrix::sub(self, rhs).expect("matrix shapes agree")
    }
}

impl std::ops::Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        Matrix::mul(self, rhs).expect("matrix shapes agree")
    }
}

/// `out += a * x`, coordinatewise.
pub(crate) fn axpy(out: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (o, v) in out.iter_mut().zip(x) {
        if !v.is_zero() {
            *o += a * v;
        }
    }
}

/// `Σ coef * vec` over the given terms.
pub(crate) fn combo(field: Field, dim: usize, terms: &[(&Scalar, &[Scalar])]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); dim];
    for (a, x) in terms {
        axpy(&mut out, a, x);
    }
    out
}

/// `Σ x_i F_i` for a family of matrices indexed by basis elements.
pub(crate) fn family_eval(
    family: &[Matrix],
    x: &[Scalar],
    rows: usize,
    cols: usize,
    field: Field,
) -> Matrix {
    let mut out = Matrix::zeros(field, rows, cols);
    for (xi, m) in x.iter().zip(family) {
        if xi.is_zero() {
            continue;
        }
        for (o, e) in out.entries.iter_mut().zip(&m.entries) {
            if !e.is_zero() {
                *o += xi * e;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Field::Rational.int(v)
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_rows(Field::Rational, 2, 2, vec![q(2), q(1), q(1), q(1)]).unwrap();
        assert_eq!(m.determinant().unwrap(), q(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(Field::Rational, 2));
        let s = Matrix::from_rows(Field::Rational, 2, 2, vec![q(1), q(2), q(2), q(4)]).unwrap();
        assert_eq!(s.determinant().unwrap(), q(0));
        assert!(s.inverse().is_err());
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn solve_picks_zero_free_variables() {
        let f = Field::prime(5).unwrap();
        // x + y = 1 over GF(5): y free, so x = 1, y = 0
        let m = Matrix::from_rows(f, 1, 2, vec![f.one(), f.one()]).unwrap();
        assert_eq!(m.solve(&[f.one()]).unwrap(), Some(vec![f.one(), f.zero()]));
        // x = 1 and x = 2 is inconsistent
        let m = Matrix::from_rows(f, 2, 1, vec![f.one(), f.one()]).unwrap();
        assert_eq!(m.solve(&[f.int(1), f.int(2)]).unwrap(), None);
    }

    #[test]
    fn identity_is_its_own_transpose() {
        let id = Matrix::identity(Field::Rational, 3);
        assert_eq!(id.transpose(), id);
    }
}
