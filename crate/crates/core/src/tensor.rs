//! Dense structure-constant containers.
//!
//! Index convention: a [`MulTensor`] stores `c[i][j][k]` with
//! `e_i ◇ e_j = Σ_k c[i][j][k] e_k`, a [`Tensor3`] stores the coefficients of
//! `Σ t[i][j][k] e_i ⊗ e_j ⊗ e_k`. Both are flattened as `(i*n + j)*n + k`.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MulTensor {
    field: Field,
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl MulTensor {
    pub fn zeros(field: Field, dim: usize) -> Self {
        MulTensor {
            field,
            dim,
            coeffs: vec![field.zero(); dim * dim * dim],
        }
    }

    pub fn from_coeffs(field: Field, dim: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != dim * dim * dim {
            return Err(Error::dim(dim * dim * dim, coeffs.len()));
        }
        if let Some(bad) = coeffs.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(MulTensor { field, dim, coeffs })
    }

    pub fn from_fn(
        field: Field,
        dim: usize,
        mut f: impl FnMut(usize, usize, usize) -> Scalar,
    ) -> Self {
        let mut coeffs = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    coeffs.push(f(i, j, k));
                }
            }
        }
        MulTensor { field, dim, coeffs }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let n = self.dim;
        self.coeffs[(i * n + j) * n + k] = v;
    }

    /// Coordinates of `e_i ◇ e_j`.
    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim;
        &self.coeffs[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// `x ◇ y` on raw coordinate slices of length `dim`.
    pub fn mul_slices(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![self.field.zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        out
    }

    pub fn apply_mul(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        Ok(Vector::from_coords_unchecked(
            self.field,
            self.mul_slices(x.coords(), y.coords()),
        ))
    }

    fn check_vec(&self, v: &Vector) -> Result<()> {
        if v.field() != self.field {
            return Err(Error::FieldMismatch(self.field, v.field()));
        }
        if v.dim() != self.dim {
            return Err(Error::dim(self.dim, v.dim()));
        }
        Ok(())
    }

    /// Matrix of `y ↦ x ◇ y`.
    pub fn left_mult(&self, x: &Vector) -> Result<Matrix> {
        self.check_vec(x)?;
        Ok(self.left_slice(x.coords()))
    }

    /// Matrix of `y ↦ y ◇ x`.
    pub fn right_mult(&self, x: &Vector) -> Result<Matrix> {
        self.check_vec(x)?;
        Ok(self.right_slice(x.coords()))
    }

    pub(crate) fn left_slice(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(self.field, n, n, |k, b| {
            let mut acc = self.field.zero();
            for (a, xa) in x.iter().enumerate() {
                if !xa.is_zero() {
                    acc += xa * self.get(a, b, k);
                }
            }
            acc
        })
    }

    pub(crate) fn right_slice(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(self.field, n, n, |k, a| {
            let mut acc = self.field.zero();
            for (b, xb) in x.iter().enumerate() {
                if !xb.is_zero() {
                    acc += xb * self.get(a, b, k);
                }
            }
            acc
        })
    }

    /// `L(e_i)`: `(L(e_i))[k][b] = c[i][b][k]`.
    pub fn left_basis(&self, i: usize) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(self.field, n, n, |k, b| self.get(i, b, k).clone())
    }

    /// `R(e_i)`: `(R(e_i))[k][a] = c[a][i][k]`.
    pub fn right_basis(&self, i: usize) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(self.field, n, n, |k, a| self.get(a, i, k).clone())
    }

    pub fn left_family(&self) -> Vec<Matrix> {
        (0..self.dim).map(|i| self.left_basis(i)).collect()
    }

    pub fn right_family(&self) -> Vec<Matrix> {
        (0..self.dim).map(|i| self.right_basis(i)).collect()
    }

    fn zip_with(
        &self,
        other: &MulTensor,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<MulTensor> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.dim != other.dim {
            return Err(Error::dim(self.dim, other.dim));
        }
        Ok(MulTensor {
            field: self.field,
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &MulTensor) -> Result<MulTensor> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &MulTensor) -> Result<MulTensor> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> MulTensor {
        MulTensor {
            field: self.field,
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// The opposite operation `x ◇' y = y ◇ x`.
    pub fn opposite(&self) -> MulTensor {
        MulTensor::from_fn(self.field, self.dim, |i, j, k| self.get(j, i, k).clone())
    }
}

/// Transpose, i.e. the dual map `T*` in dual bases.
pub fn dual_map(t: &Matrix) -> Matrix {
    t.transpose()
}

/// `x ↦ ρ*(x) = -(ρ(x))ᵀ`, the dual action on `V*` with the sign convention
/// `⟨ρ*(x)v*, u⟩ = -⟨v*, ρ(x)u⟩`.
pub fn neg_dual_endo_family(family: &[Matrix]) -> Result<Vec<Matrix>> {
    family
        .iter()
        .map(|m| {
            if m.is_square() {
                Ok(m.transpose().neg())
            } else {
                Err(Error::shape("endomorphism family must be square"))
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    field: Field,
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: Field, dim: usize) -> Self {
        Tensor3 {
            field,
            dim,
            coeffs: vec![field.zero(); dim * dim * dim],
        }
    }

    pub fn from_coeffs(field: Field, dim: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != dim * dim * dim {
            return Err(Error::dim(dim * dim * dim, coeffs.len()));
        }
        if let Some(bad) = coeffs.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Tensor3 { field, dim, coeffs })
    }

    pub fn from_fn(
        field: Field,
        dim: usize,
        mut f: impl FnMut(usize, usize, usize) -> Scalar,
    ) -> Self {
        let mut coeffs = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    coeffs.push(f(i, j, k));
                }
            }
        }
        Tensor3 { field, dim, coeffs }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let n = self.dim;
        self.coeffs[(i * n + j) * n + k] = v;
    }

    #[inline]
    pub(crate) fn add_at(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let n = self.dim;
        self.coeffs[(i * n + j) * n + k] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// First nonzero coefficient in lexicographic index order.
    pub fn first_nonzero(&self) -> Option<((usize, usize, usize), &Scalar)> {
        let n = self.dim;
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|p| ((p / (n * n), (p / n) % n, p % n), &self.coeffs[p]))
    }

    fn zip_with(&self, other: &Tensor3, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Tensor3 {
        assert_eq!(self.dim, other.dim, "tensor dimensions differ");
        Tensor3 {
            field: self.field,
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Tensor3) -> Tensor3 {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Tensor3) -> Tensor3 {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> Tensor3 {
        Tensor3 {
            field: self.field,
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Applies a permutation of tensor factors: the factor in position `p`
    /// moves to position `perm[p]`. `(τ⊗id)` is `[1,0,2]`, `(id⊗τ)` is `[0,2,1]`.
    pub fn permute(&self, perm: [usize; 3]) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zeros(self.field, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let src = [i, j, k];
                    let mut dst = [0; 3];
                    for p in 0..3 {
                        dst[perm[p]] = src[p];
                    }
                    out.coeffs[(dst[0] * n + dst[1]) * n + dst[2]] = self.get(i, j, k).clone();
                }
            }
        }
        out
    }

    /// Applies the linear map `m` to tensor factor `slot` (0, 1 or 2).
    pub fn apply_slot(&self, slot: usize, m: &Matrix) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zeros(self.field, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let t = self.get(i, j, k);
                    if t.is_zero() {
                        continue;
                    }
                    let src = [i, j, k];
                    for a in 0..n {
                        let w = m.get(a, src[slot]);
                        if w.is_zero() {
                            continue;
                        }
                        let mut dst = src;
                        dst[slot] = a;
                        out.add_at(dst[0], dst[1], dst[2], &(w * t));
                    }
                }
            }
        }
        out
    }

    /// `u ⊗ t` for a vector `u` and a rank-2 tensor `t` (as a matrix).
    pub fn outer_left(u: &[Scalar], t: &Matrix) -> Tensor3 {
        let n = u.len();
        Tensor3::from_fn(t.field(), n, |i, j, k| &u[i] * t.get(j, k))
    }

    /// `t ⊗ u`.
    pub fn outer_right(t: &Matrix, u: &[Scalar]) -> Tensor3 {
        let n = u.len();
        Tensor3::from_fn(t.field(), n, |i, j, k| t.get(i, j) * &u[k])
    }
}

/// Applies `A ⊗ B` to a rank-2 tensor given by its coefficient matrix:
/// the result is `A r Bᵀ`.
pub fn apply_pair(a: &Matrix, b: &Matrix, r: &Matrix) -> Matrix {
    let n = r.rows();
    let field = r.field();
    // (A r)
    let ar = Matrix::from_fn(field, n, n, |i, q| {
        let mut acc = field.zero();
        for p in 0..n {
            let x = a.get(i, p);
            if !x.is_zero() {
                acc += x * r.get(p, q);
            }
        }
        acc
    });
    Matrix::from_fn(field, n, n, |i, j| {
        let mut acc = field.zero();
        for q in 0..n {
            let x = b.get(j, q);
            if !x.is_zero() {
                acc += ar.get(i, q) * x;
            }
        }
        acc
    })
}

/// Which two lifted copies of `r` are multiplied, left factor first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SlotPattern {
    /// `r12 ◇ r13 = Σ x_i◇x_j ⊗ y_i ⊗ y_j`
    R12R13,
    /// `r13 ◇ r23 = Σ x_i ⊗ x_j ⊗ y_i◇y_j`
    R13R23,
    /// `r23 ◇ r12 = Σ x_j ⊗ x_i◇y_j ⊗ y_i`
    R23R12,
    /// `r12 ◇ r23 = Σ x_i ⊗ y_i◇x_j ⊗ y_j`
    R12R23,
    /// `r23 ◇ r13 = Σ x_j ⊗ x_i ⊗ y_i◇y_j`
    R23R13,
    /// `r13 ◇ r12 = Σ x_i◇x_j ⊗ y_j ⊗ y_i`
    R13R12,
}

impl SlotPattern {
    pub const ALL: [SlotPattern; 6] = [
        SlotPattern::R12R13,
        SlotPattern::R13R23,
        SlotPattern::R23R12,
        SlotPattern::R12R23,
        SlotPattern::R23R13,
        SlotPattern::R13R12,
    ];
}

/// Coefficients of the product of two lifted rank-2 tensors, computed
/// componentwise from the coefficient matrices. With
/// `a = Σ a[p][q] e_p⊗e_q` as the left factor and `b` the right factor.
pub fn tensor3_product(
    a: &Matrix,
    b: &Matrix,
    m: &MulTensor,
    pattern: SlotPattern,
) -> Result<Tensor3> {
    let n = m.dim();
    for t in [a, b] {
        if t.rows() != n || t.cols() != n {
            return Err(Error::dim(n, t.rows()));
        }
        if t.field() != m.field() {
            return Err(Error::FieldMismatch(m.field(), t.field()));
        }
    }
    let mut out = Tensor3::zeros(m.field(), n);
    for p in 0..n {
        for q in 0..n {
            let x = a.get(p, q);
            if x.is_zero() {
                continue;
            }
            for s in 0..n {
                for t in 0..n {
                    let y = b.get(s, t);
                    if y.is_zero() {
                        continue;
                    }
                    let w = x * y;
                    // a = e_p⊗e_q lifted, b = e_s⊗e_t lifted
                    for k in 0..n {
                        let idx = match pattern {
                            SlotPattern::R12R13 => (m.get(p, s, k), [k, q, t]),
                            SlotPattern::R13R23 => (m.get(q, t, k), [p, s, k]),
                            SlotPattern::R23R12 => (m.get(p, t, k), [s, k, q]),
                            SlotPattern::R12R23 => (m.get(q, s, k), [p, k, t]),
                            SlotPattern::R23R13 => (m.get(q, t, k), [s, p, k]),
                            SlotPattern::R13R12 => (m.get(p, s, k), [k, t, q]),
                        };
                        let (c, [i, j, l]) = idx;
                        if !c.is_zero() {
                            out.add_at(i, j, l, &(&w * c));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Field::Rational.int(v)
    }

    fn e(n: usize, i: usize) -> Vector {
        Vector::basis(Field::Rational, n, i)
    }

    fn single(n: usize, entries: &[(usize, usize, usize, i64)]) -> MulTensor {
        let mut m = MulTensor::zeros(Field::Rational, n);
        for &(i, j, k, v) in entries {
            m.set(i, j, k, q(v));
        }
        m
    }

    #[test]
    fn apply_mul_examples() {
        let z = MulTensor::zeros(Field::Rational, 2);
        assert!(z.apply_mul(&e(2, 0), &e(2, 1)).unwrap().is_zero());
        let m = single(2, &[(0, 1, 1, 1)]);
        assert_eq!(m.apply_mul(&e(2, 0), &e(2, 1)).unwrap(), e(2, 1));
        let m = single(2, &[(0, 1, 1, 1), (1, 0, 1, -1)]);
        let out = m.apply_mul(&e(2, 1), &e(2, 0)).unwrap();
        assert_eq!(out.coords(), &[q(0), q(-1)]);
        assert!(m.apply_mul(&e(3, 0), &e(2, 0)).is_err());
    }

    #[test]
    fn left_mult_examples() {
        let m = single(2, &[(0, 1, 1, 1)]);
        assert!(m
            .left_mult(&Vector::zeros(Field::Rational, 2))
            .unwrap()
            .is_zero());
        let l = m.left_mult(&e(2, 0)).unwrap();
        let nonzero: Vec<_> = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .filter(|&(i, j)| !l.get(i, j).is_zero())
            .collect();
        assert_eq!(nonzero, vec![(1, 1)]);
        assert_eq!(l.mul_vec(&e(2, 1)).unwrap(), e(2, 1));
    }

    #[test]
    fn dual_maps() {
        let id = Matrix::identity(Field::Rational, 3);
        assert_eq!(dual_map(&id), id);
        let zero = vec![Matrix::zeros(Field::Rational, 2, 2)];
        assert!(neg_dual_endo_family(&zero).unwrap()[0].is_zero());
    }

    #[test]
    fn dual_pairing_identity() {
        // ⟨ρ*(x)v*, u⟩ + ⟨v*, ρ(x)u⟩ = 0 on basis pairs
        let rho = Matrix::from_rows(Field::Rational, 2, 2, vec![q(1), q(2), q(3), q(4)]).unwrap();
        let dual = &neg_dual_endo_family(std::slice::from_ref(&rho)).unwrap()[0];
        for v in 0..2 {
            for u in 0..2 {
                let lhs = dual.mul_vec(&e(2, v)).unwrap().coords()[u].clone();
                let rhs = rho.mul_vec(&e(2, u)).unwrap().coords()[v].clone();
                assert!((lhs + rhs).is_zero());
            }
        }
    }

    #[test]
    fn dim_one_slot_product() {
        let m = single(1, &[(0, 0, 0, 1)]);
        let r = Matrix::identity(Field::Rational, 1);
        let t = tensor3_product(&r, &r, &m, SlotPattern::R12R13).unwrap();
        assert_eq!(t.get(0, 0, 0), &q(1));
        let z = Matrix::zeros(Field::Rational, 1, 1);
        for p in SlotPattern::ALL {
            assert!(tensor3_product(&z, &z, &m, p).unwrap().is_zero());
        }
    }

    #[test]
    fn permutation_convention() {
        let f = Field::Rational;
        let mut t = Tensor3::zeros(f, 3);
        t.add_at(0, 1, 2, &q(1));
        assert_eq!(t.permute([1, 0, 2]).get(1, 0, 2), &q(1));
        assert_eq!(t.permute([0, 2, 1]).get(0, 2, 1), &q(1));
        // factor 0 -> position 1, 1 -> 2, 2 -> 0: e0⊗e1⊗e2 becomes e2⊗e0⊗e1
        assert_eq!(t.permute([1, 2, 0]).get(2, 0, 1), &q(1));
    }
}
