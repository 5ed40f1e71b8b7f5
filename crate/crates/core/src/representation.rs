//! Representations `(l, r, V)` of adm-Poisson algebras, their duals,
//! semidirect products, and the passage to Poisson-algebra representations.

use crate::algebra::{depolarize, polarize, AdmPoissonAlgebra, PoissonAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{family_eval, Matrix};
use crate::report::{sweep, AxiomReport};
use crate::scalar::{Field, Scalar};
use crate::tensor::{neg_dual_endo_family, MulTensor};

/// `l(e_i)` and `r(e_i)` as `m×m` matrices for each basis element of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    alg: AdmPoissonAlgebra,
    vdim: usize,
    l: Vec<Matrix>,
    r: Vec<Matrix>,
}

fn check_family(fam: &[Matrix], n: usize, m: usize, field: Field) -> Result<()> {
    if fam.len() != n {
        return Err(Error::dim(n, fam.len()));
    }
    for mat in fam {
        if mat.field() != field {
            return Err(Error::FieldMismatch(field, mat.field()));
        }
        if mat.rows() != m || mat.cols() != m {
            return Err(Error::shape(format!(
                "expected {m}x{m} matrices, found {}x{}",
                mat.rows(),
                mat.cols()
            )));
        }
    }
    Ok(())
}

impl Representation {
    /// Validates shapes and the representation identities.
    pub fn new(
        alg: AdmPoissonAlgebra,
        vdim: usize,
        l: Vec<Matrix>,
        r: Vec<Matrix>,
    ) -> Result<Self> {
        let rep = Self::new_unchecked(alg, vdim, l, r)?;
        if let Some(w) = check_representation(&rep).witness {
            return Err(Error::Precondition(format!("not a representation: {w}")));
        }
        Ok(rep)
    }

    /// Validates shapes only.
    pub fn new_unchecked(
        alg: AdmPoissonAlgebra,
        vdim: usize,
        l: Vec<Matrix>,
        r: Vec<Matrix>,
    ) -> Result<Self> {
        check_family(&l, alg.dim(), vdim, alg.field())?;
        check_family(&r, alg.dim(), vdim, alg.field())?;
        Ok(Representation { alg, vdim, l, r })
    }

    pub fn zero(alg: AdmPoissonAlgebra, vdim: usize) -> Self {
        let z = vec![Matrix::zeros(alg.field(), vdim, vdim); alg.dim()];
        Representation {
            alg,
            vdim,
            l: z.clone(),
            r: z,
        }
    }

    pub fn alg(&self) -> &AdmPoissonAlgebra {
        &self.alg
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn l(&self) -> &[Matrix] {
        &self.l
    }

    pub fn r(&self) -> &[Matrix] {
        &self.r
    }

    /// `l(x)` for a coordinate vector `x`.
    pub fn l_at(&self, x: &[Scalar]) -> Matrix {
        family_eval(&self.l, x, self.vdim, self.vdim, self.alg.field())
    }

    pub fn r_at(&self, x: &[Scalar]) -> Matrix {
        family_eval(&self.r, x, self.vdim, self.vdim, self.alg.field())
    }
}

/// Checks the three operator identities for `(l, r)` over the operation
/// `star` on every basis pair `(x, y) = (e_i, e_j)`:
///
/// * `c2`: `l(x⋆y) = l(x)l(y) − ⅓(−l(x)r(y) + r(x⋆y) + l(y)l(x) − l(y)r(x))`
/// * `c3`: `r(y)l(x) = l(x)r(y) − ⅓(−l(x)l(y) + l(y)l(x) + r(x⋆y) − r(y⋆x))`
/// * `c4`: `r(y)r(x) = r(x⋆y) − ⅓(−r(y⋆x) + l(y)r(x) + l(x)r(y) − l(x)l(y))`
pub fn check_rep_raw(star: &MulTensor, l: &[Matrix], r: &[Matrix]) -> AxiomReport {
    let n = star.dim();
    let f = star.field();
    let m = l.first().map_or(0, Matrix::rows);
    let third = f.third();
    let at =
        |fam: &[Matrix], i: usize, j: usize| family_eval(fam, star.basis_product(i, j), m, m, f);
    let flat = |mat: Matrix| mat.entries().to_vec();
    let c2 = sweep(n, 2, "pairs", "c2", |p| {
        let (x, y) = (p[0], p[1]);
        let lhs = at(l, x, y);
        let inner = &(&(&at(r, x, y) - &(&l[x] * &r[y])) + &(&l[y] * &l[x])) - &(&l[y] * &r[x]);
        let rhs = &(&l[x] * &l[y]) - &inner.scale(&third);
        (flat(lhs), flat(rhs))
    });
    c2.and_then(|| {
        sweep(n, 2, "pairs", "c3", |p| {
            let (x, y) = (p[0], p[1]);
            let lhs = &r[y] * &l[x];
            let inner = &(&(&(&l[y] * &l[x]) - &(&l[x] * &l[y])) + &at(r, x, y)) - &at(r, y, x);
            let rhs = &(&l[x] * &r[y]) - &inner.scale(&third);
            (flat(lhs), flat(rhs))
        })
    })
    .and_then(|| {
        sweep(n, 2, "pairs", "c4", |p| {
            let (x, y) = (p[0], p[1]);
            let lhs = &r[y] * &r[x];
            let inner = &(&(&(&l[y] * &r[x]) + &(&l[x] * &r[y])) - &at(r, y, x)) - &(&l[x] * &l[y]);
            let rhs = &at(r, x, y) - &inner.scale(&third);
            (flat(lhs), flat(rhs))
        })
    })
}

pub fn check_representation(rep: &Representation) -> AxiomReport {
    check_rep_raw(rep.alg.star(), &rep.l, &rep.r)
}

/// `l(x⋆y) + r(x)r(y) = l(x)l(y) + r(y⋆x)`, which every representation satisfies.
pub fn check_rep_consequence(rep: &Representation) -> AxiomReport {
    let star = rep.alg.star();
    let m = rep.vdim;
    let f = star.field();
    let (l, r) = (&rep.l, &rep.r);
    sweep(star.dim(), 2, "pairs", "rep-consequence", |p| {
        let (x, y) = (p[0], p[1]);
        let lxy = family_eval(l, star.basis_product(x, y), m, m, f);
        let ryx = family_eval(r, star.basis_product(y, x), m, m, f);
        let lhs = &lxy + &(&r[x] * &r[y]);
        let rhs = &(&l[x] * &l[y]) + &ryx;
        (lhs.entries().to_vec(), rhs.entries().to_vec())
    })
}

/// `L(e_i)` and `R(e_i)` acting on the algebra itself.
pub fn adjoint_rep(a: &AdmPoissonAlgebra) -> Representation {
    Representation {
        vdim: a.dim(),
        l: a.star().left_family(),
        r: a.star().right_family(),
        alg: a.clone(),
    }
}

/// The dual representation `(−r*, −l*, V*)`.
///
/// With `ρ*(x) = −ρ(x)ᵀ` this is `l'(e_i) = r(e_i)ᵀ`, `r'(e_i) = l(e_i)ᵀ`.
pub fn dual_rep(rep: &Representation) -> Representation {
    let neg = |fam: &[Matrix]| -> Vec<Matrix> {
        neg_dual_endo_family(fam)
            .expect("representation matrices are square")
            .iter()
            .map(Matrix::neg)
            .collect()
    };
    Representation {
        alg: rep.alg.clone(),
        vdim: rep.vdim,
        l: neg(&rep.r),
        r: neg(&rep.l),
    }
}

/// The algebra on `P ⊕ V` with `(x+u)⋆(y+v) = x⋆y + l(x)v + r(y)u`.
/// Indices `0..n` are the algebra basis, `n..n+m` the basis of `V`.
pub fn semidirect(rep: &Representation) -> AdmPoissonAlgebra {
    AdmPoissonAlgebra::new_unchecked(semidirect_raw(rep.alg.star(), &rep.l, &rep.r))
}

pub fn semidirect_raw(star: &MulTensor, l: &[Matrix], r: &[Matrix]) -> MulTensor {
    let n = star.dim();
    let m = l.first().map_or(0, Matrix::rows);
    let f = star.field();
    let mut out = MulTensor::zeros(f, n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.set(i, j, k, star.get(i, j, k).clone());
            }
        }
        for v in 0..m {
            for k in 0..m {
                // e_i ⋆ v = l(e_i) v and v ⋆ e_i = r(e_i) v
                out.set(i, n + v, n + k, l[i].get(k, v).clone());
                out.set(n + v, i, n + k, r[i].get(k, v).clone());
            }
        }
    }
    out
}

/// A representation of a Poisson algebra, stored as the two actions
/// `S_[,]` and `S_∘`. Validity is decided through [`poisson_rep_to_rep`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonRepresentation {
    palg: PoissonAlgebra,
    vdim: usize,
    s_bracket: Vec<Matrix>,
    s_circ: Vec<Matrix>,
}

impl PoissonRepresentation {
    pub fn new_unchecked(
        palg: PoissonAlgebra,
        vdim: usize,
        s_bracket: Vec<Matrix>,
        s_circ: Vec<Matrix>,
    ) -> Result<Self> {
        check_family(&s_bracket, palg.dim(), vdim, palg.field())?;
        check_family(&s_circ, palg.dim(), vdim, palg.field())?;
        Ok(PoissonRepresentation {
            palg,
            vdim,
            s_bracket,
            s_circ,
        })
    }

    pub fn palg(&self) -> &PoissonAlgebra {
        &self.palg
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn s_bracket(&self) -> &[Matrix] {
        &self.s_bracket
    }

    pub fn s_circ(&self) -> &[Matrix] {
        &self.s_circ
    }
}

/// `(½(l − r), ½(l + r))` over the polarized algebra.
pub fn rep_to_poisson_rep(rep: &Representation) -> PoissonRepresentation {
    let half = rep.alg.field().half();
    let zip = |sign_add: bool| -> Vec<Matrix> {
        rep.l
            .iter()
            .zip(&rep.r)
            .map(|(l, r)| if sign_add { l + r } else { l - r }.scale(&half))
            .collect()
    };
    PoissonRepresentation {
        palg: polarize(&rep.alg),
        vdim: rep.vdim,
        s_bracket: zip(false),
        s_circ: zip(true),
    }
}

/// `(S_[,] + S_∘, S_∘ − S_[,])` over the depolarized algebra.
pub fn poisson_rep_to_rep(prep: &PoissonRepresentation) -> Representation {
    Representation {
        alg: depolarize(&prep.palg),
        vdim: prep.vdim,
        l: prep
            .s_bracket
            .iter()
            .zip(&prep.s_circ)
            .map(|(b, c)| c + b)
            .collect(),
        r: prep
            .s_bracket
            .iter()
            .zip(&prep.s_circ)
            .map(|(b, c)| c - b)
            .collect(),
    }
}

/// Validity of a Poisson representation, decided on the adm side.
pub fn check_poisson_rep(prep: &PoissonRepresentation) -> AxiomReport {
    check_representation(&poisson_rep_to_rep(prep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_adm_poisson;

    fn q(v: i64) -> Scalar {
        Field::Rational.int(v)
    }

    fn one_dim_unit() -> AdmPoissonAlgebra {
        let mut m = MulTensor::zeros(Field::Rational, 1);
        m.set(0, 0, 0, q(1));
        AdmPoissonAlgebra::new(m).unwrap()
    }

    fn lie2() -> AdmPoissonAlgebra {
        let mut m = MulTensor::zeros(Field::Rational, 2);
        m.set(0, 1, 1, q(1));
        m.set(1, 0, 1, q(-1));
        AdmPoissonAlgebra::new(m).unwrap()
    }

    #[test]
    fn zero_rep_is_valid() {
        let rep = Representation::zero(lie2(), 3);
        assert!(check_representation(&rep).holds);
        assert_eq!(dual_rep(&rep), rep);
    }

    #[test]
    fn adjoint_of_unit_algebra() {
        let rep = adjoint_rep(&one_dim_unit());
        assert_eq!(rep.l()[0].get(0, 0), &q(1));
        assert_eq!(rep.r()[0].get(0, 0), &q(1));
        assert!(check_representation(&rep).holds);
        assert!(check_rep_consequence(&rep).holds);
    }

    #[test]
    fn semidirect_with_adjoint_of_unit_algebra() {
        let s = semidirect(&adjoint_rep(&one_dim_unit()));
        let s = s.star();
        assert_eq!(s.get(0, 0, 0), &q(1));
        assert_eq!(s.get(0, 1, 1), &q(1));
        assert_eq!(s.get(1, 0, 1), &q(1));
        let nonzero = s.coeffs().iter().filter(|c| !c.is_zero()).count();
        assert_eq!(nonzero, 3);
        assert!(check_adm_poisson(s).holds);
    }

    #[test]
    fn left_adjoint_alone_on_lie2() {
        // l = L and r = 0 over the depolarized two-dimensional Lie algebra:
        // c2 at (e1,e1) reads 0 = ⅔ L(e1)², and L(e1)² fixes e2.
        let a = lie2();
        let l = a.star().left_family();
        let r = vec![Matrix::zeros(Field::Rational, 2, 2); 2];
        let rep = Representation::new_unchecked(a, 2, l, r).unwrap();
        let report = check_representation(&rep);
        assert!(!report.holds);
        let w = report.witness.unwrap();
        assert_eq!(w.identity, "c2");
        assert_eq!(w.indices, vec![0, 0]);
    }

    #[test]
    fn dual_of_adjoint_is_a_representation() {
        let rep = dual_rep(&adjoint_rep(&lie2()));
        assert!(check_representation(&rep).holds);
        assert_eq!(dual_rep(&rep), adjoint_rep(&lie2()));
    }

    #[test]
    fn poisson_correspondence() {
        let rep = adjoint_rep(&lie2());
        let prep = rep_to_poisson_rep(&rep);
        // adjoint maps to (ad, L_∘) of the polarized algebra
        assert_eq!(prep.s_bracket(), lie2().star().left_family().as_slice());
        assert!(prep.s_circ().iter().all(Matrix::is_zero));
        assert_eq!(poisson_rep_to_rep(&prep), rep);
        assert!(check_poisson_rep(&prep).holds);
    }
}
