//! Poisson and adm-Poisson algebras, identity checks on basis triples, and the
//! polarization bijection between them.
//!
//! All checks evaluate identities on basis elements only; the identities are
//! multilinear, so this decides them on the whole space.

use crate::error::{Error, Result};
use crate::linalg::combo;
use crate::report::{sweep, AxiomReport};
use crate::scalar::{Field, Scalar};
use crate::tensor::MulTensor;

fn basis(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// An admissible Poisson algebra: one operation `⋆` with
/// `(x⋆y)⋆z = x⋆(y⋆z) − ⅓(−x⋆(z⋆y) + z⋆(x⋆y) + y⋆(x⋆z) − y⋆(z⋆x))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmPoissonAlgebra {
    star: MulTensor,
}

impl AdmPoissonAlgebra {
    /// Validates the defining identity.
    pub fn new(star: MulTensor) -> Result<Self> {
        let report = check_adm_poisson(&star);
        if let Some(w) = report.witness {
            return Err(Error::Precondition(format!("not adm-Poisson: {w}")));
        }
        Ok(AdmPoissonAlgebra { star })
    }

    /// Skips validation, for checking equivalences on products that are not
    /// adm-Poisson.
    pub fn new_unchecked(star: MulTensor) -> Self {
        AdmPoissonAlgebra { star }
    }

    pub fn zero(field: Field, dim: usize) -> Self {
        AdmPoissonAlgebra {
            star: MulTensor::zeros(field, dim),
        }
    }

    pub fn star(&self) -> &MulTensor {
        &self.star
    }

    pub fn into_star(self) -> MulTensor {
        self.star
    }

    pub fn dim(&self) -> usize {
        self.star.dim()
    }

    pub fn field(&self) -> Field {
        self.star.field()
    }
}

/// A Poisson algebra: a Lie bracket and a commutative associative product
/// tied by the Leibniz rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonAlgebra {
    bracket: MulTensor,
    circ: MulTensor,
}

impl PoissonAlgebra {
    pub fn new(bracket: MulTensor, circ: MulTensor) -> Result<Self> {
        let report = check_poisson(&bracket, &circ)?;
        if let Some(w) = report.witness {
            return Err(Error::Precondition(format!("not Poisson: {w}")));
        }
        Ok(PoissonAlgebra { bracket, circ })
    }

    pub fn new_unchecked(bracket: MulTensor, circ: MulTensor) -> Self {
        PoissonAlgebra { bracket, circ }
    }

    pub fn bracket(&self) -> &MulTensor {
        &self.bracket
    }

    pub fn circ(&self) -> &MulTensor {
        &self.circ
    }

    pub fn dim(&self) -> usize {
        self.circ.dim()
    }

    pub fn field(&self) -> Field {
        self.circ.field()
    }
}

/// Checks the adm-Poisson identity on all basis triples.
pub fn check_adm_poisson(m: &MulTensor) -> AxiomReport {
    let n = m.dim();
    let f = m.field();
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| basis(f, n, i)).collect();
    let one = f.one();
    let third = f.third();
    let neg_third = -&third;
    sweep(n, 3, "triples", "c1", |t| {
        let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
        let xy = m.basis_product(t[0], t[1]);
        let lhs = m.mul_slices(xy, z);
        let x_yz = m.mul_slices(x, m.basis_product(t[1], t[2]));
        let x_zy = m.mul_slices(x, m.basis_product(t[2], t[1]));
        let z_xy = m.mul_slices(z, xy);
        let y_xz = m.mul_slices(y, m.basis_product(t[0], t[2]));
        let y_zx = m.mul_slices(y, m.basis_product(t[2], t[0]));
        let rhs = combo(
            f,
            n,
            &[
                (&one, &x_yz),
                (&third, &x_zy),
                (&neg_third, &z_xy),
                (&neg_third, &y_xz),
                (&third, &y_zx),
            ],
        );
        (lhs, rhs)
    })
}

/// `(x⋆y)⋆z − x⋆(y⋆z) = z⋆(y⋆x) − (z⋆y)⋆x`, a consequence of the axiom.
pub fn check_weak_associativity(m: &MulTensor) -> AxiomReport {
    let n = m.dim();
    let f = m.field();
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| basis(f, n, i)).collect();
    let one = f.one();
    let neg = -&one;
    sweep(n, 3, "triples", "weak-associativity", |t| {
        let (x, z) = (&e[t[0]], &e[t[2]]);
        let xy_z = m.mul_slices(m.basis_product(t[0], t[1]), z);
        let x_yz = m.mul_slices(x, m.basis_product(t[1], t[2]));
        let z_yx = m.mul_slices(z, m.basis_product(t[1], t[0]));
        let zy_x = m.mul_slices(m.basis_product(t[2], t[1]), x);
        (
            combo(f, n, &[(&one, &xy_z), (&neg, &x_yz)]),
            combo(f, n, &[(&one, &z_yx), (&neg, &zy_x)]),
        )
    })
}

fn check_pairs_sign(m: &MulTensor, identity: &str, sign: i64) -> AxiomReport {
    let f = m.field();
    let s = f.int(sign);
    sweep(m.dim(), 2, "pairs", identity, |p| {
        let lhs = m.basis_product(p[0], p[1]).to_vec();
        let rhs = m.basis_product(p[1], p[0]).iter().map(|c| c * &s).collect();
        (lhs, rhs)
    })
}

/// Antisymmetry and the Jacobi identity.
pub fn check_lie(bracket: &MulTensor) -> AxiomReport {
    let n = bracket.dim();
    let f = bracket.field();
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| basis(f, n, i)).collect();
    let one = f.one();
    check_pairs_sign(bracket, "antisymmetry", -1).and_then(|| {
        sweep(n, 3, "triples", "jacobi", |t| {
            let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
            let a = bracket.mul_slices(x, bracket.basis_product(t[1], t[2]));
            let b = bracket.mul_slices(y, bracket.basis_product(t[2], t[0]));
            let c = bracket.mul_slices(z, bracket.basis_product(t[0], t[1]));
            (
                combo(f, n, &[(&one, &a), (&one, &b), (&one, &c)]),
                vec![f.zero(); n],
            )
        })
    })
}

/// Commutativity and associativity.
pub fn check_comm_assoc(circ: &MulTensor) -> AxiomReport {
    let n = circ.dim();
    let f = circ.field();
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| basis(f, n, i)).collect();
    check_pairs_sign(circ, "commutativity", 1).and_then(|| {
        sweep(n, 3, "triples", "associativity", |t| {
            let lhs = circ.mul_slices(circ.basis_product(t[0], t[1]), &e[t[2]]);
            let rhs = circ.mul_slices(&e[t[0]], circ.basis_product(t[1], t[2]));
            (lhs, rhs)
        })
    })
}

/// All Poisson axioms; the witness names the first failing identity in the
/// order antisymmetry, Jacobi, commutativity, associativity, Leibniz.
pub fn check_poisson(bracket: &MulTensor, circ: &MulTensor) -> Result<AxiomReport> {
    if bracket.field() != circ.field() {
        return Err(Error::FieldMismatch(bracket.field(), circ.field()));
    }
    if bracket.dim() != circ.dim() {
        return Err(Error::dim(bracket.dim(), circ.dim()));
    }
    let n = circ.dim();
    let f = circ.field();
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| basis(f, n, i)).collect();
    let one = f.one();
    Ok(check_lie(bracket)
        .and_then(|| check_comm_assoc(circ))
        .and_then(|| {
            // [x, y∘z] = [x,y]∘z + y∘[x,z]
            sweep(n, 3, "triples", "leibniz", |t| {
                let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
                let lhs = bracket.mul_slices(x, circ.basis_product(t[1], t[2]));
                let a = circ.mul_slices(bracket.basis_product(t[0], t[1]), z);
                let b = circ.mul_slices(y, bracket.basis_product(t[0], t[2]));
                (lhs, combo(f, n, &[(&one, &a), (&one, &b)]))
            })
        }))
}

/// `x∘y = ½(x⋆y + y⋆x)`, `[x,y] = ½(x⋆y − y⋆x)`, with no validity check.
/// Returns `(bracket, circ)`.
pub fn polarize_raw(star: &MulTensor) -> (MulTensor, MulTensor) {
    let f = star.field();
    let half = f.half();
    let n = star.dim();
    let bracket = MulTensor::from_fn(f, n, |i, j, k| {
        &(star.get(i, j, k) - star.get(j, i, k)) * &half
    });
    let circ = MulTensor::from_fn(f, n, |i, j, k| {
        &(star.get(i, j, k) + star.get(j, i, k)) * &half
    });
    (bracket, circ)
}

/// `x⋆y = x∘y + [x,y]`, with no validity check.
pub fn depolarize_raw(bracket: &MulTensor, circ: &MulTensor) -> Result<MulTensor> {
    circ.add(bracket)
}

pub fn polarize(a: &AdmPoissonAlgebra) -> PoissonAlgebra {
    let (bracket, circ) = polarize_raw(a.star());
    PoissonAlgebra { bracket, circ }
}

pub fn depolarize(p: &PoissonAlgebra) -> AdmPoissonAlgebra {
    AdmPoissonAlgebra {
        star: depolarize_raw(&p.bracket, &p.circ).expect("bracket and circ share a shape"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tensor(f: Field, n: usize, entries: &[(usize, usize, usize, i64)]) -> MulTensor {
        let mut m = MulTensor::zeros(f, n);
        for &(i, j, k, v) in entries {
            m.set(i, j, k, f.int(v));
        }
        m
    }

    #[test]
    fn catalog_examples() {
        let q = Field::Rational;
        assert!(check_adm_poisson(&MulTensor::zeros(q, 2)).holds);
        let lie = tensor(q, 2, &[(0, 1, 1, 1), (1, 0, 1, -1)]);
        let rep = check_adm_poisson(&lie);
        assert!(rep.holds);
        assert_eq!(rep.checked, 8);
        assert!(check_adm_poisson(&tensor(q, 2, &[(0, 0, 1, 1)])).holds);
        assert!(check_adm_poisson(&tensor(q, 1, &[(0, 0, 0, 1)])).holds);
    }

    #[test]
    fn poisson_examples() {
        let q = Field::Rational;
        let z = MulTensor::zeros(q, 2);
        assert!(check_poisson(&z, &z).unwrap().holds);
        let br = tensor(q, 2, &[(0, 1, 1, 1), (1, 0, 1, -1)]);
        assert!(check_poisson(&br, &z).unwrap().holds);
        // [e2, e1∘e1] = −e2 while [e2,e1]∘e1 + e1∘[e2,e1] = 0
        let circ = tensor(q, 2, &[(0, 0, 0, 1)]);
        let rep = check_poisson(&br, &circ).unwrap();
        assert!(!rep.holds);
        let w = rep.witness.unwrap();
        assert_eq!(w.identity, "leibniz");
        assert_eq!(w.indices, vec![1, 0, 0]);
    }

    #[test]
    fn polarization_examples() {
        let q = Field::Rational;
        let star = tensor(q, 2, &[(0, 1, 1, 1), (1, 0, 1, -1)]);
        let (br, circ) = polarize_raw(&star);
        assert!(circ.is_zero());
        assert_eq!(br, star);
        assert_eq!(depolarize_raw(&br, &circ).unwrap(), star);
        let (b0, c0) = polarize_raw(&MulTensor::zeros(q, 2));
        assert!(b0.is_zero() && c0.is_zero());
    }

    #[test]
    fn failing_tensor_reports_c1() {
        let f = Field::prime(5).unwrap();
        // e1⋆e1 = e2, e2⋆e1 = e1: a small non-example
        let m = tensor(f, 2, &[(0, 0, 1, 1), (1, 0, 0, 1)]);
        let rep = check_adm_poisson(&m);
        assert!(!rep.holds);
        let w = rep.witness.unwrap();
        assert_eq!(w.identity, "c1");
        assert_ne!(w.lhs, w.rhs);
        assert!(AdmPoissonAlgebra::new(m).is_err());
    }
}
