//! Comultiplications, adm-Poisson bialgebras and Poisson bialgebras.
//!
//! A comultiplication is stored as `a[i][j][k]` with
//! `α(e_i) = Σ_{j,k} a[i][j][k] e_j ⊗ e_k`, so
//! `⟨α(e_i), e_j* ⊗ e_k*⟩ = a[i][j][k]`. Rank-2 tensors are coefficient
//! matrices and `(A ⊗ B)M = A M Bᵀ`, `τM = Mᵀ`.

use crate::algebra::{
    check_adm_poisson, check_comm_assoc, check_lie, AdmPoissonAlgebra, PoissonAlgebra,
};
use crate::error::{Error, Result};
use crate::linalg::{family_eval, Matrix};
use crate::matched::{bowtie, check_manin_triple, check_matched_pair, manin_matched_pair};
use crate::report::{first_nonzero, AxiomReport};
use crate::scalar::{Field, Scalar};
use crate::tensor::{apply_pair, MulTensor, Tensor3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comultiplication {
    t: Tensor3,
}

impl Comultiplication {
    pub fn new(t: Tensor3) -> Self {
        Comultiplication { t }
    }

    pub fn zeros(field: Field, dim: usize) -> Self {
        Comultiplication {
            t: Tensor3::zeros(field, dim),
        }
    }

    pub fn tensor(&self) -> &Tensor3 {
        &self.t
    }

    pub fn dim(&self) -> usize {
        self.t.dim()
    }

    pub fn field(&self) -> Field {
        self.t.field()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.t.get(i, j, k)
    }

    /// `α(e_i)` as a coefficient matrix.
    pub fn image(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(self.field(), n, n, |j, k| self.t.get(i, j, k).clone())
    }

    /// `α(x)` for a coordinate vector.
    pub fn image_of(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let images: Vec<Matrix> = (0..n).map(|i| self.image(i)).collect();
        family_eval(&images, x, n, n, self.field())
    }

    /// `τα`: swaps the two output factors.
    pub fn flipped(&self) -> Comultiplication {
        Comultiplication {
            t: self.t.permute([0, 2, 1]),
        }
    }
}

/// The operation on `P*` dual to `α`: `e_j* ⋆ e_k* = Σ_i a[i][j][k] e_i*`.
pub fn dual_structure(c: &Comultiplication) -> MulTensor {
    MulTensor::from_fn(c.field(), c.dim(), |j, k, i| c.get(i, j, k).clone())
}

/// Inverse of [`dual_structure`]: the comultiplication whose dual is `m`.
pub fn comultiplication_from_dual(m: &MulTensor) -> Comultiplication {
    Comultiplication {
        t: Tensor3::from_fn(m.field(), m.dim(), |i, j, k| m.get(j, k, i).clone()),
    }
}

/// `(id ⊗ c) M`: applies `c` to the second factor of a rank-2 tensor.
fn apply_second(m: &Matrix, c: &Comultiplication) -> Tensor3 {
    let n = c.dim();
    let mut out = Tensor3::zeros(c.field(), n);
    for p in 0..n {
        for q in 0..n {
            let w = m.get(p, q);
            if w.is_zero() {
                continue;
            }
            for s in 0..n {
                for t in 0..n {
                    let v = c.get(q, s, t);
                    if !v.is_zero() {
                        out.add_at(p, s, t, &(w * v));
                    }
                }
            }
        }
    }
    out
}

/// `(c ⊗ id) M`: applies `c` to the first factor of a rank-2 tensor.
fn apply_first(m: &Matrix, c: &Comultiplication) -> Tensor3 {
    let n = c.dim();
    let mut out = Tensor3::zeros(c.field(), n);
    for p in 0..n {
        for q in 0..n {
            let w = m.get(p, q);
            if w.is_zero() {
                continue;
            }
            for s in 0..n {
                for t in 0..n {
                    let v = c.get(p, s, t);
                    if !v.is_zero() {
                        out.add_at(s, t, q, &(w * v));
                    }
                }
            }
        }
    }
    out
}

/// The coalgebra identity checked directly on each `α(e_i)`:
/// `(id⊗α)α − (α⊗id)α + ⅓((id⊗τ)V − (τ⊗id)V − (id⊗τ)(τ⊗id)V + (τ⊗id)(id⊗τ)V) = 0`
/// with `V = (id⊗α)α`.
pub fn check_coalgebra_direct(c: &Comultiplication) -> AxiomReport {
    let n = c.dim();
    let third = c.field().third();
    for i in 0..n {
        let img = c.image(i);
        let v = apply_second(&img, c);
        let u = apply_first(&img, c);
        let swap12 = [1, 0, 2];
        let swap23 = [0, 2, 1];
        let corr = v
            .permute(swap23)
            .sub(&v.permute(swap12))
            .sub(&v.permute(swap12).permute(swap23))
            .add(&v.permute(swap23).permute(swap12));
        let total = v.sub(&u).add(&corr.scale(&third));
        if let Some(r) = first_nonzero("coalgebra", "elements", n, &[i], total.coeffs(), &[n, n, n])
        {
            return r;
        }
    }
    AxiomReport::ok(n, "elements")
}

/// The same condition decided as the adm-Poisson identity of the dual.
pub fn check_coalgebra_dual(c: &Comultiplication) -> AxiomReport {
    check_adm_poisson(&dual_structure(c))
}

pub fn check_coalgebra(c: &Comultiplication) -> AxiomReport {
    check_coalgebra_direct(c)
}

/// Which of the three compatibility identities between `⋆` and `α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Defbi {
    One,
    Two,
    Three,
}

impl Defbi {
    pub const ALL: [Defbi; 3] = [Defbi::One, Defbi::Two, Defbi::Three];

    pub fn name(self) -> &'static str {
        match self {
            Defbi::One => "Defbi1",
            Defbi::Two => "Defbi2",
            Defbi::Three => "Defbi3",
        }
    }
}

struct BiCtx<'a> {
    star: &'a MulTensor,
    c: &'a Comultiplication,
    ls: Vec<Matrix>,
    rs: Vec<Matrix>,
    id: Matrix,
    third: Scalar,
}

impl<'a> BiCtx<'a> {
    fn new(star: &'a MulTensor, c: &'a Comultiplication) -> Self {
        let n = star.dim();
        BiCtx {
            star,
            c,
            ls: star.left_family(),
            rs: star.right_family(),
            id: Matrix::identity(star.field(), n),
            third: star.field().third(),
        }
    }

    fn alpha_prod(&self, x: usize, y: usize) -> Matrix {
        self.c.image_of(self.star.basis_product(x, y))
    }

    /// The defect of the chosen identity at `(e_x, e_y)`; zero iff it holds.
    fn defect(&self, which: Defbi, x: usize, y: usize) -> Matrix {
        let (ax, ay) = (self.c.image(x), self.c.image(y));
        let (lx, ly, rx, ry) = (&self.ls[x], &self.ls[y], &self.rs[x], &self.rs[y]);
        let id = &self.id;
        let a_xy = self.alpha_prod(x, y);
        let t = &self.third;
        match which {
            Defbi::One => {
                let head = &(&apply_pair(ry, id, &ax) + &apply_pair(id, lx, &ay)) - &a_xy;
                let sym = &(&apply_pair(lx, id, &ay) + &apply_pair(ly, id, &ax)) - &a_xy;
                let tail = &(&(&(&apply_pair(ly, id, &ax) - &apply_pair(id, ly, &ax))
                    + &apply_pair(lx, id, &ay))
                    - &apply_pair(rx, id, &ay))
                    + &sym.transpose();
                &head + &tail.scale(t)
            }
            Defbi::Two => {
                let a_yx = self.alpha_prod(y, x);
                let head = &(&apply_pair(ry, id, &ax) + &apply_pair(id, lx, &ay)) - &a_xy;
                let swapped = &(&(&apply_pair(lx, id, &ay) + &apply_pair(ly, id, &ax))
                    - &apply_pair(ry, id, &ax))
                    - &apply_pair(id, lx, &ay);
                let tail = &(&(&apply_pair(lx, id, &ay) + &apply_pair(ly, id, &ax)) - &a_yx)
                    + &swapped.transpose();
                &head + &tail.scale(t)
            }
            Defbi::Three => {
                let a_yx = self.alpha_prod(y, x);
                let head = &(&apply_pair(ly, id, &ax) - &apply_pair(id, ry, &ax))
                    + &(&apply_pair(lx, id, &ay) - &apply_pair(id, rx, &ay)).transpose();
                let tail = &(&(&(&apply_pair(ry, id, &ax) - &apply_pair(id, ly, &ax))
                    + &apply_pair(id, lx, &ay))
                    - &apply_pair(rx, id, &ay))
                    + &(&a_yx - &a_xy).transpose();
                &head + &tail.scale(t)
            }
        }
    }
}

/// One compatibility identity on all basis pairs. Witness indices are
/// `(x, y, j, k)` for the nonzero coefficient of `e_j ⊗ e_k` in the defect.
pub fn check_defbi(
    a: &AdmPoissonAlgebra,
    c: &Comultiplication,
    which: Defbi,
) -> Result<AxiomReport> {
    check_dims(a.star(), c)?;
    Ok(defbi_raw(a.star(), c, which))
}

fn defbi_raw(star: &MulTensor, c: &Comultiplication, which: Defbi) -> AxiomReport {
    let ctx = BiCtx::new(star, c);
    let n = star.dim();
    for x in 0..n {
        for y in 0..n {
            let d = ctx.defect(which, x, y);
            if let Some(r) =
                first_nonzero(which.name(), "pairs", n * n, &[x, y], d.entries(), &[n, n])
            {
                return r;
            }
        }
    }
    AxiomReport::ok(n * n, "pairs")
}

fn check_dims(star: &MulTensor, c: &Comultiplication) -> Result<()> {
    if star.field() != c.field() {
        return Err(Error::FieldMismatch(star.field(), c.field()));
    }
    if star.dim() != c.dim() {
        return Err(Error::dim(star.dim(), c.dim()));
    }
    Ok(())
}

/// The dual is adm-Poisson and all three compatibility identities hold.
pub fn check_adm_bialgebra(a: &AdmPoissonAlgebra, c: &Comultiplication) -> Result<AxiomReport> {
    check_dims(a.star(), c)?;
    Ok(check_coalgebra(c)
        .and_then(|| defbi_raw(a.star(), c, Defbi::One))
        .and_then(|| defbi_raw(a.star(), c, Defbi::Two))
        .and_then(|| defbi_raw(a.star(), c, Defbi::Three)))
}

/// The matched-pair formulation: `(P, P*, −R*, −L*, −R_{P*}*, −L_{P*}*)`
/// with `P*` carrying the dual operation of `α`.
pub fn check_bialgebra_via_matched_pair(
    a: &AdmPoissonAlgebra,
    c: &Comultiplication,
) -> Result<AxiomReport> {
    check_dims(a.star(), c)?;
    let dual = AdmPoissonAlgebra::new_unchecked(dual_structure(c));
    let dual_ok = check_adm_poisson(dual.star());
    if !dual_ok.holds {
        return Ok(dual_ok.prefixed("dual"));
    }
    Ok(check_matched_pair(&manin_matched_pair(a, &dual)?))
}

/// The Manin-triple formulation: the double on `P ⊕ P*` is adm-Poisson,
/// contains both factors and makes `B_d` invariant.
pub fn check_bialgebra_via_manin(
    a: &AdmPoissonAlgebra,
    c: &Comultiplication,
) -> Result<AxiomReport> {
    check_dims(a.star(), c)?;
    let dual = AdmPoissonAlgebra::new_unchecked(dual_structure(c));
    let dual_ok = check_adm_poisson(dual.star());
    if !dual_ok.holds {
        return Ok(dual_ok.prefixed("dual"));
    }
    let double = bowtie(&manin_matched_pair(a, &dual)?);
    Ok(check_manin_triple(&double, a, &dual))
}

/// `δ` anti-cocommutative and `Δ` cocommutative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonComultiplicationPair {
    delta: Comultiplication,
    big_delta: Comultiplication,
}

impl PoissonComultiplicationPair {
    pub fn new(delta: Comultiplication, big_delta: Comultiplication) -> Result<Self> {
        if delta.dim() != big_delta.dim() {
            return Err(Error::dim(delta.dim(), big_delta.dim()));
        }
        let neg = -&delta.field().one();
        if delta.flipped().t != delta.t.scale(&neg) {
            return Err(Error::Precondition(
                "delta is not anti-cocommutative".into(),
            ));
        }
        if big_delta.flipped() != big_delta {
            return Err(Error::Precondition("Delta is not cocommutative".into()));
        }
        Ok(PoissonComultiplicationPair { delta, big_delta })
    }

    pub fn delta(&self) -> &Comultiplication {
        &self.delta
    }

    pub fn big_delta(&self) -> &Comultiplication {
        &self.big_delta
    }
}

/// `δ = ½(α − τα)`, `Δ = ½(α + τα)`.
pub fn split_comultiplication(c: &Comultiplication) -> PoissonComultiplicationPair {
    let half = c.field().half();
    let flip = c.flipped();
    PoissonComultiplicationPair {
        delta: Comultiplication::new(c.t.sub(&flip.t).scale(&half)),
        big_delta: Comultiplication::new(c.t.add(&flip.t).scale(&half)),
    }
}

/// `α = δ + Δ`.
pub fn merge_comultiplication(pair: &PoissonComultiplicationPair) -> Comultiplication {
    Comultiplication::new(pair.delta.t.add(&pair.big_delta.t))
}

fn rank2_report(name: &str, n: usize, per: impl Fn(usize, usize) -> Matrix) -> AxiomReport {
    for x in 0..n {
        for y in 0..n {
            let d = per(x, y);
            if let Some(r) = first_nonzero(name, "pairs", n * n, &[x, y], d.entries(), &[n, n]) {
                return r;
            }
        }
    }
    AxiomReport::ok(n * n, "pairs")
}

/// The Poisson-bialgebra conditions: the duals of `δ` and `Δ` are a Lie
/// algebra and a commutative associative algebra, the co-Leibniz identity,
/// the Lie 1-cocycle condition, the infinitesimal-bialgebra identity, and
/// the two mixed compatibilities.
pub fn check_poisson_bialgebra(
    p: &PoissonAlgebra,
    pair: &PoissonComultiplicationPair,
) -> Result<AxiomReport> {
    check_dims(p.circ(), &pair.delta)?;
    let n = p.dim();
    let (delta, cap) = (&pair.delta, &pair.big_delta);
    let ad = p.bracket().left_family();
    let lc = p.circ().left_family();
    let rc = p.circ().right_family();
    let id = Matrix::identity(p.field(), n);
    let br = p.bracket();
    let circ = p.circ();
    let report = check_lie(&dual_structure(delta))
        .prefixed("dual-delta")
        .and_then(|| check_comm_assoc(&dual_structure(cap)).prefixed("dual-Delta"))
        .and_then(|| {
            // (id⊗Δ)δ(x) = (δ⊗id)Δ(x) + (τ⊗id)(id⊗δ)Δ(x)
            for x in 0..n {
                let lhs = apply_second(&delta.image(x), cap);
                let rhs = apply_first(&cap.image(x), delta)
                    .add(&apply_second(&cap.image(x), delta).permute([1, 0, 2]));
                if let Some(r) = first_nonzero(
                    "co-leibniz",
                    "elements",
                    n,
                    &[x],
                    lhs.sub(&rhs).coeffs(),
                    &[n, n, n],
                ) {
                    return r;
                }
            }
            AxiomReport::ok(n, "elements")
        })
        .and_then(|| {
            rank2_report("lie-cocycle", n, |x, y| {
                let lhs = delta.image_of(br.basis_product(x, y));
                let rhs = &(&apply_pair(&ad[x], &id, &delta.image(y))
                    + &apply_pair(&id, &ad[x], &delta.image(y)))
                    - &(&apply_pair(&ad[y], &id, &delta.image(x))
                        + &apply_pair(&id, &ad[y], &delta.image(x)));
                &lhs - &rhs
            })
        })
        .and_then(|| {
            rank2_report("infinitesimal", n, |x, y| {
                let lhs = cap.image_of(circ.basis_product(x, y));
                let rhs = &apply_pair(&id, &lc[x], &cap.image(y))
                    + &apply_pair(&rc[y], &id, &cap.image(x));
                &lhs - &rhs
            })
        })
        .and_then(|| {
            rank2_report("compat-circ", n, |x, y| {
                let lhs = delta.image_of(circ.basis_product(x, y));
                let rhs = &(&(&apply_pair(&lc[x], &id, &delta.image(y))
                    + &apply_pair(&lc[y], &id, &delta.image(x)))
                    + &apply_pair(&id, &ad[x], &cap.image(y)))
                    + &apply_pair(&id, &ad[y], &cap.image(x));
                &lhs - &rhs
            })
        })
        .and_then(|| {
            rank2_report("compat-bracket", n, |x, y| {
                let lhs = cap.image_of(br.basis_product(x, y));
                let rhs = &(&apply_pair(&ad[x], &id, &cap.image(y))
                    + &apply_pair(&id, &ad[x], &cap.image(y)))
                    + &(&apply_pair(&lc[y], &id, &delta.image(x))
                        - &apply_pair(&id, &lc[y], &delta.image(x)));
                &lhs - &rhs
            })
        });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Field::Rational.int(v)
    }

    #[test]
    fn storage_convention_is_pinned() {
        // ⟨α(e_1), e_2* ⊗ e_1*⟩ is a[0][1][0]
        let mut t = Tensor3::zeros(Field::Rational, 2);
        t.add_at(0, 1, 0, &q(7));
        let c = Comultiplication::new(t);
        assert_eq!(c.image(0).get(1, 0), &q(7));
        // dual: e_2* ⋆ e_1* = 7 e_1*
        let d = dual_structure(&c);
        assert_eq!(d.get(1, 0, 0), &q(7));
        assert_eq!(comultiplication_from_dual(&d), c);
    }

    #[test]
    fn dim_one_dual() {
        let mut t = Tensor3::zeros(Field::Rational, 1);
        t.add_at(0, 0, 0, &q(1));
        let d = dual_structure(&Comultiplication::new(t));
        assert_eq!(d.get(0, 0, 0), &q(1));
        assert!(dual_structure(&Comultiplication::zeros(Field::Rational, 2)).is_zero());
    }

    #[test]
    fn zero_comultiplication_is_a_bialgebra() {
        let mut m = MulTensor::zeros(Field::Rational, 2);
        m.set(0, 1, 1, q(1));
        m.set(1, 0, 1, q(-1));
        let a = AdmPoissonAlgebra::new(m).unwrap();
        let c = Comultiplication::zeros(Field::Rational, 2);
        assert!(check_coalgebra(&c).holds);
        assert!(check_adm_bialgebra(&a, &c).unwrap().holds);
    }

    #[test]
    fn split_of_symmetric() {
        let mut t = Tensor3::zeros(Field::Rational, 2);
        t.add_at(0, 0, 1, &q(1));
        t.add_at(0, 1, 0, &q(1));
        let c = Comultiplication::new(t);
        let pair = split_comultiplication(&c);
        assert!(pair.delta().tensor().is_zero());
        assert_eq!(pair.big_delta(), &c);
        assert_eq!(merge_comultiplication(&pair), c);
    }

    #[test]
    fn pair_symmetry_is_enforced() {
        let mut t = Tensor3::zeros(Field::Rational, 2);
        t.add_at(0, 0, 1, &q(1));
        let c = Comultiplication::new(t);
        let z = Comultiplication::zeros(Field::Rational, 2);
        assert!(PoissonComultiplicationPair::new(c.clone(), z.clone()).is_err());
        assert!(PoissonComultiplicationPair::new(z, c).is_err());
    }
}
