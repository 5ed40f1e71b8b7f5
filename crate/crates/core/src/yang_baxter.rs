//! Rank-2 tensors `r`, the Yang-Baxter operators, coboundary
//! comultiplications and the conditions that make them bialgebras.
//!
//! `r = Σ coeff[p][q] e_p ⊗ e_q`. For a basis element `x` the tensor is
//! decomposed as `r = Σ_p e_p ⊗ b_p` with `b_p` the `p`-th row of `coeff`.

use crate::algebra::{polarize, AdmPoissonAlgebra, PoissonAlgebra};
use crate::bialgebra::Comultiplication;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::{first_nonzero, sweep, AxiomReport};
use crate::scalar::{Field, Scalar};
use crate::tensor::{apply_pair, tensor3_product, MulTensor, SlotPattern, Tensor3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RTensor {
    coeff: Matrix,
}

impl RTensor {
    pub fn new(coeff: Matrix) -> Result<Self> {
        if !coeff.is_square() {
            return Err(Error::shape(format!(
                "r needs a square coefficient matrix, got {}x{}",
                coeff.rows(),
                coeff.cols()
            )));
        }
        Ok(RTensor { coeff })
    }

    pub fn zeros(field: Field, dim: usize) -> Self {
        RTensor {
            coeff: Matrix::zeros(field, dim, dim),
        }
    }

    pub fn coeff(&self) -> &Matrix {
        &self.coeff
    }

    pub fn dim(&self) -> usize {
        self.coeff.rows()
    }

    pub fn field(&self) -> Field {
        self.coeff.field()
    }

    pub fn get(&self, p: usize, q: usize) -> &Scalar {
        self.coeff.get(p, q)
    }

    /// `τ(r)`.
    pub fn flip(&self) -> RTensor {
        RTensor {
            coeff: self.coeff.transpose(),
        }
    }

    pub fn is_skew(&self) -> bool {
        self.coeff.transpose() == self.coeff.neg()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeff.transpose() == self.coeff
    }

    /// `r + τ(r)`.
    pub fn sym_sum(&self) -> Matrix {
        &self.coeff + &self.coeff.transpose()
    }

    /// `𝔞 = ½(r − τr)`.
    pub fn skew_part(&self) -> RTensor {
        let half = self.field().half();
        RTensor {
            coeff: (&self.coeff - &self.coeff.transpose()).scale(&half),
        }
    }

    /// `𝔰 = ½(r + τr)`.
    pub fn sym_part(&self) -> RTensor {
        RTensor {
            coeff: self.sym_sum().scale(&self.field().half()),
        }
    }

    /// `r♯: P* → P` with `⟨r♯(u*), v*⟩ = ⟨r, u* ⊗ v*⟩`, as a matrix on dual
    /// coordinates. This is the transpose of the coefficient matrix.
    pub fn sharp(&self) -> Matrix {
        self.coeff.transpose()
    }

    fn row(&self, p: usize) -> &[Scalar] {
        let n = self.dim();
        &self.coeff.entries()[p * n..(p + 1) * n]
    }
}

fn check_r(m: &MulTensor, r: &RTensor) -> Result<()> {
    if m.field() != r.field() {
        return Err(Error::FieldMismatch(m.field(), r.field()));
    }
    if m.dim() != r.dim() {
        return Err(Error::dim(m.dim(), r.dim()));
    }
    Ok(())
}

/// The four Yang-Baxter operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YbeOperator {
    /// `r23◇r12 − r13◇r23 − r12◇r13` for the adm-Poisson product.
    P,
    /// `r12◇r23 − r23◇r13 − r13◇r12` for the adm-Poisson product.
    Q,
    /// The `P` pattern for the commutative product `∘`.
    A,
    /// `[r23, r12] + [r23, r13] + [r13, r12]` for the bracket.
    C,
}

/// Evaluates an operator with the product tensor `m` (`⋆` for `P` and `Q`,
/// `∘` for `A`, the bracket for `C`).
pub fn ybe_operator(m: &MulTensor, r: &RTensor, which: YbeOperator) -> Result<Tensor3> {
    check_r(m, r)?;
    let c = &r.coeff;
    let prod = |pat| tensor3_product(c, c, m, pat);
    use SlotPattern::*;
    Ok(match which {
        YbeOperator::P | YbeOperator::A => prod(R23R12)?.sub(&prod(R13R23)?).sub(&prod(R12R13)?),
        YbeOperator::Q => prod(R12R23)?.sub(&prod(R23R13)?).sub(&prod(R13R12)?),
        YbeOperator::C => prod(R23R12)?.add(&prod(R23R13)?).add(&prod(R13R12)?),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YbeKind {
    AdmPybe,
    Cybe,
    Aybe,
    Pybe,
}

impl YbeKind {
    pub fn name(self) -> &'static str {
        match self {
            YbeKind::AdmPybe => "adm-PYBE",
            YbeKind::Cybe => "CYBE",
            YbeKind::Aybe => "AYBE",
            YbeKind::Pybe => "PYBE",
        }
    }
}

/// The algebra an equation is posed in.
#[derive(Clone, Copy, Debug)]
pub enum AlgebraRef<'a> {
    Adm(&'a AdmPoissonAlgebra),
    Poisson(&'a PoissonAlgebra),
}

fn vanishing(name: &str, t: &Tensor3) -> AxiomReport {
    let n = t.dim();
    let total = n * n * n;
    first_nonzero(name, "triples", total, &[], t.coeffs(), &[n, n, n])
        .unwrap_or_else(|| AxiomReport::ok(total, "triples"))
}

/// Decides a Yang-Baxter equation. `adm-PYBE` needs an adm-Poisson algebra,
/// the other three a Poisson algebra.
pub fn check_ybe(alg: AlgebraRef<'_>, r: &RTensor, kind: YbeKind) -> Result<AxiomReport> {
    match (alg, kind) {
        (AlgebraRef::Adm(a), YbeKind::AdmPybe) => Ok(vanishing(
            kind.name(),
            &ybe_operator(a.star(), r, YbeOperator::P)?,
        )),
        (AlgebraRef::Poisson(p), YbeKind::Cybe) => Ok(vanishing(
            kind.name(),
            &ybe_operator(p.bracket(), r, YbeOperator::C)?,
        )),
        (AlgebraRef::Poisson(p), YbeKind::Aybe) => Ok(vanishing(
            kind.name(),
            &ybe_operator(p.circ(), r, YbeOperator::A)?,
        )),
        (AlgebraRef::Poisson(p), YbeKind::Pybe) => {
            let c = check_ybe(alg, r, YbeKind::Cybe)?;
            if !c.holds {
                return Ok(c);
            }
            check_ybe(AlgebraRef::Poisson(p), r, YbeKind::Aybe)
        }
        _ => Err(Error::Precondition(format!(
            "{} is not posed in this kind of algebra",
            kind.name()
        ))),
    }
}

/// `α(x) = (id ⊗ L(x) − R(x) ⊗ id) r`.
pub fn coboundary_alpha(a: &AdmPoissonAlgebra, r: &RTensor) -> Result<Comultiplication> {
    let star = a.star();
    check_r(star, r)?;
    let n = a.dim();
    Ok(Comultiplication::new(Tensor3::from_fn(
        a.field(),
        n,
        |i, j, k| {
            let mut acc = a.field().zero();
            for q in 0..n {
                acc += r.get(j, q) * star.get(i, q, k);
            }
            for p in 0..n {
                acc -= r.get(p, k) * star.get(p, i, j);
            }
            acc
        },
    )))
}

/// Named conditions on `r` for the coboundary comultiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoboundaryCondition {
    Eqv1,
    Eqv2,
    Eqv3,
    Cosp,
    Con1,
    Cosp2,
    Corollary1a,
    Corollary1b,
}

impl CoboundaryCondition {
    pub const ALL: [CoboundaryCondition; 8] = [
        CoboundaryCondition::Eqv1,
        CoboundaryCondition::Eqv2,
        CoboundaryCondition::Eqv3,
        CoboundaryCondition::Cosp,
        CoboundaryCondition::Con1,
        CoboundaryCondition::Cosp2,
        CoboundaryCondition::Corollary1a,
        CoboundaryCondition::Corollary1b,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CoboundaryCondition::Eqv1 => "eqv1",
            CoboundaryCondition::Eqv2 => "eqv2",
            CoboundaryCondition::Eqv3 => "eqv3",
            CoboundaryCondition::Cosp => "cosp",
            CoboundaryCondition::Con1 => "con1",
            CoboundaryCondition::Cosp2 => "cosp2",
            CoboundaryCondition::Corollary1a => "corollary1a",
            CoboundaryCondition::Corollary1b => "corollary1b",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }
}

/// The pieces of the coalgebra condition for a coboundary `α`, evaluated at
/// one basis element `x`. The full expression is
/// `Lead + ⅓(P3 + Q3 + Sum1 + … + Sum6)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CospTerm {
    /// `(R(x)⊗id⊗id − id⊗id⊗L(x)) P(r)`
    Lead,
    /// `(id⊗R(x)⊗id − id⊗id⊗R(x)) P(r)`
    P3,
    /// `(R(x)⊗id⊗id − id⊗R(x)⊗id) Q(r)`
    Q3,
    /// `−Σ (R(x)⊗id⊗id)(a_i ⊗ N(b_i))`
    Sum1,
    /// `−Σ (id⊗R(x)⊗id)(τ⊗id)(a_i ⊗ N(b_i))`
    Sum2,
    /// `Σ (id⊗τ + id)((L(a_i)⊗id)N(x) ⊗ b_i)`
    Sum3,
    /// `Σ (τ⊗id + id)(a_i ⊗ N(x⋆b_i))`
    Sum4,
    /// `−Σ a_i ⊗ (R(b_i)⊗id)N(x)`
    Sum5,
    /// `−Σ (R(a_i)⊗id)N(x) ⊗ b_i`
    Sum6,
}

impl CospTerm {
    pub const ALL: [CospTerm; 9] = [
        CospTerm::Lead,
        CospTerm::P3,
        CospTerm::Q3,
        CospTerm::Sum1,
        CospTerm::Sum2,
        CospTerm::Sum3,
        CospTerm::Sum4,
        CospTerm::Sum5,
        CospTerm::Sum6,
    ];
}

const SWAP12: [usize; 3] = [1, 0, 2];
const SWAP23: [usize; 3] = [0, 2, 1];

/// Operators of one algebra and one `r`, shared by all conditions.
struct Ctx<'a> {
    star: &'a MulTensor,
    r: &'a RTensor,
    s: Matrix,
    ls: Vec<Matrix>,
    rs: Vec<Matrix>,
    id: Matrix,
    third: Scalar,
}

impl<'a> Ctx<'a> {
    fn new(star: &'a MulTensor, r: &'a RTensor) -> Self {
        let n = star.dim();
        Ctx {
            star,
            r,
            s: r.sym_sum(),
            ls: star.left_family(),
            rs: star.right_family(),
            id: Matrix::identity(star.field(), n),
            third: star.field().third(),
        }
    }

    fn n(&self) -> usize {
        self.star.dim()
    }

    /// `N(y) = (L(y)⊗id − id⊗R(y))(r + τr)`.
    fn big_n(&self, y: &[Scalar]) -> Matrix {
        let ly = self.star.left_slice(y);
        let ry = self.star.right_slice(y);
        &apply_pair(&ly, &self.id, &self.s) - &apply_pair(&self.id, &ry, &self.s)
    }

    fn basis(&self, i: usize) -> Vec<Scalar> {
        let f = self.star.field();
        (0..self.n())
            .map(|k| if k == i { f.one() } else { f.zero() })
            .collect()
    }

    fn on_s(&self, a: &Matrix, b: &Matrix) -> Matrix {
        apply_pair(a, b, &self.s)
    }

    fn eqv(&self, which: CoboundaryCondition, x: usize, y: usize) -> Matrix {
        let id = &self.id;
        let (lx, ly, rx, ry) = (&self.ls[x], &self.ls[y], &self.rs[x], &self.rs[y]);
        let nx = self.big_n(&self.basis(x));
        let ny = self.big_n(&self.basis(y));
        let xy = self.star.basis_product(x, y);
        let yx = self.star.basis_product(y, x);
        let common = &apply_pair(id, lx, &ny) + &apply_pair(id, ly, &nx);
        match which {
            CoboundaryCondition::Eqv1 => {
                let l = self.star.left_slice(xy);
                let r = self.star.right_slice(xy);
                &common - &(&self.on_s(&l, id) - &self.on_s(id, &r))
            }
            CoboundaryCondition::Eqv2 => {
                &(&common - &apply_pair(lx, id, &ny)) - &apply_pair(id, ry, &nx)
            }
            CoboundaryCondition::Eqv3 => {
                let dl = &self.star.left_slice(xy) - &self.star.left_slice(yx);
                let dr = &self.star.right_slice(xy) - &self.star.right_slice(yx);
                let head = &apply_pair(rx, id, &ny) - &apply_pair(id, lx, &ny);
                &head + &(&self.on_s(&dl, id) - &self.on_s(id, &dr)).scale(&self.third)
            }
            _ => unreachable!("pair conditions only"),
        }
    }

    fn ybe(&self, which: YbeOperator) -> Tensor3 {
        ybe_operator(self.star, self.r, which).expect("checked dimensions")
    }

    /// `Σ_p e_p ⊗ f(p)` for rank-2 tensors `f(p)`.
    fn sum_left(&self, f: impl Fn(usize) -> Matrix) -> Tensor3 {
        let mut out = Tensor3::zeros(self.star.field(), self.n());
        for p in 0..self.n() {
            out = out.add(&Tensor3::outer_left(&self.basis(p), &f(p)));
        }
        out
    }

    /// `Σ_p f(p) ⊗ b_p`.
    fn sum_right(&self, f: impl Fn(usize) -> Matrix) -> Tensor3 {
        let mut out = Tensor3::zeros(self.star.field(), self.n());
        for p in 0..self.n() {
            out = out.add(&Tensor3::outer_right(&f(p), self.r.row(p)));
        }
        out
    }

    fn cosp_term(&self, term: CospTerm, x: usize, p: &Tensor3, q: &Tensor3) -> Tensor3 {
        let (lx, rx) = (&self.ls[x], &self.rs[x]);
        let xv = self.basis(x);
        match term {
            CospTerm::Lead => p.apply_slot(0, rx).sub(&p.apply_slot(2, lx)),
            CospTerm::P3 => p.apply_slot(1, rx).sub(&p.apply_slot(2, rx)),
            CospTerm::Q3 => q.apply_slot(0, rx).sub(&q.apply_slot(1, rx)),
            CospTerm::Sum1 => {
                let w = self.sum_left(|p| self.big_n(self.r.row(p)));
                w.apply_slot(0, rx).scale(&-&self.star.field().one())
            }
            CospTerm::Sum2 => {
                let w = self.sum_left(|p| self.big_n(self.r.row(p)));
                w.permute(SWAP12)
                    .apply_slot(1, rx)
                    .scale(&-&self.star.field().one())
            }
            CospTerm::Sum3 => {
                let nx = self.big_n(&xv);
                let w = self.sum_right(|p| apply_pair(&self.ls[p], &self.id, &nx));
                w.permute(SWAP23).add(&w)
            }
            CospTerm::Sum4 => {
                let w = self.sum_left(|p| self.big_n(&self.star.mul_slices(&xv, self.r.row(p))));
                w.permute(SWAP12).add(&w)
            }
            CospTerm::Sum5 => {
                let nx = self.big_n(&xv);
                let w = self.sum_left(|p| {
                    let rb = self.star.right_slice(self.r.row(p));
                    apply_pair(&rb, &self.id, &nx)
                });
                w.scale(&-&self.star.field().one())
            }
            CospTerm::Sum6 => {
                let nx = self.big_n(&xv);
                let w = self.sum_right(|p| apply_pair(&self.rs[p], &self.id, &nx));
                w.scale(&-&self.star.field().one())
            }
        }
    }

    fn cosp(&self, x: usize, full: bool, p: &Tensor3, q: &Tensor3) -> Tensor3 {
        let terms: &[CospTerm] = if full {
            &CospTerm::ALL[1..]
        } else {
            &CospTerm::ALL[1..3]
        };
        let mut inner = Tensor3::zeros(self.star.field(), self.n());
        for &t in terms {
            inner = inner.add(&self.cosp_term(t, x, p, q));
        }
        self.cosp_term(CospTerm::Lead, x, p, q)
            .add(&inner.scale(&self.third))
    }
}

/// One piece of the coalgebra condition at basis element `x`.
pub fn cosp_term(a: &AdmPoissonAlgebra, r: &RTensor, x: usize, term: CospTerm) -> Result<Tensor3> {
    check_r(a.star(), r)?;
    if x >= a.dim() {
        return Err(Error::Invalid(format!("basis index {x} out of range")));
    }
    let ctx = Ctx::new(a.star(), r);
    let (p, q) = (ctx.ybe(YbeOperator::P), ctx.ybe(YbeOperator::Q));
    Ok(ctx.cosp_term(term, x, &p, &q))
}

/// The full coalgebra-condition tensor at basis element `x`.
pub fn cosp_tensor(a: &AdmPoissonAlgebra, r: &RTensor, x: usize) -> Result<Tensor3> {
    check_r(a.star(), r)?;
    let ctx = Ctx::new(a.star(), r);
    let (p, q) = (ctx.ybe(YbeOperator::P), ctx.ybe(YbeOperator::Q));
    Ok(ctx.cosp(x, true, &p, &q))
}

fn pairs_report(name: &str, n: usize, f: impl Fn(usize, usize) -> Matrix) -> AxiomReport {
    for x in 0..n {
        for y in 0..n {
            if let Some(r) =
                first_nonzero(name, "pairs", n * n, &[x, y], f(x, y).entries(), &[n, n])
            {
                return r;
            }
        }
    }
    AxiomReport::ok(n * n, "pairs")
}

fn elements_report<T>(
    name: &str,
    n: usize,
    f: impl Fn(usize) -> T,
    coeffs: impl Fn(&T) -> (&[Scalar], Vec<usize>),
) -> AxiomReport {
    for x in 0..n {
        let v = f(x);
        let (c, shape) = coeffs(&v);
        if let Some(r) = first_nonzero(name, "elements", n, &[x], c, &shape) {
            return r;
        }
    }
    AxiomReport::ok(n, "elements")
}

fn rank2_elements(name: &str, n: usize, f: impl Fn(usize) -> Matrix) -> AxiomReport {
    elements_report(name, n, f, |m| (m.entries(), vec![n, n]))
}

fn rank3_elements(name: &str, n: usize, f: impl Fn(usize) -> Tensor3) -> AxiomReport {
    elements_report(name, n, f, |t| (t.coeffs(), vec![n, n, n]))
}

/// Evaluates one named condition on all basis elements (and pairs where the
/// condition has two arguments).
pub fn check_coboundary_condition(
    a: &AdmPoissonAlgebra,
    r: &RTensor,
    which: CoboundaryCondition,
) -> Result<AxiomReport> {
    check_r(a.star(), r)?;
    let ctx = Ctx::new(a.star(), r);
    let n = a.dim();
    let name = which.name();
    use CoboundaryCondition::*;
    Ok(match which {
        Eqv1 | Eqv2 | Eqv3 => pairs_report(name, n, |x, y| ctx.eqv(which, x, y)),
        Con1 => rank2_elements(name, n, |x| ctx.big_n(&ctx.basis(x))),
        Cosp | Cosp2 => {
            let (p, q) = (ctx.ybe(YbeOperator::P), ctx.ybe(YbeOperator::Q));
            rank3_elements(name, n, |x| ctx.cosp(x, which == Cosp, &p, &q))
        }
        Corollary1a | Corollary1b => corollary1(&polarize(a), r, which == Corollary1a),
    })
}

/// The two conditions phrased on the Poisson side, with `L = L∘ + ad`,
/// `R = L∘ − ad`, `P = A + C` and `Q = A − C`.
fn corollary1(p: &PoissonAlgebra, r: &RTensor, part_a: bool) -> AxiomReport {
    let n = p.dim();
    let lc = p.circ().left_family();
    let ad = p.bracket().left_family();
    let plus: Vec<Matrix> = (0..n).map(|x| &lc[x] + &ad[x]).collect();
    let minus: Vec<Matrix> = (0..n).map(|x| &lc[x] - &ad[x]).collect();
    if part_a {
        let s = r.sym_sum();
        let id = Matrix::identity(p.field(), n);
        return rank2_elements("corollary1a", n, |x| {
            &apply_pair(&plus[x], &id, &s) - &apply_pair(&id, &minus[x], &s)
        });
    }
    let am = ybe_operator(p.circ(), r, YbeOperator::A).expect("checked dimensions");
    let cm = ybe_operator(p.bracket(), r, YbeOperator::C).expect("checked dimensions");
    let (pp, qq) = (am.add(&cm), am.sub(&cm));
    let third = p.field().third();
    rank3_elements("corollary1b", n, |x| {
        let lead = pp.apply_slot(0, &minus[x]).sub(&pp.apply_slot(2, &plus[x]));
        let inner = pp
            .apply_slot(1, &minus[x])
            .sub(&pp.apply_slot(2, &minus[x]))
            .add(&qq.apply_slot(0, &minus[x]))
            .sub(&qq.apply_slot(1, &minus[x]));
        lead.add(&inner.scale(&third))
    })
}

/// `δ(x) = (ad x⊗id + id⊗ad x) r` and `Δ(x) = (id⊗L∘(x) − L∘(x)⊗id) r`,
/// without any symmetry requirement.
pub fn coboundary_poisson_maps(
    p: &PoissonAlgebra,
    r: &RTensor,
) -> Result<(Comultiplication, Comultiplication)> {
    check_r(p.circ(), r)?;
    let n = p.dim();
    let f = p.field();
    let ad = p.bracket().left_family();
    let lc = p.circ().left_family();
    let id = Matrix::identity(f, n);
    let c = r.coeff();
    let build = |g: &dyn Fn(usize) -> Matrix| {
        let images: Vec<Matrix> = (0..n).map(g).collect();
        Comultiplication::new(Tensor3::from_fn(f, n, |i, j, k| {
            images[i].get(j, k).clone()
        }))
    };
    let delta = build(&|x| &apply_pair(&ad[x], &id, c) + &apply_pair(&id, &ad[x], c));
    let big = build(&|x| &apply_pair(&id, &lc[x], c) - &apply_pair(&lc[x], &id, c));
    Ok((delta, big))
}

/// The five conditions characterizing coboundary Poisson bialgebras.
pub fn check_coboundary_poisson(p: &PoissonAlgebra, r: &RTensor) -> Result<AxiomReport> {
    check_r(p.circ(), r)?;
    let n = p.dim();
    let f = p.field();
    let ad = p.bracket().left_family();
    let lc = p.circ().left_family();
    let id = Matrix::identity(f, n);
    let s = r.sym_sum();
    let am = ybe_operator(p.circ(), r, YbeOperator::A)?;
    let cm = ybe_operator(p.bracket(), r, YbeOperator::C)?;
    Ok(rank2_elements("cLie1", n, |x| {
        &apply_pair(&ad[x], &id, &s) + &apply_pair(&id, &ad[x], &s)
    })
    .and_then(|| {
        rank2_elements("cLie2", n, |x| {
            &apply_pair(&lc[x], &id, &s) - &apply_pair(&id, &lc[x], &s)
        })
    })
    .and_then(|| {
        rank3_elements("cLie3", n, |x| {
            cm.apply_slot(0, &ad[x])
                .add(&cm.apply_slot(1, &ad[x]))
                .add(&cm.apply_slot(2, &ad[x]))
        })
    })
    .and_then(|| {
        rank3_elements("cLie4", n, |x| {
            am.apply_slot(0, &lc[x]).sub(&am.apply_slot(2, &lc[x]))
        })
    })
    .and_then(|| {
        rank3_elements("cLie5", n, |x| {
            am.apply_slot(0, &ad[x])
                .sub(&cm.apply_slot(1, &lc[x]).sub(&cm.apply_slot(2, &lc[x])))
        })
    }))
}

fn require_skew(r: &RTensor) -> Result<()> {
    if r.is_skew() {
        Ok(())
    } else {
        Err(Error::Precondition("r is not skew-symmetric".into()))
    }
}

/// `r♯(a*) ⋆ r♯(b*) = r♯(R(r♯a*)ᵀ b* + L(r♯b*)ᵀ a*)` on all dual basis pairs,
/// where `−R*` and `−L*` act on dual coordinates by the transposes.
pub fn operator_form_check(a: &AdmPoissonAlgebra, r: &RTensor) -> Result<AxiomReport> {
    check_r(a.star(), r)?;
    require_skew(r)?;
    let star = a.star();
    let n = a.dim();
    let sharp = r.sharp();
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|i| (0..n).map(|k| sharp.get(k, i).clone()).collect())
        .collect();
    Ok(sweep(n, 2, "pairs", "operator-form", |idx| {
        let (i, j) = (idx[0], idx[1]);
        let (ra, rb) = (&cols[i], &cols[j]);
        let lhs = star.mul_slices(ra, rb);
        // R(r♯a*)ᵀ e_j* + L(r♯b*)ᵀ e_i*
        let rt = star.right_slice(ra);
        let lt = star.left_slice(rb);
        let arg: Vec<Scalar> = (0..n).map(|k| rt.get(j, k) + lt.get(i, k)).collect();
        (lhs, sharp.mul_slice(&arg))
    }))
}

/// The cyclic identity `ω(x⋆y, z) + ω(y⋆z, x) + ω(z⋆x, y) = 0` for the form
/// `ω(x, y) = ⟨(r♯)⁻¹ x, y⟩`.
pub fn cyclic_form_check(a: &AdmPoissonAlgebra, r: &RTensor) -> Result<AxiomReport> {
    check_r(a.star(), r)?;
    require_skew(r)?;
    let inv = r
        .sharp()
        .inverse()
        .map_err(|_| Error::Precondition("r is degenerate".into()))?;
    let gram = inv.transpose();
    let star = a.star();
    let f = a.field();
    let n = a.dim();
    let omega = |u: &[Scalar], w: usize| {
        let mut acc = f.zero();
        for (k, uk) in u.iter().enumerate() {
            if !uk.is_zero() {
                acc += uk * gram.get(k, w);
            }
        }
        acc
    };
    Ok(sweep(n, 3, "triples", "cyclic-form", |idx| {
        let (x, y, z) = (idx[0], idx[1], idx[2]);
        let total = omega(star.basis_product(x, y), z)
            + omega(star.basis_product(y, z), x)
            + omega(star.basis_product(z, x), y);
        (vec![total], vec![f.zero()])
    }))
}

/// Outcome of solving for the auxiliary tensor `r₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryCorrespondence {
    pub is_coboundary_poisson: bool,
    pub r1: Option<RTensor>,
}

/// Decides whether `(id⊗L(x) − R(x)⊗id)(s − r₁) = 0` and
/// `(L(x)⊗id − id⊗R(x))(s + r₁) = 0` for all `x` have a common solution `r₁`,
/// with `s = r + τr`. Free variables of the solution are set to zero.
pub fn coboundary_correspondence(
    a: &AdmPoissonAlgebra,
    r: &RTensor,
) -> Result<CoboundaryCorrespondence> {
    check_r(a.star(), r)?;
    let n = a.dim();
    let f = a.field();
    let id = Matrix::identity(f, n);
    let ls = a.star().left_family();
    let rs = a.star().right_family();
    let s = r.sym_sum();
    let ops = |x: usize, m: &Matrix| -> (Matrix, Matrix) {
        (
            &apply_pair(&id, &ls[x], m) - &apply_pair(&rs[x], &id, m),
            &apply_pair(&ls[x], &id, m) - &apply_pair(&id, &rs[x], m),
        )
    };
    let rows = 2 * n * n * n;
    let vars = n * n;
    let mut system = Matrix::zeros(f, rows, vars);
    for v in 0..vars {
        let mut unit = Matrix::zeros(f, n, n);
        unit.set(v / n, v % n, f.one());
        for x in 0..n {
            let (first, second) = ops(x, &unit);
            for (e, val) in first.entries().iter().chain(second.entries()).enumerate() {
                system.set(x * 2 * n * n + e, v, val.clone());
            }
        }
    }
    let mut rhs = Vec::with_capacity(rows);
    for x in 0..n {
        let (first, second) = ops(x, &s);
        rhs.extend(first.entries().iter().cloned());
        rhs.extend(second.entries().iter().map(|v| -v));
    }
    Ok(match system.solve(&rhs)? {
        Some(sol) => CoboundaryCorrespondence {
            is_coboundary_poisson: true,
            r1: Some(RTensor::new(Matrix::from_rows(f, n, n, sol)?)?),
        },
        None => CoboundaryCorrespondence {
            is_coboundary_poisson: false,
            r1: None,
        },
    })
}
