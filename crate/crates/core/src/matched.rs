//! Matched pairs, their bowtie sums, invariant bilinear forms and the
//! standard Manin double on `P ⊕ P*`.

use crate::algebra::AdmPoissonAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{combo, Matrix};
use crate::report::{sweep, AxiomReport};
use crate::representation::check_rep_raw;
use crate::scalar::Scalar;
use crate::tensor::MulTensor;

/// Two algebras acting on each other: `l1, r1 : P1 → End(P2)` and
/// `l2, r2 : P2 → End(P1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairData {
    pub p1: AdmPoissonAlgebra,
    pub p2: AdmPoissonAlgebra,
    pub l1: Vec<Matrix>,
    pub r1: Vec<Matrix>,
    pub l2: Vec<Matrix>,
    pub r2: Vec<Matrix>,
}

fn check_shapes(fam: &[Matrix], n: usize, m: usize) -> Result<()> {
    if fam.len() != n {
        return Err(Error::dim(n, fam.len()));
    }
    if let Some(bad) = fam.iter().find(|x| x.rows() != m || x.cols() != m) {
        return Err(Error::shape(format!(
            "expected {m}x{m} action matrices, found {}x{}",
            bad.rows(),
            bad.cols()
        )));
    }
    Ok(())
}

impl MatchedPairData {
    pub fn new(
        p1: AdmPoissonAlgebra,
        p2: AdmPoissonAlgebra,
        l1: Vec<Matrix>,
        r1: Vec<Matrix>,
        l2: Vec<Matrix>,
        r2: Vec<Matrix>,
    ) -> Result<Self> {
        if p1.field() != p2.field() {
            return Err(Error::FieldMismatch(p1.field(), p2.field()));
        }
        let (n1, n2) = (p1.dim(), p2.dim());
        check_shapes(&l1, n1, n2)?;
        check_shapes(&r1, n1, n2)?;
        check_shapes(&l2, n2, n1)?;
        check_shapes(&r2, n2, n1)?;
        Ok(MatchedPairData {
            p1,
            p2,
            l1,
            r1,
            l2,
            r2,
        })
    }
}

/// The three mixed identities with `x, y` in the home algebra `h` and `o` in
/// the other one, valued in the home space. `(lh, rh)` act on the other
/// space, `(lo, ro)` on the home space. With home = P1 these are the first
/// three matched-pair equations; with home = P2 the last three.
#[allow(clippy::too_many_arguments)]
fn mixed_identities(
    h: &MulTensor,
    lh: &[Matrix],
    rh: &[Matrix],
    lo: &[Matrix],
    ro: &[Matrix],
    other_dim: usize,
    names: [&str; 3],
) -> AxiomReport {
    let n = h.dim();
    let f = h.field();
    let third = f.third();
    let one = f.one();
    let neg = -&one;
    let nt = -&third;
    let e = |i: usize| -> Vec<Scalar> {
        let mut v = vec![f.zero(); n];
        v[i] = f.one();
        v
    };
    // ρ(w) for an action family evaluated at a coordinate vector w of the other space
    let act = |fam: &[Matrix], w: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![f.zero(); v.len()];
        for (wi, m) in w.iter().zip(fam) {
            if !wi.is_zero() {
                let mv = m.mul_slice(v);
                for (o, t) in out.iter_mut().zip(&mv) {
                    *o += wi * t;
                }
            }
        }
        out
    };
    let oe = |a: usize| -> Vec<Scalar> {
        let mut v = vec![f.zero(); other_dim];
        v[a] = f.one();
        v
    };
    let mul = |u: &[Scalar], v: &[Scalar]| h.mul_slices(u, v);
    // sub-expressions shared by the three identities, for x, y in h and a in the other algebra
    struct Terms {
        ro_a_xy: Vec<Scalar>,
        lo_a_xy: Vec<Scalar>,
        lo_a_yx: Vec<Scalar>,
        ro_lh_y_a_x: Vec<Scalar>,
        ro_lh_x_a_y: Vec<Scalar>,
        ro_rh_y_a_x: Vec<Scalar>,
        ro_rh_x_a_y: Vec<Scalar>,
        lo_rh_x_a_y: Vec<Scalar>,
        lo_lh_x_a_y: Vec<Scalar>,
        x_ro_a_y: Vec<Scalar>,
        x_lo_a_y: Vec<Scalar>,
        y_ro_a_x: Vec<Scalar>,
        y_lo_a_x: Vec<Scalar>,
        lo_a_x_y: Vec<Scalar>,
        ro_a_x_y: Vec<Scalar>,
    }
    let terms = |x: usize, y: usize, a: usize| -> Terms {
        let (ex, ey, ea) = (e(x), e(y), oe(a));
        let ro_a = |v: &[Scalar]| act(ro, &ea, v);
        let lo_a = |v: &[Scalar]| act(lo, &ea, v);
        Terms {
            ro_a_xy: ro_a(h.basis_product(x, y)),
            lo_a_xy: lo_a(h.basis_product(x, y)),
            lo_a_yx: lo_a(h.basis_product(y, x)),
            ro_lh_y_a_x: act(ro, &lh[y].mul_slice(&ea), &ex),
            ro_lh_x_a_y: act(ro, &lh[x].mul_slice(&ea), &ey),
            ro_rh_y_a_x: act(ro, &rh[y].mul_slice(&ea), &ex),
            ro_rh_x_a_y: act(ro, &rh[x].mul_slice(&ea), &ey),
            lo_rh_x_a_y: act(lo, &rh[x].mul_slice(&ea), &ey),
            lo_lh_x_a_y: act(lo, &lh[x].mul_slice(&ea), &ey),
            x_ro_a_y: mul(&ex, &ro_a(&ey)),
            x_lo_a_y: mul(&ex, &lo_a(&ey)),
            y_ro_a_x: mul(&ey, &ro_a(&ex)),
            y_lo_a_x: mul(&ey, &lo_a(&ex)),
            lo_a_x_y: mul(&lo_a(&ex), &ey),
            ro_a_x_y: mul(&ro_a(&ex), &ey),
        }
    };
    let idx = |t: &[usize]| (t[0], t[1], t[2]);
    let count = [n, n, other_dim];
    sweep3(count, names[0], |t| {
        let (x, y, a) = idx(t);
        let s = terms(x, y, a);
        let rhs = combo(
            f,
            n,
            &[
                (&one, &s.ro_lh_y_a_x),
                (&one, &s.x_ro_a_y),
                (&third, &s.ro_rh_y_a_x),
                (&third, &s.x_lo_a_y),
                (&nt, &s.lo_a_xy),
                (&nt, &s.y_ro_a_x),
                (&nt, &s.ro_lh_x_a_y),
                (&third, &s.y_lo_a_x),
                (&third, &s.ro_rh_x_a_y),
            ],
        );
        (s.ro_a_xy, rhs)
    })
    .and_then(|| {
        sweep3(count, names[1], |t| {
            let (x, y, a) = idx(t);
            let s = terms(x, y, a);
            let rhs = combo(
                f,
                n,
                &[
                    (&one, &s.lo_a_x_y),
                    (&one, &s.lo_rh_x_a_y),
                    (&nt, &s.lo_a_yx),
                    (&third, &s.y_lo_a_x),
                    (&third, &s.ro_rh_x_a_y),
                    (&third, &s.x_lo_a_y),
                    (&third, &s.ro_rh_y_a_x),
                    (&nt, &s.x_ro_a_y),
                    (&nt, &s.ro_lh_y_a_x),
                ],
            );
            (s.lo_a_xy, rhs)
        })
    })
    .and_then(|| {
        sweep3(count, names[2], |t| {
            let (x, y, a) = idx(t);
            let s = terms(x, y, a);
            let rhs = combo(
                f,
                n,
                &[
                    (&neg, &s.lo_lh_x_a_y),
                    (&one, &s.x_lo_a_y),
                    (&one, &s.ro_rh_y_a_x),
                    (&third, &s.x_ro_a_y),
                    (&third, &s.ro_lh_y_a_x),
                    (&nt, &s.y_ro_a_x),
                    (&nt, &s.ro_lh_x_a_y),
                    (&nt, &s.lo_a_xy),
                    (&third, &s.lo_a_yx),
                ],
            );
            (s.ro_a_x_y, rhs)
        })
    })
}

/// Like [`sweep`] over a box of index ranges.
fn sweep3(
    count: [usize; 3],
    identity: &str,
    mut eval: impl FnMut(&[usize]) -> (Vec<Scalar>, Vec<Scalar>),
) -> AxiomReport {
    let total = count.iter().product();
    for i in 0..count[0] {
        for j in 0..count[1] {
            for k in 0..count[2] {
                let t = [i, j, k];
                let (lhs, rhs) = eval(&t);
                if lhs != rhs {
                    return AxiomReport::fail(
                        total,
                        "triples",
                        crate::report::Witness {
                            identity: identity.to_string(),
                            indices: t.to_vec(),
                            lhs,
                            rhs,
                        },
                    );
                }
            }
        }
    }
    AxiomReport::ok(total, "triples")
}

/// Both representation conditions, then the six mixed identities
/// `Defmatch1`..`Defmatch6`. Witness indices for the first three are
/// `(x, y, a)` with `x, y ∈ P1`, `a ∈ P2`; for the last three `(a, b, x)`.
pub fn check_matched_pair(mp: &MatchedPairData) -> AxiomReport {
    let (s1, s2) = (mp.p1.star(), mp.p2.star());
    check_rep_raw(s1, &mp.l1, &mp.r1)
        .prefixed("rep1")
        .and_then(|| check_rep_raw(s2, &mp.l2, &mp.r2).prefixed("rep2"))
        .and_then(|| {
            mixed_identities(
                s1,
                &mp.l1,
                &mp.r1,
                &mp.l2,
                &mp.r2,
                s2.dim(),
                ["Defmatch1", "Defmatch2", "Defmatch3"],
            )
        })
        .and_then(|| {
            mixed_identities(
                s2,
                &mp.l2,
                &mp.r2,
                &mp.l1,
                &mp.r1,
                s1.dim(),
                ["Defmatch4", "Defmatch5", "Defmatch6"],
            )
        })
}

/// `(x+a)⋆(y+b) = x⋆y + r2(b)x + l2(a)y + l1(x)b + r1(y)a + a⋆b` on
/// `P1 ⊕ P2`, indices `0..n1` then `n1..n1+n2`.
pub fn bowtie(mp: &MatchedPairData) -> AdmPoissonAlgebra {
    let (s1, s2) = (mp.p1.star(), mp.p2.star());
    let (n1, n2) = (s1.dim(), s2.dim());
    let mut out = MulTensor::zeros(s1.field(), n1 + n2);
    for i in 0..n1 {
        for j in 0..n1 {
            for k in 0..n1 {
                out.set(i, j, k, s1.get(i, j, k).clone());
            }
        }
    }
    for a in 0..n2 {
        for b in 0..n2 {
            for k in 0..n2 {
                out.set(n1 + a, n1 + b, n1 + k, s2.get(a, b, k).clone());
            }
        }
    }
    for i in 0..n1 {
        for b in 0..n2 {
            // e_i ⋆ f_b = r2(f_b) e_i + l1(e_i) f_b
            for k in 0..n1 {
                out.set(i, n1 + b, k, mp.r2[b].get(k, i).clone());
                out.set(n1 + b, i, k, mp.l2[b].get(k, i).clone());
            }
            for k in 0..n2 {
                out.set(i, n1 + b, n1 + k, mp.l1[i].get(k, b).clone());
                out.set(n1 + b, i, n1 + k, mp.r1[i].get(k, b).clone());
            }
        }
    }
    AdmPoissonAlgebra::new_unchecked(out)
}

/// A bilinear form by its Gram matrix, `B(e_i, e_j) = gram[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::shape("Gram matrix must be square"));
        }
        Ok(BilinearForm { gram })
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.mul_slice(y);
        let mut acc = self.gram.field().zero();
        for (a, b) in x.iter().zip(&gy) {
            acc += a * b;
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FormRequirements {
    pub symmetric: bool,
    pub nondegenerate: bool,
}

/// `B(x⋆y, z) = B(x, y⋆z)` on basis triples, plus the requested flags.
pub fn check_invariant_form(
    a: &AdmPoissonAlgebra,
    form: &BilinearForm,
    req: FormRequirements,
) -> Result<AxiomReport> {
    let n = a.dim();
    if form.dim() != n {
        return Err(Error::dim(n, form.dim()));
    }
    let g = form.gram();
    let f = a.field();
    let mut report = AxiomReport::ok(0, "triples");
    if req.symmetric {
        report = sweep(n, 2, "pairs", "symmetry", |p| {
            (
                vec![g.get(p[0], p[1]).clone()],
                vec![g.get(p[1], p[0]).clone()],
            )
        });
    }
    if report.holds && req.nondegenerate && g.determinant()?.is_zero() {
        return Err(Error::Precondition("bilinear form is degenerate".into()));
    }
    let star = a.star();
    let e = |i: usize| -> Vec<Scalar> {
        let mut v = vec![f.zero(); n];
        v[i] = f.one();
        v
    };
    Ok(report.and_then(|| {
        sweep(n, 3, "triples", "invariance", |t| {
            let lhs = form.eval(star.basis_product(t[0], t[1]), &e(t[2]));
            let rhs = form.eval(&e(t[0]), star.basis_product(t[1], t[2]));
            (vec![lhs], vec![rhs])
        })
    }))
}

/// `B_d(x + a*, y + b*) = ⟨x, b*⟩ + ⟨a*, y⟩` on `P ⊕ P*`.
pub fn standard_form(field: crate::scalar::Field, n: usize) -> BilinearForm {
    let gram = Matrix::from_fn(field, 2 * n, 2 * n, |i, j| {
        if i + n == j || j + n == i {
            field.one()
        } else {
            field.zero()
        }
    });
    BilinearForm { gram }
}

/// Matched-pair data `(P, P*, −R_P*, −L_P*, −R_{P*}*, −L_{P*}*)`.
/// With the dual convention `ρ* = −ρᵀ`, `−R_P*(x) = R_P(x)ᵀ` and so on.
pub fn manin_matched_pair(
    p: &AdmPoissonAlgebra,
    pstar: &AdmPoissonAlgebra,
) -> Result<MatchedPairData> {
    if p.dim() != pstar.dim() {
        return Err(Error::dim(p.dim(), pstar.dim()));
    }
    let tr = |fam: Vec<Matrix>| fam.iter().map(Matrix::transpose).collect::<Vec<_>>();
    MatchedPairData::new(
        p.clone(),
        pstar.clone(),
        tr(p.star().right_family()),
        tr(p.star().left_family()),
        tr(pstar.star().right_family()),
        tr(pstar.star().left_family()),
    )
}

/// The algebra on `P ⊕ P*` together with the matched-pair verdict.
pub fn manin_double(
    p: &AdmPoissonAlgebra,
    pstar: &AdmPoissonAlgebra,
) -> Result<(AdmPoissonAlgebra, AxiomReport)> {
    let mp = manin_matched_pair(p, pstar)?;
    let report = check_matched_pair(&mp);
    Ok((bowtie(&mp), report))
}

/// Whether the coordinate block `offset..offset+n` of `double` is closed
/// under the product and carries exactly `sub` there.
pub fn is_subalgebra_block(double: &MulTensor, sub: &MulTensor, offset: usize) -> bool {
    let n = sub.dim();
    let total = double.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..total {
                let c = double.get(offset + i, offset + j, k);
                let expect_block = k >= offset && k < offset + n;
                if expect_block {
                    if c != sub.get(i, j, k - offset) {
                        return false;
                    }
                } else if !c.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// The Manin-triple side: the double is adm-Poisson, `P` and `P*` are
/// subalgebras of it and `B_d` is invariant.
pub fn check_manin_triple(
    double: &AdmPoissonAlgebra,
    p: &AdmPoissonAlgebra,
    pstar: &AdmPoissonAlgebra,
) -> AxiomReport {
    let n = p.dim();
    let sub_ok = is_subalgebra_block(double.star(), p.star(), 0)
        && is_subalgebra_block(double.star(), pstar.star(), n);
    if !sub_ok {
        return AxiomReport::fail(
            0,
            "triples",
            crate::report::Witness {
                identity: "subalgebra".into(),
                indices: vec![],
                lhs: vec![],
                rhs: vec![],
            },
        );
    }
    crate::algebra::check_adm_poisson(double.star()).and_then(|| {
        check_invariant_form(
            double,
            &standard_form(p.field(), n),
            FormRequirements::default(),
        )
        .expect("standard form has the double's dimension")
    })
}
