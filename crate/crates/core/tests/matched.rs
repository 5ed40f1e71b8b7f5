use admpoisson::algebra::{check_adm_poisson, AdmPoissonAlgebra};
use admpoisson::matched::{
    bowtie, check_invariant_form, check_manin_triple, check_matched_pair, manin_double,
    BilinearForm, FormRequirements, MatchedPairData,
};
use admpoisson::representation::{adjoint_rep, check_rep_raw};
use admpoisson::{Field, Matrix, MulTensor, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gf5() -> Field {
    Field::prime(5).unwrap()
}

fn m1(f: Field, v: u64) -> Vec<Matrix> {
    vec![Matrix::from_rows(f, 1, 1, vec![f.element(v)]).unwrap()]
}

fn alg1(f: Field, c: u64) -> AdmPoissonAlgebra {
    let mut m = MulTensor::zeros(f, 1);
    m.set(0, 0, 0, f.element(c));
    AdmPoissonAlgebra::new(m).unwrap()
}

fn random_family(f: Field, count: usize, m: usize, rng: &mut ChaCha8Rng) -> Vec<Matrix> {
    (0..count)
        .map(|_| {
            let e: Vec<Scalar> = (0..m * m).map(|_| f.element(rng.gen_range(0..5))).collect();
            Matrix::from_rows(f, m, m, e).unwrap()
        })
        .collect()
}

#[test]
fn matched_pair_iff_bowtie_exhaustive_one_one() {
    let f = gf5();
    let mut valid = 0;
    let mut total = 0;
    for c1 in 0..5 {
        for c2 in 0..5 {
            for code in 0..625u64 {
                let d = [code % 5, code / 5 % 5, code / 25 % 5, code / 125];
                let mp = MatchedPairData::new(
                    alg1(f, c1),
                    alg1(f, c2),
                    m1(f, d[0]),
                    m1(f, d[1]),
                    m1(f, d[2]),
                    m1(f, d[3]),
                )
                .unwrap();
                let pair_ok = check_matched_pair(&mp).holds;
                let bow_ok = check_adm_poisson(bowtie(&mp).star()).holds;
                assert_eq!(pair_ok, bow_ok, "c1={c1} c2={c2} maps={d:?}");
                valid += pair_ok as usize;
                total += 1;
            }
        }
    }
    assert_eq!(total, 15625);
    assert!(valid > 25);
}

fn valid_algebra(f: Field, n: usize, rng: &mut ChaCha8Rng) -> AdmPoissonAlgebra {
    loop {
        let m = MulTensor::from_fn(f, n, |_, _, _| f.element(rng.gen_range(0..5)));
        if check_adm_poisson(&m).holds {
            return AdmPoissonAlgebra::new(m).unwrap();
        }
    }
}

#[test]
fn matched_pair_iff_bowtie_sampled_two_one() {
    // Random actions are almost never matched, so half the samples start from
    // a valid pair (semidirect and Manin-type data) and perturb one entry.
    let f = gf5();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut positives = 0;
    for round in 0..400 {
        let p1 = valid_algebra(f, 2, &mut rng);
        let p2 = valid_algebra(f, 1, &mut rng);
        let mp = if round % 2 == 0 {
            MatchedPairData::new(
                p1,
                p2,
                random_family(f, 2, 1, &mut rng),
                random_family(f, 2, 1, &mut rng),
                random_family(f, 1, 2, &mut rng),
                random_family(f, 1, 2, &mut rng),
            )
            .unwrap()
        } else {
            let z1 = AdmPoissonAlgebra::zero(f, 2);
            let adj = adjoint_rep(&p1);
            let mut l2 = vec![Matrix::zeros(f, 2, 2); 2];
            if round % 4 == 1 {
                l2[0].set(rng.gen_range(0..2), rng.gen_range(0..2), f.one());
            }
            MatchedPairData::new(
                p1,
                z1,
                adj.l().to_vec(),
                adj.r().to_vec(),
                l2,
                vec![Matrix::zeros(f, 2, 2); 2],
            )
            .unwrap()
        };
        let pair_ok = check_matched_pair(&mp).holds;
        assert_eq!(pair_ok, check_adm_poisson(bowtie(&mp).star()).holds);
        positives += pair_ok as usize;
    }
    assert!(positives > 50);
}

#[test]
fn failing_mixed_identity_is_named() {
    // Sweep dim-(1,1) data whose two actions are representations on their
    // own; whenever the pair still fails, the witness names a mixed identity.
    let f = gf5();
    let mut named = 0;
    for code in 0..625u64 {
        let d = [code % 5, code / 5 % 5, code / 25 % 5, code / 125];
        let (p1, p2) = (alg1(f, 1), alg1(f, 2));
        let rep1 = check_rep_raw(p1.star(), &m1(f, d[0]), &m1(f, d[1])).holds;
        let rep2 = check_rep_raw(p2.star(), &m1(f, d[2]), &m1(f, d[3])).holds;
        if !(rep1 && rep2) {
            continue;
        }
        let mp = MatchedPairData::new(p1, p2, m1(f, d[0]), m1(f, d[1]), m1(f, d[2]), m1(f, d[3]))
            .unwrap();
        let report = check_matched_pair(&mp);
        if !report.holds {
            let w = report.witness.unwrap();
            assert!(w.identity.starts_with("Defmatch"), "{}", w.identity);
            assert_ne!(w.lhs, w.rhs);
            named += 1;
        }
    }
    assert!(named > 0);
}

#[test]
fn manin_double_matches_triple_side() {
    // matched-pair verdict ⇔ (double adm-Poisson, subalgebras, B_d invariant), on dim-1
    // pairs exhaustively and dim-2 pairs at random
    let f = gf5();
    for c in 0..5 {
        for d in 0..5 {
            let (p, ps) = (alg1(f, c), alg1(f, d));
            let (double, report) = manin_double(&p, &ps).unwrap();
            assert_eq!(
                report.holds,
                check_manin_triple(&double, &p, &ps).holds,
                "{c} {d}"
            );
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..100 {
        let p = valid_algebra(f, 2, &mut rng);
        let ps = if rng.gen_bool(0.3) {
            AdmPoissonAlgebra::zero(f, 2)
        } else {
            valid_algebra(f, 2, &mut rng)
        };
        let (double, report) = manin_double(&p, &ps).unwrap();
        assert_eq!(report.holds, check_manin_triple(&double, &p, &ps).holds);
    }
}

#[test]
fn dim_one_unit_with_zero_dual() {
    let f = Field::Rational;
    let mut m = MulTensor::zeros(f, 1);
    m.set(0, 0, 0, f.one());
    let p = AdmPoissonAlgebra::new(m).unwrap();
    let z = AdmPoissonAlgebra::zero(f, 1);
    let (double, report) = manin_double(&p, &z).unwrap();
    if report.holds {
        assert!(check_manin_triple(&double, &p, &z).holds);
    } else {
        assert!(!check_manin_triple(&double, &p, &z).holds);
    }
}

#[test]
fn invariant_form_intertwines_adjoint_and_coadjoint() {
    // A nondegenerate symmetric invariant form φ(x) = B(x, ·) carries L to
    // −R* = Rᵀ and R to −L* = Lᵀ: φ L(x) = R(x)ᵀ φ and φ R(x) = L(x)ᵀ φ.
    let f = gf5();
    let mut found = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..40 {
        let p = valid_algebra(f, 1, &mut rng);
        let ps = valid_algebra(f, 1, &mut rng);
        let (double, report) = manin_double(&p, &ps).unwrap();
        if !report.holds {
            continue;
        }
        let form = admpoisson::matched::standard_form(f, 1);
        let req = FormRequirements {
            symmetric: true,
            nondegenerate: true,
        };
        assert!(check_invariant_form(&double, &form, req).unwrap().holds);
        let phi = form.gram().transpose();
        let star = double.star();
        for i in 0..2 {
            let (l, r) = (star.left_basis(i), star.right_basis(i));
            assert_eq!(&phi * &l, &r.transpose() * &phi);
            assert_eq!(&phi * &r, &l.transpose() * &phi);
        }
        found += 1;
    }
    assert!(found > 0);
    let g = BilinearForm::new(Matrix::zeros(f, 2, 2)).unwrap();
    let err = check_invariant_form(
        &AdmPoissonAlgebra::zero(f, 2),
        &g,
        FormRequirements {
            symmetric: true,
            nondegenerate: true,
        },
    );
    assert!(err.is_err());
}
