use admpoisson::algebra::{check_adm_poisson, AdmPoissonAlgebra};
use admpoisson::representation::{
    adjoint_rep, check_rep_consequence, check_rep_raw, check_representation, dual_rep,
    poisson_rep_to_rep, rep_to_poisson_rep, semidirect_raw, Representation,
};
use admpoisson::{Field, Matrix, MulTensor, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gf5() -> Field {
    Field::prime(5).unwrap()
}

fn random_tensor(f: Field, n: usize, rng: &mut ChaCha8Rng) -> MulTensor {
    let p = f.order().unwrap();
    MulTensor::from_fn(f, n, |_, _, _| f.element(rng.gen_range(0..p)))
}

fn random_matrix(f: Field, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let p = f.order().unwrap();
    let entries: Vec<Scalar> = (0..n * n).map(|_| f.element(rng.gen_range(0..p))).collect();
    Matrix::from_rows(f, n, n, entries).unwrap()
}

fn valid_algebras(f: Field, n: usize, want: usize, rng: &mut ChaCha8Rng) -> Vec<MulTensor> {
    let mut out = vec![MulTensor::zeros(f, n)];
    while out.len() < want {
        let m = random_tensor(f, n, rng);
        if check_adm_poisson(&m).holds {
            out.push(m);
        }
    }
    out
}

#[test]
fn semidirect_equivalence_exhaustive_one_plus_one() {
    let f = gf5();
    let mut agree = 0;
    for c in 0..5 {
        let mut star = MulTensor::zeros(f, 1);
        star.set(0, 0, 0, f.element(c));
        for a in 0..5 {
            for b in 0..5 {
                let l = vec![Matrix::from_rows(f, 1, 1, vec![f.element(a)]).unwrap()];
                let r = vec![Matrix::from_rows(f, 1, 1, vec![f.element(b)]).unwrap()];
                let rep_ok = check_rep_raw(&star, &l, &r).holds;
                let semi_ok = check_adm_poisson(&semidirect_raw(&star, &l, &r)).holds;
                assert_eq!(rep_ok, semi_ok, "c={c} l={a} r={b}");
                agree += 1;
            }
        }
    }
    assert_eq!(agree, 125);
}

#[test]
fn semidirect_equivalence_sampled_larger() {
    // Both directions over valid base algebras, with representations of
    // dimension 2 drawn at random and also from adjoint and dual actions.
    let f = gf5();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for star in valid_algebras(f, 2, 12, &mut rng) {
        for _ in 0..200 {
            let l: Vec<Matrix> = (0..2).map(|_| random_matrix(f, 2, &mut rng)).collect();
            let r: Vec<Matrix> = (0..2).map(|_| random_matrix(f, 2, &mut rng)).collect();
            let rep_ok = check_rep_raw(&star, &l, &r).holds;
            let semi_ok = check_adm_poisson(&semidirect_raw(&star, &l, &r)).holds;
            assert_eq!(rep_ok, semi_ok);
        }
        let a = AdmPoissonAlgebra::new(star).unwrap();
        for rep in [adjoint_rep(&a), dual_rep(&adjoint_rep(&a))] {
            assert!(check_representation(&rep).holds);
            assert!(check_adm_poisson(&semidirect_raw(a.star(), rep.l(), rep.r())).holds);
        }
    }
}

#[test]
fn valid_representations_satisfy_the_consequence() {
    let f = gf5();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for star in valid_algebras(f, 2, 10, &mut rng) {
        let a = AdmPoissonAlgebra::new(star).unwrap();
        // scan small random (l, r) pairs and keep the valid ones
        let mut found = 0;
        for _ in 0..2000 {
            let l: Vec<Matrix> = (0..2).map(|_| random_matrix(f, 1, &mut rng)).collect();
            let r: Vec<Matrix> = (0..2).map(|_| random_matrix(f, 1, &mut rng)).collect();
            let rep = Representation::new_unchecked(a.clone(), 1, l, r).unwrap();
            if check_representation(&rep).holds {
                found += 1;
                assert!(check_rep_consequence(&rep).holds);
            }
        }
        assert!(found > 0);
        assert!(check_rep_consequence(&adjoint_rep(&a)).holds);
    }
}

#[test]
fn dual_rep_is_an_involution_and_preserves_validity() {
    let f = gf5();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for star in valid_algebras(f, 2, 20, &mut rng) {
        let a = AdmPoissonAlgebra::new(star).unwrap();
        let adj = adjoint_rep(&a);
        let d = dual_rep(&adj);
        assert!(check_representation(&d).holds);
        assert_eq!(dual_rep(&d), adj);
        let l: Vec<Matrix> = (0..2).map(|_| random_matrix(f, 3, &mut rng)).collect();
        let r: Vec<Matrix> = (0..2).map(|_| random_matrix(f, 3, &mut rng)).collect();
        let raw = Representation::new_unchecked(a, 3, l, r).unwrap();
        assert_eq!(dual_rep(&dual_rep(&raw)), raw);
    }
}

#[test]
fn poisson_rep_roundtrip() {
    let f = gf5();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for star in valid_algebras(f, 2, 10, &mut rng) {
        let a = AdmPoissonAlgebra::new(star).unwrap();
        let adj = adjoint_rep(&a);
        let prep = rep_to_poisson_rep(&adj);
        assert_eq!(poisson_rep_to_rep(&prep), adj);
        // L = L_∘ + ad and R = L_∘ − ad
        for i in 0..2 {
            assert_eq!(&prep.s_circ()[i] + &prep.s_bracket()[i], adj.l()[i]);
            assert_eq!(&prep.s_circ()[i] - &prep.s_bracket()[i], adj.r()[i]);
        }
    }
}
