#![allow(dead_code)]

use admpoisson::algebra::{check_adm_poisson, AdmPoissonAlgebra};
use admpoisson::yang_baxter::RTensor;
use admpoisson::{Field, Matrix, MulTensor, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn gf5() -> Field {
    Field::prime(5).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random field element, zero with probability `1 - density`.
pub fn sparse(f: Field, rng: &mut ChaCha8Rng, density: f64) -> Scalar {
    if !rng.gen_bool(density) {
        return f.zero();
    }
    match f.order() {
        Some(p) => f.element(rng.gen_range(1..p)),
        None => f.int(rng.gen_range(-4..=4)),
    }
}

pub fn random_matrix(
    f: Field,
    rows: usize,
    cols: usize,
    rng: &mut ChaCha8Rng,
    density: f64,
) -> Matrix {
    let e = (0..rows * cols).map(|_| sparse(f, rng, density)).collect();
    Matrix::from_rows(f, rows, cols, e).unwrap()
}

pub fn random_tensor(f: Field, n: usize, rng: &mut ChaCha8Rng, density: f64) -> MulTensor {
    MulTensor::from_fn(f, n, |_, _, _| sparse(f, rng, density))
}

pub fn valid_algebra(f: Field, n: usize, rng: &mut ChaCha8Rng, density: f64) -> AdmPoissonAlgebra {
    loop {
        let m = random_tensor(f, n, rng, density);
        if check_adm_poisson(&m).holds {
            return AdmPoissonAlgebra::new(m).unwrap();
        }
    }
}

pub fn random_r(f: Field, n: usize, rng: &mut ChaCha8Rng, density: f64) -> RTensor {
    RTensor::new(random_matrix(f, n, n, rng, density)).unwrap()
}

/// `r = t (e1⊗e2 − e2⊗e1)` at dim 2.
pub fn skew2(f: Field, t: u64) -> RTensor {
    let mut c = Matrix::zeros(f, 2, 2);
    c.set(0, 1, f.element(t));
    c.set(1, 0, -&f.element(t));
    RTensor::new(c).unwrap()
}

/// Every `r` at dim 2 over the field, in lexicographic coefficient order.
pub fn all_r2(f: Field) -> Vec<RTensor> {
    let p = f.order().unwrap();
    (0..p.pow(4))
        .map(|code| {
            let e = (0..4).map(|k| f.element(code / p.pow(k) % p)).collect();
            RTensor::new(Matrix::from_rows(f, 2, 2, e).unwrap()).unwrap()
        })
        .collect()
}
