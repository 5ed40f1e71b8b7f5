mod common;

use std::sync::OnceLock;

use admpoisson::algebra::{
    check_adm_poisson, check_poisson, depolarize_raw, polarize_raw, AdmPoissonAlgebra,
};
use admpoisson::bialgebra::{
    check_adm_bialgebra, merge_comultiplication, split_comultiplication, Comultiplication,
};
use admpoisson::format::{parse_file, print_file, AlgebraFile, NamedTensor};
use admpoisson::o_operator::{
    canonical_solution, check_pre_adm_poisson_raw, subadjacent_raw, PreAdmPoisson,
};
use admpoisson::representation::{adjoint_rep, check_representation, dual_rep, semidirect};
use admpoisson::search::{search, SearchSpec, Target};
use admpoisson::yang_baxter::{check_ybe, coboundary_alpha, AlgebraRef, YbeKind};
use admpoisson::{Field, Matrix, MulTensor, Scalar, Tensor3};
use common::{gf5, skew2};
use proptest::prelude::*;

fn scalars(f: Field, len: usize) -> impl Strategy<Value = Vec<Scalar>> {
    let elem = match f.order() {
        Some(p) => (0..p).prop_map(move |e| f.element(e)).boxed(),
        None => (-6i64..=6, 1i64..=4)
            .prop_map(move |(n, d)| f.ratio(n, d).unwrap())
            .boxed(),
    };
    prop::collection::vec(elem, len)
}

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(gf5()),
        Just(Field::prime(7).unwrap())
    ]
}

fn tensor(f: Field, n: usize) -> impl Strategy<Value = MulTensor> {
    scalars(f, n * n * n).prop_map(move |c| MulTensor::from_coeffs(f, n, c).unwrap())
}

fn matrix(f: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    scalars(f, rows * cols).prop_map(move |c| Matrix::from_rows(f, rows, cols, c).unwrap())
}

fn file() -> impl Strategy<Value = AlgebraFile> {
    (field(), 1usize..=3, 1usize..=2).prop_flat_map(|(f, n, v)| {
        (
            tensor(f, n),
            tensor(f, n + 1),
            matrix(f, n, n),
            scalars(f, n * n * n),
            prop::collection::vec(matrix(f, v, v), n),
            matrix(f, n, n),
        )
            .prop_map(move |(star, wide, r, t3, rep, theta)| {
                AlgebraFile::new(f, n)
                    .with_op("star", star)
                    .with_op("wide", wide)
                    .with_tensor("r", NamedTensor::Rank2(r))
                    .with_tensor(
                        "alpha",
                        NamedTensor::Rank3(Tensor3::from_coeffs(f, n, t3).unwrap()),
                    )
                    .with_rep("l", rep, v)
                    .with_map("theta", theta)
            })
    })
}

/// Every adm-Poisson algebra of dimension 2 over GF(5).
fn catalog() -> &'static [AdmPoissonAlgebra] {
    static CATALOG: OnceLock<Vec<AdmPoissonAlgebra>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        search(&SearchSpec::new(Target::AdmPoisson, 2, 5))
            .unwrap()
            .instances
            .iter()
            .map(|i| AdmPoissonAlgebra::new(i.op("star").unwrap().clone()).unwrap())
            .collect()
    })
}

/// A sample of nonzero pre-adm-Poisson algebras of dimension 2 over GF(5).
fn pre_sample() -> &'static [PreAdmPoisson] {
    static PRE: OnceLock<Vec<PreAdmPoisson>> = OnceLock::new();
    PRE.get_or_init(|| {
        let mut spec = SearchSpec::new(Target::PreAdmPoisson, 2, 5);
        spec.samples = Some(40_000);
        spec.seed = 3;
        spec.nonzero_only = true;
        search(&spec)
            .unwrap()
            .instances
            .iter()
            .map(|i| {
                PreAdmPoisson::new(i.op("succ").unwrap().clone(), i.op("prec").unwrap().clone())
                    .unwrap()
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_parse_roundtrip(f in file()) {
        let text = print_file(&f);
        let back = parse_file(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(print_file(&back), text);
    }

    #[test]
    fn polarization_is_invertible((f, m) in field().prop_flat_map(|f| (Just(f), tensor(f, 2)))) {
        let (b, c) = polarize_raw(&m);
        prop_assert_eq!(b.opposite(), b.scale(&-&f.one()));
        prop_assert_eq!(c.opposite(), c.clone());
        prop_assert_eq!(depolarize_raw(&b, &c).unwrap(), m);
    }

    #[test]
    fn c1_iff_polarization_is_poisson(m in tensor(gf5(), 2)) {
        let (b, c) = polarize_raw(&m);
        prop_assert_eq!(check_adm_poisson(&m).holds, check_poisson(&b, &c).unwrap().holds);
    }

    #[test]
    fn split_merge_roundtrip(c in scalars(Field::Rational, 27)) {
        let delta = Comultiplication::new(Tensor3::from_coeffs(Field::Rational, 3, c).unwrap());
        let pair = split_comultiplication(&delta);
        prop_assert_eq!(merge_comultiplication(&pair), delta);
    }

    #[test]
    fn adjoint_and_dual_reps(i in 0usize..769) {
        let a = &catalog()[i];
        let adj = adjoint_rep(a);
        prop_assert!(check_representation(&adj).holds);
        let dual = dual_rep(&adj);
        prop_assert!(check_representation(&dual).holds);
        prop_assert!(check_representation(&dual_rep(&dual)).holds);
        prop_assert!(check_adm_poisson(semidirect(&dual).star()).holds);
    }

    #[test]
    fn skew_solutions_give_bialgebras(i in 0usize..769, t in 1u64..5) {
        let a = &catalog()[i];
        let r = skew2(gf5(), t);
        if check_ybe(AlgebraRef::Adm(a), &r, YbeKind::AdmPybe).unwrap().holds {
            let delta = coboundary_alpha(a, &r).unwrap();
            prop_assert!(check_adm_bialgebra(a, &delta).unwrap().holds);
        }
    }

    #[test]
    fn pre_algebras_yield_solutions(i in any::<prop::sample::Index>()) {
        let pre = i.get(pre_sample());
        prop_assert!(check_pre_adm_poisson_raw(pre.succ(), pre.prec()).unwrap().holds);
        let sub = subadjacent_raw(pre.succ(), pre.prec()).unwrap();
        prop_assert!(check_adm_poisson(&sub).holds);
        let (double, r) = canonical_solution(pre).unwrap();
        prop_assert!(check_ybe(AlgebraRef::Adm(&double), &r, YbeKind::AdmPybe).unwrap().holds);
        prop_assert!(r.is_skew());
    }
}

#[test]
fn catalog_size() {
    assert_eq!(catalog().len(), 769);
    assert!(!pre_sample().is_empty());
}
