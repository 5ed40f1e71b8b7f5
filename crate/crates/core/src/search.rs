//! Exhaustive and seeded random search over GF(p) coefficient spaces.
//!
//! A target fixes which coefficients are free and which predicate a
//! candidate must pass. Spaces up to the bound are enumerated in
//! lexicographic order of the coefficient vector (first coefficient most
//! significant); larger spaces are sampled from a seeded ChaCha stream.

use std::collections::HashSet;
use std::fmt::Write as _;

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cli::{adm_of, check_file, CheckOptions, Predicate};
use crate::error::{Error, Result};
use crate::format::{parse_file, print_file, AlgebraFile, NamedTensor};
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};
use crate::tensor::MulTensor;

/// 5^9.
pub const DEFAULT_BOUND: u128 = 1_953_125;

const CHUNK: u64 = 1 << 14;
const MARKER: &str = "# --- instance ";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Target {
    AdmPoisson,
    Poisson,
    AdmPybeSolution,
    PreAdmPoisson,
    OOperator,
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub target: Target,
    /// Ignored by targets that take their dimension from `base`.
    pub dim: usize,
    /// Ignored by targets with a `base` file, which fixes the field.
    pub prime: u64,
    /// The algebra (and representation) for `adm_pybe_solution` and `o_operator`.
    pub base: Option<AlgebraFile>,
    pub skew: bool,
    pub count: Option<usize>,
    pub seed: u64,
    pub samples: Option<u64>,
    pub nonzero_only: bool,
    pub bound: u128,
    /// Probability of a nonzero coefficient in random mode. When absent each
    /// sample draws its own density from `[0.1, 0.4)`.
    pub density: Option<f64>,
}

impl SearchSpec {
    pub fn new(target: Target, dim: usize, prime: u64) -> Self {
        SearchSpec {
            target,
            dim,
            prime,
            base: None,
            skew: false,
            count: None,
            seed: 0,
            samples: None,
            nonzero_only: false,
            bound: DEFAULT_BOUND,
            density: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub instances: Vec<AlgebraFile>,
    pub candidates: u64,
    pub exhaustive: bool,
}

impl SearchOutcome {
    /// Instances in the text format, each preceded by a marker line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, f) in self.instances.iter().enumerate() {
            let _ = writeln!(out, "{MARKER}{} ---", i + 1);
            out.push_str(&print_file(f));
        }
        let mode = if self.exhaustive {
            "exhaustive"
        } else {
            "sampled"
        };
        let _ = writeln!(
            out,
            "# {} instances, {} candidates, {mode}",
            self.instances.len(),
            self.candidates
        );
        out
    }
}

/// Splits rendered search output back into files.
pub fn parse_instances(text: &str) -> Result<Vec<AlgebraFile>> {
    let mut chunks: Vec<String> = Vec::new();
    for line in text.lines() {
        if line.starts_with(MARKER) {
            chunks.push(String::new());
        } else if let Some(c) = chunks.last_mut() {
            c.push_str(line);
            c.push('\n');
        }
    }
    chunks.iter().map(|c| parse_file(c)).collect()
}

type Assemble = Box<dyn Fn(&[Scalar]) -> AlgebraFile + Sync>;

/// The free coefficients of a target and how they assemble into a file.
struct Space {
    field: Field,
    ncoeff: usize,
    pred: Predicate,
    assemble: Assemble,
}

fn prime_field(f: Field) -> Result<Field> {
    match f {
        Field::Prime(_) => Ok(f),
        Field::Rational => Err(Error::Invalid("search needs a finite field".into())),
    }
}

fn space(spec: &SearchSpec) -> Result<Space> {
    let needs_base = matches!(spec.target, Target::AdmPybeSolution | Target::OOperator);
    if needs_base != spec.base.is_some() {
        return Err(Error::Invalid(if needs_base {
            "this target needs a base algebra file".into()
        } else {
            "this target takes no base algebra file".into()
        }));
    }
    if !needs_base && spec.dim == 0 {
        return Err(Error::Invalid("dimension must be positive".into()));
    }
    let n = spec.dim;
    Ok(match spec.target {
        Target::AdmPoisson => {
            let f = Field::prime(spec.prime)?;
            Space {
                field: f,
                ncoeff: n * n * n,
                pred: Predicate::AdmPoisson,
                assemble: Box::new(move |c| {
                    let star = MulTensor::from_coeffs(f, n, c.to_vec()).expect("sized");
                    AlgebraFile::new(f, n).with_op("star", star)
                }),
            }
        }
        Target::Poisson => {
            let f = Field::prime(spec.prime)?;
            let skew_pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            let sym_pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
            let nb = skew_pairs.len() * n;
            Space {
                field: f,
                ncoeff: nb + sym_pairs.len() * n,
                pred: Predicate::Poisson,
                assemble: Box::new(move |c| {
                    let mut b = MulTensor::zeros(f, n);
                    let mut o = MulTensor::zeros(f, n);
                    for (p, &(i, j)) in skew_pairs.iter().enumerate() {
                        for k in 0..n {
                            let v = &c[p * n + k];
                            b.set(i, j, k, v.clone());
                            b.set(j, i, k, -v);
                        }
                    }
                    for (p, &(i, j)) in sym_pairs.iter().enumerate() {
                        for k in 0..n {
                            let v = &c[nb + p * n + k];
                            o.set(i, j, k, v.clone());
                            o.set(j, i, k, v.clone());
                        }
                    }
                    AlgebraFile::new(f, n)
                        .with_op("bracket", b)
                        .with_op("circ", o)
                }),
            }
        }
        Target::PreAdmPoisson => {
            let f = Field::prime(spec.prime)?;
            let m = n * n * n;
            Space {
                field: f,
                ncoeff: 2 * m,
                pred: Predicate::PreAdm,
                assemble: Box::new(move |c| {
                    let s = MulTensor::from_coeffs(f, n, c[..m].to_vec()).expect("sized");
                    let p = MulTensor::from_coeffs(f, n, c[m..].to_vec()).expect("sized");
                    AlgebraFile::new(f, n).with_op("succ", s).with_op("prec", p)
                }),
            }
        }
        Target::AdmPybeSolution => {
            let base = spec.base.as_ref().expect("checked");
            let star = adm_of(base)?.into_star();
            let f = prime_field(star.field())?;
            let n = star.dim();
            let slots: Vec<(usize, usize)> = if spec.skew {
                (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .collect()
            } else {
                (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
            };
            let skew = spec.skew;
            Space {
                field: f,
                ncoeff: slots.len(),
                pred: Predicate::AdmPybe,
                assemble: Box::new(move |c| {
                    let mut r = Matrix::zeros(f, n, n);
                    for (v, &(i, j)) in c.iter().zip(&slots) {
                        r.set(i, j, v.clone());
                        if skew {
                            r.set(j, i, -v);
                        }
                    }
                    AlgebraFile::new(f, n)
                        .with_op("star", star.clone())
                        .with_tensor("r", NamedTensor::Rank2(r))
                }),
            }
        }
        Target::OOperator => {
            let base = spec.base.clone().expect("checked");
            let star = adm_of(&base)?.into_star();
            let f = prime_field(star.field())?;
            let n = star.dim();
            let (l, r) = (base.rep("l")?.clone(), base.rep("r")?.clone());
            let m = l.vdim;
            let seed = AlgebraFile::new(f, n)
                .with_op("star", star)
                .with_rep("l", l.mats, l.vdim)
                .with_rep("r", r.mats, r.vdim);
            Space {
                field: f,
                ncoeff: n * m,
                pred: Predicate::OOperator,
                assemble: Box::new(move |c| {
                    let theta = Matrix::from_rows(f, n, m, c.to_vec()).expect("sized");
                    seed.clone().with_map("theta", theta)
                }),
            }
        }
    })
}

fn digits(f: Field, p: u64, mut idx: u64, len: usize) -> Vec<Scalar> {
    let mut out = vec![f.zero(); len];
    for slot in out.iter_mut().rev() {
        *slot = f.element(idx % p);
        idx /= p;
    }
    out
}

fn accept(sp: &Space, coeffs: &[Scalar]) -> Option<AlgebraFile> {
    let file = (sp.assemble)(coeffs);
    match check_file(sp.pred, &file, CheckOptions::default()) {
        Ok(r) if r.holds => Some(file),
        _ => None,
    }
}

/// Runs a search. Exhaustive mode is deterministic; random mode is
/// deterministic for a fixed seed and drops repeated instances.
pub fn search(spec: &SearchSpec) -> Result<SearchOutcome> {
    let sp = space(spec)?;
    let p = sp.field.order().expect("finite field");
    let size = (p as u128)
        .checked_pow(sp.ncoeff as u32)
        .unwrap_or(u128::MAX);
    let want = spec.count.unwrap_or(usize::MAX);
    if size <= spec.bound && size <= u64::MAX as u128 {
        let size = size as u64;
        let start = u64::from(spec.nonzero_only);
        let mut instances = Vec::new();
        let mut candidates = 0;
        let mut lo = start;
        while lo < size && instances.len() < want {
            let hi = (lo + CHUNK).min(size);
            let hits: Vec<(u64, AlgebraFile)> = (lo..hi)
                .into_par_iter()
                .filter_map(|idx| {
                    accept(&sp, &digits(sp.field, p, idx, sp.ncoeff)).map(|f| (idx, f))
                })
                .collect();
            candidates = hi - start;
            for (idx, f) in hits {
                instances.push(f);
                if instances.len() == want {
                    candidates = idx + 1 - start;
                    break;
                }
            }
            lo = hi;
        }
        return Ok(SearchOutcome {
            instances,
            candidates,
            exhaustive: true,
        });
    }
    let total = spec.samples.ok_or_else(|| {
        Error::Invalid(format!(
            "space of {p}^{} candidates exceeds the exhaustive bound {}; pass a sample count",
            sp.ncoeff, spec.bound
        ))
    })?;
    if let Some(d) = spec.density {
        if !(0.0..=1.0).contains(&d) {
            return Err(Error::Invalid(format!("density {d} is not in [0, 1]")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut seen: HashSet<Vec<Scalar>> = HashSet::new();
    let mut instances = Vec::new();
    let mut drawn = 0;
    while drawn < total && instances.len() < want {
        let batch = (total - drawn).min(CHUNK);
        let cands: Vec<Vec<Scalar>> = (0..batch)
            .map(|_| {
                let d = spec.density.unwrap_or_else(|| rng.gen_range(0.1..0.4));
                (0..sp.ncoeff)
                    .map(|_| {
                        if rng.gen_bool(d) {
                            sp.field.element(rng.gen_range(1..p))
                        } else {
                            sp.field.zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let hits: Vec<(usize, AlgebraFile)> = cands
            .par_iter()
            .enumerate()
            .filter(|(_, c)| !(spec.nonzero_only && c.iter().all(Scalar::is_zero)))
            .filter_map(|(i, c)| accept(&sp, c).map(|f| (i, f)))
            .collect();
        for (i, f) in hits {
            if instances.len() == want {
                break;
            }
            if seen.insert(cands[i].clone()) {
                instances.push(f);
            }
        }
        drawn += batch;
    }
    Ok(SearchOutcome {
        instances,
        candidates: drawn,
        exhaustive: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dim_one_adm_poisson_is_everything() {
        // every one-dimensional product x*x = c x is commutative and associative
        let out = search(&SearchSpec::new(Target::AdmPoisson, 1, 5)).unwrap();
        assert!(out.exhaustive);
        assert_eq!((out.instances.len(), out.candidates), (5, 5));
    }

    #[test]
    fn nonzero_only_and_count() {
        let mut spec = SearchSpec::new(Target::AdmPoisson, 1, 7);
        spec.nonzero_only = true;
        spec.count = Some(2);
        let out = search(&spec).unwrap();
        assert_eq!(out.instances.len(), 2);
        assert_eq!(out.candidates, 2);
        assert!(out
            .instances
            .iter()
            .all(|f| !f.op("star").unwrap().is_zero()));
    }

    #[test]
    fn render_roundtrip() {
        let out = search(&SearchSpec::new(Target::PreAdmPoisson, 1, 5)).unwrap();
        assert_eq!(parse_instances(&out.render()).unwrap(), out.instances);
    }

    #[test]
    fn large_space_needs_samples() {
        let spec = SearchSpec::new(Target::PreAdmPoisson, 2, 5);
        assert!(matches!(search(&spec), Err(Error::Invalid(_))));
    }

    #[test]
    fn base_required() {
        let spec = SearchSpec::new(Target::OOperator, 1, 5);
        assert!(search(&spec).is_err());
    }
}
