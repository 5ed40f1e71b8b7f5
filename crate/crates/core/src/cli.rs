//! Command-line front end: `check`, `build` and `search` over the text format.
//!
//! Exit codes: 0 when the predicate holds or the construction succeeded,
//! 1 when the predicate fails, 2 on input or usage errors.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{
    check_adm_poisson, check_poisson, depolarize_raw, polarize_raw, AdmPoissonAlgebra,
    PoissonAlgebra,
};
use crate::bialgebra::{
    check_adm_bialgebra, check_poisson_bialgebra, merge_comultiplication, split_comultiplication,
    Comultiplication, PoissonComultiplicationPair,
};
use crate::error::{Error, Result};
use crate::format::{parse_file, print_file, AlgebraFile, NamedTensor};
use crate::matched::{
    bowtie, check_invariant_form, check_matched_pair, manin_double, standard_form, BilinearForm,
    FormRequirements, MatchedPairData,
};
use crate::o_operator::{
    canonical_solution, check_o_operator, check_pre_adm_poisson_raw, check_pre_poisson_raw,
    check_rota_baxter, induced_pre_from_o_operator, solution_from_o_operator, subadjacent_raw,
    OOperatorCandidate, PreAdmPoisson,
};
use crate::report::AxiomReport;
use crate::representation::{
    adjoint_rep, check_representation, dual_rep, semidirect, Representation,
};
use crate::search::{search, SearchSpec, Target, DEFAULT_BOUND};
use crate::tensor::MulTensor;
use crate::yang_baxter::{
    check_coboundary_condition, check_ybe, coboundary_alpha, cyclic_form_check,
    operator_form_check, AlgebraRef, CoboundaryCondition, RTensor, YbeKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    AdmPoisson,
    Poisson,
    Rep,
    MatchedPair,
    InvariantForm,
    Bialgebra,
    PoissonBialgebra,
    AdmPybe,
    Cybe,
    Aybe,
    Pybe,
    Con1,
    Eqv1,
    Eqv2,
    Eqv3,
    Cosp,
    Cosp2,
    OOperator,
    RotaBaxter,
    PreAdm,
    PrePoisson,
    OperatorForm,
    CyclicForm,
}

impl Predicate {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Polarize,
    Depolarize,
    Semidirect,
    Bowtie,
    ManinDouble,
    CoboundaryAlpha,
    Split,
    Merge,
    SolutionFromO,
    InducedPre,
    Subadjacent,
    CanonicalSolution,
    DualRep,
    AdjointRep,
}

/// Extra requirements for `invariant-form`.
#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    pub symmetric: bool,
    pub nondegenerate: bool,
}

/// The adm-Poisson operation: `star`, or `circ + bracket` when only the
/// polarized pair is present.
pub fn adm_of(file: &AlgebraFile) -> Result<AdmPoissonAlgebra> {
    if let Ok(star) = file.op("star") {
        return Ok(AdmPoissonAlgebra::new_unchecked(star.clone()));
    }
    match (file.op("bracket"), file.op("circ")) {
        (Ok(b), Ok(c)) => Ok(AdmPoissonAlgebra::new_unchecked(depolarize_raw(b, c)?)),
        _ => Err(Error::Invalid(
            "file has no op star (or bracket and circ)".into(),
        )),
    }
}

/// The Poisson pair: `bracket` and `circ`, or the polarization of `star`.
pub fn poisson_of(file: &AlgebraFile) -> Result<PoissonAlgebra> {
    match (file.op("bracket"), file.op("circ")) {
        (Ok(b), Ok(c)) => {
            if b.dim() != c.dim() {
                return Err(Error::dim(b.dim(), c.dim()));
            }
            Ok(PoissonAlgebra::new_unchecked(b.clone(), c.clone()))
        }
        _ => {
            let star = file
                .op("star")
                .map_err(|_| Error::Invalid("file has no ops bracket and circ (or star)".into()))?;
            let (b, c) = polarize_raw(star);
            Ok(PoissonAlgebra::new_unchecked(b, c))
        }
    }
}

fn r_of(file: &AlgebraFile) -> Result<RTensor> {
    RTensor::new(file.rank2("r")?.clone())
}

fn comult(file: &AlgebraFile, name: &str) -> Result<Comultiplication> {
    Ok(Comultiplication::new(file.rank3(name)?.clone()))
}

fn rep_of(file: &AlgebraFile, alg: AdmPoissonAlgebra, l: &str, r: &str) -> Result<Representation> {
    let (lf, rf) = (file.rep(l)?, file.rep(r)?);
    if lf.vdim != rf.vdim {
        return Err(Error::dim(lf.vdim, rf.vdim));
    }
    Representation::new_unchecked(alg, lf.vdim, lf.mats.clone(), rf.mats.clone())
}

fn o_candidate(file: &AlgebraFile) -> Result<OOperatorCandidate> {
    let rep = rep_of(file, adm_of(file)?, "l", "r")?;
    OOperatorCandidate::new(rep, file.map("theta")?.clone())
}

fn pre_ops(file: &AlgebraFile) -> Result<(&MulTensor, &MulTensor)> {
    let (s, p) = (file.op("succ")?, file.op("prec")?);
    if s.dim() != p.dim() {
        return Err(Error::dim(s.dim(), p.dim()));
    }
    Ok((s, p))
}

fn condition(which: CoboundaryCondition, file: &AlgebraFile) -> Result<AxiomReport> {
    check_coboundary_condition(&adm_of(file)?, &r_of(file)?, which)
}

/// Evaluates a predicate on the structures named in `file`.
pub fn check_file(pred: Predicate, file: &AlgebraFile, opts: CheckOptions) -> Result<AxiomReport> {
    use Predicate as P;
    match pred {
        P::AdmPoisson => Ok(check_adm_poisson(adm_of(file)?.star())),
        P::Poisson => {
            let p = poisson_of(file)?;
            check_poisson(p.bracket(), p.circ())
        }
        P::Rep => Ok(check_representation(&rep_of(
            file,
            adm_of(file)?,
            "l",
            "r",
        )?)),
        P::MatchedPair => {
            let (p1, p2) = (file.op("star1")?, file.op("star2")?);
            let mats = |n: &str| file.rep(n).map(|r| r.mats.clone());
            let mp = MatchedPairData::new(
                AdmPoissonAlgebra::new_unchecked(p1.clone()),
                AdmPoissonAlgebra::new_unchecked(p2.clone()),
                mats("l1")?,
                mats("r1")?,
                mats("l2")?,
                mats("r2")?,
            )?;
            Ok(check_matched_pair(&mp))
        }
        P::InvariantForm => {
            let form = BilinearForm::new(file.map("gram")?.clone())?;
            let req = FormRequirements {
                symmetric: opts.symmetric,
                nondegenerate: opts.nondegenerate,
            };
            check_invariant_form(&adm_of(file)?, &form, req)
        }
        P::Bialgebra => check_adm_bialgebra(&adm_of(file)?, &comult(file, "alpha")?),
        P::PoissonBialgebra => {
            let pair =
                PoissonComultiplicationPair::new(comult(file, "delta")?, comult(file, "Delta")?)?;
            check_poisson_bialgebra(&poisson_of(file)?, &pair)
        }
        P::AdmPybe => check_ybe(
            AlgebraRef::Adm(&adm_of(file)?),
            &r_of(file)?,
            YbeKind::AdmPybe,
        ),
        P::Cybe | P::Aybe | P::Pybe => {
            let kind = match pred {
                P::Cybe => YbeKind::Cybe,
                P::Aybe => YbeKind::Aybe,
                _ => YbeKind::Pybe,
            };
            check_ybe(AlgebraRef::Poisson(&poisson_of(file)?), &r_of(file)?, kind)
        }
        P::Con1 => condition(CoboundaryCondition::Con1, file),
        P::Eqv1 => condition(CoboundaryCondition::Eqv1, file),
        P::Eqv2 => condition(CoboundaryCondition::Eqv2, file),
        P::Eqv3 => condition(CoboundaryCondition::Eqv3, file),
        P::Cosp => condition(CoboundaryCondition::Cosp, file),
        P::Cosp2 => condition(CoboundaryCondition::Cosp2, file),
        P::OOperator => Ok(check_o_operator(&o_candidate(file)?)),
        P::RotaBaxter => check_rota_baxter(&adm_of(file)?, file.map("theta")?),
        P::PreAdm => {
            let (s, p) = pre_ops(file)?;
            check_pre_adm_poisson_raw(s, p)
        }
        P::PrePoisson => check_pre_poisson_raw(file.op("dot")?, file.op("star")?),
        P::OperatorForm => operator_form_check(&adm_of(file)?, &r_of(file)?),
        P::CyclicForm => cyclic_form_check(&adm_of(file)?, &r_of(file)?),
    }
}

fn with_rep(out: AlgebraFile, rep: &Representation) -> AlgebraFile {
    out.with_rep("l", rep.l().to_vec(), rep.vdim())
        .with_rep("r", rep.r().to_vec(), rep.vdim())
}

fn fresh(m: &MulTensor) -> AlgebraFile {
    AlgebraFile::new(m.field(), m.dim())
}

/// Runs a construction and returns the resulting structures as a new file.
pub fn build_file(cons: Construction, file: &AlgebraFile) -> Result<AlgebraFile> {
    use Construction as C;
    Ok(match cons {
        C::Polarize => {
            let star = file.op("star")?;
            let (b, c) = polarize_raw(star);
            fresh(star).with_op("bracket", b).with_op("circ", c)
        }
        C::Depolarize => {
            let star = adm_of(file)?.into_star();
            fresh(&star).with_op("star", star)
        }
        C::Semidirect => {
            let star = semidirect(&rep_of(file, adm_of(file)?, "l", "r")?).into_star();
            fresh(&star).with_op("star", star)
        }
        C::Bowtie => {
            let mats = |n: &str| file.rep(n).map(|r| r.mats.clone());
            let mp = MatchedPairData::new(
                AdmPoissonAlgebra::new_unchecked(file.op("star1")?.clone()),
                AdmPoissonAlgebra::new_unchecked(file.op("star2")?.clone()),
                mats("l1")?,
                mats("r1")?,
                mats("l2")?,
                mats("r2")?,
            )?;
            let star = bowtie(&mp).into_star();
            fresh(&star).with_op("star", star)
        }
        C::ManinDouble => {
            let p = adm_of(file)?;
            let pstar = AdmPoissonAlgebra::new_unchecked(file.op("pstar")?.clone());
            let (double, _) = manin_double(&p, &pstar)?;
            let gram = standard_form(p.field(), p.dim()).gram().clone();
            let star = double.into_star();
            fresh(&star).with_op("star", star).with_map("gram", gram)
        }
        C::CoboundaryAlpha => {
            let a = adm_of(file)?;
            let alpha = coboundary_alpha(&a, &r_of(file)?)?;
            let star = a.into_star();
            fresh(&star)
                .with_op("star", star)
                .with_tensor("alpha", NamedTensor::Rank3(alpha.tensor().clone()))
        }
        C::Split => {
            let pair = split_comultiplication(&comult(file, "alpha")?);
            let p = poisson_of(file)?;
            fresh(p.bracket())
                .with_op("bracket", p.bracket().clone())
                .with_op("circ", p.circ().clone())
                .with_tensor("delta", NamedTensor::Rank3(pair.delta().tensor().clone()))
                .with_tensor(
                    "Delta",
                    NamedTensor::Rank3(pair.big_delta().tensor().clone()),
                )
        }
        C::Merge => {
            let pair =
                PoissonComultiplicationPair::new(comult(file, "delta")?, comult(file, "Delta")?)?;
            let alpha = merge_comultiplication(&pair);
            let star = adm_of(file)?.into_star();
            fresh(&star)
                .with_op("star", star)
                .with_tensor("alpha", NamedTensor::Rank3(alpha.tensor().clone()))
        }
        C::SolutionFromO => {
            let (big, r) = solution_from_o_operator(&o_candidate(file)?);
            let star = big.into_star();
            fresh(&star)
                .with_op("star", star)
                .with_tensor("r", NamedTensor::Rank2(r.coeff().clone()))
        }
        C::InducedPre => {
            let pre = induced_pre_from_o_operator(&o_candidate(file)?)?;
            fresh(pre.succ())
                .with_op("succ", pre.succ().clone())
                .with_op("prec", pre.prec().clone())
        }
        C::Subadjacent => {
            let (s, p) = pre_ops(file)?;
            let star = subadjacent_raw(s, p)?;
            fresh(&star).with_op("star", star)
        }
        C::CanonicalSolution => {
            let (s, p) = pre_ops(file)?;
            let (big, r) = canonical_solution(&PreAdmPoisson::new(s.clone(), p.clone())?)?;
            let star = big.into_star();
            fresh(&star)
                .with_op("star", star)
                .with_tensor("r", NamedTensor::Rank2(r.coeff().clone()))
        }
        C::DualRep => {
            let a = adm_of(file)?;
            let d = dual_rep(&rep_of(file, a.clone(), "l", "r")?);
            let star = a.into_star();
            with_rep(fresh(&star).with_op("star", star), &d)
        }
        C::AdjointRep => {
            let a = adm_of(file)?;
            let rep = adjoint_rep(&a);
            let star = a.into_star();
            with_rep(fresh(&star).with_op("star", star), &rep)
        }
    })
}

/// The OK/FAIL line for a report.
pub fn report_line(pred: &str, dim: usize, report: &AxiomReport) -> String {
    match &report.witness {
        Some(w) => format!("FAIL {w}"),
        None => format!(
            "OK {pred} (dim {dim}, {} {} checked)",
            report.checked, report.unit
        ),
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "admpoisson",
    version,
    about = "Check and build admissible Poisson structures in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide a predicate on the structures in FILE ("-" reads stdin)
    Check {
        predicate: Predicate,
        file: PathBuf,
        /// invariant-form: also require a symmetric form
        #[arg(long)]
        symmetric: bool,
        /// invariant-form: also require a nondegenerate form
        #[arg(long)]
        nondegenerate: bool,
    },
    /// Run a construction and print the result in the same format
    Build {
        construction: Construction,
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate or sample structures over GF(p)
    Search {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// prime p of GF(p)
        #[arg(long, default_value_t = 5)]
        field: u64,
        /// base algebra (and rep) for adm_pybe_solution and o_operator
        #[arg(long)]
        algebra: Option<PathBuf>,
        /// only skew-symmetric r (adm_pybe_solution)
        #[arg(long)]
        skew: bool,
        /// stop after this many instances
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// number of random candidates when the space exceeds the bound
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long)]
        nonzero_only: bool,
        /// largest space enumerated exhaustively
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u128,
        /// probability of a nonzero coefficient in random mode
        #[arg(long)]
        density: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_input(path: &Path) -> std::result::Result<String, String> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("stdin: {e}"))?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> std::result::Result<AlgebraFile, String> {
    let text = read_input(path)?;
    parse_file(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> std::result::Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = stdout.write_all(text.as_bytes());
                0
            } else {
                let _ = stderr.write_all(text.as_bytes());
                2
            };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn dispatch(cmd: Command, stdout: &mut dyn Write) -> std::result::Result<i32, String> {
    match cmd {
        Command::Check {
            predicate,
            file,
            symmetric,
            nondegenerate,
        } => {
            let f = load(&file)?;
            let report = check_file(
                predicate,
                &f,
                CheckOptions {
                    symmetric,
                    nondegenerate,
                },
            )
            .map_err(|e| e.to_string())?;
            writeln!(stdout, "{}", report_line(&predicate.name(), f.dim, &report))
                .map_err(|e| e.to_string())?;
            Ok(if report.holds { 0 } else { 1 })
        }
        Command::Build {
            construction,
            file,
            out,
        } => {
            let f = load(&file)?;
            let built = build_file(construction, &f).map_err(|e| e.to_string())?;
            emit(&print_file(&built), out.as_deref(), stdout)?;
            Ok(0)
        }
        Command::Search {
            target,
            dim,
            field,
            algebra,
            skew,
            count,
            seed,
            samples,
            nonzero_only,
            bound,
            density,
            out,
        } => {
            let base = algebra.as_deref().map(load).transpose()?;
            let spec = SearchSpec {
                target,
                dim,
                prime: field,
                base,
                skew,
                count,
                seed,
                samples,
                nonzero_only,
                bound,
                density,
            };
            let found = search(&spec).map_err(|e| e.to_string())?;
            emit(&found.render(), out.as_deref(), stdout)?;
            Ok(0)
        }
    }
}
