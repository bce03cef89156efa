use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use latticehom::acceptance::{run_criterion, Status, CRITERIA};
use latticehom::config::Guards;
use latticehom::error::{Error, Result};
use latticehom::homology::{betti_top, check_beta_basis, check_wh_basis, ribbon_basis_beta, ribbon_basis_wh};
use latticehom::io::{
    basis_json, class_function_json, decomposition_csv, decomposition_rows, summary_json, BasisElementJson,
    ClassValueJson, StabilityJson,
};
use latticehom::lattices::{boolean_lattice_with, d_divisible_boolean, lattice_of_flats_with, partition_lattice_with};
use latticehom::matroid::{Matroid, MatroidJson};
use latticehom::partition::IntPartition;
use latticehom::poset::{GradedPoset, RankSet};
use latticehom::repstab::classfn::decompose_with;
use latticehom::repstab::modules::{character_alpha_with, character_beta_with};
use latticehom::repstab::{character_wh, stability_scan, ClassFunction, Family, IrrepDecomposition};
use latticehom::shelling::{AtomOrdering, Shelling};
use latticehom::Rational;

#[derive(Parser)]
#[command(name = "latticehom", version, about = "Ribbon homology bases and stability scans for geometric lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Export the ribbon basis of β_S or WH_S as JSON.
    Basis(Job),
    /// Betti numbers of the rank selection, with the basis size.
    Betti(Job),
    /// Character values by cycle type.
    Character(Job),
    /// Irreducible decompositions over a range of n.
    Decompose(Job),
    /// Certify where the padded decompositions stabilize.
    StabilityScan(Job),
    /// Run the acceptance suite.
    VerifyAll(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Module {
    Alpha,
    Beta,
    Whitney,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct Common {
    /// Write the artifact here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    element_cap: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    groupsum_cap: Option<u64>,
}

#[derive(Args, Clone)]
struct Job {
    /// boolean, partition, divisible:d, or matroid:<file.json>.
    #[arg(long)]
    family: String,
    /// Comma list of ranks; empty for ∅.
    #[arg(long = "S", default_value = "")]
    s: String,
    /// A single n or an inclusive range a..b.
    #[arg(long, default_value = "0")]
    n: String,
    /// `natural` or a comma list of 1-based atom numbers.
    #[arg(long, default_value = "natural")]
    atom_order: String,
    #[arg(long, value_enum, default_value = "beta")]
    module: Module,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Override the predicted stable range for stability-scan.
    #[arg(long)]
    bound: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct VerifyArgs {
    /// Run only these criteria (comma list).
    #[arg(long, value_delimiter = ',')]
    criteria: Vec<u32>,
    #[command(flatten)]
    common: Common,
}

enum Source {
    Family(Family),
    Matroid(Matroid),
}

fn parse_source(text: &str) -> Result<Source> {
    if let Some(path) = text.strip_prefix("matroid:") {
        let j: MatroidJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        return Ok(Source::Matroid(Matroid::from_json(&j)?));
    }
    Ok(Source::Family(Family::parse(text)?))
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidInput(format!("n must be k or a..b, got {text:?}"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let k = text.trim().parse().map_err(|_| bad())?;
            (k, k)
        }
    };
    if a > b {
        return Err(Error::InvalidInput(format!("empty range {text}")));
    }
    Ok((a, b))
}

fn guards(c: &Common) -> Guards {
    let mut g = Guards::default();
    if let Some(e) = c.element_cap {
        g.element_cap = e as usize;
    }
    if let Some(s) = c.groupsum_cap {
        g.groupsum_cap = s.into();
    }
    g
}

fn lattice(src: &Source, n: usize, g: &Guards) -> Result<GradedPoset> {
    match src {
        Source::Family(Family::Boolean) => boolean_lattice_with(n, g),
        Source::Family(Family::Partition) => partition_lattice_with(n, g),
        Source::Family(Family::DDivisible(d)) => d_divisible_boolean(n, *d),
        Source::Matroid(m) => lattice_of_flats_with(m, g),
    }
}

fn family_of(src: &Source) -> Result<Family> {
    match src {
        Source::Family(f) => Ok(*f),
        Source::Matroid(_) => Err(Error::NoAction),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => Ok(std::fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

#[derive(Serialize)]
struct BasisOutput {
    family: String,
    n: usize,
    s: Vec<usize>,
    module: &'static str,
    betti: usize,
    size: usize,
    elements: Vec<BasisElementJson>,
}

fn single_n(job: &Job) -> Result<usize> {
    let (a, b) = parse_range(&job.n)?;
    if a != b {
        return Err(Error::InvalidInput("this command takes a single n".into()));
    }
    Ok(a)
}

fn module_name(m: Module) -> &'static str {
    match m {
        Module::Alpha => "alpha",
        Module::Beta => "beta",
        Module::Whitney => "whitney",
    }
}

fn source_name(src: &Source) -> String {
    match src {
        Source::Family(f) => f.name(),
        Source::Matroid(_) => "matroid".into(),
    }
}

fn run_basis(job: &Job) -> Result<String> {
    let g = guards(&job.common);
    let src = parse_source(&job.family)?;
    let s = RankSet::parse(&job.s)?;
    let n = single_n(job)?;
    let l = lattice(&src, n, &g)?;
    let sh = Shelling::new(&l, AtomOrdering::parse(&l, &job.atom_order)?)?;
    let (basis, betti) = match job.module {
        Module::Whitney => (ribbon_basis_wh(&sh, &s)?, check_wh_basis(&sh, &s)?.betti),
        Module::Beta if s.is_empty() => (ribbon_basis_beta(&sh, &s)?, 1),
        Module::Beta => (ribbon_basis_beta(&sh, &s)?, check_beta_basis(&sh, &s)?.betti),
        Module::Alpha => return Err(Error::InvalidInput("basis is defined for beta and whitney".into())),
    };
    pretty(&BasisOutput {
        family: source_name(&src),
        n,
        s: s.as_slice().to_vec(),
        module: module_name(job.module),
        betti,
        size: basis.len(),
        elements: basis_json(&l, &basis),
    })
}

#[derive(Serialize)]
struct BettiRow {
    n: usize,
    betti: usize,
    basis_size: usize,
}

fn run_betti(job: &Job) -> Result<String> {
    let g = guards(&job.common);
    let src = parse_source(&job.family)?;
    let s = RankSet::parse(&job.s)?;
    let (a, b) = parse_range(&job.n)?;
    let mut rows = Vec::new();
    for n in a..=b {
        if let Source::Family(f) = &src {
            if f.rank(n).is_none() {
                continue;
            }
        }
        let l = lattice(&src, n, &g)?;
        s.validate(l.rank())?;
        let sh = Shelling::new(&l, AtomOrdering::parse(&l, &job.atom_order)?)?;
        rows.push(BettiRow {
            n,
            betti: betti_top(&l, &s)?,
            basis_size: sh.standard_fillings(&s)?.len(),
        });
    }
    match job.format {
        Format::Json => pretty(&rows),
        Format::Csv => Ok(rows.iter().fold(String::from("n,betti,basis_size\n"), |acc, r| {
            acc + &format!("{},{},{}\n", r.n, r.betti, r.basis_size)
        })),
    }
}

fn cache_path(module: Module, family: Family, s: &RankSet, n: usize) -> Option<PathBuf> {
    let dir = std::env::var_os("LATTICEHOM_CACHE")?;
    let set: Vec<String> = s.as_slice().iter().map(usize::to_string).collect();
    let name = format!("{}-{}-S{}-n{n}.json", module_name(module), family.name().replace(':', "_"), set.join("_"));
    Some(Path::new(&dir).join(name))
}

fn read_cached(path: &Path, n: usize) -> Option<ClassFunction> {
    let rows: Vec<ClassValueJson> = serde_json::from_str(&std::fs::read_to_string(path).ok()?).ok()?;
    let mut values = BTreeMap::new();
    for r in rows {
        let parts: Vec<usize> = r.cycle_type.split(',').map(|t| t.trim().parse().ok()).collect::<Option<_>>()?;
        values.insert(IntPartition::new(parts), Rational::from_str(&r.value).ok()?);
    }
    let chi = ClassFunction::from_fn(n, |rho| values.get(rho).cloned().unwrap_or_default());
    (values.len() == chi.values.len()).then_some(chi)
}

fn character(module: Module, family: Family, s: &RankSet, n: usize, g: &Guards) -> Result<ClassFunction> {
    let path = cache_path(module, family, s, n);
    if let Some(chi) = path.as_deref().and_then(|p| read_cached(p, n)) {
        return Ok(chi);
    }
    let chi = match module {
        Module::Alpha if family.valid(s, n) => character_alpha_with(family, s, n, g)?,
        Module::Alpha => ClassFunction::zero(n),
        Module::Beta => character_beta_with(family, s, n, g)?,
        Module::Whitney => character_wh(family, s, n)?,
    };
    if let Some(p) = path {
        if let Some(dir) = p.parent() {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(&p, serde_json::to_string(&class_function_json(&chi))?)?;
    }
    Ok(chi)
}

#[derive(Serialize)]
struct CharacterOutput {
    n: usize,
    values: Vec<ClassValueJson>,
}

fn run_character(job: &Job) -> Result<String> {
    let g = guards(&job.common);
    let family = family_of(&parse_source(&job.family)?)?;
    let s = RankSet::parse(&job.s)?;
    let (a, b) = parse_range(&job.n)?;
    let out: Vec<CharacterOutput> = (a..=b)
        .map(|n| {
            Ok(CharacterOutput {
                n,
                values: class_function_json(&character(job.module, family, &s, n, &g)?),
            })
        })
        .collect::<Result<_>>()?;
    pretty(&out)
}

fn decompositions(job: &Job, g: &Guards) -> Result<(Family, RankSet, BTreeMap<usize, IrrepDecomposition>)> {
    use rayon::prelude::*;
    let family = family_of(&parse_source(&job.family)?)?;
    let s = RankSet::parse(&job.s)?;
    let (a, b) = parse_range(&job.n)?;
    let decs: Vec<Result<(usize, IrrepDecomposition)>> = (a..=b)
        .into_par_iter()
        .map(|n| Ok((n, decompose_with(&character(job.module, family, &s, n, g)?, g)?)))
        .collect();
    Ok((family, s, decs.into_iter().collect::<Result<_>>()?))
}

fn run_decompose(job: &Job) -> Result<String> {
    let g = guards(&job.common);
    let (_, _, decs) = decompositions(job, &g)?;
    match job.format {
        Format::Json => pretty(&decomposition_rows(&decs)),
        Format::Csv => Ok(decomposition_csv(&decs)),
    }
}

#[derive(Serialize)]
struct ScanOutput {
    family: String,
    s: Vec<usize>,
    module: &'static str,
    report: StabilityJson,
}

fn predicted_bound(module: Module, family: Family, s: &RankSet) -> usize {
    let k = match family {
        Family::Boolean => 2,
        Family::Partition => 4,
        Family::DDivisible(d) => 2 * d,
    };
    match module {
        Module::Alpha => k * s.max(),
        _ => (k * s.max() + 1).saturating_sub(s.len()),
    }
}

fn run_scan(job: &Job) -> Result<String> {
    let g = guards(&job.common);
    let (family, s, decs) = decompositions(job, &g)?;
    let bound = job.bound.unwrap_or_else(|| predicted_bound(job.module, family, &s));
    let r = stability_scan(&decs, bound);
    pretty(&ScanOutput {
        family: family.name(),
        s: s.as_slice().to_vec(),
        module: module_name(job.module),
        report: (&r).into(),
    })
}

fn run_verify(v: &VerifyArgs) -> Result<(String, bool)> {
    let g = guards(&v.common);
    for id in &v.criteria {
        if !CRITERIA.iter().any(|(i, _)| i == id) {
            return Err(Error::InvalidInput(format!("no criterion {id}")));
        }
    }
    let mut results = Vec::new();
    for (id, _) in CRITERIA {
        if v.criteria.is_empty() || v.criteria.contains(&id) {
            let r = run_criterion(id, &g);
            eprintln!("{}", r.line());
            results.push(r);
        }
    }
    let ok = results.iter().all(|r| r.status == Status::Pass);
    Ok((summary_json(&results)? + "\n", ok))
}

fn run(cli: &Cli) -> Result<bool> {
    let common = match &cli.command {
        Command::VerifyAll(v) => &v.common,
        Command::Basis(j) | Command::Betti(j) | Command::Character(j) | Command::Decompose(j) | Command::StabilityScan(j) => &j.common,
    };
    if let Some(t) = common.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
            .map_err(|e| Error::InvalidInput(e.to_string()))?;
    }
    let (text, ok) = match &cli.command {
        Command::Basis(j) => (run_basis(j)?, true),
        Command::Betti(j) => (run_betti(j)?, true),
        Command::Character(j) => (run_character(j)?, true),
        Command::Decompose(j) => (run_decompose(j)?, true),
        Command::StabilityScan(j) => (run_scan(j)?, true),
        Command::VerifyAll(v) => run_verify(v)?,
    };
    emit(&common.out, &text)?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let j = serde_json::json!({ "error": e.kind(), "message": e.to_string() });
            eprintln!("{j}");
            ExitCode::from(2)
        }
    }
}
