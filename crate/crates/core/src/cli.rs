//! Command-line front end. The binary only forwards to [`run`].
//!
//! Exit codes: 0 success, 1 a cross-check disagreed, 2 invalid system,
//! 3 unreadable or malformed input, 4 usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::certify::{certify, CertificationReport, CertifyOptions};
use crate::corpus::{generate_corpus, CorpusParams, SystemSpec};
use crate::error::Error;
use crate::series::{mirror_map, series_f, series_g, FormIndex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

/// Environment variable capping the worker pool for `cross-check`.
pub const THREADS_VAR: &str = "RATIOCERT_THREADS";

#[derive(Parser, Debug)]
#[command(name = "ratiocert", version, about = "Exact integrality certificates for factorial ratios and mirror maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Budget {
    /// Total-degree cap for F, G and exp(G/F)
    #[arg(long, default_value_t = 8)]
    cap: u64,
    /// Box bound P for the hypergeometric series
    #[arg(long, default_value_t = 6)]
    pbox: i64,
    /// Box bound for the direct E(m) scan
    #[arg(long, default_value_t = 8)]
    scan_bound: u64,
    /// Include wall-clock timings in the report (breaks byte determinism)
    #[arg(long)]
    timings: bool,
}

impl Budget {
    fn options(&self) -> CertifyOptions {
        CertifyOptions {
            cap: self.cap,
            pbox: self.pbox,
            scan_bound: self.scan_bound,
            timings: self.timings,
            ..CertifyOptions::default()
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a system spec and list every violated hypothesis
    Validate { spec: PathBuf },
    /// Run every criterion and cross-check on one system
    Certify {
        spec: PathBuf,
        #[command(flatten)]
        budget: Budget,
        /// Write the JSON report here instead of stdout
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print a series in canonical text form
    Series {
        spec: PathBuf,
        /// F, GC<j>, GD<k>, mirror (= mirror-C1), mirror-C<j>, mirror-D<k>
        #[arg(long, default_value = "F")]
        which: String,
        #[arg(long, default_value_t = 8)]
        cap: u64,
    },
    /// Generate a seeded corpus of valid systems
    Corpus {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        max_r: usize,
        #[arg(long, default_value_t = 3)]
        max_forms: usize,
        #[arg(long, default_value_t = 3)]
        max_coeff: i64,
        /// Write the corpus here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify every system of a corpus file in parallel
    CrossCheck {
        corpus: PathBuf,
        #[command(flatten)]
        budget: Budget,
        /// Write all reports as a JSON array here
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

/// Which series `cmd series` prints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesChoice {
    F,
    G(FormIndex),
    Mirror(FormIndex),
}

impl std::str::FromStr for SeriesChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("f") {
            return Ok(SeriesChoice::F);
        }
        if s.eq_ignore_ascii_case("mirror") {
            return Ok(SeriesChoice::Mirror(FormIndex::C(1)));
        }
        if let Some(rest) = s.strip_prefix("mirror-").or_else(|| s.strip_prefix("mirror")) {
            return rest.parse().map(SeriesChoice::Mirror);
        }
        if let Some(rest) = s.strip_prefix('G').or_else(|| s.strip_prefix('g')) {
            return rest.parse().map(SeriesChoice::G);
        }
        Err(format!("unknown series {s:?}; expected F, GC<j>, GD<k> or mirror[-C<j>|-D<k>]"))
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Invalid(_) => EXIT_INVALID,
            Error::IndexOutOfRange { .. } | Error::LogIndexOutOfRange { .. } | Error::Precondition(_) => EXIT_USAGE,
            _ => EXIT_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("malformed JSON in {}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str, path: Option<&Path>) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::new(EXIT_INPUT, format!("cannot write {}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::new(EXIT_INPUT, e.to_string())),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn cmd_validate(spec: &Path, out: &mut dyn Write) -> Outcome {
    let spec: SystemSpec = read_json(spec)?;
    match spec.to_system() {
        Ok(sys) => {
            let _ = writeln!(out, "valid: r={} J={} K={}", sys.r(), sys.j_count(), sys.k_count());
            Ok(EXIT_OK)
        }
        Err(Error::Invalid(violations)) => {
            let mut msg = String::from("invalid system:");
            for v in &violations {
                msg.push_str(&format!("\n  {v}"));
            }
            Err(Failure::new(EXIT_INVALID, msg))
        }
        Err(e) => Err(e.into()),
    }
}

fn summary_line(rep: &CertificationReport) -> String {
    format!(
        "{}: landau={} delaygue={} hollow={} unique={} min_phi={} agree={}",
        rep.label.as_deref().unwrap_or("-"),
        rep.landau.holds,
        rep.delaygue.holds,
        rep.geometry.dilates.hollow_landau_dilate,
        rep.geometry.dilates.unique_interior_point,
        rep.landau.min_phi,
        rep.all_agree
    )
}

fn cmd_certify(spec: &Path, budget: &Budget, json: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let spec: SystemSpec = read_json(spec)?;
    let sys = spec.to_system()?;
    let rep = certify(&sys, spec.label.clone(), &budget.options())?;
    emit(out, &to_json(&rep), json)?;
    if json.is_some() {
        let _ = writeln!(out, "{}", summary_line(&rep));
    }
    Ok(if rep.all_agree { EXIT_OK } else { EXIT_DISAGREE })
}

fn cmd_series(spec: &Path, which: &str, cap: u64, out: &mut dyn Write) -> Outcome {
    let choice: SeriesChoice = which.parse().map_err(|e: String| Failure::new(EXIT_USAGE, e))?;
    let spec: SystemSpec = read_json(spec)?;
    let sys = spec.to_system()?;
    let s = match choice {
        SeriesChoice::F => series_f(&sys, cap),
        SeriesChoice::G(idx) => series_g(&sys, idx, cap)?,
        SeriesChoice::Mirror(idx) => mirror_map(&sys, idx, cap)?.0,
    };
    emit(out, &s.to_canonical_text(), None)?;
    Ok(EXIT_OK)
}

/// Worker count from `RATIOCERT_THREADS`, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_VAR).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

/// Certifies every spec on a pool capped by `RATIOCERT_THREADS`. Results keep
/// the corpus order.
pub fn certify_all(specs: &[SystemSpec], opts: &CertifyOptions) -> Vec<Result<CertificationReport, Error>> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_cap() {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().expect("thread pool");
    pool.install(|| {
        specs
            .par_iter()
            .map(|s| {
                let sys = s.to_system()?;
                certify(&sys, s.label.clone(), opts)
            })
            .collect()
    })
}

fn cmd_cross_check(corpus: &Path, budget: &Budget, json: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let specs: Vec<SystemSpec> = read_json(corpus)?;
    let results = certify_all(&specs, &budget.options());
    let mut reports = Vec::with_capacity(results.len());
    let mut disagreements = 0;
    for (spec, res) in specs.iter().zip(results) {
        let rep = res.map_err(|e| {
            let mut f = Failure::from(e);
            f.message = format!("{}: {}", spec.label.as_deref().unwrap_or("-"), f.message);
            f
        })?;
        if !rep.all_agree {
            disagreements += 1;
        }
        let _ = writeln!(out, "{}", summary_line(&rep));
        reports.push(rep);
    }
    let _ = writeln!(out, "systems={} disagreements={}", reports.len(), disagreements);
    if let Some(p) = json {
        emit(out, &to_json(&reports), Some(p))?;
    }
    Ok(if disagreements == 0 { EXIT_OK } else { EXIT_DISAGREE })
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Validate { spec } => cmd_validate(&spec, out),
        Command::Certify { spec, budget, json } => cmd_certify(&spec, &budget, json.as_deref(), out),
        Command::Series { spec, which, cap } => cmd_series(&spec, &which, cap, out),
        Command::Corpus { count, seed, max_r, max_forms, max_coeff, out: path } => {
            if max_r == 0 || max_forms == 0 || max_coeff <= 0 {
                return Err(Failure::new(EXIT_USAGE, "--max-r, --max-forms and --max-coeff must be positive"));
            }
            let corpus = generate_corpus(&CorpusParams { count, seed, max_r, max_forms, max_coeff });
            emit(out, &to_json(&corpus), path.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::CrossCheck { corpus, budget, json } => cmd_cross_check(&corpus, &budget, json.as_deref(), out),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            if informational {
                let _ = out.write_all(text.as_bytes());
                return EXIT_OK;
            }
            let _ = err.write_all(text.as_bytes());
            return EXIT_USAGE;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_choice_parsing() {
        assert_eq!("F".parse(), Ok(SeriesChoice::F));
        assert_eq!("GC2".parse(), Ok(SeriesChoice::G(FormIndex::C(2))));
        assert_eq!("GD1".parse(), Ok(SeriesChoice::G(FormIndex::D(1))));
        assert_eq!("mirror".parse(), Ok(SeriesChoice::Mirror(FormIndex::C(1))));
        assert_eq!("mirror-D3".parse(), Ok(SeriesChoice::Mirror(FormIndex::D(3))));
        assert!("H1".parse::<SeriesChoice>().is_err());
    }

    #[test]
    fn usage_errors_exit_four() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(run(["ratiocert", "frobnicate"], &mut o, &mut e), EXIT_USAGE);
        assert_eq!(run(["ratiocert", "--help"], &mut o, &mut e), EXIT_OK);
    }
}
