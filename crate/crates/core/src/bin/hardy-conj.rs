use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use hardy_conj::io::{
    check_conjugation, check_symmetry, explore, gen_symbol, parse_json_arg, CoeffEntry,
    CommandOutcome, ConjugationSpec, ExitStatus, JsonComplex, ReportFile, SeqSpec, SymbolFile,
};
use hardy_conj::{Error, ExploreMode, DEFAULT_TOL};

#[derive(Parser)]
#[command(
    name = "hardy-conj",
    version,
    about = "Conjugations and complex symmetric Toeplitz operators on truncated H2",
    after_help = "Exit status: 0 = verdict positive, 1 = verdict negative, 2 = input or usage error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    J,
    Lambda,
    Alpha,
    Zeta,
    UnitarySeed,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    ConstantZeta,
    RandomZeta,
    RandomUnitary,
}

impl From<ModeArg> for ExploreMode {
    fn from(value: ModeArg) -> Self {
        match value {
            ModeArg::ConstantZeta => ExploreMode::ConstantZeta,
            ModeArg::RandomZeta => ExploreMode::RandomZeta,
            ModeArg::RandomUnitary => ExploreMode::RandomUnitary,
        }
    }
}

#[derive(clap::Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include wall-clock runtime in the report (breaks byte reproducibility).
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Build a conjugation and certify that it is isometric and involutive.
    CheckConjugation {
        #[arg(long, value_enum)]
        kind: Kind,
        /// λ for `--kind lambda`, as JSON: {"re":..,"im":..} or {"theta":..}.
        #[arg(long)]
        lambda: Option<String>,
        /// Sequence for `--kind alpha|zeta`, as JSON or @file, e.g. {"constant_theta":0.5}.
        #[arg(long)]
        seq: Option<String>,
        /// Seed of the random unitary for `--kind unitary-seed` (defaults to --seed).
        #[arg(long)]
        unitary_seed: Option<u64>,
        /// Truncation dimension N.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Number of sampled vector pairs.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether T_phi is C-symmetric, by residual and by coefficient criteria.
    CheckSymmetry {
        /// SymbolFile path.
        #[arg(long)]
        symbol: PathBuf,
        /// Conjugation as JSON or @file, e.g. {"kind":"lambda","lambda":{"re":0,"im":1}}.
        #[arg(long)]
        conj: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Generate a symbol satisfying phi(-n) = phi(n) zeta_n^(2n).
    GenSymbol {
        /// JSON list of {"n":..,"re":..,"im":..} with n >= 1, or @file.
        #[arg(long, default_value = "[]")]
        onesided: String,
        /// Constant term as JSON complex.
        #[arg(long, default_value = r#"{"re":0,"im":0}"#)]
        constant: String,
        /// The zeta sequence as JSON or @file.
        #[arg(long)]
        zeta: String,
        #[command(flatten)]
        common: Common,
    },
    /// Randomized comparison of the coefficient criteria against the residual oracle.
    Explore {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        band: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "random-zeta")]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// JSON-lines file receiving one record per trial.
        #[arg(long)]
        out: PathBuf,
        /// Write the summary report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        timing: bool,
    },
}

fn write_json<T: serde::Serialize>(value: &T, out: Option<&Path>) -> hardy_conj::Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Error::InvalidArgument(format!("cannot write stdout: {e}"))),
    }
}

fn finish(mut outcome: CommandOutcome, started: Instant, timing: bool, out: Option<&Path>) -> hardy_conj::Result<ExitStatus> {
    if timing {
        outcome.report.runtime_ms = Some(started.elapsed().as_millis() as u64);
    }
    write_json::<ReportFile>(&outcome.report, out)?;
    Ok(outcome.exit_status())
}

fn conjugation_spec(
    kind: Kind,
    lambda: Option<String>,
    seq: Option<String>,
    unitary_seed: Option<u64>,
    seed: u64,
) -> hardy_conj::Result<ConjugationSpec> {
    let need_seq = |seq: Option<String>| -> hardy_conj::Result<SeqSpec> {
        let raw = seq.ok_or_else(|| Error::InvalidArgument("--seq is required for this kind".into()))?;
        parse_json_arg(&raw)
    };
    Ok(match kind {
        Kind::J => ConjugationSpec::J,
        Kind::Lambda => {
            let raw = lambda
                .ok_or_else(|| Error::InvalidArgument("--lambda is required for --kind lambda".into()))?;
            ConjugationSpec::Lambda {
                lambda: parse_json_arg::<JsonComplex>(&raw)?,
            }
        }
        Kind::Alpha => ConjugationSpec::Alpha { alpha: need_seq(seq)? },
        Kind::Zeta => ConjugationSpec::Zeta { zeta: need_seq(seq)? },
        Kind::UnitarySeed => ConjugationSpec::UnitarySeed {
            seed: unitary_seed.unwrap_or(seed),
        },
    })
}

fn run(cli: Cli) -> hardy_conj::Result<ExitStatus> {
    let started = Instant::now();
    match cli.command {
        Command::CheckConjugation {
            kind,
            lambda,
            seq,
            unitary_seed,
            n,
            tol,
            trials,
            seed,
            common,
        } => {
            let spec = conjugation_spec(kind, lambda, seq, unitary_seed, seed)?;
            let outcome = check_conjugation(&spec, n, tol, trials, seed)?;
            finish(outcome, started, common.timing, common.out.as_deref())
        }
        Command::CheckSymmetry {
            symbol,
            conj,
            n,
            tol,
            common,
        } => {
            let text = std::fs::read_to_string(&symbol)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", symbol.display())))?;
            let file: SymbolFile = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidArgument(format!("bad symbol file: {e}")))?;
            let spec: ConjugationSpec = parse_json_arg(&conj)?;
            let outcome = check_symmetry(&file, &spec, n, tol)?;
            finish(outcome, started, common.timing, common.out.as_deref())
        }
        Command::GenSymbol {
            onesided,
            constant,
            zeta,
            common,
        } => {
            let entries: Vec<CoeffEntry> = parse_json_arg(&onesided)?;
            let constant = parse_json_arg::<JsonComplex>(&constant)?.value();
            let zeta: SeqSpec = parse_json_arg(&zeta)?;
            let file = gen_symbol(&entries, constant, &zeta)?;
            write_json(&file, common.out.as_deref())?;
            Ok(ExitStatus::Positive)
        }
        Command::Explore {
            trials,
            n,
            band,
            seed,
            mode,
            tol,
            out,
            report,
            format: _,
            timing,
        } => {
            let file = File::create(&out)
                .map_err(|e| Error::InvalidArgument(format!("cannot create {}: {e}", out.display())))?;
            let mut sink = BufWriter::new(file);
            let outcome = explore(trials, n, band, seed, mode.into(), tol, &mut sink)?;
            finish(outcome, started, timing, report.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { ExitStatus::InputError.code() } else { 0 };
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(status) => ExitCode::from(status.code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(ExitStatus::InputError.code() as u8)
        }
    }
}
