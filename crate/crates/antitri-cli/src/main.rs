//! Command-line surface over the antitri library: build exact matrices,
//! run property checks, classify site distributions, and reproduce the
//! golden suite. All output is exact-rational JSON or CSV.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use antitri::eigenprop::{en_membership, full_adep_check, property_report, weak_adep_check};
use antitri::io::{
    classification_to_json, matrix_to_csv, matrix_to_json, measure_from_json, parse_rat_list,
    poly_to_json, site_from_json, spectrum_from_list, triangular_from_json, MatrixJson,
    MeasureJson, SiteJson,
};
use antitri::moments::{
    a_mu_matrix, b_symmetric_matrix, bernstein_matrix, cm_violation, d_condition_check, Measure,
    MomentSequence,
};
use antitri::particle::{nu_classification, rn_matrix, rtilde_from_nu, spectral_conditions};
use antitri::pascal::{pi_map, vp_membership, Spectrum};
use antitri::scalar::{parse_rat, rat_to_string, Rat};
use antitri::{char_poly, repro, Error, Matrix, Triangular};

#[derive(Parser)]
#[command(name = "antitri", about = "Exact anti-triangular spectral toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct one of the exact matrices.
    Build(BuildArgs),
    /// Run a property check and print a JSON report.
    Check(CheckArgs),
    /// Claimed spectrum and characteristic polynomial of a triangular matrix.
    Spectrum(SpectrumArgs),
    /// Classify a site distribution and report its spectral conditions.
    Classify(ClassifyArgs),
    /// Run the golden reproduction suite.
    Repro(ReproArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildKind {
    /// Conjugated diagonal from a spectrum.
    Pi,
    /// A(u).
    Bernstein,
    /// Mixture matrix from a measure.
    AMu,
    /// Symmetric average B(u).
    BSym,
    /// Conditional-distribution matrix from weights.
    Rtilde,
    /// Anti-triangular three-site matrix from weights.
    Rn,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(value_enum)]
    kind: BuildKind,
    /// Comma-separated spectrum, e.g. "1,1/2,1/4".
    #[arg(long)]
    lambda: Option<String>,
    /// Rational location in [0, 1].
    #[arg(long)]
    u: Option<String>,
    /// Measure: "lebesgue", inline JSON, or a file path.
    #[arg(long)]
    measure: Option<String>,
    /// Comma-separated positive weights.
    #[arg(long)]
    weights: Option<String>,
    /// Truncation index n (defaults to ANTITRI_DEPTH).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Weak,
    Full,
    Vp,
    Cm,
    Dcond,
    En,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(value_enum)]
    which: CheckKind,
    /// Matrix: inline JSON or a file path.
    #[arg(long)]
    matrix: Option<String>,
    /// Comma-separated spectrum.
    #[arg(long)]
    lambda: Option<String>,
    /// Comma-separated moment sequence (for cm).
    #[arg(long)]
    moments: Option<String>,
    /// Check depth (defaults to ANTITRI_DEPTH, for cm).
    #[arg(long)]
    depth: Option<usize>,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Matrix: inline JSON or a file path.
    #[arg(long)]
    matrix: Option<String>,
    /// Comma-separated spectrum (prints the signed claimed eigenvalues).
    #[arg(long)]
    lambda: Option<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Comma-separated positive weights, inline JSON, or a file path.
    #[arg(long)]
    weights: String,
    /// Checked horizon (defaults to ANTITRI_DEPTH).
    #[arg(long)]
    depth: Option<usize>,
}

#[derive(Args)]
struct ReproArgs {
    /// Directory with fixture overrides (<name>.json).
    #[arg(long)]
    fixtures: Option<PathBuf>,
    /// Suite depth (defaults to ANTITRI_DEPTH, then 8).
    #[arg(long)]
    depth: Option<usize>,
}

/// Failure with the process exit code mandated for its class.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 2,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn precondition(msg: impl Into<String>) -> Failure {
    Failure {
        code: 3,
        message: msg.into(),
    }
}

fn env_depth() -> Option<usize> {
    std::env::var("ANTITRI_DEPTH").ok()?.parse().ok()
}

fn need_depth(explicit: Option<usize>) -> Result<usize, Failure> {
    explicit
        .or_else(env_depth)
        .ok_or_else(|| precondition("no truncation given: pass --n/--depth or set ANTITRI_DEPTH"))
}

/// Inline JSON if the text looks like JSON, otherwise file contents.
fn read_payload(text: &str) -> Result<String, Failure> {
    if text.trim_start().starts_with('{') {
        return Ok(text.to_string());
    }
    fs::read_to_string(text).map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {text}: {e}"),
    })
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(&read_payload(text)?).map_err(|e| Failure {
        code: 2,
        message: format!("malformed JSON: {e}"),
    })
}

fn parse_matrix(text: &str) -> Result<Triangular<Rat>, Failure> {
    let json: MatrixJson = parse_json(text)?;
    Ok(triangular_from_json(&json)?)
}

fn parse_measure(text: &str) -> Result<Measure, Failure> {
    if text.trim() == "lebesgue" {
        return Ok(Measure::Lebesgue);
    }
    let json: MeasureJson = parse_json(text)?;
    Ok(measure_from_json(&json)?)
}

fn parse_weights(text: &str) -> Result<antitri::particle::SiteDistribution, Failure> {
    if text.trim_start().starts_with('{') || PathBuf::from(text).is_file() {
        let json: SiteJson = parse_json(text)?;
        return Ok(site_from_json(&json)?);
    }
    Ok(antitri::particle::SiteDistribution::new(parse_rat_list(
        text,
    )?)?)
}

fn parse_lambda(text: &str) -> Result<Spectrum<Rat>, Failure> {
    Ok(spectrum_from_list(text)?)
}

fn required<'a, T>(value: &'a Option<T>, flag: &str) -> Result<&'a T, Failure> {
    value
        .as_ref()
        .ok_or_else(|| precondition(format!("missing required flag {flag}")))
}

fn emit_matrix(m: &Matrix<Rat>, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string(&matrix_to_json(m)).expect("serializable")
        ),
        OutputFormat::Csv => print!("{}", matrix_to_csv(m)),
    }
}

fn cmd_build(args: &BuildArgs) -> Result<(), Failure> {
    let matrix: Matrix<Rat> = match args.kind {
        BuildKind::Pi => {
            let lam = parse_lambda(required(&args.lambda, "--lambda")?)?;
            pi_map(&lam).into_matrix()
        }
        BuildKind::Bernstein | BuildKind::BSym => {
            let u = parse_rat(required(&args.u, "--u")?)?;
            let n = need_depth(args.n)?;
            let t = match args.kind {
                BuildKind::Bernstein => bernstein_matrix(&u, n),
                _ => b_symmetric_matrix(&u, n),
            };
            t.into_matrix()
        }
        BuildKind::AMu => {
            let mu = parse_measure(required(&args.measure, "--measure")?)?;
            a_mu_matrix(&mu, need_depth(args.n)?).into_matrix()
        }
        BuildKind::Rtilde => {
            let nu = parse_weights(required(&args.weights, "--weights")?)?;
            let n = args.n.or_else(env_depth).unwrap_or(nu.top_index());
            rtilde_from_nu(&nu, n)?.into_matrix()
        }
        BuildKind::Rn => {
            let nu = parse_weights(required(&args.weights, "--weights")?)?;
            let n = args.n.or_else(env_depth).unwrap_or(nu.top_index());
            rn_matrix(&nu, n)?
        }
    };
    emit_matrix(&matrix, args.format);
    Ok(())
}

fn cmd_check(args: &CheckArgs) -> Result<(), Failure> {
    let report = match args.which {
        CheckKind::Weak | CheckKind::Full => {
            let x = parse_matrix(required(&args.matrix, "--matrix")?)?;
            let report = property_report(&x);
            match args.which {
                CheckKind::Weak => json!({
                    "verdict": report.weak,
                    "spectrum": report.spectrum,
                    "witness": report.witness,
                }),
                _ => serde_json::to_value(&report).expect("serializable"),
            }
        }
        CheckKind::Vp => {
            let x = parse_matrix(required(&args.matrix, "--matrix")?)?;
            json!({ "verdict": vp_membership(&x) })
        }
        CheckKind::Cm => {
            let values = parse_rat_list(required(&args.moments, "--moments")?)?;
            let a = MomentSequence::new(values)?;
            let depth = args
                .depth
                .or_else(env_depth)
                .unwrap_or(a.top_index())
                .min(a.top_index());
            let violation = cm_violation(&a, depth)?;
            json!({
                "verdict": violation.is_none(),
                "depth": depth,
                "violation": violation.map(|(i, j)| json!({"i": i, "j": j})),
            })
        }
        CheckKind::Dcond => {
            let lam = parse_lambda(required(&args.lambda, "--lambda")?)?;
            json!({ "verdict": d_condition_check(&lam) })
        }
        CheckKind::En => {
            let lam = parse_lambda(required(&args.lambda, "--lambda")?)?;
            serde_json::to_value(&en_membership(&lam)).expect("serializable")
        }
    };
    println!("{}", serde_json::to_string(&report).expect("serializable"));
    Ok(())
}

fn cmd_spectrum(args: &SpectrumArgs) -> Result<(), Failure> {
    let report = if let Some(matrix) = &args.matrix {
        let x = parse_matrix(matrix)?;
        let lam = Spectrum::new(x.diagonal()).expect("nonempty");
        let p = char_poly(
            &x.as_matrix()
                .mul(&antitri::pascal::anti_identity(x.dim() - 1)),
        );
        json!({
            "spectrum": lam.signed_values().iter().map(rat_to_string).collect::<Vec<_>>(),
            "char_poly": poly_to_json(&p),
            "weak": weak_adep_check(&x),
            "full": full_adep_check(&x),
        })
    } else {
        let lam = parse_lambda(required(&args.lambda, "--lambda")?)?;
        json!({
            "spectrum": lam.signed_values().iter().map(rat_to_string).collect::<Vec<_>>(),
        })
    };
    println!("{}", serde_json::to_string(&report).expect("serializable"));
    Ok(())
}

fn cmd_classify(args: &ClassifyArgs) -> Result<(), Failure> {
    let nu = parse_weights(&args.weights)?;
    let depth = args
        .depth
        .or_else(env_depth)
        .unwrap_or(nu.top_index())
        .min(nu.top_index());
    let class = nu_classification(&nu)?;
    let spectral = spectral_conditions(&nu, depth)
        .ok()
        .map(|r| antitri::io::spectral_to_json(&r));
    let report = json!({
        "classification": classification_to_json(&class),
        "checked_depth": depth,
        "spectral": spectral,
    });
    println!("{}", serde_json::to_string(&report).expect("serializable"));
    Ok(())
}

fn cmd_repro(args: &ReproArgs) -> Result<bool, Failure> {
    let depth = args.depth.or_else(env_depth).unwrap_or(8);
    if depth == 0 {
        return Err(precondition("depth must be at least 1"));
    }
    let report = repro::run(args.fixtures.as_deref(), depth);
    for r in &report.results {
        if r.passed {
            println!("PASS  {}", r.name);
        } else {
            println!("FAIL  {} ({})", r.name, r.detail);
        }
    }
    println!(
        "{} executed, {} skipped, {}",
        report.executed,
        report.skipped,
        if report.all_passed { "all passed" } else { "FAILURES" }
    );
    Ok(report.all_passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Build(args) => cmd_build(args),
        Command::Check(args) => cmd_check(args),
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Repro(args) => {
            return match cmd_repro(args) {
                Ok(true) => ExitCode::SUCCESS,
                Ok(false) => ExitCode::from(1),
                Err(f) => {
                    eprintln!("error: {}", f.message);
                    ExitCode::from(f.code)
                }
            }
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
