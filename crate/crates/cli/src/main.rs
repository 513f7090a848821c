//! Command-line front end: sequence generation, correlation and
//! linear-complexity reports, and a one-shot per-instance verification run.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 parameter error,
//! 3 field-construction failure (reducible modulus, non-primitive generator).

use clap::{Args, Parser, Subcommand, ValueEnum};
use geoseq::report::{ComplexityReport, CorrelationParameters, CorrelationReport, FieldInfo};
use geoseq::{
    correlate, gen_se, gen_t1, gen_t2, lc_report, parse_coeffs, predict_cross_correlation,
    predict_se_autocorrelation, predict_t1_autocorrelation, verify_instance, BinarySequence,
    Error, FieldContext, FieldParams, VerifyOptions,
};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

/// Environment variable naming the directory relative --out paths resolve
/// against.
const OUT_DIR_ENV: &str = "GEOSEQ_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "geoseq",
    version,
    about = "Generate and analyze balanced interleaved sequences over GF(p^m)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit one least period of a sequence as an ASCII or packed-hex bitstream
    Gen(GenArgs),
    /// Autocorrelation profile with its closed-form prediction
    Autocorr(AutocorrArgs),
    /// Cross-correlation profile of two shifts with its closed-form prediction
    Crosscorr(CrosscorrArgs),
    /// Linear complexity by closed form, gcd method and Berlekamp-Massey
    Lincomp(LincompArgs),
    /// Run the full identity suite for one instance
    Verify(VerifyArgs),
    /// Print the resolved field context
    FieldInfo(FieldArgs),
}

#[derive(Args)]
struct FieldArgs {
    /// Odd prime characteristic
    #[arg(long)]
    p: u64,
    /// Extension degree (> 1)
    #[arg(long)]
    m: u32,
    /// Override the modulus search: comma-separated coefficients, constant
    /// term first (e.g. x^2+2x+3 over GF(5) is 3,2,1)
    #[arg(long)]
    irreducible: Option<String>,
    /// Override the generator search: comma-separated coefficients of omega
    #[arg(long)]
    omega: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    T1,
    T2,
    Se,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Bits,
    Hex,
    Csv,
    Json,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Which sequence to emit
    #[arg(long, value_enum)]
    kind: Kind,
    /// Interleaving shift, required for --kind se
    #[arg(long)]
    e: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Bits)]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AutocorrArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Which sequence to analyze
    #[arg(long, value_enum, default_value_t = Kind::Se)]
    kind: Kind,
    /// Interleaving shift, required for --kind se
    #[arg(long)]
    e: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CrosscorrArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    e1: u64,
    #[arg(long)]
    e2: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LincompArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    e: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Comma-separated shifts to check (default: every e in [0, N); refused
    /// for N > 4096)
    #[arg(long, value_delimiter = ',')]
    e_list: Option<Vec<u64>>,
    /// Cap on the number of (e1, e2) pairs checked
    #[arg(long)]
    max_pairs: Option<usize>,
    /// Test hook: flip this bit of each interleaved sequence before the
    /// autocorrelation comparison
    #[arg(long, hide = true)]
    corrupt_bit: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Reducible
        | Error::NotPrimitive { .. }
        | Error::BadModulus { .. }
        | Error::BadElement { .. } => 3,
        Error::MethodDisagreement { .. } | Error::MinimalPolyMismatch { .. } => 1,
        _ => 2,
    }
}

fn run() -> Result<u8, Error> {
    match Cli::parse().command {
        Command::Gen(args) => cmd_gen(args),
        Command::Autocorr(args) => cmd_autocorr(args),
        Command::Crosscorr(args) => cmd_crosscorr(args),
        Command::Lincomp(args) => cmd_lincomp(args),
        Command::Verify(args) => cmd_verify(args),
        Command::FieldInfo(args) => cmd_field_info(args),
    }
}

/// Build the field context, echoing the resolved modulus and generator on
/// stderr so runs relying on the deterministic searches stay reproducible.
fn build_context(args: &FieldArgs) -> Result<FieldContext, Error> {
    let irreducible = args.irreducible.as_deref().map(parse_coeffs).transpose()?;
    let omega = args.omega.as_deref().map(parse_coeffs).transpose()?;
    let ctx = FieldContext::new(FieldParams {
        irreducible,
        omega,
        ..FieldParams::new(args.p, args.m)
    })?;
    eprintln!(
        "# p={} m={} irreducible={} omega={} N={}",
        ctx.p(),
        ctx.m(),
        geoseq::format_coeffs(ctx.modulus()),
        ctx.omega(),
        ctx.n()
    );
    Ok(ctx)
}

/// Resolve --out against GEOSEQ_OUT_DIR and write, or print to stdout.
fn emit(out: &Option<PathBuf>, payload: &str) -> Result<u8, Error> {
    match out {
        None => {
            print!("{payload}");
            std::io::stdout().flush().expect("stdout");
        }
        Some(path) => {
            let resolved = match std::env::var_os(OUT_DIR_ENV) {
                Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
                _ => path.clone(),
            };
            if let Err(err) = std::fs::write(&resolved, payload) {
                eprintln!("error: cannot write {}: {err}", resolved.display());
                return Ok(2);
            }
        }
    }
    Ok(0)
}

enum Generated {
    Sequence(BinarySequence),
    MissingShift,
}

fn generate(ctx: &FieldContext, kind: Kind, e: Option<u64>) -> Result<Generated, Error> {
    match kind {
        Kind::T1 => gen_t1(ctx).map(Generated::Sequence),
        Kind::T2 => gen_t2(ctx).map(Generated::Sequence),
        Kind::Se => match e {
            Some(e) => gen_se(ctx, e).map(Generated::Sequence),
            None => Ok(Generated::MissingShift),
        },
    }
}

fn cmd_gen(args: GenArgs) -> Result<u8, Error> {
    let ctx = build_context(&args.field)?;
    let seq = match generate(&ctx, args.kind, args.e)? {
        Generated::Sequence(seq) => seq,
        Generated::MissingShift => {
            eprintln!("error: --kind se requires --e");
            return Ok(2);
        }
    };
    let payload = match args.format {
        Format::Bits => format!("{}\n", seq.to_bit_string()),
        Format::Hex => format!("{}\n", seq.to_packed_hex()),
        Format::Csv | Format::Json => {
            eprintln!("error: gen emits bitstreams; use --format bits or hex");
            return Ok(2);
        }
    };
    emit(&args.out, &payload)
}

fn correlation_output(
    report: &CorrelationReport,
    format: Format,
    out: &Option<PathBuf>,
) -> Result<u8, Error> {
    let payload = match format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
        Format::Bits | Format::Hex => {
            eprintln!("error: correlation reports support --format csv or json");
            return Ok(2);
        }
    };
    emit(out, &payload)
}

fn cmd_autocorr(args: AutocorrArgs) -> Result<u8, Error> {
    let ctx = build_context(&args.field)?;
    let seq = match generate(&ctx, args.kind, args.e)? {
        Generated::Sequence(seq) => seq,
        Generated::MissingShift => {
            eprintln!("error: --kind se requires --e");
            return Ok(2);
        }
    };
    let observed = correlate(&seq, &seq)?.values;
    let (prediction, parameters) = match (args.kind, args.e) {
        (Kind::Se, Some(e)) => (
            predict_se_autocorrelation(&ctx, e)?,
            CorrelationParameters::new(&ctx).with_shift(e),
        ),
        // Both plain types share the same three-constant table.
        _ => (predict_t1_autocorrelation(&ctx), CorrelationParameters::new(&ctx)),
    };
    let report = CorrelationReport::new(parameters, observed, &prediction);
    correlation_output(&report, args.format, &args.out)
}

fn cmd_crosscorr(args: CrosscorrArgs) -> Result<u8, Error> {
    let ctx = build_context(&args.field)?;
    if args.e1 == args.e2 {
        return Err(Error::ShiftOrder { e1: args.e1, e2: args.e2 });
    }
    // The prediction needs e1 < e2; a reversed pair is swapped and the swap
    // reported, since R_(B,A)(tau) = R_(A,B)(P - tau mod P).
    let swapped = args.e1 > args.e2;
    let (e1, e2) = if swapped { (args.e2, args.e1) } else { (args.e1, args.e2) };
    let s1 = gen_se(&ctx, e1)?;
    let s2 = gen_se(&ctx, e2)?;
    let observed = correlate(&s1, &s2)?.values;
    let prediction = predict_cross_correlation(&ctx, e1, e2)?;
    let report = CorrelationReport::new(
        CorrelationParameters::new(&ctx).with_pair(e1, e2, swapped),
        observed,
        &prediction,
    );
    correlation_output(&report, args.format, &args.out)
}

fn cmd_lincomp(args: LincompArgs) -> Result<u8, Error> {
    let ctx = build_context(&args.field)?;
    let report = ComplexityReport::new(&ctx, args.e, &lc_report(&ctx, args.e)?);
    let payload = match args.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        Format::Bits | Format::Hex => {
            eprintln!("error: lincomp reports support --format csv or json");
            return Ok(2);
        }
    };
    emit(&args.out, &payload)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Error> {
    let ctx = build_context(&args.field)?;
    let opts = VerifyOptions {
        e_list: args.e_list,
        max_pairs: args.max_pairs,
        corrupt_bit: args.corrupt_bit,
    };
    let report = verify_instance(&ctx, &opts)?;
    let code = emit(&args.out, &report.to_json())?;
    if code != 0 {
        return Ok(code);
    }
    if let Some((check, detail)) = report.first_failure() {
        eprintln!("verification mismatch: {check}: {detail}");
        return Ok(1);
    }
    Ok(0)
}

fn cmd_field_info(args: FieldArgs) -> Result<u8, Error> {
    let ctx = build_context(&args)?;
    print!("{}", FieldInfo::new(&ctx).to_json());
    Ok(0)
}
