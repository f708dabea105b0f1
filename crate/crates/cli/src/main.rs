//! `zcdft`: generate ZC sequences, transform them, export lmFH patterns,
//! run the invariant suite and benchmark the fast path.
//!
//! Exit codes: 0 ok, 1 verification failure or I/O error, 2 bad arguments.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zcdft::format::{parse_flip_list, sequence_to_csv, sequence_to_json};
use zcdft::oracle::{naive_dft, naive_idft};
use zcdft::pattern::zc_pattern;
use zcdft::verify::{self, Fault, VerifyConfig};
use zcdft::{bench, dft_reference, idft_reference, plan, zc_time, ComplexSequence, Direction, ZcParams};

#[derive(Parser)]
#[command(name = "zcdft", version, about = "Zadoff-Chu sequences and their O(P) DFT")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the time-domain ZC sequence.
    Gen(SeqArgs),
    /// Write the DFT of the ZC sequence.
    Dft(TransformArgs),
    /// Write the (unnormalized unless --normalize) IDFT of the ZC sequence.
    Idft(IdftArgs),
    /// Write the lmFH pattern as `t,f,orientation` CSV.
    Pattern(PatternArgs),
    /// Run the invariant suite.
    Verify(VerifyArgs),
    /// Time fast, reference and naive transforms; prints JSON.
    Bench(BenchArgs),
}

#[derive(Args)]
struct ZcArgs {
    /// Prime length P.
    #[arg(long = "p")]
    p: u64,
    /// Root u in [1, P-1].
    #[arg(long = "u")]
    u: i64,
    /// Cyclic shift Ts in [0, P-1].
    #[arg(long = "ts", default_value_t = 0)]
    ts: i64,
}

#[derive(Args)]
struct SeqArgs {
    #[command(flatten)]
    zc: ZcArgs,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
    format: OutFormat,
}

#[derive(Args)]
struct TransformArgs {
    #[command(flatten)]
    seq: SeqArgs,
    #[arg(long, value_enum, default_value_t = Method::Fast)]
    method: Method,
}

#[derive(Args)]
struct IdftArgs {
    #[command(flatten)]
    transform: TransformArgs,
    /// Divide the output by P.
    #[arg(long)]
    normalize: bool,
}

#[derive(Args)]
struct PatternArgs {
    #[command(flatten)]
    zc: ZcArgs,
    /// Ordered, comma-separated flips: none, dft, idft, conj.
    #[arg(long, default_value = "none")]
    flip: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 199)]
    pmax: u64,
    /// Add P = 839 with 32 sampled roots to the transform families.
    #[arg(long = "include-839")]
    include_839: bool,
    /// Deliberately break the fast path to check the suite fails.
    #[arg(long, value_enum, hide = true)]
    inject_fault: Option<FaultArg>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long = "p", default_value_t = 839)]
    p: u64,
    #[arg(long = "u", default_value_t = 25)]
    u: i64,
    #[arg(long, default_value_t = 100)]
    reps: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Fast,
    Reference,
    Naive,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    FsOffByOne,
}

enum Failure {
    Usage(String),
    Io(io::Error),
    Verification,
}

impl From<zcdft::Error> for Failure {
    fn from(e: zcdft::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn params(a: &ZcArgs) -> Result<ZcParams, Failure> {
    Ok(ZcParams::new(a.p, a.u, a.ts)?)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_sequence(args: &SeqArgs, params: ZcParams, seq: &ComplexSequence) -> Result<(), Failure> {
    let text = match args.format {
        OutFormat::Csv => sequence_to_csv(seq),
        OutFormat::Json => {
            let mut s = sequence_to_json(params, seq);
            s.push('\n');
            s
        }
    };
    emit(&args.out, &text)
}

fn transform(params: ZcParams, method: Method, direction: Direction) -> ComplexSequence {
    match (method, direction) {
        (Method::Fast, d) => plan(params, d).execute(None),
        (Method::Reference, Direction::Forward) => dft_reference(params),
        (Method::Reference, Direction::Inverse) => idft_reference(params),
        (Method::Naive, Direction::Forward) => naive_dft(&zc_time(params)),
        (Method::Naive, Direction::Inverse) => naive_idft(&zc_time(params)),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen(args) => {
            let params = params(&args.zc)?;
            emit_sequence(&args, params, &zc_time(params))
        }
        Command::Dft(args) => {
            let params = params(&args.seq.zc)?;
            let out = transform(params, args.method, Direction::Forward);
            emit_sequence(&args.seq, params, &out)
        }
        Command::Idft(args) => {
            let t = &args.transform;
            let params = params(&t.seq.zc)?;
            let mut out = transform(params, t.method, Direction::Inverse);
            if args.normalize {
                out = out.scale(1.0 / params.p() as f64);
            }
            emit_sequence(&t.seq, params, &out)
        }
        Command::Pattern(args) => {
            let params = params(&args.zc)?;
            let flips = parse_flip_list(&args.flip)?;
            let pattern = flips.iter().fold(
                zc_pattern(params.prime(), params.u(), params.ts())?,
                |acc, &f| acc.flip(f),
            );
            emit(&args.out, &pattern.to_csv())
        }
        Command::Verify(args) => {
            let config = VerifyConfig {
                pmax: args.pmax,
                include_839: args.include_839,
                fault: args.inject_fault.map(|FaultArg::FsOffByOne| Fault::FreqShiftOffByOne),
            };
            let report = verify::run(&config);
            println!("{report}");
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Bench(args) => {
            let params = ZcParams::new(args.p, args.u, 0)?;
            let report = bench::run(params, args.reps);
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            println!("{json}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(1),
    }
}
