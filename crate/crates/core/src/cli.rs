//! Command-line front end for the `bch` binary.
//!
//! Exit codes: 0 on success, 1 when decode meets an uncorrectable frame (unless
//! `--allow-errors`) or a self-test fails, 2 on usage, parse or I/O errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::channel::{bsc_corrupt, frame_seed, random_error_pattern, run_ber_experiment, BerReport, BscConfig};
use crate::decoder::{decode, decode_shortened, DecodeStatus, ReceivedWord};
use crate::encoder::{encode_lfsr, encode_shortened, Codeword, Message, ShortCodeword, ShortMessage, N, SHORT_N};
use crate::frame::{format_frames, parse_frames, Frame, FrameKind};
use crate::gf64::GfTables;
use crate::selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNCORRECTABLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Header of the per-frame decode report.
pub const DECODE_REPORT_HEADER: &str = "frame_index,status,num_errors_corrected";

#[derive(Parser, Debug)]
#[command(name = "bch", version, about = "BCH(63, 51) and shortened (31, 19) codec")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Encode message frames into codeword frames.
    Encode {
        /// Use the shortened (31, 19) code.
        #[arg(long)]
        short: bool,
        input: PathBuf,
        output: PathBuf,
    },
    /// Decode codeword frames back to message frames.
    Decode {
        #[arg(long)]
        short: bool,
        input: PathBuf,
        output: PathBuf,
        /// Per-frame CSV report.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Exit 0 even when some frames are uncorrectable.
        #[arg(long)]
        allow_errors: bool,
    },
    /// Corrupt codeword frames reproducibly.
    Corrupt(CorruptArgs),
    /// Monte Carlo bit/frame error rates over a binary symmetric channel.
    Ber {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        frames: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Print the antilog table of GF(64).
    Tables,
    /// Run the built-in exhaustive checks.
    Selftest,
}

#[derive(Args, Debug)]
struct CorruptArgs {
    /// Flip exactly this many bits per frame.
    #[arg(long, conflicts_with = "bsc", required_unless_present = "bsc")]
    weight: Option<usize>,
    /// Flip each bit with this probability.
    #[arg(long)]
    bsc: Option<f64>,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    short: bool,
    input: PathBuf,
    output: PathBuf,
}

#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_frames(path: &Path, kind: FrameKind) -> Result<Vec<Frame>, Failure> {
    parse_frames(&read(path)?, kind).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let tables = GfTables::global();
    match command {
        Command::Encode { short, input, output } => {
            let (from, to) = if short {
                (FrameKind::ShortMessage, FrameKind::ShortCodeword)
            } else {
                (FrameKind::Message, FrameKind::Codeword)
            };
            let frames: Vec<Frame> = read_frames(&input, from)?
                .into_iter()
                .map(|f| match f {
                    Frame::Lost => Frame::Lost,
                    Frame::Value(v) if short => {
                        let m = ShortMessage::new(v as u32).expect("width checked by parser");
                        Frame::Value(u64::from(encode_shortened(m).bits()))
                    }
                    Frame::Value(v) => {
                        let m = Message::new(v).expect("width checked by parser");
                        Frame::Value(encode_lfsr(m).bits())
                    }
                })
                .collect();
            write(&output, &format_frames(&frames, to))?;
            Ok(EXIT_OK)
        }
        Command::Decode {
            short,
            input,
            output,
            report,
            allow_errors,
        } => {
            let (from, to) = if short {
                (FrameKind::ShortCodeword, FrameKind::ShortMessage)
            } else {
                (FrameKind::Codeword, FrameKind::Message)
            };
            let mut decoded = Vec::new();
            let mut rows = vec![DECODE_REPORT_HEADER.to_string()];
            let mut lost = 0usize;
            for (i, f) in read_frames(&input, from)?.into_iter().enumerate() {
                let (status, corrected, frame) = match f {
                    Frame::Lost => (DecodeStatus::Uncorrectable, 0, Frame::Lost),
                    Frame::Value(v) if short => {
                        let o = decode_shortened(ShortCodeword::new(v as u32).expect("parser width"), tables);
                        let frame = o.payload.map_or(Frame::Lost, |p| Frame::Value(u64::from(p.bits())));
                        (o.status, o.positions.len(), frame)
                    }
                    Frame::Value(v) => {
                        let o = decode(ReceivedWord::new(v).expect("parser width"), tables);
                        let frame = o.corrected.map_or(Frame::Lost, |c| Frame::Value(c.message().bits()));
                        (o.status, o.positions.len(), frame)
                    }
                };
                if status == DecodeStatus::Uncorrectable {
                    lost += 1;
                }
                rows.push(format!("{i},{status},{corrected}"));
                decoded.push(frame);
            }
            write(&output, &format_frames(&decoded, to))?;
            if let Some(path) = report {
                write(&path, &(rows.join("\n") + "\n"))?;
            }
            Ok(if lost > 0 && !allow_errors {
                EXIT_UNCORRECTABLE
            } else {
                EXIT_OK
            })
        }
        Command::Corrupt(args) => corrupt(args),
        Command::Ber { p, frames, seed, csv } => {
            let report = run_ber_experiment(p, frames, seed, tables)?;
            let text = format!("{}\n{}\n", BerReport::CSV_HEADER, report.csv_row());
            out.write_all(text.as_bytes())?;
            if let Some(path) = csv {
                write(&path, &text)?;
            }
            Ok(EXIT_OK)
        }
        Command::Tables => {
            out.write_all(tables.dump().as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Selftest => {
            let results = selftest::run_all(tables);
            for r in &results {
                writeln!(out, "{r}")?;
            }
            let passed = results.iter().filter(|r| r.passed).count();
            writeln!(out, "{passed}/{} checks passed", results.len())?;
            Ok(if passed == results.len() {
                EXIT_OK
            } else {
                EXIT_UNCORRECTABLE
            })
        }
    }
}

/// Frame `i` draws its pattern from `frame_seed(seed, i)`.
fn corrupt(args: CorruptArgs) -> Result<i32, Failure> {
    let (kind, n) = if args.short {
        (FrameKind::ShortCodeword, SHORT_N)
    } else {
        (FrameKind::Codeword, N)
    };
    if let Some(w) = args.weight {
        if w > n {
            return Err(Failure(format!("--weight {w} exceeds frame length {n}")));
        }
    }
    let bsc = args.bsc.map(|p| BscConfig::new(p, 0)).transpose()?;
    let frames: Vec<Frame> = read_frames(&args.input, kind)?
        .into_iter()
        .enumerate()
        .map(|(i, f)| {
            let Frame::Value(v) = f else { return Ok(Frame::Lost) };
            let seed = frame_seed(args.seed, i as u64);
            let mask = match (args.weight, bsc) {
                (Some(w), _) => random_error_pattern(w, n, seed)?.mask(),
                (None, Some(cfg)) => {
                    let cfg = BscConfig::new(cfg.p(), seed)?;
                    bsc_corrupt(Codeword::default(), cfg).bits() & ((1u64 << n) - 1)
                }
                (None, None) => unreachable!("clap requires --weight or --bsc"),
            };
            Ok(Frame::Value(v ^ mask))
        })
        .collect::<Result<_, Failure>>()?;
    write(&args.output, &format_frames(&frames, kind))?;
    Ok(EXIT_OK)
}

/// Entry point used by the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}
