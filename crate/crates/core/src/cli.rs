//! Command-line interface.
//!
//! Exit status: 0 on success, 1 when a scan finds a disagreement with the
//! closed-form predictions, 2 on usage or input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classify::{decide, omega_count, sizes_table, ClassKind, ClassVerdict};
use crate::construct::{
    witness_lemma41, witness_prop34, witness_prop36, witness_prop51, ConstructedWitness,
};
use crate::error::{Error, Result};
use crate::modring::{ResidueRing, Sign};
use crate::monomial::{find_reduction, minimal_size, minimal_size_prime_fast, report, ReductionWitness};
use crate::scan::{
    emit_appendix, read_checkpoint, scan_class, scan_conjecture, trim_output, Appendix, OmegaEntry,
    RowFormat, RowWriter, ScanJob, ScanRow, DEFAULT_CHUNK,
};

/// Caps the worker count of `scan`, `appendix` and `conjecture`.
pub const WORKERS_ENV: &str = "MODMONO_MAX_WORKERS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_ANOMALY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl Format {
    fn row_format(self) -> RowFormat {
        match self {
            Format::Text => RowFormat::Text,
            Format::Json => RowFormat::Json,
            Format::Csv => RowFormat::Csv,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "modmono", version, about = "Minimal monomial solutions of M_n(k,...,k) = ±Id over Z/NZ")]
pub struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size r and sign of the k-monomial minimal solution.
    Size {
        n: u64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
        /// Use the eigenvalue-order method (N must be prime).
        #[arg(long)]
        fast: bool,
    },
    /// Size, sign and reducibility of the k-monomial minimal solution.
    Report {
        n: u64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// A bordered solution reducing the k-monomial minimal solution, if any.
    Reduce {
        n: u64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// Decide the integer classes of N.
    Classify {
        n: u64,
        #[arg(long, value_parser = parse_kind)]
        kind: Option<ClassKind>,
    },
    /// Number of k in [1, N-1] with an irreducible minimal solution.
    Omega { n: u64 },
    /// Sizes for k = 1..(p-1)/2 over a prime p.
    SizesTable { p: u64 },
    /// Constructed reducible solutions.
    #[command(subcommand)]
    Witness(WitnessCommand),
    /// Decide a class over a range of N.
    Scan(ScanArgs),
    /// Regenerate a reference table (A, B, C or D).
    Appendix {
        #[arg(value_parser = parse_appendix)]
        which: char,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Primes none of whose minimal sizes is 2 mod 4.
    Conjecture {
        #[arg(long)]
        max: u64,
        #[arg(long)]
        workers: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum WitnessCommand {
    /// k = 1 mod n, k = 2 mod m.
    Prop36 { n: u64, m: u64 },
    /// k = 2 mod n, k = -2 mod m.
    Prop51 { n: u64, m: u64 },
    /// k = a p^t over N = p^n.
    Lemma41 { p: u64, n: u32, t: u32, a: u64 },
    /// k = N/4 or N/p for N divisible by 16 or by an odd prime square.
    Prop34 {
        #[arg(value_name = "N")]
        n: u64,
    },
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, value_parser = parse_kind)]
    pub kind: ClassKind,
    #[arg(long)]
    pub from: u64,
    #[arg(long)]
    pub to: u64,
    /// Append progress records here and resume from the last one.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Write rows to this file instead of stdout (appended on resume).
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_CHUNK)]
    pub chunk: u64,
    /// Also decide odd N in semi scans.
    #[arg(long)]
    pub include_odd: bool,
    /// fsync the checkpoint after every chunk.
    #[arg(long)]
    pub sync: bool,
    /// Stop after this many chunks.
    #[arg(long)]
    pub max_chunks: Option<usize>,
}

fn parse_kind(s: &str) -> std::result::Result<ClassKind, String> {
    s.parse()
}

fn parse_appendix(s: &str) -> std::result::Result<char, String> {
    match s {
        "A" | "B" | "C" | "D" | "a" | "b" | "c" | "d" => Ok(s.chars().next().unwrap().to_ascii_uppercase()),
        _ => Err(format!("expected one of A, B, C, D, got {s:?}")),
    }
}

/// `--workers`, defaulting to the available parallelism, capped by
/// [`WORKERS_ENV`] when set.
pub fn worker_count(requested: Option<usize>) -> usize {
    let base = requested.unwrap_or_else(|| {
        std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
    });
    let cap = std::env::var(WORKERS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok());
    match cap {
        Some(c) if c >= 1 => base.min(c),
        _ => base,
    }
    .max(1)
}

#[derive(Debug, Serialize)]
struct SizeOut {
    #[serde(rename = "N")]
    modulus: u64,
    k: u64,
    size: u64,
    sign: Sign,
}

#[derive(Debug, Serialize)]
struct ReduceOut {
    #[serde(rename = "N")]
    modulus: u64,
    k: u64,
    irreducible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<ReductionWitness>,
}

#[derive(Debug, Serialize)]
struct SizeRow {
    k: u64,
    size: u64,
}

#[derive(Debug, Serialize)]
struct Prop34Out {
    #[serde(rename = "N")]
    modulus: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<ReductionWitness>,
}

#[derive(Debug, Serialize)]
struct ConjectureOut {
    max: u64,
    primes: Vec<u64>,
}

#[derive(Debug, Serialize)]
struct ErrorOut<'a> {
    error: ErrorBody<'a>,
}

#[derive(Debug, Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::ModulusTooSmall(_) => "modulus_too_small",
        Error::EmptyChain => "empty_chain",
        Error::RingMismatch { .. } => "ring_mismatch",
        Error::TupleTooShort(_) => "tuple_too_short",
        Error::ZeroMonomial => "zero_monomial",
        Error::NotPrime(_) => "not_prime",
        Error::Precondition(_) => "precondition",
        Error::NotCoprime(..) => "not_coprime",
        Error::WitnessRejected(_) => "witness_rejected",
        Error::CorruptCheckpoint { .. } => "corrupt_checkpoint",
        Error::CheckpointMismatch { .. } => "checkpoint_mismatch",
        Error::Io(_) => "io",
        Error::Json(_) => "json",
        Error::Csv(_) => "csv",
    }
}

fn json_line<T: Serialize>(buf: &mut String, value: &T) -> Result<()> {
    buf.push_str(&serde_json::to_string(value)?);
    buf.push('\n');
    Ok(())
}

fn csv_block<T: Serialize>(buf: &mut String, rows: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    buf.push_str(&String::from_utf8(bytes).expect("csv output is utf-8"));
    Ok(())
}

fn ring_and_k(n: u64, k: i64) -> Result<(ResidueRing, u64)> {
    let ring = ResidueRing::new(n)?;
    let k = ring.reduce(k as i128);
    Ok((ring, k))
}

fn witness_text(w: &ReductionWitness) -> String {
    format!("x={} len={} sign={}", w.x, w.len, w.sign)
}

fn verdict_text(v: &ClassVerdict) -> String {
    match &v.counterexample {
        None => format!("N={} {}=true", v.modulus, v.kind),
        Some(c) => format!(
            "N={} {}=false k={} {}",
            v.modulus,
            v.kind,
            c.k,
            witness_text(&c.witness)
        ),
    }
}

fn constructed_text(w: &ConstructedWitness) -> String {
    let mut s = format!(
        "N={} k={} size={} sign={} x={} len={} reducer_sign={} source={}",
        w.modulus,
        w.k,
        w.size,
        w.size_sign,
        w.x(),
        w.reducer_len(),
        w.reducer_sign,
        w.source
    );
    if w.reducer_len() <= 32 {
        let entries: Vec<String> = w.reducer.entries().iter().map(u64::to_string).collect();
        let _ = write!(s, "\nreducer=({})", entries.join(","));
    }
    s
}

fn render_verdicts(buf: &mut String, format: Format, verdicts: &[ClassVerdict]) -> Result<()> {
    match format {
        Format::Text => {
            for v in verdicts {
                buf.push_str(&verdict_text(v));
                buf.push('\n');
            }
        }
        Format::Json => {
            for v in verdicts {
                json_line(buf, v)?;
            }
        }
        Format::Csv => {
            let rows: Vec<ScanRow> = verdicts.iter().map(ScanRow::from).collect();
            let mut out = Vec::new();
            let mut w = RowWriter::new(RowFormat::Csv, &mut out, true);
            for r in &rows {
                w.write(r)?;
            }
            w.flush()?;
            drop(w);
            buf.push_str(&String::from_utf8(out).expect("csv output is utf-8"));
        }
    }
    Ok(())
}

fn render_constructed(buf: &mut String, format: Format, w: &ConstructedWitness) -> Result<()> {
    match format {
        Format::Text => {
            buf.push_str(&constructed_text(w));
            buf.push('\n');
        }
        Format::Json => json_line(buf, w)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Flat {
                #[serde(rename = "N")]
                modulus: u64,
                k: u64,
                size: u64,
                sign: Sign,
                x: u64,
                len: usize,
                reducer_sign: Sign,
                source: String,
            }
            csv_block(
                buf,
                &[Flat {
                    modulus: w.modulus,
                    k: w.k,
                    size: w.size,
                    sign: w.size_sign,
                    x: w.x(),
                    len: w.reducer_len(),
                    reducer_sign: w.reducer_sign,
                    source: w.source.to_string(),
                }],
            )?;
        }
    }
    Ok(())
}

fn render_appendix(buf: &mut String, format: Format, table: &Appendix) -> Result<()> {
    fn tag_name<T: Serialize>(t: &T) -> String {
        serde_json::to_value(t)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default()
    }
    match (format, table) {
        (Format::Json, Appendix::A(rows)) => rows.iter().try_for_each(|r| json_line(buf, r)),
        (Format::Json, Appendix::B(rows)) => rows.iter().try_for_each(|r| json_line(buf, r)),
        (Format::Json, Appendix::C(rows)) => rows.iter().try_for_each(|r| json_line(buf, r)),
        (Format::Json, Appendix::D(rows)) => rows.iter().try_for_each(|r| json_line(buf, r)),
        (Format::Csv, Appendix::B(rows)) => csv_block(buf, rows),
        (Format::Csv, Appendix::A(rows)) => {
            let flat: Vec<(u64, String)> = rows.iter().map(|r| (r.modulus, tag_name(&r.tag))).collect();
            buf.push_str("N,tag\n");
            csv_block(buf, &flat)
        }
        (Format::Csv, Appendix::D(rows)) => {
            let flat: Vec<(u64, String)> = rows.iter().map(|r| (r.modulus, tag_name(&r.tag))).collect();
            buf.push_str("N,tag\n");
            csv_block(buf, &flat)
        }
        (Format::Csv, Appendix::C(rows)) => {
            let flat: Vec<(u64, String)> = rows
                .iter()
                .map(|r| {
                    let ks: Vec<String> = r.reducible.iter().map(u64::to_string).collect();
                    (r.modulus, ks.join(" "))
                })
                .collect();
            buf.push_str("N,reducible\n");
            csv_block(buf, &flat)
        }
        (Format::Text, Appendix::A(rows)) => {
            for r in rows {
                let _ = writeln!(buf, "{} {}", r.modulus, tag_name(&r.tag));
            }
            Ok(())
        }
        (Format::Text, Appendix::B(rows)) => {
            for OmegaEntry { modulus, phi, omega } in rows {
                let _ = writeln!(buf, "N={modulus} phi={phi} omega={omega}");
            }
            Ok(())
        }
        (Format::Text, Appendix::C(rows)) => {
            for r in rows {
                let ks: Vec<String> = r.reducible.iter().map(u64::to_string).collect();
                let _ = writeln!(buf, "N={}: {}", r.modulus, ks.join(" "));
            }
            Ok(())
        }
        (Format::Text, Appendix::D(rows)) => {
            for r in rows {
                let _ = writeln!(buf, "{} {}", r.modulus, tag_name(&r.tag));
            }
            Ok(())
        }
    }
}

/// Commands other than `scan`: the whole output is rendered before anything is
/// written, so a failure never leaves partial output behind.
fn render(format: Format, command: &Command) -> Result<String> {
    let mut buf = String::new();
    match command {
        Command::Size { n, k, fast } => {
            let (ring, k) = ring_and_k(*n, *k)?;
            let s = if *fast {
                minimal_size_prime_fast(*n, k)?
            } else {
                minimal_size(&ring, k)
            };
            let out = SizeOut {
                modulus: *n,
                k,
                size: s.size,
                sign: s.sign,
            };
            match format {
                Format::Text => {
                    let _ = writeln!(buf, "r={}\nsign={}", s.size, s.sign);
                }
                Format::Json => json_line(&mut buf, &out)?,
                Format::Csv => csv_block(&mut buf, &[out])?,
            }
        }
        Command::Report { n, k } => {
            let (ring, k) = ring_and_k(*n, *k)?;
            let rep = report(&ring, k);
            match format {
                Format::Text => {
                    let _ = write!(
                        buf,
                        "N={} k={} r={} sign={} irreducible={}",
                        rep.modulus, rep.k, rep.size, rep.sign, rep.irreducible
                    );
                    if let Some(w) = &rep.witness {
                        let _ = write!(buf, " witness: {}", witness_text(w));
                    }
                    buf.push('\n');
                }
                Format::Json => json_line(&mut buf, &rep)?,
                Format::Csv => {
                    #[derive(Serialize)]
                    struct Flat {
                        #[serde(rename = "N")]
                        modulus: u64,
                        k: u64,
                        size: u64,
                        sign: Sign,
                        irreducible: bool,
                        x: Option<u64>,
                        len: Option<u64>,
                        witness_sign: Option<Sign>,
                    }
                    let w = rep.witness;
                    csv_block(
                        &mut buf,
                        &[Flat {
                            modulus: rep.modulus,
                            k: rep.k,
                            size: rep.size,
                            sign: rep.sign,
                            irreducible: rep.irreducible,
                            x: w.map(|w| w.x),
                            len: w.map(|w| w.len),
                            witness_sign: w.map(|w| w.sign),
                        }],
                    )?;
                }
            }
        }
        Command::Reduce { n, k } => {
            let (ring, k) = ring_and_k(*n, *k)?;
            let witness = find_reduction(&ring, k)?;
            let out = ReduceOut {
                modulus: *n,
                k,
                irreducible: witness.is_none(),
                witness,
            };
            match format {
                Format::Text => {
                    let line = witness.as_ref().map_or_else(|| "irreducible".to_string(), witness_text);
                    let _ = writeln!(buf, "{line}");
                }
                Format::Json => json_line(&mut buf, &out)?,
                Format::Csv => {
                    #[derive(Serialize)]
                    struct Flat {
                        #[serde(rename = "N")]
                        modulus: u64,
                        k: u64,
                        irreducible: bool,
                        x: Option<u64>,
                        len: Option<u64>,
                        sign: Option<Sign>,
                    }
                    csv_block(
                        &mut buf,
                        &[Flat {
                            modulus: *n,
                            k,
                            irreducible: witness.is_none(),
                            x: witness.map(|w| w.x),
                            len: witness.map(|w| w.len),
                            sign: witness.map(|w| w.sign),
                        }],
                    )?;
                }
            }
        }
        Command::Classify { n, kind } => {
            let kinds: Vec<ClassKind> = match kind {
                Some(k) => vec![*k],
                None => ClassKind::ALL.to_vec(),
            };
            let verdicts = kinds
                .into_iter()
                .map(|k| decide(*n, k))
                .collect::<Result<Vec<_>>>()?;
            render_verdicts(&mut buf, format, &verdicts)?;
        }
        Command::Omega { n } => {
            let out = OmegaEntry {
                modulus: *n,
                phi: crate::arith::euler_phi(*n),
                omega: omega_count(*n)?,
            };
            match format {
                Format::Text => {
                    let _ = writeln!(buf, "omega={}", out.omega);
                }
                Format::Json => json_line(&mut buf, &out)?,
                Format::Csv => csv_block(&mut buf, &[out])?,
            }
        }
        Command::SizesTable { p } => {
            let rows: Vec<SizeRow> = sizes_table(*p)?
                .into_iter()
                .map(|(k, size)| SizeRow { k, size })
                .collect();
            match format {
                Format::Text => {
                    for r in &rows {
                        let _ = writeln!(buf, "k={} r={}", r.k, r.size);
                    }
                }
                Format::Json => rows.iter().try_for_each(|r| json_line(&mut buf, r))?,
                Format::Csv => csv_block(&mut buf, &rows)?,
            }
        }
        Command::Witness(w) => match w {
            WitnessCommand::Prop36 { n, m } => render_constructed(&mut buf, format, &witness_prop36(*n, *m)?)?,
            WitnessCommand::Prop51 { n, m } => render_constructed(&mut buf, format, &witness_prop51(*n, *m)?)?,
            WitnessCommand::Lemma41 { p, n, t, a } => {
                render_constructed(&mut buf, format, &witness_lemma41(*p, *n, *t, *a)?)?
            }
            WitnessCommand::Prop34 { n } => {
                let found = witness_prop34(*n)?;
                let out = Prop34Out {
                    modulus: *n,
                    k: found.map(|f| f.0),
                    witness: found.map(|f| f.1),
                };
                match format {
                    Format::Text => match found {
                        Some((k, w)) => {
                            let _ = writeln!(buf, "N={n} k={k} {}", witness_text(&w));
                        }
                        None => {
                            let _ = writeln!(buf, "N={n} none");
                        }
                    },
                    Format::Json => json_line(&mut buf, &out)?,
                    Format::Csv => {
                        let row = (*n, out.k, out.witness.map(|w| w.x), out.witness.map(|w| w.len));
                        buf.push_str("N,k,x,len\n");
                        csv_block(&mut buf, &[row])?;
                    }
                }
            }
        },
        Command::Appendix { which, workers } => {
            let table = emit_appendix(*which, worker_count(*workers))?;
            render_appendix(&mut buf, format, &table)?;
        }
        Command::Conjecture { max, workers } => {
            let primes = scan_conjecture(*max, worker_count(*workers))?;
            match format {
                Format::Text => {
                    let list: Vec<String> = primes.iter().map(u64::to_string).collect();
                    let _ = writeln!(buf, "{}", list.join(" "));
                }
                Format::Json => json_line(&mut buf, &ConjectureOut { max: *max, primes })?,
                Format::Csv => {
                    buf.push_str("p\n");
                    for p in primes {
                        let _ = writeln!(buf, "{p}");
                    }
                }
            }
        }
        Command::Scan(_) => unreachable!("scan streams its output"),
    }
    Ok(buf)
}

fn run_scan(format: Format, args: &ScanArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let job = ScanJob {
        kind: args.kind,
        lo: args.from,
        hi: args.to,
        chunk: args.chunk,
        workers: worker_count(args.workers),
        checkpoint: args.checkpoint.clone(),
        sync: args.sync,
        include_odd: args.include_odd,
        max_chunks: args.max_chunks,
    };
    let result = match &args.output {
        Some(path) => {
            // keep only rows covered by the checkpoint, then append
            let completed_to = match &args.checkpoint {
                Some(c) => read_checkpoint(c)?.map(|r| r.completed_to).unwrap_or(0),
                None => 0,
            };
            let has_content = trim_output(path, completed_to, format.row_format())?;
            let file = OpenOptions::new().create(true).append(true).open(path)?;
            let mut file = std::io::BufWriter::new(file);
            stream_rows(format, &job, &mut file, !has_content)?
        }
        None => stream_rows(format, &job, out, true)?,
    };
    writeln!(
        err,
        "completed_to={} rows={} anomalies={}{}",
        result.completed_to,
        result.rows.len(),
        result.anomalies.len(),
        if result.finished { "" } else { " (unfinished)" }
    )?;
    for a in &result.anomalies {
        writeln!(err, "anomaly: N={} verdict={} predicted={}", a.modulus, a.verdict, a.predicted)?;
    }
    Ok(if result.anomalies.is_empty() { EXIT_OK } else { EXIT_ANOMALY })
}

fn stream_rows<W: Write>(
    format: Format,
    job: &ScanJob,
    out: W,
    header: bool,
) -> Result<crate::scan::ScanResult> {
    let mut w = RowWriter::new(format.row_format(), out, header);
    let result = scan_class(job, |r| w.write(r))?;
    w.flush()?;
    Ok(result)
}

fn report_error(format: Format, e: &Error, err: &mut dyn Write) {
    let _ = match format {
        Format::Json => {
            let body = ErrorOut {
                error: ErrorBody {
                    kind: error_kind(e),
                    message: e.to_string(),
                },
            };
            writeln!(err, "{}", serde_json::to_string(&body).unwrap_or_default())
        }
        _ => writeln!(err, "error: {e}"),
    };
}

/// Parse `args` (program name first) and execute, returning the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let outcome = match &cli.command {
        Command::Scan(args) => run_scan(cli.format, args, out, err),
        other => render(cli.format, other).and_then(|text| {
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            report_error(cli.format, &e, err);
            EXIT_USAGE
        }
    }
}
