//! Interval scans with ordered output and resumable checkpoints, the prime
//! size conjecture search, and reproduction of the reference tables.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{euler_phi, is_prime};
use crate::classify::{
    decide, is_two_three, omega_count, predict_monomial, predict_quasi, predict_semi_odd,
    quasi_tag, reducible_set, semi_sufficient, semi_tag, ClassKind, ClassVerdict, QuasiTag,
    SemiTag,
};
use crate::error::{Error, Result};
use crate::prime_order::PrimeOrder;

pub const DEFAULT_CHUNK: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanJob {
    pub kind: ClassKind,
    pub lo: u64,
    pub hi: u64,
    pub chunk: u64,
    pub workers: usize,
    pub checkpoint: Option<PathBuf>,
    /// fsync the checkpoint after every record.
    pub sync: bool,
    /// Include odd N in semi scans.
    pub include_odd: bool,
    /// Stop after this many chunks (the checkpoint allows continuing later).
    pub max_chunks: Option<usize>,
}

impl ScanJob {
    pub fn new(kind: ClassKind, lo: u64, hi: u64) -> Self {
        ScanJob {
            kind,
            lo,
            hi,
            chunk: DEFAULT_CHUNK,
            workers: 1,
            checkpoint: None,
            sync: false,
            include_odd: false,
            max_chunks: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.lo < 2 {
            return Err(Error::Precondition(format!("scan must start at 2 or above, got {}", self.lo)));
        }
        if self.hi < self.lo {
            return Err(Error::Precondition(format!("empty range [{}, {}]", self.lo, self.hi)));
        }
        if self.chunk == 0 {
            return Err(Error::Precondition("chunk size must be positive".into()));
        }
        Ok(())
    }

    fn includes(&self, n: u64) -> bool {
        self.kind != ClassKind::Semi || self.include_odd || n % 2 == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowCounterexample {
    pub k: u64,
    pub x: u64,
    pub len: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    #[serde(rename = "N")]
    pub modulus: u64,
    pub kind: ClassKind,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<RowCounterexample>,
}

impl From<&ClassVerdict> for ScanRow {
    fn from(v: &ClassVerdict) -> Self {
        ScanRow {
            modulus: v.modulus,
            kind: v.kind,
            verdict: v.verdict,
            counterexample: v.counterexample.map(|c| RowCounterexample {
                k: c.k,
                x: c.witness.x,
                len: c.witness.len,
            }),
        }
    }
}

#[derive(Debug, Serialize)]
struct CsvRow {
    #[serde(rename = "N")]
    modulus: u64,
    kind: ClassKind,
    verdict: bool,
    k: Option<u64>,
    x: Option<u64>,
    len: Option<u64>,
}

impl ScanRow {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("rows serialize")
    }

    pub fn to_text_line(&self) -> String {
        match &self.counterexample {
            None => format!("N={} {}=true", self.modulus, self.kind),
            Some(c) => format!(
                "N={} {}=false k={} x={} len={}",
                self.modulus, self.kind, c.k, c.x, c.len
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowFormat {
    Json,
    Csv,
    Text,
}

impl RowFormat {
    /// The N of an encoded row; `None` for headers and unparsable lines.
    fn modulus_of(self, line: &str) -> Option<u64> {
        match self {
            RowFormat::Json => serde_json::from_str::<ScanRow>(line).ok().map(|r| r.modulus),
            RowFormat::Csv => line.split(',').next()?.parse().ok(),
            RowFormat::Text => line.strip_prefix("N=")?.split(' ').next()?.parse().ok(),
        }
    }
}

/// Encodes rows as JSON lines, CSV (header first) or text lines.
pub struct RowWriter<W: Write> {
    inner: RowSink<W>,
}

enum RowSink<W: Write> {
    Json(W),
    Csv(Box<csv::Writer<W>>),
    Text(W),
}

impl<W: Write> RowWriter<W> {
    /// `header` is false when appending to an existing CSV file.
    pub fn new(format: RowFormat, w: W, header: bool) -> Self {
        let inner = match format {
            RowFormat::Json => RowSink::Json(w),
            RowFormat::Text => RowSink::Text(w),
            RowFormat::Csv => {
                RowSink::Csv(Box::new(csv::WriterBuilder::new().has_headers(header).from_writer(w)))
            }
        };
        RowWriter { inner }
    }

    pub fn write(&mut self, row: &ScanRow) -> Result<()> {
        match &mut self.inner {
            RowSink::Json(w) => writeln!(w, "{}", row.to_json_line())?,
            RowSink::Text(w) => writeln!(w, "{}", row.to_text_line())?,
            RowSink::Csv(w) => {
                let c = row.counterexample;
                w.serialize(CsvRow {
                    modulus: row.modulus,
                    kind: row.kind,
                    verdict: row.verdict,
                    k: c.map(|c| c.k),
                    x: c.map(|c| c.x),
                    len: c.map(|c| c.len),
                })?
            }
        }
        Ok(())
    }

    pub fn flush(&mut self) -> Result<()> {
        match &mut self.inner {
            RowSink::Json(w) | RowSink::Text(w) => w.flush()?,
            RowSink::Csv(w) => w.flush()?,
        }
        Ok(())
    }
}

/// A disagreement between a computed verdict and the closed-form prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anomaly {
    #[serde(rename = "N")]
    pub modulus: u64,
    pub verdict: bool,
    pub predicted: bool,
}

/// For semi scans the prediction is only checked where one exists: odd N, or
/// members of the sufficient families.
pub fn predicted(kind: ClassKind, n: u64) -> Option<bool> {
    match kind {
        ClassKind::Monomial => Some(predict_monomial(n)),
        ClassKind::Quasi => Some(predict_quasi(n)),
        ClassKind::Semi => predict_semi_odd(n).or_else(|| semi_sufficient(n).then_some(true)),
    }
}

fn anomaly(kind: ClassKind, v: &ClassVerdict) -> Option<Anomaly> {
    predicted(kind, v.modulus)
        .filter(|&p| p != v.verdict)
        .map(|p| Anomaly {
            modulus: v.modulus,
            verdict: v.verdict,
            predicted: p,
        })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckpointRecord {
    pub job: ClassKind,
    pub lo: u64,
    pub hi: u64,
    pub completed_to: u64,
    pub anomalies: Vec<Anomaly>,
}

/// Last record of a checkpoint file, or `None` if the file is missing or empty.
pub fn read_checkpoint(path: &Path) -> Result<Option<CheckpointRecord>> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let mut last = None;
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        let record: CheckpointRecord =
            serde_json::from_str(&line).map_err(|e| Error::CorruptCheckpoint {
                path: path.to_path_buf(),
                line: i + 1,
                reason: e.to_string(),
            })?;
        last = Some(record);
    }
    Ok(last)
}

/// First N still to be scanned for `job`, given its checkpoint.
pub fn resume_point(job: &ScanJob) -> Result<(u64, Vec<Anomaly>)> {
    let Some(path) = &job.checkpoint else {
        return Ok((job.lo, Vec::new()));
    };
    match read_checkpoint(path)? {
        None => Ok((job.lo, Vec::new())),
        Some(rec) => {
            if rec.job != job.kind || rec.lo != job.lo || rec.hi != job.hi {
                return Err(Error::CheckpointMismatch {
                    path: path.clone(),
                    reason: format!(
                        "checkpoint is for {} [{}, {}], job is {} [{}, {}]",
                        rec.job, rec.lo, rec.hi, job.kind, job.lo, job.hi
                    ),
                });
            }
            if rec.completed_to < job.lo.saturating_sub(1) || rec.completed_to > job.hi {
                return Err(Error::CheckpointMismatch {
                    path: path.clone(),
                    reason: format!("completed_to {} outside the range", rec.completed_to),
                });
            }
            Ok((rec.completed_to + 1, rec.anomalies))
        }
    }
}

/// Drop rows with `N > completed_to` from an output file written by an
/// interrupted scan. Returns whether any content (header or rows) remains.
pub fn trim_output(path: &Path, completed_to: u64, format: RowFormat) -> Result<bool> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(false),
        Err(e) => return Err(e.into()),
    };
    let mut kept = String::new();
    for (i, line) in text.lines().enumerate() {
        let keep = if format == RowFormat::Csv && i == 0 {
            true
        } else {
            format.modulus_of(line).is_some_and(|n| n <= completed_to)
        };
        if !keep {
            break;
        }
        kept.push_str(line);
        kept.push('\n');
    }
    std::fs::write(path, &kept)?;
    Ok(!kept.is_empty())
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ScanResult {
    /// Rows produced by this run (not those from before a resume).
    pub rows: Vec<ScanRow>,
    /// All anomalies of the job so far, including those restored from the checkpoint.
    pub anomalies: Vec<Anomaly>,
    pub completed_to: u64,
    /// Whether the whole range has been covered.
    pub finished: bool,
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))
}

/// Decide every N of the job, handing rows to `emit` in ascending order and
/// appending one checkpoint record per chunk.
pub fn scan_class(job: &ScanJob, mut emit: impl FnMut(&ScanRow) -> Result<()>) -> Result<ScanResult> {
    job.validate()?;
    let (start, mut anomalies) = resume_point(job)?;
    let mut checkpoint = match &job.checkpoint {
        Some(p) => Some(OpenOptions::new().create(true).append(true).open(p)?),
        None => None,
    };
    let pool = pool(job.workers)?;
    let mut result = ScanResult {
        completed_to: start - 1,
        ..Default::default()
    };
    let mut chunk_lo = start;
    let mut chunks_done = 0usize;
    let wave_len = job.workers.max(1) * 2;
    while chunk_lo <= job.hi {
        let mut bounds = Vec::new();
        let mut lo = chunk_lo;
        while lo <= job.hi && bounds.len() < wave_len {
            if job.max_chunks.is_some_and(|m| chunks_done + bounds.len() >= m) {
                break;
            }
            let hi = lo.saturating_add(job.chunk - 1).min(job.hi);
            bounds.push((lo, hi));
            lo = hi + 1;
        }
        if bounds.is_empty() {
            break;
        }
        let last = bounds.last().expect("nonempty").1;
        let ns: Vec<u64> = (chunk_lo..=last).filter(|&n| job.includes(n)).collect();
        let verdicts: Vec<ClassVerdict> = pool.install(|| {
            ns.par_iter()
                .map(|&n| decide(n, job.kind))
                .collect::<Result<Vec<_>>>()
        })?;
        let mut iter = verdicts.iter().peekable();
        for (_, hi) in bounds {
            while let Some(v) = iter.next_if(|v| v.modulus <= hi) {
                let row = ScanRow::from(v);
                emit(&row)?;
                anomalies.extend(anomaly(job.kind, v));
                result.rows.push(row);
            }
            if let Some(file) = checkpoint.as_mut() {
                let record = CheckpointRecord {
                    job: job.kind,
                    lo: job.lo,
                    hi: job.hi,
                    completed_to: hi,
                    anomalies: anomalies.clone(),
                };
                writeln!(file, "{}", serde_json::to_string(&record)?)?;
                file.flush()?;
                if job.sync {
                    file.sync_data()?;
                }
            }
            result.completed_to = hi;
            chunks_done += 1;
        }
        chunk_lo = last + 1;
    }
    result.finished = result.completed_to >= job.hi;
    result.anomalies = anomalies;
    Ok(result)
}

/// Primes `p <= max_prime` none of whose minimal sizes is `≡ 2 (mod 4)`.
pub fn scan_conjecture(max_prime: u64, workers: usize) -> Result<Vec<u64>> {
    if max_prime < 3 {
        return Err(Error::Precondition(format!("max prime must be at least 3, got {max_prime}")));
    }
    let primes: Vec<u64> = (3..=max_prime).filter(|&p| is_prime(p)).collect();
    let keep = pool(workers)?.install(|| {
        primes
            .par_iter()
            .map(|&p| conjecture_holds(p))
            .collect::<Result<Vec<bool>>>()
    })?;
    Ok(primes.into_iter().zip(keep).filter_map(|(p, k)| k.then_some(p)).collect())
}

/// Whether every `k` in `[1, (p−1)/2]` has minimal size `≢ 2 (mod 4)`.
pub fn conjecture_holds(p: u64) -> Result<bool> {
    let po = PrimeOrder::new(p)?;
    Ok((1..=(p - 1) / 2).all(|k| po.minimal_size(k).size % 4 != 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiEntry {
    #[serde(rename = "N")]
    pub modulus: u64,
    pub tag: QuasiTag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaEntry {
    #[serde(rename = "N")]
    pub modulus: u64,
    pub phi: u64,
    pub omega: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibleEntry {
    #[serde(rename = "N")]
    pub modulus: u64,
    pub reducible: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiEntry {
    #[serde(rename = "N")]
    pub modulus: u64,
    pub tag: SemiTag,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "appendix", content = "rows")]
pub enum Appendix {
    A(Vec<QuasiEntry>),
    B(Vec<OmegaEntry>),
    C(Vec<ReducibleEntry>),
    D(Vec<SemiEntry>),
}

pub const APPENDIX_A_MAX: u64 = 1000;
pub const APPENDIX_B_MAX: u64 = 1000;
pub const APPENDIX_C_MODULI: [u64; 6] = [48, 108, 192, 216, 384, 864];
pub const APPENDIX_D_MAX: u64 = 2500;

fn members(kind: ClassKind, hi: u64, workers: usize) -> Result<Vec<u64>> {
    let mut job = ScanJob::new(kind, 2, hi);
    job.workers = workers;
    let result = scan_class(&job, |_| Ok(()))?;
    Ok(result.rows.iter().filter(|r| r.verdict).map(|r| r.modulus).collect())
}

/// Regenerate one of the reference tables.
pub fn emit_appendix(which: char, workers: usize) -> Result<Appendix> {
    match which.to_ascii_uppercase() {
        'A' => Ok(Appendix::A(
            members(ClassKind::Quasi, APPENDIX_A_MAX, workers)?
                .into_iter()
                .map(|n| QuasiEntry {
                    modulus: n,
                    tag: quasi_tag(n).expect("quasi members are prime powers or 2^n3^m"),
                })
                .collect(),
        )),
        'B' => {
            let ns: Vec<u64> = (2..=APPENDIX_B_MAX).filter(|&n| is_two_three(n)).collect();
            let rows = pool(workers)?.install(|| {
                ns.par_iter()
                    .map(|&n| {
                        Ok(OmegaEntry {
                            modulus: n,
                            phi: euler_phi(n),
                            omega: omega_count(n)?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })?;
            Ok(Appendix::B(rows))
        }
        'C' => {
            let rows = pool(workers)?.install(|| {
                APPENDIX_C_MODULI
                    .par_iter()
                    .map(|&n| {
                        Ok(ReducibleEntry {
                            modulus: n,
                            reducible: reducible_set(n)?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })?;
            Ok(Appendix::C(rows))
        }
        'D' => Ok(Appendix::D(
            members(ClassKind::Semi, APPENDIX_D_MAX, workers)?
                .into_iter()
                .filter(|&n| n % 2 == 0 && n >= 4)
                .map(|n| SemiEntry {
                    modulus: n,
                    tag: semi_tag(n),
                })
                .collect(),
        )),
        other => Err(Error::Precondition(format!("unknown appendix {other:?} (A|B|C|D)"))),
    }
}
