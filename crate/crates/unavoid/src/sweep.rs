//! Exhaustive runs over the conjecture region, persisted as checksummed
//! tab-separated records.
//!
//! The file starts with one `#` header line naming the tool version, the
//! `m` range and a hash of the pattern registry. Each following line is
//!
//! ```text
//! m  x1  y1  verdict  period  certificate  families  millis  checksum
//! ```
//!
//! with `-` for absent fields. `checksum` is the first 16 hex digits of the
//! SHA-256 of everything before it on the line. Records appear in `(m, x1, y1)`
//! order whatever the number of workers, and `millis` is only filled in when
//! timings are requested, so two runs over the same range produce the same
//! bytes.

use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};
use unavoid_core::decide::{decide_bounded_period, Verdict};
use unavoid_core::patterns::{match_with, registry, Catalog, MatchOptions};
use unavoid_core::theory::{conjecture_region, ConjectureInstance};
use unavoid_core::{Alphabet, PeriodicWord};

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] unavoid_core::Error),
    #[error("{path}: header {found:?} does not match this run ({expected:?})")]
    HeaderMismatch { path: PathBuf, expected: String, found: String },
    #[error("line {line}: {reason}")]
    Corrupt { line: usize, reason: String },
    #[error("line {line} ({instance}): {reason}")]
    Verification { line: usize, instance: String, reason: String },
}

pub type Result<T> = std::result::Result<T, SweepError>;

/// Every region instance with `m_lo <= m <= m_hi`, ordered by `(m, x1, y1)`.
pub fn enumerate_instances(m_lo: usize, m_hi: usize) -> Result<Vec<ConjectureInstance>> {
    Ok(conjecture_region(m_lo, m_hi)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecordVerdict {
    Avoidable { period: usize, certificate: String },
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRecord {
    pub instance: ConjectureInstance,
    pub verdict: RecordVerdict,
    pub families: Vec<String>,
    pub millis: Option<u64>,
}

fn checksum(body: &str) -> String {
    Sha256::digest(body.as_bytes())[..8].iter().map(|b| format!("{b:02x}")).collect()
}

impl SweepRecord {
    pub fn to_line(&self) -> String {
        let i = self.instance;
        let (verdict, period, cert) = match &self.verdict {
            RecordVerdict::Avoidable { period, certificate } => ("Avoidable", period.to_string(), certificate.as_str()),
            RecordVerdict::Unknown => ("Unknown", "-".to_string(), "-"),
        };
        let families = if self.families.is_empty() { "-".to_string() } else { self.families.join(",") };
        let millis = self.millis.map_or("-".to_string(), |t| t.to_string());
        let body = format!("{}\t{}\t{}\t{verdict}\t{period}\t{cert}\t{families}\t{millis}", i.m, i.x1, i.y1);
        let sum = checksum(&body);
        format!("{body}\t{sum}")
    }

    pub fn parse_line(line: &str, n: usize) -> Result<SweepRecord> {
        let corrupt = |reason: &str| SweepError::Corrupt {
            line: n,
            reason: reason.to_string(),
        };
        let (body, sum) = line.rsplit_once('\t').ok_or_else(|| corrupt("missing checksum"))?;
        if checksum(body) != sum {
            return Err(corrupt("checksum mismatch"));
        }
        let f: Vec<&str> = body.split('\t').collect();
        if f.len() != 8 {
            return Err(corrupt("expected 9 tab-separated fields"));
        }
        let num = |s: &str| s.parse::<usize>().map_err(|_| corrupt("bad number"));
        let instance = ConjectureInstance::new(num(f[0])?, num(f[1])?, num(f[2])?).map_err(|e| corrupt(&e.to_string()))?;
        let verdict = match f[3] {
            "Avoidable" => RecordVerdict::Avoidable {
                period: num(f[4])?,
                certificate: f[5].to_string(),
            },
            "Unknown" => RecordVerdict::Unknown,
            _ => return Err(corrupt("bad verdict")),
        };
        let families = if f[6] == "-" { Vec::new() } else { f[6].split(',').map(String::from).collect() };
        let millis = if f[7] == "-" { None } else { Some(num(f[7])? as u64) };
        Ok(SweepRecord {
            instance,
            verdict,
            families,
            millis,
        })
    }

    /// Whether the certificate, if any, avoids the instance's set with
    /// period below `2m`.
    pub fn check(&self) -> std::result::Result<(), String> {
        match &self.verdict {
            RecordVerdict::Avoidable { period, certificate } => {
                let m = self.instance.m;
                if *period >= 2 * m {
                    return Err(format!("period {period} is not below 2m = {}", 2 * m));
                }
                let w = PeriodicWord::parse(Alphabet::new(3).expect("3 letters"), certificate).map_err(|e| e.to_string())?;
                if w.period() != *period {
                    return Err(format!("certificate has period {}, record says {period}", w.period()));
                }
                if !w.avoids_set(&self.instance.set()).map_err(|e| e.to_string())? {
                    return Err(format!("certificate {certificate} meets the set"));
                }
                Ok(())
            }
            RecordVerdict::Unknown if !self.families.is_empty() => Err("matched families without a certificate".into()),
            RecordVerdict::Unknown => Ok(()),
        }
    }
}

/// Hash of every family's id, shape, flags and strength.
pub fn registry_hash() -> String {
    let mut h = Sha256::new();
    for f in registry() {
        h.update(format!("{}|{}|{:?}|{:?}|{}|{}\n", f.id, f.shape, f.target, f.strength, f.quarantined, f.experimental));
    }
    h.finalize()[..8].iter().map(|b| format!("{b:02x}")).collect()
}

pub fn header(m_lo: usize, m_hi: usize) -> String {
    format!(
        "#unavoid-sweep\tversion={}\tm={m_lo}..={m_hi}\tregistry={}\tperiod<2m",
        env!("CARGO_PKG_VERSION"),
        registry_hash()
    )
}

fn parse_header(line: &str) -> Option<(usize, usize)> {
    let range = line.split('\t').find_map(|f| f.strip_prefix("m="))?;
    let (lo, hi) = range.split_once("..=")?;
    Some((lo.parse().ok()?, hi.parse().ok()?))
}

/// Decides one instance: pattern families first, then a period search below
/// `2m`.
pub fn decide_instance(catalog: &Catalog, inst: ConjectureInstance, timings: bool) -> Result<SweepRecord> {
    let start = Instant::now();
    let report = match_with(catalog, inst, MatchOptions::default())?;
    let families: Vec<String> = report.family_ids().into_iter().map(String::from).collect();
    let bound = 2 * inst.m - 1;
    let best = report.matches.iter().map(|m| &m.word).filter(|w| w.period() <= bound).min_by_key(|w| w.period());
    let verdict = match best {
        Some(w) => RecordVerdict::Avoidable {
            period: w.period(),
            certificate: w.to_string(),
        },
        None => match decide_bounded_period(&inst.set(), bound) {
            Verdict::Avoidable(c) => RecordVerdict::Avoidable {
                period: c.period(),
                certificate: c.word().to_string(),
            },
            _ => RecordVerdict::Unknown,
        },
    };
    Ok(SweepRecord {
        instance: inst,
        verdict,
        families,
        millis: timings.then(|| start.elapsed().as_millis() as u64),
    })
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub m_lo: usize,
    pub m_hi: usize,
    pub out: PathBuf,
    pub resume: bool,
    /// Worker threads; 0 uses one per core.
    pub jobs: usize,
    pub timings: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    /// `None` for an empty records file.
    pub m_range: Option<(usize, usize)>,
    pub total: usize,
    pub avoidable: usize,
    pub unknown: usize,
    pub uncovered: Vec<ConjectureInstance>,
    /// Records whose certificate was re-checked.
    pub verified: usize,
}

impl SweepReport {
    fn add(&mut self, r: &SweepRecord) {
        self.total += 1;
        match r.verdict {
            RecordVerdict::Avoidable { .. } => {
                self.avoidable += 1;
                if r.families.is_empty() {
                    self.uncovered.push(r.instance);
                }
            }
            RecordVerdict::Unknown => self.unknown += 1,
        }
    }
}

impl std::fmt::Display for SweepReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.m_range {
            Some((lo, hi)) => writeln!(f, "m range: {lo}..={hi}")?,
            None => writeln!(f, "m range: none")?,
        }
        writeln!(f, "total: {}", self.total)?;
        writeln!(f, "avoidable: {}", self.avoidable)?;
        writeln!(f, "unknown: {}", self.unknown)?;
        writeln!(f, "uncovered: {}", self.uncovered.len())?;
        for i in &self.uncovered {
            writeln!(f, "  {i}")?;
        }
        Ok(())
    }
}

/// Reads the records already in `path`, checking that they are exactly the
/// first instances of `expected`. Returns them with the byte length of the
/// valid prefix; a final line without a newline is an interrupted write and
/// is dropped.
fn read_existing(path: &Path, head: &str, expected: &[ConjectureInstance]) -> Result<(Vec<SweepRecord>, u64)> {
    let mut text = String::new();
    File::open(path)?.read_to_string(&mut text)?;
    if text.is_empty() {
        return Ok((Vec::new(), 0));
    }
    let mut records = Vec::new();
    let mut offset = 0u64;
    for (i, chunk) in text.split_inclusive('\n').enumerate() {
        let Some(line) = chunk.strip_suffix('\n') else {
            break;
        };
        if i == 0 {
            if line != head {
                return Err(SweepError::HeaderMismatch {
                    path: path.to_path_buf(),
                    expected: head.to_string(),
                    found: line.to_string(),
                });
            }
        } else {
            let r = SweepRecord::parse_line(line, i + 1)?;
            if expected.get(records.len()) != Some(&r.instance) {
                return Err(SweepError::Corrupt {
                    line: i + 1,
                    reason: format!("{} is out of order", r.instance),
                });
            }
            r.check().map_err(|reason| SweepError::Verification {
                line: i + 1,
                instance: r.instance.to_string(),
                reason,
            })?;
            records.push(r);
        }
        offset += chunk.len() as u64;
    }
    Ok((records, offset))
}

const CHUNK: usize = 256;

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    let instances = enumerate_instances(cfg.m_lo, cfg.m_hi)?;
    let head = header(cfg.m_lo, cfg.m_hi);
    let mut report = SweepReport {
        m_range: Some((cfg.m_lo, cfg.m_hi)),
        ..SweepReport::default()
    };
    let (done, offset) = if cfg.resume && cfg.out.exists() {
        read_existing(&cfg.out, &head, &instances)?
    } else {
        (Vec::new(), 0)
    };
    let mut file = OpenOptions::new().create(true).write(true).truncate(false).open(&cfg.out)?;
    file.set_len(offset)?;
    file.seek(SeekFrom::Start(offset))?;
    let mut out = BufWriter::new(file);
    if offset == 0 {
        writeln!(out, "{head}")?;
    }
    for r in &done {
        report.add(r);
    }

    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build().map_err(|e| std::io::Error::other(e.to_string()))?;
    let todo = &instances[done.len()..];
    let opts = MatchOptions::default();
    let mut catalog: Option<Catalog> = None;
    for chunk in todo.chunks(CHUNK) {
        // Catalogs are per m; a chunk may straddle several values.
        let mut ms: Vec<usize> = chunk.iter().map(|i| i.m).collect();
        ms.dedup();
        let catalogs: Vec<Catalog> = ms
            .iter()
            .map(|&m| match catalog.take() {
                Some(c) if c.m() == m => c,
                _ => Catalog::new(m, opts),
            })
            .collect();
        let records: Vec<Result<SweepRecord>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|&inst| {
                    let c = catalogs.iter().find(|c| c.m() == inst.m).expect("catalog built for every m in the chunk");
                    decide_instance(c, inst, cfg.timings)
                })
                .collect()
        });
        for r in records {
            let r = r?;
            writeln!(out, "{}", r.to_line())?;
            report.add(&r);
        }
        out.flush()?;
        catalog = catalogs.into_iter().last();
    }
    out.flush()?;
    Ok(report)
}

/// Recounts a records file and re-checks a random `sample` fraction of its
/// certificates (all of them at `1.0`).
pub fn summarize(path: &Path, sample: f64, seed: u64) -> Result<SweepReport> {
    let mut text = String::new();
    File::open(path)?.read_to_string(&mut text)?;
    let mut report = SweepReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (i, line) in text.lines().enumerate() {
        let n = i + 1;
        if i == 0 {
            report.m_range = Some(parse_header(line).ok_or_else(|| SweepError::Corrupt {
                line: n,
                reason: "bad header".into(),
            })?);
            continue;
        }
        let r = SweepRecord::parse_line(line, n)?;
        if rng.random_bool(sample.clamp(0.0, 1.0)) {
            r.check().map_err(|reason| SweepError::Verification {
                line: n,
                instance: r.instance.to_string(),
                reason,
            })?;
            report.verified += 1;
        }
        report.add(&r);
    }
    Ok(report)
}
