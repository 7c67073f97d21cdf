//! Parameter sweeps producing CSV reports.

use std::fs;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::{
    check_bracket_lemmas, check_connectivity_extremality, check_connectivity_theorem,
    check_edge_theorem, check_family_extremality, check_spectral_theorem, check_split_dominance,
    connectivity_hypotheses, BracketVariant,
};
use super::hunt::search_minimal_packing;
use super::record::{csv_field, StatementId, VerificationRecord, Verdict};
use super::sample::{graph_with_min_degree, sample_connectivity_class_with};
use crate::error::{Error, Result};
use crate::extremal::enumerate_family;
use crate::graph::parse_graph6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SweepMode {
    FamilyExhaustive,
    RandomSample,
    Graph6Stream,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub statement: StatementId,
    pub ns: Vec<usize>,
    pub deltas: Vec<usize>,
    /// `k` or `κ′`, depending on the statement.
    pub ks: Vec<usize>,
    pub mode: SweepMode,
    /// Random graphs per grid point, or the evaluation budget of a hunt.
    pub sample_count: usize,
    pub seed: u64,
    /// CSV destination; the report is returned either way.
    pub output: Option<PathBuf>,
    /// Directory receiving one text file per witness.
    pub witness_dir: Option<PathBuf>,
    /// graph6 file read in stream mode.
    pub input: Option<PathBuf>,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
}

impl SweepConfig {
    pub fn new(statement: StatementId, mode: SweepMode) -> Self {
        SweepConfig {
            statement,
            ns: Vec::new(),
            deltas: Vec::new(),
            ks: Vec::new(),
            mode,
            sample_count: 0,
            seed: 0,
            output: None,
            witness_dir: None,
            input: None,
            jobs: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub records: Vec<VerificationRecord>,
    pub csv: String,
    /// Sampler shortfalls and similar notes.
    pub diagnostics: Vec<String>,
}

impl SweepReport {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.records.iter().filter(|r| r.verdict == verdict).count()
    }
}

/// Whether a grid point satisfies the statement's hypotheses.
pub fn admissible(statement: StatementId, n: usize, delta: usize, k: usize) -> bool {
    use StatementId::*;
    match statement {
        T1_1 => k >= 1 && delta >= 2 * k && n >= 2 * delta + 2,
        T1_2 | L2_3 | L2_5 | L2_6 => k >= 2 && delta >= 2 * k && n >= 2 * delta + 3,
        T1_3 | L3_2 | L3_3 => connectivity_hypotheses(n, delta, k).is_ok(),
        P5_2 | P5_3 => k >= 1 && n >= 2 * k,
    }
}

/// Grid points in deterministic order (`n`, then `δ`, then `k`) that pass
/// [`admissible`]. The hunt statements ignore `δ`.
pub fn grid_points(config: &SweepConfig) -> Vec<(usize, usize, usize)> {
    let deltas: &[usize] = match config.statement {
        StatementId::P5_2 | StatementId::P5_3 => &[0],
        _ => &config.deltas,
    };
    let mut out = Vec::new();
    for &n in &config.ns {
        for &delta in deltas {
            for &k in &config.ks {
                if admissible(config.statement, n, delta, k) {
                    out.push((n, delta, k));
                }
            }
        }
    }
    out
}

/// Seed for one grid point, mixed from the sweep seed so that points are
/// independent of evaluation order.
pub fn point_seed(seed: u64, n: usize, delta: usize, k: usize) -> u64 {
    let mut z = seed ^ ((n as u64) << 40) ^ ((delta as u64) << 20) ^ k as u64;
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Attempts per random graph before the generator gives up.
const GENERATOR_ATTEMPTS: usize = 10_000;

type PointOutput = (Vec<VerificationRecord>, Vec<String>);

fn family_members(n: usize, delta: usize, is: &[usize]) -> Result<Vec<crate::graph::Graph>> {
    let mut out = Vec::new();
    for &i in is {
        for a in delta + 1..=n / 2 {
            out.extend(enumerate_family(n, a, i)?.into_iter().map(|m| m.graph));
        }
    }
    Ok(out)
}

fn run_point(config: &SweepConfig, n: usize, delta: usize, k: usize) -> Result<PointOutput> {
    use StatementId::*;
    let seed = point_seed(config.seed, n, delta, k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let family = config.mode == SweepMode::FamilyExhaustive;
    let mut notes = Vec::new();
    let records = match config.statement {
        T1_1 | T1_2 if family => {
            let members = family_members(n, delta, &[k - 1, k])?;
            members
                .iter()
                .map(|g| match config.statement {
                    T1_1 => check_edge_theorem(g, k),
                    _ => check_spectral_theorem(g, k),
                })
                .collect()
        }
        T1_1 | T1_2 => {
            let mut out = Vec::with_capacity(config.sample_count);
            for _ in 0..config.sample_count {
                let Some(g) = graph_with_min_degree(n, delta, 0.3, GENERATOR_ATTEMPTS, &mut rng) else {
                    notes.push(format!("no graph with n={n} min degree {delta} within budget"));
                    break;
                };
                out.push(match config.statement {
                    T1_1 => check_edge_theorem(&g, k),
                    _ => check_spectral_theorem(&g, k),
                });
            }
            out
        }
        T1_3 if family => {
            let mut out: Vec<_> = family_members(n, delta, &[k])?
                .iter()
                .map(check_connectivity_theorem)
                .collect();
            out.push(check_connectivity_extremality(n, delta, k)?.record);
            out
        }
        T1_3 => {
            let stream = sample_connectivity_class_with(n, delta, k, config.sample_count, &mut rng)?;
            notes.extend(stream.diagnostic);
            stream.records
        }
        L2_3 | L3_2 | L2_5 | L2_6 | L3_3 if !family => {
            return Err(Error::InvalidParameter(format!(
                "{} is checked over its family only; use family mode",
                config.statement
            )))
        }
        L2_3 => vec![check_bracket_lemmas(n, delta, k - 1, BracketVariant::L2_3)?],
        L3_2 => vec![check_bracket_lemmas(n, delta, k, BracketVariant::L3_2)?],
        L2_5 => vec![check_family_extremality(n, delta, k - 1)?.record],
        L2_6 => vec![check_split_dominance(n, delta, k - 1)?.record],
        L3_3 => vec![check_connectivity_extremality(n, delta, k)?.record],
        P5_2 | P5_3 => {
            let report = search_minimal_packing(n, k, config.sample_count as u64, seed)?;
            if report.partial {
                notes.push(format!(
                    "hunt n={n} k={k}: partial search, {} evaluations",
                    report.evaluated
                ));
            }
            match config.statement {
                P5_2 => vec![report.record()],
                _ => vec![report.arboricity_record()],
            }
        }
    };
    Ok((records, notes))
}

fn run_stream(config: &SweepConfig, path: &Path) -> Result<Vec<VerificationRecord>> {
    let io = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let reader = BufReader::new(fs::File::open(path).map_err(io)?);
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line.map_err(io)?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line)?;
        match config.statement {
            StatementId::T1_1 => out.extend(config.ks.iter().map(|&k| check_edge_theorem(&g, k))),
            StatementId::T1_2 => out.extend(config.ks.iter().map(|&k| check_spectral_theorem(&g, k))),
            StatementId::T1_3 => out.push(check_connectivity_theorem(&g)),
            other => {
                return Err(Error::InvalidParameter(format!(
                    "{other} does not take graph input; stream mode supports T1.1, T1.2, T1.3"
                )))
            }
        }
    }
    Ok(out)
}

/// CSV text: header, one row per record, and a summary row when there is at
/// least one record.
pub fn render_csv(records: &[VerificationRecord], witness_paths: &[Option<String>]) -> String {
    let mut csv = String::from(VerificationRecord::CSV_HEADER);
    csv.push('\n');
    for (r, path) in records.iter().zip(witness_paths) {
        csv.push_str(&r.csv_row(path.as_deref()));
        csv.push('\n');
    }
    if !records.is_empty() {
        let count = |v| records.iter().filter(|r| r.verdict == v).count();
        csv.push_str(&format!(
            "SUMMARY,,,,,,,{},{},\n",
            records.len(),
            csv_field(&format!(
                "CONSISTENT={} COUNTEREXAMPLE={} INDETERMINATE={}",
                count(Verdict::Consistent),
                count(Verdict::Counterexample),
                count(Verdict::Indeterminate)
            ))
        ));
    }
    csv
}

fn write_witnesses(dir: &Path, records: &[VerificationRecord]) -> Result<Vec<Option<String>>> {
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| Error::Io { path, source }
    };
    fs::create_dir_all(dir).map_err(io(dir))?;
    records
        .iter()
        .enumerate()
        .map(|(row, r)| {
            let Some(w) = &r.witness else {
                return Ok(None);
            };
            let path = dir.join(format!("{}_{row:06}.txt", r.statement.as_str().replace('.', "_")));
            fs::write(&path, format!("{}\n{}\n", r.graph6, w)).map_err(io(&path))?;
            Ok(Some(path.display().to_string()))
        })
        .collect()
}

/// Runs every admissible grid point (or every line of the input stream),
/// distributing grid points over `jobs` workers and collecting in grid
/// order. Output is byte-identical for identical configurations.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    let mut diagnostics = Vec::new();
    let records = if config.mode == SweepMode::Graph6Stream {
        let path = config
            .input
            .as_deref()
            .ok_or_else(|| Error::InvalidParameter("stream mode needs an input file".into()))?;
        run_stream(config, path)?
    } else {
        let points = grid_points(config);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?;
        let outputs: Vec<Result<PointOutput>> = pool.install(|| {
            points
                .par_iter()
                .map(|&(n, delta, k)| run_point(config, n, delta, k))
                .collect()
        });
        let mut records = Vec::new();
        for out in outputs {
            let (r, notes) = out?;
            records.extend(r);
            diagnostics.extend(notes);
        }
        records
    };
    let witness_paths = match &config.witness_dir {
        Some(dir) => write_witnesses(dir, &records)?,
        None => vec![None; records.len()],
    };
    let csv = render_csv(&records, &witness_paths);
    if let Some(path) = &config.output {
        fs::write(path, &csv).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })?;
    }
    Ok(SweepReport {
        records,
        csv,
        diagnostics,
    })
}
