//! Empirical scaling harness.
//!
//! Each grid cell generates one instance with a fixed seed and times index
//! construction (substitution plus LCE index) and search (kangaroo search
//! plus filter) `reps` times each. Medians are reported. Every run also checks the machine-independent bound of at most
//! `(k + 1)(n - m + 1)` LCE queries.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::error::MatchError;
use crate::lce::LceIndex;
use crate::matcher::{
    build_index, filter, kangaroo_scan, precompute_membership, solidify_text, substitute,
    LambdaPattern, LambdaText,
};
use crate::oracle::{generate_instance, InstanceError, RandomInstanceSpec};

pub const DEFAULT_PATTERN_LEN: usize = 64;
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Shortest timed search sample; faster runs are batched up to it.
const MIN_SAMPLE: Duration = Duration::from_millis(20);
const MAX_BATCH: u32 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub ns: Vec<usize>,
    pub ks: Vec<usize>,
    pub sigma: usize,
    pub reps: usize,
    pub m: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error("bad grid spec: {0}")]
    Parse(String),
    #[error("invalid cell n={n} k={k}: {source}")]
    Cell {
        n: usize,
        k: usize,
        #[source]
        source: InstanceError,
    },
    #[error("cell n={n} k={k}: {queries} LCE queries exceed bound {bound}")]
    QueryBound {
        n: usize,
        k: usize,
        queries: u64,
        bound: u64,
    },
    #[error(transparent)]
    Match(#[from] MatchError),
}

fn parse_count(s: &str) -> Result<usize, BenchError> {
    let bad = || BenchError::Parse(format!("not a number: {s:?}"));
    match s.split_once('^') {
        Some((base, exp)) => {
            let base: usize = base.trim().parse().map_err(|_| bad())?;
            let exp: u32 = exp.trim().parse().map_err(|_| bad())?;
            base.checked_pow(exp).ok_or_else(bad)
        }
        None => s.trim().parse().map_err(|_| bad()),
    }
}

impl GridSpec {
    /// Parses `n=<list>,k=<list>,sigma=<int>,reps=<int>[,m=<int>][,seed=<int>]`.
    ///
    /// List items are separated by `,` or `:`; a bare item continues the
    /// list of the preceding key, so `n=1024,2048,k=1,2` works. Counts may
    /// be written as powers, e.g. `2^15`.
    pub fn parse(spec: &str) -> Result<Self, BenchError> {
        let mut ns = Vec::new();
        let mut ks = Vec::new();
        let mut sigma = None;
        let mut reps = None;
        let mut m = DEFAULT_PATTERN_LEN;
        let mut seed = DEFAULT_SEED;
        let mut key = String::new();
        for token in spec
            .split([',', ':'])
            .map(str::trim)
            .filter(|t| !t.is_empty())
        {
            let value = match token.split_once('=') {
                Some((k, v)) => {
                    key = k.trim().to_ascii_lowercase();
                    v
                }
                None if !key.is_empty() => token,
                None => return Err(BenchError::Parse(format!("value {token:?} has no key"))),
            };
            match key.as_str() {
                "n" => ns.push(parse_count(value)?),
                "k" => ks.push(parse_count(value)?),
                "sigma" => sigma = Some(parse_count(value)?),
                "reps" => reps = Some(parse_count(value)?),
                "m" => m = parse_count(value)?,
                "seed" => seed = parse_count(value)? as u64,
                other => return Err(BenchError::Parse(format!("unknown key {other:?}"))),
            }
        }
        let grid = GridSpec {
            ns,
            ks,
            sigma: sigma.ok_or_else(|| BenchError::Parse("missing sigma".into()))?,
            reps: reps.ok_or_else(|| BenchError::Parse("missing reps".into()))?,
            m,
            seed,
        };
        if grid.ns.is_empty() || grid.ks.is_empty() {
            return Err(BenchError::Parse("n and k lists must be non-empty".into()));
        }
        if grid.reps < 5 {
            return Err(BenchError::Parse(format!(
                "reps must be at least 5, got {}",
                grid.reps
            )));
        }
        Ok(grid)
    }

    fn cell_spec(&self, n: usize, k: usize) -> Result<RandomInstanceSpec, BenchError> {
        let spec = RandomInstanceSpec {
            n,
            m: self.m.min(n),
            sigma: self.sigma,
            k_pattern: k,
            k_text: 0,
            max_set_size: self.sigma.min(4),
            seed: self.seed,
        };
        spec.validate()
            .map_err(|source| BenchError::Cell { n, k, source })?;
        Ok(spec)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CellResult {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub sigma: usize,
    pub reps: usize,
    pub build: Duration,
    pub search: Duration,
    pub alignments: usize,
    pub lce_queries: u64,
    pub query_bound: u64,
    pub occurrences: usize,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ScalingReport {
    pub cells: Vec<CellResult>,
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort_unstable();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}

/// One cell with its index built and its build time measured.
struct PreparedCell {
    spec: RandomInstanceSpec,
    alphabet: crate::Alphabet,
    pattern: LambdaPattern,
    text: LambdaText,
    index: LceIndex,
    lambdas: usize,
    build: Duration,
    batch: u32,
    samples: Vec<Duration>,
    last: (u64, usize),
}

impl PreparedCell {
    /// Generates the instance and times `reps` index builds after one
    /// warm-up build, keeping the last index.
    fn new(spec: &RandomInstanceSpec, reps: usize) -> Result<Self, BenchError> {
        let inst = generate_instance(spec).map_err(|source| BenchError::Cell {
            n: spec.n,
            k: spec.k_pattern,
            source,
        })?;
        let alphabet = inst.alphabet;
        let mut build = Vec::with_capacity(reps);
        let mut built = None;
        for rep in 0..=reps {
            drop(built.take());
            let t0 = Instant::now();
            let lp = substitute(&inst.pattern, &alphabet);
            let lt = solidify_text(&inst.text, &alphabet, lp.k());
            let index = build_index(&lp, &lt)?;
            let elapsed = t0.elapsed();
            if rep > 0 {
                build.push(elapsed);
            }
            built = Some((lp, lt, index));
        }
        let (pattern, text, index) = built.expect("at least one build");
        let mut cell = PreparedCell {
            spec: *spec,
            alphabet,
            lambdas: pattern.k() + text.k(),
            pattern,
            text,
            index,
            build: median(build),
            batch: 1,
            samples: Vec::with_capacity(reps),
            last: (0, 0),
        };
        // The warm-up search also sizes the batch so one sample spans
        // MIN_SAMPLE.
        let t0 = Instant::now();
        cell.last = cell.search()?;
        let per_run = t0.elapsed().as_secs_f64().max(1e-9);
        cell.batch = ((MIN_SAMPLE.as_secs_f64() / per_run).ceil() as u32).clamp(1, MAX_BATCH);
        Ok(cell)
    }

    fn search(&self) -> Result<(u64, usize), BenchError> {
        let outcome = kangaroo_scan(&self.pattern, &self.text, &self.index, false)?;
        let membership = precompute_membership(&self.pattern, &self.alphabet);
        let report = filter(
            &self.pattern,
            &self.text,
            &outcome.approximate,
            &membership,
            false,
        );
        Ok((outcome.lce_queries, report.exact_occurrences.len()))
    }

    fn sample(&mut self) -> Result<(), BenchError> {
        let t0 = Instant::now();
        for _ in 0..self.batch {
            self.last = self.search()?;
        }
        self.samples.push(t0.elapsed() / self.batch);
        Ok(())
    }

    fn finish(self) -> Result<CellResult, BenchError> {
        let spec = self.spec;
        let (lce_queries, occurrences) = self.last;
        let alignments = spec.n - spec.m + 1;
        let query_bound = ((self.lambdas + 1) * alignments) as u64;
        if lce_queries > query_bound {
            return Err(BenchError::QueryBound {
                n: spec.n,
                k: spec.k_pattern,
                queries: lce_queries,
                bound: query_bound,
            });
        }
        Ok(CellResult {
            n: spec.n,
            m: spec.m,
            k: spec.k_pattern,
            sigma: spec.sigma,
            reps: self.samples.len(),
            build: self.build,
            search: median(self.samples),
            alignments,
            lce_queries,
            query_bound,
            occurrences,
        })
    }
}

/// Times one cell.
///
/// Index construction and search+filter are timed separately, `reps`
/// samples each after an untimed warm-up; search samples reuse one built
/// index. A search sample repeats the search until it spans a few
/// milliseconds and reports the mean per run.
pub fn run_cell(spec: &RandomInstanceSpec, reps: usize) -> Result<CellResult, BenchError> {
    let mut cell = PreparedCell::new(spec, reps)?;
    for _ in 0..reps {
        cell.sample()?;
    }
    cell.finish()
}

/// Runs every `(n, k)` cell of the grid, single-threaded.
///
/// All cells are prepared first; search samples are then taken
/// round-robin across cells, so slow drift in machine speed affects every
/// cell alike instead of skewing the ratios between neighbours. Results
/// are in grid order.
pub fn run_scaling(grid: &GridSpec) -> Result<ScalingReport, BenchError> {
    let mut prepared = Vec::new();
    for &n in &grid.ns {
        for &k in &grid.ks {
            let spec = grid.cell_spec(n, k)?;
            prepared.push(PreparedCell::new(&spec, grid.reps)?);
        }
    }
    for _ in 0..grid.reps {
        for cell in &mut prepared {
            cell.sample()?;
        }
    }
    let cells = prepared
        .into_iter()
        .map(PreparedCell::finish)
        .collect::<Result<_, _>>()?;
    Ok(ScalingReport { cells })
}

/// Ratio of search medians between two cells.
#[derive(Clone, Debug, PartialEq)]
pub struct Doubling {
    pub from: (usize, usize),
    pub to: (usize, usize),
    pub ratio: f64,
}

impl ScalingReport {
    pub fn cell(&self, n: usize, k: usize) -> Option<&CellResult> {
        self.cells.iter().find(|c| c.n == n && c.k == k)
    }

    /// Search-time ratios for every pair of cells where `n` doubles at
    /// fixed `k`, then where `k` doubles at fixed `n`.
    pub fn doublings(&self) -> (Vec<Doubling>, Vec<Doubling>) {
        let ratio = |a: &CellResult, b: &CellResult| {
            b.search.as_secs_f64() / a.search.as_secs_f64().max(1e-9)
        };
        let mut by_n = Vec::new();
        let mut by_k = Vec::new();
        for a in &self.cells {
            if let Some(b) = self.cell(a.n * 2, a.k) {
                by_n.push(Doubling {
                    from: (a.n, a.k),
                    to: (b.n, b.k),
                    ratio: ratio(a, b),
                });
            }
            if let Some(b) = self.cell(a.n, a.k * 2) {
                by_k.push(Doubling {
                    from: (a.n, a.k),
                    to: (b.n, b.k),
                    ratio: ratio(a, b),
                });
            }
        }
        (by_n, by_k)
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from(
            "n\tm\tk\tsigma\treps\tbuild_ms\tsearch_ms\talignments\tlce_queries\tquery_bound\toccurrences\n",
        );
        for c in &self.cells {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{:.3}\t{:.3}\t{}\t{}\t{}\t{}",
                c.n,
                c.m,
                c.k,
                c.sigma,
                c.reps,
                c.build.as_secs_f64() * 1e3,
                c.search.as_secs_f64() * 1e3,
                c.alignments,
                c.lce_queries,
                c.query_bound,
                c.occurrences
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grid() {
        let g = GridSpec::parse("n=1024,2048,k=1:2:4,sigma=4,reps=5").unwrap();
        assert_eq!(g.ns, vec![1024, 2048]);
        assert_eq!(g.ks, vec![1, 2, 4]);
        assert_eq!((g.sigma, g.reps, g.m), (4, 5, DEFAULT_PATTERN_LEN));
        let g = GridSpec::parse("n=2^15:2^16,k=8,sigma=20,reps=7,m=32,seed=9").unwrap();
        assert_eq!(g.ns, vec![32768, 65536]);
        assert_eq!((g.m, g.seed), (32, 9));
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(GridSpec::parse("n=10,k=1,sigma=4").is_err());
        assert!(GridSpec::parse("n=10,k=1,sigma=4,reps=4").is_err());
        assert!(GridSpec::parse("k=1,sigma=4,reps=5").is_err());
        assert!(GridSpec::parse("n=x,k=1,sigma=4,reps=5").is_err());
        assert!(GridSpec::parse("10,k=1,sigma=4,reps=5").is_err());
        assert!(GridSpec::parse("n=10,k=1,sigma=4,reps=5,q=1").is_err());
    }

    #[test]
    fn boundary_cell_has_one_alignment() {
        let grid = GridSpec::parse("n=64,k=2,sigma=4,reps=5").unwrap();
        let report = run_scaling(&grid).unwrap();
        let c = &report.cells[0];
        assert_eq!((c.n, c.m, c.alignments), (64, 64, 1));
        assert!(c.lce_queries <= c.query_bound);
        assert_eq!(c.query_bound, 3);
    }

    #[test]
    fn small_grid_report() {
        let grid = GridSpec::parse("n=512,1024,k=1,2,sigma=4,reps=5,m=16").unwrap();
        let report = run_scaling(&grid).unwrap();
        assert_eq!(report.cells.len(), 4);
        let (by_n, by_k) = report.doublings();
        assert_eq!(by_n.len(), 2);
        assert_eq!(by_k.len(), 2);
        let tsv = report.to_tsv();
        assert_eq!(tsv.lines().count(), 5);
        assert!(tsv
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("512\t16\t1\t4\t5\t"));
    }

    #[test]
    fn k_larger_than_m_is_rejected() {
        let grid = GridSpec::parse("n=100,k=20,sigma=4,reps=5,m=8").unwrap();
        assert!(matches!(run_scaling(&grid), Err(BenchError::Cell { .. })));
    }

    #[test]
    fn median_of_even_and_odd() {
        let ms = |v: &[u64]| {
            v.iter()
                .map(|&x| Duration::from_millis(x))
                .collect::<Vec<_>>()
        };
        assert_eq!(median(ms(&[5, 1, 3])), Duration::from_millis(3));
        assert_eq!(median(ms(&[4, 1, 3, 2])), Duration::from_micros(2500));
    }
}
