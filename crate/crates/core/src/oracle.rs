//! Brute-force reference matching and random instances for checking the
//! fast matcher.

use std::fmt;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::alphabet::Alphabet;
use crate::error::MatchError;
use crate::matcher::{find_occurrences_with, MatchOptions};
use crate::parse::format_bracket;
use crate::string::DegenerateString;
use crate::symbol::{symbols_match, DegenerateSymbol};

/// Generator behind [`generate_instance`], printed with every failure.
pub const RNG_NAME: &str = "ChaCha8Rng";

/// 1-based positions `i` with `pattern ≈ text[i..i+m-1]`, by direct scan.
pub fn naive_match(
    pattern: &DegenerateString,
    text: &DegenerateString,
) -> Result<Vec<usize>, MatchError> {
    if pattern.is_empty() {
        return Err(MatchError::EmptyPattern);
    }
    let (p, t) = (pattern.symbols(), text.symbols());
    if p.len() > t.len() {
        return Ok(Vec::new());
    }
    Ok((0..=t.len() - p.len())
        .filter(|&i| p.iter().zip(&t[i..]).all(|(a, b)| symbols_match(a, b)))
        .map(|i| i + 1)
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RandomInstanceSpec {
    pub n: usize,
    pub m: usize,
    pub sigma: usize,
    pub k_pattern: usize,
    pub k_text: usize,
    pub max_set_size: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("pattern length {m} must be in 1..={n}")]
    Lengths { n: usize, m: usize },
    #[error("{k} non-solid symbols do not fit in length {len}")]
    TooManyNonSolid { k: usize, len: usize },
    #[error("maximum set size {max} must be in 2..={sigma}")]
    SetSize { max: usize, sigma: usize },
}

impl RandomInstanceSpec {
    pub fn validate(&self) -> Result<(), InstanceError> {
        if self.m == 0 || self.m > self.n {
            return Err(InstanceError::Lengths {
                n: self.n,
                m: self.m,
            });
        }
        if self.k_pattern > self.m {
            return Err(InstanceError::TooManyNonSolid {
                k: self.k_pattern,
                len: self.m,
            });
        }
        if self.k_text > self.n {
            return Err(InstanceError::TooManyNonSolid {
                k: self.k_text,
                len: self.n,
            });
        }
        if self.max_set_size < 2 || self.max_set_size > self.sigma {
            return Err(InstanceError::SetSize {
                max: self.max_set_size,
                sigma: self.sigma,
            });
        }
        Ok(())
    }

    /// Same spec with `n` and `m` halved (clamped to stay valid).
    pub fn halved(&self) -> Self {
        let n = (self.n / 2).max(1);
        let m = (self.m / 2).clamp(1, n);
        RandomInstanceSpec {
            n,
            m,
            k_pattern: self.k_pattern.min(m),
            k_text: self.k_text.min(n),
            ..*self
        }
    }
}

impl fmt::Display for RandomInstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} m={} sigma={} k_pattern={} k_text={} max_set_size={} seed={} rng={}",
            self.n,
            self.m,
            self.sigma,
            self.k_pattern,
            self.k_text,
            self.max_set_size,
            self.seed,
            RNG_NAME
        )
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub alphabet: Alphabet,
    pub pattern: DegenerateString,
    pub text: DegenerateString,
    /// 0-based alignment of the planted occurrence, if one was planted.
    pub planted: Option<usize>,
}

/// Printable alphabet of `sigma` distinct, non-reserved characters.
pub fn alphabet_of_size(sigma: usize) -> Alphabet {
    let symbol = |r: usize| -> char {
        let r32 = r as u32;
        match r {
            0..=25 => char::from(b'a' + r as u8),
            26..=51 => char::from(b'A' + (r - 26) as u8),
            52..=61 => char::from(b'0' + (r - 52) as u8),
            _ => char::from_u32(0x3400 + r32).expect("CJK extension block"),
        }
    };
    Alphabet::new((0..sigma).map(symbol)).expect("distinct generated symbols")
}

fn random_set(rng: &mut ChaCha8Rng, sigma: usize, max: usize) -> DegenerateSymbol {
    let size = rng.gen_range(2..=max);
    let members = sample(rng, sigma, size).into_iter().map(|r| r as u32);
    DegenerateSymbol::from_ranks(members, sigma).expect("non-empty sample")
}

fn random_string(
    rng: &mut ChaCha8Rng,
    len: usize,
    k: usize,
    sigma: usize,
    max: usize,
) -> Vec<DegenerateSymbol> {
    let mut symbols: Vec<DegenerateSymbol> = (0..len)
        .map(|_| DegenerateSymbol::solid(rng.gen_range(0..sigma) as u32, sigma))
        .collect();
    for p in sample(rng, len, k) {
        symbols[p] = random_set(rng, sigma, max);
    }
    symbols
}

/// Deterministic random pattern/text pair for `spec`.
///
/// Half of the instances get a true occurrence planted at a random
/// alignment; planting keeps every position's solid/non-solid status.
pub fn generate_instance(spec: &RandomInstanceSpec) -> Result<Instance, InstanceError> {
    spec.validate()?;
    let sigma = spec.sigma;
    let max = spec.max_set_size;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let pattern = random_string(&mut rng, spec.m, spec.k_pattern, sigma, max);
    let mut text = random_string(&mut rng, spec.n, spec.k_text, sigma, max);

    let planted = rng
        .gen_bool(0.5)
        .then(|| rng.gen_range(0..=spec.n - spec.m));
    if let Some(at) = planted {
        for (p, sym) in pattern.iter().enumerate() {
            let members: Vec<u32> = sym.ranks().collect();
            let c = members[rng.gen_range(0..members.len())];
            let slot = &mut text[at + p];
            if slot.is_solid() {
                *slot = DegenerateSymbol::solid(c, sigma);
            } else if !slot.contains(c) {
                let mut ranks: Vec<u32> = slot.ranks().collect();
                let victim = rng.gen_range(0..ranks.len());
                ranks[victim] = c;
                *slot = DegenerateSymbol::from_ranks(ranks, sigma).expect("non-empty");
            }
        }
    }

    Ok(Instance {
        alphabet: alphabet_of_size(sigma),
        pattern: DegenerateString::new(pattern),
        text: DegenerateString::new(text),
        planted,
    })
}

/// Counters from one successful check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckStats {
    pub occurrences: usize,
    pub approximate: usize,
    pub lce_queries: u64,
    /// `(k + 1)(n - m + 1)` with `k` the combined non-solid count.
    pub query_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    Occurrences {
        fast: Vec<usize>,
        naive: Vec<usize>,
    },
    QueryBound {
        queries: u64,
        bound: u64,
    },
    /// An approximate occurrence with a mismatch off the lambda positions.
    SolidMismatch {
        alignment: usize,
        mismatches: Vec<usize>,
    },
    Nondeterministic,
    Error(MatchError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub spec: RandomInstanceSpec,
    pub pattern: String,
    pub text: String,
    pub failure: Failure,
}

impl fmt::Display for Disagreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "instance {}", self.spec)?;
        writeln!(f, "  pattern: {}", self.pattern)?;
        writeln!(f, "  text:    {}", self.text)?;
        match &self.failure {
            Failure::Occurrences { fast, naive } => {
                write!(f, "  matcher: {fast:?}\n  oracle:  {naive:?}")
            }
            Failure::QueryBound { queries, bound } => {
                write!(f, "  {queries} LCE queries exceed bound {bound}")
            }
            Failure::SolidMismatch { alignment, mismatches } => write!(
                f,
                "  approximate occurrence {alignment} has mismatches {mismatches:?} off the lambda positions"
            ),
            Failure::Nondeterministic => write!(f, "  repeated runs disagree"),
            Failure::Error(e) => write!(f, "  matcher error: {e}"),
        }
    }
}

impl std::error::Error for Disagreement {}

/// Runs the matcher (with and without diagnostics) against
/// [`naive_match`] on one generated instance.
///
/// Also checks the LCE query bound and that approximate occurrences only
/// mismatch where a lambda sits on either side.
pub fn check_instance(spec: &RandomInstanceSpec) -> Result<CheckStats, Box<Disagreement>> {
    let inst = generate_instance(spec).expect("valid instance spec");
    let fail = |failure| {
        Box::new(Disagreement {
            spec: *spec,
            pattern: format_bracket(&inst.pattern, &inst.alphabet),
            text: format_bracket(&inst.text, &inst.alphabet),
            failure,
        })
    };
    let naive = naive_match(&inst.pattern, &inst.text).map_err(|e| fail(Failure::Error(e)))?;
    let run = |diagnostics| {
        find_occurrences_with(
            &inst.pattern,
            &inst.text,
            &inst.alphabet,
            MatchOptions { diagnostics },
        )
        .map_err(|e| fail(Failure::Error(e)))
    };
    let quick = run(false)?;
    let full = run(true)?;

    if quick.exact_occurrences != naive {
        return Err(fail(Failure::Occurrences {
            fast: quick.exact_occurrences,
            naive,
        }));
    }
    if full.exact_occurrences != quick.exact_occurrences
        || full.approximate_occurrences != quick.approximate_occurrences
    {
        return Err(fail(Failure::Nondeterministic));
    }

    let k = (inst.pattern.non_solid_count() + inst.text.non_solid_count()) as u64;
    let alignments = (spec.n + 1).saturating_sub(spec.m) as u64;
    let bound = (k + 1) * alignments;
    for queries in [quick.lce_queries, full.lce_queries] {
        if queries > bound {
            return Err(fail(Failure::QueryBound { queries, bound }));
        }
    }

    let table = full
        .mismatch_table
        .as_ref()
        .expect("diagnostics keep the table");
    let text_lambdas = inst.text.non_solid_positions();
    for &i in &full.approximate_occurrences {
        let mismatches: Vec<usize> = table.mismatches(i).collect();
        let mut expected: Vec<usize> = inst.pattern.non_solid_positions().to_vec();
        expected.extend(
            text_lambdas
                .iter()
                .filter(|&&t| t > i && t <= i + spec.m)
                .map(|&t| t - i),
        );
        expected.sort_unstable();
        expected.dedup();
        if mismatches != expected {
            return Err(fail(Failure::SolidMismatch {
                alignment: i,
                mismatches,
            }));
        }
    }

    Ok(CheckStats {
        occurrences: naive.len(),
        approximate: quick.approximate_occurrences.len(),
        lce_queries: quick.lce_queries,
        query_bound: bound,
    })
}

/// Halves `n` and `m` while `still_fails` keeps holding; returns the
/// smallest failing spec found.
pub fn shrink<F: FnMut(&RandomInstanceSpec) -> bool>(
    spec: RandomInstanceSpec,
    mut still_fails: F,
) -> RandomInstanceSpec {
    let mut best = spec;
    loop {
        let next = best.halved();
        if next == best || next.validate().is_err() || !still_fails(&next) {
            return best;
        }
        best = next;
    }
}

/// [`check_instance`], shrinking the instance on failure.
pub fn check_and_shrink(spec: &RandomInstanceSpec) -> Result<CheckStats, Box<Disagreement>> {
    check_instance(spec).map_err(|first| {
        let small = shrink(*spec, |s| check_instance(s).is_err());
        if small == *spec {
            first
        } else {
            check_instance(&small).expect_err("shrunk spec still fails")
        }
    })
}
