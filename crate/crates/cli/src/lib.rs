//! Command-line front end for degenerate pattern matching.
//!
//! [`run`] drives one invocation from a [`RunConfig`] and returns the
//! process exit status; `main` only parses arguments and wires up stdio.

pub mod config;
pub mod fasta;

use std::collections::BTreeSet;
use std::fmt;
use std::io::{self, Read, Write};

use dgmatch_core::alphabet::LetterCase;
use dgmatch_core::bench::{run_scaling, GridSpec};
use dgmatch_core::{
    find_occurrences_with, naive_match, parse_bracket, parse_iupac, parse_solid, Alphabet,
    DegenerateString, MatchOptions, MatchReport, OccurrenceVerdicts, ParseError, Verdict,
};
use serde::Serialize;

pub use config::{Cli, OutputFormat, PatternSyntax, RunConfig, Source, TextSyntax};
use fasta::{is_fasta, read_fasta, RawRecord};

pub const EXIT_FOUND: i32 = 0;
pub const EXIT_NOT_FOUND: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_SELF_CHECK: i32 = 3;

/// Record id used when the text is not FASTA.
pub const PLAIN_RECORD_ID: &str = "text";

const STRUCTURAL: [char; 3] = ['[', ']', ','];

/// Folds `input` to the letter case the alphabet is written in.
pub fn fold_case(input: &str, alphabet: &Alphabet) -> String {
    match alphabet.letter_case() {
        Some(LetterCase::Upper) => input.to_uppercase(),
        Some(LetterCase::Lower) => input.to_lowercase(),
        None => input.to_string(),
    }
}

/// Parses a text sequence under `syntax`.
pub fn parse_text(
    input: &str,
    syntax: TextSyntax,
    alphabet: &Alphabet,
) -> Result<DegenerateString, ParseError> {
    let folded = fold_case(input, alphabet);
    match syntax {
        TextSyntax::Solid => parse_solid(&folded, alphabet),
        TextSyntax::Bracket => parse_bracket(&folded, alphabet),
        TextSyntax::Iupac => parse_iupac(&folded),
    }
}

pub fn parse_pattern(
    input: &str,
    syntax: PatternSyntax,
    alphabet: &Alphabet,
) -> Result<DegenerateString, ParseError> {
    let folded = fold_case(input, alphabet);
    match syntax {
        PatternSyntax::Bracket => parse_bracket(&folded, alphabet),
        PatternSyntax::Iupac => parse_iupac(&folded),
    }
}

/// Lower-case distinct symbols of the inputs, in sorted order.
pub fn infer_alphabet<'a, I: IntoIterator<Item = &'a str>>(inputs: I) -> Option<Alphabet> {
    let symbols: BTreeSet<char> = inputs
        .into_iter()
        .flat_map(|s| s.chars())
        .filter(|c| !c.is_whitespace() && !STRUCTURAL.contains(c))
        .flat_map(char::to_lowercase)
        .collect();
    Alphabet::new(symbols).ok()
}

#[derive(Debug)]
struct InputError(String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn read_source<R: Read>(source: &Source, stdin: &mut R) -> Result<String, InputError> {
    match source {
        Source::Inline(s) => Ok(s.clone()),
        Source::File(path) => std::fs::read_to_string(path)
            .map_err(|e| InputError(format!("{}: {e}", path.display()))),
        Source::Stdin => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

struct Texts {
    records: Vec<RawRecord>,
    fasta: bool,
}

fn load_texts(contents: &str, inline: bool) -> Result<Texts, InputError> {
    if !inline && is_fasta(contents) {
        return Ok(Texts {
            records: read_fasta(contents)?,
            fasta: true,
        });
    }
    let first_line = contents
        .lines()
        .position(|l| !l.trim().is_empty())
        .map_or(1, |i| i + 1);
    Ok(Texts {
        records: vec![RawRecord::single(PLAIN_RECORD_ID, contents, first_line)],
        fasta: false,
    })
}

fn load_pattern(source: &Source, contents: &str) -> Result<String, InputError> {
    if matches!(source, Source::File(_)) && is_fasta(contents) {
        let first = read_fasta(contents)?.swap_remove(0);
        return Ok(first.sequence);
    }
    Ok(contents.chars().filter(|c| !c.is_whitespace()).collect())
}

#[derive(Serialize)]
struct JsonVerdict {
    position: usize,
    verdict: &'static str,
}

#[derive(Serialize)]
struct JsonOccurrence<'a> {
    record: &'a str,
    position: usize,
    pattern_length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdicts: Option<Vec<JsonVerdict>>,
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Real => "real",
        Verdict::Fake => "fake",
    }
}

fn verdicts_at(report: &MatchReport, position: usize) -> Option<&OccurrenceVerdicts> {
    let all = report.verdicts.as_ref()?;
    all.iter().find(|v| v.alignment + 1 == position)
}

fn write_occurrences<W: Write>(
    out: &mut W,
    config: &RunConfig,
    record: &str,
    labelled: bool,
    pattern_length: usize,
    report: &MatchReport,
) -> io::Result<()> {
    for &pos in &report.exact_occurrences {
        let verdicts = verdicts_at(report, pos);
        match config.format {
            OutputFormat::Positions if labelled => writeln!(out, "{record}\t{pos}")?,
            OutputFormat::Positions => writeln!(out, "{pos}")?,
            OutputFormat::Tsv => {
                write!(out, "{record}\t{pos}")?;
                if config.diagnostics {
                    let cells: Vec<String> = verdicts
                        .map(|v| {
                            v.checks
                                .iter()
                                .map(|&(e, v)| format!("{e}:{}", verdict_name(v)))
                                .collect()
                        })
                        .unwrap_or_default();
                    let joined = if cells.is_empty() {
                        "-".to_string()
                    } else {
                        cells.join(",")
                    };
                    write!(out, "\t{joined}")?;
                }
                writeln!(out)?;
            }
            OutputFormat::JsonLines => {
                let row = JsonOccurrence {
                    record,
                    position: pos,
                    pattern_length,
                    verdicts: config.diagnostics.then(|| {
                        verdicts
                            .map(|v| {
                                v.checks
                                    .iter()
                                    .map(|&(e, v)| JsonVerdict {
                                        position: e,
                                        verdict: verdict_name(v),
                                    })
                                    .collect()
                            })
                            .unwrap_or_default()
                    }),
                };
                serde_json::to_writer(&mut *out, &row)?;
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

fn run_bench<W: Write, E: Write>(spec: &str, out: &mut W, err: &mut E) -> i32 {
    let result = GridSpec::parse(spec).and_then(|grid| run_scaling(&grid));
    match result {
        Ok(report) => match out.write_all(report.to_tsv().as_bytes()) {
            Ok(()) => EXIT_FOUND,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_INPUT_ERROR
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

/// Runs one invocation and returns the exit status.
pub fn run<R: Read, W: Write, E: Write>(
    config: &RunConfig,
    mut stdin: R,
    mut out: W,
    mut err: E,
) -> i32 {
    if let Some(spec) = &config.bench {
        return run_bench(spec, &mut out, &mut err);
    }
    match search(config, &mut stdin, &mut out, &mut err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

fn search<R: Read, W: Write, E: Write>(
    config: &RunConfig,
    stdin: &mut R,
    out: &mut W,
    err: &mut E,
) -> Result<i32, InputError> {
    let pattern_contents = read_source(&config.pattern, stdin)?;
    let pattern_raw = load_pattern(&config.pattern, &pattern_contents)?;
    if pattern_raw.is_empty() {
        return Err(InputError("pattern is empty".into()));
    }
    let text_contents = read_source(&config.text, stdin)?;
    let texts = load_texts(&text_contents, matches!(config.text, Source::Inline(_)))?;

    let alphabet = if config.uses_iupac() {
        Alphabet::dna()
    } else if let Some(symbols) = &config.alphabet {
        Alphabet::new(symbols.chars())?
    } else {
        let inputs = std::iter::once(pattern_raw.as_str())
            .chain(texts.records.iter().map(|r| r.sequence.as_str()));
        infer_alphabet(inputs)
            .ok_or_else(|| InputError("cannot infer an alphabet from empty input".into()))?
    };

    let pattern = parse_pattern(&pattern_raw, config.pattern_syntax, &alphabet)
        .map_err(|e| InputError(format!("pattern: {e}")))?;
    let records = texts
        .records
        .iter()
        .map(|raw| {
            raw.parse(config.text_syntax, &alphabet)
                .map_err(|e| match e {
                    fasta::FastaError::Parse { line, source, .. } if !texts.fasta => {
                        InputError(format!("text, line {line}: {source}"))
                    }
                    e => InputError(e.to_string()),
                })
        })
        .collect::<Result<Vec<_>, _>>()?;

    if config.format == OutputFormat::Tsv {
        write!(out, "record\tposition")?;
        if config.diagnostics {
            write!(out, "\tverdicts")?;
        }
        writeln!(out)?;
    }

    let options = MatchOptions {
        diagnostics: config.diagnostics,
    };
    let mut found = false;
    let mut disagreement = false;
    for (raw, text) in texts.records.iter().zip(&records) {
        if text.is_empty() {
            writeln!(
                err,
                "warning: record {:?} has an empty sequence; skipped",
                raw.id
            )?;
            continue;
        }
        let report = find_occurrences_with(&pattern, text, &alphabet, options)?;
        if config.self_check {
            let expected = naive_match(&pattern, text)?;
            if expected != report.exact_occurrences {
                disagreement = true;
                writeln!(err, "self-check failed for record {:?}", raw.id)?;
                writeln!(err, "  matcher:     {:?}", report.exact_occurrences)?;
                writeln!(err, "  brute force: {expected:?}")?;
            }
        }
        found |= !report.exact_occurrences.is_empty();
        write_occurrences(out, config, &raw.id, texts.fasta, pattern.len(), &report)?;
    }
    out.flush()?;

    Ok(if disagreement {
        EXIT_SELF_CHECK
    } else if found {
        EXIT_FOUND
    } else {
        EXIT_NOT_FOUND
    })
}
