//! Minimal FASTA reader.
//!
//! Records start at `>` header lines; the record id is the header text up to
//! the first whitespace. Sequence lines are concatenated with all whitespace
//! removed. Line numbers are kept so parse errors point at the input line.

use dgmatch_core::{Alphabet, DegenerateString, ParseError};
use thiserror::Error;

use crate::config::TextSyntax;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FastaError {
    #[error("FASTA input is empty")]
    EmptyFile,
    #[error("line {line}: sequence data before the first '>' header")]
    SequenceBeforeHeader { line: usize },
    #[error("record {record:?}, line {line}: {source}")]
    Parse {
        record: String,
        line: usize,
        #[source]
        source: ParseError,
    },
}

/// A record before its sequence is parsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawRecord {
    pub id: String,
    pub sequence: String,
    /// `(first character offset, 1-based input line)` per sequence line.
    lines: Vec<(usize, usize)>,
}

impl RawRecord {
    /// A single record whose sequence came from input line `line`.
    pub fn single(id: impl Into<String>, sequence: &str, line: usize) -> Self {
        RawRecord {
            id: id.into(),
            sequence: sequence.chars().filter(|c| !c.is_whitespace()).collect(),
            lines: vec![(0, line)],
        }
    }

    /// Input line holding the 1-based sequence character `position`.
    pub fn line_of(&self, position: usize) -> usize {
        let offset = position.saturating_sub(1);
        let idx = self.lines.partition_point(|&(start, _)| start <= offset);
        self.lines
            .get(idx.saturating_sub(1))
            .map_or(0, |&(_, line)| line)
    }

    pub fn parse(
        &self,
        syntax: TextSyntax,
        alphabet: &Alphabet,
    ) -> Result<DegenerateString, FastaError> {
        crate::parse_text(&self.sequence, syntax, alphabet).map_err(|source| FastaError::Parse {
            record: self.id.clone(),
            line: self.line_of(source.position()),
            source,
        })
    }
}

/// Splits FASTA text into records without interpreting the sequences.
pub fn read_fasta(contents: &str) -> Result<Vec<RawRecord>, FastaError> {
    let mut records: Vec<RawRecord> = Vec::new();
    for (i, line) in contents.lines().enumerate() {
        let line_no = i + 1;
        if let Some(header) = line.strip_prefix('>') {
            let id = header.split_whitespace().next().unwrap_or("").to_string();
            records.push(RawRecord {
                id,
                sequence: String::new(),
                lines: Vec::new(),
            });
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let record = records
            .last_mut()
            .ok_or(FastaError::SequenceBeforeHeader { line: line_no })?;
        let offset = record.sequence.chars().count();
        record.lines.push((offset, line_no));
        record
            .sequence
            .extend(line.chars().filter(|c| !c.is_whitespace()));
    }
    if records.is_empty() {
        return Err(FastaError::EmptyFile);
    }
    Ok(records)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastaRecord {
    pub id: String,
    pub sequence: DegenerateString,
}

/// Reads and parses every record under `syntax`, folding case to the
/// alphabet's.
pub fn ingest_fasta(
    contents: &str,
    syntax: TextSyntax,
    alphabet: &Alphabet,
) -> Result<Vec<FastaRecord>, FastaError> {
    read_fasta(contents)?
        .into_iter()
        .map(|raw| {
            Ok(FastaRecord {
                sequence: raw.parse(syntax, alphabet)?,
                id: raw.id,
            })
        })
        .collect()
}

/// Whether `contents` looks like FASTA (first non-blank line is a header).
pub fn is_fasta(contents: &str) -> bool {
    contents
        .lines()
        .find(|l| !l.trim().is_empty())
        .is_some_and(|l| l.starts_with('>'))
}
