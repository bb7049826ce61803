use std::path::PathBuf;

use clap::{Parser, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum PatternSyntax {
    #[default]
    Bracket,
    Iupac,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum TextSyntax {
    #[default]
    Solid,
    Bracket,
    Iupac,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Positions,
    Tsv,
    JsonLines,
}

/// Find exact occurrences of a degenerate pattern in a (possibly
/// degenerate) text.
///
/// Exit status: 0 if any occurrence was found, 1 if none, 2 on input
/// errors, 3 if --self-check finds a disagreement.
#[derive(Debug, Parser)]
#[command(name = "dgmatch", version)]
pub struct Cli {
    /// Pattern, e.g. `a[bc]da[bd]` or `ACGRN`
    #[arg(short = 'p', long, conflicts_with = "pattern_file", required_unless_present_any = ["pattern_file", "bench"])]
    pub pattern: Option<String>,

    /// Read the pattern from a file (plain or first FASTA record)
    #[arg(long, value_name = "PATH")]
    pub pattern_file: Option<PathBuf>,

    /// Text to search; standard input is read when no text source is given
    #[arg(long, conflicts_with = "text_file")]
    pub text: Option<String>,

    /// Read the text from a plain or FASTA file
    #[arg(long, value_name = "PATH")]
    pub text_file: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t)]
    pub pattern_syntax: PatternSyntax,

    #[arg(long, value_enum, default_value_t)]
    pub text_syntax: TextSyntax,

    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,

    /// Alphabet symbols in rank order; inferred from the inputs if omitted
    #[arg(long)]
    pub alphabet: Option<String>,

    /// Report per-lambda real/fake verdicts
    #[arg(long)]
    pub diagnostics: bool,

    /// Cross-check every record against the brute-force matcher
    #[arg(long)]
    pub self_check: bool,

    /// Run the scaling benchmark: n=<list>,k=<list>,sigma=<int>,reps=<int>
    #[arg(long, value_name = "SPEC")]
    pub bench: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Inline(String),
    File(PathBuf),
    Stdin,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub pattern: Source,
    pub text: Source,
    pub pattern_syntax: PatternSyntax,
    pub text_syntax: TextSyntax,
    pub format: OutputFormat,
    pub alphabet: Option<String>,
    pub diagnostics: bool,
    pub self_check: bool,
    pub bench: Option<String>,
}

impl RunConfig {
    /// Whether the nucleotide alphabet is forced by an IUPAC syntax.
    pub fn uses_iupac(&self) -> bool {
        self.pattern_syntax == PatternSyntax::Iupac || self.text_syntax == TextSyntax::Iupac
    }
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let pattern = match (cli.pattern, cli.pattern_file) {
            (Some(p), _) => Source::Inline(p),
            (None, Some(f)) => Source::File(f),
            (None, None) => Source::Inline(String::new()),
        };
        let text = match (cli.text, cli.text_file) {
            (Some(t), _) => Source::Inline(t),
            (None, Some(f)) => Source::File(f),
            (None, None) => Source::Stdin,
        };
        RunConfig {
            pattern,
            text,
            pattern_syntax: cli.pattern_syntax,
            text_syntax: cli.text_syntax,
            format: cli.format,
            alphabet: cli.alphabet,
            diagnostics: cli.diagnostics,
            self_check: cli.self_check,
            bench: cli.bench,
        }
    }
}
