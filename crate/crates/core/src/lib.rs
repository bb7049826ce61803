//! Exact matching of conservative degenerate strings.
//!
//! A degenerate symbol is a non-empty subset of an alphabet; two symbols
//! match when their sets intersect. A degenerate string is *conservative*
//! when it holds at most `k` non-solid (multi-member) symbols. This crate
//! finds every occurrence of such a pattern in a text in `O(kn)` query time:
//!
//! 1. each non-solid symbol is replaced by a fresh synthetic symbol (a
//!    "lambda") that matches nothing, turning the pattern solid;
//! 2. a k-mismatch kangaroo search over a longest-common-extension index
//!    finds every alignment whose only mismatches are lambda positions;
//! 3. a filter keeps the alignments whose lambda mismatches are all "fake",
//!    i.e. the original sets do intersect the text there.
//!
//! Texts may be degenerate as well; their non-solid symbols receive their
//! own lambdas and are checked by full set intersection.
//!
//! ```
//! use dgmatch_core::{find_occurrences, parse_bracket, Alphabet};
//!
//! let alphabet = Alphabet::new("abcd".chars()).unwrap();
//! let pattern = parse_bracket("a[bc]da[bd]", &alphabet).unwrap();
//! let text = parse_bracket("dacdabdadcabdac", &alphabet).unwrap();
//! let report = find_occurrences(&pattern, &text, &alphabet).unwrap();
//! assert_eq!(report.exact_occurrences, vec![2, 5]);
//! ```

pub mod alphabet;
pub mod bench;
pub mod error;
pub mod lce;
pub mod matcher;
pub mod oracle;
pub mod parse;
pub mod string;
pub mod symbol;

pub use alphabet::Alphabet;
pub use error::{AlphabetError, LceError, MatchError, ParseError, StringError};
pub use lce::{LceIndex, SolidSequence};
pub use matcher::{
    build_index, filter, find_occurrences, find_occurrences_with, kangaroo_scan, kangaroo_search,
    precompute_membership, solidify_text, substitute, LambdaPattern, LambdaText, MatchOptions,
    MatchReport, MembershipTable, MismatchTable, OccurrenceVerdicts, SearchOutcome, Verdict,
};
pub use oracle::{generate_instance, naive_match, Instance, RandomInstanceSpec};
pub use parse::{format_bracket, parse_bracket, parse_iupac, parse_solid};
pub use string::DegenerateString;
pub use symbol::{symbols_match, DegenerateSymbol};
