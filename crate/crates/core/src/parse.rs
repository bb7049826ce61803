//! Text notations for degenerate strings.
//!
//! Bracket notation writes a solid symbol as its character and a non-solid
//! symbol as a bracket group, e.g. `a[bc]da[bd]`. Inside a group, commas and
//! whitespace are ignored so `[a, b]` and `[ab]` are the same symbol. Groups
//! are deduplicated and a one-member group such as `[c]` is just `c`.
//!
//! IUPAC notation uses the 15 standard nucleotide codes over `A C G T`.

use crate::alphabet::Alphabet;
use crate::error::ParseError;
use crate::string::DegenerateString;
use crate::symbol::DegenerateSymbol;

pub fn parse_bracket(input: &str, alphabet: &Alphabet) -> Result<DegenerateString, ParseError> {
    let sigma = alphabet.size();
    let mut symbols = Vec::new();
    let mut chars = input.chars().enumerate().map(|(i, c)| (i + 1, c));
    while let Some((pos, c)) = chars.next() {
        match c {
            '[' => {
                let mut members = Vec::new();
                let mut closed = false;
                for (p, c) in chars.by_ref() {
                    match c {
                        ']' => {
                            closed = true;
                            break;
                        }
                        '[' => return Err(ParseError::UnexpectedBracket { ch: c, position: p }),
                        ',' => {}
                        c if c.is_whitespace() => {}
                        c => members.push(
                            alphabet
                                .rank(c)
                                .ok_or(ParseError::UnknownCharacter { ch: c, position: p })?,
                        ),
                    }
                }
                if !closed {
                    return Err(ParseError::UnclosedBracket { position: pos });
                }
                let symbol = DegenerateSymbol::from_ranks(members, sigma)
                    .ok_or(ParseError::EmptyBracket { position: pos })?;
                symbols.push(symbol);
            }
            ']' => {
                return Err(ParseError::UnexpectedBracket {
                    ch: c,
                    position: pos,
                })
            }
            c => {
                let r = alphabet.rank(c).ok_or(ParseError::UnknownCharacter {
                    ch: c,
                    position: pos,
                })?;
                symbols.push(DegenerateSymbol::solid(r, sigma));
            }
        }
    }
    Ok(DegenerateString::new(symbols))
}

/// Reads a string in which every character is a solid symbol.
pub fn parse_solid(input: &str, alphabet: &Alphabet) -> Result<DegenerateString, ParseError> {
    let sigma = alphabet.size();
    input
        .chars()
        .enumerate()
        .map(|(i, c)| {
            alphabet
                .rank(c)
                .map(|r| DegenerateSymbol::solid(r, sigma))
                .ok_or(ParseError::UnknownCharacter {
                    ch: c,
                    position: i + 1,
                })
        })
        .collect()
}

/// Member ranks in `A C G T` order for an IUPAC nucleotide code.
fn iupac_members(code: char) -> Option<&'static [u32]> {
    const A: u32 = 0;
    const C: u32 = 1;
    const G: u32 = 2;
    const T: u32 = 3;
    Some(match code.to_ascii_uppercase() {
        'A' => &[A],
        'C' => &[C],
        'G' => &[G],
        'T' => &[T],
        'R' => &[A, G],
        'Y' => &[C, T],
        'S' => &[C, G],
        'W' => &[A, T],
        'K' => &[G, T],
        'M' => &[A, C],
        'B' => &[C, G, T],
        'D' => &[A, G, T],
        'H' => &[A, C, T],
        'V' => &[A, C, G],
        'N' => &[A, C, G, T],
        _ => return None,
    })
}

/// Parses IUPAC nucleotide codes (case-insensitive) over [`Alphabet::dna`].
pub fn parse_iupac(input: &str) -> Result<DegenerateString, ParseError> {
    input
        .chars()
        .enumerate()
        .map(|(i, c)| {
            iupac_members(c)
                .and_then(|m| DegenerateSymbol::from_ranks(m.iter().copied(), 4))
                .ok_or(ParseError::UnknownCode {
                    ch: c,
                    position: i + 1,
                })
        })
        .collect()
}

/// Canonical bracket form: solid symbols as bare characters, groups with
/// members in alphabet order and no separators.
pub fn format_bracket(s: &DegenerateString, alphabet: &Alphabet) -> String {
    let mut out = String::with_capacity(s.len());
    for sym in s.symbols() {
        if let Some(r) = sym.solid_rank() {
            out.push(alphabet.symbol(r).expect("rank within alphabet"));
        } else {
            out.push('[');
            out.extend(
                sym.ranks()
                    .map(|r| alphabet.symbol(r).expect("rank within alphabet")),
            );
            out.push(']');
        }
    }
    out
}
