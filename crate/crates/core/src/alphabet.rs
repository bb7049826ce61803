//! Ordered alphabets mapping characters to dense ranks.

use std::collections::HashMap;
use std::fmt;

use crate::error::AlphabetError;

/// Characters that carry meaning in the bracket grammar or the index and
/// therefore never belong to an alphabet.
pub const RESERVED: [char; 4] = ['#', '[', ']', ','];

const NO_RANK: u32 = u32::MAX;

/// A non-empty ordered set of distinct characters.
///
/// The position of a character in the alphabet is its rank, `0..size()`.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
    ascii: [u32; 128],
    other: HashMap<char, u32>,
}

/// Letter case an alphabet is written in, used to fold user input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LetterCase {
    Lower,
    Upper,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self, AlphabetError> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(AlphabetError::Empty);
        }
        let mut ascii = [NO_RANK; 128];
        let mut other = HashMap::new();
        for (rank, &c) in symbols.iter().enumerate() {
            if RESERVED.contains(&c) || c.is_whitespace() {
                return Err(AlphabetError::Reserved(c));
            }
            let rank = rank as u32;
            let fresh = if c.is_ascii() {
                let slot = &mut ascii[c as usize];
                let fresh = *slot == NO_RANK;
                *slot = rank;
                fresh
            } else {
                other.insert(c, rank).is_none()
            };
            if !fresh {
                return Err(AlphabetError::Duplicate(c));
            }
        }
        Ok(Alphabet {
            symbols,
            ascii,
            other,
        })
    }

    /// The nucleotide alphabet `A C G T`.
    pub fn dna() -> Self {
        Alphabet::new("ACGT".chars()).expect("static alphabet")
    }

    /// Number of symbols, often written sigma.
    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    #[inline]
    pub fn rank(&self, c: char) -> Option<u32> {
        if c.is_ascii() {
            let r = self.ascii[c as usize];
            (r != NO_RANK).then_some(r)
        } else {
            self.other.get(&c).copied()
        }
    }

    pub fn symbol(&self, rank: u32) -> Option<char> {
        self.symbols.get(rank as usize).copied()
    }

    /// Case shared by every cased letter of the alphabet, if any.
    ///
    /// Mixed-case alphabets and alphabets without letters return `None`.
    pub fn letter_case(&self) -> Option<LetterCase> {
        let mut lower = false;
        let mut upper = false;
        for c in &self.symbols {
            lower |= c.is_lowercase();
            upper |= c.is_uppercase();
        }
        match (lower, upper) {
            (true, false) => Some(LetterCase::Lower),
            (false, true) => Some(LetterCase::Upper),
            _ => None,
        }
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Alphabet")
            .field(&self.symbols.iter().collect::<String>())
            .finish()
    }
}
