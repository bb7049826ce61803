use crate::error::StringError;
use crate::symbol::DegenerateSymbol;

/// A sequence of degenerate symbols.
///
/// Keeps the 1-based positions of its non-solid symbols in increasing order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DegenerateString {
    symbols: Vec<DegenerateSymbol>,
    non_solid: Vec<usize>,
}

impl DegenerateString {
    pub fn new(symbols: Vec<DegenerateSymbol>) -> Self {
        let non_solid = symbols
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_solid())
            .map(|(i, _)| i + 1)
            .collect();
        DegenerateString { symbols, non_solid }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[DegenerateSymbol] {
        &self.symbols
    }

    /// Symbol at 1-based `position`.
    pub fn symbol(&self, position: usize) -> Option<&DegenerateSymbol> {
        position.checked_sub(1).and_then(|i| self.symbols.get(i))
    }

    /// 1-based positions of the non-solid symbols, increasing.
    pub fn non_solid_positions(&self) -> &[usize] {
        &self.non_solid
    }

    pub fn non_solid_count(&self) -> usize {
        self.non_solid.len()
    }

    pub fn is_solid(&self) -> bool {
        self.non_solid.is_empty()
    }

    /// Whether the string holds at most `k` non-solid symbols.
    pub fn is_conservative(&self, k: usize) -> bool {
        self.non_solid.len() <= k
    }

    /// Symbols `start..=end` (1-based, inclusive). `start == end + 1`
    /// yields the empty string.
    pub fn substring(&self, start: usize, end: usize) -> Result<DegenerateString, StringError> {
        if start == 0 || start > end + 1 || end > self.len() {
            return Err(StringError::OutOfRange {
                start,
                end,
                len: self.len(),
            });
        }
        Ok(DegenerateString::new(self.symbols[start - 1..end].to_vec()))
    }
}

impl FromIterator<DegenerateSymbol> for DegenerateString {
    fn from_iter<I: IntoIterator<Item = DegenerateSymbol>>(iter: I) -> Self {
        DegenerateString::new(iter.into_iter().collect())
    }
}
