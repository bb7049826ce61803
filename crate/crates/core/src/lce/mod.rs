//! Longest-common-extension queries over a solid symbol sequence.
//!
//! `lce(i, j)` is the length of the longest common prefix of the suffixes
//! starting at offsets `i` and `j`, which is the string depth of the lowest
//! common ancestor of the two leaves in the suffix tree. It is answered in
//! constant time from a suffix array, its LCP array and a sparse table:
//! the LCE of two suffixes is the minimum LCP between their ranks.

mod rmq;
mod suffix_array;

use std::io::{self, Write};

use crate::error::LceError;
use rmq::SparseTable;

/// Symbols compared directly before falling back to the range-minimum
/// lookup. Short extensions dominate on random inputs and stay in cache.
const SCAN_AHEAD: usize = 8;

/// A solid sequence over an extended alphabet, terminated by a unique
/// separator rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolidSequence {
    pub data: Vec<u32>,
    pub separator: u32,
}

impl SolidSequence {
    pub fn new(data: Vec<u32>, separator: u32) -> Self {
        SolidSequence { data, separator }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    fn validate(&self) -> Result<(), LceError> {
        let last = *self.data.last().ok_or(LceError::Empty)?;
        if last != self.separator {
            return Err(LceError::MissingSeparator);
        }
        let count = self.data.iter().filter(|&&x| x == self.separator).count();
        if count != 1 {
            return Err(LceError::SeparatorNotUnique { count });
        }
        Ok(())
    }
}

/// Immutable constant-time LCE index.
pub struct LceIndex {
    seq: SolidSequence,
    sa: Vec<u32>,
    rank: Vec<u32>,
    lcp: Vec<u32>,
    rmq: SparseTable,
}

impl LceIndex {
    pub fn build(seq: SolidSequence) -> Result<Self, LceError> {
        seq.validate()?;
        let data = &seq.data;
        let sa = suffix_array::suffix_array(data);
        let mut rank = vec![0u32; data.len()];
        for (r, &s) in sa.iter().enumerate() {
            rank[s as usize] = r as u32;
        }
        let lcp = suffix_array::lcp_array(data, &sa, &rank);
        let rmq = SparseTable::new(&lcp);
        Ok(LceIndex {
            seq,
            sa,
            rank,
            lcp,
            rmq,
        })
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn sequence(&self) -> &SolidSequence {
        &self.seq
    }

    /// Suffix start offsets in lexicographic order.
    pub fn suffix_order(&self) -> &[u32] {
        &self.sa
    }

    /// Inverse of [`suffix_order`](Self::suffix_order).
    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    /// `lcp()[r]` is the LCP of the suffixes ranked `r-1` and `r`.
    pub fn lcp(&self) -> &[u32] {
        &self.lcp
    }

    /// Approximate heap footprint in bytes.
    pub fn heap_bytes(&self) -> usize {
        4 * (self.seq.len() + self.sa.len() + self.rank.len() + self.lcp.len())
            + self.rmq.heap_bytes()
    }

    /// Length of the longest common prefix of the suffixes at 0-based
    /// offsets `i` and `j`.
    pub fn lce(&self, i: usize, j: usize) -> Result<usize, LceError> {
        let len = self.len();
        if i >= len || j >= len {
            return Err(LceError::OutOfRange { i, j, len });
        }
        Ok(self.extension(i, j))
    }

    /// Unchecked variant of [`lce`](Self::lce); offsets must be in range.
    #[inline]
    pub(crate) fn extension(&self, i: usize, j: usize) -> usize {
        let data = &self.seq.data;
        if i == j {
            return data.len() - i;
        }
        // The separator is unique, so a scan always stops before running
        // off either end.
        for q in 0..SCAN_AHEAD {
            if data[i + q] != data[j + q] {
                return q;
            }
        }
        self.extension_by_rank(i, j)
    }

    #[inline]
    pub(crate) fn extension_by_rank(&self, i: usize, j: usize) -> usize {
        if i == j {
            return self.len() - i;
        }
        let (ri, rj) = (self.rank[i] as usize, self.rank[j] as usize);
        let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
        self.rmq.min(lo + 1, hi) as usize
    }

    /// Writes `rank<TAB>start<TAB>lcp` per suffix, in suffix order.
    pub fn dump_tsv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "rank\tstart\tlcp")?;
        for (r, (&s, &l)) in self.sa.iter().zip(&self.lcp).enumerate() {
            writeln!(out, "{r}\t{s}\t{l}")?;
        }
        Ok(())
    }
}
