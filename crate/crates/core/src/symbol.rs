//! Degenerate symbols as fixed-width bit sets over alphabet ranks.

use smallvec::SmallVec;

const WORD: usize = 64;

/// A non-empty subset of an alphabet.
///
/// Bit `r` is set when the symbol of rank `r` is a member. Alphabets of up
/// to 64 symbols fit in a single inline word.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DegenerateSymbol {
    mask: SmallVec<[u64; 1]>,
}

fn words_for(sigma: usize) -> usize {
    sigma.div_ceil(WORD).max(1)
}

impl DegenerateSymbol {
    /// The solid symbol `{rank}` over an alphabet of `sigma` symbols.
    pub fn solid(rank: u32, sigma: usize) -> Self {
        assert!(
            (rank as usize) < sigma,
            "rank {rank} outside alphabet of {sigma}"
        );
        let mut mask: SmallVec<[u64; 1]> = SmallVec::from_elem(0, words_for(sigma));
        mask[rank as usize / WORD] |= 1 << (rank as usize % WORD);
        DegenerateSymbol { mask }
    }

    /// Builds a symbol from member ranks; duplicates collapse.
    ///
    /// Returns `None` when `ranks` is empty or a rank is outside `0..sigma`.
    pub fn from_ranks<I: IntoIterator<Item = u32>>(ranks: I, sigma: usize) -> Option<Self> {
        let mut mask: SmallVec<[u64; 1]> = SmallVec::from_elem(0, words_for(sigma));
        let mut any = false;
        for r in ranks {
            let r = r as usize;
            if r >= sigma {
                return None;
            }
            mask[r / WORD] |= 1 << (r % WORD);
            any = true;
        }
        any.then_some(DegenerateSymbol { mask })
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.mask.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_solid(&self) -> bool {
        self.len() == 1
    }

    /// The single member of a solid symbol.
    pub fn solid_rank(&self) -> Option<u32> {
        if !self.is_solid() {
            return None;
        }
        self.ranks().next()
    }

    #[inline]
    pub fn contains(&self, rank: u32) -> bool {
        let r = rank as usize;
        self.mask
            .get(r / WORD)
            .is_some_and(|w| w & (1 << (r % WORD)) != 0)
    }

    #[inline]
    pub fn intersects(&self, other: &DegenerateSymbol) -> bool {
        self.mask
            .iter()
            .zip(other.mask.iter())
            .any(|(a, b)| a & b != 0)
    }

    /// Member ranks in increasing order.
    pub fn ranks(&self) -> impl Iterator<Item = u32> + '_ {
        self.mask.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros();
                bits &= bits - 1;
                Some((wi * WORD) as u32 + tz)
            })
        })
    }
}

/// The match relation: `a` and `b` match iff their sets intersect.
///
/// Symmetric and reflexive, but not transitive.
#[inline]
pub fn symbols_match(a: &DegenerateSymbol, b: &DegenerateSymbol) -> bool {
    a.intersects(b)
}
