/// Sparse table over `u32` values: `O(L log L)` build, `O(1)` range minimum.
///
/// Level `j` stores the minimum of every window of length `2^j`.
pub(crate) struct SparseTable {
    levels: Vec<Vec<u32>>,
}

impl SparseTable {
    pub(crate) fn new(values: &[u32]) -> Self {
        let mut levels = vec![values.to_vec()];
        let mut width = 1usize;
        while 2 * width <= values.len() {
            let prev = levels.last().unwrap();
            let next: Vec<u32> = (0..prev.len() - width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        SparseTable { levels }
    }

    /// Minimum over `lo..=hi`.
    #[inline]
    pub(crate) fn min(&self, lo: usize, hi: usize) -> u32 {
        debug_assert!(lo <= hi);
        let len = hi - lo + 1;
        let j = (usize::BITS - 1 - len.leading_zeros()) as usize;
        let level = &self.levels[j];
        level[lo].min(level[hi + 1 - (1 << j)])
    }

    pub(crate) fn heap_bytes(&self) -> usize {
        self.levels.iter().map(|l| l.len() * 4).sum()
    }
}
