//! Suffix array by prefix doubling with radix sort, and Kasai's LCP array.

/// Sorts the suffixes of `data` lexicographically in `O(L log L)`.
///
/// Symbols are arbitrary `u32` values; a shorter suffix that is a prefix of
/// a longer one sorts first.
pub(crate) fn suffix_array(data: &[u32]) -> Vec<u32> {
    let n = data.len();
    if n == 0 {
        return Vec::new();
    }

    // Compress symbols to dense classes 0..c.
    let mut sorted: Vec<u32> = data.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut class: Vec<u32> = data
        .iter()
        .map(|x| sorted.binary_search(x).unwrap() as u32)
        .collect();
    let mut classes = sorted.len();

    let mut sa: Vec<u32> = (0..n as u32).collect();
    sa.sort_unstable_by_key(|&i| class[i as usize]);
    if classes == n {
        return sa;
    }

    let mut second = vec![0u32; n];
    let mut count = vec![0usize; n.max(classes) + 1];
    let mut next_class = vec![0u32; n];
    let mut k = 1usize;
    loop {
        // Order by second key: suffixes without a second half come first.
        let mut p = 0;
        for i in (n - k)..n {
            second[p] = i as u32;
            p += 1;
        }
        for &s in &sa {
            if s as usize >= k {
                second[p] = s - k as u32;
                p += 1;
            }
        }

        // Stable counting sort by first key.
        count[..=classes].fill(0);
        for &c in &class {
            count[c as usize + 1] += 1;
        }
        for c in 1..=classes {
            count[c] += count[c - 1];
        }
        for &s in &second {
            let c = class[s as usize] as usize;
            sa[count[c]] = s;
            count[c] += 1;
        }

        let key = |i: usize| (class[i], class.get(i + k).map_or(-1i64, |&c| c as i64));
        next_class[sa[0] as usize] = 0;
        let mut c = 0u32;
        for w in 1..n {
            if key(sa[w] as usize) != key(sa[w - 1] as usize) {
                c += 1;
            }
            next_class[sa[w] as usize] = c;
        }
        std::mem::swap(&mut class, &mut next_class);
        classes = c as usize + 1;
        if classes == n {
            break;
        }
        k *= 2;
    }
    sa
}

/// `lcp[r]` is the longest common prefix of suffixes `sa[r-1]` and `sa[r]`;
/// `lcp[0] = 0`.
pub(crate) fn lcp_array(data: &[u32], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = data.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && data[i + h] == data[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}
