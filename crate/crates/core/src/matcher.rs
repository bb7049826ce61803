//! The matching pipeline.
//!
//! * [`substitute`] replaces the `i`-th non-solid pattern symbol by a fresh
//!   lambda symbol of rank `sigma + i - 1`, giving a solid pattern.
//! * [`kangaroo_search`] computes, for every alignment `i` in `0..=n-m`,
//!   the positions of the first `k + 1` mismatches with one LCE query per
//!   jump. An alignment is an *approximate occurrence* when its mismatches
//!   are exactly the lambda positions it covers.
//! * [`filter`] checks each lambda mismatch of an approximate occurrence
//!   against the original sets; it is *fake* when the sets do intersect.
//!   Alignments whose mismatches are all fake are the exact occurrences.
//!
//! Non-solid text symbols are handled the same way: they get their own
//! lambdas (numbered after the pattern's) and are verified with full set
//! intersection.
//!
//! Alignments are 0-based (`i` means the window starts at text position
//! `i + 1`); pattern and text positions are 1-based.

use crate::alphabet::Alphabet;
use crate::error::MatchError;
use crate::lce::{LceIndex, SolidSequence};
use crate::string::DegenerateString;
use crate::symbol::DegenerateSymbol;

/// Replaces each non-solid symbol of `s` by a lambda rank, starting at
/// `first_lambda`.
fn solidify(
    s: &DegenerateString,
    sigma: usize,
    first_lambda: u32,
) -> (Vec<u32>, Vec<DegenerateSymbol>) {
    let mut ranks = Vec::with_capacity(s.len());
    let mut sets = Vec::with_capacity(s.non_solid_count());
    for sym in s.symbols() {
        match sym.solid_rank() {
            Some(r) => {
                assert!(
                    (r as usize) < sigma,
                    "symbol rank {r} outside alphabet of size {sigma}"
                );
                ranks.push(r);
            }
            None => {
                ranks.push(first_lambda + sets.len() as u32);
                sets.push(sym.clone());
            }
        }
    }
    (ranks, sets)
}

/// A pattern with its non-solid symbols replaced by lambdas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaPattern {
    solidified: Vec<u32>,
    original_sets: Vec<DegenerateSymbol>,
    lambda_positions: Vec<usize>,
    sigma: usize,
}

impl LambdaPattern {
    pub fn len(&self) -> usize {
        self.solidified.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solidified.is_empty()
    }

    /// Number of lambdas.
    pub fn k(&self) -> usize {
        self.lambda_positions.len()
    }

    /// Ranks over the extended alphabet; lambda `i` has rank `sigma + i - 1`.
    pub fn solidified(&self) -> &[u32] {
        &self.solidified
    }

    /// Original set of each lambda, indexed by lambda number minus one.
    pub fn original_sets(&self) -> &[DegenerateSymbol] {
        &self.original_sets
    }

    /// 1-based pattern positions holding lambdas.
    pub fn lambda_positions(&self) -> &[usize] {
        &self.lambda_positions
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    /// Lambda number (1-based) at 1-based `position`, if any.
    pub fn lambda_at(&self, position: usize) -> Option<usize> {
        let r = *self.solidified.get(position.checked_sub(1)?)? as usize;
        (r >= self.sigma).then(|| r - self.sigma + 1)
    }
}

pub fn substitute(pattern: &DegenerateString, alphabet: &Alphabet) -> LambdaPattern {
    let sigma = alphabet.size();
    let (solidified, original_sets) = solidify(pattern, sigma, sigma as u32);
    LambdaPattern {
        solidified,
        original_sets,
        lambda_positions: pattern.non_solid_positions().to_vec(),
        sigma,
    }
}

/// A text made solid for indexing; its lambdas follow the pattern's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaText {
    ranks: Vec<u32>,
    original_sets: Vec<DegenerateSymbol>,
    lambda_positions: Vec<usize>,
    first_lambda: u32,
}

impl LambdaText {
    /// A text that is already solid, given as alphabet ranks.
    pub fn solid(ranks: Vec<u32>) -> Self {
        LambdaText {
            ranks,
            original_sets: Vec::new(),
            lambda_positions: Vec::new(),
            first_lambda: u32::MAX,
        }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn k(&self) -> usize {
        self.lambda_positions.len()
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn lambda_positions(&self) -> &[usize] {
        &self.lambda_positions
    }

    pub fn original_sets(&self) -> &[DegenerateSymbol] {
        &self.original_sets
    }

    #[inline]
    fn set_at(&self, offset: usize) -> Option<&DegenerateSymbol> {
        let r = self.ranks[offset];
        (r >= self.first_lambda).then(|| &self.original_sets[(r - self.first_lambda) as usize])
    }
}

/// Solidifies `text`, numbering its lambdas after `pattern_lambdas` pattern
/// lambdas so the two never collide.
pub fn solidify_text(
    text: &DegenerateString,
    alphabet: &Alphabet,
    pattern_lambdas: usize,
) -> LambdaText {
    let sigma = alphabet.size();
    let first_lambda = (sigma + pattern_lambdas) as u32;
    let (ranks, original_sets) = solidify(text, sigma, first_lambda);
    LambdaText {
        ranks,
        original_sets,
        lambda_positions: text.non_solid_positions().to_vec(),
        first_lambda,
    }
}

/// Builds the LCE index over `text · pattern · #`.
///
/// The separator takes the highest rank, after every lambda.
pub fn build_index(pattern: &LambdaPattern, text: &LambdaText) -> Result<LceIndex, MatchError> {
    let separator = (pattern.sigma + pattern.k() + text.k()) as u32;
    let mut data = Vec::with_capacity(text.len() + pattern.len() + 1);
    data.extend_from_slice(&text.ranks);
    data.extend_from_slice(&pattern.solidified);
    data.push(separator);
    Ok(LceIndex::build(SolidSequence::new(data, separator))?)
}

/// `k x sigma` membership bits: does base symbol `a` belong to the set
/// behind lambda `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipTable {
    sigma: usize,
    bits: Vec<bool>,
}

impl MembershipTable {
    /// Lambda number is 1-based.
    #[inline]
    pub fn contains(&self, lambda: usize, rank: u32) -> bool {
        debug_assert!(lambda >= 1);
        self.bits[(lambda - 1) * self.sigma + rank as usize]
    }

    pub fn k(&self) -> usize {
        self.bits.len().checked_div(self.sigma).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

pub fn precompute_membership(pattern: &LambdaPattern, alphabet: &Alphabet) -> MembershipTable {
    let sigma = alphabet.size();
    let mut bits = vec![false; pattern.k() * sigma];
    for (l, set) in pattern.original_sets.iter().enumerate() {
        for r in set.ranks() {
            bits[l * sigma + r as usize] = true;
        }
    }
    MembershipTable { sigma, bits }
}

/// First `width` mismatch positions of every alignment.
///
/// Entries are 1-based pattern positions; `m + 1` means the alignment
/// matched through to the end and fills the rest of the row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MismatchTable {
    pattern_len: usize,
    width: usize,
    entries: Vec<u32>,
}

impl MismatchTable {
    pub fn alignments(&self) -> usize {
        self.entries.len().checked_div(self.width).unwrap_or(0)
    }

    /// Mismatches tracked per alignment, `k + 1`.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn sentinel(&self) -> usize {
        self.pattern_len + 1
    }

    pub fn row(&self, alignment: usize) -> &[u32] {
        &self.entries[alignment * self.width..(alignment + 1) * self.width]
    }

    /// Entry for alignment `i` (0-based) and mismatch `j` (1-based).
    pub fn get(&self, alignment: usize, j: usize) -> usize {
        self.row(alignment)[j - 1] as usize
    }

    /// Non-sentinel entries of a row.
    pub fn mismatches(&self, alignment: usize) -> impl Iterator<Item = usize> + '_ {
        let s = self.sentinel();
        self.row(alignment)
            .iter()
            .map(|&e| e as usize)
            .filter(move |&e| e != s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub table: Option<MismatchTable>,
    /// 0-based alignments, increasing.
    pub approximate: Vec<usize>,
    pub lce_queries: u64,
}

fn check_index(
    pattern: &LambdaPattern,
    text: &LambdaText,
    index: &LceIndex,
) -> Result<(), MatchError> {
    if pattern.is_empty() {
        return Err(MatchError::EmptyPattern);
    }
    if index.len() != text.len() + pattern.len() + 1 {
        return Err(MatchError::IndexMismatch {
            actual: index.len(),
            text: text.len(),
            pattern: pattern.len(),
        });
    }
    Ok(())
}

/// Kangaroo k-mismatch search keeping the full mismatch table.
///
/// `index` must come from [`build_index`] on the same pattern and text.
pub fn kangaroo_search(
    pattern: &LambdaPattern,
    text: &LambdaText,
    index: &LceIndex,
) -> Result<SearchOutcome, MatchError> {
    kangaroo_scan(pattern, text, index, true)
}

/// Kangaroo search; without `retain_table` only the approximate
/// occurrences are kept and hopeless alignments stop early.
pub fn kangaroo_scan(
    pattern: &LambdaPattern,
    text: &LambdaText,
    index: &LceIndex,
    retain_table: bool,
) -> Result<SearchOutcome, MatchError> {
    check_index(pattern, text, index)?;
    let n = text.len();
    let m = pattern.len();
    let k = pattern.k() + text.k();
    let width = k + 1;
    let sentinel = m + 1;
    if m > n {
        return Ok(SearchOutcome {
            table: retain_table.then(|| MismatchTable {
                pattern_len: m,
                width,
                entries: Vec::new(),
            }),
            approximate: Vec::new(),
            lce_queries: 0,
        });
    }

    let alignments = n - m + 1;
    let mut entries = Vec::with_capacity(if retain_table { alignments * width } else { 0 });
    let mut approximate = Vec::new();
    let mut queries = 0u64;
    // Text lambdas inside the window [i, i + m), as 1-based positions.
    let text_lambdas = &text.lambda_positions;
    let (mut lo, mut hi) = (0usize, 0usize);

    for i in 0..alignments {
        while lo < text_lambdas.len() && text_lambdas[lo] <= i {
            lo += 1;
        }
        while hi < text_lambdas.len() && text_lambdas[hi] <= i + m {
            hi += 1;
        }
        // Every lambda in the window is a guaranteed mismatch; a position
        // holding lambdas on both sides counts once.
        let window = &text_lambdas[lo..hi];
        let shared = window
            .iter()
            .filter(|&&t| pattern.lambda_at(t - i).is_some())
            .count();
        let budget = pattern.k() + window.len() - shared;

        let row_start = entries.len();
        let mut f = 0usize;
        let mut mismatches = 0usize;
        let mut reached_end = false;
        for _ in 0..width {
            let next = if f == m {
                sentinel
            } else {
                queries += 1;
                let ext = index.extension(i + f, n + f).min(m - f);
                f + ext + 1
            };
            if retain_table {
                entries.push(next as u32);
            }
            if next == sentinel {
                reached_end = true;
                break;
            }
            mismatches += 1;
            if !retain_table && mismatches > budget {
                break;
            }
            f = next;
        }
        if retain_table {
            entries.resize(row_start + width, sentinel as u32);
        }
        if reached_end && mismatches == budget {
            approximate.push(i);
        }
    }

    Ok(SearchOutcome {
        table: retain_table.then_some(MismatchTable {
            pattern_len: m,
            width,
            entries,
        }),
        approximate,
        lce_queries: queries,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// The original symbols do not intersect.
    Real,
    /// The mismatch only exists because of the lambda substitution.
    Fake,
}

/// Verdicts for one approximate occurrence, keyed by 1-based pattern
/// position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceVerdicts {
    pub alignment: usize,
    pub checks: Vec<(usize, Verdict)>,
}

impl OccurrenceVerdicts {
    pub fn all_fake(&self) -> bool {
        self.checks.iter().all(|&(_, v)| v == Verdict::Fake)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatchReport {
    /// 1-based text positions where the pattern occurs, increasing.
    pub exact_occurrences: Vec<usize>,
    /// 0-based alignments surviving the kangaroo search, increasing.
    pub approximate_occurrences: Vec<usize>,
    /// Per approximate occurrence, every lambda verdict (diagnostics only).
    pub verdicts: Option<Vec<OccurrenceVerdicts>>,
    /// Full mismatch table (diagnostics only).
    pub mismatch_table: Option<MismatchTable>,
    pub lce_queries: u64,
}

/// Keeps the approximate occurrences whose lambda mismatches are all fake.
///
/// With `record_verdicts` every lambda position is checked and recorded;
/// otherwise an alignment is dropped at its first real mismatch.
pub fn filter(
    pattern: &LambdaPattern,
    text: &LambdaText,
    approximate: &[usize],
    membership: &MembershipTable,
    record_verdicts: bool,
) -> MatchReport {
    let m = pattern.len();
    let mut exact = Vec::new();
    let mut verdicts = record_verdicts.then(Vec::new);
    let text_lambdas = &text.lambda_positions;
    let mut lo = 0usize;
    let mut positions: Vec<usize> = Vec::with_capacity(pattern.k());

    for &i in approximate {
        while lo < text_lambdas.len() && text_lambdas[lo] <= i {
            lo += 1;
        }
        // Window positions e (1-based) hit by a lambda on either side.
        positions.clear();
        positions.extend_from_slice(&pattern.lambda_positions);
        if !text_lambdas.is_empty() {
            let in_window = text_lambdas[lo..].iter().take_while(|&&t| t <= i + m);
            positions.extend(in_window.map(|&t| t - i));
            positions.sort_unstable();
            positions.dedup();
        }

        let mut checks = Vec::new();
        let mut all_fake = true;
        for &e in &positions {
            let offset = i + e - 1;
            let fake = match (pattern.lambda_at(e), text.set_at(offset)) {
                (Some(l), None) => membership.contains(l, text.ranks[offset]),
                (Some(l), Some(t)) => pattern.original_sets[l - 1].intersects(t),
                (None, Some(t)) => t.contains(pattern.solidified[e - 1]),
                (None, None) => pattern.solidified[e - 1] == text.ranks[offset],
            };
            let verdict = if fake { Verdict::Fake } else { Verdict::Real };
            if record_verdicts {
                checks.push((e, verdict));
            }
            if !fake {
                all_fake = false;
                if !record_verdicts {
                    break;
                }
            }
        }
        if all_fake {
            exact.push(i + 1);
        }
        if let Some(v) = verdicts.as_mut() {
            v.push(OccurrenceVerdicts {
                alignment: i,
                checks,
            });
        }
    }

    MatchReport {
        exact_occurrences: exact,
        approximate_occurrences: approximate.to_vec(),
        verdicts,
        mismatch_table: None,
        lce_queries: 0,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MatchOptions {
    /// Keep the mismatch table and every lambda verdict.
    pub diagnostics: bool,
}

/// All 1-based positions where `pattern` occurs in `text`.
pub fn find_occurrences(
    pattern: &DegenerateString,
    text: &DegenerateString,
    alphabet: &Alphabet,
) -> Result<MatchReport, MatchError> {
    find_occurrences_with(pattern, text, alphabet, MatchOptions::default())
}

pub fn find_occurrences_with(
    pattern: &DegenerateString,
    text: &DegenerateString,
    alphabet: &Alphabet,
    options: MatchOptions,
) -> Result<MatchReport, MatchError> {
    if pattern.is_empty() {
        return Err(MatchError::EmptyPattern);
    }
    let lp = substitute(pattern, alphabet);
    let lt = solidify_text(text, alphabet, lp.k());
    if lp.len() > lt.len() {
        return Ok(MatchReport {
            verdicts: options.diagnostics.then(Vec::new),
            mismatch_table: options.diagnostics.then(|| MismatchTable {
                pattern_len: lp.len(),
                width: lp.k() + lt.k() + 1,
                entries: Vec::new(),
            }),
            ..MatchReport::default()
        });
    }
    let index = build_index(&lp, &lt)?;
    let outcome = kangaroo_scan(&lp, &lt, &index, options.diagnostics)?;
    let membership = precompute_membership(&lp, alphabet);
    let mut report = filter(
        &lp,
        &lt,
        &outcome.approximate,
        &membership,
        options.diagnostics,
    );
    report.mismatch_table = outcome.table;
    report.lce_queries = outcome.lce_queries;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_bracket, parse_solid};

    const PATTERN: &str = "a[bc]da[bd]";
    const TEXT: &str = "dacdabdadcabdac";

    fn abcd() -> Alphabet {
        Alphabet::new("abcd".chars()).unwrap()
    }

    fn example() -> (Alphabet, LambdaPattern, LambdaText) {
        let a = abcd();
        let p = parse_bracket(PATTERN, &a).unwrap();
        let t = parse_solid(TEXT, &a).unwrap();
        let lp = substitute(&p, &a);
        let lt = solidify_text(&t, &a, lp.k());
        (a, lp, lt)
    }

    /// Mismatch positions by direct comparison, first `width` of them.
    fn naive_row(p: &[u32], t: &[u32], i: usize, width: usize) -> Vec<u32> {
        let m = p.len();
        let mut row: Vec<u32> = (1..=m)
            .filter(|&e| t[i + e - 1] != p[e - 1])
            .map(|e| e as u32)
            .take(width)
            .collect();
        row.resize(width, m as u32 + 1);
        row
    }

    #[test]
    fn substitution() {
        let (_, lp, _) = example();
        // a=0 b=1 c=2 d=3, lambda_1 = 4, lambda_2 = 5
        assert_eq!(lp.solidified(), &[0, 4, 3, 0, 5]);
        assert_eq!(lp.lambda_positions(), &[2, 5]);
        assert_eq!(
            lp.original_sets()[0].ranks().collect::<Vec<_>>(),
            vec![1, 2]
        );
        assert_eq!(
            lp.original_sets()[1].ranks().collect::<Vec<_>>(),
            vec![1, 3]
        );
        assert_eq!(lp.lambda_at(2), Some(1));
        assert_eq!(lp.lambda_at(5), Some(2));
        assert_eq!(lp.lambda_at(1), None);

        let a = abcd();
        let solid = substitute(&parse_bracket("abc", &a).unwrap(), &a);
        assert_eq!(solid.k(), 0);
        assert_eq!(solid.solidified(), &[0, 1, 2]);
        let one = substitute(&parse_bracket("[ab]", &a).unwrap(), &a);
        assert_eq!(one.solidified(), &[4]);
        assert_eq!(one.lambda_positions(), &[1]);
    }

    #[test]
    fn membership() {
        let (a, lp, _) = example();
        let pre = precompute_membership(&lp, &a);
        assert_eq!(pre.k(), 2);
        assert!(pre.contains(1, 1) && pre.contains(1, 2) && !pre.contains(1, 0));
        assert!(pre.contains(2, 3) && !pre.contains(2, 2));
        let solid = substitute(&parse_bracket("ab", &a).unwrap(), &a);
        assert!(precompute_membership(&solid, &a).is_empty());
    }

    #[test]
    fn index_over_text_and_pattern() {
        let (_, lp, lt) = example();
        let idx = build_index(&lp, &lt).unwrap();
        assert_eq!(idx.len(), 21);
        // t[8..] = "adcab..." against p[1..] = "a lambda_1 ..."
        assert_eq!(idx.lce(7, 15), Ok(1));
    }

    #[test]
    fn mismatch_table_matches_direct_comparison() {
        let (_, lp, lt) = example();
        let idx = build_index(&lp, &lt).unwrap();
        let out = kangaroo_search(&lp, &lt, &idx).unwrap();
        let table = out.table.unwrap();
        assert_eq!(table.alignments(), 11);
        for i in 0..11 {
            assert_eq!(
                table.row(i),
                naive_row(lp.solidified(), lt.ranks(), i, 3),
                "alignment {i}"
            );
        }
        assert_eq!(table.row(7), &[2, 3, 5]);
        assert_eq!(out.approximate, vec![1, 4, 10]);
        assert!(out.lce_queries <= 3 * 11);
    }

    #[test]
    fn filter_verdicts() {
        let (a, lp, lt) = example();
        let pre = precompute_membership(&lp, &a);
        let report = filter(&lp, &lt, &[1, 4, 10], &pre, true);
        assert_eq!(report.exact_occurrences, vec![2, 5]);
        let v = report.verdicts.unwrap();
        assert_eq!(v[0].checks, vec![(2, Verdict::Fake), (5, Verdict::Fake)]);
        assert_eq!(v[2].checks, vec![(2, Verdict::Fake), (5, Verdict::Real)]);

        let quick = filter(&lp, &lt, &[1, 4, 10], &pre, false);
        assert_eq!(quick.exact_occurrences, vec![2, 5]);
        assert!(quick.verdicts.is_none());
    }

    #[test]
    fn end_to_end() {
        let a = abcd();
        let p = parse_bracket(PATTERN, &a).unwrap();
        let t = parse_solid(TEXT, &a).unwrap();
        let r = find_occurrences(&p, &t, &a).unwrap();
        assert_eq!(r.exact_occurrences, vec![2, 5]);
        assert_eq!(r.approximate_occurrences, vec![1, 4, 10]);
        assert!(r.mismatch_table.is_none());

        let d = find_occurrences_with(&p, &t, &a, MatchOptions { diagnostics: true }).unwrap();
        assert_eq!(d.exact_occurrences, r.exact_occurrences);
        assert_eq!(d.mismatch_table.unwrap().get(7, 1), 2);
    }

    #[test]
    fn exact_matching_when_k_is_zero() {
        let a = abcd();
        let p = parse_bracket("aa", &a).unwrap();
        let t = parse_bracket("aaa", &a).unwrap();
        let r = find_occurrences_with(&p, &t, &a, MatchOptions { diagnostics: true }).unwrap();
        let table = r.mismatch_table.unwrap();
        assert_eq!(table.width(), 1);
        assert_eq!(table.get(0, 1), 3);
        assert_eq!(table.get(1, 1), 3);
        assert_eq!(r.approximate_occurrences, vec![0, 1]);
        assert_eq!(r.exact_occurrences, vec![1, 2]);
    }

    #[test]
    fn degenerate_text() {
        let a = abcd();
        let p = parse_bracket("a", &a).unwrap();
        let t = parse_bracket("[ab]c", &a).unwrap();
        assert_eq!(
            find_occurrences(&p, &t, &a).unwrap().exact_occurrences,
            vec![1]
        );

        // lambda against lambda
        let p = parse_bracket("[cd]a", &a).unwrap();
        let t = parse_bracket("[ab]a[bd]a", &a).unwrap();
        let r = find_occurrences_with(&p, &t, &a, MatchOptions { diagnostics: true }).unwrap();
        assert_eq!(r.exact_occurrences, vec![3]);
        assert_eq!(r.approximate_occurrences, vec![0, 1, 2]);
        let v = r.verdicts.unwrap();
        assert_eq!(v[0].checks, vec![(1, Verdict::Real)]);
        assert_eq!(v[1].checks, vec![(1, Verdict::Real), (2, Verdict::Real)]);
        assert_eq!(v[2].checks, vec![(1, Verdict::Fake)]);
    }

    #[test]
    fn pattern_longer_than_text() {
        let a = abcd();
        let p = parse_bracket("abc", &a).unwrap();
        let t = parse_bracket("ab", &a).unwrap();
        let r = find_occurrences(&p, &t, &a).unwrap();
        assert!(r.exact_occurrences.is_empty());
        assert!(r.approximate_occurrences.is_empty());
    }

    #[test]
    fn empty_pattern_is_an_error() {
        let a = abcd();
        let t = parse_bracket("ab", &a).unwrap();
        assert_eq!(
            find_occurrences(&DegenerateString::default(), &t, &a),
            Err(MatchError::EmptyPattern)
        );
    }

    #[test]
    fn index_must_fit_inputs() {
        let (_, lp, lt) = example();
        let other = LambdaText::solid(vec![0, 1, 2, 3, 0, 1]);
        let idx = build_index(&lp, &other).unwrap();
        assert!(matches!(
            kangaroo_search(&lp, &lt, &idx),
            Err(MatchError::IndexMismatch { .. })
        ));
    }
}
