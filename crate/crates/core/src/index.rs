//! The LCEW index: selected positions, the Jump table and a plain-LCE
//! oracle over `T_#`, answering a query in `O(t)` time.
//!
//! A query alternates two steps. The first walks both suffixes with plain
//! LCE queries and wildcard-run hops until it hits a mismatch or a selected
//! position on either side; at most `2t` rounds are needed since each round
//! ends on a transition. The second uses the Jump table row of the selected
//! side to skip straight past the last selected position of the extension.
//! Three such alternations always suffice.

use crate::error::{Error, Result};
use crate::fft_match::{FftMatcher, Matcher};
use crate::jump::{build_jump, JumpTable, NEG};
use crate::lce::{check_index, kangaroo0, LceOracle};
use crate::text::{sym_match, SelectionScheme, WildcardText};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Jump table plus plain LCE, `O(t)` per query.
    Tradeoff,
    /// No table; every query is answered by kangaroo jumping.
    Kangaroo,
}

/// Counters accumulated over one or more queries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QueryStats {
    pub queries: usize,
    pub alg1_calls: usize,
    pub alg1_total_iterations: usize,
    pub alg1_max_iterations: usize,
    /// Largest loop count of a single top-level query.
    pub alg2_max_iterations: usize,
    pub alg2_total_iterations: usize,
    pub lce_calls: usize,
    pub jump_lookups: usize,
    pub kangaroo_rounds: usize,
}

impl QueryStats {
    /// Abstract work units: plain-LCE probes plus table consultations.
    pub fn work(&self) -> usize {
        self.lce_calls + self.jump_lookups
    }
}

#[derive(Clone, Debug)]
pub struct LcewIndex {
    text: WildcardText,
    selection: SelectionScheme,
    jump: Option<JumpTable>,
    oracle: LceOracle,
    mode: Mode,
}

impl LcewIndex {
    /// Builds the index for tradeoff parameter `t`. Values above `|Tr|`
    /// select kangaroo mode.
    pub fn build(text: WildcardText, t: usize) -> Result<LcewIndex> {
        LcewIndex::build_with(text, t, &FftMatcher)
    }

    pub fn build_with<M: Matcher + ?Sized>(text: WildcardText, t: usize, matcher: &M) -> Result<LcewIndex> {
        let selection = SelectionScheme::new(&text, t)?;
        let oracle = LceOracle::new(&text);
        if t > text.transitions().len() {
            return Ok(LcewIndex { text, selection, jump: None, oracle, mode: Mode::Kangaroo });
        }
        let jump = build_jump(&text, &selection, matcher)?;
        Ok(LcewIndex { text, selection, jump: Some(jump), oracle, mode: Mode::Tradeoff })
    }

    /// Kangaroo-mode index regardless of `|Tr|`.
    pub fn build_kangaroo(text: WildcardText) -> Result<LcewIndex> {
        let selection = SelectionScheme::new(&text, text.transitions().len().max(1))?;
        let oracle = LceOracle::new(&text);
        Ok(LcewIndex { text, selection, jump: None, oracle, mode: Mode::Kangaroo })
    }

    pub fn text(&self) -> &WildcardText {
        &self.text
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    pub fn selection(&self) -> &SelectionScheme {
        &self.selection
    }

    pub fn t(&self) -> usize {
        self.selection.t()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn jump_table(&self) -> Option<&JumpTable> {
        self.jump.as_ref()
    }

    pub fn oracle(&self) -> &LceOracle {
        &self.oracle
    }

    /// Cells held by the Jump table (0 in kangaroo mode).
    pub fn table_cells(&self) -> usize {
        self.jump.as_ref().map_or(0, JumpTable::cell_count)
    }

    /// Construction cost in the same abstract units as [`QueryStats::work`]:
    /// `n` for the oracle, plus `n·(1 + ⌈log2 n⌉)` per table row.
    pub fn construction_work(&self) -> usize {
        let n = self.text.len();
        match self.mode {
            Mode::Kangaroo => n,
            Mode::Tradeoff => {
                let log = n.next_power_of_two().trailing_zeros() as usize;
                n + self.selection.lambda() * n * (1 + log)
            }
        }
    }

    fn check(&self, i: usize, j: usize) -> Result<()> {
        check_index(i, self.text.len())?;
        check_index(j, self.text.len())
    }

    /// `LCEW(i, j)`, 1-based.
    pub fn lcew(&self, i: usize, j: usize) -> Result<usize> {
        self.lcew_with_stats(i, j, &mut QueryStats::default())
    }

    pub fn lcew_with_stats(&self, i: usize, j: usize, stats: &mut QueryStats) -> Result<usize> {
        self.check(i, j)?;
        Ok(self.lcew0(i - 1, j - 1, stats))
    }

    /// Extension up to the first mismatch or the first selected position on
    /// either side.
    pub fn next_selected_or_mismatch(&self, i: usize, j: usize) -> Result<usize> {
        self.check(i, j)?;
        Ok(self.nsom0(i - 1, j - 1, &mut QueryStats::default(), None))
    }

    /// As [`Self::next_selected_or_mismatch`], also returning the matched
    /// length at the end of every loop round.
    pub fn next_selected_or_mismatch_traced(&self, i: usize, j: usize) -> Result<(usize, Vec<usize>)> {
        self.check(i, j)?;
        let mut trace = Vec::new();
        let l = self.nsom0(i - 1, j - 1, &mut QueryStats::default(), Some(&mut trace));
        Ok((l, trace))
    }

    /// `LCEW_{P,Q}(i, j)` for an index built over `P·Q` with `|P| = p_len`.
    pub fn lcew_cross(&self, p_len: usize, i: usize, j: usize) -> Result<usize> {
        self.lcew_cross_with_stats(p_len, i, j, &mut QueryStats::default())
    }

    pub fn lcew_cross_with_stats(&self, p_len: usize, i: usize, j: usize, stats: &mut QueryStats) -> Result<usize> {
        let n = self.text.len();
        if p_len > n {
            return Err(Error::InvalidParameter(format!("prefix length {p_len} exceeds text length {n}")));
        }
        check_index(i, p_len)?;
        check_index(j, n - p_len)?;
        let l = self.lcew0(i - 1, j - 1 + p_len, stats);
        Ok(l.min(p_len - i + 1).min(n - p_len - j + 1))
    }

    pub(crate) fn lcew0(&self, i: usize, j: usize, stats: &mut QueryStats) -> usize {
        stats.queries += 1;
        let Some(jump) = &self.jump else {
            let (l, rounds) = kangaroo0(&self.text, &self.oracle, i, j);
            stats.kangaroo_rounds += rounds;
            stats.lce_calls += rounds;
            return l;
        };
        let s = self.text.symbols();
        let n = s.len();
        let mut l = 0;
        let mut iterations = 0;
        while i + l < n && j + l < n {
            iterations += 1;
            l += self.nsom0(i + l, j + l, stats, None);
            if i + l >= n || j + l >= n || !sym_match(s[i + l], s[j + l]) {
                break;
            }
            stats.jump_lookups += 1;
            let d = match self.selection.row0(i + l) {
                Some(r) => jump.get0(r, j + l),
                None => {
                    let r = self.selection.row0(j + l).expect("one side stops on a selected position");
                    jump.get0(r, i + l)
                }
            };
            debug_assert!(d != NEG);
            l += d as usize + 1;
        }
        stats.alg2_total_iterations += iterations;
        stats.alg2_max_iterations = stats.alg2_max_iterations.max(iterations);
        l.min(n - i.max(j))
    }

    fn nsom0(&self, i: usize, j: usize, stats: &mut QueryStats, trace: Option<&mut Vec<usize>>) -> usize {
        nsom(&self.text, &self.selection, &self.oracle, i, j, stats, trace)
    }
}

/// One extension from 0-based `(i, j)` up to a mismatch or a selected
/// position on either side, in at most `2t` plain-LCE rounds.
pub(crate) fn nsom(
    text: &WildcardText,
    selection: &SelectionScheme,
    oracle: &LceOracle,
    i: usize,
    j: usize,
    stats: &mut QueryStats,
    mut trace: Option<&mut Vec<usize>>,
) -> usize {
    let s = text.symbols();
    let n = s.len();
    let nextpos = text.nextpos0();
    let m = selection.nextsel0(i).min(selection.nextsel0(j));
    let mut l = 0;
    let mut iterations = 0;
    while l < m && i + l < n && j + l < n && sym_match(s[i + l], s[j + l]) {
        iterations += 1;
        stats.lce_calls += 1;
        l = (l + oracle.lce0(i + l, j + l)).min(m);
        if l < m {
            let mut d = 0;
            if s[i + l].is_wildcard() {
                d = nextpos[i + l] as usize;
            }
            if s[j + l].is_wildcard() {
                d = d.max(nextpos[j + l] as usize);
            }
            l = (l + d).min(m);
        }
        if let Some(t) = trace.as_deref_mut() {
            t.push(l);
        }
    }
    stats.alg1_calls += 1;
    stats.alg1_total_iterations += iterations;
    stats.alg1_max_iterations = stats.alg1_max_iterations.max(iterations);
    l
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;
    use crate::fft_match::NaiveMatcher;
    use proptest::prelude::*;

    fn text(s: &str) -> WildcardText {
        WildcardText::from_str_with(s, b'?').unwrap()
    }

    #[test]
    fn small_trace() {
        let idx = LcewIndex::build(text("a?ba"), 1).unwrap();
        assert_eq!(idx.mode(), Mode::Tradeoff);
        assert_eq!(idx.next_selected_or_mismatch(1, 2).unwrap(), 1);
        assert_eq!(idx.lcew(1, 2).unwrap(), 2);
        assert_eq!(idx.next_selected_or_mismatch(3, 3).unwrap(), 0);
        assert_eq!(idx.next_selected_or_mismatch(1, 3).unwrap(), 0);
    }

    #[test]
    fn overlap_example() {
        for t in 1..=3 {
            let idx = LcewIndex::build(text("ab?bc"), t).unwrap();
            assert_eq!(idx.lcew(1, 3).unwrap(), 3);
            assert_eq!(idx.lcew(1, 2).unwrap(), 0);
            for i in 1..=5 {
                assert_eq!(idx.lcew(i, i).unwrap(), 6 - i);
            }
        }
    }

    #[test]
    fn out_of_range() {
        let idx = LcewIndex::build(text("abc"), 1).unwrap();
        assert!(matches!(idx.lcew(0, 1), Err(Error::OutOfRange { .. })));
        assert!(matches!(idx.lcew(1, 4), Err(Error::OutOfRange { .. })));
        assert!(idx.next_selected_or_mismatch(4, 1).is_err());
    }

    #[test]
    fn large_t_uses_kangaroo() {
        let t = text("abab???aaaa????ba???bb");
        assert_eq!(t.transitions().len(), 4);
        let idx = LcewIndex::build(t.clone(), 5).unwrap();
        assert_eq!(idx.mode(), Mode::Kangaroo);
        assert_eq!(idx.table_cells(), 0);
        let tr = LcewIndex::build(t, 4).unwrap();
        assert_eq!(tr.table_cells(), 2 * 22);
    }

    #[test]
    fn cross_queries() {
        let pq = text("aba?");
        let idx = LcewIndex::build(pq, 1).unwrap();
        assert_eq!(idx.lcew_cross(2, 1, 1).unwrap(), 2);
        assert!(idx.lcew_cross(2, 2, 1).unwrap() <= 1);
        assert!(idx.lcew_cross(2, 3, 1).is_err());
        assert!(idx.lcew_cross(2, 1, 3).is_err());
        let idx = LcewIndex::build(text("abcb"), 1).unwrap();
        assert_eq!(idx.lcew_cross(2, 1, 1).unwrap(), 0);
    }

    fn raw(alpha: &'static [u8], max: usize) -> impl Strategy<Value = Vec<u8>> {
        prop::collection::vec(prop::sample::select(alpha), 1..max)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn all_pairs_all_t(raw in raw(b"ab???", 48)) {
            let t = WildcardText::new(&raw, b'?').unwrap();
            let n = t.len();
            let kangaroo = LcewIndex::build_kangaroo(t.clone()).unwrap();
            for tp in 1..=t.transitions().len() {
                let idx = LcewIndex::build_with(t.clone(), tp, &NaiveMatcher).unwrap();
                for i in 1..=n {
                    for j in 1..=n {
                        let mut stats = QueryStats::default();
                        let got = idx.lcew_with_stats(i, j, &mut stats).unwrap();
                        prop_assert_eq!(got, brute::lcew(t.symbols(), i, j));
                        prop_assert_eq!(got, kangaroo.lcew(i, j).unwrap());
                        prop_assert!(stats.alg1_max_iterations <= 2 * tp);
                        prop_assert!(stats.alg2_max_iterations <= 3);
                    }
                }
            }
        }

        #[test]
        fn nsom_postconditions(raw in raw(b"abc??", 64), tp in 1usize..4) {
            let t = WildcardText::new(&raw, b'?').unwrap();
            let n = t.len();
            let s = t.symbols();
            let idx = LcewIndex::build(t.clone(), tp).unwrap();
            let sel = idx.selection();
            let tr = t.transitions();
            for i in 1..=n {
                for j in 1..=n {
                    let (l, trace) = idx.next_selected_or_mismatch_traced(i, j).unwrap();
                    prop_assert!(l <= sel.nextsel(i).min(sel.nextsel(j)));
                    prop_assert!((0..l).all(|x| sym_match(s[i + x - 1], s[j + x - 1])));
                    let stopped = l == sel.nextsel(i) || l == sel.nextsel(j)
                        || !sym_match(s[i + l - 1], s[j + l - 1]);
                    prop_assert!(stopped);
                    for &e in &trace {
                        let at_transition = tr.contains(&(i + e)) || tr.contains(&(j + e));
                        let mismatch = !sym_match(s[i + e - 1], s[j + e - 1]);
                        prop_assert!(at_transition || mismatch);
                    }
                }
            }
        }

        #[test]
        fn cross_matches_scan(p in raw(b"ab?", 24), q in raw(b"ab?", 24), tp in 1usize..4) {
            let pt = WildcardText::new(&p, b'?').unwrap();
            let qt = WildcardText::new(&q, b'?').unwrap();
            let joined = pt.concat(&qt).unwrap();
            let (ps, qs) = joined.symbols().split_at(p.len());
            let (ps, qs) = (ps.to_vec(), qs.to_vec());
            let idx = LcewIndex::build(joined, tp).unwrap();
            for i in 1..=p.len() {
                for j in 1..=q.len() {
                    prop_assert_eq!(idx.lcew_cross(p.len(), i, j).unwrap(), brute::lcew_cross(&ps, &qs, i, j));
                }
            }
        }
    }
}
