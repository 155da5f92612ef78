//! Approximate pattern matching with `k` edit errors, wildcards allowed in
//! both pattern and text.
//!
//! The Landau–Vishkin scheme tracks, for every diagonal `d` (text offset)
//! and error budget `e`, the furthest pattern row reachable with at most
//! `e` edits. Each step takes the best of a substitution, an insertion and
//! a deletion, then slides along the diagonal with one LCEW query on the
//! concatenation `P·F`. The text is cut into overlapping fragments of about
//! `2m + k` symbols so that each index stays small.

use crate::error::{Error, Result};
use crate::index::{LcewIndex, QueryStats};
use crate::text::WildcardText;

/// Sorted end positions (1-based) of substrings within edit distance `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchReport {
    pub positions: Vec<usize>,
    pub k: usize,
    pub pattern_len: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub fragments: usize,
    pub lcew_queries: usize,
    /// Largest tradeoff parameter used by any fragment.
    pub max_t: usize,
}

/// Edit distance between `x` and `y` where a substitution is free iff the
/// two symbols match (either one being that text's wildcard).
pub fn ed_wild(x: &WildcardText, y: &WildcardText) -> usize {
    let (wx, wy) = (x.wildcard(), y.wildcard());
    let (xb, yb) = (x.to_bytes(), y.to_bytes());
    let mut prev: Vec<usize> = (0..=yb.len()).collect();
    let mut cur = vec![0; yb.len() + 1];
    for (r, &a) in xb.iter().enumerate() {
        cur[0] = r + 1;
        for (c, &b) in yb.iter().enumerate() {
            let free = a == b || a == wx || b == wy;
            cur[c + 1] = (prev[c] + usize::from(!free)).min(prev[c + 1] + 1).min(cur[c] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[yb.len()]
}

/// Fragment bounds `(start, end)`, 1-based inclusive: `T[i·m+1 .. (i+2)·m+k−1]`
/// clamped to `n`, stopping at the first fragment that reaches `n`. Every
/// substring of length at most `m + k` lies inside one of them.
pub fn fragments(n: usize, m: usize, k: usize) -> Vec<(usize, usize)> {
    if n < 2 * m {
        return vec![(1, n)];
    }
    let mut out = Vec::new();
    let mut i = 0;
    loop {
        let start = i * m + 1;
        let end = ((i + 2) * m + k - 1).min(n);
        out.push((start, end));
        if end == n {
            return out;
        }
        i += 1;
    }
}

/// Tradeoff parameter for one fragment with `groups` wildcard groups in
/// `P·F` and `transitions = |Tr|`.
pub fn choose_t(groups: usize, transitions: usize, m: usize, k: usize) -> usize {
    let log = (m as f64).log2();
    if groups as f64 * log >= k as f64 {
        if k == 0 {
            return transitions.max(1);
        }
        let t = ((groups as f64 / k as f64) * log).sqrt().ceil() as usize;
        t.clamp(1, transitions.max(1))
    } else {
        1
    }
}

fn check_inputs(text: &WildcardText, pattern: &WildcardText) -> Result<()> {
    if text.wildcard() != pattern.wildcard() {
        return Err(Error::WildcardMismatch(text.wildcard(), pattern.wildcard()));
    }
    Ok(())
}

fn trivial(text: &WildcardText, pattern: &WildcardText, k: usize) -> Option<MatchReport> {
    let (n, m) = (text.len(), pattern.len());
    // A pattern longer than the text can still match once k ≥ m − n.
    let positions = if k >= m {
        (1..=n).collect()
    } else {
        return None;
    };
    Some(MatchReport { positions, k, pattern_len: m })
}

/// All end positions `p` with `min_{i ≤ p} ed(T[i..p], P) ≤ k`.
pub fn pmwe_search(text: &WildcardText, pattern: &WildcardText, k: usize) -> Result<MatchReport> {
    Ok(pmwe_search_with_stats(text, pattern, k)?.0)
}

pub fn pmwe_search_with_stats(
    text: &WildcardText,
    pattern: &WildcardText,
    k: usize,
) -> Result<(MatchReport, SearchStats)> {
    search(text, pattern, k, true)
}

/// Runs one index over the whole text, without fragments.
pub fn pmwe_search_unchunked(text: &WildcardText, pattern: &WildcardText, k: usize) -> Result<MatchReport> {
    Ok(search(text, pattern, k, false)?.0)
}

fn search(text: &WildcardText, pattern: &WildcardText, k: usize, chunk: bool) -> Result<(MatchReport, SearchStats)> {
    check_inputs(text, pattern)?;
    let mut stats = SearchStats::default();
    if let Some(r) = trivial(text, pattern, k) {
        return Ok((r, stats));
    }
    let (n, m) = (text.len(), pattern.len());
    let frags = if chunk { fragments(n, m, k) } else { vec![(1, n)] };
    let t_bytes = text.to_bytes();
    let p_bytes = pattern.to_bytes();
    let mut hit = vec![false; n + 1];
    for (start, end) in frags {
        let mut raw = p_bytes.clone();
        raw.extend_from_slice(&t_bytes[start - 1..end]);
        let pf = WildcardText::new(&raw, text.wildcard())?;
        let t = choose_t(pf.group_count(), pf.transitions().len(), m, k);
        let index = LcewIndex::build(pf, t)?;
        stats.fragments += 1;
        stats.max_t = stats.max_t.max(t);
        let mut qs = QueryStats::default();
        for c in landau_vishkin(&index, m, end - start + 1, k, &mut qs)? {
            hit[start - 1 + c] = true;
        }
        stats.lcew_queries += qs.queries;
    }
    let positions = (1..=n).filter(|&p| hit[p]).collect();
    Ok((MatchReport { positions, k, pattern_len: m }, stats))
}

const NEG_INF: i64 = i64::MIN / 4;

/// End columns (1-based within the fragment) of matches with at most `k`
/// edits, for an index over `P·F` with `|P| = m`, `|F| = f`.
fn landau_vishkin(index: &LcewIndex, m: usize, f: usize, k: usize, qs: &mut QueryStats) -> Result<Vec<usize>> {
    let (mi, fi, ki) = (m as i64, f as i64, k as i64);
    let lo = -ki;
    let hi = fi - mi + ki;
    if hi < lo {
        return Ok(Vec::new());
    }
    let width = (hi - lo + 1) as usize;
    // Slot 0 and slot width+1 stay at -inf as guards.
    let slot = |d: i64| (d - lo) as usize + 1;
    let mut prev = vec![NEG_INF; width + 2];
    let mut cur = vec![NEG_INF; width + 2];
    for d in lo..=hi {
        prev[slot(d)] = base(d, -1).unwrap_or(NEG_INF);
    }
    for e in 0..=ki {
        for d in lo..=hi {
            if let Some(v) = base(d, e) {
                cur[slot(d)] = v;
                continue;
            }
            let s = slot(d);
            let mut row = (prev[s] + 1).max(prev[s + 1] + 1).max(prev[s - 1]);
            if row < 0 || row + d < 0 {
                cur[s] = NEG_INF;
                continue;
            }
            row = row.min(mi).min(fi - d);
            if row < mi && row + d < fi {
                let l = index.lcew_cross_with_stats(m, row as usize + 1, (row + d) as usize + 1, qs)?;
                row += l as i64;
            }
            cur[s] = row;
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok((lo..=hi).filter(|&d| prev[slot(d)] == mi).map(|d| (d + mi) as usize).collect())
}

/// Boundary values: `L(d, -1) = -1` for `d ≥ 0`; for `d < 0`,
/// `L(d, |d|-1) = |d|-1`, `L(d, |d|-2) = |d|-2`, and `-inf` below that.
fn base(d: i64, e: i64) -> Option<i64> {
    if d >= 0 {
        return (e < 0).then_some(-1);
    }
    let a = -d;
    if e == a - 1 || e == a - 2 {
        Some(e)
    } else if e < a - 2 {
        Some(NEG_INF)
    } else {
        None
    }
}
