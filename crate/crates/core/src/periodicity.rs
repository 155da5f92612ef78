//! Prefix array `π[i] = LCEW(1, i)` in linear working space, and the
//! quantum border and period arrays derived from it.
//!
//! Position 1 is added to the selected positions, so the first Jump row
//! answers the first table step of every query `(1, j)` at once. Rows are
//! never stored together: the table is streamed bottom-up twice. The first
//! pass finishes every query that needs no second table step; the others
//! stop on a selected position of the `j` side and wait in a bucket keyed by
//! that row, to be finished when the second pass produces it.

use crate::error::{Error, Result};
use crate::fft_match::{FftMatcher, Matcher};
use crate::index::{nsom, QueryStats};
use crate::jump::{stream_rows, NEG};
use crate::lce::LceOracle;
use crate::text::{sym_match, SelectionScheme, WildcardText};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixArray {
    /// `pi[i - 1] = LCEW(1, i)`.
    pub pi: Vec<usize>,
}

impl PrefixArray {
    pub fn len(&self) -> usize {
        self.pi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pi.is_empty()
    }

    /// `π[i]`, 1-based.
    pub fn get(&self, i: usize) -> usize {
        self.pi[i - 1]
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PrefixStats {
    pub t: usize,
    pub lambda: usize,
    /// Row cells alive at once while streaming.
    pub peak_row_cells: usize,
    /// Queries deferred to the second pass.
    pub pending: usize,
    /// Working cells beyond the text and the output: rows plus pending pairs.
    pub aux_cells: usize,
}

/// `⌈√G⌉`, at least 1.
pub fn default_t(text: &WildcardText) -> usize {
    let g = text.group_count();
    let mut t = (g as f64).sqrt() as usize;
    while t * t < g {
        t += 1;
    }
    t.max(1)
}

pub fn prefix_array(text: &WildcardText, t: usize) -> Result<PrefixArray> {
    Ok(prefix_array_with_stats(text, t)?.0)
}

pub fn prefix_array_with_stats(text: &WildcardText, t: usize) -> Result<(PrefixArray, PrefixStats)> {
    prefix_array_with(text, t, &FftMatcher)
}

pub fn prefix_array_with<M: Matcher + ?Sized>(
    text: &WildcardText,
    t: usize,
    matcher: &M,
) -> Result<(PrefixArray, PrefixStats)> {
    let limit = text.transitions().len().max(1);
    if t < 1 || t > limit {
        return Err(Error::InvalidParameter(format!("t must lie in [1, {limit}], got {t}")));
    }
    let n = text.len();
    let s = text.symbols();
    let sel = SelectionScheme::with_forced(text, t, &[1])?;
    let oracle = LceOracle::new(text);
    let lambda = sel.lambda();
    let mut qs = QueryStats::default();
    let mut pi = vec![0usize; n];
    let mut buckets: Vec<Vec<(u32, u32)>> = vec![Vec::new(); lambda];
    let mut pending = 0;

    let first = stream_rows(text, &sel, matcher, |r, row| {
        if r != 0 {
            return;
        }
        for j in 0..n {
            let d = row[j];
            if d == NEG {
                pi[j] = 0;
                continue;
            }
            let mut l = d as usize + 1;
            if j + l < n {
                l += nsom(text, &sel, &oracle, l, j + l, &mut qs, None);
            }
            if j + l >= n || !sym_match(s[l], s[j + l]) {
                pi[j] = l;
                continue;
            }
            let rj = sel.row0(j + l).expect("stopped on a selected position of the j side");
            buckets[rj].push((j as u32, l as u32));
            pending += 1;
        }
    })?;

    let mut second = first;
    if pending > 0 {
        second = stream_rows(text, &sel, matcher, |r, row| {
            for (j, l) in std::mem::take(&mut buckets[r]) {
                let (j, mut l) = (j as usize, l as usize);
                let d = row[l];
                debug_assert!(d != NEG);
                l += d as usize + 1;
                if j + l < n {
                    l += nsom(text, &sel, &oracle, l, j + l, &mut qs, None);
                }
                debug_assert!(j + l >= n || !sym_match(s[l], s[j + l]));
                pi[j] = l;
            }
        })?;
    }

    let peak_row_cells = first.peak_row_cells.max(second.peak_row_cells);
    let stats = PrefixStats { t, lambda, peak_row_cells, pending, aux_cells: peak_row_cells + 2 * pending };
    Ok((PrefixArray { pi }, stats))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumArrays {
    /// `borders[i - 1]`: longest proper quantum border of `S[1..i]`.
    pub borders: Vec<usize>,
    /// `periods[i - 1]`: shortest quantum period of `S[1..i]`.
    pub periods: Vec<usize>,
}

/// `B_Q[i] = i + 1 − min{ j ∈ [2..i] : j + π[j] − 1 ≥ i }` (0 if none), in one
/// descending sweep; `P_Q[i] = i − B_Q[i]`.
pub fn quantum_borders(pi: &PrefixArray) -> QuantumArrays {
    let n = pi.len();
    // Linked lists: head[x] chains positions j ≥ 2 whose reach j + π[j] − 1 equals x.
    let mut head = vec![usize::MAX; n + 1];
    let mut next = vec![usize::MAX; n + 1];
    for j in 2..=n {
        let reach = j + pi.get(j) - 1;
        next[j] = head[reach];
        head[reach] = j;
    }
    let mut borders = vec![0usize; n];
    let mut best = usize::MAX;
    for i in (1..=n).rev() {
        let mut j = head[i];
        while j != usize::MAX {
            best = best.min(j);
            j = next[j];
        }
        if best <= i {
            borders[i - 1] = i + 1 - best;
        }
    }
    let periods = borders.iter().enumerate().map(|(x, &b)| x + 1 - b).collect();
    QuantumArrays { borders, periods }
}

/// Border and period arrays realized by a single wildcard-free string.
/// Not provided: only the quantum variants are computed.
pub fn deterministic_borders(_text: &WildcardText) -> Result<QuantumArrays> {
    Err(Error::Unsupported("deterministic border and period arrays are not implemented; use the quantum variants"))
}
