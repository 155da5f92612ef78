//! The Jump table: for a selected position `i` and any position `j`, the
//! distance from `i` to the farthest selected `i' >= i` such that
//! `T[i..i'] ~ T[j..j+i'-i]`, or [`NEG`] when `T[i]` and `T[j]` mismatch.
//!
//! Rows are filled bottom-up. The row of the last selected position `n` is
//! 0 or NEG depending on whether `T[n] ~ T[j]`. Every other row `r` follows
//! from row `r + 1` and the occurrences `A_r` of the gap fragment
//! `P_r = T[i_r .. i_{r+1})`:
//!
//! ```text
//! Jump[i_r, j] = NEG                                   if T[i_r] !~ T[j]
//!              = max(0, ℓ_r + Jump[i_{r+1}, j + ℓ_r])   if A_r[j] = 1
//!              = 0                                     otherwise
//! ```
//!
//! A continuation index past `n` counts as NEG.

use std::io::{self, Write};

use crate::error::Result;
use crate::fft_match::Matcher;
use crate::text::{sym_match, SelectionScheme, WildcardText};

/// Cell value standing for minus infinity.
pub const NEG: i32 = i32::MIN;

/// Full `λ × n` table, row-major, one row per selected position in order.
#[derive(Clone, Debug)]
pub struct JumpTable {
    n: usize,
    lambda: usize,
    cells: Vec<i32>,
}

impl JumpTable {
    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn text_len(&self) -> usize {
        self.n
    }

    /// Number of allocated cells, always `λ · n`.
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Row `r` (0-based rank of the selected position).
    pub fn row(&self, r: usize) -> &[i32] {
        &self.cells[r * self.n..(r + 1) * self.n]
    }

    /// `Jump[i_r, j]` with `j` 1-based; `None` for NEG.
    pub fn get(&self, r: usize, j: usize) -> Option<usize> {
        match self.cells[r * self.n + j - 1] {
            NEG => None,
            v => Some(v as usize),
        }
    }

    #[inline]
    pub(crate) fn get0(&self, r: usize, j: usize) -> i32 {
        self.cells[r * self.n + j]
    }

    /// Row-major little-endian 32-bit dump.
    pub fn write_le<W: Write>(&self, mut out: W) -> io::Result<()> {
        let mut buf = Vec::with_capacity(self.cells.len() * 4);
        for &c in &self.cells {
            buf.extend_from_slice(&c.to_le_bytes());
        }
        out.write_all(&buf)
    }
}

/// Peak memory observed while streaming rows.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StreamStats {
    pub rows_emitted: usize,
    pub peak_row_cells: usize,
}

fn base_row(text: &WildcardText, last: usize, out: &mut [i32]) {
    let s = text.symbols();
    let anchor = s[last - 1];
    for (cell, &c) in out.iter_mut().zip(s) {
        *cell = if sym_match(anchor, c) { 0 } else { NEG };
    }
}

/// Fills row `r` from the row below using the occurrences of `P_r`.
fn recur_row<M: Matcher + ?Sized>(
    text: &WildcardText,
    selected: &[usize],
    r: usize,
    below: &[i32],
    matcher: &M,
    out: &mut [i32],
) -> Result<()> {
    let s = text.symbols();
    let n = s.len();
    let start = selected[r] - 1;
    let gap = selected[r + 1] - selected[r];
    let occ = matcher.occurrences(&s[start..start + gap], s)?;
    let anchor = s[start];
    for j in 0..n {
        out[j] = if !sym_match(anchor, s[j]) {
            NEG
        } else if j < occ.bits.len() && occ.bits[j] {
            let next = j + gap;
            if next < n && below[next] != NEG {
                gap as i32 + below[next]
            } else {
                0
            }
        } else {
            0
        };
    }
    Ok(())
}

fn check_size(n: usize) {
    assert!(n <= i32::MAX as usize, "text length must stay below 2^31");
}

/// Materializes the whole table.
pub fn build_jump<M: Matcher + ?Sized>(
    text: &WildcardText,
    selection: &SelectionScheme,
    matcher: &M,
) -> Result<JumpTable> {
    let n = text.len();
    check_size(n);
    let selected = selection.selected();
    let lambda = selected.len();
    let mut cells = vec![0i32; lambda * n];
    base_row(text, selected[lambda - 1], &mut cells[(lambda - 1) * n..]);
    for r in (0..lambda - 1).rev() {
        let (upper, lower) = cells.split_at_mut((r + 1) * n);
        recur_row(text, selected, r, &lower[..n], matcher, &mut upper[r * n..])?;
    }
    Ok(JumpTable { n, lambda, cells })
}

/// Emits rows `λ−1, …, 0` (0-based) to `visit`, keeping at most two rows alive.
pub fn stream_rows<M, F>(
    text: &WildcardText,
    selection: &SelectionScheme,
    matcher: &M,
    mut visit: F,
) -> Result<StreamStats>
where
    M: Matcher + ?Sized,
    F: FnMut(usize, &[i32]),
{
    let n = text.len();
    check_size(n);
    let selected = selection.selected();
    let lambda = selected.len();
    let mut below = vec![0i32; n];
    base_row(text, selected[lambda - 1], &mut below);
    visit(lambda - 1, &below);
    let mut stats = StreamStats { rows_emitted: 1, peak_row_cells: below.capacity() };
    if lambda == 1 {
        return Ok(stats);
    }
    let mut current = vec![0i32; n];
    stats.peak_row_cells += current.capacity();
    for r in (0..lambda - 1).rev() {
        recur_row(text, selected, r, &below, matcher, &mut current)?;
        visit(r, &current);
        stats.rows_emitted += 1;
        std::mem::swap(&mut below, &mut current);
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;
    use crate::fft_match::{FftMatcher, NaiveMatcher};
    use proptest::prelude::*;

    fn text(s: &str) -> WildcardText {
        WildcardText::from_str_with(s, b'?').unwrap()
    }

    fn brute_row(t: &WildcardText, sel: &SelectionScheme, r: usize) -> Vec<i32> {
        let i = sel.selected()[r];
        (1..=t.len())
            .map(|j| brute::jump(t.symbols(), sel.selected(), i, j).map_or(NEG, |v| v as i32))
            .collect()
    }

    #[test]
    fn small_table() {
        let t = text("a?ba");
        let sel = SelectionScheme::new(&t, 1).unwrap();
        assert_eq!(sel.selected(), &[3, 4]);
        let table = build_jump(&t, &sel, &FftMatcher).unwrap();
        assert_eq!(table.row(1), &[0, 0, NEG, 0]);
        assert_eq!(table.row(0), &[NEG, 0, 1, NEG]);
        assert_eq!(table.cell_count(), 8);
        assert_eq!(table.get(0, 3), Some(1));
        assert_eq!(table.get(0, 1), None);
    }

    #[test]
    fn streamed_rows_match_full_table() {
        for (s, t_param) in [("a?ba", 1), ("abab???aaaa????ba???bb", 2), ("abc", 1)] {
            let t = text(s);
            let sel = SelectionScheme::new(&t, t_param).unwrap();
            let full = build_jump(&t, &sel, &FftMatcher).unwrap();
            let mut seen = Vec::new();
            let stats = stream_rows(&t, &sel, &FftMatcher, |r, row| {
                assert_eq!(row, full.row(r));
                seen.push(r);
            })
            .unwrap();
            assert_eq!(seen, (0..sel.lambda()).rev().collect::<Vec<_>>());
            assert!(stats.peak_row_cells <= 2 * t.len());
        }
    }

    #[test]
    fn single_row_stream() {
        let t = text("abc");
        let sel = SelectionScheme::new(&t, 1).unwrap();
        let stats = stream_rows(&t, &sel, &NaiveMatcher, |r, row| {
            assert_eq!(r, 0);
            assert_eq!(row, &[NEG, NEG, 0]);
        })
        .unwrap();
        assert_eq!(stats.rows_emitted, 1);
        assert_eq!(stats.peak_row_cells, 3);
    }

    #[test]
    fn dump_is_little_endian_row_major() {
        let t = text("a?ba");
        let sel = SelectionScheme::new(&t, 1).unwrap();
        let table = build_jump(&t, &sel, &FftMatcher).unwrap();
        let mut out = Vec::new();
        table.write_le(&mut out).unwrap();
        assert_eq!(out.len(), 8 * 4);
        assert_eq!(&out[0..4], &NEG.to_le_bytes());
        assert_eq!(&out[8..12], &1i32.to_le_bytes());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn cells_match_definition(
            raw in prop::collection::vec(prop::sample::select(b"ab??".to_vec()), 1..128),
            t_param in 1usize..5,
        ) {
            let t = WildcardText::new(&raw, b'?').unwrap();
            let sel = SelectionScheme::new(&t, t_param).unwrap();
            let table = build_jump(&t, &sel, &FftMatcher).unwrap();
            prop_assert_eq!(table.cell_count(), sel.lambda() * t.len());
            for r in 0..sel.lambda() {
                prop_assert_eq!(table.row(r).to_vec(), brute_row(&t, &sel, r));
            }
            // Consecutive rows are consistent along a match.
            for r in 0..sel.lambda() - 1 {
                let gap = sel.selected()[r + 1] - sel.selected()[r];
                for j in 1..=t.len() {
                    if let Some(d) = table.get(r, j) {
                        if d >= gap {
                            prop_assert_eq!(table.get(r + 1, j + gap), Some(d - gap));
                        }
                    }
                }
            }
        }
    }
}
