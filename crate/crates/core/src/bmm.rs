//! Sparse Boolean matrix multiplication through LCEW queries.
//!
//! `A` (a×b) is written row by row and `B` (b×c) column by column into one
//! string `S = S_A · S_B`, with symbol encodings chosen so that two encoded
//! bits fail to match exactly when both are 1. Then `(AB)[i+1, j+1] = 1`
//! iff row block `i` of `S_A` and column block `j` of `S_B` do not match,
//! i.e. iff their cross LCEW is shorter than `b`. Because consecutive row
//! blocks line up with consecutive column blocks, one LCEW query skips a
//! whole run of zero cells along a diagonal of the product.
//!
//! The sparser side carries the wildcards, so `S` has at most
//! `min(m_A, m_B) + 1` wildcard groups.

use std::fmt::Write as _;

use crate::brute;
use crate::error::{Error, Result};
use crate::index::{LcewIndex, Mode, QueryStats};
use crate::text::WildcardText;

/// Boolean matrix as a sorted list of 1-based coordinates of its 1-bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CooMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize)>,
}

impl CooMatrix {
    /// Validates that entries are in range, strictly sorted by (row, col).
    pub fn new(rows: usize, cols: usize, entries: Vec<(usize, usize)>) -> Result<CooMatrix> {
        for &(r, c) in &entries {
            if r < 1 || r > rows || c < 1 || c > cols {
                return Err(Error::InvalidMatrix(format!("entry ({r}, {c}) outside {rows}x{cols}")));
            }
        }
        if let Some(w) = entries.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidMatrix(format!(
                "entries not strictly sorted: ({}, {}) then ({}, {})",
                w[0].0, w[0].1, w[1].0, w[1].1
            )));
        }
        Ok(CooMatrix { rows, cols, entries })
    }

    /// Sorts and deduplicates before validating.
    pub fn from_unsorted(rows: usize, cols: usize, mut entries: Vec<(usize, usize)>) -> Result<CooMatrix> {
        entries.sort_unstable();
        entries.dedup();
        CooMatrix::new(rows, cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> CooMatrix {
        CooMatrix { rows, cols, entries: Vec::new() }
    }

    pub fn identity(n: usize) -> CooMatrix {
        CooMatrix { rows: n, cols: n, entries: (1..=n).map(|i| (i, i)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.entries.binary_search(&(r, c)).is_ok()
    }

    pub fn transpose(&self) -> CooMatrix {
        let mut entries: Vec<_> = self.entries.iter().map(|&(r, c)| (c, r)).collect();
        entries.sort_unstable();
        CooMatrix { rows: self.cols, cols: self.rows, entries }
    }

    /// Parses `rows cols nnz` followed by `nnz` lines `r c`.
    pub fn parse(input: &str) -> Result<CooMatrix> {
        let mut lines = input.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
        let head = parse_fields(header, hl + 1, 3)?;
        let (rows, cols, nnz) = (head[0], head[1], head[2]);
        let mut entries = Vec::with_capacity(nnz);
        for (ln, line) in lines {
            let f = parse_fields(line, ln + 1, 2)?;
            entries.push((f[0], f[1]));
        }
        if entries.len() != nnz {
            return Err(Error::Parse {
                line: hl + 1,
                msg: format!("header declares {nnz} entries, found {}", entries.len()),
            });
        }
        CooMatrix::new(rows, cols, entries)
    }

    pub fn to_coo_string(&self) -> String {
        let mut out = String::with_capacity(16 + self.entries.len() * 8);
        writeln!(out, "{} {} {}", self.rows, self.cols, self.entries.len()).unwrap();
        for &(r, c) in &self.entries {
            writeln!(out, "{r} {c}").unwrap();
        }
        out
    }
}

fn parse_fields(line: &str, line_no: usize, want: usize) -> Result<Vec<usize>> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != want {
        return Err(Error::Parse { line: line_no, msg: format!("expected {want} fields, found {}", fields.len()) });
    }
    fields
        .iter()
        .map(|f| f.parse::<usize>().map_err(|e| Error::Parse { line: line_no, msg: format!("{f:?}: {e}") }))
        .collect()
}

fn check_dims(a: &CooMatrix, b: &CooMatrix) -> Result<()> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch {
            left_rows: a.rows,
            left_cols: a.cols,
            right_rows: b.rows,
            right_cols: b.cols,
        });
    }
    Ok(())
}

const WILD: u8 = b'?';

/// The string `S_A · S_B` with its layout.
#[derive(Clone, Debug)]
pub struct BmmEncoding {
    pub s: WildcardText,
    /// True when `S_B` carries the wildcards instead of `S_A`.
    pub role_flip: bool,
    /// Rows of `A`.
    pub a: usize,
    /// Inner dimension.
    pub b: usize,
    /// Columns of `B`.
    pub c: usize,
}

impl BmmEncoding {
    /// Length of the `S_A` block, `a·b`.
    pub fn split(&self) -> usize {
        self.a * self.b
    }
}

/// Writes `A` row-major and `B` column-major. Requires a positive inner
/// dimension.
pub fn encode(a: &CooMatrix, b: &CooMatrix) -> Result<BmmEncoding> {
    check_dims(a, b)?;
    let inner = a.cols;
    if inner == 0 || a.rows == 0 || b.cols == 0 {
        return Err(Error::InvalidMatrix("encoding needs non-empty dimensions".into()));
    }
    let role_flip = b.nnz() < a.nnz();
    // (symbol for 1, symbol for 0) on each side.
    let (a_sym, b_sym) = if role_flip { ((b'0', b'1'), (b'1', WILD)) } else { ((b'1', WILD), (b'0', b'1')) };
    let (rows, cols) = (a.rows, b.cols);
    let mut raw = vec![a_sym.1; rows * inner];
    for &(r, k) in &a.entries {
        raw[(r - 1) * inner + k - 1] = a_sym.0;
    }
    let mut sb = vec![b_sym.1; inner * cols];
    for &(k, c) in &b.entries {
        sb[(c - 1) * inner + k - 1] = b_sym.0;
    }
    raw.extend_from_slice(&sb);
    Ok(BmmEncoding { s: WildcardText::new(&raw, WILD)?, role_flip, a: rows, b: inner, c: cols })
}

/// Leading zero cells of the product on the diagonal starting at 0-based
/// `(i, j)`, from one cross LCEW query.
pub fn diagonal_zero_run(enc: &BmmEncoding, index: &LcewIndex, i: usize, j: usize) -> Result<usize> {
    diagonal_zero_run_counted(enc, index, i, j, &mut QueryStats::default())
}

fn diagonal_zero_run_counted(
    enc: &BmmEncoding,
    index: &LcewIndex,
    i: usize,
    j: usize,
    stats: &mut QueryStats,
) -> Result<usize> {
    if i >= enc.a || j >= enc.c {
        return Err(Error::InvalidParameter(format!("diagonal start ({i}, {j}) outside {}x{}", enc.a, enc.c)));
    }
    let l = index.lcew_cross_with_stats(enc.split(), enc.b * i + 1, enc.b * j + 1, stats)?;
    Ok((l / enc.b).min(enc.a - i).min(enc.c - j))
}

#[derive(Clone, Copy, Debug)]
pub struct MultiplyOptions {
    /// Drop inner indices whose column of `A` or row of `B` is empty.
    pub eliminate: bool,
}

impl Default for MultiplyOptions {
    fn default() -> Self {
        MultiplyOptions { eliminate: true }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BmmStats {
    /// Inner dimension after elimination.
    pub inner: usize,
    /// Wildcard groups in the encoding.
    pub groups: usize,
    pub role_flip: bool,
    /// Index builds, i.e. one more than the number of restarts.
    pub rounds: usize,
    /// Output-size estimate used in the final round.
    pub estimate: usize,
    /// Tradeoff parameter of the final round.
    pub t: usize,
    pub kangaroo: bool,
    /// LCEW queries issued in the final round.
    pub queries: usize,
}

/// Boolean product `AB`.
pub fn multiply(a: &CooMatrix, b: &CooMatrix) -> Result<CooMatrix> {
    Ok(multiply_with_stats(a, b, MultiplyOptions::default())?.0)
}

/// Tradeoff parameter for output estimate `est`:
/// `⌈√(|S|·G·log2|S| / (a + c + est))⌉`, at least 1.
pub fn choose_t(s_len: usize, groups: usize, a: usize, c: usize, est: usize) -> usize {
    let log = (s_len.max(2) as f64).log2();
    let v = (s_len as f64 * groups as f64 * log / (a + c + est) as f64).sqrt().ceil();
    (v as usize).max(1)
}

pub fn multiply_with_stats(a: &CooMatrix, b: &CooMatrix, opts: MultiplyOptions) -> Result<(CooMatrix, BmmStats)> {
    check_dims(a, b)?;
    let (rows, cols) = (a.rows, b.cols);
    let (a, b) = if opts.eliminate { eliminate_inner(a, b) } else { (a.clone(), b.clone()) };
    let mut stats = BmmStats { inner: a.cols, ..BmmStats::default() };
    if rows == 0 || cols == 0 || a.cols == 0 || a.nnz() == 0 || b.nnz() == 0 {
        return Ok((CooMatrix::zeros(rows, cols), stats));
    }
    let enc = encode(&a, &b)?;
    stats.groups = enc.s.group_count();
    stats.role_flip = enc.role_flip;
    let cap = rows.saturating_mul(cols);
    let mut est = rows + cols;
    loop {
        let t = choose_t(enc.s.len(), stats.groups, rows, cols, est);
        let index = LcewIndex::build(enc.s.clone(), t)?;
        stats.rounds += 1;
        stats.estimate = est;
        stats.t = t;
        stats.kangaroo = index.mode() == Mode::Kangaroo;
        let budget = if est < cap { Some(index.construction_work()) } else { None };
        if let Some((entries, queries)) = scan_diagonals(&enc, &index, budget)? {
            stats.queries = queries;
            return Ok((CooMatrix::from_unsorted(rows, cols, entries)?, stats));
        }
        est = est.saturating_mul(2);
    }
}

/// Product entries and the number of queries spent.
type Scan = (Vec<(usize, usize)>, usize);

/// Walks every diagonal; `None` when query work exceeds `budget`.
fn scan_diagonals(enc: &BmmEncoding, index: &LcewIndex, budget: Option<usize>) -> Result<Option<Scan>> {
    let (a, c) = (enc.a, enc.c);
    let mut qs = QueryStats::default();
    let mut entries = Vec::new();
    let starts = (0..c).map(|j| (0, j)).chain((1..a).map(|i| (i, 0)));
    for (i0, j0) in starts {
        let len = (a - i0).min(c - j0);
        let mut pos = 0;
        while pos < len {
            pos += diagonal_zero_run_counted(enc, index, i0 + pos, j0 + pos, &mut qs)?;
            if budget.is_some_and(|w| qs.work() > w) {
                return Ok(None);
            }
            if pos < len {
                entries.push((i0 + pos + 1, j0 + pos + 1));
                pos += 1;
            }
        }
    }
    Ok(Some((entries, qs.queries)))
}

/// Removes inner indices `k` with an empty column `k` of `A` or empty row
/// `k` of `B`, renumbering the rest.
pub fn eliminate_inner(a: &CooMatrix, b: &CooMatrix) -> (CooMatrix, CooMatrix) {
    let inner = a.cols;
    let mut in_a = vec![false; inner + 1];
    let mut in_b = vec![false; inner + 1];
    for &(_, k) in &a.entries {
        in_a[k] = true;
    }
    for &(k, _) in &b.entries {
        in_b[k] = true;
    }
    let mut map = vec![0usize; inner + 1];
    let mut kept = 0;
    for k in 1..=inner {
        if in_a[k] && in_b[k] {
            kept += 1;
            map[k] = kept;
        }
    }
    let ea = a.entries.iter().filter(|&&(_, k)| map[k] > 0).map(|&(r, k)| (r, map[k])).collect();
    let eb = b.entries.iter().filter(|&&(k, _)| map[k] > 0).map(|&(k, c)| (map[k], c)).collect();
    (
        CooMatrix { rows: a.rows, cols: kept, entries: ea },
        CooMatrix { rows: kept, cols: b.cols, entries: eb },
    )
}

/// Triple-loop reference product.
pub fn naive_product(a: &CooMatrix, b: &CooMatrix) -> Result<CooMatrix> {
    check_dims(a, b)?;
    let entries = brute::boolean_product(&a.entries, &b.entries, a.rows, a.cols, b.cols);
    CooMatrix::new(a.rows, b.cols, entries)
}
