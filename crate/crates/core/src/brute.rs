//! Quadratic reference implementations.
//!
//! Everything here follows the definitions directly and shares no code
//! with the indexed algorithms, so it can serve as their test oracle.

use crate::text::{sym_match, Symbol};

/// `LCEW(i, j)` by a character scan; positions are 1-based.
pub fn lcew(s: &[Symbol], i: usize, j: usize) -> usize {
    let n = s.len();
    let mut l = 0;
    while i + l <= n && j + l <= n && sym_match(s[i + l - 1], s[j + l - 1]) {
        l += 1;
    }
    l
}

/// Plain LCE of two suffixes of an integer string, 1-based.
pub fn lce(codes: &[u32], i: usize, j: usize) -> usize {
    let n = codes.len();
    let mut l = 0;
    while i + l <= n && j + l <= n && codes[i + l - 1] == codes[j + l - 1] {
        l += 1;
    }
    l
}

/// Cross-string `LCEW_{P,Q}(i, j)` computed on the two strings separately.
pub fn lcew_cross(p: &[Symbol], q: &[Symbol], i: usize, j: usize) -> usize {
    let mut l = 0;
    while i + l <= p.len() && j + l <= q.len() && sym_match(p[i + l - 1], q[j + l - 1]) {
        l += 1;
    }
    l
}

/// `bits[i] = 1` iff the pattern matches the text at 0-based offset `i`.
pub fn occurrences(pattern: &[Symbol], text: &[Symbol]) -> Vec<bool> {
    if pattern.len() > text.len() {
        return Vec::new();
    }
    (0..=text.len() - pattern.len())
        .map(|i| pattern.iter().zip(&text[i..]).all(|(&a, &b)| sym_match(a, b)))
        .collect()
}

/// Jump entry straight from its definition: the largest `i' - i` over
/// selected `i' >= i` with `T[i..i'] ~ T[j..j+i'-i]`, or `None` for -inf.
pub fn jump(s: &[Symbol], selected: &[usize], i: usize, j: usize) -> Option<usize> {
    let reach = lcew(s, i, j);
    selected
        .iter()
        .filter(|&&p| p >= i && p - i < reach)
        .map(|&p| p - i)
        .max()
}

/// Edit distance where a substitution is free iff the two symbols match.
pub fn edit_distance_bytes(x: &[u8], y: &[u8], wildcard: u8) -> usize {
    let matches = |a: u8, b: u8| a == b || a == wildcard || b == wildcard;
    let mut prev: Vec<usize> = (0..=y.len()).collect();
    let mut cur = vec![0; y.len() + 1];
    for (r, &a) in x.iter().enumerate() {
        cur[0] = r + 1;
        for (c, &b) in y.iter().enumerate() {
            let sub = prev[c] + usize::from(!matches(a, b));
            cur[c + 1] = sub.min(prev[c + 1] + 1).min(cur[c] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[y.len()]
}

/// End positions `p` (1-based) with `min_{i <= p} ed(T[i..p], P) <= k`,
/// evaluated by running the edit-distance table from every start.
pub fn approximate_matches(text: &[u8], pattern: &[u8], k: usize, wildcard: u8) -> Vec<usize> {
    let n = text.len();
    let m = pattern.len();
    let matches = |a: u8, b: u8| a == b || a == wildcard || b == wildcard;
    let mut hit = vec![false; n + 1];
    for start in 0..n {
        // column over pattern prefixes, extended one text symbol at a time
        let mut col: Vec<usize> = (0..=m).collect();
        for p in start..n {
            let mut next = vec![0; m + 1];
            next[0] = col[0] + 1;
            for r in 1..=m {
                let sub = col[r - 1] + usize::from(!matches(pattern[r - 1], text[p]));
                next[r] = sub.min(col[r] + 1).min(next[r - 1] + 1);
            }
            col = next;
            if col[m] <= k {
                hit[p + 1] = true;
            }
            if col.iter().all(|&v| v > k) {
                break;
            }
        }
    }
    (1..=n).filter(|&p| hit[p]).collect()
}

/// Dense triple-loop Boolean product of 1-based coordinate lists.
pub fn boolean_product(
    a: &[(usize, usize)],
    b: &[(usize, usize)],
    rows: usize,
    inner: usize,
    cols: usize,
) -> Vec<(usize, usize)> {
    let mut da = vec![vec![false; inner]; rows];
    let mut db = vec![vec![false; cols]; inner];
    for &(r, c) in a {
        da[r - 1][c - 1] = true;
    }
    for &(r, c) in b {
        db[r - 1][c - 1] = true;
    }
    let mut out = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if (0..inner).any(|k| da[i][k] && db[k][j]) {
                out.push((i + 1, j + 1));
            }
        }
    }
    out
}

/// Largest proper quantum border of every prefix, checked symbol by symbol.
pub fn quantum_borders(s: &[Symbol]) -> Vec<usize> {
    (1..=s.len())
        .map(|i| {
            (1..i)
                .rev()
                .find(|&b| (0..b).all(|x| sym_match(s[x], s[i - b + x])))
                .unwrap_or(0)
        })
        .collect()
}

/// Smallest quantum period of every prefix, checked symbol by symbol.
pub fn quantum_periods(s: &[Symbol]) -> Vec<usize> {
    (1..=s.len())
        .map(|i| {
            (1..=i)
                .find(|&p| (0..i - p).all(|x| sym_match(s[x], s[x + p])))
                .unwrap_or(i)
        })
        .collect()
}
