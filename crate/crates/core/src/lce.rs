//! Plain LCE queries over `T_#` and the kangaroo LCEW baseline.
//!
//! `T_#` replaces every wildcard with one fresh symbol, so a plain LCE on it
//! never crosses a wildcard that the other side does not share. The oracle
//! is a suffix array with its LCP array and a constant-time RMQ on top.

use crate::error::{Error, Result};
use crate::rmq::Rmq;
use crate::text::{sym_match, WildcardText};

/// Suffix array of an integer string with symbols in `1..=max_code`, by
/// prefix doubling with counting sorts.
pub fn suffix_array(codes: &[u32]) -> Vec<u32> {
    let n = codes.len();
    if n == 0 {
        return Vec::new();
    }
    let max_code = *codes.iter().max().unwrap() as usize;
    let mut rank: Vec<u32> = codes.to_vec();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    counting_sort(&mut sa, &rank, max_code + 1);
    let mut tmp = vec![0u32; n];
    let mut buf = vec![0u32; n];

    // Re-rank by first symbol so ranks are 0-based and dense.
    let mut classes = relabel(&sa, &mut tmp, |a, b| rank[a] == rank[b]);
    std::mem::swap(&mut rank, &mut tmp);

    let mut k = 1;
    while classes < n && k < n {
        // Order by second key: suffixes without a second half come first.
        let mut w = 0;
        for p in n - k..n {
            buf[w] = p as u32;
            w += 1;
        }
        for &p in &sa {
            if p as usize >= k {
                buf[w] = p - k as u32;
                w += 1;
            }
        }
        std::mem::swap(&mut sa, &mut buf);
        counting_sort(&mut sa, &rank, classes);
        let second = |p: usize| if p + k < n { rank[p + k] as i64 } else { -1 };
        classes = relabel(&sa, &mut tmp, |a, b| rank[a] == rank[b] && second(a) == second(b));
        std::mem::swap(&mut rank, &mut tmp);
        k *= 2;
    }
    sa
}

fn counting_sort(sa: &mut [u32], key: &[u32], buckets: usize) {
    let mut count = vec![0usize; buckets + 1];
    for &p in sa.iter() {
        count[key[p as usize] as usize + 1] += 1;
    }
    for b in 1..=buckets {
        count[b] += count[b - 1];
    }
    let mut out = vec![0u32; sa.len()];
    for &p in sa.iter() {
        let slot = &mut count[key[p as usize] as usize];
        out[*slot] = p;
        *slot += 1;
    }
    sa.copy_from_slice(&out);
}

fn relabel(sa: &[u32], out: &mut [u32], same: impl Fn(usize, usize) -> bool) -> usize {
    let mut class = 0u32;
    out[sa[0] as usize] = 0;
    for w in sa.windows(2) {
        if !same(w[0] as usize, w[1] as usize) {
            class += 1;
        }
        out[w[1] as usize] = class;
    }
    class as usize + 1
}

/// Kasai's algorithm: `lcp[r]` is the LCP of suffixes `sa[r - 1]` and `sa[r]`.
pub fn lcp_array(codes: &[u32], sa: &[u32], inverse: &[u32]) -> Vec<u32> {
    let n = codes.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for p in 0..n {
        let r = inverse[p] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let q = sa[r - 1] as usize;
        while p + h < n && q + h < n && codes[p + h] == codes[q + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Constant-time plain LCE over `T_#`.
#[derive(Clone, Debug)]
pub struct LceOracle {
    n: usize,
    sa: Vec<u32>,
    inverse: Vec<u32>,
    rmq: Rmq,
}

pub fn build_lce(text: &WildcardText) -> LceOracle {
    LceOracle::new(text)
}

impl LceOracle {
    pub fn new(text: &WildcardText) -> LceOracle {
        LceOracle::from_codes(&text.hash_codes())
    }

    /// Oracle over an arbitrary integer string with codes `>= 1`.
    pub fn from_codes(codes: &[u32]) -> LceOracle {
        let n = codes.len();
        let sa = suffix_array(codes);
        let mut inverse = vec![0u32; n];
        for (r, &p) in sa.iter().enumerate() {
            inverse[p as usize] = r as u32;
        }
        let lcp = lcp_array(codes, &sa, &inverse);
        LceOracle { n, sa, inverse, rmq: Rmq::new(lcp) }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn suffix_order(&self) -> &[u32] {
        &self.sa
    }

    /// LCE of the suffixes at 1-based `i` and `j`.
    pub fn lce(&self, i: usize, j: usize) -> Result<usize> {
        check_index(i, self.n)?;
        check_index(j, self.n)?;
        Ok(self.lce0(i - 1, j - 1))
    }

    /// 0-based variant without range checks.
    #[inline]
    pub(crate) fn lce0(&self, i: usize, j: usize) -> usize {
        if i == j {
            return self.n - i;
        }
        let (a, b) = (self.inverse[i], self.inverse[j]);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.rmq.min(lo as usize + 1, hi as usize) as usize
    }
}

pub(crate) fn check_index(i: usize, n: usize) -> Result<()> {
    if i < 1 || i > n {
        Err(Error::OutOfRange { index: i, len: n })
    } else {
        Ok(())
    }
}

/// LCEW by kangaroo jumping: alternate plain-LCE extensions on `T_#` with
/// hops over the wildcard run that stopped them.
pub fn lcew_kangaroo(text: &WildcardText, oracle: &LceOracle, i: usize, j: usize) -> Result<usize> {
    Ok(lcew_kangaroo_counted(text, oracle, i, j)?.0)
}

/// As [`lcew_kangaroo`], also returning the number of extend-hop rounds.
pub fn lcew_kangaroo_counted(
    text: &WildcardText,
    oracle: &LceOracle,
    i: usize,
    j: usize,
) -> Result<(usize, usize)> {
    let n = text.len();
    check_index(i, n)?;
    check_index(j, n)?;
    Ok(kangaroo0(text, oracle, i - 1, j - 1))
}

pub(crate) fn kangaroo0(text: &WildcardText, oracle: &LceOracle, i: usize, j: usize) -> (usize, usize) {
    let n = text.len();
    let s = text.symbols();
    let nextpos = text.nextpos0();
    // Distance to the end of the wildcard run containing `p`.
    let run = |p: usize| {
        let d = nextpos[p] as usize;
        if s[p + d].is_wildcard() {
            d + 1
        } else {
            d
        }
    };
    let limit = n - i.max(j);
    let mut l = 0;
    let mut rounds = 0;
    while l < limit {
        rounds += 1;
        l += oracle.lce0(i + l, j + l);
        if l >= limit {
            break;
        }
        let (a, b) = (s[i + l], s[j + l]);
        if !sym_match(a, b) {
            break;
        }
        let mut hop = 0;
        if a.is_wildcard() {
            hop = run(i + l);
        }
        if b.is_wildcard() {
            hop = hop.max(run(j + l));
        }
        l += hop;
    }
    (l.min(limit), rounds)
}
