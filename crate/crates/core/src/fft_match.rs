//! Exact pattern matching with wildcards by convolution.
//!
//! With the wildcard encoded as 0 and alphabet symbols as ranks `1..=σ'`,
//! the alignment score
//!
//! ```text
//! Δ(i) = Σ_j p_j · t_{i+j} · (p_j − t_{i+j})²
//!      = Σ p³t − 2 Σ p²t² + Σ p t³
//! ```
//!
//! is zero exactly when the pattern matches at offset `i`, and never
//! negative. It is at most `m · σ'^4`, so computing it modulo primes whose
//! product exceeds that bound decides `Δ(i) = 0` exactly.

use crate::brute;
use crate::error::{Error, Result};
use crate::ntt::{NttPrime, Plan, P1, P1_P2, P2};
use crate::text::Symbol;

/// Occurrence bits of a pattern in a text: `bits[i]` (0-based) is set iff the
/// pattern matches `T[i+1 .. i+m]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceArray {
    pub bits: Vec<bool>,
    pub pattern_length: usize,
}

impl OccurrenceArray {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// 1-based start positions of all occurrences.
    pub fn positions(&self) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Source of occurrence arrays for the Jump-table recurrence.
pub trait Matcher {
    fn occurrences(&self, pattern: &[Symbol], text: &[Symbol]) -> Result<OccurrenceArray>;
}

/// Convolution-based matcher.
#[derive(Clone, Copy, Debug, Default)]
pub struct FftMatcher;

/// Direct `O(nm)` comparison, for tiny inputs and cross-checks.
#[derive(Clone, Copy, Debug, Default)]
pub struct NaiveMatcher;

impl Matcher for FftMatcher {
    fn occurrences(&self, pattern: &[Symbol], text: &[Symbol]) -> Result<OccurrenceArray> {
        occurrences(pattern, text)
    }
}

impl Matcher for NaiveMatcher {
    fn occurrences(&self, pattern: &[Symbol], text: &[Symbol]) -> Result<OccurrenceArray> {
        Ok(OccurrenceArray {
            bits: brute::occurrences(pattern, text),
            pattern_length: pattern.len(),
        })
    }
}

/// Which exact backend a pattern/text pair needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    SinglePrime,
    TwoPrimes,
}

/// Picks the backend from the coefficient bound `m · σ'^4`.
pub fn select_backend(pattern_len: usize, sigma: u32) -> Result<Backend> {
    let s = sigma as u128;
    let bound = (pattern_len as u128)
        .checked_mul(s * s)
        .and_then(|v| v.checked_mul(s * s))
        .unwrap_or(u128::MAX);
    if bound < P1::P as u128 {
        Ok(Backend::SinglePrime)
    } else if bound < P1_P2 {
        Ok(Backend::TwoPrimes)
    } else {
        Err(Error::AlphabetTooLarge { pattern_len, sigma })
    }
}

/// All occurrences of `pattern` in `text` under the match relation.
///
/// Both slices must use the same rank encoding. A pattern longer than the
/// text has no occurrences.
pub fn occurrences(pattern: &[Symbol], text: &[Symbol]) -> Result<OccurrenceArray> {
    let m = pattern.len();
    if m == 0 {
        return Err(Error::InvalidParameter("pattern must be non-empty".into()));
    }
    if m > text.len() {
        return Ok(OccurrenceArray { bits: Vec::new(), pattern_length: m });
    }
    let sigma = pattern.iter().chain(text).map(|s| s.code()).max().unwrap_or(0);
    let backend = select_backend(m, sigma)?;
    let size = (2 * m).next_power_of_two();
    if size > crate::ntt::MAX_TRANSFORM {
        return Err(Error::TransformTooLong(size));
    }
    let p: Vec<u32> = pattern.iter().map(|s| s.code()).collect();
    let t: Vec<u32> = text.iter().map(|s| s.code()).collect();
    let mut bits = vec![true; text.len() - m + 1];
    clear_nonzero::<P1>(&p, &t, size, &mut bits)?;
    if backend == Backend::TwoPrimes {
        clear_nonzero::<P2>(&p, &t, size, &mut bits)?;
    }
    Ok(OccurrenceArray { bits, pattern_length: m })
}

/// Clears `bits[i]` wherever `Δ(i) mod M` is nonzero. The text is handled in
/// overlapping blocks of `size` symbols, each yielding `size − m + 1` scores.
fn clear_nonzero<M: NttPrime>(p: &[u32], t: &[u32], size: usize, bits: &mut [bool]) -> Result<()> {
    let m = p.len();
    let plan = Plan::<M>::new(size)?;
    debug_assert_eq!(plan.len(), size);

    let mut rp1 = vec![0u32; size];
    let mut rp2 = vec![0u32; size];
    let mut rp3 = vec![0u32; size];
    for (k, &v) in p.iter().rev().enumerate() {
        let v = M::reduce(v as u64);
        let v2 = M::mul(v, v);
        rp1[k] = v;
        rp2[k] = v2;
        rp3[k] = M::mul(v2, v);
    }
    plan.forward(&mut rp1);
    plan.forward(&mut rp2);
    plan.forward(&mut rp3);

    let step = size - m + 1;
    let positions = bits.len();
    let mut t1 = vec![0u32; size];
    let mut t2 = vec![0u32; size];
    let mut t3 = vec![0u32; size];
    let mut start = 0;
    while start < positions {
        let end = t.len().min(start + size);
        for k in 0..size {
            let v = if start + k < end { M::reduce(t[start + k] as u64) } else { 0 };
            let v2 = M::mul(v, v);
            t1[k] = v;
            t2[k] = v2;
            t3[k] = M::mul(v2, v);
        }
        plan.forward(&mut t1);
        plan.forward(&mut t2);
        plan.forward(&mut t3);
        for k in 0..size {
            let a = M::mul(rp3[k], t1[k]);
            let b = M::mul(rp2[k], t2[k]);
            let c = M::mul(rp1[k], t3[k]);
            t1[k] = M::sub(M::add(a, c), M::add(b, b));
        }
        plan.inverse(&mut t1);
        // Circular wrap only pollutes indices below m - 1.
        for a in 0..step.min(positions - start) {
            if t1[m - 1 + a] != 0 {
                bits[start + a] = false;
            }
        }
        start += step;
    }
    Ok(())
}
