//! Number-theoretic transforms over two word-sized NTT primes.

use crate::error::{Error, Result};

pub(crate) trait NttPrime {
    const P: u32;
    const G: u32;
    /// Largest supported transform is `2^MAX_LOG`.
    const MAX_LOG: u32;

    #[inline(always)]
    fn mul(a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % Self::P as u64) as u32
    }

    #[inline(always)]
    fn add(a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= Self::P {
            s - Self::P
        } else {
            s
        }
    }

    #[inline(always)]
    fn sub(a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + Self::P - b
        }
    }

    fn pow(mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = Self::mul(acc, base);
            }
            base = Self::mul(base, base);
            exp >>= 1;
        }
        acc
    }

    fn inv(a: u32) -> u32 {
        Self::pow(a, Self::P as u64 - 2)
    }

    #[inline(always)]
    fn reduce(v: u64) -> u32 {
        (v % Self::P as u64) as u32
    }
}

/// 119 * 2^23 + 1
pub(crate) struct P1;
impl NttPrime for P1 {
    const P: u32 = 998_244_353;
    const G: u32 = 3;
    const MAX_LOG: u32 = 23;
}

/// 7 * 2^26 + 1
pub(crate) struct P2;
impl NttPrime for P2 {
    const P: u32 = 469_762_049;
    const G: u32 = 3;
    const MAX_LOG: u32 = 26;
}

pub(crate) const P1_P2: u128 = P1::P as u128 * P2::P as u128;

/// Largest transform usable with both primes.
pub const MAX_TRANSFORM: usize = 1 << 23;

/// Twiddles for one transform size.
pub(crate) struct Plan<M: NttPrime> {
    n: usize,
    roots: Vec<u32>,
    inv_roots: Vec<u32>,
    inv_n: u32,
    _prime: std::marker::PhantomData<M>,
}

impl<M: NttPrime> Plan<M> {
    pub(crate) fn new(n: usize) -> Result<Plan<M>> {
        if !n.is_power_of_two() || n.trailing_zeros() > M::MAX_LOG {
            return Err(Error::TransformTooLong(n));
        }
        let half = (n / 2).max(1);
        let w = M::pow(M::G, (M::P as u64 - 1) / n as u64);
        let wi = M::inv(w);
        let mut roots = Vec::with_capacity(half);
        let mut inv_roots = Vec::with_capacity(half);
        let (mut a, mut b) = (1u32, 1u32);
        for _ in 0..half {
            roots.push(a);
            inv_roots.push(b);
            a = M::mul(a, w);
            b = M::mul(b, wi);
        }
        Ok(Plan {
            n,
            roots,
            inv_roots,
            inv_n: M::inv(n as u32 % M::P),
            _prime: std::marker::PhantomData,
        })
    }

    pub(crate) fn len(&self) -> usize {
        self.n
    }

    pub(crate) fn forward(&self, a: &mut [u32]) {
        self.run(a, &self.roots);
    }

    pub(crate) fn inverse(&self, a: &mut [u32]) {
        self.run(a, &self.inv_roots);
        for x in a.iter_mut() {
            *x = M::mul(*x, self.inv_n);
        }
    }

    fn run(&self, a: &mut [u32], roots: &[u32]) {
        let n = self.n;
        debug_assert_eq!(a.len(), n);
        let bits = n.trailing_zeros();
        if bits == 0 {
            return;
        }
        for i in 0..n {
            let j = i.reverse_bits() >> (usize::BITS - bits);
            if i < j {
                a.swap(i, j);
            }
        }
        let mut len = 2;
        while len <= n {
            let half = len / 2;
            let stride = n / len;
            for chunk in a.chunks_exact_mut(len) {
                let (lo, hi) = chunk.split_at_mut(half);
                for (k, (u, v)) in lo.iter_mut().zip(hi.iter_mut()).enumerate() {
                    let t = M::mul(*v, roots[k * stride]);
                    let x = *u;
                    *u = M::add(x, t);
                    *v = M::sub(x, t);
                }
            }
            len <<= 1;
        }
    }
}

/// Exact cross-correlation `out[k] = sum_j x[j] * y[k + j]` for
/// `k in 0..=y.len() - x.len()`.
///
/// Uses one prime when every coefficient is below it, otherwise two primes
/// and CRT reconstruction. Coefficient bounds beyond the two-prime product
/// are rejected.
pub fn correlate(x: &[u64], y: &[u64]) -> Result<Vec<u64>> {
    if x.is_empty() || x.len() > y.len() {
        return Ok(Vec::new());
    }
    let max_x = *x.iter().max().unwrap() as u128;
    let max_y = *y.iter().max().unwrap() as u128;
    let too_large = Error::AlphabetTooLarge {
        pattern_len: x.len(),
        sigma: max_x.max(max_y).min(u32::MAX as u128) as u32,
    };
    let bound = match (x.len() as u128).checked_mul(max_x).and_then(|v| v.checked_mul(max_y)) {
        Some(b) => b,
        None => return Err(too_large),
    };
    let size = (x.len() + y.len() - 1).next_power_of_two();
    if size > MAX_TRANSFORM {
        return Err(Error::TransformTooLong(size));
    }
    let r1 = correlate_mod::<P1>(x, y, size)?;
    if bound < P1::P as u128 {
        return Ok(r1.into_iter().map(u64::from).collect());
    }
    if bound >= P1_P2 {
        return Err(too_large);
    }
    let r2 = correlate_mod::<P2>(x, y, size)?;
    Ok(r1.into_iter().zip(r2).map(|(a, b)| crt(a, b)).collect())
}

fn correlate_mod<M: NttPrime>(x: &[u64], y: &[u64], size: usize) -> Result<Vec<u32>> {
    let plan = Plan::<M>::new(size)?;
    let m = x.len();
    let mut fx = vec![0u32; size];
    for (k, &v) in x.iter().rev().enumerate() {
        fx[k] = M::reduce(v);
    }
    let mut fy = vec![0u32; size];
    for (k, &v) in y.iter().enumerate() {
        fy[k] = M::reduce(v);
    }
    plan.forward(&mut fx);
    plan.forward(&mut fy);
    for (a, b) in fx.iter_mut().zip(&fy) {
        *a = M::mul(*a, *b);
    }
    plan.inverse(&mut fx);
    Ok(fx[m - 1..y.len()].to_vec())
}

/// Combines residues modulo `P1` and `P2` into the value modulo `P1 * P2`.
fn crt(a1: u32, a2: u32) -> u64 {
    // x = a1 + P1 * ((a2 - a1) * P1^-1 mod P2)
    let p1_inv = P2::inv(P1::P % P2::P);
    let diff = P2::sub(a2 % P2::P, a1 % P2::P);
    let h = P2::mul(diff, p1_inv);
    a1 as u64 + P1::P as u64 * h as u64
}
