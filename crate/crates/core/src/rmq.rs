//! Constant-time range minimum over a fixed array in linear space.
//!
//! The array is cut into 64-element blocks. Inside a block, each position
//! keeps a bitmask of the monotone minimum stack ending there, so an
//! in-block query is one mask and one `trailing_zeros`. Block minima feed a
//! sparse table, which has `O(n / 64 * log n)` entries.

const BLOCK: usize = 64;

#[derive(Clone, Debug)]
pub struct Rmq {
    values: Vec<u32>,
    masks: Vec<u64>,
    /// `sparse[k][b]` = min over blocks `b .. b + 2^k`.
    sparse: Vec<Vec<u32>>,
}

impl Rmq {
    pub fn new(values: Vec<u32>) -> Rmq {
        let n = values.len();
        let mut masks = vec![0u64; n];
        let mut stack: Vec<usize> = Vec::with_capacity(BLOCK);
        for start in (0..n).step_by(BLOCK) {
            stack.clear();
            let mut mask = 0u64;
            for p in start..n.min(start + BLOCK) {
                while let Some(&top) = stack.last() {
                    if values[top] <= values[p] {
                        break;
                    }
                    mask &= !(1u64 << (top - start));
                    stack.pop();
                }
                stack.push(p);
                mask |= 1u64 << (p - start);
                masks[p] = mask;
            }
        }

        let blocks = n.div_ceil(BLOCK);
        let mut sparse = Vec::new();
        if blocks > 0 {
            let base: Vec<u32> = (0..blocks)
                .map(|b| values[b * BLOCK..n.min((b + 1) * BLOCK)].iter().copied().min().unwrap())
                .collect();
            sparse.push(base);
            let mut k = 1;
            while (1 << k) <= blocks {
                let prev = &sparse[k - 1];
                let half = 1 << (k - 1);
                let level: Vec<u32> = (0..=blocks - (1 << k))
                    .map(|b| prev[b].min(prev[b + half]))
                    .collect();
                sparse.push(level);
                k += 1;
            }
        }
        Rmq { values, masks, sparse }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Auxiliary words held besides the input values.
    pub fn aux_words(&self) -> usize {
        self.masks.len() * 2 + self.sparse.iter().map(Vec::len).sum::<usize>()
    }

    #[inline]
    fn in_block(&self, lo: usize, hi: usize) -> u32 {
        let start = lo - lo % BLOCK;
        let m = self.masks[hi] & (!0u64 << (lo - start));
        self.values[start + m.trailing_zeros() as usize]
    }

    /// Minimum of `values[lo..=hi]`.
    #[inline]
    pub fn min(&self, lo: usize, hi: usize) -> u32 {
        debug_assert!(lo <= hi && hi < self.values.len());
        let (bl, bh) = (lo / BLOCK, hi / BLOCK);
        if bl == bh {
            return self.in_block(lo, hi);
        }
        let mut best = self
            .in_block(lo, bl * BLOCK + BLOCK - 1)
            .min(self.in_block(bh * BLOCK, hi));
        if bl + 1 < bh {
            let (a, b) = (bl + 1, bh - 1);
            let k = (b - a + 1).ilog2() as usize;
            best = best.min(self.sparse[k][a]).min(self.sparse[k][b + 1 - (1 << k)]);
        }
        best
    }
}
