//! Seeded random inputs for tests, benchmarks and the CLI self-test.

use rand::Rng;

use crate::bmm::CooMatrix;
use crate::text::DEFAULT_WILDCARD;

const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

/// `n` bytes over the first `sigma` letters, each position a wildcard
/// (`?`) with probability `density`.
pub fn random_text<R: Rng>(rng: &mut R, n: usize, sigma: usize, density: f64) -> Vec<u8> {
    assert!((1..=LETTERS.len()).contains(&sigma));
    (0..n)
        .map(|_| if rng.gen_bool(density) { DEFAULT_WILDCARD } else { LETTERS[rng.gen_range(0..sigma)] })
        .collect()
}

/// `n` letters with `groups` wildcard runs of length `1..=max_run`, starting
/// at evenly spread random offsets so that runs never touch.
pub fn random_text_with_groups<R: Rng>(
    rng: &mut R,
    n: usize,
    sigma: usize,
    groups: usize,
    max_run: usize,
) -> Vec<u8> {
    let mut raw = random_text(rng, n, sigma, 0.0);
    if groups == 0 {
        return raw;
    }
    let slot = n / groups;
    assert!(slot > max_run + 1, "too many groups for the text length");
    for g in 0..groups {
        let len = rng.gen_range(1..=max_run);
        let start = g * slot + rng.gen_range(0..slot - len - 1);
        raw[start..start + len].fill(DEFAULT_WILDCARD);
    }
    raw
}

/// `rows × cols` matrix with each bit set independently with probability `density`.
pub fn random_coo<R: Rng>(rng: &mut R, rows: usize, cols: usize, density: f64) -> CooMatrix {
    let mut entries = Vec::new();
    for r in 1..=rows {
        for c in 1..=cols {
            if rng.gen_bool(density) {
                entries.push((r, c));
            }
        }
    }
    CooMatrix::new(rows, cols, entries).expect("generated in order")
}
