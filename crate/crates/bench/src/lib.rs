//! Seeded inputs shared by the benchmarks.

use lcew_core::bmm::CooMatrix;
use lcew_core::gen::{random_coo, random_text, random_text_with_groups};
use lcew_core::WildcardText;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Text of length `n` over 4 letters with exactly `groups` wildcard runs.
pub fn grouped_text(n: usize, groups: usize, seed: u64) -> WildcardText {
    let raw = random_text_with_groups(&mut rng(seed), n, 4, groups, 8);
    WildcardText::new(&raw, b'?').expect("non-empty")
}

/// Text with independent wildcards at the given density.
pub fn dense_text(n: usize, sigma: usize, density: f64, seed: u64) -> WildcardText {
    WildcardText::new(&random_text(&mut rng(seed), n, sigma, density), b'?').expect("non-empty")
}

/// `count` uniform 1-based position pairs in `[1, n]`.
pub fn query_pairs(n: usize, count: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut r = rng(seed);
    (0..count).map(|_| (r.gen_range(1..=n), r.gen_range(1..=n))).collect()
}

/// `A` (`a × b`) and `B` (`b × c`) with independent bits.
pub fn matrix_pair(a: usize, b: usize, c: usize, density: f64, seed: u64) -> (CooMatrix, CooMatrix) {
    let mut r = rng(seed);
    let x = random_coo(&mut r, a, b, density);
    let y = random_coo(&mut r, b, c, density);
    (x, y)
}

/// Pattern cut from the text, so that matches exist.
pub fn pattern_from(text: &WildcardText, m: usize, seed: u64) -> WildcardText {
    let bytes = text.to_bytes();
    let start = rng(seed).gen_range(0..=bytes.len() - m);
    WildcardText::new(&bytes[start..start + m], text.wildcard()).expect("non-empty")
}

/// `X·X` with `X = grouped_text(half, groups, seed)`: pairs `(i, i + half)`
/// have long extensions.
pub fn doubled_text(half: usize, groups: usize, seed: u64) -> WildcardText {
    let mut raw = random_text_with_groups(&mut rng(seed), half, 4, groups, 8);
    raw.extend_from_within(..);
    WildcardText::new(&raw, b'?').expect("non-empty")
}
