use std::io::Write;
use std::time::Instant;

use lcew_core::gen::random_text_with_groups;
use lcew_core::{LcewIndex, QueryStats, WildcardText};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::CliError;

pub const HEADER: &str = "t,build_ms,table_cells,mean_alg1_iters,mean_alg2_iters";

pub fn generate(n: usize, groups: usize, sigma: usize, seed: u64) -> Result<Vec<u8>, CliError> {
    if n == 0 || !(1..=62).contains(&sigma) {
        return Err(CliError::Usage("need n >= 1 and 1 <= sigma <= 62".into()));
    }
    if groups > 0 && n / groups < 10 {
        return Err(CliError::Usage(format!("{groups} groups do not fit in n = {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_text_with_groups(&mut rng, n, sigma, groups, 8))
}

/// Powers of two in `[1, |Tr|]`.
pub fn t_values(transitions: usize) -> Vec<usize> {
    std::iter::successors(Some(1usize), |&t| t.checked_mul(2)).take_while(|&t| t <= transitions.max(1)).collect()
}

/// One CSV row per `t`; every `t` answers the same seeded query pairs.
pub fn sweep<W: Write>(text: &WildcardText, queries: usize, seed: u64, out: &mut W) -> Result<(), CliError> {
    let n = text.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let pairs: Vec<(usize, usize)> = (0..queries).map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n))).collect();
    writeln!(out, "{HEADER}")?;
    for t in t_values(text.transitions().len()) {
        let start = Instant::now();
        let index = LcewIndex::build(text.clone(), t)?;
        let build_ms = start.elapsed().as_secs_f64() * 1e3;
        let mut st = QueryStats::default();
        for &(i, j) in &pairs {
            index.lcew_with_stats(i, j, &mut st)?;
        }
        let mean1 = st.alg1_total_iterations as f64 / st.alg1_calls.max(1) as f64;
        let mean2 = st.alg2_total_iterations as f64 / st.queries.max(1) as f64;
        writeln!(out, "{t},{build_ms:.3},{},{mean1:.4},{mean2:.4}", index.table_cells())?;
        out.flush()?;
    }
    Ok(())
}
