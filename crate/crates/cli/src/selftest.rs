//! Small randomized suites that compare every algorithm against a
//! brute-force oracle. Same seed, same output.

use std::io::Write;

use lcew_core::bmm::{multiply, CooMatrix};
use lcew_core::gen::{random_coo, random_text};
use lcew_core::periodicity::{prefix_array, quantum_borders};
use lcew_core::{brute, build_jump, lcew_kangaroo, occurrences, pmwe_search, FftMatcher, LceOracle, LcewIndex};
use lcew_core::{SelectionScheme, WildcardText};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{CliError, CliResult};

type Suite = fn(&mut ChaCha8Rng) -> Result<String, String>;

const SUITES: &[(&str, Suite)] = &[
    ("lcew", lcew_suite),
    ("kangaroo", kangaroo_suite),
    ("jump", jump_suite),
    ("occurrences", occurrence_suite),
    ("bmm", bmm_suite),
    ("pmwe", pmwe_suite),
    ("arrays", arrays_suite),
];

pub fn run<W: Write>(seed: u64, out: &mut W) -> CliResult {
    for (k, (name, suite)) in SUITES.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
        match suite(&mut rng) {
            Ok(detail) => writeln!(out, "{name}: ok ({detail})")?,
            Err(msg) => {
                writeln!(out, "{name}: FAILED")?;
                out.flush()?;
                return Err(CliError::Failed(format!("{name} (seed {seed}): {msg}")));
            }
        }
    }
    Ok(())
}

fn text<R: Rng>(rng: &mut R, max_n: usize, max_sigma: usize) -> WildcardText {
    let n = rng.gen_range(1..=max_n);
    let sigma = rng.gen_range(1..=max_sigma);
    let density = [0.0, 0.1, 0.3, 0.5][rng.gen_range(0..4)];
    WildcardText::new(&random_text(rng, n, sigma, density), b'?').expect("non-empty")
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn lcew_suite(rng: &mut ChaCha8Rng) -> Result<String, String> {
    let mut queries = 0;
    for _ in 0..60 {
        let t = text(rng, 40, 4);
        for tp in 1..=t.transitions().len() + 1 {
            let index = LcewIndex::build(t.clone(), tp).map_err(|e| e.to_string())?;
            for i in 1..=t.len() {
                for j in 1..=t.len() {
                    let got = index.lcew(i, j).map_err(|e| e.to_string())?;
                    let want = brute::lcew(t.symbols(), i, j);
                    check(got == want, || format!("{:?} t={tp} ({i},{j}): {got} != {want}", t.to_bytes()))?;
                    queries += 1;
                }
            }
        }
    }
    Ok(format!("{queries} queries"))
}

fn kangaroo_suite(rng: &mut ChaCha8Rng) -> Result<String, String> {
    let mut queries = 0;
    for _ in 0..100 {
        let t = text(rng, 64, 4);
        let oracle = LceOracle::new(&t);
        for _ in 0..100 {
            let (i, j) = (rng.gen_range(1..=t.len()), rng.gen_range(1..=t.len()));
            let got = lcew_kangaroo(&t, &oracle, i, j).map_err(|e| e.to_string())?;
            let want = brute::lcew(t.symbols(), i, j);
            check(got == want, || format!("{:?} ({i},{j}): {got} != {want}", t.to_bytes()))?;
            queries += 1;
        }
    }
    Ok(format!("{queries} queries"))
}

fn jump_suite(rng: &mut ChaCha8Rng) -> Result<String, String> {
    let mut cells = 0;
    for _ in 0..40 {
        let t = text(rng, 40, 3);
        for tp in 1..=t.transitions().len() {
            let sel = SelectionScheme::new(&t, tp).map_err(|e| e.to_string())?;
            let table = build_jump(&t, &sel, &FftMatcher).map_err(|e| e.to_string())?;
            for (r, &i) in sel.selected().iter().enumerate() {
                for j in 1..=t.len() {
                    let got = table.get(r, j);
                    let want = brute::jump(t.symbols(), sel.selected(), i, j);
                    check(got == want, || format!("{:?} t={tp} Jump[{i},{j}]: {got:?} != {want:?}", t.to_bytes()))?;
                    cells += 1;
                }
            }
        }
    }
    Ok(format!("{cells} cells"))
}

fn occurrence_suite(rng: &mut ChaCha8Rng) -> Result<String, String> {
    let cases = 200;
    for _ in 0..cases {
        let sigma = rng.gen_range(1..=6);
        let m = rng.gen_range(1..=12);
        let n = rng.gen_range(m..=80);
        let mut joined = random_text(rng, m, sigma, 0.2);
        joined.extend(random_text(rng, n, sigma, 0.2));
        let joined = WildcardText::new(&joined, b'?').expect("non-empty");
        let (p, t) = joined.symbols().split_at(m);
        let got = occurrences(p, t).map_err(|e| e.to_string())?.bits;
        let want = brute::occurrences(p, t);
        check(got == want, || format!("{:?} pattern length {m}", joined.to_bytes()))?;
    }
    Ok(format!("{cases} pairs"))
}

fn bmm_suite(rng: &mut ChaCha8Rng) -> Result<String, String> {
    let cases = 150;
    for _ in 0..cases {
        let (a, b, c) = (rng.gen_range(1..=16), rng.gen_range(1..=16), rng.gen_range(1..=16));
        let density = rng.gen_range(0.0..0.4);
        let x = random_coo(rng, a, b, density);
        let y = random_coo(rng, b, c, density);
        let got = multiply(&x, &y).map_err(|e| e.to_string())?;
        let want = CooMatrix::new(a, c, brute::boolean_product(x.entries(), y.entries(), a, b, c))
            .map_err(|e| e.to_string())?;
        check(got == want, || format!("A:\n{}B:\n{}", x.to_coo_string(), y.to_coo_string()))?;
    }
    Ok(format!("{cases} products"))
}

fn pmwe_suite(rng: &mut ChaCha8Rng) -> Result<String, String> {
    let cases = 150;
    for _ in 0..cases {
        let sigma = rng.gen_range(1..=3);
        let (n, m) = (rng.gen_range(1..=60), rng.gen_range(1..=10));
        let t = random_text(rng, n, sigma, 0.15);
        let p = random_text(rng, m, sigma, 0.15);
        let k = rng.gen_range(0..=3);
        let tt = WildcardText::new(&t, b'?').expect("non-empty");
        let pt = WildcardText::new(&p, b'?').expect("non-empty");
        let got = pmwe_search(&tt, &pt, k).map_err(|e| e.to_string())?.positions;
        let want = brute::approximate_matches(&t, &p, k, b'?');
        check(got == want, || format!("text {t:?} pattern {p:?} k={k}"))?;
    }
    Ok(format!("{cases} searches"))
}

fn arrays_suite(rng: &mut ChaCha8Rng) -> Result<String, String> {
    let cases = 60;
    for _ in 0..cases {
        let t = text(rng, 64, 3);
        for tp in 1..=t.transitions().len() {
            let pi = prefix_array(&t, tp).map_err(|e| e.to_string())?;
            let want: Vec<usize> = (1..=t.len()).map(|j| brute::lcew(t.symbols(), 1, j)).collect();
            check(pi.pi == want, || format!("{:?} t={tp}: prefix array", t.to_bytes()))?;
        }
        let q = quantum_borders(&prefix_array(&t, 1).map_err(|e| e.to_string())?);
        check(q.borders == brute::quantum_borders(t.symbols()), || format!("{:?}: borders", t.to_bytes()))?;
        check(q.periods == brute::quantum_periods(t.symbols()), || format!("{:?}: periods", t.to_bytes()))?;
    }
    Ok(format!("{cases} texts"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_report() {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        run(11, &mut a).unwrap();
        run(11, &mut b).unwrap();
        assert_eq!(a, b);
        assert_eq!(String::from_utf8(a).unwrap().lines().count(), SUITES.len());
    }
}
