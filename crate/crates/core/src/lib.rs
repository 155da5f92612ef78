//! Longest common extension queries on strings with wildcards, with a
//! tunable space/query-time tradeoff, and three applications built on
//! them: sparse Boolean matrix multiplication, approximate pattern matching
//! with wildcards, and prefix / quantum border arrays.
//!
//! Positions in the public API are 1-based.

pub mod bmm;
pub mod brute;
pub mod error;
pub mod fft_match;
pub mod gen;
pub mod index;
pub mod jump;
pub mod lce;
pub mod ntt;
pub mod periodicity;
pub mod pmwe;
pub mod rmq;
pub mod text;

pub use bmm::{encode, multiply, multiply_with_stats, naive_product, BmmEncoding, BmmStats, CooMatrix, MultiplyOptions};
pub use error::{Error, Result};
pub use fft_match::{occurrences, FftMatcher, Matcher, NaiveMatcher, OccurrenceArray};
pub use index::{LcewIndex, Mode, QueryStats};
pub use jump::{build_jump, stream_rows, JumpTable, StreamStats, NEG};
pub use lce::{build_lce, lcew_kangaroo, lcew_kangaroo_counted, LceOracle};
pub use ntt::correlate;
pub use periodicity::{deterministic_borders, prefix_array, quantum_borders, PrefixArray, QuantumArrays};
pub use pmwe::{ed_wild, pmwe_search, MatchReport};
pub use text::{
    build_selection, build_text, sym_match, Alphabet, SelectionScheme, Symbol, WildcardText, DEFAULT_WILDCARD,
};
