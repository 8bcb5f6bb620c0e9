//! LZ-Start-End (LZSE) factorization toolkit.
//!
//! An LZSE factorization is an LZ-like factorization in which every copy
//! factor is the concatenation of a contiguous run of earlier factors. This
//! crate provides a greedy parser, conversion from context-free grammars, an
//! `O(log n)` random-access index over the factorization, baseline LZ77/LZSS
//! parsers with zeroth-order entropy accounting, and generators for the
//! string families that separate LZSE from grammars.

pub mod access;
pub mod baselines;
pub mod dag;
pub mod entropy;
pub mod error;
pub mod factorization;
pub mod generators;
pub mod grammar;
pub mod greedy;
pub mod ibst;
pub mod report;
pub mod sparse_table;
pub mod suffix;
pub mod text;

pub use error::{Error, Result, Violation};
pub use factorization::{Factor, Factorization};
pub use greedy::{compute_extended_factors, greedy_factorize, greedy_factorize_oracle};
pub use suffix::SuffixIndex;
pub use text::{SymbolMode, Text};

/// Builds the suffix index and runs the greedy parser.
pub fn factorize(text: &Text) -> Factorization {
    let idx = SuffixIndex::new(text.symbols());
    greedy_factorize(text.symbols(), &idx)
}
