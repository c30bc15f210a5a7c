//! Exact machinery for canonical Ramsey patterns on sums and alternating
//! sums of integers.
//!
//! The crate is `no_std` and only needs an allocator. Everything is exact:
//! integers are arbitrary precision and linear algebra runs over the
//! rationals without floating point.
//!
//! * [`arith`]: valuations and exact integer square roots.
//! * [`colorings`]: the colorings of positive integers and of differences.
//! * [`forms`]: ground sets, index sets, sums and alternating sums.
//! * [`patterns`]: finite-prefix classification against each theorem profile.
//! * [`thinning`]: subsequence extraction (interval rainbow, residues,
//!   valuation stars, finite Ramsey focusing).
//! * [`rado`]: the columns property, coefficient-sequence conditions and
//!   colored solution search.
//! * [`encoding`]: sets as binary integers, block-built ground sets and the
//!   alternating-sum identity.
//! * [`oracle`]: brute-force enumeration and exclusion reports.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod colorings;
pub mod encoding;
pub mod error;
pub mod forms;
pub mod oracle;
pub mod patterns;
pub mod rado;
pub mod thinning;

pub use colorings::{eval_coloring, Color, ColoringKind, ColoringSpec};
pub use error::{Error, Result};
pub use forms::{GroundSet, IndexSet, LinearForm, Parity};
pub use patterns::{classify_canonical, PatternLabel, PatternVerdict, TheoremProfile};
