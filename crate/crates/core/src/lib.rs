//! Exact combinatorics for tensor products of snake modules of quantum affine
//! `sl_k`, phrased through Zelevinsky multisegments.
//!
//! The central question is whether `L(M) ⊗ L(M')` is simple. Three routes are
//! provided and agree on ladders: the matching criterion in [`criterion`], the
//! tiling decomposition of ladder products in [`ring_calc`], and the
//! Kazhdan–Lusztig ring computation [`ring_calc::tensor_oracle`].

pub mod correspond;
pub mod criterion;
pub mod error;
pub mod qchar;
pub mod ring_calc;
pub mod segments;
pub mod symmetric_group;
pub mod tableaux;

pub use correspond::{DominantMonomial, YVariable};
pub use error::{Error, Result};
pub use ring_calc::{Basis, RingElement};
pub use segments::{ms, seg, Multisegment, Segment};
pub use symmetric_group::{IntPolynomial, Permutation};
pub use tableaux::{Column, Tableau};
