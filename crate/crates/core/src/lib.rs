//! Generalized self-shrinking generator families over GF(2^L).
//!
//! Field arithmetic and polynomial validation live in [`gf2x`], m-sequence
//! generation in [`sequences`], family construction in [`gss`], sequence
//! statistics in [`analysis`] and the exhaustive structural checks in
//! [`theorems`].

pub mod analysis;
pub mod bits;
pub mod gf2x;
pub mod gss;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod sequences;
pub mod theorems;

pub use gf2x::{Field, FieldElement, FieldError, PrimitivePolynomial};
pub use gss::{GssFamily, GssIndex, GssSequence, IndexSpec};
pub use sequences::MSequence;
