//! Constacyclic codes from the twisted tensor embedding of `PG(r-1, q^t)`.
//!
//! The crate is organized bottom-up:
//!
//! * [`gf`]: exponent-coded arithmetic in one ambient field with Zech tables.
//! * [`pglin`]: exact dense linear algebra over subfields.
//! * [`geometry`]: projective points, Singer cycles, sublines, subgeometries.
//! * [`variety`]: the embedding `alpha`, its fixed subgeometry over `F_q`,
//!   collineation lifting and separating hyperplanes.
//! * [`codes`]: the codes `C_{r,t}`, their subcodes and punctured cyclic
//!   versions, with minimum-distance certificates, minimum-weight words,
//!   constacyclic structure, monomial automorphisms and decoding.
//! * [`format`]: the `GFMAT` text format and the JSON code summary.

mod arith;
pub mod codes;
pub mod error;
pub mod format;
pub mod geometry;
pub mod gf;
pub mod pglin;
pub mod variety;

pub use arith::binomial;
pub use error::{Error, Result};
pub use gf::{Elem, FieldCtx};
pub use pglin::GFMatrix;
