//! Exact combinatorics for the representation theory of p-adic `GL(n)` and
//! the geometry of its Vogan varieties.
//!
//! The crate is layered bottom-up:
//!
//! * [`multisegment`]: segments, multisegments, infinitesimal parameters.
//! * [`arthur`]: Arthur parameters and their Levi decomposition.
//! * [`geometry`]: orbits of `V_lambda`, dimensions, closure order, restriction
//!   to Levi subvarieties.
//! * [`kl`]: Kazhdan–Lusztig polynomials and the multiplicity matrices.
//! * [`ktheory`]: Grothendieck-group bases, restriction and lifting matrices,
//!   packets, and the endoscopy square.

pub mod arthur;
pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod json;
pub mod kl;
pub mod ktheory;
pub mod linalg;
pub mod multisegment;
pub mod parse;
pub mod square;

pub use arthur::{ArthurComponent, ArthurParameter};
pub use error::{Error, Result};
pub use geometry::{OrbitSpace, DEFAULT_MAX_POINTS};
pub use linalg::IntMatrix;
pub use multisegment::{HalfInt, InfinitesimalParameter, LineId, Multisegment, Segment};
