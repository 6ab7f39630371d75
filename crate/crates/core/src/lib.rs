//! Combinatorial engine for the cut-point model of geometric realization.
//!
//! The crate computes with finite presentations of simplicial and cyclic
//! sets over exact rational arithmetic:
//!
//! - [`delta`]: the simplex category of finite ordinals and monotone maps,
//!   together with the duality against bi-pointed linear orders;
//! - [`sset`]: simplicial-set presentations, degeneracy normal forms,
//!   levelwise products, and nerves of finite categories;
//! - [`realize`]: realization points as cut configurations on the unit
//!   interval, the product bijection, the interval homeomorphism action,
//!   and the measure metric;
//! - [`lambda`]: the cyclic category as monotone periodic integer maps,
//!   graded presentations of `Z₊`-categories, duality, and the linear-order
//!   recovery procedure;
//! - [`cyclic`]: cyclic sets, cyclic nerves, and the cyclic completion of
//!   a finite linear order;
//! - [`circle`]: realization points on the circle, rotations and
//!   circle homeomorphisms, and the basepoint cut down to the interval.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so the types can be shared freely across threads.

pub mod circle;
pub mod cyclic;
pub mod delta;
pub mod json;
pub mod lambda;
pub mod rational;
pub mod realize;
pub mod sset;

use thiserror::Error;

/// Errors produced by constructors and operations across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Source/target or dimension data of two values do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A value violates a structural invariant.
    #[error("invalid value: {0}")]
    InvalidValue(String),
    /// An index points outside the structure it refers to.
    #[error("out of range: {0}")]
    OutOfRange(String),
    /// An operation that requires a specific kind of space was handed
    /// something else.
    #[error("unsupported space: {0}")]
    UnsupportedSpace(String),
    /// A graded hom table is truncated too low to answer the query.
    #[error("winding truncation insufficient: {0}")]
    Truncation(String),
    /// The exhaustive search was asked to exceed its configured cap.
    #[error("search cap exceeded: {0}")]
    CapExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
