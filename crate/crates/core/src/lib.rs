//! Mirror partners of complex tori whose period matrix may be singular.
//!
//! A complex torus `C^n / 2pi(Z^n + T Z^n)` with singular `T` has no
//! complexified symplectic mirror built from `-(T^-1)^t`. Shifting the
//! B-field by an integer matrix `delta` makes `T - delta` invertible, and
//! everything downstream (bundles, Lagrangian objects, factors of
//! automorphy) is built on the shifted data.
//!
//! Exact rational and Gaussian-rational arithmetic is used for every
//! algebraic identity. Floating point only appears where exponentials do,
//! in [`automorphy`].

pub mod automorphy;
pub mod bundle;
pub mod cli;
pub mod error;
pub mod fukaya;
pub mod gcs;
pub mod linalg;
pub mod sampling;
pub mod torus;

pub use error::{Error, Result};
