//! Exact-arithmetic computation of dimensions and Picard-rank bounds of
//! affine and projective homogeneous spaces of simple and semisimple
//! algebraic groups.
//!
//! - [`rootsys`]: root systems of the nine simple families in exact
//!   coordinates, with Bourbaki simple-root numbering.
//! - [`parabolic`]: the bijection between subsets of simple roots and
//!   parabolic subalgebras; flag-variety dimensions and Picard ranks.
//! - [`maxdim`]: maximal dimensions `D^s`/`D^ss` of simple and semisimple
//!   algebras of a given rank, and dimension floors for exceptional types.
//! - [`classical`]: centralizer-dimension maximization for `sl`, `so`, `sp`
//!   by brute-force enumeration, with closed-form cross-checks.
//! - [`verify`]: exhaustive inequality sweeps producing machine-readable
//!   reports.
//! - [`report`]: the JSON-lines / CSV report schema.
//!
//! Everything is pure and deterministic; no floating point is used anywhere.

pub mod classical;
pub mod error;
pub mod maxdim;
pub mod parabolic;
pub mod report;
pub mod rootsys;
pub mod verify;

pub use error::{Error, Result};
pub use rootsys::{Family, SimpleType};
