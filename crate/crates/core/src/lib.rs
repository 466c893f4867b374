//! Exact symbolic toolkit for *cubic-linear* polynomial maps: maps
//! `F = Id + H` on `Q^d` where each component of `H` is the cube of a
//! linear form `L_i = a_i1 X_1 + ... + a_id X_d`.
//!
//! The crate builds such maps from their coefficient matrices, runs the
//! step-by-step inversion algorithm (the `P_j` recursion), verifies the
//! polynomial identities forced by nilpotency of the Jacobian `JH`, and
//! drives seeded, reproducible experiments relating the nilpotency index
//! of `JH` to the number of inversion steps and the degree of the
//! inverse. All arithmetic is exact rational arithmetic; every answer is
//! an identity, not an approximation.
//!
//! # Quick start
//!
//! ```
//! use keller::druzkowski::DruzkowskiMap;
//! use keller::inversion::{invert, verify_inverse, InversionStatus};
//! use keller::rational::rat;
//! use num_traits::Zero;
//!
//! // F = (X1 + X2^3, X2)
//! let map = DruzkowskiMap::from_matrix(vec![
//!     vec![Zero::zero(), rat(1)],
//!     vec![Zero::zero(), Zero::zero()],
//! ])
//! .unwrap();
//! let result = invert(map.map()).unwrap();
//! assert_eq!(result.status, InversionStatus::Inverted);
//! let inverse = result.inverse.unwrap();
//! assert!(verify_inverse(map.map(), &inverse));
//! assert_eq!(inverse.component(0).to_string_with_var('Y'), "-Y2^3 + Y1");
//! ```
//!
//! The `examples/` directory walks through each capability; the `keller`
//! binary exposes the same operations on matrix files.

pub mod cli;
pub mod conjecture;
pub mod druzkowski;
pub mod error;
pub mod identities;
pub mod inversion;
pub mod poly;
pub mod polymap;
pub mod rational;
pub mod rng;

pub use error::Error;
pub use poly::{Degree, Monomial, Polynomial};
pub use polymap::{NilpotencyIndex, PolyMap, PolyMatrix};
