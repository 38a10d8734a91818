//! Exact computations in the Nichols–Woronowicz algebra of a Weyl group.
//!
//! The crate works over the rationals throughout.  [`rootsys`] provides root
//! systems and Weyl groups, [`alcove`] builds λ-chains, [`braided`] holds the
//! tensor calculus and symmetrizer, [`nichols`] constructs the algebra
//! degree by degree, and [`kmodel`] and [`equivariant`] realize the K-theory
//! models on top of it.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod alcove;
pub mod braided;
pub mod equivariant;
pub mod error;
pub mod group_algebra;
pub mod kmodel;
pub mod linalg;
pub mod nichols;
pub mod oracle;
pub mod report;
pub mod rootsys;

pub use error::{Error, Result};
pub use linalg::Q;
