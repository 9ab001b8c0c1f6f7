//! Exact affine Weyl group alcove geometry.
//!
//! The crate covers four layers:
//!
//! * [`rootsys`]: finite root systems for every affine Cartan label, with the
//!   invariant form, reflections and dominance;
//! * [`afweyl`]: the affine Weyl group as affine maps, the alcove model with
//!   its hyperplane families, folding to the fundamental alcove and reduced
//!   words;
//! * [`steinberg`]: constructive certificates `w t_mu (l Lambda_0 - lambda)`
//!   dominant, an independent verifier, and weight decompositions;
//! * [`demchar`]: Demazure characters of current-algebra stable modules and
//!   character-level checks of fusion factorizations and Q-systems.
//!
//! All arithmetic is exact.

pub mod afweyl;
pub mod cli;
pub mod demchar;
pub mod error;
pub mod lattice;
pub mod rational;
pub mod rootsys;
pub mod selftest;
pub mod serial;
pub mod steinberg;

pub use error::{Error, Result};
pub use rational::Q;
pub use rootsys::{AffineLabel, FiniteType, FiniteWeight, FiniteWeylElement, RootSystemData};
