//! Demazure characters of untwisted affine types.
//!
//! `D(ℓ, λ)` is realized through its character `D_{v_D} e^Λ`, with `Λ` and
//! the reduced word `v_D` read off the dominance certificate of `−w0 λ`.
//! The classical highest weight of the result is `λ`.

pub mod cache;
pub mod charpoly;
pub mod kernel;
pub mod verify;

pub use cache::{CacheKey, CharacterCache, CharacterRecord};
pub use charpoly::{
    char_product, grade_shift, AffKey, CharPoly, ClassicalChar, GradedClassicalChar, Grading,
};
pub use kernel::{
    demazure_certificate, demazure_character, demazure_step, weyl_dimension, DemazureKernel,
};
pub use verify::{
    highest_weight_violation, verify_fusion, verify_qsystem, verify_qsystem_with, FusionReport,
    QSystemReport,
};
