//! Certificates that `w t_μ (ℓΛ0 − λ)` is dominant, and the weight
//! decompositions behind fusion factorizations of Demazure modules.
//!
//! The construction runs in the order
//!
//! 1. `λ′ = −w0 λ`;
//! 2. fold `λ′/ℓ + ε·ρ` into the fundamental alcove, giving `v = t_{μ′} u`
//!    with `λ′/ℓ ∈ v(Ā)` and `v(A)` inside the fundamental chamber;
//! 3. `μ = −w0 μ′` and `w = u⁻¹ w0`;
//! 4. `Λ = w t_μ (ℓΛ0 − λ)`, whose classical part is `ℓ u⁻¹(λ′/ℓ − μ′) ∈ ℓĀ`.
//!
//! [`verify_certificate`] recomputes `Λ` directly from the translation
//! formula and checks dominance at every node including node 0, without
//! using the folding path.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::afweyl::{
    fold_to_alcove, m_contains, separating_count, translate_affine_weight, AffineWeight,
    AffineWeylElement, LexPoint,
};
use crate::error::{Error, Result};
use crate::rational::{frac, q};
use crate::rootsys::{AffineLabel, FiniteWeight, FiniteWeylElement, RootSystemData};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinbergCertificate {
    pub label: AffineLabel,
    pub level: i64,
    pub lambda: FiniteWeight,
    pub mu: FiniteWeight,
    pub w: FiniteWeylElement,
    /// `Λ = w t_μ (ℓΛ0 − λ)` with its exact δ-degree.
    pub dominant: AffineWeight,
    /// Reduced word for `(w t_μ)⁻¹ = w0·v`.
    pub v_d_word: Vec<usize>,
}

impl SteinbergCertificate {
    /// `w t_μ` as an affine Weyl group element, `t_{w(μ)} w`.
    pub fn element(&self) -> AffineWeylElement {
        AffineWeylElement {
            linear: self.w.clone(),
            transl: self.w.act(&self.mu),
        }
    }
}

pub(crate) fn check_dominant_integral(rs: &RootSystemData, lambda: &FiniteWeight) -> Result<()> {
    rs.check_rank(lambda)?;
    if !lambda.is_integral() || !lambda.is_dominant() {
        return Err(Error::Precondition(format!(
            "weight {lambda} is not dominant integral"
        )));
    }
    Ok(())
}

pub fn steinberg_certificate(
    rs: &RootSystemData,
    level: i64,
    lambda: &FiniteWeight,
) -> Result<SteinbergCertificate> {
    if level < 1 {
        return Err(Error::Precondition(format!("level {level} must be positive")));
    }
    check_dominant_integral(rs, lambda)?;

    let w0 = rs.w0();
    let lambda_prime = -&w0.act(lambda);
    let point = LexPoint::perturbed(rs, lambda_prime.scale(&frac(1, level)));
    let alcove = fold_to_alcove(rs, &point)?;

    let mu = -&w0.act(&alcove.mu_prime);
    let w = alcove.u.inverse(rs).compose(rs, &w0);

    let start = AffineWeight::level_minus(level, lambda);
    let translated = translate_affine_weight(rs, &mu, &start)?;
    let dominant = AffineWeight::new(
        w.act(&translated.classical),
        translated.level,
        translated.degree,
    );

    let mut v_d_word = rs.w0_word.clone();
    v_d_word.extend_from_slice(&alcove.word);

    Ok(SteinbergCertificate {
        label: rs.label,
        level,
        lambda: lambda.clone(),
        mu,
        w,
        dominant,
        v_d_word,
    })
}

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateFailure {
    LabelMismatch,
    BadInput(String),
    MuNotInM,
    MuNotDominant,
    NotDominant,
    Alpha0Negative,
    LambdaMismatch,
    WordMismatch,
    WordNotReduced,
}

impl fmt::Display for CertificateFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateFailure::LabelMismatch => f.write_str("label mismatch"),
            CertificateFailure::BadInput(s) => write!(f, "bad input: {s}"),
            CertificateFailure::MuNotInM => f.write_str("mu not in M"),
            CertificateFailure::MuNotDominant => f.write_str("mu not dominant"),
            CertificateFailure::NotDominant => f.write_str("not dominant"),
            CertificateFailure::Alpha0Negative => f.write_str("negative alpha_0 pairing"),
            CertificateFailure::LambdaMismatch => f.write_str("Lambda mismatch"),
            CertificateFailure::WordMismatch => f.write_str("v_D word does not multiply to (w t_mu)^-1"),
            CertificateFailure::WordNotReduced => f.write_str("v_D word not reduced"),
        }
    }
}

pub fn verify_certificate(
    rs: &RootSystemData,
    cert: &SteinbergCertificate,
) -> std::result::Result<(), CertificateFailure> {
    use CertificateFailure::*;
    if cert.label != rs.label {
        return Err(LabelMismatch);
    }
    if cert.level < 1 {
        return Err(BadInput("level must be positive".into()));
    }
    check_dominant_integral(rs, &cert.lambda).map_err(|e| BadInput(e.to_string()))?;
    if cert.mu.rank() != rs.rank() || cert.w.matrix().len() != rs.rank() {
        return Err(BadInput("rank mismatch".into()));
    }

    if !m_contains(rs, &cert.mu) {
        return Err(MuNotInM);
    }
    if !cert.mu.is_dominant() {
        return Err(MuNotDominant);
    }

    let start = AffineWeight::level_minus(cert.level, &cert.lambda);
    let recomputed = cert
        .element()
        .act_weight(rs, &start)
        .map_err(|e| BadInput(e.to_string()))?;
    let cl = &recomputed.classical;
    if !cl.is_integral() || !cl.is_dominant() {
        return Err(NotDominant);
    }
    let alpha0 = q(cert.level) - q(rs.a0) * rs.pair_positive_coroot(&cl.coords, rs.theta_index);
    if alpha0.is_negative() {
        return Err(Alpha0Negative);
    }
    if recomputed != cert.dominant {
        return Err(LambdaMismatch);
    }

    let inv = cert.element().inverse(rs);
    let from_word =
        AffineWeylElement::from_word(rs, &cert.v_d_word).map_err(|e| BadInput(e.to_string()))?;
    if from_word != inv {
        return Err(WordMismatch);
    }
    let p0 = LexPoint::interior(rs);
    let dist = separating_count(rs, &p0, &inv.act_point(&p0)).map_err(|e| BadInput(e.to_string()))?;
    if dist != cert.v_d_word.len() as u64 {
        return Err(WordNotReduced);
    }
    Ok(())
}

/// `λ = ℓ·Σ parts + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDecomposition {
    pub level: i64,
    pub parts: Vec<FiniteWeight>,
    pub remainder: FiniteWeight,
}

/// Coordinate-wise Euclidean division `λ = ℓ·Σ m_i ω_i + λ0`, `0 ≤ r_i < ℓ`.
pub fn canonical_decomposition(
    rs: &RootSystemData,
    level: i64,
    lambda: &FiniteWeight,
) -> Result<WeightDecomposition> {
    if !rs.finite_type.is_simply_laced() {
        return Err(Error::Unsupported(format!(
            "canonical decomposition needs a simply-laced type, got {}",
            rs.finite_type
        )));
    }
    if level < 1 {
        return Err(Error::Precondition(format!("level {level} must be positive")));
    }
    check_dominant_integral(rs, lambda)?;
    let n = rs.rank();
    let coords = lambda.to_ints().expect("checked integral");
    let mut parts = Vec::new();
    let mut rem = vec![0i64; n];
    for (i, &c) in coords.iter().enumerate() {
        let m = c.div_euclid(level);
        rem[i] = c.rem_euclid(level);
        for _ in 0..m {
            parts.push(FiniteWeight::fundamental(n, i + 1, 1));
        }
    }
    Ok(WeightDecomposition {
        level,
        parts,
        remainder: FiniteWeight::from_ints(&rem),
    })
}

/// The fundamental coweight of node `i` (one-based) embedded through the form:
/// `(2/⟨α_i,α_i⟩)·ω_i`.
pub fn fundamental_coweight(rs: &RootSystemData, i: usize) -> FiniteWeight {
    FiniteWeight::fundamental(rs.rank(), i, 1).scale(&rs.symmetrizers[i - 1])
}

/// Checks `λ = ℓ·Σ parts + remainder` with dominant integral remainder and
/// dominant parts satisfying `⟨part, α_j⟩ ∈ ℤ` for every simple root.
pub fn validate_decomposition(
    rs: &RootSystemData,
    level: i64,
    parts: &[FiniteWeight],
    remainder: &FiniteWeight,
    lambda: &FiniteWeight,
) -> Result<()> {
    let bad = |s: String| Err(Error::InvalidDecomposition(s));
    if level < 1 {
        return bad(format!("level {level} must be positive"));
    }
    for x in parts.iter().chain([remainder, lambda]) {
        if x.rank() != rs.rank() {
            return bad(format!("weight {x} has the wrong rank"));
        }
    }
    if !remainder.is_integral() || !remainder.is_dominant() {
        return bad(format!("remainder {remainder} is not dominant integral"));
    }
    for p in parts {
        if !p.is_dominant() {
            return bad(format!("part {p} is not dominant"));
        }
        for j in 0..rs.rank() {
            let pairing = &p.coords[j] * &rs.root_norms[j] / q(2);
            if !pairing.is_integer() {
                return bad(format!(
                    "part {p} is not a coweight: <part, alpha_{}> = {}",
                    j + 1,
                    crate::rational::fmt_q(&pairing)
                ));
            }
        }
    }
    let mut total = remainder.clone();
    for p in parts {
        total = &total + &p.scale(&q(level));
    }
    if &total != lambda {
        return bad(format!("l * sum(parts) + remainder = {total}, expected {lambda}"));
    }
    Ok(())
}

impl WeightDecomposition {
    pub fn validate(&self, rs: &RootSystemData, lambda: &FiniteWeight) -> Result<()> {
        validate_decomposition(rs, self.level, &self.parts, &self.remainder, lambda)
    }

    /// The highest weights `ℓ·part` of the non-remainder fusion factors.
    pub fn factor_weights(&self) -> Vec<FiniteWeight> {
        self.parts.iter().map(|p| p.scale(&q(self.level))).collect()
    }

    pub fn remainder_is_trivial(&self) -> bool {
        self.remainder.coords.iter().all(Zero::is_zero)
    }
}
