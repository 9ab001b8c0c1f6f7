//! Character-level checks of fusion factorizations and Q-system sequences.

use std::fmt;

use super::cache::CharacterCache;
use super::charpoly::{grade_shift, CharPoly, ClassicalChar, GradedClassicalChar, Grading};
use crate::error::{Error, Result};
use crate::rational::q;
use crate::rootsys::{FiniteWeight, RootSystemData};
use crate::steinberg::{canonical_decomposition, check_dominant_integral, WeightDecomposition};

/// Why a character fails the highest-weight invariants, if it does.
///
/// The classical character must have `λ` as its unique maximal weight with
/// multiplicity 1, and the top δ-degree layer must have a unique maximal
/// weight, again of multiplicity 1.
pub fn highest_weight_violation(
    rs: &RootSystemData,
    f: &CharPoly,
    lambda: &FiniteWeight,
) -> Option<String> {
    let Some(lam) = lambda.to_ints() else {
        return Some(format!("{lambda} is not integral"));
    };
    let cl = f.classical();
    let maxima = cl.maximal_weights(rs);
    if maxima != vec![lam.clone()] {
        return Some(format!("maximal classical weights {maxima:?}, expected [{lam:?}]"));
    }
    if cl.mult(&lam) != 1 {
        return Some(format!("highest weight has multiplicity {}", cl.mult(&lam)));
    }
    let top = f.max_degree()?;
    let layer = ClassicalChar::from_terms(
        f.terms()
            .filter(|(k, _)| k.degree == top)
            .map(|(k, m)| (k.classical.to_vec(), m)),
    );
    let tops = layer.maximal_weights(rs);
    if tops.len() != 1 || layer.mult(&tops[0]) != 1 {
        return Some(format!("top layer maxima {tops:?} are not a single simple weight"));
    }
    None
}

/// One fusion factor `D(ℓ, ν)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionFactor {
    pub highest: FiniteWeight,
    pub dimension: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionReport {
    pub level: i64,
    pub lambda: FiniteWeight,
    pub decomposition: WeightDecomposition,
    pub lhs_dimension: i64,
    pub factors: Vec<FusionFactor>,
    pub rhs_dimension: i64,
    /// First weight where the classical characters differ: `(weight, lhs, rhs)`.
    pub difference: Option<(Vec<i64>, i64, i64)>,
}

impl FusionReport {
    pub fn passed(&self) -> bool {
        self.difference.is_none() && self.lhs_dimension == self.rhs_dimension
    }

    /// `"18 = 3×3×2"`.
    pub fn dimension_line(&self) -> String {
        let rhs = if self.factors.is_empty() {
            "1".to_string()
        } else {
            self.factors
                .iter()
                .map(|f| f.dimension.to_string())
                .collect::<Vec<_>>()
                .join("×")
        };
        let rel = if self.lhs_dimension == self.rhs_dimension { "=" } else { "≠" };
        format!("{} {rel} {rhs}", self.lhs_dimension)
    }
}

impl fmt::Display for FusionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict}: dim D({}, [{}]) ", self.level, self.lambda)?;
        write!(f, "{}", self.dimension_line())?;
        if let Some((w, a, b)) = &self.difference {
            write!(f, "; first differing weight {w:?}: {a} vs {b}")?;
        }
        Ok(())
    }
}

/// Compares `D(ℓ,λ)` with `D(ℓ,ℓλ_1) ∗ … ∗ D(ℓ,ℓλ_k) ∗ D(ℓ,λ0)` through classical
/// characters. Without a decomposition the canonical one is used; a trivial
/// remainder contributes no factor.
pub fn verify_fusion(
    cache: &CharacterCache,
    rs: &RootSystemData,
    level: i64,
    lambda: &FiniteWeight,
    decomposition: Option<&WeightDecomposition>,
) -> Result<FusionReport> {
    let decomposition = match decomposition {
        Some(d) => {
            if d.level != level {
                return Err(Error::InvalidDecomposition(format!(
                    "decomposition is for level {}, not {level}",
                    d.level
                )));
            }
            d.validate(rs, lambda)?;
            d.clone()
        }
        None => canonical_decomposition(rs, level, lambda)?,
    };

    let lhs = cache.character(rs, level, lambda)?.classical();
    let mut highest = decomposition.factor_weights();
    if !decomposition.remainder_is_trivial() {
        highest.push(decomposition.remainder.clone());
    }
    let mut rhs = ClassicalChar::trivial(rs.rank());
    let mut factors = Vec::with_capacity(highest.len());
    for h in highest {
        let c = cache.character(rs, level, &h)?.classical();
        factors.push(FusionFactor {
            highest: h,
            dimension: c.dimension(),
        });
        rhs = rhs.product(&c);
    }
    Ok(FusionReport {
        level,
        lambda: lambda.clone(),
        decomposition,
        lhs_dimension: lhs.dimension(),
        rhs_dimension: factors.iter().map(|f| f.dimension).product(),
        factors,
        difference: lhs.first_difference(&rhs),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSystemReport {
    pub level: i64,
    pub lambda: FiniteWeight,
    pub node: usize,
    /// `λ + ℓω_i`.
    pub top: FiniteWeight,
    /// `μ = ℓω_i + λ − λ(α_i∨)α_i`.
    pub mu: FiniteWeight,
    /// `λ(α_i∨)`, the grade shift of the `D(ℓ, μ)` term.
    pub shift: u64,
    pub grading: Grading,
    pub dim_top: i64,
    pub dim_sub: i64,
    pub dim_quotient: i64,
    /// Part (a): first weight where `D(ℓ,λ+ℓω_i)` and `D(ℓ,μ) + D(ℓ+1,λ+ℓω_i)` differ.
    pub ungraded_difference: Option<(Vec<i64>, i64, i64)>,
    /// Part (b): first `(degree, weight, lhs, rhs)` where the graded identity fails.
    pub graded_difference: Option<(u64, Vec<i64>, i64, i64)>,
}

impl QSystemReport {
    pub fn ungraded_passed(&self) -> bool {
        self.ungraded_difference.is_none()
    }

    pub fn graded_passed(&self) -> bool {
        self.graded_difference.is_none()
    }

    pub fn passed(&self) -> bool {
        self.ungraded_passed() && self.graded_passed()
    }
}

impl fmt::Display for QSystemReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = |b: bool| if b { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "D({}, [{}]) vs D({}, [{}]) + D({}, [{}]), shift {}",
            self.level,
            self.top,
            self.level,
            self.mu,
            self.level + 1,
            self.top,
            self.shift
        )?;
        writeln!(
            f,
            "(a) ungraded: {}: {} = {} + {}",
            v(self.ungraded_passed()),
            self.dim_top,
            self.dim_sub,
            self.dim_quotient
        )?;
        write!(f, "(b) graded ({:?}): {}", self.grading, v(self.graded_passed()))?;
        if let Some((d, w, a, b)) = &self.graded_difference {
            write!(f, "; degree {d}, weight {w:?}: {a} vs {b}")?;
        }
        Ok(())
    }
}

fn graded_difference(
    a: &GradedClassicalChar,
    b: &GradedClassicalChar,
) -> Option<(u64, Vec<i64>, i64, i64)> {
    let mut degrees: Vec<u64> = a.layers.keys().chain(b.layers.keys()).copied().collect();
    degrees.sort_unstable();
    degrees.dedup();
    let empty = ClassicalChar::default();
    degrees.into_iter().find_map(|d| {
        let x = a.layers.get(&d).unwrap_or(&empty);
        let y = b.layers.get(&d).unwrap_or(&empty);
        x.first_difference(y).map(|(w, m, n)| (d, w, m, n))
    })
}

/// Checks `0 → τ_{λ(α_i∨)} D(ℓ,μ) → D(ℓ, λ+ℓω_i) → D(ℓ+1, λ+ℓω_i) → 0` on
/// characters, with the current-algebra grading.
pub fn verify_qsystem(
    cache: &CharacterCache,
    rs: &RootSystemData,
    level: i64,
    lambda: &FiniteWeight,
    node: usize,
) -> Result<QSystemReport> {
    verify_qsystem_with(cache, rs, level, lambda, node, Grading::Current)
}

pub fn verify_qsystem_with(
    cache: &CharacterCache,
    rs: &RootSystemData,
    level: i64,
    lambda: &FiniteWeight,
    node: usize,
    grading: Grading,
) -> Result<QSystemReport> {
    if !rs.label.is_untwisted() || !rs.finite_type.is_simply_laced() {
        return Err(Error::Unsupported(format!(
            "Q-system checks need an untwisted simply-laced label, got {}",
            rs.label
        )));
    }
    rs.check_index(node)?;
    check_dominant_integral(rs, lambda)?;
    if level < 1 {
        return Err(Error::Precondition(format!("level {level} must be positive")));
    }
    let n = rs.rank();
    let omega = FiniteWeight::fundamental(n, node, 1).to_ints().expect("integral");
    if (0..rs.num_positive_roots()).any(|k| rs.pair_positive_coroot_int(&omega, k) > 1) {
        return Err(Error::Precondition(format!(
            "omega_{node} is not miniscule"
        )));
    }
    let lam = lambda.to_ints().expect("checked integral");
    let li = lam[node - 1];
    if li <= 0 {
        return Err(Error::Precondition(format!(
            "lambda(alpha_{node}^vee) > 0 fails: it is {li}"
        )));
    }
    let bound = (0..rs.num_positive_roots())
        .map(|k| rs.pair_positive_coroot_int(&lam, k))
        .max()
        .unwrap_or(0);
    if level < bound {
        return Err(Error::Precondition(format!(
            "l >= max{{lambda(alpha^vee) : alpha > 0}} fails: {level} < {bound}"
        )));
    }

    let top = lambda + &FiniteWeight::fundamental(n, node, level);
    let alpha = FiniteWeight::from_ints(&rs.cartan[node - 1]);
    let mu = &top - &alpha.scale(&q(li));

    let f_top = cache.character(rs, level, &top)?;
    let f_sub = cache.character(rs, level, &mu)?;
    let f_quo = cache.character(rs, level + 1, &top)?;

    let (c_top, c_sub, c_quo) = (f_top.classical(), f_sub.classical(), f_quo.classical());
    let ungraded_difference = c_top.first_difference(&c_sub.add(&c_quo));

    let shift = li as u64;
    let g_rhs = grade_shift(&f_sub.graded(grading), shift).add(&f_quo.graded(grading));
    let graded_difference = graded_difference(&f_top.graded(grading), &g_rhs);

    Ok(QSystemReport {
        level,
        lambda: lambda.clone(),
        node,
        top,
        mu,
        shift,
        grading,
        dim_top: c_top.dimension(),
        dim_sub: c_sub.dimension(),
        dim_quotient: c_quo.dimension(),
        ungraded_difference,
        graded_difference,
    })
}
