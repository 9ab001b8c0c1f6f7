//! The affine Weyl group `W = W_fin ⋉ t_M` and its alcove geometry.
//!
//! Points of the classical weight space are acted on by affine maps
//! `x ↦ u(x) + ν`. The hyperplanes `H_{α∨,k} = {x : x(α∨) = k}` with
//! `k ∈ Z_α` cut the space into alcoves; the fundamental alcove is
//! `{x(α_i∨) > 0, x(θ∨) < 1/a0}`.
//!
//! Ties on walls are broken with an infinitesimal perturbation: a
//! [`LexPoint`] is `base + ε·eps`, and every hyperplane test compares the pair
//! `(base value, eps value)` lexicographically. With a regular `eps` no point
//! ever lies on a wall.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{common_denominator, IntLattice};
use crate::rational::{ceil_q, floor_q, frac, q, Q};
use crate::rootsys::{
    identity_matrix, mat_mul, mat_vec_q, FiniteType, FiniteWeight, FiniteWeylElement,
    RootSystemData, Series,
};

/// Affine weight `classical + level·Λ0 + degree·δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    pub classical: FiniteWeight,
    pub level: i64,
    pub degree: Q,
}

impl AffineWeight {
    pub fn new(classical: FiniteWeight, level: i64, degree: Q) -> Self {
        AffineWeight {
            classical,
            level,
            degree,
        }
    }

    /// `level·Λ0 - λ` with δ-degree 0.
    pub fn level_minus(level: i64, lambda: &FiniteWeight) -> Self {
        AffineWeight::new(-lambda, level, Q::zero())
    }
}

/// The point `base + ε·eps` for an infinitesimal `ε > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexPoint {
    pub base: FiniteWeight,
    pub eps: FiniteWeight,
}

impl LexPoint {
    pub fn new(base: FiniteWeight, eps: FiniteWeight) -> Self {
        LexPoint { base, eps }
    }

    /// `x + ε·ρ`.
    pub fn perturbed(rs: &RootSystemData, base: FiniteWeight) -> Self {
        LexPoint { base, eps: rs.rho() }
    }

    /// `ε·ρ`, a point of the open fundamental alcove.
    pub fn interior(rs: &RootSystemData) -> Self {
        LexPoint {
            base: FiniteWeight::zero(rs.rank()),
            eps: rs.rho(),
        }
    }

    /// `(x(α∨), eps(α∨))` for the positive root with index `k`.
    pub fn pair(&self, rs: &RootSystemData, k: usize) -> (Q, Q) {
        (
            rs.pair_positive_coroot(&self.base.coords, k),
            rs.pair_positive_coroot(&self.eps.coords, k),
        )
    }

    pub fn is_regular(&self, rs: &RootSystemData) -> bool {
        (0..rs.num_positive_roots()).all(|k| !rs.pair_positive_coroot(&self.eps.coords, k).is_zero())
    }
}

/// Lexicographic comparison of `(b, e)` against the constant `k`.
fn lex_cmp(b: &Q, e: &Q, k: &Q) -> Ordering {
    b.cmp(k).then_with(|| e.cmp(&Q::zero()))
}

/// Element `t_ν ū`, acting as `x ↦ ū(x) + ν`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineWeylElement {
    pub linear: FiniteWeylElement,
    /// `ν` in fundamental-weight coordinates.
    pub transl: FiniteWeight,
}

impl AffineWeylElement {
    pub fn identity(rs: &RootSystemData) -> Self {
        AffineWeylElement {
            linear: FiniteWeylElement::identity(rs.rank()),
            transl: FiniteWeight::zero(rs.rank()),
        }
    }

    pub fn translation(rs: &RootSystemData, nu: FiniteWeight) -> Self {
        AffineWeylElement {
            linear: FiniteWeylElement::identity(rs.rank()),
            transl: nu,
        }
    }

    pub fn linear(linear: FiniteWeylElement, rs: &RootSystemData) -> Self {
        AffineWeylElement {
            linear,
            transl: FiniteWeight::zero(rs.rank()),
        }
    }

    /// Affine simple reflection `s_i`; `s_0 = t_{θ/a0} s_θ`.
    pub fn simple(rs: &RootSystemData, i: usize) -> Result<Self> {
        if i == 0 {
            let m = rs.root_reflection_matrix(rs.theta_index);
            Ok(AffineWeylElement {
                linear: FiniteWeylElement::from_matrix(rs, m),
                transl: rs.theta_weight().scale(&frac(1, rs.a0)),
            })
        } else {
            Ok(Self::linear(FiniteWeylElement::from_word(rs, &[i])?, rs))
        }
    }

    /// Product `s_{word[0]} s_{word[1]} ⋯` of affine simple reflections.
    pub fn from_word(rs: &RootSystemData, word: &[usize]) -> Result<Self> {
        let n = rs.rank();
        let theta = rs.theta_weight().scale(&frac(1, rs.a0));
        let s_theta = rs.root_reflection_matrix(rs.theta_index);
        let mut m = identity_matrix(n);
        let mut nu = FiniteWeight::zero(n);
        for &i in word {
            if i > n {
                return Err(Error::BadIndex { index: i, rank: n });
            }
            if i == 0 {
                let shift = FiniteWeight::new(mat_vec_q(&m, &theta.coords));
                nu = &nu + &shift;
                m = mat_mul(&m, &s_theta);
            } else {
                m = mat_mul(&m, rs.reflection_matrix(i));
            }
        }
        Ok(AffineWeylElement {
            linear: FiniteWeylElement::from_matrix(rs, m),
            transl: nu,
        })
    }

    pub fn act(&self, x: &FiniteWeight) -> FiniteWeight {
        &self.linear.act(x) + &self.transl
    }

    /// Applies `x ↦ ū(x) + ν` to the base and `ū` to the infinitesimal part.
    pub fn act_point(&self, x: &LexPoint) -> LexPoint {
        LexPoint {
            base: self.act(&x.base),
            eps: self.linear.act(&x.eps),
        }
    }

    /// `(t_ν ū)(t_ν′ ū′) = t_{ν + ū(ν′)} (ū ū′)`.
    pub fn compose(&self, rs: &RootSystemData, other: &Self) -> Self {
        AffineWeylElement {
            linear: self.linear.compose(rs, &other.linear),
            transl: &self.transl + &self.linear.act(&other.transl),
        }
    }

    /// `(t_ν ū)⁻¹ = t_{-ū⁻¹(ν)} ū⁻¹`.
    pub fn inverse(&self, rs: &RootSystemData) -> Self {
        let inv = self.linear.inverse(rs).reduced(rs);
        let transl = -&inv.act(&self.transl);
        AffineWeylElement {
            linear: inv,
            transl,
        }
    }

    /// Action on affine weights: `t_ν ū (Λ)`.
    pub fn act_weight(&self, rs: &RootSystemData, w: &AffineWeight) -> Result<AffineWeight> {
        let lin = AffineWeight::new(self.linear.act(&w.classical), w.level, w.degree.clone());
        translate_affine_weight(rs, &self.transl, &lin)
    }
}

pub fn affine_compose(rs: &RootSystemData, a: &AffineWeylElement, b: &AffineWeylElement) -> AffineWeylElement {
    a.compose(rs, b)
}

pub fn affine_inverse(rs: &RootSystemData, a: &AffineWeylElement) -> AffineWeylElement {
    a.inverse(rs)
}

pub fn affine_act_point(a: &AffineWeylElement, x: &LexPoint) -> LexPoint {
    a.act_point(x)
}

/// `t_α(Λ) = Λ + Λ(c)α − (⟨Λ,α⟩ + ⟨α,α⟩/2 · Λ(c))δ`.
pub fn translate_affine_weight(
    rs: &RootSystemData,
    alpha: &FiniteWeight,
    lam: &AffineWeight,
) -> Result<AffineWeight> {
    let level = q(lam.level);
    let pair = rs.inner_product(&lam.classical, alpha)?;
    let norm = rs.inner_product(alpha, alpha)?;
    let classical = &lam.classical + &alpha.scale(&level);
    let degree = &lam.degree - (pair + norm / q(2) * &level);
    Ok(AffineWeight::new(classical, lam.level, degree))
}

/// `m` with `Z_α = mℤ`, for the positive root with index `k`.
pub(crate) fn modulus_by_index(rs: &RootSystemData, k: usize) -> Q {
    let short = !rs.long[k];
    let label = rs.label;
    if label.is_untwisted() {
        match rs.finite_type {
            FiniteType {
                series: Series::B | Series::C | Series::F,
                ..
            } if short => q(2),
            FiniteType {
                series: Series::G, ..
            } if short => q(3),
            _ => q(1),
        }
    } else if label.is_a_even_twisted() && !short {
        frac(1, 2)
    } else {
        q(1)
    }
}

/// The modulus `m` of the hyperplane family `Z_α = mℤ` of a root.
pub fn z_alpha_modulus(rs: &RootSystemData, root: &[i64]) -> Result<Q> {
    let (k, _) = rs
        .root_index(root)
        .ok_or_else(|| Error::Domain(format!("{root:?} is not a root")))?;
    Ok(modulus_by_index(rs, k))
}

/// The lattice `M = ℤ·W_fin(θ/a0)`, kept as an integer lattice in root
/// coordinates scaled by `scale`.
#[derive(Debug, Clone)]
pub struct TranslationLattice {
    scale: BigInt,
    lattice: IntLattice,
}

impl TranslationLattice {
    fn build(rs: &RootSystemData) -> Self {
        let theta = rs.theta_weight().scale(&frac(1, rs.a0));
        let mut orbit = vec![theta.clone()];
        let mut seen = std::collections::HashSet::new();
        seen.insert(theta);
        let mut i = 0;
        while i < orbit.len() {
            for j in 1..=rs.rank() {
                let y = rs.reflect(j, &orbit[i]).expect("valid index");
                if seen.insert(y.clone()) {
                    orbit.push(y);
                }
            }
            i += 1;
        }
        let root_coords: Vec<Vec<Q>> = orbit.iter().map(|x| rs.weight_to_root_coords(x)).collect();
        let scale = common_denominator(&root_coords);
        let sq = Q::from_integer(scale.clone());
        let gens: Vec<Vec<BigInt>> = root_coords
            .iter()
            .map(|r| r.iter().map(|x| (x * &sq).to_integer()).collect())
            .collect();
        TranslationLattice {
            lattice: IntLattice::from_generators(rs.rank(), &gens),
            scale,
        }
    }

    /// Basis vectors in simple-root coordinates.
    pub fn basis_root_coords(&self) -> Vec<Vec<Q>> {
        self.lattice
            .basis()
            .iter()
            .map(|r| r.iter().map(|x| Q::new(x.clone(), self.scale.clone())).collect())
            .collect()
    }

    pub fn contains_root_coords(&self, r: &[Q]) -> bool {
        let sq = Q::from_integer(self.scale.clone());
        let mut v = Vec::with_capacity(r.len());
        for x in r {
            let y = x * &sq;
            if !y.is_integer() {
                return false;
            }
            v.push(y.to_integer());
        }
        self.lattice.contains(&v)
    }
}

pub fn translation_lattice(rs: &RootSystemData) -> &TranslationLattice {
    rs.translations.get_or_init(|| TranslationLattice::build(rs))
}

/// A ℤ-basis of `M` in canonical (Hermite) form, as weights.
pub fn m_lattice_basis(rs: &RootSystemData) -> Vec<FiniteWeight> {
    translation_lattice(rs)
        .basis_root_coords()
        .iter()
        .map(|r| rs.root_coords_to_weight(r))
        .collect()
}

pub fn m_contains(rs: &RootSystemData, nu: &FiniteWeight) -> bool {
    nu.rank() == rs.rank() && translation_lattice(rs).contains_root_coords(&rs.weight_to_root_coords(nu))
}

/// Membership in `M⁺ = M ∩ C̄`.
pub fn m_plus_contains(rs: &RootSystemData, nu: &FiniteWeight) -> bool {
    nu.is_dominant() && m_contains(rs, nu)
}

/// Output of folding a point into the fundamental alcove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcoveCertificate {
    /// Reduced word for `v`, indices in `0..=n`.
    pub word: Vec<usize>,
    /// `v = t_{μ′} u`, with the input point in `v(A)`.
    pub element: AffineWeylElement,
    pub mu_prime: FiniteWeight,
    pub u: FiniteWeylElement,
    /// The input point folded into the fundamental alcove.
    pub representative: LexPoint,
}

/// Folds `x` into the fundamental alcove, reflecting in the first violated
/// wall (finite walls `1..n` in order, then wall 0).
pub fn fold_to_alcove(rs: &RootSystemData, x: &LexPoint) -> Result<AlcoveCertificate> {
    rs.check_rank(&x.base)?;
    rs.check_rank(&x.eps)?;
    if !x.is_regular(rs) {
        return Err(Error::Precondition(
            "perturbation direction lies on a root hyperplane".into(),
        ));
    }
    let n = rs.rank();
    let bound = frac(1, rs.a0);
    let theta = rs.theta_weight();
    let tk = rs.theta_index;
    let mut base = x.base.clone();
    let mut eps = x.eps.clone();
    let mut word = Vec::new();
    loop {
        let finite = (0..n).find(|&i| {
            let b = &base.coords[i];
            b.is_negative() || (b.is_zero() && eps.coords[i].is_negative())
        });
        if let Some(i) = finite {
            base = rs.reflect(i + 1, &base)?;
            eps = rs.reflect(i + 1, &eps)?;
            word.push(i + 1);
            continue;
        }
        let tb = rs.pair_positive_coroot(&base.coords, tk);
        let te = rs.pair_positive_coroot(&eps.coords, tk);
        if lex_cmp(&tb, &te, &bound) == Ordering::Greater {
            base = &base - &theta.scale(&(tb - &bound));
            eps = &eps - &theta.scale(&te);
            word.push(0);
            continue;
        }
        break;
    }
    let element = AffineWeylElement::from_word(rs, &word)?;
    Ok(AlcoveCertificate {
        mu_prime: element.transl.clone(),
        u: element.linear.clone(),
        element,
        word,
        representative: LexPoint { base, eps },
    })
}

/// Index of the largest multiple `j·m` lying lexicographically below `(b, e)`.
fn floor_index(b: &Q, e: &Q, m: &Q) -> BigInt {
    let t = b / m;
    if e.is_positive() {
        floor_q(&t)
    } else {
        ceil_q(&t) - 1
    }
}

/// Number of hyperplanes `H_{α∨,k}`, `k ∈ Z_α`, strictly separating `p` and `q`.
pub fn separating_count(rs: &RootSystemData, p: &LexPoint, q_: &LexPoint) -> Result<u64> {
    for x in [p, q_] {
        rs.check_rank(&x.base)?;
        rs.check_rank(&x.eps)?;
        if !x.is_regular(rs) {
            return Err(Error::Precondition("point is not regular".into()));
        }
    }
    let mut total = BigInt::zero();
    for k in 0..rs.num_positive_roots() {
        let m = modulus_by_index(rs, k);
        let (pb, pe) = p.pair(rs, k);
        let (qb, qe) = q_.pair(rs, k);
        let a = floor_index(&pb, &pe, &m);
        let b = floor_index(&qb, &qe, &m);
        total += (a - b).abs();
    }
    Ok(u64::try_from(total).expect("count fits in u64"))
}

/// A reduced word for `v`, read off by folding `v(ε·ρ)` back to the fundamental alcove.
pub fn reduced_word_of(rs: &RootSystemData, v: &AffineWeylElement) -> Result<Vec<usize>> {
    if !m_contains(rs, &v.transl) {
        return Err(Error::InvalidElement(format!(
            "translation {} is not in M",
            v.transl
        )));
    }
    let p = v.act_point(&LexPoint::interior(rs));
    Ok(fold_to_alcove(rs, &p)?.word)
}

/// Whether `x` lies in the open fundamental chamber (lexicographically).
pub fn in_fundamental_chamber(rs: &RootSystemData, x: &LexPoint) -> bool {
    (0..rs.num_positive_roots()).all(|k| {
        let (b, e) = x.pair(rs, k);
        lex_cmp(&b, &e, &Q::zero()) == Ordering::Greater
    })
}

/// Whether the plain point `y` lies in the closure of the alcove containing `x`.
pub fn in_closed_alcove_of(rs: &RootSystemData, x: &LexPoint, y: &FiniteWeight) -> bool {
    (0..rs.num_positive_roots()).all(|k| {
        let m = modulus_by_index(rs, k);
        let (b, e) = x.pair(rs, k);
        let lo = Q::from_integer(floor_index(&b, &e, &m)) * &m;
        let hi = &lo + &m;
        let v = rs.pair_positive_coroot(&y.coords, k);
        lo <= v && v <= hi
    })
}

/// Whether `x` lies in the closed fundamental alcove `Ā`.
pub fn in_closed_fundamental_alcove(rs: &RootSystemData, x: &FiniteWeight) -> bool {
    x.is_dominant() && rs.pair_positive_coroot(&x.coords, rs.theta_index) <= frac(1, rs.a0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_q;

    fn rs(s: &str) -> RootSystemData {
        RootSystemData::from_label_str(s).unwrap()
    }

    fn pt(r: &RootSystemData, coords: &str) -> LexPoint {
        LexPoint::perturbed(r, FiniteWeight::parse(coords).unwrap())
    }

    #[test]
    fn z_alpha_table() {
        let c3 = rs("C3^1");
        assert_eq!(z_alpha_modulus(&c3, &[1, 0, 0]).unwrap(), q(2));
        assert_eq!(z_alpha_modulus(&c3, &[0, 0, 1]).unwrap(), q(1));
        assert_eq!(z_alpha_modulus(&rs("A2^2"), &[1]).unwrap(), frac(1, 2));
        assert_eq!(z_alpha_modulus(&rs("G2^1"), &[1, 0]).unwrap(), q(3));
        let e6 = rs("E6^1");
        for r in &e6.positive_roots {
            assert_eq!(z_alpha_modulus(&e6, r).unwrap(), q(1));
        }
        assert!(z_alpha_modulus(&c3, &[1, 0, 1]).is_err());
        let a4 = rs("A4^2");
        assert_eq!(z_alpha_modulus(&a4, &[1, 0]).unwrap(), q(1));
        assert_eq!(z_alpha_modulus(&a4, &[0, 1]).unwrap(), frac(1, 2));
    }

    #[test]
    fn untwisted_modulus_is_two_over_norm() {
        for l in ["B3^1", "C3^1", "F4^1", "G2^1", "E7^1"] {
            let r = rs(l);
            for (k, root) in r.positive_roots.iter().enumerate() {
                let a = r.root_to_weight(root);
                let n = r.inner_product(&a, &a).unwrap();
                assert_eq!(modulus_by_index(&r, k), q(2) / n, "{l}");
            }
        }
    }

    #[test]
    fn m_lattice_examples() {
        let a1 = rs("A1^1");
        assert_eq!(m_lattice_basis(&a1), vec![a1.root_to_weight(&[1])]);
        assert!(m_contains(&a1, &a1.root_to_weight(&[1])));
        assert!(!m_contains(&a1, &FiniteWeight::from_ints(&[1])));
        assert!(m_contains(&a1, &FiniteWeight::zero(1)));

        let a2 = rs("A2^1");
        assert_eq!(
            m_lattice_basis(&a2),
            vec![a2.root_to_weight(&[1, 0]), a2.root_to_weight(&[0, 1])]
        );

        // {2α1 + α2, α2} spans the same lattice as the Hermite basis {2α1, α2}.
        let c2 = rs("C2^1");
        let basis = m_lattice_basis(&c2);
        assert_eq!(basis, vec![c2.root_to_weight(&[2, 0]), c2.root_to_weight(&[0, 1])]);
        assert!(m_contains(&c2, &c2.root_to_weight(&[2, 1])));
        assert!(!m_contains(&c2, &c2.root_to_weight(&[1, 0])));
        assert!(!m_contains(&c2, &c2.root_to_weight(&[1, 1])));

        // A2^(2): M = ℤ·α1/2
        let t = rs("A2^2");
        assert!(m_contains(&t, &FiniteWeight::from_ints(&[1])));
        assert!(!m_contains(&t, &FiniteWeight::parse("1/2").unwrap()));
    }

    #[test]
    fn translation_examples() {
        let r = rs("A1^1");
        let a1 = r.root_to_weight(&[1]);
        let lam0 = AffineWeight::new(FiniteWeight::zero(1), 1, Q::zero());
        assert_eq!(
            translate_affine_weight(&r, &FiniteWeight::zero(1), &lam0).unwrap(),
            lam0
        );
        assert_eq!(
            translate_affine_weight(&r, &a1, &lam0).unwrap(),
            AffineWeight::new(a1.clone(), 1, q(-1))
        );
        let lvl0 = AffineWeight::new(a1.clone(), 0, Q::zero());
        assert_eq!(
            translate_affine_weight(&r, &a1, &lvl0).unwrap(),
            AffineWeight::new(a1.clone(), 0, q(-2))
        );
    }

    #[test]
    fn group_law_examples() {
        let r = rs("A2^1");
        let a1 = r.root_to_weight(&[1, 0]);
        let a2 = r.root_to_weight(&[0, 1]);
        let t1 = AffineWeylElement::translation(&r, a1.clone());
        let t2 = AffineWeylElement::translation(&r, a2.clone());
        assert_eq!(t1.compose(&r, &t2), AffineWeylElement::translation(&r, &a1 + &a2));

        let s1 = AffineWeylElement::simple(&r, 1).unwrap();
        let conj = s1.compose(&r, &t1).compose(&r, &s1.inverse(&r));
        assert_eq!(conj, AffineWeylElement::translation(&r, -&a1));

        let r1 = rs("A1^1");
        let s0 = AffineWeylElement::simple(&r1, 0).unwrap();
        let a = r1.root_to_weight(&[1]);
        let t_s = AffineWeylElement::translation(&r1, a)
            .compose(&r1, &AffineWeylElement::simple(&r1, 1).unwrap());
        assert_eq!(s0, t_s);
        for c in ["0", "1/2", "3", "-7/3"] {
            let x = FiniteWeight::parse(c).unwrap();
            let y = s0.act(&x);
            assert_eq!(y.coords[0], q(2) - parse_q(c).unwrap());
        }
    }

    #[test]
    fn fold_a1_examples() {
        let r = rs("A1^1");
        let c = fold_to_alcove(&r, &pt(&r, "1/2")).unwrap();
        assert!(c.word.is_empty());
        assert_eq!(c.element, AffineWeylElement::identity(&r));

        let c = fold_to_alcove(&r, &pt(&r, "5/2")).unwrap();
        assert_eq!(c.word, vec![0, 1]);
        let a1 = r.root_to_weight(&[1]);
        assert_eq!(c.element, AffineWeylElement::translation(&r, a1.clone()));
        assert_eq!(c.mu_prime, a1);

        let c = fold_to_alcove(&r, &pt(&r, "1")).unwrap();
        assert_eq!(c.word, vec![0]);
        assert_eq!(c.element, AffineWeylElement::simple(&r, 0).unwrap());
        assert_eq!(c.mu_prime, a1);
        assert!(c.u.word() == [1]);

        let bad = LexPoint::new(FiniteWeight::from_ints(&[1]), FiniteWeight::zero(1));
        assert!(matches!(fold_to_alcove(&r, &bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn separating_count_examples() {
        let r = rs("A1^1");
        let p = pt(&r, "1/2");
        assert_eq!(separating_count(&r, &p, &p).unwrap(), 0);
        assert_eq!(separating_count(&r, &p, &pt(&r, "5/2")).unwrap(), 2);
        assert_eq!(separating_count(&r, &p, &pt(&r, "-1/2")).unwrap(), 1);
        // the wall point 1 + ε lies above the wall at 1
        assert_eq!(separating_count(&r, &p, &pt(&r, "1")).unwrap(), 1);
        assert_eq!(separating_count(&r, &p, &pt(&r, "0")).unwrap(), 0);
    }

    #[test]
    fn reduced_words() {
        let r = rs("A1^1");
        assert!(reduced_word_of(&r, &AffineWeylElement::identity(&r)).unwrap().is_empty());
        let t = AffineWeylElement::translation(&r, r.root_to_weight(&[1]));
        assert_eq!(reduced_word_of(&r, &t).unwrap(), vec![0, 1]);
        let bad = AffineWeylElement::translation(&r, FiniteWeight::from_ints(&[1]));
        assert!(matches!(reduced_word_of(&r, &bad), Err(Error::InvalidElement(_))));

        let r = rs("A2^1");
        let t = AffineWeylElement::translation(&r, r.root_to_weight(&[1, 1]));
        let w = reduced_word_of(&r, &t).unwrap();
        let p0 = LexPoint::interior(&r);
        assert_eq!(
            w.len() as u64,
            separating_count(&r, &p0, &t.act_point(&p0)).unwrap()
        );
        assert_eq!(AffineWeylElement::from_word(&r, &w).unwrap(), t);
    }

    #[test]
    fn simple_reflection_walls() {
        // s_0 fixes the wall x(θ∨) = 1/a0 pointwise
        for l in ["A2^2", "A4^2", "D4^3", "E6^2", "C3^1"] {
            let r = rs(l);
            let s0 = AffineWeylElement::simple(&r, 0).unwrap();
            let on_wall = r.theta_weight().scale(&frac(1, 2 * r.a0));
            assert_eq!(
                r.pair_positive_coroot(&on_wall.coords, r.theta_index),
                frac(1, r.a0),
                "{l}"
            );
            assert_eq!(s0.act(&on_wall), on_wall, "{l}");
            assert!(m_contains(&r, &s0.transl), "{l}");
        }
    }
}
