//! Demazure operators on affine characters of untwisted types.
//!
//! With `α0 = δ − θ` and `α0∨ = c − θ∨`, the operator for node `i` sends
//! `e^μ` with `m = ⟨μ, α_i∨⟩` to
//!
//! * `e^μ + e^{μ−α_i} + … + e^{μ−mα_i}` when `m ≥ 0`,
//! * `0` when `m = −1`,
//! * `−(e^{μ+α_i} + … + e^{μ+(−m−1)α_i})` when `m ≤ −2`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::charpoly::{CharPoly, Coords};
use crate::error::{Error, Result};
use crate::rational::{q, to_i64, Q};
use crate::rootsys::{FiniteWeight, RootSystemData};
use crate::steinberg::{check_dominant_integral, steinberg_certificate, SteinbergCertificate};

/// Affine simple roots and coroots of an untwisted label, in integer form.
#[derive(Debug, Clone)]
pub struct DemazureKernel {
    rank: usize,
    /// `(classical part in ω-coordinates, δ-coefficient)` for nodes `0..=n`.
    roots: Vec<(Coords, i64)>,
    /// `θ∨ = Σ c_j α_j∨`.
    theta_coroot: Vec<i64>,
}

impl DemazureKernel {
    pub fn new(rs: &RootSystemData) -> Result<Self> {
        if !rs.label.is_untwisted() {
            return Err(Error::Unsupported(format!(
                "Demazure characters need an untwisted label, got {}",
                rs.label
            )));
        }
        let n = rs.rank();
        let mut roots = Vec::with_capacity(n + 1);
        let theta = rs.theta_weight().to_ints().expect("roots are integral weights");
        roots.push((theta.iter().map(|x| -x).collect(), 1));
        for row in &rs.cartan {
            roots.push((row.iter().copied().collect(), 0));
        }
        Ok(DemazureKernel {
            rank: n,
            roots,
            theta_coroot: rs.theta_coroot().to_vec(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `⟨μ, α_i∨⟩` for an affine weight of the given level.
    pub fn pairing(&self, i: usize, classical: &[i64], level: i64) -> i64 {
        if i == 0 {
            level
                - self
                    .theta_coroot
                    .iter()
                    .zip(classical)
                    .map(|(c, x)| c * x)
                    .sum::<i64>()
        } else {
            classical[i - 1]
        }
    }

    pub fn step(&self, i: usize, f: &CharPoly) -> Result<CharPoly> {
        if i > self.rank {
            return Err(Error::BadIndex {
                index: i,
                rank: self.rank,
            });
        }
        let (alpha, adeg) = &self.roots[i];
        let level = f.level();
        let mut out = CharPoly::zero(level);
        let shifted = |base: &Coords, deg: i64, j: i64| -> (Coords, i64) {
            let c = base.iter().zip(alpha.iter()).map(|(x, a)| x + j * a).collect();
            (c, deg + j * adeg)
        };
        for (key, m) in f.terms() {
            if key.classical.len() != self.rank {
                return Err(Error::RankMismatch {
                    expected: self.rank,
                    got: key.classical.len(),
                });
            }
            let p = self.pairing(i, &key.classical, level);
            if p >= 0 {
                for j in 0..=p {
                    let (c, d) = shifted(&key.classical, key.degree, -j);
                    out.add_term(c, d, m);
                }
            } else {
                for j in 1..=(-p - 1) {
                    let (c, d) = shifted(&key.classical, key.degree, j);
                    out.add_term(c, d, -m);
                }
            }
        }
        Ok(out)
    }

    /// `D_{word[0]} ∘ … ∘ D_{word[k−1]}` applied to `f`.
    pub fn apply_word(&self, word: &[usize], f: &CharPoly) -> Result<CharPoly> {
        let mut g = f.clone();
        for &i in word.iter().rev() {
            g = self.step(i, &g)?;
        }
        Ok(g)
    }
}

pub fn demazure_step(rs: &RootSystemData, i: usize, f: &CharPoly) -> Result<CharPoly> {
    DemazureKernel::new(rs)?.step(i, f)
}

/// The certificate whose data defines `D(ℓ, λ)`: it is taken for `−w0 λ`, so
/// that `D_{v_D} e^Λ` has classical highest weight `λ`.
pub fn demazure_certificate(
    rs: &RootSystemData,
    level: i64,
    lambda: &FiniteWeight,
) -> Result<SteinbergCertificate> {
    check_dominant_integral(rs, lambda)?;
    let star = -&rs.w0().act(lambda);
    steinberg_certificate(rs, level, &star)
}

/// Character of `D(ℓ, λ)` as `D_{v_D} e^Λ`.
pub fn demazure_character(rs: &RootSystemData, level: i64, lambda: &FiniteWeight) -> Result<CharPoly> {
    let kernel = DemazureKernel::new(rs)?;
    let cert = demazure_certificate(rs, level, lambda)?;
    let top = &cert.dominant;
    let classical = top
        .classical
        .to_ints()
        .ok_or_else(|| Error::Domain("extremal weight is not integral".into()))?;
    let degree = to_i64(&top.degree)
        .ok_or_else(|| Error::Domain("extremal weight has a fractional δ-degree".into()))?;
    let start = CharPoly::monomial(level, &classical, degree);
    kernel.apply_word(&cert.v_d_word, &start)
}

/// `dim V(λ) = Π_{α>0} ⟨λ+ρ, α∨⟩ / ⟨ρ, α∨⟩`.
pub fn weyl_dimension(rs: &RootSystemData, lambda: &FiniteWeight) -> Result<BigUint> {
    check_dominant_integral(rs, lambda)?;
    let lam = lambda.to_ints().expect("checked integral");
    let rho = vec![1i64; rs.rank()];
    let mut acc = Q::one();
    for k in 0..rs.num_positive_roots() {
        let r = rs.pair_positive_coroot_int(&rho, k);
        let l = rs.pair_positive_coroot_int(&lam, k);
        acc *= q(l + r) / q(r);
    }
    debug_assert!(acc.is_integer());
    Ok(acc.to_integer().to_biguint().unwrap_or_else(BigUint::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demchar::charpoly::{ClassicalChar, Grading};

    fn rs(s: &str) -> RootSystemData {
        RootSystemData::from_label_str(s).unwrap()
    }

    fn cc(xs: &[(&[i64], i64)]) -> ClassicalChar {
        ClassicalChar::from_terms(xs.iter().map(|(w, m)| (w.to_vec(), *m)))
    }

    #[test]
    fn string_formula_a1() {
        let r = rs("A1^1");
        let f = CharPoly::monomial(0, &[2], 0);
        let g = demazure_step(&r, 1, &f).unwrap();
        assert_eq!(g.classical(), cc(&[(&[2], 1), (&[0], 1), (&[-2], 1)]));

        let f = CharPoly::monomial(0, &[-1], 0);
        assert!(demazure_step(&r, 1, &f).unwrap().is_empty());

        let f = CharPoly::monomial(0, &[-2], 0);
        let g = demazure_step(&r, 1, &f).unwrap();
        assert_eq!(g.classical(), cc(&[(&[0], -1)]));
    }

    #[test]
    fn node_zero_moves_degree() {
        let r = rs("A1^1");
        // ⟨Λ0, α0∨⟩ = 1: Λ0 ↦ Λ0 + (Λ0 − α0) = Λ0 + (2ω1 − δ)
        let g = demazure_step(&r, 0, &CharPoly::monomial(1, &[0], 0)).unwrap();
        assert_eq!(g.mult(&[0], 0), 1);
        assert_eq!(g.mult(&[2], -1), 1);
        assert_eq!(g.len(), 2);
    }

    #[test]
    fn twisted_is_unsupported() {
        let r = rs("A2^2");
        assert!(matches!(
            demazure_step(&r, 1, &CharPoly::monomial(1, &[0], 0)),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            demazure_character(&r, 1, &FiniteWeight::from_ints(&[1])),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn a1_small_characters() {
        let r = rs("A1^1");
        let f = demazure_character(&r, 1, &FiniteWeight::from_ints(&[2])).unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(f.dimension(), 4);
        assert_eq!(f.classical(), cc(&[(&[2], 1), (&[0], 2), (&[-2], 1)]));
        // extremal e^{Λ0} one δ above the classical highest weight layer
        let top = f.max_degree().unwrap();
        assert_eq!(f.mult(&[0], top), 1);
        for w in [2, 0, -2] {
            assert_eq!(f.mult(&[w], top - 1), 1);
        }
        let g = f.graded(Grading::Current);
        assert_eq!(g.layers[&0], cc(&[(&[2], 1), (&[0], 1), (&[-2], 1)]));
        assert_eq!(g.layers[&1], cc(&[(&[0], 1)]));
        let g = f.graded(Grading::FromExtremal);
        assert_eq!(g.layers[&0], cc(&[(&[0], 1)]));

        let f = demazure_character(&r, 1, &FiniteWeight::from_ints(&[1])).unwrap();
        assert_eq!(f.classical(), cc(&[(&[1], 1), (&[-1], 1)]));
        let f = demazure_character(&r, 2, &FiniteWeight::from_ints(&[1])).unwrap();
        assert_eq!(f.classical(), cc(&[(&[1], 1), (&[-1], 1)]));
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dimension(&rs("A1^1"), &FiniteWeight::from_ints(&[5])).unwrap(), 6u32.into());
        assert_eq!(weyl_dimension(&rs("A2^1"), &FiniteWeight::from_ints(&[1, 1])).unwrap(), 8u32.into());
        assert_eq!(
            weyl_dimension(&rs("E6^1"), &FiniteWeight::fundamental(6, 1, 1)).unwrap(),
            27u32.into()
        );
        assert_eq!(weyl_dimension(&rs("G2^1"), &FiniteWeight::from_ints(&[1, 0])).unwrap(), 7u32.into());
        assert_eq!(weyl_dimension(&rs("E8^1"), &FiniteWeight::fundamental(8, 8, 1)).unwrap(), 248u32.into());
        assert!(weyl_dimension(&rs("A2^1"), &FiniteWeight::from_ints(&[1, -1])).is_err());
    }
}
