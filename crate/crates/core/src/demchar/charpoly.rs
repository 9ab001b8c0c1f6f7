//! Character rings: affine characters at a fixed level, their classical and
//! graded projections.

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::rational::q;
use crate::rootsys::FiniteWeight;

pub type Coords = SmallVec<[i64; 8]>;

/// An affine weight of a fixed level with integral classical part and
/// integral δ-degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffKey {
    pub degree: i64,
    pub classical: Coords,
}

/// Finitely supported integer combination of `e^{Λ}` at one level.
///
/// Zero multiplicities are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    level: i64,
    terms: BTreeMap<AffKey, i64>,
}

impl CharPoly {
    pub fn zero(level: i64) -> Self {
        CharPoly {
            level,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(level: i64, classical: &[i64], degree: i64) -> Self {
        let mut f = CharPoly::zero(level);
        f.add_term(classical.into(), degree, 1);
        f
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffKey, i64)> {
        self.terms.iter().map(|(k, &m)| (k, m))
    }

    pub fn mult(&self, classical: &[i64], degree: i64) -> i64 {
        let key = AffKey {
            degree,
            classical: classical.into(),
        };
        self.terms.get(&key).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, classical: Coords, degree: i64, mult: i64) {
        if mult == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(AffKey { degree, classical }) {
            Entry::Vacant(v) => {
                v.insert(mult);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += mult;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &CharPoly) {
        for (k, m) in other.terms() {
            self.add_term(k.classical.clone(), k.degree, m);
        }
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.degree).min()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.degree).max()
    }

    /// Sum of all multiplicities.
    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn classical(&self) -> ClassicalChar {
        let mut out = ClassicalChar::default();
        for (k, m) in self.terms() {
            out.add_term(k.classical.clone(), m);
        }
        out
    }

    /// Buckets terms by normalized degree.
    pub fn graded(&self, grading: Grading) -> GradedClassicalChar {
        let mut out = GradedClassicalChar::default();
        let anchor = match grading {
            Grading::Current => self.min_degree(),
            Grading::FromExtremal => self.max_degree(),
        };
        let Some(anchor) = anchor else { return out };
        for (k, m) in self.terms() {
            let d = match grading {
                Grading::Current => k.degree - anchor,
                Grading::FromExtremal => anchor - k.degree,
            };
            out.layers
                .entry(d as u64)
                .or_default()
                .add_term(k.classical.clone(), m);
        }
        out
    }
}

/// How δ-degrees of an affine character become nonnegative grades.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Grading {
    /// `deg − min deg`: the current-algebra grading, with the classical
    /// highest weight in degree 0.
    #[default]
    Current,
    /// `max deg − deg`: the extremal vector `e^Λ` in degree 0.
    FromExtremal,
}

/// Classical character: weight (fundamental-weight coordinates) to
/// multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassicalChar {
    terms: BTreeMap<Coords, i64>,
}

impl ClassicalChar {
    pub fn trivial(rank: usize) -> Self {
        let mut c = ClassicalChar::default();
        c.add_term(SmallVec::from_elem(0, rank), 1);
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, i64)>>(it: I) -> Self {
        let mut c = ClassicalChar::default();
        for (w, m) in it {
            c.add_term(w.into(), m);
        }
        c
    }

    pub fn add_term(&mut self, w: Coords, mult: i64) {
        if mult == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(mult);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += mult;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn mult(&self, w: &[i64]) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], i64)> {
        self.terms.iter().map(|(k, &m)| (k.as_slice(), m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &ClassicalChar) -> ClassicalChar {
        let mut out = self.clone();
        for (w, m) in other.terms() {
            out.add_term(w.into(), m);
        }
        out
    }

    /// Convolution of weight multiplicities.
    pub fn product(&self, other: &ClassicalChar) -> ClassicalChar {
        let mut out = ClassicalChar::default();
        for (a, ma) in &self.terms {
            for (b, mb) in &other.terms {
                let w: Coords = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
                out.add_term(w, ma * mb);
            }
        }
        out
    }

    /// First weight (in the map order) where the two characters disagree,
    /// with both multiplicities.
    pub fn first_difference(&self, other: &ClassicalChar) -> Option<(Vec<i64>, i64, i64)> {
        let mut keys: Vec<&Coords> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|k| {
            let (a, b) = (self.mult(k), other.mult(k));
            (a != b).then(|| (k.to_vec(), a, b))
        })
    }

    /// Weights `ν` with nonzero multiplicity such that no other such weight
    /// exceeds `ν` by a nonnegative combination of simple roots.
    pub fn maximal_weights(&self, rs: &crate::rootsys::RootSystemData) -> Vec<Vec<i64>> {
        let support: Vec<(Vec<i64>, Vec<crate::Q>)> = self
            .terms
            .keys()
            .map(|k| {
                let w = FiniteWeight::from_ints(k);
                (k.to_vec(), rs.weight_to_root_coords(&w))
            })
            .collect();
        let dominated = |lo: &[crate::Q], hi: &[crate::Q]| {
            lo != hi
                && hi
                    .iter()
                    .zip(lo)
                    .all(|(h, l)| (h - l).is_integer() && h >= l)
        };
        support
            .iter()
            .filter(|(_, r)| !support.iter().any(|(_, s)| dominated(r, s)))
            .map(|(k, _)| k.clone())
            .collect()
    }

    pub fn to_weights(&self) -> Vec<(FiniteWeight, i64)> {
        self.terms
            .iter()
            .map(|(k, &m)| (FiniteWeight::new(k.iter().map(|&x| q(x)).collect()), m))
            .collect()
    }
}

impl fmt::Display for ClassicalChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, m) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let w = k.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
            if *m == 1 {
                write!(f, "e[{w}]")?;
            } else {
                write!(f, "{m}e[{w}]")?;
            }
        }
        Ok(())
    }
}

/// Degree to classical character.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedClassicalChar {
    pub layers: BTreeMap<u64, ClassicalChar>,
}

impl GradedClassicalChar {
    pub fn add(&self, other: &GradedClassicalChar) -> GradedClassicalChar {
        let mut out = self.clone();
        for (d, c) in &other.layers {
            let layer = out.layers.entry(*d).or_default();
            *layer = layer.add(c);
            if layer.is_empty() {
                out.layers.remove(d);
            }
        }
        out
    }

    pub fn ungraded(&self) -> ClassicalChar {
        self.layers
            .values()
            .fold(ClassicalChar::default(), |acc, c| acc.add(c))
    }

    /// Dimension of each layer, lowest degree first.
    pub fn hilbert_series(&self) -> Vec<(u64, i64)> {
        self.layers.iter().map(|(d, c)| (*d, c.dimension())).collect()
    }
}

/// Adds `d` to every degree.
pub fn grade_shift(g: &GradedClassicalChar, d: u64) -> GradedClassicalChar {
    GradedClassicalChar {
        layers: g.layers.iter().map(|(k, c)| (k + d, c.clone())).collect(),
    }
}

pub fn char_product(a: &ClassicalChar, b: &ClassicalChar) -> ClassicalChar {
    a.product(b)
}

impl fmt::Display for GradedClassicalChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.layers.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in &self.layers {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "({c})")?,
                1 => write!(f, "q({c})")?,
                _ => write!(f, "q^{d}({c})")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cc(xs: &[(&[i64], i64)]) -> ClassicalChar {
        ClassicalChar::from_terms(xs.iter().map(|(w, m)| (w.to_vec(), *m)))
    }

    #[test]
    fn add_cancels() {
        let mut f = CharPoly::monomial(1, &[1, 0], 0);
        f.add_term([1, 0].as_slice().into(), 0, -1);
        assert!(f.is_empty());
        f.add_term([2, 0].as_slice().into(), 3, 2);
        f.add_term([1, 0].as_slice().into(), 3, 1);
        f.add_term([2, 0].as_slice().into(), 3, -2);
        assert_eq!(f.len(), 1);
        assert_eq!(f.mult(&[1, 0], 3), 1);
    }

    #[test]
    fn product_a1() {
        let v = cc(&[(&[1], 1), (&[-1], 1)]);
        assert_eq!(v.product(&v), cc(&[(&[2], 1), (&[0], 2), (&[-2], 1)]));
        assert_eq!(v.product(&ClassicalChar::trivial(1)), v);
    }

    #[test]
    fn shifts_compose() {
        let mut f = CharPoly::monomial(1, &[0], 2);
        f.add_term([2].as_slice().into(), 1, 1);
        let g = f.graded(Grading::Current);
        assert_eq!(grade_shift(&g, 0), g);
        assert_eq!(grade_shift(&grade_shift(&g, 2), 3), grade_shift(&g, 5));
        assert_eq!(g.layers[&0], cc(&[(&[2], 1)]));
        assert_eq!(f.graded(Grading::FromExtremal).layers[&0], cc(&[(&[0], 1)]));
    }

    #[test]
    fn empty_dimension() {
        assert_eq!(CharPoly::zero(3).dimension(), 0);
        assert!(CharPoly::zero(3).graded(Grading::Current).layers.is_empty());
    }

    #[test]
    fn first_difference_reports() {
        let a = cc(&[(&[1], 1), (&[-1], 1)]);
        let b = cc(&[(&[1], 1), (&[-1], 2)]);
        assert_eq!(a.first_difference(&b), Some((vec![-1], 1, 2)));
        assert_eq!(a.first_difference(&a), None);
    }
}
