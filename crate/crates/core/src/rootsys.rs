//! Finite root systems attached to affine Cartan labels.
//!
//! Conventions used throughout the crate:
//!
//! * simple roots and fundamental weights follow Bourbaki numbering, indices
//!   `1..=n` at the API and `0..n` internally;
//! * the Cartan matrix is `a[i][j] = <alpha_i, alpha_j^vee>`, so row `i` holds
//!   the fundamental-weight coordinates of `alpha_i`;
//! * weights are stored in the fundamental-weight basis, roots in the
//!   simple-root basis;
//! * the invariant form is scaled so that `<theta, theta> = 2`, where `theta`
//!   is the classical part of `delta - a0 * alpha_0` (the highest root for
//!   untwisted types and `A_{2n}^(2)`, the highest short root for the other
//!   twisted types).

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{fmt_coords, frac, parse_coords, q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn from_char(c: char) -> Option<Series> {
        Some(match c {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }

    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// Finite Dynkin type `X_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteType {
    pub series: Series,
    pub rank: usize,
}

impl FiniteType {
    pub fn is_simply_laced(&self) -> bool {
        matches!(self.series, Series::A | Series::D | Series::E)
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

/// Affine Cartan label `X_N^(r)`, written `XN^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineLabel {
    series: Series,
    rank: usize,
    twist: u8,
}

impl AffineLabel {
    /// Only labels from the untwisted and twisted affine tables are accepted.
    pub fn new(series: Series, rank: usize, twist: u8) -> Result<Self> {
        use Series::*;
        let ok = match (twist, series) {
            (1, A) => rank >= 1,
            (1, B) => rank >= 3,
            (1, C) => rank >= 2,
            (1, D) => rank >= 4,
            (1, E) => (6..=8).contains(&rank),
            (1, F) => rank == 4,
            (1, G) => rank == 2,
            (2, A) => rank >= 2 && (rank.is_multiple_of(2) || rank >= 5),
            (2, D) => rank >= 3,
            (2, E) => rank == 6,
            (3, D) => rank == 4,
            _ => false,
        };
        let label = AffineLabel { series, rank, twist };
        if ok {
            Ok(label)
        } else {
            Err(Error::InvalidLabel(label.to_string()))
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn twist(&self) -> u8 {
        self.twist
    }

    pub fn is_untwisted(&self) -> bool {
        self.twist == 1
    }

    /// `A_{2n}^(2)`, the only family with `a0 = 2`.
    pub fn is_a_even_twisted(&self) -> bool {
        self.twist == 2 && self.series == Series::A && self.rank.is_multiple_of(2)
    }

    /// Finite type of the diagram with node 0 removed.
    pub fn finite_type(&self) -> FiniteType {
        use Series::*;
        let (series, rank) = match (self.twist, self.series) {
            (1, s) => (s, self.rank),
            (2, A) if self.rank == 2 => (A, 1),
            (2, A) if self.rank.is_multiple_of(2) => (C, self.rank / 2),
            (2, A) => (C, self.rank.div_ceil(2)),
            (2, D) => (B, self.rank - 1),
            (2, E) => (F, 4),
            (3, D) => (G, 2),
            _ => unreachable!("label validated on construction"),
        };
        FiniteType { series, rank }
    }

    pub fn a0(&self) -> i64 {
        if self.is_a_even_twisted() {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for AffineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}^{}", self.series.letter(), self.rank, self.twist)
    }
}

impl FromStr for AffineLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |token: &str| Error::LabelParse {
            input: s.to_string(),
            token: token.to_string(),
        };
        let mut chars = s.chars();
        let first = chars.next().ok_or_else(|| bad(""))?;
        let series = Series::from_char(first).ok_or_else(|| bad(&first.to_string()))?;
        let rest = chars.as_str();
        let (rank_s, twist_s) = rest.split_once('^').ok_or_else(|| bad(rest))?;
        if rank_s.is_empty() || !rank_s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(rank_s));
        }
        if twist_s.len() != 1 || !twist_s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(twist_s));
        }
        let rank: usize = rank_s.parse().map_err(|_| bad(rank_s))?;
        let twist: u8 = twist_s.parse().map_err(|_| bad(twist_s))?;
        AffineLabel::new(series, rank, twist)
    }
}

impl Serialize for AffineLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for AffineLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A real weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteWeight {
    pub coords: Vec<Q>,
}

impl FiniteWeight {
    pub fn new(coords: Vec<Q>) -> Self {
        FiniteWeight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        FiniteWeight {
            coords: vec![Q::zero(); rank],
        }
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        FiniteWeight {
            coords: xs.iter().map(|&x| q(x)).collect(),
        }
    }

    /// `k * omega_i` with `i` one-based.
    pub fn fundamental(rank: usize, i: usize, k: i64) -> Self {
        let mut w = Self::zero(rank);
        w.coords[i - 1] = q(k);
        w
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(FiniteWeight {
            coords: parse_coords(s)?,
        })
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(crate::rational::to_i64).collect()
    }

    pub fn scale(&self, k: &Q) -> Self {
        FiniteWeight {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }
}

impl fmt::Display for FiniteWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_coords(&self.coords))
    }
}

impl<'a> Add<&'a FiniteWeight> for &'a FiniteWeight {
    type Output = FiniteWeight;
    fn add(self, o: &FiniteWeight) -> FiniteWeight {
        debug_assert_eq!(self.rank(), o.rank());
        FiniteWeight {
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a FiniteWeight> for &'a FiniteWeight {
    type Output = FiniteWeight;
    fn sub(self, o: &FiniteWeight) -> FiniteWeight {
        debug_assert_eq!(self.rank(), o.rank());
        FiniteWeight {
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &FiniteWeight {
    type Output = FiniteWeight;
    fn neg(self) -> FiniteWeight {
        FiniteWeight {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl<'a> Mul<&'a Q> for &'a FiniteWeight {
    type Output = FiniteWeight;
    fn mul(self, k: &Q) -> FiniteWeight {
        self.scale(k)
    }
}

/// Element of the finite Weyl group.
///
/// `matrix` acts on fundamental-weight coordinates (column vectors). The
/// representation on weights is faithful, so equality compares matrices,
/// which is the same as comparing images of `rho`.
#[derive(Debug, Clone)]
pub struct FiniteWeylElement {
    word: Vec<usize>,
    matrix: Vec<Vec<i64>>,
}

impl PartialEq for FiniteWeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for FiniteWeylElement {}

impl FiniteWeylElement {
    pub fn identity(rank: usize) -> Self {
        FiniteWeylElement {
            word: Vec::new(),
            matrix: identity_matrix(rank),
        }
    }

    /// The word is kept as given, even if it is not reduced.
    pub fn from_word(rs: &RootSystemData, word: &[usize]) -> Result<Self> {
        let n = rs.rank();
        let mut m = identity_matrix(n);
        for &i in word {
            rs.check_index(i)?;
            m = mat_mul(&m, &rs.reflection_matrices[i - 1]);
        }
        Ok(FiniteWeylElement {
            word: word.to_vec(),
            matrix: m,
        })
    }

    /// Builds the element with a canonical reduced word read off from `M rho`.
    pub fn from_matrix(rs: &RootSystemData, matrix: Vec<Vec<i64>>) -> Self {
        let rho_image = mat_vec_i(&matrix, &vec![1; rs.rank()]);
        let (word, folded) = rs.fold_int(&rho_image);
        debug_assert!(folded.iter().all(|&c| c == 1));
        FiniteWeylElement { word, matrix }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity_matrix(self.matrix.len())
    }

    pub fn act(&self, x: &FiniteWeight) -> FiniteWeight {
        FiniteWeight {
            coords: mat_vec_q(&self.matrix, &x.coords),
        }
    }

    pub fn act_int(&self, x: &[i64]) -> Vec<i64> {
        mat_vec_i(&self.matrix, x)
    }

    pub fn compose(&self, rs: &RootSystemData, other: &Self) -> Self {
        Self::from_matrix(rs, mat_mul(&self.matrix, &other.matrix))
    }

    pub fn inverse(&self, rs: &RootSystemData) -> Self {
        let mut word = self.word.clone();
        word.reverse();
        Self::from_word(rs, &word).expect("indices already validated")
    }

    /// Same element with the canonical reduced word.
    pub fn reduced(&self, rs: &RootSystemData) -> Self {
        Self::from_matrix(rs, self.matrix.clone())
    }
}

pub(crate) fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub(crate) fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub(crate) fn mat_vec_i(m: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

pub(crate) fn mat_vec_q(m: &[Vec<i64>], x: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| {
            let mut acc = Q::zero();
            for (a, b) in row.iter().zip(x) {
                if *a != 0 {
                    acc += b * q(*a);
                }
            }
            acc
        })
        .collect()
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
fn invert(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is nonsingular");
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let v = &a[col][c] * &f;
                    a[r][c] -= v;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Gram matrix of the simple roots with long roots of square length 2.
fn simple_gram(ft: FiniteType) -> Vec<Vec<Q>> {
    let n = ft.rank;
    let mut norms = vec![q(2); n];
    let mut edges: Vec<(usize, usize, Q)> = Vec::new();
    let chain = |edges: &mut Vec<(usize, usize, Q)>, upto: usize| {
        for i in 0..upto {
            edges.push((i, i + 1, q(-1)));
        }
    };
    match ft.series {
        Series::A => chain(&mut edges, n.saturating_sub(1)),
        Series::B => {
            chain(&mut edges, n - 1);
            norms[n - 1] = q(1);
        }
        Series::C => {
            for norm in norms.iter_mut().take(n - 1) {
                *norm = q(1);
            }
            for i in 0..n - 2 {
                edges.push((i, i + 1, frac(-1, 2)));
            }
            edges.push((n - 2, n - 1, q(-1)));
        }
        Series::D => {
            chain(&mut edges, n - 2);
            edges.push((n - 3, n - 1, q(-1)));
        }
        Series::E => {
            // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
            edges.push((0, 2, q(-1)));
            edges.push((1, 3, q(-1)));
            for i in 2..n - 1 {
                edges.push((i, i + 1, q(-1)));
            }
        }
        Series::F => {
            norms[2] = q(1);
            norms[3] = q(1);
            edges.push((0, 1, q(-1)));
            edges.push((1, 2, q(-1)));
            edges.push((2, 3, frac(-1, 2)));
        }
        Series::G => {
            norms[0] = frac(2, 3);
            edges.push((0, 1, q(-1)));
        }
    }
    let mut g = vec![vec![Q::zero(); n]; n];
    for (i, norm) in norms.into_iter().enumerate() {
        g[i][i] = norm;
    }
    for (i, j, v) in edges {
        g[i][j] = v.clone();
        g[j][i] = v;
    }
    g
}

/// Immutable finite root system data for the finite part of an affine label.
#[derive(Debug, Clone)]
pub struct RootSystemData {
    pub label: AffineLabel,
    pub finite_type: FiniteType,
    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`.
    pub cartan: Vec<Vec<i64>>,
    /// `<alpha_i, alpha_i>` under the normalized form.
    pub root_norms: Vec<Q>,
    /// `d_i = 2 / <alpha_i, alpha_i>`; satisfies `d_i a_ij = d_j a_ji`.
    pub symmetrizers: Vec<Q>,
    /// Positive roots in simple-root coordinates, ordered by height.
    pub positive_roots: Vec<Vec<i64>>,
    /// `coroots[k][i]`: coefficient of `alpha_i^vee` in the coroot of
    /// `positive_roots[k]`, so `x(alpha^vee) = sum_i coroots[k][i] * x_i`.
    pub coroots: Vec<Vec<i64>>,
    pub long: Vec<bool>,
    /// Index of `theta` in `positive_roots`.
    pub theta_index: usize,
    pub theta: Vec<i64>,
    pub a0: i64,
    pub w0_word: Vec<usize>,
    /// `<omega_i, omega_j>`.
    weight_gram: Vec<Vec<Q>>,
    /// Converts fundamental-weight coordinates to simple-root coordinates.
    weight_to_root: Vec<Vec<Q>>,
    reflection_matrices: Vec<Vec<Vec<i64>>>,
    root_set: HashSet<Vec<i64>>,
    pub(crate) translations: OnceLock<crate::afweyl::TranslationLattice>,
}

impl RootSystemData {
    pub fn new(label: AffineLabel) -> Self {
        let ft = label.finite_type();
        let n = ft.rank;
        let mut gram = simple_gram(ft);

        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = q(2) * &gram[i][j] / &gram[j][j];
                        crate::rational::to_i64(&v).expect("integral Cartan entry")
                    })
                    .collect()
            })
            .collect();

        // All roots as the W-orbit of the simple roots.
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..n {
                let p: i64 = (0..n).map(|j| r[j] * cartan[j][i]).sum();
                if p == 0 {
                    continue;
                }
                let mut s = r.clone();
                s[i] -= p;
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        let mut positive_roots: Vec<Vec<i64>> =
            seen.iter().filter(|r| r.iter().all(|&c| c >= 0)).cloned().collect();
        positive_roots.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let norm_of = |g: &Vec<Vec<Q>>, r: &[i64]| -> Q {
            let mut acc = Q::zero();
            for i in 0..n {
                for j in 0..n {
                    if r[i] != 0 && r[j] != 0 {
                        acc += &g[i][j] * q(r[i] * r[j]);
                    }
                }
            }
            acc
        };
        let norms: Vec<Q> = positive_roots.iter().map(|r| norm_of(&gram, r)).collect();
        let max_norm = norms.iter().max().cloned().expect("nonempty root system");
        let long: Vec<bool> = norms.iter().map(|x| *x == max_norm).collect();

        let highest_among = |pred: &dyn Fn(usize) -> bool| -> usize {
            let mut best: Option<usize> = None;
            for (k, r) in positive_roots.iter().enumerate() {
                if !pred(k) {
                    continue;
                }
                let h: i64 = r.iter().sum();
                match best {
                    Some(b) if positive_roots[b].iter().sum::<i64>() >= h => {}
                    _ => best = Some(k),
                }
            }
            best.expect("root family nonempty")
        };
        let theta_is_short =
            !label.is_untwisted() && !label.is_a_even_twisted() && long.iter().any(|l| !l);
        let theta_index = if theta_is_short {
            highest_among(&|k| !long[k])
        } else {
            highest_among(&|_| true)
        };
        let theta = positive_roots[theta_index].clone();

        let scale = q(2) / &norms[theta_index];
        for row in gram.iter_mut() {
            for x in row.iter_mut() {
                *x *= &scale;
            }
        }
        let root_norms: Vec<Q> = (0..n).map(|i| gram[i][i].clone()).collect();
        let symmetrizers: Vec<Q> = root_norms.iter().map(|x| q(2) / x).collect();

        let coroots: Vec<Vec<i64>> = positive_roots
            .iter()
            .map(|r| {
                let nr = norm_of(&gram, r);
                (0..n)
                    .map(|i| {
                        let c = q(r[i]) * &root_norms[i] / &nr;
                        crate::rational::to_i64(&c).expect("integral coroot coefficient")
                    })
                    .collect()
            })
            .collect();

        let a_q: Vec<Vec<Q>> = cartan
            .iter()
            .map(|row| row.iter().map(|&x| q(x)).collect())
            .collect();
        let a_inv = invert(&a_q);
        let weight_gram: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| &a_inv[i][j] * &root_norms[j] / q(2)).collect())
            .collect();
        let a_t: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| a_q[j][i].clone()).collect()).collect();
        let weight_to_root = invert(&a_t);

        let reflection_matrices: Vec<Vec<Vec<i64>>> = (0..n)
            .map(|i| {
                let mut m = identity_matrix(n);
                for (j, row) in m.iter_mut().enumerate() {
                    row[i] -= cartan[i][j];
                }
                m
            })
            .collect();

        let mut root_set = HashSet::new();
        for r in &positive_roots {
            root_set.insert(r.clone());
            root_set.insert(r.iter().map(|x| -x).collect());
        }

        let mut rs = RootSystemData {
            label,
            finite_type: ft,
            cartan,
            root_norms,
            symmetrizers,
            positive_roots,
            coroots,
            long,
            theta_index,
            theta,
            a0: label.a0(),
            w0_word: Vec::new(),
            weight_gram,
            weight_to_root,
            reflection_matrices,
            root_set,
            translations: OnceLock::new(),
        };
        let (w0_word, _) = rs.fold_int(&vec![-1; n]);
        rs.w0_word = w0_word;
        rs
    }

    pub fn from_label_str(s: &str) -> Result<Self> {
        Ok(Self::new(s.parse()?))
    }

    pub fn rank(&self) -> usize {
        self.finite_type.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn rho(&self) -> FiniteWeight {
        FiniteWeight::from_ints(&vec![1; self.rank()])
    }

    pub fn w0(&self) -> FiniteWeylElement {
        FiniteWeylElement::from_word(self, &self.w0_word).expect("valid w0 word")
    }

    pub fn check_rank(&self, x: &FiniteWeight) -> Result<()> {
        if x.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: x.rank(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::BadIndex {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// Index into `positive_roots` of `±root`, with the sign.
    pub fn root_index(&self, root: &[i64]) -> Option<(usize, i64)> {
        if !self.root_set.contains(root) {
            return None;
        }
        let positive = root.iter().all(|&c| c >= 0);
        let key: Vec<i64> = if positive {
            root.to_vec()
        } else {
            root.iter().map(|x| -x).collect()
        };
        self.positive_roots
            .iter()
            .position(|r| *r == key)
            .map(|k| (k, if positive { 1 } else { -1 }))
    }

    pub fn is_root(&self, root: &[i64]) -> bool {
        self.root_set.contains(root)
    }

    pub fn theta_weight(&self) -> FiniteWeight {
        self.root_to_weight(&self.theta)
    }

    pub fn theta_coroot(&self) -> &[i64] {
        &self.coroots[self.theta_index]
    }

    /// Fundamental-weight coordinates of a vector given in root coordinates.
    pub fn root_to_weight(&self, root: &[i64]) -> FiniteWeight {
        let n = self.rank();
        FiniteWeight::from_ints(
            &(0..n)
                .map(|j| (0..n).map(|i| root[i] * self.cartan[i][j]).sum())
                .collect::<Vec<i64>>(),
        )
    }

    pub fn weight_to_root_coords(&self, x: &FiniteWeight) -> Vec<Q> {
        self.weight_to_root
            .iter()
            .map(|row| row.iter().zip(&x.coords).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn root_coords_to_weight(&self, r: &[Q]) -> FiniteWeight {
        let n = self.rank();
        FiniteWeight::new(
            (0..n)
                .map(|j| (0..n).map(|i| &r[i] * q(self.cartan[i][j])).sum())
                .collect(),
        )
    }

    pub fn inner_product(&self, x: &FiniteWeight, y: &FiniteWeight) -> Result<Q> {
        self.check_rank(x)?;
        self.check_rank(y)?;
        let n = self.rank();
        let mut acc = Q::zero();
        for i in 0..n {
            if x.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !y.coords[j].is_zero() && !self.weight_gram[i][j].is_zero() {
                    acc += &x.coords[i] * &self.weight_gram[i][j] * &y.coords[j];
                }
            }
        }
        Ok(acc)
    }

    /// `x(alpha^vee) = 2<x, alpha> / <alpha, alpha>` for `alpha` in root coordinates.
    pub fn coroot_pairing(&self, x: &FiniteWeight, alpha: &[i64]) -> Result<Q> {
        self.check_rank(x)?;
        if alpha.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: alpha.len(),
            });
        }
        if alpha.iter().all(|&c| c == 0) {
            return Err(Error::Domain("coroot of the zero vector".into()));
        }
        let a = self.root_to_weight(alpha);
        let num = self.inner_product(x, &a)?;
        let den = self.inner_product(&a, &a)?;
        Ok(q(2) * num / den)
    }

    /// Pairing with the coroot of `positive_roots[k]`, a coordinate dot product.
    pub fn pair_positive_coroot(&self, x: &[Q], k: usize) -> Q {
        let mut acc = Q::zero();
        for (c, xi) in self.coroots[k].iter().zip(x) {
            if *c != 0 {
                acc += xi * q(*c);
            }
        }
        acc
    }

    pub fn pair_positive_coroot_int(&self, x: &[i64], k: usize) -> i64 {
        self.coroots[k].iter().zip(x).map(|(c, xi)| c * xi).sum()
    }

    pub fn reflect(&self, i: usize, x: &FiniteWeight) -> Result<FiniteWeight> {
        self.check_index(i)?;
        self.check_rank(x)?;
        let xi = x.coords[i - 1].clone();
        let mut out = x.clone();
        if !xi.is_zero() {
            for (c, a) in out.coords.iter_mut().zip(&self.cartan[i - 1]) {
                if *a != 0 {
                    *c -= &xi * q(*a);
                }
            }
        }
        Ok(out)
    }

    /// Applies `s_{word[0]} s_{word[1]} ... s_{word[k-1]}` to `x`.
    pub fn apply_word(&self, word: &[usize], x: &FiniteWeight) -> Result<FiniteWeight> {
        self.check_rank(x)?;
        let mut y = x.clone();
        for &i in word.iter().rev() {
            y = self.reflect(i, &y)?;
        }
        Ok(y)
    }

    /// Returns `(w, x_plus)` with `x_plus` dominant and `w(x_plus) = x`.
    ///
    /// Always reflects at the smallest index with a negative coordinate.
    pub fn fold_to_dominant(&self, x: &FiniteWeight) -> Result<(FiniteWeylElement, FiniteWeight)> {
        self.check_rank(x)?;
        let mut y = x.clone();
        let mut word = Vec::new();
        while let Some(i) = y.coords.iter().position(|c| c.is_negative()) {
            y = self.reflect(i + 1, &y)?;
            word.push(i + 1);
        }
        Ok((FiniteWeylElement::from_word(self, &word)?, y))
    }

    /// Integer version of `fold_to_dominant`, returning the raw word.
    pub(crate) fn fold_int(&self, x: &[i64]) -> (Vec<usize>, Vec<i64>) {
        let mut y = x.to_vec();
        let mut word = Vec::new();
        while let Some(i) = y.iter().position(|&c| c < 0) {
            let yi = y[i];
            for (c, a) in y.iter_mut().zip(&self.cartan[i]) {
                *c -= yi * a;
            }
            word.push(i + 1);
        }
        (word, y)
    }

    pub(crate) fn reflection_matrix(&self, i: usize) -> &[Vec<i64>] {
        &self.reflection_matrices[i - 1]
    }

    /// Matrix of the reflection in the root with index `k` of `positive_roots`.
    pub(crate) fn root_reflection_matrix(&self, k: usize) -> Vec<Vec<i64>> {
        let n = self.rank();
        let aw = self.root_to_weight(&self.positive_roots[k]).to_ints().expect("integral root");
        let cv = &self.coroots[k];
        let mut m = identity_matrix(n);
        for (j, row) in m.iter_mut().enumerate() {
            for (i, c) in cv.iter().enumerate() {
                row[i] -= aw[j] * c;
            }
        }
        m
    }
}

pub fn build_root_system(label: AffineLabel) -> RootSystemData {
    RootSystemData::new(label)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystemData {
        RootSystemData::from_label_str(s).unwrap()
    }

    #[test]
    fn label_round_trip_and_rejects() {
        for s in ["A1^1", "E6^2", "D4^3", "A4^2", "A5^2", "D5^2", "C2^1", "G2^1", "A2^2"] {
            assert_eq!(s.parse::<AffineLabel>().unwrap().to_string(), s);
        }
        for s in ["H9^1", "A0^1", "B2^1", "A3^2", "E9^1", "F4^2", "G2^3", "A1", "A^1", "A1^x"] {
            assert!(s.parse::<AffineLabel>().is_err(), "{s}");
        }
        match "H9^1".parse::<AffineLabel>() {
            Err(Error::LabelParse { token, .. }) => assert_eq!(token, "H"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn finite_part_table() {
        let cases = [
            ("A1^1", "A1"),
            ("E8^1", "E8"),
            ("A2^2", "A1"),
            ("A4^2", "C2"),
            ("A8^2", "C4"),
            ("A5^2", "C3"),
            ("D5^2", "B4"),
            ("D3^2", "B2"),
            ("E6^2", "F4"),
            ("D4^3", "G2"),
        ];
        for (l, f) in cases {
            assert_eq!(l.parse::<AffineLabel>().unwrap().finite_type().to_string(), f, "{l}");
        }
    }

    #[test]
    fn a1_basics() {
        let r = rs("A1^1");
        assert_eq!(r.cartan, vec![vec![2]]);
        assert_eq!(r.theta, vec![1]);
        assert_eq!(r.positive_roots.len(), 1);
        let a1 = r.root_to_weight(&[1]);
        assert_eq!(r.inner_product(&a1, &a1).unwrap(), q(2));
    }

    #[test]
    fn g2_cartan_and_counts() {
        let r = rs("G2^1");
        assert_eq!(r.cartan, vec![vec![2, -1], vec![-3, 2]]);
        assert_eq!(r.num_positive_roots(), 6);
        assert_eq!(r.theta, vec![3, 2]);
        // twisted D4^3 takes the highest short root
        assert_eq!(rs("D4^3").theta, vec![2, 1]);
    }

    #[test]
    fn positive_root_counts() {
        let cases = [
            ("A4^1", 10),
            ("B3^1", 9),
            ("C3^1", 9),
            ("D4^1", 12),
            ("E6^1", 36),
            ("E7^1", 63),
            ("E8^1", 120),
            ("F4^1", 24),
            ("E6^2", 24),
        ];
        for (l, k) in cases {
            let r = rs(l);
            assert_eq!(r.num_positive_roots(), k, "{l}");
            assert_eq!(r.w0_word.len(), k, "{l}");
            let th = r.theta_weight();
            assert_eq!(r.inner_product(&th, &th).unwrap(), q(2), "{l}");
        }
    }

    #[test]
    fn b3_short_root_norm() {
        let r = rs("B3^1");
        let a3 = r.root_to_weight(&[0, 0, 1]);
        assert_eq!(r.inner_product(&a3, &a3).unwrap(), q(1));
    }

    #[test]
    fn c2_theta_pairing() {
        let r = rs("C2^1");
        assert_eq!(r.theta, vec![2, 1]);
        let w2 = FiniteWeight::fundamental(2, 2, 1);
        assert_eq!(r.coroot_pairing(&w2, &[2, 1]).unwrap(), q(1));
        assert_eq!(r.coroot_pairing(&w2, &[-2, -1]).unwrap(), q(-1));
        assert!(r.coroot_pairing(&w2, &[0, 0]).is_err());
    }

    #[test]
    fn symmetrizer_relation() {
        for l in ["B3^1", "C4^1", "F4^1", "G2^1", "E6^2", "A4^2"] {
            let r = rs(l);
            let n = r.rank();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(
                        &r.symmetrizers[i] * q(r.cartan[i][j]),
                        &r.symmetrizers[j] * q(r.cartan[j][i]),
                        "{l}"
                    );
                }
            }
        }
    }

    #[test]
    fn words_and_reflections() {
        let r = rs("A1^1");
        let w1 = FiniteWeight::fundamental(1, 1, 1);
        assert_eq!(r.apply_word(&[1], &w1).unwrap(), FiniteWeight::fundamental(1, 1, -1));
        assert_eq!(r.apply_word(&[], &w1).unwrap(), w1);
        assert!(matches!(r.apply_word(&[0], &w1), Err(Error::BadIndex { .. })));

        let r = rs("A2^1");
        let rho = r.rho();
        assert_eq!(
            r.apply_word(&[1, 2, 1], &rho).unwrap(),
            r.apply_word(&[2, 1, 2], &rho).unwrap()
        );
        let a = FiniteWeylElement::from_word(&r, &[1, 2, 1]).unwrap();
        let b = FiniteWeylElement::from_word(&r, &[2, 1, 2]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn fold_examples() {
        let r = rs("A2^1");
        let x = FiniteWeight::from_ints(&[1, -1]);
        let (w, xp) = r.fold_to_dominant(&x).unwrap();
        assert_eq!(w.word(), &[2]);
        assert_eq!(xp, FiniteWeight::from_ints(&[0, 1]));
        assert_eq!(w.act(&xp), x);

        let dom = FiniteWeight::from_ints(&[3, 0]);
        let (w, xp) = r.fold_to_dominant(&dom).unwrap();
        assert!(w.is_identity());
        assert_eq!(xp, dom);

        for l in ["A3^1", "E6^1", "G2^1", "F4^1"] {
            let r = rs(l);
            let (w, xp) = r.fold_to_dominant(&-&r.rho()).unwrap();
            assert_eq!(xp, r.rho());
            assert_eq!(w, r.w0());
        }
    }

    #[test]
    fn from_matrix_gives_reduced_word() {
        let r = rs("A3^1");
        let w = FiniteWeylElement::from_word(&r, &[1, 2, 1, 1, 3, 2, 2]).unwrap();
        let red = w.reduced(&r);
        assert_eq!(red, w);
        assert_eq!(red.len(), 3);
    }
}
