//! Integer lattices in Hermite normal form.
//!
//! Rows are basis vectors. The canonical form is upper echelon with positive
//! pivots and every entry above a pivot reduced into `[0, pivot)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Q;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntLattice {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
}

impl IntLattice {
    pub fn from_generators(dim: usize, gens: &[Vec<BigInt>]) -> Self {
        IntLattice {
            dim,
            rows: hermite_normal_form(dim, gens),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Integer coefficients of `v` in the basis, if `v` lies in the lattice.
    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.dim);
        let mut rem = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rows.len());
        let mut col = 0;
        for row in &self.rows {
            let p = row.iter().position(|x| !x.is_zero()).expect("HNF rows are nonzero");
            if rem[col..p].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let (c, r) = rem[p].div_rem(&row[p]);
            if !r.is_zero() {
                return None;
            }
            for (x, y) in rem.iter_mut().zip(row) {
                *x -= &c * y;
            }
            coeffs.push(c);
            col = p + 1;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.solve(v).is_some()
    }
}

pub fn hermite_normal_form(dim: usize, gens: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = gens
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut top = 0;
    for col in 0..dim {
        if top >= rows.len() {
            break;
        }
        loop {
            // smallest nonzero entry in this column at or below `top`
            let best = (top..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(best) = best else { break };
            rows.swap(top, best);
            let mut done = true;
            for r in top + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let f = rows[r][col].div_floor(&rows[top][col]);
                let pivot_row = rows[top].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
                if !rows[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if top < rows.len() && !rows[top][col].is_zero() {
            if rows[top][col].is_negative() {
                for x in rows[top].iter_mut() {
                    *x = -x.clone();
                }
            }
            let pivot_row = rows[top].clone();
            for r in 0..top {
                let f = rows[r][col].div_floor(&pivot_row[col]);
                if !f.is_zero() {
                    for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                        *x -= &f * y;
                    }
                }
            }
            top += 1;
        }
    }
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    rows
}

/// Smallest positive integer clearing every denominator.
pub fn common_denominator(xs: &[Vec<Q>]) -> BigInt {
    let mut d = BigInt::one();
    for row in xs {
        for x in row {
            d = d.lcm(x.denom());
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn hnf_is_canonical() {
        let a = IntLattice::from_generators(2, &bi(&[&[2, 1], &[0, 1], &[-2, -1], &[0, -1]]));
        let b = IntLattice::from_generators(2, &bi(&[&[2, 0], &[0, 1]]));
        assert_eq!(a, b);
        assert_eq!(a.basis(), bi(&[&[2, 0], &[0, 1]]).as_slice());
    }

    #[test]
    fn membership() {
        let l = IntLattice::from_generators(2, &bi(&[&[2, 1], &[0, 3]]));
        assert!(l.contains(&bi(&[&[4, 5]])[0]));
        assert!(l.contains(&bi(&[&[0, 0]])[0]));
        assert!(!l.contains(&bi(&[&[1, 0]])[0]));
        assert!(!l.contains(&bi(&[&[2, 2]])[0]));
    }

    #[test]
    fn rank_deficient() {
        let l = IntLattice::from_generators(3, &bi(&[&[1, 2, 3], &[2, 4, 6]]));
        assert_eq!(l.rank(), 1);
        assert!(l.contains(&bi(&[&[-3, -6, -9]])[0]));
        assert!(!l.contains(&bi(&[&[0, 0, 1]])[0]));
    }
}
