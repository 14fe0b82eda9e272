//! Exact rational linear algebra: incremental row reduction over sparse
//! blade-indexed vectors, and determinants of small dense matrices.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{Blade, Multivector, Scalar};

type SparseVec = BTreeMap<Blade, Scalar>;

/// Row echelon basis built one vector at a time.
///
/// Each stored row is keyed by its pivot, the smallest blade in its support,
/// and has pivot coefficient 1.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    rows: BTreeMap<Blade, SparseVec>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn leading_reduce(&self, mut v: SparseVec) -> SparseVec {
        while let Some((&lead, coef)) = v.iter().next() {
            let Some(row) = self.rows.get(&lead) else { break };
            let factor = coef.clone();
            for (b, c) in row {
                let entry = v.entry(*b).or_insert_with(Scalar::zero);
                *entry -= &factor * c;
                if entry.is_zero() {
                    v.remove(b);
                }
            }
        }
        v
    }

    /// Adds `x` if it is independent of the current span; returns whether it was added.
    pub fn insert(&mut self, x: &Multivector) -> bool {
        let v = self.leading_reduce(to_sparse(x));
        let Some((&pivot, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        let row: SparseVec = v.iter().map(|(b, c)| (*b, c * &inv)).collect();
        self.rows.insert(pivot, row);
        true
    }

    /// Whether `x` lies in the current span.
    ///
    /// Pivots are distinct, so a nonzero combination of rows keeps the
    /// smallest pivot involved as its leading blade; leading reduction alone
    /// decides membership.
    pub fn contains(&self, x: &Multivector) -> bool {
        self.leading_reduce(to_sparse(x)).is_empty()
    }
}

fn to_sparse(x: &Multivector) -> SparseVec {
    x.iter().map(|(b, c)| (b, c.clone())).collect()
}

/// Determinant by fraction-exact Gaussian elimination with first-nonzero pivoting.
pub fn determinant(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        let (upper, lower) = a.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &p;
            for (dst, src) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *dst -= &factor * src;
            }
        }
    }
    det
}

/// Leading principal minors `det(M[..k, ..k])` for `k = 1..=n`.
pub fn leading_minors(m: &[Vec<Scalar>]) -> Vec<Scalar> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<Scalar>> = m[..k].iter().map(|row| row[..k].to_vec()).collect();
            determinant(&sub)
        })
        .collect()
}

/// Positive definiteness by Sylvester's criterion.
pub fn is_positive_definite(m: &[Vec<Scalar>]) -> bool {
    leading_minors(m).iter().all(|d| d > &Scalar::zero())
}
