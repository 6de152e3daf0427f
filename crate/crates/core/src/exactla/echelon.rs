use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{remove_content, ExactMatrix};

/// Incrementally built fraction-free echelon basis of a subspace of `Q^n`.
///
/// Each stored row is primitive with a positive pivot and vanishes at the
/// pivots of all earlier rows.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    rows: Vec<(usize, Vec<(usize, BigInt)>)>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [BigInt]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let a = &row[0].1;
            let g = a.gcd(&v[*p]);
            let fa = a / &g;
            let fb = &v[*p] / &g;
            if fa != BigInt::from(1) {
                for x in v.iter_mut() {
                    if !x.is_zero() {
                        *x *= &fa;
                    }
                }
            }
            for (j, c) in row {
                v[*j] -= &fb * c;
            }
            remove_content(v);
        }
    }

    /// Adds `v` to the basis if it is independent; returns whether it was.
    pub fn insert(&mut self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        let mut v = v.to_vec();
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        remove_content(&mut v);
        if v[p].is_negative() {
            v.iter_mut().for_each(|x| *x = -std::mem::take(x));
        }
        let sparse = v.into_iter().enumerate().skip(p).filter(|(_, x)| !x.is_zero()).collect();
        self.rows.push((p, sparse));
        true
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(Zero::is_zero)
    }
}

/// Rank over the rationals.
pub fn rank(a: &ExactMatrix) -> usize {
    let mut e = EchelonBasis::new(a.cols());
    for i in 0..a.rows() {
        e.insert(a.row(i));
        if e.rank() == a.cols() {
            break;
        }
    }
    e.rank()
}
