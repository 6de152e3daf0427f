use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{dot, ExactMatrix};

/// Sum of squared entries.
pub fn vector_size(v: &[BigInt]) -> BigInt {
    dot(v, v)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisSizeReport {
    /// Per-row sums of squares, as decimal strings.
    pub vector_sizes: Vec<String>,
    /// Base-10 logarithm of the product of the nonzero vector sizes.
    pub basis_size: f64,
    /// Indices of zero rows, which are left out of the product.
    pub zero_rows: Vec<usize>,
}

impl BasisSizeReport {
    pub fn has_zero_rows(&self) -> bool {
        !self.zero_rows.is_empty()
    }

    pub fn max_vector_size(&self) -> Option<BigInt> {
        self.vector_sizes.iter().filter_map(|s| s.parse().ok()).max()
    }

    pub fn min_vector_size(&self) -> Option<BigInt> {
        self.vector_sizes.iter().filter_map(|s| s.parse().ok()).min()
    }
}

fn log10(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits < 1000 {
        x.to_f64().expect("finite").log10()
    } else {
        let shift = bits - 64;
        (x >> shift).to_f64().expect("finite").log10() + shift as f64 * std::f64::consts::LOG10_2
    }
}

pub fn size_report(b: &ExactMatrix) -> BasisSizeReport {
    let mut vector_sizes = Vec::with_capacity(b.rows());
    let mut zero_rows = Vec::new();
    let mut basis_size = 0.0;
    for i in 0..b.rows() {
        let s = vector_size(b.row(i));
        if s.is_zero() {
            zero_rows.push(i);
        } else {
            basis_size += log10(&s);
        }
        vector_sizes.push(s.to_string());
    }
    BasisSizeReport { vector_sizes, basis_size, zero_rows }
}

/// Stable sort by size, ties broken lexicographically on the entries.
pub fn sort_rows_by_size(b: &ExactMatrix) -> ExactMatrix {
    let mut keyed: Vec<(BigInt, Vec<BigInt>)> = b.row_vecs().into_iter().map(|r| (vector_size(&r), r)).collect();
    keyed.sort();
    ExactMatrix::from_rows(b.cols(), keyed.into_iter().map(|(_, r)| r).collect()).expect("same shape")
}
