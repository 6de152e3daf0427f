use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{rank, ExactMatrix};
use crate::{Error, Result};

/// Row Hermite normal form `H` of `A` with a unimodular `U` such that
/// `U·A = H`.
///
/// Pivots are positive, entries above a pivot lie in `[0, pivot)`, and zero
/// rows come last.
pub fn hermite_with_transform(a: &ExactMatrix) -> (ExactMatrix, ExactMatrix) {
    let n = a.rows();
    let mut h = a.clone();
    let mut u = ExactMatrix::identity(n);
    let mut r = 0;
    for col in 0..a.cols() {
        if r == n {
            break;
        }
        loop {
            let pivot = (r..n)
                .filter(|&i| !h.get(i, col).is_zero())
                .min_by(|&i, &j| h.get(i, col).abs().cmp(&h.get(j, col).abs()));
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..n {
                if h.get(i, col).is_zero() {
                    continue;
                }
                let q = h.get(i, col) / h.get(r, col);
                h.sub_row_multiple(i, r, &q);
                u.sub_row_multiple(i, r, &q);
                if !h.get(i, col).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, col).is_zero() {
            continue;
        }
        if h.get(r, col).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h.get(i, col).div_floor(h.get(r, col));
            h.sub_row_multiple(i, r, &q);
            u.sub_row_multiple(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Checks the row Hermite shape conditions used by [`hermite_with_transform`].
pub fn is_row_hermite(h: &ExactMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero = false;
    for i in 0..h.rows() {
        let Some(p) = h.row(i).iter().position(|x| !x.is_zero()) else {
            seen_zero = true;
            continue;
        };
        if seen_zero || last_pivot.is_some_and(|lp| p <= lp) || !h.get(i, p).is_positive() {
            return false;
        }
        for k in 0..i {
            let x = h.get(k, p);
            if x.is_negative() || x >= h.get(i, p) {
                return false;
            }
        }
        last_pivot = Some(p);
    }
    true
}

/// Integer basis of the left nullspace `{v : v·A = 0}`: the rows of `U`
/// aligned with the zero rows of `H`.
pub fn nullspace_rows(a: &ExactMatrix) -> ExactMatrix {
    let (h, u) = hermite_with_transform(a);
    let zero_rows: Vec<usize> = (0..h.rows()).filter(|&i| h.is_zero_row(i)).collect();
    u.select_rows(zero_rows)
}

/// Whether two integer row sets generate the same lattice.
pub fn same_lattice(a: &ExactMatrix, b: &ExactMatrix) -> bool {
    if a.cols() != b.cols() {
        return false;
    }
    let nonzero = |m: &ExactMatrix| {
        let (h, _) = hermite_with_transform(m);
        let keep: Vec<usize> = (0..h.rows()).filter(|&i| !h.is_zero_row(i)).collect();
        h.select_rows(keep)
    };
    nonzero(a) == nonzero(b)
}

/// Determinant by fraction-free Bareiss elimination.
pub fn determinant(a: &ExactMatrix) -> Result<BigInt> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::Arity { expected: n, got: a.cols() });
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    if rank(a) < n {
        return Ok(BigInt::zero());
    }
    let mut m = a.clone();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m.get(k, k).is_zero() {
            let p = (k + 1..n).find(|&i| !m.get(i, k).is_zero()).expect("full rank");
            m.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                m.set(i, j, v);
            }
        }
        prev = m.get(k, k).clone();
    }
    Ok(m.get(n - 1, n - 1) * BigInt::from(sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn identity_is_fixed() {
        let (h, u) = hermite_with_transform(&ExactMatrix::identity(3));
        assert_eq!(h, ExactMatrix::identity(3));
        assert_eq!(u, ExactMatrix::identity(3));
    }

    #[test]
    fn column_two_four() {
        let a = m(&[&[2], &[4]]);
        let (h, u) = hermite_with_transform(&a);
        assert_eq!(h, m(&[&[2], &[0]]));
        assert_eq!(u, m(&[&[1, 0], &[-2, 1]]));
        assert_eq!(u.mul(&a).unwrap(), h);
        assert_eq!(determinant(&u).unwrap().abs(), BigInt::from(1));
    }

    #[test]
    fn above_pivot_reduction() {
        let a = m(&[&[1, 5], &[0, 3]]);
        let (h, u) = hermite_with_transform(&a);
        assert_eq!(h, m(&[&[1, 2], &[0, 3]]));
        assert_eq!(u.mul(&a).unwrap(), h);
        assert!(is_row_hermite(&h));
        assert!(!is_row_hermite(&a));
    }

    #[test]
    fn nullspace_edge_cases() {
        assert_eq!(nullspace_rows(&ExactMatrix::identity(3)).rows(), 0);
        let z = nullspace_rows(&ExactMatrix::zeros(3, 2));
        assert_eq!(z.rows(), 3);
        assert_eq!(determinant(&z).unwrap().abs(), BigInt::from(1));
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&m(&[&[2, 1], &[1, 1]])).unwrap(), BigInt::from(1));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])).unwrap(), BigInt::from(0));
        assert_eq!(
            determinant(&m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]])).unwrap(),
            BigInt::from(2 * (3 - 2) + (1 - 3))
        );
    }

    fn matrix_strategy() -> impl Strategy<Value = ExactMatrix> {
        (1usize..=20, 1usize..=20).prop_flat_map(|(r, c)| {
            proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -5i64..=5], r * c)
                .prop_map(move |v| ExactMatrix::new(r, c, v.into_iter().map(BigInt::from).collect()).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn hermite_contract(a in matrix_strategy()) {
            let (h, u) = hermite_with_transform(&a);
            prop_assert_eq!(u.mul(&a).unwrap(), h.clone());
            prop_assert!(is_row_hermite(&h));
            prop_assert_eq!(determinant(&u).unwrap().abs(), BigInt::from(1));
        }

        #[test]
        fn nullspace_contract(a in matrix_strategy()) {
            let n = nullspace_rows(&a);
            prop_assert!(n.mul(&a).unwrap().is_zero());
            prop_assert_eq!(n.rows(), a.rows() - rank(&a));
            prop_assert_eq!(rank(&n), n.rows());
        }
    }
}
