use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{dot, rank, ExactMatrix};
use crate::{Error, Rational, Result};

/// LLL quality parameter, an exact rational in `(1/4, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Delta(Rational);

impl Delta {
    pub fn new(value: Rational) -> Result<Self> {
        let quarter = Rational::new(1.into(), 4.into());
        if value <= quarter || value > Rational::one() {
            return Err(Error::Parse(format!("delta {value} is outside (1/4, 1]")));
        }
        Ok(Self(value))
    }

    pub fn ratio(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::Parse("delta has zero denominator".into()));
        }
        Self::new(Rational::new(p.into(), q.into()))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl FromStr for Delta {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(crate::scalar::parse_scalar(s)?)
    }
}

impl TryFrom<String> for Delta {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Delta> for String {
    fn from(d: Delta) -> Self {
        d.to_string()
    }
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Integral LLL reduction of the rows of `b`.
///
/// Gram–Schmidt data is kept as the integers `d_i` (Gram determinants) and
/// `λ_{i,j} = d_{j} μ_{i,j}`, so no fractions appear.
pub fn lll_reduce(b: &ExactMatrix, delta: &Delta) -> Result<ExactMatrix> {
    let n = b.rows();
    if n == 0 {
        return Ok(b.clone());
    }
    let p = delta.0.numer().clone();
    let q = delta.0.denom().clone();
    let mut rows = b.row_vecs();
    // d[0] = 1, d[i + 1] = Gram determinant of the first i + 1 rows
    let mut d = vec![BigInt::zero(); n + 1];
    d[0] = BigInt::one();
    let mut lam = vec![vec![BigInt::zero(); n]; n];

    let dependent = |rows: &[Vec<BigInt>]| Error::Rank {
        rank: rank(&ExactMatrix::from_rows(b.cols(), rows.to_vec()).expect("same shape")),
        rows: n,
    };

    d[1] = dot(&rows[0], &rows[0]);
    if d[1].is_zero() {
        return Err(dependent(&rows));
    }
    let mut k = 1;
    let mut kmax = 0;
    while k < n {
        if k > kmax {
            kmax = k;
            for j in 0..=k {
                let mut u = dot(&rows[k], &rows[j]);
                for i in 0..j {
                    u = (&d[i + 1] * u - &lam[k][i] * &lam[j][i]) / &d[i];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    if u.is_zero() {
                        return Err(dependent(&rows));
                    }
                    d[k + 1] = u;
                }
            }
        }
        size_reduce(&mut rows, &mut lam, &d, k, k - 1);
        let lhs = &q * &d[k + 1] * &d[k - 1];
        let rhs = &p * &d[k] * &d[k] - &q * &lam[k][k - 1] * &lam[k][k - 1];
        if lhs < rhs {
            swap(&mut rows, &mut lam, &mut d, k, kmax);
            k = k.saturating_sub(1).max(1);
        } else {
            for l in (0..k.saturating_sub(1)).rev() {
                size_reduce(&mut rows, &mut lam, &d, k, l);
            }
            k += 1;
        }
    }
    ExactMatrix::from_rows(b.cols(), rows)
}

fn size_reduce(rows: &mut [Vec<BigInt>], lam: &mut [Vec<BigInt>], d: &[BigInt], k: usize, l: usize) {
    let dl = &d[l + 1];
    if (&lam[k][l] * 2i32).abs() <= *dl {
        return;
    }
    // nearest integer to λ/d
    let r = (&lam[k][l] * 2i32 + dl).div_floor(&(dl * 2i32));
    let (head, tail) = rows.split_at_mut(k);
    for (x, y) in tail[0].iter_mut().zip(&head[l]) {
        if !y.is_zero() {
            *x -= &r * y;
        }
    }
    lam[k][l] -= &r * dl;
    for i in 0..l {
        let t = &r * &lam[l][i];
        lam[k][i] -= t;
    }
}

fn swap(rows: &mut [Vec<BigInt>], lam: &mut [Vec<BigInt>], d: &mut [BigInt], k: usize, kmax: usize) {
    rows.swap(k, k - 1);
    for j in 0..k - 1 {
        let t = std::mem::take(&mut lam[k][j]);
        lam[k][j] = std::mem::replace(&mut lam[k - 1][j], t);
    }
    let l = lam[k][k - 1].clone();
    let bb = (&d[k - 1] * &d[k + 1] + &l * &l) / &d[k];
    for i in k + 1..=kmax {
        let t = lam[i][k].clone();
        lam[i][k] = (&d[k + 1] * &lam[i][k - 1] - &l * &t) / &d[k];
        lam[i][k - 1] = (&bb * &t + &l * &lam[i][k]) / &d[k + 1];
    }
    d[k] = bb;
}

/// Exact rational check of size reduction (`|μ_{i,j}| ≤ 1/2`) and the
/// Lovász condition at `delta`.
pub fn is_lll_reduced(b: &ExactMatrix, delta: &Delta) -> bool {
    let n = b.rows();
    let to_q = |x: &BigInt| BigRational::from_integer(x.clone());
    let mut star: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    let mut norms: Vec<BigRational> = Vec::with_capacity(n);
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    let half = BigRational::new(1.into(), 2.into());
    for i in 0..n {
        let bi: Vec<BigRational> = b.row(i).iter().map(to_q).collect();
        let mut v = bi.clone();
        for j in 0..i {
            if norms[j].is_zero() {
                return false;
            }
            let m = bi.iter().zip(&star[j]).map(|(x, y)| x * y).sum::<BigRational>() / &norms[j];
            if m.abs() > half {
                return false;
            }
            for (x, y) in v.iter_mut().zip(&star[j]) {
                *x -= &m * y;
            }
            mu[i][j] = m;
        }
        let nv: BigRational = v.iter().map(|x| x * x).sum();
        if nv.is_zero() {
            return false;
        }
        if i > 0 {
            let lhs = &nv + &mu[i][i - 1] * &mu[i][i - 1] * &norms[i - 1];
            if lhs < delta.value() * &norms[i - 1] {
                return false;
            }
        }
        star.push(v);
        norms.push(nv);
    }
    true
}
