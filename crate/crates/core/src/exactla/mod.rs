//! Exact integer linear algebra: dense matrices over arbitrary-precision
//! integers, rank, Hermite normal form with transform, integer nullspaces,
//! LLL reduction and basis size metrics.

mod echelon;
mod hermite;
mod lll;
mod size;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

pub use echelon::{rank, EchelonBasis};
pub use hermite::{determinant, hermite_with_transform, is_row_hermite, nullspace_rows, same_lattice};
pub use lll::{is_lll_reduced, lll_reduce, Delta};
pub use size::{size_report, sort_rows_by_size, vector_size, BasisSizeReport};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Arity { expected: rows * cols, got: entries.len() });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::from(1);
        }
        m
    }

    /// Builds from row vectors; `cols` is needed when there are no rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Arity { expected: cols, got: r.len() });
            }
            entries.extend(r);
        }
        Ok(Self { rows: n, cols, entries })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [BigInt] {
        &mut self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(Zero::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn select_rows(&self, indices: impl IntoIterator<Item = usize>) -> Self {
        let rows: Vec<Vec<BigInt>> = indices.into_iter().map(|i| self.row(i).to_vec()).collect();
        Self::from_rows(self.cols, rows).expect("rows of equal length")
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Arity { expected: self.cols, got: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[dst] -= q * row[src]`.
    pub(crate) fn sub_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let c = self.cols;
        for j in 0..c {
            if !self.entries[src * c + j].is_zero() {
                let t = q * &self.entries[src * c + j];
                self.entries[dst * c + j] -= t;
            }
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for x in self.row_mut(i) {
            *x = -std::mem::take(x);
        }
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    /// Rows of space-separated decimal integers.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses [`Self::to_text`] output; a header line `rows cols` is required.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| Error::Parse("empty matrix text".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("line 1: bad dimension {t:?}"))))
            .collect::<Result<_>>()?;
        let [rows, cols] = dims[..] else {
            return Err(Error::Parse("line 1: expected `rows cols`".into()));
        };
        let mut entries = Vec::with_capacity(rows * cols);
        let mut seen = 0;
        for (n, line) in lines {
            let before = entries.len();
            for t in line.split_whitespace() {
                let v: BigInt = t.parse().map_err(|_| Error::Parse(format!("line {}: bad integer {t:?}", n + 1)))?;
                entries.push(v);
            }
            if entries.len() - before != cols {
                return Err(Error::Parse(format!(
                    "line {}: expected {cols} entries, found {}",
                    n + 1,
                    entries.len() - before
                )));
            }
            seen += 1;
        }
        if seen != rows {
            return Err(Error::Parse(format!("expected {rows} rows, found {seen}")));
        }
        Self::new(rows, cols, entries)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", line.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let cols = rows.first().map_or(0, Vec::len);
        let parsed = rows
            .into_iter()
            .map(|r| {
                r.iter()
                    .map(|t| t.parse::<BigInt>().map_err(|_| D::Error::custom(format!("bad integer {t:?}"))))
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Self::from_rows(cols, parsed).map_err(D::Error::custom)
    }
}

/// Divides a vector by the gcd of its entries and returns that gcd.
pub(crate) fn remove_content(v: &mut [BigInt]) -> BigInt {
    use num_integer::Integer;
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g == BigInt::from(1) {
                return g;
            }
        }
    }
    if g > BigInt::from(1) {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    g
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn shape_is_checked() {
        assert!(ExactMatrix::new(2, 2, vec![BigInt::zero(); 3]).is_err());
        assert!(ExactMatrix::from_rows(2, vec![vec![BigInt::zero(); 3]]).is_err());
    }

    #[test]
    fn multiply_and_transpose() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), m(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), m(&[&[1, 3], &[2, 4]]));
        assert_eq!(ExactMatrix::identity(2).mul(&a).unwrap(), a);
        assert!(a.mul(&m(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn text_round_trip() {
        let a = m(&[&[1, -2, 0], &[123456789012345, 0, -7]]);
        let text = a.to_text();
        assert_eq!(ExactMatrix::from_text(&text).unwrap(), a);
        assert!(ExactMatrix::from_text("2 2\n1 2\n3\n").is_err());
        assert!(ExactMatrix::from_text("1 2\n1 x\n").is_err());
        let empty = ExactMatrix::zeros(0, 4);
        assert_eq!(ExactMatrix::from_text(&empty.to_text()).unwrap(), empty);
    }

    #[test]
    fn json_uses_decimal_strings() {
        let a = m(&[&[1, -2], &[0, 3]]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"[["1","-2"],["0","3"]]"#);
        let back: ExactMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn content_removal() {
        let mut v: Vec<BigInt> = [4, -6, 0, 10].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(remove_content(&mut v), BigInt::from(2));
        assert_eq!(v, [2, -3, 0, 5].map(BigInt::from).to_vec());
    }
}
