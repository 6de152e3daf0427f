//! Permutations of `{1..n}` in one-line notation and the full symmetric group.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub const MAX_GROUP_DEGREE: usize = 8;

/// A bijection of `{1..n}` stored as its image list: `images[i - 1] = σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n as u8).collect() }
    }

    /// The transposition swapping `i` and `j` in `S_n`.
    pub fn transposition(n: usize, i: u8, j: u8) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i as usize - 1, j as usize - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `σ(i)` for `i` in `1..=n`.
    #[inline]
    pub fn apply(&self, i: u8) -> u8 {
        self.images[i as usize - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::Arity { expected: self.degree(), got: other.degree() });
        }
        Ok(Self { images: other.images.iter().map(|&i| self.apply(i)).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = (i + 1) as u8;
        }
        Self { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// +1 for even permutations, -1 for odd.
    pub fn sign(&self) -> i32 {
        let n = self.degree();
        let mut visited = vec![false; n];
        let mut sign = 1;
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.images[i] as usize - 1;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<u8>) -> Result<Self> {
        Self::new(images)
    }
}

impl From<Permutation> for Vec<u8> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// All of `S_n` in lexicographic order of one-line notation.
pub fn enumerate_group(n: usize) -> Result<Vec<Permutation>> {
    if !(1..=MAX_GROUP_DEGREE).contains(&n) {
        return Err(Error::SizeLimit { what: "group degree", value: n, min: 1, max: MAX_GROUP_DEGREE });
    }
    let mut out = Vec::new();
    let mut current: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(Permutation { images: current.clone() });
        if !next_permutation(&mut current) {
            break;
        }
    }
    Ok(out)
}

/// Advance to the lexicographically next arrangement; false after the last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn perm(v: &[u8]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn group_sizes() {
        assert_eq!(enumerate_group(1).unwrap(), vec![Permutation::identity(1)]);
        assert_eq!(enumerate_group(3).unwrap().len(), 6);
        assert_eq!(enumerate_group(5).unwrap().len(), 120);
        let mut fact = 1;
        for n in 1..=6 {
            fact *= n;
            let g = enumerate_group(n).unwrap();
            assert_eq!(g.len(), fact);
            let set: HashSet<_> = g.iter().cloned().collect();
            assert_eq!(set.len(), fact);
            assert!(g.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn size_limit() {
        assert!(matches!(enumerate_group(0), Err(Error::SizeLimit { .. })));
        assert!(matches!(enumerate_group(9), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn composition_examples() {
        let id = Permutation::identity(3);
        let p = perm(&[2, 3, 1]);
        assert_eq!(id.compose(&p).unwrap(), p);
        let t = perm(&[2, 1, 3]);
        assert!(t.compose(&t).unwrap().is_identity());

        // (1 2 3) ∘ (1 2), evaluated pointwise: 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 3 -> 1.
        let c = perm(&[2, 3, 1]);
        let expected: Vec<u8> = [1u8, 2, 3].iter().map(|&i| c.apply(t.apply(i))).collect();
        assert_eq!(expected, vec![3, 2, 1]);
        assert_eq!(c.compose(&t).unwrap(), perm(&expected));
        // which is the transposition (1 3)
        assert_eq!(c.compose(&t).unwrap(), Permutation::transposition(3, 1, 3));
    }

    #[test]
    fn mismatched_degree() {
        let e = Permutation::identity(3).compose(&Permutation::identity(4));
        assert!(matches!(e, Err(Error::Arity { expected: 3, got: 4 })));
    }

    #[test]
    fn group_laws_on_s4() {
        let g = enumerate_group(4).unwrap();
        let id = Permutation::identity(4);
        for p in &g {
            assert_eq!(p.compose(&p.inverse()).unwrap(), id);
            assert_eq!(p.inverse().compose(p).unwrap(), id);
            assert_eq!(id.compose(p).unwrap(), *p);
            for q in &g {
                let pq = p.compose(q).unwrap();
                assert_eq!(pq.sign(), p.sign() * q.sign());
                for r in g.iter().step_by(5) {
                    assert_eq!(pq.compose(r).unwrap(), p.compose(&q.compose(r).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn json_is_one_line_notation() {
        let p = perm(&[3, 1, 2]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[3,1,2]");
        let back: Permutation = serde_json::from_str("[3,1,2]").unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Permutation>("[1,1,2]").is_err());
    }
}
