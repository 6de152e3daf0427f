//! Multilinear free Lie algebra.
//!
//! The basis of the multilinear part of degree `n` is the set of left-normed
//! brackets `[..[[x1, x2], x3].., xn]` whose first argument is the smallest
//! generator present, so there are `(n-1)!` of them. Any bracketing is
//! rewritten into this basis in two steps:
//!
//! 1. right-nested brackets are unfolded with `[x, [y, z]] = [[x, y], z] - [[x, z], y]`,
//!    which yields left-normed words with arbitrary letter order;
//! 2. a word whose minimum sits at position `k > 1` is rewritten as
//!    `-[m, P]` followed by the tail, where `P` is the left-normed prefix
//!    before `m`; unfolding `[m, P]` with step 1 produces only words that start
//!    with `m`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lincomb::LinearCombination;
use crate::scalar::Scalar;
use crate::symgroup::{next_permutation, Permutation};
use crate::{Error, Result};

pub const MAX_LIE_DEGREE: usize = 7;

/// Left-normed Lie monomial on distinct generators with the minimum first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LieMonomial {
    args: Vec<u8>,
}

impl LieMonomial {
    /// Accepts `args` only if it already satisfies the basis invariant.
    pub fn new(args: Vec<u8>) -> Result<Self> {
        check_distinct(&args)?;
        match args.iter().min() {
            Some(m) if *m == args[0] => Ok(Self { args }),
            _ => Err(Error::Parse(format!("Lie monomial {args:?} must be nonempty with its smallest generator first"))),
        }
    }

    pub fn generator(a: u8) -> Self {
        Self { args: vec![a] }
    }

    pub fn args(&self) -> &[u8] {
        &self.args
    }

    pub fn degree(&self) -> usize {
        self.args.len()
    }

    pub fn min_generator(&self) -> u8 {
        self.args[0]
    }

    pub fn to_tree(&self) -> BracketTree {
        left_normed_tree(&self.args)
    }
}

impl fmt::Debug for LieMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_tree())
    }
}

pub type LieCombination<T> = LinearCombination<LieMonomial, T>;

/// Words in the free associative algebra.
pub type TensorCombination<T> = LinearCombination<Vec<u8>, T>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum BracketTree {
    Leaf(u8),
    Bracket(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn leaf(a: u8) -> Self {
        Self::Leaf(a)
    }

    pub fn bracket(left: BracketTree, right: BracketTree) -> Self {
        Self::Bracket(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u8>) {
        match self {
            Self::Leaf(a) => out.push(*a),
            Self::Bracket(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Self::Leaf(_) => 1,
            Self::Bracket(l, r) => l.degree() + r.degree(),
        }
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Leaf(a) => write!(f, "a{a}"),
            Self::Bracket(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

pub fn left_normed_tree(args: &[u8]) -> BracketTree {
    let mut t = BracketTree::Leaf(args[0]);
    for &a in &args[1..] {
        t = BracketTree::bracket(t, BracketTree::Leaf(a));
    }
    t
}

pub(crate) fn check_distinct(args: &[u8]) -> Result<()> {
    let mut seen = [false; 256];
    for &a in args {
        if seen[a as usize] {
            return Err(Error::Multilinearity(a));
        }
        seen[a as usize] = true;
    }
    Ok(())
}

/// Basis of the degree-`n` multilinear component on generators `1..=n`.
pub fn lie_basis(n: usize) -> Result<Vec<LieMonomial>> {
    if !(1..=MAX_LIE_DEGREE).contains(&n) {
        return Err(Error::SizeLimit { what: "Lie degree", value: n, min: 1, max: MAX_LIE_DEGREE });
    }
    Ok(lie_basis_on(&(1..=n as u8).collect::<Vec<_>>()))
}

/// Basis monomials on an arbitrary set of distinct generators.
pub(crate) fn lie_basis_on(generators: &[u8]) -> Vec<LieMonomial> {
    let mut sorted = generators.to_vec();
    sorted.sort_unstable();
    let (first, rest) = sorted.split_first().expect("empty generator set");
    let mut tail = rest.to_vec();
    let mut out = Vec::new();
    loop {
        let mut args = Vec::with_capacity(sorted.len());
        args.push(*first);
        args.extend_from_slice(&tail);
        out.push(LieMonomial { args });
        if !next_permutation(&mut tail) {
            break;
        }
    }
    out
}

/// `[x, y]` for left-normed words `x`, `y`, as left-normed words that all
/// start with `x`.
fn bracket_words<T: Scalar>(x: &[u8], y: &[u8]) -> LinearCombination<Vec<u8>, T> {
    if y.len() == 1 {
        let mut w = x.to_vec();
        w.push(y[0]);
        return LinearCombination::monomial(w);
    }
    let (&z, prefix) = y.split_last().expect("empty word");
    let mut out = LinearCombination::zero();
    for (mut w, c) in bracket_words::<T>(x, prefix) {
        w.push(z);
        out.add_term(w, c);
    }
    let mut xz = x.to_vec();
    xz.push(z);
    for (w, c) in bracket_words::<T>(&xz, prefix) {
        out.add_term(w, -c);
    }
    out
}

/// Rewrites one left-normed word (distinct letters) into the basis.
fn normalize_word<T: Scalar>(word: &[u8]) -> LieCombination<T> {
    let (k, &m) = word.iter().enumerate().min_by_key(|(_, &a)| a).expect("empty word");
    if k == 0 {
        return LinearCombination::monomial(LieMonomial { args: word.to_vec() });
    }
    let mut out = LinearCombination::zero();
    for (mut w, c) in bracket_words::<T>(&[m], &word[..k]) {
        w.extend_from_slice(&word[k + 1..]);
        out.add_term(LieMonomial { args: w }, -c);
    }
    out
}

fn tree_words<T: Scalar>(t: &BracketTree) -> LinearCombination<Vec<u8>, T> {
    match t {
        BracketTree::Leaf(a) => LinearCombination::monomial(vec![*a]),
        BracketTree::Bracket(l, r) => {
            let lw = tree_words::<T>(l);
            let rw = tree_words::<T>(r);
            let mut out = LinearCombination::zero();
            for (x, cx) in lw.iter() {
                for (y, cy) in rw.iter() {
                    out.add_scaled(&bracket_words::<T>(x, y), &(cx.clone() * cy.clone()));
                }
            }
            out
        }
    }
}

/// Expansion of a multilinear bracketing in the left-normed basis.
pub fn straighten_lie<T: Scalar>(t: &BracketTree) -> Result<LieCombination<T>> {
    check_distinct(&t.leaves())?;
    Ok(tree_words::<T>(t).flat_map(|w| normalize_word(w)))
}

/// Bracket of two basis monomials on disjoint generator sets.
pub fn bracket_monomials<T: Scalar>(x: &LieMonomial, y: &LieMonomial) -> Result<LieCombination<T>> {
    let mut all = x.args.clone();
    all.extend_from_slice(&y.args);
    check_distinct(&all)?;
    Ok(bracket_words::<T>(&x.args, &y.args).flat_map(|w| normalize_word(w)))
}

pub fn lie_bracket<T: Scalar>(x: &LieCombination<T>, y: &LieCombination<T>) -> Result<LieCombination<T>> {
    let mut out = LinearCombination::zero();
    for (mx, cx) in x.iter() {
        for (my, cy) in y.iter() {
            out.add_scaled(&bracket_monomials(mx, my)?, &(cx.clone() * cy.clone()));
        }
    }
    Ok(out)
}

/// Relabels generators by `sigma` and re-straightens.
pub fn relabel_monomial<T: Scalar>(m: &LieMonomial, sigma: &Permutation) -> LieCombination<T> {
    let word: Vec<u8> = m.args.iter().map(|&a| sigma.apply(a)).collect();
    normalize_word(&word)
}

fn word_commutator<T: Scalar>(x: &TensorCombination<T>, y: &TensorCombination<T>) -> TensorCombination<T> {
    let mut out = LinearCombination::zero();
    for (u, cu) in x.iter() {
        for (v, cv) in y.iter() {
            let c = cu.clone() * cv.clone();
            let uv: Vec<u8> = u.iter().chain(v.iter()).copied().collect();
            let vu: Vec<u8> = v.iter().chain(u.iter()).copied().collect();
            out.add_term(uv, c.clone());
            out.add_term(vu, -c);
        }
    }
    out
}

/// Image of a bracketing in the tensor algebra under `[x, y] ↦ xy - yx`.
pub fn tree_to_tensor<T: Scalar>(t: &BracketTree) -> TensorCombination<T> {
    match t {
        BracketTree::Leaf(a) => LinearCombination::monomial(vec![*a]),
        BracketTree::Bracket(l, r) => word_commutator(&tree_to_tensor(l), &tree_to_tensor(r)),
    }
}

pub fn lie_to_tensor<T: Scalar>(c: &LieCombination<T>) -> TensorCombination<T> {
    c.flat_map(|m| tree_to_tensor(&m.to_tree()))
}
