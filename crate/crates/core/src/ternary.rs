//! Free multilinear ternary space with three operations.
//!
//! `⟨a,b,c⟩` is totally symmetric, `(a,b,c)` is skew in its first two
//! arguments, and `[a,b,c]` is skew in its first two arguments and satisfies
//! the cyclic Jacobi sum. Canonical monomials of degree 5 put the single
//! inner operation in the first slot whenever the outer symmetry allows it,
//! and put the smallest generator first in every `[,,]`. The twelve degree-5
//! association types are numbered as follows:
//!
//! | id | type              | id | type              |
//! |----|-------------------|----|-------------------|
//! | 1  | `⟨⟨a,b,c⟩,d,e⟩`   | 7  | `(a,b,(c,d,e))`   |
//! | 2  | `⟨(a,b,c),d,e⟩`   | 8  | `([a,b,c],d,e)`   |
//! | 3  | `⟨[a,b,c],d,e⟩`   | 9  | `(a,b,[c,d,e])`   |
//! | 4  | `(⟨a,b,c⟩,d,e)`   | 10 | `[⟨a,b,c⟩,d,e]`   |
//! | 5  | `(a,b,⟨c,d,e⟩)`   | 11 | `[(a,b,c),d,e]`   |
//! | 6  | `((a,b,c),d,e)`   | 12 | `[[a,b,c],d,e]`   |
//!
//! Degree 3 uses ids 1, 2, 3 for `⟨⟩`, `()`, `[]`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lincomb::LinearCombination;
use crate::scalar::{from_int, Scalar};
use crate::symgroup::{enumerate_group, next_permutation, Permutation};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum TernaryOp {
    /// `⟨a,b,c⟩`
    Sym,
    /// `(a,b,c)`
    Skew,
    /// `[a,b,c]`
    Lie,
}

impl TernaryOp {
    pub const ALL: [TernaryOp; 3] = [TernaryOp::Sym, TernaryOp::Skew, TernaryOp::Lie];

    fn delimiters(self) -> (&'static str, &'static str) {
        match self {
            TernaryOp::Sym => ("⟨", "⟩"),
            TernaryOp::Skew => ("(", ")"),
            TernaryOp::Lie => ("[", "]"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TernaryTree {
    Leaf(u8),
    Op(TernaryOp, Box<[TernaryTree; 3]>),
}

impl TernaryTree {
    pub fn op(op: TernaryOp, a: impl Into<TernaryTree>, b: impl Into<TernaryTree>, c: impl Into<TernaryTree>) -> Self {
        Self::Op(op, Box::new([a.into(), b.into(), c.into()]))
    }

    pub fn leaves(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u8>) {
        match self {
            Self::Leaf(a) => out.push(*a),
            Self::Op(_, ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Self::Leaf(_) => 1,
            Self::Op(_, ch) => ch.iter().map(TernaryTree::degree).sum(),
        }
    }

    fn as_leaf(&self) -> Option<u8> {
        match self {
            Self::Leaf(a) => Some(*a),
            Self::Op(..) => None,
        }
    }

    pub fn relabel(&self, sigma: &Permutation) -> Self {
        match self {
            Self::Leaf(a) => Self::Leaf(sigma.apply(*a)),
            Self::Op(op, ch) => {
                Self::Op(*op, Box::new([ch[0].relabel(sigma), ch[1].relabel(sigma), ch[2].relabel(sigma)]))
            }
        }
    }

    /// Generic bottom-up evaluation.
    pub fn evaluate<E, L, O>(&self, leaf: &L, op: &O) -> Result<E>
    where
        L: Fn(u8) -> Result<E>,
        O: Fn(TernaryOp, &E, &E, &E) -> Result<E>,
    {
        match self {
            Self::Leaf(a) => leaf(*a),
            Self::Op(o, ch) => {
                let a = ch[0].evaluate(leaf, op)?;
                let b = ch[1].evaluate(leaf, op)?;
                let c = ch[2].evaluate(leaf, op)?;
                op(*o, &a, &b, &c)
            }
        }
    }
}

impl From<u8> for TernaryTree {
    fn from(a: u8) -> Self {
        Self::Leaf(a)
    }
}

impl fmt::Display for TernaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Leaf(a) => write!(f, "{}", generator_name(*a)),
            Self::Op(op, ch) => {
                let (l, r) = op.delimiters();
                write!(f, "{l}{},{},{}{r}", ch[0], ch[1], ch[2])
            }
        }
    }
}

fn generator_name(a: u8) -> String {
    if (1..=26).contains(&a) {
        ((b'a' + a - 1) as char).to_string()
    } else {
        format!("x{a}")
    }
}

pub fn sym(a: impl Into<TernaryTree>, b: impl Into<TernaryTree>, c: impl Into<TernaryTree>) -> TernaryTree {
    TernaryTree::op(TernaryOp::Sym, a, b, c)
}

pub fn skew(a: impl Into<TernaryTree>, b: impl Into<TernaryTree>, c: impl Into<TernaryTree>) -> TernaryTree {
    TernaryTree::op(TernaryOp::Skew, a, b, c)
}

pub fn lie3(a: impl Into<TernaryTree>, b: impl Into<TernaryTree>, c: impl Into<TernaryTree>) -> TernaryTree {
    TernaryTree::op(TernaryOp::Lie, a, b, c)
}

/// Placement of the operation symbols in a monomial of degree 3 or 5.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AssociationType {
    pub outer: TernaryOp,
    /// Inner operation and whether it sits in the first (else third) slot.
    pub inner: Option<(TernaryOp, bool)>,
}

use TernaryOp::{Lie, Skew, Sym};

const DEGREE5_TYPES: [AssociationType; 12] = [
    AssociationType { outer: Sym, inner: Some((Sym, true)) },
    AssociationType { outer: Sym, inner: Some((Skew, true)) },
    AssociationType { outer: Sym, inner: Some((Lie, true)) },
    AssociationType { outer: Skew, inner: Some((Sym, true)) },
    AssociationType { outer: Skew, inner: Some((Sym, false)) },
    AssociationType { outer: Skew, inner: Some((Skew, true)) },
    AssociationType { outer: Skew, inner: Some((Skew, false)) },
    AssociationType { outer: Skew, inner: Some((Lie, true)) },
    AssociationType { outer: Skew, inner: Some((Lie, false)) },
    AssociationType { outer: Lie, inner: Some((Sym, true)) },
    AssociationType { outer: Lie, inner: Some((Skew, true)) },
    AssociationType { outer: Lie, inner: Some((Lie, true)) },
];

const DEGREE3_TYPES: [AssociationType; 3] = [
    AssociationType { outer: Sym, inner: None },
    AssociationType { outer: Skew, inner: None },
    AssociationType { outer: Lie, inner: None },
];

/// Number of canonical monomials per degree-5 association type.
pub const DEGREE5_TYPE_COUNTS: [usize; 12] = [10, 30, 20, 20, 10, 60, 30, 40, 20, 20, 60, 40];

impl AssociationType {
    pub fn lookup(degree: usize, type_id: u8) -> Result<Self> {
        let table: &[AssociationType] = match degree {
            3 => &DEGREE3_TYPES,
            5 => &DEGREE5_TYPES,
            d => return Err(Error::UnsupportedDegree(d)),
        };
        table
            .get((type_id as usize).wrapping_sub(1))
            .copied()
            .ok_or_else(|| Error::Parse(format!("no association type {type_id} in degree {degree}")))
    }

    pub fn id(&self) -> u8 {
        let table: &[AssociationType] = if self.inner.is_some() { &DEGREE5_TYPES } else { &DEGREE3_TYPES };
        table.iter().position(|t| t == self).expect("every type is tabulated") as u8 + 1
    }

    pub fn degree(&self) -> usize {
        if self.inner.is_some() {
            5
        } else {
            3
        }
    }

    /// The tree of this type with `args` placed left to right.
    pub fn tree(&self, args: &[u8]) -> TernaryTree {
        match self.inner {
            None => TernaryTree::op(self.outer, args[0], args[1], args[2]),
            Some((inner, true)) => {
                TernaryTree::op(self.outer, TernaryTree::op(inner, args[0], args[1], args[2]), args[3], args[4])
            }
            Some((inner, false)) => {
                TernaryTree::op(self.outer, args[0], args[1], TernaryTree::op(inner, args[2], args[3], args[4]))
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TernaryMonomial {
    #[serde(rename = "type")]
    type_id: u8,
    args: Vec<u8>,
}

impl TernaryMonomial {
    pub fn type_id(&self) -> u8 {
        self.type_id
    }

    pub fn args(&self) -> &[u8] {
        &self.args
    }

    pub fn degree(&self) -> usize {
        self.args.len()
    }

    pub fn association_type(&self) -> AssociationType {
        AssociationType::lookup(self.degree(), self.type_id).expect("monomials carry valid types")
    }

    pub fn perm(&self) -> Permutation {
        Permutation::new(self.args.clone()).expect("monomial arguments form a permutation")
    }

    pub fn tree(&self) -> TernaryTree {
        self.association_type().tree(&self.args)
    }
}

impl fmt::Debug for TernaryMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tree())
    }
}

pub type TernaryCombination<T> = LinearCombination<TernaryMonomial, T>;

/// Signed canonical forms of a single operation applied to three generators.
fn canonical_triple(op: TernaryOp, [x, y, z]: [u8; 3]) -> Vec<(i64, [u8; 3])> {
    match op {
        Sym => {
            let mut s = [x, y, z];
            s.sort_unstable();
            vec![(1, s)]
        }
        Skew if x > y => vec![(-1, [y, x, z])],
        Skew => vec![(1, [x, y, z])],
        Lie => {
            if x < y && x < z {
                vec![(1, [x, y, z])]
            } else if y < x && y < z {
                vec![(-1, [y, x, z])]
            } else {
                // [x,y,m] = [m,y,x] - [m,x,y]
                vec![(1, [z, y, x]), (-1, [z, x, y])]
            }
        }
    }
}

enum Slot {
    Inner,
    Leaf(u8),
}

/// Moves the composite argument of the outer operation to slot 1, or slot 3
/// for `(,,)` when it already sits there.
fn canonical_outer(op: TernaryOp, slots: [Slot; 3]) -> Vec<(i64, bool, [u8; 2])> {
    let leaf = |s: &Slot| match s {
        Slot::Leaf(a) => *a,
        Slot::Inner => unreachable!(),
    };
    let pos = slots.iter().position(|s| matches!(s, Slot::Inner)).expect("one composite argument");
    let others: Vec<u8> = slots.iter().filter(|s| !matches!(s, Slot::Inner)).map(leaf).collect();
    let (d, e) = (others[0], others[1]);
    match (op, pos) {
        (Sym, _) => vec![(1, true, [d.min(e), d.max(e)])],
        (Skew, 0) => vec![(1, true, [d, e])],
        (Skew, 1) => vec![(-1, true, [d, e])],
        (Skew, _) if d > e => vec![(-1, false, [e, d])],
        (Skew, _) => vec![(1, false, [d, e])],
        (Lie, 0) => vec![(1, true, [d, e])],
        (Lie, 1) => vec![(-1, true, [d, e])],
        // [d,e,X] = [X,e,d] - [X,d,e]
        (Lie, _) => vec![(1, true, [e, d]), (-1, true, [d, e])],
    }
}

fn monomial(ty: AssociationType, args: Vec<u8>) -> TernaryMonomial {
    TernaryMonomial { type_id: ty.id(), args }
}

/// Canonical expansion of a multilinear tree of degree 3 or 5.
pub fn canonicalize_tree<T: Scalar>(tree: &TernaryTree) -> Result<TernaryCombination<T>> {
    let leaves = tree.leaves();
    crate::freelie::check_distinct(&leaves)?;
    let (op, ch) = match tree {
        TernaryTree::Leaf(_) => return Err(Error::UnsupportedDegree(1)),
        TernaryTree::Op(op, ch) => (*op, ch),
    };
    let mut out = TernaryCombination::zero();
    if let (Some(x), Some(y), Some(z)) = (ch[0].as_leaf(), ch[1].as_leaf(), ch[2].as_leaf()) {
        let ty = AssociationType { outer: op, inner: None };
        for (s, args) in canonical_triple(op, [x, y, z]) {
            out.add_term(monomial(ty, args.to_vec()), from_int(s));
        }
        return Ok(out);
    }
    if leaves.len() != 5 {
        return Err(Error::UnsupportedDegree(leaves.len()));
    }
    let mut inner = None;
    let slots = [0, 1, 2].map(|i| match &ch[i] {
        TernaryTree::Leaf(a) => Slot::Leaf(*a),
        TernaryTree::Op(iop, ich) => {
            inner = Some((*iop, ich.clone()));
            Slot::Inner
        }
    });
    let (inner_op, ich) = inner.expect("degree 5 has a composite argument");
    let inner_args = match (ich[0].as_leaf(), ich[1].as_leaf(), ich[2].as_leaf()) {
        (Some(x), Some(y), Some(z)) => [x, y, z],
        _ => return Err(Error::UnsupportedDegree(leaves.len())),
    };
    let inner_forms = canonical_triple(inner_op, inner_args);
    for (so, first, [d, e]) in canonical_outer(op, slots) {
        let ty = AssociationType { outer: op, inner: Some((inner_op, first)) };
        for (si, [a, b, c]) in &inner_forms {
            let args = if first { vec![*a, *b, *c, d, e] } else { vec![d, e, *a, *b, *c] };
            out.add_term(monomial(ty, args), from_int(so * si));
        }
    }
    Ok(out)
}

/// Canonical form of the monomial of type `type_id` with raw argument list.
pub fn canonicalize<T: Scalar>(degree: usize, type_id: u8, raw: &Permutation) -> Result<TernaryCombination<T>> {
    if raw.degree() != degree {
        return Err(Error::Arity { expected: degree, got: raw.degree() });
    }
    let ty = AssociationType::lookup(degree, type_id)?;
    canonicalize_tree(&ty.tree(raw.images()))
}

/// Canonical basis in (type, arguments) order.
pub fn ternary_basis(degree: usize) -> Result<Vec<TernaryMonomial>> {
    let types: &[AssociationType] = match degree {
        3 => &DEGREE3_TYPES,
        5 => &DEGREE5_TYPES,
        d => return Err(Error::UnsupportedDegree(d)),
    };
    let mut out = Vec::new();
    for ty in types {
        let mut args: Vec<u8> = (1..=degree as u8).collect();
        loop {
            let m = monomial(*ty, args.clone());
            let c: TernaryCombination<SignScalar> = canonicalize_tree(&ty.tree(&args))?;
            if c == TernaryCombination::monomial(m.clone()) {
                out.push(m);
            }
            if !next_permutation(&mut args) {
                break;
            }
        }
    }
    Ok(out)
}

// Basis enumeration only needs signs, so any exact scalar works.
type SignScalar = num_rational::Rational64;

/// Relabels every generator by `sigma` and canonicalizes.
/// Number of canonical monomials per association type, indexed by type id.
pub fn type_counts(degree: usize) -> Result<Vec<usize>> {
    let n = match degree {
        3 => DEGREE3_TYPES.len(),
        5 => DEGREE5_TYPES.len(),
        d => return Err(Error::UnsupportedDegree(d)),
    };
    let mut counts = vec![0; n];
    for m in ternary_basis(degree)? {
        counts[m.type_id() as usize - 1] += 1;
    }
    Ok(counts)
}

pub fn act<T: Scalar>(sigma: &Permutation, x: &TernaryCombination<T>) -> Result<TernaryCombination<T>> {
    let mut out = TernaryCombination::zero();
    for (m, c) in x.iter() {
        if sigma.degree() != m.degree() {
            return Err(Error::Arity { expected: m.degree(), got: sigma.degree() });
        }
        let args: Vec<u8> = m.args.iter().map(|&a| sigma.apply(a)).collect();
        let image: TernaryCombination<T> = canonicalize_tree(&m.association_type().tree(&args))?;
        out.add_scaled(&image, c);
    }
    Ok(out)
}

/// The canonical basis of one degree with coordinate lookup and a
/// precomputed permutation action on basis vectors.
pub struct TernarySpace {
    degree: usize,
    basis: Vec<TernaryMonomial>,
    index: HashMap<TernaryMonomial, usize>,
}

impl TernarySpace {
    pub fn new(degree: usize) -> Result<Self> {
        let basis = ternary_basis(degree)?;
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(Self { degree, basis, index })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[TernaryMonomial] {
        &self.basis
    }

    pub fn index_of(&self, m: &TernaryMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn vectorize<T: Scalar>(&self, x: &TernaryCombination<T>) -> Vec<T> {
        let mut v = vec![T::zero(); self.dim()];
        for (m, c) in x.iter() {
            let i = self.index_of(m).expect("combination is canonical and of matching degree");
            v[i] = c.clone();
        }
        v
    }

    pub fn combination<T: Scalar>(&self, v: &[T]) -> TernaryCombination<T> {
        v.iter().enumerate().map(|(i, c)| (self.basis[i].clone(), c.clone())).collect()
    }

    /// For every `σ ∈ S_n` (lexicographic order) the images of all basis
    /// monomials as sparse integer vectors.
    pub fn action_table(&self) -> Result<ActionTable> {
        let group = enumerate_group(self.degree)?;
        let mut images = Vec::with_capacity(group.len());
        for sigma in &group {
            let mut per_sigma = Vec::with_capacity(self.dim());
            for m in &self.basis {
                let image: TernaryCombination<SignScalar> = act(sigma, &TernaryCombination::monomial(m.clone()))?;
                per_sigma.push(
                    image.iter().map(|(k, c)| (self.index_of(k).expect("canonical image"), *c.numer())).collect(),
                );
            }
            images.push(per_sigma);
        }
        Ok(ActionTable { group, images })
    }
}

/// Sparse permutation action on coordinate vectors of a [`TernarySpace`].
pub struct ActionTable {
    pub group: Vec<Permutation>,
    images: Vec<Vec<Vec<(usize, i64)>>>,
}

impl ActionTable {
    pub fn image(&self, sigma_index: usize, basis_index: usize) -> &[(usize, i64)] {
        &self.images[sigma_index][basis_index]
    }

    /// Coordinates of `σ · v` for integer coordinates `v`.
    pub fn apply<I>(&self, sigma_index: usize, v: &[I]) -> Vec<I>
    where
        I: Clone + num_traits::Zero + std::ops::Mul<Output = I> + From<i64>,
    {
        let mut out = vec![I::zero(); v.len()];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, s) in &self.images[sigma_index][j] {
                out[i] = out[i].clone() + c.clone() * I::from(s);
            }
        }
        out
    }

    pub fn orbit<I>(&self, v: &[I]) -> Vec<Vec<I>>
    where
        I: Clone + num_traits::Zero + std::ops::Mul<Output = I> + From<i64>,
    {
        (0..self.group.len()).map(|s| self.apply(s, v)).collect()
    }
}

/// Integer-coefficient combination of ternary trees, e.g. a relation written
/// as left side minus right side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryExpr {
    pub terms: Vec<(i64, TernaryTree)>,
}

impl TernaryExpr {
    pub fn new(terms: Vec<(i64, TernaryTree)>) -> Self {
        Self { terms }
    }

    pub fn degree(&self) -> usize {
        self.terms.first().map_or(0, |(_, t)| t.degree())
    }

    pub fn canonical<T: Scalar>(&self) -> Result<TernaryCombination<T>> {
        let mut out = TernaryCombination::zero();
        for (c, t) in &self.terms {
            out.add_scaled(&canonicalize_tree(t)?, &from_int(*c));
        }
        Ok(out)
    }

    pub fn relabel(&self, sigma: &Permutation) -> Self {
        Self { terms: self.terms.iter().map(|(c, t)| (*c, t.relabel(sigma))).collect() }
    }
}

impl fmt::Display for TernaryExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, t)) in self.terms.iter().enumerate() {
            match (i, *c) {
                (0, 1) => write!(f, "{t}")?,
                (0, -1) => write!(f, "-{t}")?,
                (0, c) => write!(f, "{c}{t}")?,
                (_, 1) => write!(f, " + {t}")?,
                (_, -1) => write!(f, " - {t}")?,
                (_, c) if c < 0 => write!(f, " - {}{t}", -c)?,
                (_, c) => write!(f, " + {c}{t}")?,
            }
        }
        Ok(())
    }
}

/// An algebra carrying the three ternary operations, in which ternary
/// expressions can be evaluated.
pub trait TernaryAlgebra<T: Scalar> {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn add_scaled(&self, acc: &mut Self::Elem, x: &Self::Elem, c: &T);
    fn ternary(&self, op: TernaryOp, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Result<Self::Elem>;

    fn eval_tree(&self, tree: &TernaryTree, assign: &dyn Fn(u8) -> Self::Elem) -> Result<Self::Elem> {
        tree.evaluate(&|a| Ok(assign(a)), &|op, x, y, z| self.ternary(op, x, y, z))
    }

    fn eval_expr(&self, expr: &TernaryExpr, assign: &dyn Fn(u8) -> Self::Elem) -> Result<Self::Elem> {
        let mut acc = self.zero();
        for (c, t) in &expr.terms {
            let v = self.eval_tree(t, assign)?;
            self.add_scaled(&mut acc, &v, &from_int(*c));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type Q = Rational;
    type TC = TernaryCombination<Q>;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn mono(type_id: u8, args: &[u8]) -> TernaryMonomial {
        TernaryMonomial { type_id, args: args.to_vec() }
    }

    fn canon(t: &TernaryTree) -> TC {
        canonicalize_tree(t).unwrap()
    }

    #[test]
    fn degree_five_counts() {
        let b = ternary_basis(5).unwrap();
        assert_eq!(b.len(), 360);
        let mut counts = [0usize; 12];
        for m in &b {
            counts[m.type_id() as usize - 1] += 1;
        }
        assert_eq!(counts, DEGREE5_TYPE_COUNTS);
        assert_eq!(counts[5], 60);
        assert!(b.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn degree_three_counts() {
        // orbit count of S3 on each operation under its symmetries: 3!/6, 3!/2, 3!/3
        let b = ternary_basis(3).unwrap();
        let counts: Vec<usize> = (1..=3).map(|t| b.iter().filter(|m| m.type_id() == t).count()).collect();
        assert_eq!(counts, vec![1, 3, 2]);
        assert!(matches!(ternary_basis(4), Err(Error::UnsupportedDegree(4))));
    }

    #[test]
    fn type_ids_round_trip() {
        for id in 1..=12 {
            assert_eq!(AssociationType::lookup(5, id).unwrap().id(), id);
        }
        for id in 1..=3 {
            assert_eq!(AssociationType::lookup(3, id).unwrap().id(), id);
        }
        assert!(AssociationType::lookup(5, 13).is_err());
    }

    #[test]
    fn symmetric_operation_sorts() {
        assert_eq!(canon(&sym(3, 1, 2)), TC::monomial(mono(1, &[1, 2, 3])));
    }

    #[test]
    fn lie_min_in_middle_and_last() {
        // [c,a,b] = -[a,c,b]
        assert_eq!(canon(&lie3(3, 1, 2)), TC::term(mono(3, &[1, 3, 2]), q(-1)));
        // [b,c,a] = -[a,b,c] + [a,c,b]
        let expected: TC = [(mono(3, &[1, 2, 3]), q(-1)), (mono(3, &[1, 3, 2]), q(1))].into_iter().collect();
        assert_eq!(canon(&lie3(2, 3, 1)), expected);
        // same inside a degree-5 monomial of type 12
        let t = lie3(lie3(2, 3, 1), 4, 5);
        let expected: TC =
            [(mono(12, &[1, 2, 3, 4, 5]), q(-1)), (mono(12, &[1, 3, 2, 4, 5]), q(1))].into_iter().collect();
        assert_eq!(canon(&t), expected);
    }

    #[test]
    fn outer_rewrites() {
        // (d, X, e) = -(X, d, e)
        assert_eq!(canon(&skew(4, skew(1, 2, 3), 5)), TC::term(mono(6, &[1, 2, 3, 4, 5]), q(-1)));
        // (b, a, X) = -(a, b, X)
        assert_eq!(canon(&skew(2, 1, sym(3, 4, 5))), TC::term(mono(5, &[1, 2, 3, 4, 5]), q(-1)));
        // [d, e, X] = [X, e, d] - [X, d, e]
        let expected: TC =
            [(mono(12, &[1, 2, 3, 5, 4]), q(1)), (mono(12, &[1, 2, 3, 4, 5]), q(-1))].into_iter().collect();
        assert_eq!(canon(&lie3(4, 5, lie3(1, 2, 3))), expected);
        // ⟨d, X, e⟩ = ⟨X, d, e⟩ with leaves sorted
        assert_eq!(canon(&sym(5, skew(1, 2, 3), 4)), TC::monomial(mono(2, &[1, 2, 3, 4, 5])));
    }

    #[test]
    fn action_examples() {
        let x = TC::monomial(mono(6, &[1, 2, 3, 4, 5]));
        assert_eq!(act(&Permutation::identity(5), &x).unwrap(), x);
        let t12 = Permutation::transposition(5, 1, 2);
        assert_eq!(act(&t12, &x).unwrap(), -x.clone());

        // the 3-cycle 1 -> 2 -> 3 -> 1 on [[a,b,c],d,e]: [[2,3,1],4,5] = -[[1,2,3],4,5] + [[1,3,2],4,5]
        let y = TC::monomial(mono(12, &[1, 2, 3, 4, 5]));
        let c = Permutation::new(vec![2, 3, 1, 4, 5]).unwrap();
        let expected: TC =
            [(mono(12, &[1, 2, 3, 4, 5]), q(-1)), (mono(12, &[1, 3, 2, 4, 5]), q(1))].into_iter().collect();
        assert_eq!(act(&c, &y).unwrap(), expected);
        assert!(act(&Permutation::identity(3), &y).is_err());
    }

    #[test]
    fn canonicalize_by_type_and_permutation() {
        let raw = Permutation::new(vec![2, 1, 3, 4, 5]).unwrap();
        let c: TC = canonicalize(5, 11, &raw).unwrap();
        assert_eq!(c, TC::term(mono(11, &[1, 2, 3, 4, 5]), q(-1)));
        assert!(canonicalize::<Q>(5, 11, &Permutation::identity(3)).is_err());
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let space = TernarySpace::new(5).unwrap();
        let group = enumerate_group(5).unwrap();
        for m in space.basis() {
            for sigma in group.iter().step_by(13) {
                let img = act(sigma, &TC::monomial(m.clone())).unwrap();
                for k in img.keys() {
                    assert_eq!(canon(&k.tree()), TC::monomial(k.clone()));
                }
            }
        }
    }

    #[test]
    fn action_is_a_group_action() {
        let space = TernarySpace::new(5).unwrap();
        let group = enumerate_group(5).unwrap();
        for m in space.basis() {
            let x = TC::monomial(m.clone());
            for s in group.iter().step_by(17) {
                for t in group.iter().step_by(23) {
                    let st = s.compose(t).unwrap();
                    assert_eq!(act(s, &act(t, &x).unwrap()).unwrap(), act(&st, &x).unwrap());
                }
                assert_eq!(act(&s.inverse(), &act(s, &x).unwrap()).unwrap(), x);
            }
        }
        assert!(act(&group[7], &TC::zero()).unwrap().is_zero());
    }

    #[test]
    fn vectorize_coordinates() {
        let space = TernarySpace::new(5).unwrap();
        assert!(space.vectorize::<Q>(&TC::zero()).iter().all(|c| *c == q(0)));
        let m = space.basis()[17].clone();
        let v = space.vectorize(&TC::monomial(m));
        assert_eq!(v[17], q(1));
        assert_eq!(v.iter().filter(|c| **c != q(0)).count(), 1);
        // (a,b,(c,d,e)) - (c,d,(a,b,e)) has two terms
        let rel = skew(1, 2, skew(3, 4, 5));
        let rhs = skew(3, 4, skew(1, 2, 5));
        let v = space.vectorize(&(canon(&rel) - canon(&rhs)));
        let nz: Vec<Q> = v.into_iter().filter(|c| *c != q(0)).collect();
        assert_eq!(nz.len(), 2);
        assert!(nz.contains(&q(1)) && nz.contains(&q(-1)));
    }

    #[test]
    fn action_table_matches_act() {
        let space = TernarySpace::new(5).unwrap();
        let table = space.action_table().unwrap();
        let v: Vec<i64> = (0..360).map(|i| (i % 7) as i64 - 3).collect();
        let x = space.combination(&v.iter().map(|&c| q(c)).collect::<Vec<_>>());
        for s in [0, 5, 63, 119] {
            let expected = space.vectorize(&act(&table.group[s], &x).unwrap());
            let got: Vec<Q> = table.apply(s, &v).into_iter().map(q).collect();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn json_shape() {
        let m = mono(11, &[1, 2, 3, 4, 5]);
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"type":11,"args":[1,2,3,4,5]}"#);
    }
}
