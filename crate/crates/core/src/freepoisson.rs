//! Multilinear free Poisson algebra, realised as the symmetric algebra on the
//! free Lie algebra.
//!
//! A basis monomial is a commutative product of left-normed Lie basis
//! monomials whose generator sets partition the support. Factors are kept in
//! order of decreasing degree, ties broken lexicographically, so that the
//! degree sequence of the factors is the partition shape of the monomial.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::freelie::{self, check_distinct, LieCombination, LieMonomial};
use crate::lincomb::LinearCombination;
use crate::scalar::Scalar;
use crate::symgroup::Permutation;
use crate::{Error, Result};

pub const MAX_POISSON_DEGREE: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<LieMonomial>", into = "Vec<LieMonomial>")]
pub struct PoissonMonomial {
    factors: Vec<LieMonomial>,
}

fn factor_order(a: &LieMonomial, b: &LieMonomial) -> Ordering {
    b.degree().cmp(&a.degree()).then_with(|| a.cmp(b))
}

impl PoissonMonomial {
    pub fn new(mut factors: Vec<LieMonomial>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Parse("empty Poisson monomial".into()));
        }
        let all: Vec<u8> = factors.iter().flat_map(|f| f.args().iter().copied()).collect();
        check_distinct(&all)?;
        factors.sort_by(factor_order);
        Ok(Self { factors })
    }

    pub fn generator(a: u8) -> Self {
        Self { factors: vec![LieMonomial::generator(a)] }
    }

    pub fn from_lie(m: LieMonomial) -> Self {
        Self { factors: vec![m] }
    }

    pub fn factors(&self) -> &[LieMonomial] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(LieMonomial::degree).sum()
    }

    /// Factor degrees in non-increasing order, e.g. `[2, 2, 1]`.
    pub fn shape(&self) -> Vec<usize> {
        self.factors.iter().map(LieMonomial::degree).collect()
    }

    pub fn generators(&self) -> impl Iterator<Item = u8> + '_ {
        self.factors.iter().flat_map(|f| f.args().iter().copied())
    }

    fn without(&self, skip: usize) -> impl Iterator<Item = &LieMonomial> {
        self.factors.iter().enumerate().filter(move |(i, _)| *i != skip).map(|(_, f)| f)
    }
}

impl TryFrom<Vec<LieMonomial>> for PoissonMonomial {
    type Error = Error;

    fn try_from(factors: Vec<LieMonomial>) -> Result<Self> {
        Self::new(factors)
    }
}

impl From<PoissonMonomial> for Vec<LieMonomial> {
    fn from(m: PoissonMonomial) -> Self {
        m.factors
    }
}

impl Ord for PoissonMonomial {
    /// Shapes in reverse lexicographic order (`5, 41, 32, 311, 221, ...`), then
    /// factors lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        other.shape().cmp(&self.shape()).then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for PoissonMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PoissonMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "{factor:?}")?;
        }
        Ok(())
    }
}

pub type PoissonCombination<T> = LinearCombination<PoissonMonomial, T>;

pub fn generator<T: Scalar>(a: u8) -> PoissonCombination<T> {
    PoissonCombination::monomial(PoissonMonomial::generator(a))
}

pub fn from_lie<T: Scalar>(c: &LieCombination<T>) -> PoissonCombination<T> {
    c.iter().map(|(m, k)| (PoissonMonomial::from_lie(m.clone()), k.clone())).collect()
}

/// Set partitions of `items` as restricted growth strings.
fn set_partitions(items: &[u8]) -> Vec<Vec<Vec<u8>>> {
    fn go(items: &[u8], i: usize, blocks: &mut Vec<Vec<u8>>, out: &mut Vec<Vec<Vec<u8>>>) {
        if i == items.len() {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(items[i]);
            go(items, i + 1, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![items[i]]);
        go(items, i + 1, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(items, 0, &mut Vec::new(), &mut out);
    out
}

/// All basis monomials of the degree-`n` multilinear component on `1..=n`,
/// sorted by [`PoissonMonomial`]'s order.
pub fn poisson_basis(n: usize) -> Result<Vec<PoissonMonomial>> {
    if !(1..=MAX_POISSON_DEGREE).contains(&n) {
        return Err(Error::SizeLimit { what: "Poisson degree", value: n, min: 1, max: MAX_POISSON_DEGREE });
    }
    let gens: Vec<u8> = (1..=n as u8).collect();
    let mut out = Vec::new();
    for blocks in set_partitions(&gens) {
        let choices: Vec<Vec<LieMonomial>> = blocks.iter().map(|b| freelie::lie_basis_on(b)).collect();
        let mut idx = vec![0usize; choices.len()];
        'outer: loop {
            let factors = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
            out.push(PoissonMonomial::new(factors)?);
            for k in 0..idx.len() {
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    continue 'outer;
                }
                idx[k] = 0;
            }
            break;
        }
    }
    out.sort();
    Ok(out)
}

/// Published family sizes of the degree-5 component, by shape
/// `5, 41, 32, 311, 221, 2111, 11111`.
pub const DEGREE5_FAMILY_COUNTS: [usize; 7] = [24, 30, 20, 20, 15, 10, 1];

/// Number of basis monomials per partition shape, in basis order.
pub fn family_counts(n: usize) -> Result<Vec<(Vec<usize>, usize)>> {
    let mut out: Vec<(Vec<usize>, usize)> = Vec::new();
    for m in poisson_basis(n)? {
        match out.last_mut() {
            Some((s, c)) if *s == m.shape() => *c += 1,
            _ => out.push((m.shape(), 1)),
        }
    }
    Ok(out)
}

pub fn dot_monomials(x: &PoissonMonomial, y: &PoissonMonomial) -> Result<PoissonMonomial> {
    let mut factors = x.factors.clone();
    factors.extend(y.factors.iter().cloned());
    PoissonMonomial::new(factors)
}

/// Commutative product; operands must have disjoint generator sets.
pub fn poisson_dot<T: Scalar>(x: &PoissonCombination<T>, y: &PoissonCombination<T>) -> Result<PoissonCombination<T>> {
    let mut out = PoissonCombination::zero();
    for (mx, cx) in x.iter() {
        for (my, cy) in y.iter() {
            out.add_term(dot_monomials(mx, my)?, cx.clone() * cy.clone());
        }
    }
    Ok(out)
}

/// `[∏ x_i, ∏ y_j] = Σ_{i,j} [x_i, y_j] · ∏_{k≠i} x_k · ∏_{l≠j} y_l`.
pub fn bracket_monomials<T: Scalar>(x: &PoissonMonomial, y: &PoissonMonomial) -> Result<PoissonCombination<T>> {
    let all: Vec<u8> = x.generators().chain(y.generators()).collect();
    check_distinct(&all)?;
    let mut out = PoissonCombination::zero();
    for (i, xi) in x.factors.iter().enumerate() {
        for (j, yj) in y.factors.iter().enumerate() {
            let inner: LieCombination<T> = freelie::bracket_monomials(xi, yj)?;
            let rest: Vec<LieMonomial> = x.without(i).chain(y.without(j)).cloned().collect();
            for (lie, c) in inner {
                let mut factors = rest.clone();
                factors.push(lie);
                out.add_term(PoissonMonomial::new(factors)?, c);
            }
        }
    }
    Ok(out)
}

pub fn poisson_bracket<T: Scalar>(
    x: &PoissonCombination<T>,
    y: &PoissonCombination<T>,
) -> Result<PoissonCombination<T>> {
    let mut out = PoissonCombination::zero();
    for (mx, cx) in x.iter() {
        for (my, cy) in y.iter() {
            out.add_scaled(&bracket_monomials(mx, my)?, &(cx.clone() * cy.clone()));
        }
    }
    Ok(out)
}

/// Relabels generators by `sigma` and renormalizes every Lie factor.
pub fn relabel_monomial<T: Scalar>(m: &PoissonMonomial, sigma: &Permutation) -> PoissonCombination<T> {
    let mut acc: LinearCombination<Vec<LieMonomial>, T> = LinearCombination::monomial(Vec::new());
    for f in &m.factors {
        let image: LieCombination<T> = freelie::relabel_monomial(f, sigma);
        let mut next = LinearCombination::zero();
        for (prefix, c) in acc.iter() {
            for (lie, d) in image.iter() {
                let mut v = prefix.clone();
                v.push(lie.clone());
                next.add_term(v, c.clone() * d.clone());
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(factors, c)| {
            let m = PoissonMonomial::new(factors).expect("relabeling preserves multilinearity");
            (m, c)
        })
        .collect()
}

pub fn relabel<T: Scalar>(x: &PoissonCombination<T>, sigma: &Permutation) -> PoissonCombination<T> {
    x.flat_map(|m| relabel_monomial(m, sigma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freelie::{straighten_lie, BracketTree};
    use crate::Rational;
    use proptest::prelude::*;

    type Q = Rational;
    type PC = PoissonCombination<Q>;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn lie(args: &[u8]) -> LieMonomial {
        LieMonomial::new(args.to_vec()).unwrap()
    }

    fn pm(factors: &[&[u8]]) -> PoissonMonomial {
        PoissonMonomial::new(factors.iter().map(|f| lie(f)).collect()).unwrap()
    }

    fn g(a: u8) -> PC {
        generator(a)
    }

    fn lie_elem(t: &BracketTree) -> PC {
        from_lie(&straighten_lie(t).unwrap())
    }

    #[test]
    fn degree_five_families() {
        let counts = family_counts(5).unwrap();
        let expected = vec![
            (vec![5], 24),
            (vec![4, 1], 30),
            (vec![3, 2], 20),
            (vec![3, 1, 1], 20),
            (vec![2, 2, 1], 15),
            (vec![2, 1, 1, 1], 10),
            (vec![1, 1, 1, 1, 1], 1),
        ];
        assert_eq!(counts, expected);
    }

    #[test]
    fn small_degrees() {
        assert_eq!(poisson_basis(1).unwrap(), vec![PoissonMonomial::generator(1)]);
        // brute force: partitions of {1,2,3} with (|B|-1)! Lie monomials per block
        let counts = family_counts(3).unwrap();
        assert_eq!(counts, vec![(vec![3], 2), (vec![2, 1], 3), (vec![1, 1, 1], 1)]);
        let mut fact = 1;
        for n in 1..=6 {
            fact *= n;
            let b = poisson_basis(n).unwrap();
            assert_eq!(b.len(), fact);
            assert!(b.windows(2).all(|w| w[0] < w[1]));
        }
        assert!(poisson_basis(7).is_err());
    }

    #[test]
    fn table_two_tie_break() {
        // [a,b]·[c,d]·e with a < c
        for m in poisson_basis(5).unwrap() {
            if m.shape() == vec![2, 2, 1] {
                assert!(m.factors()[0].args()[0] < m.factors()[1].args()[0]);
            }
        }
    }

    #[test]
    fn dot_examples() {
        assert_eq!(poisson_dot(&g(1), &g(2)).unwrap(), PC::monomial(pm(&[&[1], &[2]])));
        let x = PC::monomial(pm(&[&[1, 2]]));
        let y = PC::monomial(pm(&[&[3], &[4]]));
        assert_eq!(poisson_dot(&x, &y).unwrap(), PC::monomial(pm(&[&[1, 2], &[3], &[4]])));

        let b21 = BracketTree::bracket(BracketTree::leaf(2), BracketTree::leaf(1));
        let x = poisson_dot(&lie_elem(&b21), &g(3)).unwrap();
        assert_eq!(poisson_dot(&x, &g(4)).unwrap(), PC::term(pm(&[&[1, 2], &[3], &[4]]), q(-1)));
        assert!(matches!(poisson_dot(&g(1), &g(1)), Err(Error::Multilinearity(1))));
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(poisson_bracket(&g(1), &g(2)).unwrap(), PC::monomial(pm(&[&[1, 2]])));

        let abc = poisson_dot(&poisson_dot(&g(1), &g(2)).unwrap(), &g(3)).unwrap();
        let expected: PC = [
            (pm(&[&[1, 4], &[2], &[3]]), q(1)),
            (pm(&[&[2, 4], &[1], &[3]]), q(1)),
            (pm(&[&[3, 4], &[1], &[2]]), q(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(poisson_bracket(&abc, &g(4)).unwrap(), expected);

        // hand expansion by Leibniz in both arguments
        let x = poisson_dot(&PC::monomial(pm(&[&[1, 2]])), &g(3)).unwrap();
        let y = poisson_dot(&g(4), &g(5)).unwrap();
        let expected: PC = [
            (pm(&[&[1, 2, 4], &[3], &[5]]), q(1)),
            (pm(&[&[1, 2, 5], &[3], &[4]]), q(1)),
            (pm(&[&[1, 2], &[3, 4], &[5]]), q(1)),
            (pm(&[&[1, 2], &[3, 5], &[4]]), q(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(poisson_bracket(&x, &y).unwrap(), expected);
        assert!(poisson_bracket(&x, &g(3)).is_err());
    }

    /// The degree-|gens| basis transported onto `gens` (a subset of 1..=5).
    fn basis_on(gens: &[u8]) -> Vec<PC> {
        let mut images = gens.to_vec();
        for a in 1..=5 {
            if !images.contains(&a) {
                images.push(a);
            }
        }
        let sigma = Permutation::new(images).unwrap();
        poisson_basis(gens.len()).unwrap().iter().map(|m| relabel_monomial(m, &sigma)).collect()
    }

    #[test]
    fn commutativity_and_antisymmetry_on_2_plus_3() {
        for x in basis_on(&[4, 2]) {
            for y in basis_on(&[1, 5, 3]) {
                assert_eq!(poisson_dot(&x, &y).unwrap(), poisson_dot(&y, &x).unwrap());
                assert_eq!(poisson_bracket(&x, &y).unwrap(), -poisson_bracket(&y, &x).unwrap());
            }
        }
    }

    #[test]
    fn associativity_jacobi_leibniz() {
        let splits: [(&[u8], &[u8], &[u8]); 2] = [(&[3], &[1, 5], &[2, 4]), (&[2], &[5], &[1, 3, 4])];
        for (a, b, c) in splits {
            for x in basis_on(a) {
                for y in basis_on(b) {
                    for z in basis_on(c) {
                        let dot = |u: &PC, v: &PC| poisson_dot(u, v).unwrap();
                        let br = |u: &PC, v: &PC| poisson_bracket(u, v).unwrap();
                        assert_eq!(dot(&dot(&x, &y), &z), dot(&x, &dot(&y, &z)));
                        let jac = br(&br(&x, &y), &z) + br(&br(&y, &z), &x) + br(&br(&z, &x), &y);
                        assert!(jac.is_zero());
                        assert_eq!(br(&x, &dot(&y, &z)), dot(&br(&x, &y), &z) + dot(&y, &br(&x, &z)));
                        assert_eq!(br(&z, &dot(&x, &y)), dot(&br(&z, &x), &y) + dot(&x, &br(&z, &y)));
                    }
                }
            }
        }
    }

    #[test]
    fn relabel_is_an_action() {
        let g5 = crate::symgroup::enumerate_group(5).unwrap();
        let m = pm(&[&[1, 3, 2], &[4, 5]]);
        let x = PC::monomial(m);
        for s in g5.iter().step_by(7) {
            for t in g5.iter().step_by(11) {
                let st = s.compose(t).unwrap();
                assert_eq!(relabel(&relabel(&x, t), s), relabel(&x, &st));
            }
        }
    }

    #[test]
    fn serde_shape() {
        let m = pm(&[&[1, 2], &[3]]);
        assert_eq!(serde_json::to_string(&m).unwrap(), "[[1,2],[3]]");
        let back: PoissonMonomial = serde_json::from_str("[[3],[1,2]]").unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn commutativity_and_antisymmetry_on_two_three_split() {
        for x in basis_on(&[2, 4]) {
            for y in basis_on(&[1, 3, 5]) {
                assert_eq!(poisson_dot(&x, &y).unwrap(), poisson_dot(&y, &x).unwrap());
                let b = poisson_bracket(&x, &y).unwrap();
                assert_eq!(b, -poisson_bracket(&y, &x).unwrap());
            }
        }
    }

    #[derive(Clone, Debug)]
    enum Expr {
        Gen(u8),
        Dot(Box<Expr>, Box<Expr>),
        Bracket(Box<Expr>, Box<Expr>),
    }

    fn eval(e: &Expr) -> PC {
        match e {
            Expr::Gen(a) => g(*a),
            Expr::Dot(x, y) => poisson_dot(&eval(x), &eval(y)).unwrap(),
            Expr::Bracket(x, y) => poisson_bracket(&eval(x), &eval(y)).unwrap(),
        }
    }

    /// Evaluates right operands first and uses `x·y = y·x`, `[x,y] = -[y,x]`.
    fn eval_mirrored(e: &Expr) -> PC {
        match e {
            Expr::Gen(a) => g(*a),
            Expr::Dot(x, y) => {
                let (v, u) = (eval_mirrored(y), eval_mirrored(x));
                poisson_dot(&v, &u).unwrap()
            }
            Expr::Bracket(x, y) => {
                let (v, u) = (eval_mirrored(y), eval_mirrored(x));
                -poisson_bracket(&v, &u).unwrap()
            }
        }
    }

    fn arb_expr(leaves: Vec<u8>) -> BoxedStrategy<Expr> {
        if leaves.len() == 1 {
            return Just(Expr::Gen(leaves[0])).boxed();
        }
        (1..leaves.len(), any::<bool>())
            .prop_flat_map(move |(cut, is_dot)| {
                (arb_expr(leaves[..cut].to_vec()), arb_expr(leaves[cut..].to_vec()), Just(is_dot))
            })
            .prop_map(|(l, r, is_dot)| {
                if is_dot {
                    Expr::Dot(Box::new(l), Box::new(r))
                } else {
                    Expr::Bracket(Box::new(l), Box::new(r))
                }
            })
            .boxed()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn reduction_order_is_irrelevant(
            e in (1usize..=5)
                .prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<_>>()).prop_shuffle())
                .prop_flat_map(arb_expr)
        ) {
            prop_assert_eq!(eval(&e), eval_mirrored(&e));
        }
    }
}
