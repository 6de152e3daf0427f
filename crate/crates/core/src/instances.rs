//! Concrete algebras: the polynomial ring `F[X,Y]` with the symplectic
//! bracket, and small Lie and Poisson algebras given by structure constants.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::axioms::{AxiomViolation, BilinearTable, PoissonStructure};
use crate::lincomb::LinearCombination;
use crate::relations::{degree3_symmetries, pts_relations};
use crate::scalar::{from_int, parse_scalar, Scalar};
use crate::ternary::{TernaryAlgebra, TernaryOp};
use crate::{Error, Rational, Result};

pub const MAX_SAMPLE_DEGREE: u32 = 6;

/// Sparse polynomial in `X` and `Y`, keyed by `(deg_X, deg_Y)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePoly<T> {
    terms: LinearCombination<(u32, u32), T>,
}

impl<T: Scalar> BivariatePoly<T> {
    pub fn zero() -> Self {
        Self { terms: LinearCombination::zero() }
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(dx: u32, dy: u32, c: T) -> Self {
        Self { terms: LinearCombination::term((dx, dy), c) }
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, T::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, T::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> T {
        self.terms.coeff(&(dx, dy))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &T)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { terms: self.terms.clone() + other.terms.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { terms: self.terms.clone() - other.terms.clone() }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self { terms: self.terms.scaled(c) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LinearCombination::zero();
        for ((a, b), c) in self.terms.iter() {
            for ((d, e), f) in other.terms.iter() {
                out.add_term((a + d, b + e), c.clone() * f.clone());
            }
        }
        Self { terms: out }
    }

    pub fn d_x(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|((a, _), _)| *a > 0)
            .map(|((a, b), c)| ((a - 1, *b), c.clone() * from_int(*a as i64)))
            .collect();
        Self { terms }
    }

    pub fn d_y(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|((_, b), _)| *b > 0)
            .map(|((a, b), c)| ((*a, b - 1), c.clone() * from_int(*b as i64)))
            .collect();
        Self { terms }
    }
}

impl<T: Scalar> fmt::Debug for BivariatePoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((a, b), c)| format!("({c})X^{a}Y^{b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<T: Scalar> Serialize for BivariatePoly<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<(u32, u32, String)> = self.terms.iter().map(|((a, b), c)| (*a, *b, c.to_string())).collect();
        v.serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for BivariatePoly<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let v: Vec<(u32, u32, String)> = Vec::deserialize(d)?;
        let mut terms = LinearCombination::zero();
        for (a, b, c) in v {
            terms.add_term((a, b), parse_scalar::<T>(&c).map_err(D::Error::custom)?);
        }
        Ok(Self { terms })
    }
}

pub fn poly_dot<T: Scalar>(f: &BivariatePoly<T>, g: &BivariatePoly<T>) -> BivariatePoly<T> {
    f.mul(g)
}

/// `[f,g] = f_X g_Y - f_Y g_X`.
pub fn poly_bracket<T: Scalar>(f: &BivariatePoly<T>, g: &BivariatePoly<T>) -> BivariatePoly<T> {
    f.d_x().mul(&g.d_y()).sub(&f.d_y().mul(&g.d_x()))
}

/// The three ternary operations of `F[X,Y]` in closed form:
/// `⟨f,g,h⟩ = fgh`, `(f,g,h) = (f_X g_Y - f_Y g_X) h`, and
/// `[f,g,h] = ∂_X(f_X g_Y - f_Y g_X) h_Y - ∂_Y(f_X g_Y - f_Y g_X) h_X`.
pub fn poly_ternary<T: Scalar>(
    f: &BivariatePoly<T>,
    g: &BivariatePoly<T>,
    h: &BivariatePoly<T>,
) -> (BivariatePoly<T>, BivariatePoly<T>, BivariatePoly<T>) {
    let jac = f.d_x().mul(&g.d_y()).sub(&f.d_y().mul(&g.d_x()));
    let sym = f.mul(g).mul(h);
    let skew = jac.mul(h);
    let lie = jac.d_x().mul(&h.d_y()).sub(&jac.d_y().mul(&h.d_x()));
    (sym, skew, lie)
}

/// `F[X,Y]` viewed as a triple system through [`poly_ternary`].
pub struct PolynomialTriples;

impl<T: Scalar> TernaryAlgebra<T> for PolynomialTriples {
    type Elem = BivariatePoly<T>;

    fn zero(&self) -> Self::Elem {
        BivariatePoly::zero()
    }

    fn add_scaled(&self, acc: &mut Self::Elem, x: &Self::Elem, c: &T) {
        *acc = acc.add(&x.scale(c));
    }

    fn ternary(&self, op: TernaryOp, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Result<Self::Elem> {
        let (s, k, l) = poly_ternary(a, b, c);
        Ok(match op {
            TernaryOp::Sym => s,
            TernaryOp::Skew => k,
            TernaryOp::Lie => l,
        })
    }
}

/// A random polynomial with at most four terms, total degree at most
/// `max_degree` and coefficients in `-9..=9`.
pub fn random_poly<T: Scalar>(rng: &mut impl Rng, max_degree: u32) -> BivariatePoly<T> {
    let mut p = BivariatePoly::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let total = rng.gen_range(0..=max_degree);
        let dx = rng.gen_range(0..=total);
        p = p.add(&BivariatePoly::monomial(dx, total - dx, from_int(rng.gen_range(-9..=9))));
    }
    p
}

/// Evaluates the degree-3 symmetries and the nine degree-5 relations on
/// seeded random polynomials.
pub fn sampled_pts_check(
    seed: u64,
    trials: usize,
    max_degree: u32,
) -> Result<Vec<AxiomViolation<BivariatePoly<Rational>>>> {
    if max_degree > MAX_SAMPLE_DEGREE {
        return Err(Error::SizeLimit {
            what: "polynomial degree",
            value: max_degree as usize,
            min: 0,
            max: MAX_SAMPLE_DEGREE as usize,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let symmetries = degree3_symmetries();
    let relations = pts_relations();
    let mut out = Vec::new();
    for trial in 0..trials {
        let polys: Vec<BivariatePoly<Rational>> = (0..5).map(|_| random_poly(&mut rng, max_degree)).collect();
        for r in symmetries.iter().chain(&relations) {
            let assign = |a: u8| polys[a as usize - 1].clone();
            let (first, rest) = r.expr.terms.split_first().expect("nonempty");
            let left = PolynomialTriples.eval_tree(&first.1, &assign)?.scale(&from_int(first.0));
            let mut right = BivariatePoly::zero();
            for (c, t) in rest {
                right = right.add(&PolynomialTriples.eval_tree(t, &assign)?.scale(&from_int(-c)));
            }
            if left != right {
                out.push(AxiomViolation { axiom: r.name.to_string(), indices: vec![trial], left, right });
            }
        }
    }
    Ok(out)
}

/// Lie algebra with `[e_i, e_j] = Σ c e_k` for each `(i, j, k, c)` with
/// `i < j`, extended by antisymmetry; the product is zero.
pub fn lie_algebra<T: Scalar>(dim: usize, brackets: &[(usize, usize, usize, i64)]) -> PoissonStructure<T> {
    let mut b = BilinearTable::<T>::zero(dim);
    for &(i, j, k, c) in brackets {
        b.set(i, j, k, b.get(i, j, k).clone() + from_int::<T>(c));
        b.set(j, i, k, b.get(j, i, k).clone() - from_int::<T>(c));
    }
    PoissonStructure::new(BilinearTable::zero(dim), b).expect("same dimension")
}

/// `[e1, e2] = e1`.
pub fn lie_algebra_2d<T: Scalar>() -> PoissonStructure<T> {
    lie_algebra(2, &[(0, 1, 0, 1)])
}

/// `[e1,e2] = e3`, `[e2,e3] = e1`, `[e3,e1] = e2`.
pub fn lie_so3<T: Scalar>() -> PoissonStructure<T> {
    lie_algebra(3, &[(0, 1, 2, 1), (1, 2, 0, 1), (0, 2, 1, -1)])
}

/// Basis `h, e, f` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn lie_sl2<T: Scalar>() -> PoissonStructure<T> {
    lie_algebra(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])
}

/// `[e1, e2] = e3` with `e3` central.
pub fn lie_heisenberg<T: Scalar>() -> PoissonStructure<T> {
    lie_algebra(3, &[(0, 1, 2, 1)])
}

/// `F[x]/(x²)` with basis `1, x` and zero bracket.
pub fn poisson_dual_numbers<T: Scalar>() -> PoissonStructure<T> {
    let mut dot = BilinearTable::zero(2);
    dot.set(0, 0, 0, T::one());
    dot.set(0, 1, 1, T::one());
    dot.set(1, 0, 1, T::one());
    PoissonStructure::new(dot, BilinearTable::zero(2)).expect("same dimension")
}

/// `F[x,y]/(x², xy, y²)` with basis `1, x, y` and `[x, y] = x`.
pub fn poisson_truncated_plane<T: Scalar>() -> PoissonStructure<T> {
    let mut dot = BilinearTable::zero(3);
    dot.set(0, 0, 0, T::one());
    for i in 1..3 {
        dot.set(0, i, i, T::one());
        dot.set(i, 0, i, T::one());
    }
    let mut p = lie_algebra::<T>(3, &[(1, 2, 1, 1)]);
    p.dot = dot;
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_poisson;

    type Q = Rational;
    type P = BivariatePoly<Q>;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(poly_bracket(&P::x(), &P::y()), P::constant(q(1)));
        let f = P::x().mul(&P::y()).add(&P::monomial(3, 0, q(2)));
        assert!(poly_bracket(&f, &f).is_zero());
        let x2 = P::x().mul(&P::x());
        assert_eq!(poly_bracket(&x2, &P::y()), P::x().scale(&q(2)));
    }

    #[test]
    fn ternary_examples() {
        let (s, _, _) = poly_ternary(&P::x(), &P::y(), &P::constant(q(1)));
        assert_eq!(s, P::x().mul(&P::y()));
        let h = P::monomial(2, 3, q(-4)).add(&P::y());
        let (_, k, l) = poly_ternary(&P::x(), &P::y(), &h);
        assert_eq!(k, h);
        assert!(l.is_zero());
    }

    #[test]
    fn relation_eight_on_fixed_polynomials() {
        // (f,g,h,k,l) = (X, Y, X, Y, XY): [a,b,[c,d,e]] with [X,Y] = 1 constant, so
        // the left side and the first two right-hand terms vanish; [c,d,[a,b,e]] also
        // vanishes since [a,b,e] = 0. Hand computation: both sides are 0.
        let (x, y) = (P::x(), P::y());
        let xy = x.mul(&y);
        let lie = |a: &P, b: &P, c: &P| poly_ternary(a, b, c).2;
        let lhs = lie(&x, &y, &lie(&x, &y, &xy));
        let rhs =
            lie(&lie(&x, &y, &x), &y, &xy).add(&lie(&x, &lie(&x, &y, &y), &xy)).add(&lie(&x, &y, &lie(&x, &y, &xy)));
        assert_eq!(lhs, rhs);
        assert!(lhs.is_zero());
        // a nontrivial instance: [X², Y, XY] = ∂X(2X)·X - ∂Y(2X)·Y = 2X
        let x2 = x.mul(&x);
        assert_eq!(lie(&x2, &y, &xy), x.scale(&q(2)));
    }

    #[test]
    fn displayed_lie_formula_is_iterated_bracket() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let (f, g, h) = (random_poly::<Q>(&mut rng, 6), random_poly(&mut rng, 6), random_poly(&mut rng, 6));
            let (_, k, l) = poly_ternary(&f, &g, &h);
            assert_eq!(l, poly_bracket(&poly_bracket(&f, &g), &h));
            assert_eq!(k, poly_dot(&poly_bracket(&f, &g), &h));
        }
    }

    #[test]
    fn bracket_is_poisson() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let (f, g, h) = (random_poly::<Q>(&mut rng, 6), random_poly(&mut rng, 6), random_poly(&mut rng, 6));
            let jac = poly_bracket(&poly_bracket(&f, &g), &h)
                .add(&poly_bracket(&poly_bracket(&g, &h), &f))
                .add(&poly_bracket(&poly_bracket(&h, &f), &g));
            assert!(jac.is_zero());
            let leibniz = poly_bracket(&f, &g.mul(&h));
            assert_eq!(leibniz, poly_bracket(&f, &g).mul(&h).add(&g.mul(&poly_bracket(&f, &h))));
        }
    }

    #[test]
    fn sampled_check() {
        assert!(sampled_pts_check(1, 0, 6).unwrap().is_empty());
        assert!(sampled_pts_check(1, 10, 4).unwrap().is_empty());
        assert!(sampled_pts_check(1, 1, 7).is_err());
    }

    #[test]
    fn fixtures_are_poisson() {
        assert!(check_poisson(&lie_sl2::<Q>()).is_empty());
        assert!(check_poisson(&lie_heisenberg::<Q>()).is_empty());
        assert!(check_poisson(&poisson_dual_numbers::<Q>()).is_empty());
        assert!(check_poisson(&poisson_truncated_plane::<Q>()).is_empty());
    }

    #[test]
    fn serde_triples() {
        let p = P::monomial(2, 1, Q::new(3.into(), 4.into()));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[[2,1,"3/4"]]"#);
        assert_eq!(serde_json::from_str::<P>(&s).unwrap(), p);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(32))]

        #[test]
        fn jacobi_and_leibniz_sampled(seed in proptest::prelude::any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (f, g, h) = (random_poly::<Q>(&mut rng, 6), random_poly(&mut rng, 6), random_poly(&mut rng, 6));
            let jac = poly_bracket(&poly_bracket(&f, &g), &h)
                .add(&poly_bracket(&poly_bracket(&g, &h), &f))
                .add(&poly_bracket(&poly_bracket(&h, &f), &g));
            proptest::prop_assert!(jac.is_zero());
            let lhs = poly_bracket(&f, &g.mul(&h));
            proptest::prop_assert_eq!(lhs, poly_bracket(&f, &g).mul(&h).add(&g.mul(&poly_bracket(&f, &h))));
            proptest::prop_assert_eq!(poly_ternary(&f, &g, &h).2, poly_bracket(&poly_bracket(&f, &g), &h));
        }
    }
}
