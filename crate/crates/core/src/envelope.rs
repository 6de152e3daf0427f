//! Enveloping Poisson algebra of a finite-dimensional triple system on the
//! space `T ⊕ (T ⊗ T)`.
//!
//! Basis order: `e_i` at index `i`, then `e_i ⊗ e_j` at `d + i·d + j`.

use serde_json::Value;

use crate::axioms::{
    add, axpy, check_poisson, check_poisson_sampled, check_pts, scale, sub, unit, AxiomViolation, BilinearTable,
    PTSStructure, PoissonStructure, Vector,
};
use crate::scalar::{half, Scalar};
use crate::{Error, Result};

/// Largest base dimension checked on every basis triple.
pub const EXHAUSTIVE_ENVELOPE_BASE_DIM: usize = 3;

/// Sampled triples for larger bases.
pub const ENVELOPE_SAMPLE_TRIALS: usize = 10_000;

/// Seed used by [`verify_envelope`] in sampled mode.
pub const ENVELOPE_SAMPLE_SEED: u64 = 0;

#[derive(Clone, Debug, PartialEq)]
pub struct EnvelopeElement<T> {
    pub linear_part: Vector<T>,
    pub tensor_part: Vec<Vector<T>>,
}

impl<T: Scalar> EnvelopeElement<T> {
    pub fn from_vector(d: usize, v: &[T]) -> Result<Self> {
        if v.len() != d + d * d {
            return Err(Error::Arity { expected: d + d * d, got: v.len() });
        }
        Ok(Self { linear_part: v[..d].to_vec(), tensor_part: v[d..].chunks(d.max(1)).map(<[T]>::to_vec).collect() })
    }

    pub fn to_vector(&self) -> Vector<T> {
        let mut v = self.linear_part.clone();
        for row in &self.tensor_part {
            v.extend(row.iter().cloned());
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnvelopeStructure<T> {
    pub base: PTSStructure<T>,
    pub algebra: PoissonStructure<T>,
}

impl<T: Scalar> EnvelopeStructure<T> {
    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn tensor_index(&self, i: usize, j: usize) -> usize {
        let d = self.base_dim();
        d + i * d + j
    }

    pub fn generator(&self, i: usize) -> Vector<T> {
        unit(self.dim(), i)
    }

    pub fn tensor(&self, i: usize, j: usize) -> Vector<T> {
        unit(self.dim(), self.tensor_index(i, j))
    }

    pub fn to_json(&self) -> Value {
        self.algebra.to_json()
    }
}

struct Model<'a, T> {
    t: &'a PTSStructure<T>,
    d: usize,
    half: T,
}

impl<T: Scalar> Model<'_, T> {
    fn n(&self) -> usize {
        self.d + self.d * self.d
    }

    fn embed(&self, x: &[T]) -> Vector<T> {
        let mut v = vec![T::zero(); self.n()];
        v[..self.d].clone_from_slice(x);
        v
    }

    /// `x ⊗ y` for `x, y ∈ T`.
    fn tensor(&self, x: &[T], y: &[T]) -> Vector<T> {
        let mut v = vec![T::zero(); self.n()];
        for (i, a) in x.iter().enumerate() {
            if !a.is_zero() {
                axpy(&mut v[self.d + i * self.d..self.d + (i + 1) * self.d], a, y);
            }
        }
        v
    }

    /// `x·y = (x⊗y + y⊗x)/2`.
    fn sym(&self, x: &[T], y: &[T]) -> Vector<T> {
        scale(&self.half, &add(&self.tensor(x, y), &self.tensor(y, x)))
    }

    /// `[x,y] = (x⊗y - y⊗x)/2`.
    fn skew(&self, x: &[T], y: &[T]) -> Vector<T> {
        scale(&self.half, &sub(&self.tensor(x, y), &self.tensor(y, x)))
    }

    fn f(&self, a: usize, b: usize, c: usize) -> &[T] {
        self.t.f.product(a, b, c)
    }

    fn g(&self, a: usize, b: usize, c: usize) -> &[T] {
        self.t.g.product(a, b, c)
    }

    fn h(&self, a: usize, b: usize, c: usize) -> &[T] {
        self.t.h.product(a, b, c)
    }

    fn e(&self, i: usize) -> Vector<T> {
        unit(self.d, i)
    }

    /// `a·(b⊗c) = ⟨a,b,c⟩ + (b,c,a)`.
    fn dot_mixed(&self, a: usize, b: usize, c: usize) -> Vector<T> {
        self.embed(&add(self.f(a, b, c), self.g(b, c, a)))
    }

    /// `[a, b⊗c] = (a,b,c) + (a,c,b) - [b,c,a]`.
    fn bracket_mixed(&self, a: usize, b: usize, c: usize) -> Vector<T> {
        self.embed(&sub(&add(self.g(a, b, c), self.g(a, c, b)), self.h(b, c, a)))
    }

    /// `(a⊗b)·(c⊗d) = ⟨a,b,c⟩·d + (c,d,a)·b + (a,b,c)·d + [a,b]·[c,d]`,
    /// with `[a,b]·[c,d] = [a, (c,d,b)] + b·[c,d,a]` by the Leibniz rule.
    fn dot_tensors(&self, a: usize, b: usize, c: usize, d: usize) -> Vector<T> {
        let (eb, ed) = (self.e(b), self.e(d));
        let mut v = self.sym(self.f(a, b, c), &ed);
        v = add(&v, &self.sym(self.g(c, d, a), &eb));
        v = add(&v, &self.sym(self.g(a, b, c), &ed));
        v = add(&v, &self.skew(&self.e(a), self.g(c, d, b)));
        add(&v, &self.sym(&eb, self.h(c, d, a)))
    }

    fn bracket_tensors(&self, a: usize, b: usize, c: usize, d: usize) -> Vector<T> {
        let (ea, eb, ec, ed) = (self.e(a), self.e(b), self.e(c), self.e(d));
        let mut v = self.sym(self.g(a, c, b), &ed);
        v = add(&v, &self.sym(self.g(b, c, a), &ed));
        v = add(&v, &self.sym(self.g(a, d, b), &ec));
        v = add(&v, &self.sym(self.g(b, d, a), &ec));
        v = add(&v, &self.sym(self.h(a, b, c), &ed));
        v = add(&v, &self.sym(self.h(a, b, d), &ec));
        v = sub(&v, &self.tensor(self.h(c, d, a), &eb));
        sub(&v, &self.tensor(&ea, self.h(c, d, b)))
    }
}

/// Builds the product and bracket tables on `T ⊕ (T ⊗ T)`.
///
/// Unless `force` is set, `t` must pass [`check_pts`].
pub fn build_envelope<T: Scalar>(t: &PTSStructure<T>, force: bool) -> Result<EnvelopeStructure<T>> {
    if !force {
        let violations = check_pts(t);
        if !violations.is_empty() {
            return Err(Error::Precondition {
                message: "input is not a Poisson triple system".into(),
                violations: violations.iter().map(AxiomViolation::to_strings).collect(),
            });
        }
    }
    let d = t.dim();
    let m = Model { t, d, half: half() };
    let n = m.n();
    // basis index -> either a generator or a pair
    let split = |x: usize| if x < d { Err(x) } else { Ok(((x - d) / d, (x - d) % d)) };
    let mut dot = BilinearTable::zero(n);
    let mut bracket = BilinearTable::zero(n);
    for x in 0..n {
        for y in 0..n {
            let (p, q) = match (split(x), split(y)) {
                (Err(i), Err(j)) => (m.sym(&m.e(i), &m.e(j)), m.skew(&m.e(i), &m.e(j))),
                (Err(a), Ok((b, c))) => (m.dot_mixed(a, b, c), m.bracket_mixed(a, b, c)),
                (Ok((b, c)), Err(a)) => (m.dot_mixed(a, b, c), scale(&-T::one(), &m.bracket_mixed(a, b, c))),
                (Ok((a, b)), Ok((c, e))) => (m.dot_tensors(a, b, c, e), m.bracket_tensors(a, b, c, e)),
            };
            for k in 0..n {
                dot.set(x, y, k, p[k].clone());
                bracket.set(x, y, k, q[k].clone());
            }
        }
    }
    let algebra = PoissonStructure::new(dot, bracket)?;
    Ok(EnvelopeStructure { base: t.clone(), algebra })
}

/// Poisson axioms on the envelope: every basis triple when the base has
/// dimension at most [`EXHAUSTIVE_ENVELOPE_BASE_DIM`], otherwise
/// [`ENVELOPE_SAMPLE_TRIALS`] seeded triples.
pub fn verify_envelope<T: Scalar>(e: &EnvelopeStructure<T>) -> Vec<AxiomViolation<Vector<T>>> {
    if e.base_dim() <= EXHAUSTIVE_ENVELOPE_BASE_DIM {
        check_poisson(&e.algebra)
    } else {
        check_poisson_sampled(&e.algebra, ENVELOPE_SAMPLE_SEED, ENVELOPE_SAMPLE_TRIALS)
    }
}

/// `e_i ↦ ē_i`.
pub fn canonical_map<T: Scalar>(t: &PTSStructure<T>) -> Vec<EnvelopeElement<T>> {
    let d = t.dim();
    (0..d).map(|i| EnvelopeElement { linear_part: unit(d, i), tensor_part: vec![vec![T::zero(); d]; d] }).collect()
}

/// Compares `ā·b̄·c̄`, `[ā,b̄]·c̄` and `[[ā,b̄],c̄]` with the images of
/// `⟨a,b,c⟩`, `(a,b,c)` and `[a,b,c]` on all basis triples.
pub fn check_canonical_map<T: Scalar>(e: &EnvelopeStructure<T>) -> Vec<AxiomViolation<Vector<T>>> {
    let d = e.base_dim();
    let p = &e.algebra;
    let images: Vec<Vector<T>> = canonical_map(&e.base).iter().map(EnvelopeElement::to_vector).collect();
    let embed = |x: &[T]| {
        let mut v = vec![T::zero(); e.dim()];
        v[..d].clone_from_slice(x);
        v
    };
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (a, b, c) = (&images[i], &images[j], &images[k]);
                let checks = [
                    ("image of <>", p.dot(&p.dot(a, b), c), embed(e.base.f.product(i, j, k))),
                    ("image of ()", p.dot(&p.bracket(a, b), c), embed(e.base.g.product(i, j, k))),
                    ("image of []", p.bracket(&p.bracket(a, b), c), embed(e.base.h.product(i, j, k))),
                ];
                for (axiom, left, right) in checks {
                    if left != right {
                        out.push(AxiomViolation { axiom: axiom.into(), indices: vec![i, j, k], left, right });
                    }
                }
            }
        }
    }
    out
}

/// Compares `(ā·b̄)·(c̄·d̄)` computed through the tensor-tensor product with
/// `((ā·b̄)·c̄)·d̄` computed through mixed products only.
pub fn check_product_consistency<T: Scalar>(e: &EnvelopeStructure<T>) -> Vec<AxiomViolation<Vector<T>>> {
    let d = e.base_dim();
    let p = &e.algebra;
    let mut out = Vec::new();
    for n in 0..d.pow(4) {
        let idx = [n / d.pow(3), (n / (d * d)) % d, (n / d) % d, n % d];
        let [a, b, c, x] = idx.map(|i| e.generator(i));
        let ab = p.dot(&a, &b);
        let left = p.dot(&ab, &p.dot(&c, &x));
        let right = p.dot(&p.dot(&ab, &c), &x);
        if left != right {
            out.push(AxiomViolation { axiom: "tensor product consistency".into(), indices: idx.to_vec(), left, right });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{pts_from_operations, pts_from_poisson, random_trilinear};
    use crate::instances::{lie_algebra_2d, lie_heisenberg, lie_so3, poisson_dual_numbers};
    use crate::Rational as Q;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn zero_pts_one_dim() {
        let e = build_envelope(&PTSStructure::<Q>::zero(1), false).unwrap();
        assert_eq!(e.dim(), 2);
        let g = e.generator(0);
        assert_eq!(e.algebra.dot(&g, &g), e.tensor(0, 0));
        assert!(e.algebra.bracket(&g, &g).iter().all(|x| *x == q(0)));
        assert!(verify_envelope(&e).is_empty());
    }

    #[test]
    fn zero_pts_tensor_products_vanish() {
        let e = build_envelope(&PTSStructure::<Q>::zero(2), false).unwrap();
        assert_eq!(e.dim(), 6);
        for (i, j, k, l) in [(0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 1, 0)] {
            let (x, y) = (e.tensor(i, j), e.tensor(k, l));
            assert!(e.algebra.dot(&x, &y).iter().all(|c| *c == q(0)));
            assert!(e.algebra.bracket(&x, &y).iter().all(|c| *c == q(0)));
        }
        assert!(verify_envelope(&e).is_empty());
        assert!(check_canonical_map(&e).is_empty());
    }

    #[test]
    fn lie_mixed_products() {
        let t = pts_from_poisson(&lie_algebra_2d::<Q>()).unwrap();
        let e = build_envelope(&t, false).unwrap();
        let p = &e.algebra;
        let x = e.tensor(0, 1);
        assert!(p.bracket(&x, &x).iter().all(|c| *c == q(0)));
        // [e1, e1⊗e2] = -[e1,e2,e1] = 0 and [e2, e1⊗e2] = -[e1,e2,e2] = -e1
        assert!(p.bracket(&e.generator(0), &x).iter().all(|c| *c == q(0)));
        assert_eq!(p.bracket(&e.generator(1), &x), scale(&q(-1), &e.generator(0)));
    }

    #[test]
    fn canonical_map_recovers_operations() {
        for t in [
            pts_from_poisson(&lie_algebra_2d::<Q>()).unwrap(),
            pts_from_poisson(&lie_so3::<Q>()).unwrap(),
            pts_from_poisson(&poisson_dual_numbers::<Q>()).unwrap(),
        ] {
            let e = build_envelope(&t, false).unwrap();
            assert!(check_canonical_map(&e).is_empty());
            let images = canonical_map(&t);
            assert_eq!(images.len(), t.dim());
            assert_eq!(EnvelopeElement::from_vector(t.dim(), &images[0].to_vector()).unwrap(), images[0]);
        }
    }

    #[test]
    fn heisenberg_envelope_is_poisson() {
        let t = pts_from_poisson(&lie_heisenberg::<Q>()).unwrap();
        let e = build_envelope(&t, false).unwrap();
        assert_eq!(e.dim(), 12);
        assert!(verify_envelope(&e).is_empty());
        assert!(check_product_consistency(&e).is_empty());
    }

    #[test]
    fn dual_numbers_tensor_products() {
        // basis 1, x: (1⊗1)·(x⊗x) = ⟨1,1,x⟩·x = x⊗x, (x⊗x)·(1⊗1) = ⟨x,x,1⟩·1 = 0
        let t = pts_from_poisson(&poisson_dual_numbers::<Q>()).unwrap();
        let e = build_envelope(&t, false).unwrap();
        let (one, xx) = (e.tensor(0, 0), e.tensor(1, 1));
        assert_eq!(e.algebra.dot(&one, &xx), xx);
        assert!(e.algebra.dot(&xx, &one).iter().all(|c| *c == q(0)));
        let v = verify_envelope(&e);
        assert!(v.iter().any(|x| x.axiom == "commutativity" && x.indices == [2, 5]));
    }

    #[test]
    fn non_pts_needs_override() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let t = PTSStructure::new(
            random_trilinear::<Q>(2, 3, &mut rng),
            random_trilinear(2, 3, &mut rng),
            random_trilinear(2, 3, &mut rng),
        )
        .unwrap();
        assert!(matches!(build_envelope(&t, false), Err(Error::Precondition { .. })));
        let e = build_envelope(&t, true).unwrap();
        assert!(!verify_envelope(&e).is_empty());
    }

    #[test]
    fn export_round_trips_through_structure_file() {
        use crate::axioms::StructureFile;
        let t = pts_from_operations(&lie_algebra_2d::<Q>());
        let e = build_envelope(&t, false).unwrap();
        let text = e.to_json().to_string();
        let StructureFile::Poisson(p) = StructureFile::<Q>::parse(&text).unwrap() else { panic!() };
        assert_eq!(p, e.algebra);
    }
}
