//! Finite-dimensional Poisson algebras and Poisson triple systems given by
//! structure constants, with exact axiom checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::relations::{degree3_symmetries, pts_relations, NamedExpr};
use crate::scalar::{from_int, half, parse_scalar, Scalar};
use crate::ternary::{TernaryAlgebra, TernaryOp};
use crate::{Error, Result};

/// Diagnostics stop after this many violations.
pub const MAX_VIOLATIONS: usize = 100;

/// Largest dimension for which triple systems are checked on every tuple.
pub const EXHAUSTIVE_PTS_DIM: usize = 4;

pub type Vector<T> = Vec<T>;

pub fn unit<T: Scalar>(dim: usize, i: usize) -> Vector<T> {
    let mut v = vec![T::zero(); dim];
    v[i] = T::one();
    v
}

pub(crate) fn axpy<T: Scalar>(acc: &mut [T], c: &T, x: &[T]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(x) {
        if !b.is_zero() {
            *a = a.clone() + c.clone() * b.clone();
        }
    }
}

pub(crate) fn add<T: Scalar>(x: &[T], y: &[T]) -> Vector<T> {
    x.iter().zip(y).map(|(a, b)| a.clone() + b.clone()).collect()
}

pub(crate) fn sub<T: Scalar>(x: &[T], y: &[T]) -> Vector<T> {
    x.iter().zip(y).map(|(a, b)| a.clone() - b.clone()).collect()
}

pub(crate) fn scale<T: Scalar>(c: &T, x: &[T]) -> Vector<T> {
    x.iter().map(|a| c.clone() * a.clone()).collect()
}

/// Structure constants of a bilinear map: `e_i ∘ e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearTable<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Scalar> BilinearTable<T> {
    pub fn zero(dim: usize) -> Self {
        Self { dim, data: vec![T::zero(); dim * dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector<T>) -> Self {
        let mut t = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                t.data[(i * dim + j) * dim..(i * dim + j + 1) * dim].clone_from_slice(&v);
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: T) {
        self.data[(i * self.dim + j) * self.dim + k] = v;
    }

    /// `e_i ∘ e_j` as a coordinate vector.
    pub fn product(&self, i: usize, j: usize) -> &[T] {
        &self.data[(i * self.dim + j) * self.dim..(i * self.dim + j + 1) * self.dim]
    }

    pub fn apply(&self, x: &[T], y: &[T]) -> Vector<T> {
        let mut out = vec![T::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                axpy(&mut out, &(xi.clone() * yj.clone()), self.product(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    fn transposed(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.product(j, i).to_vec())
    }

    fn combine(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Self { dim: self.dim, data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect() }
    }
}

/// Structure constants of a trilinear map.
#[derive(Clone, Debug, PartialEq)]
pub struct TrilinearTable<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Scalar> TrilinearTable<T> {
    pub fn zero(dim: usize) -> Self {
        Self { dim, data: vec![T::zero(); dim.pow(4)] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Vector<T>) -> Self {
        let mut t = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let base = ((i * dim + j) * dim + k) * dim;
                    t.data[base..base + dim].clone_from_slice(&f(i, j, k));
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &T {
        &self.data[((i * self.dim + j) * self.dim + k) * self.dim + l]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, v: T) {
        let d = self.dim;
        self.data[((i * d + j) * d + k) * d + l] = v;
    }

    pub fn product(&self, i: usize, j: usize, k: usize) -> &[T] {
        let base = ((i * self.dim + j) * self.dim + k) * self.dim;
        &self.data[base..base + self.dim]
    }

    pub fn apply(&self, x: &[T], y: &[T], z: &[T]) -> Vector<T> {
        let mut out = vec![T::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let xy = xi.clone() * yj.clone();
                for (k, zk) in z.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    axpy(&mut out, &(xy.clone() * zk.clone()), self.product(i, j, k));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxiomViolation<V> {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub left: V,
    pub right: V,
}

impl<T: Scalar> AxiomViolation<Vector<T>> {
    pub fn to_strings(&self) -> AxiomViolation<String> {
        let fmt = |v: &[T]| format!("[{}]", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
        AxiomViolation {
            axiom: self.axiom.clone(),
            indices: self.indices.clone(),
            left: fmt(&self.left),
            right: fmt(&self.right),
        }
    }
}

struct Collector<T> {
    out: Vec<AxiomViolation<Vector<T>>>,
}

impl<T: Scalar> Collector<T> {
    fn new() -> Self {
        Self { out: Vec::new() }
    }

    fn full(&self) -> bool {
        self.out.len() >= MAX_VIOLATIONS
    }

    fn check(&mut self, axiom: &str, indices: &[usize], left: Vector<T>, right: Vector<T>) {
        if left != right && !self.full() {
            self.out.push(AxiomViolation { axiom: axiom.to_string(), indices: indices.to_vec(), left, right });
        }
    }
}

/// A commutative product `a·b` and a bracket `[a,b]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonStructure<T> {
    pub dot: BilinearTable<T>,
    pub bracket: BilinearTable<T>,
}

impl<T: Scalar> PoissonStructure<T> {
    pub fn new(dot: BilinearTable<T>, bracket: BilinearTable<T>) -> Result<Self> {
        if dot.dim() != bracket.dim() {
            return Err(Error::Arity { expected: dot.dim(), got: bracket.dim() });
        }
        Ok(Self { dot, bracket })
    }

    pub fn zero(dim: usize) -> Self {
        Self { dot: BilinearTable::zero(dim), bracket: BilinearTable::zero(dim) }
    }

    pub fn dim(&self) -> usize {
        self.dot.dim()
    }

    pub fn dot(&self, x: &[T], y: &[T]) -> Vector<T> {
        self.dot.apply(x, y)
    }

    pub fn bracket(&self, x: &[T], y: &[T]) -> Vector<T> {
        self.bracket.apply(x, y)
    }
}

/// A single bilinear operation `ab` without symmetry.
#[derive(Clone, Debug, PartialEq)]
pub struct DepolarizedStructure<T> {
    pub prod: BilinearTable<T>,
}

impl<T: Scalar> DepolarizedStructure<T> {
    pub fn dim(&self) -> usize {
        self.prod.dim()
    }
}

/// Three trilinear operations `⟨a,b,c⟩`, `(a,b,c)`, `[a,b,c]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PTSStructure<T> {
    pub f: TrilinearTable<T>,
    pub g: TrilinearTable<T>,
    pub h: TrilinearTable<T>,
}

impl<T: Scalar> PTSStructure<T> {
    pub fn new(f: TrilinearTable<T>, g: TrilinearTable<T>, h: TrilinearTable<T>) -> Result<Self> {
        for t in [&g, &h] {
            if t.dim() != f.dim() {
                return Err(Error::Arity { expected: f.dim(), got: t.dim() });
            }
        }
        Ok(Self { f, g, h })
    }

    pub fn zero(dim: usize) -> Self {
        Self { f: TrilinearTable::zero(dim), g: TrilinearTable::zero(dim), h: TrilinearTable::zero(dim) }
    }

    pub fn dim(&self) -> usize {
        self.f.dim()
    }

    pub fn table(&self, op: TernaryOp) -> &TrilinearTable<T> {
        match op {
            TernaryOp::Sym => &self.f,
            TernaryOp::Skew => &self.g,
            TernaryOp::Lie => &self.h,
        }
    }
}

impl<T: Scalar> TernaryAlgebra<T> for PTSStructure<T> {
    type Elem = Vector<T>;

    fn zero(&self) -> Vector<T> {
        vec![T::zero(); self.dim()]
    }

    fn add_scaled(&self, acc: &mut Vector<T>, x: &Vector<T>, c: &T) {
        axpy(acc, c, x);
    }

    fn ternary(&self, op: TernaryOp, a: &Vector<T>, b: &Vector<T>, c: &Vector<T>) -> Result<Vector<T>> {
        Ok(self.table(op).apply(a, b, c))
    }
}

fn triples(d: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..d * d * d).map(move |n| [n / (d * d), (n / d) % d, n % d])
}

/// Checks commutativity, anticommutativity, associativity, Jacobi and
/// Leibniz on all basis tuples.
pub fn check_poisson<T: Scalar>(p: &PoissonStructure<T>) -> Vec<AxiomViolation<Vector<T>>> {
    check_poisson_on(p, triples(p.dim()))
}

/// Checks the binary axioms on every pair and the ternary axioms on
/// `trials` seeded random triples of basis vectors.
pub fn check_poisson_sampled<T: Scalar>(
    p: &PoissonStructure<T>,
    seed: u64,
    trials: usize,
) -> Vec<AxiomViolation<Vector<T>>> {
    let d = p.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample: Vec<[usize; 3]> = (0..trials).map(|_| [0; 3].map(|_| rng.gen_range(0..d))).collect();
    check_poisson_on(p, sample.into_iter())
}

fn check_poisson_on<T: Scalar>(
    p: &PoissonStructure<T>,
    triples: impl Iterator<Item = [usize; 3]>,
) -> Vec<AxiomViolation<Vector<T>>> {
    let d = p.dim();
    let e = |i| unit::<T>(d, i);
    let mut log = Collector::new();
    for i in 0..d {
        for j in 0..d {
            log.check("commutativity", &[i, j], p.dot.product(i, j).to_vec(), p.dot.product(j, i).to_vec());
            let neg: Vector<T> = p.bracket.product(j, i).iter().map(|x| -x.clone()).collect();
            log.check("anticommutativity", &[i, j], p.bracket.product(i, j).to_vec(), neg);
        }
    }
    let zero = vec![T::zero(); d];
    for [i, j, k] in triples {
        if log.full() {
            break;
        }
        let (a, b, c) = (e(i), e(j), e(k));
        let ab = p.dot(&a, &b);
        log.check("associativity", &[i, j, k], p.dot(&ab, &c), p.dot(&a, &p.dot(&b, &c)));
        let jac = add(
            &add(&p.bracket(&p.bracket(&a, &b), &c), &p.bracket(&p.bracket(&b, &c), &a)),
            &p.bracket(&p.bracket(&c, &a), &b),
        );
        log.check("Jacobi identity", &[i, j, k], jac, zero.clone());
        let lhs = p.bracket(&a, &p.dot(&b, &c));
        let rhs = add(&p.dot(&p.bracket(&a, &b), &c), &p.dot(&b, &p.bracket(&a, &c)));
        log.check("Leibniz rule", &[i, j, k], lhs, rhs);
    }
    log.out
}

/// `a·b = (ab + ba)/2`, `[a,b] = (ab - ba)/2`.
pub fn polarize<T: Scalar>(dd: &DepolarizedStructure<T>) -> PoissonStructure<T> {
    let h = half::<T>();
    let t = dd.prod.transposed();
    PoissonStructure {
        dot: dd.prod.combine(&t, |a, b| (a.clone() + b.clone()) * h.clone()),
        bracket: dd.prod.combine(&t, |a, b| (a.clone() - b.clone()) * h.clone()),
    }
}

/// `ab = a·b + [a,b]`.
pub fn depolarize<T: Scalar>(p: &PoissonStructure<T>) -> DepolarizedStructure<T> {
    DepolarizedStructure { prod: p.dot.combine(&p.bracket, |a, b| a.clone() + b.clone()) }
}

/// Checks `a(bc) = (ab)c - ⅓{(ac)b - (ba)c + (bc)a - (ca)b}` on all basis
/// triples.
pub fn check_depolarized<T: Scalar>(dd: &DepolarizedStructure<T>) -> Vec<AxiomViolation<Vector<T>>> {
    let d = dd.dim();
    let m = |x: &[T], y: &[T]| dd.prod.apply(x, y);
    let third = T::one() / from_int::<T>(3);
    let mut log = Collector::new();
    for [i, j, k] in triples(d) {
        if log.full() {
            break;
        }
        let (a, b, c) = (unit::<T>(d, i), unit::<T>(d, j), unit::<T>(d, k));
        let lhs = m(&a, &m(&b, &c));
        let braces = add(&sub(&m(&m(&a, &c), &b), &m(&m(&b, &a), &c)), &sub(&m(&m(&b, &c), &a), &m(&m(&c, &a), &b)));
        let rhs = sub(&m(&m(&a, &b), &c), &scale(&third, &braces));
        log.check("depolarized Poisson identity", &[i, j, k], lhs, rhs);
    }
    log.out
}

/// `⟨a,b,c⟩ = a·b·c`, `(a,b,c) = [a,b]·c`, `[a,b,c] = [[a,b],c]`.
pub fn pts_from_poisson<T: Scalar>(p: &PoissonStructure<T>) -> Result<PTSStructure<T>> {
    let violations = check_poisson(p);
    if !violations.is_empty() {
        return Err(Error::Precondition {
            message: "input is not a Poisson algebra".into(),
            violations: violations.iter().map(AxiomViolation::to_strings).collect(),
        });
    }
    Ok(pts_from_operations(p))
}

/// The three ternary operations of any pair of bilinear maps, without
/// checking axioms.
pub fn pts_from_operations<T: Scalar>(p: &PoissonStructure<T>) -> PTSStructure<T> {
    let d = p.dim();
    let e = |i| unit::<T>(d, i);
    PTSStructure {
        f: TrilinearTable::from_fn(d, |i, j, k| p.dot(p.dot.product(i, j), &e(k))),
        g: TrilinearTable::from_fn(d, |i, j, k| p.dot(p.bracket.product(i, j), &e(k))),
        h: TrilinearTable::from_fn(d, |i, j, k| p.bracket(p.bracket.product(i, j), &e(k))),
    }
}

fn check_expr<T: Scalar>(t: &PTSStructure<T>, rel: &NamedExpr, idx: &[usize], log: &mut Collector<T>) -> Result<()> {
    let d = t.dim();
    let assign = |a: u8| unit::<T>(d, idx[a as usize - 1]);
    let (first, rest) = rel.expr.terms.split_first().expect("relations are nonempty");
    let mut left = t.eval_tree(&first.1, &assign)?;
    if first.0 != 1 {
        left = scale(&from_int(first.0), &left);
    }
    let mut right = vec![T::zero(); d];
    for (c, tree) in rest {
        axpy(&mut right, &from_int(-c), &t.eval_tree(tree, &assign)?);
    }
    log.check(rel.name, idx, left, right);
    Ok(())
}

/// Every tuple for `dim ≤ 4`, otherwise 10,000 seeded random tuples per
/// relation family.
pub fn check_pts<T: Scalar>(t: &PTSStructure<T>) -> Vec<AxiomViolation<Vector<T>>> {
    if t.dim() <= EXHAUSTIVE_PTS_DIM {
        check_pts_exhaustive(t)
    } else {
        check_pts_sampled(t, 0, 10_000)
    }
}

pub fn check_pts_exhaustive<T: Scalar>(t: &PTSStructure<T>) -> Vec<AxiomViolation<Vector<T>>> {
    let d = t.dim();
    let mut log = Collector::new();
    let symmetries = degree3_symmetries();
    for [i, j, k] in triples(d) {
        for s in &symmetries {
            check_expr(t, s, &[i, j, k], &mut log).expect("fixed arity");
        }
    }
    let relations = pts_relations();
    for n in 0..d.pow(5) {
        if log.full() {
            break;
        }
        let idx = [n / d.pow(4), (n / d.pow(3)) % d, (n / (d * d)) % d, (n / d) % d, n % d];
        for r in &relations {
            check_expr(t, r, &idx, &mut log).expect("fixed arity");
        }
    }
    log.out
}

pub fn check_pts_sampled<T: Scalar>(t: &PTSStructure<T>, seed: u64, trials: usize) -> Vec<AxiomViolation<Vector<T>>> {
    let d = t.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut log = Collector::new();
    let symmetries = degree3_symmetries();
    let relations = pts_relations();
    for _ in 0..trials {
        if log.full() {
            break;
        }
        let idx: Vec<usize> = (0..5).map(|_| rng.gen_range(0..d)).collect();
        for s in &symmetries {
            check_expr(t, s, &idx[..3], &mut log).expect("fixed arity");
        }
        for r in &relations {
            check_expr(t, r, &idx, &mut log).expect("fixed arity");
        }
    }
    log.out
}

fn scalar_json<T: Scalar>(x: &T) -> Value {
    Value::String(x.to_string())
}

fn parse_json_scalar<T: Scalar>(v: &Value, path: &str) -> Result<T> {
    match v {
        Value::String(s) => parse_scalar(s).map_err(|_| Error::Parse(format!("{path}: invalid rational {s:?}"))),
        Value::Number(n) => {
            parse_scalar(&n.to_string()).map_err(|_| Error::Parse(format!("{path}: invalid number {n}")))
        }
        _ => Err(Error::Parse(format!("{path}: expected a \"p/q\" string"))),
    }
}

fn nested_array<'a>(v: &'a Value, len: usize, path: &str) -> Result<&'a Vec<Value>> {
    match v {
        Value::Array(a) if a.len() == len => Ok(a),
        Value::Array(a) => Err(Error::Parse(format!("{path}: expected {len} entries, found {}", a.len()))),
        _ => Err(Error::Parse(format!("{path}: expected an array"))),
    }
}

impl<T: Scalar> BilinearTable<T> {
    pub fn to_json(&self) -> Value {
        let d = self.dim;
        Value::Array(
            (0..d)
                .map(|i| {
                    Value::Array(
                        (0..d).map(|j| Value::Array(self.product(i, j).iter().map(scalar_json).collect())).collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value, dim: usize, key: &str) -> Result<Self> {
        let mut t = Self::zero(dim);
        for (i, vi) in nested_array(v, dim, key)?.iter().enumerate() {
            for (j, vj) in nested_array(vi, dim, &format!("{key}[{i}]"))?.iter().enumerate() {
                for (k, vk) in nested_array(vj, dim, &format!("{key}[{i}][{j}]"))?.iter().enumerate() {
                    t.set(i, j, k, parse_json_scalar(vk, &format!("{key}[{i}][{j}][{k}]"))?);
                }
            }
        }
        Ok(t)
    }
}

impl<T: Scalar> TrilinearTable<T> {
    pub fn to_json(&self) -> Value {
        let d = self.dim;
        Value::Array(
            (0..d)
                .map(|i| {
                    Value::Array(
                        (0..d)
                            .map(|j| {
                                Value::Array(
                                    (0..d)
                                        .map(|k| Value::Array(self.product(i, j, k).iter().map(scalar_json).collect()))
                                        .collect(),
                                )
                            })
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value, dim: usize, key: &str) -> Result<Self> {
        let mut t = Self::zero(dim);
        for (i, vi) in nested_array(v, dim, key)?.iter().enumerate() {
            for (j, vj) in nested_array(vi, dim, &format!("{key}[{i}]"))?.iter().enumerate() {
                for (k, vk) in nested_array(vj, dim, &format!("{key}[{i}][{j}]"))?.iter().enumerate() {
                    for (l, vl) in nested_array(vk, dim, &format!("{key}[{i}][{j}][{k}]"))?.iter().enumerate() {
                        t.set(i, j, k, l, parse_json_scalar(vl, &format!("{key}[{i}][{j}][{k}][{l}]"))?);
                    }
                }
            }
        }
        Ok(t)
    }
}

/// Either kind of structure-constant file.
#[derive(Clone, Debug, PartialEq)]
pub enum StructureFile<T> {
    Poisson(PoissonStructure<T>),
    Pts(PTSStructure<T>),
}

impl<T: Scalar> PoissonStructure<T> {
    pub fn to_json(&self) -> Value {
        serde_json::json!({ "dim": self.dim(), "dot": self.dot.to_json(), "bracket": self.bracket.to_json() })
    }
}

impl<T: Scalar> PTSStructure<T> {
    pub fn to_json(&self) -> Value {
        serde_json::json!({ "dim": self.dim(), "f": self.f.to_json(), "g": self.g.to_json(), "h": self.h.to_json() })
    }
}

impl<T: Scalar> StructureFile<T> {
    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
        let dim = v
            .get("dim")
            .and_then(Value::as_u64)
            .filter(|&d| d > 0)
            .ok_or_else(|| Error::Parse("missing positive integer \"dim\"".into()))? as usize;
        let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("missing key {k:?}")));
        if v.get("dot").is_some() || v.get("bracket").is_some() {
            Ok(Self::Poisson(PoissonStructure {
                dot: BilinearTable::from_json(field("dot")?, dim, "dot")?,
                bracket: BilinearTable::from_json(field("bracket")?, dim, "bracket")?,
            }))
        } else {
            Ok(Self::Pts(PTSStructure {
                f: TrilinearTable::from_json(field("f")?, dim, "f")?,
                g: TrilinearTable::from_json(field("g")?, dim, "g")?,
                h: TrilinearTable::from_json(field("h")?, dim, "h")?,
            }))
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Self::Poisson(p) => p.to_json(),
            Self::Pts(t) => t.to_json(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("values serialize")
    }
}

/// Random structure constants in `-r..=r`, for diagnostics.
pub fn random_bilinear<T: Scalar>(dim: usize, r: i64, rng: &mut impl Rng) -> BilinearTable<T> {
    BilinearTable::from_fn(dim, |_, _| (0..dim).map(|_| from_int(rng.gen_range(-r..=r))).collect())
}

pub fn random_trilinear<T: Scalar>(dim: usize, r: i64, rng: &mut impl Rng) -> TrilinearTable<T> {
    TrilinearTable::from_fn(dim, |_, _, _| (0..dim).map(|_| from_int(rng.gen_range(-r..=r))).collect())
}
