//! Expansion of ternary monomials into the free Poisson algebra and the
//! extraction of all multilinear identities of a given degree as the
//! nullspace of the expansion matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactla::{
    hermite_with_transform, lll_reduce, rank, size_report, sort_rows_by_size, vector_size, BasisSizeReport, Delta,
    EchelonBasis, ExactMatrix,
};
use crate::freepoisson::{generator, poisson_basis, poisson_bracket, poisson_dot, PoissonCombination};
use crate::relations::{pts_relations, NamedExpr};
use crate::scalar::Scalar;
use crate::ternary::{ActionTable, TernaryAlgebra, TernaryCombination, TernaryMonomial, TernaryOp, TernarySpace};
use crate::{Error, Rational, Result};

/// The free Poisson algebra on multilinear generators with
/// `⟨a,b,c⟩ = a·b·c`, `(a,b,c) = [a,b]·c`, `[a,b,c] = [[a,b],c]`.
pub struct FreePoisson;

impl<T: Scalar> TernaryAlgebra<T> for FreePoisson {
    type Elem = PoissonCombination<T>;

    fn zero(&self) -> Self::Elem {
        PoissonCombination::zero()
    }

    fn add_scaled(&self, acc: &mut Self::Elem, x: &Self::Elem, c: &T) {
        acc.add_scaled(x, c);
    }

    fn ternary(&self, op: TernaryOp, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Result<Self::Elem> {
        match op {
            TernaryOp::Sym => poisson_dot(&poisson_dot(a, b)?, c),
            TernaryOp::Skew => poisson_dot(&poisson_bracket(a, b)?, c),
            TernaryOp::Lie => poisson_bracket(&poisson_bracket(a, b)?, c),
        }
    }
}

pub fn expand_monomial<T: Scalar>(m: &TernaryMonomial) -> PoissonCombination<T> {
    FreePoisson.eval_tree(&m.tree(), &|a| generator(a)).expect("canonical monomials are multilinear")
}

pub fn expand<T: Scalar>(x: &TernaryCombination<T>) -> PoissonCombination<T> {
    let mut out = PoissonCombination::zero();
    for (m, c) in x.iter() {
        out.add_scaled(&expand_monomial(m), c);
    }
    out
}

/// Rows indexed by the free Poisson basis, columns by the ternary basis.
pub fn expansion_matrix(degree: usize) -> Result<ExactMatrix> {
    let space = TernarySpace::new(degree)?;
    expansion_matrix_for(&space)
}

fn expansion_matrix_for(space: &TernarySpace) -> Result<ExactMatrix> {
    let pbasis = poisson_basis(space.degree())?;
    let mut m = ExactMatrix::zeros(pbasis.len(), space.dim());
    for (j, t) in space.basis().iter().enumerate() {
        let image: PoissonCombination<Rational> = expand_monomial(t);
        for (pm, c) in image.iter() {
            let i = pbasis.binary_search(pm).expect("normal forms lie in the basis");
            m.set(i, j, c.to_integer());
        }
    }
    Ok(m)
}

/// A homogeneous relation among ternary monomials.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub name: Option<String>,
    pub combo: TernaryCombination<Rational>,
}

impl Relation {
    pub fn from_named(r: &NamedExpr) -> Result<Self> {
        Ok(Self { name: Some(r.name.to_string()), combo: r.expr.canonical()? })
    }

    pub fn from_vector(space: &TernarySpace, v: &[BigInt], name: Option<String>) -> Self {
        let q: Vec<Rational> = v.iter().map(|x| Rational::from_integer(x.clone())).collect();
        Self { name, combo: space.combination(&q) }
    }

    /// Primitive integer coordinates.
    pub fn integer_vector(&self, space: &TernarySpace) -> Vec<BigInt> {
        integer_coordinates(&space.vectorize(&self.combo))
    }

    pub fn degree(&self) -> Option<usize> {
        self.combo.keys().next().map(TernaryMonomial::degree)
    }

    pub fn display(&self) -> String {
        let mut s = String::new();
        for (i, (m, c)) in self.combo.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                s.push_str(if neg { "-" } else { "" });
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                s.push_str(&format!("{abs}"));
            }
            s.push_str(&format!("{}", m.tree()));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    pub fn record(&self) -> RelationRecord {
        RelationRecord {
            name: self.name.clone(),
            display: self.display(),
            terms: self.combo.iter().map(|(m, c)| TermRecord { monomial: m.clone(), coeff: c.to_string() }).collect(),
        }
    }
}

/// Clears denominators and divides by the content.
pub fn integer_coordinates(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = out.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g > BigInt::one() {
        out.iter_mut().for_each(|x| *x /= &g);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    #[serde(flatten)]
    pub monomial: TernaryMonomial,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationRecord {
    pub name: Option<String>,
    pub display: String,
    pub terms: Vec<TermRecord>,
}

pub fn verify_relation(r: &Relation) -> bool {
    expand(&r.combo).is_zero()
}

/// The nine defining relations of a Poisson triple system.
pub fn defining_relations() -> Vec<Relation> {
    pts_relations()
        .iter()
        .map(|r| Relation::from_named(r).expect("defining relations are multilinear of degree 5"))
        .collect()
}

/// Span of the permutation orbits of a set of vectors.
pub struct OrbitSpan<'a> {
    table: &'a ActionTable,
    basis: EchelonBasis,
}

impl<'a> OrbitSpan<'a> {
    pub fn new(table: &'a ActionTable, dim: usize) -> Self {
        Self { table, basis: EchelonBasis::new(dim) }
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.basis.contains(v)
    }

    /// Adds the orbit of `v`; returns whether the span grew.
    pub fn add_orbit(&mut self, v: &[BigInt]) -> bool {
        // the span is stable under the group, so a member brings its orbit along
        if self.basis.contains(v) {
            return false;
        }
        for s in 0..self.table.group.len() {
            self.basis.insert(&self.table.apply(s, v));
        }
        true
    }
}

fn in_kernel(m: &ExactMatrix, v: &[BigInt]) -> bool {
    (0..m.rows()).all(|i| {
        m.row(i)
            .iter()
            .zip(v)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| a * b)
            .sum::<BigInt>()
            .is_zero()
    })
}

/// Greedy scan keeping each relation whose orbit enlarges the span of the
/// orbits of the relations kept so far.
pub fn module_generators(rows: &[Relation]) -> Result<Vec<Relation>> {
    let Some(degree) = rows.iter().find_map(Relation::degree) else {
        return Ok(Vec::new());
    };
    let space = TernarySpace::new(degree)?;
    let m = expansion_matrix_for(&space)?;
    let table = space.action_table()?;
    let vectors: Vec<Vec<BigInt>> = rows.iter().map(|r| r.integer_vector(&space)).collect();
    let indices = generator_indices(&m, &table, space.dim(), &vectors)?;
    Ok(indices.into_iter().map(|i| rows[i].clone()).collect())
}

fn generator_indices(m: &ExactMatrix, table: &ActionTable, dim: usize, vectors: &[Vec<BigInt>]) -> Result<Vec<usize>> {
    let mut span = OrbitSpan::new(table, dim);
    let mut kept = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if !in_kernel(m, v) {
            return Err(Error::NotInKernel(format!("row {i}")));
        }
        if span.add_orbit(v) {
            kept.push(i);
        }
    }
    Ok(kept)
}

/// Rank of the span of all permutation images of the given relations.
pub fn orbit_span_rank(candidates: &[Relation]) -> Result<usize> {
    let Some(degree) = candidates.iter().find_map(Relation::degree) else {
        return Ok(0);
    };
    let space = TernarySpace::new(degree)?;
    let table = space.action_table()?;
    let mut span = OrbitSpan::new(&table, space.dim());
    for r in candidates {
        span.add_orbit(&r.integer_vector(&space));
    }
    Ok(span.rank())
}

/// Whether the orbit span of `candidates` is the whole kernel of the
/// expansion map.
pub fn completeness_check(candidates: &[Relation]) -> Result<bool> {
    let Some(degree) = candidates.iter().find_map(Relation::degree) else {
        return Ok(false);
    };
    let space = TernarySpace::new(degree)?;
    let m = expansion_matrix_for(&space)?;
    let nullity = space.dim() - rank(&m);
    if !candidates.iter().all(|r| in_kernel(&m, &r.integer_vector(&space))) {
        return Ok(false);
    }
    Ok(orbit_span_rank(candidates)? == nullity)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LllPass {
    pub delta: Delta,
    pub basis_size: f64,
    pub min_vector_size: String,
    pub max_vector_size: String,
    pub not_larger_than_input: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub degree: usize,
    pub dim_t: usize,
    pub dim_p: usize,
    pub rank: usize,
    pub nullity: usize,
    /// Largest absolute entry of the Hermite transform.
    pub transform_max_entry: String,
    pub size_initial: f64,
    pub lll_passes: Vec<LllPass>,
    pub sizes_after_lll: Vec<f64>,
    pub sorted_first_vector_size: Option<String>,
    pub sorted_last_vector_size: Option<String>,
    pub generator_count: usize,
    pub reference_generator_count: usize,
    pub generator_span_rank: usize,
    pub generators: Vec<RelationRecord>,
    pub defining_relations_hold: bool,
    pub defining_relations_span_rank: usize,
    pub defining_relations_complete: bool,
    pub first_eight_span_rank: usize,
}

/// Matrices produced along the way, for export.
pub struct PipelineArtifacts {
    pub expansion: ExactMatrix,
    pub nullspace: ExactMatrix,
    pub reduced: ExactMatrix,
    pub initial_sizes: BasisSizeReport,
}

pub fn default_deltas() -> Vec<Delta> {
    [(3, 4), (9, 10), (99, 100)].iter().map(|&(p, q)| Delta::ratio(p, q).expect("in range")).collect()
}

/// Expansion matrix, rank, integer nullspace via the Hermite transform, LLL
/// passes at each `delta`, size sort and generator extraction.
pub fn derive_identities(degree: usize, deltas: &[Delta]) -> Result<(PipelineReport, PipelineArtifacts)> {
    let space = TernarySpace::new(degree)?;
    let m = expansion_matrix_for(&space)?;
    let r = rank(&m);
    let nullity = space.dim() - r;

    let (h, u) = hermite_with_transform(&m.transpose());
    let zero_rows: Vec<usize> = (0..h.rows()).filter(|&i| h.is_zero_row(i)).collect();
    let nullspace = u.select_rows(zero_rows);
    let initial_sizes = size_report(&nullspace);

    let mut current = nullspace.clone();
    let mut previous_size = initial_sizes.basis_size;
    let mut lll_passes = Vec::new();
    for delta in deltas {
        current = lll_reduce(&current, delta)?;
        let rep = size_report(&current);
        lll_passes.push(LllPass {
            delta: delta.clone(),
            basis_size: rep.basis_size,
            min_vector_size: rep.min_vector_size().unwrap_or_default().to_string(),
            max_vector_size: rep.max_vector_size().unwrap_or_default().to_string(),
            not_larger_than_input: rep.basis_size <= previous_size + 1e-9,
        });
        previous_size = rep.basis_size;
    }
    let reduced = sort_rows_by_size(&current);

    let table = space.action_table()?;
    let vectors = reduced.row_vecs();
    let kept = generator_indices(&m, &table, space.dim(), &vectors)?;
    let generators: Vec<Relation> =
        kept.iter().map(|&i| Relation::from_vector(&space, &vectors[i], Some(format!("row {}", i + 1)))).collect();
    let mut span = OrbitSpan::new(&table, space.dim());
    for g in &generators {
        span.add_orbit(&g.integer_vector(&space));
    }

    let (defining_hold, defining_rank, first_eight) = if degree == 5 {
        let rels = defining_relations();
        let hold = rels.iter().all(verify_relation);
        let mut s = OrbitSpan::new(&table, space.dim());
        let mut first_eight = 0;
        for (i, rel) in rels.iter().enumerate() {
            s.add_orbit(&rel.integer_vector(&space));
            if i == 7 {
                first_eight = s.rank();
            }
        }
        (hold, s.rank(), first_eight)
    } else {
        (true, 0, 0)
    };

    let report = PipelineReport {
        degree,
        dim_t: space.dim(),
        dim_p: m.rows(),
        rank: r,
        nullity,
        transform_max_entry: u.max_abs_entry().to_string(),
        size_initial: initial_sizes.basis_size,
        sizes_after_lll: lll_passes.iter().map(|p| p.basis_size).collect(),
        lll_passes,
        sorted_first_vector_size: (reduced.rows() > 0).then(|| vector_size(reduced.row(0)).to_string()),
        sorted_last_vector_size: (reduced.rows() > 0).then(|| vector_size(reduced.row(reduced.rows() - 1)).to_string()),
        generator_count: generators.len(),
        reference_generator_count: 9,
        generator_span_rank: span.rank(),
        generators: generators.iter().map(Relation::record).collect(),
        defining_relations_hold: defining_hold,
        defining_relations_span_rank: defining_rank,
        defining_relations_complete: degree == 5 && defining_hold && defining_rank == nullity,
        first_eight_span_rank: first_eight,
    };
    Ok((report, PipelineArtifacts { expansion: m, nullspace, reduced, initial_sizes }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freelie::LieMonomial;
    use crate::freepoisson::{relabel, PoissonMonomial};
    use crate::relations::degree3_symmetries;
    use crate::symgroup::enumerate_group;
    use crate::ternary::{act, canonicalize_tree, lie3, skew, sym};
    use proptest::prelude::*;

    type Q = Rational;
    type PC = PoissonCombination<Q>;

    fn pm(factors: &[&[u8]]) -> PoissonMonomial {
        PoissonMonomial::new(factors.iter().map(|f| LieMonomial::new(f.to_vec()).unwrap()).collect()).unwrap()
    }

    fn expand_tree(t: &crate::ternary::TernaryTree) -> PC {
        expand(&canonicalize_tree::<Q>(t).unwrap())
    }

    #[test]
    fn type_eleven_expansion() {
        let got = expand_tree(&lie3(skew(1, 2, 3), 4, 5));
        let one = Q::one();
        let expected: PC = [
            (pm(&[&[1, 2, 4, 5], &[3]]), one.clone()),
            (pm(&[&[1, 2, 4], &[3, 5]]), one.clone()),
            (pm(&[&[1, 2, 5], &[3, 4]]), one.clone()),
            (pm(&[&[3, 4, 5], &[1, 2]]), one.clone()),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn pure_types() {
        assert_eq!(expand_tree(&sym(sym(1, 2, 3), 4, 5)), PC::monomial(pm(&[&[1], &[2], &[3], &[4], &[5]])));
        assert_eq!(expand_tree(&lie3(lie3(1, 2, 3), 4, 5)), PC::monomial(pm(&[&[1, 2, 3, 4, 5]])));
    }

    #[test]
    fn degree_three_is_injective() {
        let m = expansion_matrix(3).unwrap();
        assert_eq!((m.rows(), m.cols()), (6, 6));
        assert_eq!(rank(&m), 6);
    }

    #[test]
    fn symmetries_expand_to_zero() {
        for s in degree3_symmetries() {
            let c = s.expr.canonical::<Q>().unwrap();
            assert!(c.is_zero(), "{} survives canonicalization", s.name);
            let direct: PC = s
                .expr
                .terms
                .iter()
                .map(|(k, t)| FreePoisson.eval_tree(t, &|a| generator(a)).unwrap() * &Q::from_integer((*k).into()))
                .fold(PC::zero(), |acc, x| acc + x);
            assert!(direct.is_zero(), "{}", s.name);
        }
    }

    #[test]
    fn product_bracket_through_skew_operation() {
        // [a·b, c] = (a,c,b) + (b,c,a)
        let lhs = poisson_bracket(&poisson_dot(&generator::<Q>(1), &generator(2)).unwrap(), &generator(3)).unwrap();
        let rhs = expand_tree(&skew(1, 3, 2)) + expand_tree(&skew(2, 3, 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn defining_relations_hold() {
        for r in defining_relations() {
            assert!(!r.combo.is_zero());
            assert!(verify_relation(&r), "{:?}", r.name);
        }
        let fake = Relation {
            name: None,
            combo: canonicalize_tree::<Q>(&sym(sym(1, 2, 3), 4, 5)).unwrap()
                - canonicalize_tree::<Q>(&skew(1, 2, sym(3, 4, 5))).unwrap(),
        };
        assert!(!verify_relation(&fake));
    }

    #[test]
    fn expansion_commutes_with_relabeling() {
        let space = TernarySpace::new(5).unwrap();
        let group = enumerate_group(5).unwrap();
        for (i, m) in space.basis().iter().enumerate().step_by(7) {
            let x = TernaryCombination::<Q>::monomial(m.clone());
            let sigma = &group[(i * 37) % 120];
            assert_eq!(expand(&act(sigma, &x).unwrap()), relabel(&expand(&x), sigma));
        }
    }

    #[test]
    fn generators_small_cases() {
        let r = defining_relations();
        assert_eq!(module_generators(&r[2..3]).unwrap(), vec![r[2].clone()]);
        let sigma = crate::symgroup::Permutation::new(vec![2, 1, 4, 3, 5]).unwrap();
        let image = Relation { name: None, combo: act(&sigma, &r[2].combo).unwrap() };
        assert_eq!(module_generators(&[r[2].clone(), image]).unwrap(), vec![r[2].clone()]);
        assert!(module_generators(&[]).unwrap().is_empty());
        let not_identity = Relation { name: None, combo: canonicalize_tree::<Q>(&sym(sym(1, 2, 3), 4, 5)).unwrap() };
        assert!(matches!(module_generators(&[not_identity]), Err(Error::NotInKernel(_))));
    }

    #[test]
    fn empty_candidates_incomplete() {
        assert!(!completeness_check(&[]).unwrap());
    }

    #[test]
    fn relation_three_is_two_terms() {
        let r = &defining_relations()[2];
        let space = TernarySpace::new(5).unwrap();
        let v = r.integer_vector(&space);
        assert_eq!(vector_size(&v), BigInt::from(2));
        assert_eq!(r.display(), "(a,b,(c,d,e)) - (c,d,(a,b,e))");
    }

    #[test]
    fn record_json_shape() {
        let rec = defining_relations()[2].record();
        let json = serde_json::to_value(&rec).unwrap();
        assert_eq!(json["terms"][0]["type"], 7);
        assert_eq!(json["terms"][0]["coeff"], "1");
    }

    #[test]
    fn integer_coordinates_are_primitive() {
        let v = [Q::new(1.into(), 2.into()), Q::new((-3).into(), 4.into()), Q::zero()];
        assert_eq!(integer_coordinates(&v), [2, -3, 0].map(BigInt::from).to_vec());
    }

    use crate::exactla::nullspace_rows;

    fn kernel_fixture() -> &'static (ExactMatrix, ExactMatrix, ActionTable) {
        static CELL: std::sync::OnceLock<(ExactMatrix, ExactMatrix, ActionTable)> = std::sync::OnceLock::new();
        CELL.get_or_init(|| {
            let space = TernarySpace::new(5).unwrap();
            let m = expansion_matrix_for(&space).unwrap();
            let kernel = nullspace_rows(&m.transpose());
            (m, kernel, space.action_table().unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn kernel_is_stable_under_relabeling(row in 0usize..240, sigma in 0usize..120) {
            let (m, kernel, table) = kernel_fixture();
            let moved = table.apply(sigma, kernel.row(row));
            prop_assert!(in_kernel(m, &moved));
        }
    }
}
