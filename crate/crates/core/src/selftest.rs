//! Property suites bundled into one run.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::axioms::{check_depolarized, depolarize, polarize, random_bilinear, DepolarizedStructure, PoissonStructure};
use crate::freelie::{lie_to_tensor, straighten_lie, tree_to_tensor, BracketTree};
use crate::freepoisson::relabel;
use crate::identities::expand;
use crate::instances::{
    lie_algebra_2d, lie_heisenberg, lie_sl2, lie_so3, poisson_dual_numbers, poisson_truncated_plane, sampled_pts_check,
    MAX_SAMPLE_DEGREE,
};
use crate::lincomb::LinearCombination;
use crate::symgroup::enumerate_group;
use crate::ternary::{act, TernaryCombination, TernarySpace};
use crate::{PoissonCombinationQ, Rational, Result};

pub const EXHAUSTIVE_TREE_DEGREE: usize = 4;
pub const RANDOM_TREE_DEGREE: usize = 5;
pub const RANDOM_TREES: usize = 500;
pub const EXAMPLE_TRIALS: usize = 50;
pub const RANDOM_POLARIZATIONS: usize = 20;

#[derive(Clone, Debug)]
pub struct SelfTestConfig {
    pub seed: u64,
    pub random_trees: usize,
    pub example_trials: usize,
}

impl Default for SelfTestConfig {
    fn default() -> Self {
        Self { seed: 0, random_trees: RANDOM_TREES, example_trials: EXAMPLE_TRIALS }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        Self { name: name.into(), cases: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfTestReport {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SelfTestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

/// Every bracketing of every ordering of `1..=n`.
pub fn all_bracket_trees(n: usize) -> Vec<BracketTree> {
    let mut leaves: Vec<u8> = (1..=n as u8).collect();
    let mut out = Vec::new();
    permutations(&mut leaves, 0, &mut |p| out.extend(bracketings(p)));
    out
}

fn permutations(v: &mut Vec<u8>, k: usize, f: &mut impl FnMut(&[u8])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

fn bracketings(leaves: &[u8]) -> Vec<BracketTree> {
    if leaves.len() == 1 {
        return vec![BracketTree::leaf(leaves[0])];
    }
    let mut out = Vec::new();
    for cut in 1..leaves.len() {
        for l in bracketings(&leaves[..cut]) {
            for r in bracketings(&leaves[cut..]) {
                out.push(BracketTree::bracket(l.clone(), r));
            }
        }
    }
    out
}

/// A uniformly shuffled leaf order with a random split at every node.
pub fn random_bracket_tree(n: usize, rng: &mut impl Rng) -> BracketTree {
    let mut leaves: Vec<u8> = (1..=n as u8).collect();
    leaves.shuffle(rng);
    random_split(&leaves, rng)
}

fn random_split(leaves: &[u8], rng: &mut impl Rng) -> BracketTree {
    if leaves.len() == 1 {
        return BracketTree::leaf(leaves[0]);
    }
    let cut = rng.gen_range(1..leaves.len());
    BracketTree::bracket(random_split(&leaves[..cut], rng), random_split(&leaves[cut..], rng))
}

fn straightening_agrees(t: &BracketTree) -> Result<bool> {
    let c = straighten_lie::<Rational>(t)?;
    Ok(lie_to_tensor(&c) == tree_to_tensor::<Rational>(t))
}

pub fn check_straightening(config: &SelfTestConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("Lie straightening against the tensor algebra");
    for n in 1..=EXHAUSTIVE_TREE_DEGREE {
        for t in all_bracket_trees(n) {
            let ok = straightening_agrees(&t)?;
            r.record(ok, || format!("{t:?}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.random_trees {
        let t = random_bracket_tree(RANDOM_TREE_DEGREE, &mut rng);
        let ok = straightening_agrees(&t)?;
        r.record(ok, || format!("{t:?}"));
    }
    Ok(r)
}

/// `expand(σ·m) = σ·expand(m)` for every degree-5 basis monomial and every
/// permutation.
pub fn check_equivariance() -> Result<CheckResult> {
    let mut r = CheckResult::new("expansion equivariance");
    let space = TernarySpace::new(RANDOM_TREE_DEGREE)?;
    let expansions: Vec<PoissonCombinationQ> =
        space.basis().iter().map(|m| expand(&TernaryCombination::monomial(m.clone()))).collect();
    for sigma in enumerate_group(RANDOM_TREE_DEGREE)? {
        for (m, e) in space.basis().iter().zip(&expansions) {
            let moved: TernaryCombination<Rational> = act(&sigma, &TernaryCombination::monomial(m.clone()))?;
            let mut left = LinearCombination::zero();
            for (k, c) in moved.iter() {
                let i = space.index_of(k).expect("canonical monomial");
                left.add_scaled(&expansions[i], c);
            }
            r.record(left == relabel(e, &sigma), || format!("{m:?} under {:?}", sigma.images()));
        }
    }
    Ok(r)
}

fn poisson_fixtures() -> Vec<(&'static str, PoissonStructure<Rational>)> {
    vec![
        ("lie 2d", lie_algebra_2d()),
        ("so(3)", lie_so3()),
        ("sl(2)", lie_sl2()),
        ("heisenberg", lie_heisenberg()),
        ("dual numbers", poisson_dual_numbers()),
        ("truncated plane", poisson_truncated_plane()),
    ]
}

pub fn check_polarization(config: &SelfTestConfig) -> CheckResult {
    let mut r = CheckResult::new("polarization round trips");
    for (name, p) in poisson_fixtures() {
        let dd = depolarize(&p);
        r.record(polarize(&dd) == p, || format!("{name}: polarize(depolarize(p)) != p"));
        r.record(check_depolarized(&dd).is_empty(), || format!("{name}: depolarized identity fails"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for i in 0..RANDOM_POLARIZATIONS {
        let dd = DepolarizedStructure { prod: random_bilinear::<Rational>(1 + i % 3, 5, &mut rng) };
        r.record(depolarize(&polarize(&dd)) == dd, || format!("random product {i}"));
    }
    r
}

pub fn check_polynomial_example(config: &SelfTestConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("polynomial triple system identities");
    let violations = sampled_pts_check(config.seed, config.example_trials, MAX_SAMPLE_DEGREE)?;
    r.cases = config.example_trials;
    let mut failed: Vec<usize> = violations.iter().flat_map(|v| v.indices.iter().copied()).collect();
    failed.dedup();
    r.failures = failed.len();
    r.first_failure = violations.first().map(|v| format!("{} in trial {:?}", v.axiom, v.indices));
    Ok(r)
}

pub fn run_selftest(config: &SelfTestConfig) -> Result<SelfTestReport> {
    Ok(SelfTestReport {
        seed: config.seed,
        checks: vec![
            check_straightening(config)?,
            check_equivariance()?,
            check_polarization(config),
            check_polynomial_example(config)?,
        ],
    })
}
