//! Seeded generators for node configurations: Berzolari-Radon sets, random
//! poised sets, and defect configurations (a maximal line-union curve of
//! degree `k - 1` plus one node off it).
//!
//! Randomness comes from SplitMix64 seeded with the caller's seed, so every
//! generator is a pure function of its parameters. Random rationals have
//! numerators in `[-20, 20]` and denominators in `{1, 2, 3, 4}`.

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::curves::{d_star, extend_on_curve, is_maximal_curve, Curve, CurveSampler, LineForm};
use crate::error::{Error, Result};
use crate::exact::RowEchelon;
use crate::nodes::{IntegerSpiral, Node, NodeSet};
use crate::poly::{dim_pi, monomials_at};
use crate::theorems::curves_through;
use crate::{QCurve, QLineForm, QNode, QNodeSet, Rational};

/// Random candidate points a generator may draw per batch.
pub const CANDIDATE_BUDGET: usize = 10_000;

/// Attempts at drawing a usable random line before giving up.
pub const LINE_RESAMPLES: usize = 100;

pub fn rng(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let num: i64 = rng.random_range(-20..=20);
    let den: i64 = rng.random_range(1..=4);
    Rational::new(num.into(), den.into())
}

pub fn random_node(rng: &mut impl Rng) -> QNode {
    Node::new(random_rational(rng), random_rational(rng))
}

/// A random line not proportional to any of `existing`.
pub fn random_line(rng: &mut impl Rng, existing: &[QLineForm]) -> Result<QLineForm> {
    for _ in 0..LINE_RESAMPLES {
        let (a, b, c) = (random_rational(rng), random_rational(rng), random_rational(rng));
        let Ok(line) = LineForm::new(a, b, c) else {
            continue;
        };
        if existing.iter().all(|l| !l.is_proportional(&line)) {
            return Ok(line);
        }
    }
    Err(Error::BudgetExhausted(LINE_RESAMPLES))
}

/// `n + 1` lines and `dim_pi(n)` nodes, with `n + 1 - j` nodes on line `j`
/// that avoid lines `0..j`.
#[derive(Clone, Debug, PartialEq)]
pub struct BRSet {
    pub nodes: QNodeSet,
    pub lines: Vec<QLineForm>,
    pub counts: Vec<usize>,
}

pub fn gen_berzolari_radon(n: usize, seed: u64) -> Result<BRSet> {
    let mut rng = rng(seed);
    let mut lines: Vec<QLineForm> = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        let l = random_line(&mut rng, &lines)?;
        lines.push(l);
    }
    let mut nodes = NodeSet::empty();
    let counts: Vec<usize> = (0..=n).map(|j| n + 1 - j).collect();
    for (j, line) in lines.iter().enumerate() {
        let mut placed = 0;
        let mut drawn = 0;
        while placed < counts[j] {
            if drawn == CANDIDATE_BUDGET {
                return Err(Error::BudgetExhausted(CANDIDATE_BUDGET));
            }
            drawn += 1;
            let a = line.point_at(&random_rational(&mut rng));
            if nodes.contains(&a) || lines[..j].iter().any(|l| l.contains(&a)) {
                continue;
            }
            nodes.push(a)?;
            placed += 1;
        }
    }
    Ok(BRSet { nodes, lines, counts })
}

/// `dim_pi(n)` random nodes, each kept only if it raises the collocation
/// rank.
pub fn gen_random_poised(n: usize, seed: u64) -> Result<QNodeSet> {
    let mut rng = rng(seed);
    let mut echelon = RowEchelon::new(dim_pi(n));
    let mut nodes = NodeSet::empty();
    let mut drawn = 0;
    while nodes.len() < dim_pi(n) {
        if drawn == CANDIDATE_BUDGET {
            return Err(Error::BudgetExhausted(CANDIDATE_BUDGET));
        }
        drawn += 1;
        let a = random_node(&mut rng);
        if !nodes.contains(&a) && echelon.insert(&monomials_at(&a.x, &a.y, n)) {
            nodes.push(a)?;
        }
    }
    Ok(nodes)
}

/// `d(n, k-1) + 1` nodes, `n`-independent, through which pass exactly a
/// pencil of degree-`k` curves: `mu` is maximal and holds every node except
/// the last one, the outlier.
#[derive(Clone, Debug)]
pub struct DefectConfig {
    pub xs: QNodeSet,
    pub mu: QCurve,
    pub lines: Vec<QLineForm>,
    pub outlier: QNode,
    pub outlier_index: usize,
    pub n: usize,
    pub k: usize,
}

pub fn gen_defect_config(n: usize, k: usize, seed: u64) -> Result<DefectConfig> {
    if k < 2 || k > n {
        return Err(Error::DegreeOutOfRange(format!("need 2 <= k <= n, got n={n}, k={k}")));
    }
    let mut rng = rng(seed);
    let mut lines = Vec::with_capacity(k - 1);
    for _ in 0..k - 1 {
        let l = random_line(&mut rng, &lines)?;
        lines.push(l);
    }
    let mu = Curve::from_lines(&lines)?;
    let sampler = CurveSampler::line_union(lines.clone())?;
    let mut xs = extend_on_curve(&NodeSet::empty(), &sampler, &mu, n)?;

    let mut echelon = RowEchelon::new(dim_pi(n));
    for a in &xs {
        echelon.insert(&monomials_at(&a.x, &a.y, n));
    }
    let outlier = IntegerSpiral::new()
        .map(|(x, y)| Node::from_ints(x, y))
        .find(|a: &QNode| !mu.contains(a) && echelon.increases_rank(&monomials_at(&a.x, &a.y, n)))
        .expect("points off a nonzero curve exist on the integer lattice");
    let outlier_index = xs.len();
    xs.push(outlier.clone())?;

    let config = DefectConfig { xs, mu, lines, outlier, outlier_index, n, k };
    config.check()?;
    Ok(config)
}

impl DefectConfig {
    /// Re-derives the invariants of the configuration; a failure is a bug.
    pub fn check(&self) -> Result<()> {
        let (n, k) = (self.n, self.k);
        let expected = d_star(n, k - 1)? + 1;
        if self.xs.len() != expected {
            return Err(Error::Inconsistency(format!(
                "defect configuration has {} nodes, expected {expected}",
                self.xs.len()
            )));
        }
        if !crate::nodes::is_n_independent(&self.xs, n) {
            return Err(Error::Inconsistency("defect configuration is not independent".into()));
        }
        let off: Vec<usize> = (0..self.xs.len())
            .filter(|&i| !self.mu.contains(&self.xs.nodes()[i]))
            .collect();
        if off != [self.outlier_index] {
            return Err(Error::Inconsistency(format!("nodes off mu: {off:?}")));
        }
        if !is_maximal_curve(&self.mu, &self.xs, n)? {
            return Err(Error::Inconsistency("mu is not maximal".into()));
        }
        let dim = curves_through(&self.xs, k).dimension();
        if dim != 2 {
            return Err(Error::Inconsistency(format!(
                "degree-{k} curve space has dimension {dim}, expected 2"
            )));
        }
        Ok(())
    }
}
