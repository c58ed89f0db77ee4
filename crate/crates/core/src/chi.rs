//! Batch check of chromatic-number bounds on generated class members.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classes::{recognize, ClassId};
use crate::error::{Error, Result};
use crate::generators::{gen_class_member, gen_hyperantihole, rng_from_seed};
use crate::graph::{Graph, WeightedGraph};
use crate::oracles::{brute_chi, brute_omega_w, CHI_LIMIT};
use crate::rings::recognize_hyperantihole;

/// What the trials are drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChiTarget {
    Class(ClassId),
    #[serde(rename = "hyperantihole7")]
    SevenHyperantihole,
}

impl ChiTarget {
    /// The largest chromatic number allowed for clique number `omega`.
    pub fn bound(self, omega: usize) -> usize {
        match self {
            ChiTarget::Class(ClassId::Gu) => omega + 1,
            ChiTarget::Class(ClassId::Gt | ClassId::GutCapFree) => 3 * omega / 2,
            ChiTarget::Class(ClassId::Gut) => 2 * omega.pow(4),
            ChiTarget::SevenHyperantihole => 4 * omega / 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ChiTarget::Class(c) => c.name(),
            ChiTarget::SevenHyperantihole => "hyperantihole7",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiTrial {
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    pub omega: usize,
    pub chi: usize,
    pub bound: usize,
    /// The generated graph was confirmed to lie in the target family.
    pub member: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiReport {
    pub target: String,
    pub trials: Vec<ChiTrial>,
    pub violations: usize,
    pub pass: bool,
}

/// Generates `trials` graphs with at most `max_n` vertices, trial `i` from
/// seed `seed + i`, and compares the exact chromatic number with the bound.
/// Trials run in parallel; the report lists them by index.
pub fn verify_chi(target: ChiTarget, trials: usize, max_n: usize, seed: u64) -> Result<ChiReport> {
    if max_n > CHI_LIMIT {
        return Err(Error::TooLarge { n: max_n, limit: CHI_LIMIT });
    }
    let min_n = match target {
        ChiTarget::SevenHyperantihole => 7,
        ChiTarget::Class(_) => 1,
    };
    if max_n < min_n {
        return Err(Error::InvalidParameter(format!("max_n must be at least {min_n}")));
    }
    let results: Vec<Result<ChiTrial>> = (0..trials)
        .into_par_iter()
        .map(|index| run_trial(target, index, seed.wrapping_add(index as u64), max_n))
        .collect();
    let trials = results.into_iter().collect::<Result<Vec<_>>>()?;
    let violations = trials.iter().filter(|t| !t.pass).count();
    Ok(ChiReport {
        target: target.name().to_string(),
        trials,
        violations,
        pass: violations == 0,
    })
}

fn trial_graph(target: ChiTarget, seed: u64, max_n: usize) -> Result<Graph> {
    let mut rng = rng_from_seed(seed);
    match target {
        ChiTarget::Class(class) => gen_class_member(rng.random(), class, rng.random_range(1..=4), max_n),
        ChiTarget::SevenHyperantihole => {
            let mut sizes = [1usize; 7];
            for _ in 0..rng.random_range(0..=max_n - 7) {
                sizes[rng.random_range(0..7)] += 1;
            }
            gen_hyperantihole(7, &sizes)
        }
    }
}

fn run_trial(target: ChiTarget, index: usize, seed: u64, max_n: usize) -> Result<ChiTrial> {
    let g = trial_graph(target, seed, max_n)?;
    let omega = brute_omega_w(&WeightedGraph::unit(g.clone()))?.0.len();
    let chi = brute_chi(&g, CHI_LIMIT)?;
    let bound = target.bound(omega);
    let member = match target {
        ChiTarget::Class(class) => recognize(class, &g).member,
        ChiTarget::SevenHyperantihole => recognize_hyperantihole(&g).is_some_and(|(k, _)| k == 7),
    };
    Ok(ChiTrial {
        index,
        seed,
        n: g.n(),
        omega,
        chi,
        bound,
        member,
        pass: member && chi <= bound,
    })
}
