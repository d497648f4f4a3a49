use super::{make_deformation_a, make_deformation_b, Arrangement};
use crate::error::Result;
use crate::exactmath::{ratio, Scalar};
use rand::seq::index::sample;
use rand::Rng;
use std::collections::{BTreeMap, BTreeSet};

/// Distribution of offsets for random deformations: each direction gets
/// between 1 and `max_per_direction` distinct rationals `p/q` with
/// `q <= max_denominator` and `|p/q| <= bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomOffsets {
    pub bound: i64,
    pub max_denominator: i64,
    pub max_per_direction: usize,
}

impl Default for RandomOffsets {
    fn default() -> Self {
        Self {
            bound: 3,
            max_denominator: 2,
            max_per_direction: 3,
        }
    }
}

impl RandomOffsets {
    fn candidates(&self) -> Vec<Scalar> {
        let mut set = BTreeSet::new();
        for q in 1..=self.max_denominator {
            for p in -self.bound * q..=self.bound * q {
                set.insert(ratio(p, q));
            }
        }
        set.into_iter().collect()
    }

    fn draw<R: Rng + ?Sized>(&self, rng: &mut R, pool: &[Scalar]) -> Vec<Scalar> {
        let count = rng.gen_range(1..=self.max_per_direction.min(pool.len()));
        sample(rng, pool.len(), count)
            .into_iter()
            .map(|i| pool[i].clone())
            .collect()
    }
}

pub fn random_deformation_a<R: Rng + ?Sized>(
    n: usize,
    params: &RandomOffsets,
    rng: &mut R,
) -> Result<Arrangement> {
    let pool = params.candidates();
    let mut offsets = BTreeMap::new();
    for i in 1..=n {
        for j in i + 1..=n {
            offsets.insert((i, j), params.draw(rng, &pool));
        }
    }
    make_deformation_a(n, &offsets)
}

pub fn random_deformation_b<R: Rng + ?Sized>(
    n: usize,
    params: &RandomOffsets,
    rng: &mut R,
) -> Result<Arrangement> {
    let pool = params.candidates();
    let mut coords = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    let mut sums = BTreeMap::new();
    for i in 1..=n {
        coords.insert(i, params.draw(rng, &pool));
        for j in i + 1..=n {
            diffs.insert((i, j), params.draw(rng, &pool));
            sums.insert((i, j), params.draw(rng, &pool));
        }
    }
    make_deformation_b(n, &coords, &diffs, &sums)
}
