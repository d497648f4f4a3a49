//! Regions of an arrangement and their levels.
//!
//! The level of a region is the least dimension of a linear subspace `W`
//! such that the region lies within bounded distance of `W`. For an open
//! polyhedron that subspace is the span of its recession cone
//! `{d : sign_i * (a_i . d) >= 0}`, which is what is computed here.

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exactmath::{
    cone_span_dimension, feasible_strict, Feasibility, Scalar, Sign, StrictConstraint, Vector,
};
use num::{BigInt, Integer, One, Zero};
use rayon::prelude::*;
use serde::Serialize;

/// Largest arrangement the exhaustive sign-vector oracle will accept.
pub const EXHAUSTIVE_MAX_HYPERPLANES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    /// Side of each hyperplane, in arrangement order.
    pub signs: Vec<Sign>,
    /// A rational point strictly inside the region.
    pub witness: Vector,
    pub level: usize,
}

impl Region {
    pub fn sign_string(&self) -> String {
        self.signs.iter().map(|s| s.as_char()).collect()
    }
}

/// Region counts indexed by level, `0..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelProfile {
    counts: Vec<u64>,
}

impl LevelProfile {
    pub fn new(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    pub fn from_regions(dim: usize, regions: &[Region]) -> Self {
        let mut counts = vec![0; dim + 1];
        for r in regions {
            counts[r.level] += 1;
        }
        Self { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Number of regions at level `k` (zero above the ambient dimension).
    pub fn get(&self, k: usize) -> u64 {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn dim(&self) -> usize {
        self.counts.len() - 1
    }
}

fn constraints_for(arr: &Arrangement, signs: &[Sign]) -> Vec<StrictConstraint> {
    arr.hyperplanes()
        .iter()
        .zip(signs)
        .map(|(h, s)| StrictConstraint::new(h.normal().to_vec(), h.offset().clone(), *s))
        .collect()
}

/// One witness per nonempty side of hyperplane `k` within the cell given
/// by `signs` on hyperplanes `0..k`.
fn split_cell(arr: &Arrangement, k: usize, signs: Vec<Sign>, witness: Vector) -> Vec<(Vec<Sign>, Vector)> {
    let h = &arr.hyperplanes()[k];
    let sides = match h.side(&witness) {
        Some(s) => vec![(s, Some(witness)), (s.flip(), None)],
        None => vec![(Sign::Pos, None), (Sign::Neg, None)],
    };
    let mut out = Vec::with_capacity(2);
    for (side, known) in sides {
        let mut child = signs.clone();
        child.push(side);
        let point = match known {
            Some(w) => Some(w),
            None => feasible_strict(arr.dim(), &constraints_for(arr, &child), &[]).into_witness(),
        };
        if let Some(p) = point {
            out.push((child, p));
        }
    }
    out
}

/// All regions, sorted by sign vector (`+` before `-`).
///
/// Hyperplanes are inserted one at a time in arrangement order; each cell
/// that the new hyperplane meets is split in two.
pub fn enumerate_regions(arr: &Arrangement) -> Vec<Region> {
    let mut cells: Vec<(Vec<Sign>, Vector)> = vec![(Vec::new(), vec![Scalar::zero(); arr.dim()])];
    for k in 0..arr.len() {
        cells = cells
            .into_par_iter()
            .flat_map_iter(|(signs, w)| split_cell(arr, k, signs, w))
            .collect();
    }
    let mut regions: Vec<Region> = cells
        .into_par_iter()
        .map(|(signs, witness)| {
            let level = recession_span(arr, &signs);
            Region {
                signs,
                witness,
                level,
            }
        })
        .collect();
    regions.sort_by(|a, b| a.signs.cmp(&b.signs));
    regions
}

fn recession_span(arr: &Arrangement, signs: &[Sign]) -> usize {
    let cone: Vec<(Vector, Sign)> = arr
        .hyperplanes()
        .iter()
        .zip(signs)
        .map(|(h, s)| (h.normal().to_vec(), *s))
        .collect();
    cone_span_dimension(arr.dim(), &cone)
}

/// Level of a region of `arr`, recomputed from its sign vector.
pub fn region_level(arr: &Arrangement, region: &Region) -> Result<usize> {
    if region.signs.len() != arr.len() {
        return Err(Error::InvalidInput(format!(
            "sign vector has {} entries but the arrangement has {} hyperplanes",
            region.signs.len(),
            arr.len()
        )));
    }
    Ok(recession_span(arr, &region.signs))
}

pub fn level_profile(arr: &Arrangement) -> LevelProfile {
    LevelProfile::from_regions(arr.dim(), &enumerate_regions(arr))
}

/// Feasible sign vectors by testing all `2^m` candidates independently.
/// Sorted like [`enumerate_regions`].
pub fn exhaustive_sign_vectors(arr: &Arrangement) -> Result<Vec<(Vec<Sign>, Vector)>> {
    let m = arr.len();
    if m > EXHAUSTIVE_MAX_HYPERPLANES {
        return Err(Error::InvalidInput(format!(
            "exhaustive enumeration is limited to {EXHAUSTIVE_MAX_HYPERPLANES} hyperplanes, got {m}"
        )));
    }
    let mut found: Vec<(Vec<Sign>, Vector)> = (0u64..1 << m)
        .into_par_iter()
        .filter_map(|mask| {
            let signs: Vec<Sign> = (0..m)
                .map(|i| if mask >> i & 1 == 0 { Sign::Pos } else { Sign::Neg })
                .collect();
            match feasible_strict(arr.dim(), &constraints_for(arr, &signs), &[]) {
                Feasibility::Feasible(w) => Some((signs, w)),
                Feasibility::Infeasible => None,
            }
        })
        .collect();
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found)
}

/// Closed form for the number of level-`k` regions of the m-Catalan
/// arrangement `C_{n,[m]}`:
/// `n! * m * k / ((m+1)n - k) * binom((m+1)n - k, mn)`.
pub fn mcatalan_level_count(n: u64, m: u64, k: u64) -> Result<BigInt> {
    if n < 1 || m < 1 || k < 1 || k > n {
        return Err(Error::InvalidInput(format!(
            "m-Catalan level count needs n >= 1, m >= 1, 1 <= k <= n; got n={n}, m={m}, k={k}"
        )));
    }
    let top = (m + 1) * n - k;
    let numerator = factorial(n) * BigInt::from(m) * BigInt::from(k) * binomial(top, m * n);
    let (q, r) = numerator.div_rem(&BigInt::from(top));
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "m-Catalan level count is not an integer for n={n}, m={m}, k={k}"
        )));
    }
    Ok(q)
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}
