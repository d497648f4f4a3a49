use super::{Arrangement, DeformationType, Direction, Hyperplane, Kind};
use crate::error::{Error, Result};
use crate::exactmath::Scalar;
use num::{Signed, Zero};
use std::collections::{BTreeMap, HashSet};

fn root_hyperplane(dim: usize, d: Direction, offset: Scalar) -> Hyperplane {
    Hyperplane::new(d.normal(dim), offset).expect("root normals are nonzero")
}

fn check_offsets(what: &str, offsets: &[Scalar]) -> Result<()> {
    if offsets.is_empty() {
        return Err(Error::InvalidInput(format!("{what}: empty offset list")));
    }
    let mut seen = HashSet::new();
    for a in offsets {
        if !seen.insert(a) {
            return Err(Error::InvalidInput(format!("{what}: duplicate offset {a}")));
        }
    }
    Ok(())
}

/// `{x_i - x_j = 0 : 1 <= i < j <= n}`
pub fn make_cox_a(n: usize) -> Result<Arrangement> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("Cox_A(n) needs n >= 2, got {n}")));
    }
    let hyperplanes = Direction::required(DeformationType::A, n)
        .into_iter()
        .map(|d| root_hyperplane(n, d, Scalar::zero()))
        .collect();
    Ok(Arrangement::new(n, hyperplanes)?.with_kind(Kind::TypeA))
}

/// `{x_i = 0} + {x_i - x_j = 0} + {x_i + x_j = 0}`
pub fn make_cox_b(n: usize) -> Result<Arrangement> {
    if n < 1 {
        return Err(Error::InvalidInput(format!("Cox_B(n) needs n >= 1, got {n}")));
    }
    let hyperplanes = Direction::required(DeformationType::B, n)
        .into_iter()
        .map(|d| root_hyperplane(n, d, Scalar::zero()))
        .collect();
    Ok(Arrangement::new(n, hyperplanes)?.with_kind(Kind::TypeB))
}

/// Normalizes a one-based pair key to `i < j`, negating offsets when the
/// pair was given as `(j, i)`.
fn oriented_pairs(
    n: usize,
    family: &str,
    offsets: &BTreeMap<(usize, usize), Vec<Scalar>>,
    antisymmetric: bool,
) -> Result<BTreeMap<(usize, usize), Vec<Scalar>>> {
    let mut out: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
    for (&(i, j), values) in offsets {
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::InvalidInput(format!(
                "{family}: pair ({i},{j}) is not a pair of distinct coordinates in 1..={n}"
            )));
        }
        let (key, vals) = if i < j {
            ((i, j), values.clone())
        } else if antisymmetric {
            ((j, i), values.iter().map(|v| -v).collect())
        } else {
            ((j, i), values.clone())
        };
        if out.insert(key, vals).is_some() {
            return Err(Error::InvalidInput(format!(
                "{family}: pair ({},{}) given twice",
                key.0, key.1
            )));
        }
    }
    Ok(out)
}

fn missing_error(kind: DeformationType, missing: Vec<Direction>) -> Error {
    Error::Degenerate(super::NondegeneracyReport {
        kind,
        missing,
        foreign: Vec::new(),
    })
}

/// `{x_i - x_j = a : a in offsets[(i, j)]}`; every pair must be present.
///
/// Pairs may be given as `(j, i)`, meaning `x_j - x_i = a`.
pub fn make_deformation_a(
    n: usize,
    offsets: &BTreeMap<(usize, usize), Vec<Scalar>>,
) -> Result<Arrangement> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "type-A deformation needs n >= 2, got {n}"
        )));
    }
    let pairs = oriented_pairs(n, "difference offsets", offsets, true)?;
    let mut missing = Vec::new();
    let mut hyperplanes = Vec::new();
    for d in Direction::required(DeformationType::A, n) {
        let Direction::Diff(i, j) = d else { unreachable!() };
        match pairs.get(&(i, j)) {
            None => missing.push(d),
            Some(values) => {
                check_offsets(&format!("pair ({i},{j})"), values)?;
                hyperplanes.extend(values.iter().map(|a| root_hyperplane(n, d, a.clone())));
            }
        }
    }
    if !missing.is_empty() {
        return Err(missing_error(DeformationType::A, missing));
    }
    Ok(Arrangement::new(n, hyperplanes)?.with_kind(Kind::TypeA))
}

/// Type-B deformation from its three offset families, keyed one-based.
pub fn make_deformation_b(
    n: usize,
    coord_offsets: &BTreeMap<usize, Vec<Scalar>>,
    diff_offsets: &BTreeMap<(usize, usize), Vec<Scalar>>,
    sum_offsets: &BTreeMap<(usize, usize), Vec<Scalar>>,
) -> Result<Arrangement> {
    if n < 1 {
        return Err(Error::InvalidInput(format!(
            "type-B deformation needs n >= 1, got {n}"
        )));
    }
    if let Some(&i) = coord_offsets.keys().find(|&&i| i == 0 || i > n) {
        return Err(Error::InvalidInput(format!(
            "coordinate offsets: index {i} not in 1..={n}"
        )));
    }
    let diffs = oriented_pairs(n, "difference offsets", diff_offsets, true)?;
    let sums = oriented_pairs(n, "sum offsets", sum_offsets, false)?;

    let mut missing = Vec::new();
    let mut hyperplanes = Vec::new();
    for d in Direction::required(DeformationType::B, n) {
        let values = match d {
            Direction::Coord(i) => coord_offsets.get(&i),
            Direction::Diff(i, j) => diffs.get(&(i, j)),
            Direction::Sum(i, j) => sums.get(&(i, j)),
        };
        match values {
            None => missing.push(d),
            Some(values) => {
                check_offsets(&format!("direction {d}"), values)?;
                hyperplanes.extend(values.iter().map(|a| root_hyperplane(n, d, a.clone())));
            }
        }
    }
    if !missing.is_empty() {
        return Err(missing_error(DeformationType::B, missing));
    }
    Ok(Arrangement::new(n, hyperplanes)?.with_kind(Kind::TypeB))
}

/// Catalan-type `x_i - x_j = 0, +-a_1, ..., +-a_m` (with zero) or
/// semiorder-type `x_i - x_j = +-a_1, ..., +-a_m` (without). `values` must
/// be positive and strictly decreasing.
pub fn make_catalan_type(n: usize, values: &[Scalar], with_zero: bool) -> Result<Arrangement> {
    if values.iter().any(|a| !a.is_positive()) {
        return Err(Error::InvalidInput(
            "Catalan-type parameters must be positive".into(),
        ));
    }
    if values.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::InvalidInput(
            "Catalan-type parameters must be strictly decreasing".into(),
        ));
    }
    if values.is_empty() && !with_zero {
        return Err(Error::InvalidInput(
            "semiorder-type arrangement needs at least one parameter".into(),
        ));
    }
    let mut offsets = Vec::new();
    if with_zero {
        offsets.push(Scalar::zero());
    }
    for a in values {
        offsets.push(-a.clone());
        offsets.push(a.clone());
    }
    offsets.sort();
    let all: BTreeMap<(usize, usize), Vec<Scalar>> = Direction::required(DeformationType::A, n)
        .into_iter()
        .map(|d| match d {
            Direction::Diff(i, j) => ((i, j), offsets.clone()),
            _ => unreachable!(),
        })
        .collect();
    make_deformation_a(n, &all)
}

/// The m-Catalan arrangement `C_{n,[m]}`.
pub fn make_m_catalan(n: usize, m: usize) -> Result<Arrangement> {
    let values: Vec<Scalar> = (1..=m as i64).rev().map(crate::exactmath::int).collect();
    make_catalan_type(n, &values, true)
}
