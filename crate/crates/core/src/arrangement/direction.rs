use super::Arrangement;
use crate::exactmath::{Scalar, Vector};
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DeformationType {
    A,
    B,
}

impl fmt::Display for DeformationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeformationType::A => write!(f, "type-A"),
            DeformationType::B => write!(f, "type-B"),
        }
    }
}

/// A root direction of the type A or B Coxeter arrangement. Indices are
/// one-based with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Direction {
    /// `x_i`
    Coord(usize),
    /// `x_i - x_j`
    Diff(usize, usize),
    /// `x_i + x_j`
    Sum(usize, usize),
}

impl Direction {
    /// Canonical normal vector in `R^dim`.
    pub fn normal(self, dim: usize) -> Vector {
        let mut v = vec![Scalar::zero(); dim];
        match self {
            Direction::Coord(i) => v[i - 1] = Scalar::one(),
            Direction::Diff(i, j) => {
                v[i - 1] = Scalar::one();
                v[j - 1] = -Scalar::one();
            }
            Direction::Sum(i, j) => {
                v[i - 1] = Scalar::one();
                v[j - 1] = Scalar::one();
            }
        }
        v
    }

    /// Recognizes a canonical normal as a root direction.
    pub fn classify(normal: &[Scalar]) -> Option<Self> {
        let support: Vec<(usize, &Scalar)> = normal
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .collect();
        let one = Scalar::one();
        match support.as_slice() {
            [(i, a)] if **a == one => Some(Direction::Coord(i + 1)),
            [(i, a), (j, b)] if **a == one && **b == one => Some(Direction::Sum(i + 1, j + 1)),
            [(i, a), (j, b)] if **a == one && **b == -one.clone() => {
                Some(Direction::Diff(i + 1, j + 1))
            }
            _ => None,
        }
    }

    /// All directions a non-degenerate deformation of the given type must
    /// populate.
    pub fn required(kind: DeformationType, dim: usize) -> Vec<Direction> {
        let mut out = Vec::new();
        if kind == DeformationType::B {
            out.extend((1..=dim).map(Direction::Coord));
        }
        for i in 1..=dim {
            for j in i + 1..=dim {
                out.push(Direction::Diff(i, j));
                if kind == DeformationType::B {
                    out.push(Direction::Sum(i, j));
                }
            }
        }
        out
    }

    pub fn belongs_to(self, kind: DeformationType) -> bool {
        match self {
            Direction::Diff(..) => true,
            Direction::Coord(_) | Direction::Sum(..) => kind == DeformationType::B,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Coord(i) => write!(f, "({i})"),
            Direction::Diff(i, j) => write!(f, "({i},{j})"),
            Direction::Sum(i, j) => write!(f, "({i},{j})+"),
        }
    }
}

/// Hyperplanes sharing a normal direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionClass {
    pub normal: Vector,
    pub members: Vec<usize>,
}

/// Groups hyperplane indices by normal, in order of first appearance.
pub fn direction_classes(arr: &Arrangement) -> Vec<DirectionClass> {
    let mut classes: Vec<DirectionClass> = Vec::new();
    let mut lookup: BTreeMap<&[Scalar], usize> = BTreeMap::new();
    for (i, h) in arr.hyperplanes().iter().enumerate() {
        match lookup.get(h.normal()) {
            Some(&c) => classes[c].members.push(i),
            None => {
                lookup.insert(h.normal(), classes.len());
                classes.push(DirectionClass {
                    normal: h.normal().to_vec(),
                    members: vec![i],
                });
            }
        }
    }
    classes
}

/// Outcome of checking an arrangement against the definition of a
/// non-degenerate deformation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NondegeneracyReport {
    pub kind: DeformationType,
    /// Root directions with no hyperplane.
    pub missing: Vec<Direction>,
    /// Zero-based indices of hyperplanes not parallel to any root of the
    /// requested type.
    pub foreign: Vec<usize>,
}

impl NondegeneracyReport {
    pub fn is_ok(&self) -> bool {
        self.missing.is_empty() && self.foreign.is_empty()
    }
}

impl fmt::Display for NondegeneracyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "non-degenerate {} deformation", self.kind);
        }
        let mut parts = Vec::new();
        if !self.missing.is_empty() {
            let dirs: Vec<String> = self.missing.iter().map(|d| d.to_string()).collect();
            parts.push(format!(
                "degenerate: missing direction {}",
                dirs.join(", ")
            ));
        }
        if !self.foreign.is_empty() {
            let idx: Vec<String> = self.foreign.iter().map(|i| format!("H{}", i + 1)).collect();
            parts.push(format!(
                "not a {} deformation: {} not parallel to any root hyperplane",
                self.kind,
                idx.join(", ")
            ));
        }
        write!(f, "{}", parts.join("; "))
    }
}

/// Checks that every hyperplane is parallel to a root hyperplane of the
/// given type and that every root direction is populated.
pub fn is_nondegenerate(arr: &Arrangement, kind: DeformationType) -> NondegeneracyReport {
    let mut present = std::collections::BTreeSet::new();
    let mut foreign = Vec::new();
    for (i, h) in arr.hyperplanes().iter().enumerate() {
        match Direction::classify(h.normal()) {
            Some(d) if d.belongs_to(kind) => {
                present.insert(d);
            }
            _ => foreign.push(i),
        }
    }
    let missing = Direction::required(kind, arr.dim())
        .into_iter()
        .filter(|d| !present.contains(d))
        .collect();
    NondegeneracyReport {
        kind,
        missing,
        foreign,
    }
}
