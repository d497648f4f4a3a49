//! Arrangement data model: hyperplanes in canonical form, deformations of
//! the type A and type B Coxeter arrangements, deletion and restriction.

mod direction;
mod generators;
mod random;

pub use direction::{
    direction_classes, is_nondegenerate, DeformationType, Direction, DirectionClass,
    NondegeneracyReport,
};
pub use generators::{
    make_catalan_type, make_cox_a, make_cox_b, make_deformation_a, make_deformation_b,
    make_m_catalan,
};
pub use random::{random_deformation_a, random_deformation_b, RandomOffsets};

use crate::error::{Error, Result};
use crate::exactmath::{dot, primitive_integer_scale, Scalar, Sign, Vector};
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;

/// The affine hyperplane `normal . x = offset`.
///
/// Stored with a primitive integer normal whose first nonzero entry is
/// positive, so parallel hyperplanes have identical normals and equal
/// hyperplanes compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    normal: Vector,
    offset: Scalar,
}

impl Hyperplane {
    pub fn new(normal: Vector, offset: Scalar) -> Result<Self> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::InvalidInput("hyperplane normal is zero".into()));
        }
        let factor = primitive_integer_scale(&normal);
        Ok(Self {
            normal: normal.iter().map(|a| a * &factor).collect(),
            offset: offset * factor,
        })
    }

    pub fn normal(&self) -> &[Scalar] {
        &self.normal
    }

    pub fn offset(&self) -> &Scalar {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `normal . x - offset`
    pub fn evaluate(&self, x: &[Scalar]) -> Scalar {
        dot(&self.normal, x) - &self.offset
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.evaluate(x).is_zero()
    }

    /// Side of the hyperplane a point lies on, `None` if on it.
    pub fn side(&self, x: &[Scalar]) -> Option<Sign> {
        Sign::of(&self.evaluate(x))
    }

    pub fn is_parallel_to(&self, other: &Hyperplane) -> bool {
        self.normal == other.normal
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.normal.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let magnitude = a.abs();
            let coeff = if magnitude == Scalar::from_integer(1.into()) {
                String::new()
            } else {
                magnitude.to_string()
            };
            match (first, a.is_negative()) {
                (true, false) => write!(f, "{coeff}x{}", i + 1)?,
                (true, true) => write!(f, "-{coeff}x{}", i + 1)?,
                (false, false) => write!(f, " + {coeff}x{}", i + 1)?,
                (false, true) => write!(f, " - {coeff}x{}", i + 1)?,
            }
            first = false;
        }
        write!(f, " = {}", self.offset)
    }
}

/// What an arrangement was built as. Operations that can break the
/// structure (deletion, restriction) recompute it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    TypeA,
    TypeB,
    #[default]
    General,
}

impl Kind {
    pub fn deformation_type(self) -> Option<DeformationType> {
        match self {
            Kind::TypeA => Some(DeformationType::A),
            Kind::TypeB => Some(DeformationType::B),
            Kind::General => None,
        }
    }
}

impl From<DeformationType> for Kind {
    fn from(t: DeformationType) -> Self {
        match t {
            DeformationType::A => Kind::TypeA,
            DeformationType::B => Kind::TypeB,
        }
    }
}

/// An ordered, duplicate-free list of hyperplanes in `R^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
    kind: Kind,
}

impl Arrangement {
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.dim() != dim {
                return Err(Error::InvalidInput(format!(
                    "hyperplane {} lives in R^{}, expected R^{dim}",
                    i + 1,
                    h.dim()
                )));
            }
            if !seen.insert(h) {
                return Err(Error::InvalidInput(format!(
                    "hyperplane {} ({h}) is a duplicate",
                    i + 1
                )));
            }
        }
        Ok(Self {
            dim,
            hyperplanes,
            kind: Kind::General,
        })
    }

    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            hyperplanes: Vec::new(),
            kind: Kind::General,
        }
    }

    /// Builds an arrangement from `(normal, offset)` pairs.
    pub fn from_equations(dim: usize, equations: Vec<(Vector, Scalar)>) -> Result<Self> {
        let hyperplanes = equations
            .into_iter()
            .map(|(a, b)| Hyperplane::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, hyperplanes)
    }

    /// Tags the arrangement; a type tag is kept only if the structure
    /// actually is a non-degenerate deformation of that type.
    pub fn with_kind(mut self, kind: Kind) -> Self {
        self.kind = match kind.deformation_type() {
            Some(t) if is_nondegenerate(&self, t).is_ok() => kind,
            _ => Kind::General,
        };
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, index: usize) -> Result<&Hyperplane> {
        self.hyperplanes.get(index).ok_or(Error::IndexOutOfRange {
            index,
            len: self.hyperplanes.len(),
        })
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// Appends a hyperplane, keeping the type tag if still valid.
    pub fn with_hyperplane(&self, h: Hyperplane) -> Result<Self> {
        let mut hyperplanes = self.hyperplanes.clone();
        hyperplanes.push(h);
        Ok(Self::new(self.dim, hyperplanes)?.with_kind(self.kind))
    }

    /// `A - {H}`. The type tag is downgraded to general if the deletion
    /// empties a direction class.
    pub fn delete(&self, index: usize) -> Result<Self> {
        self.hyperplane(index)?;
        let mut hyperplanes = self.hyperplanes.clone();
        hyperplanes.remove(index);
        Ok(Self {
            dim: self.dim,
            hyperplanes,
            kind: Kind::General,
        }
        .with_kind(self.kind))
    }

    /// Restriction onto hyperplane `index`, expressed in `R^(dim-1)` by
    /// eliminating the last coordinate that appears in the hyperplane's
    /// equation. For `x_k - x_l`, `x_k + x_l` (k < l) that drops `x_l`; for
    /// `x_k` it drops `x_k`.
    ///
    /// Images are canonicalized and merged; hyperplanes parallel to the
    /// restricting one (empty intersection) are discarded.
    pub fn restrict(&self, index: usize) -> Result<(Self, CoordinateMap)> {
        let h0 = self.hyperplane(index)?;
        let map = CoordinateMap::eliminating(h0);
        let mut seen = HashSet::new();
        let mut images = Vec::new();
        for (i, h) in self.hyperplanes.iter().enumerate() {
            if i == index {
                continue;
            }
            if let Some(image) = map.restrict_hyperplane(h) {
                if seen.insert(image.clone()) {
                    images.push(image);
                }
            }
        }
        let restricted = Self {
            dim: self.dim - 1,
            hyperplanes: images,
            kind: Kind::General,
        }
        .with_kind(self.kind);
        Ok((restricted, map))
    }

    pub fn contains_hyperplane(&self, h: &Hyperplane) -> bool {
        self.hyperplanes.contains(h)
    }

    /// Sign vector of a point off every hyperplane.
    pub fn sign_vector(&self, x: &[Scalar]) -> Option<Vec<Sign>> {
        self.hyperplanes.iter().map(|h| h.side(x)).collect()
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "arrangement in R^{} ({} hyperplanes)", self.dim, self.len())?;
        for (i, h) in self.hyperplanes.iter().enumerate() {
            writeln!(f, "  H{}: {h}", i + 1)?;
        }
        Ok(())
    }
}

/// Identifies a hyperplane `H0` of `R^n` with `R^(n-1)` by solving its
/// equation for one coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateMap {
    source_dim: usize,
    dropped: usize,
    kept: Vec<usize>,
    /// `x_dropped = solved . (x_kept) + constant` on `H0`.
    solved: Vector,
    constant: Scalar,
}

impl CoordinateMap {
    fn eliminating(h0: &Hyperplane) -> Self {
        let n = h0.dim();
        let a = h0.normal();
        let dropped = (0..n)
            .rev()
            .find(|&j| !a[j].is_zero())
            .expect("canonical hyperplanes have nonzero normals");
        let pivot = &a[dropped];
        let kept: Vec<usize> = (0..n).filter(|&j| j != dropped).collect();
        let solved = kept.iter().map(|&j| -&a[j] / pivot).collect();
        Self {
            source_dim: n,
            dropped,
            kept,
            solved,
            constant: h0.offset() / pivot,
        }
    }

    /// Zero-based index of the eliminated coordinate.
    pub fn dropped(&self) -> usize {
        self.dropped
    }

    /// Zero-based source indices of the coordinates that remain, in order.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn project(&self, x: &[Scalar]) -> Vector {
        assert_eq!(x.len(), self.source_dim);
        self.kept.iter().map(|&j| x[j].clone()).collect()
    }

    /// The unique point of `H0` projecting to `y`.
    pub fn lift(&self, y: &[Scalar]) -> Vector {
        assert_eq!(y.len(), self.kept.len());
        let mut x = vec![Scalar::zero(); self.source_dim];
        for (&j, v) in self.kept.iter().zip(y) {
            x[j] = v.clone();
        }
        x[self.dropped] = dot(&self.solved, y) + &self.constant;
        x
    }

    /// Image of `H` intersected with `H0`, or `None` when they do not meet
    /// in a hyperplane of `H0`.
    pub fn restrict_hyperplane(&self, h: &Hyperplane) -> Option<Hyperplane> {
        let c = h.normal();
        let c_drop = &c[self.dropped];
        let normal: Vector = self
            .kept
            .iter()
            .zip(&self.solved)
            .map(|(&j, s)| &c[j] + c_drop * s)
            .collect();
        if normal.iter().all(Zero::is_zero) {
            return None;
        }
        Hyperplane::new(normal, h.offset() - c_drop * &self.constant).ok()
    }
}
