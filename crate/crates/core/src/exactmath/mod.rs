//! Exact rational linear algebra and linear feasibility.
//!
//! Everything here works over [`Scalar`], an arbitrary-precision rational.
//! No floating point is used anywhere in this module.

mod affine;
mod cone;
mod feasibility;
mod fourier_motzkin;
mod matrix;
mod simplex;

pub use affine::{solve_affine, AffineSolution};
pub use cone::cone_span_dimension;
pub use feasibility::{
    feasible, feasible_strict, feasible_with, Backend, Constraint, Feasibility, LinearSystem,
    Relation, StrictConstraint, FOURIER_MOTZKIN_MAX_DIM,
};
pub use matrix::{rref, Matrix, Rref};
pub(crate) use matrix::rank_of;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

pub type Vector = Vec<Scalar>;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn ints(values: &[i64]) -> Vector {
    values.iter().map(|&v| int(v)).collect()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Side of a hyperplane, or orientation of a homogeneous constraint.
///
/// `Pos` sorts before `Neg`, which fixes the output order of sign vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Pos,
    #[serde(rename = "-")]
    Neg,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn apply(self, value: &Scalar) -> Scalar {
        match self {
            Sign::Pos => value.clone(),
            Sign::Neg => -value,
        }
    }

    /// Sign of a nonzero scalar; `None` for zero.
    pub fn of(value: &Scalar) -> Option<Self> {
        if value.is_positive() {
            Some(Sign::Pos)
        } else if value.is_negative() {
            Some(Sign::Neg)
        } else {
            None
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Scales `v` so that its entries are coprime integers with the first
/// nonzero entry positive. Returns the positive-or-negative factor applied.
/// Zero vectors are returned unchanged with factor one.
pub(crate) fn primitive_integer_scale(v: &[Scalar]) -> Scalar {
    use num::Integer;
    let Some(first) = v.iter().find(|x| !x.is_zero()) else {
        return Scalar::one();
    };
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let gcd = v.iter().fold(BigInt::zero(), |acc, x| {
        let scaled = x.numer() * (&lcm / x.denom());
        acc.gcd(&scaled)
    });
    let mut factor = Scalar::new(lcm, gcd);
    if first.is_negative() {
        factor = -factor;
    }
    factor
}

pub fn format_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}
