//! Exact computations on affine hyperplane arrangements: intersection
//! posets and characteristic polynomials, regions and their levels, and
//! expansions of the characteristic polynomial in binomial bases whose
//! coefficients count regions by level.

pub mod arrangement;
pub mod error;
pub mod exactmath;
pub mod expansion;
pub mod ffcount;
pub mod polynomial;
pub mod poset;
pub mod regions;
pub mod samples;

pub use arrangement::{Arrangement, DeformationType, Direction, Hyperplane, Kind};
pub use error::{Error, Result};
pub use exactmath::{Scalar, Sign};
pub use polynomial::Polynomial;
