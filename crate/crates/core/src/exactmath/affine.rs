use super::matrix::{rref, Matrix};
use super::{dot, Scalar, Vector};
use num::{One, Zero};

/// Solution set of a conjunction of affine equalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolution {
    Empty,
    /// `point + span(directions)`; the directions are linearly independent.
    Affine {
        point: Vector,
        directions: Vec<Vector>,
    },
}

impl AffineSolution {
    pub fn is_empty(&self) -> bool {
        matches!(self, AffineSolution::Empty)
    }

    pub fn dimension(&self) -> Option<usize> {
        match self {
            AffineSolution::Empty => None,
            AffineSolution::Affine { directions, .. } => Some(directions.len()),
        }
    }

    /// Evaluates `point + sum(params[i] * directions[i])`.
    pub fn at(&self, params: &[Scalar]) -> Option<Vector> {
        let AffineSolution::Affine { point, directions } = self else {
            return None;
        };
        assert_eq!(params.len(), directions.len());
        let mut x = point.clone();
        for (t, d) in params.iter().zip(directions) {
            for (xi, di) in x.iter_mut().zip(d) {
                *xi += t * di;
            }
        }
        Some(x)
    }

    /// Whether the solution set is contained in `{x : a.x = b}`.
    pub fn lies_in(&self, normal: &[Scalar], offset: &Scalar) -> bool {
        match self {
            AffineSolution::Empty => true,
            AffineSolution::Affine { point, directions } => {
                dot(normal, point) == *offset
                    && directions.iter().all(|d| dot(normal, d).is_zero())
            }
        }
    }
}

/// Solves `a_i . x = b_i` for all `i` in `R^dim`.
///
/// The particular point sets every free variable to zero; the direction
/// basis has one vector per free variable.
pub fn solve_affine(dim: usize, equalities: &[(Vector, Scalar)]) -> AffineSolution {
    let rows: Vec<Vector> = equalities
        .iter()
        .map(|(a, b)| {
            assert_eq!(a.len(), dim, "equality dimension mismatch");
            let mut row = a.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let reduced = rref(&Matrix::from_rows(dim + 1, &rows));
    if reduced.pivot_columns.last() == Some(&dim) {
        return AffineSolution::Empty;
    }
    let m = &reduced.matrix;
    let mut point = vec![Scalar::zero(); dim];
    for (r, &p) in reduced.pivot_columns.iter().enumerate() {
        point[p] = m[(r, dim)].clone();
    }
    let free: Vec<usize> = (0..dim)
        .filter(|c| !reduced.pivot_columns.contains(c))
        .collect();
    let directions = free
        .iter()
        .map(|&f| {
            let mut d = vec![Scalar::zero(); dim];
            d[f] = Scalar::one();
            for (r, &p) in reduced.pivot_columns.iter().enumerate() {
                d[p] = -m[(r, f)].clone();
            }
            d
        })
        .collect();
    AffineSolution::Affine { point, directions }
}
