use super::Scalar;
use num::{One, Zero};
use std::fmt;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row length mismatch");
            data.extend(row.iter().cloned());
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = a[(row, col)].recip();
        for c in col..a.cols {
            let v = &a[(row, c)] * &inv;
            a[(row, c)] = v;
        }
        for r in 0..a.rows {
            if r == row || a[(r, col)].is_zero() {
                continue;
            }
            let factor = a[(r, col)].clone();
            for c in col..a.cols {
                let delta = &factor * &a[(row, c)];
                a[(r, c)] -= delta;
            }
        }
        pivots.push(col);
        row += 1;
    }
    Rref {
        matrix: a,
        rank: pivots.len(),
        pivot_columns: pivots,
    }
}

/// Rank of a list of vectors of length `cols`.
pub(crate) fn rank_of(cols: usize, rows: &[Vec<Scalar>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rref(&Matrix::from_rows(cols, rows)).rank
}
