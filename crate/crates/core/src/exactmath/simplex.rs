//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Strict inequalities `a.x > b` are relaxed to `a.x - eps >= b` and the
//! slack `eps` (capped at 1) is maximized; the system is strictly feasible
//! iff the optimum is positive.

use super::feasibility::{split_trivial, Feasibility, LinearSystem, Relation};
use super::{Scalar, Vector};
use num::{One, Signed, Zero};

/// `maximize c.z  s.t.  A z = b, z >= 0`
struct StandardLp {
    a: Vec<Vector>,
    b: Vector,
    c: Vector,
}

enum LpOutcome {
    Optimal(Vector),
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vector>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Scalar {
        &self.rows[r][self.width]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].recip();
        for v in self.rows[row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = self.rows[row].clone();
        for (r, other) in self.rows.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (v, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Runs simplex iterations for `objective` over the columns accepted by
    /// `allowed`. Returns `false` if the objective is unbounded.
    fn optimize(&mut self, objective: &[Scalar], allowed: impl Fn(usize) -> bool) -> bool {
        loop {
            let entering = (0..self.width).find(|&j| {
                if !allowed(j) || self.basis.contains(&j) {
                    return false;
                }
                let reduced = self
                    .rows
                    .iter()
                    .zip(&self.basis)
                    .fold(objective[j].clone(), |acc, (row, &bv)| {
                        acc - &objective[bv] * &row[j]
                    });
                reduced.is_positive()
            });
            let Some(col) = entering else {
                return true;
            };
            let mut best: Option<(Scalar, usize, usize)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[col].is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / &row[col];
                let better = match &best {
                    None => true,
                    Some((q, _, bv)) => ratio < *q || (ratio == *q && self.basis[r] < *bv),
                };
                if better {
                    best = Some((ratio, r, self.basis[r]));
                }
            }
            let Some((_, row, _)) = best else {
                return false;
            };
            self.pivot(row, col);
        }
    }

    fn value_of(&self, var: usize) -> Scalar {
        self.basis
            .iter()
            .position(|&b| b == var)
            .map_or_else(Scalar::zero, |r| self.rhs(r).clone())
    }
}

fn solve_standard(lp: &StandardLp) -> LpOutcome {
    let m = lp.a.len();
    let n = lp.c.len();
    let width = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, (row, rhs)) in lp.a.iter().zip(&lp.b).enumerate() {
        let flip = rhs.is_negative();
        let mut t: Vector = row
            .iter()
            .map(|v| if flip { -v } else { v.clone() })
            .collect();
        t.extend((0..m).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
        t.push(if flip { -rhs } else { rhs.clone() });
        rows.push(t);
    }
    let mut tab = Tableau {
        rows,
        basis: (n..n + m).collect(),
        width,
    };

    let mut phase1 = vec![Scalar::zero(); width];
    for v in phase1.iter_mut().skip(n) {
        *v = -Scalar::one();
    }
    tab.optimize(&phase1, |_| true);
    if (n..n + m).any(|a| !tab.value_of(a).is_zero()) {
        return LpOutcome::Infeasible;
    }

    // Drive zero-valued artificials out of the basis; rows where that is
    // impossible are redundant and dropped.
    let mut r = 0;
    while r < tab.rows.len() {
        if tab.basis[r] >= n {
            if let Some(col) = (0..n).find(|&j| !tab.rows[r][j].is_zero()) {
                tab.pivot(r, col);
            } else {
                tab.rows.remove(r);
                tab.basis.remove(r);
                continue;
            }
        }
        r += 1;
    }

    let mut phase2 = lp.c.clone();
    phase2.resize(width, Scalar::zero());
    if !tab.optimize(&phase2, |j| j < n) {
        return LpOutcome::Unbounded;
    }
    LpOutcome::Optimal((0..n).map(|j| tab.value_of(j)).collect())
}

pub(super) fn solve(system: &LinearSystem) -> Feasibility {
    let dim = system.dim;
    let mut kept = Vec::new();
    for c in &system.constraints {
        match split_trivial(c) {
            Some(false) => return Feasibility::Infeasible,
            Some(true) => {}
            None => kept.push(c),
        }
    }
    let has_strict = kept.iter().any(|c| c.relation == Relation::Greater);
    let inequality_count = kept
        .iter()
        .filter(|c| c.relation != Relation::Equal)
        .count();

    // Layout: x+ (dim) | x- (dim) | eps? | slacks (one per inequality, plus eps cap)
    let eps_col = 2 * dim;
    let slack_start = 2 * dim + usize::from(has_strict);
    let cols = slack_start + inequality_count + usize::from(has_strict);

    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut slack = slack_start;
    for c in kept {
        let mut row = vec![Scalar::zero(); cols];
        for (j, v) in c.coeffs.iter().enumerate() {
            row[j] = v.clone();
            row[dim + j] = -v;
        }
        match c.relation {
            Relation::Equal => {}
            Relation::GreaterEq => {
                row[slack] = -Scalar::one();
                slack += 1;
            }
            Relation::Greater => {
                row[eps_col] = -Scalar::one();
                row[slack] = -Scalar::one();
                slack += 1;
            }
        }
        a.push(row);
        b.push(c.rhs.clone());
    }
    let mut objective = vec![Scalar::zero(); cols];
    if has_strict {
        let mut cap = vec![Scalar::zero(); cols];
        cap[eps_col] = Scalar::one();
        cap[slack] = Scalar::one();
        a.push(cap);
        b.push(Scalar::one());
        objective[eps_col] = Scalar::one();
    }

    let lp = StandardLp { a, b, c: objective };
    match solve_standard(&lp) {
        LpOutcome::Infeasible => Feasibility::Infeasible,
        LpOutcome::Unbounded => unreachable!("slack objective is capped"),
        LpOutcome::Optimal(z) => {
            if has_strict && !z[eps_col].is_positive() {
                return Feasibility::Infeasible;
            }
            Feasibility::Feasible((0..dim).map(|j| &z[j] - &z[dim + j]).collect())
        }
    }
}
