//! Fourier-Motzkin elimination with strictness tracking.
//!
//! Equalities are removed first by parametrizing their solution set; the
//! remaining inequalities are projected one variable at a time. The witness
//! is recovered by back-substitution, taking the midpoint of each variable's
//! feasible interval.

use super::affine::{solve_affine, AffineSolution};
use super::feasibility::{split_trivial, Feasibility, LinearSystem, Relation};
use super::{dot, Scalar, Vector};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
struct Ineq {
    coeffs: Vector,
    rhs: Scalar,
    strict: bool,
}

/// Inequalities keyed by direction: for each normalized coefficient vector
/// only the tightest bound is kept.
#[derive(Default)]
struct IneqSet {
    by_direction: BTreeMap<Vector, (Scalar, bool)>,
}

struct Contradiction;

impl IneqSet {
    fn insert(&mut self, ineq: Ineq) -> Result<(), Contradiction> {
        let Some(lead) = ineq.coeffs.iter().find(|c| !c.is_zero()) else {
            let ok = if ineq.strict {
                ineq.rhs.is_negative()
            } else {
                !ineq.rhs.is_positive()
            };
            return if ok { Ok(()) } else { Err(Contradiction) };
        };
        let scale = lead.abs().recip();
        let coeffs: Vector = ineq.coeffs.iter().map(|c| c * &scale).collect();
        let rhs = ineq.rhs * &scale;
        match self.by_direction.get_mut(&coeffs) {
            Some((old_rhs, old_strict)) => {
                if rhs > *old_rhs {
                    *old_rhs = rhs;
                    *old_strict = ineq.strict;
                } else if rhs == *old_rhs {
                    *old_strict |= ineq.strict;
                }
            }
            None => {
                self.by_direction.insert(coeffs, (rhs, ineq.strict));
            }
        }
        Ok(())
    }

    fn to_vec(&self) -> Vec<Ineq> {
        self.by_direction
            .iter()
            .map(|(coeffs, (rhs, strict))| Ineq {
                coeffs: coeffs.clone(),
                rhs: rhs.clone(),
                strict: *strict,
            })
            .collect()
    }
}

pub(super) fn solve(system: &LinearSystem) -> Feasibility {
    let dim = system.dim;
    let mut equalities = Vec::new();
    let mut inequalities = Vec::new();
    for c in &system.constraints {
        if let Some(ok) = split_trivial(c) {
            if !ok {
                return Feasibility::Infeasible;
            }
            continue;
        }
        match c.relation {
            Relation::Equal => equalities.push((c.coeffs.clone(), c.rhs.clone())),
            Relation::Greater | Relation::GreaterEq => inequalities.push(c),
        }
    }

    let (point, directions) = match solve_affine(dim, &equalities) {
        AffineSolution::Empty => return Feasibility::Infeasible,
        AffineSolution::Affine { point, directions } => (point, directions),
    };
    let k = directions.len();

    // a.(p + D y) rel b  <=>  (a.D) y rel b - a.p
    let mut set = IneqSet::default();
    for c in inequalities {
        let coeffs: Vector = directions.iter().map(|d| dot(&c.coeffs, d)).collect();
        let ineq = Ineq {
            coeffs,
            rhs: &c.rhs - dot(&c.coeffs, &point),
            strict: c.relation == Relation::Greater,
        };
        if set.insert(ineq).is_err() {
            return Feasibility::Infeasible;
        }
    }

    let Some(y) = eliminate(k, set) else {
        return Feasibility::Infeasible;
    };

    let mut x = point;
    for (t, d) in y.iter().zip(&directions) {
        for (xi, di) in x.iter_mut().zip(d) {
            *xi += t * di;
        }
    }
    Feasibility::Feasible(x)
}

/// Eliminates all `k` variables and returns a witness, or `None` when the
/// projection reaches a contradiction.
fn eliminate(k: usize, mut set: IneqSet) -> Option<Vector> {
    let mut stages: Vec<(usize, Vec<Ineq>)> = Vec::new();
    let mut remaining: Vec<usize> = (0..k).collect();

    loop {
        let current = set.to_vec();
        let Some((pick, var)) = choose_variable(&current, &remaining) else {
            break;
        };
        remaining.swap_remove(pick);

        let mut next = IneqSet::default();
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for ineq in &current {
            let c = &ineq.coeffs[var];
            if c.is_positive() {
                lower.push(ineq);
            } else if c.is_negative() {
                upper.push(ineq);
            } else if next.insert(ineq.clone()).is_err() {
                return None;
            }
        }
        for lo in &lower {
            let lo_scale = lo.coeffs[var].recip();
            for up in &upper {
                let up_scale = -up.coeffs[var].recip();
                let coeffs = lo
                    .coeffs
                    .iter()
                    .zip(&up.coeffs)
                    .map(|(a, b)| a * &lo_scale + b * &up_scale)
                    .collect();
                let combined = Ineq {
                    coeffs,
                    rhs: &lo.rhs * &lo_scale + &up.rhs * &up_scale,
                    strict: lo.strict || up.strict,
                };
                if next.insert(combined).is_err() {
                    return None;
                }
            }
        }
        stages.push((var, current));
        set = next;
    }

    let mut y = vec![Scalar::zero(); k];
    for (var, ineqs) in stages.iter().rev() {
        y[*var] = pick_in_interval(*var, ineqs, &y);
    }
    Some(y)
}

/// Picks the remaining variable whose elimination creates the fewest new
/// inequalities. Returns its position in `remaining` and its index.
fn choose_variable(current: &[Ineq], remaining: &[usize]) -> Option<(usize, usize)> {
    remaining
        .iter()
        .enumerate()
        .filter_map(|(pos, &var)| {
            let pos_count = current.iter().filter(|i| i.coeffs[var].is_positive()).count();
            let neg_count = current.iter().filter(|i| i.coeffs[var].is_negative()).count();
            if pos_count + neg_count == 0 {
                return None;
            }
            let growth = (pos_count * neg_count) as isize - (pos_count + neg_count) as isize;
            Some((growth, var, pos))
        })
        .min()
        .map(|(_, var, pos)| (pos, var))
}

fn pick_in_interval(var: usize, ineqs: &[Ineq], y: &[Scalar]) -> Scalar {
    let mut low: Option<Scalar> = None;
    let mut high: Option<Scalar> = None;
    for ineq in ineqs {
        let c = &ineq.coeffs[var];
        if c.is_zero() {
            continue;
        }
        let rest: Scalar = ineq
            .coeffs
            .iter()
            .zip(y)
            .enumerate()
            .filter(|(j, _)| *j != var)
            .fold(Scalar::zero(), |acc, (_, (a, v))| acc + a * v);
        let bound = (&ineq.rhs - rest) / c;
        if c.is_positive() {
            if low.as_ref().is_none_or(|l| bound > *l) {
                low = Some(bound);
            }
        } else if high.as_ref().is_none_or(|h| bound < *h) {
            high = Some(bound);
        }
    }
    let one = Scalar::one();
    match (low, high) {
        (Some(l), Some(h)) => (l + h) / Scalar::from_integer(2.into()),
        (Some(l), None) => l + one,
        (None, Some(h)) => h - one,
        (None, None) => Scalar::zero(),
    }
}
