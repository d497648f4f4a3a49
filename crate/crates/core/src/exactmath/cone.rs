use super::feasibility::{feasible, Feasibility, LinearSystem, Relation};
use super::matrix::rank_of;
use super::{dot, Scalar, Sign, Vector};
use num::{Signed, Zero};
use std::collections::BTreeSet;

/// Dimension of the linear span of `C = {d : sign_i * (a_i . d) >= 0}`.
///
/// A constraint is an implicit equality when `sign_i * a_i . d` vanishes on
/// all of `C`, i.e. when `C` together with `sign_i * a_i . d > 0` has no
/// point. (Equivalently its maximum over `C` intersected with the unit box is
/// zero; `C` is a cone so the box is unnecessary.) The span of `C` is the
/// null space of the implicit equalities.
pub fn cone_span_dimension(dim: usize, cone: &[(Vector, Sign)]) -> usize {
    let oriented: BTreeSet<Vector> = cone
        .iter()
        .map(|(a, s)| {
            assert_eq!(a.len(), dim, "cone constraint dimension mismatch");
            a.iter().map(|v| s.apply(v)).collect::<Vector>()
        })
        .filter(|v: &Vector| v.iter().any(|x| !x.is_zero()))
        .collect();
    let oriented: Vec<Vector> = oriented.into_iter().collect();

    let mut base = LinearSystem::new(dim);
    for v in &oriented {
        base.push(v.clone(), Relation::GreaterEq, Scalar::zero());
    }

    // None = undecided, Some(true) = implicit equality.
    let mut implicit: Vec<Option<bool>> = vec![None; oriented.len()];
    for i in 0..oriented.len() {
        if implicit[i].is_some() {
            continue;
        }
        let negated: Vector = oriented[i].iter().map(|x| -x).collect();
        if oriented.binary_search(&negated).is_ok() {
            implicit[i] = Some(true);
            continue;
        }
        let mut probe = base.clone();
        probe.push(oriented[i].clone(), Relation::Greater, Scalar::zero());
        match feasible(&probe) {
            Feasibility::Infeasible => implicit[i] = Some(true),
            Feasibility::Feasible(d) => {
                for (j, v) in oriented.iter().enumerate() {
                    if dot(v, &d).is_positive() {
                        implicit[j] = Some(false);
                    }
                }
            }
        }
    }

    let equalities: Vec<Vector> = oriented
        .into_iter()
        .zip(implicit)
        .filter(|(_, imp)| *imp == Some(true))
        .map(|(v, _)| v)
        .collect();
    dim - rank_of(dim, &equalities)
}
