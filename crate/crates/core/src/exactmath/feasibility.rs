use super::{dot, fourier_motzkin, simplex, Scalar, Sign, Vector};
use num::{Signed, Zero};

/// Ambient dimensions up to this value use Fourier-Motzkin elimination;
/// larger ones use the simplex method.
pub const FOURIER_MOTZKIN_MAX_DIM: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `a.x > b`
    Greater,
    /// `a.x >= b`
    GreaterEq,
    /// `a.x = b`
    Equal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vector,
    pub relation: Relation,
    pub rhs: Scalar,
}

impl Constraint {
    pub fn new(coeffs: Vector, relation: Relation, rhs: Scalar) -> Self {
        Self {
            coeffs,
            relation,
            rhs,
        }
    }

    pub fn is_satisfied_by(&self, x: &[Scalar]) -> bool {
        let lhs = dot(&self.coeffs, x);
        match self.relation {
            Relation::Greater => lhs > self.rhs,
            Relation::GreaterEq => lhs >= self.rhs,
            Relation::Equal => lhs == self.rhs,
        }
    }
}

/// A conjunction of linear constraints in `R^dim`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearSystem {
    pub dim: usize,
    pub constraints: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            constraints: Vec::new(),
        }
    }

    pub fn push(&mut self, coeffs: Vector, relation: Relation, rhs: Scalar) {
        assert_eq!(coeffs.len(), self.dim, "constraint dimension mismatch");
        self.constraints.push(Constraint::new(coeffs, relation, rhs));
    }

    pub fn is_satisfied_by(&self, x: &[Scalar]) -> bool {
        x.len() == self.dim && self.constraints.iter().all(|c| c.is_satisfied_by(x))
    }
}

/// `sign * (normal.x - offset) > 0`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictConstraint {
    pub normal: Vector,
    pub offset: Scalar,
    pub sign: Sign,
}

impl StrictConstraint {
    pub fn new(normal: Vector, offset: Scalar, sign: Sign) -> Self {
        Self {
            normal,
            offset,
            sign,
        }
    }

    pub fn holds_at(&self, x: &[Scalar]) -> bool {
        self.sign.apply(&(dot(&self.normal, x) - &self.offset)).is_positive()
    }

    fn to_constraint(&self) -> Constraint {
        let coeffs = self.normal.iter().map(|a| self.sign.apply(a)).collect();
        Constraint::new(coeffs, Relation::Greater, self.sign.apply(&self.offset))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Infeasible,
    Feasible(Vector),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn witness(&self) -> Option<&Vector> {
        match self {
            Feasibility::Feasible(w) => Some(w),
            Feasibility::Infeasible => None,
        }
    }

    pub fn into_witness(self) -> Option<Vector> {
        match self {
            Feasibility::Feasible(w) => Some(w),
            Feasibility::Infeasible => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    FourierMotzkin,
    Simplex,
}

/// Decides feasibility of `system`, returning a point satisfying every
/// constraint (strict ones strictly) when one exists.
pub fn feasible(system: &LinearSystem) -> Feasibility {
    let backend = if system.dim <= FOURIER_MOTZKIN_MAX_DIM {
        Backend::FourierMotzkin
    } else {
        Backend::Simplex
    };
    feasible_with(system, backend)
}

pub fn feasible_with(system: &LinearSystem, backend: Backend) -> Feasibility {
    let result = match backend {
        Backend::FourierMotzkin => fourier_motzkin::solve(system),
        Backend::Simplex => simplex::solve(system),
    };
    if let Feasibility::Feasible(w) = &result {
        debug_assert!(system.is_satisfied_by(w), "witness violates system");
    }
    result
}

/// Feasibility of the open polyhedron cut out by `strict` inside the affine
/// subspace defined by `loose` equalities.
pub fn feasible_strict(
    dim: usize,
    strict: &[StrictConstraint],
    loose: &[(Vector, Scalar)],
) -> Feasibility {
    let mut system = LinearSystem::new(dim);
    for s in strict {
        let c = s.to_constraint();
        system.push(c.coeffs, c.relation, c.rhs);
    }
    for (a, b) in loose {
        system.push(a.clone(), Relation::Equal, b.clone());
    }
    feasible(&system)
}

/// Drops constraints whose coefficient vector is zero, reporting
/// infeasibility if one of them is violated.
pub(crate) fn split_trivial(constraint: &Constraint) -> Option<bool> {
    if !constraint.coeffs.iter().all(Zero::is_zero) {
        return None;
    }
    let zero = Scalar::zero();
    Some(match constraint.relation {
        Relation::Greater => zero > constraint.rhs,
        Relation::GreaterEq => zero >= constraint.rhs,
        Relation::Equal => zero == constraint.rhs,
    })
}
