//! Finite-field point counting: for an integer arrangement and a large
//! enough prime `q`, `chi(q)` is the number of points of `F_q^n` lying on
//! none of the hyperplanes reduced mod `q`. Independent of the poset code.
//!
//! "Large enough" means the reduction mod `q` keeps every rank of every
//! subsystem `[A_S | b_S]`, which holds when `q` divides no nonzero minor of
//! the integer matrix `[A | b]`.

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exactmath::Scalar;
use crate::poset::char_poly;
use itertools::Itertools;
use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use std::collections::BTreeSet;

/// Largest `q^n` that [`count_complement_points`] will iterate over.
pub const POINT_LIMIT: u64 = 10_000_000;

/// Hyperplanes scaled to integer coefficients: `(normal, offset)`.
pub fn integer_equations(arr: &Arrangement) -> Vec<(Vec<BigInt>, BigInt)> {
    arr.hyperplanes()
        .iter()
        .map(|h| {
            let lcm = h
                .normal()
                .iter()
                .chain(std::iter::once(h.offset()))
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let scale = Scalar::from_integer(lcm);
            let normal = h.normal().iter().map(|a| (a * &scale).to_integer()).collect();
            (normal, (h.offset() * &scale).to_integer())
        })
        .collect()
}

/// Largest absolute value among the integerized coefficients and offsets.
pub fn coefficient_bound(arr: &Arrangement) -> BigInt {
    integer_equations(arr)
        .into_iter()
        .flat_map(|(a, b)| a.into_iter().chain(std::iter::once(b)))
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let k = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for i in 0..k {
        let Some(p) = (i..k).find(|&r| !a[r][i].is_zero()) else {
            return BigInt::zero();
        };
        if p != i {
            a.swap(p, i);
            sign = -sign;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                a[r][c] = (&a[r][c] * &a[i][i] - &a[r][i] * &a[i][c]) / &prev;
            }
        }
        prev = a[i][i].clone();
    }
    sign * &a[k - 1][k - 1]
}

/// Absolute values of all nonzero minors of the integer matrix `[A | b]`.
pub fn nonzero_minors(arr: &Arrangement) -> BTreeSet<BigInt> {
    let rows: Vec<Vec<BigInt>> = integer_equations(arr)
        .into_iter()
        .map(|(mut a, b)| {
            a.push(b);
            a
        })
        .collect();
    let cols = arr.dim() + 1;
    (1..=cols.min(rows.len()))
        .flat_map(|k| (0..rows.len()).combinations(k).map(move |rs| (k, rs)))
        .par_bridge()
        .flat_map_iter(|(k, rs)| {
            let rows = &rows;
            (0..cols).combinations(k).filter_map(move |cs| {
                let sub = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| rows[r][c].clone()).collect())
                    .collect();
                let d = determinant(sub).abs();
                (!d.is_zero()).then_some(d)
            })
        })
        .collect()
}

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

fn checked_points(q: u64, dim: usize) -> Option<u64> {
    let exp = u32::try_from(dim).ok()?;
    q.checked_pow(exp).filter(|&p| p <= POINT_LIMIT)
}

/// `|{x in F_q^n : a_i . x != b_i (mod q) for all i}|` by direct iteration.
pub fn count_complement_points(arr: &Arrangement, q: u64) -> Result<u64> {
    if !is_prime(q) {
        return Err(Error::InvalidInput(format!("{q} is not prime")));
    }
    let n = arr.dim();
    let total = checked_points(q, n).ok_or(Error::FieldTooLarge {
        q,
        dim: n,
        limit: POINT_LIMIT,
    })?;
    let modulus = BigInt::from(q);
    let reduce = |x: &BigInt| x.mod_floor(&modulus).to_u64().expect("residue fits in u64");
    let equations: Vec<(Vec<u64>, u64)> = integer_equations(arr)
        .iter()
        .map(|(a, b)| (a.iter().map(reduce).collect(), reduce(b)))
        .collect();

    let count = (0..total)
        .into_par_iter()
        .filter(|&index| {
            let mut point = Vec::with_capacity(n);
            let mut rest = index;
            for _ in 0..n {
                point.push(rest % q);
                rest /= q;
            }
            equations.iter().all(|(a, b)| {
                let value = a
                    .iter()
                    .zip(&point)
                    .fold(0u64, |acc, (ai, xi)| (acc + ai * xi) % q);
                value != *b
            })
        })
        .count();
    Ok(count as u64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeCheck {
    pub q: u64,
    pub count: u64,
    /// `chi(q)` from the intersection poset.
    pub expected: Scalar,
    pub agrees: bool,
}

/// Point counts at several admissible primes compared with `chi(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePlan {
    pub coefficient_bound: BigInt,
    pub requested: usize,
    /// Primes above the bound passed over because they divide a minor.
    pub skipped: Vec<u64>,
    pub checks: Vec<PrimeCheck>,
}

impl PrimePlan {
    /// Fewer admissible primes fit under [`POINT_LIMIT`] than requested.
    pub fn is_partial(&self) -> bool {
        self.checks.len() < self.requested
    }

    pub fn all_agree(&self) -> bool {
        self.checks.iter().all(|c| c.agrees)
    }
}

/// Primes `q > 2 * bound` with `q^dim <= POINT_LIMIT`, smallest first,
/// split into those with good reduction and those dividing some nonzero
/// minor of `[A | b]`.
fn scan_primes(arr: &Arrangement, count: usize) -> (Vec<u64>, Vec<u64>) {
    let bound = coefficient_bound(arr);
    let Some(start) = (bound * 2u32 + 1u32).to_u64() else {
        return (Vec::new(), Vec::new());
    };
    let minors = nonzero_minors(arr);
    let (mut good, mut bad) = (Vec::new(), Vec::new());
    let mut q = start.max(2);
    while good.len() < count && checked_points(q, arr.dim()).is_some() {
        if is_prime(q) {
            let modulus = BigInt::from(q);
            if minors.iter().any(|m| m.is_multiple_of(&modulus)) {
                bad.push(q);
            } else {
                good.push(q);
            }
        }
        q += 1;
    }
    (good, bad)
}

/// The `count` smallest primes usable for [`ff_oracle_check`].
pub fn admissible_primes(arr: &Arrangement, count: usize) -> Vec<u64> {
    scan_primes(arr, count).0
}

/// Compares point counts with the characteristic polynomial at the
/// `num_primes` smallest admissible primes.
pub fn ff_oracle_check(arr: &Arrangement, num_primes: usize) -> Result<PrimePlan> {
    let chi = char_poly(arr);
    let (primes, skipped) = scan_primes(arr, num_primes);
    let checks = primes
        .into_iter()
        .map(|q| {
            let count = count_complement_points(arr, q)?;
            let expected = chi.eval(&Scalar::from_integer(q.into()));
            Ok(PrimeCheck {
                q,
                count,
                agrees: expected == Scalar::from_integer(count.into()),
                expected,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PrimePlan {
        coefficient_bound: coefficient_bound(arr),
        requested: num_primes,
        skipped,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{make_cox_a, make_cox_b};
    use crate::exactmath::{ints, ratio};
    use crate::samples;

    #[test]
    fn empty_line_over_f5() {
        assert_eq!(count_complement_points(&Arrangement::empty(1), 5).unwrap(), 5);
    }

    #[test]
    fn braid_two_over_f5() {
        assert_eq!(count_complement_points(&make_cox_a(2).unwrap(), 5).unwrap(), 20);
    }

    #[test]
    fn type_a_example_over_f7() {
        assert_eq!(count_complement_points(&samples::type_a_example(), 7).unwrap(), 140);
    }

    #[test]
    fn guard_and_primality() {
        let big = make_cox_a(5).unwrap();
        assert!(matches!(
            count_complement_points(&big, 29),
            Err(Error::FieldTooLarge { q: 29, dim: 5, .. })
        ));
        assert!(count_complement_points(&big, 4).is_err());
    }

    #[test]
    fn denominators_are_cleared() {
        let arr = Arrangement::from_equations(2, vec![(ints(&[1, -1]), ratio(3, 2))]).unwrap();
        assert_eq!(integer_equations(&arr), vec![(vec![2.into(), (-2).into()], 3.into())]);
        assert_eq!(coefficient_bound(&arr), BigInt::from(3));
        assert_eq!(admissible_primes(&arr, 2), vec![7, 11]);
    }

    #[test]
    fn oracle_agrees_on_samples() {
        let plan = ff_oracle_check(&samples::type_a_example(), 3).unwrap();
        assert_eq!(plan.checks.len(), 3);
        assert!(plan.all_agree());
        let plan = ff_oracle_check(&samples::level_example(), 2).unwrap();
        assert!(plan.all_agree() && !plan.is_partial());
        let plan = ff_oracle_check(&make_cox_b(2).unwrap(), 2).unwrap();
        for c in &plan.checks {
            assert_eq!(c.count, (c.q - 1) * (c.q - 3));
        }
    }

    #[test]
    fn primes_dividing_a_minor_are_skipped() {
        // x1 - x2 = 3, x2 - x3 = 3, x1 - x3 = -1: concurrent mod 7 only
        let arr = Arrangement::from_equations(
            3,
            vec![
                (ints(&[1, -1, 0]), crate::exactmath::int(3)),
                (ints(&[0, 1, -1]), crate::exactmath::int(3)),
                (ints(&[1, 0, -1]), crate::exactmath::int(-1)),
            ],
        )
        .unwrap();
        assert!(nonzero_minors(&arr).contains(&BigInt::from(7)));
        let plan = ff_oracle_check(&arr, 2).unwrap();
        assert_eq!(plan.skipped, vec![7]);
        assert_eq!(plan.checks.iter().map(|c| c.q).collect::<Vec<_>>(), vec![11, 13]);
        assert!(plan.all_agree());
        // the skipped prime really does disagree
        let chi = char_poly(&arr).eval(&crate::exactmath::int(7));
        assert_ne!(Scalar::from_integer(count_complement_points(&arr, 7).unwrap().into()), chi);
    }

    #[test]
    fn bareiss_determinant() {
        let m = |rows: &[&[i64]]| rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        assert_eq!(determinant(m(&[&[2, 1], &[1, 3]])), BigInt::from(5));
        assert_eq!(determinant(m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])), BigInt::zero());
        assert_eq!(determinant(m(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 4]])), BigInt::from(-21));
    }

    #[test]
    fn partial_plan_when_no_prime_fits() {
        let arr = Arrangement::from_equations(4, vec![(ints(&[1, 0, 0, 0]), crate::exactmath::int(100))]).unwrap();
        let plan = ff_oracle_check(&arr, 2).unwrap();
        assert!(plan.checks.is_empty());
        assert!(plan.is_partial());
    }
}
