//! Binomial-basis expansions of characteristic polynomials and the
//! level-count validators built on them.
//!
//! For a non-degenerate deformation of the type A Coxeter arrangement in
//! `R^n` the coefficients of `chi` in the basis `binom(t, k)` are
//! `(-1)^(n-k) r_k`, where `r_k` counts regions of level `k`. For type B the
//! same holds in the basis `binom((t-1)/2, k)`.

use crate::arrangement::{is_nondegenerate, Arrangement, DeformationType};
use crate::error::{Error, Result};
use crate::exactmath::{int, Scalar};
use crate::polynomial::Polynomial;
use crate::poset::char_poly;
use crate::regions::{level_profile, LevelProfile};
use num::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisKind {
    /// `binom(t, k) = t(t-1)...(t-k+1) / k!`
    StandardBinomial,
    /// `binom((t-1)/2, k) = (t-1)(t-3)...(t-2k+1) / (2^k k!)`
    ShiftedHalf,
}

impl BasisKind {
    pub fn for_type(t: DeformationType) -> Self {
        match t {
            DeformationType::A => BasisKind::StandardBinomial,
            DeformationType::B => BasisKind::ShiftedHalf,
        }
    }

    /// The degree-`k` basis polynomial.
    pub fn basis_polynomial(self, k: usize) -> Polynomial {
        let mut p = Polynomial::constant(Scalar::one());
        for j in 0..k {
            let j = j as i64;
            let (root, denom) = match self {
                BasisKind::StandardBinomial => (int(j), int(j + 1)),
                BasisKind::ShiftedHalf => (int(2 * j + 1), int(2 * (j + 1))),
            };
            p = (&p * &Polynomial::linear(root)).scale(&denom.recip());
        }
        p
    }

    fn symbol(self) -> &'static str {
        match self {
            BasisKind::StandardBinomial => "t",
            BasisKind::ShiftedHalf => "(t-1)/2",
        }
    }
}

/// `sum_k coeffs[k] * basis_k(t)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialExpansion {
    pub kind: BasisKind,
    pub coeffs: Vec<Scalar>,
}

impl BinomialExpansion {
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        self.coeffs
            .iter()
            .enumerate()
            .fold(Polynomial::zero(), |acc, (k, c)| {
                &acc + &self.kind.basis_polynomial(k).scale(c)
            })
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.to_polynomial().eval(t)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for BinomialExpansion {
    /// e.g. `6*C(t,3) - 4*C(t,2) + 2*C(t,1)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            let factor = if magnitude.is_one() {
                String::new()
            } else if magnitude.is_integer() {
                format!("{magnitude}*")
            } else {
                format!("({magnitude})*")
            };
            let term = format!("{factor}C({},{k})", self.kind.symbol());
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{term}")?,
                (true, true) => write!(f, "-{term}")?,
                (false, false) => write!(f, " + {term}")?,
                (false, true) => write!(f, " - {term}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Expresses `p` in the given basis by back-substitution from the top
/// degree; the degree-`k` basis element has degree exactly `k`.
pub fn to_binomial_basis(p: &Polynomial, kind: BasisKind) -> BinomialExpansion {
    let n = p.degree().unwrap_or(0);
    let mut rest = p.clone();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    for k in (0..=n).rev() {
        let basis = kind.basis_polynomial(k);
        let c = rest.coeff(k) / basis.leading();
        rest = &rest - &basis.scale(&c);
        coeffs[k] = c;
    }
    debug_assert!(rest.is_zero());
    BinomialExpansion { kind, coeffs }
}

/// Comparison of one expansion coefficient with the signed level count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionRow {
    pub k: usize,
    pub coefficient: Scalar,
    pub level_count: u64,
    /// `(-1)^(n-k) * r_k`
    pub expected: Scalar,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub kind: DeformationType,
    pub char_poly: Polynomial,
    pub expansion: BinomialExpansion,
    pub profile: LevelProfile,
    pub rows: Vec<ExpansionRow>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

fn signed(n: usize, k: usize, count: u64) -> Scalar {
    let v = Scalar::from_integer(count.into());
    if (n - k).is_multiple_of(2) {
        v
    } else {
        -v
    }
}

fn verify_expansion(arr: &Arrangement, kind: DeformationType) -> Result<VerificationReport> {
    let report = is_nondegenerate(arr, kind);
    if !report.is_ok() {
        return Err(Error::Degenerate(report));
    }
    let n = arr.dim();
    let chi = char_poly(arr);
    let profile = level_profile(arr);
    let expansion = to_binomial_basis(&chi, BasisKind::for_type(kind));
    let rows = (0..=n)
        .map(|k| {
            let coefficient = expansion.coeff(k);
            let level_count = profile.get(k);
            let expected = signed(n, k, level_count);
            ExpansionRow {
                k,
                pass: coefficient == expected,
                coefficient,
                level_count,
                expected,
            }
        })
        .collect();
    Ok(VerificationReport {
        kind,
        char_poly: chi,
        expansion,
        profile,
        rows,
    })
}

/// Checks `chi(t) = sum_k (-1)^(n-k) r_k binom(t, k)`, computing `chi` from
/// the intersection poset and `r_k` from region enumeration.
pub fn verify_type_a_expansion(arr: &Arrangement) -> Result<VerificationReport> {
    verify_expansion(arr, DeformationType::A)
}

/// Checks `chi(t) = sum_k (-1)^(n-k) r_k binom((t-1)/2, k)`.
pub fn verify_type_b_expansion(arr: &Arrangement) -> Result<VerificationReport> {
    verify_expansion(arr, DeformationType::B)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZaslavskyCheck {
    /// `(-1)^n chi(-1)`
    pub signed_chi_at_minus_one: Scalar,
    pub region_count: u64,
    pub pass: bool,
}

pub fn zaslavsky_check(arr: &Arrangement) -> ZaslavskyCheck {
    let chi = char_poly(arr);
    let at = chi.eval(&int(-1));
    let signed_value = if arr.dim().is_multiple_of(2) { at } else { -at };
    let region_count = level_profile(arr).total();
    ZaslavskyCheck {
        pass: signed_value == Scalar::from_integer(region_count.into()),
        signed_chi_at_minus_one: signed_value,
        region_count,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionRestrictionRow {
    pub hyperplane: usize,
    pub chi: Polynomial,
    pub deleted: Polynomial,
    pub restricted: Polynomial,
    pub pass: bool,
}

/// `chi_A = chi_{A - H} - chi_{A^H}` for every choice of `H`.
pub fn deletion_restriction_check(arr: &Arrangement) -> Result<Vec<DeletionRestrictionRow>> {
    let chi = char_poly(arr);
    (0..arr.len())
        .into_par_iter()
        .map(|i| {
            let deleted = char_poly(&arr.delete(i)?);
            let restricted = char_poly(&arr.restrict(i)?.0);
            Ok(DeletionRestrictionRow {
                hyperplane: i,
                pass: chi == &deleted - &restricted,
                chi: chi.clone(),
                deleted,
                restricted,
            })
        })
        .collect()
}
