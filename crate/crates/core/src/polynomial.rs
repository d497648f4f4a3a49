use crate::exactmath::Scalar;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Univariate polynomial in `t` with exact rational coefficients, stored
/// lowest degree first with no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(crate::exactmath::ints(coeffs))
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    /// `t - root`
    pub fn linear(root: Scalar) -> Self {
        Self::new(vec![-root, Scalar::one()])
    }

    /// `t^k`
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Scalar::zero(); k + 1];
        c[k] = Scalar::one();
        Self { coeffs: c }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

fn fmt_coeff(c: &Scalar) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

impl fmt::Display for Polynomial {
    /// Highest degree first, e.g. `t^3 - 5t^2 + 6t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            let body = match k {
                0 => fmt_coeff(&magnitude),
                _ => {
                    let power = if k == 1 { "t".to_string() } else { format!("t^{k}") };
                    if magnitude.is_one() {
                        power
                    } else {
                        format!("{}{power}", fmt_coeff(&magnitude))
                    }
                }
            };
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}
