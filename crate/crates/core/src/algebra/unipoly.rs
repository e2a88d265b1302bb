//! Dense, degree-capped polynomials in one formal parameter.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::rational::Rational;
use super::Coefficient;

/// Name of the formal parameter of a genus polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    Y,
    Z,
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Param::Y => "y",
            Param::Z => "z",
        })
    }
}

impl std::str::FromStr for Param {
    type Err = super::AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "y" => Ok(Param::Y),
            "z" => Ok(Param::Z),
            other => Err(super::AlgebraError::UnknownTag(other.to_string())),
        }
    }
}

/// `Σ_{k ≤ cap} coeffs[k] · t^k` with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    param: Param,
    cap: usize,
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero(param: Param, cap: usize) -> Self {
        UniPoly {
            param,
            cap,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(param: Param, cap: usize, c: Rational) -> Self {
        Self::from_coeffs(param, cap, vec![c])
    }

    /// Builds from dense coefficients; entries beyond `cap` are dropped.
    pub fn from_coeffs(param: Param, cap: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.truncate(cap + 1);
        let mut p = UniPoly { param, cap, coeffs };
        p.trim();
        p
    }

    /// `c · t^k`, or zero when `k > cap`.
    pub fn monomial(param: Param, cap: usize, k: usize, c: Rational) -> Self {
        if k > cap {
            return Self::zero(param, cap);
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(param, cap, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn param(&self) -> Param {
        self.param
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn evaluate(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// Exact re-expansion under `t ↦ t + shift`, keeping the cap.
    pub fn shift(&self, shift: &Rational) -> UniPoly {
        // Horner in polynomial arithmetic: p(t+s) = (...(c_d (t+s) + c_{d-1})(t+s) ...)
        let lin = UniPoly::from_coeffs(self.param, self.cap, vec![shift.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(self.param, self.cap), |acc, c| {
                acc.mul_ref(&lin)
                    .add_ref(&UniPoly::constant(self.param, self.cap, c.clone()))
            })
    }

    /// Same coefficients under a different tag and cap.
    pub fn retag(&self, param: Param, cap: usize) -> UniPoly {
        UniPoly::from_coeffs(param, cap, self.coeffs.clone())
    }

    fn check_compatible(&self, other: &UniPoly) {
        assert_eq!(
            self.param, other.param,
            "mixing polynomials in {} and {}",
            self.param, other.param
        );
    }
}

impl Coefficient for UniPoly {
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let cap = self.cap.min(other.cap);
        let len = self.coeffs.len().max(other.coeffs.len()).min(cap + 1);
        let coeffs = (0..len)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => Rational::zero(),
            })
            .collect();
        UniPoly::from_coeffs(self.param, cap, coeffs)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let cap = self.cap.min(other.cap);
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.param, cap);
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(cap + 1);
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len.saturating_sub(i)) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        UniPoly::from_coeffs(self.param, cap, coeffs)
    }

    fn neg_ref(&self) -> Self {
        UniPoly {
            param: self.param,
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn scale(&self, r: &Rational) -> Self {
        UniPoly::from_coeffs(
            self.param,
            self.cap,
            self.coeffs.iter().map(|c| c * r).collect(),
        )
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}·")?;
                    }
                    if k == 1 {
                        write!(f, "{}", self.param)?;
                    } else {
                        write!(f, "{}^{k}", self.param)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{}≤{}]({})", self.param, self.cap, self)
    }
}
