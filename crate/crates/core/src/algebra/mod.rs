//! Ring substrate: exact rationals, parameter polynomials, per-root factor
//! series and truncated polynomials in the Chern roots.

pub mod mvpoly;
pub mod rational;
pub mod series;
pub mod unipoly;

pub use mvpoly::{Monomial, MvPoly};
pub use rational::{binomial, q, Rational};
pub use series::{
    exp_coefficients, genus_factor, mv_substitute, series_exp_scaled, series_todd,
    todd_coefficients, FactorSeries, GenusKind,
};
pub use unipoly::{Param, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("series known only through x^{xcap}, need x^{n}")]
    SeriesTooShort { xcap: usize, n: usize },
    #[error("cannot combine series in {left} and {right}")]
    ParamMismatch { left: Param, right: Param },
    #[error("unknown tag {0:?}")]
    UnknownTag(String),
}

/// Coefficient ring of a [`MvPoly`].
pub trait Coefficient: Clone + PartialEq + Send + Sync {
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
}

impl Coefficient for Rational {
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
}
