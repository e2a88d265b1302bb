//! Truncated bivariate series `Σ a[j][k] x^j t^k` for the per-root factors
//! of the genera, and their instantiation at a Chern root.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::mvpoly::{Monomial, MvPoly};
use super::rational::Rational;
use super::unipoly::{Param, UniPoly};
use super::{AlgebraError, Coefficient};

/// Which genus a per-root factor belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenusKind {
    /// Hirzebruch χ_y.
    #[serde(rename = "chi-y")]
    ChiY,
    /// Twisted Dirac indices `Â(M, Λ^p T*)`.
    #[serde(rename = "a-y")]
    AY,
    /// Twisted signature indices `L(M, Λ^p T*)`.
    #[serde(rename = "l-y")]
    LY,
}

impl GenusKind {
    pub const ALL: [GenusKind; 3] = [GenusKind::ChiY, GenusKind::AY, GenusKind::LY];

    pub fn name(self) -> &'static str {
        match self {
            GenusKind::ChiY => "chi-y",
            GenusKind::AY => "a-y",
            GenusKind::LY => "l-y",
        }
    }
}

impl fmt::Display for GenusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenusKind {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "chi-y" | "chiy" | "chi_y" => Ok(GenusKind::ChiY),
            "a-y" | "ay" | "a_y" => Ok(GenusKind::AY),
            "l-y" | "ly" | "l_y" => Ok(GenusKind::LY),
            _ => Err(AlgebraError::UnknownTag(s.to_string())),
        }
    }
}

/// Series in `x` (through `x^xcap`) whose coefficients are polynomials in a
/// parameter `t` (through `t^pcap`).
#[derive(Clone, PartialEq)]
pub struct FactorSeries {
    param: Param,
    xcap: usize,
    pcap: usize,
    /// `rows[j]` is the coefficient of `x^j`.
    rows: Vec<UniPoly>,
}

impl FactorSeries {
    pub fn zero(param: Param, xcap: usize, pcap: usize) -> Self {
        FactorSeries {
            param,
            xcap,
            pcap,
            rows: vec![UniPoly::zero(param, pcap); xcap + 1],
        }
    }

    pub fn one(param: Param, xcap: usize, pcap: usize) -> Self {
        Self::from_x_coeffs(param, xcap, pcap, &[Rational::one()])
    }

    /// `Σ_j cs[j] x^j`, constant in the parameter.
    pub fn from_x_coeffs(param: Param, xcap: usize, pcap: usize, cs: &[Rational]) -> Self {
        let mut s = Self::zero(param, xcap, pcap);
        for (j, c) in cs.iter().enumerate().take(xcap + 1) {
            s.rows[j] = UniPoly::constant(param, pcap, c.clone());
        }
        s
    }

    /// `Σ_j cs[j] (x·t)^j`: a single-variable series evaluated at `x·t`.
    pub fn diagonal(param: Param, xcap: usize, pcap: usize, cs: &[Rational]) -> Self {
        let mut s = Self::zero(param, xcap, pcap);
        for (j, c) in cs.iter().enumerate().take(xcap + 1) {
            s.rows[j] = UniPoly::monomial(param, pcap, j, c.clone());
        }
        s
    }

    /// Builds from a table `table[j][k]` of `x^j t^k` coefficients.
    pub fn from_table(param: Param, xcap: usize, pcap: usize, table: Vec<Vec<Rational>>) -> Self {
        let mut s = Self::zero(param, xcap, pcap);
        for (j, row) in table.into_iter().enumerate().take(xcap + 1) {
            s.rows[j] = UniPoly::from_coeffs(param, pcap, row);
        }
        s
    }

    pub fn param(&self) -> Param {
        self.param
    }

    pub fn xcap(&self) -> usize {
        self.xcap
    }

    pub fn pcap(&self) -> usize {
        self.pcap
    }

    /// `a[j][k]`; zero outside the caps.
    pub fn coeff(&self, j: usize, k: usize) -> Rational {
        self.rows
            .get(j)
            .map(|r| r.coeff(k))
            .unwrap_or_else(Rational::zero)
    }

    /// The parameter polynomial multiplying `x^j`.
    pub fn x_coeff(&self, j: usize) -> &UniPoly {
        &self.rows[j]
    }

    /// Coefficients of `t^0` as a plain list, for parameter-free series.
    pub fn x_coeffs(&self) -> Vec<Rational> {
        self.rows.iter().map(|r| r.coeff(0)).collect()
    }

    /// Re-embeds under another parameter tag and cap. A series with
    /// parameter cap 0 carries no parameter and may be retagged freely.
    pub fn embed(&self, param: Param, pcap: usize) -> Result<Self, AlgebraError> {
        if self.pcap > 0 && self.param != param {
            return Err(AlgebraError::ParamMismatch {
                left: self.param,
                right: param,
            });
        }
        Ok(FactorSeries {
            param,
            xcap: self.xcap,
            pcap,
            rows: self.rows.iter().map(|r| r.retag(param, pcap)).collect(),
        })
    }

    fn compatible(&self, other: &Self) -> Result<(Param, usize, usize), AlgebraError> {
        let param = match (self.pcap, other.pcap) {
            _ if self.param == other.param => self.param,
            (0, _) => other.param,
            (_, 0) => self.param,
            _ => {
                return Err(AlgebraError::ParamMismatch {
                    left: self.param,
                    right: other.param,
                })
            }
        };
        Ok((param, self.xcap.min(other.xcap), self.pcap.min(other.pcap)))
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        let (param, xcap, pcap) = self.compatible(other)?;
        let (a, b) = (self.embed(param, pcap)?, other.embed(param, pcap)?);
        let rows = (0..=xcap).map(|j| a.rows[j].add_ref(&b.rows[j])).collect();
        Ok(FactorSeries {
            param,
            xcap,
            pcap,
            rows,
        })
    }

    /// Product truncated at both the smaller x-cap and the smaller
    /// parameter cap.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        let (param, xcap, pcap) = self.compatible(other)?;
        let (a, b) = (self.embed(param, pcap)?, other.embed(param, pcap)?);
        let mut out = Self::zero(param, xcap, pcap);
        for i in 0..=xcap {
            if a.rows[i].is_zero() {
                continue;
            }
            for j in 0..=(xcap - i) {
                if b.rows[j].is_zero() {
                    continue;
                }
                out.rows[i + j] = out.rows[i + j].add_ref(&a.rows[i].mul_ref(&b.rows[j]));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        FactorSeries {
            rows: self.rows.iter().map(UniPoly::neg_ref).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        FactorSeries {
            rows: self.rows.iter().map(|p| p.scale(r)).collect(),
            ..self.clone()
        }
    }

    /// Applies `t ↦ t + shift` to every coefficient.
    pub fn shift_param(&self, shift: &Rational) -> Self {
        FactorSeries {
            rows: self.rows.iter().map(|p| p.shift(shift)).collect(),
            ..self.clone()
        }
    }
}

impl fmt::Display for FactorSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, r) in self.rows.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({r})")?,
                1 => write!(f, "({r})·x")?,
                _ => write!(f, "({r})·x^{j}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FactorSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FactorSeries[x≤{}, {}≤{}]({})",
            self.xcap, self.param, self.pcap, self
        )
    }
}

/// Taylor coefficients of `u / (1 − e^{−u})` through `u^xcap`, by inverting
/// `(1 − e^{−u}) / u = Σ (−1)^k u^k / (k+1)!` term by term.
pub fn todd_coefficients(xcap: usize) -> Vec<Rational> {
    let mut inv_fact = Rational::one();
    let mut denom = Vec::with_capacity(xcap + 1);
    for k in 0..=xcap {
        inv_fact = inv_fact / Rational::from_integer((k + 1) as i64);
        let sign = if k % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        denom.push(sign * &inv_fact);
    }
    let mut todd: Vec<Rational> = Vec::with_capacity(xcap + 1);
    todd.push(Rational::one());
    for m in 1..=xcap {
        let s: Rational = (1..=m).map(|i| &denom[i] * &todd[m - i]).sum();
        todd.push(-s);
    }
    todd
}

/// Coefficients of `e^{a·u}` through `u^xcap`.
pub fn exp_coefficients(a: &Rational, xcap: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(xcap + 1);
    let mut term = Rational::one();
    out.push(term.clone());
    for k in 1..=xcap {
        term = term * a / Rational::from_integer(k as i64);
        out.push(term.clone());
    }
    out
}

/// `u / (1 − e^{−u})` as a parameter-free series (parameter cap 0).
pub fn series_todd(xcap: usize) -> FactorSeries {
    FactorSeries::from_x_coeffs(Param::Y, xcap, 0, &todd_coefficients(xcap))
}

/// `e^{a·u}` as a parameter-free series (parameter cap 0).
pub fn series_exp_scaled(a: &Rational, xcap: usize) -> FactorSeries {
    FactorSeries::from_x_coeffs(Param::Y, xcap, 0, &exp_coefficients(a, xcap))
}

/// The per-Chern-root factor of a genus.
///
/// With `Param::Y` this is `(1 + y e^{-x}) · x/(1 − e^{-x})`, times
/// `e^{-x/2}` for [`GenusKind::AY`] or `(1 + e^{-x})` for [`GenusKind::LY`].
///
/// With `Param::Z` (`z = 1 + y`) the roots are rescaled by `z` inside the
/// transcendental parts: the core becomes `−x(z − 1) + (xz)/(1 − e^{-xz})`,
/// multiplied by `e^{-xz/2}` or `(1 + e^{-xz})`. Its degree-`n` product over
/// `n` roots equals the y-version re-expanded at `y = z − 1`.
pub fn genus_factor(kind: GenusKind, param: Param, xcap: usize, pcap: usize) -> FactorSeries {
    let minus_half = Rational::new(-1, 2);
    let minus_one = -Rational::one();
    let (core, extra) = match param {
        Param::Y => {
            // 1 + y e^{-x}
            let mut table: Vec<Vec<Rational>> = exp_coefficients(&minus_one, xcap)
                .into_iter()
                .map(|c| vec![Rational::zero(), c])
                .collect();
            table[0][0] = Rational::one();
            let twist = FactorSeries::from_table(param, xcap, pcap, table);
            let todd = FactorSeries::from_x_coeffs(param, xcap, pcap, &todd_coefficients(xcap));
            let extra = match kind {
                GenusKind::ChiY => None,
                GenusKind::AY => Some(FactorSeries::from_x_coeffs(
                    param,
                    xcap,
                    pcap,
                    &exp_coefficients(&minus_half, xcap),
                )),
                GenusKind::LY => {
                    let mut e = exp_coefficients(&minus_one, xcap);
                    e[0] += Rational::one();
                    Some(FactorSeries::from_x_coeffs(param, xcap, pcap, &e))
                }
            };
            (twist.mul(&todd).expect("same parametrization"), extra)
        }
        Param::Z => {
            // x - x z + todd(x z)
            let mut core = FactorSeries::diagonal(param, xcap, pcap, &todd_coefficients(xcap));
            if xcap >= 1 {
                let mut lin = vec![Rational::one()];
                if pcap >= 1 {
                    lin.push(minus_one.clone());
                }
                let shift = FactorSeries::from_table(param, xcap, pcap, vec![vec![], lin]);
                core = core.add(&shift).expect("same parametrization");
            }
            let extra = match kind {
                GenusKind::ChiY => None,
                GenusKind::AY => Some(FactorSeries::diagonal(
                    param,
                    xcap,
                    pcap,
                    &exp_coefficients(&minus_half, xcap),
                )),
                GenusKind::LY => {
                    let mut e = exp_coefficients(&minus_one, xcap);
                    e[0] += Rational::one();
                    Some(FactorSeries::diagonal(param, xcap, pcap, &e))
                }
            };
            (core, extra)
        }
    };
    match extra {
        Some(e) => core.mul(&e).expect("same parametrization"),
        None => core,
    }
}

/// Instantiates a factor series at the Chern root `x_var` (1-based) inside
/// the ring of polynomials in `n` roots truncated at total degree `n`.
pub fn mv_substitute(
    series: &FactorSeries,
    var: usize,
    n: usize,
) -> Result<MvPoly<UniPoly>, AlgebraError> {
    if var == 0 || var > n {
        return Err(AlgebraError::IndexOutOfRange { index: var, n });
    }
    if series.xcap < n {
        return Err(AlgebraError::SeriesTooShort {
            xcap: series.xcap,
            n,
        });
    }
    let terms = series
        .rows
        .iter()
        .enumerate()
        .take(n + 1)
        .map(|(j, c)| (Monomial::power(n, var, j as u32), c.clone()));
    Ok(MvPoly::from_terms(n, n as u32, terms))
}
