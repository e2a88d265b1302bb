//! Sparse multivariate polynomials in the Chern roots `x_1, …, x_n`,
//! truncated at a fixed total degree.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::rational::Rational;
use super::{AlgebraError, Coefficient};

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then lexicographic with `x_1 > x_2 > …`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// `x_i^e` with a 1-based variable index.
    pub fn power(nvars: usize, var: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[var - 1] = e;
        Monomial(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Exchanges the exponents of variables `i` and `j` (0-based).
    pub fn swapped(&self, i: usize, j: usize) -> Monomial {
        let mut v = self.0.clone();
        v.swap(i, j);
        Monomial(v)
    }

    /// True when exponents are non-increasing along the variables.
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Polynomial over a coefficient ring `C` with every stored term of total
/// degree at most `cap`.
#[derive(Clone, PartialEq)]
pub struct MvPoly<C> {
    nvars: usize,
    cap: u32,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> MvPoly<C> {
    pub fn zero(nvars: usize, cap: u32) -> Self {
        MvPoly {
            nvars,
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, cap: u32, c: C) -> Self {
        Self::from_terms(nvars, cap, [(Monomial::one(nvars), c)])
    }

    /// Collects terms, merging duplicates and dropping zeros and anything
    /// above the degree cap.
    pub fn from_terms(
        nvars: usize,
        cap: u32,
        terms: impl IntoIterator<Item = (Monomial, C)>,
    ) -> Self {
        let mut p = Self::zero(nvars, cap);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        assert_eq!(m.nvars(), self.nvars, "monomial has wrong variable count");
        if m.degree() > self.cap || c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add_ref(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    fn check_vars(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.nvars != other.nvars {
            return Err(AlgebraError::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let mut out = MvPoly {
            nvars: self.nvars,
            cap: self.cap.min(other.cap),
            terms: BTreeMap::new(),
        };
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MvPoly {
            nvars: self.nvars,
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::from_terms(
            self.nvars,
            self.cap,
            self.terms.iter().map(|(m, c)| (m.clone(), c.scale(r))),
        )
    }

    /// Truncated product; terms of total degree above the smaller cap are
    /// discarded before they are formed.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let cap = self.cap.min(other.cap);
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m1, c1) in &self.terms {
            let d1 = m1.degree();
            for (m2, c2) in &other.terms {
                if d1 + m2.degree() > cap {
                    continue;
                }
                let prod = c1.mul_ref(c2);
                if prod.is_zero() {
                    continue;
                }
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = e.get().add_ref(&prod);
                        *e.get_mut() = s;
                    }
                }
            }
        }
        Ok(Self::from_terms(self.nvars, cap, acc))
    }

    /// Product of all factors, folded left to right.
    pub fn product<'a>(
        nvars: usize,
        cap: u32,
        one: C,
        factors: impl IntoIterator<Item = &'a Self>,
    ) -> Result<Self, AlgebraError>
    where
        C: 'a,
    {
        factors
            .into_iter()
            .try_fold(Self::constant(nvars, cap, one), |acc, f| acc.mul(f))
    }

    /// Terms of total degree exactly `degree`.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        MvPoly {
            nvars: self.nvars,
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keeps only terms whose exponent of each variable stays within `caps`.
    pub fn truncate_exponents(&self, caps: &[u32]) -> Self {
        MvPoly {
            nvars: self.nvars,
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponents().iter().zip(caps).all(|(e, c)| e <= c))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Image under the exchange of variables `i` and `j` (0-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        MvPoly {
            nvars: self.nvars,
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swapped(i, j), c.clone()))
                .collect(),
        }
    }

    /// Set of distinct total degrees that occur.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(Monomial::degree).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> MvPoly<D> {
        MvPoly::from_terms(
            self.nvars,
            self.cap,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }
}

impl MvPoly<Rational> {
    /// The single variable `x_var` (1-based).
    pub fn var(nvars: usize, cap: u32, var: usize) -> Self {
        Self::from_terms(
            nvars,
            cap,
            [(Monomial::power(nvars, var, 1), Rational::one())],
        )
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| {
                m.exponents()
                    .iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, x)| acc * x.pow(e))
            })
            .sum()
    }
}

impl MvPoly<super::UniPoly> {
    /// Coefficient of `t^k` in every term.
    pub fn param_slice(&self, k: usize) -> MvPoly<Rational> {
        self.map_coeffs(|c| c.coeff(k))
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for MvPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "·x{}", i + 1)?,
                    _ => write!(f, "·x{}^{e}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

impl<C: Coefficient + fmt::Display> fmt::Debug for MvPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MvPoly[n={}, cap={}]({})", self.nvars, self.cap, self)
    }
}
