use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::partition::Partition;
use crate::algebra::Rational;

/// Rational linear combination `Σ_λ a_λ c_λ[M]` of Chern numbers of a fixed
/// weight `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChernCombo {
    weight: u32,
    terms: BTreeMap<Partition, Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComboError {
    #[error("partition {partition} has weight {found}, combination has weight {expected}")]
    WeightMismatch {
        partition: Partition,
        expected: u32,
        found: u32,
    },
    #[error("cannot combine weights {0} and {1}")]
    IncompatibleWeights(u32, u32),
}

impl ChernCombo {
    pub fn zero(weight: u32) -> Self {
        ChernCombo {
            weight,
            terms: BTreeMap::new(),
        }
    }

    /// `coeff · c_λ` for a single partition of the given weight.
    pub fn term(weight: u32, partition: Partition, coeff: Rational) -> Result<Self, ComboError> {
        let mut c = Self::zero(weight);
        c.add_term(partition, coeff)?;
        Ok(c)
    }

    /// `coeff · c_{k_1} ⋯ c_{k_m}` in weight `n`, with the conventions
    /// `c_0 = 1` and `c_k = 0` for `k < 0` or `k > n`.
    ///
    /// Panics when the indices do not sum to `n`.
    pub fn chern_product(n: u32, indices: &[i64], coeff: Rational) -> Self {
        assert_eq!(
            indices.iter().sum::<i64>(),
            n as i64,
            "indices {indices:?} do not sum to {n}"
        );
        if indices.iter().any(|&k| k < 0 || k > n as i64) {
            return Self::zero(n);
        }
        let parts = indices.iter().map(|&k| k as u32).collect();
        Self::term(n, Partition::new(parts), coeff).expect("weight checked above")
    }

    pub fn from_terms(
        weight: u32,
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self, ComboError> {
        let mut c = Self::zero(weight);
        for (p, a) in terms {
            c.add_term(p, a)?;
        }
        Ok(c)
    }

    /// Adds `coeff · c_λ`, merging with any existing term.
    pub fn add_term(&mut self, partition: Partition, coeff: Rational) -> Result<(), ComboError> {
        let found = partition.weight();
        if found != self.weight {
            return Err(ComboError::WeightMismatch {
                partition,
                expected: self.weight,
                found,
            });
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(partition).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn weight(&self) -> u32 {
        self.weight
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

    pub fn get(&self, partition: &Partition) -> Rational {
        self.terms
            .get(partition)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Result<Self, ComboError> {
        if self.weight != other.weight {
            return Err(ComboError::IncompatibleWeights(self.weight, other.weight));
        }
        let mut out = self.clone();
        for (p, a) in &other.terms {
            out.add_term(p.clone(), a.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ComboError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(self.weight);
        }
        ChernCombo {
            weight: self.weight,
            terms: self.terms.iter().map(|(p, a)| (p.clone(), a * r)).collect(),
        }
    }

    /// Σ a_i · combos_i over combos of one weight.
    pub fn linear_combination<'a>(
        weight: u32,
        parts: impl IntoIterator<Item = (Rational, &'a ChernCombo)>,
    ) -> Result<Self, ComboError> {
        parts
            .into_iter()
            .try_fold(Self::zero(weight), |acc, (a, c)| acc.add(&c.scale(&a)))
    }
}

/// Renders `c_λ` as e.g. `c1^2·c3`; the empty partition renders as `1`.
pub fn render_chern_monomial(p: &Partition) -> String {
    if p.is_empty() {
        return "1".to_string();
    }
    p.multiplicities()
        .into_iter()
        .map(|(part, mult)| {
            if mult == 1 {
                format!("c{part}")
            } else {
                format!("c{part}^{mult}")
            }
        })
        .collect::<Vec<_>>()
        .join("·")
}

impl fmt::Display for ChernCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, a)) in self.terms.iter().enumerate() {
            let mag = a.abs();
            match (i, a.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = render_chern_monomial(p);
            if p.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}·{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ChernCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChernCombo[{}]({})", self.weight, self)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct ComboRepr {
    weight: u32,
    terms: Vec<TermRepr>,
}

impl Serialize for ChernCombo {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ComboRepr {
            weight: self.weight,
            terms: self
                .terms
                .iter()
                .map(|(p, a)| TermRepr {
                    partition: p.clone(),
                    coeff: a.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ChernCombo {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ComboRepr::deserialize(deserializer)?;
        ChernCombo::from_terms(
            repr.weight,
            repr.terms.into_iter().map(|t| (t.partition, t.coeff)),
        )
        .map_err(serde::de::Error::custom)
    }
}
