//! Concrete manifolds supplying integer Chern numbers: projective spaces,
//! products of projective spaces, and raw Chern-number data.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{binomial, Monomial, MvPoly, Rational};
use crate::genera::{genus_table, GeneraError, GenusKind};
use crate::symmetric::{partitions_of, ChernCombo, Partition};

#[derive(Debug, thiserror::Error)]
pub enum ManifoldError {
    #[error("combination has weight {combo}, manifold has complex dimension {manifold}")]
    WeightMismatch { combo: u32, manifold: u32 },
    #[error("spin structure is not decidable from Chern numbers alone")]
    NotDecidable,
    #[error("no Chern number supplied for partition {0}")]
    MissingChernNumber(Partition),
    #[error("invalid model specification {spec:?}: {reason}")]
    InvalidSpec { spec: String, reason: String },
    #[error("divisibility check needs complex dimension at least 2, got {0}")]
    DimensionTooSmall(u32),
    #[error(transparent)]
    Genera(#[from] GeneraError),
}

/// Source of Chern numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ManifoldModel {
    /// `ℂP^n`
    ProjectiveSpace(u32),
    /// `ℂP^{n_1} × ⋯ × ℂP^{n_k}`
    Product(Vec<u32>),
    /// Externally supplied Chern numbers of some `n`-manifold.
    Raw {
        weight: u32,
        numbers: BTreeMap<Partition, BigInt>,
    },
}

impl ManifoldModel {
    pub fn dimension(&self) -> u32 {
        match self {
            ManifoldModel::ProjectiveSpace(n) => *n,
            ManifoldModel::Product(dims) => dims.iter().sum(),
            ManifoldModel::Raw { weight, .. } => *weight,
        }
    }

    /// Parses the JSON form `{"weight": n, "terms": [{"partition": [..],
    /// "coeff": 64}, …]}`; coefficients may be integers or integer strings.
    pub fn from_json(text: &str) -> Result<Self, ManifoldError> {
        let invalid = |reason: String| ManifoldError::InvalidSpec {
            spec: text.to_string(),
            reason,
        };
        let doc: RawRepr = serde_json::from_str(text).map_err(|e| invalid(e.to_string()))?;
        if doc.weight == 0 {
            return Err(invalid("weight must be at least 1".into()));
        }
        let mut numbers = BTreeMap::new();
        for t in doc.terms {
            if t.partition.weight() != doc.weight {
                return Err(invalid(format!(
                    "partition {} does not have weight {}",
                    t.partition, doc.weight
                )));
            }
            let value = match t.coeff {
                RawCoeff::Int(i) => BigInt::from(i),
                RawCoeff::Text(s) => s
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|_| invalid(format!("{s:?} is not an integer")))?,
            };
            if numbers.insert(t.partition.clone(), value).is_some() {
                return Err(invalid(format!("partition {} listed twice", t.partition)));
            }
        }
        Ok(ManifoldModel::Raw {
            weight: doc.weight,
            numbers,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let numbers = chern_numbers(self);
        serde_json::json!({
            "weight": self.dimension(),
            "terms": numbers.iter().map(|(p, v)| serde_json::json!({"partition": p, "coeff": v.to_string()})).collect::<Vec<_>>(),
        })
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawCoeff {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
struct RawTerm {
    partition: Partition,
    coeff: RawCoeff,
}

#[derive(Deserialize)]
struct RawRepr {
    weight: u32,
    terms: Vec<RawTerm>,
}

fn parse_cp(spec: &str, token: &str) -> Result<u32, ManifoldError> {
    let invalid = |reason: &str| ManifoldError::InvalidSpec {
        spec: spec.to_string(),
        reason: reason.to_string(),
    };
    let digits = token
        .trim()
        .strip_prefix("cp")
        .ok_or_else(|| invalid("factors are written cpN"))?;
    let n: u32 = digits
        .parse()
        .map_err(|_| invalid("dimension is not a non-negative integer"))?;
    if n == 0 {
        return Err(invalid("projective spaces need dimension at least 1"));
    }
    Ok(n)
}

impl FromStr for ManifoldModel {
    type Err = ManifoldError;

    /// `cp:N`, `prod:cpA,cpB,…`, or an inline JSON document.
    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let s = spec.trim();
        if s.starts_with('{') {
            return Self::from_json(s);
        }
        if let Some(rest) = s.strip_prefix("cp:") {
            return parse_cp(spec, &format!("cp{rest}")).map(ManifoldModel::ProjectiveSpace);
        }
        if let Some(rest) = s.strip_prefix("prod:") {
            let dims = rest
                .split(',')
                .map(|t| parse_cp(spec, t))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(ManifoldModel::Product(dims));
        }
        Err(ManifoldError::InvalidSpec {
            spec: spec.to_string(),
            reason: "expected cp:N, prod:cpA,cpB,… or JSON".into(),
        })
    }
}

impl fmt::Display for ManifoldModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldModel::ProjectiveSpace(n) => write!(f, "cp:{n}"),
            ManifoldModel::Product(dims) => {
                let parts: Vec<String> = dims.iter().map(|d| format!("cp{d}")).collect();
                write!(f, "prod:{}", parts.join(","))
            }
            ManifoldModel::Raw { weight, .. } => write!(f, "raw(weight {weight})"),
        }
    }
}

/// `c_λ[ℂP^n] = Π_j C(n+1, λ_j)`, read off from `c = (1+g)^{n+1}`.
fn projective_chern_numbers(n: u32) -> BTreeMap<Partition, BigInt> {
    partitions_of(n)
        .into_iter()
        .map(|p| {
            let v: Rational = p
                .parts()
                .iter()
                .map(|&k| binomial(n as u64 + 1, k as u64))
                .product();
            (p, v.to_integer().expect("binomials are integers"))
        })
        .collect()
}

/// Chern numbers of a product, computed in `ℚ[g_1, …, g_k] / (g_f^{n_f+1})`:
/// expand `Π_f (1+g_f)^{n_f+1}`, take graded pieces as `c_j`, and read the
/// coefficient of `g_1^{n_1} ⋯ g_k^{n_k}`.
fn product_chern_numbers(dims: &[u32]) -> BTreeMap<Partition, BigInt> {
    let k = dims.len();
    let n: u32 = dims.iter().sum();
    let one = MvPoly::constant(k, n, Rational::one());
    let mut total = one.clone();
    for (f, &d) in dims.iter().enumerate() {
        let lin = MvPoly::from_terms(
            k,
            n,
            [
                (Monomial::one(k), Rational::one()),
                (Monomial::power(k, f + 1, 1), Rational::one()),
            ],
        );
        for _ in 0..=d {
            total = total.mul(&lin).expect("same ring").truncate_exponents(dims);
        }
    }
    let classes: Vec<MvPoly<Rational>> = (0..=n).map(|j| total.homogeneous_part(j)).collect();
    let top = Monomial::new(dims.to_vec());
    partitions_of(n)
        .into_iter()
        .map(|p| {
            let prod = p.parts().iter().fold(one.clone(), |acc, &j| {
                acc.mul(&classes[j as usize])
                    .expect("same ring")
                    .truncate_exponents(dims)
            });
            let v = prod.coeff(&top).cloned().unwrap_or_else(Rational::zero);
            (p, v.to_integer().expect("integral ring"))
        })
        .collect()
}

/// `c_λ[M]` for every partition `λ` of the complex dimension.
pub fn chern_numbers(m: &ManifoldModel) -> BTreeMap<Partition, BigInt> {
    match m {
        ManifoldModel::ProjectiveSpace(n) => projective_chern_numbers(*n),
        ManifoldModel::Product(dims) => product_chern_numbers(dims),
        ManifoldModel::Raw { numbers, .. } => numbers.clone(),
    }
}

/// `Σ_λ a_λ c_λ[M]`.
pub fn evaluate(combo: &ChernCombo, m: &ManifoldModel) -> Result<Rational, ManifoldError> {
    if combo.weight() != m.dimension() {
        return Err(ManifoldError::WeightMismatch {
            combo: combo.weight(),
            manifold: m.dimension(),
        });
    }
    let numbers = chern_numbers(m);
    evaluate_with(combo, &numbers)
}

/// Evaluates against precomputed Chern numbers.
pub fn evaluate_with(
    combo: &ChernCombo,
    numbers: &BTreeMap<Partition, BigInt>,
) -> Result<Rational, ManifoldError> {
    combo
        .iter()
        .map(|(p, a)| {
            let v = numbers
                .get(p)
                .ok_or_else(|| ManifoldError::MissingChernNumber(p.clone()))?;
            Ok(a * Rational::from_integer(v.clone()))
        })
        .sum()
}

/// Whether `c_1` is even: for `ℂP^n` exactly when `n` is odd, for a product
/// when every factor dimension is odd.
pub fn is_spin(m: &ManifoldModel) -> Result<bool, ManifoldError> {
    match m {
        ManifoldModel::ProjectiveSpace(n) => Ok(n % 2 == 1),
        ManifoldModel::Product(dims) => Ok(dims.iter().all(|d| d % 2 == 1)),
        ManifoldModel::Raw { .. } => Err(ManifoldError::NotDecidable),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityRecord {
    #[serde(with = "bigint_string")]
    pub value: BigInt,
    pub divisible_by_8: bool,
    /// `value / 8` when divisible.
    #[serde(
        with = "opt_bigint_string",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub quotient: Option<BigInt>,
    /// `value mod 8` (in `0..8`) when not divisible.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub remainder: Option<u8>,
    /// `None` when spin-ness cannot be decided from the model.
    pub spin: Option<bool>,
}

impl fmt::Display for DivisibilityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "value={} divisible={}", self.value, self.divisible_by_8)?;
        match (&self.quotient, self.remainder) {
            (Some(q), _) => write!(f, " quotient={q}"),
            (None, Some(r)) => write!(f, " remainder={r}"),
            (None, None) => Ok(()),
        }
    }
}

/// The combination `2(n−1)·c_1 c_{n−1} + c_1² c_{n−2}`.
pub fn divisibility_combo(n: u32) -> ChernCombo {
    let m = n as i64;
    ChernCombo::chern_product(n, &[1, m - 1], Rational::from_integer(2 * (m - 1)))
        .add(&ChernCombo::chern_product(
            n,
            &[1, 1, m - 2],
            Rational::one(),
        ))
        .expect("one weight")
}

/// Evaluates `2(n−1)·c_1 c_{n−1} + c_1² c_{n−2}` and tests it for
/// divisibility by 8.
pub fn divisibility_check(m: &ManifoldModel) -> Result<DivisibilityRecord, ManifoldError> {
    let n = m.dimension();
    if n < 2 {
        return Err(ManifoldError::DimensionTooSmall(n));
    }
    let value = evaluate(&divisibility_combo(n), m)?
        .to_integer()
        .expect("integer combination of integers");
    let (quot, rem) = value.div_mod_floor(&BigInt::from(8));
    let divisible = rem.is_zero();
    Ok(DivisibilityRecord {
        value,
        divisible_by_8: divisible,
        quotient: divisible.then_some(quot),
        remainder: (!divisible).then(|| rem.to_u8().expect("0..8")),
        spin: is_spin(m).ok(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexEntry {
    pub p: u32,
    pub value: Rational,
    pub integral: bool,
}

/// Evaluated genus table of one model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexTable {
    pub kind: GenusKind,
    pub entries: Vec<IndexEntry>,
}

impl IndexTable {
    pub fn values(&self) -> Vec<Rational> {
        self.entries.iter().map(|e| e.value.clone()).collect()
    }

    pub fn all_integral(&self) -> bool {
        self.entries.iter().all(|e| e.integral)
    }
}

/// Evaluates every row of the genus table on `m`.
pub fn index_table(kind: GenusKind, m: &ManifoldModel) -> Result<IndexTable, ManifoldError> {
    let table = genus_table(kind, m.dimension() as usize)?;
    let numbers = chern_numbers(m);
    let entries = table
        .rows
        .iter()
        .enumerate()
        .map(|(p, row)| {
            let value = evaluate_with(row, &numbers)?;
            Ok(IndexEntry {
                p: p as u32,
                integral: value.is_integer(),
                value,
            })
        })
        .collect::<Result<Vec<_>, ManifoldError>>()?;
    Ok(IndexTable { kind, entries })
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

mod opt_bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.collect_str(v),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}
