//! Genus polynomials as Chern-number combinations: the `y`-power tables
//! (`χ^p`, `Â(M, Λ^p T*)`, `L(M, Λ^p T*)`), their expansions in `z = 1 + y`,
//! and the verifiers for the low-order `z`-coefficients.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    binomial, genus_factor, mv_substitute, AlgebraError, Coefficient, Monomial, MvPoly, Param,
    Rational, UniPoly,
};
use crate::report::IdentityCheck;
use crate::symmetric::{
    lemma23_lhs, partitions_of, reduce_dominant, ChernCombo, ComboError, HTerm, ReduceError,
};

pub use crate::algebra::GenusKind;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeneraError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Combo(#[from] ComboError),
    #[error("weight index k = {k} outside 0..={n}")]
    OrderOutOfRange { k: usize, n: usize },
    #[error("dimension n = {n} below the minimum {min}")]
    DimensionTooSmall { n: usize, min: usize },
}

/// Row `p` is the Chern-number expression of the coefficient of `y^p`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenusTable {
    pub kind: GenusKind,
    pub n: u32,
    pub rows: Vec<ChernCombo>,
}

impl GenusTable {
    /// `χ^{n−p} = (−1)^n χ^p` row by row.
    pub fn serre_symmetric(&self) -> bool {
        let n = self.rows.len() - 1;
        let sign = if n.is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        };
        (0..=n).all(|p| self.rows[n - p] == self.rows[p].scale(&sign))
    }
}

/// Coefficient `k` is the Chern-number expression of the coefficient of
/// `z^k`, `z = 1 + y`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZExpansion {
    pub kind: GenusKind,
    pub n: u32,
    pub order: u32,
    pub coeffs: Vec<ChernCombo>,
}

/// Degree-`n` part of `Π_{i=1}^n F(x_i)` with `F` the per-root factor.
pub fn genus_product(
    kind: GenusKind,
    param: Param,
    n: usize,
    pcap: usize,
) -> Result<MvPoly<UniPoly>, GeneraError> {
    let factor = genus_factor(kind, param, n, pcap);
    let roots = (1..=n)
        .map(|i| mv_substitute(&factor, i, n))
        .collect::<Result<Vec<_>, _>>()?;
    let one = UniPoly::constant(param, pcap, Rational::one());
    let product = MvPoly::product(n, n as u32, one, &roots)?;
    Ok(product.homogeneous_part(n as u32))
}

/// Dominant terms of the degree-`n` part of `Π_{i=1}^n F(x_i)`. The
/// coefficient of `x^μ` is `Π_i F_{μ_i}`, the product of one-variable
/// coefficients, so only partitions of `n` need visiting.
pub fn dominant_product(
    kind: GenusKind,
    param: Param,
    n: usize,
    pcap: usize,
) -> Result<BTreeMap<Monomial, UniPoly>, GeneraError> {
    let factor = genus_factor(kind, param, n, pcap);
    let one = UniPoly::constant(param, pcap, Rational::one());
    let mut terms = BTreeMap::new();
    for mu in partitions_of(n as u32) {
        let mut exps = mu.parts().to_vec();
        exps.resize(n, 0);
        let coeff = exps.iter().fold(one.clone(), |acc, &e| {
            acc.mul_ref(factor.x_coeff(e as usize))
        });
        if !coeff.is_zero() {
            terms.insert(Monomial::new(exps), coeff);
        }
    }
    Ok(terms)
}

fn reduce_slices(
    product: &BTreeMap<Monomial, UniPoly>,
    n: usize,
    count: usize,
) -> Result<Vec<ChernCombo>, GeneraError> {
    (0..count)
        .map(|k| {
            let slice = product
                .iter()
                .map(|(m, c)| (m.clone(), c.coeff(k)))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            Ok(reduce_dominant(slice, n)?)
        })
        .collect()
}

/// The `y`-power table, from a single product over the `y`-parametrized
/// factors `(1 + y e^{−x_i}) · (genus factor)`.
pub fn genus_table(kind: GenusKind, n: usize) -> Result<GenusTable, GeneraError> {
    if n < 1 {
        return Err(GeneraError::DimensionTooSmall { n, min: 1 });
    }
    let product = dominant_product(kind, Param::Y, n, n)?;
    Ok(GenusTable {
        kind,
        n: n as u32,
        rows: reduce_slices(&product, n, n + 1)?,
    })
}

/// Coefficients of `z^0 … z^order`, computed directly from the
/// `z`-parametrized factors rather than from the `y`-table.
pub fn z_expand(kind: GenusKind, n: usize, order: usize) -> Result<ZExpansion, GeneraError> {
    if n < 1 {
        return Err(GeneraError::DimensionTooSmall { n, min: 1 });
    }
    let product = dominant_product(kind, Param::Z, n, order)?;
    Ok(ZExpansion {
        kind,
        n: n as u32,
        order: order as u32,
        coeffs: reduce_slices(&product, n, order + 1)?,
    })
}

/// `Σ_p (−1)^p C(p, k) · row_p`.
pub fn weighted_alternating_sum(table: &GenusTable, k: usize) -> Result<ChernCombo, GeneraError> {
    let n = table.n as usize;
    if k > n {
        return Err(GeneraError::OrderOutOfRange { k, n });
    }
    let weights = table.rows.iter().enumerate().map(|(p, row)| {
        let sign = if p % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        (sign * binomial(p as u64, k as u64), row)
    });
    Ok(ChernCombo::linear_combination(table.n, weights)?)
}

/// `Σ_p (−1)^{p−k} C(p, k) · row_p`: the `z^k` coefficient predicted by the
/// `y`-table.
pub fn binomial_transform(table: &GenusTable, k: usize) -> Result<ChernCombo, GeneraError> {
    let sign = if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    };
    Ok(weighted_alternating_sum(table, k)?.scale(&sign))
}

/// Closed form of `weighted_alternating_sum(·, k)` for `k ≤ 2`.
///
/// For the twisted Â and L tables these are the six index formulas in
/// `c_n`, `c_1 c_{n−1}`, `c_1² c_{n−2}`, `c_2 c_{n−2}`; for χ_y, `k = 2`
/// gives the Libgober–Wood combination. `None` when `k > 2`.
pub fn closed_form(kind: GenusKind, n: usize, k: usize) -> Option<ChernCombo> {
    let w = n as u32;
    let m = n as i64;
    let cn = |a: Rational| ChernCombo::chern_product(w, &[m], a);
    let c1cn1 = |a: Rational| ChernCombo::chern_product(w, &[1, m - 1], a);
    let c11cn2 = |a: Rational| ChernCombo::chern_product(w, &[1, 1, m - 2], a);
    let c2cn2 = |a: Rational| ChernCombo::chern_product(w, &[2, m - 2], a);
    let sum = |parts: Vec<ChernCombo>| {
        parts
            .iter()
            .try_fold(ChernCombo::zero(w), |acc, c| acc.add(c))
            .expect("one weight")
    };
    let lw_cn = Rational::new(m * (3 * m - 5), 24);
    let combo = match (kind, k) {
        (GenusKind::ChiY, 0) | (GenusKind::AY, 0) => cn(Rational::one()),
        (GenusKind::ChiY, 1) => cn(Rational::new(m, 2)),
        (GenusKind::ChiY, 2) => sum(vec![cn(lw_cn), c1cn1(Rational::new(1, 12))]),
        (GenusKind::AY, 1) => sum(vec![cn(Rational::new(m, 2)), c1cn1(Rational::new(1, 2))]),
        (GenusKind::AY, 2) => sum(vec![
            cn(lw_cn),
            c1cn1(Rational::new(3 * m - 2, 12)),
            c11cn2(Rational::new(1, 8)),
        ]),
        (GenusKind::LY, 0) => cn(Rational::pow2(m)),
        (GenusKind::LY, 1) => sum(vec![cn(Rational::from_integer(m)), c1cn1(Rational::one())])
            .scale(&Rational::pow2(m - 1)),
        (GenusKind::LY, 2) => sum(vec![
            cn(Rational::new(m * (3 * m - 5), 6)),
            c1cn1(Rational::new(3 * m - 2, 3)),
            c11cn2(Rational::one()),
            c2cn2(-Rational::one()),
        ])
        .scale(&Rational::pow2(m - 2)),
        _ => return None,
    };
    Some(combo)
}

/// The six index formulas for the twisted Â and L tables at dimension `n`.
pub fn verify_theorem_mr(n: usize) -> Result<Vec<IdentityCheck>, GeneraError> {
    if n < 2 {
        return Err(GeneraError::DimensionTooSmall { n, min: 2 });
    }
    let mut checks = Vec::with_capacity(6);
    for kind in [GenusKind::AY, GenusKind::LY] {
        let table = genus_table(kind, n)?;
        for k in 0..=2 {
            let lhs = weighted_alternating_sum(&table, k)?;
            let rhs = closed_form(kind, n, k).expect("k <= 2");
            checks.push(IdentityCheck::compare(
                n as u32,
                format!("theorem-mr/{kind}/k{k}"),
                lhs,
                rhs,
            ));
        }
    }
    Ok(checks)
}

/// `Σ_p (−1)^p C(p,2) χ^p = n(3n−5)/24 · c_n + 1/12 · c_1 c_{n−1}`, and the
/// `z²` coefficient of χ_y written as `h_2/12 + h_11/4`.
pub fn verify_libgober_wood(n: usize) -> Result<Vec<IdentityCheck>, GeneraError> {
    if n < 2 {
        return Err(GeneraError::DimensionTooSmall { n, min: 2 });
    }
    let w = n as u32;
    let table = genus_table(GenusKind::ChiY, n)?;
    let lhs = weighted_alternating_sum(&table, 2)?;
    let rhs = closed_form(GenusKind::ChiY, n, 2).expect("k = 2");
    let alternating = IdentityCheck::compare(w, "libgober-wood/alternating-sum", lhs, rhs);

    let z2 = z_expand(GenusKind::ChiY, n, 2)?.coeffs.swap_remove(2);
    let h2 = lemma23_lhs(HTerm::H2, n)?;
    let h11 = lemma23_lhs(HTerm::H11, n)?;
    let decomposition = ChernCombo::linear_combination(
        w,
        [(Rational::new(1, 12), &h2), (Rational::new(1, 4), &h11)],
    )?;
    let decomposed = IdentityCheck::compare(w, "libgober-wood/h-decomposition", z2, decomposition);
    Ok(vec![alternating, decomposed])
}
