//! The six degree-`n` components `h_1, h_11, h_2, h_12, h_22, h_3` that
//! express the low-order `z`-coefficients of the genera, built literally
//! from their defining sums and compared with their closed forms.

use std::fmt;
use std::str::FromStr;

use super::combo::ChernCombo;
use super::reduce::{h_component, reduce_to_chern, ReduceError};
use crate::algebra::{Monomial, MvPoly, Rational};
use crate::report::IdentityCheck;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HTerm {
    /// `Σ_i x_i Π_{j≠i}(1+x_j)`
    H1,
    /// `Σ_{i<j} x_i x_j Π_{k≠i,j}(1+x_k)`
    H11,
    /// `Σ_i x_i² Π_{j≠i}(1+x_j)`
    H2,
    /// `Σ_{i<j} (x_i² x_j + x_i x_j²) Π_{k≠i,j}(1+x_k)`
    H12,
    /// `Σ_{i<j} x_i² x_j² Π_{k≠i,j}(1+x_k)`
    H22,
    /// `Σ_i x_i³ Π_{j≠i}(1+x_j)`
    H3,
}

impl HTerm {
    pub const ALL: [HTerm; 6] = [
        HTerm::H1,
        HTerm::H11,
        HTerm::H2,
        HTerm::H12,
        HTerm::H22,
        HTerm::H3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HTerm::H1 => "h1",
            HTerm::H11 => "h11",
            HTerm::H2 => "h2",
            HTerm::H12 => "h12",
            HTerm::H22 => "h22",
            HTerm::H3 => "h3",
        }
    }
}

impl fmt::Display for HTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HTerm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HTerm::ALL
            .into_iter()
            .find(|h| h.name() == s)
            .ok_or_else(|| format!("unknown h-term {s:?}"))
    }
}

fn mono(n: usize, exps: &[(usize, u32)]) -> Monomial {
    let mut v = vec![0; n];
    for &(i, e) in exps {
        v[i] += e;
    }
    Monomial::new(v)
}

/// `Π_{k ∉ excluded} (1 + x_k)`, truncated at degree `n`.
fn complement_product(n: usize, excluded: &[usize]) -> MvPoly<Rational> {
    let cap = n as u32;
    (0..n).filter(|k| !excluded.contains(k)).fold(
        MvPoly::constant(n, cap, Rational::one()),
        |acc, k| {
            let lin = MvPoly::from_terms(
                n,
                cap,
                [
                    (Monomial::one(n), Rational::one()),
                    (mono(n, &[(k, 1)]), Rational::one()),
                ],
            );
            acc.mul(&lin).expect("same ring")
        },
    )
}

/// The defining symmetric polynomial of `which` in `n` roots, before the
/// degree-`n` component is taken.
pub fn lemma23_polynomial(which: HTerm, n: usize) -> MvPoly<Rational> {
    let cap = n as u32;
    let mut total = MvPoly::zero(n, cap);
    let single_power = match which {
        HTerm::H1 => Some(1),
        HTerm::H2 => Some(2),
        HTerm::H3 => Some(3),
        _ => None,
    };
    if let Some(a) = single_power {
        for i in 0..n {
            let head = MvPoly::from_terms(n, cap, [(mono(n, &[(i, a)]), Rational::one())]);
            total = total
                .add(&head.mul(&complement_product(n, &[i])).expect("same ring"))
                .expect("same ring");
        }
        return total;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let head_monos: Vec<Monomial> = match which {
                HTerm::H11 => vec![mono(n, &[(i, 1), (j, 1)])],
                HTerm::H12 => vec![mono(n, &[(i, 2), (j, 1)]), mono(n, &[(i, 1), (j, 2)])],
                HTerm::H22 => vec![mono(n, &[(i, 2), (j, 2)])],
                _ => unreachable!(),
            };
            let head =
                MvPoly::from_terms(n, cap, head_monos.into_iter().map(|m| (m, Rational::one())));
            total = total
                .add(
                    &head
                        .mul(&complement_product(n, &[i, j]))
                        .expect("same ring"),
                )
                .expect("same ring");
        }
    }
    total
}

/// `h(·)` of the defining sum, reduced to Chern numbers.
pub fn lemma23_lhs(which: HTerm, n: usize) -> Result<ChernCombo, ReduceError> {
    let f = lemma23_polynomial(which, n);
    reduce_to_chern(&h_component(&f, n as u32), n)
}

/// Closed form of `which` in terms of `c_n`, `c_1 c_{n−1}`, `c_2 c_{n−2}` and
/// `c_1² c_{n−2}`, with `c_0 = 1` and out-of-range classes zero.
pub fn lemma23_rhs(which: HTerm, n: usize) -> ChernCombo {
    let w = n as u32;
    let m = n as i64;
    let cn = |a: Rational| ChernCombo::chern_product(w, &[m], a);
    let c1cn1 = |a: Rational| ChernCombo::chern_product(w, &[1, m - 1], a);
    let c2cn2 = |a: Rational| ChernCombo::chern_product(w, &[2, m - 2], a);
    let c11cn2 = |a: Rational| ChernCombo::chern_product(w, &[1, 1, m - 2], a);
    let r = |x: i64| Rational::from_integer(x);
    let sum = |parts: Vec<ChernCombo>| {
        parts
            .iter()
            .try_fold(ChernCombo::zero(w), |acc, c| acc.add(c))
            .expect("one weight")
    };
    match which {
        HTerm::H1 => cn(r(m)),
        HTerm::H11 => cn(Rational::new(m * (m - 1), 2)),
        HTerm::H2 => sum(vec![cn(r(-m)), c1cn1(r(1))]),
        HTerm::H12 => sum(vec![cn(r(-(m - 2) * m)), c1cn1(r(m - 2))]),
        HTerm::H22 => sum(vec![
            cn(Rational::new(m * (m - 3), 2)),
            c1cn1(r(-(m - 2))),
            c2cn2(r(1)),
        ]),
        HTerm::H3 => sum(vec![cn(r(m)), c1cn1(r(-1)), c11cn2(r(1)), c2cn2(r(-2))]),
    }
}

/// Compares all six h-terms with their closed forms at dimension `n`.
pub fn verify_lemma23(n: usize) -> Result<Vec<IdentityCheck>, ReduceError> {
    HTerm::ALL
        .iter()
        .map(|&h| {
            let lhs = lemma23_lhs(h, n)?;
            Ok(IdentityCheck::compare(
                n as u32,
                format!("lemma23/{h}"),
                lhs,
                lemma23_rhs(h, n),
            ))
        })
        .collect()
}
