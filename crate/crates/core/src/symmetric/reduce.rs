//! Rewriting symmetric polynomials in the roots as polynomials in the
//! elementary symmetric functions `c_k = e_k(x_1, …, x_n)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::combo::ChernCombo;
use super::partition::{partitions_of, Partition};
use crate::algebra::{Monomial, MvPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReduceError {
    #[error("polynomial is not symmetric (changes under x{0} <-> x{1})")]
    NonSymmetricInput(usize, usize),
    #[error("polynomial is not homogeneous of degree {expected} (degrees present: {found:?})")]
    NonHomogeneous { expected: u32, found: Vec<u32> },
    #[error("polynomial has {found} variables, expected {expected}")]
    VariableCount { expected: usize, found: usize },
    #[error("reduction did not terminate within {0} steps")]
    NoTermination(usize),
}

/// `e_k(x_1, …, x_n)`; zero when `k > n`. The result is truncated at total
/// degree `n`.
pub fn elementary(k: u32, n: usize) -> MvPoly<Rational> {
    let cap = n as u32;
    if k as usize > n {
        return MvPoly::zero(n, cap);
    }
    // walk k-subsets of {0..n} in lexicographic order
    fn subsets(start: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for i in start..n {
            if (n - i) < left as usize {
                break;
            }
            cur[i] = 1;
            subsets(i + 1, n, left - 1, cur, out);
            cur[i] = 0;
        }
    }
    let mut monos = Vec::new();
    subsets(0, n, k, &mut vec![0; n], &mut monos);
    MvPoly::from_terms(n, cap, monos.into_iter().map(|m| (m, Rational::one())))
}

/// Degree-`n` homogeneous component.
pub fn h_component(f: &MvPoly<Rational>, n: u32) -> MvPoly<Rational> {
    f.homogeneous_part(n)
}

/// Products `e_λ = Π_j e_{λ_j}` for every partition of `n`, in `n` roots.
///
/// Only the dominant coefficients are built eagerly; the full expansions are
/// computed on first use of [`ElementaryBasis::get`].
pub struct ElementaryBasis {
    n: usize,
    /// `e_λ` restricted to monomials with non-increasing exponents.
    dominant: HashMap<Partition, BTreeMap<Monomial, Rational>>,
    products: OnceLock<HashMap<Partition, MvPoly<Rational>>>,
}

impl ElementaryBasis {
    pub fn new(n: usize) -> Self {
        let weight = n as u32;
        let shapes = partitions_of(weight);
        let mut memo = HashMap::new();
        let dominant = shapes
            .iter()
            .map(|lambda| {
                let terms = shapes
                    .iter()
                    .filter_map(|mu| {
                        let count =
                            zero_one_matrices(lambda.parts(), mu.parts().to_vec(), &mut memo);
                        (count > 0).then(|| {
                            let mut exps = mu.parts().to_vec();
                            exps.resize(n, 0);
                            (Monomial::new(exps), Rational::from_integer(count))
                        })
                    })
                    .collect();
                (lambda.clone(), terms)
            })
            .collect();
        ElementaryBasis {
            n,
            dominant,
            products: OnceLock::new(),
        }
    }

    /// Shared, lazily built basis for `n` roots.
    pub fn cached(n: usize) -> Arc<ElementaryBasis> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<ElementaryBasis>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(b) = cache.lock().expect("cache poisoned").get(&n) {
            return Arc::clone(b);
        }
        let built = Arc::new(ElementaryBasis::new(n));
        Arc::clone(
            cache
                .lock()
                .expect("cache poisoned")
                .entry(n)
                .or_insert(built),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Full expansion of `e_λ`.
    pub fn get(&self, p: &Partition) -> &MvPoly<Rational> {
        &self.products.get_or_init(|| full_products(self.n))[p]
    }

    fn get_dominant(&self, p: &Partition) -> &BTreeMap<Monomial, Rational> {
        &self.dominant[p]
    }
}

fn full_products(n: usize) -> HashMap<Partition, MvPoly<Rational>> {
    let cap = n as u32;
    let singles: Vec<MvPoly<Rational>> = (0..=cap).map(|k| elementary(k, n)).collect();
    let mut products: HashMap<Partition, MvPoly<Rational>> = HashMap::new();
    products.insert(
        Partition::empty(),
        MvPoly::constant(n, cap, Rational::one()),
    );
    // every partition of weight w <= n, built from its tail
    for w in 1..=cap {
        for p in partitions_of(w) {
            let tail = Partition::new(p.parts()[1..].to_vec());
            let prod = products[&tail]
                .mul(&singles[p.parts()[0] as usize])
                .expect("same ring");
            products.insert(p, prod);
        }
    }
    products.retain(|p, _| p.weight() == cap);
    products
}

/// Number of 0-1 matrices with row sums `rows` and column sums `cols`, which
/// is the coefficient of `x^cols` in `e_rows`.
fn zero_one_matrices(
    rows: &[u32],
    mut cols: Vec<u32>,
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), u64>,
) -> u64 {
    cols.retain(|&c| c > 0);
    cols.sort_unstable_by(|a, b| b.cmp(a));
    let Some((&first, rest)) = rows.split_first() else {
        return u64::from(cols.is_empty());
    };
    if first as usize > cols.len() {
        return 0;
    }
    let key = (rows.to_vec(), cols.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // choose which `first` columns take a 1 in this row
    fn choose(
        start: usize,
        left: u32,
        cols: &mut Vec<u32>,
        rest: &[u32],
        memo: &mut HashMap<(Vec<u32>, Vec<u32>), u64>,
    ) -> u64 {
        if left == 0 {
            return zero_one_matrices(rest, cols.clone(), memo);
        }
        let mut total = 0;
        for i in start..cols.len() {
            if cols.len() - i < left as usize {
                break;
            }
            cols[i] -= 1;
            total += choose(i + 1, left - 1, cols, rest, memo);
            cols[i] += 1;
        }
        total
    }
    let total = choose(0, first, &mut cols, rest, memo);
    memo.insert(key, total);
    total
}

fn dominant_terms(f: &MvPoly<Rational>) -> BTreeMap<Monomial, Rational> {
    f.terms()
        .filter(|(m, _)| m.is_dominant())
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect()
}

/// Expands `Σ a_λ e_λ` back into the roots.
pub fn expand_combo(combo: &ChernCombo, n: usize) -> MvPoly<Rational> {
    let basis = ElementaryBasis::cached(n);
    combo.iter().fold(MvPoly::zero(n, n as u32), |acc, (p, a)| {
        acc.add(&basis.get(p).scale(a)).expect("same ring")
    })
}

/// Checks invariance under the adjacent transpositions `x_i <-> x_{i+1}`,
/// which generate the symmetric group.
pub fn check_symmetric(f: &MvPoly<Rational>) -> Result<(), ReduceError> {
    for i in 0..f.nvars().saturating_sub(1) {
        // a term whose swapped image has a different coefficient breaks symmetry
        let broken = f
            .terms()
            .any(|(m, c)| f.coeff(&m.swapped(i, i + 1)) != Some(c));
        if broken {
            return Err(ReduceError::NonSymmetricInput(i + 1, i + 2));
        }
    }
    Ok(())
}

/// Writes a symmetric polynomial, homogeneous of degree `n` in `n` roots,
/// as the unique combination of Chern monomials `c_λ`.
///
/// Leading-term elimination: the graded-lex leading monomial `x^a` of a
/// symmetric polynomial has non-increasing exponents, and is also the leading
/// monomial of `e_λ` for `λ` the conjugate of `a`. Subtracting
/// `coeff · e_λ` strictly lowers the leading monomial. Once symmetry is
/// checked, a symmetric polynomial is determined by its dominant terms, so
/// the elimination runs on those alone.
pub fn reduce_to_chern(f: &MvPoly<Rational>, n: usize) -> Result<ChernCombo, ReduceError> {
    let weight = n as u32;
    if f.nvars() != n {
        return Err(ReduceError::VariableCount {
            expected: n,
            found: f.nvars(),
        });
    }
    let degrees = f.degrees();
    if degrees.iter().any(|&d| d != weight) {
        return Err(ReduceError::NonHomogeneous {
            expected: weight,
            found: degrees,
        });
    }
    check_symmetric(f)?;

    reduce_dominant(dominant_terms(f), n)
}

/// The elimination step of [`reduce_to_chern`], for callers that already
/// hold the dominant terms of a polynomial known to be symmetric and
/// homogeneous of degree `n` in `n` roots. Nothing about the input is checked.
pub fn reduce_dominant(
    mut rest: BTreeMap<Monomial, Rational>,
    n: usize,
) -> Result<ChernCombo, ReduceError> {
    let weight = n as u32;
    let basis = ElementaryBasis::cached(n);
    let max_steps = partitions_of(weight).len() + 1;
    let mut combo = ChernCombo::zero(weight);
    for _ in 0..max_steps {
        let Some((lead, coeff)) = rest.pop_last() else {
            return Ok(combo);
        };
        let lambda = Partition::new(lead.exponents().to_vec()).conjugate();
        for (m, c) in basis.get_dominant(&lambda) {
            if *m == lead {
                continue;
            }
            let entry = rest.entry(m.clone()).or_insert_with(Rational::zero);
            *entry -= &(&coeff * c);
            if entry.is_zero() {
                rest.remove(m);
            }
        }
        combo
            .add_term(lambda, coeff)
            .expect("conjugate keeps the weight");
    }
    if rest.is_empty() {
        Ok(combo)
    } else {
        Err(ReduceError::NoTermination(max_steps))
    }
}
