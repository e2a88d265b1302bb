#![allow(dead_code)]

use chern_genus::algebra::{q, Monomial, MvPoly, Rational};
use chern_genus::symmetric::{partitions_of, Partition};
use rand::Rng;

/// Distinct permutations of `parts` padded with zeros to length `n`.
pub fn orbit(parts: &[u32], n: usize) -> Vec<Vec<u32>> {
    fn go(pool: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pool.is_empty() {
            out.push(cur.clone());
            return;
        }
        let mut seen = Vec::new();
        for i in 0..pool.len() {
            if seen.contains(&pool[i]) {
                continue;
            }
            seen.push(pool[i]);
            let v = pool.remove(i);
            cur.push(v);
            go(pool, cur, out);
            cur.pop();
            pool.insert(i, v);
        }
    }
    let mut pool = parts.to_vec();
    pool.resize(n, 0);
    let mut out = Vec::new();
    go(&mut pool, &mut Vec::new(), &mut out);
    out
}

/// Monomial symmetric function `m_μ` in `n` variables, truncated at degree `n`.
pub fn monomial_symmetric(mu: &Partition, n: usize) -> MvPoly<Rational> {
    MvPoly::from_terms(
        n,
        n as u32,
        orbit(mu.parts(), n)
            .into_iter()
            .map(|e| (Monomial::new(e), q(1, 1))),
    )
}

/// Random symmetric polynomial, homogeneous of degree `n` in `n` variables.
pub fn random_symmetric(rng: &mut impl Rng, n: usize) -> MvPoly<Rational> {
    let mut f = MvPoly::zero(n, n as u32);
    for mu in partitions_of(n as u32) {
        if rng.gen_bool(0.6) {
            let a = q(rng.gen_range(-9..=9), rng.gen_range(1..=4));
            f = f.add(&monomial_symmetric(&mu, n).scale(&a)).unwrap();
        }
    }
    f
}

/// `[1, e_1(x), …, e_n(x)]` from the coefficients of `Π(1 + x_i t)`.
pub fn elementary_values(x: &[Rational]) -> Vec<Rational> {
    let mut e = vec![q(1, 1)];
    for xi in x {
        let mut next = e.clone();
        next.push(q(0, 1));
        for k in 1..next.len() {
            next[k] = &next[k] + &(&e[k - 1] * xi);
        }
        e = next;
    }
    e
}

/// `Σ a_λ Π_j e_{λ_j}(x)` for a combination given as `(λ, a_λ)` pairs.
pub fn evaluate_in_roots<'a>(
    terms: impl Iterator<Item = (&'a Partition, &'a Rational)>,
    x: &[Rational],
) -> Rational {
    let e = elementary_values(x);
    terms
        .map(|(lambda, a)| {
            a * lambda
                .parts()
                .iter()
                .map(|&k| e[k as usize].clone())
                .product::<Rational>()
        })
        .sum()
}

pub fn random_point(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| q(rng.gen_range(-7..=7), rng.gen_range(1..=3)))
        .collect()
}
