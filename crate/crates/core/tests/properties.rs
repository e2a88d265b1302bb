mod common;

use chern_genus::algebra::{
    binomial, genus_factor, q, series_exp_scaled, series_todd, todd_coefficients, Coefficient,
    FactorSeries, GenusKind, Monomial, MvPoly, Param, Rational, UniPoly,
};
use chern_genus::genera::{closed_form, genus_product, genus_table, weighted_alternating_sum};
use chern_genus::manifolds::{chern_numbers, divisibility_check, evaluate, is_spin, ManifoldModel};
use chern_genus::symmetric::{
    lemma23_lhs, partitions_of, reduce_to_chern, ChernCombo, HTerm, Partition,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, d)| q(p, d))
}

fn unipoly() -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec(rational(), 0..6).prop_map(|cs| UniPoly::from_coeffs(Param::Z, 4, cs))
}

fn series() -> impl Strategy<Value = FactorSeries> {
    proptest::collection::vec(proptest::collection::vec(rational(), 0..4), 0..5)
        .prop_map(|table| FactorSeries::from_table(Param::Y, 3, 2, table))
}

fn mvpoly() -> impl Strategy<Value = MvPoly<Rational>> {
    proptest::collection::vec((proptest::collection::vec(0u32..3, 3), rational()), 0..6).prop_map(
        |terms| MvPoly::from_terms(3, 4, terms.into_iter().map(|(e, c)| (Monomial::new(e), c))),
    )
}

proptest! {
    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
    }

    #[test]
    fn unipoly_ring_laws(a in unipoly(), b in unipoly(), c in unipoly()) {
        prop_assert_eq!(a.add_ref(&b).add_ref(&c), a.add_ref(&b.add_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
    }

    #[test]
    fn series_ring_laws(a in series(), b in series(), c in series()) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.mul(&a).unwrap());
        prop_assert_eq!(ab.mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, ab.add(&a.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn mvpoly_ring_laws(a in mvpoly(), b in mvpoly(), c in mvpoly()) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.mul(&a).unwrap());
        prop_assert_eq!(ab.mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, ab.add(&a.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn reduction_is_linear(seed in any::<u64>(), n in 1usize..=5, a in rational(), b in rational()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = common::random_symmetric(&mut rng, n);
        let g = common::random_symmetric(&mut rng, n);
        let mix = f.scale(&a).add(&g.scale(&b)).unwrap();
        let want = ChernCombo::linear_combination(
            n as u32,
            [(a, &reduce_to_chern(&f, n).unwrap()), (b, &reduce_to_chern(&g, n).unwrap())],
        )
        .unwrap();
        prop_assert_eq!(reduce_to_chern(&mix, n).unwrap(), want);
    }
}

/// Bernoulli numbers with `B_1 = −1/2`, from `Σ_{j≤m} C(m+1, j) B_j = 0`.
fn bernoulli(count: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = vec![q(1, 1)];
    for m in 1..count {
        let s: Rational = (0..m)
            .map(|j| binomial(m as u64 + 1, j as u64) * &b[j])
            .sum();
        b.push(-s / Rational::from_integer(m as i64 + 1));
    }
    b
}

#[test]
fn todd_matches_bernoulli_numbers() {
    let b = bernoulli(13);
    let todd = todd_coefficients(12);
    let mut fact = q(1, 1);
    for k in 0..=12 {
        if k > 0 {
            fact = fact * Rational::from_integer(k as i64);
        }
        let sign = if k % 2 == 0 { q(1, 1) } else { q(-1, 1) };
        assert_eq!(todd[k], sign * &b[k] / &fact, "k={k}");
    }
    assert_eq!(
        todd_coefficients(4),
        vec![q(1, 1), q(1, 2), q(1, 12), q(0, 1), q(-1, 720)]
    );
}

#[test]
fn l_factor_is_a_factor_times_cosh() {
    for xcap in 0..=12 {
        let half = series_exp_scaled(&q(1, 2), xcap);
        let minus_half = series_exp_scaled(&q(-1, 2), xcap);
        let two_cosh = half.add(&minus_half).unwrap();
        let one_plus = FactorSeries::one(Param::Y, xcap, 0)
            .add(&series_exp_scaled(&q(-1, 1), xcap))
            .unwrap();
        let todd = series_todd(xcap);
        let l = todd.mul(&one_plus).unwrap();
        let a = todd.mul(&minus_half).unwrap();
        assert_eq!(l, a.mul(&two_cosh).unwrap(), "xcap={xcap}");
        let ay = genus_factor(GenusKind::AY, Param::Y, xcap, 0);
        assert_eq!(
            genus_factor(GenusKind::LY, Param::Y, xcap, 0),
            ay.mul(&two_cosh).unwrap(),
            "xcap={xcap}"
        );
    }
}

/// Row `j` of the z-factor equals `z^{j−1}` times row `j` of the y-factor
/// at `y = z − 1`; the factors `z^{j−1}` multiply to `1` on the degree-`n`
/// part of an `n`-fold product.
#[test]
fn per_root_substitution_coherence() {
    let xcap = 7;
    let pcap = xcap + 2;
    for kind in GenusKind::ALL {
        let fy = genus_factor(kind, Param::Y, xcap, pcap);
        let fz = genus_factor(kind, Param::Z, xcap, pcap);
        let z = UniPoly::monomial(Param::Z, pcap, 1, q(1, 1));
        for j in 0..=xcap {
            let shifted = fy.x_coeff(j).shift(&q(-1, 1)).retag(Param::Z, pcap);
            let zj = UniPoly::monomial(Param::Z, pcap, j, q(1, 1));
            assert_eq!(
                fz.x_coeff(j).mul_ref(&z),
                shifted.mul_ref(&zj),
                "{kind} j={j}"
            );
        }
    }
}

#[test]
fn product_substitution_coherence() {
    for kind in GenusKind::ALL {
        for n in 1..=5 {
            let via_y = genus_product(kind, Param::Y, n, n).unwrap();
            let substituted = via_y.map_coeffs(|c| c.shift(&q(-1, 1)).retag(Param::Z, n));
            assert_eq!(
                substituted,
                genus_product(kind, Param::Z, n, n).unwrap(),
                "{kind} n={n}"
            );
        }
    }
}

fn product_models(n: u32) -> Vec<ManifoldModel> {
    partitions_of(n)
        .into_iter()
        .map(|dims| ManifoldModel::Product(dims.parts().to_vec()))
        .collect()
}

#[test]
fn index_formulas_hold_numerically() {
    for n in 2..=8u32 {
        let tables: Vec<_> = [GenusKind::AY, GenusKind::LY]
            .iter()
            .map(|&k| genus_table(k, n as usize).unwrap())
            .collect();
        for m in product_models(n) {
            for table in &tables {
                for k in 0..=2 {
                    let lhs = evaluate(&weighted_alternating_sum(table, k).unwrap(), &m).unwrap();
                    let rhs =
                        evaluate(&closed_form(table.kind, n as usize, k).unwrap(), &m).unwrap();
                    assert_eq!(lhs, rhs, "{} k={k} on {m}", table.kind);
                }
            }
        }
    }
}

#[test]
fn spin_products_divisible_by_eight() {
    let mut seen = 0;
    for n in 2..=9u32 {
        for m in product_models(n) {
            if is_spin(&m).unwrap() {
                seen += 1;
                let r = divisibility_check(&m).unwrap();
                assert!(r.divisible_by_8, "{m}: {r}");
            }
        }
    }
    assert!(seen > 5);
}

#[test]
fn odd_projective_space_closed_form() {
    for k in 1..=4i64 {
        let m = ManifoldModel::ProjectiveSpace(2 * k as u32 + 1);
        let bracket = q(k * (2 * k + 1), 1) + q(k * (k + 1) * (2 * k + 1), 3);
        let want = q(8 * (k + 1) * (k + 1), 1) * bracket;
        let got = divisibility_check(&m).unwrap().value;
        assert_eq!(Rational::from_integer(got), want, "k={k}");
    }
}

#[test]
fn euler_number_is_multiplicative() {
    let euler = |m: &ManifoldModel| chern_numbers(m)[&Partition::new(vec![m.dimension()])].clone();
    for a in 1..=4u32 {
        for b in 1..=4u32 {
            let prod = euler(&ManifoldModel::Product(vec![a, b]));
            let want = BigInt::from(a + 1) * BigInt::from(b + 1);
            assert_eq!(prod, want, "cp{a} x cp{b}");
        }
    }
}

#[test]
fn h22_in_four_roots() {
    let got = lemma23_lhs(HTerm::H22, 4).unwrap();
    let want = ChernCombo::from_terms(
        4,
        [
            (Partition::new(vec![4]), q(2, 1)),
            (Partition::new(vec![3, 1]), q(-2, 1)),
            (Partition::new(vec![2, 2]), q(1, 1)),
        ],
    )
    .unwrap();
    assert_eq!(got, want);
    // in four roots the degree-4 part of h22 is m_{(2,2)}; compare pointwise
    let m22 = common::monomial_symmetric(&Partition::new(vec![2, 2]), 4);
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..20 {
        let x = common::random_point(&mut rng, 4);
        assert_eq!(m22.evaluate(&x), common::evaluate_in_roots(want.iter(), &x));
    }
}
