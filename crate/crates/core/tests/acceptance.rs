//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use chern_genus::algebra::{
    genus_factor, q, FactorSeries, GenusKind, Monomial, MvPoly, Param, Rational,
};
use chern_genus::genera::{
    binomial_transform, genus_table, verify_libgober_wood, verify_theorem_mr,
    weighted_alternating_sum, z_expand,
};
use chern_genus::manifolds::{divisibility_check, evaluate, index_table, is_spin, ManifoldModel};
use chern_genus::symmetric::{
    expand_combo, partitions_of, reduce_to_chern, verify_lemma23, ChernCombo, ElementaryBasis,
    Partition,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;

type Outcome = Result<(), String>;

/// Description, check, wall-clock limit.
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Combination built from `(parts, coeff)` pairs; zero parts are dropped so
/// that `c_0 = 1`, and repeated partitions accumulate.
fn combo(n: u32, terms: &[(Vec<i64>, Rational)]) -> ChernCombo {
    let mut c = ChernCombo::zero(n);
    for (parts, a) in terms {
        let parts: Vec<u32> = parts
            .iter()
            .filter(|&&p| p != 0)
            .map(|&p| p as u32)
            .collect();
        c.add_term(Partition::new(parts), a.clone()).unwrap();
    }
    c
}

fn criterion_1() -> Outcome {
    for n in 2..=8 {
        for check in verify_lemma23(n).map_err(|e| e.to_string())? {
            ensure(check.pass, || {
                format!("{} n={n}: {} != {}", check.identity, check.lhs, check.rhs)
            })?;
        }
    }
    // Σ_{i≠j} x_i² x_j over three roots
    let exps = [
        [2, 1, 0],
        [2, 0, 1],
        [1, 2, 0],
        [0, 2, 1],
        [1, 0, 2],
        [0, 1, 2],
    ];
    let f = MvPoly::from_terms(
        3,
        3,
        exps.iter().map(|e| (Monomial::new(e.to_vec()), q(1, 1))),
    );
    let got = reduce_to_chern(&f, 3).map_err(|e| e.to_string())?;
    let want = combo(3, &[(vec![1, 2], q(1, 1)), (vec![3], q(-3, 1))]);
    ensure(got == want, || format!("worked example gave {got}"))
}

fn criterion_2() -> Outcome {
    for n in 2..=8usize {
        for check in verify_theorem_mr(n).map_err(|e| e.to_string())? {
            ensure(check.pass, || {
                format!("{} n={n}: {} != {}", check.identity, check.lhs, check.rhs)
            })?;
        }
        let m = n as i64;
        let w = n as u32;
        let ay = combo(
            w,
            &[
                (vec![m], q(m * (3 * m - 5), 24)),
                (vec![m - 1, 1], q(3 * m - 2, 12)),
                (vec![m - 2, 1, 1], q(1, 8)),
            ],
        );
        let got = z_expand(GenusKind::AY, n, 2)
            .map_err(|e| e.to_string())?
            .coeffs[2]
            .clone();
        ensure(got == ay, || format!("a-y z^2 at n={n}: {got}"))?;
        let scale = q(1, 1) * Rational::pow2(m - 2);
        let ly = combo(
            w,
            &[
                (vec![m], q(m * (3 * m - 5), 6)),
                (vec![m - 1, 1], q(3 * m - 2, 3)),
                (vec![m - 2, 1, 1], q(1, 1)),
                (vec![m - 2, 2], q(-1, 1)),
            ],
        )
        .scale(&scale);
        let got = z_expand(GenusKind::LY, n, 2)
            .map_err(|e| e.to_string())?
            .coeffs[2]
            .clone();
        ensure(got == ly, || format!("l-y z^2 at n={n}: {got}"))?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    for n in 2..=8usize {
        let m = n as i64;
        let table = genus_table(GenusKind::ChiY, n).map_err(|e| e.to_string())?;
        let sum = weighted_alternating_sum(&table, 2).map_err(|e| e.to_string())?;
        let want = combo(
            n as u32,
            &[
                (vec![m], q(m * (3 * m - 5), 24)),
                (vec![1, m - 1], q(1, 12)),
            ],
        );
        ensure(sum == want, || format!("n={n}: {sum}"))?;
        for check in verify_libgober_wood(n).map_err(|e| e.to_string())? {
            ensure(check.pass, || {
                format!("{} n={n}: {} != {}", check.identity, check.lhs, check.rhs)
            })?;
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for kind in GenusKind::ALL {
        for n in 1..=8usize {
            let table = genus_table(kind, n).map_err(|e| e.to_string())?;
            let direct = z_expand(kind, n, n).map_err(|e| e.to_string())?;
            for k in 0..=n {
                let predicted = binomial_transform(&table, k).map_err(|e| e.to_string())?;
                ensure(direct.coeffs[k] == predicted, || {
                    format!("{kind} n={n} k={k}")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let cp = ManifoldModel::ProjectiveSpace;
    let d3 = divisibility_check(&cp(3)).map_err(|e| e.to_string())?;
    ensure(
        d3.value == BigInt::from(160) && d3.divisible_by_8 && d3.quotient == Some(BigInt::from(20)),
        || format!("cp3: {d3}"),
    )?;
    let d4 = divisibility_check(&cp(4)).map_err(|e| e.to_string())?;
    ensure(d4.value == BigInt::from(550) && !d4.divisible_by_8, || {
        format!("cp4: {d4}")
    })?;
    let d5 = divisibility_check(&cp(5)).map_err(|e| e.to_string())?;
    ensure(d5.value == BigInt::from(1440) && d5.divisible_by_8, || {
        format!("cp5: {d5}")
    })?;
    let chi = index_table(GenusKind::ChiY, &cp(2))
        .map_err(|e| e.to_string())?
        .values();
    ensure(chi == vec![q(1, 1), q(-1, 1), q(1, 1)], || {
        format!("chi-y cp2: {chi:?}")
    })?;
    let a = index_table(GenusKind::AY, &cp(3))
        .map_err(|e| e.to_string())?
        .values();
    let alt: Rational = a
        .iter()
        .enumerate()
        .map(|(p, v)| if p % 2 == 0 { v.clone() } else { -v.clone() })
        .sum();
    let c3 = evaluate(&combo(3, &[(vec![3], q(1, 1))]), &cp(3)).map_err(|e| e.to_string())?;
    ensure(alt == q(4, 1) && c3 == q(4, 1), || {
        format!("alternating a-y on cp3: {alt}, c3 = {c3}")
    })
}

fn criterion_6() -> Outcome {
    // (x-power, z-power, coefficient)
    let expect = |s: &FactorSeries, name: &str, want: &[(usize, usize, Rational)]| -> Outcome {
        for j in 0..=s.xcap() {
            for k in 0..=s.pcap() {
                let w = want
                    .iter()
                    .find(|(a, b, _)| (*a, *b) == (j, k))
                    .map_or(q(0, 1), |t| t.2.clone());
                ensure(s.coeff(j, k) == w, || {
                    format!("{name}: x^{j} z^{k} is {}, want {w}", s.coeff(j, k))
                })?;
            }
        }
        Ok(())
    };
    let ay = genus_factor(GenusKind::AY, Param::Z, 3, 2);
    expect(
        &ay,
        "a-y",
        &[
            (0, 0, q(1, 1)),
            (1, 0, q(1, 1)),
            (1, 1, q(-1, 1)),
            (2, 1, q(-1, 2)),
            (2, 2, q(11, 24)),
            (3, 2, q(1, 8)),
        ],
    )?;
    let ly = genus_factor(GenusKind::LY, Param::Z, 3, 2);
    expect(
        &ly,
        "l-y",
        &[
            (0, 0, q(2, 1)),
            (1, 0, q(2, 1)),
            (1, 1, q(-2, 1)),
            (2, 1, q(-1, 1)),
            (2, 2, q(7, 6)),
            (3, 2, q(1, 2)),
        ],
    )?;
    let chi = genus_factor(GenusKind::ChiY, Param::Z, 3, 2);
    expect(
        &chi,
        "chi-y",
        &[
            (0, 0, q(1, 1)),
            (1, 0, q(1, 1)),
            (1, 1, q(-1, 2)),
            (2, 2, q(1, 12)),
        ],
    )
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut cases = 0;
    while cases < 120 {
        let n = rng.gen_range(1..=6usize);
        let f = common::random_symmetric(&mut rng, n);
        let c = reduce_to_chern(&f, n).map_err(|e| format!("reduction failed: {e}"))?;
        for _ in 0..3 {
            let x = common::random_point(&mut rng, n);
            let via_chern = common::evaluate_in_roots(c.iter(), &x);
            ensure(f.evaluate(&x) == via_chern, || {
                format!("random case n={n}: f = {f}, combo = {c}")
            })?;
        }
        cases += 1;
    }

    for n in 1..=8usize {
        let basis = ElementaryBasis::cached(n);
        for lambda in partitions_of(n as u32) {
            let unit = ChernCombo::term(n as u32, lambda.clone(), q(1, 1)).unwrap();
            let back = reduce_to_chern(basis.get(&lambda), n).map_err(|e| e.to_string())?;
            ensure(back == unit, || format!("round trip n={n} λ={lambda}"))?;
            ensure(expand_combo(&unit, n) == *basis.get(&lambda), || {
                format!("expansion n={n} λ={lambda}")
            })?;
        }
    }

    for n in 1..=8usize {
        let t = genus_table(GenusKind::ChiY, n).map_err(|e| e.to_string())?;
        let sign = if n % 2 == 0 { q(1, 1) } else { q(-1, 1) };
        for p in 0..=n {
            ensure(t.rows[n - p] == t.rows[p].scale(&sign), || {
                format!("chi-y symmetry n={n} p={p}")
            })?;
        }
    }

    let mut spin_models = 0;
    for n in 1..=8u32 {
        for dims in partitions_of(n) {
            let m = ManifoldModel::Product(dims.parts().to_vec());
            let spin = is_spin(&m).map_err(|e| e.to_string())?;
            spin_models += usize::from(spin);
            for kind in GenusKind::ALL {
                if kind == GenusKind::AY && !spin {
                    continue;
                }
                let t = index_table(kind, &m).map_err(|e| e.to_string())?;
                ensure(t.all_integral(), || {
                    format!("{kind} on {m}: {:?}", t.values())
                })?;
            }
        }
    }
    ensure(spin_models > 0, || {
        "no spin product among the models".into()
    })
}

fn main() {
    let criteria: [Criterion; 7] = [
        (
            "identity suite for the h-components, n = 2..8",
            criterion_1,
            Some(Duration::from_secs(10)),
        ),
        (
            "index formulas for the twisted Â and L genera, n = 2..8",
            criterion_2,
            Some(Duration::from_secs(30)),
        ),
        (
            "Libgober-Wood formula, n = 2..8",
            criterion_3,
            Some(Duration::from_secs(10)),
        ),
        (
            "z-expansion equals binomial transform of the y-table, n <= 8",
            criterion_4,
            None,
        ),
        (
            "projective space numerics",
            criterion_5,
            Some(Duration::from_secs(5)),
        ),
        ("low-order factor series coefficients", criterion_6, None),
        (
            "property suites: random oracle, round trip, symmetry, integrality",
            criterion_7,
            None,
        ),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|()| match limit {
            Some(l) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            _ => Ok(()),
        });
        match result {
            Ok(()) => println!("criterion {}: PASS {name} ({elapsed:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({elapsed:.2?}): {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
