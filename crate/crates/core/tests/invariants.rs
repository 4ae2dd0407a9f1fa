//! Library-level invariants: the closed-form distance law against full
//! enumeration, coordinate censuses, injectivity, root structure, and the
//! exact-ratio monotonicity behind the certificates.

use std::collections::HashSet;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use borsuk_core::bound::{adjust_lambda, theorem1_bound, vertex_t0};
use borsuk_core::lifting::{
    distance_from_intersection, enumerate_v, lift, lp_distance, pair_type_counts,
    quadratic_coefficients, Lambda, LiftedConfiguration, Parameters,
};
use borsuk_core::numeric::{binomial_exact, ceil_div};
use borsuk_core::oracle::census_matrix_of_pair;

const LAW_LAMBDAS: [(i64, i64); 4] = [(0, 1), (-1, 10), (-1, 3), (-1, 2)];
const LAW_EXPONENTS: [f64; 5] = [1.0, 1.5, 2.0, 3.0, 7.0];

#[test]
fn closed_form_law_matches_enumeration_up_to_n_10() {
    for n in 2..=10u32 {
        for k in 1..=n / 2 {
            let vectors = enumerate_v(n, k).unwrap();
            for (num, den) in LAW_LAMBDAS {
                let lambda = Lambda::new(num, den).unwrap();
                let lifted: Vec<Vec<f64>> = vectors.iter().map(|x| lift(x, lambda)).collect();
                for p in LAW_EXPONENTS {
                    let params = Parameters::new(n, k, p, lambda);
                    let q = quadratic_coefficients(&params).unwrap();
                    let tol = 1e-9 * (1.0 + q.c.abs());
                    for i in 0..vectors.len() {
                        for j in i + 1..vectors.len() {
                            let t = vectors[i].intersection(&vectors[j]);
                            let dist = lp_distance(&lifted[i], &lifted[j], p).unwrap();
                            let err = (dist.powf(p) - q.eval(t as f64)).abs();
                            assert!(
                                err <= tol,
                                "law violated: n={n} k={k} p={p} lambda={lambda} t={t} err={err}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn census_multiset_of_each_lifted_point() {
    for (n, k) in [(5u32, 2u32), (7, 3), (8, 3), (9, 4), (6, 3)] {
        for (num, den) in LAW_LAMBDAS {
            let lambda = Lambda::new(num, den).unwrap();
            let config = LiftedConfiguration::build(n, k, lambda).unwrap();
            let lam = lambda.value();
            let mut expected: Vec<f64> = Vec::new();
            let c2 = |m: u64| m * m.saturating_sub(1) / 2;
            expected.extend(std::iter::repeat(0.0).take(c2((n - k) as u64) as usize));
            expected.extend(std::iter::repeat(lam).take((k * (n - k)) as usize));
            expected.extend(std::iter::repeat(1.0 + 2.0 * lam).take(c2(k as u64) as usize));
            expected.sort_by(f64::total_cmp);
            for point in &config.points {
                let mut got = point.clone();
                got.sort_by(f64::total_cmp);
                assert_eq!(got, expected, "census n={n} k={k} lambda={lambda}");
            }
        }
    }
}

#[test]
fn pair_census_matches_direct_classification() {
    for (n, k) in [(5u32, 2u32), (7, 3), (9, 4), (4, 2)] {
        let vectors = enumerate_v(n, k).unwrap();
        for i in 0..vectors.len() {
            for j in i..vectors.len() {
                let t = vectors[i].intersection(&vectors[j]);
                let expected = pair_type_counts(n, k, t).unwrap();
                let actual = census_matrix_of_pair(&vectors[i], &vectors[j]);
                assert_eq!(actual, expected, "n={n} k={k} t={t}");
            }
        }
    }
}

#[test]
fn lifting_is_injective() {
    // negative lambda with k < n/2 (there c > 0, so distinct points stay
    // apart); at k = n/2 complements genuinely collide for lambda = -1/2
    for (n, k) in [(6u32, 2u32), (7, 3), (8, 3), (9, 4), (6, 1)] {
        for (num, den) in [(-1i64, 2i64), (-1, 3), (-1, 10)] {
            let lambda = Lambda::new(num, den).unwrap();
            let config = LiftedConfiguration::build(n, k, lambda).unwrap();
            let distinct: HashSet<Vec<u64>> = config
                .points
                .iter()
                .map(|pt| pt.iter().map(|c| c.to_bits()).collect())
                .collect();
            assert_eq!(distinct.len(), config.points.len(), "n={n} k={k} lambda={lambda}");
        }
    }
    for (n, k) in [(6u32, 2u32), (7, 3), (8, 4)] {
        let config = LiftedConfiguration::build(n, k, Lambda::ZERO).unwrap();
        let distinct: HashSet<Vec<u64>> = config
            .points
            .iter()
            .map(|pt| pt.iter().map(|c| c.to_bits()).collect())
            .collect();
        assert_eq!(distinct.len(), config.points.len(), "lambda=0 n={n} k={k}");
    }
}

fn random_valid_parameters(rng: &mut ChaCha8Rng) -> Parameters {
    let n = rng.gen_range(5..=200u32);
    let k_max = (n - 1) / 2;
    let k = rng.gen_range(2..=k_max.max(2));
    let p = rng.gen_range(1.0..=32.0f64);
    let lambda = Lambda::from_f64(-rng.gen_range(0.0..=0.5f64));
    Parameters::new(n, k, p, lambda)
}

#[test]
fn quadratic_root_structure_random_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10_000 {
        let params = random_valid_parameters(&mut rng);
        let q = quadratic_coefficients(&params).unwrap();
        assert!(q.a < 0.0, "{params:?}");
        assert!(q.c > 0.0, "{params:?}");
        // t = k is a root
        let at_k = q.eval(params.k as f64);
        assert!(at_k.abs() <= 1e-9, "f(k) = {at_k} for {params:?}");
        // the second root c/(k a) is negative
        let second = q.c / (params.k as f64 * q.a);
        assert!(second < 0.0, "{params:?}");
        let at_second = q.eval(second);
        assert!(at_second.abs() <= 1e-6 * (1.0 + q.c.abs()), "{params:?}");
    }
}

#[test]
fn vertex_formulas_agree_random_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(7_777);
    for _ in 0..10_000 {
        let params = random_valid_parameters(&mut rng);
        let t0 = vertex_t0(&params).unwrap();
        let q = quadratic_coefficients(&params).unwrap();
        let direct = -q.b / (2.0 * q.a);
        assert!(
            (t0 - direct).abs() <= 1e-9 * (1.0 + t0.abs()),
            "{params:?}: {t0} vs {direct}"
        );
    }
}

#[test]
fn bound_monotone_in_t1_exact() {
    for n in 5..=60u64 {
        for k in 2..(n as u32 + 1) / 2 {
            let numerator = binomial_exact(n, k as i64);
            let mut previous: Option<BigUint> = None;
            for t1 in 1..(k + 1) / 2 {
                let denominator = binomial_exact(n, k as i64 - t1 as i64 - 1);
                if denominator == BigUint::from(0u32) {
                    continue;
                }
                let bound = ceil_div(&numerator, &denominator);
                if let Some(prev) = &previous {
                    assert!(
                        &bound >= prev,
                        "bound not monotone at n={n} k={k} t1={t1}"
                    );
                }
                previous = Some(bound);
            }
        }
    }
}

#[test]
fn p_independence_at_half_lambda() {
    let lambda = Lambda::new(-1, 2).unwrap();
    let expected_bounds = [(2u32, 5u64), (3, 9), (4, 15), (5, 24)];
    for (q, expected) in expected_bounds {
        let n = 4 * q - 1;
        let k = 2 * q - 1;
        let mut seen: Option<(u32, BigUint)> = None;
        for p in [1.0, 1.5, 2.0, 3.0, 10.0] {
            let cert = theorem1_bound(&Parameters::new(n, k, p, lambda)).unwrap();
            assert_eq!(cert.t1, q - 1, "q={q} p={p}");
            assert_eq!(cert.lower_bound, BigUint::from(expected), "q={q} p={p}");
            let ratio = ceil_div(
                &binomial_exact(n as u64, k as i64),
                &binomial_exact(n as u64, q as i64 - 1),
            );
            assert_eq!(cert.lower_bound, ratio);
            match &seen {
                None => seen = Some((cert.t1, cert.lower_bound.clone())),
                Some((t1, bound)) => {
                    assert_eq!((*t1, bound.clone()), (cert.t1, cert.lower_bound.clone()));
                }
            }
        }
    }
}

#[test]
fn diameter_attained_at_t1_on_small_instances() {
    // instances where the lambda adjustment succeeds; the quadratic maximum
    // over integer t must match the enumerated diameter
    let cases = [
        (7u32, 3u32, 1.0f64, -0.5f64, 1u32),
        (7, 3, 2.0, -0.5, 1),
        (7, 3, 3.0, -0.5, 1),
        (9, 4, 2.0, -0.5, 2),
        (9, 4, 3.0, -0.5, 2),
        (8, 3, 2.0, -1.0 / 3.0, 1),
        (6, 2, 2.0, -0.5, 1),
    ];
    for (n, k, p, lambda_start, t1) in cases {
        let adjusted = adjust_lambda(n, k, p, lambda_start, t1).unwrap();
        let lambda = Lambda::from_f64(adjusted);
        let params = Parameters::new(n, k, p, lambda);
        let q = quadratic_coefficients(&params).unwrap();

        let by_formula: Vec<f64> = (0..=k)
            .map(|t| distance_from_intersection(t, &q, p).unwrap())
            .collect();
        let formula_max = by_formula.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        assert!(
            by_formula[t1 as usize] >= formula_max - 1e-9 * (1.0 + formula_max),
            "formula max not at t1: n={n} k={k} p={p}"
        );

        let config = LiftedConfiguration::build(n, k, lambda).unwrap();
        let mut diameter = 0.0f64;
        for i in 0..config.points.len() {
            for j in i + 1..config.points.len() {
                let dist = lp_distance(&config.points[i], &config.points[j], p).unwrap();
                diameter = diameter.max(dist);
            }
        }
        assert!(
            (diameter - formula_max).abs() <= 1e-9 * (1.0 + diameter),
            "diameter {diameter} vs formula {formula_max}: n={n} k={k} p={p}"
        );
    }
}

#[test]
fn certificate_soundness_exact_inequalities() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut produced = 0;
    while produced < 200 {
        let params = random_valid_parameters(&mut rng);
        if let Ok(cert) = theorem1_bound(&params) {
            produced += 1;
            assert!(&cert.lower_bound * &cert.denominator >= cert.numerator);
            assert!((&cert.lower_bound - 1u32) * &cert.denominator < cert.numerator);
        }
    }
}
