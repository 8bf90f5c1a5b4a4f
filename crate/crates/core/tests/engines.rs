use num_bigint::BigUint;
use opmono::asymptotics::{
    growth, growth_comm_unary, growth_estimate, growth_free, GrowthMethod, DEFAULT_TOL,
};
use opmono::counting::{free_length_by_narayana, free_length_by_recurrence, length_sequence};
use opmono::enumerate::count_by_length;
use opmono::series::{atom_builder, closed_form_free, euler_exp_log, solve, solve_quadratic_fe};
use opmono::{Error, Regime};

#[test]
fn length_sequences_match_enumeration_by_length() {
    for regime in Regime::ALL {
        for d in 1..=2 {
            for ell in 1..=3 {
                let seq = length_sequence(regime, d, ell, 11);
                for n in 1..=11 {
                    let oracle = count_by_length(d, ell, n as u32, regime).unwrap();
                    assert_eq!(
                        *seq.get(n),
                        BigUint::from(oracle),
                        "{regime} d={d} ell={ell} n={n}"
                    );
                }
            }
        }
    }
}

#[test]
fn free_length_routes_agree() {
    for d in 1..=5 {
        for ell in 1..=5 {
            let seq = length_sequence(Regime::Free, d, ell, 60);
            let by_narayana = free_length_by_narayana(d, ell, 60);
            let by_recurrence = free_length_by_recurrence(d, ell, 60);
            assert_eq!(&by_narayana[1..], seq.values());
            assert_eq!(by_narayana, by_recurrence);
        }
    }
}

#[test]
fn even_ell_sequences_vanish_at_odd_lengths() {
    for regime in Regime::ALL {
        let seq = length_sequence(regime, 3, 2, 30);
        assert!((1..=30)
            .step_by(2)
            .all(|n| seq.get(n) == &BigUint::default()));
    }
}

#[test]
fn series_routes_agree_beyond_the_acceptance_grid() {
    for regime in Regime::ALL {
        for (d, ell) in [(5, 1), (2, 4), (1, 5)] {
            let series = solve(regime, d, ell, 30).unwrap();
            assert_eq!(
                &series.to_counts().unwrap()[1..],
                length_sequence(regime, d, ell, 30).values()
            );
        }
    }
    for (d, ell) in [(1, 1), (3, 2), (2, 5)] {
        assert_eq!(
            closed_form_free(d, ell, 30).unwrap(),
            solve(Regime::Free, d, ell, 30).unwrap()
        );
    }
}

#[test]
fn euler_construction_reduces_to_fixpoint_only_where_it_should() {
    let euler = euler_exp_log(atom_builder(Regime::CommMult, 2, 2), 20).unwrap();
    let fixpoint = solve_quadratic_fe(Regime::Free, 2, 2, 20).unwrap();
    assert_ne!(euler, fixpoint);
    assert_eq!(euler, solve(Regime::CommMult, 2, 2, 20).unwrap());
    assert!(matches!(
        solve_quadratic_fe(Regime::CommBoth, 2, 2, 20),
        Err(Error::UnsupportedRegime(_))
    ));
}

#[test]
fn rooted_trees_appear_at_one_operator() {
    let a000081 = [1u64, 2, 4, 9, 20, 48, 115, 286, 719, 1842];
    let seq = length_sequence(Regime::CommMult, 1, 2, 20).tabulated();
    let want: Vec<BigUint> = a000081.iter().map(|&x| x.into()).collect();
    assert_eq!(seq, want);
}

#[test]
fn exact_growth_matches_the_ratio_estimator() {
    for d in 1..=8 {
        for ell in 1..=3 {
            for regime in [Regime::Free, Regime::CommUnary] {
                let exact = growth(regime, d, ell, DEFAULT_TOL, 100).unwrap();
                assert_eq!(exact.method, GrowthMethod::ExactRoot);
                let estimate = growth_estimate(regime, d, ell, 100).unwrap();
                assert_eq!(estimate.estimate_n, Some(100));
                let gap = (exact.g_f64() - estimate.g_f64()).abs();
                assert!(
                    gap < 5e-2,
                    "{regime} d={d} ell={ell}: {} vs {}",
                    exact.g_f64(),
                    estimate.g_f64()
                );
            }
        }
    }
}

#[test]
fn quotient_growth_is_no_faster() {
    for d in 1..=8 {
        for ell in 1..=5 {
            let free = growth_free(d, ell, DEFAULT_TOL).unwrap().g_f64();
            let comm = growth_comm_unary(d, ell, DEFAULT_TOL).unwrap().g_f64();
            if d == 1 {
                assert!((free - comm).abs() < 1e-9, "ell={ell}");
            } else {
                assert!(free > comm, "d={d} ell={ell}");
            }
        }
    }
}

#[test]
fn exact_roots_invert_to_growth() {
    for ell in [1, 2, 3, 10] {
        let r = growth_free(3, ell, 1e-20).unwrap();
        let rho = r.rho_f64().unwrap();
        assert!(rho > 0.0 && rho < 1.0);
        assert!((rho * r.g_f64() - 1.0).abs() < 1e-12);
        assert!(r.residual.unwrap() < 1e-20);
    }
}

#[test]
fn growth_dispatch_and_errors() {
    assert_eq!(
        growth(Regime::CommBoth, 2, 2, DEFAULT_TOL, 50)
            .unwrap()
            .method,
        GrowthMethod::RatioEstimate
    );
    assert!(growth_free(2, 2, 0.0).is_err());
    assert!(growth_comm_unary(2, 2, -1.0).is_err());
    assert!(growth_estimate(Regime::CommMult, 2, 2, 0).is_err());
}

#[test]
fn estimator_panels_match_plotted_values() {
    let rows: [(Regime, u32, &[f64]); 12] = [
        (
            Regime::CommMult,
            1,
            &[2.0547, 2.57, 2.9615, 3.2886, 3.5748, 3.8319, 4.0672, 4.2853],
        ),
        (
            Regime::CommMult,
            2,
            &[
                1.7194, 2.1201, 2.4332, 2.699, 2.9339, 3.1467, 3.3426, 3.5251,
            ],
        ),
        (
            Regime::CommMult,
            3,
            &[
                1.5692, 1.9203, 2.2025, 2.4459, 2.6634, 2.8619, 3.0457, 3.2178,
            ],
        ),
        (Regime::CommMult, 4, &[1.4798, 1.8024]),
        (Regime::CommMult, 5, &[1.4190, 1.7233]),
        (Regime::CommMult, 10, &[1.2706, 1.5393]),
        (
            Regime::CommBoth,
            1,
            &[
                2.0547, 2.4988, 2.8308, 3.1055, 3.3439, 3.5569, 3.7508, 3.9297,
            ],
        ),
        (
            Regime::CommBoth,
            2,
            &[1.7194, 2.0343, 2.2709, 2.4671, 2.6376, 2.79, 2.9289, 3.0571],
        ),
        (Regime::CommBoth, 3, &[1.5692, 1.8248]),
        (Regime::CommBoth, 4, &[1.4798, 1.6992]),
        (Regime::CommBoth, 5, &[1.4190, 1.6134]),
        (Regime::CommBoth, 10, &[1.2706, 1.4026]),
    ];
    for (regime, ell, row) in rows {
        for (k, want) in row.iter().enumerate() {
            let g = growth_estimate(regime, k + 1, ell, 100).unwrap().g_f64();
            assert!(
                (g - want).abs() < 1e-3,
                "{regime} d={} ell={ell}: {g:.4} vs {want}",
                k + 1
            );
        }
    }
}
