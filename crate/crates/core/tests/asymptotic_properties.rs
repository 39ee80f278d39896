use std::f64::consts::E;

use newton_cond_core::asymptotics::{
    growth_rate, kappa_ratio_series, lemma8_bound_check, rate_convergence_series,
    upper_incomplete_gamma_int, GrowthRegime,
};
use newton_cond_core::numerics::{exp_taylor_sum, int, ratio, to_float};
use newton_cond_core::Scalar;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn incomplete_gamma_reproduces_the_exponential_taylor_sum() {
    for n in 0..=100usize {
        let xs = [ratio(1, 2), int(1), int(5), ratio(n as i64, 3)];
        for x in xs {
            let xf = to_float(&x);
            let exact = to_float(&exp_taylor_sum(&x, n));
            let via_gamma = if xf == 0.0 {
                1.0
            } else {
                let gamma_n1 = libm::tgamma(n as f64 + 1.0);
                xf.exp() * upper_incomplete_gamma_int(n + 1, xf).unwrap() / gamma_n1
            };
            assert!(
                rel(via_gamma, exact) < 1e-10,
                "n={n} x={x}: {via_gamma} vs {exact}"
            );
        }
    }
}

#[test]
fn lemma_inequality_over_a_grid() {
    for n in 1..=100 {
        for l in [1.5, 2.0, 3.0, 10.0] {
            let c = lemma8_bound_check(n, l).unwrap();
            assert!(c.holds, "n={n} l={l}");
            assert!(c.ratio <= 1.0 && c.ratio > 0.0);
        }
    }
}

#[test]
fn branches_meet_continuously() {
    let eps = 1e-12;
    let at1 = growth_rate(1.0).unwrap().rate;
    assert!((at1 - 2.0 * E).abs() < 1e-12);
    assert!((2.0 * (1.0f64).exp() - at1).abs() < 1e-12);
    assert!((growth_rate(1.0 + eps).unwrap().rate - at1).abs() < 1e-10);
    let at2 = growth_rate(2.0).unwrap().rate;
    let long_branch = 2.0 * (3.0f64 / 2.0 - 1.0).exp();
    assert!((at2 - long_branch).abs() < 1e-12);
    assert!((growth_rate(2.0 + eps).unwrap().rate - at2).abs() < 1e-10);
}

#[test]
fn rate_never_drops_below_three() {
    let mut prev = f64::INFINITY;
    for k in 1..=50_000 {
        let l = k as f64 * 1e-3;
        let p = growth_rate(l).unwrap();
        assert!(p.rate >= 3.0, "l={l}");
        if (p.rate - 3.0).abs() < 1e-9 {
            assert!((l - 3.0).abs() < 1e-3, "l={l}");
        }
        if l <= 3.0 {
            assert!(p.rate < prev, "not decreasing at l={l}");
        } else {
            assert!(p.rate > prev, "not increasing at l={l}");
        }
        prev = p.rate;
        let expected = if l <= 1.0 {
            GrowthRegime::Short
        } else if l <= 2.0 {
            GrowthRegime::Moderate
        } else {
            GrowthRegime::Long
        };
        assert_eq!(p.regime, expected);
    }
}

#[test]
fn finite_n_rates_approach_the_limit() {
    for l in [
        ratio(1, 2),
        int(1),
        ratio(3, 2),
        int(2),
        int(3),
        int(7),
        int(20),
    ] {
        let limit = growth_rate(to_float(&l)).unwrap().rate;
        let series = rate_convergence_series(&l, &[50, 400]).unwrap();
        let dev50 = rel(series[0].1, limit);
        let dev400 = rel(series[1].1, limit);
        assert!(dev400 < dev50, "l={l}: {dev400} !< {dev50}");
    }
}

#[test]
fn ratio_to_three_power_trends_to_sqrt_three_halves() {
    let target = 1.5f64.sqrt();
    let s = kappa_ratio_series(&int(3), &[3, 200, 800]).unwrap();
    assert!((s[0].1 - 32.0 / 27.0).abs() < 1e-12);
    assert!((s[2].1 - target).abs() < (s[1].1 - target).abs());
    let exact: Scalar = ratio(32, 27);
    assert!((to_float(&exact) - s[0].1).abs() < 1e-14);
}
