use newton_cond_core::grid::{affine_map, map_to_length3, Grid, Interval};
use newton_cond_core::matrices::{build_l, build_pascal};
use newton_cond_core::newton::{
    divided_differences, finite_differences, newton_eval, omega_eval, omega_tilde_eval,
    rescale_to_length3, unscale_from_length3,
};
use newton_cond_core::numerics::{binomial, int, pow, ratio};
use newton_cond_core::Scalar;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// `d_k f = sum_{i<=k} f(x_i) / prod_{j<=k, j != i} (x_i - x_j)`.
fn explicit_divided_differences(nodes: &[Scalar], samples: &[Scalar]) -> Vec<Scalar> {
    (0..nodes.len())
        .map(|k| {
            (0..=k).fold(Scalar::zero(), |acc, i| {
                let denom = (0..=k)
                    .filter(|&j| j != i)
                    .fold(Scalar::one(), |p, j| p * (&nodes[i] - &nodes[j]));
                acc + &samples[i] / denom
            })
        })
        .collect()
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-200i64..200, 1i64..30).prop_map(|(p, q)| ratio(p, q))
}

fn sorted_distinct(max: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::btree_set(rational(), 2..=max).prop_map(|s| s.into_iter().collect())
}

fn distinct_nodes(max: usize) -> impl Strategy<Value = Vec<Scalar>> {
    sorted_distinct(max).prop_shuffle()
}

fn interval() -> impl Strategy<Value = Interval> {
    (rational(), 1i64..40, 1i64..7).prop_map(|(a, p, q)| {
        let b = &a + ratio(p, q);
        Interval::new(a, b).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recurrence_matches_explicit_sum(
        nodes in sorted_distinct(16).prop_shuffle(),
        seed in proptest::collection::vec(rational(), 16),
    ) {
        let samples = &seed[..nodes.len()];
        let dd = divided_differences(&nodes, samples).unwrap();
        prop_assert_eq!(dd.coefficients(), &explicit_divided_differences(&nodes, samples)[..]);
    }

    #[test]
    fn coefficients_solve_collocation_systems(
        iv in interval(),
        n in 1usize..=25,
        seed in proptest::collection::vec(rational(), 26),
    ) {
        let grid = Grid::new(iv, n).unwrap();
        let samples = &seed[..=n];
        let d = divided_differences(grid.nodes(), samples).unwrap();
        let l = build_l(n, &grid.length()).unwrap();
        prop_assert_eq!(l.mul_vec(d.coefficients()).unwrap(), samples.to_vec());
        let fd = finite_differences(grid.nodes(), samples).unwrap();
        let p = build_pascal(n).unwrap();
        prop_assert_eq!(p.mul_vec(fd.coefficients()).unwrap(), samples.to_vec());
        for (i, (c, m)) in fd.coefficients().iter().zip(d.coefficients()).enumerate() {
            prop_assert_eq!(c, &(m * omega_eval(grid.nodes(), i, &grid.nodes()[i]).unwrap()));
        }
    }

    #[test]
    fn flavors_agree_off_the_nodes(
        iv in interval(),
        n in 1usize..=15,
        seed in proptest::collection::vec(rational(), 16),
        points in proptest::collection::vec(rational(), 20),
    ) {
        let grid = Grid::new(iv, n).unwrap();
        let samples = &seed[..=n];
        let monic = divided_differences(grid.nodes(), samples).unwrap();
        let finite = finite_differences(grid.nodes(), samples).unwrap();
        let rescaled = rescale_to_length3(&monic, &grid.length()).unwrap();
        for x in &points {
            let p = newton_eval(grid.nodes(), &monic, x).unwrap();
            prop_assert_eq!(&newton_eval(grid.nodes(), &finite, x).unwrap(), &p);
            prop_assert_eq!(&newton_eval(grid.nodes(), &rescaled, x).unwrap(), &p);
        }
        for (x, f) in grid.nodes().iter().zip(samples) {
            prop_assert_eq!(&newton_eval(grid.nodes(), &monic, x).unwrap(), f);
        }
        prop_assert_eq!(unscale_from_length3(&rescaled).unwrap(), monic);
    }

    #[test]
    fn rescaling_equals_differences_on_mapped_nodes(
        iv in interval(),
        n in 1usize..=15,
        seed in proptest::collection::vec(rational(), 16),
    ) {
        let grid = Grid::new(iv.clone(), n).unwrap();
        let samples = &seed[..=n];
        let target = map_to_length3(&iv);
        let map = affine_map(&iv, &target);
        let mapped: Vec<Scalar> = grid.nodes().iter().map(|x| map.apply(x)).collect();
        let target_grid = Grid::new(target, n).unwrap();
        prop_assert_eq!(&mapped[..], target_grid.nodes());
        let direct = divided_differences(&mapped, samples).unwrap();
        let monic = divided_differences(grid.nodes(), samples).unwrap();
        let rescaled = rescale_to_length3(&monic, &grid.length()).unwrap();
        prop_assert_eq!(direct.coefficients(), rescaled.coefficients());
    }

    #[test]
    fn polynomial_degree_is_reproduced(
        nodes in distinct_nodes(12),
        coeffs in proptest::collection::vec(rational(), 1..8),
    ) {
        let degree = coeffs.len() - 1;
        let samples: Vec<Scalar> = nodes
            .iter()
            .map(|x| coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c))
            .collect();
        let dd = divided_differences(&nodes, &samples).unwrap();
        for (k, d) in dd.coefficients().iter().enumerate() {
            if k > degree {
                prop_assert!(d.is_zero());
            } else if k == degree && k < nodes.len() {
                prop_assert_eq!(d, &coeffs[degree]);
            }
        }
    }
}

#[test]
fn normalized_basis_at_equidistant_nodes_is_pascal() {
    let intervals = [
        Interval::new(int(0), int(1)).unwrap(),
        Interval::new(ratio(-7, 3), int(5)).unwrap(),
        Interval::new(int(100), ratio(1001, 10)).unwrap(),
    ];
    for iv in intervals {
        let grid = Grid::new(iv, 40).unwrap();
        for i in 0..=40 {
            for j in 0..=i {
                assert_eq!(
                    omega_tilde_eval(grid.nodes(), j, &grid.nodes()[i]).unwrap(),
                    Scalar::from_integer(binomial(i, j)),
                    "({i}, {j})"
                );
            }
        }
    }
}

#[test]
fn interpolation_conditions_hold_on_a_large_grid() {
    let grid = Grid::new(Interval::new(int(0), int(1)).unwrap(), 30).unwrap();
    let samples: Vec<Scalar> = grid
        .nodes()
        .iter()
        .map(|x| pow(x, 7) - x + int(2))
        .collect();
    let dd = divided_differences(grid.nodes(), &samples).unwrap();
    for (x, f) in grid.nodes().iter().zip(&samples) {
        assert_eq!(&newton_eval(grid.nodes(), &dd, x).unwrap(), f);
    }
    assert_eq!(dd.coefficients()[7], int(1));
    assert!(dd.coefficients()[8..].iter().all(Zero::is_zero));
}
