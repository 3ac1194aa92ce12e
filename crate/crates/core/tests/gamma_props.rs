mod common;

use common::*;
use proptest::prelude::*;
use rhogeom::cones2d::ortho_cone;
use rhogeom::derivatives::derivative;
use rhogeom::gamma::{
    e_constant, gamma_closed_form_2ngon, gamma_estimate, gamma_polyhedral_2d, james_constant_estimate,
    witness_valid,
};
use rhogeom::Space;

fn cone_gap(space: &Space, x: &[f64]) -> f64 {
    let c = ortho_cone(space, x).unwrap();
    let a = derivative(space, x, &c.w1).unwrap().rho.abs();
    let b = derivative(space, x, &c.w2).unwrap().rho.abs();
    a.max(b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn estimate_brackets_exact_value(space in polygon_space()) {
        let exact = gamma_polyhedral_2d(&space).unwrap().value;
        let est = gamma_estimate(&space, 1440, 60).unwrap();
        prop_assert!(est.lower_bound_only);
        prop_assert!(est.value <= exact + 1e-9, "{} > {}", est.value, exact);
        prop_assert!(est.value >= exact - 1e-5, "{} < {}", est.value, exact);
    }

    #[test]
    fn vertices_suffice(space in polygon_space(), thetas in prop::collection::vec(0.0..std::f64::consts::TAU, 100)) {
        let exact = gamma_polyhedral_2d(&space).unwrap().value;
        for t in thetas {
            let x = space.sphere_point_2d(t).unwrap();
            prop_assert!(cone_gap(&space, &x) <= exact + 1e-9);
        }
    }

    #[test]
    fn witnesses_reproduce_the_value(space in polygon_space()) {
        let g = gamma_polyhedral_2d(&space).unwrap();
        prop_assert!(witness_valid(&space, &g).unwrap());
        prop_assert!(g.value >= -1e-12);
        prop_assert!(g.value <= e_constant(&space).unwrap().min(0.5) + 1e-9);
    }
}

#[test]
fn polyhedral_matches_closed_form() {
    for n in 2..=12 {
        let g = gamma_polyhedral_2d(&Space::regular(n).unwrap()).unwrap();
        let c = gamma_closed_form_2ngon(n).unwrap();
        assert!((g.value - c).abs() <= 1e-12, "n = {n}: {} vs {c}", g.value);
    }
}

/// Exhaustive double grid of `min(‖x + y‖, ‖x − y‖)` over unit pairs.
fn james_brute(space: &Space, k: usize) -> f64 {
    let pts: Vec<_> = (0..k)
        .map(|i| space.sphere_point_2d(i as f64 * std::f64::consts::TAU / k as f64).unwrap())
        .collect();
    let mut best: f64 = 0.0;
    for x in &pts {
        for y in &pts {
            let s = space.norm(&[x[0] + y[0], x[1] + y[1]]).unwrap();
            let d = space.norm(&[x[0] - y[0], x[1] - y[1]]).unwrap();
            best = best.max(s.min(d));
        }
    }
    best
}

#[test]
fn james_estimate_agrees_with_brute_force_on_the_hexagon() {
    let space = Space::l1_linf();
    let brute = james_brute(&space, 1440);
    let est = james_constant_estimate(&space, 720, 60).unwrap();
    assert!(est.value >= brute - 1e-3, "{} vs brute {brute}", est.value);
    assert!(est.value <= 2.0 + 1e-12);
    let x = &est.witness_x;
    let y = &est.witness_y;
    let s = space.norm(&[x[0] + y[0], x[1] + y[1]]).unwrap();
    let d = space.norm(&[x[0] - y[0], x[1] - y[1]]).unwrap();
    assert!((s.min(d) - est.value).abs() <= 1e-9);
}
