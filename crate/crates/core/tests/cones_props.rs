mod common;

use common::*;
use proptest::prelude::*;
use rhogeom::cones2d::{ortho_cone, ortho_cone_bisect, precedes, regular_polygon_cone, verify_monotone};
use rhogeom::derivatives::{derivative, is_birkhoff};
use rhogeom::spaces::regular_vertex;
use rhogeom::Space;

fn dist(a: &[f64], b: &[f64]) -> f64 {
    (a[0] - b[0]).abs().max((a[1] - b[1]).abs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn kernel_cone_matches_bisection_on_random_polygons(space in polygon_space()) {
        for k in 0..50 {
            let x = space.sphere_point_2d(k as f64 * std::f64::consts::TAU / 50.0 + 0.01).unwrap();
            let kernel = ortho_cone(&space, &x).unwrap();
            let bisect = ortho_cone_bisect(&space, &x).unwrap();
            prop_assert!(dist(&kernel.w1, &bisect.w1) <= 1e-9, "w1 {:?} vs {:?}", kernel.w1, bisect.w1);
            prop_assert!(dist(&kernel.w2, &bisect.w2) <= 1e-9, "w2 {:?} vs {:?}", kernel.w2, bisect.w2);
            prop_assert!(is_birkhoff(&space, &x, &kernel.w1).unwrap());
            prop_assert!(is_birkhoff(&space, &x, &kernel.w2).unwrap());
            prop_assert!(precedes(&x, &kernel.w1).unwrap());
            prop_assert!(precedes(&kernel.w2, &[-x[0], -x[1]]).unwrap());
            let mid = [kernel.w1[0] + kernel.w2[0], kernel.w1[1] + kernel.w2[1]];
            prop_assert!(is_birkhoff(&space, &x, &mid).unwrap());
        }
    }

    #[test]
    fn derivative_decreases_along_the_half_turn((space, x, _y) in planar_pair()) {
        let r = verify_monotone(&space, &x, 200).unwrap();
        prop_assert!(r.passed, "violation {}", r.max_violation);
    }
}

#[test]
fn closed_form_cone_matches_kernels() {
    for n in 2..=12 {
        let space = Space::regular(n).unwrap();
        for m in 1..=2 * n {
            let closed = regular_polygon_cone(n, m).unwrap();
            let kernel = ortho_cone(&space, &regular_vertex(n, m)).unwrap();
            assert!(dist(&closed.w1, &kernel.w1) <= 1e-12, "n = {n}, m = {m}");
            assert!(dist(&closed.w2, &kernel.w2) <= 1e-12, "n = {n}, m = {m}");
        }
    }
}

#[test]
fn cone_rays_have_zero_one_sided_derivative() {
    let space = Space::regular(5).unwrap();
    let x = regular_vertex(5, 2);
    let c = ortho_cone(&space, &x).unwrap();
    assert!(derivative(&space, &x, &c.w1).unwrap().rho_minus.abs() <= 1e-12);
    assert!(derivative(&space, &x, &c.w2).unwrap().rho_plus.abs() <= 1e-12);
}
