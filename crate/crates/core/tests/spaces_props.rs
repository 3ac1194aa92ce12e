mod common;

use common::*;
use proptest::prelude::*;
use rhogeom::spaces::regular_polygon_vertices;
use rhogeom::{Polygon, Space};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn norm_axioms((space, x, y) in space_pair(), lambda in -5.0..5.0f64) {
        let nx = space.norm(&x).unwrap();
        let ny = space.norm(&y).unwrap();
        prop_assert!(nx > 0.0);
        prop_assert!(ny >= 0.0);
        let scaled: Vec<f64> = x.iter().map(|c| lambda * c).collect();
        prop_assert!(rel_close(space.norm(&scaled).unwrap(), lambda.abs() * nx, 1e-12));
        let sum: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        prop_assert!(space.norm(&sum).unwrap() <= (nx + ny) * (1.0 + 1e-12));
    }

    #[test]
    fn ext_functionals_norm_x_with_unit_dual((space, x, _y) in space_pair()) {
        let nx = space.norm(&x).unwrap();
        let funcs = space.ext_supporting_functionals(&x).unwrap();
        prop_assert!(!funcs.is_empty());
        for f in funcs {
            prop_assert!(rel_close(f.apply(&x), nx, 1e-10), "f(x) = {} vs {}", f.apply(&x), nx);
            let d = space.dual_norm(f.coords()).unwrap();
            prop_assert!((d - 1.0).abs() <= 1e-10, "dual norm {}", d);
        }
    }

    #[test]
    fn regular_vertices_as_polygon_match(n in 2usize..=12, x in coords(2)) {
        let vs: Vec<[f64; 2]> = regular_polygon_vertices(n).unwrap().iter().map(|v| [v[0], v[1]]).collect();
        let generic = Space::Polygon(Polygon::new(&vs).unwrap());
        let regular = Space::regular(n).unwrap();
        prop_assert!(rel_close(generic.norm(&x).unwrap(), regular.norm(&x).unwrap(), 1e-12));
    }

    #[test]
    fn sum_max_plane_is_the_hexagon(x in coords(2)) {
        let hexagon = Space::polygon(&[[1.0, 0.0], [0.0, 1.0], [-1.0, 1.0], [-1.0, 0.0], [0.0, -1.0], [1.0, -1.0]]).unwrap();
        let glued = Space::l1_linf();
        prop_assert!((glued.norm(&x).unwrap() - hexagon.norm(&x).unwrap()).abs() <= 1e-12 * (1.0 + x[0].abs() + x[1].abs()));
    }

    #[test]
    fn sphere_points_are_unit(space in planar_space(), theta in 0.0..std::f64::consts::TAU) {
        let p = space.sphere_point_2d(theta).unwrap();
        prop_assert!((space.norm(&p).unwrap() - 1.0).abs() <= 1e-12);
        prop_assert!((p[1].atan2(p[0]) - theta).rem_euclid(std::f64::consts::TAU).min(
            (theta - p[1].atan2(p[0])).rem_euclid(std::f64::consts::TAU)) <= 1e-9);
    }
}

#[test]
fn polygon_json_round_trip() {
    let p = Polygon::new(&[[2.0, 0.0], [1.0, 1.0], [-1.0, 1.0]]).unwrap();
    let q = Polygon::from_json(&p.to_json()).unwrap();
    assert_eq!(p, q);
}
