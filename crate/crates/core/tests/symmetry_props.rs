mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rhogeom::derivatives::is_rho_orthogonal;
use rhogeom::symmetry::{classify_l1, classify_linf, rho_ortho_l1, rho_ortho_linf, RationalVector};
use rhogeom::Space;

fn small(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![1 => Just(0i64), 3 => -6i64..=6], n)
}

fn rv(nums: &[i64], den: i64) -> RationalVector {
    RationalVector::from_ints(nums, den).unwrap()
}

fn sgn(v: i64) -> i64 {
    v.signum()
}

/// Adjusts one support coordinate of `y` so that `Σ sgn(xᵢ) yᵢ = 0`.
fn l1_orthogonal(x: &[i64], mut y: Vec<i64>) -> Vec<i64> {
    let k = x.iter().position(|&v| v != 0).expect("nonzero x");
    let rest: i64 = x.iter().zip(&y).enumerate().filter(|(i, _)| *i != k).map(|(_, (a, b))| sgn(*a) * b).sum();
    y[k] = -sgn(x[k]) * rest;
    y
}

/// Makes `max + min` of `sgn(xᵢ) yᵢ` over the peak coordinates vanish.
fn linf_orthogonal(x: &[i64], mut y: Vec<i64>) -> Vec<i64> {
    let m = x.iter().map(|v| v.abs()).max().unwrap();
    let peaks: Vec<usize> = (0..x.len()).filter(|&i| x[i].abs() == m).collect();
    let a = y[peaks[0]].abs();
    for (j, &i) in peaks.iter().enumerate() {
        let v = match j {
            0 => a,
            1 => -a,
            _ => (y[i]).clamp(-a, a),
        };
        y[i] = sgn(x[i]) * v;
    }
    if peaks.len() == 1 {
        y[peaks[0]] = 0;
    }
    y
}

fn pair() -> impl Strategy<Value = (Vec<i64>, Vec<i64>, bool)> {
    (2usize..=5)
        .prop_flat_map(|n| (small(n), small(n), any::<bool>()))
        .prop_filter("nonzero x", |(x, _, _)| x.iter().any(|&v| v != 0))
}

/// Brute force over all `(A, B, neither)` assignments of the support: is
/// there a pair of disjoint nonempty sets with `|Σ_A| = |Σ_B|`?
fn equal_abs_sums(values: &[i64]) -> bool {
    let k = values.len();
    let total = 3usize.pow(k as u32);
    (0..total).any(|mut code| {
        let (mut sa, mut sb, mut na, mut nb) = (0i64, 0i64, 0, 0);
        for v in values {
            match code % 3 {
                1 => {
                    sa += v;
                    na += 1;
                }
                2 => {
                    sb += v;
                    nb += 1;
                }
                _ => {}
            }
            code /= 3;
        }
        na > 0 && nb > 0 && sa.abs() == sb.abs()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn l1_predicate_matches_derivative((x, y, construct) in pair()) {
        let y = if construct { l1_orthogonal(&x, y) } else { y };
        let exact = rho_ortho_l1(&rv(&x, 1), &rv(&y, 1)).unwrap();
        let xf: Vec<f64> = x.iter().map(|&v| v as f64).collect();
        let yf: Vec<f64> = y.iter().map(|&v| v as f64).collect();
        let numeric = is_rho_orthogonal(&Space::l1(x.len()).unwrap(), &xf, &yf).unwrap();
        prop_assert_eq!(exact, numeric);
        if construct {
            prop_assert!(exact);
        }
    }

    #[test]
    fn linf_predicate_matches_derivative((x, y, construct) in pair()) {
        let y = if construct { linf_orthogonal(&x, y) } else { y };
        let exact = rho_ortho_linf(&rv(&x, 1), &rv(&y, 1)).unwrap();
        let xf: Vec<f64> = x.iter().map(|&v| v as f64).collect();
        let yf: Vec<f64> = y.iter().map(|&v| v as f64).collect();
        let numeric = is_rho_orthogonal(&Space::linf(x.len()).unwrap(), &xf, &yf).unwrap();
        prop_assert_eq!(exact, numeric);
        if construct {
            prop_assert!(exact);
        }
    }

    #[test]
    fn predicates_are_homogeneous((x, y, _c) in pair(), a in 1i64..=7, b in -7i64..=7) {
        prop_assume!(b != 0);
        let sx: Vec<i64> = x.iter().map(|v| a * v).collect();
        let sy: Vec<i64> = y.iter().map(|v| b * v).collect();
        prop_assert_eq!(rho_ortho_l1(&rv(&x, 1), &rv(&y, 1)).unwrap(), rho_ortho_l1(&rv(&sx, 1), &rv(&sy, 1)).unwrap());
        prop_assert_eq!(rho_ortho_linf(&rv(&x, 1), &rv(&y, 1)).unwrap(), rho_ortho_linf(&rv(&sx, 1), &rv(&sy, 1)).unwrap());
    }

    #[test]
    fn right_class_in_l1_matches_subset_enumeration(x in (2usize..=8).prop_flat_map(small)) {
        prop_assume!(x.iter().any(|&v| v != 0));
        let total: i64 = x.iter().map(|v| v.abs()).sum();
        let c = classify_l1(&rv(&x, total)).unwrap();
        let support: Vec<i64> = x.iter().copied().filter(|&v| v != 0).collect();
        let expected = support.len() == 1 || !equal_abs_sums(&support);
        prop_assert_eq!(c.right, expected);
    }
}

#[test]
fn extreme_points_are_symmetric() {
    for n in 2..=5 {
        for i in 0..n {
            for s in [-1, 1] {
                let mut e = vec![0i64; n];
                e[i] = s;
                assert!(classify_l1(&rv(&e, 1)).unwrap().is_symmetric());
            }
        }
        for mask in 0..(1u32 << n) {
            let v: Vec<i64> = (0..n).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect();
            assert!(classify_linf(&rv(&v, 1)).unwrap().is_symmetric());
        }
    }
}

#[test]
fn non_unit_input_is_rejected() {
    let x = RationalVector::new(vec![BigRational::new(BigInt::from(1), BigInt::from(2)); 3]).unwrap();
    assert!(classify_l1(&x).is_err());
    assert!(classify_linf(&x).is_err());
    assert!(classify_l1(&x.normalized_l1().unwrap()).is_ok());
}
