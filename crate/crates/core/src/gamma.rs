//! `Γ(X)`, `E(X)`, the James constant and the modulus of convexity.
//!
//! For each unit `x` the inner supremum of `|ρ'(x, y)|` over `x ⊥_B y` is
//! attained on a boundary ray of the orthogonality cone, because `ρ'(x, ·)` is
//! nonincreasing along the sphere from `x` to `−x`. On polygons the outer
//! supremum is attained at a vertex, which makes `Γ` exact there.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::cones2d::ortho_cone;
use crate::derivatives::{derivative, is_birkhoff};
use crate::error::{Error, Result};
use crate::exec::{map_range, Execution};
use crate::spaces::Space;
use crate::vector::{as2, DualFunctional, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GammaMethod {
    ExactPolyhedral2D,
    ClosedForm2nGon,
    GridEstimate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GammaResult {
    pub value: f64,
    pub witness_x: Vector,
    pub witness_y: Vector,
    pub method: GammaMethod,
    pub lower_bound_only: bool,
}

/// `max(|ρ'(x, w₁)|, |ρ'(x, w₂)|)` with the maximizing ray.
fn cone_gap(space: &Space, x: &[f64]) -> Result<(f64, Vector)> {
    let cone = ortho_cone(space, x)?;
    let a = derivative(space, x, &cone.w1)?.rho.abs();
    let b = derivative(space, x, &cone.w2)?.rho.abs();
    Ok(if b > a { (b, cone.w2) } else { (a, cone.w1) })
}

fn unit_vertices(space: &Space) -> Result<Vec<[f64; 2]>> {
    if let Some(f) = space.facets() {
        return Ok(f.vertices.to_vec());
    }
    if space.is_planar() && space.is_polyhedral() {
        if let Some(p) = space.to_polygon() {
            return Ok(p.vertices().to_vec());
        }
    }
    Err(Error::Unsupported { op: "gamma_polyhedral_2d", family: space.family() })
}

/// Exact `Γ` of a planar polyhedral space: the largest cone-boundary value
/// over the vertices of the unit ball.
pub fn gamma_polyhedral_2d(space: &Space) -> Result<GammaResult> {
    let vertices = unit_vertices(space)?;
    let mut best: Option<(f64, [f64; 2], Vector)> = None;
    for v in vertices {
        let (val, w) = cone_gap(space, &v)?;
        if best.as_ref().is_none_or(|b| val > b.0) {
            best = Some((val, v, w));
        }
    }
    let (value, x, y) = best.expect("a polygon has vertices");
    Ok(GammaResult {
        value,
        witness_x: Vector::from(x),
        witness_y: y,
        method: GammaMethod::ExactPolyhedral2D,
        lower_bound_only: false,
    })
}

/// `Γ` of the regular `2n`-gon:
/// `cos((n−2)π/2n) / (2cos(π/2n))` for odd `n`,
/// `(cos((n−3)π/2n) + cos((n−1)π/2n)) / (4cos(π/2n))` for even `n`.
pub fn gamma_closed_form_2ngon(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidSpace(format!("regular 2n-gon needs n ≥ 2, got {n}")));
    }
    let nf = n as f64;
    let c = (PI / (2.0 * nf)).cos();
    Ok(if n % 2 == 1 {
        ((nf - 2.0) * PI / (2.0 * nf)).cos() / (2.0 * c)
    } else {
        (((nf - 3.0) * PI / (2.0 * nf)).cos() + ((nf - 1.0) * PI / (2.0 * nf)).cos()) / (4.0 * c)
    })
}

/// Grid estimate of `Γ` for any planar space.
pub fn gamma_estimate(space: &Space, coarse: usize, refine_iters: usize) -> Result<GammaResult> {
    gamma_estimate_with(space, coarse, refine_iters, Execution::default())
}

/// Evaluates the cone-boundary gap at `coarse` sphere angles, then bisects
/// every grid interval across which `Ext J(x)` changes, so that non-smooth
/// points (where the gap is nonzero) are located to `refine_iters` halvings.
/// Every reported value is attained by an actual pair, hence a lower bound.
pub fn gamma_estimate_with(
    space: &Space,
    coarse: usize,
    refine_iters: usize,
    exec: Execution,
) -> Result<GammaResult> {
    if !space.is_planar() {
        return Err(Error::NotPlanar);
    }
    if coarse < 2 {
        return Err(Error::Precondition("gamma_estimate needs coarse ≥ 2".into()));
    }
    let step = 2.0 * PI / coarse as f64;
    let keys = map_range(exec, coarse, |i| space.ext_supporting_functionals(&space.sphere_at(i as f64 * step)))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;

    let candidates = map_range(exec, coarse, |i| -> Result<(f64, [f64; 2], Vector)> {
        let theta = i as f64 * step;
        let x = space.sphere_at(theta);
        let (mut best, mut w) = cone_gap(space, &x)?;
        let mut bx = x;
        let mut consider = |phi: f64| -> Result<()> {
            let p = space.sphere_at(phi);
            let (val, wp) = cone_gap(space, &p)?;
            if val > best {
                best = val;
                w = wp;
                bx = p;
            }
            Ok(())
        };
        let key_lo = &keys[i];
        let key_hi = &keys[(i + 1) % coarse];
        if !same_set(key_lo, key_hi) {
            let (mut lo, mut hi) = (theta, theta + step);
            for _ in 0..refine_iters {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                consider(mid)?;
                let key_mid = space.ext_supporting_functionals(&space.sphere_at(mid))?;
                if same_set(&key_mid, key_lo) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            consider(lo)?;
            consider(hi)?;
        }
        Ok((best, bx, w))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let (value, x, y) = candidates
        .into_iter()
        .reduce(|a, b| if b.0 > a.0 { b } else { a })
        .expect("coarse ≥ 2");
    Ok(GammaResult {
        value,
        witness_x: Vector::from(x),
        witness_y: y,
        method: GammaMethod::GridEstimate,
        lower_bound_only: true,
    })
}

fn same_set(a: &[DualFunctional], b: &[DualFunctional]) -> bool {
    a.len() == b.len() && a.iter().all(|f| b.iter().any(|g| f.approx_eq(g, 1e-12)))
}

/// Exact `Γ` when the space is planar polyhedral, a grid estimate otherwise.
pub fn gamma(space: &Space, coarse: usize, refine_iters: usize, exec: Execution) -> Result<GammaResult> {
    if space.is_planar() && space.is_polyhedral() {
        gamma_polyhedral_2d(space)
    } else {
        gamma_estimate_with(space, coarse, refine_iters, exec)
    }
}

/// Whether the witnesses of a result satisfy `x ⊥_B y` and reproduce the value.
pub fn witness_valid(space: &Space, g: &GammaResult) -> Result<bool> {
    let d = derivative(space, &g.witness_x, &g.witness_y)?;
    Ok(is_birkhoff(space, &g.witness_x, &g.witness_y)? && (d.rho.abs() - g.value).abs() <= 1e-9)
}

/// `E(X) = sup_{x ∈ S_X} diam J(x)` in the dual norm.
pub fn e_constant(space: &Space) -> Result<f64> {
    match space {
        Space::Lp { p, n } if *p == 1.0 || p.is_infinite() => Ok(if *n >= 2 { 2.0 } else { 0.0 }),
        Space::Lp { .. } => Ok(0.0),
        Space::Polygon(_) | Space::Regular(_) => {
            let f = space.facets().expect("polygonal family");
            let m = f.functionals.len();
            let mut best: f64 = 0.0;
            for i in 0..m {
                let a = f.functionals[(i + m - 1) % m];
                let b = f.functionals[i];
                best = best.max(space.dual_norm(&[a[0] - b[0], a[1] - b[1]])?);
            }
            Ok(best)
        }
        Space::Mixed { .. } => {
            // the only non-smooth points of a glued norm sit on the axes and,
            // for a max-norm piece, on the diagonals
            let mut best: f64 = 0.0;
            for k in 0..8 {
                let x = space.sphere_at(k as f64 * PI / 4.0);
                let funcs = space.ext_supporting_functionals(&x)?;
                for (i, f) in funcs.iter().enumerate() {
                    for g in &funcs[i + 1..] {
                        best = best.max(space.dual_norm(&[f[0] - g[0], f[1] - g[1]])?);
                    }
                }
            }
            Ok(best)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundKind {
    Lower,
    Upper,
}

/// A numerically estimated constant with the side from which it is bounded
/// and the pair that attains it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub bound: BoundKind,
    pub witness_x: Vector,
    pub witness_y: Vector,
}

/// Bisects for the unit `y` counterclockwise from `x` where the monotone map
/// `φ ↦ h(y(φ))` changes from `< 0` to `≥ 0`; returns the last point below and
/// the first point at or above.
fn sphere_bisect(space: &Space, theta: f64, h: impl Fn([f64; 2]) -> f64) -> ([f64; 2], [f64; 2]) {
    let (mut lo, mut hi) = (theta, theta + PI);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if h(space.sphere_at(mid)) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (space.sphere_at(lo), space.sphere_at(hi))
}

fn norm_pm(space: &Space, x: [f64; 2], y: [f64; 2]) -> (f64, f64) {
    (
        space.eval(&[x[0] - y[0], x[1] - y[1]]),
        space.eval(&[x[0] + y[0], x[1] + y[1]]),
    )
}

/// Golden-section search for a maximum of `f` on `[a, b]`.
fn golden_max(mut a: f64, mut b: f64, iters: usize, f: impl Fn(f64) -> f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..iters {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        c
    } else {
        d
    }
}

/// Grid over `θ ∈ [0, π)`, then golden-section around the best grid point.
fn scan_then_refine(
    coarse: usize,
    refine_iters: usize,
    exec: Execution,
    maximize: bool,
    eval: impl Fn(f64) -> (f64, [f64; 2], [f64; 2]) + Sync + Send,
) -> (f64, [f64; 2], [f64; 2]) {
    let step = PI / coarse as f64;
    let sign = if maximize { 1.0 } else { -1.0 };
    let grid = map_range(exec, coarse, |i| eval(i as f64 * step));
    let (best_i, _) = grid
        .iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |acc, (i, g)| if sign * g.0 > acc.1 { (i, sign * g.0) } else { acc });
    let center = best_i as f64 * step;
    let t = golden_max(center - step, center + step, refine_iters, |th| sign * eval(th).0);
    let refined = eval(t);
    if sign * refined.0 > sign * grid[best_i].0 {
        refined
    } else {
        grid[best_i]
    }
}

/// Lower bound on `J(X) = sup { min(‖x − y‖, ‖x + y‖) : x, y ∈ S_X }`.
///
/// For each `x` the best `y` sits where `‖x − y‖ = ‖x + y‖`, found by
/// bisection along the sphere.
pub fn james_constant_estimate(space: &Space, coarse: usize, refine_iters: usize) -> Result<Estimate> {
    james_constant_estimate_with(space, coarse, refine_iters, Execution::default())
}

pub fn james_constant_estimate_with(
    space: &Space,
    coarse: usize,
    refine_iters: usize,
    exec: Execution,
) -> Result<Estimate> {
    if !space.is_planar() {
        return Err(Error::NotPlanar);
    }
    if coarse < 1 {
        return Err(Error::Precondition("james_constant_estimate needs coarse ≥ 1".into()));
    }
    let eval = |theta: f64| {
        let x = space.sphere_at(theta);
        let (lo, hi) = sphere_bisect(space, theta, |y| {
            let (m, p) = norm_pm(space, x, y);
            m - p
        });
        let score = |y: [f64; 2]| {
            let (m, p) = norm_pm(space, x, y);
            m.min(p)
        };
        let (a, b) = (score(lo), score(hi));
        if a >= b {
            (a, x, lo)
        } else {
            (b, x, hi)
        }
    };
    let (value, x, y) = scan_then_refine(coarse, refine_iters, exec, true, eval);
    Ok(Estimate { value, bound: BoundKind::Lower, witness_x: x.into(), witness_y: y.into() })
}

/// Upper bound on `δ_X(ε) = inf { 1 − ‖x + y‖/2 : x, y ∈ S_X, ‖x − y‖ ≥ ε }`.
///
/// For each `x` the infimum is attained at `‖x − y‖ = ε` since `‖x + y‖`
/// decreases as `y` moves away from `x`; the bisection keeps the feasible side.
pub fn modulus_of_convexity_estimate(space: &Space, eps: f64, coarse: usize) -> Result<Estimate> {
    modulus_of_convexity_estimate_with(space, eps, coarse, Execution::default())
}

pub fn modulus_of_convexity_estimate_with(
    space: &Space,
    eps: f64,
    coarse: usize,
    exec: Execution,
) -> Result<Estimate> {
    if !space.is_planar() {
        return Err(Error::NotPlanar);
    }
    if !(0.0..=2.0).contains(&eps) {
        return Err(Error::Precondition(format!("epsilon = {eps} must lie in [0, 2]")));
    }
    if coarse < 1 {
        return Err(Error::Precondition("modulus_of_convexity_estimate needs coarse ≥ 1".into()));
    }
    let eval = |theta: f64| {
        let x = space.sphere_at(theta);
        let (_, y) = sphere_bisect(space, theta, |y| norm_pm(space, x, y).0 - eps);
        let (_, p) = norm_pm(space, x, y);
        (1.0 - p / 2.0, x, y)
    };
    let (value, x, y) = scan_then_refine(coarse, 60, exec, false, eval);
    Ok(Estimate { value, bound: BoundKind::Upper, witness_x: x.into(), witness_y: y.into() })
}

/// `Γ`, the James estimate and whether they contradict "Γ < ½ ⇒ uniformly
/// non-square" (a violation needs `Γ < ½ − 1e-6` together with `J > 2 − 1e-6`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnsReport {
    pub gamma: GammaResult,
    pub james: Estimate,
    pub gamma_below_half: bool,
    pub uniformly_non_square: bool,
    pub violation: bool,
}

pub fn check_uns_relation(space: &Space) -> Result<UnsReport> {
    let g = gamma(space, 720, 60, Execution::default())?;
    let james = james_constant_estimate(space, 720, 60)?;
    let gamma_below_half = g.value < 0.5 - 1e-6;
    let uniformly_non_square = james.value <= 2.0 - 1e-6;
    Ok(UnsReport {
        violation: gamma_below_half && !uniformly_non_square,
        gamma: g,
        james,
        gamma_below_half,
        uniformly_non_square,
    })
}

/// The witness `x` as a planar array.
pub fn witness_xy(g: &GammaResult) -> ([f64; 2], [f64; 2]) {
    (as2(&g.witness_x), as2(&g.witness_y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::Piece;
    use approx::assert_abs_diff_eq;

    #[test]
    fn octagon_value() {
        let g = gamma_polyhedral_2d(&Space::regular(4).unwrap()).unwrap();
        assert_abs_diff_eq!(g.value, 1.0 / (2.0 * 2f64.sqrt()), epsilon = 1e-12);
        assert_eq!(g.method, GammaMethod::ExactPolyhedral2D);
        assert!(!g.lower_bound_only);
    }

    #[test]
    fn closed_forms() {
        assert_abs_diff_eq!(gamma_closed_form_2ngon(4).unwrap(), 1.0 / (2.0 * 2f64.sqrt()), epsilon = 1e-15);
        assert_abs_diff_eq!(gamma_closed_form_2ngon(3).unwrap(), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(gamma_closed_form_2ngon(2).unwrap(), 0.5, epsilon = 1e-15);
        assert!(gamma_closed_form_2ngon(1).is_err());
    }

    #[test]
    fn diamond_and_hexagons() {
        let d = gamma_polyhedral_2d(&Space::regular(2).unwrap()).unwrap();
        assert_abs_diff_eq!(d.value, 0.5, epsilon = 1e-12);
        let mix = Space::l1_linf();
        let g = gamma_polyhedral_2d(&mix).unwrap();
        assert_abs_diff_eq!(g.value, 0.5, epsilon = 1e-12);
        assert!(witness_valid(&mix, &g).unwrap());
        let x = witness_xy(&g).0;
        assert!(x == [1.0, 0.0] || x == [0.0, 1.0] || x == [-1.0, 0.0] || x == [0.0, -1.0], "{x:?}");
    }

    #[test]
    fn unsupported_for_smooth() {
        assert!(matches!(
            gamma_polyhedral_2d(&Space::lp(2.0, 2).unwrap()),
            Err(Error::Unsupported { .. })
        ));
    }

    #[test]
    fn estimates_hit_known_values() {
        let five = gamma_estimate(&Space::regular(5).unwrap(), 720, 60).unwrap();
        assert_abs_diff_eq!(five.value, gamma_closed_form_2ngon(5).unwrap(), epsilon = 1e-6);
        assert!(five.lower_bound_only);
        let mix = Space::mixed(Piece::Lp(2.0), Piece::L1).unwrap();
        let g = gamma_estimate(&mix, 720, 60).unwrap();
        assert_abs_diff_eq!(g.value, 0.5, epsilon = 1e-6);
        assert!(witness_valid(&mix, &g).unwrap());
        let smooth = gamma_estimate(&Space::lp(3.0, 2).unwrap(), 720, 60).unwrap();
        assert!(smooth.value <= 1e-3);
    }

    #[test]
    fn e_constant_values() {
        assert_eq!(e_constant(&Space::lp(2.0, 2).unwrap()).unwrap(), 0.0);
        assert_eq!(e_constant(&Space::linf(2).unwrap()).unwrap(), 2.0);
        assert_eq!(e_constant(&Space::l1(3).unwrap()).unwrap(), 2.0);
        let oct = e_constant(&Space::regular(4).unwrap()).unwrap();
        assert!(oct > 0.0 && oct < 2.0);
        // the polygon route and the glued route agree on the hexagon
        let mix = Space::l1_linf();
        let poly = Space::Polygon(mix.to_polygon().unwrap());
        assert_abs_diff_eq!(e_constant(&mix).unwrap(), e_constant(&poly).unwrap(), epsilon = 1e-12);
    }

    #[test]
    fn james_values() {
        let j = james_constant_estimate(&Space::linf(2).unwrap(), 720, 60).unwrap();
        assert!(j.value >= 2.0 - 1e-6 && j.value <= 2.0 + 1e-12);
        let e = james_constant_estimate(&Space::lp(2.0, 2).unwrap(), 720, 60).unwrap();
        assert_abs_diff_eq!(e.value, 2f64.sqrt(), epsilon = 1e-6);
        let h = james_constant_estimate(&Space::l1_linf(), 720, 60).unwrap();
        assert!(h.value <= 1.95);
        assert_eq!(h.bound, BoundKind::Lower);
    }

    #[test]
    fn modulus_values() {
        let m = modulus_of_convexity_estimate(&Space::linf(2).unwrap(), 1.0, 720).unwrap();
        assert_abs_diff_eq!(m.value, 0.0, epsilon = 1e-9);
        let e = modulus_of_convexity_estimate(&Space::lp(2.0, 2).unwrap(), 1.0, 720).unwrap();
        assert_abs_diff_eq!(e.value, 1.0 - 0.75f64.sqrt(), epsilon = 1e-6);
        let r = modulus_of_convexity_estimate(&Space::regular(6).unwrap(), 0.5, 720).unwrap();
        assert_abs_diff_eq!(r.value, 0.0, epsilon = 1e-9);
        assert_eq!(r.bound, BoundKind::Upper);
        assert!(modulus_of_convexity_estimate(&Space::linf(2).unwrap(), 2.5, 10).is_err());
    }

    #[test]
    fn uns_relation_examples() {
        let oct = check_uns_relation(&Space::regular(4).unwrap()).unwrap();
        assert!(oct.gamma_below_half && oct.uniformly_non_square && !oct.violation);
        let sq = check_uns_relation(&Space::linf(2).unwrap()).unwrap();
        assert!(!sq.gamma_below_half && !sq.uniformly_non_square && !sq.violation);
        let hex = check_uns_relation(&Space::l1_linf()).unwrap();
        assert!(!hex.gamma_below_half && hex.uniformly_non_square && !hex.violation);
    }
}
