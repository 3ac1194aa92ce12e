//! Birkhoff-James orthogonality cones in the plane.
//!
//! In a 2D space the set `{y : x ⊥_B y}` is `K ∪ (−K)` for a cone `K` with
//! boundary rays `w₁, w₂`, taken on the counterclockwise side of `x`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::derivatives::derivative;
use crate::error::{Error, Result};
use crate::spaces::{regular_edge_functional, regular_vertex, Space};
use crate::tol;
use crate::vector::{as2, cross, Vector};

/// `x ≺ y` iff `x₁y₂ − x₂y₁ > 0`.
pub fn precedes(x: &[f64], y: &[f64]) -> Result<bool> {
    if x.len() != 2 || y.len() != 2 {
        return Err(Error::NotPlanar);
    }
    Ok(cross(as2(x), as2(y)) > 0.0)
}

/// Boundary rays of the orthogonality cone of `base`, unit in the space norm.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrthoCone {
    pub base: Vector,
    pub w1: Vector,
    pub w2: Vector,
}

impl OrthoCone {
    /// The cone collapses to a line (smooth point).
    pub fn is_degenerate(&self) -> bool {
        self.w1
            .iter()
            .zip(self.w2.iter())
            .all(|(a, b)| (a - b).abs() <= 1e-12)
    }
}

/// Cone from the kernels of the extreme supporting functionals at `x`.
///
/// The kernel `(−b, a)` of `f = (a, b)` satisfies `x ≺ (−b, a)` because
/// `f(x) = ‖x‖ > 0`, so it already lies in the forward half-plane.
pub fn ortho_cone(space: &Space, x: &[f64]) -> Result<OrthoCone> {
    if !space.is_planar() {
        return Err(Error::NotPlanar);
    }
    let funcs = space.ext_supporting_functionals(x)?;
    let xv = as2(x);
    let mut kernels: Vec<([f64; 2], f64)> = funcs
        .iter()
        .map(|f| {
            let k = [-f[1], f[0]];
            let r = space.eval(&k);
            let k = [k[0] / r, k[1] / r];
            let turn = cross(xv, k).atan2(xv[0] * k[0] + xv[1] * k[1]);
            (k, turn)
        })
        .collect();
    kernels.sort_by(|a, b| a.1.total_cmp(&b.1));
    Ok(OrthoCone {
        base: Vector::from(xv),
        w1: Vector::from(kernels[0].0),
        w2: Vector::from(kernels[kernels.len() - 1].0),
    })
}

/// Cone by angular bisection on the monotone maps `φ ↦ ρ'₋(x, y(φ))` and
/// `φ ↦ ρ'₊(x, y(φ))` over the half-turn from `x` to `−x`. Independent of the
/// kernel construction; used to cross-check it.
pub fn ortho_cone_bisect(space: &Space, x: &[f64]) -> Result<OrthoCone> {
    if !space.is_planar() {
        return Err(Error::NotPlanar);
    }
    space.check_nonzero(x)?;
    let phi = x[1].atan2(x[0]);
    let range = |phi: f64| -> Result<(f64, f64)> {
        let y = space.sphere_at(phi);
        let d = derivative(space, x, &y)?;
        Ok((d.rho_minus, d.rho_plus))
    };
    // w₁: last angle with ρ'₋ > 0 / first with ρ'₋ ≤ 0
    let (mut lo, mut hi) = (phi, phi + PI);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if range(mid)?.0 > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let w1 = space.sphere_at(hi);
    // w₂: last angle with ρ'₊ ≥ 0
    let (mut lo, mut hi) = (phi, phi + PI);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if range(mid)?.1 >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let w2 = space.sphere_at(lo);
    Ok(OrthoCone { base: Vector::from(as2(x)), w1: Vector::from(w1), w2: Vector::from(w2) })
}

/// Closed-form cone at the vertex `v_m` of the regular `2n`-gon (1-based
/// indices modulo `2n`):
///
/// - `n` odd: `w₁ = v_{(n+2m−1)/2}`, `w₂ = v_{(n+2m+1)/2}`;
/// - `n` even: `w₁ = ½(v_{(n+2m−2)/2} + v_{(n+2m)/2})`,
///   `w₂ = ½(v_{(n+2m)/2} + v_{(n+2m+2)/2})`.
///
/// Each ray is checked against the kernel of the adjacent edge functional
/// (`f_{m−1}(w₁) = 0`, `f_m(w₂) = 0`) before it is returned.
pub fn regular_polygon_cone(n: usize, m: usize) -> Result<OrthoCone> {
    if n < 2 {
        return Err(Error::InvalidSpace(format!("regular 2n-gon needs n ≥ 2, got {n}")));
    }
    if m < 1 || m > 2 * n {
        return Err(Error::Precondition(format!("vertex index m = {m} outside 1..={}", 2 * n)));
    }
    let v = |j: usize| regular_vertex(n, j);
    let mid = |a: [f64; 2], b: [f64; 2]| [0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])];
    let (w1, w2) = if n % 2 == 1 {
        (v((n + 2 * m - 1) / 2), v((n + 2 * m + 1) / 2))
    } else {
        (
            mid(v((n + 2 * m - 2) / 2), v((n + 2 * m) / 2)),
            mid(v((n + 2 * m) / 2), v((n + 2 * m + 2) / 2)),
        )
    };
    let f_prev = regular_edge_functional(n, m + 2 * n - 1);
    let f_next = regular_edge_functional(n, m);
    let r1 = f_prev[0] * w1[0] + f_prev[1] * w1[1];
    let r2 = f_next[0] * w2[0] + f_next[1] * w2[1];
    if r1.abs() > tol::DUAL_EXACT || r2.abs() > tol::DUAL_EXACT {
        return Err(Error::Precondition(format!(
            "closed-form cone fails the kernel check (residuals {r1:e}, {r2:e})"
        )));
    }
    Ok(OrthoCone { base: Vector::from(v(m)), w1: Vector::from(w1), w2: Vector::from(w2) })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonotoneReport {
    pub samples: usize,
    /// `max_{i<j} (ρ'(x, w_j) − ρ'(x, w_i))⁺`.
    pub max_violation: f64,
    pub passed: bool,
}

/// Samples unit `w` strictly between `x` and `−x` (counterclockwise) and
/// checks that `ρ'(x, w)` never increases along the way.
pub fn verify_monotone(space: &Space, x: &[f64], samples: usize) -> Result<MonotoneReport> {
    if !space.is_planar() {
        return Err(Error::NotPlanar);
    }
    space.check_nonzero(x)?;
    if samples < 2 {
        return Err(Error::Precondition("verify_monotone needs at least 2 samples".into()));
    }
    let phi = x[1].atan2(x[0]);
    let mut running_min = f64::INFINITY;
    let mut worst: f64 = 0.0;
    for k in 1..=samples {
        let w = space.sphere_at(phi + PI * k as f64 / (samples + 1) as f64);
        let r = derivative(space, x, &w)?.rho;
        worst = worst.max(r - running_min);
        running_min = running_min.min(r);
    }
    Ok(MonotoneReport { samples, max_violation: worst, passed: worst <= tol::MONOTONE })
}
