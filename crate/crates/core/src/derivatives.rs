//! One-sided norm derivatives and the orthogonalities built on them.
//!
//! `ρ'₊(x, y) = ‖x‖ lim_{t→0⁺} (‖x + ty‖ − ‖x‖)/t`, `ρ'₋` the same limit from
//! the left, `ρ' = (ρ'₊ + ρ'₋)/2`. The exact path evaluates
//! `‖x‖·max/min { f(y) : f ∈ Ext J(x) }`; the numeric path brackets both limits
//! with monotone difference quotients.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spaces::Space;
use crate::tol;
use crate::vector::{axpy, euclid, Vector};

/// First step of the difference-quotient ladder.
pub const LADDER_T0: f64 = 1e-2;
/// Ratio between consecutive ladder steps.
pub const LADDER_RATIO: f64 = 0.25;
/// Number of ladder steps.
pub const LADDER_RUNGS: usize = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    Exact,
    Numeric,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DerivativeTriple {
    pub rho_plus: f64,
    pub rho_minus: f64,
    pub rho: f64,
    pub method: Method,
    /// Zero on the exact path. On the numeric path: the larger change of the
    /// one-sided quotient over the last ladder step.
    pub bracket_width: f64,
}

impl DerivativeTriple {
    fn new(rho_plus: f64, rho_minus: f64, method: Method, bracket_width: f64) -> Self {
        Self { rho_plus, rho_minus, rho: (rho_plus + rho_minus) / 2.0, method, bracket_width }
    }

    fn zero(method: Method) -> Self {
        Self::new(0.0, 0.0, method, 0.0)
    }
}

/// `t_k = t₀ rᵏ`, `k = 0..K`.
pub fn ladder() -> [f64; LADDER_RUNGS] {
    let mut t = [0.0; LADDER_RUNGS];
    let mut cur = LADDER_T0;
    for slot in &mut t {
        *slot = cur;
        cur *= LADDER_RATIO;
    }
    t
}

/// One rung of the ladder: `q(−t) ≤ ρ'₋ ≤ ρ'₊ ≤ q(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rung {
    pub t: f64,
    pub q_minus: f64,
    pub q_plus: f64,
}

/// `q(t) = ‖x‖(‖x + ty‖ − ‖x‖)/t` for `t ≠ 0`.
pub fn quotient(space: &Space, x: &[f64], y: &[f64], t: f64) -> Result<f64> {
    space.check_nonzero(x)?;
    space.check_dim(y)?;
    if t == 0.0 {
        return Err(Error::Precondition("quotient step must be nonzero".into()));
    }
    Ok(quotient_unchecked(space, x, y, t))
}

fn quotient_unchecked(space: &Space, x: &[f64], y: &[f64], t: f64) -> f64 {
    let h: Vec<f64> = y.iter().map(|c| t * c).collect();
    space.eval(x) * space.increment(x, &h) / t
}

/// Both one-sided quotients on every rung of the ladder.
pub fn quotient_ladder(space: &Space, x: &[f64], y: &[f64]) -> Result<Vec<Rung>> {
    space.check_nonzero(x)?;
    space.check_dim(y)?;
    Ok(ladder()
        .iter()
        .map(|&t| Rung {
            t,
            q_minus: quotient_unchecked(space, x, y, -t),
            q_plus: quotient_unchecked(space, x, y, t),
        })
        .collect())
}

/// Exact derivatives from the extreme supporting functionals at `x`.
pub fn derivative_exact(space: &Space, x: &[f64], y: &[f64]) -> Result<DerivativeTriple> {
    let (lo, hi) = space.functional_range(x, y)?;
    let nx = space.eval(x);
    Ok(DerivativeTriple::new(nx * hi, nx * lo, Method::Exact, 0.0))
}

/// Numeric derivatives from the final ladder rung; fails when the quotients
/// have not settled to `1e-6·‖x‖‖y‖`.
pub fn derivative_numeric(space: &Space, x: &[f64], y: &[f64]) -> Result<DerivativeTriple> {
    let rungs = quotient_ladder(space, x, y)?;
    let ny = space.eval(y);
    if ny == 0.0 {
        return Ok(DerivativeTriple::zero(Method::Numeric));
    }
    let last = rungs[LADDER_RUNGS - 1];
    let prev = rungs[LADDER_RUNGS - 2];
    let width = (prev.q_plus - last.q_plus).abs().max((prev.q_minus - last.q_minus).abs());
    let limit = tol::NUMERIC_CERTIFICATION * space.eval(x) * ny;
    if !(width <= limit) {
        return Err(Error::NotConverged { width, limit });
    }
    Ok(DerivativeTriple::new(last.q_plus, last.q_minus, Method::Numeric, width))
}

/// Exact whenever the family supplies `Ext J(x)`, which every built-in family
/// does; [`derivative_numeric`] stays available for cross-checks.
pub fn derivative(space: &Space, x: &[f64], y: &[f64]) -> Result<DerivativeTriple> {
    derivative_exact(space, x, y)
}

fn eps_orth(space: &Space, x: &[f64], y: &[f64], d: &DerivativeTriple) -> f64 {
    tol::ORTHOGONALITY * space.eval(x) * space.eval(y) + d.bracket_width
}

/// Birkhoff-James test `ρ'₋(x, y) ≤ 0 ≤ ρ'₊(x, y)` on a computed triple.
pub fn birkhoff_from(space: &Space, x: &[f64], y: &[f64], d: &DerivativeTriple) -> bool {
    let eps = eps_orth(space, x, y, d);
    d.rho_minus <= eps && d.rho_plus >= -eps
}

/// ρ-orthogonality test `ρ'(x, y) = 0` on a computed triple.
pub fn rho_orthogonal_from(space: &Space, x: &[f64], y: &[f64], d: &DerivativeTriple) -> bool {
    d.rho.abs() <= eps_orth(space, x, y, d)
}

/// `x ⊥_B y`.
pub fn is_birkhoff(space: &Space, x: &[f64], y: &[f64]) -> Result<bool> {
    let d = derivative(space, x, y)?;
    Ok(birkhoff_from(space, x, y, &d))
}

/// `x ⊥_ρ y`.
pub fn is_rho_orthogonal(space: &Space, x: &[f64], y: &[f64]) -> Result<bool> {
    let d = derivative(space, x, y)?;
    Ok(rho_orthogonal_from(space, x, y, &d))
}

/// Membership of `y` in the cones `x^{ρ+}` (`ρ'(x, y) ≥ 0`) and `x^{ρ−}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConeMembership {
    PlusOnly,
    MinusOnly,
    Both,
}

pub fn rho_cone_membership(space: &Space, x: &[f64], y: &[f64]) -> Result<ConeMembership> {
    let d = derivative(space, x, y)?;
    let eps = eps_orth(space, x, y, &d);
    Ok(if d.rho.abs() <= eps {
        ConeMembership::Both
    } else if d.rho > 0.0 {
        ConeMembership::PlusOnly
    } else {
        ConeMembership::MinusOnly
    })
}

/// `α = −ρ'(x, y)/‖x‖²`, so that `x ⊥_ρ αx + y`. The postcondition is checked
/// before returning.
pub fn alpha_right(space: &Space, x: &[f64], y: &[f64]) -> Result<f64> {
    let d = derivative(space, x, y)?;
    let nx = space.eval(x);
    let alpha = -d.rho / (nx * nx);
    let target = axpy(alpha, x, y);
    if !is_rho_orthogonal(space, x, &target)? {
        return Err(Error::Precondition(format!(
            "alpha_right postcondition failed for alpha = {alpha}"
        )));
    }
    Ok(alpha)
}

/// Scan window for [`alpha_left`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlphaSearch {
    pub range: f64,
    pub steps: usize,
}

impl Default for AlphaSearch {
    fn default() -> Self {
        Self { range: 1e3, steps: 10_000 }
    }
}

/// Finds `α` with `αx + y ⊥_ρ x`, the root of `g(α) = ρ'(αx + y, x)` nearest
/// zero, or `None` when the scan finds no sign change that bisects down to a
/// genuine root. `g` may jump at non-smooth points; a bisection that closes on
/// a jump is discarded.
pub fn alpha_left(space: &Space, x: &[f64], y: &[f64], search: AlphaSearch) -> Result<Option<f64>> {
    space.check_nonzero(x)?;
    space.check_dim(y)?;
    if search.steps < 2 || !(search.range > 0.0) {
        return Err(Error::Precondition("alpha_left needs range > 0 and at least 2 steps".into()));
    }
    if !linearly_independent(x, y) {
        return Err(Error::Precondition("x and y must be linearly independent".into()));
    }
    let nx = space.eval(x);
    // g(α) and its acceptance threshold; None when αx + y vanishes
    let g = |alpha: f64| -> Result<Option<(f64, f64)>> {
        let z = axpy(alpha, x, y);
        let nz = space.eval(&z);
        if nz == 0.0 {
            return Ok(None);
        }
        let d = derivative(space, &z, x)?;
        Ok(Some((d.rho, tol::ALPHA_ROOT * nz * nx)))
    };

    let step = 2.0 * search.range / (search.steps - 1) as f64;
    let alphas: Vec<f64> = (0..search.steps).map(|k| -search.range + k as f64 * step).collect();
    let values = alphas.iter().map(|&a| g(a)).collect::<Result<Vec<_>>>()?;

    let mut roots = Vec::new();
    for (k, v) in values.iter().enumerate() {
        if let Some((val, eps)) = v {
            if val.abs() <= *eps {
                roots.push(alphas[k]);
            }
        }
    }
    for k in 0..search.steps - 1 {
        let (Some((ga, ea)), Some((gb, eb))) = (values[k], values[k + 1]) else { continue };
        if ga.abs() <= ea || gb.abs() <= eb || ga.signum() == gb.signum() {
            continue;
        }
        let (mut lo, mut hi) = (alphas[k], alphas[k + 1]);
        let lo_sign = ga.signum();
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            match g(mid)? {
                Some((gm, em)) if gm.abs() <= em => {
                    roots.push(mid);
                    break;
                }
                Some((gm, _)) if gm.signum() == lo_sign => lo = mid,
                Some(_) => hi = mid,
                None => break,
            }
        }
    }
    Ok(roots.into_iter().min_by(|a, b| a.abs().total_cmp(&b.abs())))
}

fn linearly_independent(x: &[f64], y: &[f64]) -> bool {
    let scale = euclid(x) * euclid(y);
    let mut best: f64 = 0.0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            best = best.max((x[i] * y[j] - x[j] * y[i]).abs());
        }
    }
    best > 1e-12 * scale
}

/// `J(x)` is a singleton.
pub fn is_smooth_point(space: &Space, x: &[f64]) -> Result<bool> {
    Ok(space.ext_supporting_functionals(x)?.len() == 1)
}

/// `x + αy` as a [`Vector`]; convenience for callers building test pairs.
pub fn combine(alpha: f64, x: &[f64], y: &[f64]) -> Vector {
    axpy(alpha, x, y)
}
