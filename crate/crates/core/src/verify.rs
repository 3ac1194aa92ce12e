//! The acceptance suite: every reference value and invariant the library
//! reproduces, as a list of pass/fail criteria. Shared by the `verify` CLI
//! command and the acceptance test target.
//!
//! Reports are deterministic for a given configuration; wall time is kept in
//! a separate field so it never leaks into the pass/fail detail strings.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::cones2d::verify_monotone;
use crate::derivatives::{
    alpha_left, alpha_right, derivative, derivative_exact, derivative_numeric, is_birkhoff, quotient_ladder,
    AlphaSearch,
};
use crate::error::Result;
use crate::exec::{map_range, Execution};
use crate::gamma::{e_constant, gamma, gamma_closed_form_2ngon, gamma_estimate_with, gamma_polyhedral_2d};
use crate::spaces::{regular_vertex, Piece, Polygon, Space};
use crate::symmetry::{
    classify_l1, classify_linf, oracle_left_symmetric, oracle_right_symmetric, trial_rng, OracleConfig,
    RationalVector, SymmetryClass,
};
use crate::tol;

/// Criterion tolerances.
pub mod tolerance {
    /// Published and closed-form values of `Γ`.
    pub const GAMMA_VALUE: f64 = 1e-9;
    /// Numeric versus exact derivatives.
    pub const NUMERIC_VS_EXACT: f64 = 1e-6;
    /// Mixed-norm derivative on the numeric path.
    pub const MIXED_NUMERIC: f64 = 1e-9;
    /// `|ρ'(y, x)|` for constructed Euclidean pairs.
    pub const INNER_PRODUCT: f64 = 1e-8;
    /// Smooth-space `Γ` estimate.
    pub const SMOOTH_GAMMA: f64 = 1e-3;
    /// Bound `Γ ≤ min(E, ½)`.
    pub const BOUND: f64 = 1e-9;
    /// Rounding slack of the quotient bracket, in units of `ε·‖x‖‖y‖`.
    pub const BRACKET_ULPS: f64 = 64.0;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Oracle trials per point; sample counts scale with it (pairs per family
    /// `= 2·trials`, classifier points per space `= 2·trials/5`).
    pub trials: usize,
    #[serde(skip)]
    pub exec: Execution,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { seed: 42, trials: 500, exec: Execution::default() }
    }
}

impl VerifyConfig {
    fn pairs(&self) -> usize {
        2 * self.trials
    }

    fn class_points(&self) -> usize {
        (2 * self.trials / 5).max(1)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

pub const CRITERIA: [(u8, &str); 12] = [
    (1, "octagon constant"),
    (2, "closed-form sweep n = 2..12"),
    (3, "sup-norm and mixed-norm derivative values"),
    (4, "mixed-norm gamma"),
    (5, "bound 0 <= gamma <= min(E, 1/2)"),
    (6, "numeric vs exact derivatives"),
    (7, "classification table"),
    (8, "classifier-oracle agreement"),
    (9, "inner-product symmetry"),
    (10, "alpha existence"),
    (11, "monotonicity"),
    (12, "smooth-space gamma"),
];

/// Runs every criterion in order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionResult> {
    CRITERIA.iter().map(|(id, _)| run_criterion(*id, cfg).expect("listed id")).collect()
}

/// Runs one criterion; `None` for an unknown id.
pub fn run_criterion(id: u8, cfg: &VerifyConfig) -> Option<CriterionResult> {
    let name = CRITERIA.iter().find(|(i, _)| *i == id)?.1;
    let start = Instant::now();
    let outcome = match id {
        1 => octagon(),
        2 => sweep(),
        3 => derivative_values(),
        4 => mixed_gamma(),
        5 => bound_invariant(cfg),
        6 => numeric_vs_exact(cfg),
        7 => classification_table(),
        8 => classifier_agreement(cfg),
        9 => inner_product(cfg),
        10 => alpha_existence(cfg),
        11 => monotonicity(cfg),
        12 => smooth_gamma(cfg),
        _ => unreachable!(),
    };
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    let limit = match id {
        1 => Some(Duration::from_millis(100)),
        2 => Some(Duration::from_secs(1)),
        8 => Some(Duration::from_secs(30)),
        _ => None,
    };
    if let Some(limit) = limit {
        if elapsed > limit {
            passed = false;
            detail.push_str(&format!("; exceeded time limit {limit:?}"));
        }
    }
    Some(CriterionResult { id, name: name.to_string(), passed, detail, elapsed })
}

type Outcome = Result<(bool, String)>;

fn octagon() -> Outcome {
    let g = gamma_polyhedral_2d(&Space::regular(4)?)?;
    let expect = 1.0 / (2.0 * 2f64.sqrt());
    let err = (g.value - expect).abs();
    Ok((err <= tolerance::GAMMA_VALUE, format!("gamma = {:.12}, |error| = {err:.1e}", g.value)))
}

fn sweep() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 2..=12 {
        let g = gamma_polyhedral_2d(&Space::regular(n)?)?;
        worst = worst.max((g.value - gamma_closed_form_2ngon(n)?).abs());
    }
    Ok((worst <= tolerance::GAMMA_VALUE, format!("max |exact - closed form| = {worst:.1e}")))
}

fn derivative_values() -> Outcome {
    let mut ok = true;
    for n in 2..=6 {
        let s = Space::linf(n)?;
        let mut en = vec![0.0; n];
        en[n - 1] = 1.0;
        let d = derivative_exact(&s, &vec![1.0; n], &en)?;
        ok &= d.rho == 0.5;
    }
    let mut worst: f64 = 0.0;
    for p in [2.0, 3.0, 4.0, 8.0] {
        let s = Space::mixed(Piece::Lp(p), Piece::L1)?;
        let d = derivative_numeric(&s, &[1.0, 0.0], &[0.0, 1.0])?;
        worst = worst.max((d.rho + 0.5).abs());
    }
    ok &= worst <= tolerance::MIXED_NUMERIC;
    Ok((ok, format!("sup-norm rho exact for n = 2..6: {ok}; mixed numeric max |rho + 1/2| = {worst:.1e}")))
}

fn mixed_gamma() -> Outcome {
    let s = Space::l1_linf();
    let g = gamma_polyhedral_2d(&s)?;
    let bj = is_birkhoff(&s, &g.witness_x, &g.witness_y)?;
    let err = (g.value - 0.5).abs();
    Ok((
        err <= tolerance::GAMMA_VALUE && bj,
        format!(
            "gamma = {:.12}, witness ({:?}, {:?}), BJ = {bj}",
            g.value,
            g.witness_x.as_slice(),
            g.witness_y.as_slice()
        ),
    ))
}

/// Every planar built-in family used by the suite.
pub fn builtin_planar_spaces() -> Vec<Space> {
    let mut v = vec![
        Space::l1(2).unwrap(),
        Space::linf(2).unwrap(),
        Space::lp(1.5, 2).unwrap(),
        Space::lp(2.0, 2).unwrap(),
        Space::lp(3.0, 2).unwrap(),
        Space::l1_linf(),
        Space::mixed(Piece::LInf, Piece::L1).unwrap(),
        Space::mixed(Piece::Lp(2.0), Piece::L1).unwrap(),
        Space::mixed(Piece::L1, Piece::Lp(2.0)).unwrap(),
        Space::mixed(Piece::Lp(3.0), Piece::LInf).unwrap(),
    ];
    v.extend((2..=12).map(|n| Space::regular(n).unwrap()));
    v
}

fn bound_invariant(cfg: &VerifyConfig) -> Outcome {
    let mut spaces = builtin_planar_spaces();
    let mut rng = trial_rng(cfg.seed, 5);
    spaces.extend((0..5).map(|_| Space::Polygon(random_polygon(&mut rng))));
    let mut failures = Vec::new();
    for s in &spaces {
        let g = gamma(s, 360, 40, cfg.exec)?;
        let e = e_constant(s)?;
        if !(g.value >= 0.0 && g.value <= e.min(0.5) + tolerance::BOUND) {
            failures.push(format!("{s}: gamma {} E {e}", g.value));
        }
    }
    Ok((
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} spaces checked", spaces.len())
        } else {
            failures.join("; ")
        },
    ))
}

fn gaussian(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        if v.iter().any(|c: &f64| c.abs() > 1e-3) {
            return v;
        }
    }
}

/// A random point of `space`, biased half of the time onto a non-smooth
/// point (zero coordinates, max-norm ties, polygon vertices), scaled by a
/// random factor.
fn adversarial_point(space: &Space, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let n = space.dim();
    let mut x = gaussian(rng, n);
    if rng.random::<bool>() {
        match space {
            Space::Lp { p, .. } if *p == 1.0 => {
                let keep = rng.random_range(0..n);
                for (i, c) in x.iter_mut().enumerate() {
                    if i != keep && rng.random::<f64>() < 0.5 {
                        *c = 0.0;
                    }
                }
            }
            Space::Lp { p, .. } if p.is_infinite() => {
                let m = x.iter().fold(0.0f64, |a, c| a.max(c.abs()));
                for c in x.iter_mut() {
                    if rng.random::<f64>() < 0.5 {
                        *c = m * c.signum();
                    }
                }
            }
            Space::Regular(r) => {
                let v = regular_vertex(r.n(), rng.random_range(1..=2 * r.n()));
                x = v.to_vec();
            }
            Space::Polygon(p) => {
                x = p.vertices()[rng.random_range(0..p.vertices().len())].to_vec();
            }
            Space::Mixed { .. } => {
                let k = rng.random_range(0..8);
                x = space.sphere_at(k as f64 * PI / 4.0).to_vec();
            }
            _ => {}
        }
    }
    let scale = rng.random_range(0.5..2.0);
    x.iter().map(|c| c * scale).collect()
}

fn numeric_vs_exact(cfg: &VerifyConfig) -> Outcome {
    // (family label, space for a draw)
    type Family = (&'static str, fn(&mut ChaCha8Rng) -> Space);
    let families: [Family; 4] = [
        ("l1^n", |r| Space::l1(r.random_range(2..=5)).unwrap()),
        ("linf^n", |r| Space::linf(r.random_range(2..=5)).unwrap()),
        ("regular 2n-gon", |r| Space::regular(r.random_range(2..=12)).unwrap()),
        ("lp^n", |r| {
            let p = [1.5, 2.0, 3.0, 4.0][r.random_range(0..4)];
            Space::lp(p, r.random_range(2..=4)).unwrap()
        }),
    ];
    let mut worst: f64 = 0.0;
    let mut bracket_violations = 0usize;
    let mut failures = Vec::new();
    for (fi, (label, make)) in families.iter().enumerate() {
        let rows = map_range(cfg.exec, cfg.pairs(), |i| -> Result<(f64, usize)> {
            let mut rng = trial_rng(cfg.seed ^ (0x600 + fi as u64), i);
            let s = make(&mut rng);
            let x = adversarial_point(&s, &mut rng);
            let y = gaussian(&mut rng, s.dim());
            let exact = derivative_exact(&s, &x, &y)?;
            let num = derivative_numeric(&s, &x, &y)?;
            let err = (num.rho_plus - exact.rho_plus).abs().max((num.rho_minus - exact.rho_minus).abs());
            let slack = tolerance::BRACKET_ULPS * f64::EPSILON * s.eval(&x) * s.eval(&y);
            let violations = quotient_ladder(&s, &x, &y)?
                .iter()
                .filter(|r| r.q_minus > exact.rho_minus + slack || exact.rho_plus > r.q_plus + slack)
                .count();
            Ok((err, violations))
        });
        for r in rows {
            match r {
                Ok((err, v)) => {
                    worst = worst.max(err);
                    bracket_violations += v;
                }
                Err(e) => failures.push(format!("{label}: {e}")),
            }
        }
    }
    let ok = failures.is_empty() && worst <= tolerance::NUMERIC_VS_EXACT && bracket_violations == 0;
    let mut detail = format!(
        "{} pairs per family, max |numeric - exact| = {worst:.1e}, bracket violations = {bracket_violations}",
        cfg.pairs()
    );
    if let Some(f) = failures.first() {
        detail.push_str(&format!(", {} failures (first: {f})", failures.len()));
    }
    Ok((ok, detail))
}

/// Reference classification examples. The second sum-norm point has sum
/// norm 13/12; every point is scaled onto the unit sphere before classifying,
/// which leaves both characterizations unchanged.
pub const CLASSIFICATION_TABLE: [(&str, &str, &str); 6] = [
    ("l1", "1/2,0,0,-1/2", "LeftOnly"),
    ("l1", "1/2,1/3,0,-1/4", "RightOnly"),
    ("l1", "1/4,1/4,1/4,1/4", "Neither"),
    ("linf", "1,1,0,0,-1", "LeftOnly"),
    ("linf", "1,1/2,1/5,-1,2/3", "RightOnly"),
    ("linf", "1,-1/3,1,1/3,1/7", "Neither"),
];

fn classification_table() -> Outcome {
    let mut wrong = Vec::new();
    for (family, x, expect) in CLASSIFICATION_TABLE {
        let v: RationalVector = x.parse()?;
        let c = if family == "l1" {
            classify_l1(&v.normalized_l1()?)?
        } else {
            classify_linf(&v.normalized_linf()?)?
        };
        if c.label() != expect {
            wrong.push(format!("{family} ({x}) -> {c}, expected {expect}"));
        }
    }
    Ok((wrong.is_empty(), if wrong.is_empty() { "6/6 reproduced".into() } else { wrong.join("; ") }))
}

/// Random unit vector of `ℓ₁ⁿ` with small integer numerators, so that zeros
/// and equal partial sums are frequent.
pub fn random_unit_l1(rng: &mut ChaCha8Rng, n: usize) -> RationalVector {
    let nums = small_ints(rng, n);
    let total: i64 = nums.iter().map(|a| a.abs()).sum();
    rational(&nums, total)
}

/// Random unit vector of `ℓ∞ⁿ` with small integer numerators, so that zeros
/// and ties are frequent.
pub fn random_unit_linf(rng: &mut ChaCha8Rng, n: usize) -> RationalVector {
    let nums = small_ints(rng, n);
    let max = nums.iter().map(|a| a.abs()).max().unwrap_or(1);
    rational(&nums, max)
}

fn small_ints(rng: &mut ChaCha8Rng, n: usize) -> Vec<i64> {
    let k: i64 = rng.random_range(1..=6);
    loop {
        let v: Vec<i64> = (0..n)
            .map(|_| if rng.random::<f64>() < 0.25 { 0 } else { rng.random_range(-k..=k) })
            .collect();
        if v.iter().any(|&a| a != 0) {
            return v;
        }
    }
}

fn rational(nums: &[i64], den: i64) -> RationalVector {
    RationalVector::new(nums.iter().map(|&a| BigRational::new(BigInt::from(a), BigInt::from(den))).collect())
        .expect("nonempty")
}

fn classifier_agreement(cfg: &VerifyConfig) -> Outcome {
    let mut mismatches = Vec::new();
    let mut seen = [0usize; 4];
    for (k, family) in ["l1", "linf"].iter().enumerate() {
        for n in 3..=5 {
            let space = if k == 0 { Space::l1(n)? } else { Space::linf(n)? };
            let rows = map_range(cfg.exec, cfg.class_points(), |i| -> Result<(RationalVector, SymmetryClass, SymmetryClass)> {
                let mut rng = trial_rng(cfg.seed ^ (0x800 + (k * 8 + n) as u64), i);
                let x = if k == 0 { random_unit_l1(&mut rng, n) } else { random_unit_linf(&mut rng, n) };
                let class = if k == 0 { classify_l1(&x)? } else { classify_linf(&x)? };
                let ocfg = OracleConfig { trials: cfg.trials, seed: rng.random(), exec: Execution::Sequential };
                let xf = x.to_vector();
                let left = oracle_left_symmetric(&space, &xf, &ocfg)?.holds;
                let right = oracle_right_symmetric(&space, &xf, &ocfg)?.holds;
                Ok((x, class, SymmetryClass { left, right }))
            });
            for r in rows {
                let (x, class, oracle) = r?;
                seen[(class.left as usize) * 2 + class.right as usize] += 1;
                if class != oracle {
                    mismatches.push(format!("{family}^{n} ({x}): classifier {class}, oracle {oracle}"));
                }
            }
        }
    }
    let detail = format!(
        "{} points per space, classes Neither/RightOnly/LeftOnly/Both = {}/{}/{}/{}, mismatches = {}{}",
        cfg.class_points(),
        seen[0],
        seen[1],
        seen[2],
        seen[3],
        mismatches.len(),
        mismatches.first().map(|m| format!(" (first: {m})")).unwrap_or_default()
    );
    Ok((mismatches.is_empty(), detail))
}

fn inner_product(cfg: &VerifyConfig) -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 2..=4 {
        let s = Space::lp(2.0, n)?;
        let vals = map_range(cfg.exec, cfg.pairs(), |i| -> Result<f64> {
            let mut rng = trial_rng(cfg.seed ^ (0x900 + n as u64), i);
            let x = gaussian(&mut rng, n);
            let d = gaussian(&mut rng, n);
            let a = alpha_right(&s, &x, &d)?;
            let y: Vec<f64> = x.iter().zip(&d).map(|(xi, di)| a * xi + di).collect();
            let ny = s.eval(&y);
            if ny == 0.0 {
                return Ok(0.0);
            }
            Ok(derivative(&s, &y, &x)?.rho.abs() / (ny * s.eval(&x)))
        });
        for v in vals {
            worst = worst.max(v?);
        }
    }
    let mix = Space::l1_linf();
    let fwd = crate::derivatives::is_rho_orthogonal(&mix, &[-1.0 / 3.0, 1.0], &[1.0, 0.0])?;
    let back = crate::derivatives::is_rho_orthogonal(&mix, &[1.0, 0.0], &[-1.0 / 3.0, 1.0])?;
    Ok((
        worst <= tolerance::INNER_PRODUCT && fwd && !back,
        format!(
            "Euclidean max |rho'(y,x)|/(|x||y|) = {worst:.1e}; glued plane (-1/3,1) -> (1,0): {fwd}, reverse: {back}"
        ),
    ))
}

fn alpha_existence(cfg: &VerifyConfig) -> Outcome {
    let mut rng = trial_rng(cfg.seed, 10);
    let polygons: Vec<Space> = (0..8).map(|_| Space::Polygon(random_polygon(&mut rng))).collect();
    type Family<'a> = (&'static str, Box<dyn Fn(&mut ChaCha8Rng) -> Space + Sync + Send + 'a>);
    let families: Vec<Family> = vec![
        ("l1^n", Box::new(|r: &mut ChaCha8Rng| Space::l1(r.random_range(2..=5)).unwrap())),
        ("linf^n", Box::new(|r: &mut ChaCha8Rng| Space::linf(r.random_range(2..=5)).unwrap())),
        ("lp^n", Box::new(|r: &mut ChaCha8Rng| Space::lp(r.random_range(1.2..6.0), r.random_range(2..=4)).unwrap())),
        ("regular 2n-gon", Box::new(|r: &mut ChaCha8Rng| Space::regular(r.random_range(2..=12)).unwrap())),
        ("polygon", Box::new(|r: &mut ChaCha8Rng| polygons[r.random_range(0..polygons.len())].clone())),
        ("mixed", Box::new(|r: &mut ChaCha8Rng| {
            let pieces = [Piece::L1, Piece::LInf, Piece::Lp(2.0), Piece::Lp(3.0)];
            Space::mixed(pieces[r.random_range(0..4)], pieces[r.random_range(0..4)]).unwrap()
        })),
    ];
    let mut failures = Vec::new();
    for (fi, (label, make)) in families.iter().enumerate() {
        let rows = map_range(cfg.exec, cfg.pairs(), |i| -> Result<()> {
            let mut rng = trial_rng(cfg.seed ^ (0xa00 + fi as u64), i);
            let s = make(&mut rng);
            let x = adversarial_point(&s, &mut rng);
            let y = gaussian(&mut rng, s.dim());
            alpha_right(&s, &x, &y).map(|_| ())
        });
        for r in rows {
            if let Err(e) = r {
                failures.push(format!("{label}: {e}"));
            }
        }
    }
    let linf = Space::linf(3)?;
    let left = alpha_left(&linf, &[1.0, 1.0, 0.5], &[-0.5, 0.0, 1.0], AlphaSearch { range: 1e3, steps: 10_000 })?;
    let ok = failures.is_empty() && left.is_none();
    Ok((
        ok,
        format!(
            "alpha_right postcondition failures: {} of {}; alpha_left on the sup-norm example: {left:?}{}",
            failures.len(),
            6 * cfg.pairs(),
            failures.first().map(|f| format!(" (first: {f})")).unwrap_or_default()
        ),
    ))
}

/// A random origin-symmetric polygon: points of the unit circle at random
/// angles, mapped through a random invertible linear map.
pub fn random_polygon(rng: &mut ChaCha8Rng) -> Polygon {
    loop {
        let k = rng.random_range(2..=6);
        let mut angles: Vec<f64> = (0..k).map(|_| rng.random_range(0.0..PI)).collect();
        angles.sort_by(f64::total_cmp);
        let gaps_ok = angles.windows(2).all(|w| w[1] - w[0] > 0.05) && angles[0] + PI - angles[k - 1] > 0.05;
        if !gaps_ok {
            continue;
        }
        let (phi, psi) = (rng.random_range(0.0..PI), rng.random_range(0.0..PI));
        let (s1, s2) = (rng.random_range(0.5..2.0), rng.random_range(0.5..2.0));
        let map = |a: f64| {
            let p = [a.cos(), a.sin()];
            let q = [psi.cos() * p[0] - psi.sin() * p[1], psi.sin() * p[0] + psi.cos() * p[1]];
            let q = [s1 * q[0], s2 * q[1]];
            [phi.cos() * q[0] - phi.sin() * q[1], phi.sin() * q[0] + phi.cos() * q[1]]
        };
        let pts: Vec<[f64; 2]> = angles.iter().map(|&a| map(a)).collect();
        if let Ok(p) = Polygon::new(&pts) {
            return p;
        }
    }
}

fn monotonicity(cfg: &VerifyConfig) -> Outcome {
    let mut cases: Vec<(String, Space, Vec<f64>)> = vec![
        ("l2^2".into(), Space::lp(2.0, 2)?, vec![1.0, 0.0]),
        ("regular hexagon".into(), Space::regular(3)?, vec![1.0, 0.0]),
        ("glued hexagon".into(), Space::l1_linf(), vec![1.0, 0.0]),
    ];
    let mut rng = trial_rng(cfg.seed, 11);
    for k in 0..10 {
        let p = random_polygon(&mut rng);
        let v = p.vertices()[0].to_vec();
        let s = Space::Polygon(p);
        let theta = rng.random_range(0.0..2.0 * PI);
        let x = s.sphere_at(theta).to_vec();
        cases.push((format!("random polygon {k} at a vertex"), s.clone(), v));
        cases.push((format!("random polygon {k} at angle {theta:.3}"), s, x));
    }
    let mut worst: f64 = 0.0;
    for (_, s, x) in &cases {
        worst = worst.max(verify_monotone(s, x, 360)?.max_violation);
    }
    Ok((worst <= tol::MONOTONE, format!("{} cases, max violation = {worst:.1e}", cases.len())))
}

fn smooth_gamma(cfg: &VerifyConfig) -> Outcome {
    let mut vals = Vec::new();
    for p in [1.5, 2.0, 3.0] {
        vals.push(gamma_estimate_with(&Space::lp(p, 2)?, 720, 60, cfg.exec)?.value);
    }
    let worst = vals.iter().cloned().fold(0.0, f64::max);
    Ok((
        worst <= tolerance::SMOOTH_GAMMA,
        format!("estimates for p = 1.5, 2, 3: {:.1e}, {:.1e}, {:.1e}", vals[0], vals[1], vals[2]),
    ))
}
