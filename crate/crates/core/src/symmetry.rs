//! ρ-left / ρ-right symmetry.
//!
//! `x` is ρ-left symmetric when `x ⊥_ρ y ⇒ y ⊥_ρ x` for every `y`, and ρ-right
//! symmetric when `y ⊥_ρ x ⇒ x ⊥_ρ y`. For `ℓ₁ⁿ` and `ℓ∞ⁿ` both properties
//! have exact combinatorial characterizations, evaluated here in rational
//! arithmetic. The randomized oracles test the definitions directly.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::derivatives::derivative;
use crate::error::{Error, Result};
use crate::exec::{map_range, Execution};
use crate::spaces::Space;
use crate::tol;
use crate::vector::{axpy, euclid, Vector};

/// A vector of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalVector(Vec<BigRational>);

impl RationalVector {
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        Ok(Self(coords))
    }

    /// `numerators[i] / denominator`.
    pub fn from_ints(numerators: &[i64], denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        Self::new(
            numerators
                .iter()
                .map(|&a| BigRational::new(BigInt::from(a), BigInt::from(denominator)))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Nearest double-precision vector.
    pub fn to_vector(&self) -> Vector {
        Vector::from(self.0.iter().map(|q| q.to_f64().unwrap_or(f64::NAN)).collect::<Vec<_>>())
    }

    pub fn norm_l1(&self) -> BigRational {
        self.0.iter().map(|q| q.abs()).fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn norm_linf(&self) -> BigRational {
        self.0.iter().map(|q| q.abs()).fold(BigRational::zero(), |a, b| if b > a { b } else { a })
    }

    /// `self / s` for `s ≠ 0`.
    pub fn scaled_down(&self, s: &BigRational) -> Self {
        Self(self.0.iter().map(|q| q / s).collect())
    }

    /// `x/‖x‖₁`.
    pub fn normalized_l1(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self.scaled_down(&self.norm_l1()))
    }

    /// `x/‖x‖∞`.
    pub fn normalized_linf(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self.scaled_down(&self.norm_linf()))
    }
}

/// Parses `p/q`, an integer, or a decimal such as `-0.125` or `2.5e-3`, all
/// exactly.
pub fn parse_rational(token: &str) -> Result<BigRational> {
    let t = token.trim();
    let bad = || Error::Parse(format!("not a rational number: {token:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {token:?}")));
        }
        return Ok(BigRational::new(p, q));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let all: BigInt = format!("0{int_part}{frac_part}").parse().map_err(|_| bad())?;
    let shift = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = BigRational::from_integer(all);
    if shift >= 0 {
        value *= BigRational::from_integer(num_traits::pow(ten, shift as usize));
    } else {
        value /= BigRational::from_integer(num_traits::pow(ten, (-shift) as usize));
    }
    Ok(if neg { -value } else { value })
}

impl FromStr for RationalVector {
    type Err = Error;

    /// Comma-separated tokens accepted by [`parse_rational`].
    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?)
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|q| q.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Left and right ρ-symmetry of a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryClass {
    pub left: bool,
    pub right: bool,
}

impl SymmetryClass {
    pub fn label(&self) -> &'static str {
        match (self.left, self.right) {
            (true, true) => "Both",
            (true, false) => "LeftOnly",
            (false, true) => "RightOnly",
            (false, false) => "Neither",
        }
    }

    /// Both flags set.
    pub fn is_symmetric(&self) -> bool {
        self.left && self.right
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn check_pair(x: &RationalVector, y: &RationalVector) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch { expected: x.len(), got: y.len() });
    }
    if x.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(())
}

fn rsgn(q: &BigRational) -> BigRational {
    if q.is_zero() {
        BigRational::zero()
    } else {
        q.signum()
    }
}

/// `x ⊥_ρ y` in `ℓ₁ⁿ`: `Σ sgn(xᵢ) yᵢ = 0`.
pub fn rho_ortho_l1(x: &RationalVector, y: &RationalVector) -> Result<bool> {
    check_pair(x, y)?;
    let s = x.0.iter().zip(&y.0).fold(BigRational::zero(), |acc, (a, b)| acc + rsgn(a) * b);
    Ok(s.is_zero())
}

/// `x ⊥_ρ y` in `ℓ∞ⁿ`: `max + min` of `sgn(xᵢ) yᵢ` over `I_x = {i : |xᵢ| = ‖x‖∞}`
/// vanishes. `I_x` is taken relative to `‖x‖∞`, so `x` need not be unit.
pub fn rho_ortho_linf(x: &RationalVector, y: &RationalVector) -> Result<bool> {
    check_pair(x, y)?;
    let m = x.norm_linf();
    let vals: Vec<BigRational> = x
        .0
        .iter()
        .zip(&y.0)
        .filter(|(a, _)| a.abs() == m)
        .map(|(a, b)| rsgn(a) * b)
        .collect();
    let max = vals.iter().max().expect("I_x is nonempty");
    let min = vals.iter().min().expect("I_x is nonempty");
    Ok((max + min).is_zero())
}

/// Largest support for which the right-symmetry test runs.
pub const SUPPORT_CAP: usize = 20;

/// Whether some `c ∈ {−1, 0, 1}^supp` with at least two nonzero entries has
/// `Σ cᵢ xᵢ = 0`. This is the negation of "`|Σ_A x| ≠ |Σ_B x|` for all disjoint
/// nonempty `A, B`". Meet in the middle: each half maps every reachable signed
/// sum to its largest support.
fn has_signed_zero_sum(values: &[BigRational]) -> bool {
    let half = values.len() / 2;
    let table = |part: &[BigRational]| -> HashMap<BigRational, usize> {
        let mut sums: Vec<(BigRational, usize)> = vec![(BigRational::zero(), 0)];
        for v in part {
            let mut next = Vec::with_capacity(sums.len() * 3);
            for (s, k) in &sums {
                next.push((s.clone(), *k));
                next.push((s + v, k + 1));
                next.push((s - v, k + 1));
            }
            sums = next;
        }
        let mut best: HashMap<BigRational, usize> = HashMap::new();
        for (s, k) in sums {
            let e = best.entry(s).or_insert(0);
            *e = (*e).max(k);
        }
        best
    };
    let left = table(&values[..half]);
    let right = table(&values[half..]);
    left.iter().any(|(s, a)| right.get(&-s).is_some_and(|b| a + b >= 2))
}

/// Exact classification of a unit vector of `ℓ₁ⁿ`.
///
/// Left: `x` is extreme (one nonzero coordinate), or has exactly two nonzero
/// coordinates, both of absolute value ½. Right: `x` is extreme, or no two
/// disjoint nonempty sets of support indices have sums of equal absolute value.
pub fn classify_l1(x: &RationalVector) -> Result<SymmetryClass> {
    let norm = x.norm_l1();
    if !norm.is_one() {
        return Err(Error::NotUnit(norm.to_string()));
    }
    let support: Vec<BigRational> = x.0.iter().filter(|q| !q.is_zero()).cloned().collect();
    if support.len() > SUPPORT_CAP {
        return Err(Error::SupportTooLarge(support.len()));
    }
    let extreme = support.len() == 1;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let left = extreme || (support.len() == 2 && support.iter().all(|q| q.abs() == half));
    let right = extreme || !has_signed_zero_sum(&support);
    Ok(SymmetryClass { left, right })
}

/// Exact classification of a unit vector of `ℓ∞ⁿ`.
///
/// Left: every coordinate outside `I_x` is zero. Right: `x` is extreme
/// (`I_x` is everything), or the coordinates outside `I_x` are nonzero with
/// pairwise distinct absolute values.
pub fn classify_linf(x: &RationalVector) -> Result<SymmetryClass> {
    let norm = x.norm_linf();
    if !norm.is_one() {
        return Err(Error::NotUnit(norm.to_string()));
    }
    let outside: Vec<BigRational> = x.0.iter().map(|q| q.abs()).filter(|a| !a.is_one()).collect();
    let left = outside.iter().all(Zero::is_zero);
    let right = outside.is_empty() || {
        let mut sorted = outside.clone();
        sorted.sort();
        !sorted[0].is_zero() && sorted.windows(2).all(|w| w[0] != w[1])
    };
    Ok(SymmetryClass { left, right })
}

/// Trial count, seed and execution mode shared by the randomized oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub trials: usize,
    pub seed: u64,
    #[serde(skip)]
    pub exec: Execution,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { trials: 500, seed: 42, exec: Execution::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub holds: bool,
    /// The first failing `y` in trial order.
    pub counterexample: Option<Vector>,
    /// Trials that produced a usable `y`.
    pub checked: usize,
}

/// Independent generator for trial `i`: one seed, one stream per trial.
pub fn trial_rng(seed: u64, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    rng
}

fn gaussian_direction(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    loop {
        let d: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        let r = euclid(&d);
        if r > 1e-8 {
            return d.into_iter().map(|c| c / r).collect();
        }
    }
}

fn collect_verdict(results: Vec<Result<Option<Option<Vector>>>>) -> Result<OracleVerdict> {
    let mut checked = 0;
    let mut counterexample = None;
    for r in results {
        if let Some(found) = r? {
            checked += 1;
            if counterexample.is_none() {
                counterexample = found;
            }
        }
    }
    Ok(OracleVerdict { holds: counterexample.is_none(), counterexample, checked })
}

fn rho_vanishes(space: &Space, a: &[f64], b: &[f64]) -> Result<bool> {
    let d = derivative(space, a, b)?;
    Ok(d.rho.abs() <= tol::SYMMETRY_ORACLE * space.eval(a) * space.eval(b))
}

/// Tests left symmetry on `y = α(x, d)x + d` for Gaussian directions `d`, where
/// `α` is the right-existence coefficient, so `x ⊥_ρ y` by construction.
pub fn oracle_left_symmetric(space: &Space, x: &[f64], cfg: &OracleConfig) -> Result<OracleVerdict> {
    space.check_nonzero(x)?;
    let n = space.dim();
    let nx = space.eval(x);
    let results = map_range(cfg.exec, cfg.trials, |i| -> Result<Option<Option<Vector>>> {
        let mut rng = trial_rng(cfg.seed, i);
        let d = gaussian_direction(&mut rng, n);
        let alpha = -derivative(space, x, &d)?.rho / (nx * nx);
        let y = axpy(alpha, x, &d);
        if space.eval(&y) <= 1e-9 * space.eval(&d) {
            return Ok(None);
        }
        Ok(Some(if rho_vanishes(space, &y, x)? { None } else { Some(y) }))
    });
    collect_verdict(results)
}

/// Tests right symmetry on sampled solutions `y` of `y ⊥_ρ x`.
///
/// `ℓ₁ⁿ`: sign patterns of `y` on the support of `x` with `Σ sᵢxᵢ = 0`, free
/// values elsewhere. `ℓ∞ⁿ`: the max-attaining set of `y` is placed on indices
/// whose `sgn(yᵢ)xᵢ` values have `max = −min`. Smooth `ℓ_p`: a root of
/// `s ↦ ρ'(d + sx, x)`. Other families are unsupported.
pub fn oracle_right_symmetric(space: &Space, x: &[f64], cfg: &OracleConfig) -> Result<OracleVerdict> {
    space.check_nonzero(x)?;
    let unsupported = || Error::Unsupported { op: "oracle_right_symmetric", family: space.family() };
    let sampler: Box<dyn Fn(&mut ChaCha8Rng) -> Result<Option<Vec<f64>>> + Sync + Send> = match space {
        Space::Lp { p, .. } if *p == 1.0 => Box::new(l1_right_sampler(x)?),
        Space::Lp { p, .. } if p.is_infinite() => Box::new(linf_right_sampler(x)),
        Space::Lp { .. } => {
            let space = space.clone();
            let x = x.to_vec();
            Box::new(move |rng: &mut ChaCha8Rng| smooth_right_sample(&space, &x, rng))
        }
        _ => return Err(unsupported()),
    };
    let results = map_range(cfg.exec, cfg.trials, |i| -> Result<Option<Option<Vector>>> {
        let mut rng = trial_rng(cfg.seed, i);
        let Some(y) = sampler(&mut rng)? else { return Ok(None) };
        if y.iter().all(|&c| c == 0.0) {
            return Ok(None);
        }
        Ok(Some(if rho_vanishes(space, x, &y)? { None } else { Some(Vector::from(y)) }))
    });
    collect_verdict(results)
}

fn random_sign(rng: &mut ChaCha8Rng) -> f64 {
    if rng.random::<bool>() {
        1.0
    } else {
        -1.0
    }
}

fn l1_right_sampler(x: &[f64]) -> Result<impl Fn(&mut ChaCha8Rng) -> Result<Option<Vec<f64>>> + Sync + Send> {
    let n = x.len();
    let norm: f64 = x.iter().map(|c| c.abs()).sum();
    let zero = tol::ACTIVE_SET * norm;
    let support: Vec<usize> = (0..n).filter(|&i| x[i].abs() > zero).collect();
    if support.len() > 12 {
        return Err(Error::Precondition(format!(
            "right-symmetry oracle enumerates 3^k sign patterns; support {} exceeds 12",
            support.len()
        )));
    }
    // every sign pattern on the support with Σ sᵢxᵢ = 0 (the empty one included)
    let mut patterns: Vec<Vec<i8>> = Vec::new();
    for code in 0..3usize.pow(support.len() as u32) {
        let mut c = code;
        let mut s = Vec::with_capacity(support.len());
        for _ in 0..support.len() {
            s.push((c % 3) as i8 - 1);
            c /= 3;
        }
        let total: f64 = s.iter().zip(&support).map(|(&si, &i)| si as f64 * x[i]).sum();
        if total.abs() <= zero {
            patterns.push(s);
        }
    }
    Ok(move |rng: &mut ChaCha8Rng| {
        let s = &patterns[rng.random_range(0..patterns.len())];
        let mut y: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        for (&si, &i) in s.iter().zip(&support) {
            y[i] = si as f64 * rng.random_range(0.05..1.0);
        }
        Ok(Some(y))
    })
}

fn linf_right_sampler(x: &[f64]) -> impl Fn(&mut ChaCha8Rng) -> Result<Option<Vec<f64>>> + Sync + Send {
    let n = x.len();
    let m = x.iter().fold(0.0f64, |a, c| a.max(c.abs()));
    let same = move |a: f64, b: f64| (a - b).abs() <= tol::ACTIVE_SET * m;
    // levels ℓ with index groups: 0 (zero coordinates) or a repeated |xᵢ|
    let mut levels: Vec<(f64, Vec<usize>)> = Vec::new();
    for i in 0..n {
        let a = x[i].abs();
        let a = if same(a, 0.0) { 0.0 } else { a };
        match levels.iter_mut().find(|(l, _)| same(*l, a)) {
            Some((_, idx)) => idx.push(i),
            None => levels.push((a, vec![i])),
        }
    }
    levels.retain(|(l, idx)| *l == 0.0 || idx.len() >= 2);
    let x = x.to_vec();
    move |rng: &mut ChaCha8Rng| {
        if levels.is_empty() {
            return Ok(None);
        }
        let (level, group) = &levels[rng.random_range(0..levels.len())];
        let mut y: Vec<f64> = (0..n).map(|_| rng.random_range(-0.99..0.99)).collect();
        let mut core = Vec::new();
        if *level == 0.0 {
            let k = group[rng.random_range(0..group.len())];
            y[k] = random_sign(rng);
            core.push(k);
        } else {
            let a = rng.random_range(0..group.len());
            let mut b = rng.random_range(0..group.len() - 1);
            if b >= a {
                b += 1;
            }
            let (i, j) = (group[a], group[b]);
            y[i] = x[i].signum();
            y[j] = -x[j].signum();
            core.extend([i, j]);
        }
        for k in 0..n {
            if !core.contains(&k) && (x[k].abs() <= *level || same(x[k].abs(), *level)) && rng.random::<bool>() {
                y[k] = random_sign(rng);
            }
        }
        Ok(Some(y))
    }
}

fn smooth_right_sample(space: &Space, x: &[f64], rng: &mut ChaCha8Rng) -> Result<Option<Vec<f64>>> {
    let d = gaussian_direction(rng, x.len());
    let nx = space.eval(x);
    let g = |s: f64| -> Result<(f64, Vector)> {
        let y = axpy(s, x, &d);
        Ok((derivative(space, &y, x)?.rho, y))
    };
    let mut r = 4.0 * (space.eval(&d) / nx + 1.0);
    let (mut lo, mut hi) = (-r, r);
    while g(lo)?.0 >= 0.0 || g(hi)?.0 <= 0.0 {
        r *= 2.0;
        if r > 1e12 {
            return Ok(None);
        }
        (lo, hi) = (-r, r);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let (gm, y) = g(mid)?;
        if gm.abs() <= 1e-13 * space.eval(&y) * nx || mid <= lo || mid >= hi {
            return Ok(Some(y.into_inner()));
        }
        if gm < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some(g(0.5 * (lo + hi))?.1.into_inner()))
}

/// One-way/other-way ρ-orthogonality of a fixed pair.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairCheck {
    pub x: Vector,
    pub y: Vector,
    pub x_perp_y: bool,
    pub y_perp_x: bool,
}

pub fn pair_check(space: &Space, x: &[f64], y: &[f64]) -> Result<PairCheck> {
    Ok(PairCheck {
        x: Vector::from(x.to_vec()),
        y: Vector::from(y.to_vec()),
        x_perp_y: rho_vanishes(space, x, y)?,
        y_perp_x: rho_vanishes(space, y, x)?,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub samples: usize,
    pub symmetric_samples: usize,
    pub fraction_symmetric: f64,
    /// `(x, y)` with `x ⊥_ρ y` but not `y ⊥_ρ x`.
    pub counterexample: Option<(Vector, Vector)>,
    /// Deterministic witness for the sum/max glued plane: `(−1/3, 1) ⊥_ρ (1, 0)`.
    pub seeded_witness: Option<PairCheck>,
}

impl ProbeReport {
    pub fn symmetric(&self) -> bool {
        self.counterexample.is_none() && self.seeded_witness.as_ref().is_none_or(|w| w.y_perp_x)
    }
}

/// Runs the left oracle (16 inner trials) at `cfg.trials` random points.
pub fn probe_space_symmetry(space: &Space, cfg: &OracleConfig) -> Result<ProbeReport> {
    let n = space.dim();
    let verdicts = map_range(cfg.exec, cfg.trials, |i| -> Result<(Vec<f64>, OracleVerdict)> {
        let mut rng = trial_rng(cfg.seed ^ 0x9e37_79b9_7f4a_7c15, i);
        let x = gaussian_direction(&mut rng, n);
        let inner = OracleConfig { trials: 16, seed: rng.random(), exec: Execution::Sequential };
        let v = oracle_left_symmetric(space, &x, &inner)?;
        Ok((x, v))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let symmetric_samples = verdicts.iter().filter(|(_, v)| v.holds).count();
    let counterexample = verdicts
        .iter()
        .find_map(|(x, v)| v.counterexample.clone().map(|y| (Vector::from(x.clone()), y)));
    let seeded_witness = if *space == Space::l1_linf() {
        Some(pair_check(space, &[-1.0 / 3.0, 1.0], &[1.0, 0.0])?)
    } else {
        None
    };
    Ok(ProbeReport {
        samples: cfg.trials,
        symmetric_samples,
        fraction_symmetric: if cfg.trials == 0 { 1.0 } else { symmetric_samples as f64 / cfg.trials as f64 },
        counterexample,
        seeded_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(s: &str) -> RationalVector {
        s.parse().unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!(rv("1/2,0,-1/2"), RationalVector::from_ints(&[1, 0, -1], 2).unwrap());
        assert_eq!(rv("0.25, -1.5e1, 3"), RationalVector::from_ints(&[1, -60, 12], 4).unwrap());
        assert_eq!(rv("1/2,0,-1/2").to_string(), "1/2,0,-1/2");
        assert!("1/0".parse::<RationalVector>().is_err());
        assert!("abc".parse::<RationalVector>().is_err());
        assert!("1,,2".parse::<RationalVector>().is_err());
        assert!(".".parse::<RationalVector>().is_err());
        assert_eq!(parse_rational(".5").unwrap(), parse_rational("1/2").unwrap());
    }

    #[test]
    fn l1_orthogonality_examples() {
        assert!(rho_ortho_l1(&rv("1,0,0"), &rv("0,5,-3")).unwrap());
        assert!(rho_ortho_l1(&rv("1/2,1/2"), &rv("1,-1")).unwrap());
        let x = rv("1/4,1/4,1/4,1/4");
        let y = rv("1,1,1,-3");
        assert!(rho_ortho_l1(&x, &y).unwrap());
        assert!(!rho_ortho_l1(&y, &x).unwrap());
        assert!(rho_ortho_l1(&rv("0,0"), &rv("1,1")).is_err());
        assert!(rho_ortho_l1(&rv("1,0"), &rv("1,1,1")).is_err());
    }

    #[test]
    fn linf_orthogonality_examples() {
        assert!(!rho_ortho_linf(&rv("1,1,1"), &rv("0,0,1")).unwrap());
        assert!(rho_ortho_linf(&rv("1,1"), &rv("1,-1")).unwrap());
        assert!(!rho_ortho_linf(&rv("1,1,1/2"), &rv("-1/2,0,1")).unwrap());
    }

    #[test]
    fn classification_table() {
        let l1 = |s: &str| classify_l1(&rv(s)).unwrap().label();
        assert_eq!(l1("1/2,0,0,-1/2"), "LeftOnly");
        // printed without normalization: its sum norm is 13/12
        assert!(matches!(classify_l1(&rv("1/2,1/3,0,-1/4")), Err(Error::NotUnit(_))));
        let x2 = rv("1/2,1/3,0,-1/4").normalized_l1().unwrap();
        assert_eq!(x2, rv("6/13,4/13,0,-3/13"));
        assert_eq!(classify_l1(&x2).unwrap().label(), "RightOnly");
        assert_eq!(l1("1/4,1/4,1/4,1/4"), "Neither");
        assert_eq!(l1("1,0,0,0"), "Both");
        let linf = |s: &str| classify_linf(&rv(s)).unwrap().label();
        assert_eq!(linf("1,1,0,0,-1"), "LeftOnly");
        assert_eq!(linf("1,1/2,1/5,-1,2/3"), "RightOnly");
        assert_eq!(linf("1,-1/3,1,1/3,1/7"), "Neither");
        assert_eq!(linf("1,1,1"), "Both");
        assert!(matches!(classify_l1(&rv("1,1")), Err(Error::NotUnit(_))));
        assert!(matches!(classify_linf(&rv("1/2,0")), Err(Error::NotUnit(_))));
    }

    #[test]
    fn support_cap() {
        let x = RationalVector::from_ints(&[1; 21], 21).unwrap();
        assert_eq!(classify_l1(&x), Err(Error::SupportTooLarge(21)));
    }

    #[test]
    fn oracles_on_reference_points() {
        let cfg = OracleConfig::default();
        let l1 = Space::l1(4).unwrap();
        let v = oracle_left_symmetric(&l1, &[0.25; 4], &cfg).unwrap();
        assert!(!v.holds && v.counterexample.is_some());
        assert!(oracle_right_symmetric(&Space::l1(3).unwrap(), &[1.0, 0.0, 0.0], &cfg).unwrap().holds);
        let linf = Space::linf(5).unwrap();
        assert!(!oracle_right_symmetric(&linf, &[1.0, 1.0, 0.0, 0.0, -1.0], &cfg).unwrap().holds);
        let l2 = Space::lp(2.0, 3).unwrap();
        assert!(oracle_left_symmetric(&l2, &[0.3, -1.0, 2.0], &cfg).unwrap().holds);
        assert!(oracle_right_symmetric(&l2, &[0.3, -1.0, 2.0], &cfg).unwrap().holds);
        assert!(matches!(
            oracle_right_symmetric(&Space::l1_linf(), &[1.0, 0.0], &cfg),
            Err(Error::Unsupported { .. })
        ));
    }

    #[test]
    fn glued_plane_points() {
        let cfg = OracleConfig::default();
        let mix = Space::l1_linf();
        // (−1/3, 1) ⊥_ρ (1, 0) but not conversely, so (−1/3, 1) is not left symmetric
        assert!(!oracle_left_symmetric(&mix, &[-1.0 / 3.0, 1.0], &cfg).unwrap().holds);
        // the only ρ-orthogonal direction at (1, 0) is (−1/2, 1), and that pair is symmetric
        assert!(oracle_left_symmetric(&mix, &[1.0, 0.0], &cfg).unwrap().holds);
    }

    #[test]
    fn oracle_is_deterministic_across_modes() {
        let s = Space::l1(4).unwrap();
        let x = [0.25; 4];
        let a = oracle_left_symmetric(&s, &x, &OracleConfig { exec: Execution::Parallel, ..Default::default() });
        let b = oracle_left_symmetric(&s, &x, &OracleConfig { exec: Execution::Sequential, ..Default::default() });
        assert_eq!(a, b);
    }

    #[test]
    fn probe_examples() {
        let cfg = OracleConfig { trials: 40, ..Default::default() };
        assert!(probe_space_symmetry(&Space::lp(2.0, 3).unwrap(), &cfg).unwrap().symmetric());
        let mix = probe_space_symmetry(&Space::l1_linf(), &cfg).unwrap();
        assert!(!mix.symmetric());
        let w = mix.seeded_witness.unwrap();
        assert!(w.x_perp_y && !w.y_perp_x);
        assert!(!probe_space_symmetry(&Space::linf(3).unwrap(), &cfg).unwrap().symmetric());
    }
}
