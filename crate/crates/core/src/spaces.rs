//! Norms, dual norms and exact extreme supporting functionals.
//!
//! Families:
//! - `ℓ_p^n` for `p ∈ [1, ∞]` (the sum and max norms get their own exact
//!   active-set logic),
//! - planar polygons given by vertices (`Polygon`),
//! - the regular `2n`-gon with vertices `v_j = (cos((j−1)π/n), sin((j−1)π/n))`,
//!   evaluated through its closed-form edge functionals rather than through a
//!   vertex list,
//! - planar orthant-mixed norms: one piece on the quadrants where `x₁x₂ ≥ 0`,
//!   another where `x₁x₂ ≤ 0`. `mix:l1-linf` is the sum norm on the first and
//!   third quadrants and the max norm on the second and fourth; its unit ball
//!   is the hexagon `(1,0), (0,1), (−1,1), (−1,0), (0,−1), (1,−1)`.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tol;
use crate::vector::{as2, cross, dot, is_zero, sgn, DualFunctional, Vector};

/// One quadrant piece of an orthant-mixed planar norm.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Piece {
    L1,
    LInf,
    Lp(f64),
}

impl Piece {
    /// Folds `Lp(1)` and `Lp(∞)` into the dedicated variants.
    fn canonical(self) -> Result<Piece> {
        match self {
            Piece::Lp(p) if p.is_nan() || p < 1.0 => {
                Err(Error::InvalidSpace(format!("exponent p = {p} must lie in [1, ∞]")))
            }
            Piece::Lp(p) if p == 1.0 => Ok(Piece::L1),
            Piece::Lp(p) if p.is_infinite() => Ok(Piece::LInf),
            other => Ok(other),
        }
    }

    fn kind(self) -> LpKind {
        match self {
            Piece::L1 => LpKind::One,
            Piece::LInf => LpKind::Inf,
            Piece::Lp(p) => LpKind::of(p),
        }
    }

    pub fn is_polyhedral(self) -> bool {
        matches!(self, Piece::L1 | Piece::LInf)
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Piece::L1 => write!(f, "l1"),
            Piece::LInf => write!(f, "linf"),
            Piece::Lp(p) => write!(f, "lp({p})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum LpKind {
    One,
    Inf,
    General(f64),
}

impl LpKind {
    fn of(p: f64) -> Self {
        if p == 1.0 {
            LpKind::One
        } else if p.is_infinite() {
            LpKind::Inf
        } else {
            LpKind::General(p)
        }
    }
}

/// A centrally symmetric convex polygon, stored counterclockwise, together
/// with the functional of every edge (`f_i = 1` on `[v_i, v_{i+1}]`).
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon {
    vertices: Vec<[f64; 2]>,
    functionals: Vec<[f64; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
struct PolygonFile {
    vertices: Vec<[f64; 2]>,
}

impl Polygon {
    /// Builds the unit ball from any list of boundary vertices. Negations are
    /// appended, duplicates and collinear points dropped and the result sorted
    /// counterclockwise, so supplying half of a symmetric polygon is enough.
    pub fn new(vertices: &[[f64; 2]]) -> Result<Self> {
        if vertices.iter().flatten().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        if vertices.iter().any(|v| v[0] == 0.0 && v[1] == 0.0) {
            return Err(Error::DegeneratePolygon("the origin cannot be a vertex".into()));
        }
        let mut pts: Vec<[f64; 2]> = vertices
            .iter()
            .flat_map(|&[a, b]| [[a, b], [-a, -b]])
            .collect();
        pts.sort_by(|a, b| angle(*a).total_cmp(&angle(*b)));
        pts.dedup_by(|a, b| {
            let scale = a[0].hypot(a[1]).max(b[0].hypot(b[1]));
            (a[0] - b[0]).abs() <= 1e-12 * scale && (a[1] - b[1]).abs() <= 1e-12 * scale
        });
        // wrap-around duplicate
        if pts.len() > 1 {
            let (first, last) = (pts[0], pts[pts.len() - 1]);
            let scale = first[0].hypot(first[1]);
            if (first[0] - last[0]).abs() <= 1e-12 * scale && (first[1] - last[1]).abs() <= 1e-12 * scale {
                pts.pop();
            }
        }

        loop {
            let m = pts.len();
            if m < 4 {
                return Err(Error::DegeneratePolygon(format!(
                    "need at least 4 vertices after symmetric closure, got {m}"
                )));
            }
            let drop = (0..m).find(|&i| {
                let prev = pts[(i + m - 1) % m];
                let cur = pts[i];
                let next = pts[(i + 1) % m];
                let a = [cur[0] - prev[0], cur[1] - prev[1]];
                let b = [next[0] - cur[0], next[1] - cur[1]];
                cross(a, b).abs() <= 1e-12 * a[0].hypot(a[1]) * b[0].hypot(b[1])
            });
            match drop {
                Some(i) => {
                    pts.remove(i);
                }
                None => break,
            }
        }

        let m = pts.len();
        for i in 0..m {
            let cur = pts[i];
            let next = pts[(i + 1) % m];
            if cross(cur, next) <= 0.0 {
                return Err(Error::DegeneratePolygon(
                    "origin is not interior (consecutive vertices span ≥ π or share a ray)".into(),
                ));
            }
            let after = pts[(i + 2) % m];
            let a = [next[0] - cur[0], next[1] - cur[1]];
            let b = [after[0] - next[0], after[1] - next[1]];
            if cross(a, b) <= 0.0 {
                return Err(Error::DegeneratePolygon(format!(
                    "polygon is not convex at vertex ({}, {})",
                    next[0], next[1]
                )));
            }
        }

        let functionals = (0..m)
            .map(|i| edge_functional(pts[i], pts[(i + 1) % m]))
            .collect();
        Ok(Self { vertices: pts, functionals })
    }

    /// Parses the polygon file format: `{"vertices": [[x, y], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: PolygonFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("polygon file: {e}")))?;
        Self::new(&file.vertices)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolygonFile { vertices: self.vertices.clone() })
            .expect("plain numeric data always serializes")
    }

    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    pub fn edge_functionals(&self) -> &[[f64; 2]] {
        &self.functionals
    }
}

fn angle(v: [f64; 2]) -> f64 {
    let a = v[1].atan2(v[0]);
    if a < 0.0 {
        a + 2.0 * PI
    } else {
        a
    }
}

/// The functional equal to one on both endpoints of the edge `[a, b]`.
fn edge_functional(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    let c = cross(a, b);
    [(b[1] - a[1]) / c, (a[0] - b[0]) / c]
}

/// The regular `2n`-gon in closed form.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularPolygon {
    n: usize,
    vertices: Vec<[f64; 2]>,
    functionals: Vec<[f64; 2]>,
}

impl RegularPolygon {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpace(format!("regular 2n-gon needs n ≥ 2, got {n}")));
        }
        let vertices = (1..=2 * n).map(|j| regular_vertex(n, j)).collect();
        let functionals = (1..=2 * n).map(|i| regular_edge_functional(n, i)).collect();
        Ok(Self { n, vertices, functionals })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    pub fn edge_functionals(&self) -> &[[f64; 2]] {
        &self.functionals
    }
}

/// Vertex `v_j` of the regular `2n`-gon, 1-based and taken modulo `2n`.
pub fn regular_vertex(n: usize, j: usize) -> [f64; 2] {
    let j = (j + 2 * n - 1) % (2 * n); // j − 1 reduced
    let a = j as f64 * PI / n as f64;
    [a.cos(), a.sin()]
}

/// Supporting functional of the edge `[v_i, v_{i+1}]` of the regular `2n`-gon
/// (1-based `i`, modulo `2n`):
/// `f(x, y) = (x cos((2i−1)π/2n) + y sin((2i−1)π/2n)) / cos(π/2n)`.
pub fn regular_edge_functional(n: usize, i: usize) -> [f64; 2] {
    let i = ((i + 2 * n - 1) % (2 * n)) + 1;
    let a = (2 * i - 1) as f64 * PI / (2 * n) as f64;
    let c = (PI / (2 * n) as f64).cos();
    [a.cos() / c, a.sin() / c]
}

/// Vertices of the regular `2n`-gon, counterclockwise from `(1, 0)`.
pub fn regular_polygon_vertices(n: usize) -> Result<Vec<Vector>> {
    if n < 2 {
        return Err(Error::InvalidSpace(format!("regular 2n-gon needs n ≥ 2, got {n}")));
    }
    Ok((1..=2 * n).map(|j| Vector::from(regular_vertex(n, j))).collect())
}

/// A normed space the library knows how to differentiate.
#[derive(Clone, Debug, PartialEq)]
pub enum Space {
    Lp { p: f64, n: usize },
    Polygon(Polygon),
    Regular(RegularPolygon),
    Mixed { pos: Piece, neg: Piece },
}

/// Borrowed view of a polygonal unit ball: vertices and edge functionals, edge
/// `i` joining vertex `i` to vertex `i + 1`.
pub(crate) struct Facets<'a> {
    pub vertices: &'a [[f64; 2]],
    pub functionals: &'a [[f64; 2]],
}

impl Facets<'_> {
    fn norm(&self, x: [f64; 2]) -> f64 {
        self.functionals
            .iter()
            .map(|f| f[0] * x[0] + f[1] * x[1])
            .fold(f64::NEG_INFINITY, f64::max)
            .max(0.0)
    }

    /// Indices of edges whose functional attains the norm at `x`, ordered
    /// clockwise edge first.
    fn active(&self, x: [f64; 2]) -> Vec<usize> {
        let norm = self.norm(x);
        let m = self.functionals.len();
        let mut act: Vec<usize> = (0..m)
            .filter(|&i| {
                let f = self.functionals[i];
                f[0] * x[0] + f[1] * x[1] >= norm - tol::EDGE_MEMBERSHIP * norm
            })
            .collect();
        if act.len() == 2 && act[0] == 0 && act[1] == m - 1 {
            act.swap(0, 1);
        }
        act
    }

    fn dual_norm(&self, f: [f64; 2]) -> f64 {
        self.vertices
            .iter()
            .map(|v| (f[0] * v[0] + f[1] * v[1]).abs())
            .fold(0.0, f64::max)
    }

    fn increment(&self, x: [f64; 2], h: [f64; 2]) -> f64 {
        let norm = self.norm(x);
        self.functionals
            .iter()
            .map(|f| {
                let base = f[0] * x[0] + f[1] * x[1] - norm;
                let base = if base >= -tol::EDGE_MEMBERSHIP * norm { 0.0 } else { base };
                base + (f[0] * h[0] + f[1] * h[1])
            })
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

impl Space {
    pub fn lp(p: f64, n: usize) -> Result<Self> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidSpace(format!("exponent p = {p} must lie in [1, ∞]")));
        }
        if n == 0 {
            return Err(Error::InvalidSpace("dimension must be at least 1".into()));
        }
        Ok(Space::Lp { p, n })
    }

    pub fn l1(n: usize) -> Result<Self> {
        Self::lp(1.0, n)
    }

    pub fn linf(n: usize) -> Result<Self> {
        Self::lp(f64::INFINITY, n)
    }

    pub fn polygon(vertices: &[[f64; 2]]) -> Result<Self> {
        Polygon::new(vertices).map(Space::Polygon)
    }

    pub fn regular(n: usize) -> Result<Self> {
        RegularPolygon::new(n).map(Space::Regular)
    }

    pub fn mixed(pos: Piece, neg: Piece) -> Result<Self> {
        Ok(Space::Mixed { pos: pos.canonical()?, neg: neg.canonical()? })
    }

    /// The sum norm on quadrants I/III glued to the max norm on II/IV.
    pub fn l1_linf() -> Self {
        Space::Mixed { pos: Piece::L1, neg: Piece::LInf }
    }

    pub fn dim(&self) -> usize {
        match self {
            Space::Lp { n, .. } => *n,
            _ => 2,
        }
    }

    pub fn is_planar(&self) -> bool {
        self.dim() == 2
    }

    /// Short family tag used in reports and error messages.
    pub fn family(&self) -> String {
        match self {
            Space::Lp { p, n } if *p == 1.0 => format!("l1^{n}"),
            Space::Lp { p, n } if p.is_infinite() => format!("linf^{n}"),
            Space::Lp { p, n } => format!("l{p}^{n}"),
            Space::Polygon(poly) => format!("polygon[{} vertices]", poly.vertices.len()),
            Space::Regular(r) => format!("regular 2n-gon, n = {}", r.n),
            Space::Mixed { pos, neg } => format!("mixed {pos}-{neg}"),
        }
    }

    /// Whether the unit ball is a polygon (finitely many extreme points).
    pub fn is_polyhedral(&self) -> bool {
        match self {
            Space::Lp { p, .. } => *p == 1.0 || p.is_infinite(),
            Space::Polygon(_) | Space::Regular(_) => true,
            Space::Mixed { pos, neg } => pos.is_polyhedral() && neg.is_polyhedral(),
        }
    }

    /// The unit ball as an explicit polygon, for planar polyhedral spaces.
    pub fn to_polygon(&self) -> Option<Polygon> {
        match self {
            Space::Polygon(p) => Some(p.clone()),
            Space::Regular(r) => Polygon::new(&r.vertices).ok(),
            Space::Lp { p, n: 2 } if *p == 1.0 => {
                Polygon::new(&[[1.0, 0.0], [0.0, 1.0]]).ok()
            }
            Space::Lp { p, n: 2 } if p.is_infinite() => {
                Polygon::new(&[[1.0, 1.0], [-1.0, 1.0]]).ok()
            }
            Space::Mixed { pos, neg } if pos.is_polyhedral() && neg.is_polyhedral() => {
                let mut pts = Vec::new();
                for (sx, sy) in [(1.0, 1.0), (-1.0, 1.0)] {
                    let piece = if sx * sy > 0.0 { *pos } else { *neg };
                    pts.push([sx, 0.0]);
                    if piece == Piece::LInf {
                        pts.push([sx, sy]);
                    }
                    pts.push([0.0, sy]);
                }
                Polygon::new(&pts).ok()
            }
            _ => None,
        }
    }

    pub(crate) fn facets(&self) -> Option<Facets<'_>> {
        match self {
            Space::Polygon(p) => Some(Facets { vertices: &p.vertices, functionals: &p.functionals }),
            Space::Regular(r) => Some(Facets { vertices: &r.vertices, functionals: &r.functionals }),
            _ => None,
        }
    }

    pub(crate) fn check_dim(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        if x.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(())
    }

    pub(crate) fn check_nonzero(&self, x: &[f64]) -> Result<()> {
        self.check_dim(x)?;
        if is_zero(x) {
            return Err(Error::ZeroVector);
        }
        Ok(())
    }

    /// `‖x‖`.
    pub fn norm(&self, x: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        Ok(self.eval(x))
    }

    /// Unchecked norm evaluation for internal loops.
    pub(crate) fn eval(&self, x: &[f64]) -> f64 {
        match self {
            Space::Lp { p, .. } => lp_norm(LpKind::of(*p), x),
            Space::Polygon(_) | Space::Regular(_) => self.facets().unwrap().norm(as2(x)),
            Space::Mixed { pos, neg } => {
                let piece = if x[0] * x[1] >= 0.0 { pos } else { neg };
                lp_norm(piece.kind(), x)
            }
        }
    }

    /// `‖x + h‖ − ‖x‖` evaluated without subtracting two nearly equal norms.
    ///
    /// Active-set decisions (ties of the max norm, zero coordinates of the
    /// sum norm, polygon edges attaining the norm, points on a gluing axis)
    /// use the same tolerances as [`Space::ext_supporting_functionals`].
    pub(crate) fn increment(&self, x: &[f64], h: &[f64]) -> f64 {
        match self {
            Space::Lp { p, .. } => lp_increment(LpKind::of(*p), x, h),
            Space::Polygon(_) | Space::Regular(_) => {
                self.facets().unwrap().increment(as2(x), as2(h))
            }
            Space::Mixed { pos, neg } => {
                let xs = snap_axes(as2(x));
                let moved = [xs[0] + h[0], xs[1] + h[1]];
                let piece_of = |v: [f64; 2]| if v[0] * v[1] >= 0.0 { *pos } else { *neg };
                let target = piece_of(moved);
                let here = piece_of(xs);
                let jump = if target == here {
                    0.0
                } else {
                    lp_norm(target.kind(), &xs) - lp_norm(here.kind(), &xs)
                };
                lp_increment(target.kind(), &xs, h) + jump
            }
        }
    }

    /// `‖f‖` in the dual space.
    pub fn dual_norm(&self, f: &[f64]) -> Result<f64> {
        self.check_dim(f)?;
        Ok(match self {
            Space::Lp { p, .. } => match LpKind::of(*p) {
                LpKind::One => lp_norm(LpKind::Inf, f),
                LpKind::Inf => lp_norm(LpKind::One, f),
                LpKind::General(p) => lp_norm(LpKind::General(p / (p - 1.0)), f),
            },
            Space::Polygon(_) | Space::Regular(_) => self.facets().unwrap().dual_norm(as2(f)),
            Space::Mixed { pos, neg } => mixed_dual_norm(*pos, *neg, as2(f)),
        })
    }

    /// The extreme points of `J(x) = {f ∈ S_{X*} : f(x) = ‖x‖}`, exactly.
    ///
    /// Sum norm: every sign completion over the zero coordinates. Max norm:
    /// one signed coordinate functional per coordinate attaining the max.
    /// Polygons: the one or two adjacent edge functionals. Smooth `ℓ_p`: the
    /// gradient. Orthant-mixed: the two one-sided supporting functionals.
    pub fn ext_supporting_functionals(&self, x: &[f64]) -> Result<Vec<DualFunctional>> {
        self.check_nonzero(x)?;
        Ok(match self {
            Space::Lp { p, .. } => lp_ext(LpKind::of(*p), x)?,
            Space::Polygon(_) | Space::Regular(_) => {
                let facets = self.facets().unwrap();
                facets
                    .active(as2(x))
                    .into_iter()
                    .map(|i| DualFunctional::from(facets.functionals[i]))
                    .collect()
            }
            Space::Mixed { pos, neg } => {
                let mut out: Vec<DualFunctional> = Vec::with_capacity(2);
                for side in [-1.0, 1.0] {
                    let f = DualFunctional::from(mixed_one_sided(*pos, *neg, as2(x), side));
                    if !out.iter().any(|g| g.approx_eq(&f, tol::FUNCTIONAL_DEDUP)) {
                        out.push(f);
                    }
                }
                out
            }
        })
    }

    /// `(min, max)` of `f(y)` over `f ∈ Ext(J(x))`, without enumerating the
    /// sum-norm sign completions.
    pub(crate) fn functional_range(&self, x: &[f64], y: &[f64]) -> Result<(f64, f64)> {
        self.check_nonzero(x)?;
        self.check_dim(y)?;
        if let Space::Lp { p, .. } = self {
            if *p == 1.0 {
                let zero = tol::ACTIVE_SET * lp_norm(LpKind::One, x);
                let mut fixed = 0.0;
                let mut free = 0.0;
                for (xi, yi) in x.iter().zip(y) {
                    if xi.abs() <= zero {
                        free += yi.abs();
                    } else {
                        fixed += sgn(*xi) * yi;
                    }
                }
                return Ok((fixed - free, fixed + free));
            }
        }
        let funcs = self.ext_supporting_functionals(x)?;
        Ok(funcs.iter().map(|f| f.apply(y)).fold(
            (f64::INFINITY, f64::NEG_INFINITY),
            |(lo, hi), v| (lo.min(v), hi.max(v)),
        ))
    }

    /// `(cos θ, sin θ)/‖(cos θ, sin θ)‖`.
    pub fn sphere_point_2d(&self, theta: f64) -> Result<Vector> {
        if !self.is_planar() {
            return Err(Error::NotPlanar);
        }
        Ok(Vector::from(self.sphere_at(theta)))
    }

    pub(crate) fn sphere_at(&self, theta: f64) -> [f64; 2] {
        let u = [theta.cos(), theta.sin()];
        let r = self.eval(&u);
        [u[0] / r, u[1] / r]
    }

    /// Scales `x` onto the unit sphere.
    pub fn normalize(&self, x: &[f64]) -> Result<Vector> {
        self.check_nonzero(x)?;
        let r = self.eval(x);
        Ok(x.iter().map(|c| c / r).collect::<Vec<_>>().into())
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.family())
    }
}

fn lp_norm(kind: LpKind, x: &[f64]) -> f64 {
    match kind {
        LpKind::One => x.iter().map(|c| c.abs()).sum(),
        LpKind::Inf => x.iter().fold(0.0, |m, c| m.max(c.abs())),
        LpKind::General(p) => {
            let m = x.iter().fold(0.0f64, |m, c| m.max(c.abs()));
            if m == 0.0 {
                return 0.0;
            }
            let s: f64 = x.iter().map(|c| (c.abs() / m).powf(p)).sum();
            m * s.powf(1.0 / p)
        }
    }
}

/// `|a + h| − |a|`, exact whenever `a + h` keeps the sign of `a`.
fn abs_increment(a: f64, h: f64, zero: f64) -> f64 {
    if a.abs() <= zero {
        h.abs()
    } else if a * (a + h) > 0.0 {
        sgn(a) * h
    } else {
        (a + h).abs() - a.abs()
    }
}

fn lp_increment(kind: LpKind, x: &[f64], h: &[f64]) -> f64 {
    match kind {
        LpKind::One => {
            let zero = tol::ACTIVE_SET * lp_norm(LpKind::One, x);
            x.iter().zip(h).map(|(&a, &b)| abs_increment(a, b, zero)).sum()
        }
        LpKind::Inf => {
            let m = lp_norm(LpKind::Inf, x);
            if m == 0.0 {
                return lp_norm(LpKind::Inf, h);
            }
            x.iter()
                .zip(h)
                .map(|(&a, &b)| {
                    let gap = a.abs() - m;
                    let gap = if gap >= -tol::ACTIVE_SET * m { 0.0 } else { gap };
                    gap + abs_increment(a, b, 0.0)
                })
                .fold(f64::NEG_INFINITY, f64::max)
        }
        LpKind::General(p) => {
            let m = lp_norm(LpKind::Inf, x);
            if m == 0.0 {
                return lp_norm(kind, h);
            }
            let mut s = 0.0;
            let mut ds = 0.0;
            for (&a, &b) in x.iter().zip(h) {
                let (a, b) = (a / m, b / m);
                let base = a.abs().powf(p);
                s += base;
                ds += if a != 0.0 && a * (a + b) > 0.0 {
                    base * (p * (b / a).ln_1p()).exp_m1()
                } else {
                    (a + b).abs().powf(p) - base
                };
            }
            m * s.powf(1.0 / p) * ((ds / s).ln_1p() / p).exp_m1()
        }
    }
}

fn lp_ext(kind: LpKind, x: &[f64]) -> Result<Vec<DualFunctional>> {
    let n = x.len();
    Ok(match kind {
        LpKind::One => {
            let zero = tol::ACTIVE_SET * lp_norm(LpKind::One, x);
            let free: Vec<usize> = (0..n).filter(|&i| x[i].abs() <= zero).collect();
            if free.len() > 20 {
                return Err(Error::SupportTooLarge(free.len()));
            }
            let base: Vec<f64> = x.iter().map(|&c| if c.abs() <= zero { 0.0 } else { sgn(c) }).collect();
            (0..1usize << free.len())
                .map(|mask| {
                    let mut u = base.clone();
                    for (bit, &i) in free.iter().enumerate() {
                        u[i] = if mask >> bit & 1 == 1 { -1.0 } else { 1.0 };
                    }
                    DualFunctional::new(u)
                })
                .collect()
        }
        LpKind::Inf => {
            let m = lp_norm(LpKind::Inf, x);
            (0..n)
                .filter(|&i| x[i].abs() >= m - tol::ACTIVE_SET * m)
                .map(|i| {
                    let mut u = vec![0.0; n];
                    u[i] = sgn(x[i]);
                    DualFunctional::new(u)
                })
                .collect()
        }
        LpKind::General(p) => vec![DualFunctional::new(lp_gradient(p, x))],
    })
}

fn lp_gradient(p: f64, x: &[f64]) -> Vec<f64> {
    let r = lp_norm(LpKind::General(p), x);
    x.iter().map(|&c| sgn(c) * (c.abs() / r).powf(p - 1.0)).collect()
}

fn snap_axes(x: [f64; 2]) -> [f64; 2] {
    let m = x[0].abs().max(x[1].abs());
    let snap = |c: f64| if c.abs() <= tol::ACTIVE_SET * m { 0.0 } else { c };
    [snap(x[0]), snap(x[1])]
}

/// Supporting functional of the mixed norm at `x`, on the counterclockwise
/// (`side = 1`) or clockwise (`side = −1`) side of `x` along the sphere.
fn mixed_one_sided(pos: Piece, neg: Piece, x: [f64; 2], side: f64) -> [f64; 2] {
    let x = snap_axes(x);
    let dir = [-side * x[1], side * x[0]];
    // signs of x + ε·dir for small ε > 0
    let s = [
        if x[0] != 0.0 { sgn(x[0]) } else { sgn(dir[0]) },
        if x[1] != 0.0 { sgn(x[1]) } else { sgn(dir[1]) },
    ];
    let piece = if s[0] * s[1] > 0.0 { pos } else { neg };
    match piece.kind() {
        LpKind::One => s,
        LpKind::Inf => {
            let m = x[0].abs().max(x[1].abs());
            let act: Vec<usize> = (0..2).filter(|&i| x[i].abs() >= m - tol::ACTIVE_SET * m).collect();
            let i = if act.len() == 1 {
                act[0]
            } else {
                // at a corner the coordinate that keeps growing stays active
                if sgn(x[0]) * dir[0] > 0.0 {
                    0
                } else {
                    1
                }
            };
            let mut u = [0.0; 2];
            u[i] = sgn(x[i]);
            u
        }
        LpKind::General(p) => {
            let g = lp_gradient(p, &x);
            [g[0], g[1]]
        }
    }
}

fn mixed_dual_norm(pos: Piece, neg: Piece, f: [f64; 2]) -> f64 {
    let mut best: f64 = 0.0;
    for s in [[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]] {
        let piece = if s[0] * s[1] > 0.0 { pos } else { neg };
        let mut cands = vec![[s[0], 0.0], [0.0, s[1]]];
        match piece.kind() {
            LpKind::One => {}
            LpKind::Inf => cands.push(s),
            LpKind::General(p) => {
                let q = p / (p - 1.0);
                let fq = lp_norm(LpKind::General(q), &f);
                if fq > 0.0 {
                    let z: Vec<f64> =
                        f.iter().map(|&c| sgn(c) * (c.abs() / fq).powf(q - 1.0)).collect();
                    if z[0] * s[0] >= 0.0 && z[1] * s[1] >= 0.0 {
                        best = best.max(fq);
                    }
                }
            }
        }
        for c in cands {
            best = best.max(dot(&f, &c));
        }
    }
    best
}
