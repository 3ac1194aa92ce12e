//! Tolerances shared across the crate.
//!
//! Every zero test and active-set decision goes through one of these, so the
//! exact and numeric paths agree on what "on an edge" or "a tie" means.

/// Relative tolerance for deciding that a polygon edge functional attains the
/// norm at a point (edge membership).
pub const EDGE_MEMBERSHIP: f64 = 1e-10;

/// Relative tolerance for coordinate ties in the max norm and for zero
/// coordinates in the sum norm.
pub const ACTIVE_SET: f64 = 1e-12;

/// Relative tolerance `ε_orth` for orthogonality zero tests, scaled by
/// `‖x‖·‖y‖`.
pub const ORTHOGONALITY: f64 = 1e-9;

/// Functionals of an exact family are unit and attain `‖x‖` to this accuracy.
pub const DUAL_EXACT: f64 = 1e-12;

/// Relative convergence threshold of the numeric difference-quotient ladder.
pub const NUMERIC_CERTIFICATION: f64 = 1e-6;

/// Two dual functionals closer than this (max coordinate difference) are the
/// same functional.
pub const FUNCTIONAL_DEDUP: f64 = 1e-12;

/// Randomized symmetry oracles accept `|ρ'(y, x)| ≤ SYMMETRY_ORACLE·‖y‖‖x‖`.
pub const SYMMETRY_ORACLE: f64 = 1e-8;

/// Root acceptance for the α-left scan, relative to `‖αx + y‖·‖x‖`.
pub const ALPHA_ROOT: f64 = 1e-10;

/// Allowed monotonicity violation along the unit sphere.
pub const MONOTONE: f64 = 1e-9;
