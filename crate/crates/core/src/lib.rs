//! Norm derivatives, Birkhoff-James and ρ-orthogonality in finite-dimensional
//! normed spaces, the constant
//! `Γ(X) = sup { |ρ'(x, y)| : x, y ∈ S_X, x ⊥_B y }` and its companions, and
//! exact ρ-symmetry classifiers for `ℓ₁ⁿ` and `ℓ∞ⁿ`.
//!
//! ```
//! use rhogeom::{gamma::gamma_polyhedral_2d, spaces::Space};
//!
//! let octagon = Space::regular(4).unwrap();
//! let g = gamma_polyhedral_2d(&octagon).unwrap();
//! assert!((g.value - 1.0 / (2.0 * 2f64.sqrt())).abs() < 1e-9);
//! ```

pub mod cones2d;
pub mod derivatives;
pub mod error;
pub mod exec;
pub mod gamma;
pub mod spaces;
pub mod symmetry;
pub mod tol;
pub mod vector;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
pub use spaces::{Piece, Polygon, Space};
pub use vector::{DualFunctional, Vector};
