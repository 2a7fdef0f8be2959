//! # aalpha
//!
//! The `A_α = αD + (1 − α)A` matrix family of a simple graph, two closed-form
//! lower bounds on its spectral radius, and an exact classifier deciding
//! which of the two bounds is larger.
//!
//! With `Δ`, `δ` the maximum and minimum degree:
//!
//! ```text
//! g(Δ, α)    = ½ (α(Δ+1) + √(α²(Δ+1)² + 4Δ(1−2α)))
//! f(δ, Δ, α) = ½ (α(Δ+δ) + √(α²(Δ−δ)² + 4Δ(1−α)²))
//! ```
//!
//! `f > g` exactly when `δ ≥ 2` and `α ∉ {0, 1}`; `f = g` when `α = 0`,
//! `α = 1` with `Δ ≥ 1`, or `δ = 1`; otherwise `f < g` (isolated vertices
//! reverse the ordering).
//!
//! ## Modules
//!
//! | Module | Purpose |
//! |--------|---------|
//! | [`graph`] | simple graphs, degree profiles, generators, edge-list files |
//! | [`graph6`] | graph6 short-form parse/emit |
//! | [`alpha_matrix`] | dense `A_α` and its matrix–vector product |
//! | [`spectral`] | `λ1(A_α)` by cyclic Jacobi and by shifted power iteration |
//! | [`bounds`] | `f`, `g`, the square-root identity, the classifier |
//! | [`harness`] | grid sweeps, graph verification, star certification |
//! | [`report`] | CSV / JSON report emission and reading |
//!
//! ## Quick start
//!
//! ```rust
//! use aalpha::{bounds, graph::Graph, alpha_matrix::AlphaMatrix, spectral};
//!
//! let star = Graph::star(5).unwrap();
//! let m = AlphaMatrix::build(&star, 0.5).unwrap();
//! let rho = spectral::spectral_radius(&m, None).unwrap();
//! assert!((rho.lambda1 - bounds::bound_g(4, 0.5)).abs() < 1e-10);
//!
//! let (ordering, _) = bounds::classify(0, 3, 0.5).unwrap();
//! assert_eq!(ordering, bounds::BoundOrdering::Less);
//! ```

pub mod alpha_matrix;
pub mod bounds;
pub mod cli;
mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod report;
pub mod spectral;

pub use error::{Error, Result};

/// Domain accepted for `α`.
///
/// The matrix family is defined on `[0, 1]`; [`AlphaDomain::Permissive`]
/// widens it to `α ≥ 0` for closed-form evaluation and matrix construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AlphaDomain {
    #[default]
    Unit,
    Permissive,
}

impl AlphaDomain {
    /// Environment variable that switches the CLI to the permissive domain.
    pub const ENV_VAR: &'static str = "AALPHA_PERMISSIVE";

    pub fn from_env() -> Self {
        match std::env::var(Self::ENV_VAR) {
            Ok(v) if v == "1" => AlphaDomain::Permissive,
            _ => AlphaDomain::Unit,
        }
    }

    pub fn check(self, alpha: f64) -> Result<f64> {
        let ok = match self {
            AlphaDomain::Unit => (0.0..=1.0).contains(&alpha),
            AlphaDomain::Permissive => alpha >= 0.0 && alpha.is_finite(),
        };
        if ok {
            Ok(alpha)
        } else {
            Err(Error::input(match self {
                AlphaDomain::Unit => format!("alpha must lie in [0, 1], got {alpha}"),
                AlphaDomain::Permissive => format!("alpha must be finite and >= 0, got {alpha}"),
            }))
        }
    }
}
