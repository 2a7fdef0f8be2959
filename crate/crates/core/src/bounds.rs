//! Closed-form lower bounds on `λ1(A_α)` and their exact comparison.
//!
//! ```text
//! g(Δ, α)    = ½ (α(Δ+1) + √(α²(Δ+1)² + 4Δ(1−2α)))
//! f(δ, Δ, α) = ½ (α(Δ+δ) + √(α²(Δ−δ)² + 4Δ(1−α)²))
//! ```
//!
//! The radicand of `g` equals `α²(Δ−1)² + 4Δ(1−α)²`, a sum of nonnegative
//! terms; [`bound_g`] evaluates that form so rounding can never push it
//! below zero. [`sqrt_arg_identity`] returns both forms for cross-checking.
//!
//! [`classify`] decides `f` vs `g` symbolically from `(δ, Δ, α)` alone;
//! [`compare_numeric`] evaluates both bounds and fails loudly if the sign
//! of `f − g` ever disagrees with the classifier.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{AlphaDomain, Error, Result};

/// Threshold separating "equal" from a strict ordering in numeric comparisons.
pub const DEFAULT_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundOrdering {
    Greater,
    Equal,
    Less,
}

impl BoundOrdering {
    /// Ordering of `difference` against zero with a dead band of `epsilon`.
    pub fn from_difference(difference: f64, epsilon: f64) -> Self {
        if difference > epsilon {
            BoundOrdering::Greater
        } else if difference < -epsilon {
            BoundOrdering::Less
        } else {
            BoundOrdering::Equal
        }
    }
}

impl fmt::Display for BoundOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for BoundOrdering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Greater" => Ok(BoundOrdering::Greater),
            "Equal" => Ok(BoundOrdering::Equal),
            "Less" => Ok(BoundOrdering::Less),
            other => Err(Error::input(format!("unknown ordering {other:?}"))),
        }
    }
}

/// The condition that decided a classification.
///
/// Where two conditions hold at once (e.g. `δ = 1, α = 0`) the earlier
/// variant in [`classify`]'s decision order is reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Witness {
    /// `δ ≥ 2` and `α ∉ {0, 1}`: `f > g`.
    MinDegreeAtLeastTwo,
    /// `α = 0`: both bounds collapse to `√Δ`.
    AlphaZero,
    /// `α = 1`, `Δ ≥ 1`: both bounds equal `Δ`.
    AlphaOne,
    /// `δ = 1`: `f(1, Δ, α)` and `g(Δ, α)` are the same expression.
    MinDegreeOne,
    /// `δ = 0`, `α ∉ {0, 1}`: an isolated vertex reverses the ordering.
    IsolatedVertex,
    /// `Δ = 0`, `α ≠ 0`: `f = 0 < α = g`.
    Edgeless,
}

impl Witness {
    pub const ALL: [Witness; 6] = [
        Witness::MinDegreeAtLeastTwo,
        Witness::AlphaZero,
        Witness::AlphaOne,
        Witness::MinDegreeOne,
        Witness::IsolatedVertex,
        Witness::Edgeless,
    ];

    pub fn ordering(self) -> BoundOrdering {
        match self {
            Witness::MinDegreeAtLeastTwo => BoundOrdering::Greater,
            Witness::AlphaZero | Witness::AlphaOne | Witness::MinDegreeOne => BoundOrdering::Equal,
            Witness::IsolatedVertex | Witness::Edgeless => BoundOrdering::Less,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Witness::MinDegreeAtLeastTwo => "δ≥2 ∧ α∉{0,1}",
            Witness::AlphaZero => "α=0",
            Witness::AlphaOne => "α=1 ∧ Δ≠0",
            Witness::MinDegreeOne => "δ=1",
            Witness::IsolatedVertex => "δ=0 ∧ α∉{0,1}",
            Witness::Edgeless => "Δ=0 ∧ α≠0",
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Witness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Witness::ALL
            .into_iter()
            .find(|w| w.as_str() == s)
            .ok_or_else(|| Error::input(format!("unknown witness {s:?}")))
    }
}

/// Validated `(δ, Δ, α)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundInputs {
    pub min_degree: u32,
    pub max_degree: u32,
    pub alpha: f64,
}

impl BoundInputs {
    pub fn new(min_degree: u32, max_degree: u32, alpha: f64, domain: AlphaDomain) -> Result<Self> {
        check_degrees(min_degree, max_degree)?;
        let alpha = domain.check(alpha)?;
        Ok(BoundInputs {
            min_degree,
            max_degree,
            alpha,
        })
    }

    pub fn f(&self) -> f64 {
        f_unchecked(self.min_degree, self.max_degree, self.alpha)
    }

    pub fn g(&self) -> f64 {
        bound_g(self.max_degree, self.alpha)
    }
}

fn check_degrees(min_degree: u32, max_degree: u32) -> Result<()> {
    if min_degree > max_degree {
        Err(Error::input(format!(
            "min degree {min_degree} exceeds max degree {max_degree}"
        )))
    } else {
        Ok(())
    }
}

/// `g(Δ, α) = ½(α(Δ+1) + √(α²(Δ−1)² + 4Δ(1−α)²))`.
pub fn bound_g(max_degree: u32, alpha: f64) -> f64 {
    let d = f64::from(max_degree);
    let radicand = alpha * alpha * (d - 1.0) * (d - 1.0) + 4.0 * d * (1.0 - alpha) * (1.0 - alpha);
    0.5 * (alpha * (d + 1.0) + radicand.sqrt())
}

/// `f(δ, Δ, α) = ½(α(Δ+δ) + √(α²(Δ−δ)² + 4Δ(1−α)²))`.
pub fn bound_f(min_degree: u32, max_degree: u32, alpha: f64) -> Result<f64> {
    check_degrees(min_degree, max_degree)?;
    Ok(f_unchecked(min_degree, max_degree, alpha))
}

fn f_unchecked(min_degree: u32, max_degree: u32, alpha: f64) -> f64 {
    let d = f64::from(max_degree);
    let m = f64::from(min_degree);
    let radicand = alpha * alpha * (d - m) * (d - m) + 4.0 * d * (1.0 - alpha) * (1.0 - alpha);
    0.5 * (alpha * (d + m) + radicand.sqrt())
}

/// Both forms of `g`'s radicand:
/// `(α²(Δ+1)² + 4Δ(1−2α), α²(Δ−1)² + 4Δ(1−α)²)`.
pub fn sqrt_arg_identity(max_degree: u32, alpha: f64) -> (f64, f64) {
    let d = f64::from(max_degree);
    let lhs = alpha * alpha * (d + 1.0) * (d + 1.0) + 4.0 * d * (1.0 - 2.0 * alpha);
    let rhs = alpha * alpha * (d - 1.0) * (d - 1.0) + 4.0 * d * (1.0 - alpha) * (1.0 - alpha);
    (lhs, rhs)
}

/// Symbolic comparison of `f(δ, Δ, α)` with `g(Δ, α)`; no floating-point
/// evaluation of either bound is involved.
///
/// | ordering | condition |
/// |----------|-----------|
/// | `Greater` | `δ ≥ 2` and `α ∉ {0, 1}` |
/// | `Equal` | `α = 0`, or `α = 1` and `Δ ≥ 1`, or `δ = 1` |
/// | `Less` | `δ = 0` and `α ∉ {0, 1}`, or `Δ = 0` and `α ≠ 0` |
///
/// Only `α ∈ [0, 1]` is classified, even in permissive mode.
pub fn classify(min_degree: u32, max_degree: u32, alpha: f64) -> Result<(BoundOrdering, Witness)> {
    check_degrees(min_degree, max_degree)?;
    AlphaDomain::Unit.check(alpha)?;

    let witness = if alpha == 0.0 {
        Witness::AlphaZero
    } else if alpha == 1.0 && max_degree >= 1 {
        Witness::AlphaOne
    } else if max_degree == 0 {
        Witness::Edgeless
    } else if min_degree == 1 {
        Witness::MinDegreeOne
    } else if min_degree == 0 {
        Witness::IsolatedVertex
    } else {
        // δ ≥ 2 forces Δ ≥ 2, so α = 1 was caught above
        Witness::MinDegreeAtLeastTwo
    };
    Ok((witness.ordering(), witness))
}

/// Numeric and symbolic comparison of the two bounds at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundComparison {
    pub min_degree: u32,
    pub max_degree: u32,
    pub alpha: f64,
    pub f_value: f64,
    pub g_value: f64,
    /// `f − g`.
    pub difference: f64,
    /// Classifier verdict.
    pub ordering: BoundOrdering,
    /// Sign of `difference` with the dead band used for this comparison.
    pub numeric_ordering: BoundOrdering,
    pub witness: Witness,
}

impl BoundComparison {
    /// Evaluates both routes without treating a disagreement as an error.
    pub fn evaluate(min_degree: u32, max_degree: u32, alpha: f64, epsilon: f64) -> Result<Self> {
        if epsilon.is_nan() || epsilon <= 0.0 {
            return Err(Error::input(format!(
                "epsilon must be positive, got {epsilon}"
            )));
        }
        let (ordering, witness) = classify(min_degree, max_degree, alpha)?;
        let f_value = f_unchecked(min_degree, max_degree, alpha);
        let g_value = bound_g(max_degree, alpha);
        let difference = f_value - g_value;
        Ok(BoundComparison {
            min_degree,
            max_degree,
            alpha,
            f_value,
            g_value,
            difference,
            ordering,
            numeric_ordering: BoundOrdering::from_difference(difference, epsilon),
            witness,
        })
    }

    pub fn is_consistent(&self) -> bool {
        self.ordering == self.numeric_ordering
    }
}

/// Like [`BoundComparison::evaluate`], but a numeric/symbolic mismatch is
/// an [`Error::Consistency`].
pub fn compare_numeric(
    min_degree: u32,
    max_degree: u32,
    alpha: f64,
    epsilon: f64,
) -> Result<BoundComparison> {
    let c = BoundComparison::evaluate(min_degree, max_degree, alpha, epsilon)?;
    if c.is_consistent() {
        Ok(c)
    } else {
        Err(Error::Consistency {
            min_degree,
            max_degree,
            alpha,
            difference: c.difference,
            numeric: c.numeric_ordering,
            symbolic: c.ordering,
        })
    }
}
