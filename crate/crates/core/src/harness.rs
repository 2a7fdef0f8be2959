//! Verification campaigns.
//!
//! * [`sweep_grid`] checks the classifier against numeric evaluation of both
//!   bounds on an integer `(δ, Δ)` grid crossed with `α = k / steps`.
//! * [`verify_graph`] computes `λ1(A_α)` for a concrete graph and checks it
//!   against both lower bounds.
//! * [`certify_star_equality`] checks that stars attain `g` and a fixed set of
//!   connected non-stars exceed it strictly.

use serde::{Deserialize, Serialize};

use crate::alpha_matrix::AlphaMatrix;
use crate::bounds::{self, BoundComparison, BoundOrdering, DEFAULT_EPSILON};
use crate::graph::Graph;
use crate::spectral::{self, Method};
use crate::{Error, Result};

/// Absolute slack for `λ1 ≥ bound` and for `λ1 = g` on stars.
pub const BOUND_TOL: f64 = 1e-8;
/// Minimum `λ1 − g` required of connected non-stars.
pub const STRICT_MARGIN: f64 = 1e-6;
/// α values at which non-star strictness is certified. At `α = 1` every
/// graph with an edge has `λ1 = Δ = g`, so it is left out.
pub const STRICT_ALPHAS: [f64; 4] = [0.0, 0.25, 0.5, 0.75];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    #[serde(rename = "delta")]
    pub min_degree: u32,
    #[serde(rename = "Delta")]
    pub max_degree: u32,
    pub alpha: f64,
    #[serde(rename = "f")]
    pub f_value: f64,
    #[serde(rename = "g")]
    pub g_value: f64,
    #[serde(rename = "diff")]
    pub difference: f64,
    #[serde(rename = "symbolic")]
    pub symbolic_ordering: BoundOrdering,
    #[serde(rename = "numeric")]
    pub numeric_ordering: BoundOrdering,
    pub witness: String,
    pub consistent: bool,
}

impl From<BoundComparison> for SweepRecord {
    fn from(c: BoundComparison) -> Self {
        SweepRecord {
            min_degree: c.min_degree,
            max_degree: c.max_degree,
            alpha: c.alpha,
            f_value: c.f_value,
            g_value: c.g_value,
            difference: c.difference,
            symbolic_ordering: c.ordering,
            numeric_ordering: c.numeric_ordering,
            witness: c.witness.to_string(),
            consistent: c.is_consistent(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub greater: usize,
    pub equal: usize,
    pub less: usize,
    pub inconsistent: usize,
}

impl SweepSummary {
    pub fn total(&self) -> usize {
        self.greater + self.equal + self.less
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub records: Vec<SweepRecord>,
    pub summary: SweepSummary,
}

/// Grid `α = k / alpha_steps`, `k = 0..=alpha_steps`. Both endpoints are exact.
pub fn alpha_grid(alpha_steps: u32) -> impl Iterator<Item = f64> {
    (0..=alpha_steps).map(move |k| f64::from(k) / f64::from(alpha_steps))
}

/// Every `0 ≤ δ ≤ min(Δ, delta_max)`, `δ ≤ Δ ≤ max_degree_max`, `α` on the
/// grid, in `(δ, Δ, α)` order.
pub fn sweep_grid(delta_max: u32, max_degree_max: u32, alpha_steps: u32) -> Result<Sweep> {
    if delta_max > max_degree_max {
        return Err(Error::input(format!(
            "delta-max {delta_max} exceeds Delta-max {max_degree_max}"
        )));
    }
    if alpha_steps == 0 {
        return Err(Error::input("alpha-steps must be at least 1"));
    }
    let alphas: Vec<f64> = alpha_grid(alpha_steps).collect();
    let mut records = Vec::new();
    let mut summary = SweepSummary::default();
    for min_degree in 0..=delta_max {
        for max_degree in min_degree..=max_degree_max {
            for &alpha in &alphas {
                let c = BoundComparison::evaluate(min_degree, max_degree, alpha, DEFAULT_EPSILON)?;
                match c.ordering {
                    BoundOrdering::Greater => summary.greater += 1,
                    BoundOrdering::Equal => summary.equal += 1,
                    BoundOrdering::Less => summary.less += 1,
                }
                if !c.is_consistent() {
                    summary.inconsistent += 1;
                }
                records.push(SweepRecord::from(c));
            }
        }
    }
    Ok(Sweep { records, summary })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub graph_id: String,
    pub n: usize,
    #[serde(rename = "m")]
    pub edge_count: usize,
    #[serde(rename = "Delta")]
    pub max_degree: u32,
    #[serde(rename = "delta")]
    pub min_degree: u32,
    pub alpha: f64,
    pub lambda1: f64,
    #[serde(rename = "f")]
    pub f_value: f64,
    #[serde(rename = "g")]
    pub g_value: f64,
    pub f_holds: bool,
    pub g_holds: bool,
    pub g_equality: bool,
    pub is_star: bool,
    pub is_connected: bool,
}

impl VerificationRecord {
    /// Describes the violated bound, if any. `g` is only required of graphs
    /// with at least one edge: for `Δ = 0`, `g = α > 0 = λ1`.
    pub fn violation(&self) -> Option<String> {
        let which = if !self.f_holds {
            format!("lambda1 = {} < f = {}", self.lambda1, self.f_value)
        } else if self.edge_count >= 1 && !self.g_holds {
            format!("lambda1 = {} < g = {}", self.lambda1, self.g_value)
        } else {
            return None;
        };
        Some(format!(
            "{} at alpha = {}: {which}",
            self.graph_id, self.alpha
        ))
    }
}

/// One record per `α`. Bound violations are reported in the records, not
/// as errors; see [`check_verification`].
pub fn verify_graph(
    g: &Graph,
    graph_id: &str,
    alphas: &[f64],
    method: Option<Method>,
) -> Result<Vec<VerificationRecord>> {
    if g.n() < 2 {
        return Err(Error::input(format!(
            "{graph_id}: bound verification needs n >= 2, got n = {}",
            g.n()
        )));
    }
    let profile = g.degree_profile()?;
    let is_star = g.is_star();
    let is_connected = g.is_connected()?;
    alphas
        .iter()
        .map(|&alpha| {
            let m = AlphaMatrix::build(g, alpha)?;
            let lambda1 = spectral::spectral_radius(&m, method)
                .map_err(|e| Error::Spectral {
                    graph_id: graph_id.to_string(),
                    source: Box::new(e),
                })?
                .lambda1;
            let f_value = bounds::bound_f(profile.min_degree, profile.max_degree, alpha)?;
            let g_value = bounds::bound_g(profile.max_degree, alpha);
            Ok(VerificationRecord {
                graph_id: graph_id.to_string(),
                n: g.n(),
                edge_count: g.edge_count(),
                max_degree: profile.max_degree,
                min_degree: profile.min_degree,
                alpha,
                lambda1,
                f_value,
                g_value,
                f_holds: lambda1 >= f_value - BOUND_TOL,
                g_holds: lambda1 >= g_value - BOUND_TOL,
                g_equality: (lambda1 - g_value).abs() <= BOUND_TOL,
                is_star,
                is_connected,
            })
        })
        .collect()
}

/// Fails with [`Error::Violation`] if any record violates a bound.
pub fn check_verification(records: &[VerificationRecord]) -> Result<()> {
    let violations: Vec<String> = records.iter().filter_map(|r| r.violation()).collect();
    match violations.first() {
        None => Ok(()),
        Some(first) => Err(Error::Violation {
            count: violations.len(),
            first: first.clone(),
        }),
    }
}

/// Connected non-star graphs used for the strictness half of the star
/// certification.
pub fn non_star_set() -> Vec<(&'static str, Graph)> {
    vec![
        ("C4", Graph::cycle(4).expect("valid")),
        ("C5", Graph::cycle(5).expect("valid")),
        ("K4", Graph::complete(4).expect("valid")),
        ("P4", Graph::path(4).expect("valid")),
        ("K2,3", Graph::complete_bipartite(2, 3).expect("valid")),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StarCertificate {
    pub stars_checked: usize,
    /// Largest `|λ1(K_{1,Δ}) − g(Δ, α)|` seen.
    pub max_star_deviation: f64,
    pub non_star_checks: usize,
    /// Smallest `λ1 − g` over the non-star set.
    pub min_strict_margin: f64,
}

pub fn certify_star_equality(max_degree_max: u32, alpha_steps: u32) -> Result<StarCertificate> {
    if max_degree_max < 1 {
        return Err(Error::input("Delta-max must be at least 1"));
    }
    if alpha_steps == 0 {
        return Err(Error::input("alpha-steps must be at least 1"));
    }
    let mut offenders = Vec::new();
    let mut cert = StarCertificate {
        stars_checked: 0,
        max_star_deviation: 0.0,
        non_star_checks: 0,
        min_strict_margin: f64::INFINITY,
    };

    for d in 1..=max_degree_max {
        let star = Graph::star(d as usize + 1)?;
        for alpha in alpha_grid(alpha_steps) {
            let lambda1 = lambda1_of(&star, alpha, &format!("K1,{d}"))?;
            let deviation = (lambda1 - bounds::bound_g(d, alpha)).abs();
            cert.stars_checked += 1;
            cert.max_star_deviation = cert.max_star_deviation.max(deviation);
            if deviation > BOUND_TOL {
                offenders.push(format!(
                    "K1,{d} at alpha = {alpha}: |lambda1 - g| = {deviation:e}"
                ));
            }
        }
    }

    for (name, g) in non_star_set() {
        debug_assert!(!g.is_star() && g.is_connected().unwrap_or(false));
        let max_degree = g.degree_profile()?.max_degree;
        for alpha in STRICT_ALPHAS {
            let margin = lambda1_of(&g, alpha, name)? - bounds::bound_g(max_degree, alpha);
            cert.non_star_checks += 1;
            cert.min_strict_margin = cert.min_strict_margin.min(margin);
            if margin <= STRICT_MARGIN {
                offenders.push(format!(
                    "{name} at alpha = {alpha}: lambda1 - g = {margin:e}"
                ));
            }
        }
    }

    match offenders.first() {
        None => Ok(cert),
        Some(first) => Err(Error::Violation {
            count: offenders.len(),
            first: first.clone(),
        }),
    }
}

fn lambda1_of(g: &Graph, alpha: f64, graph_id: &str) -> Result<f64> {
    let m = AlphaMatrix::build(g, alpha)?;
    spectral::spectral_radius(&m, None)
        .map(|r| r.lambda1)
        .map_err(|e| Error::Spectral {
            graph_id: graph_id.to_string(),
            source: Box::new(e),
        })
}
