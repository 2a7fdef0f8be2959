//! Dense `A_α = αD + (1 − α)A`.

use std::fmt::Write as _;

use crate::graph::Graph;
use crate::{AlphaDomain, Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct AlphaMatrix {
    n: usize,
    alpha: f64,
    entries: Vec<f64>,
    max_degree: u32,
}

impl AlphaMatrix {
    /// Builds `A_α` for `α ∈ [0, 1]`.
    pub fn build(g: &Graph, alpha: f64) -> Result<Self> {
        Self::build_in(g, alpha, AlphaDomain::Unit)
    }

    pub fn build_in(g: &Graph, alpha: f64, domain: AlphaDomain) -> Result<Self> {
        let alpha = domain.check(alpha)?;
        let n = g.n();
        if n == 0 {
            return Err(Error::input("A_alpha of the empty graph is undefined"));
        }
        let off = 1.0 - alpha;
        let mut entries = vec![0.0; n * n];
        let mut max_degree = 0;
        for u in 0..n {
            let d = g.degree(u);
            max_degree = max_degree.max(d as u32);
            entries[u * n + u] = alpha * d as f64;
            for v in g.neighbors(u) {
                entries[u * n + v] = off;
            }
        }
        Ok(AlphaMatrix {
            n,
            alpha,
            entries,
            max_degree,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Maximum degree `Δ` of the source graph.
    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Row-major copy of the entries.
    pub fn to_dense(&self) -> Vec<f64> {
        self.entries.clone()
    }

    /// Row sums computed from the stored entries.
    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn matvec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.n {
            return Err(Error::input(format!(
                "vector length {} does not match matrix dimension {}",
                v.len(),
                self.n
            )));
        }
        Ok(self.matvec_unchecked(v))
    }

    pub(crate) fn matvec_unchecked(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }

    /// One row per line, comma separated, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|&x| fmt_real(x)).collect();
            writeln!(out, "{}", row.join(",")).expect("writing to a String");
        }
        out
    }
}

/// Formats a real in scientific notation with 17 significant digits.
pub fn fmt_real(x: f64) -> String {
    let mut out = String::new();
    write_real(&mut out, x);
    out
}

/// Appends `x` with 17 significant digits: the shortest round-trip digits,
/// zero-padded, so parsing the text recovers `x` exactly.
pub fn write_real(out: &mut String, x: f64) {
    let start = out.len();
    write!(out, "{x:e}").expect("writing to a String");
    if !x.is_finite() {
        return;
    }
    let e = start + out[start..].find('e').expect("scientific notation");
    let frac_digits = match out[start..e].find('.') {
        Some(dot) => e - (start + dot + 1),
        None => {
            out.insert(e, '.');
            0
        }
    };
    let e = start + out[start..].find('e').expect("scientific notation");
    let zeros = "0000000000000000";
    out.insert_str(e, &zeros[..16 - frac_digits]);
}
