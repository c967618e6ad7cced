//! Distance matrices and certified Perron eigenpairs.
//!
//! The spectral radius of a distance matrix is bracketed with
//! Collatz–Wielandt bounds: for any positive `x`,
//! `min_i (Dx)_i / x_i <= Λ1 <= max_i (Dx)_i / x_i`. Power iteration from
//! the all-ones vector drives the two bounds together. Each bound is
//! widened outward by a floating-point rounding allowance so the bracket
//! encloses the exact eigenvalue.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::json::{serialize_sig17, serialize_sig17_vec};

pub const DEFAULT_BRACKET_WIDTH: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 100_000;

/// Shortest-path distances of a connected graph, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// All-pairs BFS. Fails on disconnected graphs.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let n = g.order();
        let mut d = vec![0u32; n * n];
        for s in 0..n {
            for (t, dist) in g.bfs(s).into_iter().enumerate() {
                d[s * n + t] = dist.ok_or(Error::Disconnected)? as u32;
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    /// `D x`.
    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_len(x.len())?;
        Ok(self.apply_unchecked(x))
    }

    fn apply_unchecked(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .map(|(&d, &xj)| d as f64 * xj)
                    .sum()
            })
            .collect()
    }

    fn check_len(&self, found: usize) -> Result<()> {
        if found == self.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.n,
                found,
            })
        }
    }

    /// True iff every entry of `self` is at least the matching entry of `other`.
    pub fn dominates(&self, other: &DistanceMatrix) -> Result<bool> {
        self.check_len(other.n)?;
        Ok(self.d.iter().zip(&other.d).all(|(a, b)| a >= b))
    }

    /// Squared Frobenius norm, exact in integers.
    pub fn frobenius_sq(&self) -> u64 {
        self.d.iter().map(|&v| (v as u64) * (v as u64)).sum()
    }
}

/// `distance_dominates(d1, d2)`: entrywise `d1 >= d2`.
pub fn distance_dominates(d1: &DistanceMatrix, d2: &DistanceMatrix) -> Result<bool> {
    d1.dominates(d2)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerronOptions {
    /// Stop once `upper - lower` is at most this.
    pub bracket_width: f64,
    pub max_iter: usize,
}

impl Default for PerronOptions {
    fn default() -> Self {
        PerronOptions {
            bracket_width: DEFAULT_BRACKET_WIDTH,
            max_iter: DEFAULT_MAX_ITER,
        }
    }
}

impl PerronOptions {
    pub fn with_width(bracket_width: f64) -> Self {
        PerronOptions {
            bracket_width,
            ..Self::default()
        }
    }
}

/// Certified spectral radius with its positive unit eigenvector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerronResult {
    #[serde(serialize_with = "serialize_sig17")]
    pub lambda: f64,
    #[serde(serialize_with = "serialize_sig17")]
    pub lower: f64,
    #[serde(serialize_with = "serialize_sig17")]
    pub upper: f64,
    /// `max_i |(D x)_i - lambda x_i|`.
    #[serde(serialize_with = "serialize_sig17")]
    pub residual: f64,
    pub iterations: usize,
    #[serde(serialize_with = "serialize_sig17_vec")]
    pub vector: Vec<f64>,
}

impl PerronResult {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("PerronResult serializes")
    }
}

/// Relative rounding allowance for one Collatz–Wielandt ratio: the row sum
/// of `n` nonnegative products plus one division.
fn rounding_allowance(n: usize) -> f64 {
    (n as f64 + 2.0) * f64::EPSILON
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
}

/// Power iteration with Collatz–Wielandt brackets.
pub fn perron(dm: &DistanceMatrix, opts: PerronOptions) -> Result<PerronResult> {
    if opts.bracket_width.is_nan() || opts.bracket_width <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "bracket width must be positive, got {}",
            opts.bracket_width
        )));
    }
    let n = dm.order();
    if n == 0 {
        return Err(Error::InvalidParameter("empty distance matrix".into()));
    }
    let slack = rounding_allowance(n);
    let mut x = vec![1.0; n];
    normalize(&mut x);
    let mut lower = 0.0f64;
    let mut upper = f64::INFINITY;

    for iteration in 1..=opts.max_iter {
        let y = dm.apply_unchecked(&x);
        let (lo, hi) = y
            .iter()
            .zip(&x)
            .map(|(yi, xi)| yi / xi)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
                (lo.min(r), hi.max(r))
            });
        // Any positive vector yields valid bounds, so the running
        // intersection stays certified.
        lower = lower.max(lo * (1.0 - slack));
        upper = upper.min(hi * (1.0 + slack));

        if upper - lower <= opts.bracket_width {
            let rho = rayleigh_unchecked(dm, &x);
            let lambda = rho.clamp(lower, upper);
            let residual = y
                .iter()
                .zip(&x)
                .map(|(yi, xi)| (yi - lambda * xi).abs())
                .fold(0.0, f64::max);
            return Ok(PerronResult {
                lambda,
                lower,
                upper,
                residual,
                iterations: iteration,
                vector: x,
            });
        }
        x = y;
        normalize(&mut x);
    }
    Err(Error::NotConverged {
        iterations: opts.max_iter,
        lower,
        upper,
    })
}

/// Distance matrix and Perron pair of a connected graph in one call.
pub fn spectral_radius(g: &Graph, opts: PerronOptions) -> Result<PerronResult> {
    perron(&DistanceMatrix::from_graph(g)?, opts)
}

fn rayleigh_unchecked(dm: &DistanceMatrix, x: &[f64]) -> f64 {
    let dx = dm.apply_unchecked(x);
    let num: f64 = dx.iter().zip(x).map(|(a, b)| a * b).sum();
    let den: f64 = x.iter().map(|v| v * v).sum();
    num / den
}

/// `(xᵀ D x) / (xᵀ x)`.
pub fn rayleigh_quotient(dm: &DistanceMatrix, x: &[f64]) -> Result<f64> {
    dm.check_len(x.len())?;
    if x.iter().all(|&v| v == 0.0) {
        return Err(Error::InvalidParameter("zero vector".into()));
    }
    Ok(rayleigh_unchecked(dm, x))
}

/// `xᵀ (D_new − D_old) x`. With `x` the unit Perron vector of the old
/// graph this is a lower bound on `Λ1(new) − Λ1(old)`.
pub fn quadratic_form_delta(
    d_old: &DistanceMatrix,
    d_new: &DistanceMatrix,
    x: &[f64],
) -> Result<f64> {
    d_old.check_len(d_new.n)?;
    d_old.check_len(x.len())?;
    let n = d_old.n;
    let mut total = 0.0;
    for (i, &xi) in x.iter().enumerate().take(n) {
        let row: f64 = d_new
            .row(i)
            .iter()
            .zip(d_old.row(i))
            .zip(x)
            .filter(|((a, b), _)| a != b)
            .map(|((&a, &b), &xj)| (a as i64 - b as i64) as f64 * xj)
            .sum();
        total += xi * row;
    }
    Ok(total)
}

/// Upper bound on `‖x − v‖₂` between the returned vector and the exact
/// unit Perron vector, from the sin θ theorem. The distance from the
/// Rayleigh quotient to the rest of the spectrum is bounded below using
/// `trace D = 0` and `Σ λ² = ‖D‖_F²`, which cap the second eigenvalue.
/// `None` when that cap does not separate the eigenvalues.
pub fn eigenvector_error_bound(dm: &DistanceMatrix, res: &PerronResult) -> Option<f64> {
    let n = dm.order();
    if n == 1 {
        return Some(0.0);
    }
    let m = (n - 1) as f64;
    let lo = res.lower;
    let frob = dm.frobenius_sq() as f64;
    let variance = ((frob - lo * lo) / m - lo * lo / (m * m)).max(0.0);
    let second_cap = -lo / m + (m - 1.0).sqrt() * variance.sqrt();

    let x = &res.vector;
    let rho = rayleigh_unchecked(dm, x);
    let gap = rho - second_cap;
    if gap.is_nan() || gap <= 0.0 {
        return None;
    }
    let dx = dm.apply_unchecked(x);
    let r2 = dx
        .iter()
        .zip(x)
        .map(|(a, b)| (a - rho * b).powi(2))
        .sum::<f64>()
        .sqrt();
    let r2 = r2 + rounding_allowance(n) * res.upper;
    let sin_theta = r2 / gap;
    if sin_theta >= 1.0 {
        return None;
    }
    Some(std::f64::consts::SQRT_2 * sin_theta)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Relation {
    Less,
    Greater,
    Indistinguishable,
}

/// Outcome of comparing two certified brackets.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralOrdering {
    pub relation: Relation,
    /// Separation of the brackets: positive for disjoint brackets, minus the
    /// overlap width otherwise.
    pub gap_lower_bound: f64,
}

/// Orders `a` against `b` only when their brackets are disjoint.
pub fn certified_compare(a: &PerronResult, b: &PerronResult) -> SpectralOrdering {
    if a.upper < b.lower {
        SpectralOrdering {
            relation: Relation::Less,
            gap_lower_bound: b.lower - a.upper,
        }
    } else if a.lower > b.upper {
        SpectralOrdering {
            relation: Relation::Greater,
            gap_lower_bound: a.lower - b.upper,
        }
    } else {
        let overlap = a.upper.min(b.upper) - a.lower.max(b.lower);
        SpectralOrdering {
            relation: Relation::Indistinguishable,
            gap_lower_bound: -overlap,
        }
    }
}
