//! Executable checks of the monotonicity and extremal statements about the
//! distance spectral radius.
//!
//! Every strict inequality is decided from disjoint Collatz–Wielandt
//! brackets. Overlapping brackets are re-run at [`MIN_WIDTH`]; if they still
//! overlap the instance is `INCONCLUSIVE` rather than guessed.

mod bounds;
mod extremal;
mod graft;
mod relocation;
pub mod sweep;

use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use crate::canon::canonical_key_with_max;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::spectrum::{
    certified_compare, spectral_radius, PerronOptions, PerronResult, SpectralOrdering,
};

pub use bounds::{verify_distance_monotonicity, verify_perturbation_bound, PERTURBATION_SLACK};
pub use extremal::{verify_min_cut_edges, verify_min_cut_vertices};
pub use graft::{verify_graft_monotonicity, verify_pendant_sum, verify_pendant_sum_on_site};
pub use relocation::verify_relocation;

/// Bracket width used when two brackets overlap at the requested width.
pub const MIN_WIDTH: f64 = 1e-12;
/// Default bracket width for certified comparisons.
pub const DEFAULT_WIDTH: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Theorem {
    /// Graft shifting between adjacent roots.
    #[serde(rename = "1")]
    GraftShift,
    /// Edge relocation from `u` to `v`.
    #[serde(rename = "2")]
    Relocation,
    /// Minimiser over graphs with `k` cut vertices.
    #[serde(rename = "3")]
    MinCutVertices,
    /// Minimiser over graphs with `k` cut edges.
    #[serde(rename = "4")]
    MinCutEdges,
    /// Perron mass on the longer of two adjacent pendant paths.
    #[serde(rename = "cor1")]
    PendantMass,
    /// Rayleigh lower bound on the change of the spectral radius.
    #[serde(rename = "bound")]
    PerturbationBound,
    /// Entrywise distance monotonicity under block-clique closure.
    #[serde(rename = "mono")]
    Monotonicity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

impl Outcome {
    /// Process exit code: 0 pass, 1 fail, 2 inconclusive.
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::Inconclusive => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub instance: Value,
    pub outcome: Outcome,
    /// Certified lower bound on the margin of the checked inequality.
    pub certified_gap: Option<f64>,
    pub witness: Option<Value>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    /// JSON without timing, so identical inputs give identical bytes.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// JSON with an extra `wall_time_ms` field.
    pub fn to_json_timed(&self) -> String {
        let mut out = self.to_json();
        out.pop();
        out.push_str(&format!(
            ",\"wall_time_ms\":{}}}",
            json!(self.wall_time.as_secs_f64() * 1e3)
        ));
        out
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

/// Shared knobs for every check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Bracket width for certified comparisons.
    pub width: f64,
    /// Worker threads; `None` uses all cores.
    pub jobs: Option<usize>,
    /// Enumeration cap for the extremal checks.
    pub max_n: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            width: DEFAULT_WIDTH,
            jobs: None,
            max_n: crate::enumerate::DEFAULT_MAX_N,
        }
    }
}

impl VerifyOptions {
    pub fn with_width(mut self, width: f64) -> Self {
        self.width = width;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = Some(jobs);
        self
    }
}

/// Runs `f` inside a rayon pool of the requested size.
pub fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

pub(crate) fn radius(g: &Graph, width: f64) -> Result<PerronResult> {
    spectral_radius(g, PerronOptions::with_width(width))
}

/// Re-runs at [`MIN_WIDTH`], keeping the old result if the tighter run
/// cannot close.
pub(crate) fn tighten(g: &Graph, current: PerronResult) -> Result<PerronResult> {
    if current.width() <= MIN_WIDTH {
        return Ok(current);
    }
    match radius(g, MIN_WIDTH) {
        Ok(r) => Ok(r),
        Err(Error::NotConverged { .. }) => Ok(current),
        Err(e) => Err(e),
    }
}

/// Certified comparison of two graphs' spectral radii, tightening once on
/// overlap.
pub(crate) struct Compared {
    pub ordering: SpectralOrdering,
    pub a: PerronResult,
    pub b: PerronResult,
}

pub(crate) fn compare_graphs(
    a: &Graph,
    ra: PerronResult,
    b: &Graph,
    rb: PerronResult,
) -> Result<Compared> {
    let ordering = certified_compare(&ra, &rb);
    if ordering.relation != crate::spectrum::Relation::Indistinguishable {
        return Ok(Compared {
            ordering,
            a: ra,
            b: rb,
        });
    }
    let ra = tighten(a, ra)?;
    let rb = tighten(b, rb)?;
    Ok(Compared {
        ordering: certified_compare(&ra, &rb),
        a: ra,
        b: rb,
    })
}

pub(crate) fn same_class(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    Ok(canonical_key_with_max(a, MAX_ORDER)? == canonical_key_with_max(b, MAX_ORDER)?)
}

pub(crate) fn g6(g: &Graph) -> String {
    crate::graph6::encode(g)
}

pub(crate) struct Timer(Instant);

impl Timer {
    pub fn start() -> Self {
        Timer(Instant::now())
    }

    pub fn report(
        self,
        theorem: Theorem,
        instance: Value,
        outcome: Outcome,
        certified_gap: Option<f64>,
        witness: Option<Value>,
    ) -> VerificationReport {
        VerificationReport {
            theorem,
            instance,
            outcome,
            certified_gap,
            witness,
            wall_time: self.0.elapsed(),
        }
    }
}

/// Pass/fail tallies over a batch of reports.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    /// Smallest certified gap among passing reports that carry one.
    pub min_gap: Option<f64>,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            s.total += 1;
            match r.outcome {
                Outcome::Pass => {
                    s.pass += 1;
                    if let Some(g) = r.certified_gap {
                        s.min_gap = Some(s.min_gap.map_or(g, |m: f64| m.min(g)));
                    }
                }
                Outcome::Fail => s.fail += 1,
                Outcome::Inconclusive => s.inconclusive += 1,
            }
        }
        s
    }

    pub fn all_pass(&self) -> bool {
        self.pass == self.total
    }
}
