use serde_json::{json, Value};

use super::{compare_graphs, g6, radius, same_class, Outcome, Theorem, Timer, VerificationReport};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectrum::{eigenvector_error_bound, DistanceMatrix, PerronResult, Relation};
use crate::structure::PendantPath;
use crate::transforms::{graft_family, GraftSite};

fn site_instance(site: &GraftSite) -> Value {
    json!({
        "base": g6(site.base()),
        "u": site.u(),
        "v": site.v(),
        "k": site.k(),
        "l": site.l(),
    })
}

/// Outcome of one disjunct `Λ1(current) < Λ1(shifted)`.
struct Disjunct {
    relation: Relation,
    gap: f64,
    equal_by_isomorphism: bool,
    current: PerronResult,
    shifted: PerronResult,
}

impl Disjunct {
    fn holds(&self) -> bool {
        self.relation == Relation::Less
    }

    /// Certainly false: strictly greater, or the two graphs are isomorphic.
    fn refuted(&self) -> bool {
        self.relation == Relation::Greater || self.equal_by_isomorphism
    }
}

fn disjunct(current: &Graph, r_current: PerronResult, shifted: &Graph, width: f64) -> Result<Disjunct> {
    let r_shifted = radius(shifted, width)?;
    let cmp = compare_graphs(current, r_current, shifted, r_shifted)?;
    let equal_by_isomorphism =
        cmp.ordering.relation == Relation::Indistinguishable && same_class(current, shifted)?;
    Ok(Disjunct {
        relation: cmp.ordering.relation,
        gap: cmp.ordering.gap_lower_bound,
        equal_by_isomorphism,
        current: cmp.a,
        shifted: cmp.b,
    })
}

/// Shifting one unit of path length from the shorter attached path to the
/// longer one strictly increases the spectral radius when `k > l ≥ 1`;
/// when `k = l ≥ 1` at least one of the two shifts does.
pub fn verify_graft_monotonicity(site: &GraftSite, width: f64) -> Result<VerificationReport> {
    let timer = Timer::start();
    let (k, l) = (site.k(), site.l());
    if l == 0 || k < l {
        return Err(Error::InvalidParameter(format!(
            "graft check needs k >= l >= 1, got k = {k}, l = {l}"
        )));
    }
    let family = graft_family(site)?;
    let r_current = radius(&family.current, width)?;
    let toward_u = family.toward_u.as_ref().expect("l >= 1");
    let up = disjunct(&family.current, r_current.clone(), toward_u, width)?;

    let mut witness = json!({
        "current": g6(&family.current),
        "toward_u": g6(toward_u),
        "lambda_current": up.current.lambda,
        "lambda_toward_u": up.shifted.lambda,
        "gap_toward_u": up.gap,
    });
    if up.equal_by_isomorphism {
        witness["isomorphic_toward_u"] = json!(true);
    }

    if k > l {
        let outcome = if up.holds() {
            Outcome::Pass
        } else if up.refuted() {
            Outcome::Fail
        } else {
            Outcome::Inconclusive
        };
        let gap = up.holds().then_some(up.gap);
        return Ok(timer.report(Theorem::GraftShift, site_instance(site), outcome, gap, Some(witness)));
    }

    let toward_v = family.toward_v.as_ref().expect("k >= 1");
    let down = disjunct(&family.current, r_current, toward_v, width)?;
    witness["toward_v"] = json!(g6(toward_v));
    witness["lambda_toward_v"] = json!(down.shifted.lambda);
    witness["gap_toward_v"] = json!(down.gap);
    if down.equal_by_isomorphism {
        witness["isomorphic_toward_v"] = json!(true);
    }
    let (outcome, gap, winner) = match (up.holds(), down.holds()) {
        (true, true) => (Outcome::Pass, Some(up.gap.max(down.gap)), "both"),
        (true, false) => (Outcome::Pass, Some(up.gap), "toward_u"),
        (false, true) => (Outcome::Pass, Some(down.gap), "toward_v"),
        (false, false) if up.refuted() && down.refuted() => (Outcome::Fail, None, "none"),
        (false, false) => (Outcome::Inconclusive, None, "none"),
    };
    witness["disjunct"] = json!(winner);
    Ok(timer.report(Theorem::GraftShift, site_instance(site), outcome, gap, Some(witness)))
}

fn mass(x: &[f64], vertices: &[usize]) -> f64 {
    vertices.iter().map(|&v| x[v]).sum()
}

/// Perron mass on the longer of two pendant paths with adjacent roots
/// exceeds the mass on the shorter. Vertex sets include the roots; the
/// root-free sums are reported alongside.
pub fn verify_pendant_sum(
    g: &Graph,
    p_long: &PendantPath,
    p_short: &PendantPath,
    width: f64,
) -> Result<VerificationReport> {
    let timer = Timer::start();
    for &x in p_long.with_root().iter().chain(&p_short.with_root()) {
        if x >= g.order() {
            return Err(Error::VertexOutOfRange { vertex: x, n: g.order() });
        }
    }
    if !g.has_edge(p_long.root, p_short.root) {
        return Err(Error::NotAnEdge(p_long.root, p_short.root));
    }
    if p_long.length() <= p_short.length() {
        return Err(Error::InvalidParameter(format!(
            "first path must be strictly longer ({} vs {})",
            p_long.length(),
            p_short.length()
        )));
    }
    let dm = DistanceMatrix::from_graph(g)?;
    let r = radius(g, width)?;
    let with_long = p_long.with_root();
    let with_short = p_short.with_root();
    let margin = mass(&r.vector, &with_long) - mass(&r.vector, &with_short);
    let margin_without_roots = mass(&r.vector, &p_long.vertices) - mass(&r.vector, &p_short.vertices);

    let instance = json!({
        "graph": g6(g),
        "long": p_long,
        "short": p_short,
    });
    // ‖x − v‖ bounds the error of any signed sum with ±1 weights by
    // ‖x − v‖·sqrt(#terms).
    let Some(vector_error) = eigenvector_error_bound(&dm, &r) else {
        let witness = json!({ "margin": margin, "reason": "eigenvector error bound unavailable" });
        return Ok(timer.report(Theorem::PendantMass, instance, Outcome::Inconclusive, None, Some(witness)));
    };
    let terms = (with_long.len() + with_short.len()) as f64;
    let allowance = vector_error * terms.sqrt() + terms * f64::EPSILON;
    let witness = json!({
        "lambda": r.lambda,
        "mass_long": mass(&r.vector, &with_long),
        "mass_short": mass(&r.vector, &with_short),
        "margin": margin,
        "margin_without_roots": margin_without_roots,
        "error_allowance": allowance,
    });
    let outcome = if margin > allowance {
        Outcome::Pass
    } else if margin < -allowance {
        Outcome::Fail
    } else {
        Outcome::Inconclusive
    };
    let gap = (outcome == Outcome::Pass).then_some(margin - allowance);
    Ok(timer.report(Theorem::PendantMass, instance, outcome, gap, Some(witness)))
}

/// The two attached paths of `G_{k,l}` with roots `u` and `v`.
pub fn site_paths(site: &GraftSite) -> (PendantPath, PendantPath) {
    let nb = site.base().order();
    let (k, l) = (site.k(), site.l());
    (
        PendantPath {
            root: site.u(),
            vertices: (nb..nb + k).collect(),
        },
        PendantPath {
            root: site.v(),
            vertices: (nb + k..nb + k + l).collect(),
        },
    )
}

/// Pendant-mass check on `G_{k,l}` with the attached paths; `k > l` required.
pub fn verify_pendant_sum_on_site(site: &GraftSite, width: f64) -> Result<VerificationReport> {
    let mut report = {
        let g = site.member(site.k(), site.l())?;
        let (long, short) = site_paths(site);
        verify_pendant_sum(&g, &long, &short, width)?
    };
    if let Value::Object(map) = &mut report.instance {
        map.insert("site".into(), site_instance(site));
    }
    Ok(report)
}
