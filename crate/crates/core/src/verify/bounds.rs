use serde_json::json;

use super::{compare_graphs, g6, radius, Outcome, Theorem, Timer, VerificationReport};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectrum::{distance_dominates, quadratic_form_delta, DistanceMatrix, Relation};
use crate::transforms::block_clique_closure;

/// Additive slack on the Rayleigh perturbation bound.
pub const PERTURBATION_SLACK: f64 = 1e-8;

/// `Λ1(G′) − Λ1(G) ≥ xᵀ(D(G′) − D(G))x` with `x` the unit Perron vector of
/// `G`, checked in both directions. The left side is replaced by its
/// certified lower end `lower(G′) − upper(G)`.
pub fn verify_perturbation_bound(g_old: &Graph, g_new: &Graph, width: f64) -> Result<VerificationReport> {
    let timer = Timer::start();
    if g_old.order() != g_new.order() {
        return Err(Error::DimensionMismatch {
            expected: g_old.order(),
            found: g_new.order(),
        });
    }
    let d_old = DistanceMatrix::from_graph(g_old)?;
    let d_new = DistanceMatrix::from_graph(g_new)?;
    let r_old = radius(g_old, width)?;
    let r_new = radius(g_new, width)?;

    let forward_form = quadratic_form_delta(&d_old, &d_new, &r_old.vector)?;
    let backward_form = quadratic_form_delta(&d_new, &d_old, &r_new.vector)?;
    // slack of each inequality at its certified worst and best case
    let forward_worst = (r_new.lower - r_old.upper) - forward_form + PERTURBATION_SLACK;
    let forward_best = (r_new.upper - r_old.lower) - forward_form + PERTURBATION_SLACK;
    let backward_worst = (r_old.lower - r_new.upper) - backward_form + PERTURBATION_SLACK;
    let backward_best = (r_old.upper - r_new.lower) - backward_form + PERTURBATION_SLACK;

    let worst = forward_worst.min(backward_worst);
    let outcome = if worst >= 0.0 {
        Outcome::Pass
    } else if forward_best < 0.0 || backward_best < 0.0 {
        Outcome::Fail
    } else {
        Outcome::Inconclusive
    };
    let instance = json!({ "old": g6(g_old), "new": g6(g_new) });
    let witness = json!({
        "lambda_old": r_old.lambda,
        "lambda_new": r_new.lambda,
        "forward_form": forward_form,
        "backward_form": backward_form,
        "forward_slack": forward_worst,
        "backward_slack": backward_worst,
    });
    let gap = (outcome == Outcome::Pass).then_some(worst);
    Ok(timer.report(Theorem::PerturbationBound, instance, outcome, gap, Some(witness)))
}

/// Completing every block to a clique shrinks distances entrywise, so the
/// spectral radius cannot grow.
pub fn verify_distance_monotonicity(g: &Graph, width: f64) -> Result<VerificationReport> {
    let timer = Timer::start();
    let closure = block_clique_closure(g)?;
    let dominated = distance_dominates(
        &DistanceMatrix::from_graph(g)?,
        &DistanceMatrix::from_graph(&closure)?,
    )?;
    let r_closure = radius(&closure, width)?;
    let r_g = radius(g, width)?;
    let cmp = compare_graphs(&closure, r_closure, g, r_g)?;
    let outcome = if !dominated || cmp.ordering.relation == Relation::Greater {
        Outcome::Fail
    } else {
        Outcome::Pass
    };
    let instance = json!({ "graph": g6(g) });
    let witness = json!({
        "closure": g6(&closure),
        "dominates": dominated,
        "relation": cmp.ordering.relation,
        "lambda_graph": cmp.b.lambda,
        "lambda_closure": cmp.a.lambda,
        "equal_graphs": &closure == g,
    });
    let gap = (outcome == Outcome::Pass && cmp.ordering.relation == Relation::Less)
        .then_some(cmp.ordering.gap_lower_bound);
    Ok(timer.report(Theorem::Monotonicity, instance, outcome, gap, Some(witness)))
}
