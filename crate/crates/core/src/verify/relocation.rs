use serde_json::json;

use super::{compare_graphs, g6, radius, same_class, Outcome, Theorem, Timer, VerificationReport};
use crate::error::{Error, Result};
use crate::spectrum::Relation;
use crate::transforms::{find_witness, relocate_edges, RelocationSpec};

/// Relocating the edges `u v_s` to `v v_s` strictly increases the spectral
/// radius whenever a witness vertex moves away from every target.
///
/// Unmet preconditions and a missing witness give `INCONCLUSIVE`: the
/// statement does not apply, which is not a counterexample.
pub fn verify_relocation(spec: &RelocationSpec, width: f64) -> Result<VerificationReport> {
    let timer = Timer::start();
    let instance = json!({
        "graph": g6(&spec.g),
        "u": spec.u,
        "v": spec.v,
        "c1": spec.c1,
        "targets": spec.targets,
        "witness": spec.witness,
    });
    let g_new = match relocate_edges(spec) {
        Ok(g) => g,
        Err(Error::Hypothesis(clause)) => {
            let witness = json!({ "inapplicable": clause.to_string(), "clause": clause });
            return Ok(timer.report(Theorem::Relocation, instance, Outcome::Inconclusive, None, Some(witness)));
        }
        Err(e) => return Err(e),
    };
    let Some(w) = find_witness(spec, &g_new) else {
        let witness = json!({ "relocated": g6(&g_new), "inapplicable": "no witness vertex" });
        return Ok(timer.report(Theorem::Relocation, instance, Outcome::Inconclusive, None, Some(witness)));
    };

    let r_old = radius(&spec.g, width)?;
    let r_new = radius(&g_new, width)?;
    let cmp = compare_graphs(&spec.g, r_old, &g_new, r_new)?;
    let isomorphic = cmp.ordering.relation == Relation::Indistinguishable && same_class(&spec.g, &g_new)?;
    let outcome = match cmp.ordering.relation {
        Relation::Less => Outcome::Pass,
        Relation::Greater => Outcome::Fail,
        Relation::Indistinguishable if isomorphic => Outcome::Fail,
        Relation::Indistinguishable => Outcome::Inconclusive,
    };
    let witness = json!({
        "relocated": g6(&g_new),
        "witness_vertex": w,
        "lambda_before": cmp.a.lambda,
        "lambda_after": cmp.b.lambda,
        "gap": cmp.ordering.gap_lower_bound,
    });
    let gap = (outcome == Outcome::Pass).then_some(cmp.ordering.gap_lower_bound);
    Ok(timer.report(Theorem::Relocation, instance, outcome, gap, Some(witness)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn star() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn star_to_path_gap() {
        let spec = RelocationSpec::new(star(), 0, 1, vec![2]).unwrap();
        let r = verify_relocation(&spec, 1e-10).unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        let gap = r.certified_gap.unwrap();
        assert!((gap - (10f64.sqrt() - 7f64.sqrt())).abs() < 1e-6, "{gap}");
    }

    #[test]
    fn two_edges_on_six_vertices() {
        // u = 0 with leaf v = 1, targets 2 and 3, and a tail 0-4-5
        let g = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)]).unwrap();
        let spec = RelocationSpec::new(g, 0, 1, vec![2, 3]).unwrap();
        let r = verify_relocation(&spec, 1e-10).unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        assert_eq!(r.witness.unwrap()["witness_vertex"], 4);
    }

    #[test]
    fn inapplicable_specs_are_inconclusive() {
        let spec = RelocationSpec::new(star(), 0, 1, vec![2, 3]).unwrap();
        let r = verify_relocation(&spec, 1e-10).unwrap();
        assert_eq!(r.outcome, Outcome::Inconclusive);
        let spec = RelocationSpec::new(star(), 0, 1, vec![]).unwrap();
        let r = verify_relocation(&spec, 1e-10).unwrap();
        assert_eq!(r.outcome, Outcome::Inconclusive);
        assert_eq!(r.witness.unwrap()["clause"]["clause"], "no_targets");
    }
}
