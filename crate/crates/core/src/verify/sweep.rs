//! Exhaustive sweeps over small graphs, parallel over instances. Report
//! order depends only on the inputs, never on scheduling.

use rayon::prelude::*;

use super::{
    verify_distance_monotonicity, verify_graft_monotonicity, verify_min_cut_edges,
    verify_min_cut_vertices, verify_pendant_sum_on_site, verify_perturbation_bound,
    verify_relocation, with_pool, VerificationReport, VerifyOptions,
};
use crate::enumerate::connected_graphs_with_max;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::transforms::{find_witness, relocate_edges, GraftSite, RelocationSpec};

/// `(k, l)` pairs with `k > l ≥ 1` and `k + l ≤ 4`.
pub const UNBALANCED_GRID: [(usize, usize); 2] = [(2, 1), (3, 1)];
/// `(k, k)` pairs with `2k ≤ 4`.
pub const BALANCED_GRID: [(usize, usize); 2] = [(1, 1), (2, 2)];

fn connected_up_to(max_n: usize, min_n: usize, opts: &VerifyOptions) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in min_n..=max_n {
        out.extend(connected_graphs_with_max(n, opts.max_n.max(max_n))?);
    }
    Ok(out)
}

/// Every connected base with `2 ≤ |V| ≤ max_base_n`, every ordered edge
/// `(u, v)` and every `(k, l)` in `grid`.
pub fn graft_sites(max_base_n: usize, grid: &[(usize, usize)], opts: &VerifyOptions) -> Result<Vec<GraftSite>> {
    let mut sites = Vec::new();
    for base in connected_up_to(max_base_n, 2, opts)? {
        for &(a, b) in base.edges() {
            for (u, v) in [(a, b), (b, a)] {
                for &(k, l) in grid {
                    sites.push(GraftSite::new(base.clone(), u, v, k, l)?);
                }
            }
        }
    }
    Ok(sites)
}

fn run_all<T: Sync>(
    items: &[T],
    opts: &VerifyOptions,
    check: impl Fn(&T) -> Result<VerificationReport> + Sync + Send,
) -> Result<Vec<VerificationReport>> {
    with_pool(opts.jobs, || items.par_iter().map(&check).collect::<Result<Vec<_>>>())?
}

pub fn sweep_graft(max_base_n: usize, grid: &[(usize, usize)], opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let sites = graft_sites(max_base_n, grid, opts)?;
    let width = opts.width;
    run_all(&sites, opts, |s| verify_graft_monotonicity(s, width))
}

pub fn sweep_pendant_mass(max_base_n: usize, grid: &[(usize, usize)], opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    if grid.iter().any(|&(k, l)| k <= l) {
        return Err(Error::InvalidParameter("pendant-mass grid needs k > l".into()));
    }
    let sites = graft_sites(max_base_n, grid, opts)?;
    let width = opts.width;
    run_all(&sites, opts, |s| verify_pendant_sum_on_site(s, width))
}

/// Relocation specs whose component `c1` is the single leaf `v`, over every
/// nonempty target subset of `N(u) \ {v}`, keeping those with a witness.
pub fn relocation_specs(max_n: usize, opts: &VerifyOptions) -> Result<Vec<RelocationSpec>> {
    let mut specs = Vec::new();
    for g in connected_up_to(max_n, 3, opts)? {
        for u in 0..g.order() {
            for &v in g.neighbors(u).iter().filter(|&&v| g.degree(v) == 1) {
                let others: Vec<usize> = g.neighbors(u).iter().copied().filter(|&t| t != v).collect();
                for subset in 1u32..(1 << others.len()) {
                    let targets = others
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| subset & (1 << i) != 0)
                        .map(|(_, &t)| t)
                        .collect();
                    let spec = RelocationSpec::new(g.clone(), u, v, targets)?;
                    let g_new = relocate_edges(&spec)?;
                    if find_witness(&spec, &g_new).is_some() {
                        specs.push(spec);
                    }
                }
            }
        }
    }
    Ok(specs)
}

pub fn sweep_relocation(max_n: usize, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let specs = relocation_specs(max_n, opts)?;
    let width = opts.width;
    run_all(&specs, opts, |s| verify_relocation(s, width))
}

/// Every connected graph with at most `max_n` vertices paired with each of
/// its one-edge supergraphs.
pub fn edge_addition_pairs(max_n: usize, opts: &VerifyOptions) -> Result<Vec<(Graph, Graph)>> {
    let mut pairs = Vec::new();
    for g in connected_up_to(max_n, 2, opts)? {
        for a in 0..g.order() {
            for b in a + 1..g.order() {
                if !g.has_edge(a, b) {
                    let bigger = g.with_edge(a, b)?;
                    pairs.push((g.clone(), bigger));
                }
            }
        }
    }
    Ok(pairs)
}

pub fn sweep_perturbation(max_n: usize, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let pairs = edge_addition_pairs(max_n, opts)?;
    let width = opts.width;
    run_all(&pairs, opts, |(g, h)| verify_perturbation_bound(g, h, width))
}

pub fn sweep_monotonicity(max_n: usize, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let graphs = connected_up_to(max_n, 1, opts)?;
    let width = opts.width;
    run_all(&graphs, opts, |g| verify_distance_monotonicity(g, width))
}

/// `verify_min_cut_vertices(n, k)` for `k = 0..=n−2`.
pub fn sweep_min_cut_vertices(n: usize, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2, got {n}")));
    }
    (0..=n - 2).map(|k| verify_min_cut_vertices(n, k, opts)).collect()
}

/// `verify_min_cut_edges(n, k)` for every `k` with a nonempty class.
pub fn sweep_min_cut_edges(n: usize, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for k in 0..n {
        match verify_min_cut_edges(n, k, opts) {
            Err(Error::EmptyClass { .. }) => continue,
            r => out.push(r?),
        }
    }
    Ok(out)
}
