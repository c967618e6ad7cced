//! Graph families and the two perturbations: graft shifting between two
//! adjacent roots, and relocating edges from `u` to a neighbour `v`.

use serde::Serialize;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::structure;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseKind {
    Complete,
    Path,
    Cycle,
}

pub fn complete(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    Graph::new(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// `K_n`, `P_n` or `C_n` on labels `0..n`.
pub fn make_base(kind: BaseKind, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("base graph needs n >= 1".into()));
    }
    match kind {
        BaseKind::Complete => complete(n),
        BaseKind::Path => path(n),
        BaseKind::Cycle => cycle(n),
    }
}

/// Hangs a path of `len` new vertices at `root`. New vertices get labels
/// `n, n+1, ...` moving away from the root.
pub fn attach_path(g: &Graph, root: usize, len: usize) -> Result<Graph> {
    g.check_vertex(root)?;
    if len == 0 {
        return Ok(g.clone());
    }
    let n = g.order();
    let mut out = g.with_extra_vertices(len)?;
    let mut prev = root;
    for new in n..n + len {
        out = out.with_edge(prev, new)?;
        prev = new;
    }
    Ok(out)
}

/// Base graph with an edge `uv` and path lengths `k` (at `u`) and `l` (at `v`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraftSite {
    base: Graph,
    u: usize,
    v: usize,
    k: usize,
    l: usize,
}

impl GraftSite {
    pub fn new(base: Graph, u: usize, v: usize, k: usize, l: usize) -> Result<Self> {
        base.check_vertex(u)?;
        base.check_vertex(v)?;
        if !base.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        Ok(GraftSite { base, u, v, k, l })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }
    pub fn u(&self) -> usize {
        self.u
    }
    pub fn v(&self) -> usize {
        self.v
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn l(&self) -> usize {
        self.l
    }

    /// `G_{k,l}` for arbitrary split lengths on this site's base and edge.
    pub fn member(&self, k: usize, l: usize) -> Result<Graph> {
        let with_u = attach_path(&self.base, self.u, k)?;
        attach_path(&with_u, self.v, l)
    }

    /// The vertices of `G_{k,l}` along the line through both attached
    /// paths: `u`-path tip first, then `u`, `v`, and the `v`-path out to
    /// its tip. Position `p` here is vertex `p + 1` in the 1-based labeling
    /// of the proof figure.
    pub fn line(&self, k: usize, l: usize) -> Vec<usize> {
        let nb = self.base.order();
        let mut line: Vec<usize> = (nb..nb + k).rev().collect();
        line.push(self.u);
        line.push(self.v);
        line.extend(nb + k..nb + k + l);
        line
    }
}

/// `G_{k,l}`, `G_{k+1,l−1}` and `G_{k−1,l+1}`; the shifted members are
/// absent when the length they take from is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraftFamily {
    pub current: Graph,
    pub toward_u: Option<Graph>,
    pub toward_v: Option<Graph>,
}

pub fn graft_family(site: &GraftSite) -> Result<GraftFamily> {
    let (k, l) = (site.k, site.l);
    Ok(GraftFamily {
        current: site.member(k, l)?,
        toward_u: if l >= 1 {
            Some(site.member(k + 1, l - 1)?)
        } else {
            None
        },
        toward_v: if k >= 1 {
            Some(site.member(k - 1, l + 1)?)
        } else {
            None
        },
    })
}

/// `G_{n,k}`: `K_{n−k}` with pendant paths of almost equal lengths summing
/// to `k`; the longer paths sit on the lowest-numbered clique vertices.
pub fn g_nk(n: usize, k: usize) -> Result<Graph> {
    let clique = n.checked_sub(k).filter(|&c| c >= 2 || (c == 1 && k == 0));
    let Some(c) = clique else {
        return Err(Error::InvalidParameter(format!(
            "G_{{n,k}} needs n - k >= 2 (or n = 1, k = 0), got n = {n}, k = {k}"
        )));
    };
    let (q, r) = (k / c, k % c);
    let mut g = complete(c)?;
    for root in 0..c {
        let len = if root < r { q + 1 } else { q };
        g = attach_path(&g, root, len)?;
    }
    Ok(g)
}

/// `K_n^k`: `K_{n−k}` with `k` pendant vertices on clique vertex 0.
///
/// `n − k = 2` is rejected: the result would be a star with `k + 1` cut
/// edges.
pub fn k_nk(n: usize, k: usize) -> Result<Graph> {
    if n == 0 || k >= n || n - k == 2 {
        return Err(Error::InvalidParameter(format!(
            "K_n^k needs 0 <= k <= n - 1 and n - k != 2, got n = {n}, k = {k}"
        )));
    }
    let mut g = complete(n - k)?.with_extra_vertices(k)?;
    for leaf in n - k..n {
        g = g.with_edge(0, leaf)?;
    }
    Ok(g)
}

/// Vertices other than `a` and `b` split by `dist(j, a) − dist(j, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgePartition {
    /// `dist(j, a) + 1 = dist(j, b)`.
    pub side_a: Vec<usize>,
    /// `dist(j, a) = dist(j, b)`.
    pub equidistant: Vec<usize>,
    /// `dist(j, a) = dist(j, b) + 1`.
    pub side_b: Vec<usize>,
}

pub fn classify_by_edge(g: &Graph, a: usize, b: usize) -> Result<EdgePartition> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if !g.has_edge(a, b) {
        return Err(Error::NotAnEdge(a, b));
    }
    g.require_connected()?;
    let da = g.bfs(a);
    let db = g.bfs(b);
    let mut part = EdgePartition {
        side_a: Vec::new(),
        equidistant: Vec::new(),
        side_b: Vec::new(),
    };
    for j in (0..g.order()).filter(|&j| j != a && j != b) {
        let (x, y) = (da[j].expect("connected"), db[j].expect("connected"));
        match x.cmp(&y) {
            std::cmp::Ordering::Less => part.side_a.push(j),
            std::cmp::Ordering::Equal => part.equidistant.push(j),
            std::cmp::Ordering::Greater => part.side_b.push(j),
        }
    }
    Ok(part)
}

/// A failed precondition of an edge relocation.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "clause", content = "vertex", rename_all = "snake_case")]
pub enum HypothesisViolation {
    #[error("u and v are not adjacent")]
    NotAdjacent,
    #[error("c1 is not the component of G - u that contains v")]
    ComponentMismatch,
    #[error("neighbourhood equality N_C1(u) \\ {{v}} = N_C1(v) fails")]
    NeighbourhoodMismatch,
    #[error("target list is empty")]
    NoTargets,
    #[error("target {0} is listed twice")]
    DuplicateTarget(usize),
    #[error("target {0} is not adjacent to u")]
    TargetNotAdjacentToU(usize),
    #[error("target {0} lies in c1")]
    TargetInComponent(usize),
    #[error("target {0} is adjacent to v")]
    TargetAdjacentToV(usize),
    #[error("witness {0} lies in c1 or is u")]
    WitnessOutOfRange(usize),
}

/// Re-hang edges `u v_s` as `v v_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelocationSpec {
    pub g: Graph,
    pub u: usize,
    pub v: usize,
    /// Vertex set of the component of `G − u` containing `v`, ascending.
    pub c1: Vec<usize>,
    pub targets: Vec<usize>,
    pub witness: Option<usize>,
}

impl RelocationSpec {
    /// Fills in `c1` as the component of `G − u` containing `v`.
    pub fn new(g: Graph, u: usize, v: usize, targets: Vec<usize>) -> Result<Self> {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        let c1 = component_without(&g, u, v);
        Ok(RelocationSpec {
            g,
            u,
            v,
            c1,
            targets,
            witness: None,
        })
    }

    pub fn with_witness(mut self, w: usize) -> Self {
        self.witness = Some(w);
        self
    }

    fn c1_mask(&self) -> u64 {
        self.c1.iter().fold(0, |m, &x| m | 1 << x)
    }

    /// Checks every precondition, reporting the first that fails.
    pub fn validate(&self) -> Result<()> {
        let g = &self.g;
        for &x in [self.u, self.v]
            .iter()
            .chain(&self.c1)
            .chain(&self.targets)
            .chain(&self.witness)
        {
            g.check_vertex(x)?;
        }
        g.require_connected()?;
        let (u, v) = (self.u, self.v);
        if u == v || !g.has_edge(u, v) {
            return Err(HypothesisViolation::NotAdjacent.into());
        }
        if self.c1 != component_without(g, u, v) {
            return Err(HypothesisViolation::ComponentMismatch.into());
        }
        let c1 = self.c1_mask();
        if g.row(u) & c1 & !(1 << v) != g.row(v) & c1 {
            return Err(HypothesisViolation::NeighbourhoodMismatch.into());
        }
        if self.targets.is_empty() {
            return Err(HypothesisViolation::NoTargets.into());
        }
        let mut seen = 0u64;
        for &t in &self.targets {
            if seen & (1 << t) != 0 {
                return Err(HypothesisViolation::DuplicateTarget(t).into());
            }
            seen |= 1 << t;
            if !g.has_edge(u, t) {
                return Err(HypothesisViolation::TargetNotAdjacentToU(t).into());
            }
            if c1 & (1 << t) != 0 {
                return Err(HypothesisViolation::TargetInComponent(t).into());
            }
            if g.has_edge(v, t) {
                return Err(HypothesisViolation::TargetAdjacentToV(t).into());
            }
        }
        if let Some(w) = self.witness {
            if w == u || c1 & (1 << w) != 0 {
                return Err(HypothesisViolation::WitnessOutOfRange(w).into());
            }
        }
        Ok(())
    }
}

/// Vertices reachable from `start` without passing through `removed`.
fn component_without(g: &Graph, removed: usize, start: usize) -> Vec<usize> {
    if removed == start {
        return Vec::new();
    }
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for x in bits(frontier) {
            next |= g.row(x);
        }
        next &= !seen & !(1 << removed);
        seen |= next;
        frontier = next;
    }
    bits(seen).collect()
}

/// `G' = G − {u v_s} + {v v_s}` after validating the preconditions.
pub fn relocate_edges(spec: &RelocationSpec) -> Result<Graph> {
    spec.validate()?;
    let mut rows = spec.g.rows().to_vec();
    for &t in &spec.targets {
        rows[spec.u] &= !(1 << t);
        rows[t] &= !(1 << spec.u);
        rows[spec.v] |= 1 << t;
        rows[t] |= 1 << spec.v;
    }
    let out = Graph::from_rows(rows);
    out.require_connected()?;
    Ok(out)
}

/// A vertex `w` outside `c1 ∪ {u}` whose distance to every target grows
/// under the relocation. Uses `spec.witness` when given, otherwise the
/// smallest such vertex.
pub fn find_witness(spec: &RelocationSpec, g_new: &Graph) -> Option<usize> {
    if spec.targets.is_empty() || g_new.order() != spec.g.order() {
        return None;
    }
    let c1 = spec.c1_mask();
    let qualifies = |w: usize| {
        if w == spec.u || c1 & (1 << w) != 0 {
            return false;
        }
        let before = spec.g.bfs(w);
        let after = g_new.bfs(w);
        spec.targets
            .iter()
            .all(|&t| matches!((before[t], after[t]), (Some(a), Some(b)) if a < b))
    };
    match spec.witness {
        Some(w) => (w < spec.g.order() && qualifies(w)).then_some(w),
        None => (0..spec.g.order()).find(|&w| qualifies(w)),
    }
}

/// Completes every block to a clique.
pub fn block_clique_closure(g: &Graph) -> Result<Graph> {
    let decomposition = structure::blocks(g)?;
    let mut rows = g.rows().to_vec();
    for block in &decomposition.blocks {
        let mask = block.iter().fold(0u64, |m, &x| m | 1 << x);
        for &x in block {
            rows[x] |= mask & !(1 << x);
        }
    }
    Ok(Graph::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::isomorphic;
    use crate::spectrum::{distance_dominates, DistanceMatrix};
    use crate::structure::{cut_edges, cut_vertices};

    #[test]
    fn bases() {
        assert_eq!(make_base(BaseKind::Complete, 4).unwrap().size(), 6);
        assert_eq!(
            make_base(BaseKind::Path, 4).unwrap().edges(),
            &[(0, 1), (1, 2), (2, 3)]
        );
        assert!(make_base(BaseKind::Cycle, 2).is_err());
        assert!(make_base(BaseKind::Path, 0).is_err());
    }

    #[test]
    fn attaching_paths() {
        let k3 = complete(3).unwrap();
        let g = attach_path(&k3, 0, 2).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3), (1, 2), (3, 4)]);
        assert_eq!(attach_path(&k3, 1, 0).unwrap(), k3);
        assert_eq!(attach_path(&path(2).unwrap(), 0, 1).unwrap().edges(), &[(0, 1), (0, 2)]);
        assert!(isomorphic(&attach_path(&path(2).unwrap(), 0, 1).unwrap(), &path(3).unwrap()).unwrap());
        assert!(attach_path(&k3, 3, 1).is_err());
    }

    #[test]
    fn graft_family_on_triangle() {
        let site = GraftSite::new(complete(3).unwrap(), 0, 1, 1, 1).unwrap();
        let fam = graft_family(&site).unwrap();
        // bull: triangle with one pendant on each of two vertices
        let bull = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).unwrap();
        assert!(isomorphic(&fam.current, &bull).unwrap());
        let tail_u = attach_path(&complete(3).unwrap(), 0, 2).unwrap();
        assert_eq!(fam.toward_u.as_ref().unwrap(), &tail_u);
        let tail_v = attach_path(&complete(3).unwrap(), 1, 2).unwrap();
        assert_eq!(fam.toward_v.as_ref().unwrap(), &tail_v);
        for g in [&fam.current, fam.toward_u.as_ref().unwrap(), fam.toward_v.as_ref().unwrap()] {
            assert_eq!(g.order(), 5);
            assert_eq!(g.size(), 5);
        }
    }

    #[test]
    fn graft_family_on_edge() {
        let site = GraftSite::new(path(2).unwrap(), 0, 1, 2, 1).unwrap();
        let fam = graft_family(&site).unwrap();
        // attaching paths at both ends of K_2 only ever gives a path
        assert!(isomorphic(&fam.current, &path(5).unwrap()).unwrap());
        assert_eq!(site.line(2, 1), vec![3, 2, 0, 1, 4]);
        let none = GraftSite::new(path(2).unwrap(), 0, 1, 1, 0).unwrap();
        assert!(graft_family(&none).unwrap().toward_u.is_none());
        assert!(GraftSite::new(path(3).unwrap(), 0, 2, 1, 1).is_err());
    }

    #[test]
    fn gnk_examples() {
        assert_eq!(g_nk(5, 0).unwrap(), complete(5).unwrap());
        for n in 2..9 {
            assert!(isomorphic(&g_nk(n, n - 2).unwrap(), &path(n).unwrap()).unwrap());
        }
        let g = g_nk(6, 2).unwrap();
        assert_eq!(g.size(), 8);
        assert_eq!(cut_vertices(&g).unwrap(), vec![0, 1]);
        assert!(g_nk(4, 3).is_err());
        assert!(g_nk(3, 4).is_err());
        assert_eq!(g_nk(1, 0).unwrap().order(), 1);
    }

    #[test]
    fn knk_examples() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(k_nk(4, 3).unwrap(), star);
        assert_eq!(k_nk(6, 0).unwrap(), complete(6).unwrap());
        let g = k_nk(5, 1).unwrap();
        assert_eq!(cut_edges(&g).unwrap().len(), 1);
        assert!(k_nk(4, 4).is_err());
        assert!(k_nk(4, 2).is_err());
        assert!(k_nk(2, 0).is_err());
    }

    #[test]
    fn family_cut_counts() {
        for n in 4..=9 {
            for k in 0..=n - 2 {
                let g = g_nk(n, k).unwrap();
                assert_eq!(cut_vertices(&g).unwrap().len(), k, "g_nk({n},{k})");
            }
            for k in (0..n).filter(|&k| n - k != 2) {
                let g = k_nk(n, k).unwrap();
                assert_eq!(cut_edges(&g).unwrap().len(), k, "k_nk({n},{k})");
            }
        }
    }

    #[test]
    fn edge_partition_examples() {
        let p4 = path(4).unwrap();
        let part = classify_by_edge(&p4, 1, 2).unwrap();
        assert_eq!(part.side_a, vec![0]);
        assert!(part.equidistant.is_empty());
        assert_eq!(part.side_b, vec![3]);
        let part = classify_by_edge(&complete(3).unwrap(), 0, 1).unwrap();
        assert_eq!(part.equidistant, vec![2]);
        let c6 = cycle(6).unwrap();
        for &(a, b) in c6.edges() {
            assert!(classify_by_edge(&c6, a, b).unwrap().equidistant.is_empty());
        }
        assert!(classify_by_edge(&p4, 0, 2).is_err());
    }

    fn star_spec(targets: Vec<usize>) -> RelocationSpec {
        // centre u = 0, leaves v = 1, v1 = 2, v2 = 3
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        RelocationSpec::new(g, 0, 1, targets).unwrap()
    }

    #[test]
    fn relocation_examples() {
        let spec = star_spec(vec![2]);
        assert_eq!(spec.c1, vec![1]);
        let g2 = relocate_edges(&spec).unwrap();
        // path 2-1-0-3
        assert_eq!(g2.edges(), &[(0, 1), (0, 3), (1, 2)]);
        assert_eq!(find_witness(&spec, &g2), Some(3));

        let spec = star_spec(vec![2, 3]);
        let g2 = relocate_edges(&spec).unwrap();
        // star recentred at v with u as a leaf
        assert_eq!(g2.edges(), &[(0, 1), (1, 2), (1, 3)]);
        assert_eq!(find_witness(&spec, &g2), None);
    }

    #[test]
    fn relocation_rejects_bad_specs() {
        // triangle 1-4-0 inside c1: u = 0 sees {1, 4}, v = 1 sees {4} plus 5
        let g = Graph::new(6, &[(0, 1), (0, 2), (0, 4), (1, 4), (1, 5), (2, 3)]).unwrap();
        let spec = RelocationSpec::new(g.clone(), 0, 1, vec![2]).unwrap();
        assert_eq!(
            relocate_edges(&spec),
            Err(Error::Hypothesis(HypothesisViolation::NeighbourhoodMismatch))
        );
        let mut spec = star_spec(vec![2]);
        spec.c1 = vec![1, 2];
        assert_eq!(
            relocate_edges(&spec),
            Err(Error::Hypothesis(HypothesisViolation::ComponentMismatch))
        );
        assert_eq!(
            relocate_edges(&star_spec(vec![])),
            Err(Error::Hypothesis(HypothesisViolation::NoTargets))
        );
        assert_eq!(
            relocate_edges(&star_spec(vec![1])),
            Err(Error::Hypothesis(HypothesisViolation::TargetInComponent(1)))
        );
        assert_eq!(
            relocate_edges(&star_spec(vec![2, 2])),
            Err(Error::Hypothesis(HypothesisViolation::DuplicateTarget(2)))
        );
        let p4 = path(4).unwrap();
        let spec = RelocationSpec::new(p4, 1, 0, vec![3]).unwrap();
        assert_eq!(
            relocate_edges(&spec),
            Err(Error::Hypothesis(HypothesisViolation::TargetNotAdjacentToU(3)))
        );
        assert!(find_witness(&star_spec(vec![]), &Graph::empty(4).unwrap()).is_none());
    }

    #[test]
    fn closure_examples() {
        let tree = Graph::new(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(block_clique_closure(&tree).unwrap(), tree);
        assert_eq!(block_clique_closure(&cycle(5).unwrap()).unwrap(), complete(5).unwrap());
        let c4p = attach_path(&cycle(4).unwrap(), 0, 1).unwrap();
        let closed = block_clique_closure(&c4p).unwrap();
        assert_eq!(closed, attach_path(&complete(4).unwrap(), 0, 1).unwrap());
        assert_eq!(cut_vertices(&closed).unwrap(), vec![0]);
        let d = DistanceMatrix::from_graph(&c4p).unwrap();
        let dc = DistanceMatrix::from_graph(&closed).unwrap();
        assert!(distance_dominates(&d, &dc).unwrap());
        assert_eq!(block_clique_closure(&closed).unwrap(), closed);
    }

    #[test]
    fn domination_examples() {
        let p4 = DistanceMatrix::from_graph(&path(4).unwrap()).unwrap();
        let c4 = DistanceMatrix::from_graph(&cycle(4).unwrap()).unwrap();
        assert!(distance_dominates(&p4, &c4).unwrap());
        assert!(!distance_dominates(&c4, &p4).unwrap());
        // 2-0-1-3 vs 0-1-2-3: incomparable
        let other = Graph::new(4, &[(0, 1), (0, 2), (1, 3)]).unwrap();
        let d_other = DistanceMatrix::from_graph(&other).unwrap();
        assert!(!distance_dominates(&p4, &d_other).unwrap());
        assert!(!distance_dominates(&d_other, &p4).unwrap());
        let k3 = DistanceMatrix::from_graph(&complete(3).unwrap()).unwrap();
        assert!(distance_dominates(&k3, &p4).is_err());
    }
}
