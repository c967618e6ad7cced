//! Cut structure: articulation points, bridges, blocks and pendant paths.

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;

/// A pendant path `v_0 v_1 ... v_s`: the root `v_0` has degree > 2, the
/// interior vertices have degree 2 and the tip `v_s` has degree 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PendantPath {
    pub root: usize,
    /// `v_1 .. v_s`, ordered away from the root.
    pub vertices: Vec<usize>,
}

impl PendantPath {
    /// Number of edges `s`.
    pub fn length(&self) -> usize {
        self.vertices.len()
    }

    pub fn tip(&self) -> usize {
        *self.vertices.last().expect("pendant path has length >= 1")
    }

    /// `v_0 .. v_s`, root first.
    pub fn with_root(&self) -> Vec<usize> {
        let mut all = Vec::with_capacity(self.vertices.len() + 1);
        all.push(self.root);
        all.extend_from_slice(&self.vertices);
        all
    }
}

/// Blocks (maximal 2-connected subgraphs or bridges) together with the cut
/// vertices and cut edges of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub cut_vertices: Vec<usize>,
    pub cut_edges: Vec<(usize, usize)>,
    /// Vertex sets of the blocks, each sorted; the list is sorted.
    pub blocks: Vec<Vec<usize>>,
}

struct Lowpoint<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    is_cut: Vec<bool>,
    bridges: Vec<(usize, usize)>,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
}

impl<'a> Lowpoint<'a> {
    fn run(g: &'a Graph) -> Self {
        let n = g.order();
        let mut state = Lowpoint {
            g,
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            timer: 0,
            is_cut: vec![false; n],
            bridges: Vec::new(),
            edge_stack: Vec::new(),
            blocks: Vec::new(),
        };
        if n > 0 {
            state.visit(0, None);
        }
        state
    }

    fn visit(&mut self, v: usize, parent: Option<usize>) {
        self.disc[v] = self.timer;
        self.low[v] = self.timer;
        self.timer += 1;
        let mut children = 0;
        for &w in self.g.neighbors(v) {
            if Some(w) == parent {
                continue;
            }
            if self.disc[w] == usize::MAX {
                children += 1;
                self.edge_stack.push((v, w));
                self.visit(w, Some(v));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] > self.disc[v] {
                    self.bridges.push((v.min(w), v.max(w)));
                }
                if self.low[w] >= self.disc[v] {
                    if parent.is_some() {
                        self.is_cut[v] = true;
                    }
                    self.pop_block((v, w));
                }
            } else if self.disc[w] < self.disc[v] {
                self.low[v] = self.low[v].min(self.disc[w]);
                self.edge_stack.push((v, w));
            }
        }
        if parent.is_none() && children > 1 {
            self.is_cut[v] = true;
        }
    }

    fn pop_block(&mut self, until: (usize, usize)) {
        let mut members = 0u64;
        while let Some(e) = self.edge_stack.pop() {
            members |= 1 << e.0 | 1 << e.1;
            if e == until {
                break;
            }
        }
        self.blocks.push(crate::graph::bits(members).collect());
    }
}

/// Articulation points of a connected graph, ascending.
pub fn cut_vertices(g: &Graph) -> Result<Vec<usize>> {
    g.require_connected()?;
    let state = Lowpoint::run(g);
    Ok((0..g.order()).filter(|&v| state.is_cut[v]).collect())
}

/// Bridges of a connected graph as `(u, v)` with `u < v`, sorted.
pub fn cut_edges(g: &Graph) -> Result<Vec<(usize, usize)>> {
    g.require_connected()?;
    let mut bridges = Lowpoint::run(g).bridges;
    bridges.sort_unstable();
    Ok(bridges)
}

/// Block decomposition from one lowpoint DFS.
pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    let state = Lowpoint::run(g);
    let mut blocks = state.blocks;
    if g.order() == 1 {
        blocks.push(vec![0]);
    }
    blocks.sort();
    let mut cut_edges = state.bridges;
    cut_edges.sort_unstable();
    Ok(BlockDecomposition {
        cut_vertices: (0..g.order()).filter(|&v| state.is_cut[v]).collect(),
        cut_edges,
        blocks,
    })
}

/// All pendant paths, sorted by root and then by first vertex.
///
/// A graph with no vertex of degree > 2 (a path or a cycle) has none.
pub fn pendant_paths(g: &Graph) -> Vec<PendantPath> {
    let mut out = Vec::new();
    for root in (0..g.order()).filter(|&r| g.degree(r) > 2) {
        for &first in g.neighbors(root) {
            let mut vertices = vec![first];
            let (mut prev, mut cur) = (root, first);
            while g.degree(cur) == 2 {
                let next = g.neighbors(cur).iter().copied().find(|&w| w != prev);
                match next {
                    Some(w) if w != root && !vertices.contains(&w) => {
                        vertices.push(w);
                        prev = cur;
                        cur = w;
                    }
                    _ => break,
                }
            }
            if g.degree(cur) == 1 {
                out.push(PendantPath { root, vertices });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        Graph::new(n, &edges).unwrap()
    }

    fn k4_with_pendant() -> Graph {
        complete(4).with_extra_vertices(1).unwrap().with_edge(0, 4).unwrap()
    }

    #[test]
    fn cut_vertices_examples() {
        assert_eq!(cut_vertices(&path(4)).unwrap(), vec![1, 2]);
        assert!(cut_vertices(&complete(5)).unwrap().is_empty());
        assert_eq!(cut_vertices(&k4_with_pendant()).unwrap(), vec![0]);
        assert!(cut_vertices(&Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn cut_edges_examples() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(cut_edges(&star).unwrap(), vec![(0, 1), (0, 2), (0, 3)]);
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(cut_edges(&c4).unwrap().is_empty());
        assert_eq!(cut_edges(&path(4)).unwrap(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn block_examples() {
        let b = blocks(&path(4)).unwrap();
        assert_eq!(b.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(b.cut_vertices, vec![1, 2]);

        let b = blocks(&k4_with_pendant()).unwrap();
        assert_eq!(b.blocks, vec![vec![0, 1, 2, 3], vec![0, 4]]);
        assert_eq!(b.cut_vertices, vec![0]);
        assert_eq!(b.cut_edges, vec![(0, 4)]);

        // bowtie: triangles {0,1,2} and {2,3,4} sharing 2
        let bowtie = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let b = blocks(&bowtie).unwrap();
        assert_eq!(b.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(b.cut_vertices, vec![2]);
        assert!(b.cut_edges.is_empty());

        let single = blocks(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(single.blocks, vec![vec![0]]);
    }

    #[test]
    fn pendant_path_examples() {
        // K_4 with a two-vertex tail 0-4-5
        let g = complete(4)
            .with_extra_vertices(2)
            .unwrap()
            .with_edge(0, 4)
            .unwrap()
            .with_edge(4, 5)
            .unwrap();
        let paths = pendant_paths(&g);
        assert_eq!(
            paths,
            vec![PendantPath {
                root: 0,
                vertices: vec![4, 5]
            }]
        );
        assert_eq!(paths[0].length(), 2);
        assert_eq!(paths[0].with_root(), vec![0, 4, 5]);

        assert!(pendant_paths(&path(5)).is_empty());

        // spider with center 0 and legs of lengths 1, 2, 3
        let spider = Graph::new(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
        let lens: Vec<_> = pendant_paths(&spider)
            .iter()
            .map(|p| (p.root, p.length()))
            .collect();
        assert_eq!(lens, vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn degree_two_root_is_not_a_root() {
        // triangle 0-1-2 with tail at 0: root degree is 3, so one path
        let g = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        assert_eq!(pendant_paths(&g).len(), 1);
        // cycle plus nothing: no paths
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert!(pendant_paths(&c5).is_empty());
    }
}
