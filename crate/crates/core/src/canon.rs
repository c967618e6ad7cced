//! Canonical keys for isomorphism deduplication at small order.
//!
//! The key is the lexicographically smallest column-major upper-triangle
//! adjacency bit string over all vertex orderings that respect an
//! equitable colour refinement (vertices sorted by refined colour). Since
//! the refinement is label-independent, the admissible orderings of
//! isomorphic graphs correspond, and so do their minima.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on the order accepted by [`canonical_key`].
pub const DEFAULT_MAX_CANON_ORDER: usize = 10;

/// Canonical key: first byte is the order, then the minimal bit string
/// packed most-significant-bit first.
pub fn canonical_key(g: &Graph) -> Result<Vec<u8>> {
    canonical_key_with_max(g, DEFAULT_MAX_CANON_ORDER)
}

pub fn canonical_key_with_max(g: &Graph, max_order: usize) -> Result<Vec<u8>> {
    let n = g.order();
    if n > max_order {
        return Err(Error::TooLarge { n, max: max_order });
    }
    let order = canonical_order(g);
    Ok(pack(g, &order))
}

/// Vertex ordering attaining the canonical key; `order[p]` is the vertex
/// placed at position `p`.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 1 {
        return (0..n).collect();
    }
    let colours = refine(g);
    let mut cell_of_position: Vec<u32> = colours.clone();
    cell_of_position.sort_unstable();

    let mut search = Search {
        rows: g.rows(),
        colours: &colours,
        cell_of_position: &cell_of_position,
        order: Vec::with_capacity(n),
        used: 0,
        columns: Vec::with_capacity(n),
        best: None,
    };
    search.descend();
    search.best.expect("at least one ordering").1
}

/// Colour refinement starting from degrees. Colours are ranks of
/// signatures, so they do not depend on the labeling.
fn refine(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut colours: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut classes = count_distinct(&colours);
    loop {
        let signatures: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nbr: Vec<u32> = g.neighbors(v).iter().map(|&w| colours[w]).collect();
                nbr.sort_unstable();
                (colours[v], nbr)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present") as u32)
            .collect();
        let next_classes = distinct.len();
        colours = next;
        if next_classes == classes {
            return colours;
        }
        classes = next_classes;
    }
}

fn count_distinct(values: &[u32]) -> usize {
    let mut v = values.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Search<'a> {
    rows: &'a [u64],
    colours: &'a [u32],
    cell_of_position: &'a [u32],
    order: Vec<usize>,
    used: u64,
    /// `columns[p]`: bits of column `p` (adjacency of position `p` to
    /// positions `0..p`), position 0 in the most significant slot.
    columns: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn column_for(&self, v: usize) -> u64 {
        let p = self.order.len();
        self.order.iter().enumerate().fold(0u64, |acc, (i, &w)| {
            if self.rows[v] & (1 << w) != 0 {
                acc | 1 << (p - 1 - i)
            } else {
                acc
            }
        })
    }

    fn twins(&self, a: usize, b: usize) -> bool {
        self.rows[a] & !(1 << b) == self.rows[b] & !(1 << a)
    }

    /// Depth-first over positions. At each position only the candidates
    /// with the smallest column survive, since that column precedes all
    /// later ones in the key.
    fn descend(&mut self) {
        let p = self.order.len();
        if p == self.colours.len() {
            let better = match &self.best {
                None => true,
                Some((cols, _)) => self.columns < *cols,
            };
            if better {
                self.best = Some((self.columns.clone(), self.order.clone()));
            }
            return;
        }
        let cell = self.cell_of_position[p];
        let candidates: Vec<(u64, usize)> = (0..self.colours.len())
            .filter(|&v| self.used & (1 << v) == 0 && self.colours[v] == cell)
            .map(|v| (self.column_for(v), v))
            .collect();
        let min_col = candidates.iter().map(|c| c.0).min().expect("cell nonempty");

        // Prune against the incumbent: with an equal prefix, a larger
        // column can never win.
        if let Some((cols, _)) = &self.best {
            if self.columns.as_slice() == &cols[..p] && min_col > cols[p] {
                return;
            }
        }
        let mut explored: Vec<usize> = Vec::new();
        for &(col, v) in candidates.iter().filter(|c| c.0 == min_col) {
            // Swapping twins is an automorphism fixing every placed vertex,
            // so a twin of an explored candidate yields the same columns.
            if explored.iter().any(|&w| self.twins(v, w)) {
                continue;
            }
            explored.push(v);
            if let Some((cols, _)) = &self.best {
                if self.columns.as_slice() == &cols[..p] && col > cols[p] {
                    continue;
                }
            }
            self.order.push(v);
            self.columns.push(col);
            self.used |= 1 << v;
            self.descend();
            self.used &= !(1 << v);
            self.columns.pop();
            self.order.pop();
        }
    }
}

/// Column-major upper-triangle bits under `order`, with the order byte in
/// front.
fn pack(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut key = vec![0u8; 1 + nbits.div_ceil(8)];
    key[0] = n as u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                key[1 + k / 8] |= 0x80 >> (k % 8);
            }
            k += 1;
        }
    }
    key
}

/// The graph relabeled into canonical order.
pub fn canonical_form(g: &Graph) -> Graph {
    let order = canonical_order(g);
    let mut perm = vec![0; order.len()];
    for (p, &v) in order.iter().enumerate() {
        perm[v] = p;
    }
    g.relabel(&perm).expect("canonical order is a permutation")
}

/// Isomorphism test by canonical key. Orders above the canonical cap are
/// reported as an error rather than searched.
pub fn isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    Ok(canonical_key(a)? == canonical_key(b)?)
}
