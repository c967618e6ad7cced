//! Isomorph-free generation of connected graphs by vertex augmentation.
//!
//! Every connected graph on `n` vertices has a non-cut vertex, so it arises
//! from a connected graph on `n − 1` vertices by adding one vertex joined to
//! a nonempty subset. Children are deduplicated by canonical key and each
//! level is kept as the sorted list of canonical forms.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_key_with_max};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure;

/// Default largest order enumerated without an explicit override.
pub const DEFAULT_MAX_N: usize = 9;
/// Hard ceiling, reachable only through an override.
pub const HARD_MAX_N: usize = 10;

/// Cut-structure filter for [`filtered_graphs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumFilter {
    pub cut_vertex_count: Option<usize>,
    pub cut_edge_count: Option<usize>,
    pub max_n: usize,
}

impl EnumFilter {
    pub fn cut_vertices(k: usize) -> Self {
        EnumFilter {
            cut_vertex_count: Some(k),
            cut_edge_count: None,
            max_n: DEFAULT_MAX_N,
        }
    }

    pub fn cut_edges(k: usize) -> Self {
        EnumFilter {
            cut_vertex_count: None,
            cut_edge_count: Some(k),
            max_n: DEFAULT_MAX_N,
        }
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n;
        self
    }

    pub fn matches(&self, g: &Graph) -> Result<bool> {
        if let Some(k) = self.cut_vertex_count {
            if structure::cut_vertices(g)?.len() != k {
                return Ok(false);
            }
        }
        if let Some(k) = self.cut_edge_count {
            if structure::cut_edges(g)?.len() != k {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// One representative per isomorphism class, with its canonical key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumerated {
    pub key: Vec<u8>,
    pub graph: Graph,
}

fn check_order(n: usize, max_n: usize) -> Result<()> {
    if max_n > HARD_MAX_N {
        return Err(Error::InvalidParameter(format!(
            "enumeration cap {max_n} exceeds the hard limit {HARD_MAX_N}"
        )));
    }
    if n == 0 || n > max_n {
        return Err(Error::InvalidParameter(format!(
            "enumeration order must lie in 1..={max_n}, got {n}"
        )));
    }
    Ok(())
}

fn children(parent: &Graph, max_n: usize) -> Vec<(Vec<u8>, Graph)> {
    let n = parent.order();
    let grown = parent.with_extra_vertices(1).expect("order within limit");
    (1u64..(1 << n))
        .map(|subset| {
            let mut rows = grown.rows().to_vec();
            rows[n] = subset;
            for (v, row) in rows.iter_mut().enumerate().take(n) {
                if subset & (1 << v) != 0 {
                    *row |= 1 << n;
                }
            }
            let child = Graph::from_rows(rows);
            let key = canonical_key_with_max(&child, max_n).expect("order checked");
            (key, child)
        })
        .collect()
}

fn next_level(level: &[Enumerated], max_n: usize) -> Vec<Enumerated> {
    let merged: BTreeMap<Vec<u8>, Graph> = level
        .par_iter()
        .map(|parent| {
            let mut local = BTreeMap::new();
            for (key, child) in children(&parent.graph, max_n) {
                local.entry(key).or_insert(child);
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (key, g) in b {
                a.entry(key).or_insert(g);
            }
            a
        });
    merged
        .into_iter()
        .map(|(key, g)| Enumerated {
            key,
            graph: canonical_form(&g),
        })
        .collect()
}

/// Levels up to the default cap are memoised per process; keys do not
/// depend on the cap, so one entry per order suffices.
fn level_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<Enumerated>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Enumerated>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn level(n: usize, max_n: usize) -> Result<Arc<Vec<Enumerated>>> {
    if let Some(hit) = level_cache().lock().expect("cache lock").get(&n) {
        return Ok(Arc::clone(hit));
    }
    let built = if n == 1 {
        let single = Graph::empty(1)?;
        vec![Enumerated {
            key: canonical_key_with_max(&single, max_n)?,
            graph: single,
        }]
    } else {
        next_level(&level(n - 1, max_n)?, max_n)
    };
    let built = Arc::new(built);
    if n <= DEFAULT_MAX_N {
        level_cache()
            .lock()
            .expect("cache lock")
            .insert(n, Arc::clone(&built));
    }
    Ok(built)
}

/// All connected graphs on `n` vertices up to isomorphism, in canonical
/// form, sorted by canonical key.
pub fn connected_graphs_keyed(n: usize, max_n: usize) -> Result<Vec<Enumerated>> {
    check_order(n, max_n)?;
    Ok(level(n, max_n)?.as_ref().clone())
}

/// As [`connected_graphs_keyed`], but rebuilds every level without
/// touching the memo.
pub fn generate_connected(n: usize, max_n: usize) -> Result<Vec<Enumerated>> {
    check_order(n, max_n)?;
    let single = Graph::empty(1)?;
    let mut level = vec![Enumerated {
        key: canonical_key_with_max(&single, max_n)?,
        graph: single,
    }];
    for _ in 1..n {
        level = next_level(&level, max_n);
    }
    Ok(level)
}

pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    connected_graphs_with_max(n, DEFAULT_MAX_N)
}

pub fn connected_graphs_with_max(n: usize, max_n: usize) -> Result<Vec<Graph>> {
    Ok(connected_graphs_keyed(n, max_n)?
        .into_iter()
        .map(|e| e.graph)
        .collect())
}

/// The connected graphs on `n` vertices that pass `filter`, sorted by key.
pub fn filtered_graphs_keyed(n: usize, filter: &EnumFilter) -> Result<Vec<Enumerated>> {
    if filter.cut_vertex_count.is_none() && filter.cut_edge_count.is_none() {
        return Err(Error::InvalidParameter(
            "filter needs a cut-vertex or cut-edge count".into(),
        ));
    }
    let all = connected_graphs_keyed(n, filter.max_n)?;
    let flags: Vec<bool> = all
        .par_iter()
        .map(|e| filter.matches(&e.graph))
        .collect::<Result<_>>()?;
    Ok(all
        .into_iter()
        .zip(flags)
        .filter_map(|(e, keep)| keep.then_some(e))
        .collect())
}

pub fn filtered_graphs(n: usize, filter: &EnumFilter) -> Result<Vec<Graph>> {
    Ok(filtered_graphs_keyed(n, filter)?
        .into_iter()
        .map(|e| e.graph)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_key;
    use crate::transforms::{complete, cycle, path};
    use std::collections::BTreeSet;

    /// Oracle: every edge subset of `K_n`, connected ones deduplicated.
    fn brute_force(n: usize) -> BTreeSet<Vec<u8>> {
        let pairs: Vec<_> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        (0u64..(1 << pairs.len()))
            .filter_map(|mask| {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, &edges).unwrap();
                g.is_connected().then(|| canonical_key(&g).unwrap())
            })
            .collect()
    }

    #[test]
    fn memo_matches_fresh_generation() {
        for n in 1..=6 {
            assert_eq!(
                generate_connected(n, DEFAULT_MAX_N).unwrap(),
                connected_graphs_keyed(n, DEFAULT_MAX_N).unwrap()
            );
        }
    }

    #[test]
    fn small_counts() {
        let counts: Vec<_> = (1..=6)
            .map(|n| connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn matches_brute_force() {
        for n in 1..=6 {
            let keys: BTreeSet<_> = connected_graphs_keyed(n, DEFAULT_MAX_N)
                .unwrap()
                .into_iter()
                .map(|e| e.key)
                .collect();
            assert_eq!(keys, brute_force(n), "n = {n}");
        }
    }

    #[test]
    fn keys_strictly_increase() {
        let level = connected_graphs_keyed(6, DEFAULT_MAX_N).unwrap();
        assert!(level.windows(2).all(|w| w[0].key < w[1].key));
        for e in &level {
            assert_eq!(canonical_key(&e.graph).unwrap(), e.key);
        }
    }

    #[test]
    fn order_bounds() {
        assert!(connected_graphs(0).is_err());
        assert!(connected_graphs(10).is_err());
        assert!(connected_graphs_with_max(4, 11).is_err());
        assert_eq!(connected_graphs(1).unwrap().len(), 1);
    }

    #[test]
    fn filter_examples() {
        let three = filtered_graphs(5, &EnumFilter::cut_vertices(3)).unwrap();
        assert_eq!(three.len(), 1);
        assert_eq!(canonical_key(&three[0]).unwrap(), canonical_key(&path(5).unwrap()).unwrap());

        let bridgeless = filtered_graphs(4, &EnumFilter::cut_edges(0)).unwrap();
        let mut want: Vec<_> = [
            cycle(4).unwrap(),
            complete(4).unwrap().without_edge(0, 1).unwrap(),
            complete(4).unwrap(),
        ]
        .iter()
        .map(|g| canonical_key(g).unwrap())
        .collect();
        want.sort();
        let got: Vec<_> = bridgeless.iter().map(|g| canonical_key(g).unwrap()).collect();
        assert_eq!(got, want);

        assert!(filtered_graphs(4, &EnumFilter::cut_vertices(5)).unwrap().is_empty());
        let none = EnumFilter {
            cut_vertex_count: None,
            cut_edge_count: None,
            max_n: DEFAULT_MAX_N,
        };
        assert!(filtered_graphs(4, &none).is_err());
    }

    #[test]
    fn cut_vertex_classes_partition() {
        for n in 2..=7 {
            let total = connected_graphs(n).unwrap().len();
            let sum: usize = (0..=n - 2)
                .map(|k| filtered_graphs(n, &EnumFilter::cut_vertices(k)).unwrap().len())
                .sum();
            assert_eq!(sum, total, "n = {n}");
        }
    }
}
