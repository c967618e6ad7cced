//! Independent oracles for the integration tests. Nothing here calls into
//! the library's numerics or canonical labelling.

#![allow(dead_code, clippy::needless_range_loop)]

use distspec::Graph;
use proptest::prelude::*;

/// All-pairs distances by Floyd–Warshall; `None` when disconnected.
pub fn floyd_warshall(g: &Graph) -> Option<Vec<Vec<u32>>> {
    let n = g.order();
    const INF: u32 = u32::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(a, b) in g.edges() {
        d[a][b] = 1;
        d[b][a] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d.iter().flatten().all(|&x| x < INF).then_some(d)
}

/// Largest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
pub fn jacobi_max_eigenvalue(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).fold(f64::NEG_INFINITY, f64::max)
}

/// Spectral radius of the distance matrix via the two oracles above.
pub fn oracle_radius(g: &Graph) -> f64 {
    let d = floyd_warshall(g).expect("connected");
    let m: Vec<Vec<f64>> = d
        .iter()
        .map(|r| r.iter().map(|&x| x as f64).collect())
        .collect();
    jacobi_max_eigenvalue(&m)
}

/// Smallest upper-triangle bit string over all relabellings.
pub fn brute_canonical(g: &Graph) -> Vec<bool> {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut bits = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        for j in 1..n {
            for i in 0..j {
                bits.push(g.has_edge(p[i], p[j]));
            }
        }
        if best.as_ref().is_none_or(|b| bits < *b) {
            best = Some(bits);
        }
    });
    best.unwrap_or_default()
}

fn permute(p: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == p.len() {
        visit(p);
        return;
    }
    for i in at..p.len() {
        p.swap(at, i);
        permute(p, at + 1, visit);
        p.swap(at, i);
    }
}

/// Connected graphs of order `min..=max`: a random spanning tree plus
/// extra edges at a random density.
pub fn connected_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|i| (0..i).boxed()).collect();
        let pairs = n * (n - 1) / 2;
        (Just(n), parents, proptest::collection::vec(0.0..1.0f64, pairs), 0.0..1.0f64)
            .prop_map(|(n, parents, extra, density)| {
                let mut edges: Vec<(usize, usize)> =
                    parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
                let mut idx = 0;
                for j in 1..n {
                    for i in 0..j {
                        let keep = extra[idx] < density;
                        idx += 1;
                        if keep && !edges.contains(&(i, j)) {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::new(n, &edges).unwrap()
            })
    })
}

/// A graph paired with a permutation of its vertices.
pub fn graph_and_permutation(min: usize, max: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    connected_graph(min, max).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}
