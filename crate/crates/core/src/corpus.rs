//! Seeded instance generators for tests, the acceptance suite, and the
//! `corpus generate` CLI command.

use crate::graph::{Digraph, Graph};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Erdos-Renyi G(n, p), deterministic per seed.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// G(n, p) plus a random spanning tree, so the result is connected.
pub fn gnp_connected(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = std::collections::HashSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    let edges: Vec<(usize, usize)> = {
        let mut e: Vec<_> = edges.into_iter().collect();
        e.sort_unstable();
        e
    };
    Graph::from_edges(n, &edges).unwrap()
}

/// Sparse random graph with approximately `m` edges on large n.
pub fn random_with_edges(n: usize, m: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::with_capacity(m * 2);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let key = ((u.min(v) as u64) << 32) | u.max(v) as u64;
        if seen.insert(key) {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random digraph D(n, p) over ordered pairs.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, &arcs).unwrap()
}

/// Sparse random digraph with approximately `m` arcs on large n.
pub fn random_digraph_with_arcs(n: usize, m: usize, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::with_capacity(m * 2);
    let mut arcs = Vec::with_capacity(m);
    while arcs.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let key = ((u as u64) << 32) | v as u64;
        if seen.insert(key) {
            arcs.push((u, v));
        }
    }
    Digraph::from_arcs(n, &arcs).unwrap()
}

/// Disjoint union of cliques with the given sizes.
pub fn disjoint_cliques(sizes: &[usize]) -> Graph {
    let mut g = Graph::empty(0);
    for &s in sizes {
        g = g.disjoint_union(&Graph::complete(s));
    }
    g
}

/// Split n vertices into `parts` cliques as evenly as possible.
pub fn clique_union(n: usize, parts: usize, seed: u64) -> Graph {
    assert!(parts >= 1 && parts <= n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sizes = vec![1usize; parts];
    for _ in 0..n - parts {
        let i = rng.gen_range(0..parts);
        sizes[i] += 1;
    }
    disjoint_cliques(&sizes)
}

/// Disjoint union of complete digraphs with the given sizes.
pub fn disjoint_complete_digraphs(sizes: &[usize]) -> Digraph {
    let mut arcs = Vec::new();
    let mut off = 0;
    for &s in sizes {
        for u in 0..s {
            for v in 0..s {
                if u != v {
                    arcs.push((off + u, off + v));
                }
            }
        }
        off += s;
    }
    Digraph::from_arcs(off, &arcs).unwrap()
}

/// All labeled graphs on n vertices (n small), by edge bitmask.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(gnp(10, 0.4, 1), gnp(10, 0.4, 1));
        assert_eq!(gnp_connected(10, 0.1, 2), gnp_connected(10, 0.1, 2));
        assert!(gnp_connected(10, 0.0, 3).is_connected());
    }

    #[test]
    fn clique_union_covers_n() {
        let g = clique_union(12, 3, 0);
        assert_eq!(g.n(), 12);
    }

    #[test]
    fn all_graphs_count() {
        assert_eq!(all_graphs(3).count(), 8);
    }
}
