//! Depth-first search forests and the structure the paired theorems consume:
//! leaves, depths, preorder, and the deepest root-to-leaf path.
//!
//! The DFS is iterative (explicit stack) so inputs with millions of vertices
//! do not overflow the call stack.

use crate::graph::{Digraph, Graph};
use crate::solution::{tour_length, tour_length_directed, Tour, VertexPath};
use crate::Error;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Tie-breaking policy for root selection and neighbor iteration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderingPolicy {
    /// Ascending vertex id everywhere (the default; deterministic).
    Ascending,
    /// Seeded random shuffle of roots and neighbor lists (deterministic per seed).
    Seeded(u64),
}

impl Default for OrderingPolicy {
    fn default() -> Self {
        OrderingPolicy::Ascending
    }
}

/// A rooted spanning forest produced by depth-first search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DfsForest {
    pub parent: Vec<Option<usize>>,
    pub depth: Vec<usize>,
    /// Vertices in visitation order.
    pub preorder: Vec<usize>,
    pub roots: Vec<usize>,
    /// Vertices with no tree child, sorted.
    pub leaves: Vec<usize>,
}

impl DfsForest {
    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn max_depth(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.leaves.binary_search(&v).is_ok()
    }
}

fn dfs_core(n: usize, adj: &[Vec<usize>], root_order: &[usize]) -> DfsForest {
    let mut parent = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut preorder = Vec::with_capacity(n);
    let mut roots = Vec::new();
    let mut has_child = vec![false; n];
    let mut visited = vec![false; n];
    let mut next = vec![0usize; n]; // per-vertex cursor into its adjacency list
    let mut stack = Vec::new();

    for &root in root_order {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        roots.push(root);
        preorder.push(root);
        stack.push(root);
        while let Some(&v) = stack.last() {
            let mut advanced = false;
            while next[v] < adj[v].len() {
                let w = adj[v][next[v]];
                next[v] += 1;
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = Some(v);
                    depth[w] = depth[v] + 1;
                    has_child[v] = true;
                    preorder.push(w);
                    stack.push(w);
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                stack.pop();
            }
        }
    }
    let leaves = (0..n).filter(|&v| !has_child[v]).collect();
    DfsForest {
        parent,
        depth,
        preorder,
        roots,
        leaves,
    }
}

fn run_with_policy(n: usize, adj: &[Vec<usize>], policy: OrderingPolicy) -> DfsForest {
    match policy {
        OrderingPolicy::Ascending => {
            let roots: Vec<usize> = (0..n).collect();
            dfs_core(n, adj, &roots)
        }
        OrderingPolicy::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut roots: Vec<usize> = (0..n).collect();
            roots.shuffle(&mut rng);
            let mut shuffled: Vec<Vec<usize>> = adj.to_vec();
            for list in &mut shuffled {
                list.shuffle(&mut rng);
            }
            dfs_core(n, &shuffled, &roots)
        }
    }
}

/// DFS forest of an undirected graph.
pub fn dfs_forest(g: &Graph, policy: OrderingPolicy) -> DfsForest {
    run_with_policy(g.n(), g.adjacency(), policy)
}

/// DFS forest of a digraph; tree arcs follow arc direction.
pub fn dfs_forest_directed(d: &Digraph, policy: OrderingPolicy) -> DfsForest {
    run_with_policy(d.n(), d.adjacency(), policy)
}

/// Longest root-to-leaf path of the forest: ties broken by earliest
/// visitation of the deepest endpoint.
pub fn deepest_path(f: &DfsForest) -> Result<VertexPath, Error> {
    if f.n() == 0 {
        return Err(Error::EmptyForest);
    }
    let mut best = f.preorder[0];
    for &v in &f.preorder {
        if f.depth[v] > f.depth[best] {
            best = v;
        }
    }
    let mut path = vec![best];
    let mut v = best;
    while let Some(p) = f.parent[v] {
        path.push(p);
        v = p;
    }
    path.reverse();
    Ok(VertexPath { vertices: path })
}

/// Preorder traversal of the forest as a (1,2)-TSP tour. Steps are costed 1
/// whenever the graph actually contains the edge, even between trees.
pub fn preorder_tour(f: &DfsForest, g: &Graph) -> Result<Tour, Error> {
    check_forest_matches(f, g.n(), |u, v| g.has_edge(u, v))?;
    let order = f.preorder.clone();
    let length = tour_length(&order, g);
    Ok(Tour { order, length })
}

/// Directed preorder tour: arc present means cost 1, absent cost 2.
pub fn preorder_tour_directed(f: &DfsForest, d: &Digraph) -> Result<Tour, Error> {
    check_forest_matches(f, d.n(), |u, v| d.has_arc(u, v))?;
    let order = f.preorder.clone();
    let length = tour_length_directed(&order, d);
    Ok(Tour { order, length })
}

fn check_forest_matches(
    f: &DfsForest,
    n: usize,
    edge: impl Fn(usize, usize) -> bool,
) -> Result<(), Error> {
    if f.n() != n || f.preorder.len() != n {
        return Err(Error::InvalidSolution("forest does not match the input".into()));
    }
    for (v, &p) in f.parent.iter().enumerate() {
        if let Some(p) = p {
            if !edge(p, v) {
                return Err(Error::InvalidSolution(format!(
                    "tree edge {p}-{v} missing from the input"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::IndependentSet;

    fn two_triangles() -> Graph {
        Graph::complete(3).disjoint_union(&Graph::complete(3))
    }

    #[test]
    fn empty_graph_forest() {
        let g = Graph::empty(4);
        let f = dfs_forest(&g, OrderingPolicy::Ascending);
        assert_eq!(f.roots, vec![0, 1, 2, 3]);
        assert_eq!(f.leaves, vec![0, 1, 2, 3]);
        assert!(f.depth.iter().all(|&d| d == 0));
    }

    #[test]
    fn complete_graph_is_a_chain() {
        let f = dfs_forest(&Graph::complete(4), OrderingPolicy::Ascending);
        assert_eq!(f.roots, vec![0]);
        assert_eq!(f.leaves, vec![3]);
        assert_eq!(f.max_depth(), 3);
        assert_eq!(f.preorder, vec![0, 1, 2, 3]);
    }

    #[test]
    fn two_triangles_forest() {
        // simulate DFS with ascending-id policy: chains 0-1-2 and 3-4-5
        let f = dfs_forest(&two_triangles(), OrderingPolicy::Ascending);
        assert_eq!(f.roots, vec![0, 3]);
        assert_eq!(f.leaves, vec![2, 5]);
        assert_eq!(f.max_depth(), 2);
    }

    #[test]
    fn directed_path_and_cycles() {
        let d = Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let f = dfs_forest_directed(&d, OrderingPolicy::Ascending);
        assert_eq!(f.leaves, vec![3]);
        assert_eq!(f.roots, vec![0]);

        // two disjoint 2-cycles -> 2 trees of depth 1, 2 leaves
        let d = Digraph::from_arcs(4, &[(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
        let f = dfs_forest_directed(&d, OrderingPolicy::Ascending);
        assert_eq!(f.roots, vec![0, 2]);
        assert_eq!(f.leaves, vec![1, 3]);
        assert_eq!(f.max_depth(), 1);

        let f = dfs_forest_directed(&Digraph::complete(3), OrderingPolicy::Ascending);
        assert_eq!(f.max_depth(), 2);
        assert_eq!(f.leaves.len(), 1);
    }

    #[test]
    fn deepest_path_picks_deeper_tree() {
        // trees of depth 1 and 2: path P_2 plus path P_3
        let g = Graph::path(2).disjoint_union(&Graph::path(3));
        let f = dfs_forest(&g, OrderingPolicy::Ascending);
        let p = deepest_path(&f).unwrap();
        assert_eq!(p.vertices, vec![2, 3, 4]);

        let chain = dfs_forest(&Graph::complete(4), OrderingPolicy::Ascending);
        assert_eq!(deepest_path(&chain).unwrap().len(), 4);

        let iso = dfs_forest(&Graph::empty(3), OrderingPolicy::Ascending);
        assert_eq!(deepest_path(&iso).unwrap().len(), 1);
    }

    #[test]
    fn preorder_tour_examples() {
        // K_3: Hamiltonian, length 3, one leaf
        let f = dfs_forest(&Graph::complete(3), OrderingPolicy::Ascending);
        let t = preorder_tour(&f, &Graph::complete(3)).unwrap();
        assert_eq!(t.length, 3);
        assert_eq!(f.leaves.len(), 1);

        // empty n=4: all steps cost 2
        let g = Graph::empty(4);
        let f = dfs_forest(&g, OrderingPolicy::Ascending);
        let t = preorder_tour(&f, &g).unwrap();
        assert_eq!(t.length, 8);
        assert_eq!(f.leaves.len(), 4);

        // two triangles: simulate preorder and cost steps -> length 8
        let g = two_triangles();
        let f = dfs_forest(&g, OrderingPolicy::Ascending);
        let t = preorder_tour(&f, &g).unwrap();
        assert_eq!(t.length, 8);
        assert_eq!(f.leaves.len(), 2);
    }

    #[test]
    fn forest_graph_mismatch_rejected() {
        let f = dfs_forest(&Graph::complete(3), OrderingPolicy::Ascending);
        assert!(preorder_tour(&f, &Graph::empty(3)).is_err());
        assert!(preorder_tour(&f, &Graph::complete(4)).is_err());
    }

    #[test]
    fn leaves_are_independent_and_bound_holds() {
        for seed in 0..20u64 {
            let g = crate::corpus::gnp(12, 0.3, seed);
            for policy in [OrderingPolicy::Ascending, OrderingPolicy::Seeded(seed)] {
                let f = dfs_forest(&g, policy);
                IndependentSet {
                    vertices: f.leaves.clone(),
                }
                .check(&g)
                .unwrap();
                // tree-edge validity
                for (v, &p) in f.parent.iter().enumerate() {
                    if let Some(p) = p {
                        assert!(g.has_edge(p, v));
                        assert_eq!(f.depth[v], f.depth[p] + 1);
                    }
                }
                // height x leaves >= n
                assert!(f.leaves.len() * (1 + f.max_depth()) >= g.n());
            }
        }
    }

    #[test]
    fn determinism() {
        let g = crate::corpus::gnp(30, 0.2, 7);
        assert_eq!(
            dfs_forest(&g, OrderingPolicy::Seeded(3)),
            dfs_forest(&g, OrderingPolicy::Seeded(3))
        );
        assert_ne!(
            dfs_forest(&g, OrderingPolicy::Seeded(3)),
            dfs_forest(&g, OrderingPolicy::Seeded(4))
        );
    }
}
