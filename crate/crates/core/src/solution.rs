//! Solution certificates and their validity checks.
//!
//! Every algorithm output is one of these types, and every type knows how to
//! re-check itself against the input it claims to solve. The checks here are
//! the load-bearing half of the certificate story: nothing is trusted that
//! they have not recomputed.

use crate::graph::{Digraph, Graph};
use crate::set_system::SetSystem;
use crate::Error;
use serde::{Deserialize, Serialize};

fn invalid<T>(msg: impl Into<String>) -> Result<T, Error> {
    Err(Error::InvalidSolution(msg.into()))
}

/// Cyclic (1,2)-TSP tour: visit order plus its length under the
/// edge = 1 / non-edge = 2 metric. A single vertex has length 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tour {
    pub order: Vec<usize>,
    pub length: u64,
}

/// Tour length of a cyclic visit order in the undirected (1,2) metric.
pub fn tour_length(order: &[usize], g: &Graph) -> u64 {
    if order.len() < 2 {
        return 0;
    }
    let mut len = 0;
    for i in 0..order.len() {
        let u = order[i];
        let v = order[(i + 1) % order.len()];
        len += if g.has_edge(u, v) { 1 } else { 2 };
    }
    len
}

/// Tour length in the asymmetric (1,2) metric of a digraph.
pub fn tour_length_directed(order: &[usize], d: &Digraph) -> u64 {
    if order.len() < 2 {
        return 0;
    }
    let mut len = 0;
    for i in 0..order.len() {
        let u = order[i];
        let v = order[(i + 1) % order.len()];
        len += if d.has_arc(u, v) { 1 } else { 2 };
    }
    len
}

fn check_permutation(order: &[usize], n: usize) -> Result<(), Error> {
    if order.len() != n {
        return invalid(format!("order has {} entries, graph has {n}", order.len()));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return invalid(format!("order is not a permutation (vertex {v})"));
        }
        seen[v] = true;
    }
    Ok(())
}

impl Tour {
    pub fn check(&self, g: &Graph) -> Result<(), Error> {
        check_permutation(&self.order, g.n())?;
        let len = tour_length(&self.order, g);
        if len != self.length {
            return invalid(format!("tour length {} but recomputed {len}", self.length));
        }
        Ok(())
    }

    pub fn check_directed(&self, d: &Digraph) -> Result<(), Error> {
        check_permutation(&self.order, d.n())?;
        let len = tour_length_directed(&self.order, d);
        if len != self.length {
            return invalid(format!("tour length {} but recomputed {len}", self.length));
        }
        Ok(())
    }
}

/// Vertex set with no internal edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependentSet {
    pub vertices: Vec<usize>,
}

impl IndependentSet {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn check(&self, g: &Graph) -> Result<(), Error> {
        check_distinct_in_range(&self.vertices, g.n())?;
        for (i, &u) in self.vertices.iter().enumerate() {
            for &v in &self.vertices[i + 1..] {
                if g.has_edge(u, v) {
                    return invalid(format!("edge {u}-{v} inside independent set"));
                }
            }
        }
        Ok(())
    }
}

fn check_distinct_in_range(verts: &[usize], n: usize) -> Result<(), Error> {
    let mut seen = vec![false; n];
    for &v in verts {
        if v >= n {
            return invalid(format!("vertex {v} out of range 0..{n}"));
        }
        if seen[v] {
            return invalid(format!("vertex {v} repeated"));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Vertex-disjoint paths jointly covering all vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCover {
    pub paths: Vec<Vec<usize>>,
}

impl PathCover {
    pub fn num_paths(&self) -> usize {
        self.paths.len()
    }

    pub fn check(&self, g: &Graph) -> Result<(), Error> {
        let all: Vec<usize> = self.paths.iter().flatten().copied().collect();
        check_distinct_in_range(&all, g.n())?;
        if all.len() != g.n() {
            return invalid(format!("cover has {} vertices, graph has {}", all.len(), g.n()));
        }
        for path in &self.paths {
            if path.is_empty() {
                return invalid("empty path in cover");
            }
            for w in path.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return invalid(format!("non-edge {}-{} inside path", w[0], w[1]));
                }
            }
        }
        Ok(())
    }
}

/// Simple path: distinct vertices, consecutive pairs adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexPath {
    pub vertices: Vec<usize>,
}

impl VertexPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn check(&self, g: &Graph) -> Result<(), Error> {
        check_distinct_in_range(&self.vertices, g.n())?;
        for w in self.vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return invalid(format!("non-edge {}-{} inside path", w[0], w[1]));
            }
        }
        Ok(())
    }

    /// Directed check: consecutive pairs joined by arcs in order.
    pub fn check_directed(&self, d: &Digraph) -> Result<(), Error> {
        check_distinct_in_range(&self.vertices, d.n())?;
        for w in self.vertices.windows(2) {
            if !d.has_arc(w[0], w[1]) {
                return invalid(format!("missing arc {}->{} inside path", w[0], w[1]));
            }
        }
        Ok(())
    }
}

/// Proper coloring using a contiguous color range 0..num_colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub color: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    pub fn check(&self, g: &Graph) -> Result<(), Error> {
        if self.color.len() != g.n() {
            return invalid("color array length mismatch");
        }
        let mut used = vec![false; self.num_colors];
        for &c in &self.color {
            if c >= self.num_colors {
                return invalid(format!("color {c} >= num_colors {}", self.num_colors));
            }
            used[c] = true;
        }
        if !used.iter().all(|&u| u) {
            return invalid("colors are not a contiguous range");
        }
        for (u, v) in g.edges() {
            if self.color[u] == self.color[v] {
                return invalid(format!("monochromatic edge {u}-{v}"));
            }
        }
        Ok(())
    }
}

/// Vertex set of a digraph whose induced subgraph has no directed cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcyclicSet {
    pub vertices: Vec<usize>,
}

impl AcyclicSet {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    /// Verified by a topological sort of the induced subgraph.
    pub fn check(&self, d: &Digraph) -> Result<(), Error> {
        check_distinct_in_range(&self.vertices, d.n())?;
        let (sub, _) = d.induced(&self.vertices);
        if !is_acyclic(&sub) {
            return invalid("induced subgraph contains a directed cycle");
        }
        Ok(())
    }
}

/// Kahn's algorithm.
pub fn is_acyclic(d: &Digraph) -> bool {
    let n = d.n();
    let mut indeg = vec![0usize; n];
    for (_, v) in d.arcs() {
        indeg[v] += 1;
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = queue.pop() {
        removed += 1;
        for &w in d.successors(v) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push(w);
            }
        }
    }
    removed == n
}

/// Branch decomposition certifying a K_t minor: `branch[v]` assigns v to a
/// branch set (or none). Each branch set must induce a connected subgraph
/// and every pair of branch sets must be joined by at least one edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub branch: Vec<Option<usize>>,
    pub t: usize,
}

impl MinorModel {
    pub fn check(&self, g: &Graph) -> Result<(), Error> {
        if self.branch.len() != g.n() {
            return invalid("branch array length mismatch");
        }
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); self.t];
        for (v, &b) in self.branch.iter().enumerate() {
            if let Some(b) = b {
                if b >= self.t {
                    return invalid(format!("branch index {b} >= t = {}", self.t));
                }
                members[b].push(v);
            }
        }
        for (b, set) in members.iter().enumerate() {
            if set.is_empty() {
                return invalid(format!("branch set {b} is empty"));
            }
            let (sub, _) = g.induced(set);
            if !sub.is_connected() {
                return invalid(format!("branch set {b} is not connected"));
            }
        }
        for a in 0..self.t {
            for b in a + 1..self.t {
                let joined = members[a]
                    .iter()
                    .any(|&u| members[b].iter().any(|&v| g.has_edge(u, v)));
                if !joined {
                    return invalid(format!("branch sets {a} and {b} not adjacent"));
                }
            }
        }
        Ok(())
    }
}

/// Spanning forest given by its parent array, certifying a leaf count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningForestCert {
    pub parent: Vec<Option<usize>>,
    pub leaf_count: usize,
}

impl SpanningForestCert {
    pub fn check(&self, g: &Graph) -> Result<(), Error> {
        let n = g.n();
        if self.parent.len() != n {
            return invalid("parent array length mismatch");
        }
        // parent edges must exist and the structure must be acyclic
        let mut has_child = vec![false; n];
        for (v, &p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                if p >= n || !g.has_edge(v, p) {
                    return invalid(format!("parent link {v}->{p} is not a graph edge"));
                }
                has_child[p] = true;
            }
        }
        // walk to a root from every vertex, watching for cycles
        for start in 0..n {
            let mut v = start;
            let mut steps = 0;
            while let Some(p) = self.parent[v] {
                v = p;
                steps += 1;
                if steps > n {
                    return invalid("parent links contain a cycle");
                }
            }
        }
        let leaves = (0..n).filter(|&v| !has_child[v]).count();
        if leaves != self.leaf_count {
            return invalid(format!(
                "leaf count {} but recomputed {leaves}",
                self.leaf_count
            ));
        }
        Ok(())
    }
}

/// Set cover solution: chosen set indices whose union is all elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSolution {
    pub sets: Vec<usize>,
}

impl CoverSolution {
    pub fn size(&self) -> usize {
        self.sets.len()
    }

    pub fn check(&self, s: &SetSystem) -> Result<(), Error> {
        check_distinct_in_range(&self.sets, s.num_sets())?;
        let mut covered = vec![false; s.num_elements()];
        for &i in &self.sets {
            for &e in s.set(i) {
                covered[e] = true;
            }
        }
        match covered.iter().position(|&c| !c) {
            Some(e) => invalid(format!("element {e} not covered")),
            None => Ok(()),
        }
    }
}

/// Hitting set solution: chosen elements meeting every set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HitSolution {
    pub elements: Vec<usize>,
}

impl HitSolution {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn check(&self, s: &SetSystem) -> Result<(), Error> {
        check_distinct_in_range(&self.elements, s.num_elements())?;
        let chosen: std::collections::HashSet<usize> = self.elements.iter().copied().collect();
        for i in 0..s.num_sets() {
            if !s.set(i).iter().any(|e| chosen.contains(e)) {
                return invalid(format!("set {i} not hit"));
            }
        }
        Ok(())
    }
}

/// Clique witness (used by the oracles).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueSet {
    pub vertices: Vec<usize>,
}

impl CliqueSet {
    pub fn check(&self, g: &Graph) -> Result<(), Error> {
        check_distinct_in_range(&self.vertices, g.n())?;
        for (i, &u) in self.vertices.iter().enumerate() {
            for &v in &self.vertices[i + 1..] {
                if !g.has_edge(u, v) {
                    return invalid(format!("non-edge {u}-{v} inside clique"));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tour_check_recomputes_length() {
        let g = Graph::cycle(4);
        let t = Tour {
            order: vec![0, 1, 2, 3],
            length: 4,
        };
        t.check(&g).unwrap();
        let bad = Tour {
            order: vec![0, 1, 2, 3],
            length: 5,
        };
        assert!(bad.check(&g).is_err());
        let not_perm = Tour {
            order: vec![0, 1, 2, 2],
            length: 4,
        };
        assert!(not_perm.check(&g).is_err());
    }

    #[test]
    fn independent_set_check() {
        let g = Graph::path(3);
        IndependentSet {
            vertices: vec![0, 2],
        }
        .check(&g)
        .unwrap();
        assert!(IndependentSet {
            vertices: vec![0, 1]
        }
        .check(&g)
        .is_err());
    }

    #[test]
    fn acyclic_set_check() {
        let d = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        AcyclicSet {
            vertices: vec![0, 1],
        }
        .check(&d)
        .unwrap();
        assert!(AcyclicSet {
            vertices: vec![0, 1, 2]
        }
        .check(&d)
        .is_err());
    }

    #[test]
    fn minor_model_check() {
        let c4 = Graph::cycle(4);
        // contract edge 0-1: branch sets {0,1}, {2}, {3} certify K_3
        let ok = MinorModel {
            branch: vec![Some(0), Some(0), Some(1), Some(2)],
            t: 3,
        };
        ok.check(&c4).unwrap();
        // {0,2} is not connected in C_4
        let bad = MinorModel {
            branch: vec![Some(0), Some(1), Some(0), Some(2)],
            t: 3,
        };
        assert!(bad.check(&c4).is_err());
    }

    #[test]
    fn cover_and_hit_checks() {
        let s = SetSystem::from_incidence(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        CoverSolution { sets: vec![0, 1] }.check(&s).unwrap();
        assert!(CoverSolution { sets: vec![0] }.check(&s).is_err());
        HitSolution { elements: vec![1] }.check(&s).unwrap();
        assert!(HitSolution { elements: vec![0] }.check(&s).is_err());
    }
}
