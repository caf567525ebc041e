//! Simple undirected and directed graphs with dense 0-based vertex ids.
//!
//! Graphs are immutable after construction; all combinators return new
//! graphs, so certificates can always reference a stable input.

use crate::Error;

/// Parse errors for the text formats, reported with 1-based line numbers.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: id {id} out of range 0..{n}")]
    OutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: self-loop at {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
}

/// Simple undirected graph. Adjacency lists are kept sorted, so edge
/// queries are binary searches and serialization is canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph {
            adj,
            m: if n > 1 { n * (n - 1) / 2 } else { 0 },
            labels: None,
        }
    }

    /// Path graph 0-1-2-...-(n-1).
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, &(0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>())
            .unwrap()
    }

    /// Cycle graph on n >= 3 vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Self::from_edges(n, &edges).unwrap()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::BadInput(format!("edge ({u}, {v}) out of range 0..{n}")));
            }
            if u == v {
                return Err(Error::BadInput(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::BadInput("duplicate edge".into()));
            }
            m += list.len();
        }
        Ok(Graph {
            adj,
            m: m / 2,
            labels: None,
        })
    }

    /// Construct from already-sorted, already-validated adjacency lists.
    pub(crate) fn from_sorted_adj(adj: Vec<Vec<usize>>) -> Self {
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            adj,
            m,
            labels: None,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    pub(crate) fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    /// All edges as (u, v) pairs with u < v, in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v && !self.has_edge(u, v)).collect())
            .collect();
        let mut g = Graph::from_sorted_adj(adj);
        g.labels = self.labels.clone();
        g
    }

    /// Disjoint union; the second graph's ids are offset by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&v| v + off).collect::<Vec<_>>()),
        );
        Graph::from_sorted_adj(adj)
    }

    /// Union of edge sets on a shared vertex set.
    pub fn edge_union(&self, other: &Graph) -> Result<Graph, Error> {
        if self.n() != other.n() {
            return Err(Error::MismatchedSizes {
                left: self.n(),
                right: other.n(),
            });
        }
        let adj = (0..self.n())
            .map(|v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .chain(other.adj[v].iter())
                    .copied()
                    .collect();
                list.sort_unstable();
                list.dedup();
                list
            })
            .collect();
        Ok(Graph::from_sorted_adj(adj))
    }

    /// Induced subgraph on `verts` (need not be sorted); returns the
    /// subgraph and the map from new ids to original ids.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut order: Vec<usize> = verts.to_vec();
        order.sort_unstable();
        order.dedup();
        let mut back = vec![usize::MAX; self.n()];
        for (i, &v) in order.iter().enumerate() {
            back[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&u| back[u] != usize::MAX)
                    .map(|&u| back[u])
                    .collect()
            })
            .collect();
        (Graph::from_sorted_adj(adj), order)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Text format: first line `n`, then one `u v` edge per line.
    /// `#` starts a comment.
    pub fn parse(text: &str) -> Result<Graph, ParseError> {
        let (n, edges) = parse_edge_list(text, None)?;
        build_simple(n, &edges).map(Graph::from_sorted_adj)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Simple directed graph (no self-loops, no parallel arcs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out_adj: Vec<Vec<usize>>,
    m: usize,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Digraph {
            out_adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let out_adj: Vec<Vec<usize>> = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        let m = out_adj.iter().map(Vec::len).sum();
        Digraph { out_adj, m }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, Error> {
        let mut out_adj = vec![Vec::new(); n];
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::BadInput(format!("arc ({u}, {v}) out of range 0..{n}")));
            }
            if u == v {
                return Err(Error::BadInput(format!("self-loop at {u}")));
            }
            out_adj[u].push(v);
        }
        let mut m = 0;
        for list in &mut out_adj {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::BadInput("duplicate arc".into()));
            }
            m += list.len();
        }
        Ok(Digraph { out_adj, m })
    }

    pub fn n(&self) -> usize {
        self.out_adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u != v && self.out_adj[u].binary_search(&v).is_ok()
    }

    pub(crate) fn adjacency(&self) -> &[Vec<usize>] {
        &self.out_adj
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    /// Induced sub-digraph plus the new-id to old-id map.
    pub fn induced(&self, verts: &[usize]) -> (Digraph, Vec<usize>) {
        let mut order: Vec<usize> = verts.to_vec();
        order.sort_unstable();
        order.dedup();
        let mut back = vec![usize::MAX; self.n()];
        for (i, &v) in order.iter().enumerate() {
            back[v] = i;
        }
        let out_adj: Vec<Vec<usize>> = order
            .iter()
            .map(|&v| {
                self.out_adj[v]
                    .iter()
                    .filter(|&&u| back[u] != usize::MAX)
                    .map(|&u| back[u])
                    .collect()
            })
            .collect();
        let m = out_adj.iter().map(Vec::len).sum();
        (Digraph { out_adj, m }, order)
    }

    /// Text format: first line `digraph n`, then one `u v` arc per line.
    pub fn parse(text: &str) -> Result<Digraph, ParseError> {
        let (n, arcs) = parse_edge_list(text, Some("digraph"))?;
        build_simple_directed(n, &arcs)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("digraph {}\n", self.n());
        for (u, v) in self.arcs() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

type NumberedEdges = Vec<(usize, usize, usize)>; // (u, v, line)

fn parse_edge_list(text: &str, header: Option<&str>) -> Result<(usize, NumberedEdges), ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw).trim();
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if n.is_none() {
            match header {
                Some(word) => {
                    if toks.len() != 2 || toks[0] != word {
                        return Err(ParseError::Malformed {
                            line,
                            msg: format!("expected header '{word} n'"),
                        });
                    }
                    n = Some(toks[1].parse().map_err(|_| ParseError::Malformed {
                        line,
                        msg: format!("bad vertex count '{}'", toks[1]),
                    })?);
                }
                None => {
                    if toks.len() != 1 {
                        return Err(ParseError::Malformed {
                            line,
                            msg: "expected a single vertex count".into(),
                        });
                    }
                    n = Some(toks[0].parse().map_err(|_| ParseError::Malformed {
                        line,
                        msg: format!("bad vertex count '{}'", toks[0]),
                    })?);
                }
            }
            continue;
        }
        if toks.len() != 2 {
            return Err(ParseError::Malformed {
                line,
                msg: "expected 'u v'".into(),
            });
        }
        let parse_id = |s: &str| -> Result<usize, ParseError> {
            s.parse().map_err(|_| ParseError::Malformed {
                line,
                msg: format!("bad id '{s}'"),
            })
        };
        let (u, v) = (parse_id(toks[0])?, parse_id(toks[1])?);
        let n = n.unwrap();
        for id in [u, v] {
            if id >= n {
                return Err(ParseError::OutOfRange { line, id, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, v: u });
        }
        edges.push((u, v, line));
    }
    match n {
        Some(n) => Ok((n, edges)),
        None => Err(ParseError::Malformed {
            line: 1,
            msg: "missing vertex count".into(),
        }),
    }
}

fn build_simple(n: usize, edges: &NumberedEdges) -> Result<Vec<Vec<usize>>, ParseError> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut seen = std::collections::HashSet::new();
    for &(u, v, line) in edges {
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(ParseError::DuplicateEdge { line, u, v });
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(adj)
}

fn build_simple_directed(n: usize, arcs: &NumberedEdges) -> Result<Digraph, ParseError> {
    let mut out_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut seen = std::collections::HashSet::new();
    for &(u, v, line) in arcs {
        if !seen.insert((u, v)) {
            return Err(ParseError::DuplicateEdge { line, u, v });
        }
        out_adj[u].push(v);
    }
    let mut m = 0;
    for list in &mut out_adj {
        list.sort_unstable();
        m += list.len();
    }
    Ok(Digraph { out_adj, m })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_empty() {
        let g = Graph::complete(3).complement();
        assert_eq!(g.m(), 0);
        assert_eq!(g.n(), 3);
    }

    #[test]
    fn complement_single_vertex_fixed_point() {
        let g = Graph::empty(1);
        assert_eq!(g.complement(), g);
    }

    #[test]
    fn complement_of_p3_is_single_edge() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let c = p3.complement();
        // enumerate all 3 pairs
        assert!(c.has_edge(0, 2));
        assert!(!c.has_edge(0, 1));
        assert!(!c.has_edge(1, 2));
    }

    #[test]
    fn disjoint_union_shifts_ids() {
        let k2 = Graph::complete(2);
        let g = k2.disjoint_union(&k2);
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        let same = Graph::empty(0).disjoint_union(&g);
        assert_eq!(same, g);
    }

    #[test]
    fn edge_union_basics() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let h = Graph::from_edges(3, &[(1, 2)]).unwrap();
        let u = g.edge_union(&h).unwrap();
        assert_eq!(u, Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
        assert_eq!(g.edge_union(&Graph::empty(3)).unwrap(), g);
        let full = g.edge_union(&g.complement()).unwrap();
        assert_eq!(full, Graph::complete(3));
        assert!(g.edge_union(&Graph::empty(4)).is_err());
    }

    #[test]
    fn parse_and_serialize_round_trip() {
        let g = Graph::parse("3\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
        let text = g.serialize();
        assert_eq!(Graph::parse(&text).unwrap(), g);
        assert_eq!(text, "3\n0 1\n1 2\n");
    }

    #[test]
    fn parse_rejects_self_loop() {
        assert_eq!(
            Graph::parse("2\n0 0\n").unwrap_err(),
            ParseError::SelfLoop { line: 2, v: 0 }
        );
    }

    #[test]
    fn parse_rejects_duplicates_and_range() {
        assert!(matches!(
            Graph::parse("3\n0 1\n1 0\n").unwrap_err(),
            ParseError::DuplicateEdge { line: 3, .. }
        ));
        assert!(matches!(
            Graph::parse("2\n0 5\n").unwrap_err(),
            ParseError::OutOfRange { id: 5, .. }
        ));
    }

    #[test]
    fn parse_handles_comments() {
        let g = Graph::parse("# a path\n3\n0 1 # first\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn digraph_round_trip() {
        let d = Digraph::parse("digraph 3\n0 1\n1 2\n2 0\n").unwrap();
        assert!(d.has_arc(2, 0));
        assert!(!d.has_arc(0, 2));
        assert_eq!(Digraph::parse(&d.serialize()).unwrap(), d);
    }

    #[test]
    fn induced_subgraph_maps_back() {
        let g = Graph::cycle(5);
        let (sub, map) = g.induced(&[1, 2, 4]);
        assert_eq!(map, vec![1, 2, 4]);
        assert!(sub.has_edge(0, 1)); // 1-2
        assert!(!sub.has_edge(0, 2)); // 1-4
    }
}
