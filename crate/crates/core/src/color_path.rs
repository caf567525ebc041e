//! Paired coloring / longest-path guarantees: DFS depth classes give a
//! proper coloring whose color count equals the found path length, and the
//! degeneracy-greedy alternative finds a path inside the peak subgraph.

use crate::cert::{Certificate, Input, PairedOutcome, Threshold, Witness};
use crate::dfs::{deepest_path, dfs_forest, OrderingPolicy};
use crate::graph::Graph;
use crate::hadwiger::greedy_color_with_peak;
use crate::ratio::Ratio;
use crate::solution::{Coloring, VertexPath};
use crate::Error;

/// Which coloring/path construction to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorStrategy {
    /// Color by DFS depth; the deepest root-to-leaf path hits every class once.
    Depth,
    /// Greedy min-degree-removal coloring; path grown in the peak subgraph.
    Degeneracy,
}

/// Depth coloring: color = DFS depth, path = deepest root-to-leaf path.
/// The path has exactly `num_colors` vertices, one per color class.
///
/// Properness relies on undirected DFS having no cross edges: every
/// non-tree edge joins an ancestor/descendant pair, whose depths differ.
pub fn depth_color_and_path(
    g: &Graph,
    policy: OrderingPolicy,
) -> Result<(Coloring, VertexPath), Error> {
    if g.n() == 0 {
        return Err(Error::BadInput("graph must have at least one vertex".into()));
    }
    let f = dfs_forest(g, policy);
    let num_colors = 1 + f.max_depth();
    let coloring = Coloring {
        color: f.depth.clone(),
        num_colors,
    };
    debug_assert!(g.edges().all(|(u, v)| f.depth[u] != f.depth[v]));
    let path = deepest_path(&f)?;
    debug_assert_eq!(path.len(), num_colors);
    Ok((coloring, path))
}

/// Degeneracy coloring with k <= d+1 colors, plus a path of at least d+1
/// vertices grown by a greedy walk in the recorded min-degree-d subgraph.
pub fn degeneracy_color_and_path(g: &Graph) -> Result<(Coloring, VertexPath), Error> {
    let peak = greedy_color_with_peak(g)?;
    // greedy walk: start at the smallest id, always step to the smallest
    // unvisited neighbor; min degree d forces at least d+1 vertices
    let s = &peak.peak;
    let mut visited = vec![false; s.n()];
    let mut walk = vec![0usize];
    visited[0] = true;
    loop {
        let v = *walk.last().unwrap();
        match s.neighbors(v).iter().find(|&&w| !visited[w]) {
            Some(&w) => {
                visited[w] = true;
                walk.push(w);
            }
            None => break,
        }
    }
    debug_assert!(walk.len() >= peak.d + 1);
    debug_assert!(walk.len() >= peak.coloring.num_colors);
    let path = VertexPath {
        vertices: walk.into_iter().map(|v| peak.peak_map[v]).collect(),
    };
    Ok((peak.coloring, path))
}

/// Return the path when it reaches n^(1-eps) vertices, else the coloring.
pub fn dispatch_color_path(
    g: &Graph,
    eps: Ratio,
    strategy: ColorStrategy,
    policy: OrderingPolicy,
) -> Result<PairedOutcome, Error> {
    if !eps.in_open_unit() {
        return Err(Error::EpsOutOfRange {
            eps: eps.to_string(),
            expected: "0 < eps < 1",
        });
    }
    let (coloring, path) = match strategy {
        ColorStrategy::Depth => depth_color_and_path(g, policy)?,
        ColorStrategy::Degeneracy => degeneracy_color_and_path(g)?,
    };
    let n = g.n() as u64;
    let p = path.len() as u64;
    let holds = eps.ge_pow_one_minus_eps(p, n);
    let input = Input::Graph(g);
    let path_cert = Certificate::new(
        "longest-path",
        "longest-path",
        p,
        Witness::Path {
            vertices: path.vertices.clone(),
        },
        &input,
    );
    let color_cert = Certificate::new(
        "coloring",
        "coloring",
        coloring.num_colors as u64,
        Witness::Coloring {
            colors: coloring.color.clone(),
        },
        &input,
    );
    let threshold = Threshold {
        rule: format!(
            "|P|^{} >= n^{}: {}^{} >= {}^{}",
            eps.denom(),
            eps.denom() - eps.numer(),
            p,
            eps.denom(),
            n,
            eps.denom() - eps.numer()
        ),
        eps: eps.to_string(),
        holds,
    };
    let (side, payload) = if holds {
        ("longest-path", path_cert.clone())
    } else {
        ("coloring", color_cert.clone())
    };
    Ok(PairedOutcome {
        side: side.into(),
        payload,
        threshold,
        both_raw: Some(Box::new((path_cert, color_cert))),
    })
}
