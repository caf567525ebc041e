//! Greedy min-degree coloring paired with clique-minor extraction from the
//! densest subgraph the removal order passes through.

use crate::cert::{Certificate, Input, PairedOutcome, Threshold, Witness};
use crate::graph::Graph;
use crate::ratio::Ratio;
use crate::solution::{Coloring, MinorModel};
use crate::Error;

/// Result of the min-degree-removal coloring: the coloring, the snapshot
/// subgraph that achieved the largest running minimum degree d, and d.
#[derive(Clone, Debug)]
pub struct GreedyPeak {
    pub coloring: Coloring,
    /// Induced subgraph with minimum degree d.
    pub peak: Graph,
    /// New-id to original-id map for `peak`.
    pub peak_map: Vec<usize>,
    pub d: usize,
}

/// Remove a minimum-degree vertex (ties by ascending id) until the graph is
/// gone, then color greedily in reverse removal order. Uses degree buckets,
/// so the whole pass is O(n + m). The number of colors is at most d + 1.
pub fn greedy_color_with_peak(g: &Graph) -> Result<GreedyPeak, Error> {
    let n = g.n();
    if n == 0 {
        return Err(Error::BadInput("graph must have at least one vertex".into()));
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        buckets[degree[v]].push(v);
    }
    // buckets are stale-tolerant: entries re-checked against `degree`
    let mut cursor = 0usize;
    let mut d = 0usize;
    let mut peak_start = 0usize; // index into `order`: first removal at peak
    while order.len() < n {
        while cursor > 0 && !buckets[cursor - 1].is_empty() {
            cursor -= 1;
        }
        while buckets[cursor].is_empty() {
            cursor += 1;
        }
        // smallest id among current-bucket entries that are still current
        let mut pick = None;
        buckets[cursor].retain(|&v| !removed[v] && degree[v] == cursor);
        for &v in &buckets[cursor] {
            if pick.map_or(true, |p| v < p) {
                pick = Some(v);
            }
        }
        let Some(v) = pick else {
            continue;
        };
        if cursor > d {
            d = cursor;
            peak_start = order.len();
        }
        buckets[cursor].retain(|&x| x != v);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                buckets[degree[w]].push(w);
            }
        }
    }
    // color in reverse removal order with the first free color
    let mut color = vec![usize::MAX; n];
    let mut used: Vec<bool> = Vec::new();
    let mut num_colors = 0;
    for &v in order.iter().rev() {
        used.clear();
        used.resize(num_colors + 1, false);
        for &w in g.neighbors(v) {
            if color[w] != usize::MAX && color[w] < used.len() {
                used[color[w]] = true;
            }
        }
        let c = used.iter().position(|&u| !u).unwrap();
        color[v] = c;
        num_colors = num_colors.max(c + 1);
    }
    let peak_verts: Vec<usize> = order[peak_start..].to_vec();
    let (peak, peak_map) = g.induced(&peak_verts);
    debug_assert!((0..peak.n()).all(|v| peak.degree(v) >= d));
    Ok(GreedyPeak {
        coloring: Coloring { color, num_colors },
        peak,
        peak_map,
        d,
    })
}

/// Pluggable minor-extraction strategy; the certified t is whatever the
/// returned model verifies to, never an asymptotic formula.
pub trait MinorStrategy {
    fn find_minor(&self, s: &Graph, d: usize) -> MinorModel;
}

/// Default strategy: grow branch sets greedily inside the dense subgraph,
/// connecting each new branch to the existing ones through unassigned
/// vertices, and give up on a seed that cannot reach every branch.
pub struct GreedyMinor;

impl MinorStrategy for GreedyMinor {
    fn find_minor(&self, s: &Graph, _d: usize) -> MinorModel {
        let n = s.n();
        let mut assign: Vec<Option<usize>> = vec![None; n];
        let mut branches: Vec<Vec<usize>> = Vec::new();
        let mut dead = vec![false; n];
        // seed candidates by descending degree, ties ascending id
        let mut seeds: Vec<usize> = (0..n).collect();
        seeds.sort_by_key(|&v| (usize::MAX - s.degree(v), v));
        'seed: for &seed in &seeds {
            if assign[seed].is_some() || dead[seed] {
                continue;
            }
            let b = branches.len();
            let mut mine = vec![seed];
            let mut taken = vec![false; n];
            taken[seed] = true;
            // connect to every existing branch, growing through free vertices
            for target in 0..b {
                if touches(s, &mine, &assign, target) {
                    continue;
                }
                match bfs_to_branch(s, &mine, target, &assign, &taken) {
                    Some(path) => {
                        for v in path {
                            taken[v] = true;
                            mine.push(v);
                        }
                    }
                    None => {
                        dead[seed] = true;
                        continue 'seed;
                    }
                }
            }
            for &v in &mine {
                assign[v] = Some(b);
            }
            branches.push(mine);
        }
        let t = branches.len();
        MinorModel { branch: assign, t }
    }
}

/// Does the grown set already touch branch `target`?
fn touches(s: &Graph, mine: &[usize], assign: &[Option<usize>], target: usize) -> bool {
    mine.iter()
        .any(|&u| s.neighbors(u).iter().any(|&w| assign[w] == Some(target)))
}

/// Shortest path from `mine` to any vertex adjacent to branch `target`,
/// moving only through unassigned, untaken vertices. Returns the interior
/// vertices to absorb (possibly empty is impossible here: callers already
/// know `mine` does not touch the target).
fn bfs_to_branch(
    s: &Graph,
    mine: &[usize],
    target: usize,
    assign: &[Option<usize>],
    taken: &[bool],
) -> Option<Vec<usize>> {
    let n = s.n();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for &v in mine {
        seen[v] = true;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        for &w in s.neighbors(v) {
            if seen[w] || taken[w] {
                continue;
            }
            if assign[w] == Some(target) {
                // interior vertices from v back to (exclusive) the start set
                let mut path = Vec::new();
                let mut cur = v;
                while !mine.contains(&cur) {
                    path.push(cur);
                    cur = prev[cur];
                }
                path.reverse();
                return Some(path);
            }
            if assign[w].is_none() {
                seen[w] = true;
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Extract a verified clique minor from a subgraph of minimum degree >= d.
pub fn clique_minor_in_dense(
    s: &Graph,
    d: usize,
    strategy: &dyn MinorStrategy,
) -> Result<MinorModel, Error> {
    if let Some(found) = (0..s.n()).map(|v| s.degree(v)).min() {
        if found < d {
            return Err(Error::MinDegreeTooLow { required: d, found });
        }
    }
    let model = strategy.find_minor(s, d);
    model.check(s)?;
    Ok(model)
}

/// Lift a minor model on the peak subgraph back to original vertex ids.
fn lift_model(model: &MinorModel, map: &[usize], n: usize) -> MinorModel {
    let mut branch = vec![None; n];
    for (local, &b) in model.branch.iter().enumerate() {
        branch[map[local]] = b;
    }
    MinorModel {
        branch,
        t: model.t,
    }
}

/// The paired result: a k-coloring with k <= d+1 and a verified clique
/// minor found in the peak subgraph.
pub fn paired_color_minor(g: &Graph) -> Result<(Coloring, MinorModel), Error> {
    let peak = greedy_color_with_peak(g)?;
    let model = clique_minor_in_dense(&peak.peak, peak.d, &GreedyMinor)?;
    let lifted = lift_model(&model, &peak.peak_map, g.n());
    lifted.check(g)?;
    Ok((peak.coloring, lifted))
}

/// Return the minor when its certified t reaches n^(1-eps), else the
/// coloring. The threshold uses the verified t directly.
pub fn dispatch_hadwiger(g: &Graph, eps: Ratio) -> Result<PairedOutcome, Error> {
    if !eps.below_half() {
        return Err(Error::EpsOutOfRange {
            eps: eps.to_string(),
            expected: "0 < eps < 1/2",
        });
    }
    let (coloring, model) = paired_color_minor(g)?;
    let n = g.n() as u64;
    let t = model.t as u64;
    let holds = eps.ge_pow_one_minus_eps(t, n);
    let input = Input::Graph(g);
    let minor_cert = Certificate::new(
        "clique-minor",
        "clique-minor",
        t,
        Witness::Minor {
            branch: model.branch.clone(),
            t: model.t,
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
            "t^{} >= n^{}: {}^{} >= {}^{}",
            eps.denom(),
            eps.denom() - eps.numer(),
            t,
            eps.denom(),
            n,
            eps.denom() - eps.numer()
        ),
        eps: eps.to_string(),
        holds,
    };
    let (side, payload) = if holds {
        ("clique-minor", minor_cert.clone())
    } else {
        ("coloring", color_cert.clone())
    };
    Ok(PairedOutcome {
        side: side.into(),
        payload,
        threshold,
        both_raw: Some(Box::new((minor_cert, color_cert))),
    })
}
