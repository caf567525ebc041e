//! Exact exponential-time solvers used as ground truth.
//!
//! Size limits are hard errors, not silent truncation. The environment
//! variable `PAIRED_ORACLE_MAX_N` overrides every limit (testing only).
//! Every oracle returns a witness that the independent checks in
//! [`crate::solution`] accept.

use crate::graph::{Digraph, Graph};
use crate::set_system::SetSystem;
use crate::solution::{
    AcyclicSet, CliqueSet, Coloring, CoverSolution, HitSolution, IndependentSet, MinorModel,
    Tour, VertexPath,
};
use crate::Error;

fn check_limit(what: &'static str, n: usize, default_max: usize) -> Result<(), Error> {
    let max = std::env::var("PAIRED_ORACLE_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default_max);
    if n > max {
        return Err(Error::SizeLimit { what, n, max });
    }
    Ok(())
}

/// Objective for the exact (1,2)-TSP solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    Min,
    Max,
}

/// Exact optimal (1,2)-tour length by Held-Karp subset DP, n <= 16.
pub fn exact_tsp12(g: &Graph, objective: Objective) -> Result<(u64, Tour), Error> {
    let n = g.n();
    check_limit("exact_tsp12", n, 16)?;
    if n == 0 {
        return Ok((
            0,
            Tour {
                order: vec![],
                length: 0,
            },
        ));
    }
    if n == 1 {
        return Ok((
            0,
            Tour {
                order: vec![0],
                length: 0,
            },
        ));
    }
    let cost = |u: usize, v: usize| -> u64 {
        if g.has_edge(u, v) {
            1
        } else {
            2
        }
    };
    const UNREACHED: u64 = u64::MAX;
    let better = move |cand: u64, slot: u64| {
        slot == UNREACHED
            || match objective {
                Objective::Min => cand < slot,
                Objective::Max => cand > slot,
            }
    };
    let full = 1usize << n;
    // dp[mask][last]: best path 0 -> last covering mask (bit 0 always set)
    let mut dp = vec![UNREACHED; full * n];
    dp[(1 << 0) * n] = 0;
    for mask in 1..full {
        if mask & 1 == 0 {
            continue;
        }
        for last in 0..n {
            if mask >> last & 1 == 0 {
                continue;
            }
            let cur = dp[mask * n + last];
            if cur == UNREACHED {
                continue;
            }
            for next in 1..n {
                if mask >> next & 1 == 1 {
                    continue;
                }
                let cand = cur + cost(last, next);
                let slot = &mut dp[(mask | 1 << next) * n + next];
                if better(cand, *slot) {
                    *slot = cand;
                }
            }
        }
    }
    let full_mask = full - 1;
    let mut best_last = 1;
    let mut best = UNREACHED;
    for last in 1..n {
        let cur = dp[full_mask * n + last];
        if cur == UNREACHED {
            continue;
        }
        let total = cur + cost(last, 0);
        if better(total, best) {
            best = total;
            best_last = last;
        }
    }
    // reconstruct
    let mut order = vec![best_last];
    let mut mask = full_mask;
    let mut last = best_last;
    while last != 0 {
        let rest = mask & !(1 << last);
        let need = dp[mask * n + last];
        let mut prev = usize::MAX;
        for p in 0..n {
            if rest >> p & 1 == 1
                && dp[rest * n + p] != UNREACHED
                && dp[rest * n + p] + cost(p, last) == need
            {
                prev = p;
                break;
            }
        }
        assert_ne!(prev, usize::MAX, "Held-Karp reconstruction failed");
        order.push(prev);
        mask = rest;
        last = prev;
    }
    order.reverse();
    Ok((
        best,
        Tour {
            order,
            length: best,
        },
    ))
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn successor_masks(d: &Digraph) -> Vec<u64> {
    (0..d.n())
        .map(|v| d.successors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn bits(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::new();
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        out.push(v);
        mask &= mask - 1;
    }
    out
}

/// Branch and bound maximum clique (Tomita-style greedy-coloring bound).
fn max_clique_masks(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut best: Vec<usize> = Vec::new();
    let mut r: Vec<usize> = Vec::new();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    expand(adj, &mut r, all, &mut best);
    best.sort_unstable();
    best
}

fn expand(adj: &[u64], r: &mut Vec<usize>, p: u64, best: &mut Vec<usize>) {
    if p == 0 {
        if r.len() > best.len() {
            *best = r.clone();
        }
        return;
    }
    // greedy coloring of the candidates for the pruning bound
    let mut order = Vec::new();
    let mut bound = Vec::new();
    let mut uncolored = p;
    let mut color = 0usize;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(adj[v] | 1 << v);
            uncolored &= !(1u64 << v);
            order.push(v);
            bound.push(color);
        }
    }
    let mut p = p;
    for i in (0..order.len()).rev() {
        if r.len() + bound[i] <= best.len() {
            return;
        }
        let v = order[i];
        r.push(v);
        expand(adj, r, p & adj[v], best);
        r.pop();
        p &= !(1u64 << v);
    }
}

/// Exact maximum independent set, n <= 30.
pub fn exact_mis(g: &Graph) -> Result<(usize, IndependentSet), Error> {
    check_limit("exact_mis", g.n(), 30)?;
    let comp = g.complement();
    let vertices = max_clique_masks(&adjacency_masks(&comp));
    Ok((vertices.len(), IndependentSet { vertices }))
}

/// Exact maximum clique, n <= 30.
pub fn exact_clique(g: &Graph) -> Result<(usize, CliqueSet), Error> {
    check_limit("exact_clique", g.n(), 30)?;
    let vertices = max_clique_masks(&adjacency_masks(g));
    Ok((vertices.len(), CliqueSet { vertices }))
}

/// Exact chromatic number by DP over vertex subsets, n <= 14.
pub fn exact_chromatic(g: &Graph) -> Result<(usize, Coloring), Error> {
    let n = g.n();
    check_limit("exact_chromatic", n, 14)?;
    if n == 0 {
        return Ok((
            0,
            Coloring {
                color: vec![],
                num_colors: 0,
            },
        ));
    }
    let adj = adjacency_masks(g);
    let full = 1usize << n;
    // independent[mask]
    let mut independent = vec![false; full];
    independent[0] = true;
    for mask in 1..full {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        independent[mask] = independent[rest] && (adj[v] & rest as u64) == 0;
    }
    let mut dp = vec![u32::MAX; full];
    let mut choice = vec![0usize; full];
    dp[0] = 0;
    for mask in 1..full {
        let v = mask.trailing_zeros() as usize;
        let vbit = 1usize << v;
        // enumerate submasks of mask containing v
        let mut sub = mask;
        while sub != 0 {
            if sub & vbit != 0 && independent[sub] && dp[mask ^ sub] != u32::MAX {
                let cand = dp[mask ^ sub] + 1;
                if cand < dp[mask] {
                    dp[mask] = cand;
                    choice[mask] = sub;
                }
            }
            sub = (sub - 1) & mask;
        }
    }
    let num_colors = dp[full - 1] as usize;
    let mut color = vec![0usize; n];
    let mut mask = full - 1;
    let mut c = 0;
    while mask != 0 {
        let class = choice[mask];
        for v in bits(class as u64) {
            color[v] = c;
        }
        c += 1;
        mask ^= class;
    }
    Ok((num_colors, Coloring { color, num_colors }))
}

fn longest_path_masks(n: usize, succ: &[u64], pred: &[u64]) -> (usize, Vec<usize>) {
    if n == 0 {
        return (0, vec![]);
    }
    let full = 1usize << n;
    let mut ends = vec![0u64; full];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best_mask = 1usize;
    for mask in 1..full {
        if ends[mask] == 0 {
            continue;
        }
        if mask.count_ones() > best_mask.count_ones() {
            best_mask = mask;
        }
        for e in bits(ends[mask]) {
            let ext = succ[e] & !(mask as u64);
            for w in bits(ext) {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    // reconstruct a best path
    let mut mask = best_mask;
    let mut end = ends[mask].trailing_zeros() as usize;
    let mut path = vec![end];
    while mask.count_ones() > 1 {
        let rest = mask & !(1 << end);
        let mut prev = usize::MAX;
        for p in bits(ends[rest] & pred[end]) {
            prev = p;
            break;
        }
        assert_ne!(prev, usize::MAX, "longest path reconstruction failed");
        path.push(prev);
        mask = rest;
        end = prev;
    }
    path.reverse();
    (best_mask.count_ones() as usize, path)
}

/// Exact number of vertices in a longest path, n <= 18.
pub fn exact_longest_path(g: &Graph) -> Result<(usize, VertexPath), Error> {
    check_limit("exact_longest_path", g.n(), 18)?;
    let masks = adjacency_masks(g);
    let (len, vertices) = longest_path_masks(g.n(), &masks, &masks);
    Ok((len, VertexPath { vertices }))
}

/// Exact longest directed path, n <= 18.
pub fn exact_longest_path_directed(d: &Digraph) -> Result<(usize, VertexPath), Error> {
    check_limit("exact_longest_path", d.n(), 18)?;
    let succ = successor_masks(d);
    let mut pred = vec![0u64; d.n()];
    for (u, v) in d.arcs() {
        pred[v] |= 1 << u;
    }
    let (len, vertices) = longest_path_masks(d.n(), &succ, &pred);
    Ok((len, VertexPath { vertices }))
}

fn mask_is_acyclic(mask: u64, pred: &[u64]) -> bool {
    let mut cur = mask;
    loop {
        if cur == 0 {
            return true;
        }
        let mut removed = false;
        let mut scan = cur;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if pred[v] & cur == 0 {
                cur &= !(1u64 << v);
                removed = true;
            }
        }
        if !removed {
            return false;
        }
    }
}

/// Exact largest acyclic induced subgraph, n <= 20.
pub fn exact_max_acyclic(d: &Digraph) -> Result<(usize, AcyclicSet), Error> {
    let n = d.n();
    check_limit("exact_max_acyclic", n, 20)?;
    let mut pred = vec![0u64; n];
    for (u, v) in d.arcs() {
        pred[v] |= 1 << u;
    }
    let full = 1u64 << n;
    let mut best_mask = 0u64;
    for mask in 0..full {
        if mask.count_ones() <= best_mask.count_ones() {
            continue;
        }
        if mask_is_acyclic(mask, &pred) {
            best_mask = mask;
        }
    }
    Ok((
        best_mask.count_ones() as usize,
        AcyclicSet {
            vertices: bits(best_mask),
        },
    ))
}

/// Exact minimum set cover by branch and bound with memoization over
/// covered-element masks. Requires num_elements <= 40 and a coverable
/// instance (every element in some set).
pub fn exact_cover(s: &SetSystem) -> Result<(usize, CoverSolution), Error> {
    check_limit("exact_cover", s.num_elements(), 48)?;
    check_limit("exact_cover", s.num_sets(), 64)?;
    let num_sets = s.num_sets();
    let elems = s.num_elements();
    let full: u64 = if elems == 64 {
        u64::MAX
    } else {
        (1u64 << elems) - 1
    };
    let set_masks: Vec<u64> = (0..num_sets)
        .map(|i| s.set(i).iter().fold(0u64, |m, &e| m | 1 << e))
        .collect();
    let union = set_masks.iter().fold(0u64, |a, &b| a | b);
    if union != full {
        return Err(Error::BadInput(
            "set cover infeasible: some element belongs to no set".into(),
        ));
    }
    // sets covering each element
    let mut covering: Vec<Vec<usize>> = vec![Vec::new(); elems];
    for (i, &m) in set_masks.iter().enumerate() {
        for e in bits(m) {
            covering[e].push(i);
        }
    }
    // greedy upper bound
    let mut best: Vec<usize> = {
        let mut chosen = Vec::new();
        let mut covered = 0u64;
        while covered != full {
            let (i, _) = set_masks
                .iter()
                .enumerate()
                .max_by_key(|(i, &m)| ((m & !covered).count_ones(), usize::MAX - i))
                .unwrap();
            chosen.push(i);
            covered |= set_masks[i];
        }
        chosen
    };
    let max_set = set_masks.iter().map(|m| m.count_ones()).max().unwrap_or(1).max(1);
    let mut memo: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
    let mut chosen: Vec<usize> = Vec::new();

    fn search(
        covered: u64,
        full: u64,
        set_masks: &[u64],
        covering: &[Vec<usize>],
        max_set: u32,
        chosen: &mut Vec<usize>,
        best: &mut Vec<usize>,
        memo: &mut std::collections::HashMap<u64, usize>,
    ) {
        if covered == full {
            if chosen.len() < best.len() {
                *best = chosen.clone();
            }
            return;
        }
        let uncovered = (full & !covered).count_ones();
        let lb = (uncovered + max_set - 1) / max_set;
        if chosen.len() + lb as usize >= best.len() {
            return;
        }
        if let Some(&prev) = memo.get(&covered) {
            if prev <= chosen.len() {
                return;
            }
        }
        memo.insert(covered, chosen.len());
        // branch on the uncovered element with fewest candidate sets
        let e = bits(full & !covered)
            .into_iter()
            .min_by_key(|&e| covering[e].len())
            .unwrap();
        for &i in &covering[e] {
            chosen.push(i);
            search(
                covered | set_masks[i],
                full,
                set_masks,
                covering,
                max_set,
                chosen,
                best,
                memo,
            );
            chosen.pop();
        }
    }
    search(
        0,
        full,
        &set_masks,
        &covering,
        max_set,
        &mut chosen,
        &mut best,
        &mut memo,
    );
    best.sort_unstable();
    Ok((best.len(), CoverSolution { sets: best }))
}

/// Exact minimum hitting set, via the transpose.
pub fn exact_hit(s: &SetSystem) -> Result<(usize, HitSolution), Error> {
    let (size, cover) = exact_cover(&s.transpose())?;
    Ok((
        size,
        HitSolution {
            elements: cover.sets,
        },
    ))
}

/// Exact Hadwiger number by enumerating partitions of vertex subsets into
/// connected, pairwise-adjacent branch sets, n <= 8.
pub fn exact_hadwiger(g: &Graph) -> Result<(usize, MinorModel), Error> {
    let n = g.n();
    check_limit("exact_hadwiger", n, 8)?;
    let adj = adjacency_masks(g);
    let mut best_parts: Vec<u64> = Vec::new();

    fn connected_mask(adj: &[u64], mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        loop {
            let mut grew = false;
            let mut scan = seen;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                let add = adj[v] & mask & !seen;
                if add != 0 {
                    seen |= add;
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        seen == mask
    }

    fn go(v: usize, n: usize, adj: &[u64], parts: &mut Vec<u64>, best: &mut Vec<u64>) {
        if v == n {
            if parts.len() <= best.len() {
                return;
            }
            // all parts connected and pairwise adjacent?
            for (i, &a) in parts.iter().enumerate() {
                if !connected_mask(adj, a) {
                    return;
                }
                for &b in &parts[i + 1..] {
                    let touches = bits(a).into_iter().any(|u| adj[u] & b != 0);
                    if !touches {
                        return;
                    }
                }
            }
            *best = parts.clone();
            return;
        }
        // skip v
        go(v + 1, n, adj, parts, best);
        // join an existing part
        for i in 0..parts.len() {
            parts[i] |= 1 << v;
            go(v + 1, n, adj, parts, best);
            parts[i] &= !(1u64 << v);
        }
        // open a new part
        parts.push(1 << v);
        go(v + 1, n, adj, parts, best);
        parts.pop();
    }

    let mut parts = Vec::new();
    go(0, n, &adj, &mut parts, &mut best_parts);
    let t = best_parts.len();
    let mut branch = vec![None; n];
    for (i, &mask) in best_parts.iter().enumerate() {
        for v in bits(mask) {
            branch[v] = Some(i);
        }
    }
    Ok((t, MinorModel { branch, t }))
}

/// Exact largest f with a K_{f,f} subgraph, n <= 20. Returns the two sides
/// of a witness biclique.
pub fn exact_max_balanced_biclique(g: &Graph) -> Result<(usize, (Vec<usize>, Vec<usize>)), Error> {
    let n = g.n();
    check_limit("exact_max_balanced_biclique", n, 20)?;
    let adj = adjacency_masks(g);
    let full = 1u64 << n;
    let mut best = 0usize;
    let mut witness = (Vec::new(), Vec::new());
    for a_mask in 1..full {
        let size_a = a_mask.count_ones() as usize;
        if size_a <= best {
            continue;
        }
        let mut common = u64::MAX;
        for v in bits(a_mask) {
            common &= adj[v];
        }
        let avail = common & !a_mask & (full - 1);
        let f = size_a.min(avail.count_ones() as usize);
        if f > best {
            best = f;
            let a: Vec<usize> = bits(a_mask).into_iter().take(f).collect();
            let b: Vec<usize> = bits(avail).into_iter().take(f).collect();
            witness = (a, b);
        }
    }
    Ok((best, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn tsp_on_cliques_and_empty() {
        let (min, t) = exact_tsp12(&Graph::complete(5), Objective::Min).unwrap();
        assert_eq!(min, 5);
        t.check(&Graph::complete(5)).unwrap();
        let (max, _) = exact_tsp12(&Graph::complete(5), Objective::Max).unwrap();
        assert_eq!(max, 5); // all costs equal
        let (min, _) = exact_tsp12(&Graph::empty(3), Objective::Min).unwrap();
        let (max, _) = exact_tsp12(&Graph::empty(3), Objective::Max).unwrap();
        assert_eq!((min, max), (6, 6));
    }

    #[test]
    fn tsp_two_triangles_is_eight() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(3));
        let (min, tour) = exact_tsp12(&g, Objective::Min).unwrap();
        assert_eq!(min, 8); // n + I with I = 2 cliques
        tour.check(&g).unwrap();
    }

    #[test]
    fn mis_and_clique() {
        assert_eq!(exact_mis(&Graph::empty(5)).unwrap().0, 5);
        assert_eq!(exact_mis(&Graph::complete(5)).unwrap().0, 1);
        assert_eq!(exact_mis(&Graph::cycle(5)).unwrap().0, 2);
        assert_eq!(exact_clique(&Graph::cycle(5)).unwrap().0, 2);
        let (_, w) = exact_mis(&Graph::cycle(5)).unwrap();
        w.check(&Graph::cycle(5)).unwrap();
    }

    #[test]
    fn mis_equals_clique_of_complement() {
        for seed in 0..10 {
            let g = corpus::gnp(10, 0.5, seed);
            assert_eq!(
                exact_mis(&g).unwrap().0,
                exact_clique(&g.complement()).unwrap().0
            );
        }
    }

    #[test]
    fn chromatic_examples() {
        let bipartite = Graph::cycle(6);
        let (chi, col) = exact_chromatic(&bipartite).unwrap();
        assert_eq!(chi, 2);
        col.check(&bipartite).unwrap();
        assert_eq!(exact_chromatic(&Graph::complete(5)).unwrap().0, 5);
        assert_eq!(exact_chromatic(&Graph::cycle(5)).unwrap().0, 3);
    }

    #[test]
    fn longest_path_examples() {
        assert_eq!(exact_longest_path(&Graph::path(6)).unwrap().0, 6);
        assert_eq!(exact_longest_path(&Graph::complete(4)).unwrap().0, 4);
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
        let (len, p) = exact_longest_path(&two_triangles).unwrap();
        assert_eq!(len, 3);
        p.check(&two_triangles).unwrap();
    }

    #[test]
    fn max_acyclic_examples() {
        let dag = Digraph::from_arcs(4, &[(0, 1), (1, 2), (0, 3)]).unwrap();
        assert_eq!(exact_max_acyclic(&dag).unwrap().0, 4);
        let c3 = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let (size, w) = exact_max_acyclic(&c3).unwrap();
        assert_eq!(size, 2);
        w.check(&c3).unwrap();
    }

    #[test]
    fn cover_and_hit_examples() {
        let identity = SetSystem::from_incidence(3, vec![vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(exact_cover(&identity).unwrap().0, 3);
        let one_big = SetSystem::from_incidence(3, vec![vec![0, 1, 2], vec![0]]).unwrap();
        let (size, w) = exact_cover(&one_big).unwrap();
        assert_eq!(size, 1);
        w.check(&one_big).unwrap();
        assert_eq!(exact_hit(&one_big).unwrap().0, 1);
        // duality
        for seed in 0..10u64 {
            let s = crate::amplify::tests_support::random_system(4, 5, seed);
            if let (Ok((c, _)), Ok((h, _))) = (exact_cover(&s), exact_hit(&s.transpose())) {
                assert_eq!(c, h);
            }
        }
    }

    #[test]
    fn hadwiger_examples() {
        let (t, model) = exact_hadwiger(&Graph::complete(4)).unwrap();
        assert_eq!(t, 4);
        model.check(&Graph::complete(4)).unwrap();
        assert_eq!(exact_hadwiger(&Graph::path(5)).unwrap().0, 2);
        let (t, model) = exact_hadwiger(&Graph::cycle(4)).unwrap();
        assert_eq!(t, 3); // contract one edge
        model.check(&Graph::cycle(4)).unwrap();
    }

    #[test]
    fn balanced_biclique_examples() {
        // K_{3,3}
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(exact_max_balanced_biclique(&k33).unwrap().0, 3);
        assert_eq!(exact_max_balanced_biclique(&Graph::empty(4)).unwrap().0, 0);
        assert_eq!(exact_max_balanced_biclique(&Graph::cycle(6)).unwrap().0, 1);
        assert_eq!(exact_max_balanced_biclique(&Graph::complete(4)).unwrap().0, 2);
    }

    #[test]
    fn size_limits_are_hard_errors() {
        assert!(matches!(
            exact_tsp12(&Graph::empty(17), Objective::Min),
            Err(Error::SizeLimit { .. })
        ));
        assert!(matches!(
            exact_hadwiger(&Graph::empty(9)),
            Err(Error::SizeLimit { .. })
        ));
    }
}
