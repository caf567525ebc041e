//! Paired (1,2)-TSP / independent-set guarantees from one DFS forest, plus
//! the path-cover and minimum-leaf spanning-forest variants and their
//! eps-dispatch selectors.

use crate::cert::{Certificate, Input, PairedOutcome, Threshold, Witness};
use crate::dfs::{dfs_forest, preorder_tour, OrderingPolicy};
use crate::graph::Graph;
use crate::ratio::Ratio;
use crate::solution::{IndependentSet, PathCover, SpanningForestCert, Tour};
use crate::Error;

/// Tour plus independent set with tour.length - set.size() <= n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TourMis {
    pub tour: Tour,
    pub independent_set: IndependentSet,
    /// True exactly when L = n and I = 1, the one case where
    /// L - I = n fails (the tour closed on a real edge).
    pub exception: bool,
}

fn require_nonempty(g: &Graph) -> Result<(), Error> {
    if g.n() == 0 {
        return Err(Error::BadInput("graph must have at least one vertex".into()));
    }
    Ok(())
}

/// One DFS gives both: the preorder tour of length L and the leaf set of
/// size I, with L - I <= n, and L - I = n unless L = n and I = 1.
///
/// The step after every non-last leaf always costs 2 (its preorder
/// successor cannot be adjacent, or it would have become a child), so the
/// only possible shortcut is the closing step back to the first root. When
/// that shortcut fires with more than one leaf, the last leaf is dropped
/// from the reported set to restore exact equality; the remaining set is
/// still independent and still satisfies every dispatch bound.
pub fn tour_and_mis(g: &Graph, policy: OrderingPolicy) -> Result<TourMis, Error> {
    require_nonempty(g)?;
    let f = dfs_forest(g, policy);
    let tour = preorder_tour(&f, g)?;
    let mut leaves = f.leaves.clone();
    let n = g.n();
    let mut exception = false;
    if n == 1 {
        // single vertex: L = 0 by convention, the degenerate exception
        exception = true;
    } else if g.has_edge(tour.order[n - 1], tour.order[0]) {
        if leaves.len() == 1 {
            exception = true; // L = n, I = 1
        } else {
            let last = tour.order[n - 1];
            leaves.retain(|&v| v != last);
        }
    }
    let result = TourMis {
        tour,
        independent_set: IndependentSet { vertices: leaves },
        exception,
    };
    debug_assert!(
        result.exception
            || result.tour.length == (n + result.independent_set.size()) as u64
    );
    Ok(result)
}

/// Return the tour when L <= n(1+eps), else the leaf
/// set, whose size L - n >= eps*n then beats alpha/(1/eps).
pub fn dispatch_tsp_mis(g: &Graph, eps: Ratio, policy: OrderingPolicy) -> Result<PairedOutcome, Error> {
    if !eps.is_positive() {
        return Err(Error::EpsOutOfRange {
            eps: eps.to_string(),
            expected: "eps > 0",
        });
    }
    let paired = tour_and_mis(g, policy)?;
    let n = g.n() as u64;
    let l = paired.tour.length;
    let holds = eps.le_one_plus_eps_times(l, n);
    let input = Input::Graph(g);
    let tour_cert = Certificate::new(
        "tsp12",
        "tour",
        l,
        Witness::Tour {
            order: paired.tour.order.clone(),
        },
        &input,
    );
    let is_cert = Certificate::new(
        "independent-set",
        "independent-set",
        paired.independent_set.size() as u64,
        Witness::VertexSet {
            vertices: paired.independent_set.vertices.clone(),
        },
        &input,
    );
    let threshold = Threshold {
        rule: format!(
            "L*{} <= n*{}: {} <= {}",
            eps.denom(),
            eps.denom() + eps.numer(),
            l * eps.denom(),
            n * (eps.denom() + eps.numer())
        ),
        eps: eps.to_string(),
        holds,
    };
    let (side, payload) = if holds {
        ("tour", tour_cert.clone())
    } else {
        ("independent-set", is_cert.clone())
    };
    Ok(PairedOutcome {
        side: side.into(),
        payload,
        threshold,
        both_raw: Some(Box::new((tour_cert, is_cert))),
    })
}

/// Cut the preorder after each leaf: I vertex-disjoint tree paths covering
/// the graph, paired with the I leaves as an independent set.
pub fn pathcover_and_mis(g: &Graph, policy: OrderingPolicy) -> (PathCover, IndependentSet) {
    let f = dfs_forest(g, policy);
    let mut paths = Vec::new();
    let mut current = Vec::new();
    for &v in &f.preorder {
        current.push(v);
        if f.is_leaf(v) {
            paths.push(std::mem::take(&mut current));
        }
    }
    debug_assert!(current.is_empty(), "preorder must end at a leaf");
    (
        PathCover { paths },
        IndependentSet {
            vertices: f.leaves,
        },
    )
}

/// Return the independent set when I >= n^(1-eps), else the path cover
/// with I < n^(1-eps) paths.
pub fn dispatch_pathcover_mis(
    g: &Graph,
    eps: Ratio,
    policy: OrderingPolicy,
) -> Result<PairedOutcome, Error> {
    if !eps.in_open_unit() {
        return Err(Error::EpsOutOfRange {
            eps: eps.to_string(),
            expected: "0 < eps < 1",
        });
    }
    let (cover, set) = pathcover_and_mis(g, policy);
    let n = g.n() as u64;
    let i = set.size() as u64;
    let holds = eps.ge_pow_one_minus_eps(i, n);
    let input = Input::Graph(g);
    let is_cert = Certificate::new(
        "independent-set",
        "independent-set",
        i,
        Witness::VertexSet {
            vertices: set.vertices.clone(),
        },
        &input,
    );
    let cover_cert = Certificate::new(
        "path-cover",
        "path-cover",
        cover.num_paths() as u64,
        Witness::Paths {
            paths: cover.paths.clone(),
        },
        &input,
    );
    let threshold = Threshold {
        rule: format!(
            "I^{} >= n^{}: {}^{} >= {}^{}",
            eps.denom(),
            eps.denom() - eps.numer(),
            i,
            eps.denom(),
            n,
            eps.denom() - eps.numer()
        ),
        eps: eps.to_string(),
        holds,
    };
    let (side, payload) = if holds {
        ("independent-set", is_cert.clone())
    } else {
        ("path-cover", cover_cert.clone())
    };
    Ok(PairedOutcome {
        side: side.into(),
        payload,
        threshold,
        both_raw: Some(Box::new((is_cert, cover_cert))),
    })
}

/// Spanning forest whose leaf count equals the DFS leaf count. Connected
/// inputs get a spanning tree; disconnected inputs one tree per component.
pub fn min_leaf_spanning_cert(g: &Graph, policy: OrderingPolicy) -> SpanningForestCert {
    let f = dfs_forest(g, policy);
    SpanningForestCert {
        parent: f.parent,
        leaf_count: f.leaves.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert;
    use crate::corpus;

    fn two_triangles() -> Graph {
        Graph::complete(3).disjoint_union(&Graph::complete(3))
    }

    #[test]
    fn k5_is_the_exception_case() {
        let r = tour_and_mis(&Graph::complete(5), OrderingPolicy::Ascending).unwrap();
        assert_eq!(r.tour.length, 5);
        assert_eq!(r.independent_set.size(), 1);
        assert!(r.exception);
    }

    #[test]
    fn empty_graph_is_tight() {
        let g = Graph::empty(4);
        let r = tour_and_mis(&g, OrderingPolicy::Ascending).unwrap();
        assert_eq!(r.tour.length, 8);
        assert_eq!(r.independent_set.size(), 4);
        assert!(!r.exception);
    }

    #[test]
    fn two_triangles_match_the_oracle() {
        let g = two_triangles();
        let r = tour_and_mis(&g, OrderingPolicy::Ascending).unwrap();
        assert_eq!(r.tour.length, 8);
        assert_eq!(r.independent_set.size(), 2);
        let (opt, _) = crate::oracle::exact_tsp12(&g, crate::oracle::Objective::Min).unwrap();
        assert_eq!(opt, 8);
        assert_eq!(crate::oracle::exact_mis(&g).unwrap().0, 2);
    }

    #[test]
    fn tradeoff_inequality_over_corpus() {
        for seed in 0..50u64 {
            let g = corpus::gnp(20, 0.1 + 0.04 * (seed % 20) as f64, seed);
            for policy in [OrderingPolicy::Ascending, OrderingPolicy::Seeded(seed)] {
                let r = tour_and_mis(&g, policy).unwrap();
                r.tour.check(&g).unwrap();
                r.independent_set.check(&g).unwrap();
                let (l, i, n) = (r.tour.length, r.independent_set.size() as u64, 20u64);
                if r.exception {
                    assert_eq!((l, i), (n, 1));
                } else {
                    assert_eq!(l, n + i);
                }
            }
        }
    }

    #[test]
    fn dispatch_examples() {
        // K_6, eps = 1/2: Hamiltonian, tour side
        let out = dispatch_tsp_mis(&Graph::complete(6), Ratio::new(1, 2), OrderingPolicy::Ascending)
            .unwrap();
        assert_eq!(out.side, "tour");
        assert_eq!(out.payload.value, 6);

        // empty n = 10, eps = 1/2: L = 20 > 15, IS side with all vertices
        let g = Graph::empty(10);
        let out = dispatch_tsp_mis(&g, Ratio::new(1, 2), OrderingPolicy::Ascending).unwrap();
        assert_eq!(out.side, "independent-set");
        assert_eq!(out.payload.value, 10);
        cert::verify(&out.payload, &Input::Graph(&g)).unwrap();

        // three triangles, eps = 1/5: L = 12 > 9*(6/5), IS side with I = 3 >= alpha/5
        let g = corpus::disjoint_cliques(&[3, 3, 3]);
        let out = dispatch_tsp_mis(&g, Ratio::new(1, 5), OrderingPolicy::Ascending).unwrap();
        assert_eq!(out.side, "independent-set");
        assert_eq!(out.payload.value, 3);
        assert_eq!(crate::oracle::exact_mis(&g).unwrap().0, 3);
    }

    #[test]
    fn nonpositive_eps_rejected() {
        assert!(matches!(
            dispatch_tsp_mis(&Graph::complete(3), Ratio::new(0, 1), OrderingPolicy::Ascending),
            Err(Error::EpsOutOfRange { .. })
        ));
    }

    #[test]
    fn pathcover_examples() {
        let (cover, set) = pathcover_and_mis(&Graph::path(5), OrderingPolicy::Ascending);
        assert_eq!(cover.num_paths(), 1);
        assert_eq!(set.size(), 1);

        let (cover, set) = pathcover_and_mis(&Graph::empty(3), OrderingPolicy::Ascending);
        assert_eq!(cover.num_paths(), 3);
        assert_eq!(set.size(), 3);

        let g = two_triangles();
        let (cover, set) = pathcover_and_mis(&g, OrderingPolicy::Ascending);
        cover.check(&g).unwrap();
        set.check(&g).unwrap();
        assert_eq!(cover.num_paths(), 2);
        assert!(cover.paths.iter().all(|p| p.len() == 3));
        assert_eq!(set.size(), 2);
    }

    #[test]
    fn pathcover_dispatch_examples() {
        let out = dispatch_pathcover_mis(&Graph::empty(16), Ratio::new(1, 2), OrderingPolicy::Ascending)
            .unwrap();
        assert_eq!(out.side, "independent-set");
        assert_eq!(out.payload.value, 16);

        let out = dispatch_pathcover_mis(&Graph::complete(16), Ratio::new(1, 2), OrderingPolicy::Ascending)
            .unwrap();
        assert_eq!(out.side, "path-cover");
        assert_eq!(out.payload.value, 1);

        // two triangles, eps = 3/10: 2 < 6^(7/10), cover side with 2 paths
        let out = dispatch_pathcover_mis(&two_triangles(), Ratio::new(3, 10), OrderingPolicy::Ascending)
            .unwrap();
        assert_eq!(out.side, "path-cover");
        assert_eq!(out.payload.value, 2);

        assert!(dispatch_pathcover_mis(&Graph::path(3), Ratio::new(1, 1), OrderingPolicy::Ascending)
            .is_err());
    }

    #[test]
    fn spanning_cert_examples() {
        let c = min_leaf_spanning_cert(&Graph::path(4), OrderingPolicy::Ascending);
        assert_eq!(c.leaf_count, 1); // root not counted as a leaf
        c.check(&Graph::path(4)).unwrap();

        let c = min_leaf_spanning_cert(&Graph::complete(4), OrderingPolicy::Ascending);
        assert_eq!(c.leaf_count, 1);

        // star rooted at the center: all three outer vertices are leaves
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = min_leaf_spanning_cert(&star, OrderingPolicy::Ascending);
        assert_eq!(c.leaf_count, 3);
        c.check(&star).unwrap();
    }

    #[test]
    fn corollary_on_oracle_range() {
        // L* - alpha <= n on every n <= 10 corpus graph
        for seed in 0..15u64 {
            let g = corpus::gnp(9, 0.4, seed);
            let (l_star, _) =
                crate::oracle::exact_tsp12(&g, crate::oracle::Objective::Min).unwrap();
            let (alpha, _) = crate::oracle::exact_mis(&g).unwrap();
            assert!(l_star as i64 - alpha as i64 <= 9);
        }
    }
}
