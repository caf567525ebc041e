//! Directed pairings: longest path versus maximum acyclic induced subgraph
//! with |P| * |A| >= n, and the asymmetric (1,2)-TSP variant.

use crate::cert::{Certificate, Input, PairedOutcome, Threshold, Witness};
use crate::dfs::{deepest_path, dfs_forest_directed, preorder_tour_directed, OrderingPolicy};
use crate::graph::{Digraph, Graph};
use crate::ratio::Ratio;
use crate::solution::{AcyclicSet, Tour, VertexPath};
use crate::Error;

fn require_nonempty(d: &Digraph) -> Result<(), Error> {
    if d.n() == 0 {
        return Err(Error::BadInput("digraph must have at least one vertex".into()));
    }
    Ok(())
}

/// One directed DFS gives both: the deepest root-to-leaf path P and the
/// leaf set A, with |P| * |A| >= n and G[A] acyclic.
///
/// Leaves may be joined by cross arcs between trees, but such arcs only
/// point against the forest order, so they cannot close a directed cycle.
/// The acyclicity check stays on in all builds.
pub fn path_and_acyclic(
    d: &Digraph,
    policy: OrderingPolicy,
) -> Result<(VertexPath, AcyclicSet), Error> {
    require_nonempty(d)?;
    let f = dfs_forest_directed(d, policy);
    let path = deepest_path(&f)?;
    let acyclic = AcyclicSet {
        vertices: f.leaves.clone(),
    };
    acyclic.check(d)?;
    debug_assert!(path.len() * acyclic.size() >= d.n());
    Ok((path, acyclic))
}

/// Return the path when it reaches n^(1-eps) vertices, else the acyclic
/// set, whose size is then at least n / |P| > n^eps.
pub fn dispatch_directed(
    d: &Digraph,
    eps: Ratio,
    policy: OrderingPolicy,
) -> Result<PairedOutcome, Error> {
    if !eps.in_open_unit() {
        return Err(Error::EpsOutOfRange {
            eps: eps.to_string(),
            expected: "0 < eps < 1",
        });
    }
    let (path, acyclic) = path_and_acyclic(d, policy)?;
    let n = d.n() as u64;
    let p = path.len() as u64;
    let holds = eps.ge_pow_one_minus_eps(p, n);
    let input = Input::Digraph(d);
    let path_cert = Certificate::new(
        "longest-path",
        "longest-path",
        p,
        Witness::Path {
            vertices: path.vertices.clone(),
        },
        &input,
    );
    let acyclic_cert = Certificate::new(
        "acyclic-set",
        "acyclic-set",
        acyclic.size() as u64,
        Witness::VertexSet {
            vertices: acyclic.vertices.clone(),
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
        ("acyclic-set", acyclic_cert.clone())
    };
    Ok(PairedOutcome {
        side: side.into(),
        payload,
        threshold,
        both_raw: Some(Box::new((path_cert, acyclic_cert))),
    })
}

/// Asymmetric (1,2) preorder tour of length <= n + |A|, paired with the
/// leaf set A (acyclic).
pub fn asym_tour_and_acyclic(
    d: &Digraph,
    policy: OrderingPolicy,
) -> Result<(Tour, AcyclicSet), Error> {
    require_nonempty(d)?;
    let f = dfs_forest_directed(d, policy);
    let tour = preorder_tour_directed(&f, d)?;
    let acyclic = AcyclicSet {
        vertices: f.leaves.clone(),
    };
    acyclic.check(d)?;
    debug_assert!(tour.length <= (d.n() + acyclic.size()) as u64);
    Ok((tour, acyclic))
}

/// Return the acyclic set when |A| >= eps*n (a 1/eps-approximation), else
/// the tour, whose length <= n + |A| < (1+eps)n.
pub fn dispatch_asym_tsp(
    d: &Digraph,
    eps: Ratio,
    policy: OrderingPolicy,
) -> Result<PairedOutcome, Error> {
    if !eps.is_positive() {
        return Err(Error::EpsOutOfRange {
            eps: eps.to_string(),
            expected: "eps > 0",
        });
    }
    let (tour, acyclic) = asym_tour_and_acyclic(d, policy)?;
    let n = d.n() as u64;
    let a = acyclic.size() as u64;
    let holds = eps.ge_eps_times(a, n);
    let input = Input::Digraph(d);
    let acyclic_cert = Certificate::new(
        "acyclic-set",
        "acyclic-set",
        a,
        Witness::VertexSet {
            vertices: acyclic.vertices.clone(),
        },
        &input,
    );
    let tour_cert = Certificate::new(
        "asym-tsp12",
        "tour",
        tour.length,
        Witness::Tour {
            order: tour.order.clone(),
        },
        &input,
    );
    let threshold = Threshold {
        rule: format!(
            "|A|*{} >= n*{}: {} >= {}",
            eps.denom(),
            eps.numer(),
            a * eps.denom(),
            n * eps.numer()
        ),
        eps: eps.to_string(),
        holds,
    };
    let (side, payload) = if holds {
        ("acyclic-set", acyclic_cert.clone())
    } else {
        ("tour", tour_cert.clone())
    };
    Ok(PairedOutcome {
        side: side.into(),
        payload,
        threshold,
        both_raw: Some(Box::new((acyclic_cert, tour_cert))),
    })
}

/// The undirected-to-directed reduction: each edge becomes a 2-cycle, so
/// the maximum acyclic induced subgraph equals the independence number.
pub fn two_cycle_encoding(g: &Graph) -> Digraph {
    let mut arcs = Vec::with_capacity(2 * g.m());
    for (u, v) in g.edges() {
        arcs.push((u, v));
        arcs.push((v, u));
    }
    Digraph::from_arcs(g.n(), &arcs).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn two_directed_triangles() -> Digraph {
        Digraph::from_arcs(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap()
    }

    #[test]
    fn path_and_acyclic_examples() {
        let chain = Digraph::from_arcs(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let (p, a) = path_and_acyclic(&chain, OrderingPolicy::Ascending).unwrap();
        assert_eq!((p.len(), a.size()), (6, 1));

        let iso = Digraph::empty(6);
        let (p, a) = path_and_acyclic(&iso, OrderingPolicy::Ascending).unwrap();
        assert_eq!((p.len(), a.size()), (1, 6));

        let d = two_directed_triangles();
        let (p, a) = path_and_acyclic(&d, OrderingPolicy::Ascending).unwrap();
        assert_eq!((p.len(), a.size()), (3, 2));
        assert_eq!(crate::oracle::exact_longest_path_directed(&d).unwrap().0, 3);
        assert_eq!(crate::oracle::exact_max_acyclic(&d).unwrap().0, 4);
    }

    #[test]
    fn product_bound_over_corpus() {
        for seed in 0..30u64 {
            let d = corpus::random_digraph(15, 0.2, seed);
            for policy in [OrderingPolicy::Ascending, OrderingPolicy::Seeded(seed)] {
                let (p, a) = path_and_acyclic(&d, policy).unwrap();
                a.check(&d).unwrap();
                p.check_directed(&d).unwrap();
                assert!(p.len() * a.size() >= 15);
            }
        }
    }

    #[test]
    fn optimal_product_bound_small() {
        for seed in 0..10u64 {
            let d = corpus::random_digraph(10, 0.25, seed);
            let p = crate::oracle::exact_longest_path_directed(&d).unwrap().0;
            let a = crate::oracle::exact_max_acyclic(&d).unwrap().0;
            assert!(p * a >= 10);
        }
        // tight on disjoint complete digraphs
        let d = corpus::disjoint_complete_digraphs(&[3, 3, 3]);
        let p = crate::oracle::exact_longest_path_directed(&d).unwrap().0;
        let a = crate::oracle::exact_max_acyclic(&d).unwrap().0;
        assert_eq!(p * a, 9);
    }

    #[test]
    fn dispatch_directed_examples() {
        let chain =
            Digraph::from_arcs(16, &(0..15).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        let out = dispatch_directed(&chain, Ratio::new(1, 2), OrderingPolicy::Ascending).unwrap();
        assert_eq!(out.side, "longest-path");

        let out = dispatch_directed(&Digraph::empty(16), Ratio::new(1, 2), OrderingPolicy::Ascending)
            .unwrap();
        assert_eq!(out.side, "acyclic-set");
        assert_eq!(out.payload.value, 16);

        // two 3-cycles: 3 >= 6^(1/2), path side
        let d = two_directed_triangles();
        let out = dispatch_directed(&d, Ratio::new(1, 2), OrderingPolicy::Ascending).unwrap();
        assert_eq!(out.side, "longest-path");
        crate::cert::verify(&out.payload, &Input::Digraph(&d)).unwrap();
    }

    #[test]
    fn asym_tour_examples() {
        let (t, a) = asym_tour_and_acyclic(&Digraph::complete(4), OrderingPolicy::Ascending).unwrap();
        assert_eq!((t.length, a.size()), (4, 1));

        let (t, a) = asym_tour_and_acyclic(&Digraph::empty(4), OrderingPolicy::Ascending).unwrap();
        assert_eq!((t.length, a.size()), (8, 4));

        let d = two_directed_triangles();
        let (t, a) = asym_tour_and_acyclic(&d, OrderingPolicy::Ascending).unwrap();
        assert!(t.length <= 8);
        assert_eq!(a.size(), 2);
        t.check_directed(&d).unwrap();
    }

    #[test]
    fn dispatch_asym_examples() {
        let out = dispatch_asym_tsp(&Digraph::complete(8), Ratio::new(1, 4), OrderingPolicy::Ascending)
            .unwrap();
        assert_eq!(out.side, "tour");
        assert_eq!(out.payload.value, 8);

        let out = dispatch_asym_tsp(&Digraph::empty(8), Ratio::new(1, 4), OrderingPolicy::Ascending)
            .unwrap();
        assert_eq!(out.side, "acyclic-set");
        assert_eq!(out.payload.value, 8);

        // two 3-cycles, eps = 1/4: |A| = 2 >= 6/4, acyclic side; |A*| = 4 <= 2/(1/4)
        let d = two_directed_triangles();
        let out = dispatch_asym_tsp(&d, Ratio::new(1, 4), OrderingPolicy::Ascending).unwrap();
        assert_eq!(out.side, "acyclic-set");
        assert_eq!(out.payload.value, 2);
        assert!(crate::oracle::exact_max_acyclic(&d).unwrap().0 <= 2 * 4);

        assert!(dispatch_asym_tsp(&d, Ratio::new(0, 1), OrderingPolicy::Ascending).is_err());
    }

    #[test]
    fn two_cycle_encoding_matches_alpha() {
        for seed in 0..10u64 {
            let g = corpus::gnp(10, 0.4, seed);
            let d = two_cycle_encoding(&g);
            let alpha = crate::oracle::exact_mis(&g).unwrap().0;
            let acyclic = crate::oracle::exact_max_acyclic(&d).unwrap().0;
            assert_eq!(alpha, acyclic);
        }
    }
}
