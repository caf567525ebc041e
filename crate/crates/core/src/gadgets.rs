//! Hardness-transfer constructions: the TSP/MaxTSP gadget on 3n-1 vertices
//! and the clique/independent-set doubling instance.

use crate::graph::Graph;
use crate::ramsey::RamseyGraph;
use crate::Error;
use serde::{Deserialize, Serialize};
use std::ops::Range;

/// Index ranges of the three blocks of the gadget graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetLayout {
    pub g_block: Range<usize>,
    pub complement_block: Range<usize>,
    pub clique_block: Range<usize>,
}

/// H = [G | complement(G) | K_{n-1}] with the clique joined completely to
/// the complement block and the G block isolated from both. For
/// non-Hamiltonian g with optimal tour length n + x, H has minimum tour
/// 3n+x and maximum tour 6n-x-1: the isolated G block forces two cost-2
/// connectors on either objective.
pub fn tsp_maxtsp_gadget(g: &Graph) -> Result<(Graph, GadgetLayout), Error> {
    let n = g.n();
    if n < 2 {
        return Err(Error::BadInput(format!(
            "gadget needs at least 2 vertices, got {n}"
        )));
    }
    let h = g
        .disjoint_union(&g.complement())
        .disjoint_union(&Graph::complete(n - 1));
    let mut extra = Vec::new();
    for c in 2 * n..3 * n - 1 {
        for v in n..2 * n {
            extra.push((c, v));
        }
    }
    let join = Graph::from_edges(3 * n - 1, &extra)?;
    let h = h.edge_union(&join)?;
    Ok((
        h,
        GadgetLayout {
            g_block: 0..n,
            complement_block: n..2 * n,
            clique_block: 2 * n..3 * n - 1,
        },
    ))
}

/// Restrict a tour of H to the G block, in visiting order, and recost it
/// as a (1,2)-tour of g.
pub fn extract_block_tour(
    order: &[usize],
    layout: &GadgetLayout,
    g: &Graph,
) -> crate::solution::Tour {
    let order: Vec<usize> = order
        .iter()
        .copied()
        .filter(|v| layout.g_block.contains(v))
        .map(|v| v - layout.g_block.start)
        .collect();
    let length = crate::solution::tour_length(&order, g);
    crate::solution::Tour { order, length }
}

/// F = (g union h) plus the complement of (g union h), disjointly: the
/// doubled instance whose clique number and independence number coincide.
pub fn clique_is_instance(g: &Graph, h: &RamseyGraph) -> Result<Graph, Error> {
    let merged = g.edge_union(&h.graph)?;
    Ok(merged.disjoint_union(&merged.complement()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{exact_tsp12, Objective};
    use crate::ramsey::{combine, BipartitePiece};

    #[test]
    fn gadget_shape_for_k2() {
        let (h, layout) = tsp_maxtsp_gadget(&Graph::complete(2)).unwrap();
        assert_eq!(h.n(), 5);
        assert_eq!(layout.clique_block, 4..5);
        // K_2 block intact, complement block empty, clique joined to it
        assert!(h.has_edge(0, 1));
        assert!(!h.has_edge(2, 3));
        assert!(h.has_edge(4, 2) && h.has_edge(4, 3));
        assert!(!h.has_edge(0, 2) && !h.has_edge(0, 4));
    }

    #[test]
    fn gadget_formulas_for_p3() {
        // P_3: optimal tour 4, so x = 1; n = 3 -> min 10, max 16 on 8 vertices
        let g = Graph::path(3);
        let (h, _) = tsp_maxtsp_gadget(&g).unwrap();
        assert_eq!(h.n(), 8);
        assert_eq!(exact_tsp12(&g, Objective::Min).unwrap().0, 4);
        assert_eq!(exact_tsp12(&h, Objective::Min).unwrap().0, 10);
        assert_eq!(exact_tsp12(&h, Objective::Max).unwrap().0, 16);
    }

    #[test]
    fn hamiltonian_input_builds_but_is_out_of_formula_scope() {
        // C_4 is Hamiltonian (x = 0); the construction still works
        let (h, _) = tsp_maxtsp_gadget(&Graph::cycle(4)).unwrap();
        assert_eq!(h.n(), 11);
        assert!(exact_tsp12(&h, Objective::Min).unwrap().0 >= 11);
    }

    #[test]
    fn tour_extraction_recovers_a_good_tour() {
        let g = Graph::path(3);
        let (h, layout) = tsp_maxtsp_gadget(&g).unwrap();
        let (_, tour) = exact_tsp12(&h, Objective::Min).unwrap();
        let extracted = extract_block_tour(&tour.order, &layout, &g);
        extracted.check(&g).unwrap();
        let opt = exact_tsp12(&g, Objective::Min).unwrap().0;
        assert!(extracted.length <= opt + 2);
    }

    #[test]
    fn doubled_instance_examples() {
        let empty_piece = BipartitePiece::new(2, vec![0b01, 0b00], 2).unwrap();
        let h = combine(vec![empty_piece.clone(), empty_piece]).unwrap();
        let g = Graph::empty(4);
        let f = clique_is_instance(&g, &h).unwrap();
        assert_eq!(f.n(), 8);

        // clique(F) = max(clique(G u H), alpha(G u H)); independence numbers
        // add across the disjoint union, so alpha(F) is the sum instead
        let merged = g.edge_union(&h.graph).unwrap();
        let clique_m = crate::oracle::exact_clique(&merged).unwrap().0;
        let alpha_m = crate::oracle::exact_mis(&merged).unwrap().0;
        assert_eq!(
            crate::oracle::exact_clique(&f).unwrap().0,
            clique_m.max(alpha_m)
        );
        assert_eq!(
            crate::oracle::exact_mis(&f).unwrap().0,
            clique_m + alpha_m
        );
    }

    #[test]
    fn edge_addition_monotonicity() {
        for seed in 0..10u64 {
            let g = crate::corpus::gnp(8, 0.3, seed);
            let h = crate::corpus::gnp(8, 0.3, seed + 100);
            let merged = g.edge_union(&h).unwrap();
            assert!(
                crate::oracle::exact_mis(&merged).unwrap().0
                    <= crate::oracle::exact_mis(&h).unwrap().0
            );
        }
    }
}
