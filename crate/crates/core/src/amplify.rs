//! The kG and k*G amplifications for set cover / hitting set, reduced
//! solutions, and the floor(q/k) pullback from k*G back to the base.
//!
//! Index scheme, fixed so certificates are portable: in kG, set-side vertex
//! (u_i, j) is i*(k+1)+j for j in 0..=k; element-side vertex (v_i, j) is
//! i*k+(j-1) for j in 1..=k. In k*G the first (k+1)*|elements(base)| sets
//! belong to the k(base^T) copy and the rest to its transpose, with the
//! element ids offset accordingly.

use crate::set_system::SetSystem;
use crate::solution::{CoverSolution, HitSolution};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmpKind {
    KG,
    KStarG,
}

/// An amplified system together with the data needed to decode vertices.
#[derive(Clone, Debug)]
pub struct AmplifiedSystem {
    pub base: SetSystem,
    pub k: usize,
    pub kind: AmpKind,
    pub system: SetSystem,
}

/// kG: each base set u_i becomes k+1 copies; copy 0 covers every layer of
/// its elements, copy j only layer j. Cover(kG) = Cover(G) and
/// Hit(kG) = k * Hit(G).
pub fn build_kg(base: &SetSystem, k: usize) -> Result<AmplifiedSystem, Error> {
    if k < 1 {
        return Err(Error::BadAmplification);
    }
    let system = kg_system(base, k);
    Ok(AmplifiedSystem {
        base: base.clone(),
        k,
        kind: AmpKind::KG,
        system,
    })
}

fn kg_system(base: &SetSystem, k: usize) -> SetSystem {
    let p = base.num_sets();
    let m = base.num_elements();
    let mut inc: Vec<Vec<usize>> = Vec::with_capacity(p * (k + 1));
    for i in 0..p {
        for j in 0..=k {
            let list: Vec<usize> = if j == 0 {
                base.set(i)
                    .iter()
                    .flat_map(|&e| (1..=k).map(move |layer| e * k + layer - 1))
                    .collect()
            } else {
                base.set(i).iter().map(|&e| e * k + j - 1).collect()
            };
            inc.push(list);
        }
    }
    SetSystem::from_incidence(m * k, inc).expect("kG indices are in range by construction")
}

/// k*G: disjoint union of k(base^T) and its transpose. Self-dual, with
/// Cover = Hit = k * Cover(base) + Hit(base).
pub fn build_kstar(base: &SetSystem, k: usize) -> Result<AmplifiedSystem, Error> {
    if k < 1 {
        return Err(Error::BadAmplification);
    }
    let part1 = kg_system(&base.transpose(), k);
    let part2 = part1.transpose();
    Ok(AmplifiedSystem {
        base: base.clone(),
        k,
        kind: AmpKind::KStarG,
        system: part1.disjoint_union(&part2),
    })
}

impl AmplifiedSystem {
    /// Number of sets in the k(base^T) copy of a k*G system.
    fn part1_sets(&self) -> usize {
        debug_assert_eq!(self.kind, AmpKind::KStarG);
        (self.k + 1) * self.base.num_elements()
    }

    /// Number of elements in the k(base^T) copy of a k*G system.
    fn part1_elements(&self) -> usize {
        debug_assert_eq!(self.kind, AmpKind::KStarG);
        self.k * self.base.num_sets()
    }
}

/// Replace every set copy (u_i, j!=0) by (u_i, 0), which covers a superset.
/// Valid for kG set indices and for the k(base^T) portion of k*G.
fn reduce_set_index(s: usize, k: usize) -> usize {
    (s / (k + 1)) * (k + 1)
}

/// Reduced cover: no replaceable (u_i, j!=0) copy remains; size never grows.
pub fn reduce_cover(sol: &CoverSolution, sys: &AmplifiedSystem) -> Result<CoverSolution, Error> {
    sol.check(&sys.system)?;
    let boundary = match sys.kind {
        AmpKind::KG => sys.system.num_sets(),
        AmpKind::KStarG => sys.part1_sets(),
    };
    let mut sets: Vec<usize> = sol
        .sets
        .iter()
        .map(|&s| {
            if s < boundary {
                reduce_set_index(s, sys.k)
            } else {
                s
            }
        })
        .collect();
    sets.sort_unstable();
    sets.dedup();
    let reduced = CoverSolution { sets };
    reduced.check(&sys.system)?;
    Ok(reduced)
}

/// Reduced hitting set: in k*G the transpose-copy elements are set copies
/// (v_i, j) and reduce the same way; kG element copies have no j = 0 form.
pub fn reduce_hit(sol: &HitSolution, sys: &AmplifiedSystem) -> Result<HitSolution, Error> {
    sol.check(&sys.system)?;
    let mut elements: Vec<usize> = match sys.kind {
        AmpKind::KG => sol.elements.clone(),
        AmpKind::KStarG => {
            let boundary = sys.part1_elements();
            sol.elements
                .iter()
                .map(|&e| {
                    if e >= boundary {
                        boundary + reduce_set_index(e - boundary, sys.k)
                    } else {
                        e
                    }
                })
                .collect()
        }
    };
    elements.sort_unstable();
    elements.dedup();
    let reduced = HitSolution { elements };
    reduced.check(&sys.system)?;
    Ok(reduced)
}

/// From a k*G cover of size q, extract a base cover of size <= floor(q/k).
///
/// The chosen sets in the transpose copy split into k layers and each layer
/// is forced to cover every base element on its own; the smallest layer has
/// at most floor(q/k) sets. Requires k > |sets(base)| so that at the
/// optimum q = k*Cover + Hit the floor equals Cover exactly.
pub fn pullback(sol: &CoverSolution, sys: &AmplifiedSystem) -> Result<CoverSolution, Error> {
    if sys.kind != AmpKind::KStarG {
        return Err(Error::BadInput("pullback needs a k*G system".into()));
    }
    if sys.k <= sys.base.num_sets() {
        return Err(Error::PullbackParameter {
            k: sys.k,
            num_sets: sys.base.num_sets(),
        });
    }
    let reduced = reduce_cover(sol, sys)?;
    let q = reduced.size();
    let boundary = sys.part1_sets();
    let k = sys.k;
    // transpose-copy set s decodes to base set i = local/k, layer local%k+1
    let mut layers: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &s in &reduced.sets {
        if s >= boundary {
            let local = s - boundary;
            layers[local % k].push(local / k);
        }
    }
    let best = layers
        .iter()
        .min_by_key(|l| l.len())
        .expect("k >= 1 layers");
    let mut sets = best.clone();
    sets.sort_unstable();
    sets.dedup();
    let cover = CoverSolution { sets };
    cover.check(&sys.base)?;
    if cover.size() > q / k {
        return Err(Error::InvalidSolution(format!(
            "pullback produced {} sets, above floor({q}/{k})",
            cover.size()
        )));
    }
    Ok(cover)
}

/// Greedy cover: largest uncovered gain, ties by lowest set index.
pub fn greedy_set_cover(s: &SetSystem) -> Result<CoverSolution, Error> {
    let mut covered = vec![false; s.num_elements()];
    let mut remaining = s.num_elements();
    let mut sets = Vec::new();
    let mut chosen = vec![false; s.num_sets()];
    while remaining > 0 {
        let mut best = None;
        let mut best_gain = 0;
        for i in 0..s.num_sets() {
            if chosen[i] {
                continue;
            }
            let gain = s.set(i).iter().filter(|&&e| !covered[e]).count();
            if gain > best_gain {
                best_gain = gain;
                best = Some(i);
            }
        }
        let Some(i) = best else {
            return Err(Error::BadInput(
                "set cover infeasible: some element belongs to no set".into(),
            ));
        };
        chosen[i] = true;
        sets.push(i);
        for &e in s.set(i) {
            if !covered[e] {
                covered[e] = true;
                remaining -= 1;
            }
        }
    }
    sets.sort_unstable();
    Ok(CoverSolution { sets })
}

#[cfg(test)]
pub mod tests_support {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    pub fn random_system(num_sets: usize, num_elements: usize, seed: u64) -> SetSystem {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inc = (0..num_sets)
            .map(|_| (0..num_elements).filter(|_| rng.gen_bool(0.5)).collect())
            .collect();
        SetSystem::from_incidence(num_elements, inc).unwrap()
    }
}
