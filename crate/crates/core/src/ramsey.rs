//! Combine k bipartite Ramsey pieces into a graph on 2^k label-indexed
//! vertices via the first-differing-bit rule, plus the majority-descent
//! witness search and exact small-n verification.
//!
//! Labels are the vertex ids read MSB-first: bit i of vertex v is
//! (v >> (k-1-i)) & 1. Piece i sits between the bit-i halves; a vertex's
//! index inside its half is its label with bit i deleted.

use crate::graph::Graph;
use crate::oracle;
use crate::Error;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Bipartite graph between two halves of equal size, with a certified
/// Ramsey bound f: every pair of f-subsets of the two halves spans at
/// least one edge and at least one non-edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartitePiece {
    half: usize,
    /// adj[a] bit b: edge between side-0 vertex a and side-1 vertex b.
    adj: Vec<u64>,
    f: usize,
}

impl BipartitePiece {
    /// Build and certify in one step; the certificate is never taken on
    /// faith.
    pub fn new(half: usize, adj: Vec<u64>, f: usize) -> Result<Self, Error> {
        assert!(half <= 64);
        assert_eq!(adj.len(), half);
        let piece = BipartitePiece { half, adj, f };
        if !piece.certify() {
            return Err(Error::InvalidCertificate(format!(
                "piece does not satisfy the bound f = {f}"
            )));
        }
        Ok(piece)
    }

    pub fn half_size(&self) -> usize {
        self.half
    }

    pub fn bound(&self) -> usize {
        self.f
    }

    pub fn edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    /// Exhaustive check over all f-subset pairs. Vacuously true when a
    /// half has fewer than f vertices.
    fn certify(&self) -> bool {
        let h = self.half;
        let f = self.f;
        if h < f {
            return true;
        }
        let side0 = subsets_of_size(h, f);
        let side1 = subsets_of_size(h, f);
        for &s in &side0 {
            for &t in &side1 {
                let mut any_edge = false;
                let mut any_non = false;
                for a in bits(s) {
                    let present = (self.adj[a] & t).count_ones() as usize;
                    let absent = f - present;
                    if present > 0 {
                        any_edge = true;
                    }
                    if absent > 0 {
                        any_non = true;
                    }
                    if any_edge && any_non {
                        break;
                    }
                }
                if !(any_edge && any_non) {
                    return false;
                }
            }
        }
        true
    }

    pub fn complement(&self) -> BipartitePiece {
        let mask = if self.half == 64 {
            u64::MAX
        } else {
            (1u64 << self.half) - 1
        };
        BipartitePiece {
            half: self.half,
            adj: self.adj.iter().map(|row| !row & mask).collect(),
            f: self.f,
        }
    }
}

fn bits(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::new();
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let full = 1u64 << n;
    for mask in 0..full {
        if mask.count_ones() as usize == k {
            out.push(mask);
        }
    }
    out
}

/// The combined graph on 2^k vertices plus the pieces that defined it.
#[derive(Clone, Debug)]
pub struct RamseyGraph {
    pub graph: Graph,
    pub pieces: Vec<BipartitePiece>,
    pub k: usize,
}

pub fn bit_at(v: usize, i: usize, k: usize) -> usize {
    v >> (k - 1 - i) & 1
}

/// Label with bit i deleted: the index of v inside its bit-i half.
pub fn half_index(v: usize, i: usize, k: usize) -> usize {
    let p = k - 1 - i;
    ((v >> (p + 1)) << p) | (v & ((1 << p) - 1))
}

/// Edge {u, v} present iff present in piece i, where i is the first
/// (most significant) position at which the labels differ.
pub fn combine(pieces: Vec<BipartitePiece>) -> Result<RamseyGraph, Error> {
    let k = pieces.len();
    if k == 0 || k > 20 {
        return Err(Error::BadInput(format!("need 1..=20 pieces, got {k}")));
    }
    let half = 1usize << (k - 1);
    for p in &pieces {
        if p.half_size() != half {
            return Err(Error::MismatchedSizes {
                left: p.half_size(),
                right: half,
            });
        }
    }
    let n = 1usize << k;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let msb = 63 - ((u ^ v) as u64).leading_zeros() as usize;
            let i = k - 1 - msb;
            let (zero, one) = if bit_at(u, i, k) == 0 { (u, v) } else { (v, u) };
            if pieces[i].edge(half_index(zero, i, k), half_index(one, i, k)) {
                edges.push((u, v));
            }
        }
    }
    Ok(RamseyGraph {
        graph: Graph::from_edges(n, &edges)?,
        pieces,
        k,
    })
}

impl RamseyGraph {
    pub fn n(&self) -> usize {
        1 << self.k
    }

    /// The combined graph of the complemented pieces; equals the graph
    /// complement of self (every vertex pair is governed by some piece).
    pub fn complement(&self) -> Result<RamseyGraph, Error> {
        combine(self.pieces.iter().map(|p| p.complement()).collect())
    }
}

/// Result of the majority-descent search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessResult {
    /// Subsets with equal label prefixes before `bit` and opposite values
    /// at `bit`, each at least 1/2k of its input set.
    Found {
        bit: usize,
        a: Vec<usize>,
        b: Vec<usize>,
    },
    /// Sizes of (A, B) after each round, for inputs too small to sustain
    /// the descent.
    Exhausted { trace: Vec<(usize, usize)> },
}

fn majority_split(set: &[usize], i: usize, k: usize) -> (usize, Vec<usize>, Vec<usize>) {
    let ones: Vec<usize> = set.iter().copied().filter(|&v| bit_at(v, i, k) == 1).collect();
    let zeros: Vec<usize> = set.iter().copied().filter(|&v| bit_at(v, i, k) == 0).collect();
    // ties break toward majority value 0
    if ones.len() > zeros.len() {
        (1, ones, zeros)
    } else {
        (0, zeros, ones)
    }
}

/// The proof's descent over bit positions. At each bit: differing
/// majorities end the search; a large enough minority (count * 2k >= the
/// side's original size) opposite the other side's majority also ends it;
/// otherwise both minorities are discarded and the next bit is examined.
pub fn witness_search(g: &RamseyGraph, a: &[usize], b: &[usize]) -> Result<WitnessResult, Error> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::BadInput("witness search needs nonempty sets".into()));
    }
    if a.iter().any(|v| b.contains(v)) {
        return Err(Error::BadInput("witness search needs disjoint sets".into()));
    }
    let k = g.k;
    let a0 = a.len();
    let b0 = b.len();
    let mut a: Vec<usize> = a.to_vec();
    let mut b: Vec<usize> = b.to_vec();
    let mut trace = Vec::new();
    for i in 0..k {
        let (maj_a, a_major, a_minor) = majority_split(&a, i, k);
        let (maj_b, b_major, b_minor) = majority_split(&b, i, k);
        if maj_a != maj_b {
            return Ok(WitnessResult::Found {
                bit: i,
                a: a_major,
                b: b_major,
            });
        }
        if a_minor.len() * 2 * k >= a0 && !a_minor.is_empty() {
            return Ok(WitnessResult::Found {
                bit: i,
                a: a_minor,
                b: b_major,
            });
        }
        if b_minor.len() * 2 * k >= b0 && !b_minor.is_empty() {
            return Ok(WitnessResult::Found {
                bit: i,
                a: a_major,
                b: b_minor,
            });
        }
        a = a_major;
        b = b_major;
        trace.push((a.len(), b.len()));
    }
    Ok(WitnessResult::Exhausted { trace })
}

/// Exact verification report for a claimed Ramsey bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyReport {
    pub max_independent_set: usize,
    pub max_balanced_biclique: usize,
    pub f: usize,
    /// True iff neither an f-vertex independent set nor a K_{f,f} exists.
    pub holds: bool,
}

/// Exact max independent set and max balanced biclique versus f.
pub fn verify_ramsey(g: &Graph, f: usize) -> Result<RamseyReport, Error> {
    let (mis, _) = oracle::exact_mis(g)?;
    let (biclique, _) = oracle::exact_max_balanced_biclique(g)?;
    Ok(RamseyReport {
        max_independent_set: mis,
        max_balanced_biclique: biclique,
        f,
        holds: mis < f && biclique < f,
    })
}

/// How piece_provider searches for a certified piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieceMode {
    /// Enumerate all bipartite graphs on the halves (tiny sizes only).
    Brute,
    /// Seeded random matrices, each certified exhaustively before use.
    Seeded(u64),
}

/// Produce a certified piece or report failure after bounded retries.
pub fn piece_provider(half: usize, f: usize, mode: PieceMode) -> Result<BipartitePiece, Error> {
    match mode {
        PieceMode::Brute => {
            let cells = half * half;
            if cells > 20 {
                return Err(Error::SizeLimit {
                    what: "piece_provider brute mode",
                    n: cells,
                    max: 20,
                });
            }
            for code in 0u64..(1 << cells) {
                let adj: Vec<u64> = (0..half)
                    .map(|a| (code >> (a * half)) & ((1 << half) - 1))
                    .collect();
                if let Ok(piece) = BipartitePiece::new(half, adj, f) {
                    return Ok(piece);
                }
            }
            Err(Error::PieceVerification {
                half,
                f,
                tries: 1 << cells,
            })
        }
        PieceMode::Seeded(seed) => {
            let tries = 2000;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..tries {
                let adj: Vec<u64> = (0..half)
                    .map(|_| rng.gen::<u64>() & ((1u64 << half) - 1))
                    .collect();
                if let Ok(piece) = BipartitePiece::new(half, adj, f) {
                    return Ok(piece);
                }
            }
            Err(Error::PieceVerification { half, f, tries })
        }
    }
}
