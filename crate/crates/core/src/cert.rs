//! Portable JSON certificates and the standalone verifier.
//!
//! A certificate records the problem, which side of a paired result it is,
//! the claimed value, a witness, and a hash of the canonical serialization
//! of the input. `verify` recomputes everything from graph + witness.

use crate::graph::{Digraph, Graph};
use crate::set_system::SetSystem;
use crate::solution::{
    AcyclicSet, CliqueSet, Coloring, CoverSolution, HitSolution, IndependentSet, MinorModel,
    PathCover, SpanningForestCert, Tour, VertexPath,
};
use crate::Error;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// The witness payload of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Tour { order: Vec<usize> },
    VertexSet { vertices: Vec<usize> },
    Path { vertices: Vec<usize> },
    Paths { paths: Vec<Vec<usize>> },
    Coloring { colors: Vec<usize> },
    Minor { branch: Vec<Option<usize>>, t: usize },
    Forest { parent: Vec<Option<usize>> },
    IndexSet { indices: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub problem: String,
    pub side: String,
    pub value: u64,
    pub witness: Witness,
    pub input_hash: String,
}

/// The input a certificate refers to.
#[derive(Clone, Copy, Debug)]
pub enum Input<'a> {
    Graph(&'a Graph),
    Digraph(&'a Digraph),
    SetSystem(&'a SetSystem),
}

impl Input<'_> {
    pub fn serialize(&self) -> String {
        match self {
            Input::Graph(g) => g.serialize(),
            Input::Digraph(d) => d.serialize(),
            Input::SetSystem(s) => s.serialize(),
        }
    }
}

/// SHA-256 of the canonical text serialization, hex encoded.
pub fn input_hash(input: &Input) -> String {
    let mut hasher = Sha256::new();
    hasher.update(input.serialize().as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn reject<T>(msg: impl Into<String>) -> Result<T, Error> {
    Err(Error::InvalidCertificate(msg.into()))
}

impl Certificate {
    pub fn new(problem: &str, side: &str, value: u64, witness: Witness, input: &Input) -> Self {
        Certificate {
            problem: problem.into(),
            side: side.into(),
            value,
            witness,
            input_hash: input_hash(input),
        }
    }
}

/// Recompute validity and value of a certificate against its input.
pub fn verify(cert: &Certificate, input: &Input) -> Result<(), Error> {
    if cert.input_hash != input_hash(input) {
        return reject("input hash mismatch");
    }
    match (cert.problem.as_str(), &cert.witness, input) {
        ("tsp12", Witness::Tour { order }, Input::Graph(g)) => {
            let tour = Tour {
                order: order.clone(),
                length: cert.value,
            };
            tour.check(g)
        }
        ("asym-tsp12", Witness::Tour { order }, Input::Digraph(d)) => {
            let tour = Tour {
                order: order.clone(),
                length: cert.value,
            };
            tour.check_directed(d)
        }
        ("independent-set", Witness::VertexSet { vertices }, Input::Graph(g)) => {
            let is = IndependentSet {
                vertices: vertices.clone(),
            };
            is.check(g)?;
            expect_value(cert, is.size() as u64)
        }
        ("clique", Witness::VertexSet { vertices }, Input::Graph(g)) => {
            let c = CliqueSet {
                vertices: vertices.clone(),
            };
            c.check(g)?;
            expect_value(cert, c.vertices.len() as u64)
        }
        ("path-cover", Witness::Paths { paths }, Input::Graph(g)) => {
            let pc = PathCover {
                paths: paths.clone(),
            };
            pc.check(g)?;
            expect_value(cert, pc.num_paths() as u64)
        }
        ("min-leaf-spanning", Witness::Forest { parent }, Input::Graph(g)) => {
            let cert_forest = SpanningForestCert {
                parent: parent.clone(),
                leaf_count: cert.value as usize,
            };
            cert_forest.check(g)
        }
        ("coloring", Witness::Coloring { colors }, Input::Graph(g)) => {
            let coloring = Coloring {
                color: colors.clone(),
                num_colors: cert.value as usize,
            };
            coloring.check(g)
        }
        ("longest-path", Witness::Path { vertices }, Input::Graph(g)) => {
            let p = VertexPath {
                vertices: vertices.clone(),
            };
            p.check(g)?;
            expect_value(cert, p.len() as u64)
        }
        ("longest-path", Witness::Path { vertices }, Input::Digraph(d)) => {
            let p = VertexPath {
                vertices: vertices.clone(),
            };
            p.check_directed(d)?;
            expect_value(cert, p.len() as u64)
        }
        ("acyclic-set", Witness::VertexSet { vertices }, Input::Digraph(d)) => {
            let a = AcyclicSet {
                vertices: vertices.clone(),
            };
            a.check(d)?;
            expect_value(cert, a.size() as u64)
        }
        ("clique-minor", Witness::Minor { branch, t }, Input::Graph(g)) => {
            let model = MinorModel {
                branch: branch.clone(),
                t: *t,
            };
            model.check(g)?;
            expect_value(cert, *t as u64)
        }
        ("set-cover", Witness::IndexSet { indices }, Input::SetSystem(s)) => {
            let sol = CoverSolution {
                sets: indices.clone(),
            };
            sol.check(s)?;
            expect_value(cert, sol.size() as u64)
        }
        ("hitting-set", Witness::IndexSet { indices }, Input::SetSystem(s)) => {
            let sol = HitSolution {
                elements: indices.clone(),
            };
            sol.check(s)?;
            expect_value(cert, sol.size() as u64)
        }
        (problem, _, _) => reject(format!(
            "problem '{problem}' does not match the witness kind or input type"
        )),
    }
    .map_err(|e| match e {
        Error::InvalidSolution(msg) => Error::InvalidCertificate(msg),
        other => other,
    })
}

fn expect_value(cert: &Certificate, actual: u64) -> Result<(), Error> {
    if cert.value != actual {
        return reject(format!("claimed value {} but witness has {actual}", cert.value));
    }
    Ok(())
}

/// The exact threshold comparison behind a dispatch decision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Threshold {
    /// Human-readable rule, with the exact integers that were compared.
    pub rule: String,
    /// The eps that parameterized the rule, as an exact rational.
    pub eps: String,
    /// Whether the rule held (which selects the first-named side).
    pub holds: bool,
}

/// Tagged either-result of a dispatch operation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairedOutcome {
    /// Which problem's solution is returned.
    pub side: String,
    pub payload: Certificate,
    pub threshold: Threshold,
    /// Both raw certificates, for audit.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub both_raw: Option<Box<(Certificate, Certificate)>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_verify() {
        let g = Graph::cycle(4);
        let input = Input::Graph(&g);
        let cert = Certificate::new(
            "tsp12",
            "tour",
            4,
            Witness::Tour {
                order: vec![0, 1, 2, 3],
            },
            &input,
        );
        verify(&cert, &input).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        verify(&back, &input).unwrap();
    }

    #[test]
    fn hash_mismatch_rejected() {
        let g = Graph::cycle(4);
        let cert = Certificate::new(
            "tsp12",
            "tour",
            4,
            Witness::Tour {
                order: vec![0, 1, 2, 3],
            },
            &Input::Graph(&g),
        );
        let other = Graph::complete(4);
        assert!(verify(&cert, &Input::Graph(&other)).is_err());
    }

    #[test]
    fn wrong_value_rejected() {
        let g = Graph::path(3);
        let input = Input::Graph(&g);
        let cert = Certificate::new(
            "independent-set",
            "independent-set",
            3,
            Witness::VertexSet {
                vertices: vec![0, 2],
            },
            &input,
        );
        assert!(verify(&cert, &input).is_err());
    }

    #[test]
    fn witness_kind_mismatch_rejected() {
        let g = Graph::path(3);
        let input = Input::Graph(&g);
        let cert = Certificate::new(
            "coloring",
            "coloring",
            2,
            Witness::Tour {
                order: vec![0, 1, 2],
            },
            &input,
        );
        assert!(verify(&cert, &input).is_err());
    }
}
