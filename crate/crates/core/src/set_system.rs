//! Bipartite incidence structures (sets x elements) for the set cover and
//! hitting set problems.

use crate::{Error, ParseError};

/// A family of sets over a ground set of elements, stored as per-set sorted
/// element lists (one side of a bipartite incidence graph).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    num_elements: usize,
    inc: Vec<Vec<usize>>,
}

impl SetSystem {
    pub fn new(num_sets: usize, num_elements: usize) -> Self {
        SetSystem {
            num_elements,
            inc: vec![Vec::new(); num_sets],
        }
    }

    pub fn from_incidence(num_elements: usize, inc: Vec<Vec<usize>>) -> Result<Self, Error> {
        let mut sys = SetSystem { num_elements, inc };
        for list in &mut sys.inc {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::BadInput("duplicate incidence".into()));
            }
            if let Some(&last) = list.last() {
                if last >= num_elements {
                    return Err(Error::BadInput(format!(
                        "element {last} out of range 0..{num_elements}"
                    )));
                }
            }
        }
        Ok(sys)
    }

    pub fn num_sets(&self) -> usize {
        self.inc.len()
    }

    pub fn num_elements(&self) -> usize {
        self.num_elements
    }

    pub fn set(&self, i: usize) -> &[usize] {
        &self.inc[i]
    }

    pub fn contains(&self, set: usize, element: usize) -> bool {
        self.inc[set].binary_search(&element).is_ok()
    }

    /// Sum of all set sizes.
    pub fn total_size(&self) -> usize {
        self.inc.iter().map(Vec::len).sum()
    }

    pub fn transpose(&self) -> SetSystem {
        let mut inc = vec![Vec::new(); self.num_elements];
        for (s, list) in self.inc.iter().enumerate() {
            for &e in list {
                inc[e].push(s);
            }
        }
        SetSystem {
            num_elements: self.num_sets(),
            inc,
        }
    }

    /// Disjoint union: sets concatenated, the second system's elements
    /// offset by `self.num_elements()`.
    pub fn disjoint_union(&self, other: &SetSystem) -> SetSystem {
        let off = self.num_elements;
        let mut inc = self.inc.clone();
        inc.extend(
            other
                .inc
                .iter()
                .map(|list| list.iter().map(|&e| e + off).collect::<Vec<_>>()),
        );
        SetSystem {
            num_elements: self.num_elements + other.num_elements,
            inc,
        }
    }

    /// Text format: first line `num_sets num_elements`, then line i lists
    /// the elements of set i (possibly empty).
    pub fn parse(text: &str) -> Result<SetSystem, ParseError> {
        let mut lines = text.lines().enumerate();
        let (num_sets, num_elements) = loop {
            match lines.next() {
                Some((idx, raw)) => {
                    let body = raw.trim();
                    if body.is_empty() {
                        continue;
                    }
                    let toks: Vec<&str> = body.split_whitespace().collect();
                    if toks.len() != 2 {
                        return Err(ParseError::Malformed {
                            line: idx + 1,
                            msg: "expected 'num_sets num_elements'".into(),
                        });
                    }
                    let parse = |s: &str| -> Result<usize, ParseError> {
                        s.parse().map_err(|_| ParseError::Malformed {
                            line: idx + 1,
                            msg: format!("bad count '{s}'"),
                        })
                    };
                    break (parse(toks[0])?, parse(toks[1])?);
                }
                None => {
                    return Err(ParseError::Malformed {
                        line: 1,
                        msg: "missing header".into(),
                    })
                }
            }
        };
        let mut inc = Vec::with_capacity(num_sets);
        for _ in 0..num_sets {
            let (idx, raw) = lines.next().ok_or(ParseError::Malformed {
                line: 0,
                msg: format!("expected {num_sets} set lines"),
            })?;
            let line = idx + 1;
            let mut list = Vec::new();
            for tok in raw.split_whitespace() {
                let e: usize = tok.parse().map_err(|_| ParseError::Malformed {
                    line,
                    msg: format!("bad element '{tok}'"),
                })?;
                if e >= num_elements {
                    return Err(ParseError::OutOfRange {
                        line,
                        id: e,
                        n: num_elements,
                    });
                }
                list.push(e);
            }
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(ParseError::Malformed {
                    line,
                    msg: "duplicate incidence".into(),
                });
            }
            inc.push(list);
        }
        Ok(SetSystem { num_elements, inc })
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.num_sets(), self.num_elements);
        for list in &self.inc {
            let words: Vec<String> = list.iter().map(|e| e.to_string()).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
        out
    }
}
