use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::FiniteLattice;

/// Poset input: either a full order matrix or a list of cover pairs
/// `[lower, upper]`, which the loader closes transitively.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PosetJson {
    Matrix {
        size: usize,
        leq: Vec<Vec<bool>>,
    },
    Covers {
        #[serde(default)]
        size: Option<usize>,
        covers: Vec<[usize; 2]>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
}

impl PosetJson {
    pub fn parse(text: &str) -> Result<FiniteLattice> {
        let poset: PosetJson = serde_json::from_str(text)?;
        poset.into_lattice()
    }

    pub fn into_lattice(self) -> Result<FiniteLattice> {
        match self {
            PosetJson::Matrix { size, leq } => {
                if leq.len() != size || leq.iter().any(|r| r.len() != size) {
                    return Err(Error::InvalidArgument(format!(
                        "order matrix is not {size}x{size}"
                    )));
                }
                FiniteLattice::unlabeled(size, |a, b| leq[a][b])
            }
            PosetJson::Covers {
                size,
                covers,
                labels,
            } => {
                let inferred = covers.iter().flatten().map(|&i| i + 1).max().unwrap_or(1);
                let n = size.unwrap_or(inferred);
                if inferred > n {
                    return Err(Error::InvalidArgument(format!(
                        "cover pair index {} out of range for size {n}",
                        inferred - 1
                    )));
                }
                if n > crate::caps::HARD_MAX_LATTICE {
                    return Err(Error::limit(
                        "lattice size",
                        n,
                        crate::caps::HARD_MAX_LATTICE,
                    ));
                }
                let mut leq = vec![vec![false; n]; n];
                for (i, row) in leq.iter_mut().enumerate() {
                    row[i] = true;
                }
                for [a, b] in covers {
                    leq[a][b] = true;
                }
                for k in 0..n {
                    for i in 0..n {
                        if leq[i][k] {
                            for j in 0..n {
                                if leq[k][j] {
                                    leq[i][j] = true;
                                }
                            }
                        }
                    }
                }
                let labels = match labels {
                    Some(l) if l.len() == n => l,
                    Some(_) => {
                        return Err(Error::InvalidArgument(
                            "label count does not match size".into(),
                        ))
                    }
                    None => (0..n).map(|i| i.to_string()).collect(),
                };
                FiniteLattice::new(labels, |a, b| leq[a][b])
            }
        }
    }

    pub fn from_lattice(lattice: &FiniteLattice) -> Self {
        PosetJson::Covers {
            size: Some(lattice.size()),
            covers: lattice.cover_pairs().map(|(a, b)| [a, b]).collect(),
            labels: Some(lattice.labels().to_vec()),
        }
    }
}

/// Hasse diagram in Graphviz DOT: one node per element, one edge per cover,
/// elements grouped by rank with the bottom at rank 0.
pub fn to_dot(lattice: &FiniteLattice, name: &str) -> String {
    let mut out = String::new();
    let ranks = lattice.ranks();
    writeln!(out, "digraph \"{}\" {{", escape(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    writeln!(out, "  edge [arrowhead=none];").unwrap();
    for x in 0..lattice.size() {
        writeln!(out, "  n{x} [label=\"{}\"];", escape(lattice.label(x))).unwrap();
    }
    let height = ranks.iter().copied().max().unwrap_or(0);
    for r in 0..=height {
        let nodes: Vec<String> = (0..lattice.size())
            .filter(|&x| ranks[x] == r)
            .map(|x| format!("n{x};"))
            .collect();
        writeln!(out, "  {{ rank=same; {} }} // rank {r}", nodes.join(" ")).unwrap();
    }
    for (b, a) in lattice.cover_pairs() {
        writeln!(out, "  n{b} -> n{a};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::super::*;

    #[test]
    fn loads_both_formats() {
        let m = r#"{ "size": 3, "leq": [[true,true,true],[false,true,true],[false,false,true]] }"#;
        let l = PosetJson::parse(m).unwrap();
        assert_eq!((l.bottom(), l.top()), (0, 2));
        let c = r#"{ "covers": [[0,1],[0,2],[0,3],[1,4],[2,4],[3,4]] }"#;
        let l = PosetJson::parse(c).unwrap();
        assert!(are_isomorphic(&l, &m3(), 64).unwrap().is_some());
        assert!(l.leq(0, 4));
    }

    #[test]
    fn loader_reports_non_lattices() {
        let vee = r#"{ "covers": [[0,1],[0,2]] }"#;
        assert!(PosetJson::parse(vee).is_err());
        let cyclic = r#"{ "covers": [[0,1],[1,0]] }"#;
        assert!(PosetJson::parse(cyclic).is_err());
    }

    #[test]
    fn cover_list_round_trip() {
        let l = centered_hexagon();
        let text = serde_json::to_string(&PosetJson::from_lattice(&l)).unwrap();
        let back = PosetJson::parse(&text).unwrap();
        assert_eq!(back.labels(), l.labels());
        assert!((0..7).all(|a| (0..7).all(|b| back.leq(a, b) == l.leq(a, b))));
    }

    #[test]
    fn dot_has_nodes_and_cover_edges() {
        let dot = to_dot(&m3(), "M3");
        assert_eq!(dot.matches("[label=").count(), 5);
        assert_eq!(dot.matches(" -> ").count(), 6);
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("{ rank=same; n0; } // rank 0"));
    }
}
