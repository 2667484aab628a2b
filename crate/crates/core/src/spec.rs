//! JSON descriptions of matroids.
//!
//! ```json
//! {"type":"uniform","r":2,"n":6}
//! {"type":"vectors","vectors":[["1","0"],["0","1"],["1","1/2"]]}
//! {"type":"graph","vertices":3,"edges":[[0,1],[1,2],[0,2]]}
//! {"type":"bases","n":3,"r":2,"bases":[[0,1],[0,2],[1,2]]}
//! {"type":"thicken","k":3,"of":{"type":"uniform","r":1,"n":1}}
//! ```
//!
//! `dual`, `extension`, `coextension` and `thicken` nest arbitrarily.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{Kind, Matroid, MultiGraph, VectorConfig};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum MatroidSpec {
    Uniform {
        r: usize,
        n: usize,
    },
    Vectors {
        vectors: Vec<Vec<String>>,
        /// Needed only when the list is empty.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dim: Option<usize>,
    },
    Graph {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Bases {
        n: usize,
        r: usize,
        bases: Vec<Vec<usize>>,
    },
    Dual {
        of: Box<MatroidSpec>,
    },
    Extension {
        of: Box<MatroidSpec>,
    },
    Coextension {
        of: Box<MatroidSpec>,
    },
    Thicken {
        k: usize,
        of: Box<MatroidSpec>,
    },
}

impl MatroidSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("specs always serialize")
    }

    pub fn build(&self) -> Result<Matroid> {
        match self {
            MatroidSpec::Uniform { r, n } => Matroid::uniform(*r, *n),
            MatroidSpec::Vectors { .. } => Matroid::from_vectors(self.vector_config()?),
            MatroidSpec::Graph { .. } => Matroid::graphic(self.graph()?),
            MatroidSpec::Bases { n, r, bases } => {
                if let Some(b) = bases.iter().find(|b| b.len() != *r) {
                    return Err(Error::Input(format!("basis {b:?} does not have size {r}")));
                }
                let m = Matroid::from_bases(*n, bases.clone())?;
                if m.rank() != *r {
                    return Err(Error::Input(format!(
                        "declared rank {r} but bases have size {}",
                        m.rank()
                    )));
                }
                Ok(m)
            }
            MatroidSpec::Dual { of } => Ok(of.build()?.dual()),
            MatroidSpec::Extension { of } => of.build()?.free_extension(),
            MatroidSpec::Coextension { of } => of.build()?.free_coextension(),
            MatroidSpec::Thicken { k, of } => of.build()?.thicken(*k),
        }
    }

    /// The graph behind a `graph` spec.
    pub fn graph(&self) -> Result<MultiGraph> {
        match self {
            MatroidSpec::Graph { vertices, edges } => MultiGraph::new(*vertices, edges.clone()),
            _ => Err(Error::Input(
                "expected a graph ({\"type\":\"graph\",…})".into(),
            )),
        }
    }

    /// The configuration behind a `vectors` spec.
    pub fn vector_config(&self) -> Result<VectorConfig> {
        match self {
            MatroidSpec::Vectors { vectors, dim } => {
                let x = VectorConfig::parse(vectors)?;
                match dim {
                    Some(d) if vectors.is_empty() => VectorConfig::new(*d, Vec::new()),
                    Some(d) if *d != x.dim() => Err(Error::Input(format!(
                        "declared dimension {d} but vectors have length {}",
                        x.dim()
                    ))),
                    _ => Ok(x),
                }
            }
            _ => Err(Error::Input(
                "expected a vector configuration ({\"type\":\"vectors\",…})".into(),
            )),
        }
    }

    pub fn from_graph(g: &MultiGraph) -> Self {
        MatroidSpec::Graph {
            vertices: g.num_vertices(),
            edges: g.edges().to_vec(),
        }
    }

    pub fn from_vectors(x: &VectorConfig) -> Self {
        MatroidSpec::Vectors {
            vectors: x.to_strings(),
            dim: x.is_empty().then_some(x.dim()),
        }
    }

    /// A spec that rebuilds `m` with the same rank on every subset. Named
    /// constructions are kept; minors, sums and relabellings fall back to an
    /// explicit list of bases.
    pub fn describe(m: &Matroid) -> Self {
        match m.kind() {
            Kind::Uniform { k } => MatroidSpec::Uniform { r: *k, n: m.len() },
            Kind::Vectors(x) => Self::from_vectors(x),
            Kind::Graph(g) => Self::from_graph(g),
            Kind::Dual(inner) => MatroidSpec::Dual {
                of: Box::new(Self::describe(inner)),
            },
            Kind::FreeExtension(inner) => MatroidSpec::Extension {
                of: Box::new(Self::describe(inner)),
            },
            Kind::Thicken { base, k } => MatroidSpec::Thicken {
                k: *k,
                of: Box::new(Self::describe(base)),
            },
            Kind::Bases { .. }
            | Kind::Minor { .. }
            | Kind::DirectSum(..)
            | Kind::Relabel { .. } => MatroidSpec::Bases {
                n: m.len(),
                r: m.rank(),
                bases: m.bases().into_iter().map(|b| b.iter().collect()).collect(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_all_forms() {
        let cases = [
            (r#"{"type":"uniform","r":2,"n":6}"#, 6, 2),
            (
                r#"{"type":"vectors","vectors":[["1","0"],["0","1"],["1","1/2"]]}"#,
                3,
                2,
            ),
            (
                r#"{"type":"graph","vertices":3,"edges":[[0,1],[1,2],[0,2]]}"#,
                3,
                2,
            ),
            (
                r#"{"type":"bases","n":3,"r":2,"bases":[[0,1],[0,2],[1,2]]}"#,
                3,
                2,
            ),
            (
                r#"{"type":"dual","of":{"type":"uniform","r":2,"n":6}}"#,
                6,
                4,
            ),
            (
                r#"{"type":"coextension","of":{"type":"uniform","r":2,"n":6}}"#,
                7,
                3,
            ),
            (
                r#"{"type":"extension","of":{"type":"uniform","r":4,"n":6}}"#,
                7,
                4,
            ),
            (
                r#"{"type":"thicken","k":3,"of":{"type":"uniform","r":1,"n":1}}"#,
                3,
                1,
            ),
        ];
        for (text, n, r) in cases {
            let m = MatroidSpec::from_json(text).unwrap().build().unwrap();
            assert_eq!((m.len(), m.rank()), (n, r), "{text}");
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(MatroidSpec::from_json(r#"{"type":"nope"}"#).is_err());
        assert!(MatroidSpec::from_json("not json").is_err());
        let bad = MatroidSpec::from_json(r#"{"type":"uniform","r":7,"n":6}"#).unwrap();
        assert!(bad.build().is_err());
        let bad =
            MatroidSpec::from_json(r#"{"type":"bases","n":3,"r":1,"bases":[[0,1]]}"#).unwrap();
        assert!(bad.build().is_err());
        let bad = MatroidSpec::from_json(r#"{"type":"vectors","vectors":[["x"]]}"#).unwrap();
        assert!(bad.build().is_err());
    }

    #[test]
    fn describe_round_trips() {
        let base = Matroid::graphic(MultiGraph::complete(4)).unwrap();
        let ms = [
            base.clone(),
            base.dual(),
            base.free_coextension().unwrap(),
            base.thicken(2).unwrap(),
            base.delete(0).unwrap().contract(1).unwrap(),
            Matroid::uniform(1, 2).unwrap().direct_sum(&base).unwrap(),
        ];
        for m in ms {
            let spec = MatroidSpec::describe(&m);
            let back = MatroidSpec::from_json(&spec.to_json())
                .unwrap()
                .build()
                .unwrap();
            assert!(m.same_oracle(&back), "{spec:?}");
        }
    }

    #[test]
    fn empty_configuration_keeps_its_dimension() {
        let x = VectorConfig::new(2, Vec::new()).unwrap();
        let spec = MatroidSpec::from_vectors(&x);
        assert_eq!(
            MatroidSpec::from_json(&spec.to_json())
                .unwrap()
                .vector_config()
                .unwrap()
                .dim(),
            2
        );
    }
}
