//! A fixed test corpus: uniform matroids, small graphs and all their minors,
//! and seeded random rational configurations. Everything here is realizable
//! over ℚ.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matroid::{CanonicalGraph, Matroid, MultiGraph, VectorConfig};

pub const DEFAULT_SEED: u64 = 0x6d61_7472_6f69_6400;

#[derive(Clone, Debug)]
pub enum Source {
    Uniform { r: usize, n: usize },
    Graph(MultiGraph),
    Vectors(VectorConfig),
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub source: Source,
    pub matroid: Matroid,
}

impl CorpusEntry {
    pub fn graph(&self) -> Option<&MultiGraph> {
        match &self.source {
            Source::Graph(g) => Some(g),
            _ => None,
        }
    }

    pub fn vectors(&self) -> Option<&VectorConfig> {
        match &self.source {
            Source::Vectors(x) => Some(x),
            _ => None,
        }
    }
}

/// `U_{r,n}` for `0 ≤ r ≤ n ≤ max_n`.
pub fn uniforms(max_n: usize) -> Vec<CorpusEntry> {
    (0..=max_n)
        .flat_map(|n| (0..=n).map(move |r| (r, n)))
        .map(|(r, n)| CorpusEntry {
            name: format!("U({r},{n})"),
            source: Source::Uniform { r, n },
            matroid: Matroid::uniform(r, n).expect("r ≤ n"),
        })
        .collect()
}

fn canonical(g: &MultiGraph) -> CanonicalGraph {
    g.canonical_form(usize::MAX, usize::MAX)
        .expect("unbounded canonical form")
}

/// Simple graphs on `1..=max_vertices` vertices, one per isomorphism class.
pub fn simple_graphs(max_vertices: usize) -> Vec<MultiGraph> {
    let mut seen = BTreeSet::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..1 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = MultiGraph::new(n, edges).expect("valid labels");
            seen.insert(canonical(&g));
        }
    }
    seen.iter().map(CanonicalGraph::to_graph).collect()
}

/// Every multigraph obtainable from the given graphs by deleting and
/// contracting edges, one per isomorphism class. Contractions supply the
/// loops and parallel edges.
pub fn minor_closure(graphs: &[MultiGraph]) -> Vec<MultiGraph> {
    let mut seen: BTreeSet<CanonicalGraph> = graphs.iter().map(canonical).collect();
    let mut frontier: Vec<CanonicalGraph> = seen.iter().cloned().collect();
    while let Some(c) = frontier.pop() {
        let g = c.to_graph();
        for e in 0..g.num_edges() {
            for minor in [g.delete_edge(e), g.contract_edge(e)] {
                let key = canonical(&minor);
                if seen.insert(key.clone()) {
                    frontier.push(key);
                }
            }
        }
    }
    seen.iter().map(CanonicalGraph::to_graph).collect()
}

/// Random spanning configurations with `r ≤ max_r` and `r ≤ N ≤ max_n`.
/// Entries are small integers or halves, zero about a tenth of the time, and
/// occasionally a vector repeats an earlier one so parallel elements appear.
pub fn random_configs(seed: u64, count: usize, max_n: usize, max_r: usize) -> Vec<VectorConfig> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let r = rng.gen_range(1..=max_r);
        let n = rng.gen_range(r..=max_n.max(r));
        let mut vectors: Vec<Vec<BigRational>> = Vec::with_capacity(n);
        for _ in 0..n {
            if !vectors.is_empty() && rng.gen_bool(0.1) {
                let i = rng.gen_range(0..vectors.len());
                vectors.push(vectors[i].clone());
                continue;
            }
            let v = (0..r)
                .map(|_| {
                    if rng.gen_bool(0.1) {
                        return BigRational::from_integer(BigInt::from(0));
                    }
                    let num = rng.gen_range(-4i64..=4);
                    let den = if rng.gen_bool(0.2) { 2 } else { 1 };
                    BigRational::new(num.into(), BigInt::from(den))
                })
                .collect();
            vectors.push(v);
        }
        let x = VectorConfig::new(r, vectors).expect("consistent dimensions");
        if x.full_rank() {
            out.push(x);
        }
    }
    out
}

fn graph_entries(graphs: Vec<MultiGraph>) -> Vec<CorpusEntry> {
    graphs
        .into_iter()
        .map(|g| CorpusEntry {
            name: format!("graph{:?}", g.edges()),
            matroid: Matroid::graphic(g.clone()).expect("small graph"),
            source: Source::Graph(g),
        })
        .collect()
}

fn vector_entries(configs: Vec<VectorConfig>) -> Vec<CorpusEntry> {
    configs
        .into_iter()
        .map(|x| CorpusEntry {
            name: format!("vectors{:?}", x.to_strings()),
            matroid: Matroid::from_vectors(x.clone()).expect("small configuration"),
            source: Source::Vectors(x),
        })
        .collect()
}

/// Uniform matroids up to `U_{4,8}` (every `U_{r,n}` with `n ≤ 8` and
/// `r ≤ 4`), all graphs on at most five vertices with all their minors, and
/// 50 seeded configurations with `N ≤ 8`, `r ≤ 3`.
pub fn builtin() -> Vec<CorpusEntry> {
    let mut out: Vec<CorpusEntry> = uniforms(8)
        .into_iter()
        .filter(|e| matches!(e.source, Source::Uniform { r, .. } if r <= 4))
        .collect();
    out.extend(graph_entries(minor_closure(&simple_graphs(5))));
    out.extend(vector_entries(random_configs(DEFAULT_SEED, 50, 8, 3)));
    out
}

/// The graph part of [`builtin`].
pub fn builtin_graphs() -> Vec<MultiGraph> {
    minor_closure(&simple_graphs(5))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts_match_known_enumerations() {
        // Non-isomorphic simple graphs on 1..=5 vertices: 1, 2, 4, 11, 34.
        assert_eq!(simple_graphs(5).len(), 1 + 2 + 4 + 11 + 34);
    }

    #[test]
    fn minors_add_multigraphs() {
        let all = builtin_graphs();
        assert!(all.len() > 52);
        assert!(all.iter().any(|g| (0..g.num_edges()).any(|e| g.is_loop(e))));
    }

    #[test]
    fn random_configs_are_reproducible_and_spanning() {
        let a = random_configs(7, 20, 8, 3);
        let b = random_configs(7, 20, 8, 3);
        assert_eq!(a, b);
        assert!(a
            .iter()
            .all(|x| x.full_rank() && x.len() <= 8 && x.dim() <= 3));
    }

    #[test]
    fn builtin_contents() {
        let c = builtin();
        assert!(c.iter().any(|e| e.name == "U(4,8)"));
        assert!(!c.iter().any(|e| e.name == "U(5,8)"));
        assert_eq!(c.iter().filter(|e| e.vectors().is_some()).count(), 50);
    }
}
