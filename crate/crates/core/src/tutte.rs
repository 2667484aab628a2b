//! Exact Tutte polynomials by three independent algorithms.
//!
//! * corank–nullity subset sum over all `2^N` subsets,
//! * deletion–contraction, on the multigraph itself for cycle matroids (with
//!   an isomorphism-keyed memo) and on rank-oracle minors otherwise,
//! * summation of `x^{ia(B)} y^{ea(B)}` over bases.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{ElementSet, Matroid, MultiGraph, Provenance};
use crate::poly::BivarPoly;

pub const SUBSET_SUM_LIMIT: usize = 22;
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Exact canonical forms are attempted only up to this many vertices.
const CANON_MAX_VERTICES: usize = 10;
/// Cell-respecting relabellings tried per canonical form before giving up.
const CANON_MAX_PERMS: usize = 5_040;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    SubsetSum,
    DelCon,
    Activities,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Auto,
    SubsetSum,
    DelCon,
    Activities,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub subproblems: u64,
    pub memo_hits: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TutteResult {
    pub polynomial: BivarPoly,
    pub algorithm: Algorithm,
    pub stats: Stats,
}

/// Tutte computation with an explicit node budget for deletion–contraction.
#[derive(Clone, Copy, Debug)]
pub struct TutteEngine {
    pub node_budget: u64,
}

impl Default for TutteEngine {
    fn default() -> Self {
        Self {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

pub fn tutte(m: &Matroid, strategy: Strategy) -> Result<TutteResult> {
    TutteEngine::default().run(m, strategy)
}

pub fn tutte_subset_sum(m: &Matroid) -> Result<TutteResult> {
    TutteEngine::default().subset_sum(m)
}

pub fn tutte_del_con(m: &Matroid) -> Result<TutteResult> {
    TutteEngine::default().del_con(m)
}

pub fn tutte_activities(m: &Matroid) -> Result<TutteResult> {
    TutteEngine::default().activities(m)
}

/// `Σ c_ab (x-1)^a (y-1)^b` from a table of counts.
fn expand_counts(counts: &[Vec<u64>]) -> BivarPoly {
    let binom_row = |n: usize| -> Vec<BigInt> {
        let mut row = vec![BigInt::one()];
        for k in 1..=n {
            let next = &row[k - 1] * BigInt::from(n - k + 1) / BigInt::from(k);
            row.push(next);
        }
        row
    };
    let rows = counts.len();
    let cols = counts.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![vec![BigInt::zero(); cols]; rows];
    for (a, row) in counts.iter().enumerate() {
        let ba = binom_row(a);
        for (b, &c) in row.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let bb = binom_row(b);
            let c = BigInt::from(c);
            // (x-1)^a = Σ C(a,i) x^i (-1)^{a-i}
            for (i, ca) in ba.iter().enumerate() {
                for (j, cb) in bb.iter().enumerate() {
                    let term = &c * ca * cb;
                    if (a - i + b - j) % 2 == 1 {
                        out[i][j] -= term;
                    } else {
                        out[i][j] += term;
                    }
                }
            }
        }
    }
    BivarPoly::new(out)
}

impl TutteEngine {
    pub fn with_budget(node_budget: u64) -> Self {
        Self { node_budget }
    }

    pub fn run(&self, m: &Matroid, strategy: Strategy) -> Result<TutteResult> {
        match strategy {
            Strategy::SubsetSum => self.subset_sum(m),
            Strategy::DelCon => self.del_con(m),
            Strategy::Activities => self.activities(m),
            Strategy::Auto => {
                if m.provenance() == Provenance::Graphic || m.len() > 16 {
                    self.del_con(m)
                } else {
                    self.subset_sum(m)
                }
            }
        }
    }

    pub fn subset_sum(&self, m: &Matroid) -> Result<TutteResult> {
        let n = m.len();
        if n > SUBSET_SUM_LIMIT {
            return Err(Error::TooLarge {
                what: "subset-sum Tutte",
                size: n,
                limit: SUBSET_SUM_LIMIT,
                hint: "; use deletion-contraction instead",
            });
        }
        let r = m.rank();
        let total: u64 = 1 << n;
        let chunk: u64 = 1 << 10;
        // counts[r - rk(A)][|A| - rk(A)]
        let counts = (0..total.div_ceil(chunk))
            .into_par_iter()
            .map(|c| {
                let mut local = vec![vec![0u64; n - r + 1]; r + 1];
                for s in c * chunk..((c + 1) * chunk).min(total) {
                    let s = ElementSet(s);
                    let rk = m.rank_unchecked(s);
                    local[r - rk][s.len() - rk] += 1;
                }
                local
            })
            .reduce(
                || vec![vec![0u64; n - r + 1]; r + 1],
                |mut a, b| {
                    for (ra, rb) in a.iter_mut().zip(b) {
                        for (x, y) in ra.iter_mut().zip(rb) {
                            *x += y;
                        }
                    }
                    a
                },
            );
        Ok(TutteResult {
            polynomial: expand_counts(&counts),
            algorithm: Algorithm::SubsetSum,
            stats: Stats {
                subproblems: total,
                memo_hits: 0,
            },
        })
    }

    pub fn activities(&self, m: &Matroid) -> Result<TutteResult> {
        let acts = m.bases_with_activities()?;
        let mut counts: HashMap<(usize, usize), u64> = HashMap::new();
        for a in &acts {
            *counts
                .entry((a.internal_activity, a.external_activity))
                .or_default() += 1;
        }
        let poly = counts
            .into_iter()
            .fold(BivarPoly::zero(), |acc, ((i, j), c)| {
                &acc + &BivarPoly::monomial(BigInt::from(c), i, j)
            });
        Ok(TutteResult {
            polynomial: poly,
            algorithm: Algorithm::Activities,
            stats: Stats {
                subproblems: acts.len() as u64,
                memo_hits: 0,
            },
        })
    }

    pub fn del_con(&self, m: &Matroid) -> Result<TutteResult> {
        let mut stats = Stats::default();
        let polynomial = match m.as_graph() {
            Some(g) => {
                let mut solver = GraphDelCon {
                    budget: self.node_budget,
                    stats: &mut stats,
                    memo: HashMap::new(),
                };
                solver.solve(g.clone())?
            }
            None => {
                let mut solver = OracleDelCon {
                    m,
                    budget: self.node_budget,
                    stats: &mut stats,
                };
                let full = m.ground();
                solver.solve(full, ElementSet::EMPTY)?
            }
        };
        Ok(TutteResult {
            polynomial,
            algorithm: Algorithm::DelCon,
            stats,
        })
    }
}

struct GraphDelCon<'a> {
    budget: u64,
    stats: &'a mut Stats,
    memo: HashMap<crate::matroid::CanonicalGraph, BivarPoly>,
}

impl GraphDelCon<'_> {
    fn tick(&mut self) -> Result<()> {
        self.stats.subproblems += 1;
        if self.stats.subproblems > self.budget {
            Err(Error::Budget {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    fn solve(&mut self, g: MultiGraph) -> Result<BivarPoly> {
        self.tick()?;
        // loops contribute y each
        let loops: Vec<usize> = (0..g.num_edges()).filter(|&e| g.is_loop(e)).collect();
        let mut g = g;
        for &e in loops.iter().rev() {
            g = g.delete_edge(e);
        }
        // bridges contribute x each; contracting one leaves the others bridges
        let bridges = g.bridges();
        for &e in bridges.iter().rev() {
            g = g.contract_edge(e);
        }
        let factor = BivarPoly::one().shift_degrees(bridges.len(), loops.len());
        if g.num_edges() == 0 {
            return Ok(factor);
        }
        let g = g.without_isolated();
        let parts = g.edge_components();
        if parts.len() > 1 {
            let mut acc = factor;
            for part in parts {
                acc = &acc * &self.solve(part)?;
            }
            return Ok(acc);
        }

        let key = g.canonical_form(CANON_MAX_VERTICES, CANON_MAX_PERMS);
        if let Some(k) = &key {
            if let Some(hit) = self.memo.get(k) {
                self.stats.memo_hits += 1;
                return Ok(&factor * hit);
            }
        }
        // edge incident to the highest-degree vertex pair
        let e = (0..g.num_edges())
            .max_by_key(|&e| {
                let (u, v) = g.edges()[e];
                (g.degree(u) + g.degree(v), std::cmp::Reverse(e))
            })
            .expect("at least one edge");
        let deleted = self.solve(g.delete_edge(e))?;
        let contracted = self.solve(g.contract_edge(e))?;
        let t = &deleted + &contracted;
        if let Some(k) = key {
            self.memo.insert(k, t.clone());
        }
        Ok(&factor * &t)
    }
}

/// Deletion–contraction on the minor `M ∖ D / C` of a fixed matroid, where
/// the minor's ground set is `rest` and `contracted` is `C`.
struct OracleDelCon<'a> {
    m: &'a Matroid,
    budget: u64,
    stats: &'a mut Stats,
}

impl OracleDelCon<'_> {
    fn solve(&mut self, rest: ElementSet, contracted: ElementSet) -> Result<BivarPoly> {
        self.stats.subproblems += 1;
        if self.stats.subproblems > self.budget {
            return Err(Error::Budget {
                budget: self.budget,
            });
        }
        let rk = |s: ElementSet| self.m.rank_unchecked(s);
        let rc = rk(contracted);
        let full = rk(rest.union(contracted));
        let mut loops = ElementSet::EMPTY;
        let mut coloops = ElementSet::EMPTY;
        for e in rest.iter() {
            if rk(contracted.with(e)) == rc {
                loops = loops.with(e);
            } else if rk(rest.without(e).union(contracted)) < full {
                coloops = coloops.with(e);
            }
        }
        let factor = BivarPoly::one().shift_degrees(coloops.len(), loops.len());
        let rest = rest.difference(loops).difference(coloops);
        let contracted = contracted.union(coloops);
        let Some(e) = rest.max() else {
            return Ok(factor);
        };
        let deleted = self.solve(rest.without(e), contracted)?;
        let contracted = self.solve(rest.without(e), contracted.with(e))?;
        Ok(&factor * &(&deleted + &contracted))
    }
}
