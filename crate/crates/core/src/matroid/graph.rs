//! Multigraphs with loops and parallel edges, the source of cycle matroids.

use std::collections::{BTreeMap, VecDeque};

use super::set::ElementSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// An undirected multigraph; edge `i` is `edges[i]`, and edge order is the
/// ground order of the cycle matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    components: usize,
}

impl MultiGraph {
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges
            .iter()
            .find(|&&(u, v)| u >= num_vertices || v >= num_vertices)
        {
            return Err(Error::Input(format!(
                "edge ({u}, {v}) refers to a vertex outside 0..{num_vertices}"
            )));
        }
        let mut uf = UnionFind::new(num_vertices);
        let merges = edges.iter().filter(|&&(u, v)| uf.union(u, v)).count();
        Ok(Self {
            num_vertices,
            edges,
            components: num_vertices - merges,
        })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::new(n, edges).expect("valid complete graph")
    }

    pub fn cycle(n: usize) -> Self {
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, edges).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, edges).expect("valid path")
    }

    /// Parse lines `u v`; blank lines and `#` comments are skipped. The vertex
    /// count is one more than the largest label.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("expected two vertex labels, found {}", toks.len()),
                });
            }
            let parse = |t: &str| {
                t.parse::<usize>().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("{t:?} is not a non-negative integer"),
                })
            };
            edges.push((parse(toks[0])?, parse(toks[1])?));
        }
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Self::new(n, edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of connected components, isolated vertices included.
    pub fn components(&self) -> usize {
        self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components <= 1
    }

    /// Rank of the cycle matroid: `|V| - κ(G)`.
    pub fn rank(&self) -> usize {
        self.num_vertices - self.components
    }

    /// Component count by breadth-first search, independent of union-find.
    pub fn components_bfs(&self) -> usize {
        let mut adj = vec![Vec::new(); self.num_vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.num_vertices];
        let mut count = 0;
        for s in 0..self.num_vertices {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    /// Rank of an edge subset in the cycle matroid: the size of a spanning
    /// forest of those edges.
    pub fn edge_rank(&self, subset: ElementSet) -> usize {
        let mut uf = UnionFind::new(self.num_vertices);
        subset
            .iter()
            .filter(|&e| {
                let (u, v) = self.edges[e];
                uf.union(u, v)
            })
            .count()
    }

    /// Whether the spanning subgraph with the given edges is connected.
    pub fn spans_connected(&self, subset: ElementSet) -> bool {
        self.edge_rank(subset) + 1 >= self.num_vertices
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn delete_edge(&self, e: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(e);
        Self::new(self.num_vertices, edges).expect("deletion keeps vertices valid")
    }

    /// Contract edge `e`: its endpoints merge into the smaller label and the
    /// larger label is removed (higher labels shift down). A contracted loop
    /// is simply deleted.
    pub fn contract_edge(&self, e: usize) -> Self {
        let (a, b) = self.edges[e];
        if a == b {
            return self.delete_edge(e);
        }
        let (keep, gone) = (a.min(b), a.max(b));
        let relabel = |x: usize| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, &(u, v))| (relabel(u), relabel(v)))
            .collect();
        Self::new(self.num_vertices - 1, edges).expect("contraction keeps vertices valid")
    }

    /// Edges that are bridges (coloops of the cycle matroid).
    pub fn bridges(&self) -> Vec<usize> {
        let full = ElementSet::full(self.edges.len());
        let r = self.edge_rank(full);
        (0..self.edges.len())
            .filter(|&e| !self.is_loop(e) && self.edge_rank(full.without(e)) < r)
            .collect()
    }

    /// Drop isolated vertices and relabel the rest in increasing order.
    pub fn without_isolated(&self) -> Self {
        let mut used = vec![false; self.num_vertices];
        for &(u, v) in &self.edges {
            used[u] = true;
            used[v] = true;
        }
        let mut map = vec![usize::MAX; self.num_vertices];
        let mut next = 0;
        for (v, &u) in used.iter().enumerate() {
            if u {
                map[v] = next;
                next += 1;
            }
        }
        let edges = self.edges.iter().map(|&(u, v)| (map[u], map[v])).collect();
        Self::new(next, edges).expect("relabelling keeps vertices valid")
    }

    /// Split into connected components that carry at least one edge.
    pub fn edge_components(&self) -> Vec<MultiGraph> {
        let mut uf = UnionFind::new(self.num_vertices);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        let mut groups: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for &(u, v) in &self.edges {
            groups.entry(uf.find(u)).or_default().push((u, v));
        }
        groups
            .into_values()
            .map(|edges| {
                Self::new(self.num_vertices, edges)
                    .expect("component edges are valid")
                    .without_isolated()
            })
            .collect()
    }

    /// Disjoint union, vertices of `other` shifted past ours.
    pub fn disjoint_union(&self, other: &MultiGraph) -> Self {
        let off = self.num_vertices;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)))
            .collect();
        Self::new(off + other.num_vertices, edges).expect("valid union")
    }

    /// Canonical form up to isomorphism, ignoring edge labels: the vertices
    /// are split by iterated degree refinement and the lexicographically
    /// smallest sorted edge list over all refinement-respecting relabellings
    /// is returned. `None` when there are more than `max_vertices` vertices or
    /// more than `max_perms` candidate relabellings.
    pub fn canonical_form(&self, max_vertices: usize, max_perms: usize) -> Option<CanonicalGraph> {
        let n = self.num_vertices;
        if n > max_vertices {
            return None;
        }
        let mut mult = vec![vec![0u16; n]; n];
        for &(u, v) in &self.edges {
            mult[u][v] += 1;
            if u != v {
                mult[v][u] += 1;
            }
        }
        let colors = refine_colors(&mult);
        let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            cells.entry(c).or_default().push(v);
        }
        let cells: Vec<Vec<usize>> = cells.into_values().collect();
        let mut count: usize = 1;
        for c in &cells {
            for k in 2..=c.len() {
                count = count.checked_mul(k)?;
            }
        }
        if count > max_perms {
            return None;
        }

        let mut best: Option<Vec<(u8, u8)>> = None;
        let mut order: Vec<Vec<usize>> = cells.clone();
        let mut label = vec![0usize; n];
        let mut visit = |order: &[Vec<usize>]| {
            let mut next = 0;
            for cell in order {
                for &v in cell {
                    label[v] = next;
                    next += 1;
                }
            }
            let mut edges: Vec<(u8, u8)> = self
                .edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (label[u] as u8, label[v] as u8);
                    (a.min(b), a.max(b))
                })
                .collect();
            edges.sort_unstable();
            if best.as_ref().is_none_or(|b| edges < *b) {
                best = Some(edges);
            }
        };
        permute_cells(&mut order, 0, &mut visit);
        Some(CanonicalGraph {
            num_vertices: n as u8,
            edges: best.unwrap_or_default(),
        })
    }
}

/// Isomorphism-invariant key produced by [`MultiGraph::canonical_form`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalGraph {
    pub num_vertices: u8,
    pub edges: Vec<(u8, u8)>,
}

impl CanonicalGraph {
    pub fn to_graph(&self) -> MultiGraph {
        MultiGraph::new(
            usize::from(self.num_vertices),
            self.edges
                .iter()
                .map(|&(u, v)| (usize::from(u), usize::from(v)))
                .collect(),
        )
        .expect("canonical graphs are valid")
    }
}

/// Colour refinement with multiplicities; colours are ranks of sorted
/// signatures, so they depend only on the isomorphism class.
type Signature = (usize, u16, Vec<(usize, u16)>);

fn refine_colors(mult: &[Vec<u16>]) -> Vec<usize> {
    let n = mult.len();
    let mut colors: Vec<usize> = vec![0; n];
    let mut classes = if n == 0 { 0 } else { 1 };
    loop {
        let sigs: Vec<Signature> = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, u16)> = (0..n)
                    .filter(|&w| w != v && mult[v][w] > 0)
                    .map(|w| (colors[w], mult[v][w]))
                    .collect();
                nb.sort_unstable();
                (colors[v], mult[v][v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let new: Vec<usize> = sigs
            .iter()
            .map(|s| sorted.binary_search(s).expect("signature present"))
            .collect();
        let new_classes = sorted.len();
        colors = new;
        if new_classes == classes {
            return colors;
        }
        classes = new_classes;
    }
}

fn permute_cells<F: FnMut(&[Vec<usize>])>(order: &mut Vec<Vec<usize>>, cell: usize, visit: &mut F) {
    if cell == order.len() {
        visit(order);
        return;
    }
    permute_within(order, cell, 0, visit);
}

fn permute_within<F: FnMut(&[Vec<usize>])>(
    order: &mut Vec<Vec<usize>>,
    cell: usize,
    k: usize,
    visit: &mut F,
) {
    let len = order[cell].len();
    if k + 1 >= len {
        permute_cells(order, cell + 1, visit);
        return;
    }
    for i in k..len {
        order[cell].swap(k, i);
        permute_within(order, cell, k + 1, visit);
        order[cell].swap(k, i);
    }
}
