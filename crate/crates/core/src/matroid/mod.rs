//! Matroids behind a single rank-oracle interface.
//!
//! A [`Matroid`] is an immutable, cheaply clonable value. Whatever its
//! provenance (uniform, vectors, graph, explicit bases, or a construction on
//! other matroids), every consumer sees only [`Matroid::rank`]. Ground sets
//! are `{0, …, N-1}` in their natural order with `N ≤ 64`; the order matters
//! for basis activities and is preserved by all constructions, new elements
//! being appended last.

mod activity;
mod graph;
mod set;
mod vectors;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

pub use activity::BasisActivity;
pub use graph::{CanonicalGraph, MultiGraph};
pub use set::{ElementSet, MAX_GROUND};
pub use vectors::VectorConfig;

use crate::error::{Error, Result};

/// Ground sets up to this size have their basis-exchange axiom checked when
/// built from an explicit list of bases.
pub const BASES_VALIDATION_LIMIT: usize = 12;

/// Rank memo entries stop being recorded past this size.
const MEMO_CAP: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Uniform,
    Vectors,
    Graphic,
    Bases,
    Derived,
}

#[derive(Clone)]
pub struct Matroid(Arc<Inner>);

struct Inner {
    n: usize,
    rank: usize,
    kind: Kind,
    memo: Option<RwLock<HashMap<u64, u32>>>,
}

#[derive(Clone)]
pub(crate) enum Kind {
    Uniform {
        k: usize,
    },
    Vectors(VectorConfig),
    Graph(MultiGraph),
    Bases {
        bases: Vec<ElementSet>,
        validated: bool,
    },
    Dual(Matroid),
    /// `keep[i]` is the base element behind minor element `i`.
    Minor {
        base: Matroid,
        keep: Vec<usize>,
        contracted: ElementSet,
        contracted_rank: usize,
    },
    FreeExtension(Matroid),
    Thicken {
        base: Matroid,
        k: usize,
    },
    DirectSum(Matroid, Matroid),
    /// Element `i` is base element `perm[i]`.
    Relabel {
        base: Matroid,
        perm: Vec<usize>,
    },
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.0.n)
            .field("rank", &self.0.rank)
            .field("provenance", &self.provenance())
            .finish()
    }
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_GROUND {
        Err(Error::TooLarge {
            what: "ground set",
            size: n,
            limit: MAX_GROUND,
            hint: "",
        })
    } else {
        Ok(())
    }
}

impl Matroid {
    fn build(n: usize, kind: Kind, memoize: bool) -> Self {
        let mut inner = Inner {
            n,
            rank: 0,
            kind,
            memo: memoize.then(Default::default),
        };
        inner.rank = inner.raw_rank(ElementSet::full(n));
        Matroid(Arc::new(inner))
    }

    /// `U_{k,n}`: every set of size at most `k` is independent.
    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        check_ground(n)?;
        if k > n {
            return Err(Error::Input(format!(
                "uniform matroid U_{{{k},{n}}} needs k ≤ n"
            )));
        }
        Ok(Self::build(n, Kind::Uniform { k }, false))
    }

    pub fn from_vectors(config: VectorConfig) -> Result<Self> {
        check_ground(config.len())?;
        Ok(Self::build(config.len(), Kind::Vectors(config), true))
    }

    /// The cycle matroid of a multigraph.
    pub fn graphic(graph: MultiGraph) -> Result<Self> {
        check_ground(graph.num_edges())?;
        Ok(Self::build(graph.num_edges(), Kind::Graph(graph), false))
    }

    /// A matroid given by its bases. For `n ≤ BASES_VALIDATION_LIMIT` the
    /// basis-exchange axiom is verified; larger inputs are trusted and
    /// flagged as unvalidated.
    pub fn from_bases(n: usize, bases: Vec<Vec<usize>>) -> Result<Self> {
        check_ground(n)?;
        let mut sets = Vec::with_capacity(bases.len());
        for b in &bases {
            if let Some(&e) = b.iter().find(|&&e| e >= n) {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            let s = ElementSet::from_elements(b.iter().copied());
            if s.len() != b.len() {
                return Err(Error::Input(format!("basis {b:?} repeats an element")));
            }
            sets.push(s);
        }
        sets.sort();
        sets.dedup();
        let Some(first) = sets.first() else {
            return Err(Error::Input("a matroid needs at least one basis".into()));
        };
        if sets.iter().any(|s| s.len() != first.len()) {
            return Err(Error::Input("bases must all have the same size".into()));
        }
        let validated = n <= BASES_VALIDATION_LIMIT;
        if validated {
            check_exchange(&sets)?;
        }
        Ok(Self::build(
            n,
            Kind::Bases {
                bases: sets,
                validated,
            },
            true,
        ))
    }

    pub fn len(&self) -> usize {
        self.0.n
    }

    pub fn is_empty(&self) -> bool {
        self.0.n == 0
    }

    /// Rank of the whole ground set.
    pub fn rank(&self) -> usize {
        self.0.rank
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.0.n)
    }

    pub(crate) fn kind(&self) -> &Kind {
        &self.0.kind
    }

    pub fn provenance(&self) -> Provenance {
        match self.0.kind {
            Kind::Uniform { .. } => Provenance::Uniform,
            Kind::Vectors(_) => Provenance::Vectors,
            Kind::Graph(_) => Provenance::Graphic,
            Kind::Bases { .. } => Provenance::Bases,
            _ => Provenance::Derived,
        }
    }

    /// The underlying graph when this is a cycle matroid.
    pub fn as_graph(&self) -> Option<&MultiGraph> {
        match &self.0.kind {
            Kind::Graph(g) => Some(g),
            _ => None,
        }
    }

    pub fn as_vectors(&self) -> Option<&VectorConfig> {
        match &self.0.kind {
            Kind::Vectors(v) => Some(v),
            _ => None,
        }
    }

    /// `false` only for explicit-bases input too large to validate.
    pub fn is_validated(&self) -> bool {
        !matches!(
            self.0.kind,
            Kind::Bases {
                validated: false,
                ..
            }
        )
    }

    /// Rank of a subset, checked against the ground set.
    pub fn rank_of(&self, subset: ElementSet) -> Result<usize> {
        if !subset.is_subset(self.ground()) {
            let element = subset.difference(self.ground()).iter().next().unwrap_or(0);
            return Err(Error::ElementOutOfRange {
                element,
                n: self.0.n,
            });
        }
        Ok(self.rank_unchecked(subset))
    }

    /// Rank of a subset that is known to lie in the ground set.
    pub fn rank_unchecked(&self, subset: ElementSet) -> usize {
        self.0.rank_memo(subset)
    }

    pub fn is_independent(&self, subset: ElementSet) -> bool {
        self.rank_unchecked(subset) == subset.len()
    }

    pub fn is_basis(&self, subset: ElementSet) -> bool {
        subset.len() == self.rank() && self.is_independent(subset)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank_unchecked(ElementSet::singleton(e)) == 0
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.rank_unchecked(self.ground().without(e)) < self.rank()
    }

    /// Number of elements that are not loops.
    pub fn non_loops(&self) -> usize {
        (0..self.len()).filter(|&e| !self.is_loop(e)).count()
    }

    fn element(&self, e: usize) -> Result<()> {
        if e < self.0.n {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: e,
                n: self.0.n,
            })
        }
    }

    /// The dual matroid, `rk*(A) = |A| + rk(E∖A) - r`.
    pub fn dual(&self) -> Matroid {
        match &self.0.kind {
            Kind::Dual(m) => m.clone(),
            Kind::Uniform { k } => Matroid::uniform(self.0.n - k, self.0.n).expect("valid dual"),
            _ => Self::build(self.0.n, Kind::Dual(self.clone()), false),
        }
    }

    fn minor_parts(&self) -> (Matroid, Vec<usize>, ElementSet) {
        match &self.0.kind {
            Kind::Minor {
                base,
                keep,
                contracted,
                ..
            } => (base.clone(), keep.clone(), *contracted),
            _ => (self.clone(), (0..self.0.n).collect(), ElementSet::EMPTY),
        }
    }

    fn make_minor(base: Matroid, keep: Vec<usize>, contracted: ElementSet) -> Matroid {
        let contracted_rank = base.rank_unchecked(contracted);
        Self::build(
            keep.len(),
            Kind::Minor {
                base,
                keep,
                contracted,
                contracted_rank,
            },
            false,
        )
    }

    /// `M ∖ e`; elements above `e` shift down by one.
    pub fn delete(&self, e: usize) -> Result<Matroid> {
        self.element(e)?;
        let (base, mut keep, contracted) = self.minor_parts();
        keep.remove(e);
        Ok(Self::make_minor(base, keep, contracted))
    }

    /// `M / e`, with `rk(A) = rk(A ∪ e) - rk(e)`; elements above `e` shift
    /// down by one.
    pub fn contract(&self, e: usize) -> Result<Matroid> {
        self.element(e)?;
        let (base, mut keep, contracted) = self.minor_parts();
        let b = keep.remove(e);
        Ok(Self::make_minor(base, keep, contracted.with(b)))
    }

    /// Restriction to the given elements, in increasing order.
    pub fn restrict(&self, subset: ElementSet) -> Result<Matroid> {
        self.rank_of(subset)?;
        let (base, keep, contracted) = self.minor_parts();
        let keep = subset.iter().map(|e| keep[e]).collect();
        Ok(Self::make_minor(base, keep, contracted))
    }

    /// Free extension `M + e`: the new element is appended and lies in no
    /// proper flat spanned by `M` other than the whole space.
    pub fn free_extension(&self) -> Result<Matroid> {
        check_ground(self.0.n + 1)?;
        Ok(Self::build(
            self.0.n + 1,
            Kind::FreeExtension(self.clone()),
            false,
        ))
    }

    /// Free coextension `M × e = (M* + e)*`.
    pub fn free_coextension(&self) -> Result<Matroid> {
        Ok(self.dual().free_extension()?.dual())
    }

    /// `k`-fold thickening: element `e` becomes `e·k, …, e·k + k - 1`, all
    /// parallel to one another.
    pub fn thicken(&self, k: usize) -> Result<Matroid> {
        if k == 0 {
            return Err(Error::Input("thickening factor must be at least 1".into()));
        }
        check_ground(self.0.n * k)?;
        Ok(Self::build(
            self.0.n * k,
            Kind::Thicken {
                base: self.clone(),
                k,
            },
            false,
        ))
    }

    /// Direct sum; elements of `other` follow ours.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        check_ground(self.0.n + other.0.n)?;
        Ok(Self::build(
            self.0.n + other.0.n,
            Kind::DirectSum(self.clone(), other.clone()),
            false,
        ))
    }

    /// Reorder the ground set: new element `i` is old element `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Matroid> {
        let mut seen = vec![false; self.0.n];
        if perm.len() != self.0.n
            || perm
                .iter()
                .any(|&p| p >= self.0.n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::Input(
                "relabelling must be a permutation of the ground set".into(),
            ));
        }
        Ok(Self::build(
            self.0.n,
            Kind::Relabel {
                base: self.clone(),
                perm: perm.to_vec(),
            },
            false,
        ))
    }

    /// Whether two matroids have the same rank on every subset (`N ≤ 20`).
    pub fn same_oracle(&self, other: &Matroid) -> bool {
        self.len() == other.len()
            && (0..1u64 << self.len())
                .map(ElementSet)
                .all(|s| self.rank_unchecked(s) == other.rank_unchecked(s))
    }

    /// Independent sets of every size, by brute force over all subsets.
    pub fn count_independent_sets(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.rank() + 1];
        for s in (0..1u64 << self.len()).map(ElementSet) {
            if self.is_independent(s) {
                counts[s.len()] += 1;
            }
        }
        counts
    }

    /// All bases, by testing every `r`-subset.
    pub fn bases(&self) -> Vec<ElementSet> {
        ElementSet::combinations(self.len(), self.rank())
            .filter(|&s| self.is_independent(s))
            .collect()
    }
}

impl Inner {
    fn rank_memo(&self, s: ElementSet) -> usize {
        let Some(memo) = &self.memo else {
            return self.raw_rank(s);
        };
        if let Some(&r) = memo.read().expect("rank memo poisoned").get(&s.0) {
            return r as usize;
        }
        let r = self.raw_rank(s);
        let mut w = memo.write().expect("rank memo poisoned");
        if w.len() < MEMO_CAP {
            w.insert(s.0, r as u32);
        }
        r
    }

    fn raw_rank(&self, s: ElementSet) -> usize {
        match &self.kind {
            Kind::Uniform { k } => s.len().min(*k),
            Kind::Vectors(v) => v.subset_rank(s),
            Kind::Graph(g) => g.edge_rank(s),
            Kind::Bases { bases, .. } => bases
                .iter()
                .map(|b| b.intersection(s).len())
                .max()
                .unwrap_or(0),
            Kind::Dual(m) => {
                let comp = ElementSet::full(self.n).difference(s);
                s.len() + m.rank_unchecked(comp) - m.rank()
            }
            Kind::Minor {
                base,
                keep,
                contracted,
                contracted_rank,
            } => {
                let mapped = ElementSet::from_elements(s.iter().map(|e| keep[e]));
                base.rank_unchecked(mapped.union(*contracted)) - contracted_rank
            }
            Kind::FreeExtension(m) => {
                let e = self.n - 1;
                if s.contains(e) {
                    (m.rank_unchecked(s.without(e)) + 1).min(m.rank())
                } else {
                    m.rank_unchecked(s)
                }
            }
            Kind::Thicken { base, k } => {
                base.rank_unchecked(ElementSet::from_elements(s.iter().map(|e| e / k)))
            }
            Kind::DirectSum(a, b) => {
                let lo = ElementSet(s.0 & ElementSet::full(a.len()).0);
                let hi = ElementSet(if a.len() >= 64 { 0 } else { s.0 >> a.len() });
                a.rank_unchecked(lo) + b.rank_unchecked(hi)
            }
            Kind::Relabel { base, perm } => {
                base.rank_unchecked(ElementSet::from_elements(s.iter().map(|e| perm[e])))
            }
        }
    }
}

fn check_exchange(bases: &[ElementSet]) -> Result<()> {
    let lookup: std::collections::HashSet<ElementSet> = bases.iter().copied().collect();
    for &a in bases {
        for &b in bases {
            for x in a.difference(b).iter() {
                let ok = b
                    .difference(a)
                    .iter()
                    .any(|y| lookup.contains(&a.without(x).with(y)));
                if !ok {
                    return Err(Error::Input(format!(
                        "basis exchange fails for {a:?}, {b:?} at element {x}"
                    )));
                }
            }
        }
    }
    Ok(())
}
