//! Central and internal P-spaces of a rational vector configuration.
//!
//! For `X = (x_1, …, x_N)` spanning `ℚ^r`, each `x` gives the linear form
//! `p_x = Σ x_i t_i`. The spaces are spans of products `∏_{x ∈ Y} p_x`:
//!
//! * central: all `Y` with `rk(X ∖ Y) = r`,
//! * internal: all `Y` with `rk(X ∖ (Y ∪ {y})) = r` for every `y ∈ X`.
//!
//! Generators are homogeneous, so each space is handled one degree at a time
//! as a row space over the monomials of that degree (lexicographic order).
//! Both generator families are closed under taking subsets of `Y`, which lets
//! every product be built from a smaller one by a single multiplication.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::IntRowSpace;
use crate::matroid::{ElementSet, Matroid, VectorConfig};
use crate::poly::UnivarPoly;
use crate::tutte::tutte_subset_sum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpaceKind {
    Central,
    Internal,
}

/// Limits on the linear algebra: the number of vectors bounds the `2^N`
/// generator enumeration, the monomial count bounds matrix width.
#[derive(Clone, Copy, Debug)]
pub struct ZonotopalBudget {
    pub max_vectors: usize,
    pub max_monomials: usize,
}

impl Default for ZonotopalBudget {
    fn default() -> Self {
        Self {
            max_vectors: 12,
            max_monomials: 4_096,
        }
    }
}

/// A graded subspace of `ℚ[t_1, …, t_r]`.
#[derive(Clone, Debug)]
pub struct GradedSpace {
    kind: SpaceKind,
    vars: usize,
    /// Per-degree row spaces over integer coefficient vectors.
    pieces: Vec<IntRowSpace>,
    generators: Vec<usize>,
    zero_products: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GradedSummary {
    pub kind: SpaceKind,
    pub dims: Vec<usize>,
    pub total: usize,
    pub generators: Vec<usize>,
    pub zero_products: usize,
}

impl GradedSpace {
    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    /// Number of variables `r`.
    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Dimension in each degree, trailing zero degrees dropped.
    pub fn dims(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.pieces.iter().map(IntRowSpace::dim).collect();
        while d.last() == Some(&0) {
            d.pop();
        }
        d
    }

    pub fn total(&self) -> usize {
        self.pieces.iter().map(IntRowSpace::dim).sum()
    }

    /// Qualifying generators per degree (before row reduction).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Products dropped because they contain a zero vector's form.
    pub fn zero_products(&self) -> usize {
        self.zero_products
    }

    /// `Σ dim_d q^d`.
    pub fn hilbert_series(&self) -> UnivarPoly {
        UnivarPoly::new(self.pieces.iter().map(|p| BigInt::from(p.dim())).collect())
    }

    /// Canonical per-degree bases (reduced row echelon form over ℚ, columns
    /// indexed by the monomials of that degree).
    pub fn basis(&self) -> Vec<Vec<Vec<BigRational>>> {
        self.pieces.iter().map(IntRowSpace::rref).collect()
    }

    /// Degree-wise inclusion.
    pub fn is_subspace_of(&self, other: &GradedSpace) -> bool {
        self.vars == other.vars
            && self.pieces.iter().enumerate().all(|(d, piece)| {
                piece.dim() == 0
                    || other.pieces.get(d).is_some_and(|o| {
                        piece.rref().iter().all(|row| {
                            let ints = crate::linalg::primitive_integer(row);
                            o.contains(&ints)
                        })
                    })
            })
    }

    /// Equality as subspaces, degree by degree.
    pub fn same_space(&self, other: &GradedSpace) -> bool {
        self.dims() == other.dims() && self.is_subspace_of(other)
    }

    pub fn summary(&self) -> GradedSummary {
        GradedSummary {
            kind: self.kind,
            dims: self.dims(),
            total: self.total(),
            generators: self.generators.clone(),
            zero_products: self.zero_products,
        }
    }
}

/// Monomials of degree `d` in `r` variables, in lexicographic order.
fn monomials(r: usize, d: usize) -> Vec<Vec<u16>> {
    fn rec(r: usize, d: usize, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if prefix.len() + 1 == r {
            prefix.push(d as u16);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as u16);
            rec(r, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(r, d, &mut Vec::new(), &mut out);
    out
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

type Homogeneous = HashMap<Vec<u16>, BigInt>;

fn times_linear(p: &Homogeneous, form: &[BigInt]) -> Homogeneous {
    let mut out: Homogeneous = HashMap::new();
    for (mono, c) in p {
        for (i, a) in form.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut m = mono.clone();
            m[i] += 1;
            *out.entry(m).or_default() += c * a;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn build(x: &VectorConfig, kind: SpaceKind, budget: &ZonotopalBudget) -> Result<GradedSpace> {
    x.require_spanning()?;
    let n = x.len();
    let r = x.dim();
    if n > budget.max_vectors {
        return Err(Error::TooLarge {
            what: "zonotopal generator enumeration",
            size: n,
            limit: budget.max_vectors,
            hint: "",
        });
    }
    let top = n - r;
    let width = binomial(top + r.max(1) - 1, r.max(1) - 1);
    if width > budget.max_monomials {
        return Err(Error::TooLarge {
            what: "monomial basis",
            size: width,
            limit: budget.max_monomials,
            hint: "",
        });
    }
    let m = Matroid::from_vectors(x.clone())?;
    let full = m.ground();
    let qualifies = |y: ElementSet| -> bool {
        let rest = full.difference(y);
        match kind {
            SpaceKind::Central => m.rank_unchecked(rest) == r,
            SpaceKind::Internal => (0..n).all(|e| m.rank_unchecked(rest.without(e)) == r),
        }
    };

    let index: Vec<HashMap<Vec<u16>, usize>> = (0..=top)
        .map(|d| {
            monomials(r, d)
                .into_iter()
                .enumerate()
                .map(|(i, mono)| (mono, i))
                .collect()
        })
        .collect();
    let mut pieces: Vec<IntRowSpace> = index.iter().map(|ix| IntRowSpace::new(ix.len())).collect();
    let mut generators = vec![0usize; top + 1];
    let mut zero_products = 0;

    // Products keyed by Y; None marks a product that vanished.
    let mut products: HashMap<u64, Option<Homogeneous>> = HashMap::new();
    let mut subsets: Vec<ElementSet> = (0..1u64 << n).map(ElementSet).collect();
    subsets.sort_by_key(|s| s.len());
    for y in subsets {
        if !qualifies(y) {
            continue;
        }
        let d = y.len();
        let prod = match y.max() {
            None => Some(HashMap::from([(vec![0u16; r], BigInt::from(1))])),
            Some(e) => products
                .get(&y.without(e).0)
                .expect("generator families are closed under subsets")
                .as_ref()
                .map(|p| times_linear(p, &x.integral()[e]))
                .filter(|p| !p.is_empty()),
        };
        generators[d] += 1;
        match &prod {
            Some(p) if !pieces[d].is_full() => {
                let mut row = vec![BigInt::zero(); index[d].len()];
                for (mono, c) in p {
                    row[index[d][mono]] = c.clone();
                }
                pieces[d].insert(row);
            }
            Some(_) => {}
            None => zero_products += 1,
        }
        products.insert(y.0, prod);
    }
    Ok(GradedSpace {
        kind,
        vars: r,
        pieces,
        generators,
        zero_products,
    })
}

/// The central P-space `P(X)`.
pub fn central_space(x: &VectorConfig, budget: &ZonotopalBudget) -> Result<GradedSpace> {
    build(x, SpaceKind::Central, budget)
}

/// The internal P-space `P₋(X)`.
pub fn internal_space(x: &VectorConfig, budget: &ZonotopalBudget) -> Result<GradedSpace> {
    build(x, SpaceKind::Internal, budget)
}

pub fn space(x: &VectorConfig, kind: SpaceKind, budget: &ZonotopalBudget) -> Result<GradedSpace> {
    build(x, kind, budget)
}

/// `q^{N-r} T_X(1, 1/q)` for the central space and `q^{N-r} T_X(0, 1/q)`
/// for the internal one.
pub fn expected_hilbert(x: &VectorConfig, kind: SpaceKind) -> Result<UnivarPoly> {
    let t = tutte_subset_sum(&Matroid::from_vectors(x.clone())?)?.polynomial;
    let at = match kind {
        SpaceKind::Central => UnivarPoly::one(),
        SpaceKind::Internal => UnivarPoly::zero(),
    };
    t.substitute(&at, &UnivarPoly::var())
        .reverse(x.len() - x.rank())
}

#[derive(Clone, Debug, Serialize)]
pub struct GenericExtensionReport {
    /// The generic vector appended to `X`.
    pub generic: Vec<String>,
    pub central_dims: Vec<usize>,
    pub internal_dims: Vec<usize>,
    pub equal_dims: bool,
    pub equal_spaces: bool,
}

impl GenericExtensionReport {
    pub fn holds(&self) -> bool {
        self.equal_dims && self.equal_spaces
    }
}

/// Compare `P₋(X, x)` for a generic `x` with `P(X)` as subspaces.
pub fn internal_equals_central_after_generic(
    x: &VectorConfig,
    budget: &ZonotopalBudget,
) -> Result<GenericExtensionReport> {
    let ext = x.realize_free_extension()?;
    let central = central_space(x, budget)?;
    let internal = internal_space(&ext, budget)?;
    let generic = ext.to_strings().pop().unwrap_or_default();
    Ok(GenericExtensionReport {
        generic,
        central_dims: central.dims(),
        internal_dims: internal.dims(),
        equal_dims: central.dims() == internal.dims(),
        equal_spaces: central.same_space(&internal),
    })
}
