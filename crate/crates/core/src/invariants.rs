//! Polynomial specializations of the Tutte polynomial and the identity
//! checks built on them.
//!
//! Every invariant of a matroid is derived from one Tutte polynomial,
//! computed once per [`MatroidInvariants`] value. Substitutions of `1/q` are
//! never made symbolically; they become coefficient reversals at an explicit
//! top degree.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{Matroid, MultiGraph, VectorConfig};
use crate::poly::{BivarPoly, UnivarPoly};
use crate::tutte::{Strategy, TutteEngine};
use crate::zonotopal::{self, ZonotopalBudget};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatroidSummary {
    pub n: usize,
    pub r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub name: &'static str,
    pub poly: UnivarPoly,
    pub variable: &'static str,
    pub source_tutte: BivarPoly,
    pub summary: MatroidSummary,
    /// Human-oriented factored form, where one is customary.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factored: Option<String>,
}

impl InvariantReport {
    pub fn pretty(&self) -> String {
        self.poly.pretty(self.variable)
    }
}

fn sign(exp: usize) -> BigInt {
    if exp.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `1 - q`
fn one_minus_q() -> UnivarPoly {
    UnivarPoly::from_i64s(&[1, -1])
}

/// The invariants of one matroid, sharing a single Tutte polynomial.
#[derive(Clone, Debug)]
pub struct MatroidInvariants {
    matroid: Matroid,
    tutte: BivarPoly,
}

impl MatroidInvariants {
    pub fn new(m: &Matroid) -> Result<Self> {
        Self::with_engine(m, &TutteEngine::default())
    }

    pub fn with_engine(m: &Matroid, engine: &TutteEngine) -> Result<Self> {
        let tutte = engine.run(m, Strategy::Auto)?.polynomial;
        Ok(Self {
            matroid: m.clone(),
            tutte,
        })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn tutte(&self) -> &BivarPoly {
        &self.tutte
    }

    pub fn rank(&self) -> usize {
        self.matroid.rank()
    }

    fn summary(&self) -> MatroidSummary {
        MatroidSummary {
            n: self.matroid.len(),
            r: self.rank(),
            components: None,
        }
    }

    pub(crate) fn report(
        &self,
        name: &'static str,
        variable: &'static str,
        poly: UnivarPoly,
    ) -> InvariantReport {
        InvariantReport {
            name,
            poly,
            variable,
            source_tutte: self.tutte.clone(),
            summary: self.summary(),
            factored: None,
        }
    }

    /// `χ_M(q) = (-1)^r T(1-q, 0)`.
    pub fn characteristic(&self) -> UnivarPoly {
        self.tutte
            .substitute(&one_minus_q(), &UnivarPoly::zero())
            .scale(&sign(self.rank()))
    }

    /// `χ_M(q) / (q - 1)`; fails unless the division is exact.
    pub fn reduced_characteristic(&self) -> Result<UnivarPoly> {
        let (quot, rem) = self.characteristic().div_linear(&BigInt::one());
        if rem.is_zero() && !self.characteristic().is_zero() {
            Ok(quot)
        } else {
            Err(Error::NonZeroRemainder {
                remainder: rem.to_string(),
            })
        }
    }

    /// `f_M(q) = T(1+q, 1) = Σ f_i q^{r-i}`.
    pub fn f_polynomial(&self) -> UnivarPoly {
        self.tutte
            .substitute(&UnivarPoly::linear(1), &UnivarPoly::one())
    }

    /// `(f_0, …, f_r)`: `f_i` counts independent sets of size `i`.
    pub fn f_vector(&self) -> Vec<BigInt> {
        self.f_polynomial().descending(self.rank() + 1)
    }

    /// `h_M(q) = f_M(q - 1) = T(q, 1)`; both routes are computed and must agree.
    pub fn h_polynomial(&self) -> Result<UnivarPoly> {
        let via_shift = self.f_polynomial().shift(&-BigInt::one());
        let via_tutte = self
            .tutte
            .substitute(&UnivarPoly::var(), &UnivarPoly::one());
        if via_shift != via_tutte {
            return Err(Error::Consistency(format!(
                "h-polynomial routes disagree: f(q-1) = {via_shift}, T(q,1) = {via_tutte}"
            )));
        }
        Ok(via_tutte)
    }

    pub fn h_vector(&self) -> Result<Vec<BigInt>> {
        Ok(self.h_polynomial()?.descending(self.rank() + 1))
    }

    /// `(-1)^r χ_M(-q) = T(1+q, 0)`, the sign-normalised characteristic
    /// polynomial with non-negative coefficients.
    pub fn signless_characteristic(&self) -> UnivarPoly {
        self.tutte
            .substitute(&UnivarPoly::linear(1), &UnivarPoly::zero())
    }
}

/// Graph polynomials of a multigraph, all read off the cycle matroid's Tutte
/// polynomial.
#[derive(Clone, Debug)]
pub struct GraphInvariants {
    graph: MultiGraph,
    inner: MatroidInvariants,
}

impl GraphInvariants {
    pub fn new(g: &MultiGraph) -> Result<Self> {
        Self::with_engine(g, &TutteEngine::default())
    }

    pub fn with_engine(g: &MultiGraph, engine: &TutteEngine) -> Result<Self> {
        let m = Matroid::graphic(g.clone())?;
        Ok(Self {
            graph: g.clone(),
            inner: MatroidInvariants::with_engine(&m, engine)?,
        })
    }

    pub fn matroid_invariants(&self) -> &MatroidInvariants {
        &self.inner
    }

    fn report(
        &self,
        name: &'static str,
        variable: &'static str,
        poly: UnivarPoly,
    ) -> InvariantReport {
        let mut r = self.inner.report(name, variable, poly);
        r.summary.components = Some(self.graph.components());
        r
    }

    fn require_connected(&self) -> Result<()> {
        if self.graph.is_connected() {
            Ok(())
        } else {
            Err(Error::NotConnected {
                components: self.graph.components(),
            })
        }
    }

    /// `χ_G(q) = (-1)^{rk} q^{κ(G)} T(1-q, 0)`.
    pub fn chromatic(&self) -> InvariantReport {
        let poly = self
            .inner
            .characteristic()
            .shift_degree(self.graph.components());
        self.report("chromatic", "q", poly)
    }

    /// `φ_G(q) = (-1)^{|E| - rk} T(0, 1-q)`.
    pub fn flow(&self) -> InvariantReport {
        let nullity = self.graph.num_edges() - self.graph.rank();
        let poly = self
            .inner
            .tutte()
            .substitute(&UnivarPoly::zero(), &one_minus_q())
            .scale(&sign(nullity));
        self.report("flow", "q", poly)
    }

    /// Critical-configuration polynomial `P_G(q) = T(1, q)`.
    pub fn critical_config(&self) -> Result<InvariantReport> {
        self.require_connected()?;
        let poly = self
            .inner
            .tutte()
            .substitute(&UnivarPoly::one(), &UnivarPoly::var());
        Ok(self.report("critical", "q", poly))
    }

    /// Shelling polynomial `h(q) = T(q, 1)`.
    pub fn shelling(&self) -> Result<InvariantReport> {
        Ok(self.report("shelling", "q", self.inner.h_polynomial()?))
    }

    /// All-terminal reliability with edge failure probability `p`:
    /// `R_G(p) = (1-p)^{n-1} p^{|E|-n+1} T(1, 1/p)`, expanded in powers of `p`.
    pub fn reliability(&self) -> Result<InvariantReport> {
        self.require_connected()?;
        let n = self.graph.num_vertices();
        let nullity = self.graph.num_edges() + 1 - n.max(1);
        let t1 = self
            .inner
            .tutte()
            .substitute(&UnivarPoly::one(), &UnivarPoly::var());
        let h_part = t1.reverse(nullity)?;
        let tree_part = one_minus_q().pow(n.saturating_sub(1) as u32);
        let poly = &tree_part * &h_part;
        let mut r = self.report("reliability", "p", poly);
        r.factored = Some(format!(
            "(1 - p)^{} * ({})",
            n.saturating_sub(1),
            h_part.pretty("p")
        ));
        Ok(r)
    }
}

/// One side-by-side polynomial identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: UnivarPoly,
    pub rhs: UnivarPoly,
    pub holds: bool,
}

impl IdentityCheck {
    pub fn new(name: impl Into<String>, lhs: UnivarPoly, rhs: UnivarPoly) -> Self {
        let holds = lhs == rhs;
        Self {
            name: name.into(),
            lhs,
            rhs,
            holds,
        }
    }
}

/// `(-1)^{r+1} χ_{M×e}(-q) = (1+q) f_M(q)`, both sides computed exactly.
pub fn verify_coextension_identity(m: &Matroid) -> Result<IdentityCheck> {
    let coext = m.free_coextension()?;
    let lhs = MatroidInvariants::new(&coext)?
        .characteristic()
        .negate_var()
        .scale(&sign(m.rank() + 1));
    let rhs = &UnivarPoly::linear(1) * &MatroidInvariants::new(m)?.f_polynomial();
    Ok(IdentityCheck::new(
        "coextension: (-1)^(r+1) chi_{M x e}(-q) = (1+q) f_M(q)",
        lhs,
        rhs,
    ))
}

/// Hilbert-series identities between zonotopal P-spaces of `X` and of a dual
/// configuration `X*`, and the Tutte evaluations they encode.
pub fn verify_zonotopal_identities(
    x: &VectorConfig,
    budget: &ZonotopalBudget,
) -> Result<Vec<IdentityCheck>> {
    x.require_spanning()?;
    let m = Matroid::from_vectors(x.clone())?;
    let inv = MatroidInvariants::new(&m)?;
    let t = inv.tutte();
    let n = x.len();
    let r = x.dim();
    let nullity = n - r;
    let q = UnivarPoly::var();

    let central = zonotopal::central_space(x, budget)?.hilbert_series();
    let internal = zonotopal::internal_space(x, budget)?.hilbert_series();
    let t_1y = t.substitute(&UnivarPoly::one(), &q);
    let t_0y = t.substitute(&UnivarPoly::zero(), &q);

    let xd = x.dual_realization()?;
    let central_dual = zonotopal::central_space(&xd, budget)?.hilbert_series();
    let internal_dual = zonotopal::internal_space(&xd, budget)?.hilbert_series();
    let rev_central_dual = central_dual.reverse(r)?;
    let rev_internal_dual = internal_dual.reverse(r)?;

    let mut checks = vec![
        IdentityCheck::new(
            "Hilb(P(X), q) = q^(N-r) T(1, 1/q)",
            central,
            t_1y.reverse(nullity)?,
        ),
        IdentityCheck::new(
            "Hilb(P_-(X), q) = q^(N-r) T(0, 1/q)",
            internal,
            t_0y.reverse(nullity)?,
        ),
        IdentityCheck::new(
            "q^r Hilb(P(X*), 1/q) = T(q, 1)",
            rev_central_dual.clone(),
            t.substitute(&q, &UnivarPoly::one()),
        ),
        IdentityCheck::new(
            "q^r Hilb(P_-(X*), 1/q) = T(q, 0)",
            rev_internal_dual.clone(),
            t.substitute(&q, &UnivarPoly::zero()),
        ),
    ];
    checks.push(IdentityCheck::new(
        "f_X(q) = (q+1)^r Hilb(P(X*), 1/(q+1))",
        inv.f_polynomial(),
        rev_central_dual.shift(&BigInt::one()),
    ));
    checks.push(IdentityCheck::new(
        "(-1)^r chi_X(-q) = (q+1)^r Hilb(P_-(X*), 1/(q+1))",
        inv.characteristic().negate_var().scale(&sign(r)),
        rev_internal_dual.shift(&BigInt::one()),
    ));
    Ok(checks)
}
