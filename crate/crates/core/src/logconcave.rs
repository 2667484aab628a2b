//! Log-concavity of non-negative integer sequences, and the searches built
//! on it: the minimal thickening with a log-concave h-vector, the Swartz
//! f-vector bound, and the shift lemma harness.
//!
//! Sequences are f- or h-vectors `(a_0, …, a_r)`, read as the descending
//! coefficients of `Σ a_i q^{r-i}`. Every comparison is an exact integer
//! inequality.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::poly::UnivarPoly;

/// One failed inequality `lhs ≥ rhs` at an interior index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub index: usize,
    #[serde(serialize_with = "as_string")]
    pub lhs: BigInt,
    #[serde(serialize_with = "as_string")]
    pub rhs: BigInt,
}

fn as_string<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn as_strings<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Modes {
    pub first: usize,
    pub last: usize,
    /// Every index attaining the maximum.
    pub argmax: Vec<usize>,
    pub unimodal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConcavityReport {
    pub unimodal: bool,
    pub log_concave: bool,
    pub strictly_log_concave: bool,
    pub ultra_log_concave: bool,
    pub modes: Modes,
    /// Failures of `a_i² ≥ a_{i-1} a_{i+1}`.
    pub violations: Vec<Violation>,
    /// Indices where equality holds, so strictness fails.
    pub equalities: Vec<usize>,
    pub ultra_violations: Vec<Violation>,
    /// Indices where a binomial `C(a_1, ·)` vanishes; plain log-concavity is
    /// used there instead.
    pub ultra_skipped: Vec<usize>,
    pub interior_zeros: bool,
}

fn is_unimodal(s: &[BigInt]) -> bool {
    let mut i = 1;
    while i < s.len() && s[i] >= s[i - 1] {
        i += 1;
    }
    while i < s.len() && s[i] <= s[i - 1] {
        i += 1;
    }
    i >= s.len()
}

/// Smallest and largest indices of a maximal entry.
pub fn modes(s: &[BigInt]) -> Modes {
    let max = s.iter().max();
    let argmax: Vec<usize> = s
        .iter()
        .enumerate()
        .filter(|(_, v)| Some(*v) == max)
        .map(|(i, _)| i)
        .collect();
    Modes {
        first: argmax.first().copied().unwrap_or(0),
        last: argmax.last().copied().unwrap_or(0),
        argmax,
        unimodal: is_unimodal(s),
    }
}

pub fn analyze(s: &[BigInt]) -> ConcavityReport {
    let mut violations = Vec::new();
    let mut equalities = Vec::new();
    for i in 1..s.len().saturating_sub(1) {
        let lhs = &s[i] * &s[i];
        let rhs = &s[i - 1] * &s[i + 1];
        if lhs < rhs {
            violations.push(Violation { index: i, lhs, rhs });
        } else if lhs == rhs {
            equalities.push(i);
        }
    }

    let mut ultra_violations = Vec::new();
    let mut ultra_skipped = Vec::new();
    if s.len() >= 3 {
        let n = &s[1];
        let c = |k: usize| binomial(n.clone(), BigInt::from(k));
        for i in 1..s.len() - 1 {
            let (lo, mid, hi) = (c(i - 1), c(i), c(i + 1));
            if lo.is_zero() || mid.is_zero() || hi.is_zero() {
                ultra_skipped.push(i);
                if let Some(v) = violations.iter().find(|v| v.index == i) {
                    ultra_violations.push(v.clone());
                }
                continue;
            }
            let lhs = &s[i] * &s[i] * lo * hi;
            let rhs = &s[i - 1] * &s[i + 1] * &mid * &mid;
            if lhs < rhs {
                ultra_violations.push(Violation { index: i, lhs, rhs });
            }
        }
    }

    let first_nz = s.iter().position(|v| !v.is_zero());
    let last_nz = s.iter().rposition(|v| !v.is_zero());
    let interior_zeros = match (first_nz, last_nz) {
        (Some(a), Some(b)) => s[a..=b].iter().any(Zero::is_zero),
        _ => false,
    };

    ConcavityReport {
        unimodal: is_unimodal(s),
        log_concave: violations.is_empty(),
        strictly_log_concave: violations.is_empty() && equalities.is_empty(),
        ultra_log_concave: ultra_violations.is_empty(),
        modes: modes(s),
        violations,
        equalities,
        ultra_violations,
        ultra_skipped,
        interior_zeros,
    }
}

/// `f_0 < f_1 < … < f_{⌊r/2⌋}` where `r = len - 1`.
pub fn check_first_half_increasing(f: &[BigInt]) -> bool {
    let half = f.len().saturating_sub(1) / 2;
    f[..=half.min(f.len().saturating_sub(1))]
        .windows(2)
        .all(|w| w[0] < w[1])
}

/// The h-vector `h(q) = f(q - 1)` of an f-vector.
pub fn h_from_f(f: &[BigInt]) -> Vec<BigInt> {
    UnivarPoly::from_descending(f)
        .shift(&BigInt::from(-1))
        .descending(f.len())
}

/// f-vector of the `k`-fold thickening: `f_i ↦ k^i f_i`.
pub fn thickened_f_vector(f: &[BigInt], k: u64) -> Vec<BigInt> {
    let k = BigInt::from(k);
    let mut scale = BigInt::one();
    f.iter()
        .map(|v| {
            let out = v * &scale;
            scale *= &k;
            out
        })
        .collect()
}

/// `(f_1 r)^{3r}`.
pub fn thickening_bound(f: &[BigInt]) -> BigInt {
    let r = f.len().saturating_sub(1);
    let f1 = f.get(1).cloned().unwrap_or_default();
    num_traits::pow(f1 * BigInt::from(r), 3 * r)
}

#[derive(Clone, Debug, Serialize)]
pub struct ThickenStep {
    pub k: u64,
    #[serde(serialize_with = "as_strings")]
    pub h_vector: Vec<BigInt>,
    pub report: ConcavityReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct ThickenSearch {
    pub k0: Option<u64>,
    pub k_max: u64,
    #[serde(serialize_with = "as_string")]
    pub bound: BigInt,
    pub within_bound: Option<bool>,
    pub trace: Vec<ThickenStep>,
}

/// Smallest `k ≤ k_max` for which the h-vector of the `k`-fold thickening of
/// a matroid with f-vector `f` is log-concave. Thickenings are never built;
/// only the f-vector is rescaled.
pub fn thicken_h_search_f(f: &[BigInt], k_max: u64) -> ThickenSearch {
    let bound = thickening_bound(f);
    let mut trace = Vec::new();
    let mut k0 = None;
    for k in 1..=k_max {
        let h = h_from_f(&thickened_f_vector(f, k));
        let report = analyze(&h);
        let done = report.log_concave;
        trace.push(ThickenStep {
            k,
            h_vector: h,
            report,
        });
        if done {
            k0 = Some(k);
            break;
        }
    }
    ThickenSearch {
        within_bound: k0.map(|k| BigInt::from(k) <= bound),
        k0,
        k_max,
        bound,
        trace,
    }
}

pub fn thicken_h_search(m: &Matroid, k_max: u64) -> Result<ThickenSearch> {
    let f = crate::invariants::MatroidInvariants::new(m)?.f_vector();
    Ok(thicken_h_search_f(&f, k_max))
}

/// Compare the rescaled f-vector with a brute-force count on the explicit
/// thickening. Limited to `kN ≤ 16`.
pub fn thickening_scaling_agrees(m: &Matroid, k: u64) -> Result<bool> {
    let kn = m.len() * k as usize;
    if kn > 16 {
        return Err(Error::TooLarge {
            what: "explicit thickening",
            size: kn,
            limit: 16,
            hint: "",
        });
    }
    let explicit: Vec<BigInt> = m
        .thicken(k as usize)?
        .count_independent_sets()
        .into_iter()
        .map(BigInt::from)
        .collect();
    let f: Vec<BigInt> = m
        .count_independent_sets()
        .into_iter()
        .map(BigInt::from)
        .collect();
    Ok(explicit == thickened_f_vector(&f, k))
}

#[derive(Clone, Debug, Serialize)]
pub struct SwartzReport {
    #[serde(serialize_with = "as_strings")]
    pub f: Vec<BigInt>,
    #[serde(serialize_with = "as_string")]
    pub h_r: BigInt,
    /// Upper bound used for `h_r`: `C(f_1 - 1, r)`.
    #[serde(serialize_with = "as_string")]
    pub h_r_cap: BigInt,
    #[serde(serialize_with = "as_strings")]
    pub bounds: Vec<BigInt>,
    /// `r^{2i} f_1^r`.
    #[serde(serialize_with = "as_strings")]
    pub coarse: Vec<BigInt>,
    pub violations: Vec<Violation>,
    pub holds: bool,
}

/// The Swartz upper bound on each `f_i`, with `h_r` replaced by its
/// multicomplex cap, plus the coarse bound `r^{2i} f_1^r`.
///
/// The h-vector of a matroid is the degree sequence of a multicomplex on
/// `h_1 = f_1 - r` variables, so `h_r` is at most the number of degree-`r`
/// monomials, `C(f_1 - 1, r)`.
pub fn swartz_bound(f: &[BigInt]) -> SwartzReport {
    let r = f.len().saturating_sub(1);
    let f1 = f.get(1).cloned().unwrap_or_default();
    let c = |n: i64, k: i64| -> BigInt {
        if n < 0 || k < 0 || k > n {
            BigInt::zero()
        } else {
            binomial(BigInt::from(n), BigInt::from(k))
        }
    };
    let h_r = h_from_f(f).last().cloned().unwrap_or_default();
    let h_r_cap = if f1.is_positive() {
        binomial(&f1 - 1, BigInt::from(r))
    } else {
        BigInt::from(u8::from(r == 0))
    };
    let ri = r as i64;
    let bounds: Vec<BigInt> = (0..=ri)
        .map(|i| {
            (0..=i)
                .map(|j| c(ri - j, ri - i) * (c(ri - 1, j) * &h_r_cap + c(ri - 1, j - 1)))
                .sum()
        })
        .collect();
    let f1r = num_traits::pow(f1, r);
    let coarse: Vec<BigInt> = (0..=r)
        .map(|i| num_traits::pow(BigInt::from(r), 2 * i) * &f1r)
        .collect();
    let mut violations = Vec::new();
    for (i, v) in f.iter().enumerate() {
        let cap = (&bounds[i]).min(&coarse[i]);
        if v > cap {
            violations.push(Violation {
                index: i,
                lhs: cap.clone(),
                rhs: v.clone(),
            });
        }
    }
    SwartzReport {
        f: f.to_vec(),
        h_r,
        h_r_cap,
        holds: violations.is_empty(),
        bounds,
        coarse,
        violations,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ShiftReport {
    #[serde(serialize_with = "as_strings")]
    pub a: Vec<BigInt>,
    /// Descending coefficients of `a(q + 1)`.
    #[serde(serialize_with = "as_strings")]
    pub b: Vec<BigInt>,
    pub precondition: bool,
    pub report: ConcavityReport,
}

impl ShiftReport {
    /// The shift lemma's conclusion, or vacuous truth when its hypotheses
    /// fail.
    pub fn holds(&self) -> bool {
        !self.precondition || self.report.strictly_log_concave
    }
}

/// Shift `a(q) = Σ a_i q^{r-i}` to `a(q + 1)` and analyze the result. The
/// hypotheses are `a_0 ≥ 1`, non-negative entries, log-concavity and no
/// interior zeros; without the last one the conclusion fails, e.g. for
/// `q³ + 5`.
pub fn shift_preserves_strict_lc(a: &[BigInt]) -> ShiftReport {
    let b = UnivarPoly::from_descending(a)
        .shift(&BigInt::one())
        .descending(a.len());
    let pre = analyze(a);
    let precondition = a.first().is_some_and(|v| *v >= BigInt::one())
        && a.iter().all(|v| !v.is_negative())
        && pre.log_concave
        && !pre.interior_zeros;
    ShiftReport {
        a: a.to_vec(),
        report: analyze(&b),
        b,
        precondition,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn uniform_two_three() {
        let r = analyze(&seq(&[1, 3, 3]));
        assert!(r.log_concave && r.strictly_log_concave && r.unimodal);
        assert_eq!((r.modes.first, r.modes.last), (1, 2));
    }

    #[test]
    fn uniform_two_six() {
        let r = analyze(&seq(&[1, 6, 15]));
        assert!(r.strictly_log_concave);
        assert_eq!(r.modes.argmax, vec![2]);
        assert!(check_first_half_increasing(&seq(&[1, 6, 15])));
    }

    #[test]
    fn not_log_concave() {
        let r = analyze(&seq(&[1, 1, 2]));
        assert!(!r.log_concave && !r.strictly_log_concave);
        assert_eq!(
            r.violations,
            vec![Violation {
                index: 1,
                lhs: 1.into(),
                rhs: 2.into()
            }]
        );
    }

    #[test]
    fn zero_semantics() {
        let r = analyze(&seq(&[1, 0, 0]));
        assert!(r.log_concave && !r.strictly_log_concave && !r.interior_zeros);
        assert!(analyze(&seq(&[1, 0, 1])).interior_zeros);
        assert!(analyze(&[]).log_concave);
    }

    #[test]
    fn constant_sequence_modes() {
        let m = modes(&seq(&[4, 4, 4]));
        assert_eq!((m.first, m.last), (0, 2));
        assert!(m.unimodal);
        assert!(!modes(&seq(&[3, 1, 3])).unimodal);
    }

    #[test]
    fn binomial_rows_are_ultra() {
        for r in 1..9u64 {
            let f: Vec<BigInt> = (0..=r)
                .map(|i| binomial(BigInt::from(r), BigInt::from(i)))
                .collect();
            let rep = analyze(&f);
            assert!(rep.ultra_log_concave && rep.strictly_log_concave);
            assert_eq!(rep.modes.first as u64, r / 2);
        }
    }

    #[test]
    fn ultra_skips_vanishing_binomials() {
        // f_1 = 1 < i + 1 at i = 1.
        let rep = analyze(&seq(&[1, 1, 1]));
        assert_eq!(rep.ultra_skipped, vec![1]);
        assert!(rep.ultra_log_concave);
    }

    #[test]
    fn h_vectors() {
        assert_eq!(h_from_f(&seq(&[1, 3, 3])), seq(&[1, 1, 1]));
        assert_eq!(h_from_f(&seq(&[1, 6, 15])), seq(&[1, 4, 10]));
    }

    #[test]
    fn thickening_search() {
        let s = thicken_h_search_f(&seq(&[1, 3, 3]), 10);
        assert_eq!(s.k0, Some(1));
        assert_eq!(s.within_bound, Some(true));
        let s = thicken_h_search_f(&seq(&[1, 6, 15]), 10);
        let k0 = s.k0.unwrap();
        for step in &s.trace {
            let k = BigInt::from(step.k);
            let expected = vec![
                BigInt::one(),
                BigInt::from(6) * &k - 2,
                BigInt::from(15) * &k * &k - BigInt::from(6) * &k + 1,
            ];
            assert_eq!(step.h_vector, expected);
        }
        assert_eq!(s.trace.last().unwrap().k, k0);
    }

    #[test]
    fn search_runs_until_the_quadratic_settles() {
        // h of the k-fold scaling of (1, 2, 3) is (1, 2k - 2, 3k^2 - 2k + 1),
        // log-concave once k^2 - 6k + 3 ≥ 0.
        let s = thicken_h_search_f(&seq(&[1, 2, 3]), 100);
        assert_eq!(s.k0, Some(6));
        assert_eq!(s.trace.len(), 6);
        assert!(s.trace[..5].iter().all(|t| !t.report.log_concave));
        let s = thicken_h_search_f(&seq(&[1, 2, 3]), 5);
        assert_eq!((s.k0, s.within_bound), (None, None));
    }

    #[test]
    fn scaling_matches_explicit_thickening() {
        let m = Matroid::uniform(2, 4).unwrap();
        for k in 1..=4 {
            assert!(thickening_scaling_agrees(&m, k).unwrap());
        }
        assert!(thickening_scaling_agrees(&m, 5).is_err());
    }

    #[test]
    fn swartz_examples() {
        let rep = swartz_bound(&seq(&[1, 3, 3]));
        assert_eq!(rep.h_r, BigInt::from(1));
        assert_eq!(rep.h_r_cap, BigInt::from(1));
        assert_eq!(rep.bounds, seq(&[1, 4, 4]));
        assert!(rep.holds);
        // U_{1,5}: h = (1, 4), so the cap must allow h_1 = 4.
        let rep = swartz_bound(&seq(&[1, 5]));
        assert_eq!(rep.h_r, BigInt::from(4));
        assert!(rep.h_r_cap >= rep.h_r);
        assert!(rep.holds);
    }

    #[test]
    fn shift_examples() {
        let r = shift_preserves_strict_lc(&seq(&[1, 0, 0]));
        assert_eq!(r.b, seq(&[1, 2, 1]));
        assert!(r.precondition && r.holds());
        let r = shift_preserves_strict_lc(&seq(&[1, 1, 1]));
        assert_eq!(r.b, seq(&[1, 3, 3]));
        assert!(r.report.strictly_log_concave);
        // Interior zeros break the conclusion: (q+1)^3 + 5.
        let r = shift_preserves_strict_lc(&seq(&[1, 0, 0, 5]));
        assert!(!r.precondition);
        assert!(!r.report.log_concave);
    }

    proptest! {
        #[test]
        fn strict_implies_plain(v in proptest::collection::vec(0i64..50, 0..8)) {
            let r = analyze(&seq(&v));
            prop_assert!(!r.strictly_log_concave || r.log_concave);
            if v.iter().all(|&x| x > 0) {
                prop_assert!(!r.log_concave || r.unimodal);
                prop_assert!(!r.ultra_log_concave || r.log_concave);
            }
        }

        #[test]
        fn reversal_invariance(v in proptest::collection::vec(0i64..50, 0..8)) {
            let fwd = analyze(&seq(&v));
            let mut w = v.clone();
            w.reverse();
            let back = analyze(&seq(&w));
            prop_assert_eq!(fwd.log_concave, back.log_concave);
            prop_assert_eq!(fwd.strictly_log_concave, back.strictly_log_concave);
        }
    }
}
