//! Dense univariate and bivariate polynomials with big-integer coefficients.
//!
//! Both types keep a canonical form: trailing zero coefficients are trimmed,
//! so the zero polynomial has no coefficients at all and structural equality
//! is coefficient-wise equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial in one variable, coefficients in ascending degree order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UnivarPoly {
    coeffs: Vec<BigInt>,
}

impl UnivarPoly {
    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Self { coeffs }.trim()
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `c * q^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// `q + a`.
    pub fn linear(a: i64) -> Self {
        Self::from_i64s(&[a, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `q^k`.
    pub fn shift_degree(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// Sum of all coefficients, i.e. the value at 1.
    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Substitute another polynomial for the variable: `self(inner(q))`.
    pub fn compose(&self, inner: &UnivarPoly) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// `p(q) ↦ p(q + a)`, by repeated synthetic division (Taylor shift).
    pub fn shift(&self, a: &BigInt) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        Self::new(c)
    }

    /// `q^top · p(1/q)`: coefficient `i` of the result is coefficient
    /// `top - i` of `self`.
    pub fn reverse(&self, top: usize) -> Result<Self> {
        match self.degree() {
            Some(d) if d > top => Err(Error::ReverseDegree { top, degree: d }),
            _ => {
                let mut coeffs = vec![BigInt::zero(); top + 1];
                for (i, c) in self.coeffs.iter().enumerate() {
                    coeffs[top - i] = c.clone();
                }
                Ok(Self::new(coeffs))
            }
        }
    }

    /// `p(-q)`.
    pub fn negate_var(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Divide by `q - a`; returns `(quotient, remainder)`.
    pub fn div_linear(&self, a: &BigInt) -> (Self, BigInt) {
        if self.is_zero() {
            return (Self::zero(), BigInt::zero());
        }
        let n = self.coeffs.len();
        let mut quot = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &carry * a;
            if i == 0 {
                return (Self::new(quot), v);
            }
            quot[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Coefficients read from the top degree down, padded to `len` entries:
    /// for `Σ a_i q^{r-i}` this yields `(a_0, …, a_r)` with `len = r + 1`.
    pub fn descending(&self, len: usize) -> Vec<BigInt> {
        (0..len).map(|i| self.coeff(len - 1 - i)).collect()
    }

    pub fn from_descending(seq: &[BigInt]) -> Self {
        Self::new(seq.iter().rev().cloned().collect())
    }

    /// Human-readable form in the given variable, highest degree first.
    pub fn pretty(&self, var: &str) -> String {
        let terms: Vec<(BigInt, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), power(var, i)))
            .collect();
        join_terms(&terms)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_strings(items: &[String]) -> Result<Self> {
        items
            .iter()
            .map(|s| {
                s.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Input(format!("invalid integer coefficient {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

fn join_terms(terms: &[(BigInt, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (c, mono)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            out.push_str(mono);
        }
    }
    out
}

impl fmt::Display for UnivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("q"))
    }
}

impl Add for &UnivarPoly {
    type Output = UnivarPoly;
    fn add(self, rhs: &UnivarPoly) -> UnivarPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivarPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UnivarPoly {
    type Output = UnivarPoly;
    fn sub(self, rhs: &UnivarPoly) -> UnivarPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivarPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UnivarPoly {
    type Output = UnivarPoly;
    fn neg(self) -> UnivarPoly {
        UnivarPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UnivarPoly {
    type Output = UnivarPoly;
    fn mul(self, rhs: &UnivarPoly) -> UnivarPoly {
        if self.is_zero() || rhs.is_zero() {
            return UnivarPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivarPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(UnivarPoly, Add::add, Sub::sub, Mul::mul);

impl Serialize for UnivarPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for UnivarPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        Self::from_strings(&items).map_err(D::Error::custom)
    }
}

/// A polynomial in `x` and `y`; `coeffs[i][j]` is the coefficient of `x^i y^j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    coeffs: Vec<Vec<BigInt>>,
}

impl BivarPoly {
    fn trim(mut self) -> Self {
        for row in &mut self.coeffs {
            while row.last().is_some_and(Zero::is_zero) {
                row.pop();
            }
        }
        while self.coeffs.last().is_some_and(Vec::is_empty) {
            self.coeffs.pop();
        }
        self
    }

    pub fn new(coeffs: Vec<Vec<BigInt>>) -> Self {
        Self { coeffs }.trim()
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// `c · x^i · y^j`.
    pub fn monomial(c: BigInt, i: usize, j: usize) -> Self {
        let mut coeffs = vec![Vec::new(); i + 1];
        coeffs[i] = vec![BigInt::zero(); j + 1];
        coeffs[i][j] = c;
        Self::new(coeffs)
    }

    /// Build from `(i, j, c)` triples; repeated positions accumulate.
    pub fn from_terms(terms: &[(usize, usize, i64)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(i, j, c)| {
            &acc + &Self::monomial(BigInt::from(c), i, j)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_default()
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .map(Vec::len)
            .max()
            .and_then(|l| l.checked_sub(1))
    }

    /// Non-zero terms as `(i, j, c)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.coeffs.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|row| row.iter().map(|a| a * c).collect())
                .collect(),
        )
    }

    /// Multiply by `x^a · y^b`.
    pub fn shift_degrees(&self, a: usize, b: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Vec::new(); a];
        for row in &self.coeffs {
            if row.is_empty() {
                coeffs.push(Vec::new());
                continue;
            }
            let mut r = vec![BigInt::zero(); b];
            r.extend(row.iter().cloned());
            coeffs.push(r);
        }
        Self { coeffs }
    }

    /// Swap the roles of `x` and `y`.
    pub fn swap_vars(&self) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in self.terms() {
            out = &out + &Self::monomial(c.clone(), j, i);
        }
        out
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, row| {
            let inner = row.iter().rev().fold(BigInt::zero(), |a, c| a * y + c);
            acc * x + inner
        })
    }

    /// `T(u(q), v(q))` for univariate `u`, `v`.
    pub fn substitute(&self, u: &UnivarPoly, v: &UnivarPoly) -> UnivarPoly {
        let max_j = self.y_degree().unwrap_or(0);
        let mut v_pows = Vec::with_capacity(max_j + 1);
        v_pows.push(UnivarPoly::one());
        for k in 1..=max_j {
            let next = &v_pows[k - 1] * v;
            v_pows.push(next);
        }
        // Horner in x over rows that are polynomials in v.
        self.coeffs
            .iter()
            .rev()
            .fold(UnivarPoly::zero(), |acc, row| {
                let row_poly = row
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .fold(UnivarPoly::zero(), |a, (j, c)| &a + &v_pows[j].scale(c));
                &(&acc * u) + &row_poly
            })
    }

    /// Human-readable form, ordered by total degree then by `x` degree.
    pub fn pretty(&self) -> String {
        let mut terms: Vec<(usize, usize, BigInt)> =
            self.terms().map(|(i, j, c)| (i, j, c.clone())).collect();
        terms.sort_by_key(|t| std::cmp::Reverse((t.0 + t.1, t.0)));
        let rendered: Vec<(BigInt, String)> = terms
            .into_iter()
            .map(|(i, j, c)| {
                let mono = match (power("x", i), power("y", j)) {
                    (a, b) if a.is_empty() => b,
                    (a, b) if b.is_empty() => a,
                    (a, b) => format!("{a}*{b}"),
                };
                (c, mono)
            })
            .collect();
        join_terms(&rendered)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.coeffs
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect()
    }

    pub fn from_strings(rows: &[Vec<String>]) -> Result<Self> {
        rows.iter()
            .map(|row| UnivarPoly::from_strings(row).map(|p| p.coeffs))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let rows = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(rows);
        for i in 0..rows {
            let a = self.coeffs.get(i).map_or(&[][..], Vec::as_slice);
            let b = rhs.coeffs.get(i).map_or(&[][..], Vec::as_slice);
            let cols = a.len().max(b.len());
            out.push(
                (0..cols)
                    .map(|j| {
                        a.get(j).cloned().unwrap_or_default()
                            + b.get(j).cloned().unwrap_or_default()
                    })
                    .collect(),
            );
        }
        BivarPoly::new(out)
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        if self.is_zero() || rhs.is_zero() {
            return BivarPoly::zero();
        }
        let rows = self.coeffs.len() + rhs.coeffs.len() - 1;
        let cols = self.y_degree().unwrap_or(0) + rhs.y_degree().unwrap_or(0) + 1;
        let mut out = vec![vec![BigInt::zero(); cols]; rows];
        for (i1, j1, a) in self.terms() {
            for (i2, j2, b) in rhs.terms() {
                out[i1 + i2][j1 + j2] += a * b;
            }
        }
        BivarPoly::new(out)
    }
}

forward_owned!(BivarPoly, Add::add, Mul::mul);

impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BivarPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        Self::from_strings(&rows).map_err(D::Error::custom)
    }
}
