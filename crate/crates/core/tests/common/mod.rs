//! Brute-force oracles. Each counts or sums straight from a definition and
//! never touches the Tutte machinery, so agreement with the library is
//! evidence rather than tautology.

#![allow(dead_code)]

use matroidal::matroid::{ElementSet, Matroid, MultiGraph};
use matroidal::poly::UnivarPoly;
use rand::Rng;

/// Ascending `i64` coefficients.
pub type Coeffs = Vec<i64>;

pub fn mul(a: &[i64], b: &[i64]) -> Coeffs {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn add_into(acc: &mut Coeffs, p: &[i64]) {
    if acc.len() < p.len() {
        acc.resize(p.len(), 0);
    }
    for (a, b) in acc.iter_mut().zip(p) {
        *a += b;
    }
}

pub fn pow(p: &[i64], e: usize) -> Coeffs {
    (0..e).fold(vec![1], |acc, _| mul(&acc, p))
}

pub fn poly(c: &[i64]) -> UnivarPoly {
    UnivarPoly::from_i64s(c)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Components of `(V, S)`.
pub fn components(g: &MultiGraph, s: ElementSet) -> usize {
    let mut parent: Vec<usize> = (0..g.num_vertices()).collect();
    let mut comps = g.num_vertices();
    for e in s.iter() {
        let (u, v) = g.edges()[e];
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps
}

pub fn is_forest(g: &MultiGraph, s: ElementSet) -> bool {
    components(g, s) + s.len() == g.num_vertices()
}

/// Proper colorings with `q` colors, by trying every assignment.
pub fn count_colorings(g: &MultiGraph, q: u64) -> u64 {
    let n = g.num_vertices() as u32;
    let mut count = 0;
    let mut colors = vec![0u64; n as usize];
    for code in 0..q.pow(n) {
        let mut c = code;
        for slot in colors.iter_mut() {
            *slot = c % q;
            c /= q;
        }
        if g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
            count += 1;
        }
    }
    count
}

/// Nowhere-zero `ℤ_q` flows: every edge oriented `u → v` carries a value in
/// `1..q` and every vertex has net flow `0 mod q`.
pub fn count_flows(g: &MultiGraph, q: u64) -> u64 {
    let m = g.num_edges() as u32;
    let mut count = 0;
    let mut values = vec![0u64; m as usize];
    for code in 0..(q - 1).pow(m) {
        let mut c = code;
        for slot in values.iter_mut() {
            *slot = c % (q - 1) + 1;
            c /= q - 1;
        }
        let mut net = vec![0u64; g.num_vertices()];
        for (&(u, v), &x) in g.edges().iter().zip(&values) {
            net[u] = (net[u] + x) % q;
            net[v] = (net[v] + q - x) % q;
        }
        if net.iter().all(|&x| x == 0) {
            count += 1;
        }
    }
    count
}

/// `Σ_{S : (V,S) connected} p^{|E∖S|} (1-p)^{|S|}`.
pub fn reliability(g: &MultiGraph) -> Coeffs {
    let m = g.num_edges();
    let mut acc = Vec::new();
    for s in (0..1u64 << m).map(ElementSet) {
        if components(g, s) <= 1 {
            let term = mul(&pow(&[0, 1], m - s.len()), &pow(&[1, -1], s.len()));
            add_into(&mut acc, &term);
        }
    }
    while acc.last() == Some(&0) {
        acc.pop();
    }
    acc
}

pub fn spanning_trees(g: &MultiGraph) -> u64 {
    let m = g.num_edges();
    (0..1u64 << m)
        .map(ElementSet)
        .filter(|&s| s.len() + 1 == g.num_vertices() && is_forest(g, s))
        .count() as u64
}

/// `χ_M(q) = Σ_{A ⊆ E} (-1)^{|A|} q^{r - rk(A)}`.
pub fn characteristic_by_subsets(m: &Matroid) -> Coeffs {
    let r = m.rank();
    let mut c = vec![0i64; r + 1];
    for a in (0..1u64 << m.len()).map(ElementSet) {
        let sign = if a.len() % 2 == 0 { 1 } else { -1 };
        c[r - m.rank_unchecked(a)] += sign;
    }
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

/// `(f_0, …, f_r)` by testing every subset.
pub fn f_vector(m: &Matroid) -> Vec<i64> {
    let mut f = vec![0i64; m.rank() + 1];
    for a in (0..1u64 << m.len()).map(ElementSet) {
        if m.rank_unchecked(a) == a.len() {
            f[a.len()] += 1;
        }
    }
    f
}

/// `f_M(q) = Σ f_i q^{r-i}` in ascending coefficients.
pub fn f_polynomial(m: &Matroid) -> Coeffs {
    let mut f = f_vector(m);
    f.reverse();
    f
}

pub struct Counts {
    pub bases: u64,
    pub independent: u64,
    pub spanning: u64,
}

pub fn counts(m: &Matroid) -> Counts {
    let r = m.rank();
    let mut out = Counts {
        bases: 0,
        independent: 0,
        spanning: 0,
    };
    for a in (0..1u64 << m.len()).map(ElementSet) {
        let rk = m.rank_unchecked(a);
        let ind = rk == a.len();
        out.independent += u64::from(ind);
        out.spanning += u64::from(rk == r);
        out.bases += u64::from(ind && rk == r);
    }
    out
}

/// Log-concave, non-negative, `a_0 ≥ 1`, no interior zeros, entries at
/// most `10^6`, length at most 12. Half the draws are products of linear
/// factors `(q + c)` with `c ≥ 0` (real-rooted, hence log-concave); the rest
/// grow each entry under the cap `a_{i+1} ≤ a_i² / a_{i-1}`.
pub fn random_log_concave<R: Rng>(rng: &mut R) -> Vec<i64> {
    const CAP: i64 = 1_000_000;
    let len = rng.gen_range(1..=12);
    if rng.gen_bool(0.5) {
        let mut p: Coeffs = vec![rng.gen_range(1..=5)];
        for _ in 1..len {
            let next = mul(&p, &[rng.gen_range(0..=4), 1]);
            if next.iter().any(|&c| c > CAP) {
                break;
            }
            p = next;
        }
        p.reverse();
        return p;
    }
    let mut a = vec![rng.gen_range(1..=1000)];
    if len > 1 {
        a.push(rng.gen_range(0..=CAP.min(1000 * a[0])));
    }
    while a.len() < len && a[a.len() - 1] > 0 {
        let (prev, cur) = (a[a.len() - 2], a[a.len() - 1]);
        let ceiling = ((cur as i128 * cur as i128) / prev as i128).min(CAP as i128) as i64;
        a.push(rng.gen_range(ceiling / 4..=ceiling));
    }
    while a.len() > 1 && a.last() == Some(&0) {
        if rng.gen_bool(0.5) {
            break;
        }
        a.pop();
    }
    a
}
