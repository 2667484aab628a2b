//! Exact linear algebra over ℤ and ℚ.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination on integer
//! matrices. Rational inputs are first scaled row by row to primitive integer
//! vectors, which never changes a row space or a rank.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Parse `"p"`, `"-p"` or `"p/q"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Input(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => s
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|_| bad()),
    }
}

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Scale a rational vector by a positive factor so that it becomes an integer
/// vector with content 1. The zero vector maps to the zero vector.
pub fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    make_primitive(ints)
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

/// Rank of an integer matrix (rows of equal length) by Bareiss elimination.
pub fn rank_fraction_free(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..nrows {
            for j in col + 1..ncols {
                let v = (&m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Row space built incrementally from integer rows. Rows are kept in echelon
/// form with distinct pivot columns, each reduced to content 1.
#[derive(Clone, Debug, Default)]
pub struct IntRowSpace {
    ncols: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl IntRowSpace {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Reduce `v` against the current rows; returns the residue (zero iff
    /// `v` already lies in the span).
    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let a = row[*pivot].clone();
            let b = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = &*x * &a - &b * r;
            }
            v = make_primitive(v);
        }
        v
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Insert `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<BigInt>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        let v = self.reduce(v);
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }

    /// Canonical basis: the reduced row echelon form over ℚ.
    pub fn rref(&self) -> Vec<Vec<BigRational>> {
        let rows: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .map(|(_, r)| r.iter().cloned().map(BigRational::from_integer).collect())
            .collect();
        rref(rows)
    }
}

/// Reduced row echelon form, zero rows dropped.
pub fn rref(mut m: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for x in &mut m[rank] {
            *x *= &inv;
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    m
}

/// Basis of the right kernel `{z : A z = 0}` of a `rows × ncols` matrix.
pub fn kernel_basis(a: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let r = rref(a.to_vec());
    let pivots: Vec<usize> = r
        .iter()
        .map(|row| {
            row.iter()
                .position(|x| !x.is_zero())
                .expect("rref rows are non-zero")
        })
        .collect();
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut z = vec![BigRational::zero(); ncols];
            z[free] = BigRational::one();
            for (row, &p) in r.iter().zip(&pivots) {
                z[p] = -row[free].clone();
            }
            z
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn rats(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(
            parse_rational("3/6").unwrap(),
            BigRational::new(1.into(), 2.into())
        );
        assert_eq!(
            parse_rational("-4").unwrap(),
            BigRational::from_integer((-4).into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&parse_rational("4/-6").unwrap()), "-2/3");
    }

    #[test]
    fn bareiss_ranks() {
        assert_eq!(rank_fraction_free(&ints(&[&[1, 0], &[0, 1], &[1, 1]])), 2);
        assert_eq!(rank_fraction_free(&ints(&[&[2, 4], &[1, 2]])), 1);
        assert_eq!(rank_fraction_free(&ints(&[&[0, 0]])), 0);
        assert_eq!(rank_fraction_free(&[]), 0);
    }

    #[test]
    fn kernel_of_example_matrix() {
        let k = kernel_basis(&rats(&[&[1, 0, 1], &[0, 1, 1]]), 3);
        assert_eq!(k, rats(&[&[-1, -1, 1]]));
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![
            parse_rational("1/2").unwrap(),
            parse_rational("-3/4").unwrap(),
        ];
        assert_eq!(
            primitive_integer(&v),
            vec![BigInt::from(2), BigInt::from(-3)]
        );
    }

    proptest! {
        #[test]
        fn row_space_matches_bareiss(m in prop::collection::vec(prop::collection::vec(-3i64..4, 4), 0..7)) {
            let rows: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            let mut space = IntRowSpace::new(4);
            for r in &rows {
                space.insert(r.clone());
            }
            prop_assert_eq!(space.dim(), rank_fraction_free(&rows));
            prop_assert_eq!(space.rref().len(), space.dim());
            for r in &rows {
                prop_assert!(space.contains(r));
            }
        }

        #[test]
        fn kernel_vectors_annihilate(m in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 1..4)) {
            let a: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
            let k = kernel_basis(&a, 5);
            let ints: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            prop_assert_eq!(k.len(), 5 - rank_fraction_free(&ints));
            for z in &k {
                for row in &a {
                    let dot: BigRational = row.iter().zip(z).map(|(x, y)| x * y).sum();
                    prop_assert!(dot.is_zero());
                }
            }
        }
    }
}
