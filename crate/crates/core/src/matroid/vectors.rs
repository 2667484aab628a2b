//! Lists of rational vectors and the matroids they realize.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::set::ElementSet;
use crate::error::{Error, Result};
use crate::linalg::{self, primitive_integer, rank_fraction_free};

/// An ordered list of vectors in `ℚ^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorConfig {
    dim: usize,
    vectors: Vec<Vec<BigRational>>,
    /// Each vector scaled to a primitive integer vector; ranks use these.
    integral: Vec<Vec<BigInt>>,
    rank: usize,
}

impl VectorConfig {
    pub fn new(dim: usize, vectors: Vec<Vec<BigRational>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
            return Err(Error::Input(format!(
                "vector of length {} in a configuration of dimension {dim}",
                v.len()
            )));
        }
        let integral: Vec<Vec<BigInt>> = vectors.iter().map(|v| primitive_integer(v)).collect();
        let rank = rank_fraction_free(&integral);
        Ok(Self {
            dim,
            vectors,
            integral,
            rank,
        })
    }

    /// Dimension is taken from the first vector (0 for an empty list).
    pub fn from_rows(vectors: Vec<Vec<BigRational>>) -> Result<Self> {
        let dim = vectors.first().map_or(0, Vec::len);
        Self::new(dim, vectors)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let vectors = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        Self::from_rows(vectors).expect("rows of equal length")
    }

    pub fn parse(rows: &[Vec<String>]) -> Result<Self> {
        let vectors = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| linalg::parse_rational(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(vectors)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.vectors
            .iter()
            .map(|v| v.iter().map(linalg::format_rational).collect())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[Vec<BigRational>] {
        &self.vectors
    }

    pub fn integral(&self) -> &[Vec<BigInt>] {
        &self.integral
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Whether the vectors span `ℚ^dim`.
    pub fn full_rank(&self) -> bool {
        self.rank == self.dim
    }

    pub fn require_spanning(&self) -> Result<()> {
        if self.full_rank() {
            Ok(())
        } else {
            Err(Error::NotSpanning {
                rank: self.rank,
                dim: self.dim,
            })
        }
    }

    pub fn subset_rank(&self, subset: ElementSet) -> usize {
        let rows: Vec<Vec<BigInt>> = subset.iter().map(|i| self.integral[i].clone()).collect();
        rank_fraction_free(&rows)
    }

    pub fn push(&self, v: Vec<BigRational>) -> Result<Self> {
        let mut vectors = self.vectors.clone();
        vectors.push(v);
        Self::new(self.dim, vectors)
    }

    /// Append a generic vector: one outside every hyperplane spanned by the
    /// configuration. Candidates `(1, t, t², …)` are tried for `t = 1, 2, …`;
    /// a moment-curve point lies on a fixed hyperplane for at most `dim - 1`
    /// values of `t`, so the search terminates.
    pub fn realize_free_extension(&self) -> Result<Self> {
        self.require_spanning()?;
        let r = self.dim;
        if r == 0 {
            return self.push(Vec::new());
        }
        let n = self.len();
        let hyperplanes: Vec<ElementSet> = (0..1u64 << n)
            .map(ElementSet)
            .filter(|&s| self.subset_rank(s) == r - 1)
            .collect();
        for t in 1i64.. {
            let candidate: Vec<BigInt> = (0..r).map(|i| BigInt::from(t).pow(i as u32)).collect();
            let generic = hyperplanes.iter().all(|&s| {
                let mut rows: Vec<Vec<BigInt>> =
                    s.iter().map(|i| self.integral[i].clone()).collect();
                rows.push(candidate.clone());
                rank_fraction_free(&rows) == r
            });
            if generic {
                return self.push(
                    candidate
                        .into_iter()
                        .map(BigRational::from_integer)
                        .collect(),
                );
            }
        }
        unreachable!("finitely many hyperplanes exclude finitely many t")
    }

    /// A configuration realizing the dual matroid: the columns of a basis of
    /// the kernel of the `dim × N` matrix with our vectors as columns. The
    /// result has `N` vectors in `ℚ^{N - dim}`.
    pub fn dual_realization(&self) -> Result<Self> {
        self.require_spanning()?;
        let n = self.len();
        let matrix: Vec<Vec<BigRational>> = (0..self.dim)
            .map(|row| self.vectors.iter().map(|v| v[row].clone()).collect())
            .collect();
        let kernel = linalg::kernel_basis(&matrix, n);
        let k = kernel.len();
        let vectors = (0..n)
            .map(|j| kernel.iter().map(|z| z[j].clone()).collect())
            .collect();
        Self::new(k, vectors)
    }

    /// Each vector repeated `k` times consecutively.
    pub fn thicken(&self, k: usize) -> Result<Self> {
        let vectors = self
            .vectors
            .iter()
            .flat_map(|v| std::iter::repeat_n(v.clone(), k))
            .collect();
        Self::new(self.dim, vectors)
    }

    /// Whether vector `i` is the zero vector.
    pub fn is_loop(&self, i: usize) -> bool {
        self.integral[i].iter().all(Zero::is_zero)
    }

    /// The standard basis of `ℚ^r`.
    pub fn standard_basis(r: usize) -> Self {
        let vectors = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(r, vectors).expect("square identity")
    }
}
