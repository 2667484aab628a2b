use serde::Serialize;

use super::{ElementSet, Matroid};
use crate::error::{Error, Result};

/// Largest ground set for which bases are enumerated.
pub const ENUMERATION_LIMIT: usize = 24;

/// A basis with its internal and external activity counts relative to the
/// ground order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisActivity {
    pub basis: Vec<usize>,
    pub internal_activity: usize,
    pub external_activity: usize,
}

impl Matroid {
    /// Every basis once, with activities. An element `e ∈ B` is internally
    /// active when no smaller `f ∉ B` has `B - e + f` a basis (e is least in
    /// its fundamental cocircuit); `f ∉ B` is externally active when no
    /// smaller `e ∈ B` has `B - e + f` a basis (f is least in its fundamental
    /// circuit).
    pub fn bases_with_activities(&self) -> Result<Vec<BasisActivity>> {
        self.bases_with_activities_limit(ENUMERATION_LIMIT)
    }

    pub fn bases_with_activities_limit(&self, limit: usize) -> Result<Vec<BasisActivity>> {
        let n = self.len();
        if n > limit {
            return Err(Error::TooLarge {
                what: "basis enumeration",
                size: n,
                limit,
                hint: "; the 2^N subset sum is infeasible at this size as well",
            });
        }
        let r = self.rank();
        let ground = self.ground();
        let mut out = Vec::new();
        for b in ElementSet::combinations(n, r) {
            if !self.is_independent(b) {
                continue;
            }
            let outside = ground.difference(b);
            let exchanges = |e: usize, f: usize| self.rank_unchecked(b.without(e).with(f)) == r;
            let internal = b
                .iter()
                .filter(|&e| {
                    !outside
                        .iter()
                        .take_while(|&f| f < e)
                        .any(|f| exchanges(e, f))
                })
                .count();
            let external = outside
                .iter()
                .filter(|&f| !b.iter().take_while(|&e| e < f).any(|e| exchanges(e, f)))
                .count();
            out.push(BasisActivity {
                basis: b.iter().collect(),
                internal_activity: internal,
                external_activity: external,
            });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::VectorConfig;

    #[test]
    fn triangle_activities() {
        let m = Matroid::uniform(2, 3).unwrap();
        let acts = m.bases_with_activities().unwrap();
        assert_eq!(acts.len(), 3);
        let mut pairs: Vec<(usize, usize)> = acts
            .iter()
            .map(|a| (a.internal_activity, a.external_activity))
            .collect();
        pairs.sort();
        // x^2 + x + y
        assert_eq!(pairs, vec![(0, 1), (1, 0), (2, 0)]);
    }

    #[test]
    fn free_matroid_is_fully_internally_active() {
        let acts = Matroid::uniform(3, 3)
            .unwrap()
            .bases_with_activities()
            .unwrap();
        assert_eq!(acts.len(), 1);
        assert_eq!(
            (acts[0].internal_activity, acts[0].external_activity),
            (3, 0)
        );
    }

    #[test]
    fn internal_bases_of_the_triangle_configuration() {
        let m =
            Matroid::from_vectors(VectorConfig::from_i64(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        let internal = m
            .bases_with_activities()
            .unwrap()
            .iter()
            .filter(|a| a.internal_activity == 0)
            .count();
        assert_eq!(internal, 1);
        let dual_internal = m
            .dual()
            .bases_with_activities()
            .unwrap()
            .iter()
            .filter(|a| a.internal_activity == 0)
            .count();
        assert_eq!(dual_internal, 2);
    }

    #[test]
    fn too_large_is_an_error() {
        let m = Matroid::uniform(1, 30).unwrap();
        assert!(matches!(
            m.bases_with_activities(),
            Err(Error::TooLarge { .. })
        ));
    }
}
