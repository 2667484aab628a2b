use matroidal::corpus::{self, CorpusEntry};
use matroidal::invariants::{verify_coextension_identity, verify_zonotopal_identities};
use matroidal::matroid::{Matroid, VectorConfig};
use matroidal::zonotopal::{internal_equals_central_after_generic, ZonotopalBudget};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Failure {
    pub subject: String,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct Suite {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

#[derive(Debug, Serialize)]
pub struct Verification {
    pub passed: bool,
    pub suites: Vec<Suite>,
}

fn run<T: Sync>(
    name: &'static str,
    items: &[(String, T)],
    check: impl Fn(&T) -> matroidal::Result<Option<String>> + Sync,
) -> matroidal::Result<Suite> {
    let outcomes: Vec<matroidal::Result<Option<Failure>>> = items
        .par_iter()
        .map(|(subject, item)| {
            Ok(check(item)?.map(|detail| Failure {
                subject: subject.clone(),
                detail,
            }))
        })
        .collect();
    let mut failures = Vec::new();
    for o in outcomes {
        failures.extend(o?);
    }
    Ok(Suite {
        name,
        checked: items.len(),
        failures,
    })
}

fn coextension(items: &[(String, Matroid)]) -> matroidal::Result<Suite> {
    run("coextension identity", items, |m| {
        let c = verify_coextension_identity(m)?;
        Ok((!c.holds).then(|| format!("{} vs {}", c.lhs, c.rhs)))
    })
}

fn zonotopal(
    items: &[(String, VectorConfig)],
    budget: &ZonotopalBudget,
) -> matroidal::Result<Suite> {
    run("zonotopal Hilbert series identities", items, |x| {
        let failed: Vec<String> = verify_zonotopal_identities(x, budget)?
            .into_iter()
            .filter(|c| !c.holds)
            .map(|c| format!("{}: {} vs {}", c.name, c.lhs, c.rhs))
            .collect();
        Ok((!failed.is_empty()).then(|| failed.join("; ")))
    })
}

fn generic(items: &[(String, VectorConfig)], budget: &ZonotopalBudget) -> matroidal::Result<Suite> {
    run(
        "internal space after a generic vector equals central space",
        items,
        |x| {
            let rep = internal_equals_central_after_generic(x, budget)?;
            Ok((!rep.holds()).then(|| {
                format!(
                    "central {:?}, internal {:?}",
                    rep.central_dims, rep.internal_dims
                )
            }))
        },
    )
}

fn finish(suites: Vec<Suite>) -> Verification {
    Verification {
        passed: suites.iter().all(|s| s.failures.is_empty()),
        suites,
    }
}

/// The identity suites over the builtin corpus.
pub fn builtin(budget: &ZonotopalBudget) -> matroidal::Result<Verification> {
    let entries: Vec<CorpusEntry> = corpus::builtin();
    let matroids: Vec<(String, Matroid)> = entries
        .iter()
        .filter(|e| e.matroid.len() <= 8)
        .map(|e| (e.name.clone(), e.matroid.clone()))
        .collect();
    let configs: Vec<(String, VectorConfig)> = entries
        .iter()
        .filter_map(|e| e.vectors().map(|x| (e.name.clone(), x.clone())))
        .filter(|(_, x)| x.len() <= 7)
        .collect();
    let few: Vec<(String, VectorConfig)> = configs.iter().take(20).cloned().collect();
    Ok(finish(vec![
        coextension(&matroids)?,
        zonotopal(&configs, budget)?,
        generic(&few, budget)?,
    ]))
}

/// The suites that apply to a single matroid.
pub fn single(m: &Matroid, budget: &ZonotopalBudget) -> matroidal::Result<Verification> {
    let mut suites = vec![coextension(&[("input".to_string(), m.clone())])?];
    if let Some(x) = m.as_vectors().filter(|x| x.full_rank()) {
        let item = [("input".to_string(), x.clone())];
        suites.push(zonotopal(&item, budget)?);
        suites.push(generic(&item, budget)?);
    }
    Ok(finish(suites))
}
