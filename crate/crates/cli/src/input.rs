use std::fs;
use std::io::Read;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;
use matroidal::matroid::{Matroid, MultiGraph, VectorConfig};
use matroidal::spec::MatroidSpec;

/// Where a matroid comes from. Exactly one source must be given.
#[derive(Args, Debug, Clone, Default)]
pub struct Source {
    /// Matroid JSON file, or `-` for standard input.
    pub input: Option<PathBuf>,

    /// Uniform matroid `U_{r,n}` given as `r,n`.
    #[arg(long, value_name = "R,N")]
    pub uniform: Option<String>,

    /// Edge-list file: one `u v` pair per line, `#` starts a comment.
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,

    /// Inline matroid JSON.
    #[arg(long, value_name = "JSON")]
    pub spec: Option<String>,
}

fn read_path(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn parse_uniform(text: &str) -> Result<MatroidSpec> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [r, n] = parts.as_slice() else {
        bail!("--uniform expects R,N, got {text:?}");
    };
    let r = r.parse().with_context(|| format!("bad rank {r:?}"))?;
    let n = n.parse().with_context(|| format!("bad size {n:?}"))?;
    Ok(MatroidSpec::Uniform { r, n })
}

impl Source {
    pub fn spec(&self) -> Result<MatroidSpec> {
        let given = [
            self.input.is_some(),
            self.uniform.is_some(),
            self.edges.is_some(),
            self.spec.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if given != 1 {
            bail!("give exactly one input: a JSON file, --uniform, --edges or --spec");
        }
        if let Some(u) = &self.uniform {
            return parse_uniform(u);
        }
        if let Some(path) = &self.edges {
            let g = MultiGraph::parse_edge_list(&read_path(path)?)
                .with_context(|| format!("in edge list {}", path.display()))?;
            return Ok(MatroidSpec::from_graph(&g));
        }
        let text = match (&self.spec, &self.input) {
            (Some(s), _) => s.clone(),
            (_, Some(p)) => read_path(p)?,
            _ => unreachable!("one source is present"),
        };
        MatroidSpec::from_json(&text).map_err(|e| anyhow!(e).context("parsing matroid JSON"))
    }

    pub fn matroid(&self) -> Result<Matroid> {
        Ok(self.spec()?.build()?)
    }

    pub fn graph(&self) -> Result<MultiGraph> {
        Ok(self.spec()?.graph()?)
    }

    pub fn vectors(&self) -> Result<VectorConfig> {
        Ok(self.spec()?.vector_config()?)
    }

    pub fn is_given(&self) -> bool {
        self.input.is_some()
            || self.uniform.is_some()
            || self.edges.is_some()
            || self.spec.is_some()
    }
}

/// `1,6,15` or `1 6 15`.
pub fn parse_seq(text: &str) -> Result<Vec<num_bigint::BigInt>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .with_context(|| format!("{t:?} is not an integer"))
        })
        .collect()
}
