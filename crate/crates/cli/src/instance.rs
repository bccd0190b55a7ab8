use std::path::Path;

use serde::Deserialize;
use symtensor::linalg::{parse_rational, Rational};
use symtensor::{Partition, VectorFamily};

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    dim: usize,
    lambda: Vec<usize>,
    v: Vec<Vec<String>>,
    #[serde(default)]
    u: Option<Vec<Vec<String>>>,
}

/// A parsed and validated instance file.
#[derive(Debug, Clone)]
pub struct ProblemInstance {
    pub lambda: Partition,
    pub v: VectorFamily,
    pub u: Option<VectorFamily>,
}

fn family(dim: usize, n: usize, name: &str, raw: &[Vec<String>]) -> Result<VectorFamily, CliError> {
    if raw.len() != n {
        return Err(CliError::Input(format!("{name} has {} vectors but lambda sums to {n}", raw.len())));
    }
    let vectors = raw
        .iter()
        .enumerate()
        .map(|(i, v)| {
            if v.len() != dim {
                return Err(CliError::Input(format!("{name}[{i}] has length {}, expected dim {dim}", v.len())));
            }
            v.iter()
                .map(|x| parse_rational(x).map_err(|e| CliError::Input(format!("{name}[{i}]: {e}"))))
                .collect::<Result<Vec<Rational>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    VectorFamily::new(dim, vectors).map_err(|e| CliError::Input(e.to_string()))
}

impl ProblemInstance {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let raw: RawInstance =
            serde_json::from_str(text).map_err(|e| CliError::Input(format!("instance: {e}")))?;
        if raw.dim == 0 {
            return Err(CliError::Input("dim must be positive".into()));
        }
        let lambda = Partition::new(raw.lambda).map_err(|e| CliError::Input(format!("lambda: {e}")))?;
        let n = lambda.size();
        let v = family(raw.dim, n, "v", &raw.v)?;
        let u = raw.u.as_deref().map(|u| family(raw.dim, n, "u", u)).transpose()?;
        Ok(ProblemInstance { lambda, v, u })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }
}
