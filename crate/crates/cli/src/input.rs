//! Reading matroid inputs, forests and column lists.

use std::path::Path;

use slackmat::io::{example, MatroidSpec};
use slackmat::matroid::Matroid;
use slackmat::slack::{Forest, Scaling, SlackPattern};

use crate::{CliError, ScalingArgs};

/// A path, inline JSON (starting with `{`), or the name of a bundled
/// example (`fano` or `fano.json`) when no such file exists.
pub fn load(arg: &str) -> Result<MatroidSpec, CliError> {
    let t = arg.trim();
    if t.starts_with('{') {
        return Ok(MatroidSpec::from_json(t)?);
    }
    let path = Path::new(t);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{t}: {e}")))?;
        return MatroidSpec::from_json(&text).map_err(|e| CliError::Input(format!("{t}: {e}")));
    }
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(t);
    if path.parent().is_none_or(|p| p.as_os_str().is_empty()) {
        if let Ok(spec) = example(stem) {
            return Ok(spec);
        }
    }
    Err(CliError::Input(format!("{t}: no such file or bundled example")))
}

pub fn matroid(spec: &MatroidSpec) -> Result<Matroid, CliError> {
    Ok(spec.matroid()?)
}

/// The forest from `--forest`, else the input's own, else `None`.
pub fn forest(spec: &MatroidSpec, pattern: &SlackPattern, file: Option<&str>) -> Result<Option<Forest>, CliError> {
    let mut spec = spec.clone();
    if let Some(f) = file {
        let text = std::fs::read_to_string(f).map_err(|e| CliError::Input(format!("{f}: {e}")))?;
        let pairs: Vec<(usize, usize)> =
            serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{f}: expected [[label, column], ...]: {e}")))?;
        spec.forest = Some(pairs);
    }
    spec.forest(pattern).transpose().map_err(CliError::from)
}

pub fn scaling(spec: &MatroidSpec, pattern: &SlackPattern, args: &ScalingArgs) -> Result<Scaling, CliError> {
    if args.no_scaled && !args.scaled {
        if args.forest.is_some() {
            return Err(CliError::Input("--forest needs a scaled ideal".into()));
        }
        return Ok(Scaling::None);
    }
    Ok(match forest(spec, pattern, args.forest.as_deref())? {
        Some(f) => Scaling::Forest(f),
        None => Scaling::SpanningForest,
    })
}

/// `"1,3,5"` as 0-based columns.
pub fn columns(list: &str, ncols: usize) -> Result<Vec<usize>, CliError> {
    list.split(',')
        .map(|s| {
            let c: usize = s.trim().parse().map_err(|_| CliError::Input(format!("bad column {s:?}")))?;
            if c == 0 || c > ncols {
                return Err(CliError::Input(format!("column {c} outside 1..={ncols}")));
            }
            Ok(c - 1)
        })
        .collect()
}

/// The input's `"submatrix"` key: hyperplanes given by element labels.
pub fn submatrix(spec: &MatroidSpec, m: &Matroid) -> Result<Option<Vec<usize>>, CliError> {
    let Some(v) = spec.extra.get("submatrix") else {
        return Ok(None);
    };
    let sets: Vec<Vec<usize>> =
        serde_json::from_value(v.clone()).map_err(|e| CliError::Input(format!("bad \"submatrix\": {e}")))?;
    Ok(Some(slackmat::certify::columns_of(m, &sets)?))
}
