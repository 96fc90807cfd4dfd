//! JSON input format for matroids and the bundled example fixtures.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, MatroidError};
use crate::field::{Field, FieldSpec};
use crate::linalg::Matrix;
use crate::matroid::{Matroid, PointConfiguration};
use crate::slack::{Forest, SlackPattern};
use crate::with_field;

/// Names of the bundled examples, in the order `examples` runs them.
pub const EXAMPLE_NAMES: [&str; 6] = ["m4", "fano", "nonfano", "vamos", "m8", "perles"];

/// Raw JSON of a bundled example.
pub fn example_json(name: &str) -> Option<&'static str> {
    Some(match name {
        "m4" => include_str!("../fixtures/m4.json"),
        "fano" => include_str!("../fixtures/fano.json"),
        "nonfano" => include_str!("../fixtures/nonfano.json"),
        "vamos" => include_str!("../fixtures/vamos.json"),
        "m8" => include_str!("../fixtures/m8.json"),
        "perles" => include_str!("../fixtures/perles.json"),
        _ => return None,
    })
}

pub fn example(name: &str) -> Result<MatroidSpec, Error> {
    let text = example_json(name).ok_or_else(|| Error::Input(format!("no bundled example named {name:?}")))?;
    MatroidSpec::from_json(text)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixSpec {
    pub field: FieldSpec,
    pub entries: Vec<Vec<String>>,
}

/// A matroid given by bases, non-bases or a matrix whose columns realize it.
/// Element labels start at `first_label` (inferred as 0 when some set
/// mentions element 0, else 1). Unknown keys are kept in `extra`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct MatroidSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bases: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nonbases: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_label: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyperplane_order: Option<Vec<Vec<usize>>>,
    /// Slack positions fixed to one, as (element label, 1-based column).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forest: Option<Vec<(usize, usize)>>,
    #[serde(flatten)]
    pub extra: BTreeMap<String, serde_json::Value>,
}

impl MatroidSpec {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("bad matroid JSON: {e}")))
    }

    pub fn first_label(&self) -> usize {
        if let Some(f) = self.first_label {
            return f;
        }
        let mentions_zero = [&self.bases, &self.nonbases, &self.hyperplane_order]
            .into_iter()
            .flatten()
            .any(|sets| sets.iter().any(|s| s.contains(&0)));
        usize::from(!mentions_zero)
    }

    fn unlabel(&self, sets: &[Vec<usize>]) -> Result<Vec<Vec<usize>>, Error> {
        let f = self.first_label();
        sets.iter()
            .map(|s| {
                s.iter()
                    .map(|&e| e.checked_sub(f).ok_or_else(|| Error::Input(format!("label {e} below first label {f}"))))
                    .collect()
            })
            .collect()
    }

    /// The matroid, with the hyperplane order applied when one is given.
    pub fn matroid(&self) -> Result<Matroid, Error> {
        let m = if let Some(mx) = &self.matrix {
            with_field!(mx.field, |k| {
                let v = parse_matrix(&k, &mx.entries)?;
                Matroid::from_matrix(&k, &v)?
            })
        } else {
            let n = self.n.ok_or_else(|| Error::Input("missing \"n\"".into()))?;
            let r = self.rank.ok_or_else(|| Error::Input("missing \"rank\"".into()))?;
            match (&self.bases, &self.nonbases) {
                (Some(b), None) => Matroid::from_bases(n, r, &self.unlabel(b)?)?,
                (None, Some(nb)) => Matroid::from_nonbases(n, r, &self.unlabel(nb)?)?,
                (None, None) => Matroid::uniform(r, n)?,
                (Some(_), Some(_)) => return Err(Error::Input("give either \"bases\" or \"nonbases\"".into())),
            }
        };
        if let (Some(n), true) = (self.n, self.matrix.is_some()) {
            if n != m.n() {
                return Err(MatroidError::Invalid(format!("\"n\" is {n} but the matrix has {} columns", m.n())).into());
            }
        }
        let m = m.with_first_label(self.first_label());
        match &self.hyperplane_order {
            Some(order) => Ok(m.with_hyperplane_order(&self.unlabel(order)?)?),
            None => Ok(m),
        }
    }

    /// The realizing matrix read over `k`, if the input carries one.
    pub fn realization<F: Field>(&self, k: &F) -> Option<Result<PointConfiguration<F>, Error>> {
        let mx = self.matrix.as_ref()?;
        Some(parse_matrix(k, &mx.entries).and_then(|v| Ok(PointConfiguration::new(k.clone(), v)?)))
    }

    /// The user forest as slack positions, validated against `pattern`.
    pub fn forest(&self, pattern: &SlackPattern) -> Option<Result<Forest, Error>> {
        let pairs = self.forest.as_ref()?;
        let f = self.first_label();
        let pos: Result<Vec<(usize, usize)>, Error> = pairs
            .iter()
            .map(|&(e, c)| {
                if e < f || c == 0 {
                    return Err(Error::Input(format!("forest entry ({e}, {c}) is out of range")));
                }
                Ok((e - f, c - 1))
            })
            .collect();
        Some(pos.and_then(|p| Forest::from_positions(pattern, &p)))
    }

    /// A string-matrix field from `extra`, such as a reference slack matrix.
    pub fn extra_matrix<F: Field>(&self, k: &F, key: &str) -> Option<Result<Matrix<F::Elem>, Error>> {
        let v = self.extra.get(key)?;
        let rows: Result<Vec<Vec<String>>, _> = serde_json::from_value(v.clone());
        Some(
            rows.map_err(|e| Error::Input(format!("{key}: {e}")))
                .and_then(|rows| parse_matrix(k, &rows)),
        )
    }

    pub fn extra_str(&self, key: &str) -> Option<&str> {
        self.extra.get(key)?.as_str()
    }
}

pub fn parse_matrix<F: Field>(k: &F, rows: &[Vec<String>]) -> Result<Matrix<F::Elem>, Error> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| k.parse(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(parsed)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_loads() {
        let sizes = [(6, 3, 7), (7, 3, 7), (7, 3, 9), (8, 4, 41), (8, 3, 12), (9, 3, 15)];
        for (name, (n, r, h)) in EXAMPLE_NAMES.iter().zip(sizes) {
            let m = example(name).unwrap().matroid().unwrap();
            assert_eq!((m.n(), m.rank(), m.hyperplanes().len()), (n, r, h), "{name}");
        }
    }

    #[test]
    fn first_label_inference() {
        let s = MatroidSpec::from_json(r#"{"n": 3, "rank": 2, "bases": [[0,1],[0,2],[1,2]]}"#).unwrap();
        assert_eq!(s.first_label(), 0);
        let s = MatroidSpec::from_json(r#"{"n": 3, "rank": 2, "bases": [[1,2],[1,3],[2,3]]}"#).unwrap();
        assert_eq!(s.first_label(), 1);
        assert_eq!(s.matroid().unwrap().bases().len(), 3);
    }

    #[test]
    fn rejects_garbage() {
        assert!(MatroidSpec::from_json("{\"n\": \"x\"}").is_err());
        let s = MatroidSpec::from_json(r#"{"n": 3, "rank": 2, "bases": [[1,2]], "nonbases": [[1,3]]}"#).unwrap();
        assert!(s.matroid().is_err());
    }
}
