//! Projective and linear equivalence of slack matrices, and projective
//! uniqueness from the scaled slack ideal.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::Error;
use crate::field::Field;
use crate::groebner::quotient::Quotient;
use crate::groebner::{hilbert, GbOptions};
use crate::linalg::{solve, Matrix};
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::univariate::{FieldRoots, UniPoly};

use super::ideal::{slack_ideal, Scaling, SlackIdealOptions};
use super::graph::Forest;
use super::{check_slack, NumericSlack, SlackPattern};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EquivalenceMode {
    /// `b = diag(r) · a · diag(t)`.
    Projective,
    /// `b = a · diag(t)`.
    Linear,
}

/// Outcome of an equivalence test. On success the scalings satisfy
/// `b = diag(row_scaling) · a · diag(col_scaling)`.
#[derive(Clone, Debug)]
pub struct Equivalence<F: Field> {
    pub equivalent: bool,
    pub reason: Option<String>,
    pub row_scaling: Vec<F::Elem>,
    pub col_scaling: Vec<F::Elem>,
}

impl<F: Field> Equivalence<F> {
    fn no(reason: impl Into<String>) -> Self {
        Equivalence { equivalent: false, reason: Some(reason.into()), row_scaling: Vec::new(), col_scaling: Vec::new() }
    }
}

/// Row and column scalars making `s` equal to one on a spanning forest of
/// its support graph: `r_i · s_ij · t_j = 1` on forest edges.
fn forest_normalizers<F: Field>(k: &F, s: &Matrix<F::Elem>) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let (n, h) = (s.nrows(), s.ncols());
    let mut r: Vec<Option<F::Elem>> = vec![None; n];
    let mut t: Vec<Option<F::Elem>> = vec![None; h];
    for start in 0..n + h {
        let known = if start < n { r[start].is_some() } else { t[start - n].is_some() };
        if known {
            continue;
        }
        if start < n {
            r[start] = Some(k.one());
        } else {
            t[start - n] = Some(k.one());
        }
        let mut q = VecDeque::from([start]);
        while let Some(u) = q.pop_front() {
            if u < n {
                let ru = r[u].clone().unwrap();
                for j in 0..h {
                    if t[j].is_none() && !k.is_zero(s.get(u, j)) {
                        t[j] = Some(k.inv(&k.mul(&ru, s.get(u, j))).unwrap());
                        q.push_back(n + j);
                    }
                }
            } else {
                let j = u - n;
                let tj = t[j].clone().unwrap();
                for i in 0..n {
                    if r[i].is_none() && !k.is_zero(s.get(i, j)) {
                        r[i] = Some(k.inv(&k.mul(&tj, s.get(i, j))).unwrap());
                        q.push_back(i);
                    }
                }
            }
        }
    }
    (r.into_iter().map(Option::unwrap).collect(), t.into_iter().map(Option::unwrap).collect())
}

fn scaled<F: Field>(k: &F, s: &Matrix<F::Elem>, r: &[F::Elem], t: &[F::Elem]) -> Matrix<F::Elem> {
    let mut out = s.clone();
    for i in 0..s.nrows() {
        for j in 0..s.ncols() {
            out.set(i, j, k.mul(&k.mul(&r[i], s.get(i, j)), &t[j]));
        }
    }
    out
}

/// Whether two slack matrices over `k` differ by row and column scaling
/// (projective) or by column scaling alone (linear).
pub fn equivalence<F: Field>(
    k: &F,
    a: &Matrix<F::Elem>,
    b: &Matrix<F::Elem>,
    mode: EquivalenceMode,
) -> Result<Equivalence<F>, Error> {
    if a.nrows() != b.nrows() || a.ncols() != b.ncols() {
        return Err(Error::Input("matrices have different shapes".into()));
    }
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            if k.is_zero(a.get(i, j)) != k.is_zero(b.get(i, j)) {
                return Ok(Equivalence::no(format!("supports differ at ({}, {})", i + 1, j + 1)));
            }
        }
    }
    let (r, t) = match mode {
        EquivalenceMode::Linear => {
            let mut t = Vec::with_capacity(a.ncols());
            for j in 0..a.ncols() {
                let Some(i) = (0..a.nrows()).find(|&i| !k.is_zero(a.get(i, j))) else {
                    t.push(k.one());
                    continue;
                };
                t.push(k.div(b.get(i, j), a.get(i, j)).unwrap());
            }
            (vec![k.one(); a.nrows()], t)
        }
        EquivalenceMode::Projective => {
            let (ra, ta) = forest_normalizers(k, a);
            let (rb, tb) = forest_normalizers(k, b);
            let r = ra.iter().zip(&rb).map(|(x, y)| k.div(x, y).unwrap()).collect();
            let t = ta.iter().zip(&tb).map(|(x, y)| k.div(x, y).unwrap()).collect();
            (r, t)
        }
    };
    if scaled(k, a, &r, &t) != *b {
        return Ok(Equivalence::no("no scaling maps the first matrix to the second"));
    }
    Ok(Equivalence { equivalent: true, reason: None, row_scaling: r, col_scaling: t })
}

/// Result of [`projectively_unique`].
#[derive(Clone, Debug)]
pub enum Uniqueness<F: Field> {
    /// Exactly one point of the scaled slack variety over the field.
    Unique {
        slack: NumericSlack<F>,
        /// The scaled slack ideal is not radical at that point.
        non_reduced: bool,
        /// The univariate polynomial that pins the point, when not linear.
        evidence: Option<String>,
    },
    NotUnique { evidence: String },
    /// The scaled slack variety has no points over the field.
    NoRealization { evidence: String },
    Unknown { reason: String },
}

impl<F: Field> Uniqueness<F> {
    pub fn label(&self) -> &'static str {
        match self {
            Uniqueness::Unique { .. } => "unique",
            Uniqueness::NotUnique { .. } => "not-unique",
            Uniqueness::NoRealization { .. } => "no-realization",
            Uniqueness::Unknown { .. } => "unknown",
        }
    }
}

/// Decides projective uniqueness of `pattern`'s matroid over `field` from its
/// scaled slack ideal: a zero-dimensional ideal whose points are the roots
/// of one univariate polynomial in some variable (every other variable is a
/// polynomial in it) is decided by counting those roots in the field.
pub fn projectively_unique<F: FieldRoots>(
    pattern: &SlackPattern,
    field: F,
    forest: Option<Forest>,
    opts: &GbOptions,
) -> Uniqueness<F> {
    match decide(pattern, field, forest, opts) {
        Ok(u) => u,
        Err(e) => Uniqueness::Unknown { reason: e.to_string() },
    }
}

fn decide<F: FieldRoots>(
    pattern: &SlackPattern,
    field: F,
    forest: Option<Forest>,
    opts: &GbOptions,
) -> Result<Uniqueness<F>, Error> {
    let scaling = forest.map_or(Scaling::SpanningForest, Scaling::Forest);
    let sopts = SlackIdealOptions { scaling, gb: opts.clone(), ..Default::default() };
    let si = slack_ideal(pattern, field.clone(), &sopts)?;
    let ring = si.ring().clone();
    let forest = si.forest.clone().expect("scaled ideal has a forest");
    let k = field;
    let gb = si.ideal.basis(opts)?;
    if gb.len() == 1 && gb[0].is_constant() {
        return Ok(Uniqueness::NoRealization { evidence: "the scaled slack ideal is the unit ideal".into() });
    }
    let fill = |free_vals: &[F::Elem]| -> NumericSlack<F> {
        let mut vals = Vec::with_capacity(pattern.nvars());
        let mut it = free_vals.iter();
        for v in 0..pattern.nvars() {
            vals.push(if forest.contains(v) { k.one() } else { it.next().unwrap().clone() });
        }
        NumericSlack::new(k.clone(), pattern.fill(&k, &vals))
    };
    if ring.nvars() == 0 {
        // everything fixed: the only candidate is the all-ones matrix
        let s = fill(&[]);
        return Ok(if check_slack(&k, s.matrix(), pattern.matroid())? {
            Uniqueness::Unique { slack: s, non_reduced: false, evidence: None }
        } else {
            Uniqueness::NoRealization { evidence: "the all-ones scaled matrix has the wrong rank".into() }
        });
    }
    let Some(q) = Quotient::new(&ring, &gb) else {
        let lms: Vec<Monomial> = gb.iter().filter_map(|g| g.leading_monomial().cloned()).collect();
        let dim = hilbert::dimension_by_independent_sets(&lms, ring.nvars());
        return Ok(Uniqueness::NotUnique {
            evidence: format!("the scaled slack variety has dimension {dim} (free parameters over the closure)"),
        });
    };
    let d = q.dim();
    // a variable whose minimal polynomial has degree dim(k[x]/I)
    let mut shape = None;
    for v in 0..ring.nvars() {
        let e = q.eliminant(v)?;
        if e.len() - 1 == d {
            shape = Some((v, UniPoly::new(k.clone(), e)));
            break;
        }
    }
    let Some((a, minpoly)) = shape else {
        return Ok(Uniqueness::Unknown {
            reason: format!("zero-dimensional of length {d} but no variable separates the points"),
        });
    };
    let name = ring.name(a).to_string();
    let text = minpoly.format_in(&name);
    let Some(roots) = k.roots(&minpoly) else {
        return Ok(Uniqueness::Unknown { reason: format!("could not find the roots of {text}") });
    };
    match roots.len() {
        0 => Ok(Uniqueness::NoRealization { evidence: format!("{text} has no roots in {}", k.name()) }),
        1 => {
            // express every variable as a polynomial in x_a modulo the ideal
            let xa = MultiPoly::var(&ring, a);
            let mut powers = Vec::with_capacity(d);
            let mut cur = MultiPoly::one(&ring);
            for _ in 0..d {
                powers.push(q.coords(&cur)?);
                cur = cur.mul(&xa);
            }
            let mut p = Matrix::filled(d, d, k.zero());
            for (j, col) in powers.iter().enumerate() {
                for (i, c) in col.iter().enumerate() {
                    p.set(i, j, c.clone());
                }
            }
            let r = &roots[0];
            let mut vals = Vec::with_capacity(ring.nvars());
            for v in 0..ring.nvars() {
                let target = q.coords(&MultiPoly::var(&ring, v))?;
                let c = solve(&k, &p, &target)
                    .ok_or_else(|| Error::Slack("variable is not a polynomial in the separating one".into()))?;
                vals.push(UniPoly::new(k.clone(), c).eval(r));
            }
            let s = fill(&vals);
            if !check_slack(&k, s.matrix(), pattern.matroid())? {
                return Ok(Uniqueness::Unknown { reason: "reconstructed point fails the slack check".into() });
            }
            Ok(Uniqueness::Unique { slack: s, non_reduced: !minpoly.is_squarefree(), evidence: (d > 1).then_some(text) })
        }
        _ => Ok(Uniqueness::NotUnique { evidence: format!("{text} has {} roots in {}", roots.len(), k.name()) }),
    }
}
