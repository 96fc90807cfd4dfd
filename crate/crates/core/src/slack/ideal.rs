//! Slack ideals: `(rank+1)`-minors of the symbolic slack matrix saturated by
//! the product of its variables.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::Field;
use crate::groebner::{saturate_by_variables, GbOptions, Ideal};
use crate::matroid::ElemSet;
use crate::minors::MinorCache;
use crate::poly::{MultiPoly, Ring};

use super::graph::{Forest, NonIncidenceGraph};
use super::SlackPattern;

/// Which minors generate the ideal before saturation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MinorStrategy {
    /// Every `(rank+1)`-minor.
    All,
    /// Only the minors containing the diagonal block on a basis and its
    /// fundamental hyperplanes. That block's determinant is a monomial, so
    /// both choices have the same saturation.
    #[default]
    Bordered,
}

#[derive(Clone, Debug, Default)]
pub enum Scaling {
    None,
    /// The deterministic spanning forest of the non-incidence graph.
    #[default]
    SpanningForest,
    Forest(Forest),
}

#[derive(Clone, Debug, Default)]
pub struct SlackIdealOptions {
    pub scaling: Scaling,
    pub minors: MinorStrategy,
    pub gb: GbOptions,
}

impl SlackIdealOptions {
    pub fn unscaled() -> Self {
        SlackIdealOptions { scaling: Scaling::None, ..Default::default() }
    }
}

pub struct SlackIdeal<F: Field> {
    pub ideal: Ideal<F>,
    /// Variables set to one, when scaled.
    pub forest: Option<Forest>,
    /// Number of distinct nonzero minors used.
    pub minor_count: usize,
    pub warnings: Vec<String>,
}

impl<F: Field> SlackIdeal<F> {
    pub fn ring(&self) -> &Ring<F> {
        self.ideal.ring()
    }
}

/// The nonzero `(rank+1)`-minors (normalized, deduplicated) of the slack
/// matrix restricted to `columns` (all columns when `None`), with the
/// `fixed` variables set to one. Returns the ring of the remaining
/// variables.
pub fn minor_generators<F: Field>(
    pattern: &SlackPattern,
    field: F,
    columns: Option<&[usize]>,
    fixed: Option<&[bool]>,
    strategy: MinorStrategy,
) -> Result<(Ring<F>, Vec<MultiPoly<F>>), Error> {
    let none = vec![false; pattern.nvars()];
    let fixed_mask = fixed.unwrap_or(&none);
    let all_cols: Vec<usize> = (0..pattern.ncols()).collect();
    let cols = columns.unwrap_or(&all_cols);
    if let Some(&bad) = cols.iter().find(|&&c| c >= pattern.ncols()) {
        return Err(Error::Input(format!("column {} out of range", bad + 1)));
    }
    // only variables occurring in the chosen columns
    let used: Vec<bool> = (0..pattern.nvars())
        .map(|v| !fixed_mask[v] && cols.contains(&pattern.position(v).1))
        .collect();
    let names: Vec<String> = (0..pattern.nvars()).filter(|&v| used[v]).map(|v| pattern.var_name(v)).collect();
    let ring = crate::poly::PolyRing::new(field, names, crate::monomial::MonomialOrder::DegRevLex);
    let sub: Vec<Vec<MultiPoly<F>>> = (0..pattern.nrows())
        .map(|i| cols.iter().map(|&j| entry(pattern, &ring, fixed_mask, i, j)).collect())
        .collect();
    let k = pattern.matroid().rank() + 1;
    let mut gens: Vec<MultiPoly<F>> = match strategy {
        MinorStrategy::All => {
            let mut cache = MinorCache::new(&ring, &sub)?;
            cache.all_minors(k).into_iter().map(|m| m.det).collect()
        }
        MinorStrategy::Bordered => {
            if columns.is_some() {
                return Err(Error::Input("bordered minors need the full slack matrix".into()));
            }
            bordered_minors(pattern, &ring, &sub)?
        }
    };
    for g in gens.iter_mut() {
        *g = g.normalized();
    }
    gens.retain(|g| !g.is_zero());
    gens.sort_by_key(|g| g.to_string());
    gens.dedup();
    Ok((ring, gens))
}

fn entry<F: Field>(
    pattern: &SlackPattern,
    ring: &Ring<F>,
    fixed: &[bool],
    i: usize,
    j: usize,
) -> MultiPoly<F> {
    match pattern.var(i, j) {
        None => MultiPoly::zero(ring),
        Some(v) if fixed[v] => MultiPoly::one(ring),
        Some(v) => MultiPoly::var(ring, ring.var_index(&pattern.var_name(v)).unwrap()),
    }
}

/// Rows of the lexicographically first basis and columns of its fundamental
/// hyperplanes (the hyperplane spanned by the basis minus one element).
pub(crate) fn pivot_block(pattern: &SlackPattern) -> (Vec<usize>, Vec<usize>) {
    let m = pattern.matroid();
    let b = m.bases()[0];
    let elems = b.elems();
    let mut cols = Vec::new();
    for &e in &elems {
        let h = m.closure_of(ElemSet(b.0).without(e));
        let j = m.hyperplanes().iter().position(|&x| x == h).expect("closure of a d-subset of a basis");
        cols.push(j);
    }
    cols.sort_unstable();
    (elems, cols)
}

fn bordered_minors<F: Field>(
    pattern: &SlackPattern,
    ring: &Ring<F>,
    entries: &[Vec<MultiPoly<F>>],
) -> Result<Vec<MultiPoly<F>>, Error> {
    let (rows, cols) = pivot_block(pattern);
    let mut cache = MinorCache::new(ring, entries)?;
    let mut out = Vec::new();
    for i in 0..pattern.nrows() {
        if rows.contains(&i) {
            continue;
        }
        let mut r = rows.clone();
        r.push(i);
        r.sort_unstable();
        for j in 0..pattern.ncols() {
            if cols.contains(&j) {
                continue;
            }
            let mut c = cols.clone();
            c.push(j);
            c.sort_unstable();
            out.push(cache.minor(&r, &c)?);
        }
    }
    Ok(out)
}

/// The slack ideal, scaled by a spanning forest unless `opts.scaling` is
/// [`Scaling::None`].
pub fn slack_ideal<F: Field>(
    pattern: &SlackPattern,
    field: F,
    opts: &SlackIdealOptions,
) -> Result<SlackIdeal<F>, Error> {
    let forest = match &opts.scaling {
        Scaling::None => None,
        Scaling::SpanningForest => Some(NonIncidenceGraph::new(pattern).spanning_forest()),
        Scaling::Forest(f) => Some(f.clone()),
    };
    if let Some(f) = &forest {
        f.check(&NonIncidenceGraph::new(pattern))?;
    }
    let fixed = forest.as_ref().map(|f| f.mask(pattern.nvars()));
    let (ring, gens) = minor_generators(pattern, field, None, fixed.as_deref(), opts.minors)?;
    let mut warnings = Vec::new();
    let minor_count = gens.len();
    if gens.is_empty() {
        let w = "the slack matrix has no nonzero minors of size rank+1; the slack ideal is zero".to_string();
        log::warn!("{w}");
        warnings.push(w);
        return Ok(SlackIdeal { ideal: Ideal::zero(&ring), forest, minor_count, warnings });
    }
    let ideal = Ideal::new(&ring, gens)?;
    let vars: Vec<usize> = (0..ring.nvars()).collect();
    let sat = saturate_by_variables(&ideal, &vars, &opts.gb)?;
    Ok(SlackIdeal { ideal: sat, forest, minor_count, warnings })
}
