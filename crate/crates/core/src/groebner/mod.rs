//! Gröbner bases and the ideal operations built on them.

mod engine;
pub mod hilbert;
pub mod quotient;
mod saturate;

use std::sync::atomic::AtomicBool;
use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{AlgebraError, GbError};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{MultiPoly, PolyRing, Ring};

pub use saturate::{saturate, saturate_by_variables, SaturationStrategy};

/// Resource limits for one computation. A computation that hits a limit
/// reports [`GbError::BudgetExhausted`]; it never returns a partial basis.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    pub max_pairs: Option<u64>,
    pub deadline: Option<Instant>,
    pub cancel: Option<Arc<AtomicBool>>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_timeout(mut self, d: Duration) -> Self {
        self.deadline = Some(Instant::now() + d);
        self
    }

    pub fn with_max_pairs(mut self, n: u64) -> Self {
        self.max_pairs = Some(n);
        self
    }

    pub fn with_cancel(mut self, flag: Arc<AtomicBool>) -> Self {
        self.cancel = Some(flag);
        self
    }
}

/// Degree truncation with respect to a `Z^g` grading: pairs whose lcm has a
/// degree exceeding `bound` in some component are skipped. For inputs that
/// are homogeneous in the grading, the result is a Gröbner basis for all
/// elements of degree at most `bound`.
#[derive(Clone, Debug)]
pub struct Truncation {
    /// `weights[v]` is the degree vector of variable `v`.
    pub weights: Vec<Vec<u32>>,
    pub bound: Vec<u32>,
}

impl Truncation {
    pub fn total_degree(nvars: usize, bound: u32) -> Self {
        Truncation { weights: vec![vec![1]; nvars], bound: vec![bound] }
    }

    pub fn degree(&self, m: &Monomial) -> Vec<u32> {
        let mut d = vec![0u32; self.bound.len()];
        for v in m.support() {
            let e = m.exponent(v) as u32;
            for (acc, w) in d.iter_mut().zip(&self.weights[v]) {
                *acc += e * w;
            }
        }
        d
    }

    pub fn exceeds(&self, m: &Monomial) -> bool {
        self.degree(m).iter().zip(&self.bound).any(|(d, b)| d > b)
    }
}

#[derive(Clone, Debug, Default)]
pub struct GbOptions {
    pub budget: Budget,
    pub truncation: Option<Truncation>,
}

impl GbOptions {
    pub fn with_budget(budget: Budget) -> Self {
        GbOptions { budget, truncation: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GbStats {
    pub pairs: u64,
    pub zero_reductions: u64,
    pub product_criterion: u64,
    pub chain_criterion: u64,
    pub skipped_by_bound: u64,
    pub stripped: u64,
}

/// A computed reduced Gröbner basis with statistics.
#[derive(Clone, Debug)]
pub struct GbReport<F: Field> {
    pub basis: Vec<MultiPoly<F>>,
    pub order: MonomialOrder,
    pub stats: GbStats,
    pub elapsed: Duration,
    /// True when a truncation bound was in force.
    pub truncated: bool,
}

/// Serializable form of a [`GbReport`].
#[derive(Clone, Debug, Serialize)]
pub struct GbRecord {
    pub field: String,
    pub order: String,
    pub basis: Vec<String>,
    pub pairs_processed: u64,
    pub zero_reductions: u64,
    pub wall_ms: u128,
}

impl<F: Field> GbReport<F> {
    pub fn record(&self) -> GbRecord {
        GbRecord {
            field: self.basis.first().map_or_else(String::new, |p| p.field().name()),
            order: self.order.name(),
            basis: self.basis.iter().map(|p| p.to_string()).collect(),
            pairs_processed: self.stats.pairs,
            zero_reductions: self.stats.zero_reductions,
            wall_ms: self.elapsed.as_millis(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }
}

/// An ideal given by generators, with a lazily computed reduced Gröbner
/// basis under the ring's order.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: Ring<F>,
    gens: Vec<MultiPoly<F>>,
    gb: OnceLock<Arc<Vec<MultiPoly<F>>>>,
}

impl<F: Field> std::fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.gens.iter()).finish()
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Ring<F>, gens: Vec<MultiPoly<F>>) -> Result<Self, AlgebraError> {
        for g in &gens {
            if !PolyRing::same(g.ring(), ring) {
                return Err(AlgebraError::RingMismatch("generator from another ring".into()));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, gb: OnceLock::new() })
    }

    pub fn zero(ring: &Ring<F>) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &Ring<F>) -> Self {
        Ideal { ring: ring.clone(), gens: vec![MultiPoly::one(ring)], gb: OnceLock::new() }
    }

    /// Wraps a list already known to be a reduced Gröbner basis.
    pub(crate) fn from_basis(ring: &Ring<F>, basis: Vec<MultiPoly<F>>) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(Arc::new(basis.clone()));
        Ideal { ring: ring.clone(), gens: basis, gb: cell }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[MultiPoly<F>] {
        &self.gens
    }

    pub fn cached_basis(&self) -> Option<Arc<Vec<MultiPoly<F>>>> {
        self.gb.get().cloned()
    }

    /// Reduced Gröbner basis under the ring's order, computed once.
    pub fn basis(&self, opts: &GbOptions) -> Result<Arc<Vec<MultiPoly<F>>>, GbError> {
        if let Some(b) = self.gb.get() {
            return Ok(b.clone());
        }
        let rep = groebner_in_ring(&self.ring, &self.gens, opts)?;
        if rep.truncated {
            return Ok(Arc::new(rep.basis));
        }
        Ok(self.gb.get_or_init(|| Arc::new(rep.basis)).clone())
    }

    pub fn contains(&self, f: &MultiPoly<F>, opts: &GbOptions) -> Result<bool, GbError> {
        let b = self.basis(opts)?;
        Ok(normal_form(f, &b)?.is_zero())
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal<F>, opts: &GbOptions) -> Result<bool, GbError> {
        let b = self.basis(opts)?;
        for g in &other.gens {
            let g = g.to_ring(&self.ring)?;
            if !normal_form(&g, &b)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality by two-way membership.
    pub fn same_ideal(&self, other: &Ideal<F>, opts: &GbOptions) -> Result<bool, GbError> {
        Ok(self.contains_ideal(other, opts)? && other.contains_ideal(self, opts)?)
    }

    pub fn is_unit(&self, opts: &GbOptions) -> Result<bool, GbError> {
        let b = self.basis(opts)?;
        Ok(b.len() == 1 && b[0].is_constant())
    }

    /// The same ideal in another ring with the same variable names.
    pub fn to_ring(&self, target: &Ring<F>) -> Result<Self, AlgebraError> {
        let gens = self.gens.iter().map(|g| g.to_ring(target)).collect::<Result<Vec<_>, _>>()?;
        Ideal::new(target, gens)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Self, AlgebraError> {
        let mut gens = self.gens.clone();
        for g in &other.gens {
            gens.push(g.to_ring(&self.ring)?);
        }
        Ideal::new(&self.ring, gens)
    }
}

pub(crate) fn run_engine<F: Field>(
    ring: &Ring<F>,
    gens: &[MultiPoly<F>],
    opts: &GbOptions,
    strip: Option<Vec<bool>>,
) -> Result<GbReport<F>, GbError> {
    let start = Instant::now();
    let k = ring.field();
    let ord = ring.order();
    let mut eng = engine::Engine::new(k, ord, opts);
    if let Some(s) = strip {
        eng.set_strip(s);
    }
    eng.add_inputs(gens.iter().map(|g| g.terms().to_vec()).collect());
    eng.run()?;
    let stats = eng.stats.clone();
    let raw = eng.finish();
    let basis = raw.into_iter().map(|t| MultiPoly::from_sorted(ring, t).normalized()).collect();
    Ok(GbReport {
        basis,
        order: ord.clone(),
        stats,
        elapsed: start.elapsed(),
        truncated: opts.truncation.is_some(),
    })
}

fn groebner_in_ring<F: Field>(
    ring: &Ring<F>,
    gens: &[MultiPoly<F>],
    opts: &GbOptions,
) -> Result<GbReport<F>, GbError> {
    run_engine(ring, gens, opts, None)
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn groebner<F: Field>(
    ideal: &Ideal<F>,
    order: &MonomialOrder,
    opts: &GbOptions,
) -> Result<GbReport<F>, GbError> {
    if ideal.ring.nvars() == 0 {
        return Err(AlgebraError::Usage("empty variable universe".into()).into());
    }
    if order == ideal.ring.order() {
        if let (Some(b), None) = (ideal.gb.get(), &opts.truncation) {
            return Ok(GbReport {
                basis: b.to_vec(),
                order: order.clone(),
                stats: GbStats::default(),
                elapsed: Duration::ZERO,
                truncated: false,
            });
        }
        let rep = groebner_in_ring(&ideal.ring, &ideal.gens, opts)?;
        if !rep.truncated {
            let _ = ideal.gb.set(Arc::new(rep.basis.clone()));
        }
        return Ok(rep);
    }
    let ring = ideal.ring.with_order(order.clone());
    let gens = ideal.gens.iter().map(|g| g.to_ring(&ring)).collect::<Result<Vec<_>, _>>()?;
    groebner_in_ring(&ring, &gens, opts)
}

/// Remainder of `f` on division by `gb` (full reduction). `gb` must be a
/// Gröbner basis in `f`'s ring for the remainder to be canonical.
pub fn normal_form<F: Field>(f: &MultiPoly<F>, gb: &[MultiPoly<F>]) -> Result<MultiPoly<F>, AlgebraError> {
    let ring = f.ring();
    let k = ring.field();
    let ord = ring.order();
    for g in gb {
        if !PolyRing::same(g.ring(), ring) {
            return Err(AlgebraError::RingMismatch("basis from another ring".into()));
        }
    }
    let leads: Vec<(&Monomial, &F::Elem, &MultiPoly<F>)> = gb
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (g.leading_monomial().unwrap(), g.leading_coeff().unwrap(), g))
        .collect();
    let mut cur: Vec<_> = f.terms().to_vec();
    let mut done = Vec::new();
    let mut pos = 0;
    while pos < cur.len() {
        let m = &cur[pos].0;
        let hit = leads.iter().filter(|(lm, _, _)| lm.divides(m)).min_by_key(|(_, _, g)| g.len());
        match hit {
            Some((lm, lc, g)) => {
                let q = m.div(lm).unwrap();
                let c = k.neg(&k.div(&cur[pos].1, lc).unwrap());
                let rest = crate::poly::merge_lin(k, ord, &cur[pos + 1..], &g.terms()[1..], &c, Some(&q));
                done.extend(cur.drain(..pos));
                cur = rest;
                pos = 0;
            }
            None => pos += 1,
        }
    }
    done.extend(cur);
    Ok(MultiPoly::from_sorted(ring, done))
}

/// `I ∩ k[remaining variables]`, returned in the subring of the remaining
/// variables (degrevlex, names kept).
pub fn eliminate<F: Field>(
    ideal: &Ideal<F>,
    drop: &[usize],
    opts: &GbOptions,
) -> Result<Ideal<F>, GbError> {
    let n = ideal.ring.nvars();
    if let Some(&bad) = drop.iter().find(|&&v| v >= n) {
        return Err(AlgebraError::UnknownVariable(format!("index {bad}")).into());
    }
    let mut is_drop = vec![false; n];
    for &v in drop {
        is_drop[v] = true;
    }
    let keep_names: Vec<String> =
        (0..n).filter(|&v| !is_drop[v]).map(|v| ideal.ring.name(v).to_string()).collect();
    let sub = PolyRing::new(ideal.ring.field().clone(), keep_names, MonomialOrder::DegRevLex);
    if drop.is_empty() {
        return Ok(ideal.to_ring(&sub)?);
    }
    let rep = groebner(ideal, &MonomialOrder::elimination(drop, n), opts)?;
    let mut kept = Vec::new();
    for g in rep.basis {
        if g.variables().iter().all(|&v| !is_drop[v]) {
            kept.push(g.to_ring(&sub)?);
        }
    }
    Ok(Ideal::new(&sub, kept)?)
}

pub fn is_unit_ideal<F: Field>(ideal: &Ideal<F>, opts: &GbOptions) -> Result<bool, GbError> {
    ideal.is_unit(opts)
}

/// Krull dimension of `k[x]/I` and the degree of its top-dimensional part.
pub fn dimension_and_degree<F: Field>(
    ideal: &Ideal<F>,
    opts: &GbOptions,
) -> Result<(usize, u64), GbError> {
    let rep = groebner(ideal, &MonomialOrder::DegRevLex, opts)?;
    if rep.is_unit() {
        return Err(AlgebraError::Usage("the unit ideal has no dimension".into()).into());
    }
    let lms: Vec<Monomial> = rep.basis.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
    let hs = hilbert::HilbertSeries::of_monomial_ideal(&lms, ideal.ring.nvars());
    Ok((hs.dimension, hs.degree))
}

/// Outcome of a decision procedure run under a budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Decision {
    Proven,
    Disproven,
    Unknown(String),
}

impl From<Result<bool, GbError>> for Decision {
    fn from(r: Result<bool, GbError>) -> Self {
        match r {
            Ok(true) => Decision::Proven,
            Ok(false) => Decision::Disproven,
            Err(e) => Decision::Unknown(e.to_string()),
        }
    }
}

#[cfg(test)]
mod tests;
