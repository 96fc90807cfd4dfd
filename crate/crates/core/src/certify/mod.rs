//! Realizability certificates: monomials in minor ideals of slack
//! submatrices, unit scaled slack ideals, and explicit realizations.

mod check;
mod obstruction;
mod oracle;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, GbError};
use crate::field::{Field, FieldSpec, PrimeField};
use crate::groebner::{groebner, normal_form, Budget, GbOptions, Ideal, Truncation};
use crate::matroid::{ElemSet, Matroid};
use crate::minors::subsets;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{MultiPoly, Ring};
use crate::slack::{
    minor_generators, projectively_unique, slack_ideal, Forest, MinorStrategy, Scaling, SlackIdealOptions,
    SlackPattern, Uniqueness,
};
use crate::univariate::FieldRoots;

pub use check::{check_certificate, Verification};
pub use obstruction::{obstruction_polynomials, Obstruction, ObstructionReport};
pub use oracle::{oracle_search, OracleOptions, OracleResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    NonRealizableMonomial,
    NonRealizableUnitIdeal,
    RealizableWitness,
    Unknown,
}

impl CertificateKind {
    pub fn label(self) -> &'static str {
        match self {
            CertificateKind::NonRealizableMonomial => "non-realizable-monomial",
            CertificateKind::NonRealizableUnitIdeal => "non-realizable-unit-ideal",
            CertificateKind::RealizableWitness => "realizable-witness",
            CertificateKind::Unknown => "unknown",
        }
    }

    pub fn is_non_realizable(self) -> bool {
        matches!(self, CertificateKind::NonRealizableMonomial | CertificateKind::NonRealizableUnitIdeal)
    }
}

/// A monomial in the `(rank+1)`-minor ideal of a column submatrix of the
/// symbolic slack matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialCertificate {
    /// 1-based slack matrix columns.
    pub columns: Vec<usize>,
    /// The hyperplanes of those columns, for cross-checking the order.
    pub hyperplanes: Vec<String>,
    /// Elements whose rows carry a variable in the submatrix.
    pub rows: Vec<String>,
    pub monomial: String,
    /// Size and SHA-256 of the degree-truncated Gröbner basis (degrevlex,
    /// truncated at the monomial's row/column degree) used for the test.
    pub gb_size: usize,
    pub gb_fingerprint: String,
}

/// The scaled slack ideal is the unit ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitIdealCertificate {
    /// Positions fixed to one, as (element label, 1-based column).
    pub forest: Vec<(String, usize)>,
    pub minors: MinorStrategy,
    pub minor_count: usize,
    pub pairs_processed: u64,
    pub zero_reductions: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Payload {
    Monomial(MonomialCertificate),
    UnitIdeal(UnitIdealCertificate),
    /// Columns realize the matroid.
    Witness { matrix: Vec<Vec<String>> },
    Unknown { reasons: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    pub strategy: String,
    pub outcome: String,
    pub wall_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub field: FieldSpec,
    /// The strategy that concluded, if any.
    pub strategy: Option<String>,
    pub payload: Payload,
    pub steps: Vec<StepReport>,
}

impl Certificate {
    /// The same certificate without wall-clock data.
    pub fn without_timing(&self) -> Self {
        let mut c = self.clone();
        for s in &mut c.steps {
            s.wall_ms = 0;
        }
        c
    }
}

/// How `Submatrices` picks column subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColumnChoice {
    Heuristic { max_subsets: usize },
    /// 0-based column index lists.
    Explicit(Vec<Vec<usize>>),
}

impl Default for ColumnChoice {
    fn default() -> Self {
        ColumnChoice::Heuristic { max_subsets: 16 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Product of the variables of column submatrices.
    Submatrices(ColumnChoice),
    /// Product of all variables against the full minor ideal.
    FullProduct { max_minors: u64 },
    /// Scaled slack ideal: unit ideal, or a unique point read off as a
    /// realization.
    ScaledUnit,
    /// Finite-field realization search; prime fields only.
    Oracle { max_nodes: u64 },
}

impl Strategy {
    pub fn name(&self) -> &'static str {
        match self {
            Strategy::Submatrices(_) => "submatrices",
            Strategy::FullProduct { .. } => "full-product",
            Strategy::ScaledUnit => "scaled-unit",
            Strategy::Oracle { .. } => "oracle",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s.trim() {
            "submatrices" => Strategy::Submatrices(ColumnChoice::default()),
            "full-product" => Strategy::FullProduct { max_minors: DEFAULT_MAX_MINORS },
            "scaled-unit" => Strategy::ScaledUnit,
            "oracle" => Strategy::Oracle { max_nodes: DEFAULT_ORACLE_NODES },
            other => {
                return Err(Error::Input(format!(
                    "unknown strategy {other:?} (expected submatrices, full-product, scaled-unit or oracle)"
                )))
            }
        })
    }
}

pub const DEFAULT_MAX_MINORS: u64 = 50_000;
pub const DEFAULT_ORACLE_NODES: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    pub timeout: Option<Duration>,
    pub max_pairs: Option<u64>,
}

impl Limits {
    fn gb_options(&self) -> GbOptions {
        let mut b = Budget::unlimited();
        if let Some(t) = self.timeout {
            b = b.with_timeout(t);
        }
        if let Some(n) = self.max_pairs {
            b = b.with_max_pairs(n);
        }
        GbOptions::with_budget(b)
    }
}

/// Strategies tried in order; the first conclusive one wins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyPlan {
    pub steps: Vec<(Strategy, Limits)>,
    /// Forest for the scaled ideal; the default spanning forest otherwise.
    pub forest: Option<Forest>,
}

/// Per-step timeout of the monomial strategies in the default plan. They
/// can run for a long time on realizable matroids, where they never
/// succeed.
pub const DEFAULT_MONOMIAL_TIMEOUT: Duration = Duration::from_secs(10);

impl Default for StrategyPlan {
    fn default() -> Self {
        let mut plan = Self::with_limits(Limits::default());
        for (s, l) in &mut plan.steps {
            if matches!(s, Strategy::Submatrices(_) | Strategy::FullProduct { .. }) {
                l.timeout = Some(DEFAULT_MONOMIAL_TIMEOUT);
            }
        }
        plan
    }
}

impl StrategyPlan {
    pub fn with_limits(limits: Limits) -> Self {
        StrategyPlan {
            steps: vec![
                (Strategy::Submatrices(ColumnChoice::default()), limits),
                (Strategy::FullProduct { max_minors: DEFAULT_MAX_MINORS }, limits),
                (Strategy::ScaledUnit, limits),
                (Strategy::Oracle { max_nodes: DEFAULT_ORACLE_NODES }, limits),
            ],
            forest: None,
        }
    }

    pub fn only(strategy: Strategy, limits: Limits) -> Self {
        StrategyPlan { steps: vec![(strategy, limits)], forest: None }
    }

    /// Comma-separated strategy names.
    pub fn parse(list: &str, limits: Limits) -> Result<Self, Error> {
        let steps = list.split(',').map(|s| Ok((s.parse()?, limits))).collect::<Result<Vec<_>, Error>>()?;
        if steps.is_empty() {
            return Err(Error::Input("empty strategy list".into()));
        }
        Ok(StrategyPlan { steps, forest: None })
    }
}

/// Result of [`final_polynomial_search`]. `hit == None` proves nothing.
#[derive(Clone, Debug, Default)]
pub struct SearchReport {
    pub hit: Option<MonomialCertificate>,
    /// 0-based column subsets tested, in order.
    pub tried: Vec<Vec<usize>>,
    /// Subsets abandoned on budget, with the reason.
    pub gave_up: Vec<(Vec<usize>, String)>,
}

/// Row and column gradings of the slack variables in `ring` restricted to
/// `columns`; every minor of the submatrix is homogeneous in both.
pub(crate) fn grading<F: Field>(pattern: &SlackPattern, ring: &Ring<F>, columns: &[usize]) -> Vec<Vec<u32>> {
    let n = pattern.nrows();
    (0..ring.nvars())
        .map(|v| {
            let pv = pattern.var_by_name(ring.name(v)).expect("ring variables come from the pattern");
            let (i, j) = pattern.position(pv);
            let mut w = vec![0u32; n + columns.len()];
            w[i] = 1;
            w[n + columns.iter().position(|&c| c == j).expect("variable in a chosen column")] = 1;
            w
        })
        .collect()
}

pub(crate) fn fingerprint<F: Field>(basis: &[MultiPoly<F>]) -> String {
    let mut h = Sha256::new();
    for g in basis {
        h.update(g.to_string().as_bytes());
        h.update(b"\n");
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Gröbner basis of the minor ideal of the column submatrix, truncated at
/// the multidegree of `monomial`, and whether `monomial` reduces to zero.
pub(crate) fn truncated_membership<F: Field>(
    ring: &Ring<F>,
    gens: Vec<MultiPoly<F>>,
    weights: Vec<Vec<u32>>,
    monomial: &Monomial,
    opts: &GbOptions,
) -> Result<(Vec<MultiPoly<F>>, bool), Error> {
    let mut tr = Truncation { bound: vec![0; weights.first().map_or(0, |w| w.len())], weights };
    tr.bound = tr.degree(monomial);
    let o = GbOptions { budget: opts.budget.clone(), truncation: Some(tr) };
    let rep = groebner(&Ideal::new(ring, gens)?, &MonomialOrder::DegRevLex, &o)?;
    let f = MultiPoly::monomial(ring, monomial.clone(), ring.field().one());
    let zero = normal_form(&f, &rep.basis)?.is_zero();
    Ok((rep.basis, zero))
}

/// Tests whether the product of the variables of the column submatrix lies
/// in its `(rank+1)`-minor ideal.
pub fn monomial_test<F: Field>(
    pattern: &SlackPattern,
    field: F,
    columns: &[usize],
    opts: &GbOptions,
) -> Result<Option<MonomialCertificate>, Error> {
    let mut cols = columns.to_vec();
    cols.sort_unstable();
    cols.dedup();
    let (ring, gens) = minor_generators(pattern, field, Some(&cols), None, MinorStrategy::All)?;
    if gens.is_empty() || ring.nvars() == 0 {
        return Ok(None);
    }
    let mono = Monomial::from_exponents(vec![1; ring.nvars()]);
    let weights = grading(pattern, &ring, &cols);
    let (basis, member) = truncated_membership(&ring, gens, weights, &mono, opts)?;
    if !member {
        return Ok(None);
    }
    let m = pattern.matroid();
    let rows = (0..pattern.nrows())
        .filter(|&i| cols.iter().any(|&j| pattern.var(i, j).is_some()))
        .map(|i| m.label(i))
        .collect();
    Ok(Some(MonomialCertificate {
        columns: cols.iter().map(|c| c + 1).collect(),
        hyperplanes: cols.iter().map(|&c| m.set_label(m.hyperplanes()[c])).collect(),
        rows,
        monomial: MultiPoly::monomial(&ring, mono, ring.field().one()).to_string(),
        gb_size: basis.len(),
        gb_fingerprint: fingerprint(&basis),
    }))
}

/// Column subsets that contain every hyperplane with at least `rank`
/// elements and leave no row empty, by size from `rank + 2` up, at most
/// `max` of them.
pub fn heuristic_subsets(m: &Matroid, max: usize) -> Vec<Vec<usize>> {
    let hs = m.hyperplanes();
    let (big, rest): (Vec<usize>, Vec<usize>) = (0..hs.len()).partition(|&j| hs[j].len() >= m.rank());
    let covers = |cols: &[usize]| (0..m.n()).all(|i| cols.iter().any(|&j| !hs[j].contains(i)));
    let mut out = Vec::new();
    let start = (m.rank() + 2).max(big.len()).min(hs.len());
    for size in start..=hs.len() {
        for extra in subsets(rest.len(), size - big.len()) {
            if out.len() >= max {
                return out;
            }
            let mut cols = big.clone();
            cols.extend(extra.iter().map(|&i| rest[i]));
            cols.sort_unstable();
            if covers(&cols) {
                out.push(cols);
            }
        }
    }
    out
}

/// Column indices of hyperplanes given by element labels.
pub fn columns_of(m: &Matroid, hyperplanes: &[Vec<usize>]) -> Result<Vec<usize>, Error> {
    hyperplanes
        .iter()
        .map(|h| {
            let elems = h
                .iter()
                .map(|&l| {
                    l.checked_sub(m.first_label())
                        .filter(|&e| e < m.n())
                        .ok_or_else(|| Error::Input(format!("no element labelled {l}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let s = ElemSet::from_slice(&elems);
            m.hyperplanes()
                .iter()
                .position(|&x| x == s)
                .ok_or_else(|| Error::Input(format!("{h:?} is not a hyperplane")))
        })
        .collect()
}

/// Looks for a monomial certificate among column submatrices. Absence of a
/// hit proves nothing.
pub fn final_polynomial_search<F: Field>(
    pattern: &SlackPattern,
    field: F,
    choice: &ColumnChoice,
    opts: &GbOptions,
) -> SearchReport {
    let candidates = match choice {
        ColumnChoice::Heuristic { max_subsets } => heuristic_subsets(pattern.matroid(), *max_subsets),
        ColumnChoice::Explicit(list) => list.clone(),
    };
    let mut report = SearchReport::default();
    for cols in candidates {
        report.tried.push(cols.clone());
        match monomial_test(pattern, field.clone(), &cols, opts) {
            Ok(Some(c)) => {
                report.hit = Some(c);
                break;
            }
            Ok(None) => {}
            Err(e) => {
                let out_of_budget = matches!(e, Error::Gb(GbError::BudgetExhausted { .. } | GbError::Cancelled));
                report.gave_up.push((cols, e.to_string()));
                if out_of_budget {
                    break;
                }
            }
        }
    }
    report
}

/// Upper bound on the number of `(rank+1)`-minors of the full matrix.
fn minor_count_bound(pattern: &SlackPattern) -> u64 {
    let k = pattern.matroid().rank() as u64 + 1;
    binomial(pattern.nrows() as u64, k).saturating_mul(binomial(pattern.ncols() as u64, k))
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

enum StepOutcome {
    Done(CertificateKind, Payload),
    Inconclusive(String),
}

fn witness_strings<F: Field>(k: &F, rows: Vec<Vec<F::Elem>>) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(|x| k.format(x)).collect()).collect()
}

fn run_step<F: FieldRoots>(
    pattern: &SlackPattern,
    field: &F,
    forest: Option<&Forest>,
    strategy: &Strategy,
    limits: &Limits,
) -> Result<StepOutcome, Error> {
    let opts = limits.gb_options();
    let m = pattern.matroid();
    match strategy {
        Strategy::Submatrices(choice) => {
            let r = final_polynomial_search(pattern, field.clone(), choice, &opts);
            Ok(match r.hit {
                Some(c) => StepOutcome::Done(CertificateKind::NonRealizableMonomial, Payload::Monomial(c)),
                None if r.gave_up.is_empty() => {
                    StepOutcome::Inconclusive(format!("no monomial in {} submatrices", r.tried.len()))
                }
                None => StepOutcome::Inconclusive(format!(
                    "no monomial in {} submatrices ({} stopped: {})",
                    r.tried.len(),
                    r.gave_up.len(),
                    r.gave_up[0].1
                )),
            })
        }
        Strategy::FullProduct { max_minors } => {
            let bound = minor_count_bound(pattern);
            if bound > *max_minors {
                return Ok(StepOutcome::Inconclusive(format!(
                    "skipped: up to {bound} minors exceeds the limit {max_minors}"
                )));
            }
            let cols: Vec<usize> = (0..pattern.ncols()).collect();
            Ok(match monomial_test(pattern, field.clone(), &cols, &opts)? {
                Some(c) => StepOutcome::Done(CertificateKind::NonRealizableMonomial, Payload::Monomial(c)),
                None => StepOutcome::Inconclusive("the product of all variables is not in the minor ideal".into()),
            })
        }
        Strategy::ScaledUnit => {
            let scaling = forest.map_or(Scaling::SpanningForest, |f| Scaling::Forest(f.clone()));
            let so = SlackIdealOptions { scaling, minors: MinorStrategy::Bordered, gb: opts.clone() };
            let si = slack_ideal(pattern, field.clone(), &so)?;
            let rep = groebner(&si.ideal, &MonomialOrder::DegRevLex, &opts)?;
            if rep.is_unit() {
                let f = si.forest.clone().expect("scaled");
                let forest = f
                    .edges()
                    .iter()
                    .map(|&v| {
                        let (i, j) = pattern.position(v);
                        (m.label(i), j + 1)
                    })
                    .collect();
                return Ok(StepOutcome::Done(
                    CertificateKind::NonRealizableUnitIdeal,
                    Payload::UnitIdeal(UnitIdealCertificate {
                        forest,
                        minors: MinorStrategy::Bordered,
                        minor_count: si.minor_count,
                        pairs_processed: rep.stats.pairs,
                        zero_reductions: rep.stats.zero_reductions,
                    }),
                ));
            }
            Ok(match projectively_unique(pattern, field.clone(), si.forest.clone(), &opts) {
                Uniqueness::Unique { slack, .. } => {
                    let v = slack.row_configuration()?;
                    StepOutcome::Done(
                        CertificateKind::RealizableWitness,
                        Payload::Witness { matrix: witness_strings(field, v.matrix().rows()) },
                    )
                }
                Uniqueness::NotUnique { evidence } => {
                    StepOutcome::Inconclusive(format!("scaled slack ideal is not a single point: {evidence}"))
                }
                Uniqueness::NoRealization { evidence } => {
                    StepOutcome::Inconclusive(format!("scaled slack variety has no points over {}: {evidence}", field.name()))
                }
                Uniqueness::Unknown { reason } => StepOutcome::Inconclusive(reason),
            })
        }
        Strategy::Oracle { max_nodes } => {
            let FieldSpec::Prime(p) = field.spec() else {
                return Ok(StepOutcome::Inconclusive("the oracle needs a prime field".into()));
            };
            let k = PrimeField::new(p)?;
            let o = OracleOptions { max_nodes: *max_nodes, timeout: limits.timeout };
            Ok(match oracle_search(m, &k, &o) {
                OracleResult::Found(v) => StepOutcome::Done(
                    CertificateKind::RealizableWitness,
                    Payload::Witness { matrix: witness_strings(&k, v.matrix().rows()) },
                ),
                OracleResult::Exhausted { nodes } => {
                    StepOutcome::Inconclusive(format!("no realization over GF({p}) ({nodes} nodes searched)"))
                }
                OracleResult::Unknown { reason } => StepOutcome::Inconclusive(reason),
            })
        }
    }
}

/// Runs the plan's strategies in order and returns the first conclusive
/// certificate. Failures and budget exhaustion become `Unknown`.
pub fn certify<F: FieldRoots>(m: &Matroid, field: F, plan: &StrategyPlan) -> Certificate {
    let pattern = SlackPattern::new(m);
    let mut steps = Vec::new();
    let mut reasons = Vec::new();
    for (strategy, limits) in &plan.steps {
        let start = Instant::now();
        let out = run_step(&pattern, &field, plan.forest.as_ref(), strategy, limits)
            .unwrap_or_else(|e| StepOutcome::Inconclusive(e.to_string()));
        let wall_ms = start.elapsed().as_millis();
        match out {
            StepOutcome::Done(kind, payload) => {
                steps.push(StepReport { strategy: strategy.name().into(), outcome: kind.label().into(), wall_ms });
                return Certificate { kind, field: field.spec(), strategy: Some(strategy.name().into()), payload, steps };
            }
            StepOutcome::Inconclusive(why) => {
                reasons.push(format!("{}: {why}", strategy.name()));
                steps.push(StepReport { strategy: strategy.name().into(), outcome: why, wall_ms });
            }
        }
    }
    Certificate {
        kind: CertificateKind::Unknown,
        field: field.spec(),
        strategy: None,
        payload: Payload::Unknown { reasons },
        steps,
    }
}
