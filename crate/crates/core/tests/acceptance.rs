//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line, with its wall time against
//! a pinned budget. Exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::error::Error as StdError;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slackmat::certify::{
    certify, check_certificate, columns_of, final_polynomial_search, obstruction_polynomials, oracle_search,
    CertificateKind, ColumnChoice, Limits, OracleOptions, OracleResult, Payload, Strategy, StrategyPlan,
};
use slackmat::grassmann::{grassmannian_ideal, plucker_ideal, plucker_vector, universal_projections, UniversalOptions};
use slackmat::groebner::{
    dimension_and_degree, normal_form, saturate, Budget, GbOptions, Ideal, SaturationStrategy,
};
use slackmat::io::{example, MatroidSpec, EXAMPLE_NAMES};
use slackmat::linalg::Matrix;
use slackmat::matroid::{Matroid, PointConfiguration};
use slackmat::slack::{
    check_slack, cycle_ideal, equivalence, minor_generators, projectively_unique, slack_ideal, slack_of_realization,
    CycleOptions, CycleSet, EquivalenceMode, MinorStrategy, NonIncidenceGraph, NumericSlack, SlackIdealOptions,
    SlackPattern, Uniqueness, DEFAULT_CYCLE_CAP,
};
use slackmat::{Field, Monomial, MultiPoly, PolyRing, PrimeField, Rational, Rationals, Ring};

type Outcome = Result<String, Box<dyn StdError>>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+).into());
        }
    };
}

// Reference values.
const M4_VARIABLES: usize = 24;
const M4_CODIMENSION: usize = 12;
const M4_DEGREE: u64 = 293;
const M4_TABLE_BINOMIALS: usize = 72;
const M4_SIMPLE_CYCLES: usize = 1104;
const FANO_CHORDLESS_CYCLES: usize = 126;
const MEMBERSHIP_LIMIT: Duration = Duration::from_secs(1);

fn spec(name: &str) -> Result<(MatroidSpec, Matroid, SlackPattern), Box<dyn StdError>> {
    let s = example(name)?;
    let m = s.matroid()?;
    let p = SlackPattern::new(&m);
    Ok((s, m, p))
}

fn gf(p: u32) -> PrimeField {
    PrimeField::new(p).expect("prime")
}

fn gb() -> GbOptions {
    GbOptions::default()
}

fn secs(s: u64) -> Limits {
    Limits { timeout: Some(Duration::from_secs(s)), max_pairs: None }
}

fn verified(m: &Matroid, c: &slackmat::certify::Certificate) -> Result<bool, Box<dyn StdError>> {
    Ok(check_certificate(m, c, &gb())?.is_verified())
}

fn m4_slack_ideal() -> Result<(MatroidSpec, Matroid, SlackPattern, Ideal<Rationals>), Box<dyn StdError>> {
    let (s, m, p) = spec("m4")?;
    let si = slack_ideal(&p, Rationals, &SlackIdealOptions::unscaled())?;
    Ok((s, m, p, si.ideal))
}

fn c1_m4_slack_ideal() -> Outcome {
    let (s, _, p, ideal) = m4_slack_ideal()?;
    let n = ideal.ring().nvars();
    ensure!(n == M4_VARIABLES && p.nvars() == n, "{n} variables");
    let texts: Vec<String> = serde_json::from_value(s.extra["binomials"].clone())?;
    ensure!(texts.len() == M4_TABLE_BINOMIALS, "{} listed binomials", texts.len());
    let listed =
        texts.iter().map(|t| MultiPoly::parse(ideal.ring(), t)).collect::<Result<Vec<_>, _>>()?;
    let table = Ideal::new(ideal.ring(), listed)?;
    ensure!(ideal.contains_ideal(&table, &gb())?, "a listed binomial is not in the slack ideal");
    ensure!(table.contains_ideal(&ideal, &gb())?, "the listed binomials miss part of the slack ideal");
    let (dim, deg) = dimension_and_degree(&ideal, &gb())?;
    let codim = n - dim;
    ensure!(codim == M4_CODIMENSION && deg == M4_DEGREE, "codimension {codim}, degree {deg}");
    Ok(format!("{n} variables, equal to the 72 listed binomials, codimension {codim}, degree {deg}"))
}

fn c2_m4_cycles() -> Outcome {
    let (s, m, p, ideal) = m4_slack_ideal()?;
    let g = NonIncidenceGraph::new(&p);
    let chordless = g.chordless_cycles(DEFAULT_CYCLE_CAP)?.len();
    let simple = g.simple_cycles(DEFAULT_CYCLE_CAP)?.len();
    ensure!(chordless == M4_TABLE_BINOMIALS, "{chordless} chordless cycles");
    ensure!(simple == M4_SIMPLE_CYCLES, "{simple} simple cycles");
    // the realization's own slack matrix, not the stored one
    let v = s.realization(&Rationals).ok_or("m4 fixture has no realization")??;
    let ns = slack_of_realization(&v, Some(&m))?;
    for set in [CycleSet::Chordless, CycleSet::Simple] {
        let ci = cycle_ideal(&p, &Rationals, ns.matrix(), &CycleOptions { cycles: set, ..Default::default() })?;
        ensure!(ci.ideal.contains_ideal(&ideal, &gb())?, "{set:?}: slack ideal not inside the cycle ideal");
        ensure!(ideal.contains_ideal(&ci.ideal, &gb())?, "{set:?}: cycle ideal not inside the slack ideal");
    }
    Ok(format!("{chordless} chordless cycles ({simple} simple); both cycle ideals equal the slack ideal"))
}

fn c3_fano_over_q() -> Outcome {
    let (s, m, p) = spec("fano")?;
    let c = certify(&m, Rationals, &StrategyPlan::default());
    ensure!(c.kind.is_non_realizable(), "certify gave {}", c.kind.label());
    ensure!(verified(&m, &c)?, "{} certificate did not re-verify", c.kind.label());

    let (ring, gens) = minor_generators(&p, Rationals, None, None, MinorStrategy::All)?;
    let minors = gens.len();
    let t = Instant::now();
    let basis = Ideal::new(&ring, gens)?.basis(&gb())?;
    let gb_time = t.elapsed();
    let mono = MultiPoly::parse(&ring, s.extra_str("monomial").ok_or("fano fixture has no monomial")?)?;
    ensure!(mono.is_monomial() && mono.degree() == Some(7), "fixture monomial {mono}");
    let t = Instant::now();
    let nf = normal_form(&mono, &basis)?;
    let nf_time = t.elapsed();
    ensure!(nf.is_zero(), "normal form {nf}");
    ensure!(nf_time <= MEMBERSHIP_LIMIT, "membership check took {nf_time:?}");
    ensure!(nf_time < gb_time, "membership ({nf_time:?}) not faster than the basis ({gb_time:?})");
    Ok(format!(
        "{} via {}; {mono} reduces to 0 modulo the {}-element basis of {minors} minors (basis {:.2?}, check {:.2?})",
        c.kind.label(),
        c.strategy.as_deref().unwrap_or("?"),
        basis.len(),
        gb_time,
        nf_time
    ))
}

fn c4_fano_over_gf2() -> Outcome {
    let (_, m, p) = spec("fano")?;
    let k = gf(2);
    let found = match oracle_search(&m, &k, &OracleOptions::default()) {
        OracleResult::Found(v) => v,
        other => return Err(format!("oracle: {}", other.label()).into()),
    };
    ensure!(found.matroid()? == m, "oracle configuration has the wrong matroid");
    let ones = p.fill(&k, &vec![1; p.nvars()]);
    ensure!(check_slack(&k, &ones, &m)?, "all-ones matrix fails check_slack");

    let ideal = slack_ideal(&p, k, &SlackIdealOptions::unscaled())?.ideal;
    let basis = ideal.basis(&gb())?;
    ensure!(!basis.iter().any(|g| g.is_constant()), "slack ideal over GF(2) is the unit ideal");
    let degrees: BTreeSet<u32> = basis.iter().filter_map(|g| g.degree()).collect();
    ensure!(basis.iter().all(|g| g.len() == 2), "basis has a non-binomial element");
    ensure!(degrees.iter().all(|d| (2..=4).contains(d)), "basis degrees {degrees:?}");
    let ci = cycle_ideal(&p, &k, &ones, &CycleOptions { cycles: CycleSet::Chordless, ..Default::default() })?;
    ensure!(ci.binomials.len() == FANO_CHORDLESS_CYCLES, "{} chordless cycles", ci.binomials.len());
    ensure!(ci.ideal.same_ideal(&ideal, &gb())?, "cycle ideal of the all-ones matrix differs");
    Ok(format!(
        "oracle realization found; all-ones slack matrix valid; {} binomials of degrees {degrees:?} in the reduced basis; \
         equal to the ideal of {} cycle binomials",
        basis.len(),
        ci.binomials.len()
    ))
}

fn c5_m8_over_q() -> Outcome {
    let (s, m, p) = spec("m8")?;
    let forest = s.forest(&p).ok_or("m8 fixture has no forest")??;
    let want = s.extra_str("obstruction").ok_or("m8 fixture has no obstruction")?;
    let r = obstruction_polynomials(&p, Rationals, Some(forest.clone()), &gb())?;
    let o = r.find("x_{8,12}").ok_or("no univariate polynomial in x_{8,12}")?;
    ensure!(o.polynomial == want, "obstruction {}", o.polynomial);
    ensure!(o.roots.as_ref().is_some_and(|r| r.is_empty()), "rational roots {:?}", o.roots);
    ensure!(o.real_roots == Some(0), "real roots {:?}", o.real_roots);
    ensure!(o.discriminant.as_deref() == Some("-3"), "discriminant {:?}", o.discriminant);
    // second route: membership in the scaled ideal
    let scaled = slack_ideal(
        &p,
        Rationals,
        &SlackIdealOptions { scaling: slackmat::slack::Scaling::Forest(forest), ..Default::default() },
    )?;
    let f = MultiPoly::parse(scaled.ring(), want)?;
    ensure!(scaled.ideal.contains(&f, &gb())?, "{want} is not in the scaled slack ideal");

    let c = certify(&m, Rationals, &StrategyPlan::default());
    ensure!(
        matches!(c.kind, CertificateKind::Unknown | CertificateKind::NonRealizableUnitIdeal),
        "certify gave {}",
        c.kind.label()
    );
    // every 4-minor submatrix on seven of the eight 3-point lines
    let lines: Vec<usize> = (0..m.hyperplanes().len()).filter(|&j| m.hyperplanes()[j].len() == 3).collect();
    let subsets: Vec<Vec<usize>> =
        (0..3).map(|drop| lines.iter().copied().filter(|&j| j != lines[drop]).collect()).collect();
    let opts = GbOptions::with_budget(Budget::unlimited().with_timeout(Duration::from_secs(180)));
    let search = final_polynomial_search(&p, Rationals, &ColumnChoice::Explicit(subsets.clone()), &opts);
    ensure!(search.hit.is_none(), "final polynomial found on {:?}", search.hit.map(|h| h.columns));
    ensure!(search.gave_up.is_empty(), "undecided: {:?}", search.gave_up);
    Ok(format!(
        "{want} (discriminant -3, no real roots) by elimination and by membership; certify {}; \
         no monomial on {} seven-line submatrices",
        c.kind.label(),
        subsets.len()
    ))
}

fn c6_vamos() -> Outcome {
    let (s, m, p) = spec("vamos")?;
    let sets: Vec<Vec<usize>> = serde_json::from_value(s.extra["submatrix"].clone())?;
    let cols = columns_of(&m, &sets)?;
    let mut sorted = cols.clone();
    sorted.sort_unstable();
    let product_vars = sorted.iter().map(|&j| (0..p.nrows()).filter(|&i| p.var(i, j).is_some()).count()).sum::<usize>();
    let mut out = Vec::new();
    for (field, budget) in [(slackmat::FieldSpec::Prime(2), 300), (slackmat::FieldSpec::Rationals, 3600)] {
        let t = Instant::now();
        let plan = StrategyPlan::only(Strategy::Submatrices(ColumnChoice::Explicit(vec![cols.clone()])), secs(budget));
        let c = slackmat::with_field!(field, |k| certify(&m, k, &plan));
        let took = t.elapsed();
        let Payload::Monomial(mc) = &c.payload else {
            return Err(format!("over {field}: {}", c.kind.label()).into());
        };
        ensure!(mc.columns == sorted.iter().map(|c| c + 1).collect::<Vec<_>>(), "columns {:?}", mc.columns);
        ensure!(mc.monomial.split('*').count() == product_vars, "monomial {}", mc.monomial);
        ensure!(verified(&m, &c)?, "over {field}: certificate did not re-verify");
        out.push(format!("{field} {took:.1?}"));
    }
    Ok(format!(
        "product of the {product_vars} variables on {} columns lies in the 5-minor ideal ({})",
        cols.len(),
        out.join(", ")
    ))
}

fn c7_nonfano() -> Outcome {
    let (s, m, p) = spec("nonfano")?;
    let q = Rationals;
    let forest = s.forest(&p).ok_or("nonfano fixture has no forest")??;
    let reference = s.extra_matrix(&q, "slack_matrix").ok_or("nonfano fixture has no slack matrix")??;
    let Uniqueness::Unique { slack, .. } = projectively_unique(&p, q, Some(forest), &gb()) else {
        return Err("not unique over Q".into());
    };
    let e = equivalence(&q, slack.matrix(), &reference, EquivalenceMode::Projective)?;
    ensure!(e.equivalent, "not equivalent: {:?}", e.reason);
    for i in 0..reference.nrows() {
        for j in 0..reference.ncols() {
            let w = q.mul(&q.mul(&e.row_scaling[i], slack.matrix().get(i, j)), &e.col_scaling[j]);
            ensure!(&w == reference.get(i, j), "scalings fail at ({}, {})", i + 1, j + 1);
        }
    }
    let flips: Vec<usize> = (0..reference.ncols())
        .filter(|&j| (0..reference.nrows()).any(|i| slack.matrix().get(i, j) == &q.neg(reference.get(i, j)) && !q.is_zero(reference.get(i, j))))
        .map(|j| j + 1)
        .collect();

    let k = gf(2);
    ensure!(oracle_search(&m, &k, &OracleOptions::default()).label() == "exhausted", "oracle over GF(2) not exhausted");
    let c = certify(&m, k, &StrategyPlan::only(Strategy::ScaledUnit, Limits::default()));
    ensure!(c.kind == CertificateKind::NonRealizableUnitIdeal, "scaled ideal over GF(2): {}", c.kind.label());
    ensure!(verified(&m, &c)?, "unit-ideal certificate did not re-verify");
    ensure!(slack_ideal(&p, k, &SlackIdealOptions::default())?.ideal.is_unit(&gb())?, "scaled ideal not unit");
    Ok(format!(
        "unique over Q, equivalent to the stored 7x9 matrix by witnessed scalings (columns negated: {flips:?}); \
         GF(2) oracle exhausted and scaled ideal unit"
    ))
}

fn c8_perles() -> Outcome {
    let (s, _, p) = spec("perles")?;
    let forest = s.forest(&p).ok_or("perles fixture has no forest")??;
    let var = "x_{2,2}";
    let r = obstruction_polynomials(&p, Rationals, Some(forest.clone()), &gb())?;
    ensure!(r.zero_dimensional, "scaled ideal over Q is not zero-dimensional");
    let o = r.find(var).ok_or("no univariate polynomial over Q")?;
    ensure!(o.polynomial == "x_{2,2}^2 - 3*x_{2,2} + 1", "over Q: {}", o.polynomial);
    ensure!(o.roots.as_ref().is_some_and(|r| r.is_empty()) && o.real_roots == Some(2), "roots {:?}", o.roots);
    let scaled = slack_ideal(
        &p,
        Rationals,
        &SlackIdealOptions { scaling: slackmat::slack::Scaling::Forest(forest.clone()), ..Default::default() },
    )?;
    let (dim, deg) = dimension_and_degree(&scaled.ideal, &gb())?;
    ensure!(dim == 0 && deg == 2, "dimension {dim}, degree {deg}");

    let k = gf(5);
    let r = obstruction_polynomials(&p, k, Some(forest.clone()), &gb())?;
    let o = r.find(var).ok_or("no univariate polynomial over GF(5)")?;
    ensure!(o.roots.as_deref() == Some(&["4".to_string()][..]), "GF(5) roots {:?}", o.roots);
    ensure!(!o.squarefree, "GF(5) polynomial is squarefree");
    let ring: Ring<PrimeField> = PolyRing::new(k, vec![var.into()], slackmat::MonomialOrder::DegRevLex);
    let linear = MultiPoly::parse(&ring, &format!("{var} - 4"))?;
    let square = linear.mul(&linear);
    ensure!(MultiPoly::parse(&ring, &o.polynomial)? == square, "{} is not ({var} - 4)^2", o.polynomial);
    match projectively_unique(&p, k, Some(forest), &gb()) {
        Uniqueness::Unique { non_reduced: true, .. } => {}
        other => return Err(format!("GF(5) uniqueness: {}", other.label()).into()),
    }
    Ok(format!(
        "Q: {} irreducible, dimension 0, degree 2; GF(5): {} = ({var} - 4)^2, double root 4, non-reduced",
        "x_{2,2}^2 - 3*x_{2,2} + 1",
        o.polynomial
    ))
}

fn random_poly(ring: &Ring<PrimeField>, rng: &mut ChaCha8Rng) -> MultiPoly<PrimeField> {
    let n = ring.nvars();
    let terms = (0..rng.gen_range(1..4))
        .map(|_| {
            let e: Vec<u16> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            (Monomial::from_exponents(e), rng.gen_range(1..101u32))
        })
        .collect();
    MultiPoly::from_terms(ring, terms)
}

fn s_pairs_reduce_to_zero(basis: &[MultiPoly<PrimeField>], k: &PrimeField) -> bool {
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
            let l = la.lcm(lb);
            let sa = a.mul_monomial(&l.div(la).unwrap()).scale(&k.inv(a.leading_coeff().unwrap()).unwrap());
            let sb = b.mul_monomial(&l.div(lb).unwrap()).scale(&k.inv(b.leading_coeff().unwrap()).unwrap());
            if !normal_form(&sa.sub(&sb), basis).unwrap().is_zero() {
                return false;
            }
        }
    }
    true
}

fn c9_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_917);
    let k = gf(101);
    let ring = PolyRing::new(k, vec!["x".into(), "y".into(), "z".into()], slackmat::MonomialOrder::DegRevLex);

    // Gröbner bases: S-pairs and generators reduce to zero
    let mut bases = 0;
    for _ in 0..40 {
        let gens: Vec<_> = (0..rng.gen_range(1..4)).map(|_| random_poly(&ring, &mut rng)).collect();
        let ideal = Ideal::new(&ring, gens.clone())?;
        let b = ideal.basis(&gb())?;
        ensure!(s_pairs_reduce_to_zero(&b, &k), "an S-pair does not reduce to zero for {gens:?}");
        ensure!(gens.iter().all(|g| normal_form(g, &b).unwrap().is_zero()), "generator outside its basis");
        bases += 1;
    }

    // saturation is idempotent, and two strategies agree
    let xyz = MultiPoly::parse(&ring, "x*y*z")?;
    for _ in 0..15 {
        let gens: Vec<_> = (0..2).map(|_| random_poly(&ring, &mut rng)).collect();
        let ideal = Ideal::new(&ring, gens)?;
        let once = saturate(&ideal, &xyz, SaturationStrategy::Sequential, &gb())?;
        let twice = saturate(&once, &xyz, SaturationStrategy::Sequential, &gb())?;
        ensure!(once.same_ideal(&twice, &gb())?, "saturation is not idempotent");
        let other = saturate(&ideal, &xyz, SaturationStrategy::Rabinowitsch, &gb())?;
        ensure!(once.same_ideal(&other, &gb())?, "saturation strategies disagree");
    }

    // slack matrices of random realizations: support and rank, and back
    let p31 = gf(31);
    let mut round_trips = 0;
    for _ in 0..30 {
        let rows: Vec<Vec<u32>> = (0..3).map(|_| (0..6).map(|_| rng.gen_range(0..4)).collect()).collect();
        let Ok(v) = PointConfiguration::new(p31, Matrix::from_rows(rows)?) else { continue };
        let Ok(m) = v.matroid() else { continue };
        let ns = slack_of_realization(&v, Some(&m))?;
        ensure!(check_slack(&p31, ns.matrix(), &m)?, "slack matrix of a realization fails check_slack");
        let back = NumericSlack::new(p31, ns.matrix().clone()).row_configuration()?;
        ensure!(back.matroid()? == m, "rows of a slack matrix realize another matroid");
        round_trips += 1;
    }
    ensure!(round_trips >= 10, "only {round_trips} random simple realizations");

    // slack ideal inside the cycle ideal of a realization
    for name in ["m4", "nonfano"] {
        let (s, m, p) = spec(name)?;
        let stored = s.extra_matrix(&Rationals, "slack_matrix").ok_or("no slack matrix")??;
        ensure!(check_slack(&Rationals, &stored, &m)?, "{name}: stored slack matrix invalid");
        let si = slack_ideal(&p, Rationals, &SlackIdealOptions::unscaled())?.ideal;
        let ci = cycle_ideal(&p, &Rationals, &stored, &CycleOptions { cycles: CycleSet::Chordless, ..Default::default() })?;
        ensure!(ci.ideal.contains_ideal(&si, &gb())?, "{name}: slack ideal not inside the cycle ideal");
    }

    // Plücker relations vanish on maximal minors
    let q = Rationals;
    let pl = plucker_ideal(3, 6, q)?;
    let mut matrices = 0;
    while matrices < 100 {
        let rows: Vec<Vec<Rational>> =
            (0..3).map(|_| (0..6).map(|_| Rational::from_int(rng.gen_range(-5..=5))).collect()).collect();
        let Ok(v) = PointConfiguration::new(q, Matrix::from_rows(rows)?) else { continue };
        let pv = plucker_vector(&v);
        ensure!(pl.gens().iter().all(|g| q.is_zero(&g.eval_full(&pv))), "a Plücker relation does not vanish");
        matrices += 1;
    }

    // universal ideal projections
    for (r, n) in [(2, 3), (2, 4)] {
        let m = Matroid::uniform(r, n)?;
        let pr = universal_projections(&m, q, &UniversalOptions::default())?;
        let pside = pr.plucker_side.ideal().ok_or(format!("U({r},{n}) Plücker side unknown"))?;
        let want = grassmannian_ideal(&m, q)?.to_ring(pside.ring())?;
        ensure!(pside.same_ideal(&want, &gb())?, "U({r},{n}): Plücker side differs from the Grassmannian ideal");
        let sside = pr.slack_side.ideal().ok_or(format!("U({r},{n}) slack side unknown"))?;
        let p = SlackPattern::new(&m);
        let want = slack_ideal(&p, q, &SlackIdealOptions::unscaled())?.ideal.to_ring(sside.ring())?;
        ensure!(sside.same_ideal(&want, &gb())?, "U({r},{n}): slack side differs from the slack ideal");
    }

    // certify and the oracle agree whenever both decide
    let mut compared = 0;
    for name in EXAMPLE_NAMES {
        let (_, m, _) = spec(name)?;
        for prime in [2, 3, 5] {
            let k = gf(prime);
            let c = certify(&m, k, &StrategyPlan::only(Strategy::ScaledUnit, secs(60)));
            let o = oracle_search(&m, &k, &OracleOptions { max_nodes: 5_000_000, timeout: Some(Duration::from_secs(60)) });
            let oracle_says = match o {
                OracleResult::Found(_) => Some(true),
                OracleResult::Exhausted { .. } => Some(false),
                OracleResult::Unknown { .. } => None,
            };
            let certify_says = match c.kind {
                CertificateKind::RealizableWitness => Some(true),
                CertificateKind::Unknown => None,
                _ => Some(false),
            };
            if let (Some(a), Some(b)) = (certify_says, oracle_says) {
                ensure!(a == b, "{name} over GF({prime}): certify {} but oracle {}", c.kind.label(), o.label());
                ensure!(verified(&m, &c)?, "{name} over GF({prime}): certificate did not re-verify");
                compared += 1;
            }
        }
    }
    ensure!(compared >= 12, "only {compared} decided pairs");
    Ok(format!(
        "{bases} bases closed under S-pairs; saturation idempotent; {round_trips} slack round trips; \
         slack inside cycle ideals; 100 Plücker evaluations; U(2,3), U(2,4) projections; \
         {compared} certify/oracle agreements"
    ))
}

struct Criterion {
    id: u8,
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

const fn minutes(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

fn main() {
    let criteria = [
        Criterion { id: 1, title: "M4 slack ideal over Q", budget: minutes(10), run: c1_m4_slack_ideal },
        Criterion { id: 2, title: "M4 cycles and cycle ideals", budget: minutes(5), run: c2_m4_cycles },
        Criterion { id: 3, title: "Fano over Q", budget: minutes(10), run: c3_fano_over_q },
        Criterion { id: 4, title: "Fano over GF(2)", budget: minutes(10), run: c4_fano_over_gf2 },
        Criterion { id: 5, title: "M8 over Q", budget: minutes(20), run: c5_m8_over_q },
        Criterion { id: 6, title: "Vamos submatrix over GF(2) and Q", budget: minutes(65), run: c6_vamos },
        Criterion { id: 7, title: "non-Fano over Q and GF(2)", budget: minutes(15), run: c7_nonfano },
        Criterion { id: 8, title: "Perles over Q and GF(5)", budget: minutes(30), run: c8_perles },
        Criterion { id: 9, title: "property suites", budget: minutes(2), run: c9_properties },
    ];
    let only: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for c in criteria.iter().filter(|c| only.is_empty() || only.contains(&c.id)) {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(c.run));
        let took = start.elapsed();
        let (pass, detail) = match result {
            Ok(Ok(d)) if took <= c.budget => (true, d),
            Ok(Ok(d)) => (false, format!("{d}; over budget")),
            Ok(Err(e)) => (false, e.to_string()),
            Err(_) => (false, "panicked".to_string()),
        };
        failed += usize::from(!pass);
        println!(
            "{} criterion {}: {} [{:.1?} of {:?}] {}",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            took,
            c.budget,
            detail
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
