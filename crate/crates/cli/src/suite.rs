//! The bundled example suite: each case recomputes a known fact and
//! re-checks every certificate it produces.

use std::fmt::Write as _;

use serde_json::json;
use slackmat::certify::{
    certify, check_certificate, columns_of, obstruction_polynomials, oracle_search, Certificate, CertificateKind,
    ColumnChoice, Limits, OracleOptions, Strategy, StrategyPlan,
};
use slackmat::groebner::{dimension_and_degree, GbOptions};
use slackmat::io::{example, MatroidSpec, EXAMPLE_NAMES};
use slackmat::matroid::Matroid;
use slackmat::slack::{projectively_unique, slack_ideal, Forest, SlackIdealOptions, SlackPattern, Uniqueness};
use slackmat::{PrimeField, Rationals};

use crate::{CliError, Report};

struct Check {
    example: &'static str,
    what: String,
    pass: bool,
    detail: String,
}

struct Case {
    name: &'static str,
    spec: MatroidSpec,
    m: Matroid,
    pattern: SlackPattern,
    forest: Option<Forest>,
    out: Vec<Check>,
}

impl Case {
    fn new(name: &'static str) -> Result<Self, CliError> {
        let spec = example(name)?;
        let m = spec.matroid()?;
        let pattern = SlackPattern::new(&m);
        let forest = spec.forest(&pattern).transpose()?;
        Ok(Case { name, spec, m, pattern, forest, out: Vec::new() })
    }

    fn record(&mut self, what: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.out.push(Check { example: self.name, what: what.into(), pass, detail: detail.into() });
    }

    /// Runs `plan` over `field`, expects `kind`, and re-checks the result.
    fn certify<F: slackmat::univariate::FieldRoots>(&mut self, field: F, plan: &StrategyPlan, kind: CertificateKind) {
        let c: Certificate = certify(&self.m, field.clone(), plan);
        let verified = check_certificate(&self.m, &c, &GbOptions::default()).map(|v| v.is_verified()).unwrap_or(false);
        let what = format!("certify over {}", field.name());
        let pass = c.kind == kind && verified;
        let detail = format!("{}{}", c.kind.label(), if verified { ", re-verified" } else { ", NOT re-verified" });
        self.record(what, pass, detail);
    }
}

fn only(s: Strategy) -> StrategyPlan {
    StrategyPlan::only(s, Limits::default())
}

fn m4(c: &mut Case) -> Result<(), CliError> {
    let si = slack_ideal(&c.pattern, Rationals, &SlackIdealOptions::unscaled())?;
    let n = si.ring().nvars();
    let (dim, deg) = dimension_and_degree(&si.ideal, &GbOptions::default())?;
    c.record(
        "slack ideal over Q",
        n == 24 && n - dim == 12 && deg == 293,
        format!("{n} variables, codimension {}, degree {deg}", n - dim),
    );
    c.certify(Rationals, &only(Strategy::ScaledUnit), CertificateKind::RealizableWitness);
    Ok(())
}

fn fano(c: &mut Case) -> Result<(), CliError> {
    c.certify(Rationals, &only(Strategy::Submatrices(ColumnChoice::default())), CertificateKind::NonRealizableMonomial);
    c.certify(PrimeField::new(2)?, &only(Strategy::ScaledUnit), CertificateKind::RealizableWitness);
    Ok(())
}

fn nonfano(c: &mut Case) -> Result<(), CliError> {
    let u = projectively_unique(&c.pattern, Rationals, c.forest.clone(), &GbOptions::default());
    c.record("projectively unique over Q", matches!(u, Uniqueness::Unique { .. }), u.label());
    let gf2 = PrimeField::new(2)?;
    c.certify(gf2, &only(Strategy::Submatrices(ColumnChoice::default())), CertificateKind::NonRealizableMonomial);
    let o = oracle_search(&c.m, &gf2, &OracleOptions::default());
    c.record("oracle over GF(2)", o.label() == "exhausted", o.label());
    Ok(())
}

fn vamos(c: &mut Case) -> Result<(), CliError> {
    let sets: Vec<Vec<usize>> = serde_json::from_value(c.spec.extra["submatrix"].clone())
        .map_err(|e| CliError::Input(format!("vamos fixture: {e}")))?;
    let cols = columns_of(&c.m, &sets)?;
    let plan = only(Strategy::Submatrices(ColumnChoice::Explicit(vec![cols])));
    c.certify(PrimeField::new(2)?, &plan, CertificateKind::NonRealizableMonomial);
    c.certify(Rationals, &only(Strategy::ScaledUnit), CertificateKind::NonRealizableUnitIdeal);
    Ok(())
}

fn obstruction<F: slackmat::univariate::FieldRoots>(
    c: &mut Case,
    field: F,
    var: &str,
    poly: &str,
    roots: &[&str],
) -> Result<(), CliError> {
    let r = obstruction_polynomials(&c.pattern, field.clone(), c.forest.clone(), &GbOptions::default())?;
    let found = r.find(var);
    let pass = found.is_some_and(|o| {
        o.polynomial == poly && o.roots.as_ref().is_some_and(|rs| rs.iter().map(String::as_str).eq(roots.iter().copied()))
    });
    let detail = match found {
        Some(o) => format!("{} with roots {:?}", o.polynomial, o.roots.clone().unwrap_or_default()),
        None => format!("no univariate polynomial in {var}"),
    };
    c.record(format!("obstruction in {var} over {}", field.name()), pass, detail);
    Ok(())
}

fn m8(c: &mut Case) -> Result<(), CliError> {
    obstruction(c, Rationals, "x_{8,12}", "x_{8,12}^2 + x_{8,12} + 1", &[])
}

fn perles(c: &mut Case) -> Result<(), CliError> {
    obstruction(c, Rationals, "x_{2,2}", "x_{2,2}^2 - 3*x_{2,2} + 1", &[])?;
    let gf5 = PrimeField::new(5)?;
    obstruction(c, gf5, "x_{2,2}", "x_{2,2}^2 + 2*x_{2,2} + 1", &["4"])?;
    let u = projectively_unique(&c.pattern, gf5, c.forest.clone(), &GbOptions::default());
    let nr = matches!(u, Uniqueness::Unique { non_reduced: true, .. });
    c.record("unique, non-reduced over GF(5)", nr, u.label());
    Ok(())
}

pub fn run(names: &[String]) -> Result<Report, CliError> {
    let chosen: Vec<&'static str> = if names.is_empty() {
        EXAMPLE_NAMES.to_vec()
    } else {
        names
            .iter()
            .map(|n| {
                EXAMPLE_NAMES
                    .iter()
                    .copied()
                    .find(|e| e == n)
                    .ok_or_else(|| CliError::Input(format!("unknown example {n:?}; choose from {}", EXAMPLE_NAMES.join(", "))))
            })
            .collect::<Result<_, _>>()?
    };
    let mut checks = Vec::new();
    for name in chosen {
        let mut c = Case::new(name)?;
        let run = match name {
            "m4" => m4(&mut c),
            "fano" => fano(&mut c),
            "nonfano" => nonfano(&mut c),
            "vamos" => vamos(&mut c),
            "m8" => m8(&mut c),
            "perles" => perles(&mut c),
            _ => unreachable!("names come from EXAMPLE_NAMES"),
        };
        if let Err(e) = run {
            let msg = match e {
                CliError::Input(m) | CliError::Budget(m) => m,
            };
            c.record("run", false, msg);
        }
        checks.extend(c.out);
    }
    let mut text = String::new();
    for ch in &checks {
        let tag = if ch.pass { "PASS" } else { "FAIL" };
        writeln!(text, "{tag} {:<8} {}: {}", ch.example, ch.what, ch.detail).unwrap();
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    writeln!(text, "{} checks, {failed} failed", checks.len()).unwrap();
    let list: Vec<_> = checks
        .iter()
        .map(|c| json!({ "example": c.example, "check": c.what, "pass": c.pass, "detail": c.detail }))
        .collect();
    Ok(Report { json: json!({ "checks": list, "failed": failed }), text, code: u8::from(failed > 0) })
}
