//! Subcommand implementations.

use std::fmt::Write as _;

use serde_json::{json, Value};
use slackmat::certify::{
    certify, check_certificate, final_polynomial_search, obstruction_polynomials, oracle_search, CertificateKind,
    ColumnChoice, OracleOptions, OracleResult, Strategy, StrategyPlan, Verification,
};
use slackmat::grassmann::{universal_projections, Projection, UniversalOptions};
use slackmat::groebner::{dimension_and_degree, GbOptions};
use slackmat::io::{parse_matrix, MatroidSpec};
use slackmat::linalg::Matrix;
use slackmat::matroid::Matroid;
use slackmat::slack::{
    cycle_ideal, projectively_unique, slack_ideal, slack_of_realization, CycleOptions, Forest, Scaling,
    SlackIdealOptions, SlackPattern, Uniqueness,
};
use slackmat::{with_field, Field, FieldSpec, MultiPoly, PrimeField};

use crate::input;
use crate::{CliError, Command, Report, EXIT_UNKNOWN};

pub fn run(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Hyperplanes { input } => hyperplanes(input),
        Command::SlackMatrix { input, symbolic } => slack_matrix(input, *symbolic),
        Command::SlackIdeal { input, field, scaling, minors, budgets } => {
            let spec = input::load(input)?;
            let m = input::matroid(&spec)?;
            let pattern = SlackPattern::new(&m);
            let sc = input::scaling(&spec, &pattern, scaling)?;
            let opts = SlackIdealOptions { scaling: sc, minors: (*minors).into(), gb: budgets.gb() };
            with_field!(field.field, |k| slack_ideal_cmd(&pattern, k, &opts))
        }
        Command::Certify { input, field, strategy, columns, scaling, budgets } => {
            let spec = input::load(input)?;
            let m = input::matroid(&spec)?;
            let pattern = SlackPattern::new(&m);
            let mut plan = match strategy {
                Some(list) => StrategyPlan::parse(list, budgets.limits())?,
                None if budgets.is_set() => StrategyPlan::with_limits(budgets.limits()),
                None => StrategyPlan::default(),
            };
            if !columns.is_empty() {
                let lists = columns
                    .iter()
                    .map(|c| input::columns(c, pattern.ncols()))
                    .collect::<Result<Vec<_>, _>>()?;
                for (s, _) in &mut plan.steps {
                    if let Strategy::Submatrices(choice) = s {
                        *choice = ColumnChoice::Explicit(lists.clone());
                    }
                }
            }
            if scaling.no_scaled && !scaling.scaled {
                return Err(CliError::Input("certify always scales the slack ideal; drop --no-scaled".into()));
            }
            plan.forest = input::forest(&spec, &pattern, scaling.forest.as_deref())?;
            certify_cmd(&m, field.field, &plan, &budgets.gb())
        }
        Command::FinalPoly { input, field, columns, max_subsets, budgets } => {
            let spec = input::load(input)?;
            let m = input::matroid(&spec)?;
            let pattern = SlackPattern::new(&m);
            let choice = if !columns.is_empty() {
                ColumnChoice::Explicit(
                    columns.iter().map(|c| input::columns(c, pattern.ncols())).collect::<Result<Vec<_>, _>>()?,
                )
            } else if let Some(cols) = input::submatrix(&spec, &m)? {
                ColumnChoice::Explicit(vec![cols])
            } else {
                ColumnChoice::Heuristic { max_subsets: *max_subsets }
            };
            let gb = budgets.gb();
            let r = with_field!(field.field, |k| final_polynomial_search(&pattern, k, &choice, &gb));
            let tried: Vec<Vec<usize>> = r.tried.iter().map(|c| c.iter().map(|x| x + 1).collect()).collect();
            let gave_up: Vec<Value> = r
                .gave_up
                .iter()
                .map(|(c, why)| json!({ "columns": c.iter().map(|x| x + 1).collect::<Vec<_>>(), "reason": why }))
                .collect();
            let mut text = String::new();
            match &r.hit {
                Some(c) => {
                    writeln!(text, "monomial found in columns {:?}", c.columns).unwrap();
                    writeln!(text, "  {}", c.monomial).unwrap();
                    writeln!(text, "  truncated basis: {} elements, sha256 {}", c.gb_size, c.gb_fingerprint).unwrap();
                }
                None => writeln!(text, "no monomial found in {} submatrices (this proves nothing)", tried.len()).unwrap(),
            }
            for g in &gave_up {
                writeln!(text, "  gave up on {}: {}", g["columns"], g["reason"].as_str().unwrap_or_default()).unwrap();
            }
            Ok(Report {
                json: json!({ "field": field.field, "found": r.hit.is_some(), "certificate": r.hit, "tried": tried, "gave_up": gave_up }),
                text,
                code: if r.hit.is_some() { 1 } else { EXIT_UNKNOWN },
            })
        }
        Command::CycleIdeal { input, field, cycles, cap, compare, budgets } => {
            let spec = input::load(input)?;
            let m = input::matroid(&spec)?;
            let opts = CycleOptions { cap: *cap, cycles: (*cycles).into() };
            with_field!(field.field, |k| cycle_cmd(&spec, &m, k, &opts, *compare, &budgets.gb()))
        }
        Command::Unique { input, field, scaling, budgets } => {
            let spec = input::load(input)?;
            let m = input::matroid(&spec)?;
            let pattern = SlackPattern::new(&m);
            let forest = scaled_forest(&spec, &pattern, scaling)?;
            with_field!(field.field, |k| unique_cmd(&pattern, k, forest, &budgets.gb()))
        }
        Command::Obstructions { input, field, scaling, budgets } => {
            let spec = input::load(input)?;
            let m = input::matroid(&spec)?;
            let pattern = SlackPattern::new(&m);
            let forest = scaled_forest(&spec, &pattern, scaling)?;
            let gb = budgets.gb();
            let r = with_field!(field.field, |k| obstruction_polynomials(&pattern, k, forest, &gb))?;
            let mut text = String::new();
            if r.unit_ideal {
                writeln!(text, "the scaled slack ideal is the unit ideal over {}", r.field).unwrap();
            }
            for o in &r.polynomials {
                let roots = match &o.roots {
                    Some(rs) if rs.is_empty() => "no roots".to_string(),
                    Some(rs) => format!("roots {}", rs.join(", ")),
                    None => "roots not determined".to_string(),
                };
                let mut extra = String::new();
                if !o.squarefree {
                    extra.push_str(", repeated factor");
                }
                if let Some(n) = o.real_roots {
                    write!(extra, ", {n} real roots").unwrap();
                }
                if let Some(d) = &o.discriminant {
                    write!(extra, ", discriminant {d}").unwrap();
                }
                writeln!(text, "{}: {} ({roots}{extra})", o.variable, o.polynomial).unwrap();
            }
            for v in &r.incomplete {
                writeln!(text, "{v}: elimination stopped on budget").unwrap();
            }
            let code = if r.incomplete.is_empty() { 0 } else { EXIT_UNKNOWN };
            Ok(Report { json: serde_json::to_value(&r).expect("serializable"), text, code })
        }
        Command::Universal { input, field, max_vars, budgets } => {
            let spec = input::load(input)?;
            let m = input::matroid(&spec)?;
            let opts = UniversalOptions { gb: budgets.gb(), max_vars: *max_vars };
            with_field!(field.field, |k| universal_cmd(&m, k, &opts))
        }
        Command::Oracle { input, field, max_nodes, timeout } => {
            let spec = input::load(input)?;
            let m = input::matroid(&spec)?;
            let FieldSpec::Prime(p) = *field else {
                return Err(CliError::Input("the oracle needs a prime field GF(p)".into()));
            };
            let k = PrimeField::new(p)?;
            let o = OracleOptions { max_nodes: *max_nodes, timeout: timeout.map(std::time::Duration::from_secs_f64) };
            Ok(match oracle_search(&m, &k, &o) {
                OracleResult::Found(v) => {
                    let rows = strings(&k, v.matrix());
                    Report {
                        text: format!("realization over {}:\n{}", field, table(&rows, None, None)),
                        json: json!({ "field": field, "result": "found", "matrix": rows }),
                        code: 0,
                    }
                }
                OracleResult::Exhausted { nodes } => Report {
                    text: format!("no realization over {field} ({nodes} nodes searched)\n"),
                    json: json!({ "field": field, "result": "exhausted", "nodes": nodes }),
                    code: 1,
                },
                OracleResult::Unknown { reason } => Report {
                    text: format!("unknown: {reason}\n"),
                    json: json!({ "field": field, "result": "unknown", "reason": reason }),
                    code: EXIT_UNKNOWN,
                },
            })
        }
        Command::Examples { names } => crate::suite::run(names),
    }
}

fn scaled_forest(
    spec: &MatroidSpec,
    pattern: &SlackPattern,
    scaling: &crate::ScalingArgs,
) -> Result<Option<Forest>, CliError> {
    match input::scaling(spec, pattern, scaling)? {
        Scaling::None => Err(CliError::Input("this command works on the scaled slack ideal".into())),
        Scaling::Forest(f) => Ok(Some(f)),
        Scaling::SpanningForest => Ok(None),
    }
}

pub fn strings<F: Field>(k: &F, m: &Matrix<F::Elem>) -> Vec<Vec<String>> {
    m.rows().iter().map(|r| r.iter().map(|x| k.format(x)).collect()).collect()
}

/// Right-aligned table with optional row and column headers.
pub fn table(rows: &[Vec<String>], row_heads: Option<&[String]>, col_heads: Option<&[String]>) -> String {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut width = vec![0; ncols];
    for r in rows.iter().map(|r| r.as_slice()).chain(col_heads) {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let head_w = row_heads.map_or(0, |h| h.iter().map(|s| s.chars().count()).max().unwrap_or(0));
    let mut out = String::new();
    let line = |out: &mut String, head: &str, cells: &[String]| {
        if row_heads.is_some() {
            write!(out, "{head:>head_w$} |").unwrap();
        }
        for (c, w) in cells.iter().zip(&width) {
            write!(out, " {c:>w$}").unwrap();
        }
        out.push('\n');
    };
    if let Some(h) = col_heads {
        line(&mut out, "", h);
    }
    for (i, r) in rows.iter().enumerate() {
        line(&mut out, row_heads.map_or("", |h| h[i].as_str()), r);
    }
    out
}

fn hyperplane_labels(m: &Matroid) -> Vec<String> {
    m.hyperplanes().iter().map(|&h| m.set_label(h)).collect()
}

fn element_labels(m: &Matroid) -> Vec<String> {
    (0..m.n()).map(|i| m.label(i)).collect()
}

fn hyperplanes(arg: &str) -> Result<Report, CliError> {
    let spec = input::load(arg)?;
    let m = input::matroid(&spec)?;
    let mut text = String::new();
    let mut list = Vec::new();
    for (j, &h) in m.hyperplanes().iter().enumerate() {
        let elems: Vec<String> = h.elems().iter().map(|&e| m.label(e)).collect();
        writeln!(text, "H{} = {{{}}}", j + 1, elems.join(", ")).unwrap();
        list.push(json!({ "column": j + 1, "label": m.set_label(h), "elements": elems }));
    }
    Ok(Report { json: json!({ "n": m.n(), "rank": m.rank(), "hyperplanes": list }), text, code: 0 })
}

fn slack_matrix(arg: &str, symbolic: bool) -> Result<Report, CliError> {
    let spec = input::load(arg)?;
    let m = input::matroid(&spec)?;
    let cols = hyperplane_labels(&m);
    let rows = element_labels(&m);
    let (kind, field, entries) = match (&spec.matrix, symbolic) {
        (Some(mx), false) => {
            let entries = with_field!(mx.field, |k| {
                let v = spec.realization(&k).expect("matrix present")?;
                strings(&k, slack_of_realization(&v, Some(&m))?.matrix())
            });
            ("numeric", Some(mx.field), entries)
        }
        _ => {
            let p = SlackPattern::new(&m);
            let entries = (0..p.nrows())
                .map(|i| {
                    (0..p.ncols()).map(|j| p.var(i, j).map_or_else(|| "0".to_string(), |v| p.var_name(v))).collect()
                })
                .collect();
            ("symbolic", None, entries)
        }
    };
    Ok(Report {
        text: table(&entries, Some(&rows), Some(&cols)),
        json: json!({ "kind": kind, "field": field, "rows": rows, "columns": cols, "entries": entries }),
        code: 0,
    })
}

fn poly_strings<F: Field>(ps: &[MultiPoly<F>]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn forest_positions(pattern: &SlackPattern, f: &Forest) -> Vec<(String, usize)> {
    f.edges()
        .iter()
        .map(|&v| {
            let (i, j) = pattern.position(v);
            (pattern.matroid().label(i), j + 1)
        })
        .collect()
}

fn slack_ideal_cmd<F: Field>(pattern: &SlackPattern, k: F, opts: &SlackIdealOptions) -> Result<Report, CliError> {
    let si = slack_ideal(pattern, k.clone(), opts)?;
    let gens = poly_strings(si.ideal.gens());
    let unit = !gens.is_empty() && si.ideal.is_unit(&opts.gb)?;
    let dd = if unit || gens.is_empty() { None } else { Some(dimension_and_degree(&si.ideal, &opts.gb)?) };
    let nvars = si.ring().nvars();
    let forest = si.forest.as_ref().map(|f| forest_positions(pattern, f));
    let mut text = String::new();
    writeln!(text, "field {}, {} variables, {} minors", k.name(), nvars, si.minor_count).unwrap();
    if let Some(f) = &forest {
        let fixed: Vec<String> = f.iter().map(|(l, c)| format!("x_{{{l},{c}}}")).collect();
        writeln!(text, "fixed to 1: {}", fixed.join(" ")).unwrap();
    }
    for w in &si.warnings {
        writeln!(text, "warning: {w}").unwrap();
    }
    if unit {
        writeln!(text, "unit ideal").unwrap();
    } else if let Some((dim, deg)) = dd {
        writeln!(text, "dimension {dim}, codimension {}, degree {deg}", nvars - dim).unwrap();
    }
    writeln!(text, "{} generators:", gens.len()).unwrap();
    for g in &gens {
        writeln!(text, "  {g}").unwrap();
    }
    Ok(Report {
        json: json!({
            "field": k.spec(),
            "variables": si.ring().names(),
            "fixed": forest,
            "minor_count": si.minor_count,
            "unit": unit,
            "dimension": dd.map(|d| d.0),
            "codimension": dd.map(|d| nvars - d.0),
            "degree": dd.map(|d| d.1),
            "generators": gens,
            "warnings": si.warnings,
        }),
        text,
        code: 0,
    })
}

fn certify_cmd(m: &Matroid, field: FieldSpec, plan: &StrategyPlan, gb: &GbOptions) -> Result<Report, CliError> {
    let cert = with_field!(field, |k| certify(m, k, plan));
    let verification = check_certificate(m, &cert, gb)?;
    let v_label = match &verification {
        Verification::Verified => "verified".to_string(),
        Verification::NothingToCheck => "nothing-to-check".to_string(),
        Verification::Rejected(why) => format!("rejected: {why}"),
    };
    let mut text = format!("{} over {}", cert.kind.label(), field);
    if let Some(s) = &cert.strategy {
        write!(text, " (strategy {s}, {v_label})").unwrap();
    }
    text.push('\n');
    match &cert.payload {
        slackmat::certify::Payload::Monomial(c) => {
            writeln!(text, "columns {:?} = hyperplanes {}", c.columns, c.hyperplanes.join(" ")).unwrap();
            writeln!(text, "monomial {}", c.monomial).unwrap();
            writeln!(text, "truncated basis: {} elements, sha256 {}", c.gb_size, c.gb_fingerprint).unwrap();
        }
        slackmat::certify::Payload::UnitIdeal(c) => {
            let fixed: Vec<String> = c.forest.iter().map(|(l, j)| format!("x_{{{l},{j}}}")).collect();
            writeln!(text, "scaled slack ideal is the unit ideal; fixed to 1: {}", fixed.join(" ")).unwrap();
        }
        slackmat::certify::Payload::Witness { matrix } => {
            writeln!(text, "realization (columns are the elements):").unwrap();
            text.push_str(&table(matrix, None, None));
        }
        slackmat::certify::Payload::Unknown { reasons } => {
            for r in reasons {
                writeln!(text, "  {r}").unwrap();
            }
        }
    }
    let mut json = serde_json::to_value(&cert).expect("serializable");
    json["verification"] = json!(v_label);
    let code = match (cert.kind, &verification) {
        (_, Verification::Rejected(why)) => {
            eprintln!("slackmat: certificate failed re-verification: {why}");
            EXIT_UNKNOWN
        }
        (CertificateKind::RealizableWitness, _) => 0,
        (k, _) if k.is_non_realizable() => 1,
        _ => EXIT_UNKNOWN,
    };
    Ok(Report { json, text, code })
}

fn cycle_cmd<F: Field>(
    spec: &MatroidSpec,
    m: &Matroid,
    k: F,
    opts: &CycleOptions,
    compare: bool,
    gb: &GbOptions,
) -> Result<Report, CliError> {
    let pattern = SlackPattern::new(m);
    let s = if let Some(v) = spec.extra.get("slack_matrix") {
        let rows: Vec<Vec<String>> =
            serde_json::from_value(v.clone()).map_err(|e| CliError::Input(format!("bad \"slack_matrix\": {e}")))?;
        parse_matrix(&k, &rows)?
    } else if let Some(mx) = &spec.matrix {
        let v = slackmat::matroid::PointConfiguration::new(k.clone(), parse_matrix(&k, &mx.entries)?)
            .map_err(slackmat::Error::from)?;
        slack_of_realization(&v, Some(m))?.matrix().clone()
    } else {
        return Err(CliError::Input("cycle-ideal needs a \"matrix\" or \"slack_matrix\" in the input".into()));
    };
    let ci = cycle_ideal(&pattern, &k, &s, opts)?;
    let bins: Vec<String> = ci.binomials.iter().map(|b| b.poly.to_string()).collect();
    let same = if compare {
        let si = slack_ideal(&pattern, k.clone(), &SlackIdealOptions { scaling: Scaling::None, gb: gb.clone(), ..Default::default() })?;
        Some(ci.ideal.same_ideal(&si.ideal, gb)?)
    } else {
        None
    };
    let mut text = format!("{} cycle binomials over {}", bins.len(), k.name());
    if ci.generating_set_only {
        text.push_str(" (fundamental cycles only)");
    }
    text.push('\n');
    if let Some(b) = same {
        writeln!(text, "equal to the slack ideal: {b}").unwrap();
    }
    for b in &bins {
        writeln!(text, "  {b}").unwrap();
    }
    Ok(Report {
        json: json!({
            "field": k.spec(),
            "count": bins.len(),
            "fundamental_only": ci.generating_set_only,
            "equals_slack_ideal": same,
            "binomials": bins,
        }),
        text,
        code: 0,
    })
}

fn unique_cmd<F: slackmat::univariate::FieldRoots>(
    pattern: &SlackPattern,
    k: F,
    forest: Option<Forest>,
    gb: &GbOptions,
) -> Result<Report, CliError> {
    let m = pattern.matroid();
    let u = projectively_unique(pattern, k.clone(), forest, gb);
    let mut text = format!("{} over {}\n", u.label(), k.name());
    let mut json = json!({ "field": k.spec(), "result": u.label() });
    let code = match &u {
        Uniqueness::Unique { slack, non_reduced, evidence } => {
            let rows = slack.to_strings();
            if let Some(e) = evidence {
                writeln!(text, "pinned by {e}").unwrap();
            }
            if *non_reduced {
                writeln!(text, "the scaled slack ideal is not radical at this point").unwrap();
            }
            text.push_str(&table(&rows, Some(&element_labels(m)), Some(&hyperplane_labels(m))));
            json["slack_matrix"] = json!(rows);
            json["non_reduced"] = json!(non_reduced);
            json["evidence"] = json!(evidence);
            0
        }
        Uniqueness::NotUnique { evidence } | Uniqueness::NoRealization { evidence } => {
            writeln!(text, "{evidence}").unwrap();
            json["evidence"] = json!(evidence);
            0
        }
        Uniqueness::Unknown { reason } => {
            writeln!(text, "{reason}").unwrap();
            json["reason"] = json!(reason);
            EXIT_UNKNOWN
        }
    };
    Ok(Report { json, text, code })
}

fn projection_json<F: Field>(p: &Projection<F>) -> Value {
    match p {
        Projection::Ideal(i) => json!({ "generators": poly_strings(i.gens()) }),
        Projection::Unknown { reason } => json!({ "unknown": reason }),
    }
}

fn universal_cmd<F: Field>(m: &Matroid, k: F, opts: &UniversalOptions) -> Result<Report, CliError> {
    let p = universal_projections(m, k.clone(), opts)?;
    let mut text = String::new();
    for (name, side) in [("Plücker side", &p.plucker_side), ("slack side", &p.slack_side)] {
        match side {
            Projection::Ideal(i) => {
                writeln!(text, "{name}: {} generators", i.gens().len()).unwrap();
                for g in i.gens() {
                    writeln!(text, "  {g}").unwrap();
                }
            }
            Projection::Unknown { reason } => writeln!(text, "{name}: unknown ({reason})").unwrap(),
        }
    }
    let unknown = matches!(p.plucker_side, Projection::Unknown { .. }) || matches!(p.slack_side, Projection::Unknown { .. });
    Ok(Report {
        json: json!({ "field": k.spec(), "plucker_side": projection_json(&p.plucker_side), "slack_side": projection_json(&p.slack_side) }),
        text,
        code: if unknown { EXIT_UNKNOWN } else { 0 },
    })
}
