//! Univariate consequences of the scaled slack ideal.

use serde::Serialize;

use crate::error::Error;
use crate::groebner::quotient::Quotient;
use crate::groebner::{eliminate, GbOptions, Ideal};
use crate::slack::{slack_ideal, Forest, Scaling, SlackIdealOptions, SlackPattern};
use crate::univariate::{discriminant, FieldRoots, UniPoly};

/// A univariate polynomial in one free slack variable that vanishes on
/// every scaled realization.
#[derive(Clone, Debug, Serialize)]
pub struct Obstruction {
    pub variable: String,
    pub polynomial: String,
    pub degree: usize,
    /// Distinct roots in the field; `None` when root finding gave up.
    pub roots: Option<Vec<String>>,
    pub squarefree: bool,
    pub discriminant: Option<String>,
    /// Distinct real roots, over the rationals only.
    pub real_roots: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub field: String,
    pub unit_ideal: bool,
    pub zero_dimensional: bool,
    pub polynomials: Vec<Obstruction>,
    /// Variables whose elimination ran out of budget.
    pub incomplete: Vec<String>,
}

impl ObstructionReport {
    pub fn find(&self, variable: &str) -> Option<&Obstruction> {
        self.polynomials.iter().find(|o| o.variable == variable)
    }

    /// Some obstruction has no root in the field.
    pub fn rootless(&self) -> bool {
        self.polynomials.iter().any(|o| o.roots.as_ref().is_some_and(|r| r.is_empty()))
    }
}

fn describe<F: FieldRoots>(k: &F, variable: String, f: UniPoly<F>) -> Obstruction {
    let f = f.monic();
    Obstruction {
        polynomial: f.format_in(&variable),
        variable,
        degree: f.degree().unwrap_or(0),
        roots: k.roots(&f).map(|r| r.iter().map(|x| k.format(x)).collect()),
        squarefree: f.is_squarefree(),
        discriminant: discriminant(&f).map(|d| k.format(&d)),
        real_roots: k.real_root_count(&f),
    }
}

/// The generators of `I ∩ k[x_v]` for every free variable `v` of the scaled
/// slack ideal (scaled by `forest`, or the default spanning forest).
pub fn obstruction_polynomials<F: FieldRoots>(
    pattern: &SlackPattern,
    field: F,
    forest: Option<Forest>,
    opts: &GbOptions,
) -> Result<ObstructionReport, Error> {
    let scaling = forest.map_or(Scaling::SpanningForest, Scaling::Forest);
    let si = slack_ideal(pattern, field.clone(), &SlackIdealOptions { scaling, gb: opts.clone(), ..Default::default() })?;
    let ring = si.ring().clone();
    let gb = si.ideal.basis(opts)?;
    let mut report = ObstructionReport {
        field: field.name(),
        unit_ideal: gb.len() == 1 && gb[0].is_constant(),
        zero_dimensional: false,
        polynomials: Vec::new(),
        incomplete: Vec::new(),
    };
    if report.unit_ideal {
        return Ok(report);
    }
    if let Some(q) = Quotient::new(&ring, &gb) {
        report.zero_dimensional = true;
        for v in 0..ring.nvars() {
            let e = q.eliminant(v)?;
            if e.len() > 1 {
                report.polynomials.push(describe(&field, ring.name(v).to_string(), UniPoly::new(field.clone(), e)));
            }
        }
        return Ok(report);
    }
    let ideal = Ideal::from_basis(&ring, gb.to_vec());
    for v in 0..ring.nvars() {
        let others: Vec<usize> = (0..ring.nvars()).filter(|&w| w != v).collect();
        match eliminate(&ideal, &others, opts) {
            Ok(e) => {
                for g in e.gens() {
                    if let Some(u) = UniPoly::from_multi(g, 0) {
                        if u.degree().unwrap_or(0) > 0 {
                            report.polynomials.push(describe(&field, ring.name(v).to_string(), u));
                        }
                    }
                }
            }
            Err(_) => report.incomplete.push(ring.name(v).to_string()),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::io::example;

    fn setup(name: &str) -> (SlackPattern, Option<Forest>) {
        let spec = example(name).unwrap();
        let p = SlackPattern::new(&spec.matroid().unwrap());
        let f = spec.forest(&p).map(|f| f.unwrap());
        (p, f)
    }

    #[test]
    fn perles_golden_ratio() {
        let (p, f) = setup("perles");
        let r = obstruction_polynomials(&p, Rationals, f.clone(), &GbOptions::default()).unwrap();
        assert!(r.zero_dimensional);
        let o = r.find("x_{2,2}").unwrap();
        assert_eq!(o.polynomial, "x_{2,2}^2 - 3*x_{2,2} + 1");
        assert_eq!(o.roots.as_deref(), Some(&[][..]));
        assert_eq!(o.discriminant.as_deref(), Some("5"));
        assert_eq!(o.real_roots, Some(2));
        assert!(r.rootless());

        let r = obstruction_polynomials(&p, PrimeField::new(5).unwrap(), f, &GbOptions::default()).unwrap();
        let o = r.find("x_{2,2}").unwrap();
        assert_eq!(o.polynomial, "x_{2,2}^2 + 2*x_{2,2} + 1");
        assert_eq!(o.roots.as_deref(), Some(&["4".to_string()][..]));
        assert!(!o.squarefree);
    }

    #[test]
    fn m8_cube_root_of_unity() {
        let (p, f) = setup("m8");
        let r = obstruction_polynomials(&p, Rationals, f, &GbOptions::default()).unwrap();
        let o = r.find("x_{8,12}").unwrap();
        assert_eq!(o.polynomial, "x_{8,12}^2 + x_{8,12} + 1");
        assert_eq!(o.roots.as_deref(), Some(&[][..]));
        assert_eq!(o.real_roots, Some(0));
        assert_eq!(o.discriminant.as_deref(), Some("-3"));
    }

    #[test]
    fn unit_ideal_has_no_polynomials() {
        let (p, f) = setup("nonfano");
        let r = obstruction_polynomials(&p, PrimeField::new(2).unwrap(), f, &GbOptions::default()).unwrap();
        assert!(r.unit_ideal);
        assert!(r.polynomials.is_empty());
    }
}
