//! Saturation `I : f^∞`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, GbError};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{MultiPoly, PolyRing, Ring};

use super::quotient::Quotient;
use super::{eliminate, run_engine, GbOptions, Ideal};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SaturationStrategy {
    /// For monomial `f`: stripping Buchberger, then one variable at a time
    /// (a quotient-algebra kernel when zero-dimensional, Bayer's reverse
    /// lexicographic trick otherwise). Other `f` use the one-shot route.
    #[default]
    Sequential,
    /// Eliminate `y` from `I + ⟨y·f − 1⟩`.
    Rabinowitsch,
    /// `I : f`, `(I : f) : f`, ... until stable.
    IteratedColon,
}

pub fn saturate<F: Field>(
    ideal: &Ideal<F>,
    f: &MultiPoly<F>,
    strategy: SaturationStrategy,
    opts: &GbOptions,
) -> Result<Ideal<F>, GbError> {
    if f.is_zero() {
        return Err(AlgebraError::Usage("cannot saturate by zero".into()).into());
    }
    if !PolyRing::same(f.ring(), ideal.ring()) {
        return Err(AlgebraError::RingMismatch("saturating polynomial".into()).into());
    }
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    match strategy {
        SaturationStrategy::Sequential if f.is_monomial() => {
            let vars: Vec<usize> = f.variables();
            saturate_by_variables(ideal, &vars, opts)
        }
        SaturationStrategy::Sequential | SaturationStrategy::Rabinowitsch => rabinowitsch(ideal, f, opts),
        SaturationStrategy::IteratedColon => iterated_colon(ideal, f, opts),
    }
}

fn mask(n: usize, vars: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vars {
        m[v] = true;
    }
    m
}

/// `I : (∏_{v ∈ vars} x_v)^∞`.
pub fn saturate_by_variables<F: Field>(
    ideal: &Ideal<F>,
    vars: &[usize],
    opts: &GbOptions,
) -> Result<Ideal<F>, GbError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if vars.is_empty() {
        return Ok(ideal.clone());
    }
    let rep = run_engine(ring, ideal.gens(), opts, Some(mask(n, vars)))?;
    if rep.is_unit() {
        return Ok(Ideal::from_basis(ring, rep.basis));
    }
    let k_ideal = Ideal::from_basis(ring, rep.basis);

    // zero-dimensional: one kernel computation on the quotient
    if let Some(q) = Quotient::new(ring, &k_ideal.basis(opts)?) {
        let mut exps = vec![0u16; n];
        for &v in vars {
            exps[v] = 1;
        }
        let f = MultiPoly::monomial(ring, Monomial::from_exponents(exps), ring.field().one());
        let extra = q.saturation_generators(&f)?;
        if extra.is_empty() {
            return Ok(k_ideal);
        }
        let mut gens = k_ideal.gens().to_vec();
        gens.extend(extra);
        let rep = run_engine(ring, &gens, opts, None)?;
        return Ok(Ideal::from_basis(ring, rep.basis));
    }

    if k_ideal.is_homogeneous() {
        let mut cur = k_ideal;
        for &v in vars {
            cur = bayer_step(&cur, v, opts)?;
        }
        return Ok(cur);
    }

    // homogenize, saturate by the variables and the homogenizing variable,
    // then set it back to 1
    let hname = fresh_name(ring, "h");
    let mut names = ring.names().to_vec();
    names.push(hname);
    let hring = PolyRing::new(ring.field().clone(), names, MonomialOrder::DegRevLex);
    let hgens = k_ideal.gens().iter().map(|g| homogenize(g, &hring)).collect::<Vec<_>>();
    let mut hvars = vars.to_vec();
    hvars.push(n);
    let hrep = run_engine(&hring, &hgens, opts, Some(mask(n + 1, &hvars)))?;
    let mut cur = Ideal::from_basis(&hring, hrep.basis);
    for &v in hvars.iter().rev() {
        cur = bayer_step(&cur, v, opts)?;
    }
    let point: HashMap<usize, F::Elem> = [(n, ring.field().one())].into_iter().collect();
    let mut gens = Vec::new();
    for g in cur.gens() {
        let d = g.evaluate(&point, true)?;
        gens.push(drop_last_var(&d, ring));
    }
    let rep = run_engine(ring, &gens, opts, None)?;
    Ok(Ideal::from_basis(ring, rep.basis))
}

fn fresh_name<F: Field>(ring: &Ring<F>, stem: &str) -> String {
    let mut name = format!("_{stem}");
    while ring.var_index(&name).is_some() {
        name.push('_');
    }
    name
}

fn homogenize<F: Field>(f: &MultiPoly<F>, hring: &Ring<F>) -> MultiPoly<F> {
    let d = f.degree().unwrap_or(0);
    let n = hring.nvars();
    let terms = f
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            e.push((d - m.degree()) as u16);
            debug_assert_eq!(e.len(), n);
            (Monomial::from_exponents(e), c.clone())
        })
        .collect();
    MultiPoly::from_terms(hring, terms)
}

fn drop_last_var<F: Field>(f: &MultiPoly<F>, ring: &Ring<F>) -> MultiPoly<F> {
    let n = ring.nvars();
    let terms = f
        .terms()
        .iter()
        .map(|(m, c)| (Monomial::from_exponents(m.exponents()[..n].to_vec()), c.clone()))
        .collect();
    MultiPoly::from_terms(ring, terms)
}

/// `K : x_v^∞` for homogeneous `K`: a degrevlex basis with `x_v` last, with
/// every element divided by its largest power of `x_v`.
fn bayer_step<F: Field>(k: &Ideal<F>, v: usize, opts: &GbOptions) -> Result<Ideal<F>, GbError> {
    let ring = k.ring();
    let n = ring.nvars();
    let mut perm: Vec<usize> = (0..n).filter(|&i| i != v).collect();
    perm.push(v);
    let names: Vec<String> = perm.iter().map(|&i| ring.name(i).to_string()).collect();
    let pring = PolyRing::new(ring.field().clone(), names, MonomialOrder::DegRevLex);
    let gens = k.gens().iter().map(|g| g.to_ring(&pring)).collect::<Result<Vec<_>, _>>()?;
    let rep = run_engine(&pring, &gens, opts, None)?;
    let last = n - 1;
    let mut out = Vec::with_capacity(rep.basis.len());
    for g in rep.basis {
        let e = g.terms().iter().map(|(m, _)| m.exponent(last)).min().unwrap_or(0);
        let g = if e > 0 { g.strip_monomial_content(&mask(n, &[last])) } else { g };
        out.push(g.to_ring(ring)?);
    }
    Ok(Ideal::new(ring, out)?)
}

fn rabinowitsch<F: Field>(ideal: &Ideal<F>, f: &MultiPoly<F>, opts: &GbOptions) -> Result<Ideal<F>, GbError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut names = ring.names().to_vec();
    names.push(fresh_name(ring, "y"));
    let yring = PolyRing::new(ring.field().clone(), names, MonomialOrder::DegRevLex);
    let mut gens = ideal.gens().iter().map(|g| g.to_ring(&yring)).collect::<Result<Vec<_>, _>>()?;
    let y = MultiPoly::var(&yring, n);
    gens.push(y.mul(&f.to_ring(&yring)?).sub(&MultiPoly::one(&yring)));
    let big = Ideal::new(&yring, gens)?;
    let sub = eliminate(&big, &[n], opts)?;
    let back = sub.to_ring(ring)?;
    let rep = run_engine(ring, back.gens(), opts, None)?;
    Ok(Ideal::from_basis(ring, rep.basis))
}

/// `I : f` as `(I ∩ ⟨f⟩) / f`, the intersection by eliminating `t` from
/// `t·I + (1 − t)·⟨f⟩`.
pub fn colon<F: Field>(ideal: &Ideal<F>, f: &MultiPoly<F>, opts: &GbOptions) -> Result<Ideal<F>, GbError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut names = ring.names().to_vec();
    names.push(fresh_name(ring, "t"));
    let tring = PolyRing::new(ring.field().clone(), names, MonomialOrder::DegRevLex);
    let t = MultiPoly::var(&tring, n);
    let one_minus_t = MultiPoly::one(&tring).sub(&t);
    let mut gens = Vec::new();
    for g in ideal.gens() {
        gens.push(t.mul(&g.to_ring(&tring)?));
    }
    gens.push(one_minus_t.mul(&f.to_ring(&tring)?));
    let inter = eliminate(&Ideal::new(&tring, gens)?, &[n], opts)?;
    let mut out = Vec::new();
    for g in inter.gens() {
        let g = g.to_ring(ring)?;
        let q = g
            .div_exact(f)
            .ok_or_else(|| AlgebraError::Usage("intersection element not divisible".into()))?;
        out.push(q);
    }
    Ok(Ideal::new(ring, out)?)
}

fn iterated_colon<F: Field>(ideal: &Ideal<F>, f: &MultiPoly<F>, opts: &GbOptions) -> Result<Ideal<F>, GbError> {
    let mut cur = ideal.clone();
    loop {
        let next = colon(&cur, f, opts)?;
        if cur.contains_ideal(&next, opts)? {
            let rep = run_engine(cur.ring(), cur.gens(), opts, None)?;
            return Ok(Ideal::from_basis(cur.ring(), rep.basis));
        }
        cur = next;
    }
}
