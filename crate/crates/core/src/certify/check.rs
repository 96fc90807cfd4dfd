//! Re-verification of certificates from their payload.

use crate::error::Error;
use crate::field::Field;
use crate::groebner::GbOptions;
use crate::io::parse_matrix;
use crate::matroid::{Matroid, PointConfiguration};
use crate::poly::MultiPoly;
use crate::slack::{minor_generators, slack_ideal, Forest, MinorStrategy, Scaling, SlackIdealOptions, SlackPattern};
use crate::with_field;

use super::{fingerprint, grading, truncated_membership, Certificate, MonomialCertificate, Payload, UnitIdealCertificate};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Verified,
    Rejected(String),
    /// Unknown certificates carry no claim.
    NothingToCheck,
}

impl Verification {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verification::Verified)
    }
}

fn check_monomial<F: Field>(
    m: &Matroid,
    k: F,
    c: &MonomialCertificate,
    opts: &GbOptions,
) -> Result<Verification, Error> {
    let hs = m.hyperplanes();
    let mut cols = Vec::with_capacity(c.columns.len());
    for (&col, label) in c.columns.iter().zip(&c.hyperplanes) {
        if col == 0 || col > hs.len() {
            return Ok(Verification::Rejected(format!("column {col} out of range")));
        }
        if m.set_label(hs[col - 1]) != *label {
            return Ok(Verification::Rejected(format!("column {col} is not hyperplane {label}")));
        }
        cols.push(col - 1);
    }
    if c.columns.len() != c.hyperplanes.len() {
        return Ok(Verification::Rejected("columns and hyperplanes differ in length".into()));
    }
    let pattern = SlackPattern::new(m);
    let (ring, gens) = minor_generators(&pattern, k, Some(&cols), None, MinorStrategy::All)?;
    let mono = MultiPoly::parse(&ring, &c.monomial)?;
    if !mono.is_monomial() {
        return Ok(Verification::Rejected(format!("{} is not a monomial", c.monomial)));
    }
    let (lm, _) = &mono.terms()[0];
    let weights = grading(&pattern, &ring, &cols);
    let (basis, zero) = truncated_membership(&ring, gens, weights, lm, opts)?;
    if fingerprint(&basis) != c.gb_fingerprint || basis.len() != c.gb_size {
        return Ok(Verification::Rejected("recomputed Gröbner basis does not match the fingerprint".into()));
    }
    Ok(if zero {
        Verification::Verified
    } else {
        Verification::Rejected("the monomial has a nonzero normal form".into())
    })
}

fn check_unit<F: Field>(m: &Matroid, k: F, c: &UnitIdealCertificate, opts: &GbOptions) -> Result<Verification, Error> {
    let pattern = SlackPattern::new(m);
    let mut pos = Vec::with_capacity(c.forest.len());
    for (label, col) in &c.forest {
        let Some(i) = (0..m.n()).find(|&i| m.label(i) == *label) else {
            return Ok(Verification::Rejected(format!("no element labelled {label}")));
        };
        if *col == 0 {
            return Ok(Verification::Rejected("columns are 1-based".into()));
        }
        pos.push((i, col - 1));
    }
    let forest = match Forest::from_positions(&pattern, &pos) {
        Ok(f) => f,
        Err(e) => return Ok(Verification::Rejected(e.to_string())),
    };
    let so = SlackIdealOptions { scaling: Scaling::Forest(forest), minors: c.minors, gb: opts.clone() };
    let si = slack_ideal(&pattern, k, &so)?;
    Ok(if si.ideal.is_unit(opts)? {
        Verification::Verified
    } else {
        Verification::Rejected("the scaled slack ideal is not the unit ideal".into())
    })
}

fn check_witness<F: Field>(m: &Matroid, k: F, rows: &[Vec<String>]) -> Result<Verification, Error> {
    let v = PointConfiguration::new(k.clone(), parse_matrix(&k, rows)?)?;
    Ok(match v.matroid() {
        Ok(w) if w == *m => Verification::Verified,
        Ok(_) => Verification::Rejected("the columns realize a different matroid".into()),
        Err(e) => Verification::Rejected(e.to_string()),
    })
}

/// Re-derives the claim of `cert` about `m` from the payload alone:
/// recomputes the truncated Gröbner basis and the normal form, the scaled
/// slack ideal, or the column matroid of the witness.
pub fn check_certificate(m: &Matroid, cert: &Certificate, opts: &GbOptions) -> Result<Verification, Error> {
    let kind_ok = match (&cert.payload, cert.kind) {
        (Payload::Monomial(_), super::CertificateKind::NonRealizableMonomial)
        | (Payload::UnitIdeal(_), super::CertificateKind::NonRealizableUnitIdeal)
        | (Payload::Witness { .. }, super::CertificateKind::RealizableWitness)
        | (Payload::Unknown { .. }, super::CertificateKind::Unknown) => true,
        _ => false,
    };
    if !kind_ok {
        return Ok(Verification::Rejected("payload does not match the certificate kind".into()));
    }
    with_field!(cert.field, |k| match &cert.payload {
        Payload::Monomial(c) => check_monomial(m, k, c, opts),
        Payload::UnitIdeal(c) => check_unit(m, k, c, opts),
        Payload::Witness { matrix } => check_witness(m, k, matrix),
        Payload::Unknown { .. } => Ok(Verification::NothingToCheck),
    })
}
