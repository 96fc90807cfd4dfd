//! Sparse multivariate polynomials over an exact field.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};

pub type Term<E> = (Monomial, E);

/// A polynomial ring: coefficient field, named variables and the active
/// monomial order. Shared behind an `Arc` by all of its polynomials.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    names: Vec<String>,
    index: HashMap<String, usize>,
    order: MonomialOrder,
}

pub type Ring<F> = Arc<PolyRing<F>>;

impl<F: Field> PartialEq for PolyRing<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.order == other.order && self.names == other.names
    }
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>, order: MonomialOrder) -> Ring<F> {
        let index = names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        if let MonomialOrder::Elimination(mask) = &order {
            assert_eq!(mask.len(), names.len(), "elimination mask size");
        }
        Arc::new(PolyRing { field, names, index, order })
    }

    /// Ring with variables `x0, x1, ...` under degrevlex.
    pub fn with_vars(field: F, prefix: &str, n: usize) -> Ring<F> {
        Self::new(field, (0..n).map(|i| format!("{prefix}{i}")).collect(), MonomialOrder::DegRevLex)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Same variables and field under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring<F> {
        PolyRing::new(self.field.clone(), self.names.clone(), order)
    }

    pub fn same(a: &Ring<F>, b: &Ring<F>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

/// A polynomial: terms sorted strictly decreasing in the ring's order, no
/// zero coefficients. The zero polynomial has no terms.
#[derive(Clone)]
pub struct MultiPoly<F: Field> {
    ring: Ring<F>,
    terms: Vec<Term<F::Elem>>,
}

impl<F: Field> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        PolyRing::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for MultiPoly<F> {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(ring: &Ring<F>) -> Self {
        MultiPoly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring<F>, c: F::Elem) -> Self {
        if ring.field().is_zero(&c) {
            return Self::zero(ring);
        }
        MultiPoly { ring: ring.clone(), terms: vec![(Monomial::one(ring.nvars()), c)] }
    }

    pub fn one(ring: &Ring<F>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn var(ring: &Ring<F>, i: usize) -> Self {
        MultiPoly { ring: ring.clone(), terms: vec![(Monomial::var(ring.nvars(), i), ring.field().one())] }
    }

    pub fn monomial(ring: &Ring<F>, m: Monomial, c: F::Elem) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        if ring.field().is_zero(&c) {
            return Self::zero(ring);
        }
        MultiPoly { ring: ring.clone(), terms: vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zeros.
    pub fn from_terms(ring: &Ring<F>, mut terms: Vec<Term<F::Elem>>) -> Self {
        let k = ring.field();
        let ord = ring.order();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        let mut out: Vec<Term<F::Elem>> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = k.add(&last.1, &c);
                    if k.is_zero(&last.1) {
                        out.pop();
                    }
                    continue;
                }
            }
            if !k.is_zero(&c) {
                out.push((m, c));
            }
        }
        MultiPoly { ring: ring.clone(), terms: out }
    }

    /// Wraps terms already in canonical order. Checked in debug builds.
    pub(crate) fn from_sorted(ring: &Ring<F>, terms: Vec<Term<F::Elem>>) -> Self {
        let p = MultiPoly { ring: ring.clone(), terms };
        debug_assert!(p.validate().is_ok(), "{:?}", p.validate());
        p
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term<F::Elem>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F::Elem>> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.field().is_one(&self.terms[0].1)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    /// Variables that occur in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                seen[i] = true;
            }
        }
        seen.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| i).collect()
    }

    /// Checks the canonical-form invariants.
    pub fn validate(&self) -> Result<(), String> {
        let k = self.field();
        let ord = self.ring.order();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if m.nvars() != self.ring.nvars() {
                return Err(format!("term {i} has {} variables", m.nvars()));
            }
            if k.is_zero(c) {
                return Err(format!("term {i} has a zero coefficient"));
            }
            if i > 0 && ord.cmp(&self.terms[i - 1].0, m) != Ordering::Greater {
                return Err(format!("terms {} and {i} are not strictly decreasing", i - 1));
            }
        }
        Ok(())
    }

    fn check_ring(&self, other: &Self) -> Result<(), AlgebraError> {
        if PolyRing::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch(format!(
                "{} over {} vs {} over {}",
                self.ring.order().name(),
                self.field().name(),
                other.ring.order().name(),
                other.field().name()
            )))
        }
    }

    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self, AlgebraError> {
        self.check_ring(other)?;
        let k = self.field();
        let ord = self.ring.order();
        let terms = match op {
            ArithOp::Add => merge_lin(k, ord, &self.terms, &other.terms, &k.one(), None),
            ArithOp::Sub => merge_lin(k, ord, &self.terms, &other.terms, &k.neg(&k.one()), None),
            ArithOp::Mul => mul_terms(k, ord, &self.terms, &other.terms),
        };
        Ok(MultiPoly { ring: self.ring.clone(), terms })
    }

    pub fn add(&self, other: &Self) -> Self {
        self.arith(other, ArithOp::Add).expect("ring mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.arith(other, ArithOp::Sub).expect("ring mismatch")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.arith(other, ArithOp::Mul).expect("ring mismatch")
    }

    pub fn neg(&self) -> Self {
        let k = self.field();
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), k.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let k = self.field();
        if k.is_zero(c) {
            return Self::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), k.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scales to the canonical representative (monic, or primitive integer
    /// content with positive leading coefficient over the rationals).
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs: Vec<&F::Elem> = self.terms.iter().map(|t| &t.1).collect();
        let s = self.field().normalizer(&coeffs);
        self.scale(&s)
    }

    /// Divides out the largest monomial dividing every term, restricted to
    /// the variables flagged in `vars`.
    pub fn strip_monomial_content(&self, vars: &[bool]) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.terms[0].0.restrict(vars);
        for (m, _) in &self.terms[1..] {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        if g.is_one() {
            return self.clone();
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.div(&g).unwrap(), c.clone())).collect(),
        }
    }

    /// Substitutes field values for some variables. With `partial = false`
    /// every variable that occurs must be assigned.
    pub fn evaluate(
        &self,
        point: &HashMap<usize, F::Elem>,
        partial: bool,
    ) -> Result<Self, AlgebraError> {
        let k = self.field();
        let n = self.ring.nvars();
        if let Some(bad) = point.keys().find(|&&i| i >= n) {
            return Err(AlgebraError::UnknownVariable(format!("index {bad}")));
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = m.exponents().to_vec();
            for (i, e) in exps.iter_mut().enumerate() {
                if *e == 0 {
                    continue;
                }
                match point.get(&i) {
                    Some(v) => {
                        coeff = k.mul(&coeff, &k.pow(v, *e as u64));
                        *e = 0;
                    }
                    None if !partial => {
                        return Err(AlgebraError::Usage(format!(
                            "variable {} is unassigned",
                            self.ring.name(i)
                        )))
                    }
                    None => {}
                }
            }
            out.push((Monomial::from_exponents(exps), coeff));
        }
        Ok(Self::from_terms(&self.ring, out))
    }

    /// Evaluates at a full point and returns the field value.
    pub fn eval_full(&self, values: &[F::Elem]) -> F::Elem {
        let k = self.field();
        let mut acc = k.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in m.support() {
                t = k.mul(&t, &k.pow(&values[i], m.exponent(i) as u64));
            }
            acc = k.add(&acc, &t);
        }
        acc
    }

    /// Moves the polynomial into another ring, matching variables by name.
    pub fn to_ring(&self, target: &Ring<F>) -> Result<Self, AlgebraError> {
        if self.ring.field() != target.field() {
            return Err(AlgebraError::RingMismatch("different fields".into()));
        }
        let map: Vec<Option<usize>> =
            self.ring.names().iter().map(|n| target.var_index(n)).collect();
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mm = m.remap(&map, target.nvars()).ok_or_else(|| {
                let missing = m.support().find(|&i| map[i].is_none()).unwrap();
                AlgebraError::UnknownVariable(self.ring.name(missing).to_string())
            })?;
            out.push((mm, c.clone()));
        }
        Ok(Self::from_terms(target, out))
    }

    /// `self / d` when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let k = self.field();
        let ord = self.ring.order();
        let (dlm, dlc) = (d.leading_monomial()?, d.leading_coeff()?);
        let mut r = self.terms.clone();
        let mut q = Vec::new();
        while let Some((m, c)) = r.first() {
            let t = m.div(dlm)?;
            let c = k.div(c, dlc)?;
            r = merge_lin(k, ord, &r, &d.terms, &k.neg(&c), Some(&t));
            q.push((t, c));
        }
        Some(Self::from_terms(&self.ring, q))
    }

    /// Parses the canonical text form, e.g. `x_{1,2}*x_{2,3} - 3/2*x_{3,1}^2 + 1`.
    pub fn parse(ring: &Ring<F>, text: &str) -> Result<Self, AlgebraError> {
        parse_poly(ring, text)
    }
}

/// `a + s*b`, optionally with `b` multiplied by a monomial first.
pub(crate) fn merge_lin<F: Field>(
    k: &F,
    ord: &MonomialOrder,
    a: &[Term<F::Elem>],
    b: &[Term<F::Elem>],
    s: &F::Elem,
    shift: Option<&Monomial>,
) -> Vec<Term<F::Elem>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let scaled = |t: &Term<F::Elem>| -> Term<F::Elem> {
        let m = match shift {
            Some(s) => t.0.mul(s),
            None => t.0.clone(),
        };
        (m, k.mul(&t.1, s))
    };
    let mut pending: Option<Term<F::Elem>> = None;
    loop {
        let bj = match pending.take() {
            Some(t) => Some(t),
            None if j < b.len() => {
                let t = scaled(&b[j]);
                j += 1;
                Some(t)
            }
            None => None,
        };
        match (i < a.len(), bj) {
            (false, None) => break,
            (true, None) => {
                out.extend_from_slice(&a[i..]);
                break;
            }
            (false, Some(t)) => {
                out.push(t);
                while j < b.len() {
                    out.push(scaled(&b[j]));
                    j += 1;
                }
                break;
            }
            (true, Some(t)) => match ord.cmp(&a[i].0, &t.0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                    pending = Some(t);
                }
                Ordering::Less => out.push(t),
                Ordering::Equal => {
                    let c = k.add(&a[i].1, &t.1);
                    if !k.is_zero(&c) {
                        out.push((t.0, c));
                    }
                    i += 1;
                }
            },
        }
    }
    out
}

pub(crate) fn mul_terms<F: Field>(
    k: &F,
    ord: &MonomialOrder,
    a: &[Term<F::Elem>],
    b: &[Term<F::Elem>],
) -> Vec<Term<F::Elem>> {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut acc: Vec<Term<F::Elem>> = Vec::new();
    for (m, c) in small {
        acc = merge_lin(k, ord, &acc, large, c, Some(m));
    }
    acc
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let k = self.field();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = k.is_negative(c);
            let abs = if neg { k.neg(c) } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = format_monomial(&self.ring, m);
            if mono.is_empty() {
                write!(f, "{}", k.format(&abs))?;
            } else if k.is_one(&abs) {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", k.format(&abs))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn format_monomial<F: Field>(ring: &PolyRing<F>, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for i in m.support() {
        let e = m.exponent(i);
        if e == 1 {
            parts.push(ring.name(i).to_string());
        } else {
            parts.push(format!("{}^{e}", ring.name(i)));
        }
    }
    parts.join("*")
}

fn parse_poly<F: Field>(ring: &Ring<F>, text: &str) -> Result<MultiPoly<F>, AlgebraError> {
    let k = ring.field();
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |msg: &str| AlgebraError::Parse(format!("{msg} in {text:?}"));
    let mut pos = 0usize;
    let mut terms = Vec::new();
    if chars.is_empty() {
        return Err(err("empty polynomial"));
    }
    while pos < chars.len() {
        let mut sign = k.one();
        if chars[pos] == '+' || chars[pos] == '-' {
            if chars[pos] == '-' {
                sign = k.neg(&sign);
            }
            pos += 1;
        } else if pos > 0 {
            return Err(err("expected + or -"));
        }
        let mut coeff = sign;
        let mut exps = vec![0u16; ring.nvars()];
        loop {
            if pos >= chars.len() {
                return Err(err("dangling operator"));
            }
            let c = chars[pos];
            if c.is_ascii_digit() {
                let start = pos;
                while pos < chars.len() && (chars[pos].is_ascii_digit() || chars[pos] == '/') {
                    pos += 1;
                }
                let lit: String = chars[start..pos].iter().collect();
                coeff = k.mul(&coeff, &k.parse(&lit)?);
            } else if c.is_alphabetic() || c == '_' {
                let start = pos;
                let mut depth = 0i32;
                while pos < chars.len() {
                    let ch = chars[pos];
                    if ch == '{' {
                        depth += 1;
                    } else if ch == '}' {
                        depth -= 1;
                    } else if depth == 0 && !(ch.is_alphanumeric() || ch == '_') {
                        break;
                    }
                    pos += 1;
                }
                let name: String = chars[start..pos].iter().collect();
                let idx =
                    ring.var_index(&name).ok_or_else(|| AlgebraError::UnknownVariable(name.clone()))?;
                let mut e = 1u16;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    let s = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let lit: String = chars[s..pos].iter().collect();
                    e = lit.parse().map_err(|_| err("bad exponent"))?;
                }
                exps[idx] += e;
            } else {
                return Err(err(&format!("unexpected character {c:?}")));
            }
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                continue;
            }
            break;
        }
        terms.push((Monomial::from_exponents(exps), coeff));
    }
    Ok(MultiPoly::from_terms(ring, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::rational::Rational;
    use proptest::prelude::*;

    fn qring(names: &[&str]) -> Ring<Rationals> {
        PolyRing::new(Rationals, names.iter().map(|s| s.to_string()).collect(), MonomialOrder::DegRevLex)
    }

    #[test]
    fn cancellation_and_difference_of_squares() {
        let r = qring(&["x", "y"]);
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let one = MultiPoly::one(&r);
        assert_eq!(x.add(&one).add(&x.neg()), one);
        let d = x.add(&y).mul(&x.sub(&y));
        assert_eq!(d.to_string(), "x^2 - y^2");
        assert!(d.validate().is_ok());
    }

    #[test]
    fn squaring_in_characteristic_two() {
        let f2 = PrimeField::new(2).unwrap();
        let r = PolyRing::new(f2, vec!["x".into()], MonomialOrder::DegRevLex);
        let x1 = MultiPoly::var(&r, 0).add(&MultiPoly::one(&r));
        assert_eq!(x1.mul(&x1).to_string(), "x^2 + 1");
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = qring(&["x", "y"]);
        let b = a.with_order(MonomialOrder::Lex);
        let p = MultiPoly::var(&a, 0);
        let q = MultiPoly::var(&b, 0);
        assert!(matches!(p.arith(&q, ArithOp::Add), Err(AlgebraError::RingMismatch(_))));
    }

    #[test]
    fn evaluate_full_and_partial() {
        let r = qring(&["x_{1,2}", "x_{2,3}", "x_{3,1}", "x_{1,3}", "x_{2,1}", "x_{3,2}"]);
        let f = MultiPoly::parse(&r, "x_{1,2}*x_{2,3}*x_{3,1} + x_{1,3}*x_{2,1}*x_{3,2}").unwrap();
        let all: HashMap<usize, Rational> = (0..6).map(|i| (i, Rational::one())).collect();
        assert_eq!(f.evaluate(&all, false).unwrap().to_string(), "2");
        assert_eq!(f.evaluate(&HashMap::new(), true).unwrap(), f);
        assert!(f.evaluate(&HashMap::new(), false).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let r = qring(&["x_{3,6}", "x_{6,5}", "x_{3,5}", "x_{6,6}"]);
        let f = MultiPoly::parse(&r, "x_{3,6}*x_{6,5} + x_{3,5}*x_{6,6}").unwrap();
        let g = MultiPoly::parse(&r, &f.to_string()).unwrap();
        assert_eq!(f, g);
        let h = MultiPoly::parse(&r, "-3/2*x_{3,6}^2 + 4").unwrap();
        assert_eq!(h.to_string(), "-3/2*x_{3,6}^2 + 4");
        assert!(MultiPoly::parse(&r, "x_{9,9}").is_err());
    }

    #[test]
    fn content_stripping() {
        let r = qring(&["x", "y", "z"]);
        let f = MultiPoly::parse(&r, "x^2*y*z + x*y^2").unwrap();
        let g = f.strip_monomial_content(&[true, true, true]);
        assert_eq!(g.to_string(), "x*z + y");
        let h = f.strip_monomial_content(&[false, true, true]);
        assert_eq!(h.to_string(), "x^2*z + x*y");
    }

    fn small_poly(r: Ring<Rationals>) -> impl Strategy<Value = MultiPoly<Rationals>> {
        proptest::collection::vec((proptest::collection::vec(0u16..3, 3), -5i64..5), 0..5).prop_map(
            move |ts| {
                MultiPoly::from_terms(
                    &r,
                    ts.into_iter()
                        .map(|(e, c)| (Monomial::from_exponents(e), Rational::from_int(c)))
                        .collect(),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms_over_q(a in small_poly(qring(&["x","y","z"])), b in small_poly(qring(&["x","y","z"])), c in small_poly(qring(&["x","y","z"]))) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert!(a.mul(&b).validate().is_ok());
            prop_assert!(a.sub(&b).validate().is_ok());
        }

        #[test]
        fn ring_axioms_over_gf7(ts in proptest::collection::vec((proptest::collection::vec(0u16..3, 2), 0u32..7), 0..4),
                                us in proptest::collection::vec((proptest::collection::vec(0u16..3, 2), 0u32..7), 0..4)) {
            let f7 = PrimeField::new(7).unwrap();
            let r = PolyRing::new(f7, vec!["x".into(), "y".into()], MonomialOrder::Lex);
            let mk = |v: &Vec<(Vec<u16>, u32)>| MultiPoly::from_terms(&r, v.iter().map(|(e, c)| (Monomial::from_exponents(e.clone()), *c)).collect());
            let a = mk(&ts);
            let b = mk(&us);
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).mul(&a.sub(&b)), a.mul(&a).sub(&b.mul(&b)));
            prop_assert!(a.mul(&b).validate().is_ok());
        }
    }
}
