//! Dense univariate polynomials: gcds, squarefreeness and roots in the base
//! field.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{exact_sqrt, Field, PrimeField, Rationals};
use crate::linalg::{determinant, Matrix};
use crate::poly::MultiPoly;
use crate::rational::Rational;

/// Coefficients are stored lowest degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        UniPoly { field, coeffs: Vec::new() }
    }

    pub fn x(field: F) -> Self {
        let c = vec![field.zero(), field.one()];
        UniPoly { field, coeffs: c }
    }

    /// `p` as a polynomial in variable `v`, if no other variable occurs.
    pub fn from_multi(p: &MultiPoly<F>, v: usize) -> Option<Self> {
        let k = p.field().clone();
        let mut coeffs: Vec<F::Elem> = Vec::new();
        for (m, c) in p.terms() {
            if m.support().any(|u| u != v) {
                return None;
            }
            let e = m.exponent(v) as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, k.zero());
            }
            coeffs[e] = c.clone();
        }
        Some(Self::new(k, coeffs))
    }

    /// Back into a multivariate ring as a polynomial in variable `v`.
    pub fn to_multi(&self, ring: &crate::poly::Ring<F>, v: usize) -> MultiPoly<F> {
        let n = ring.nvars();
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(e, c)| (crate::monomial::Monomial::var_pow(n, v, e as u16), c.clone()))
            .collect();
        MultiPoly::from_terms(ring, terms)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let inv = self.field.inv(l).unwrap();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Self::new(self.field.clone(), self.coeffs.iter().map(|a| self.field.mul(a, c)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let k = &self.field;
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = k.zero();
        let c = (0..n)
            .map(|i| k.add(self.coeffs.get(i).unwrap_or(&z), o.coeffs.get(i).unwrap_or(&z)))
            .collect();
        Self::new(k.clone(), c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&self.field.neg(&self.field.one())))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let k = &self.field;
        if self.is_zero() || o.is_zero() {
            return Self::zero(k.clone());
        }
        let mut c = vec![k.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = k.add(&c[i + j], &k.mul(a, b));
            }
        }
        Self::new(k.clone(), c)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let k = &self.field;
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = k.inv(d.lead().unwrap()).unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![k.zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let c = k.mul(&r[top], &inv);
            let shift = top - dd;
            for (i, b) in d.coeffs.iter().enumerate() {
                r[shift + i] = k.sub(&r[shift + i], &k.mul(&c, b));
            }
            q[shift] = c;
            while r.last().is_some_and(|x| k.is_zero(x)) {
                r.pop();
            }
        }
        (Self::new(k.clone(), q), Self::new(k.clone(), r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let k = &self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| k.mul(&k.from_i64(i as i64), a))
            .collect();
        Self::new(k.clone(), c)
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let k = &self.field;
        self.coeffs.iter().rev().fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
    }

    /// No repeated factor over the algebraic closure.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) | Some(1) => true,
            Some(_) => {
                let d = self.derivative();
                !d.is_zero() && self.gcd(&d).degree() == Some(0)
            }
        }
    }

    pub fn mul_mod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let k = &self.field;
        let mut base = self.rem(m);
        let mut acc = Self::new(k.clone(), vec![k.one()]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            base = base.mul_mod(&base, m);
            e >>= 1;
        }
        acc
    }

    pub fn format_in(&self, var: &str) -> String {
        let k = &self.field;
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if k.is_zero(c) {
                continue;
            }
            let neg = k.is_negative(c);
            let mag = if neg { k.neg(c) } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if mono.is_empty() {
                out.push_str(&k.format(&mag));
            } else if k.is_one(&mag) {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{mono}", k.format(&mag)));
            }
        }
        out
    }
}

impl<F: Field> fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_in("t"))
    }
}

/// Roots in the coefficient field.
pub trait FieldRoots: Field {
    /// Distinct roots in increasing order, or `None` when the search cannot
    /// be completed (coefficients too large to factor over the rationals).
    fn roots(&self, f: &UniPoly<Self>) -> Option<Vec<Self::Elem>>;

    /// Distinct real roots, for fields that embed in the reals.
    fn real_root_count(&self, _f: &UniPoly<Self>) -> Option<usize> {
        None
    }
}

impl FieldRoots for PrimeField {
    fn roots(&self, f: &UniPoly<Self>) -> Option<Vec<u32>> {
        let d = f.degree()?;
        if d == 0 {
            return Some(Vec::new());
        }
        let p = self.modulus();
        if p <= 1 << 12 {
            return Some((0..p).filter(|a| self.is_zero(&f.eval(a))).collect());
        }
        // product of the distinct linear factors: gcd(f, x^p − x)
        let x = UniPoly::x(self.clone());
        let xp = x.pow_mod(p as u64, f);
        let g = f.gcd(&xp.sub(&x));
        let mut out = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        split_linear(self, g, &mut rng, &mut out);
        out.sort_unstable();
        Some(out)
    }
}

/// Equal-degree splitting of a product of distinct linear factors.
fn split_linear(k: &PrimeField, g: UniPoly<PrimeField>, rng: &mut ChaCha8Rng, out: &mut Vec<u32>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let m = g.monic();
            out.push(k.neg(&m.coeffs()[0]));
        }
        Some(_) => loop {
            let a: u32 = rng.gen_range(0..k.modulus());
            let shifted = UniPoly::new(k.clone(), vec![a, 1]);
            let h = shifted.pow_mod(((k.modulus() - 1) / 2) as u64, &g);
            let one = UniPoly::new(k.clone(), vec![1]);
            let f1 = g.gcd(&h.sub(&one));
            let df = f1.degree().unwrap_or(0);
            if df > 0 && Some(df) < g.degree() {
                let (q, _) = g.div_rem(&f1);
                split_linear(k, f1, rng, out);
                split_linear(k, q, rng, out);
                return;
            }
        },
    }
}

/// Primitive integer coefficients of a rational polynomial (lowest first).
pub fn integer_coefficients(f: &UniPoly<Rationals>) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in f.coeffs() {
        lcm = lcm.lcm(&c.denom());
    }
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g).collect()
}

const TRIAL_LIMIT: u64 = 1_000_000;
const MAX_CANDIDATES: usize = 200_000;

fn divisors(v: &BigInt) -> Option<Vec<u64>> {
    let mut n = v.abs().to_u64()?;
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut q = 2u64;
    while q * q <= n && q <= TRIAL_LIMIT {
        if n % q == 0 {
            let mut e = 0;
            while n % q == 0 {
                n /= q;
                e += 1;
            }
            factors.push((q, e));
        }
        q += 1;
    }
    if n > 1 {
        if (n as u128) > (TRIAL_LIMIT as u128) * (TRIAL_LIMIT as u128) {
            return None;
        }
        factors.push((n, 1));
    }
    let mut divs = vec![1u64];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut m = *d;
            for _ in 0..=e {
                next.push(m);
                m = m.saturating_mul(p);
            }
        }
        divs = next;
        if divs.len() > MAX_CANDIDATES {
            return None;
        }
    }
    Some(divs)
}

impl FieldRoots for Rationals {
    fn real_root_count(&self, f: &UniPoly<Self>) -> Option<usize> {
        Some(real_root_count(f))
    }

    fn roots(&self, f: &UniPoly<Self>) -> Option<Vec<Rational>> {
        let d = f.degree()?;
        let c = integer_coefficients(f);
        let mut out = Vec::new();
        // strip the factor x^k
        let low = c.iter().position(|v| !v.is_zero()).unwrap();
        if low > 0 {
            out.push(Rational::zero());
        }
        let c = &c[low..];
        let d = d - low;
        match d {
            0 => {}
            1 => out.push(Rational::from_bigints(-c[0].clone(), c[1].clone())),
            2 => {
                let (a, b, cc) = (&c[2], &c[1], &c[0]);
                let disc = b * b - BigInt::from(4) * a * cc;
                if let Some(s) = exact_sqrt(&disc) {
                    let two_a = BigInt::from(2) * a;
                    out.push(Rational::from_bigints(-b + &s, two_a.clone()));
                    out.push(Rational::from_bigints(-b - &s, two_a));
                }
            }
            _ => {
                let ps = divisors(&c[0])?;
                let qs = divisors(&c[d])?;
                if ps.len().saturating_mul(qs.len()) > MAX_CANDIDATES {
                    return None;
                }
                for p in &ps {
                    for q in &qs {
                        for s in [1i64, -1] {
                            let r = Rational::from_bigints(BigInt::from(*p) * s, BigInt::from(*q));
                            if f.eval(&r).is_zero() {
                                out.push(r);
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        Some(out)
    }
}

fn sign_at_infinity(f: &UniPoly<Rationals>, negative: bool) -> i32 {
    let d = f.degree().unwrap_or(0);
    let s = f.lead().map_or(0, |l| l.signum());
    if negative && d % 2 == 1 {
        -s
    } else {
        s
    }
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let v: Vec<i32> = signs.filter(|&s| s != 0).collect();
    v.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots (Sturm's theorem).
pub fn real_root_count(f: &UniPoly<Rationals>) -> usize {
    if f.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let g = f.gcd(&f.derivative());
    let sq = f.div_rem(&g).0;
    let mut seq = vec![sq.clone(), sq.derivative()];
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&Rational::from_int(-1)));
    }
    let at_neg = sign_changes(seq.iter().map(|p| sign_at_infinity(p, true)));
    let at_pos = sign_changes(seq.iter().map(|p| sign_at_infinity(p, false)));
    at_neg - at_pos
}

/// Resultant of `f` and `g` as the determinant of their Sylvester matrix.
pub fn resultant<F: Field>(f: &UniPoly<F>, g: &UniPoly<F>) -> F::Elem {
    let k = f.field();
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else { return k.zero() };
    if m + n == 0 {
        return k.one();
    }
    let size = m + n;
    let mut s = Matrix::filled(size, size, k.zero());
    for r in 0..n {
        for (i, c) in f.coeffs().iter().rev().enumerate() {
            s.set(r, r + i, c.clone());
        }
    }
    for r in 0..m {
        for (i, c) in g.coeffs().iter().rev().enumerate() {
            s.set(n + r, r + i, c.clone());
        }
    }
    determinant(k, &s).expect("square")
}

/// `(−1)^{d(d−1)/2} · res(f, f') / lead(f)`; for `ax² + bx + c` this is
/// `b² − 4ac`.
pub fn discriminant<F: Field>(f: &UniPoly<F>) -> Option<F::Elem> {
    let k = f.field();
    let d = f.degree().filter(|&d| d >= 1)?;
    let r = resultant(f, &f.derivative());
    let r = if (d * (d - 1) / 2) % 2 == 1 { k.neg(&r) } else { r };
    k.div(&r, f.lead()?)
}
