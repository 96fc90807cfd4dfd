//! Coefficient fields: the rationals and prime fields `GF(p)` with `p < 2^31`.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;
use crate::rational::Rational;

/// An exact field. Elements are plain values; all arithmetic goes through the
/// field so that prime fields can carry their modulus.
pub trait Field: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    /// `"Q"` or `"GF(p)"`.
    fn name(&self) -> String;
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` when infinite.
    fn size(&self) -> Option<u64>;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_rational(&self, v: &Rational) -> Result<Self::Elem, AlgebraError>;

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|i| self.mul(a, &i))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn parse(&self, s: &str) -> Result<Self::Elem, AlgebraError>;
    fn format(&self, a: &Self::Elem) -> String;

    /// Whether printing this element needs a sign in front when it is not the
    /// leading term (negative rationals; never for prime fields).
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }

    /// The scalar that brings a coefficient vector to canonical form: monic
    /// over prime fields, primitive integer content with positive leading
    /// coefficient over the rationals. `coeffs` is nonempty, `coeffs[0]` is
    /// the leading coefficient.
    fn normalizer(&self, coeffs: &[&Self::Elem]) -> Self::Elem {
        self.inv(coeffs[0]).expect("leading coefficient is nonzero")
    }

    /// Enumerates every element, for finite fields only.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    fn spec(&self) -> FieldSpec;
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn name(&self) -> String {
        "Q".into()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn size(&self) -> Option<u64> {
        None
    }
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_i64(&self, v: i64) -> Rational {
        Rational::from_int(v)
    }
    fn from_rational(&self, v: &Rational) -> Result<Rational, AlgebraError> {
        Ok(v.clone())
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &Rational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a.add(b)
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a.sub(b)
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a.mul(b)
    }
    fn neg(&self, a: &Rational) -> Rational {
        a.neg()
    }
    fn inv(&self, a: &Rational) -> Option<Rational> {
        a.inv()
    }
    fn parse(&self, s: &str) -> Result<Rational, AlgebraError> {
        Rational::from_str(s).map_err(|e| AlgebraError::Parse(e.to_string()))
    }
    fn format(&self, a: &Rational) -> String {
        a.to_string()
    }
    fn is_negative(&self, a: &Rational) -> bool {
        a.signum() < 0
    }

    fn normalizer(&self, coeffs: &[&Rational]) -> Rational {
        let mut l = BigInt::one();
        let mut g = BigInt::zero();
        for c in coeffs {
            let d = c.denom();
            l = l.lcm(&d);
            g = g.gcd(&c.numer());
        }
        let mut s = Rational::from_bigints(l, g);
        if coeffs[0].signum() < 0 {
            s = s.neg();
        }
        s
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
}

/// The prime field `GF(p)`, `p` prime and below `2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub const MAX_MODULUS: u32 = 1 << 31;

    pub fn new(p: u32) -> Result<Self, AlgebraError> {
        if p >= Self::MAX_MODULUS || !is_prime(p as u64) {
            return Err(AlgebraError::BadModulus(p as u64));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn reduce_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    fn reduce_big(&self, v: &BigInt) -> u32 {
        let m = BigInt::from(self.p);
        let r = v.mod_floor(&m);
        r.to_u32().expect("residue fits")
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn name(&self) -> String {
        format!("GF({})", self.p)
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn size(&self) -> Option<u64> {
        Some(self.p as u64)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u32 {
        self.reduce_i64(v)
    }
    fn from_rational(&self, v: &Rational) -> Result<u32, AlgebraError> {
        let n = self.reduce_big(&v.numer());
        let d = self.reduce_big(&v.denom());
        self.div(&n, &d)
            .ok_or_else(|| AlgebraError::Parse(format!("{v} has no image in GF({})", self.p)))
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (if s >= self.p as u64 { s - self.p as u64 } else { s }) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (*a as u64 + self.p as u64 - *b as u64) as u32
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on i64
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, *a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1);
        Some(self.reduce_i64(t))
    }
    fn parse(&self, s: &str) -> Result<u32, AlgebraError> {
        let r = Rational::from_str(s).map_err(|e| AlgebraError::Parse(e.to_string()))?;
        self.from_rational(&r)
    }
    fn format(&self, a: &u32) -> String {
        a.to_string()
    }
    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.p).collect())
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
}

/// A field named at run time, as it appears on the command line and in JSON.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FromStr for FieldSpec {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "Q" || t == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("F").or_else(|| t.strip_prefix("GF")))
            .ok_or_else(|| AlgebraError::Parse(format!("unknown field {s:?}")))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| AlgebraError::Parse(format!("unknown field {s:?}")))?;
        if p >= PrimeField::MAX_MODULUS as u64 || !is_prime(p) {
            return Err(AlgebraError::BadModulus(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = AlgebraError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Runs a generic body with the concrete field named by a [`FieldSpec`].
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$k:ident| $body:expr) => {{
        match $spec {
            $crate::field::FieldSpec::Rationals => {
                let $k = $crate::field::Rationals;
                $body
            }
            $crate::field::FieldSpec::Prime(p) => {
                let $k = $crate::field::PrimeField::new(p).expect("validated modulus");
                $body
            }
        }
    }};
}

/// Integer square root test used by root finding over the rationals.
pub(crate) fn exact_sqrt(v: &BigInt) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let r = v.sqrt();
    (&r * &r == *v).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn modulus_validation() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert_eq!("GF(7)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert!("GF(9)".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn prime_field_parse_fractions() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.parse("1/2").unwrap(), 3);
        assert_eq!(f.parse("-1").unwrap(), 4);
        assert!(f.parse("1/5").is_err());
    }

    #[test]
    fn rational_normalizer_is_primitive() {
        let q = Rationals;
        let a = Rational::new(-2, 3);
        let b = Rational::new(4, 9);
        let s = q.normalizer(&[&a, &b]);
        assert_eq!(q.mul(&a, &s), Rational::from_int(3));
        assert_eq!(q.mul(&b, &s), Rational::from_int(-2));
    }

    proptest! {
        #[test]
        fn prime_field_axioms(a in 0u32..32003, b in 0u32..32003, c in 0u32..32003) {
            let f = PrimeField::new(32003).unwrap();
            prop_assert_eq!(f.mul(&f.add(&a, &b), &c), f.add(&f.mul(&a, &c), &f.mul(&b, &c)));
            prop_assert_eq!(f.add(&f.sub(&a, &b), &b), a);
            if a != 0 {
                prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            }
        }
    }
}
