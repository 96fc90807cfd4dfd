use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// A power product over a fixed, densely indexed variable universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u16]>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars].into_boxed_slice(), deg: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::var_pow(nvars, i, 1)
    }

    pub fn var_pow(nvars: usize, i: usize, e: u16) -> Self {
        let mut exps = vec![0u16; nvars];
        exps[i] = e;
        Monomial { exps: exps.into_boxed_slice(), deg: e as u32 }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps: exps.into_boxed_slice(), deg }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: Box<[u16]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let exps: Box<[u16]> =
            self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, deg: self.deg - other.deg })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let exps: Vec<u16> =
            self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        Self::from_exponents(exps)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let exps: Vec<u16> =
            self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect();
        Self::from_exponents(exps)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Restricts to the variables flagged in `keep`, zeroing the rest.
    pub fn restrict(&self, keep: &[bool]) -> Self {
        let exps: Vec<u16> =
            self.exps.iter().zip(keep).map(|(e, k)| if *k { *e } else { 0 }).collect();
        Self::from_exponents(exps)
    }

    /// Re-indexes into a universe of size `nvars`; `map[i]` is the new index
    /// of old variable `i`. Variables mapped to `None` must have exponent 0.
    pub fn remap(&self, map: &[Option<usize>], nvars: usize) -> Option<Self> {
        let mut exps = vec![0u16; nvars];
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            exps[map[i]?] = e;
        }
        Some(Self::from_exponents(exps))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..])
    }
}

/// A monomial order over the ring's variable sequence (variable 0 is the
/// largest variable).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Block elimination order: monomials are compared first by degrevlex on
    /// the flagged variables, then by degrevlex on the rest. Any monomial
    /// involving a flagged variable exceeds every monomial free of them.
    Elimination(Arc<[bool]>),
}

impl MonomialOrder {
    pub fn elimination(first_block: &[usize], nvars: usize) -> Self {
        let mut mask = vec![false; nvars];
        for &i in first_block {
            mask[i] = true;
        }
        MonomialOrder::Elimination(mask.into())
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::DegRevLex => "degrevlex".into(),
            MonomialOrder::Elimination(mask) => {
                let k = mask.iter().filter(|&&b| b).count();
                format!("elimination({k})")
            }
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::DegRevLex)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.exps.iter().zip(b.exps.iter()) {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex => {
                if a.deg != b.deg {
                    return a.deg.cmp(&b.deg);
                }
                for (x, y) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Elimination(mask) => {
                block_cmp(a, b, mask, true).then_with(|| block_cmp(a, b, mask, false))
            }
        }
    }
}

fn block_cmp(a: &Monomial, b: &Monomial, mask: &[bool], first: bool) -> Ordering {
    let mut da = 0u32;
    let mut db = 0u32;
    for i in 0..mask.len() {
        if mask[i] == first {
            da += a.exps[i] as u32;
            db += b.exps[i] as u32;
        }
    }
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..mask.len()).rev() {
        if mask[i] == first && a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}
