//! Finite-dimensional quotient algebras `k[x]/I` for zero-dimensional `I`.

use std::collections::{HashMap, VecDeque};

use crate::error::AlgebraError;
use crate::field::Field;
use crate::linalg::{kernel, Matrix};
use crate::monomial::Monomial;
use crate::poly::{MultiPoly, Ring};

use super::normal_form;

/// Default cap on the number of standard monomials.
pub const MAX_QUOTIENT_DIM: usize = 20_000;

/// Standard monomials of a monomial ideal, or `None` if there are
/// infinitely many or more than `cap`.
pub fn standard_monomials(lms: &[Monomial], nvars: usize, cap: usize) -> Option<Vec<Monomial>> {
    for v in 0..nvars {
        let pure = lms.iter().any(|m| m.support().all(|i| i == v) && !m.is_one());
        if !pure && !lms.iter().any(|m| m.is_one()) {
            return None;
        }
    }
    let mut seen: HashMap<Monomial, ()> = HashMap::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    let one = Monomial::one(nvars);
    if lms.iter().any(|g| g.divides(&one)) {
        return Some(out);
    }
    queue.push_back(one.clone());
    seen.insert(one, ());
    while let Some(m) = queue.pop_front() {
        out.push(m.clone());
        if out.len() > cap {
            return None;
        }
        for v in 0..nvars {
            let next = m.mul(&Monomial::var(nvars, v));
            if seen.contains_key(&next) || lms.iter().any(|g| g.divides(&next)) {
                continue;
            }
            seen.insert(next.clone(), ());
            queue.push_back(next);
        }
    }
    Some(out)
}

/// `k[x]/I` with a monomial basis, built from a Gröbner basis of `I`.
pub struct Quotient<F: Field> {
    ring: Ring<F>,
    gb: Vec<MultiPoly<F>>,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl<F: Field> Quotient<F> {
    /// `None` if `I` is not zero-dimensional (or the quotient is too large).
    pub fn new(ring: &Ring<F>, gb: &[MultiPoly<F>]) -> Option<Self> {
        let lms: Vec<Monomial> = gb.iter().filter_map(|g| g.leading_monomial().cloned()).collect();
        let mut basis = standard_monomials(&lms, ring.nvars(), MAX_QUOTIENT_DIM)?;
        basis.sort_by(|a, b| ring.order().cmp(a, b));
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Some(Quotient { ring: ring.clone(), gb: gb.to_vec(), basis, index })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    /// Coordinates of `NF(f)` in the monomial basis.
    pub fn coords(&self, f: &MultiPoly<F>) -> Result<Vec<F::Elem>, AlgebraError> {
        let k = self.ring.field();
        let nf = normal_form(f, &self.gb)?;
        let mut v = vec![k.zero(); self.basis.len()];
        for (m, c) in nf.terms() {
            let i = self.index[m];
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn element(&self, coords: &[F::Elem]) -> MultiPoly<F> {
        let terms = self.basis.iter().cloned().zip(coords.iter().cloned()).collect();
        MultiPoly::from_terms(&self.ring, terms)
    }

    /// Matrix of multiplication by `f`: column `j` holds the coordinates of
    /// `f · basis[j]`.
    pub fn mult_matrix(&self, f: &MultiPoly<F>) -> Result<Matrix<F::Elem>, AlgebraError> {
        let k = self.ring.field();
        let d = self.dim();
        let mut m = Matrix::filled(d, d, k.zero());
        for (j, b) in self.basis.iter().enumerate() {
            let col = self.coords(&f.mul_monomial(b))?;
            for (i, c) in col.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }

    /// Generators of `{g : f^k g ∈ I for some k}` modulo `I`: the
    /// generalized kernel of multiplication by `f`.
    pub fn saturation_generators(&self, f: &MultiPoly<F>) -> Result<Vec<MultiPoly<F>>, AlgebraError> {
        let k = self.ring.field();
        let d = self.dim();
        if d == 0 {
            return Ok(Vec::new());
        }
        let m = self.mult_matrix(f)?;
        // m^d by repeated squaring
        let mut p = m.clone();
        let mut e = 1usize;
        while e < d {
            p = crate::linalg::mat_mul(k, &p, &p);
            e *= 2;
        }
        Ok(kernel(k, &p).into_iter().map(|v| self.element(&v)).collect())
    }

    /// Monic generator of `I ∩ k[x_v]`: the minimal polynomial of `x_v`
    /// acting on `1`, returned as coefficients lowest degree first.
    pub fn eliminant(&self, v: usize) -> Result<Vec<F::Elem>, AlgebraError> {
        let k = self.ring.field();
        let d = self.dim();
        let x = MultiPoly::var(&self.ring, v);
        // Krylov sequence 1, x, x², ... until dependent
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        let mut cur = MultiPoly::one(&self.ring);
        for _ in 0..=d {
            rows.push(self.coords(&cur)?);
            let cols = rows.len();
            let mut mat = Matrix::filled(d, cols, k.zero());
            for (j, r) in rows.iter().enumerate() {
                for (i, c) in r.iter().enumerate() {
                    mat.set(i, j, c.clone());
                }
            }
            let ker = kernel(k, &mat);
            if let Some(vec) = ker.into_iter().next() {
                let lead = vec.last().unwrap().clone();
                let inv = k.inv(&lead).expect("minimal dependency ends in a nonzero coefficient");
                return Ok(vec.iter().map(|c| k.mul(c, &inv)).collect());
            }
            cur = normal_form(&cur.mul(&x), &self.gb)?;
        }
        unreachable!("the Krylov sequence has length at most dim + 1")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::groebner::{GbOptions, Ideal};
    use crate::monomial::MonomialOrder;
    use crate::poly::PolyRing;
    use crate::rational::Rational;

    #[test]
    fn eliminant_of_two_points() {
        let r = PolyRing::new(Rationals, vec!["x".into(), "y".into()], MonomialOrder::DegRevLex);
        let i = Ideal::new(
            &r,
            vec![
                MultiPoly::parse(&r, "x^2 - 3*x + 1").unwrap(),
                MultiPoly::parse(&r, "y - x - 1").unwrap(),
            ],
        )
        .unwrap();
        let gb = i.basis(&GbOptions::default()).unwrap();
        let q = Quotient::new(&r, &gb).unwrap();
        assert_eq!(q.dim(), 2);
        let ex = q.eliminant(0).unwrap();
        assert_eq!(ex, vec![Rational::from_int(1), Rational::from_int(-3), Rational::from_int(1)]);
        // y = x + 1 satisfies (y−1)² − 3(y−1) + 1 = y² − 5y + 5
        let ey = q.eliminant(1).unwrap();
        assert_eq!(ey, vec![Rational::from_int(5), Rational::from_int(-5), Rational::from_int(1)]);
    }

    #[test]
    fn positive_dimension_has_no_quotient_basis() {
        let x = Monomial::var(2, 0);
        assert!(standard_monomials(&[x], 2, 100).is_none());
    }
}
