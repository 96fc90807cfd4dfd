//! Determinants and minors of matrices with polynomial entries.

use std::collections::HashMap;

use crate::error::AlgebraError;
use crate::field::Field;
use crate::poly::{MultiPoly, Ring};

/// A square submatrix (row and column index sets, increasing) and its
/// determinant.
#[derive(Clone, Debug)]
pub struct Minor<F: Field> {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub det: MultiPoly<F>,
}

/// Laplace expansion along the first row, memoized on (row set, column set)
/// so that minors of one matrix share their sub-minors.
pub struct MinorCache<'a, F: Field> {
    ring: Ring<F>,
    entries: &'a [Vec<MultiPoly<F>>],
    memo: HashMap<(u64, u64), MultiPoly<F>>,
}

fn mask(ix: &[usize]) -> u64 {
    ix.iter().fold(0u64, |m, &i| m | (1u64 << i))
}

impl<'a, F: Field> MinorCache<'a, F> {
    pub fn new(ring: &Ring<F>, entries: &'a [Vec<MultiPoly<F>>]) -> Result<Self, AlgebraError> {
        let cols = entries.first().map_or(0, |r| r.len());
        if entries.iter().any(|r| r.len() != cols) {
            return Err(AlgebraError::Usage("ragged matrix rows".into()));
        }
        if entries.len() > 64 || cols > 64 {
            return Err(AlgebraError::Usage("matrix dimension above 64".into()));
        }
        Ok(MinorCache { ring: ring.clone(), entries, memo: HashMap::new() })
    }

    pub fn minor(&mut self, rows: &[usize], cols: &[usize]) -> Result<MultiPoly<F>, AlgebraError> {
        if rows.len() != cols.len() {
            return Err(AlgebraError::NonSquare { rows: rows.len(), cols: cols.len() });
        }
        Ok(self.expand(mask(rows), mask(cols)))
    }

    fn expand(&mut self, rmask: u64, cmask: u64) -> MultiPoly<F> {
        let size = rmask.count_ones();
        if size == 0 {
            return MultiPoly::one(&self.ring);
        }
        let r0 = rmask.trailing_zeros() as usize;
        if size == 1 {
            return self.entries[r0][cmask.trailing_zeros() as usize].clone();
        }
        if let Some(p) = self.memo.get(&(rmask, cmask)) {
            return p.clone();
        }
        let rest = rmask & !(1u64 << r0);
        let mut acc = MultiPoly::zero(&self.ring);
        let mut c = cmask;
        let mut t = 0;
        while c != 0 {
            let j = c.trailing_zeros() as usize;
            c &= c - 1;
            let a = &self.entries[r0][j];
            if !a.is_zero() {
                let sub = self.expand(rest, cmask & !(1u64 << j));
                if !sub.is_zero() {
                    let term = a.clone().mul(&sub);
                    acc = if t % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
            }
            t += 1;
        }
        if size >= 2 {
            self.memo.insert((rmask, cmask), acc.clone());
        }
        acc
    }

    /// All nonzero `k`-minors in lexicographic order of (rows, cols).
    pub fn all_minors(&mut self, k: usize) -> Vec<Minor<F>> {
        let nr = self.entries.len();
        let nc = self.entries.first().map_or(0, |r| r.len());
        let mut out = Vec::new();
        if k == 0 || k > nr || k > nc {
            return out;
        }
        let col_sets: Vec<Vec<usize>> = subsets(nc, k).collect();
        for rows in subsets(nr, k) {
            for cols in &col_sets {
                let det = self.expand(mask(&rows), mask(cols));
                if !det.is_zero() {
                    out.push(Minor { rows: rows.clone(), cols: cols.clone(), det });
                }
            }
            // top-level minors are not reused; keep the cache to sub-minors
            self.memo.retain(|&(r, _), _| (r.count_ones() as usize) < k);
        }
        out
    }
}

pub fn symbolic_determinant<F: Field>(
    ring: &Ring<F>,
    m: &[Vec<MultiPoly<F>>],
) -> Result<MultiPoly<F>, AlgebraError> {
    let cols = m.first().map_or(0, |r| r.len());
    if m.len() != cols {
        return Err(AlgebraError::NonSquare { rows: m.len(), cols });
    }
    let idx: Vec<usize> = (0..cols).collect();
    MinorCache::new(ring, m)?.minor(&idx, &idx)
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let next = {
            let mut c = out.clone();
            let mut i = k;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if c[i] < n - k + i {
                    c[i] += 1;
                    for j in i + 1..k {
                        c[j] = c[j - 1] + 1;
                    }
                    break Some(c);
                }
            }
        };
        cur = next;
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::monomial::MonomialOrder;
    use crate::poly::PolyRing;
    use crate::rational::Rational;
    use proptest::prelude::*;

    fn ring(names: &[&str]) -> Ring<Rationals> {
        PolyRing::new(Rationals, names.iter().map(|s| s.to_string()).collect(), MonomialOrder::DegRevLex)
    }

    #[test]
    fn zero_diagonal_three_by_three() {
        let r = ring(&["a", "b", "c", "d", "e", "f"]);
        let v = |i| MultiPoly::var(&r, i);
        let z = MultiPoly::zero(&r);
        let m = vec![
            vec![z.clone(), v(0), v(1)],
            vec![v(2), z.clone(), v(3)],
            vec![v(4), v(5), z.clone()],
        ];
        let d = symbolic_determinant(&r, &m).unwrap();
        let expected = MultiPoly::parse(&r, "a*d*e + b*c*f").unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn identity_and_repeated_rows() {
        let r = ring(&["x", "y"]);
        let one = MultiPoly::one(&r);
        let z = MultiPoly::zero(&r);
        let id = vec![
            vec![one.clone(), z.clone(), z.clone()],
            vec![z.clone(), one.clone(), z.clone()],
            vec![z.clone(), z.clone(), one.clone()],
        ];
        assert!(symbolic_determinant(&r, &id).unwrap().is_one());
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let rep = vec![vec![x.clone(), y.clone()], vec![x, y]];
        assert!(symbolic_determinant(&r, &rep).unwrap().is_zero());
        assert!(symbolic_determinant(&r, &[vec![one.clone(), one]]).is_err());
    }

    #[test]
    fn subset_enumeration() {
        let s: Vec<Vec<usize>> = subsets(4, 2).collect();
        assert_eq!(s.len(), 6);
        assert_eq!(s[0], vec![0, 1]);
        assert_eq!(s[5], vec![2, 3]);
        assert_eq!(subsets(3, 0).count(), 1);
        assert_eq!(subsets(2, 3).count(), 0);
    }

    fn perm_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        let mut total = 0;
        let perms = permutations(n);
        for p in perms {
            let mut inv = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if p[a] > p[b] {
                        inv += 1;
                    }
                }
            }
            let s = if inv % 2 == 0 { 1 } else { -1 };
            total += s * (0..n).map(|i| m[i][p[i]]).product::<i64>();
        }
        total
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    proptest! {
        #[test]
        fn agrees_with_permutation_sum(n in 1usize..5, vals in proptest::collection::vec(-3i64..4, 16)) {
            let r = ring(&["x"]);
            let ints: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| vals[i * 4 + j]).collect()).collect();
            let m: Vec<Vec<MultiPoly<Rationals>>> = ints.iter()
                .map(|row| row.iter().map(|&v| MultiPoly::constant(&r, Rational::from_int(v))).collect())
                .collect();
            let d = symbolic_determinant(&r, &m).unwrap();
            prop_assert_eq!(d, MultiPoly::constant(&r, Rational::from_int(perm_det(&ints))));
        }
    }
}
