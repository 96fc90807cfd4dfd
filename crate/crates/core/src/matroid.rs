//! Matroids given by bases, their flats and hyperplanes.

use std::collections::HashSet;
use std::fmt;

use crate::error::{AlgebraError, MatroidError};
use crate::field::Field;
use crate::linalg::{determinant, rank as mat_rank, Matrix};
use crate::minors::subsets;

/// A set of ground-set elements (0-based, fewer than 64 elements).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub fn from_slice(elems: &[usize]) -> Self {
        ElemSet(elems.iter().fold(0u64, |m, &e| m | (1u64 << e)))
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, e: usize) -> Self {
        ElemSet(self.0 | 1u64 << e)
    }

    pub fn without(self, e: usize) -> Self {
        ElemSet(self.0 & !(1u64 << e))
    }

    pub fn intersect(self, o: Self) -> Self {
        ElemSet(self.0 & o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn elems(self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.len());
        let mut b = self.0;
        while b != 0 {
            v.push(b.trailing_zeros() as usize);
            b &= b - 1;
        }
        v
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.elems())
    }
}

/// A simple matroid of rank `r` on `n` elements, validated on construction.
#[derive(Clone, Debug)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<ElemSet>,
    basis_set: HashSet<ElemSet>,
    first_label: usize,
    hyperplanes: Vec<ElemSet>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rank == other.rank && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl Matroid {
    /// `bases` use 0-based element indices.
    pub fn from_bases(n: usize, rank: usize, bases: &[Vec<usize>]) -> Result<Self, MatroidError> {
        if n == 0 || n >= 64 {
            return Err(MatroidError::Invalid(format!("ground set size {n} outside 1..=63")));
        }
        if rank == 0 || rank > n {
            return Err(MatroidError::Invalid(format!("rank {rank} for {n} elements")));
        }
        let mut sets = Vec::with_capacity(bases.len());
        for b in bases {
            if b.iter().any(|&e| e >= n) {
                return Err(MatroidError::Invalid(format!("basis {b:?} leaves the ground set")));
            }
            let s = ElemSet::from_slice(b);
            if s.len() != rank || b.len() != rank {
                return Err(MatroidError::Invalid(format!("basis {b:?} does not have size {rank}")));
            }
            sets.push(s);
        }
        if sets.is_empty() {
            return Err(MatroidError::Invalid("no bases".into()));
        }
        sets.sort();
        sets.dedup();
        let basis_set: HashSet<ElemSet> = sets.iter().copied().collect();
        let mut m = Matroid { n, rank, bases: sets, basis_set, first_label: 1, hyperplanes: Vec::new() };
        m.check_exchange()?;
        m.check_simple()?;
        m.hyperplanes = m.compute_hyperplanes();
        Ok(m)
    }

    /// All `rank`-subsets except the listed non-bases.
    pub fn from_nonbases(n: usize, rank: usize, nonbases: &[Vec<usize>]) -> Result<Self, MatroidError> {
        let bad: HashSet<ElemSet> = nonbases.iter().map(|b| ElemSet::from_slice(b)).collect();
        for b in nonbases {
            if b.len() != rank || b.iter().any(|&e| e >= n) {
                return Err(MatroidError::Invalid(format!("non-basis {b:?} is not a {rank}-subset")));
            }
        }
        let bases: Vec<Vec<usize>> =
            subsets(n, rank).filter(|s| !bad.contains(&ElemSet::from_slice(s))).collect();
        Self::from_bases(n, rank, &bases)
    }

    pub fn uniform(rank: usize, n: usize) -> Result<Self, MatroidError> {
        Self::from_nonbases(n, rank, &[])
    }

    /// Column matroid of a configuration of `n` vectors (the columns of `m`).
    pub fn from_matrix<F: Field>(k: &F, m: &Matrix<F::Elem>) -> Result<Self, MatroidError> {
        let r = mat_rank(k, m);
        if r != m.nrows() {
            return Err(MatroidError::RankDeficient { rank: r, rows: m.nrows() });
        }
        let rows: Vec<usize> = (0..m.nrows()).collect();
        let mut bases = Vec::new();
        for cols in subsets(m.ncols(), r) {
            let sub = m.select(&rows, &cols);
            if !k.is_zero(&determinant(k, &sub).map_err(|e| MatroidError::Invalid(e.to_string()))?) {
                bases.push(cols);
            }
        }
        Self::from_bases(m.ncols(), r, &bases)
    }

    /// Matroid of the rows of `m` viewed as vectors (any rank).
    pub fn from_row_vectors<F: Field>(k: &F, m: &Matrix<F::Elem>) -> Result<Self, MatroidError> {
        let r = mat_rank(k, m);
        if r == 0 {
            return Err(MatroidError::Invalid("all vectors are zero".into()));
        }
        let cols: Vec<usize> = (0..m.ncols()).collect();
        let mut bases = Vec::new();
        for rows in subsets(m.nrows(), r) {
            if mat_rank(k, &m.select(&rows, &cols)) == r {
                bases.push(rows);
            }
        }
        Self::from_bases(m.nrows(), r, &bases)
    }

    fn check_exchange(&self) -> Result<(), MatroidError> {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                for x in ElemSet(b1.0 & !b2.0).elems() {
                    let ok = ElemSet(b2.0 & !b1.0)
                        .elems()
                        .into_iter()
                        .any(|y| self.basis_set.contains(&b1.without(x).with(y)));
                    if !ok {
                        return Err(MatroidError::NotMatroid(format!(
                            "exchange fails for {:?}, {:?} at {}",
                            b1, b2, x
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_simple(&self) -> Result<(), MatroidError> {
        for e in 0..self.n {
            if self.rank_of(ElemSet::from_slice(&[e])) == 0 {
                return Err(MatroidError::NotSimple(format!("element {} is a loop", self.label(e))));
            }
        }
        for e in 0..self.n {
            for f in e + 1..self.n {
                if self.rank_of(ElemSet::from_slice(&[e, f])) < 2 {
                    return Err(MatroidError::NotSimple(format!(
                        "elements {} and {} are parallel",
                        self.label(e),
                        self.label(f)
                    )));
                }
            }
        }
        Ok(())
    }

    fn compute_hyperplanes(&self) -> Vec<ElemSet> {
        let d = self.rank - 1;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for s in subsets(self.n, d) {
            let s = ElemSet::from_slice(&s);
            if self.rank_of(s) != d {
                continue;
            }
            let h = self.closure_of(s);
            if seen.insert(h) {
                out.push(h);
            }
        }
        out.sort_by_key(|h| h.elems());
        out
    }

    /// Display labels start at `first` (0 or 1).
    pub fn with_first_label(mut self, first: usize) -> Self {
        self.first_label = first;
        self
    }

    /// Reorders the hyperplanes; `order` must be a permutation of them.
    pub fn with_hyperplane_order(mut self, order: &[Vec<usize>]) -> Result<Self, MatroidError> {
        let given: Vec<ElemSet> = order.iter().map(|h| ElemSet::from_slice(h)).collect();
        let mut a = given.clone();
        a.sort();
        let mut b = self.hyperplanes.clone();
        b.sort();
        a.dedup();
        if a != b || given.len() != b.len() {
            return Err(MatroidError::Invalid("hyperplane order is not a permutation of the hyperplanes".into()));
        }
        self.hyperplanes = given;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn first_label(&self) -> usize {
        self.first_label
    }

    pub fn label(&self, e: usize) -> String {
        (e + self.first_label).to_string()
    }

    /// Compact label of a set: concatenated when all labels are one digit.
    pub fn set_label(&self, s: ElemSet) -> String {
        let labels: Vec<String> = s.elems().into_iter().map(|e| self.label(e)).collect();
        if labels.iter().all(|l| l.len() == 1) {
            labels.concat()
        } else {
            labels.join(",")
        }
    }

    pub fn bases(&self) -> &[ElemSet] {
        &self.bases
    }

    pub fn is_basis(&self, s: ElemSet) -> bool {
        self.basis_set.contains(&s)
    }

    pub fn nonbases(&self) -> Vec<ElemSet> {
        subsets(self.n, self.rank)
            .map(|s| ElemSet::from_slice(&s))
            .filter(|s| !self.basis_set.contains(s))
            .collect()
    }

    pub fn rank_of(&self, s: ElemSet) -> usize {
        self.bases.iter().map(|b| b.intersect(s).len()).max().unwrap_or(0)
    }

    pub fn is_independent(&self, s: ElemSet) -> bool {
        self.rank_of(s) == s.len()
    }

    pub fn closure_of(&self, s: ElemSet) -> ElemSet {
        let r = self.rank_of(s);
        let mut out = s;
        for e in 0..self.n {
            if !s.contains(e) && self.rank_of(s.with(e)) == r {
                out = out.with(e);
            }
        }
        out
    }

    pub fn hyperplanes(&self) -> &[ElemSet] {
        &self.hyperplanes
    }

    /// Independent `d`-subsets of a hyperplane, lexicographically.
    pub fn spanning_subsets(&self, h: ElemSet) -> Vec<Vec<usize>> {
        let elems = h.elems();
        subsets(elems.len(), self.rank - 1)
            .map(|ix| ix.into_iter().map(|i| elems[i]).collect::<Vec<usize>>())
            .filter(|s| self.is_independent(ElemSet::from_slice(s)))
            .collect()
    }

    pub fn ground(&self) -> ElemSet {
        ElemSet((1u64 << self.n) - 1)
    }
}

/// A configuration of `n` vectors spanning `k^{d+1}`: the columns of a
/// full-row-rank `(d+1) × n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration<F: Field> {
    field: F,
    matrix: Matrix<F::Elem>,
}

impl<F: Field> PointConfiguration<F> {
    pub fn new(field: F, matrix: Matrix<F::Elem>) -> Result<Self, MatroidError> {
        let r = mat_rank(&field, &matrix);
        if r != matrix.nrows() {
            return Err(MatroidError::RankDeficient { rank: r, rows: matrix.nrows() });
        }
        Ok(PointConfiguration { field, matrix })
    }

    pub fn from_strings(field: F, rows: &[Vec<String>]) -> Result<Self, crate::error::Error> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>, AlgebraError>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(field, Matrix::from_rows(parsed)?)?)
    }

    /// A configuration whose `i`-th vector is row `i` of `m` (for example a
    /// slack matrix), expressed in coordinates of its row space.
    pub fn from_row_vectors(field: F, m: &Matrix<F::Elem>) -> Result<Self, MatroidError> {
        let rows: Vec<usize> = (0..m.nrows()).collect();
        // the pivot columns of m span its column space, so restricting every
        // row to them keeps the row matroid
        let col_e = crate::linalg::rref(&field, m);
        let sub = m.select(&rows, &col_e.pivots);
        Self::new(field, sub.transpose())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn matrix(&self) -> &Matrix<F::Elem> {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.dim()).map(|i| self.matrix.get(i, j).clone()).collect()
    }

    pub fn matroid(&self) -> Result<Matroid, MatroidError> {
        Matroid::from_matrix(&self.field, &self.matrix)
    }
}
