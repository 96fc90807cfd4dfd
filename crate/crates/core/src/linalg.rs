//! Dense matrices over an exact field.

use crate::error::AlgebraError;
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::Usage("ragged matrix rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn filled(rows: usize, cols: usize, v: E) -> Self {
        Matrix { rows, cols, data: vec![v; rows * cols] }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: rows.len(), cols: cols.len(), data }
    }

    pub fn map<T: Clone>(&self, f: impl Fn(&E) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

/// Row echelon data: reduced matrix and pivot columns.
pub struct Echelon<E> {
    pub reduced: Matrix<E>,
    pub pivots: Vec<usize>,
}

pub fn rref<F: Field>(k: &F, m: &Matrix<F::Elem>) -> Echelon<F::Elem> {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !k.is_zero(a.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let inv = k.inv(a.get(r, c)).unwrap();
        for j in c..a.cols {
            let v = k.mul(a.get(r, j), &inv);
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r || k.is_zero(a.get(i, c)) {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..a.cols {
                let v = k.sub(a.get(i, j), &k.mul(&f, a.get(r, j)));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { reduced: a, pivots }
}

pub fn rank<F: Field>(k: &F, m: &Matrix<F::Elem>) -> usize {
    rref(k, m).pivots.len()
}

/// Basis of the right kernel `{v : m v = 0}`.
pub fn kernel<F: Field>(k: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let e = rref(k, m);
    let mut is_pivot = vec![None; m.cols];
    for (r, &c) in e.pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let mut out = Vec::new();
    for free in 0..m.cols {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = vec![k.zero(); m.cols];
        v[free] = k.one();
        for (r, &c) in e.pivots.iter().enumerate() {
            v[c] = k.neg(e.reduced.get(r, free));
        }
        out.push(v);
    }
    out
}

pub fn determinant<F: Field>(k: &F, m: &Matrix<F::Elem>) -> Result<F::Elem, AlgebraError> {
    if m.rows != m.cols {
        return Err(AlgebraError::NonSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut det = k.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !k.is_zero(a.get(i, c))) else {
            return Ok(k.zero());
        };
        if p != c {
            for j in 0..n {
                a.data.swap(p * n + j, c * n + j);
            }
            det = k.neg(&det);
        }
        let piv = a.get(c, c).clone();
        det = k.mul(&det, &piv);
        let inv = k.inv(&piv).unwrap();
        for i in c + 1..n {
            if k.is_zero(a.get(i, c)) {
                continue;
            }
            let f = k.mul(a.get(i, c), &inv);
            for j in c..n {
                let v = k.sub(a.get(i, j), &k.mul(&f, a.get(c, j)));
                a.set(i, j, v);
            }
        }
    }
    Ok(det)
}

pub fn mat_mul<F: Field>(k: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows);
    let mut out = Matrix::filled(a.rows, b.cols, k.zero());
    for i in 0..a.rows {
        for t in 0..a.cols {
            let x = a.get(i, t);
            if k.is_zero(x) {
                continue;
            }
            for j in 0..b.cols {
                let v = k.add(out.get(i, j), &k.mul(x, b.get(t, j)));
                out.set(i, j, v);
            }
        }
    }
    out
}

/// Solves `m x = b`, returning one solution if the system is consistent.
pub fn solve<F: Field>(k: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let mut rows = m.rows();
    for (row, v) in rows.iter_mut().zip(b) {
        row.push(v.clone());
    }
    let aug = Matrix::from_rows(rows).ok()?;
    let e = rref(k, &aug);
    if e.pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![k.zero(); m.cols];
    for (r, &c) in e.pivots.iter().enumerate() {
        x[c] = e.reduced.get(r, m.cols).clone();
    }
    Some(x)
}
