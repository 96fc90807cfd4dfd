//! Slack matrices: the symbolic support pattern of a matroid, numeric slack
//! matrices of realizations, and the ideals and graphs built from them.

mod equiv;
pub mod graph;
mod ideal;

use crate::error::Error;
use crate::field::Field;
use crate::linalg::{determinant, rank, Matrix};
use crate::matroid::{Matroid, PointConfiguration};
use crate::monomial::MonomialOrder;
use crate::poly::{MultiPoly, PolyRing, Ring};

pub use equiv::{equivalence, projectively_unique, Equivalence, EquivalenceMode, Uniqueness};
pub use graph::{
    cycle_binomial, cycle_ideal, cycle_kernel_check, Cycle, CycleBinomial, CycleIdeal, CycleOptions, CycleSet, Forest, NonIncidenceGraph,
    DEFAULT_CYCLE_CAP,
};
pub use ideal::{minor_generators, slack_ideal, MinorStrategy, Scaling, SlackIdeal, SlackIdealOptions};

/// The symbolic slack matrix of a matroid: a variable at `(i, j)` exactly
/// when element `i` is not on hyperplane `j`. Variables are numbered
/// row-major.
#[derive(Clone, Debug)]
pub struct SlackPattern {
    matroid: Matroid,
    var_at: Vec<Vec<Option<usize>>>,
    positions: Vec<(usize, usize)>,
}

impl SlackPattern {
    pub fn new(matroid: &Matroid) -> Self {
        let hs = matroid.hyperplanes();
        let mut var_at = vec![vec![None; hs.len()]; matroid.n()];
        let mut positions = Vec::new();
        for (i, row) in var_at.iter_mut().enumerate() {
            for (j, h) in hs.iter().enumerate() {
                if !h.contains(i) {
                    row[j] = Some(positions.len());
                    positions.push((i, j));
                }
            }
        }
        SlackPattern { matroid: matroid.clone(), var_at, positions }
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn nrows(&self) -> usize {
        self.var_at.len()
    }

    pub fn ncols(&self) -> usize {
        self.matroid.hyperplanes().len()
    }

    pub fn nvars(&self) -> usize {
        self.positions.len()
    }

    pub fn var(&self, i: usize, j: usize) -> Option<usize> {
        self.var_at[i][j]
    }

    pub fn position(&self, v: usize) -> (usize, usize) {
        self.positions[v]
    }

    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    /// `x_{i,j}` with the matroid's element label and the 1-based column.
    pub fn var_name(&self, v: usize) -> String {
        let (i, j) = self.positions[v];
        format!("x_{{{},{}}}", self.matroid.label(i), j + 1)
    }

    pub fn var_names(&self) -> Vec<String> {
        (0..self.nvars()).map(|v| self.var_name(v)).collect()
    }

    /// Variable index of a display name.
    pub fn var_by_name(&self, name: &str) -> Option<usize> {
        (0..self.nvars()).find(|&v| self.var_name(v) == name)
    }

    /// The polynomial ring on all slack variables (degrevlex).
    pub fn ring<F: Field>(&self, field: F) -> Ring<F> {
        PolyRing::new(field, self.var_names(), MonomialOrder::DegRevLex)
    }

    /// Ring on the variables not flagged in `fixed`.
    pub fn free_ring<F: Field>(&self, field: F, fixed: &[bool]) -> Ring<F> {
        let names = (0..self.nvars()).filter(|&v| !fixed[v]).map(|v| self.var_name(v)).collect();
        PolyRing::new(field, names, MonomialOrder::DegRevLex)
    }

    /// Polynomial entries in `ring`: zero off the support, one at fixed
    /// positions, the named variable elsewhere.
    pub fn entries<F: Field>(&self, ring: &Ring<F>, fixed: Option<&[bool]>) -> Result<Vec<Vec<MultiPoly<F>>>, Error> {
        let mut out = Vec::with_capacity(self.nrows());
        for row in &self.var_at {
            let mut r = Vec::with_capacity(row.len());
            for cell in row {
                r.push(match cell {
                    None => MultiPoly::zero(ring),
                    Some(v) if fixed.is_some_and(|f| f[*v]) => MultiPoly::one(ring),
                    Some(v) => {
                        let name = self.var_name(*v);
                        let idx = ring
                            .var_index(&name)
                            .ok_or_else(|| Error::Slack(format!("ring lacks variable {name}")))?;
                        MultiPoly::var(ring, idx)
                    }
                });
            }
            out.push(r);
        }
        Ok(out)
    }

    /// Whether `s` has exactly this support.
    pub fn matches_support<F: Field>(&self, k: &F, s: &Matrix<F::Elem>) -> bool {
        s.nrows() == self.nrows()
            && s.ncols() == self.ncols()
            && (0..self.nrows()).all(|i| (0..self.ncols()).all(|j| k.is_zero(s.get(i, j)) == self.var_at[i][j].is_none()))
    }

    /// A numeric matrix with the given values at the variables.
    pub fn fill<F: Field>(&self, k: &F, values: &[F::Elem]) -> Matrix<F::Elem> {
        let mut m = Matrix::filled(self.nrows(), self.ncols(), k.zero());
        for (v, &(i, j)) in self.positions.iter().enumerate() {
            m.set(i, j, values[v].clone());
        }
        m
    }

    /// Values at the variables, read off a matrix with this support.
    pub fn values<F: Field>(&self, s: &Matrix<F::Elem>) -> Vec<F::Elem> {
        self.positions.iter().map(|&(i, j)| s.get(i, j).clone()).collect()
    }
}

/// A slack matrix over a concrete field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericSlack<F: Field> {
    field: F,
    matrix: Matrix<F::Elem>,
    /// The spanning subset of each hyperplane used for its normal vector,
    /// when the matrix came from a realization.
    normal_subsets: Option<Vec<Vec<usize>>>,
}

impl<F: Field> NumericSlack<F> {
    pub fn new(field: F, matrix: Matrix<F::Elem>) -> Self {
        NumericSlack { field, matrix, normal_subsets: None }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn matrix(&self) -> &Matrix<F::Elem> {
        &self.matrix
    }

    pub fn normal_subsets(&self) -> Option<&[Vec<usize>]> {
        self.normal_subsets.as_deref()
    }

    /// The rows as a vector configuration (they realize the matroid when
    /// the matrix is a slack matrix).
    pub fn row_configuration(&self) -> Result<PointConfiguration<F>, Error> {
        Ok(PointConfiguration::from_row_vectors(self.field.clone(), &self.matrix)?)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.matrix.rows().iter().map(|r| r.iter().map(|v| self.field.format(v)).collect()).collect()
    }
}

/// Slack matrix `Vᵀ W` of a realization, hyperplanes in the order of
/// `matroid` (which must be the column matroid of `v`; when `None` it is
/// computed). Each normal is built from the lexicographically least
/// independent spanning subset of its hyperplane.
pub fn slack_of_realization<F: Field>(
    v: &PointConfiguration<F>,
    matroid: Option<&Matroid>,
) -> Result<NumericSlack<F>, Error> {
    let k = v.field();
    let own;
    let m = match matroid {
        Some(m) => {
            if m.n() != v.n() || *m != v.matroid()? {
                return Err(Error::Slack("the configuration does not realize the given matroid".into()));
            }
            m
        }
        None => {
            own = v.matroid()?;
            &own
        }
    };
    let r = v.dim();
    let mut normals = Vec::new();
    let mut used = Vec::new();
    for &h in m.hyperplanes() {
        let j = m
            .spanning_subsets(h)
            .into_iter()
            .next()
            .ok_or_else(|| Error::Slack(format!("hyperplane {} has no spanning subset", m.set_label(h))))?;
        // normal_t = det[v_{j1} … v_{jd} e_t]
        let mut normal = Vec::with_capacity(r);
        for t in 0..r {
            let mut block = Matrix::filled(r, r, k.zero());
            for (c, &e) in j.iter().enumerate() {
                for row in 0..r {
                    block.set(row, c, v.matrix().get(row, e).clone());
                }
            }
            block.set(t, r - 1, k.one());
            normal.push(determinant(k, &block)?);
        }
        normals.push(normal);
        used.push(j);
    }
    let mut s = Matrix::filled(v.n(), normals.len(), k.zero());
    for i in 0..v.n() {
        let col = v.column(i);
        for (j, a) in normals.iter().enumerate() {
            let dot = col.iter().zip(a).fold(k.zero(), |acc, (x, y)| k.add(&acc, &k.mul(x, y)));
            s.set(i, j, dot);
        }
    }
    Ok(NumericSlack { field: k.clone(), matrix: s, normal_subsets: Some(used) })
}

/// Whether `s` has the support of the symbolic slack matrix of `matroid`
/// and rank `rank(matroid)`.
pub fn check_slack<F: Field>(k: &F, s: &Matrix<F::Elem>, matroid: &Matroid) -> Result<bool, Error> {
    let h = matroid.hyperplanes().len();
    if s.nrows() != matroid.n() || s.ncols() != h {
        return Err(Error::Input(format!(
            "slack matrix is {}x{}, the matroid needs {}x{}",
            s.nrows(),
            s.ncols(),
            matroid.n(),
            h
        )));
    }
    let pattern = SlackPattern::new(matroid);
    Ok(pattern.matches_support(k, s) && rank(k, s) == matroid.rank())
}
