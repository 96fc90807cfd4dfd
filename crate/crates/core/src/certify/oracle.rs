//! Brute-force realization search over small prime fields.

use std::time::{Duration, Instant};

use crate::field::{Field, PrimeField};
use crate::linalg::{determinant, Matrix};
use crate::matroid::{ElemSet, Matroid, PointConfiguration};
use crate::minors::subsets;

#[derive(Clone, Copy, Debug)]
pub struct OracleOptions {
    pub max_nodes: u64,
    pub timeout: Option<Duration>,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { max_nodes: 50_000_000, timeout: None }
    }
}

#[derive(Clone, Debug)]
pub enum OracleResult {
    Found(PointConfiguration<PrimeField>),
    /// The whole space was searched: no realization over the field.
    Exhausted { nodes: u64 },
    Unknown { reason: String },
}

impl OracleResult {
    pub fn label(&self) -> &'static str {
        match self {
            OracleResult::Found(_) => "found",
            OracleResult::Exhausted { .. } => "exhausted",
            OracleResult::Unknown { .. } => "unknown",
        }
    }
}

/// Normalized representatives of the points of `P^{r-1}(F_p)`: first
/// nonzero coordinate 1.
fn projective_points(k: &PrimeField, r: usize) -> Vec<Vec<u32>> {
    let p = k.modulus() as u64;
    let total = p.pow(r as u32);
    let mut out = Vec::new();
    for code in 1..total {
        let mut v = Vec::with_capacity(r);
        let mut c = code;
        for _ in 0..r {
            v.push((c % p) as u32);
            c /= p;
        }
        v.reverse();
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

struct Search<'a> {
    k: PrimeField,
    m: &'a Matroid,
    order: Vec<usize>,
    points: Vec<Vec<u32>>,
    cols: Vec<Option<Vec<u32>>>,
    nodes: u64,
    opts: OracleOptions,
    start: Instant,
}

enum Stop {
    Budget(String),
}

impl Search<'_> {
    /// Every `r`-subset of placed elements containing `e` is independent in
    /// the configuration exactly when it is a basis.
    fn consistent(&self, e: usize, placed: &[usize]) -> bool {
        let r = self.m.rank();
        let others: Vec<usize> = placed.iter().copied().filter(|&x| x != e).collect();
        if others.len() + 1 < r {
            return true;
        }
        for rest in subsets(others.len(), r - 1) {
            let mut set: Vec<usize> = rest.iter().map(|&i| others[i]).collect();
            set.push(e);
            let cols: Vec<&Vec<u32>> = set.iter().map(|&x| self.cols[x].as_ref().unwrap()).collect();
            let mat = Matrix::from_rows((0..r).map(|i| cols.iter().map(|c| c[i]).collect()).collect()).unwrap();
            let nonzero = !self.k.is_zero(&determinant(&self.k, &mat).unwrap());
            if nonzero != self.m.is_basis(ElemSet::from_slice(&set)) {
                return false;
            }
        }
        true
    }

    fn go(&mut self, depth: usize) -> Result<bool, Stop> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let e = self.order[depth];
        let placed: Vec<usize> = self.order[..depth].to_vec();
        for pi in 0..self.points.len() {
            self.nodes += 1;
            if self.nodes > self.opts.max_nodes {
                return Err(Stop::Budget(format!("node limit {} reached", self.opts.max_nodes)));
            }
            if self.nodes % 4096 == 0 {
                if let Some(t) = self.opts.timeout {
                    if self.start.elapsed() > t {
                        return Err(Stop::Budget(format!("timeout after {:?}", t)));
                    }
                }
            }
            self.cols[e] = Some(self.points[pi].clone());
            if self.consistent(e, &placed) && self.go(depth + 1)? {
                return Ok(true);
            }
        }
        self.cols[e] = None;
        Ok(false)
    }
}

/// Searches for a realization of `m` over `k` with the first basis as the
/// identity and every other column a normalized projective point. Every
/// realization can be brought to this form, so finishing without one proves
/// there is none.
pub fn oracle_search(m: &Matroid, k: &PrimeField, opts: &OracleOptions) -> OracleResult {
    let r = m.rank();
    let b = m.bases()[0].elems();
    let mut cols = vec![None; m.n()];
    for (i, &e) in b.iter().enumerate() {
        let mut v = vec![0u32; r];
        v[i] = 1;
        cols[e] = Some(v);
    }
    let mut order: Vec<usize> = b.clone();
    order.extend((0..m.n()).filter(|e| !b.contains(e)));
    let mut s = Search {
        k: k.clone(),
        m,
        order,
        points: projective_points(k, r),
        cols,
        nodes: 0,
        opts: *opts,
        start: Instant::now(),
    };
    match s.go(r) {
        Ok(true) => {
            let rows = (0..r).map(|i| s.cols.iter().map(|c| c.as_ref().unwrap()[i]).collect()).collect();
            let pc = PointConfiguration::new(k.clone(), Matrix::from_rows(rows).unwrap())
                .expect("contains an identity block");
            OracleResult::Found(pc)
        }
        Ok(false) => OracleResult::Exhausted { nodes: s.nodes },
        Err(Stop::Budget(reason)) => OracleResult::Unknown { reason },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::example;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn point_counts() {
        assert_eq!(projective_points(&gf(2), 3).len(), 7);
        assert_eq!(projective_points(&gf(3), 3).len(), 13);
        assert_eq!(projective_points(&gf(5), 2).len(), 6);
    }

    #[test]
    fn fano_and_non_fano_over_gf2() {
        let fano = example("fano").unwrap().matroid().unwrap();
        match oracle_search(&fano, &gf(2), &OracleOptions::default()) {
            OracleResult::Found(v) => assert_eq!(v.matroid().unwrap(), fano),
            other => panic!("{}", other.label()),
        }
        assert_eq!(oracle_search(&fano, &gf(3), &OracleOptions::default()).label(), "exhausted");
        let nf = example("nonfano").unwrap().matroid().unwrap();
        assert_eq!(oracle_search(&nf, &gf(2), &OracleOptions::default()).label(), "exhausted");
        assert_eq!(oracle_search(&nf, &gf(3), &OracleOptions::default()).label(), "found");
    }

    #[test]
    fn u23_over_gf2_and_u24_needs_three() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(oracle_search(&u23, &gf(2), &OracleOptions::default()).label(), "found");
        // P^1(F_2) has only three points
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(oracle_search(&u24, &gf(2), &OracleOptions::default()).label(), "exhausted");
        assert_eq!(oracle_search(&u24, &gf(3), &OracleOptions::default()).label(), "found");
    }

    #[test]
    fn budget_is_reported() {
        let p = example("perles").unwrap().matroid().unwrap();
        let o = OracleOptions { max_nodes: 10, timeout: None };
        assert_eq!(oracle_search(&p, &gf(5), &o).label(), "unknown");
    }
}
