//! Plücker coordinates, Grassmannian ideals of matroids and the universal
//! realization ideal joining slack and Plücker variables.

use std::collections::HashMap;

use crate::error::{Error, GbError};
use crate::field::Field;
use crate::groebner::{eliminate, saturate_by_variables, GbOptions, Ideal};
use crate::linalg::{determinant, Matrix};
use crate::matroid::{ElemSet, Matroid, PointConfiguration};
use crate::minors::subsets;
use crate::monomial::MonomialOrder;
use crate::poly::{MultiPoly, PolyRing, Ring};
use crate::slack::SlackPattern;

/// The variables `p_σ` for the `k`-subsets `σ` of an `n`-set, in
/// lexicographic order of `σ`.
#[derive(Clone, Debug)]
pub struct PluckerRing {
    k: usize,
    n: usize,
    first_label: usize,
    subsets: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl PluckerRing {
    pub fn new(k: usize, n: usize, first_label: usize) -> Result<Self, Error> {
        if k == 0 || k > n || n > 64 {
            return Err(Error::Input(format!("no Plücker coordinates for {k}-subsets of {n} elements")));
        }
        let subsets: Vec<Vec<usize>> = subsets(n, k).collect();
        let index = subsets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Ok(PluckerRing { k, n, first_label, subsets, index })
    }

    pub fn for_matroid(m: &Matroid) -> Result<Self, Error> {
        Self::new(m.rank(), m.n(), m.first_label())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    /// Index of a sorted subset.
    pub fn index_of(&self, sigma: &[usize]) -> Option<usize> {
        self.index.get(sigma).copied()
    }

    pub fn name(&self, sigma: &[usize]) -> String {
        let labels: Vec<String> = sigma.iter().map(|e| (e + self.first_label).to_string()).collect();
        if labels.iter().all(|l| l.len() == 1) {
            format!("p_{{{}}}", labels.concat())
        } else {
            format!("p_{{{}}}", labels.join(","))
        }
    }

    pub fn names(&self) -> Vec<String> {
        self.subsets.iter().map(|s| self.name(s)).collect()
    }

    pub fn ring<F: Field>(&self, field: F) -> Ring<F> {
        PolyRing::new(field, self.names(), MonomialOrder::DegRevLex)
    }
}

/// Sign of the permutation sorting `seq`, or `None` on a repeated entry.
fn sort_sign(seq: &[usize]) -> Option<i64> {
    let mut sign = 1;
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            if seq[a] == seq[b] {
                return None;
            }
            if seq[a] > seq[b] {
                sign = -sign;
            }
        }
    }
    Some(sign)
}

/// `sgn(i, J)`: the sign of the permutation putting `(i, j_1, …, j_d)` in
/// increasing order.
pub fn insertion_sign(i: usize, j: &[usize]) -> i64 {
    if j.iter().filter(|&&x| x < i).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The quadratic Grassmann–Plücker relations
/// `Σ_l (−1)^l p_{I ∪ j_l} p_{J ∖ j_l}` over all `(k−1)`-subsets `I` and
/// `(k+1)`-subsets `J`, normalized and deduplicated.
pub fn plucker_relations<F: Field>(pr: &PluckerRing, ring: &Ring<F>) -> Vec<MultiPoly<F>> {
    let k = ring.field();
    let (kk, n) = (pr.k, pr.n);
    let var = |seq: &[usize]| -> Option<(usize, i64)> {
        let s = sort_sign(seq)?;
        let mut sorted = seq.to_vec();
        sorted.sort_unstable();
        Some((pr.index_of(&sorted).unwrap(), s))
    };
    let mut out = Vec::new();
    if kk + 1 > n {
        return out;
    }
    for small in subsets(n, kk - 1) {
        for big in subsets(n, kk + 1) {
            let mut f = MultiPoly::zero(ring);
            for (l, &jl) in big.iter().enumerate() {
                let mut a = small.clone();
                a.push(jl);
                let b: Vec<usize> = big.iter().copied().filter(|&x| x != jl).collect();
                let (Some((va, sa)), Some((vb, sb))) = (var(&a), var(&b)) else { continue };
                let sign = if l % 2 == 0 { 1 } else { -1 } * sa * sb;
                let t = MultiPoly::var(ring, va).mul(&MultiPoly::var(ring, vb)).scale(&k.from_i64(sign));
                f = f.add(&t);
            }
            if !f.is_zero() {
                out.push(f.normalized());
            }
        }
    }
    out.sort_by_key(|g| g.to_string());
    out.dedup();
    out
}

/// The Plücker ideal of `k`-subspaces of `field^n`, labels from 1.
pub fn plucker_ideal<F: Field>(k: usize, n: usize, field: F) -> Result<Ideal<F>, Error> {
    let pr = PluckerRing::new(k, n, 1)?;
    let ring = pr.ring(field);
    let gens = plucker_relations(&pr, &ring);
    Ok(Ideal::new(&ring, gens)?)
}

/// All maximal minors of the configuration, indexed like [`PluckerRing`].
pub fn plucker_vector<F: Field>(v: &PointConfiguration<F>) -> Vec<F::Elem> {
    let k = v.field();
    let rows: Vec<usize> = (0..v.dim()).collect();
    subsets(v.n(), v.dim())
        .map(|cols| determinant(k, &v.matrix().select(&rows, &cols)).expect("square"))
        .collect()
}

/// The Plücker relations with `p_σ = 0` for every non-basis `σ`, in the
/// ring of the basis variables.
pub fn grassmannian_ideal<F: Field>(m: &Matroid, field: F) -> Result<Ideal<F>, Error> {
    let pr = PluckerRing::for_matroid(m)?;
    let full = pr.ring(field.clone());
    let sub = basis_ring(m, &pr, field);
    let zero: HashMap<usize, F::Elem> = nonbasis_indices(m, &pr).map(|i| (i, full.field().zero())).collect();
    let mut gens = Vec::new();
    for g in plucker_relations(&pr, &full) {
        let h = g.evaluate(&zero, true)?;
        if !h.is_zero() {
            gens.push(h.to_ring(&sub)?.normalized());
        }
    }
    gens.sort_by_key(|g| g.to_string());
    gens.dedup();
    Ok(Ideal::new(&sub, gens)?)
}

fn nonbasis_indices<'a>(m: &'a Matroid, pr: &'a PluckerRing) -> impl Iterator<Item = usize> + 'a {
    (0..pr.len()).filter(move |&i| !m.is_basis(ElemSet::from_slice(&pr.subsets()[i])))
}

fn basis_names(m: &Matroid, pr: &PluckerRing) -> Vec<String> {
    pr.subsets().iter().filter(|s| m.is_basis(ElemSet::from_slice(s))).map(|s| pr.name(s)).collect()
}

fn basis_ring<F: Field>(m: &Matroid, pr: &PluckerRing, field: F) -> Ring<F> {
    PolyRing::new(field, basis_names(m, pr), MonomialOrder::DegRevLex)
}

/// The matrix `M_H` of one hyperplane: a row per element off `H`, the slack
/// variable first, then `sgn(i, J)·p_{i ∪ J}` for each independent
/// `d`-subset `J` of `H` in lexicographic order.
#[derive(Clone, Debug)]
pub struct MhMatrix<F: Field> {
    pub hyperplane: usize,
    pub rows: Vec<usize>,
    pub spanning: Vec<Vec<usize>>,
    pub entries: Vec<Vec<MultiPoly<F>>>,
}

impl<F: Field> MhMatrix<F> {
    pub fn nrows(&self) -> usize {
        self.entries.len()
    }

    pub fn ncols(&self) -> usize {
        self.spanning.len() + 1
    }

    /// Entries as text, for display.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect()
    }

    /// The 2-minors.
    pub fn two_minors(&self) -> Vec<MultiPoly<F>> {
        let mut out = Vec::new();
        for r in subsets(self.nrows(), 2) {
            for c in subsets(self.ncols(), 2) {
                let e = &self.entries;
                let d = e[r[0]][c[0]].mul(&e[r[1]][c[1]]).sub(&e[r[0]][c[1]].mul(&e[r[1]][c[0]]));
                if !d.is_zero() {
                    out.push(d.normalized());
                }
            }
        }
        out
    }
}

/// The joint ring of slack variables (row-major, as in [`SlackPattern`])
/// followed by the Plücker variables of the bases.
#[derive(Clone, Debug)]
pub struct UniversalRing<F: Field> {
    pub ring: Ring<F>,
    pub pattern: SlackPattern,
    pub plucker: PluckerRing,
    /// Joint-ring index of each Plücker variable, `None` for non-bases.
    pub p_index: Vec<Option<usize>>,
}

impl<F: Field> UniversalRing<F> {
    pub fn new(m: &Matroid, field: F) -> Result<Self, Error> {
        let pattern = SlackPattern::new(m);
        let plucker = PluckerRing::for_matroid(m)?;
        let mut names = pattern.var_names();
        let mut p_index = vec![None; plucker.len()];
        for (i, s) in plucker.subsets().iter().enumerate() {
            if m.is_basis(ElemSet::from_slice(s)) {
                p_index[i] = Some(names.len());
                names.push(plucker.name(s));
            }
        }
        let ring = PolyRing::new(field, names, MonomialOrder::DegRevLex);
        Ok(UniversalRing { ring, pattern, plucker, p_index })
    }

    pub fn slack_vars(&self) -> Vec<usize> {
        (0..self.pattern.nvars()).collect()
    }

    pub fn plucker_vars(&self) -> Vec<usize> {
        (self.pattern.nvars()..self.ring.nvars()).collect()
    }

    /// `±p_σ` for an unsorted tuple, zero on repeats and non-bases.
    fn p(&self, seq: &[usize]) -> MultiPoly<F> {
        let Some(sign) = sort_sign(seq) else { return MultiPoly::zero(&self.ring) };
        let mut sorted = seq.to_vec();
        sorted.sort_unstable();
        match self.p_index[self.plucker.index_of(&sorted).unwrap()] {
            Some(v) => MultiPoly::var(&self.ring, v).scale(&self.ring.field().from_i64(sign)),
            None => MultiPoly::zero(&self.ring),
        }
    }

    pub fn mh_matrix(&self, hyperplane: usize) -> Result<MhMatrix<F>, Error> {
        let m = self.pattern.matroid();
        let h = *m
            .hyperplanes()
            .get(hyperplane)
            .ok_or_else(|| Error::Input(format!("no hyperplane H{}", hyperplane + 1)))?;
        let spanning = m.spanning_subsets(h);
        let rows: Vec<usize> = (0..m.n()).filter(|&i| !h.contains(i)).collect();
        let entries = rows
            .iter()
            .map(|&i| {
                let x = self.pattern.var(i, hyperplane).expect("element off its hyperplane");
                let mut row = vec![MultiPoly::var(&self.ring, x)];
                for j in &spanning {
                    let mut seq = vec![i];
                    seq.extend_from_slice(j);
                    // p(seq) carries sgn(i, J) already; sorted form is p_{i ∪ J}
                    row.push(self.p(&seq));
                }
                row
            })
            .collect();
        Ok(MhMatrix { hyperplane, rows, spanning, entries })
    }

    /// The Plücker relations of the matroid lifted to the joint ring.
    pub fn grassmannian_gens(&self) -> Result<Vec<MultiPoly<F>>, Error> {
        let g = grassmannian_ideal(self.pattern.matroid(), self.ring.field().clone())?;
        g.gens().iter().map(|f| Ok(f.to_ring(&self.ring)?)).collect()
    }
}

pub struct UniversalIdeal<F: Field> {
    pub universe: UniversalRing<F>,
    pub ideal: Ideal<F>,
}

/// `P_M` plus the 2-minors of every `M_H`.
pub fn universal_ideal<F: Field>(m: &Matroid, field: F) -> Result<UniversalIdeal<F>, Error> {
    let u = UniversalRing::new(m, field)?;
    let mut gens = u.grassmannian_gens()?;
    for j in 0..m.hyperplanes().len() {
        gens.extend(u.mh_matrix(j)?.two_minors());
    }
    gens.sort_by_key(|g| g.to_string());
    gens.dedup();
    let ideal = Ideal::new(&u.ring, gens)?;
    Ok(UniversalIdeal { universe: u, ideal })
}

/// One side of [`universal_projections`].
#[derive(Clone, Debug)]
pub enum Projection<F: Field> {
    Ideal(Ideal<F>),
    Unknown { reason: String },
}

impl<F: Field> Projection<F> {
    pub fn ideal(&self) -> Option<&Ideal<F>> {
        match self {
            Projection::Ideal(i) => Some(i),
            Projection::Unknown { .. } => None,
        }
    }
}

impl<F: Field> From<Result<Ideal<F>, GbError>> for Projection<F> {
    fn from(r: Result<Ideal<F>, GbError>) -> Self {
        match r {
            Ok(i) => Projection::Ideal(i),
            Err(e) => Projection::Unknown { reason: e.to_string() },
        }
    }
}

#[derive(Clone, Debug)]
pub struct UniversalOptions {
    pub gb: GbOptions,
    /// Refuse instances with more joint variables than this.
    pub max_vars: usize,
}

impl Default for UniversalOptions {
    fn default() -> Self {
        UniversalOptions { gb: GbOptions::default(), max_vars: 40 }
    }
}

pub struct Projections<F: Field> {
    /// `U_M ∩ k[p_B]`.
    pub plucker_side: Projection<F>,
    /// `(U_M : (∏x ∏p)^∞) ∩ k[x]`.
    pub slack_side: Projection<F>,
}

pub fn universal_projections<F: Field>(
    m: &Matroid,
    field: F,
    opts: &UniversalOptions,
) -> Result<Projections<F>, Error> {
    let u = universal_ideal(m, field)?;
    let nv = u.universe.ring.nvars();
    if nv > opts.max_vars {
        let reason = format!("{nv} joint variables exceed the bound of {}", opts.max_vars);
        return Ok(Projections {
            plucker_side: Projection::Unknown { reason: reason.clone() },
            slack_side: Projection::Unknown { reason },
        });
    }
    let xs = u.universe.slack_vars();
    let ps = u.universe.plucker_vars();
    let plucker_side = eliminate(&u.ideal, &xs, &opts.gb).into();
    let all: Vec<usize> = (0..nv).collect();
    let slack_side = saturate_by_variables(&u.ideal, &all, &opts.gb)
        .and_then(|sat| eliminate(&sat, &ps, &opts.gb))
        .into();
    Ok(Projections { plucker_side, slack_side })
}

/// The point `(slack entries, Plücker vector)` of a realization in the
/// joint ring's variable order.
pub fn joint_point<F: Field>(
    u: &UniversalRing<F>,
    slack: &Matrix<F::Elem>,
    v: &PointConfiguration<F>,
) -> Vec<F::Elem> {
    let mut pt = u.pattern.values::<F>(slack);
    let q = plucker_vector(v);
    for (i, idx) in u.p_index.iter().enumerate() {
        if idx.is_some() {
            pt.push(q[i].clone());
        }
    }
    pt
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::io::example;
    use crate::rational::Rational;
    use crate::slack::{slack_ideal, slack_of_realization, SlackIdealOptions};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn opts() -> GbOptions {
        GbOptions::default()
    }

    #[test]
    fn gr24_has_one_relation() {
        let i = plucker_ideal(2, 4, Rationals).unwrap();
        assert_eq!(i.gens().len(), 1);
        let f = MultiPoly::parse(i.ring(), "p_{12}*p_{34} - p_{13}*p_{24} + p_{14}*p_{23}").unwrap();
        assert_eq!(i.gens()[0], f.normalized());
        assert!(plucker_ideal(1, 5, Rationals).unwrap().gens().is_empty());
        assert!(plucker_ideal(5, 5, Rationals).unwrap().gens().is_empty());
        assert!(plucker_ideal(0, 3, Rationals).is_err());
    }

    #[test]
    fn relations_vanish_on_random_minors() {
        let k = PrimeField::new(32003).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (kk, n) in [(2, 5), (3, 6), (2, 6)] {
            let i = plucker_ideal(kk, n, k.clone()).unwrap();
            for _ in 0..100 {
                let rows: Vec<Vec<u32>> = (0..kk).map(|_| (0..n).map(|_| rng.gen_range(0..32003)).collect()).collect();
                let Ok(v) = PointConfiguration::new(k.clone(), Matrix::from_rows(rows).unwrap()) else { continue };
                let q = plucker_vector(&v);
                assert!(i.gens().iter().all(|g| g.eval_full(&q) == 0));
            }
        }
    }

    #[test]
    fn gr36_relations_generate_a_prime_of_the_right_size() {
        // Gr(3,6) has dimension 9 in P^19, degree 42
        let i = plucker_ideal(3, 6, PrimeField::new(32003).unwrap()).unwrap();
        let (dim, deg) = crate::groebner::dimension_and_degree(&i, &opts()).unwrap();
        assert_eq!((dim, deg), (10, 42));
    }

    #[test]
    fn m4_plucker_vector_vanishes_exactly_on_nonbases() {
        let spec = example("m4").unwrap();
        let m = spec.matroid().unwrap();
        let v = spec.realization(&Rationals).unwrap().unwrap();
        let pr = PluckerRing::for_matroid(&m).unwrap();
        let q = plucker_vector(&v);
        let zeros: Vec<String> = (0..pr.len()).filter(|&i| q[i].is_zero()).map(|i| pr.name(&pr.subsets()[i])).collect();
        assert_eq!(zeros, ["p_{123}", "p_{156}", "p_{246}", "p_{345}"]);
        let g = grassmannian_ideal(&m, Rationals).unwrap();
        assert_eq!(g.ring().nvars(), 16);
        let pt: Vec<Rational> = (0..pr.len()).filter(|&i| !q[i].is_zero()).map(|i| q[i].clone()).collect();
        assert!(g.gens().iter().all(|f| f.eval_full(&pt).is_zero()));
    }

    #[test]
    fn identity_columns() {
        let k = Rationals;
        let mut rows = vec![vec![Rational::zero(); 5]; 3];
        for (i, r) in rows.iter_mut().enumerate() {
            r[i] = Rational::one();
        }
        rows[0][3] = Rational::from_int(2);
        let v = PointConfiguration::new(k, Matrix::from_rows(rows).unwrap()).unwrap();
        let q = plucker_vector(&v);
        let pr = PluckerRing::new(3, 5, 1).unwrap();
        assert!(q[0].is_one());
        assert!(q[pr.index_of(&[0, 1, 3]).unwrap()].is_zero());
        assert_eq!(q[pr.index_of(&[1, 2, 3]).unwrap()], Rational::from_int(2));
    }

    #[test]
    fn plucker_vectors_scale_under_change_of_basis() {
        let k = PrimeField::new(101).unwrap();
        let v = Matrix::from_rows(vec![vec![1, 0, 3, 5, 7], vec![0, 1, 4, 2, 9]]).unwrap();
        let a = Matrix::from_rows(vec![vec![2, 3], vec![5, 7]]).unwrap();
        let av = crate::linalg::mat_mul(&k, &a, &v);
        let q1 = plucker_vector(&PointConfiguration::new(k.clone(), v).unwrap());
        let q2 = plucker_vector(&PointConfiguration::new(k.clone(), av).unwrap());
        let det = determinant(&k, &a).unwrap();
        for (x, y) in q1.iter().zip(&q2) {
            assert_eq!(k.mul(x, &det), *y);
        }
    }

    #[test]
    fn u24_grassmannian_keeps_the_relation() {
        let m = Matroid::uniform(2, 4).unwrap();
        let g = grassmannian_ideal(&m, Rationals).unwrap();
        assert_eq!(g.gens().len(), 1);
        assert_eq!(g.gens()[0].len(), 3);
        let r1 = Matroid::uniform(1, 1).unwrap();
        assert!(grassmannian_ideal(&r1, Rationals).unwrap().gens().is_empty());
    }

    #[test]
    fn m4_mh_246() {
        let m = example("m4").unwrap().matroid().unwrap();
        let u = UniversalRing::new(&m, Rationals).unwrap();
        let mh = u.mh_matrix(1).unwrap();
        let expected = [
            ["x_{1,2}", "p_{124}", "p_{126}", "p_{146}"],
            ["x_{3,2}", "-p_{234}", "-p_{236}", "p_{346}"],
            ["x_{5,2}", "p_{245}", "-p_{256}", "-p_{456}"],
        ];
        assert_eq!(mh.to_strings(), expected.map(|r| r.map(String::from).to_vec()).to_vec());
        // two-point hyperplane 25: one spanning subset
        assert_eq!(u.mh_matrix(4).unwrap().ncols(), 2);
    }

    #[test]
    fn mh_sign_convention() {
        assert_eq!(insertion_sign(3, &[1, 5]), -1);
        assert_eq!(insertion_sign(1, &[3, 5]), 1);
        assert_eq!(insertion_sign(6, &[1, 5]), 1);
        assert_eq!(sort_sign(&[3, 1, 5]), Some(-1));
        assert_eq!(sort_sign(&[3, 1, 3]), None);
    }

    #[test]
    fn u23_mh_is_two_by_two() {
        let m = Matroid::uniform(2, 3).unwrap();
        let u = UniversalRing::new(&m, Rationals).unwrap();
        for j in 0..3 {
            let mh = u.mh_matrix(j).unwrap();
            assert_eq!((mh.nrows(), mh.ncols()), (2, 2));
        }
    }

    #[test]
    fn realizations_lie_on_the_universal_variety() {
        for name in ["m4", "nonfano"] {
            let spec = example(name).unwrap();
            let m = spec.matroid().unwrap();
            let v = match spec.realization(&Rationals) {
                Some(v) => v.unwrap(),
                None => {
                    let s = spec.extra_matrix(&Rationals, "slack_matrix").unwrap().unwrap();
                    crate::slack::NumericSlack::new(Rationals, s).row_configuration().unwrap()
                }
            };
            let u = universal_ideal(&m, Rationals).unwrap();
            let s = slack_of_realization(&v, Some(&m)).unwrap();
            let pt = joint_point(&u.universe, s.matrix(), &v);
            for g in u.ideal.gens() {
                assert!(g.eval_full(&pt).is_zero(), "{name}: {g}");
            }
            // every M_H has rank one at the point
            for j in 0..m.hyperplanes().len() {
                let mh = u.universe.mh_matrix(j).unwrap();
                let num: Vec<Vec<Rational>> =
                    mh.entries.iter().map(|r| r.iter().map(|e| e.eval_full(&pt)).collect()).collect();
                assert_eq!(crate::linalg::rank(&Rationals, &Matrix::from_rows(num).unwrap()), 1);
            }
        }
    }

    #[test]
    fn u24_plucker_side_is_the_grassmannian() {
        let m = Matroid::uniform(2, 4).unwrap();
        let pr = universal_projections(&m, Rationals, &UniversalOptions::default()).unwrap();
        let got = pr.plucker_side.ideal().unwrap();
        let want = grassmannian_ideal(&m, Rationals).unwrap().to_ring(got.ring()).unwrap();
        assert!(got.same_ideal(&want, &opts()).unwrap());
    }

    #[test]
    fn u23_slack_side_is_the_slack_ideal() {
        let m = Matroid::uniform(2, 3).unwrap();
        let pr = universal_projections(&m, Rationals, &UniversalOptions::default()).unwrap();
        let got = pr.slack_side.ideal().unwrap();
        let p = SlackPattern::new(&m);
        let want = slack_ideal(&p, Rationals, &SlackIdealOptions::unscaled()).unwrap().ideal;
        let want = want.to_ring(got.ring()).unwrap();
        assert!(got.same_ideal(&want, &opts()).unwrap());
    }

    #[test]
    fn rank_one_projections_are_zero() {
        // a simple rank-1 matroid has a single element
        let m = Matroid::uniform(1, 1).unwrap();
        let pr = universal_projections(&m, Rationals, &UniversalOptions::default()).unwrap();
        assert!(pr.plucker_side.ideal().unwrap().gens().is_empty());
        assert!(pr.slack_side.ideal().unwrap().gens().is_empty());
    }

    #[test]
    fn oversized_instances_are_refused() {
        let m = example("m4").unwrap().matroid().unwrap();
        let o = UniversalOptions { max_vars: 10, ..Default::default() };
        let pr = universal_projections(&m, Rationals, &o).unwrap();
        assert!(matches!(pr.slack_side, Projection::Unknown { .. }));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn grassmannian_vanishes_on_random_realizations(entries in prop::collection::vec(0u32..32003, 12)) {
            let k = PrimeField::new(32003).unwrap();
            let rows: Vec<Vec<u32>> = entries.chunks(4).map(|c| c.to_vec()).collect();
            if let Ok(v) = PointConfiguration::new(k.clone(), Matrix::from_rows(rows).unwrap()) {
                let m = v.matroid().unwrap();
                let g = grassmannian_ideal(&m, k.clone()).unwrap();
                let pr = PluckerRing::for_matroid(&m).unwrap();
                let q = plucker_vector(&v);
                let pt: Vec<u32> = (0..pr.len()).filter(|&i| m.is_basis(ElemSet::from_slice(&pr.subsets()[i]))).map(|i| q[i]).collect();
                prop_assert!(g.gens().iter().all(|f| f.eval_full(&pt) == 0));
            }
        }
    }
}
