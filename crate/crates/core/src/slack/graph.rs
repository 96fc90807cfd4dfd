//! The bipartite non-incidence graph, spanning forests, cycles and cycle
//! ideals.

use std::collections::{HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::Field;
use crate::groebner::{GbOptions, Ideal};
use crate::linalg::Matrix;
use crate::monomial::Monomial;
use crate::poly::{MultiPoly, Ring};

use super::SlackPattern;

pub const DEFAULT_CYCLE_CAP: usize = 100_000;

/// Elements are nodes `0..n`, hyperplanes `n..n+h`; edge `v` is slack
/// variable `v`.
#[derive(Clone, Debug)]
pub struct NonIncidenceGraph {
    n: usize,
    h: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl NonIncidenceGraph {
    pub fn new(pattern: &SlackPattern) -> Self {
        let n = pattern.nrows();
        let h = pattern.ncols();
        let mut adj = vec![Vec::new(); n + h];
        let mut edges = Vec::with_capacity(pattern.nvars());
        for (v, &(i, j)) in pattern.positions().iter().enumerate() {
            edges.push((i, n + j));
            adj[i].push((n + j, v));
            adj[n + j].push((i, v));
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        NonIncidenceGraph { n, h, edges, adj }
    }

    pub fn node_count(&self) -> usize {
        self.n + self.h
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `(element, n + hyperplane)`.
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn neighbors(&self, node: usize) -> &[(usize, usize)] {
        &self.adj[node]
    }

    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.node_count()];
        let mut c = 0;
        for s in 0..self.node_count() {
            if !seen[s] {
                c += 1;
                self.bfs(s, &mut seen, &mut Vec::new());
            }
        }
        c
    }

    fn bfs(&self, s: usize, seen: &mut [bool], tree: &mut Vec<usize>) {
        let mut q = VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = q.pop_front() {
            for &(w, e) in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    tree.push(e);
                    q.push_back(w);
                }
            }
        }
    }

    /// Breadth-first from the lowest unvisited node, neighbours in
    /// increasing order.
    pub fn spanning_forest(&self) -> Forest {
        let mut seen = vec![false; self.node_count()];
        let mut edges = Vec::new();
        for s in 0..self.node_count() {
            if !seen[s] {
                self.bfs(s, &mut seen, &mut edges);
            }
        }
        edges.sort_unstable();
        Forest { edges }
    }

    /// All simple cycles, each once, as node sequences starting at their
    /// smallest node. Fails with [`Error::CycleCap`] beyond `cap`.
    pub fn simple_cycles(&self, cap: usize) -> Result<Vec<Cycle>, Error> {
        self.cycles(false, cap)
    }

    /// Simple cycles without chords (induced cycles).
    pub fn chordless_cycles(&self, cap: usize) -> Result<Vec<Cycle>, Error> {
        self.cycles(true, cap)
    }

    fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        let nb = &self.adj[a];
        let i = nb.partition_point(|&(w, _)| w < b);
        nb.get(i).filter(|&&(w, _)| w == b).map(|&(_, e)| e)
    }

    fn cycles(&self, chordless: bool, cap: usize) -> Result<Vec<Cycle>, Error> {
        let mut walk = Walk { path: Vec::new(), edges: Vec::new(), on_path: vec![false; self.node_count()], out: Vec::new() };
        for s in 0..self.node_count() {
            walk.path.push(s);
            walk.on_path[s] = true;
            self.extend(s, &mut walk, chordless, cap)?;
            walk.on_path[s] = false;
            walk.path.pop();
        }
        Ok(walk.out)
    }

    fn extend(&self, s: usize, walk: &mut Walk, chordless: bool, cap: usize) -> Result<(), Error> {
        let u = *walk.path.last().unwrap();
        for &(w, e) in &self.adj[u] {
            if w == s && walk.path.len() >= 4 && walk.path[1] < u {
                walk.close(e, cap)?;
                continue;
            }
            if w <= s || walk.on_path[w] {
                continue;
            }
            let mut closes = None;
            if chordless {
                // w may touch the path only at u, and at s when it closes it
                let inner = &walk.path[1.min(walk.path.len() - 1)..walk.path.len() - 1];
                if inner.iter().any(|&p| self.edge_between(w, p).is_some()) {
                    continue;
                }
                if walk.path.len() > 1 {
                    closes = self.edge_between(w, s);
                }
            }
            walk.path.push(w);
            walk.edges.push(e);
            walk.on_path[w] = true;
            match closes {
                Some(f) => {
                    if walk.path.len() >= 4 && walk.path[1] < w {
                        walk.close(f, cap)?;
                    }
                }
                None => self.extend(s, walk, chordless, cap)?,
            }
            walk.on_path[w] = false;
            walk.edges.pop();
            walk.path.pop();
        }
        Ok(())
    }

    /// One cycle per non-forest edge: the edge plus the forest path between
    /// its ends. These generate the cycle space.
    pub fn fundamental_cycles(&self, forest: &Forest) -> Vec<Cycle> {
        let mut tree_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.node_count()];
        for &e in &forest.edges {
            let (a, b) = self.edges[e];
            tree_adj[a].push((b, e));
            tree_adj[b].push((a, e));
        }
        let mut out = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if forest.edges.binary_search(&e).is_ok() {
                continue;
            }
            // path b → a in the forest
            let mut prev: HashMap<usize, (usize, usize)> = HashMap::new();
            let mut q = VecDeque::from([b]);
            prev.insert(b, (b, usize::MAX));
            while let Some(u) = q.pop_front() {
                if u == a {
                    break;
                }
                for &(w, f) in &tree_adj[u] {
                    if let std::collections::hash_map::Entry::Vacant(slot) = prev.entry(w) {
                        slot.insert((u, f));
                        q.push_back(w);
                    }
                }
            }
            let mut nodes = vec![a];
            let mut edges = Vec::new();
            let mut cur = a;
            while cur != b {
                let (p, f) = prev[&cur];
                edges.push(f);
                nodes.push(p);
                cur = p;
            }
            // nodes a … b, edges between consecutive ones, then e closes
            edges.push(e);
            out.push(Cycle::new(nodes, edges));
        }
        out
    }
}

/// A set of graph edges (slack variables) forming a maximal spanning forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forest {
    edges: Vec<usize>,
}

impl Forest {
    /// Validates acyclicity and maximality against `graph`.
    pub fn from_edges(graph: &NonIncidenceGraph, mut edges: Vec<usize>) -> Result<Self, Error> {
        edges.sort_unstable();
        edges.dedup();
        let f = Forest { edges };
        f.check(graph)?;
        Ok(f)
    }

    /// From `(element, hyperplane)` positions (0-based).
    pub fn from_positions(pattern: &SlackPattern, pos: &[(usize, usize)]) -> Result<Self, Error> {
        let mut edges = Vec::new();
        for &(i, j) in pos {
            if i >= pattern.nrows() || j >= pattern.ncols() {
                return Err(Error::Input(format!("forest position ({i}, {j}) outside the slack matrix")));
            }
            let v = pattern.var(i, j).ok_or_else(|| {
                Error::Input(format!(
                    "forest position ({}, {}) is a zero of the slack matrix",
                    pattern.matroid().label(i),
                    j + 1
                ))
            })?;
            edges.push(v);
        }
        Self::from_edges(&NonIncidenceGraph::new(pattern), edges)
    }

    pub(crate) fn check(&self, graph: &NonIncidenceGraph) -> Result<(), Error> {
        let mut parent: Vec<usize> = (0..graph.node_count()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        for &e in &self.edges {
            if e >= graph.edge_count() {
                return Err(Error::Input(format!("forest edge {e} is not a slack variable")));
            }
            let (a, b) = graph.edge(e);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Error::Input("forest contains a cycle".into()));
            }
            parent[ra] = rb;
        }
        let needed = graph.node_count() - graph.components();
        if self.edges.len() != needed {
            return Err(Error::Input(format!(
                "forest has {} edges, a maximal spanning forest has {needed}",
                self.edges.len()
            )));
        }
        Ok(())
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn mask(&self, nvars: usize) -> Vec<bool> {
        let mut m = vec![false; nvars];
        for &e in &self.edges {
            m[e] = true;
        }
        m
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

/// A closed walk through distinct nodes. `plus` and `minus` hold the
/// alternating edges: `edges[0], edges[2], …` and `edges[1], edges[3], …`.
struct Walk {
    path: Vec<usize>,
    edges: Vec<usize>,
    on_path: Vec<bool>,
    out: Vec<Cycle>,
}

impl Walk {
    fn close(&mut self, e: usize, cap: usize) -> Result<(), Error> {
        if self.out.len() >= cap {
            return Err(Error::CycleCap { cap });
        }
        let mut edges = self.edges.clone();
        edges.push(e);
        self.out.push(Cycle::new(self.path.clone(), edges));
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub nodes: Vec<usize>,
    pub edges: Vec<usize>,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

impl Cycle {
    fn new(nodes: Vec<usize>, edges: Vec<usize>) -> Self {
        let plus = edges.iter().step_by(2).copied().collect();
        let minus = edges.iter().skip(1).step_by(2).copied().collect();
        Cycle { nodes, edges, plus, minus }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// `x^{c+} − α·x^{c−}` with `α = s^{c+} / s^{c−}`.
#[derive(Clone, Debug)]
pub struct CycleBinomial<F: Field> {
    pub cycle: Cycle,
    pub alpha: F::Elem,
    pub poly: MultiPoly<F>,
}

/// Which cycles contribute binomials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CycleSet {
    #[default]
    Simple,
    /// Induced cycles only; a much smaller list on dense graphs.
    Chordless,
    /// The fundamental cycles of the spanning forest. They generate the
    /// cycle space but not necessarily the cycle ideal.
    Fundamental,
}

#[derive(Clone, Copy, Debug)]
pub struct CycleOptions {
    pub cap: usize,
    pub cycles: CycleSet,
}

impl Default for CycleOptions {
    fn default() -> Self {
        CycleOptions { cap: DEFAULT_CYCLE_CAP, cycles: CycleSet::Simple }
    }
}

pub struct CycleIdeal<F: Field> {
    pub ideal: Ideal<F>,
    pub binomials: Vec<CycleBinomial<F>>,
    /// True when only fundamental cycles were used.
    pub generating_set_only: bool,
}

fn product<F: Field>(k: &F, s: &Matrix<F::Elem>, pattern: &SlackPattern, edges: &[usize]) -> F::Elem {
    edges.iter().fold(k.one(), |acc, &e| {
        let (i, j) = pattern.position(e);
        k.mul(&acc, s.get(i, j))
    })
}

fn monomial_of(nvars: usize, edges: &[usize]) -> Monomial {
    let mut e = vec![0u16; nvars];
    for &v in edges {
        e[v] += 1;
    }
    Monomial::from_exponents(e)
}

/// The binomial of one cycle in the ring of all slack variables.
pub fn cycle_binomial<F: Field>(
    ring: &Ring<F>,
    pattern: &SlackPattern,
    s: &Matrix<F::Elem>,
    cycle: &Cycle,
) -> Result<CycleBinomial<F>, Error> {
    let k = ring.field();
    let sp = product(k, s, pattern, &cycle.plus);
    let sm = product(k, s, pattern, &cycle.minus);
    let alpha = k.div(&sp, &sm).ok_or_else(|| Error::Slack("slack entry is zero on the support".into()))?;
    let n = ring.nvars();
    let poly = MultiPoly::from_terms(
        ring,
        vec![(monomial_of(n, &cycle.plus), k.one()), (monomial_of(n, &cycle.minus), k.neg(&alpha))],
    );
    Ok(CycleBinomial { cycle: cycle.clone(), alpha, poly })
}

/// The cycle ideal of a slack matrix `s` with the support of `pattern`, in
/// the ring of all slack variables.
pub fn cycle_ideal<F: Field>(
    pattern: &SlackPattern,
    k: &F,
    s: &Matrix<F::Elem>,
    opts: &CycleOptions,
) -> Result<CycleIdeal<F>, Error> {
    if !pattern.matches_support(k, s) {
        return Err(Error::Slack("matrix support differs from the slack pattern".into()));
    }
    let ring = pattern.ring(k.clone());
    let g = NonIncidenceGraph::new(pattern);
    let cycles = match opts.cycles {
        CycleSet::Simple => g.simple_cycles(opts.cap)?,
        CycleSet::Chordless => g.chordless_cycles(opts.cap)?,
        CycleSet::Fundamental => g.fundamental_cycles(&g.spanning_forest()),
    };
    let mut binomials = Vec::with_capacity(cycles.len());
    for c in &cycles {
        binomials.push(cycle_binomial(&ring, pattern, s, c)?);
    }
    let gens = binomials.iter().map(|b| b.poly.normalized()).collect();
    Ok(CycleIdeal { ideal: Ideal::new(&ring, gens)?, binomials, generating_set_only: opts.cycles == CycleSet::Fundamental })
}

/// Whether `ideal` (in the ring of all slack variables of `pattern`) is the
/// kernel of `x_{ij} ↦ s_{ij} r_i t_j`, tested in two directions: every
/// generator maps to zero (exactly, per multidegree), and a sample of kernel
/// binomials (fundamental cycles plus random simple cycles) lies in the
/// ideal.
pub fn cycle_kernel_check<F: Field>(
    pattern: &SlackPattern,
    k: &F,
    s: &Matrix<F::Elem>,
    ideal: &Ideal<F>,
    opts: &GbOptions,
) -> Result<bool, Error> {
    if !pattern.matches_support(k, s) {
        return Ok(false);
    }
    let ring = pattern.ring(k.clone());
    let ideal = ideal.to_ring(&ring)?;
    let (n, h) = (pattern.nrows(), pattern.ncols());
    for g in ideal.gens() {
        let mut groups: HashMap<Vec<u32>, F::Elem> = HashMap::new();
        for (m, c) in g.terms() {
            let mut deg = vec![0u32; n + h];
            let mut val = c.clone();
            for v in m.support() {
                let e = m.exponent(v);
                let (i, j) = pattern.position(v);
                deg[i] += e as u32;
                deg[n + j] += e as u32;
                val = k.mul(&val, &k.pow(s.get(i, j), e as u64));
            }
            let slot = groups.entry(deg).or_insert_with(|| k.zero());
            *slot = k.add(slot, &val);
        }
        if groups.values().any(|v| !k.is_zero(v)) {
            return Ok(false);
        }
    }
    let g = NonIncidenceGraph::new(pattern);
    let mut sample = g.fundamental_cycles(&g.spanning_forest());
    if let Ok(mut all) = g.simple_cycles(DEFAULT_CYCLE_CAP) {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        all.shuffle(&mut rng);
        sample.extend(all.into_iter().take(16));
    }
    for c in &sample {
        let b = cycle_binomial(&ring, pattern, s, c)?;
        if !ideal.contains(&b.poly, opts)? {
            return Ok(false);
        }
    }
    Ok(true)
}
