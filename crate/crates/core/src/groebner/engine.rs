//! Buchberger's algorithm with the Gebauer–Möller update and sugar selection.

use std::cmp::Ordering;
use std::sync::atomic::Ordering as AtomicOrdering;
use std::time::Instant;

use crate::error::GbError;
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{merge_lin, Term};

use super::{GbOptions, GbStats};

fn sev(m: &Monomial) -> u64 {
    m.support().fold(0u64, |s, i| s | (1u64 << (i % 64)))
}

struct Entry<E> {
    terms: Vec<Term<E>>,
    sev: u64,
    sugar: u32,
}

impl<E> Entry<E> {
    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Source {
    Input(usize),
    Spair(usize, usize),
}

struct Pair {
    src: Source,
    lcm: Monomial,
    sugar: u32,
}

pub(crate) struct Engine<'a, F: Field> {
    k: &'a F,
    ord: &'a MonomialOrder,
    opts: &'a GbOptions,
    inputs: Vec<Vec<Term<F::Elem>>>,
    basis: Vec<Entry<F::Elem>>,
    active: Vec<usize>,
    /// Pending pairs, sorted so that the next one to process is last.
    pairs: Vec<Pair>,
    strip: Option<Vec<bool>>,
    start: Instant,
    pub(crate) stats: GbStats,
}

impl<'a, F: Field> Engine<'a, F> {
    pub(crate) fn new(k: &'a F, ord: &'a MonomialOrder, opts: &'a GbOptions) -> Self {
        Engine {
            k,
            ord,
            opts,
            inputs: Vec::new(),
            basis: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            strip: None,
            start: Instant::now(),
            stats: GbStats::default(),
        }
    }

    /// Divide every new basis element by its monomial content in the flagged
    /// variables. The result then generates an ideal between the input and
    /// its saturation by the product of those variables.
    pub(crate) fn set_strip(&mut self, vars: Vec<bool>) {
        self.strip = Some(vars);
    }

    fn pair_cmp(&self, a: &Pair, b: &Pair) -> Ordering {
        a.sugar
            .cmp(&b.sugar)
            .then_with(|| self.ord.cmp(&a.lcm, &b.lcm))
            .then_with(|| src_key(a.src).cmp(&src_key(b.src)))
    }

    fn push_pairs(&mut self, mut new: Vec<Pair>) {
        if new.is_empty() {
            return;
        }
        new.sort_by(|a, b| self.pair_cmp(b, a));
        let old = std::mem::take(&mut self.pairs);
        let mut out = Vec::with_capacity(old.len() + new.len());
        let mut a = old.into_iter().peekable();
        let mut b = new.into_iter().peekable();
        loop {
            let take_a = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some(x), Some(y)) => self.pair_cmp(x, y) != Ordering::Less,
            };
            out.push(if take_a { a.next().unwrap() } else { b.next().unwrap() });
        }
        self.pairs = out;
    }

    fn exceeds(&self, m: &Monomial) -> bool {
        self.opts.truncation.as_ref().is_some_and(|t| t.exceeds(m))
    }

    pub(crate) fn add_inputs(&mut self, polys: Vec<Vec<Term<F::Elem>>>) {
        let mut new = Vec::new();
        for p in polys {
            if p.is_empty() {
                continue;
            }
            let lm = p[0].0.clone();
            if self.exceeds(&lm) {
                self.stats.skipped_by_bound += 1;
                continue;
            }
            let sugar = p.iter().map(|t| t.0.degree()).max().unwrap();
            let idx = self.inputs.len();
            self.inputs.push(p);
            new.push(Pair { src: Source::Input(idx), lcm: lm, sugar });
        }
        self.push_pairs(new);
    }

    fn check_budget(&self) -> Result<(), GbError> {
        let b = &self.opts.budget;
        if let Some(flag) = &b.cancel {
            if flag.load(AtomicOrdering::Relaxed) {
                return Err(GbError::Cancelled);
            }
        }
        let over_pairs = b.max_pairs.is_some_and(|m| self.stats.pairs >= m);
        let over_time = b.deadline.is_some_and(|d| Instant::now() >= d);
        if over_pairs || over_time {
            return Err(GbError::BudgetExhausted {
                pairs: self.stats.pairs,
                elapsed: self.start.elapsed(),
            });
        }
        Ok(())
    }

    fn find_reducer(&self, m: &Monomial, msev: u64) -> Option<usize> {
        let mut best: Option<usize> = None;
        for &i in &self.active {
            let e = &self.basis[i];
            if e.sev & !msev != 0 || !e.lm().divides(m) {
                continue;
            }
            if best.map_or(true, |b| e.terms.len() < self.basis[b].terms.len()) {
                best = Some(i);
            }
        }
        best
    }

    /// Full reduction modulo the active basis.
    pub(crate) fn reduce(&self, mut f: Vec<Term<F::Elem>>) -> Vec<Term<F::Elem>> {
        let k = self.k;
        let mut done: Vec<Term<F::Elem>> = Vec::new();
        let mut pos = 0;
        while pos < f.len() {
            let m = &f[pos].0;
            match self.find_reducer(m, sev(m)) {
                Some(g) => {
                    let g = &self.basis[g];
                    let q = m.div(g.lm()).unwrap();
                    let lc_g = &g.terms[0].1;
                    let c = k.neg(&k.div(&f[pos].1, lc_g).unwrap());
                    let rest = merge_lin(k, self.ord, &f[pos + 1..], &g.terms[1..], &c, Some(&q));
                    done.extend(f.drain(..pos));
                    f = rest;
                    pos = 0;
                }
                None => pos += 1,
            }
        }
        done.extend(f);
        done
    }

    fn make_monic(&self, f: &mut [Term<F::Elem>]) {
        if let Some(first) = f.first() {
            if self.k.is_one(&first.1) {
                return;
            }
            let inv = self.k.inv(&first.1).unwrap();
            for t in f.iter_mut() {
                t.1 = self.k.mul(&t.1, &inv);
            }
        }
    }

    fn strip_content(&self, f: Vec<Term<F::Elem>>) -> (Vec<Term<F::Elem>>, bool) {
        let Some(vars) = &self.strip else {
            return (f, false);
        };
        if f.is_empty() {
            return (f, false);
        }
        let mut g = f[0].0.restrict(vars);
        for (m, _) in &f[1..] {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        if g.is_one() {
            return (f, false);
        }
        let mut out: Vec<Term<F::Elem>> =
            f.into_iter().map(|(m, c)| (m.div(&g).unwrap(), c)).collect();
        // dividing by a monomial preserves the order of the terms
        debug_assert!(out.windows(2).all(|w| self.ord.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        out.shrink_to_fit();
        (out, true)
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Monomial) -> Vec<Term<F::Elem>> {
        let k = self.k;
        let a = &self.basis[i];
        let b = &self.basis[j];
        let qa = lcm.div(a.lm()).unwrap();
        let qb = lcm.div(b.lm()).unwrap();
        let ca = k.inv(&a.terms[0].1).unwrap();
        let cb = k.neg(&k.inv(&b.terms[0].1).unwrap());
        let left: Vec<Term<F::Elem>> =
            a.terms[1..].iter().map(|(m, c)| (m.mul(&qa), k.mul(c, &ca))).collect();
        merge_lin(k, self.ord, &left, &b.terms[1..], &cb, Some(&qb))
    }

    /// Runs until no pairs remain.
    pub(crate) fn run(&mut self) -> Result<(), GbError> {
        while let Some(pair) = self.pairs.pop() {
            self.check_budget()?;
            self.stats.pairs += 1;
            let raw = match pair.src {
                Source::Input(idx) => std::mem::take(&mut self.inputs[idx]),
                Source::Spair(i, j) => self.spoly(i, j, &pair.lcm),
            };
            let mut h = self.reduce(raw);
            loop {
                if h.is_empty() {
                    break;
                }
                let (s, changed) = self.strip_content(h);
                h = s;
                if !changed {
                    break;
                }
                self.stats.stripped += 1;
                h = self.reduce(h);
            }
            if h.is_empty() {
                self.stats.zero_reductions += 1;
                continue;
            }
            self.make_monic(&mut h);
            self.insert(h, pair.sugar);
            if self.basis[*self.active.last().unwrap()].lm().is_one() {
                // unit ideal: nothing else can change the answer
                self.pairs.clear();
                break;
            }
        }
        Ok(())
    }

    /// Gebauer–Möller update followed by insertion of `h`.
    fn insert(&mut self, h: Vec<Term<F::Elem>>, sugar: u32) {
        let hi = self.basis.len();
        let hlm = h[0].0.clone();
        let hsev = sev(&hlm);
        let hdeg = hlm.degree();
        self.basis.push(Entry { terms: h, sev: hsev, sugar });

        // candidate pairs (g, h), by increasing lcm degree with coprime
        // ones first among equal lcms
        let mut cands: Vec<(usize, Monomial, u64, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let e = &self.basis[g];
                let l = e.lm().lcm(&hlm);
                let s = e.sev | hsev;
                (g, l, s, e.lm().is_coprime(&hlm))
            })
            .collect();
        cands.sort_by(|a, b| a.1.degree().cmp(&b.1.degree()).then(b.3.cmp(&a.3)).then(a.0.cmp(&b.0)));
        // drop (g,h) when a kept (g2,h) has an lcm dividing lcm(g,h)
        let mut kept: Vec<(usize, Monomial, u64, bool)> = Vec::new();
        for c in cands {
            if kept.iter().any(|k| k.2 & !c.2 == 0 && k.1.divides(&c.1)) {
                continue;
            }
            kept.push(c);
        }
        let mut new_pairs = Vec::new();
        for (g, lcm, _, coprime) in kept {
            if coprime {
                self.stats.product_criterion += 1;
                continue;
            }
            if self.exceeds(&lcm) {
                self.stats.skipped_by_bound += 1;
                continue;
            }
            let e = &self.basis[g];
            let s1 = e.sugar + lcm.degree() - e.lm().degree();
            let s2 = sugar + lcm.degree() - hdeg;
            new_pairs.push(Pair { src: Source::Spair(g, hi), lcm, sugar: s1.max(s2) });
        }

        // chain criterion on old pairs
        let basis = &self.basis;
        let before = self.pairs.len();
        self.pairs.retain(|p| {
            let Source::Spair(i, j) = p.src else { return true };
            if !hlm.divides(&p.lcm) {
                return true;
            }
            let li = basis[i].lm().lcm(&hlm);
            let lj = basis[j].lm().lcm(&hlm);
            li == p.lcm || lj == p.lcm
        });
        self.stats.chain_criterion += (before - self.pairs.len()) as u64;

        self.active.retain(|&g| !(hsev & !basis[g].sev == 0 && hlm.divides(basis[g].lm())));
        self.push_pairs(new_pairs);
        self.active.push(hi);
        if self.k.characteristic() == 0 {
            self.tail_reduce_by(hi);
        }
    }

    /// Reduces the tails of the other active elements that have a term
    /// divisible by the new leading monomial. Over the rationals this keeps
    /// coefficients from swelling; over prime fields it is not worth it.
    fn tail_reduce_by(&mut self, hi: usize) {
        let hlm = self.basis[hi].lm().clone();
        let hsev = self.basis[hi].sev;
        let targets: Vec<usize> = self
            .active
            .iter()
            .copied()
            .filter(|&g| {
                g != hi
                    && self.basis[g].terms[1..]
                        .iter()
                        .any(|(m, _)| hsev & !sev(m) == 0 && hlm.divides(m))
            })
            .collect();
        for g in targets {
            let tail = self.reduce(self.basis[g].terms[1..].to_vec());
            let mut p = Vec::with_capacity(tail.len() + 1);
            p.push(self.basis[g].terms[0].clone());
            p.extend(tail);
            self.basis[g].terms = p;
        }
    }

    /// Reduced, monic basis sorted by increasing leading monomial.
    pub(crate) fn finish(mut self) -> Vec<Vec<Term<F::Elem>>> {
        let mut act = std::mem::take(&mut self.active);
        act.sort_by(|&a, &b| self.ord.cmp(self.basis[a].lm(), self.basis[b].lm()));
        let mut out: Vec<Vec<Term<F::Elem>>> = Vec::with_capacity(act.len());
        for (pos, &i) in act.iter().enumerate() {
            // reduce the tail against every other element
            self.active = act.iter().copied().filter(|&j| j != i).collect();
            let _ = pos;
            let terms = std::mem::take(&mut self.basis[i].terms);
            let head = terms[0].clone();
            let tail = self.reduce(terms[1..].to_vec());
            let mut p = Vec::with_capacity(tail.len() + 1);
            p.push(head);
            p.extend(tail);
            self.make_monic(&mut p);
            self.basis[i].terms = p.clone();
            out.push(p);
        }
        out
    }
}

fn src_key(s: Source) -> (u8, usize, usize) {
    match s {
        Source::Input(i) => (0, i, 0),
        Source::Spair(i, j) => (1, i, j),
    }
}
