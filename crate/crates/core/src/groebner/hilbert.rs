//! Hilbert series, dimension and degree of monomial ideals.

use crate::monomial::Monomial;

/// The Hilbert series numerator `K(t)` of `k[x]/J` (standard grading) for a
/// monomial ideal `J`, together with the derived dimension and degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    /// Coefficients of `K(t) = HS(t)·(1−t)^n`, lowest degree first.
    pub numerator: Vec<i128>,
    pub dimension: usize,
    pub degree: u64,
}

type Gens = Vec<Vec<u16>>;

fn minimalize(mut gens: Gens) -> Gens {
    gens.sort_by_key(|g| g.iter().map(|&e| e as u32).sum::<u32>());
    gens.dedup();
    let mut out: Gens = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.iter().zip(&g).all(|(a, b)| a <= b)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &mut Vec<i128>, b: &[i128], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, y) in b.iter().enumerate() {
        a[i + shift] += y;
    }
}

fn one_minus_t_pow(d: usize) -> Vec<i128> {
    let mut v = vec![0i128; d + 1];
    v[0] += 1;
    v[d] -= 1;
    v
}

/// `K(J)` by pivot splitting: `K(J) = K(J + ⟨p⟩) + t^{deg p}·K(J : p)`.
fn numerator(gens: Gens) -> Vec<i128> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    // pairwise coprime generators: product formula
    let n = gens[0].len();
    let mut count = vec![0usize; n];
    for g in &gens {
        for (v, &e) in g.iter().enumerate() {
            if e > 0 {
                count[v] += 1;
            }
        }
    }
    let Some((pv, _)) = count.iter().enumerate().filter(|(_, &c)| c >= 2).max_by_key(|(_, &c)| c)
    else {
        let mut acc = vec![1i128];
        for g in &gens {
            let d: usize = g.iter().map(|&e| e as usize).sum();
            acc = poly_mul(&acc, &one_minus_t_pow(d));
        }
        return acc;
    };
    // pivot x_pv^e with e the smallest positive exponent among the generators
    let e = gens.iter().map(|g| g[pv]).filter(|&x| x > 0).min().unwrap();
    let mut plus = gens.clone();
    let mut p = vec![0u16; n];
    p[pv] = e;
    plus.push(p);
    let colon: Gens = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[pv] = h[pv].saturating_sub(e);
            h
        })
        .collect();
    let mut out = numerator(plus);
    let c = numerator(colon);
    poly_add(&mut out, &c, e as usize);
    out
}

/// Writes `K(t) = (1−t)^c · Q(t)` with `Q(1) ≠ 0`, returning `(c, Q)`.
fn split_one_minus_t(mut k: Vec<i128>) -> (usize, Vec<i128>) {
    let mut c = 0;
    loop {
        if k.iter().all(|&x| x == 0) {
            return (c, k);
        }
        if k.iter().sum::<i128>() != 0 {
            return (c, k);
        }
        // synthetic division by (1 − t): q_i = sum_{j ≤ i} k_j, drop the last
        let mut q = Vec::with_capacity(k.len() - 1);
        let mut acc = 0i128;
        for &x in &k[..k.len() - 1] {
            acc += x;
            q.push(acc);
        }
        k = q;
        c += 1;
    }
}

impl HilbertSeries {
    /// `lms` generate the monomial ideal (any generating set; minimalized
    /// internally). The zero ideal is allowed.
    pub fn of_monomial_ideal(lms: &[Monomial], nvars: usize) -> Self {
        let gens: Gens = lms.iter().map(|m| m.exponents().to_vec()).collect();
        let mut num = numerator(gens);
        while num.len() > 1 && *num.last().unwrap() == 0 {
            num.pop();
        }
        let (c, q) = split_one_minus_t(num.clone());
        let degree = q.iter().sum::<i128>();
        HilbertSeries { numerator: num, dimension: nvars - c, degree: degree.max(0) as u64 }
    }
}

/// Dimension as `n` minus the smallest set of variables meeting the support
/// of every generator (maximal independent sets of the staircase).
pub fn dimension_by_independent_sets(lms: &[Monomial], nvars: usize) -> usize {
    let mut supports: Vec<u128> = Vec::new();
    let mut wide: Vec<Vec<usize>> = Vec::new();
    for m in lms {
        let s: Vec<usize> = m.support().collect();
        wide.push(s);
    }
    if nvars <= 128 {
        for s in &wide {
            supports.push(s.iter().fold(0u128, |a, &v| a | (1u128 << v)));
        }
        supports.sort_by_key(|s| s.count_ones());
        let mut minimal: Vec<u128> = Vec::new();
        for s in supports {
            if !minimal.iter().any(|&t| t & s == t) {
                minimal.push(s);
            }
        }
        let mut best = nvars;
        hitting_set(&minimal, 0, 0, &mut best);
        return nvars - best;
    }
    HilbertSeries::of_monomial_ideal(lms, nvars).dimension
}

fn hitting_set(sets: &[u128], chosen: u128, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let Some(&s) = sets.iter().find(|&&s| s & chosen == 0) else {
        *best = size;
        return;
    };
    let mut bits = s;
    while bits != 0 {
        let v = bits.trailing_zeros();
        bits &= bits - 1;
        hitting_set(sets, chosen | (1u128 << v), size + 1, best);
    }
}
