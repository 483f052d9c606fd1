//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use hmf::ring::factorize;
use hmf::{Ring, RingElement, RingMatrix};

pub fn z(n: i64) -> RingElement {
    Ring::Integers.from_i64(n)
}

pub fn gf3(s: &str) -> RingElement {
    Ring::Poly(3).parse(s).unwrap()
}

/// Invariant-factor chain of `diag(vs)`: sort each prime's exponents and
/// recombine position by position.
pub fn expected_chain(ring: Ring, vs: &[RingElement]) -> Vec<RingElement> {
    let mut primes: Vec<RingElement> = Vec::new();
    let fs: Vec<_> = vs.iter().map(|v| factorize(v).unwrap()).collect();
    for f in &fs {
        for (p, _) in &f.factors {
            if !primes.contains(p) {
                primes.push(p.clone());
            }
        }
    }
    let mut chain = vec![ring.one(); vs.len()];
    for p in &primes {
        let mut exps: Vec<u32> = fs.iter().map(|f| f.exponent_of(p)).collect();
        exps.sort_unstable();
        for (slot, e) in chain.iter_mut().zip(exps) {
            *slot = &*slot * &p.pow(e);
        }
    }
    chain
}

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<RingElement>], ring: Ring) -> RingElement {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    let mut acc = ring.zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<RingElement>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &laplace_det(&minor, ring);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// `Delta_k` = gcd of all `k x k` minors, for `k = 1..=min(rows, cols)`.
pub fn minor_gcds(a: &RingMatrix) -> Vec<RingElement> {
    let ring = a.ring();
    let rows = a.to_rows();
    let top = a.rows().min(a.cols());
    (1..=top)
        .map(|k| {
            let mut g = ring.zero();
            for rs in combinations(a.rows(), k) {
                for cs in combinations(a.cols(), k) {
                    let sub: Vec<Vec<RingElement>> = rs
                        .iter()
                        .map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect())
                        .collect();
                    g = hmf::ring::gcd(&g, &laplace_det(&sub, ring)).unwrap();
                }
            }
            g.canonical()
        })
        .collect()
}

/// Invariant factors from minor gcds: `d_k = Delta_k / Delta_(k-1)` up to the rank.
pub fn factors_from_minors(a: &RingMatrix) -> Vec<RingElement> {
    let ring = a.ring();
    let mut prev = ring.one();
    let mut out = Vec::new();
    for delta in minor_gcds(a) {
        if delta.is_zero() {
            break;
        }
        out.push(delta.exact_div(&prev).unwrap().canonical());
        prev = delta;
    }
    out
}

/// Divisors `d` of `W` with `d` and `W/d` coprime, i.e. the elementary
/// factorizations that vanish in the homotopy category.
pub fn trivial_divisors(w: &RingElement) -> Vec<RingElement> {
    hmf::ring::divisors(w)
        .unwrap()
        .into_iter()
        .filter(|d| {
            let c = w.exact_div(d).unwrap();
            hmf::ring::gcd(d, &c).unwrap().is_unit()
        })
        .collect()
}

/// `lcm` of every `d` with `d^2 | W`, by brute force over divisors.
pub fn annihilator_by_search(w: &RingElement) -> RingElement {
    let mut acc = w.ring().one();
    for d in hmf::ring::divisors(w).unwrap() {
        if (&d * &d).divides(w).unwrap() {
            acc = hmf::ring::lcm(&acc, &d).unwrap();
        }
    }
    acc.canonical()
}
