//! Modules over the Artinian local ring `A_n(p) = R/<p^n>`.
//!
//! Indecomposables are the cyclic modules `V_i = R/<p^i>` for `1 <= i <= n`,
//! so everything here is index arithmetic. `V_0` is the zero module and
//! `V_n` is the only indecomposable projective.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::class::{
    critical_decompose, hmf_hom, primary_decompose, suspend_class, valuation, MfClass,
};
use crate::error::{Error, Result};
use crate::mf::MatrixFactorization;
use crate::ring::{factorize, gcd, RingElement};

fn check_index(n: u32, i: u32, lo: u32, hi: u32) -> Result<()> {
    if i < lo || i > hi {
        return Err(Error::Range(format!(
            "index {i} outside {lo}..={hi} (n = {n})"
        )));
    }
    Ok(())
}

/// `min(i, n - i)`.
pub fn delta(n: u32, i: u32) -> Result<u32> {
    check_index(n, i, 0, n)?;
    Ok(i.min(n - i))
}

/// `min(delta_n(i), delta_n(j))`.
pub fn mu(n: u32, i: u32, j: u32) -> Result<u32> {
    Ok(delta(n, i)?.min(delta(n, j)?))
}

/// The four-case form of `mu`, kept as an independent check.
pub fn mu_by_cases(n: u32, i: u32, j: u32) -> Result<u32> {
    check_index(n, i, 0, n)?;
    check_index(n, j, 0, n)?;
    Ok(match (i + j <= n, i <= j) {
        (true, true) => i,
        (true, false) => j,
        (false, false) => n - i,
        (false, true) => n - j,
    })
}

/// The ring `A_n(p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambdaContext {
    p: RingElement,
    n: u32,
}

impl LambdaContext {
    pub fn new(p: &RingElement, n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Range(format!("n = {n}; need n >= 2")));
        }
        if p.is_zero() || p.is_unit() {
            return Err(Error::NotPrime(p.to_string()));
        }
        let pf = factorize(p)?;
        if pf.factors.len() != 1 || pf.factors[0].1 != 1 {
            return Err(Error::NotPrime(p.to_string()));
        }
        Ok(LambdaContext {
            p: p.canonical(),
            n,
        })
    }

    pub fn p(&self) -> &RingElement {
        &self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `p^n`, the potential whose primary part realizes this ring.
    pub fn modulus(&self) -> RingElement {
        self.p.pow(self.n)
    }
}

/// `Hom(V_i, V_j) ≅ V_min(i,j)`.
pub fn hom_module(ctx: &LambdaContext, i: u32, j: u32) -> Result<u32> {
    check_index(ctx.n, i, 0, ctx.n)?;
    check_index(ctx.n, j, 0, ctx.n)?;
    Ok(i.min(j))
}

/// `Hom` in the stable category: `V_mu(i,j)`.
pub fn stable_hom(ctx: &LambdaContext, i: u32, j: u32) -> Result<u32> {
    check_index(ctx.n, i, 1, ctx.n - 1)?;
    check_index(ctx.n, j, 1, ctx.n - 1)?;
    mu(ctx.n, i, j)
}

/// `Hom_(R/<c>)(R/<a>, R/<b>) ≅ R/<gcd(a, b)>`; returns the canonical gcd.
pub fn hom_cyclic(a: &RingElement, b: &RingElement, c: &RingElement) -> Result<RingElement> {
    for x in [a, b, c] {
        if x.is_zero() {
            return Err(Error::Precondition(
                "cyclic annihilators must be non-zero".into(),
            ));
        }
    }
    for x in [a, b] {
        if !x.divides(c)? {
            return Err(Error::not_divisible(c, x));
        }
    }
    gcd(a, b)
}

/// `Ω(V_i) ≅ V_(n-i)`.
pub fn syzygy(ctx: &LambdaContext, i: u32) -> Result<u32> {
    check_index(ctx.n, i, 1, ctx.n)?;
    Ok(ctx.n - i)
}

/// `V_i / V_j ≅ V_(i-j)` for the submodule `V_j ⊂ V_i`.
pub fn quotient(ctx: &LambdaContext, i: u32, j: u32) -> Result<u32> {
    check_index(ctx.n, i, 0, ctx.n)?;
    check_index(ctx.n, j, 0, i)?;
    Ok(i - j)
}

/// A module `⊕ V_i^(count_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicDecomposition {
    #[serde(serialize_with = "ser_text")]
    pub p: RingElement,
    pub n: u32,
    #[serde(rename = "mult", serialize_with = "ser_mult")]
    pub multiplicities: BTreeMap<u32, usize>,
}

fn ser_text<S: serde::Serializer>(e: &RingElement, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(e)
}

fn ser_mult<S: serde::Serializer>(
    m: &BTreeMap<u32, usize>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(m.len()))?;
    for (k, v) in m {
        map.serialize_entry(&k.to_string(), v)?;
    }
    map.end()
}

impl CyclicDecomposition {
    pub fn empty(ctx: &LambdaContext) -> Self {
        CyclicDecomposition {
            p: ctx.p.clone(),
            n: ctx.n,
            multiplicities: BTreeMap::new(),
        }
    }

    /// Adds `V_i`; `V_0` is dropped.
    pub fn add(&mut self, i: u32, count: usize) {
        if i > 0 && count > 0 {
            *self.multiplicities.entry(i).or_default() += count;
        }
    }

    /// Composition length.
    pub fn length(&self) -> u64 {
        self.multiplicities
            .iter()
            .map(|(&i, &c)| i as u64 * c as u64)
            .sum()
    }

    pub fn summands(&self) -> impl Iterator<Item = u32> + '_ {
        self.multiplicities.keys().copied()
    }
}

/// Counts the cyclic summands `R/<p^k>` of a module given by annihilators.
pub fn decompose_module(
    ctx: &LambdaContext,
    annihilators: &[RingElement],
) -> Result<CyclicDecomposition> {
    let mut out = CyclicDecomposition::empty(ctx);
    for a in annihilators {
        if a.is_zero() {
            return Err(Error::Range("R/<0> is not a module over A_n(p)".into()));
        }
        let k = valuation(a, &ctx.p)?;
        if a.canonical() != ctx.p.pow(k) {
            return Err(Error::Precondition(format!(
                "{a} is not a power of {}",
                ctx.p
            )));
        }
        check_index(ctx.n, k, 0, ctx.n)?;
        out.add(k, 1);
    }
    Ok(out)
}

/// `0 -> V_i -> V_(i-1) ⊕ V_(i+1) -> V_i -> 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArSequence {
    pub left: u32,
    pub middle: CyclicDecomposition,
    pub right: u32,
}

pub fn ar_sequence(ctx: &LambdaContext, i: u32) -> Result<ArSequence> {
    check_index(ctx.n, i, 1, ctx.n - 1)?;
    let mut middle = CyclicDecomposition::empty(ctx);
    middle.add(i - 1, 1);
    middle.add(i + 1, 1);
    Ok(ArSequence {
        left: i,
        middle,
        right: i,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub from: u32,
    pub to: u32,
    pub valuation: (u32, u32),
}

/// Vertices are module indices; `translation[i]` is `τ(V_i)` (`None` when
/// it vanishes).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArQuiver {
    pub n: u32,
    pub stable: bool,
    pub vertices: Vec<u32>,
    pub projective: Option<u32>,
    pub arrows: Vec<Arrow>,
    pub translation: BTreeMap<u32, Option<u32>>,
}

pub fn ar_quiver(ctx: &LambdaContext, stable: bool) -> ArQuiver {
    let n = ctx.n;
    let top = if stable { n - 1 } else { n };
    let vertices: Vec<u32> = (1..=top).collect();
    let mut arrows = Vec::new();
    for i in 1..top {
        arrows.push(Arrow {
            from: i,
            to: i + 1,
            valuation: (1, 1),
        });
        arrows.push(Arrow {
            from: i + 1,
            to: i,
            valuation: (1, 1),
        });
    }
    let translation = vertices
        .iter()
        .map(|&i| (i, (i < n).then_some(i)))
        .collect();
    ArQuiver {
        n,
        stable,
        vertices,
        projective: (!stable).then_some(n),
        arrows,
        translation,
    }
}

impl ArQuiver {
    /// Graphviz rendering: the projective vertex is filled, `τ` is drawn as
    /// dashed self-loops.
    pub fn to_dot(&self) -> String {
        let kind = if self.stable { "stable" } else { "module" };
        let mut s = String::new();
        let _ = writeln!(s, "digraph {kind}_quiver_n{} {{", self.n);
        s.push_str("  rankdir=LR;\n  node [shape=circle];\n");
        for &v in &self.vertices {
            if Some(v) == self.projective {
                let _ = writeln!(
                    s,
                    "  V{v} [label=\"V{v}\", style=filled, fillcolor=lightblue];"
                );
            } else {
                let _ = writeln!(s, "  V{v} [label=\"V{v}\"];");
            }
        }
        for a in &self.arrows {
            let _ = writeln!(s, "  V{} -> V{};", a.from, a.to);
        }
        for (v, t) in &self.translation {
            if let Some(t) = t {
                let _ = writeln!(
                    s,
                    "  V{v} -> V{t} [style=dashed, arrowhead=none, label=\"tau\"];"
                );
            }
        }
        s.push_str("}\n");
        s
    }
}

/// `mu_n(i, j) = mu_n(j, n - i)` for all stable `i, j`: the index form of
/// `Ω` being a Serre functor.
pub fn serre_identity(n: u32) -> Result<bool> {
    for i in 1..n {
        for j in 1..n {
            if mu(n, i, j)? != mu(n, j, n - i)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Compares the hom modules between primary factorizations of `p^n`,
/// computed from the hom complex, with `V_mu(i,j)`; also checks that
/// suspension on objects and on classes both act as `Ω`.
pub fn cok_crosscheck(ctx: &LambdaContext) -> Result<bool> {
    let w = ctx.modulus();
    let cd = critical_decompose(&w)?;
    let p = &ctx.p;
    let e = |i: u32| MatrixFactorization::elementary(&p.pow(i), &w);
    for i in 1..ctx.n {
        let ei = e(i)?;
        for j in 1..ctx.n {
            let (even, _) = hmf_hom(&ei, &e(j)?)?;
            let m = stable_hom(ctx, i, j)?;
            let expected = if m == 0 { vec![] } else { vec![p.pow(m)] };
            if even.cyclic_factors != expected {
                return Ok(false);
            }
        }
        let class = MfClass::new(cd.clone(), vec![(p.clone(), i)])?;
        let omega = MfClass::new(cd.clone(), vec![(p.clone(), syzygy(ctx, i)?)])?;
        if suspend_class(&class) != omega || primary_decompose(&ei.suspension(), &cd)? != omega {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Closes `{V_1}` under taking summands of AR-sequence middle terms, within
/// the stable vertices. Returns the set after each step; the last entry is
/// `{1, ..., n-1}`.
pub fn generation_steps(ctx: &LambdaContext) -> Result<Vec<Vec<u32>>> {
    let mut current = vec![1u32];
    let mut layers = vec![current.clone()];
    loop {
        let mut next = current.clone();
        for &i in &current {
            for k in ar_sequence(ctx, i)?.middle.summands() {
                if k < ctx.n && !next.contains(&k) {
                    next.push(k);
                }
            }
        }
        next.sort_unstable();
        if next == current {
            return Ok(layers);
        }
        layers.push(next.clone());
        current = next;
    }
}
