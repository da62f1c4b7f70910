//! Buchberger's algorithm with the Gebauer–Möller installation of the
//! product and chain criteria, producing reduced Gröbner bases.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::mono::{Mono, MonoOrder};
use super::poly::Poly;
use super::Rat;
use crate::error::{Error, Result};

/// Limits for a single Gröbner computation.
#[derive(Clone, Debug)]
pub struct GbConfig {
    pub max_pairs: usize,
    pub max_basis: usize,
    /// Variables `start..end` that mark module positions. When set, inputs must be linear in
    /// them and only pairs with a common position are formed: a module Gröbner basis.
    pub module_vars: Option<(usize, usize)>,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            max_pairs: 2_000_000,
            max_basis: 50_000,
            module_vars: None,
        }
    }
}

/// A reduced Gröbner basis: monic, no leading term divides another, tails reduced.
/// Elements are sorted by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroebnerBasis {
    pub order: MonoOrder,
    pub nvars: usize,
    pub polys: Vec<Poly>,
}

/// Terms sorted descending under a chosen order.
#[derive(Clone, Debug)]
struct OPoly {
    terms: Vec<(Mono, Rat)>,
}

impl OPoly {
    fn from_poly(p: &Poly, order: &MonoOrder) -> Self {
        let mut terms = p.terms().to_vec();
        if *order != MonoOrder::GrevLex {
            terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        }
        OPoly { terms }
    }

    fn to_poly(&self, nvars: usize) -> Poly {
        Poly::from_terms(nvars, self.terms.iter().cloned())
    }

    fn lm(&self) -> &Mono {
        &self.terms[0].0
    }

    fn make_monic(&mut self) {
        let lc = self.terms[0].1.clone();
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in self.terms.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// `a - c * m * b` with both operands sorted under `order`.
fn sub_scaled(a: &[(Mono, Rat)], c: &Rat, m: &Mono, b: &[(Mono, Rat)], order: &MonoOrder) -> Vec<(Mono, Rat)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut pending: Option<(Mono, Rat)> = None;
    loop {
        if pending.is_none() && j < b.len() {
            let (bm, bc) = &b[j];
            pending = Some((bm.mul(m), bc * c));
            j += 1;
        }
        match (&pending, i < a.len()) {
            (None, false) => break,
            (None, true) => {
                out.push(a[i].clone());
                i += 1;
            }
            (Some((pm, pc)), has_a) => {
                let ord = if has_a { order.cmp(&a[i].0, pm) } else { Ordering::Less };
                match ord {
                    Ordering::Greater => {
                        out.push(a[i].clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push((pm.clone(), -pc));
                        pending = None;
                    }
                    Ordering::Equal => {
                        let v = &a[i].1 - pc;
                        if !v.is_zero() {
                            out.push((pm.clone(), v));
                        }
                        i += 1;
                        pending = None;
                    }
                }
            }
        }
    }
    out
}

/// Fully reduces `p` modulo `basis` (indices into `store`).
fn reduce(mut work: Vec<(Mono, Rat)>, store: &[OPoly], basis: &[usize], order: &MonoOrder) -> Vec<(Mono, Rat)> {
    let mut result: Vec<(Mono, Rat)> = Vec::new();
    while !work.is_empty() {
        let (lm, lc) = work[0].clone();
        let divisor = basis.iter().map(|&k| &store[k]).find(|g| g.lm().divides(&lm));
        match divisor {
            Some(g) => {
                let shift = g.lm().quotient_of(&lm);
                // leading coefficients of store entries are one
                work = sub_scaled(&work, &lc, &shift, &g.terms, order);
            }
            None => {
                result.push((lm, lc));
                work.remove(0);
            }
        }
    }
    result
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Poly], order: &MonoOrder, nvars: usize, cfg: &GbConfig) -> Result<GroebnerBasis> {
    let mut store: Vec<OPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let unit = |nvars| GroebnerBasis {
        order: order.clone(),
        nvars,
        polys: vec![Poly::one(nvars)],
    };

    // inputs sorted by leading monomial for determinism and smaller intermediate growth
    let mut inputs: Vec<OPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            debug_assert_eq!(g.nvars(), nvars);
            let mut o = OPoly::from_poly(g, order);
            o.make_monic();
            o
        })
        .collect();
    inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()));

    let mut installed = 0usize;
    let mut install = |h: OPoly,
                       store: &mut Vec<OPoly>,
                       active: &mut Vec<usize>,
                       pairs: &mut Vec<Pair>|
     -> Result<()> {
        installed += 1;
        if installed > cfg.max_basis {
            return Err(Error::ResourceLimit(format!("basis size exceeded {}", cfg.max_basis)));
        }
        let hi = store.len();
        let hlm = h.lm().clone();
        store.push(h);
        // Gebauer–Möller update
        let same_position = |l: &Mono| match cfg.module_vars {
            Some((a, b)) => l.0[a..b].iter().map(|&e| u32::from(e)).sum::<u32>() <= 1,
            None => true,
        };
        let cands: Vec<(usize, Mono)> = active
            .iter()
            .map(|&g| (g, hlm.lcm(store[g].lm())))
            .filter(|(_, l)| same_position(l))
            .collect();
        let mut keep: Vec<(usize, Mono)> = Vec::new();
        for (k, (g, l)) in cands.iter().enumerate() {
            let coprime = hlm.gcd_is_one(store[*g].lm());
            let dominated = cands[k + 1..]
                .iter()
                .chain(keep.iter())
                .any(|(_, l2)| l2.divides(l) && l2 != l)
                || cands[k + 1..].iter().any(|(_, l2)| l2 == l);
            if coprime || !dominated {
                keep.push((*g, l.clone()));
            }
        }
        pairs.retain(|p| {
            !(hlm.divides(&p.lcm)
                && hlm.lcm(store[p.i].lm()) != p.lcm
                && hlm.lcm(store[p.j].lm()) != p.lcm)
        });
        for (g, l) in keep {
            if hlm.gcd_is_one(store[g].lm()) {
                continue;
            }
            pairs.push(Pair { i: g, j: hi, lcm: l });
        }
        active.retain(|&g| !hlm.divides(store[g].lm()));
        active.push(hi);
        Ok(())
    };

    for inp in inputs {
        let r = reduce(inp.terms, &store, &active, order);
        if r.is_empty() {
            continue;
        }
        let mut h = OPoly { terms: r };
        if h.lm().is_one() {
            return Ok(unit(nvars));
        }
        h.make_monic();
        install(h, &mut store, &mut active, &mut pairs)?;
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        processed += 1;
        if processed > cfg.max_pairs {
            return Err(Error::ResourceLimit(format!("more than {} S-pairs", cfg.max_pairs)));
        }
        // normal selection strategy: smallest lcm first
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .cmp(&pairs[a].lcm, &pairs[b].lcm)
                    .then_with(|| (pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
            })
            .unwrap();
        let p = pairs.swap_remove(best);
        let (fi, fj) = (&store[p.i], &store[p.j]);
        let ti = fi.lm().quotient_of(&p.lcm);
        let tj = fj.lm().quotient_of(&p.lcm);
        let a: Vec<(Mono, Rat)> = fi.terms[1..].iter().map(|(m, c)| (m.mul(&ti), c.clone())).collect();
        let spoly = sub_scaled(&a, &Rat::one(), &tj, &fj.terms[1..], order);
        let r = reduce(spoly, &store, &active, order);
        if r.is_empty() {
            continue;
        }
        let mut h = OPoly { terms: r };
        if h.lm().is_one() {
            return Ok(unit(nvars));
        }
        h.make_monic();
        install(h, &mut store, &mut active, &mut pairs)?;
    }

    // interreduce the minimal basis
    let mut idx = active.clone();
    idx.sort_by(|&a, &b| order.cmp(store[a].lm(), store[b].lm()));
    let mut polys = Vec::with_capacity(idx.len());
    for (k, &g) in idx.iter().enumerate() {
        let others: Vec<usize> = idx.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, &h)| h).collect();
        let head = store[g].terms[0].clone();
        let tail = reduce(store[g].terms[1..].to_vec(), &store, &others, order);
        let mut terms = vec![head];
        terms.extend(tail);
        polys.push(OPoly { terms }.to_poly(nvars));
    }
    Ok(GroebnerBasis {
        order: order.clone(),
        nvars,
        polys,
    })
}

impl GroebnerBasis {
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.polys.iter().map(|p| p.leading(&self.order).unwrap().0.clone()).collect()
    }

    /// Normal form of `p` modulo the basis.
    pub fn reduce(&self, p: &Poly) -> Poly {
        let store: Vec<OPoly> = self.polys.iter().map(|g| OPoly::from_poly(g, &self.order)).collect();
        let basis: Vec<usize> = (0..store.len()).collect();
        let r = reduce(OPoly::from_poly(p, &self.order).terms, &store, &basis, &self.order);
        OPoly { terms: r }.to_poly(self.nvars)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Reduces many polynomials against one prepared basis.
    pub fn reducer(&self) -> Reducer<'_> {
        Reducer {
            gb: self,
            store: self.polys.iter().map(|g| OPoly::from_poly(g, &self.order)).collect(),
        }
    }
}

pub struct Reducer<'a> {
    gb: &'a GroebnerBasis,
    store: Vec<OPoly>,
}

impl Reducer<'_> {
    pub fn reduce(&self, p: &Poly) -> Poly {
        let basis: Vec<usize> = (0..self.store.len()).collect();
        let r = reduce(OPoly::from_poly(p, &self.gb.order).terms, &self.store, &basis, &self.gb.order);
        OPoly { terms: r }.to_poly(self.gb.nvars)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.reduce(p).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symkernel::ring::PolyRing;

    fn gb(ring: &PolyRing, gens: &[&str], order: MonoOrder) -> Vec<String> {
        let ps: Vec<Poly> = gens.iter().map(|g| ring.parse(g).unwrap()).collect();
        let b = buchberger(&ps, &order, ring.nvars(), &GbConfig::default()).unwrap();
        b.polys.iter().map(|p| ring.format(p)).collect()
    }

    #[test]
    fn single_monomial() {
        let r = PolyRing::base(&["x", "y"]).unwrap();
        assert_eq!(gb(&r, &["x"], MonoOrder::GrevLex), vec!["x"]);
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = PolyRing::base(&["x", "y"]).unwrap();
        assert_eq!(gb(&r, &["x^2", "x*y", "y^2"], MonoOrder::GrevLex), vec!["y^2", "x*y", "x^2"]);
    }

    #[test]
    fn elimination_of_veronese_parametrization() {
        let r = PolyRing::base(&["x", "y", "A", "B", "C"]).unwrap();
        let order = MonoOrder::elim_range(5, 0..2);
        let basis = gb(&r, &["A - x^2", "B - x*y", "C - y^2"], order);
        let elim: Vec<&String> = basis
            .iter()
            .filter(|s| !s.contains('x') && !s.contains('y'))
            .collect();
        assert_eq!(elim, vec!["B^2 - A*C"]);
    }

    #[test]
    fn unit_detection() {
        let r = PolyRing::base(&["x", "y"]).unwrap();
        assert_eq!(gb(&r, &["x*y - 1", "x"], MonoOrder::GrevLex), vec!["1"]);
    }

    #[test]
    fn lex_triangular() {
        let r = PolyRing::base(&["x", "y"]).unwrap();
        // x^2 + y^2 - 1, x - y under lex x > y
        let basis = gb(&r, &["x^2 + y^2 - 1", "x - y"], MonoOrder::Lex);
        assert_eq!(basis, vec!["y^2 - 1/2", "x - y"]);
    }
}
