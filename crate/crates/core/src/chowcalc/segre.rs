//! Bigraded multidegrees by generic slicing, and Segre classes of cones assembled from them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::chern::ChernPoly;
use super::chow::{cap, ChowClass};
use crate::error::{Error, Result};
use crate::linecone::Cone;
use crate::symkernel::modp::{leading_monomials, prime_at_most, Fp};
use crate::symkernel::{dimension_degree, standard_monomial_count, Ideal, Mono, Poly, PolyRing, Rat, Var};

pub const DEFAULT_SEED: u64 = 0x5e9e;
/// Bound on the absolute value of random slicing coefficients.
pub const COEFF_BOUND: i64 = 10_000;
const RETRIES: u64 = 3;
/// S-pair budget for one sliced system over `F_p`.
const MODP_PAIRS: usize = 500_000;

/// Degrees `m[a][b]` of `Z · Hᵃ · ξᵇ` for a bigraded `Z` of dimension `δ = a + b`.
///
/// `H` is the hyperplane class of the first factor; `ξ` is the class of a generic form
/// of degree `D` in the first factor and `1` in the fiber variables, `D` the largest twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multidegree {
    /// Dimension of `Z`, `-1` if empty.
    pub delta: i64,
    pub entries: BTreeMap<(usize, usize), u64>,
}

impl Multidegree {
    pub fn get(&self, a: usize, b: usize) -> u64 {
        self.entries.get(&(a, b)).copied().unwrap_or(0)
    }
}

fn random_coeff<R: Rng>(rng: &mut R) -> Rat {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-COEFF_BOUND..=COEFF_BOUND);
    }
    crate::symkernel::rat(c)
}

/// All monomials of degree `d` in the variables `vars` of an `n`-variable ring.
fn monomials(n: usize, vars: &[usize], d: u32) -> Vec<Mono> {
    if vars.is_empty() {
        return if d == 0 { vec![Mono::one(n)] } else { vec![] };
    }
    let mut out = Vec::new();
    let (first, rest) = vars.split_first().unwrap();
    for e in 0..=d {
        for mut m in monomials(n, rest, d - e) {
            m.0[*first] += e as u16;
            out.push(m);
        }
    }
    out
}

fn random_form<R: Rng>(rng: &mut R, n: usize, vars: &[usize], d: u32) -> Poly {
    Poly::from_terms(n, monomials(n, vars, d).into_iter().map(|m| (m, random_coeff(rng))))
}

/// Solves affine-linear equations with constant coefficients and substitutes the pivots into
/// `polys`; returns the polynomials over the remaining variables, or `None` if inconsistent.
fn eliminate_linear(polys: &[Poly], eqs: &[Poly], n: usize) -> Option<(Vec<Poly>, usize)> {
    // rows: coefficient per variable, then constant
    let mut rows: Vec<Vec<Rat>> = eqs
        .iter()
        .map(|e| {
            let mut r = vec![Rat::zero(); n + 1];
            for (m, c) in e.terms() {
                match m.support().collect::<Vec<_>>()[..] {
                    [] => r[n] = c.clone(),
                    [v] if m.0[v] == 1 => r[v] = c.clone(),
                    _ => panic!("equation is not affine-linear"),
                }
            }
            r
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in (0..n).rev() {
        let Some(p) = (row..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        let inv = Rat::one() / &rows[row][col];
        for x in rows[row].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[row].clone();
        for (i, r) in rows.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let f = r[col].clone();
                for (x, p) in r.iter_mut().zip(&pivot) {
                    *x -= p * &f;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    if rows[row..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free: Vec<usize> = (0..n).filter(|v| !pivot_cols.contains(v)).collect();
    let nf = free.len();
    let mut images: Vec<Poly> = vec![Poly::zero(nf); n];
    for (k, &v) in free.iter().enumerate() {
        images[v] = Poly::var(nf, k);
    }
    for &(r, c) in &pivots {
        // x_c = -const - Σ_{free} coeff·x
        let mut img = Poly::constant(nf, -rows[r][n].clone());
        for (k, &v) in free.iter().enumerate() {
            if !rows[r][v].is_zero() {
                img = img.sub(&Poly::var(nf, k).scale(&rows[r][v]));
            }
        }
        images[c] = img;
    }
    Some((polys.iter().map(|p| p.substitute(&images)).collect(), nf))
}

fn aux_ring(n: usize) -> crate::symkernel::Ring {
    PolyRing::new((0..n).map(|i| Var::aux(format!("u{i}"))).collect()).unwrap()
}

/// Slicing data for an ideal whose fiber variables all carry the same twist `D`, so that
/// generic `(D, 1)`-forms are linear forms in the fiber variables.
struct Slicer {
    n: usize,
    xs: Vec<usize>,
    fib: Vec<usize>,
}

impl Slicer {
    /// Chart equations `l(x) = 1` and `m(Y) = 1`. On `l = 1` the fiber coordinates are
    /// trivialized, so a linear form in them picks a representative on every fiber line.
    fn charts<R: Rng>(&self, rng: &mut R) -> Vec<Poly> {
        let one = Poly::one(self.n);
        vec![
            random_form(rng, self.n, &self.xs, 1).sub(&one),
            random_form(rng, self.n, &self.fib, 1).sub(&one),
        ]
    }

    /// Length of `J ∩ {a x-slices, b fiber slices}` in the two affine charts, counted over
    /// `F_p` for a random prime `p` near `2⁶²`. `None` when the slice is not usable.
    fn count<R: Rng>(&self, gens: &[Poly], a: usize, b: usize, rng: &mut R) -> Option<u64> {
        let mut linear = self.charts(rng);
        for _ in 0..a {
            linear.push(random_form(rng, self.n, &self.xs, 1));
        }
        for _ in 0..b {
            linear.push(random_form(rng, self.n, &self.fib, 1));
        }
        let Some((reduced, nf)) = eliminate_linear(gens, &linear, self.n) else {
            return Some(0);
        };
        let p = prime_at_most((1 << 62) - rng.gen_range(0..1u64 << 20));
        let field = Fp::new(p).ok()?;
        let lts = leading_monomials(&reduced, nf, &field, MODP_PAIRS).ok()??;
        standard_monomial_count(&lts, nf).ok()
    }

    /// Dimension of the bigraded scheme (both charts, no slices).
    fn dimension<R: Rng>(&self, gens: &[Poly], rng: &mut R) -> i64 {
        match eliminate_linear(gens, &self.charts(rng), self.n) {
            None => -1,
            Some((reduced, nf)) => dimension_degree(&Ideal::new(aux_ring(nf), reduced)).dim,
        }
    }
}

/// Re-embeds `⊕ 𝒪(dᵢ)` into copies of `𝒪(D)` by `Yᵢ ↦ (m·Yᵢ)` over the monomials `m` of degree
/// `D - dᵢ`, so that all fiber variables get twist `D`. The returned ideal is the image away
/// from `x = 0`: the relations `Z_{i,m}·m′ = Z_{i,m′}·m` together with, for each `j`, the
/// generators rewritten with `Yᵢ = Z_{i,x_j^k} / x_j^k`. Charts avoid `x = 0`, so this suffices.
fn uniform_presentation(ideal: &Ideal, nx: usize) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let twist = |v: usize| ring.vars()[v].base_weight;
    let big_d = (nx..n).map(twist).max().unwrap_or(0);
    if (nx..n).all(|v| twist(v) == big_d) {
        return Ok(ideal.clone());
    }
    let xs: Vec<usize> = (0..nx).collect();
    let mut vars: Vec<Var> = ring.vars()[..nx].to_vec();
    // per fiber variable: (monomial in x, index of its Z variable)
    let mut zs: Vec<Vec<(Mono, usize)>> = Vec::new();
    for v in nx..n {
        let mut list = Vec::new();
        for m in monomials(nx, &xs, big_d - twist(v)) {
            list.push((m, vars.len()));
            vars.push(Var::cone(format!("Z{}_{}", v - nx, list.len() - 1), 0, big_d));
        }
        zs.push(list);
    }
    let target = PolyRing::new(vars)?;
    let nz = target.nvars();
    let xpoly = |m: &Mono| Poly::monomial(Mono::from_slice(&[&m.0[..nx], &vec![0; nz - nx][..]].concat()), Rat::one());
    let mut gens = Vec::new();
    for list in &zs {
        for (k, (m, z)) in list.iter().enumerate() {
            for (m2, z2) in &list[k + 1..] {
                gens.push(Poly::var(nz, *z).mul(&xpoly(m2)).sub(&Poly::var(nz, *z2).mul(&xpoly(m))));
            }
        }
    }
    for g in ideal.gens() {
        for j in 0..nx {
            // Yᵢ ↦ Z_{i,x_j^k} · x_j^{-k}; clear the largest negative power of x_j
            let shift = |e: &Mono| -> u32 {
                (nx..n).map(|v| u32::from(e.0[v]) * (big_d - twist(v))).sum()
            };
            let top = g.terms().iter().map(|(e, _)| shift(e)).max().unwrap_or(0);
            let terms = g.terms().iter().map(|(e, c)| {
                let mut out = vec![0u16; nz];
                out[..nx].copy_from_slice(&e.0[..nx]);
                out[j] += (top - shift(e)) as u16;
                for v in nx..n {
                    let k = big_d - twist(v);
                    let target_m = {
                        let mut m = vec![0u16; nx];
                        m[j] = k as u16;
                        Mono::from_slice(&m)
                    };
                    let z = zs[v - nx].iter().find(|(m, _)| *m == target_m).unwrap().1;
                    out[z] += e.0[v];
                }
                (Mono::from_slice(&out), c.clone())
            });
            gens.push(Poly::from_terms(nz, terms));
        }
    }
    Ok(Ideal::new(target, gens))
}

fn multidegree_once(ideal: &Ideal, nx: usize, seed: u64) -> Result<Option<Multidegree>> {
    let n = ideal.ring().nvars();
    let slicer = Slicer {
        n,
        xs: (0..nx).collect(),
        fib: (nx..n).collect(),
    };
    let gens = ideal.gb().polys.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let delta = slicer.dimension(&gens, &mut rng);
    let mut entries = BTreeMap::new();
    if delta < 0 {
        return Ok(Some(Multidegree { delta, entries }));
    }
    let nfib = slicer.fib.len();
    let pairs: Vec<(usize, usize, u64)> = (0..=delta as usize)
        .map(|a| (a, delta as usize - a))
        .filter(|&(a, b)| a < nx && b < nfib.max(1))
        .map(|(a, b)| (a, b, rng.gen()))
        .collect();
    let counts: Vec<Option<u64>> = pairs
        .par_iter()
        .map(|&(a, b, s)| slicer.count(&gens, a, b, &mut ChaCha8Rng::seed_from_u64(s)))
        .collect();
    for ((a, b, _), c) in pairs.iter().zip(counts) {
        match c {
            Some(0) => {}
            Some(l) => {
                entries.insert((*a, *b), l);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(Multidegree { delta, entries }))
}

/// Multidegree of a bigraded ideal whose first `nx` variables are the projective coordinates
/// and whose remaining variables are fiber coordinates, with twists read from the ring.
///
/// Two independently seeded computations must agree; up to three further seed pairs are tried.
pub fn multidegree(ideal: &Ideal, nx: usize, seed: u64) -> Result<Multidegree> {
    let ideal = &uniform_presentation(ideal, nx)?;
    for attempt in 0..=RETRIES {
        let s1 = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(2 * attempt);
        let (a, b) = rayon::join(|| multidegree_once(ideal, nx, s1), || multidegree_once(ideal, nx, s1 + 1));
        if let (Some(a), Some(b)) = (a?, b?) {
            if a == b {
                return Ok(a);
            }
        }
    }
    Err(Error::Genericity(format!(
        "multidegree did not stabilize across {} seed pairs",
        RETRIES + 1
    )))
}

fn binomial(r: usize, j: usize) -> BigInt {
    (0..j).fold(BigInt::one(), |acc, i| acc * BigInt::from(r - i) / BigInt::from(i + 1))
}

/// Segre class of a cone over `X ⊂ Pⁿ`, pushed forward to `A_*(Pⁿ)`.
///
/// Computed on `C′ = C ⊕ 𝒪(D)` for the largest coordinate twist `D`; then `s(C) = c(𝒪(D)) ∩ s(C′)`.
pub fn segre_class(cone: &Cone, seed: u64) -> Result<ChowClass> {
    let space = &cone.space;
    let nx = space.nbase();
    if nx == 0 {
        return Err(Error::invalid("Segre class needs a projective base"));
    }
    let n = nx - 1;
    let big_d = space.twists().into_iter().max().unwrap_or(0);
    let ring = space.ring();
    let w = Var::cone(ring.fresh_name("W"), 0, big_d);
    let ext = ring.extended(vec![w])?;
    let total = ext.nvars();
    let ideal = Ideal::new(ext, cone.ideal.gens().iter().map(|g| g.extend(total)).collect());
    let md = multidegree(&ideal, nx, seed)?;
    let mut sc = ChowClass::zero(n);
    if md.delta < 0 {
        return Ok(sc);
    }
    let delta = md.delta as usize;
    let d = BigInt::from(big_d);
    for m in 0..=n.min(delta) {
        let r = delta - m;
        let mut acc = BigInt::zero();
        let mut pow = BigInt::one();
        for j in 0..=r {
            acc += binomial(r, j) * &pow * BigInt::from(md.get(m + j, r - j));
            pow *= -&d;
        }
        sc.coeffs[m] = Rat::from_integer(acc);
    }
    cap(&ChernPoly::line(n, big_d as i64), &sc)
}
