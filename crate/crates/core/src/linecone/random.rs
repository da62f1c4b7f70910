//! Random complexes, squares, homotopies and cones for property checks.
//!
//! Squares `F• → E•` are built on the sheaf side from `ℰ•`: `ℱ⁰ = ℰ⁰ ⊕ Bᵖ`,
//! `ℱ⁻¹ = ℰ⁻¹/S ⊕ Bᵖ` with `S ⊂ ker d`, `d′ = d ⊕ id`, then disguised by a unimodular change
//! of basis of `ℱ⁰` and a homotopy. `S = 0` gives a quasi-isomorphism; in general `H⁰(φ)` is an
//! isomorphism and `H⁻¹(φ)` surjective, so going down applies.

use rand::Rng;

use super::complex::{ComplexSquare, TwoTerm};
use super::cone::Cone;
use super::space::{LinSpaceHom, LinearSpace};
use crate::error::Result;
use crate::symkernel::{map_diagnostics, Ideal, Poly, PolyRing, PresentedModule, Vector};

/// How a generated square relates to its target complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareKind {
    /// `S = 0`: a quasi-isomorphism.
    QuasiIso,
    /// `S` may be nonzero: going down applies, `H⁻¹` need not be injective.
    Applicable,
    /// `φ⁰`, `φ⁻¹` additionally multiplied by a base linear form; usually not applicable.
    Scaled,
}

/// What the construction guarantees about a generated square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expected {
    pub kind: SquareKind,
    /// A nonzero `S` was divided out.
    pub killed_kernel: bool,
}

fn small<R: Rng>(rng: &mut R) -> i64 {
    rng.gen_range(-2..=2)
}

/// Entry of degree ≤ 1 over the base.
pub fn random_linear<R: Rng>(rng: &mut R, nb: usize) -> Poly {
    let mut p = Poly::from_int(nb, small(rng));
    for i in 0..nb {
        if rng.gen_bool(0.5) {
            p = p.add(&Poly::var(nb, i).scale(&crate::symkernel::rat(small(rng))));
        }
    }
    p
}

/// Entry of degree 0 or 1 (homotopy regime chosen per matrix).
fn random_entry<R: Rng>(rng: &mut R, nb: usize, linear: bool) -> Poly {
    if linear {
        random_linear(rng, nb)
    } else {
        Poly::from_int(nb, small(rng))
    }
}

/// A nonconstant linear form.
fn random_form<R: Rng>(rng: &mut R, nb: usize) -> Poly {
    let i = rng.gen_range(0..nb);
    Poly::var(nb, i).add(&Poly::from_int(nb, small(rng)))
}

pub fn random_base<R: Rng>(rng: &mut R) -> Ideal {
    let names: &[&str] = if rng.gen_bool(0.5) { &["a"] } else { &["a", "b"] };
    Ideal::zero(PolyRing::base(names).unwrap())
}

fn unit(nb: usize, len: usize, i: usize) -> Vector {
    (0..len).map(|j| if i == j { Poly::one(nb) } else { Poly::zero(nb) }).collect()
}

fn pad(v: &[Poly], nb: usize, len: usize) -> Vector {
    let mut out = v.to_vec();
    out.resize(len, Poly::zero(nb));
    out
}

fn space(sheaf: PresentedModule, stem: &str) -> Result<LinearSpace> {
    let names = (0..sheaf.rank).map(|i| format!("{stem}{i}")).collect();
    LinearSpace::from_module(sheaf, Some(names), None)
}

/// A random two-term complex `E₀ → E₁` over `base`; `E₁` may carry a torsion coordinate.
pub fn random_complex<R: Rng>(rng: &mut R, base: &Ideal, level: usize) -> Result<TwoTerm> {
    let nb = base.ring().nvars();
    let r0 = rng.gen_range(1..=2);
    let r1 = r0 + rng.gen_range(0..=1);
    let torsion = rng.gen_bool(0.35);
    let rank1 = r1 + usize::from(torsion);
    let rels = if torsion {
        let mut v = vec![Poly::zero(nb); rank1];
        v[r1] = random_form(rng, nb);
        vec![v]
    } else {
        vec![]
    };
    let e0 = space(PresentedModule::free(base.clone(), r0), &format!("X{level}_"))?;
    let e1 = space(PresentedModule::new(base.clone(), rank1, rels)?, &format!("Z{level}_"))?;
    let matrix: Vec<Vector> = (0..rank1)
        .map(|k| {
            if k < r1 {
                (0..r0).map(|_| random_linear(rng, nb)).collect()
            } else {
                vec![Poly::zero(nb); r0]
            }
        })
        .collect();
    Ok(TwoTerm::new(LinSpaceHom::new_unchecked(e0, e1, matrix)?))
}

/// A random square `F• → E•` onto the given complex, together with its guarantees.
pub fn random_square<R: Rng>(rng: &mut R, e: &TwoTerm, kind: SquareKind, level: usize) -> Result<(ComplexSquare, Expected)> {
    let nb = e.e0.nbase();
    let base = e.e0.base_ideal().clone();
    let r0 = e.e0.rank();
    let r1 = e.e1.rank();
    let p = rng.gen_range(0..=1);
    let (f0r, f1r) = (r0 + p, r1 + p);

    // S ⊂ ker d
    let mut killed = None;
    if kind != SquareKind::QuasiIso && rng.gen_bool(0.7) {
        let ker = e.hm1()?;
        if !ker.is_empty() {
            let mut s = vec![Poly::zero(nb); r1];
            for k in &ker {
                let c = Poly::from_int(nb, small(rng));
                for (x, y) in s.iter_mut().zip(k) {
                    *x = x.add(&c.mul(y));
                }
            }
            if !e.e1.sheaf.is_zero_element(&s) {
                killed = Some(s);
            }
        }
    }
    let mut rels: Vec<Vector> = e.e1.sheaf.relations.iter().map(|r| pad(r, nb, f1r)).collect();
    if let Some(s) = &killed {
        rels.push(pad(s, nb, f1r));
    }
    let f1_sheaf = PresentedModule::new(base.clone(), f1r, rels)?;
    let f0_sheaf = PresentedModule::free(base.clone(), f0r);

    // d′ = d ⊕ id, φ⁰ inclusion, φ⁻¹ projection (all as image lists)
    let mut dprime: Vec<Vector> = e.d.matrix.iter().map(|r| pad(r, nb, f0r)).collect();
    for j in 0..p {
        dprime.push(unit(nb, f0r, r0 + j));
    }
    let mut phi0: Vec<Vector> = (0..r0).map(|i| unit(nb, f0r, i)).collect();
    let mut phi1: Vec<Vector> = (0..r1).map(|i| unit(nb, f1r, i)).collect();

    // unimodular change of basis α = 1 + N on ℱ⁰, N strictly lower triangular
    let mut alpha: Vec<Vector> = (0..f0r).map(|i| unit(nb, f0r, i)).collect();
    for (i, col) in alpha.iter_mut().enumerate() {
        for (j, x) in col.iter_mut().enumerate() {
            if j > i && rng.gen_bool(0.5) {
                *x = random_linear(rng, nb);
            }
        }
    }
    let apply = |m: &[Vector], v: &[Poly], len: usize| crate::symkernel::module::mat_vec(m, v, len, nb);
    dprime = dprime.iter().map(|v| apply(&alpha, v, f0r)).collect();
    phi0 = phi0.iter().map(|v| apply(&alpha, v, f0r)).collect();

    // homotopy h : ℰ⁰ → ℱ⁻¹;  φ⁻¹ += h∘d, φ⁰ += d′∘h
    if rng.gen_bool(0.6) {
        let linear = rng.gen_bool(0.5);
        let h: Vec<Vector> = (0..r0)
            .map(|_| (0..f1r).map(|_| random_entry(rng, nb, linear)).collect())
            .collect();
        for (k, row) in phi1.iter_mut().enumerate() {
            let add = apply(&h, &e.d.matrix[k], f1r);
            *row = row.iter().zip(&add).map(|(a, b)| a.add(b)).collect();
        }
        for (i, row) in phi0.iter_mut().enumerate() {
            let add = apply(&dprime, &h[i], f0r);
            *row = row.iter().zip(&add).map(|(a, b)| a.add(b)).collect();
        }
    }
    if kind == SquareKind::Scaled {
        let t = random_form(rng, nb);
        for row in phi0.iter_mut().chain(phi1.iter_mut()) {
            *row = row.iter().map(|x| x.mul(&t)).collect();
        }
    }

    let f0 = space(f0_sheaf, &format!("X{level}_"))?;
    let f1 = space(f1_sheaf, &format!("Z{level}_"))?;
    let src = TwoTerm::new(LinSpaceHom::new_unchecked(f0.clone(), f1.clone(), dprime)?);
    let sq = ComplexSquare::new(
        src,
        e.clone(),
        LinSpaceHom::new_unchecked(f0, e.e0.clone(), phi0)?,
        LinSpaceHom::new_unchecked(f1, e.e1.clone(), phi1)?,
    )?;
    Ok((
        sq,
        Expected {
            kind,
            killed_kernel: killed.is_some(),
        },
    ))
}

/// A random homotopy `K : F₁ → E₀` for a square `F• → E•`.
pub fn random_homotopy<R: Rng>(rng: &mut R, sq: &ComplexSquare) -> Result<LinSpaceHom> {
    let nb = sq.target.e0.nbase();
    let linear = rng.gen_bool(0.5);
    let matrix = (0..sq.target.e0.rank())
        .map(|_| (0..sq.source.e1.rank()).map(|_| random_entry(rng, nb, linear)).collect())
        .collect();
    LinSpaceHom::new_unchecked(sq.source.e1.clone(), sq.target.e0.clone(), matrix)
}

/// A random `E₀`-cone in `E₁`: polynomials in linear forms from `ker d`.
pub fn random_econe<R: Rng>(rng: &mut R, c: &TwoTerm) -> Result<Cone> {
    let nb = c.e0.nbase();
    let ker = map_diagnostics(&c.d.sheaf_map())?.kernel;
    let n = c.e1.ring().nvars();
    let mut forms = Vec::new();
    if !ker.is_empty() {
        for _ in 0..rng.gen_range(1..=2) {
            let mut v = vec![Poly::zero(nb); c.e1.rank()];
            for k in &ker {
                let coef = if rng.gen_bool(0.7) { Poly::from_int(nb, small(rng)) } else { random_linear(rng, nb) };
                for (x, y) in v.iter_mut().zip(k) {
                    *x = x.add(&coef.mul(y));
                }
            }
            let l = c.e1.linear_form(&v);
            if !l.is_zero() {
                forms.push(l);
            }
        }
    }
    let mut gens = Vec::new();
    if !forms.is_empty() {
        for _ in 0..rng.gen_range(1..=2) {
            let a = &forms[rng.gen_range(0..forms.len())];
            let g = if rng.gen_bool(0.5) {
                let b = &forms[rng.gen_range(0..forms.len())];
                a.mul(b)
            } else {
                a.clone()
            };
            let coef = if rng.gen_bool(0.7) { Poly::one(nb) } else { random_linear(rng, nb) };
            gens.push(g.mul(&coef.extend(n)));
        }
    }
    Cone::new(c.e1.clone(), gens)
}
