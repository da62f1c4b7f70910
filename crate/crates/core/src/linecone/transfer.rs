//! Pullback (going up) and quotient pushforward (going down) of cones along squares.

use super::complex::{complex_diagnostics, ComplexSquare, DerivedMorphism};
use super::cone::Cone;
use super::space::{substitution, LinSpaceHom, Stack};
use crate::error::{Error, Result};
use crate::symkernel::{Ideal, Poly};

fn same_space(a: &super::space::LinearSpace, b: &super::space::LinearSpace) -> bool {
    a.ring() == b.ring() && a.sheaf.relations == b.sheaf.relations
}

/// `Φ⁻¹(C)` for a homomorphism `Φ : F → E` and a cone `C ⊂ E`.
pub fn pullback(phi: &LinSpaceHom, cone: &Cone) -> Result<Cone> {
    if !same_space(&phi.target, &cone.space) {
        return Err(Error::RingMismatch("cone does not live in the homomorphism's target".into()));
    }
    let stack = Stack::new(&[&phi.source])?;
    let subst = substitution(&stack, phi.images_in(&stack, 0));
    let gens: Vec<Poly> = cone
        .ideal
        .gens()
        .iter()
        .map(|g| stack.restrict(0, &g.substitute(&subst)))
        .collect();
    Cone::new(phi.source.clone(), gens)
}

/// Going up: the pullback `Φ•!(C) = Φ₁⁻¹(C)` of an `E₀`-cone in `E₁` to an `F₀`-cone in `F₁`.
pub fn going_up(square: &ComplexSquare, cone: &Cone) -> Result<Cone> {
    pullback(&square.phi1, cone)
}

/// Result of [`going_down_certified`].
#[derive(Clone, Debug)]
pub struct GoingDown {
    pub cone: Cone,
    /// Whether `q⁻¹(C̄) = E₀ ⊕ C` holds as an equality of ideals.
    pub certificate: bool,
}

/// Checks the going-down hypotheses and reports the failed ones.
pub fn going_down_applicable(square: &ComplexSquare) -> Result<()> {
    let diag = complex_diagnostics(square)?;
    let mut failed: Vec<&str> = diag.going_down_failures();
    if !square.source.e0.is_bundle() {
        failed.push("F0 not a vector bundle");
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Error::NotApplicable(format!("going down: {}", failed.join(", "))))
    }
}

/// Going down without the applicability test, returning the certificate flag.
pub fn going_down_certified(square: &ComplexSquare, cone: &Cone) -> Result<GoingDown> {
    let e0 = &square.target.e0;
    let e1 = &square.target.e1;
    let f1 = &square.source.e1;
    if !same_space(f1, &cone.space) {
        return Err(Error::RingMismatch("cone does not live in F1".into()));
    }
    // blocks: 0 = E₀ (X), 1 = F₁ (Y), 2 = E₁ (Z)
    let stack = Stack::new(&[e0, f1, e1])?;
    let q: Vec<Poly> = square
        .target
        .d
        .images_in(&stack, 0)
        .into_iter()
        .zip(square.phi1.images_in(&stack, 1))
        .map(|(a, b)| a.add(&b))
        .collect();
    let mut sum_gens: Vec<Poly> = cone.ideal.gens().iter().map(|g| stack.embed(1, g)).collect();
    sum_gens.extend(stack.relations(0, e0));
    let mut gens = sum_gens.clone();
    for (k, img) in q.iter().enumerate() {
        gens.push(stack.coord(2, k).sub(img));
    }
    let mask = stack.block_mask(&[0, 1]);
    let elim = Ideal::new(stack.ring.clone(), gens).eliminate(&mask)?;
    let down: Vec<Poly> = elim.gens().iter().map(|g| stack.restrict(2, g)).collect();
    let result = Cone::new(e1.clone(), down)?;

    // certificate: q⁻¹(C̄) = E₀ ⊕ C inside the E₀ ⊕ F₁ blocks
    let subst = substitution(&stack, q);
    let mut back: Vec<Poly> = result.ideal.gens().iter().map(|g| g.substitute(&subst)).collect();
    back.extend(stack.relations(0, e0));
    back.extend(stack.relations(1, f1));
    let lhs = Ideal::new(stack.ring.clone(), back);
    let rhs = Ideal::new(stack.ring.clone(), sum_gens);
    let certificate = lhs.equals(&rhs);
    Ok(GoingDown { cone: result, certificate })
}

/// Going down: the unique `E₀`-cone `C̄ ⊂ E₁` with `q⁻¹(C̄) = E₀ ⊕ C`, for `q = D∘pr₁ + Φ₁∘pr₂`.
pub fn going_down(square: &ComplexSquare, cone: &Cone) -> Result<Cone> {
    going_down_applicable(square)?;
    let out = going_down_certified(square, cone)?;
    if !out.certificate {
        return Err(Error::assertion("going down: q^-1 of the result differs from E0 + C"));
    }
    Ok(out.cone)
}

/// `(Θ•)!((Ψ•)_!(C))`.
pub fn going_down_derived(m: &DerivedMorphism, cone: &Cone) -> Result<Cone> {
    let down = going_down(&m.psi, cone)?;
    going_up(&m.theta, &down)
}

/// Result of [`descend_check`].
#[derive(Clone, Debug)]
pub struct Descent {
    pub descends: bool,
    pub candidate: Cone,
}

/// Whether a cone in `F` is the preimage of a cone in `Q` under an epimorphism `q : F → Q`.
pub fn descend_check(q: &LinSpaceHom, cone: &Cone) -> Result<Descent> {
    if !same_space(&q.source, &cone.space) {
        return Err(Error::RingMismatch("cone does not live in the source of q".into()));
    }
    if !q.is_epimorphism()? {
        return Err(Error::NotApplicable("q is not an epimorphism of linear spaces".into()));
    }
    let stack = Stack::new(&[&q.source, &q.target])?;
    let images = q.images_in(&stack, 0);
    let mut gens: Vec<Poly> = cone.ideal.gens().iter().map(|g| stack.embed(0, g)).collect();
    for (k, img) in images.iter().enumerate() {
        gens.push(stack.coord(1, k).sub(img));
    }
    let elim = Ideal::new(stack.ring.clone(), gens).eliminate(&stack.block_mask(&[0]))?;
    let cand_gens: Vec<Poly> = elim.gens().iter().map(|g| stack.restrict(1, g)).collect();
    let candidate = Cone::new(q.target.clone(), cand_gens)?;
    let back = pullback(q, &candidate)?;
    Ok(Descent {
        descends: back.equals(cone),
        candidate,
    })
}
