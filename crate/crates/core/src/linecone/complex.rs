//! Two-term complexes of linear spaces, commutative squares between them, and the
//! exactness/cohomology diagnostics of the associated sheaf complex.

use super::space::{LinSpaceHom, LinearSpace};
use crate::error::{Error, Result};
use crate::symkernel::{kernel_vectors, map_diagnostics, ModuleMap, Poly, PresentedModule, Vector};

/// `E₀ →D E₁`, dual to `ℰ⁻¹ →d ℰ⁰`.
#[derive(Clone, Debug)]
pub struct TwoTerm {
    pub e0: LinearSpace,
    pub e1: LinearSpace,
    pub d: LinSpaceHom,
}

impl TwoTerm {
    pub fn new(d: LinSpaceHom) -> Self {
        TwoTerm {
            e0: d.source.clone(),
            e1: d.target.clone(),
            d,
        }
    }

    /// `ℰ⁰ / d(ℰ⁻¹)`.
    pub fn h0(&self) -> Result<PresentedModule> {
        self.e0.sheaf.quotient(self.d.matrix.clone())
    }

    /// Generators of `ker d ⊂ ℰ⁻¹`.
    pub fn hm1(&self) -> Result<Vec<Vector>> {
        Ok(map_diagnostics(&self.d.sheaf_map())?.kernel)
    }
}

/// A morphism `Φ• : F• → E•` of two-term complexes.
#[derive(Clone, Debug)]
pub struct ComplexSquare {
    pub source: TwoTerm,
    pub target: TwoTerm,
    pub phi0: LinSpaceHom,
    pub phi1: LinSpaceHom,
}

impl ComplexSquare {
    /// Checks that `Φ₁ ∘ D′ = D ∘ Φ₀`.
    pub fn new(source: TwoTerm, target: TwoTerm, phi0: LinSpaceHom, phi1: LinSpaceHom) -> Result<Self> {
        let sq = ComplexSquare::new_unchecked(source, target, phi0, phi1);
        let a = sq.source.d.then(&sq.phi1)?;
        let b = sq.phi0.then(&sq.target.d)?;
        if !a.equals(&b) {
            return Err(Error::invalid("square does not commute"));
        }
        Ok(sq)
    }

    pub fn new_unchecked(source: TwoTerm, target: TwoTerm, phi0: LinSpaceHom, phi1: LinSpaceHom) -> Self {
        ComplexSquare {
            source,
            target,
            phi0,
            phi1,
        }
    }

    pub fn identity(c: &TwoTerm) -> Self {
        ComplexSquare::new_unchecked(
            c.clone(),
            c.clone(),
            LinSpaceHom::identity(&c.e0),
            LinSpaceHom::identity(&c.e1),
        )
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &ComplexSquare) -> Result<ComplexSquare> {
        Ok(ComplexSquare::new_unchecked(
            self.source.clone(),
            after.target.clone(),
            self.phi0.then(&after.phi0)?,
            self.phi1.then(&after.phi1)?,
        ))
    }

    /// `Ψ₀ = Φ₀ + K∘D′`, `Ψ₁ = Φ₁ + D∘K` for `K : F₁ → E₀`.
    pub fn homotopic(&self, k: &LinSpaceHom) -> Result<ComplexSquare> {
        let phi0 = self.phi0.add(&self.source.d.then(k)?)?;
        let phi1 = self.phi1.add(&k.then(&self.target.d)?)?;
        Ok(ComplexSquare::new_unchecked(self.source.clone(), self.target.clone(), phi0, phi1))
    }
}

/// Flags of [`complex_diagnostics`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ComplexDiagnostics {
    pub h0_iso: bool,
    pub h0_inj: bool,
    pub h0_surj: bool,
    pub hm1_inj: bool,
    pub hm1_surj: bool,
    /// Exactness of `0 → ℰ⁻¹ → ℰ⁰⊕ℱ⁻¹ → ℱ⁰ → 0` at `ℱ⁰`, `ℰ⁰⊕ℱ⁻¹`, `ℰ⁻¹`.
    pub exact_f0: bool,
    pub exact_mid: bool,
    pub exact_em1: bool,
}

impl ComplexDiagnostics {
    pub fn is_quasi_iso(&self) -> bool {
        self.h0_iso && self.hm1_inj && self.hm1_surj
    }

    /// Names of the failed going-down conditions, empty when applicable (the bundle
    /// condition on `F₀` is checked separately).
    pub fn going_down_failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.h0_inj {
            out.push("H0 not injective");
        }
        if !self.h0_surj {
            out.push("H0 not surjective");
        }
        if !self.hm1_surj {
            out.push("H-1 not surjective");
        }
        out
    }
}

/// Exactness flags of the associated sheaf complex and, computed separately, the cohomology
/// flags of `φ•`; the two are required to agree.
pub fn complex_diagnostics(sq: &ComplexSquare) -> Result<ComplexDiagnostics> {
    let e = &sq.target;
    let f = &sq.source;
    let nb = e.e0.nbase();
    let (re0, rem1, rfm1) = (e.e0.rank(), e.e1.rank(), f.e1.rank());

    // α = (d, φ⁻¹) : ℰ⁻¹ → ℰ⁰ ⊕ ℱ⁻¹
    let mid = e.e0.sheaf.direct_sum(&f.e1.sheaf)?;
    let alpha_images: Vec<Vector> = (0..rem1)
        .map(|k| {
            let mut v = e.d.matrix[k].clone();
            v.extend(sq.phi1.matrix[k].iter().cloned());
            v
        })
        .collect();
    let alpha = ModuleMap::new(e.e1.sheaf.clone(), mid.clone(), alpha_images.clone())?;
    // β = (φ⁰, -d′) : ℰ⁰ ⊕ ℱ⁻¹ → ℱ⁰
    let mut beta_images: Vec<Vector> = sq.phi0.matrix.clone();
    beta_images.extend(f.d.matrix.iter().map(|r| r.iter().map(Poly::neg).collect::<Vector>()));
    let beta = ModuleMap::new(mid.clone(), f.e0.sheaf.clone(), beta_images)?;
    debug_assert_eq!(beta.images.len(), re0 + rfm1);

    let da = map_diagnostics(&alpha)?;
    let db = map_diagnostics(&beta)?;
    let exact_em1 = da.injective;
    let exact_f0 = db.surjective;
    let exact_mid = mid.span_contains(&alpha_images, &db.kernel)?;

    // H⁰(φ) : coker d → coker d′
    let h0 = ModuleMap::new(e.h0()?, f.h0()?, sq.phi0.matrix.clone())?;
    let dh0 = map_diagnostics(&h0)?;

    // H⁻¹(φ) : ker d → ker d′, with ker d presented through its generators
    let ker_d = e.hm1()?;
    let images: Vec<Vector> = ker_d.iter().map(|v| sq.phi1.sheaf_map().apply(v)).collect();
    let hm1_inj = if ker_d.is_empty() {
        true
    } else {
        let syz = kernel_vectors(
            nb,
            rfm1,
            &images,
            &f.e1.sheaf.relations,
            &f.e1.sheaf.ideal.gb().polys,
        )?;
        syz.iter().all(|c| {
            let v = crate::symkernel::module::mat_vec(&ker_d, c, rem1, nb);
            e.e1.sheaf.is_zero_element(&v)
        })
    };
    let ker_dp = f.hm1()?;
    let hm1_surj = f.e1.sheaf.span_contains(&images, &ker_dp)?;

    let out = ComplexDiagnostics {
        h0_iso: dh0.injective && dh0.surjective,
        h0_inj: dh0.injective,
        h0_surj: dh0.surjective,
        hm1_inj,
        hm1_surj,
        exact_f0,
        exact_mid,
        exact_em1,
    };
    if out.exact_f0 != out.h0_surj || out.exact_mid != (out.h0_inj && out.hm1_surj) || out.exact_em1 != out.hm1_inj {
        return Err(Error::assertion(format!(
            "exactness and cohomology flags disagree: {out:?}"
        )));
    }
    Ok(out)
}

pub fn is_quasi_iso(sq: &ComplexSquare) -> Result<bool> {
    Ok(complex_diagnostics(sq)?.is_quasi_iso())
}

/// A roof `E• →θ G• ←ψ F•` with `θ` a quasi-isomorphism.
#[derive(Clone, Debug)]
pub struct DerivedMorphism {
    pub intermediate: TwoTerm,
    pub theta: ComplexSquare,
    pub psi: ComplexSquare,
}

impl DerivedMorphism {
    pub fn new(theta: ComplexSquare, psi: ComplexSquare) -> Result<Self> {
        if !is_quasi_iso(&theta)? {
            return Err(Error::NotApplicable("theta is not a quasi-isomorphism".into()));
        }
        if theta.target.e0.ring() != psi.target.e0.ring() || theta.target.e1.ring() != psi.target.e1.ring() {
            return Err(Error::RingMismatch("theta and psi have different targets".into()));
        }
        Ok(DerivedMorphism {
            intermediate: theta.target.clone(),
            theta,
            psi,
        })
    }
}
