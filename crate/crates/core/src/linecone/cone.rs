//! Cones in linear spaces, normal cones and E-cone actions.

use super::space::{substitution, LinSpaceHom, LinearSpace, Stack};
use crate::error::{Error, Result};
use crate::symkernel::{dimension_degree, kernel_vectors, Ideal, Poly, PresentedModule, Var};

/// A cone in a linear space: an ideal of `space.ring()` homogeneous in the coordinates,
/// containing the linear relations and the base ideal.
#[derive(Clone, Debug)]
pub struct Cone {
    pub space: LinearSpace,
    pub ideal: Ideal,
    /// Generators `fᵢ` of the ideal whose normal cone this is, one per coordinate.
    pub generators: Option<Vec<Poly>>,
    pub saturated: bool,
}

impl Cone {
    pub fn new(space: LinearSpace, gens: Vec<Poly>) -> Result<Cone> {
        let w = space.ring().cone_weights();
        for g in &gens {
            if g.nvars() != space.ring().nvars() {
                return Err(Error::RingMismatch("cone generator outside the linear space's ring".into()));
            }
            if !g.is_homogeneous(&w) {
                return Err(Error::invalid(format!(
                    "cone generator `{}` is not homogeneous in the coordinates",
                    space.ring().format(g)
                )));
            }
        }
        let mut all = space.relation_polys();
        all.extend(gens);
        let ideal = Ideal::new(space.ring().clone(), all);
        Ok(Cone {
            space,
            ideal,
            generators: None,
            saturated: false,
        })
    }

    /// The whole linear space.
    pub fn whole(space: &LinearSpace) -> Cone {
        Cone::new(space.clone(), vec![]).unwrap()
    }

    /// The zero section.
    pub fn zero_section(space: &LinearSpace) -> Cone {
        let gens = (0..space.rank()).map(|i| space.coord(i)).collect();
        Cone::new(space.clone(), gens).unwrap()
    }

    pub fn ring(&self) -> &crate::symkernel::Ring {
        self.space.ring()
    }

    pub fn equals(&self, other: &Cone) -> bool {
        self.ideal.equals(&other.ideal)
    }

    /// Saturation with respect to the irrelevant ideal of the coordinates.
    pub fn saturate(&self) -> Result<Cone> {
        if self.saturated {
            return Ok(self.clone());
        }
        let nb = self.space.nbase();
        let mask: Vec<bool> = (0..self.ring().nvars()).map(|i| i >= nb).collect();
        let irr = Ideal::of_vars(self.ring().clone(), &mask);
        let ideal = self.ideal.saturate(&irr)?;
        Ok(Cone {
            space: self.space.clone(),
            ideal,
            generators: self.generators.clone(),
            saturated: true,
        })
    }

    /// Krull dimension of the cone (as an affine scheme over the base ring).
    pub fn dimension(&self) -> i64 {
        dimension_degree(&self.ideal).dim
    }

    /// Canonical generator strings of the cone ideal.
    pub fn canonical_strings(&self) -> Vec<String> {
        self.ideal.canonical_strings()
    }
}

/// Syzygies of `f` over the ambient polynomial ring.
pub fn syzygies(nvars: usize, f: &[Poly]) -> Result<Vec<Vec<Poly>>> {
    let images: Vec<Vec<Poly>> = f.iter().map(|g| vec![g.clone()]).collect();
    kernel_vectors(nvars, 1, &images, &[], &[])
}

/// The conormal module `I/I²` presented on `f`.
pub fn conormal_module(ideal: &Ideal, f: &[Poly]) -> Result<PresentedModule> {
    let rels = syzygies(ideal.ring().nvars(), f)?;
    let base = Ideal::new(ideal.ring().clone(), f.to_vec());
    PresentedModule::new(base, f.len(), rels)
}

/// Normal cone of `V(f)` in the ambient polynomial ring of `ideal`, inside `N = L(I/I²)`.
///
/// Coordinates are named by `names` when given; twists are the degrees of the `fᵢ` when
/// these are homogeneous.
pub fn normal_cone(ideal: &Ideal, f: &[Poly], names: Option<Vec<String>>) -> Result<Cone> {
    if f.is_empty() {
        return Err(Error::invalid("normal cone needs at least one generator"));
    }
    let f: Vec<Poly> = f.to_vec();
    if !ideal.gens().is_empty() && !Ideal::new(ideal.ring().clone(), f.clone()).equals(ideal) {
        return Err(Error::invalid("generators do not generate the ideal"));
    }
    let base = ideal.ring().clone();
    let w = base.base_weights();
    let twists: Vec<u32> = f.iter().map(|g| g.homogeneous_degree(&w).unwrap_or(0) as u32).collect();
    let sheaf = conormal_module(ideal, &f)?;
    let space = LinearSpace::from_module(sheaf, names, Some(twists))?;
    let n = base.nvars();
    let k = f.len();
    // Rees kernel: Yᵢ - t fᵢ, eliminate t
    let ring = space.ring().clone();
    let big = ring.extended(vec![Var::aux(ring.fresh_name("t"))])?;
    let nt = n + k + 1;
    let t = Poly::var(nt, n + k);
    let gens: Vec<Poly> = (0..k)
        .map(|i| Poly::var(nt, n + i).sub(&t.mul(&f[i].extend(nt))))
        .collect();
    let mask: Vec<bool> = (0..nt).map(|i| i == n + k).collect();
    let rees = Ideal::new(big, gens).eliminate(&mask)?;
    let mut all: Vec<Poly> = rees.gens().iter().map(|g| g.truncate(n + k)).collect();
    all.extend(f.iter().map(|g| g.extend(n + k)));
    let raw = Cone {
        ideal: Ideal::new(ring, all),
        space,
        generators: Some(f),
        saturated: false,
    };
    let mut c = raw.saturate()?;
    c.ideal = c.ideal.reduced();
    Ok(c)
}

/// Translation action of a linear space on a cone through a homomorphism `actor → cone.space`.
#[derive(Clone, Debug)]
pub struct EConeAction {
    pub actor: LinearSpace,
    pub cone: Cone,
    pub hom: LinSpaceHom,
}

impl EConeAction {
    pub fn new(cone: Cone, hom: LinSpaceHom) -> Result<Self> {
        if hom.target.ring() != cone.ring() {
            return Err(Error::RingMismatch("action does not land in the cone's linear space".into()));
        }
        Ok(EConeAction {
            actor: hom.source.clone(),
            cone,
            hom,
        })
    }
}

/// The action of `T_M|_X` on a normal cone through the Jacobian of its generators.
pub fn tangent_action(cone: &Cone) -> Result<EConeAction> {
    let f = cone
        .generators
        .as_ref()
        .ok_or_else(|| Error::invalid("cone carries no generator record"))?;
    let base = cone.space.base_ideal().clone();
    let n = base.ring().nvars();
    let names: Vec<String> = base.ring().names().map(|x| format!("d{x}")).collect();
    let mut names_fresh = Vec::new();
    for nm in names {
        let mut c = nm;
        while cone.ring().index_of(&c).is_some() {
            c = format!("{c}_");
        }
        names_fresh.push(c);
    }
    let actor = LinearSpace::from_module(PresentedModule::free(base.clone(), n), Some(names_fresh), Some(vec![1; n]))?;
    let matrix = f
        .iter()
        .map(|fi| (0..n).map(|j| base.reduce(&fi.derivative(j))).collect())
        .collect();
    let hom = LinSpaceHom::new(actor, cone.space.clone(), matrix)?;
    EConeAction::new(cone.clone(), hom)
}

/// Whether the cone ideal is stable under `Y ↦ Y + hom(X′)`.
pub fn is_econe(action: &EConeAction) -> Result<bool> {
    let stack = Stack::new(&[&action.cone.space, &action.actor])?;
    let mut images = action.hom.images_in(&stack, 1);
    for (i, img) in images.iter_mut().enumerate() {
        *img = img.add(&stack.coord(0, i));
    }
    let subst = substitution(&stack, images);
    let mut gens: Vec<Poly> = action.cone.ideal.gens().iter().map(|g| stack.embed(0, g)).collect();
    gens.extend(stack.relations(1, &action.actor));
    let big = Ideal::new(stack.ring.clone(), gens);
    let gb = big.gb().reducer();
    Ok(action.cone.ideal.gens().iter().all(|g| gb.contains(&g.substitute(&subst))))
}

/// The quotient `N → T₁` of a normal cone's linear space by the image of `T_M|_X`.
///
/// `T₁ = L(K)` for `K = ker(I/I² → Ω_M|_X)`; returns the generators of `K` as vectors in
/// `I/I²` together with the epimorphism.
pub fn t1_quotient(cone: &Cone) -> Result<(Vec<Vec<Poly>>, LinSpaceHom)> {
    let f = cone
        .generators
        .as_ref()
        .ok_or_else(|| Error::invalid("cone carries no generator record"))?;
    let base = cone.space.base_ideal().clone();
    let n = base.ring().nvars();
    let ideal: Vec<Poly> = base.gb().polys.clone();
    let jac: Vec<Vec<Poly>> = f
        .iter()
        .map(|fi| (0..n).map(|j| base.reduce(&fi.derivative(j))).collect())
        .collect();
    let kernel: Vec<Vec<Poly>> = kernel_vectors(n, n, &jac, &[], &ideal)?
        .into_iter()
        .filter(|v| !cone.space.sheaf.is_zero_element(v))
        .collect();
    let rels = kernel_vectors(n, f.len(), &kernel, &cone.space.sheaf.relations, &ideal)?;
    let sheaf = PresentedModule::new(base, kernel.len(), rels)?;
    let names = (0..kernel.len())
        .map(|i| {
            let mut c = format!("T{i}");
            while cone.ring().index_of(&c).is_some() {
                c = format!("_{c}");
            }
            c
        })
        .collect();
    let t1 = LinearSpace::from_module(sheaf, Some(names), None)?;
    let hom = LinSpaceHom::new(cone.space.clone(), t1, kernel.clone())?;
    Ok((kernel, hom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symkernel::PolyRing;

    fn fat_point() -> Cone {
        let r = PolyRing::base(&["X", "Y"]).unwrap();
        let i = Ideal::parse(r.clone(), &["X^2", "X*Y", "Y^2"]).unwrap();
        let f = i.gens().to_vec();
        normal_cone(&i, &f, Some(vec!["A".into(), "B".into(), "C".into()])).unwrap()
    }

    #[test]
    fn fat_point_normal_cone() {
        let c = fat_point();
        let want = Ideal::parse(
            c.ring().clone(),
            &["B^2 - A*C", "X*C - Y*B", "X*B - Y*A", "X^2", "X*Y", "Y^2"],
        )
        .unwrap();
        assert!(c.ideal.equals(&want));
        assert!(is_econe(&tangent_action(&c).unwrap()).unwrap());
    }

    #[test]
    fn fat_point_t1_does_not_descend() {
        let c = fat_point();
        let (kernel, q) = t1_quotient(&c).unwrap();
        let r = c.space.base_ring().clone();
        let (x, y) = (Poly::var(2, 0), Poly::var(2, 1));
        let z = Poly::zero(2);
        let mut mr3 = Vec::new();
        for g in [&x, &y] {
            for i in 0..3 {
                let mut v = vec![z.clone(); 3];
                v[i] = g.clone();
                mr3.push(v);
            }
        }
        let n = &c.space.sheaf;
        assert!(n.span_contains(&kernel, &mr3).unwrap() && n.span_contains(&mr3, &kernel).unwrap());
        assert_eq!(r.nvars(), 2);
        assert!(!crate::linecone::descend_check(&q, &c).unwrap().descends);
    }

    #[test]
    fn principal_nonzerodivisor() {
        let r = PolyRing::base(&["x", "y"]).unwrap();
        let i = Ideal::parse(r, &["x*y - 1"]).unwrap();
        let c = normal_cone(&i, i.gens(), None).unwrap();
        let want = Ideal::new(c.ring().clone(), vec![i.gens()[0].extend(3)]);
        assert!(c.ideal.equals(&want));
    }

    #[test]
    fn torsion_cone_is_not_invariant() {
        let r = PolyRing::base(&["T"]).unwrap();
        let z = Ideal::zero(r.clone());
        let p = |s: &str| r.parse(s).unwrap();
        let e1 = LinearSpace::free(z.clone(), 1, "U").unwrap();
        let e0 = LinearSpace::free(z, 1, "V").unwrap();
        let c = Cone::new(e1.clone(), vec![e1.ring().parse("T*U0").unwrap()]).unwrap();
        let d = LinSpaceHom::new(e0.clone(), e1.clone(), vec![vec![p("T")]]).unwrap();
        assert!(!is_econe(&EConeAction::new(c.clone(), d).unwrap()).unwrap());
        let zero = LinSpaceHom::zero(&e0, &e1);
        assert!(is_econe(&EConeAction::new(c, zero).unwrap()).unwrap());
    }
}
