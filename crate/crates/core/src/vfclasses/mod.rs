//! Fulton's canonical class and virtual fundamental classes of subschemes of projective space.

pub mod fixtures;

use serde::{Deserialize, Serialize};

use crate::chowcalc::{cap, parse_rat, segre_class, ChernPoly, ChowClass};
use crate::error::{Error, Result};
use crate::linecone::{normal_cone, Cone, LinearSpace};
use crate::symkernel::{dimension_degree, Ideal, Mono, Poly, PolyRing, PresentedModule, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    Projective,
    Affine,
}

/// `X ⊂ M`, with `M` either `Pⁿ` or `Aⁿ`; affine inputs are replaced by their projective closure.
#[derive(Clone, Debug)]
pub struct EmbeddedScheme {
    pub ambient: Ambient,
    /// Homogeneous coordinates of the projective ambient.
    pub ring: Ring,
    pub ideal: Ideal,
    /// Homogeneous generators used for normal cones.
    pub generators: Vec<Poly>,
    /// `c(T_M)` restricted to `X`; `1` for affine ambients.
    pub tangent_chern: ChernPoly,
}

fn homogenize(p: &Poly, nvars: usize) -> Poly {
    let d = p.total_degree().unwrap_or(0);
    Poly::from_terms(
        nvars,
        p.terms().iter().map(|(m, c)| {
            let mut e: Vec<u16> = m.0.to_vec();
            e.push((d - m.degree()) as u16);
            (Mono::from_slice(&e), c.clone())
        }),
    )
}

impl EmbeddedScheme {
    pub fn projective(ring: Ring, gens: Vec<Poly>) -> Result<Self> {
        if ring.nvars() == 0 {
            return Err(Error::invalid("projective space needs at least one coordinate"));
        }
        let w = ring.base_weights();
        for g in &gens {
            if !g.is_zero() && g.homogeneous_degree(&w).is_none() {
                return Err(Error::invalid(format!("`{}` is not homogeneous", ring.format(g))));
            }
        }
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let n = ring.nvars() - 1;
        Ok(EmbeddedScheme {
            ambient: Ambient::Projective,
            ideal: Ideal::new(ring.clone(), gens.clone()),
            ring,
            generators: gens,
            tangent_chern: ChernPoly::tangent_projective(n, n),
        })
    }

    /// Projective closure of an affine scheme, from a homogenized graded Gröbner basis.
    pub fn affine(ring: Ring, gens: Vec<Poly>) -> Result<Self> {
        let affine = Ideal::new(ring.clone(), gens);
        let names: Vec<String> = ring.names().map(String::from).collect();
        let mut all = names.clone();
        all.push(ring.fresh_name("w"));
        let proj = PolyRing::base(&all)?;
        let nv = proj.nvars();
        let h: Vec<Poly> = affine.gb().polys.iter().map(|g| homogenize(g, nv)).collect();
        let n = nv - 1;
        Ok(EmbeddedScheme {
            ambient: Ambient::Affine,
            ideal: Ideal::new(proj.clone(), h.clone()),
            ring: proj,
            generators: h,
            tangent_chern: ChernPoly::one(n),
        })
    }

    pub fn parse<S: AsRef<str>>(ambient: Ambient, vars: &[S], gens: &[S]) -> Result<Self> {
        let ring = PolyRing::base(vars)?;
        let polys = gens.iter().map(|g| ring.parse(g.as_ref())).collect::<Result<Vec<_>>>()?;
        match ambient {
            Ambient::Projective => EmbeddedScheme::projective(ring, polys),
            Ambient::Affine => EmbeddedScheme::affine(ring, polys),
        }
    }

    /// Dimension of the projective ambient.
    pub fn n(&self) -> usize {
        self.ring.nvars() - 1
    }

    /// Projective dimension of `X`, `-1` if empty.
    pub fn dim(&self) -> i64 {
        dimension_degree(&self.ideal).dim - 1
    }

    /// Parses a polynomial written in the input variables; affine ones are homogenized.
    fn section(&self, s: &str) -> Result<Poly> {
        match self.ambient {
            Ambient::Projective => self.ring.parse(s),
            Ambient::Affine => {
                let names: Vec<&str> = self.ring.names().take(self.n()).collect();
                let aff = PolyRing::base(&names)?;
                Ok(homogenize(&aff.parse(s)?, self.ring.nvars()))
            }
        }
    }
}

/// Data of a global normal space `[F₀ → F₁]` on `X`.
#[derive(Clone, Debug)]
pub enum NormalSpaceData {
    /// `X` smooth of the expected dimension: `F₀ = T_X`, `F₁ = 0`.
    SmoothIdentity { tangent_chern: Option<ChernPoly> },
    /// `X = Z(s)` for `s = (sᵢ)` a section of `⊕ 𝒪(dᵢ)`: `F₀ = T_M|_X`, `F₁ = E|_X`.
    SectionOfBundle { twists: Vec<u32>, sections: Vec<Poly> },
    /// A cone in `F₁ = ⊕ 𝒪(dᵢ)|_X`, given by generators in base plus fiber coordinates.
    ExplicitCone {
        f1_twists: Vec<u32>,
        f0_rank: usize,
        f0_chern: Option<ChernPoly>,
        cone: Vec<Poly>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct VfcResult {
    pub vfc: ChowClass,
    /// Virtual dimension `rk F₀ - rk F₁`.
    pub rank: i64,
    pub fulton: ChowClass,
    /// Dimension of the cone in `F₁`, `-1` for empty `X`.
    pub cone_dimension: i64,
}

/// `c(T_M) ∩ s(X, M)` pushed to `A_*(Pⁿ)`.
pub fn fulton_class(x: &EmbeddedScheme, seed: u64) -> Result<ChowClass> {
    let n = x.n();
    let s = if x.generators.is_empty() {
        ChowClass::linear(n, n, 1)
    } else {
        segre_class(&normal_cone(&x.ideal, &x.generators, None)?, seed)?
    };
    cap(&x.tangent_chern, &s)
}

fn f1_space(x: &EmbeddedScheme, twists: &[u32]) -> Result<LinearSpace> {
    let names = (0..twists.len()).map(|i| format!("Y{i}")).collect::<Vec<_>>();
    let names = names
        .into_iter()
        .map(|mut c| {
            while x.ring.index_of(&c).is_some() {
                c = format!("_{c}");
            }
            c
        })
        .collect();
    LinearSpace::from_module(PresentedModule::free(x.ideal.clone(), twists.len()), Some(names), Some(twists.to_vec()))
}

/// Returns the ideal generated by the sections.
fn check_sections(x: &EmbeddedScheme, twists: &[u32], sections: &[Poly]) -> Result<Ideal> {
    if twists.len() != sections.len() {
        return Err(Error::invalid("one section per summand is required"));
    }
    let w = x.ring.base_weights();
    for (s, &d) in sections.iter().zip(twists) {
        if s.nvars() != x.ring.nvars() {
            return Err(Error::RingMismatch("section outside the ambient ring".into()));
        }
        if !s.is_zero() && s.homogeneous_degree(&w) != Some(u64::from(d)) {
            return Err(Error::invalid(format!("section `{}` is not of degree {d}", x.ring.format(s))));
        }
    }
    let own = Ideal::new(x.ring.clone(), sections.to_vec());
    if own.equals(&x.ideal) {
        return Ok(own);
    }
    // agreement up to saturation by the irrelevant ideal is enough
    let m = Ideal::new(x.ring.clone(), (0..x.ring.nvars()).map(|i| Poly::var(x.ring.nvars(), i)).collect());
    if !own.saturate(&m)?.equals(&x.ideal.saturate(&m)?) {
        return Err(Error::invalid("the sections do not cut out X"));
    }
    Ok(own)
}

/// Rank of `F₀`.
fn f0_rank(x: &EmbeddedScheme, data: &NormalSpaceData) -> Result<usize> {
    Ok(match data {
        NormalSpaceData::SmoothIdentity { .. } => x.dim().max(0) as usize,
        NormalSpaceData::SectionOfBundle { .. } => x.n(),
        NormalSpaceData::ExplicitCone { f0_rank, .. } => *f0_rank,
    })
}

fn f1_twists(data: &NormalSpaceData) -> Vec<u32> {
    match data {
        NormalSpaceData::SmoothIdentity { .. } => vec![],
        NormalSpaceData::SectionOfBundle { twists, .. } => twists.clone(),
        NormalSpaceData::ExplicitCone { f1_twists, .. } => f1_twists.clone(),
    }
}

/// The cone in `F₁` determined by the normal space; checks that it has dimension `rk F₀`.
pub fn global_normal_cone(x: &EmbeddedScheme, data: &NormalSpaceData) -> Result<(Cone, i64)> {
    let twists = f1_twists(data);
    let space = f1_space(x, &twists)?;
    let cone = match data {
        NormalSpaceData::SmoothIdentity { .. } => Cone::whole(&space),
        NormalSpaceData::SectionOfBundle { twists, sections } => {
            let own = check_sections(x, twists, sections)?;
            if sections.iter().all(Poly::is_zero) {
                Cone::zero_section(&space)
            } else {
                let nc = normal_cone(&own, sections, None)?;
                // same variable order; only the twists of zero sections may differ
                Cone::new(space, nc.ideal.gens().to_vec())?
            }
        }
        NormalSpaceData::ExplicitCone { cone, .. } => {
            let nv = space.ring().nvars();
            if cone.iter().any(|g| g.nvars() != nv) {
                return Err(Error::RingMismatch("cone generator outside the ring of F1".into()));
            }
            Cone::new(space, cone.clone())?
        }
    };
    let dim = if x.dim() < 0 { -1 } else { cone.dimension() - 1 };
    let r0 = f0_rank(x, data)? as i64;
    if dim >= 0 && dim != r0 {
        return Err(Error::assertion(format!(
            "cone of dimension {dim} in F1, expected rk F0 = {r0}"
        )));
    }
    Ok((cone, dim))
}

fn f0_chern(x: &EmbeddedScheme, data: &NormalSpaceData) -> Result<ChernPoly> {
    match data {
        NormalSpaceData::SmoothIdentity { tangent_chern: Some(c) } => Ok(c.clone()),
        NormalSpaceData::SmoothIdentity { tangent_chern: None } => {
            if x.generators.is_empty() && x.ambient == Ambient::Projective {
                Ok(x.tangent_chern.clone())
            } else {
                Err(Error::NotApplicable(
                    "tangent Chern class of X is needed unless X is the whole projective space".into(),
                ))
            }
        }
        NormalSpaceData::SectionOfBundle { .. } => Ok(x.tangent_chern.clone()),
        NormalSpaceData::ExplicitCone { f0_chern: Some(c), .. } => Ok(c.clone()),
        NormalSpaceData::ExplicitCone { f0_chern: None, .. } => {
            Err(Error::NotApplicable("closed formula needs the Chern class of F0".into()))
        }
    }
}

/// `[X]^vir = {c(F₁) ∩ s(C)}_d` for the cone `C ⊂ F₁`, with `d = rk F₀ - rk F₁`.
pub fn vfc_direct(x: &EmbeddedScheme, data: &NormalSpaceData, seed: u64) -> Result<VfcResult> {
    let (cone, cone_dimension) = global_normal_cone(x, data)?;
    let twists: Vec<i64> = f1_twists(data).into_iter().map(i64::from).collect();
    let rank = f0_rank(x, data)? as i64 - twists.len() as i64;
    let s = segre_class(&cone, seed)?;
    let vfc = cap(&ChernPoly::total(x.n(), &twists), &s)?.part(rank);
    Ok(VfcResult {
        vfc,
        rank,
        fulton: fulton_class(x, seed)?,
        cone_dimension,
    })
}

/// `[X]^vir = {c(F₀ - F₁)⁻¹ ∩ c_F(X)}_d` in terms of Fulton's class.
pub fn vfc_closed_formula(x: &EmbeddedScheme, data: &NormalSpaceData, seed: u64) -> Result<VfcResult> {
    let (_, cone_dimension) = global_normal_cone(x, data)?;
    let twists: Vec<i64> = f1_twists(data).into_iter().map(i64::from).collect();
    let rank = f0_rank(x, data)? as i64 - twists.len() as i64;
    let n = x.n();
    let t_vir_inv = f0_chern(x, data)?.inverse()?.mul(&ChernPoly::total(n, &twists));
    let fulton = fulton_class(x, seed)?;
    let vfc = cap(&t_vir_inv, &fulton)?.part(rank);
    Ok(VfcResult {
        vfc,
        rank,
        fulton,
        cone_dimension,
    })
}

/// Serialized scheme: `{"ambient": "projective", "vars": [...], "ideal": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SchemeSpec {
    pub ambient: Ambient,
    pub vars: Vec<String>,
    pub ideal: Vec<String>,
}

impl SchemeSpec {
    pub fn build(&self) -> Result<EmbeddedScheme> {
        EmbeddedScheme::parse(self.ambient, &self.vars, &self.ideal)
    }
}

fn parse_chern(n: usize, c: &Option<Vec<String>>) -> Result<Option<ChernPoly>> {
    c.as_ref()
        .map(|v| Ok(ChernPoly::new(n, v.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?)))
        .transpose()
}

/// Serialized normal space data, tagged by `kind`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum NormalSpaceSpec {
    SmoothIdentity {
        #[serde(default)]
        tangent_chern: Option<Vec<String>>,
    },
    SectionOfBundle {
        twists: Vec<u32>,
        sections: Vec<String>,
    },
    ExplicitCone {
        f1_twists: Vec<u32>,
        f0_rank: usize,
        #[serde(default)]
        f0_chern: Option<Vec<String>>,
        /// Fiber coordinates are `Y0, Y1, ...`.
        cone: Vec<String>,
    },
}

impl NormalSpaceSpec {
    pub fn build(&self, x: &EmbeddedScheme) -> Result<NormalSpaceData> {
        let n = x.n();
        Ok(match self {
            NormalSpaceSpec::SmoothIdentity { tangent_chern } => NormalSpaceData::SmoothIdentity {
                tangent_chern: parse_chern(n, tangent_chern)?,
            },
            NormalSpaceSpec::SectionOfBundle { twists, sections } => NormalSpaceData::SectionOfBundle {
                twists: twists.clone(),
                sections: sections.iter().map(|s| x.section(s)).collect::<Result<_>>()?,
            },
            NormalSpaceSpec::ExplicitCone {
                f1_twists,
                f0_rank,
                f0_chern,
                cone,
            } => {
                let space = f1_space(x, f1_twists)?;
                NormalSpaceData::ExplicitCone {
                    f1_twists: f1_twists.clone(),
                    f0_rank: *f0_rank,
                    f0_chern: parse_chern(n, f0_chern)?,
                    cone: cone.iter().map(|g| space.ring().parse(g)).collect::<Result<_>>()?,
                }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(gens: &[&str]) -> EmbeddedScheme {
        EmbeddedScheme::parse(Ambient::Projective, &["x0", "x1", "x2"], gens).unwrap()
    }

    #[test]
    fn affine_closure() {
        let x = EmbeddedScheme::parse(Ambient::Affine, &["x", "y"], &["y - x^2"]).unwrap();
        assert_eq!(x.n(), 2);
        assert_eq!(x.ring.format(&x.generators[0]), "x^2 - y*w");
        assert_eq!(x.dim(), 1);
    }

    #[test]
    fn fulton_of_the_plane_and_a_conic() {
        assert_eq!(fulton_class(&p2(&[]), 1).unwrap(), ChowClass::from_ints(2, &[3, 3, 1]));
        assert_eq!(fulton_class(&p2(&["x0*x2 - x1^2"]), 1).unwrap(), ChowClass::from_ints(2, &[2, 2]));
    }

    #[test]
    fn double_line() {
        let x = p2(&["x0^2"]);
        let data = NormalSpaceData::SectionOfBundle {
            twists: vec![2],
            sections: vec![x.generators[0].clone()],
        };
        let d = vfc_direct(&x, &data, 1).unwrap();
        assert_eq!(d.vfc, ChowClass::linear(2, 1, 2));
        assert_eq!(d.cone_dimension, 2);
        assert_eq!(vfc_closed_formula(&x, &data, 1).unwrap().vfc, d.vfc);
    }

    #[test]
    fn sections_agree_up_to_saturation() {
        let x = p2(&["x0"]);
        let r = &x.ring;
        let secs: Vec<Poly> = ["x0*x1", "x0*x2", "x0^2"].iter().map(|s| r.parse(s).unwrap()).collect();
        let data = NormalSpaceData::SectionOfBundle { twists: vec![2; 3], sections: secs };
        assert_eq!(global_normal_cone(&x, &data).unwrap().1, 2);
        let data = NormalSpaceData::SectionOfBundle {
            twists: vec![1],
            sections: vec![r.parse("x1").unwrap()],
        };
        assert!(matches!(global_normal_cone(&x, &data), Err(Error::Invalid(_))));
    }

    #[test]
    fn smooth_subscheme_needs_its_tangent_class() {
        let x = p2(&["x0"]);
        let data = NormalSpaceData::SmoothIdentity { tangent_chern: None };
        assert!(matches!(vfc_closed_formula(&x, &data, 1), Err(Error::NotApplicable(_))));
        let data = NormalSpaceData::SmoothIdentity {
            tangent_chern: Some(ChernPoly::from_ints(2, &[1, 2])),
        };
        let r = vfc_closed_formula(&x, &data, 1).unwrap();
        assert_eq!(r.vfc, ChowClass::linear(2, 1, 1));
        assert_eq!(vfc_direct(&x, &data, 1).unwrap().vfc, r.vfc);
    }

    #[test]
    fn fixture_values() {
        use super::fixtures::{fixture, two_conics};
        let run = |x: &EmbeddedScheme, d: &NormalSpaceData| {
            let a = vfc_direct(x, d, 1).unwrap();
            let b = vfc_closed_formula(x, d, 1).unwrap();
            assert_eq!(a.vfc, b.vfc);
            (a, b)
        };
        for name in fixtures::NAMES {
            let (x, d) = fixture(name).unwrap().build().unwrap();
            run(&x, &d);
        }
        let (x, d) = two_conics().unwrap();
        let (a, _) = run(&x, &d);
        assert_eq!(a.vfc, ChowClass::linear(2, 0, 4));
    }
}
