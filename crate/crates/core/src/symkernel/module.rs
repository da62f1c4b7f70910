//! Finitely presented modules over `k[x]/I`, with vectors encoded by position variables `eᵢ`.

use std::sync::{Arc, OnceLock};

use super::groebner::{buchberger, GbConfig, GroebnerBasis};
use super::ideal::Ideal;
use super::mono::MonoOrder;
use super::poly::Poly;
use super::ring::Ring;
use crate::error::{Error, Result};

pub type Vector = Vec<Poly>;

/// Submodule of a free module `P^r` over the polynomial ring `P`, with a Gröbner basis.
///
/// A vector `v` is encoded as `Σ vᵢ eᵢ` in `P[e₁..e_r]`; S-pairs are only formed at a common position.
#[derive(Clone, Debug)]
pub struct SubmoduleGb {
    nvars: usize,
    rank: usize,
    gb: GroebnerBasis,
}

fn encode(v: &[Poly], nvars: usize, rank: usize) -> Poly {
    let n = nvars + rank;
    let mut acc = Poly::zero(n);
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&c.extend(n).mul(&Poly::var(n, nvars + i)));
        }
    }
    acc
}

/// Inverse of [`encode`] on polynomials linear in the `e` variables.
fn decode(p: &Poly, nvars: usize, rank: usize) -> Option<Vector> {
    let mut parts: Vec<Vec<_>> = vec![Vec::new(); rank];
    for (m, c) in p.terms() {
        let es: Vec<usize> = (0..rank).filter(|&i| m.0[nvars + i] > 0).collect();
        if es.len() != 1 || m.0[nvars + es[0]] != 1 {
            return None;
        }
        let mut e = m.0[..nvars].to_vec();
        e.truncate(nvars);
        parts[es[0]].push((super::mono::Mono::from_slice(&e), c.clone()));
    }
    Some(parts.into_iter().map(|t| Poly::from_terms(nvars, t)).collect())
}

impl SubmoduleGb {
    /// Basis of the submodule generated by `gens` plus `ideal · P^r`.
    pub fn new(nvars: usize, rank: usize, gens: &[Vector], ideal: &[Poly], order: MonoOrder) -> Result<Self> {
        let n = nvars + rank;
        let mut polys: Vec<Poly> = gens.iter().map(|v| encode(v, nvars, rank)).collect();
        for i in 0..rank {
            let ei = Poly::var(n, nvars + i);
            for g in ideal {
                polys.push(g.extend(n).mul(&ei));
            }
        }
        let cfg = GbConfig {
            module_vars: Some((nvars, n)),
            ..GbConfig::default()
        };
        let gb = buchberger(&polys, &order, n, &cfg)?;
        Ok(SubmoduleGb { nvars, rank, gb })
    }

    pub fn reduce(&self, v: &[Poly]) -> Vector {
        let r = self.gb.reduce(&encode(v, self.nvars, self.rank));
        decode(&r, self.nvars, self.rank).expect("reduction left the linear part")
    }

    pub fn contains(&self, v: &[Poly]) -> bool {
        self.gb.contains(&encode(v, self.nvars, self.rank))
    }

    /// Basis elements linear in `e` (the module part of the basis).
    pub fn vectors(&self) -> Vec<Vector> {
        self.gb.polys.iter().filter_map(|p| decode(p, self.nvars, self.rank)).collect()
    }
}

/// Kernel of `P^k → P^m / U`, `εⱼ ↦ images[j]`, where `U` is spanned by `rels` and `ideal · P^m`.
pub fn kernel_vectors(nvars: usize, m: usize, images: &[Vector], rels: &[Vector], ideal: &[Poly]) -> Result<Vec<Vector>> {
    let k = images.len();
    let rank = m + k;
    let mut gens: Vec<Vector> = Vec::new();
    for (j, img) in images.iter().enumerate() {
        let mut v = img.clone();
        v.resize(m, Poly::zero(nvars));
        v.extend((0..k).map(|i| if i == j { Poly::one(nvars) } else { Poly::zero(nvars) }));
        gens.push(v);
    }
    for r in rels {
        let mut v = r.clone();
        v.extend((0..k).map(|_| Poly::zero(nvars)));
        gens.push(v);
    }
    let n = nvars + rank;
    let mut polys: Vec<Poly> = gens.iter().map(|v| encode(v, nvars, rank)).collect();
    for i in 0..rank {
        let ei = Poly::var(n, nvars + i);
        if i < m {
            for g in ideal {
                polys.push(g.extend(n).mul(&ei));
            }
        }
    }
    let mask: Vec<bool> = (0..n).map(|i| i >= nvars && i < nvars + m).collect();
    let cfg = GbConfig {
        module_vars: Some((nvars, n)),
        ..GbConfig::default()
    };
    let gb = buchberger(&polys, &MonoOrder::elim(mask.clone()), n, &cfg)?;
    let mut out = Vec::new();
    for p in &gb.polys {
        if (0..n).any(|i| mask[i] && p.uses_var(i)) {
            continue;
        }
        if let Some(v) = decode(p, nvars, rank) {
            out.push(v[m..].to_vec());
        }
    }
    Ok(out)
}

/// `R^rank / ⟨relations⟩` over `R = k[x]/I`.
#[derive(Clone, Debug)]
pub struct PresentedModule {
    pub ideal: Ideal,
    pub rank: usize,
    pub relations: Vec<Vector>,
    gb: Arc<OnceLock<SubmoduleGb>>,
}

impl PresentedModule {
    pub fn new(ideal: Ideal, rank: usize, relations: Vec<Vector>) -> Result<Self> {
        let n = ideal.ring().nvars();
        for r in &relations {
            if r.len() != rank || r.iter().any(|p| p.nvars() != n) {
                return Err(Error::invalid("relation has the wrong shape"));
            }
        }
        let relations = relations.into_iter().filter(|r| r.iter().any(|p| !p.is_zero())).collect();
        Ok(PresentedModule {
            ideal,
            rank,
            relations,
            gb: Arc::new(OnceLock::new()),
        })
    }

    pub fn free(ideal: Ideal, rank: usize) -> Self {
        PresentedModule::new(ideal, rank, vec![]).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn nvars(&self) -> usize {
        self.ring().nvars()
    }

    pub fn zero_vector(&self) -> Vector {
        vec![Poly::zero(self.nvars()); self.rank]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = self.zero_vector();
        v[i] = Poly::one(self.nvars());
        v
    }

    pub fn gb(&self) -> &SubmoduleGb {
        self.gb.get_or_init(|| {
            SubmoduleGb::new(
                self.nvars(),
                self.rank,
                &self.relations,
                &self.ideal.gb().polys,
                MonoOrder::GrevLex,
            )
            .expect("module basis exceeded default resource limits")
        })
    }

    /// Whether `v` represents zero in the module.
    pub fn is_zero_element(&self, v: &[Poly]) -> bool {
        self.gb().contains(v)
    }

    pub fn reduce(&self, v: &[Poly]) -> Vector {
        self.gb().reduce(v)
    }

    pub fn is_zero(&self) -> bool {
        (0..self.rank).all(|i| self.is_zero_element(&self.basis_vector(i)))
    }

    /// Same module with extra relations.
    pub fn quotient(&self, extra: Vec<Vector>) -> Result<Self> {
        let mut rels = self.relations.clone();
        rels.extend(extra);
        PresentedModule::new(self.ideal.clone(), self.rank, rels)
    }

    pub fn direct_sum(&self, other: &PresentedModule) -> Result<Self> {
        if !self.ideal.equals(&other.ideal) {
            return Err(Error::RingMismatch("direct sum over different base rings".into()));
        }
        let n = self.nvars();
        let mut rels = Vec::new();
        for r in &self.relations {
            let mut v = r.clone();
            v.extend((0..other.rank).map(|_| Poly::zero(n)));
            rels.push(v);
        }
        for r in &other.relations {
            let mut v: Vector = (0..self.rank).map(|_| Poly::zero(n)).collect();
            v.extend(r.iter().cloned());
            rels.push(v);
        }
        PresentedModule::new(self.ideal.clone(), self.rank + other.rank, rels)
    }

    /// Whether every vector of `vs` lies in the submodule spanned by `gens` plus the relations.
    pub fn span_contains(&self, gens: &[Vector], vs: &[Vector]) -> Result<bool> {
        let mut all = self.relations.clone();
        all.extend(gens.iter().cloned());
        let gb = SubmoduleGb::new(self.nvars(), self.rank, &all, &self.ideal.gb().polys, MonoOrder::GrevLex)?;
        Ok(vs.iter().all(|v| gb.contains(v)))
    }
}

/// Module homomorphism given by images of the source generators.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: PresentedModule,
    pub target: PresentedModule,
    pub images: Vec<Vector>,
}

/// Result of [`map_diagnostics`].
#[derive(Clone, Debug)]
pub struct MapDiagnostics {
    pub injective: bool,
    pub surjective: bool,
    /// Kernel generators as vectors in the source's free cover.
    pub kernel: Vec<Vector>,
    pub cokernel: PresentedModule,
}

pub fn mat_vec(images: &[Vector], v: &[Poly], m: usize, nvars: usize) -> Vector {
    let mut out = vec![Poly::zero(nvars); m];
    for (c, img) in v.iter().zip(images) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(img) {
            *o = o.add(&c.mul(x));
        }
    }
    out
}

impl ModuleMap {
    pub fn new(source: PresentedModule, target: PresentedModule, images: Vec<Vector>) -> Result<Self> {
        if images.len() != source.rank || images.iter().any(|v| v.len() != target.rank) {
            return Err(Error::invalid("map images have the wrong shape"));
        }
        Ok(ModuleMap { source, target, images })
    }

    pub fn apply(&self, v: &[Poly]) -> Vector {
        mat_vec(&self.images, v, self.target.rank, self.source.nvars())
    }

    /// Whether source relations map to zero.
    pub fn is_well_defined(&self) -> bool {
        self.source.relations.iter().all(|r| self.target.is_zero_element(&self.apply(r)))
            && self.images.iter().all(|img| {
                self.source
                    .ideal
                    .gens()
                    .iter()
                    .all(|g| self.target.is_zero_element(&img.iter().map(|x| x.mul(g)).collect::<Vec<_>>()))
            })
    }

    pub fn compose(&self, after: &ModuleMap) -> Result<ModuleMap> {
        let images = self.images.iter().map(|v| after.apply(v)).collect();
        ModuleMap::new(self.source.clone(), after.target.clone(), images)
    }
}

pub fn map_diagnostics(f: &ModuleMap) -> Result<MapDiagnostics> {
    let nvars = f.source.nvars();
    let kernel = kernel_vectors(
        nvars,
        f.target.rank,
        &f.images,
        &f.target.relations,
        &f.target.ideal.gb().polys,
    )?;
    let injective = kernel.iter().all(|v| f.source.is_zero_element(v));
    let cokernel = f.target.quotient(f.images.clone())?;
    let surjective = cokernel.is_zero();
    Ok(MapDiagnostics {
        injective,
        surjective,
        kernel,
        cokernel,
    })
}
