//! Linear spaces `L(ℱ) = Spec Sym ℱ` and their homomorphisms.

use crate::error::{Error, Result};
use crate::symkernel::{map_diagnostics, Ideal, ModuleMap, Poly, PolyRing, PresentedModule, Ring, Var, Vector};

/// `Spec Sym ℱ` over `B/I`: one cone coordinate per generator of `ℱ`.
#[derive(Clone, Debug)]
pub struct LinearSpace {
    pub sheaf: PresentedModule,
    pub coords: Vec<Var>,
    ring: Ring,
}

impl LinearSpace {
    /// Linear space of a presented module, with coordinates `stem0, stem1, ...` (or `names`).
    pub fn from_module(sheaf: PresentedModule, names: Option<Vec<String>>, twists: Option<Vec<u32>>) -> Result<Self> {
        let base = sheaf.ring().clone();
        let names = match names {
            Some(n) if n.len() == sheaf.rank => n,
            Some(_) => return Err(Error::invalid("coordinate names do not match the number of generators")),
            None => {
                let mut out = Vec::new();
                for i in 0..sheaf.rank {
                    let mut cand = format!("Y{i}");
                    while base.index_of(&cand).is_some() {
                        cand = format!("_{cand}");
                    }
                    out.push(cand);
                }
                out
            }
        };
        let twists = twists.unwrap_or_else(|| vec![0; sheaf.rank]);
        if twists.len() != sheaf.rank {
            return Err(Error::invalid("twists do not match the number of generators"));
        }
        let coords: Vec<Var> = names.into_iter().zip(twists).map(|(n, t)| Var::cone(n, 0, t)).collect();
        let ring = base.extended(coords.clone())?;
        Ok(LinearSpace { sheaf, coords, ring })
    }

    pub fn free(base_ideal: Ideal, rank: usize, stem: &str) -> Result<Self> {
        let names = (0..rank).map(|i| format!("{stem}{i}")).collect();
        LinearSpace::from_module(PresentedModule::free(base_ideal, rank), Some(names), None)
    }

    pub fn base_ring(&self) -> &Ring {
        self.sheaf.ring()
    }

    pub fn base_ideal(&self) -> &Ideal {
        &self.sheaf.ideal
    }

    pub fn nbase(&self) -> usize {
        self.base_ring().nvars()
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn twists(&self) -> Vec<u32> {
        self.coords.iter().map(|v| v.base_weight).collect()
    }

    pub fn is_bundle(&self) -> bool {
        self.sheaf.relations.is_empty()
    }

    /// Base variables followed by the coordinates.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coord(&self, i: usize) -> Poly {
        Poly::var(self.ring.nvars(), self.nbase() + i)
    }

    /// `Σ vᵢ Yᵢ` for a vector over the base.
    pub fn linear_form(&self, v: &[Poly]) -> Poly {
        let n = self.ring.nvars();
        v.iter()
            .enumerate()
            .fold(Poly::zero(n), |acc, (i, c)| acc.add(&c.extend(n).mul(&self.coord(i))))
    }

    /// Linear relations plus the base ideal, as polynomials in [`Self::ring`].
    pub fn relation_polys(&self) -> Vec<Poly> {
        let n = self.ring.nvars();
        let mut out: Vec<Poly> = self.base_ideal().gens().iter().map(|g| g.extend(n)).collect();
        out.extend(self.sheaf.relations.iter().map(|r| self.linear_form(r)));
        out
    }

    pub fn linear_relations(&self) -> Ideal {
        Ideal::new(self.ring.clone(), self.relation_polys())
    }

    pub fn direct_sum(&self, other: &LinearSpace) -> Result<LinearSpace> {
        let sheaf = self.sheaf.direct_sum(&other.sheaf)?;
        let stack = Stack::new(&[self, other])?;
        let names = stack.ring.vars()[self.nbase()..].iter().map(|v| v.name.clone()).collect();
        let mut tw = self.twists();
        tw.extend(other.twists());
        LinearSpace::from_module(sheaf, Some(names), Some(tw))
    }
}

/// Several linear spaces over one base, placed side by side in a single ring.
#[derive(Clone, Debug)]
pub struct Stack {
    pub ring: Ring,
    pub nbase: usize,
    offsets: Vec<usize>,
    ranks: Vec<usize>,
}

impl Stack {
    /// Coordinates whose names clash with earlier ones are renamed.
    pub fn new(spaces: &[&LinearSpace]) -> Result<Stack> {
        let first = spaces.first().ok_or_else(|| Error::invalid("empty stack"))?;
        let base = first.base_ring().clone();
        for s in spaces {
            if s.base_ring() != &base {
                return Err(Error::RingMismatch("linear spaces over different bases".into()));
            }
        }
        let mut vars: Vec<Var> = base.vars().to_vec();
        let mut offsets = Vec::new();
        let mut ranks = Vec::new();
        for (k, s) in spaces.iter().enumerate() {
            offsets.push(vars.len());
            ranks.push(s.rank());
            for v in &s.coords {
                let mut w = v.clone();
                w.block = crate::symkernel::Block::Cone(k as u16);
                while vars.iter().any(|u| u.name == w.name) {
                    w.name = format!("{}_{}", w.name, k);
                }
                vars.push(w);
            }
        }
        Ok(Stack {
            ring: PolyRing::new(vars)?,
            nbase: base.nvars(),
            offsets,
            ranks,
        })
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn coord(&self, k: usize, i: usize) -> Poly {
        Poly::var(self.nvars(), self.offsets[k] + i)
    }

    pub fn coords(&self, k: usize) -> Vec<Poly> {
        (0..self.ranks[k]).map(|i| self.coord(k, i)).collect()
    }

    pub fn base(&self, p: &Poly) -> Poly {
        p.extend(self.nvars())
    }

    /// Moves a polynomial from block `k`'s own ring into the stack.
    pub fn embed(&self, k: usize, p: &Poly) -> Poly {
        let map: Vec<usize> = (0..self.nbase)
            .chain((0..self.ranks[k]).map(|i| self.offsets[k] + i))
            .collect();
        p.remap(self.nvars(), &map)
    }

    /// Inverse of [`Self::embed`]; `p` must only involve base variables and block `k`.
    pub fn restrict(&self, k: usize, p: &Poly) -> Poly {
        let n = self.nbase + self.ranks[k];
        let map: Vec<usize> = (0..self.nvars())
            .map(|v| {
                if v < self.nbase {
                    v
                } else if v >= self.offsets[k] && v < self.offsets[k] + self.ranks[k] {
                    self.nbase + v - self.offsets[k]
                } else {
                    0
                }
            })
            .collect();
        debug_assert!((self.nbase..self.nvars())
            .filter(|&v| v < self.offsets[k] || v >= self.offsets[k] + self.ranks[k])
            .all(|v| !p.uses_var(v)));
        p.remap(n, &map)
    }

    pub fn block_mask(&self, ks: &[usize]) -> Vec<bool> {
        let mut m = vec![false; self.nvars()];
        for &k in ks {
            for i in 0..self.ranks[k] {
                m[self.offsets[k] + i] = true;
            }
        }
        m
    }

    /// Space `k`'s linear relations and base ideal, inside the stack.
    pub fn relations(&self, k: usize, space: &LinearSpace) -> Vec<Poly> {
        space.relation_polys().iter().map(|p| self.embed(k, p)).collect()
    }
}

/// A homomorphism `E → F` of linear spaces, dual to the sheaf map `ℱ → ℰ`.
///
/// Row `i` of `matrix` expresses the target coordinate `Yᵢ` in source coordinates.
#[derive(Clone, Debug)]
pub struct LinSpaceHom {
    pub source: LinearSpace,
    pub target: LinearSpace,
    pub matrix: Vec<Vector>,
}

impl LinSpaceHom {
    pub fn new(source: LinearSpace, target: LinearSpace, matrix: Vec<Vector>) -> Result<Self> {
        let h = LinSpaceHom::new_unchecked(source, target, matrix)?;
        if !h.sheaf_map().is_well_defined() {
            return Err(Error::invalid("substitution does not respect the linear relations"));
        }
        Ok(h)
    }

    /// Shape check only.
    pub fn new_unchecked(source: LinearSpace, target: LinearSpace, matrix: Vec<Vector>) -> Result<Self> {
        let nb = source.nbase();
        if matrix.len() != target.rank()
            || matrix.iter().any(|r| r.len() != source.rank() || r.iter().any(|p| p.nvars() != nb))
        {
            return Err(Error::invalid("homomorphism matrix has the wrong shape"));
        }
        if source.base_ring() != target.base_ring() {
            return Err(Error::RingMismatch("homomorphism between spaces over different bases".into()));
        }
        Ok(LinSpaceHom { source, target, matrix })
    }

    pub fn zero(source: &LinearSpace, target: &LinearSpace) -> Self {
        let nb = source.nbase();
        let matrix = vec![vec![Poly::zero(nb); source.rank()]; target.rank()];
        LinSpaceHom::new_unchecked(source.clone(), target.clone(), matrix).unwrap()
    }

    pub fn identity(space: &LinearSpace) -> Self {
        let nb = space.nbase();
        let r = space.rank();
        let matrix = (0..r)
            .map(|i| (0..r).map(|j| if i == j { Poly::one(nb) } else { Poly::zero(nb) }).collect())
            .collect();
        LinSpaceHom::new_unchecked(space.clone(), space.clone(), matrix).unwrap()
    }

    /// The dual sheaf map `ℱ → ℰ`.
    pub fn sheaf_map(&self) -> ModuleMap {
        ModuleMap {
            source: self.target.sheaf.clone(),
            target: self.source.sheaf.clone(),
            images: self.matrix.clone(),
        }
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &LinSpaceHom) -> Result<LinSpaceHom> {
        let nb = self.source.nbase();
        let matrix = after
            .matrix
            .iter()
            .map(|row| crate::symkernel::module::mat_vec(&self.matrix, row, self.source.rank(), nb))
            .collect();
        LinSpaceHom::new_unchecked(self.source.clone(), after.target.clone(), matrix)
    }

    pub fn add(&self, other: &LinSpaceHom) -> Result<LinSpaceHom> {
        if other.matrix.len() != self.matrix.len() {
            return Err(Error::invalid("sum of homomorphisms with different targets"));
        }
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.add(y)).collect())
            .collect();
        LinSpaceHom::new_unchecked(self.source.clone(), self.target.clone(), matrix)
    }

    pub fn neg(&self) -> LinSpaceHom {
        let matrix = self.matrix.iter().map(|r| r.iter().map(Poly::neg).collect()).collect();
        LinSpaceHom::new_unchecked(self.source.clone(), self.target.clone(), matrix).unwrap()
    }

    /// Equality as homomorphisms: rows agree modulo the source relations.
    pub fn equals(&self, other: &LinSpaceHom) -> bool {
        self.matrix.len() == other.matrix.len()
            && self.matrix.iter().zip(&other.matrix).all(|(a, b)| {
                let diff: Vector = a.iter().zip(b).map(|(x, y)| x.sub(y)).collect();
                self.source.sheaf.is_zero_element(&diff)
            })
    }

    /// Images of the target coordinates, with source coordinates at block `k` of `stack`.
    pub fn images_in(&self, stack: &Stack, k: usize) -> Vec<Poly> {
        let n = stack.nvars();
        self.matrix
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .fold(Poly::zero(n), |acc, (j, c)| acc.add(&stack.base(c).mul(&stack.coord(k, j))))
            })
            .collect()
    }

    /// Epimorphism of linear spaces: the sheaf map is injective.
    pub fn is_epimorphism(&self) -> Result<bool> {
        Ok(map_diagnostics(&self.sheaf_map())?.injective)
    }
}

/// Substitution images for a polynomial of `space.ring()`: base variables fixed, coordinates
/// sent to `coord_images`.
pub fn substitution(stack: &Stack, coord_images: Vec<Poly>) -> Vec<Poly> {
    let n = stack.nvars();
    (0..stack.nbase).map(|i| Poly::var(n, i)).chain(coord_images).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torsion_structure_sheaf() {
        let base = PolyRing::base(&["T"]).unwrap();
        let t = base.parse("T").unwrap();
        let m = PresentedModule::new(Ideal::zero(base), 1, vec![vec![t]]).unwrap();
        let l = LinearSpace::from_module(m, Some(vec!["U".into()]), None).unwrap();
        let rels = l.linear_relations();
        assert!(rels.equals(&Ideal::parse(l.ring().clone(), &["T*U"]).unwrap()));
        assert!(!l.is_bundle());
    }

    #[test]
    fn composition_matches_matrix_product() {
        let base = PolyRing::base(&["t"]).unwrap();
        let z = Ideal::zero(base.clone());
        let p = |s: &str| base.parse(s).unwrap();
        let a = LinearSpace::free(z.clone(), 1, "X").unwrap();
        let b = LinearSpace::free(z.clone(), 2, "Y").unwrap();
        let c = LinearSpace::free(z, 1, "Z").unwrap();
        let f = LinSpaceHom::new(a.clone(), b.clone(), vec![vec![p("t")], vec![p("1")]]).unwrap();
        let g = LinSpaceHom::new(b, c, vec![vec![p("1"), p("t")]]).unwrap();
        let gf = f.then(&g).unwrap();
        assert_eq!(gf.matrix, vec![vec![p("2*t")]]);
        assert!(gf.source.rank() == a.rank());
    }

    #[test]
    fn ill_defined_hom_rejected() {
        let base = PolyRing::base(&["T"]).unwrap();
        let p = |s: &str| base.parse(s).unwrap();
        let tors = PresentedModule::new(Ideal::zero(base.clone()), 1, vec![vec![p("T")]]).unwrap();
        let e = LinearSpace::from_module(tors, None, None).unwrap();
        let f = LinearSpace::free(Ideal::zero(base.clone()), 1, "X").unwrap();
        // F → E sends U ↦ X: sheaf map k[T]/T → k[T] is not defined
        assert!(LinSpaceHom::new(f.clone(), e.clone(), vec![vec![p("1")]]).is_err());
        assert!(LinSpaceHom::new(e, f, vec![vec![p("1")]]).is_ok());
    }
}
