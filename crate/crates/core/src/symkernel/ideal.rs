use std::fmt;
use std::sync::{Arc, OnceLock};

use super::groebner::{buchberger, GbConfig, GroebnerBasis};
use super::mono::MonoOrder;
use super::poly::Poly;
use super::ring::{PolyRing, Ring, Var};
use crate::error::{Error, Result};

/// Default bound on quotient iterations in [`Ideal::saturate`].
pub const SATURATION_CAP: usize = 50;

/// An ideal given by generators, with a lazily computed reduced grevlex basis.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Poly>,
    gb: Arc<OnceLock<GroebnerBasis>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| self.ring.format(g)).collect();
        f.debug_tuple("Ideal").field(&gens).finish()
    }
}

impl Ideal {
    pub fn new(ring: Ring, gens: Vec<Poly>) -> Self {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert_eq!(g.nvars(), ring.nvars(), "generator over a different ring");
        }
        Ideal {
            ring,
            gens,
            gb: Arc::new(OnceLock::new()),
        }
    }

    pub fn zero(ring: Ring) -> Self {
        Ideal::new(ring, vec![])
    }

    pub fn parse<S: AsRef<str>>(ring: Ring, gens: &[S]) -> Result<Self> {
        let ps = gens.iter().map(|g| ring.parse(g.as_ref())).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring, ps))
    }

    /// The ideal generated by the variables selected by `mask`.
    pub fn of_vars(ring: Ring, mask: &[bool]) -> Self {
        let n = ring.nvars();
        let gens = (0..n).filter(|&i| mask[i]).map(|i| Poly::var(n, i)).collect();
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn with_gens(&self, gens: Vec<Poly>) -> Self {
        Ideal::new(self.ring.clone(), gens)
    }

    /// Reduced Gröbner basis in graded reverse lexicographic order.
    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            buchberger(&self.gens, &MonoOrder::GrevLex, self.ring.nvars(), &GbConfig::default())
                .expect("Gröbner basis exceeded default resource limits")
        })
    }

    pub fn gb_with(&self, order: &MonoOrder, cfg: &GbConfig) -> Result<GroebnerBasis> {
        if *order == MonoOrder::GrevLex {
            if let Some(g) = self.gb.get() {
                return Ok(g.clone());
            }
        }
        let g = buchberger(&self.gens, order, self.ring.nvars(), cfg)?;
        if *order == MonoOrder::GrevLex {
            let _ = self.gb.set(g.clone());
        }
        Ok(g)
    }

    /// Ideal generated by its own reduced basis.
    pub fn reduced(&self) -> Ideal {
        let out = Ideal::new(self.ring.clone(), self.gb().polys.clone());
        let _ = out.gb.set(self.gb().clone());
        out
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.gb().contains(p)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        self.check_ring(other).is_ok() && {
            let r = self.gb().reducer();
            other.gens.iter().all(|g| r.contains(g))
        }
    }

    pub fn equals(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.gb().polys == other.gb().polys
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        self.gb().reduce(p)
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{:?} vs {:?}",
                self.ring.names().collect::<Vec<_>>(),
                other.ring.names().collect::<Vec<_>>()
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ok(self.with_gens(g))
    }

    pub fn add_gens(&self, extra: impl IntoIterator<Item = Poly>) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(extra);
        self.with_gens(g)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.mul(b));
            }
        }
        Ok(self.with_gens(g))
    }

    pub fn power(&self, e: u32) -> Ideal {
        let mut acc = Ideal::new(self.ring.clone(), vec![Poly::one(self.ring.nvars())]);
        for _ in 0..e {
            acc = acc.product(self).unwrap().reduced();
        }
        acc
    }

    /// Elements of the ideal free of the variables flagged in `mask` (same ring).
    pub fn eliminate(&self, mask: &[bool]) -> Result<Ideal> {
        if mask.len() != self.ring.nvars() {
            return Err(Error::invalid("elimination block does not match the ring"));
        }
        if !mask.iter().any(|&b| b) {
            return Ok(self.clone());
        }
        let order = MonoOrder::elim(mask.to_vec());
        let g = self.gb_with(&order, &GbConfig::default())?;
        let keep = g
            .polys
            .into_iter()
            .filter(|p| (0..mask.len()).all(|i| !mask[i] || !p.uses_var(i)))
            .collect();
        Ok(self.with_gens(keep))
    }

    /// Eliminates the trailing variables beyond `keep` and returns the result over `ring`.
    fn eliminate_tail(big: &Ideal, keep: usize, ring: Ring) -> Result<Ideal> {
        let mask: Vec<bool> = (0..big.ring.nvars()).map(|i| i >= keep).collect();
        let e = big.eliminate(&mask)?;
        Ok(Ideal::new(ring, e.gens.iter().map(|p| p.truncate(keep)).collect()))
    }

    fn with_aux(&self, name: &str) -> Result<Ring> {
        self.ring.extended(vec![Var::aux(self.ring.fresh_name(name))])
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(self.ring.clone()));
        }
        let n = self.ring.nvars();
        let big = self.with_aux("t")?;
        let t = Poly::var(n + 1, n);
        let one_minus_t = Poly::one(n + 1).sub(&t);
        let mut g: Vec<Poly> = self.gens.iter().map(|p| p.extend(n + 1).mul(&t)).collect();
        g.extend(other.gens.iter().map(|p| p.extend(n + 1).mul(&one_minus_t)));
        Self::eliminate_tail(&Ideal::new(big, g), n, self.ring.clone())
    }

    /// `I : f`.
    pub fn quotient_poly(&self, f: &Poly) -> Result<Ideal> {
        if f.is_zero() {
            return Ok(Ideal::new(self.ring.clone(), vec![Poly::one(self.ring.nvars())]));
        }
        let principal = self.with_gens(vec![f.clone()]);
        let inter = self.intersect(&principal)?;
        let gens = inter
            .gens
            .iter()
            .map(|g| g.exact_div(f).ok_or_else(|| Error::assertion("intersection element not divisible")))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.with_gens(gens))
    }

    /// `I : J`.
    pub fn quotient(&self, j: &Ideal) -> Result<Ideal> {
        self.check_ring(j)?;
        let mut acc: Option<Ideal> = None;
        for g in &j.gens {
            let q = self.quotient_poly(g)?.reduced();
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?.reduced(),
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::new(self.ring.clone(), vec![Poly::one(self.ring.nvars())])))
    }

    /// `I : J^∞` by iterated quotients until two consecutive bases agree.
    pub fn saturate(&self, j: &Ideal) -> Result<Ideal> {
        self.saturate_capped(j, SATURATION_CAP)
    }

    pub fn saturate_capped(&self, j: &Ideal, cap: usize) -> Result<Ideal> {
        let mut cur = self.reduced();
        for _ in 0..cap {
            let next = cur.quotient(j)?.reduced();
            if next.equals(&cur) {
                return Ok(cur);
            }
            cur = next;
        }
        Err(Error::ResourceLimit(format!("saturation did not stabilize within {cap} quotients")))
    }

    /// Moves the ideal into `target` along an injective variable map.
    pub fn remap(&self, target: Ring, map: &[usize]) -> Ideal {
        let n = target.nvars();
        Ideal::new(target, self.gens.iter().map(|g| g.remap(n, map)).collect())
    }

    /// The ideal's generators as canonical strings (basis order).
    pub fn canonical_strings(&self) -> Vec<String> {
        self.gb()
            .polys
            .iter()
            .map(|p| self.ring.format(&p.primitive(&MonoOrder::GrevLex)))
            .collect()
    }
}

/// A ring homomorphism given by the images of the source variables.
#[derive(Clone, Debug)]
pub struct RingMap {
    pub source: Ring,
    pub target: Ring,
    pub images: Vec<Poly>,
}

impl RingMap {
    pub fn new(source: Ring, target: Ring, images: Vec<Poly>) -> Result<Self> {
        if images.len() != source.nvars() || images.iter().any(|p| p.nvars() != target.nvars()) {
            return Err(Error::RingMismatch("ring map images do not match".into()));
        }
        Ok(RingMap { source, target, images })
    }

    /// Checks that images respect the base and cone gradings.
    pub fn is_graded(&self) -> bool {
        let bw = self.target.base_weights();
        let cw = self.target.cone_weights();
        self.images.iter().zip(self.source.vars()).all(|(img, v)| {
            img.is_zero()
                || (img.homogeneous_degree(&bw) == Some(v.base_weight as u64)
                    && img.homogeneous_degree(&cw) == Some(v.cone_weight as u64))
        })
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        p.substitute(&self.images)
    }

    pub fn apply_ideal(&self, i: &Ideal) -> Ideal {
        Ideal::new(self.target.clone(), i.gens().iter().map(|g| self.apply(g)).collect())
    }

    /// `map⁻¹(J)` through the graph ideal followed by elimination of the target variables.
    pub fn preimage(&self, j: &Ideal) -> Result<Ideal> {
        if j.ring() != &self.target {
            return Err(Error::RingMismatch("preimage of an ideal over another ring".into()));
        }
        let nt = self.target.nvars();
        let ns = self.source.nvars();
        // variables: target block first, then source copies
        let mut vars: Vec<Var> = self.target.vars().to_vec();
        for v in self.source.vars() {
            let mut w = v.clone();
            w.name = format!("__src_{}", v.name);
            vars.push(w);
        }
        let big = PolyRing::new(vars)?;
        let n = nt + ns;
        let mut gens: Vec<Poly> = j.gens().iter().map(|g| g.extend(n)).collect();
        for (k, img) in self.images.iter().enumerate() {
            gens.push(Poly::var(n, nt + k).sub(&img.extend(n)));
        }
        let mask: Vec<bool> = (0..n).map(|i| i < nt).collect();
        let e = Ideal::new(big, gens).eliminate(&mask)?;
        let back: Vec<usize> = (0..n).map(|i| i.saturating_sub(nt)).collect();
        Ok(Ideal::new(
            self.source.clone(),
            e.gens().iter().map(|g| g.remap(ns, &back)).collect(),
        ))
    }
}

/// Ideal-level operations by tag.
#[derive(Clone, Debug)]
pub enum IdealOp<'a> {
    Membership(&'a Poly, &'a Ideal),
    Equal(&'a Ideal, &'a Ideal),
    Sum(&'a Ideal, &'a Ideal),
    Product(&'a Ideal, &'a Ideal),
    Power(&'a Ideal, u32),
    Quotient(&'a Ideal, &'a Ideal),
    Saturate(&'a Ideal, &'a Ideal),
    Eliminate(&'a Ideal, &'a [bool]),
    Preimage(&'a RingMap, &'a Ideal),
}

#[derive(Clone, Debug)]
pub enum OpResult {
    Ideal(Ideal),
    Bool(bool),
}

pub fn ideal_ops(op: IdealOp<'_>) -> Result<OpResult> {
    Ok(match op {
        IdealOp::Membership(p, i) => OpResult::Bool(i.contains(p)),
        IdealOp::Equal(a, b) => {
            a.check_ring(b)?;
            OpResult::Bool(a.equals(b))
        }
        IdealOp::Sum(a, b) => OpResult::Ideal(a.sum(b)?),
        IdealOp::Product(a, b) => OpResult::Ideal(a.product(b)?),
        IdealOp::Power(a, e) => OpResult::Ideal(a.power(e)),
        IdealOp::Quotient(a, b) => OpResult::Ideal(a.quotient(b)?),
        IdealOp::Saturate(a, b) => OpResult::Ideal(a.saturate(b)?),
        IdealOp::Eliminate(a, mask) => OpResult::Ideal(a.eliminate(mask)?),
        IdealOp::Preimage(f, j) => OpResult::Ideal(f.preimage(j)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> Ring {
        PolyRing::base(names).unwrap()
    }

    #[test]
    fn saturation_by_hand_example() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::parse(r.clone(), &["x*y", "x*z"]).unwrap();
        let j = Ideal::parse(r.clone(), &["x"]).unwrap();
        let s = i.saturate(&j).unwrap();
        assert!(s.equals(&Ideal::parse(r, &["y", "z"]).unwrap()));
        assert!(s.saturate(&j).unwrap().equals(&s));
    }

    #[test]
    fn membership() {
        let r = ring(&["x"]);
        let i = Ideal::parse(r.clone(), &["x"]).unwrap();
        assert!(i.contains(&r.parse("x^2").unwrap()));
        assert!(!i.contains(&r.parse("x + 1").unwrap()));
    }

    #[test]
    fn preimage_of_square_map() {
        let src = ring(&["u"]);
        let tgt = ring(&["x"]);
        let f = RingMap::new(src.clone(), tgt.clone(), vec![tgt.parse("x^2").unwrap()]).unwrap();
        let j = Ideal::parse(tgt, &["x^2"]).unwrap();
        let pre = f.preimage(&j).unwrap();
        assert!(pre.equals(&Ideal::parse(src, &["u"]).unwrap()));
    }

    #[test]
    fn intersection_and_quotient() {
        let r = ring(&["x", "y"]);
        let a = Ideal::parse(r.clone(), &["x"]).unwrap();
        let b = Ideal::parse(r.clone(), &["y"]).unwrap();
        assert!(a.intersect(&b).unwrap().equals(&Ideal::parse(r.clone(), &["x*y"]).unwrap()));
        let q = Ideal::parse(r.clone(), &["x^2", "x*y"]).unwrap().quotient(&a).unwrap();
        assert!(q.equals(&Ideal::parse(r, &["x", "y"]).unwrap()));
    }

    #[test]
    fn eliminate_rejects_bad_mask() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(r, &["x"]).unwrap();
        assert!(matches!(i.eliminate(&[true]), Err(Error::Invalid(_))));
    }

    #[test]
    fn ring_mismatch() {
        let a = Ideal::parse(ring(&["x"]), &["x"]).unwrap();
        let b = Ideal::parse(ring(&["y"]), &["y"]).unwrap();
        assert!(matches!(a.sum(&b), Err(Error::RingMismatch(_))));
    }
}
