//! Sparse multivariate polynomials with rational coefficients.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::mono::{Mono, MonoOrder};
use super::Rat;

/// A polynomial in a fixed number of variables. Terms are kept sorted in
/// descending graded reverse lexicographic order, with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    nvars: usize,
    terms: Vec<(Mono, Rat)>,
}

fn canon_cmp(a: &Mono, b: &Mono) -> Ordering {
    MonoOrder::GrevLex.cmp(b, a)
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::monomial(Mono::one(nvars), c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Rat::from_integer(BigInt::from(c)))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Mono::var(nvars, i), Rat::one())
    }

    pub fn monomial(m: Mono, c: Rat) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Poly {
            nvars,
            terms: vec![(m, c)],
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Mono, Rat)>) -> Self {
        let mut acc: HashMap<Mono, Rat> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            *acc.entry(m).or_insert_with(Rat::zero) += c;
        }
        let mut terms: Vec<(Mono, Rat)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| canon_cmp(&a.0, &b.0));
        Poly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Mono, Rat)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, Rat)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> Rat {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Leading term under `order`.
    pub fn leading(&self, order: &MonoOrder) -> Option<&(Mono, Rat)> {
        self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0))
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.0[i] > 0)
    }

    pub fn degree_in(&self, mask: &[bool]) -> Option<u32> {
        self.terms
            .iter()
            .map(|(m, _)| {
                m.0.iter()
                    .zip(mask)
                    .filter(|(_, &b)| b)
                    .map(|(&e, _)| e as u32)
                    .sum()
            })
            .max()
    }

    /// Weighted degree if every term has the same one.
    pub fn homogeneous_degree(&self, weights: &[u32]) -> Option<u64> {
        let mut it = self.terms.iter().map(|(m, _)| m.weighted_degree(weights));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self, weights: &[u32]) -> bool {
        self.is_zero() || self.homogeneous_degree(weights).is_some()
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Mono, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        // multiplying by a monomial preserves grevlex order
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// Normalizes the leading coefficient (under `order`) to one.
    pub fn monic(&self, order: &MonoOrder) -> Poly {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    fn merge(&self, other: &Poly, sign: bool) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match canon_cmp(ma, mb) {
                Ordering::Less => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((mb.clone(), if sign { cb.clone() } else { -cb }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if sign { ca + cb } else { ca - cb };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            other.terms[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if sign { c.clone() } else { -c })),
        );
        Poly {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Rat::one())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut acc: HashMap<Mono, Rat> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rat::zero) += ca * cb;
            }
        }
        let mut terms: Vec<(Mono, Rat)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| canon_cmp(&a.0, &b.0));
        Poly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn derivative(&self, i: usize) -> Poly {
        Poly::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m.0[i] > 0).map(|(m, c)| {
                let mut d = m.clone();
                let e = d.0[i];
                d.0[i] -= 1;
                (d, c * Rat::from_integer(BigInt::from(e)))
            }),
        )
    }

    /// Re-indexes variables: variable `i` becomes `map[i]` in a ring of `nvars` variables.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Poly {
        Poly::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                let mut e = Mono::one(nvars);
                for (i, &x) in m.0.iter().enumerate() {
                    if x > 0 {
                        e.0[map[i]] += x;
                    }
                }
                (e, c.clone())
            }),
        )
    }

    /// Embeds into a ring with additional trailing variables.
    pub fn extend(&self, nvars: usize) -> Poly {
        assert!(nvars >= self.nvars);
        let map: Vec<usize> = (0..self.nvars).collect();
        self.remap(nvars, &map)
    }

    /// Drops trailing variables, which must not occur.
    pub fn truncate(&self, nvars: usize) -> Poly {
        Poly::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                debug_assert!(m.0[nvars..].iter().all(|&e| e == 0));
                (Mono::from_slice(&m.0[..nvars]), c.clone())
            }),
        )
    }

    /// Ring-map evaluation: variable `i` is replaced by `images[i]`.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(p.nvars), p.clone()]).collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
                if t.is_zero() {
                    break;
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        let order = MonoOrder::GrevLex;
        let (ld, lc) = d.leading(&order)?.clone();
        let mut rem = self.clone();
        let mut q = Poly::zero(self.nvars);
        while let Some((lm, c)) = rem.leading(&order).cloned() {
            if !ld.divides(&lm) {
                return None;
            }
            let t = ld.quotient_of(&lm);
            let coef = &c / &lc;
            q = q.add(&Poly::monomial(t.clone(), coef.clone()));
            rem = rem.sub(&d.mul_term(&t, &coef));
        }
        Some(q)
    }

    /// Clears denominators and content so that coefficients are coprime integers with
    /// positive leading coefficient; useful for display and stable hashing.
    pub fn primitive(&self, order: &MonoOrder) -> Poly {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(&(c.numer() * (&den / c.denom())));
        }
        let mut s = Rat::new(den, g);
        if self.leading(order).unwrap().1.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("v{i}")).collect();
        f.write_str(&super::parse::format_poly(self, &names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::var(2, i)
    }

    #[test]
    fn arithmetic_cancels() {
        let p = x(0).add(&x(1)).pow(2);
        let q = x(0).pow(2).add(&x(1).pow(2)).add(&x(0).mul(&x(1)).scale(&Rat::from_integer(2.into())));
        assert!(p.sub(&q).is_zero());
    }

    #[test]
    fn exact_division() {
        let f = x(0).add(&x(1));
        let g = x(0).sub(&x(1));
        let p = f.mul(&g);
        assert_eq!(p.exact_div(&f), Some(g.clone()));
        assert_eq!(p.add(&Poly::one(2)).exact_div(&f), None);
    }

    #[test]
    fn substitution_is_a_ring_map() {
        // u -> x^2 + y, v -> x - y
        let images = [x(0).pow(2).add(&x(1)), x(0).sub(&x(1))];
        let f = x(0).mul(&x(1)).add(&Poly::from_int(2, 3));
        let lhs = f.substitute(&images);
        let rhs = images[0].mul(&images[1]).add(&Poly::from_int(2, 3));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_of_square() {
        let p = x(0).pow(2).mul(&x(1));
        assert_eq!(p.derivative(0), x(0).mul(&x(1)).scale(&Rat::from_integer(2.into())));
    }
}
