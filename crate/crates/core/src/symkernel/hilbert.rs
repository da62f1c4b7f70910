//! Dimension, degree and length from leading-term ideals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ideal::Ideal;
use super::mono::Mono;
use crate::error::{Error, Result};

/// Krull dimension and degree of `R/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimDegree {
    /// `-1` for the unit ideal.
    pub dim: i64,
    pub degree: BigInt,
}

fn minimize(mut ms: Vec<Mono>) -> Vec<Mono> {
    ms.sort_by_key(|m| m.degree());
    let mut out: Vec<Mono> = Vec::new();
    for m in ms {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Largest set of variables containing the support of no leading monomial.
fn independent_dim(lts: &[Mono], nvars: usize) -> usize {
    fn rec(i: usize, chosen: &mut Vec<bool>, lts: &[Mono], nvars: usize, size: usize, best: &mut usize) {
        if size + (nvars - i) <= *best {
            return;
        }
        if i == nvars {
            *best = size;
            return;
        }
        chosen[i] = true;
        let violated = lts.iter().any(|m| m.support().all(|v| v <= i && chosen[v]));
        if !violated {
            rec(i + 1, chosen, lts, nvars, size + 1, best);
        }
        chosen[i] = false;
        rec(i + 1, chosen, lts, nvars, size, best);
    }
    let mut best = 0;
    let mut chosen = vec![false; nvars];
    rec(0, &mut chosen, lts, nvars, 0, &mut best);
    best
}

/// Numerator `N(t)` of the Hilbert series `N(t)/(1-t)^n` of `k[x]/⟨ms⟩`.
fn hilbert_numerator(ms: &[Mono]) -> Vec<BigInt> {
    let ms = minimize(ms.to_vec());
    if ms.is_empty() {
        return vec![BigInt::one()];
    }
    // ⟨m₁..m_k⟩: N = N(m₁..m_{k-1}) - t^{deg m_k} N((m₁..m_{k-1}) : m_k)
    let (last, rest) = ms.split_last().unwrap();
    let base = hilbert_numerator(rest);
    let quot: Vec<Mono> = rest
        .iter()
        .map(|m| {
            let e = m.0.iter().zip(last.0.iter()).map(|(&a, &b)| a.saturating_sub(b)).collect::<Vec<u16>>();
            Mono::from_slice(&e)
        })
        .collect();
    let q = hilbert_numerator(&quot);
    let shift = last.degree() as usize;
    let mut out = base;
    if out.len() < q.len() + shift {
        out.resize(q.len() + shift, BigInt::zero());
    }
    for (k, c) in q.into_iter().enumerate() {
        out[k + shift] -= c;
    }
    while out.len() > 1 && out.last().unwrap().is_zero() {
        out.pop();
    }
    out
}

/// Dimension and degree of `R/I`, read from the grevlex leading-term ideal.
///
/// For an inhomogeneous ideal this is the degree of its projective closure.
pub fn dimension_degree(ideal: &Ideal) -> DimDegree {
    let gb = ideal.gb();
    let n = ideal.ring().nvars();
    if gb.is_unit() {
        return DimDegree { dim: -1, degree: BigInt::zero() };
    }
    let lts = minimize(gb.leading_monomials());
    let dim = independent_dim(&lts, n);
    let mut num = hilbert_numerator(&lts);
    for _ in 0..(n - dim) {
        // divide by (1 - t)
        let mut q = vec![BigInt::zero(); num.len().saturating_sub(1).max(1)];
        let mut carry = BigInt::zero();
        for k in 0..num.len() {
            carry += &num[k];
            if k < q.len() {
                q[k] = carry.clone();
            }
        }
        debug_assert!(carry.is_zero(), "Hilbert numerator not divisible by 1-t");
        num = q;
    }
    let degree = num.iter().fold(BigInt::zero(), |a, c| a + c);
    DimDegree { dim: dim as i64, degree }
}

/// Vector-space dimension of a zero-dimensional `R/I` (number of standard monomials).
pub fn zero_dim_length(ideal: &Ideal) -> Result<u64> {
    let gb = ideal.gb();
    if gb.is_unit() {
        return Ok(0);
    }
    standard_monomial_count(&gb.leading_monomials(), ideal.ring().nvars())
}

/// Number of monomials outside the monomial ideal generated by `lts`; an error if infinite.
pub fn standard_monomial_count(lts: &[Mono], n: usize) -> Result<u64> {
    let lts = minimize(lts.to_vec());
    if lts.iter().any(Mono::is_one) {
        return Ok(0);
    }
    let mut bounds = vec![u16::MAX; n];
    for m in &lts {
        let sup: Vec<usize> = m.support().collect();
        if sup.len() == 1 {
            bounds[sup[0]] = bounds[sup[0]].min(m.0[sup[0]]);
        }
    }
    if bounds.contains(&u16::MAX) {
        return Err(Error::invalid("quotient is not zero-dimensional"));
    }
    let mut count = 0u64;
    let mut e = vec![0u16; n];
    loop {
        let m = Mono::from_slice(&e);
        if !lts.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
        // odometer over the box of exponents
        let mut i = 0;
        loop {
            if i == n {
                return Ok(count);
            }
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symkernel::ring::PolyRing;

    fn dd(vars: &[&str], gens: &[&str]) -> (i64, i64) {
        let r = PolyRing::base(vars).unwrap();
        let d = dimension_degree(&Ideal::parse(r, gens).unwrap());
        (d.dim, i64::try_from(d.degree).unwrap())
    }

    #[test]
    fn basic_dimensions() {
        assert_eq!(dd(&["x", "y", "z"], &["x^2 + y^2 - z^2"]), (2, 2));
        assert_eq!(dd(&["x", "y"], &["x^2", "x*y", "y^2"]), (0, 3));
        assert_eq!(dd(&["x", "y"], &[] as &[&str]), (2, 1));
        assert_eq!(dd(&["x", "y"], &["1"]).0, -1);
        // twisted cubic cone
        assert_eq!(
            dd(&["a", "b", "c", "d"], &["a*c - b^2", "b*d - c^2", "a*d - b*c"]),
            (2, 3)
        );
        // line with embedded point: degree 1
        assert_eq!(dd(&["x", "y"], &["x^2", "x*y"]), (1, 1));
    }

    #[test]
    fn lengths() {
        let r = PolyRing::base(&["x", "y"]).unwrap();
        let i = Ideal::parse(r.clone(), &["x^3", "x^2*y", "x*y^2", "y^3"]).unwrap();
        assert_eq!(zero_dim_length(&i).unwrap(), 6);
        let j = Ideal::parse(r.clone(), &["x^2 - 1", "y - x"]).unwrap();
        assert_eq!(zero_dim_length(&j).unwrap(), 2);
        assert!(zero_dim_length(&Ideal::parse(r, &["x"]).unwrap()).is_err());
    }
}
