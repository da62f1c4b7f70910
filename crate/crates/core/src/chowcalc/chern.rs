//! Truncated Chern series in the hyperplane class `h` of `Pⁿ`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symkernel::{rat, Rat};

/// `c₀ + c₁h + … + cₙhⁿ` modulo `hⁿ⁺¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernPoly {
    pub n: usize,
    pub coeffs: Vec<Rat>,
}

impl ChernPoly {
    pub fn new(n: usize, mut coeffs: Vec<Rat>) -> Self {
        coeffs.resize(n + 1, Rat::zero());
        coeffs.truncate(n + 1);
        ChernPoly { n, coeffs }
    }

    pub fn from_ints(n: usize, c: &[i64]) -> Self {
        ChernPoly::new(n, c.iter().map(|&x| rat(x)).collect())
    }

    pub fn one(n: usize) -> Self {
        ChernPoly::from_ints(n, &[1])
    }

    /// `c(𝒪(d)) = 1 + d·h`.
    pub fn line(n: usize, d: i64) -> Self {
        ChernPoly::from_ints(n, &[1, d])
    }

    /// `c(⊕ 𝒪(dᵢ))`.
    pub fn total(n: usize, twists: &[i64]) -> Self {
        twists.iter().fold(ChernPoly::one(n), |acc, &d| acc.mul(&ChernPoly::line(n, d)))
    }

    /// `c(T_{Pⁿ}) = (1+h)ⁿ⁺¹`, truncated to `m`.
    pub fn tangent_projective(n: usize, m: usize) -> Self {
        ChernPoly::total(m, &vec![1; n + 1])
    }

    pub fn mul(&self, other: &ChernPoly) -> ChernPoly {
        assert_eq!(self.n, other.n, "Chern series over different ambients");
        let mut out = vec![Rat::zero(); self.n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j <= self.n {
                    out[i + j] += a * b;
                }
            }
        }
        ChernPoly::new(self.n, out)
    }

    pub fn inverse(&self) -> Result<ChernPoly> {
        if !self.coeffs[0].is_one() {
            return Err(Error::invalid("Chern series with constant term other than 1 is not invertible here"));
        }
        let mut inv = vec![Rat::zero(); self.n + 1];
        inv[0] = Rat::one();
        for k in 1..=self.n {
            let mut s = Rat::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = -s;
        }
        Ok(ChernPoly::new(self.n, inv))
    }
}

/// A bundle given by twists of `𝒪` or by an explicit Chern series and rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BundleSpec {
    Twists(Vec<i64>),
    Explicit { chern: Vec<String>, rank: usize },
}

impl BundleSpec {
    pub fn rank(&self) -> usize {
        match self {
            BundleSpec::Twists(t) => t.len(),
            BundleSpec::Explicit { rank, .. } => *rank,
        }
    }

    pub fn chern(&self, n: usize) -> Result<ChernPoly> {
        match self {
            BundleSpec::Twists(t) => Ok(ChernPoly::total(n, t)),
            BundleSpec::Explicit { chern, .. } => {
                let coeffs = chern
                    .iter()
                    .map(|s| crate::chowcalc::chow::parse_rat(s))
                    .collect::<Result<Vec<_>>>()?;
                Ok(ChernPoly::new(n, coeffs))
            }
        }
    }
}

/// `plus − minus` in K-theory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtualBundle {
    pub plus: BundleSpec,
    pub minus: BundleSpec,
}

impl VirtualBundle {
    pub fn rank(&self) -> i64 {
        self.plus.rank() as i64 - self.minus.rank() as i64
    }

    pub fn chern(&self, n: usize) -> Result<ChernPoly> {
        Ok(self.plus.chern(n)?.mul(&self.minus.chern(n)?.inverse()?))
    }
}

/// Chern-series operations by tag.
#[derive(Clone, Debug)]
pub enum ChernOp<'a> {
    Total(usize, &'a [i64]),
    Inverse(&'a ChernPoly),
    Product(&'a ChernPoly, &'a ChernPoly),
    OfVirtual(usize, &'a VirtualBundle),
}

pub fn chern_arith(op: ChernOp<'_>) -> Result<ChernPoly> {
    match op {
        ChernOp::Total(n, t) => Ok(ChernPoly::total(n, t)),
        ChernOp::Inverse(c) => c.inverse(),
        ChernOp::Product(a, b) => {
            if a.n != b.n {
                return Err(Error::invalid("Chern series over different ambients"));
            }
            Ok(a.mul(b))
        }
        ChernOp::OfVirtual(n, v) => v.chern(n),
    }
}
