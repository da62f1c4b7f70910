//! Classes in `A_*(Pⁿ)` and capping with Chern series.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::chern::ChernPoly;
use crate::error::{Error, Result};
use crate::symkernel::Rat;

/// `Σ aₘ [Pᵐ]` in `A_*(Pⁿ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowClass {
    pub n: usize,
    pub coeffs: Vec<Rat>,
}

impl ChowClass {
    pub fn zero(n: usize) -> Self {
        ChowClass {
            n,
            coeffs: vec![Rat::zero(); n + 1],
        }
    }

    /// Class with integer coefficients listed from dimension 0 upwards.
    pub fn from_ints(n: usize, c: &[i64]) -> Self {
        let mut out = ChowClass::zero(n);
        for (m, &x) in c.iter().enumerate() {
            out.coeffs[m] = crate::symkernel::rat(x);
        }
        out
    }

    /// `a·[Pᵐ]`.
    pub fn linear(n: usize, m: usize, a: i64) -> Self {
        let mut out = ChowClass::zero(n);
        out.coeffs[m] = crate::symkernel::rat(a);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The dimension-`d` part; zero for `d` outside `0..=n`.
    pub fn part(&self, d: i64) -> ChowClass {
        let mut out = ChowClass::zero(self.n);
        if d >= 0 && (d as usize) <= self.n {
            out.coeffs[d as usize] = self.coeffs[d as usize].clone();
        }
        out
    }

    pub fn degree(&self) -> &Rat {
        &self.coeffs[0]
    }

    pub fn add(&self, other: &ChowClass) -> ChowClass {
        ChowClass {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

/// `c ∩ a`: capping with `hʲ` lowers dimension by `j`.
pub fn cap(c: &ChernPoly, a: &ChowClass) -> Result<ChowClass> {
    if c.n != a.n {
        return Err(Error::invalid(format!(
            "cap of a series on P{} with a class on P{}",
            c.n, a.n
        )));
    }
    let mut out = ChowClass::zero(a.n);
    for m in 0..=a.n {
        for j in 0..=a.n - m {
            out.coeffs[m] += &c.coeffs[j] * &a.coeffs[m + j];
        }
    }
    Ok(out)
}

pub fn format_rat(q: &Rat) -> String {
    if q.denom() == &1.into() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Syntax {
        pos: 0,
        msg: format!("bad rational `{s}`"),
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let p: num_bigint::BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: num_bigint::BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for m in (0..=self.n).rev() {
            let c = &self.coeffs[m];
            if c.is_zero() {
                continue;
            }
            let a = c.abs();
            let body = if a == Rat::from_integer(1.into()) {
                format!("[P{m}]")
            } else {
                format!("{}[P{m}]", format_rat(&a))
            };
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ChowJson {
    ambient: usize,
    coeffs: BTreeMap<String, String>,
}

impl Serialize for ChowClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| (m.to_string(), format_rat(c)))
            .collect();
        ChowJson { ambient: self.n, coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChowClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ChowJson::deserialize(d)?;
        let mut out = ChowClass::zero(j.ambient);
        for (k, v) in j.coeffs {
            let m: usize = k.parse().map_err(serde::de::Error::custom)?;
            if m > j.ambient {
                return Err(serde::de::Error::custom("dimension exceeds ambient"));
            }
            out.coeffs[m] = parse_rat(&v).map_err(serde::de::Error::custom)?;
        }
        Ok(out)
    }
}
