//! Named example schemes with their normal space data, and random sections of line bundles on `P²`.

use rand::Rng;
use serde::Serialize;

use super::{Ambient, EmbeddedScheme, NormalSpaceData, NormalSpaceSpec, SchemeSpec};
use crate::error::{Error, Result};
use crate::symkernel::{Poly, PolyRing};

#[derive(Clone, Debug, Serialize)]
pub struct Fixture {
    pub name: &'static str,
    pub summary: &'static str,
    pub scheme: SchemeSpec,
    pub normal_space: NormalSpaceSpec,
}

impl Fixture {
    pub fn build(&self) -> Result<(EmbeddedScheme, NormalSpaceData)> {
        let x = self.scheme.build()?;
        let d = self.normal_space.build(&x)?;
        Ok((x, d))
    }
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn sections(ambient: Ambient, vars: &[&str], gens: &[&str], twists: &[u32]) -> (SchemeSpec, NormalSpaceSpec) {
    (
        SchemeSpec {
            ambient,
            vars: strings(vars),
            ideal: strings(gens),
        },
        NormalSpaceSpec::SectionOfBundle {
            twists: twists.to_vec(),
            sections: strings(gens),
        },
    )
}

pub const NAMES: &[&str] = &["fat-point", "conic", "twisted-cubic", "double-line", "p2-smooth"];

pub fn fixture(name: &str) -> Result<Fixture> {
    let (summary, (scheme, normal_space)) = match name {
        "fat-point" => (
            "the square of the maximal ideal of the origin in A2",
            sections(Ambient::Affine, &["x", "y"], &["x^2", "x*y", "y^2"], &[2, 2, 2]),
        ),
        "conic" => (
            "a smooth conic in P2, cut out by a section of O(2)",
            sections(Ambient::Projective, &["x0", "x1", "x2"], &["x0*x2 - x1^2"], &[2]),
        ),
        "twisted-cubic" => (
            "the twisted cubic in P3 as the zero locus of three quadrics",
            sections(
                Ambient::Projective,
                &["x0", "x1", "x2", "x3"],
                &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"],
                &[2, 2, 2],
            ),
        ),
        "double-line" => (
            "the double line V(x0^2) in P2 with E = O(2)",
            sections(Ambient::Projective, &["x0", "x1", "x2"], &["x0^2"], &[2]),
        ),
        "p2-smooth" => (
            "P2 itself with the identity obstruction theory",
            (
                SchemeSpec {
                    ambient: Ambient::Projective,
                    vars: strings(&["x0", "x1", "x2"]),
                    ideal: vec![],
                },
                NormalSpaceSpec::SmoothIdentity { tangent_chern: None },
            ),
        ),
        other => return Err(Error::invalid(format!("unknown fixture `{other}`"))),
    };
    Ok(Fixture {
        name: NAMES.iter().find(|n| **n == name).unwrap(),
        summary,
        scheme,
        normal_space,
    })
}

pub fn all() -> Vec<Fixture> {
    NAMES.iter().map(|n| fixture(n).unwrap()).collect()
}

/// A regular section of `O(2)²` on `P²`: four reduced points.
pub fn two_conics() -> Result<(EmbeddedScheme, NormalSpaceData)> {
    let (s, d) = sections(Ambient::Projective, &["x0", "x1", "x2"], &["x0^2 - x1^2", "x1^2 - x2^2"], &[2, 2]);
    let x = s.build()?;
    let d = d.build(&x)?;
    Ok((x, d))
}

fn random_form<R: Rng>(rng: &mut R, ring: &PolyRing, deg: u32) -> Poly {
    let n = ring.nvars();
    let mut acc = Poly::zero(n);
    for i in 0..=deg {
        for j in 0..=deg - i {
            let c: i64 = rng.gen_range(-3..=3);
            let m = Poly::var(n, 0).pow(i).mul(&Poly::var(n, 1).pow(j)).mul(&Poly::var(n, 2).pow(deg - i - j));
            acc = acc.add(&m.scale(&crate::symkernel::rat(c)));
        }
    }
    if acc.is_zero() {
        Poly::var(n, rng.gen_range(0..3)).pow(deg)
    } else {
        acc
    }
}

/// One or two sections of degree at most 2 on `P²`; with probability one half they share a
/// linear factor, so that `X` has an excess component.
pub fn random_section_instance<R: Rng>(rng: &mut R) -> Result<(EmbeddedScheme, NormalSpaceData)> {
    let ring = PolyRing::base(&["x0", "x1", "x2"])?;
    let k = rng.gen_range(1..=2);
    let shared = k == 2 && rng.gen_bool(0.5);
    let mut secs = Vec::new();
    let mut twists = Vec::new();
    let common = random_form(rng, &ring, 1);
    for _ in 0..k {
        let (s, d) = if shared {
            (common.mul(&random_form(rng, &ring, 1)), 2)
        } else {
            let d = rng.gen_range(1..=2);
            (random_form(rng, &ring, d), d)
        };
        secs.push(s);
        twists.push(d);
    }
    let x = EmbeddedScheme::projective(ring, secs.clone())?;
    Ok((x, NormalSpaceData::SectionOfBundle { twists, sections: secs }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        for f in all() {
            let (x, _) = f.build().unwrap();
            assert!(x.dim() >= 0, "{}", f.name);
        }
        assert!(fixture("nope").is_err());
    }
}
