//! Segre, Fulton and virtual classes against values computed independently in this file:
//! truncated power series for complete intersections and hypersurfaces, and Samuel
//! multiplicities of monomial ideals counted from standard monomials.

use std::collections::BTreeSet;

use conecalc::chowcalc::{segre_class, ChowClass};
use conecalc::linecone::normal_cone;
use conecalc::vfclasses::{fulton_class, vfc_closed_formula, vfc_direct, Ambient, EmbeddedScheme, NormalSpaceData};

const SEED: u64 = 31;

/// Coefficients of `1, h, h², …` up to `h^n`.
fn series_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `1/(1 + d·h) = Σ (-d)^k h^k`.
fn inverse_line(d: i64, n: usize) -> Vec<i64> {
    (0..=n as u32).map(|k| (-d).pow(k)).collect()
}

/// `(series) ∩ deg·[P^dim]` as a class on `Pⁿ`.
fn cap_fundamental(series: &[i64], n: usize, dim: usize, deg: i64) -> ChowClass {
    let mut by_dim = vec![0; n + 1];
    for (k, c) in series.iter().enumerate().take(dim + 1) {
        by_dim[dim - k] = c * deg;
    }
    ChowClass::from_ints(n, &by_dim)
}

fn scheme(ambient: Ambient, vars: &[&str], gens: &[&str]) -> EmbeddedScheme {
    EmbeddedScheme::parse(ambient, vars, gens).unwrap()
}

fn segre(x: &EmbeddedScheme) -> ChowClass {
    segre_class(&normal_cone(&x.ideal, &x.generators, None).unwrap(), SEED).unwrap()
}

fn vars(n: usize) -> Vec<String> {
    (0..=n).map(|i| format!("x{i}")).collect()
}

/// Complete intersections: `s(X, Pⁿ) = c(⊕𝒪(dᵢ))⁻¹ ∩ [X]`.
#[test]
fn complete_intersections() {
    let cases: &[(usize, &[&str], &[i64])] = &[
        (2, &["x0*x2 - x1^2"], &[2]),
        (2, &["x0^2 - x1^2", "x1^2 - x2^2"], &[2, 2]),
        (2, &["x0 - x2", "x1^2 - x0*x2"], &[1, 2]),
        (3, &["x0*x3 - x1*x2"], &[2]),
        (3, &["x0*x3 - x1*x2", "x0^2 + x1^2 - x2^2 - 2*x3^2"], &[2, 2]),
        (3, &["x3", "x0*x2 - x1^2"], &[1, 2]),
    ];
    for &(n, gens, degs) in cases {
        let v = vars(n);
        let v: Vec<&str> = v.iter().map(String::as_str).collect();
        let x = scheme(Ambient::Projective, &v, gens);
        let mut inv = vec![1];
        for &d in degs {
            inv = series_mul(&inv, &inverse_line(d, n), n);
        }
        let want = cap_fundamental(&inv, n, n - degs.len(), degs.iter().product());
        assert_eq!(segre(&x), want, "{gens:?}");
    }
}

/// A Cartier divisor of degree `d` in `P²`, reduced or not: `d[P¹] - d²[P⁰]`.
#[test]
fn plane_curves() {
    for (g, d) in [("x0", 1), ("x0^2", 2), ("x0^2*x1", 3), ("x0^3 - x1^2*x2", 3), ("x0*x1*x2", 3), ("x1^4 - x0^3*x2", 4)] {
        let x = scheme(Ambient::Projective, &["x0", "x1", "x2"], &[g]);
        assert_eq!(segre(&x), ChowClass::from_ints(2, &[-d * d, d]), "{g}");
    }
}

/// `ℓ(k[x,y]/Iⁿ)` for a monomial ideal, by listing the standard monomials.
fn colength(gens: &[(u32, u32)], power: u32) -> usize {
    let mut pw: BTreeSet<(u32, u32)> = [(0, 0)].into();
    for _ in 0..power {
        pw = pw.iter().flat_map(|&(a, b)| gens.iter().map(move |&(c, d)| (a + c, b + d))).collect();
    }
    let bound = pw.iter().map(|&(a, b)| a.max(b)).max().unwrap();
    let mut count = 0;
    for a in 0..=bound {
        for b in 0..=bound {
            if !pw.iter().any(|&(c, d)| c <= a && d <= b) {
                count += 1;
            }
        }
    }
    count
}

/// The second difference of `n ↦ ℓ(R/Iⁿ)` is eventually the multiplicity `e(I)`.
fn samuel_multiplicity(gens: &[(u32, u32)]) -> i64 {
    let l: Vec<i64> = (6..=8).map(|p| colength(gens, p) as i64).collect();
    l[2] - 2 * l[1] + l[0]
}

/// For an `𝔪`-primary ideal the Segre class of the point is `e(I)·[P⁰]`.
#[test]
fn point_multiplicities() {
    let cases: &[&[(u32, u32)]] = &[
        &[(2, 0), (0, 3)],
        &[(2, 0), (1, 1), (0, 2)],
        &[(3, 0), (1, 1), (0, 3)],
        &[(3, 0), (2, 1), (0, 2)],
        &[(4, 0), (1, 2), (0, 3)],
    ];
    for gens in cases {
        let text: Vec<String> = gens.iter().map(|&(a, b)| format!("x^{a}*y^{b}")).collect();
        let text: Vec<&str> = text.iter().map(String::as_str).collect();
        let x = scheme(Ambient::Affine, &["x", "y"], &text);
        let e = samuel_multiplicity(gens);
        assert_eq!(segre(&x), ChowClass::from_ints(2, &[e]), "{text:?}");
    }
    assert_eq!(samuel_multiplicity(&[(2, 0), (0, 3)]), 6);
}

/// `c_F(X) = c(T_{Pⁿ}) ∩ s(X, Pⁿ)` with `c(T_{Pⁿ}) = (1+h)^{n+1}`.
#[test]
fn fulton_classes_of_complete_intersections() {
    let binom = |n: i64, k: i64| (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1));
    let cases: &[(usize, &[&str], &[i64])] = &[
        (2, &["x0^3 + x1^3 + x2^3"], &[3]),
        (3, &["x0*x3 - x1*x2"], &[2]),
        (3, &["x0*x3 - x1*x2", "x0^2 + x1^2 - x2^2 - 2*x3^2"], &[2, 2]),
    ];
    for &(n, gens, degs) in cases {
        let v = vars(n);
        let v: Vec<&str> = v.iter().map(String::as_str).collect();
        let x = scheme(Ambient::Projective, &v, gens);
        let tangent: Vec<i64> = (0..=n as i64).map(|k| binom(n as i64 + 1, k)).collect();
        let mut s = tangent;
        for &d in degs {
            s = series_mul(&s, &inverse_line(d, n), n);
        }
        let want = cap_fundamental(&s, n, n - degs.len(), degs.iter().product());
        assert_eq!(fulton_class(&x, SEED).unwrap(), want, "{gens:?}");
    }
    // plane cubic: c_F = 3[P¹] + 0[P⁰], the Euler characteristic of an elliptic curve
    let x = scheme(Ambient::Projective, &["x0", "x1", "x2"], &["x0^3 + x1^3 + x2^3"]);
    assert_eq!(fulton_class(&x, SEED).unwrap(), ChowClass::from_ints(2, &[0, 3]));
}

/// A regular section has virtual class `[X]`; an excess section picks up the top Chern class
/// of the excess bundle.
#[test]
fn virtual_classes() {
    let x = scheme(Ambient::Projective, &["x0", "x1", "x2", "x3"], &["x0*x3 - x1*x2", "x0^2 + x1^2 - x2^2 - 2*x3^2"]);
    let data = NormalSpaceData::SectionOfBundle {
        twists: vec![2, 2],
        sections: x.generators.clone(),
    };
    let r = vfc_direct(&x, &data, SEED).unwrap();
    assert_eq!((r.rank, r.vfc.clone()), (1, ChowClass::linear(3, 1, 4)));
    assert_eq!(vfc_closed_formula(&x, &data, SEED).unwrap().vfc, r.vfc);

    // excess: the line V(x0) cut out by x0 ∈ O(1) and x0·x1 ∈ O(2); [X]^vir = c₁(O(2)|_X) ∩ [X] = 2[P⁰]
    let line = scheme(Ambient::Projective, &["x0", "x1", "x2"], &["x0"]);
    let sections = vec![line.generators[0].clone(), line.ring.parse("x0*x1").unwrap()];
    let data = NormalSpaceData::SectionOfBundle { twists: vec![1, 2], sections };
    let r = vfc_direct(&line, &data, SEED).unwrap();
    assert_eq!((r.rank, r.vfc.clone()), (0, ChowClass::linear(2, 0, 2)));
    assert_eq!(vfc_closed_formula(&line, &data, SEED).unwrap().vfc, r.vfc);
}
