//! Randomized invariants across the library.

use conecalc::chowcalc::{cap, chern_arith, segre_class, ChernOp, ChernPoly, ChowClass};
use conecalc::linecone::random::{random_base, random_complex, random_econe, random_square, SquareKind};
use conecalc::linecone::{going_up, is_econe, normal_cone, Cone, EConeAction, LinearSpace};
use conecalc::symkernel::{
    buchberger, dimension_degree, rat, GbConfig, Ideal, Mono, MonoOrder, Poly, PolyRing, PresentedModule, Ring,
};
use conecalc::vfclasses::fixtures::{fixture, two_conics};
use conecalc::vfclasses::{global_normal_cone, vfc_direct, NormalSpaceData};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const N: usize = 3;

fn ring() -> Ring {
    PolyRing::base(&["x", "y", "z"]).unwrap()
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u16..3, 0u16..3, 0u16..3), -3i64..=3), 0..4).prop_map(|terms| {
        Poly::from_terms(
            N,
            terms.into_iter().map(|((a, b, c), k)| (Mono::from_slice(&[a, b, c]), rat(k))),
        )
    })
}

fn ideal() -> impl Strategy<Value = Vec<Poly>> {
    prop::collection::vec(poly(), 1..3)
}

fn series() -> impl Strategy<Value = ChernPoly> {
    prop::collection::vec(-4i64..=4, 2).prop_map(|c| ChernPoly::from_ints(2, &[1, c[0], c[1]]))
}

fn class() -> impl Strategy<Value = ChowClass> {
    prop::collection::vec(-5i64..=5, 3).prop_map(|c| ChowClass::from_ints(2, &c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn print_parse_inverse(a in poly()) {
        let r = ring();
        prop_assert_eq!(r.parse(&r.format(&a)).unwrap(), a);
    }

    #[test]
    fn groebner_basis_generates_the_ideal(gens in ideal()) {
        let cfg = GbConfig::default();
        let grevlex = buchberger(&gens, &MonoOrder::GrevLex, N, &cfg).unwrap();
        let lex = buchberger(&gens, &MonoOrder::Lex, N, &cfg).unwrap();
        for g in &gens {
            prop_assert!(grevlex.reduce(g).is_zero());
            prop_assert!(lex.reduce(g).is_zero());
        }
        // two orders, same ideal
        for g in &grevlex.polys {
            prop_assert!(lex.reduce(g).is_zero());
        }
        for g in &lex.polys {
            prop_assert!(grevlex.reduce(g).is_zero());
        }
        let again = buchberger(&grevlex.polys, &MonoOrder::GrevLex, N, &cfg).unwrap();
        prop_assert_eq!(again.polys, grevlex.polys);
    }

    #[test]
    fn equality_and_saturation(gens in ideal(), other in ideal()) {
        let r = ring();
        let i = Ideal::new(r.clone(), gens.clone());
        let j = Ideal::new(r.clone(), other);
        prop_assert!(i.equals(&i));
        prop_assert_eq!(i.equals(&j), j.equals(&i));
        prop_assert!(i.equals(&i.add_gens([Poly::zero(N)])));
        let m = Ideal::parse(r, &["x", "y"]).unwrap();
        let s = i.saturate(&m).unwrap();
        prop_assert!(s.contains_ideal(&i));
        prop_assert!(s.saturate(&m).unwrap().equals(&s));
    }

    #[test]
    fn elimination_drops_the_block(gens in ideal()) {
        let i = Ideal::new(ring(), gens);
        let e = i.eliminate(&[true, false, false]).unwrap();
        prop_assert!(e.gens().iter().all(|g| !g.uses_var(0)));
        prop_assert!(e.gens().iter().all(|g| i.contains(g)));
    }

    #[test]
    fn adjoining_a_variable(gens in ideal()) {
        let i = Ideal::new(ring(), gens);
        let big = PolyRing::base(&["x", "y", "z", "w"]).unwrap();
        let j = i.remap(big, &[0, 1, 2]);
        let (a, b) = (dimension_degree(&i), dimension_degree(&j));
        if a.dim >= 0 {
            prop_assert_eq!(b.dim, a.dim + 1);
            prop_assert_eq!(b.degree, a.degree);
        } else {
            prop_assert_eq!(b.dim, -1);
        }
    }

    #[test]
    fn chern_inverse(c in series()) {
        let inv = chern_arith(ChernOp::Inverse(&c)).unwrap();
        prop_assert_eq!(chern_arith(ChernOp::Product(&c, &inv)).unwrap(), ChernPoly::one(2));
    }

    #[test]
    fn cap_is_a_module_action(c in series(), d in series(), a in class(), b in class()) {
        prop_assert_eq!(cap(&c, &a.add(&b)).unwrap(), cap(&c, &a).unwrap().add(&cap(&c, &b).unwrap()));
        let cd = chern_arith(ChernOp::Product(&c, &d)).unwrap();
        prop_assert_eq!(cap(&cd, &a).unwrap(), cap(&c, &cap(&d, &a).unwrap()).unwrap());
        prop_assert_eq!(cap(&ChernPoly::one(2), &a).unwrap(), a);
    }

    #[test]
    fn chow_class_json_roundtrip(a in class()) {
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<ChowClass>(&s).unwrap(), a);
    }
}

#[test]
fn going_up_lands_in_econes() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let base = random_base(&mut rng);
        let e = random_complex(&mut rng, &base, 0).unwrap();
        let (sq, _) = random_square(&mut rng, &e, SquareKind::Scaled, 1).unwrap();
        let c = random_econe(&mut rng, &sq.target).unwrap();
        let up = going_up(&sq, &c).unwrap();
        assert!(is_econe(&EConeAction::new(up, sq.source.d.clone()).unwrap()).unwrap());
    }
}

#[test]
fn segre_ignores_redundant_generators() {
    let r = PolyRing::base(&["x0", "x1", "x2"]).unwrap();
    let i = Ideal::parse(r.clone(), &["x0*x2 - x1^2"]).unwrap();
    let c = normal_cone(&i, i.gens(), None).unwrap();
    let extra = c.ideal.gens()[0].mul(&c.ring().parse("x0 + 2*x1").unwrap());
    let mut gens = c.ideal.gens().to_vec();
    gens.push(extra);
    let c2 = Cone::new(c.space.clone(), gens).unwrap();
    assert_eq!(segre_class(&c, 3).unwrap(), segre_class(&c2, 3).unwrap());
}

#[test]
fn segre_parts_above_the_cone_dimension_vanish() {
    for name in ["conic", "twisted-cubic", "double-line"] {
        let (x, _) = fixture(name).unwrap().build().unwrap();
        let c = normal_cone(&x.ideal, &x.generators, None).unwrap();
        let s = segre_class(&c, 5).unwrap();
        let top = c.dimension() - 1;
        for m in 0..=x.n() as i64 {
            if m > top {
                assert!(s.part(m).is_zero(), "{name}: part {m} of {s}");
            }
        }
        assert_eq!(s.coeffs.len(), x.n() + 1);
    }
}

#[test]
fn segre_of_a_full_bundle() {
    let twists = [1u32, 2];
    for name in ["conic", "twisted-cubic"] {
        let (x, _) = fixture(name).unwrap().build().unwrap();
        let sheaf = PresentedModule::free(x.ideal.clone(), twists.len());
        let space = LinearSpace::from_module(sheaf, None, Some(twists.to_vec())).unwrap();
        let s = segre_class(&Cone::whole(&space), 9).unwrap();
        let c = chern_arith(ChernOp::Total(x.n(), &[1, 2])).unwrap();
        let fundamental = ChowClass::linear(x.n(), 1, if name == "conic" { 2 } else { 3 });
        let want = cap(&chern_arith(ChernOp::Inverse(&c)).unwrap(), &fundamental).unwrap();
        assert_eq!(s, want, "{name}");
    }
}

#[test]
fn no_class_below_the_virtual_dimension() {
    let mut cases = vec![two_conics().unwrap()];
    for name in ["double-line", "conic"] {
        cases.push(fixture(name).unwrap().build().unwrap());
    }
    for (x, d) in cases {
        let (cone, _) = global_normal_cone(&x, &d).unwrap();
        let NormalSpaceData::SectionOfBundle { twists, .. } = &d else { unreachable!() };
        let twists: Vec<i64> = twists.iter().map(|&t| i64::from(t)).collect();
        let full = cap(&ChernPoly::total(x.n(), &twists), &segre_class(&cone, 2).unwrap()).unwrap();
        let r = vfc_direct(&x, &d, 2).unwrap();
        assert!(!r.vfc.is_zero());
        for m in 0..r.rank {
            assert!(full.part(m).is_zero(), "part {m} of {full}");
        }
    }
}
