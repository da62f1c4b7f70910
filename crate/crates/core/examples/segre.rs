//! Segre classes of a few subschemes, pushed forward to the ambient space.
//!
//! Pass a seed as the first argument to rerun the random slicing differently; the classes
//! must not change.

use conecalc::chowcalc::segre_class;
use conecalc::linecone::normal_cone;
use conecalc::vfclasses::{Ambient, EmbeddedScheme};

fn main() -> conecalc::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let cases: [(Ambient, &[&str], &[&str]); 4] = [
        (Ambient::Projective, &["x0", "x1", "x2"], &["x0*x2 - x1^2"]),
        (Ambient::Projective, &["x0", "x1", "x2"], &["x0^2"]),
        (Ambient::Affine, &["x", "y"], &["x^2", "x*y", "y^2"]),
        (Ambient::Affine, &["x", "y"], &["x^3", "y^2"]),
    ];
    for (ambient, vars, gens) in cases {
        let x = EmbeddedScheme::parse(ambient, vars, gens)?;
        let s = segre_class(&normal_cone(&x.ideal, &x.generators, None)?, seed)?;
        println!("s({}) = {s}", gens.join(", "));
    }
    Ok(())
}
