//! Fulton's class `c(T_M) ∩ s(X, M)` for curves in the plane and in space.
//! For a smooth curve the degree-zero part is the Euler characteristic.

use conecalc::vfclasses::{fulton_class, Ambient, EmbeddedScheme};

fn main() -> conecalc::Result<()> {
    let cases: [(&str, &[&str], &[&str]); 4] = [
        ("line", &["x0", "x1", "x2"], &["x0"]),
        ("conic", &["x0", "x1", "x2"], &["x0*x2 - x1^2"]),
        ("plane cubic", &["x0", "x1", "x2"], &["x0^3 + x1^3 + x2^3"]),
        ("twisted cubic", &["x0", "x1", "x2", "x3"], &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]),
    ];
    for (name, vars, gens) in cases {
        let x = EmbeddedScheme::parse(Ambient::Projective, vars, gens)?;
        let c = fulton_class(&x, 3)?;
        println!("{name:<14} {c}");
    }
    Ok(())
}
