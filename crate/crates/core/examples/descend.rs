//! Whether the normal cone of a scheme is pulled back from the T₁ quotient of its normal sheaf.

use conecalc::linecone::{descend_check, normal_cone, t1_quotient};
use conecalc::vfclasses::{Ambient, EmbeddedScheme};

fn main() -> conecalc::Result<()> {
    let cases: [(Ambient, &[&str], &[&str]); 3] = [
        (Ambient::Affine, &["x", "y"], &["x^2", "x*y", "y^2"]),
        (Ambient::Affine, &["x", "y"], &["x*y"]),
        (Ambient::Projective, &["x0", "x1", "x2"], &["x0*x2 - x1^2"]),
    ];
    for (ambient, vars, gens) in cases {
        let x = EmbeddedScheme::parse(ambient, vars, gens)?;
        let c = normal_cone(&x.ideal, &x.generators, None)?;
        let (kernel, q) = t1_quotient(&c)?;
        let d = descend_check(&q, &c)?;
        println!("{:<22} kernel rank {}  descends {}", gens.join(", "), kernel.len(), d.descends);
    }
    Ok(())
}
