//! The normal cone of the fat point `V(x², xy, y²)` in `A²`, as an ideal in the Rees-type
//! coordinates `A, B, C` over `k[X, Y]`.

use conecalc::linecone::normal_cone;
use conecalc::symkernel::{Ideal, PolyRing};

fn main() -> conecalc::Result<()> {
    let r = PolyRing::base(&["X", "Y"])?;
    let i = Ideal::parse(r, &["X^2", "X*Y", "Y^2"])?;
    let c = normal_cone(&i, i.gens(), Some(vec!["A".into(), "B".into(), "C".into()]))?;
    println!("dimension {}", c.dimension());
    for g in c.canonical_strings() {
        println!("  {g}");
    }
    Ok(())
}
