//! Virtual fundamental classes of the built-in fixtures, by the cone construction and by the
//! closed formula.

use conecalc::vfclasses::fixtures::{self, two_conics};
use conecalc::vfclasses::{vfc_closed_formula, vfc_direct};

fn main() -> conecalc::Result<()> {
    let mut cases = vec![("two-conics".to_string(), two_conics()?)];
    for f in fixtures::all() {
        cases.push((f.name.to_string(), f.build()?));
    }
    for (name, (x, d)) in cases {
        let direct = vfc_direct(&x, &d, 5)?;
        let closed = match vfc_closed_formula(&x, &d, 5) {
            Ok(r) => r.vfc.to_string(),
            Err(e) => format!("({e})"),
        };
        println!("{name:<14} rank {:>2}  direct {}  closed {closed}", direct.rank, direct.vfc);
    }
    Ok(())
}
