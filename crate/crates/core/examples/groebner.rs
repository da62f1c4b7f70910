//! Reduced Gröbner bases in two orders, plus saturation and elimination.

use conecalc::symkernel::{buchberger, GbConfig, Ideal, MonoOrder, PolyRing};

fn main() -> conecalc::Result<()> {
    let r = PolyRing::base(&["x", "y", "z"])?;
    let i = Ideal::parse(r.clone(), &["x^2 - y*z", "x*y - z^2", "y^2 - x*z"])?;
    for order in [MonoOrder::GrevLex, MonoOrder::Lex] {
        let gb = buchberger(i.gens(), &order, 3, &GbConfig::default())?;
        println!("{}:", order.tag());
        for g in &gb.polys {
            println!("  {}", r.format(g));
        }
    }
    // x·(y - 1) saturated by x is (y - 1); eliminating x from (x - y², x - z³) leaves y² - z³
    let j = Ideal::parse(r.clone(), &["x*y - x"])?;
    let sat = j.saturate(&Ideal::parse(r.clone(), &["x"])?)?;
    println!("saturation: {:?}", sat.gens().iter().map(|g| r.format(g)).collect::<Vec<_>>());
    let k = Ideal::parse(r.clone(), &["x - y^2", "x - z^3"])?.eliminate(&[true, false, false])?;
    println!("elimination: {:?}", k.gens().iter().map(|g| r.format(g)).collect::<Vec<_>>());
    Ok(())
}
