//! Moves random E-cones along random squares of two-term complexes.
//!
//! Going up undoes going down on any square where going down applies. The other way round
//! only holds for quasi-isomorphisms.

use conecalc::linecone::random::{random_base, random_complex, random_econe, random_square, SquareKind};
use conecalc::linecone::{going_down, going_up};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> conecalc::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..4 {
        let base = random_base(&mut rng);
        let e = random_complex(&mut rng, &base, 0)?;
        let (sq, expected) = random_square(&mut rng, &e, SquareKind::Applicable, 1)?;
        let c = random_econe(&mut rng, &sq.source)?;
        let down = going_down(&sq, &c)?;
        let back = going_up(&sq, &down)?;
        println!(
            "#{i} applicable: dim {} down to {}, up again equals the start: {} (H^-1 injective: {})",
            c.dimension(),
            down.dimension(),
            back.ideal.equals(&c.ideal),
            !expected.killed_kernel,
        );
    }
    for i in 0..3 {
        let base = random_base(&mut rng);
        let e = random_complex(&mut rng, &base, 0)?;
        let (sq, _) = random_square(&mut rng, &e, SquareKind::QuasiIso, 1)?;
        let c = random_econe(&mut rng, &sq.target)?;
        let back = going_down(&sq, &going_up(&sq, &c)?)?;
        println!("#{i} quasi-iso: down after up equals the start: {}", back.ideal.equals(&c.ideal));
    }
    Ok(())
}
