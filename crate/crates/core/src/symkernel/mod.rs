//! Exact polynomial arithmetic, Gröbner bases, ideals and presented modules.

pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod modp;
pub mod module;
pub mod mono;
pub mod parse;
pub mod poly;
pub mod ring;

pub type Rat = num_rational::BigRational;

pub use groebner::{buchberger, GbConfig, GroebnerBasis};
pub use ideal::{ideal_ops, Ideal, IdealOp, OpResult, RingMap};
pub use mono::{Mono, MonoOrder};
pub use poly::Poly;
pub use ring::{Block, PolyRing, Ring, Var};

/// Shorthand for a rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}
pub use hilbert::{dimension_degree, standard_monomial_count, zero_dim_length, DimDegree};
pub use module::{map_diagnostics, kernel_vectors, MapDiagnostics, ModuleMap, PresentedModule, SubmoduleGb, Vector};
