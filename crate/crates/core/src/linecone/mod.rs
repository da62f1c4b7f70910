//! Linear spaces, cones, two-term complexes and the transfer of cones along them.

pub mod complex;
pub mod cone;
pub mod random;
pub mod space;
pub mod transfer;

pub use complex::{complex_diagnostics, is_quasi_iso, ComplexDiagnostics, ComplexSquare, DerivedMorphism, TwoTerm};
pub use cone::{conormal_module, is_econe, normal_cone, syzygies, t1_quotient, tangent_action, Cone, EConeAction};
pub use space::{substitution, LinSpaceHom, LinearSpace, Stack};
pub use transfer::{
    descend_check, going_down, going_down_applicable, going_down_certified, going_down_derived, going_up, pullback,
    Descent, GoingDown,
};
