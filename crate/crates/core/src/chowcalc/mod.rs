//! Chern series, classes in the Chow group of projective space, and Segre classes of cones.

pub mod chern;
pub mod chow;
pub mod segre;

pub use chern::{chern_arith, BundleSpec, ChernOp, ChernPoly, VirtualBundle};
pub use chow::{cap, format_rat, parse_rat, ChowClass};
pub use segre::{multidegree, segre_class, Multidegree};
