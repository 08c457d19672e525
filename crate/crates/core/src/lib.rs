//! Finite group schemes as finite-dimensional Hopf algebras over exact
//! fields, and their actions on rings, fields and affine varieties.

pub mod catalog;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hopf;
pub mod linalg;
pub mod operators;
pub mod parse;
pub mod poly;
pub mod prolongation;

pub use error::{Error, Result};
pub use field::{Field, FieldElem};
pub use groebner::{GroebnerBasis, Ideal};
pub use linalg::Matrix;
pub use poly::{Monomial, MonomialOrder, Poly, PolyRing};
