//! Compact 2-orbifolds given by signature data, plus boundary lists of
//! 3-orbifolds.
//!
//! ```
//! use orbifold_model::{parse_signature, euler_char, classify_geometry, Geometry, Rational};
//!
//! let o = parse_signature("S2(3,3,4)").unwrap();
//! assert_eq!(euler_char(&o), Rational::new(-1, 12));
//! assert_eq!(classify_geometry(&o).unwrap(), Geometry::Hyperbolic);
//! ```

mod boundary;
mod cells;
mod euclidean;
mod euler;
mod parse;
mod render;
mod signature;

pub use boundary::{BoundaryComponent, BoundaryList};
pub use cells::{cell_decomposition, euler_char_cw, Cell, CellStab};
pub use euclidean::EuclideanClass;
pub use euler::{classify_geometry, euler_char, orientation_double, Geometry};
pub use parse::{parse_signature, ParseError};
pub use signature::OrbifoldSignature;

/// Exact rational numbers, always reduced with positive denominator.
pub type Rational = num_rational::Rational64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrbifoldError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid signature: {0}")]
    Invalid(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not implemented: {0}")]
    NotImplemented(String),
}
