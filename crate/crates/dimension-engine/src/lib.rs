//! Dimension formulas for character varieties of 2-orbifolds at principal
//! (Hitchin-type) representations.
//!
//! Everything reduces to the twisted Euler characteristic
//! χ̃(O, Adρ) = Σ_cells (−1)^dim · dim 𝔤^{ρ(Stab)}, evaluated with the
//! centralizer dimensions of [`centralizer_dims`].
//!
//! ```
//! use dimension_engine::hitchin_dim;
//! use orbifold_model::parse_signature;
//!
//! let o = parse_signature("S2(3,3,4)").unwrap();
//! let r = hitchin_dim(&o, &"PGL(12)".parse().unwrap()).unwrap();
//! assert_eq!(r.value, 14);
//! assert_eq!(r.formula_trace.iter().map(|t| t.1).sum::<i64>(), 14);
//! ```

mod euclidean;
mod growth;
mod hitchin;
mod twisted;

pub use euclidean::{
    check_spherical_boundary, euclidean_char_dim, euclidean_invariant_dim, euclidean_twisted_euler,
    rep_variety_dim_euclidean,
};
pub use growth::{growth_defect, growth_defect_n2, psp_growth_defect, psp_linear_coefficient};
pub use hitchin::{hitchin_dim, hitchin_dim_pgl_closed_form, relative_dim, DimReport};
pub use twisted::{cells_for, twisted_euler_2orbifold, twisted_euler_closed_form, twisted_euler_cw, CellList};

use centralizer_dims::CentralizerError;
use lie_catalog::LieError;
use orbifold_model::OrbifoldError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DimensionError {
    #[error("geometry: {0}")]
    Geometry(String),
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Orbifold(#[from] OrbifoldError),
    #[error(transparent)]
    Centralizer(#[from] CentralizerError),
    #[error(transparent)]
    Lie(#[from] LieError),
}
