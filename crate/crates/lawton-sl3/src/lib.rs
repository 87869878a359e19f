//! Trace coordinates on the SL(3,ℂ) character variety of the free group F₂ = ⟨a, b⟩.
//!
//! The eight traces of a, b, ab, their inverses, ab⁻¹ and a⁻¹b generate the
//! invariant ring except for τ = tr[a,b], which satisfies τ² − Pτ + Q = 0.
//! [`eval_p`] and [`eval_q`] evaluate P and Q over any [`Ring`]. The module
//! also checks the identity on random matrix pairs and verifies a list of
//! special points exactly in quadratic number fields.

mod matrix;
mod paper_points;
mod poly;
mod ring;
mod selftest;

pub use matrix::{
    cayley_hamilton_residual, lawton_residual, random_unimodular, trace_coords, trace_coords_exact, Mat3, Sl3Matrix,
    SINGULAR_CUTOFF,
};
pub use paper_points::{verify_paper_points, PointCheck, PointsReport};
pub use poly::{parse_polynomial, p_polynomial, q_polynomial, Exponents, Polynomial, P_DISPLAY, Q_DISPLAY, VARIABLES};
pub use ring::{Eisenstein, Gaussian, Quad, Ring, Sqrt2, UniPoly};
pub use selftest::{run_selftest, SelftestReport, SHARD_SIZE};

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LawtonError {
    #[error("matrix is not in SL(3): {0}")]
    NotUnimodular(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

/// (x, y, z, u, v, w, r, s) together with τ.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceCoords<T> {
    pub x: T,
    pub y: T,
    pub z: T,
    pub u: T,
    pub v: T,
    pub w: T,
    pub r: T,
    pub s: T,
    pub tau: T,
}

pub type TraceCoordinates = TraceCoords<Complex64>;

impl<T: Ring> TraceCoords<T> {
    /// Point with the given (x, y, z, u, v, w, r, s); τ is set to zero.
    pub fn from_array(c: [T; 8]) -> Self {
        let [x, y, z, u, v, w, r, s] = c;
        Self { x, y, z, u, v, w, r, s, tau: T::zero() }
    }

    pub fn with_tau(mut self, tau: T) -> Self {
        self.tau = tau;
        self
    }

    pub fn to_array(&self) -> [T; 8] {
        [&self.x, &self.y, &self.z, &self.u, &self.v, &self.w, &self.r, &self.s].map(|t| t.clone())
    }
}

pub fn eval_p<T: Ring>(c: &TraceCoords<T>) -> T {
    p_polynomial().eval(&c.to_array())
}

pub fn eval_q<T: Ring>(c: &TraceCoords<T>) -> T {
    q_polynomial().eval(&c.to_array())
}

/// τ² − Pτ + Q at the stored τ.
pub fn lawton_defect<T: Ring>(c: &TraceCoords<T>) -> T {
    c.tau.clone() * c.tau.clone() - eval_p(c) * c.tau.clone() + eval_q(c)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// relative, for identities on random matrices
    pub random_relative: f64,
    /// absolute, Cayley–Hamilton on random matrices
    pub cayley_hamilton: f64,
    /// absolute, float fallback at fixed algebraic points
    pub fixed_absolute: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { random_relative: 1e-8, cayley_hamilton: 1e-9, fixed_absolute: 1e-10 }
    }
}
