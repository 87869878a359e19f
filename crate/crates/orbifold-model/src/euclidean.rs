use crate::OrbifoldSignature;
use std::fmt;

/// The closed orientable Euclidean 2-orbifolds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EuclideanClass {
    T2,
    S2222,
    S333,
    S244,
    S236,
}

impl EuclideanClass {
    pub const ALL: [EuclideanClass; 5] =
        [EuclideanClass::T2, EuclideanClass::S2222, EuclideanClass::S333, EuclideanClass::S244, EuclideanClass::S236];

    /// k = |Γ/Γ₀| for Γ₀ ≅ ℤ² the translation subgroup.
    pub fn k(self) -> u32 {
        match self {
            EuclideanClass::T2 => 1,
            EuclideanClass::S2222 => 2,
            EuclideanClass::S333 => 3,
            EuclideanClass::S244 => 4,
            EuclideanClass::S236 => 6,
        }
    }

    pub fn cone_orders(self) -> &'static [u32] {
        match self {
            EuclideanClass::T2 => &[],
            EuclideanClass::S2222 => &[2, 2, 2, 2],
            EuclideanClass::S333 => &[3, 3, 3],
            EuclideanClass::S244 => &[2, 4, 4],
            EuclideanClass::S236 => &[2, 3, 6],
        }
    }

    pub fn signature(self) -> OrbifoldSignature {
        match self {
            EuclideanClass::T2 => OrbifoldSignature::torus(),
            other => OrbifoldSignature::sphere(other.cone_orders()),
        }
    }

    /// Recognizes T² and the four turnovers/pillowcase in any cone order.
    pub fn from_signature(o: &OrbifoldSignature) -> Option<Self> {
        if *o == OrbifoldSignature::torus() {
            return Some(EuclideanClass::T2);
        }
        let closed_sphere = o.underlying_orientable
            && o.underlying_genus == 0
            && o.underlying_boundary_circles == 0
            && !o.has_mirrors()
            && o.is_closed();
        if !closed_sphere {
            return None;
        }
        let mut cones = o.cones.clone();
        cones.sort_unstable();
        Self::ALL.into_iter().find(|e| e.cone_orders() == cones.as_slice())
    }

    /// Mirror quotient whose orientation double is `self`, when it is a polygon.
    pub fn mirror_quotient(self) -> Option<OrbifoldSignature> {
        match self {
            EuclideanClass::T2 => None,
            other => Some(OrbifoldSignature::mirror_polygon(other.cone_orders())),
        }
    }
}

impl fmt::Display for EuclideanClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signature())
    }
}
