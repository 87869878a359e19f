//! Dimensions of canonical components of character varieties of hyperbolic
//! 3-orbifolds, computed from the boundary alone.
//!
//! The ambient 3-orbifold is never constructed. Callers pass its boundary as a
//! [`BoundaryList`] and assert hyperbolicity themselves; the report records that
//! assertion together with the other unchecked hypotheses.

mod seifert;

pub use seifert::{fig8_component_dims, whitehead_component_dims, FIG8_BASES, WHITEHEAD_BASES};

use dimension_engine::{euclidean_char_dim, twisted_euler_2orbifold, DimensionError};
use lie_catalog::LieType;
use orbifold_model::{BoundaryComponent, BoundaryList, EuclideanClass};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ThreeOrbifoldError {
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error("{0} is only defined for Euclidean boundary components")]
    NotEuclidean(String),
    #[error(transparent)]
    Dimension(#[from] DimensionError),
    #[error("n must be at least 2, got {0}")]
    SmallN(u32),
}

pub const ASSUMPTIONS: [&str; 3] = [
    "the 3-orbifold is hyperbolic (asserted by the caller, not verified)",
    "the representation is good, i.e. tau composed with the holonomy",
    "restrictions to Euclidean boundary components are strongly regular",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalReport {
    pub total: i64,
    /// (component, ½·dim of its character variety at the restriction)
    pub per_boundary: Vec<(String, i64)>,
    pub group: LieType,
    pub assumptions: Vec<String>,
}

/// Complex dimension of X(∂ᵢ, G) at the restriction of τ∘hol.
fn boundary_char_dim(c: &BoundaryComponent, g: &LieType) -> Result<i64, ThreeOrbifoldError> {
    Ok(match c {
        BoundaryComponent::Hyperbolic2(o) => -twisted_euler_2orbifold(o, g)?,
        BoundaryComponent::Euclidean2(e) => euclidean_char_dim(*e, g),
    })
}

/// dim X(O³, G) at [τ∘hol] = ½ Σᵢ dim X(∂ᵢO³, G).
pub fn canonical_dim(boundary: &BoundaryList, g: &LieType) -> Result<CanonicalReport, ThreeOrbifoldError> {
    let mut per_boundary = Vec::with_capacity(boundary.components().len());
    for c in boundary.components() {
        let d = boundary_char_dim(c, g)?;
        if d < 0 || d % 2 != 0 {
            return Err(ThreeOrbifoldError::Inconsistent(format!(
                "character variety of {c} has dimension {d} for {g}, expected a nonnegative even number"
            )));
        }
        per_boundary.push((c.to_string(), d / 2));
    }
    Ok(CanonicalReport {
        total: per_boundary.iter().map(|p| p.1).sum(),
        per_boundary,
        group: *g,
        assumptions: ASSUMPTIONS.iter().map(|s| s.to_string()).collect(),
    })
}

/// Lower bound ½·dim X(∂O³, G) for the dimension of any component through a
/// good representation. Same number as [`canonical_dim`].
pub fn lower_bound_dim(boundary: &BoundaryList, g: &LieType) -> Result<i64, ThreeOrbifoldError> {
    Ok(canonical_dim(boundary, g)?.total)
}

const SL3_PSL2_CLASSES: [EuclideanClass; 3] = [EuclideanClass::S2222, EuclideanClass::S244, EuclideanClass::S236];

/// True iff every component is S²(2,2,2,2), S²(2,4,4) or S²(2,3,6). In that
/// case the canonical dimensions for PSL(3) and PSL(2) are compared and a
/// mismatch is an error.
pub fn sl3_psl2_coincidence(boundary: &BoundaryList) -> Result<bool, ThreeOrbifoldError> {
    let mut all_listed = true;
    for c in boundary.components() {
        match c {
            BoundaryComponent::Euclidean2(e) => all_listed &= SL3_PSL2_CLASSES.contains(e),
            BoundaryComponent::Hyperbolic2(_) => {
                return Err(ThreeOrbifoldError::NotEuclidean("the PSL(3)/PSL(2) coincidence".into()))
            }
        }
    }
    if all_listed {
        let d3 = canonical_dim(boundary, &LieType::psl(3).expect("valid"))?.total;
        let d2 = canonical_dim(boundary, &LieType::psl(2).expect("valid"))?.total;
        if d3 != d2 {
            return Err(ThreeOrbifoldError::Inconsistent(format!(
                "canonical dimensions differ: {d3} for PSL(3), {d2} for PSL(2)"
            )));
        }
    }
    Ok(all_listed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(items: &[&str]) -> BoundaryList {
        BoundaryList::parse(items).unwrap()
    }

    fn psl(n: u32) -> LieType {
        LieType::psl(n).unwrap()
    }

    #[test]
    fn cusped_examples() {
        for n in 2..=60 {
            assert_eq!(canonical_dim(&b(&["T2"]), &psl(n)).unwrap().total, i64::from(n) - 1);
            assert_eq!(canonical_dim(&b(&["T2", "T2"]), &psl(n)).unwrap().total, 2 * i64::from(n) - 2);
        }
        let r = canonical_dim(&b(&["S2(3,3,3)", "S2(3,3,3)"]), &psl(3)).unwrap();
        assert_eq!(r.total, 2);
        assert_eq!(r.per_boundary, vec![("S2(3,3,3)".to_string(), 1), ("S2(3,3,3)".to_string(), 1)]);
        assert_eq!(r.assumptions.len(), 3);
    }

    #[test]
    fn surface_boundary() {
        assert_eq!(canonical_dim(&b(&["Sg(g=2)"]), &psl(2)).unwrap().total, 3);
        assert_eq!(lower_bound_dim(&b(&["S2(2,2,2,2)"]), &psl(3)), Ok(1));
        assert_eq!(lower_bound_dim(&b(&["S2(2,3,6)"]), &psl(3)), Ok(0));
    }

    #[test]
    fn coincidence() {
        assert_eq!(sl3_psl2_coincidence(&b(&["S2(2,4,4)"])), Ok(true));
        assert_eq!(sl3_psl2_coincidence(&b(&["S2(2,2,2,2)", "S2(2,3,6)"])), Ok(true));
        assert_eq!(sl3_psl2_coincidence(&b(&["S2(3,3,3)"])), Ok(false));
        assert_eq!(sl3_psl2_coincidence(&b(&["T2"])), Ok(false));
        assert!(sl3_psl2_coincidence(&b(&["S2(3,3,4)"])).is_err());
    }
}
