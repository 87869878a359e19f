//! Components coming from Seifert fibred Dehn fillings: each filling fibres
//! over a hyperbolic 2-orbifold whose Hitchin component lifts to a component
//! of the character variety of the cusped manifold.

use crate::ThreeOrbifoldError;
use dimension_engine::hitchin_dim_pgl_closed_form;
use lie_catalog::sigma;
use orbifold_model::OrbifoldSignature;

/// Bases of the (±3), (±2), (±1) fillings of the figure-eight knot.
pub const FIG8_BASES: [[u32; 3]; 3] = [[3, 3, 4], [2, 4, 5], [2, 3, 7]];

/// Bases of the (−3), (−2), (−1) partial fillings of the Whitehead link:
/// D²(3,3), D²(2,4), D²(2,3).
pub const WHITEHEAD_BASES: [[u32; 2]; 3] = [[3, 3], [2, 4], [2, 3]];

fn check_n(n: u32) -> Result<(), ThreeOrbifoldError> {
    if n < 2 {
        return Err(ThreeOrbifoldError::SmallN(n));
    }
    Ok(())
}

/// Hitchin dimensions of S²(3,3,4), S²(2,4,5), S²(2,3,7) for PGL(n), from
/// n²(cp−2) + 2 − Σσ(n,kᵢ).
pub fn fig8_component_dims(n: u32) -> Result<(i64, i64, i64), ThreeOrbifoldError> {
    check_n(n)?;
    let n = u64::from(n);
    let n2 = (n * n) as i64;
    let dim = |ks: &[u32; 3]| -> i64 {
        n2 + 2 - ks.iter().map(|&k| sigma(n, k.into()).expect("k >= 2") as i64).sum::<i64>()
    };
    Ok((dim(&FIG8_BASES[0]), dim(&FIG8_BASES[1]), dim(&FIG8_BASES[2])))
}

/// Hitchin dimensions of D²(3,3), D²(2,4), D²(2,3) for PGL(n).
pub fn whitehead_component_dims(n: u32) -> Result<(i64, i64, i64), ThreeOrbifoldError> {
    check_n(n)?;
    let dim = |ks: &[u32; 2]| hitchin_dim_pgl_closed_form(&OrbifoldSignature::disc_with_boundary(ks, 1), n);
    Ok((dim(&WHITEHEAD_BASES[0])?, dim(&WHITEHEAD_BASES[1])?, dim(&WHITEHEAD_BASES[2])?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig8_values() {
        assert_eq!(fig8_component_dims(12), Ok((14, 8, 4)));
        assert_eq!(fig8_component_dims(3).unwrap().0, 2);
        assert!(fig8_component_dims(1).is_err());
    }

    #[test]
    fn whitehead_values() {
        assert_eq!(whitehead_component_dims(6).unwrap().0, 13);
        assert_eq!(whitehead_component_dims(7).unwrap().2, 8);
        assert_eq!(whitehead_component_dims(3), Ok((4, 2, 2)));
    }
}
