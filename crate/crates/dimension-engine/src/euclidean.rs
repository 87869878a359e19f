use crate::DimensionError;
use centralizer_dims::stab_dim_cyclic;
use lie_catalog::LieType;
use orbifold_model::EuclideanClass;

/// dim 𝔤^{ρ(Γ)} at a horospherical cusp: the unipotent part fixes one line of
/// each Sym^{2d}, and the rotation of order k acts there by ζ^d.
pub fn euclidean_invariant_dim(e: EuclideanClass, g: &LieType) -> u64 {
    g.exponents().iter().filter(|d| d % e.k() == 0).count() as u64
}

/// χ̃ = (2 − #cones)·dim + Σ cyc(k_i) for the spheres, 0 for T².
pub fn euclidean_twisted_euler(e: EuclideanClass, g: &LieType) -> i64 {
    if e == EuclideanClass::T2 {
        return 0;
    }
    let cones = e.cone_orders();
    let cyc: u64 = cones.iter().map(|&k| stab_dim_cyclic(g, k).expect("cone orders are >= 2")).sum();
    (2 - cones.len() as i64) * g.dim() as i64 + cyc as i64
}

/// −χ̃ + 2·dim 𝔤^{ρ(Γ)}.
pub fn euclidean_char_dim(e: EuclideanClass, g: &LieType) -> i64 {
    -euclidean_twisted_euler(e, g) + 2 * euclidean_invariant_dim(e, g) as i64
}

/// −χ̃ + dim G + dim 𝔤^{ρ(Γ)}.
pub fn rep_variety_dim_euclidean(e: EuclideanClass, g: &LieType) -> i64 {
    -euclidean_twisted_euler(e, g) + g.dim() as i64 + euclidean_invariant_dim(e, g) as i64
}

/// For a finite orbifold group H¹ vanishes and H² ≅ H⁰, so χ̃ = 2·h⁰;
/// spherical boundary data violating this are rejected.
pub fn check_spherical_boundary(chi_tilde: i64, invariant_dim: u64) -> Result<(), DimensionError> {
    if chi_tilde != 2 * invariant_dim as i64 {
        return Err(DimensionError::Inconsistent(format!(
            "spherical data need χ̃ = 2·dim 𝔤^Γ, got χ̃ = {chi_tilde}, dim 𝔤^Γ = {invariant_dim}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use EuclideanClass::*;

    fn g(s: &str) -> LieType {
        s.parse().unwrap()
    }

    #[test]
    fn table_examples() {
        assert_eq!(euclidean_char_dim(S244, &g("PSp(10)")), 4);
        assert_eq!(euclidean_char_dim(T2, &g("E8")), 16);
        assert_eq!(euclidean_invariant_dim(T2, &g("E8")), 8);
        assert_eq!(euclidean_invariant_dim(S333, &g("E7")), 1);
        assert_eq!(euclidean_char_dim(S236, &g("PSL(3)")), 0);
        assert_eq!(euclidean_char_dim(S244, &g("G2")), 0);
    }

    #[test]
    fn rep_variety_examples() {
        for n in 2..30u32 {
            let nn = i64::from(n);
            assert_eq!(rep_variety_dim_euclidean(T2, &g(&format!("PSL({n})"))), nn * nn + nn - 2);
        }
        assert_eq!(rep_variety_dim_euclidean(S333, &g("PSL(3)")), 10);
        assert_eq!(rep_variety_dim_euclidean(T2, &g("G2")), 16);
    }

    #[test]
    fn spherical_check() {
        assert!(check_spherical_boundary(4, 2).is_ok());
        assert!(check_spherical_boundary(3, 2).is_err());
    }
}
