//! Dimensions of 𝔤^{ρ(H)} for the finite stabilizers of a 2-orbifold, where ρ
//! is the principal representation composed with a Fuchsian holonomy.
//!
//! A rotation of order k acts on Sym^{2d} with eigenvalues ζ^j, j = −d..d, so
//! it fixes 2⌊d/k⌋+1 dimensions. Adding a reflection halves the non-zero
//! weight spaces and keeps the zero weight exactly when d is even. Summing over
//! the exponents gives everything below.
//!
//! Only these principal points are modeled: no representation object exists.

use lie_catalog::LieType;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CentralizerError {
    #[error("stabilizer order must be >= 1")]
    ZeroOrder,
    #[error("inconsistent centralizer data: {0}")]
    Inconsistent(String),
}

/// Stabilizer of a point of a 2-orbifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StabKind {
    /// Cone point, C_k.
    Cyclic(u32),
    /// Corner reflector, dihedral of order 2k.
    Dihedral(u32),
    /// Mirror point, C_2 acting by a reflection.
    Reflection,
}

pub fn stab_dim(g: &LieType, kind: StabKind) -> Result<u64, CentralizerError> {
    match kind {
        StabKind::Cyclic(k) => stab_dim_cyclic(g, k),
        StabKind::Dihedral(k) => stab_dim_dihedral(g, k),
        StabKind::Reflection => Ok(reflection_dim(g)),
    }
}

/// Σ_α (2⌊d_α/k⌋ + 1).
pub fn stab_dim_cyclic(g: &LieType, k: u32) -> Result<u64, CentralizerError> {
    if k == 0 {
        return Err(CentralizerError::ZeroOrder);
    }
    Ok(g.exponents().iter().map(|d| 2 * u64::from(d / k) + 1).sum())
}

/// Σ_α ⌊d_α/k⌋ + #{α : d_α even}. With k = 1 this is the mirror-point value.
pub fn stab_dim_dihedral(g: &LieType, k: u32) -> Result<u64, CentralizerError> {
    if k == 0 {
        return Err(CentralizerError::ZeroOrder);
    }
    Ok(g.exponents().iter().map(|d| u64::from(d / k) + u64::from(d % 2 == 0)).sum())
}

/// Fixed dimension of a single reflection.
pub fn reflection_dim(g: &LieType) -> u64 {
    g.exponents().iter().map(|d| u64::from(d) + u64::from(d % 2 == 0)).sum()
}

/// Centralizer dimension of a corner reflector from its rotation subgroup and
/// the two reflections through its sides.
pub fn corner_center(dim_ck: i64, dim_s1: i64, dim_s2: i64, dim_g: i64) -> Result<i64, CentralizerError> {
    let twice = dim_ck + dim_s1 + dim_s2 - dim_g;
    if twice < 0 || twice % 2 != 0 {
        return Err(CentralizerError::Inconsistent(format!(
            "corner sum {dim_ck} + {dim_s1} + {dim_s2} - {dim_g} = {twice} is not a nonnegative even number"
        )));
    }
    Ok(twice / 2)
}

/// Twisted Euler characteristic and cohomology of the mirror interval ⟦0,1⟧.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DinftyDims {
    pub chi_tilde: i64,
    pub h0: i64,
    pub h1: i64,
}

/// Inputs are the fixed dimensions of the two endpoint reflections σ₁, σ₂, of
/// their product σ₁σ₂, and dim 𝔤.
pub fn dinfty_dims(dim_s1: i64, dim_s2: i64, dim_prod: i64, dim_g: i64) -> Result<DinftyDims, CentralizerError> {
    let h0_twice = dim_prod + dim_s1 + dim_s2 - dim_g;
    let h1_twice = dim_prod - dim_s1 - dim_s2 + dim_g;
    if h0_twice < 0 || h1_twice < 0 || h0_twice % 2 != 0 {
        return Err(CentralizerError::Inconsistent(format!(
            "infinite dihedral data ({dim_s1}, {dim_s2}, {dim_prod}, {dim_g}) gives 2h0 = {h0_twice}, 2h1 = {h1_twice}"
        )));
    }
    Ok(DinftyDims { chi_tilde: dim_s1 + dim_s2 - dim_g, h0: h0_twice / 2, h1: h1_twice / 2 })
}

/// [`dinfty_dims`] at a principal mirror interval: both endpoints are
/// reflections and σ₁σ₂ is regular, so its centralizer has dimension rank.
pub fn principal_mirror_interval(g: &LieType) -> DinftyDims {
    let refl = reflection_dim(g) as i64;
    dinfty_dims(refl, refl, g.rank() as i64, g.dim() as i64)
        .expect("principal mirror-interval data is always consistent")
}
