use crate::{hitchin_dim, DimensionError};
use lie_catalog::LieType;
use orbifold_model::{euler_char, OrbifoldSignature, Rational};

/// dim Hit(O, PGL(n)) + χ(O)·(n²−1). Bounded in n, in fact periodic.
pub fn growth_defect(o: &OrbifoldSignature, n: u32) -> Result<Rational, DimensionError> {
    let h = hitchin_dim(o, &LieType::psl(n)?)?.value;
    let n = i64::from(n);
    Ok(Rational::from_integer(h) + euler_char(o) * Rational::from_integer(n * n - 1))
}

/// dim Hit(O, PGL(n)) + χ(O)·n². Differs from [`growth_defect`] by the
/// constant χ(O).
pub fn growth_defect_n2(o: &OrbifoldSignature, n: u32) -> Result<Rational, DimensionError> {
    Ok(growth_defect(o, n)? + euler_char(o))
}

/// Σ_{k even} cp_k/k + Σ_{l even} cr_l/(2l) + b/2: the coefficient of m in
/// dim Hit(O, PSp(2m)) + χ(O)·dim PSp(2m).
pub fn psp_linear_coefficient(o: &OrbifoldSignature) -> Rational {
    let cones: Rational = o.cones.iter().filter(|&&k| k % 2 == 0).map(|&k| Rational::new(1, k.into())).sum();
    let corners: Rational =
        o.corners.iter().filter(|&&l| l % 2 == 0).map(|&l| Rational::new(1, (2 * l).into())).sum();
    cones + corners + Rational::new(o.mirror_intervals.into(), 2)
}

/// dim Hit(O, PSp(2m)) + χ(O)·(2m² + m) − [`psp_linear_coefficient`]·m.
/// Periodic in m.
pub fn psp_growth_defect(o: &OrbifoldSignature, m: u32) -> Result<Rational, DimensionError> {
    let g = LieType::psp(m)?;
    let h = hitchin_dim(o, &g)?.value;
    let mm = Rational::from_integer(m.into());
    Ok(Rational::from_integer(h) + euler_char(o) * Rational::from_integer(g.dim() as i64)
        - psp_linear_coefficient(o) * mm)
}
