use crate::{twisted_euler_closed_form, DimensionError};
use centralizer_dims::principal_mirror_interval;
use lie_catalog::{sigma, LieType};
use num_traits::Signed;
use orbifold_model::{euler_char, OrbifoldSignature};

/// A dimension with the summands that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimReport {
    pub value: i64,
    pub formula_trace: Vec<(String, i64)>,
    pub group: LieType,
    pub orbifold: OrbifoldSignature,
}

fn require_hyperbolic(o: &OrbifoldSignature) -> Result<(), DimensionError> {
    o.validate()?;
    if !euler_char(o).is_negative() {
        return Err(DimensionError::Geometry(format!("{o} is not hyperbolic (χ = {})", euler_char(o))));
    }
    Ok(())
}

/// dim Hit(O, G) = −χ(|O|)·dim G + Σ_α [Σ_i 2(d_α − ⌊d_α/k_i⌋)
///                + Σ_j (d_α − ⌊d_α/l_j⌋) + 2b⌊(d_α+1)/2⌋].
pub fn hitchin_dim(o: &OrbifoldSignature, g: &LieType) -> Result<DimReport, DimensionError> {
    require_hyperbolic(o)?;
    let ex = g.exponents();
    let per_exp = |f: &dyn Fn(i64) -> i64| ex.iter().map(|d| f(i64::from(d))).sum::<i64>();

    let mut trace = vec![("-chi(|O|)*dim G".to_string(), -o.underlying_euler_char() * g.dim() as i64)];
    for &k in &o.cones {
        let k = i64::from(k);
        trace.push((format!("cone {k}"), per_exp(&|d| 2 * (d - d / k))));
    }
    for &l in &o.corners {
        let l = i64::from(l);
        trace.push((format!("corner {}", 2 * l), per_exp(&|d| d - d / l)));
    }
    if o.mirror_intervals > 0 {
        let b = i64::from(o.mirror_intervals);
        trace.push((format!("{b} mirror interval(s)"), b * per_exp(&|d| 2 * ((d + 1) / 2))));
    }
    Ok(DimReport {
        value: trace.iter().map(|t| t.1).sum(),
        formula_trace: trace,
        group: *g,
        orbifold: o.clone(),
    })
}

/// −(n²−1)χ(|O|) + Σ(n² − σ(n,k_i)) + Σ(n² − σ(n,l_j))/2 + b⌊n²/2⌋.
pub fn hitchin_dim_pgl_closed_form(o: &OrbifoldSignature, n: u32) -> Result<i64, DimensionError> {
    require_hyperbolic(o)?;
    if n < 2 {
        return Err(DimensionError::Lie(lie_catalog::LieError::InvalidType(format!("PGL({n})"))));
    }
    let n = u64::from(n);
    let n2 = (n * n) as i64;
    let mut total = -(n2 - 1) * o.underlying_euler_char();
    for &k in &o.cones {
        total += n2 - sigma(n, k.into())? as i64;
    }
    for &l in &o.corners {
        // n² − σ(n,l) is even since σ(n,l) ≡ n (mod 2)
        total += (n2 - sigma(n, l.into())? as i64) / 2;
    }
    total += i64::from(o.mirror_intervals) * (n2 / 2);
    Ok(total)
}

/// −χ̃ − (c + b/2)·rank + ½·χ̃(∂O), with χ̃(∂O) summed over the mirror
/// intervals (boundary circles contribute 0).
pub fn relative_dim(o: &OrbifoldSignature, g: &LieType) -> Result<i64, DimensionError> {
    require_hyperbolic(o)?;
    let chi = twisted_euler_closed_form(o, g)?;
    let rank = g.rank() as i64;
    let c = i64::from(o.boundary_circles);
    let b = i64::from(o.mirror_intervals);
    let chi_boundary = b * principal_mirror_interval(g).chi_tilde;
    let twice = -2 * chi - (2 * c + b) * rank + chi_boundary;
    if twice % 2 != 0 {
        return Err(DimensionError::Inconsistent(format!("relative dimension of {o} for {g} is not an integer")));
    }
    Ok(twice / 2)
}
