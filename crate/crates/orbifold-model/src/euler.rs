use crate::{OrbifoldError, OrbifoldSignature, Rational};
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Geometry {
    Spherical,
    Euclidean,
    Hyperbolic,
    Bad,
}

/// χ(O) = χ(|O|) − Σ(1 − 1/k) − ½Σ(1 − 1/l) − b/2.
pub fn euler_char(o: &OrbifoldSignature) -> Rational {
    let one = Rational::from_integer(1);
    let half = Rational::new(1, 2);
    let cones: Rational = o.cones.iter().map(|&k| one - Rational::new(1, k.into())).sum();
    let corners: Rational = o.corners.iter().map(|&l| one - Rational::new(1, l.into())).sum();
    Rational::from_integer(o.underlying_euler_char())
        - cones
        - half * corners
        - half * Rational::from_integer(o.mirror_intervals.into())
}

/// Teardrops, spindles with unequal orders, and the mirror discs they cover
/// are bad; everything else is classified by the sign of χ.
pub fn classify_geometry(o: &OrbifoldSignature) -> Result<Geometry, OrbifoldError> {
    o.validate()?;
    if !o.is_closed() {
        return Err(OrbifoldError::Unsupported(
            "geometry classification needs a closed orbifold (no boundary circles or mirror intervals)".into(),
        ));
    }
    let sphere = o.underlying_orientable && o.underlying_genus == 0 && o.underlying_boundary_circles == 0;
    let mirror_disc = o.underlying_orientable
        && o.underlying_genus == 0
        && o.underlying_boundary_circles == 1
        && o.full_mirror_circles == 1
        && o.cones.is_empty();
    let unbalanced = |orders: &[u32]| match orders {
        [_] => true,
        [a, b] => a != b,
        _ => false,
    };
    if (sphere && o.corners.is_empty() && unbalanced(&o.cones)) || (mirror_disc && unbalanced(&o.corners)) {
        return Ok(Geometry::Bad);
    }
    let chi = euler_char(o);
    Ok(if chi.is_zero() {
        Geometry::Euclidean
    } else if chi.is_positive() {
        Geometry::Spherical
    } else {
        Geometry::Hyperbolic
    })
}

/// Orientation double cover for the shapes that occur in practice:
/// - orientable |O| whose boundary circles are all full mirrors (polygons,
///   mirror discs with cones, their higher-genus analogues);
/// - closed non-orientable |O| without mirrors.
///
/// Corners of order 2l become cone points of order l; interior cone points
/// are duplicated.
pub fn orientation_double(o: &OrbifoldSignature) -> Result<OrbifoldSignature, OrbifoldError> {
    o.validate()?;
    if o.orbifold_orientable() {
        return Err(OrbifoldError::Unsupported("signature is already orientable".into()));
    }
    let mut cones = o.cones.clone();
    cones.extend_from_slice(&o.cones);
    let no_boundary = o.boundary_circles == 0 && o.mirror_intervals == 0;

    if o.underlying_orientable
        && no_boundary
        && o.full_mirror_circles == o.underlying_boundary_circles
        && o.full_mirror_circles > 0
    {
        cones.extend_from_slice(&o.corners);
        let genus = 2 * o.underlying_genus + o.underlying_boundary_circles - 1;
        return Ok(OrbifoldSignature { underlying_genus: genus, cones, ..OrbifoldSignature::surface(0) });
    }
    if !o.underlying_orientable && !o.has_mirrors() && no_boundary && o.underlying_boundary_circles == 0 {
        return Ok(OrbifoldSignature { underlying_genus: o.underlying_genus - 1, cones, ..OrbifoldSignature::surface(0) });
    }
    Err(OrbifoldError::NotImplemented(
        "orientation double is only implemented for full-mirror boundaries and closed non-orientable surfaces".into(),
    ))
}
