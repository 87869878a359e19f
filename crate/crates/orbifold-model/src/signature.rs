use crate::OrbifoldError;

/// Combinatorial data of a compact 2-orbifold.
///
/// Each boundary circle of the underlying surface |O| is one of
/// - a boundary circle of the orbifold (`boundary_circles`),
/// - a circle made entirely of mirror points (`full_mirror_circles`), or
/// - a mixed circle alternating mirror arcs with free arcs; each free arc is a
///   mirror interval ⟦0,1⟧ of the orbifold boundary.
///
/// The number of mixed circles is not stored: it is
/// `underlying_boundary_circles − boundary_circles − full_mirror_circles`.
/// Corners lie on mirror-bearing circles; which circle carries which corner
/// does not affect any quantity computed here.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OrbifoldSignature {
    pub underlying_orientable: bool,
    /// Genus if orientable, number of cross-caps otherwise.
    pub underlying_genus: u32,
    pub underlying_boundary_circles: u32,
    /// Cone orders k_i ≥ 2.
    pub cones: Vec<u32>,
    /// Corner reflectors of order 2l_j, stored as l_j ≥ 2.
    pub corners: Vec<u32>,
    /// c
    pub boundary_circles: u32,
    /// b
    pub mirror_intervals: u32,
    pub full_mirror_circles: u32,
}

impl OrbifoldSignature {
    /// S²(k₁,…,k_n).
    pub fn sphere(cones: &[u32]) -> Self {
        Self { underlying_orientable: true, cones: cones.to_vec(), ..Default::default() }
    }

    pub fn torus() -> Self {
        Self::surface(1)
    }

    /// Closed orientable surface of genus g.
    pub fn surface(genus: u32) -> Self {
        Self { underlying_orientable: true, underlying_genus: genus, ..Default::default() }
    }

    /// Connected sum of `crosscaps` projective planes with cone points.
    pub fn nonorientable(crosscaps: u32, cones: &[u32]) -> Self {
        Self { underlying_orientable: false, underlying_genus: crosscaps, cones: cones.to_vec(), ..Default::default() }
    }

    /// Disc (or planar surface with `c` holes) with cone points; every hole is
    /// an orbifold boundary circle.
    pub fn disc_with_boundary(cones: &[u32], c: u32) -> Self {
        Self {
            underlying_orientable: true,
            underlying_boundary_circles: c,
            boundary_circles: c,
            cones: cones.to_vec(),
            ..Default::default()
        }
    }

    /// Disc whose boundary circle is a mirror with the given corners.
    pub fn mirror_polygon(corners: &[u32]) -> Self {
        Self::mirror_disc(&[], corners, 0)
    }

    /// Disc with cone points and a mirror boundary carrying corners. When
    /// `b > 0` the boundary circle is mixed and contributes `b` mirror
    /// intervals to ∂O.
    pub fn mirror_disc(cones: &[u32], corners: &[u32], b: u32) -> Self {
        Self {
            underlying_orientable: true,
            underlying_boundary_circles: 1,
            cones: cones.to_vec(),
            corners: corners.to_vec(),
            mirror_intervals: b,
            full_mirror_circles: u32::from(b == 0),
            ..Default::default()
        }
    }

    pub fn mixed_circles(&self) -> u32 {
        self.underlying_boundary_circles
            .saturating_sub(self.boundary_circles + self.full_mirror_circles)
    }

    /// True when the orbifold has empty boundary (mirrors are allowed).
    pub fn is_closed(&self) -> bool {
        self.boundary_circles == 0 && self.mirror_intervals == 0
    }

    pub fn has_mirrors(&self) -> bool {
        !self.corners.is_empty() || self.mirror_intervals > 0 || self.full_mirror_circles > 0
    }

    pub fn orbifold_orientable(&self) -> bool {
        self.underlying_orientable && !self.has_mirrors()
    }

    /// χ(|O|).
    pub fn underlying_euler_char(&self) -> i64 {
        let g = i64::from(self.underlying_genus);
        let h = i64::from(self.underlying_boundary_circles);
        if self.underlying_orientable {
            2 - 2 * g - h
        } else {
            2 - g - h
        }
    }

    pub fn validate(&self) -> Result<(), OrbifoldError> {
        let bad = |msg: String| Err(OrbifoldError::Invalid(msg));
        if let Some(k) = self.cones.iter().find(|&&k| k < 2) {
            return bad(format!("cone order {k} < 2"));
        }
        if let Some(l) = self.corners.iter().find(|&&l| l < 2) {
            return bad(format!("corner order {l} < 2"));
        }
        if !self.underlying_orientable && self.underlying_genus == 0 {
            return bad("a non-orientable surface needs at least one cross-cap".into());
        }
        let tagged = self.boundary_circles + self.full_mirror_circles;
        if tagged > self.underlying_boundary_circles {
            return bad(format!(
                "{} boundary + {} mirror circles exceed {} underlying boundary circles",
                self.boundary_circles, self.full_mirror_circles, self.underlying_boundary_circles
            ));
        }
        let mixed = self.mixed_circles();
        if self.mirror_intervals == 0 && mixed > 0 {
            return bad(format!("{mixed} underlying boundary circle(s) left untagged"));
        }
        if mixed > self.mirror_intervals {
            return bad(format!("{mixed} mixed circles need at least {mixed} mirror intervals"));
        }
        if self.mirror_intervals > 0 && mixed == 0 {
            return bad("mirror intervals need a mixed boundary circle".into());
        }
        if !self.corners.is_empty() && self.full_mirror_circles + mixed == 0 {
            return bad("corner reflectors need a mirror boundary circle".into());
        }
        Ok(())
    }
}
