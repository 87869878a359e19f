use crate::{OrbifoldError, OrbifoldSignature, Rational};

/// Local group at a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellStab {
    Trivial,
    /// C_k
    Cone(u32),
    /// Dihedral of order 2l.
    Corner(u32),
    /// C_2 generated by a reflection.
    Mirror,
}

impl CellStab {
    pub fn order(self) -> u32 {
        match self {
            CellStab::Trivial => 1,
            CellStab::Cone(k) => k,
            CellStab::Corner(l) => 2 * l,
            CellStab::Mirror => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub dim: u8,
    pub stab: CellStab,
}

/// An explicit orbifold CW structure on O.
///
/// One basepoint and one 2-cell; the 1-skeleton has the 2g (or k) surface
/// loops, an arc to each cone point, and an arc to each underlying boundary
/// circle. Boundary circles are subdivided so that stabilizers are constant
/// on open cells:
/// - orbifold boundary circle: one vertex, one edge;
/// - full mirror circle with no corners: one mirror vertex, one mirror edge;
/// - full mirror circle with corners: a vertex per corner, as many mirror edges;
/// - mixed circle with b arcs: 2b mirror endpoints plus its corners as
///   vertices, b free edges and b + corners mirror edges.
pub fn cell_decomposition(o: &OrbifoldSignature) -> Result<Vec<Cell>, OrbifoldError> {
    o.validate()?;
    let mut cells = Vec::new();
    let mut push = |dim: u8, stab: CellStab, count: u32| {
        cells.extend(std::iter::repeat_n(Cell { dim, stab }, count as usize));
    };

    push(0, CellStab::Trivial, 1);
    let loops = if o.underlying_orientable { 2 * o.underlying_genus } else { o.underlying_genus };
    push(1, CellStab::Trivial, loops);
    for &k in &o.cones {
        push(0, CellStab::Cone(k), 1);
        push(1, CellStab::Trivial, 1);
    }
    push(1, CellStab::Trivial, o.underlying_boundary_circles);

    push(0, CellStab::Trivial, o.boundary_circles);
    push(1, CellStab::Trivial, o.boundary_circles);

    // All corners on the first mirror-bearing circle; surplus intervals on the
    // first mixed circle.
    let mixed = o.mixed_circles();
    let mut corners_left: Option<&[u32]> = Some(&o.corners);
    for _ in 0..o.full_mirror_circles {
        let corners = corners_left.take().unwrap_or(&[]);
        if corners.is_empty() {
            push(0, CellStab::Mirror, 1);
            push(1, CellStab::Mirror, 1);
        } else {
            for &l in corners {
                push(0, CellStab::Corner(l), 1);
            }
            push(1, CellStab::Mirror, corners.len() as u32);
        }
    }
    for i in 0..mixed {
        let arcs = if i == 0 { o.mirror_intervals - (mixed - 1) } else { 1 };
        let corners = corners_left.take().unwrap_or(&[]);
        push(0, CellStab::Mirror, 2 * arcs);
        for &l in corners {
            push(0, CellStab::Corner(l), 1);
        }
        push(1, CellStab::Trivial, arcs);
        push(1, CellStab::Mirror, arcs + corners.len() as u32);
    }

    push(2, CellStab::Trivial, 1);
    Ok(cells)
}

/// χ(O) = Σ_cells (−1)^dim / |Stab|, evaluated on [`cell_decomposition`].
pub fn euler_char_cw(o: &OrbifoldSignature) -> Result<Rational, OrbifoldError> {
    Ok(cell_decomposition(o)?
        .iter()
        .map(|c| {
            let sign = if c.dim % 2 == 0 { 1 } else { -1 };
            Rational::new(sign, c.stab.order().into())
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_signature;

    #[test]
    fn topological_euler_characteristic_of_cells() {
        for s in ["S2(3,3,4)", "T2", "Ng(g=3)(2)", "D2(3,3)", "T(3,3,4)", "D(3;4);b=2", "Sg(g=1,h=3,c=1,b=3,m=1)(2;3)"] {
            let o = parse_signature(s).unwrap();
            let cells = cell_decomposition(&o).unwrap();
            let top: i64 = cells.iter().map(|c| if c.dim % 2 == 0 { 1 } else { -1 }).sum();
            assert_eq!(top, o.underlying_euler_char(), "{s}");
        }
    }

    #[test]
    fn rational_euler_from_cells() {
        let o = parse_signature("T(3,3,4)").unwrap();
        assert_eq!(euler_char_cw(&o).unwrap(), Rational::new(-1, 24));
    }
}
