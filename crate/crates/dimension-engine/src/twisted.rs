use crate::DimensionError;
use centralizer_dims::{reflection_dim, stab_dim_cyclic, stab_dim_dihedral};
use lie_catalog::LieType;
use num_traits::Signed;
use orbifold_model::{cell_decomposition, euler_char, CellStab, OrbifoldSignature};

/// Cells as (cell dimension, dim 𝔤^{ρ(Stab)}).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CellList {
    pub cells: Vec<(u8, u64)>,
}

impl CellList {
    pub fn new(cells: Vec<(u8, u64)>) -> Self {
        Self { cells }
    }
}

/// Σ (−1)^dim · stab_dim.
pub fn twisted_euler_cw(cells: &CellList) -> i64 {
    cells
        .cells
        .iter()
        .map(|&(d, s)| if d % 2 == 0 { s as i64 } else { -(s as i64) })
        .sum()
}

/// The orbifold CW structure of `o` decorated with principal centralizer
/// dimensions for `g`.
pub fn cells_for(o: &OrbifoldSignature, g: &LieType) -> Result<CellList, DimensionError> {
    let dim = g.dim();
    let refl = reflection_dim(g);
    let cells = cell_decomposition(o)?
        .into_iter()
        .map(|c| {
            let s = match c.stab {
                CellStab::Trivial => dim,
                CellStab::Cone(k) => stab_dim_cyclic(g, k)?,
                CellStab::Corner(l) => stab_dim_dihedral(g, l)?,
                CellStab::Mirror => refl,
            };
            Ok((c.dim, s))
        })
        .collect::<Result<Vec<_>, DimensionError>>()?;
    Ok(CellList::new(cells))
}

/// (χ(|O|) − cp − b)·dim + Σ cyc(k) + Σ dih(l) − (cr − b)·refl, for any
/// valid signature.
///
/// The nonsingular part of O has Euler characteristic χ(|O|) − cp − b once
/// cone points and the 2b interval endpoints are removed (each mirror interval
/// also contributes one extra mirror edge). Mirror edges outnumber mirror
/// vertices by cr − b.
pub fn twisted_euler_closed_form(o: &OrbifoldSignature, g: &LieType) -> Result<i64, DimensionError> {
    o.validate()?;
    let dim = g.dim() as i64;
    let refl = reflection_dim(g) as i64;
    let cp = o.cones.len() as i64;
    let cr = o.corners.len() as i64;
    let b = i64::from(o.mirror_intervals);
    let mut chi = (o.underlying_euler_char() - cp - b) * dim - (cr - b) * refl;
    for &k in &o.cones {
        chi += stab_dim_cyclic(g, k)? as i64;
    }
    for &l in &o.corners {
        chi += stab_dim_dihedral(g, l)? as i64;
    }
    Ok(chi)
}

/// χ̃(O, Adρ) at the principal point, for O with χ(O) ≤ 0.
pub fn twisted_euler_2orbifold(o: &OrbifoldSignature, g: &LieType) -> Result<i64, DimensionError> {
    if euler_char(o).is_positive() {
        return Err(DimensionError::Geometry(format!(
            "{o} has positive Euler characteristic; spherical data go through check_spherical_boundary"
        )));
    }
    twisted_euler_closed_form(o, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use orbifold_model::parse_signature;

    fn g(s: &str) -> LieType {
        s.parse().unwrap()
    }

    #[test]
    fn cw_examples() {
        assert_eq!(twisted_euler_cw(&CellList::new(vec![(0, 8), (1, 8), (2, 8)])), 8);
        assert_eq!(twisted_euler_cw(&CellList::new(vec![(1, 5), (0, 5)])), 0);
        // S²(3,3,4) at PSL(3): three singular vertices of dim 2, the rest (2 − 3)·8
        let mut cells = vec![(0, 2), (0, 2), (0, 2)];
        cells.extend([(0, 8), (1, 8), (1, 8), (1, 8), (2, 8)]);
        assert_eq!(twisted_euler_cw(&CellList::new(cells)), -2);
    }

    #[test]
    fn closed_form_examples() {
        let s334 = parse_signature("S2(3,3,4)").unwrap();
        assert_eq!(twisted_euler_2orbifold(&s334, &g("PSL(3)")), Ok(-2));
        assert_eq!(twisted_euler_2orbifold(&parse_signature("T2").unwrap(), &g("E8")), Ok(0));
        assert_eq!(twisted_euler_2orbifold(&parse_signature("T(3,3,4)").unwrap(), &g("PSL(3)")), Ok(-1));
        assert_eq!(twisted_euler_2orbifold(&parse_signature("D(3;4)").unwrap(), &g("PSL(3)")), Ok(-1));
        assert!(matches!(
            twisted_euler_2orbifold(&parse_signature("S2(2,3,5)").unwrap(), &g("PSL(3)")),
            Err(DimensionError::Geometry(_))
        ));
    }

    #[test]
    fn cells_agree_with_closed_form() {
        for s in ["S2(3,3,4)", "T(3,3,4)", "D(3;4)", "D(3;4);b=2", "D2(3,3)", "Sg(g=1,h=3,c=1,b=3,m=1)(2;3,4)"] {
            let o = parse_signature(s).unwrap();
            for grp in ["PSL(5)", "PSp(6)", "PO(8)", "G2", "E7"] {
                let cw = twisted_euler_cw(&cells_for(&o, &g(grp)).unwrap());
                assert_eq!(Ok(cw), twisted_euler_closed_form(&o, &g(grp)), "{s} {grp}");
            }
        }
    }
}
