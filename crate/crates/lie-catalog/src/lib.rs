//! Simple complex adjoint Lie groups described by their exponents.
//!
//! Under the principal embedding of PSL(2,ℂ), the adjoint representation of a
//! simple group splits as ⊕ Sym^{2d} over the exponents d. Every dimension this
//! workspace computes is a function of that list, so a [`LieType`] is little
//! more than a validated family tag plus the list it determines.
//!
//! ```
//! use lie_catalog::LieType;
//!
//! let g: LieType = "PSp(10)".parse().unwrap();
//! assert_eq!(g.exponents().values(), &[1, 3, 5, 7, 9]);
//! assert_eq!(g.dim(), 55);
//! assert_eq!(g.rank(), 5);
//! ```

mod parse;

use std::fmt;

pub use parse::parse_lie_type;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("invalid Lie type: {0}")]
    InvalidType(String),
    #[error("cannot parse Lie type {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("sigma(n, k) requires k >= 1")]
    ZeroDivisor,
}

/// Group families. The parameter stored in [`LieType`] is `n` for `Psl` and
/// `m` for the other classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// PSL(n), n ≥ 2.
    Psl,
    /// PSp(2m), m ≥ 1.
    Psp,
    /// PO(2m+1), m ≥ 1.
    PoOdd,
    /// PO(2m), m ≥ 3.
    PoEven,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn is_exceptional(self) -> bool {
        matches!(self, Family::G2 | Family::F4 | Family::E6 | Family::E7 | Family::E8)
    }

    /// Smallest admissible parameter for a classical family.
    pub fn min_param(self) -> Option<u32> {
        match self {
            Family::Psl => Some(2),
            Family::Psp | Family::PoOdd => Some(1),
            Family::PoEven => Some(3),
            _ => None,
        }
    }

    pub const EXCEPTIONAL: [Family; 5] =
        [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8];
}

/// Ordered exponent list d_1 ≤ … ≤ d_r (PO(2m) lists m−1 last, as tabulated).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponents(Vec<u32>);

impl Exponents {
    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn max(&self) -> u32 {
        self.iter().max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    param: Option<u32>,
}

impl LieType {
    /// Validating constructor. Exceptional families take no parameter.
    pub fn new(family: Family, param: Option<u32>) -> Result<Self, LieError> {
        match (family.min_param(), param) {
            (None, None) => Ok(Self { family, param }),
            (None, Some(p)) => Err(LieError::InvalidType(format!(
                "{family:?} takes no parameter (got {p})"
            ))),
            (Some(_), None) => Err(LieError::InvalidType(format!(
                "{family:?} needs a parameter"
            ))),
            (Some(lo), Some(p)) if p < lo => Err(LieError::InvalidType(format!(
                "{family:?} needs parameter >= {lo} (got {p})"
            ))),
            (Some(_), Some(_)) => Ok(Self { family, param }),
        }
    }

    pub fn psl(n: u32) -> Result<Self, LieError> {
        Self::new(Family::Psl, Some(n))
    }

    pub fn psp(m: u32) -> Result<Self, LieError> {
        Self::new(Family::Psp, Some(m))
    }

    pub fn po_odd(m: u32) -> Result<Self, LieError> {
        Self::new(Family::PoOdd, Some(m))
    }

    pub fn po_even(m: u32) -> Result<Self, LieError> {
        Self::new(Family::PoEven, Some(m))
    }

    pub fn exceptional(family: Family) -> Result<Self, LieError> {
        Self::new(family, None)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `n` for PSL(n), `m` for the other classical families.
    pub fn param(&self) -> Option<u32> {
        self.param
    }

    pub fn exponents(&self) -> Exponents {
        let p = self.param.unwrap_or(0);
        let v = match self.family {
            Family::Psl => (1..p).collect(),
            Family::Psp | Family::PoOdd => (0..p).map(|i| 2 * i + 1).collect(),
            Family::PoEven => {
                let mut v: Vec<u32> = (0..p - 1).map(|i| 2 * i + 1).collect();
                v.push(p - 1);
                v
            }
            Family::G2 => vec![1, 5],
            Family::F4 => vec![1, 5, 7, 11],
            Family::E6 => vec![1, 4, 5, 7, 8, 11],
            Family::E7 => vec![1, 5, 7, 9, 11, 13, 17],
            Family::E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
        };
        Exponents(v)
    }

    pub fn rank(&self) -> u64 {
        self.exponents().values().len() as u64
    }

    /// Σ (2d + 1) over the exponents.
    pub fn dim(&self) -> u64 {
        self.exponents().iter().map(|d| 2 * d as u64 + 1).sum()
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.param.unwrap_or(0);
        match self.family {
            Family::Psl => write!(f, "PSL({p})"),
            Family::Psp => write!(f, "PSp({})", 2 * p),
            Family::PoOdd => write!(f, "PO({})", 2 * p + 1),
            Family::PoEven => write!(f, "PO({})", 2 * p),
            other => write!(f, "{other:?}"),
        }
    }
}

impl std::str::FromStr for LieType {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_lie_type(s)
    }
}

/// σ(n, k) = q·n + (q+1)·r where n = q·k + r, 0 ≤ r < k.
///
/// σ(n, k) − 1 is the centralizer dimension in PGL(n) of the image of an
/// order-k rotation under the principal representation.
pub fn sigma(n: u64, k: u64) -> Result<u64, LieError> {
    if k == 0 {
        return Err(LieError::ZeroDivisor);
    }
    let (q, r) = (n / k, n % k);
    Ok(q * n + (q + 1) * r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_exponents() {
        assert_eq!(LieType::psl(4).unwrap().exponents().values(), &[1, 2, 3]);
        assert_eq!(LieType::po_even(4).unwrap().exponents().values(), &[1, 3, 5, 3]);
        assert_eq!(LieType::po_odd(2).unwrap().exponents().values(), &[1, 3]);
        assert_eq!(LieType::psl(2).unwrap().exponents().values(), &[1]);
    }

    #[test]
    fn exceptional_dims() {
        let want = [(Family::G2, 14, 2), (Family::F4, 52, 4), (Family::E6, 78, 6), (Family::E7, 133, 7), (Family::E8, 248, 8)];
        for (fam, dim, rank) in want {
            let g = LieType::exceptional(fam).unwrap();
            assert_eq!((g.dim(), g.rank()), (dim, rank), "{g}");
        }
    }

    #[test]
    fn classical_dims() {
        assert_eq!(LieType::psl(4).unwrap().dim(), 15);
        assert_eq!(LieType::po_even(4).unwrap().dim(), 28);
        assert_eq!(LieType::po_odd(5).unwrap().dim(), 55);
        assert_eq!(LieType::psp(3).unwrap().dim(), 21);
    }

    #[test]
    fn bounds_rejected() {
        assert!(LieType::psl(1).is_err());
        assert!(LieType::po_even(2).is_err());
        assert!(LieType::psp(0).is_err());
        assert!(LieType::new(Family::G2, Some(2)).is_err());
        assert!(LieType::new(Family::Psl, None).is_err());
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(6, 3), Ok(12));
        assert_eq!(sigma(7, 4), Ok(13));
        assert_eq!(sigma(9, 1), Ok(81));
        assert_eq!(sigma(3, 5), Ok(3));
        assert_eq!(sigma(4, 0), Err(LieError::ZeroDivisor));
    }

    #[test]
    fn display_round_trips() {
        for s in ["PSL(7)", "PSp(10)", "PO(9)", "PO(8)", "E7"] {
            assert_eq!(s.parse::<LieType>().unwrap().to_string(), s);
        }
    }
}
