use crate::{euler_char, parse_signature, EuclideanClass, OrbifoldError, OrbifoldSignature};
use num_traits::Signed;
use std::fmt;

/// A boundary component of a compact orientable 3-orbifold.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BoundaryComponent {
    /// Closed orientable with χ < 0.
    Hyperbolic2(OrbifoldSignature),
    Euclidean2(EuclideanClass),
}

impl BoundaryComponent {
    pub fn from_signature(o: &OrbifoldSignature) -> Result<Self, OrbifoldError> {
        o.validate()?;
        if let Some(e) = EuclideanClass::from_signature(o) {
            return Ok(Self::Euclidean2(e));
        }
        let c = Self::Hyperbolic2(o.clone());
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<(), OrbifoldError> {
        match self {
            Self::Euclidean2(_) => Ok(()),
            Self::Hyperbolic2(o) => {
                o.validate()?;
                if !o.is_closed() || !o.orbifold_orientable() {
                    return Err(OrbifoldError::Invalid(format!(
                        "boundary component {o} must be closed and orientable"
                    )));
                }
                if !euler_char(o).is_negative() {
                    return Err(OrbifoldError::Invalid(format!(
                        "boundary component {o} is neither hyperbolic nor one of the Euclidean classes"
                    )));
                }
                Ok(())
            }
        }
    }

    pub fn signature(&self) -> OrbifoldSignature {
        match self {
            Self::Hyperbolic2(o) => o.clone(),
            Self::Euclidean2(e) => e.signature(),
        }
    }
}

impl fmt::Display for BoundaryComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signature())
    }
}

/// Ordered boundary components ∂₁O ⊔ … ⊔ ∂_kO.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundaryList {
    components: Vec<BoundaryComponent>,
}

impl BoundaryList {
    pub fn new(components: Vec<BoundaryComponent>) -> Result<Self, OrbifoldError> {
        if components.is_empty() {
            return Err(OrbifoldError::Invalid("boundary list is empty".into()));
        }
        for c in &components {
            c.validate()?;
        }
        Ok(Self { components })
    }

    /// Each string is a signature in the DSL.
    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<Self, OrbifoldError> {
        let comps = items
            .iter()
            .map(|s| BoundaryComponent::from_signature(&parse_signature(s.as_ref())?))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(comps)
    }

    pub fn components(&self) -> &[BoundaryComponent] {
        &self.components
    }
}
