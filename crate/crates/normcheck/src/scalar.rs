//! Base field selection and scalars over it.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The base field of the vector space: real or complex coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarField {
    Real,
    Complex,
}

impl ScalarField {
    /// Number of f64 slots backing one coordinate: 1 for real, 2 for complex.
    pub fn components(self) -> usize {
        match self {
            ScalarField::Real => 1,
            ScalarField::Complex => 2,
        }
    }
}

impl fmt::Display for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarField::Real => write!(f, "real"),
            ScalarField::Complex => write!(f, "complex"),
        }
    }
}

/// A scalar from the base field. Serializes as a bare number in the real
/// case and as a `[re, im]` pair in the complex case.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Real(f64),
    Complex([f64; 2]),
}

impl Scalar {
    pub fn field(self) -> ScalarField {
        match self {
            Scalar::Real(_) => ScalarField::Real,
            Scalar::Complex(_) => ScalarField::Complex,
        }
    }

    pub fn modulus(self) -> f64 {
        match self {
            Scalar::Real(r) => r.abs(),
            Scalar::Complex([re, im]) => (re * re + im * im).sqrt(),
        }
    }

    pub fn as_complex(self) -> Complex64 {
        match self {
            Scalar::Real(r) => Complex64::new(r, 0.0),
            Scalar::Complex([re, im]) => Complex64::new(re, im),
        }
    }

    pub fn is_finite(self) -> bool {
        match self {
            Scalar::Real(r) => r.is_finite(),
            Scalar::Complex([re, im]) => re.is_finite() && im.is_finite(),
        }
    }

    /// The multiplicative unit of the given field.
    pub fn one(field: ScalarField) -> Self {
        match field {
            ScalarField::Real => Scalar::Real(1.0),
            ScalarField::Complex => Scalar::Complex([1.0, 0.0]),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Real(r) => write!(f, "{r}"),
            Scalar::Complex([re, im]) => write!(f, "{re}{im:+}i"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_matches_hand_values() {
        assert_eq!(Scalar::Real(-3.0).modulus(), 3.0);
        assert_eq!(Scalar::Complex([3.0, 4.0]).modulus(), 5.0);
    }

    #[test]
    fn serde_shapes() {
        assert_eq!(serde_json::to_string(&Scalar::Real(2.5)).unwrap(), "2.5");
        assert_eq!(
            serde_json::to_string(&Scalar::Complex([1.0, -2.0])).unwrap(),
            "[1.0,-2.0]"
        );
        let s: Scalar = serde_json::from_str("[0.5,0.25]").unwrap();
        assert_eq!(s, Scalar::Complex([0.5, 0.25]));
    }
}
