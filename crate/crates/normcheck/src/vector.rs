//! Vectors over R^n or C^n with a flat coordinate representation.
//!
//! Complex vectors store interleaved `[re0, im0, re1, im1, ...]` pairs so
//! that addition, negation, and serialization need no case analysis.

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarField};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Vector {
    field: ScalarField,
    coords: Vec<f64>,
}

impl Vector {
    /// Builds a vector, checking that every coordinate is finite and that the
    /// slot count matches the field layout.
    pub fn new(field: ScalarField, coords: Vec<f64>) -> Result<Self> {
        let comps = field.components();
        if coords.is_empty() || coords.len() % comps != 0 {
            return Err(Error::DimensionMismatch {
                expected: comps.max(coords.len().saturating_sub(coords.len() % comps)),
                got: coords.len(),
            });
        }
        if let Some(index) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Vector { field, coords })
    }

    pub fn zero(field: ScalarField, dim: usize) -> Self {
        Vector {
            field,
            coords: vec![0.0; dim * field.components()],
        }
    }

    /// The i-th canonical basis vector e_i.
    pub fn basis(field: ScalarField, dim: usize, i: usize) -> Self {
        let mut v = Vector::zero(field, dim);
        v.coords[i * field.components()] = 1.0;
        v
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.coords.len() / self.field.components()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [f64] {
        &mut self.coords
    }

    /// Modulus of the i-th coordinate (absolute value or complex modulus).
    pub fn coord_modulus(&self, i: usize) -> f64 {
        match self.field {
            ScalarField::Real => self.coords[i].abs(),
            ScalarField::Complex => {
                let re = self.coords[2 * i];
                let im = self.coords[2 * i + 1];
                (re * re + im * im).sqrt()
            }
        }
    }

    /// The i-th coordinate as a complex number (imaginary part 0 when real).
    pub fn coord_complex(&self, i: usize) -> Complex64 {
        match self.field {
            ScalarField::Real => Complex64::new(self.coords[i], 0.0),
            ScalarField::Complex => Complex64::new(self.coords[2 * i], self.coords[2 * i + 1]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| *c == 0.0)
    }

    fn check_compatible(&self, other: &Vector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                got: other.field,
            });
        }
        if self.coords.len() != other.coords.len() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.check_compatible(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Vector {
            field: self.field,
            coords,
        })
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.check_compatible(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Vector {
            field: self.field,
            coords,
        })
    }

    pub fn neg(&self) -> Vector {
        Vector {
            field: self.field,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    /// Scales by a scalar from the same field. A real scalar is accepted for
    /// complex vectors (it embeds canonically); a complex scalar on a real
    /// vector is a field mismatch.
    pub fn scale(&self, by: Scalar) -> Result<Vector> {
        match (self.field, by) {
            (_, Scalar::Real(r)) => Ok(Vector {
                field: self.field,
                coords: self.coords.iter().map(|c| r * c).collect(),
            }),
            (ScalarField::Complex, Scalar::Complex([re, im])) => {
                let mut coords = Vec::with_capacity(self.coords.len());
                for pair in self.coords.chunks_exact(2) {
                    coords.push(re * pair[0] - im * pair[1]);
                    coords.push(re * pair[1] + im * pair[0]);
                }
                Ok(Vector {
                    field: self.field,
                    coords,
                })
            }
            (ScalarField::Real, Scalar::Complex(_)) => Err(Error::FieldMismatch {
                expected: ScalarField::Real,
                got: ScalarField::Complex,
            }),
        }
    }

    /// Multiplies a complex vector by i (rotates every coordinate pair).
    pub fn mul_i(&self) -> Result<Vector> {
        if self.field != ScalarField::Complex {
            return Err(Error::FieldMismatch {
                expected: ScalarField::Complex,
                got: self.field,
            });
        }
        let mut coords = Vec::with_capacity(self.coords.len());
        for pair in self.coords.chunks_exact(2) {
            coords.push(-pair[1]);
            coords.push(pair[0]);
        }
        Ok(Vector {
            field: self.field,
            coords,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite_coordinates() {
        let err = Vector::new(ScalarField::Real, vec![1.0, f64::NAN]).unwrap_err();
        assert!(matches!(err, Error::NonFinite { index: 1 }));
    }

    #[test]
    fn complex_layout_is_interleaved() {
        let v = Vector::new(ScalarField::Complex, vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(v.dim(), 2);
        assert_eq!(v.coord_complex(1), Complex64::new(3.0, 4.0));
        assert_eq!(v.coord_modulus(0), (5.0f64).sqrt());
    }

    #[test]
    fn complex_scaling_multiplies_pairs() {
        let v = Vector::new(ScalarField::Complex, vec![1.0, 0.0]).unwrap();
        let iv = v.scale(Scalar::Complex([0.0, 1.0])).unwrap();
        assert_eq!(iv.coords(), &[0.0, 1.0]);
        assert_eq!(v.mul_i().unwrap(), iv);
    }

    #[test]
    fn complex_scalar_on_real_vector_is_rejected() {
        let v = Vector::new(ScalarField::Real, vec![1.0]).unwrap();
        assert!(v.scale(Scalar::Complex([0.0, 1.0])).is_err());
    }
}
