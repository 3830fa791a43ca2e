//! Polarization: the candidate inner product a norm induces, and how badly
//! it fails to be one.
//!
//! Every norm yields a form via the polarization formulas; the form agrees
//! with the norm on the diagonal (`form(x, x) = norm(x)^2` always), and is a
//! genuine inner product exactly when the norm satisfies the parallelogram
//! law. [`form_axiom_scan`] measures the bilinearity axioms directly;
//! [`gram_reconstruct`] assembles the matrix of basis form values and
//! measures how far the induced quadratic norm sits from the original.
//!
//! Convention: the form is linear in its first argument and conjugate-linear
//! in its second.

use crate::error::{Error, Result};
use crate::norm::{norm_eval, quadratic_form, GramMatrix, NormSpec};
use crate::numeric::comp_sum;
use crate::report::{DefectReport, Witness};
use crate::sample::{check_cfg, domains, sample_point, sample_scalar, SampleConfig};
use crate::scalar::{Scalar, ScalarField};
use crate::scan::{pick, sup_identity, sup_scan, Measured};
use crate::tol;
use crate::vector::Vector;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

fn polar_form_c(spec: &NormSpec, x: &Vector, y: &Vector) -> Result<Complex64> {
    spec.check_vector(x)?;
    spec.check_vector(y)?;
    match spec.field() {
        ScalarField::Real => {
            let a = norm_eval(spec, &x.add(y)?)?;
            let b = norm_eval(spec, &x.sub(y)?)?;
            Ok(Complex64::new(comp_sum([a * a, -(b * b)]) / 4.0, 0.0))
        }
        ScalarField::Complex => {
            // (1/4) sum_k i^k norm(x + i^k y)^2, expanded so the real and
            // imaginary parts are each one compensated two-term difference
            let iy = y.mul_i()?;
            let n0 = norm_eval(spec, &x.add(y)?)?;
            let n1 = norm_eval(spec, &x.add(&iy)?)?;
            let n2 = norm_eval(spec, &x.sub(y)?)?;
            let n3 = norm_eval(spec, &x.sub(&iy)?)?;
            Ok(Complex64::new(
                comp_sum([n0 * n0, -(n2 * n2)]) / 4.0,
                comp_sum([n1 * n1, -(n3 * n3)]) / 4.0,
            ))
        }
    }
}

/// The polarization form of `spec` at `(x, y)`. Real field: a real scalar;
/// complex field: a complex scalar, linear in x and conjugate-linear in y.
pub fn polar_form(spec: &NormSpec, x: &Vector, y: &Vector) -> Result<Scalar> {
    let v = polar_form_c(spec, x, y)?;
    Ok(match spec.field() {
        ScalarField::Real => Scalar::Real(v.re),
        ScalarField::Complex => Scalar::Complex([v.re, v.im]),
    })
}

/// A norm together with its polarization form.
#[derive(Clone, Debug)]
pub struct PolarForm {
    spec: NormSpec,
}

impl PolarForm {
    pub fn new(spec: &NormSpec) -> Self {
        PolarForm { spec: spec.clone() }
    }

    pub fn spec(&self) -> &NormSpec {
        &self.spec
    }

    pub fn field(&self) -> ScalarField {
        self.spec.field()
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Result<Scalar> {
        polar_form(&self.spec, x, y)
    }
}

/// Per-axiom defect reports from [`form_axiom_scan`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FormAxiomScan {
    /// `|form(x + x2, y) - form(x, y) - form(x2, y)|`
    pub additivity: DefectReport,
    /// `|form(lambda x, y) - lambda form(x, y)|`
    pub scalar: DefectReport,
    /// `|form(x, y) - conj(form(y, x))|`
    pub symmetry: DefectReport,
}

/// Scans the inner-product axioms of the polarization form over sampled
/// triples `(x, x2, y)` and scalars.
///
/// Each defect is normalized by `max(1, ...)` of the magnitudes entering the
/// identity, so sups compare to thresholds scale-freely. The diagonal
/// identity `form(x, x) = norm(x)^2` holds for every norm, inner-product or
/// not, so it carries no diagnostic weight; it runs as a self-check on every
/// sample and a breach reports an internal error.
pub fn form_axiom_scan(spec: &NormSpec, cfg: &SampleConfig) -> Result<FormAxiomScan> {
    check_cfg(spec, cfg)?;

    let ingredients = |i: u64| -> Result<(Vector, Vector, Vector, Scalar)> {
        Ok((
            sample_point(spec, cfg, domains::SCAN_X, i)?,
            sample_point(spec, cfg, domains::SCAN_ANCHOR, i)?,
            sample_point(spec, cfg, domains::SCAN_PAIR, i)?,
            sample_scalar(cfg, i),
        ))
    };

    let measure = |i: u64| -> Result<[Measured; 3]> {
        let (x, x2, y, lambda) = ingredients(i)?;
        let f_xy = polar_form_c(spec, &x, &y)?;
        let f_x2y = polar_form_c(spec, &x2, &y)?;

        // each defect is normalized by the squared-norm magnitudes entering
        // its form evaluations: the forms themselves can cancel to zero on
        // near-orthogonal pairs while the achievable float accuracy is set
        // by those magnitudes, so normalizing by |form| would report pure
        // rounding as a large relative defect
        let nx = norm_eval(spec, &x)?;
        let nx2 = norm_eval(spec, &x2)?;
        let ny = norm_eval(spec, &y)?;
        let mag = |a: f64, b: f64| (a + b) * (a + b);

        let sum = x.add(&x2)?;
        let n_sum = norm_eval(spec, &sum)?;
        let f_sum = polar_form_c(spec, &sum, &y)?;
        let add_raw = (f_sum - f_xy - f_x2y).norm();
        let add_scale = (mag(n_sum, ny) + mag(nx, ny) + mag(nx2, ny)).max(1.0);

        let modulus = lambda.modulus();
        let f_scaled = polar_form_c(spec, &x.scale(lambda)?, &y)?;
        let expected = lambda.as_complex() * f_xy;
        let scalar_raw = (f_scaled - expected).norm();
        let scalar_scale = (mag(modulus * nx, ny) + modulus * mag(nx, ny)).max(1.0);

        let f_yx = polar_form_c(spec, &y, &x)?;
        let sym_raw = (f_xy - f_yx.conj()).norm();
        let sym_scale = (2.0 * mag(nx, ny)).max(1.0);

        // diagonal self-check: true for any norm, so a breach is a bug in
        // the kernels rather than a property of the spec
        let nx = norm_eval(spec, &x)?;
        let diag = (polar_form_c(spec, &x, &x)?.re - nx * nx).abs();
        if diag > tol::FORM_SELF_CHECK * (nx * nx).max(1.0) {
            return Err(Error::SelfCheck(format!(
                "polarization diagonal departs from the squared norm by {diag:e} at sample {i}"
            )));
        }

        Ok([
            Measured {
                normalized: add_raw / add_scale,
                raw: add_raw,
            },
            Measured {
                normalized: scalar_raw / scalar_scale,
                raw: scalar_raw,
            },
            Measured {
                normalized: sym_raw / sym_scale,
                raw: sym_raw,
            },
        ])
    };

    let id = || [sup_identity(); 3];
    let best = (0..cfg.n_samples)
        .into_par_iter()
        .map(|i| measure(i).map(|m| m.map(|v| (v, i))))
        .try_reduce(id, |a, b| {
            Ok([pick(a[0], b[0]), pick(a[1], b[1]), pick(a[2], b[2])])
        })?;

    let build = |slot: usize, name: &str| -> Result<DefectReport> {
        let (m, index) = best[slot];
        let witness = if m.normalized > 0.0 {
            let (x, x2, y, lambda) = ingredients(index)?;
            let (lambda, x2) = match slot {
                0 => (None, Some(x2)),
                1 => (Some(lambda), None),
                _ => (None, None),
            };
            Some(Witness {
                x,
                lambda,
                y,
                x2,
                defect: m.raw,
            })
        } else {
            None
        };
        Ok(DefectReport::new(
            name,
            m.normalized,
            m.raw,
            witness,
            cfg.n_samples,
            tol::CLASSIFY_THRESHOLD,
            cfg.seed,
        ))
    };

    Ok(FormAxiomScan {
        additivity: build(0, "form_additivity")?,
        scalar: build(1, "form_scalar_homogeneity")?,
        symmetry: build(2, "form_conjugate_symmetry")?,
    })
}

/// Result of [`gram_reconstruct`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GramRecon {
    /// Pairwise form values on the canonical basis, indexed so a Quadratic
    /// spec's matrix is recovered elementwise: entry `(i, j)` puts `e_i` in
    /// the conjugate-linear slot and `e_j` in the linear one.
    pub gram: GramMatrix,
    /// Sup over samples of `|norm(x) - sqrt(max(0, q(x)))|` where q is the
    /// quadratic form of the reconstructed gram. Zero exactly when the norm
    /// is the quadratic norm of its own polarization, i.e. inner-product.
    pub residual_sup: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual_witness_x: Option<Vector>,
    /// Smallest eigenvalue of the Hermitian part of `gram`.
    pub spd_margin: f64,
    pub n_samples: u64,
    pub seed: u64,
}

/// Builds the Gram matrix of the polarization form on the canonical basis
/// and measures the residual between the norm and the quadratic norm that
/// gram induces.
///
/// The residual is the discriminating quantity: a norm can produce an
/// innocuous gram (the taxicab norm reconstructs the identity matrix) while
/// sitting far from the quadratic norm of that gram.
pub fn gram_reconstruct(spec: &NormSpec, cfg: &SampleConfig) -> Result<GramRecon> {
    check_cfg(spec, cfg)?;
    let dim = spec.dim();

    let mut entries = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let ei = Vector::basis(spec.field(), dim, i);
            let ej = Vector::basis(spec.field(), dim, j);
            entries.push(polar_form_c(spec, &ej, &ei)?);
        }
    }
    let gram = GramMatrix::from_entries(dim, entries);

    let residual_at = |i: u64| -> Result<(Vector, f64)> {
        let x = sample_point(spec, cfg, domains::SCAN_X, i)?;
        let q = quadratic_form(dim, gram.entries(), &x).max(0.0);
        let r = (norm_eval(spec, &x)? - q.sqrt()).abs();
        Ok((x, r))
    };

    let (best, index) = sup_scan(cfg.n_samples, |i| {
        Ok(Measured::absolute(residual_at(i)?.1))
    })?;
    let residual_witness_x = if best.raw > 0.0 {
        Some(residual_at(index)?.0)
    } else {
        None
    };

    let sym = GramMatrix::from_entries(
        dim,
        (0..dim)
            .flat_map(|i| (0..dim).map(move |j| (i, j)))
            .map(|(i, j)| (gram.entry(i, j) + gram.entry(j, i).conj()) / 2.0)
            .collect(),
    );

    Ok(GramRecon {
        spd_margin: sym.min_eigenvalue(),
        gram,
        residual_sup: best.raw,
        residual_witness_x,
        n_samples: cfg.n_samples,
        seed: cfg.seed,
    })
}
