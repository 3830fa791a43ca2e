//! Declarative norm descriptions and their evaluation.
//!
//! A [`NormSpec`] names a norm on R^n or C^n from a closed family: Lp norms,
//! coordinate-weighted Lp norms, quadratic norms `sqrt(x* G x)` with a
//! positive-definite Gram matrix, and positively weighted sums or maxima of
//! other members. Every constructor validates eagerly, so a value that
//! exists is a genuine norm; the probes in the rest of the crate rely on
//! that.

use crate::error::{Error, Result};
use crate::numeric::{comp_sum, hermitian_min_eig};
use crate::scalar::ScalarField;
use crate::vector::Vector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Exponent of an Lp norm: a finite p >= 1 or the max norm.
///
/// Serializes as a bare number, with the max norm spelled `"inf"` rather
/// than encoded as some large float.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PExponent {
    Finite(f64),
    Infinity,
}

impl PExponent {
    pub fn is_infinite(self) -> bool {
        matches!(self, PExponent::Infinity)
    }
}

impl fmt::Display for PExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PExponent::Finite(p) => write!(f, "{p}"),
            PExponent::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for PExponent {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PExponent::Finite(p) => serializer.serialize_f64(*p),
            PExponent::Infinity => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for PExponent {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(f64),
            Word(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Num(p) => Ok(PExponent::Finite(p)),
            Repr::Word(w) if w == "inf" => Ok(PExponent::Infinity),
            Repr::Word(w) => Err(serde::de::Error::custom(format!(
                "p must be a number or \"inf\", got \"{w}\""
            ))),
        }
    }
}

/// Row-major Gram matrix. Real entries serialize as numbers, complex entries
/// as `[re, im]` pairs; both forms are accepted on input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "GramRepr", into = "GramRepr")]
pub struct GramMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct GramRepr(Vec<Vec<GramEntryRepr>>);

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GramEntryRepr {
    Num(f64),
    Pair([f64; 2]),
}

impl TryFrom<GramRepr> for GramMatrix {
    type Error = Error;

    fn try_from(repr: GramRepr) -> Result<Self> {
        let dim = repr.0.len();
        if dim == 0 {
            return Err(Error::InvalidSpec("gram must be non-empty".into()));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in &repr.0 {
            if row.len() != dim {
                return Err(Error::InvalidSpec(format!(
                    "gram must be square: row of length {} in a {dim}-row matrix",
                    row.len()
                )));
            }
            for e in row {
                entries.push(match e {
                    GramEntryRepr::Num(r) => Complex64::new(*r, 0.0),
                    GramEntryRepr::Pair([re, im]) => Complex64::new(*re, *im),
                });
            }
        }
        Ok(GramMatrix { dim, entries })
    }
}

impl From<GramMatrix> for GramRepr {
    fn from(g: GramMatrix) -> Self {
        let all_real = g.entries.iter().all(|e| e.im == 0.0);
        let rows = (0..g.dim)
            .map(|i| {
                (0..g.dim)
                    .map(|j| {
                        let e = g.entries[i * g.dim + j];
                        if all_real {
                            GramEntryRepr::Num(e.re)
                        } else {
                            GramEntryRepr::Pair([e.re, e.im])
                        }
                    })
                    .collect()
            })
            .collect();
        GramRepr(rows)
    }
}

impl GramMatrix {
    pub fn from_real_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let repr = GramRepr(
            rows.into_iter()
                .map(|r| r.into_iter().map(GramEntryRepr::Num).collect())
                .collect(),
        );
        GramMatrix::try_from(repr)
    }

    pub fn from_complex_rows(rows: Vec<Vec<[f64; 2]>>) -> Result<Self> {
        let repr = GramRepr(
            rows.into_iter()
                .map(|r| r.into_iter().map(GramEntryRepr::Pair).collect())
                .collect(),
        );
        GramMatrix::try_from(repr)
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![1.0; dim])
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let dim = values.len();
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for (i, v) in values.iter().enumerate() {
            entries[i * dim + i] = Complex64::new(*v, 0.0);
        }
        GramMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    pub(crate) fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub(crate) fn from_entries(dim: usize, entries: Vec<Complex64>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        GramMatrix { dim, entries }
    }

    /// Largest entry magnitude; scales the Hermitian-symmetry tolerance.
    fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .fold(0.0f64, |acc, e| acc.max(e.norm_sqr().sqrt()))
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        let scale = self.max_abs().max(1.0);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let d = self.entry(i, j) - self.entry(j, i).conj();
                if d.norm_sqr().sqrt() > tol * scale {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest eigenvalue, treating the matrix as Hermitian.
    pub fn min_eigenvalue(&self) -> f64 {
        hermitian_min_eig(self.dim, &self.entries)
    }

    /// Deterministic random symmetric (Hermitian) positive-definite matrix:
    /// `M* M / dim + I/2` for a Gaussian M, so eigenvalues stay in a benign
    /// range regardless of dimension.
    pub fn random_spd(dim: usize, field: ScalarField, seed: u64) -> Self {
        use rand::Rng;
        use rand_distr::StandardNormal;
        let mut rng = crate::sample::rng_for(seed, crate::sample::domains::GRAM, 0);
        let m: Vec<Complex64> = (0..dim * dim)
            .map(|_| {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = match field {
                    ScalarField::Real => 0.0,
                    ScalarField::Complex => rng.sample(StandardNormal),
                };
                Complex64::new(re, im)
            })
            .collect();
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..dim {
                    acc += m[k * dim + i].conj() * m[k * dim + j];
                }
                entries[i * dim + j] = acc / dim as f64;
                if i == j {
                    entries[i * dim + j] += Complex64::new(0.5, 0.0);
                }
            }
        }
        GramMatrix { dim, entries }
    }
}

/// How a combination norm merges its terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CombinationMode {
    Sum,
    Max,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CombinationTerm {
    pub coefficient: f64,
    pub spec: NormSpec,
}

/// The norm family. Externally tagged, so JSON reads e.g.
/// `{"lp": {"p": 1.0}}` or `{"quadratic": {"gram": [[4.0, 0.0], [0.0, 1.0]]}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormKind {
    Lp {
        p: PExponent,
    },
    WeightedLp {
        p: PExponent,
        weights: Vec<f64>,
    },
    Quadratic {
        gram: GramMatrix,
    },
    Combination {
        mode: CombinationMode,
        terms: Vec<CombinationTerm>,
    },
}

/// A validated norm description: dimension, base field, and kind.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormSpec {
    dim: usize,
    field: ScalarField,
    kind: NormKind,
}

impl NormSpec {
    pub fn new(dim: usize, field: ScalarField, kind: NormKind) -> Result<Self> {
        let spec = NormSpec { dim, field, kind };
        spec.validate()?;
        Ok(spec)
    }

    pub fn lp(dim: usize, field: ScalarField, p: f64) -> Result<Self> {
        Self::new(
            dim,
            field,
            NormKind::Lp {
                p: PExponent::Finite(p),
            },
        )
    }

    pub fn lp_inf(dim: usize, field: ScalarField) -> Result<Self> {
        Self::new(
            dim,
            field,
            NormKind::Lp {
                p: PExponent::Infinity,
            },
        )
    }

    pub fn weighted_lp(dim: usize, field: ScalarField, p: PExponent, weights: Vec<f64>) -> Result<Self> {
        Self::new(dim, field, NormKind::WeightedLp { p, weights })
    }

    pub fn quadratic(field: ScalarField, gram: GramMatrix) -> Result<Self> {
        Self::new(gram.dim(), field, NormKind::Quadratic { gram })
    }

    pub fn combination(mode: CombinationMode, terms: Vec<CombinationTerm>) -> Result<Self> {
        let (dim, field) = match terms.first() {
            Some(t) => (t.spec.dim(), t.spec.field()),
            None => return Err(Error::InvalidSpec("combination terms must be nonempty".into())),
        };
        Self::new(dim, field, NormKind::Combination { mode, terms })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn kind(&self) -> &NormKind {
        &self.kind
    }

    /// Parses and validates a JSON description.
    pub fn from_json(json: &str) -> Result<Self> {
        let spec: NormSpec =
            serde_json::from_str(json).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::InvalidSpec("dim must be ≥ 1".into()));
        }
        match &self.kind {
            NormKind::Lp { p } => validate_p(*p)?,
            NormKind::WeightedLp { p, weights } => {
                validate_p(*p)?;
                if weights.len() != self.dim {
                    return Err(Error::InvalidSpec(format!(
                        "weights length {} must equal dim {}",
                        weights.len(),
                        self.dim
                    )));
                }
                if weights.iter().any(|w| !w.is_finite() || *w <= 0.0) {
                    return Err(Error::InvalidSpec("weights must be positive".into()));
                }
            }
            NormKind::Quadratic { gram } => {
                if gram.dim() != self.dim {
                    return Err(Error::InvalidSpec(format!(
                        "gram dimension {} must equal dim {}",
                        gram.dim(),
                        self.dim
                    )));
                }
                if gram.entries().iter().any(|e| !e.re.is_finite() || !e.im.is_finite()) {
                    return Err(Error::InvalidSpec("gram entries must be finite".into()));
                }
                if self.field == ScalarField::Real && gram.entries().iter().any(|e| e.im != 0.0) {
                    return Err(Error::InvalidSpec(
                        "gram entries must be real for a real-field spec".into(),
                    ));
                }
                if !gram.is_hermitian(1e-12) {
                    return Err(Error::InvalidSpec(
                        "gram must be Hermitian (symmetric in the real case)".into(),
                    ));
                }
                let min_eig = gram.min_eigenvalue();
                if min_eig <= 0.0 {
                    return Err(Error::InvalidSpec(format!(
                        "gram must be positive definite (smallest eigenvalue {min_eig:e})"
                    )));
                }
            }
            NormKind::Combination { terms, .. } => {
                if terms.is_empty() {
                    return Err(Error::InvalidSpec("combination terms must be nonempty".into()));
                }
                for (i, term) in terms.iter().enumerate() {
                    if !term.coefficient.is_finite() || term.coefficient <= 0.0 {
                        return Err(Error::InvalidSpec(
                            "combination coefficients must be positive".into(),
                        ));
                    }
                    if term.spec.dim() != self.dim || term.spec.field() != self.field {
                        return Err(Error::InvalidSpec(format!(
                            "combination term {i} must match the parent dim and field"
                        )));
                    }
                    term.spec.validate()?;
                }
            }
        }
        Ok(())
    }

    /// Same norm family at a different dimension, where that makes sense
    /// (Lp norms resize freely; weighted and quadratic norms are pinned).
    pub fn with_dim(&self, dim: usize) -> Result<Self> {
        let kind = match &self.kind {
            NormKind::Combination { mode, terms } => NormKind::Combination {
                mode: *mode,
                terms: terms
                    .iter()
                    .map(|t| {
                        Ok(CombinationTerm {
                            coefficient: t.coefficient,
                            spec: t.spec.with_dim(dim)?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?,
            },
            other => other.clone(),
        };
        NormSpec::new(dim, self.field, kind)
    }

    /// Same norm over a different base field. Real specs extend to complex
    /// coordinates; a complex spec restricts to real only if its data is real.
    pub fn with_field(&self, field: ScalarField) -> Result<Self> {
        let kind = match &self.kind {
            NormKind::Combination { mode, terms } => NormKind::Combination {
                mode: *mode,
                terms: terms
                    .iter()
                    .map(|t| {
                        Ok(CombinationTerm {
                            coefficient: t.coefficient,
                            spec: t.spec.with_field(field)?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?,
            },
            other => other.clone(),
        };
        NormSpec::new(self.dim, field, kind)
    }

    /// Short human-readable label for logs and CLI summaries.
    pub fn describe(&self) -> String {
        let kind = match &self.kind {
            NormKind::Lp { p } => format!("lp(p={p})"),
            NormKind::WeightedLp { p, .. } => format!("weighted_lp(p={p})"),
            NormKind::Quadratic { .. } => "quadratic".to_string(),
            NormKind::Combination { mode, terms } => {
                let mode = match mode {
                    CombinationMode::Sum => "sum",
                    CombinationMode::Max => "max",
                };
                format!("combination({mode}, {} terms)", terms.len())
            }
        };
        format!("{kind} dim={} {}", self.dim, self.field)
    }

    pub(crate) fn check_vector(&self, x: &Vector) -> Result<()> {
        if x.field() != self.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                got: x.field(),
            });
        }
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.dim(),
            });
        }
        if let Some(index) = x.coords().iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(())
    }
}

fn validate_p(p: PExponent) -> Result<()> {
    match p {
        PExponent::Infinity => Ok(()),
        PExponent::Finite(p) if p.is_finite() && p >= 1.0 => Ok(()),
        PExponent::Finite(_) => Err(Error::InvalidSpec("p must be ≥ 1".into())),
    }
}

/// Evaluates the norm described by `spec` at `x`.
pub fn norm_eval(spec: &NormSpec, x: &Vector) -> Result<f64> {
    spec.check_vector(x)?;
    Ok(eval_kernel(spec, x))
}

/// Kernel dispatch without the argument checks; callers guarantee that `x`
/// matches the spec's dim and field.
pub(crate) fn eval_kernel(spec: &NormSpec, x: &Vector) -> f64 {
    match &spec.kind {
        NormKind::Lp { p } => lp_kernel(*p, None, x),
        NormKind::WeightedLp { p, weights } => lp_kernel(*p, Some(weights), x),
        NormKind::Quadratic { gram } => quadratic_form(gram.dim(), gram.entries(), x).max(0.0).sqrt(),
        NormKind::Combination { mode, terms } => match mode {
            CombinationMode::Sum => comp_sum(
                terms
                    .iter()
                    .map(|t| t.coefficient * eval_kernel(&t.spec, x)),
            ),
            CombinationMode::Max => terms
                .iter()
                .map(|t| t.coefficient * eval_kernel(&t.spec, x))
                .fold(0.0, f64::max),
        },
    }
}

/// Lp evaluation, scaled by the largest coordinate modulus so large radii
/// and large exponents cannot overflow. The weighted max norm takes
/// `max_i w_i |x_i|`, the p -> infinity limit of the weighted sums with the
/// weights applied to the coordinates' contributions.
fn lp_kernel(p: PExponent, weights: Option<&[f64]>, x: &Vector) -> f64 {
    let dim = x.dim();
    let w = |i: usize| weights.map_or(1.0, |w| w[i]);
    match p {
        PExponent::Infinity => (0..dim)
            .map(|i| w(i) * x.coord_modulus(i))
            .fold(0.0, f64::max),
        PExponent::Finite(p) => {
            let m = (0..dim).map(|i| x.coord_modulus(i)).fold(0.0, f64::max);
            if m == 0.0 {
                return 0.0;
            }
            if p == 1.0 {
                comp_sum((0..dim).map(|i| w(i) * x.coord_modulus(i)))
            } else if p == 2.0 {
                let s = comp_sum((0..dim).map(|i| {
                    let r = x.coord_modulus(i) / m;
                    w(i) * r * r
                }));
                m * s.sqrt()
            } else {
                let s = comp_sum((0..dim).map(|i| w(i) * (x.coord_modulus(i) / m).powf(p)));
                m * s.powf(1.0 / p)
            }
        }
    }
}

/// Sanity scan of the two norm axioms a declarative spec could break only
/// through an implementation bug: the triangle inequality and absolute
/// homogeneity. Each sample draws a pair (x, y) and a scalar lambda and
/// measures
///
/// ```text
/// max( relu(norm(x + y) - norm(x) - norm(y)),
///      |norm(lambda x) - |lambda| norm(x)| )
/// ```
///
/// The witness stores all three ingredients, so recomputing the expression
/// above from a report reproduces its defect.
pub fn axiom_scan(spec: &NormSpec, cfg: &crate::sample::SampleConfig) -> Result<crate::report::DefectReport> {
    use crate::sample::{domains, sample_point, sample_scalar};
    crate::sample::check_cfg(spec, cfg)?;

    let defect_at = |i: u64| -> Result<f64> {
        let x = sample_point(spec, cfg, domains::SCAN_X, i)?;
        let y = sample_point(spec, cfg, domains::SCAN_PAIR, i)?;
        let lambda = sample_scalar(cfg, i);
        let nx = norm_eval(spec, &x)?;
        let ny = norm_eval(spec, &y)?;
        let triangle = (norm_eval(spec, &x.add(&y)?)? - nx - ny).max(0.0);
        let homogeneity = (norm_eval(spec, &x.scale(lambda)?)? - lambda.modulus() * nx).abs();
        Ok(triangle.max(homogeneity))
    };

    let (best, index) = crate::scan::sup_scan(cfg.n_samples, |i| {
        defect_at(i).map(crate::scan::Measured::absolute)
    })?;

    let witness = if best.raw > 0.0 {
        Some(crate::report::Witness {
            x: sample_point(spec, cfg, domains::SCAN_X, index)?,
            lambda: Some(sample_scalar(cfg, index)),
            y: sample_point(spec, cfg, domains::SCAN_PAIR, index)?,
            x2: None,
            defect: best.raw,
        })
    } else {
        None
    };

    Ok(crate::report::DefectReport::new(
        "norm_axioms",
        best.normalized,
        best.raw,
        witness,
        cfg.n_samples,
        crate::tol::NORM_AXIOMS,
        cfg.seed,
    ))
}

/// Real part of `x* G x` with compensated accumulation over all dim^2 terms.
pub(crate) fn quadratic_form(dim: usize, entries: &[Complex64], x: &Vector) -> f64 {
    match x.field() {
        ScalarField::Real => {
            let coords = x.coords();
            comp_sum((0..dim).flat_map(|i| {
                let xi = coords[i];
                (0..dim).map(move |j| xi * entries[i * dim + j].re * coords[j])
            }))
        }
        ScalarField::Complex => comp_sum((0..dim).flat_map(|i| {
            let xi = x.coord_complex(i).conj();
            (0..dim).map(move |j| (xi * entries[i * dim + j] * x.coord_complex(j)).re)
        })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ScalarField::{Complex, Real};

    fn rv(coords: &[f64]) -> Vector {
        Vector::new(Real, coords.to_vec()).unwrap()
    }

    #[test]
    fn euclidean_hand_values() {
        let spec = NormSpec::lp(2, Real, 2.0).unwrap();
        let n = norm_eval(&spec, &rv(&[3.0, 4.0])).unwrap();
        assert!((n - 5.0).abs() <= 1e-12, "got {n}");
        assert_eq!(norm_eval(&spec, &rv(&[0.0, 0.0])).unwrap(), 0.0);
    }

    #[test]
    fn max_norm_hand_value() {
        let spec = NormSpec::lp_inf(2, Real).unwrap();
        assert_eq!(norm_eval(&spec, &rv(&[1.0, -2.0])).unwrap(), 2.0);
    }

    #[test]
    fn l1_and_fractional_p() {
        let l1 = NormSpec::lp(3, Real, 1.0).unwrap();
        assert_eq!(norm_eval(&l1, &rv(&[1.0, -2.0, 3.0])).unwrap(), 6.0);
        let l3 = NormSpec::lp(2, Real, 3.0).unwrap();
        let n = norm_eval(&l3, &rv(&[1.0, 1.0])).unwrap();
        assert!((n - 2.0f64.powf(1.0 / 3.0)).abs() <= 1e-12);
    }

    #[test]
    fn weighted_lp_hand_values() {
        let spec =
            NormSpec::weighted_lp(2, Real, PExponent::Finite(2.0), vec![4.0, 1.0]).unwrap();
        let n = norm_eval(&spec, &rv(&[1.0, 1.0])).unwrap();
        assert!((n - 5.0f64.sqrt()).abs() <= 1e-12);
        let winf =
            NormSpec::weighted_lp(2, Real, PExponent::Infinity, vec![3.0, 1.0]).unwrap();
        assert_eq!(norm_eval(&winf, &rv(&[1.0, 2.0])).unwrap(), 3.0);
    }

    #[test]
    fn quadratic_matches_weighted_l2() {
        let spec = NormSpec::quadratic(Real, GramMatrix::diagonal(&[4.0, 1.0])).unwrap();
        let n = norm_eval(&spec, &rv(&[1.0, 1.0])).unwrap();
        assert!((n - 5.0f64.sqrt()).abs() <= 1e-12);
        assert_eq!(norm_eval(&spec, &rv(&[1.0, 0.0])).unwrap(), 2.0);
    }

    #[test]
    fn combination_hand_values() {
        let l1 = NormSpec::lp(2, Real, 1.0).unwrap();
        let l2 = NormSpec::lp(2, Real, 2.0).unwrap();
        let sum = NormSpec::combination(
            CombinationMode::Sum,
            vec![
                CombinationTerm { coefficient: 0.5, spec: l1.clone() },
                CombinationTerm { coefficient: 0.5, spec: l2.clone() },
            ],
        )
        .unwrap();
        let n = norm_eval(&sum, &rv(&[3.0, 4.0])).unwrap();
        assert!((n - (0.5 * 7.0 + 0.5 * 5.0)).abs() <= 1e-12);

        let max = NormSpec::combination(
            CombinationMode::Max,
            vec![
                CombinationTerm { coefficient: 1.0, spec: l1 },
                CombinationTerm { coefficient: 1.0, spec: l2 },
            ],
        )
        .unwrap();
        assert_eq!(norm_eval(&max, &rv(&[3.0, 4.0])).unwrap(), 7.0);
    }

    #[test]
    fn complex_euclidean() {
        let spec = NormSpec::lp(2, Complex, 2.0).unwrap();
        // (1, i) has norm sqrt(2)
        let x = Vector::new(Complex, vec![1.0, 0.0, 0.0, 1.0]).unwrap();
        let n = norm_eval(&spec, &x).unwrap();
        assert!((n - 2.0f64.sqrt()).abs() <= 1e-12);
    }

    #[test]
    fn negation_leaves_every_kind_unchanged() {
        let specs = vec![
            NormSpec::lp(3, Real, 1.5).unwrap(),
            NormSpec::lp_inf(3, Real).unwrap(),
            NormSpec::quadratic(Real, GramMatrix::random_spd(3, Real, 7)).unwrap(),
        ];
        let x = rv(&[0.3, -1.7, 2.9]);
        for spec in &specs {
            let a = norm_eval(spec, &x).unwrap();
            let b = norm_eval(spec, &x.neg()).unwrap();
            assert_eq!(a, b, "negation changed {}", spec.describe());
        }
    }

    #[test]
    fn doubling_scales_exactly() {
        // scaling by a power of two commutes with every kernel bit-for-bit
        let spec = NormSpec::lp(2, Real, 1.0).unwrap();
        let x = rv(&[0.3, -1.7]);
        let two_x = x.scale(crate::scalar::Scalar::Real(2.0)).unwrap();
        assert_eq!(
            norm_eval(&spec, &two_x).unwrap(),
            2.0 * norm_eval(&spec, &x).unwrap()
        );
    }

    #[test]
    fn p_below_one_is_rejected() {
        let err = NormSpec::lp(2, Real, 0.5).unwrap_err();
        assert!(err.to_string().contains("p must be ≥ 1"), "{err}");
        assert!(NormSpec::lp(2, Real, f64::NAN).is_err());
    }

    #[test]
    fn indefinite_gram_is_rejected_at_construction() {
        let gram = GramMatrix::diagonal(&[1.0, -1.0]);
        let err = NormSpec::quadratic(Real, gram).unwrap_err();
        assert!(err.to_string().contains("positive definite"), "{err}");
    }

    #[test]
    fn asymmetric_gram_is_rejected() {
        let gram = GramMatrix::from_real_rows(vec![vec![1.0, 0.5], vec![0.0, 1.0]]).unwrap();
        assert!(NormSpec::quadratic(Real, gram).is_err());
    }

    #[test]
    fn complex_gram_on_real_field_is_rejected() {
        let gram = GramMatrix::from_complex_rows(vec![
            vec![[2.0, 0.0], [0.0, 0.5]],
            vec![[0.0, -0.5], [2.0, 0.0]],
        ])
        .unwrap();
        assert!(NormSpec::quadratic(Real, gram.clone()).is_err());
        assert!(NormSpec::quadratic(Complex, gram).is_ok());
    }

    #[test]
    fn bad_weights_are_rejected() {
        assert!(NormSpec::weighted_lp(2, Real, PExponent::Finite(2.0), vec![1.0]).is_err());
        assert!(
            NormSpec::weighted_lp(2, Real, PExponent::Finite(2.0), vec![1.0, 0.0]).is_err()
        );
    }

    #[test]
    fn combination_validation() {
        assert!(NormSpec::combination(CombinationMode::Sum, vec![]).is_err());
        let l1_dim2 = NormSpec::lp(2, Real, 1.0).unwrap();
        let l2_dim3 = NormSpec::lp(3, Real, 2.0).unwrap();
        let err = NormSpec::combination(
            CombinationMode::Sum,
            vec![
                CombinationTerm { coefficient: 1.0, spec: l1_dim2.clone() },
                CombinationTerm { coefficient: 1.0, spec: l2_dim3 },
            ],
        )
        .unwrap_err();
        assert!(err.to_string().contains("term 1"), "{err}");
        let err = NormSpec::combination(
            CombinationMode::Sum,
            vec![CombinationTerm { coefficient: -1.0, spec: l1_dim2 }],
        )
        .unwrap_err();
        assert!(err.to_string().contains("positive"), "{err}");
    }

    #[test]
    fn json_shapes_round_trip() {
        let l1 = NormSpec::lp(2, Real, 1.0).unwrap();
        let json = serde_json::to_string(&l1).unwrap();
        assert_eq!(json, r#"{"dim":2,"field":"real","kind":{"lp":{"p":1.0}}}"#);
        assert_eq!(NormSpec::from_json(&json).unwrap(), l1);

        let linf = NormSpec::lp_inf(2, Real).unwrap();
        let json = serde_json::to_string(&linf).unwrap();
        assert!(json.contains(r#""p":"inf""#), "{json}");
        assert_eq!(NormSpec::from_json(&json).unwrap(), linf);

        let quad = NormSpec::quadratic(Real, GramMatrix::diagonal(&[4.0, 1.0])).unwrap();
        let json = serde_json::to_string(&quad).unwrap();
        assert!(json.contains("[[4.0,0.0],[0.0,1.0]]"), "{json}");
        assert_eq!(NormSpec::from_json(&json).unwrap(), quad);
    }

    #[test]
    fn from_json_validates() {
        let err = NormSpec::from_json(r#"{"dim":2,"field":"real","kind":{"lp":{"p":0.5}}}"#)
            .unwrap_err();
        assert!(err.to_string().contains("p must be ≥ 1"), "{err}");
        // nested combination terms are validated too
        let nested = r#"{"dim":2,"field":"real","kind":{"combination":{"mode":"sum","terms":[
            {"coefficient":1.0,"spec":{"dim":2,"field":"real","kind":{"lp":{"p":0.25}}}}]}}}"#;
        assert!(NormSpec::from_json(nested).is_err());
    }

    #[test]
    fn dim_and_field_overrides() {
        let l1 = NormSpec::lp(2, Real, 1.0).unwrap();
        assert_eq!(l1.with_dim(5).unwrap().dim(), 5);
        assert_eq!(l1.with_field(Complex).unwrap().field(), Complex);
        let quad = NormSpec::quadratic(Real, GramMatrix::diagonal(&[4.0, 1.0])).unwrap();
        assert!(quad.with_dim(3).is_err());
        assert!(quad.with_field(Complex).is_ok());
    }

    #[test]
    fn axiom_scan_is_quiet_for_honest_norms() {
        let cfg = crate::sample::SampleConfig::new(2, Real).with_samples(2_000);
        for spec in [
            NormSpec::lp(2, Real, 1.0).unwrap(),
            NormSpec::quadratic(Real, GramMatrix::identity(2)).unwrap(),
        ] {
            let report = axiom_scan(&spec, &cfg).unwrap();
            assert!(
                report.sup_defect <= 1e-10,
                "{}: sup {:e}",
                spec.describe(),
                report.sup_defect
            );
        }
    }

    #[test]
    fn random_spd_is_accepted_for_both_fields() {
        for dim in [1, 2, 4, 8, 16] {
            let g = GramMatrix::random_spd(dim, Real, dim as u64);
            assert!(g.min_eigenvalue() >= 0.5 - 1e-9);
            NormSpec::quadratic(Real, g).unwrap();
            let g = GramMatrix::random_spd(dim, Complex, dim as u64);
            assert!(g.min_eigenvalue() >= 0.5 - 1e-9);
            NormSpec::quadratic(Complex, g).unwrap();
        }
    }
}
