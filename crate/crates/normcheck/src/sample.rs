//! Deterministic sample generation.
//!
//! Every sampled object (vector, scalar, anchor direction) is produced from
//! its own counter-mode RNG stream keyed by `(seed, domain, index)`. Sample
//! i is therefore the same no matter how many workers evaluate the scan or
//! in what order, which is what makes byte-identical reruns possible.

use crate::error::{Error, Result};
use crate::norm::{norm_eval, NormSpec};
use crate::scalar::{Scalar, ScalarField};
use crate::tol::defaults;
use crate::vector::Vector;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

/// Stream identifiers. Two draws collide only if seed, domain, and index all
/// match, so each probe ingredient gets its own domain.
pub(crate) mod domains {
    /// Primary sampled vector of a scan.
    pub const SCAN_X: u64 = 1;
    /// Second vector of a sampled pair.
    pub const SCAN_PAIR: u64 = 2;
    /// Sampled scalars.
    pub const SCAN_SCALAR: u64 = 3;
    /// Unit anchor draws.
    pub const UNIT_ANCHOR: u64 = 4;
    /// Shell samples for the degenerate zero probe.
    pub const SHELL: u64 = 5;
    /// Random ray directions.
    pub const RAY_DIRECTION: u64 = 6;
    /// Third vector where a probe needs one.
    pub const SCAN_ANCHOR: u64 = 7;
    /// Random Gram matrix generation.
    pub const GRAM: u64 = 8;
}

/// Distribution of a positive magnitude (vector radius or scalar modulus).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MagnitudeLaw {
    /// log(r) uniform on [log lo, log hi]; spreads samples across scales.
    LogUniform { lo: f64, hi: f64 },
    /// r uniform on [lo, hi].
    Uniform { lo: f64, hi: f64 },
}

impl MagnitudeLaw {
    fn validate(&self, what: &str) -> Result<()> {
        let (lo, hi) = match self {
            MagnitudeLaw::LogUniform { lo, hi } | MagnitudeLaw::Uniform { lo, hi } => (*lo, *hi),
        };
        if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && hi >= lo) {
            return Err(Error::InvalidConfig(format!(
                "{what} bounds must be positive, finite, and ordered (got [{lo}, {hi}])"
            )));
        }
        Ok(())
    }

    pub(crate) fn draw(&self, rng: &mut ChaCha8Rng) -> f64 {
        let u: f64 = rng.gen();
        match self {
            MagnitudeLaw::LogUniform { lo, hi } => lo * (u * (hi / lo).ln()).exp(),
            MagnitudeLaw::Uniform { lo, hi } => lo + u * (hi - lo),
        }
    }
}

/// Sampling configuration shared by all scans.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub dim: usize,
    pub field: ScalarField,
    pub n_samples: u64,
    /// Law for the norm of sampled vectors.
    pub radius_law: MagnitudeLaw,
    /// Law for the modulus of sampled scalars; the phase is uniform in the
    /// complex case and a fair sign in the real case.
    pub scalar_law: MagnitudeLaw,
    pub seed: u64,
}

impl SampleConfig {
    pub fn new(dim: usize, field: ScalarField) -> Self {
        SampleConfig {
            dim,
            field,
            n_samples: defaults::N_SAMPLES,
            radius_law: MagnitudeLaw::LogUniform {
                lo: defaults::RADIUS_LO,
                hi: defaults::RADIUS_HI,
            },
            scalar_law: MagnitudeLaw::LogUniform {
                lo: defaults::SCALAR_LO,
                hi: defaults::SCALAR_HI,
            },
            seed: defaults::SEED,
        }
    }

    pub fn with_samples(mut self, n: u64) -> Self {
        self.n_samples = n;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::InvalidConfig("dim must be ≥ 1".into()));
        }
        if self.n_samples == 0 {
            return Err(Error::InvalidConfig("n_samples must be positive".into()));
        }
        self.radius_law.validate("radius law")?;
        self.scalar_law.validate("scalar law")?;
        Ok(())
    }
}

/// Checks that a config and spec agree before a scan runs against both.
pub(crate) fn check_cfg(spec: &NormSpec, cfg: &SampleConfig) -> Result<()> {
    cfg.validate()?;
    if cfg.dim != spec.dim() {
        return Err(Error::DimensionMismatch {
            expected: spec.dim(),
            got: cfg.dim,
        });
    }
    if cfg.field != spec.field() {
        return Err(Error::FieldMismatch {
            expected: spec.field(),
            got: cfg.field,
        });
    }
    Ok(())
}

/// RNG for one sample stream. ChaCha8 keyed directly with the three stream
/// coordinates; cheap to construct per sample.
pub(crate) fn rng_for(seed: u64, domain: u64, index: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&domain.to_le_bytes());
    key[16..24].copy_from_slice(&index.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

const MAX_DRAW_ATTEMPTS: u32 = 16;

/// Draws an isotropic direction and normalizes it under the spec's norm.
/// Degenerate draws (all coordinates zero, or a norm too small to divide by)
/// are redrawn from the same stream a bounded number of times.
fn draw_unit(spec: &NormSpec, rng: &mut ChaCha8Rng) -> Result<Vector> {
    let slots = spec.dim() * spec.field().components();
    for _ in 0..MAX_DRAW_ATTEMPTS {
        let coords: Vec<f64> = (0..slots).map(|_| rng.sample(StandardNormal)).collect();
        let candidate = Vector::new(spec.field(), coords)?;
        let norm = norm_eval(spec, &candidate)?;
        if norm.is_finite() && norm > 1e-300 {
            return candidate.scale(Scalar::Real(1.0 / norm));
        }
    }
    Err(Error::DegenerateDraw {
        attempts: MAX_DRAW_ATTEMPTS,
    })
}

/// The `index`-th unit-sphere draw: isotropic direction, normalized so its
/// norm under `spec` is 1 to within a few ulps.
pub fn sample_unit_sphere_at(spec: &NormSpec, cfg: &SampleConfig, index: u64) -> Result<Vector> {
    check_cfg(spec, cfg)?;
    let mut rng = rng_for(cfg.seed, domains::UNIT_ANCHOR, index);
    draw_unit(spec, &mut rng)
}

/// First unit-sphere draw of the stream.
pub fn sample_unit_sphere(spec: &NormSpec, cfg: &SampleConfig) -> Result<Vector> {
    sample_unit_sphere_at(spec, cfg, 0)
}

/// The `index`-th random ray direction: a unit draw from its own stream, so
/// ray studies and anchor draws never share samples.
pub fn sample_ray_direction(spec: &NormSpec, cfg: &SampleConfig, index: u64) -> Result<Vector> {
    check_cfg(spec, cfg)?;
    let mut rng = rng_for(cfg.seed, domains::RAY_DIRECTION, index);
    draw_unit(spec, &mut rng)
}

/// The `index`-th sampled point of `domain`: unit direction scaled by a
/// radius from the config's radius law, so `norm(x)` follows that law.
pub(crate) fn sample_point(
    spec: &NormSpec,
    cfg: &SampleConfig,
    domain: u64,
    index: u64,
) -> Result<Vector> {
    let mut rng = rng_for(cfg.seed, domain, index);
    let unit = draw_unit(spec, &mut rng)?;
    let radius = cfg.radius_law.draw(&mut rng);
    unit.scale(Scalar::Real(radius))
}

/// The `index`-th sampled scalar: modulus from the scalar law, uniform phase
/// (complex) or fair sign (real).
pub(crate) fn sample_scalar(cfg: &SampleConfig, index: u64) -> Scalar {
    let mut rng = rng_for(cfg.seed, domains::SCAN_SCALAR, index);
    let modulus = cfg.scalar_law.draw(&mut rng);
    match cfg.field {
        ScalarField::Real => {
            let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
            Scalar::Real(sign * modulus)
        }
        ScalarField::Complex => {
            let phase: f64 = rng.gen::<f64>() * std::f64::consts::TAU;
            Scalar::Complex([modulus * phase.cos(), modulus * phase.sin()])
        }
    }
}

/// Shell sample for the degenerate zero probe: unit direction scaled by a
/// uniform radius in `[lo, hi]`.
pub(crate) fn sample_shell(
    spec: &NormSpec,
    cfg: &SampleConfig,
    index: u64,
    lo: f64,
    hi: f64,
) -> Result<Vector> {
    let mut rng = rng_for(cfg.seed, domains::SHELL, index);
    let unit = draw_unit(spec, &mut rng)?;
    let radius = MagnitudeLaw::Uniform { lo, hi }.draw(&mut rng);
    unit.scale(Scalar::Real(radius))
}
