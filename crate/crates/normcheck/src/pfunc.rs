//! The anchored profile function and its direct diagnostics.
//!
//! For a unit anchor y, the profile of a point x is
//!
//! ```text
//! p(x) = sqrt( (norm(x+y)^2 + norm(x-y)^2) / 2  -  1 )
//! ```
//!
//! The radicand is nonnegative for every norm (the two displaced norms
//! cannot both be small when y is unit length), and for an inner-product
//! norm the parallelogram identity collapses p(x) to exactly norm(x). How
//! far p strays from norm(x), and how far it strays from absolute
//! homogeneity, is therefore a measurable distance from inner-product
//! geometry; the scans in [`crate::diagnostics`] quantify both.

use crate::error::{Error, Result};
use crate::norm::{norm_eval, NormSpec};
use crate::report::{DefectReport, Witness};
use crate::sample::{check_cfg, domains, sample_point, SampleConfig};
use crate::scalar::Scalar;
use crate::scan::{sup_scan, Measured};
use crate::tol;
use crate::vector::Vector;
use serde::{Deserialize, Serialize};

/// A norm together with a unit anchor. Construction normalizes the anchor,
/// so any nonzero y is accepted; a zero y is rejected.
#[derive(Clone, Debug)]
pub struct PContext {
    spec: NormSpec,
    y: Vector,
}

impl PContext {
    pub fn new(spec: &NormSpec, y: &Vector) -> Result<Self> {
        spec.check_vector(y)?;
        let norm = norm_eval(spec, y)?;
        if norm == 0.0 {
            return Err(Error::ZeroVector);
        }
        let y = y.scale(Scalar::Real(1.0 / norm))?;
        let renorm = norm_eval(spec, &y)?;
        if (renorm - 1.0).abs() > tol::UNIT_NORM {
            return Err(Error::NonUnitDirection { norm: renorm });
        }
        Ok(PContext {
            spec: spec.clone(),
            y,
        })
    }

    pub fn spec(&self) -> &NormSpec {
        &self.spec
    }

    /// The normalized anchor.
    pub fn y(&self) -> &Vector {
        &self.y
    }
}

/// The quantity under the square root: `(norm(x+y)^2 + norm(x-y)^2)/2 - 1`.
pub fn radicand(ctx: &PContext, x: &Vector) -> Result<f64> {
    ctx.spec.check_vector(x)?;
    let np = norm_eval(&ctx.spec, &x.add(&ctx.y)?)?;
    let nm = norm_eval(&ctx.spec, &x.sub(&ctx.y)?)?;
    Ok(crate::numeric::comp_sum([
        0.5 * np * np,
        0.5 * nm * nm,
        -1.0,
    ]))
}

/// A profile value plus clamp metadata.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PValue {
    pub value: f64,
    /// Set when the radicand was negative beyond plain rounding noise but
    /// not badly enough to be a hard error; the value was clamped to 0.
    pub flagged: bool,
}

/// Grades a computed radicand against the clamp policy: nonnegative values
/// pass through, noise-level negatives clamp silently, suspicious negatives
/// clamp with a flag, and anything below the hard floor is an error because
/// the radicand is provably nonnegative in exact arithmetic.
pub(crate) fn apply_radicand_policy(r: f64) -> Result<PValue> {
    if r >= 0.0 {
        Ok(PValue {
            value: r.sqrt(),
            flagged: false,
        })
    } else if r >= tol::RADICAND_SILENT_FLOOR {
        Ok(PValue {
            value: 0.0,
            flagged: false,
        })
    } else if r >= tol::RADICAND_HARD_FLOOR {
        Ok(PValue {
            value: 0.0,
            flagged: true,
        })
    } else {
        Err(Error::NegativeRadicand {
            value: r,
            floor: tol::RADICAND_HARD_FLOOR,
        })
    }
}

/// Evaluates the profile at x.
pub fn p_eval(ctx: &PContext, x: &Vector) -> Result<PValue> {
    apply_radicand_policy(radicand(ctx, x)?)
}

/// Convenience wrapper returning just the profile value.
pub fn p_value(ctx: &PContext, x: &Vector) -> Result<f64> {
    Ok(p_eval(ctx, x)?.value)
}

/// Result of [`sandwich_check`]: violations of the two-sided bound
/// `norm(x) - 1 <= p(x) <= norm(x) + 1` over sampled x. The bound holds for
/// every norm with the lower half only meaningful at norm(x) >= 1, so the
/// subset restricted to that regime is reported alongside the full scan.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SandwichReport {
    pub all: DefectReport,
    pub norm_ge_one: DefectReport,
}

/// Scans for violations of the sandwich bound.
pub fn sandwich_check(ctx: &PContext, cfg: &SampleConfig) -> Result<SandwichReport> {
    check_cfg(&ctx.spec, cfg)?;

    let violation_at = |i: u64| -> Result<(f64, f64)> {
        let x = sample_point(&ctx.spec, cfg, domains::SCAN_X, i)?;
        let nx = norm_eval(&ctx.spec, &x)?;
        let p = p_value(ctx, &x)?;
        let lower = ((nx - 1.0) - p).max(0.0);
        let upper = (p - (nx + 1.0)).max(0.0);
        Ok((lower.max(upper), nx))
    };

    let build = |name: &str, restrict_ge_one: bool| -> Result<DefectReport> {
        let (best, index) = sup_scan(cfg.n_samples, |i| {
            let (v, nx) = violation_at(i)?;
            let v = if restrict_ge_one && nx < 1.0 { 0.0 } else { v };
            Ok(Measured::absolute(v))
        })?;
        let witness = if best.raw > 0.0 {
            Some(Witness {
                x: sample_point(&ctx.spec, cfg, domains::SCAN_X, index)?,
                lambda: None,
                y: ctx.y.clone(),
                x2: None,
                defect: best.raw,
            })
        } else {
            None
        };
        Ok(DefectReport::new(
            name,
            best.normalized,
            best.raw,
            witness,
            cfg.n_samples,
            tol::SANDWICH,
            cfg.seed,
        ))
    };

    Ok(SandwichReport {
        all: build("sandwich", false)?,
        norm_ge_one: build("sandwich_norm_ge_1", true)?,
    })
}

/// One row of a ray profile.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RayEntry {
    pub t: f64,
    pub p_value: f64,
    /// p(t x) / t; tends to 1 along every ray.
    pub ratio: f64,
    /// p(t x) - t * norm(x); stays in [-1, 1] along every ray.
    pub defect: f64,
}

/// Profile values along the ray t -> t x for a unit direction x.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RayProfile {
    pub direction: Vector,
    pub entries: Vec<RayEntry>,
}

/// The default geometric schedule 1, 2, 4, ..., 2^20. Powers of two scale
/// coordinates exactly, so the profile at large t carries no scaling noise.
pub fn default_ray_schedule() -> Vec<f64> {
    (0..=tol::defaults::RAY_MAX_EXP)
        .map(|k| (1u64 << k) as f64)
        .collect()
}

/// Evaluates the profile along a ray. The direction must be unit under the
/// context's norm (within 1e-10) and every t positive; entries come back
/// sorted by t.
pub fn ray_profile(ctx: &PContext, direction: &Vector, ts: &[f64]) -> Result<RayProfile> {
    ctx.spec.check_vector(direction)?;
    let dir_norm = norm_eval(&ctx.spec, direction)?;
    if (dir_norm - 1.0).abs() > tol::UNIT_NORM {
        return Err(Error::NonUnitDirection { norm: dir_norm });
    }
    if ts.is_empty() {
        return Err(Error::InvalidConfig("ray schedule must be nonempty".into()));
    }
    if let Some(&t) = ts.iter().find(|t| !t.is_finite() || **t <= 0.0) {
        return Err(Error::NonPositiveT { t });
    }
    let mut ts = ts.to_vec();
    ts.sort_by(f64::total_cmp);

    let entries = ts
        .iter()
        .map(|&t| {
            let x = direction.scale(Scalar::Real(t))?;
            let p = p_value(ctx, &x)?;
            Ok(RayEntry {
                t,
                p_value: p,
                ratio: p / t,
                defect: p - t * dir_norm,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(RayProfile {
        direction: direction.clone(),
        entries,
    })
}
