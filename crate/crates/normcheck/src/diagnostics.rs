//! Defect scans and the classifier.
//!
//! Three measurable quantities vanish together exactly when a norm is
//! induced by an inner product: the homogeneity defect of the anchored
//! profile, the gap between the profile and the norm, and the parallelogram
//! defect. [`classify`] runs all three and turns their sups into a verdict;
//! the remaining probes here chase more specific behaviors (zeros of the
//! profile away from the origin, and the bounded drift of the profile along
//! rays).

use crate::error::{Error, Result};
use crate::norm::{norm_eval, NormSpec};
use crate::pfunc::{p_value, ray_profile, PContext, RayProfile};
use crate::report::{DefectReport, Outcome, Verdict, Witness};
use crate::sample::{
    check_cfg, domains, sample_point, sample_scalar, sample_shell, sample_unit_sphere_at,
    SampleConfig,
};
use crate::scalar::Scalar;
use crate::scan::{sup_scan, Measured};
use crate::tol;
use crate::vector::Vector;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Sup over sampled (lambda, x) of the homogeneity defect
/// `|p(lambda x) - |lambda| p(x)|`, normalized by `max(1, |lambda| p(x))`
/// so the threshold is scale-free across radius and scalar laws.
pub fn homogeneity_defect(ctx: &PContext, cfg: &SampleConfig) -> Result<DefectReport> {
    check_cfg(ctx.spec(), cfg)?;

    let measure = |i: u64| -> Result<(Vector, Scalar, Measured)> {
        let x = sample_point(ctx.spec(), cfg, domains::SCAN_X, i)?;
        let lambda = sample_scalar(cfg, i);
        let expected = lambda.modulus() * p_value(ctx, &x)?;
        let raw = (p_value(ctx, &x.scale(lambda)?)? - expected).abs();
        Ok((
            x,
            lambda,
            Measured {
                normalized: raw / expected.max(1.0),
                raw,
            },
        ))
    };

    let (best, index) = sup_scan(cfg.n_samples, |i| Ok(measure(i)?.2))?;
    let witness = if best.normalized > 0.0 {
        let (x, lambda, _) = measure(index)?;
        Some(Witness {
            x,
            lambda: Some(lambda),
            y: ctx.y().clone(),
            x2: None,
            defect: best.raw,
        })
    } else {
        None
    };
    Ok(DefectReport::new(
        "homogeneity",
        best.normalized,
        best.raw,
        witness,
        cfg.n_samples,
        tol::CLASSIFY_THRESHOLD,
        cfg.seed,
    ))
}

/// Sup over sampled x of `|p(x) - norm(x)|`, normalized by `max(1, norm(x))`.
pub fn identity_defect(ctx: &PContext, cfg: &SampleConfig) -> Result<DefectReport> {
    check_cfg(ctx.spec(), cfg)?;

    let measure = |i: u64| -> Result<(Vector, Measured)> {
        let x = sample_point(ctx.spec(), cfg, domains::SCAN_X, i)?;
        let nx = norm_eval(ctx.spec(), &x)?;
        let raw = (p_value(ctx, &x)? - nx).abs();
        Ok((
            x,
            Measured {
                normalized: raw / nx.max(1.0),
                raw,
            },
        ))
    };

    let (best, index) = sup_scan(cfg.n_samples, |i| Ok(measure(i)?.1))?;
    let witness = if best.normalized > 0.0 {
        let (x, _) = measure(index)?;
        Some(Witness {
            x,
            lambda: None,
            y: ctx.y().clone(),
            x2: None,
            defect: best.raw,
        })
    } else {
        None
    };
    Ok(DefectReport::new(
        "identity",
        best.normalized,
        best.raw,
        witness,
        cfg.n_samples,
        tol::CLASSIFY_THRESHOLD,
        cfg.seed,
    ))
}

/// Pointwise parallelogram defect
/// `| norm(x+y)^2 + norm(x-y)^2 - 2 norm(x)^2 - 2 norm(y)^2 |`.
///
/// The four terms are accumulated with compensation because the defect is a
/// near-total cancellation for near-quadratic norms at large radius.
pub fn parallelogram_defect(spec: &NormSpec, x: &Vector, y: &Vector) -> Result<f64> {
    let a = norm_eval(spec, &x.add(y)?)?;
    let b = norm_eval(spec, &x.sub(y)?)?;
    let nx = norm_eval(spec, x)?;
    let ny = norm_eval(spec, y)?;
    Ok(crate::numeric::comp_sum([a * a, b * b, -2.0 * nx * nx, -2.0 * ny * ny]).abs())
}

/// Batch variant of [`parallelogram_defect`] over sampled pairs, normalized
/// by `max(1, 2 norm(x)^2 + 2 norm(y)^2)`.
pub fn parallelogram_scan(spec: &NormSpec, cfg: &SampleConfig) -> Result<DefectReport> {
    check_cfg(spec, cfg)?;

    let measure = |i: u64| -> Result<(Vector, Vector, Measured)> {
        let x = sample_point(spec, cfg, domains::SCAN_X, i)?;
        let y = sample_point(spec, cfg, domains::SCAN_PAIR, i)?;
        let raw = parallelogram_defect(spec, &x, &y)?;
        let nx = norm_eval(spec, &x)?;
        let ny = norm_eval(spec, &y)?;
        let scale = (2.0 * nx * nx + 2.0 * ny * ny).max(1.0);
        Ok((
            x,
            y,
            Measured {
                normalized: raw / scale,
                raw,
            },
        ))
    };

    let (best, index) = sup_scan(cfg.n_samples, |i| Ok(measure(i)?.2))?;
    let witness = if best.normalized > 0.0 {
        let (x, y, _) = measure(index)?;
        Some(Witness {
            x,
            lambda: None,
            y,
            x2: None,
            defect: best.raw,
        })
    } else {
        None
    };
    Ok(DefectReport::new(
        "parallelogram",
        best.normalized,
        best.raw,
        witness,
        cfg.n_samples,
        tol::CLASSIFY_THRESHOLD,
        cfg.seed,
    ))
}

/// How many shell candidates get local refinement.
const REFINE_CANDIDATES: usize = 32;
/// Step-shrink levels of the coordinate descent (halving per level).
const REFINE_LEVELS: u32 = 40;
/// Sweep cap per level, so a level cannot loop unboundedly on slow descent.
const REFINE_SWEEPS_PER_LEVEL: u32 = 50;

/// Coordinate descent on `p` from `start`, with shrinking steps. Moves that
/// would take the norm below the floor are rejected, so the minimizer cannot
/// escape to the origin where `p` vanishes for every norm.
fn refine_candidate(ctx: &PContext, start: Vector) -> Result<(Vector, f64)> {
    let mut x = start;
    let mut p = p_value(ctx, &x)?;
    let mut step = 0.25;
    for _ in 0..REFINE_LEVELS {
        for _ in 0..REFINE_SWEEPS_PER_LEVEL {
            let mut improved = false;
            for slot in 0..x.coords().len() {
                for delta in [step, -step] {
                    let mut cand = x.clone();
                    cand.coords_mut()[slot] += delta;
                    if norm_eval(ctx.spec(), &cand)? < tol::DEGENERATE_MIN_NORM {
                        continue;
                    }
                    let pc = p_value(ctx, &cand)?;
                    if pc < p {
                        x = cand;
                        p = pc;
                        improved = true;
                    }
                }
            }
            if !improved {
                break;
            }
        }
        if p == 0.0 {
            break;
        }
        step *= 0.5;
    }
    Ok((x, p))
}

/// Searches for a zero of the profile away from the origin: a nonzero x with
/// `p(x)` at noise level, which no positive definite function admits.
///
/// Sampling runs on shells `norm(x) in [0.1, 2]`; the lowest-ratio candidates
/// get coordinate-descent refinement. When a zero is found the report's
/// defect is the witness norm (how far from the origin the profile vanishes)
/// and the witness satisfies `p(x) <= tolerance`. Either way `min_ratio`
/// records the smallest `p(x)/norm(x)` seen across shell samples and refined
/// endpoints; values bounded away from zero are evidence of positive
/// definiteness at the search resolution. `n_samples` counts shell samples
/// only, not refinement evaluations.
pub fn degenerate_zero_probe(ctx: &PContext, cfg: &SampleConfig) -> Result<DefectReport> {
    check_cfg(ctx.spec(), cfg)?;
    let (lo, hi) = (tol::DEGENERATE_MIN_NORM, 2.0);

    let shell: Vec<(f64, f64)> = (0..cfg.n_samples)
        .into_par_iter()
        .map(|i| -> Result<(f64, f64)> {
            let x = sample_shell(ctx.spec(), cfg, i, lo, hi)?;
            let n = norm_eval(ctx.spec(), &x)?;
            Ok((p_value(ctx, &x)? / n, n))
        })
        .collect::<Result<_>>()?;

    let mut min_ratio = shell.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);

    let mut order: Vec<usize> = (0..shell.len()).collect();
    order.sort_by(|&a, &b| shell[a].0.total_cmp(&shell[b].0).then(a.cmp(&b)));
    order.truncate(REFINE_CANDIDATES);

    let refined: Vec<(Vector, f64, f64)> = order
        .par_iter()
        .map(|&i| -> Result<(Vector, f64, f64)> {
            let start = sample_shell(ctx.spec(), cfg, i as u64, lo, hi)?;
            let (x, p) = refine_candidate(ctx, start)?;
            let n = norm_eval(ctx.spec(), &x)?;
            Ok((x, p, n))
        })
        .collect::<Result<_>>()?;

    for (_, p, n) in &refined {
        min_ratio = min_ratio.min(p / n);
    }

    // the winning witness is the found zero farthest from the origin;
    // ties keep the lowest-ratio candidate, preserving determinism
    let found = refined
        .iter()
        .filter(|(_, p, n)| *p <= tol::DEGENERATE_P && *n >= tol::DEGENERATE_MIN_NORM)
        .max_by(|a, b| a.2.total_cmp(&b.2));

    let (sup, witness) = match found {
        Some((x, _, n)) => (
            *n,
            Some(Witness {
                x: x.clone(),
                lambda: None,
                y: ctx.y().clone(),
                x2: None,
                defect: *n,
            }),
        ),
        None => (0.0, None),
    };

    let mut report = DefectReport::new(
        "degenerate_zero",
        sup,
        sup,
        witness,
        cfg.n_samples,
        tol::DEGENERATE_P,
        cfg.seed,
    );
    report.min_ratio = Some(min_ratio);
    Ok(report)
}

/// Ray drift summary produced by [`scaling_tension_probe`].
///
/// `d(t) = p(t x) - t` is bounded by 1 along every ray of every norm. If p
/// were additionally homogeneous the bounded difference would have to vanish
/// identically, so a drift that converges to a nonzero level while
/// `p(t x)/t` flattens to 1 is a quantitative signature of inhomogeneity.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScalingTension {
    pub profile: RayProfile,
    pub sup_abs_defect: f64,
    /// Drift at the largest t of the schedule.
    pub final_defect: f64,
    /// `|p(t x)/t - 1|` at the largest t.
    pub final_ratio_deviation: f64,
}

/// Profiles a ray and checks the global drift bound `|d(t)| <= 1`.
pub fn scaling_tension_probe(
    ctx: &PContext,
    direction: &Vector,
    ts: &[f64],
) -> Result<ScalingTension> {
    let profile = ray_profile(ctx, direction, ts)?;
    let sup_abs_defect = profile
        .entries
        .iter()
        .map(|e| e.defect.abs())
        .fold(0.0, f64::max);
    if sup_abs_defect > 1.0 + tol::RAY_DEFECT_SLACK {
        return Err(Error::SelfCheck(format!(
            "ray drift {sup_abs_defect} exceeds the bound 1 that holds for every norm"
        )));
    }
    let last = profile
        .entries
        .last()
        .expect("ray_profile rejects empty schedules");
    Ok(ScalingTension {
        sup_abs_defect,
        final_defect: last.defect,
        final_ratio_deviation: (last.ratio - 1.0).abs(),
        profile,
    })
}

/// Keeps the anchor whose scan saw the larger normalized sup; earlier
/// anchors win ties. Sample counts accumulate so the merged report states
/// how many evaluations the final sup ranges over.
fn merge_reports(slot: &mut Option<DefectReport>, next: DefectReport) {
    match slot {
        None => *slot = Some(next),
        Some(cur) => {
            let n_samples = cur.n_samples + next.n_samples;
            if next.sup_defect > cur.sup_defect {
                *cur = next;
            }
            cur.n_samples = n_samples;
        }
    }
}

/// Anchors used by [`classify`]: every canonical basis direction plus a
/// fixed number of random unit draws. All get normalized by `PContext`.
fn classify_anchors(spec: &NormSpec, cfg: &SampleConfig) -> Result<Vec<Vector>> {
    let mut anchors: Vec<Vector> = (0..spec.dim())
        .map(|i| Vector::basis(spec.field(), spec.dim(), i))
        .collect();
    for k in 0..tol::defaults::Y_DRAWS {
        anchors.push(sample_unit_sphere_at(spec, cfg, k)?);
    }
    Ok(anchors)
}

/// Runs the three defect families and compares their sups to `threshold`.
///
/// A `NotInnerProduct` outcome is a certificate: some evidence report
/// carries a witness whose defect is recomputable from its stored
/// ingredients. An `InnerProductConsistent` outcome is sampling evidence
/// only, at the resolution of `cfg`.
///
/// The three families are equivalent in exact arithmetic, so a parallelogram
/// sup far above threshold while both profile-based sups sit below it means
/// the scans themselves disagree; that inconsistency is reported as an error
/// rather than folded into a verdict.
pub fn classify(spec: &NormSpec, cfg: &SampleConfig, threshold: f64) -> Result<Verdict> {
    check_cfg(spec, cfg)?;
    if !threshold.is_finite() || threshold <= 0.0 {
        return Err(Error::InvalidConfig("threshold must be positive".into()));
    }

    let mut homogeneity: Option<DefectReport> = None;
    let mut identity: Option<DefectReport> = None;
    for y in &classify_anchors(spec, cfg)? {
        let ctx = PContext::new(spec, y)?;
        merge_reports(&mut homogeneity, homogeneity_defect(&ctx, cfg)?);
        merge_reports(&mut identity, identity_defect(&ctx, cfg)?);
    }
    let mut evidence = vec![
        homogeneity.expect("at least one anchor"),
        identity.expect("at least one anchor"),
        parallelogram_scan(spec, cfg)?,
    ];
    for report in &mut evidence {
        report.tolerance = threshold;
    }

    let (h, id, para) = (
        evidence[0].sup_defect,
        evidence[1].sup_defect,
        evidence[2].sup_defect,
    );
    if para > 100.0 * threshold && h < threshold && id < threshold {
        return Err(Error::EquivalenceViolation {
            parallelogram: para,
            homogeneity: h,
            identity: id,
            threshold,
        });
    }

    let outcome = if evidence.iter().any(|r| r.sup_defect > threshold) {
        Outcome::NotInnerProduct
    } else {
        Outcome::InnerProductConsistent
    };
    Ok(Verdict {
        outcome,
        threshold,
        evidence,
    })
}

/// Recomputes a witness's defect from its stored ingredients, dispatching on
/// the probe name. Lets a consumer check a report's certificate without
/// trusting the scan that produced it.
pub fn recompute_witness(spec: &NormSpec, probe_name: &str, w: &Witness) -> Result<f64> {
    let anchored = || PContext::new(spec, &w.y);
    match probe_name {
        "homogeneity" => {
            let ctx = anchored()?;
            let lambda = w.lambda.ok_or_else(|| {
                Error::InvalidConfig("homogeneity witness is missing lambda".into())
            })?;
            let expected = lambda.modulus() * p_value(&ctx, &w.x)?;
            Ok((p_value(&ctx, &w.x.scale(lambda)?)? - expected).abs())
        }
        "identity" => {
            let ctx = anchored()?;
            Ok((p_value(&ctx, &w.x)? - norm_eval(spec, &w.x)?).abs())
        }
        "parallelogram" => parallelogram_defect(spec, &w.x, &w.y),
        "sandwich" | "sandwich_norm_ge_1" => {
            let ctx = anchored()?;
            let nx = norm_eval(spec, &w.x)?;
            let p = p_value(&ctx, &w.x)?;
            Ok(((nx - 1.0) - p).max(p - (nx + 1.0)).max(0.0))
        }
        "degenerate_zero" => norm_eval(spec, &w.x),
        "norm_axioms" => {
            let lambda = w
                .lambda
                .ok_or_else(|| Error::InvalidConfig("axiom witness is missing lambda".into()))?;
            let nx = norm_eval(spec, &w.x)?;
            let triangle =
                (norm_eval(spec, &w.x.add(&w.y)?)? - nx - norm_eval(spec, &w.y)?).max(0.0);
            let homogeneity = (norm_eval(spec, &w.x.scale(lambda)?)? - lambda.modulus() * nx).abs();
            Ok(triangle.max(homogeneity))
        }
        other => Err(Error::InvalidConfig(format!(
            "no defect formula registered for probe {other}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::GramMatrix;
    use crate::scalar::ScalarField::{Complex, Real};
    use proptest::prelude::*;

    fn rv(coords: &[f64]) -> Vector {
        Vector::new(Real, coords.to_vec()).unwrap()
    }

    fn anchored(spec: &NormSpec, y: &[f64]) -> PContext {
        PContext::new(spec, &rv(y)).unwrap()
    }

    #[test]
    fn homogeneity_point_value_for_the_taxicab_norm() {
        // p(2 e2) = sqrt(8), p(e2) = sqrt(3); the gap is the raw defect
        let ctx = anchored(&NormSpec::lp(2, Real, 1.0).unwrap(), &[1.0, 0.0]);
        let p1 = p_value(&ctx, &rv(&[0.0, 1.0])).unwrap();
        let p2 = p_value(&ctx, &rv(&[0.0, 2.0])).unwrap();
        let raw = (p2 - 2.0 * p1).abs();
        let oracle = (8.0f64.sqrt() - 2.0 * 3.0f64.sqrt()).abs();
        assert!((raw - oracle).abs() <= 1e-12);
        assert!((raw - 0.6357).abs() <= 1e-4);
    }

    #[test]
    fn identity_point_value_for_the_taxicab_norm() {
        let ctx = anchored(&NormSpec::lp(2, Real, 1.0).unwrap(), &[1.0, 0.0]);
        let x = rv(&[0.0, 1.0]);
        let raw = (p_value(&ctx, &x).unwrap() - 1.0).abs();
        assert!((raw - (3.0f64.sqrt() - 1.0)).abs() <= 1e-12);
    }

    #[test]
    fn parallelogram_point_values() {
        let l1 = NormSpec::lp(2, Real, 1.0).unwrap();
        let d = parallelogram_defect(&l1, &rv(&[1.0, 0.0]), &rv(&[0.0, 1.0])).unwrap();
        assert_eq!(d, 4.0, "taxicab basis pair must give exactly 4");

        let l2 = NormSpec::lp(2, Real, 2.0).unwrap();
        let d = parallelogram_defect(&l2, &rv(&[1.3, -0.2]), &rv(&[0.4, 2.2])).unwrap();
        assert!(d <= 1e-9, "euclidean defect {d:e}");

        // x = y reduces to |norm(2x)^2 - 4 norm(x)^2|, exactly zero because
        // doubling scales every kernel exactly
        let x = rv(&[0.7, -1.9]);
        assert_eq!(parallelogram_defect(&l1, &x, &x).unwrap(), 0.0);
    }

    #[test]
    fn euclidean_scans_are_quiet() {
        let spec = NormSpec::lp(2, Real, 2.0).unwrap();
        let cfg = SampleConfig::new(2, Real).with_samples(3_000);
        let ctx = anchored(&spec, &[1.0, 0.0]);
        assert!(homogeneity_defect(&ctx, &cfg).unwrap().sup_defect <= 1e-9);
        assert!(identity_defect(&ctx, &cfg).unwrap().sup_defect <= 1e-9);
        assert!(parallelogram_scan(&spec, &cfg).unwrap().sup_defect <= 1e-9);
    }

    #[test]
    fn taxicab_scans_produce_recomputable_witnesses() {
        let spec = NormSpec::lp(2, Real, 1.0).unwrap();
        let cfg = SampleConfig::new(2, Real).with_samples(2_000);
        let ctx = anchored(&spec, &[1.0, 0.0]);

        for report in [
            homogeneity_defect(&ctx, &cfg).unwrap(),
            identity_defect(&ctx, &cfg).unwrap(),
            parallelogram_scan(&spec, &cfg).unwrap(),
        ] {
            assert!(report.sup_defect > 1e-3, "{} too quiet", report.probe_name);
            let w = report.witness.as_ref().expect("witness for a loud sup");
            let again = recompute_witness(&spec, &report.probe_name, w).unwrap();
            assert!(
                (again - w.defect).abs() <= tol::WITNESS_RECOMPUTE * w.defect.abs().max(1.0),
                "{}: stored {} vs recomputed {}",
                report.probe_name,
                w.defect,
                again
            );
        }
    }

    #[test]
    fn degenerate_zero_found_for_the_max_norm() {
        let spec = NormSpec::lp_inf(2, Real).unwrap();
        let cfg = SampleConfig::new(2, Real).with_samples(2_000);
        let ctx = anchored(&spec, &[1.0, 0.0]);
        let report = degenerate_zero_probe(&ctx, &cfg).unwrap();
        let w = report.witness.expect("max norm has a flat profile segment");
        let n = norm_eval(&spec, &w.x).unwrap();
        assert!(n >= 0.4, "witness norm {n}");
        assert!(p_value(&ctx, &w.x).unwrap() <= tol::DEGENERATE_P);
        assert_eq!(report.sup_defect, n);
    }

    #[test]
    fn degenerate_zero_absent_for_strictly_positive_profiles() {
        let cfg = SampleConfig::new(2, Real).with_samples(2_000);
        for spec in [
            NormSpec::lp(2, Real, 1.0).unwrap(),
            NormSpec::lp(2, Real, 2.0).unwrap(),
        ] {
            let ctx = anchored(&spec, &[1.0, 0.0]);
            let report = degenerate_zero_probe(&ctx, &cfg).unwrap();
            assert!(report.witness.is_none(), "{}", spec.describe());
            assert_eq!(report.sup_defect, 0.0);
            let ratio = report.min_ratio.unwrap();
            // both profiles dominate the norm, so the ratio never dips below 1
            assert!(ratio >= 0.9, "min ratio {ratio}");
        }
    }

    #[test]
    fn scaling_tension_matches_the_taxicab_limit() {
        let ctx = anchored(&NormSpec::lp(2, Real, 1.0).unwrap(), &[1.0, 0.0]);
        let ts = crate::pfunc::default_ray_schedule();
        let summary = scaling_tension_probe(&ctx, &rv(&[0.0, 1.0]), &ts).unwrap();
        assert!(summary.sup_abs_defect <= 1.0 + tol::RAY_DEFECT_SLACK);
        assert!((summary.final_defect - 1.0).abs() <= 1e-3);
        assert!(summary.final_ratio_deviation <= 1e-3);
    }

    #[test]
    fn classify_accepts_euclidean_and_rejects_taxicab() {
        let cfg = SampleConfig::new(4, Real).with_samples(2_000);
        let verdict = classify(&NormSpec::lp(4, Real, 2.0).unwrap(), &cfg, 1e-6).unwrap();
        assert_eq!(verdict.outcome, Outcome::InnerProductConsistent);
        assert!(verdict.worst().unwrap().sup_defect <= 1e-9);

        let cfg = SampleConfig::new(2, Real).with_samples(2_000);
        let verdict = classify(&NormSpec::lp(2, Real, 1.0).unwrap(), &cfg, 1e-6).unwrap();
        assert_eq!(verdict.outcome, Outcome::NotInnerProduct);
        let worst = verdict.worst().unwrap();
        assert!(worst.sup_defect > 1e-6);
        assert!(worst.witness.as_ref().unwrap().defect >= 0.5);

        // a loud homogeneity family comes with a nonzero identity family
        assert!(verdict.evidence[0].sup_defect > 1e-6);
        assert!(verdict.evidence[1].sup_defect > 0.0);
    }

    #[test]
    fn classify_handles_dimension_one() {
        // every norm on one dimension is a positive multiple of |x|, which
        // the parallelogram law accepts
        let cfg = SampleConfig::new(1, Real).with_samples(1_000);
        let verdict = classify(&NormSpec::lp(1, Real, 1.0).unwrap(), &cfg, 1e-6).unwrap();
        assert_eq!(verdict.outcome, Outcome::InnerProductConsistent);
    }

    #[test]
    fn classify_merges_anchor_counts() {
        let spec = NormSpec::lp(2, Real, 2.0).unwrap();
        let cfg = SampleConfig::new(2, Real).with_samples(500);
        let verdict = classify(&spec, &cfg, 1e-6).unwrap();
        // 2 basis anchors + 8 draws, 500 samples each
        assert_eq!(verdict.evidence[0].n_samples, 5_000);
        assert_eq!(verdict.evidence[1].n_samples, 5_000);
        assert_eq!(verdict.evidence[2].n_samples, 500);
        for r in &verdict.evidence {
            assert_eq!(r.tolerance, 1e-6);
        }
        assert_eq!(
            verdict.evidence.iter().map(|r| r.probe_name.as_str()).collect::<Vec<_>>(),
            vec!["homogeneity", "identity", "parallelogram"]
        );
    }

    #[test]
    fn classify_rejects_bad_threshold() {
        let spec = NormSpec::lp(2, Real, 2.0).unwrap();
        let cfg = SampleConfig::new(2, Real).with_samples(100);
        assert!(classify(&spec, &cfg, 0.0).is_err());
        assert!(classify(&spec, &cfg, f64::NAN).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(3))]

        // quadratic norms satisfy all three identities at any dimension,
        // field, and seed
        #[test]
        fn quadratic_norms_classify_consistent(
            dim_pick in 0usize..4,
            complex in proptest::bool::ANY,
            seed in proptest::num::u64::ANY,
        ) {
            let dim = [2usize, 4, 8, 16][dim_pick];
            let field = if complex { Complex } else { Real };
            let gram = GramMatrix::random_spd(dim, field, seed);
            let spec = NormSpec::quadratic(field, gram).unwrap();
            let cfg = SampleConfig::new(dim, field)
                .with_samples(10_000)
                .with_seed(seed ^ 0x9e37_79b9);
            let verdict = classify(&spec, &cfg, 1e-6).unwrap();
            prop_assert_eq!(verdict.outcome, Outcome::InnerProductConsistent);
            for r in &verdict.evidence {
                prop_assert!(r.sup_defect <= 1e-8, "{}: {:e}", r.probe_name, r.sup_defect);
            }
        }

        // no Lp norm other than p = 2 survives classification in dim >= 2
        #[test]
        fn non_euclidean_lp_classifies_not_inner_product(seed in proptest::num::u64::ANY) {
            for spec in [
                NormSpec::lp(2, Real, 1.0).unwrap(),
                NormSpec::lp(2, Real, 1.5).unwrap(),
                NormSpec::lp(2, Real, 3.0).unwrap(),
                NormSpec::lp_inf(2, Real).unwrap(),
            ] {
                let cfg = SampleConfig::new(2, Real).with_samples(1_000).with_seed(seed);
                let verdict = classify(&spec, &cfg, 1e-6).unwrap();
                prop_assert_eq!(verdict.outcome, Outcome::NotInnerProduct, "{}", spec.describe());
                let worst = verdict.worst().unwrap();
                prop_assert!(worst.witness.is_some());
            }
        }
    }
}
