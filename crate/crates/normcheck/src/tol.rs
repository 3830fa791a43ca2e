//! Centralized numerical tolerances and defaults.
//!
//! Every probe in this crate compares floating-point quantities that are
//! equal in exact arithmetic for well-behaved norms. The constants below
//! draw the line between expected rounding noise and a genuine defect; each
//! one documents why its magnitude is what it is. Keeping them in one place
//! makes the accepted noise budget auditable.

/// How far a "unit" vector's norm may sit from 1 after normalization.
/// One division plus one norm evaluation costs a few ulps, nowhere near this.
pub const UNIT_NORM: f64 = 1e-10;

/// Radicand values in `[-RADICAND_SILENT_FLOOR, 0)` are ordinary float noise
/// (the radicand is built from squared norms of nearly-cancelling sums) and
/// are clamped to zero without comment.
pub const RADICAND_SILENT_FLOOR: f64 = -1e-10;

/// Radicand values in `[RADICAND_HARD_FLOOR, RADICAND_SILENT_FLOOR)` are
/// clamped but flagged in the result: larger than noise, smaller than an
/// outright contradiction. Anything below this floor is a hard error,
/// because the evaluation proves the radicand is bounded below by 0 in exact
/// arithmetic.
pub const RADICAND_HARD_FLOOR: f64 = -1e-6;

/// Two-sided bound violations tolerated by the sandwich check. The bound
/// `norm(x) - 1 <= p(x) <= norm(x) + 1` holds exactly; only rounding at
/// radii up to 1e3 leaks through, and that stays far below this.
pub const SANDWICH: f64 = 1e-9;

/// Sup tolerance for the norm-axiom scan (triangle inequality and absolute
/// homogeneity) on declaratively built norms.
pub const NORM_AXIOMS: f64 = 1e-9;

/// Default classification threshold separating "inner-product consistent"
/// from "falsified". Honest inner-product norms land below 1e-8 on every
/// probe; honest counterexamples land above 1e-2, so 1e-6 sits in the gap
/// with two orders of margin on each side.
pub const CLASSIFY_THRESHOLD: f64 = 1e-6;

/// A profile value at or below this counts as "vanishes" for the degenerate
/// zero probe: small enough that no continuous positive function of a vector
/// with norm >= DEGENERATE_MIN_NORM plausibly produced it by noise.
pub const DEGENERATE_P: f64 = 1e-8;

/// Smallest vector norm the degenerate zero probe searches over. The probe
/// looks for profile zeros away from the origin; this keeps the search off
/// the trivial zero at x = 0.
pub const DEGENERATE_MIN_NORM: f64 = 0.1;

/// Recomputing a witness's defect from its stored vectors must reproduce the
/// recorded value this closely; both runs perform the identical arithmetic.
pub const WITNESS_RECOMPUTE: f64 = 1e-12;

/// Slack added to the exact bound `|p(t x) - t| <= 1` along rays; covers
/// rounding at t up to 2^20.
pub const RAY_DEFECT_SLACK: f64 = 1e-9;

/// The polarization form must agree with the squared norm on the diagonal
/// for every norm; a relative departure beyond this is an internal error.
/// Relative because the absolute gap scales with `norm(x)^2` at large radii.
pub const FORM_SELF_CHECK: f64 = 1e-10;

/// Defaults used by the CLI and by `SampleConfig::new`.
pub mod defaults {
    /// Samples per probe.
    pub const N_SAMPLES: u64 = 10_000;
    /// Seed for the deterministic sample streams.
    pub const SEED: u64 = 42;
    /// Random unit anchors drawn per classification (the canonical basis
    /// directions are always probed in addition).
    pub const Y_DRAWS: u64 = 8;
    /// Log-uniform radius law bounds for sampled vectors.
    pub const RADIUS_LO: f64 = 1e-2;
    pub const RADIUS_HI: f64 = 1e3;
    /// Log-uniform modulus law bounds for sampled scalars.
    pub const SCALAR_LO: f64 = 1e-3;
    pub const SCALAR_HI: f64 = 1e3;
    /// Largest exponent in the default geometric ray schedule 1, 2, ..., 2^k.
    pub const RAY_MAX_EXP: u32 = 20;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floors_are_ordered() {
        // silent floor sits strictly between 0 and the hard floor
        assert!(RADICAND_SILENT_FLOOR < 0.0);
        assert!(RADICAND_HARD_FLOOR < RADICAND_SILENT_FLOOR);
    }

    #[test]
    fn classification_threshold_sits_in_the_gap() {
        // far above the noise tolerances, far below observed counterexamples
        assert!(CLASSIFY_THRESHOLD > 100.0 * SANDWICH);
        assert!(CLASSIFY_THRESHOLD < 1e-2);
    }

    #[test]
    fn degenerate_probe_cutoffs_are_separated() {
        assert!(DEGENERATE_P < DEGENERATE_MIN_NORM * 1e-4);
    }
}
