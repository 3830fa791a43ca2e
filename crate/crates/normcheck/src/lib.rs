//! Numerical diagnostics that decide whether a norm behaves like an
//! inner-product norm.
//!
//! The engine evaluates, for a unit anchor y, the profile
//! `p(x) = sqrt((norm(x+y)^2 + norm(x-y)^2)/2 - 1)`. Three measurable facts
//! about p are equivalent to the norm being induced by an inner product:
//! p is absolutely homogeneous, p equals the norm identically, and the norm
//! satisfies the parallelogram law. The crate measures the defect of each
//! fact over deterministic sample streams and turns the sups into a verdict
//! with recomputable counterexample witnesses.
//!
//! Module map:
//! - [`norm`]: declarative norm specs (Lp, weighted Lp, quadratic,
//!   combinations) and their evaluation kernels.
//! - [`pfunc`]: the profile itself, its well-definedness guard, the global
//!   sandwich bound `norm(x) - 1 <= p(x) <= norm(x) + 1`, and ray profiles.
//! - [`diagnostics`]: defect scans, the degenerate-zero search, and
//!   [`diagnostics::classify`].
//! - [`polarization`]: the induced bilinear form, its axiom scans, and Gram
//!   reconstruction with residuals.
//! - [`sample`]: counter-mode sample streams; every scan is reproducible
//!   from `(seed, domain, index)` and independent of worker count.
//! - [`report`]: witnesses, defect reports, verdicts.
//! - [`cli`]: the command-line front end over all of the above.
//!
//! Every probe runs the same way: map sample indices to defects in parallel,
//! reduce with an associative tie-broken max, regenerate the winning sample
//! as the witness. Outputs are therefore byte-identical across runs and
//! thread counts.

pub mod cli;
pub mod diagnostics;
mod error;
pub mod norm;
mod numeric;
pub mod pfunc;
pub mod polarization;
pub mod report;
pub mod sample;
pub mod scalar;
mod scan;
pub mod tol;
pub mod vector;

pub use error::{Error, Result};
pub use norm::{norm_eval, NormSpec};
pub use pfunc::{p_eval, PContext, PValue};
pub use report::{DefectReport, Outcome, Verdict, Witness};
pub use sample::SampleConfig;
