//! Numerical tolerances used across the crate.
//!
//! Every analysis entry point also accepts an explicit tolerance; these are
//! the defaults and the fixed thresholds of the eigenbasis conventions.

/// Relative gap below which neighbouring eigenvalues are treated as one
/// degenerate cluster: `λ[k+1] - λ[k] < DEGENERACY_GAP * max(1, |λ[k]|)`.
pub const DEGENERACY_GAP: f64 = 1e-8;

/// The first eigenvector entry with magnitude above this is made positive.
pub const SIGN_PIVOT: f64 = 1e-8;

/// Columns of `Φ` must be orthonormal to this accuracy.
pub const ORTHONORMALITY: f64 = 1e-10;

/// Eigenpair residual bound, scaled by `max(1, λ)`.
pub const RESIDUAL: f64 = 1e-9;

/// Eigenvalues may dip this far below zero.
pub const NEGATIVE_EIGENVALUE: f64 = 1e-10;

/// Base of the zero test `|φ_k(i)| ≤ tol` for translation analysis; the
/// default tolerance is this times `√N`.
pub const TRANSLATION_ZERO: f64 = 1e-8;

/// Base of the zero test for sign partitions; the default tolerance is
/// this times `‖f‖_∞`.
pub const PARTITION_ZERO: f64 = 1e-8;

/// Tolerance for matching product rows in the semigroup search.
pub const SEMIGROUP_MATCH: f64 = 1e-8;

/// Slack allowed in the translation norm inequality chain.
pub const NORM_CHAIN: f64 = 1e-10;

/// Agreement required by the permutation identity for composed translations.
pub const COMPOSITION: f64 = 1e-9;

/// Default translation zero tolerance for a graph on `n` vertices.
pub fn translation_tol(n: usize) -> f64 {
    TRANSLATION_ZERO * (n as f64).sqrt()
}

/// Default partition zero tolerance for signal `f`.
pub fn partition_tol(f: &[f64]) -> f64 {
    let sup = f.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    PARTITION_ZERO * sup
}

/// Eigenpair residual bound for eigenvalue `lambda`.
pub fn residual_bound(lambda: f64) -> f64 {
    RESIDUAL * lambda.abs().max(1.0)
}

/// Base of the flatness test in constant-ball scans, scaled by `‖f‖_∞`.
pub const CONSTANT_BALL: f64 = 1e-12;

/// Magnitude above which a barren Fiedler entry counts as support.
pub const BARREN_SUPPORT: f64 = 1e-6;

/// Accuracy required of the barren Fiedler shape `4a² + 2b² = 1`.
pub const BARREN_SHAPE: f64 = 1e-9;

/// Default spectrum-matching tolerance for barren verification.
pub const BARREN_SPECTRUM: f64 = 1e-8;
