//! End-to-end check of the barren graph against its closed-form spectrum
//! and the six-vertex support of its Fiedler vector.

use serde::Serialize;

use super::{default_partition, fiedler};
use crate::error::{Error, Result};
use crate::generators::barren;
use crate::spectral::{barren_closed_spectrum, eigendecompose, BarrenSpectrum};
use crate::tolerance;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BarrenReport {
    pub n: usize,
    pub tol: f64,
    pub closed_form: BarrenSpectrum,
    pub eigenvalues: Vec<f64>,
    /// Largest gap between sorted computed and closed-form eigenvalues.
    pub spectrum_error: f64,
    pub spectrum_matches: bool,
    pub lambda1: f64,
    pub fiedler: Vec<f64>,
    pub fiedler_multiplicity: usize,
    /// Vertices with `|φ_1| > 1e-6`.
    pub support: Vec<usize>,
    pub support_matches: bool,
    pub zero_set: Vec<usize>,
    pub zero_set_matches: bool,
    /// Recovered values: `a` on `V3`, `b` on `V5`.
    pub a: f64,
    pub b: f64,
    /// `|4a² + 2b² − 1|`.
    pub norm_error: f64,
    /// Largest deviation from the pattern `(a, −a, b, −b)` on `V3..V6`.
    pub shape_error: f64,
    pub shape_matches: bool,
    pub passed: bool,
    /// One line per failed check.
    pub failures: Vec<String>,
}

/// Eigensolves `barren(n)` and checks it against the closed form: the
/// spectrum as a multiset within `tol`, support `V3 ∪ V4 ∪ V5 ∪ V6`, zero
/// set `V1 ∪ V2`, and the `(±a, ±b)` shape with `4a² + 2b² = 1`.
///
/// Check failures are reported, not returned as errors.
pub fn verify_barren(n: usize, tol: f64) -> Result<BarrenReport> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("barren graph needs N >= 3, got {n}")));
    }
    let (g, layout) = barren(n)?;
    let closed_form = barren_closed_spectrum(n)?;
    let basis = eigendecompose(&g);
    let eigenvalues = basis.eigenvalues().to_vec();
    let expected = closed_form.sorted_values();
    let spectrum_error = eigenvalues
        .iter()
        .zip(&expected)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let spectrum_matches = eigenvalues.len() == expected.len() && spectrum_error <= tol;

    let fv = fiedler(&basis, tolerance::NEGATIVE_EIGENVALUE)?;
    let f = fv.vector;
    let support: Vec<usize> = (0..f.len())
        .filter(|&i| f[i].abs() > tolerance::BARREN_SUPPORT)
        .collect();
    let want_support: Vec<usize> = (3..=6).flat_map(|c| layout.class(c).as_slice().to_vec()).collect();
    let support_matches = support == want_support;

    let p = default_partition(&f);
    let want_zero = layout.class(1).union(layout.class(2));
    let zero_set = p.zero.as_slice().to_vec();
    let zero_set_matches = p.zero == want_zero;

    let v = |c: usize| layout.class(c).as_slice();
    let a = v(3).iter().map(|&i| f[i]).sum::<f64>() / v(3).len() as f64;
    let b = f[v(5)[0]];
    let shape_error = v(3)
        .iter()
        .map(|&i| (f[i] - a).abs())
        .chain(v(4).iter().map(|&i| (f[i] + a).abs()))
        .chain([(f[v(6)[0]] + b).abs()])
        .fold(0.0, f64::max);
    let norm_error = (4.0 * a * a + 2.0 * b * b - 1.0).abs();
    // `b = 2a / (2 − λ_1)`, so `a` and `b` share a sign.
    let shape_matches = shape_error <= tolerance::BARREN_SHAPE && norm_error <= tolerance::BARREN_SHAPE && a * b > 0.0;

    let mut failures = Vec::new();
    if !spectrum_matches {
        failures.push(format!("spectrum differs from closed form by {spectrum_error:e}"));
    }
    if !support_matches {
        failures.push(format!("Fiedler support is {support:?}, expected {want_support:?}"));
    }
    if !zero_set_matches {
        failures.push(format!("zero set is {zero_set:?}, expected {:?}", want_zero.as_slice()));
    }
    if !shape_matches {
        failures.push(format!(
            "Fiedler shape off: a = {a}, b = {b}, shape error {shape_error:e}, norm error {norm_error:e}"
        ));
    }

    Ok(BarrenReport {
        n,
        tol,
        lambda1: fv.eigenvalue,
        closed_form,
        eigenvalues,
        spectrum_error,
        spectrum_matches,
        fiedler: f,
        fiedler_multiplicity: fv.multiplicity,
        support,
        support_matches,
        zero_set,
        zero_set_matches,
        a,
        b,
        norm_error,
        shape_error,
        shape_matches,
        passed: failures.is_empty(),
        failures,
    })
}
