//! Closed-form spectrum of the barren graph.

use serde::Serialize;

use crate::error::{Error, Result};

/// Closed-form barren spectrum for parameter `n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BarrenSpectrum {
    pub n: usize,
    /// `(N + 3 − √(N² − 2N + 9)) / 2`, the algebraic connectivity.
    pub lambda1: f64,
    /// `(N + 3 + √(N² − 2N + 9)) / 2`.
    pub lambda_n5: f64,
    /// Ascending roots of the cubic.
    pub y: [f64; 3],
    pub discriminant: f64,
    /// `(value, multiplicity)` pairs; multiplicities sum to `N + 7`.
    pub expected: Vec<(f64, usize)>,
}

impl BarrenSpectrum {
    /// The multiset as an ascending list of `N + 7` values.
    pub fn sorted_values(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .expected
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect();
        out.sort_by(f64::total_cmp);
        out
    }
}

/// Monic cubic coefficients `(c2, c1, c0)` of
/// `λ³ − (2N+8)λ² + (N²+10N+15)λ − (2N²+14N)`.
pub fn barren_cubic_coefficients(n: usize) -> (f64, f64, f64) {
    let n = n as f64;
    (-2.0 * n - 8.0, n * n + 10.0 * n + 15.0, -2.0 * n * n - 14.0 * n)
}

pub fn cubic_discriminant(c2: f64, c1: f64, c0: f64) -> f64 {
    18.0 * c0 * c1 * c2 - 4.0 * c2.powi(3) * c0 + c2 * c2 * c1 * c1 - 4.0 * c1.powi(3) - 27.0 * c0 * c0
}

/// The three real roots of the barren cubic, ascending.
///
/// Trigonometric solution of the depressed cubic, then one Newton step per root.
pub fn barren_cubic_roots(n: usize) -> Result<[f64; 3]> {
    if n < 3 {
        return Err(Error::InvalidParameter("barren cubic needs N >= 3".into()));
    }
    let (c2, c1, c0) = barren_cubic_coefficients(n);
    let disc = cubic_discriminant(c2, c1, c0);
    if disc <= 0.0 {
        return Err(Error::NonPositiveDiscriminant(disc));
    }
    // λ = t − c2/3 gives t³ + p t + q = 0 with p < 0 when all roots are real.
    let shift = c2 / 3.0;
    let p = c1 - c2 * c2 / 3.0;
    let q = 2.0 * c2.powi(3) / 27.0 - c2 * c1 / 3.0 + c0;
    let amp = 2.0 * (-p / 3.0).sqrt();
    let arg = ((3.0 * q) / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
    let theta = arg.acos() / 3.0;
    let mut roots = [0.0; 3];
    for (k, r) in roots.iter_mut().enumerate() {
        let t = amp * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos();
        let x = t - shift;
        let value = ((x + c2) * x + c1) * x + c0;
        let slope = (3.0 * x + 2.0 * c2) * x + c1;
        *r = if slope != 0.0 { x - value / slope } else { x };
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

/// The full closed-form spectrum with multiplicities.
pub fn barren_closed_spectrum(n: usize) -> Result<BarrenSpectrum> {
    let y = barren_cubic_roots(n)?;
    let (c2, c1, c0) = barren_cubic_coefficients(n);
    let nf = n as f64;
    let root = (nf * nf - 2.0 * nf + 9.0).sqrt();
    let lambda1 = 0.5 * (nf + 3.0 - root);
    let lambda_n5 = 0.5 * (nf + 3.0 + root);
    let expected = vec![
        (0.0, 1),
        (lambda1, 1),
        (y[0], 1),
        (5.0, n - 1),
        (y[1], 1),
        (nf + 1.0, 2),
        (lambda_n5, 1),
        (y[2], 1),
    ];
    Ok(BarrenSpectrum {
        n,
        lambda1,
        lambda_n5,
        y,
        discriminant: cubic_discriminant(c2, c1, c0),
        expected,
    })
}
