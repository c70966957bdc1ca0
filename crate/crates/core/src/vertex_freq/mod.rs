//! Vertex-frequency operators relative to a fixed eigenbasis: Fourier
//! transform, convolution, modulation, translation, Fourier multipliers and
//! the translation semigroup test.

mod semigroup;
mod transform;
mod translation;

pub use semigroup::{semigroup_table, FailureWitness, SemigroupOutcome};
pub use transform::{apply_multiplier, convolve, gft, igft, invert_multiplier, modulate};
pub use translation::{
    translate, translation_analysis, translation_composition_check, translation_inverse, translation_matrix,
    translation_norm_report, translation_symbol, NormReport, TranslationAnalysis, TranslationInverse,
};

use std::ops::{Add, Sub};

use crate::spectral::Complex64;

macro_rules! complex_vector {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, Debug, PartialEq)]
        pub struct $name(Vec<Complex64>);

        impl $name {
            pub fn new(values: Vec<Complex64>) -> Self {
                $name(values)
            }

            pub fn from_real(values: &[f64]) -> Self {
                $name(values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            }

            pub fn zeros(n: usize) -> Self {
                $name(vec![Complex64::new(0.0, 0.0); n])
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn values(&self) -> &[Complex64] {
                &self.0
            }

            pub fn into_values(self) -> Vec<Complex64> {
                self.0
            }

            /// Euclidean norm.
            pub fn norm(&self) -> f64 {
                self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
            }

            /// Real parts when every imaginary part is within `tol` of zero.
            pub fn to_real(&self, tol: f64) -> Option<Vec<f64>> {
                self.0.iter().all(|z| z.im.abs() <= tol).then(|| self.0.iter().map(|z| z.re).collect())
            }

            /// `max_n |self(n) − other(n)|`; infinite when lengths differ.
            pub fn max_abs_diff(&self, other: &Self) -> f64 {
                if self.len() != other.len() {
                    return f64::INFINITY;
                }
                self.0.iter().zip(&other.0).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
            }

            pub fn scale(&self, c: Complex64) -> Self {
                $name(self.0.iter().map(|z| z * c).collect())
            }
        }

        impl Add for &$name {
            type Output = $name;

            fn add(self, rhs: &$name) -> $name {
                assert_eq!(self.len(), rhs.len(), "length mismatch");
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;

            fn sub(self, rhs: &$name) -> $name {
                assert_eq!(self.len(), rhs.len(), "length mismatch");
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }
    };
}

complex_vector!(
    /// Vertex-domain signal `f : V → ℂ`.
    Signal
);
complex_vector!(
    /// Spectral coefficients `f̂(λ_k)`, indexed by eigenvalue index `k`.
    SpectralSignal
);
complex_vector!(
    /// Fourier multiplier symbol `â(λ_k)`.
    FourierMultiplier
);
