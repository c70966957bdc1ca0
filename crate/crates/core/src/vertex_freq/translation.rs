//! Graph translation `T_i`, the Fourier multiplier with symbol `√N φ_k*(i)`.
//!
//! In matrix form `T_i = √N Φ diag(φ_k*(i)) Φ*`, so its singular values are
//! `√N |φ_k(i)|`: `T_i` is invertible exactly when no eigenvector vanishes at
//! `i`, and its null space is spanned by the eigenvectors that do.

use nalgebra::DMatrix;
use serde::Serialize;

use super::transform::apply_multiplier;
use super::{gft, FourierMultiplier, Signal};
use crate::error::{Error, Result};
use crate::spectral::{Complex64, EigenBasis};
use crate::tolerance;

/// Symbol `â(λ_k) = √N φ_k*(i)` of `T_i`.
pub fn translation_symbol(b: &EigenBasis, i: usize) -> Result<FourierMultiplier> {
    b.check_index(i)?;
    let root_n = (b.dim() as f64).sqrt();
    Ok(FourierMultiplier::new(
        (0..b.dim()).map(|k| b.entry(i, k).conj() * root_n).collect(),
    ))
}

/// `(T_i f)(n) = √N Σ_k f̂(λ_k) φ_k*(i) φ_k(n)`.
pub fn translate(b: &EigenBasis, i: usize, f: &Signal) -> Result<Signal> {
    let symbol = translation_symbol(b, i)?;
    apply_multiplier(b, &symbol, f)
}

/// Dense matrix of `T_i`, `√N A_i Φ*` with `A_i(n, k) = φ_k*(i) φ_k(n)`.
pub fn translation_matrix(b: &EigenBasis, i: usize) -> Result<DMatrix<Complex64>> {
    b.check_index(i)?;
    let n = b.dim();
    let root_n = (n as f64).sqrt();
    let phi = b.vectors();
    let a = DMatrix::from_fn(n, n, |row, k| phi[(i, k)].conj() * phi[(row, k)] * root_n);
    Ok(a * phi.adjoint())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TranslationAnalysis {
    pub vertex: usize,
    pub rank: usize,
    /// Every `k` with `|φ_k(i)| ≤ tol`; those `φ_k` span the null space of `T_i`.
    pub vanishing_indices: Vec<usize>,
    pub invertible: bool,
    pub unitary: bool,
    pub tol: f64,
    /// `max_k 1/(√N |φ_k(i)|)` when invertible.
    pub kappa: Option<f64>,
}

/// Rank, null space and invertibility/unitarity of `T_i` at zero tolerance `tol`.
pub fn translation_analysis(b: &EigenBasis, i: usize, tol: f64) -> Result<TranslationAnalysis> {
    b.check_index(i)?;
    let n = b.dim();
    let root_n = (n as f64).sqrt();
    let mags: Vec<f64> = (0..n).map(|k| b.entry(i, k).norm()).collect();
    let vanishing_indices: Vec<usize> = (0..n).filter(|&k| mags[k] <= tol).collect();
    let invertible = vanishing_indices.is_empty();
    let unitary = invertible && mags.iter().all(|m| (m - 1.0 / root_n).abs() <= tol);
    let kappa = invertible.then(|| mags.iter().map(|m| 1.0 / (root_n * m)).fold(0.0, f64::max));
    Ok(TranslationAnalysis {
        vertex: i,
        rank: n - vanishing_indices.len(),
        vanishing_indices,
        invertible,
        unitary,
        tol,
        kappa,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TranslationInverse {
    pub matrix: DMatrix<Complex64>,
    pub kappa: f64,
}

/// Explicit inverse `(1/√N) Φ A_i⁻¹` with `A_i⁻¹(k, n) = φ_k*(n)/φ_k*(i)`.
pub fn translation_inverse(b: &EigenBasis, i: usize, tol: f64) -> Result<TranslationInverse> {
    let analysis = translation_analysis(b, i, tol)?;
    let Some(kappa) = analysis.kappa else {
        return Err(Error::NotInvertible {
            vertex: i,
            vanishing: analysis.vanishing_indices,
        });
    };
    let n = b.dim();
    let phi = b.vectors();
    let a_inv = DMatrix::from_fn(n, n, |k, col| phi[(col, k)].conj() / phi[(i, k)].conj());
    let matrix = (phi * a_inv) / Complex64::new((n as f64).sqrt(), 0.0);
    Ok(TranslationInverse { matrix, kappa })
}

/// Evaluates `T_{α_K} ∘ … ∘ T_{α_1} f` at `α_0` and the same with the tuple
/// `(α_0, …, α_K)` rearranged by `permutation` (position `t` takes entry
/// `permutation[t]`), and reports whether the two values agree.
///
/// Only meaningful for real eigenbases.
pub fn translation_composition_check(
    b: &EigenBasis,
    alpha: &[usize],
    alpha0: usize,
    f: &Signal,
    permutation: &[usize],
) -> Result<bool> {
    if !b.is_real() {
        return Err(Error::ComplexBasis);
    }
    b.check_len(f.len())?;
    let tuple: Vec<usize> = std::iter::once(alpha0).chain(alpha.iter().copied()).collect();
    for &v in &tuple {
        b.check_index(v)?;
    }
    let mut seen = vec![false; tuple.len()];
    if permutation.len() != tuple.len() {
        return Err(Error::DimensionMismatch {
            expected: tuple.len(),
            found: permutation.len(),
        });
    }
    for &p in permutation {
        if p >= tuple.len() || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidParameter(format!("{permutation:?} is not a permutation")));
        }
    }
    let permuted: Vec<usize> = permutation.iter().map(|&p| tuple[p]).collect();

    let evaluate = |t: &[usize]| -> Result<Complex64> {
        let mut g = f.clone();
        for &v in &t[1..] {
            g = translate(b, v, &g)?;
        }
        Ok(g.values()[t[0]])
    };
    let lhs = evaluate(&tuple)?;
    let rhs = evaluate(&permuted)?;
    Ok((lhs - rhs).norm() <= tolerance::COMPOSITION)
}

/// The translation norm estimates around `‖T_i f‖₂`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormReport {
    /// `|f̂(λ_0)|`
    pub lower: f64,
    /// `‖T_i f‖₂`
    pub value: f64,
    /// `√N max_k |φ_k(i)| ‖f‖₂`
    pub upper1: f64,
    /// `√N max_k ‖φ_k‖_∞ ‖f‖₂`
    pub upper2: f64,
    /// `lower ≤ value ≤ upper1 ≤ upper2` up to the chain slack.
    pub chain_holds: bool,
}

pub fn translation_norm_report(b: &EigenBasis, i: usize, f: &Signal) -> Result<NormReport> {
    b.check_index(i)?;
    let n = b.dim();
    let root_n = (n as f64).sqrt();
    let lower = gft(b, f)?.values()[0].norm();
    let value = translate(b, i, f)?.norm();
    let fnorm = f.norm();
    let at_i = (0..n).map(|k| b.entry(i, k).norm()).fold(0.0, f64::max);
    let sup = b.vectors().iter().map(|z| z.norm()).fold(0.0, f64::max);
    let upper1 = root_n * at_i * fnorm;
    let upper2 = root_n * sup * fnorm;
    let slack = tolerance::NORM_CHAIN * upper2.max(1.0);
    let chain_holds = lower <= value + slack && value <= upper1 + slack && upper1 <= upper2 + slack;
    Ok(NormReport {
        lower,
        value,
        upper1,
        upper2,
        chain_holds,
    })
}
