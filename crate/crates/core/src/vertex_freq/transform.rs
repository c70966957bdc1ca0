use super::{FourierMultiplier, Signal, SpectralSignal};
use crate::error::{Error, Result};
use crate::spectral::{Complex64, EigenBasis};

/// `f̂(λ_k) = ⟨f, φ_k⟩ = Σ_n f(n) φ_k*(n)`.
pub fn gft(b: &EigenBasis, f: &Signal) -> Result<SpectralSignal> {
    b.check_len(f.len())?;
    let phi = b.vectors();
    let n = b.dim();
    let coeffs = (0..n)
        .map(|k| (0..n).map(|v| f.values()[v] * phi[(v, k)].conj()).sum())
        .collect();
    Ok(SpectralSignal::new(coeffs))
}

/// `f(n) = Σ_k f̂(λ_k) φ_k(n)`.
pub fn igft(b: &EigenBasis, s: &SpectralSignal) -> Result<Signal> {
    b.check_len(s.len())?;
    Ok(synthesize(b, s.values()))
}

fn synthesize(b: &EigenBasis, coeffs: &[Complex64]) -> Signal {
    let phi = b.vectors();
    let n = b.dim();
    Signal::new((0..n).map(|v| (0..n).map(|k| coeffs[k] * phi[(v, k)]).sum()).collect())
}

/// `(f ∗ g)(n) = Σ_k f̂(λ_k) ĝ(λ_k) φ_k(n)`.
pub fn convolve(b: &EigenBasis, f: &Signal, g: &Signal) -> Result<Signal> {
    let fh = gft(b, f)?;
    let gh = gft(b, g)?;
    let prod: Vec<Complex64> = fh.values().iter().zip(gh.values()).map(|(a, c)| a * c).collect();
    Ok(synthesize(b, &prod))
}

/// `(M_k f)(n) = √N f(n) φ_k(n)`.
pub fn modulate(b: &EigenBasis, k: usize, f: &Signal) -> Result<Signal> {
    b.check_index(k)?;
    b.check_len(f.len())?;
    let root_n = (b.dim() as f64).sqrt();
    Ok(Signal::new(
        f.values()
            .iter()
            .enumerate()
            .map(|(v, x)| x * b.entry(v, k) * root_n)
            .collect(),
    ))
}

/// Inverse transform of `â(λ_k) f̂(λ_k)`.
pub fn apply_multiplier(b: &EigenBasis, m: &FourierMultiplier, f: &Signal) -> Result<Signal> {
    b.check_len(m.len())?;
    let fh = gft(b, f)?;
    let prod: Vec<Complex64> = fh.values().iter().zip(m.values()).map(|(a, s)| a * s).collect();
    Ok(synthesize(b, &prod))
}

/// Symbol `1/â(λ_k)`; fails listing every `k` with `|â(λ_k)| ≤ tol`.
pub fn invert_multiplier(m: &FourierMultiplier, tol: f64) -> Result<FourierMultiplier> {
    let bad: Vec<usize> = m
        .values()
        .iter()
        .enumerate()
        .filter(|(_, z)| z.norm() <= tol)
        .map(|(k, _)| k)
        .collect();
    if !bad.is_empty() {
        return Err(Error::NonInvertibleSymbol(bad));
    }
    Ok(FourierMultiplier::new(m.values().iter().map(|z| z.inv()).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};
    use crate::spectral::eigendecompose;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn eigenvector_maps_to_unit_vector() {
        let b = eigendecompose(&path(5).unwrap());
        for j in 0..5 {
            let f = Signal::new(b.column(j));
            let s = gft(&b, &f).unwrap();
            for (k, z) in s.values().iter().enumerate() {
                let want = if k == j { 1.0 } else { 0.0 };
                assert!((z - c(want)).norm() < 1e-12);
            }
            let back = igft(&b, &SpectralSignal::new(s.values().to_vec())).unwrap();
            assert!(back.max_abs_diff(&f) < 1e-12);
        }
    }

    #[test]
    fn constant_signal_spectrum() {
        let b = eigendecompose(&cycle(6).unwrap());
        let s = gft(&b, &Signal::from_real(&[1.0; 6])).unwrap();
        assert!((s.values()[0] - c(6f64.sqrt())).norm() < 1e-12);
        assert!(s.values()[1..].iter().all(|z| z.norm() < 1e-12));
    }

    #[test]
    fn zero_spectrum_is_zero_signal() {
        let b = eigendecompose(&path(4).unwrap());
        let f = igft(&b, &SpectralSignal::zeros(4)).unwrap();
        assert_eq!(f.norm(), 0.0);
    }

    #[test]
    fn dimension_errors() {
        let b = eigendecompose(&path(4).unwrap());
        assert!(matches!(
            gft(&b, &Signal::zeros(3)),
            Err(Error::DimensionMismatch { expected: 4, found: 3 })
        ));
        assert!(igft(&b, &SpectralSignal::zeros(5)).is_err());
        assert!(modulate(&b, 4, &Signal::zeros(4)).is_err());
    }

    #[test]
    fn modulation_of_constant_unit_function() {
        let b = eigendecompose(&cycle(7).unwrap());
        let one = Signal::from_real(&[1.0; 7]);
        assert!(modulate(&b, 0, &one).unwrap().max_abs_diff(&one) < 1e-12);
        // ĝ = δ_0, i.e. g = φ_0, gives M_k g = φ_k
        let phi0 = Signal::new(b.column(0));
        for k in 0..7 {
            let m = modulate(&b, k, &phi0).unwrap();
            assert!(m.max_abs_diff(&Signal::new(b.column(k))) < 1e-12);
        }
    }

    #[test]
    fn multiplier_inversion() {
        let m = FourierMultiplier::from_real(&[2.0; 4]);
        let inv = invert_multiplier(&m, 1e-12).unwrap();
        assert!(inv.values().iter().all(|z| (z - c(0.5)).norm() < 1e-15));
        let z = FourierMultiplier::from_real(&[1.0, 0.0, 3.0, 0.0]);
        assert_eq!(
            invert_multiplier(&z, 1e-12),
            Err(Error::NonInvertibleSymbol(vec![1, 3]))
        );
    }
}
