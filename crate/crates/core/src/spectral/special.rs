use nalgebra::DMatrix;

use super::{Complex64, EigenBasis, Field};
use crate::error::{Error, Result};
use crate::generators::{complete, cycle};

/// Unitary DFT eigenbasis of the cycle `C_n`: `Φ_{jk} = e^{−2πi jk/n}/√n`
/// with eigenvalue `2 − 2cos(2πk/n)`. Columns are reordered by ascending
/// eigenvalue (stable in `k`), so `k` and `n − k` stay adjacent.
pub fn dft_basis(n: usize) -> Result<EigenBasis> {
    if n < 3 {
        return Err(Error::InvalidParameter("DFT basis needs n >= 3".into()));
    }
    let nf = n as f64;
    // min(k, n-k) makes the paired eigenvalues bit-identical.
    let eig = |k: usize| 2.0 - 2.0 * (2.0 * std::f64::consts::PI * k.min(n - k) as f64 / nf).cos();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig(a).total_cmp(&eig(b)).then(a.cmp(&b)));

    let scale = 1.0 / nf.sqrt();
    let vectors = DMatrix::from_fn(n, n, |j, col| {
        let k = order[col];
        // reduce j*k mod n before converting so the phase stays exact
        let phase = -2.0 * std::f64::consts::PI * ((j * k) % n) as f64 / nf;
        Complex64::from_polar(scale, phase)
    });
    let values = order.iter().map(|&k| eig(k)).collect();
    EigenBasis::new(values, vectors, Field::Complex, Some(cycle(n)?))
}

/// Sylvester Hadamard matrix of order `2^k`: `H_{ij} = (−1)^{popcount(i & j)}`.
pub fn sylvester_hadamard(k: u32) -> Result<DMatrix<f64>> {
    if k >= usize::BITS / 2 {
        return Err(Error::InvalidParameter(format!("Hadamard order 2^{k} is too large")));
    }
    let n = 1usize << k;
    Ok(DMatrix::from_fn(n, n, |i, j| {
        if (i & j).count_ones() % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }))
}

/// `(1/√N)·H` for the Sylvester Hadamard `H` of order `N = 2^k`, as an
/// eigenbasis of `K_N`: column 0 is constant (eigenvalue 0), the rest have
/// eigenvalue `N`.
pub fn sylvester_hadamard_basis(k: u32) -> Result<EigenBasis> {
    if k < 1 {
        return Err(Error::InvalidParameter("Sylvester Hadamard basis needs k >= 1".into()));
    }
    let h = sylvester_hadamard(k)?;
    let n = h.nrows();
    let vectors = h / (n as f64).sqrt();
    let mut values = vec![n as f64; n];
    values[0] = 0.0;
    EigenBasis::from_real(values, vectors, Some(complete(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::is_hadamard_basis;

    #[test]
    fn dft_properties() {
        for n in 3..12 {
            let b = dft_basis(n).unwrap();
            assert!(b.orthonormality_error() < 1e-12);
            for z in b.column(0) {
                assert!((z - Complex64::new(1.0 / (n as f64).sqrt(), 0.0)).norm() < 1e-15);
            }
            assert!(b.residuals().unwrap().iter().all(|&r| r < 1e-12));
            assert!(is_hadamard_basis(&b, 1e-12));
        }
        assert!(dft_basis(2).is_err());
    }

    #[test]
    fn sylvester_base_case() {
        let b = sylvester_hadamard_basis(1).unwrap();
        let s = 1.0 / 2f64.sqrt();
        let want = [[s, s], [s, -s]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((b.entry(i, j).re - want[i][j]).abs() < 1e-15);
            }
        }
        assert!(sylvester_hadamard_basis(0).is_err());
    }

    #[test]
    fn sylvester_residuals() {
        for k in 1..6 {
            let b = sylvester_hadamard_basis(k).unwrap();
            assert!(is_hadamard_basis(&b, 1e-14));
            assert!(b.residuals().unwrap().iter().all(|&r| r < 1e-10));
        }
    }
}
