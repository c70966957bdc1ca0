//! Search for a semigroup law `T_i T_j = T_{i•j}` on the translations.
//!
//! `T_i T_j = T_ℓ` holds exactly when `√N φ_k(i) φ_k(j) = φ_k(ℓ)` for every
//! `k`, so each pair `(i, j)` is resolved by comparing the scaled product of
//! rows `i` and `j` of `Φ` against every row `ℓ`. The search is exhaustive,
//! `O(N³)` comparisons of length-`N` rows.

use rayon::prelude::*;
use serde::Serialize;

use crate::spectral::{Complex64, EigenBasis};

/// A pair whose scaled row product matches no row of `Φ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FailureWitness {
    pub i: usize,
    pub j: usize,
    /// `√N φ_k(i) φ_k(j)` for `k = 0..N`.
    #[serde(serialize_with = "crate::io::serialize_complex_slice")]
    pub product: Vec<Complex64>,
    /// Row closest to the product in max-norm, and that distance.
    pub closest: usize,
    pub closest_distance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SemigroupOutcome {
    /// `table[i][j] = i • j`.
    Table(Vec<Vec<usize>>),
    Failure(FailureWitness),
}

impl SemigroupOutcome {
    pub fn table(&self) -> Option<&Vec<Vec<usize>>> {
        match self {
            SemigroupOutcome::Table(t) => Some(t),
            SemigroupOutcome::Failure(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&FailureWitness> {
        match self {
            SemigroupOutcome::Failure(w) => Some(w),
            SemigroupOutcome::Table(_) => None,
        }
    }
}

enum Cell {
    Match(usize),
    Miss(FailureWitness),
}

fn resolve(b: &EigenBasis, i: usize, j: usize, tol: f64) -> Cell {
    let n = b.dim();
    let root_n = (n as f64).sqrt();
    let product: Vec<Complex64> = (0..n).map(|k| b.entry(i, k) * b.entry(j, k) * root_n).collect();
    let mut closest = 0;
    let mut closest_distance = f64::INFINITY;
    for l in 0..n {
        let d = (0..n).map(|k| (product[k] - b.entry(l, k)).norm()).fold(0.0, f64::max);
        if d <= tol {
            return Cell::Match(l);
        }
        if d < closest_distance {
            closest = l;
            closest_distance = d;
        }
    }
    Cell::Miss(FailureWitness {
        i,
        j,
        product,
        closest,
        closest_distance,
    })
}

/// Full table `i • j`, or the first failing pair in row-major order.
///
/// Rows of the table are resolved in parallel; the outcome does not depend
/// on scheduling.
pub fn semigroup_table(b: &EigenBasis, tol: f64) -> SemigroupOutcome {
    let n = b.dim();
    let rows: Vec<std::result::Result<Vec<usize>, FailureWitness>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| match resolve(b, i, j, tol) {
                    Cell::Match(l) => Ok(l),
                    Cell::Miss(w) => Err(w),
                })
                .collect()
        })
        .collect();
    let mut table = Vec::with_capacity(n);
    for row in rows {
        match row {
            Ok(r) => table.push(r),
            Err(w) => return SemigroupOutcome::Failure(w),
        }
    }
    SemigroupOutcome::Table(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::path;
    use crate::spectral::{dft_basis, eigendecompose, sylvester_hadamard_basis};

    #[test]
    fn cycle_table_is_addition_mod_n() {
        for n in 3..9 {
            let out = semigroup_table(&dft_basis(n).unwrap(), 1e-8);
            let t = out.table().expect("DFT basis is a group");
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(t[i][j], (i + j) % n);
                }
            }
        }
    }

    #[test]
    fn sylvester_table_is_xor() {
        let out = semigroup_table(&sylvester_hadamard_basis(3).unwrap(), 1e-8);
        let t = out.table().unwrap();
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(t[i][j], i ^ j);
            }
        }
    }

    #[test]
    fn path_has_no_semigroup() {
        let out = semigroup_table(&eigendecompose(&path(4).unwrap()), 1e-8);
        let w = out.witness().expect("non-Hadamard basis");
        assert!(w.closest_distance > 1e-8);
    }
}
