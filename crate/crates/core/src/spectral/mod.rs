//! Laplacian eigenbases.
//!
//! Every analysis in this crate is relative to one fixed orthonormal
//! eigenbasis `Φ` (column `k` is `φ_k`). [`eigendecompose`] fixes that basis
//! deterministically:
//!
//! * eigenvalues ascending;
//! * eigenvalues closer than [`DEGENERACY_GAP`](crate::tolerance::DEGENERACY_GAP)
//!   (relative) form a cluster; the cluster's basis is rebuilt by pivoted
//!   Gram–Schmidt on the columns of the cluster's spectral projector, which
//!   depends only on the eigenspace and not on the solver's internal rotation;
//!   the members share the cluster's mean eigenvalue;
//! * in each vector the first entry of magnitude above
//!   [`SIGN_PIVOT`](crate::tolerance::SIGN_PIVOT) is positive.

mod barren;
pub mod eigen;
mod special;

pub use barren::{
    barren_closed_spectrum, barren_cubic_coefficients, barren_cubic_roots, cubic_discriminant, BarrenSpectrum,
};
pub use special::{dft_basis, sylvester_hadamard, sylvester_hadamard_basis};

use nalgebra::{Complex, DMatrix};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tolerance::{self, DEGENERACY_GAP, SIGN_PIVOT};

pub type Complex64 = Complex<f64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

/// A fixed orthonormal eigenbasis with ascending eigenvalues.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenBasis {
    eigenvalues: Vec<f64>,
    vectors: DMatrix<Complex64>,
    field: Field,
    source: Option<Graph>,
}

impl EigenBasis {
    /// Validates and wraps a basis: square, orthonormal columns, sorted
    /// non-negative eigenvalues and, when `source` is given, small
    /// eigenpair residuals against its Laplacian.
    pub fn new(
        eigenvalues: Vec<f64>,
        vectors: DMatrix<Complex64>,
        field: Field,
        source: Option<Graph>,
    ) -> Result<Self> {
        let n = eigenvalues.len();
        if vectors.nrows() != n || vectors.ncols() != n {
            return Err(Error::InvalidBasis(format!(
                "{} eigenvalues but a {}x{} vector matrix",
                n,
                vectors.nrows(),
                vectors.ncols()
            )));
        }
        if let Some(g) = &source {
            g.check_len(n)?;
        }
        if eigenvalues.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidBasis("eigenvalues are not sorted".into()));
        }
        if let Some(&lo) = eigenvalues.first() {
            if lo < -tolerance::NEGATIVE_EIGENVALUE {
                return Err(Error::InvalidBasis(format!("negative eigenvalue {lo:e}")));
            }
        }
        if field == Field::Real && vectors.iter().any(|z| z.im != 0.0) {
            return Err(Error::InvalidBasis("real basis with complex entries".into()));
        }
        let basis = EigenBasis {
            eigenvalues,
            vectors,
            field,
            source,
        };
        let orth = basis.orthonormality_error();
        if orth > tolerance::ORTHONORMALITY {
            return Err(Error::InvalidBasis(format!("columns not orthonormal (error {orth:e})")));
        }
        if let Some(k) = basis.residual_violation() {
            return Err(Error::InvalidBasis(format!("eigenpair {k} fails the residual check")));
        }
        Ok(basis)
    }

    pub fn from_real(eigenvalues: Vec<f64>, vectors: DMatrix<f64>, source: Option<Graph>) -> Result<Self> {
        let vectors = vectors.map(|x| Complex64::new(x, 0.0));
        Self::new(eigenvalues, vectors, Field::Real, source)
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvalue(&self, k: usize) -> f64 {
        self.eigenvalues[k]
    }

    /// `Φ`, column `k` is `φ_k`.
    pub fn vectors(&self) -> &DMatrix<Complex64> {
        &self.vectors
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_real(&self) -> bool {
        self.field == Field::Real
    }

    pub fn source_graph(&self) -> Option<&Graph> {
        self.source.as_ref()
    }

    /// `φ_k(n)`.
    pub fn entry(&self, n: usize, k: usize) -> Complex64 {
        self.vectors[(n, k)]
    }

    pub fn column(&self, k: usize) -> Vec<Complex64> {
        self.vectors.column(k).iter().copied().collect()
    }

    /// `φ_k` as reals, for real bases.
    pub fn real_column(&self, k: usize) -> Option<Vec<f64>> {
        self.is_real()
            .then(|| self.vectors.column(k).iter().map(|z| z.re).collect())
    }

    pub fn real_vectors(&self) -> Option<DMatrix<f64>> {
        self.is_real().then(|| self.vectors.map(|z| z.re))
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.dim() {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.dim(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: len,
            });
        }
        Ok(())
    }

    /// `max |Φ*Φ − I|`.
    pub fn orthonormality_error(&self) -> f64 {
        let n = self.dim();
        let gram = self.vectors.adjoint() * &self.vectors;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((gram[(i, j)] - Complex64::new(target, 0.0)).norm());
            }
        }
        worst
    }

    /// `‖L φ_k − λ_k φ_k‖₂` for each `k`, when a source graph is attached.
    pub fn residuals(&self) -> Option<Vec<f64>> {
        let g = self.source.as_ref()?;
        let l = g.laplacian().map(|x| Complex64::new(x, 0.0));
        let lphi = l * &self.vectors;
        Some(
            (0..self.dim())
                .map(|k| {
                    lphi.column(k)
                        .iter()
                        .zip(self.vectors.column(k).iter())
                        .map(|(a, b)| (a - b * self.eigenvalues[k]).norm_sqr())
                        .sum::<f64>()
                        .sqrt()
                })
                .collect(),
        )
    }

    fn residual_violation(&self) -> Option<usize> {
        let res = self.residuals()?;
        res.iter()
            .enumerate()
            .find(|(k, r)| **r > tolerance::residual_bound(self.eigenvalues[*k]))
            .map(|(k, _)| k)
    }
}

/// Number of eigenvalues within `tol` of `value`.
pub fn multiplicity(b: &EigenBasis, value: f64, tol: f64) -> usize {
    b.eigenvalues().iter().filter(|&&l| (l - value).abs() <= tol).count()
}

/// Whether every `|Φ_{jk}|` lies within `tol` of `1/√N`.
pub fn is_hadamard_basis(b: &EigenBasis, tol: f64) -> bool {
    let target = 1.0 / (b.dim() as f64).sqrt();
    b.vectors().iter().all(|z| (z.norm() - target).abs() <= tol)
}

/// Index ranges `[start, end)` of degenerate eigenvalue clusters in a
/// sorted list.
pub fn clusters(sorted: &[f64]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for k in 1..=sorted.len() {
        let split = k == sorted.len() || sorted[k] - sorted[k - 1] >= DEGENERACY_GAP * sorted[k - 1].abs().max(1.0);
        if split {
            out.push((start, k));
            start = k;
        }
    }
    out
}

/// Deterministic Laplacian eigenbasis of `g`; see the module docs for the
/// conventions that pin `Φ` down.
pub fn eigendecompose(g: &Graph) -> EigenBasis {
    let n = g.vertex_count();
    let (raw_vals, raw_vecs) = eigen::symmetric_eigen(&g.laplacian());

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| raw_vals[a].total_cmp(&raw_vals[b]).then(a.cmp(&b)));
    let mut values: Vec<f64> = order.iter().map(|&k| raw_vals[k]).collect();
    let mut vectors = DMatrix::from_fn(n, n, |i, j| raw_vecs[(i, order[j])]);

    for (start, end) in clusters(&values) {
        if end - start > 1 {
            canonicalize_cluster(&mut vectors, start, end);
            let mean = values[start..end].iter().sum::<f64>() / (end - start) as f64;
            values[start..end].iter_mut().for_each(|v| *v = mean);
        }
    }
    for k in 0..n {
        fix_sign(&mut vectors, k);
    }

    EigenBasis {
        eigenvalues: values,
        vectors: vectors.map(|x| Complex64::new(x, 0.0)),
        field: Field::Real,
        source: Some(g.clone()),
    }
}

/// Replaces columns `start..end` by a basis built only from their span:
/// pivoted Gram–Schmidt over the columns of the projector `QQᵀ`, always
/// taking the largest remaining residual (lowest vertex index on ties).
fn canonicalize_cluster(vectors: &mut DMatrix<f64>, start: usize, end: usize) {
    let n = vectors.nrows();
    let q = vectors.columns(start, end - start).into_owned();
    let projector = &q * q.transpose();
    let mut residual: Vec<Vec<f64>> = (0..n).map(|j| projector.column(j).iter().copied().collect()).collect();
    let mut used = vec![false; n];

    for slot in start..end {
        let norms: Vec<f64> = residual.iter().map(|r| dot(r, r).sqrt()).collect();
        let best = (0..n).filter(|&j| !used[j]).map(|j| norms[j]).fold(0.0f64, f64::max);
        let pivot = (0..n)
            .find(|&j| !used[j] && norms[j] >= best * (1.0 - 1e-9))
            .expect("projector rank equals cluster size");
        used[pivot] = true;
        let u: Vec<f64> = residual[pivot].iter().map(|x| x / norms[pivot]).collect();
        for r in residual.iter_mut() {
            // Two passes keep the residuals orthogonal to u in floating point.
            for _ in 0..2 {
                let c = dot(&u, r);
                r.iter_mut().zip(&u).for_each(|(x, ui)| *x -= c * ui);
            }
        }
        for (i, ui) in u.iter().enumerate() {
            vectors[(i, slot)] = *ui;
        }
    }
}

fn fix_sign(vectors: &mut DMatrix<f64>, k: usize) {
    let flip = vectors
        .column(k)
        .iter()
        .find(|x| x.abs() > SIGN_PIVOT)
        .is_some_and(|&x| x < 0.0);
    if flip {
        vectors.column_mut(k).iter_mut().for_each(|x| *x = -*x);
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
