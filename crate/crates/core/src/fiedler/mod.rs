//! Fiedler vectors, sign partitions `V_+ ∪ V_− ∪ V_0` and the geometry of
//! the characteristic set `V_0`.
//!
//! Every analysis here works on the deterministic basis of
//! [`eigendecompose`](crate::spectral::eigendecompose). When `λ_1` is
//! degenerate the Fiedler vector is one choice among many and `V_0` depends
//! on it; reports carry a `basis_dependent` flag in that case. Negating the
//! vector swaps `V_+` and `V_−`.

mod barren;
mod harness;
mod lift;

pub use barren::{verify_barren, BarrenReport};
pub use harness::{default_params, planar_family_harness, Family, HarnessInstance, HarnessReport};
pub use lift::{extend_subgraph_eigenvector, lift_common_eigenvector, EigenComponent, Endpoint, LiftResult};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Distance, Graph, VertexSet};
use crate::spectral::EigenBasis;
use crate::tolerance;

/// `φ_1` with its eigenvalue and the multiplicity of `λ_1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Fiedler {
    pub vector: Vec<f64>,
    pub eigenvalue: f64,
    pub multiplicity: usize,
    /// `multiplicity > 1`: `V_0` depends on the chosen basis of the eigenspace.
    pub basis_dependent: bool,
}

/// Extracts `φ_1`; fails when `λ_1 ≤ tol` (disconnected source graph).
pub fn fiedler(b: &EigenBasis, tol: f64) -> Result<Fiedler> {
    let vector = b
        .real_column(1.min(b.dim().saturating_sub(1)))
        .ok_or(Error::ComplexBasis)?;
    if b.dim() < 2 {
        return Err(Error::InvalidParameter(
            "Fiedler vector needs at least 2 vertices".into(),
        ));
    }
    let lambda = b.eigenvalue(1);
    if lambda <= tol {
        return Err(Error::Disconnected(lambda));
    }
    let gap = tolerance::DEGENERACY_GAP * lambda.abs().max(1.0);
    let multiplicity = b.eigenvalues()[1..]
        .iter()
        .filter(|&&l| (l - lambda).abs() < gap)
        .count();
    Ok(Fiedler {
        vector,
        eigenvalue: lambda,
        multiplicity,
        basis_dependent: multiplicity > 1,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VertexPartition {
    pub positive: VertexSet,
    pub negative: VertexSet,
    pub zero: VertexSet,
    pub tol: f64,
    pub source_signal: Vec<f64>,
}

/// Sign partition of `f` at zero tolerance `tol`: `|f(i)| ≤ tol` is zero.
pub fn partition(f: &[f64], tol: f64) -> VertexPartition {
    let n = f.len();
    let pick = |keep: &dyn Fn(f64) -> bool| VertexSet::new(n, (0..n).filter(|&i| keep(f[i]))).expect("indices below n");
    VertexPartition {
        positive: pick(&|x| x > tol),
        negative: pick(&|x| x < -tol),
        zero: pick(&|x| x.abs() <= tol),
        tol,
        source_signal: f.to_vec(),
    }
}

/// [`partition`] at the default tolerance `1e-8 · ‖f‖_∞`.
pub fn default_partition(f: &[f64]) -> VertexPartition {
    partition(f, tolerance::partition_tol(f))
}

fn check_universe(g: &Graph, p: &VertexPartition) -> Result<()> {
    if p.source_signal.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: g.vertex_count(),
            found: p.source_signal.len(),
        });
    }
    Ok(())
}

/// `d(V_+, V_−)`; at most 2 for a Fiedler partition of a connected graph.
pub fn partition_distance_check(g: &Graph, p: &VertexPartition) -> Result<Distance> {
    check_universe(g, p)?;
    g.set_distance(&p.positive, &p.negative)
}

/// Whether the subgraphs induced on `V_+` and on `V_−` are each connected.
/// An empty side counts as not connected.
pub fn sign_connectivity_check(g: &Graph, p: &VertexPartition) -> Result<(bool, bool)> {
    check_universe(g, p)?;
    Ok((
        g.induced_subgraph(&p.positive)?.is_connected(),
        g.induced_subgraph(&p.negative)?.is_connected(),
    ))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContainedBall {
    pub center: usize,
    pub ball: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharacteristicReport {
    pub zero_set: VertexSet,
    /// Every `x ∈ V_0` with `B_1(x) ⊆ V_0`, by center.
    pub contained_balls: Vec<ContainedBall>,
    /// 0 when no ball is contained.
    pub max_ball_size: usize,
    pub tol: f64,
}

pub fn zero_ball_scan(g: &Graph, p: &VertexPartition) -> Result<CharacteristicReport> {
    check_universe(g, p)?;
    let mut contained_balls = Vec::new();
    for &x in &p.zero {
        let ball = g.ball(x, 1)?;
        if ball.is_subset(&p.zero) {
            contained_balls.push(ContainedBall { center: x, ball });
        }
    }
    let max_ball_size = contained_balls.iter().map(|b| b.ball.len()).max().unwrap_or(0);
    Ok(CharacteristicReport {
        zero_set: p.zero.clone(),
        contained_balls,
        max_ball_size,
        tol: p.tol,
    })
}

/// A radius-1 ball inside one sign class on which `f` is (nearly) constant.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BallViolation {
    pub center: usize,
    /// `+1` for `V_+`, `-1` for `V_−`.
    pub sign: i8,
    /// `max − min` of `f` over the ball.
    pub spread: f64,
}

/// Centers `x` whose ball `B_1(x)` lies in `V_+` or in `V_−` and on which `f`
/// varies by at most `tol`. An eigenvector for `λ > 0` has none: `Lf(x) =
/// λ f(x) ≠ 0` forces `f` to vary on the ball.
pub fn constant_ball_scan(g: &Graph, p: &VertexPartition, tol: f64) -> Result<Vec<BallViolation>> {
    check_universe(g, p)?;
    let f = &p.source_signal;
    let mut out = Vec::new();
    for (side, sign) in [(&p.positive, 1i8), (&p.negative, -1i8)] {
        for &x in side {
            let ball = g.ball(x, 1)?;
            if !ball.is_subset(side) {
                continue;
            }
            let (lo, hi) = ball.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                (lo.min(f[v]), hi.max(f[v]))
            });
            if hi - lo <= tol {
                out.push(BallViolation {
                    center: x,
                    sign,
                    spread: hi - lo,
                });
            }
        }
    }
    out.sort_by_key(|v| v.center);
    Ok(out)
}

/// Default flatness tolerance for [`constant_ball_scan`]: `1e-12 · ‖f‖_∞`.
pub fn constant_ball_tol(f: &[f64]) -> f64 {
    tolerance::CONSTANT_BALL * f.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}
