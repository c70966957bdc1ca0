//! Building eigenvectors of larger graphs from eigenvectors of pieces.
//!
//! Both constructions rely on the same fact: an edge between two vertices
//! where the eigenvector vanishes does not change `Lφ`. Each result is
//! checked by computing the residual on the final graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::tolerance;

/// A graph with an eigenpair `(λ, v)` of its Laplacian.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenComponent {
    pub graph: Graph,
    pub eigenvalue: f64,
    pub vector: Vec<f64>,
}

/// `(component index, vertex within that component)`.
pub type Endpoint = (usize, usize);

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LiftResult {
    #[serde(serialize_with = "serialize_graph")]
    pub graph: Graph,
    pub eigenvalue: f64,
    pub eigenvector: Vec<f64>,
    /// `‖Lφ − λφ‖₂`, at most `1e-9 · max(1, λ)`.
    pub residual: f64,
}

fn serialize_graph<S: serde::Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::io::graph_to_value(g).serialize(s)
}

fn residual(g: &Graph, lambda: f64, v: &[f64]) -> Result<f64> {
    let lv = g.laplacian_apply_all(v)?;
    Ok(lv
        .iter()
        .zip(v)
        .map(|(a, x)| (a - lambda * x).powi(2))
        .sum::<f64>()
        .sqrt())
}

fn check_eigenpair(g: &Graph, lambda: f64, v: &[f64]) -> Result<f64> {
    let r = residual(g, lambda, v)?;
    let bound = tolerance::residual_bound(lambda);
    if r > bound {
        return Err(Error::ResidualTooLarge { residual: r, bound });
    }
    Ok(r)
}

fn finish(graph: Graph, eigenvalue: f64, eigenvector: Vec<f64>) -> Result<LiftResult> {
    let residual = check_eigenpair(&graph, eigenvalue, &eigenvector)?;
    Ok(LiftResult {
        graph,
        eigenvalue,
        eigenvector,
        residual,
    })
}

/// Joins graphs sharing an eigenvalue `λ > 0` with edges between zeros of
/// their eigenvectors; the concatenated vector is an eigenvector of the
/// result for `λ`.
///
/// Connecting edges are `((graph, vertex), (graph, vertex))` pairs between
/// different components. Vertices of component `c` are offset by the sizes
/// of components `0..c`. A value counts as zero when `|v| ≤ tol`.
pub fn lift_common_eigenvector(
    components: &[EigenComponent],
    connecting: &[(Endpoint, Endpoint)],
    tol: f64,
) -> Result<LiftResult> {
    let first = components
        .first()
        .ok_or_else(|| Error::InvalidParameter("no component graphs".into()))?;
    let lambda = first.eigenvalue;
    if lambda <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "eigenvalue must be positive, got {lambda}"
        )));
    }
    if connecting.is_empty() {
        return Err(Error::EmptyConnectingSet);
    }
    let mut offsets = Vec::with_capacity(components.len());
    let mut total = 0;
    for c in components {
        if (c.eigenvalue - lambda).abs() > tolerance::residual_bound(lambda) {
            return Err(Error::EigenvalueMismatch(lambda, c.eigenvalue));
        }
        if c.vector.len() != c.graph.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: c.graph.vertex_count(),
                found: c.vector.len(),
            });
        }
        check_eigenpair(&c.graph, c.eigenvalue, &c.vector)?;
        offsets.push(total);
        total += c.graph.vertex_count();
    }

    let endpoint = |(graph, vertex): Endpoint| -> Result<usize> {
        let c = components.get(graph).ok_or(Error::IndexOutOfRange {
            index: graph,
            bound: components.len(),
        })?;
        let value = *c.vector.get(vertex).ok_or(Error::VertexOutOfRange {
            vertex,
            n: c.graph.vertex_count(),
        })?;
        if value.abs() > tol {
            return Err(Error::ConnectingVertexNotZero { graph, vertex, value });
        }
        Ok(offsets[graph] + vertex)
    };
    let mut extra = Vec::with_capacity(connecting.len());
    for &(x, y) in connecting {
        if x.0 == y.0 {
            return Err(Error::ConnectingEdgeWithinGraph(x.0));
        }
        extra.push((endpoint(x)?, endpoint(y)?));
    }

    let edges = components
        .iter()
        .zip(&offsets)
        .flat_map(|(c, &off)| c.graph.edges().map(move |(u, v)| (u + off, v + off)))
        .chain(extra);
    let graph = Graph::from_edges(total, edges)?;
    let vector = components.iter().flat_map(|c| c.vector.iter().copied()).collect();
    finish(graph, lambda, vector)
}

/// Zero-extends an eigenvector `v` of the subgraph induced on `s` to all of
/// `g`. Entries of `v` follow the order of `s`; the subgraph Laplacian uses
/// degrees within `s`. Every edge leaving `s` must start at a vertex where
/// `|v| ≤ tol`.
pub fn extend_subgraph_eigenvector(g: &Graph, s: &VertexSet, lambda: f64, v: &[f64], tol: f64) -> Result<LiftResult> {
    let sub = g.induced_subgraph(s)?;
    if v.len() != s.len() {
        return Err(Error::DimensionMismatch {
            expected: s.len(),
            found: v.len(),
        });
    }
    check_eigenpair(&sub, lambda, v)?;
    for (pos, &x) in s.iter().enumerate() {
        for &y in g.neighbors(x)? {
            if !s.contains(y) && v[pos].abs() > tol {
                return Err(Error::BoundaryNotZero {
                    inside: x,
                    outside: y,
                    value: v[pos],
                });
            }
        }
    }
    let mut phi = vec![0.0; g.vertex_count()];
    for (pos, &x) in s.iter().enumerate() {
        phi[x] = v[pos];
    }
    finish(g.clone(), lambda, phi)
}
