//! Finite simple undirected graphs and their metric structure.
//!
//! Vertices are `0..n`. Edges are stored once as `(min, max)` pairs in a
//! sorted set, so every iteration order in this crate is deterministic.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};

/// A finite simple undirected graph with a fixed vertex ordering.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Sorted, duplicate-free subset of the vertices of some graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
    universe: usize,
}

/// Shortest-path distance; `Infinite` between different components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

fn norm_edge(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
            neighbors: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate and reversed edges are
    /// absorbed; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            check_vertex(n, u)?;
            check_vertex(n, v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert(norm_edge(u, v));
        }
        Ok(Self::from_edge_set(n, set))
    }

    fn from_edge_set(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Graph { n, edges, neighbors }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&norm_edge(u, v))
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.check(v)?;
        Ok(&self.neighbors[v])
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.neighbors[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub(crate) fn check(&self, v: usize) -> Result<()> {
        check_vertex(self.n, v)
    }

    pub fn adjacency_matrix(&self) -> DMatrix<f64> {
        let mut a = DMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            a[(u, v)] = 1.0;
            a[(v, u)] = 1.0;
        }
        a
    }

    pub fn degree_matrix(&self) -> DMatrix<f64> {
        let d: Vec<f64> = self.degrees().into_iter().map(|d| d as f64).collect();
        DMatrix::from_diagonal(&DVector::from_vec(d))
    }

    /// Combinatorial Laplacian `L = D - A`.
    pub fn laplacian(&self) -> DMatrix<f64> {
        let mut l = DMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            l[(u, v)] = -1.0;
            l[(v, u)] = -1.0;
        }
        for (v, nb) in self.neighbors.iter().enumerate() {
            l[(v, v)] = nb.len() as f64;
        }
        l
    }

    /// `(Lf)(x) = Σ_{y∼x} (f(x) − f(y))`.
    pub fn laplacian_apply(&self, f: &[f64], x: usize) -> Result<f64> {
        self.check_len(f.len())?;
        self.check(x)?;
        Ok(self.neighbors[x].iter().map(|&y| f[x] - f[y]).sum())
    }

    /// `Lf` evaluated at every vertex.
    pub fn laplacian_apply_all(&self, f: &[f64]) -> Result<Vec<f64>> {
        self.check_len(f.len())?;
        Ok((0..self.n)
            .map(|x| self.neighbors[x].iter().map(|&y| f[x] - f[y]).sum())
            .collect())
    }

    /// `Σ_{x∼y} |f(x) − f(y)|²`, one term per edge.
    pub fn dirichlet_energy(&self, f: &[f64]) -> Result<f64> {
        self.check_len(f.len())?;
        Ok(self
            .edges
            .iter()
            .map(|&(u, v)| {
                let d = f[u] - f[v];
                d * d
            })
            .sum())
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: len,
            });
        }
        Ok(())
    }

    /// Breadth-first distances from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Result<Vec<Distance>> {
        self.check(source)?;
        let mut dist = vec![Distance::Infinite; self.n];
        dist[source] = Distance::Finite(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let Distance::Finite(du) = dist[u] else { unreachable!() };
            for &w in &self.neighbors[u] {
                if dist[w] == Distance::Infinite {
                    dist[w] = Distance::Finite(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn distance(&self, x: usize, y: usize) -> Result<Distance> {
        self.check(y)?;
        Ok(self.distances_from(x)?[y])
    }

    /// Closed ball `B_r(x) = {y : d(x, y) ≤ r}`.
    pub fn ball(&self, x: usize, r: usize) -> Result<VertexSet> {
        let dist = self.distances_from(x)?;
        let members = dist
            .iter()
            .enumerate()
            .filter(|(_, d)| matches!(d, Distance::Finite(k) if *k <= r))
            .map(|(y, _)| y)
            .collect();
        Ok(VertexSet {
            members,
            universe: self.n,
        })
    }

    /// `min_{s∈S, t∈T} d(s, t)` via a multi-source search from `S`.
    pub fn set_distance(&self, s: &VertexSet, t: &VertexSet) -> Result<Distance> {
        if s.is_empty() || t.is_empty() {
            return Err(Error::EmptySet);
        }
        self.check_set(s)?;
        self.check_set(t)?;
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for &v in s.iter() {
            dist[v] = 0;
            queue.push_back(v);
        }
        while let Some(u) = queue.pop_front() {
            if t.contains(u) {
                return Ok(Distance::Finite(dist[u]));
            }
            for &w in &self.neighbors[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(Distance::Infinite)
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.members.last() {
            Some(&v) if v >= self.n => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }

    /// Connected components ordered by their smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.neighbors[u] {
                    if !seen[w] {
                        seen[w] = true;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(VertexSet {
                members,
                universe: self.n,
            });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.connected_components().len() == 1
    }

    /// Union of edge sets over a shared vertex set.
    pub fn graph_sum(&self, other: &Graph) -> Result<Graph> {
        if self.n != other.n {
            return Err(Error::VertexCountMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let edges = self.edges.union(&other.edges).copied().collect();
        Ok(Self::from_edge_set(self.n, edges))
    }

    /// Side-by-side union; `other`'s vertices are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_edge_set(self.n + other.n, edges)
    }

    pub fn add_edges<I>(&self, new_edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = self.edges.clone();
        for (u, v) in new_edges {
            self.check(u)?;
            self.check(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.insert(norm_edge(u, v));
        }
        Ok(Self::from_edge_set(self.n, edges))
    }

    /// Replaces edge `{u, v}` by a path through a new vertex with index `n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let e = norm_edge(u, v);
        if !self.edges.contains(&e) {
            return Err(Error::EdgeNotPresent(u, v));
        }
        let w = self.n;
        let mut edges = self.edges.clone();
        edges.remove(&e);
        edges.insert((e.0, w));
        edges.insert((e.1, w));
        Ok(Self::from_edge_set(self.n + 1, edges))
    }

    /// Identifies the endpoints of `{u, v}`. The merged vertex keeps the
    /// smaller index; higher indices shift down by one. Parallel edges merge
    /// and the contracted edge disappears.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let (keep, gone) = norm_edge(u, v);
        if !self.edges.contains(&(keep, gone)) {
            return Err(Error::EdgeNotPresent(u, v));
        }
        let relabel = |x: usize| match x.cmp(&gone) {
            std::cmp::Ordering::Less => x,
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => x - 1,
        };
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .filter(|(a, b)| a != b)
            .map(|(a, b)| norm_edge(a, b))
            .collect();
        Ok(Self::from_edge_set(self.n - 1, edges))
    }

    /// Subgraph induced on `s`, with vertices renumbered by their position in `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let mut index = vec![usize::MAX; self.n];
        for (pos, &v) in s.iter().enumerate() {
            index[v] = pos;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]))
            .collect();
        Ok(Self::from_edge_set(s.len(), edges))
    }
}

pub(crate) fn check_vertex(n: usize, v: usize) -> Result<()> {
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(())
}

impl VertexSet {
    /// Sorts and deduplicates `members`; every member must be `< universe`.
    pub fn new<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.last() {
            check_vertex(universe, v)?;
        }
        Ok(VertexSet { members, universe })
    }

    pub fn empty(universe: usize) -> Self {
        VertexSet {
            members: Vec::new(),
            universe,
        }
    }

    pub fn all(universe: usize) -> Self {
        VertexSet {
            members: (0..universe).collect(),
            universe,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &usize> + '_ {
        self.members.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut members: Vec<usize> = self.members.iter().chain(&other.members).copied().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet {
            members,
            universe: self.universe.max(other.universe),
        }
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(serializer)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    #[test]
    fn degree_examples() {
        let k4 = complete(4).unwrap();
        assert!((0..4).all(|v| k4.degree(v).unwrap() == 3));
        assert_eq!(path(3).unwrap().degree(0).unwrap(), 1);
        assert_eq!(
            path(3).unwrap().degree(3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn laplacian_small_cases() {
        let l = path(2).unwrap().laplacian();
        assert_eq!(l, DMatrix::from_row_slice(2, 2, &[1.0, -1.0, -1.0, 1.0]));
        assert_eq!(Graph::empty(3).laplacian(), DMatrix::zeros(3, 3));
    }

    #[test]
    fn laplacian_apply_cases() {
        let g = path(2).unwrap();
        assert_eq!(g.laplacian_apply(&[1.0, 0.0], 0).unwrap(), 1.0);
        let c = cycle(5).unwrap();
        assert_eq!(c.laplacian_apply(&[2.5; 5], 3).unwrap(), 0.0);
        assert!(matches!(
            c.laplacian_apply(&[1.0; 4], 0),
            Err(Error::DimensionMismatch { expected: 5, found: 4 })
        ));
    }

    #[test]
    fn dirichlet_energy_cases() {
        let g = path(2).unwrap();
        assert_eq!(g.dirichlet_energy(&[1.0, 0.0]).unwrap(), 1.0);
        assert_eq!(cycle(4).unwrap().dirichlet_energy(&[3.0; 4]).unwrap(), 0.0);
    }

    #[test]
    fn distances() {
        let c6 = cycle(6).unwrap();
        assert_eq!(c6.distance(0, 3).unwrap(), Distance::Finite(3));
        assert_eq!(c6.distance(4, 4).unwrap(), Distance::Finite(0));
        let two = path(2).unwrap().disjoint_union(&path(3).unwrap());
        assert_eq!(two.distance(0, 4).unwrap(), Distance::Infinite);
        assert!(c6.distance(0, 6).is_err());
    }

    #[test]
    fn balls() {
        let p5 = path(5).unwrap();
        assert_eq!(p5.ball(2, 1).unwrap().as_slice(), &[1, 2, 3]);
        assert_eq!(p5.ball(4, 0).unwrap().as_slice(), &[4]);
        assert_eq!(p5.ball(0, 5).unwrap(), VertexSet::all(5));
    }

    #[test]
    fn set_distance_cases() {
        let p3 = path(3).unwrap();
        let s = VertexSet::new(3, [0]).unwrap();
        let t = VertexSet::new(3, [2]).unwrap();
        assert_eq!(p3.set_distance(&s, &t).unwrap(), Distance::Finite(2));
        let u = VertexSet::new(3, [0, 1]).unwrap();
        assert_eq!(p3.set_distance(&s, &u).unwrap(), Distance::Finite(0));
        assert_eq!(p3.set_distance(&s, &VertexSet::empty(3)), Err(Error::EmptySet));
    }

    #[test]
    fn components_of_union() {
        let g = path(2).unwrap().disjoint_union(&path(3).unwrap());
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].as_slice(), &[0, 1]);
        assert_eq!(comps[1].as_slice(), &[2, 3, 4]);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(cycle(7).unwrap().connected_components(), vec![VertexSet::all(7)]);
    }

    #[test]
    fn sum_identities() {
        let g = cycle(5).unwrap();
        assert_eq!(g.graph_sum(&Graph::empty(5)).unwrap(), g);
        assert_eq!(g.graph_sum(&g).unwrap(), g);
        assert!(matches!(
            g.graph_sum(&Graph::empty(4)),
            Err(Error::VertexCountMismatch { .. })
        ));
    }

    #[test]
    fn add_edges_cases() {
        let g = path(3).unwrap();
        assert_eq!(g.add_edges([(1, 0)]).unwrap(), g);
        assert_eq!(g.add_edges([(1, 1)]), Err(Error::SelfLoop(1)));
        let two = g.disjoint_union(&g).add_edges([(1, 4)]).unwrap();
        assert!(two.is_connected());
        assert_eq!(two.vertex_count(), 6);
    }

    #[test]
    fn subdivide_and_contract() {
        let p2 = path(2).unwrap();
        let s = p2.subdivide_edge(0, 1).unwrap();
        assert_eq!(s.vertex_count(), 3);
        assert_eq!(s.edge_count(), 2);
        assert_eq!(s.degree(2).unwrap(), 2);
        assert_eq!(p2.subdivide_edge(0, 0), Err(Error::EdgeNotPresent(0, 0)));

        assert_eq!(path(3).unwrap().contract_edge(1, 2).unwrap(), p2);
        let tri = complete(3).unwrap().contract_edge(0, 2).unwrap();
        assert_eq!(tri, p2);
        assert_eq!(path(3).unwrap().contract_edge(0, 2), Err(Error::EdgeNotPresent(0, 2)));
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let c = cycle(6).unwrap();
        let s = VertexSet::new(6, [5, 0, 1]).unwrap();
        let h = c.induced_subgraph(&s).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
    }
}
