//! Deterministic constructors for the graph families used throughout the crate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

fn require(ok: bool, msg: impl Into<String>) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, "path needs n >= 1")?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, "cycle needs n >= 3")?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, "complete graph needs n >= 1")?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{m,n}` with the first class on `0..m` and the second on `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    require(m >= 1 && n >= 1, "complete bipartite graph needs m, n >= 1")?;
    Graph::from_edges(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
}

/// Star with `n` leaves `0..n` and hub `n`.
pub fn star(n: usize) -> Result<Graph> {
    require(n >= 1, "star needs n >= 1")?;
    complete_bipartite(n, 1)
}

/// Generalized ladder with `n` rungs of `m` vertices each.
///
/// Vertex `(j, i)` (rung `j`, position `i`) has flat index `j*m + i`. Each
/// rung is a path; the two rails join the rung endpoints `i = 0` and
/// `i = m-1` of consecutive rungs. Interior rung vertices have no
/// off-rung neighbours. `generalized_ladder(n, 2)` is `P_n □ P_2`.
pub fn generalized_ladder(n: usize, m: usize) -> Result<Graph> {
    require(n >= 2 && m >= 2, "generalized ladder needs n, m >= 2")?;
    let idx = |j: usize, i: usize| j * m + i;
    let rungs = (0..n).flat_map(|j| (1..m).map(move |i| (idx(j, i - 1), idx(j, i))));
    let rails = (1..n).flat_map(|j| [(idx(j - 1, 0), idx(j, 0)), (idx(j - 1, m - 1), idx(j, m - 1))]);
    Graph::from_edges(n * m, rungs.chain(rails))
}

/// Rectangular grid `P_rows □ P_cols`, vertex `(r, c)` at `r*cols + c`.
pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1")?;
    let idx = |r: usize, c: usize| r * cols + c;
    let horiz = (0..rows).flat_map(|r| (1..cols).map(move |c| (idx(r, c - 1), idx(r, c))));
    let vert = (1..rows).flat_map(|r| (0..cols).map(move |c| (idx(r - 1, c), idx(r, c))));
    Graph::from_edges(rows * cols, horiz.chain(vert))
}

/// Path on `2k + 1` vertices whose middle vertex (with its two edges) is
/// repeated `m` times.
///
/// Layout: left path `0..k` (its last vertex is the left attachment),
/// centers `k..k+m`, right path `k+m..2k+m` (its first vertex is the right
/// attachment). Every center is adjacent to the two attachments only.
pub fn duplicated_middle_path(k: usize, m: usize) -> Result<Graph> {
    require(k >= 1 && m >= 1, "duplicated middle path needs k, m >= 1")?;
    let right = k + m;
    let left_path = (1..k).map(|i| (i - 1, i));
    let right_path = (1..k).map(move |i| (right + i - 1, right + i));
    let centers = (k..k + m).flat_map(move |c| [(k - 1, c), (c, right)]);
    Graph::from_edges(2 * k + m, left_path.chain(right_path).chain(centers))
}

/// Uniform random labelled tree on `n` vertices, decoded from a Prüfer
/// sequence drawn with a ChaCha8 stream seeded by `seed`.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    require(n >= 1, "tree needs n >= 1")?;
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("Prüfer decoding always has a leaf");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges)
}

/// Barren-graph vertex classes `V1..V6` with sizes `(N, 1, 2, 2, 1, 1)`.
///
/// `V1 = 0..N`, `V2 = {N}`, `V3 = {N+1, N+2}`, `V4 = {N+3, N+4}`,
/// `V5 = {N+5}`, `V6 = {N+6}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarrenLayout {
    pub n: usize,
    pub classes: [VertexSet; 6],
}

impl BarrenLayout {
    pub fn new(n: usize) -> Result<Self> {
        require(n >= 3, "barren graph needs N >= 3")?;
        let total = n + 7;
        let set = |r: std::ops::Range<usize>| VertexSet::new(total, r).expect("in range");
        Ok(BarrenLayout {
            n,
            classes: [
                set(0..n),
                set(n..n + 1),
                set(n + 1..n + 3),
                set(n + 3..n + 5),
                set(n + 5..n + 6),
                set(n + 6..n + 7),
            ],
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n + 7
    }

    /// Class `V_c` for `c` in `1..=6`.
    pub fn class(&self, c: usize) -> &VertexSet {
        &self.classes[c - 1]
    }

    /// Class label in `1..=6` of vertex `v`.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|s| s.contains(v)).map(|i| i + 1)
    }

    /// The single vertex of `V2`.
    pub fn hub(&self) -> usize {
        self.n
    }
}

/// Complete bipartite edge block between two vertex sets.
fn bipartite_block(total: usize, a: &VertexSet, b: &VertexSet) -> Result<Graph> {
    Graph::from_edges(total, a.iter().flat_map(|&u| b.iter().map(move |&v| (u, v))))
}

/// The barren graph `K(V1,V2) + K(V1,V3) + K(V1,V4) + K(V3,V5) + K(V4,V6)`.
pub fn barren(n: usize) -> Result<(Graph, BarrenLayout)> {
    let layout = BarrenLayout::new(n)?;
    let total = layout.vertex_count();
    let mut g = Graph::empty(total);
    for (a, b) in [(1, 2), (1, 3), (1, 4), (3, 5), (4, 6)] {
        g = g.graph_sum(&bipartite_block(total, layout.class(a), layout.class(b))?)?;
    }
    Ok((g, layout))
}
