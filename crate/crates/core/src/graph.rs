//! Loopless undirected multigraphs and the distance-2 identification that
//! drives folding.
//!
//! Vertices are addressed by [`VertexId`]. A freshly built graph uses the ids
//! `0..order`; every identification removes two ids and appends a fresh one
//! (`max id + 1`), so ids are never reused within a folding run and the
//! vertex list stays sorted.
//!
//! Distances, completeness and classification are all computed on the
//! underlying simple graph. Multiplicities only record how many parallel
//! edges an identification produced.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for VertexId {
    fn from(id: usize) -> Self {
        VertexId(id)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    ids: Vec<VertexId>,
    /// Row-major `order * order` multiplicity matrix, zero on the diagonal.
    mult: Vec<u32>,
    labels: Option<Vec<String>>,
}

/// Structural summary of the underlying simple graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub connected: bool,
    pub bipartite: bool,
    pub odd_cycle: bool,
    pub complete: bool,
    pub max_degree: usize,
    /// `None` for forests.
    pub girth: Option<usize>,
}

impl Multigraph {
    /// Builds a graph on `0..order` with one edge per listed pair. Repeated
    /// pairs accumulate multiplicity.
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::with_multiplicities(order, edges.into_iter().map(|(u, v)| (u, v, 1)))
    }

    /// Like [`Multigraph::new`], with an explicit multiplicity per entry.
    pub fn with_multiplicities<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u32)>,
    {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut mult = vec![0u32; order * order];
        for (u, v, m) in edges {
            for endpoint in [u, v] {
                if endpoint >= order {
                    return Err(Error::EndpointOutOfRange { endpoint, order });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if m == 0 {
                return Err(Error::ZeroMultiplicity);
            }
            mult[u * order + v] += m;
            mult[v * order + u] += m;
        }
        Ok(Multigraph {
            ids: (0..order).map(VertexId).collect(),
            mult,
            labels: None,
        })
    }

    pub fn complete(order: usize) -> Result<Self> {
        Self::new(
            order,
            (0..order).flat_map(|u| (u + 1..order).map(move |v| (u, v))),
        )
    }

    /// Attaches display names, one per vertex in id order.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::LabelCount {
                expected: self.order(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.ids.len()
    }

    /// Vertex ids in ascending order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.position(v).is_some()
    }

    /// Index of `v` in [`Multigraph::vertices`].
    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    fn pos(&self, v: VertexId) -> Result<usize> {
        self.position(v).ok_or(Error::UnknownVertex(v))
    }

    fn expect_pos(&self, v: VertexId) -> usize {
        match self.position(v) {
            Some(p) => p,
            None => panic!("vertex {v} is not in the graph"),
        }
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        let p = self.position(v)?;
        self.labels.as_ref().map(|l| l[p].as_str())
    }

    pub fn max_id(&self) -> VertexId {
        *self.ids.last().expect("graphs are non-empty")
    }

    pub(crate) fn mult_at(&self, i: usize, j: usize) -> u32 {
        self.mult[i * self.order() + j]
    }

    pub(crate) fn adjacent_at(&self, i: usize, j: usize) -> bool {
        self.mult_at(i, j) > 0
    }

    pub(crate) fn neighbours_at(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.order();
        self.mult[i * n..(i + 1) * n]
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(j, _)| j)
    }

    /// Neighbour lists by position, ignoring multiplicity.
    pub(crate) fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        (0..self.order())
            .map(|i| self.neighbours_at(i).collect())
            .collect()
    }

    /// Number of parallel edges between `u` and `v` (0 when non-adjacent).
    ///
    /// Panics if either vertex is not in the graph.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> u32 {
        self.mult_at(self.expect_pos(u), self.expect_pos(v))
    }

    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.multiplicity(u, v) > 0
    }

    pub fn neighbours(&self, v: VertexId) -> Vec<VertexId> {
        self.neighbours_at(self.expect_pos(v))
            .map(|j| self.ids[j])
            .collect()
    }

    /// Degree in the underlying simple graph.
    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbours_at(self.expect_pos(v)).count()
    }

    /// Edges as `(u, v, multiplicity)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId, u32)> {
        let n = self.order();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let m = self.mult_at(i, j);
                if m > 0 {
                    out.push((self.ids[i], self.ids[j], m));
                }
            }
        }
        out
    }

    /// Total number of edges, counting parallel edges separately.
    pub fn edge_count(&self) -> usize {
        self.edges().iter().map(|e| e.2 as usize).sum()
    }

    /// Number of adjacent pairs.
    pub fn simple_edge_count(&self) -> usize {
        self.edges().len()
    }

    /// The same graph with every multiplicity clamped to 1.
    pub fn underlying_simple(&self) -> Multigraph {
        Multigraph {
            ids: self.ids.clone(),
            mult: self.mult.iter().map(|&m| m.min(1)).collect(),
            labels: self.labels.clone(),
        }
    }

    /// Renumbers the vertices to `0..order`, keeping their relative order.
    pub fn relabelled_dense(&self) -> Multigraph {
        Multigraph {
            ids: (0..self.order()).map(VertexId).collect(),
            mult: self.mult.clone(),
            labels: self.labels.clone(),
        }
    }

    /// At least one edge between every pair of distinct vertices.
    pub fn is_complete(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i + 1..n).all(|j| self.adjacent_at(i, j)))
    }

    pub(crate) fn bfs_from(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for y in self.neighbours_at(x) {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Shortest-path length in edges; `None` when `v` is unreachable from `u`.
    ///
    /// Panics if either vertex is not in the graph.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Option<usize> {
        let (i, j) = (self.expect_pos(u), self.expect_pos(v));
        self.bfs_from(i)[j]
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_from(0).iter().all(Option::is_some)
    }

    pub(crate) fn at_distance_two(&self, i: usize, j: usize) -> bool {
        i != j
            && !self.adjacent_at(i, j)
            && self.neighbours_at(i).any(|k| self.adjacent_at(k, j))
    }

    /// All pairs `(u, v)`, `u < v`, at distance exactly 2, in lexicographic
    /// order.
    pub fn distance2_pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.distance2_positions()
            .into_iter()
            .map(|(i, j)| (self.ids[i], self.ids[j]))
            .collect()
    }

    pub(crate) fn distance2_positions(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.at_distance_two(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Number of distinct vertices adjacent to both `u` and `v`.
    pub fn common_neighbours(&self, u: VertexId, v: VertexId) -> Result<usize> {
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let (i, j) = (self.pos(u)?, self.pos(v)?);
        Ok(self.common_neighbours_at(i, j))
    }

    pub(crate) fn common_neighbours_at(&self, i: usize, j: usize) -> usize {
        self.neighbours_at(i).filter(|&k| self.adjacent_at(k, j)).count()
    }

    /// Identifies two vertices at distance 2 into a fresh vertex `max id + 1`.
    ///
    /// The merged vertex inherits `mult(u, w) + mult(v, w)` edges to every
    /// other vertex `w`.
    pub fn identify(&self, u: VertexId, v: VertexId) -> Result<Multigraph> {
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let (i, j) = (self.pos(u)?, self.pos(v)?);
        if self.adjacent_at(i, j) {
            return Err(Error::Adjacent(u, v));
        }
        if !self.at_distance_two(i, j) {
            return Err(Error::NotAtDistanceTwo {
                u,
                v,
                distance: self.bfs_from(i)[j],
            });
        }
        Ok(self.identify_positions(i, j))
    }

    /// Unchecked merge of the vertices at positions `i` and `j`; the merged
    /// vertex is appended last.
    pub(crate) fn identify_positions(&self, i: usize, j: usize) -> Multigraph {
        let n = self.order();
        let keep: Vec<usize> = (0..n).filter(|&k| k != i && k != j).collect();
        let m = keep.len() + 1;
        let mut mult = vec![0u32; m * m];
        for (a, &x) in keep.iter().enumerate() {
            for (b, &y) in keep.iter().enumerate() {
                mult[a * m + b] = self.mult_at(x, y);
            }
            let merged = self.mult_at(i, x) + self.mult_at(j, x);
            mult[a * m + m - 1] = merged;
            mult[(m - 1) * m + a] = merged;
        }
        let mut ids: Vec<VertexId> = keep.iter().map(|&k| self.ids[k]).collect();
        ids.push(VertexId(self.max_id().0 + 1));
        let labels = self.labels.as_ref().map(|l| {
            let mut out: Vec<String> = keep.iter().map(|&k| l[k].clone()).collect();
            out.push(format!("{}+{}", l[i], l[j]));
            out
        });
        Multigraph { ids, mult, labels }
    }

    pub fn classify(&self) -> Classification {
        let n = self.order();
        let connected = self.is_connected();
        let degrees: Vec<usize> = (0..n).map(|i| self.neighbours_at(i).count()).collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);

        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut bipartite = true;
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].unwrap();
                for y in self.neighbours_at(x) {
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => bipartite = false,
                        Some(_) => {}
                    }
                }
            }
        }

        let odd_cycle = connected && n >= 3 && n % 2 == 1 && degrees.iter().all(|&d| d == 2);

        Classification {
            connected,
            bipartite,
            odd_cycle,
            complete: self.is_complete(),
            max_degree,
            girth: self.girth(),
        }
    }

    /// Length of a shortest cycle of the underlying simple graph.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbours_at(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}
