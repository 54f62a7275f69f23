//! Colouring algorithms that never look at foldings: exact chromatic number by
//! DSATUR branch-and-bound, greedy and DSATUR heuristics, clique number, and
//! the search for an optimal colouring with a monochromatic distance-2 pair.
//!
//! Everything here reads the underlying simple graph.

use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};

/// Exact chromatic number with a witness colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiResult {
    pub chi: usize,
    pub witness: Colouring,
    /// Branch-and-bound nodes; 0 when the DSATUR bound already met the clique bound.
    pub nodes_explored: u64,
}

struct Dense {
    n: usize,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl Dense {
    fn new(g: &Multigraph) -> Self {
        let n = g.order();
        let adj = g.adjacency_lists();
        let mut matrix = vec![false; n * n];
        for (i, nb) in adj.iter().enumerate() {
            for &j in nb {
                matrix[i * n + j] = true;
            }
        }
        Dense { n, adj, matrix }
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        self.matrix[i * self.n + j]
    }
}

/// Saturation bookkeeping shared by the heuristic and the exact search.
struct Saturation {
    colours: Vec<Option<usize>>,
    counts: Vec<Vec<u32>>,
    sat: Vec<usize>,
}

impl Saturation {
    fn new(n: usize) -> Self {
        Saturation {
            colours: vec![None; n],
            counts: vec![vec![0; n]; n],
            sat: vec![0; n],
        }
    }

    fn assign(&mut self, d: &Dense, v: usize, c: usize) {
        self.colours[v] = Some(c);
        for &u in &d.adj[v] {
            if self.counts[u][c] == 0 {
                self.sat[u] += 1;
            }
            self.counts[u][c] += 1;
        }
    }

    fn unassign(&mut self, d: &Dense, v: usize) {
        let c = self.colours[v].take().expect("vertex was coloured");
        for &u in &d.adj[v] {
            self.counts[u][c] -= 1;
            if self.counts[u][c] == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    /// Uncoloured vertex of maximum saturation, then maximum degree, then
    /// smallest position.
    fn select(&self, d: &Dense) -> Option<usize> {
        (0..d.n)
            .filter(|&v| self.colours[v].is_none())
            .min_by_key(|&v| (std::cmp::Reverse((self.sat[v], d.adj[v].len())), v))
    }

    fn allows(&self, v: usize, c: usize) -> bool {
        self.counts[v][c] == 0
    }

    fn snapshot(&self) -> Vec<usize> {
        self.colours.iter().map(|c| c.expect("all vertices coloured")).collect()
    }
}

/// DSATUR heuristic. Ties on saturation go to the larger degree, then to the
/// smaller vertex id; each vertex takes the least colour free at its
/// neighbours.
pub fn dsatur(g: &Multigraph) -> Colouring {
    let d = Dense::new(g);
    Colouring::from_positions(g, &dsatur_positions(&d))
}

fn dsatur_positions(d: &Dense) -> Vec<usize> {
    let mut s = Saturation::new(d.n);
    while let Some(v) = s.select(d) {
        let c = (0..).find(|&c| s.allows(v, c)).unwrap();
        s.assign(d, v, c);
    }
    s.snapshot()
}

/// Colours vertices in the given order, each with the least colour unused by
/// its already coloured neighbours.
pub fn greedy_colouring(g: &Multigraph, order: &[VertexId]) -> Result<Colouring> {
    let n = g.order();
    let mut positions = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for &v in order {
        let p = g.position(v).ok_or(Error::NotPermutation)?;
        if std::mem::replace(&mut seen[p], true) {
            return Err(Error::NotPermutation);
        }
        positions.push(p);
    }
    if positions.len() != n {
        return Err(Error::NotPermutation);
    }
    let d = Dense::new(g);
    let mut colours: Vec<Option<usize>> = vec![None; n];
    for &v in &positions {
        let taken: Vec<usize> = d.adj[v].iter().filter_map(|&u| colours[u]).collect();
        colours[v] = (0..).find(|c| !taken.contains(c));
    }
    // greedy indices are gap-free: colour c > 0 is only used next to c - 1
    let assignment = g
        .vertices()
        .iter()
        .zip(colours)
        .map(|(&v, c)| (v, c.unwrap()))
        .collect();
    Colouring::new(assignment)
}

/// Size of a largest clique.
pub fn clique_number(g: &Multigraph) -> usize {
    let d = Dense::new(g);
    let mut best = 0;
    let cand: Vec<usize> = (0..d.n).collect();
    grow_clique(&d, &cand, 0, &mut best);
    best
}

fn grow_clique(d: &Dense, cand: &[usize], size: usize, best: &mut usize) {
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    for (k, &v) in cand.iter().enumerate() {
        if size + cand.len() - k <= *best {
            return;
        }
        let next: Vec<usize> = cand[k + 1..]
            .iter()
            .copied()
            .filter(|&u| d.adjacent(u, v))
            .collect();
        grow_clique(d, &next, size + 1, best);
    }
}

struct Exact<'a> {
    d: &'a Dense,
    s: Saturation,
    best: usize,
    best_colours: Vec<usize>,
    lower: usize,
    nodes: u64,
}

impl Exact<'_> {
    fn branch(&mut self, coloured: usize, used: usize) {
        self.nodes += 1;
        if coloured == self.d.n {
            if used < self.best {
                self.best = used;
                self.best_colours = self.s.snapshot();
            }
            return;
        }
        let v = self.s.select(self.d).expect("uncoloured vertex remains");
        // one fresh colour at most, and never as many as the incumbent
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if !self.s.allows(v, c) {
                continue;
            }
            self.s.assign(self.d, v, c);
            self.branch(coloured + 1, used.max(c + 1));
            self.s.unassign(self.d, v);
            if self.best <= self.lower {
                return;
            }
        }
    }
}

/// Exact chromatic number: DSATUR branching, clique lower bound, DSATUR
/// incumbent, and at most one new colour per branching vertex.
pub fn chromatic_number(g: &Multigraph) -> ChiResult {
    let d = Dense::new(g);
    let initial = dsatur_positions(&d);
    let upper = initial.iter().max().map_or(0, |m| m + 1);
    let lower = clique_number(g);
    let mut search = Exact {
        d: &d,
        s: Saturation::new(d.n),
        best: upper,
        best_colours: initial,
        lower,
        nodes: 0,
    };
    if upper > lower {
        search.branch(0, 0);
    }
    ChiResult {
        chi: search.best,
        witness: Colouring::from_positions(g, &search.best_colours),
        nodes_explored: search.nodes,
    }
}

/// Searches the optimal colourings of a connected non-complete graph, in
/// canonical class order (vertex `i` may open colour `k` only if colours
/// `0..k` are already in use), for one where some pair at distance 2 shares a
/// colour. Returns the colouring and the lexicographically smallest such pair.
///
/// An exhausted search yields [`Error::TheoremViolation`].
pub fn optimal_colouring_with_mono_pair(
    g: &Multigraph,
) -> Result<(Colouring, (VertexId, VertexId))> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_complete() {
        return Err(Error::AlreadyComplete);
    }
    let chi = chromatic_number(g).chi;
    let d = Dense::new(g);
    let pairs = g.distance2_positions();
    let mut colours = vec![usize::MAX; d.n];
    let found = enumerate_optimal(&d, chi, &pairs, &mut colours, 0, 0);
    let (i, j) = found.ok_or(Error::TheoremViolation)?;
    let colouring = Colouring::from_positions(g, &colours);
    Ok((colouring, (g.vertices()[i], g.vertices()[j])))
}

fn enumerate_optimal(
    d: &Dense,
    chi: usize,
    pairs: &[(usize, usize)],
    colours: &mut [usize],
    v: usize,
    used: usize,
) -> Option<(usize, usize)> {
    if v == d.n {
        if used != chi {
            return None;
        }
        return pairs.iter().copied().find(|&(a, b)| colours[a] == colours[b]);
    }
    if used + (d.n - v) < chi {
        return None;
    }
    for c in 0..(used + 1).min(chi) {
        if d.adj[v].iter().any(|&u| u < v && colours[u] == c) {
            continue;
        }
        colours[v] = c;
        if let Some(pair) = enumerate_optimal(d, chi, pairs, colours, v + 1, used.max(c + 1)) {
            return Some(pair);
        }
    }
    colours[v] = usize::MAX;
    None
}
