//! Folding sequences: repeated identification of vertices at distance 2 until
//! the graph is complete.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};

/// One identification: `first` and `second` became `merged`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FoldStep {
    pub first: VertexId,
    pub second: VertexId,
    pub merged: VertexId,
}

impl fmt::Display for FoldStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "identify {} {} -> {}", self.first, self.second, self.merged)
    }
}

/// A folding sequence together with where every initial vertex ended up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldingRun {
    initial: Multigraph,
    steps: Vec<FoldStep>,
    final_graph: Multigraph,
    provenance: Vec<Vec<VertexId>>,
}

impl FoldingRun {
    /// The empty run: `g` is a folding of itself.
    pub fn trivial(g: &Multigraph) -> Self {
        FoldingRun {
            initial: g.clone(),
            steps: Vec::new(),
            final_graph: g.clone(),
            provenance: g.vertices().iter().map(|&v| vec![v]).collect(),
        }
    }

    /// Re-applies `pairs` from `initial`, checking the distance-2 condition
    /// at every step.
    pub fn replay<I>(initial: &Multigraph, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut run = FoldingRun::trivial(initial);
        for (index, (u, v)) in pairs.into_iter().enumerate() {
            run.apply(u, v).map_err(|e| Error::InvalidStep {
                index,
                reason: e.to_string(),
            })?;
        }
        Ok(run)
    }

    /// Replays the recorded steps and checks they reproduce this run.
    pub fn verify_replay(&self) -> Result<bool> {
        let again = FoldingRun::replay(
            &self.initial,
            self.steps.iter().map(|s| (s.first, s.second)),
        )?;
        Ok(again == *self)
    }

    pub fn apply(&mut self, u: VertexId, v: VertexId) -> Result<FoldStep> {
        let (first, second) = if u < v { (u, v) } else { (v, u) };
        let next = self.final_graph.identify(first, second)?;
        let i = self.final_graph.position(first).unwrap();
        let j = self.final_graph.position(second).unwrap();
        Ok(self.record(next, i, j))
    }

    pub(crate) fn apply_positions(&mut self, i: usize, j: usize) -> FoldStep {
        let next = self.final_graph.identify_positions(i, j);
        self.record(next, i, j)
    }

    fn record(&mut self, next: Multigraph, i: usize, j: usize) -> FoldStep {
        let step = FoldStep {
            first: self.final_graph.vertices()[i],
            second: self.final_graph.vertices()[j],
            merged: next.max_id(),
        };
        let (lo, hi) = (i.min(j), i.max(j));
        let mut second_block = self.provenance.remove(hi);
        let mut block = self.provenance.remove(lo);
        block.append(&mut second_block);
        block.sort_unstable();
        self.provenance.push(block);
        self.final_graph = next;
        self.steps.push(step);
        step
    }

    pub fn initial(&self) -> &Multigraph {
        &self.initial
    }

    pub fn steps(&self) -> &[FoldStep] {
        &self.steps
    }

    pub fn final_graph(&self) -> &Multigraph {
        &self.final_graph
    }

    /// Initial vertices merged into each final vertex, in final vertex order.
    pub fn provenance(&self) -> &[Vec<VertexId>] {
        &self.provenance
    }

    /// Graphs after each prefix of the run, starting with the initial graph.
    pub fn prefix_graphs(&self) -> Vec<Multigraph> {
        let mut out = vec![self.initial.clone()];
        let mut g = self.initial.clone();
        for s in &self.steps {
            g = g.identify(s.first, s.second).expect("recorded steps replay");
            out.push(g.clone());
        }
        out
    }
}

/// How [`run_policy`] picks the next pair. Every policy breaks ties towards
/// the lexicographically smallest pair of current ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Policy {
    /// Pair with the most distinct common neighbours.
    MaxCommonNeighbours,
    /// Lexicographically first pair.
    LexFirst,
    /// Uniform choice among the lexicographically sorted pairs, driven by a
    /// ChaCha8 stream seeded once per run.
    Random { seed: u64 },
}

impl Policy {
    pub fn name(&self) -> &'static str {
        match self {
            Policy::MaxCommonNeighbours => "max-common",
            Policy::LexFirst => "lex",
            Policy::Random { .. } => "random",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Policy::Random { seed } => Some(*seed),
            _ => None,
        }
    }
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Policy::Random { seed } => write!(f, "random(seed={seed})"),
            p => f.write_str(p.name()),
        }
    }
}

/// Folds `g` until it is complete, choosing pairs with `policy`.
pub fn run_policy(g: &Multigraph, policy: Policy) -> Result<FoldingRun> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut rng = match policy {
        Policy::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut run = FoldingRun::trivial(g);
    loop {
        let current = run.final_graph();
        let pairs = current.distance2_positions();
        if pairs.is_empty() {
            break;
        }
        let (i, j) = match policy {
            Policy::LexFirst => pairs[0],
            Policy::MaxCommonNeighbours => {
                let mut best = pairs[0];
                let mut best_count = current.common_neighbours_at(best.0, best.1);
                for &(i, j) in &pairs[1..] {
                    let count = current.common_neighbours_at(i, j);
                    if count > best_count {
                        best = (i, j);
                        best_count = count;
                    }
                }
                best
            }
            Policy::Random { .. } => {
                let rng = rng.as_mut().unwrap();
                pairs[rng.random_range(0..pairs.len())]
            }
        };
        run.apply_positions(i, j);
    }
    debug_assert!(run.final_graph().is_complete());
    Ok(run)
}

/// Colours each initial vertex by the index of the final vertex it was folded
/// into.
pub fn extract_colouring(run: &FoldingRun) -> Result<Colouring> {
    if !run.final_graph().is_complete() {
        return Err(Error::NotComplete);
    }
    let assignment = run
        .provenance()
        .iter()
        .enumerate()
        .flat_map(|(c, block)| block.iter().map(move |&v| (v, c)))
        .collect();
    Colouring::new(assignment)
}

/// Source of optimal colourings containing a monochromatic pair at distance 2.
pub trait MonoPairOracle {
    fn colouring_with_mono_pair(
        &self,
        g: &Multigraph,
    ) -> Result<(Colouring, (VertexId, VertexId))>;
}

impl<F> MonoPairOracle for F
where
    F: Fn(&Multigraph) -> Result<(Colouring, (VertexId, VertexId))>,
{
    fn colouring_with_mono_pair(
        &self,
        g: &Multigraph,
    ) -> Result<(Colouring, (VertexId, VertexId))> {
        self(g)
    }
}

/// Folds along pairs that share a colour in an optimal colouring of the
/// current graph, asking the oracle afresh at every step. Such a fold never
/// raises the chromatic number, so the run ends at a complete graph on
/// exactly chi(g) vertices.
pub fn proof_guided_fold<O>(g: &Multigraph, oracle: &O) -> Result<FoldingRun>
where
    O: MonoPairOracle + ?Sized,
{
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut run = FoldingRun::trivial(g);
    while !run.final_graph().is_complete() {
        let (_, (u, v)) = oracle.colouring_with_mono_pair(run.final_graph())?;
        run.apply(u, v)?;
    }
    Ok(run)
}
