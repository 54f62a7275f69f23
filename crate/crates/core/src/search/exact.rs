//! Exhaustive search over folding sequences.
//!
//! States are simple graphs: parallel edges change neither distances nor
//! completeness, so two foldings with the same underlying simple graph have
//! the same future. States are memoized by canonical key. The only pruning
//! bound is the clique number of the input, which no folding can go below
//! because adjacent vertices are never merged.

use std::collections::HashMap;

use crate::bits::BitGraph;
use crate::canon::{canonical_key_bits, CanonicalKey};
use crate::chromatic::clique_number;
use crate::error::{Error, Result};
use crate::folding::FoldingRun;
use crate::graph::Multigraph;

use super::{Certificate, SearchOptions, SearchResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Goal {
    Smallest,
    Largest,
}

struct Searcher {
    goal: Goal,
    opts: SearchOptions,
    lower: usize,
    memo: HashMap<CanonicalKey, usize>,
    states: u64,
    hits: u64,
}

impl Searcher {
    /// Exact best complete-folding order reachable from `g`.
    fn value(&mut self, g: &BitGraph) -> usize {
        self.states += 1;
        let n = g.order();
        if g.is_complete() {
            return n;
        }
        let key = if self.opts.memoize {
            let key = canonical_key_bits(g);
            if let Some(&v) = self.memo.get(&key) {
                self.hits += 1;
                return v;
            }
            Some(key)
        } else {
            None
        };
        let mut best: Option<usize> = None;
        for (i, j) in g.distance2_pairs() {
            let v = self.value(&g.identify(i, j));
            let b = match (self.goal, best) {
                (_, None) => v,
                (Goal::Smallest, Some(b)) => b.min(v),
                (Goal::Largest, Some(b)) => b.max(v),
            };
            best = Some(b);
            if self.opts.prune && self.bound_met(b, n) {
                break;
            }
        }
        let best = best.expect("connected non-complete graphs have a pair at distance 2");
        if let Some(key) = key {
            self.memo.insert(key, best);
        }
        best
    }

    // Both bounds hold for every state, so an early stop still leaves an
    // exact value in the memo.
    fn bound_met(&self, best: usize, n: usize) -> bool {
        match self.goal {
            Goal::Smallest => best <= self.lower,
            Goal::Largest => best + 1 >= n,
        }
    }
}

fn solve(g: &Multigraph, goal: Goal, opts: SearchOptions) -> Result<SearchResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let root = BitGraph::from_multigraph(g)?;
    let mut searcher = Searcher {
        goal,
        opts,
        lower: clique_number(g).max(1),
        memo: HashMap::new(),
        states: 0,
        hits: 0,
    };
    let value = searcher.value(&root);
    let (states_visited, memo_hits) = (searcher.states, searcher.hits);

    // Certificate: follow the lexicographically first pair whose subtree
    // attains the optimum.
    let mut run = FoldingRun::trivial(g);
    let mut current = root;
    while !current.is_complete() {
        let (i, j, child) = current
            .distance2_pairs()
            .into_iter()
            .map(|(i, j)| (i, j, current.identify(i, j)))
            .find(|(_, _, child)| searcher.value(child) == value)
            .expect("an optimal child exists");
        run.apply_positions(i, j);
        current = child;
    }
    debug_assert_eq!(run.final_graph().order(), value);

    Ok(SearchResult {
        value,
        certificate: Certificate::Folding(run),
        states_visited,
        memo_hits,
    })
}

/// Folding number: the minimum order of a complete folding of `g`.
pub fn folding_number(g: &Multigraph) -> Result<SearchResult> {
    folding_number_with(g, SearchOptions::default())
}

pub fn folding_number_with(g: &Multigraph, opts: SearchOptions) -> Result<SearchResult> {
    solve(g, Goal::Smallest, opts)
}

/// Maximum order of a complete folding of `g`.
pub fn max_complete_folding(g: &Multigraph) -> Result<SearchResult> {
    max_complete_folding_with(g, SearchOptions::default())
}

pub fn max_complete_folding_with(g: &Multigraph, opts: SearchOptions) -> Result<SearchResult> {
    solve(g, Goal::Largest, opts)
}
