//! Named graph families and exhaustive enumeration of small connected graphs.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bits::BitGraph;
use crate::canon::{canonical_key_bits, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub const GNP_MAX_ATTEMPTS: usize = 1000;
pub const ENUMERATION_MAX_ORDER: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// Path on `n >= 1` vertices.
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Hub joined to a cycle on `n - 1` vertices; `n` counts the hub.
    Wheel(usize),
    /// Hub joined to a path on `n - 1` vertices.
    Fan(usize),
    Petersen,
    MycielskiOf(Box<FamilySpec>),
    /// Connected sample of G(n, p). Attempt `k` uses the sub-seed
    /// `splitmix64(seed + k)`, with attempt 0 using `seed` itself.
    Gnp { n: usize, p: f64, seed: u64 },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(n) => write!(f, "cycle({n})"),
            FamilySpec::Path(n) => write!(f, "path({n})"),
            FamilySpec::Complete(n) => write!(f, "complete({n})"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "complete_bipartite({a},{b})"),
            FamilySpec::Wheel(n) => write!(f, "wheel({n})"),
            FamilySpec::Fan(n) => write!(f, "fan({n})"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::MycielskiOf(inner) => write!(f, "mycielski_of({inner})"),
            FamilySpec::Gnp { n, p, seed } => write!(f, "gnp({n},{p},{seed})"),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn cycle_edges(offset: usize, len: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..len).map(move |i| (offset + i, offset + (i + 1) % len))
}

pub fn generate(spec: &FamilySpec) -> Result<Multigraph> {
    match *spec {
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(invalid("cycle length must be at least 3"));
            }
            Multigraph::new(n, cycle_edges(0, n))
        }
        FamilySpec::Path(n) => {
            if n < 1 {
                return Err(invalid("path needs at least one vertex"));
            }
            Multigraph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        FamilySpec::Complete(n) => {
            if n < 1 {
                return Err(invalid("complete graph needs at least one vertex"));
            }
            Multigraph::complete(n)
        }
        FamilySpec::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return Err(invalid("both sides of K_{a,b} must be non-empty"));
            }
            Multigraph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
        FamilySpec::Wheel(n) => {
            if n < 4 {
                return Err(invalid("wheel needs at least 4 vertices"));
            }
            Multigraph::new(n, cycle_edges(1, n - 1).chain((1..n).map(|i| (0, i))))
        }
        FamilySpec::Fan(n) => {
            if n < 3 {
                return Err(invalid("fan needs at least 3 vertices"));
            }
            Multigraph::new(n, (2..n).map(|i| (i - 1, i)).chain((1..n).map(|i| (0, i))))
        }
        FamilySpec::Petersen => Multigraph::new(
            10,
            cycle_edges(0, 5)
                .chain((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)))
                .chain((0..5).map(|i| (i, i + 5))),
        ),
        FamilySpec::MycielskiOf(ref inner) => Ok(mycielskian(&generate(inner)?)),
        FamilySpec::Gnp { n, p, seed } => gnp(n, p, seed),
    }
}

/// Mycielski construction on the underlying simple graph: for vertices
/// `v_0..v_{n-1}` add shadows `u_i` adjacent to the neighbours of `v_i`, and
/// one apex adjacent to every shadow. `2n + 1` vertices, `3m + n` edges.
pub fn mycielskian(g: &Multigraph) -> Multigraph {
    let n = g.order();
    let base: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v, _)| (g.position(u).unwrap(), g.position(v).unwrap()))
        .collect();
    let mut edges = base.clone();
    for &(i, j) in &base {
        edges.push((n + i, j));
        edges.push((n + j, i));
    }
    edges.extend((0..n).map(|i| (n + i, 2 * n)));
    Multigraph::new(2 * n + 1, edges).expect("construction stays in range")
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn gnp(n: usize, p: f64, seed: u64) -> Result<Multigraph> {
    if n < 1 {
        return Err(invalid("G(n, p) needs at least one vertex"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("edge probability {p} outside [0, 1]")));
    }
    for attempt in 0..GNP_MAX_ATTEMPTS {
        let sub_seed = if attempt == 0 {
            seed
        } else {
            splitmix64(seed.wrapping_add(attempt as u64))
        };
        let mut rng = ChaCha8Rng::seed_from_u64(sub_seed);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Multigraph::new(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RetriesExhausted(GNP_MAX_ATTEMPTS))
}

fn check_enumeration_order(n: usize) -> Result<()> {
    if !(1..=ENUMERATION_MAX_ORDER).contains(&n) {
        return Err(invalid(format!(
            "enumeration supports 1..={ENUMERATION_MAX_ORDER} vertices, got {n}"
        )));
    }
    Ok(())
}

fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

fn to_multigraph(bits: &BitGraph) -> Multigraph {
    let n = bits.order();
    Multigraph::new(
        n,
        (0..n).flat_map(|i| (i + 1..n).filter(move |&j| bits.adjacent(i, j)).map(move |j| (i, j))),
    )
    .expect("bit graphs are loopless")
}

/// Connected simple graphs on `0..n`, by edge bitmask over the pairs
/// `(0,1), (0,2), (1,2), (0,3), ...`. With `dedup`, only the first graph of
/// each isomorphism class is yielded.
pub fn enumerate_connected(n: usize, dedup: bool) -> Result<ConnectedGraphs> {
    check_enumeration_order(n)?;
    Ok(ConnectedGraphs {
        n,
        next_mask: 0,
        end: 1u64 << pair_count(n),
        seen: dedup.then(HashSet::new),
    })
}

pub struct ConnectedGraphs {
    n: usize,
    next_mask: u64,
    end: u64,
    seen: Option<HashSet<CanonicalKey>>,
}

impl Iterator for ConnectedGraphs {
    type Item = Multigraph;

    fn next(&mut self) -> Option<Multigraph> {
        while self.next_mask < self.end {
            let bits = BitGraph::from_edge_mask(self.n, self.next_mask);
            self.next_mask += 1;
            if !bits.is_connected() {
                continue;
            }
            if let Some(seen) = &mut self.seen {
                if !seen.insert(canonical_key_bits(&bits)) {
                    continue;
                }
            }
            return Some(to_multigraph(&bits));
        }
        None
    }
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, computed in parallel. Matches `enumerate_connected(n, true)`
/// graph for graph.
pub fn connected_classes(n: usize) -> Result<Vec<Multigraph>> {
    check_enumeration_order(n)?;
    let end = 1u64 << pair_count(n);
    let firsts = (0..end)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<CanonicalKey, u64>, mask| {
            let bits = BitGraph::from_edge_mask(n, mask);
            if bits.is_connected() {
                acc.entry(canonical_key_bits(&bits)).or_insert(mask);
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, mask) in b {
                a.entry(k).and_modify(|m| *m = (*m).min(mask)).or_insert(mask);
            }
            a
        });
    let mut masks: Vec<u64> = firsts.into_values().collect();
    masks.sort_unstable();
    Ok(masks
        .into_iter()
        .map(|mask| to_multigraph(&BitGraph::from_edge_mask(n, mask)))
        .collect())
}

/// Representatives of every connected class on `1..=max_n` vertices.
pub fn connected_classes_up_to(max_n: usize) -> Result<Vec<Multigraph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(connected_classes(n)?);
    }
    Ok(out)
}
