//! Vertex colourings and the checks the folding proof relies on.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};

/// Assignment of colour indices `0..k` to vertices, every index in use.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Colouring {
    colour_of: BTreeMap<VertexId, usize>,
    k: usize,
}

impl Colouring {
    /// Wraps an assignment, requiring the colours used to be exactly `0..k`.
    pub fn new(colour_of: BTreeMap<VertexId, usize>) -> Result<Self> {
        let mut used: Vec<usize> = colour_of.values().copied().collect();
        used.sort_unstable();
        used.dedup();
        if used.iter().enumerate().any(|(i, &c)| i != c) {
            return Err(Error::ColourGap);
        }
        Ok(Colouring {
            k: used.len(),
            colour_of,
        })
    }

    /// Renumbers arbitrary colour values by first appearance in vertex-id
    /// order, so the smallest vertex gets colour 0.
    pub fn normalized<I>(assignment: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, usize)>,
    {
        let raw: BTreeMap<VertexId, usize> = assignment.into_iter().collect();
        let mut rename: BTreeMap<usize, usize> = BTreeMap::new();
        let colour_of = raw
            .into_iter()
            .map(|(v, c)| {
                let next = rename.len();
                (v, *rename.entry(c).or_insert(next))
            })
            .collect();
        Colouring {
            k: rename.len(),
            colour_of,
        }
    }

    pub(crate) fn from_positions(g: &Multigraph, colours: &[usize]) -> Self {
        Self::normalized(g.vertices().iter().copied().zip(colours.iter().copied()))
    }

    pub fn colour(&self, v: VertexId) -> Option<usize> {
        self.colour_of.get(&v).copied()
    }

    pub fn num_colours(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colour_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colour_of.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, usize)> + '_ {
        self.colour_of.iter().map(|(&v, &c)| (v, c))
    }

    /// Colour classes indexed by colour.
    pub fn classes(&self) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, c) in self.iter() {
            out[c].push(v);
        }
        out
    }

    fn colours_for(&self, g: &Multigraph) -> Result<Vec<usize>> {
        g.vertices()
            .iter()
            .map(|&v| self.colour(v).ok_or(Error::MissingColour(v)))
            .collect()
    }
}

/// True iff no edge joins two vertices of the same colour.
pub fn verify_proper(g: &Multigraph, c: &Colouring) -> Result<bool> {
    let colours = c.colours_for(g)?;
    let n = g.order();
    Ok((0..n).all(|i| g.neighbours_at(i).all(|j| colours[i] != colours[j])))
}

/// Lexicographically smallest pair at distance 2 sharing a colour.
pub fn find_mono_distance2_pair(
    g: &Multigraph,
    c: &Colouring,
) -> Result<Option<(VertexId, VertexId)>> {
    if !verify_proper(g, c)? {
        return Err(Error::ImproperColouring);
    }
    let colours = c.colours_for(g)?;
    Ok(g
        .distance2_positions()
        .into_iter()
        .find(|&(i, j)| colours[i] == colours[j])
        .map(|(i, j)| (g.vertices()[i], g.vertices()[j])))
}

/// Three-colouring of an odd cycle: the smallest vertex is red (0), the rest
/// alternate blue (1) and green (2) walking towards its smaller neighbour.
pub fn odd_cycle_colouring(g: &Multigraph) -> Result<Colouring> {
    let class = g.classify();
    if !class.odd_cycle || g.order() < 5 {
        return Err(Error::NotOddCycle);
    }
    let n = g.order();
    let mut colours = vec![0usize; n];
    let mut prev = 0usize;
    let mut cur = g.neighbours_at(0).min().expect("cycle vertices have degree 2");
    for step in 1..n {
        colours[cur] = if step % 2 == 1 { 1 } else { 2 };
        let next = g
            .neighbours_at(cur)
            .find(|&x| x != prev)
            .expect("cycle vertices have degree 2");
        prev = cur;
        cur = next;
    }
    Ok(Colouring::from_positions(g, &colours))
}
