use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub(crate) const MAX_BIT_ORDER: usize = 64;

/// Simple graph on positions `0..n` with one `u64` neighbour mask per vertex.
///
/// Positions line up with [`Multigraph::vertices`] for the graph it was built
/// from, and [`BitGraph::identify`] keeps that alignment with
/// [`Multigraph::identify`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct BitGraph {
    rows: Vec<u64>,
}

#[inline]
fn bit(i: usize) -> u64 {
    1u64 << i
}

impl BitGraph {
    pub fn from_multigraph(g: &Multigraph) -> Result<Self> {
        let n = g.order();
        if n > MAX_BIT_ORDER {
            return Err(Error::TooLarge {
                order: n,
                max: MAX_BIT_ORDER,
            });
        }
        let rows = (0..n)
            .map(|i| g.neighbours_at(i).fold(0u64, |acc, j| acc | bit(j)))
            .collect();
        Ok(BitGraph { rows })
    }

    /// Builds a graph from an edge bitmask over the pairs `(i, j)`, `i < j`,
    /// listed in column-major order `(0,1), (0,2), (1,2), (0,3), ...`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
                k += 1;
            }
        }
        BitGraph { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> u64 {
        self.rows[i]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i] & bit(j) != 0
    }

    fn all(&self) -> u64 {
        if self.order() == 64 {
            u64::MAX
        } else {
            bit(self.order()) - 1
        }
    }

    pub fn is_complete(&self) -> bool {
        let all = self.all();
        self.rows
            .iter()
            .enumerate()
            .all(|(i, &r)| r | bit(i) == all)
    }

    pub fn is_connected(&self) -> bool {
        if self.rows.is_empty() {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let i = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[i];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.all()
    }

    /// Vertices at distance exactly 2 from `i`.
    pub fn second_neighbourhood(&self, i: usize) -> u64 {
        let mut reach = 0u64;
        let mut nb = self.rows[i];
        while nb != 0 {
            let k = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            reach |= self.rows[k];
        }
        reach & !self.rows[i] & !bit(i)
    }

    /// Pairs `(i, j)`, `i < j`, at distance 2, in lexicographic order.
    pub fn distance2_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.order() {
            let above = u64::MAX.checked_shl(i as u32 + 1).unwrap_or(0);
            let mut later = self.second_neighbourhood(i) & above;
            while later != 0 {
                let j = later.trailing_zeros() as usize;
                later &= later - 1;
                out.push((i, j));
            }
        }
        out
    }

    /// Merges positions `i` and `j`; the merged vertex is appended last and
    /// the remaining vertices keep their relative order.
    pub fn identify(&self, i: usize, j: usize) -> BitGraph {
        let n = self.order();
        let keep: Vec<usize> = (0..n).filter(|&k| k != i && k != j).collect();
        let m = keep.len();
        let merged_row = (self.rows[i] | self.rows[j]) & !bit(i) & !bit(j);
        let mut rows = vec![0u64; m + 1];
        for (a, &x) in keep.iter().enumerate() {
            let old = self.rows[x];
            let mut r = 0u64;
            for (b, &y) in keep.iter().enumerate() {
                if old & bit(y) != 0 {
                    r |= bit(b);
                }
            }
            if merged_row & bit(x) != 0 {
                r |= bit(m);
                rows[m] |= bit(a);
            }
            rows[a] = r;
        }
        BitGraph { rows }
    }

    pub fn induced_connected(&self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        let start = set & set.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let k = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.rows[k] & set & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == set
    }

    /// Union of the neighbourhoods of every vertex in `set`.
    pub fn neighbourhood_of(&self, set: u64) -> u64 {
        let mut s = set;
        let mut out = 0u64;
        while s != 0 {
            let k = s.trailing_zeros() as usize;
            s &= s - 1;
            out |= self.rows[k];
        }
        out
    }
}
