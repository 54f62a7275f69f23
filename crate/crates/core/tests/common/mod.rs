//! Brute-force oracles and random graph helpers shared by the integration
//! tests. Nothing here goes through the crate's search, canonical form or
//! colouring code.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use ::folding::Multigraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Adjacency matrix of the underlying simple graph, vertices by position.
pub fn matrix(g: &Multigraph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut m = vec![vec![false; n]; n];
    for (u, v, _) in g.edges() {
        let (i, j) = (g.position(u).unwrap(), g.position(v).unwrap());
        m[i][j] = true;
        m[j][i] = true;
    }
    m
}

/// Smallest k admitting a proper k-colouring, by trying all k^n assignments.
pub fn brute_chromatic(g: &Multigraph) -> usize {
    let m = matrix(g);
    let n = m.len();
    for k in 1..=n {
        let mut colours = vec![0usize; n];
        loop {
            let proper = (0..n).all(|i| (i + 1..n).all(|j| !m[i][j] || colours[i] != colours[j]));
            if proper {
                return k;
            }
            let mut pos = 0;
            while pos < n {
                colours[pos] += 1;
                if colours[pos] < k {
                    break;
                }
                colours[pos] = 0;
                pos += 1;
            }
            if pos == n {
                break;
            }
        }
    }
    n
}

fn naive_identify(m: &[Vec<bool>], i: usize, j: usize) -> Vec<Vec<bool>> {
    let keep: Vec<usize> = (0..m.len()).filter(|&k| k != i && k != j).collect();
    let k = keep.len();
    let mut out = vec![vec![false; k + 1]; k + 1];
    for (a, &x) in keep.iter().enumerate() {
        for (b, &y) in keep.iter().enumerate() {
            out[a][b] = m[x][y];
        }
        let merged = m[i][x] || m[j][x];
        out[a][k] = merged;
        out[k][a] = merged;
    }
    out
}

fn naive_distance_two(m: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = m.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !m[i][j] && (0..n).any(|k| m[i][k] && m[k][j]) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Orders of every complete graph reachable by folding, by exhaustive
/// recursion over all pair choices (memoized on the labelled matrix only).
pub fn brute_complete_folding_orders(g: &Multigraph) -> BTreeSet<usize> {
    fn rec(m: Vec<Vec<bool>>, memo: &mut HashMap<Vec<Vec<bool>>, BTreeSet<usize>>) -> BTreeSet<usize> {
        if let Some(r) = memo.get(&m) {
            return r.clone();
        }
        let pairs = naive_distance_two(&m);
        let result = if pairs.is_empty() {
            BTreeSet::from([m.len()])
        } else {
            let mut all = BTreeSet::new();
            for (i, j) in pairs {
                all.extend(rec(naive_identify(&m, i, j), memo));
            }
            all
        };
        memo.insert(m, result.clone());
        result
    }
    rec(matrix(g), &mut HashMap::new())
}

/// Largest k with a K_k minor: tries every map from vertices to
/// `{deleted, block 0, ..., block n-1}`.
pub fn brute_hadwiger(g: &Multigraph) -> usize {
    let m = matrix(g);
    let n = m.len();
    let base = n + 1;
    let total = base.pow(n as u32);
    let mut best = 0;
    for code in 0..total {
        let mut c = code;
        let mut label = vec![0usize; n];
        for l in label.iter_mut() {
            *l = c % base;
            c /= base;
        }
        let blocks: Vec<Vec<usize>> = (1..base)
            .map(|b| (0..n).filter(|&v| label[v] == b).collect::<Vec<_>>())
            .filter(|b: &Vec<usize>| !b.is_empty())
            .collect();
        if blocks.len() <= best {
            continue;
        }
        let connected = blocks.iter().all(|b| {
            let mut seen = vec![b[0]];
            let mut idx = 0;
            while idx < seen.len() {
                let x = seen[idx];
                idx += 1;
                for &y in b {
                    if m[x][y] && !seen.contains(&y) {
                        seen.push(y);
                    }
                }
            }
            seen.len() == b.len()
        });
        let touching = (0..blocks.len()).all(|a| {
            (a + 1..blocks.len())
                .all(|b| blocks[a].iter().any(|&x| blocks[b].iter().any(|&y| m[x][y])))
        });
        if connected && touching {
            best = blocks.len();
        }
    }
    best
}

pub fn brute_connected(m: &[Vec<bool>]) -> bool {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for y in 0..n {
            if m[x][y] && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Number of connected labelled simple graphs on `n` vertices.
pub fn brute_labelled_connected(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .filter(|mask| {
            let mut m = vec![vec![false; n]; n];
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    m[i][j] = true;
                    m[j][i] = true;
                }
            }
            brute_connected(&m)
        })
        .count()
}

/// Isomorphism by trying all permutations.
pub fn brute_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    let (ma, mb) = (matrix(a), matrix(b));
    let n = ma.len();
    if n != mb.len() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if (0..n).all(|i| (0..n).all(|j| ma[i][j] == mb[perm[i]][perm[j]])) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Random connected graph: random spanning tree plus each other pair with
/// probability `p`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Multigraph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for i in 0..n {
        for j in i + 1..n {
            if !edges.contains(&(i, j)) && rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Multigraph::new(n, edges).unwrap()
}

/// Random connected bipartite graph: vertices get random sides (both
/// non-empty), a spanning tree alternates sides, and extra cross pairs are
/// added with probability `p`.
pub fn random_connected_bipartite(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Multigraph {
    assert!(n >= 2);
    let mut side: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
    side[0] = false;
    side[1] = true;
    let mut edges = Vec::new();
    let mut placed = vec![0usize, 1];
    edges.push((0, 1));
    for v in 2..n {
        let candidates: Vec<usize> = placed.iter().copied().filter(|&u| side[u] != side[v]).collect();
        let u = candidates[rng.random_range(0..candidates.len())];
        edges.push((u.min(v), u.max(v)));
        placed.push(v);
    }
    for i in 0..n {
        for j in i + 1..n {
            if side[i] != side[j] && !edges.contains(&(i, j)) && rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Multigraph::new(n, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn cycle(n: usize) -> Multigraph {
    Multigraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Multigraph {
    Multigraph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}
