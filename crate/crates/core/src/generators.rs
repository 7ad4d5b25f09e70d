//! Constructors for the special graph families used as test beds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq)]
pub enum GeneratorError {
    #[error("ring lattice needs n > 2k, got n={n}, k={k}")]
    RingTooSmall { n: usize, k: usize },
    #[error("ring lattice needs k >= 1")]
    RingZeroNeighbors,
    #[error("N-partite graph needs at least 2 groups, got {0}")]
    TooFewGroups(usize),
    #[error("N-partite group sizes must be positive")]
    EmptyGroup,
    #[error("edge probability must lie in [0, 1], got {0}")]
    BadProbability(f64),
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    Graph::from_edges(n, &edges).expect("in range")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("in range")
}

/// Cycle on `n >= 3` nodes; smaller `n` gives a path.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 3 {
        edges.push((n - 1, 0));
    }
    Graph::from_edges(n, &edges).expect("in range")
}

/// Star on `n` nodes with centre 0.
pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::from_edges(n, &edges).expect("in range")
}

/// Ring lattice: node `i` is adjacent to the `k` nearest nodes on each side.
pub fn ring_lattice(n: usize, k: usize) -> Result<Graph, GeneratorError> {
    if k == 0 {
        return Err(GeneratorError::RingZeroNeighbors);
    }
    if n <= 2 * k {
        return Err(GeneratorError::RingTooSmall { n, k });
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (1..=k).map(move |d| (i, (i + d) % n)))
        .collect();
    Ok(Graph::from_edges(n, &edges).expect("in range"))
}

/// Complete multipartite graph: groups of the given sizes, every pair of
/// nodes in different groups adjacent, no edges inside a group. Group `c`
/// occupies a contiguous block of node ids.
pub fn n_partite(sizes: &[usize]) -> Result<Graph, GeneratorError> {
    if sizes.len() < 2 {
        return Err(GeneratorError::TooFewGroups(sizes.len()));
    }
    if sizes.contains(&0) {
        return Err(GeneratorError::EmptyGroup);
    }
    let group: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(c, &s)| std::iter::repeat_n(c, s))
        .collect();
    let n = group.len();
    let edges: Vec<_> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .filter(|&(i, j)| group[i] != group[j])
        .collect();
    Ok(Graph::from_edges(n, &edges).expect("in range"))
}

/// `G(n, p)` drawn from a caller-supplied generator: one Bernoulli trial per
/// pair `(i, j)`, `i < j`, in lexicographic order.
pub fn erdos_renyi_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph, GeneratorError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GeneratorError::BadProbability(p));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("in range"))
}

/// `G(n, p)` from a ChaCha8 stream seeded with `seed`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    erdos_renyi_with(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
}
