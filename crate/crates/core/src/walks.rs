//! Walk counts: exact integer powers of the adjacency matrix.

use crate::graph::{Graph, GraphError};
use crate::par;

/// Entries of `g^k`: `entries[i][j]` is the number of walks of length `k`
/// from `i` to `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkTable {
    power: u32,
    n: usize,
    entries: Vec<i128>,
}

impl WalkTable {
    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i128] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn diagonal(&self) -> Vec<i128> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    pub fn trace(&self) -> i128 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Sum of all entries.
    pub fn total(&self) -> i128 {
        self.entries.iter().sum()
    }

    /// Sum of the entries off the diagonal.
    pub fn off_diagonal_total(&self) -> i128 {
        self.total() - self.trace()
    }

    /// One more step along the graph: `self * g`.
    pub fn step(&self, g: &Graph) -> WalkTable {
        let n = self.n;
        let rows = par::map(n, |i| {
            let src = self.row(i);
            (0..n)
                .map(|j| g.neighbors(j).iter().map(|&l| src[l]).sum::<i128>())
                .collect::<Vec<i128>>()
        });
        WalkTable {
            power: self.power + 1,
            n,
            entries: rows.concat(),
        }
    }

    fn adjacency(g: &Graph) -> WalkTable {
        let n = g.node_count();
        let mut entries = vec![0i128; n * n];
        for (i, j) in g.edges() {
            entries[i * n + j] = 1;
            entries[j * n + i] = 1;
        }
        WalkTable {
            power: 1,
            n,
            entries,
        }
    }
}

/// `g^k` for `k >= 1`.
pub fn walk_table(g: &Graph, k: u32) -> Result<WalkTable, GraphError> {
    if k == 0 {
        return Err(GraphError::ZeroPower);
    }
    let mut table = WalkTable::adjacency(g);
    for _ in 1..k {
        table = table.step(g);
    }
    Ok(table)
}

/// `tr(g^3)`, computed as the sum over ordered edges of `(g^2)_{ij}`.
pub(crate) fn trace_cubed(g: &Graph) -> i128 {
    par::sum(g.node_count(), |i| {
        g.neighbors(i)
            .iter()
            .map(|&j| g.common_neighbors_unchecked(i, j).len() as i128)
            .sum()
    })
}
