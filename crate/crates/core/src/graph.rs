//! Simple undirected graphs with dense adjacency, plus edge-list ingestion.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("node {node} out of range for graph with {n} nodes")]
    InvalidNode { node: usize, n: usize },
    #[error("common neighbourhood needs two distinct nodes, got {0} twice")]
    SameNode(usize),
    #[error("walk power must be at least 1")]
    ZeroPower,
    #[error("cannot classify graph: {0}")]
    Classification(String),
}

/// A simple, undirected, unweighted graph on nodes `0..n`.
///
/// The adjacency matrix is stored densely next to sorted neighbour lists so
/// formulas can ask both "is (i, j) an edge" and "who are i's neighbours"
/// in constant time per answer.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// An edgeless graph on `n` nodes.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adjacency: vec![false; n * n],
            neighbors: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph on nodes `0..n`. Duplicate edges collapse and self-loops
    /// are dropped.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(i, j) in edges {
            g.check_node(i)?;
            g.check_node(j)?;
            g.insert(i, j);
        }
        g.finish();
        Ok(g)
    }

    /// Builds a graph from a row-major 0/1 adjacency matrix. Only the upper
    /// triangle is read.
    pub fn from_adjacency(n: usize, rows: &[bool]) -> Self {
        assert_eq!(rows.len(), n * n, "adjacency must be n x n");
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in (i + 1)..n {
                if rows[i * n + j] {
                    g.insert(i, j);
                }
            }
        }
        g.finish();
        g
    }

    fn insert(&mut self, i: usize, j: usize) -> bool {
        if i == j || self.adjacency[i * self.n + j] {
            return false;
        }
        self.adjacency[i * self.n + j] = true;
        self.adjacency[j * self.n + i] = true;
        self.neighbors[i].push(j);
        self.neighbors[j].push(i);
        self.m += 1;
        true
    }

    fn finish(&mut self) {
        for list in &mut self.neighbors {
            list.sort_unstable();
        }
    }

    fn check_node(&self, i: usize) -> Result<(), GraphError> {
        if i < self.n {
            Ok(())
        } else {
            Err(GraphError::InvalidNode { node: i, n: self.n })
        }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i * self.n + j]
    }

    #[inline]
    pub fn degree(&self, i: usize) -> usize {
        self.neighbors[i].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Sorted neighbour list of `i`.
    #[inline]
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    /// Each undirected edge once, as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| {
            self.neighbors[i]
                .iter()
                .copied()
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    /// Edge density `2m / (n (n - 1))`, or `None` for fewer than two nodes.
    pub fn density(&self) -> Option<f64> {
        if self.n < 2 {
            return None;
        }
        Some(2.0 * self.m as f64 / (self.n as f64 * (self.n as f64 - 1.0)))
    }

    /// `S(i, j)`: nodes adjacent to both `i` and `j`, sorted.
    pub fn common_neighborhood(&self, i: usize, j: usize) -> Result<Vec<usize>, GraphError> {
        self.check_node(i)?;
        self.check_node(j)?;
        if i == j {
            return Err(GraphError::SameNode(i));
        }
        Ok(self.common_neighbors_unchecked(i, j))
    }

    pub(crate) fn common_neighbors_unchecked(&self, i: usize, j: usize) -> Vec<usize> {
        let (a, b) = (&self.neighbors[i], &self.neighbors[j]);
        let (mut x, mut y) = (0, 0);
        let mut out = Vec::new();
        while x < a.len() && y < b.len() {
            match a[x].cmp(&b[y]) {
                std::cmp::Ordering::Less => x += 1,
                std::cmp::Ordering::Greater => y += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[x]);
                    x += 1;
                    y += 1;
                }
            }
        }
        out
    }

    /// Induced subgraph on `nodes` (which must be distinct and in range).
    /// Node `nodes[t]` becomes node `t` of the result.
    pub fn induced(&self, nodes: &[usize]) -> Graph {
        let k = nodes.len();
        let mut sub = Graph::empty(k);
        for (s, &u) in nodes.iter().enumerate() {
            for (t, &v) in nodes.iter().enumerate().skip(s + 1) {
                if self.has_edge(u, v) {
                    sub.insert(s, t);
                }
            }
        }
        sub.finish();
        sub
    }

    /// The induced subgraph on `V \ {i}`. Nodes above `i` shift down by one.
    pub fn delete_node(&self, i: usize) -> Result<Graph, GraphError> {
        self.check_node(i)?;
        let keep: Vec<usize> = (0..self.n).filter(|&v| v != i).collect();
        Ok(self.induced(&keep))
    }

    /// The subgraph formed by the neighbourhood of `i` (the `g_{-i}` device).
    pub fn neighborhood_subgraph(&self, i: usize) -> Result<NeighborhoodView, GraphError> {
        self.check_node(i)?;
        Ok(self.neighborhood_unchecked(i))
    }

    pub(crate) fn neighborhood_unchecked(&self, i: usize) -> NeighborhoodView {
        let members = self.neighbors[i].clone();
        let subgraph = self.induced(&members);
        NeighborhoodView {
            center: i,
            members,
            subgraph,
        }
    }

    /// Applies a node relabelling: node `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (i, j) in self.edges() {
            g.insert(perm[i], perm[j]);
        }
        g.finish();
        g
    }

    /// Connectedness by breadth-first search. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.neighbors[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }

    /// Writes the canonical edge-list text: a `nodes N` header then one
    /// `i j` line per edge with `i < j`.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("nodes {}\n", self.n);
        for (i, j) in self.edges() {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// The neighbourhood of a node together with the subgraph it induces.
#[derive(Debug, Clone)]
pub struct NeighborhoodView {
    pub center: usize,
    /// Parent ids of the members, sorted; member `t` is node `t` of `subgraph`.
    pub members: Vec<usize>,
    pub subgraph: Graph,
}

/// A graph read from external node labels, with the normalisation tallies.
#[derive(Debug, Clone)]
pub struct Ingested {
    pub graph: Graph,
    /// `labels[v]` is the original id of compact node `v`.
    pub labels: Vec<u64>,
    pub duplicate_edges: usize,
    pub self_loops: usize,
}

/// Builds a simple graph from arbitrary non-negative node ids.
///
/// Ids are compacted to `0..n` in ascending order. Every id that appears,
/// including on a self-loop, becomes a node; `declared_nodes` adds the ids
/// `0..N` even when they carry no edge.
pub fn from_edge_list<I>(pairs: I, declared_nodes: Option<u64>) -> Ingested
where
    I: IntoIterator<Item = (u64, u64)>,
{
    let pairs: Vec<(u64, u64)> = pairs.into_iter().collect();
    let mut ids: BTreeSet<u64> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    if let Some(n) = declared_nodes {
        ids.extend(0..n);
    }
    let labels: Vec<u64> = ids.into_iter().collect();
    let index = |id: u64| labels.binary_search(&id).expect("id was collected");

    let mut graph = Graph::empty(labels.len());
    let mut duplicate_edges = 0;
    let mut self_loops = 0;
    for &(a, b) in &pairs {
        if a == b {
            self_loops += 1;
        } else if !graph.insert(index(a), index(b)) {
            duplicate_edges += 1;
        }
    }
    graph.finish();
    Ingested {
        graph,
        labels,
        duplicate_edges,
        self_loops,
    }
}

/// Parses the edge-list text format: one `i j` pair per line, `#` comments,
/// blank lines ignored, and an optional `nodes N` header.
pub fn parse_edge_list(text: &str) -> Result<Ingested, GraphError> {
    let mut pairs = Vec::new();
    let mut declared = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "nodes" {
            if declared.is_some() {
                return Err(parse_err(line_no, "repeated `nodes` header"));
            }
            if tokens.len() != 2 {
                return Err(parse_err(line_no, "`nodes` header takes exactly one count"));
            }
            declared = Some(parse_id(tokens[1], line_no)?);
            continue;
        }
        if tokens.len() != 2 {
            return Err(parse_err(
                line_no,
                &format!("expected two node ids, found {} tokens", tokens.len()),
            ));
        }
        pairs.push((parse_id(tokens[0], line_no)?, parse_id(tokens[1], line_no)?));
    }
    Ok(from_edge_list(pairs, declared))
}

fn parse_id(token: &str, line: usize) -> Result<u64, GraphError> {
    token
        .parse::<u64>()
        .map_err(|_| parse_err(line, &format!("`{token}` is not a non-negative integer")))
}

fn parse_err(line: usize, message: &str) -> GraphError {
    GraphError::Parse {
        line,
        message: message.to_string(),
    }
}
