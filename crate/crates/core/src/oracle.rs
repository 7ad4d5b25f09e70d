//! Brute-force ground truth for every count in the crate.
//!
//! Non-induced counts come from enumerating injective, edge-preserving maps
//! of a pattern into the host graph and dividing by the pattern's
//! automorphism count. Induced counts come from classifying every 5-node
//! subset. Nothing here calls the closed-form counters: the oracle shares
//! only [`Graph`] and the canonical-code machinery with them.
//!
//! Enumeration order is fixed: host nodes ascending for each pattern node in
//! breadth-first order from pattern node 0, and node subsets in lexicographic
//! order. Reductions are integer sums, so results never depend on threading.

use std::sync::OnceLock;

use itertools::Itertools;
use thiserror::Error;

use crate::five::FiveCounts;
use crate::graph::Graph;
use crate::graphlet::{canonical_id, FiveGraphlet, GraphletId, SixGraphlet, SmallGraphlet};
use crate::induced::InducedFiveCounts;
use crate::par;
use crate::small::SmallCounts;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{id} is not in the graphlet catalog")]
    UnknownGraphlet { id: GraphletId },
    #[error("exhaustive search for {b}-node patterns is limited to {limit} host nodes, got {n}")]
    TooLarge { b: usize, n: usize, limit: usize },
    #[error("automorphisms are only counted for connected graphs on at most 6 nodes")]
    UnsupportedPattern,
}

/// Largest host graph the oracle will search for a pattern on `b` nodes.
pub fn size_limit(b: usize) -> usize {
    match b {
        0..=4 => 40,
        5 => 14,
        _ => 12,
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: GraphletId,
    pub name: &'static str,
    pub graph: Graph,
    pub automorphisms: u64,
}

/// Reference graphs for the 8 small, 21 five-node and 2 six-node graphlets.
#[derive(Debug)]
pub struct GraphletCatalog {
    entries: Vec<CatalogEntry>,
}

impl GraphletCatalog {
    fn build() -> Self {
        let mut entries = Vec::new();
        let mut push = |id: GraphletId, name: &'static str, graph: Graph| {
            let automorphisms = automorphism_count(&graph).expect("catalog graphs are connected");
            entries.push(CatalogEntry {
                id,
                name,
                graph,
                automorphisms,
            });
        };
        for &g in SmallGraphlet::ALL {
            push(g.id(), g.name(), g.graph());
        }
        for &g in FiveGraphlet::ALL {
            push(g.id(), g.name(), g.graph());
        }
        for &g in SixGraphlet::ALL {
            push(g.id(), g.name(), g.graph());
        }
        GraphletCatalog { entries }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, id: GraphletId) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

pub fn catalog() -> &'static GraphletCatalog {
    static CATALOG: OnceLock<GraphletCatalog> = OnceLock::new();
    CATALOG.get_or_init(GraphletCatalog::build)
}

/// Number of node permutations of `h` that preserve adjacency.
pub fn automorphism_count(h: &Graph) -> Result<u64, OracleError> {
    let b = h.node_count();
    if b == 0 || b > 6 || !h.is_connected() {
        return Err(OracleError::UnsupportedPattern);
    }
    let edges: Vec<(usize, usize)> = h.edges().collect();
    Ok((0..b)
        .permutations(b)
        .filter(|p| edges.iter().all(|&(i, j)| h.has_edge(p[i], p[j])))
        .count() as u64)
}

/// Pattern nodes in breadth-first order, each with the earlier pattern nodes
/// it must be adjacent to.
struct SearchPlan {
    order: Vec<usize>,
    back_edges: Vec<Vec<usize>>,
}

impl SearchPlan {
    fn new(h: &Graph) -> Self {
        let b = h.node_count();
        let mut order = vec![0];
        let mut seen = vec![false; b];
        seen[0] = true;
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &v in h.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
        }
        let back_edges = (0..order.len())
            .map(|t| (0..t).filter(|&s| h.has_edge(order[s], order[t])).collect())
            .collect();
        SearchPlan { order, back_edges }
    }
}

/// Injective maps from pattern `h` into `g` that send every edge to an edge.
pub fn count_embeddings(g: &Graph, h: &Graph) -> i128 {
    let b = h.node_count();
    if b == 0 || b > g.node_count() {
        return 0;
    }
    let plan = SearchPlan::new(h);
    par::sum(g.node_count(), |first| {
        let mut image = vec![first];
        let mut used = vec![false; g.node_count()];
        used[first] = true;
        extend(g, &plan, &mut image, &mut used)
    })
}

fn extend(g: &Graph, plan: &SearchPlan, image: &mut Vec<usize>, used: &mut [bool]) -> i128 {
    let t = image.len();
    if t == plan.order.len() {
        return 1;
    }
    let back = &plan.back_edges[t];
    // Connected pattern in BFS order: every later node has an earlier neighbour.
    let anchor = image[back[0]];
    let mut total = 0;
    for &v in g.neighbors(anchor) {
        if used[v] || !back[1..].iter().all(|&s| g.has_edge(image[s], v)) {
            continue;
        }
        used[v] = true;
        image.push(v);
        total += extend(g, plan, image, used);
        image.pop();
        used[v] = false;
    }
    total
}

/// Non-induced count of catalog graphlet `id` in `g`.
pub fn oracle_noninduced(g: &Graph, id: GraphletId) -> Result<i128, OracleError> {
    let entry = catalog()
        .get(id)
        .ok_or(OracleError::UnknownGraphlet { id })?;
    let b = id.b as usize;
    let limit = size_limit(b);
    if g.node_count() > limit {
        return Err(OracleError::TooLarge {
            b,
            n: g.node_count(),
            limit,
        });
    }
    let maps = count_embeddings(g, &entry.graph);
    let aut = entry.automorphisms as i128;
    assert_eq!(
        maps % aut,
        0,
        "{id}: {maps} embeddings not divisible by {aut}"
    );
    Ok(maps / aut)
}

pub fn oracle_small(g: &Graph) -> Result<SmallCounts, OracleError> {
    let mut out = [0i128; 8];
    for (slot, g_small) in out.iter_mut().zip(SmallGraphlet::ALL) {
        *slot = oracle_noninduced(g, g_small.id())?;
    }
    Ok(SmallCounts::from_array(out))
}

pub fn oracle_five(g: &Graph) -> Result<FiveCounts, OracleError> {
    let mut out = [0i128; 21];
    for (slot, g5) in out.iter_mut().zip(FiveGraphlet::ALL) {
        *slot = oracle_noninduced(g, g5.id())?;
    }
    Ok(FiveCounts::from_array(out))
}

/// Induced five-node counts by classifying every connected 5-node subset.
pub fn oracle_induced(g: &Graph) -> Result<InducedFiveCounts, OracleError> {
    let n = g.node_count();
    let limit = size_limit(5);
    if n > limit {
        return Err(OracleError::TooLarge { b: 5, n, limit });
    }
    // Subsets grouped by their smallest node.
    let per_first = par::map(n, |first| {
        let mut tally = [0i128; 21];
        for rest in ((first + 1)..n).combinations(4) {
            let nodes = [first, rest[0], rest[1], rest[2], rest[3]];
            let sub = g.induced(&nodes);
            if !sub.is_connected() {
                continue;
            }
            let id = canonical_id(&sub).expect("connected five-node subgraph");
            let slot =
                FiveGraphlet::from_code(id.a).expect("every connected 5-node graph is catalogued");
            tally[slot.index()] += 1;
        }
        tally
    });
    let mut total = [0i128; 21];
    for tally in per_first {
        for (acc, v) in total.iter_mut().zip(tally) {
            *acc += v;
        }
    }
    Ok(InducedFiveCounts::from_array(total))
}
