//! Non-induced counts of the eight connected graphlets on three and four nodes.

use std::ops::Index;

use crate::graph::{Graph, NeighborhoodView};
use crate::graphlet::SmallGraphlet;
use crate::math::{choose, exact_div};
use crate::par;
use crate::walks::{trace_cubed, walk_table, WalkTable};

/// Counts in the order 3-star, triangle, 4-star, 4-path, tadpole, 4-circle,
/// diamond, 4-complete.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SmallCounts([i128; 8]);

impl SmallCounts {
    pub fn from_array(values: [i128; 8]) -> Self {
        SmallCounts(values)
    }

    pub fn as_array(&self) -> &[i128; 8] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = (SmallGraphlet, i128)> + '_ {
        SmallGraphlet::ALL
            .iter()
            .map(move |&g| (g, self.0[g.index()]))
    }
}

impl Index<SmallGraphlet> for SmallCounts {
    type Output = i128;

    fn index(&self, g: SmallGraphlet) -> &i128 {
        &self.0[g.index()]
    }
}

/// Walk quantities every small-count formula reads.
pub(crate) struct WalkSummary {
    pub degree: Vec<i128>,
    pub g2: WalkTable,
    /// `(g^3)_{ii}`.
    pub closed3: Vec<i128>,
}

impl WalkSummary {
    pub fn new(g: &Graph) -> Self {
        let g2 = walk_table(g, 2).expect("power 2");
        Self::with_square(g, g2)
    }

    pub fn with_square(g: &Graph, g2: WalkTable) -> Self {
        let closed3 = (0..g.node_count())
            .map(|i| g.neighbors(i).iter().map(|&j| g2.get(i, j)).sum())
            .collect();
        WalkSummary {
            degree: g.degrees().into_iter().map(|k| k as i128).collect(),
            g2,
            closed3,
        }
    }
}

/// All eight counts for `g`.
pub fn count_small(g: &Graph) -> SmallCounts {
    if g.node_count() < 3 {
        return SmallCounts::default();
    }
    let walks = WalkSummary::new(g);
    let neighborhood_triangles = par::sum(g.node_count(), |i| {
        if g.degree(i) < 3 {
            0
        } else {
            trace_cubed(&g.neighborhood_unchecked(i).subgraph)
        }
    });
    small_from_parts(g, &walks, neighborhood_triangles)
}

/// The same counts restricted to a neighbourhood subgraph. Degrees are those
/// of the view itself, not of the parent graph.
pub fn count_small_in(view: &NeighborhoodView) -> SmallCounts {
    count_small(&view.subgraph)
}

/// `neighborhood_triangles` is `sum_i tr(g_{-i}^3)`.
pub(crate) fn small_from_parts(
    g: &Graph,
    walks: &WalkSummary,
    neighborhood_triangles: i128,
) -> SmallCounts {
    let n = g.node_count();
    let k = &walks.degree;
    let g2 = &walks.g2;
    let m = g.edge_count() as i128;

    let three_star: i128 = k.iter().map(|&d| choose(d, 2)).sum();
    let trace3: i128 = walks.closed3.iter().sum();
    let triangle = exact_div(trace3, 6, "tr(g^3)/6");
    let four_star: i128 = k.iter().map(|&d| choose(d, 3)).sum();

    let edge_degree_products: i128 = g.edges().map(|(i, j)| (k[i] - 1) * (k[j] - 1)).sum();
    let four_path = edge_degree_products - 3 * triangle;

    let tadpole_twice: i128 = (0..n)
        .filter(|&i| k[i] > 2)
        .map(|i| walks.closed3[i] * (k[i] - 2))
        .sum();
    let tadpole = exact_div(tadpole_twice, 2, "tadpole");

    let trace4: i128 = (0..n)
        .map(|i| g2.row(i).iter().map(|&w| w * w).sum::<i128>())
        .sum();
    let four_cycle = exact_div(trace4 - 4 * three_star - 2 * m, 8, "4-circle");

    let diamond_twice: i128 = (0..n)
        .flat_map(|i| g.neighbors(i).iter().map(move |&j| (i, j)))
        .map(|(i, j)| choose(g2.get(i, j), 2))
        .sum();
    let diamond = exact_div(diamond_twice, 2, "diamond");

    let four_clique = exact_div(neighborhood_triangles, 24, "4-complete");

    SmallCounts([
        three_star,
        triangle,
        four_star,
        four_path,
        tadpole,
        four_cycle,
        diamond,
        four_clique,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};
    use SmallGraphlet::*;

    #[test]
    fn complete_graph_closed_forms() {
        for n in 4..=9i128 {
            let c = count_small(&complete(n as usize));
            assert_eq!(c[ThreeStar], n * choose(n - 1, 2));
            assert_eq!(c[Triangle], choose(n, 3));
            assert_eq!(c[FourStar], n * choose(n - 1, 3));
            assert_eq!(c[FourPath], (n - 2) * (n - 3) * choose(n, 2));
            assert_eq!(c[Tadpole], (n - 2) * (n - 3) * choose(n, 2));
            assert_eq!(c[FourClique], choose(n, 4));
        }
    }

    #[test]
    fn path_graph() {
        for n in 5..=20i128 {
            let c = count_small(&path(n as usize));
            assert_eq!(c[ThreeStar], n - 2);
            assert_eq!(c[FourPath], n - 3);
            assert_eq!(c[Triangle], 0);
            assert_eq!(c[FourStar], 0);
            assert_eq!(c[Tadpole], 0);
        }
    }

    #[test]
    fn k4_view() {
        let view = complete(5).neighborhood_subgraph(0).unwrap();
        let c = count_small_in(&view);
        assert_eq!(c[FourClique], 1);
        assert_eq!(c[FourCycle], 3);
        assert_eq!(c[Diamond], 6);
    }

    #[test]
    fn edgeless_and_tiny() {
        assert_eq!(count_small(&Graph::empty(6)), SmallCounts::default());
        assert_eq!(count_small(&Graph::empty(0)), SmallCounts::default());
        assert_eq!(count_small(&path(2)), SmallCounts::default());
    }

    #[test]
    fn four_cycle_view() {
        let c = count_small(&cycle(4));
        assert_eq!(c[FourCycle], 1);
        assert_eq!(c[Triangle], 0);
        assert_eq!(c[FourPath], 4);
    }
}
