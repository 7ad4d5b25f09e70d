//! Exact non-induced counts of the 21 connected five-node graphlets.
//!
//! Every count is a closed form in node degrees, walk counts `(g^k)_{ij}`,
//! neighbourhood subgraphs `g_{-i}` and the smaller graphlet counts. Sums
//! written over ordered edges visit each edge in both directions; sums over
//! edges visit each undirected edge once.
//!
//! Also here: an alternative chevron count, three published 5-path
//! formulations (one correct, two not) kept as references, and two six-node
//! counts built from the same techniques.

use std::ops::{Index, IndexMut};

use crate::graph::Graph;
use crate::graphlet::{FiveGraphlet, SmallGraphlet};
use crate::math::{choose, exact_div};
use crate::par;
use crate::small::{count_small, small_from_parts, SmallCounts, WalkSummary};
use crate::walks::WalkTable;

/// Counts indexed by [`FiveGraphlet`], in ascending canonical-code order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct FiveCounts([i128; 21]);

impl FiveCounts {
    pub fn from_array(values: [i128; 21]) -> Self {
        FiveCounts(values)
    }

    pub fn as_array(&self) -> &[i128; 21] {
        &self.0
    }

    /// Count for canonical code `a`, if `a` names a five-node graphlet.
    pub fn get_code(&self, a: u32) -> Option<i128> {
        FiveGraphlet::from_code(a).map(|g| self[g])
    }

    pub fn iter(&self) -> impl Iterator<Item = (FiveGraphlet, i128)> + '_ {
        FiveGraphlet::ALL
            .iter()
            .map(move |&g| (g, self.0[g.index()]))
    }
}

impl Index<FiveGraphlet> for FiveCounts {
    type Output = i128;

    fn index(&self, g: FiveGraphlet) -> &i128 {
        &self.0[g.index()]
    }
}

impl IndexMut<FiveGraphlet> for FiveCounts {
    fn index_mut(&mut self, g: FiveGraphlet) -> &mut i128 {
        &mut self.0[g.index()]
    }
}

/// Everything the formulas share, computed once per graph.
struct Prepared<'a> {
    g: &'a Graph,
    walks: WalkSummary,
    g3: WalkTable,
    small: SmallCounts,
    /// Small counts inside `g_{-i}`; zero for nodes of degree below 3.
    views: Vec<SmallCounts>,
}

impl<'a> Prepared<'a> {
    fn new(g: &'a Graph) -> Self {
        let walks = WalkSummary::new(g);
        let g3 = walks.g2.step(g);
        let views = par::map(g.node_count(), |i| {
            if g.degree(i) < 3 {
                SmallCounts::default()
            } else {
                count_small(&g.neighborhood_unchecked(i).subgraph)
            }
        });
        let neighborhood_triangles: i128 =
            views.iter().map(|v| 6 * v[SmallGraphlet::Triangle]).sum();
        let small = small_from_parts(g, &walks, neighborhood_triangles);
        Prepared {
            g,
            walks,
            g3,
            small,
            views,
        }
    }

    fn n(&self) -> usize {
        self.g.node_count()
    }

    fn k(&self, i: usize) -> i128 {
        self.walks.degree[i]
    }

    fn g2(&self, i: usize, j: usize) -> i128 {
        self.walks.g2.get(i, j)
    }

    /// Sum of `f(i, j)` over ordered edges `(i, j)*`.
    fn over_ordered_edges(&self, f: impl Fn(usize, usize) -> i128 + Sync + Send) -> i128 {
        par::sum(self.n(), |i| {
            self.g.neighbors(i).iter().map(|&j| f(i, j)).sum()
        })
    }

    /// Sum of `f(i, j)` over each undirected edge once, `i < j`.
    fn over_edges(&self, f: impl Fn(usize, usize) -> i128 + Sync + Send) -> i128 {
        par::sum(self.n(), |i| {
            self.g
                .neighbors(i)
                .iter()
                .filter(|&&j| j > i)
                .map(|&j| f(i, j))
                .sum()
        })
    }

    /// Sum of `f(i, j)` over ordered pairs of distinct nodes.
    fn over_distinct_pairs(&self, f: impl Fn(usize, usize) -> i128 + Sync + Send) -> i128 {
        let n = self.n();
        par::sum(n, |i| (0..n).filter(|&j| j != i).map(|j| f(i, j)).sum())
    }

    fn over_nodes(&self, f: impl Fn(usize) -> i128 + Sync + Send) -> i128 {
        par::sum(self.n(), f)
    }

    fn s(&self, g: SmallGraphlet) -> i128 {
        self.small[g]
    }

    fn counts(&self) -> FiveCounts {
        use FiveGraphlet as F;
        use SmallGraphlet as S;

        let closed3 = &self.walks.closed3;
        let mut c = FiveCounts::default();

        c[F::Star] = self.over_nodes(|i| choose(self.k(i), 4));

        c[F::Arrow] = self.over_ordered_edges(|i, j| {
            if self.k(i) > 2 {
                choose(self.k(i) - 1, 2) * (self.k(j) - 1)
            } else {
                0
            }
        }) - 2 * self.s(S::Tadpole);

        c[F::Cricket] = exact_div(
            self.over_nodes(|i| {
                if self.k(i) > 3 {
                    closed3[i] * choose(self.k(i) - 2, 2)
                } else {
                    0
                }
            }),
            2,
            "cricket",
        );

        c[F::Path] = exact_div(self.off_diagonal_fourth_power(), 2, "5-path walks")
            - 2 * self.s(S::ThreeStar)
            - 9 * self.s(S::Triangle)
            - 3 * self.s(S::FourStar)
            - 2 * self.s(S::FourPath)
            - 2 * self.s(S::Tadpole);

        c[F::Bull] = self.over_edges(|i, j| {
            if self.k(i) > 2 && self.k(j) > 2 {
                self.g2(i, j) * (self.k(i) - 2) * (self.k(j) - 2)
            } else {
                0
            }
        }) - 2 * self.s(S::Diamond);

        c[F::Banner] = self.over_distinct_pairs(|i, j| {
            if self.k(i) > 2 {
                choose(self.g2(i, j), 2) * (self.k(i) - 2)
            } else {
                0
            }
        }) - 2 * self.s(S::Diamond);

        c[F::Stingray] = self.over_ordered_edges(|i, j| {
            if self.k(i) > 3 {
                choose(self.g2(i, j), 2) * (self.k(i) - 3)
            } else {
                0
            }
        });

        c[F::Lollipop] = exact_div(
            self.over_ordered_edges(|i, j| closed3[i] * (self.k(j) - 1)),
            2,
            "lollipop",
        ) - 6 * self.s(S::Triangle)
            - 2 * self.s(S::Tadpole)
            - 4 * self.s(S::Diamond);

        c[F::SpinningTop] = self.over_edges(|i, j| {
            if self.k(i) > 2 && self.k(j) > 2 {
                let common = self.g.common_neighbors_unchecked(i, j);
                let tails: i128 = common
                    .iter()
                    .filter(|&&r| self.k(r) >= 2)
                    .map(|&r| self.k(r) - 2)
                    .sum();
                (self.g2(i, j) - 1) * tails
            } else {
                0
            }
        }) - 12 * self.s(S::FourClique);

        // (1/6) tr(g_{-i}^3) is the triangle count of g_{-i}.
        c[F::Kite] = self.over_nodes(|i| {
            if self.k(i) > 3 {
                self.views[i][S::Triangle] * (self.k(i) - 3)
            } else {
                0
            }
        });

        c[F::Ufo] = exact_div(
            self.over_distinct_pairs(|i, j| {
                if self.k(i) > 2 && self.k(j) > 2 {
                    choose(self.g2(i, j), 3)
                } else {
                    0
                }
            }),
            2,
            "ufo",
        );

        c[F::Chevron] = exact_div(
            self.over_ordered_edges(|i, j| {
                if self.k(i) > 3 && self.k(j) > 3 {
                    choose(self.g2(i, j), 3)
                } else {
                    0
                }
            }),
            2,
            "chevron",
        );

        c[F::Hourglass] = self.over_nodes(|i| {
            if self.k(i) > 2 {
                choose(exact_div(closed3[i], 2, "triangles at a node"), 2)
            } else {
                0
            }
        }) - 2 * self.s(S::Diamond);

        c[F::Circle] = exact_div(
            self.trace_fifth_power() - 30 * self.s(S::Triangle) - 10 * self.s(S::Tadpole),
            10,
            "5-circle",
        );

        c[F::House] = self.over_edges(|i, j| self.g3.get(i, j) * self.g2(i, j))
            - 9 * self.s(S::Triangle)
            - 2 * self.s(S::Tadpole)
            - 4 * self.s(S::Diamond);

        c[F::Crown] = self.neighborhood_sum(S::FourPath);

        c[F::Envelope] = self.over_edges(|i, j| {
            if self.k(i) <= 2 || self.k(j) <= 2 {
                return 0;
            }
            let common: Vec<usize> = self
                .g
                .common_neighbors_unchecked(i, j)
                .into_iter()
                .filter(|&r| self.k(r) > 2)
                .collect();
            let mut total = 0;
            for (s, &r) in common.iter().enumerate() {
                for &q in &common[s + 1..] {
                    total += self.g2(r, q) - 2;
                }
            }
            total
        });

        c[F::Lamp] = exact_div(self.neighborhood_sum(S::Tadpole), 2, "lamp");
        c[F::Arrowhead] = self.neighborhood_sum(S::FourCycle);
        c[F::CatsCradle] = exact_div(self.neighborhood_sum(S::Diamond), 3, "cat's cradle");
        c[F::Complete] = exact_div(self.neighborhood_sum(S::FourClique), 5, "5-complete");

        c
    }

    /// `sum_{i : k_i > 3} |M(g_{-i})|` for a small graphlet `M`.
    fn neighborhood_sum(&self, which: SmallGraphlet) -> i128 {
        (0..self.n())
            .filter(|&i| self.k(i) > 3)
            .map(|i| self.views[i][which])
            .sum()
    }

    /// `sum_{i != j} (g^4)_{ij}`. With `g^4 = g^2 g^2` symmetric, the full sum
    /// is the squared norm of the row sums of `g^2` and the trace is the
    /// squared norm of its entries.
    fn off_diagonal_fourth_power(&self) -> i128 {
        let g2 = &self.walks.g2;
        let n = self.n();
        let total: i128 = par::sum(n, |l| {
            let s: i128 = g2.row(l).iter().sum();
            s * s
        });
        let trace: i128 = par::sum(n, |i| g2.row(i).iter().map(|&w| w * w).sum());
        total - trace
    }

    /// `tr(g^5) = sum_{ij} (g^2)_{ij} (g^3)_{ij}`.
    fn trace_fifth_power(&self) -> i128 {
        let n = self.n();
        par::sum(n, |i| {
            self.walks
                .g2
                .row(i)
                .iter()
                .zip(self.g3.row(i))
                .map(|(a, b)| a * b)
                .sum()
        })
    }
}

/// All 21 non-induced five-node counts of `g`.
pub fn count_five(g: &Graph) -> FiveCounts {
    if g.node_count() < 5 {
        return FiveCounts::default();
    }
    Prepared::new(g).counts()
}

/// Five-node counts together with the three- and four-node counts they use.
pub fn count_five_with_small(g: &Graph) -> (FiveCounts, SmallCounts) {
    if g.node_count() < 5 {
        return (FiveCounts::default(), count_small(g));
    }
    let prepared = Prepared::new(g);
    (prepared.counts(), prepared.small)
}

/// Chevrons counted as 4-stars inside neighbourhoods: each chevron has two
/// degree-4 nodes, and in the neighbourhood of either one the other is the
/// centre of a 4-star. Degrees here are taken inside `g_{-i}`.
pub fn count_chevron_neighborhood(g: &Graph) -> i128 {
    let twice = par::sum(g.node_count(), |i| {
        if g.degree(i) <= 3 {
            return 0;
        }
        let view = g.neighborhood_unchecked(i).subgraph;
        (0..view.node_count())
            .map(|r| view.degree(r) as i128)
            .filter(|&kr| kr >= 3)
            .map(|kr| choose(kr, 3))
            .sum()
    });
    exact_div(twice, 2, "chevron (neighbourhood form)")
}

/// The walk-based 5-path count with explicit pair corrections (a correct
/// published variant). Returns half of
/// `sum_{i != j} [(g^4)_{ij} - 2 (g^2)_{ij} (k_j - g_{ij})] - sum_i [(2 k_i - 1)(g^3)_{ii} + 6 C(k_i, 3)]`.
pub fn five_path_formulation1(g: &Graph) -> i128 {
    let n = g.node_count();
    if n == 0 {
        return 0;
    }
    let walks = WalkSummary::new(g);
    let g4 = walks.g2.step(g).step(g);
    let k = &walks.degree;
    let pair_sum = par::sum(n, |i| {
        (0..n)
            .filter(|&j| j != i)
            .map(|j| g4.get(i, j) - 2 * walks.g2.get(i, j) * (k[j] - g.has_edge(i, j) as i128))
            .sum()
    });
    let node_sum: i128 = (0..n)
        .map(|i| (2 * k[i] - 1) * walks.closed3[i] + 6 * choose(k[i], 3))
        .sum();
    exact_div(pair_sum - node_sum, 2, "formulation 1")
}

/// A published 5-path count written as a combination of smaller counts.
/// Agrees with the true count only when the graph has no 4-stars and no
/// tadpoles.
pub fn five_path_formulation2(g: &Graph) -> i128 {
    use SmallGraphlet as S;
    let n = g.node_count();
    if n == 0 {
        return 0;
    }
    let g2 = walk_table_square(g);
    let all_walks: i128 = (0..n)
        .map(|l| {
            let s: i128 = g2.row(l).iter().sum();
            s * s
        })
        .sum();
    let c = count_small(g);
    exact_div(all_walks, 2, "formulation 2")
        - g.edge_count() as i128
        - 4 * c[S::ThreeStar]
        - 9 * c[S::Triangle]
        - 6 * c[S::FourStar]
        - 2 * c[S::FourPath]
        - 4 * c[S::Tadpole]
        - 4 * c[S::FourCycle]
}

/// A published 5-path count built from edge degree sums. Wrong in general:
/// on a path with `n >= 5` nodes it returns `2n - 4` instead of `n - 4`.
pub fn five_path_formulation3(g: &Graph) -> i128 {
    use SmallGraphlet as S;
    let c = count_small(g);
    let edge_sum: i128 = g
        .edges()
        .map(|(i, j)| g.degree(i) as i128 + g.degree(j) as i128 - 2)
        .sum();
    edge_sum - 3 * c[S::Triangle] - 2 * c[S::Tadpole] - 4 * c[S::FourCycle]
}

fn walk_table_square(g: &Graph) -> WalkTable {
    crate::walks::walk_table(g, 2).expect("power 2")
}

/// A house plus one apex node adjacent to all five house nodes, counted as
/// houses inside neighbourhoods of nodes with degree above 4.
pub fn count_m7919_six(g: &Graph) -> i128 {
    par::sum(g.node_count(), |i| {
        if g.degree(i) > 4 {
            count_five(&g.neighborhood_unchecked(i).subgraph)[FiveGraphlet::House]
        } else {
            0
        }
    })
}

/// A 4-cycle with one pendant on each of two opposite nodes.
pub fn count_m1182_six(g: &Graph) -> i128 {
    let n = g.node_count();
    if n < 6 {
        return 0;
    }
    let (five, small) = count_five_with_small(g);
    let g2 = walk_table_square(g);
    let k: Vec<i128> = g.degrees().into_iter().map(|d| d as i128).collect();
    let candidates = par::sum(n, |i| {
        if k[i] <= 2 {
            return 0;
        }
        (0..n)
            .filter(|&j| j != i && k[j] > 2)
            .map(|j| choose(g2.get(i, j), 2) * (k[i] - 2) * (k[j] - 2))
            .sum()
    });
    exact_div(candidates, 2, "M1182")
        - small[SmallGraphlet::Diamond]
        - five[FiveGraphlet::Stingray]
        - 3 * five[FiveGraphlet::Ufo]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};
    use crate::walks::walk_table;
    use FiveGraphlet as F;

    #[test]
    fn k5_entries() {
        let c = count_five(&complete(5));
        assert_eq!(c[F::Complete], 1);
        assert_eq!(c[F::Star], 5);
        assert_eq!(c[F::Cricket], 30);
        assert_eq!(c[F::CatsCradle], 10);
        assert_eq!(c[F::Path], 60);
    }

    #[test]
    fn paths_have_only_five_paths() {
        for n in 5..=15 {
            let c = count_five(&path(n));
            for (g, v) in c.iter() {
                let want = if g == F::Path { n as i128 - 4 } else { 0 };
                assert_eq!(v, want, "{g} on path({n})");
            }
        }
    }

    #[test]
    fn complete_graph_five_paths() {
        for n in 5..=10 {
            assert_eq!(count_five(&complete(n))[F::Path], 60 * choose(n as i128, 5));
        }
    }

    #[test]
    fn five_cycle() {
        let c = count_five(&cycle(5));
        for (g, v) in c.iter() {
            let want = match g {
                F::Circle => 1,
                F::Path => 5,
                _ => 0,
            };
            assert_eq!(v, want, "{g}");
        }
    }

    #[test]
    fn small_graphs_are_zero() {
        assert_eq!(count_five(&complete(4)), FiveCounts::default());
        assert_eq!(count_five(&Graph::empty(0)), FiveCounts::default());
    }

    #[test]
    fn chevron_alternative() {
        let k5 = complete(5);
        assert_eq!(count_chevron_neighborhood(&k5), count_five(&k5)[F::Chevron]);
        assert_eq!(count_chevron_neighborhood(&cycle(9)), 0);
        assert_eq!(
            count_chevron_neighborhood(&crate::generators::ring_lattice(12, 1).unwrap()),
            0
        );
    }

    #[test]
    fn five_path_formulations() {
        assert_eq!(five_path_formulation1(&path(7)), 3);
        assert_eq!(five_path_formulation1(&complete(5)), 60);
        assert_eq!(five_path_formulation3(&path(5)), 6);
        for n in 6..=12 {
            let c = cycle(n);
            assert_eq!(five_path_formulation2(&c), count_five(&c)[F::Path]);
        }
        assert_ne!(five_path_formulation2(&complete(5)), 60);
    }

    #[test]
    fn six_node_guards() {
        assert_eq!(
            count_m7919_six(&crate::generators::ring_lattice(11, 2).unwrap()),
            0
        );
        assert_eq!(count_m7919_six(&star(5)), 0);
        assert_eq!(count_m1182_six(&complete(5)), 0);
    }

    /// Counting spinning tops by pairing two triangles on an edge with
    /// 4-walks from it sweeps in many other shapes: on K5 it reports far more
    /// than the true count.
    #[test]
    fn walk_based_spinning_top_overcounts() {
        for g in [
            complete(5),
            complete(6),
            crate::generators::ring_lattice(13, 3).unwrap(),
        ] {
            let g2 = walk_table(&g, 2).unwrap();
            let g4 = walk_table(&g, 4).unwrap();
            let naive: i128 = g
                .edges()
                .map(|(i, j)| choose(g2.get(i, j), 2) * g4.get(i, j))
                .sum();
            let truth = count_five(&g)[F::SpinningTop];
            assert!(naive > truth, "naive {naive} vs true {truth}");
        }
    }

    #[test]
    fn fifth_power_trace_decomposition() {
        let g = crate::generators::erdos_renyi(11, 0.5, 5).unwrap();
        let (c, s) = count_five_with_small(&g);
        let tr5 = walk_table(&g, 5).unwrap().trace();
        assert_eq!(
            tr5,
            10 * c[F::Circle] + 10 * s[SmallGraphlet::Tadpole] + 30 * s[SmallGraphlet::Triangle]
        );
    }
}
