//! Graphlet identities: the `(b, a)` naming scheme and its canonical codes.
//!
//! For a graph on `b` nodes the code reads the upper triangle of the adjacency
//! matrix row by row as a binary number, pair `(i, j)` (1-based, `i < j`)
//! carrying weight `2^(C(b-i, 2) + b - j)`. The canonical code `a` is the
//! minimum over all `b!` relabellings.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphletId {
    /// Node count.
    pub b: u8,
    /// Canonical code.
    pub a: u32,
}

impl GraphletId {
    pub const fn new(b: u8, a: u32) -> Self {
        GraphletId { b, a }
    }

    /// Stable text key, e.g. `M86_5`.
    pub fn key(&self) -> String {
        format!("M{}_{}", self.a, self.b)
    }
}

impl fmt::Display for GraphletId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{}_{}", self.a, self.b)
    }
}

/// Bit position of the 0-based pair `(i, j)`, `i < j`, in a `b`-node code.
fn bit(b: usize, i: usize, j: usize) -> u32 {
    let r = b - 1 - i;
    (r * r.saturating_sub(1) / 2 + (b - 1 - j)) as u32
}

/// The code of `g` under its current labelling.
pub fn code_of(g: &Graph) -> u32 {
    let b = g.node_count();
    g.edges().map(|(i, j)| 1u32 << bit(b, i, j)).sum()
}

fn code_under(g: &Graph, perm: &[usize]) -> u32 {
    // Original node perm[t] is read as node t.
    let b = perm.len();
    let mut code = 0;
    for s in 0..b {
        for t in (s + 1)..b {
            if g.has_edge(perm[s], perm[t]) {
                code |= 1 << bit(b, s, t);
            }
        }
    }
    code
}

/// Smallest and largest code over all relabellings of `g`.
pub fn code_range(g: &Graph) -> (u32, u32) {
    let b = g.node_count();
    (0..b)
        .permutations(b)
        .map(|p| code_under(g, &p))
        .minmax()
        .into_option()
        .unwrap_or((0, 0))
}

/// Canonical `(b, a)` of a connected graph on 3 to 6 nodes.
pub fn canonical_id(g: &Graph) -> Result<GraphletId, GraphError> {
    let b = g.node_count();
    if !(3..=6).contains(&b) {
        return Err(GraphError::Classification(format!(
            "graphlets have 3 to 6 nodes, got {b}"
        )));
    }
    if !g.is_connected() {
        return Err(GraphError::Classification("graph is disconnected".into()));
    }
    Ok(GraphletId::new(b as u8, code_range(g).0))
}

/// The graph whose labelling has code `a` on `b` nodes.
pub fn graph_from_code(b: usize, a: u32) -> Graph {
    let mut edges = Vec::new();
    for i in 0..b {
        for j in (i + 1)..b {
            if a & (1 << bit(b, i, j)) != 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(b, &edges).expect("pairs are in range")
}

macro_rules! graphlet_family {
    (
        $(#[$meta:meta])*
        $name:ident { $($variant:ident = ($b:expr, $code:expr), $label:expr;)* }
    ) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($variant,)*
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant,)*];
            pub const COUNT: usize = [$($code,)*].len();

            pub const fn code(self) -> u32 {
                match self {
                    $($name::$variant => $code,)*
                }
            }

            pub const fn node_count(self) -> usize {
                match self {
                    $($name::$variant => $b,)*
                }
            }

            pub const fn id(self) -> GraphletId {
                GraphletId::new(self.node_count() as u8, self.code())
            }

            pub const fn name(self) -> &'static str {
                match self {
                    $($name::$variant => $label,)*
                }
            }

            pub const fn index(self) -> usize {
                self as usize
            }

            pub fn from_code(code: u32) -> Option<Self> {
                Self::ALL.iter().copied().find(|g| g.code() == code)
            }

            /// A labelled copy of the graphlet (the labelling with the canonical code).
            pub fn graph(self) -> Graph {
                graph_from_code(self.node_count(), self.code())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }
    };
}

graphlet_family!(
    /// The eight connected graphlets on three and four nodes, in code order.
    SmallGraphlet {
        ThreeStar = (3, 3), "3-star";
        Triangle = (3, 7), "triangle";
        FourStar = (4, 11), "4-star";
        FourPath = (4, 13), "4-path";
        Tadpole = (4, 15), "tadpole";
        FourCycle = (4, 30), "4-circle";
        Diamond = (4, 31), "diamond";
        FourClique = (4, 63), "4-complete";
    }
);

graphlet_family!(
    /// The 21 connected graphlets on five nodes, in ascending code order.
    FiveGraphlet {
        Star = (5, 75), "5-star";
        Arrow = (5, 77), "5-arrow";
        Cricket = (5, 79), "cricket";
        Path = (5, 86), "5-path";
        Bull = (5, 87), "bull";
        Banner = (5, 94), "banner";
        Stingray = (5, 95), "stingray";
        Lollipop = (5, 117), "lollipop";
        SpinningTop = (5, 119), "spinning top";
        Kite = (5, 127), "kite";
        Ufo = (5, 222), "ufo";
        Chevron = (5, 223), "chevron";
        Hourglass = (5, 235), "hourglass";
        Circle = (5, 236), "5-circle";
        House = (5, 237), "house";
        Crown = (5, 239), "crown";
        Envelope = (5, 254), "envelope";
        Lamp = (5, 255), "lamp";
        Arrowhead = (5, 507), "arrowhead";
        CatsCradle = (5, 511), "cat's cradle";
        Complete = (5, 1023), "5-complete";
    }
);

graphlet_family!(
    /// The two six-node graphlets with dedicated count formulas.
    SixGraphlet {
        HouseApex = (6, 7919), "house with apex";
        TwinPendantSquare = (6, 1182), "square with two pendants";
    }
);
