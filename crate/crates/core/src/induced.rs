//! Conversion between non-induced and induced five-node counts.
//!
//! With `A[i][j]` the number of copies of graphlet `i` inside graphlet `j`,
//! non-induced counts `y` and induced counts `t` satisfy `y = (I + A) t`.
//! `I + A` is unit upper-triangular in code order, so both directions are
//! exact integer maps.

use std::ops::{Index, IndexMut};

use crate::five::FiveCounts;
use crate::graphlet::FiveGraphlet;

/// Induced counts indexed by [`FiveGraphlet`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct InducedFiveCounts([i128; 21]);

impl InducedFiveCounts {
    pub fn from_array(values: [i128; 21]) -> Self {
        InducedFiveCounts(values)
    }

    pub fn as_array(&self) -> &[i128; 21] {
        &self.0
    }

    pub fn get_code(&self, a: u32) -> Option<i128> {
        FiveGraphlet::from_code(a).map(|g| self[g])
    }

    pub fn iter(&self) -> impl Iterator<Item = (FiveGraphlet, i128)> + '_ {
        FiveGraphlet::ALL
            .iter()
            .map(move |&g| (g, self.0[g.index()]))
    }

    /// Number of 5-node subsets whose induced subgraph is connected.
    pub fn total(&self) -> i128 {
        self.0.iter().sum()
    }
}

impl Index<FiveGraphlet> for InducedFiveCounts {
    type Output = i128;

    fn index(&self, g: FiveGraphlet) -> &i128 {
        &self.0[g.index()]
    }
}

impl IndexMut<FiveGraphlet> for InducedFiveCounts {
    fn index_mut(&mut self, g: FiveGraphlet) -> &mut i128 {
        &mut self.0[g.index()]
    }
}

/// Copies of graphlet `i` (row) inside graphlet `j` (column).
const INCLUSION: [[i64; 21]; 21] = [
    // 75 77 79 86 87 94 95 117 119 127 222 223 235 236 237 239 254 255 507 511 1023
    [
        0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 2, 1, 0, 0, 1, 0, 2, 1, 3, 5,
    ],
    [
        0, 0, 2, 0, 2, 2, 5, 1, 4, 9, 6, 12, 4, 0, 4, 10, 10, 20, 20, 36, 60,
    ],
    [
        0, 0, 0, 0, 0, 0, 2, 0, 0, 3, 0, 6, 2, 0, 0, 3, 0, 8, 4, 15, 30,
    ],
    [
        0, 0, 0, 0, 1, 2, 2, 2, 4, 6, 6, 6, 4, 5, 7, 10, 14, 18, 24, 36, 60,
    ],
    [
        0, 0, 0, 0, 0, 0, 2, 0, 2, 6, 0, 6, 0, 0, 1, 5, 4, 14, 12, 30, 60,
    ],
    [
        0, 0, 0, 0, 0, 0, 1, 0, 1, 3, 6, 6, 0, 0, 2, 4, 8, 12, 16, 30, 60,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 6, 0, 0, 0, 2, 0, 10, 4, 24, 60,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 2, 3, 0, 0, 4, 0, 2, 6, 6, 12, 16, 30, 60,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 2, 2, 8, 8, 24, 60,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 6, 20,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 2, 4, 10,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 3, 10,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 2, 6, 15,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 2, 4, 6, 12,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 4, 6, 12, 24, 60,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 4, 18, 60,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 4, 9, 30,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 30,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 15,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 10,
    ],
    [0; 21],
];

/// The 21 x 21 inclusion matrix `A`, rows and columns in code order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InclusionMatrix([[i64; 21]; 21]);

impl InclusionMatrix {
    /// Copies of `inner` inside `outer`.
    pub fn get(&self, inner: FiveGraphlet, outer: FiveGraphlet) -> i64 {
        self.0[inner.index()][outer.index()]
    }

    pub fn rows(&self) -> &[[i64; 21]; 21] {
        &self.0
    }
}

pub fn inclusion_matrix() -> InclusionMatrix {
    InclusionMatrix(INCLUSION)
}

/// Solves `(I + A) t = y` by back-substitution.
pub fn induced_from_noninduced(y: &FiveCounts) -> InducedFiveCounts {
    let y = y.as_array();
    let mut t = [0i128; 21];
    for i in (0..21).rev() {
        let correction: i128 = ((i + 1)..21).map(|j| INCLUSION[i][j] as i128 * t[j]).sum();
        t[i] = y[i] - correction;
    }
    InducedFiveCounts(t)
}

/// `y = (I + A) t`.
pub fn noninduced_from_induced(t: &InducedFiveCounts) -> FiveCounts {
    let t = t.as_array();
    let mut y = [0i128; 21];
    for (i, row) in INCLUSION.iter().enumerate() {
        y[i] = t[i]
            + row
                .iter()
                .zip(t)
                .map(|(&a, &x)| a as i128 * x)
                .sum::<i128>();
    }
    FiveCounts::from_array(y)
}

/// Each induced count as an explicit signed combination of non-induced
/// counts (the rows of `(I + A)^{-1}`), keyed by canonical code.
const EXPLICIT: [&[(u32, i128)]; 21] = [
    &[
        (75, 1),
        (79, -1),
        (95, 1),
        (127, -1),
        (223, -2),
        (235, 1),
        (239, -1),
        (255, 2),
        (507, 1),
        (511, -3),
        (1023, 5),
    ],
    &[
        (77, 1),
        (79, -2),
        (87, -2),
        (94, -2),
        (95, 5),
        (117, -1),
        (119, 4),
        (127, -9),
        (222, 6),
        (223, -12),
        (235, 4),
        (237, 4),
        (239, -10),
        (254, -10),
        (255, 20),
        (507, 20),
        (511, -36),
        (1023, 60),
    ],
    &[
        (79, 1),
        (95, -2),
        (127, 3),
        (223, 6),
        (235, -2),
        (239, 3),
        (255, -8),
        (507, -4),
        (511, 15),
        (1023, -30),
    ],
    &[
        (86, 1),
        (87, -1),
        (94, -2),
        (95, 2),
        (117, -2),
        (119, 4),
        (127, -6),
        (222, 6),
        (223, -6),
        (235, 4),
        (236, -5),
        (237, 7),
        (239, -10),
        (254, -14),
        (255, 18),
        (507, 24),
        (511, -36),
        (1023, 60),
    ],
    &[
        (87, 1),
        (95, -2),
        (119, -2),
        (127, 6),
        (223, 6),
        (237, -1),
        (239, 5),
        (254, 4),
        (255, -14),
        (507, -12),
        (511, 30),
        (1023, -60),
    ],
    &[
        (94, 1),
        (95, -1),
        (119, -1),
        (127, 3),
        (222, -6),
        (223, 6),
        (237, -2),
        (239, 4),
        (254, 8),
        (255, -12),
        (507, -16),
        (511, 30),
        (1023, -60),
    ],
    &[
        (95, 1),
        (127, -3),
        (223, -6),
        (239, -2),
        (255, 10),
        (507, 4),
        (511, -24),
        (1023, 60),
    ],
    &[
        (117, 1),
        (119, -2),
        (127, 3),
        (235, -4),
        (237, -2),
        (239, 6),
        (254, 6),
        (255, -12),
        (507, -16),
        (511, 30),
        (1023, -60),
    ],
    &[
        (119, 1),
        (127, -3),
        (239, -2),
        (254, -2),
        (255, 8),
        (507, 8),
        (511, -24),
        (1023, 60),
    ],
    &[(127, 1), (255, -2), (511, 6), (1023, -20)],
    &[
        (222, 1),
        (223, -1),
        (254, -1),
        (255, 1),
        (507, 2),
        (511, -4),
        (1023, 10),
    ],
    &[(223, 1), (255, -1), (511, 3), (1023, -10)],
    &[
        (235, 1),
        (239, -1),
        (255, 2),
        (507, 2),
        (511, -6),
        (1023, 15),
    ],
    &[
        (236, 1),
        (237, -1),
        (239, 1),
        (254, 2),
        (255, -2),
        (507, -4),
        (511, 6),
        (1023, -12),
    ],
    &[
        (237, 1),
        (239, -2),
        (254, -4),
        (255, 6),
        (507, 12),
        (511, -24),
        (1023, 60),
    ],
    &[(239, 1), (255, -4), (507, -4), (511, 18), (1023, -60)],
    &[(254, 1), (255, -1), (507, -4), (511, 9), (1023, -30)],
    &[(255, 1), (511, -6), (1023, 30)],
    &[(507, 1), (511, -3), (1023, 15)],
    &[(511, 1), (1023, -10)],
    &[(1023, 1)],
];

/// Induced counts from the explicit per-graphlet combinations.
pub fn induced_explicit(y: &FiveCounts) -> InducedFiveCounts {
    let mut t = [0i128; 21];
    for (slot, terms) in t.iter_mut().zip(EXPLICIT) {
        *slot = terms
            .iter()
            .map(|&(code, coef)| coef * y.get_code(code).expect("code in family"))
            .sum();
    }
    InducedFiveCounts(t)
}
