//! Closed-form counts for complete, complete multipartite and ring-lattice
//! graphs. Each one is checked against the general counters in the tests.

use thiserror::Error;

use crate::five::count_five;
use crate::generators::n_partite;
use crate::graphlet::FiveGraphlet;
use crate::math::{choose, exact_div};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalyticError {
    #[error("{0}")]
    Domain(String),
    #[error("value overflows 128-bit arithmetic")]
    Overflow,
}

fn domain(msg: impl Into<String>) -> AnalyticError {
    AnalyticError::Domain(msg.into())
}

/// Diagonal `a_k` and off-diagonal `b_k` entries of `g^k` for `K_n`:
/// `b_k = ((n-1)^k + (-1)^(k+1)) / n` and `a_k = b_k + (-1)^k`.
pub fn complete_walks(n: u32, k: u32) -> Result<(i128, i128), AnalyticError> {
    if n < 2 {
        return Err(domain("complete_walks needs n >= 2"));
    }
    if k < 1 {
        return Err(domain("complete_walks needs k >= 1"));
    }
    let sign: i128 = if k.is_multiple_of(2) { 1 } else { -1 };
    let power = (n as i128 - 1)
        .checked_pow(k)
        .ok_or(AnalyticError::Overflow)?;
    let b = exact_div(power - sign, n as i128, "complete walks");
    Ok((b + sign, b))
}

/// 5-paths in `K_n`: `60 C(n, 5)`.
pub fn five_paths_complete(n: u32) -> i128 {
    60 * choose(n as i128, 5)
}

/// Which route produced a closed-form answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    ClosedForm,
    /// The closed form's assumptions failed; the general counter was used.
    GeneralCounter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BullCount {
    pub value: i128,
    pub route: Route,
}

/// Bulls in the balanced complete `N`-partite graph with `n_a` nodes per group:
/// `3 C(N,3) n_a^3 {((N-1) n_a - 2)((N-1) n_a - 3) + n_a - 1}`.
///
/// The closed form assumes every node has degree `n - n_a > 2`. When that
/// fails the graph is built and counted directly, and the result says so.
pub fn bulls_balanced_npartite(groups: u32, per_group: u32) -> Result<BullCount, AnalyticError> {
    if groups < 2 {
        return Err(domain("need at least 2 groups"));
    }
    if per_group < 1 {
        return Err(domain("groups need at least 1 node"));
    }
    let (big_n, na) = (groups as i128, per_group as i128);
    let n = big_n * na;
    if n - na <= 2 {
        let g = n_partite(&vec![per_group as usize; groups as usize])
            .map_err(|e| domain(e.to_string()))?;
        return Ok(BullCount {
            value: count_five(&g)[FiveGraphlet::Bull],
            route: Route::GeneralCounter,
        });
    }
    let d = (big_n - 1) * na;
    let value = 3 * choose(big_n, 3) * na * na * na * ((d - 2) * (d - 3) + na - 1);
    Ok(BullCount {
        value,
        route: Route::ClosedForm,
    })
}

/// Spinning tops in the ring lattice `(n, k)`, piecewise in `n`:
///
/// * `n >= 3k + 1`: `(2/3) n k (k-1) [7(k-1)(k-2) + 3]`
/// * `2k + 1 <= n <= 3k`: `(2/3) n {(3k-n+1)(3k-n+2)[9k^2 - (2n+21)k + 5n + 3] + [7(k-1)(k-2) + 3](k-1)k}`
///
/// The second form is the collected polynomial; below the threshold the
/// neighbourhoods of the two ring directions start to overlap.
pub fn spinning_tops_ring_lattice(n: u32, k: u32) -> Result<i128, AnalyticError> {
    if k < 1 {
        return Err(domain("ring lattice needs k >= 1"));
    }
    if n <= 2 * k {
        return Err(domain(format!(
            "ring lattice needs n > 2k, got n={n}, k={k}"
        )));
    }
    let (n, k) = (n as i128, k as i128);
    let far = (7 * (k - 1) * (k - 2) + 3) * (k - 1) * k;
    let inner = if n > 3 * k {
        far
    } else {
        (3 * k - n + 1) * (3 * k - n + 2) * (9 * k * k - (2 * n + 21) * k + 5 * n + 3) + far
    };
    Ok(exact_div(2 * n * inner, 3, "spinning tops"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, ring_lattice};
    use crate::walks::walk_table;

    #[test]
    fn complete_walk_entries() {
        assert_eq!(complete_walks(20, 4), Ok((6517, 6516)));
        for n in 2..10 {
            assert_eq!(complete_walks(n, 1).unwrap().1, 1);
            assert_eq!(complete_walks(n, 2).unwrap().1, n as i128 - 2);
        }
        assert!(complete_walks(1, 3).is_err());
        assert!(complete_walks(5, 0).is_err());
        assert_eq!(complete_walks(1000, 40), Err(AnalyticError::Overflow));
    }

    #[test]
    fn complete_walks_match_walk_table_k6() {
        let t = walk_table(&complete(6), 5).unwrap();
        assert_eq!(complete_walks(6, 5).unwrap(), (t.get(0, 0), t.get(0, 1)));
    }

    #[test]
    fn five_paths() {
        assert_eq!(five_paths_complete(5), 60);
        assert_eq!(five_paths_complete(4), 0);
        assert_eq!(
            five_paths_complete(8),
            count_five(&complete(8))[FiveGraphlet::Path]
        );
    }

    #[test]
    fn bulls() {
        assert_eq!(
            bulls_balanced_npartite(5, 3),
            Ok(BullCount {
                value: 74_520,
                route: Route::ClosedForm
            })
        );
        assert_eq!(bulls_balanced_npartite(4, 1).unwrap().value, 0);
        let small = bulls_balanced_npartite(3, 1).unwrap();
        assert_eq!(
            small,
            BullCount {
                value: 0,
                route: Route::GeneralCounter
            }
        );
        let g = n_partite(&[2; 4]).unwrap();
        assert_eq!(
            bulls_balanced_npartite(4, 2).unwrap().value,
            count_five(&g)[FiveGraphlet::Bull]
        );
        assert!(bulls_balanced_npartite(1, 3).is_err());
        assert!(bulls_balanced_npartite(3, 0).is_err());
    }

    #[test]
    fn spinning_tops() {
        assert_eq!(spinning_tops_ring_lattice(29, 10), Ok(912_108));
        for n in 31..60 {
            assert_eq!(
                spinning_tops_ring_lattice(n, 10).unwrap(),
                30420 * n as i128
            );
        }
        for n in 3..20 {
            assert_eq!(spinning_tops_ring_lattice(n, 1), Ok(0));
        }
        for n in 21..=30i128 {
            let want = 488724 * n - 39026 * n * n + 1092 * n * n * n - 10 * n * n * n * n;
            assert_eq!(
                spinning_tops_ring_lattice(n as u32, 10).unwrap(),
                want,
                "n={n}"
            );
        }
        assert!(spinning_tops_ring_lattice(20, 10).is_err());
    }

    #[test]
    fn spinning_tops_match_general_counter_small_k() {
        for k in 1..=4u32 {
            for n in (2 * k + 1)..=(4 * k + 3) {
                let g = ring_lattice(n as usize, k as usize).unwrap();
                assert_eq!(
                    spinning_tops_ring_lattice(n, k).unwrap(),
                    count_five(&g)[FiveGraphlet::SpinningTop],
                    "n={n} k={k}"
                );
            }
        }
    }
}
