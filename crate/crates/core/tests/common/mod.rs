#![allow(dead_code)]

use graphlet_count::generators::{
    complete, cycle, erdos_renyi, n_partite, path, ring_lattice, star,
};
use graphlet_count::Graph;

pub const PROBABILITIES: [f64; 4] = [0.15, 0.3, 0.5, 0.8];
pub const SEEDS_PER_CELL: u64 = 6;

/// Seeded random graphs and the special families, all on 5 to 12 nodes.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 5..=12usize {
        for (pi, &p) in PROBABILITIES.iter().enumerate() {
            for s in 0..SEEDS_PER_CELL {
                let seed = 1000 * n as u64 + 100 * pi as u64 + s;
                out.push((
                    format!("gnp({n},{p},{seed})"),
                    erdos_renyi(n, p, seed).unwrap(),
                ));
            }
        }
        out.push((format!("path({n})"), path(n)));
        out.push((format!("cycle({n})"), cycle(n)));
        out.push((format!("star({n})"), star(n)));
        out.push((format!("complete({n})"), complete(n)));
        for k in 1..=(n - 1) / 2 {
            out.push((format!("ring({n},{k})"), ring_lattice(n, k).unwrap()));
        }
    }
    for groups in 2..=6usize {
        for per_group in 1..=12 / groups {
            if groups * per_group >= 5 {
                let g = n_partite(&vec![per_group; groups]).unwrap();
                out.push((format!("npartite({groups}x{per_group})"), g));
            }
        }
    }
    out
}
