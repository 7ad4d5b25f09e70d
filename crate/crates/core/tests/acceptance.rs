//! Acceptance gate: one PASS/FAIL line per criterion; exits nonzero on any failure.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use graphlet_count::analytic::{
    bulls_balanced_npartite, complete_walks, spinning_tops_ring_lattice,
};
use graphlet_count::five::{
    count_m1182_six, count_m7919_six, five_path_formulation1, five_path_formulation3,
};
use graphlet_count::generators::{complete, erdos_renyi, n_partite, path, ring_lattice};
use graphlet_count::induced::{inclusion_matrix, induced_explicit, induced_from_noninduced};
use graphlet_count::oracle::{oracle_five, oracle_induced, oracle_noninduced, oracle_small};
use graphlet_count::report::run_null_compare;
use graphlet_count::{
    count_five, count_five_with_small, count_small, walk_table, FiveCounts, FiveGraphlet,
    SixGraphlet, SmallGraphlet,
};

/// Exact criteria allow no deviation.
const EXACT: i128 = 0;
/// Null-model self-consistency band: `|ratio - 1| <= NULL_RATIO_BAND`.
const NULL_RATIO_BAND: f64 = 0.25;
const NULL_REPLICATES: u32 = 200;
const NULL_NODES: usize = 60;
const NULL_P: f64 = 0.5;
const NULL_GRAPH_SEED: u64 = 2024;
const NULL_SEED: u64 = 7;
const RANDOM_VECTORS: usize = 1000;
const MIN_CORPUS: usize = 200;
const SIX_NODE_LIMIT: usize = 10;

struct Gate {
    failures: usize,
}

impl Gate {
    fn check(&mut self, label: &str, problems: Vec<String>) {
        if problems.is_empty() {
            println!("PASS  {label}");
        } else {
            self.failures += 1;
            println!("FAIL  {label}");
            for p in problems.iter().take(10) {
                println!("        {p}");
            }
            if problems.len() > 10 {
                println!("        ... {} more", problems.len() - 10);
            }
        }
    }
}

fn differs(a: i128, b: i128) -> bool {
    (a - b).abs() > EXACT
}

fn expect(problems: &mut Vec<String>, what: &str, got: i128, want: i128) {
    if differs(got, want) {
        problems.push(format!("{what}: got {got}, want {want}"));
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut gate = Gate { failures: 0 };
    let corpus = common::corpus();

    // 1. Oracle equivalence.
    let mut problems = Vec::new();
    if corpus.len() < MIN_CORPUS {
        problems.push(format!(
            "corpus has {} graphs, need {MIN_CORPUS}",
            corpus.len()
        ));
    }
    let mut fives = Vec::with_capacity(corpus.len());
    for (name, g) in &corpus {
        let (y, s) = count_five_with_small(g);
        if s != count_small(g) {
            problems.push(format!("{name}: small counts differ between entry points"));
        }
        let s_oracle = oracle_small(g).unwrap();
        for (slot, v) in s.iter() {
            expect(
                &mut problems,
                &format!("{name} {}", slot.id()),
                v,
                s_oracle[slot],
            );
        }
        let y_oracle = oracle_five(g).unwrap();
        for (slot, v) in y.iter() {
            expect(
                &mut problems,
                &format!("{name} {}", slot.id()),
                v,
                y_oracle[slot],
            );
        }
        fives.push((y, y_oracle, s_oracle));
    }
    gate.check(
        &format!(
            "1 oracle equivalence: small and five-node counts on {} graphs",
            corpus.len()
        ),
        problems,
    );

    // 2. Induced pipeline.
    let mut problems = Vec::new();
    for ((name, g), (y, _, _)) in corpus.iter().zip(&fives) {
        let got = induced_from_noninduced(y);
        let want = oracle_induced(g).unwrap();
        for (slot, v) in got.iter() {
            expect(
                &mut problems,
                &format!("{name} induced {}", slot.id()),
                v,
                want[slot],
            );
        }
    }
    gate.check(
        "2a induced counts equal subset classification on the corpus",
        problems,
    );

    let mut problems = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..RANDOM_VECTORS {
        let mut values = [0i128; 21];
        for v in values.iter_mut() {
            *v = rng.gen_range(-1_000_000_000i128..=1_000_000_000);
        }
        let y = FiveCounts::from_array(values);
        let (a, b) = (induced_explicit(&y), induced_from_noninduced(&y));
        for (slot, v) in a.iter() {
            expect(
                &mut problems,
                &format!("vector {trial} {}", slot.id()),
                v,
                b[slot],
            );
        }
    }
    gate.check(
        &format!("2b explicit inversion equals back-substitution on {RANDOM_VECTORS} vectors"),
        problems,
    );

    // 3. Inclusion matrix regeneration.
    let mut problems = Vec::new();
    let table = inclusion_matrix();
    for &outer in FiveGraphlet::ALL {
        for &inner in FiveGraphlet::ALL {
            let got = oracle_noninduced(&outer.graph(), inner.id()).unwrap();
            // A has a zero diagonal; every graphlet holds exactly one copy of itself.
            let want = table.get(inner, outer) as i128 + i128::from(inner == outer);
            expect(
                &mut problems,
                &format!("copies of {} in {}", inner.id(), outer.id()),
                got,
                want,
            );
        }
    }
    gate.check(
        "3 inclusion matrix (I + A) matches embedding counts for all 21x21 pairs",
        problems,
    );

    // 4. Published values.
    let mut problems = Vec::new();
    let (a, b) = complete_walks(20, 4).unwrap();
    expect(&mut problems, "K20 a_4 closed form", a, 6517);
    expect(&mut problems, "K20 b_4 closed form", b, 6516);
    let t = walk_table(&complete(20), 4).unwrap();
    expect(&mut problems, "K20 a_4 walk table", t.get(0, 0), 6517);
    expect(&mut problems, "K20 b_4 walk table", t.get(0, 1), 6516);
    gate.check("4a walks in K20: 6517 / 6516", problems);

    let mut problems = Vec::new();
    for n in 5..=10i128 {
        let want = 60 * (n * (n - 1) * (n - 2) * (n - 3) * (n - 4) / 120);
        expect(
            &mut problems,
            &format!("5-paths in K{n}"),
            count_five(&complete(n as usize))[FiveGraphlet::Path],
            want,
        );
    }
    gate.check(
        "4b 5-paths in K_n equal 60 C(n,5) for n in 5..=10",
        problems,
    );

    let mut problems = Vec::new();
    let bulls = bulls_balanced_npartite(5, 3).unwrap();
    expect(&mut problems, "bulls closed form", bulls.value, 74_520);
    let g = n_partite(&[3; 5]).unwrap();
    expect(
        &mut problems,
        "bulls count_five",
        count_five(&g)[FiveGraphlet::Bull],
        74_520,
    );
    gate.check(
        "4c bulls in balanced 5-partite, 3 per group: 74520",
        problems,
    );

    let mut problems = Vec::new();
    let g = ring_lattice(29, 10).unwrap();
    expect(
        &mut problems,
        "ring(29,10) closed form",
        spinning_tops_ring_lattice(29, 10).unwrap(),
        912_108,
    );
    expect(
        &mut problems,
        "ring(29,10) count_five",
        count_five(&g)[FiveGraphlet::SpinningTop],
        912_108,
    );
    for n in 21..=40u32 {
        let got = count_five(&ring_lattice(n as usize, 10).unwrap())[FiveGraphlet::SpinningTop];
        expect(
            &mut problems,
            &format!("ring({n},10)"),
            spinning_tops_ring_lattice(n, 10).unwrap(),
            got,
        );
    }
    gate.check(
        "4d spinning tops in ring lattices: 912108 at (29,10), piecewise form for n in 21..=40",
        problems,
    );

    let mut problems = Vec::new();
    for n in 5..=50usize {
        let g = path(n);
        let want = n as i128 - 4;
        let y = count_five(&g);
        expect(
            &mut problems,
            &format!("path({n}) count_five"),
            y[FiveGraphlet::Path],
            want,
        );
        for (slot, v) in y.iter() {
            if slot != FiveGraphlet::Path {
                expect(&mut problems, &format!("path({n}) {}", slot.id()), v, 0);
            }
        }
        expect(
            &mut problems,
            &format!("path({n}) formulation 1"),
            five_path_formulation1(&g),
            want,
        );
        let f3 = five_path_formulation3(&g);
        expect(
            &mut problems,
            &format!("path({n}) formulation 3"),
            f3,
            2 * n as i128 - 4,
        );
        if f3 == want {
            problems.push(format!("path({n}): formulation 3 unexpectedly agrees"));
        }
    }
    gate.check(
        "4e 5-paths on path graphs: n-4, formulation 1 agrees, formulation 3 gives 2n-4",
        problems,
    );

    let mut problems = Vec::new();
    for ((name, g), (_, y_oracle, s_oracle)) in corpus.iter().zip(&fives) {
        let tr5 = walk_table(g, 5).unwrap().trace();
        let rhs = 10 * y_oracle[FiveGraphlet::Circle]
            + 10 * s_oracle[SmallGraphlet::Tadpole]
            + 30 * s_oracle[SmallGraphlet::Triangle];
        expect(&mut problems, &format!("{name} tr(g^5)"), tr5, rhs);
    }
    gate.check("4f fifth-power trace decomposition on the corpus", problems);

    // 5. Null model self-consistency and determinism.
    let mut problems = Vec::new();
    let g = erdos_renyi(NULL_NODES, NULL_P, NULL_GRAPH_SEED).unwrap();
    let report = run_null_compare(&g, NULL_REPLICATES, NULL_SEED, true).unwrap();
    let null = report.null_model.as_ref().unwrap();
    let blocks = [
        ("noninduced", &null.noninduced),
        ("induced", null.induced.as_ref().unwrap()),
    ];
    let mut worst: f64 = 0.0;
    for (block, slots) in blocks {
        for s in slots {
            match s.ratio {
                Some(r) => {
                    worst = worst.max((r - 1.0).abs());
                    if (r - 1.0).abs() > NULL_RATIO_BAND {
                        problems.push(format!("{block} {}: ratio {r:.4}", s.id));
                    }
                }
                None => problems.push(format!("{block} {}: null mean is zero", s.id)),
            }
        }
    }
    let again = run_null_compare(&g, NULL_REPLICATES, NULL_SEED, true).unwrap();
    if again.to_json() != report.to_json() || again.to_csv() != report.to_csv() {
        problems.push("rerun with the same seed is not byte-identical".into());
    }
    gate.check(
        &format!(
            "5 null model on G({NULL_NODES},{NULL_P}), R={NULL_REPLICATES}: all ratios within {NULL_RATIO_BAND} of 1 (worst {worst:.4}), reruns identical"
        ),
        problems,
    );

    // 6. Six-node extensions.
    let mut problems = Vec::new();
    let mut checked = 0;
    for (name, g) in corpus
        .iter()
        .filter(|(_, g)| g.node_count() <= SIX_NODE_LIMIT)
    {
        checked += 1;
        let house_apex = oracle_noninduced(g, SixGraphlet::HouseApex.id()).unwrap();
        expect(
            &mut problems,
            &format!("{name} M7919_6"),
            count_m7919_six(g),
            house_apex,
        );
        let twin = oracle_noninduced(g, SixGraphlet::TwinPendantSquare.id()).unwrap();
        expect(
            &mut problems,
            &format!("{name} M1182_6"),
            count_m1182_six(g),
            twin,
        );
    }
    gate.check(
        &format!("6 six-node counts equal embedding counts on {checked} graphs with n <= {SIX_NODE_LIMIT}"),
        problems,
    );

    println!(
        "{} failure(s), {:.1}s",
        gate.failures,
        start.elapsed().as_secs_f64()
    );
    if gate.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
