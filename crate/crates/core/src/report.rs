//! Count reports and their JSON and CSV encodings.

use std::io;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::five::{count_five, FiveCounts};
use crate::generators::erdos_renyi_with;
use crate::graph::Graph;
use crate::graphlet::{FiveGraphlet, GraphletId};
use crate::induced::{induced_from_noninduced, InducedFiveCounts};
use crate::par;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReportError {
    #[error("edge density is undefined for n = {n}; the null model needs at least 2 nodes")]
    DensityUndefined { n: usize },
    #[error("at least one replicate is required")]
    NoReplicates,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphMeta {
    pub n: usize,
    pub m: usize,
    /// `2m / (n(n-1))`, absent for fewer than two nodes.
    pub density: Option<f64>,
}

/// Null-model statistics for one graphlet.
#[derive(Clone, Debug, PartialEq)]
pub struct NullSlot {
    pub id: GraphletId,
    /// Exact total over all replicates; the mean is `sum / replicates`.
    pub sum: i128,
    pub mean: f64,
    /// Observed count divided by the mean; absent when the mean is zero.
    pub ratio: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NullModel {
    pub replicates: u32,
    pub seed: u64,
    pub p: f64,
    pub noninduced: Vec<NullSlot>,
    pub induced: Option<Vec<NullSlot>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CountReport {
    pub graph: GraphMeta,
    pub noninduced: FiveCounts,
    pub induced: Option<InducedFiveCounts>,
    pub null_model: Option<NullModel>,
}

fn meta(g: &Graph) -> GraphMeta {
    GraphMeta {
        n: g.node_count(),
        m: g.edge_count(),
        density: g.density(),
    }
}

pub fn run_count(g: &Graph, with_induced: bool) -> CountReport {
    let noninduced = count_five(g);
    CountReport {
        graph: meta(g),
        induced: with_induced.then(|| induced_from_noninduced(&noninduced)),
        noninduced,
        null_model: None,
    }
}

/// The generator for replicate `r`: the master seed selects the key, the
/// replicate index selects the stream, so every replicate is fixed regardless
/// of which thread draws it.
pub fn replicate_rng(seed: u64, r: u32) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(r as u64);
    rng
}

/// Counts `g`, then `replicates` density-matched `G(n, p)` graphs, and
/// reports per-graphlet means and observed/mean ratios.
pub fn run_null_compare(
    g: &Graph,
    replicates: u32,
    seed: u64,
    with_induced: bool,
) -> Result<CountReport, ReportError> {
    if replicates == 0 {
        return Err(ReportError::NoReplicates);
    }
    let n = g.node_count();
    let p = g.density().ok_or(ReportError::DensityUndefined { n })?;
    let observed = run_count(g, with_induced);

    let samples = par::map(replicates as usize, |r| {
        let h = erdos_renyi_with(n, p, &mut replicate_rng(seed, r as u32)).expect("p is a density");
        let y = count_five(&h);
        let t = with_induced.then(|| induced_from_noninduced(&y));
        (y, t)
    });

    let mut sums = [0i128; 21];
    let mut induced_sums = [0i128; 21];
    for (y, t) in &samples {
        for (acc, v) in sums.iter_mut().zip(y.as_array()) {
            *acc += v;
        }
        if let Some(t) = t {
            for (acc, v) in induced_sums.iter_mut().zip(t.as_array()) {
                *acc += v;
            }
        }
    }

    let null_model = NullModel {
        replicates,
        seed,
        p,
        noninduced: null_slots(observed.noninduced.as_array(), &sums, replicates),
        induced: observed
            .induced
            .as_ref()
            .map(|t| null_slots(t.as_array(), &induced_sums, replicates)),
    };
    Ok(CountReport {
        null_model: Some(null_model),
        ..observed
    })
}

fn null_slots(observed: &[i128; 21], sums: &[i128; 21], replicates: u32) -> Vec<NullSlot> {
    FiveGraphlet::ALL
        .iter()
        .map(|&g| {
            let (obs, sum) = (observed[g.index()], sums[g.index()]);
            let r = replicates as f64;
            NullSlot {
                id: g.id(),
                sum,
                mean: sum as f64 / r,
                ratio: (sum != 0).then(|| obs as f64 * r / sum as f64),
            }
        })
        .collect()
}

/// Serializes `(key, value)` pairs as a map in the given order.
struct Keyed<I>(I);

impl<I, V> Serialize for Keyed<I>
where
    I: Iterator<Item = (GraphletId, V)> + Clone,
    V: Serialize,
{
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for (id, v) in self.0.clone() {
            map.serialize_entry(&id.key(), &v)?;
        }
        map.end()
    }
}

fn counts(values: &[i128; 21]) -> Keyed<impl Iterator<Item = (GraphletId, i128)> + Clone + '_> {
    Keyed(
        FiveGraphlet::ALL
            .iter()
            .map(|&g| (g.id(), values[g.index()])),
    )
}

impl Serialize for NullSlot {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("NullSlot", 3)?;
        st.serialize_field("sum", &self.sum)?;
        st.serialize_field("mean", &self.mean)?;
        st.serialize_field("ratio", &self.ratio)?;
        st.end()
    }
}

fn slots(v: &[NullSlot]) -> Keyed<impl Iterator<Item = (GraphletId, &NullSlot)> + Clone + '_> {
    Keyed(v.iter().map(|s| (s.id, s)))
}

impl Serialize for NullModel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("NullModel", 5)?;
        st.serialize_field("replicates", &self.replicates)?;
        st.serialize_field("seed", &self.seed)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("noninduced", &slots(&self.noninduced))?;
        st.serialize_field("induced", &self.induced.as_deref().map(slots))?;
        st.end()
    }
}

impl Serialize for CountReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CountReport", 4)?;
        st.serialize_field("graph", &self.graph)?;
        st.serialize_field("noninduced", &counts(self.noninduced.as_array()))?;
        st.serialize_field(
            "induced",
            &self.induced.as_ref().map(|t| counts(t.as_array())),
        )?;
        st.serialize_field("null_model", &self.null_model)?;
        st.end()
    }
}

fn opt_float(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

impl CountReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// Long format, one value per row: `block,key,value`. Absent values are
    /// empty cells.
    pub fn write_csv<W: io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["block", "key", "value"])?;
        w.write_record(["graph", "n", &self.graph.n.to_string()])?;
        w.write_record(["graph", "m", &self.graph.m.to_string()])?;
        w.write_record(["graph", "density", &opt_float(self.graph.density)])?;
        for (g, v) in self.noninduced.iter() {
            w.write_record(["noninduced", &g.id().key(), &v.to_string()])?;
        }
        if let Some(t) = &self.induced {
            for (g, v) in t.iter() {
                w.write_record(["induced", &g.id().key(), &v.to_string()])?;
            }
        }
        if let Some(null) = &self.null_model {
            w.write_record(["null_model", "replicates", &null.replicates.to_string()])?;
            w.write_record(["null_model", "seed", &null.seed.to_string()])?;
            w.write_record(["null_model", "p", &null.p.to_string()])?;
            let blocks = [
                ("noninduced", Some(&null.noninduced)),
                ("induced", null.induced.as_ref()),
            ];
            for (name, block) in blocks {
                let Some(block) = block else { continue };
                for s in block {
                    let key = s.id.key();
                    w.write_record([&format!("null_{name}_sum"), &key, &s.sum.to_string()])?;
                    w.write_record([&format!("null_{name}_mean"), &key, &s.mean.to_string()])?;
                    w.write_record([&format!("null_{name}_ratio"), &key, &opt_float(s.ratio)])?;
                }
            }
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv output is utf-8")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}
