//! Seeded w-random graph generation and sampled graph signals.
//!
//! All randomness flows through a `ChaCha8` stream keyed by a 64-bit seed, so
//! a `(graphon, n, seed)` triple reproduces the same sample bit for bit on
//! any platform. Latents are drawn first, vertices are sorted ascending by
//! latent, and pair Bernoulli draws then consume the stream in row-major
//! order over pairs `i < j`.

use ndarray::Array1;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graphon::{Graph, GraphSignal, GraphonSignal, StepGraphon};

/// Seed for task `index` in a multi-task experiment.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    base ^ index
}

/// A sampled graph remembering where its vertices came from.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleRecord {
    pub graph: Graph,
    /// Latent position in [0, 1) per vertex, ascending (block-major for
    /// fixed-block samples).
    pub latents: Vec<f64>,
    /// Source-partition cell of each vertex.
    pub cells: Vec<usize>,
    pub seed: u64,
    /// Measures of the source partition the latents refer to.
    pub source_measures: Array1<f64>,
}

impl SampleRecord {
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn block_count(&self) -> usize {
        self.source_measures.len()
    }

    pub fn edge_density(&self) -> f64 {
        let n = self.vertex_count();
        if n < 2 {
            return 0.0;
        }
        self.graph.edge_count() as f64 / (n * (n - 1) / 2) as f64
    }
}

/// Sample `𝒢(n, w)`: n latents uniform on [0, 1), sorted ascending, each
/// pair `{i, j}` linked independently with probability `w(x_i, x_j)`.
pub fn sample_w_random(w: &StepGraphon, n: usize, seed: u64) -> SampleRecord {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut latents: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
    latents.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let bp = w.breakpoints();
    let cells: Vec<usize> = latents.iter().map(|&x| cell_index(&bp, x)).collect();
    let graph = link_pairs(&mut rng, n, |i, j| w.values()[[cells[i], cells[j]]]);
    SampleRecord { graph, latents, cells, seed, source_measures: w.measures().clone() }
}

/// Sample with exactly `per_block` vertices in each of the k blocks of a
/// model matrix, vertices ordered block-major; pair probability is the
/// model entry of the block pair.
pub fn sample_fixed_blocks(model: &StepGraphon, per_block: usize, seed: u64) -> SampleRecord {
    assert!(per_block >= 1);
    let k = model.cell_count();
    let n = k * per_block;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cells: Vec<usize> = (0..n).map(|v| v / per_block).collect();
    let bp = model.breakpoints();
    let latents: Vec<f64> = cells.iter().map(|&b| 0.5 * (bp[b] + bp[b + 1])).collect();
    let graph = link_pairs(&mut rng, n, |i, j| model.values()[[cells[i], cells[j]]]);
    SampleRecord { graph, latents, cells, seed, source_measures: model.measures().clone() }
}

fn link_pairs(rng: &mut ChaCha8Rng, n: usize, prob: impl Fn(usize, usize) -> f64) -> Graph {
    let mut graph = Graph::empty(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random::<f64>() < prob(i, j) {
                graph.set_edge(i, j);
            }
        }
    }
    graph
}

fn cell_index(bp: &[f64], x: f64) -> usize {
    let k = bp.len() - 1;
    match bp.binary_search_by(|b| b.partial_cmp(&x).unwrap()) {
        Ok(i) => i.min(k - 1),
        Err(i) => (i - 1).min(k - 1),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampledSignalMode {
    /// `f(x_v) / √n` per vertex, so the lifted signal approaches `f` in L².
    Evaluate,
    /// Raw 0/1 indicator of one source block.
    IndicatorBlock(usize),
}

/// Push a graphon signal down to a sampled graph.
pub fn sampled_signal(
    f: &GraphonSignal,
    record: &SampleRecord,
    mode: SampledSignalMode,
) -> Result<GraphSignal> {
    let n = record.vertex_count();
    match mode {
        SampledSignalMode::Evaluate => {
            if f.len() != record.block_count() {
                return Err(Error::PartitionMismatch);
            }
            let scale = 1.0 / (n as f64).sqrt();
            let values = Array1::from_shape_fn(n, |v| f.values[record.cells[v]] * scale);
            Ok(GraphSignal::new(values))
        }
        SampledSignalMode::IndicatorBlock(b) => {
            if b >= record.block_count() {
                return Err(Error::UnknownBlock(b));
            }
            let values = Array1::from_shape_fn(n, |v| {
                num_complex::Complex64::new(f64::from(u8::from(record.cells[v] == b)), 0.0)
            });
            Ok(GraphSignal::new(values))
        }
    }
}
