//! Graph and graphon Fourier transforms.
//!
//! The graph Fourier transform expands a vertex signal over an orthonormal
//! eigenbasis of the adjacency shift. The graphon Fourier transform is
//! coarser on purpose: one vector-valued coefficient `P_{I_μ}(f)` per
//! distinct eigenvalue μ, because across samples only eigenspaces are
//! stable, not individual eigenvectors. The kernel coefficient is the
//! explicit residual `f − Σ_j P_j f`, never a materialized projection.
//!
//! Sample spectra are matched to a reference graphon's groups by signed
//! index; an interlacing interval around each distinct |μ| serves as a
//! convergence diagnostic, since finite samples can transiently violate
//! the containment.

use ndarray::Array1;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graphon::{
    common_refinement, Graph, GraphSignal, GraphonSignal, StepGraphon,
};
use crate::linalg::{
    hs_distance, projection_kernel, weighted_inner, DistinctEigenvalueGroup, SignedIndex,
    SignedSpectrum,
};
use crate::sampling::{sample_w_random, sampled_signal, SampledSignalMode};

/// Scalar Fourier coefficients of a vertex signal, one per signed index of
/// the shift operator's spectrum, plus the explicit kernel residual.
#[derive(Clone, Debug)]
pub struct GraphFourier {
    pub coefficients: Vec<(SignedIndex, Complex64)>,
    pub residual: Option<GraphSignal>,
}

impl GraphFourier {
    pub fn coefficient(&self, index: SignedIndex) -> Option<Complex64> {
        self.coefficients.iter().find(|(i, _)| *i == index).map(|(_, c)| *c)
    }

    /// `Σ_i |⟨f, φ_i⟩|²` over stored coefficients.
    pub fn energy(&self) -> f64 {
        self.coefficients.iter().map(|(_, c)| c.norm_sqr()).sum()
    }
}

/// The unit-norm vertex eigenvector associated with a signed index of a
/// `w_G` spectrum: the step eigenvector scaled by `1/√n`.
fn vertex_eigenvector(spectrum: &SignedSpectrum, index: SignedIndex) -> Result<Array1<Complex64>> {
    let n = spectrum.cell_count();
    let scale = 1.0 / (n as f64).sqrt();
    Ok(spectrum.eigvec(index)?.map(|&z| z * scale))
}

/// Graph Fourier transform `⟨f, φ_i⟩ = Σ_v f(v) conj(φ_i(v))` against the
/// spectrum of `w_G` (whose step eigenvectors are the lifted adjacency
/// eigenvectors). The residual keeps the part of `f` outside the stored
/// eigenvectors, so the round trip is exact even with a nontrivial kernel.
pub fn gft(spectrum: &SignedSpectrum, f: &GraphSignal) -> Result<GraphFourier> {
    let n = spectrum.cell_count();
    if f.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: f.len() });
    }
    let mut coefficients = Vec::new();
    let mut residual = f.values.clone();
    for index in spectrum.signed_indices() {
        let phi = vertex_eigenvector(spectrum, index)?;
        let c: Complex64 = f.values.iter().zip(phi.iter()).map(|(a, b)| a * b.conj()).sum();
        residual.iter_mut().zip(phi.iter()).for_each(|(r, &p)| *r -= c * p);
        coefficients.push((index, c));
    }
    Ok(GraphFourier { coefficients, residual: Some(GraphSignal::new(residual)) })
}

/// Inverse graph Fourier transform `f(v) = Σ_i ⟨f, φ_i⟩ φ_i(v)` plus the
/// residual when one is stored. Without a residual the spectrum must have
/// no kernel and no truncation.
pub fn igft(spectrum: &SignedSpectrum, transform: &GraphFourier) -> Result<GraphSignal> {
    let n = spectrum.cell_count();
    let mut out = match &transform.residual {
        Some(r) => {
            if r.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: r.len() });
            }
            r.values.clone()
        }
        None => {
            if spectrum.zero_rank() > 0 || spectrum.is_truncated() {
                return Err(Error::IncompleteBasis);
            }
            Array1::from_elem(n, Complex64::new(0.0, 0.0))
        }
    };
    for &(index, c) in &transform.coefficients {
        let phi = vertex_eigenvector(spectrum, index)?;
        out.iter_mut().zip(phi.iter()).for_each(|(o, &p)| *o += c * p);
    }
    Ok(GraphSignal::new(out))
}

/// One vector-valued graphon Fourier coefficient: the projection of the
/// signal onto the μ-eigenspace.
#[derive(Clone, Debug)]
pub struct GroupComponent {
    pub mu: f64,
    pub indices: Vec<SignedIndex>,
    pub signal: GraphonSignal,
}

/// Graphon Fourier transform: per distinct eigenvalue the projected signal,
/// plus the kernel part `f − Σ_j P_j f` as the coefficient at zero.
#[derive(Clone, Debug)]
pub struct GraphonFourier {
    pub components: Vec<GroupComponent>,
    pub residual: GraphonSignal,
}

impl GraphonFourier {
    pub fn component(&self, mu: f64) -> Option<&GroupComponent> {
        self.components
            .iter()
            .min_by(|a, b| (a.mu - mu).abs().partial_cmp(&(b.mu - mu).abs()).unwrap())
            .filter(|c| (c.mu - mu).abs() <= 1e-9 * mu.abs().max(1.0))
    }
}

/// `\hat f(μ_j) = Σ_{i ∈ I_{μ_j}} ⟨f, φ_i⟩ φ_i` for every distinct group.
pub fn wft(
    spectrum: &SignedSpectrum,
    groups: &[DistinctEigenvalueGroup],
    f: &GraphonSignal,
) -> Result<GraphonFourier> {
    let k = spectrum.cell_count();
    if f.len() != k {
        return Err(Error::PartitionMismatch);
    }
    let weights = spectrum.weights();
    let mut residual = f.values.clone();
    let mut components = Vec::with_capacity(groups.len());
    for group in groups {
        let mut signal = Array1::from_elem(k, Complex64::new(0.0, 0.0));
        for &index in &group.indices {
            let phi = spectrum.eigvec(index)?;
            let c = weighted_inner(weights, &f.values, phi);
            signal.iter_mut().zip(phi.iter()).for_each(|(s, &p)| *s += c * p);
        }
        residual.iter_mut().zip(signal.iter()).for_each(|(r, &s)| *r -= s);
        components.push(GroupComponent {
            mu: group.mu,
            indices: group.indices.clone(),
            signal: GraphonSignal::new(signal),
        });
    }
    Ok(GraphonFourier { components, residual: GraphonSignal::new(residual) })
}

/// Inverse graphon Fourier transform: components plus residual, exact by
/// construction.
pub fn iwft(transform: &GraphonFourier) -> GraphonSignal {
    let mut out = transform.residual.values.clone();
    for component in &transform.components {
        out.iter_mut().zip(component.signal.values.iter()).for_each(|(o, &s)| *o += s);
    }
    GraphonSignal::new(out)
}

/// A reference group resolved against a sample spectrum.
#[derive(Clone, Debug)]
pub struct GroupMatch {
    pub reference: DistinctEigenvalueGroup,
    /// Sample eigenpairs carrying the same signed indices.
    pub sample_indices: Vec<SignedIndex>,
    pub sample_values: Vec<f64>,
    /// Interlacing interval (s_j, r_j) around |μ_j|.
    pub interval: (f64, f64),
    /// Sample members whose |λ| falls outside the interval (diagnostic
    /// only; finite samples may transiently violate the containment).
    pub outliers: Vec<SignedIndex>,
}

/// Match sample eigenpairs to reference groups by signed index. The
/// interval around each distinct |μ| has endpoints at midpoints between
/// consecutive distinct |μ| values (half the smallest |μ| at the bottom,
/// unbounded at the top); values outside are flagged, not reassigned. A
/// sample with fewer nonzero eigenvalues of a needed sign than the
/// reference demands is reported not yet converged.
pub fn match_sample_groups(
    reference: &[DistinctEigenvalueGroup],
    sample: &SignedSpectrum,
) -> Result<Vec<GroupMatch>> {
    // interlacing cutoffs from the distinct |μ| ladder
    let mut mags: Vec<f64> = reference.iter().map(|g| g.mu.abs()).collect();
    mags.sort_by(|a, b| b.partial_cmp(a).unwrap());
    mags.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
    let interval_for = |mu: f64| -> (f64, f64) {
        let m = mu.abs();
        let pos = mags.iter().position(|&x| (x - m).abs() <= 1e-12).unwrap_or(mags.len() - 1);
        let hi = if pos == 0 { f64::INFINITY } else { 0.5 * (mags[pos - 1] + m) };
        let lo = if pos + 1 < mags.len() { 0.5 * (m + mags[pos + 1]) } else { 0.5 * m };
        (lo, hi)
    };

    let mut out = Vec::with_capacity(reference.len());
    for group in reference {
        let mut sample_indices = Vec::with_capacity(group.indices.len());
        let mut sample_values = Vec::with_capacity(group.indices.len());
        for &index in &group.indices {
            let value = sample.value(index).map_err(|_| {
                Error::NotYetConverged(format!(
                    "sample spectrum has no eigenpair at signed index {index} required by μ = {}",
                    group.mu
                ))
            })?;
            sample_indices.push(index);
            sample_values.push(value);
        }
        let interval = interval_for(group.mu);
        let outliers = sample_indices
            .iter()
            .zip(sample_values.iter())
            .filter(|(_, &v)| {
                let m = v.abs();
                !(interval.0 < m && m < interval.1) || (v > 0.0) != (group.mu > 0.0)
            })
            .map(|(&i, _)| i)
            .collect();
        out.push(GroupMatch { reference: group.clone(), sample_indices, sample_values, interval, outliers });
    }
    Ok(out)
}

/// Lifted sample-side group coefficient
/// `Σ_{i ∈ I^n_{μ_j}} ⟨f, φ_i^n⟩ (φ_i^n)^X` as a step function on the
/// sample's n-cell partition.
pub fn sample_group_projection(
    sample: &SignedSpectrum,
    matched: &GroupMatch,
    f: &GraphSignal,
) -> Result<GraphonSignal> {
    let n = sample.cell_count();
    if f.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: f.len() });
    }
    let mut out = Array1::from_elem(n, Complex64::new(0.0, 0.0));
    for &index in &matched.sample_indices {
        let phi = vertex_eigenvector(sample, index)?;
        let c: Complex64 = f.values.iter().zip(phi.iter()).map(|(a, b)| a * b.conj()).sum();
        // lift(c · φ_vertex) = c · φ_step
        let step = sample.eigvec(index)?;
        out.iter_mut().zip(step.iter()).for_each(|(o, &p)| *o += c * p);
    }
    Ok(GraphonSignal::new(out))
}

/// One row of a convergence experiment: distances between a sample's
/// eigenspace data and the reference graphon's, for one group.
#[derive(Clone, Debug)]
pub struct ConvergenceRow {
    pub n: usize,
    pub seed: u64,
    /// 1-based group position in the reference group list.
    pub group: usize,
    pub mu: f64,
    /// `‖P^{w_n}_{I_μ} − P^w_{I_μ}‖_HS` on the common refinement.
    pub hs_dist: f64,
    /// `‖P^{w_n}_{I_μ}(f_n) − P^w_{I_μ}(f)‖_2` on the common refinement.
    pub proj_dist: f64,
}

/// Convergence experiment output; rows ordered by (n, seed, group).
#[derive(Clone, Debug)]
pub struct ConvergenceReport {
    pub rows: Vec<ConvergenceRow>,
    /// Per (n, seed): Σ_j proj_dist², the bandlimited total of the theorem's
    /// second convergence statement.
    pub total_proj_sq: Vec<(usize, u64, f64)>,
    /// Weighted L² norm of the residual (kernel part) of f on w.
    pub residual_norm: f64,
}

/// Sample `𝒢(n, w)` for every (n, seed), match eigenspaces by signed index,
/// and report Hilbert–Schmidt projection distances and projected-signal
/// distances against the reference. Deterministic for fixed seed lists.
pub fn convergence_report(
    w: &StepGraphon,
    groups: &[DistinctEigenvalueGroup],
    f: &GraphonSignal,
    sizes: &[usize],
    seeds: &[u64],
) -> Result<ConvergenceReport> {
    let reference_spectrum = w.spectrum(None)?;
    let reference_wft = wft(&reference_spectrum, groups, f)?;
    let residual_norm = reference_wft.residual.weighted_norm(w.measures());
    let max_pos = groups
        .iter()
        .flat_map(|g| g.indices.iter())
        .filter(|i| i.is_positive())
        .map(|i| i.rank() + 1)
        .max()
        .unwrap_or(0);
    let max_neg = groups
        .iter()
        .flat_map(|g| g.indices.iter())
        .filter(|i| !i.is_positive())
        .map(|i| i.rank() + 1)
        .max()
        .unwrap_or(0);

    let mut rows = Vec::new();
    let mut total_proj_sq = Vec::new();
    for &n in sizes {
        for &seed in seeds {
            let record = sample_w_random(w, n, seed);
            let wn = StepGraphon::from_graph(&record.graph);
            let sample_spectrum = wn.spectrum_top(max_pos, max_neg, None)?;
            let matches = match_sample_groups(groups, &sample_spectrum)?;
            let fn_vertex = sampled_signal(f, &record, SampledSignalMode::Evaluate)?;

            let (wn_refined, w_refined, map_n, map_w) = common_refinement(&wn, w);
            let refined_measures = wn_refined.measures().clone();
            let mut sum_sq = 0.0f64;
            for (j, matched) in matches.iter().enumerate() {
                let p_sample = projection_kernel(&sample_spectrum, &matched.sample_indices)?
                    .refine(&map_n.source_cell, refined_measures.clone());
                let p_ref = projection_kernel(&reference_spectrum, &matched.reference.indices)?
                    .refine(&map_w.source_cell, refined_measures.clone());
                let hs = hs_distance(&p_sample, &p_ref)?;

                let sample_component =
                    sample_group_projection(&sample_spectrum, matched, &fn_vertex)?;
                let ref_component = &reference_wft.components[j].signal;
                let mut dist_sq = 0.0f64;
                for (cell, &m) in refined_measures.iter().enumerate() {
                    let a = sample_component.values[map_n.source_cell[cell]];
                    let b = ref_component.values[map_w.source_cell[cell]];
                    dist_sq += m * (a - b).norm_sqr();
                }
                let proj_dist = dist_sq.sqrt();
                sum_sq += dist_sq;
                rows.push(ConvergenceRow {
                    n,
                    seed,
                    group: j + 1,
                    mu: matched.reference.mu,
                    hs_dist: hs,
                    proj_dist,
                });
            }
            total_proj_sq.push((n, seed, sum_sq));
            let _ = w_refined;
        }
    }
    Ok(ConvergenceReport { rows, total_proj_sq, residual_norm })
}

/// `h(x) = Σ_k h_k x^k` by Horner evaluation.
pub fn eval_poly(coefficients: &[f64], x: f64) -> f64 {
    coefficients.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Polynomial filter on a graph: `Σ_k h_k A^k f`.
pub fn filter_graph(graph: &Graph, coefficients: &[f64], f: &GraphSignal) -> Result<GraphSignal> {
    let n = graph.vertex_count();
    if f.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: f.len() });
    }
    let mut acc = GraphSignal::zeros(n);
    for &c in coefficients.iter().rev() {
        acc = graph.apply_adjacency(&acc)?;
        acc.values.iter_mut().zip(f.values.iter()).for_each(|(a, &b)| *a += c * b);
    }
    Ok(acc)
}

/// Polynomial filter on a graphon: `h₀ f + Σ_{k≥1} h_k T_w^k f`.
pub fn filter_graphon(
    w: &StepGraphon,
    coefficients: &[f64],
    f: &GraphonSignal,
) -> Result<GraphonSignal> {
    let k = w.cell_count();
    if f.len() != k {
        return Err(Error::PartitionMismatch);
    }
    let mut acc = GraphonSignal::zeros(k);
    for &c in coefficients.iter().rev() {
        acc = w.apply(&acc)?;
        acc.values.iter_mut().zip(f.values.iter()).for_each(|(a, &b)| *a += c * b);
    }
    Ok(acc)
}

/// Filter response at each distinct eigenvalue: `h(μ_j)`.
pub fn graphon_filter_response(groups: &[DistinctEigenvalueGroup], coefficients: &[f64]) -> Vec<f64> {
    groups.iter().map(|g| eval_poly(coefficients, g.mu)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{cayley_graphon, symmetric_group_3, CayleyFunction};
    use crate::graphon::lift_vertex_values;
    use crate::linalg::group_distinct;
    use approx::assert_abs_diff_eq;
    use ndarray::Array2;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random::<f64>() < p {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    fn random_graph_signal(n: usize, rng: &mut ChaCha8Rng) -> GraphSignal {
        GraphSignal::new(Array1::from_shape_fn(n, |_| {
            Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
        }))
    }

    fn s3_graphon() -> StepGraphon {
        let (group, _) = symmetric_group_3();
        let gamma = CayleyFunction::new(&group, vec![0.6, 0.1, 0.3, 0.0, 0.0, 0.0]).unwrap();
        cayley_graphon(&group, &gamma).unwrap()
    }

    #[test]
    fn gft_of_eigenvector_is_a_delta() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let g = random_graph(12, 0.5, &mut rng);
        let spectrum = StepGraphon::from_graph(&g).spectrum(None).unwrap();
        let idx = SignedIndex::positive(2);
        let f = GraphSignal::new(vertex_eigenvector(&spectrum, idx).unwrap());
        let transform = gft(&spectrum, &f).unwrap();
        for (i, c) in &transform.coefficients {
            let expect = if *i == idx { 1.0 } else { 0.0 };
            assert!((c.norm() - expect).abs() < 1e-10, "coefficient at {i}");
        }
        assert!(transform.residual.as_ref().unwrap().norm() < 1e-10);

        let zero = gft(&spectrum, &GraphSignal::zeros(12)).unwrap();
        assert!(zero.energy() < 1e-30);
    }

    #[test]
    fn gft_parseval_and_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..5 {
            let n = rng.random_range(4..24);
            let g = random_graph(n, 0.5, &mut rng);
            let spectrum = StepGraphon::from_graph(&g).spectrum(None).unwrap();
            let f = random_graph_signal(n, &mut rng);
            let transform = gft(&spectrum, &f).unwrap();
            // Parseval over the full basis: coefficients plus residual
            let total = transform.energy() + transform.residual.as_ref().unwrap().norm().powi(2);
            assert_abs_diff_eq!(total, f.norm().powi(2), epsilon = 1e-9);
            let back = igft(&spectrum, &transform).unwrap();
            let err: f64 =
                back.values.iter().zip(f.values.iter()).map(|(a, b)| (a - b).norm_sqr()).sum();
            assert!(err.sqrt() < 1e-10);
        }
    }

    #[test]
    fn igft_requires_residual_or_full_rank() {
        // a star graph has a large adjacency kernel
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let spectrum = StepGraphon::from_graph(&g).spectrum(None).unwrap();
        assert!(spectrum.zero_rank() > 0);
        let f = GraphSignal::from_real(&[1.0, 2.0, 0.0, -1.0, 0.5]);
        let mut transform = gft(&spectrum, &f).unwrap();
        transform.residual = None;
        assert!(matches!(igft(&spectrum, &transform), Err(Error::IncompleteBasis)));
    }

    #[test]
    fn truncated_coefficients_reproduce_projection() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let g = random_graph(10, 0.6, &mut rng);
        let w = StepGraphon::from_graph(&g);
        let spectrum = w.spectrum(None).unwrap();
        let f = random_graph_signal(10, &mut rng);
        let transform = gft(&spectrum, &f).unwrap();
        // keep only the +1/+2 band and compare against the projection kernel
        let band = [SignedIndex::positive(1), SignedIndex::positive(2)];
        let banded = GraphFourier {
            coefficients: transform
                .coefficients
                .iter()
                .filter(|(i, _)| band.contains(i))
                .copied()
                .collect(),
            residual: None,
        };
        // reconstruct by hand: igft would reject the truncated basis
        let mut rec = Array1::from_elem(10, Complex64::new(0.0, 0.0));
        for &(i, c) in &banded.coefficients {
            let phi = vertex_eigenvector(&spectrum, i).unwrap();
            rec.iter_mut().zip(phi.iter()).for_each(|(o, &p)| *o += c * p);
        }
        let kernel = projection_kernel(&spectrum, &band).unwrap();
        let lifted = lift_vertex_values(&f);
        let projected = kernel.apply(&lifted.values).unwrap();
        // unlift: divide by √n
        let scale = 1.0 / 10f64.sqrt();
        for v in 0..10 {
            assert!((rec[v] - projected[v] * scale).norm() < 1e-10);
        }
    }

    #[test]
    fn wft_components_and_residual() {
        let w = s3_graphon();
        let spectrum = w.spectrum(None).unwrap();
        let groups = group_distinct(&spectrum, 1e-9);
        assert_eq!(groups.len(), 4);

        // a signal inside the μ₁ eigenspace comes back as its own component
        let phi1 = GraphonSignal::new(spectrum.eigvec(SignedIndex::positive(1)).unwrap().clone());
        let transform = wft(&spectrum, &groups, &phi1).unwrap();
        for (j, component) in transform.components.iter().enumerate() {
            let norm = component.signal.weighted_norm(w.measures());
            if j == 0 {
                assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-10);
            } else {
                assert!(norm < 1e-10);
            }
        }
        assert!(transform.residual.weighted_norm(w.measures()) < 1e-10);

        // lifted indicator of cell 1: the μ₂ component carries
        // ‖P₂ f‖² = 6 · (1/36) · 2 = 1/3 by the constant-diagonal argument
        let mut vals = vec![0.0; 6];
        vals[0] = 6f64.sqrt();
        let f = GraphonSignal::from_real(&vals);
        let transform = wft(&spectrum, &groups, &f).unwrap();
        let norm2 = transform.components[1].signal.weighted_norm(w.measures()).powi(2);
        assert_abs_diff_eq!(norm2, 1.0 / 3.0, epsilon = 1e-10);

        // a full-rank graphon leaves no residual for any signal
        let full = iwft(&transform);
        for (a, b) in full.values.iter().zip(f.values.iter()) {
            assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn wft_residual_is_kernel_part() {
        // rank-deficient graphon: two identical cells
        let w = StepGraphon::uniform(Array2::from_elem((2, 2), 0.5)).unwrap();
        let spectrum = w.spectrum(None).unwrap();
        assert_eq!(spectrum.zero_rank(), 1);
        let groups = group_distinct(&spectrum, 1e-9);
        // f orthogonal to the constant: all components vanish, residual = f
        let f = GraphonSignal::from_real(&[1.0, -1.0]);
        let transform = wft(&spectrum, &groups, &f).unwrap();
        for component in &transform.components {
            assert!(component.signal.weighted_norm(w.measures()) < 1e-12);
        }
        for (a, b) in transform.residual.values.iter().zip(f.values.iter()) {
            assert!((a - b).norm() < 1e-12);
        }
        let back = iwft(&transform);
        for (a, b) in back.values.iter().zip(f.values.iter()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn group_component_is_basis_independent() {
        let w = s3_graphon();
        let spectrum = w.spectrum(None).unwrap();
        let groups = group_distinct(&spectrum, 1e-9);
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let f = GraphonSignal::new(Array1::from_shape_fn(6, |_| {
            Complex64::new(rng.random::<f64>(), rng.random::<f64>())
        }));
        let before = wft(&spectrum, &groups, &f).unwrap();
        let mut rotated = spectrum.clone();
        let th = 0.93f64;
        let u = ndarray::array![
            [Complex64::new(th.cos(), 0.0), Complex64::new(-th.sin(), 0.0)],
            [Complex64::new(th.sin(), 0.0), Complex64::new(th.cos(), 0.0)]
        ];
        rotated.rotate_eigenspace(&groups[1].indices, &u).unwrap();
        let after = wft(&rotated, &groups, &f).unwrap();
        // individual coefficients differ, but the group component agrees
        let a = &before.components[1].signal.values;
        let b = &after.components[1].signal.values;
        let dev: f64 = a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm_sqr()).sum();
        assert!(dev.sqrt() < 1e-10);
    }

    #[test]
    fn gft_wft_consistency_on_step_graphons() {
        // \hat{f^X}(λ) = Σ_i \hat f(φ_i) φ_i^X on w_G
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let g = random_graph(14, 0.5, &mut rng);
        let w = StepGraphon::from_graph(&g);
        let spectrum = w.spectrum(None).unwrap();
        let groups = group_distinct(&spectrum, 1e-9);
        let f = random_graph_signal(14, &mut rng);
        let lifted = lift_vertex_values(&f);
        let graphon_side = wft(&spectrum, &groups, &lifted).unwrap();
        let graph_side = gft(&spectrum, &f).unwrap();
        for (j, group) in groups.iter().enumerate() {
            let mut combo = Array1::from_elem(14, Complex64::new(0.0, 0.0));
            for &i in &group.indices {
                let c = graph_side.coefficient(i).unwrap();
                let step = spectrum.eigvec(i).unwrap();
                combo.iter_mut().zip(step.iter()).for_each(|(o, &p)| *o += c * p);
            }
            let dev: f64 = combo
                .iter()
                .zip(graphon_side.components[j].signal.values.iter())
                .map(|(a, b)| (a - b).norm_sqr())
                .sum();
            assert!(dev.sqrt() < 1e-10);
        }
    }

    #[test]
    fn matching_identity_and_shortfall() {
        let w = s3_graphon();
        let spectrum = w.spectrum(None).unwrap();
        let groups = group_distinct(&spectrum, 1e-9);
        // the reference is its own sample: identity matching, no outliers
        let matches = match_sample_groups(&groups, &spectrum).unwrap();
        for (m, g) in matches.iter().zip(groups.iter()) {
            assert_eq!(m.sample_indices, g.indices);
            assert!(m.outliers.is_empty());
            for (&v, &i) in m.sample_values.iter().zip(g.indices.iter()) {
                assert_eq!(v, spectrum.value(i).unwrap());
            }
        }
        // a sample spectrum with too few positive eigenpairs is not yet
        // converged
        let short = w.spectrum_top(2, 0, None).unwrap();
        assert!(matches!(match_sample_groups(&groups, &short), Err(Error::NotYetConverged(_))));
    }

    #[test]
    fn matching_flags_noise_eigenvalues() {
        // operator [[0.6, 0.2], [0.2, 0.5]]/2 has eigenvalues ≈ 0.378 and
        // 0.172; a reference expecting both copies of 0.378 sees the second
        // one fall below the interval floor |μ|/2 and flags it
        let w = StepGraphon::uniform(ndarray::array![[0.6, 0.2], [0.2, 0.5]]).unwrap();
        let sample = w.spectrum(None).unwrap();
        assert_eq!(sample.positive_count(), 2);
        let mu = sample.value(SignedIndex::positive(1)).unwrap();
        let noisy_reference = vec![DistinctEigenvalueGroup {
            mu,
            indices: vec![SignedIndex::positive(1), SignedIndex::positive(2)],
        }];
        let matched = match_sample_groups(&noisy_reference, &sample).unwrap();
        assert_eq!(matched[0].interval.0, mu / 2.0);
        assert_eq!(matched[0].outliers, vec![SignedIndex::positive(2)]);
        let tight_reference =
            vec![DistinctEigenvalueGroup { mu, indices: vec![SignedIndex::positive(1)] }];
        let matched = match_sample_groups(&tight_reference, &sample).unwrap();
        assert!(matched[0].outliers.is_empty());
    }

    #[test]
    fn self_sample_projection_matches_wft() {
        // a 0/1 step graphon fed as its own sample reproduces the wft
        // component exactly
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let w = StepGraphon::from_graph(&g);
        let spectrum = w.spectrum(None).unwrap();
        let groups = group_distinct(&spectrum, 1e-9);
        let f = GraphSignal::from_real(&[1.0, 0.0, 0.0, 0.0]);
        let lifted = lift_vertex_values(&f);
        let reference = wft(&spectrum, &groups, &lifted).unwrap();
        let matches = match_sample_groups(&groups, &spectrum).unwrap();
        for (j, m) in matches.iter().enumerate() {
            let got = sample_group_projection(&spectrum, m, &f).unwrap();
            let dev: f64 = got
                .values
                .iter()
                .zip(reference.components[j].signal.values.iter())
                .map(|(a, b)| (a - b).norm_sqr())
                .sum();
            assert!(dev.sqrt() < 1e-10);
        }
        // zero signal projects to zero
        let zero = sample_group_projection(&spectrum, &matches[0], &GraphSignal::zeros(4)).unwrap();
        assert!(zero.weighted_norm(w.measures()) < 1e-14);
    }

    #[test]
    fn filters_scalar_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let g = random_graph(9, 0.5, &mut rng);
        let f = random_graph_signal(9, &mut rng);
        // h = (1) is the identity
        let out = filter_graph(&g, &[1.0], &f).unwrap();
        for (a, b) in out.values.iter().zip(f.values.iter()) {
            assert!((a - b).norm() < 1e-14);
        }
        // h = (0, 1) applies A once
        let out = filter_graph(&g, &[0.0, 1.0], &f).unwrap();
        let af = g.apply_adjacency(&f).unwrap();
        for (a, b) in out.values.iter().zip(af.values.iter()) {
            assert!((a - b).norm() < 1e-12);
        }
        // an eigenvector scales by h(λ)
        let w = StepGraphon::from_graph(&g);
        let spectrum = w.spectrum(None).unwrap();
        let h = [0.3, -1.2, 0.4, 2.0];
        let idx = SignedIndex::positive(1);
        let lambda_a = spectrum.value(idx).unwrap() * 9.0; // adjacency scale
        let phi = GraphSignal::new(vertex_eigenvector(&spectrum, idx).unwrap());
        let out = filter_graph(&g, &h, &phi).unwrap();
        let target = eval_poly(&h, lambda_a);
        for (o, p) in out.values.iter().zip(phi.values.iter()) {
            assert!((o - target * p).norm() < 1e-10);
        }
    }

    #[test]
    fn graphon_filter_commutes_with_wft() {
        // \hat{Hf}(μ_j) = h(μ_j) \hat f(μ_j) for random polynomials
        let w = s3_graphon();
        let spectrum = w.spectrum(None).unwrap();
        let groups = group_distinct(&spectrum, 1e-9);
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..10 {
            let deg = rng.random_range(0..=5);
            let h: Vec<f64> = (0..=deg).map(|_| 2.0 * rng.random::<f64>() - 1.0).collect();
            let f = GraphonSignal::new(Array1::from_shape_fn(6, |_| {
                Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
            }));
            let hf = filter_graphon(&w, &h, &f).unwrap();
            let lhs = wft(&spectrum, &groups, &hf).unwrap();
            let rhs = wft(&spectrum, &groups, &f).unwrap();
            let responses = graphon_filter_response(&groups, &h);
            for j in 0..groups.len() {
                let dev: f64 = lhs.components[j]
                    .signal
                    .values
                    .iter()
                    .zip(rhs.components[j].signal.values.iter())
                    .map(|(a, b)| (a - responses[j] * b).norm_sqr())
                    .sum();
                assert!(dev.sqrt() < 1e-10);
            }
        }
        // response examples
        assert_eq!(graphon_filter_response(&groups, &[1.0]), vec![1.0; 4]);
        let mus: Vec<f64> = groups.iter().map(|g| g.mu).collect();
        assert_eq!(graphon_filter_response(&groups, &[0.0, 1.0]), mus);
        let squares = graphon_filter_response(&groups, &[0.0, 0.0, 1.0]);
        for (s, m) in squares.iter().zip(mus.iter()) {
            assert_abs_diff_eq!(*s, m * m, epsilon = 1e-15);
        }
    }

    #[test]
    fn convergence_report_zero_for_self_sample() {
        // feeding w as its own "sample" via the blow-up of size 6 reproduces
        // zero distances (the 0/1 check needs a 0/1 graphon, so use a graph)
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let w = StepGraphon::from_graph(&g);
        let spectrum = w.spectrum(None).unwrap();
        let groups = group_distinct(&spectrum, 1e-9);
        let f = GraphonSignal::from_real(&[1.0, 0.0, 0.0]);
        let reference = wft(&spectrum, &groups, &f).unwrap();
        let matches = match_sample_groups(&groups, &spectrum).unwrap();
        for (j, m) in matches.iter().enumerate() {
            let p_sample = projection_kernel(&spectrum, &m.sample_indices).unwrap();
            let p_ref = projection_kernel(&spectrum, &m.reference.indices).unwrap();
            assert!(hs_distance(&p_sample, &p_ref).unwrap() < 1e-12);
            let fv = GraphSignal::new(f.values.map(|&z| z / 3f64.sqrt()));
            let got = sample_group_projection(&spectrum, m, &fv).unwrap();
            let dev: f64 = got
                .values
                .iter()
                .zip(reference.components[j].signal.values.iter())
                .map(|(a, b)| (a - b).norm_sqr())
                .sum();
            assert!(dev.sqrt() < 1e-10);
        }
    }

    #[test]
    fn convergence_report_shrinks_with_n() {
        // S₃ graphon, honest w-random samples: distances at n = 360 are
        // smaller than at n = 60 in median over 3 seeds
        let w = s3_graphon();
        let spectrum = w.spectrum(None).unwrap();
        let groups = group_distinct(&spectrum, 1e-9);
        let mut vals = vec![0.0; 6];
        vals[0] = 6f64.sqrt();
        let f = GraphonSignal::from_real(&vals);
        let report = convergence_report(&w, &groups, &f, &[60, 360], &[0, 1, 2]).unwrap();
        let median = |n: usize, pick: fn(&ConvergenceRow) -> f64| -> f64 {
            let mut xs: Vec<f64> = report
                .rows
                .iter()
                .filter(|r| r.n == n && r.group == 2)
                .map(pick)
                .collect();
            xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
            xs[xs.len() / 2]
        };
        assert!(median(360, |r| r.hs_dist) < median(60, |r| r.hs_dist));
        assert!(median(360, |r| r.proj_dist) < median(60, |r| r.proj_dist));
        // rows are ordered by (n, seed, group)
        let keys: Vec<(usize, u64, usize)> =
            report.rows.iter().map(|r| (r.n, r.seed, r.group)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        // f is bandlimited on the full-rank S₃ graphon
        assert!(report.residual_norm < 1e-10);
    }
}
