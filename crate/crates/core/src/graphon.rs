//! Step-graphon data model: finite partitions of [0, 1] carrying symmetric
//! block values, the graph ↔ graphon embedding, signal lifting, operator
//! application, Lᵖ norms, and partition alignment.
//!
//! Partitions are always ordered consecutive intervals of [0, 1], so a step
//! graphon is fully described by its cell measures and a symmetric value
//! matrix. Graphs embed by splitting [0, 1] into n equal cells with the
//! adjacency entries as values.

use ndarray::{Array1, Array2};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, SignedSpectrum};

/// Symmetric step function on a finite partition of [0, 1] with values in
/// [0, 1]; the computational stand-in for graphs, block models and graphons.
#[derive(Clone, Debug, PartialEq)]
pub struct StepGraphon {
    measures: Array1<f64>,
    values: Array2<f64>,
}

impl StepGraphon {
    /// Validates symmetry (1e-12), the value range, and that the measures
    /// are positive and sum to one (1e-12).
    pub fn new(values: Array2<f64>, measures: Array1<f64>) -> Result<Self> {
        let k = values.nrows();
        if values.ncols() != k {
            return Err(Error::DimensionMismatch { expected: k, found: values.ncols() });
        }
        if measures.len() != k {
            return Err(Error::DimensionMismatch { expected: k, found: measures.len() });
        }
        if measures.iter().any(|&m| m <= 0.0) {
            return Err(Error::BadMeasures("measures must be positive".into()));
        }
        let sum: f64 = measures.sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::BadMeasures(format!("measures sum to {sum}, expected 1")));
        }
        for r in 0..k {
            for c in 0..k {
                let v = values[[r, c]];
                if !(0.0..=1.0).contains(&v) {
                    return Err(Error::ValueOutOfRange { row: r, col: c, value: v });
                }
            }
        }
        let mut max_dev = 0.0f64;
        for r in 0..k {
            for c in (r + 1)..k {
                max_dev = max_dev.max((values[[r, c]] - values[[c, r]]).abs());
            }
        }
        if max_dev > 1e-12 {
            return Err(Error::NotSymmetric { max_dev });
        }
        Ok(StepGraphon { measures, values })
    }

    /// Step graphon on k equal cells.
    pub fn uniform(values: Array2<f64>) -> Result<Self> {
        let k = values.nrows();
        StepGraphon::new(values, Array1::from_elem(k, 1.0 / k as f64))
    }

    /// Constant graphon `w ≡ p` on a single cell.
    pub fn constant(p: f64) -> Result<Self> {
        StepGraphon::new(Array2::from_elem((1, 1), p), Array1::from_elem(1, 1.0))
    }

    /// The 0/1 step graphon `w_G`: n equal cells, adjacency entries as values.
    pub fn from_graph(graph: &Graph) -> Self {
        let n = graph.vertex_count();
        let values = Array2::from_shape_fn((n, n), |(r, c)| f64::from(graph.adjacency()[[r, c]]));
        StepGraphon {
            measures: Array1::from_elem(n, 1.0 / n as f64),
            values,
        }
    }

    pub fn cell_count(&self) -> usize {
        self.measures.len()
    }

    pub fn measures(&self) -> &Array1<f64> {
        &self.measures
    }

    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }

    /// Interval breakpoints 0 = b₀ < b₁ < … < b_k = 1 of the partition.
    pub fn breakpoints(&self) -> Vec<f64> {
        breakpoints(&self.measures)
    }

    /// Cell containing the point x ∈ [0, 1).
    pub fn cell_of(&self, x: f64) -> usize {
        let bp = self.breakpoints();
        cell_of(&bp, x)
    }

    /// Spectrum of the associated integral operator restricted to step
    /// functions, which captures every nonzero eigenpair.
    pub fn spectrum(&self, zero_threshold: Option<f64>) -> Result<SignedSpectrum> {
        linalg::eigh_symmetric(&self.values, &self.measures, zero_threshold)
    }

    /// Truncated spectrum: the `n_pos` largest and `n_neg` most negative
    /// eigenpairs only. Intended for large samples where the full
    /// eigendecomposition is not needed.
    pub fn spectrum_top(
        &self,
        n_pos: usize,
        n_neg: usize,
        zero_threshold: Option<f64>,
    ) -> Result<SignedSpectrum> {
        linalg::eigh_symmetric_top(&self.values, &self.measures, n_pos, n_neg, zero_threshold)
    }

    /// `(T_w f)_c = Σ_c' w_{cc'} m_c' f_c'`.
    pub fn apply(&self, f: &GraphonSignal) -> Result<GraphonSignal> {
        let k = self.cell_count();
        if f.values.len() != k {
            return Err(Error::PartitionMismatch);
        }
        let out = Array1::from_shape_fn(k, |r| {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in 0..k {
                acc += self.values[[r, c]] * self.measures[c] * f.values[c];
            }
            acc
        });
        Ok(GraphonSignal::new(out))
    }

    /// Pointwise difference as a signed step kernel; partitions must agree.
    pub fn difference(&self, other: &StepGraphon) -> Result<StepKernel> {
        if !same_partition(&self.measures, &other.measures) {
            return Err(Error::PartitionMismatch);
        }
        Ok(StepKernel {
            measures: self.measures.clone(),
            values: &self.values - &other.values,
        })
    }

    /// `(L¹, L²)` norms under the product measure.
    pub fn lp_norms(&self) -> (f64, f64) {
        lp_norms(&self.measures, &self.values)
    }

    pub fn as_kernel(&self) -> StepKernel {
        StepKernel { measures: self.measures.clone(), values: self.values.clone() }
    }
}

/// Signed step kernel on a partition of [0, 1]: an element of the linear
/// span of graphons, e.g. a difference of two graphons. Values in [−1, 1].
#[derive(Clone, Debug, PartialEq)]
pub struct StepKernel {
    pub measures: Array1<f64>,
    pub values: Array2<f64>,
}

impl StepKernel {
    pub fn cell_count(&self) -> usize {
        self.measures.len()
    }

    pub fn lp_norms(&self) -> (f64, f64) {
        lp_norms(&self.measures, &self.values)
    }
}

fn lp_norms(measures: &Array1<f64>, values: &Array2<f64>) -> (f64, f64) {
    let k = measures.len();
    let (mut l1, mut l2) = (0.0f64, 0.0f64);
    for r in 0..k {
        for c in 0..k {
            let w = measures[r] * measures[c];
            l1 += w * values[[r, c]].abs();
            l2 += w * values[[r, c]].powi(2);
        }
    }
    (l1, l2.sqrt())
}

fn same_partition(a: &Array1<f64>, b: &Array1<f64>) -> bool {
    a.len() == b.len() && a.iter().zip(b.iter()).all(|(x, y)| (x - y).abs() <= 1e-12)
}

fn breakpoints(measures: &Array1<f64>) -> Vec<f64> {
    let mut bp = Vec::with_capacity(measures.len() + 1);
    let mut acc = 0.0;
    bp.push(0.0);
    for &m in measures {
        acc += m;
        bp.push(acc);
    }
    *bp.last_mut().unwrap() = 1.0;
    bp
}

fn cell_of(bp: &[f64], x: f64) -> usize {
    let k = bp.len() - 1;
    match bp.binary_search_by(|b| b.partial_cmp(&x).unwrap()) {
        Ok(i) => i.min(k - 1),
        Err(i) => (i - 1).min(k - 1),
    }
}

/// Simple undirected graph held as a dense 0/1 adjacency matrix with a
/// hollow diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    adjacency: Array2<u8>,
}

impl Graph {
    pub fn new(adjacency: Array2<u8>) -> Result<Self> {
        let n = adjacency.nrows();
        if adjacency.ncols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: adjacency.ncols() });
        }
        for r in 0..n {
            if adjacency[[r, r]] != 0 {
                return Err(Error::BadAdjacency(format!("nonzero diagonal at {r}")));
            }
            for c in 0..n {
                let v = adjacency[[r, c]];
                if v > 1 {
                    return Err(Error::BadAdjacency(format!("entry {v} at ({r}, {c})")));
                }
                if v != adjacency[[c, r]] {
                    return Err(Error::BadAdjacency(format!("asymmetry at ({r}, {c})")));
                }
            }
        }
        Ok(Graph { adjacency })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adjacency: Array2::zeros((n, n)) }
    }

    pub fn complete(n: usize) -> Self {
        let adjacency = Array2::from_shape_fn((n, n), |(r, c)| u8::from(r != c));
        Graph { adjacency }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = Array2::zeros((n, n));
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::BadAdjacency(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::BadAdjacency(format!("loop at {u}")));
            }
            adjacency[[u, v]] = 1;
            adjacency[[v, u]] = 1;
        }
        Ok(Graph { adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.nrows()
    }

    pub fn adjacency(&self) -> &Array2<u8> {
        &self.adjacency
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|&v| v as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if self.adjacency[[u, v]] == 1 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn set_edge(&mut self, u: usize, v: usize) {
        self.adjacency[[u, v]] = 1;
        self.adjacency[[v, u]] = 1;
    }

    /// Adjacency as f64, for matrix arithmetic.
    pub fn adjacency_f64(&self) -> Array2<f64> {
        self.adjacency.map(|&v| f64::from(v))
    }

    /// `A f` for a complex vertex signal.
    pub fn apply_adjacency(&self, f: &GraphSignal) -> Result<GraphSignal> {
        let n = self.vertex_count();
        if f.values.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: f.values.len() });
        }
        let out = Array1::from_shape_fn(n, |r| {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in 0..n {
                if self.adjacency[[r, c]] == 1 {
                    acc += f.values[c];
                }
            }
            acc
        });
        Ok(GraphSignal::new(out))
    }
}

/// Complex signal on the vertices of a graph.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphSignal {
    pub values: Array1<Complex64>,
}

impl GraphSignal {
    pub fn new(values: Array1<Complex64>) -> Self {
        GraphSignal { values }
    }

    pub fn from_real(values: &[f64]) -> Self {
        GraphSignal { values: values.iter().map(|&v| Complex64::new(v, 0.0)).collect() }
    }

    pub fn zeros(n: usize) -> Self {
        GraphSignal { values: Array1::from_elem(n, Complex64::new(0.0, 0.0)) }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Euclidean norm in ℂⁿ.
    pub fn norm(&self) -> f64 {
        self.values.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `⟨f, g⟩ = Σ_v f(v) conj(g(v))`.
    pub fn inner(&self, other: &GraphSignal) -> Complex64 {
        self.values.iter().zip(other.values.iter()).map(|(a, b)| a * b.conj()).sum()
    }
}

/// Complex step function on the cells of a partition of [0, 1].
#[derive(Clone, Debug, PartialEq)]
pub struct GraphonSignal {
    pub values: Array1<Complex64>,
}

impl GraphonSignal {
    pub fn new(values: Array1<Complex64>) -> Self {
        GraphonSignal { values }
    }

    pub fn from_real(values: &[f64]) -> Self {
        GraphonSignal { values: values.iter().map(|&v| Complex64::new(v, 0.0)).collect() }
    }

    pub fn zeros(k: usize) -> Self {
        GraphonSignal { values: Array1::from_elem(k, Complex64::new(0.0, 0.0)) }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Weighted L² norm under the given cell measures.
    pub fn weighted_norm(&self, measures: &Array1<f64>) -> f64 {
        linalg::weighted_norm(measures, &self.values)
    }

    pub fn weighted_inner(&self, other: &GraphonSignal, measures: &Array1<f64>) -> Complex64 {
        linalg::weighted_inner(measures, &self.values, &other.values)
    }
}

/// Lift a vertex signal to the n-cell uniform partition: cell v carries
/// `√n · f(v)`, making the lift an isometry (`⟨f^X, g^X⟩ = ⟨f, g⟩`).
pub fn lift_signal(f: &GraphSignal, graph: &Graph) -> Result<GraphonSignal> {
    let n = graph.vertex_count();
    if f.values.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: f.values.len() });
    }
    let scale = (n as f64).sqrt();
    Ok(GraphonSignal::new(f.values.map(|&z| scale * z)))
}

/// Lift without a graph at hand; the partition is the uniform one on
/// `f.len()` cells.
pub fn lift_vertex_values(f: &GraphSignal) -> GraphonSignal {
    let scale = (f.len() as f64).sqrt();
    GraphonSignal::new(f.values.map(|&z| scale * z))
}

/// Map from refined cells back to the source partition's cells.
#[derive(Clone, Debug, PartialEq)]
pub struct RefinementMap {
    pub source_cell: Vec<usize>,
}

/// Overlay two interval partitions and re-express both graphons exactly on
/// the merged breakpoint set. Zero-length refined cells are dropped.
pub fn common_refinement(
    w1: &StepGraphon,
    w2: &StepGraphon,
) -> (StepGraphon, StepGraphon, RefinementMap, RefinementMap) {
    let b1 = w1.breakpoints();
    let b2 = w2.breakpoints();
    let mut merged: Vec<f64> = b1.iter().chain(b2.iter()).copied().collect();
    merged.sort_by(|a, b| a.partial_cmp(b).unwrap());
    merged.dedup_by(|a, b| (*a - *b).abs() <= 1e-13);
    // guard the endpoints
    merged[0] = 0.0;
    *merged.last_mut().unwrap() = 1.0;

    let mut measures = Vec::new();
    let mut map1 = Vec::new();
    let mut map2 = Vec::new();
    for win in merged.windows(2) {
        let width = win[1] - win[0];
        if width <= 1e-13 {
            continue;
        }
        let mid = 0.5 * (win[0] + win[1]);
        measures.push(width);
        map1.push(cell_of(&b1, mid));
        map2.push(cell_of(&b2, mid));
    }
    let k = measures.len();
    let measures = Array1::from_vec(measures);
    let v1 = Array2::from_shape_fn((k, k), |(r, c)| w1.values[[map1[r], map1[c]]]);
    let v2 = Array2::from_shape_fn((k, k), |(r, c)| w2.values[[map2[r], map2[c]]]);
    (
        StepGraphon { measures: measures.clone(), values: v1 },
        StepGraphon { measures, values: v2 },
        RefinementMap { source_cell: map1 },
        RefinementMap { source_cell: map2 },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SignedIndex;
    use approx::assert_abs_diff_eq;
    use ndarray::array;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn graph_to_graphon() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let w = StepGraphon::from_graph(&g);
        assert_eq!(w.measures(), &array![0.5, 0.5]);
        assert_eq!(w.values(), &array![[0.0, 1.0], [1.0, 0.0]]);

        let w = StepGraphon::from_graph(&Graph::empty(5));
        assert!(w.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn triangle_spectrum() {
        // eig(K₃ adjacency) = (2, −1, −1); operator eigenvalues divide by n
        let w = StepGraphon::from_graph(&Graph::complete(3));
        let s = w.spectrum(None).unwrap();
        assert_abs_diff_eq!(s.value(SignedIndex::positive(1)).unwrap(), 2.0 / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.value(SignedIndex::negative(1)).unwrap(), -1.0 / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.value(SignedIndex::negative(2)).unwrap(), -1.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn constant_graphon_spectrum() {
        let w = StepGraphon::constant(0.42).unwrap();
        let s = w.spectrum(None).unwrap();
        assert_eq!(s.positive_count(), 1);
        assert_abs_diff_eq!(s.value(SignedIndex::positive(1)).unwrap(), 0.42, epsilon = 1e-14);
    }

    #[test]
    fn lift_isometry() {
        // e₁ on n = 4: step value 2 on the first cell, unit L² norm
        let f = GraphSignal::from_real(&[1.0, 0.0, 0.0, 0.0]);
        let g = Graph::empty(4);
        let lifted = lift_signal(&f, &g).unwrap();
        assert_abs_diff_eq!(lifted.values[0].re, 2.0, epsilon = 1e-15);
        let w = Array1::from_elem(4, 0.25);
        assert_abs_diff_eq!(lifted.weighted_norm(&w), 1.0, epsilon = 1e-12);

        // all-ones on n vertices lifts to the constant √n
        let n = 9;
        let f = GraphSignal::from_real(&vec![1.0; n]);
        let lifted = lift_signal(&f, &Graph::empty(n)).unwrap();
        assert!(lifted.values.iter().all(|z| (z.re - 3.0).abs() < 1e-12));
        let w = Array1::from_elem(n, 1.0 / n as f64);
        assert_abs_diff_eq!(lifted.weighted_norm(&w), f.norm(), epsilon = 1e-12);

        // indicator of 1000 vertices out of 6000 has lift norm √1000
        let n = 6000;
        let mut vals = vec![0.0; n];
        vals[..1000].fill(1.0);
        let f = GraphSignal::from_real(&vals);
        let lifted = lift_signal(&f, &Graph::empty(n)).unwrap();
        let w = Array1::from_elem(n, 1.0 / n as f64);
        assert_abs_diff_eq!(lifted.weighted_norm(&w), 1000f64.sqrt(), epsilon = 1e-9);
    }

    #[test]
    fn lift_isometry_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.random_range(1..40);
            let mk = |rng: &mut ChaCha8Rng| {
                GraphSignal::new(Array1::from_shape_fn(n, |_| {
                    Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
                }))
            };
            let f = mk(&mut rng);
            let g = mk(&mut rng);
            let w = Array1::from_elem(n, 1.0 / n as f64);
            let lf = lift_vertex_values(&f);
            let lg = lift_vertex_values(&g);
            let lhs = lf.weighted_inner(&lg, &w);
            let rhs = f.inner(&g);
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn apply_operator_examples() {
        // constant graphon p on constant signal 1 gives the constant p
        let w = StepGraphon::constant(0.3).unwrap();
        let f = GraphonSignal::from_real(&[1.0]);
        let out = w.apply(&f).unwrap();
        assert_abs_diff_eq!(out.values[0].re, 0.3, epsilon = 1e-15);

        // T_{w_G} f^X = lift(A f / n)
        let g = Graph::complete(3);
        let w = StepGraphon::from_graph(&g);
        let f = GraphSignal::from_real(&[1.0, 0.0, 0.0]);
        let lhs = w.apply(&lift_signal(&f, &g).unwrap()).unwrap();
        let af = g.apply_adjacency(&f).unwrap();
        let af_over_n = GraphSignal::new(af.values.map(|&z| z / 3.0));
        let rhs = lift_signal(&af_over_n, &g).unwrap();
        for c in 0..3 {
            assert!((lhs.values[c] - rhs.values[c]).norm() < 1e-12);
        }

        // an eigenvector maps to its eigenvalue multiple
        let s = w.spectrum(None).unwrap();
        let idx = SignedIndex::positive(1);
        let phi = GraphonSignal::new(s.eigvec(idx).unwrap().clone());
        let out = w.apply(&phi).unwrap();
        let lambda = s.value(idx).unwrap();
        for c in 0..3 {
            assert!((out.values[c] - lambda * phi.values[c]).norm() < 1e-10);
        }
    }

    #[test]
    fn discrete_vs_continuous_shift_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let n = rng.random_range(2..30);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random::<f64>() < 0.4 {
                        g.set_edge(u, v);
                    }
                }
            }
            let f = GraphSignal::new(Array1::from_shape_fn(n, |_| {
                Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
            }));
            let w = StepGraphon::from_graph(&g);
            let lhs = w.apply(&lift_signal(&f, &g).unwrap()).unwrap();
            let af = g.apply_adjacency(&f).unwrap();
            let rhs = lift_vertex_values(&GraphSignal::new(af.values.map(|&z| z / n as f64)));
            let diff: f64 =
                lhs.values.iter().zip(rhs.values.iter()).map(|(a, b)| (a - b).norm_sqr()).sum();
            assert!(diff.sqrt() < 1e-12);
        }
    }

    #[test]
    fn refinement_examples() {
        // identical partitions stay unchanged
        let w = StepGraphon::uniform(array![[0.1, 0.6], [0.6, 0.2]]).unwrap();
        let (r1, r2, m1, m2) = common_refinement(&w, &w);
        assert_eq!(r1, w);
        assert_eq!(r2, w);
        assert_eq!(m1.source_cell, vec![0, 1]);
        assert_eq!(m2.source_cell, vec![0, 1]);

        // 2-cell vs 3-cell overlays to (1/3, 1/6, 1/6, 1/3)
        let a = StepGraphon::uniform(array![[0.2, 0.8], [0.8, 0.4]]).unwrap();
        let b = StepGraphon::uniform(Array2::from_elem((3, 3), 0.5)).unwrap();
        let (ra, rb, ma, mb) = common_refinement(&a, &b);
        let expect = [1.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 3.0];
        for (got, want) in ra.measures().iter().zip(expect.iter()) {
            assert_abs_diff_eq!(got, want, epsilon = 1e-12);
        }
        assert_eq!(ma.source_cell, vec![0, 0, 1, 1]);
        assert_eq!(mb.source_cell, vec![0, 1, 1, 2]);
        assert_eq!(ra.values()[[0, 3]], 0.8);
        assert!(rb.values().iter().all(|&v| v == 0.5));

        // 1-cell vs k-cell gives k cells
        let one = StepGraphon::constant(0.7).unwrap();
        let five = StepGraphon::uniform(Array2::from_elem((5, 5), 0.1)).unwrap();
        let (r1, _, _, _) = common_refinement(&one, &five);
        assert_eq!(r1.cell_count(), 5);
        assert!(r1.values().iter().all(|&v| v == 0.7));
    }

    #[test]
    fn refinement_preserves_spectrum() {
        let a = StepGraphon::uniform(array![[0.9, 0.2], [0.2, 0.5]]).unwrap();
        let b = StepGraphon::new(
            array![[0.3, 0.7, 0.0], [0.7, 0.1, 0.2], [0.0, 0.2, 0.8]],
            array![0.25, 0.35, 0.4],
        )
        .unwrap();
        let (ra, rb, _, _) = common_refinement(&a, &b);
        for (orig, refined) in [(&a, &ra), (&b, &rb)] {
            let s0 = orig.spectrum(Some(1e-10)).unwrap();
            let s1 = refined.spectrum(Some(1e-10)).unwrap();
            assert_eq!(s0.positive_count(), s1.positive_count());
            assert_eq!(s0.negative_count(), s1.negative_count());
            for i in s0.signed_indices() {
                assert_abs_diff_eq!(
                    s0.value(i).unwrap(),
                    s1.value(i).unwrap(),
                    epsilon = 1e-10
                );
            }
        }
    }

    #[test]
    fn lp_norm_examples() {
        let w = StepGraphon::constant(0.6).unwrap();
        let (l1, l2) = w.lp_norms();
        assert_abs_diff_eq!(l1, 0.6, epsilon = 1e-15);
        assert_abs_diff_eq!(l2, 0.6, epsilon = 1e-15);

        let k3 = StepGraphon::from_graph(&Graph::complete(3));
        let (l1, _) = k3.lp_norms();
        assert_abs_diff_eq!(l1, 2.0 / 3.0, epsilon = 1e-15);

        let zero = StepGraphon::from_graph(&Graph::empty(4));
        assert_eq!(zero.lp_norms(), (0.0, 0.0));
    }

    #[test]
    fn bad_graphs_rejected() {
        let mut a = Array2::<u8>::zeros((2, 2));
        a[[0, 0]] = 1;
        assert!(Graph::new(a).is_err());
        let mut a = Array2::<u8>::zeros((2, 2));
        a[[0, 1]] = 1;
        assert!(Graph::new(a).is_err()); // asymmetric
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert!(Graph::from_edges(2, &[(1, 1)]).is_err());
    }

    #[test]
    fn graph_graphon_eigen_correspondence_random() {
        // nonzero eigenvalues of A/n equal the step-operator spectrum
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let n = rng.random_range(2..40);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random::<f64>() < 0.5 {
                        g.set_edge(u, v);
                    }
                }
            }
            let w = StepGraphon::from_graph(&g);
            let spec = w.spectrum(Some(1e-9)).unwrap();
            // adjacency eigenvalues via the same weighted solver on n·w
            let mut buf: Vec<f64> = g.adjacency_f64().iter().copied().collect();
            let vals = crate::lapack::syevd(&mut buf, n).unwrap();
            let order = crate::linalg::signed_order(&vals, 1e-9 * n as f64);
            for (idx, pos) in order.assignment {
                let lhs = vals[pos] / n as f64;
                let rhs = spec.value(idx).unwrap();
                assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-10);
            }
        }
    }
}
