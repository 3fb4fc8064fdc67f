//! Dense symmetric/Hermitian eigendecomposition with signed eigenvalue
//! indexing, distinct-eigenvalue grouping, spectral truncation, and the
//! Hilbert–Schmidt geometry of eigenspace projections.
//!
//! Operators act on step functions over a finite partition of [0, 1] with
//! cell measures `m`, under the weighted inner product
//! `⟨f, g⟩ = Σ_c m_c f_c conj(g_c)`. Nonzero eigenvalues carry signed
//! indices: positives +1, +2, … descending, negatives −1, −2, … with −1 the
//! most negative, so the full list reads
//! `1 ≥ λ₊₁ ≥ λ₊₂ ≥ … ≥ 0 ≥ … ≥ λ₋₂ ≥ λ₋₁ ≥ −1`.

use std::fmt;

use ndarray::{Array1, Array2};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lapack;

/// Nonzero signed index into a spectrum: +1, +2, … and −1, −2, ….
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SignedIndex(i32);

impl SignedIndex {
    pub fn new(i: i32) -> Option<Self> {
        (i != 0).then_some(SignedIndex(i))
    }

    /// k-th positive index (k ≥ 1).
    pub fn positive(k: usize) -> Self {
        assert!(k >= 1);
        SignedIndex(k as i32)
    }

    /// k-th negative index (k ≥ 1 gives −k).
    pub fn negative(k: usize) -> Self {
        assert!(k >= 1);
        SignedIndex(-(k as i32))
    }

    pub fn get(self) -> i32 {
        self.0
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    /// 0-based rank within its sign class.
    pub fn rank(self) -> usize {
        (self.0.unsigned_abs() as usize) - 1
    }
}

impl fmt::Display for SignedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 > 0 {
            write!(f, "+{}", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Weighted inner product `Σ_c m_c f_c conj(g_c)`.
pub fn weighted_inner(weights: &Array1<f64>, f: &Array1<Complex64>, g: &Array1<Complex64>) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for ((&m, &a), &b) in weights.iter().zip(f.iter()).zip(g.iter()) {
        acc += m * a * b.conj();
    }
    acc
}

/// Weighted L² norm.
pub fn weighted_norm(weights: &Array1<f64>, f: &Array1<Complex64>) -> f64 {
    weighted_inner(weights, f, f).re.max(0.0).sqrt()
}

#[derive(Clone, Debug)]
struct EigPair {
    value: f64,
    vector: Array1<Complex64>,
}

/// Eigendecomposition of a self-adjoint step-function operator, indexed by
/// signed indices. Kernel vectors are never stored; only their count is.
#[derive(Clone, Debug)]
pub struct SignedSpectrum {
    weights: Array1<f64>,
    pos: Vec<EigPair>,
    /// `neg[k]` is λ₋₍ₖ₊₁₎; `neg[0]` is the most negative eigenvalue.
    neg: Vec<EigPair>,
    zero_rank: usize,
    truncated: bool,
}

impl SignedSpectrum {
    pub fn cell_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &Array1<f64> {
        &self.weights
    }

    pub fn positive_count(&self) -> usize {
        self.pos.len()
    }

    pub fn negative_count(&self) -> usize {
        self.neg.len()
    }

    /// Dimension of the kernel (eigenvalues at or below the zero threshold).
    /// Meaningless when the spectrum is truncated.
    pub fn zero_rank(&self) -> usize {
        self.zero_rank
    }

    /// True when not every nonzero eigenpair is stored (top-k solves).
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn value(&self, index: SignedIndex) -> Result<f64> {
        self.pair(index).map(|p| p.value)
    }

    pub fn eigvec(&self, index: SignedIndex) -> Result<&Array1<Complex64>> {
        self.pair(index).map(|p| &p.vector)
    }

    fn pair(&self, index: SignedIndex) -> Result<&EigPair> {
        let list = if index.is_positive() { &self.pos } else { &self.neg };
        list.get(index.rank()).ok_or(Error::UnknownIndex(index.get()))
    }

    /// All stored signed indices: positives descending by value, then
    /// negatives from the most negative up.
    pub fn signed_indices(&self) -> Vec<SignedIndex> {
        let mut out = Vec::with_capacity(self.pos.len() + self.neg.len());
        out.extend((1..=self.pos.len()).map(SignedIndex::positive));
        out.extend((1..=self.neg.len()).map(SignedIndex::negative));
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (SignedIndex, f64, &Array1<Complex64>)> {
        self.signed_indices().into_iter().map(move |i| {
            let p = self.pair(i).expect("index enumerated from storage");
            (i, p.value, &p.vector)
        })
    }

    /// Largest stored |λ|.
    pub fn spectral_radius(&self) -> f64 {
        let p = self.pos.first().map(|p| p.value.abs()).unwrap_or(0.0);
        let n = self.neg.first().map(|p| p.value.abs()).unwrap_or(0.0);
        p.max(n)
    }

    /// `Σ_{|λ_i| > α} λ_i φ_i ⊗ φ_i` as a symmetric cell matrix. The zero
    /// matrix when α is at or above the spectral radius; the full
    /// reconstruction of the operator kernel as α → 0⁺ (on a complete
    /// spectrum, up to kernel components).
    pub fn truncate_alpha(&self, alpha: f64) -> Array2<f64> {
        assert!(alpha > 0.0, "truncation level must be positive");
        self.accumulate_kernel(|v| v.abs() > alpha)
    }

    /// Full reconstruction `Σ_i λ_i φ_i ⊗ φ_i` over every stored eigenpair.
    pub fn reconstruction(&self) -> Array2<f64> {
        self.accumulate_kernel(|_| true)
    }

    fn accumulate_kernel(&self, keep: impl Fn(f64) -> bool) -> Array2<f64> {
        let k = self.cell_count();
        let mut out = Array2::zeros((k, k));
        for (_, value, vec) in self.iter() {
            if !keep(value) {
                continue;
            }
            for r in 0..k {
                let vr = vec[r];
                for c in 0..k {
                    // λ φ(r) conj(φ(c)); imaginary parts cancel for
                    // conjugation-closed spectra, which is all we produce.
                    out[[r, c]] += value * (vr * vec[c].conj()).re;
                }
            }
        }
        out
    }

    /// Assemble a spectrum from raw `(eigenvalue, eigenvector)` pairs. The
    /// pairs are signed-ordered, phases are pinned, and values within the
    /// zero threshold are counted into the kernel rank without being stored.
    /// The caller guarantees weighted orthonormality of the vectors.
    pub(crate) fn from_pairs(
        weights: Array1<f64>,
        pairs: Vec<(f64, Array1<Complex64>)>,
        zero_threshold: f64,
    ) -> Self {
        let values: Vec<f64> = pairs.iter().map(|(v, _)| *v).collect();
        let order = signed_order(&values, zero_threshold);
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for &(idx, p) in &order.assignment {
            let mut vector = pairs[p].1.clone();
            fix_phase(&mut vector);
            let pair = EigPair { value: pairs[p].0, vector };
            if idx.is_positive() {
                pos.push(pair);
            } else {
                neg.push(pair);
            }
        }
        SignedSpectrum {
            weights,
            pos,
            neg,
            zero_rank: order.zero_positions.len(),
            truncated: false,
        }
    }

    /// Replace the eigenvectors of `indices` (which must share one
    /// eigenvalue) by the given unitary recombination. Only the spanned
    /// eigenspace is stable across such rotations; projections built from
    /// either basis agree.
    pub fn rotate_eigenspace(&mut self, indices: &[SignedIndex], unitary: &Array2<Complex64>) -> Result<()> {
        let d = indices.len();
        if unitary.nrows() != d || unitary.ncols() != d {
            return Err(Error::DimensionMismatch { expected: d, found: unitary.nrows() });
        }
        let old: Vec<Array1<Complex64>> =
            indices.iter().map(|&i| self.eigvec(i).cloned()).collect::<Result<_>>()?;
        for (a, &idx) in indices.iter().enumerate() {
            let mut new = Array1::from_elem(self.cell_count(), Complex64::new(0.0, 0.0));
            for (b, vec) in old.iter().enumerate() {
                let z = unitary[[a, b]];
                new.iter_mut().zip(vec.iter()).for_each(|(n, &v)| *n += z * v);
            }
            let list = if idx.is_positive() { &mut self.pos } else { &mut self.neg };
            list[idx.rank()].vector = new;
        }
        Ok(())
    }
}

/// Outcome of [`signed_order`]: positions of the input list assigned to
/// signed indices, plus the positions relegated to the kernel.
#[derive(Clone, Debug, PartialEq)]
pub struct SignedOrder {
    /// `(signed index, original position)` pairs covering all nonzero values.
    pub assignment: Vec<(SignedIndex, usize)>,
    /// Original positions with |value| at or below the threshold.
    pub zero_positions: Vec<usize>,
}

/// Assign signed indices to a raw eigenvalue list: positives +1, +2, …
/// descending, negatives −1, −2, … from the most negative up, values with
/// `|λ| ≤ zero_threshold` to the kernel. Ties break by original position.
pub fn signed_order(values: &[f64], zero_threshold: f64) -> SignedOrder {
    let mut pos: Vec<usize> = Vec::new();
    let mut neg: Vec<usize> = Vec::new();
    let mut zero_positions = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        if v.abs() <= zero_threshold {
            zero_positions.push(i);
        } else if v > 0.0 {
            pos.push(i);
        } else {
            neg.push(i);
        }
    }
    // stable sorts keep the original position as tie-break
    pos.sort_by(|&a, &b| values[b].partial_cmp(&values[a]).unwrap());
    neg.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
    let mut assignment = Vec::with_capacity(pos.len() + neg.len());
    for (k, &p) in pos.iter().enumerate() {
        assignment.push((SignedIndex::positive(k + 1), p));
    }
    for (k, &p) in neg.iter().enumerate() {
        assignment.push((SignedIndex::negative(k + 1), p));
    }
    SignedOrder { assignment, zero_positions }
}

fn validate_weights(weights: &Array1<f64>) -> Result<()> {
    if weights.iter().any(|&m| m <= 0.0) {
        return Err(Error::BadMeasures("measures must be positive".into()));
    }
    let sum: f64 = weights.sum();
    if (sum - 1.0).abs() > 1e-12 {
        return Err(Error::BadMeasures(format!("measures sum to {sum}, expected 1")));
    }
    Ok(())
}

fn check_symmetric(matrix: &Array2<f64>) -> Result<()> {
    let k = matrix.nrows();
    if matrix.ncols() != k {
        return Err(Error::DimensionMismatch { expected: k, found: matrix.ncols() });
    }
    let mut max_dev = 0.0f64;
    for r in 0..k {
        for c in (r + 1)..k {
            max_dev = max_dev.max((matrix[[r, c]] - matrix[[c, r]]).abs());
        }
    }
    if max_dev > 1e-12 {
        return Err(Error::NotSymmetric { max_dev });
    }
    Ok(())
}

/// Make the first coordinate of largest magnitude real and positive.
/// Eigenvectors are unique only up to phase; this pins a representative.
fn fix_phase(vec: &mut Array1<Complex64>) {
    let mut best = 0usize;
    let mut best_mag = -1.0f64;
    for (i, &z) in vec.iter().enumerate() {
        let mag = z.norm();
        if mag > best_mag + 1e-12 {
            best_mag = mag;
            best = i;
        }
    }
    let z = vec[best];
    if z.norm() == 0.0 {
        return;
    }
    let phase = z / z.norm();
    vec.iter_mut().for_each(|v| *v /= phase);
}

/// Eigendecomposition of the weighted operator `(T f)_c = Σ_c' M_{cc'} m_c' f_c'`
/// for a real symmetric cell matrix `M` and positive cell measures summing
/// to one. Solved through the similarity transform `D^{1/2} M D^{1/2}`
/// (`D = diag(m)`), which keeps the solver in real-symmetric territory;
/// eigenvectors are reported in step-function coordinates (`D^{-1/2}` of the
/// symmetric problem's vectors) and are orthonormal under the weighted inner
/// product. The zero threshold defaults to `1e-10 ×` the spectral radius.
pub fn eigh_symmetric(
    matrix: &Array2<f64>,
    weights: &Array1<f64>,
    zero_threshold: Option<f64>,
) -> Result<SignedSpectrum> {
    check_symmetric(matrix)?;
    validate_weights(weights)?;
    let k = matrix.nrows();
    if weights.len() != k {
        return Err(Error::DimensionMismatch { expected: k, found: weights.len() });
    }
    let sqrt_w: Vec<f64> = weights.iter().map(|&m| m.sqrt()).collect();
    let mut buf = vec![0.0f64; k * k];
    for c in 0..k {
        for r in 0..k {
            buf[c * k + r] = sqrt_w[r] * matrix[[r, c]] * sqrt_w[c];
        }
    }
    let vals = lapack::syevd(&mut buf, k)?;
    let radius = vals.iter().fold(0.0f64, |a, &v| a.max(v.abs()));
    let threshold = zero_threshold.unwrap_or(1e-10 * radius);
    let order = signed_order(&vals, threshold);

    let take = |pos: usize| -> EigPair {
        let mut vector = Array1::from_shape_fn(k, |r| Complex64::new(buf[pos * k + r] / sqrt_w[r], 0.0));
        fix_phase(&mut vector);
        EigPair { value: vals[pos], vector }
    };
    let mut pos_pairs = Vec::new();
    let mut neg_pairs = Vec::new();
    for &(idx, p) in &order.assignment {
        if idx.is_positive() {
            pos_pairs.push(take(p));
        } else {
            neg_pairs.push(take(p));
        }
    }
    Ok(SignedSpectrum {
        weights: weights.clone(),
        pos: pos_pairs,
        neg: neg_pairs,
        zero_rank: order.zero_positions.len(),
        truncated: false,
    })
}

/// Truncated variant of [`eigh_symmetric`]: only the `n_pos` largest and
/// `n_neg` most negative eigenpairs are kept (fewer if the matrix has fewer
/// eigenvalues beyond the zero threshold). The result is flagged truncated.
pub fn eigh_symmetric_top(
    matrix: &Array2<f64>,
    weights: &Array1<f64>,
    n_pos: usize,
    n_neg: usize,
    zero_threshold: Option<f64>,
) -> Result<SignedSpectrum> {
    check_symmetric(matrix)?;
    validate_weights(weights)?;
    let k = matrix.nrows();
    if weights.len() != k {
        return Err(Error::DimensionMismatch { expected: k, found: weights.len() });
    }
    let sqrt_w: Vec<f64> = weights.iter().map(|&m| m.sqrt()).collect();
    let fill = |buf: &mut Vec<f64>| {
        for c in 0..k {
            for r in 0..k {
                buf[c * k + r] = sqrt_w[r] * matrix[[r, c]] * sqrt_w[c];
            }
        }
    };
    let mut buf = vec![0.0f64; k * k];

    let mut grab = |lo: usize, hi: usize| -> Result<(Vec<f64>, Vec<f64>)> {
        fill(&mut buf);
        lapack::syevr_range(&mut buf, k, lo, hi)
    };

    let mut pos_pairs = Vec::new();
    let mut neg_pairs = Vec::new();
    let mut radius = 0.0f64;
    if n_pos > 0 {
        let take = n_pos.min(k);
        let (vals, vecs) = grab(k - take + 1, k)?;
        radius = radius.max(vals.iter().fold(0.0f64, |a, &v| a.max(v.abs())));
        // ascending from LAPACK; walk down for +1, +2, …
        for j in (0..vals.len()).rev() {
            let mut vector =
                Array1::from_shape_fn(k, |r| Complex64::new(vecs[j * k + r] / sqrt_w[r], 0.0));
            fix_phase(&mut vector);
            pos_pairs.push(EigPair { value: vals[j], vector });
        }
    }
    if n_neg > 0 {
        let take = n_neg.min(k);
        let (vals, vecs) = grab(1, take)?;
        radius = radius.max(vals.iter().fold(0.0f64, |a, &v| a.max(v.abs())));
        for (j, &value) in vals.iter().enumerate() {
            let mut vector =
                Array1::from_shape_fn(k, |r| Complex64::new(vecs[j * k + r] / sqrt_w[r], 0.0));
            fix_phase(&mut vector);
            neg_pairs.push(EigPair { value, vector });
        }
    }
    let threshold = zero_threshold.unwrap_or(1e-10 * radius);
    pos_pairs.retain(|p| p.value > threshold);
    neg_pairs.retain(|p| p.value < -threshold);
    Ok(SignedSpectrum {
        weights: weights.clone(),
        pos: pos_pairs,
        neg: neg_pairs,
        zero_rank: 0,
        truncated: true,
    })
}

/// Eigendecomposition of a complex Hermitian matrix under the plain
/// Euclidean inner product. Eigenvalues descending, eigenvectors
/// orthonormal columns with pinned phases.
pub fn eigh_hermitian(matrix: &Array2<Complex64>) -> Result<(Vec<f64>, Array2<Complex64>)> {
    let d = matrix.nrows();
    if matrix.ncols() != d {
        return Err(Error::DimensionMismatch { expected: d, found: matrix.ncols() });
    }
    let mut max_dev = 0.0f64;
    for r in 0..d {
        for c in 0..d {
            max_dev = max_dev.max((matrix[[r, c]] - matrix[[c, r]].conj()).norm());
        }
    }
    if max_dev > 1e-12 {
        return Err(Error::NotHermitian { max_dev });
    }
    let mut buf = vec![Complex64::new(0.0, 0.0); d * d];
    for c in 0..d {
        for r in 0..d {
            buf[c * d + r] = matrix[[r, c]];
        }
    }
    let vals = lapack::zheevd(&mut buf, d)?;
    // descending
    let mut values = Vec::with_capacity(d);
    let mut vectors = Array2::from_elem((d, d), Complex64::new(0.0, 0.0));
    for (out_col, j) in (0..d).rev().enumerate() {
        values.push(vals[j]);
        let mut v = Array1::from_shape_fn(d, |r| buf[j * d + r]);
        fix_phase(&mut v);
        for r in 0..d {
            vectors[[r, out_col]] = v[r];
        }
    }
    Ok((values, vectors))
}

/// A distinct eigenvalue μ_j with the signed indices of its repeated copies.
#[derive(Clone, Debug, PartialEq)]
pub struct DistinctEigenvalueGroup {
    pub mu: f64,
    pub indices: Vec<SignedIndex>,
}

impl DistinctEigenvalueGroup {
    pub fn multiplicity(&self) -> usize {
        self.indices.len()
    }
}

/// Merge consecutive same-sign eigenvalues into distinct-eigenvalue groups:
/// `λ_a` and `λ_b` coalesce when `|λ_a − λ_b| ≤ rel_tol · max(1, |λ_a|)`.
/// Groups are emitted positives first (descending), then negatives from the
/// most negative up; μ is the mean of the merged values.
pub fn group_distinct(spectrum: &SignedSpectrum, rel_tol: f64) -> Vec<DistinctEigenvalueGroup> {
    assert!(rel_tol >= 0.0);
    let mut groups = Vec::new();
    let mut side = |count: usize, index_of: fn(usize) -> SignedIndex, spectrum: &SignedSpectrum| {
        let mut current: Vec<SignedIndex> = Vec::new();
        let mut anchor = 0.0f64;
        for k in 1..=count {
            let idx = index_of(k);
            let v = spectrum.value(idx).unwrap();
            if current.is_empty() || (v - anchor).abs() <= rel_tol * anchor.abs().max(1.0) {
                current.push(idx);
                if current.len() == 1 {
                    anchor = v;
                }
            } else {
                groups.push(finish_group(spectrum, std::mem::take(&mut current)));
                current.push(idx);
                anchor = v;
            }
        }
        if !current.is_empty() {
            groups.push(finish_group(spectrum, current));
        }
    };
    side(spectrum.positive_count(), SignedIndex::positive, spectrum);
    side(spectrum.negative_count(), SignedIndex::negative, spectrum);
    groups
}

fn finish_group(spectrum: &SignedSpectrum, indices: Vec<SignedIndex>) -> DistinctEigenvalueGroup {
    let mu = indices.iter().map(|&i| spectrum.value(i).unwrap()).sum::<f64>() / indices.len() as f64;
    DistinctEigenvalueGroup { mu, indices }
}

/// Kernel of the orthogonal projection onto the span of selected
/// eigenvectors: `K = Σ_{i∈I} φ_i ⊗ φ_i` over cells, carried with the cell
/// measures that define composition and trace.
#[derive(Clone, Debug)]
pub struct ProjectionKernel {
    weights: Array1<f64>,
    kernel: Array2<Complex64>,
}

impl ProjectionKernel {
    pub fn new(weights: Array1<f64>, kernel: Array2<Complex64>) -> Self {
        ProjectionKernel { weights, kernel }
    }

    pub fn zero(weights: Array1<f64>) -> Self {
        let k = weights.len();
        ProjectionKernel { weights, kernel: Array2::from_elem((k, k), Complex64::new(0.0, 0.0)) }
    }

    pub fn weights(&self) -> &Array1<f64> {
        &self.weights
    }

    pub fn kernel(&self) -> &Array2<Complex64> {
        &self.kernel
    }

    /// Weighted trace `Σ_c m_c K_cc`; equals the rank for a projection.
    pub fn trace(&self) -> f64 {
        self.weights
            .iter()
            .zip(self.kernel.diag().iter())
            .map(|(&m, z)| m * z.re)
            .sum()
    }

    /// Weighted kernel composition `(P∘Q)(c, c'') = Σ_c' P(c, c') m_c' Q(c', c'')`.
    pub fn compose(&self, other: &ProjectionKernel) -> Result<ProjectionKernel> {
        if self.weights.len() != other.weights.len() {
            return Err(Error::PartitionMismatch);
        }
        let k = self.weights.len();
        let mut out = Array2::from_elem((k, k), Complex64::new(0.0, 0.0));
        for r in 0..k {
            for c in 0..k {
                let mut acc = Complex64::new(0.0, 0.0);
                for t in 0..k {
                    acc += self.kernel[[r, t]] * self.weights[t] * other.kernel[[t, c]];
                }
                out[[r, c]] = acc;
            }
        }
        Ok(ProjectionKernel { weights: self.weights.clone(), kernel: out })
    }

    /// Apply to a step function: `(Kf)_c = Σ_c' K(c, c') m_c' f_c'`.
    pub fn apply(&self, f: &Array1<Complex64>) -> Result<Array1<Complex64>> {
        if f.len() != self.weights.len() {
            return Err(Error::DimensionMismatch { expected: self.weights.len(), found: f.len() });
        }
        let k = self.weights.len();
        Ok(Array1::from_shape_fn(k, |r| {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in 0..k {
                acc += self.kernel[[r, c]] * self.weights[c] * f[c];
            }
            acc
        }))
    }

    /// Re-express the kernel on a refined partition: `map[a]` is the coarse
    /// cell containing refined cell `a`.
    pub fn refine(&self, map: &[usize], new_weights: Array1<f64>) -> ProjectionKernel {
        let k = map.len();
        let kernel = Array2::from_shape_fn((k, k), |(r, c)| self.kernel[[map[r], map[c]]]);
        ProjectionKernel { weights: new_weights, kernel }
    }

    pub fn hs_norm(&self) -> f64 {
        hs_inner(self, self).map(|z| z.re.max(0.0).sqrt()).unwrap()
    }
}

/// Orthogonal projection onto the span of the eigenvectors at `indices`.
/// The empty set yields the zero kernel.
pub fn projection_kernel(spectrum: &SignedSpectrum, indices: &[SignedIndex]) -> Result<ProjectionKernel> {
    let k = spectrum.cell_count();
    let mut kernel = Array2::from_elem((k, k), Complex64::new(0.0, 0.0));
    for &idx in indices {
        let vec = spectrum.eigvec(idx)?;
        for r in 0..k {
            let vr = vec[r];
            for c in 0..k {
                kernel[[r, c]] += vr * vec[c].conj();
            }
        }
    }
    Ok(ProjectionKernel { weights: spectrum.weights().clone(), kernel })
}

/// Hilbert–Schmidt inner product `Σ_{c,c'} m_c m_c' P(c,c') conj(Q(c,c'))`.
pub fn hs_inner(p: &ProjectionKernel, q: &ProjectionKernel) -> Result<Complex64> {
    if p.weights.len() != q.weights.len() {
        return Err(Error::PartitionMismatch);
    }
    let k = p.weights.len();
    let mut acc = Complex64::new(0.0, 0.0);
    for r in 0..k {
        for c in 0..k {
            acc += p.weights[r] * p.weights[c] * p.kernel[[r, c]] * q.kernel[[r, c]].conj();
        }
    }
    Ok(acc)
}

/// Hilbert–Schmidt distance `sqrt(Σ m_c m_c' |P − Q|²)`; zero iff the
/// kernels agree almost everywhere. Both kernels must share one partition.
pub fn hs_distance(p: &ProjectionKernel, q: &ProjectionKernel) -> Result<f64> {
    if p.weights.len() != q.weights.len() {
        return Err(Error::PartitionMismatch);
    }
    let k = p.weights.len();
    let mut acc = 0.0f64;
    for r in 0..k {
        for c in 0..k {
            acc += p.weights[r] * p.weights[c] * (p.kernel[[r, c]] - q.kernel[[r, c]]).norm_sqr();
        }
    }
    Ok(acc.sqrt())
}
