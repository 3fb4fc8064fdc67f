//! Finite-group harmonic analysis and Cayley graphons.
//!
//! A Cayley graphon on a finite group 𝔾 is `w(x, y) = γ(x y⁻¹)` for a
//! Cayley function γ (γ(g) = γ(g⁻¹)). Haar measure is the counting measure
//! divided by |𝔾| throughout, so the matrix Fourier transform reads
//! `π(f) = (1/N) Σ_g f(g) π(g)` and Cayley step-graphon spectra coincide
//! with the spectra of the π(γ) with no extra scale factor.
//!
//! The central fact used here: eigenvalues of the graphon operator `T_w` are
//! exactly the eigenvalues of the matrices π(γ) over the irreducible
//! unitary representations π, with multiplicity `d_π` per matrix
//! multiplicity, and an explicit eigenbasis comes from coefficient
//! functions: if Z is an eigenvector of `conj(π(γ))` then
//! `Σ_j z_j π_{i,j}` is an eigenvector of `T_w` for every row i.

mod builtins;
mod torus;

pub use builtins::{cyclic_group, direct_product, symmetric_group_3, s3_model_matrix};
pub use torus::{discretize_torus_graphon, ws_closed_form_spectrum, TorusBandParams, WsClosedForm};

use ndarray::{Array1, Array2};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graphon::StepGraphon;
use crate::linalg::{self, SignedSpectrum};

const EXHAUSTIVE_ASSOCIATIVITY_MAX: usize = 24;

/// Finite group as a multiplication table over indexed elements.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    element_names: Vec<String>,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    identity: usize,
    classes: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Build and validate a group. Associativity is checked exhaustively for
    /// orders up to 24 and on seeded random triples beyond that; identity,
    /// inverses, and (when supplied) conjugacy classes are always verified.
    pub fn new(
        name: impl Into<String>,
        element_names: Vec<String>,
        mul: Vec<Vec<usize>>,
        classes: Option<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let n = element_names.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty element list".into()));
        }
        if mul.len() != n || mul.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidGroup("multiplication table is not N×N".into()));
        }
        if mul.iter().flatten().any(|&v| v >= n) {
            return Err(Error::InvalidGroup("table entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul[e][g] == g && mul[g][e] == g))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inv = vec![usize::MAX; n];
        for g in 0..n {
            let gi = (0..n)
                .find(|&h| mul[g][h] == identity && mul[h][g] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {g} has no inverse")))?;
            inv[g] = gi;
        }
        if n <= EXHAUSTIVE_ASSOCIATIVITY_MAX {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                            return Err(Error::InvalidGroup(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            use rand::prelude::*;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x617373);
            for _ in 0..20_000 {
                let (a, b, c) =
                    (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
                if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                    return Err(Error::InvalidGroup(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }
        let computed = conjugacy_classes(&mul, &inv, n);
        if let Some(given) = classes {
            let mut norm: Vec<Vec<usize>> = given
                .into_iter()
                .map(|mut c| {
                    c.sort_unstable();
                    c.dedup();
                    c
                })
                .collect();
            norm.sort_by_key(|c| c.first().copied().unwrap_or(usize::MAX));
            if norm != computed {
                return Err(Error::InvalidGroup(
                    "supplied conjugacy classes are not closed under conjugation".into(),
                ));
            }
        }
        Ok(FiniteGroup { name: name.into(), element_names, mul, inv, identity, classes: computed })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.element_names.len()
    }

    pub fn element_names(&self) -> &[String] {
        &self.element_names
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.element_names.iter().position(|n| n == name)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn multiplication_table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }
}

fn conjugacy_classes(mul: &[Vec<usize>], inv: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for g in 0..n {
        if seen[g] {
            continue;
        }
        let mut class: Vec<usize> = (0..n).map(|h| mul[mul[h][g]][inv[h]]).collect();
        class.sort_unstable();
        class.dedup();
        for &e in &class {
            seen[e] = true;
        }
        classes.push(class);
    }
    classes
}

/// Connection function of a Cayley graphon: values in [0, 1] with
/// `γ(g) = γ(g⁻¹)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CayleyFunction {
    values: Vec<f64>,
}

impl CayleyFunction {
    pub fn new(group: &FiniteGroup, values: Vec<f64>) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::DimensionMismatch { expected: group.order(), found: values.len() });
        }
        for (g, &v) in values.iter().enumerate() {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::ValueOutOfRange { row: g, col: g, value: v });
            }
            if (v - values[group.inv(g)]).abs() > 1e-12 {
                return Err(Error::NotCayleyFunction(group.element_names()[g].clone()));
            }
        }
        Ok(CayleyFunction { values })
    }

    pub fn constant(group: &FiniteGroup, c: f64) -> Result<Self> {
        CayleyFunction::new(group, vec![c; group.order()])
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, g: usize) -> f64 {
        self.values[g]
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.values.iter().map(|&v| Complex64::new(v, 0.0)).collect()
    }
}

/// Unitary irreducible representation given by one matrix per element.
#[derive(Clone, Debug)]
pub struct Irrep {
    label: String,
    mats: Vec<Array2<Complex64>>,
}

impl Irrep {
    pub fn new(label: impl Into<String>, mats: Vec<Array2<Complex64>>) -> Self {
        Irrep { label: label.into(), mats }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.mats.first().map(|m| m.nrows()).unwrap_or(0)
    }

    /// Number of group elements the representation is defined on.
    pub fn element_count(&self) -> usize {
        self.mats.len()
    }

    pub fn matrix(&self, g: usize) -> &Array2<Complex64> {
        &self.mats[g]
    }

    pub fn character(&self, g: usize) -> Complex64 {
        self.mats[g].diag().sum()
    }

    /// Homomorphism property, unitarity, and irreducibility (`⟨χ, χ⟩ = 1`).
    pub fn validate(&self, group: &FiniteGroup) -> Result<()> {
        let n = group.order();
        let d = self.dim();
        let fail = |reason: String| Error::InvalidIrrep { label: self.label.clone(), reason };
        if self.mats.len() != n {
            return Err(fail(format!("{} matrices for group of order {n}", self.mats.len())));
        }
        if d == 0 || self.mats.iter().any(|m| m.nrows() != d || m.ncols() != d) {
            return Err(fail("inconsistent matrix dimensions".into()));
        }
        for g in 0..n {
            let m = &self.mats[g];
            let mut dev = 0.0f64;
            for r in 0..d {
                for c in 0..d {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for t in 0..d {
                        acc += m[[r, t]] * m[[c, t]].conj();
                    }
                    let expect = if r == c { 1.0 } else { 0.0 };
                    dev = dev.max((acc - expect).norm());
                }
            }
            if dev > 1e-12 {
                return Err(fail(format!("matrix {g} not unitary (dev {dev:.2e})")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let prod = self.mats[a].dot(&self.mats[b]);
                let target = &self.mats[group.mul(a, b)];
                let dev =
                    prod.iter().zip(target.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
                if dev > 1e-12 {
                    return Err(fail(format!("homomorphism fails at ({a}, {b})")));
                }
            }
        }
        let chi_norm: f64 =
            (0..n).map(|g| self.character(g).norm_sqr()).sum::<f64>() / n as f64;
        if (chi_norm - 1.0).abs() > 1e-10 {
            return Err(fail(format!("not irreducible: ⟨χ, χ⟩ = {chi_norm}")));
        }
        Ok(())
    }
}

/// A complete set of pairwise inequivalent irreps (`Σ d_π² = N`).
#[derive(Clone, Debug)]
pub struct IrrepSet {
    irreps: Vec<Irrep>,
}

impl IrrepSet {
    pub fn new(group: &FiniteGroup, irreps: Vec<Irrep>) -> Result<Self> {
        for irrep in &irreps {
            irrep.validate(group)?;
        }
        let n = group.order();
        let got: usize = irreps.iter().map(|p| p.dim() * p.dim()).sum();
        if got != n {
            return Err(Error::IncompleteIrrepSet { got, order: n });
        }
        // pairwise inequivalence via character orthogonality
        for a in 0..irreps.len() {
            for b in (a + 1)..irreps.len() {
                let ip: Complex64 = (0..n)
                    .map(|g| irreps[a].character(g) * irreps[b].character(g).conj())
                    .sum::<Complex64>()
                    / n as f64;
                if ip.norm() > 1e-10 {
                    return Err(Error::InvalidIrrep {
                        label: irreps[b].label().to_string(),
                        reason: format!("equivalent to `{}`", irreps[a].label()),
                    });
                }
            }
        }
        Ok(IrrepSet { irreps })
    }

    pub fn iter(&self) -> impl Iterator<Item = &Irrep> {
        self.irreps.iter()
    }

    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    pub fn get(&self, idx: usize) -> &Irrep {
        &self.irreps[idx]
    }

    pub fn by_label(&self, label: &str) -> Option<&Irrep> {
        self.irreps.iter().find(|p| p.label() == label)
    }
}

/// `w(s, t) = γ(s t⁻¹)` on N uniform cells ordered by the group's element
/// list; symmetric because γ is a Cayley function.
pub fn cayley_graphon(group: &FiniteGroup, gamma: &CayleyFunction) -> Result<StepGraphon> {
    let n = group.order();
    let values =
        Array2::from_shape_fn((n, n), |(s, t)| gamma.value(group.mul(s, group.inv(t))));
    StepGraphon::uniform(values)
}

/// Matrix Fourier coefficient `π(f) = (1/N) Σ_g f(g) π(g)`.
pub fn group_fourier(group: &FiniteGroup, f: &[Complex64], irrep: &Irrep) -> Array2<Complex64> {
    let n = group.order();
    let d = irrep.dim();
    let mut out = Array2::from_elem((d, d), Complex64::new(0.0, 0.0));
    for g in 0..n {
        let fg = f[g];
        out.zip_mut_with(irrep.matrix(g), |o, &m| *o += fg * m);
    }
    out.mapv_into(|z| z / n as f64)
}

/// `(f*g)(x) = (1/N) Σ_y f(y) g(y⁻¹ x)`.
pub fn group_convolve(group: &FiniteGroup, f: &[Complex64], g: &[Complex64]) -> Vec<Complex64> {
    let n = group.order();
    (0..n)
        .map(|x| {
            let mut acc = Complex64::new(0.0, 0.0);
            for y in 0..n {
                acc += f[y] * g[group.mul(group.inv(y), x)];
            }
            acc / n as f64
        })
        .collect()
}

/// Inverse Fourier transform `f(x) = Σ_π d_π Tr(π(x)* π(f))` from the
/// per-irrep coefficient matrices.
pub fn inverse_group_fourier(
    group: &FiniteGroup,
    irreps: &IrrepSet,
    coefficients: &[Array2<Complex64>],
) -> Vec<Complex64> {
    let n = group.order();
    (0..n)
        .map(|x| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (irrep, coeff) in irreps.iter().zip(coefficients.iter()) {
                let d = irrep.dim();
                let mx = irrep.matrix(x);
                // Tr(π(x)* C) = Σ_{r,c} conj(π(x)[r, c]) C[r, c]
                let mut tr = Complex64::new(0.0, 0.0);
                for r in 0..d {
                    for c in 0..d {
                        tr += mx[[r, c]].conj() * coeff[[r, c]];
                    }
                }
                acc += d as f64 * tr;
            }
            acc
        })
        .collect()
}

/// Coefficient function `π_{i,j}(g) = ⟨π(g) e_i, e_j⟩`, the (j, i) entry of
/// π(g). Indices are 0-based.
pub fn coefficient_function(irrep: &Irrep, i: usize, j: usize) -> Result<Vec<Complex64>> {
    let d = irrep.dim();
    if i >= d || j >= d {
        return Err(Error::CoefficientIndex { i, j, dim: d });
    }
    Ok(irrep.mats.iter().map(|m| m[[j, i]]).collect())
}

/// Left-regular action of γ: `(L(γ) f)(x) = (1/N) Σ_y γ(y) f(y⁻¹ x)`, which
/// equals `T_w f` for the Cayley graphon of γ.
pub fn cayley_shift(group: &FiniteGroup, gamma: &CayleyFunction, f: &[Complex64]) -> Vec<Complex64> {
    let n = group.order();
    (0..n)
        .map(|x| {
            let mut acc = Complex64::new(0.0, 0.0);
            for y in 0..n {
                acc += gamma.value(y) * f[group.mul(group.inv(y), x)];
            }
            acc / n as f64
        })
        .collect()
}

/// Outcome of the Schur orthogonality check over a full coefficient-function
/// system: `⟨π_{i,j}, ρ_{r,s}⟩ = δ_{πρ} δ_{ir} δ_{js} / d_π`.
#[derive(Clone, Debug)]
pub struct SchurReport {
    /// Largest deviation of a same-irrep inner product from its target.
    pub max_within_dev: f64,
    /// Largest |inner product| across inequivalent irreps.
    pub max_cross: f64,
    pub tolerance: f64,
}

impl SchurReport {
    pub fn pass(&self) -> bool {
        self.max_within_dev <= self.tolerance && self.max_cross <= self.tolerance
    }
}

/// Verify Schur's orthogonality relations on a set of irreps (which need not
/// be complete). Violations are reported, not raised.
pub fn schur_check(group: &FiniteGroup, irreps: &[Irrep]) -> SchurReport {
    let n = group.order();
    let inner = |a: &[Complex64], b: &[Complex64]| -> Complex64 {
        a.iter().zip(b.iter()).map(|(x, y)| x * y.conj()).sum::<Complex64>() / n as f64
    };
    let mut max_within_dev = 0.0f64;
    let mut max_cross = 0.0f64;
    for (pi_idx, pi) in irreps.iter().enumerate() {
        let dp = pi.dim();
        for i in 0..dp {
            for j in 0..dp {
                let pij = coefficient_function(pi, i, j).expect("in range");
                for (rho_idx, rho) in irreps.iter().enumerate() {
                    let dr = rho.dim();
                    for r in 0..dr {
                        for s in 0..dr {
                            let rrs = coefficient_function(rho, r, s).expect("in range");
                            let ip = inner(&pij, &rrs);
                            if pi_idx == rho_idx {
                                let target = if i == r && j == s { 1.0 / dp as f64 } else { 0.0 };
                                max_within_dev = max_within_dev.max((ip - target).norm());
                            } else {
                                max_cross = max_cross.max(ip.norm());
                            }
                        }
                    }
                }
            }
        }
    }
    SchurReport { max_within_dev, max_cross, tolerance: 1e-12 }
}

/// Outcome of the Parseval check `‖f‖² = Σ_π d_π Tr(π(f)* π(f))`.
#[derive(Clone, Debug)]
pub struct ParsevalReport {
    pub signal_norm_sq: f64,
    pub coefficient_sum: f64,
    pub tolerance: f64,
}

impl ParsevalReport {
    pub fn pass(&self) -> bool {
        (self.signal_norm_sq - self.coefficient_sum).abs() <= self.tolerance
    }
}

pub fn parseval_check(group: &FiniteGroup, irreps: &IrrepSet, f: &[Complex64]) -> ParsevalReport {
    let n = group.order();
    let signal_norm_sq = f.iter().map(|z| z.norm_sqr()).sum::<f64>() / n as f64;
    let mut coefficient_sum = 0.0f64;
    for irrep in irreps.iter() {
        let c = group_fourier(group, f, irrep);
        coefficient_sum += irrep.dim() as f64 * c.iter().map(|z| z.norm_sqr()).sum::<f64>();
    }
    ParsevalReport {
        signal_norm_sq,
        coefficient_sum,
        tolerance: 1e-12 * signal_norm_sq.max(1.0),
    }
}

/// One eigenvalue of `T_w` as recovered from the representation side.
#[derive(Clone, Debug)]
pub struct RepEigenvalue {
    pub value: f64,
    /// Total multiplicity `Σ_π d_π · m_{λ,π}`.
    pub multiplicity: usize,
    /// `(irrep label, multiplicity of the eigenvalue inside π(γ))`.
    pub provenance: Vec<(String, usize)>,
}

/// Eigenvalues of the Cayley graphon operator as the union over π of the
/// spectra of π(γ), with multiplicities `d_π` per matrix multiplicity.
/// Matching eigenvalues across irreps merge at absolute tolerance 1e-9.
pub fn spectrum_via_reps(
    group: &FiniteGroup,
    irreps: &IrrepSet,
    gamma: &CayleyFunction,
) -> Result<Vec<RepEigenvalue>> {
    let gamma_c = gamma.to_complex();
    let mut entries: Vec<(f64, usize, String)> = Vec::new();
    for irrep in irreps.iter() {
        let pg = group_fourier(group, &gamma_c, irrep);
        let (vals, _) = linalg::eigh_hermitian(&pg)?;
        for &v in &vals {
            entries.push((v, irrep.dim(), irrep.label().to_string()));
        }
    }
    entries.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    let mut out: Vec<RepEigenvalue> = Vec::new();
    for (v, d, label) in entries {
        match out.last_mut() {
            Some(last) if (last.value - v).abs() <= 1e-9 => {
                last.multiplicity += d;
                match last.provenance.iter_mut().find(|(l, _)| *l == label) {
                    Some((_, m)) => *m += 1,
                    None => last.provenance.push((label, 1)),
                }
            }
            _ => out.push(RepEigenvalue { value: v, multiplicity: d, provenance: vec![(label, 1)] }),
        }
    }
    Ok(out)
}

/// Full orthonormal eigenbasis of the Cayley graphon operator built from
/// coefficient functions: for each eigenvector `Z` of `conj(π(γ))` and each
/// row index i, the function `√d_π Σ_j z_j π_{i,j}` is a unit eigenvector.
/// Returned as a signed spectrum on the N uniform cells; kernel directions
/// (|λ| at or below 1e-12) are counted but not stored.
pub fn eigenbasis_via_reps(
    group: &FiniteGroup,
    irreps: &IrrepSet,
    gamma: &CayleyFunction,
) -> Result<SignedSpectrum> {
    let n = group.order();
    let gamma_c = gamma.to_complex();
    let mut pairs: Vec<(f64, Array1<Complex64>)> = Vec::new();
    for irrep in irreps.iter() {
        let d = irrep.dim();
        let pg = group_fourier(group, &gamma_c, irrep);
        let pg_conj = pg.map(|z| z.conj());
        let (vals, vecs) = linalg::eigh_hermitian(&pg_conj)?;
        let scale = (d as f64).sqrt();
        for (col, &lambda) in vals.iter().enumerate() {
            for i in 0..d {
                let mut vec = Array1::from_elem(n, Complex64::new(0.0, 0.0));
                for j in 0..d {
                    let z = vecs[[j, col]];
                    if z.norm() == 0.0 {
                        continue;
                    }
                    let pij = coefficient_function(irrep, i, j)?;
                    for (g, &p) in pij.iter().enumerate() {
                        vec[g] += z * p;
                    }
                }
                vec.mapv_inplace(|v| v * scale);
                pairs.push((lambda, vec));
            }
        }
    }
    let weights = Array1::from_elem(n, 1.0 / n as f64);
    Ok(SignedSpectrum::from_pairs(weights, pairs, 1e-12))
}

/// True when γ is constant on conjugacy classes (equivalently
/// `γ(xy) = γ(yx)` for all x, y).
pub fn is_class_function(group: &FiniteGroup, gamma: &CayleyFunction) -> bool {
    group.conjugacy_classes().iter().all(|class| {
        let v0 = gamma.value(class[0]);
        class.iter().all(|&g| (gamma.value(g) - v0).abs() <= 1e-12)
    })
}

/// Eigenstructure of a quasi-Abelian Cayley graphon (class-function γ):
/// each irrep π contributes the single eigenvalue `Tr(π(γ))/d_π` with
/// multiplicity `d_π²` and eigenspace spanned by all coefficient functions
/// of π.
#[derive(Clone, Debug)]
pub struct QuasiAbelianEigenvalue {
    pub value: f64,
    pub multiplicity: usize,
    pub irrep_label: String,
    /// All `d_π²` coefficient functions `π_{i,j}` spanning the eigenspace.
    pub eigenvectors: Vec<Vec<Complex64>>,
}

pub fn quasi_abelian_spectrum(
    group: &FiniteGroup,
    irreps: &IrrepSet,
    gamma: &CayleyFunction,
) -> Result<Vec<QuasiAbelianEigenvalue>> {
    if !is_class_function(group, gamma) {
        return Err(Error::NotClassFunction);
    }
    let gamma_c = gamma.to_complex();
    let mut out = Vec::new();
    for irrep in irreps.iter() {
        let d = irrep.dim();
        let pg = group_fourier(group, &gamma_c, irrep);
        let tr = pg.diag().sum();
        let value = tr.re / d as f64;
        let mut eigenvectors = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                eigenvectors.push(coefficient_function(irrep, i, j)?);
            }
        }
        out.push(QuasiAbelianEigenvalue {
            value,
            multiplicity: d * d,
            irrep_label: irrep.label().to_string(),
            eigenvectors,
        });
    }
    out.sort_by(|a, b| b.value.partial_cmp(&a.value).unwrap());
    Ok(out)
}

/// One eigenspace of an Abelian Cayley graphon: the characters whose
/// Fourier coefficient equals λ span the λ-eigenspace.
#[derive(Clone, Debug)]
pub struct AbelianEigenspace {
    pub value: f64,
    /// Indices into the irrep set of the characters supporting this
    /// eigenvalue.
    pub characters: Vec<usize>,
}

/// Spectrum of a Cayley graphon on an Abelian group by scalar Fourier
/// coefficients `λ_χ = (1/N) Σ_g γ(g) χ(g)`; γ's symmetry makes every λ
/// real. Equal values are grouped into shared eigenspaces.
pub fn abelian_spectrum(
    group: &FiniteGroup,
    irreps: &IrrepSet,
    gamma: &CayleyFunction,
) -> Result<Vec<AbelianEigenspace>> {
    if !group.is_abelian() {
        return Err(Error::InvalidGroup("abelian_spectrum requires an Abelian group".into()));
    }
    let gamma_c = gamma.to_complex();
    let mut coeffs: Vec<(usize, f64)> = Vec::with_capacity(irreps.len());
    for (k, irrep) in irreps.iter().enumerate() {
        if irrep.dim() != 1 {
            return Err(Error::InvalidIrrep {
                label: irrep.label().to_string(),
                reason: "Abelian irreps must be 1-dimensional".into(),
            });
        }
        let c = group_fourier(group, &gamma_c, irrep)[[0, 0]];
        if c.im.abs() > 1e-10 {
            return Err(Error::InvalidIrrep {
                label: irrep.label().to_string(),
                reason: format!("non-real eigenvalue {c} for a symmetric γ"),
            });
        }
        coeffs.push((k, c.re));
    }
    coeffs.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
    let mut out: Vec<AbelianEigenspace> = Vec::new();
    for (k, v) in coeffs {
        match out.last_mut() {
            Some(last) if (last.value - v).abs() <= 1e-9 => last.characters.push(k),
            _ => out.push(AbelianEigenspace { value: v, characters: vec![k] }),
        }
    }
    Ok(out)
}
