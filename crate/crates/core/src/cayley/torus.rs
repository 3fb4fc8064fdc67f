//! The band Cayley graphon on the 1-dimensional torus: connection
//! probability `1−p` within circular distance d and `p` otherwise, the
//! small-world model in graphon form. Classical Fourier analysis on the
//! torus gives the spectrum in closed form; a cell-averaged discretization
//! provides the matching step graphon.

use std::f64::consts::PI;

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};
use crate::graphon::StepGraphon;

/// Band parameters: `w(x, y) = 1−p` when the circular distance |x−y| is at
/// most d, else p, with d, p ∈ (0, ½).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TorusBandParams {
    d: f64,
    p: f64,
}

impl TorusBandParams {
    pub fn new(d: f64, p: f64) -> Result<Self> {
        if !(0.0 < d && d < 0.5) {
            return Err(Error::Parse(format!("band width d = {d} outside (0, 1/2)")));
        }
        if !(0.0 < p && p < 0.5) {
            return Err(Error::Parse(format!("rewiring level p = {p} outside (0, 1/2)")));
        }
        Ok(TorusBandParams { d, p })
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Kernel value at circular offset u.
    pub fn value_at(&self, u: f64) -> f64 {
        let dist = circular_distance(u);
        if dist <= self.d {
            1.0 - self.p
        } else {
            self.p
        }
    }
}

fn circular_distance(u: f64) -> f64 {
    let r = u.rem_euclid(1.0);
    r.min(1.0 - r)
}

/// Closed-form spectrum of the band graphon: the constant eigenvector
/// carries `p + 2d − 4pd`, and each frequency pair (k, −k) shares
/// `(1−2p) sin(2πkd) / (πk)`, multiplicity 2.
#[derive(Clone, Debug)]
pub struct WsClosedForm {
    pub constant_eigenvalue: f64,
    /// `pair_eigenvalues[k−1]` is the k-th pair's shared eigenvalue.
    pub pair_eigenvalues: Vec<f64>,
}

impl WsClosedForm {
    /// `(eigenvalue, multiplicity)` sorted descending by value: the constant
    /// eigenvalue once, every pair twice.
    pub fn eigenvalues_descending(&self) -> Vec<(f64, usize)> {
        let mut all = vec![(self.constant_eigenvalue, 1usize)];
        all.extend(self.pair_eigenvalues.iter().map(|&v| (v, 2usize)));
        all.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
        all
    }

    /// The `count` largest eigenvalues with multiplicity expanded.
    pub fn leading(&self, count: usize) -> Vec<f64> {
        let mut out = Vec::new();
        for (v, m) in self.eigenvalues_descending() {
            for _ in 0..m {
                out.push(v);
            }
        }
        out.truncate(count);
        out
    }
}

/// Evaluate the closed form through frequency K.
pub fn ws_closed_form_spectrum(params: TorusBandParams, max_frequency: usize) -> WsClosedForm {
    assert!(max_frequency >= 1);
    let (d, p) = (params.d, params.p);
    let constant_eigenvalue = p + 2.0 * d - 4.0 * p * d;
    let pair_eigenvalues = (1..=max_frequency)
        .map(|k| (1.0 - 2.0 * p) * (2.0 * PI * k as f64 * d).sin() / (PI * k as f64))
        .collect();
    WsClosedForm { constant_eigenvalue, pair_eigenvalues }
}

/// Cell-averaged discretization on k uniform cells: entry (a, b) is the
/// exact average of the band kernel over the cell rectangle, computed from
/// the overlap of the circular band with the triangular offset density of
/// the cell pair. Spectra converge to the closed form as k grows.
pub fn discretize_torus_graphon(params: TorusBandParams, cells: usize) -> Result<StepGraphon> {
    if cells < 2 {
        return Err(Error::Parse(format!("need at least 2 cells, got {cells}")));
    }
    let k = cells;
    // band-overlap fraction depends only on (a − b) mod k
    let fractions: Vec<f64> = (0..k).map(|t| band_overlap(t as f64 / k as f64, 1.0 / k as f64, params.d)).collect();
    let values = Array2::from_shape_fn((k, k), |(a, b)| {
        let t = (a + k - b) % k;
        params.p + (1.0 - 2.0 * params.p) * fractions[t]
    });
    StepGraphon::new(values, Array1::from_elem(k, 1.0 / k as f64))
}

/// Probability that `c + V` lands within circular distance d of 0, where V
/// has the triangular density of the difference of two uniforms on a cell
/// of width h. The band is the union of intervals [m−d, m+d] over integers
/// m; the triangular CDF is piecewise quadratic, so each piece is exact.
fn band_overlap(c: f64, h: f64, d: f64) -> f64 {
    let cdf = |x: f64| -> f64 {
        let x = x.clamp(-h, h);
        if x <= 0.0 {
            let t = x + h;
            0.5 * t * t / (h * h)
        } else {
            1.0 - 0.5 * (h - x) * (h - x) / (h * h)
        }
    };
    let mut total = 0.0;
    for m in -2..=3 {
        let lo = m as f64 - d - c;
        let hi = m as f64 + d - c;
        if hi < -h || lo > h {
            continue;
        }
        total += cdf(hi) - cdf(lo);
    }
    total.clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SignedIndex;
    use approx::assert_abs_diff_eq;

    #[test]
    fn parameter_validation() {
        assert!(TorusBandParams::new(0.1, 0.1).is_ok());
        assert!(TorusBandParams::new(0.0, 0.1).is_err());
        assert!(TorusBandParams::new(0.5, 0.1).is_err());
        assert!(TorusBandParams::new(0.1, 0.5).is_err());
    }

    #[test]
    fn closed_form_reference_values() {
        // d = p = 0.1: λ₁ = 0.6p + 0.2 = 0.26, pair₁ = 0.8 sin(0.2π)/π
        let params = TorusBandParams::new(0.1, 0.1).unwrap();
        let ws = ws_closed_form_spectrum(params, 6);
        assert_abs_diff_eq!(ws.constant_eigenvalue, 0.26, epsilon = 1e-15);
        let expect = 0.8 * (0.2 * PI).sin() / PI;
        assert_abs_diff_eq!(ws.pair_eigenvalues[0], expect, epsilon = 1e-15);
        assert!((expect - 0.1496713).abs() < 1e-3);
        // sin(2πkd) = 0 at k = 5 for d = 0.1
        assert_abs_diff_eq!(ws.pair_eigenvalues[4], 0.0, epsilon = 1e-15);

        // the model-figure parameters d = 0.2, p = 0.08
        let params = TorusBandParams::new(0.2, 0.08).unwrap();
        let ws = ws_closed_form_spectrum(params, 1);
        assert_abs_diff_eq!(ws.constant_eigenvalue, 0.416, epsilon = 1e-12);
    }

    #[test]
    fn leading_respects_multiplicity() {
        let params = TorusBandParams::new(0.1, 0.1).unwrap();
        let ws = ws_closed_form_spectrum(params, 4);
        let top = ws.leading(9);
        assert_eq!(top.len(), 9);
        assert_abs_diff_eq!(top[0], 0.26, epsilon = 1e-15);
        assert_eq!(top[1], top[2]);
        assert!(top[1] > top[3]);
    }

    #[test]
    fn two_cell_overlap_integrals() {
        // hand integration for k = 2, d = 0.3: the diagonal cells keep
        // P(|V| ≤ 0.3) = 1 − (1 − 0.6)² = 0.84 of the band, the off-diagonal
        // cells 2 · (1 − 0.4)²/2 = 0.36
        let p = 0.1;
        let params = TorusBandParams::new(0.3, p).unwrap();
        let w = discretize_torus_graphon(params, 2).unwrap();
        let diag = p + (1.0 - 2.0 * p) * 0.84;
        let off = p + (1.0 - 2.0 * p) * 0.36;
        assert_abs_diff_eq!(w.values()[[0, 0]], diag, epsilon = 1e-12);
        assert_abs_diff_eq!(w.values()[[1, 1]], diag, epsilon = 1e-12);
        assert_abs_diff_eq!(w.values()[[0, 1]], off, epsilon = 1e-12);
    }

    #[test]
    fn overlap_matches_quadrature() {
        // midpoint-rule oracle over the offset density
        let quad = |c: f64, h: f64, d: f64| -> f64 {
            let steps = 400_000;
            let dv = 2.0 * h / steps as f64;
            let mut acc = 0.0;
            for s in 0..steps {
                let v = -h + (s as f64 + 0.5) * dv;
                let density = (h - v.abs()) / (h * h);
                if circular_distance(c + v) <= d {
                    acc += density * dv;
                }
            }
            acc
        };
        for &(c, h, d) in
            &[(0.0, 0.25, 0.3), (0.5, 0.25, 0.3), (0.125, 0.125, 0.2), (0.875, 0.125, 0.45)]
        {
            assert_abs_diff_eq!(band_overlap(c, h, d), quad(c, h, d), epsilon = 1e-5);
        }
    }

    #[test]
    fn wide_band_saturates() {
        let p = 0.2;
        let params = TorusBandParams::new(0.4999999, p).unwrap();
        let w = discretize_torus_graphon(params, 3).unwrap();
        for v in w.values().iter() {
            assert_abs_diff_eq!(*v, 1.0 - p, epsilon = 1e-5);
        }
    }

    #[test]
    fn discretized_spectrum_approaches_closed_form() {
        let params = TorusBandParams::new(0.1, 0.1).unwrap();
        let w = discretize_torus_graphon(params, 200).unwrap();
        let spec = w.spectrum_top(5, 0, None).unwrap();
        let ws = ws_closed_form_spectrum(params, 3);
        let expect = ws.leading(5);
        for (k, &e) in expect.iter().enumerate() {
            let got = spec.value(SignedIndex::positive(k + 1)).unwrap();
            assert!((got - e).abs() < 2e-4, "λ{} = {got}, closed form {e}", k + 1);
        }
        // exact degeneracy of the discrete pair
        let l2 = spec.value(SignedIndex::positive(2)).unwrap();
        let l3 = spec.value(SignedIndex::positive(3)).unwrap();
        assert!((l2 - l3).abs() < 1e-12);
    }
}
