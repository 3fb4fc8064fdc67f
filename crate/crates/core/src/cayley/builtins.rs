//! Built-in groups shipped with complete irrep sets: cyclic groups with
//! their characters, the symmetric group 𝕊₃ with its trivial, sign, and
//! standard representations, and direct products with tensor-product irreps.

use std::f64::consts::PI;

use ndarray::{array, Array2};
use num_complex::Complex64;

use super::{FiniteGroup, Irrep, IrrepSet};
use crate::error::Result;

/// ℤ_n with elements named "0" … "n−1" and character irreps
/// `chi_k(g) = exp(2πi k g / n)`.
pub fn cyclic_group(n: usize) -> (FiniteGroup, IrrepSet) {
    assert!(n >= 1);
    let names = (0..n).map(|g| g.to_string()).collect();
    let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let group = FiniteGroup::new(format!("Z{n}"), names, mul, None).expect("cyclic table is valid");
    let irreps = (0..n)
        .map(|k| {
            let mats = (0..n)
                .map(|g| {
                    let theta = 2.0 * PI * (k * g % n) as f64 / n as f64;
                    Array2::from_elem((1, 1), Complex64::new(theta.cos(), theta.sin()))
                })
                .collect();
            Irrep::new(format!("chi{k}"), mats)
        })
        .collect();
    let set = IrrepSet::new(&group, irreps).expect("characters form a complete set");
    (group, set)
}

/// 𝕊₃ with elements ordered (e, (12), (23), (13), (123), (132)), products
/// composed right to left, and the three irreps: trivial ι, sign τ, and the
/// 2-dimensional standard representation.
pub fn symmetric_group_3() -> (FiniteGroup, IrrepSet) {
    // permutations as images of (0, 1, 2)
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    let names = ["e", "(12)", "(23)", "(13)", "(123)", "(132)"];
    let index_of = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
    let mul: Vec<Vec<usize>> = (0..6)
        .map(|a| {
            (0..6)
                .map(|b| {
                    // (g·h)(x) = g(h(x))
                    let composed = [
                        perms[a][perms[b][0]],
                        perms[a][perms[b][1]],
                        perms[a][perms[b][2]],
                    ];
                    index_of(&composed)
                })
                .collect()
        })
        .collect();
    let group = FiniteGroup::new("S3", names.iter().map(|s| s.to_string()).collect(), mul, None)
        .expect("S3 table is valid");

    let re = |x: f64| Complex64::new(x, 0.0);
    let trivial = Irrep::new("iota", (0..6).map(|_| Array2::from_elem((1, 1), re(1.0))).collect());
    let signs = [1.0, -1.0, -1.0, -1.0, 1.0, 1.0];
    let sign =
        Irrep::new("tau", signs.iter().map(|&s| Array2::from_elem((1, 1), re(s))).collect());
    let h = 3f64.sqrt() / 2.0;
    let standard = Irrep::new(
        "pi",
        vec![
            array![[re(1.0), re(0.0)], [re(0.0), re(1.0)]],
            array![[re(-0.5), re(h)], [re(h), re(0.5)]],
            array![[re(1.0), re(0.0)], [re(0.0), re(-1.0)]],
            array![[re(-0.5), re(-h)], [re(-h), re(0.5)]],
            array![[re(-0.5), re(-h)], [re(h), re(-0.5)]],
            array![[re(-0.5), re(h)], [re(-h), re(-0.5)]],
        ],
    );
    let set = IrrepSet::new(&group, vec![trivial, sign, standard]).expect("S3 irreps are complete");
    (group, set)
}

/// The 6×6 model matrix of the 𝕊₃ ranking graphon with connection
/// probabilities (r, p, q) = (0.6, 0.1, 0.3): a relabeling of the Cayley
/// matrix of γ = (0.6, 0.1, 0.3, 0, 0, 0) on the element order above.
pub fn s3_model_matrix() -> Array2<f64> {
    array![
        [0.6, 0.3, 0.1, 0.0, 0.0, 0.0],
        [0.3, 0.6, 0.0, 0.0, 0.1, 0.0],
        [0.1, 0.0, 0.6, 0.3, 0.0, 0.0],
        [0.0, 0.0, 0.3, 0.6, 0.0, 0.1],
        [0.0, 0.1, 0.0, 0.0, 0.6, 0.3],
        [0.0, 0.0, 0.0, 0.1, 0.3, 0.6],
    ]
}

/// Direct product G×H with elements ordered (g, h) ↦ g·|H| + h and irreps
/// the tensor products of the factors' irreps.
pub fn direct_product(
    g: &FiniteGroup,
    g_irreps: &IrrepSet,
    h: &FiniteGroup,
    h_irreps: &IrrepSet,
) -> Result<(FiniteGroup, IrrepSet)> {
    let (ng, nh) = (g.order(), h.order());
    let n = ng * nh;
    let names: Vec<String> = (0..n)
        .map(|e| format!("({},{})", g.element_names()[e / nh], h.element_names()[e % nh]))
        .collect();
    let mul: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| g.mul(a / nh, b / nh) * nh + h.mul(a % nh, b % nh))
                .collect()
        })
        .collect();
    let product = FiniteGroup::new(format!("{}x{}", g.name(), h.name()), names, mul, None)?;
    let mut irreps = Vec::new();
    for pi in g_irreps.iter() {
        for rho in h_irreps.iter() {
            let mats = (0..n)
                .map(|e| kronecker(pi.matrix(e / nh), rho.matrix(e % nh)))
                .collect();
            irreps.push(Irrep::new(format!("{}x{}", pi.label(), rho.label()), mats));
        }
    }
    let set = IrrepSet::new(&product, irreps)?;
    Ok((product, set))
}

fn kronecker(a: &Array2<Complex64>, b: &Array2<Complex64>) -> Array2<Complex64> {
    let (ra, ca) = (a.nrows(), a.ncols());
    let (rb, cb) = (b.nrows(), b.ncols());
    Array2::from_shape_fn((ra * rb, ca * cb), |(r, c)| a[[r / rb, c / cb]] * b[[r % rb, c % cb]])
}
