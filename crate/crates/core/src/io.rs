//! File formats: model matrices as CSV, graphs as edge lists, signals as
//! one complex value per line, groups/irreps/Cayley functions as JSON.

use std::collections::BTreeMap;
use std::path::Path;

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cayley::{CayleyFunction, FiniteGroup, Irrep, IrrepSet};
use crate::error::{Error, Result};
use crate::graphon::{Graph, StepGraphon};

/// Model-matrix CSV: k rows of k comma-separated reals in [0, 1]; an
/// optional first line `measures: m₁,…,m_k` overrides the uniform default.
pub fn read_model_matrix(path: impl AsRef<Path>) -> Result<StepGraphon> {
    let text = std::fs::read_to_string(path)?;
    parse_model_matrix(&text)
}

pub fn parse_model_matrix(text: &str) -> Result<StepGraphon> {
    let mut measures: Option<Vec<f64>> = None;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("measures:") {
            if !rows.is_empty() {
                return Err(Error::Parse("measures line must come first".into()));
            }
            measures = Some(parse_reals(rest, lineno)?);
            continue;
        }
        rows.push(parse_reals(line, lineno)?);
    }
    let k = rows.len();
    if k == 0 {
        return Err(Error::Parse("empty model matrix".into()));
    }
    if rows.iter().any(|r| r.len() != k) {
        return Err(Error::Parse(format!("expected {k} columns in every row")));
    }
    let values = Array2::from_shape_fn((k, k), |(r, c)| rows[r][c]);
    match measures {
        Some(m) => StepGraphon::new(values, Array1::from_vec(m)),
        None => StepGraphon::uniform(values),
    }
}

pub fn write_model_matrix(path: impl AsRef<Path>, w: &StepGraphon) -> Result<()> {
    let mut out = String::new();
    let k = w.cell_count();
    let uniform = w.measures().iter().all(|&m| (m - 1.0 / k as f64).abs() < 1e-15);
    if !uniform {
        let m: Vec<String> = w.measures().iter().map(|v| format!("{v}")).collect();
        out.push_str(&format!("measures: {}\n", m.join(",")));
    }
    for r in 0..k {
        let row: Vec<String> = (0..k).map(|c| format!("{}", w.values()[[r, c]])).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    std::fs::write(path, out)?;
    Ok(())
}

fn parse_reals(text: &str, lineno: usize) -> Result<Vec<f64>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))
        })
        .collect()
}

/// Edge list with a `n <count>` header and one `u v` pair (0-based) per
/// line.
pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut toks = line.split_whitespace();
        match (toks.next(), toks.next(), toks.next()) {
            (Some("n"), Some(count), None) => {
                n = Some(
                    count
                        .parse()
                        .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?,
                );
            }
            (Some(u), Some(v), None) => {
                let u = u.parse().map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
                let v = v.parse().map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
                edges.push((u, v));
            }
            _ => return Err(Error::Parse(format!("line {}: expected `u v`", lineno + 1))),
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing `n <count>` header".into()))?;
    Graph::from_edges(n, &edges)
}

pub fn write_graph(path: impl AsRef<Path>, graph: &Graph) -> Result<()> {
    let mut out = format!("n {}\n", graph.vertex_count());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// Signal file: one value per line, `re` or `re,im`.
pub fn read_signal(path: impl AsRef<Path>) -> Result<Vec<Complex64>> {
    let text = std::fs::read_to_string(path)?;
    parse_signal(&text)
}

pub fn parse_signal(text: &str) -> Result<Vec<Complex64>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split(',').collect();
        let bad = |e: std::num::ParseFloatError| Error::Parse(format!("line {}: {e}", lineno + 1));
        match parts.as_slice() {
            [re] => out.push(Complex64::new(re.trim().parse().map_err(bad)?, 0.0)),
            [re, im] => out.push(Complex64::new(
                re.trim().parse().map_err(bad)?,
                im.trim().parse().map_err(bad)?,
            )),
            _ => return Err(Error::Parse(format!("line {}: expected `re` or `re,im`", lineno + 1))),
        }
    }
    Ok(out)
}

pub fn write_signal(path: impl AsRef<Path>, signal: &[Complex64]) -> Result<()> {
    let mut out = String::new();
    for z in signal {
        if z.im == 0.0 {
            out.push_str(&format!("{}\n", z.re));
        } else {
            out.push_str(&format!("{},{}\n", z.re, z.im));
        }
    }
    std::fs::write(path, out)?;
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct GroupFile {
    #[serde(default)]
    name: Option<String>,
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    #[serde(default)]
    classes: Option<Vec<Vec<usize>>>,
}

/// Group JSON: element names, N×N multiplication table of indices, optional
/// conjugacy classes (validated when present, computed otherwise).
pub fn read_group(path: impl AsRef<Path>) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(&path)?;
    let file: GroupFile = serde_json::from_str(&text)?;
    let name = file.name.unwrap_or_else(|| "group".to_string());
    FiniteGroup::new(name, file.elements, file.table, file.classes)
}

pub fn write_group(path: impl AsRef<Path>, group: &FiniteGroup) -> Result<()> {
    let file = GroupFile {
        name: Some(group.name().to_string()),
        elements: group.element_names().to_vec(),
        table: group.multiplication_table().to_vec(),
        classes: Some(group.conjugacy_classes().to_vec()),
    };
    std::fs::write(path, serde_json::to_string_pretty(&file)?)?;
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct IrrepFile {
    label: String,
    dimension: usize,
    /// Per element: row-major `[re, im]` pairs.
    matrices: Vec<Vec<[f64; 2]>>,
}

#[derive(Serialize, Deserialize)]
struct IrrepSetFile {
    irreps: Vec<IrrepFile>,
}

/// Irrep JSON: a list of labeled irreps with per-element matrices as
/// row-major `[re, im]` pairs. The set is validated against the group
/// (unitarity, homomorphism, irreducibility, completeness).
pub fn read_irreps(path: impl AsRef<Path>, group: &FiniteGroup) -> Result<IrrepSet> {
    let text = std::fs::read_to_string(&path)?;
    let file: IrrepSetFile = serde_json::from_str(&text)?;
    let mut irreps = Vec::new();
    for entry in file.irreps {
        let d = entry.dimension;
        let mut mats = Vec::with_capacity(entry.matrices.len());
        for (g, flat) in entry.matrices.iter().enumerate() {
            if flat.len() != d * d {
                return Err(Error::InvalidIrrep {
                    label: entry.label.clone(),
                    reason: format!("matrix {g} has {} entries, expected {}", flat.len(), d * d),
                });
            }
            mats.push(Array2::from_shape_fn((d, d), |(r, c)| {
                let [re, im] = flat[r * d + c];
                Complex64::new(re, im)
            }));
        }
        irreps.push(Irrep::new(entry.label, mats));
    }
    IrrepSet::new(group, irreps)
}

pub fn write_irreps(path: impl AsRef<Path>, irreps: &IrrepSet) -> Result<()> {
    let file = IrrepSetFile {
        irreps: irreps
            .iter()
            .map(|p| {
                let d = p.dim();
                IrrepFile {
                    label: p.label().to_string(),
                    dimension: d,
                    matrices: (0..p.element_count())
                        .map(|g| {
                            let m = p.matrix(g);
                            (0..d * d)
                                .map(|idx| {
                                    let z = m[[idx / d, idx % d]];
                                    [z.re, z.im]
                                })
                                .collect()
                        })
                        .collect(),
                }
            })
            .collect(),
    };
    std::fs::write(path, serde_json::to_string_pretty(&file)?)?;
    Ok(())
}

/// Cayley function JSON: an element-name → value map; symmetry
/// `γ(g) = γ(g⁻¹)` is validated on load.
pub fn read_cayley_function(path: impl AsRef<Path>, group: &FiniteGroup) -> Result<CayleyFunction> {
    let text = std::fs::read_to_string(&path)?;
    let map: BTreeMap<String, f64> = serde_json::from_str(&text)?;
    let mut values = vec![0.0; group.order()];
    for (name, value) in &map {
        let g = group
            .element_index(name)
            .ok_or_else(|| Error::Parse(format!("unknown element `{name}`")))?;
        values[g] = *value;
    }
    CayleyFunction::new(group, values)
}

pub fn write_cayley_function(path: impl AsRef<Path>, group: &FiniteGroup, gamma: &CayleyFunction) -> Result<()> {
    let map: BTreeMap<&str, f64> = group
        .element_names()
        .iter()
        .enumerate()
        .map(|(g, name)| (name.as_str(), gamma.value(g)))
        .collect();
    std::fs::write(path, serde_json::to_string_pretty(&map)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::symmetric_group_3;
    use ndarray::array;

    #[test]
    fn model_matrix_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.csv");
        let w = StepGraphon::new(
            array![[0.2, 0.7], [0.7, 0.5]],
            Array1::from_vec(vec![0.25, 0.75]),
        )
        .unwrap();
        write_model_matrix(&path, &w).unwrap();
        let back = read_model_matrix(&path).unwrap();
        assert_eq!(&w, &back);

        // uniform default when the measures line is absent
        let parsed = parse_model_matrix("0.1,0.9\n0.9,0.3\n").unwrap();
        assert_eq!(parsed.measures(), &Array1::from_vec(vec![0.5, 0.5]));

        assert!(parse_model_matrix("0.1,0.9\n0.9\n").is_err());
        assert!(parse_model_matrix("").is_err());
        assert!(parse_model_matrix("0.1,1.9\n1.9,0.3\n").is_err());
    }

    #[test]
    fn graph_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.edges");
        let g = Graph::from_edges(5, &[(0, 3), (1, 2), (2, 4)]).unwrap();
        write_graph(&path, &g).unwrap();
        let back = read_graph(&path).unwrap();
        assert_eq!(g, back);

        assert!(parse_graph("0 1\n").is_err()); // missing header
        assert!(parse_graph("n 2\n0 5\n").is_err());
        let empty = parse_graph("n 3\n").unwrap();
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn signal_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.sig");
        let signal =
            vec![Complex64::new(1.5, 0.0), Complex64::new(-0.25, 2.0), Complex64::new(0.0, 0.0)];
        write_signal(&path, &signal).unwrap();
        let back = read_signal(&path).unwrap();
        assert_eq!(signal, back);
        assert_eq!(parse_signal("1\n2,3\n").unwrap()[1], Complex64::new(2.0, 3.0));
        assert!(parse_signal("1,2,3\n").is_err());
    }

    #[test]
    fn group_and_irreps_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let gpath = dir.path().join("s3.json");
        let ipath = dir.path().join("s3_irreps.json");
        let cpath = dir.path().join("gamma.json");
        let (s3, irreps) = symmetric_group_3();
        write_group(&gpath, &s3).unwrap();
        let group = read_group(&gpath).unwrap();
        assert_eq!(group.order(), 6);
        assert_eq!(group.element_names(), s3.element_names());

        write_irreps(&ipath, &irreps).unwrap();
        let set = read_irreps(&ipath, &group).unwrap();
        assert_eq!(set.len(), 3);
        assert_eq!(set.by_label("pi").unwrap().dim(), 2);

        let gamma = CayleyFunction::new(&s3, vec![0.6, 0.1, 0.3, 0.0, 0.0, 0.0]).unwrap();
        write_cayley_function(&cpath, &s3, &gamma).unwrap();
        let back = read_cayley_function(&cpath, &group).unwrap();
        assert_eq!(gamma.values(), back.values());

        // symmetry violations are rejected on load
        std::fs::write(&cpath, r#"{"(123)": 0.4}"#).unwrap();
        assert!(read_cayley_function(&cpath, &group).is_err());
    }
}
