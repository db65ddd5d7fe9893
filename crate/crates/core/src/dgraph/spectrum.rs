use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumOptions {
    /// Eigenvalues closer than `merge_tolerance · max(1, max degree)` share
    /// a multiplicity bucket.
    pub merge_tolerance: f64,
    pub vertex_cap: usize,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions {
            merge_tolerance: 1e-6,
            vertex_cap: 2000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: usize,
}

/// Adjacency spectrum with merged multiplicities, values descending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<SpectrumEntry>,
}

impl Spectrum {
    pub fn vertex_count(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.multiplicity).sum()
    }

    /// `Σ value · multiplicity`; the adjacency trace, so zero up to rounding.
    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().map(|e| e.value * e.multiplicity as f64).sum()
    }

    /// `Σ value² · multiplicity`; equals twice the edge count.
    pub fn sum_of_squares(&self) -> f64 {
        self.eigenvalues
            .iter()
            .map(|e| e.value * e.value * e.multiplicity as f64)
            .sum()
    }

    /// Rounds every bucket to the nearest integer when all of them lie
    /// within `tol` of one; `None` otherwise.
    pub fn as_integers(&self, tol: f64) -> Option<Vec<(i64, usize)>> {
        self.eigenvalues
            .iter()
            .map(|e| {
                let r = e.value.round();
                ((e.value - r).abs() <= tol).then_some((r as i64, e.multiplicity))
            })
            .collect()
    }
}

/// Raw adjacency eigenvalues in descending order.
pub fn eigenvalues(graph: &Graph, vertex_cap: usize) -> Result<Vec<f64>> {
    let n = graph.vertex_count();
    if n > vertex_cap {
        return Err(Error::VertexCapExceeded {
            vertices: n,
            cap: vertex_cap,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let m = DMatrix::from_fn(n, n, |i, j| if graph.has_edge(i, j) { 1.0 } else { 0.0 });
    let mut values: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

pub fn spectrum(graph: &Graph, options: &SpectrumOptions) -> Result<Spectrum> {
    let values = eigenvalues(graph, options.vertex_cap)?;
    let tol = options.merge_tolerance * graph.max_degree().max(1) as f64;
    let mut buckets: Vec<Vec<f64>> = Vec::new();
    for v in values {
        match buckets.last_mut() {
            Some(b) if b[0] - v <= tol => b.push(v),
            _ => buckets.push(vec![v]),
        }
    }
    Ok(Spectrum {
        eigenvalues: buckets
            .into_iter()
            .map(|b| SpectrumEntry {
                value: b.iter().sum::<f64>() / b.len() as f64,
                multiplicity: b.len(),
            })
            .collect(),
    })
}
