use serde::{Deserialize, Serialize};

use crate::graph::{DistanceMatrix, Graph};
use crate::linalg::symmetric_eigen;
use crate::{RealMatrix, Result};

/// Laplacian and distance-matrix spectra of a connected graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralInfo {
    /// Second-smallest Laplacian eigenvalue (zero for a single vertex).
    pub lambda1: f64,
    /// Ascending.
    pub laplacian_spectrum: Vec<f64>,
    /// Descending.
    pub distance_spectrum: Vec<f64>,
    /// Unit leading eigenvector of `D`, signed so its entries sum to a
    /// nonnegative value.
    pub perron_vector: Vec<f64>,
    /// `⟨v, 1⟩ / (‖v‖ · √n)`.
    pub c_g: f64,
}

/// `L = Deg − A`.
pub fn laplacian(g: &Graph) -> RealMatrix {
    RealMatrix::from_fn(g.n(), g.n(), |i, j| {
        if i == j {
            g.degree(i) as f64
        } else if g.has_edge(i, j) {
            -1.0
        } else {
            0.0
        }
    })
}

pub fn spectral_gap(g: &Graph, d: &DistanceMatrix) -> Result<SpectralInfo> {
    let lap = symmetric_eigen(&laplacian(g))?;
    let mut laplacian_spectrum = lap.values;
    laplacian_spectrum.reverse();
    let lambda1 = laplacian_spectrum.get(1).copied().unwrap_or(0.0);

    let dist = symmetric_eigen(&d.to_real())?;
    let mut perron_vector = dist.vector(0);
    let sum: f64 = perron_vector.iter().sum();
    if sum < 0.0 {
        perron_vector.iter_mut().for_each(|x| *x = -*x);
    }
    let norm = perron_vector.iter().map(|x| x * x).sum::<f64>().sqrt();
    let n = perron_vector.len() as f64;
    let c_g = (perron_vector.iter().sum::<f64>() / (norm * n.sqrt())).min(1.0);
    Ok(SpectralInfo { lambda1, laplacian_spectrum, distance_spectrum: dist.values, perron_vector, c_g })
}
