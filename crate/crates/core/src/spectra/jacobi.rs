use serde::Serialize;

use super::Inertia;
use crate::graph::Graph;
use crate::{Error, Result};

/// Default threshold below which an eigenvalue counts as zero.
pub const DEFAULT_TOL: f64 = 1e-6;
/// Sweep cap of the cyclic Jacobi iteration.
pub const JACOBI_MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TARGET: f64 = 1e-12;

/// Floating-point adjacency spectrum, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumF {
    pub values: Vec<f64>,
    pub tol: f64,
}

impl SpectrumF {
    /// Sign counts with `|λ| <= tol` counted as zero.
    pub fn inertia(&self) -> Inertia {
        let mut i = Inertia::default();
        for &x in &self.values {
            if x > self.tol {
                i.p += 1;
            } else if x < -self.tol {
                i.n_neg += 1;
            } else {
                i.eta += 1;
            }
        }
        i
    }
}

#[allow(clippy::needless_range_loop)]
fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            s += 2.0 * a[p][q] * a[p][q];
        }
    }
    s.sqrt()
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
#[allow(clippy::needless_range_loop)]
pub fn symmetric_eigenvalues(matrix: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = matrix.len();
    let mut a = matrix.to_vec();
    let mut sweeps = 0;
    while off_diagonal_norm(&a) >= OFF_DIAGONAL_TARGET {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NumericFailure(format!(
                "Jacobi iteration did not converge in {JACOBI_MAX_SWEEPS} sweeps (order {n})"
            )));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

/// Adjacency eigenvalues of `g`, descending.
pub fn eigenvalues_float(g: &Graph) -> Result<SpectrumF> {
    let n = g.order();
    let m: Vec<Vec<f64>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| if g.adjacent(u, v) { 1.0 } else { 0.0 })
                .collect()
        })
        .collect();
    Ok(SpectrumF {
        values: symmetric_eigenvalues(&m)?,
        tol: DEFAULT_TOL,
    })
}

pub fn inertia_float(g: &Graph, tol: f64) -> Result<Inertia> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let mut spec = eigenvalues_float(g)?;
    spec.tol = tol;
    Ok(spec.inertia())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, gn, path};

    fn close(values: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(values.len(), expected.len());
        for (x, y) in values.iter().zip(expected) {
            assert!((x - y).abs() < tol, "{values:?} vs {expected:?}");
        }
    }

    #[test]
    fn k2_exact() {
        close(
            &eigenvalues_float(&complete(2).unwrap()).unwrap().values,
            &[1.0, -1.0],
            1e-12,
        );
    }

    #[test]
    fn path_and_cycle_spectra() {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        close(
            &eigenvalues_float(&path(4).unwrap()).unwrap().values,
            &[phi, phi - 1.0, 1.0 - phi, -phi],
            1e-10,
        );
        for n in 3..=12 {
            let mut expected: Vec<f64> = (0..n)
                .map(|j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / n as f64).cos())
                .collect();
            expected.sort_by(|x, y| y.total_cmp(x));
            close(
                &eigenvalues_float(&cycle(n).unwrap()).unwrap().values,
                &expected,
                1e-9,
            );
        }
    }

    #[test]
    fn converges_at_order_64() {
        let k = eigenvalues_float(&complete(64).unwrap()).unwrap();
        assert!((k.values[0] - 63.0).abs() < 1e-9);
        assert!(k.values[1..].iter().all(|&x| (x + 1.0).abs() < 1e-9));
        let g = eigenvalues_float(&gn(64).unwrap()).unwrap();
        assert_eq!(g.values.len(), 64);
    }

    #[test]
    fn tolerance_validation() {
        assert!(inertia_float(&path(2).unwrap(), 0.0).is_err());
        assert_eq!(
            inertia_float(&Graph::empty(5).unwrap(), DEFAULT_TOL).unwrap(),
            Inertia::new(0, 0, 5)
        );
    }
}
