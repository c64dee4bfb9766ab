//! Floating-point spectra: eigenvalues, singular values, energy and Schatten
//! norms of adjacency matrices.
//!
//! The solver is a cyclic Jacobi sweep over the dense symmetric matrix —
//! deterministic, dependency-free, and accurate to close to machine epsilon
//! at the sizes this crate targets. Everything numeric here is advisory:
//! exact verdicts always come from [`crate::poly`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_SWEEPS: usize = 64;

/// Default clustering tolerance: `1e-9 · max(1, ρ)`.
pub fn default_tol(spectral_radius: f64) -> f64 {
    1e-9 * spectral_radius.abs().max(1.0)
}

/// Threshold below which a singular value counts as zero:
/// `1e-7 · max(1, ρ)`. Integral and near-integral spectra at desk scale have
/// separations no smaller than 1, so this margin is comfortable.
pub fn zero_threshold(spectral_radius: f64) -> f64 {
    1e-7 * spectral_radius.abs().max(1.0)
}

/// Adjacency spectrum with tolerance-clustered multiplicities.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumNumeric {
    /// All `n` eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
    /// `(value, multiplicity)` groups, descending by value. Group values are
    /// means of their members; multiplicities sum to `n`.
    pub groups: Vec<(f64, usize)>,
    /// Clustering tolerance that produced `groups`.
    pub tol: f64,
}

impl SpectrumNumeric {
    /// Spectrum of `g` clustered at tolerance `tol` (must be positive).
    pub fn compute(g: &Graph, tol: f64) -> Result<Self> {
        if tol <= 0.0 {
            return Err(Error::InvalidParameter(format!("tolerance {tol} must be > 0")));
        }
        let mut ev = jacobi_eigenvalues(g)?;
        ev.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        Ok(Self::from_sorted(ev, tol))
    }

    /// Spectrum of `g` with the default tolerance rule applied to the
    /// computed spectral radius.
    pub fn compute_auto(g: &Graph) -> Result<Self> {
        let mut ev = jacobi_eigenvalues(g)?;
        ev.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        let rho = ev
            .iter()
            .fold(0.0f64, |acc, &v| acc.max(v.abs()));
        Ok(Self::from_sorted(ev, default_tol(rho)))
    }

    fn from_sorted(eigenvalues: Vec<f64>, tol: f64) -> Self {
        // single-linkage clustering: a gap wider than 10·tol starts a group
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut start = 0;
        for i in 0..=eigenvalues.len() {
            let boundary = i == eigenvalues.len()
                || (i > start && eigenvalues[i - 1] - eigenvalues[i] > 10.0 * tol);
            if boundary && i > start {
                let mult = i - start;
                let mean = eigenvalues[start..i].iter().sum::<f64>() / mult as f64;
                groups.push((mean, mult));
                start = i;
            }
        }
        SpectrumNumeric {
            eigenvalues,
            groups,
            tol,
        }
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues
            .iter()
            .fold(0.0f64, |acc, &v| acc.max(v.abs()))
    }

    /// JSON per the published schema: `{"groups":[[value,mult],...],"tol":t}`
    /// with values printed to 17 significant digits.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{\"groups\":[");
        for (i, (v, m)) in self.groups.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&format!("[{},{}]", fmt_f64(*v), m));
        }
        s.push_str(&format!("],\"tol\":{}}}", fmt_f64(self.tol)));
        s
    }
}

fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// All eigenvalues of the adjacency matrix, unsorted, via cyclic Jacobi.
fn jacobi_eigenvalues(g: &Graph) -> Result<Vec<f64>> {
    let (ev, _) = jacobi(adjacency_dense(g), g.vertex_count(), false)?;
    Ok(ev)
}

/// Full eigendecomposition `A = V diag(λ) Vᵀ`; `vectors[i*n + j]` is
/// component `i` of the eigenvector paired with `values[j]`.
pub(crate) fn eigen_decomposition(g: &Graph) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = g.vertex_count();
    let (values, vectors) = jacobi(adjacency_dense(g), n, true)?;
    Ok((values, vectors.expect("vectors requested")))
}

pub(crate) fn adjacency_dense(g: &Graph) -> Vec<f64> {
    let n = g.vertex_count();
    let mut a = vec![0.0; n * n];
    for u in 0..n {
        for v in g.neighbors(u) {
            a[u * n + v] = 1.0;
        }
    }
    a
}

/// Cyclic Jacobi on a symmetric matrix, annihilating each off-diagonal
/// entry per sweep. Errors when the sweep budget runs out before the
/// off-diagonal mass dies.
fn jacobi(mut a: Vec<f64>, n: usize, want_vectors: bool) -> Result<(Vec<f64>, Option<Vec<f64>>)> {
    let mut v = if want_vectors {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        Some(id)
    } else {
        None
    };
    if n < 2 {
        return Ok(((0..n).map(|i| a[i * n + i]).collect(), v));
    }
    let scale: f64 = a.iter().map(|x| x.abs()).sum::<f64>().max(1.0);
    let conv = 1e-15 * scale;

    for _sweep in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n - 1 {
            for q in p + 1..n {
                off += a[p * n + q].abs();
            }
        }
        if off <= conv {
            return Ok(((0..n).map(|i| a[i * n + i]).collect(), v));
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                let app = a[p * n + p];
                let aqq = a[q * n + q];
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    let new_p = aip - s * (aiq + tau * aip);
                    let new_q = aiq + s * (aip - tau * aiq);
                    a[i * n + p] = new_p;
                    a[p * n + i] = new_p;
                    a[i * n + q] = new_q;
                    a[q * n + i] = new_q;
                }
                if let Some(v) = v.as_mut() {
                    for i in 0..n {
                        let vip = v[i * n + p];
                        let viq = v[i * n + q];
                        v[i * n + p] = vip - s * (viq + tau * vip);
                        v[i * n + q] = viq + s * (vip - tau * viq);
                    }
                }
            }
        }
    }
    let mut off = 0.0;
    for p in 0..n - 1 {
        for q in p + 1..n {
            off += a[p * n + q].abs();
        }
    }
    Err(Error::EigenSolver {
        sweeps: MAX_SWEEPS,
        off_norm: off,
    })
}

/// Singular values of the adjacency matrix, descending: absolute
/// eigenvalues, since the matrix is symmetric.
pub fn singular_values(g: &Graph, tol: f64) -> Result<Vec<f64>> {
    let spectrum = SpectrumNumeric::compute(g, tol)?;
    let mut sv: Vec<f64> = spectrum.eigenvalues.iter().map(|v| v.abs()).collect();
    sv.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    Ok(sv)
}

/// Singular values above the zero threshold — the numeric signature used to
/// cross-check the exact singular-cospectrality test.
pub fn nonzero_singular_values(g: &Graph, tol: f64) -> Result<Vec<f64>> {
    let sv = singular_values(g, tol)?;
    let rho = sv.first().copied().unwrap_or(0.0);
    let cut = zero_threshold(rho);
    Ok(sv.into_iter().take_while(|&s| s > cut).collect())
}

/// Graph energy `Σ|λ_i|` — the trace norm of the adjacency matrix, equal to
/// the Schatten norm at `p = 1`.
pub fn energy(g: &Graph, tol: f64) -> Result<f64> {
    Ok(singular_values(g, tol)?.iter().sum())
}

/// Schatten `p`-norm `(Σ s_i^p)^{1/p}` of the adjacency matrix, `p >= 1`.
pub fn schatten(g: &Graph, p: f64, tol: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "Schatten norm needs p >= 1, got {p}"
        )));
    }
    let sv = singular_values(g, tol)?;
    let sum: f64 = sv.iter().map(|s| s.powf(p)).sum();
    Ok(sum.powf(1.0 / p))
}

/// Largest absolute eigenvalue.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<f64> {
    Ok(SpectrumNumeric::compute(g, tol)?.spectral_radius())
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-9;

    fn groups_match(spec: &SpectrumNumeric, expected: &[(f64, usize)], eps: f64) -> bool {
        spec.groups.len() == expected.len()
            && spec
                .groups
                .iter()
                .zip(expected)
                .all(|(&(v, m), &(ev, em))| (v - ev).abs() < eps && m == em)
    }

    #[test]
    fn complete_graph_spectrum() {
        let s = SpectrumNumeric::compute(&Graph::complete(5), TOL).unwrap();
        assert!(groups_match(&s, &[(4.0, 1), (-1.0, 4)], 1e-12), "{:?}", s.groups);
    }

    #[test]
    fn cycle_spectrum_matches_circulant_formula() {
        // oracle: eigenvalues of C_n are 2cos(2πk/n)
        let n = 6;
        let s = SpectrumNumeric::compute(&Graph::cycle(n).unwrap(), TOL).unwrap();
        let mut expected: Vec<f64> = (0..n)
            .map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
            .collect();
        expected.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (got, want) in s.eigenvalues.iter().zip(&expected) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
        assert!(groups_match(&s, &[(2.0, 1), (1.0, 2), (-1.0, 2), (-2.0, 1)], 1e-12));
    }

    #[test]
    fn spectrum_invariants() {
        for g in [
            Graph::complete(6),
            Graph::cycle(7).unwrap(),
            Graph::path(5),
            Graph::complete_bipartite(3, 4),
        ] {
            let n = g.vertex_count() as f64;
            let s = SpectrumNumeric::compute(&g, TOL).unwrap();
            let sum: f64 = s.eigenvalues.iter().sum();
            let sumsq: f64 = s.eigenvalues.iter().map(|v| v * v).sum();
            assert!(sum.abs() <= TOL * n.max(1.0) + 1e-12);
            assert!((sumsq - 2.0 * g.edge_count() as f64).abs() <= 1e-9 * n);
            assert_eq!(s.groups.iter().map(|&(_, m)| m).sum::<usize>(), g.vertex_count());
        }
    }

    #[test]
    fn singular_values_cases() {
        let sv = singular_values(&Graph::complete(2), TOL).unwrap();
        assert!((sv[0] - 1.0).abs() < 1e-13 && (sv[1] - 1.0).abs() < 1e-13);
        // C4: |{2,0,0,-2}| resorted
        let sv = singular_values(&Graph::cycle(4).unwrap(), TOL).unwrap();
        let expected = [2.0, 2.0, 0.0, 0.0];
        for (a, b) in sv.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12);
        }
        let sv = singular_values(&Graph::complete(5), TOL).unwrap();
        let expected = [4.0, 1.0, 1.0, 1.0, 1.0];
        for (a, b) in sv.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12);
        }
        assert_eq!(nonzero_singular_values(&Graph::cycle(4).unwrap(), TOL).unwrap().len(), 2);
    }

    #[test]
    fn energy_cases() {
        for n in 2..=7usize {
            let e = energy(&Graph::complete(n), TOL).unwrap();
            assert!((e - 2.0 * (n as f64 - 1.0)).abs() < 1e-11, "K_{n}");
        }
        assert_eq!(energy(&Graph::empty(4), TOL).unwrap(), 0.0);
        assert!((energy(&Graph::complete(2), TOL).unwrap() - 2.0).abs() < 1e-13);
    }

    #[test]
    fn schatten_norms() {
        let g = Graph::cycle(5).unwrap();
        let m = g.edge_count() as f64;
        // f_G(2) = sqrt(2m)
        assert!((schatten(&g, 2.0, TOL).unwrap() - (2.0 * m).sqrt()).abs() < 1e-12);
        assert!((schatten(&Graph::complete(2), 1.0, TOL).unwrap() - 2.0).abs() < 1e-13);
        assert!(schatten(&g, 0.5, TOL).is_err());

        // monotone nonincreasing in p, bounded below by s1
        for g in [Graph::complete(4), Graph::path(6), Graph::cycle(7).unwrap()] {
            let s1 = spectral_radius(&g, TOL).unwrap();
            let grid = [1.0, 1.5, 2.0, 4.0, 8.0, 16.0, 64.0];
            let vals: Vec<f64> = grid
                .iter()
                .map(|&p| schatten(&g, p, TOL).unwrap())
                .collect();
            for w in vals.windows(2) {
                assert!(w[1] <= w[0] + 1e-12);
            }
            // convergence to s1: f(p) - s1 <= s1 (n^{1/p} - 1), tight bound
            let n = g.vertex_count() as f64;
            let bound = s1 * (n.powf(1.0 / 64.0) - 1.0) + 1e-10;
            assert!(vals[6] >= s1 - 1e-10);
            assert!(vals[6] - s1 <= bound, "{} vs {}", vals[6] - s1, bound);
        }
    }

    #[test]
    fn spectral_radius_cases() {
        for n in 2..=6usize {
            assert!((spectral_radius(&Graph::complete(n), TOL).unwrap() - (n as f64 - 1.0)).abs() < 1e-12);
        }
        // d-regular graph: radius d = 2m/n
        let g = Graph::cycle(8).unwrap();
        assert!((spectral_radius(&g, TOL).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(spectral_radius(&Graph::empty(3), TOL).unwrap(), 0.0);
    }

    #[test]
    fn rejects_nonpositive_tolerance() {
        assert!(SpectrumNumeric::compute(&Graph::complete(3), 0.0).is_err());
        assert!(SpectrumNumeric::compute(&Graph::complete(3), -1.0).is_err());
    }

    #[test]
    fn json_shape() {
        let s = SpectrumNumeric::compute(&Graph::complete(2), TOL).unwrap();
        let j = s.to_json();
        assert!(j.starts_with("{\"groups\":[["));
        assert!(j.contains("\"tol\":"));
        // parses as JSON
        let v: serde_json::Value = serde_json::from_str(&j).unwrap();
        assert_eq!(v["groups"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn eigenvectors_reconstruct_matrix() {
        let g = Graph::complete_bipartite(2, 3);
        let n = g.vertex_count();
        let (vals, vecs) = eigen_decomposition(&g).unwrap();
        let a = adjacency_dense(&g);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0.0;
                for k in 0..n {
                    acc += vecs[i * n + k] * vals[k] * vecs[j * n + k];
                }
                assert!((acc - a[i * n + j]).abs() < 1e-12);
            }
        }
    }
}
