//! Small dense complex matrices.
//!
//! Only 2×2 and 4×4 operators show up in the game, so storage is a flat
//! row-major `Vec` and every routine is the textbook loop.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul};

use num_complex::Complex64 as C64;

use crate::math::{abs, sqrt};
use crate::{Error, Result};

/// Default tolerance for structural checks (Hermiticity, density, completeness).
pub const STRUCT_TOL: f64 = 1e-9;

/// Square complex matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl CMatrix {
    /// All-zero `dim`×`dim` matrix.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        CMatrix { dim, data: vec![C64::new(0.0, 0.0); dim * dim] }
    }

    /// Identity matrix.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = C64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from row-major entries; rejects wrong lengths and
    /// non-finite values.
    pub fn from_rows(dim: usize, entries: &[C64]) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::Shape { expected: dim * dim, found: entries.len() });
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Numerical { what: "matrix entry", residue: f64::NAN });
        }
        Ok(CMatrix { dim, data: entries.to_vec() })
    }

    /// Real diagonal matrix.
    pub fn diag(d: &[f64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &x) in d.iter().enumerate() {
            m.data[i * d.len() + i] = C64::new(x, 0.0);
        }
        m
    }

    /// `|v⟩⟨v|` for a column vector `v`.
    pub fn outer(v: &[C64]) -> Self {
        let n = v.len();
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = v[i] * v[j].conj();
            }
        }
        m
    }

    /// Side length.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    /// Entry at row `i`, column `j`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.dim + j]
    }

    /// Overwrites entry `(i, j)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, z: C64) {
        self.data[i * self.dim + j] = z;
    }

    /// Multiplies every entry by `k`.
    pub fn scale(&self, k: C64) -> Self {
        CMatrix { dim: self.dim, data: self.data.iter().map(|&z| z * k).collect() }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let n = self.dim;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[j * n + i] = self.data[i * n + j].conj();
            }
        }
        m
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Matrix product `self · rhs`.
    pub fn matmul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "matmul dimension mismatch");
        let n = self.dim;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..n {
                    m.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        m
    }

    /// `K ρ K†`.
    pub fn sandwich(&self, rho: &CMatrix) -> CMatrix {
        self.matmul(rho).matmul(&self.dagger())
    }

    /// Kronecker product: `(a⊗b)[(i·m+k),(j·m+l)] = a[i,j]·b[k,l]`.
    pub fn tensor(&self, b: &CMatrix) -> CMatrix {
        let (n, m) = (self.dim, b.dim);
        let d = n * m;
        let mut out = Self::zeros(d);
        for i in 0..n {
            for j in 0..n {
                let a = self.data[i * n + j];
                for k in 0..m {
                    for l in 0..m {
                        out.data[(i * m + k) * d + (j * m + l)] = a * b.data[k * m + l];
                    }
                }
            }
        }
        out
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| sqrt((a - b).norm_sqr()))
            .fold(0.0, f64::max)
    }

    /// True iff `‖M − M†‖_max ≤ tol`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.dagger()) <= tol
    }

    /// Eigenvalues of a Hermitian matrix, ascending.
    ///
    /// The Hermitian `A + iB` is embedded as the real symmetric
    /// `[[A, −B], [B, A]]`, whose spectrum is that of `A + iB` with every
    /// eigenvalue doubled; cyclic Jacobi then diagonalizes it.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let n = self.dim;
        let m = 2 * n;
        let mut s = vec![0.0; m * m];
        for i in 0..n {
            for j in 0..n {
                // Symmetrize so tiny non-Hermitian noise cannot stall Jacobi.
                let z = (self.get(i, j) + self.get(j, i).conj()) * 0.5;
                s[i * m + j] = z.re;
                s[(i + n) * m + (j + n)] = z.re;
                s[i * m + (j + n)] = -z.im;
                s[(i + n) * m + j] = z.im;
            }
        }
        let mut ev = jacobi_eigenvalues(&mut s, m);
        ev.sort_by(f64::total_cmp);
        ev.into_iter().step_by(2).collect()
    }

    /// Density-matrix test: Hermitian within `tol`, unit trace within `tol`,
    /// no eigenvalue below `−tol`.
    pub fn is_density(&self, tol: f64) -> bool {
        if !self.is_hermitian(tol) {
            return false;
        }
        let tr = self.trace();
        if abs(tr.re - 1.0) > tol || abs(tr.im) > tol {
            return false;
        }
        self.hermitian_eigenvalues().iter().all(|&l| l >= -tol)
    }
}

/// Cyclic Jacobi on a real symmetric `m`×`m` matrix, destroyed in place.
fn jacobi_eigenvalues(a: &mut [f64], m: usize) -> Vec<f64> {
    for _sweep in 0..100 {
        let off: f64 = (0..m)
            .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * m + j] * a[i * m + j])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..m {
            for q in (p + 1)..m {
                let apq = a[p * m + q];
                if abs(apq) < 1e-300 {
                    continue;
                }
                let theta = (a[q * m + q] - a[p * m + p]) / (2.0 * apq);
                let t = theta.signum() / (abs(theta) + sqrt(theta * theta + 1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..m {
                    let akp = a[k * m + p];
                    let akq = a[k * m + q];
                    a[k * m + p] = c * akp - s * akq;
                    a[k * m + q] = s * akp + c * akq;
                }
                for k in 0..m {
                    let apk = a[p * m + k];
                    let aqk = a[q * m + k];
                    a[p * m + k] = c * apk - s * aqk;
                    a[q * m + k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..m).map(|i| a[i * m + i]).collect()
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "add dimension mismatch");
        CMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        self.matmul(rhs)
    }
}

/// Tensor product, free-function form.
pub fn tensor(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.tensor(b)
}

/// Conjugate transpose, free-function form.
pub fn dagger(a: &CMatrix) -> CMatrix {
    a.dagger()
}

/// Trace, free-function form.
pub fn mat_trace(a: &CMatrix) -> C64 {
    a.trace()
}

/// Density-matrix test, free-function form.
pub fn is_density(m: &CMatrix, tol: f64) -> bool {
    m.is_density(tol)
}

/// The Pauli matrices `[I, σx, σy, σz]`.
pub fn paulis() -> [CMatrix; 4] {
    let o = C64::new(0.0, 0.0);
    let l = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    [
        CMatrix::identity(2),
        CMatrix { dim: 2, data: vec![o, l, l, o] },
        CMatrix { dim: 2, data: vec![o, -i, i, o] },
        CMatrix { dim: 2, data: vec![l, o, o, -l] },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn identity_tensor_identity() {
        let i2 = CMatrix::identity(2);
        assert_eq!(i2.tensor(&i2), CMatrix::identity(4));
    }

    #[test]
    fn sigma_z_tensor_sigma_z() {
        let z = &paulis()[3];
        assert_eq!(z.tensor(z), CMatrix::diag(&[1.0, -1.0, -1.0, 1.0]));
    }

    #[test]
    fn sigma_x_on_first_qubit_flips_00_to_10() {
        let x1 = paulis()[1].tensor(&CMatrix::identity(2));
        let out = x1.apply(&[c(1., 0.), c(0., 0.), c(0., 0.), c(0., 0.)]);
        assert_eq!(out, [c(0., 0.), c(0., 0.), c(1., 0.), c(0., 0.)]);
    }

    #[test]
    fn dagger_of_phase_diag() {
        let m = CMatrix::from_rows(2, &[c(0., 1.), c(0., 0.), c(0., 0.), c(0., -1.)]).unwrap();
        let d = CMatrix::from_rows(2, &[c(0., -1.), c(0., 0.), c(0., 0.), c(0., 1.)]).unwrap();
        assert_eq!(m.dagger(), d);
    }

    #[test]
    fn traces() {
        assert_eq!(CMatrix::identity(4).trace(), c(4., 0.));
        assert_eq!(paulis()[3].trace(), c(0., 0.));
    }

    #[test]
    fn density_checks() {
        assert!(CMatrix::diag(&[0.5, 0.0, 0.0, 0.5]).is_density(1e-9));
        assert!(!CMatrix::diag(&[2.0, 0.0, 0.0, -1.0]).is_density(1e-9));
    }

    #[test]
    fn eigenvalues_of_diagonal_and_pauli_y() {
        let ev = CMatrix::diag(&[0.3, -1.0, 2.0, 0.0]).hermitian_eigenvalues();
        for (a, b) in ev.iter().zip([-1.0, 0.0, 0.3, 2.0]) {
            assert!((a - b).abs() < 1e-12);
        }
        let ev = paulis()[2].hermitian_eigenvalues();
        assert!((ev[0] + 1.0).abs() < 1e-12 && (ev[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_shapes_and_nan() {
        assert!(CMatrix::from_rows(2, &[c(1., 0.); 3]).is_err());
        assert!(CMatrix::from_rows(1, &[c(f64::NAN, 0.)]).is_err());
    }
}
