//! Dense complex matrices, sized for desk-scale work (dimension up to 2^6).

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{cone, cscale, czero, Real};

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![czero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { cone() } else { czero() })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    /// Builds from row-major entries; `entries.len()` must be a perfect square.
    pub fn from_rows(entries: Vec<Complex<T>>) -> Result<Self> {
        let dim = (entries.len() as f64).sqrt().round() as usize;
        if dim * dim != entries.len() {
            return Err(Error::Argument(format!(
                "{} entries do not form a square matrix",
                entries.len()
            )));
        }
        Ok(Self { dim, data: entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex<T>] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| *z * s).collect(),
        }
    }

    pub fn apply(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(
            x.len(),
            self.dim,
            "vector length must match matrix dimension"
        );
        (0..self.dim)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(czero(), |acc, (a, b)| acc + *a * *b)
            })
            .collect()
    }

    /// Kronecker product: entry `((i1, i2), (j1, j2)) = self[i1, j1] * other[i2, j2]`.
    pub fn kron(&self, other: &Self) -> Self {
        let d = other.dim;
        Self::from_fn(self.dim * d, |i, j| {
            self[(i / d, j / d)] * other[(i % d, j % d)]
        })
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, z| m.max(z.norm()))
    }

    /// Largest singular value.
    pub fn op_norm(&self) -> T {
        singular_values(self.dim, self.dim, &self.data)
            .first()
            .copied()
            .unwrap_or_else(T::zero)
    }

    pub fn singular_values(&self) -> Vec<T> {
        singular_values(self.dim, self.dim, &self.data)
    }

    /// Operator norm of `self - other`.
    pub fn distance(&self, other: &Self) -> T {
        (self - other).op_norm()
    }

    /// Operator norm of `self^dagger self - Id`.
    pub fn unitarity_residual(&self) -> T {
        let gram = &self.adjoint() * self;
        gram.distance(&Self::identity(self.dim))
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).fold(czero(), |acc, i| acc + self[(i, i)])
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> Complex<T> {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut det = cone::<T>();
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&r, &s| {
                    a[r * n + col]
                        .norm()
                        .partial_cmp(&a[s * n + col].norm())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })
                .expect("non-empty pivot range");
            if a[pivot * n + col].norm() == T::zero() {
                return czero();
            }
            if pivot != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot * n + k);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det = det * p;
            for r in col + 1..n {
                let f = a[r * n + col] / p;
                for k in col..n {
                    let v = a[col * n + k];
                    a[r * n + k] = a[r * n + k] - f * v;
                }
            }
        }
        det
    }
}

impl<T> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.dim + j]
    }
}

impl<T> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.dim + j]
    }
}

impl<T: Real> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn mul(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix product");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] = out.data[i * n + j] + a * rhs.data[k * n + j];
                }
            }
        }
        out
    }
}

impl<T: Real> Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn add(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix sum");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<T: Real> Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn sub(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix difference");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Complex 2x2 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2<T> {
    pub m: [[Complex<T>; 2]; 2],
}

impl<T: Real> Mat2<T> {
    pub fn new(m00: Complex<T>, m01: Complex<T>, m10: Complex<T>, m11: Complex<T>) -> Self {
        Self {
            m: [[m00, m01], [m10, m11]],
        }
    }

    pub fn identity() -> Self {
        Self::new(cone(), czero(), czero(), cone())
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.m;
        Self::new(
            m[0][0].conj(),
            m[1][0].conj(),
            m[0][1].conj(),
            m[1][1].conj(),
        )
    }

    pub fn det(&self) -> Complex<T> {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self {
            m: self.m.map(|row| row.map(|z| z * s)),
        }
    }

    pub fn scale_real(&self, s: T) -> Self {
        Self {
            m: self.m.map(|row| row.map(|z| cscale(z, s))),
        }
    }

    pub fn apply(&self, x: [Complex<T>; 2]) -> [Complex<T>; 2] {
        [
            self.m[0][0] * x[0] + self.m[0][1] * x[1],
            self.m[1][0] * x[0] + self.m[1][1] * x[1],
        ]
    }

    pub fn to_matrix(&self) -> ComplexMatrix<T> {
        ComplexMatrix::from_fn(2, |i, j| self.m[i][j])
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut out = T::zero();
        for i in 0..2 {
            for j in 0..2 {
                out = out.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        out
    }

    /// Operator norm of `self - other`.
    pub fn distance(&self, other: &Self) -> T {
        let d = *self - *other;
        let flat = [d.m[0][0], d.m[0][1], d.m[1][0], d.m[1][1]];
        singular_values(2, 2, &flat)[0]
    }

    /// Operator norm of `self^dagger self - Id`.
    pub fn unitarity_residual(&self) -> T {
        (self.adjoint() * *self).distance(&Self::identity())
    }
}

impl<T: Real> Mul for Mat2<T> {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        let a = &self.m;
        let b = &r.m;
        Self::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

impl<T: Real> Add for Mat2<T> {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] = out.m[i][j] + r.m[i][j];
            }
        }
        out
    }
}

impl<T: Real> Sub for Mat2<T> {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        self + r.scale_real(-T::one())
    }
}

/// Singular values of a `rows x cols` row-major complex matrix, descending.
///
/// One-sided Jacobi: pairs of columns are rotated until mutually orthogonal,
/// after which the column norms are the singular values.
pub fn singular_values<T: Real>(rows: usize, cols: usize, data: &[Complex<T>]) -> Vec<T> {
    assert_eq!(data.len(), rows * cols, "data length must be rows * cols");
    // Work on the orientation with fewer columns; A and A^dagger share singular values.
    let (m, n, mut colmaj) = if cols <= rows {
        let mut c = vec![czero(); rows * cols];
        for i in 0..rows {
            for j in 0..cols {
                c[j * rows + i] = data[i * cols + j];
            }
        }
        (rows, cols, c)
    } else {
        // columns of A^dagger are conjugated rows of A
        (
            cols,
            rows,
            data.iter().map(|z| z.conj()).collect::<Vec<_>>(),
        )
    };

    let eps = T::epsilon();
    for _sweep in 0..64 {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let (alpha, beta, gamma) = {
                    let cp = &colmaj[p * m..(p + 1) * m];
                    let cq = &colmaj[q * m..(q + 1) * m];
                    let mut alpha = T::zero();
                    let mut beta = T::zero();
                    let mut gamma = czero::<T>();
                    for k in 0..m {
                        alpha = alpha + cp[k].norm_sqr();
                        beta = beta + cq[k].norm_sqr();
                        gamma = gamma + cp[k].conj() * cq[k];
                    }
                    (alpha, beta, gamma)
                };
                let g = gamma.norm();
                if g == T::zero() || g <= eps * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                // componentwise: complex division squares g and can underflow
                let phase = Complex::new(gamma.re / g, gamma.im / g);
                let zeta = (beta - alpha) / (T::lit(2.0) * g);
                let sign = if zeta >= T::zero() {
                    T::one()
                } else {
                    -T::one()
                };
                let t = sign / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                for k in 0..m {
                    let xp = colmaj[p * m + k];
                    let xq = colmaj[q * m + k] * phase.conj();
                    colmaj[p * m + k] = cscale(xp, c) - cscale(xq, s);
                    colmaj[q * m + k] = cscale(xp, s) + cscale(xq, c);
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut sv: Vec<T> = (0..n)
        .map(|j| {
            colmaj[j * m..(j + 1) * m]
                .iter()
                .fold(T::zero(), |acc, z| acc + z.norm_sqr())
                .sqrt()
        })
        .collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    sv
}

/// Number of singular values above `rel_threshold * largest`.
pub fn numerical_rank<T: Real>(singular_values: &[T], rel_threshold: T) -> usize {
    match singular_values.first() {
        Some(&top) if top > T::zero() => singular_values
            .iter()
            .filter(|&&s| s > rel_threshold * top)
            .count(),
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn tiny_entries_do_not_produce_nan() {
        let d = [
            c(1e-100, 1e-100),
            c(0.0, 1e-101),
            c(2e-100, 0.0),
            c(1e-100, 0.0),
        ];
        let sv = singular_values(2, 2, &d);
        assert!(sv.iter().all(|s| s.is_finite()));
        assert!(sv[0] > 0.0);
    }

    #[test]
    fn singular_values_of_diagonal_and_rank_one() {
        let d = [c(3.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -2.0)];
        let sv = singular_values(2, 2, &d);
        assert!((sv[0] - 3.0).abs() < 1e-14 && (sv[1] - 2.0).abs() < 1e-14);

        // outer product u v^T has a single nonzero singular value |u||v|
        let u = [c(1.0, 1.0), c(2.0, 0.0), c(0.0, -1.0)];
        let v = [c(0.5, 0.0), c(0.0, 2.0)];
        let mut data = Vec::new();
        for ui in u {
            for vj in v {
                data.push(ui * vj);
            }
        }
        let sv = singular_values(3, 2, &data);
        let nu: f64 = u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let nv: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        assert!((sv[0] - nu * nv).abs() < 1e-13);
        assert!(sv[1] < 1e-14);
        assert_eq!(numerical_rank(&sv, 1e-8), 1);
        // wide orientation gives the same answer
        let mut wide = vec![c(0.0, 0.0); 6];
        for i in 0..3 {
            for j in 0..2 {
                wide[j * 3 + i] = data[i * 2 + j];
            }
        }
        let sw = singular_values(2, 3, &wide);
        assert!((sw[0] - sv[0]).abs() < 1e-13);
    }

    #[test]
    fn singular_values_match_gram_eigenvalues_for_2x2() {
        // eigenvalues of A^dagger A for A = [[1, 2], [3, 4]] are 15 +- sqrt(221)
        let a = [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)];
        let sv = singular_values(2, 2, &a);
        let l1 = 15.0 + 221f64.sqrt();
        let l2 = 15.0 - 221f64.sqrt();
        assert!((sv[0] - l1.sqrt()).abs() < 1e-13);
        assert!((sv[1] - l2.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let z = ComplexMatrix::<f64>::zeros(4);
        assert_eq!(numerical_rank(&z.singular_values(), 1e-8), 0);
        assert_eq!(z.op_norm(), 0.0);
    }

    #[test]
    fn determinant_and_kron() {
        let a = ComplexMatrix::from_rows(vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 1.0)])
            .unwrap();
        let det = a.determinant();
        assert!((det - c(-2.0, 1.0)).norm() < 1e-14);
        let id = ComplexMatrix::<f64>::identity(2);
        assert_eq!(id.kron(&id), ComplexMatrix::identity(4));
        // det(A kron B) = det(A)^2 det(B)^2 for 2x2 blocks
        let k = a.kron(&a);
        assert!((k.determinant() - det.powu(4)).norm() < 1e-11);
        assert!(ComplexMatrix::<f64>::from_rows(vec![c(1.0, 0.0); 3]).is_err());
    }
}
