//! Maps from rotations to SU(2): the quaternion route `phi_map`, and the qubit
//! route `psi0` then `psi1`, together with the qubit group operation `star1`.

use num_complex::Complex;

use crate::clifford::{AxisAngle, Quaternion};
use crate::error::{Error, Result};
use crate::linalg::Mat2;
use crate::scalar::{cimag, cone, czero, Real};

/// Unit vector of C^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Qubit<T> {
    c0: Complex<T>,
    c1: Complex<T>,
}

impl<T: Real> Qubit<T> {
    /// Validated constructor: `|c0|^2 + |c1|^2 = 1` within `tol`.
    pub fn new(c0: Complex<T>, c1: Complex<T>, tol: T) -> Result<Self> {
        let q = Self { c0, c1 };
        let norm = q.norm_sqr().sqrt();
        if (norm - T::one()).abs() > tol || !norm.is_finite() {
            return Err(Error::Precondition(format!(
                "qubit has norm {norm}, expected 1"
            )));
        }
        Ok(q)
    }

    /// `|0>`, the identity of the qubit group.
    pub fn zero_ket() -> Self {
        Self {
            c0: cone(),
            c1: czero(),
        }
    }

    pub fn one_ket() -> Self {
        Self {
            c0: czero(),
            c1: cone(),
        }
    }

    pub(crate) fn new_unchecked(c0: Complex<T>, c1: Complex<T>) -> Self {
        Self { c0, c1 }
    }

    pub fn c0(&self) -> Complex<T> {
        self.c0
    }

    pub fn c1(&self) -> Complex<T> {
        self.c1
    }

    pub fn amplitudes(&self) -> [Complex<T>; 2] {
        [self.c0, self.c1]
    }

    pub fn norm_sqr(&self) -> T {
        self.c0.norm_sqr() + self.c1.norm_sqr()
    }

    pub fn distance(&self, other: &Self) -> T {
        ((self.c0 - other.c0).norm_sqr() + (self.c1 - other.c1).norm_sqr()).sqrt()
    }
}

/// A 2x2 complex matrix known to be unitary with determinant 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su2<T>(Mat2<T>);

impl<T: Real> Su2<T> {
    /// Accepts `m` if `m^dagger m = Id` and `det m = 1`, both within `tol`.
    pub fn new(m: Mat2<T>, tol: T) -> Result<Self> {
        let unitarity = m.unitarity_residual();
        let det_err = (m.det() - cone()).norm();
        if unitarity > tol || det_err > tol || !unitarity.is_finite() {
            return Err(Error::Domain(format!(
                "matrix is not in SU(2): unitarity residual {unitarity}, determinant error {det_err}"
            )));
        }
        Ok(Self(m))
    }

    pub fn identity() -> Self {
        Self(Mat2::identity())
    }

    pub(crate) fn new_unchecked(m: Mat2<T>) -> Self {
        Self(m)
    }

    pub fn matrix(&self) -> &Mat2<T> {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self(self.0 * other.0)
    }
}

impl<T: Real> std::ops::Mul for Su2<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.compose(&rhs)
    }
}

/// The Pauli matrix `sigma_k`, `k` in `1..=3`.
pub fn pauli<T: Real>(k: usize) -> Result<Mat2<T>> {
    let (o, z, i) = (cone::<T>(), czero::<T>(), cimag::<T>());
    match k {
        1 => Ok(Mat2::new(z, o, o, z)),
        2 => Ok(Mat2::new(z, -i, i, z)),
        3 => Ok(Mat2::new(o, z, z, -o)),
        _ => Err(Error::Argument(format!("Pauli index {k} outside 1..=3"))),
    }
}

/// Which Pauli matrix each bivector coefficient multiplies in [`phi_map_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PhiPairing {
    /// `U = a0 Id + i a2 sigma1 + i a1 sigma2 + i a3 sigma3`, the displayed matrix.
    Literal,
    /// `U = a0 Id + i a1 sigma1 + i a2 sigma2 + i a3 sigma3`.
    Conventional,
}

/// `[[a0 + i a3, a1 + i a2], [-a1 + i a2, a0 - i a3]]` for a unit quaternion.
pub fn phi_map<T: Real>(q: &Quaternion<T>, tol: T) -> Result<Su2<T>> {
    phi_map_with(q, PhiPairing::Literal, tol)
}

pub fn phi_map_with<T: Real>(q: &Quaternion<T>, pairing: PhiPairing, tol: T) -> Result<Su2<T>> {
    if !q.is_unit(tol) {
        return Err(Error::Precondition(format!(
            "quaternion has norm {}, expected 1",
            q.norm()
        )));
    }
    let (a0, a1, a2, a3) = (q.a0, q.a1, q.a2, q.a3);
    let (x, y) = match pairing {
        PhiPairing::Literal => (a2, a1),
        PhiPairing::Conventional => (a1, a2),
    };
    // a0 Id + i x sigma1 + i y sigma2 + i a3 sigma3
    let m = Mat2::new(
        Complex::new(a0, a3),
        Complex::new(y, x),
        Complex::new(-y, x),
        Complex::new(a0, -a3),
    );
    Ok(Su2::new_unchecked(m))
}

/// Which product law a map satisfies on a given pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CompositionLaw {
    /// `f(pq) = f(p) f(q)` and `f(pq) = f(q) f(p)` both hold (commuting pair).
    Both,
    Homomorphism,
    AntiHomomorphism,
    Neither,
}

impl CompositionLaw {
    pub fn admits_homomorphism(self) -> bool {
        matches!(self, Self::Both | Self::Homomorphism)
    }

    pub fn admits_anti_homomorphism(self) -> bool {
        matches!(self, Self::Both | Self::AntiHomomorphism)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompositionCheck<T> {
    pub law: CompositionLaw,
    /// `|| phi(pq) - phi(p) phi(q) ||`
    pub forward_residual: T,
    /// `|| phi(pq) - phi(q) phi(p) ||`
    pub reverse_residual: T,
}

/// Compares `phi(pq)` with both orderings of `phi(p) phi(q)`.
pub fn phi_composition_check<T: Real>(
    p: &Quaternion<T>,
    q: &Quaternion<T>,
    pairing: PhiPairing,
    tol: T,
) -> Result<CompositionCheck<T>> {
    let fp = phi_map_with(p, pairing, tol)?;
    let fq = phi_map_with(q, pairing, tol)?;
    let product = *p * *q;
    // unit inputs give a unit product; allow the accumulated rounding
    let fpq = phi_map_with(&product, pairing, tol + tol)?;
    let forward_residual = fpq.matrix().distance((fp * fq).matrix());
    let reverse_residual = fpq.matrix().distance((fq * fp).matrix());
    let law = match (forward_residual <= tol, reverse_residual <= tol) {
        (true, true) => CompositionLaw::Both,
        (true, false) => CompositionLaw::Homomorphism,
        (false, true) => CompositionLaw::AntiHomomorphism,
        (false, false) => CompositionLaw::Neither,
    };
    Ok(CompositionCheck {
        law,
        forward_residual,
        reverse_residual,
    })
}

/// `(cos theta - i r3 sin theta, r1 sin theta + i r2 sin theta)`, full angle.
pub fn psi0<T: Real>(p: &AxisAngle<T>) -> Qubit<T> {
    let (s, c) = p.theta().sin_cos();
    let r = p.axis();
    Qubit::new_unchecked(Complex::new(c, -r[2] * s), Complex::new(r[0] * s, r[1] * s))
}

/// `[[c0, -conj(c1)], [c1, conj(c0)]]`.
pub fn psi1<T: Real>(c: &Qubit<T>) -> Su2<T> {
    Su2::new_unchecked(Mat2::new(c.c0, -c.c1.conj(), c.c1, c.c0.conj()))
}

/// Inverse of [`psi1`]: the first column of an SU(2) matrix.
pub fn psi1_inv<T: Real>(m: &Mat2<T>, tol: T) -> Result<Qubit<T>> {
    let m = Su2::new(*m, tol)?;
    let mm = &m.matrix().m;
    Ok(Qubit::new_unchecked(mm[0][0], mm[1][0]))
}

/// The SU(2) product transported to qubits: first column of `psi1(a) psi1(b)`.
pub fn star1<T: Real>(a: &Qubit<T>, b: &Qubit<T>) -> Qubit<T> {
    Qubit::new_unchecked(
        a.c0 * b.c0 - a.c1.conj() * b.c1,
        a.c1 * b.c0 + a.c0.conj() * b.c1,
    )
}

/// Group inverse `(conj(c0), -c1)`.
pub fn qubit_inverse<T: Real>(a: &Qubit<T>) -> Qubit<T> {
    Qubit::new_unchecked(a.c0.conj(), -a.c1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

    const TOL: f64 = 1e-9;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn mat(rows: [[(f64, f64); 2]; 2]) -> Mat2<f64> {
        Mat2::new(
            c(rows[0][0].0, rows[0][0].1),
            c(rows[0][1].0, rows[0][1].1),
            c(rows[1][0].0, rows[1][0].1),
            c(rows[1][1].0, rows[1][1].1),
        )
    }

    #[test]
    fn pauli_literals() {
        assert_eq!(
            pauli::<f64>(1).unwrap(),
            mat([[(0., 0.), (1., 0.)], [(1., 0.), (0., 0.)]])
        );
        assert_eq!(
            pauli::<f64>(3).unwrap(),
            mat([[(1., 0.), (0., 0.)], [(0., 0.), (-1., 0.)]])
        );
        let prod = pauli::<f64>(1).unwrap() * pauli(2).unwrap() * pauli(3).unwrap();
        assert_eq!(prod, Mat2::identity().scale(c(0.0, 1.0)));
        assert!(matches!(pauli::<f64>(0), Err(Error::Argument(_))));
        assert!(matches!(pauli::<f64>(4), Err(Error::Argument(_))));
    }

    #[test]
    fn phi_map_cases() {
        let id = phi_map(&Quaternion::<f64>::one(), TOL).unwrap();
        assert_eq!(*id.matrix(), Mat2::identity());
        let t3 = phi_map(&Quaternion::<f64>::basis(3), TOL).unwrap();
        assert_eq!(
            *t3.matrix(),
            mat([[(0., 1.), (0., 0.)], [(0., 0.), (0., -1.)]])
        );
        assert!(matches!(
            phi_map(&Quaternion::new(1.0, 1.0, 0.0, 0.0), TOL),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn phi_map_matches_pauli_expansion() {
        let q = Quaternion::new(0.5, 0.5, -0.5, 0.5);
        let i = c(0.0, 1.0);
        let expected = Mat2::identity().scale_real(q.a0)
            + pauli(1).unwrap().scale(i * q.a2)
            + pauli(2).unwrap().scale(i * q.a1)
            + pauli(3).unwrap().scale(i * q.a3);
        let got = phi_map(&q, TOL).unwrap();
        assert!(got.matrix().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn literal_pairing_reverses_products_on_bivectors() {
        // t2 t1 = t3, so phi(t3) against both orders of phi(t2), phi(t1)
        let t1 = Quaternion::<f64>::basis(1);
        let t2 = Quaternion::<f64>::basis(2);
        let chk = phi_composition_check(&t2, &t1, PhiPairing::Literal, TOL).unwrap();
        assert_eq!(chk.law, CompositionLaw::AntiHomomorphism);
        assert_eq!(chk.reverse_residual, 0.0);
        assert!((chk.forward_residual - 2.0).abs() < 1e-14);

        let chk = phi_composition_check(&t2, &t1, PhiPairing::Conventional, TOL).unwrap();
        assert_eq!(chk.law, CompositionLaw::Homomorphism);

        let one = Quaternion::<f64>::one();
        let chk = phi_composition_check(&one, &one, PhiPairing::Literal, TOL).unwrap();
        assert_eq!(chk.law, CompositionLaw::Both);
        assert_eq!(chk.forward_residual, 0.0);
        assert_eq!(chk.reverse_residual, 0.0);
    }

    #[test]
    fn psi0_cases() {
        let p = AxisAngle::new(0.0, [0.0, 0.0, 1.0], TOL).unwrap();
        assert_eq!(psi0(&p).amplitudes(), [c(1.0, 0.0), c(0.0, 0.0)]);
        let p = AxisAngle::new(FRAC_PI_2, [1.0, 0.0, 0.0], TOL).unwrap();
        let q = psi0(&p);
        assert!(q.distance(&Qubit::one_ket()) < 1e-15);
        let p = AxisAngle::new(1.1, [0.48, 0.6, 0.64], TOL).unwrap();
        assert!((psi0(&p).norm_sqr() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn psi1_cases() {
        assert_eq!(*psi1(&Qubit::<f64>::zero_ket()).matrix(), Mat2::identity());
        assert_eq!(
            *psi1(&Qubit::<f64>::one_ket()).matrix(),
            mat([[(0., 0.), (-1., 0.)], [(1., 0.), (0., 0.)]])
        );
        let q = Qubit::new(c(0.5, 0.5), c(0.5, -0.5), TOL).unwrap();
        let m = psi1(&q);
        assert!(m.matrix().unitarity_residual() < 1e-15);
        assert!((m.matrix().det() - c(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(m.matrix().m[0][0], q.c0());
        assert_eq!(m.matrix().m[1][0], q.c1());
    }

    #[test]
    fn psi1_inv_cases() {
        assert_eq!(
            psi1_inv(&Mat2::<f64>::identity(), TOL).unwrap(),
            Qubit::zero_ket()
        );
        let m = mat([[(0., 0.), (-1., 0.)], [(1., 0.), (0., 0.)]]);
        assert_eq!(psi1_inv(&m, TOL).unwrap(), Qubit::one_ket());
        let q = Qubit::new(c(0.6, 0.0), c(0.0, 0.8), TOL).unwrap();
        assert_eq!(psi1_inv(psi1(&q).matrix(), TOL).unwrap(), q);
        // sigma3 is unitary with determinant -1
        assert!(matches!(
            psi1_inv(&pauli::<f64>(3).unwrap(), TOL),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            psi1_inv(&Mat2::identity().scale_real(2.0), TOL),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn qubit_validation() {
        assert!(matches!(
            Qubit::new(c(1.0, 0.0), c(1.0, 0.0), TOL),
            Err(Error::Precondition(_))
        ));
        assert!(Qubit::new(c(FRAC_1_SQRT_2, 0.0), c(0.0, FRAC_1_SQRT_2), TOL).is_ok());
    }

    #[test]
    fn star1_cases() {
        let b = Qubit::new(c(0.6, 0.0), c(0.0, 0.8), TOL).unwrap();
        assert_eq!(star1(&Qubit::zero_ket(), &b), b);
        let one = Qubit::<f64>::one_ket();
        let sq = star1(&one, &one);
        assert_eq!(sq.amplitudes(), [c(-1.0, 0.0), c(0.0, 0.0)]);
        let via_matrix = psi1(&one) * psi1(&one);
        assert_eq!(via_matrix.matrix().m[0][0], sq.c0());
        assert_eq!(via_matrix.matrix().m[1][0], sq.c1());
        let a = Qubit::new(c(0.0, 0.6), c(0.8, 0.0), TOL).unwrap();
        assert!(star1(&a, &qubit_inverse(&a)).distance(&Qubit::zero_ket()) < 1e-15);
    }

    #[test]
    fn qubit_inverse_cases() {
        assert_eq!(qubit_inverse(&Qubit::<f64>::zero_ket()), Qubit::zero_ket());
        assert_eq!(
            qubit_inverse(&Qubit::<f64>::one_ket()).amplitudes(),
            [c(0.0, 0.0), c(-1.0, 0.0)]
        );
        let a = Qubit::new(c(0.0, 0.6), c(0.8, 0.0), TOL).unwrap();
        assert_eq!(qubit_inverse(&qubit_inverse(&a)), a);
        let adj = psi1(&a).inverse();
        assert_eq!(adj.matrix().m[0][0], qubit_inverse(&a).c0());
        assert_eq!(adj.matrix().m[1][0], qubit_inverse(&a).c1());
    }
}
