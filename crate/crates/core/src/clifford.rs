//! The Clifford algebra of Euclidean 3-space, its even subalgebra and rotors.
//!
//! Coefficients are stored over the blade basis
//! `[1, s1, s2, s3, t1, t2, t3, i]` with `t1 = s2 s3`, `t2 = s3 s1`,
//! `t3 = s1 s2` and the pseudoscalar `i = s1 s2 s3`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Real, Ring};

/// Number of basis blades.
pub const DIM: usize = 8;

/// Index of a basis blade inside [`Multivector::coeffs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(usize)]
pub enum Blade {
    One = 0,
    S1 = 1,
    S2 = 2,
    S3 = 3,
    T1 = 4,
    T2 = 5,
    T3 = 6,
    Pseudo = 7,
}

impl Blade {
    pub const ALL: [Blade; DIM] = [
        Blade::One,
        Blade::S1,
        Blade::S2,
        Blade::S3,
        Blade::T1,
        Blade::T2,
        Blade::T3,
        Blade::Pseudo,
    ];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn grade(self) -> usize {
        GRADE[self as usize]
    }

    pub fn name(self) -> &'static str {
        ["1", "s1", "s2", "s3", "t1", "t2", "t3", "i"][self.index()]
    }
}

const GRADE: [usize; DIM] = [0, 1, 1, 1, 2, 2, 2, 3];

// Each basis blade as (sign, bitmask over the generators s1, s2, s3) where the
// bitmask names the canonically ordered product s_a s_b ... with a < b.
// t2 = s3 s1 = -s1 s3, every other blade is already in canonical order.
const BLADE_MASK: [(i8, u8); DIM] = [
    (1, 0b000),
    (1, 0b001),
    (1, 0b010),
    (1, 0b100),
    (1, 0b110),
    (-1, 0b101),
    (1, 0b011),
    (1, 0b111),
];

/// Sign picked up when the canonical blade `a` is multiplied by the canonical
/// blade `b`: each generator of `b` anticommutes past every larger generator
/// of `a`, and `s_k s_k = 1` removes the repeated ones.
const fn reorder_sign(a: u8, b: u8) -> i8 {
    let mut swaps = 0u32;
    let mut k = 0;
    while k < 3 {
        if b & (1 << k) != 0 {
            // generators of `a` with index greater than k
            let higher = a & !((1u8 << (k + 1)) - 1);
            swaps += higher.count_ones();
        }
        k += 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

const fn blade_of_mask(mask: u8) -> usize {
    let mut k = 0;
    while k < DIM {
        if BLADE_MASK[k].1 == mask {
            return k;
        }
        k += 1;
    }
    panic!("every mask names a basis blade")
}

const fn build_product_table() -> [[(i8, usize); DIM]; DIM] {
    let mut table = [[(0i8, 0usize); DIM]; DIM];
    let mut a = 0;
    while a < DIM {
        let mut b = 0;
        while b < DIM {
            let (sa, ma) = BLADE_MASK[a];
            let (sb, mb) = BLADE_MASK[b];
            let target = blade_of_mask(ma ^ mb);
            let sign = sa * sb * reorder_sign(ma, mb) * BLADE_MASK[target].0;
            table[a][b] = (sign, target);
            b += 1;
        }
        a += 1;
    }
    table
}

/// `PRODUCT_TABLE[a][b] = (sign, c)` means `blade_a * blade_b = sign * blade_c`.
pub const PRODUCT_TABLE: [[(i8, usize); DIM]; DIM] = build_product_table();

/// An element of the 8-dimensional Clifford algebra of R^3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Multivector<T> {
    pub coeffs: [T; DIM],
}

impl<T: Ring> Default for Multivector<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Ring> Multivector<T> {
    pub fn new(coeffs: [T; DIM]) -> Self {
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self {
            coeffs: [T::zero(); DIM],
        }
    }

    pub fn scalar(s: T) -> Self {
        Self::blade(Blade::One).scale(s)
    }

    pub fn one() -> Self {
        Self::blade(Blade::One)
    }

    /// The unit basis blade `b`.
    pub fn blade(b: Blade) -> Self {
        let mut coeffs = [T::zero(); DIM];
        coeffs[b.index()] = T::one();
        Self { coeffs }
    }

    /// The grade-1 element `x1 s1 + x2 s2 + x3 s3`.
    pub fn vector(v: [T; 3]) -> Self {
        let mut m = Self::zero();
        m.coeffs[1..4].copy_from_slice(&v);
        m
    }

    pub fn get(&self, b: Blade) -> T {
        self.coeffs[b.index()]
    }

    pub fn vector_part(&self) -> [T; 3] {
        [self.coeffs[1], self.coeffs[2], self.coeffs[3]]
    }

    pub fn scale(&self, s: T) -> Self {
        Self {
            coeffs: self.coeffs.map(|c| c * s),
        }
    }

    /// Geometric product, expanded through [`PRODUCT_TABLE`].
    pub fn geometric_product(&self, other: &Self) -> Self {
        let mut out = [T::zero(); DIM];
        for (a, &x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, &y) in other.coeffs.iter().enumerate() {
                let (sign, c) = PRODUCT_TABLE[a][b];
                let term = x * y;
                out[c] = if sign > 0 {
                    out[c] + term
                } else {
                    out[c] - term
                };
            }
        }
        Self { coeffs: out }
    }

    /// Keeps only the grade-`k` coefficients.
    pub fn grade_projection(&self, k: usize) -> Result<Self> {
        if k > 3 {
            return Err(Error::Argument(format!("grade {k} outside 0..=3")));
        }
        let mut out = *self;
        for (idx, c) in out.coeffs.iter_mut().enumerate() {
            if GRADE[idx] != k {
                *c = T::zero();
            }
        }
        Ok(out)
    }

    /// Reverses the order of generator factors in each blade: grades 2 and 3 flip sign.
    pub fn reversion(&self) -> Self {
        let mut out = *self;
        for (idx, c) in out.coeffs.iter_mut().enumerate() {
            if GRADE[idx] >= 2 {
                *c = -*c;
            }
        }
        out
    }

    pub fn even_part(&self) -> Quaternion<T> {
        Quaternion::new(
            self.coeffs[0],
            self.coeffs[4],
            self.coeffs[5],
            self.coeffs[6],
        )
    }
}

impl<T: Real> Multivector<T> {
    /// True when every coefficient outside grade 1 is within `tol` of zero.
    pub fn is_vector(&self, tol: T) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(idx, c)| GRADE[idx] == 1 || c.abs() <= tol)
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .fold(T::zero(), |m, (a, b)| m.max((*a - *b).abs()))
    }
}

impl<T: Ring> Add for Multivector<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut coeffs = self.coeffs;
        for (c, r) in coeffs.iter_mut().zip(rhs.coeffs) {
            *c = *c + r;
        }
        Self { coeffs }
    }
}

impl<T: Ring> Sub for Multivector<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> Neg for Multivector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            coeffs: self.coeffs.map(|c| -c),
        }
    }
}

impl<T: Ring> Mul for Multivector<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.geometric_product(&rhs)
    }
}

fn require_vector<T: Real>(x: &Multivector<T>, tol: T, what: &str) -> Result<()> {
    if x.is_vector(tol) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what} is not a pure vector: {:?}",
            x.coeffs
        )))
    }
}

/// Scalar part of `(xy + yx) / 2` for grade-1 arguments.
pub fn inner_product<T: Real>(x: &Multivector<T>, y: &Multivector<T>, tol: T) -> Result<T> {
    require_vector(x, tol, "left operand")?;
    require_vector(y, tol, "right operand")?;
    let sym = (*x * *y + *y * *x).scale(T::lit(0.5));
    Ok(sym.get(Blade::One))
}

/// `(xy - yx) / 2` for grade-1 arguments; a pure bivector.
pub fn exterior_product<T: Real>(
    x: &Multivector<T>,
    y: &Multivector<T>,
    tol: T,
) -> Result<Multivector<T>> {
    require_vector(x, tol, "left operand")?;
    require_vector(y, tol, "right operand")?;
    Ok((*x * *y - *y * *x).scale(T::lit(0.5)))
}

/// Element of the even subalgebra, stored over `{1, t1, t2, t3}`.
///
/// Multiplication follows the Clifford table, so `t2 t1 = t3` and
/// `t_i t_j = -eps_ijk t_k` for distinct `i, j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion<T> {
    pub a0: T,
    pub a1: T,
    pub a2: T,
    pub a3: T,
}

impl<T: Ring> Quaternion<T> {
    pub fn new(a0: T, a1: T, a2: T, a3: T) -> Self {
        Self { a0, a1, a2, a3 }
    }

    pub fn one() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::zero())
    }

    pub fn to_array(&self) -> [T; 4] {
        [self.a0, self.a1, self.a2, self.a3]
    }

    pub fn from_array(a: [T; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    /// The basis element number `k` of `{1, t1, t2, t3}`.
    pub fn basis(k: usize) -> Self {
        let mut a = [T::zero(); 4];
        a[k] = T::one();
        Self::from_array(a)
    }

    pub fn to_multivector(&self) -> Multivector<T> {
        let mut m = Multivector::zero();
        m.coeffs[0] = self.a0;
        m.coeffs[4] = self.a1;
        m.coeffs[5] = self.a2;
        m.coeffs[6] = self.a3;
        m
    }

    /// Reversion restricted to the even subalgebra.
    pub fn reverse(&self) -> Self {
        Self::new(self.a0, -self.a1, -self.a2, -self.a3)
    }

    pub fn norm_sqr(&self) -> T {
        self.a0 * self.a0 + self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3
    }
}

impl<T: Ring> Mul for Quaternion<T> {
    type Output = Self;
    fn mul(self, q: Self) -> Self {
        let p = self;
        // p0 q0 - p.q + p0 q + q0 p - p x q
        Self::new(
            p.a0 * q.a0 - p.a1 * q.a1 - p.a2 * q.a2 - p.a3 * q.a3,
            p.a0 * q.a1 + q.a0 * p.a1 - (p.a2 * q.a3 - p.a3 * q.a2),
            p.a0 * q.a2 + q.a0 * p.a2 - (p.a3 * q.a1 - p.a1 * q.a3),
            p.a0 * q.a3 + q.a0 * p.a3 - (p.a1 * q.a2 - p.a2 * q.a1),
        )
    }
}

impl<T: Ring> Neg for Quaternion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a0, -self.a1, -self.a2, -self.a3)
    }
}

impl<T: Real> Quaternion<T> {
    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    pub fn is_unit(&self, tol: T) -> bool {
        (self.norm() - T::one()).abs() <= tol
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.to_array()
            .iter()
            .zip(other.to_array().iter())
            .fold(T::zero(), |m, (a, b)| m.max((*a - *b).abs()))
    }
}

/// Rotation angle plus unit axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle<T> {
    theta: T,
    axis: [T; 3],
}

impl<T: Real> AxisAngle<T> {
    /// Validated constructor: `|axis| = 1` within `tol` and `theta` in `[-pi, pi]`.
    pub fn new(theta: T, axis: [T; 3], tol: T) -> Result<Self> {
        if theta.abs() > T::PI() + tol {
            return Err(Error::Precondition(format!(
                "angle {theta} outside [-pi, pi]"
            )));
        }
        Self::with_any_angle(theta, axis, tol)
    }

    /// Like [`AxisAngle::new`] but accepts any finite angle, e.g. a full turn.
    pub fn with_any_angle(theta: T, axis: [T; 3], tol: T) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::Precondition(format!("angle {theta} is not finite")));
        }
        let norm = norm3(axis);
        if (norm - T::one()).abs() > tol || !norm.is_finite() {
            return Err(Error::Precondition(format!(
                "rotation axis has norm {norm}, expected 1"
            )));
        }
        Ok(Self { theta, axis })
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn axis(&self) -> [T; 3] {
        self.axis
    }
}

pub(crate) fn norm3<T: Real>(v: [T; 3]) -> T {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

/// `exp(i r theta) = cos(theta) + sin(theta) (r1 t1 + r2 t2 + r3 t3)`.
pub fn rotor_exp<T: Real>(p: &AxisAngle<T>) -> Quaternion<T> {
    let (s, c) = p.theta.sin_cos();
    let r = p.axis;
    Quaternion::new(c, s * r[0], s * r[1], s * r[2])
}

/// Sandwich action `v -> q v reverse(q)` of an even element on a 3-vector.
pub fn rotate_with_quaternion<T: Real>(q: &Quaternion<T>, v: [T; 3]) -> [T; 3] {
    let qm = q.to_multivector();
    let out = qm * Multivector::vector(v) * q.reverse().to_multivector();
    out.vector_part()
}

/// Rotation of `v` by `theta` about the axis, via the rotor `exp(-i r theta / 2)`.
pub fn rotor_rotate<T: Real>(p: &AxisAngle<T>, v: [T; 3]) -> [T; 3] {
    let half = AxisAngle {
        theta: -p.theta / T::lit(2.0),
        axis: p.axis,
    };
    rotate_with_quaternion(&rotor_exp(&half), v)
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = Multivector<i64>;

    fn b(x: Blade) -> M {
        M::blade(x)
    }

    #[test]
    fn basis_products_from_the_relations() {
        assert_eq!(b(Blade::S1) * b(Blade::S2), b(Blade::T3));
        assert_eq!(b(Blade::S1) * b(Blade::S1), M::one());
        assert_eq!(b(Blade::T2) * b(Blade::T1), b(Blade::T3));
        assert_eq!(b(Blade::T1) * b(Blade::T3), b(Blade::T2));
        assert_eq!(b(Blade::T3) * b(Blade::T2), b(Blade::T1));
        assert_eq!(b(Blade::S2) * b(Blade::S3), b(Blade::T1));
        assert_eq!(b(Blade::S3) * b(Blade::S1), b(Blade::T2));
        assert_eq!(b(Blade::S1) * b(Blade::S2) * b(Blade::S3), b(Blade::Pseudo));
    }

    #[test]
    fn pseudoscalar_squares_to_minus_one() {
        // (s1 s2 s3)(s1 s2 s3) expanded one generator at a time
        let s1 = b(Blade::S1);
        let s2 = b(Blade::S2);
        let s3 = b(Blade::S3);
        let expanded = s1 * s2 * s3 * s1 * s2 * s3;
        assert_eq!(expanded, -M::one());
        assert_eq!(b(Blade::Pseudo) * b(Blade::Pseudo), -M::one());
    }

    #[test]
    fn linear_ops() {
        let a = M::new([1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(a + M::zero(), a);
        assert_eq!(a.scale(1), a);
        assert_eq!(b(Blade::S1) + b(Blade::S1), b(Blade::S1).scale(2));
        assert_eq!(a - a, M::zero());
    }

    #[test]
    fn inner_and_exterior_products() {
        let s1 = Multivector::<f64>::blade(Blade::S1);
        let s2 = Multivector::<f64>::blade(Blade::S2);
        let tol = 1e-9;
        assert_eq!(inner_product(&s1, &s1, tol).unwrap(), 1.0);
        assert_eq!(inner_product(&s1, &s2, tol).unwrap(), 0.0);
        let x = s1.scale(2.0) + s2;
        assert_eq!(inner_product(&x, &s2, tol).unwrap(), 1.0);

        let t3 = Multivector::<f64>::blade(Blade::T3);
        assert_eq!(exterior_product(&s1, &s2, tol).unwrap(), t3);
        assert_eq!(
            exterior_product(&s1, &s1, tol).unwrap(),
            Multivector::zero()
        );
        assert_eq!(exterior_product(&s2, &s1, tol).unwrap(), -t3);
    }

    #[test]
    fn non_vector_operands_are_rejected() {
        let s1 = Multivector::<f64>::blade(Blade::S1);
        let mixed = s1 + Multivector::blade(Blade::T1);
        assert!(matches!(
            inner_product(&mixed, &s1, 1e-9),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            exterior_product(&s1, &Multivector::one(), 1e-9),
            Err(Error::Precondition(_))
        ));
        // noise below the tolerance is accepted
        let noisy = s1 + Multivector::scalar(1e-12);
        assert!(inner_product(&noisy, &s1, 1e-9).is_ok());
    }

    #[test]
    fn grade_projection_cases() {
        let a = M::one() + b(Blade::S1) + b(Blade::T3);
        assert_eq!(a.grade_projection(1).unwrap(), b(Blade::S1));
        assert_eq!(
            b(Blade::Pseudo).grade_projection(3).unwrap(),
            b(Blade::Pseudo)
        );
        let full = M::new([1, 2, 3, 4, 5, 6, 7, 8]);
        let sum = (0..4)
            .map(|k| full.grade_projection(k).unwrap())
            .fold(M::zero(), |acc, g| acc + g);
        assert_eq!(sum, full);
        assert!(matches!(full.grade_projection(4), Err(Error::Argument(_))));
    }

    #[test]
    fn reversion_cases() {
        assert_eq!(b(Blade::S1).reversion(), b(Blade::S1));
        assert_eq!(b(Blade::T3).reversion(), -b(Blade::T3));
        // s3 s2 s1 against the reversed pseudoscalar
        let rev = b(Blade::S3) * b(Blade::S2) * b(Blade::S1);
        assert_eq!(rev, -b(Blade::Pseudo));
        assert_eq!(b(Blade::Pseudo).reversion(), rev);
    }

    #[test]
    fn even_part_and_quaternion_products() {
        let a = M::one() + b(Blade::S1) + b(Blade::T2);
        assert_eq!(a.even_part(), Quaternion::new(1, 0, 1, 0));
        let t1 = Quaternion::<i64>::basis(1);
        let t2 = Quaternion::<i64>::basis(2);
        let t3 = Quaternion::<i64>::basis(3);
        assert_eq!(t2 * t1, t3);
        assert_eq!(t1 * t1, -Quaternion::one());
        for i in 0..4 {
            for j in 0..4 {
                let p = Quaternion::<i64>::basis(i);
                let q = Quaternion::<i64>::basis(j);
                let via_clifford = (p.to_multivector() * q.to_multivector()).even_part();
                assert_eq!(p * q, via_clifford, "basis pair ({i},{j})");
            }
        }
    }

    #[test]
    fn rotor_exp_cases() {
        let tol = 1e-9;
        let p = AxisAngle::new(0.0, [0.0, 0.6, 0.8], tol).unwrap();
        assert_eq!(rotor_exp(&p), Quaternion::one());
        let p = AxisAngle::new(std::f64::consts::FRAC_PI_2, [0.0, 0.0, 1.0], tol).unwrap();
        let q = rotor_exp(&p);
        assert!(q.max_abs_diff(&Quaternion::new(0.0, 0.0, 0.0, 1.0)) < 1e-15);
        assert!((q.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn axis_angle_validation() {
        assert!(matches!(
            AxisAngle::new(0.1, [1.0, 1.0, 0.0], 1e-9),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            AxisAngle::new(4.0, [1.0, 0.0, 0.0], 1e-9),
            Err(Error::Precondition(_))
        ));
        assert!(AxisAngle::with_any_angle(4.0, [1.0, 0.0, 0.0], 1e-9).is_ok());
    }

    #[test]
    fn quarter_turn_about_z_sends_s1_to_s2() {
        let p = AxisAngle::new(std::f64::consts::FRAC_PI_2, [0.0, 0.0, 1.0], 1e-9).unwrap();
        let out = rotor_rotate(&p, [1.0, 0.0, 0.0]);
        assert!((out[0]).abs() < 1e-15 && (out[1] - 1.0).abs() < 1e-15 && out[2].abs() < 1e-15);
    }

    #[test]
    fn trivial_and_full_turns() {
        let v = [0.3, -1.2, 2.0];
        let p = AxisAngle::new(0.0, [1.0, 0.0, 0.0], 1e-9).unwrap();
        assert_eq!(rotor_rotate(&p, v), v);
        let full =
            AxisAngle::with_any_angle(2.0 * std::f64::consts::PI, [0.0, 0.6, 0.8], 1e-9).unwrap();
        let out = rotor_rotate(&full, v);
        for k in 0..3 {
            assert!((out[k] - v[k]).abs() < 1e-14);
        }
    }

    #[test]
    fn works_in_single_precision() {
        let p = AxisAngle::<f32>::new(0.5, [0.0, 1.0, 0.0], 1e-6).unwrap();
        let q = rotor_exp(&p);
        assert!((q.norm() - 1.0).abs() < 1e-6);
    }
}
