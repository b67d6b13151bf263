//! Deterministic random streams and samplers on spheres and groups.
//!
//! Every consumer asks for its own stream keyed by `(seed, label)`, so the
//! draws of one suite never depend on which other suites ran or in what order.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::clifford::{AxisAngle, Multivector, Quaternion, DIM};
use crate::scalar::{cscale, Real};
use crate::spinor::{psi1, Qubit, Su2};

pub type SuiteRng = ChaCha8Rng;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Stream seed for `label` under the run seed `seed`.
pub fn derive_seed(seed: u64, label: &str) -> u64 {
    // FNV-1a over the label, then mixed with the run seed
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    splitmix64(seed ^ splitmix64(h))
}

pub fn stream(seed: u64, label: &str) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, label))
}

pub fn normal<T: Real>(rng: &mut SuiteRng) -> T {
    let x: f64 = rng.sample(StandardNormal);
    T::lit(x)
}

/// Uniform on the unit sphere of `C^dim`: normalised independent complex normals.
pub fn unit_vector<T: Real>(rng: &mut SuiteRng, dim: usize) -> Vec<Complex<T>> {
    loop {
        let v: Vec<Complex<T>> = (0..dim)
            .map(|_| Complex::new(normal(rng), normal(rng)))
            .collect();
        let norm = v.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt();
        if norm > T::epsilon() {
            return v.into_iter().map(|z| cscale(z, T::one() / norm)).collect();
        }
    }
}

pub fn qubit<T: Real>(rng: &mut SuiteRng) -> Qubit<T> {
    let v = unit_vector(rng, 2);
    Qubit::new(v[0], v[1], T::lit(1e-6)).expect("normalised sample")
}

/// Haar-distributed SU(2) element, via a uniform qubit.
pub fn su2<T: Real>(rng: &mut SuiteRng) -> Su2<T> {
    psi1(&qubit(rng))
}

pub fn unit_quaternion<T: Real>(rng: &mut SuiteRng) -> Quaternion<T> {
    loop {
        let a: [T; 4] = std::array::from_fn(|_| normal(rng));
        let q = Quaternion::from_array(a);
        let norm = q.norm();
        if norm > T::epsilon() {
            return Quaternion::from_array(a.map(|x| x / norm));
        }
    }
}

pub fn unit_axis<T: Real>(rng: &mut SuiteRng) -> [T; 3] {
    loop {
        let v: [T; 3] = std::array::from_fn(|_| normal(rng));
        let norm = crate::clifford::norm3(v);
        if norm > T::epsilon() {
            return v.map(|x| x / norm);
        }
    }
}

/// Angle uniform in `[-pi, pi]` with a uniform unit axis.
pub fn axis_angle<T: Real>(rng: &mut SuiteRng) -> AxisAngle<T> {
    let u: f64 = rng.random_range(-1.0..=1.0);
    let theta = T::lit(u) * T::PI();
    AxisAngle::new(theta, unit_axis(rng), T::lit(1e-6)).expect("sampled axis is unit")
}

pub fn vector3<T: Real>(rng: &mut SuiteRng) -> [T; 3] {
    std::array::from_fn(|_| normal(rng))
}

pub fn multivector<T: Real>(rng: &mut SuiteRng) -> Multivector<T> {
    let coeffs: [T; DIM] = std::array::from_fn(|_| normal(rng));
    Multivector::new(coeffs)
}
