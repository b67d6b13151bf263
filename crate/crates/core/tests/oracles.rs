//! Checks against constructions that share no code with the library.

use num_complex::Complex;
use quregister::clifford::{rotor_rotate, Blade};
use quregister::psi::{bell_images, literal_tables, psi_n};
use quregister::sampling;
use quregister::spinor::{psi1, star1};
use quregister::tensor::{bell_state, reduced_density_first_qubit};
use quregister::{AxisAngle, Bitstring, Multivector, Qubit};

type C = Complex<f64>;

fn c(re: f64, im: f64) -> C {
    Complex::new(re, im)
}

type M2 = [[C; 2]; 2];

fn mul(a: &M2, b: &M2) -> M2 {
    let mut out = [[c(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// The faithful real representation s_k -> sigma_k of the algebra in 2x2 complex matrices.
fn rep(x: &Multivector<f64>) -> M2 {
    let i = c(0.0, 1.0);
    let s1 = [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]];
    let s2 = [[c(0.0, 0.0), -i], [i, c(0.0, 0.0)]];
    let s3 = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]];
    let id = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
    let basis = [
        id,
        s1,
        s2,
        s3,
        mul(&s2, &s3),
        mul(&s3, &s1),
        mul(&s1, &s2),
        mul(&mul(&s1, &s2), &s3),
    ];
    let mut out = [[c(0.0, 0.0); 2]; 2];
    for (k, b) in basis.iter().enumerate() {
        for r in 0..2 {
            for s in 0..2 {
                out[r][s] += b[r][s] * x.coeffs[k];
            }
        }
    }
    out
}

#[test]
fn geometric_product_matches_pauli_representation() {
    let mut rng = sampling::stream(11, "oracle-rep");
    for _ in 0..2000 {
        // integer coefficients keep both sides exact
        let a = Multivector::new(std::array::from_fn(|_| {
            (sampling::normal::<f64>(&mut rng) * 4.0).round()
        }));
        let b = Multivector::new(std::array::from_fn(|_| {
            (sampling::normal::<f64>(&mut rng) * 4.0).round()
        }));
        assert_eq!(rep(&(a * b)), mul(&rep(&a), &rep(&b)));
    }
}

#[test]
fn blade_table_matches_representation() {
    for x in Blade::ALL {
        for y in Blade::ALL {
            let a = Multivector::<f64>::blade(x);
            let b = Multivector::<f64>::blade(y);
            assert_eq!(rep(&(a * b)), mul(&rep(&a), &rep(&b)), "{x:?} * {y:?}");
        }
    }
}

#[test]
fn rotation_matches_rotation_matrix() {
    let mut rng = sampling::stream(12, "oracle-rotation");
    for _ in 0..2000 {
        let p: AxisAngle<f64> = sampling::axis_angle(&mut rng);
        let v = sampling::vector3::<f64>(&mut rng);
        let (s, co) = p.theta().sin_cos();
        let r = p.axis();
        let k = [[0.0, -r[2], r[1]], [r[2], 0.0, -r[0]], [-r[1], r[0], 0.0]];
        let m: [[f64; 3]; 3] = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let id = if i == j { 1.0 } else { 0.0 };
                co * id + s * k[i][j] + (1.0 - co) * r[i] * r[j]
            })
        });
        let want: [f64; 3] = std::array::from_fn(|i| (0..3).map(|j| m[i][j] * v[j]).sum());
        let got = rotor_rotate(&p, v);
        for i in 0..3 {
            assert!((got[i] - want[i]).abs() < 1e-10);
        }
    }
}

#[test]
fn star1_matches_matrix_product_of_images() {
    let mut rng = sampling::stream(13, "oracle-star");
    for _ in 0..2000 {
        let a: Qubit<f64> = sampling::qubit(&mut rng);
        let b: Qubit<f64> = sampling::qubit(&mut rng);
        // first column of psi1(a) psi1(b), written out by hand
        let (a0, a1, b0, b1) = (a.c0(), a.c1(), b.c0(), b.c1());
        let want0 = a0 * b0 - a1.conj() * b1;
        let want1 = a1 * b0 + a0.conj() * b1;
        let got = star1(&a, &b);
        assert!((got.c0() - want0).norm() < 1e-12);
        assert!((got.c1() - want1).norm() < 1e-12);
        let m = psi1(&got);
        assert!((m.matrix().m[0][0] - want0).norm() < 1e-12);
    }
}

#[test]
fn two_qubit_bell_states_are_the_standard_basis() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let z = c(0.0, 0.0);
    let cases = [
        ("00", [c(h, 0.0), z, z, c(h, 0.0)]),
        ("01", [z, c(h, 0.0), c(h, 0.0), z]),
        ("10", [c(h, 0.0), z, z, c(-h, 0.0)]),
        ("11", [z, c(h, 0.0), c(-h, 0.0), z]),
    ];
    for (bits, want) in cases {
        let b = bell_state::<f64>(&Bitstring::parse(bits).unwrap()).unwrap();
        assert_eq!(b.amps(), &want, "b_{bits}");
    }
}

#[test]
fn partial_trace_matches_explicit_sum() {
    let mut rng = sampling::stream(14, "oracle-trace");
    for n in 2..=4 {
        let amps = sampling::unit_vector::<f64>(&mut rng, 1 << n);
        let reg = quregister::Quregister::new(amps.clone(), 1e-9).unwrap();
        let rho = reduced_density_first_qubit(&reg).unwrap();
        let rest = 1 << (n - 1);
        for a in 0..2 {
            for b in 0..2 {
                let mut want = c(0.0, 0.0);
                for k in 0..rest {
                    want += amps[a * rest + k] * amps[b * rest + k].conj();
                }
                assert!((rho.m[a][b] - want).norm() < 1e-14);
            }
        }
    }
}

/// Independent transcription of the n = 2 tables.
const ORACLE_I2: [[usize; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
const ORACLE_S2: [[i32; 4]; 4] = [[1, -1, -1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, 1, 1, 1]];

fn i_pow(j: usize) -> C {
    match j % 4 {
        0 => c(1.0, 0.0),
        1 => c(0.0, 1.0),
        2 => c(-1.0, 0.0),
        _ => c(0.0, -1.0),
    }
}

#[test]
fn psi2_bell_images_match_brute_force_entries() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let z = c(0.0, 0.0);
    let bells = [
        [c(h, 0.0), z, z, c(h, 0.0)],
        [z, c(h, 0.0), c(h, 0.0), z],
        [c(h, 0.0), z, z, c(-h, 0.0)],
        [z, c(h, 0.0), c(-h, 0.0), z],
    ];
    let images = bell_images(2, &literal_tables(2).unwrap()).unwrap();
    assert_eq!(images.len(), 4);
    for (img, x) in images.iter().zip(bells) {
        for i in 0..4 {
            for j in 0..4 {
                let want = i_pow(j) * x[ORACLE_I2[i][j]] * ORACLE_S2[i][j] as f64;
                assert_eq!(img.image[(i, j)], want, "b_{} entry ({i},{j})", img.bits);
            }
        }
    }
}

#[test]
fn psi2_of_b00_repeats_rows() {
    let img = &bell_images(2, &literal_tables(2).unwrap()).unwrap()[0];
    for j in 0..4 {
        assert_eq!(img.image[(0, j)], img.image[(3, j)]);
    }
    assert!(img.image.determinant().norm() < 1e-15);
}

#[test]
fn psi1_real_entries_by_hand() {
    let t = literal_tables(1).unwrap();
    let m = psi_n(&[c(0.6, 0.0), c(0.8, 0.0)], &t).unwrap();
    assert_eq!(m[(0, 0)], c(0.6, 0.0));
    assert_eq!(m[(0, 1)], c(0.8, 0.0));
    assert_eq!(m[(1, 0)], c(0.8, 0.0));
    assert_eq!(m[(1, 1)], c(-0.6, 0.0));
}
