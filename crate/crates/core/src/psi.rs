//! The register-to-matrix maps `psi_n`, driven by an index table, a sign table
//! and a primitive root of unity, plus measurement routines for the
//! properties claimed of them.
//!
//! Entry `(i, j)` of `psi_n(x)` is `sign[i][j] * rho^j * x[index[i][j]]`, taken
//! literally: no conjugation is applied to `x`.

use std::fmt::Write as _;

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::sampling;
use crate::scalar::{cimag, cone, Real};
use crate::spinor::{psi1, Qubit};
use crate::tensor::{self, bell_state, matrix_rank, operator_schmidt_rank, Bitstring};

/// Largest `n` for which [`generated_tables`] will allocate dense tables.
pub const MAX_TABLE_QUBITS: usize = 10;

const I1: [[usize; 2]; 2] = [[0, 1], [1, 0]];
const S1: [[i8; 2]; 2] = [[1, -1], [1, 1]];

const I2: [[usize; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
const S2: [[i8; 4]; 4] = [[1, -1, -1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, 1, 1, 1]];

const I3: [[usize; 8]; 8] = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 3, 2, 5, 4, 7, 6],
    [2, 3, 0, 1, 6, 7, 4, 5],
    [3, 2, 1, 0, 7, 6, 5, 4],
    [4, 5, 6, 7, 0, 1, 2, 3],
    [5, 4, 7, 6, 1, 0, 3, 2],
    [6, 7, 4, 5, 2, 3, 0, 1],
    [7, 6, 5, 4, 3, 2, 1, 0],
];
const S3: [[i8; 8]; 8] = [
    [1, -1, -1, 1, -1, 1, 1, -1],
    [1, 1, -1, -1, -1, -1, 1, 1],
    [1, -1, 1, -1, -1, 1, -1, 1],
    [1, 1, 1, 1, -1, -1, -1, -1],
    [1, -1, -1, 1, 1, 1, -1, -1],
    [1, 1, -1, -1, 1, -1, -1, -1],
    [1, -1, 1, -1, 1, -1, 1, -1],
    [1, 1, 1, 1, 1, 1, 1, 1],
];

/// Where a table set came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableSource {
    /// Transcribed from the displayed matrices for `n = 1, 2, 3`.
    Literal,
    /// Built from `index = i XOR j`, `sign = (-1)^popcount(j AND NOT i)`.
    Generated,
}

/// Index table, sign table and root of unity defining one `psi_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct PsiTables {
    n: usize,
    index: Vec<usize>,
    sign: Vec<i8>,
    source: TableSource,
}

fn flatten<const D: usize, V: Copy>(rows: &[[V; D]; D]) -> Vec<V> {
    rows.iter().flat_map(|r| r.iter().copied()).collect()
}

/// Exact transcription of the displayed tables, `n` in `1..=3`.
pub fn literal_tables(n: usize) -> Result<PsiTables> {
    let (index, sign) = match n {
        1 => (flatten(&I1), flatten(&S1)),
        2 => (flatten(&I2), flatten(&S2)),
        3 => (flatten(&I3), flatten(&S3)),
        _ => {
            return Err(Error::Argument(format!(
                "literal tables exist only for n in 1..=3, got {n}"
            )))
        }
    };
    Ok(PsiTables {
        n,
        index,
        sign,
        source: TableSource::Literal,
    })
}

/// Tables from the XOR / popcount rule for any `n` in `1..=MAX_TABLE_QUBITS`.
pub fn generated_tables(n: usize) -> Result<PsiTables> {
    if n == 0 {
        return Err(Error::Argument("tables need n >= 1".into()));
    }
    if n > MAX_TABLE_QUBITS {
        return Err(Error::Resource(format!(
            "dense tables for n = {n} exceed the limit n <= {MAX_TABLE_QUBITS}"
        )));
    }
    let dim = 1usize << n;
    let mut index = Vec::with_capacity(dim * dim);
    let mut sign = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            index.push(i ^ j);
            sign.push(if (j & !i).count_ones() % 2 == 0 {
                1
            } else {
                -1
            });
        }
    }
    Ok(PsiTables {
        n,
        index,
        sign,
        source: TableSource::Generated,
    })
}

impl PsiTables {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn source(&self) -> TableSource {
        self.source
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        self.index[i * self.dim() + j]
    }

    pub fn sign(&self, i: usize, j: usize) -> i8 {
        self.sign[i * self.dim() + j]
    }

    /// `exp(i 2 pi / 2^n)`.
    pub fn rho<T: Real>(&self) -> Complex<T> {
        root_power(self.n, 1)
    }

    /// Violated table invariants, empty when all hold.
    pub fn invariant_violations(&self) -> Vec<String> {
        let dim = self.dim();
        let mut out = Vec::new();
        let is_perm = |vals: Vec<usize>| {
            let mut seen = vec![false; dim];
            vals.into_iter()
                .all(|v| v < dim && !std::mem::replace(&mut seen[v], true))
        };
        for i in 0..dim {
            if !is_perm((0..dim).map(|j| self.index(i, j)).collect()) {
                out.push(format!("index row {i} is not a permutation"));
            }
            if !is_perm((0..dim).map(|j| self.index(j, i)).collect()) {
                out.push(format!("index column {i} is not a permutation"));
            }
        }
        if let Some(&s) = self.sign.iter().find(|s| s.abs() != 1) {
            out.push(format!("sign entry {s} is not +-1"));
        }
        let rho: Complex<f64> = self.rho();
        if (rho.norm() - 1.0).abs() > 1e-12 {
            out.push(format!("|rho| = {}", rho.norm()));
        }
        if (rho.powu(dim as u32) - Complex::new(1.0, 0.0)).norm() > 1e-12 {
            out.push("rho^(2^n) != 1".into());
        }
        out
    }
}

/// `rho_n^j`, exact whenever `j` is a multiple of a quarter turn.
pub fn root_power<T: Real>(n: usize, j: usize) -> Complex<T> {
    let order = 1usize << n;
    let k = j % order;
    if (4 * k).is_multiple_of(order) {
        let quarter = 4 * k / order;
        return match quarter {
            0 => cone(),
            1 => cimag(),
            2 => -cone::<T>(),
            _ => -cimag::<T>(),
        };
    }
    let angle = T::TAU() * T::lit(k as f64) / T::lit(order as f64);
    let (s, c) = angle.sin_cos();
    Complex::new(c, s)
}

/// Which table a [`TableMismatch`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    Index,
    Sign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TableMismatch {
    pub table: TableKind,
    pub row: usize,
    pub col: usize,
    pub left: i64,
    pub right: i64,
}

/// Every coordinate where two table sets disagree, index table first, row-major.
pub fn compare_tables(a: &PsiTables, b: &PsiTables) -> Result<Vec<TableMismatch>> {
    if a.n != b.n {
        return Err(Error::Argument(format!(
            "cannot compare tables for n = {} and n = {}",
            a.n, b.n
        )));
    }
    let dim = a.dim();
    let mut out = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if a.index(i, j) != b.index(i, j) {
                out.push(TableMismatch {
                    table: TableKind::Index,
                    row: i,
                    col: j,
                    left: a.index(i, j) as i64,
                    right: b.index(i, j) as i64,
                });
            }
        }
    }
    for i in 0..dim {
        for j in 0..dim {
            if a.sign(i, j) != b.sign(i, j) {
                out.push(TableMismatch {
                    table: TableKind::Sign,
                    row: i,
                    col: j,
                    left: a.sign(i, j).into(),
                    right: b.sign(i, j).into(),
                });
            }
        }
    }
    Ok(out)
}

/// `[sign(i,j) rho^j x[index(i,j)]]_{i,j}`.
pub fn psi_n<T: Real>(x: &[Complex<T>], t: &PsiTables) -> Result<ComplexMatrix<T>> {
    let dim = t.dim();
    if x.len() != dim {
        return Err(Error::Argument(format!(
            "register has {} amplitudes, tables expect {dim}",
            x.len()
        )));
    }
    let powers: Vec<Complex<T>> = (0..dim).map(|j| root_power(t.n, j)).collect();
    Ok(ComplexMatrix::from_fn(dim, |i, j| {
        let v = powers[j] * x[t.index(i, j)];
        if t.sign(i, j) < 0 {
            -v
        } else {
            v
        }
    }))
}

/// Outcome class of a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ReportOnly,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::ReportOnly => "report-only",
        }
    }
}

/// Structured result of one measured or asserted claim.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimVerdict {
    pub id: String,
    pub paper_ref: String,
    pub status: Status,
    pub max_residual: f64,
    pub samples: u64,
    pub details: String,
}

fn f64_of<T: Real>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Operator-norm distance of `psi_n(x)^dagger psi_n(x)` from the identity over
/// `samples` random unit registers.
pub fn verify_unitarity(t: &PsiTables, samples: u64, seed: u64, tol: f64) -> ClaimVerdict {
    let mut rng = sampling::stream(seed, "psi-unitarity");
    let dim = t.dim();
    let mut worst = 0.0f64;
    let mut worst_entry = 0.0f64;
    let mut below = 0u64;
    for _ in 0..samples {
        let x: Vec<Complex<f64>> = sampling::unit_vector(&mut rng, dim);
        let m = psi_n(&x, t).expect("sample dimension matches tables");
        let gram = &m.adjoint() * &m;
        let diff = &gram - &ComplexMatrix::identity(dim);
        let r = diff.op_norm();
        worst = worst.max(r);
        worst_entry = worst_entry.max(diff.max_abs());
        if r <= tol {
            below += 1;
        }
    }
    ClaimVerdict {
        id: format!("psi{}-unitarity/{}", t.n, source_tag(t)),
        paper_ref: "there exists a bijection".into(),
        status: Status::ReportOnly,
        max_residual: worst,
        samples,
        details: format!(
            "max ||psi^H psi - Id||_op = {worst:e}, max entry = {worst_entry:e}, {below}/{samples} samples within {tol:e}"
        ),
    }
}

fn source_tag(t: &PsiTables) -> &'static str {
    match t.source {
        TableSource::Literal => "literal",
        TableSource::Generated => "generated",
    }
}

/// Residual of `psi_n(c_1 (x) ... (x) c_n)` against `psi1(c_1) (x) ... (x) psi1(c_n)`.
pub fn verify_separable_consistency<T: Real>(
    cs: &[Qubit<T>],
    t: &PsiTables,
    tol: T,
) -> Result<ClaimVerdict> {
    let (lhs, rhs) = separable_pair(cs, t)?;
    let diff = &lhs - &rhs;
    let residual = f64_of(diff.op_norm());
    let tolf = f64_of(tol);
    let mut details = format!(
        "||psi_n(product) - kron(psi1)||_op = {residual:e}, max entry = {:e}",
        f64_of(diff.max_abs())
    );
    let mismatches: Vec<(usize, usize)> = (0..diff.dim())
        .flat_map(|i| (0..diff.dim()).map(move |j| (i, j)))
        .filter(|&(i, j)| f64_of(diff[(i, j)].norm()) > tolf)
        .collect();
    let _ = write!(
        details,
        "; {} entries differ by more than {tolf:e}",
        mismatches.len()
    );
    if !mismatches.is_empty() {
        let shown: Vec<String> = mismatches
            .iter()
            .take(16)
            .map(|(i, j)| format!("({i},{j})"))
            .collect();
        let _ = write!(details, ": {}", shown.join(" "));
        if mismatches.len() > 16 {
            details.push_str(" ...");
        }
    }
    Ok(ClaimVerdict {
        id: format!("psi{}-separable/{}", t.n, source_tag(t)),
        paper_ref: "coincides with the linear operator tensor product".into(),
        status: Status::ReportOnly,
        max_residual: residual,
        samples: 1,
        details,
    })
}

/// Both sides of the separable-consistency comparison.
pub fn separable_pair<T: Real>(
    cs: &[Qubit<T>],
    t: &PsiTables,
) -> Result<(ComplexMatrix<T>, ComplexMatrix<T>)> {
    if cs.len() != t.n {
        return Err(Error::Argument(format!(
            "{} qubits given for tables with n = {}",
            cs.len(),
            t.n
        )));
    }
    let reg = tensor::product_register(cs)?;
    let lhs = psi_n(reg.amps(), t)?;
    let factors: Vec<_> = cs.iter().map(psi1).collect();
    let rhs = tensor::group_generator(&factors)?;
    Ok((lhs, rhs))
}

/// Sampled version of [`verify_separable_consistency`] over random product states.
pub fn verify_separable_consistency_sampled(
    t: &PsiTables,
    samples: u64,
    seed: u64,
    tol: f64,
) -> ClaimVerdict {
    let mut rng = sampling::stream(seed, "psi-separable");
    let mut worst = 0.0f64;
    let mut within = 0u64;
    let mut pattern: Option<Vec<bool>> = None;
    let mut stable_pattern = true;
    for _ in 0..samples {
        let cs: Vec<Qubit<f64>> = (0..t.n).map(|_| sampling::qubit(&mut rng)).collect();
        let (lhs, rhs) = separable_pair(&cs, t).expect("sample sizes match tables");
        let diff = &lhs - &rhs;
        let r = diff.op_norm();
        worst = worst.max(r);
        if r <= tol {
            within += 1;
        }
        let mask: Vec<bool> = diff.as_slice().iter().map(|z| z.norm() > tol).collect();
        match &pattern {
            None => pattern = Some(mask),
            Some(p) if *p != mask => stable_pattern = false,
            _ => {}
        }
    }
    let differing = pattern
        .as_ref()
        .map(|p| p.iter().filter(|&&b| b).count())
        .unwrap_or(0);
    ClaimVerdict {
        id: format!("psi{}-separable/{}", t.n, source_tag(t)),
        paper_ref: "coincides with the linear operator tensor product".into(),
        status: Status::ReportOnly,
        max_residual: worst,
        samples,
        details: format!(
            "max ||psi_n(product) - kron(psi1)||_op = {worst:e}; {within}/{samples} samples within {tol:e}; first sample differs in {differing}/{} entries; mismatch pattern {}",
            t.dim() * t.dim(),
            if stable_pattern { "stable across samples" } else { "varies across samples" }
        ),
    }
}

/// The image of one Bell state together with its measured properties.
#[derive(Debug, Clone, PartialEq)]
pub struct BellImage {
    pub bits: Bitstring,
    pub image: ComplexMatrix<f64>,
    pub unitarity_residual: f64,
    pub schmidt_ranks: Vec<usize>,
    pub matrix_rank: usize,
    pub verdict: ClaimVerdict,
}

/// `psi_n(b_e)` for every Bell state `b_e`, `n` in `2..=3`.
pub fn bell_images(n: usize, t: &PsiTables) -> Result<Vec<BellImage>> {
    if !(2..=3).contains(&n) || t.n != n {
        return Err(Error::Argument(format!(
            "Bell images need 2 <= n <= 3 matching the tables (n = {n}, tables n = {})",
            t.n
        )));
    }
    Bitstring::all(n)
        .map(|bits| {
            let b = bell_state::<f64>(&bits)?;
            let image = psi_n(b.amps(), t)?;
            let unitarity_residual = image.unitarity_residual();
            let schmidt_ranks = (1..n)
                .map(|cut| operator_schmidt_rank(&image, cut).map(|r| r.rank))
                .collect::<Result<Vec<_>>>()?;
            let rank = matrix_rank(&image);
            let det = image.determinant().norm();
            let verdict = ClaimVerdict {
                id: format!("psi{n}-bell/{}/{bits}", source_tag(t)),
                paper_ref: "maximally entangled elements".into(),
                status: Status::ReportOnly,
                max_residual: unitarity_residual,
                samples: 1,
                details: format!(
                    "unitarity residual {unitarity_residual:e}; matrix rank {rank}/{}; |det| {det:e}; operator Schmidt ranks by cut {schmidt_ranks:?}",
                    image.dim()
                ),
            };
            Ok(BellImage {
                bits,
                image,
                unitarity_residual,
                schmidt_ranks,
                matrix_rank: rank,
                verdict,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn literal_transcription_spot_checks() {
        let t1 = literal_tables(1).unwrap();
        assert_eq!(t1.index, vec![0, 1, 1, 0]);
        assert_eq!(t1.sign, vec![1, -1, 1, 1]);
        let t2 = literal_tables(2).unwrap();
        assert_eq!(
            (0..4).map(|j| t2.index(1, j)).collect::<Vec<_>>(),
            [1, 0, 3, 2]
        );
        let t3 = literal_tables(3).unwrap();
        assert!((0..8).all(|j| t3.sign(7, j) == 1));
        assert!(matches!(literal_tables(0), Err(Error::Argument(_))));
        assert!(matches!(literal_tables(4), Err(Error::Argument(_))));
    }

    #[test]
    fn generated_limits() {
        assert!(matches!(generated_tables(0), Err(Error::Argument(_))));
        assert!(matches!(
            generated_tables(MAX_TABLE_QUBITS + 1),
            Err(Error::Resource(_))
        ));
        let g = generated_tables(5).unwrap();
        assert!(g.invariant_violations().is_empty());
    }

    #[test]
    fn compare_rejects_mismatched_sizes() {
        let a = literal_tables(1).unwrap();
        let b = literal_tables(2).unwrap();
        assert!(matches!(compare_tables(&a, &b), Err(Error::Argument(_))));
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(root_power::<f64>(1, 1), c(-1.0, 0.0));
        assert_eq!(root_power::<f64>(2, 1), c(0.0, 1.0));
        assert_eq!(root_power::<f64>(2, 3), c(0.0, -1.0));
        let r = root_power::<f64>(3, 1);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((r - c(h, h)).norm() < 1e-15);
        for n in 1..=4 {
            let rho = root_power::<f64>(n, 1);
            assert!((rho.powu(1 << n) - c(1.0, 0.0)).norm() < 1e-12);
            assert!((rho.powu(1 << (n - 1)) + c(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn psi1_literal_shape() {
        let t = literal_tables(1).unwrap();
        let x = [c(0.3, 0.1), c(-0.2, 0.7)];
        let m = psi_n(&x, &t).unwrap();
        assert_eq!(m[(0, 0)], x[0]);
        assert_eq!(m[(0, 1)], x[1]);
        assert_eq!(m[(1, 0)], x[1]);
        assert_eq!(m[(1, 1)], -x[0]);
        let e0 = psi_n(&[c(1.0, 0.0), c(0.0, 0.0)], &t).unwrap();
        assert_eq!(e0[(1, 1)], c(-1.0, 0.0));
        assert!(matches!(psi_n(&[c(1.0, 0.0)], &t), Err(Error::Argument(_))));
    }

    #[test]
    fn psi2_of_first_basis_vector_is_diagonal_roots() {
        let t = literal_tables(2).unwrap();
        let m = psi_n(&[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)], &t).unwrap();
        let expected = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)];
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { expected[i] } else { c(0.0, 0.0) };
                assert_eq!(m[(i, j)], want, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn real_inputs_give_orthogonal_psi1() {
        let t = literal_tables(1).unwrap();
        let m = psi_n(&[c(0.6, 0.0), c(0.8, 0.0)], &t).unwrap();
        assert!(m.unitarity_residual() < 1e-15);
    }

    #[test]
    fn separable_consistency_at_n1_reports_the_conjugation_gap() {
        let t = literal_tables(1).unwrap();
        let q = Qubit::new(c(0.6, 0.0), c(0.0, 0.8), 1e-9).unwrap();
        let v = verify_separable_consistency(&[q], &t, 1e-9).unwrap();
        assert_eq!(v.status, Status::ReportOnly);
        assert!(v.max_residual > 0.1);
        // psi_1 puts -x0 where psi1 puts conj(c0), other entries agree here
        assert!(v.details.contains("1 entries differ") && v.details.contains("(1,1)"));
        assert!(verify_separable_consistency(&[q, q], &t, 1e-9).is_err());
    }

    #[test]
    fn bell_images_reject_bad_sizes() {
        let t2 = literal_tables(2).unwrap();
        assert!(bell_images(3, &t2).is_err());
        assert!(bell_images(1, &literal_tables(1).unwrap()).is_err());
        assert_eq!(bell_images(2, &t2).unwrap().len(), 4);
    }

    #[test]
    fn verdicts_are_seed_deterministic() {
        let t = literal_tables(2).unwrap();
        assert_eq!(
            verify_unitarity(&t, 50, 7, 1e-9),
            verify_unitarity(&t, 50, 7, 1e-9)
        );
        assert_eq!(
            verify_separable_consistency_sampled(&t, 50, 7, 1e-9),
            verify_separable_consistency_sampled(&t, 50, 7, 1e-9)
        );
    }
}
