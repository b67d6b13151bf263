//! Kronecker machinery on registers and operators: tensor products, group
//! tensor generators, words over them, Schmidt ranks and the Bell basis.
//!
//! Index convention: amplitude `k` of an `n`-qubit register is the ket whose
//! bitstring `e_{n-1} ... e_1 e_0` reads `k` in binary, so the leftmost
//! (highest) tensor factor carries the most significant bit.

use std::fmt;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{numerical_rank, singular_values, ComplexMatrix, Mat2};
use crate::scalar::{cone, czero, Real};
use crate::spinor::Su2;

/// Relative singular-value cutoff used by the Schmidt ranks.
pub const RANK_THRESHOLD: f64 = 1e-8;

/// Largest qubit count accepted for dense registers and operators.
pub const MAX_QUBITS: usize = 12;

/// Unit vector of `(C^2)^{tensor n}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Quregister<T> {
    n: usize,
    amps: Vec<Complex<T>>,
}

impl<T: Real> Quregister<T> {
    /// Validated constructor: length `2^n` with `n >= 1`, unit norm within `tol`.
    pub fn new(amps: Vec<Complex<T>>, tol: T) -> Result<Self> {
        let n = qubit_count(amps.len())?;
        let reg = Self { n, amps };
        let norm = reg.norm();
        if (norm - T::one()).abs() > tol || !norm.is_finite() {
            return Err(Error::Precondition(format!(
                "register has norm {norm}, expected 1"
            )));
        }
        Ok(reg)
    }

    pub fn from_qubit(q: &crate::spinor::Qubit<T>) -> Self {
        Self {
            n: 1,
            amps: q.amplitudes().to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amps(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn norm(&self) -> T {
        self.amps
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt()
    }

    /// `<self | other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        self.amps
            .iter()
            .zip(&other.amps)
            .fold(czero(), |acc, (a, b)| acc + a.conj() * *b)
    }
}

fn qubit_count(len: usize) -> Result<usize> {
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::Argument(format!(
            "length {len} is not 2^n with n >= 1"
        )));
    }
    let n = len.trailing_zeros() as usize;
    if n > MAX_QUBITS {
        return Err(Error::Resource(format!(
            "{n} qubits exceeds the dense limit of {MAX_QUBITS}"
        )));
    }
    Ok(n)
}

/// A classical bitstring `e_{n-1} ... e_0`, stored most significant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitstring(Vec<bool>);

impl Bitstring {
    /// Parses a string of `0`/`1` characters, leftmost is `e_{n-1}`.
    pub fn parse(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::Argument("empty bitstring".into()));
        }
        s.chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Argument(format!("'{other}' is not a bit"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    /// The `n`-bit string whose binary value is `value`.
    pub fn from_index(value: usize, n: usize) -> Self {
        Self((0..n).rev().map(|k| (value >> k) & 1 == 1).collect())
    }

    /// Every bitstring of length `n` in increasing numeric order.
    pub fn all(n: usize) -> impl Iterator<Item = Self> {
        (0..1usize << n).map(move |v| Self::from_index(v, n))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, &b| (acc << 1) | usize::from(b))
    }

    /// Bit `e_k`, with `k = 0` the least significant.
    pub fn bit(&self, k: usize) -> bool {
        self.0[self.0.len() - 1 - k]
    }
}

impl fmt::Display for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Kronecker product of registers; amplitude `i 2^n + j` is `x_i y_j`.
pub fn kron_vec<T: Real>(x: &Quregister<T>, y: &Quregister<T>) -> Quregister<T> {
    let mut amps = Vec::with_capacity(x.amps.len() * y.amps.len());
    for a in &x.amps {
        for b in &y.amps {
            amps.push(*a * *b);
        }
    }
    Quregister { n: x.n + y.n, amps }
}

pub fn kron_mat<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    a.kron(b)
}

/// `|e>` for the bitstring `e`.
pub fn canonical_ket<T: Real>(bits: &Bitstring) -> Quregister<T> {
    let mut amps = vec![czero(); 1 << bits.len()];
    amps[bits.index()] = cone();
    Quregister {
        n: bits.len(),
        amps,
    }
}

/// `(|0 e_{n-2}..e_0> + (-1)^{e_{n-1}} |1 ~e_{n-2}..~e_0>) / sqrt 2`.
pub fn bell_state<T: Real>(bits: &Bitstring) -> Result<Quregister<T>> {
    let n = bits.len();
    if n < 2 {
        return Err(Error::Argument(format!(
            "Bell states need at least 2 qubits, got {n}"
        )));
    }
    let low_mask = (1usize << (n - 1)) - 1;
    let low = bits.index() & low_mask;
    let first = low;
    let second = (1 << (n - 1)) | (!low & low_mask);
    let h = T::FRAC_1_SQRT_2();
    let mut amps = vec![czero(); 1 << n];
    amps[first] = Complex::new(h, T::zero());
    amps[second] = if bits.bit(n - 1) {
        Complex::new(-h, T::zero())
    } else {
        Complex::new(h, T::zero())
    };
    Ok(Quregister { n, amps })
}

/// Partial trace over every qubit except the most significant one.
pub fn reduced_density_first_qubit<T: Real>(x: &Quregister<T>) -> Result<Mat2<T>> {
    if x.n < 2 {
        return Err(Error::Argument(format!(
            "partial trace needs at least 2 qubits, got {}",
            x.n
        )));
    }
    let half = x.amps.len() / 2;
    let mut rho = [[czero::<T>(); 2]; 2];
    for (a, row) in rho.iter_mut().enumerate() {
        for (b, entry) in row.iter_mut().enumerate() {
            *entry = (0..half).fold(czero(), |acc, k| {
                acc + x.amps[a * half + k] * x.amps[b * half + k].conj()
            });
        }
    }
    Ok(Mat2 { m: rho })
}

/// `g_0 (x) g_1 (x) ... (x) g_{n-1}` as a `2^n x 2^n` matrix.
pub fn group_generator<T: Real>(gs: &[Su2<T>]) -> Result<ComplexMatrix<T>> {
    let (first, rest) = gs
        .split_first()
        .ok_or_else(|| Error::Argument("generator needs at least one factor".into()))?;
    if gs.len() > MAX_QUBITS {
        return Err(Error::Resource(format!(
            "{} factors exceeds the dense limit of {MAX_QUBITS}",
            gs.len()
        )));
    }
    Ok(rest.iter().fold(first.matrix().to_matrix(), |acc, g| {
        acc.kron(&g.matrix().to_matrix())
    }))
}

/// Exponent of one word letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exponent {
    Plus,
    Minus,
}

impl Exponent {
    pub fn flip(self) -> Self {
        match self {
            Self::Plus => Self::Minus,
            Self::Minus => Self::Plus,
        }
    }
}

/// One letter `T^e` of a word: `T` is the Kronecker product of its factors.
#[derive(Debug, Clone, PartialEq)]
pub struct Letter<T> {
    pub factors: Vec<Su2<T>>,
    pub exponent: Exponent,
}

/// A word `T_0^{e_0} ... T_{k-1}^{e_{k-1}}` over `n`-fold Kronecker generators.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupWord<T> {
    n: usize,
    letters: Vec<Letter<T>>,
}

impl<T: Real> GroupWord<T> {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            letters: Vec::new(),
        }
    }

    /// Every letter must carry exactly `n` factors.
    pub fn new(n: usize, letters: Vec<Letter<T>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("words need at least one qubit".into()));
        }
        if let Some((k, bad)) = letters
            .iter()
            .enumerate()
            .find(|(_, l)| l.factors.len() != n)
        {
            return Err(Error::Argument(format!(
                "letter {k} has {} factors, expected {n}",
                bad.factors.len()
            )));
        }
        Ok(Self { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter<T>] {
        &self.letters
    }

    /// The word that multiplies this one to the identity.
    pub fn formal_inverse(&self) -> Self {
        Self {
            n: self.n,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    factors: l.factors.clone(),
                    exponent: l.exponent.flip(),
                })
                .collect(),
        }
    }
}

/// Ordered product of the letters as `2^n x 2^n` matrices; `T^-1 = T^dagger`.
pub fn word_evaluate<T: Real>(w: &GroupWord<T>) -> Result<ComplexMatrix<T>> {
    let dim = 1usize << w.n;
    let mut acc = ComplexMatrix::identity(dim);
    for letter in &w.letters {
        let g = group_generator(&letter.factors)?;
        let g = match letter.exponent {
            Exponent::Plus => g,
            Exponent::Minus => g.adjoint(),
        };
        acc = &acc * &g;
    }
    Ok(acc)
}

/// Collapses a word to at most one letter by multiplying factor-wise:
/// `(g_0 (x) .. )(h_0 (x) ..) = g_0 h_0 (x) ..` and `(g (x) ..)^-1 = g^-1 (x) ..`.
pub fn word_reduce<T: Real>(w: &GroupWord<T>) -> GroupWord<T> {
    if w.letters.is_empty() {
        return GroupWord::empty(w.n);
    }
    let mut factors = vec![Su2::identity(); w.n];
    for letter in &w.letters {
        for (slot, g) in factors.iter_mut().zip(&letter.factors) {
            let g = match letter.exponent {
                Exponent::Plus => *g,
                Exponent::Minus => g.inverse(),
            };
            *slot = *slot * g;
        }
    }
    GroupWord {
        n: w.n,
        letters: vec![Letter {
            factors,
            exponent: Exponent::Plus,
        }],
    }
}

/// Rank across a bipartition together with the singular values it was read from.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtRank<T> {
    pub rank: usize,
    pub singular_values: Vec<T>,
}

fn check_cut(n: usize, cut: usize) -> Result<()> {
    if cut == 0 || cut >= n {
        return Err(Error::Argument(format!(
            "cut {cut} outside 1..={} for {n} qubits",
            n.saturating_sub(1)
        )));
    }
    Ok(())
}

/// Realigns `m` so that row `(iA, jA)` and column `(iB, jB)` hold `m[(iA iB), (jA jB)]`,
/// where `A` is the leading `cut` qubits.
pub fn realign<T: Real>(
    m: &ComplexMatrix<T>,
    cut: usize,
) -> Result<(usize, usize, Vec<Complex<T>>)> {
    let n = qubit_count(m.dim())?;
    check_cut(n, cut)?;
    let da = 1usize << cut;
    let db = 1usize << (n - cut);
    let rows = da * da;
    let cols = db * db;
    let mut out = vec![czero(); rows * cols];
    for ia in 0..da {
        for ja in 0..da {
            for ib in 0..db {
                for jb in 0..db {
                    out[(ia * da + ja) * cols + ib * db + jb] = m[(ia * db + ib, ja * db + jb)];
                }
            }
        }
    }
    Ok((rows, cols, out))
}

/// Operator Schmidt rank of `m` across the cut after the leading `cut` qubits.
pub fn operator_schmidt_rank<T: Real>(m: &ComplexMatrix<T>, cut: usize) -> Result<SchmidtRank<T>> {
    let (rows, cols, data) = realign(m, cut)?;
    let sv = singular_values(rows, cols, &data);
    Ok(SchmidtRank {
        rank: numerical_rank(&sv, T::lit(RANK_THRESHOLD)),
        singular_values: sv,
    })
}

/// Schmidt rank of a register: rank of its `2^cut x 2^(n-cut)` amplitude matrix.
pub fn vector_schmidt_rank<T: Real>(x: &Quregister<T>, cut: usize) -> Result<SchmidtRank<T>> {
    check_cut(x.n, cut)?;
    let rows = 1usize << cut;
    let cols = 1usize << (x.n - cut);
    let sv = singular_values(rows, cols, &x.amps);
    Ok(SchmidtRank {
        rank: numerical_rank(&sv, T::lit(RANK_THRESHOLD)),
        singular_values: sv,
    })
}

/// Matrix rank with the same relative cutoff as the Schmidt ranks.
pub fn matrix_rank<T: Real>(m: &ComplexMatrix<T>) -> usize {
    numerical_rank(&m.singular_values(), T::lit(RANK_THRESHOLD))
}

/// Product register `c_1 (x) ... (x) c_n` from single-qubit states.
pub fn product_register<T: Real>(qubits: &[crate::spinor::Qubit<T>]) -> Result<Quregister<T>> {
    let (first, rest) = qubits
        .split_first()
        .ok_or_else(|| Error::Argument("product register needs at least one qubit".into()))?;
    Ok(rest.iter().fold(Quregister::from_qubit(first), |acc, q| {
        kron_vec(&acc, &Quregister::from_qubit(q))
    }))
}

/// `alpha x + beta y` without renormalising; used for linearity checks.
pub fn combine<T: Real>(
    alpha: Complex<T>,
    x: &[Complex<T>],
    beta: Complex<T>,
    y: &[Complex<T>],
) -> Vec<Complex<T>> {
    x.iter().zip(y).map(|(a, b)| alpha * a + beta * b).collect()
}

/// Largest amplitude-wise modulus difference.
pub fn max_abs_diff<T: Real>(x: &[Complex<T>], y: &[Complex<T>]) -> T {
    x.iter()
        .zip(y)
        .fold(T::zero(), |m, (a, b)| m.max((*a - *b).norm()))
}
