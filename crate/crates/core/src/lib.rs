//! Multivectors of the real Clifford algebra of 3-space, their spinor images in
//! SU(2), tensor registers of qubits, and a reproducible verification harness.
//!
//! The numeric core is generic over the scalar type. `f64` is the working
//! precision, `f32` is supported throughout, and the algebra itself also runs
//! exactly over `i64`.

pub mod clifford;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod psi;
pub mod sampling;
pub mod scalar;
pub mod spinor;
pub mod tensor;

pub use clifford::{AxisAngle, Blade, Multivector, Quaternion};
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, Mat2};
pub use num_complex::Complex;
pub use psi::{PsiTables, TableSource};
pub use scalar::{Real, Ring};
pub use spinor::{PhiPairing, Qubit, Su2};
pub use tensor::{Bitstring, GroupWord, Quregister};

pub type C64 = Complex<f64>;
pub type MultivectorI64 = Multivector<i64>;
pub type Multivector64 = Multivector<f64>;
pub type Multivector32 = Multivector<f32>;
pub type Quaternion64 = Quaternion<f64>;
pub type AxisAngle64 = AxisAngle<f64>;
pub type Qubit64 = Qubit<f64>;
pub type Su2_64 = Su2<f64>;
pub type Mat2_64 = Mat2<f64>;
pub type ComplexMatrix64 = ComplexMatrix<f64>;
pub type Quregister64 = Quregister<f64>;
