//! Small dense complex linear algebra and entropy functionals.
//!
//! Everything here is generic over [`Scalar`] (`f32` or `f64`). Dimensions
//! in this crate stay below ~32, so all storage is dense and row-major.

mod eigen;
mod entropy;
mod matrix;
mod state;

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

pub use eigen::{hermitian_eigenvalues, hermitian_eigenvalues_with, DensitySpectrum};
pub use entropy::{shannon_entropy, von_neumann_entropy, von_neumann_entropy_with, ProbabilityVector};
pub use matrix::ComplexMatrix;
pub use state::StateVector;

/// Complex number over the crate's scalar type.
pub type Complex<T> = num_complex::Complex<T>;

/// Real floating-point type the whole crate is generic over.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Multiplier applied to the `f64` default tolerances.
    const TOLERANCE_SCALE: f64;

    /// Converts an `f64` literal. Panics only on non-representable input,
    /// which cannot happen for the finite constants used in this crate.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().expect("finite scalar")
    }
}

impl Scalar for f64 {
    const TOLERANCE_SCALE: f64 = 1.0;
}

impl Scalar for f32 {
    const TOLERANCE_SCALE: f64 = 1e5;
}

/// Numerical thresholds shared by all modules.
///
/// `Tolerances::default()` yields the `f64` values below, scaled by
/// [`Scalar::TOLERANCE_SCALE`] for lower-precision types.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances<T> {
    /// Entrywise Hermiticity check, `1e-10`.
    pub hermitian: T,
    /// Jacobi stop criterion on the off-diagonal Frobenius norm, `1e-12`.
    pub jacobi_off_norm: T,
    pub jacobi_max_sweeps: usize,
    /// Eigenvalues in `[-clamp, 0)` are roundoff and become zero, `1e-10`.
    pub clamp: T,
    /// Probability vectors and stochastic rows must sum to one within this, `1e-9`.
    pub probability_sum: T,
    /// Density spectra must sum to one within this, `1e-8`.
    pub spectrum_sum: T,
    /// State vectors must have unit norm within this, `1e-12`.
    pub normalization: T,
    /// Total-variation threshold for merging states during minimization, `1e-9`.
    pub minimize: T,
}

impl<T: Scalar> Default for Tolerances<T> {
    fn default() -> Self {
        let s = T::TOLERANCE_SCALE;
        Self {
            hermitian: T::of(1e-10 * s),
            jacobi_off_norm: T::of(1e-12 * s),
            jacobi_max_sweeps: 100,
            clamp: T::of(1e-10 * s),
            probability_sum: T::of(1e-9 * s),
            spectrum_sum: T::of(1e-8 * s),
            normalization: T::of(1e-12 * s),
            minimize: T::of(1e-9 * s),
        }
    }
}

/// Tensor (Kronecker) product; the left factor indexes most significantly.
pub trait TensorProduct<Rhs = Self> {
    type Output;
    fn tensor(&self, rhs: &Rhs) -> Self::Output;
}

/// Free-function form of [`TensorProduct::tensor`].
/// `x > tol`, treating NaN as exceeding every tolerance.
pub(crate) fn exceeds<T: Scalar>(x: T, tol: T) -> bool {
    x.is_nan() || x > tol
}

pub fn tensor_product<A: TensorProduct<B>, B>(a: &A, b: &B) -> A::Output {
    a.tensor(b)
}
