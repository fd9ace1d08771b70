use super::{DensitySpectrum, Scalar, Tolerances};
use crate::error::{Error, Result};

/// Non-negative weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector<T> {
    weights: Vec<T>,
}

impl<T: Scalar> ProbabilityVector<T> {
    pub fn new(weights: Vec<T>) -> Result<Self> {
        Self::with_tolerance(weights, Tolerances::<T>::default().probability_sum)
    }

    pub fn with_tolerance(weights: Vec<T>, tol: T) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::contract("empty probability vector"));
        }
        if let Some((i, w)) = weights.iter().enumerate().find(|(_, w)| w.is_nan() || **w < T::zero()) {
            return Err(Error::contract(format!("weight {i} is {w}, expected >= 0")));
        }
        let sum: T = weights.iter().copied().sum();
        if super::exceeds((sum - T::one()).abs(), tol) {
            return Err(Error::contract(format!(
                "weights sum to {sum}, expected 1 within {tol:e}"
            )));
        }
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// `-sum p log2 p`, with `0 log 0 = 0`.
fn entropy_bits<T: Scalar>(values: impl Iterator<Item = T>) -> T {
    let h: T = values.filter(|&p| p > T::zero()).map(|p| -p * p.log2()).sum();
    // Point masses give -0.0.
    h.max(T::zero())
}

/// Shannon entropy in bits.
pub fn shannon_entropy<T: Scalar>(p: &ProbabilityVector<T>) -> T {
    entropy_bits(p.weights.iter().copied())
}

/// Von Neumann entropy in qubits, using default tolerances.
pub fn von_neumann_entropy<T: Scalar>(s: &DensitySpectrum<T>) -> Result<T> {
    von_neumann_entropy_with(s, &Tolerances::default())
}

/// Von Neumann entropy in qubits.
///
/// Eigenvalues in `[-tol.clamp, 0)` count as zero; anything more negative,
/// or a total deviating from one by more than `tol.spectrum_sum`, is an error.
pub fn von_neumann_entropy_with<T: Scalar>(s: &DensitySpectrum<T>, tol: &Tolerances<T>) -> Result<T> {
    if let Some(v) = s.eigenvalues().iter().find(|&&v| v.is_nan() || v < -tol.clamp) {
        return Err(Error::contract(format!(
            "eigenvalue {v:e} is below -{:e}; not a density operator",
            tol.clamp
        )));
    }
    let sum = s.sum();
    if super::exceeds((sum - T::one()).abs(), tol.spectrum_sum) {
        return Err(Error::contract(format!(
            "spectrum sums to {sum}, expected 1 within {:e}",
            tol.spectrum_sum
        )));
    }
    Ok(entropy_bits(s.eigenvalues().iter().map(|&v| v.max(T::zero()))))
}
