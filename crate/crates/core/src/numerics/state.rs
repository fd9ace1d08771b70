use super::{Complex, ComplexMatrix, Scalar, TensorProduct, Tolerances};
use crate::error::{Error, Result};

/// Normalized pure state over a computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    amplitudes: Vec<Complex<T>>,
}

impl<T: Scalar> StateVector<T> {
    /// Wraps amplitudes that must already have unit norm.
    pub fn new(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        let tol = Tolerances::<T>::default().normalization;
        if amplitudes.is_empty() {
            return Err(Error::contract("state vector has dimension 0"));
        }
        if amplitudes.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::contract("state vector has non-finite amplitude"));
        }
        let n = norm_sqr(&amplitudes);
        if super::exceeds((n - T::one()).abs(), tol) {
            return Err(Error::contract(format!(
                "state vector norm^2 = {n} deviates from 1 by more than {tol:e}"
            )));
        }
        Ok(Self { amplitudes })
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        let n = norm_sqr(&amplitudes).sqrt();
        if n.is_nan() || n <= T::zero() || !n.is_finite() {
            return Err(Error::contract("cannot normalize a zero or non-finite vector"));
        }
        let inv = T::one() / n;
        Ok(Self {
            amplitudes: amplitudes.into_iter().map(|z| z * inv).collect(),
        })
    }

    pub fn from_real(amplitudes: &[T]) -> Result<Self> {
        Self::new(amplitudes.iter().map(|&a| Complex::new(a, T::zero())).collect())
    }

    /// Computational basis vector `|index>` in dimension `dim`.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index {index} out of range for dimension {dim}");
        let mut amplitudes = vec![Complex::new(T::zero(), T::zero()); dim];
        amplitudes[index] = Complex::new(T::one(), T::zero());
        Self { amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    /// `<self|other>`, antilinear in `self`.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `|self><self|`.
    pub fn projector(&self) -> ComplexMatrix<T> {
        let n = self.dim();
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.amplitudes[i] * self.amplitudes[j].conj();
            }
        }
        m
    }

    /// `<self| op |self>`.
    pub fn expectation(&self, op: &ComplexMatrix<T>) -> Complex<T> {
        op.sandwich(&self.amplitudes, &self.amplitudes)
    }
}

fn norm_sqr<T: Scalar>(a: &[Complex<T>]) -> T {
    a.iter().map(|z| z.norm_sqr()).sum()
}

impl<T: Scalar> TensorProduct for StateVector<T> {
    type Output = StateVector<T>;

    fn tensor(&self, rhs: &Self) -> Self {
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| rhs.amplitudes.iter().map(move |b| a * b))
            .collect();
        Self { amplitudes }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::tensor_product;

    #[test]
    fn rejects_unnormalized() {
        assert!(StateVector::<f64>::from_real(&[1.0, 1.0]).is_err());
        assert!(StateVector::<f64>::from_real(&[]).is_err());
        assert!(StateVector::<f64>::normalized(vec![Complex::new(0.0, 0.0)]).is_err());
    }

    #[test]
    fn zero_tensor_one_is_index_one() {
        let k = tensor_product(&StateVector::<f64>::basis(2, 0), &StateVector::basis(2, 1));
        assert_eq!(k, StateVector::basis(4, 1));
    }

    #[test]
    fn plus_tensor_zero() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = StateVector::from_real(&[h, h]).unwrap();
        let k = plus.tensor(&StateVector::basis(2, 0));
        let re: Vec<f64> = k.amplitudes().iter().map(|z| z.re).collect();
        assert_eq!(re, vec![h, 0.0, h, 0.0]);
    }

    #[test]
    fn bell_state_from_product_sum() {
        let zero = StateVector::<f64>::basis(2, 0);
        let one = StateVector::<f64>::basis(2, 1);
        let a = zero.tensor(&zero);
        let b = one.tensor(&one);
        let sum: Vec<_> = a.amplitudes().iter().zip(b.amplitudes()).map(|(x, y)| x + y).collect();
        let bell = StateVector::normalized(sum).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let expected = [h, 0.0, 0.0, h];
        for (z, e) in bell.amplitudes().iter().zip(expected) {
            assert!((z.re - e).abs() < 1e-15 && z.im == 0.0);
        }
    }
}
