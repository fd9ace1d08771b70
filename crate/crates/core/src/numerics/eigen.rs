use super::{Complex, ComplexMatrix, Scalar, Tolerances};
use crate::error::Result;

/// Real eigenvalues of a Hermitian operator, sorted descending.
///
/// Values are kept exactly as computed; clamping of roundoff negatives
/// happens in [`super::von_neumann_entropy`].
#[derive(Debug, Clone, PartialEq)]
pub struct DensitySpectrum<T> {
    eigenvalues: Vec<T>,
}

impl<T: Scalar> DensitySpectrum<T> {
    /// Sorts the given values descending.
    pub fn new(mut eigenvalues: Vec<T>) -> Self {
        eigenvalues.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
        Self { eigenvalues }
    }

    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    pub fn sum(&self) -> T {
        self.eigenvalues.iter().copied().sum()
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }
}

/// Eigenvalues of a Hermitian matrix using default tolerances.
pub fn hermitian_eigenvalues<T: Scalar>(m: &ComplexMatrix<T>) -> Result<DensitySpectrum<T>> {
    hermitian_eigenvalues_with(m, &Tolerances::default())
}

/// Cyclic complex Jacobi.
///
/// Each pivot `(p, q)` first rotates the phase of row/column `q` so the
/// pivot becomes real and positive, then applies a real Givens rotation
/// annihilating it. Sweeps stop once the off-diagonal Frobenius norm falls
/// below `tol.jacobi_off_norm` or after `tol.jacobi_max_sweeps` sweeps.
pub fn hermitian_eigenvalues_with<T: Scalar>(m: &ComplexMatrix<T>, tol: &Tolerances<T>) -> Result<DensitySpectrum<T>> {
    m.check_hermitian(tol.hermitian)?;
    let n = m.rows();
    let mut a = m.clone();
    // Symmetrize so roundoff asymmetry in the input does not leak into rotations.
    let half = T::of(0.5);
    for i in 0..n {
        a[(i, i)] = Complex::new(a[(i, i)].re, T::zero());
        for j in (i + 1)..n {
            let z = (a[(i, j)] + a[(j, i)].conj()) * half;
            a[(i, j)] = z;
            a[(j, i)] = z.conj();
        }
    }

    for _ in 0..tol.jacobi_max_sweeps {
        if off_norm(&a) < tol.jacobi_off_norm {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, p, q);
            }
        }
    }

    Ok(DensitySpectrum::new((0..n).map(|i| a[(i, i)].re).collect()))
}

fn off_norm<T: Scalar>(a: &ComplexMatrix<T>) -> T {
    let n = a.rows();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn rotate<T: Scalar>(a: &mut ComplexMatrix<T>, p: usize, q: usize) {
    let n = a.rows();
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == T::zero() {
        return;
    }

    // D = diag(.., e^{-i phi} at q, ..); A <- D^H A D makes a_pq = r.
    let phase = apq.conj() / r;
    for k in 0..n {
        a[(k, q)] *= phase;
    }
    let phase_c = phase.conj();
    for k in 0..n {
        a[(q, k)] *= phase_c;
    }

    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (T::of(2.0) * r);
    let t = if theta >= T::zero() {
        T::one() / (theta + (theta * theta + T::one()).sqrt())
    } else {
        -T::one() / (-theta + (theta * theta + T::one()).sqrt())
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;

    // A <- J^T A J with J = [[c, s], [-s, c]] on (p, q).
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * s;
        a[(k, q)] = akp * s + akq * c;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * s;
        a[(q, k)] = apk * s + aqk * c;
    }
    a[(p, q)] = Complex::new(T::zero(), T::zero());
    a[(q, p)] = Complex::new(T::zero(), T::zero());
    a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
    a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());
}
