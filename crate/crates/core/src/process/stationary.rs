use super::EpsilonMachine;
use crate::error::{Error, Result};
use crate::numerics::{ProbabilityVector, Scalar, Tolerances};

/// Long-run state occupation probabilities, aligned with the machine's states.
#[derive(Debug, Clone, PartialEq)]
pub struct StationaryDistribution<T> {
    states: Vec<String>,
    weights: ProbabilityVector<T>,
}

impl<T: Scalar> StationaryDistribution<T> {
    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn weights(&self) -> &ProbabilityVector<T> {
        &self.weights
    }

    pub fn get(&self, state: &str) -> Option<T> {
        let i = self.states.iter().position(|s| s == state)?;
        Some(self.weights.weights()[i])
    }
}

/// Solves `pi (M - I) = 0`, `sum pi = 1` by Gaussian elimination with
/// partial pivoting, replacing one balance equation by the normalization.
pub fn stationary<T: Scalar>(m: &EpsilonMachine<T>) -> Result<StationaryDistribution<T>> {
    let tol = Tolerances::<T>::default();
    if !m.is_strongly_connected() {
        return Err(Error::NoUniqueStationary(format!(
            "machine has {} strongly connected components",
            m.components().len()
        )));
    }
    let n = m.num_states();
    let mat = m.state_matrix();

    // Row r of the system is the balance equation for state r:
    // sum_i pi_i (M_ir - delta_ir) = 0. The last row is the normalization.
    let mut a = vec![vec![T::zero(); n + 1]; n];
    for (r, row) in a.iter_mut().enumerate().take(n - 1) {
        for i in 0..n {
            row[i] = mat[i][r] - if i == r { T::one() } else { T::zero() };
        }
    }
    a[n - 1].fill(T::one());

    let pivot_floor = T::epsilon() * T::of(64.0);
    for col in 0..n {
        let (p, best) =
            (col..n)
                .map(|r| (r, a[r][col].abs()))
                .fold((col, -T::one()), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best <= pivot_floor {
            return Err(Error::NoUniqueStationary("singular balance equations".into()));
        }
        a.swap(col, p);
        for r in 0..n {
            if r != col {
                let f = a[r][col] / a[col][col];
                if f != T::zero() {
                    let pivot_row = a[col].clone();
                    for (x, &v) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                        *x -= f * v;
                    }
                }
            }
        }
    }
    let mut pi: Vec<T> = (0..n).map(|i| a[i][n] / a[i][i]).collect();

    // Roundoff can leave values like -1e-17.
    for v in pi.iter_mut() {
        if *v < T::zero() {
            if *v < -tol.probability_sum {
                return Err(Error::NoUniqueStationary(format!("negative weight {v:e}")));
            }
            *v = T::zero();
        }
    }
    let total: T = pi.iter().copied().sum();
    for v in pi.iter_mut() {
        *v /= total;
    }

    let residual = (0..n)
        .map(|j| ((0..n).map(|i| pi[i] * mat[i][j]).sum::<T>() - pi[j]).abs())
        .fold(T::zero(), T::max);
    if residual > tol.probability_sum {
        return Err(Error::contract(format!(
            "stationary residual {residual:e} exceeds {:e}; is the machine row-stochastic?",
            tol.probability_sum
        )));
    }

    Ok(StationaryDistribution {
        states: m.states().to_vec(),
        weights: ProbabilityVector::with_tolerance(pi, tol.probability_sum)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_state() {
        let m = EpsilonMachine::<f64>::from_labels(&["S"], &["0", "1"], &[("S", "0", "S", 0.3), ("S", "1", "S", 0.7)])
            .unwrap();
        assert_eq!(stationary(&m).unwrap().weights().weights(), &[1.0]);
    }

    #[test]
    fn two_state_chain() {
        // P(A->B) = 0.2, P(B->A) = 0.6 => pi = (0.75, 0.25)
        let m = EpsilonMachine::<f64>::from_labels(
            &["A", "B"],
            &["0", "1"],
            &[
                ("A", "0", "A", 0.8),
                ("A", "1", "B", 0.2),
                ("B", "0", "A", 0.6),
                ("B", "1", "B", 0.4),
            ],
        )
        .unwrap();
        let s = stationary(&m).unwrap();
        assert!((s.get("A").unwrap() - 0.75).abs() < 1e-14);
        assert!((s.get("B").unwrap() - 0.25).abs() < 1e-14);
    }

    #[test]
    fn reducible_rejected() {
        let m = EpsilonMachine::<f64>::from_labels(
            &["A", "B"],
            &["0", "1"],
            &[("A", "0", "A", 0.5), ("A", "1", "B", 0.5), ("B", "1", "B", 1.0)],
        )
        .unwrap();
        assert!(matches!(stationary(&m), Err(Error::NoUniqueStationary(_))));
    }
}
