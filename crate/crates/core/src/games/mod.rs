//! Correlation-assisted evaluation of AND.
//!
//! Two sites receiving `a` and `b` try to output bits with
//! `m1 XOR m2 = a AND b`. The average success is `C/8 + 1/2` where `C` is
//! the CHSH value, so it is capped at 3/4 classically and `(2 + sqrt 2)/4`
//! with a shared Bell pair. Three sites sharing a GHZ state and receiving
//! `a`, `b`, `a XOR b` succeed with certainty.
//!
//! Measurement outcomes map to bits as `+ -> 0`, `- -> 1` everywhere.

mod chsh;
mod ghz;

use crate::error::{Error, Result};
use crate::numerics::{Complex, ComplexMatrix, Scalar, StateVector, TensorProduct};

pub use chsh::{
    and_game_success, bell_state, chsh_from_same, chsh_value, classical_chsh_max, optimize_chsh,
    same_outcome_probability, success_from_chsh, BipartiteStrategy, ChshOptimization, ClassicalChsh,
    DeterministicStrategy, GameOutcome,
};
pub use ghz::{
    classical_ghz_max, ghz_basis, ghz_round, ghz_round_with_state, ghz_state, ghz_success, ghz_success_with_state,
    GhzRound,
};

/// Result of a binary projective measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    pub const BOTH: [Outcome; 2] = [Outcome::Plus, Outcome::Minus];

    /// `+ -> 0`, `- -> 1`.
    pub fn bit(self) -> u8 {
        match self {
            Outcome::Plus => 0,
            Outcome::Minus => 1,
        }
    }

    pub fn from_bit(bit: u8) -> Self {
        if bit == 0 {
            Outcome::Plus
        } else {
            Outcome::Minus
        }
    }
}

/// Binary qubit measurement along the Bloch direction
/// `(sin t cos f, sin t sin f, cos t)` for polar `t`, azimuth `f`.
/// The `+` outcome is the eigenvector pointing along that direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementBasis<T> {
    pub polar: T,
    pub azimuth: T,
}

impl<T: Scalar> MeasurementBasis<T> {
    pub fn new(polar: T, azimuth: T) -> Result<Self> {
        if !(polar.is_finite() && azimuth.is_finite()) {
            return Err(Error::contract("measurement angles must be finite"));
        }
        Ok(Self { polar, azimuth })
    }

    /// Computational basis `{|0>, |1>}`.
    pub fn z() -> Self {
        Self {
            polar: T::zero(),
            azimuth: T::zero(),
        }
    }

    /// `{|+>, |->}`.
    pub fn x() -> Self {
        Self {
            polar: T::FRAC_PI_2(),
            azimuth: T::zero(),
        }
    }

    /// `{|+i>, |-i>} = {(|0> + i|1>)/sqrt 2, (|0> - i|1>)/sqrt 2}`.
    pub fn y() -> Self {
        Self {
            polar: T::FRAC_PI_2(),
            azimuth: T::FRAC_PI_2(),
        }
    }

    /// Direction at `angle` from +z towards +x on the real (x-z) great
    /// circle. Measurements here have real eigenvectors.
    pub fn real_plane(angle: T) -> Self {
        Self {
            polar: angle,
            azimuth: T::zero(),
        }
    }

    /// The angle on the x-z great circle, if the direction lies on it
    /// within `tol`.
    pub fn real_plane_angle(&self, tol: T) -> Option<T> {
        let (s, c) = (self.polar.sin(), self.polar.cos());
        let (nx, ny, nz) = (s * self.azimuth.cos(), s * self.azimuth.sin(), c);
        (ny.abs() <= tol).then(|| nx.atan2(nz))
    }

    /// Unit eigenvector for `outcome`.
    pub fn outcome_state(&self, outcome: Outcome) -> StateVector<T> {
        let half = self.polar * T::of(0.5);
        let (s, c) = (half.sin(), half.cos());
        let phase = Complex::from_polar(T::one(), self.azimuth);
        let re = |v: T| Complex::new(v, T::zero());
        let amps = match outcome {
            Outcome::Plus => vec![re(c), phase * s],
            Outcome::Minus => vec![re(s), -(phase * c)],
        };
        StateVector::normalized(amps).expect("unit vector")
    }

    pub fn projector(&self, outcome: Outcome) -> ComplexMatrix<T> {
        self.outcome_state(outcome).projector()
    }
}

/// Joint outcome distribution of measuring qubit `k` of `state` in
/// `bases[k]`. Index bits are outcome bits, qubit 0 most significant.
pub fn product_measurement<T: Scalar>(state: &StateVector<T>, bases: &[MeasurementBasis<T>]) -> Result<Vec<T>> {
    let n = bases.len();
    if state.dim() != 1 << n {
        return Err(Error::contract(format!(
            "state of dimension {} cannot be measured on {n} qubits",
            state.dim()
        )));
    }
    Ok((0..1usize << n)
        .map(|o| {
            let bra = bases
                .iter()
                .enumerate()
                .map(|(k, b)| b.outcome_state(Outcome::from_bit(((o >> (n - 1 - k)) & 1) as u8)))
                .reduce(|acc, v| acc.tensor(&v))
                .expect("at least one qubit");
            bra.inner(state).norm_sqr()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn named_bases() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let y = MeasurementBasis::<f64>::y();
        let p = y.outcome_state(Outcome::Plus);
        assert!((p.amplitudes()[0].re - h).abs() < 1e-15);
        assert!((p.amplitudes()[1].im - h).abs() < 1e-15);
        let m = y.outcome_state(Outcome::Minus);
        assert!((m.amplitudes()[0].re - h).abs() < 1e-15);
        assert!((m.amplitudes()[1].im + h).abs() < 1e-15);
        let xm = MeasurementBasis::<f64>::x().outcome_state(Outcome::Minus);
        assert!((xm.amplitudes()[1].re + h).abs() < 1e-15);
    }

    #[test]
    fn product_measurement_dimension_check() {
        let s = StateVector::<f64>::basis(4, 0);
        assert!(product_measurement(&s, &[MeasurementBasis::z()]).is_err());
        let d = product_measurement(&s, &[MeasurementBasis::z(), MeasurementBasis::z()]).unwrap();
        assert_eq!(d, vec![1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn real_plane_angle_round_trip() {
        let b = MeasurementBasis::<f64>::real_plane(-0.7);
        assert!((b.real_plane_angle(1e-12).unwrap() + 0.7).abs() < 1e-15);
        assert!(MeasurementBasis::<f64>::y().real_plane_angle(1e-12).is_none());
        let flipped = MeasurementBasis::new(0.7, std::f64::consts::PI).unwrap();
        assert!((flipped.real_plane_angle(1e-12).unwrap() + 0.7).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(MeasurementBasis::new(f64::NAN, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn projectors_complete_and_idempotent(polar in -10.0f64..10.0, azimuth in -10.0f64..10.0) {
            let b = MeasurementBasis::new(polar, azimuth).unwrap();
            let p = b.projector(Outcome::Plus);
            let m = b.projector(Outcome::Minus);
            prop_assert!(p.add(&m).max_abs_diff(&ComplexMatrix::identity(2)) <= 1e-12);
            prop_assert!(p.matmul(&p).max_abs_diff(&p) <= 1e-12);
            prop_assert!(m.matmul(&m).max_abs_diff(&m) <= 1e-12);
        }
    }
}
