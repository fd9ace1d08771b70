use super::{product_measurement, MeasurementBasis};
use crate::error::Result;
use crate::numerics::{Scalar, StateVector};

/// `(|001> + |110>)/sqrt 2`, qubit 0 most significant.
pub fn ghz_state<T: Scalar>() -> StateVector<T> {
    let h = T::FRAC_1_SQRT_2();
    let mut amps = vec![T::zero(); 8];
    amps[0b001] = h;
    amps[0b110] = h;
    StateVector::from_real(&amps).expect("normalized")
}

/// Input 0 measures in the x basis, input 1 in the y basis.
pub fn ghz_basis<T: Scalar>(input: bool) -> MeasurementBasis<T> {
    if input {
        MeasurementBasis::y()
    } else {
        MeasurementBasis::x()
    }
}

/// Outcome distribution for one round with inputs `(a, b, a XOR b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GhzRound<T> {
    pub a: bool,
    pub b: bool,
    /// Indexed by `m1 m2 m3` with `m1` most significant.
    pub distribution: [T; 8],
}

impl<T: Scalar> GhzRound<T> {
    /// Probability that `m1 XOR m2 XOR m3 = a AND b`.
    pub fn success(&self) -> T {
        let target = u32::from(self.a && self.b);
        self.distribution
            .iter()
            .enumerate()
            .filter(|(o, _)| (*o as u32).count_ones() % 2 == target)
            .map(|(_, &p)| p)
            .sum()
    }
}

pub fn ghz_round<T: Scalar>(a: bool, b: bool) -> GhzRound<T> {
    ghz_round_with_state(&ghz_state(), a, b).expect("three-qubit state")
}

/// As [`ghz_round`] on an arbitrary three-qubit `state`.
pub fn ghz_round_with_state<T: Scalar>(state: &StateVector<T>, a: bool, b: bool) -> Result<GhzRound<T>> {
    let bases = [ghz_basis(a), ghz_basis(b), ghz_basis(a ^ b)];
    let d = product_measurement(state, &bases)?;
    let mut distribution = [T::zero(); 8];
    distribution.copy_from_slice(&d);
    Ok(GhzRound { a, b, distribution })
}

/// Success averaged over the four input pairs.
pub fn ghz_success<T: Scalar>() -> T {
    ghz_success_with_state(&ghz_state()).expect("three-qubit state")
}

pub fn ghz_success_with_state<T: Scalar>(state: &StateVector<T>) -> Result<T> {
    let mut total = T::zero();
    for (a, b) in [(false, false), (false, true), (true, false), (true, true)] {
        total += ghz_round_with_state(state, a, b)?.success();
    }
    Ok(total / T::of(4.0))
}

/// Best average success over all `4^3 = 64` deterministic local
/// strategies, and how many were enumerated.
pub fn classical_ghz_max() -> (f64, usize) {
    let mut best = 0usize;
    let mut count = 0;
    // Each site maps its input bit to an output bit: 2 bits per site.
    for code in 0u32..64 {
        count += 1;
        let out = |site: u32, input: bool| (code >> (2 * site + u32::from(input))) & 1;
        let wins = [(false, false), (false, true), (true, false), (true, true)]
            .into_iter()
            .filter(|&(a, b)| out(0, a) ^ out(1, b) ^ out(2, a ^ b) == u32::from(a && b))
            .count();
        best = best.max(wins);
    }
    (best as f64 / 4.0, count)
}
