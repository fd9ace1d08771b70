//! The noisy AND / XOR block processes.
//!
//! Both emit blocks of three bits: two fair coin flips `b1 b2`, then a
//! third bit equal to `f(b1, b2)` with probability `p` and to its
//! complement otherwise. States (A..E) track the phase within a block:
//!
//! - `A`: block start.
//! - `B` / `D`: first bit was 0 / 1.
//! - `C` / `E`: next bit should be 0 / 1 when the gate is applied
//!   faithfully, i.e. `f(b1, b2)` is 0 / 1.
//!
//! This transition structure is a reconstruction from the verbal process
//! definition. It reproduces `C_mu = 2.1887` bits and the five causal-state
//! vectors quoted for the AND process, which is what it is checked against.

use std::fmt;
use std::str::FromStr;

use super::EpsilonMachine;
use crate::error::{Error, Result};
use crate::numerics::Scalar;

const STATES: [&str; 5] = ["A", "B", "C", "D", "E"];
const BINARY: [&str; 2] = ["0", "1"];

fn check_p<T: Scalar>(p: T) -> Result<()> {
    if p >= T::zero() && p <= T::one() {
        Ok(())
    } else {
        Err(Error::domain(format!("p = {p} is outside [0, 1]")))
    }
}

fn gate_machine<T: Scalar>(
    p: T,
    phase_two: [(&'static str, &'static str, &'static str); 4],
) -> Result<EpsilonMachine<T>> {
    check_p(p)?;
    let half = T::of(0.5);
    let q = T::one() - p;
    let mut edges = vec![("A", "0", "B", half), ("A", "1", "D", half)];
    edges.extend(phase_two.iter().map(|&(from, sym, to)| (from, sym, to, half)));
    edges.extend([
        ("C", "0", "A", p),
        ("C", "1", "A", q),
        ("E", "1", "A", p),
        ("E", "0", "A", q),
    ]);
    EpsilonMachine::from_labels(&STATES, &BINARY, &edges)
}

/// Noisy AND: third bit is `b1 AND b2` with probability `p`, NAND otherwise.
pub fn build_and_process<T: Scalar>(p: T) -> Result<EpsilonMachine<T>> {
    gate_machine(p, [("B", "0", "C"), ("B", "1", "C"), ("D", "0", "C"), ("D", "1", "E")])
}

/// Noisy XOR: third bit is `b1 XOR b2` with probability `p`, XNOR otherwise.
pub fn build_xor_process<T: Scalar>(p: T) -> Result<EpsilonMachine<T>> {
    gate_machine(p, [("B", "0", "C"), ("B", "1", "E"), ("D", "0", "E"), ("D", "1", "C")])
}

/// Built-in process families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProcessFamily {
    And,
    Xor,
}

impl ProcessFamily {
    pub fn build<T: Scalar>(self, p: T) -> Result<EpsilonMachine<T>> {
        match self {
            ProcessFamily::And => build_and_process(p),
            ProcessFamily::Xor => build_xor_process(p),
        }
    }

    /// The gate applied to the first two bits of each block.
    pub fn gate(self, b1: bool, b2: bool) -> bool {
        match self {
            ProcessFamily::And => b1 && b2,
            ProcessFamily::Xor => b1 ^ b2,
        }
    }
}

impl fmt::Display for ProcessFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProcessFamily::And => "and",
            ProcessFamily::Xor => "xor",
        })
    }
}

impl FromStr for ProcessFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "and" => Ok(ProcessFamily::And),
            "xor" => Ok(ProcessFamily::Xor),
            other => Err(Error::domain(format!("unknown process family {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::process::{stationary, statistical_complexity, validate};

    #[test]
    fn rejects_p_out_of_range() {
        assert!(matches!(build_and_process(1.5f64), Err(Error::Domain(_))));
        assert!(matches!(build_xor_process(-0.1f64), Err(Error::Domain(_))));
        assert!(build_and_process(f64::NAN).is_err());
    }

    #[test]
    fn families_valid_on_grid() {
        for i in 0..=10 {
            let p = i as f64 / 10.0;
            assert!(validate(&build_and_process(p).unwrap()).is_valid());
            assert!(validate(&build_xor_process(p).unwrap()).is_valid());
        }
    }

    fn assert_weights(m: &EpsilonMachine<f64>, want: [f64; 5]) {
        let s = stationary(m).unwrap();
        // Oracle: the balance equations solved by hand along the block phase:
        // A = 1/3; B = D = A/2; C, E from the phase-two edges.
        for (label, w) in STATES.iter().zip(want) {
            assert!((s.get(label).unwrap() - w).abs() < 1e-12, "{label}");
        }
    }

    #[test]
    fn and_stationary() {
        assert_weights(
            &build_and_process(1.0).unwrap(),
            [1.0 / 3.0, 1.0 / 6.0, 0.25, 1.0 / 6.0, 1.0 / 12.0],
        );
    }

    #[test]
    fn xor_stationary() {
        assert_weights(
            &build_xor_process(1.0).unwrap(),
            [1.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0],
        );
    }

    #[test]
    fn xor_complexity() {
        let c = statistical_complexity(&build_xor_process(1.0f64).unwrap()).unwrap();
        assert!((c - 2.251_629_167_387_823).abs() < 1e-12, "{c}");
    }

    #[test]
    fn retrodiction() {
        assert!(build_xor_process(1.0f64).unwrap().is_retrodictively_deterministic());
        assert!(build_xor_process(0.0f64).unwrap().is_retrodictively_deterministic());
        assert!(!build_xor_process(0.3f64).unwrap().is_retrodictively_deterministic());
        let and = build_and_process(1.0f64).unwrap();
        assert!(!and.is_retrodictively_deterministic());
        // The offending pair: C is entered on symbol 0 from both B and D.
        let c = and.state_index("C").unwrap();
        let preds: Vec<&str> = (0..5)
            .filter(|&i| and.transition(i, 0, c) > 0.0)
            .map(|i| STATES[i])
            .collect();
        assert_eq!(preds, ["B", "D"]);
    }

    #[test]
    fn family_parse() {
        assert_eq!("AND".parse::<ProcessFamily>().unwrap(), ProcessFamily::And);
        assert_eq!("xor".parse::<ProcessFamily>().unwrap(), ProcessFamily::Xor);
        assert!("or".parse::<ProcessFamily>().is_err());
        assert_eq!(ProcessFamily::Xor.to_string(), "xor");
    }
}
