//! Quantum causal states and the quantum complexity `C_q`.
//!
//! For each causal state `k` the machine is encoded as
//!
//! ```text
//! |psi_k> = sum_{j, x} sqrt(T[k][x][j]) |S_j> (x) |x>
//! ```
//!
//! i.e. kets are labelled by the *target* state and emitted symbol. With
//! this placement the p = 1 AND machine gives `|psi_A> = (|B,0> + |D,1>)/sqrt 2`
//! and `C_q = 2.1258` qubits. `C_q` is the von Neumann entropy of
//! `rho = sum_k pi_k |psi_k><psi_k|`, evaluated through the weighted Gram
//! matrix `sqrt(pi_j pi_k) <psi_j|psi_k>`, which shares rho's nonzero spectrum.

mod sweep;

use crate::error::{Error, Result};
use crate::numerics::{
    hermitian_eigenvalues, von_neumann_entropy, Complex, ComplexMatrix, DensitySpectrum, ProbabilityVector, Scalar,
    StateVector,
};
use crate::process::{minimize_default, stationary, validate, EpsilonMachine};

pub use sweep::{complexity_sweep, complexity_sweep_with, format_significant, uniform_grid, SweepRow, SweepTable};

/// Causal-state vectors with their stationary weights.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumCausalEnsemble<T> {
    states: Vec<String>,
    num_symbols: usize,
    vectors: Vec<StateVector<T>>,
    weights: ProbabilityVector<T>,
    minimal: bool,
}

impl<T: Scalar> QuantumCausalEnsemble<T> {
    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn vectors(&self) -> &[StateVector<T>] {
        &self.vectors
    }

    pub fn weights(&self) -> &ProbabilityVector<T> {
        &self.weights
    }

    /// False when the source machine had mergeable states; `C_q` is only
    /// meaningful on causal (minimal) states.
    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Index of `|S_state> (x) |symbol>` in the joint basis.
    pub fn basis_index(&self, state: usize, symbol: usize) -> usize {
        state * self.num_symbols + symbol
    }

    pub fn dim(&self) -> usize {
        self.states.len() * self.num_symbols
    }
}

/// Builds `|psi_k>` for every state of `m`.
///
/// Non-minimal machines are accepted; [`QuantumCausalEnsemble::is_minimal`]
/// reports it.
pub fn causal_state_vectors<T: Scalar>(m: &EpsilonMachine<T>) -> Result<QuantumCausalEnsemble<T>> {
    let report = validate(m);
    if let Some(v) = report.violations.first() {
        return Err(Error::contract(format!("invalid machine: {v}")));
    }
    let (n, k) = (m.num_states(), m.num_symbols());
    let vectors = (0..n)
        .map(|src| {
            let mut amps = vec![Complex::new(T::zero(), T::zero()); n * k];
            for j in 0..n {
                for x in 0..k {
                    amps[j * k + x] = Complex::new(m.transition(src, x, j).sqrt(), T::zero());
                }
            }
            // Rows sum to one within tolerance; rescale away the residue.
            StateVector::normalized(amps)
        })
        .collect::<Result<Vec<_>>>()?;
    let weights = stationary(m)?.weights().clone();
    Ok(QuantumCausalEnsemble {
        states: m.states().to_vec(),
        num_symbols: k,
        vectors,
        weights,
        minimal: minimize_default(m).num_states() == n,
    })
}

/// `G_jk = <psi_j|psi_k>`.
pub fn gram_matrix<T: Scalar>(e: &QuantumCausalEnsemble<T>) -> ComplexMatrix<T> {
    let n = e.vectors.len();
    let mut g = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        for k in 0..n {
            g[(j, k)] = e.vectors[j].inner(&e.vectors[k]);
        }
    }
    g
}

/// `sqrt(pi_j pi_k) G_jk`; same nonzero spectrum as the density operator.
pub fn weighted_gram<T: Scalar>(e: &QuantumCausalEnsemble<T>) -> ComplexMatrix<T> {
    let g = gram_matrix(e);
    let w = e.weights.weights();
    let mut m = g.clone();
    for j in 0..w.len() {
        for k in 0..w.len() {
            m[(j, k)] = g[(j, k)] * (w[j] * w[k]).sqrt();
        }
    }
    m
}

/// The full `(|S| |X|)`-dimensional `rho = sum_k pi_k |psi_k><psi_k|`.
pub fn density_operator<T: Scalar>(e: &QuantumCausalEnsemble<T>) -> ComplexMatrix<T> {
    let d = e.dim();
    e.vectors
        .iter()
        .zip(e.weights.weights())
        .fold(ComplexMatrix::zeros(d, d), |acc, (v, &w)| {
            acc.add(&v.projector().scale(Complex::new(w, T::zero())))
        })
}

/// Whether complexities are evaluated on the causal-state quotient or on
/// the machine exactly as given.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Topology {
    #[default]
    Minimized,
    Raw,
}

impl Topology {
    fn apply<T: Scalar>(self, m: &EpsilonMachine<T>) -> EpsilonMachine<T> {
        match self {
            Topology::Minimized => minimize_default(m),
            Topology::Raw => m.clone(),
        }
    }
}

/// Spectrum of `rho` for the minimized machine.
pub fn quantum_spectrum<T: Scalar>(m: &EpsilonMachine<T>) -> Result<DensitySpectrum<T>> {
    quantum_spectrum_with(m, Topology::Minimized)
}

pub fn quantum_spectrum_with<T: Scalar>(m: &EpsilonMachine<T>, topology: Topology) -> Result<DensitySpectrum<T>> {
    let e = causal_state_vectors(&topology.apply(m))?;
    hermitian_eigenvalues(&weighted_gram(&e))
}

/// `C_q` in qubits, computed on the minimized machine.
pub fn quantum_complexity<T: Scalar>(m: &EpsilonMachine<T>) -> Result<T> {
    quantum_complexity_with(m, Topology::Minimized)
}

pub fn quantum_complexity_with<T: Scalar>(m: &EpsilonMachine<T>, topology: Topology) -> Result<T> {
    von_neumann_entropy(&quantum_spectrum_with(m, topology)?)
}

/// `C_mu` in bits, computed on the minimized machine.
pub fn causal_statistical_complexity<T: Scalar>(m: &EpsilonMachine<T>) -> Result<T> {
    causal_statistical_complexity_with(m, Topology::Minimized)
}

pub fn causal_statistical_complexity_with<T: Scalar>(m: &EpsilonMachine<T>, topology: Topology) -> Result<T> {
    crate::process::statistical_complexity(&topology.apply(m))
}
