//! Classical and quantum memory costs of stochastic processes, and
//! correlation-assisted evaluation of the AND function.
//!
//! - [`numerics`]: dense complex matrices, Hermitian eigenvalues, entropies.
//! - [`process`]: epsilon-machines, stationary analysis, minimization,
//!   statistical complexity, the noisy AND/XOR block processes, sampling.
//! - [`qmachine`]: quantum causal states, quantum complexity, parameter sweeps.
//! - [`games`]: CHSH correlations, the two-site AND game, the GHZ protocol.
//!
//! All numeric code is generic over [`Scalar`]; the `*F64` / `*F32` aliases
//! below fix the precision.

pub mod error;
pub mod games;
pub mod numerics;
pub mod process;
pub mod qmachine;

pub use error::{Error, Result};
pub use numerics::{
    hermitian_eigenvalues, shannon_entropy, tensor_product, von_neumann_entropy, Complex, ComplexMatrix,
    DensitySpectrum, ProbabilityVector, Scalar, StateVector, TensorProduct, Tolerances,
};

pub type ComplexMatrixF64 = ComplexMatrix<f64>;
pub type ComplexMatrixF32 = ComplexMatrix<f32>;
pub type StateVectorF64 = StateVector<f64>;
pub type StateVectorF32 = StateVector<f32>;
pub type ProbabilityVectorF64 = ProbabilityVector<f64>;
pub type DensitySpectrumF64 = DensitySpectrum<f64>;
pub type TolerancesF64 = Tolerances<f64>;
pub type EpsilonMachineF64 = process::EpsilonMachine<f64>;
pub type EpsilonMachineF32 = process::EpsilonMachine<f32>;
pub type StationaryDistributionF64 = process::StationaryDistribution<f64>;
pub type QuantumCausalEnsembleF64 = qmachine::QuantumCausalEnsemble<f64>;
pub type SweepTableF64 = qmachine::SweepTable<f64>;
pub type MeasurementBasisF64 = games::MeasurementBasis<f64>;
pub type BipartiteStrategyF64 = games::BipartiteStrategy<f64>;
