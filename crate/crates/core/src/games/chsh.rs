use super::{product_measurement, MeasurementBasis, Outcome};
use crate::error::{Error, Result};
use crate::numerics::{Complex, Scalar, StateVector};

/// `(|00> + |11>)/sqrt 2`.
pub fn bell_state<T: Scalar>() -> StateVector<T> {
    let h = T::FRAC_1_SQRT_2();
    StateVector::from_real(&[h, T::zero(), T::zero(), h]).expect("normalized")
}

/// A shared two-qubit state and, per party, the basis used for input 0
/// and input 1.
///
/// In CHSH labels Alice measures `A` on input 0 and `a` on input 1; Bob
/// measures `B` on input 0 and `b` on input 1.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteStrategy<T> {
    state: StateVector<T>,
    pub alice: [MeasurementBasis<T>; 2],
    pub bob: [MeasurementBasis<T>; 2],
}

impl<T: Scalar> BipartiteStrategy<T> {
    pub fn new(state: StateVector<T>, alice: [MeasurementBasis<T>; 2], bob: [MeasurementBasis<T>; 2]) -> Result<Self> {
        if state.dim() != 4 {
            return Err(Error::contract(format!(
                "shared state has dimension {}, expected 4",
                state.dim()
            )));
        }
        Ok(Self { state, alice, bob })
    }

    /// Bell state with all four measurements on the real great circle.
    pub fn bell_real_plane(alice: [T; 2], bob: [T; 2]) -> Self {
        Self {
            state: bell_state(),
            alice: alice.map(MeasurementBasis::real_plane),
            bob: bob.map(MeasurementBasis::real_plane),
        }
    }

    /// Bell state with Alice at `{0, pi/2}` and Bob at `{pi/4, -pi/4}`,
    /// which attains `C = 2 sqrt 2`.
    pub fn tsirelson() -> Self {
        let q = T::FRAC_PI_4();
        Self::bell_real_plane([T::zero(), T::FRAC_PI_2()], [q, -q])
    }

    pub fn state(&self) -> &StateVector<T> {
        &self.state
    }
}

/// Same-outcome probabilities and derived quantities for one strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GameOutcome<T> {
    /// `same[i][j]`: probability of equal outputs when Alice's input is
    /// `i` and Bob's is `j`.
    pub same: [[T; 2]; 2],
    pub chsh: T,
    pub success: T,
}

/// `<psi| P+ (x) P+  +  P- (x) P- |psi>`: both parties report the same bit.
pub fn same_outcome_probability<T: Scalar>(
    state: &StateVector<T>,
    basis_a: &MeasurementBasis<T>,
    basis_b: &MeasurementBasis<T>,
) -> Result<T> {
    if state.dim() != 4 {
        return Err(Error::contract(format!(
            "same-outcome probability needs a 2-qubit state, got dimension {}",
            state.dim()
        )));
    }
    // Sum of |<e_o (x) f_o | psi>|^2 over o; equal to the projector form
    // but without building 4x4 operators.
    let psi = state.amplitudes();
    let p: T = Outcome::BOTH
        .iter()
        .map(|&o| {
            let (ea, eb) = (basis_a.outcome_state(o), basis_b.outcome_state(o));
            let (ea, eb) = (ea.amplitudes(), eb.amplitudes());
            let mut amp = Complex::new(T::zero(), T::zero());
            for i in 0..2 {
                for j in 0..2 {
                    amp += (ea[i] * eb[j]).conj() * psi[2 * i + j];
                }
            }
            amp.norm_sqr()
        })
        .sum();
    Ok(p.max(T::zero()).min(T::one()))
}

/// `C = 2 (p_AB + p_Ab + p_aB - p_ab - 1)`.
pub fn chsh_from_same<T: Scalar>(same: &[[T; 2]; 2]) -> T {
    T::of(2.0) * (same[0][0] + same[0][1] + same[1][0] - same[1][1] - T::one())
}

pub fn chsh_value<T: Scalar>(s: &BipartiteStrategy<T>) -> GameOutcome<T> {
    let mut same = [[T::zero(); 2]; 2];
    for (i, row) in same.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = same_outcome_probability(&s.state, &s.alice[i], &s.bob[j]).expect("strategy state is two-qubit");
        }
    }
    let chsh = chsh_from_same(&same);
    // |C| <= 2 sqrt 2 holds for every quantum strategy, so this cannot fail
    // beyond roundoff; clamp that away.
    let bound = T::of(2.0) * T::SQRT_2();
    let success = chsh.max(-bound).min(bound) / T::of(8.0) + T::of(0.5);
    GameOutcome { same, chsh, success }
}

/// Average AND-game success for CHSH value `c`: `c/8 + 1/2`.
pub fn success_from_chsh<T: Scalar>(c: T) -> Result<T> {
    let bound = T::of(2.0) * T::SQRT_2() + T::of(1e-9 * T::TOLERANCE_SCALE);
    if c.is_nan() || c.abs() > bound {
        return Err(Error::domain(format!("CHSH value {c} exceeds the Tsirelson bound")));
    }
    Ok(c / T::of(8.0) + T::of(0.5))
}

/// `(1/4) sum_{a,b} Pr(m1 XOR m2 = a AND b)` from the joint outcome
/// distributions of each input pair.
pub fn and_game_success<T: Scalar>(s: &BipartiteStrategy<T>) -> T {
    let mut total = T::zero();
    for a in 0..2 {
        for b in 0..2 {
            let target = (a & b) as u8;
            let dist = product_measurement(&s.state, &[s.alice[a], s.bob[b]]).expect("strategy state is two-qubit");
            for (o, p) in dist.into_iter().enumerate() {
                let (m1, m2) = ((o >> 1) as u8, (o & 1) as u8);
                if m1 ^ m2 == target {
                    total += p;
                }
            }
        }
    }
    total / T::of(4.0)
}

/// A local deterministic response: `alice[i]` is Alice's output bit on
/// input `i`, likewise for Bob.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeterministicStrategy {
    pub alice: [u8; 2],
    pub bob: [u8; 2],
}

impl DeterministicStrategy {
    /// All 16 strategies, ordered by the 4-bit code `alice0 alice1 bob0 bob1`.
    pub fn all() -> impl Iterator<Item = Self> {
        (0u8..16).map(|c| Self {
            alice: [(c >> 3) & 1, (c >> 2) & 1],
            bob: [(c >> 1) & 1, c & 1],
        })
    }

    pub fn code(&self) -> u8 {
        (self.alice[0] << 3) | (self.alice[1] << 2) | (self.bob[0] << 1) | self.bob[1]
    }

    /// Exact CHSH value, an even integer.
    pub fn chsh(&self) -> i32 {
        let s = |i: usize, j: usize| i32::from(self.alice[i] == self.bob[j]);
        2 * (s(0, 0) + s(0, 1) + s(1, 0) - s(1, 1) - 1)
    }

    /// The same strategy realised quantumly: shared `|00>`, and a z-basis
    /// measurement pointed at `+z` (output 0) or `-z` (output 1).
    pub fn embed<T: Scalar>(&self) -> BipartiteStrategy<T> {
        let basis = |bit: u8| MeasurementBasis::real_plane(if bit == 0 { T::zero() } else { T::PI() });
        BipartiteStrategy {
            state: StateVector::basis(4, 0),
            alice: self.alice.map(basis),
            bob: self.bob.map(basis),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicalChsh {
    pub max: i32,
    /// First strategy (by code) attaining `max`.
    pub witness: DeterministicStrategy,
    pub min: i32,
    pub min_witness: DeterministicStrategy,
    pub enumerated: usize,
}

/// Exhaustive search over the 16 deterministic local strategies.
pub fn classical_chsh_max() -> ClassicalChsh {
    let mut best: Option<(i32, DeterministicStrategy)> = None;
    let mut worst: Option<(i32, DeterministicStrategy)> = None;
    let mut enumerated = 0;
    for s in DeterministicStrategy::all() {
        enumerated += 1;
        let c = s.chsh();
        if best.is_none_or(|(b, _)| c > b) {
            best = Some((c, s));
        }
        if worst.is_none_or(|(w, _)| c < w) {
            worst = Some((c, s));
        }
    }
    let (max, witness) = best.expect("non-empty");
    let (min, min_witness) = worst.expect("non-empty");
    ClassicalChsh {
        max,
        witness,
        min,
        min_witness,
        enumerated,
    }
}

/// Result of [`optimize_chsh`].
#[derive(Debug, Clone, PartialEq)]
pub struct ChshOptimization<T> {
    pub strategy: BipartiteStrategy<T>,
    pub outcome: GameOutcome<T>,
    /// The angular step shrank below its floor before the sweep budget ran out.
    pub converged: bool,
    pub sweeps: usize,
}

const GRID_HALF_WIDTH: i32 = 8;
const MIN_STEP: f64 = 1e-10;
/// Sideways moves are only tried while the grid is this coarse.
const SIDEWAYS_MIN_STEP: f64 = 1e-3;

/// Coordinate ascent on the four real-plane measurement angles.
///
/// Each coordinate is moved to the best of `angle + k * step` for
/// `|k| <= 8`; the initial step spans the full circle. When a sweep makes
/// no progress, one sideways sweep per step level (coarse steps only)
/// accepts the best non-worsening move per coordinate, which walks off
/// flat saddles such as all angles equal. After that the step halves.
/// Stops when the step drops below `1e-10` (converged) or after
/// `iterations` sweeps (best found so far is returned with
/// `converged = false`).
///
/// Every basis in `initial` must lie on the real great circle.
pub fn optimize_chsh<T: Scalar>(initial: &BipartiteStrategy<T>, iterations: usize) -> Result<ChshOptimization<T>> {
    let tol = T::of(1e-12 * T::TOLERANCE_SCALE);
    let angle = |b: &MeasurementBasis<T>| {
        b.real_plane_angle(tol)
            .ok_or_else(|| Error::contract("optimize_chsh needs measurement directions in the x-z plane"))
    };
    let mut x = [
        angle(&initial.alice[0])?,
        angle(&initial.alice[1])?,
        angle(&initial.bob[0])?,
        angle(&initial.bob[1])?,
    ];
    let state = initial.state.clone();
    let build = |x: &[T; 4]| BipartiteStrategy {
        state: state.clone(),
        alice: [MeasurementBasis::real_plane(x[0]), MeasurementBasis::real_plane(x[1])],
        bob: [MeasurementBasis::real_plane(x[2]), MeasurementBasis::real_plane(x[3])],
    };
    let eval = |x: &[T; 4]| chsh_value(&build(x)).chsh;

    let mut value = eval(&x);
    let mut step = T::TAU() / T::of(f64::from(2 * GRID_HALF_WIDTH));
    let min_step = T::of(MIN_STEP).max(T::epsilon() * T::of(16.0));
    // Moves must beat roundoff, or flat directions drift.
    let gain = T::epsilon() * T::of(16.0);
    let mut sideways_done = false;
    let mut converged = false;
    let mut sweeps = 0;
    while sweeps < iterations {
        sweeps += 1;
        let mut improved = false;
        for c in 0..4 {
            let origin = x[c];
            for k in (-GRID_HALF_WIDTH..=GRID_HALF_WIDTH).filter(|&k| k != 0) {
                let mut trial = x;
                trial[c] = origin + step * T::of(f64::from(k));
                let v = eval(&trial);
                if v > value + gain {
                    value = v;
                    x = trial;
                    improved = true;
                }
            }
        }
        if improved {
            continue;
        }
        if !sideways_done && step >= T::of(SIDEWAYS_MIN_STEP) {
            sideways_done = true;
            let mut moved = false;
            for c in 0..4 {
                let origin = x[c];
                let mut best: Option<([T; 4], T)> = None;
                for k in (-GRID_HALF_WIDTH..=GRID_HALF_WIDTH).filter(|&k| k != 0) {
                    let mut trial = x;
                    trial[c] = origin + step * T::of(f64::from(k));
                    let v = eval(&trial);
                    if best.is_none_or(|(_, b)| v > b) {
                        best = Some((trial, v));
                    }
                }
                if let Some((trial, v)) = best.filter(|&(_, v)| v >= value - gain) {
                    x = trial;
                    value = v;
                    moved = true;
                }
            }
            if moved {
                continue;
            }
        }
        step *= T::of(0.5);
        sideways_done = false;
        if step < min_step {
            converged = true;
            break;
        }
    }

    let strategy = build(&x);
    let outcome = chsh_value(&strategy);
    Ok(ChshOptimization {
        strategy,
        outcome,
        converged,
        sweeps,
    })
}
