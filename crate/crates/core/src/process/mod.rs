//! Epsilon-machines: finite-state, symbol-labelled stochastic generators.
//!
//! A machine stores `T[i][x][j] = Pr(emit x, move to j | in state i)`.
//! States and symbols are addressed by index; labels are kept for I/O.

mod families;
mod io;
mod minimize;
mod sample;
mod stationary;

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::numerics::{exceeds, shannon_entropy, Scalar, Tolerances};

pub use families::{build_and_process, build_xor_process, ProcessFamily};
pub use io::MachineFile;
pub use minimize::{minimize, minimize_default};
pub use sample::{sample, sample_path, SampledPath, SymbolSequence};
pub use stationary::{stationary, StationaryDistribution};

/// Ordered set of distinct symbol labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::contract("alphabet is empty"));
        }
        check_unique(&symbols, "symbol")?;
        Ok(Self { symbols })
    }

    /// The binary alphabet `{"0", "1"}`.
    pub fn binary() -> Self {
        Self {
            symbols: vec!["0".into(), "1".into()],
        }
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == label)
    }
}

fn check_unique(labels: &[String], what: &str) -> Result<()> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::contract(format!("duplicate {what} label {l:?}")));
        }
    }
    Ok(())
}

/// One positive-or-zero transition `from --symbol/prob--> to`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge<T> {
    pub from: usize,
    pub symbol: usize,
    pub to: usize,
    pub prob: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonMachine<T> {
    states: Vec<String>,
    alphabet: Alphabet,
    probs: Vec<T>,
}

impl<T: Scalar> EpsilonMachine<T> {
    /// Builds a machine from indexed edges. Missing edges have probability 0.
    ///
    /// Only structural problems (bad indices, repeated edges, non-finite
    /// probabilities) are errors; stochasticity and connectivity are
    /// reported by [`validate`].
    pub fn new<S: Into<String>>(
        states: impl IntoIterator<Item = S>,
        alphabet: Alphabet,
        edges: impl IntoIterator<Item = Edge<T>>,
    ) -> Result<Self> {
        let states: Vec<String> = states.into_iter().map(Into::into).collect();
        if states.is_empty() {
            return Err(Error::contract("machine has no states"));
        }
        check_unique(&states, "state")?;
        let (n, k) = (states.len(), alphabet.len());
        let mut probs = vec![T::zero(); n * k * n];
        let mut seen = vec![false; n * k * n];
        for e in edges {
            if e.from >= n || e.to >= n || e.symbol >= k {
                return Err(Error::contract(format!(
                    "edge ({}, {}, {}) out of range",
                    e.from, e.symbol, e.to
                )));
            }
            if !e.prob.is_finite() {
                return Err(Error::contract(format!(
                    "non-finite probability on edge {} -{}-> {}",
                    states[e.from], alphabet.symbols[e.symbol], states[e.to]
                )));
            }
            let idx = (e.from * k + e.symbol) * n + e.to;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::contract(format!(
                    "edge {} -{}-> {} listed twice",
                    states[e.from], alphabet.symbols[e.symbol], states[e.to]
                )));
            }
            probs[idx] = e.prob;
        }
        Ok(Self {
            states,
            alphabet,
            probs,
        })
    }

    /// Builds a machine from `(from, symbol, to, prob)` label tuples.
    pub fn from_labels(states: &[&str], alphabet: &[&str], edges: &[(&str, &str, &str, T)]) -> Result<Self> {
        let alphabet = Alphabet::new(alphabet.iter().copied())?;
        let find = |label: &str| {
            states
                .iter()
                .position(|s| *s == label)
                .ok_or_else(|| Error::contract(format!("unknown state {label:?}")))
        };
        let edges = edges
            .iter()
            .map(|&(from, sym, to, prob)| {
                Ok(Edge {
                    from: find(from)?,
                    symbol: alphabet
                        .index_of(sym)
                        .ok_or_else(|| Error::contract(format!("unknown symbol {sym:?}")))?,
                    to: find(to)?,
                    prob,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(states.iter().copied(), alphabet, edges)
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_symbols(&self) -> usize {
        self.alphabet.len()
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_index(&self, label: &str) -> Option<usize> {
        self.states.iter().position(|s| s == label)
    }

    /// `T[from][symbol][to]`.
    pub fn transition(&self, from: usize, symbol: usize, to: usize) -> T {
        let (n, k) = (self.num_states(), self.num_symbols());
        self.probs[(from * k + symbol) * n + to]
    }

    /// All edges with nonzero probability, ordered by `(from, symbol, to)`.
    pub fn edges(&self) -> impl Iterator<Item = Edge<T>> + '_ {
        let (n, k) = (self.num_states(), self.num_symbols());
        (0..n).flat_map(move |from| {
            (0..k).flat_map(move |symbol| {
                (0..n).filter_map(move |to| {
                    let prob = self.transition(from, symbol, to);
                    (prob != T::zero()).then_some(Edge { from, symbol, to, prob })
                })
            })
        })
    }

    pub fn row_sum(&self, from: usize) -> T {
        let (n, k) = (self.num_states(), self.num_symbols());
        self.probs[from * k * n..(from + 1) * k * n].iter().copied().sum()
    }

    /// Symbol-summed state-to-state matrix `M_ij = sum_x T_ij^x`.
    pub fn state_matrix(&self) -> Vec<Vec<T>> {
        let (n, k) = (self.num_states(), self.num_symbols());
        (0..n)
            .map(|i| (0..n).map(|j| (0..k).map(|x| self.transition(i, x, j)).sum()).collect())
            .collect()
    }

    /// Strongly connected components of the positive-probability graph,
    /// each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.num_states();
        let m = self.state_matrix();
        let reach: Vec<Vec<bool>> = (0..n)
            .map(|s| {
                let mut seen = vec![false; n];
                let mut stack = vec![s];
                seen[s] = true;
                while let Some(i) = stack.pop() {
                    for j in 0..n {
                        if m[i][j] > T::zero() && !seen[j] {
                            seen[j] = true;
                            stack.push(j);
                        }
                    }
                }
                seen
            })
            .collect();
        let mut assigned = vec![false; n];
        let mut comps = Vec::new();
        for i in 0..n {
            if assigned[i] {
                continue;
            }
            let comp: Vec<usize> = (i..n).filter(|&j| reach[i][j] && reach[j][i]).collect();
            for &j in &comp {
                assigned[j] = true;
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Every (target state, symbol) pair has at most one source state.
    pub fn is_retrodictively_deterministic(&self) -> bool {
        let (n, k) = (self.num_states(), self.num_symbols());
        (0..n).all(|j| (0..k).all(|x| (0..n).filter(|&i| self.transition(i, x, j) > T::zero()).count() <= 1))
    }

    /// Every (source state, symbol) pair has at most one target state.
    pub fn is_unifilar(&self) -> bool {
        let (n, k) = (self.num_states(), self.num_symbols());
        (0..n).all(|i| (0..k).all(|x| (0..n).filter(|&j| self.transition(i, x, j) > T::zero()).count() <= 1))
    }
}

/// A single broken machine invariant.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation<T> {
    /// Outgoing probabilities of `state` do not sum to one.
    RowSum { state: String, sum: T },
    /// A transition probability lies outside `[0, 1]`.
    ProbabilityRange {
        from: String,
        symbol: String,
        to: String,
        value: T,
    },
    /// The transition graph has more than one strongly connected component.
    NotStronglyConnected { components: Vec<Vec<String>> },
}

impl<T: Scalar> fmt::Display for Violation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RowSum { state, sum } => write!(
                f,
                "state {state}: outgoing probabilities sum to {sum} (off by {:e})",
                (*sum - T::one()).abs()
            ),
            Violation::ProbabilityRange {
                from,
                symbol,
                to,
                value,
            } => write!(f, "edge {from} -{symbol}-> {to}: probability {value} outside [0, 1]"),
            Violation::NotStronglyConnected { components } => {
                let parts: Vec<String> = components.iter().map(|c| format!("{{{}}}", c.join(", "))).collect();
                write!(f, "states are not mutually reachable; components {}", parts.join(" "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport<T> {
    pub violations: Vec<Violation<T>>,
}

impl<T> ValidationReport<T> {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks row-stochasticity, probability ranges and strong connectivity.
pub fn validate<T: Scalar>(m: &EpsilonMachine<T>) -> ValidationReport<T> {
    validate_with(m, &Tolerances::default())
}

pub fn validate_with<T: Scalar>(m: &EpsilonMachine<T>, tol: &Tolerances<T>) -> ValidationReport<T> {
    let mut violations = Vec::new();
    let (n, k) = (m.num_states(), m.num_symbols());
    for i in 0..n {
        for x in 0..k {
            for j in 0..n {
                let v = m.transition(i, x, j);
                if v < -tol.probability_sum || v > T::one() + tol.probability_sum {
                    violations.push(Violation::ProbabilityRange {
                        from: m.states[i].clone(),
                        symbol: m.alphabet.symbols[x].clone(),
                        to: m.states[j].clone(),
                        value: v,
                    });
                }
            }
        }
        let sum = m.row_sum(i);
        if exceeds((sum - T::one()).abs(), tol.probability_sum) {
            violations.push(Violation::RowSum {
                state: m.states[i].clone(),
                sum,
            });
        }
    }
    let comps = m.components();
    if comps.len() > 1 {
        violations.push(Violation::NotStronglyConnected {
            components: comps
                .iter()
                .map(|c| c.iter().map(|&i| m.states[i].clone()).collect())
                .collect(),
        });
    }
    ValidationReport { violations }
}

/// Shannon entropy of the stationary state distribution, in bits.
///
/// This is the statistical complexity when `m` is already minimal; call
/// [`minimize`] first otherwise.
pub fn statistical_complexity<T: Scalar>(m: &EpsilonMachine<T>) -> Result<T> {
    Ok(shannon_entropy(stationary(m)?.weights()))
}

/// Free-function form of [`EpsilonMachine::is_retrodictively_deterministic`].
pub fn is_retrodictively_deterministic<T: Scalar>(m: &EpsilonMachine<T>) -> bool {
    m.is_retrodictively_deterministic()
}
