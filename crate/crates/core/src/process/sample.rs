use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{stationary, Alphabet, EpsilonMachine};
use crate::error::Result;
use crate::numerics::Scalar;

/// A finite realization of a process, with the seed that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolSequence {
    alphabet: Alphabet,
    symbols: Vec<usize>,
    seed: u64,
}

impl SymbolSequence {
    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Symbol indices into [`Self::alphabet`].
    pub fn indices(&self) -> &[usize] {
        &self.symbols
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> + '_ {
        self.symbols.iter().map(|&x| self.alphabet.symbols()[x].as_str())
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Concatenates labels, separating them with spaces unless every
    /// label is a single character.
    pub fn render(&self) -> String {
        let compact = self.alphabet.symbols().iter().all(|s| s.chars().count() == 1);
        let sep = if compact { "" } else { " " };
        self.labels().collect::<Vec<_>>().join(sep)
    }
}

/// A sampled sequence together with the hidden state path.
///
/// `states[t]` is the state occupied just before emitting symbol `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampledPath {
    pub sequence: SymbolSequence,
    pub states: Vec<usize>,
}

/// Draws `n` symbols from `m`, starting in a stationary state.
pub fn sample<T: Scalar>(m: &EpsilonMachine<T>, n: usize, seed: u64) -> Result<SymbolSequence> {
    Ok(sample_path(m, n, seed)?.sequence)
}

/// Like [`sample`] but also returns the hidden state path.
pub fn sample_path<T: Scalar>(m: &EpsilonMachine<T>, n: usize, seed: u64) -> Result<SampledPath> {
    let pi: Vec<f64> = stationary(m)?.weights().weights().iter().map(|w| w.as_f64()).collect();
    let (ns, k) = (m.num_states(), m.num_symbols());
    // Per-state cumulative tables over (symbol, target) in index order.
    let tables: Vec<Vec<(f64, usize, usize)>> = (0..ns)
        .map(|i| {
            let mut acc = 0.0;
            let mut t = Vec::new();
            for x in 0..k {
                for j in 0..ns {
                    let p = m.transition(i, x, j).as_f64();
                    if p > 0.0 {
                        acc += p;
                        t.push((acc, x, j));
                    }
                }
            }
            t
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut symbols = Vec::with_capacity(n);
    let mut states = Vec::with_capacity(n);
    if n > 0 {
        let mut state = pick(&pi, rng.gen::<f64>());
        for _ in 0..n {
            states.push(state);
            let table = &tables[state];
            let u = rng.gen::<f64>() * table.last().map_or(1.0, |e| e.0);
            let &(_, x, j) = table
                .iter()
                .find(|e| u < e.0)
                .unwrap_or_else(|| table.last().expect("validated machine has outgoing edges"));
            symbols.push(x);
            state = j;
        }
    }
    Ok(SampledPath {
        sequence: SymbolSequence {
            alphabet: m.alphabet().clone(),
            symbols,
            seed,
        },
        states,
    })
}

fn pick(weights: &[f64], u: f64) -> usize {
    let mut acc = 0.0;
    for (i, w) in weights.iter().enumerate() {
        acc += w;
        if u < acc {
            return i;
        }
    }
    weights.iter().rposition(|&w| w > 0.0).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::process::{build_and_process, build_xor_process, ProcessFamily};

    /// Third bits of each complete block, located via entries into state A.
    fn blocks(path: &SampledPath, a: usize) -> Vec<[usize; 3]> {
        let s = path.sequence.indices();
        path.states
            .iter()
            .enumerate()
            .filter(|&(t, &st)| st == a && t + 3 <= s.len())
            .map(|(t, _)| [s[t], s[t + 1], s[t + 2]])
            .collect()
    }

    #[test]
    fn empty_sample() {
        let m = build_and_process(1.0f64).unwrap();
        assert!(sample(&m, 0, 7).unwrap().is_empty());
    }

    #[test]
    fn deterministic_per_seed() {
        let m = build_and_process(0.7f64).unwrap();
        assert_eq!(sample(&m, 500, 42).unwrap(), sample(&m, 500, 42).unwrap());
        assert_ne!(sample(&m, 500, 42).unwrap(), sample(&m, 500, 43).unwrap());
        assert_eq!(sample(&m, 10, 42).unwrap().seed(), 42);
    }

    #[test]
    fn noiseless_blocks_obey_gate() {
        for (family, p) in [(ProcessFamily::And, 1.0), (ProcessFamily::Xor, 1.0)] {
            let m = family.build(p).unwrap();
            let path = sample_path(&m, 300, 11).unwrap();
            let bs = blocks(&path, 0);
            assert!(bs.len() >= 99);
            for [b1, b2, b3] in bs {
                assert_eq!(b3 == 1, family.gate(b1 == 1, b2 == 1));
            }
        }
        let m = build_and_process(0.0f64).unwrap();
        let path = sample_path(&m, 300, 5).unwrap();
        for [b1, b2, b3] in blocks(&path, 0) {
            assert_eq!(b3 == 1, !(b1 == 1 && b2 == 1));
        }
    }

    #[test]
    fn path_follows_edges() {
        let m = build_xor_process(0.6f64).unwrap();
        let path = sample_path(&m, 1000, 3).unwrap();
        let s = path.sequence.indices();
        for (t, &x) in s.iter().enumerate().take(s.len() - 1) {
            assert!(m.transition(path.states[t], x, path.states[t + 1]) > 0.0);
        }
    }

    #[test]
    fn render_compact() {
        let m = build_and_process(1.0f64).unwrap();
        let seq = sample(&m, 12, 1).unwrap();
        let r = seq.render();
        assert_eq!(r.len(), 12);
        assert!(r.chars().all(|c| c == '0' || c == '1'));
    }
}
