use super::{Edge, EpsilonMachine};
use crate::numerics::{Scalar, Tolerances};

/// Merges states that generate the same future, by partition refinement.
///
/// Starts from a single block and repeatedly splits blocks by each state's
/// signature: its distribution over `(symbol, successor block)`. Two states
/// stay together while the total-variation distance between their
/// signatures is at most `tol`. Splitting only ever happens inside a block,
/// so the result is the coarsest stable partition.
///
/// Each output state takes its transitions from the lowest-indexed member
/// of its block and is labelled by joining member labels with `+`.
pub fn minimize<T: Scalar>(m: &EpsilonMachine<T>, tol: T) -> EpsilonMachine<T> {
    let n = m.num_states();
    let mut block = vec![0usize; n];
    let mut count = 1;
    loop {
        let sigs: Vec<Vec<T>> = (0..n).map(|i| signature(m, &block, count, i)).collect();
        // Greedy assignment against block representatives, in state order.
        let mut reps: Vec<usize> = Vec::new();
        let mut next = vec![0usize; n];
        for i in 0..n {
            let found = reps
                .iter()
                .position(|&r| block[r] == block[i] && total_variation(&sigs[r], &sigs[i]) <= tol);
            next[i] = match found {
                Some(b) => b,
                None => {
                    reps.push(i);
                    reps.len() - 1
                }
            };
        }
        let stable = reps.len() == count;
        block = next;
        count = reps.len();
        if stable {
            break;
        }
    }

    if count == n {
        return m.clone();
    }

    let mut members: Vec<Vec<usize>> = vec![Vec::new(); count];
    for (i, &b) in block.iter().enumerate() {
        members[b].push(i);
    }
    let labels: Vec<String> = members
        .iter()
        .map(|ms| ms.iter().map(|&i| m.states()[i].as_str()).collect::<Vec<_>>().join("+"))
        .collect();
    let k = m.num_symbols();
    let mut edges = Vec::new();
    for (b, ms) in members.iter().enumerate() {
        let rep = ms[0];
        for x in 0..k {
            let mut to_block = vec![T::zero(); count];
            for j in 0..n {
                to_block[block[j]] += m.transition(rep, x, j);
            }
            for (c, prob) in to_block.into_iter().enumerate() {
                if prob != T::zero() {
                    edges.push(Edge {
                        from: b,
                        symbol: x,
                        to: c,
                        prob: prob.min(T::one()),
                    });
                }
            }
        }
    }
    EpsilonMachine::new(labels, m.alphabet().clone(), edges).expect("quotient of a well-formed machine is well-formed")
}

/// [`minimize`] with the default merge tolerance.
pub fn minimize_default<T: Scalar>(m: &EpsilonMachine<T>) -> EpsilonMachine<T> {
    minimize(m, Tolerances::<T>::default().minimize)
}

fn signature<T: Scalar>(m: &EpsilonMachine<T>, block: &[usize], count: usize, i: usize) -> Vec<T> {
    let (n, k) = (m.num_states(), m.num_symbols());
    let mut sig = vec![T::zero(); k * count];
    for x in 0..k {
        for j in 0..n {
            sig[x * count + block[j]] += m.transition(i, x, j);
        }
    }
    sig
}

fn total_variation<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).map(|(x, y)| (*x - *y).abs()).sum::<T>() * T::of(0.5)
}
