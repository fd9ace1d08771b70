//! Text and CSV rendering. Text uses 6 decimals, CSV 12 significant digits.

use std::fmt::Write;

use qcomplexity::games::{self, BipartiteStrategy, GameOutcome};
use qcomplexity::process::{EpsilonMachine, StationaryDistribution, ValidationReport};
use qcomplexity::qmachine::format_significant;

use crate::Format;

/// Six decimals, without a negative sign on values that round to zero.
fn fixed6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        s[1..].to_string()
    } else {
        s
    }
}

fn sig12(x: f64) -> String {
    format_significant(x, 12)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn validation(m: &EpsilonMachine<f64>, r: &ValidationReport<f64>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "states: {}", m.num_states());
    let _ = writeln!(s, "symbols: {}", m.num_symbols());
    let _ = writeln!(s, "unifilar: {}", yes_no(m.is_unifilar()));
    let _ = writeln!(
        s,
        "retrodictively deterministic: {}",
        yes_no(m.is_retrodictively_deterministic())
    );
    for v in &r.violations {
        let _ = writeln!(s, "violation: {v}");
    }
    s.push_str(if r.is_valid() { "valid\n" } else { "invalid\n" });
    s
}

pub fn stationary(pi: &StationaryDistribution<f64>) -> String {
    let mut s = String::new();
    for (label, w) in pi.states().iter().zip(pi.weights().weights()) {
        let _ = writeln!(s, "pi({label}) = {}", fixed6(*w));
    }
    s
}

pub fn complexity(states: usize, minimal_states: usize, c_mu: f64, c_q: f64) -> String {
    let mut s = String::new();
    if states == minimal_states {
        let _ = writeln!(s, "states = {states}");
    } else {
        let _ = writeln!(s, "states = {states} (minimized to {minimal_states})");
    }
    let _ = writeln!(s, "C_mu = {} bits", fixed6(c_mu));
    let _ = writeln!(s, "C_q = {} qubits", fixed6(c_q));
    s
}

fn angles(bases: &[games::MeasurementBasis<f64>; 2]) -> [f64; 2] {
    bases.map(|b| b.real_plane_angle(1e-12).unwrap_or(b.polar))
}

pub fn chsh(
    strategy: &BipartiteStrategy<f64>,
    outcome: &GameOutcome<f64>,
    search: Option<(bool, usize)>,
    format: Format,
) -> String {
    let (alice, bob) = (angles(&strategy.alice), angles(&strategy.bob));
    let classical = games::classical_chsh_max();
    let classical_success = games::success_from_chsh(f64::from(classical.max)).unwrap_or(f64::NAN);
    let mut s = String::new();
    match format {
        Format::Text => {
            s.push_str("shared state: (|00> + |11>)/sqrt 2\n");
            let _ = writeln!(s, "alice angles: {} {}", fixed6(alice[0]), fixed6(alice[1]));
            let _ = writeln!(s, "bob angles: {} {}", fixed6(bob[0]), fixed6(bob[1]));
            if let Some((converged, sweeps)) = search {
                let _ = writeln!(s, "converged: {} ({sweeps} sweeps)", yes_no(converged));
            }
            s.push_str("inputs  p_same\n");
            for i in 0..2 {
                for j in 0..2 {
                    let _ = writeln!(s, "{i} {j}     {}", fixed6(outcome.same[i][j]));
                }
            }
            let _ = writeln!(s, "C = {}", fixed6(outcome.chsh));
            let _ = writeln!(s, "|C| = {}", fixed6(outcome.chsh.abs()));
            let _ = writeln!(s, "success = {}", fixed6(outcome.success));
            let _ = writeln!(s, "classical max |C| = {}", classical.max);
            let _ = writeln!(s, "classical success = {}", fixed6(classical_success));
        }
        Format::Csv => {
            s.push_str("quantity,value\n");
            for (name, v) in [
                ("alice_angle_0", alice[0]),
                ("alice_angle_1", alice[1]),
                ("bob_angle_0", bob[0]),
                ("bob_angle_1", bob[1]),
            ] {
                let _ = writeln!(s, "{name},{}", sig12(v));
            }
            if let Some((converged, sweeps)) = search {
                let _ = writeln!(s, "converged,{}", u8::from(converged));
                let _ = writeln!(s, "sweeps,{sweeps}");
            }
            for i in 0..2 {
                for j in 0..2 {
                    let _ = writeln!(s, "p_same_{i}{j},{}", sig12(outcome.same[i][j]));
                }
            }
            let _ = writeln!(s, "chsh,{}", sig12(outcome.chsh));
            let _ = writeln!(s, "abs_chsh,{}", sig12(outcome.chsh.abs()));
            let _ = writeln!(s, "success,{}", sig12(outcome.success));
            let _ = writeln!(s, "classical_max_abs_chsh,{}", classical.max);
            let _ = writeln!(s, "classical_success,{}", sig12(classical_success));
        }
    }
    s
}

const INPUTS: [(bool, bool); 4] = [(false, false), (false, true), (true, false), (true, true)];

pub fn ghz(format: Format) -> String {
    let rounds = INPUTS.map(|(a, b)| games::ghz_round::<f64>(a, b));
    let (classical, strategies) = games::classical_ghz_max();
    let basis = |bit: bool| if bit { 'y' } else { 'x' };
    let mut s = String::new();
    match format {
        Format::Text => {
            s.push_str("shared state: (|001> + |110>)/sqrt 2\n");
            s.push_str("input 0 -> x basis, input 1 -> y basis; outcome + -> 0, - -> 1\n");
            s.push_str("a b c  bases");
            for o in 0..8 {
                let _ = write!(s, "  P({o:03b})  ");
            }
            s.push_str("  success\n");
            for r in &rounds {
                let c = r.a ^ r.b;
                let _ = write!(
                    s,
                    "{} {} {}  {}{}{}  ",
                    u8::from(r.a),
                    u8::from(r.b),
                    u8::from(c),
                    basis(r.a),
                    basis(r.b),
                    basis(c)
                );
                for p in r.distribution {
                    let _ = write!(s, "  {}", fixed6(p));
                }
                let _ = writeln!(s, "  {}", fixed6(r.success()));
            }
            let avg = rounds.iter().map(|r| r.success()).sum::<f64>() / 4.0;
            let _ = writeln!(s, "average success = {}", fixed6(avg));
            let _ = writeln!(s, "classical best = {} ({strategies} strategies)", fixed6(classical));
        }
        Format::Csv => {
            s.push_str("a,b,c");
            for o in 0..8 {
                let _ = write!(s, ",p{o:03b}");
            }
            s.push_str(",success\n");
            for r in &rounds {
                let _ = write!(s, "{},{},{}", u8::from(r.a), u8::from(r.b), u8::from(r.a ^ r.b));
                for p in r.distribution {
                    let _ = write!(s, ",{}", sig12(p));
                }
                let _ = writeln!(s, ",{}", sig12(r.success()));
            }
        }
    }
    s
}
