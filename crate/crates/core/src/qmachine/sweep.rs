use std::fmt::Write;

use super::{causal_statistical_complexity_with, quantum_complexity_with, Topology};
use crate::error::{Error, Result};
use crate::numerics::Scalar;
use crate::process::ProcessFamily;

/// One grid point of a complexity sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow<T> {
    pub p: T,
    /// Bits, on the minimized machine.
    pub c_mu: T,
    /// Qubits, on the minimized machine.
    pub c_q: T,
    /// `(C_mu, C_q)` on the unminimized family machine, when requested.
    pub raw: Option<(T, T)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable<T> {
    pub family: ProcessFamily,
    pub rows: Vec<SweepRow<T>>,
}

/// `n` evenly spaced points on `[0, 1]`, endpoints included.
pub fn uniform_grid<T: Scalar>(n: usize) -> Result<Vec<T>> {
    if n < 2 {
        return Err(Error::domain(format!("grid needs at least 2 points, got {n}")));
    }
    let last = T::from_usize(n - 1).expect("small count");
    Ok((0..n).map(|i| T::from_usize(i).expect("small count") / last).collect())
}

/// `C_mu` and `C_q` for `family` at each grid value, on minimized machines.
pub fn complexity_sweep<T: Scalar>(family: ProcessFamily, grid: &[T]) -> Result<SweepTable<T>> {
    complexity_sweep_with(family, grid, false)
}

/// As [`complexity_sweep`]; with `raw_topology` each row also carries the
/// values for the unminimized five-state machine.
pub fn complexity_sweep_with<T: Scalar>(
    family: ProcessFamily,
    grid: &[T],
    raw_topology: bool,
) -> Result<SweepTable<T>> {
    let mut ps = grid.to_vec();
    ps.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    let rows = ps
        .into_iter()
        .map(|p| {
            let m = family.build(p)?;
            let raw = if raw_topology {
                Some((
                    causal_statistical_complexity_with(&m, Topology::Raw)?,
                    quantum_complexity_with(&m, Topology::Raw)?,
                ))
            } else {
                None
            };
            Ok(SweepRow {
                p,
                c_mu: causal_statistical_complexity_with(&m, Topology::Minimized)?,
                c_q: quantum_complexity_with(&m, Topology::Minimized)?,
                raw,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable { family, rows })
}

impl<T: Scalar> SweepTable<T> {
    /// Rows where `C_q` falls below `C_mu` by more than `tol`.
    pub fn gaps(&self, tol: T) -> impl Iterator<Item = &SweepRow<T>> {
        self.rows.iter().filter(move |r| r.c_mu - r.c_q > tol)
    }

    /// CSV with header `p,c_mu_bits,c_q_qubits` (plus raw-topology columns
    /// when present), 12 significant digits.
    pub fn to_csv(&self) -> String {
        let raw = self.rows.iter().any(|r| r.raw.is_some());
        let mut out = String::from("p,c_mu_bits,c_q_qubits");
        if raw {
            out.push_str(",c_mu_raw_bits,c_q_raw_qubits");
        }
        out.push('\n');
        for r in &self.rows {
            let _ = write!(
                out,
                "{},{},{}",
                format_significant(r.p.as_f64(), 12),
                format_significant(r.c_mu.as_f64(), 12),
                format_significant(r.c_q.as_f64(), 12)
            );
            if let Some((a, b)) = r.raw {
                let _ = write!(
                    out,
                    ",{},{}",
                    format_significant(a.as_f64(), 12),
                    format_significant(b.as_f64(), 12)
                );
            }
            out.push('\n');
        }
        out
    }
}

/// Fixed-point rendering with `digits` significant digits; zero is `0`.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // Rounding can carry into a new leading digit (9.99.. -> 10.0..).
    let sig = s.chars().filter(char::is_ascii_digit).skip_while(|&c| c == '0').count();
    if sig > digits && decimals > 0 {
        format!("{x:.prec$}", prec = decimals - 1)
    } else {
        s
    }
}
