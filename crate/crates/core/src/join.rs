//! The join family K_k + complement(K_{n-k}): closed-form index values,
//! the argmax-k table, and the continuous relaxation of the objective.
//!
//! All argmax decisions use exact integer comparison; floating point is
//! confined to the continuous relaxation, whose role is locating the real
//! maximizer, not ranking integer candidates.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::csz::CszValue;
use crate::graph::MAX_ORDER;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum JoinFamilyError {
    #[error("clique part size {k} invalid for order {n} (need 1 <= k <= n-2)")]
    CliquePartOutOfRange { n: usize, k: usize },
    #[error("order {n} out of supported range {lo}..={hi}")]
    OrderOutOfRange { n: usize, lo: usize, hi: usize },
    #[error("derivative sign assumptions violated at y={y}: d/dx at {x} should be {expected}")]
    DerivativeSign { y: f64, x: f64, expected: &'static str },
}

/// Index of the join graph in closed form: `k(n-k)((n-1)^2 - k^2)`.
/// Equals the definitional evaluation on the constructed graph.
pub fn csz_join(n: usize, k: usize) -> Result<CszValue, JoinFamilyError> {
    if !(3..=MAX_ORDER).contains(&n) {
        return Err(JoinFamilyError::OrderOutOfRange { n, lo: 3, hi: MAX_ORDER });
    }
    if k < 1 || k > n - 2 {
        return Err(JoinFamilyError::CliquePartOutOfRange { n, k });
    }
    let (n, k) = (n as u64, k as u64);
    Ok(CszValue(k * (n - k) * ((n - 1) * (n - 1) - k * k)))
}

/// One row of the argmax table: all clique part sizes attaining the
/// maximum index over the join family at a given order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTableRow {
    pub n: usize,
    pub best_k: Vec<usize>,
    pub best_value: CszValue,
}

impl KTableRow {
    pub fn is_tie(&self) -> bool {
        self.best_k.len() > 1
    }
}

/// Scans every k in [1, n-2] with exact arithmetic and returns all
/// maximizers in increasing order.
pub fn optimal_k(n: usize) -> Result<KTableRow, JoinFamilyError> {
    if !(3..=MAX_ORDER).contains(&n) {
        return Err(JoinFamilyError::OrderOutOfRange { n, lo: 3, hi: MAX_ORDER });
    }
    let mut best_k = vec![1usize];
    let mut best = csz_join(n, 1).expect("k=1 valid");
    for k in 2..=(n - 2) {
        let val = csz_join(n, k).expect("k in range");
        if val > best {
            best = val;
            best_k.clear();
            best_k.push(k);
        } else if val == best {
            best_k.push(k);
        }
    }
    Ok(KTableRow { n, best_k, best_value: best })
}

/// Argmax rows for every order in [n_min, n_max].
pub fn k_table(n_min: usize, n_max: usize) -> Result<Vec<KTableRow>, JoinFamilyError> {
    if n_min < 5 || n_min > n_max {
        return Err(JoinFamilyError::OrderOutOfRange { n: n_min, lo: 5, hi: n_max });
    }
    if n_max > MAX_ORDER {
        return Err(JoinFamilyError::OrderOutOfRange { n: n_max, lo: 5, hi: MAX_ORDER });
    }
    (n_min..=n_max).map(optimal_k).collect()
}

/// Continuous relaxation of the join objective: `f(x, y) = x(y-x)((y-1)^2 - x^2)`
/// with `x` playing the clique part size and `y` the order.
pub fn f_cont(x: f64, y: f64) -> f64 {
    x * (y - x) * ((y - 1.0) * (y - 1.0) - x * x)
}

/// Partial derivative of the relaxation in x:
/// `4x^3 - 3yx^2 - 2(y-1)^2 x + y(y-1)^2`.
pub fn df_dx(x: f64, y: f64) -> f64 {
    let w = (y - 1.0) * (y - 1.0);
    4.0 * x * x * x - 3.0 * y * x * x - 2.0 * w * x + y * w
}

/// Interval of width at most `1e-9 * y` containing the stationary point of
/// the relaxation on [1, y-2].
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
}

impl RootBracket {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

/// Bisects the derivative over [1, y-2] down to width `1e-9 * y`.
///
/// Requires y >= 11; the derivative must be positive at the left end and
/// negative at the right end, otherwise the sign structure claimed for the
/// relaxation is broken and an error reports it.
pub fn bracket_continuous_max(y: f64) -> Result<RootBracket, JoinFamilyError> {
    if y.is_nan() || y < 11.0 {
        return Err(JoinFamilyError::OrderOutOfRange { n: y as usize, lo: 11, hi: MAX_ORDER });
    }
    let mut lo = 1.0;
    let mut hi = y - 2.0;
    if df_dx(lo, y) <= 0.0 {
        return Err(JoinFamilyError::DerivativeSign { y, x: lo, expected: "positive" });
    }
    if df_dx(hi, y) >= 0.0 {
        return Err(JoinFamilyError::DerivativeSign { y, x: hi, expected: "negative" });
    }
    let width = 1e-9 * y;
    while hi - lo > width {
        let mid = 0.5 * (lo + hi);
        if df_dx(mid, y) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RootBracket { lo, hi })
}

/// Formats a row for the CSV surface: ties joined with semicolons.
pub fn row_to_csv(row: &KTableRow) -> String {
    let ks: Vec<String> = row.best_k.iter().map(|k| k.to_string()).collect();
    format!("{},{},{}", row.n, ks.join(";"), row.best_value)
}
