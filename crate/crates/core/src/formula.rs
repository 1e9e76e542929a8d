//! Closed-form connectivity values for Johnson graphs.

use serde::{Deserialize, Serialize};

/// Closed-form super-connectivity of `J(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KappaPrimeFormula {
    Finite(u64),
    Infinite,
    /// The `k = 3, n = 5` cell: the piecewise formula gives `3(k-1) = 6`,
    /// but `J(5,3)` is isomorphic to `J(5,2)`, which has no super
    /// vertex-cut. Computation must decide; the stated value is recorded
    /// for the discrepancy note.
    Ambiguous { stated: u64 },
}

/// Vertex connectivity `kappa(J(n, k)) = k (n - k)` for `n >= k + 1`; this
/// covers the complete graphs `J(n, 1)` and `J(n, n-1)` as well.
pub fn kappa_johnson(n: u32, k: u32) -> Option<u64> {
    (k >= 1 && n > k).then(|| k as u64 * (n - k) as u64)
}

/// Piecewise super-connectivity of `J(n, k)` for `n >= k >= 1`:
/// `3(n-3)` for `k = 2, n >= 6`; `3(k-1)` for `k >= 3, n = k+2`;
/// `(2k-1)(n-k) - k` for `k >= 3, n >= k+3`; `+infinity` otherwise.
pub fn kappa_prime_johnson(n: u32, k: u32) -> KappaPrimeFormula {
    use KappaPrimeFormula::*;
    if k == 2 && n >= 6 {
        Finite(3 * (n as u64 - 3))
    } else if k >= 3 && n == k + 2 {
        if k == 3 {
            Ambiguous {
                stated: 3 * (k as u64 - 1),
            }
        } else {
            Finite(3 * (k as u64 - 1))
        }
    } else if k >= 3 && n >= k + 3 {
        Finite((2 * k as u64 - 1) * (n - k) as u64 - k as u64)
    } else {
        Infinite
    }
}
