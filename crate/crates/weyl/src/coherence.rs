//! Right-hand side of the coherence conjecture: section counts on Grassmannians.

use num::{BigUint, One};

use crate::error::{Result, WeylError};

/// h(k) = ∏_{i ≤ s, j ≤ n−s} (2k + i + j − 1) / (i + j − 1): dimension of the degree-2k part of
/// the homogeneous coordinate ring of Gr(s, n) in its Plücker embedding.
pub fn coherence_rhs(n: usize, s: usize, k: u64) -> Result<BigUint> {
    if s == 0 || s >= n {
        return Err(WeylError::Invalid(format!("need 1 <= s <= n-1, got s = {s}, n = {n}")));
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=s as u64 {
        for j in 1..=(n - s) as u64 {
            num *= 2 * k + i + j - 1;
            den *= i + j - 1;
        }
    }
    Ok(num / den)
}
