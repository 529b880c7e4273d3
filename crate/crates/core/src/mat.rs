//! Small dense rational matrices, row-major, used for Cartan/Gram data.
//!
//! Everything here is exact; sizes never exceed the rank of the ambient
//! root system (at most 8), so naive Gauss-Jordan is plenty.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::Rat;

/// Multiply two `n x n` row-major matrices.
pub fn mul(a: &[Rat], b: &[Rat], n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

/// Apply an `n x n` matrix to a column vector.
pub fn apply(a: &[Rat], v: &[Rat], n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n];
    for i in 0..n {
        for j in 0..n {
            out[i] += a[i * n + j] * v[j];
        }
    }
    out
}

/// Transpose an `n x n` row-major matrix.
pub fn transpose(a: &[Rat], n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            out[j * n + i] = a[i * n + j];
        }
    }
    out
}

/// Exact inverse by Gauss-Jordan. Returns `None` for singular input.
pub fn inverse(a: &[Rat], n: usize) -> Option<Vec<Rat>> {
    let mut m = a.to_vec();
    let mut inv = vec![Rat::zero(); n * n];
    for i in 0..n {
        inv[i * n + i] = Rat::one();
    }
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r * n + col].is_zero())?;
        if pivot != col {
            for j in 0..n {
                m.swap(col * n + j, pivot * n + j);
                inv.swap(col * n + j, pivot * n + j);
            }
        }
        let p = m[col * n + col];
        for j in 0..n {
            m[col * n + j] /= p;
            inv[col * n + j] /= p;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = m[r * n + col];
            if factor.is_zero() {
                continue;
            }
            for j in 0..n {
                let mc = m[col * n + j];
                let ic = inv[col * n + j];
                m[r * n + j] -= factor * mc;
                inv[r * n + j] -= factor * ic;
            }
        }
    }
    Some(inv)
}

/// Largest nonnegative integer `k` with `k^2 <= x`; `x` must be nonnegative.
pub fn floor_sqrt(x: Rat) -> i64 {
    assert!(x >= Rat::zero());
    let mut k: i64 = 0;
    // Crude upper bound first, then binary search.
    let mut hi: i64 = 1;
    while Rat::from_integer(hi) * Rat::from_integer(hi) <= x {
        hi *= 2;
    }
    let mut lo = 0;
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        if Rat::from_integer(mid) * Rat::from_integer(mid) <= x {
            k = mid;
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    k
}
