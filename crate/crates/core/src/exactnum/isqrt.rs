//! Integer square roots on unbounded integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `⌊√n⌋` by Newton iteration, for `n ≥ 0`.
///
/// Starts from a power of two that is at least `√n`, so the iterates
/// decrease monotonically and the first non-decreasing step is the floor.
pub fn isqrt_floor(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative integer");
    if n.is_zero() {
        return BigInt::zero();
    }
    let bits = n.bits();
    let mut x = BigInt::one() << bits.div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// `⌈√n⌉` for `n ≥ 0`.
pub fn isqrt_ceil(n: &BigInt) -> BigInt {
    let r = isqrt_floor(n);
    if &(&r * &r) == n {
        r
    } else {
        r + 1
    }
}
