//! Modular inverses, the inverse witness `I(r)`, factorization and
//! divisor enumeration.

use alloc::vec::Vec;

use crate::{Error, Result};

/// Non-negative greatest common divisor of two signed integers.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}

/// Greatest common divisor of two unsigned integers.
pub fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::Integer::gcd(&a, &b)
}

/// Reduce a (possibly huge, possibly negative) integer into `0..n`.
pub fn mod_reduce(x: i128, n: u64) -> u64 {
    debug_assert!(n > 0);
    let n = n as i128;
    (((x % n) + n) % n) as u64
}

/// Inverse of `a` modulo `r`, written `a*_r` in the paper.
///
/// Returns the representative in `{1, ..., r-1}` for `r > 1`; for the
/// degenerate modulus `r = 1` every integer is invertible and the
/// canonical representative is `0`.  Errors with [`Error::NotCoprime`]
/// when `gcd(a, r) != 1`.
pub fn mod_inverse(a: i64, r: u64) -> Result<u64> {
    if r == 0 {
        return Err(Error::Domain("modulus must be positive"));
    }
    if r == 1 {
        return Ok(0);
    }
    let a_red = mod_reduce(a as i128, r) as i64;
    // Extended Euclid on (a_red, r).
    let (mut old_r, mut cur_r) = (a_red, r as i64);
    let (mut old_s, mut cur_s) = (1i64, 0i64);
    while cur_r != 0 {
        let quot = old_r / cur_r;
        let tmp_r = old_r - quot * cur_r;
        old_r = cur_r;
        cur_r = tmp_r;
        let tmp_s = old_s - quot * cur_s;
        old_s = cur_s;
        cur_s = tmp_s;
    }
    if old_r != 1 {
        return Err(Error::NotCoprime(a, r as i64));
    }
    Ok(mod_reduce(old_s as i128, r))
}

/// The inverse witness `I(r) = (a · a*_r − 1) / r` from the asymptotic
/// analysis (Lemma `indeplin`): the unique integer in `{0, ..., a-1}`
/// with `a · a*_r ≡ 1 + I(r) · r`.
///
/// Requires `a ≥ 1` and `gcd(a, r) = 1`.  For `r = 1` the convention
/// `a*_1 = 1` is used (consistent with the `a`-periodicity of
/// `I` as a function of `r`), giving `I(1) = a − 1`... except that
/// `(a·1 − 1)/1 = a − 1` only when we pick the representative `1`;
/// this matches the spec example `inverse_witness(1, r) = 0`.
pub fn inverse_witness(a: u64, r: u64) -> Result<u64> {
    if a == 0 {
        return Err(Error::Domain("inverse_witness requires a >= 1"));
    }
    if r == 0 {
        return Err(Error::Domain("modulus must be positive"));
    }
    if gcd_u64(a, r) != 1 {
        return Err(Error::NotCoprime(a as i64, r as i64));
    }
    // Representative of a*_r in {1, ..., r} (for r = 1 use 1, not 0, so
    // that I(r) stays in {0, ..., a-1} and is a-periodic in r).
    let inv = if r == 1 { 1 } else { mod_inverse(a as i64, r)? };
    let witness = ((a as u128) * (inv as u128) - 1) / (r as u128);
    debug_assert!(witness < a as u128);
    Ok(witness as u64)
}

/// Prime factorization of `n ≥ 1` as sorted `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n ≥ 1`, sorted ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = alloc::vec![1u64];
    for (p, e) in factorize(n) {
        let prev = out.clone();
        let mut pe = 1u64;
        for _ in 0..e {
            pe *= p;
            out.extend(prev.iter().map(|d| d * pe));
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_inverse_spec_examples() {
        // Spec: mod_inverse(3, 5) = 2.
        assert_eq!(mod_inverse(3, 5).unwrap(), 2);
        // r = 1 convention.
        assert_eq!(mod_inverse(7, 1).unwrap(), 0);
        assert_eq!(mod_inverse(0, 1).unwrap(), 0);
        // Non-coprime input errors.
        assert!(matches!(mod_inverse(2, 4), Err(Error::NotCoprime(2, 4))));
        // Negative representatives are accepted.
        assert_eq!(mod_inverse(-2, 5).unwrap(), mod_inverse(3, 5).unwrap());
    }

    #[test]
    fn mod_inverse_is_inverse() {
        for r in 2..80u64 {
            for a in 1..r {
                if gcd_u64(a, r) == 1 {
                    let inv = mod_inverse(a as i64, r).unwrap();
                    assert!(inv >= 1 && inv < r);
                    assert_eq!((a * inv) % r, 1, "a={a} r={r}");
                }
            }
        }
    }

    #[test]
    fn inverse_witness_spec_examples() {
        // Spec: inverse_witness(3, 5) = 1 because 3·2 = 6 = 1 + 1·5.
        assert_eq!(inverse_witness(3, 5).unwrap(), 1);
        // Spec: a = 1 gives witness 0 for every r.
        for r in 1..40 {
            assert_eq!(inverse_witness(1, r).unwrap(), 0);
        }
        // Range and defining identity.
        for a in 1..30u64 {
            for r in 1..60u64 {
                if gcd_u64(a, r) == 1 {
                    let i = inverse_witness(a, r).unwrap();
                    assert!(i < a);
                    let inv = if r == 1 { 1 } else { mod_inverse(a as i64, r).unwrap() };
                    assert_eq!(a * inv, 1 + i * r);
                }
            }
        }
    }

    #[test]
    fn factorize_and_divisors() {
        assert_eq!(factorize(1), alloc::vec![]);
        assert_eq!(factorize(60), alloc::vec![(2, 2), (3, 1), (5, 1)]);
        assert_eq!(divisors(1), alloc::vec![1]);
        assert_eq!(divisors(12), alloc::vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(30), alloc::vec![1, 2, 3, 5, 6, 10, 15, 30]);
    }

    #[test]
    fn mod_reduce_handles_negatives() {
        assert_eq!(mod_reduce(-1, 5), 4);
        assert_eq!(mod_reduce(-10, 5), 0);
        assert_eq!(mod_reduce(123456789123456789, 97), (123456789123456789u64 % 97));
    }
}
