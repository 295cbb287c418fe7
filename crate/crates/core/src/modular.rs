//! Arithmetic modulo a word-sized prime.

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        let p = 1_000_000_007;
        for a in [1, 2, 3, 12345, p - 1] {
            assert_eq!(mul_mod(a, inv_mod(a, p), p), 1);
        }
    }
}
