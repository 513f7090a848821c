//! Small integer number-theory helpers. Everything here is trial-division
//! scale: field orders are capped well below 2^62, so nothing fancier is
//! warranted.

/// Deterministic primality by trial division.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Distinct prime factors of n, ascending.
pub(crate) fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// base^exp mod modulus, widened through u128 so any modulus < 2^64 is safe.
pub(crate) fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    debug_assert!(modulus > 1);
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = (base as u128) % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of a modulo prime p (a not divisible by p).
pub(crate) fn order_mod_prime(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    let group = p - 1;
    let mut order = group;
    for q in distinct_prime_factors(group) {
        while order % q == 0 && mod_pow(a, order / q, p) == 1 {
            order /= q;
        }
    }
    order
}
