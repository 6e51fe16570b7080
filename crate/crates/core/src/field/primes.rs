//! Primality testing, factorization and prime search by trial division.
//!
//! Everything here runs at desk scale (arguments up to a few million), so
//! deterministic trial division is both simplest and fast enough.

/// Returns true iff `n` is prime, by trial division up to `sqrt(n)`.
pub fn is_prime(n: u64) -> bool {
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
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Distinct prime factors of `n`, ascending. Empty for `n <= 1`.
pub fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime in the interval `[m, 2m]`.
///
/// Bertrand's postulate guarantees one exists for every `m >= 1`, so this
/// resolves the "choose an arbitrary prime in the interval" step
/// deterministically.
pub fn bertrand_prime(m: u64) -> u64 {
    assert!(m >= 1, "bertrand_prime requires m >= 1");
    (m.max(2)..=2 * m)
        .find(|&n| is_prime(n))
        .expect("Bertrand's postulate: a prime always exists in [m, 2m]")
}
