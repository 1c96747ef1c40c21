//! Exact number-theory helpers: gcd/lcm, modular powers, multiplicative
//! orders and trial-division factorization.
//!
//! Everything here works on `u64` values with `u128` intermediates. Inputs
//! that would need factoring past the trial-division bound are rejected with
//! [`ArithError::FactorBoundExceeded`] instead of being guessed.

use thiserror::Error;

/// Default largest trial divisor; enough to factor anything below 2^40.
pub const DEFAULT_TRIAL_DIVISION_BOUND: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("trial division bound {bound} exceeded while factoring {value}")]
    FactorBoundExceeded { value: u64, bound: u64 },
    #[error("{base} is not a unit modulo {modulus}")]
    NotCoprime { base: u64, modulus: u64 },
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple, `None` on overflow. `lcm(0, x) = 0`.
pub fn lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    acc
}

/// Prime factorization by trial division, sorted by prime.
pub fn factorize(mut n: u64, bound: u64) -> Result<Vec<(u64, u32)>, ArithError> {
    let original = n;
    let mut out = Vec::new();
    if n < 2 {
        return Ok(out);
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if p > bound {
            return Err(ArithError::FactorBoundExceeded { value: original, bound });
        }
        if n % p == 0 {
            let mut e = 0;
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
    Ok(out)
}

/// All positive divisors of `n >= 1`, ascending.
pub fn divisors(n: u64, bound: u64) -> Result<Vec<u64>, ArithError> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n, bound)? {
        let current = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(current.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

pub fn euler_phi(n: u64, bound: u64) -> Result<u64, ArithError> {
    let mut phi = n;
    for (p, _) in factorize(n, bound)? {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// Multiplicative order of `base` modulo `modulus`; the order modulo 1 is 1.
pub fn multiplicative_order(base: u64, modulus: u64, bound: u64) -> Result<u64, ArithError> {
    if modulus == 0 {
        return Err(ArithError::ZeroModulus);
    }
    if modulus == 1 {
        return Ok(1);
    }
    if gcd(base % modulus, modulus) != 1 {
        return Err(ArithError::NotCoprime { base, modulus });
    }
    let mut order = euler_phi(modulus, bound)?;
    for (p, _) in factorize(order, bound)? {
        while order % p == 0 && pow_mod(base, order / p, modulus) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

/// True for `q = p^k` with `p` prime and `k >= 1`.
pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    match factorize(q, u64::MAX) {
        Ok(f) => f.len() == 1,
        Err(_) => false,
    }
}

/// `2^d + 1` (for `plus_one`) or `2^d - 1`, for `1 <= d <= 63`.
pub fn two_pow_pm_one(d: u32, plus_one: bool) -> Option<u64> {
    if d == 0 || d > 63 {
        return None;
    }
    let p = 1u64 << d;
    Some(if plus_one { p + 1 } else { p - 1 })
}
