//! Integer number theory used by the field constructions: primality,
//! trial-division factoring, Euler's totient and multiplicative orders.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Trial-division bound used when factoring group orders.
pub const TRIAL_DIVISION_BOUND: u64 = 1 << 22;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in ascending order.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors of a big integer, by trial division up to
/// [`TRIAL_DIVISION_BOUND`]. Returns `TooLarge` when the remaining cofactor
/// cannot be certified prime by that bound.
pub fn prime_divisors_big(n: &BigUint) -> Result<Vec<BigUint>> {
    let mut n = n.clone();
    let mut out = Vec::new();
    if n.is_zero() {
        return Ok(out);
    }
    let mut d: u64 = 2;
    while d <= TRIAL_DIVISION_BOUND {
        let bd = BigUint::from(d);
        if &bd * &bd > n {
            break;
        }
        if (&n % &bd).is_zero() {
            out.push(bd.clone());
            while (&n % &bd).is_zero() {
                n /= &bd;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigUint::one() {
        let bound = BigUint::from(d);
        if &bound * &bound <= n {
            return Err(Error::TooLarge {
                size: format!("cofactor {n}"),
                cap: TRIAL_DIVISION_BOUND,
            });
        }
        out.push(n);
    }
    Ok(out)
}

pub fn euler_phi(n: u64) -> u64 {
    factor_u64(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc: u128 = 1;
    let mut b = (base % m) as u128;
    let m128 = m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Least `m >= 1` with `q^m ≡ 1 (mod n)`.
pub fn integer_order_mod(q: u64, n: u64) -> Result<u64> {
    if n == 0 || gcd(q, n) != 1 {
        return Err(Error::NotCoprime { a: q, b: n });
    }
    if n == 1 {
        return Ok(1);
    }
    let mut order = euler_phi(n);
    for (p, _) in factor_u64(order) {
        while order % p == 0 && pow_mod(q, order / p, n) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

/// Splits a prime power `q = p^k` into `(p, k)`.
pub fn prime_power(q: u64) -> Result<(u64, usize)> {
    let f = factor_u64(q);
    match f.as_slice() {
        [(p, k)] => Ok((*p, *k as usize)),
        _ => Err(Error::BadInput(format!("{q} is not a prime power"))),
    }
}

pub fn big_pow(base: u64, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

/// Converts to `u64` when it fits.
pub fn big_to_u64(n: &BigUint) -> Option<u64> {
    n.to_u64()
}
