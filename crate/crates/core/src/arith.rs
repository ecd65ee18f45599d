//! Integer helpers shared by the other modules: gcd, Bézout, CRT,
//! trial-division factorization and primality.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b)`.
///
/// The coefficients are the ones produced by the plain extended Euclidean
/// algorithm, which for `a, b > 1` satisfy `|s| <= b/(2g)` and `|t| <= a/(2g)`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Bézout pair `(a, b)` with `a*m + b*n = 1`, using the minimal-|a| normalization
/// (`|a| <= n/2`).
pub fn bezout(m: u64, n: u64) -> Result<(i128, i128)> {
    let (g, mut a, mut b) = ext_gcd(m as i128, n as i128);
    if g != 1 {
        return Err(Error::NotCoprime(m, n));
    }
    let (m, n) = (m as i128, n as i128);
    // shift along the solution line a + t*n, b - t*m
    if n > 0 {
        let t = (a + n / 2).div_euclid(n);
        a -= t * n;
        b += t * m;
        if 2 * a.abs() > n {
            if a > 0 {
                a -= n;
                b += m;
            } else {
                a += n;
                b -= m;
            }
        }
    }
    debug_assert_eq!(a * m + b * n, 1);
    Ok((a, b))
}

pub fn mod_inverse(a: u64, modulus: u64) -> Option<u64> {
    let (g, s, _) = ext_gcd(a as i128, modulus as i128);
    (g == 1).then(|| s.rem_euclid(modulus as i128) as u64)
}

/// Chinese remainder recombination of `(residue, modulus)` pairs with pairwise
/// coprime moduli. Returns `(x, product)` with `0 <= x < product`.
pub fn crt(pairs: &[(i128, u64)]) -> Result<(u64, u64)> {
    let mut acc: u128 = 0;
    let mut modulus: u64 = 1;
    for &(r, m) in pairs {
        if m == 0 {
            return Err(Error::Precondition("CRT modulus must be positive".into()));
        }
        if gcd(modulus, m) != 1 {
            return Err(Error::NotCoprime(modulus, m));
        }
        let r = r.rem_euclid(m as i128) as u128;
        let prod = modulus as u128 * m as u128;
        if prod > u64::MAX as u128 {
            return Err(Error::Precondition("CRT modulus overflows 64 bits".into()));
        }
        // acc + modulus * t ≡ r (mod m)
        let inv = mod_inverse(modulus % m, m).unwrap_or(0) as u128;
        let diff = (r + m as u128 - acc % m as u128) % m as u128;
        let t = diff * inv % m as u128;
        acc += modulus as u128 * t;
        modulus = prod as u64;
    }
    Ok((acc as u64 % modulus.max(1), modulus))
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic trial division; adequate for the N ≤ 10¹⁰ range used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = 7u64;
    let steps = [4u64, 2, 4, 2, 4, 6, 2, 6];
    let mut i = 0;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += steps[i];
        i = (i + 1) % steps.len();
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        push(d, &mut n);
        push(d + 2, &mut n);
        d += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// `Some((p, e))` when `n = p^e` with `e >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}
