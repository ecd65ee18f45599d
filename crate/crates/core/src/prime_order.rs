//! Minimal monomial sizes over a prime field from eigenvalue orders.
//!
//! `M(k)` has characteristic polynomial `λ² − kλ + 1`. With `D = k² − 4`:
//!
//! * `D = 0` (k = ±2): `M(k)` is ±(unipotent), size `p`.
//! * otherwise `λ = (k + θ)/2` in `F_p[θ]/(θ² − D)`. When `D` is a square that
//!   ring is `F_p × F_p` and `λ^(p−1) = 1`; when it is not, it is `F_{p²}` and
//!   `λ` has norm 1, so `λ^(p+1) = 1`. The order `o` of `λ` is found by removing
//!   prime factors from that exponent. `M(k)ⁿ = ±Id` iff `λⁿ = ±1`, so the size
//!   is `o/2` with sign −1 when `o` is even and `o` with sign +1 otherwise.

use crate::arith::{factorize, is_prime, mod_inverse, mul_mod, pow_mod};
use crate::error::{Error, Result};
use crate::modring::{ResidueRing, Sign};
use crate::monomial::{minimal_size, MinimalSize};

/// Precomputed data for repeated size queries modulo one prime.
#[derive(Debug, Clone)]
pub struct PrimeOrder {
    p: u64,
    half: u64,
    split_factors: Vec<(u64, u32)>,
    inert_factors: Vec<(u64, u32)>,
}

/// `u + v·θ` with `θ² = D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct QuadElem {
    u: u64,
    v: u64,
}

impl PrimeOrder {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let half = if p == 2 { 0 } else { mod_inverse(2, p).expect("p is odd") };
        Ok(PrimeOrder {
            p,
            half,
            split_factors: factorize(p - 1),
            inert_factors: factorize(p + 1),
        })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn minimal_size(&self, k: u64) -> MinimalSize {
        let p = self.p;
        if p == 2 {
            return minimal_size(&ResidueRing::new(2).expect("2 >= 2"), k);
        }
        let k = k % p;
        let disc = (mul_mod(k, k, p) + p - 4 % p) % p;
        if disc == 0 {
            let sign = if k == 2 { Sign::Plus } else { Sign::Minus };
            return MinimalSize { size: p, sign };
        }
        let split = pow_mod(disc, (p - 1) / 2, p) == 1;
        let (group_order, factors) = if split {
            (p - 1, &self.split_factors)
        } else {
            (p + 1, &self.inert_factors)
        };
        let lambda = QuadElem {
            u: mul_mod(k, self.half, p),
            v: self.half,
        };
        let one = QuadElem { u: 1, v: 0 };
        let mut order = group_order;
        for &(q, e) in factors {
            for _ in 0..e {
                if self.pow(lambda, order / q, disc) == one {
                    order /= q;
                } else {
                    break;
                }
            }
        }
        debug_assert_eq!(self.pow(lambda, order, disc), one);
        if order % 2 == 0 {
            MinimalSize {
                size: order / 2,
                sign: Sign::Minus,
            }
        } else {
            MinimalSize {
                size: order,
                sign: Sign::Plus,
            }
        }
    }

    fn mul(&self, x: QuadElem, y: QuadElem, disc: u64) -> QuadElem {
        let p = self.p;
        let vv = mul_mod(mul_mod(x.v, y.v, p), disc, p);
        QuadElem {
            u: (mul_mod(x.u, y.u, p) + vv) % p,
            v: (mul_mod(x.u, y.v, p) + mul_mod(x.v, y.u, p)) % p,
        }
    }

    fn pow(&self, mut base: QuadElem, mut exp: u64, disc: u64) -> QuadElem {
        let mut acc = QuadElem { u: 1, v: 0 };
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base, disc);
            }
            base = self.mul(base, base, disc);
            exp >>= 1;
        }
        acc
    }
}
