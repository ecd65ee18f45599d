//! Explicit reducible monomial solutions together with their reducing tuples.
//!
//! Every constructor checks its own output by direct multiplication before
//! returning it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{bezout, factorize, gcd, is_prime};
use crate::error::{Error, Result};
use crate::modring::{ResidueRing, Sign};
use crate::monomial::{find_reduction, minimal_size, MinimalSize, ReductionWitness};
use crate::solutions::{solution_sign, ModTuple};

pub use crate::arith::crt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessSource {
    Prop36,
    Prop51,
    Lemma41,
    Prop34,
}

impl fmt::Display for WitnessSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessSource::Prop36 => "prop36",
            WitnessSource::Prop51 => "prop51",
            WitnessSource::Lemma41 => "lemma41",
            WitnessSource::Prop34 => "prop34",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructedWitness {
    #[serde(rename = "N")]
    pub modulus: u64,
    pub k: u64,
    pub size: u64,
    pub size_sign: Sign,
    pub reducer: ModTuple,
    pub reducer_sign: Sign,
    pub source: WitnessSource,
}

impl ConstructedWitness {
    /// The reducing value `x` (first and last entry of the reducer).
    pub fn x(&self) -> u64 {
        self.reducer.entries()[0]
    }

    pub fn reducer_len(&self) -> usize {
        self.reducer.len()
    }

    /// Recompute size, sign and the reducer's product; fail on any mismatch.
    pub fn verify(&self) -> Result<()> {
        let ring = self.reducer.ring();
        let actual = minimal_size(&ring, self.k);
        let claimed = MinimalSize {
            size: self.size,
            sign: self.size_sign,
        };
        if actual != claimed {
            return Err(Error::WitnessRejected(format!(
                "N={} k={}: claimed size {}{} but found {}{}",
                self.modulus, self.k, claimed.size, claimed.sign, actual.size, actual.sign
            )));
        }
        let len = self.reducer.len() as u64;
        if len < 3 || len >= self.size {
            return Err(Error::WitnessRejected(format!(
                "reducer length {len} outside [3, {}]",
                self.size - 1
            )));
        }
        match solution_sign(&self.reducer) {
            Some(s) if s == self.reducer_sign => Ok(()),
            Some(s) => Err(Error::WitnessRejected(format!(
                "reducer evaluates to {s}Id, expected {}Id",
                self.reducer_sign
            ))),
            None => Err(Error::WitnessRejected("reducer is not a solution".into())),
        }
    }
}

fn precondition(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(msg()))
    }
}

fn checked_modulus(n: u64, m: u64) -> Result<ResidueRing> {
    let nm = n
        .checked_mul(m)
        .ok_or_else(|| Error::Precondition(format!("{n}*{m} overflows")))?;
    ResidueRing::new(nm)
}

#[allow(clippy::too_many_arguments)]
fn finish(
    ring: ResidueRing,
    k: u64,
    size: u64,
    size_sign: Sign,
    x: u64,
    len: u64,
    reducer_sign: Sign,
    source: WitnessSource,
) -> Result<ConstructedWitness> {
    let len = usize::try_from(len)
        .map_err(|_| Error::Precondition(format!("reducer length {len} too large")))?;
    let w = ConstructedWitness {
        modulus: ring.modulus(),
        k,
        size,
        size_sign,
        reducer: ModTuple::bordered(ring, x, k, len)?,
        reducer_sign,
        source,
    };
    w.verify()?;
    Ok(w)
}

/// `k ≡ 1 (mod n)`, `k ≡ 2 (mod m)` over `N = nm`, for `m > 1` odd and prime to 3.
pub fn witness_prop36(n: u64, m: u64) -> Result<ConstructedWitness> {
    precondition(n >= 2, || format!("n must be at least 2, got {n}"))?;
    precondition(m > 1 && m % 2 == 1 && m % 3 != 0, || {
        format!("m must be odd, greater than 1 and not divisible by 3, got {m}")
    })?;
    if gcd(n, m) != 1 {
        return Err(Error::NotCoprime(n, m));
    }
    let ring = checked_modulus(n, m)?;
    let (a, b) = bezout(m, n)?;
    let am = a * m as i128;
    let bn = b * n as i128;
    let k = ring.reduce(am + 2 * bn);
    let size = if n > 2 { 6 * m } else { 3 * m };
    let (x, len, sign) = if m % 3 == 1 {
        (ring.reduce(am), m + 2, Sign::Minus)
    } else {
        (ring.reduce(2 * bn), m, Sign::Plus)
    };
    finish(ring, k, size, Sign::Plus, x, len, sign, WitnessSource::Prop36)
}

/// `k ≡ 2 (mod n)`, `k ≡ −2 (mod m)` over `N = nm`, for odd coprime `1 < n < m`.
pub fn witness_prop51(n: u64, m: u64) -> Result<ConstructedWitness> {
    precondition(n > 1 && n % 2 == 1 && m % 2 == 1, || {
        format!("n and m must be odd and greater than 1, got {n}, {m}")
    })?;
    precondition(m > n, || format!("expected m > n, got n={n}, m={m}"))?;
    if gcd(n, m) != 1 {
        return Err(Error::NotCoprime(n, m));
    }
    let ring = checked_modulus(n, m)?;
    let (a, b) = bezout(m, n)?;
    let am = a * m as i128;
    let bn = b * n as i128;
    let k = ring.reduce(2 * am - 2 * bn);
    let r = m % n;
    let v = (1..n)
        .find(|&v| (r as u128 * v as u128 + 2) % n as u128 == 0)
        .expect("r is invertible modulo n");
    let w = if v % 2 == 1 { v } else { v + n };
    let len = m
        .checked_mul(w)
        .and_then(|mw| mw.checked_add(2))
        .ok_or_else(|| Error::Precondition("reducer length overflows".into()))?;
    finish(
        ring,
        k,
        2 * n * m,
        Sign::Plus,
        ring.reduce(2 * am),
        len,
        Sign::Plus,
        WitnessSource::Prop51,
    )
}

/// `k = a·pᵗ` over `N = pⁿ`.
pub fn witness_lemma41(p: u64, n: u32, t: u32, a: u64) -> Result<ConstructedWitness> {
    precondition(p > 2 && is_prime(p), || format!("p must be an odd prime, got {p}"))?;
    precondition(n >= 2, || format!("n must be at least 2, got {n}"))?;
    precondition(t >= 1 && t < n, || format!("t must lie in [1, {}], got {t}", n - 1))?;
    if a % p == 0 {
        return Err(Error::NotCoprime(a, p));
    }
    let modulus = p
        .checked_pow(n)
        .ok_or_else(|| Error::Precondition(format!("{p}^{n} overflows")))?;
    let ring = ResidueRing::new(modulus)?;
    let pt = p.pow(t) as i128;
    let a = a as i128;
    let k = ring.reduce(a * pt);
    let x = ring.reduce(a * pt - 2 * a * p.pow(n - 1) as i128);
    finish(
        ring,
        k,
        2 * p.pow(n - t),
        Sign::Minus,
        x,
        4 * p.pow(n - t - 1),
        Sign::Plus,
        WitnessSource::Lemma41,
    )
}

/// The reducible residue `N/4` (when `16 | N`) or `N/p` (when `p² | N`, p the
/// smallest such odd prime), with a witness found by search.
pub fn witness_prop34(n: u64) -> Result<Option<(u64, ReductionWitness)>> {
    let ring = ResidueRing::new(n)?;
    let k = if n % 16 == 0 {
        n / 4
    } else {
        match factorize(n).into_iter().find(|&(p, e)| p > 2 && e >= 2) {
            Some((p, _)) => n / p,
            None => return Ok(None),
        }
    };
    match find_reduction(&ring, k)? {
        Some(w) => Ok(Some((k, w))),
        None => Err(Error::WitnessRejected(format!("N={n} k={k} is irreducible"))),
    }
}
