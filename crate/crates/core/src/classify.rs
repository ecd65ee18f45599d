//! Classes of moduli by irreducibility of their minimal monomial solutions.
//!
//! * monomially irreducible: every nonzero k is irreducible;
//! * quasi monomially irreducible: every unit k is irreducible;
//! * semi monomially irreducible: every `k = 2a` is irreducible, with `a`
//!   coprime to N (N odd or 4 | N) or to N/2 (N ≡ 2 mod 4).
//!
//! The `decide_*` functions check the definition directly; the `predict_*`
//! functions are the closed-form classifications.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, gcd, is_prime, prime_power};
use crate::error::{Error, Result};
use crate::modring::ResidueRing;
use crate::monomial::{report, ReductionWitness};
use crate::prime_order::PrimeOrder;

pub use crate::arith::euler_phi;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Monomial,
    Quasi,
    Semi,
}

impl ClassKind {
    pub const ALL: [ClassKind; 3] = [ClassKind::Monomial, ClassKind::Quasi, ClassKind::Semi];

    pub fn name(self) -> &'static str {
        match self {
            ClassKind::Monomial => "monomial",
            ClassKind::Quasi => "quasi",
            ClassKind::Semi => "semi",
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "monomial" => Ok(ClassKind::Monomial),
            "quasi" => Ok(ClassKind::Quasi),
            "semi" => Ok(ClassKind::Semi),
            other => Err(format!("unknown class kind {other:?} (monomial|quasi|semi)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub k: u64,
    pub witness: ReductionWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassVerdict {
    #[serde(rename = "N")]
    pub modulus: u64,
    pub kind: ClassKind,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    pub checked_k: Vec<u64>,
}

fn ring(n: u64) -> Result<ResidueRing> {
    ResidueRing::new(n)
}

/// Distinct nonzero residues examined for `kind`, ascending.
pub fn candidates(n: u64, kind: ClassKind) -> Result<Vec<u64>> {
    ring(n)?;
    let out = match kind {
        ClassKind::Monomial => (1..n).collect(),
        ClassKind::Quasi => (1..n).filter(|&k| gcd(k, n) == 1).collect(),
        ClassKind::Semi => {
            let (range, coprime_to) = if n % 4 == 2 { (n / 2, n / 2) } else { (n, n) };
            let mut ks: Vec<u64> = (1..=range)
                .filter(|&a| gcd(a, coprime_to) == 1)
                .map(|a| (2 * a) % n)
                .filter(|&k| k != 0)
                .collect();
            ks.sort_unstable();
            ks.dedup();
            ks
        }
    };
    Ok(out)
}

pub fn decide(n: u64, kind: ClassKind) -> Result<ClassVerdict> {
    let r = ring(n)?;
    let mut checked_k = Vec::new();
    let mut counterexample = None;
    for k in candidates(n, kind)? {
        checked_k.push(k);
        let rep = report(&r, k);
        if !rep.irreducible {
            let witness = rep.witness.expect("nonzero reducible k carries a witness");
            counterexample = Some(Counterexample { k, witness });
            break;
        }
    }
    Ok(ClassVerdict {
        modulus: n,
        kind,
        verdict: counterexample.is_none(),
        counterexample,
        checked_k,
    })
}

pub fn decide_monomial(n: u64) -> Result<ClassVerdict> {
    decide(n, ClassKind::Monomial)
}

pub fn decide_quasi(n: u64) -> Result<ClassVerdict> {
    decide(n, ClassKind::Quasi)
}

pub fn decide_semi(n: u64) -> Result<ClassVerdict> {
    decide(n, ClassKind::Semi)
}

/// Primes together with 4, 6, 8, 12 and 24.
pub fn predict_monomial(n: u64) -> bool {
    is_prime(n) || matches!(n, 4 | 6 | 8 | 12 | 24)
}

/// Prime powers and `2ⁿ3ᵐ` with `n, m >= 1`.
pub fn predict_quasi(n: u64) -> bool {
    n >= 2 && (prime_power(n).is_some() || is_two_three(n))
}

fn strip(mut n: u64, p: u64) -> (u64, u32) {
    let mut e = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        e += 1;
    }
    (n, e)
}

/// `2ⁿ3ᵐ` with both exponents positive.
pub fn is_two_three(n: u64) -> bool {
    let (rest, a) = strip(n, 2);
    let (rest, b) = strip(rest, 3);
    rest == 1 && a >= 1 && b >= 1
}

/// Odd N: semi monomially irreducible exactly for odd prime powers.
pub fn predict_semi_odd(n: u64) -> Option<bool> {
    (n % 2 == 1).then(|| prime_power(n).is_some())
}

/// `2pⁿ` with p prime (including p = 2) and `n >= 1`.
pub fn is_twice_prime_power(n: u64) -> bool {
    n % 2 == 0 && n >= 4 && prime_power(n / 2).is_some()
}

/// Primes whose nonzero minimal sizes all avoid 2 mod 4.
pub const SEMI_GOOD_PRIMES: [u64; 6] = [3, 5, 7, 17, 31, 127];

/// `2^a·3^b·5^c·7^d·17^e·31^f·127^g` with `a >= 2`.
pub fn is_good_prime_smooth(n: u64) -> bool {
    let (mut rest, a) = strip(n, 2);
    if a < 2 {
        return false;
    }
    for p in SEMI_GOOD_PRIMES {
        rest = strip(rest, p).0;
    }
    rest == 1
}

/// `2·3^a·5^b` with `a + b >= 1`.
pub fn is_two_three_five(n: u64) -> bool {
    let (rest, two) = strip(n, 2);
    let (rest, a) = strip(rest, 3);
    let (rest, b) = strip(rest, 5);
    rest == 1 && two == 1 && a + b >= 1
}

/// Families known to be semi monomially irreducible (sufficient, not necessary
/// for even N).
pub fn semi_sufficient(n: u64) -> bool {
    if n % 2 == 1 {
        return predict_semi_odd(n).unwrap_or(false);
    }
    is_twice_prime_power(n) || is_two_three_five(n) || is_good_prime_smooth(n)
}

/// Reducible residues for `N = 2·3ᵐ`, `m >= 2`, including 0.
pub fn predict_reducible_set_2x3m(m: u32) -> Result<Vec<u64>> {
    if m < 2 {
        return Err(Error::Precondition(format!("m must be at least 2, got {m}")));
    }
    let pow = 3u64.pow(m);
    let n = 2 * pow;
    let excluded = [pow, pow / 3, 5 * (pow / 3)];
    Ok((0..n)
        .filter(|k| k % 3 == 0 && !excluded.contains(k))
        .collect())
}

/// All `k` in `[0, N−1]` with an irreducible minimal solution.
pub fn irreducible_set(n: u64) -> Result<Vec<u64>> {
    let r = ring(n)?;
    Ok((0..n).filter(|&k| report(&r, k).irreducible).collect())
}

/// All `k` in `[0, N−1]` whose minimal solution is not irreducible (0 included).
pub fn reducible_set(n: u64) -> Result<Vec<u64>> {
    let r = ring(n)?;
    Ok((0..n).filter(|&k| !report(&r, k).irreducible).collect())
}

/// Number of `k` in `[1, N−1]` with an irreducible minimal solution.
pub fn omega_count(n: u64) -> Result<u64> {
    Ok(irreducible_set(n)?.len() as u64)
}

/// Whether the irreducible set is exactly the units of ℤ/Nℤ (checked directly).
pub fn units_only(n: u64) -> Result<bool> {
    let units: Vec<u64> = (0..n).filter(|&k| gcd(k, n) == 1).collect();
    Ok(irreducible_set(n)? == units)
}

/// Closed form for [`units_only`]: N = 2 or an odd prime power.
pub fn predict_units_only(n: u64) -> bool {
    n == 2 || (n % 2 == 1 && prime_power(n).is_some())
}

/// `(k, size)` for `k = 1..=(p−1)/2` over a prime `p`.
pub fn sizes_table(p: u64) -> Result<Vec<(u64, u64)>> {
    let po = PrimeOrder::new(p)?;
    Ok((1..=(p - 1) / 2).map(|k| (k, po.minimal_size(k).size)).collect())
}

/// How a quasi monomially irreducible integer arises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuasiTag {
    Prime,
    PrimePower,
    TwoThree,
}

pub fn quasi_tag(n: u64) -> Option<QuasiTag> {
    if is_prime(n) {
        Some(QuasiTag::Prime)
    } else if prime_power(n).is_some() {
        Some(QuasiTag::PrimePower)
    } else if is_two_three(n) {
        Some(QuasiTag::TwoThree)
    } else {
        None
    }
}

/// Which known family, if any, explains an even semi monomially irreducible N.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SemiTag {
    TwicePrimePower,
    Covered,
    Untagged,
}

pub fn semi_tag(n: u64) -> SemiTag {
    if is_twice_prime_power(n) {
        SemiTag::TwicePrimePower
    } else if is_good_prime_smooth(n) || is_two_three_five(n) {
        SemiTag::Covered
    } else {
        SemiTag::Untagged
    }
}

/// Prime factors of N, for display.
pub fn factor_string(n: u64) -> String {
    factorize(n)
        .iter()
        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join(" * ")
}
