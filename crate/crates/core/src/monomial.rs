//! Minimal monomial solutions: their size and sign, and whether they reduce.
//!
//! The k-monomial minimal solution of length `r` is reducible exactly when some
//! bordered tuple `(x, k, …, k, x)` of length `3 <= ℓ <= r-1` is itself a
//! solution; the complementary summand `(k−x, k, …, k, k−x)` then completes the
//! ⊕-decomposition. Writing `P = M(k)^(ℓ−2)`,
//!
//! ```text
//! M(x)·P·M(x) = ε·Id   ⟺   P = ε·[[−1, x], [−x, x²−1]]
//! ```
//!
//! so each power of `M(k)` determines at most one candidate `x` (its top-right
//! entry up to sign), and the root condition `x(x−k) ≡ 0` follows from the
//! continuant recurrence. [`find_reduction`] therefore needs a single pass over
//! the powers `M(k)ⁿ`, `n < r`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modring::{Mat2, ResidueRing, Sign};
use crate::prime_order::PrimeOrder;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MinimalSize {
    pub size: u64,
    pub sign: Sign,
}

/// A bordered solution `(x, k, …, k, x)` of length `len` that splits the
/// k-monomial minimal solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReductionWitness {
    pub x: u64,
    pub len: u64,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialReport {
    #[serde(rename = "N")]
    pub modulus: u64,
    pub k: u64,
    pub size: u64,
    pub sign: Sign,
    pub irreducible: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<ReductionWitness>,
}

fn step_cap(ring: &ResidueRing) -> u128 {
    let n = ring.modulus() as u128;
    n.saturating_mul(n).saturating_mul(n).saturating_add(1)
}

/// Smallest `r >= 1` with `M(k)^r = ±Id`.
///
/// # Panics
///
/// If no such `r` is found within `N³ + 1` steps. Every element of
/// `SL₂(ℤ/Nℤ)` has finite order below that bound, so hitting it means the
/// arithmetic is broken.
pub fn minimal_size(ring: &ResidueRing, k: u64) -> MinimalSize {
    let k = ring.reduce_u64(k);
    let cap = step_cap(ring);
    let mut power = ring.identity();
    let mut n: u128 = 0;
    loop {
        power = ring.left_step(k, &power);
        n += 1;
        if let Some(sign) = ring.pm_id(&power) {
            return MinimalSize {
                size: n as u64,
                sign,
            };
        }
        assert!(
            n < cap,
            "order of M({k}) over Z/{}Z exceeded the N^3 cap",
            ring.modulus()
        );
    }
}

/// Same contract as [`minimal_size`] for a prime modulus, computed from the
/// multiplicative order of an eigenvalue of `M(k)`.
pub fn minimal_size_prime_fast(p: u64, k: u64) -> Result<MinimalSize> {
    Ok(PrimeOrder::new(p)?.minimal_size(k))
}

/// Reads off the unique bordered candidate attached to `P = M(k)^(ℓ−2)`.
#[inline]
fn bordered_candidate(ring: &ResidueRing, power: &Mat2) -> Option<(u64, Sign)> {
    let sign = if power.a == ring.minus_one() {
        Sign::Plus
    } else if power.a == 1 {
        Sign::Minus
    } else {
        return None;
    };
    let x = match sign {
        Sign::Plus => power.b,
        Sign::Minus => ring.neg(power.b),
    };
    let eps = sign.residue(ring);
    // P = ε·[[−1, x], [−x, x²−1]]
    let expect_c = ring.mul(eps, ring.neg(x));
    let expect_d = ring.mul(eps, ring.sub(ring.mul(x, x), 1 % ring.modulus()));
    (power.c == expect_c && power.d == expect_d).then_some((x, sign))
}

/// Size, sign and first reduction witness (smallest `ℓ`, then smallest `x`) in
/// one pass over the powers of `M(k)`.
fn scan_powers(ring: &ResidueRing, k: u64) -> (MinimalSize, Option<ReductionWitness>) {
    let k = ring.reduce_u64(k);
    let cap = step_cap(ring);
    let mut power = ring.identity();
    let mut first: Option<(u64, u64, Sign)> = None;
    let mut n: u64 = 0;
    loop {
        power = ring.left_step(k, &power);
        n += 1;
        if let Some(sign) = ring.pm_id(&power) {
            let size = MinimalSize { size: n, sign };
            let witness = first
                .filter(|&(steps, _, _)| steps + 3 <= n)
                .map(|(steps, x, sign)| {
                    debug_assert_eq!(ring.mul(x, ring.sub(x, k)), 0);
                    ReductionWitness {
                        x,
                        len: steps + 2,
                        sign,
                    }
                });
            return (size, witness);
        }
        if first.is_none() {
            if let Some((x, sign)) = bordered_candidate(ring, &power) {
                first = Some((n, x, sign));
            }
        }
        assert!(
            (n as u128) < cap,
            "order of M({k}) over Z/{}Z exceeded the N^3 cap",
            ring.modulus()
        );
    }
}

/// A bordered solution `(x, k, …, k, x)` of length in `[3, r−1]`, if one exists.
pub fn find_reduction(ring: &ResidueRing, k: u64) -> Result<Option<ReductionWitness>> {
    if ring.reduce_u64(k) == 0 {
        return Err(Error::ZeroMonomial);
    }
    Ok(scan_powers(ring, k).1)
}

/// Brute-force reference for [`find_reduction`]: tries every residue `x` for
/// every admissible length, multiplying out `M(x)·M(k)^(ℓ−2)·M(x)`.
/// Quadratic in N; meant for N up to a few hundred.
pub fn find_reduction_naive(ring: &ResidueRing, k: u64) -> Result<Option<ReductionWitness>> {
    let k = ring.reduce_u64(k);
    if k == 0 {
        return Err(Error::ZeroMonomial);
    }
    let r = minimal_size(ring, k).size;
    let mut inner = ring.identity();
    for len in 3..r {
        inner = ring.mat_mul(&ring.elementary(k), &inner);
        for x in 0..ring.modulus() {
            let mx = ring.elementary(x);
            let full = ring.mat_mul(&mx, &ring.mat_mul(&inner, &mx));
            if let Some(sign) = ring.pm_id(&full) {
                return Ok(Some(ReductionWitness { x, len, sign }));
            }
        }
    }
    Ok(None)
}

/// Everything known about the k-monomial minimal solution. `k = 0` gives the
/// size-2 solution `(0, 0)`, which is never counted as irreducible.
pub fn report(ring: &ResidueRing, k: u64) -> MonomialReport {
    let k = ring.reduce_u64(k);
    let (size, witness) = scan_powers(ring, k);
    let witness = if k == 0 { None } else { witness };
    MonomialReport {
        modulus: ring.modulus(),
        k,
        size: size.size,
        sign: size.sign,
        irreducible: k != 0 && witness.is_none(),
        witness,
    }
}
