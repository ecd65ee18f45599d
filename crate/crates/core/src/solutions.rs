//! Tuples over ℤ/Nℤ, the ⊕ sum, equivalence up to rotation/reversal, and
//! membership in the solution set of `M_n(a₁,…,aₙ) = ±Id`.

use serde::{Deserialize, Serialize};

use crate::arith::{crt, factorize};
use crate::error::{Error, Result};
use crate::modring::{ResidueRing, Sign};

/// Above this modulus the root search switches from a full residue scan to
/// prime-power lifting plus CRT.
pub const ROOT_SCAN_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModTuple {
    #[serde(rename = "modulus")]
    ring: ResidueRing,
    entries: Vec<u64>,
}

impl ModTuple {
    /// Canonicalizes signed entries. Empty tuples are rejected.
    pub fn new(ring: ResidueRing, entries: &[i128]) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyChain);
        }
        Ok(ModTuple {
            ring,
            entries: entries.iter().map(|&e| ring.reduce(e)).collect(),
        })
    }

    pub fn from_residues(ring: ResidueRing, entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyChain);
        }
        let entries = entries.into_iter().map(|e| ring.reduce_u64(e)).collect();
        Ok(ModTuple { ring, entries })
    }

    /// `(x, k, …, k, x)` of total length `len >= 2`.
    pub fn bordered(ring: ResidueRing, x: u64, k: u64, len: usize) -> Result<Self> {
        if len < 2 {
            return Err(Error::TupleTooShort(len));
        }
        let mut entries = vec![ring.reduce_u64(k); len];
        entries[0] = ring.reduce_u64(x);
        entries[len - 1] = ring.reduce_u64(x);
        Ok(ModTuple { ring, entries })
    }

    pub fn ring(&self) -> ResidueRing {
        self.ring
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn same_ring(&self, other: &ModTuple) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.modulus(),
                right: other.ring.modulus(),
            });
        }
        Ok(())
    }
}

/// `(a₁+b_m, a₂,…,a_{n−1}, a_n+b₁, b₂,…,b_{m−1})`.
pub fn oplus(u: &ModTuple, v: &ModTuple) -> Result<ModTuple> {
    u.same_ring(v)?;
    let (a, b) = (u.entries(), v.entries());
    for t in [a, b] {
        if t.len() < 2 {
            return Err(Error::TupleTooShort(t.len()));
        }
    }
    let ring = u.ring;
    let (n, m) = (a.len(), b.len());
    let mut out = Vec::with_capacity(n + m - 2);
    out.push(ring.add(a[0], b[m - 1]));
    out.extend_from_slice(&a[1..n - 1]);
    out.push(ring.add(a[n - 1], b[0]));
    out.extend_from_slice(&b[1..m - 1]);
    Ok(ModTuple { ring, entries: out })
}

/// True iff `v` is a cyclic rotation of `u` or of `u` reversed.
pub fn equivalent(u: &ModTuple, v: &ModTuple) -> Result<bool> {
    u.same_ring(v)?;
    if u.len() != v.len() {
        return Ok(false);
    }
    let target = v.entries();
    let found = |seq: Vec<u64>| {
        let doubled: Vec<u64> = seq.iter().chain(seq.iter()).copied().collect();
        doubled.windows(target.len()).any(|w| w == target)
    };
    let forward = u.entries().to_vec();
    let mut reversed = forward.clone();
    reversed.reverse();
    Ok(found(forward) || found(reversed))
}

pub fn solution_sign(t: &ModTuple) -> Option<Sign> {
    let m = t.ring.chain(t.entries()).expect("ModTuple is never empty");
    t.ring.pm_id(&m)
}

/// Every `x` in `[0, N-1]` with `x·(x−k) ≡ 0 (mod N)`, ascending.
pub fn bordered_constraint_roots(ring: &ResidueRing, k: u64) -> Vec<u64> {
    if ring.modulus() <= ROOT_SCAN_LIMIT {
        roots_by_scan(ring, k)
    } else {
        roots_by_prime_powers(ring, k)
    }
}

pub fn roots_by_scan(ring: &ResidueRing, k: u64) -> Vec<u64> {
    let k = ring.reduce_u64(k);
    (0..ring.modulus())
        .filter(|&x| ring.mul(x, ring.sub(x, k)) == 0)
        .collect()
}

/// Solves `x(x−k) ≡ 0` modulo each prime power of N by digit-wise lifting from
/// the roots mod p, then recombines with CRT.
pub fn roots_by_prime_powers(ring: &ResidueRing, k: u64) -> Vec<u64> {
    let k = ring.reduce_u64(k);
    let mut acc: Vec<u64> = vec![0];
    let mut acc_mod: u64 = 1;
    for (p, e) in factorize(ring.modulus()) {
        let local = lift_roots(p, e, k);
        let pe = p.pow(e);
        let mut next = Vec::with_capacity(acc.len() * local.len());
        for &x in &acc {
            for &y in &local {
                let (z, _) = crt(&[(x as i128, acc_mod), (y as i128, pe)])
                    .expect("prime-power factors are coprime");
                next.push(z);
            }
        }
        acc = next;
        acc_mod *= pe;
    }
    acc.sort_unstable();
    acc
}

fn lift_roots(p: u64, e: u32, k: u64) -> Vec<u64> {
    let f = |x: u64, m: u64| (x as u128 * ((x as u128 + m as u128 - (k % m) as u128) % m as u128)) % m as u128 == 0;
    let mut roots: Vec<u64> = (0..p).filter(|&x| f(x, p)).collect();
    let mut pj = p;
    for _ in 1..e {
        let next_mod = pj * p;
        roots = roots
            .iter()
            .flat_map(|&x| (0..p).map(move |i| x + i * pj))
            .filter(|&y| f(y, next_mod))
            .collect();
        pj = next_mod;
    }
    roots
}
