//! Arithmetic in ℤ/Nℤ and on 2×2 matrices over it.
//!
//! Residues are plain `u64` values kept canonical in `[0, N-1]`. Products go
//! through `u128` once the modulus no longer fits in 32 bits, so any modulus up
//! to `u64::MAX` is exact.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// ℤ/Nℤ for a fixed modulus `N >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct ResidueRing {
    modulus: u64,
}

impl TryFrom<u64> for ResidueRing {
    type Error = Error;

    fn try_from(modulus: u64) -> Result<Self> {
        ResidueRing::new(modulus)
    }
}

impl From<ResidueRing> for u64 {
    fn from(ring: ResidueRing) -> u64 {
        ring.modulus
    }
}

impl ResidueRing {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::ModulusTooSmall(modulus));
        }
        Ok(ResidueRing { modulus })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Canonical representative of an arbitrary signed integer.
    #[inline]
    pub fn reduce(&self, x: i128) -> u64 {
        x.rem_euclid(self.modulus as i128) as u64
    }

    #[inline]
    pub fn reduce_u64(&self, x: u64) -> u64 {
        x % self.modulus
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (s, carry) = a.overflowing_add(b);
        if carry || s >= self.modulus {
            s.wrapping_sub(self.modulus)
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a.wrapping_sub(b).wrapping_add(self.modulus)
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.modulus <= u32::MAX as u64 {
            a * b % self.modulus
        } else {
            (a as u128 * b as u128 % self.modulus as u128) as u64
        }
    }

    /// The canonical residue of −1.
    #[inline]
    pub fn minus_one(&self) -> u64 {
        self.modulus - 1
    }

    /// Reduction map ℤ/Nℤ → ℤ/dℤ for a divisor `d` of N.
    pub fn quotient(&self, d: u64) -> Result<ResidueRing> {
        if d < 2 || self.modulus % d != 0 {
            return Err(Error::Precondition(format!(
                "{d} is not a divisor >= 2 of {}",
                self.modulus
            )));
        }
        ResidueRing::new(d)
    }

    pub fn identity(&self) -> Mat2 {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn minus_identity(&self) -> Mat2 {
        let m = self.minus_one();
        Mat2::new(m, 0, 0, m)
    }

    pub fn mat_mul(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        Mat2 {
            a: self.add(self.mul(x.a, y.a), self.mul(x.b, y.c)),
            b: self.add(self.mul(x.a, y.b), self.mul(x.b, y.d)),
            c: self.add(self.mul(x.c, y.a), self.mul(x.d, y.c)),
            d: self.add(self.mul(x.c, y.b), self.mul(x.d, y.d)),
        }
    }

    /// `elementary(k) · m`, cheaper than a general product: the new bottom row is
    /// the old top row.
    #[inline]
    pub fn left_step(&self, k: u64, m: &Mat2) -> Mat2 {
        Mat2 {
            a: self.sub(self.mul(k, m.a), m.c),
            b: self.sub(self.mul(k, m.b), m.d),
            c: m.a,
            d: m.b,
        }
    }

    pub fn det(&self, m: &Mat2) -> u64 {
        self.sub(self.mul(m.a, m.d), self.mul(m.b, m.c))
    }

    pub fn scale(&self, s: u64, m: &Mat2) -> Mat2 {
        Mat2::new(
            self.mul(s, m.a),
            self.mul(s, m.b),
            self.mul(s, m.c),
            self.mul(s, m.d),
        )
    }

    /// Entry-wise reduction to ℤ/dℤ.
    pub fn reduce_mat(&self, target: &ResidueRing, m: &Mat2) -> Mat2 {
        let d = target.modulus;
        Mat2::new(m.a % d, m.b % d, m.c % d, m.d % d)
    }

    /// The factor `[[k, -1], [1, 0]]`.
    pub fn elementary(&self, k: u64) -> Mat2 {
        Mat2::new(self.reduce_u64(k), self.minus_one(), 1, 0)
    }

    /// `M_n(a₁,…,aₙ) = M(aₙ)·M(aₙ₋₁)···M(a₁)`.
    pub fn chain(&self, values: &[u64]) -> Result<Mat2> {
        if values.is_empty() {
            return Err(Error::EmptyChain);
        }
        Ok(values
            .iter()
            .fold(self.identity(), |acc, &v| self.left_step(self.reduce_u64(v), &acc)))
    }

    /// `M(k)ⁿ` by binary exponentiation; `n = 0` gives the identity.
    pub fn monomial_power(&self, k: u64, n: u64) -> Mat2 {
        self.mat_pow(&self.elementary(k), n)
    }

    pub fn mat_pow(&self, base: &Mat2, mut n: u64) -> Mat2 {
        let mut acc = self.identity();
        let mut base = *base;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mat_mul(&acc, &base);
            }
            base = self.mat_mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    /// `+1` for Id, `-1` for −Id, `None` otherwise. Over ℤ/2ℤ the two coincide and
    /// the answer is `+1`.
    #[inline]
    pub fn pm_id(&self, m: &Mat2) -> Option<Sign> {
        if m.b != 0 || m.c != 0 || m.a != m.d {
            return None;
        }
        if m.a == 1 {
            Some(Sign::Plus)
        } else if m.a == self.minus_one() {
            Some(Sign::Minus)
        } else {
            None
        }
    }
}

/// Row-major `[[a, b], [c, d]]` with entries canonical in the ambient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat2 {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl Mat2 {
    pub const fn new(a: u64, b: u64, c: u64, d: u64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2::new(self.a, self.c, self.b, self.d)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// ε in `M = ε·Id`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn residue(self, ring: &ResidueRing) -> u64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => ring.minus_one(),
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(format!("sign must be 1 or -1, got {other}")),
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}
