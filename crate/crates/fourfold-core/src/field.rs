//! Arithmetic in the prime field `F_p` for small odd `p` (default 31).

use core::fmt;

/// An odd prime modulus together with its arithmetic.
///
/// Elements are canonical residues in `0..p`, carried as bare `u32` where
/// the modulus is clear from context and as [`FieldElem`] at API boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

/// A residue paired with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldElem {
    pub value: u32,
    pub prime: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NotAnOddPrime(u32),
    DivisionByZero,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotAnOddPrime(p) => write!(f, "{p} is not an odd prime"),
            FieldError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub const F31: PrimeField = PrimeField { p: 31 };

    pub fn new(p: u32) -> Result<Self, FieldError> {
        if p == 2 || !is_prime(p) {
            return Err(FieldError::NotAnOddPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn reduce_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat; errors on zero.
    pub fn inv(&self, a: u32) -> Result<u32, FieldError> {
        if a % self.p == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }

    /// The representative of `a` in `[-(p-1)/2, (p-1)/2]`, as printed output uses.
    pub fn signed(&self, a: u32) -> i64 {
        let a = a % self.p;
        if a <= (self.p - 1) / 2 {
            a as i64
        } else {
            a as i64 - self.p as i64
        }
    }

    pub fn elem(&self, v: i64) -> FieldElem {
        FieldElem {
            value: self.reduce_i64(v),
            prime: self.p,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirty_one_is_default_scale() {
        let f = PrimeField::F31;
        assert_eq!(f.mul(16, 2), 1); // 32 ≡ 1
        assert_eq!(f.reduce_i64(-6), 25);
        assert_eq!(f.signed(25), -6);
    }

    #[test]
    fn every_nonzero_element_has_an_inverse() {
        let f = PrimeField::F31;
        for a in 1..31 {
            let inv = f.inv(a).unwrap();
            assert_eq!(f.mul(a, inv), 1, "a = {a}");
        }
        assert!(f.inv(0).is_err());
    }

    #[test]
    fn rejects_non_primes_and_two() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(15).is_err());
        assert!(PrimeField::new(101).is_ok());
    }

    #[test]
    fn signed_representatives_cover_both_halves() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.signed(4), -3);
        assert_eq!(f.signed(3), 3);
    }
}
