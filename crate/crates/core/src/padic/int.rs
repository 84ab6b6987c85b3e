use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::rational::int_valuation;
use crate::arith::Rational;
use crate::error::{domain, Error, Result};

/// Rejects even and composite moduli.
pub fn check_odd_prime(p: u64) -> Result<()> {
    if p < 3 || p % 2 == 0 {
        return Err(domain(format!("p must be an odd prime, got {p}")));
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return Err(domain(format!("p must be an odd prime, got {p}")));
        }
        d += 2;
    }
    Ok(())
}

pub fn prime_power(p: u64, n: u32) -> BigUint {
    BigUint::from(p).pow(n)
}

/// Valuation of a p-adic residue: exact, or a lower bound when the residue
/// is zero at the available depth.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PadicValuation {
    pub value: u32,
    pub at_least: bool,
}

impl fmt::Display for PadicValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.at_least {
            write!(f, ">={}", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// Element of Z/p^N: a p-adic integer known to `depth` digits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PadicInt {
    p: u64,
    depth: u32,
    residue: BigUint,
}

impl PadicInt {
    pub fn new(p: u64, depth: u32, value: impl Into<BigInt>) -> Result<Self> {
        check_odd_prime(p)?;
        if depth == 0 {
            return Err(domain("p-adic depth must be positive"));
        }
        let m = BigInt::from(prime_power(p, depth));
        let residue = value.into().mod_floor(&m).to_biguint().expect("non-negative residue");
        Ok(PadicInt { p, depth, residue })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    pub fn modulus(&self) -> BigUint {
        prime_power(self.p, self.depth)
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    pub fn valuation(&self) -> PadicValuation {
        if self.residue.is_zero() {
            PadicValuation { value: self.depth, at_least: true }
        } else {
            let v = int_valuation(&BigInt::from(self.residue.clone()), self.p) as u32;
            PadicValuation { value: v.min(self.depth), at_least: false }
        }
    }

    pub fn is_unit(&self) -> bool {
        !(&self.residue % self.p).is_zero()
    }

    fn same_ring(&self, other: &Self) -> Result<(u64, u32)> {
        if self.p != other.p {
            return Err(domain(format!("mixed primes {} and {}", self.p, other.p)));
        }
        Ok((self.p, self.depth.min(other.depth)))
    }

    fn from_parts(p: u64, depth: u32, v: BigUint) -> Self {
        PadicInt { p, depth, residue: v % prime_power(p, depth) }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let (p, d) = self.same_ring(other)?;
        Ok(Self::from_parts(p, d, &self.residue + &other.residue))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let (p, d) = self.same_ring(other)?;
        let m = prime_power(p, d);
        let a = &self.residue % &m;
        let b = &other.residue % &m;
        Ok(Self::from_parts(p, d, a + &m - b))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (p, d) = self.same_ring(other)?;
        Ok(Self::from_parts(p, d, &self.residue * &other.residue))
    }

    pub fn neg(&self) -> Self {
        let m = self.modulus();
        Self::from_parts(self.p, self.depth, &m - &self.residue)
    }

    /// Division by a unit.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let (p, d) = self.same_ring(other)?;
        if !other.is_unit() {
            return Err(domain("division by a non-unit p-adic integer"));
        }
        let m = BigInt::from(prime_power(p, d));
        let inv = mod_inverse(&BigInt::from(other.residue.clone()), &m).expect("unit is invertible");
        let v = (BigInt::from(self.residue.clone()) * inv).mod_floor(&m);
        Ok(Self::from_parts(p, d, v.to_biguint().expect("non-negative")))
    }

    pub fn pow(&self, e: u64) -> Self {
        let m = self.modulus();
        PadicInt { p: self.p, depth: self.depth, residue: self.residue.modpow(&BigUint::from(e), &m) }
    }

    /// Drops to a shallower depth.
    pub fn reduce(&self, depth: u32) -> Result<Self> {
        if depth == 0 || depth > self.depth {
            return Err(Error::DepthInsufficient(format!("cannot view depth {} residue at depth {depth}", self.depth)));
        }
        Ok(Self::from_parts(self.p, depth, self.residue.clone()))
    }

    pub fn to_integer(&self) -> BigInt {
        BigInt::from(self.residue.clone())
    }

    pub fn to_rational(&self) -> Rational {
        Rational::from_integer(self.to_integer())
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.residue.to_u64()
    }
}

impl fmt::Display for PadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.residue, self.p, self.depth)
    }
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if !e.gcd.abs().is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

/// The residue mod p^N congruent to a rational whose denominator is prime to p.
pub fn padic_of_rational(r: &Rational, p: u64, depth: u32) -> Result<PadicInt> {
    check_odd_prime(p)?;
    if (r.denom() % p).is_zero() {
        return Err(Error::NotPadicInteger { value: r.to_string(), p });
    }
    let m = BigInt::from(prime_power(p, depth));
    let inv = mod_inverse(r.denom(), &m).expect("denominator prime to p");
    PadicInt::new(p, depth, r.numer() * inv)
}
