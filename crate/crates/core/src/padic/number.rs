use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::int::{check_odd_prime, mod_inverse, prime_power, PadicInt};
use crate::arith::rational::{int, rpow, valuation};
use crate::arith::Rational;
use crate::error::{domain, Result};

/// Element of Q_p known modulo `p^abs_prec`, or exactly.
///
/// Stored as a rational representative; finite-precision values are kept
/// canonical as `p^v * u` with `0 < u < p^(abs_prec - v)` an integer prime
/// to `p`. Precision propagates with the usual rules, so the reported
/// precision of a result is the number of digits it actually knows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicNumber {
    p: u64,
    value: Rational,
    abs_prec: Option<i64>,
}

impl PadicNumber {
    pub fn exact(value: Rational, p: u64) -> Result<Self> {
        check_odd_prime(p)?;
        Ok(PadicNumber { p, value, abs_prec: None })
    }

    pub fn with_precision(value: Rational, p: u64, abs_prec: i64) -> Result<Self> {
        check_odd_prime(p)?;
        Ok(Self::canonical(p, value, Some(abs_prec)))
    }

    pub fn from_padic_int(x: &PadicInt) -> Self {
        Self::canonical(x.p(), x.to_rational(), Some(x.depth() as i64))
    }

    fn canonical(p: u64, value: Rational, abs_prec: Option<i64>) -> Self {
        let Some(a) = abs_prec else {
            return PadicNumber { p, value, abs_prec };
        };
        let value = match valuation(&value, p) {
            None => Rational::zero(),
            Some(v) if v >= a => Rational::zero(),
            Some(v) => {
                let unit = &value * rpow(&int(p), -v);
                let m = BigInt::from(prime_power(p, (a - v) as u32));
                let inv = mod_inverse(unit.denom(), &m).expect("unit denominator");
                let u = (unit.numer() * inv).mod_floor(&m);
                int(u) * rpow(&int(p), v)
            }
        };
        PadicNumber { p, value, abs_prec }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `None` when the value is exact.
    pub fn abs_precision(&self) -> Option<i64> {
        self.abs_prec
    }

    pub fn representative(&self) -> &Rational {
        &self.value
    }

    /// Valuation, or `None` when the value is zero to its precision.
    pub fn valuation(&self) -> Option<i64> {
        valuation(&self.value, self.p)
    }

    fn v_or_prec(&self) -> i64 {
        self.valuation().or(self.abs_prec).unwrap_or(i64::MAX / 4)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(domain(format!("mixed primes {} and {}", self.p, other.p)));
        }
        Ok(())
    }

    fn min_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
        match (a, b) {
            (None, x) | (x, None) => x,
            (Some(x), Some(y)) => Some(x.min(y)),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::canonical(self.p, &self.value + &other.value, Self::min_prec(self.abs_prec, other.abs_prec)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::canonical(self.p, &self.value - &other.value, Self::min_prec(self.abs_prec, other.abs_prec)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let a = self.abs_prec.map(|a| a + other.v_or_prec());
        let b = other.abs_prec.map(|b| b + self.v_or_prec());
        Ok(Self::canonical(self.p, &self.value * &other.value, Self::min_prec(a, b)))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if other.value.is_zero() {
            return Err(domain("p-adic division by a value indistinguishable from zero"));
        }
        let vy = other.valuation().expect("nonzero divisor");
        let a = self.abs_prec.map(|a| a - vy);
        let b = other.abs_prec.map(|b| b + self.v_or_prec() - 2 * vy);
        Ok(Self::canonical(self.p, &self.value / &other.value, Self::min_prec(a, b)))
    }

    /// Valuation of `self - other`, capped at the precision both operands know.
    pub fn agreement(&self, other: &Self) -> Result<i64> {
        let d = self.sub(other)?;
        Ok(d.valuation().or(d.abs_prec).unwrap_or(i64::MAX))
    }

    /// Valuation of `self - target` for an exact rational target.
    pub fn agreement_with(&self, target: &Rational) -> Result<i64> {
        self.agreement(&PadicNumber::exact(target.clone(), self.p)?)
    }
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.abs_prec {
            None => write!(f, "{}", self.value),
            Some(a) => {
                if self.value.is_negative() {
                    write!(f, "({}) + O({}^{})", self.value, self.p, a)
                } else {
                    write!(f, "{} + O({}^{})", self.value, self.p, a)
                }
            }
        }
    }
}
