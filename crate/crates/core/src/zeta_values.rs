//! Exact special values of zeta, beta, lambda and the Euler zeta function
//! as rational multiples of powers of π, and exact checks of the mixed
//! Bernoulli–Euler identities.
//!
//! Odd zeta values have no closed form here, so identities involving
//! them (the Hurwitz `zeta(2n+1, 1/4)` relation) are checked numerically
//! through [`crate::series_eval`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::rational::{factorial, int, pow2};
use crate::arith::{pi, powi, BigFloat, Rational};
use crate::error::{domain, Result};
use crate::series_eval::{hurwitz_em, zeta_em};
use crate::special_numbers::{bernoulli, euler_first, euler_second};

/// `coeff * π^power`, compared componentwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiMultiple {
    pub coeff: Rational,
    pub power: u32,
}

impl PiMultiple {
    pub fn new(coeff: Rational, power: u32) -> Self {
        PiMultiple { coeff, power }
    }

    pub fn scale(&self, by: &Rational) -> Self {
        PiMultiple { coeff: &self.coeff * by, power: self.power }
    }

    pub fn to_bigfloat(&self, prec: u32) -> BigFloat {
        let wp = prec + 16;
        let c = BigFloat::from_rational(&self.coeff, wp);
        c.mul_prec(&powi(&pi(wp), self.power as i64, wp), prec)
    }
}

impl std::ops::Neg for PiMultiple {
    type Output = PiMultiple;
    fn neg(self) -> PiMultiple {
        PiMultiple { coeff: -self.coeff, power: self.power }
    }
}

impl fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * pi^{}", self.coeff, self.power)
    }
}

fn sign(k: u32) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn fact(n: u32) -> Rational {
    int(factorial(n as u64))
}

fn positive(n: u32, what: &str) -> Result<()> {
    if n == 0 {
        return Err(domain(format!("{what} needs a positive index")));
    }
    Ok(())
}

/// zeta(2n) from B_{2n}.
pub fn zeta_even(n: u32) -> Result<PiMultiple> {
    positive(n, "zeta_even")?;
    let m = 2 * n;
    let coeff = sign(n - 1) * pow2(m as i64) * bernoulli(m as usize) / (int(2) * fact(m));
    Ok(PiMultiple::new(coeff, m))
}

/// zeta(2n) from E*_{2n-1}.
pub fn zeta_even_via_euler(n: u32) -> Result<PiMultiple> {
    positive(n, "zeta_even_via_euler")?;
    let m = 2 * n;
    let one_minus = Rational::one() - pow2(m as i64);
    let coeff = sign(n - 1) * pow2(m as i64) * euler_first(m as usize - 1) / (int(4) * fact(m - 1) * one_minus);
    Ok(PiMultiple::new(coeff, m))
}

/// zeta(-n) = -B_{n+1}/(n+1).
pub fn zeta_neg(n: u32) -> Result<Rational> {
    positive(n, "zeta_neg")?;
    Ok(-bernoulli(n as usize + 1) / int(n + 1))
}

/// beta(2n+1) = sum_k (-1)^k/(2k+1)^(2n+1) from E_{2n}; `n = 0` gives π/4.
pub fn beta_odd(n: u32) -> PiMultiple {
    let m = 2 * n;
    let coeff = sign(n) * euler_second(m as usize) / (int(2) * fact(m) * pow2(m as i64 + 1));
    PiMultiple::new(coeff, m + 1)
}

/// lambda(2n), the sum of m^(-2n) over all odd m >= 1.
pub fn lambda_even(n: u32) -> Result<PiMultiple> {
    positive(n, "lambda_even")?;
    let m = 2 * n;
    let coeff = sign(n) * pow2(m as i64) * euler_first(m as usize - 1) / (pow2(2 * (n as i64 + 1)) * fact(m - 1));
    Ok(PiMultiple::new(coeff, m))
}

/// zeta_E(2n) from E*_{2n-1}.
pub fn euler_zeta_even(n: u32) -> Result<PiMultiple> {
    positive(n, "euler_zeta_even")?;
    let m = 2 * n;
    let four_n = pow2(m as i64);
    let coeff = sign(n - 1) * (int(2) - &four_n) * euler_first(m as usize - 1)
        / (int(2) * fact(m - 1) * (Rational::one() - four_n));
    Ok(PiMultiple::new(coeff, m))
}

/// zeta_E(-k) = 2(1 - 2^(k+1)) B_{k+1}/(k+1), which equals E*_k.
pub fn euler_zeta_neg(k: u32) -> Rational {
    int(2) * (Rational::one() - pow2(k as i64 + 1)) * bernoulli(k as usize + 1) / int(k + 1)
}

/// Bernoulli-form closed value of `sum_{n>=1} (-1)^n/(2n-1)^(2k+1)`
/// (which is `-beta(2k+1)`).
pub fn eq20_alt_odd_sum(k: u32) -> Result<PiMultiple> {
    positive(k, "eq20_alt_odd_sum")?;
    let mut coeff = Rational::zero();
    for j in 0..k {
        let m = 2 * (k - j);
        let weight = pow2(m as i64) - int(2);
        coeff += sign(k) * weight * bernoulli(m as usize) / (fact(2 * j + 1) * fact(m) * pow2(2 * j as i64 + 2));
    }
    coeff -= sign(k) / (fact(2 * k + 1) * pow2(2 * k as i64 + 2));
    Ok(PiMultiple::new(coeff, 2 * k + 1))
}

/// Both sides of the Bernoulli–Euler identity
/// `sum_{j<k} (2^(2k-2j) - 2) B_{2k-2j} / ((2j+1)! (2k-2j)! 2^(2j+2))
///   = 1/((2k+1)! 2^(2k+2)) - E_{2k}/(2^(2k+2) (2k)!)`.
pub fn mixed_identity(k: u32) -> Result<(Rational, Rational)> {
    positive(k, "mixed_identity")?;
    let mut lhs = Rational::zero();
    for j in 0..k {
        let m = 2 * (k - j);
        lhs += (pow2(m as i64) - int(2)) * bernoulli(m as usize) / (fact(2 * j + 1) * fact(m) * pow2(2 * j as i64 + 2));
    }
    let scale = pow2(2 * k as i64 + 2);
    let rhs = (fact(2 * k + 1) * &scale).recip() - euler_second(2 * k as usize) / (scale * fact(2 * k));
    Ok((lhs, rhs))
}

/// Absolute residual of
/// `zeta(2n+1, 1/4) + 2^(2n) (1 - 2^(2n+1)) zeta(2n+1) = (-1)^n E_{2n} π^(2n+1) 2^(2n) / (2 (2n)!)`.
pub fn corollary2_residual(n: u32, prec: u32) -> Result<BigFloat> {
    positive(n, "corollary2_residual")?;
    if prec < 64 {
        return Err(crate::error::usage("corollary2_residual needs at least 64 bits"));
    }
    let wp = prec + 16;
    let s = BigFloat::from_int(2 * n + 1, wp);
    let quarter = BigFloat::one(wp).mul_pow2(-2);
    let hz = hurwitz_em(&s, &quarter, wp)?;
    let z = zeta_em(&s, wp)?;
    let factor: BigInt = (BigInt::one() << (2 * n)) * (BigInt::one() - (BigInt::one() << (2 * n + 1)));
    let lhs = hz.add_prec(&z.mul_prec(&BigFloat::from_int(factor, wp), wp), wp);
    let rhs = hurwitz_quarter_closed_form(n).to_bigfloat(wp);
    Ok(lhs.sub_prec(&rhs, prec).abs())
}

/// Right-hand side of the `zeta(2n+1, 1/4)` relation.
pub fn hurwitz_quarter_closed_form(n: u32) -> PiMultiple {
    let m = 2 * n;
    let coeff = sign(n) * euler_second(m as usize) * pow2(m as i64) / (int(2) * fact(m));
    PiMultiple::new(coeff, m + 1)
}

/// Coefficient sign helper for callers that assert sign patterns.
pub fn coeff_sign(v: &PiMultiple) -> i32 {
    if v.coeff.is_positive() {
        1
    } else if v.coeff.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn zeta_even_values() {
        assert_eq!(zeta_even(1).unwrap(), PiMultiple::new(rat(1, 6), 2));
        assert_eq!(zeta_even(2).unwrap(), PiMultiple::new(rat(1, 90), 4));
        assert_eq!(zeta_even(3).unwrap(), PiMultiple::new(rat(1, 945), 6));
        assert_eq!(zeta_even_via_euler(1).unwrap(), PiMultiple::new(rat(1, 6), 2));
        assert_eq!(zeta_even_via_euler(2).unwrap(), PiMultiple::new(rat(1, 90), 4));
        assert_eq!(zeta_even_via_euler(5).unwrap(), zeta_even(5).unwrap());
        assert!(zeta_even(0).is_err());
    }

    #[test]
    fn negative_arguments() {
        assert_eq!(zeta_neg(1).unwrap(), rat(-1, 12));
        assert_eq!(zeta_neg(2).unwrap(), rat(0, 1));
        assert_eq!(zeta_neg(3).unwrap(), rat(1, 120));
        assert_eq!(euler_zeta_neg(0), rat(1, 1));
        assert_eq!(euler_zeta_neg(3), rat(1, 4));
        assert_eq!(euler_zeta_neg(5), rat(-1, 2));
    }

    #[test]
    fn beta_and_lambda() {
        assert_eq!(beta_odd(0), PiMultiple::new(rat(1, 4), 1));
        assert_eq!(beta_odd(1), PiMultiple::new(rat(1, 32), 3));
        assert_eq!(beta_odd(2), PiMultiple::new(rat(5, 1536), 5));
        assert_eq!(lambda_even(1).unwrap(), PiMultiple::new(rat(1, 8), 2));
        assert_eq!(lambda_even(2).unwrap(), PiMultiple::new(rat(1, 96), 4));
        assert_eq!(lambda_even(3).unwrap(), zeta_even(3).unwrap().scale(&rat(63, 64)));
    }

    #[test]
    fn euler_zeta_even_values() {
        assert_eq!(euler_zeta_even(1).unwrap(), PiMultiple::new(rat(-1, 6), 2));
        assert_eq!(euler_zeta_even(2).unwrap(), PiMultiple::new(rat(-7, 360), 4));
        let eta_factor = rat(-2, 1) * (rat(1, 1) - pow2(-7));
        assert_eq!(euler_zeta_even(4).unwrap(), zeta_even(4).unwrap().scale(&eta_factor));
    }

    #[test]
    fn alt_odd_sum_and_mixed_identity() {
        assert_eq!(eq20_alt_odd_sum(1).unwrap(), PiMultiple::new(rat(-1, 32), 3));
        assert_eq!(eq20_alt_odd_sum(2).unwrap(), PiMultiple::new(rat(-5, 1536), 5));
        assert_eq!(eq20_alt_odd_sum(3).unwrap(), -beta_odd(3));
        let (l, r) = mixed_identity(1).unwrap();
        assert_eq!(l, rat(1, 24));
        assert_eq!(r, rat(1, 24));
        for k in [2, 10] {
            let (l, r) = mixed_identity(k).unwrap();
            assert_eq!(l, r, "k={k}");
        }
    }

    #[test]
    fn display() {
        assert_eq!(euler_zeta_even(2).unwrap().to_string(), "-7/360 * pi^4");
        assert_eq!(beta_odd(2).to_string(), "5/1536 * pi^5");
    }

    #[test]
    fn hurwitz_quarter_small() {
        let r = corollary2_residual(3, 128).unwrap();
        assert!(r.cmp_exact(&crate::arith::two_pow(-80, 64)).is_le());
        assert!(corollary2_residual(1, 32).is_err());
    }
}
