//! Arbitrary-precision numeric evaluation of zeta-type series.
//!
//! Non-alternating sums (`zeta(s)`, `zeta(s, a)`) go through Euler–Maclaurin
//! summation; alternating sums (`eta`, `zeta_E`, Hurwitz-type `zeta_E`,
//! Dirichlet `beta`) through the Chebyshev-weighted acceleration of Cohen,
//! Rodriguez Villegas and Zagier, whose error after `n` terms is bounded by
//! `2 |a_0| / (3 + sqrt 8)^n` for completely monotone terms.
//!
//! Only `s > 0` (alternating) or `s > 1` (Euler–Maclaurin) is supported.
//! Values at negative integers come from the exact chain in
//! [`crate::zeta_values`], not from these series.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::elementary::GUARD_BITS;
use crate::arith::rational::{factorial, int};
use crate::arith::{exp, log, powi, BigFloat};
use crate::error::{domain, usage, Error, Result};
use crate::special_numbers::bernoulli;

pub const MIN_PRECISION: u32 = 64;

/// Upper bound on Euler–Maclaurin correction terms before giving up.
pub const MAX_EM_TERMS: usize = 400;

/// log2(3 + sqrt 8)
const LOG2_CVZ_RATE: f64 = 2.543_106_606_327_805;

/// Validated evaluation point `(s, a)` at a working precision.
#[derive(Clone, Debug)]
pub struct EvalRequest {
    pub s: BigFloat,
    pub a: BigFloat,
    pub precision: u32,
}

impl EvalRequest {
    pub fn new(s: BigFloat, a: BigFloat, precision: u32) -> Result<Self> {
        check_precision(precision)?;
        if !a.is_positive() {
            return Err(domain("shift a must be positive"));
        }
        Ok(EvalRequest { s, a, precision })
    }
}

fn check_precision(prec: u32) -> Result<()> {
    if prec < MIN_PRECISION {
        return Err(usage(format!("precision must be at least {MIN_PRECISION} bits, got {prec}")));
    }
    Ok(())
}

/// `base^(-s)`, with integral `s` taking the exact powering path.
fn inv_pow(base: &BigFloat, s: &BigFloat, s_int: Option<i64>, prec: u32) -> Result<BigFloat> {
    match s_int {
        Some(n) => Ok(powi(base, -n, prec)),
        None => {
            let l = log(base, prec + 8)?;
            let arg = -(s.with_prec(prec + 8).mul_prec(&l, prec + 8));
            Ok(exp(&arg, prec))
        }
    }
}

fn small_int(s: &BigFloat) -> Option<i64> {
    s.as_integer().and_then(|n| n.to_i64()).filter(|n| n.abs() < 1 << 20)
}

/// Number of accelerated terms for a target precision.
pub fn acceleration_terms(prec: u32) -> usize {
    ((prec + 16) as f64 / LOG2_CVZ_RATE).ceil() as usize
}

/// `sum_{k>=0} (-1)^k a_k` for a completely monotone `a_k = term(k, wp)`.
pub fn alternating_sum<F>(prec: u32, mut term: F) -> Result<BigFloat>
where
    F: FnMut(u64, u32) -> Result<BigFloat>,
{
    let n = acceleration_terms(prec) as i64;
    let wp = prec + 32 + (64 - (n as u64).leading_zeros());
    // d = T_n(3) = ((3 + sqrt 8)^n + (3 - sqrt 8)^n) / 2
    let (mut t0, mut t1) = (BigInt::one(), BigInt::from(3));
    for _ in 0..n {
        let t2 = &t1 * 6 - &t0;
        t0 = std::mem::replace(&mut t1, t2);
    }
    let d = t0;
    let mut b = BigInt::from(-1);
    let mut c = -d.clone();
    let mut sum = BigFloat::zero(wp);
    for k in 0..n {
        c = &b - &c;
        let a_k = term(k as u64, wp)?;
        sum = sum.add_prec(&BigFloat::from_int(c.clone(), wp).mul_prec(&a_k, wp), wp);
        let num = &b * (2 * (k + n) * (k - n));
        let den = BigInt::from((2 * k + 1) * (k + 1));
        let (q, r) = num.div_rem(&den);
        debug_assert!(r.is_zero(), "Chebyshev weight not integral");
        b = q;
    }
    Ok(sum.div_prec(&BigFloat::from_int(d, wp), prec))
}

/// Hurwitz zeta `sum_{n>=0} (n + a)^(-s)` by Euler–Maclaurin summation.
///
/// Sums `M = max(16, prec/2)` terms directly, then adds the integral tail,
/// the half-term and Bernoulli corrections until the next correction falls
/// below `2^-(prec+8)` relative to the running total.
pub fn hurwitz_em(s: &BigFloat, a: &BigFloat, prec: u32) -> Result<BigFloat> {
    check_precision(prec)?;
    if s.cmp_exact(&BigFloat::one(prec)).is_le() {
        return Err(domain("Euler-Maclaurin evaluation needs s > 1"));
    }
    if !a.is_positive() {
        return Err(domain("Hurwitz shift a must be positive"));
    }
    let wp = prec + 2 * GUARD_BITS;
    let s = s.with_prec(wp);
    let s_int = small_int(&s);
    let a = a.with_prec(wp);
    let cutoff = (prec as i64 / 2).max(16);

    let mut total = BigFloat::zero(wp);
    for n in 0..cutoff {
        let base = BigFloat::from_int(n, wp).add_prec(&a, wp);
        total = total.add_prec(&inv_pow(&base, &s, s_int, wp)?, wp);
    }
    let big_n = BigFloat::from_int(cutoff, wp).add_prec(&a, wp);
    let n_pow = inv_pow(&big_n, &s, s_int, wp)?;
    let s_minus_1 = s.sub_prec(&BigFloat::one(wp), wp);
    total = total.add_prec(&big_n.mul_prec(&n_pow, wp).div_prec(&s_minus_1, wp), wp);
    total = total.add_prec(&n_pow.mul_pow2(-1), wp);

    let n_sq = big_n.square();
    let mut power = n_pow.div_prec(&big_n, wp);
    let mut poch = s.clone();
    let mut prev_top = i64::MAX;
    for j in 1..=MAX_EM_TERMS {
        if j > 1 {
            power = power.div_prec(&n_sq, wp);
            let f1 = s.add_prec(&BigFloat::from_int(2 * j as i64 - 3, wp), wp);
            let f2 = s.add_prec(&BigFloat::from_int(2 * j as i64 - 2, wp), wp);
            poch = poch.mul_prec(&f1, wp).mul_prec(&f2, wp);
        }
        let coeff = bernoulli(2 * j) / int(factorial(2 * j as u64));
        let t = BigFloat::from_rational(&coeff, wp).mul_prec(&poch, wp).mul_prec(&power, wp);
        total = total.add_prec(&t, wp);
        let Some(t_top) = t.top() else {
            return Ok(total.with_prec(prec));
        };
        if t_top < total.top().unwrap_or(0) - prec as i64 - 8 {
            return Ok(total.with_prec(prec));
        }
        if t_top > prev_top {
            return Err(Error::Convergence(format!("Euler-Maclaurin corrections grow after {j} terms")));
        }
        prev_top = t_top;
    }
    Err(Error::Convergence(format!("Euler-Maclaurin cap of {MAX_EM_TERMS} terms reached")))
}

/// Riemann zeta for `s > 1`.
pub fn zeta_em(s: &BigFloat, prec: u32) -> Result<BigFloat> {
    hurwitz_em(s, &BigFloat::one(prec), prec)
}

fn check_alternating(s: &BigFloat, prec: u32) -> Result<()> {
    check_precision(prec)?;
    if !s.is_positive() {
        return Err(domain("alternating series evaluation needs s > 0"));
    }
    Ok(())
}

/// Dirichlet eta `sum_{n>=1} (-1)^(n-1) n^(-s)`.
pub fn eta_accel(s: &BigFloat, prec: u32) -> Result<BigFloat> {
    check_alternating(s, prec)?;
    let s_int = small_int(s);
    alternating_sum(prec, |k, wp| inv_pow(&BigFloat::from_int(k + 1, wp), &s.with_prec(wp), s_int, wp))
}

/// `zeta_E(s) = 2 sum_{n>=1} (-1)^n n^(-s) = -2 eta(s)`.
pub fn euler_zeta_eval(s: &BigFloat, prec: u32) -> Result<BigFloat> {
    Ok(eta_accel(s, prec)?.mul_int(-2))
}

/// `zeta_E(s, x) = 2 sum_{n>=0} (-1)^n (n + x)^(-s)`.
pub fn hurwitz_euler_eval(s: &BigFloat, x: &BigFloat, prec: u32) -> Result<BigFloat> {
    check_alternating(s, prec)?;
    if !x.is_positive() {
        return Err(domain("Hurwitz-type Euler zeta needs x > 0"));
    }
    let s_int = small_int(s);
    let sum = alternating_sum(prec, |k, wp| {
        let base = BigFloat::from_int(k, wp).add_prec(&x.with_prec(wp), wp);
        inv_pow(&base, &s.with_prec(wp), s_int, wp)
    })?;
    Ok(sum.mul_int(2))
}

/// Dirichlet beta `sum_{k>=0} (-1)^k (2k+1)^(-s)`.
pub fn dirichlet_beta_eval(s: &BigFloat, prec: u32) -> Result<BigFloat> {
    check_alternating(s, prec)?;
    let s_int = small_int(s);
    alternating_sum(prec, |k, wp| inv_pow(&BigFloat::from_int(2 * k + 1, wp), &s.with_prec(wp), s_int, wp))
}

/// Dirichlet lambda `sum over odd m of m^(-s) = 2^(-s) zeta(s, 1/2)`.
pub fn lambda_eval(s: &BigFloat, prec: u32) -> Result<BigFloat> {
    let half = BigFloat::one(prec).mul_pow2(-1);
    let h = hurwitz_em(s, &half, prec + 8)?;
    let scale = inv_pow(&BigFloat::from_int(2, prec + 8), s, small_int(s), prec + 8)?;
    Ok(h.mul_prec(&scale, prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_rational, pi, residual, two_pow};

    fn bf(s: &str, prec: u32) -> BigFloat {
        BigFloat::from_rational(&parse_rational(s).unwrap(), prec)
    }

    fn agrees(a: &BigFloat, b: &BigFloat, bits: i64) -> bool {
        residual(a, b, a.precision().max(b.precision())).cmp_exact(&two_pow(-bits, 64)).is_le()
    }

    #[test]
    fn chebyshev_weights_are_integral() {
        for prec in [64, 128, 256, 512] {
            let n = acceleration_terms(prec) as i64;
            let mut b = BigInt::from(-1);
            for k in 0..n {
                let num = &b * (2 * (k + n) * (k - n));
                let (q, r) = num.div_rem(&BigInt::from((2 * k + 1) * (k + 1)));
                assert!(r.is_zero());
                b = q;
            }
        }
        assert_eq!(acceleration_terms(256), 107);
    }

    #[test]
    fn zeta_closed_forms() {
        let p = 256;
        let pi = pi(p + 32);
        let z2 = zeta_em(&bf("2", p), p).unwrap();
        assert!(agrees(&z2, &powi(&pi, 2, p + 32).div_int(6), 200));
        let z4 = zeta_em(&bf("4", p), p).unwrap();
        assert!(agrees(&z4, &powi(&pi, 4, p + 32).div_int(90), 200));
        let z3 = zeta_em(&bf("3", 128), 128).unwrap();
        assert!(z3.to_decimal(15).starts_with("1.20205690315959"));
    }

    #[test]
    fn pi_squared_over_six_cross_check() {
        let p = 256;
        let lhs = powi(&pi(p), 2, p).div_int(6);
        let rhs = zeta_em(&bf("2", p), p).unwrap();
        assert!(agrees(&lhs, &rhs, 230));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(zeta_em(&bf("1", 128), 128), Err(Error::Domain(_))));
        assert!(matches!(hurwitz_em(&bf("2", 128), &bf("0", 128), 128), Err(Error::Domain(_))));
        assert!(matches!(eta_accel(&bf("0", 128), 128), Err(Error::Domain(_))));
        assert!(matches!(dirichlet_beta_eval(&bf("-1", 128), 128), Err(Error::Domain(_))));
        assert!(matches!(zeta_em(&bf("2", 32), 32), Err(Error::Usage(_))));
        assert!(EvalRequest::new(bf("2", 64), bf("0", 64), 64).is_err());
        assert!(EvalRequest::new(bf("2", 64), bf("1/4", 64), 64).is_ok());
    }

    #[test]
    fn hurwitz_special_cases() {
        let p = 128;
        let s = bf("5/2", p);
        let a = hurwitz_em(&s, &BigFloat::one(p), p).unwrap();
        let b = zeta_em(&s, p).unwrap();
        assert!(agrees(&a, &b, 120));
        let half = hurwitz_em(&bf("2", p), &bf("1/2", p), p).unwrap();
        assert!(agrees(&half, &powi(&pi(p), 2, p).mul_pow2(-1), 100));
    }

    #[test]
    fn eta_values() {
        let l2 = eta_accel(&bf("1", 128), 128).unwrap();
        assert!(agrees(&l2, &crate::arith::ln2(160), 100));
        let p = 256;
        let e2 = eta_accel(&bf("2", p), p).unwrap();
        assert!(agrees(&e2, &powi(&pi(p), 2, p).div_int(12), 200));
    }

    #[test]
    fn euler_zeta_values() {
        let p = 256;
        let pi = pi(p + 32);
        let z = euler_zeta_eval(&bf("2", p), p).unwrap();
        assert!(agrees(&z, &-powi(&pi, 2, p).div_int(6), 200));
        let z = euler_zeta_eval(&bf("4", p), p).unwrap();
        assert!(agrees(&z, &-powi(&pi, 4, p).mul_int(7).div_int(360), 200));
        let z3 = euler_zeta_eval(&bf("3", 128), 128).unwrap();
        let expect = zeta_em(&bf("3", 128), 128).unwrap().mul_int(-3).mul_pow2(-1);
        assert!(agrees(&z3, &expect, 100));
    }

    #[test]
    fn hurwitz_euler_values() {
        let p = 256;
        let s = bf("3", p);
        let at_one = hurwitz_euler_eval(&s, &BigFloat::one(p), p).unwrap();
        assert!(agrees(&at_one, &-euler_zeta_eval(&s, p).unwrap(), 200));
        let catalan = dirichlet_beta_eval(&bf("2", p), p).unwrap();
        let at_half = hurwitz_euler_eval(&bf("2", p), &bf("1/2", p), p).unwrap();
        assert!(agrees(&at_half, &catalan.mul_int(8), 200));
        let at_half = hurwitz_euler_eval(&bf("3", p), &bf("1/2", p), p).unwrap();
        assert!(agrees(&at_half, &powi(&pi(p), 3, p).mul_pow2(-1), 200));
    }

    #[test]
    fn beta_values() {
        let b1 = dirichlet_beta_eval(&bf("1", 128), 128).unwrap();
        assert!(agrees(&b1, &pi(128).mul_pow2(-2), 100));
        let b3 = dirichlet_beta_eval(&bf("3", 256), 256).unwrap();
        assert!(agrees(&b3, &powi(&pi(256), 3, 256).div_int(32), 200));
        let catalan = dirichlet_beta_eval(&bf("2", 128), 128).unwrap();
        assert!(catalan.to_decimal(20).starts_with("9.1596559417721"));
    }

    #[test]
    fn lambda_matches_zeta_split() {
        let p = 192;
        let s = bf("11/2", p);
        let lam = lambda_eval(&s, p).unwrap();
        let z = zeta_em(&s, p).unwrap();
        let factor = BigFloat::one(p).sub_prec(&crate::arith::pow_real(&bf("2", p), &-s.clone(), p).unwrap(), p);
        assert!(agrees(&lam, &z.mul_prec(&factor, p), 150));
    }
}
