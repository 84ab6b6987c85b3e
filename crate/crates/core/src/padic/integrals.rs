//! Fermionic and Volkenborn integrals as finite Riemann sums over
//! `0 <= x < p^N`, plus the shift and distribution identities.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use super::int::{check_odd_prime, prime_power, PadicInt};
use super::number::PadicNumber;
use crate::arith::rational::{int, rpow, valuation};
use crate::arith::Rational;
use crate::error::{usage, Error, Result};
use crate::powerseries::TruncatedSeries;
use crate::special_numbers::{bernoulli, euler_first};

/// Largest `p^N` the summation routines will walk.
pub const MAX_SUM_TERMS: u64 = 1 << 24;

fn sum_modulus(p: u64, depth: u32) -> Result<u64> {
    check_odd_prime(p)?;
    if depth == 0 {
        return Err(usage("depth must be positive"));
    }
    match p.checked_pow(depth) {
        Some(m) if m <= MAX_SUM_TERMS => Ok(m),
        _ => Err(usage(format!("{p}^{depth} exceeds the summation limit {MAX_SUM_TERMS}"))),
    }
}

fn pow_mod(x: u64, n: u32, m: u64) -> u64 {
    let (mut acc, mut b, mut e) = (1u128 % m as u128, x as u128 % m as u128, n);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        e >>= 1;
    }
    acc as u64
}

/// sum_{x < p^N} x^n (-1)^x mod p^N, with 0^0 = 1.
pub fn fermionic_sum(n: u32, p: u64, depth: u32) -> Result<PadicInt> {
    Ok(fermionic_moments(n, p, depth)?.pop().expect("nonempty"))
}

/// Fermionic sums for every moment `0..=max_n` in one pass.
pub fn fermionic_moments(max_n: u32, p: u64, depth: u32) -> Result<Vec<PadicInt>> {
    let m = sum_modulus(p, depth)?;
    let mut acc = vec![0u64; max_n as usize + 1];
    for x in 0..m {
        let mut pw = 1u64 % m;
        for a in acc.iter_mut() {
            *a = if x % 2 == 0 { (*a + pw) % m } else { (*a + m - pw) % m };
            pw = (pw as u128 * x as u128 % m as u128) as u64;
        }
    }
    acc.into_iter().map(|a| PadicInt::new(p, depth, a)).collect()
}

/// A Volkenborn Riemann sum `p^-N sum_{x < p^N} x^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolkenbornSum {
    pub moment: u32,
    pub p: u64,
    pub depth: u32,
    /// Digits guaranteed to agree with B_n: one fewer than `depth`, since
    /// the sum can carry a single extra power of p from a neighbouring
    /// Bernoulli term (p = 3, n = 5 is the first case).
    pub reported_depth: u32,
    pub exact: Rational,
    pub value: PadicNumber,
}

impl VolkenbornSum {
    /// Valuation of the exact sum minus `B_n`, `None` when they coincide.
    pub fn bernoulli_agreement(&self) -> Option<i64> {
        valuation(&(&self.exact - bernoulli(self.moment as usize)), self.p)
    }
}

pub fn volkenborn_sum(n: u32, p: u64, depth: u32) -> Result<VolkenbornSum> {
    let m = sum_modulus(p, depth)?;
    let mut total = BigInt::zero();
    for x in 0..m {
        total += BigInt::from(x).pow(n);
    }
    let exact = Rational::new(total, BigInt::from(m));
    if valuation(&exact, p).is_some_and(|v| v < -1) {
        return Err(Error::DepthInsufficient(format!("p^-N sum of x^{n} has valuation below -1")));
    }
    let reported_depth = depth - 1;
    let value = PadicNumber::with_precision(exact.clone(), p, reported_depth as i64)?;
    Ok(VolkenbornSum { moment: n, p, depth, reported_depth, exact, value })
}

/// Outcome of a congruence check mod p^N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftCheck {
    pub lhs: PadicInt,
    pub rhs: PadicInt,
    pub pass: bool,
}

impl ShiftCheck {
    pub fn difference_valuation(&self) -> super::int::PadicValuation {
        self.lhs.sub(&self.rhs).expect("same ring").valuation()
    }
}

/// 2 sum_{l<m} (-1)^(m-1-l) l^n + (-1)^m s, the m-fold shift of a fermionic moment.
fn shifted_moment(s: &PadicInt, n: u32, m: u64) -> Result<PadicInt> {
    let (p, depth) = (s.p(), s.depth());
    let modulus = s.modulus().to_u64().expect("bounded modulus");
    let mut tail = 0u64;
    for l in 0..m {
        let t = pow_mod(l, n, modulus);
        tail = if (m - 1 - l) % 2 == 0 { (tail + t) % modulus } else { (tail + modulus - t) % modulus };
    }
    let base = if m % 2 == 0 { s.clone() } else { s.neg() };
    base.add(&PadicInt::new(p, depth, 2 * tail as u128)?)
}

/// Checks sum_x (x+m)^n (-1)^x against the shift formula mod p^N.
pub fn fermionic_shift_check(n: u32, m: u64, p: u64, depth: u32) -> Result<ShiftCheck> {
    if m == 0 {
        return Err(usage("shift must be positive"));
    }
    let modulus = sum_modulus(p, depth)?;
    let mut acc = 0u64;
    for x in 0..modulus {
        let t = pow_mod(x + m, n, modulus);
        acc = if x % 2 == 0 { (acc + t) % modulus } else { (acc + modulus - t) % modulus };
    }
    let lhs = PadicInt::new(p, depth, acc)?;
    let rhs = shifted_moment(&fermionic_sum(n, p, depth)?, n, m)?;
    let pass = lhs == rhs;
    Ok(ShiftCheck { lhs, rhs, pass })
}

/// Applies `I(f_{k+1}) = 2 f_k(0) - I(f_k)` `m` times starting from the
/// fermionic moment, and compares with the closed m-shift form.
pub fn iterated_shift_check(n: u32, m: u64, p: u64, depth: u32) -> Result<ShiftCheck> {
    let s = fermionic_sum(n, p, depth)?;
    let mut cur = s.clone();
    for k in 0..m {
        let fk0 = PadicInt::new(p, depth, BigInt::from(k).pow(n) * 2)?;
        cur = fk0.sub(&cur)?;
    }
    let rhs = shifted_moment(&s, n, m)?;
    let pass = cur == rhs;
    Ok(ShiftCheck { lhs: cur, rhs, pass })
}

/// [n]_{-q} = (1 - (-q)^n) / (1 + q).
fn minus_q_int(q: &Rational, n: &BigUint) -> Result<Rational> {
    let one_plus = Rational::one() + q;
    if one_plus.is_zero() {
        return Err(Error::SingularParameter("q = -1 makes [x]_{-q} undefined".into()));
    }
    let e = n.to_i64().ok_or_else(|| usage("exponent too large"))?;
    let v = (Rational::one() - rpow(&-q, e)) / one_plus;
    if v.is_zero() {
        return Err(Error::SingularParameter(format!("[{n}]_(-q) vanishes")));
    }
    Ok(v)
}

/// Exact refinement check of the measure
/// `mu_{-q}(a + d p^N Z_p) = (-q)^a / [d p^N]_{-q}`: the `p` sub-balls of
/// the next level must carry the same total mass.
pub fn mu_minus_q_distribution_check(a: u64, d: u64, p: u64, depth: u32, q: &Rational) -> Result<bool> {
    check_odd_prime(p)?;
    if d == 0 || d % 2 == 0 {
        return Err(usage(format!("d must be odd and positive, got {d}")));
    }
    if d % p == 0 {
        return Err(usage(format!("d = {d} must be prime to p = {p}")));
    }
    let level = prime_power(p, depth) * d;
    if BigUint::from(a) >= level {
        return Err(usage(format!("a = {a} must be below d p^N = {level}")));
    }
    let next = &level * p;
    let neg_q = -q.clone();
    let mut lhs = Rational::zero();
    let denom_next = minus_q_int(q, &next)?;
    for i in 0..p {
        let e = BigUint::from(a) + &level * i;
        lhs += rpow(&neg_q, e.to_i64().ok_or_else(|| usage("exponent too large"))?) / &denom_next;
    }
    let rhs = rpow(&neg_q, a as i64) / minus_q_int(q, &level)?;
    Ok(lhs == rhs)
}

/// -sum_n (-1)^n a^(2n+1) E*_(2n+1) / (2n+1)!, the sine moment series.
pub fn tan_half_from_moments(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |k| {
        if k % 2 == 0 {
            return Rational::zero();
        }
        let n = (k - 1) / 2;
        let sign = if n % 2 == 0 { -1 } else { 1 };
        euler_first(k) * int(sign) / int(crate::arith::factorial(k as u64))
    })
}

/// sum_n (-1)^n a^(2n) B_(2n) / (2n)!, the cosine moment series under the
/// Volkenborn measure.
pub fn half_cot_from_moments(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |k| {
        if k % 2 == 1 {
            return Rational::zero();
        }
        let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
        bernoulli(k) * int(sign) / int(crate::arith::factorial(k as u64))
    })
}

/// Rescales `f(t)` to `f(t/2)`.
pub fn half_argument(s: &TruncatedSeries) -> TruncatedSeries {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    TruncatedSeries::from_fn(s.order(), |n| s.coeff(n) * rpow(&half, n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::padic::padic_of_rational;
    use crate::powerseries::ps_div;

    #[test]
    fn fermionic_examples() {
        assert_eq!(fermionic_sum(0, 3, 3).unwrap().to_u64(), Some(1));
        assert_eq!(fermionic_sum(1, 3, 2).unwrap().to_u64(), Some(4));
        assert_eq!(fermionic_sum(1, 3, 2).unwrap(), padic_of_rational(&euler_first(1), 3, 2).unwrap());
        assert_eq!(fermionic_sum(2, 3, 2).unwrap().to_u64(), Some(0));
    }

    #[test]
    fn fermionic_matches_direct_sum() {
        for n in 0..6u32 {
            let direct: i64 = (0..125i64).map(|x| if x % 2 == 0 { x.pow(n) } else { -x.pow(n) }).sum();
            assert_eq!(fermionic_sum(n, 5, 3).unwrap().to_integer(), BigInt::from(direct.rem_euclid(125)));
        }
    }

    #[test]
    fn volkenborn_examples() {
        let v = volkenborn_sum(1, 5, 4).unwrap();
        assert_eq!(&v.exact - rat(-1, 2), rat(625, 2));
        assert_eq!(v.bernoulli_agreement(), Some(4));
        assert_eq!(volkenborn_sum(0, 7, 3).unwrap().exact, rat(1, 1));
        assert!(volkenborn_sum(2, 5, 4).unwrap().bernoulli_agreement().unwrap() >= 4);
        // one digit of carry at p = 3, n = 5
        let w = volkenborn_sum(5, 3, 4).unwrap();
        assert_eq!(w.bernoulli_agreement(), Some(3));
        assert_eq!(w.reported_depth, 3);
    }

    #[test]
    fn shift_examples() {
        assert!(fermionic_shift_check(1, 2, 3, 3).unwrap().pass);
        for m in 1..=6 {
            assert!(fermionic_shift_check(0, m, 5, 2).unwrap().pass);
        }
        // m = 1: I(f_1) + I(f) = 2 f(0)
        for n in 0..6 {
            let c = fermionic_shift_check(n, 1, 3, 3).unwrap();
            let s = fermionic_sum(n, 3, 3).unwrap();
            let f0 = if n == 0 { 2 } else { 0 };
            assert_eq!(c.lhs.add(&s).unwrap().to_u64(), Some(f0));
        }
        assert!(iterated_shift_check(3, 4, 5, 2).unwrap().pass);
        assert!(fermionic_shift_check(1, 0, 3, 2).is_err());
    }

    #[test]
    fn distribution_examples() {
        assert!(mu_minus_q_distribution_check(0, 1, 3, 1, &rat(2, 1)).unwrap());
        assert!(mu_minus_q_distribution_check(2, 5, 3, 2, &rat(7, 3)).unwrap());
        assert!(mu_minus_q_distribution_check(4, 3, 5, 1, &rat(-3, 5)).unwrap());
        assert!(mu_minus_q_distribution_check(3, 1, 3, 2, &rat(1, 1)).unwrap());
        assert!(matches!(
            mu_minus_q_distribution_check(0, 1, 3, 1, &rat(-1, 1)),
            Err(Error::SingularParameter(_))
        ));
        assert!(mu_minus_q_distribution_check(9, 1, 3, 2, &rat(2, 1)).is_err());
        assert!(mu_minus_q_distribution_check(0, 3, 3, 2, &rat(2, 1)).is_err());
        assert!(mu_minus_q_distribution_check(0, 2, 3, 2, &rat(2, 1)).is_err());
    }

    #[test]
    fn trig_moment_series() {
        let order = 24;
        let sin = half_argument(&TruncatedSeries::sin(order));
        let cos = half_argument(&TruncatedSeries::cos(order));
        let tan = ps_div(&sin, &cos).unwrap();
        assert_eq!(tan_half_from_moments(order), tan);
        // (a/2) cot(a/2) = (a/2) cos / sin, cancelling one power of a
        let num = half_argument(&TruncatedSeries::cos(order)).scale(&rat(1, 2));
        let den = sin.div_t_pow(1).unwrap();
        let cot = ps_div(&num, &den).unwrap();
        let expected = half_cot_from_moments(order);
        assert_eq!(&cot.coeffs()[..order - 1], &expected.coeffs()[..order - 1]);
    }

    #[test]
    fn limits_are_enforced() {
        assert!(fermionic_sum(1, 7, 9).is_err());
        assert!(fermionic_sum(1, 2, 3).is_err());
    }
}
