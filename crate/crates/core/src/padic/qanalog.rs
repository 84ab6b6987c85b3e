//! q-integers, the p-adic logarithm, Carlitz q-Bernoulli numbers and the
//! q-zeta diagnostic.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::int::{check_odd_prime, padic_of_rational, prime_power, PadicInt};
use super::number::PadicNumber;
use crate::arith::rational::{int, rpow};
use crate::arith::{binomial, log, BigFloat, Rational};
use crate::error::{domain, Error, Result};
use crate::special_numbers::bernoulli;

/// A deformation parameter, real or p-adic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QRational {
    Real(Rational),
    Padic(PadicInt),
}

impl QRational {
    /// Positive real q.
    pub fn real(q: Rational) -> Result<Self> {
        if !q.is_positive() {
            return Err(domain(format!("real q must be positive, got {q}")));
        }
        Ok(QRational::Real(q))
    }

    /// p-adic q with |1 - q|_p < 1.
    pub fn padic(q: PadicInt) -> Result<Self> {
        if !(q.residue() % q.p()).is_one() {
            return Err(domain(format!("p-adic q must be 1 mod {}, got {}", q.p(), q)));
        }
        Ok(QRational::Padic(q))
    }

    pub fn padic_of(q: &Rational, p: u64, depth: u32) -> Result<Self> {
        Self::padic(padic_of_rational(q, p, depth)?)
    }

    /// [n]_q = (1 - q^n)/(1 - q) = 1 + q + ... + q^(n-1), exactly in either mode.
    pub fn q_int(&self, n: u64) -> QValue {
        match self {
            QRational::Real(q) => QValue::Real(q_int(q, n)),
            QRational::Padic(q) => {
                let mut acc = PadicInt::new(q.p(), q.depth(), 0).expect("valid ring");
                let one = PadicInt::new(q.p(), q.depth(), 1).expect("valid ring");
                for _ in 0..n {
                    acc = one.add(&q.mul(&acc).expect("same ring")).expect("same ring");
                }
                QValue::Padic(acc)
            }
        }
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QRational::Real(q) => write!(f, "{q}"),
            QRational::Padic(q) => write!(f, "{q}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QValue {
    Real(Rational),
    Padic(PadicInt),
}

/// [n]_q over the rationals.
pub fn q_int(q: &Rational, n: u64) -> Rational {
    let mut acc = Rational::zero();
    for _ in 0..n {
        acc = Rational::one() + q * acc;
    }
    acc
}

/// Iwasawa-free logarithm of a 1-unit: sum (-1)^(k+1) (u-1)^k / k mod p^N.
///
/// Each term is exact before reduction. The series stops at the first `k`
/// with `k v - floor(log_p k) >= N`, where `v = v_p(u - 1)`; every later term
/// is then divisible by `p^N`.
pub fn padic_log(u: &PadicInt, depth: u32) -> Result<PadicInt> {
    let p = u.p();
    if depth == 0 || depth > u.depth() {
        return Err(Error::DepthInsufficient(format!("log to depth {depth} from a depth {} argument", u.depth())));
    }
    let u = u.reduce(depth)?;
    let x: BigInt = u.to_integer() - 1;
    let x = x.mod_floor(&BigInt::from(prime_power(p, depth)));
    if !(&x % p).is_zero() {
        return Err(domain(format!("log needs u = 1 mod {p}, got {u}")));
    }
    let mut acc = PadicInt::new(p, depth, 0)?;
    if x.is_zero() {
        return Ok(acc);
    }
    let v = crate::arith::rational::int_valuation(&x, p) as i64;
    let mut power = BigInt::one();
    let mut k = 1u64;
    loop {
        let floor_log = (k as f64).log(p as f64).floor() as i64;
        if k as i64 * v - floor_log >= depth as i64 {
            break;
        }
        power *= &x;
        let mut term = Rational::new(power.clone(), BigInt::from(k));
        if k % 2 == 0 {
            term = -term;
        }
        acc = acc.add(&padic_of_rational(&term, p, depth)?)?;
        k += 1;
    }
    Ok(acc)
}

/// β_{m,q} in either mode.
#[derive(Clone, Debug, PartialEq)]
pub enum QBernoulli {
    Real(BigFloat),
    Padic(PadicNumber),
}

impl fmt::Display for QBernoulli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QBernoulli::Real(x) => write!(f, "{x}"),
            QBernoulli::Padic(x) => write!(f, "{x}"),
        }
    }
}

/// sum_{i=1}^m C(m,i) (-1)^i i / [i]_q.
fn bracket_tail(m: u32, q: &Rational) -> Result<Rational> {
    let mut acc = Rational::zero();
    for i in 1..=m as u64 {
        let qi = q_int(q, i);
        if qi.is_zero() {
            return Err(Error::SingularParameter(format!("[{i}]_q vanishes")));
        }
        let t = int(binomial(m as u64, i as i64) * i) / qi;
        if i % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    Ok(acc)
}

/// Carlitz q-Bernoulli number
/// `β_{m,q} = (1-q)^-m [ (q-1)/log q + sum_{i=1}^m C(m,i) (-1)^i i/[i]_q ]`.
///
/// Real mode returns a value rounded to `prec` bits; the bracket cancels to
/// `O((q-1)^m)`, so it is evaluated with `m log2(1/|q-1|)` extra bits. `q = 1`
/// returns the limit `B_m`. p-adic mode works at the depth of `q` and ignores
/// `prec`; the result carries its own absolute precision, about `N - 1 - m`.
pub fn carlitz_q_bernoulli(m: u32, q: &QRational, prec: u32) -> Result<QBernoulli> {
    match q {
        QRational::Real(q) => {
            if q.is_one() {
                return Ok(QBernoulli::Real(BigFloat::from_rational(&bernoulli(m as usize), prec)));
            }
            let dq = q - Rational::one();
            let loss = (-crate::arith::rational::to_f64(&dq.abs()).log2()).max(0.0).ceil() as u32;
            let wp = prec + m * (loss + 1) + 64;
            let lq = log(&BigFloat::from_rational(q, wp), wp)?;
            let lead = BigFloat::from_rational(&dq, wp).div_prec(&lq, wp);
            let tail = BigFloat::from_rational(&bracket_tail(m, q)?, wp);
            let scale = BigFloat::from_rational(&rpow(&(Rational::one() - q), -(m as i64)), wp);
            let beta = lead.add_prec(&tail, wp).mul_prec(&scale, prec);
            Ok(QBernoulli::Real(beta))
        }
        QRational::Padic(q) => {
            let (p, depth) = (q.p(), q.depth());
            let dq = q.sub(&PadicInt::new(p, depth, 1)?)?;
            if dq.is_zero() {
                return Err(Error::SingularParameter(format!("q = 1 mod {p}^{depth}; the limit is B_{m}")));
            }
            let lq = PadicNumber::from_padic_int(&padic_log(q, depth)?);
            let dq = PadicNumber::from_padic_int(&dq);
            let mut bracket = dq.div(&lq)?;
            let qv = PadicNumber::from_padic_int(q);
            let one = PadicNumber::exact(Rational::one(), p)?;
            let mut qi = PadicNumber::exact(Rational::zero(), p)?;
            for i in 1..=m as u64 {
                qi = one.add(&qv.mul(&qi)?)?;
                if qi.valuation().is_none() {
                    return Err(Error::SingularParameter(format!("[{i}]_q vanishes to the available depth")));
                }
                let c = PadicNumber::exact(int(binomial(m as u64, i as i64) * i), p)?;
                let t = c.div(&qi)?;
                bracket = if i % 2 == 0 { bracket.add(&t)? } else { bracket.sub(&t)? };
            }
            let mut scale = one.clone();
            let one_minus = one.sub(&qv)?;
            for _ in 0..m {
                scale = scale.mul(&one_minus)?;
            }
            Ok(QBernoulli::Padic(bracket.div(&scale)?))
        }
    }
}

/// `[p^N]_q^-1 sum_{x < p^N} [x]_q^m` for a p-integral `q = 1 mod p`
/// (`q = 1` gives the Volkenborn sum). The sum is accumulated mod
/// `p^(2N+2)` using `[x+1]_q = 1 + q [x]_q`.
pub fn q_bosonic_sum(m: u32, p: u64, depth: u32, q: &Rational) -> Result<PadicNumber> {
    check_odd_prime(p)?;
    let terms = p.checked_pow(depth).filter(|&t| t <= super::integrals::MAX_SUM_TERMS).ok_or_else(|| {
        crate::error::usage(format!("{p}^{depth} exceeds the summation limit"))
    })?;
    let work = 2 * depth + 2;
    let qr = padic_of_rational(q, p, work)?;
    if !(qr.residue() % p).is_one() {
        return Err(domain(format!("q must be 1 mod {p}")));
    }
    let modulus = prime_power(p, work);
    let qv = qr.residue().clone();
    let mut x_q = BigUint::zero();
    let mut acc = BigUint::zero();
    for _ in 0..terms {
        acc = (acc + x_q.modpow(&BigUint::from(m), &modulus)) % &modulus;
        x_q = (BigUint::one() + &qv * &x_q) % &modulus;
    }
    let num = PadicNumber::with_precision(int(BigInt::from(acc)), p, work as i64)?;
    let den = PadicNumber::with_precision(int(BigInt::from(x_q)), p, work as i64)?;
    if den.valuation().is_none() {
        return Err(Error::DepthInsufficient(format!("[{p}^{depth}]_q vanishes mod {p}^{work}")));
    }
    num.div(&den)
}

/// Both sides of the q-zeta relation at a non-positive integer.
#[derive(Clone, Debug, PartialEq)]
pub struct QZetaDiagnostic {
    pub k: u32,
    pub q: Rational,
    /// sum_{n>=1} q^n [n]_q^(k-1), summed in closed form.
    pub series_part: Rational,
    pub zeta_q: BigFloat,
    pub beta_over_k: BigFloat,
    /// |ζ_q(1-k) + β_{k,q}/k|.
    pub residual: BigFloat,
    /// The residual as an exact rational: the logarithmic parts of the two
    /// sides cancel identically.
    pub exact_residual: Rational,
}

/// sum_{n>=1} q^n [n]_q^(k-1) for 0 < q < 1, expanding [n]_q^(k-1) binomially
/// and summing each geometric series.
pub fn q_zeta_series_part(k: u32, q: &Rational) -> Result<Rational> {
    check_unit_interval(q)?;
    let mut acc = Rational::zero();
    for j in 0..k as u64 {
        let r = rpow(q, j as i64 + 1);
        let t = int(binomial(k as u64 - 1, j as i64)) * &r / (Rational::one() - &r);
        if j % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    Ok(acc * rpow(&(Rational::one() - q), 1 - k as i64))
}

fn check_unit_interval(q: &Rational) -> Result<()> {
    if !q.is_positive() || q >= &Rational::one() {
        return Err(domain(format!("q must lie in (0, 1), got {q}")));
    }
    Ok(())
}

/// Evaluates ζ_q(1-k) = sum_{n>=1} q^n [n]_q^(k-1) + (1-q)^(1-k) / (k log q)
/// and reports how far it is from -β_{k,q}/k. The two agree for `k >= 2`;
/// at `k = 1` they differ by exactly 1, the `n = 0` term `[0]_q^0` that the
/// series omits.
pub fn q_zeta_residual(k: u32, q: &Rational, prec: u32) -> Result<QZetaDiagnostic> {
    if k == 0 {
        return Err(domain("k must be positive"));
    }
    check_unit_interval(q)?;
    let wp = prec + 64;
    let series_part = q_zeta_series_part(k, q)?;
    let one_minus = Rational::one() - q;
    let lq = log(&BigFloat::from_rational(q, wp), wp)?;
    let pole = BigFloat::from_rational(&(rpow(&one_minus, 1 - k as i64) / int(k)), wp).div_prec(&lq, wp);
    let zeta_q = BigFloat::from_rational(&series_part, wp).add_prec(&pole, wp);
    let QBernoulli::Real(beta) = carlitz_q_bernoulli(k, &QRational::real(q.clone())?, wp)? else {
        unreachable!("real mode")
    };
    let beta_over_k = beta.div_int(k as i64);
    let residual = zeta_q.add_prec(&beta_over_k, wp).abs().with_prec(prec);
    let exact_residual =
        (&series_part + bracket_tail(k, q)? * rpow(&one_minus, -(k as i64)) / int(k)).abs();
    Ok(QZetaDiagnostic {
        k,
        q: q.clone(),
        series_part,
        zeta_q: zeta_q.with_prec(prec),
        beta_over_k: beta_over_k.with_prec(prec),
        residual,
        exact_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, residual};

    #[test]
    fn log_examples() {
        let one = PadicInt::new(5, 4, 1).unwrap();
        assert!(padic_log(&one, 4).unwrap().is_zero());
        let u = PadicInt::new(5, 4, 6).unwrap();
        let l = padic_log(&u, 4).unwrap();
        let l2 = padic_log(&u.mul(&u).unwrap(), 4).unwrap();
        assert_eq!(l.add(&l).unwrap(), l2);
        for p in [3u64, 5, 7, 11] {
            let v = padic_log(&PadicInt::new(p, 6, 1 + p).unwrap(), 6).unwrap().valuation();
            assert_eq!((v.value, v.at_least), (1, false));
        }
        assert!(padic_log(&PadicInt::new(5, 4, 2).unwrap(), 4).is_err());
    }

    #[test]
    fn log_is_additive() {
        let p = 7;
        let a = PadicInt::new(p, 5, 8).unwrap();
        let b = PadicInt::new(p, 5, 1 + 3 * 49).unwrap();
        let lhs = padic_log(&a.mul(&b).unwrap(), 5).unwrap();
        let rhs = padic_log(&a, 5).unwrap().add(&padic_log(&b, 5).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    fn real_beta(m: u32, q: Rational, prec: u32) -> BigFloat {
        match carlitz_q_bernoulli(m, &QRational::real(q).unwrap(), prec).unwrap() {
            QBernoulli::Real(x) => x,
            QBernoulli::Padic(_) => unreachable!(),
        }
    }

    #[test]
    fn beta_zero_is_log_ratio() {
        let q = rat(3, 2);
        let b = real_beta(0, q.clone(), 128);
        let lq = log(&BigFloat::from_rational(&q, 160), 160).unwrap();
        let expected = BigFloat::from_rational(&rat(1, 2), 160).div_prec(&lq, 128);
        assert!(residual(&b, &expected, 128).to_f64() < 1e-35);
    }

    #[test]
    fn beta_limits() {
        let eps = rat(1, 1_000_000);
        let b1 = real_beta(1, Rational::one() + &eps, 128).to_f64();
        assert!((b1 + 0.5).abs() < 2e-6);
        let b2 = real_beta(2, Rational::one() + &eps, 128).to_f64();
        assert!((b2 - 1.0 / 6.0).abs() < 2e-6);
        let b4 = real_beta(4, Rational::one(), 128);
        assert!(residual(&b4, &BigFloat::from_rational(&rat(-1, 30), 128), 128).to_f64() < 1e-35);
    }

    #[test]
    fn beta_small_closed_form() {
        // β_{1,q} = -1/log q - 1/(1-q)
        let q = rat(1, 2);
        let b = real_beta(1, q, 128);
        let l = log(&BigFloat::from_rational(&rat(1, 2), 160), 160).unwrap();
        let expected = BigFloat::one(160).div_prec(&l, 160).add_prec(&BigFloat::from_int(2, 160), 128);
        assert!(residual(&b, &(-expected), 128).to_f64() < 1e-35);
    }

    #[test]
    fn bosonic_matches_volkenborn_at_q_one() {
        for n in 0..5 {
            let b = q_bosonic_sum(n, 5, 3, &Rational::one()).unwrap();
            let v = super::super::integrals::volkenborn_sum(n, 5, 3).unwrap();
            assert!(b.agreement_with(&v.exact).unwrap() >= 4);
        }
    }

    #[test]
    fn bosonic_m_zero_targets_log_ratio() {
        let q = rat(6, 1);
        let b = q_bosonic_sum(0, 5, 4, &q).unwrap();
        let beta = carlitz_q_bernoulli(0, &QRational::padic_of(&q, 5, 4).unwrap(), 0).unwrap();
        let QBernoulli::Padic(beta) = beta else { unreachable!() };
        assert!(b.agreement(&beta).unwrap() >= 3);
    }

    #[test]
    fn bosonic_approaches_carlitz() {
        let q = rat(6, 1);
        let mut last = i64::MIN;
        for n in 2..=5 {
            let b = q_bosonic_sum(1, 5, n, &q).unwrap();
            let QBernoulli::Padic(beta) = carlitz_q_bernoulli(1, &QRational::padic_of(&q, 5, n).unwrap(), 0).unwrap()
            else {
                unreachable!()
            };
            let a = b.agreement(&beta).unwrap();
            assert!(a >= n as i64 - 2);
            assert!(a > last);
            last = a;
        }
    }

    #[test]
    fn q_int_modes() {
        let q = QRational::real(rat(2, 1)).unwrap();
        assert_eq!(q.q_int(4), QValue::Real(rat(15, 1)));
        let qp = QRational::padic_of(&rat(6, 1), 5, 3).unwrap();
        assert_eq!(qp.q_int(3), QValue::Padic(PadicInt::new(5, 3, 43).unwrap()));
        assert!(QRational::padic_of(&rat(2, 1), 5, 3).is_err());
        assert!(QRational::real(rat(-1, 2)).is_err());
    }

    #[test]
    fn zeta_q_diagnostic() {
        assert_eq!(q_zeta_series_part(1, &rat(1, 2)).unwrap(), rat(1, 1));
        let d1 = q_zeta_residual(1, &rat(1, 2), 128).unwrap();
        assert_eq!(d1.exact_residual, rat(1, 1));
        assert!((d1.residual.to_f64() - 1.0).abs() < 1e-30);
        for k in 2..=5 {
            for q in [rat(1, 2), rat(9, 10)] {
                let d = q_zeta_residual(k, &q, 128).unwrap();
                assert_eq!(d.exact_residual, Rational::zero());
                assert!(d.residual.to_f64() < 1e-30);
            }
        }
        assert!(q_zeta_residual(1, &rat(3, 2), 64).is_err());
    }

    #[test]
    fn series_part_matches_partial_sums() {
        let q = rat(1, 3);
        let k = 3;
        let mut partial = Rational::zero();
        for n in 1..200u64 {
            partial += rpow(&q, n as i64) * rpow(&q_int(&q, n), k - 1);
        }
        let closed = q_zeta_series_part(k as u32, &q).unwrap();
        assert!(crate::arith::rational::to_f64(&(closed - partial)).abs() < 1e-80);
    }
}
