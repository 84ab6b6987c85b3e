//! π, exp, log and real powers on [`BigFloat`].
//!
//! Every routine works internally at the requested precision plus
//! [`GUARD_BITS`] and rounds once on return.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::bigfloat::BigFloat;
use crate::error::{domain, Result};

pub const GUARD_BITS: u32 = 16;

/// Lowest precision accepted by [`pi`].
pub const MIN_PI_PRECISION: u32 = 8;

/// `sum_k s^k / ((2k+1) n^(2k+1))` in fixed point with `bits` fraction bits,
/// where `s = -1` gives arctan(1/n) and `s = +1` gives artanh(1/n).
fn arc_inv_fixed(n: u64, bits: u32, alternate: bool) -> BigInt {
    let n2 = BigInt::from(n * n);
    let mut power = (BigInt::one() << bits as usize) / n;
    let mut sum = power.clone();
    let mut k: u64 = 1;
    loop {
        power /= &n2;
        if power.is_zero() {
            break;
        }
        let term = &power / (2 * k + 1);
        if alternate && k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
    }
    sum
}

fn cached(
    cell: &'static OnceLock<Mutex<HashMap<u32, BigFloat>>>,
    prec: u32,
    compute: impl FnOnce() -> BigFloat,
) -> BigFloat {
    let map = cell.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = map.lock().expect("constant cache poisoned").get(&prec) {
        return v.clone();
    }
    let v = compute();
    map.lock().expect("constant cache poisoned").insert(prec, v.clone());
    v
}

/// π by Machin's formula `4(4 atan(1/5) - atan(1/239))`.
pub fn pi(prec: u32) -> BigFloat {
    static CACHE: OnceLock<Mutex<HashMap<u32, BigFloat>>> = OnceLock::new();
    let prec = prec.max(MIN_PI_PRECISION);
    cached(&CACHE, prec, || {
        let bits = prec + GUARD_BITS;
        let v = (arc_inv_fixed(5, bits, true) * 4 - arc_inv_fixed(239, bits, true)) * 4;
        BigFloat::from_parts(v, -(bits as i64), prec)
    })
}

/// ln 2 as `2 artanh(1/3)`.
pub fn ln2(prec: u32) -> BigFloat {
    static CACHE: OnceLock<Mutex<HashMap<u32, BigFloat>>> = OnceLock::new();
    cached(&CACHE, prec, || {
        let bits = prec + GUARD_BITS;
        let v = arc_inv_fixed(3, bits, false) * 2;
        BigFloat::from_parts(v, -(bits as i64), prec)
    })
}

/// e^x. The argument must satisfy |x| < 2^40.
pub fn exp(x: &BigFloat, prec: u32) -> BigFloat {
    if x.is_zero() {
        return BigFloat::one(prec);
    }
    let xf = x.to_f64();
    assert!(xf.abs() < 1e12, "exp argument out of range");
    let k = (xf / std::f64::consts::LN_2).round() as i64;
    let halvings = ((prec as f64).sqrt() / 2.0).ceil() as i64 + 2;
    let wp = prec + GUARD_BITS + halvings as u32 + 64 - k.unsigned_abs().leading_zeros();

    let x = x.with_prec(wp + 64);
    let r = x.sub_prec(&ln2(wp + 64).mul_int(k), wp).mul_pow2(-halvings);

    let mut sum = BigFloat::one(wp);
    let mut term = BigFloat::one(wp);
    let mut i = 1i64;
    loop {
        term = term.mul_prec(&r, wp).div_int(i);
        if term.is_zero() || term.top().unwrap() < -(wp as i64) - 4 {
            break;
        }
        sum = sum.add_prec(&term, wp);
        i += 1;
    }
    for _ in 0..halvings {
        sum = sum.square();
    }
    sum.mul_pow2(k).with_prec(prec)
}

/// Natural logarithm; domain error for `x <= 0`.
pub fn log(x: &BigFloat, prec: u32) -> Result<BigFloat> {
    if !x.is_positive() {
        return Err(domain(format!("log of non-positive value {}", x.to_f64())));
    }
    let wp = prec + GUARD_BITS + 16;
    let top = x.top().unwrap();
    // x = m 2^e with m in [1/sqrt 2, sqrt 2)
    let mut e = top;
    let mut m = x.with_prec(wp + 64).mul_pow2(-top);
    if m.to_f64() < std::f64::consts::FRAC_1_SQRT_2 {
        m = m.mul_pow2(1);
        e -= 1;
    }
    let one = BigFloat::one(wp + 64);
    let num = m.sub_prec(&one, wp + 64);
    let z = num.div_prec(&m.add_prec(&one, wp + 64), wp);
    let z2 = z.square();
    let mut sum = z.clone();
    let mut power = z;
    let mut k = 1i64;
    if !sum.is_zero() {
        let stop = sum.top().unwrap() - wp as i64 - 4;
        loop {
            power = power.mul_prec(&z2, wp);
            let term = power.div_int(2 * k + 1);
            if term.is_zero() || term.top().unwrap() < stop {
                break;
            }
            sum = sum.add_prec(&term, wp);
            k += 1;
        }
    }
    let series = sum.mul_pow2(1);
    let scale = ln2(wp + 64).mul_int(e);
    Ok(scale.add_prec(&series, prec))
}

/// x^n by binary powering.
pub fn powi(x: &BigFloat, n: i64, prec: u32) -> BigFloat {
    let nbits = 64 - n.unsigned_abs().leading_zeros();
    let wp = prec + GUARD_BITS + 2 * nbits;
    let mut acc = BigFloat::one(wp);
    let mut base = x.with_prec(wp);
    let mut e = n.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul_prec(&base, wp);
        }
        e >>= 1;
        if e > 0 {
            base = base.square();
        }
    }
    if n < 0 {
        acc.recip().with_prec(prec)
    } else {
        acc.with_prec(prec)
    }
}

/// x^s = exp(s log x) for `x > 0`; integral `s` goes through [`powi`].
pub fn pow_real(x: &BigFloat, s: &BigFloat, prec: u32) -> Result<BigFloat> {
    if !x.is_positive() {
        return Err(domain(format!("power of non-positive base {}", x.to_f64())));
    }
    if let Some(n) = s.as_integer().and_then(|n| n.to_i64()).filter(|n| n.abs() < 1 << 20) {
        return Ok(powi(x, n, prec));
    }
    let lx = log(x, prec + GUARD_BITS + 8)?;
    let growth = (s.to_f64() * lx.to_f64()).abs().max(1.0).log2().ceil() as u32;
    let lx = log(x, prec + GUARD_BITS + growth + 8)?;
    let arg = s.with_prec(prec + GUARD_BITS + growth + 8).mul_prec(&lx, prec + GUARD_BITS + growth + 8);
    Ok(exp(&arg, prec))
}

/// |value - target|, relative to |target| when |target| >= 1.
pub fn residual(value: &BigFloat, target: &BigFloat, prec: u32) -> BigFloat {
    let diff = value.sub_prec(target, prec).abs();
    if target.abs().cmp_exact(&BigFloat::one(prec)).is_ge() {
        diff.div_prec(&target.abs(), prec)
    } else {
        diff
    }
}

/// `2^e` as an exact value tagged with `prec`.
pub fn two_pow(e: i64, prec: u32) -> BigFloat {
    BigFloat::one(prec).mul_pow2(e)
}
