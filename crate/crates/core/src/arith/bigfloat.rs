//! Binary floating point with an explicit, per-value precision.
//!
//! A value is `mantissa * 2^exponent` where the mantissa carries at most
//! `precision` significant bits. Results of binary operations are rounded
//! to nearest at the smaller of the two operand precisions.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{int, rpow, Rational};

/// Extra bits kept when aligning addends.
const ADD_GUARD: i64 = 8;

#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

fn round_mantissa(mant: BigInt, exp: i64, prec: u32) -> (BigInt, i64) {
    let bits = mant.bits();
    if bits <= prec as u64 {
        return (mant, exp);
    }
    let shift = bits - prec as u64;
    let neg = mant.is_negative();
    let mag = mant.magnitude();
    let mut q = mag >> shift;
    if mag.bit(shift - 1) {
        q += 1u32;
    }
    let mut exp = exp + shift as i64;
    if q.bits() > prec as u64 {
        q >>= 1;
        exp += 1;
    }
    let q = BigInt::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, q);
    (q, exp)
}

impl BigFloat {
    /// Builds `mant * 2^exp` rounded to `prec` bits.
    pub fn from_parts(mant: BigInt, exp: i64, prec: u32) -> Self {
        assert!(prec >= 2, "precision must be at least 2 bits");
        if mant.is_zero() {
            return Self::zero(prec);
        }
        let (mant, exp) = round_mantissa(mant, exp, prec);
        BigFloat { mant, exp, prec }
    }

    pub fn zero(prec: u32) -> Self {
        BigFloat { mant: BigInt::zero(), exp: 0, prec }
    }

    pub fn one(prec: u32) -> Self {
        Self::from_int(1, prec)
    }

    pub fn from_int(n: impl Into<BigInt>, prec: u32) -> Self {
        Self::from_parts(n.into(), 0, prec)
    }

    /// Nearest representable value to an exact rational.
    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        if r.numer().is_zero() {
            return Self::zero(prec);
        }
        let shift = prec as i64 + 2 + r.denom().bits() as i64 - r.numer().bits() as i64;
        let num = if shift >= 0 { r.numer() << shift as usize } else { r.numer() >> (-shift) as usize };
        let (q, rem) = num.div_rem(r.denom());
        // fold the remainder in as a sticky bit below the rounding position
        let mant = (q << 1) + if rem.is_zero() { BigInt::zero() } else { BigInt::from(rem.signum()) };
        Self::from_parts(mant, -shift - 1, prec)
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// Re-rounds to `prec` bits (raising the precision never changes the value).
    pub fn with_prec(&self, prec: u32) -> Self {
        Self::from_parts(self.mant.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn abs(&self) -> Self {
        BigFloat { mant: self.mant.abs(), exp: self.exp, prec: self.prec }
    }

    /// Exponent `t` with `2^(t-1) <= |x| < 2^t`; `None` for zero.
    pub fn top(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.mant.bits() as i64)
        }
    }

    /// Exact multiplication by `2^e`.
    pub fn mul_pow2(&self, e: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        BigFloat { mant: self.mant.clone(), exp: self.exp + e, prec: self.prec }
    }

    pub fn add_prec(&self, other: &Self, prec: u32) -> Self {
        let (ta, tb) = match (self.top(), other.top()) {
            (None, _) => return other.with_prec(prec),
            (_, None) => return self.with_prec(prec),
            (Some(a), Some(b)) => (a, b),
        };
        let floor = ta.max(tb) - prec as i64 - ADD_GUARD;
        let e = self.exp.min(other.exp).max(floor);
        let align = |x: &BigFloat| {
            if x.exp >= e {
                &x.mant << (x.exp - e) as usize
            } else {
                &x.mant >> (e - x.exp) as usize
            }
        };
        Self::from_parts(align(self) + align(other), e, prec)
    }

    pub fn sub_prec(&self, other: &Self, prec: u32) -> Self {
        self.add_prec(&-other, prec)
    }

    pub fn mul_prec(&self, other: &Self, prec: u32) -> Self {
        Self::from_parts(&self.mant * &other.mant, self.exp + other.exp, prec)
    }

    /// Division; panics on a zero divisor.
    pub fn div_prec(&self, other: &Self, prec: u32) -> Self {
        assert!(!other.is_zero(), "BigFloat division by zero");
        if self.is_zero() {
            return Self::zero(prec);
        }
        let shift = (prec as i64 + 3 + other.mant.bits() as i64 - self.mant.bits() as i64).max(0);
        let num = &self.mant << shift as usize;
        let (q, rem) = num.div_rem(&other.mant);
        // q has at least prec + 2 bits, so it is nonzero
        let sticky = if rem.is_zero() { BigInt::zero() } else { BigInt::from(q.signum()) };
        let q = (q << 1) + sticky;
        Self::from_parts(q, self.exp - other.exp - shift - 1, prec)
    }

    pub fn mul_int(&self, n: i64) -> Self {
        Self::from_parts(&self.mant * n, self.exp, self.prec)
    }

    pub fn div_int(&self, n: i64) -> Self {
        self.div_prec(&BigFloat::from_int(n, 64), self.prec)
    }

    pub fn square(&self) -> Self {
        self.mul_prec(self, self.prec)
    }

    pub fn recip(&self) -> Self {
        BigFloat::one(self.prec).div_prec(self, self.prec)
    }

    /// Exact conversion to a rational.
    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            int(&self.mant << self.exp as usize)
        } else {
            Rational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    /// The integer value when the number is integral.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.exp >= 0 {
            return Some(&self.mant << self.exp as usize);
        }
        let r = self.to_rational();
        r.is_integer().then(|| r.to_integer())
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let drop = (bits - 60).max(0);
        let m = (&self.mant >> drop as usize).to_f64().unwrap_or(0.0);
        m * 2f64.powf((self.exp + drop) as f64)
    }

    /// Exact comparison.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &other.mant << (other.exp - e) as usize;
        a.cmp(&b)
    }

    /// `|self - other| <= tol`, evaluated exactly.
    pub fn within(&self, other: &Self, tol: &Self) -> bool {
        let diff = self.to_rational() - other.to_rational();
        diff.abs() <= tol.to_rational()
    }

    /// Decimal scientific notation with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let exact = self.to_rational().abs();
        let top = self.top().unwrap_or(0);
        let mut e10 = ((top - 1) as f64 * std::f64::consts::LOG10_2).floor() as i64;
        let ten = int(10);
        let lower = num_traits::pow(BigInt::from(10), digits - 1);
        let upper = &lower * 10;
        let scaled = loop {
            let s = &exact * rpow(&ten, digits as i64 - 1 - e10);
            let r = s.round().to_integer();
            if r >= upper {
                e10 += 1;
            } else if r < lower {
                e10 -= 1;
            } else {
                break r;
            }
        };
        let text = scaled.to_string();
        let sign = if self.is_negative() { "-" } else { "" };
        if digits == 1 {
            format!("{sign}{text}e{e10}")
        } else {
            format!("{sign}{}.{}e{e10}", &text[..1], &text[1..])
        }
    }

    /// Decimal digit count matching a binary precision.
    pub fn decimal_digits_for(bits: u32) -> usize {
        ((bits as f64 * 0.301).floor() as i64 - 2).max(1) as usize
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(Self::decimal_digits_for(self.prec)))
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat { mant: -&self.mant, exp: self.exp, prec: self.prec }
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $impl_fn:ident) => {
        impl $tr<&BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                self.$impl_fn(rhs, self.prec.min(rhs.prec))
            }
        }
        impl $tr<BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                (&self).$method(rhs)
            }
        }
        impl $tr<BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add_prec);
binop!(Sub, sub, sub_prec);
binop!(Mul, mul, mul_prec);
binop!(Div, div, div_prec);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn rational_round_trip_for_dyadics() {
        let x = BigFloat::from_rational(&rat(-13, 8), 64);
        assert_eq!(x.to_rational(), rat(-13, 8));
        assert_eq!(x.to_decimal(4), "-1.625e0");
    }

    #[test]
    fn one_third_is_correctly_rounded() {
        let x = BigFloat::from_rational(&rat(1, 3), 64);
        let err = (x.to_rational() - rat(1, 3)).abs();
        // half an ulp: ulp of 1/3 at 64 bits is 2^-65
        assert!(err <= crate::arith::rational::pow2(-66));
    }

    #[test]
    fn decimal_output() {
        let x = BigFloat::from_rational(&rat(1, 8), 64);
        assert_eq!(x.to_decimal(3), "1.25e-1");
        assert_eq!(BigFloat::from_int(1000, 32).to_decimal(2), "1.0e3");
        assert_eq!(BigFloat::zero(32).to_decimal(5), "0");
        assert_eq!(BigFloat::decimal_digits_for(256), 75);
    }

    #[test]
    fn cancellation_keeps_low_bits() {
        let a = BigFloat::from_rational(&rat(1, 1), 128).add_prec(&BigFloat::from_parts(BigInt::one(), -100, 128), 128);
        let b = BigFloat::one(128);
        let d = &a - &b;
        assert_eq!(d.to_rational(), crate::arith::rational::pow2(-100));
    }

    #[test]
    fn precision_is_min_of_operands() {
        let a = BigFloat::one(100);
        let b = BigFloat::one(80);
        assert_eq!((&a + &b).precision(), 80);
        assert_eq!((&a * &b).precision(), 80);
    }

    proptest! {
        #[test]
        fn field_ops_are_within_half_ulp(n1 in -10_000i64..10_000, d1 in 1i64..1000, n2 in -10_000i64..10_000, d2 in 1i64..1000) {
            let (x, y) = (rat(n1, d1), rat(n2, d2));
            let p = 96;
            let fx = BigFloat::from_rational(&x, p);
            let fy = BigFloat::from_rational(&y, p);
            let tol = |v: &Rational| v.abs() * crate::arith::rational::pow2(-(p as i64) + 3) + crate::arith::rational::pow2(-200);
            let s = (&fx + &fy).to_rational();
            prop_assert!((s.clone() - (&x + &y)).abs() <= tol(&(&x.abs() + &y.abs())));
            let m = (&fx * &fy).to_rational();
            prop_assert!((m - &x * &y).abs() <= tol(&(&x * &y)));
            if !y.is_zero() {
                let q = (&fx / &fy).to_rational();
                prop_assert!((q - &x / &y).abs() <= tol(&(&x / &y)));
            }
        }
    }
}
