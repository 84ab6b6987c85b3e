//! Truncated formal power series over exact rationals, and the generating
//! functions of the special-number sequences.
//!
//! Generating functions with a removable singularity at `t = 0`
//! (`t/(e^t - 1)`, `x cot x`) are built by cancelling the explicit factor of
//! `t` from numerator and denominator before dividing.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::rational::{factorial, int, rpow};
use crate::arith::{parse_rational, Rational};
use crate::error::{usage, Error, Result};

/// Order used by the self-tests and the verification suites.
pub const DEFAULT_ORDER: usize = 40;

/// Power series truncated below `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series with the given leading coefficients, zero-padded or cut to `order`.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        TruncatedSeries { coeffs: (0..order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    /// Exclusive truncation degree.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// e^(a t).
    pub fn exp_scaled(a: &Rational, order: usize) -> Self {
        Self::from_fn(order, |n| rpow(a, n as i64) / int(factorial(n as u64)))
    }

    pub fn exp(order: usize) -> Self {
        Self::exp_scaled(&Rational::one(), order)
    }

    pub fn sin(order: usize) -> Self {
        Self::from_fn(order, |n| match n % 4 {
            1 => int(factorial(n as u64)).recip(),
            3 => -int(factorial(n as u64)).recip(),
            _ => Rational::zero(),
        })
    }

    pub fn cos(order: usize) -> Self {
        Self::from_fn(order, |n| match n % 4 {
            0 => int(factorial(n as u64)).recip(),
            2 => -int(factorial(n as u64)).recip(),
            _ => Rational::zero(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_orders(self, other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_orders(self, other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    /// Divides by `t^k`; the `k` lowest coefficients must vanish. The order
    /// is preserved by zero-filling the top, so the result is only exact
    /// below `order - k`.
    pub fn div_t_pow(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(usage(format!("series has nonzero terms below t^{k}")));
        }
        Ok(Self::new(self.coeffs[k.min(self.order())..].to_vec(), self.order()))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order())
    }
}

fn check_orders(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<()> {
    if a.order() != b.order() {
        return Err(usage(format!("series orders differ: {} vs {}", a.order(), b.order())));
    }
    Ok(())
}

/// Cauchy product truncated at the common order.
pub fn ps_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    check_orders(a, b)?;
    let order = a.order();
    let mut out = vec![Rational::zero(); order];
    for (i, ai) in a.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (j, bj) in b.coeffs[..order - i].iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    Ok(TruncatedSeries { coeffs: out })
}

/// Quotient `q` with `q * b = a` through the truncation order.
pub fn ps_div(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    check_orders(a, b)?;
    let order = a.order();
    if order == 0 {
        return Ok(a.clone());
    }
    let b0 = &b.coeffs[0];
    if b0.is_zero() {
        return Err(Error::SingularDivision);
    }
    let inv = b0.recip();
    let mut q: Vec<Rational> = Vec::with_capacity(order);
    for n in 0..order {
        let mut acc = a.coeffs[n].clone();
        for k in 0..n {
            let bk = &b.coeffs[n - k];
            if !bk.is_zero() && !q[k].is_zero() {
                acc -= &q[k] * bk;
            }
        }
        q.push(acc * &inv);
    }
    Ok(TruncatedSeries { coeffs: q })
}

/// Generating functions known to [`gf_coefficients`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GfKind {
    /// t/(e^t - 1)
    Bernoulli,
    /// 2/(e^t + 1)
    EulerFirst,
    /// 2 e^(x t)/(e^t + 1) at a concrete rational x
    EulerFirstPoly(Rational),
    /// 2 e^t/(e^(2t) + 1) = sech t
    EulerSecond,
    Sec,
    Tan,
    /// x cot x
    XCotX,
}

impl FromStr for GfKind {
    type Err = Error;

    /// Accepts the snake_case names; the polynomial kind is written
    /// `euler_first_poly:<rational>`.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "bernoulli" => GfKind::Bernoulli,
            "euler_first" => GfKind::EulerFirst,
            "euler_second" => GfKind::EulerSecond,
            "sec" => GfKind::Sec,
            "tan" => GfKind::Tan,
            "x_cot_x" => GfKind::XCotX,
            other => match other.strip_prefix("euler_first_poly:") {
                Some(x) => GfKind::EulerFirstPoly(parse_rational(x)?),
                None => return Err(usage(format!("unknown generating function `{other}`"))),
            },
        })
    }
}

impl GfKind {
    /// Whether [`gf_coefficients`] multiplies the raw coefficient by `n!`.
    pub fn is_factorial_scaled(&self) -> bool {
        matches!(self, GfKind::Bernoulli | GfKind::EulerFirst | GfKind::EulerFirstPoly(_) | GfKind::EulerSecond)
    }

    /// The truncated series itself, through `t^order` inclusive.
    pub fn series(&self, order: usize) -> Result<TruncatedSeries> {
        let len = order + 1;
        let two = int(2);
        match self {
            GfKind::Bernoulli => {
                let denom = TruncatedSeries::exp(len + 1).sub(&TruncatedSeries::one(len + 1))?.div_t_pow(1)?;
                let denom = TruncatedSeries::new(denom.into_coeffs(), len);
                ps_div(&TruncatedSeries::one(len), &denom)
            }
            GfKind::EulerFirst => {
                let denom = TruncatedSeries::exp(len).add(&TruncatedSeries::one(len))?;
                ps_div(&TruncatedSeries::one(len).scale(&two), &denom)
            }
            GfKind::EulerFirstPoly(x) => {
                let first = GfKind::EulerFirst.series(order)?;
                ps_mul(&first, &TruncatedSeries::exp_scaled(x, len))
            }
            GfKind::EulerSecond => {
                let num = TruncatedSeries::exp(len).scale(&two);
                let denom = TruncatedSeries::exp_scaled(&two, len).add(&TruncatedSeries::one(len))?;
                ps_div(&num, &denom)
            }
            GfKind::Sec => ps_div(&TruncatedSeries::one(len), &TruncatedSeries::cos(len)),
            GfKind::Tan => ps_div(&TruncatedSeries::sin(len), &TruncatedSeries::cos(len)),
            GfKind::XCotX => {
                let sin_over_x = TruncatedSeries::sin(len + 1).div_t_pow(1)?;
                let sin_over_x = TruncatedSeries::new(sin_over_x.into_coeffs(), len);
                ps_div(&TruncatedSeries::cos(len), &sin_over_x)
            }
        }
    }
}

/// Coefficients at indices `0..=order`; the number-sequence kinds are
/// returned `n!`-scaled.
pub fn gf_coefficients(kind: &GfKind, order: usize) -> Result<Vec<Rational>> {
    if order < 1 {
        return Err(usage("generating-function order must be at least 1"));
    }
    let series = kind.series(order)?;
    let scaled = kind.is_factorial_scaled();
    Ok(series
        .into_coeffs()
        .into_iter()
        .enumerate()
        .map(|(n, c)| if scaled { c * int(factorial(n as u64)) } else { c })
        .collect())
}
