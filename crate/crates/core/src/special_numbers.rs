//! Bernoulli numbers, Euler numbers of the first and second kind and the
//! first-kind Euler polynomials, computed exactly by recurrence.
//!
//! Each sequence lives in a process-wide memo table that grows on demand
//! under a write lock; reads after growth only take the read lock.
//!
//! Conventions: `B_1 = -1/2` (from `t/(e^t - 1)`), `E*_n` are the
//! coefficients of `2/(e^t + 1)`, `E_n` those of `sech t`. The second-kind
//! recurrence gives `E_6 = -61`; the value is sometimes misprinted as `61`.

use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::rational::{int, rpow};
use crate::arith::{binomial, Rational};
use crate::error::{usage, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NumberKind {
    /// B_n
    Bernoulli,
    /// E*_n, first kind
    EulerFirst,
    /// E_n, second kind
    EulerSecond,
}

impl NumberKind {
    pub fn name(self) -> &'static str {
        match self {
            NumberKind::Bernoulli => "bernoulli",
            NumberKind::EulerFirst => "euler1",
            NumberKind::EulerSecond => "euler2",
        }
    }
}

impl fmt::Display for NumberKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NumberKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bernoulli" | "B" => Ok(NumberKind::Bernoulli),
            "euler1" | "euler_first" | "E_star" => Ok(NumberKind::EulerFirst),
            "euler2" | "euler_second" | "E_second" => Ok(NumberKind::EulerSecond),
            other => Err(usage(format!("unknown number kind `{other}`"))),
        }
    }
}

/// A prefix `values[0..=max_index]` of one of the sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberTable {
    pub kind: NumberKind,
    pub values: Vec<Rational>,
}

impl NumberTable {
    pub fn build(kind: NumberKind, max_index: usize) -> Self {
        let memo = memo_for(kind);
        memo.ensure(max_index);
        let values = memo.values.read().expect("number table poisoned")[..=max_index].to_vec();
        NumberTable { kind, values }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.values.get(n)
    }
}

struct Memo {
    values: RwLock<Vec<Rational>>,
    next: fn(&[Rational]) -> Rational,
}

impl Memo {
    fn new(next: fn(&[Rational]) -> Rational) -> Self {
        Memo { values: RwLock::new(vec![Rational::one()]), next }
    }

    fn ensure(&self, n: usize) {
        if self.values.read().expect("number table poisoned").len() > n {
            return;
        }
        let mut values = self.values.write().expect("number table poisoned");
        while values.len() <= n {
            let v = (self.next)(&values);
            values.push(v);
        }
    }

    fn get(&self, n: usize) -> Rational {
        self.ensure(n);
        self.values.read().expect("number table poisoned")[n].clone()
    }
}

/// B_n = -1/(n+1) sum_{k<n} C(n+1, k) B_k.
fn next_bernoulli(prev: &[Rational]) -> Rational {
    let n = prev.len() as u64;
    let mut acc = Rational::zero();
    for (k, b) in prev.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
        acc += b * int(binomial(n + 1, k as i64));
    }
    -acc / int(n + 1)
}

/// E*_n = -1/2 sum_{l<n} C(n, l) E*_l.
///
/// The form `E*_n = -sum_{l<=n} C(n,l) E*_l` sometimes quoted for this
/// sequence counts the `l = n` term on both sides; moving it over gives
/// the factor 1/2 used here.
fn next_euler_first(prev: &[Rational]) -> Rational {
    let n = prev.len() as u64;
    let mut acc = Rational::zero();
    for (l, e) in prev.iter().enumerate().filter(|(_, e)| !e.is_zero()) {
        acc += e * int(binomial(n, l as i64));
    }
    -acc / int(2)
}

/// E_{2n} = -sum_{k<n} C(2n, 2k) E_{2k}; odd indices vanish.
fn next_euler_second(prev: &[Rational]) -> Rational {
    let m = prev.len() as u64;
    if m % 2 == 1 {
        return Rational::zero();
    }
    let mut acc = Rational::zero();
    for k in (0..m).step_by(2) {
        acc += &prev[k as usize] * int(binomial(m, k as i64));
    }
    -acc
}

fn memo_for(kind: NumberKind) -> &'static Memo {
    static BERNOULLI: OnceLock<Memo> = OnceLock::new();
    static EULER_FIRST: OnceLock<Memo> = OnceLock::new();
    static EULER_SECOND: OnceLock<Memo> = OnceLock::new();
    match kind {
        NumberKind::Bernoulli => BERNOULLI.get_or_init(|| Memo::new(next_bernoulli)),
        NumberKind::EulerFirst => EULER_FIRST.get_or_init(|| Memo::new(next_euler_first)),
        NumberKind::EulerSecond => EULER_SECOND.get_or_init(|| Memo::new(next_euler_second)),
    }
}

/// Bernoulli number B_n.
pub fn bernoulli(n: usize) -> Rational {
    memo_for(NumberKind::Bernoulli).get(n)
}

/// First-kind Euler number E*_n.
pub fn euler_first(n: usize) -> Rational {
    memo_for(NumberKind::EulerFirst).get(n)
}

/// Second-kind Euler number E_n (an integer).
pub fn euler_second(n: usize) -> Rational {
    memo_for(NumberKind::EulerSecond).get(n)
}

pub fn number(kind: NumberKind, n: usize) -> Rational {
    memo_for(kind).get(n)
}

/// E*_n(x) = sum_k C(n, k) E*_k x^(n-k).
pub fn euler_poly(n: usize, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for k in 0..=n {
        let e = euler_first(k);
        if !e.is_zero() {
            acc += e * int(binomial(n as u64, k as i64)) * rpow(x, (n - k) as i64);
        }
    }
    acc
}

/// 2 sum_{l=0}^{n-1} (-1)^l l^k, with 0^0 = 1.
pub fn alt_power_sum(n: u64, k: u32) -> Rational {
    let mut acc = BigInt::zero();
    for l in 0..n {
        let term = BigInt::from(l).pow(k);
        if l % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    int(acc * 2)
}

/// sum_{l<=k} C(k, l) 2^l E*_l, which equals E_k.
pub fn second_from_first(k: usize) -> Rational {
    let mut acc = Rational::zero();
    for l in 0..=k {
        let e = euler_first(l);
        if !e.is_zero() {
            acc += e * int(binomial(k as u64, l as i64) << l);
        }
    }
    acc
}
