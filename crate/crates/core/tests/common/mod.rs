//! Oracles shared by the integration tests. They use algorithms unrelated
//! to the library's own recurrences and generating functions.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// B_0..=B_n by the Akiyama–Tanigawa transform (gives B_1 = +1/2; flipped here).
pub fn bernoulli_table(n: usize) -> Vec<Q> {
    let mut out = Vec::with_capacity(n + 1);
    let mut a: Vec<Q> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        a.push(Q::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            a[j - 1] = Q::from_integer(BigInt::from(j)) * (&a[j - 1] - &a[j]);
        }
        out.push(a[0].clone());
    }
    if n >= 1 {
        out[1] = -out[1].clone();
    }
    out
}

/// Secant numbers |E_0|, |E_2|, ... via the Seidel boustrophedon triangle;
/// returns E_0..=E_n with signs and zero odd entries.
pub fn euler_second_table(n: usize) -> Vec<BigInt> {
    // zigzag numbers A_0..A_n
    let mut zig = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for k in 1..=n {
        let mut next = vec![BigInt::zero(); k + 1];
        if k % 2 == 1 {
            for j in 1..=k {
                next[j] = &next[j - 1] + &row[j - 1];
            }
            zig.push(next[k].clone());
        } else {
            for j in (0..k).rev() {
                next[j] = &next[j + 1] + &row[j];
            }
            zig.push(next[0].clone());
        }
        row = next;
    }
    (0..=n)
        .map(|k| {
            if k % 2 == 1 {
                BigInt::zero()
            } else if (k / 2) % 2 == 0 {
                zig[k].clone()
            } else {
                -zig[k].clone()
            }
        })
        .collect()
}

/// E*_n = 2 (1 - 2^(n+1)) B_(n+1) / (n+1), on top of [`bernoulli_table`].
pub fn euler_first_table(n: usize) -> Vec<Q> {
    let b = bernoulli_table(n + 1);
    (0..=n).map(|k| q(2, 1) * (Q::one() - pow2(k as i64 + 1)) * &b[k + 1] / q(k as i64 + 1, 1)).collect()
}

/// 2^e as a rational.
pub fn pow2(e: i64) -> Q {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Q::from_integer(p)
    } else {
        Q::new(BigInt::one(), p)
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

pub fn padic_valuation(r: &Q, p: u64) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    let count = |n: &BigInt| {
        let mut n = n.clone();
        let p = BigInt::from(p);
        let mut v = 0i64;
        while (&n % &p).is_zero() {
            n /= &p;
            v += 1;
        }
        v
    };
    Some(count(r.numer()) - count(r.denom()))
}
