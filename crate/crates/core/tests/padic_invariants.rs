mod common;

use common::{bernoulli_table, euler_first_table, padic_valuation, q};
use eulerzeta::padic::{
    carlitz_q_bernoulli, fermionic_moments, fermionic_shift_check, fermionic_sum, iterated_shift_check,
    padic_log, padic_of_rational, q_bosonic_sum, volkenborn_sum, PadicInt, QBernoulli, QRational,
};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn fermionic_against_bridge_oracle() {
    let e = euler_first_table(10);
    for p in [3u64, 5, 7] {
        for depth in 1..=5 {
            let sums = fermionic_moments(10, p, depth).unwrap();
            for n in 0..=10 {
                let target = padic_of_rational(&e[n], p, depth).unwrap();
                assert_eq!(sums[n], target, "p={p} n={n} N={depth}");
            }
        }
    }
}

#[test]
fn volkenborn_loses_at_most_one_digit() {
    let b = bernoulli_table(6);
    for p in [3u64, 5, 7] {
        for n in 0..=6u32 {
            for depth in 1..=5 {
                let v = volkenborn_sum(n, p, depth).unwrap();
                let a = padic_valuation(&(&v.exact - &b[n as usize]), p);
                assert!(a.is_none_or(|a| a >= depth as i64 - 1), "p={p} n={n} N={depth}");
                let lossy = a.is_some_and(|a| a < depth as i64);
                assert_eq!(lossy, p == 3 && n == 5, "p={p} n={n} N={depth}");
            }
        }
    }
}

#[test]
fn shift_grid_and_iteration() {
    for p in [3u64, 5] {
        for depth in 1..=4 {
            for n in 0..=8 {
                for m in 1..=4 {
                    assert!(fermionic_shift_check(n, m, p, depth).unwrap().pass);
                    assert!(iterated_shift_check(n, m, p, depth).unwrap().pass);
                }
            }
        }
    }
}

#[test]
fn bosonic_sum_converges_to_carlitz() {
    let qq = q(6, 1);
    for m in 0..=3u32 {
        let mut prev = i64::MIN;
        for depth in 2..=6 {
            let bos = q_bosonic_sum(m, 5, depth, &qq).unwrap();
            let QBernoulli::Padic(beta) = carlitz_q_bernoulli(m, &QRational::padic_of(&qq, 5, depth).unwrap(), 0).unwrap()
            else {
                unreachable!()
            };
            let a = bos.agreement(&beta).unwrap();
            assert!(a >= depth as i64 - m as i64 - 1);
            assert!(a >= prev);
            prev = a;
        }
    }
}

proptest! {
    #[test]
    fn of_rational_is_a_ring_map(a in -500i64..500, b in 1i64..60, c in -500i64..500, d in 1i64..60) {
        let p = 7u64;
        prop_assume!(b % 7 != 0 && d % 7 != 0);
        let x = q(a, b);
        let y = q(c, d);
        let px = padic_of_rational(&x, p, 4).unwrap();
        let py = padic_of_rational(&y, p, 4).unwrap();
        prop_assert_eq!(padic_of_rational(&(&x + &y), p, 4).unwrap(), px.add(&py).unwrap());
        prop_assert_eq!(padic_of_rational(&(&x * &y), p, 4).unwrap(), px.mul(&py).unwrap());
    }

    #[test]
    fn log_is_a_homomorphism(a in 0u64..125, b in 0u64..125, p in prop::sample::select(vec![3u64, 5, 7])) {
        let depth = 5;
        let u = PadicInt::new(p, depth, BigInt::from(1 + p * a)).unwrap();
        let w = PadicInt::new(p, depth, BigInt::from(1 + p * b)).unwrap();
        let lhs = padic_log(&u.mul(&w).unwrap(), depth).unwrap();
        let rhs = padic_log(&u, depth).unwrap().add(&padic_log(&w, depth).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fermionic_reduces_consistently(n in 0u32..8, p in prop::sample::select(vec![3u64, 5])) {
        let deep = fermionic_sum(n, p, 4).unwrap();
        let shallow = fermionic_sum(n, p, 2).unwrap();
        prop_assert_eq!(deep.reduce(2).unwrap(), shallow);
    }
}
