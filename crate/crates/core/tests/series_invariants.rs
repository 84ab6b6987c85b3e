mod common;

use common::{bernoulli_table, euler_first_table, factorial, pow2, Q};
use eulerzeta::powerseries::{gf_coefficients, ps_div, GfKind, TruncatedSeries, DEFAULT_ORDER};
use eulerzeta::zeta_values::zeta_even;
use num_traits::{One, Zero};

fn fact(n: usize) -> Q {
    Q::from_integer(factorial(n as u64))
}

fn sign(n: usize) -> Q {
    if n % 2 == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

#[test]
fn tangent_forms_agree() {
    let order = DEFAULT_ORDER;
    let tan = ps_div(&TruncatedSeries::sin(order), &TruncatedSeries::cos(order)).unwrap();
    let b = bernoulli_table(order);
    let e = euler_first_table(order);
    for j in 0..order {
        if j % 2 == 0 {
            assert!(tan.coeff(j).is_zero());
            continue;
        }
        let n = (j + 1) / 2;
        let four = pow2(2 * n as i64);
        let bern = sign(n - 1) * &four * (&four - Q::one()) * &b[2 * n] / fact(2 * n);
        let eul = sign(n) * pow2(j as i64) * &e[j] / fact(j);
        assert_eq!(tan.coeff(j), &bern, "Bernoulli form at t^{j}");
        assert_eq!(tan.coeff(j), &eul, "Euler form at t^{j}");
    }
    let gf = gf_coefficients(&GfKind::Tan, order - 1).unwrap();
    assert_eq!(gf.as_slice(), tan.coeffs());
}

#[test]
fn cotangent_matches_zeta_even() {
    let order = DEFAULT_ORDER;
    let cot = gf_coefficients(&GfKind::XCotX, order).unwrap();
    assert_eq!(cot[0], Q::one());
    for m in 1..=order / 2 {
        let z = zeta_even(m as u32).unwrap();
        assert_eq!(cot[2 * m], -Q::from_integer(2.into()) * &z.coeff, "x^{}", 2 * m);
        assert!(cot[2 * m - 1].is_zero());
    }
}

#[test]
fn sec_is_one_over_cos() {
    let order = 30;
    let sec = gf_coefficients(&GfKind::Sec, order).unwrap();
    let euler = common::euler_second_table(order);
    for n in (0..=order).step_by(2) {
        let expected = sign(n / 2) * Q::from_integer(euler[n].clone()) / fact(n);
        assert_eq!(sec[n], expected);
    }
}
