use eulerzeta::arith::{binomial, pow_real, residual, two_pow, BigFloat};
use eulerzeta::series_eval::{dirichlet_beta_eval, eta_accel, euler_zeta_eval, lambda_eval, zeta_em};
use eulerzeta::zeta_values::{beta_odd, euler_zeta_even, lambda_even, zeta_even};

const BITS: u32 = 256;

fn tol(bits: u32) -> BigFloat {
    two_pow(-(bits as i64 - 56), 64)
}

#[test]
fn closed_forms_through_eight() {
    for n in 1..=8u32 {
        let s = BigFloat::from_int(2 * n, BITS + 32);
        let checks = [
            (zeta_em(&s, BITS).unwrap(), zeta_even(n).unwrap()),
            (euler_zeta_eval(&s, BITS).unwrap(), euler_zeta_even(n).unwrap()),
            (lambda_eval(&s, BITS).unwrap(), lambda_even(n).unwrap()),
            (dirichlet_beta_eval(&BigFloat::from_int(2 * n + 1, BITS + 32), BITS).unwrap(), beta_odd(n)),
        ];
        for (i, (v, exact)) in checks.iter().enumerate() {
            let r = residual(v, &exact.to_bigfloat(BITS), BITS);
            assert!(r.cmp_exact(&tol(BITS)).is_le(), "n={n} check {i}: {}", r.to_decimal(4));
        }
    }
}

#[test]
fn odd_lambda_sum_through_six() {
    for n in 1..=6u32 {
        let z = zeta_em(&BigFloat::from_int(2 * n, BITS + 32), BITS + 16).unwrap();
        let split = z.mul_prec(&BigFloat::one(BITS + 16).sub_prec(&two_pow(-2 * n as i64, BITS + 16), BITS + 16), BITS);
        let r = residual(&split, &lambda_even(n).unwrap().to_bigfloat(BITS), BITS);
        assert!(r.cmp_exact(&tol(BITS)).is_le());
    }
}

#[test]
fn doubling_precision_keeps_digits() {
    for s in [3u32, 5, 7] {
        for bits in [128u32, 256] {
            let lo = zeta_em(&BigFloat::from_int(s, 2 * bits + 32), bits).unwrap();
            let hi = zeta_em(&BigFloat::from_int(s, 2 * bits + 32), 2 * bits).unwrap();
            assert!(residual(&lo, &hi, bits).cmp_exact(&tol(bits)).is_le(), "s={s} bits={bits}");
        }
        let lo = dirichlet_beta_eval(&BigFloat::from_int(s, 600), 160).unwrap();
        let hi = dirichlet_beta_eval(&BigFloat::from_int(s, 600), 320).unwrap();
        assert!(residual(&lo, &hi, 160).cmp_exact(&tol(160)).is_le());
    }
}

/// eta(s) by the binomial Euler transform
/// sum_n 2^-(n+1) sum_{k<=n} (-1)^k C(n,k) (k+1)^-s, at doubled working
/// precision to absorb the inner cancellation.
fn eta_euler_transform(s: &BigFloat, bits: u32) -> BigFloat {
    let wp = 2 * bits + 64;
    let terms = bits as u64 + 24;
    let neg_s = -s.with_prec(wp);
    let powers: Vec<BigFloat> =
        (1..=terms + 1).map(|k| pow_real(&BigFloat::from_int(k, wp), &neg_s, wp).unwrap()).collect();
    let mut total = BigFloat::zero(wp);
    for n in 0..=terms {
        let mut inner = BigFloat::zero(wp);
        for k in 0..=n {
            let c = BigFloat::from_int(binomial(n, k as i64), wp);
            let t = c.mul_prec(&powers[k as usize], wp);
            inner = if k % 2 == 0 { inner.add_prec(&t, wp) } else { inner.sub_prec(&t, wp) };
        }
        total = total.add_prec(&inner.mul_pow2(-(n as i64) - 1), wp);
    }
    total.with_prec(bits)
}

#[test]
fn eta_half_against_euler_transform() {
    let bits = 160;
    let half = BigFloat::one(bits + 32).mul_pow2(-1);
    let fast = eta_accel(&half, bits).unwrap();
    let oracle = eta_euler_transform(&half, bits);
    assert!(residual(&fast, &oracle, bits).cmp_exact(&tol(bits)).is_le());
    assert!(fast.to_decimal(12).starts_with("6.0489864342"), "{}", fast.to_decimal(12));
}
