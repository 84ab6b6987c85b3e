//! The verification suites behind `verify`. Each suite is a list of jobs;
//! jobs run on the rayon pool and their cases are sorted by id afterwards,
//! so the report never depends on completion order.

use std::collections::BTreeSet;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::report::{Case, ConfigEcho, Diagnostic, VerificationReport};
use crate::arith::rational::{factorial, int, pow2, rpow};
use crate::arith::{binomial, log, pi, pow_real, rat, residual, two_pow, BigFloat, Rational};
use crate::error::{usage, Error, Result};
use crate::padic::{
    carlitz_q_bernoulli, check_odd_prime, fermionic_moments, fermionic_shift_check, iterated_shift_check,
    mu_minus_q_distribution_check, padic_log, padic_of_rational, q_bosonic_sum, q_zeta_residual, volkenborn_sum,
    PadicInt, QBernoulli, QRational,
};
use crate::powerseries::{gf_coefficients, ps_div, ps_mul, GfKind, TruncatedSeries};
use crate::series_eval::{
    dirichlet_beta_eval, eta_accel, euler_zeta_eval, hurwitz_euler_eval, lambda_eval, zeta_em, MIN_PRECISION,
};
use crate::special_numbers::{
    alt_power_sum, bernoulli, euler_first, euler_poly, euler_second, second_from_first,
};
use crate::zeta_values::{
    beta_odd, coeff_sign, hurwitz_quarter_closed_form, corollary2_residual, euler_zeta_even, euler_zeta_neg,
    eq20_alt_odd_sum, lambda_even, mixed_identity, zeta_even, zeta_even_via_euler, zeta_neg, PiMultiple,
};

/// Every library operation a full run is expected to exercise.
pub const ALL_OPS: &[&str] = &[
    "binomial",
    "pi",
    "log",
    "pow_real",
    "ps_mul",
    "ps_div",
    "gf_coefficients",
    "bernoulli",
    "euler_first",
    "euler_second",
    "euler_poly",
    "alt_power_sum",
    "second_from_first",
    "zeta_even",
    "zeta_even_via_euler",
    "zeta_neg",
    "beta_odd",
    "lambda_even",
    "euler_zeta_even",
    "euler_zeta_neg",
    "eq20_alt_odd_sum",
    "mixed_identity",
    "corollary2_residual",
    "zeta_em",
    "hurwitz_em",
    "eta_accel",
    "euler_zeta_eval",
    "hurwitz_euler_eval",
    "dirichlet_beta_eval",
    "padic_of_rational",
    "fermionic_sum",
    "volkenborn_sum",
    "fermionic_shift_check",
    "mu_minus_q_distribution_check",
    "padic_log",
    "carlitz_q_bernoulli",
    "q_bosonic_sum",
    "q_zeta_residual",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Exact,
    Numeric,
    Padic,
    Q,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Exact => "exact",
            Suite::Numeric => "numeric",
            Suite::Padic => "padic",
            Suite::Q => "q",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "exact" => Suite::Exact,
            "numeric" => Suite::Numeric,
            "padic" => Suite::Padic,
            "q" => Suite::Q,
            "all" => Suite::All,
            _ => return Err(usage(format!("unknown suite `{s}`"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub bits: u32,
    pub max_index: u32,
    pub primes: Vec<u64>,
    pub depth: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { bits: 256, max_index: 30, primes: vec![3, 5, 7], depth: 5 }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.bits < MIN_PRECISION {
            return Err(usage(format!("--bits must be at least {MIN_PRECISION}")));
        }
        if self.max_index == 0 || self.max_index > 200 {
            return Err(usage("--max-index must lie in 1..=200"));
        }
        if self.depth == 0 || self.depth > 8 {
            return Err(usage("--depth must lie in 1..=8"));
        }
        if self.primes.is_empty() {
            return Err(usage("--p needs at least one prime"));
        }
        for &p in &self.primes {
            check_odd_prime(p)?;
            if p > 97 {
                return Err(usage(format!("prime {p} is too large for the summation grid")));
            }
        }
        Ok(())
    }

    fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            precision_bits: self.bits,
            max_index: self.max_index,
            primes: self.primes.clone(),
            depths: (1..=self.depth).collect(),
        }
    }

    fn tolerance(&self) -> BigFloat {
        two_pow(-(self.bits as i64 - 56), 64)
    }

    fn digits(&self) -> usize {
        BigFloat::decimal_digits_for(self.bits)
    }
}

enum Output {
    Cases(Vec<Case>),
    Diagnostics(Vec<Diagnostic>),
}

type Job = Box<dyn Fn(&VerifyConfig) -> Result<Output> + Send + Sync>;

fn job(name: String, f: impl Fn(&VerifyConfig) -> Result<Vec<Case>> + Send + Sync + 'static) -> (String, Job) {
    (name, Box::new(move |c| f(c).map(Output::Cases)))
}

fn diag_job(name: String, f: impl Fn(&VerifyConfig) -> Result<Vec<Diagnostic>> + Send + Sync + 'static) -> (String, Job) {
    (name, Box::new(move |c| f(c).map(Output::Diagnostics)))
}

/// `module.op.k=007`-style identifiers.
fn id(base: &str, params: &[(&str, i64)]) -> String {
    let mut s = base.to_string();
    for (k, v) in params {
        if *v < 0 {
            s.push_str(&format!(".{k}=-{:03}", v.unsigned_abs()));
        } else {
            s.push_str(&format!(".{k}={v:03}"));
        }
    }
    s
}

/// Runs a suite and assembles its report.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<VerificationReport> {
    config.validate()?;
    let mut jobs = Vec::new();
    if matches!(suite, Suite::Exact | Suite::All) {
        jobs.extend(exact_jobs(config));
    }
    if matches!(suite, Suite::Numeric | Suite::All) {
        jobs.extend(numeric_jobs(config));
    }
    if matches!(suite, Suite::Padic | Suite::All) {
        jobs.extend(padic_jobs(config));
    }
    if matches!(suite, Suite::Q | Suite::All) {
        jobs.extend(q_jobs(config));
    }
    let outputs: Vec<Output> = jobs
        .par_iter()
        .map(|(name, f)| {
            f(config).unwrap_or_else(|e| {
                Output::Cases(vec![Case {
                    id: name.clone(),
                    description: "job failed before producing cases".into(),
                    lhs: String::new(),
                    rhs: String::new(),
                    residual: format!("error: {e}"),
                    tolerance: None,
                    pass: false,
                    ops: Vec::new(),
                }])
            })
        })
        .collect();
    let mut cases = Vec::new();
    let mut diagnostics = Vec::new();
    for o in outputs {
        match o {
            Output::Cases(c) => cases.extend(c),
            Output::Diagnostics(d) => diagnostics.extend(d),
        }
    }
    Ok(VerificationReport::new(suite.name(), config.echo(), cases, diagnostics))
}

/// Operations exercised by a report's cases and diagnostics.
pub fn coverage(report: &VerificationReport) -> BTreeSet<&'static str> {
    report.cases.iter().flat_map(|c| c.ops.iter().copied()).chain(report.diagnostics.iter().flat_map(|d| d.ops.iter().copied())).collect()
}

fn fact(n: u64) -> Rational {
    int(factorial(n))
}

fn sign(n: u64) -> Rational {
    if n % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

// ---------------------------------------------------------------- exact

fn exact_jobs(c: &VerifyConfig) -> Vec<(String, Job)> {
    let k = c.max_index as usize;
    let mut jobs = Vec::new();

    jobs.push(job("exact.sequences".into(), move |_| {
        let b = gf_coefficients(&GfKind::Bernoulli, k)?;
        let e1 = gf_coefficients(&GfKind::EulerFirst, k)?;
        let e2 = gf_coefficients(&GfKind::EulerSecond, k)?;
        let sec = gf_coefficients(&GfKind::Sec, k)?;
        let mut out = Vec::new();
        for n in 0..=k {
            let p = [("n", n as i64)];
            out.push(
                Case::new(id("exact.bernoulli.recurrence_vs_gf", &p), "B_n: recurrence equals t/(e^t-1) coefficient", &["bernoulli", "gf_coefficients"])
                    .rational(&bernoulli(n), &b[n]),
            );
            out.push(
                Case::new(id("exact.euler_first.recurrence_vs_gf", &p), "E*_n: recurrence equals 2/(e^t+1) coefficient", &["euler_first", "gf_coefficients"])
                    .rational(&euler_first(n), &e1[n]),
            );
            out.push(
                Case::new(id("exact.euler_second.recurrence_vs_gf", &p), "E_n: recurrence equals sech coefficient", &["euler_second", "gf_coefficients"])
                    .rational(&euler_second(n), &e2[n]),
            );
            out.push(
                Case::new(id("exact.second_from_first", &[("k", n as i64)]), "sum_l C(k,l) 2^l E*_l = E_k", &["second_from_first", "euler_second"])
                    .rational(&second_from_first(n), &euler_second(n)),
            );
            let ext = int(2) * (Rational::one() - pow2(n as i64 + 1)) * bernoulli(n + 1) / int(n as u64 + 1);
            out.push(
                Case::new(id("exact.extended_bridge", &[("k", n as i64)]), "E*_k = 2(1-2^(k+1)) B_(k+1)/(k+1)", &["euler_first", "bernoulli"])
                    .rational(&euler_first(n), &ext),
            );
            out.push(
                Case::new(id("exact.euler_zeta_neg", &[("k", n as i64)]), "zeta_E(-k) = E*_k", &["euler_zeta_neg"])
                    .rational(&euler_zeta_neg(n as u32), &euler_first(n)),
            );
            if n % 2 == 0 {
                out.push(
                    Case::new(id("exact.sec_series", &p), "sec coefficient of t^n equals (-1)^(n/2) E_n/n!", &["gf_coefficients", "euler_second"])
                        .rational(&sec[n], &(sign(n as u64 / 2) * euler_second(n) / fact(n as u64))),
                );
            }
            if n >= 2 && n % 2 == 0 {
                out.push(
                    Case::new(id("exact.euler_first.even_zero", &p), "E*_n vanishes at even n >= 2", &["gf_coefficients"])
                        .rational(&e1[n], &Rational::zero()),
                );
            }
        }
        for (name, n, value) in [
            ("b12", 12, rat(-691, 2730)),
            ("b20", 20, rat(-174611, 330)),
        ] {
            if n <= k.max(20) {
                out.push(Case::new(format!("exact.spot.{name}"), format!("B_{n}"), &["bernoulli"]).rational(&bernoulli(n), &value));
            }
        }
        for (name, n, value) in [("e2", 2, rat(-1, 1)), ("e4", 4, rat(5, 1)), ("e6", 6, rat(-61, 1))] {
            out.push(Case::new(format!("exact.spot.{name}"), format!("E_{n}"), &["euler_second"]).rational(&euler_second(n), &value));
        }
        Ok(out)
    }));

    jobs.push(job("exact.binomial".into(), move |_| {
        let mut row = vec![num_bigint::BigInt::one()];
        let mut out = Vec::new();
        for n in 0..=k as u64 {
            let direct: Vec<_> = (0..=n as i64).map(|j| binomial(n, j)).collect();
            let edges = binomial(n, -1).is_zero() && binomial(n, n as i64 + 1).is_zero();
            let lhs = format!("{:?}", direct.iter().map(|b| b.to_string()).collect::<Vec<_>>());
            let rhs = format!("{:?}", row.iter().map(|b| b.to_string()).collect::<Vec<_>>());
            let case = Case::new(id("exact.binomial.pascal", &[("n", n as i64)]), "C(n,k) equals the Pascal triangle row", &["binomial"]);
            out.push(if edges { case.exact(&lhs, &rhs) } else { case.exact(&lhs, &"nonzero outside 0..=n".to_string()) });
            let mut next = vec![num_bigint::BigInt::one(); row.len() + 1];
            for j in 1..row.len() {
                next[j] = &row[j - 1] + &row[j];
            }
            row = next;
        }
        Ok(out)
    }));

    jobs.push(job("exact.series".into(), move |_| {
        let order = k + 2;
        let mut out = Vec::new();
        let a = rat(1, 2);
        let b = rat(1, 3);
        let prod = ps_mul(&TruncatedSeries::exp_scaled(&a, order), &TruncatedSeries::exp_scaled(&b, order))?;
        out.push(
            Case::new(id("exact.ps_mul.exp_sum", &[("order", order as i64)]), "e^(t/2) e^(t/3) = e^(5t/6)", &["ps_mul"])
                .exact(&prod, &TruncatedSeries::exp_scaled(&(&a + &b), order)),
        );
        let sc = ps_mul(&TruncatedSeries::sin(order), &TruncatedSeries::cos(order))?;
        out.push(
            Case::new(id("exact.ps_div.roundtrip", &[("order", order as i64)]), "(sin cos)/cos = sin", &["ps_div", "ps_mul"])
                .exact(&ps_div(&sc, &TruncatedSeries::cos(order))?, &TruncatedSeries::sin(order)),
        );
        let tan = ps_div(&TruncatedSeries::sin(order), &TruncatedSeries::cos(order))?;
        let cot = gf_coefficients(&GfKind::XCotX, k)?;
        for n in 1..=(order - 1) / 2 {
            let j = 2 * n - 1;
            let four = pow2(2 * n as i64);
            let bern = sign(n as u64 - 1) * &four * (&four - Rational::one()) * bernoulli(2 * n) / fact(2 * n as u64);
            out.push(
                Case::new(id("exact.tan.bernoulli_form", &[("n", n as i64)]), "sin/cos coefficient equals the Bernoulli tangent form", &["ps_div", "bernoulli"])
                    .rational(tan.coeff(j), &bern),
            );
            let m = 2 * n - 1;
            let eul = sign(n as u64) * pow2(m as i64) * euler_first(m) / fact(m as u64);
            out.push(
                Case::new(id("exact.tan.euler_form", &[("n", n as i64)]), "sin/cos coefficient equals the first-kind Euler tangent form", &["ps_div", "euler_first"])
                    .rational(tan.coeff(j), &eul),
            );
        }
        for m in 1..=k / 2 {
            let z = zeta_even(m as u32)?;
            out.push(
                Case::new(id("exact.x_cot_x", &[("m", m as i64)]), "x cot x coefficient of x^(2m) equals -2 zeta(2m)/pi^(2m)", &["gf_coefficients", "zeta_even"])
                    .rational(&cot[2 * m], &(-int(2) * &z.coeff)),
            );
        }
        let x = rat(1, 3);
        let poly = gf_coefficients(&GfKind::EulerFirstPoly(x.clone()), k)?;
        for n in 0..=k {
            out.push(
                Case::new(id("exact.euler_poly.x=1/3", &[("n", n as i64)]), "E*_n(1/3) equals the 2e^(xt)/(e^t+1) coefficient", &["euler_poly", "gf_coefficients"])
                    .rational(&euler_poly(n, &x), &poly[n]),
            );
        }
        for n in 1..=8u64 {
            for kk in 0..=12u32 {
                let e = euler_poly(kk as usize, &int(n));
                let lhs = if n % 2 == 0 { -(e - euler_first(kk as usize)) } else { e + euler_first(kk as usize) };
                out.push(
                    Case::new(id("exact.parity", &[("n", n as i64), ("k", kk as i64)]), "E*_k(n) -/+ E*_k against 2 sum (-1)^l l^k", &["alt_power_sum", "euler_poly"])
                        .rational(&lhs, &alt_power_sum(n, kk)),
                );
            }
        }
        Ok(out)
    }));

    jobs.push(job("exact.zeta".into(), move |_| {
        let mut out = Vec::new();
        for n in 1..=k as u32 {
            let p = [("n", n as i64)];
            let z = zeta_even(n)?;
            out.push(Case::new(id("exact.zeta_even_two_routes", &p), "zeta(2n) via B_2n equals zeta(2n) via E*_(2n-1)", &["zeta_even", "zeta_even_via_euler"]).exact(&z, &zeta_even_via_euler(n)?));
            let bridge = int(2) * (Rational::one() - pow2(2 * n as i64)) * bernoulli(2 * n as usize) / int(2 * n);
            out.push(Case::new(id("exact.bridge", &p), "E*_(2n-1) = 2(1-4^n) B_2n/(2n)", &["euler_first", "bernoulli"]).rational(&euler_first(2 * n as usize - 1), &bridge));
            let quarter = Rational::one() - rpow(&rat(1, 4), n as i64);
            out.push(Case::new(id("exact.lambda", &p), "lambda(2n) = (1-4^-n) zeta(2n)", &["lambda_even", "zeta_even"]).exact(&lambda_even(n)?, &z.scale(&quarter)));
            let factor = int(-2) * (Rational::one() - pow2(1 - 2 * n as i64));
            let ez = euler_zeta_even(n)?;
            out.push(Case::new(id("exact.euler_zeta_even", &p), "zeta_E(2n) = -2(1-2^(1-2n)) zeta(2n)", &["euler_zeta_even", "zeta_even"]).exact(&ez, &z.scale(&factor)));
            let signs = format!("{} {}", coeff_sign(&z), coeff_sign(&ez));
            out.push(Case::new(id("exact.sign_pattern", &p), "zeta(2n) positive, zeta_E(2n) negative", &["zeta_even", "euler_zeta_even"]).exact(&signs, &"1 -1".to_string()));
            // functional equation at 1 - 2n
            let fe = int(2) * sign(n as u64) * fact(2 * n as u64 - 1) * &z.coeff / pow2(2 * n as i64);
            out.push(Case::new(id("exact.zeta_neg.odd", &p), "zeta(1-2n) from the functional equation", &["zeta_neg", "zeta_even"]).rational(&zeta_neg(2 * n - 1)?, &fe));
            out.push(Case::new(id("exact.zeta_neg.even", &p), "zeta(-2n) = 0", &["zeta_neg"]).rational(&zeta_neg(2 * n)?, &Rational::zero()));
            out.push(Case::new(id("exact.alt_odd_sum", &[("k", n as i64)]), "Bernoulli form of sum (-1)^n/(2n-1)^(2k+1) equals -beta(2k+1)", &["eq20_alt_odd_sum", "beta_odd"]).exact(&eq20_alt_odd_sum(n)?, &-beta_odd(n)));
            let (l, r) = mixed_identity(n)?;
            out.push(Case::new(id("exact.mixed_identity", &[("k", n as i64)]), "mixed Bernoulli-Euler identity", &["mixed_identity"]).rational(&l, &r));
        }
        let sec = ps_div(&TruncatedSeries::one(k + 1), &TruncatedSeries::cos(k + 1))?;
        for n in 0..=(k / 2) as u32 {
            let via_sec = PiMultiple::new(sec.coeff(2 * n as usize) * rpow(&rat(1, 2), 2 * n as i64 + 2), 2 * n + 1);
            out.push(
                Case::new(id("exact.beta_odd", &[("n", n as i64)]), "beta(2n+1) equals sec coefficient times (pi/2)^(2n+1)/2", &["beta_odd", "ps_div"])
                    .exact(&beta_odd(n), &via_sec),
            );
        }
        Ok(out)
    }));
    jobs
}

// ---------------------------------------------------------------- numeric

fn bf(r: &Rational, bits: u32) -> BigFloat {
    BigFloat::from_rational(r, bits + 32)
}

fn numeric_jobs(_: &VerifyConfig) -> Vec<(String, Job)> {
    let mut jobs = Vec::new();
    for n in 1..=8u32 {
        jobs.push(job(format!("numeric.closed.n={n}"), move |c| {
            let (b, tol, d) = (c.bits, c.tolerance(), c.digits());
            let s = BigFloat::from_int(2 * n, b + 32);
            let p = [("n", n as i64)];
            let mut out = Vec::new();
            let z = zeta_em(&s, b)?;
            let zc = zeta_even(n)?.to_bigfloat(b);
            out.push(Case::new(id("numeric.zeta_em", &p), "Euler-Maclaurin zeta(2n) against the closed form", &["zeta_em", "zeta_even"]).numeric(&z, &zc, &residual(&z, &zc, b), &tol, d));
            let e = euler_zeta_eval(&s, b)?;
            let ec = euler_zeta_even(n)?.to_bigfloat(b);
            out.push(Case::new(id("numeric.euler_zeta", &p), "accelerated zeta_E(2n) against the closed form", &["euler_zeta_eval", "euler_zeta_even"]).numeric(&e, &ec, &residual(&e, &ec, b), &tol, d));
            let l = lambda_eval(&s, b)?;
            let lc = lambda_even(n)?.to_bigfloat(b);
            out.push(Case::new(id("numeric.lambda", &p), "2^-s zeta(s,1/2) at s = 2n against lambda(2n)", &["hurwitz_em", "lambda_even"]).numeric(&l, &lc, &residual(&l, &lc, b), &tol, d));
            if n <= 6 {
                let split = z.mul_prec(&BigFloat::one(b).sub_prec(&two_pow(-2 * n as i64, b), b), b);
                out.push(Case::new(id("numeric.lambda_vs_zeta", &p), "(1-2^-2n) zeta(2n) against lambda(2n)", &["zeta_em", "lambda_even"]).numeric(&split, &lc, &residual(&split, &lc, b), &tol, d));
            }
            if n <= 6 {
                let s1 = BigFloat::from_int(2 * n + 1, b + 32);
                let v = dirichlet_beta_eval(&s1, b)?;
                let vc = beta_odd(n).to_bigfloat(b);
                out.push(Case::new(id("numeric.beta", &p), "accelerated beta(2n+1) against the closed form", &["dirichlet_beta_eval", "beta_odd"]).numeric(&v, &vc, &residual(&v, &vc, b), &tol, d));
            }
            if n <= 5 {
                let r = corollary2_residual(n, b)?;
                let rhs = hurwitz_quarter_closed_form(n).to_bigfloat(b);
                let lhs = rhs.add_prec(&r, b);
                out.push(Case::new(id("numeric.hurwitz_quarter", &p), "zeta(2n+1,1/4) + 4^n(1-2^(2n+1)) zeta(2n+1) against the E_2n closed form", &["corollary2_residual"]).numeric(&lhs, &rhs, &r, &tol, d));
            }
            Ok(out)
        }));
    }
    for (tag, s) in [("2.00", rat(2, 1)), ("3.00", rat(3, 1)), ("4.00", rat(4, 1)), ("5.50", rat(11, 2))] {
        jobs.push(job(format!("numeric.euler_zeta_split.s={tag}"), move |c| {
            let (b, tol, d) = (c.bits, c.tolerance(), c.digits());
            let sv = bf(&s, b);
            let e = euler_zeta_eval(&sv, b)?;
            let lam = lambda_eval(&sv, b)?;
            let z = zeta_em(&sv, b)?;
            let two_1s = pow_real(&BigFloat::from_int(2, b + 32), &bf(&(Rational::one() - &s), b), b + 16)?;
            let rhs = lam.mul_int(-2).add_prec(&two_1s.mul_prec(&z, b + 16), b);
            Ok(vec![Case::new(format!("numeric.euler_zeta_split.s={tag:0>6}"), "zeta_E(s) = -2 lambda(s) + 2^(1-s) zeta(s)", &["euler_zeta_eval", "hurwitz_em", "zeta_em", "pow_real"])
                .numeric(&e, &rhs, &residual(&e, &rhs, b), &tol, d)])
        }));
    }
    jobs.push(job("numeric.misc".into(), |c| {
        let (b, tol, d) = (c.bits, c.tolerance(), c.digits());
        let mut out = Vec::new();
        for (tag, s) in [("1.50", rat(3, 2)), ("2.00", rat(2, 1)), ("3.00", rat(3, 1))] {
            let sv = bf(&s, b);
            let eta = eta_accel(&sv, b)?;
            let factor = BigFloat::one(b + 16).sub_prec(&pow_real(&BigFloat::from_int(2, b + 32), &bf(&(Rational::one() - &s), b), b + 16)?, b + 16);
            let via_zeta = factor.mul_prec(&zeta_em(&sv, b + 16)?, b);
            out.push(Case::new(format!("numeric.eta.s={tag:0>6}"), "accelerated eta(s) = (1-2^(1-s)) zeta(s)", &["eta_accel", "zeta_em"]).numeric(&eta, &via_zeta, &residual(&eta, &via_zeta, b), &tol, d));
        }
        let three = BigFloat::from_int(3, b + 32);
        let he = hurwitz_euler_eval(&three, &BigFloat::one(b + 32), b)?;
        let ez = euler_zeta_eval(&three, b)?.abs();
        out.push(Case::new("numeric.hurwitz_euler.x=001".into(), "zeta_E(3, 1) = -zeta_E(3)", &["hurwitz_euler_eval", "euler_zeta_eval"]).numeric(&he, &ez, &residual(&he, &ez, b), &tol, d));
        let half = hurwitz_euler_eval(&three, &bf(&rat(1, 2), b), b)?;
        let target = PiMultiple::new(rat(1, 2), 3).to_bigfloat(b);
        out.push(Case::new("numeric.hurwitz_euler.x=1/2".into(), "zeta_E(3, 1/2) = 16 beta(3) = pi^3/2", &["hurwitz_euler_eval"]).numeric(&half, &target, &residual(&half, &target, b), &tol, d));
        let p = pi(b);
        let p2 = p.square().div_int(6);
        let z2 = zeta_em(&BigFloat::from_int(2, b + 32), b)?;
        let tight = two_pow(-(b as i64 - 26), 64);
        out.push(Case::new("numeric.pi.square".into(), "pi^2/6 against Euler-Maclaurin zeta(2)", &["pi", "zeta_em"]).numeric(&p2, &z2, &residual(&p2, &z2, b), &tight, d));
        let log_tol = two_pow(8 - b as i64, 64);
        for (x, y) in [(rat(3, 2), rat(7, 5)), (rat(1, 10), rat(22, 7)), (rat(1000, 1), rat(1, 3))] {
            let lx = log(&bf(&x, b), b)?;
            let ly = log(&bf(&y, b), b)?;
            let lxy = log(&bf(&(&x * &y), b), b)?;
            let sum = lx.add_prec(&ly, b);
            out.push(Case::new(format!("numeric.log.x={x}.y={y}"), "log(xy) = log x + log y", &["log"]).numeric(&lxy, &sum, &lxy.sub_prec(&sum, b).abs(), &log_tol, d));
        }
        for (x, s, target) in [(rat(4, 1), rat(1, 2), rat(2, 1)), (rat(2, 1), rat(-3, 1), rat(1, 8))] {
            let v = pow_real(&bf(&x, b), &bf(&s, b), b)?;
            let t = bf(&target, b);
            out.push(Case::new(format!("numeric.pow_real.x={x}.s={s}"), "pow_real against an exact power", &["pow_real"]).numeric(&v, &t, &residual(&v, &t, b), &tol, d));
        }
        let v = pow_real(&BigFloat::from_int(3, b + 32), &bf(&rat(5, 2), b), b + 16)?.square();
        let t = BigFloat::from_int(243, b);
        out.push(Case::new("numeric.pow_real.x=3.s=5/2".into(), "(3^(5/2))^2 = 243", &["pow_real"]).numeric(&v, &t, &residual(&v, &t, b), &tol, d));
        let lo = zeta_em(&three, b)?;
        let hi = zeta_em(&BigFloat::from_int(3, 2 * b + 32), 2 * b)?;
        out.push(Case::new("numeric.monotone.zeta3".into(), "zeta(3) at P and 2P bits agree at P bits", &["zeta_em"]).numeric(&lo, &hi, &residual(&lo, &hi, b), &tol, d));
        Ok(out)
    }));
    jobs
}

// ---------------------------------------------------------------- padic

const FERMIONIC_MAX_MOMENT: u32 = 10;
const VOLKENBORN_MAX_MOMENT: u32 = 6;
const SHIFT_MAX_MOMENT: u32 = 8;
const SHIFT_MAX: u64 = 4;

fn padic_jobs(c: &VerifyConfig) -> Vec<(String, Job)> {
    let mut jobs = Vec::new();
    for &p in &c.primes {
        for depth in 1..=c.depth {
            jobs.push(job(format!("padic.fermionic.p={p}.N={depth}"), move |_| {
                let sums = fermionic_moments(FERMIONIC_MAX_MOMENT, p, depth)?;
                let mut out = Vec::new();
                for (n, s) in sums.iter().enumerate() {
                    let target = padic_of_rational(&euler_first(n), p, depth)?;
                    let v = s.sub(&target)?.valuation();
                    out.push(
                        Case::new(id("padic.fermionic", &[("p", p as i64), ("n", n as i64), ("N", depth as i64)]), "alternating sum of x^n over p^N residues against E*_n", &["fermionic_sum", "padic_of_rational"])
                            .residue_congruence(s.to_string(), format!("{} = {}", euler_first(n), target), p, v, depth),
                    );
                }
                Ok(out)
            }));
            jobs.push(job(format!("padic.volkenborn.p={p}.N={depth}"), move |_| {
                let mut out = Vec::new();
                for n in 0..=VOLKENBORN_MAX_MOMENT {
                    let v = volkenborn_sum(n, p, depth)?;
                    let b = bernoulli(n as usize);
                    out.push(
                        Case::new(id("padic.volkenborn", &[("p", p as i64), ("n", n as i64), ("N", depth as i64)]), "p^-N sum of x^n against B_n at the reported depth N-1", &["volkenborn_sum"])
                            .congruence(v.exact.to_string(), b.to_string(), p, v.bernoulli_agreement(), v.reported_depth as i64),
                    );
                }
                Ok(out)
            }));
            jobs.push(job(format!("padic.shift.p={p}.N={depth}"), move |_| {
                let mut out = Vec::new();
                for n in 0..=SHIFT_MAX_MOMENT {
                    for m in 1..=SHIFT_MAX {
                        let s = fermionic_shift_check(n, m, p, depth)?;
                        let params = [("p", p as i64), ("n", n as i64), ("m", m as i64), ("N", depth as i64)];
                        out.push(
                            Case::new(id("padic.shift", &params), "sum (x+m)^n (-1)^x against (-1)^m S + 2 sum (-1)^(m-1-l) l^n", &["fermionic_shift_check"])
                                .residue_congruence(s.lhs.to_string(), s.rhs.to_string(), p, s.difference_valuation(), depth),
                        );
                        let it = iterated_shift_check(n, m, p, depth)?;
                        out.push(
                            Case::new(id("padic.shift_iterated", &params), "m applications of I(f_1) = 2f(0) - I(f) against the m-shift form", &["fermionic_shift_check"])
                                .residue_congruence(it.lhs.to_string(), it.rhs.to_string(), p, it.difference_valuation(), depth),
                        );
                    }
                }
                Ok(out)
            }));
        }
        jobs.push(job(format!("padic.distribution.p={p}"), move |c| {
            let mut out = Vec::new();
            for depth in 1..=c.depth.min(2) {
                for d in [1u64, 11, 13] {
                    if d % p == 0 {
                        continue;
                    }
                    let level = d * p.pow(depth);
                    let mut starts = vec![0, 1, 2, level - 1];
                    starts.dedup();
                    for a in starts {
                        for (qi, q) in [rat(2, 1), rat(7, 3), rat(-3, 5)].into_iter().enumerate() {
                            let ok = mu_minus_q_distribution_check(a, d, p, depth, &q)?;
                            let params = [("p", p as i64), ("N", depth as i64), ("d", d as i64), ("a", a as i64), ("q", qi as i64)];
                            out.push(
                                Case::new(id("padic.distribution", &params), format!("mu_(-q) refinement at q = {q}"), &["mu_minus_q_distribution_check"])
                                    .exact(&ok, &true),
                            );
                        }
                    }
                }
            }
            Ok(out)
        }));
        jobs.push(job(format!("padic.log.p={p}"), move |c| {
            let depth = c.depth.max(2);
            let mut out = Vec::new();
            let u = PadicInt::new(p, depth, 1 + p)?;
            let lu = padic_log(&u, depth)?;
            out.push(
                Case::new(id("padic.log.valuation", &[("p", p as i64)]), "v_p(log(1+p)) = 1", &["padic_log"])
                    .exact(&lu.valuation().to_string(), &"1".to_string()),
            );
            let l2 = padic_log(&u.mul(&u)?, depth)?;
            out.push(
                Case::new(id("padic.log.square", &[("p", p as i64)]), "log(u^2) = 2 log u", &["padic_log"])
                    .residue_congruence(l2.to_string(), lu.add(&lu)?.to_string(), p, l2.sub(&lu.add(&lu)?)?.valuation(), depth),
            );
            let w = PadicInt::new(p, depth, 1 + 2 * p * p)?;
            let lhs = padic_log(&u.mul(&w)?, depth)?;
            let rhs = lu.add(&padic_log(&w, depth)?)?;
            out.push(
                Case::new(id("padic.log.product", &[("p", p as i64)]), "log(uw) = log u + log w", &["padic_log"])
                    .residue_congruence(lhs.to_string(), rhs.to_string(), p, lhs.sub(&rhs)?.valuation(), depth),
            );
            Ok(out)
        }));
    }
    jobs.push(job("padic.of_rational".into(), |_| {
        let x = padic_of_rational(&rat(-1, 2), 3, 2)?;
        let rejected = padic_of_rational(&rat(1, 6), 3, 2).is_err();
        Ok(vec![
            Case::new("padic.of_rational.minus_half".into(), "-1/2 mod 9", &["padic_of_rational"]).exact(&x.to_string(), &"4 mod 3^2".to_string()),
            Case::new("padic.of_rational.rejects".into(), "1/6 is not a 3-adic integer", &["padic_of_rational"]).exact(&rejected, &true),
        ])
    }));
    jobs.push(diag_job("padic.volkenborn_carry".into(), |c| {
        let mut short = Vec::new();
        for &p in &c.primes {
            for depth in 1..=c.depth {
                for n in 0..=VOLKENBORN_MAX_MOMENT {
                    let v = volkenborn_sum(n, p, depth)?;
                    if let Some(a) = v.bernoulli_agreement().filter(|&a| a < depth as i64) {
                        short.push(format!("p={p} n={n} N={depth}: v={a}"));
                    }
                }
            }
        }
        Ok(vec![Diagnostic {
            id: "padic.volkenborn_carry".into(),
            description: "Volkenborn sums agreeing with B_n to fewer than N digits".into(),
            values: vec![("count".into(), short.len().to_string()), ("cells".into(), short.join("; "))],
            note: "agreement is checked at depth N-1: the p^-N sum can lose one digit to a neighbouring Bernoulli term".into(),
            ops: vec!["volkenborn_sum"],
        }])
    }));
    jobs
}

// ---------------------------------------------------------------- q

const CROSS_P: u64 = 5;
const CROSS_MAX_DEPTH: u32 = 6;

fn real_beta(m: u32, q: &Rational, bits: u32) -> Result<BigFloat> {
    match carlitz_q_bernoulli(m, &QRational::real(q.clone())?, bits)? {
        QBernoulli::Real(x) => Ok(x),
        QBernoulli::Padic(_) => unreachable!("real mode"),
    }
}

fn q_jobs(_: &VerifyConfig) -> Vec<(String, Job)> {
    let mut jobs = Vec::new();
    for m in 0..=8u32 {
        jobs.push(job(format!("q.limit.m={m}"), move |c| {
            let b = c.bits;
            let bm = BigFloat::from_rational(&bernoulli(m as usize), b + 32);
            let mut errs = Vec::new();
            for e in [3i64, 4, 5] {
                let q = Rational::one() + rpow(&rat(1, 10), e);
                errs.push(real_beta(m, &q, b)?.sub_prec(&bm, b).abs().to_f64());
            }
            let ratios = [errs[0] / errs[1], errs[1] / errs[2]];
            let worst = ratios.iter().map(|r| (r / 10.0).log2().abs()).fold(0.0, f64::max);
            Ok(vec![Case::new(id("q.limit", &[("m", m as i64)]), "|beta_(m,1+eps) - B_m| shrinks tenfold per decade of eps (log2 deviation <= 1)", &["carlitz_q_bernoulli"])
                .bounded(format!("ratios {:.4} {:.4}", ratios[0], ratios[1]), "10".into(), worst, 1.0)])
        }));
    }
    for m in 0..=4u32 {
        jobs.push(job(format!("q.crosscheck.m={m}"), move |_| {
            let q = rat(1 + CROSS_P as i64, 1);
            let mut out = Vec::new();
            for depth in 2..=CROSS_MAX_DEPTH {
                let bos = q_bosonic_sum(m, CROSS_P, depth, &q)?;
                let QBernoulli::Padic(beta) = carlitz_q_bernoulli(m, &QRational::padic_of(&q, CROSS_P, depth)?, 0)? else {
                    unreachable!("p-adic mode")
                };
                let agreement = bos.agreement(&beta)?;
                let required = depth as i64 - m as i64 - 1;
                out.push(
                    Case::new(id("q.crosscheck", &[("p", CROSS_P as i64), ("m", m as i64), ("N", depth as i64)]), "q-bosonic Riemann sum against p-adic beta_(m,q) at q = 1+p", &["q_bosonic_sum", "carlitz_q_bernoulli", "padic_log"])
                        .congruence(bos.to_string(), beta.to_string(), CROSS_P, Some(agreement), required),
                );
            }
            Ok(out)
        }));
    }
    jobs.push(job("q.misc".into(), |c| {
        let (b, tol, d) = (c.bits, c.tolerance(), c.digits());
        let mut out = Vec::new();
        for q in [rat(1, 2), rat(3, 2)] {
            let beta = real_beta(0, &q, b)?;
            let wp = b + 32;
            let lq = log(&bf(&q, b), wp)?;
            let target = bf(&(&q - Rational::one()), b).div_prec(&lq, b);
            out.push(Case::new(format!("q.beta0.q={q}"), "beta_(0,q) = (q-1)/log q", &["carlitz_q_bernoulli", "log"]).numeric(&beta, &target, &residual(&beta, &target, b), &tol, d));
        }
        for m in 0..=4u32 {
            let depth = 3;
            let bos = q_bosonic_sum(m, 5, depth, &Rational::one())?;
            let v = volkenborn_sum(m, 5, depth)?;
            out.push(
                Case::new(id("q.bosonic_at_one", &[("m", m as i64)]), "q = 1 reduces the q-bosonic sum to the Volkenborn sum", &["q_bosonic_sum", "volkenborn_sum"])
                    .congruence(bos.to_string(), v.exact.to_string(), 5, Some(bos.agreement_with(&v.exact)?), depth as i64),
            );
        }
        Ok(out)
    }));
    jobs.push(diag_job("q.zeta".into(), |c| {
        let mut out = Vec::new();
        for (qi, q) in [rat(1, 2), rat(9, 10)].into_iter().enumerate() {
            for k in 1..=4u32 {
                let dg = q_zeta_residual(k, &q, c.bits)?;
                let digits = c.digits();
                let note = if dg.exact_residual.is_zero() {
                    "relation holds: the logarithmic parts cancel and the rational parts agree".to_string()
                } else {
                    format!(
                        "normalization mismatch: residual is exactly {}; -beta_(k,q)/k equals the series summed from n = 0, whose n = 0 term q^0 [0]_q^(k-1) is 1 at k = 1 and 0 otherwise, while zeta_q sums from n = 1",
                        dg.exact_residual
                    )
                };
                out.push(Diagnostic {
                    id: id("q.zeta_residual", &[("q", qi as i64), ("k", k as i64)]),
                    description: format!("|zeta_q(1-k) + beta_(k,q)/k| at q = {q}"),
                    values: vec![
                        ("series_part".into(), dg.series_part.to_string()),
                        ("zeta_q".into(), dg.zeta_q.to_decimal(digits)),
                        ("beta_over_k".into(), dg.beta_over_k.to_decimal(digits)),
                        ("residual".into(), dg.residual.to_decimal(8)),
                        ("exact_residual".into(), dg.exact_residual.to_string()),
                    ],
                    note,
                    ops: vec!["q_zeta_residual"],
                });
            }
        }
        Ok(out)
    }));
    jobs
}

