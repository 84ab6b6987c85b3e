//! Exact truncated power series: products, quotients and the generating
//! functions of the number sequences.

use eulerzeta::arith::rat;
use eulerzeta::powerseries::{gf_coefficients, ps_div, ps_mul, GfKind, TruncatedSeries};

fn main() {
    let order = 10;
    let sin = TruncatedSeries::sin(order);
    let cos = TruncatedSeries::cos(order);
    println!("tan = {}", ps_div(&sin, &cos).unwrap());
    println!("sec = {}", ps_div(&TruncatedSeries::one(order), &cos).unwrap());

    let a = TruncatedSeries::exp_scaled(&rat(1, 2), order);
    let b = TruncatedSeries::exp_scaled(&rat(-1, 2), order);
    println!("e^(t/2) e^(-t/2) = {}", ps_mul(&a, &b).unwrap());

    // dividing by a series with zero constant term is refused
    let t = TruncatedSeries::new(vec![rat(0, 1), rat(1, 1)], order);
    println!("1/t: {}", ps_div(&TruncatedSeries::one(order), &t).unwrap_err());

    for name in ["bernoulli", "euler_first", "euler_second", "x_cot_x", "euler_first_poly:1/2"] {
        let kind: GfKind = name.parse().unwrap();
        let coeffs = gf_coefficients(&kind, 8).unwrap();
        let shown: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
        println!("{name:>22}: {}", shown.join(", "));
    }
}
