//! Fermionic and Volkenborn integrals as Riemann sums over Z/p^N, the
//! shift identity and the mu_(-q) distribution relation.

use eulerzeta::arith::rat;
use eulerzeta::padic::{
    fermionic_shift_check, fermionic_sum, mu_minus_q_distribution_check, padic_log, padic_of_rational, volkenborn_sum,
    PadicInt,
};
use eulerzeta::special_numbers::euler_first;

fn main() {
    let p = 5;
    println!("fermionic moments mod {p}^N against E*_n:");
    for n in 0..=5 {
        let target = euler_first(n);
        let row: Vec<String> = (1..=4)
            .map(|depth| {
                let s = fermionic_sum(n as u32, p, depth).unwrap();
                let t = padic_of_rational(&target, p, depth).unwrap();
                format!("{}{}", s.residue(), if s == t { "" } else { "!" })
            })
            .collect();
        println!("  n={n} E*={target:<5} {}", row.join("  "));
    }

    println!("\nVolkenborn sums p^-N sum x^n against B_n:");
    for (p, n) in [(5, 2), (7, 4), (3, 5)] {
        let v = volkenborn_sum(n, p, 4).unwrap();
        println!(
            "  p={p} n={n}: agreement v={:?}, checked to depth {}",
            v.bernoulli_agreement(),
            v.reported_depth
        );
    }

    let shift = fermionic_shift_check(3, 2, 3, 4).unwrap();
    println!("\nshift by 2, n=3: {} vs {} -> {}", shift.lhs, shift.rhs, shift.pass);

    let ok = mu_minus_q_distribution_check(2, 5, 3, 2, &rat(7, 3)).unwrap();
    println!("mu_(-q) refinement at a=2 d=5 p=3 N=2 q=7/3: {ok}");

    let u = PadicInt::new(p, 6, 1 + p).unwrap();
    let l = padic_log(&u, 6).unwrap();
    println!("log(6) in Z_5 = {l}, valuation {}", l.valuation());
}
