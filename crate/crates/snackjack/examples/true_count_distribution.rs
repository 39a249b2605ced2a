//! The exact distribution of the rounded true count, the conditional net
//! expectation it predicts, and the window of penetrations where the
//! distribution is bimodal (its mode sits off center).
//!
//!     cargo run --release --example true_count_distribution

use snackjack::counting::{
    conditional_ev_given_tc, is_bimodal, rounded_tc_distribution, DEUCES_MINUS_ACES,
};
use snackjack::rational::{ratio, to_decimal_signif};

fn main() {
    let nu = ratio(1, 7);
    for n in [78u32, 156, 234] {
        println!("n = {n}:");
        println!("  [TC]   P([TC]=k)    E[Z_n - nu | TC]");
        for k in -6..=6 {
            let cond = conditional_ev_given_tc(n, k, &nu).unwrap();
            println!(
                "  {k:>4}   {:<10}   {}",
                to_decimal_signif(&cond.prob, 3),
                to_decimal_signif(&cond.ev, 3)
            );
        }
    }

    let bimodal: Vec<u32> = (1..=304)
        .filter(|&n| is_bimodal(&rounded_tc_distribution(n, &DEUCES_MINUS_ACES).unwrap()))
        .collect();
    let (lo1, hi1) = (
        bimodal[0],
        bimodal.iter().take_while(|&&n| n < 200).last().unwrap(),
    );
    let second: Vec<&u32> = bimodal.iter().filter(|&&n| n >= 200).collect();
    println!(
        "\nbimodal penetrations: {lo1}..{hi1} and {}..{}",
        second.first().unwrap(),
        second.last().unwrap()
    );
}
