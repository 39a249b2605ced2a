//! Expected profit of betting the rounded true count clamped to a 1..6
//! spread, against a 1/7 commission, across the shoe.
//!
//!     cargo run --release --example bet_spread

use snackjack::counting::{bet_spread_average, bet_spread_profit, DEUCES_MINUS_ACES};
use snackjack::rational::{ratio, to_decimal_signif};

fn main() {
    let nu = ratio(1, 7);
    println!("n     E[bet x (Z_n - nu)]");
    for n in (26..=286).step_by(26) {
        let v = bet_spread_profit(n, &nu, 1, 6, &DEUCES_MINUS_ACES).unwrap();
        println!("{n:3}   {}", to_decimal_signif(&v, 6));
    }
    let avg34 = bet_spread_average(233, &nu, 1, 6, &DEUCES_MINUS_ACES).unwrap();
    let avg56 = bet_spread_average(259, &nu, 1, 6, &DEUCES_MINUS_ACES).unwrap();
    println!(
        "average over the first 3/4 of the shoe (n = 0..233): {}",
        to_decimal_signif(&avg34, 6)
    );
    println!(
        "average over the first 5/6 of the shoe (n = 0..259): {}",
        to_decimal_signif(&avg56, 6)
    );
}
