//! The mimic-the-dealer baseline: the player follows the dealer's fixed
//! stand-on-6-and-7 rule. Unlike blackjack, snackjack favors the mimicking
//! player because double busts are rare and winning naturals are common.
//!
//!     cargo run --release --example mimic_dealer

use snackjack::dealer::mimic_dealer_expectation;
use snackjack::game::PackComposition;
use snackjack::rational::to_decimal_signif;

fn main() {
    for d in [1u32, 39] {
        let pack = PackComposition::decks(d);
        let stats = mimic_dealer_expectation(&pack).unwrap();
        println!("{d}-deck pack {pack}:");
        println!(
            "  expectation        = {} ({})",
            stats.ev,
            to_decimal_signif(&stats.ev, 6)
        );
        println!(
            "  P(double bust)     = {} ({})",
            stats.p_double_bust,
            to_decimal_signif(&stats.p_double_bust, 6)
        );
        println!(
            "  P(winning natural) = {} ({})",
            stats.p_winning_natural,
            to_decimal_signif(&stats.p_winning_natural, 6)
        );
    }
}
