//! Count the distinguishable shoe subsets of the three games by
//! inclusion-exclusion: the reason snackjack's exact analysis is feasible
//! (under a million) while six-deck blackjack's is not (370 trillion).
//!
//!     cargo run --release --example composition_counts

use snackjack::counting::{composition_count, composition_count_total, DeckProfile};

fn main() {
    for profile in [
        DeckProfile::snackjack39(),
        DeckProfile::grayjack24(),
        DeckProfile::blackjack6(),
        DeckProfile::blackjack1(),
    ] {
        let mid = profile.shoe_size() / 2;
        println!(
            "{:12} shoe {:3}: max at n={mid}: {:>18}   total: {:>18}",
            profile.name,
            profile.shoe_size(),
            composition_count(&profile, mid),
            composition_count_total(&profile),
        );
    }
}
