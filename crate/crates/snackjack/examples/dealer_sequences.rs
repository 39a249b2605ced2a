//! Enumerate the dealer's drawing sequences: every ordered sequence with its
//! exact probability, and the unordered aggregation with multiplicities.
//!
//!     cargo run --release --example dealer_sequences

use snackjack::dealer::{
    dealer_sequences, pooled_sequence_counts, unordered_sequences, ConditioningEvent,
};
use snackjack::game::{PackComposition, DENOMS};

fn main() {
    for d in [1u32, 39] {
        let pack = PackComposition::decks(d);
        let (ordered, unordered) = pooled_sequence_counts(&pack).unwrap();
        println!("{d}-deck: {ordered} ordered / {unordered} unordered dealer sequences");
    }

    println!("\nsingle deck, by upcard (naturals included, no conditioning):");
    let deck = PackComposition::decks(1);
    for upcard in DENOMS {
        let after = deck.remove(upcard).unwrap();
        let seqs = dealer_sequences(&after, &ConditioningEvent::unconditioned(upcard)).unwrap();
        println!("upcard {upcard}:");
        for seq in &seqs {
            let cards: Vec<String> = seq.cards.iter().map(|c| c.to_string()).collect();
            println!(
                "  {:10}  total {}  p = {}",
                cards.join(","),
                seq.final_total,
                seq.probability
            );
        }
        for agg in unordered_sequences(&seqs) {
            println!(
                "  multiset {} x{}  total {}  p = {}",
                agg.cards, agg.multiplicity, agg.final_total, agg.probability
            );
        }
    }
}
