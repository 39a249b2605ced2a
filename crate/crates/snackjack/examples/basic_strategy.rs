//! Derive composition-dependent basic strategy and print the full derivation
//! table (exact conditional expectations for every decision point), plus the
//! points where the optimal action is not unique.
//!
//!     cargo run --release --example basic_strategy [decks]

use snackjack::game::PackComposition;
use snackjack::report::{strategy_report, OutputFormat, ValueStyle};
use snackjack::solver::basic_strategy;

fn main() {
    let decks: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    let pack = PackComposition::decks(decks);
    let table = basic_strategy(&pack);
    println!(
        "{}",
        strategy_report(&table, false, ValueStyle::Exact).render(OutputFormat::Text)
    );
    let ties = table.nonunique_points();
    println!("decision points: {}", table.len());
    println!("nonunique optima: {}", ties.len());
    for entry in ties {
        println!(
            "  {} vs {} -> {}",
            entry.hand,
            entry.upcard,
            entry.optimal_label()
        );
    }
}
