//! Player expectation under basic strategy as a function of the number of
//! decks, with the fixed-probability limit and the even-money rule variant.
//!
//!     cargo run --release --example deck_expectations

use snackjack::game::PackComposition;
use snackjack::rational::{ratio, to_decimal_fixed};
use snackjack::report::{expectation_report, OutputFormat, ValueStyle};
use snackjack::solver::{overall_expectation, RuleVariant};

fn main() {
    let decks: Vec<u32> = (1..=13).chain([26, 39, 52]).collect();
    let report = expectation_report(
        &decks,
        true,
        &RuleVariant::default(),
        ValueStyle::Decimal(6),
    )
    .unwrap();
    println!("{}", report.render(OutputFormat::Text));

    println!("even-money naturals (lose to a dealer natural):");
    for d in [1u32, 2, 3, 39] {
        let ev =
            overall_expectation(&PackComposition::decks(d), &RuleVariant::even_money()).unwrap();
        println!(
            "  {d:>2} decks: {:>9}%",
            to_decimal_fixed(&(ev * ratio(100, 1)), 4)
        );
    }

    let rules = RuleVariant::default().with_commission(ratio(1, 7));
    let net = overall_expectation(&PackComposition::decks(39), &rules).unwrap();
    println!(
        "39 decks with a 1/7 commission: {}%",
        to_decimal_fixed(&(net * ratio(100, 1)), 3)
    );
}
