//! Departure analysis for every two-card situation where leaving basic
//! strategy can pay: correlations, index numbers, practical triggers, and
//! the realized average value of each departure.
//!
//!     cargo run --release --example strategy_variation

use snackjack::counting::DEUCES_MINUS_ACES;
use snackjack::report::{table10_report, OutputFormat, ValueStyle};

fn main() {
    let report = table10_report(&DEUCES_MINUS_ACES, ValueStyle::Decimal(6)).unwrap();
    println!("{}", report.render(OutputFormat::Text));
}
