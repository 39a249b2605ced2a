//! Effects of removal on the 39-deck basic-strategy expectation, the two
//! reference counting systems with their correlations and regression
//! coefficients, and how the scaled EoRs drift with the pack size.
//!
//!     cargo run --release --example effects_of_removal

use snackjack::counting::{
    count_system_eval, effects_of_removal, effects_of_removal_closed_form, scaled_eor_row,
    shoe_basic_strategy, DEUCES_MINUS_ACES, LEVEL_SIX,
};
use snackjack::rational::to_decimal_signif;

fn main() {
    let closed = effects_of_removal_closed_form();
    println!("311 x EoR (closed form, exact):");
    for (i, v) in closed.scaled.iter().enumerate() {
        println!("  card {}: {} = {}", i + 1, v, to_decimal_signif(v, 6));
    }
    println!("balance E1 + E2 + 2 E3 = {}", closed.balance());

    let replayed = effects_of_removal(shoe_basic_strategy()).unwrap();
    println!(
        "replayed strategy gives identical fractions: {}",
        replayed == *closed
    );

    for system in [DEUCES_MINUS_ACES, LEVEL_SIX] {
        let eval = count_system_eval(&system).unwrap();
        println!(
            "system {system}: rho = {:.6}, gamma = {} = {}",
            eval.rho,
            eval.gamma,
            to_decimal_signif(&eval.gamma, 6)
        );
    }

    println!("\n(N-1) x EoR_N by pack size:");
    for (label, cards) in [
        ("52", Some(52)),
        ("104", Some(104)),
        ("312", Some(312)),
        ("limit", None),
    ] {
        let row = scaled_eor_row(cards);
        let cells: Vec<String> = row.iter().map(|v| to_decimal_signif(v, 6)).collect();
        println!("  N = {label:>5}: {}", cells.join("  "));
    }
}
