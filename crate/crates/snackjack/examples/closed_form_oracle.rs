//! The closed-form expectation polynomial against the recursive solver: the
//! two independent routes agree exactly on every composition, and the
//! polynomial can be regenerated from solver output alone.
//!
//!     cargo run --release --example closed_form_oracle

use snackjack::closed_form::{
    expectation_polynomial, fit_expectation_polynomial, poly_expectation,
};
use snackjack::counting::shoe_basic_strategy;
use snackjack::game::PackComposition;
use snackjack::solver::{fixed_strategy_expectation, RuleVariant};

fn main() {
    let table = shoe_basic_strategy();
    let rules = RuleVariant::default();
    let mut agree = 0u32;
    for n1 in 0..=12u32 {
        for n2 in 0..=12u32 {
            for n3 in 0..=12u32 {
                if n1 + n2 + n3 < 8 {
                    continue;
                }
                let pack = PackComposition::new(n1, n2, n3);
                let replayed = fixed_strategy_expectation(&pack, table, &rules).unwrap();
                let closed = poly_expectation(n1, n2, n3).unwrap();
                assert_eq!(replayed, closed, "at {pack}");
                agree += 1;
            }
        }
    }
    println!("solver and polynomial agree exactly on {agree} compositions");

    let poly = expectation_polynomial();
    println!(
        "checked-in polynomial: {} terms, total degree {}",
        poly.len(),
        poly.total_degree()
    );
    let fitted = fit_expectation_polynomial(|n1, n2, n3| {
        fixed_strategy_expectation(&PackComposition::new(n1, n2, n3), table, &rules).unwrap()
    });
    println!(
        "regenerated from 729 solver evaluations: identical = {}",
        fitted == *poly
    );
}
