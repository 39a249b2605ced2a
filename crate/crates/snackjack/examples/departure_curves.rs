//! Per-penetration curves for the most profitable departure, standing on a
//! pair of treys against an ace: probability the departure is called for,
//! its conditional gain, the realized value of the rounded-count trigger,
//! and the normal (UNLLI) approximation.
//!
//!     cargo run --release --example departure_curves

use snackjack::counting::DEUCES_MINUS_ACES;
use snackjack::game::Hand;
use snackjack::rational::{to_decimal_signif, to_f64};
use snackjack::solver::Action;
use snackjack::variation::{
    departure_proportion, normal_approx_average, realized_departure_average, situation_curves,
    strategic_eor, DeparturePolicy, Situation,
};

fn main() {
    let sit = Situation::new(Hand::new(0, 0, 2), 1, Action::Split, Action::Stand).unwrap();
    let sys = DEUCES_MINUS_ACES;
    let eor = strategic_eor(&sit, &sys).unwrap();
    println!("situation {}:", sit.label());
    println!(
        "  full-shoe gain mu = {} ({})",
        eor.mu,
        to_decimal_signif(&eor.mu, 6)
    );
    println!(
        "  rho = {:.6}, index = {}",
        eor.rho,
        to_decimal_signif(&eor.index_constant, 6)
    );
    println!(
        "  trigger: depart at rounded adjusted TC <= {}",
        eor.trigger()
    );
    println!(
        "  proportion of compositions favoring the departure: {}",
        to_decimal_signif(&departure_proportion(&sit).unwrap(), 6)
    );

    println!("\nn     P(depart)   gain        realized    normal approx");
    for batch in situation_curves(&sit, &sys, 1..=304).unwrap().chunks(39) {
        let c = &batch[batch.len() / 2];
        println!(
            "{:3}   {:<9}   {:<9}   {:<9}   {:.7}",
            c.n,
            to_decimal_signif(&c.prob_departure, 3),
            to_decimal_signif(&c.gain, 3),
            to_decimal_signif(&c.realized_ev, 3),
            c.approx_ev
        );
    }

    let policy = DeparturePolicy::from_eor(&eor, 1, 6);
    let exact = realized_departure_average(&sit, &policy, &sys).unwrap();
    let approx = normal_approx_average(&eor);
    println!(
        "\naverage realized value over n = 1..233: {}",
        to_decimal_signif(&exact, 6)
    );
    println!(
        "normal approximation average: {approx:.7} (underestimates by {:.1}%)",
        (1.0 - approx / to_f64(&exact)) * 100.0
    );
}
