//! How well linear card-counting estimates track the exact conditional
//! expectation: L1 distances of the EoR and counting-system estimators, and
//! the betting efficiency of both reference systems.
//!
//!     cargo run --release --example betting_efficiency

use snackjack::counting::{
    aggregate_betting_efficiency, betting_efficiency, estimator_l1_distance, true_count_threshold,
    Estimator, DEUCES_MINUS_ACES, LEVEL_SIX,
};
use snackjack::rational::{ratio, to_decimal_fixed, to_decimal_signif};

fn main() {
    let nu = ratio(1, 7);
    println!("n     |Z-Zhat|      |Z-Z*| level6  |Z-Z*| level1   BE level6  BE level1");
    for n in [2u32, 26, 52, 104, 156, 208, 260, 286, 304] {
        let eor = estimator_l1_distance(n, &Estimator::EorLinear).unwrap();
        let l6 = estimator_l1_distance(n, &Estimator::CountLinear(LEVEL_SIX)).unwrap();
        let l1 = estimator_l1_distance(n, &Estimator::CountLinear(DEUCES_MINUS_ACES)).unwrap();
        let be6 = betting_efficiency(n, &LEVEL_SIX, &nu).unwrap();
        let be1 = betting_efficiency(n, &DEUCES_MINUS_ACES, &nu).unwrap();
        println!(
            "{n:3}   {:<12}  {:<12}   {:<12}    {}   {}",
            to_decimal_signif(&eor, 4),
            to_decimal_signif(&l6, 4),
            to_decimal_signif(&l1, 4),
            to_decimal_fixed(&be6, 6),
            to_decimal_fixed(&be1, 6),
        );
    }
    println!(
        "positive-expectation true-count threshold (level one): {}",
        to_decimal_signif(&true_count_threshold(&DEUCES_MINUS_ACES, &nu).unwrap(), 6)
    );
    for system in [LEVEL_SIX, DEUCES_MINUS_ACES] {
        let be = aggregate_betting_efficiency(&system, &nu).unwrap();
        println!(
            "aggregate BE of {system} over n = 2..233: {}",
            to_decimal_fixed(&be, 4)
        );
    }
}
