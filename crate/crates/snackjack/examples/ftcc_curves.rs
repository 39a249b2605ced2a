//! The fundamental theorem of card counting in numbers: the conditional
//! expectation given n seen cards has constant mean, nondecreasing expected
//! positive part, and increasing spread. Compares snackjack against the
//! red-and-black toy game on the same 312-card shoe.
//!
//!     cargo run --release --example ftcc_curves

use snackjack::counting::{ftcc_stats, red_black_stats};
use snackjack::rational::{ratio, to_decimal_signif, to_f64};

fn main() {
    let nu = ratio(1, 7);
    println!("n     mean        E[(Z_n-nu)^+]  SD(Z_n)      red-black E[(Z_n)^+]  red-black SD");
    for n in (26..=304).step_by(26).chain([304]) {
        let stats = ftcc_stats(n, &nu).unwrap();
        let sd = to_f64(&stats.variance).sqrt();
        let rb = red_black_stats(312, n).unwrap();
        println!(
            "{:3}   {}   {:<12}  {:<10.6}  {:<20}  {:.6}",
            n,
            to_decimal_signif(&stats.mean, 6),
            to_decimal_signif(&stats.mean_pos_excess, 5),
            sd,
            to_decimal_signif(&rb.mean_pos, 5),
            rb.sd,
        );
    }
}
