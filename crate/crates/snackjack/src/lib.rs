//! Exact combinatorial analysis of snackjack, an eight-card toy model of
//! blackjack: composition-dependent basic strategy, closed-form expectation
//! formulas, and the full card-counting story (effects of removal, betting
//! efficiency, true-count distributions, strategy-variation indices), all in
//! arbitrary-precision rational arithmetic.
//!
//! Start with [`solver::basic_strategy`] and [`solver::overall_expectation`],
//! or run the examples (`cargo run --release --example basic_strategy`).

pub mod closed_form;
pub mod counting;
pub mod dealer;
pub mod error;
pub mod game;
pub mod rational;
pub mod report;
pub mod solver;
pub mod variation;

pub use error::{Error, Result};
pub use game::{Hand, PackComposition, Total};
pub use rational::Rational;
pub use solver::{Action, RuleVariant, StrategyTable};
