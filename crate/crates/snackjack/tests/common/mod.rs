//! Test-only oracles, independent of the conditional-expectation pipeline
//! they check: raw ordered-deal enumeration with nothing but draw
//! probabilities and the payoff rules.

use num_traits::Zero;
use snackjack::game::{Hand, PackComposition, DENOMS, NO_REMOVALS};
use snackjack::rational::{int, ratio, Rational};
use snackjack::solver::{Action, StrategyTable};

/// Exact overall expectation by exhaustive enumeration of every ordered deal
/// and play-out, following `table` verbatim, under default rules (untied
/// naturals pay 3:2, dealer natural wins original bets only).
pub fn brute_force_expectation(pack: &PackComposition, table: &StrategyTable) -> Rational {
    let mut total = Rational::zero();
    for_draw(pack, &mut |p1, prob1, pack1| {
        for_draw(&pack1, &mut |p2, prob2, pack2| {
            for_draw(&pack2, &mut |up, prob3, pack3| {
                for_draw(&pack3, &mut |down, prob4, pack4| {
                    let prob = &prob1 * &prob2 * &prob3 * &prob4;
                    let hand = NO_REMOVALS.add(p1).add(p2);
                    let dealer = NO_REMOVALS.add(up).add(down);
                    total += prob * settle_deal(hand, up, dealer, pack4, table);
                });
            });
        });
    });
    total
}

fn for_draw(pack: &PackComposition, f: &mut dyn FnMut(u8, Rational, PackComposition)) {
    let total = pack.total();
    for d in DENOMS {
        if pack.count(d) == 0 {
            continue;
        }
        f(
            d,
            ratio(pack.count(d) as i64, total as i64),
            pack.remove(d).unwrap(),
        );
    }
}

fn settle_deal(
    hand: Hand,
    upcard: u8,
    dealer: Hand,
    pack: PackComposition,
    table: &StrategyTable,
) -> Rational {
    match (hand.is_natural(), dealer.is_natural()) {
        (true, true) => int(0),
        (true, false) => ratio(3, 2),
        (false, true) => int(-1),
        (false, false) => play_hand(hand, upcard, dealer, pack, table),
    }
}

fn play_hand(
    hand: Hand,
    upcard: u8,
    dealer: Hand,
    pack: PackComposition,
    table: &StrategyTable,
) -> Rational {
    let entry = table
        .get(&hand, upcard)
        .unwrap_or_else(|| panic!("table misses reachable point {hand:?} vs {upcard}"));
    match entry.chosen() {
        Action::Stand => dealer_play(hand.total().value, int(1), dealer, pack),
        Action::Hit => {
            let mut ev = Rational::zero();
            for_draw(&pack, &mut |y, p, rest| {
                let next = hand.add(y);
                ev += p * if next.is_busted() {
                    int(-1)
                } else {
                    play_hand(next, upcard, dealer, rest, table)
                };
            });
            ev
        }
        Action::Double => {
            let mut ev = Rational::zero();
            for_draw(&pack, &mut |y, p, rest| {
                let next = hand.add(y);
                ev += p * if next.is_busted() {
                    int(-2)
                } else {
                    dealer_play(next.total().value, int(2), dealer, rest)
                };
            });
            ev
        }
        Action::Split => {
            let paircard = DENOMS.into_iter().find(|&d| hand.count(d) == 2).unwrap();
            let mut ev = Rational::zero();
            for_draw(&pack, &mut |y1, p1, rest1| {
                for_draw(&rest1, &mut |y2, p2, rest2| {
                    // One card per paircard; split totals are 7 or below and a
                    // split 7 is not a natural.
                    let t1 = Hand::single(paircard).add(y1).total().value;
                    let t2 = Hand::single(paircard).add(y2).total().value;
                    ev += &p1 * p2 * dealer_play_two(t1, t2, dealer, rest2);
                });
            });
            ev
        }
    }
}

fn dealer_play(
    player_total: u32,
    stake: Rational,
    dealer: Hand,
    pack: PackComposition,
) -> Rational {
    let total = dealer.total();
    if total.is_busted() {
        return stake;
    }
    if total.value == 6 || total.value == 7 {
        return stake
            * match player_total.cmp(&total.value) {
                std::cmp::Ordering::Greater => int(1),
                std::cmp::Ordering::Equal => int(0),
                std::cmp::Ordering::Less => int(-1),
            };
    }
    let mut ev = Rational::zero();
    for_draw(&pack, &mut |d, p, rest| {
        ev += p * dealer_play(player_total, stake.clone(), dealer.add(d), rest);
    });
    ev
}

fn dealer_play_two(t1: u32, t2: u32, dealer: Hand, pack: PackComposition) -> Rational {
    let total = dealer.total();
    if total.is_busted() {
        return int(2);
    }
    if total.value == 6 || total.value == 7 {
        let settle = |t: u32| match t.cmp(&total.value) {
            std::cmp::Ordering::Greater => int(1),
            std::cmp::Ordering::Equal => int(0),
            std::cmp::Ordering::Less => int(-1),
        };
        return settle(t1) + settle(t2);
    }
    let mut ev = Rational::zero();
    for_draw(&pack, &mut |d, p, rest| {
        ev += p * dealer_play_two(t1, t2, dealer.add(d), rest);
    });
    ev
}
