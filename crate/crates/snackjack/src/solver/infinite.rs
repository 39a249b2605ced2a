//! The same strategy pipeline with draws at the fixed single-deck proportions
//! (1/4 aces, 1/4 deuces, 1/2 treys) and no depletion.

use std::collections::HashMap;

use num_traits::Zero;

use crate::game::{natural_completion, Hand, Total, DENOMS};
use crate::rational::{int, ratio, Rational};
use crate::solver::{Action, NaturalPay, RuleVariant};

fn card_prob(k: u8) -> Rational {
    match k {
        1 | 2 => ratio(1, 4),
        3 => ratio(1, 2),
        _ => panic!("denomination out of range: {k}"),
    }
}

fn dealer_stands(total: Total) -> bool {
    total.value == 6 || total.value == 7
}

struct InfiniteSolver {
    rules: RuleVariant,
    emax_memo: HashMap<(Hand, u8), Rational>,
    dealer_memo: HashMap<u8, [Rational; 3]>,
}

impl InfiniteSolver {
    fn new(rules: RuleVariant) -> Self {
        InfiniteSolver {
            rules,
            emax_memo: HashMap::new(),
            dealer_memo: HashMap::new(),
        }
    }

    /// (P(S=6), P(S=7), P(bust)) given upcard and no dealer natural.
    fn dealer_distribution(&mut self, upcard: u8) -> [Rational; 3] {
        if let Some(d) = self.dealer_memo.get(&upcard) {
            return d.clone();
        }
        let mut dist = [Rational::zero(), Rational::zero(), Rational::zero()];
        let forbidden = natural_completion(upcard);
        let scale: Rational = match forbidden {
            Some(c) => int(1) - card_prob(c),
            None => int(1),
        };
        for d in DENOMS {
            if Some(d) == forbidden {
                continue;
            }
            let p = card_prob(d) / &scale;
            Self::play_out(Hand::single(upcard).add(d), p, &mut dist);
        }
        self.dealer_memo.insert(upcard, dist.clone());
        dist
    }

    fn play_out(hand: Hand, prob: Rational, dist: &mut [Rational; 3]) {
        let total = hand.total();
        if total.is_busted() {
            dist[2] += prob;
            return;
        }
        if dealer_stands(total) {
            dist[(total.value - 6) as usize] += prob;
            return;
        }
        for d in DENOMS {
            Self::play_out(hand.add(d), &prob * card_prob(d), dist);
        }
    }

    fn stand_ev(&mut self, hand: &Hand, upcard: u8, natural_allowed: bool) -> Rational {
        if natural_allowed && hand.is_natural() {
            return self.rules.natural_stand_value();
        }
        let [six, seven, bust] = self.dealer_distribution(upcard);
        let t = hand.total().value;
        let mut ev = bust;
        for (total, p) in [(6u32, six), (7u32, seven)] {
            if t > total {
                ev += p;
            } else if t < total {
                ev -= p;
            }
        }
        ev
    }

    fn hit_ev(&mut self, hand: &Hand, upcard: u8) -> Rational {
        if hand.hard_total() >= 7 {
            return int(-1);
        }
        let mut ev = Rational::zero();
        for k in DENOMS {
            let next = hand.add(k);
            let v = if next.is_busted() {
                int(-1)
            } else {
                self.emax_stand_hit(&next, upcard)
            };
            ev += card_prob(k) * v;
        }
        ev
    }

    fn emax_stand_hit(&mut self, hand: &Hand, upcard: u8) -> Rational {
        if let Some(v) = self.emax_memo.get(&(*hand, upcard)) {
            return v.clone();
        }
        let v = self
            .stand_ev(hand, upcard, false)
            .max(self.hit_ev(hand, upcard));
        self.emax_memo.insert((*hand, upcard), v.clone());
        v
    }

    fn double_ev(&mut self, hand: &Hand, upcard: u8) -> Rational {
        let mut ev = Rational::zero();
        for k in DENOMS {
            let next = hand.add(k);
            let v = if next.is_busted() {
                int(-1)
            } else {
                self.stand_ev(&next, upcard, false)
            };
            ev += card_prob(k) * v;
        }
        ev * int(2)
    }

    fn split_ev(&mut self, paircard: u8, upcard: u8) -> Rational {
        let mut ev = Rational::zero();
        for k in DENOMS {
            let split_hand = Hand::single(paircard).add(k);
            ev += card_prob(k) * self.stand_ev(&split_hand, upcard, false);
        }
        ev * int(2)
    }

    fn emax(&mut self, hand: &Hand, upcard: u8) -> Rational {
        let mut best = self
            .stand_ev(hand, upcard, true)
            .max(self.hit_ev(hand, upcard));
        if hand.size() == 2 {
            best = best.max(self.double_ev(hand, upcard));
        }
        if let Some(paircard) = DENOMS
            .into_iter()
            .find(|&d| hand.count(d) == 2 && hand.size() == 2)
        {
            best = best.max(self.split_ev(paircard, upcard));
        }
        best
    }
}

/// Optimal-play expectation with fixed draw probabilities, commission included.
pub fn infinite_deck_expectation(rules: &RuleVariant) -> Rational {
    let mut solver = InfiniteSolver::new(rules.clone());
    let mut ev = Rational::zero();
    for i in DENOMS {
        for j in DENOMS {
            if j < i {
                continue;
            }
            let hand = Hand::single(i).add(j);
            let p_hand = if i == j {
                card_prob(i) * card_prob(j)
            } else {
                int(2) * card_prob(i) * card_prob(j)
            };
            for upcard in DENOMS {
                let p_cond = match natural_completion(upcard) {
                    Some(c) => int(1) - card_prob(c),
                    None => int(1),
                };
                let p = &p_hand * card_prob(upcard) * p_cond;
                ev += p * solver.emax(&hand, upcard);
            }
        }
    }
    let p_dealer_natural = int(2) * card_prob(1) * card_prob(3);
    ev -= match rules.natural_pay {
        NaturalPay::ThreeToTwo => {
            let p_player_natural = int(2) * card_prob(1) * card_prob(3);
            p_dealer_natural * (int(1) - p_player_natural)
        }
        NaturalPay::EvenMoneyLosesToNatural => p_dealer_natural,
    };
    ev - rules.commission.clone()
}

/// Per-action values at an infinite-deck decision point, for strategy display.
pub fn infinite_action_values(hand: &Hand, upcard: u8) -> Vec<(Action, Rational)> {
    let mut solver = InfiniteSolver::new(RuleVariant::default());
    let mut values = Vec::new();
    for action in Action::ALL {
        if !action.is_legal(hand) {
            continue;
        }
        let v = match action {
            Action::Stand => solver.stand_ev(hand, upcard, true),
            Action::Hit => solver.hit_ev(hand, upcard),
            Action::Double => solver.double_ev(hand, upcard),
            Action::Split => {
                let paircard = DENOMS.into_iter().find(|&d| hand.count(d) == 2).unwrap();
                solver.split_ev(paircard, upcard)
            }
        };
        values.push((action, v));
    }
    values
}
