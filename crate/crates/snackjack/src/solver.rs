//! Composition-dependent strategy solver.
//!
//! Implements the conditional-expectation recursion for stand, hit, double,
//! and split, the derived basic strategy table, and overall and
//! fixed-strategy expectations, all in exact rational arithmetic and all
//! conditioned on the dealer not having a natural.

use std::collections::HashMap;

use num_traits::Zero;

use crate::dealer::{final_total_distribution, ConditioningEvent};
use crate::error::{Error, Result};
use crate::game::{
    decision_point_order, enumerate_decision_points, natural_completion, Hand, PackComposition,
    DENOMS, NO_REMOVALS,
};
use crate::rational::{int, ratio, Rational};

pub mod infinite;

/// Player actions. Double is legal only on two-card hands, split only on pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Action {
    Stand,
    Hit,
    Double,
    Split,
}

impl Action {
    pub const ALL: [Action; 4] = [Action::Stand, Action::Hit, Action::Double, Action::Split];

    pub fn is_legal(&self, hand: &Hand) -> bool {
        match self {
            Action::Stand | Action::Hit => true,
            Action::Double => hand.size() == 2,
            Action::Split => hand.is_pair(),
        }
    }

    pub fn abbrev(&self) -> &'static str {
        match self {
            Action::Stand => "S",
            Action::Hit => "H",
            Action::Double => "D",
            Action::Split => "Spl",
        }
    }
}

/// Payoff rules. The default pays an untied natural 3 to 2; the even-money
/// variant pays it 1 to 1 and lets it lose to a dealer natural. The
/// commission is charged per unit initially bet and subtracted after play.
#[derive(Clone, Debug, PartialEq)]
pub struct RuleVariant {
    pub natural_pay: NaturalPay,
    pub commission: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NaturalPay {
    ThreeToTwo,
    EvenMoneyLosesToNatural,
}

impl Default for RuleVariant {
    fn default() -> Self {
        RuleVariant {
            natural_pay: NaturalPay::ThreeToTwo,
            commission: Rational::zero(),
        }
    }
}

impl RuleVariant {
    pub fn even_money() -> Self {
        RuleVariant {
            natural_pay: NaturalPay::EvenMoneyLosesToNatural,
            commission: Rational::zero(),
        }
    }

    pub fn with_commission(mut self, nu: Rational) -> Self {
        self.commission = nu;
        self
    }

    fn natural_stand_value(&self) -> Rational {
        match self.natural_pay {
            NaturalPay::ThreeToTwo => ratio(3, 2),
            NaturalPay::EvenMoneyLosesToNatural => int(1),
        }
    }
}

/// P(next card is `k` | hand, upcard, no dealer natural), with the pack
/// depleted by `removals` beyond the hand and upcard. Algebraically identical
/// to the Bayes formulas for ace and trey upcards.
pub fn cond_card_prob(
    k: u8,
    hand: &Hand,
    upcard: u8,
    removals: &Hand,
    pack: &PackComposition,
) -> Result<Rational> {
    let unseen = unseen_after(hand, upcard, removals, pack)?;
    cond_card_prob_from_unseen(k, upcard, &unseen)
}

fn unseen_after(
    hand: &Hand,
    upcard: u8,
    removals: &Hand,
    pack: &PackComposition,
) -> Result<PackComposition> {
    pack.subtract_hand(hand)?
        .remove(upcard)?
        .subtract_hand(removals)
}

/// Same as [`cond_card_prob`], taking the unseen composition directly.
pub fn cond_card_prob_from_unseen(k: u8, upcard: u8, unseen: &PackComposition) -> Result<Rational> {
    let total = unseen.total();
    match natural_completion(upcard) {
        None => {
            if total == 0 {
                return Err(Error::InsufficientCards);
            }
            Ok(ratio(unseen.count(k) as i64, total as i64))
        }
        Some(c) => {
            let others = total - unseen.count(c);
            if others == 0 {
                return Err(Error::UndefinedConditioning);
            }
            if total < 2 {
                return Err(Error::InsufficientCards);
            }
            // Joint law of (downcard, next card) conditioned on downcard != c.
            let num = if k == c {
                unseen.count(c) as i64 * others as i64
            } else {
                unseen.count(k) as i64 * (others as i64 - 1)
            };
            Ok(ratio(num, (total as i64 - 1) * others as i64))
        }
    }
}

/// Conditional expectation of `action` at a decision point, with `removals`
/// depleting the pack beyond the hand and upcard.
pub fn e_action(
    action: Action,
    hand: &Hand,
    upcard: u8,
    removals: &Hand,
    pack: &PackComposition,
) -> Result<Rational> {
    if !action.is_legal(hand) {
        return Err(Error::IllegalAction);
    }
    let mut ctx = Solver::new(*pack, RuleVariant::default());
    ctx.action_ev(action, hand, upcard, removals)
}

/// One row of a strategy table: exact per-action values and the argmax set.
#[derive(Clone, Debug)]
pub struct StrategyEntry {
    pub hand: Hand,
    pub upcard: u8,
    /// Legal actions in canonical order with their exact values.
    pub values: Vec<(Action, Rational)>,
    /// Optimal actions (ties preserved), canonical order S, H, D, Spl.
    pub optimal: Vec<Action>,
    pub emax: Rational,
}

impl StrategyEntry {
    pub fn value(&self, action: Action) -> Option<&Rational> {
        self.values
            .iter()
            .find(|(a, _)| *a == action)
            .map(|(_, v)| v)
    }

    /// First optimal action in canonical order; the deterministic choice used
    /// when the table is played verbatim.
    pub fn chosen(&self) -> Action {
        self.optimal[0]
    }

    pub fn optimal_label(&self) -> String {
        self.optimal
            .iter()
            .map(|a| a.abbrev())
            .collect::<Vec<_>>()
            .join("/")
    }
}

/// Map from every decision point of a pack to its per-action values and
/// optimal action set.
#[derive(Clone, Debug)]
pub struct StrategyTable {
    pub pack: PackComposition,
    pub rules: RuleVariant,
    entries: Vec<StrategyEntry>,
    index: HashMap<(Hand, u8), usize>,
}

impl StrategyTable {
    pub fn get(&self, hand: &Hand, upcard: u8) -> Option<&StrategyEntry> {
        self.index.get(&(*hand, upcard)).map(|&i| &self.entries[i])
    }

    /// Entries in table order: descending hard total, then hand, then upcard.
    pub fn entries(&self) -> &[StrategyEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Decision points where the optimal action is not unique.
    pub fn nonunique_points(&self) -> Vec<&StrategyEntry> {
        self.entries
            .iter()
            .filter(|e| e.optimal.len() > 1)
            .collect()
    }

    /// The restriction to two-card hands.
    pub fn two_card_entries(&self) -> Vec<&StrategyEntry> {
        self.entries.iter().filter(|e| e.hand.size() == 2).collect()
    }
}

/// Derive composition-dependent basic strategy for `pack` under default rules.
pub fn basic_strategy(pack: &PackComposition) -> StrategyTable {
    basic_strategy_with_rules(pack, &RuleVariant::default())
}

pub fn basic_strategy_with_rules(pack: &PackComposition, rules: &RuleVariant) -> StrategyTable {
    let mut solver = Solver::new(*pack, rules.clone());
    let mut points = enumerate_decision_points(pack);
    points.sort_by(decision_point_order);
    let mut entries = Vec::with_capacity(points.len());
    let mut index = HashMap::with_capacity(points.len());
    for (hand, upcard) in points {
        let mut values = Vec::new();
        for action in Action::ALL {
            if !action.is_legal(&hand) {
                continue;
            }
            match solver.action_ev(action, &hand, upcard, &NO_REMOVALS) {
                Ok(v) => values.push((action, v)),
                // On extreme compositions an action's playout can exhaust the
                // pack; such an action is simply unavailable. Enumerated
                // points never hit a probability-zero conditioning event.
                Err(Error::InsufficientCards) => {}
                Err(e) => panic!("unexpected failure at {hand:?} vs {upcard}: {e}"),
            }
        }
        let Some(emax) = values.iter().map(|(_, v)| v).max().cloned() else {
            continue;
        };
        let optimal: Vec<Action> = values
            .iter()
            .filter(|(_, v)| *v == emax)
            .map(|(a, _)| *a)
            .collect();
        index.insert((hand, upcard), entries.len());
        entries.push(StrategyEntry {
            hand,
            upcard,
            values,
            optimal,
            emax,
        });
    }
    StrategyTable {
        pack: *pack,
        rules: rules.clone(),
        entries,
        index,
    }
}

/// Exact overall expectation of optimal (composition-dependent basic strategy)
/// play on `pack` under `rules`, commission included.
pub fn overall_expectation(pack: &PackComposition, rules: &RuleVariant) -> Result<Rational> {
    if pack.total() < 8 {
        return Err(Error::InsufficientCards);
    }
    let table = basic_strategy_with_rules(pack, rules);
    assemble_expectation(pack, rules, |hand, upcard| {
        table
            .get(hand, upcard)
            .map(|e| Ok(e.emax.clone()))
            .unwrap_or(Err(Error::DefectiveTable {
                hand: *hand,
                upcard,
                pack: *pack,
            }))
    })
}

/// Exact expectation of playing `table` verbatim on `pack`, even where its
/// prescriptions are suboptimal for this pack.
pub fn fixed_strategy_expectation(
    pack: &PackComposition,
    table: &StrategyTable,
    rules: &RuleVariant,
) -> Result<Rational> {
    if pack.total() < 8 {
        return Err(Error::InsufficientCards);
    }
    let mut player = FixedPlayer {
        solver: Solver::new(*pack, rules.clone()),
        table,
        memo: HashMap::new(),
    };
    assemble_expectation(pack, rules, |hand, upcard| player.value(hand, upcard))
}

/// Conditional expectation of taking `action` now and resuming `table`
/// afterwards: hit continuations follow the table's stand/hit prescriptions
/// instead of re-optimizing. This is the departure semantics of the
/// strategy-variation analysis.
pub fn fixed_action_ev(
    action: Action,
    hand: &Hand,
    upcard: u8,
    pack: &PackComposition,
    table: &StrategyTable,
) -> Result<Rational> {
    if !action.is_legal(hand) {
        return Err(Error::IllegalAction);
    }
    let mut player = FixedPlayer {
        solver: Solver::new(*pack, RuleVariant::default()),
        table,
        memo: HashMap::new(),
    };
    match action {
        Action::Stand => player.solver.stand_ev(hand, upcard, &NO_REMOVALS),
        Action::Hit => player.hit(hand, upcard),
        Action::Double => player.solver.double_ev(hand, upcard, &NO_REMOVALS),
        Action::Split => player.solver.split_ev(hand, upcard, &NO_REMOVALS),
    }
}

/// Conditioning-event probabilities P(A(hand, upcard)) for a two-card deal.
pub fn deal_probability(pack: &PackComposition, hand: &Hand, upcard: u8) -> Rational {
    debug_assert_eq!(hand.size(), 2);
    let n = pack.total() as i64;
    let pair_ways: i64 = if hand.is_pair() {
        let i = DENOMS.into_iter().find(|&d| hand.count(d) == 2).unwrap();
        let c = pack.count(i) as i64;
        c * (c - 1) / 2
    } else {
        DENOMS
            .into_iter()
            .filter(|&d| hand.count(d) == 1)
            .map(|d| pack.count(d) as i64)
            .product()
    };
    let p_hand = ratio(pair_ways, n * (n - 1) / 2);
    let up_left = pack.count(upcard) as i64 - hand.count(upcard) as i64;
    let p_up = ratio(up_left, n - 2);
    let p_cond = match natural_completion(upcard) {
        Some(c) => {
            let others = n - 3 - (pack.count(c) as i64 - hand.count(c) as i64);
            ratio(others, n - 3)
        }
        None => int(1),
    };
    p_hand * p_up * p_cond
}

/// P(the dealer has a natural) for a fresh deal from `pack`.
pub fn dealer_natural_probability(pack: &PackComposition) -> Rational {
    let n = pack.total() as i64;
    ratio(pack.n1 as i64 * pack.n3 as i64, n * (n - 1) / 2)
}

/// P(the dealer has a natural and the player does not).
pub fn dealer_natural_untied_probability(pack: &PackComposition) -> Rational {
    let n = pack.total() as i64;
    let p_dealer = dealer_natural_probability(pack);
    let p_player_given = ratio(
        (pack.n1 as i64 - 1).max(0) * (pack.n3 as i64 - 1).max(0),
        (n - 2) * (n - 3) / 2,
    );
    p_dealer * (int(1) - p_player_given)
}

fn assemble_expectation(
    pack: &PackComposition,
    rules: &RuleVariant,
    mut value: impl FnMut(&Hand, u8) -> Result<Rational>,
) -> Result<Rational> {
    let mut ev = Rational::zero();
    for i in DENOMS {
        for j in DENOMS {
            if j < i {
                continue;
            }
            let hand = Hand::single(i).add(j);
            if !pack.contains_hand(&hand) {
                continue;
            }
            for upcard in DENOMS {
                let p = deal_probability(pack, &hand, upcard);
                if p.is_zero() {
                    continue;
                }
                ev += p * value(&hand, upcard)?;
            }
        }
    }
    ev -= match rules.natural_pay {
        NaturalPay::ThreeToTwo => dealer_natural_untied_probability(pack),
        NaturalPay::EvenMoneyLosesToNatural => dealer_natural_probability(pack),
    };
    Ok(ev - rules.commission.clone())
}

/// Memoized evaluator for one pack and rule set.
struct Solver {
    pack: PackComposition,
    rules: RuleVariant,
    emax_memo: HashMap<(Hand, u8, Hand), Rational>,
    stand_memo: HashMap<(Hand, u8, Hand), Rational>,
}

impl Solver {
    fn new(pack: PackComposition, rules: RuleVariant) -> Self {
        Solver {
            pack,
            rules,
            emax_memo: HashMap::new(),
            stand_memo: HashMap::new(),
        }
    }

    fn action_ev(
        &mut self,
        action: Action,
        hand: &Hand,
        upcard: u8,
        removals: &Hand,
    ) -> Result<Rational> {
        match action {
            Action::Stand => self.stand_ev(hand, upcard, removals),
            Action::Hit => self.hit_ev(hand, upcard, removals),
            Action::Double => self.double_ev(hand, upcard, removals),
            Action::Split => self.split_ev(hand, upcard, removals),
        }
    }

    fn stand_ev(&mut self, hand: &Hand, upcard: u8, removals: &Hand) -> Result<Rational> {
        let key = (*hand, upcard, *removals);
        if let Some(v) = self.stand_memo.get(&key) {
            return Ok(v.clone());
        }
        let v = if hand.is_natural() && removals.is_empty() {
            self.rules.natural_stand_value()
        } else {
            let available = unseen_after(hand, upcard, removals, &self.pack)?;
            let dist =
                final_total_distribution(&available, &ConditioningEvent::no_natural(upcard))?;
            dist.stand_value(hand.total().value)
        };
        self.stand_memo.insert(key, v.clone());
        Ok(v)
    }

    fn hit_ev(&mut self, hand: &Hand, upcard: u8, removals: &Hand) -> Result<Rational> {
        if hand.hard_total() >= 7 {
            return Ok(int(-1));
        }
        let unseen = unseen_after(hand, upcard, removals, &self.pack)?;
        let mut ev = Rational::zero();
        for k in DENOMS {
            let p = cond_card_prob_from_unseen(k, upcard, &unseen)?;
            if p.is_zero() {
                continue;
            }
            let next = hand.add(k);
            let v = if next.is_busted() {
                int(-1)
            } else {
                self.emax_stand_hit(&next, upcard, removals)?
            };
            ev += p * v;
        }
        Ok(ev)
    }

    /// max(E_std, E_hit), the value driving the hit recursion. A hit that
    /// could exhaust the pack is unavailable, so the hand is worth its stand
    /// value; a hand whose stand playout exhausts the pack has no value.
    fn emax_stand_hit(&mut self, hand: &Hand, upcard: u8, removals: &Hand) -> Result<Rational> {
        let key = (*hand, upcard, *removals);
        if let Some(v) = self.emax_memo.get(&key) {
            return Ok(v.clone());
        }
        let stand = self.stand_ev(hand, upcard, removals)?;
        let v = match self.hit_ev(hand, upcard, removals) {
            Ok(hit) => stand.max(hit),
            Err(Error::InsufficientCards) => stand,
            Err(e) => return Err(e),
        };
        self.emax_memo.insert(key, v.clone());
        Ok(v)
    }

    fn double_ev(&mut self, hand: &Hand, upcard: u8, removals: &Hand) -> Result<Rational> {
        let unseen = unseen_after(hand, upcard, removals, &self.pack)?;
        let mut ev = Rational::zero();
        for k in DENOMS {
            let p = cond_card_prob_from_unseen(k, upcard, &unseen)?;
            if p.is_zero() {
                continue;
            }
            let next = hand.add(k);
            let v = if next.is_busted() {
                int(-1)
            } else {
                self.stand_ev(&next, upcard, removals)?
            };
            ev += p * v;
        }
        Ok(ev * int(2))
    }

    fn split_ev(&mut self, hand: &Hand, upcard: u8, removals: &Hand) -> Result<Rational> {
        let paircard = DENOMS
            .into_iter()
            .find(|&d| hand.count(d) == 2)
            .ok_or(Error::IllegalAction)?;
        let unseen = unseen_after(hand, upcard, removals, &self.pack)?;
        let one = Hand::single(paircard);
        let mut ev = Rational::zero();
        for k in DENOMS {
            let p = cond_card_prob_from_unseen(k, upcard, &unseen)?;
            if p.is_zero() {
                continue;
            }
            // Each paircard receives exactly one card; the resulting two-card
            // hand is evaluated standing, with the other paircard removed, and
            // is never a natural.
            let split_hand = one.add(k);
            let v = self.stand_ev(&split_hand, upcard, &removals.add(paircard))?;
            ev += p * v;
        }
        Ok(ev * int(2))
    }
}

/// Plays a fixed table verbatim on a (possibly different) pack.
struct FixedPlayer<'a> {
    solver: Solver,
    table: &'a StrategyTable,
    memo: HashMap<(Hand, u8), Rational>,
}

impl FixedPlayer<'_> {
    fn value(&mut self, hand: &Hand, upcard: u8) -> Result<Rational> {
        let entry = self.lookup(hand, upcard)?;
        match entry {
            Action::Stand => self.solver.stand_ev(hand, upcard, &NO_REMOVALS),
            Action::Hit => self.hit(hand, upcard),
            Action::Double => self.solver.double_ev(hand, upcard, &NO_REMOVALS),
            Action::Split => self.solver.split_ev(hand, upcard, &NO_REMOVALS),
        }
    }

    fn lookup(&self, hand: &Hand, upcard: u8) -> Result<Action> {
        self.table
            .get(hand, upcard)
            .map(|e| e.chosen())
            .ok_or(Error::DefectiveTable {
                hand: *hand,
                upcard,
                pack: self.solver.pack,
            })
    }

    fn hit(&mut self, hand: &Hand, upcard: u8) -> Result<Rational> {
        let key = (*hand, upcard);
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let unseen = unseen_after(hand, upcard, &NO_REMOVALS, &self.solver.pack)?;
        let mut ev = Rational::zero();
        for k in DENOMS {
            let p = cond_card_prob_from_unseen(k, upcard, &unseen)?;
            if p.is_zero() {
                continue;
            }
            let next = hand.add(k);
            let v = if next.is_busted() {
                int(-1)
            } else {
                match self.lookup(&next, upcard)? {
                    Action::Stand => self.solver.stand_ev(&next, upcard, &NO_REMOVALS)?,
                    Action::Hit => self.hit(&next, upcard)?,
                    _ => return Err(Error::IllegalAction),
                }
            };
            ev += p * v;
        }
        self.memo.insert(key, ev.clone());
        Ok(ev)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::DECK;

    fn q(n: i64, d: i64) -> Rational {
        ratio(n, d)
    }

    #[test]
    fn conditional_card_probabilities_sum_to_one_and_match_worked_example() {
        let hand = Hand::new(1, 1, 0);
        let probs: Vec<Rational> = DENOMS
            .iter()
            .map(|&k| cond_card_prob(k, &hand, 3, &NO_REMOVALS, &DECK).unwrap())
            .collect();
        assert_eq!(probs, vec![q(1, 4), q(3, 16), q(9, 16)]);
        for (hand, upcard) in enumerate_decision_points(&DECK) {
            if hand.hard_total() >= 7 {
                continue;
            }
            let sum: Rational = DENOMS
                .iter()
                .map(|&k| cond_card_prob(k, &hand, upcard, &NO_REMOVALS, &DECK).unwrap())
                .sum();
            assert_eq!(sum, int(1), "at {hand:?} vs {upcard}");
        }
    }

    #[test]
    fn worked_action_examples_by_hand() {
        let hit = e_action(Action::Hit, &Hand::new(1, 1, 0), 3, &NO_REMOVALS, &DECK).unwrap();
        assert_eq!(hit, q(1, 4));
        let dbl = e_action(Action::Double, &Hand::new(1, 0, 1), 1, &NO_REMOVALS, &DECK).unwrap();
        assert_eq!(dbl, q(3, 2));
        let spl = e_action(Action::Split, &Hand::new(0, 0, 2), 2, &NO_REMOVALS, &DECK).unwrap();
        assert_eq!(spl, q(1, 5));
        let spl = e_action(Action::Split, &Hand::new(0, 0, 2), 1, &NO_REMOVALS, &DECK).unwrap();
        assert_eq!(spl, q(-4, 9));
    }

    #[test]
    fn illegal_actions_are_rejected() {
        let err = e_action(Action::Split, &Hand::new(0, 1, 1), 2, &NO_REMOVALS, &DECK).unwrap_err();
        assert_eq!(err, Error::IllegalAction);
        let err =
            e_action(Action::Double, &Hand::new(1, 0, 2), 2, &NO_REMOVALS, &DECK).unwrap_err();
        assert_eq!(err, Error::IllegalAction);
    }

    #[test]
    fn single_deck_strategy_has_five_ties_and_matches_expectation() {
        let table = basic_strategy(&DECK);
        assert_eq!(table.len(), 32);
        assert_eq!(table.nonunique_points().len(), 5);
        let tie = table.get(&Hand::new(0, 1, 1), 2).unwrap();
        assert_eq!(tie.optimal, vec![Action::Stand, Action::Hit]);
        assert_eq!(tie.emax, q(-2, 5));
        let ev = overall_expectation(&DECK, &RuleVariant::default()).unwrap();
        assert_eq!(ev, q(27, 140));
    }

    #[test]
    fn double_deck_has_one_tie() {
        let table = basic_strategy(&PackComposition::decks(2));
        assert_eq!(table.nonunique_points().len(), 1);
    }

    #[test]
    fn fixed_strategy_on_own_pack_matches_optimal() {
        for d in [1u32, 2, 3] {
            let pack = PackComposition::decks(d);
            let table = basic_strategy(&pack);
            let fixed = fixed_strategy_expectation(&pack, &table, &RuleVariant::default()).unwrap();
            let optimal = overall_expectation(&pack, &RuleVariant::default()).unwrap();
            assert_eq!(fixed, optimal, "d = {d}");
        }
    }

    /// Decision points a player following the table can actually reach:
    /// two-card hands plus table-directed hit continuations.
    fn reachable_points(table: &StrategyTable) -> Vec<(Hand, u8)> {
        let mut seen = std::collections::HashSet::new();
        let mut queue: Vec<(Hand, u8)> = table
            .entries()
            .iter()
            .filter(|e| e.hand.size() == 2)
            .map(|e| (e.hand, e.upcard))
            .collect();
        while let Some((hand, upcard)) = queue.pop() {
            if !seen.insert((hand, upcard)) {
                continue;
            }
            if table.get(&hand, upcard).map(|e| e.chosen()) == Some(Action::Hit) {
                for k in DENOMS {
                    let next = hand.add(k);
                    if !next.is_busted() && table.get(&next, upcard).is_some() {
                        queue.push((next, upcard));
                    }
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        out
    }

    #[test]
    fn reachable_strategy_is_deck_count_independent_from_nine_decks_up() {
        // The unabridged table still changes between nine and ten decks at
        // the unreachable (5,0,0) vs 2; on reachable points it is fixed.
        let tables: Vec<StrategyTable> = [9u32, 10, 13, 39]
            .iter()
            .map(|&d| basic_strategy(&PackComposition::decks(d)))
            .collect();
        let reference: Vec<(Hand, u8, Vec<Action>)> = reachable_points(&tables[0])
            .into_iter()
            .map(|(h, u)| (h, u, tables[0].get(&h, u).unwrap().optimal.clone()))
            .collect();
        for (i, table) in tables.iter().enumerate().skip(1) {
            let got: Vec<(Hand, u8, Vec<Action>)> = reachable_points(table)
                .into_iter()
                .map(|(h, u)| (h, u, table.get(&h, u).unwrap().optimal.clone()))
                .collect();
            assert_eq!(got, reference, "table {i}");
        }
        // Splitting treys against an ace becomes correct at nine decks.
        let at_8 = basic_strategy(&PackComposition::decks(8));
        assert_eq!(
            at_8.get(&Hand::new(0, 0, 2), 1).unwrap().optimal,
            vec![Action::Stand]
        );
        assert_eq!(
            tables[1].get(&Hand::new(0, 0, 2), 1).unwrap().optimal,
            vec![Action::Split]
        );
    }

    #[test]
    fn degenerate_packs_under_39_deck_strategy() {
        let table = basic_strategy(&PackComposition::decks(39));
        let rules = RuleVariant::default();
        assert_eq!(
            fixed_strategy_expectation(&PackComposition::new(9, 0, 0), &table, &rules).unwrap(),
            int(-2)
        );
        assert_eq!(
            fixed_strategy_expectation(&PackComposition::new(0, 9, 0), &table, &rules).unwrap(),
            int(0)
        );
        assert_eq!(
            fixed_strategy_expectation(&PackComposition::new(0, 0, 9), &table, &rules).unwrap(),
            int(0)
        );
    }
}
