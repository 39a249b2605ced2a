//! Dealer drawing sequences, stand expectations, and the mimic-the-dealer
//! baseline.
//!
//! The dealer stands on totals of 6 and 7, soft or hard, and otherwise hits;
//! a total above 7 is a bust. All draws are without replacement from the
//! depleted pack, and conditioning on "no dealer natural" is applied by
//! renormalizing over allowed downcards rather than by rejection.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::game::{natural_completion, Hand, PackComposition, Total, DENOMS, NO_REMOVALS};
use crate::rational::{int, ratio, Rational};

/// The event conditioned on when evaluating a decision point: the dealer shows
/// `upcard` and, for an ace or trey up, the downcard does not complete a natural.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConditioningEvent {
    pub upcard: u8,
    pub no_natural: bool,
}

impl ConditioningEvent {
    pub fn no_natural(upcard: u8) -> Self {
        ConditioningEvent {
            upcard,
            no_natural: true,
        }
    }

    pub fn unconditioned(upcard: u8) -> Self {
        ConditioningEvent {
            upcard,
            no_natural: false,
        }
    }

    /// The denomination the downcard must avoid, if any.
    pub fn forbidden_downcard(&self) -> Option<u8> {
        if self.no_natural {
            natural_completion(self.upcard)
        } else {
            None
        }
    }
}

/// One ordered dealer drawing sequence: the upcard followed by every card
/// drawn, with its exact probability under the conditioning event.
#[derive(Clone, Debug, PartialEq)]
pub struct DealerSequence {
    /// Card values in draw order, upcard first.
    pub cards: Vec<u8>,
    pub probability: Rational,
    /// Final total; a value above 7 is a bust.
    pub final_total: Total,
}

impl DealerSequence {
    pub fn is_bust(&self) -> bool {
        self.final_total.value > 7
    }

    fn multiset(&self) -> Hand {
        let mut h = NO_REMOVALS;
        for &c in &self.cards {
            h = h.add(c);
        }
        h
    }
}

/// An unordered aggregation of dealer drawing sequences: the multiset of cards
/// drawn, the number of valid orderings, and the summed probability.
#[derive(Clone, Debug, PartialEq)]
pub struct UnorderedSequence {
    pub cards: Hand,
    pub multiplicity: u32,
    pub probability: Rational,
    pub final_total: Total,
}

fn dealer_stands(total: Total) -> bool {
    total.value == 6 || total.value == 7
}

/// Exhaustive, mutually exclusive dealer drawing sequences from
/// `pack_after_removals` (the unseen cards excluding the upcard), with
/// probabilities summing to 1 under the conditioning event.
pub fn dealer_sequences(
    pack_after_removals: &PackComposition,
    event: &ConditioningEvent,
) -> Result<Vec<DealerSequence>> {
    let mut out = Vec::new();
    let forbidden = event.forbidden_downcard();
    let pack = *pack_after_removals;
    let allowed = match forbidden {
        Some(c) => pack.total() - pack.count(c),
        None => pack.total(),
    };
    if allowed == 0 {
        return Err(Error::UndefinedConditioning);
    }
    for d in DENOMS {
        if Some(d) == forbidden || pack.count(d) == 0 {
            continue;
        }
        let p = ratio(pack.count(d) as i64, allowed as i64);
        let hand = Hand::single(event.upcard).add(d);
        let mut cards = vec![event.upcard, d];
        extend(&mut out, &mut cards, hand, pack.remove(d)?, p)?;
    }
    Ok(out)
}

fn extend(
    out: &mut Vec<DealerSequence>,
    cards: &mut Vec<u8>,
    hand: Hand,
    pack: PackComposition,
    prob: Rational,
) -> Result<()> {
    let total = hand.total();
    if dealer_stands(total) || total.is_busted() {
        out.push(DealerSequence {
            cards: cards.clone(),
            probability: prob,
            final_total: total,
        });
        return Ok(());
    }
    if pack.total() == 0 {
        return Err(Error::InsufficientCards);
    }
    for d in DENOMS {
        if pack.count(d) == 0 {
            continue;
        }
        let p = &prob * ratio(pack.count(d) as i64, pack.total() as i64);
        cards.push(d);
        extend(out, cards, hand.add(d), pack.remove(d)?, p)?;
        cards.pop();
    }
    Ok(())
}

/// Aggregate ordered sequences by the multiset of cards drawn.
pub fn unordered_sequences(sequences: &[DealerSequence]) -> Vec<UnorderedSequence> {
    let mut map: HashMap<Hand, UnorderedSequence> = HashMap::new();
    for seq in sequences {
        let key = seq.multiset();
        map.entry(key)
            .and_modify(|agg| {
                agg.multiplicity += 1;
                agg.probability += &seq.probability;
            })
            .or_insert_with(|| UnorderedSequence {
                cards: key,
                multiplicity: 1,
                probability: seq.probability.clone(),
                final_total: seq.final_total,
            });
    }
    let mut out: Vec<_> = map.into_values().collect();
    out.sort_by_key(|a| a.cards);
    out
}

/// Distribution of the dealer's final total: probabilities of standing on 6,
/// standing on 7, and busting, conditioned on `event`.
pub fn final_total_distribution(
    pack_after_removals: &PackComposition,
    event: &ConditioningEvent,
) -> Result<FinalTotals> {
    let mut dist = FinalTotals {
        six: Rational::zero(),
        seven: Rational::zero(),
        bust: Rational::zero(),
    };
    for seq in dealer_sequences(pack_after_removals, event)? {
        match seq.final_total.value {
            6 => dist.six += seq.probability,
            7 => dist.seven += seq.probability,
            _ => dist.bust += seq.probability,
        }
    }
    Ok(dist)
}

#[derive(Clone, Debug, PartialEq)]
pub struct FinalTotals {
    pub six: Rational,
    pub seven: Rational,
    pub bust: Rational,
}

impl FinalTotals {
    /// Player profit per unit when standing on `player_total` (7 or below),
    /// with a dealer 7 here never a natural.
    pub fn stand_value(&self, player_total: u32) -> Rational {
        let mut ev = self.bust.clone();
        for (total, p) in [(6u32, &self.six), (7u32, &self.seven)] {
            if player_total > total {
                ev += p;
            } else if player_total < total {
                ev -= p;
            }
        }
        ev
    }
}

/// Conditional expectation of standing, `E_std(hand, upcard | removals)`.
///
/// `removals` depletes the pack beyond the hand and upcard (used for split
/// hands, which are not naturals). The untied-natural bonus of 3/2 applies
/// exactly when the hand is the player's own two-card ace-trey, i.e. when
/// `removals` is empty.
pub fn e_stand(
    hand: &Hand,
    upcard: u8,
    removals: &Hand,
    pack: &PackComposition,
) -> Result<Rational> {
    if hand.is_natural() && removals.is_empty() {
        return Ok(ratio(3, 2));
    }
    let available = pack
        .subtract_hand(hand)?
        .remove(upcard)?
        .subtract_hand(removals)?;
    let event = ConditioningEvent::no_natural(upcard);
    if let Some(c) = event.forbidden_downcard() {
        if available.total() == available.count(c) {
            return Err(Error::UndefinedConditioning);
        }
    }
    let dist = final_total_distribution(&available, &event)?;
    Ok(dist.stand_value(hand.total().value))
}

/// Outcome statistics of the mimic-the-dealer strategy: the player applies the
/// dealer's fixed hit/stand rule, with naturals resolved first.
#[derive(Clone, Debug, PartialEq)]
pub struct MimicDealer {
    pub ev: Rational,
    /// Probability that both player and dealer bust, with the dealer's hand
    /// hypothetically dealt out after a player bust.
    pub p_double_bust: Rational,
    /// Probability of an untied player natural.
    pub p_winning_natural: Rational,
}

/// Exact mimic-the-dealer statistics for `pack`.
pub fn mimic_dealer_expectation(pack: &PackComposition) -> Result<MimicDealer> {
    if pack.total() < 8 {
        return Err(Error::InsufficientCards);
    }
    let mut acc = MimicDealer {
        ev: Rational::zero(),
        p_double_bust: Rational::zero(),
        p_winning_natural: Rational::zero(),
    };
    // Deal player's two cards, then the dealer's two (order within each pair
    // is irrelevant; probabilities are exchangeable).
    for_each_draw(pack, |p1, prob1, pack1| {
        for_each_draw(&pack1, |p2, prob2, pack2| {
            for_each_draw(&pack2, |up, prob3, pack3| {
                for_each_draw(&pack3, |down, prob4, pack4| {
                    let prob = &prob1 * &prob2 * &prob3 * &prob4;
                    let player = Hand::new(0, 0, 0).add(p1).add(p2);
                    let dealer = Hand::new(0, 0, 0).add(up).add(down);
                    settle_mimic(&mut acc, player, dealer, pack4, prob);
                });
            });
        });
    });
    Ok(acc)
}

fn for_each_draw(pack: &PackComposition, mut f: impl FnMut(u8, Rational, PackComposition)) {
    let total = pack.total();
    for d in DENOMS {
        let count = pack.count(d);
        if count == 0 {
            continue;
        }
        f(
            d,
            ratio(count as i64, total as i64),
            pack.remove(d).unwrap(),
        );
    }
}

fn settle_mimic(
    acc: &mut MimicDealer,
    player: Hand,
    dealer: Hand,
    pack: PackComposition,
    prob: Rational,
) {
    match (player.is_natural(), dealer.is_natural()) {
        (true, true) => {}
        (true, false) => {
            acc.ev += &prob * ratio(3, 2);
            acc.p_winning_natural += prob;
        }
        (false, true) => acc.ev -= prob,
        (false, false) => mimic_play_out(acc, player, dealer, pack, prob),
    }
}

/// Player hits by the dealer's rule; on a player bust the dealer still deals
/// out his hand so the double bust is well defined.
fn mimic_play_out(
    acc: &mut MimicDealer,
    player: Hand,
    dealer: Hand,
    pack: PackComposition,
    prob: Rational,
) {
    let total = player.total();
    if total.is_busted() {
        acc.ev -= &prob * int(1);
        dealer_deal_out(acc, dealer, pack, prob);
        return;
    }
    if dealer_stands(total) {
        dealer_vs_standing_player(acc, total.value, dealer, pack, prob);
        return;
    }
    for_each_draw(&pack, |d, p, next| {
        mimic_play_out(acc, player.add(d), dealer, next, &prob * p);
    });
}

fn dealer_vs_standing_player(
    acc: &mut MimicDealer,
    player_total: u32,
    dealer: Hand,
    pack: PackComposition,
    prob: Rational,
) {
    let total = dealer.total();
    if total.is_busted() {
        acc.ev += prob;
        return;
    }
    if dealer_stands(total) {
        if player_total > total.value {
            acc.ev += prob;
        } else if player_total < total.value {
            acc.ev -= prob;
        }
        return;
    }
    for_each_draw(&pack, |d, p, next| {
        dealer_vs_standing_player(acc, player_total, dealer.add(d), next, &prob * p);
    });
}

/// Hypothetical deal-out after a player bust, tracking only the double bust.
fn dealer_deal_out(acc: &mut MimicDealer, dealer: Hand, pack: PackComposition, prob: Rational) {
    let total = dealer.total();
    if total.is_busted() {
        acc.p_double_bust += prob;
        return;
    }
    if dealer_stands(total) {
        return;
    }
    for_each_draw(&pack, |d, p, next| {
        dealer_deal_out(acc, dealer.add(d), next, &prob * p);
    });
}

/// Total ordered and unordered dealer drawing sequences from a fresh pack,
/// pooled over the three upcards with naturals included and no conditioning.
pub fn pooled_sequence_counts(pack: &PackComposition) -> Result<(usize, usize)> {
    let mut ordered = Vec::new();
    for upcard in DENOMS {
        let after = pack.remove(upcard)?;
        ordered.extend(dealer_sequences(
            &after,
            &ConditioningEvent::unconditioned(upcard),
        )?);
    }
    let unordered = unordered_sequences(&ordered);
    Ok((ordered.len(), unordered.len()))
}
