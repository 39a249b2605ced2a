//! Pack, hand, and total model for snackjack.
//!
//! A snackjack deck holds two aces, two deuces, and four treys. Aces count
//! 1 or 4, deuces 2, treys 3; the target total is 7. Packs and hands are
//! unordered triples of per-denomination counts.

use crate::error::{Error, Result};

/// Denomination indices are 1 = ace, 2 = deuce, 3 = trey throughout.
pub const DENOMS: [u8; 3] = [1, 2, 3];

/// Cards of each denomination in a single deck.
pub const DECK: PackComposition = PackComposition::new(2, 2, 4);

/// Composition of an arbitrary pack: counts of aces, deuces, and treys.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PackComposition {
    pub n1: u32,
    pub n2: u32,
    pub n3: u32,
}

impl PackComposition {
    pub const fn new(n1: u32, n2: u32, n3: u32) -> Self {
        PackComposition { n1, n2, n3 }
    }

    /// `d` mixed decks.
    pub const fn decks(d: u32) -> Self {
        PackComposition::new(2 * d, 2 * d, 4 * d)
    }

    pub const fn total(&self) -> u32 {
        self.n1 + self.n2 + self.n3
    }

    pub fn count(&self, denom: u8) -> u32 {
        match denom {
            1 => self.n1,
            2 => self.n2,
            3 => self.n3,
            _ => panic!("denomination out of range: {denom}"),
        }
    }

    pub fn counts(&self) -> [u32; 3] {
        [self.n1, self.n2, self.n3]
    }

    /// Remove one card of `denom`, failing if none remain.
    pub fn remove(&self, denom: u8) -> Result<Self> {
        let mut out = *self;
        let slot = match denom {
            1 => &mut out.n1,
            2 => &mut out.n2,
            3 => &mut out.n3,
            _ => panic!("denomination out of range: {denom}"),
        };
        if *slot == 0 {
            return Err(Error::InsufficientCards);
        }
        *slot -= 1;
        Ok(out)
    }

    /// Componentwise subtraction, failing on underflow.
    pub fn subtract(&self, other: &PackComposition) -> Result<Self> {
        if self.n1 < other.n1 || self.n2 < other.n2 || self.n3 < other.n3 {
            return Err(Error::InsufficientCards);
        }
        Ok(PackComposition::new(
            self.n1 - other.n1,
            self.n2 - other.n2,
            self.n3 - other.n3,
        ))
    }

    pub fn subtract_hand(&self, hand: &Hand) -> Result<Self> {
        self.subtract(&hand.as_pack())
    }

    pub fn contains_hand(&self, hand: &Hand) -> bool {
        hand.l1 <= self.n1 && hand.l2 <= self.n2 && hand.l3 <= self.n3
    }
}

impl std::fmt::Debug for PackComposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.n1, self.n2, self.n3)
    }
}

impl std::fmt::Display for PackComposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.n1, self.n2, self.n3)
    }
}

/// An unordered player (or dealer) hand: counts of aces, deuces, and treys held.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hand {
    pub l1: u32,
    pub l2: u32,
    pub l3: u32,
}

/// The empty hand, used as a neutral removal set.
pub const NO_REMOVALS: Hand = Hand::new(0, 0, 0);

impl Hand {
    pub const fn new(l1: u32, l2: u32, l3: u32) -> Self {
        Hand { l1, l2, l3 }
    }

    /// One card of `denom`.
    pub fn single(denom: u8) -> Self {
        Hand::new(0, 0, 0).add(denom)
    }

    /// A pair of `denom`.
    pub fn pair(denom: u8) -> Self {
        Hand::single(denom).add(denom)
    }

    pub const fn size(&self) -> u32 {
        self.l1 + self.l2 + self.l3
    }

    pub fn count(&self, denom: u8) -> u32 {
        match denom {
            1 => self.l1,
            2 => self.l2,
            3 => self.l3,
            _ => panic!("denomination out of range: {denom}"),
        }
    }

    #[must_use]
    pub fn add(&self, denom: u8) -> Self {
        let mut out = *self;
        match denom {
            1 => out.l1 += 1,
            2 => out.l2 += 1,
            3 => out.l3 += 1,
            _ => panic!("denomination out of range: {denom}"),
        }
        out
    }

    pub const fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub const fn is_pair(&self) -> bool {
        (self.l1 == 2 && self.l2 == 0 && self.l3 == 0)
            || (self.l1 == 0 && self.l2 == 2 && self.l3 == 0)
            || (self.l1 == 0 && self.l2 == 0 && self.l3 == 2)
    }

    /// Sum of nominal card values (ace = 1).
    pub const fn hard_total(&self) -> u32 {
        self.l1 + 2 * self.l2 + 3 * self.l3
    }

    /// Hand total with an ace promoted to 4 whenever that keeps the total at 7 or below.
    pub const fn total(&self) -> Total {
        let hard = self.hard_total();
        if self.l1 >= 1 && hard <= 4 {
            Total {
                value: hard + 3,
                soft: true,
            }
        } else {
            Total {
                value: hard,
                soft: false,
            }
        }
    }

    pub const fn is_busted(&self) -> bool {
        self.total().value > 7
    }

    /// The two-card ace-trey, the only natural.
    pub const fn is_natural(&self) -> bool {
        self.l1 == 1 && self.l2 == 0 && self.l3 == 1
    }

    pub const fn as_pack(&self) -> PackComposition {
        PackComposition::new(self.l1, self.l2, self.l3)
    }
}

impl std::fmt::Debug for Hand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.l1, self.l2, self.l3)
    }
}

impl std::fmt::Display for Hand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.l1, self.l2, self.l3)
    }
}

/// A hand total: its value and whether an ace is counted as 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Total {
    pub value: u32,
    pub soft: bool,
}

impl Total {
    pub const fn is_busted(&self) -> bool {
        self.value > 7
    }
}

impl std::fmt::Display for Total {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", if self.soft { 's' } else { 'h' }, self.value)
    }
}

/// All unordered unbusted player hands of two or more cards that fit in `pack`.
pub fn enumerate_hands(pack: &PackComposition) -> Vec<Hand> {
    let mut hands = Vec::new();
    for l1 in 0..=pack.n1.min(7) {
        for l2 in 0..=pack.n2.min(3) {
            for l3 in 0..=pack.n3.min(2) {
                let hand = Hand::new(l1, l2, l3);
                if hand.size() >= 2 && !hand.is_busted() {
                    hands.push(hand);
                }
            }
        }
    }
    hands
}

/// The forbidden downcard denomination when conditioning on "no dealer natural":
/// a trey completes an ace upcard, an ace completes a trey upcard.
pub const fn natural_completion(upcard: u8) -> Option<u8> {
    match upcard {
        1 => Some(3),
        3 => Some(1),
        _ => None,
    }
}

/// Whether the no-natural conditioning event for `(hand, upcard)` has positive
/// probability: after removing the hand and upcard, some allowed downcard must
/// remain.
pub fn conditioning_possible(pack: &PackComposition, hand: &Hand, upcard: u8) -> bool {
    let Ok(after) = pack.subtract_hand(hand).and_then(|p| p.remove(upcard)) else {
        return false;
    };
    match natural_completion(upcard) {
        Some(c) => after.total() > after.count(c),
        None => after.total() > 0,
    }
}

/// All composition-dependent basic strategy decision points `(hand, upcard)`:
/// hands from [`enumerate_hands`] paired with upcards still available, minus
/// pairs whose no-natural conditioning event has probability zero.
pub fn enumerate_decision_points(pack: &PackComposition) -> Vec<(Hand, u8)> {
    let mut points = Vec::new();
    for hand in enumerate_hands(pack) {
        for upcard in DENOMS {
            if hand.count(upcard) + 1 > pack.count(upcard) {
                continue;
            }
            if !conditioning_possible(pack, &hand, upcard) {
                continue;
            }
            points.push((hand, upcard));
        }
    }
    points
}

/// Table ordering used for strategy output: descending hard total, then
/// lexicographic hand, then upcard.
pub fn decision_point_order(a: &(Hand, u8), b: &(Hand, u8)) -> std::cmp::Ordering {
    b.0.hard_total()
        .cmp(&a.0.hard_total())
        .then_with(|| a.0.cmp(&b.0))
        .then_with(|| a.1.cmp(&b.1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_match_published_examples() {
        assert_eq!(
            Hand::new(1, 0, 1).total(),
            Total {
                value: 7,
                soft: true
            }
        );
        assert_eq!(
            Hand::new(2, 0, 0).total(),
            Total {
                value: 5,
                soft: true
            }
        );
        assert_eq!(
            Hand::new(0, 2, 1).total(),
            Total {
                value: 7,
                soft: false
            }
        );
        assert_eq!(
            Hand::new(0, 0, 0).total(),
            Total {
                value: 0,
                soft: false
            }
        );
        assert_eq!(
            Hand::new(1, 1, 1).total(),
            Total {
                value: 6,
                soft: false
            }
        );
        assert_eq!(
            Hand::new(3, 0, 0).total(),
            Total {
                value: 6,
                soft: true
            }
        );
        assert!(Hand::new(0, 1, 2).is_busted());
    }

    #[test]
    fn hand_counts_by_deck_count() {
        assert_eq!(enumerate_hands(&DECK).len(), 14);
        assert_eq!(enumerate_hands(&PackComposition::decks(2)).len(), 23);
        assert_eq!(enumerate_hands(&PackComposition::decks(3)).len(), 26);
        for d in [4, 9, 39] {
            assert_eq!(enumerate_hands(&PackComposition::decks(d)).len(), 27);
        }
    }

    #[test]
    fn decision_point_counts_by_deck_count() {
        assert_eq!(enumerate_decision_points(&DECK).len(), 32);
        assert_eq!(
            enumerate_decision_points(&PackComposition::decks(2)).len(),
            66
        );
        assert_eq!(
            enumerate_decision_points(&PackComposition::decks(3)).len(),
            77
        );
        for d in [4, 9, 39] {
            assert_eq!(
                enumerate_decision_points(&PackComposition::decks(d)).len(),
                81
            );
        }
    }

    #[test]
    fn single_deck_excludes_ace_two_deuces_vs_ace() {
        // With (1,2,0) held and an ace up, only treys remain for the downcard,
        // so conditioning on "no dealer natural" is a probability-zero event.
        let points = enumerate_decision_points(&DECK);
        assert!(!points.contains(&(Hand::new(1, 2, 0), 1)));
        assert!(points.contains(&(Hand::new(1, 2, 0), 3)));
    }

    #[test]
    fn enumerated_hands_fit_pack_and_are_unbusted() {
        for d in 1..6 {
            let pack = PackComposition::decks(d);
            for hand in enumerate_hands(&pack) {
                assert!(pack.contains_hand(&hand));
                assert!(hand.total().value <= 7);
                assert!(hand.size() >= 2);
            }
        }
    }
}
