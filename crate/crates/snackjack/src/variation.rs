//! Strategy-variation analysis for the 39-deck game: departure sets and
//! proportions, strategic effects of removal with their non-uniform weights,
//! adjusted-true-count index numbers, realized departure expectation under a
//! counting policy, and the normal (UNLLI) approximation.
//!
//! All compositions here are post-deal: the player's two cards and the dealer
//! upcard are outside the unseen shoe, so totals run over 309 cards and the
//! adjusted true count divides by 309 - n.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::closed_form::{find_formula, Quantity, SituationFormula};
use crate::counting::{round_half_split, CountSystem, Rounded, SHOE};
use crate::error::{Error, Result};
use crate::game::{natural_completion, Hand, PackComposition};
use crate::rational::{binomial, int, ratio_i128, Rational};
use crate::solver::{cond_card_prob_from_unseen, Action};

/// Cards in the post-deal shoe (312 minus the hand and upcard).
pub const POST_DEAL_CARDS: u32 = 309;
/// A fresh hand is never dealt with fewer than eight cards in the shoe,
/// which leaves at least five unseen after the deal.
pub const MIN_REMAINING: u32 = 5;
const MAX_SEEN: u32 = POST_DEAL_CARDS - MIN_REMAINING;

/// A candidate departure from basic strategy: a two-card hand, an upcard, the
/// basic action, and the alternative under consideration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Situation {
    pub hand: Hand,
    pub upcard: u8,
    pub baseline: Action,
    pub alternative: Action,
}

impl Situation {
    pub fn new(hand: Hand, upcard: u8, baseline: Action, alternative: Action) -> Result<Self> {
        let sit = Situation {
            hand,
            upcard,
            baseline,
            alternative,
        };
        if !baseline.is_legal(&hand) || !alternative.is_legal(&hand) || baseline == alternative {
            return Err(Error::IllegalAction);
        }
        sit.evaluator()?;
        Ok(sit)
    }

    pub fn label(&self) -> String {
        format!(
            "{} vs {} ({}->{})",
            self.hand,
            self.upcard,
            self.baseline.abbrev(),
            self.alternative.abbrev()
        )
    }

    /// The full post-deal shoe composition for this situation.
    pub fn caps(&self) -> [u32; 3] {
        let pack = SHOE
            .subtract_hand(&self.hand)
            .unwrap()
            .remove(self.upcard)
            .unwrap();
        pack.counts()
    }

    /// Closed-form evaluator for alternative minus baseline.
    fn evaluator(&self) -> Result<DiffEval> {
        use Action::*;
        let pair = (self.baseline, self.alternative);
        if let Some(q) = match pair {
            (Split, Stand) => Some(Quantity::StdMinusSpl),
            (Hit, Stand) if self.hand == Hand::new(0, 1, 1) => Some(Quantity::StdMinusHit),
            _ => None,
        } {
            let f = find_formula(q, &self.hand, self.upcard)
                .ok_or_else(|| Error::Domain(format!("no closed form for {}", self.label())))?;
            return Ok(DiffEval::Single(f));
        }
        let quantity = |a: Action| match a {
            Stand => Some(Quantity::Std),
            Hit => Some(Quantity::Hit),
            Double => Some(Quantity::Dbl),
            Split => None,
        };
        let (Some(qb), Some(qa)) = (quantity(self.baseline), quantity(self.alternative)) else {
            return Err(Error::Domain(format!(
                "no closed form for {}",
                self.label()
            )));
        };
        let base = find_formula(qb, &self.hand, self.upcard);
        let alt = find_formula(qa, &self.hand, self.upcard);
        match (alt, base) {
            (Some(a), Some(b)) => Ok(DiffEval::Pair { alt: a, base: b }),
            _ => Err(Error::Domain(format!(
                "no closed form for {}",
                self.label()
            ))),
        }
    }
}

enum DiffEval {
    /// A single checked-in difference formula equal to alternative - baseline.
    Single(&'static SituationFormula),
    Pair {
        alt: &'static SituationFormula,
        base: &'static SituationFormula,
    },
}

impl DiffEval {
    fn in_domain(&self, r: [u32; 3]) -> bool {
        match self {
            DiffEval::Single(f) => f.in_domain(r[0], r[1], r[2]),
            DiffEval::Pair { alt, base } => {
                alt.in_domain(r[0], r[1], r[2]) && base.in_domain(r[0], r[1], r[2])
            }
        }
    }

    /// alternative - baseline as an exact fraction with positive denominator.
    fn parts(&self, r: [u32; 3]) -> (i128, i128) {
        match self {
            DiffEval::Single(f) => f.eval_parts(r[0], r[1], r[2]),
            DiffEval::Pair { alt, base } => {
                let (a, p) = alt.eval_parts(r[0], r[1], r[2]);
                let (b, q) = base.eval_parts(r[0], r[1], r[2]);
                (a * q - b * p, p * q)
            }
        }
    }

    fn value(&self, r: [u32; 3]) -> Rational {
        let (num, den) = self.parts(r);
        ratio_i128(num, den)
    }
}

/// Exact gain of the alternative over the baseline at a post-deal
/// composition, from the closed forms. Departure semantics: take the
/// alternative action once, then resume 39-deck basic strategy (hit
/// continuations follow the basic table, not per-composition re-optimizing).
pub fn departure_value(situation: &Situation, n1: u32, n2: u32, n3: u32) -> Result<Rational> {
    let eval = situation.evaluator()?;
    if !eval.in_domain([n1, n2, n3]) {
        return Err(Error::Domain(format!(
            "({n1},{n2},{n3}) outside the domain of {}",
            situation.label()
        )));
    }
    Ok(eval.value([n1, n2, n3]))
}

/// The twelve analyzed departures, in published row order. Rows for (0,2,0)
/// and (2,0,0) are omitted: every such departure has zero realized value.
pub fn table10_situations() -> Vec<Situation> {
    use Action::*;
    let mut out = Vec::new();
    for upcard in [1u8, 2, 3] {
        out.push(Situation::new(Hand::new(0, 0, 2), upcard, Split, Stand).unwrap());
    }
    for upcard in [1u8, 2, 3] {
        out.push(Situation::new(Hand::new(0, 1, 1), upcard, Hit, Stand).unwrap());
    }
    let soft6 = Hand::new(1, 1, 0);
    out.push(Situation::new(soft6, 1, Hit, Stand).unwrap());
    out.push(Situation::new(soft6, 1, Hit, Double).unwrap());
    out.push(Situation::new(soft6, 2, Double, Stand).unwrap());
    out.push(Situation::new(soft6, 2, Double, Hit).unwrap());
    out.push(Situation::new(soft6, 3, Double, Stand).unwrap());
    out.push(Situation::new(soft6, 3, Double, Hit).unwrap());
    out
}

/// Extra constraint on seen compositions so that an allowed downcard remains
/// unseen (only for ace and trey upcards).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairCap {
    None,
    /// m1 + m2 bounded (ace up: a non-trey must remain).
    AcesDeuces(u32),
    /// m2 + m3 bounded (trey up: a non-ace must remain).
    DeucesTreys(u32),
}

/// The constrained lattice of seen compositions for a situation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DepartureSet {
    pub caps: [u32; 3],
    pub pair_cap: PairCap,
}

pub fn departure_set(situation: &Situation) -> DepartureSet {
    let caps = situation.caps();
    let pair_cap = match natural_completion(situation.upcard) {
        Some(3) => PairCap::AcesDeuces(caps[0] + caps[1] - 1),
        Some(1) => PairCap::DeucesTreys(caps[1] + caps[2] - 1),
        _ => PairCap::None,
    };
    DepartureSet { caps, pair_cap }
}

impl DepartureSet {
    fn admits(&self, m: [u32; 3]) -> bool {
        match self.pair_cap {
            PairCap::None => true,
            PairCap::AcesDeuces(cap) => m[0] + m[1] <= cap,
            PairCap::DeucesTreys(cap) => m[1] + m[2] <= cap,
        }
    }

    fn for_each(&self, n: u32, mut f: impl FnMut([u32; 3])) {
        let [c1, c2, c3] = self.caps;
        let lo1 = n.saturating_sub(c2 + c3);
        for m1 in lo1..=c1.min(n) {
            let rest = n - m1;
            let lo2 = rest.saturating_sub(c3);
            if lo2 > c2.min(rest) {
                continue;
            }
            for m2 in lo2..=c2.min(rest) {
                let m = [m1, m2, rest - m2];
                if self.admits(m) {
                    f(m);
                }
            }
        }
    }

    /// The weighted members for a given number of seen cards: hypergeometric
    /// weights over the full shoe, normalized over the admitted lattice.
    pub fn members(&self, n: u32) -> Vec<([u32; 3], Rational)> {
        let mut rows = Vec::new();
        let mut total = BigInt::zero();
        self.for_each(n, |m| {
            let w = full_shoe_weight(m);
            total += &w;
            rows.push((m, w));
        });
        rows.into_iter()
            .map(|(m, w)| (m, Rational::new(w, total.clone())))
            .collect()
    }
}

fn full_shoe_weight(m: [u32; 3]) -> BigInt {
    binomial(78, m[0] as u64) * binomial(78, m[1] as u64) * binomial(156, m[2] as u64)
}

fn check_n(n: u32) -> Result<()> {
    if !(1..=MAX_SEEN).contains(&n) {
        return Err(Error::Domain(format!("n = {n} outside 1..={MAX_SEEN}")));
    }
    Ok(())
}

/// Unweighted proportion of remaining-shoe compositions (at least five cards)
/// where the alternative strictly beats the baseline.
pub fn departure_proportion(situation: &Situation) -> Result<Rational> {
    let eval = situation.evaluator()?;
    let set = departure_set(situation);
    let [c1, c2, c3] = set.caps;
    let mut favorable: i64 = 0;
    let mut total: i64 = 0;
    for r1 in 0..=c1 {
        for r2 in 0..=c2 {
            for r3 in 0..=c3 {
                let r = [r1, r2, r3];
                if r1 + r2 + r3 < MIN_REMAINING || !eval.in_domain(r) {
                    continue;
                }
                total += 1;
                let (num, _) = eval.parts(r);
                if num > 0 {
                    favorable += 1;
                }
            }
        }
    }
    Ok(crate::rational::ratio(favorable, total))
}

/// For a hand where stand, hit, and double can each be optimal: the count of
/// remaining-shoe compositions on which each action is the optimum, plus the
/// domain size. A tie at the top goes to `basic` when it is among the tied
/// actions, otherwise to the earliest tied action in stand/hit/double order,
/// so the counts always partition the domain.
pub fn action_proportions(
    hand: &Hand,
    upcard: u8,
    basic: Action,
) -> Result<(Vec<(Action, i64)>, i64)> {
    let formulas: Vec<(Action, &SituationFormula)> = [
        (Action::Stand, Quantity::Std),
        (Action::Hit, Quantity::Hit),
        (Action::Double, Quantity::Dbl),
    ]
    .into_iter()
    .map(|(a, q)| {
        find_formula(q, hand, upcard)
            .map(|f| (a, f))
            .ok_or_else(|| Error::Domain(format!("no action formulas for {hand} vs {upcard}")))
    })
    .collect::<Result<_>>()?;
    let basic_slot = formulas
        .iter()
        .position(|(a, _)| *a == basic)
        .ok_or(Error::IllegalAction)?;
    let caps = Situation {
        hand: *hand,
        upcard,
        baseline: Action::Stand,
        alternative: Action::Hit,
    }
    .caps();
    let mut counts = vec![0i64; 3];
    let mut total = 0i64;
    for r1 in 0..=caps[0] {
        for r2 in 0..=caps[1] {
            for r3 in 0..=caps[2] {
                if r1 + r2 + r3 < MIN_REMAINING
                    || formulas.iter().any(|(_, f)| !f.in_domain(r1, r2, r3))
                {
                    continue;
                }
                total += 1;
                let parts: Vec<(i128, i128)> = formulas
                    .iter()
                    .map(|(_, f)| f.eval_parts(r1, r2, r3))
                    .collect();
                let mut top = vec![0usize];
                for i in 1..3 {
                    let (a, p) = parts[i];
                    let (b, q) = parts[top[0]];
                    match (a * q).cmp(&(b * p)) {
                        std::cmp::Ordering::Greater => top = vec![i],
                        std::cmp::Ordering::Equal => top.push(i),
                        std::cmp::Ordering::Less => {}
                    }
                }
                let winner = if top.contains(&basic_slot) {
                    basic_slot
                } else {
                    top[0]
                };
                counts[winner] += 1;
            }
        }
    }
    Ok((
        formulas.iter().map(|(a, _)| *a).zip(counts).collect(),
        total,
    ))
}

/// Weighted probability that the departure is strictly favorable after `n`
/// seen cards.
pub fn departure_probability(situation: &Situation, n: u32) -> Result<Rational> {
    check_n(n)?;
    let eval = situation.evaluator()?;
    let set = departure_set(situation);
    let mut favorable = BigInt::zero();
    let mut total = BigInt::zero();
    set.for_each(n, |m| {
        let w = full_shoe_weight(m);
        let r = remaining(set.caps, m);
        let (num, _) = eval.parts(r);
        if num > 0 {
            favorable += &w;
        }
        total += w;
    });
    Ok(Rational::new(favorable, total))
}

/// Weighted expected gain [alternative - baseline]^+ after `n` seen cards.
pub fn departure_gain(situation: &Situation, n: u32) -> Result<Rational> {
    check_n(n)?;
    let eval = situation.evaluator()?;
    let set = departure_set(situation);
    let mut buckets: BTreeMap<i128, BigInt> = BTreeMap::new();
    let mut total = BigInt::zero();
    set.for_each(n, |m| {
        let w = full_shoe_weight(m);
        let r = remaining(set.caps, m);
        let (num, den) = eval.parts(r);
        if num > 0 {
            *buckets.entry(den).or_default() += &w * BigInt::from(num);
        }
        total += w;
    });
    Ok(sum_buckets(buckets) / Rational::from_integer(total))
}

fn remaining(caps: [u32; 3], m: [u32; 3]) -> [u32; 3] {
    [caps[0] - m[0], caps[1] - m[1], caps[2] - m[2]]
}

fn sum_buckets(buckets: BTreeMap<i128, BigInt>) -> Rational {
    buckets
        .into_iter()
        .map(|(den, num)| Rational::new(num, BigInt::from(den)))
        .sum()
}

/// Strategic effects of removal for a situation, with the derived counting
/// quantities: weights, correlation, regression coefficient, and the index
/// number (a constant plus an optional 1/(309-n) term).
#[derive(Clone, Debug)]
pub struct StrategicEoR {
    pub situation: Situation,
    /// 308 * [diff(caps - e_i) - diff(caps)].
    pub eors_scaled: [Rational; 3],
    /// Conditional next-card probabilities over the full post-deal shoe;
    /// the weighted EoR sum is exactly zero.
    pub weights: [Rational; 3],
    /// diff at the full post-deal shoe.
    pub mu: Rational,
    pub rho: f64,
    pub gamma: Rational,
    /// Index number: depart when TC* is beyond
    /// `index_constant + index_n_coefficient / (309 - n)`.
    pub index_constant: Rational,
    pub index_n_coefficient: Rational,
    /// sigma_J of the counting system under these weights.
    pub sigma_j: f64,
}

impl StrategicEoR {
    /// True when the favorable side is high counts (gamma positive).
    pub fn departs_above(&self) -> bool {
        self.gamma.is_positive()
    }

    /// The practical integer trigger: the first integer strictly beyond the
    /// constant part of the index in the favorable direction.
    pub fn trigger(&self) -> i64 {
        if self.departs_above() {
            self.index_constant.ceil().to_integer().to_i64().unwrap()
        } else {
            self.index_constant.floor().to_integer().to_i64().unwrap()
        }
    }

    pub fn weighted_eor_sum(&self) -> Rational {
        self.weights
            .iter()
            .zip(&self.eors_scaled)
            .map(|(w, e)| w * e)
            .sum()
    }
}

pub fn strategic_eor(situation: &Situation, system: &CountSystem) -> Result<StrategicEoR> {
    let eval = situation.evaluator()?;
    let caps = situation.caps();
    let mu = eval.value(caps);
    let eors_scaled: [Rational; 3] = [0usize, 1, 2].map(|i| {
        let mut depleted = caps;
        depleted[i] -= 1;
        (eval.value(depleted) - &mu) * int(308)
    });
    let caps_pack = PackComposition::new(caps[0], caps[1], caps[2]);
    let weights: [Rational; 3] = [1u8, 2, 3].map(|k| {
        cond_card_prob_from_unseen(k, situation.upcard, &caps_pack)
            .expect("full post-deal shoe conditions are satisfiable")
    });
    let j = situation_points(system);
    let cross: Rational = weights
        .iter()
        .zip(&eors_scaled)
        .zip(&j)
        .map(|((w, e), jv)| w * e * jv)
        .sum();
    let mean_j: Rational = weights.iter().zip(&j).map(|(w, jv)| w * jv).sum();
    let jj: Rational = weights.iter().zip(&j).map(|(w, jv)| w * jv * jv).sum();
    let ee: Rational = weights
        .iter()
        .zip(&eors_scaled)
        .map(|(w, e)| w * e * e)
        .sum();
    let sigma_j_sq = &jj - &mean_j * &mean_j;
    let gamma = &cross / &jj;
    let rho = crate::rational::to_f64(&cross)
        / (crate::rational::to_f64(&ee) * crate::rational::to_f64(&sigma_j_sq)).sqrt();
    let index_constant = int(-52) * &mu / &gamma;
    // For a conditioned upcard, the running-count analogue of the exact
    // weighted EoR identity carries a J-term for the forbidden denomination,
    // which shifts the index by -52 c_x J_x / [(309 - c_x - 1)(309 - n)].
    let index_n_coefficient = match natural_completion(situation.upcard) {
        Some(x) => {
            let cx = caps[x as usize - 1] as i64;
            let others = POST_DEAL_CARDS as i64 - cx - 1;
            int(-52) * int(cx) * int(system.j[x as usize - 1]) / int(others)
        }
        None => Rational::zero(),
    };
    Ok(StrategicEoR {
        situation: *situation,
        eors_scaled,
        weights,
        mu,
        rho,
        gamma,
        index_constant,
        index_n_coefficient,
        sigma_j: crate::rational::to_f64(&sigma_j_sq).sqrt(),
    })
}

fn situation_points(system: &CountSystem) -> [Rational; 3] {
    system.j.map(int)
}

/// A practical departure rule: depart when the rounded adjusted true count is
/// at `trigger` or beyond, betting the clamped rounded count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeparturePolicy {
    pub trigger: i64,
    pub depart_at_or_above: bool,
    pub min_bet: i64,
    pub max_bet: i64,
}

impl DeparturePolicy {
    pub fn from_eor(eor: &StrategicEoR, min_bet: i64, max_bet: i64) -> Self {
        DeparturePolicy {
            trigger: eor.trigger(),
            depart_at_or_above: eor.departs_above(),
            min_bet,
            max_bet,
        }
    }

    fn fires(&self, k: i64) -> bool {
        if self.depart_at_or_above {
            k >= self.trigger
        } else {
            k <= self.trigger
        }
    }

    fn bet(&self, k: i64) -> i64 {
        k.clamp(self.min_bet, self.max_bet)
    }
}

/// Exact expected gain at `n` seen cards from departing whenever the rounded
/// adjusted true count satisfies the policy, weighted by the bet size.
/// Misfires count at their (negative) value.
pub fn realized_departure_ev(
    situation: &Situation,
    n: u32,
    policy: &DeparturePolicy,
    system: &CountSystem,
) -> Result<Rational> {
    check_n(n)?;
    let eval = situation.evaluator()?;
    let set = departure_set(situation);
    let unseen = (POST_DEAL_CARDS - n) as i64;
    let mut buckets: BTreeMap<i128, BigInt> = BTreeMap::new();
    let mut total = BigInt::zero();
    set.for_each(n, |m| {
        let w = full_shoe_weight(m);
        total += &w;
        let t = 52 * system.running_count(m[0], m[1], m[2]);
        // Doubled branch weights keep the half-integer split integral.
        let stake2: i64 = match round_half_split(t, unseen) {
            Rounded::Exact(k) => {
                if policy.fires(k) {
                    2 * policy.bet(k)
                } else {
                    0
                }
            }
            Rounded::Tie(k_lo) => [k_lo, k_lo + 1]
                .into_iter()
                .filter(|&k| policy.fires(k))
                .map(|k| policy.bet(k))
                .sum(),
        };
        if stake2 == 0 {
            return;
        }
        let r = remaining(set.caps, m);
        let (num, den) = eval.parts(r);
        if num == 0 {
            return;
        }
        *buckets.entry(2 * den).or_default() += w * BigInt::from(num) * BigInt::from(stake2);
    });
    Ok(sum_buckets(buckets) / Rational::from_integer(total))
}

/// Arithmetic mean of the realized departure expectation over n = 1..=233.
pub fn realized_departure_average(
    situation: &Situation,
    policy: &DeparturePolicy,
    system: &CountSystem,
) -> Result<Rational> {
    let terms: Vec<Rational> = (1u32..=233)
        .into_par_iter()
        .map(|n| realized_departure_ev(situation, n, policy, system))
        .collect::<Result<_>>()?;
    Ok(terms.into_iter().sum::<Rational>() / int(233))
}

/// Unit normal linear loss integral phi(x) - x(1 - Phi(x)).
pub fn unlli(x: f64) -> f64 {
    use statrs::distribution::ContinuousCDF;
    let normal = statrs::distribution::Normal::new(0.0, 1.0).unwrap();
    let phi = (-x * x / 2.0).exp() / (2.0 * std::f64::consts::PI).sqrt();
    phi - x * (1.0 - normal.cdf(x))
}

/// Normal approximation of the expected positive part of the estimated gain:
/// sigma_n UNLLI(-mu/sigma_n) with sigma_n = |gamma| sigma_J sqrt(n/((312-n) 311)).
pub fn normal_approx_gain(eor: &StrategicEoR, n: u32) -> f64 {
    let sigma_n = crate::rational::to_f64(&eor.gamma).abs()
        * eor.sigma_j
        * (n as f64 / ((312 - n) as f64 * 311.0)).sqrt();
    let mu = crate::rational::to_f64(&eor.mu);
    sigma_n * unlli(-mu / sigma_n)
}

/// Average of the normal approximation over n = 1..=233.
pub fn normal_approx_average(eor: &StrategicEoR) -> f64 {
    (1u32..=233)
        .map(|n| normal_approx_gain(eor, n))
        .sum::<f64>()
        / 233.0
}

/// One row of the strategy-variation summary table.
#[derive(Clone, Debug)]
pub struct Table10Row {
    pub situation: Situation,
    pub rho: f64,
    pub index_constant: Rational,
    pub has_n_term: bool,
    /// (departs_above, trigger), present only when the trigger is within the
    /// bet spread.
    pub criterion: Option<(bool, i64)>,
    /// Average realized EV over n = 1..=233 under the criterion (exact),
    /// zero when there is no criterion.
    pub average_ev: Rational,
}

impl Table10Row {
    pub fn criterion_label(&self) -> String {
        match self.criterion {
            Some((true, k)) => format!(">=+{k}"),
            Some((false, k)) => format!("<={k}"),
            None => "--".to_string(),
        }
    }
}

/// The full departure analysis for the given counting system (the published
/// table uses deuces-minus-aces). Rows whose trigger falls outside the 1..6
/// bet spread carry no criterion and zero average value.
pub fn table10(system: &CountSystem) -> Result<Vec<Table10Row>> {
    table10_situations()
        .par_iter()
        .map(|sit| {
            let eor = strategic_eor(sit, system)?;
            let trigger = eor.trigger();
            let usable = trigger.abs() <= 6;
            let (criterion, average_ev) = if usable {
                let policy = DeparturePolicy::from_eor(&eor, 1, 6);
                let avg = realized_departure_average(sit, &policy, system)?;
                (Some((eor.departs_above(), trigger)), avg)
            } else {
                (None, Rational::zero())
            };
            Ok(Table10Row {
                situation: *sit,
                rho: eor.rho,
                index_constant: eor.index_constant.clone(),
                has_n_term: !eor.index_n_coefficient.is_zero(),
                criterion,
                average_ev,
            })
        })
        .collect()
}

/// Per-n data for one situation: departure probability, conditional gain,
/// realized EV under the situation's own policy, and the normal
/// approximation.
#[derive(Clone, Debug)]
pub struct SituationCurve {
    pub n: u32,
    pub prob_departure: Rational,
    pub gain: Rational,
    pub realized_ev: Rational,
    pub approx_ev: f64,
}

pub fn situation_curves(
    situation: &Situation,
    system: &CountSystem,
    range: std::ops::RangeInclusive<u32>,
) -> Result<Vec<SituationCurve>> {
    let eor = strategic_eor(situation, system)?;
    let policy = DeparturePolicy::from_eor(&eor, 1, 6);
    range
        .into_par_iter()
        .map(|n| {
            Ok(SituationCurve {
                n,
                prob_departure: departure_probability(situation, n)?,
                gain: departure_gain(situation, n)?,
                realized_ev: realized_departure_ev(situation, n, &policy, system)?,
                approx_ev: normal_approx_gain(&eor, n),
            })
        })
        .collect()
}
