//! Shoe-composition counting and the card-counting statistics for the
//! 39-deck (312-card) game: hypergeometric weights, conditional-expectation
//! moments, effects of removal, counting-system evaluation, estimator
//! distances, betting efficiency, true-count distributions, and bet-spread
//! profit.
//!
//! Everything is exact. Per-composition expectations come from the
//! closed-form polynomial as integer numerators over the common falling
//! factorial of each slice, so a full pass over the ~980,000 distinguishable
//! shoe subsets is a stream of integer multiply-adds.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::closed_form::expectation_polynomial;
use crate::error::{Error, Result};
use crate::game::PackComposition;
use crate::rational::{binomial, falling_factorial, int, ratio, Rational};
use crate::solver::{fixed_strategy_expectation, RuleVariant, StrategyTable};

/// The 39-deck shoe: 78 aces, 78 deuces, 156 treys.
pub const SHOE: PackComposition = PackComposition::new(78, 78, 156);
pub const SHOE_SIZE: u32 = 312;
/// Largest number of seen cards that still leaves a full round (8 cards).
pub const MAX_SEEN: u32 = SHOE_SIZE - 8;

/// Per-denomination maximum counts of a shoe, grouped as (cap, multiplicity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeckProfile {
    pub name: &'static str,
    pub classes: Vec<(u32, u32)>,
}

impl DeckProfile {
    pub fn snackjack39() -> Self {
        DeckProfile {
            name: "snackjack39",
            classes: vec![(78, 2), (156, 1)],
        }
    }

    pub fn grayjack24() -> Self {
        DeckProfile {
            name: "grayjack24",
            classes: vec![(24, 1), (48, 4), (96, 1)],
        }
    }

    pub fn blackjack6() -> Self {
        DeckProfile {
            name: "blackjack6",
            classes: vec![(24, 9), (96, 1)],
        }
    }

    pub fn blackjack1() -> Self {
        DeckProfile {
            name: "blackjack1",
            classes: vec![(4, 9), (16, 1)],
        }
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "snackjack39" => Some(Self::snackjack39()),
            "grayjack24" => Some(Self::grayjack24()),
            "blackjack6" => Some(Self::blackjack6()),
            "blackjack1" => Some(Self::blackjack1()),
            _ => None,
        }
    }

    pub fn shoe_size(&self) -> u32 {
        self.classes.iter().map(|&(cap, mult)| cap * mult).sum()
    }

    pub fn denominations(&self) -> u32 {
        self.classes.iter().map(|&(_, mult)| mult).sum()
    }
}

/// Number of distinct seen-count vectors summing to `n`, by inclusion-
/// exclusion over the per-denomination caps.
pub fn composition_count(profile: &DeckProfile, n: u32) -> i128 {
    let d = profile.denominations();
    let mut total: i128 = 0;
    // Mixed-radix counter over how many denominations of each cap class
    // are forced past their cap.
    let mut choices: Vec<u32> = vec![0; profile.classes.len()];
    loop {
        let overflow: i64 = profile
            .classes
            .iter()
            .zip(&choices)
            .map(|(&(cap, _), &k)| k as i64 * (cap as i64 + 1))
            .sum();
        let excess: u32 = choices.iter().sum();
        let rem = n as i64 - overflow;
        if rem >= 0 {
            let ways: i128 = profile
                .classes
                .iter()
                .zip(&choices)
                .map(|(&(_, mult), &k)| binomial_i128(mult as u64, k as u64))
                .product();
            let solutions = binomial_i128(rem as u64 + d as u64 - 1, d as u64 - 1);
            let signed = if excess.is_multiple_of(2) { 1 } else { -1 };
            total += signed * ways * solutions;
        }
        let mut pos = 0;
        loop {
            if pos == choices.len() {
                return total;
            }
            if choices[pos] < profile.classes[pos].1 {
                choices[pos] += 1;
                break;
            }
            choices[pos] = 0;
            pos += 1;
        }
    }
}

/// Total number of distinguishable subsets: sum of [`composition_count`] over n.
pub fn composition_count_total(profile: &DeckProfile) -> i128 {
    (0..=profile.shoe_size())
        .map(|n| composition_count(profile, n))
        .sum()
}

fn binomial_i128(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Cards seen so far per denomination, inside the 39-deck shoe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeenState {
    pub m1: u32,
    pub m2: u32,
    pub m3: u32,
}

impl SeenState {
    pub fn new(m1: u32, m2: u32, m3: u32) -> Self {
        SeenState { m1, m2, m3 }
    }

    pub fn n(&self) -> u32 {
        self.m1 + self.m2 + self.m3
    }

    /// The unseen remainder of the shoe.
    pub fn remaining(&self) -> PackComposition {
        PackComposition::new(SHOE.n1 - self.m1, SHOE.n2 - self.m2, SHOE.n3 - self.m3)
    }
}

fn binom_tables() -> &'static (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    static TABLES: OnceLock<(Vec<BigInt>, Vec<BigInt>, Vec<BigInt>)> = OnceLock::new();
    TABLES.get_or_init(|| {
        let b78: Vec<BigInt> = (0..=78).map(|m| binomial(78, m)).collect();
        let b156: Vec<BigInt> = (0..=156).map(|m| binomial(156, m)).collect();
        let b312: Vec<BigInt> = (0..=312).map(|m| binomial(312, m)).collect();
        (b78, b156, b312)
    })
}

/// Multivariate hypergeometric probability of a seen state.
pub fn seen_weight(state: &SeenState) -> Rational {
    let (b78, b156, b312) = binom_tables();
    let num = &b78[state.m1 as usize] * &b78[state.m2 as usize] * &b156[state.m3 as usize];
    Rational::new(num, b312[state.n() as usize].clone())
}

fn weight_numerator(m1: u32, m2: u32, m3: u32) -> BigInt {
    let (b78, b156, _) = binom_tables();
    &b78[m1 as usize] * &b78[m2 as usize] * &b156[m3 as usize]
}

/// Visit every seen composition with m1+m2+m3 = n in the 39-deck shoe.
pub fn for_each_composition(n: u32, mut f: impl FnMut(u32, u32, u32)) {
    let lo1 = n.saturating_sub(SHOE.n2 + SHOE.n3);
    for m1 in lo1..=SHOE.n1.min(n) {
        let rest = n - m1;
        let lo2 = rest.saturating_sub(SHOE.n3);
        if lo2 > SHOE.n2.min(rest) {
            continue;
        }
        for m2 in lo2..=SHOE.n2.min(rest) {
            f(m1, m2, rest - m2);
        }
    }
}

/// Precomputed closed-form numerators P(78-m1, 78-m2, 156-m3) for every seen
/// composition; the value of the remaining shoe is P / (312-n)_8.
pub struct ExpectationTable {
    values: Vec<i128>,
}

const TABLE_MAGIC: &[u8; 8] = b"SJEXPT01";

impl ExpectationTable {
    fn idx(m1: u32, m2: u32, m3: u32) -> usize {
        ((m1 as usize * 79) + m2 as usize) * 157 + m3 as usize
    }

    /// Numerator of the remaining-shoe expectation over (312-n)_8.
    pub fn numerator(&self, m1: u32, m2: u32, m3: u32) -> i128 {
        self.values[Self::idx(m1, m2, m3)]
    }

    pub fn value(&self, state: &SeenState) -> Rational {
        let f = falling_factorial((SHOE_SIZE - state.n()) as i64, 8);
        crate::rational::ratio_i128(self.numerator(state.m1, state.m2, state.m3), f)
    }

    pub fn build() -> Self {
        if let Some(table) = Self::load_cache() {
            return table;
        }
        let poly = expectation_polynomial();
        let mut values = vec![0i128; 79 * 79 * 157];
        values
            .par_chunks_mut(157)
            .enumerate()
            .for_each(|(pair, chunk)| {
                let m1 = (pair / 79) as u32;
                let m2 = (pair % 79) as u32;
                let coeffs = poly.collapse_to_x3((78 - m1) as i64, (78 - m2) as i64);
                for (m3, slot) in chunk.iter_mut().enumerate() {
                    let x3 = (156 - m3 as i64) as i128;
                    let mut acc = 0i128;
                    for c in coeffs.iter().rev() {
                        acc = acc * x3 + c;
                    }
                    *slot = acc;
                }
            });
        let table = ExpectationTable { values };
        table.store_cache();
        table
    }

    /// Process-wide shared instance.
    pub fn shared() -> &'static ExpectationTable {
        static TABLE: OnceLock<ExpectationTable> = OnceLock::new();
        TABLE.get_or_init(ExpectationTable::build)
    }

    fn cache_path() -> Option<std::path::PathBuf> {
        let dir = std::env::var_os("SNACKJACK_CACHE_DIR")?;
        Some(std::path::Path::new(&dir).join("expectation_table.bin"))
    }

    fn load_cache() -> Option<Self> {
        let path = Self::cache_path()?;
        let bytes = std::fs::read(path).ok()?;
        let expected = 8 + 79 * 79 * 157 * 16;
        if bytes.len() != expected || &bytes[..8] != TABLE_MAGIC {
            return None;
        }
        let values: Vec<i128> = bytes[8..]
            .chunks_exact(16)
            .map(|c| i128::from_le_bytes(c.try_into().unwrap()))
            .collect();
        Some(ExpectationTable { values })
    }

    fn store_cache(&self) {
        let Some(path) = Self::cache_path() else {
            return;
        };
        if let Some(parent) = path.parent() {
            let _ = std::fs::create_dir_all(parent);
        }
        let mut bytes = Vec::with_capacity(8 + self.values.len() * 16);
        bytes.extend_from_slice(TABLE_MAGIC);
        for v in &self.values {
            bytes.extend_from_slice(&v.to_le_bytes());
        }
        let _ = std::fs::write(path, bytes);
    }
}

/// The full-shoe expectation mu = E(78,78,156).
pub fn full_shoe_expectation() -> &'static Rational {
    static MU: OnceLock<Rational> = OnceLock::new();
    MU.get_or_init(|| crate::closed_form::poly_expectation(78, 78, 156).unwrap())
}

/// Fundamental-theorem statistics of the conditional expectation Z_n given
/// `n` seen cards: its (constant) mean, E[(Z_n - nu)^+], and variance.
#[derive(Clone, Debug, PartialEq)]
pub struct FtccStats {
    pub n: u32,
    pub mean: Rational,
    pub mean_pos_excess: Rational,
    pub variance: Rational,
}

fn check_n(n: u32) -> Result<()> {
    if !(1..=MAX_SEEN).contains(&n) {
        return Err(Error::Domain(format!("n = {n} outside 1..={MAX_SEEN}")));
    }
    Ok(())
}

pub fn ftcc_stats(n: u32, nu: &Rational) -> Result<FtccStats> {
    check_n(n)?;
    let table = ExpectationTable::shared();
    let f = falling_factorial((SHOE_SIZE - n) as i64, 8);
    let (nu_num, nu_den) = small_fraction(nu, "commission");
    let mu = full_shoe_expectation();
    let (mu_num, mu_den) = small_fraction(mu, "mu");
    let mut sum_mean = BigInt::zero();
    let mut sum_pos = BigInt::zero();
    let mut sum_var = BigInt::zero();
    for_each_composition(n, |m1, m2, m3| {
        let w = weight_numerator(m1, m2, m3);
        let p = table.numerator(m1, m2, m3);
        sum_mean += &w * BigInt::from(p);
        let excess = p * nu_den - nu_num * f;
        if excess > 0 {
            sum_pos += &w * BigInt::from(excess);
        }
        let diff = BigInt::from(p * mu_den - mu_num * f);
        sum_var += &w * (&diff * &diff);
    });
    let (_, _, b312) = binom_tables();
    let total = &b312[n as usize];
    let f_big = BigInt::from(f);
    Ok(FtccStats {
        n,
        mean: Rational::new(sum_mean, total * &f_big),
        mean_pos_excess: Rational::new(sum_pos, total * &f_big * nu_den),
        variance: Rational::new(sum_var, total * &f_big * &f_big * (mu_den * mu_den)),
    })
}

fn small_fraction(q: &Rational, what: &str) -> (i128, i128) {
    let num = q
        .numer()
        .to_i128()
        .unwrap_or_else(|| panic!("{what} numerator too large"));
    let den = q
        .denom()
        .to_i128()
        .unwrap_or_else(|| panic!("{what} denominator too large"));
    assert!(
        den.abs() < 1 << 50,
        "{what} denominator too large for exact i128 path"
    );
    (num, den)
}

/// Red-and-black (odd-and-even) reference statistics for an N-card deck:
/// exact E[(Z_n)^+] and the standard deviation of Z_n.
#[derive(Clone, Debug, PartialEq)]
pub struct RedBlackStats {
    pub mean_pos: Rational,
    pub sd_squared: Rational,
    pub sd: f64,
}

pub fn red_black_stats(deck_size: u32, n: u32) -> Result<RedBlackStats> {
    if !deck_size.is_multiple_of(2) || n < 1 || n >= deck_size {
        return Err(Error::Domain(format!(
            "need even N and 1 <= n < N, got N={deck_size} n={n}"
        )));
    }
    let half = (deck_size / 2) as u64;
    let mut sum = Rational::zero();
    for k in 0..=(n / 2) as u64 {
        let surplus = n as i64 - 2 * k as i64;
        if surplus == 0 {
            continue;
        }
        let ways = binomial(half, k) * binomial(half, n as u64 - k);
        sum += Rational::new(
            BigInt::from(surplus) * ways,
            binomial(deck_size as u64, n as u64),
        );
    }
    let mean_pos = sum / int((deck_size - n) as i64);
    let sd_squared = ratio(n as i64, (deck_size - n) as i64 * (deck_size - 1) as i64);
    let sd = crate::rational::to_f64(&sd_squared).sqrt();
    Ok(RedBlackStats {
        mean_pos,
        sd_squared,
        sd,
    })
}

/// Effects of removal scaled by 311: 311 * [E(shoe - e_i) - E(shoe)].
#[derive(Clone, Debug, PartialEq)]
pub struct EffectsOfRemoval {
    pub scaled: [Rational; 3],
}

impl EffectsOfRemoval {
    /// The balance constraint E1 + E2 + 2 E3, zero for the 39-deck shoe.
    pub fn balance(&self) -> Rational {
        &self.scaled[0] + &self.scaled[1] + int(2) * &self.scaled[2]
    }
}

/// EoRs computed by replaying `strategy` on the singly-depleted shoes.
pub fn effects_of_removal(strategy: &StrategyTable) -> Result<EffectsOfRemoval> {
    let rules = RuleVariant::default();
    let base = fixed_strategy_expectation(&SHOE, strategy, &rules)?;
    let mut scaled = Vec::with_capacity(3);
    for i in [1u8, 2, 3] {
        let depleted = SHOE.remove(i)?;
        let ev = fixed_strategy_expectation(&depleted, strategy, &rules)?;
        scaled.push((ev - &base) * int(311));
    }
    Ok(EffectsOfRemoval {
        scaled: scaled.try_into().unwrap(),
    })
}

/// EoRs from the closed-form polynomial (equal to the replayed ones).
pub fn effects_of_removal_closed_form() -> &'static EffectsOfRemoval {
    static EORS: OnceLock<EffectsOfRemoval> = OnceLock::new();
    EORS.get_or_init(|| {
        let base = full_shoe_expectation();
        let scaled = [1usize, 2, 3].map(|i| {
            let mut counts = [78u32, 78, 156];
            counts[i - 1] -= 1;
            let ev = crate::closed_form::poly_expectation(counts[0], counts[1], counts[2]).unwrap();
            (ev - base) * int(311)
        });
        EffectsOfRemoval { scaled }
    })
}

/// Scaled effects of removal (N-1) * EoR_N(i) for snackjack-proportioned
/// packs, evaluated with the closed form. `None` means the infinite-shoe
/// limit.
pub fn scaled_eor_row(deck_cards: Option<u32>) -> [Rational; 3] {
    match deck_cards {
        Some(n_cards) => {
            assert!(
                n_cards % 4 == 0 && n_cards >= 16,
                "pack must keep snackjack proportions"
            );
            let pack = [n_cards / 4, n_cards / 4, n_cards / 2];
            let base = crate::closed_form::poly_expectation(pack[0], pack[1], pack[2]).unwrap();
            [0usize, 1, 2].map(|i| {
                let mut counts = pack;
                counts[i] -= 1;
                let ev =
                    crate::closed_form::poly_expectation(counts[0], counts[1], counts[2]).unwrap();
                (ev - &base) * int((n_cards - 1) as i64)
            })
        }
        None => crate::closed_form::infinite_shoe_scaled_eor(),
    }
}

/// A card-counting system: integer point values per denomination.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CountSystem {
    pub j: [i64; 3],
}

/// The level-one deuces-minus-aces system, snackjack's Hi-Lo analogue.
pub const DEUCES_MINUS_ACES: CountSystem = CountSystem { j: [-1, 1, 0] };
/// The best level-six system.
pub const LEVEL_SIX: CountSystem = CountSystem { j: [-4, 6, -1] };

impl CountSystem {
    pub fn new(j1: i64, j2: i64, j3: i64) -> Self {
        CountSystem { j: [j1, j2, j3] }
    }

    /// Balanced means the point values sum to zero over the full pack.
    pub fn is_balanced(&self) -> bool {
        self.j[0] + self.j[1] + 2 * self.j[2] == 0
    }

    pub fn level(&self) -> i64 {
        self.j.iter().map(|v| v.abs()).max().unwrap()
    }

    /// Running-count value of a seen composition.
    pub fn running_count(&self, m1: u32, m2: u32, m3: u32) -> i64 {
        self.j[0] * m1 as i64 + self.j[1] * m2 as i64 + self.j[2] * m3 as i64
    }

    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<i64> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| Error::InvalidConfig(format!("bad count system {s:?}")))
            })
            .collect::<Result<_>>()?;
        if parts.len() != 3 {
            return Err(Error::InvalidConfig(format!(
                "count system needs three values, got {s:?}"
            )));
        }
        Ok(CountSystem {
            j: [parts[0], parts[1], parts[2]],
        })
    }
}

impl std::fmt::Display for CountSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.j[0], self.j[1], self.j[2])
    }
}

/// Correlation with the EoRs and the least-squares regression coefficient of
/// a balanced counting system.
#[derive(Clone, Debug)]
pub struct CountSystemEval {
    pub rho: f64,
    pub gamma: Rational,
}

pub fn count_system_eval(system: &CountSystem) -> Result<CountSystemEval> {
    if !system.is_balanced() {
        return Err(Error::Domain(format!(
            "count system {system} is not balanced"
        )));
    }
    let eors = effects_of_removal_closed_form();
    let [e1, e2, e3] = &eors.scaled;
    let [j1, j2, j3] = system.j.map(int);
    let cross = e1 * &j1 + e2 * &j2 + int(2) * e3 * &j3;
    let jj = &j1 * &j1 + &j2 * &j2 + int(2) * &j3 * &j3;
    let ee = e1 * e1 + e2 * e2 + int(2) * e3 * e3;
    let gamma = &cross / &jj;
    let rho = crate::rational::to_f64(&cross)
        / (crate::rational::to_f64(&ee) * crate::rational::to_f64(&jj)).sqrt();
    Ok(CountSystemEval { rho, gamma })
}

/// Which linear estimate of Z_n to compare against the exact value.
#[derive(Clone, Debug, PartialEq)]
pub enum Estimator {
    /// mu + (m . E) / (312 - n), the EoR-based linearization.
    EorLinear,
    /// mu + gamma (m . J) / (312 - n) for a balanced counting system.
    CountLinear(CountSystem),
}

/// Exact L1 distance between Z_n and the chosen linear estimator.
pub fn estimator_l1_distance(n: u32, estimator: &Estimator) -> Result<Rational> {
    check_n(n)?;
    let table = ExpectationTable::shared();
    let f = BigInt::from(falling_factorial((SHOE_SIZE - n) as i64, 8));
    let unseen = BigInt::from(SHOE_SIZE - n);
    let mu = full_shoe_expectation();
    let slopes: [Rational; 3] = match estimator {
        Estimator::EorLinear => effects_of_removal_closed_form().scaled.clone(),
        Estimator::CountLinear(system) => {
            let eval = count_system_eval(system)?;
            system.j.map(|j| &eval.gamma * int(j))
        }
    };
    // Common denominator for value - mu - (m . slopes)/(312-n).
    let mut d: BigInt = &f * mu.denom() * &unseen;
    for s in &slopes {
        d = num_integer::Integer::lcm(&d, &(s.denom() * &unseen));
    }
    let scale_value = &d / &f;
    let mu_const = mu.numer() * (&d / mu.denom());
    let slope_consts: Vec<BigInt> = slopes
        .iter()
        .map(|s| s.numer() * (&d / (s.denom() * &unseen)))
        .collect();
    let mut sum_abs = BigInt::zero();
    for_each_composition(n, |m1, m2, m3| {
        let w = weight_numerator(m1, m2, m3);
        let p = table.numerator(m1, m2, m3);
        let mut term = BigInt::from(p) * &scale_value - &mu_const;
        term -= &slope_consts[0] * BigInt::from(m1);
        term -= &slope_consts[1] * BigInt::from(m2);
        term -= &slope_consts[2] * BigInt::from(m3);
        sum_abs += w * term.abs();
    });
    let (_, _, b312) = binom_tables();
    Ok(Rational::new(sum_abs, &b312[n as usize] * d))
}

/// Betting efficiency at `n` seen cards: count-triggered expected profit over
/// the full-information expected profit.
pub fn betting_efficiency(n: u32, system: &CountSystem, nu: &Rational) -> Result<Rational> {
    let (num, den) = betting_efficiency_parts(n, system, nu)?;
    if den.is_zero() {
        return Err(Error::Domain(format!(
            "betting efficiency undefined at n = {n}"
        )));
    }
    Ok(num / den)
}

/// Numerator E[(Z_n - nu) 1{Z_n* - nu >= 0}] and denominator E[(Z_n - nu)^+].
pub fn betting_efficiency_parts(
    n: u32,
    system: &CountSystem,
    nu: &Rational,
) -> Result<(Rational, Rational)> {
    check_n(n)?;
    let eval = count_system_eval(system)?;
    let table = ExpectationTable::shared();
    let f = falling_factorial((SHOE_SIZE - n) as i64, 8);
    let unseen = (SHOE_SIZE - n) as i128;
    let (nu_num, nu_den) = small_fraction(nu, "commission");
    let mu = full_shoe_expectation();
    let (mu_num, mu_den) = small_fraction(mu, "mu");
    let (g_num, g_den) = small_fraction(&eval.gamma, "gamma");
    // Z_n* - nu >= 0, cleared of its (positive) denominators:
    // (mu_num nu_den - nu_num mu_den) g_den unseen + g_num (mu_den nu_den) rc >= 0.
    let const_part = (mu_num * nu_den - nu_num * mu_den)
        .checked_mul(unseen)
        .and_then(|x| x.checked_mul(g_den))
        .expect("indicator constant fits i128");
    let rc_scale = g_num
        .checked_mul(mu_den * nu_den)
        .expect("indicator slope fits i128");
    let mut sum_trigger = BigInt::zero();
    let mut sum_pos = BigInt::zero();
    for_each_composition(n, |m1, m2, m3| {
        let p = table.numerator(m1, m2, m3);
        let excess = p * nu_den - nu_num * f;
        let rc = system.running_count(m1, m2, m3) as i128;
        let trigger = const_part + rc_scale * rc >= 0;
        if !trigger && excess <= 0 {
            return;
        }
        let w = weight_numerator(m1, m2, m3);
        if trigger {
            sum_trigger += &w * BigInt::from(excess);
        }
        if excess > 0 {
            sum_pos += w * BigInt::from(excess);
        }
    });
    let (_, _, b312) = binom_tables();
    let denom = &b312[n as usize] * BigInt::from(f) * BigInt::from(nu_den);
    Ok((
        Rational::new(sum_trigger, denom.clone()),
        Rational::new(sum_pos, denom),
    ))
}

/// Average betting efficiency over n = 2..=233 (the first three quarters of
/// the shoe, excluding the undefined n = 1).
pub fn aggregate_betting_efficiency(system: &CountSystem, nu: &Rational) -> Result<Rational> {
    let terms: Vec<Rational> = (2u32..=233)
        .into_par_iter()
        .map(|n| betting_efficiency(n, system, nu))
        .collect::<Result<_>>()?;
    Ok(terms.into_iter().sum::<Rational>() / int(232))
}

/// True-count threshold above which the linear estimate signals a positive
/// net expectation: 52 (nu - mu) / gamma.
pub fn true_count_threshold(system: &CountSystem, nu: &Rational) -> Result<Rational> {
    let eval = count_system_eval(system)?;
    Ok(int(52) * (nu - full_shoe_expectation()) / eval.gamma)
}

/// Exact pmf of the rounded true count [TC_n], with exact half-integer values
/// split half-and-half between the two neighbors.
pub fn rounded_tc_distribution(n: u32, system: &CountSystem) -> Result<Vec<(i64, Rational)>> {
    check_n(n)?;
    let mut masses: std::collections::BTreeMap<i64, BigInt> = std::collections::BTreeMap::new();
    let unseen = (SHOE_SIZE - n) as i64;
    for_each_composition(n, |m1, m2, m3| {
        let w = weight_numerator(m1, m2, m3);
        let t = 52 * system.running_count(m1, m2, m3);
        // Doubled masses so the half-split stays integral.
        match round_half_split(t, unseen) {
            Rounded::Exact(k) => {
                *masses.entry(k).or_default() += &w * BigInt::from(2);
            }
            Rounded::Tie(k_lo) => {
                *masses.entry(k_lo).or_default() += &w;
                *masses.entry(k_lo + 1).or_default() += &w;
            }
        }
    });
    let (_, _, b312) = binom_tables();
    let denom = &b312[n as usize] * BigInt::from(2);
    Ok(masses
        .into_iter()
        .map(|(k, m)| (k, Rational::new(m, denom.clone())))
        .collect())
}

/// Result of rounding t/q to the nearest integer with symmetric tie handling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounded {
    Exact(i64),
    /// t/q = k + 1/2 exactly; mass splits between k and k+1.
    Tie(i64),
}

pub fn round_half_split(t: i64, q: i64) -> Rounded {
    debug_assert!(q > 0);
    let num = 2 * t + q;
    let den = 2 * q;
    if num.rem_euclid(den) == 0 {
        Rounded::Tie(num.div_euclid(den) - 1)
    } else {
        Rounded::Exact(num.div_euclid(den))
    }
}

/// Conditional net expectation and probability of a rounded-true-count bucket.
#[derive(Clone, Debug)]
pub struct ConditionalEv {
    pub ev: Rational,
    pub prob: Rational,
}

/// E[Z_n - nu | [TC_n] = k] under the deuces-minus-aces system.
pub fn conditional_ev_given_tc(n: u32, k: i64, nu: &Rational) -> Result<ConditionalEv> {
    conditional_ev_given_tc_with(n, k, nu, &DEUCES_MINUS_ACES)
}

pub fn conditional_ev_given_tc_with(
    n: u32,
    k: i64,
    nu: &Rational,
    system: &CountSystem,
) -> Result<ConditionalEv> {
    check_n(n)?;
    let table = ExpectationTable::shared();
    let f = falling_factorial((SHOE_SIZE - n) as i64, 8);
    let (nu_num, nu_den) = small_fraction(nu, "commission");
    let unseen = (SHOE_SIZE - n) as i64;
    let mut mass = BigInt::zero();
    let mut value = BigInt::zero();
    for_each_composition(n, |m1, m2, m3| {
        let t = 52 * system.running_count(m1, m2, m3);
        let share: u32 = match round_half_split(t, unseen) {
            Rounded::Exact(kk) if kk == k => 2,
            Rounded::Tie(k_lo) if k_lo == k || k_lo + 1 == k => 1,
            _ => 0,
        };
        if share == 0 {
            return;
        }
        let w = weight_numerator(m1, m2, m3);
        let p = table.numerator(m1, m2, m3);
        let excess = BigInt::from(p * nu_den - nu_num * f);
        mass += &w * BigInt::from(share);
        value += w * excess * BigInt::from(share);
    });
    if mass.is_zero() {
        return Err(Error::Domain(format!(
            "[TC_{n}] = {k} has probability zero"
        )));
    }
    let (_, _, b312) = binom_tables();
    let prob = Rational::new(mass.clone(), &b312[n as usize] * BigInt::from(2));
    let ev = Rational::new(value, mass * BigInt::from(f) * BigInt::from(nu_den));
    Ok(ConditionalEv { ev, prob })
}

/// Expected profit betting max(min_bet, min([TC_n], max_bet)) units at `n`
/// seen cards, commission nu per unit.
pub fn bet_spread_profit(
    n: u32,
    nu: &Rational,
    min_bet: i64,
    max_bet: i64,
    system: &CountSystem,
) -> Result<Rational> {
    check_n(n)?;
    if min_bet > max_bet {
        return Err(Error::InvalidConfig(format!(
            "min_bet {min_bet} > max_bet {max_bet}"
        )));
    }
    let table = ExpectationTable::shared();
    let f = falling_factorial((SHOE_SIZE - n) as i64, 8);
    let (nu_num, nu_den) = small_fraction(nu, "commission");
    let unseen = (SHOE_SIZE - n) as i64;
    let clamp = |k: i64| k.clamp(min_bet, max_bet);
    let mut sum = BigInt::zero();
    for_each_composition(n, |m1, m2, m3| {
        let t = 52 * system.running_count(m1, m2, m3);
        // Doubled bet size so tie-splitting stays integral.
        let bet2 = match round_half_split(t, unseen) {
            Rounded::Exact(k) => 2 * clamp(k),
            Rounded::Tie(k_lo) => clamp(k_lo) + clamp(k_lo + 1),
        };
        let w = weight_numerator(m1, m2, m3);
        let p = table.numerator(m1, m2, m3);
        let excess = p * nu_den - nu_num * f;
        sum += w * BigInt::from(excess) * BigInt::from(bet2);
    });
    let (_, _, b312) = binom_tables();
    Ok(Rational::new(
        sum,
        &b312[n as usize] * BigInt::from(2 * f) * BigInt::from(nu_den),
    ))
}

/// Average spread profit over seen counts 0..=last; the n = 0 term bets one
/// unit and is worth mu - nu.
pub fn bet_spread_average(
    last: u32,
    nu: &Rational,
    min_bet: i64,
    max_bet: i64,
    system: &CountSystem,
) -> Result<Rational> {
    let terms: Vec<Rational> = (1u32..=last)
        .into_par_iter()
        .map(|n| bet_spread_profit(n, nu, min_bet, max_bet, system))
        .collect::<Result<_>>()?;
    let n0 = full_shoe_expectation() - nu;
    Ok((n0 + terms.into_iter().sum::<Rational>()) / int(last as i64 + 1))
}

/// Whether a symmetric-about-zero pmf is bimodal: its mode is off-center, so
/// the maximum is attained at a symmetric pair +/-k rather than at 0.
pub fn is_bimodal(pmf: &[(i64, Rational)]) -> bool {
    let Some(max) = pmf.iter().map(|(_, p)| p).max() else {
        return false;
    };
    match pmf.iter().find(|(k, _)| *k == 0) {
        Some((_, center)) => max > center,
        None => true,
    }
}

/// One row of the per-n statistics CSV.
#[derive(Clone, Debug)]
pub struct PerNRow {
    pub n: u32,
    pub mean: Rational,
    pub mean_pos: Rational,
    pub variance: Rational,
    pub be_level1: Option<Rational>,
    pub be_level6: Option<Rational>,
    pub spread_profit: Rational,
}

pub fn per_n_row(n: u32, nu: &Rational) -> Result<PerNRow> {
    let stats = ftcc_stats(n, nu)?;
    let be1 = betting_efficiency(n, &DEUCES_MINUS_ACES, nu).ok();
    let be6 = betting_efficiency(n, &LEVEL_SIX, nu).ok();
    let spread = bet_spread_profit(n, nu, 1, 6, &DEUCES_MINUS_ACES)?;
    Ok(PerNRow {
        n,
        mean: stats.mean,
        mean_pos: stats.mean_pos_excess,
        variance: stats.variance,
        be_level1: be1,
        be_level6: be6,
        spread_profit: spread,
    })
}

pub fn per_n_rows(range: std::ops::RangeInclusive<u32>, nu: &Rational) -> Result<Vec<PerNRow>> {
    range.into_par_iter().map(|n| per_n_row(n, nu)).collect()
}

/// The 39-deck basic strategy table shared by removal-effect replays.
pub fn shoe_basic_strategy() -> &'static StrategyTable {
    static TABLE: OnceLock<StrategyTable> = OnceLock::new();
    TABLE.get_or_init(|| crate::solver::basic_strategy(&SHOE))
}

/// Sum of per-state weights over a slice; exposed for property tests.
pub fn slice_weight_total(n: u32) -> Rational {
    let mut sum = BigInt::zero();
    for_each_composition(n, |m1, m2, m3| {
        sum += weight_numerator(m1, m2, m3);
    });
    let (_, _, b312) = binom_tables();
    Rational::new(sum, b312[n as usize].clone())
}
