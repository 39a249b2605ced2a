//! Closed-form expectation formulas: the degree-8 trivariate polynomial for
//! fixed-strategy expectation and the per-situation rational functions used
//! for strategy-variation analysis. Both ship as plain-text coefficient
//! tables and act as independent oracles for the recursive solver.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::game::Hand;
use crate::rational::{falling_factorial, ratio_i128, Rational};

pub const EXPECTATION_POLY_DATA: &str = include_str!("closed_form/expectation_poly.txt");
pub const SITUATION_FORMULA_DATA: &str = include_str!("closed_form/situation_formulas.txt");

/// SHA-256 of the checked-in polynomial coefficient table.
pub const EXPECTATION_POLY_SHA256: &str =
    "e3eb8d77b6ce4fa3d717d107c60d741d76feeb2be09f90866a7adf8817cdf266";

/// A trivariate integer polynomial stored as exponent-triple -> coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivariatePolynomial {
    terms: Vec<(u8, u8, u8, i64)>,
}

impl TrivariatePolynomial {
    pub fn from_terms(mut terms: Vec<(u8, u8, u8, i64)>) -> Self {
        terms.retain(|t| t.3 != 0);
        terms.sort_by_key(|&(i, j, k, _)| (i, j, k));
        TrivariatePolynomial { terms }
    }

    pub fn terms(&self) -> &[(u8, u8, u8, i64)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u8 {
        self.terms
            .iter()
            .map(|&(i, j, k, _)| i + j + k)
            .max()
            .unwrap_or(0)
    }

    /// Exact evaluation; correct in i128 for all arguments up to a few
    /// hundred (the 312-card shoe domain is far inside the safe range).
    pub fn eval_i128(&self, n1: i64, n2: i64, n3: i64) -> i128 {
        let mut pw = [[1i128; 9]; 3];
        for (v, x) in [n1, n2, n3].into_iter().enumerate() {
            for e in 1..9 {
                pw[v][e] = pw[v][e - 1] * x as i128;
            }
        }
        self.terms
            .iter()
            .map(|&(i, j, k, c)| {
                c as i128 * pw[0][i as usize] * pw[1][j as usize] * pw[2][k as usize]
            })
            .sum()
    }

    /// Coefficients in `x3` after fixing `(x1, x2)`: index `k` holds
    /// sum over (i,j) of c_{ijk} x1^i x2^j. Used for fast lattice sweeps.
    pub fn collapse_to_x3(&self, n1: i64, n2: i64) -> [i128; 9] {
        let mut pw1 = [1i128; 9];
        let mut pw2 = [1i128; 9];
        for e in 1..9 {
            pw1[e] = pw1[e - 1] * n1 as i128;
            pw2[e] = pw2[e - 1] * n2 as i128;
        }
        let mut out = [0i128; 9];
        for &(i, j, k, c) in &self.terms {
            out[k as usize] += c as i128 * pw1[i as usize] * pw2[j as usize];
        }
        out
    }

    /// Substitute the linear forms x_i = scale_i * d + offset_i, producing the
    /// coefficients of a univariate polynomial in d (ascending degree).
    pub fn substitute_linear(&self, forms: [(i64, i64); 3]) -> Vec<BigInt> {
        let deg = 8usize;
        let mut powers: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(3);
        for &(scale, offset) in forms.iter() {
            let mut acc: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
            let base = vec![BigInt::from(offset), BigInt::from(scale)];
            for e in 1..=deg {
                let next = poly_mul(&acc[e - 1], &base);
                acc.push(next);
            }
            powers.push(acc);
        }
        let mut out = vec![BigInt::zero(); 3 * deg + 2];
        for &(i, j, k, c) in &self.terms {
            let prod = poly_mul(
                &poly_mul(&powers[0][i as usize], &powers[1][j as usize]),
                &powers[2][k as usize],
            );
            for (e, coeff) in prod.iter().enumerate() {
                out[e] += coeff * BigInt::from(c);
            }
        }
        while out.len() > 1 && out.last().unwrap().is_zero() {
            out.pop();
        }
        out
    }
}

pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn parse_coefficient_lines(text: &str) -> impl Iterator<Item = (u8, u8, u8, i64)> + '_ {
    text.lines().filter_map(|line| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with("FORMULA") {
            return None;
        }
        let line = line.strip_prefix('(')?;
        let (exps, coeff) = line.split_once(')')?;
        let mut it = exps.split_whitespace();
        let i: u8 = it.next()?.parse().ok()?;
        let j: u8 = it.next()?.parse().ok()?;
        let k: u8 = it.next()?.parse().ok()?;
        let c: i64 = coeff.trim().parse().ok()?;
        Some((i, j, k, c))
    })
}

/// The checked-in degree-8 numerator polynomial P with
/// E(n1,n2,n3) = P(n1,n2,n3) / (n1+n2+n3)_8.
pub fn expectation_polynomial() -> &'static TrivariatePolynomial {
    static POLY: OnceLock<TrivariatePolynomial> = OnceLock::new();
    POLY.get_or_init(|| {
        TrivariatePolynomial::from_terms(parse_coefficient_lines(EXPECTATION_POLY_DATA).collect())
    })
}

/// Fixed-strategy (39-deck basic) expectation from the closed form,
/// exact for every composition with at least eight cards.
pub fn poly_expectation(n1: u32, n2: u32, n3: u32) -> Result<Rational> {
    let n = (n1 + n2 + n3) as i64;
    if n < 8 {
        return Err(Error::Domain(format!(
            "composition ({n1},{n2},{n3}) has fewer than 8 cards"
        )));
    }
    let p = expectation_polynomial().eval_i128(n1 as i64, n2 as i64, n3 as i64);
    Ok(ratio_i128(p, falling_factorial(n, 8)))
}

/// Which conditional expectation (or difference) a situation formula evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    Std,
    Hit,
    Dbl,
    StdMinusSpl,
    StdMinusHit,
}

impl Quantity {
    fn parse(s: &str) -> Option<Quantity> {
        match s {
            "std" => Some(Quantity::Std),
            "hit" => Some(Quantity::Hit),
            "dbl" => Some(Quantity::Dbl),
            "std_minus_spl" => Some(Quantity::StdMinusSpl),
            "std_minus_hit" => Some(Quantity::StdMinusHit),
            _ => None,
        }
    }
}

/// An extra linear factor in a formula's denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearFactor {
    None,
    AcesPlusDeuces,
    DeucesPlusTreys,
}

/// One closed-form evaluator over the post-deal composition (the player's two
/// cards and the dealer upcard are excluded from the unseen shoe).
#[derive(Clone, Debug)]
pub struct SituationFormula {
    pub quantity: Quantity,
    pub hand: Hand,
    pub upcard: u8,
    pub numerator: TrivariatePolynomial,
    pub linear_factor: LinearFactor,
    /// Denominator falling factorial (n + offset)_length over n = n1+n2+n3.
    pub falling_offset: i64,
    pub falling_length: u32,
}

impl SituationFormula {
    /// Whether `(n1,n2,n3)` lies in the formula's validity domain.
    pub fn in_domain(&self, n1: u32, n2: u32, n3: u32) -> bool {
        let n = (n1 + n2 + n3) as i64;
        let linear_ok = match self.linear_factor {
            LinearFactor::None => true,
            LinearFactor::AcesPlusDeuces => n1 + n2 >= 1,
            LinearFactor::DeucesPlusTreys => n2 + n3 >= 1,
        };
        linear_ok && n + self.falling_offset >= self.falling_length as i64
    }

    pub fn denominator(&self, n1: u32, n2: u32, n3: u32) -> i128 {
        let n = (n1 + n2 + n3) as i64;
        let linear: i128 = match self.linear_factor {
            LinearFactor::None => 1,
            LinearFactor::AcesPlusDeuces => (n1 + n2) as i128,
            LinearFactor::DeucesPlusTreys => (n2 + n3) as i128,
        };
        linear * falling_factorial(n + self.falling_offset, self.falling_length)
    }

    /// Exact numerator/denominator pair, denominator positive in-domain.
    pub fn eval_parts(&self, n1: u32, n2: u32, n3: u32) -> (i128, i128) {
        (
            self.numerator.eval_i128(n1 as i64, n2 as i64, n3 as i64),
            self.denominator(n1, n2, n3),
        )
    }
}

/// Exact value of a situation formula, or a domain error.
pub fn situation_value(formula: &SituationFormula, n1: u32, n2: u32, n3: u32) -> Result<Rational> {
    if !formula.in_domain(n1, n2, n3) {
        return Err(Error::Domain(format!(
            "({n1},{n2},{n3}) outside the validity domain of {:?} {:?} vs {}",
            formula.quantity, formula.hand, formula.upcard
        )));
    }
    let (num, den) = formula.eval_parts(n1, n2, n3);
    Ok(ratio_i128(num, den))
}

/// All checked-in situation formulas.
pub fn situation_formulas() -> &'static [SituationFormula] {
    static FORMULAS: OnceLock<Vec<SituationFormula>> = OnceLock::new();
    FORMULAS.get_or_init(|| {
        let mut out = Vec::new();
        let mut current: Option<SituationFormula> = None;
        for line in SITUATION_FORMULA_DATA.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("FORMULA ") {
                if let Some(f) = current.take() {
                    out.push(f);
                }
                let mut it = rest.split_whitespace();
                let quantity = Quantity::parse(it.next().unwrap()).expect("known quantity");
                let hand_parts: Vec<u32> = it
                    .next()
                    .unwrap()
                    .split(',')
                    .map(|x| x.parse().unwrap())
                    .collect();
                let upcard: u8 = it.next().unwrap().parse().unwrap();
                let linear_factor = match it.next().unwrap() {
                    "NONE" => LinearFactor::None,
                    "A12" => LinearFactor::AcesPlusDeuces,
                    "A23" => LinearFactor::DeucesPlusTreys,
                    other => panic!("unknown linear factor {other}"),
                };
                let falling_offset: i64 = it.next().unwrap().parse().unwrap();
                let falling_length: u32 = it.next().unwrap().parse().unwrap();
                current = Some(SituationFormula {
                    quantity,
                    hand: Hand::new(hand_parts[0], hand_parts[1], hand_parts[2]),
                    upcard,
                    numerator: TrivariatePolynomial::from_terms(vec![]),
                    linear_factor,
                    falling_offset,
                    falling_length,
                });
            } else if let Some(f) = current.as_mut() {
                let terms: Vec<_> = parse_coefficient_lines(line).collect();
                let mut all = f.numerator.terms().to_vec();
                all.extend(terms);
                f.numerator = TrivariatePolynomial::from_terms(all);
            }
        }
        if let Some(f) = current.take() {
            out.push(f);
        }
        out
    })
}

pub fn find_formula(
    quantity: Quantity,
    hand: &Hand,
    upcard: u8,
) -> Option<&'static SituationFormula> {
    situation_formulas()
        .iter()
        .find(|f| f.quantity == quantity && f.hand == *hand && f.upcard == upcard)
}

/// Fit a degree-(8,8,8) polynomial to `value(n1,n2,n3) * (n1+n2+n3)_8` on the
/// tensor grid {8..16}^3 by successive exact Lagrange interpolation.
/// Regenerates the checked-in table from solver output to catch
/// transcription errors.
#[allow(clippy::needless_range_loop)] // symmetric indexing across the three axes
pub fn fit_expectation_polynomial(
    mut value: impl FnMut(u32, u32, u32) -> Rational,
) -> TrivariatePolynomial {
    const BASE: u32 = 8;
    const POINTS: usize = 9;
    let xs: Vec<i64> = (0..POINTS).map(|t| (BASE + t as u32) as i64).collect();
    let mut grid = vec![vec![vec![Rational::zero(); POINTS]; POINTS]; POINTS];
    for a in 0..POINTS {
        for b in 0..POINTS {
            for c in 0..POINTS {
                let (n1, n2, n3) = (xs[a] as u32, xs[b] as u32, xs[c] as u32);
                let n = (n1 + n2 + n3) as i64;
                grid[a][b][c] = value(n1, n2, n3)
                    * Rational::from_integer(BigInt::from(falling_factorial(n, 8)));
            }
        }
    }
    // Interpolate along each axis in turn, replacing values by coefficients.
    for b in 0..POINTS {
        for c in 0..POINTS {
            let column: Vec<Rational> = (0..POINTS).map(|a| grid[a][b][c].clone()).collect();
            for (a, v) in lagrange_coefficients(&xs, &column).into_iter().enumerate() {
                grid[a][b][c] = v;
            }
        }
    }
    for a in 0..POINTS {
        for c in 0..POINTS {
            let column: Vec<Rational> = (0..POINTS).map(|b| grid[a][b][c].clone()).collect();
            for (b, v) in lagrange_coefficients(&xs, &column).into_iter().enumerate() {
                grid[a][b][c] = v;
            }
        }
    }
    let mut terms: BTreeMap<(u8, u8, u8), BigInt> = BTreeMap::new();
    for a in 0..POINTS {
        for b in 0..POINTS {
            let column: Vec<Rational> = (0..POINTS).map(|c| grid[a][b][c].clone()).collect();
            for (c, v) in lagrange_coefficients(&xs, &column).into_iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                assert!(
                    v.is_integer(),
                    "non-integer fitted coefficient at {a},{b},{c}: {v}"
                );
                terms.insert((a as u8, b as u8, c as u8), v.to_integer());
            }
        }
    }
    TrivariatePolynomial::from_terms(
        terms
            .into_iter()
            .map(|((i, j, k), c)| {
                let c_i64 = i64::try_from(&c).expect("fitted coefficient fits i64");
                (i, j, k, c_i64)
            })
            .collect(),
    )
}

/// Monomial-basis coefficients of the unique interpolant through the points.
fn lagrange_coefficients(xs: &[i64], ys: &[Rational]) -> Vec<Rational> {
    let n = xs.len();
    let mut coeffs = vec![Rational::zero(); n];
    for (i, y) in ys.iter().enumerate() {
        if y.is_zero() {
            continue;
        }
        let mut num = vec![Rational::one()];
        let mut denom = Rational::one();
        for (j, &xj) in xs.iter().enumerate() {
            if j == i {
                continue;
            }
            num = poly_mul_rat(&num, &[ratio_i128(-(xj as i128), 1), Rational::one()]);
            denom *= ratio_i128((xs[i] - xj) as i128, 1);
        }
        let scale = y / denom;
        for (e, c) in num.into_iter().enumerate() {
            coeffs[e] += c * &scale;
        }
    }
    coeffs
}

fn poly_mul_rat(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// (N-1) * EoR limits along the snackjack-proportioned packs (2d,2d,4d) as
/// the shoe grows without bound, one value per removed denomination.
pub fn infinite_shoe_scaled_eor() -> [Rational; 3] {
    let poly = expectation_polynomial();
    let q_full = shifted_falling(0); // (8d)_8 as a polynomial in d
    let q_removed = shifted_falling(1); // (8d-1)_8
    let p_full = poly.substitute_linear([(2, 0), (2, 0), (4, 0)]);
    [1usize, 2, 3].map(|i| {
        let mut forms = [(2i64, 0i64), (2, 0), (4, 0)];
        forms[i - 1].1 = -1;
        let p_removed = poly.substitute_linear(forms);
        // (8d - 1) [ P_removed * Q_full - P_full * Q_removed ] / (Q_full * Q_removed)
        let diff = poly_sub(
            &poly_mul(&p_removed, &q_full),
            &poly_mul(&p_full, &q_removed),
        );
        let num = poly_mul(&[BigInt::from(-1), BigInt::from(8)], &diff);
        let den = poly_mul(&q_full, &q_removed);
        let deg = den.len() - 1;
        assert!(num.len() <= deg + 1, "scaled EoR does not converge");
        let lead_num = num.get(deg).cloned().unwrap_or_else(BigInt::zero);
        Rational::new(lead_num, den[deg].clone())
    })
}

fn shifted_falling(shift: i64) -> Vec<BigInt> {
    // prod over t = 0..7 of (8d - shift - t), univariate in d
    let mut acc = vec![BigInt::one()];
    for t in 0..8 {
        acc = poly_mul(&acc, &[BigInt::from(-(shift + t)), BigInt::from(8)]);
    }
    acc
}

fn poly_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let len = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    while out.len() > 1 && out.last().unwrap().is_zero() {
        out.pop();
    }
    out
}

/// Integrity check of the checked-in coefficient table.
pub fn expectation_poly_checksum() -> String {
    use sha2::{Digest, Sha256};
    let mut hasher = Sha256::new();
    hasher.update(EXPECTATION_POLY_DATA.as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}
