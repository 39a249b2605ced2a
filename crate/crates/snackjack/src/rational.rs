//! Exact rational arithmetic helpers.
//!
//! Every probability and expectation in this crate is a [`Rational`]
//! (arbitrary-precision, always canonical). Floating point appears only
//! where a square root is unavoidable (correlations, normal approximations),
//! and decimal output is formatted from the exact value at print time.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// `r1/r2` from machine integers.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio_i128(num: i128, den: i128) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial coefficient C(n, k) as a big integer; 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Falling factorial (x)_k = x (x-1) ... (x-k+1).
pub fn falling_factorial(x: i64, k: u32) -> i128 {
    let mut acc: i128 = 1;
    for i in 0..k as i64 {
        acc *= (x - i) as i128;
    }
    acc
}

/// Parse "p/q", an integer, or a plain decimal like "0.25" into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in {s:?}"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in {s:?}"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let digits = frac.len() as u32;
        let whole_ok = whole.is_empty() || whole == "-" || whole.parse::<BigInt>().is_ok();
        if !whole_ok || frac.parse::<u64>().is_err() && frac.parse::<BigInt>().is_err() {
            return Err(format!("bad decimal {s:?}"));
        }
        let neg = whole.starts_with('-');
        let w: BigInt = if whole.is_empty() || whole == "-" {
            BigInt::zero()
        } else {
            whole.parse().unwrap()
        };
        let f: BigInt = frac.parse().map_err(|_| format!("bad decimal {s:?}"))?;
        let scale = BigInt::from(10u32).pow(digits);
        let mag = w.abs() * &scale + f;
        let signed = if neg { -mag } else { mag };
        return Ok(Rational::new(signed, scale));
    }
    let n: BigInt = s.parse().map_err(|_| format!("bad rational {s:?}"))?;
    Ok(Rational::from_integer(n))
}

/// Format with `sig` significant digits, rounding half away from zero.
pub fn to_decimal_signif(q: &Rational, sig: usize) -> String {
    assert!(sig >= 1);
    if q.is_zero() {
        return "0".to_string();
    }
    // Find the decimal exponent e with 10^e <= |q| < 10^(e+1).
    let ten = BigInt::from(10u32);
    let mut e: i64 = 0;
    let abs = q.abs();
    let one = Rational::one();
    if abs >= one {
        let mut p = Rational::from_integer(ten.clone());
        while abs >= p {
            p *= Rational::from_integer(ten.clone());
            e += 1;
        }
    } else {
        let mut p = Rational::one();
        loop {
            p /= Rational::from_integer(ten.clone());
            e -= 1;
            if abs >= p {
                break;
            }
        }
    }
    // Scale so that round(|q| * 10^(sig-1-e)) has exactly `sig` digits.
    let shift = sig as i64 - 1 - e;
    let scaled = scale_round_half_away(&abs, shift);
    let mut digits = scaled.to_string();
    // Rounding may carry to one extra digit (9.99 -> 100); the carry always
    // ends in a zero, which we drop to keep `sig` digits.
    if digits.len() > sig {
        digits.truncate(sig);
        e += 1;
    }
    let point = e + 1; // digits before the decimal point
    let neg = q.is_negative();
    while (digits.len() as i64) < point {
        digits.push('0');
    }
    let body = if point <= 0 {
        let zeros: String = std::iter::repeat_n('0', (-point) as usize).collect();
        format!("0.{zeros}{digits}")
    } else if (point as usize) >= digits.len() {
        digits
    } else {
        format!(
            "{}.{}",
            &digits[..point as usize],
            &digits[point as usize..]
        )
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Format with exactly `places` digits after the decimal point.
pub fn to_decimal_fixed(q: &Rational, places: usize) -> String {
    let neg = q.is_negative();
    let scaled = scale_round_half_away(&q.abs(), places as i64);
    let mut digits = scaled.to_string();
    while digits.len() <= places {
        digits.insert(0, '0');
    }
    let split = digits.len() - places;
    let body = if places == 0 {
        digits
    } else {
        format!("{}.{}", &digits[..split], &digits[split..])
    };
    if neg && scaled != BigInt::zero() {
        format!("-{body}")
    } else {
        body
    }
}

/// round(q * 10^shift) for nonnegative q, half away from zero.
fn scale_round_half_away(q: &Rational, shift: i64) -> BigInt {
    let ten = BigInt::from(10u32);
    let (num, den) = if shift >= 0 {
        (q.numer() * ten.pow(shift as u32), q.denom().clone())
    } else {
        (q.numer().clone(), q.denom() * ten.pow((-shift) as u32))
    };
    let (quot, rem) = num_integer::Integer::div_rem(&num, &den);
    if &rem * 2 >= den {
        quot + 1
    } else {
        quot
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Denormal-range or huge values: fall back through a scaled division.
        let num = q.numer();
        let den = q.denom();
        match (num.sign(), den.sign()) {
            (Sign::NoSign, _) => 0.0,
            _ => {
                let scale = BigInt::from(10u32).pow(30);
                let scaled = (num * &scale) / den;
                scaled.to_f64().unwrap_or(f64::NAN) / 1e30
            }
        }
    })
}
