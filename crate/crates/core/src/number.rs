//! Exact rational helpers shared by every module.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_biguint(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `1 / n!`
pub fn inv_factorial(n: usize) -> Rational {
    from_biguint(&factorial(n)).recip()
}

/// `(-1)^k` as a rational.
pub fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Always `num/den`, denominator positive, even when it is 1.
pub fn to_fraction_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Text form used in rendered output: `2`, `-1/3`.
pub fn to_plain_string(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
