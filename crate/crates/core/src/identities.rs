//! Exact checks of the combinatorial identities behind the closed forms for
//! the top Chern class and top Chern character of `T Hilbⁿ(ℂ²)`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::number::{self, binomial, factorial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("S({n}, {k}) needs k ≤ n")]
    StirlingRange { n: usize, k: usize },
}

/// Sparse polynomial in one or two variables with rational coefficients,
/// keyed on exponent vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl RationalPolynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars == 1 || nvars == 2, "one or two variables");
        RationalPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = RationalPolynomial::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        RationalPolynomial::constant(nvars, Rational::one())
    }

    /// The variable with index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        RationalPolynomial::monomial(nvars, i, 1, Rational::one())
    }

    /// `c · x_i^e`.
    pub fn monomial(nvars: usize, i: usize, e: u32, c: Rational) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = e;
        let mut p = RationalPolynomial::zero(nvars);
        p.add_term(exps, c);
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = RationalPolynomial::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(RationalPolynomial::one(self.nvars), |acc, _| &acc * self)
    }

    /// `self + c`.
    pub fn shift(&self, c: &Rational) -> Self {
        self + &RationalPolynomial::constant(self.nvars, c.clone())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn neg(self) -> RationalPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = RationalPolynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names: &[&str] = if self.nvars == 1 { &["t"] } else { &["a", "b"] };
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    write!(f, "*{}^{k}", names[i])?;
                }
            }
        }
        Ok(())
    }
}

/// `C_k = binom(2k, k)/(k+1)`.
pub fn catalan(k: usize) -> BigUint {
    binomial(2 * k, k) / (k + 1)
}

/// `(a)_r = a(a+1)⋯(a+r-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &RationalPolynomial, r: usize) -> RationalPolynomial {
    (0..r).fold(RationalPolynomial::one(a.nvars()), |acc, i| {
        &acc * &a.shift(&number::int(i as i64))
    })
}

/// `∏_{i=1}^m (1 - i² t²)` in the single variable `t`.
fn square_product(m: usize) -> RationalPolynomial {
    (1..=m).fold(RationalPolynomial::one(1), |acc, i| {
        let factor = &RationalPolynomial::one(1)
            - &RationalPolynomial::monomial(1, 0, 2, number::int((i * i) as i64));
        &acc * &factor
    })
}

/// `P_k = Σ_{s=0}^{2k} (-1)^s/(s!(2k-s)!) ∏_{i=1}^s (1-i²t²) ∏_{j=1}^{2k-s} (1-j²t²)`.
pub fn p_polynomial(k: usize) -> RationalPolynomial {
    let m = 2 * k;
    let products: Vec<RationalPolynomial> = (0..=m).map(square_product).collect();
    (0..=m).fold(RationalPolynomial::zero(1), |acc, s| {
        let c = number::sign(s) * number::inv_factorial(s) * number::inv_factorial(m - s);
        &acc + &(&products[s] * &products[m - s]).scale(&c)
    })
}

/// `(-1)^k (2k+1) C_k t^{2k} ∏_{i=1}^k (1 - i² t²)`.
pub fn p_polynomial_closed_form(k: usize) -> RationalPolynomial {
    let c = number::sign(k) * number::int((2 * k + 1) as i64) * number::from_biguint(&catalan(k));
    &RationalPolynomial::monomial(1, 0, 2 * k as u32, c) * &square_product(k)
}

pub fn verify_pk_identity(k: usize) -> bool {
    p_polynomial(k) == p_polynomial_closed_form(k)
}

/// `Coeff(t^{2k}, (1 - (2k+1)² t²)/(2k+1) · P_k)`, the coefficient of
/// `p_{2k+1}/(2k+1)` in the top Chern class of `T Hilb^{2k+1}(ℂ²)`.
pub fn top_class_coefficient(k: usize) -> Rational {
    let n = (2 * k + 1) as i64;
    let factor = (&RationalPolynomial::one(1)
        - &RationalPolynomial::monomial(1, 0, 2, number::int(n * n)))
        .scale(&number::rat(1, n));
    (&factor * &p_polynomial(k)).coeff(&[2 * k as u32])
}

/// Checks, as polynomials in `a` and `b`,
/// `k! (a+b)_k Σ_{s=0}^{2k} (-1)^s (a)_s(b)_s/s! · (a)_{2k-s}(b)_{2k-s}/(2k-s)! = (a+b)_{2k} (a)_k (b)_k`.
pub fn verify_hypergeometric_lemma(k: usize) -> bool {
    let a = RationalPolynomial::var(2, 0);
    let b = RationalPolynomial::var(2, 1);
    let m = 2 * k;
    let pa: Vec<RationalPolynomial> = (0..=m).map(|r| pochhammer(&a, r)).collect();
    let pb: Vec<RationalPolynomial> = (0..=m).map(|r| pochhammer(&b, r)).collect();
    let lhs_sum = (0..=m).fold(RationalPolynomial::zero(2), |acc, s| {
        let c = number::sign(s) * number::inv_factorial(s) * number::inv_factorial(m - s);
        let term = &(&pa[s] * &pb[s]) * &(&pa[m - s] * &pb[m - s]);
        &acc + &term.scale(&c)
    });
    let sum_ab = &a + &b;
    let lhs = (&pochhammer(&sum_ab, k) * &lhs_sum).scale(&number::from_biguint(&factorial(k)));
    let rhs = &(&pochhammer(&sum_ab, m) * &pa[k]) * &pb[k];
    lhs == rhs
}

/// `S(n, k) = (1/k!) Σ_{j=0}^k (-1)^j binom(k, j) (k-j)^n`.
pub fn stirling2(n: usize, k: usize) -> Result<BigUint, IdentityError> {
    if k > n {
        return Err(IdentityError::StirlingRange { n, k });
    }
    let sum: BigInt = (0..=k)
        .map(|j| {
            let term = BigInt::from(binomial(k, j)) * BigInt::from(k - j).pow(n as u32);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    let value = sum / BigInt::from(factorial(k));
    Ok(value.to_biguint().expect("Stirling numbers are nonnegative"))
}

/// `Σ_{j=0}^n (-1)^{n-j} binom(n, j) j^{n+1}`.
fn alternating_power_sum(n: usize) -> BigInt {
    (0..=n)
        .map(|j| {
            let term = BigInt::from(binomial(n, j)) * BigInt::from(j).pow((n + 1) as u32);
            if (n - j) % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `Σ_{j=0}^n (-1)^{n-j} binom(n, j) j^{n+1} = binom(n+1, 2) n!`.
pub fn verify_stirling_lemma(n: usize) -> bool {
    alternating_power_sum(n) == BigInt::from(binomial(n + 1, 2) * factorial(n))
}

/// The sums over `s` that reduce the top Chern character to its closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSums {
    /// `Σ_s (-1)^s/(s!(2k-s)!)`
    pub plain: Rational,
    /// `Σ_s (-1)^s/(s!(2k-s)!) Σ_{i=1}^s i^{2k}`
    pub ascending: Rational,
    /// `Σ_s (-1)^s/(s!(2k-s)!) Σ_{j=1}^{2k-s} j^{2k}`
    pub descending: Rational,
    /// `(1/(2k·(2k)!)) Σ_{i=0}^{2k} (-1)^i binom(2k, i) i^{2k+1}`
    pub binomial_form: Rational,
}

pub fn partial_sums(k: usize) -> PartialSums {
    assert!(k >= 1, "partial sums need k ≥ 1");
    let m = 2 * k;
    let power_prefix: Vec<BigInt> = (0..=m)
        .scan(BigInt::zero(), |acc, i| {
            if i > 0 {
                *acc += BigInt::from(i).pow(m as u32);
            }
            Some(acc.clone())
        })
        .collect();
    let weight = |s: usize| number::sign(s) * number::inv_factorial(s) * number::inv_factorial(m - s);
    let plain = (0..=m).map(weight).sum();
    let ascending = (0..=m)
        .map(|s| weight(s) * Rational::from_integer(power_prefix[s].clone()))
        .sum();
    let descending = (0..=m)
        .map(|s| weight(s) * Rational::from_integer(power_prefix[m - s].clone()))
        .sum();
    // even m: (-1)^i = (-1)^{m-i}
    let binomial_form = Rational::from_integer(alternating_power_sum(m))
        / (number::int(m as i64) * number::from_biguint(&factorial(m)));
    PartialSums {
        plain,
        ascending,
        descending,
        binomial_form,
    }
}

/// The vanishing sum, both power sums equal to `(2k+1)/2`, and the
/// intermediate binomial form agreeing with them.
pub fn verify_partial_sums(k: usize) -> bool {
    let sums = partial_sums(k);
    let half = number::rat((2 * k + 1) as i64, 2);
    sums.plain.is_zero()
        && sums.ascending == half
        && sums.descending == half
        && sums.binomial_form == half
}

/// `β_k / p_{2k+1}` recomputed from the fixed-point sum over hooks:
/// `2 Σ_s (-1)^s/((2k+1) s!(2k-s)!) (Σ_{i≤s} i^{2k} + Σ_{j≤2k-s} j^{2k} + (2k+1)^{2k}) / (2k+1)!`.
pub fn top_character_coefficient(k: usize) -> Rational {
    let m = 2 * k;
    let n = m + 1;
    let power_prefix = |upto: usize| -> BigInt { (1..=upto).map(|i| BigInt::from(i).pow(m as u32)).sum() };
    let corner = BigInt::from(n).pow(m as u32);
    let inner: Rational = (0..=m)
        .map(|s| {
            let w = number::sign(s) * number::inv_factorial(s) * number::inv_factorial(m - s);
            w * Rational::from_integer(power_prefix(s) + power_prefix(m - s) + &corner)
        })
        .sum();
    number::int(2) * inner / number::int(n as i64) * number::inv_factorial(n)
}
