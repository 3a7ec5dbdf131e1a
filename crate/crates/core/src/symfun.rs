//! The ring of symmetric functions `Λ = ℚ[p₁, p₂, …]` in the power-sum basis.
//!
//! A [`SymFunc`] is a finitely supported map from partitions to exact
//! rationals; the key `μ` stands for the monomial `p_μ = p_{μ₁}⋯p_{μ_l}` and
//! the empty partition keys the constant term. Each monomial carries two
//! gradings: conformal weight `|μ|` and cohomological degree `|μ| - l(μ)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::number::{self, Rational};
use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymFuncError {
    #[error("exp needs a zero constant term, got {0}")]
    NonzeroConstant(String),
    #[error("log needs constant term 1, got {0}")]
    ConstantNotOne(String),
    #[error("expected a function homogeneous in conformal weight")]
    NotHomogeneous,
    #[error("malformed symmetric function JSON: {0}")]
    Json(String),
}

/// Series operations drop every term of conformal weight above `max_weight`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Truncation {
    pub max_weight: usize,
}

impl Truncation {
    pub fn new(max_weight: usize) -> Self {
        Truncation { max_weight }
    }

    fn keeps(&self, weight: usize) -> bool {
        weight <= self.max_weight
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        SymFunc::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        SymFunc::monomial(Partition::empty(), c)
    }

    /// `c · p_μ`.
    pub fn monomial(mu: Partition, c: Rational) -> Self {
        let mut f = SymFunc::zero();
        f.add_term(mu, c);
        f
    }

    /// The single power sum `p_r` (`r ≥ 1`).
    pub fn p(r: usize) -> Self {
        assert!(r > 0, "p_0 is not a generator");
        SymFunc::monomial(Partition::single(r), Rational::one())
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut f = SymFunc::zero();
        for (mu, c) in terms {
            f.add_term(mu, c);
        }
        f
    }

    /// Adds `c · p_μ` in place, pruning a coefficient that cancels to zero.
    pub fn add_term(&mut self, mu: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in rendering order: by weight, then lexicographically on parts.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mu: &Partition) -> Rational {
        self.terms.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Partition::empty())
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }

    /// `Some(n)` when every term has conformal weight `n`; the zero function is
    /// homogeneous of any weight and reports `None`.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        let mut weights = self.terms.keys().map(Partition::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(mu, x)| (mu.clone(), x * c))
                .collect(),
        }
    }

    fn filter_terms(&self, keep: impl Fn(&Partition) -> bool) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(mu, _)| keep(mu))
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect(),
        }
    }

    /// Part of conformal weight `n`.
    pub fn weight_component(&self, n: usize) -> SymFunc {
        self.filter_terms(|mu| mu.weight() == n)
    }

    /// Part of cohomological degree `d`.
    pub fn degree_component(&self, d: usize) -> SymFunc {
        self.filter_terms(|mu| mu.degree() == d)
    }

    pub fn truncate(&self, t: Truncation) -> SymFunc {
        self.filter_terms(|mu| t.keeps(mu.weight()))
    }

    /// Keeps only terms whose partition satisfies `keep`.
    pub fn retain(&self, keep: impl Fn(&Partition) -> bool) -> SymFunc {
        self.filter_terms(keep)
    }

    /// Product with terms above `t.max_weight` dropped.
    pub fn mul(&self, other: &SymFunc, t: Truncation) -> SymFunc {
        let mut out = SymFunc::zero();
        for (a, x) in &self.terms {
            let wa = a.weight();
            if !t.keeps(wa) {
                continue;
            }
            for (b, y) in &other.terms {
                if t.keeps(wa + b.weight()) {
                    out.add_term(a.merge(b), x * y);
                }
            }
        }
        out
    }

    /// Untruncated product.
    pub fn mul_exact(&self, other: &SymFunc) -> SymFunc {
        let bound = self.max_weight().unwrap_or(0) + other.max_weight().unwrap_or(0);
        self.mul(other, Truncation::new(bound))
    }

    pub fn pow(&self, k: usize, t: Truncation) -> SymFunc {
        let mut acc = SymFunc::one().truncate(t);
        for _ in 0..k {
            acc = acc.mul(self, t);
        }
        acc
    }

    /// `Σ_{k≥0} fᵏ/k!`, truncated. Each factor raises the minimal weight, so
    /// at most `max_weight + 1` terms of the series contribute.
    pub fn exp_series(&self, t: Truncation) -> Result<SymFunc, SymFuncError> {
        let c = self.constant_term();
        if !c.is_zero() {
            return Err(SymFuncError::NonzeroConstant(number::to_plain_string(&c)));
        }
        let f = self.truncate(t);
        let mut sum = SymFunc::one().truncate(t);
        let mut power = sum.clone();
        for k in 1..=t.max_weight {
            power = power.mul(&f, t).scale(&number::int(k as i64).recip());
            if power.is_zero() {
                break;
            }
            sum += &power;
        }
        Ok(sum)
    }

    /// `log(1 + g) = Σ_{k≥1} (-1)^{k-1} gᵏ/k`, truncated.
    pub fn log_series(&self, t: Truncation) -> Result<SymFunc, SymFuncError> {
        let c = self.constant_term();
        if !c.is_one() {
            return Err(SymFuncError::ConstantNotOne(number::to_plain_string(&c)));
        }
        let g = self.truncate(t) - SymFunc::one();
        let mut sum = SymFunc::zero();
        let mut power = SymFunc::one().truncate(t);
        for k in 1..=t.max_weight {
            power = power.mul(&g, t);
            if power.is_zero() {
                break;
            }
            sum += &power.scale(&number::rat(if k % 2 == 1 { 1 } else { -1 }, k as i64));
        }
        Ok(sum)
    }

    /// `∂f/∂p_r`.
    pub fn partial_derivative(&self, r: usize) -> SymFunc {
        let mut out = SymFunc::zero();
        for (mu, c) in &self.terms {
            let m = mu.multiplicity(r);
            if m > 0 {
                let rest = mu.remove_part(r).expect("multiplicity is positive");
                out.add_term(rest, c * number::int(m as i64));
            }
        }
        out
    }

    /// Lehn's operator in its developed form
    /// `Σ_{k≥1} (-1)^{k-1}/k! Σ_{n₁…n_k} n₁⋯n_k p_{n₁+⋯+n_k} ∂_{p_{n₁}}⋯∂_{p_{n_k}}`.
    ///
    /// For each monomial the ordered `k`-fold derivatives are expanded one
    /// factor at a time while tracking the running index sum `n₁+⋯+n_k`; only
    /// `k ≤ l(μ)` can contribute.
    pub fn d_operator(&self) -> SymFunc {
        let mut out = SymFunc::zero();
        for (mu, c) in &self.terms {
            // (remaining monomial, n₁+⋯+n_j) -> accumulated n₁⋯n_j times the derivative multiplicities
            let mut layer: BTreeMap<(Partition, usize), Rational> = BTreeMap::new();
            layer.insert((mu.clone(), 0), c.clone());
            for k in 1..=mu.len() {
                let mut next: BTreeMap<(Partition, usize), Rational> = BTreeMap::new();
                for ((rest, index_sum), x) in &layer {
                    for (r, m) in rest.multiplicities() {
                        let reduced = rest.remove_part(r).expect("part is present");
                        let factor = number::int((r * m) as i64);
                        *next
                            .entry((reduced, index_sum + r))
                            .or_insert_with(Rational::zero) += x * factor;
                    }
                }
                let prefactor = number::sign(k - 1) * number::inv_factorial(k);
                for ((rest, index_sum), x) in &next {
                    let mono = rest.merge(&Partition::single(*index_sum));
                    out.add_term(mono, x * &prefactor);
                }
                layer = next;
            }
        }
        out
    }

    /// JSON array of `{"mu": [...], "coeff": "num/den"}` in rendering order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|(mu, c)| JsonTerm {
                mu: mu.parts().to_vec(),
                coeff: number::to_fraction_string(c),
            })
            .collect();
        serde_json::to_value(terms).expect("terms serialize")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<SymFunc, SymFuncError> {
        let terms: Vec<JsonTerm> = serde_json::from_value(value.clone())
            .map_err(|e| SymFuncError::Json(e.to_string()))?;
        let mut f = SymFunc::zero();
        for term in terms {
            let mu = Partition::new(term.mu).map_err(|e| SymFuncError::Json(e.to_string()))?;
            let c = number::parse_rational(&term.coeff)
                .ok_or_else(|| SymFuncError::Json(format!("bad coefficient {:?}", term.coeff)))?;
            f.add_term(mu, c);
        }
        Ok(f)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    mu: Vec<usize>,
    coeff: String,
}

impl fmt::Display for SymFunc {
    /// `1/6*p[1,1,1] - 1/3*p[3]`; a constant term prints as a bare number and
    /// the zero function as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (mu, c)) in self.terms.iter().enumerate() {
            let magnitude = number::to_plain_string(&c.abs());
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mu.is_empty() {
                f.write_str(&magnitude)?;
            } else {
                write!(f, "{magnitude}*p[{mu}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: &SymFunc) {
        for (mu, c) in &rhs.terms {
            self.add_term(mu.clone(), c.clone());
        }
    }
}

impl SubAssign<&SymFunc> for SymFunc {
    fn sub_assign(&mut self, rhs: &SymFunc) {
        for (mu, c) in &rhs.terms {
            self.add_term(mu.clone(), -c.clone());
        }
    }
}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;

    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SymFunc {
    type Output = SymFunc;

    fn add(mut self, rhs: SymFunc) -> SymFunc {
        self += &rhs;
        self
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;

    fn sub(mut self, rhs: SymFunc) -> SymFunc {
        self -= &rhs;
        self
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().map(|(mu, c)| (mu.clone(), -c)).collect(),
        }
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        -&self
    }
}

impl Mul<&Rational> for &SymFunc {
    type Output = SymFunc;

    fn mul(self, rhs: &Rational) -> SymFunc {
        self.scale(rhs)
    }
}

impl std::iter::Sum for SymFunc {
    fn sum<I: Iterator<Item = SymFunc>>(iter: I) -> SymFunc {
        iter.fold(SymFunc::zero(), |acc, f| acc + f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{binomial, from_biguint, int, inv_factorial, rat};
    use proptest::prelude::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mono(parts: &[usize], c: Rational) -> SymFunc {
        SymFunc::monomial(part(parts), c)
    }

    fn p1_pow(n: usize) -> SymFunc {
        mono(&vec![1; n], int(1))
    }

    const BIG: Truncation = Truncation { max_weight: 64 };

    #[test]
    fn add_and_scale() {
        assert!((&SymFunc::p(1) + &(-SymFunc::p(1))).is_zero());
        assert_eq!(SymFunc::p(2).scale(&rat(1, 2)), mono(&[2], rat(1, 2)));
        let s2 = &mono(&[1, 1], rat(1, 2)) + &mono(&[2], rat(1, 2));
        assert_eq!(s2.to_string(), "1/2*p[1,1] + 1/2*p[2]");
        assert!(SymFunc::p(3).scale(&int(0)).is_zero());
    }

    #[test]
    fn multiplication() {
        let p1 = SymFunc::p(1);
        let p2 = SymFunc::p(2);
        assert_eq!(p1.mul(&p1, BIG), p1_pow(2));
        assert_eq!(p2.mul(&SymFunc::p(3), BIG), mono(&[3, 2], int(1)));
        let lhs = (&p1 + &p2).mul(&(&p1 - &p2), BIG);
        assert_eq!(lhs, &p1_pow(2) - &mono(&[2, 2], int(1)));
        assert!(p2.mul(&SymFunc::p(3), Truncation::new(4)).is_zero());
    }

    #[test]
    fn components() {
        let f = SymFunc::one() + SymFunc::p(1) + SymFunc::p(3);
        assert_eq!(f.weight_component(3), SymFunc::p(3));
        let g = &mono(&[1, 1, 1], rat(1, 6)) - &mono(&[3], rat(1, 3));
        assert_eq!(g.degree_component(2), mono(&[3], rat(-1, 3)));
        for n in 0..6 {
            assert_eq!(p1_pow(n).degree_component(0), p1_pow(n));
        }
    }

    #[test]
    fn exp_examples() {
        let t = Truncation::new(8);
        assert_eq!(SymFunc::zero().exp_series(t).unwrap(), SymFunc::one());
        let e = SymFunc::p(1).exp_series(t).unwrap();
        for n in 0..=8 {
            assert_eq!(e.weight_component(n), p1_pow(n).scale(&inv_factorial(n)));
        }
        let f = &SymFunc::p(1) - &SymFunc::p(3).scale(&rat(1, 3));
        let e = f.exp_series(t).unwrap();
        assert_eq!(
            e.weight_component(3),
            &mono(&[1, 1, 1], rat(1, 6)) - &mono(&[3], rat(1, 3))
        );
        assert!(matches!(
            SymFunc::one().exp_series(t),
            Err(SymFuncError::NonzeroConstant(_))
        ));
    }

    #[test]
    fn log_examples() {
        assert!(SymFunc::one().log_series(Truncation::new(5)).unwrap().is_zero());
        let t6 = Truncation::new(6);
        let e = SymFunc::p(1).exp_series(t6).unwrap();
        assert_eq!(e.log_series(t6).unwrap(), SymFunc::p(1));
        let t7 = Truncation::new(7);
        let g = &(&SymFunc::p(1) - &SymFunc::p(3).scale(&rat(1, 3))) + &SymFunc::p(5).scale(&rat(2, 5));
        assert_eq!(g.exp_series(t7).unwrap().log_series(t7).unwrap(), g);
        assert!(matches!(
            SymFunc::p(1).log_series(t7),
            Err(SymFuncError::ConstantNotOne(_))
        ));
    }

    #[test]
    fn partial_derivatives() {
        assert_eq!(p1_pow(2).partial_derivative(1), SymFunc::p(1).scale(&int(2)));
        assert!(SymFunc::p(3).partial_derivative(1).is_zero());
        assert_eq!(
            mono(&[2, 2, 1], int(1)).partial_derivative(2),
            mono(&[2, 1], int(2))
        );
    }

    #[test]
    fn d_operator_examples() {
        assert_eq!(SymFunc::p(1).d_operator(), SymFunc::p(1));
        assert_eq!(
            p1_pow(2).d_operator(),
            &p1_pow(2).scale(&int(2)) - &SymFunc::p(2)
        );
        assert!(SymFunc::one().d_operator().is_zero());
    }

    // 𝒟(p₁ⁿ) = Σ_{k=1}^n (-1)^{k-1} C(n,k) p₁^{n-k} p_k
    #[test]
    fn d_operator_on_powers_of_p1() {
        for n in 1..=8 {
            let expected: SymFunc = (1..=n)
                .map(|k| {
                    let c = number::sign(k - 1) * from_biguint(&binomial(n, k));
                    p1_pow(n - k).mul_exact(&SymFunc::p(k)).scale(&c)
                })
                .sum();
            assert_eq!(p1_pow(n).d_operator(), expected, "n = {n}");
        }
    }

    // only the k = 1 term survives on a single p_r
    #[test]
    fn d_operator_on_single_power_sum() {
        for r in 1..6 {
            assert_eq!(SymFunc::p(r).d_operator(), SymFunc::p(r).scale(&int(r as i64)));
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(SymFunc::zero().to_string(), "0");
        assert_eq!(SymFunc::p(1).scale(&int(2)).to_string(), "2*p[1]");
        let f = &mono(&[1, 1, 1], rat(1, 6)) - &mono(&[3], rat(1, 3));
        assert_eq!(f.to_string(), "1/6*p[1,1,1] - 1/3*p[3]");
        assert_eq!((-SymFunc::p(3).scale(&rat(1, 3))).to_string(), "-1/3*p[3]");
        let g = SymFunc::one() - SymFunc::p(2);
        assert_eq!(g.to_string(), "1 - 1*p[2]");
    }

    #[test]
    fn json_shape() {
        let f = &mono(&[1, 1], int(1)) - &mono(&[2], rat(1, 2));
        assert_eq!(
            f.to_json(),
            serde_json::json!([
                {"mu": [1, 1], "coeff": "1/1"},
                {"mu": [2], "coeff": "-1/2"}
            ])
        );
        assert_eq!(SymFunc::from_json(&f.to_json()).unwrap(), f);
        assert!(SymFunc::from_json(&serde_json::json!([{"mu": [1, 2], "coeff": "1"}])).is_err());
    }

    fn arb_symfunc() -> impl Strategy<Value = SymFunc> {
        let term = (
            prop::collection::vec(1usize..=4, 0..=3),
            -5i64..=5,
            1i64..=4,
        );
        prop::collection::vec(term, 0..5).prop_map(|terms| {
            SymFunc::from_terms(
                terms
                    .into_iter()
                    .map(|(parts, n, d)| (Partition::from_unsorted(parts), rat(n, d))),
            )
        })
    }

    fn arb_no_constant() -> impl Strategy<Value = SymFunc> {
        arb_symfunc().prop_map(|f| f.retain(|mu| !mu.is_empty()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(f in arb_symfunc(), g in arb_symfunc(), h in arb_symfunc()) {
            let t = Truncation::new(8);
            prop_assert_eq!(f.mul(&g, t), g.mul(&f, t));
            prop_assert_eq!(f.mul(&g, t).mul(&h, t), f.mul(&g.mul(&h, t), t));
            prop_assert_eq!(f.mul(&(&g + &h), t), &f.mul(&g, t) + &f.mul(&h, t));
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(f.mul(&SymFunc::one(), t), f.truncate(t));
        }

        #[test]
        fn product_respects_weight_grading(f in arb_symfunc(), g in arb_symfunc(), n in 0usize..=8) {
            let t = Truncation::new(8);
            let expected: SymFunc = (0..=n)
                .map(|a| f.weight_component(a).mul(&g.weight_component(n - a), t))
                .sum();
            prop_assert_eq!(f.mul(&g, t).weight_component(n), expected);
        }

        #[test]
        fn exp_log_round_trip(f in arb_no_constant()) {
            let t = Truncation::new(8);
            let e = f.exp_series(t).unwrap();
            prop_assert_eq!(e.log_series(t).unwrap(), f.truncate(t));
        }

        #[test]
        fn json_round_trip(f in arb_symfunc()) {
            prop_assert_eq!(SymFunc::from_json(&f.to_json()).unwrap(), f);
        }
    }
}
