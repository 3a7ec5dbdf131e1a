//! Chern classes and Chern characters of bundles on `Hilbⁿ(ℂ²)`, written in
//! `Λⁿ ≅ H*(Hilbⁿ(ℂ²))`.
//!
//! Two independent routes are provided:
//!
//! * localization: a sum over the torus fixed points `ξ_λ`, `λ ⊢ n`, of the
//!   fibre weights combined with the irreducible characters `χ^λ`;
//! * generating series: closed exponential formulas summed over all `n`.
//!
//! The tangent bundle has the hook lengths of `λ` and their negatives as
//! weights at `ξ_λ`. For the tautological bundle `Bₙ` the Chern character is
//! given by Lehn's operator applied to `p₁ⁿ/n!`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::Value;
use thiserror::Error;

use crate::characters::character_table;
use crate::identities::catalan;
use crate::number::{self, Rational};
use crate::partitions::{partitions_of, Partition};
use crate::symfun::{SymFunc, SymFuncError, Truncation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("weights at {partition} have {found} entries, expected rank {rank}")]
    RankMismatch {
        partition: Partition,
        rank: usize,
        found: usize,
    },
    #[error("weight table is for n = {table}, requested n = {requested}")]
    PointCountMismatch { table: usize, requested: usize },
    #[error("weight table has no entry for the fixed point {0}")]
    MissingFixedPoint(Partition),
    #[error("weight table key {key} is not a partition of {n}")]
    UnexpectedKey { key: String, n: usize },
    #[error("malformed weight table: {0}")]
    Malformed(String),
    #[error(transparent)]
    SymFunc(#[from] SymFuncError),
}

/// Integer torus weights of a rank-`r` linearized bundle at each fixed point
/// of `Hilbⁿ(ℂ²)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAssignment {
    n: usize,
    rank: usize,
    weights: BTreeMap<Partition, Vec<BigInt>>,
}

impl WeightAssignment {
    /// Checks that every partition of `n` has exactly `rank` weights and that
    /// no other key is present.
    pub fn new(
        n: usize,
        rank: usize,
        weights: BTreeMap<Partition, Vec<BigInt>>,
    ) -> Result<Self, HilbertError> {
        if let Some(key) = weights.keys().find(|k| k.weight() != n) {
            return Err(HilbertError::UnexpectedKey {
                key: key.to_string(),
                n,
            });
        }
        for lambda in partitions_of(n) {
            let w = weights
                .get(&lambda)
                .ok_or_else(|| HilbertError::MissingFixedPoint(lambda.clone()))?;
            if w.len() != rank {
                return Err(HilbertError::RankMismatch {
                    partition: lambda,
                    rank,
                    found: w.len(),
                });
            }
        }
        Ok(WeightAssignment { n, rank, weights })
    }

    /// The tangent bundle: `{h(x), -h(x) : x ∈ D(λ)}`, rank `2n`.
    pub fn tangent(n: usize) -> Self {
        let weights = partitions_of(n)
            .into_iter()
            .map(|lambda| {
                let w = lambda
                    .hook_lengths()
                    .into_iter()
                    .flat_map(|h| [BigInt::from(h), -BigInt::from(h)])
                    .collect();
                (lambda, w)
            })
            .collect();
        WeightAssignment {
            n,
            rank: 2 * n,
            weights,
        }
    }

    /// Reads `{"3": [..], "2,1": [..], "1,1,1": [..]}`. `n` is taken from the
    /// keys and the rank from the first entry; both are then validated.
    pub fn from_json_str(text: &str) -> Result<Self, HilbertError> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| HilbertError::Malformed(e.to_string()))?;
        let object = value
            .as_object()
            .ok_or_else(|| HilbertError::Malformed("expected a JSON object".into()))?;
        let mut weights = BTreeMap::new();
        for (key, entry) in object {
            let lambda: Partition = key.parse().map_err(|_| HilbertError::UnexpectedKey {
                key: key.clone(),
                n: 0,
            })?;
            let list = entry
                .as_array()
                .ok_or_else(|| HilbertError::Malformed(format!("{key:?}: expected an array")))?;
            let w = list
                .iter()
                .map(|x| match x {
                    Value::Number(num) => num.to_string().parse::<BigInt>().ok(),
                    _ => None,
                })
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| HilbertError::Malformed(format!("{key:?}: weights must be integers")))?;
            if weights.insert(lambda, w).is_some() {
                return Err(HilbertError::Malformed(format!("duplicate fixed point {key:?}")));
            }
        }
        let (first, rank) = weights
            .iter()
            .next()
            .map(|(lambda, w)| (lambda.weight(), w.len()))
            .ok_or_else(|| HilbertError::Malformed("empty weight table".into()))?;
        WeightAssignment::new(first, rank, weights)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weights(&self, lambda: &Partition) -> &[BigInt] {
        &self.weights[lambda]
    }

    fn check_points(&self, n: usize) -> Result<(), HilbertError> {
        if self.n == n {
            Ok(())
        } else {
            Err(HilbertError::PointCountMismatch {
                table: self.n,
                requested: n,
            })
        }
    }
}

/// Coefficients `e_0, …, e_r` of `∏ (1 + f t)`.
fn elementary_symmetric(weights: &[BigInt]) -> Vec<BigInt> {
    let mut e = vec![BigInt::one()];
    for f in weights {
        e.push(BigInt::zero());
        for k in (1..e.len()).rev() {
            let lower = &e[k - 1] * f;
            e[k] += lower;
        }
    }
    e
}

fn power_sum(weights: &[BigInt], k: usize) -> BigInt {
    weights.iter().map(|f| f.pow(k as u32)).sum()
}

/// `Σ_λ (1/h(λ)) · fixed_point_factor(λ) · Σ_{μ ⊢ n, l(μ) = n - k} z_μ⁻¹ χ^λ_μ p_μ`,
/// the λ-terms evaluated in parallel and summed in partition order.
fn localize<F>(n: usize, k: usize, fixed_point_factor: F) -> SymFunc
where
    F: Fn(&Partition) -> Rational + Sync,
{
    if k >= n.max(1) {
        return SymFunc::zero();
    }
    let table = character_table(n);
    let columns: Vec<(usize, &Partition, Rational)> = table
        .partitions()
        .iter()
        .enumerate()
        .filter(|(_, mu)| mu.len() == n - k)
        .map(|(j, mu)| (j, mu, number::from_biguint(&mu.z_factor()).recip()))
        .collect();
    let terms: Vec<SymFunc> = table
        .partitions()
        .par_iter()
        .map(|lambda| {
            let factor = fixed_point_factor(lambda);
            if factor.is_zero() {
                return SymFunc::zero();
            }
            let scale = factor / number::from_biguint(&lambda.hook_product());
            let row = table.row(lambda);
            SymFunc::from_terms(
                columns
                    .iter()
                    .map(|(j, mu, zinv)| ((*mu).clone(), &scale * zinv * number::int(row[*j]))),
            )
        })
        .collect();
    terms.into_iter().sum()
}

/// `c_k(F) = Σ_λ (1/h(λ)) e_k(f^λ) Σ_{l(μ)=n-k} z_μ⁻¹ χ^λ_μ p_μ`.
///
/// Zero when no `μ ⊢ n` has length `n - k`, in particular for `k ≥ n ≥ 1`.
pub fn equivariant_chern_class(
    n: usize,
    k: usize,
    weights: &WeightAssignment,
) -> Result<SymFunc, HilbertError> {
    weights.check_points(n)?;
    Ok(localize(n, k, |lambda| {
        let e = elementary_symmetric(weights.weights(lambda));
        e.get(k)
            .map(|x| Rational::from_integer(x.clone()))
            .unwrap_or_else(Rational::zero)
    }))
}

/// `ch_k(F) = (1/k!) Σ_λ (1/h(λ)) Σ_i (f_i^λ)^k Σ_{l(μ)=n-k} z_μ⁻¹ χ^λ_μ p_μ`.
pub fn equivariant_chern_char(
    n: usize,
    k: usize,
    weights: &WeightAssignment,
) -> Result<SymFunc, HilbertError> {
    weights.check_points(n)?;
    let inv_fact = number::inv_factorial(k);
    Ok(localize(n, k, |lambda| {
        Rational::from_integer(power_sum(weights.weights(lambda), k)) * &inv_fact
    }))
}

/// `c(F) = Σ_{k=0}^{n-1} c_k(F)`.
pub fn equivariant_total_chern_class(weights: &WeightAssignment) -> Result<SymFunc, HilbertError> {
    let n = weights.n();
    (0..n.max(1))
        .map(|k| equivariant_chern_class(n, k, weights))
        .sum()
}

/// `ch(F) = Σ_{k=0}^{n-1} ch_k(F)`.
pub fn equivariant_total_chern_char(weights: &WeightAssignment) -> Result<SymFunc, HilbertError> {
    let n = weights.n();
    (0..n.max(1))
        .map(|k| equivariant_chern_char(n, k, weights))
        .sum()
}

fn exp_of(exponent: SymFunc, t: Truncation) -> SymFunc {
    exponent
        .exp_series(t)
        .expect("exponent has no constant term")
}

/// The exponent `Σ_{2k+1 ≤ N} (-1)^k C_k p_{2k+1}/(2k+1)` of the tangent Chern series.
pub fn tangent_chern_exponent(t: Truncation) -> SymFunc {
    (0..)
        .map(|k| 2 * k + 1)
        .take_while(|&m| m <= t.max_weight)
        .map(|m| {
            let k = (m - 1) / 2;
            let c = number::sign(k) * number::from_biguint(&catalan(k)) / number::int(m as i64);
            SymFunc::p(m).scale(&c)
        })
        .sum()
}

/// `Σ_n c(T Hilbⁿ(ℂ²)) = exp(Σ_{k≥0} (-1)^k C_k p_{2k+1}/(2k+1))`.
pub fn series_c_tangent(t: Truncation) -> SymFunc {
    exp_of(tangent_chern_exponent(t), t)
}

/// `Σ_n ch(T Hilbⁿ(ℂ²)) = 2 e^{p₁} Σ_{k≥0} p_{2k+1}/(2k+1)!`.
pub fn series_ch_tangent(t: Truncation) -> SymFunc {
    let odd: SymFunc = (1..=t.max_weight)
        .step_by(2)
        .map(|m| SymFunc::p(m).scale(&(number::int(2) * number::inv_factorial(m))))
        .sum();
    exp_of(SymFunc::p(1), t).mul(&odd, t)
}

/// `Σ_n c(Bₙ) = exp(Σ_{m≥1} (-1)^{m-1} p_m/m)`.
pub fn series_c_taut(t: Truncation) -> SymFunc {
    let exponent: SymFunc = (1..=t.max_weight)
        .map(|m| SymFunc::p(m).scale(&(number::sign(m - 1) / number::int(m as i64))))
        .sum();
    exp_of(exponent, t)
}

/// `Σ_n ch(Bₙ) = e^{p₁} Σ_{k≥1} (-1)^{k-1} p_k/k!`.
pub fn series_ch_taut(t: Truncation) -> SymFunc {
    let alternating: SymFunc = (1..=t.max_weight)
        .map(|k| SymFunc::p(k).scale(&(number::sign(k - 1) * number::inv_factorial(k))))
        .sum();
    exp_of(SymFunc::p(1), t).mul(&alternating, t)
}

fn p1_power(n: usize) -> SymFunc {
    SymFunc::monomial(Partition::ones(n), Rational::one())
}

/// `ch(Bₙ) = Σ_{k=1}^n (-1)^{k-1}/(k!(n-k)!) p₁^{n-k} p_k`; zero for `n = 0`.
pub fn ch_taut_direct(n: usize) -> SymFunc {
    (1..=n)
        .map(|k| {
            let c = number::sign(k - 1) * number::inv_factorial(k) * number::inv_factorial(n - k);
            SymFunc::monomial(Partition::ones(n - k).merge(&Partition::single(k)), c)
        })
        .sum()
}

/// `ch(Bₙ) = 𝒟(p₁ⁿ/n!)`.
pub fn ch_taut_lehn(n: usize) -> SymFunc {
    p1_power(n).scale(&number::inv_factorial(n)).d_operator()
}

/// `c_{n-1}(T Hilbⁿ(ℂ²))`: zero for even `n`, `(-1)^k C_k p_{2k+1}/(2k+1)` for `n = 2k+1`.
pub fn top_chern_tangent(n: usize) -> SymFunc {
    assert!(n >= 1, "top class needs n ≥ 1");
    if n % 2 == 0 {
        return SymFunc::zero();
    }
    let k = (n - 1) / 2;
    let c = number::sign(k) * number::from_biguint(&catalan(k)) / number::int(n as i64);
    SymFunc::p(n).scale(&c)
}

/// `ch_{n-1}(T Hilbⁿ(ℂ²))`: zero for even `n`, `2 p_{2k+1}/(2k+1)!` for `n = 2k+1`.
pub fn top_chern_char_tangent(n: usize) -> SymFunc {
    assert!(n >= 1, "top class needs n ≥ 1");
    if n % 2 == 0 {
        return SymFunc::zero();
    }
    SymFunc::p(n).scale(&(number::int(2) * number::inv_factorial(n)))
}

/// `ch_k(F*) = (-1)^k ch_k(F)`: each `p_μ` picks up `(-1)^{|μ| - l(μ)}`.
pub fn dualize(f: &SymFunc) -> Result<SymFunc, HilbertError> {
    if !f.is_zero() && f.homogeneous_weight().is_none() {
        return Err(SymFuncError::NotHomogeneous.into());
    }
    Ok(SymFunc::from_terms(
        f.terms()
            .map(|(mu, c)| (mu.clone(), number::sign(mu.degree()) * c)),
    ))
}

/// `ch(T Hilbⁿ) = ch(Bₙ) + ch(Bₙ*)`, compared exactly in weight `n`.
pub fn verify_t_equals_b_plus_bdual(n: usize) -> bool {
    let tangent = series_ch_tangent(Truncation::new(n)).weight_component(n);
    let b = ch_taut_direct(n);
    let dual = dualize(&b).expect("ch(B_n) is homogeneous");
    tangent == &b + &dual
}
