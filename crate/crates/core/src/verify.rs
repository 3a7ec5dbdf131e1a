//! Verification suites: every check compares two exact computations and
//! reports pass/fail. The `all` suite is the release gate.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::character_table;
use crate::hilbert::{
    ch_taut_direct, ch_taut_lehn, equivariant_chern_char, equivariant_chern_class,
    equivariant_total_chern_class, series_c_tangent, series_ch_taut, series_ch_tangent,
    tangent_chern_exponent, top_chern_char_tangent, top_chern_tangent,
    verify_t_equals_b_plus_bdual, WeightAssignment,
};
use crate::identities::{
    stirling2, top_class_coefficient, verify_hypergeometric_lemma, verify_partial_sums,
    verify_pk_identity, verify_stirling_lemma,
};
use crate::number::{self, binomial, factorial, Rational};
use crate::partitions::{partitions_of, Partition};
use crate::symfun::{SymFunc, Truncation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }

    fn from_outcome(name: impl Into<String>, outcome: Result<String, String>) -> Self {
        match outcome {
            Ok(detail) => CheckResult::new(name, true, detail),
            Err(detail) => CheckResult::new(name, false, detail),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Identities,
    Crosscheck,
    Decomposition,
    Properties,
    Performance,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Crosscheck => "crosscheck",
            Suite::Decomposition => "decomposition",
            Suite::Properties => "properties",
            Suite::Performance => "performance",
            Suite::All => "all",
        }
    }
}

/// Ranges for every suite. The defaults are the release ranges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Class/character cross-check, decomposition, vanishing, character properties.
    pub max_n: usize,
    /// Top classes on `Hilb^{2k+1}` for `k ≤ max_top_k`.
    pub max_top_k: usize,
    pub max_taut_n: usize,
    pub max_pk_k: usize,
    pub max_hypergeometric_k: usize,
    pub max_partial_sums_k: usize,
    pub max_stirling_lemma_n: usize,
    /// `S(n+1, n) = binom(n+1, 2)` range.
    pub max_stirling_pair_n: usize,
    pub max_hook_sum_n: usize,
    pub max_round_trip_weight: usize,
    pub max_structure_weight: usize,
    pub performance_n: usize,
    pub performance_limit: Duration,
    pub total_limit: Duration,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 8,
            max_top_k: 4,
            max_taut_n: 10,
            max_pk_k: 6,
            max_hypergeometric_k: 5,
            max_partial_sums_k: 7,
            max_stirling_lemma_n: 15,
            max_stirling_pair_n: 12,
            max_hook_sum_n: 10,
            max_round_trip_weight: 8,
            max_structure_weight: 9,
            performance_n: 12,
            performance_limit: Duration::from_secs(60),
            total_limit: Duration::from_secs(300),
        }
    }
}

impl VerifyConfig {
    /// Uses `max_n` for every range indexed by the number of points.
    pub fn set_max_n(&mut self, max_n: usize) {
        self.max_n = max_n;
        self.max_top_k = max_n.saturating_sub(1) / 2;
        self.max_taut_n = max_n;
        self.max_hook_sum_n = max_n;
        self.max_round_trip_weight = max_n;
        self.max_structure_weight = max_n;
    }

    /// Uses `max_k` for the identity ranges; the Stirling ranges follow as
    /// `2 max_k + 1`.
    pub fn set_max_k(&mut self, max_k: usize) {
        self.max_pk_k = max_k;
        self.max_hypergeometric_k = max_k;
        self.max_partial_sums_k = max_k;
        self.max_stirling_lemma_n = 2 * max_k + 1;
        self.max_stirling_pair_n = 2 * max_k + 1;
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> SuiteReport {
    let results = match suite {
        Suite::Identities => identities_checks(config),
        Suite::Crosscheck => crosscheck_checks(config),
        Suite::Decomposition => decomposition_checks(config),
        Suite::Properties => property_checks(config),
        Suite::Performance => performance_checks(config),
        Suite::All => {
            let start = Instant::now();
            let mut all = Vec::new();
            for sub in [
                Suite::Crosscheck,
                Suite::Decomposition,
                Suite::Identities,
                Suite::Properties,
                Suite::Performance,
            ] {
                all.extend(prefixed(sub, run_suite(sub, config).results));
            }
            let elapsed = start.elapsed();
            all.push(CheckResult::new(
                "performance/all suites",
                elapsed < config.total_limit,
                format!("limit {} s", config.total_limit.as_secs()),
            ));
            all
        }
    };
    SuiteReport {
        suite: suite.name().to_string(),
        results,
    }
}

fn prefixed(suite: Suite, results: Vec<CheckResult>) -> Vec<CheckResult> {
    results
        .into_iter()
        .map(|mut r| {
            r.name = format!("{}/{}", suite.name(), r.name);
            r
        })
        .collect()
}

fn compare(expected: &SymFunc, got: &SymFunc, what: &str) -> Result<(), String> {
    if expected == got {
        Ok(())
    } else {
        Err(format!("{what}: expected {expected}, got {got}"))
    }
}

// ---------------------------------------------------------------- crosscheck

fn crosscheck_checks(config: &VerifyConfig) -> Vec<CheckResult> {
    let class: Vec<CheckResult> = (1..=config.max_n)
        .into_par_iter()
        .map(|n| CheckResult::from_outcome(format!("chern class n={n}"), cross_class(n)))
        .collect();
    let character: Vec<CheckResult> = (1..=config.max_n)
        .into_par_iter()
        .map(|n| CheckResult::from_outcome(format!("chern character n={n}"), cross_character(n)))
        .collect();
    let top_odd: Vec<CheckResult> = (0..=config.max_top_k)
        .into_par_iter()
        .map(|k| {
            let n = 2 * k + 1;
            CheckResult::from_outcome(format!("top classes n={n}"), top_classes(n))
        })
        .collect();
    let top_even: Vec<CheckResult> = (1..=config.max_n / 2)
        .into_par_iter()
        .map(|half| {
            let n = 2 * half;
            CheckResult::from_outcome(format!("top classes n={n}"), top_classes(n))
        })
        .collect();
    let taut: Vec<CheckResult> = (0..=config.max_taut_n)
        .into_par_iter()
        .map(|n| CheckResult::from_outcome(format!("tautological character n={n}"), taut_triple(n)))
        .collect();
    [class, character, top_odd, top_even, taut].concat()
}

/// Localization against the generating series, every degree `k = 0..=n`.
fn cross_class(n: usize) -> Result<String, String> {
    let weights = WeightAssignment::tangent(n);
    let series = series_c_tangent(Truncation::new(n)).weight_component(n);
    for k in 0..=n {
        let local = equivariant_chern_class(n, k, &weights).map_err(|e| e.to_string())?;
        compare(&series.degree_component(k), &local, &format!("c_{k}"))?;
    }
    Ok(format!("c_k agree for k = 0..={n}"))
}

fn cross_character(n: usize) -> Result<String, String> {
    let weights = WeightAssignment::tangent(n);
    let series = series_ch_tangent(Truncation::new(n)).weight_component(n);
    for k in 0..=n {
        let local = equivariant_chern_char(n, k, &weights).map_err(|e| e.to_string())?;
        compare(&series.degree_component(k), &local, &format!("ch_{k}"))?;
    }
    Ok(format!("ch_k agree for k = 0..={n}"))
}

fn top_classes(n: usize) -> Result<String, String> {
    let weights = WeightAssignment::tangent(n);
    let c = equivariant_chern_class(n, n - 1, &weights).map_err(|e| e.to_string())?;
    let ch = equivariant_chern_char(n, n - 1, &weights).map_err(|e| e.to_string())?;
    compare(&top_chern_tangent(n), &c, "c_{n-1}")?;
    compare(&top_chern_char_tangent(n), &ch, "ch_{n-1}")?;
    Ok(format!("c_{} = {c}, ch_{} = {ch}", n - 1, n - 1))
}

fn taut_triple(n: usize) -> Result<String, String> {
    let lehn = ch_taut_lehn(n);
    let direct = ch_taut_direct(n);
    let series = series_ch_taut(Truncation::new(n)).weight_component(n);
    compare(&direct, &lehn, "Lehn operator vs closed form")?;
    compare(&direct, &series, "series vs closed form")?;
    Ok("operator, closed form and series agree".into())
}

// ------------------------------------------------------------- decomposition

fn decomposition_checks(config: &VerifyConfig) -> Vec<CheckResult> {
    (0..=config.max_n)
        .into_par_iter()
        .map(|n| {
            let pass = verify_t_equals_b_plus_bdual(n);
            CheckResult::new(
                format!("T = B + B* n={n}"),
                pass,
                if pass { "ch(T) = ch(B) + ch(B*)" } else { "mismatch in weight n" },
            )
        })
        .collect()
}

// ---------------------------------------------------------------- identities

fn identities_checks(config: &VerifyConfig) -> Vec<CheckResult> {
    let bool_check = |name: String, pass: bool| {
        CheckResult::new(name, pass, if pass { "exact identity holds" } else { "identity fails" })
    };
    let mut out: Vec<CheckResult> = (0..=config.max_pk_k)
        .into_par_iter()
        .map(|k| bool_check(format!("P_k factorization k={k}"), verify_pk_identity(k)))
        .collect();
    out.extend(
        (0..=config.max_pk_k)
            .into_par_iter()
            .map(|k| {
                let n = 2 * k + 1;
                let got = top_class_coefficient(k) / number::int(n as i64);
                let expected = top_chern_tangent(n).coeff(&Partition::single(n));
                CheckResult::new(
                    format!("top class extraction k={k}"),
                    got == expected,
                    format!("expected {expected}, got {got}"),
                )
            })
            .collect::<Vec<_>>(),
    );
    out.extend(
        (0..=config.max_hypergeometric_k)
            .into_par_iter()
            .map(|k| bool_check(format!("hypergeometric lemma k={k}"), verify_hypergeometric_lemma(k)))
            .collect::<Vec<_>>(),
    );
    out.extend(
        (1..=config.max_partial_sums_k)
            .into_par_iter()
            .map(|k| bool_check(format!("partial sums k={k}"), verify_partial_sums(k)))
            .collect::<Vec<_>>(),
    );
    out.extend(
        (0..=config.max_stirling_lemma_n)
            .into_par_iter()
            .map(|n| bool_check(format!("Stirling lemma n={n}"), verify_stirling_lemma(n)))
            .collect::<Vec<_>>(),
    );
    out.extend(
        (0..=config.max_stirling_pair_n)
            .into_par_iter()
            .map(|n| {
                let s = stirling2(n + 1, n).expect("n ≤ n + 1");
                let expected = binomial(n + 1, 2);
                CheckResult::new(
                    format!("S(n+1,n) n={n}"),
                    s == expected,
                    format!("S = {s}, binom = {expected}"),
                )
            })
            .collect::<Vec<_>>(),
    );
    out
}

// ---------------------------------------------------------------- properties

fn property_checks(config: &VerifyConfig) -> Vec<CheckResult> {
    let mut out: Vec<CheckResult> = (0..=config.max_n)
        .into_par_iter()
        .map(|n| CheckResult::from_outcome(format!("orthonormality n={n}"), orthonormality(n)))
        .collect();
    out.extend(
        (0..=config.max_n)
            .into_par_iter()
            .map(|n| CheckResult::from_outcome(format!("dimensions n={n}"), dimensions(n)))
            .collect::<Vec<_>>(),
    );
    out.extend(
        (0..=config.max_hook_sum_n)
            .into_par_iter()
            .map(|n| CheckResult::from_outcome(format!("inverse square hooks n={n}"), hook_sum(n)))
            .collect::<Vec<_>>(),
    );
    out.push(CheckResult::from_outcome(
        format!("exp/log round trips weight={}", config.max_round_trip_weight),
        round_trips(config.max_round_trip_weight),
    ));
    out.extend(
        (1..=config.max_n)
            .into_par_iter()
            .map(|n| CheckResult::from_outcome(format!("odd vanishing n={n}"), odd_vanishing(n)))
            .collect::<Vec<_>>(),
    );
    out.push(CheckResult::from_outcome(
        format!("log c(T) single odd parts weight={}", config.max_structure_weight),
        log_chern_structure(config.max_structure_weight),
    ));
    out.push(CheckResult::from_outcome(
        format!("exp(-p1) ch(T) single odd parts weight={}", config.max_structure_weight),
        character_structure(config.max_structure_weight),
    ));
    out
}

fn orthonormality(n: usize) -> Result<String, String> {
    let table = character_table(n);
    let parts = table.partitions();
    let zinv: Vec<Rational> = parts
        .iter()
        .map(|mu| number::from_biguint(&mu.z_factor()).recip())
        .collect();
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i..] {
            let inner: Rational = table
                .row(a)
                .iter()
                .zip(table.row(b))
                .zip(&zinv)
                .map(|((&x, &y), z)| z * number::int(x * y))
                .sum();
            let expected = if a == b { Rational::one() } else { Rational::zero() };
            if inner != expected {
                return Err(format!("<χ^{a}, χ^{b}> = {inner}"));
            }
        }
    }
    Ok(format!("{} irreducible characters", parts.len()))
}

fn dimensions(n: usize) -> Result<String, String> {
    let table = character_table(n);
    let nf = factorial(n);
    for lambda in table.partitions() {
        let dim = table.value(lambda, &Partition::ones(n));
        let expected = &nf / lambda.hook_product();
        if num_bigint::BigInt::from(dim) != num_bigint::BigInt::from(expected.clone()) {
            return Err(format!("χ^{lambda}(1) = {dim}, n!/h = {expected}"));
        }
    }
    Ok("χ^λ(1) = n!/h(λ)".into())
}

fn hook_sum(n: usize) -> Result<String, String> {
    let total: Rational = partitions_of(n)
        .iter()
        .map(|lambda| {
            let h = number::from_biguint(&lambda.hook_product());
            (&h * &h).recip()
        })
        .sum();
    let expected = number::inv_factorial(n);
    if total == expected {
        Ok(format!("sum = {total}"))
    } else {
        Err(format!("sum = {total}, expected {expected}"))
    }
}

/// Every `p_μ` with `1 ≤ |μ| ≤ N`, plus a few mixed inputs, survives `log ∘ exp`.
fn round_trips(max_weight: usize) -> Result<String, String> {
    let t = Truncation::new(max_weight);
    let mut inputs: Vec<SymFunc> = (1..=max_weight)
        .flat_map(partitions_of)
        .map(|mu| SymFunc::monomial(mu, Rational::one()))
        .collect();
    inputs.push(tangent_chern_exponent(t));
    inputs.push(
        SymFunc::p(1) - SymFunc::p(3).scale(&number::rat(1, 3)) + SymFunc::p(5).scale(&number::rat(2, 5)),
    );
    inputs.push(SymFunc::from_terms([
        (Partition::from_unsorted(vec![2, 1]), number::rat(-3, 7)),
        (Partition::single(2), number::rat(5, 2)),
        (Partition::ones(3), number::rat(1, 9)),
        (Partition::from_unsorted(vec![4, 4]), number::int(-11)),
    ]));
    let count = inputs.len();
    inputs.into_par_iter().try_for_each(|f| {
        let back = f
            .exp_series(t)
            .and_then(|e| e.log_series(t))
            .map_err(|e| e.to_string())?;
        compare(&f.truncate(t), &back, "log(exp f)")
    })?;
    Ok(format!("{count} inputs"))
}

fn odd_vanishing(n: usize) -> Result<String, String> {
    let weights = WeightAssignment::tangent(n);
    for k in (1..=n + 1).filter(|&k| k % 2 == 1 || k >= n) {
        let c = equivariant_chern_class(n, k, &weights).map_err(|e| e.to_string())?;
        if !c.is_zero() {
            return Err(format!("c_{k} = {c}"));
        }
    }
    Ok("c_k = 0 for odd k and k ≥ n".into())
}

fn single_odd_part(mu: &Partition) -> bool {
    mu.len() == 1 && mu.parts()[0] % 2 == 1
}

fn log_chern_structure(max_weight: usize) -> Result<String, String> {
    let t = Truncation::new(max_weight);
    let log = series_c_tangent(t).log_series(t).map_err(|e| e.to_string())?;
    if let Some((mu, c)) = log.terms().find(|(mu, _)| !single_odd_part(mu)) {
        return Err(format!("term {c}*p[{mu}]"));
    }
    Ok(format!("{} single odd parts", log.len()))
}

fn character_structure(max_weight: usize) -> Result<String, String> {
    let t = Truncation::new(max_weight);
    let damped = (-SymFunc::p(1))
        .exp_series(t)
        .map_err(|e| e.to_string())?
        .mul(&series_ch_tangent(t), t);
    if let Some((mu, c)) = damped.terms().find(|(mu, _)| !single_odd_part(mu)) {
        return Err(format!("term {c}*p[{mu}]"));
    }
    Ok(format!("{} single odd parts", damped.len()))
}

// --------------------------------------------------------------- performance

fn performance_checks(config: &VerifyConfig) -> Vec<CheckResult> {
    let n = config.performance_n;
    let start = Instant::now();
    let total = equivariant_total_chern_class(&WeightAssignment::tangent(n));
    let elapsed = start.elapsed();
    let pass = total.is_ok() && elapsed < config.performance_limit;
    vec![CheckResult::new(
        format!("total chern class n={n}"),
        pass,
        format!("limit {} s", config.performance_limit.as_secs()),
    )]
}
